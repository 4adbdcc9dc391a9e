//! Exact realizations of Bethe subalgebras of the Yangian Y(gl2) on tensor products of
//! evaluation modules, together with the certificates that check their structure.

pub mod exactring;
pub mod yangrep;
pub mod bethe;
pub mod shapovalov;
pub mod unitary;
