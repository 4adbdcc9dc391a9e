//! Eigenline flow of `B(diag(c1, c2))` over a grid in `RP^1`.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactring::scalar::{self, Scalar};
use crate::exactring::ScalarMatrix;
use crate::yangrep::Representation;

use super::algebra::{bethe_generator_matrices, exceptional_generator, GeneratorSet, GeneratorTag};
use super::point::BlowupPoint;
use super::spectrum::joint_spectrum_numeric;
use super::BetheError;

/// Grid of points `[c1:c2]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GridSpec {
    /// `[1:t]` for `count` evenly spaced `t` from `from` to `to` inclusive.
    Chart {
        count: usize,
        #[serde(with = "scalar::serde_text")]
        from: Scalar,
        #[serde(with = "scalar::serde_text")]
        to: Scalar,
    },
    /// `[cos θ : sin θ]` for `θ = kπ/count`, `k = 0..count`, rounded to rationals.
    Angle { count: usize, max_denominator: i64 },
    /// Explicit points `[c1, c2]`.
    Points {
        #[serde(with = "point_list")]
        points: Vec<(Scalar, Scalar)>,
    },
}

mod point_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[(Scalar, Scalar)], ser: S) -> Result<S::Ok, S::Error> {
        let t: Vec<[String; 2]> =
            v.iter().map(|(a, b)| [scalar::format_scalar(a), scalar::format_scalar(b)]).collect();
        t.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<(Scalar, Scalar)>, D::Error> {
        let t = Vec::<[String; 2]>::deserialize(de)?;
        t.iter()
            .map(|[a, b]| {
                Ok((
                    scalar::parse_scalar(a).map_err(serde::de::Error::custom)?,
                    scalar::parse_scalar(b).map_err(serde::de::Error::custom)?,
                ))
            })
            .collect()
    }
}

impl GridSpec {
    pub fn points(&self) -> Vec<(Scalar, Scalar)> {
        match self {
            GridSpec::Chart { count, from, to } => {
                let steps = count.saturating_sub(1).max(1);
                (0..*count)
                    .map(|k| {
                        let t = from + (to - from) * scalar::ratio(k as i64, steps as i64);
                        (Scalar::one(), t)
                    })
                    .collect()
            }
            GridSpec::Angle { count, max_denominator } => (0..*count)
                .map(|k| {
                    let theta = std::f64::consts::PI * k as f64 / *count as f64;
                    (
                        scalar::from_f64_approx(theta.cos(), *max_denominator),
                        scalar::from_f64_approx(theta.sin(), *max_denominator),
                    )
                })
                .collect(),
            GridSpec::Points { points } => points.clone(),
        }
    }
}

/// Generators whose eigenvalues label eigenlines in the flow table.
///
/// The first is the `sl2` element of the exceptional direction (always `½h` on the diagonal family);
/// the rest are the `u^{-2}`, `u^{-3}` coefficients of `tr C T(u)` when present.
pub fn tracked_generators(rep: &Representation<Scalar>, p: &BlowupPoint) -> Vec<(String, ScalarMatrix)> {
    let n = rep.module().num_factors();
    let mut out = vec![("sl2_part".to_string(), exceptional_generator(rep, &p.y()))];
    let trace = rep.trace(p.matrix());
    for r in 2..=n.min(3) {
        out.push((format!("trace_u{r}"), trace.coeff(r)));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanPoint {
    #[serde(with = "scalar::serde_text")]
    pub c1: Scalar,
    #[serde(with = "scalar::serde_text")]
    pub c2: Scalar,
    pub eigenline_count: usize,
    /// Eigenline count fell below the module dimension.
    pub covering_violation: bool,
    /// Nearest-neighbor matching to the previous point was ambiguous.
    pub tie: bool,
    /// Tracked eigenvalues per eigenline, in matched order.
    pub lines: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanTable {
    pub module_dim: usize,
    pub columns: Vec<String>,
    pub points: Vec<ScanPoint>,
}

impl ScanTable {
    pub fn min_eigenlines(&self) -> usize {
        self.points.iter().map(|p| p.eigenline_count).min().unwrap_or(0)
    }

    pub fn max_eigenlines(&self) -> usize {
        self.points.iter().map(|p| p.eigenline_count).max().unwrap_or(0)
    }

    pub fn flagged(&self) -> bool {
        self.points.iter().any(|p| p.covering_violation || p.tie)
    }

    /// CSV with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut header = vec!["grid_param_c1".to_string(), "grid_param_c2".into(), "eigenline_index".into()];
        header.extend(self.columns.iter().cloned());
        out.push_str(&header.join(","));
        out.push('\n');
        for p in &self.points {
            let (c1, c2) = (scalar::to_f64(&p.c1), scalar::to_f64(&p.c2));
            for (i, line) in p.lines.iter().enumerate() {
                let _ = write!(out, "{c1:.16e},{c2:.16e},{i}");
                for v in line {
                    let _ = write!(out, ",{v:.16e}");
                }
                out.push('\n');
            }
        }
        out
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Reorders `current` to follow `previous`; reports whether any assignment was ambiguous.
fn match_lines(previous: &[Vec<f64>], current: Vec<Vec<f64>>, tol: f64) -> (Vec<Vec<f64>>, bool) {
    if previous.len() != current.len() {
        return (current, true);
    }
    let mut tie = false;
    let mut used = vec![false; current.len()];
    let mut out = Vec::with_capacity(current.len());
    for prev in previous {
        let mut dists: Vec<(f64, usize)> =
            current.iter().enumerate().filter(|(j, _)| !used[*j]).map(|(j, c)| (distance(prev, c), j)).collect();
        dists.sort_by(|a, b| a.0.total_cmp(&b.0));
        if dists.len() > 1 && (dists[1].0 - dists[0].0).abs() <= tol * dists[0].0.max(1.0) {
            tie = true;
        }
        let j = dists[0].1;
        used[j] = true;
        out.push(current[j].clone());
    }
    // a line claimed by two predecessors would have shown up as a tie or an unused column
    (out, tie)
}

/// Numeric eigenline table over the grid. Scalar points use the exceptional direction `[1:0:0]`.
pub fn rp1_scan(rep: &Representation<Scalar>, grid: &[(Scalar, Scalar)], tol: f64) -> Result<ScanTable, BetheError> {
    let dim = rep.dim();
    let mut columns = Vec::new();
    let mut points: Vec<ScanPoint> = Vec::new();
    for (c1, c2) in grid {
        if c1.is_zero() && c2.is_zero() {
            return Err(BetheError::ZeroMatrix);
        }
        let p = BlowupPoint::diagonal(c1.clone(), c2.clone())?;
        let gens = bethe_generator_matrices(rep, &p);
        let tracked = tracked_generators(rep, &p);
        if columns.is_empty() {
            columns = tracked.iter().map(|(name, _)| name.clone()).collect();
        }
        // refine with the full generator set, then read off the tracked eigenvalues per line
        let mut all: Vec<(GeneratorTag, ScalarMatrix)> = gens.items().to_vec();
        all.extend(tracked.iter().map(|(_, m)| (GeneratorTag::Exceptional, m.clone())));
        let spectrum = joint_spectrum_numeric(&GeneratorSet::new(dim, all), tol);
        let offset = gens.len();
        let lines: Vec<Vec<f64>> = spectrum
            .spaces
            .iter()
            .filter(|s| s.basis.len() == 1)
            .map(|s| s.character[offset..].to_vec())
            .collect();
        let count = spectrum.eigenline_count();
        let (lines, tie) = match points.last() {
            Some(prev) => match_lines(&prev.lines, lines, 1e-6),
            None => {
                let mut l = lines;
                l.sort_by(|a, b| a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal));
                (l, false)
            }
        };
        points.push(ScanPoint {
            c1: c1.clone(),
            c2: c2.clone(),
            eigenline_count: count,
            covering_violation: count < dim,
            tie,
            lines,
        });
    }
    Ok(ScanTable { module_dim: dim, columns, points })
}
