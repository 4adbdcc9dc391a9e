//! Config documents and the compact flag syntax for factors, blocks and scalar lists.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use bethe_core::bethe::GridSpec;
use bethe_core::exactring::{parse_scalar, Scalar};
use bethe_core::shapovalov::DetMode;
use bethe_core::yangrep::FactorSpec;

use crate::commands::TestVector;
use crate::error::CliError;

/// Everything a config document may set; flags take precedence field by field.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub command: Option<String>,
    pub factors: Option<Vec<FactorSpec>>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub mode: Option<DetMode>,
    pub grid: Option<GridSpec>,
    pub tol: Option<f64>,
    pub blocks: Option<Vec<[String; 2]>>,
    pub c: Option<[String; 4]>,
    pub y: Option<[String; 3]>,
    pub grade: Option<usize>,
    pub vector: Option<TestVector>,
    pub csv: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }
}

pub fn scalar(text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|e| CliError::Parse(e.to_string()))
}

/// `"1, -2/3, 0"` → scalars.
pub fn scalar_list(text: &str) -> Result<Vec<Scalar>, CliError> {
    text.split(',').map(|t| scalar(t.trim())).collect()
}

pub fn scalar_array<const N: usize>(items: &[String]) -> Result<[Scalar; N], CliError> {
    if items.len() != N {
        return Err(CliError::Parse(format!("expected {N} numbers, got {}", items.len())));
    }
    let v: Vec<Scalar> = items.iter().map(|t| scalar(t)).collect::<Result<_, _>>()?;
    Ok(v.try_into().expect("length checked"))
}

/// Splits `"(1,0),M(1/2,3;4)"` into `("", "1,0")`, `("M", "1/2,3;4")`.
fn groups(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let bad = |why: &str| CliError::Parse(format!("cannot parse {text:?}: {why}"));
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| bad("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| bad("unbalanced parenthesis"))?;
        if close < open {
            return Err(bad("unbalanced parenthesis"));
        }
        let prefix = rest[..open].trim();
        if rest[open + 1..close].contains('(') {
            return Err(bad("nested parenthesis"));
        }
        out.push((prefix.to_string(), rest[open + 1..close].to_string()));
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(bad("trailing comma"));
            }
        } else if !rest.is_empty() {
            return Err(bad("expected ',' between entries"));
        }
    }
    if out.is_empty() {
        return Err(bad("empty list"));
    }
    Ok(out)
}

fn pair(body: &str) -> Result<(Scalar, Scalar), CliError> {
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Parse(format!("expected two numbers in ({body})")));
    }
    Ok((scalar(parts[0])?, scalar(parts[1])?))
}

/// Factor list: `(a,b)` finite irreducible, `M(a,b;N)` truncated Verma, `D(a,b;N)` its dual.
pub fn factor_list(text: &str) -> Result<Vec<FactorSpec>, CliError> {
    groups(text)?
        .into_iter()
        .map(|(prefix, body)| {
            let (weights, cutoff) = match body.split_once(';') {
                Some((w, c)) => {
                    let c: usize = c.trim().parse().map_err(|_| CliError::Parse(format!("bad cutoff in ({body})")))?;
                    (w, Some(c))
                }
                None => (body.as_str(), None),
            };
            let (a, b) = pair(weights)?;
            let f = match (prefix.as_str(), cutoff) {
                ("", None) => FactorSpec::irrep(a, b),
                ("M", Some(c)) => FactorSpec::verma(a, b, c),
                ("D", Some(c)) => FactorSpec::dual_verma(a, b, c),
                _ => return Err(CliError::Parse(format!("unknown factor {prefix}({body})"))),
            };
            f.validate().map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(f)
        })
        .collect()
}

/// Block list `(a1,b1),(a2,b2),…`.
pub fn block_list(text: &str) -> Result<Vec<(Scalar, Scalar)>, CliError> {
    groups(text)?
        .into_iter()
        .map(|(prefix, body)| {
            if !prefix.is_empty() {
                return Err(CliError::Parse(format!("unexpected {prefix:?} before ({body})")));
            }
            pair(&body)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bethe_core::exactring::{int, ratio};

    #[test]
    fn factors() {
        let f = factor_list("(1,0), (3,2)").unwrap();
        assert_eq!(f, vec![FactorSpec::irrep_int(1, 0), FactorSpec::irrep_int(3, 2)]);
        let v = factor_list("M(1/2,-3;4),D(0,1;2)").unwrap();
        assert_eq!(v[0], FactorSpec::verma(ratio(1, 2), int(-3), 4));
        assert_eq!(v[1], FactorSpec::dual_verma(int(0), int(1), 2));
        for bad in ["(1,0", "", "(1,0),", "(1)", "X(1,2;3)", "(1,0)(2,0)", "(0,1)"] {
            assert!(factor_list(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn blocks() {
        assert_eq!(block_list("(3,2),(1,0)").unwrap(), vec![(int(3), int(2)), (int(1), int(0))]);
        assert!(block_list("M(3,2;1)").is_err());
    }
}
