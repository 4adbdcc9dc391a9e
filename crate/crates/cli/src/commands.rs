use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use bethe_core::bethe::{
    algebra_closure, bethe_generator_matrices, certify_generators, krylov_dim, mat2, rp1_scan, BlowupPoint,
    GridSpec, Verdict,
};
use bethe_core::exactring::scalar::format_scalar;
use bethe_core::exactring::{ratio, Scalar};
use bethe_core::shapovalov::{verify_shap_formula, DetMode};
use bethe_core::unitary::{module_gram, unitary_certificate, StringBlocks};
use bethe_core::yangrep::{qdet_centrality_check, rtt_check, FactorSpec, Module, Representation};

use crate::config::{block_list, factor_list, scalar_array, scalar_list, ConfigFile};
use crate::error::CliError;

pub const SCHEMA: u32 = 1;

/// A finished command: its JSON report, optional CSV, and exit code.
pub struct Outcome {
    pub report: Value,
    pub csv: Option<(PathBuf, String)>,
    pub exit: u8,
}

fn report(command: &str, config: &impl Serialize, body: Value) -> Value {
    let mut r = json!({ "schema": SCHEMA, "command": command, "config": config });
    if let (Value::Object(dst), Value::Object(src)) = (&mut r, body) {
        dst.extend(src);
    }
    r
}

fn factors(flag: Option<&str>, file: &ConfigFile) -> Result<Vec<FactorSpec>, CliError> {
    match (flag, &file.factors) {
        (Some(text), _) => factor_list(text),
        (None, Some(f)) => {
            for x in f {
                x.validate().map_err(|e| CliError::Parse(e.to_string()))?;
            }
            Ok(f.clone())
        }
        (None, None) => Err(CliError::Parse("no factors given".into())),
    }
}

fn numeric_rep(factors: &[FactorSpec]) -> Result<Representation<Scalar>, CliError> {
    Ok(Representation::new(Module::new(factors.to_vec())?))
}

fn texts(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

#[derive(Serialize)]
struct RttConfig {
    factors: Vec<FactorSpec>,
    samples: usize,
    seed: u64,
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let n: i64 = rng.gen_range(-40..=40);
        if n != 0 {
            return ratio(n, rng.gen_range(1..=7));
        }
    }
}

pub fn verify_rtt(flag_factors: Option<&str>, samples: Option<usize>, seed: Option<u64>, file: &ConfigFile) -> Result<Outcome, CliError> {
    let cfg = RttConfig {
        factors: factors(flag_factors, file)?,
        samples: samples.or(file.samples).unwrap_or(10),
        seed: seed.or(file.seed).unwrap_or(1),
    };
    if cfg.samples == 0 {
        return Err(CliError::Parse("samples must be positive".into()));
    }
    let rep = numeric_rep(&cfg.factors)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pairs = Vec::with_capacity(cfg.samples);
    while pairs.len() < cfg.samples {
        let (u, v) = (random_nonzero(&mut rng), random_nonzero(&mut rng));
        if u != v {
            pairs.push((u, v));
        }
    }
    let rtt = rtt_check(&rep, &pairs)?;
    let central = qdet_centrality_check(&rep);
    let ok = rtt.all_hold && central;
    let body = json!({ "rtt": rtt, "qdet_central": central, "ok": ok });
    Ok(Outcome { report: report("verify-rtt", &cfg, body), csv: None, exit: if ok { 0 } else { 4 } })
}

#[derive(Serialize)]
struct ShapConfig {
    n: usize,
    m: usize,
    mode: DetMode,
}

pub fn shapovalov(n: Option<usize>, m: Option<usize>, mode: Option<DetMode>, file: &ConfigFile) -> Result<Outcome, CliError> {
    let cfg = ShapConfig {
        n: n.or(file.n).ok_or_else(|| CliError::Parse("n is required".into()))?,
        m: m.or(file.m).ok_or_else(|| CliError::Parse("m is required".into()))?,
        mode: mode.or(file.mode).unwrap_or(DetMode::Symbolic),
    };
    let r = verify_shap_formula(cfg.n, cfg.m, cfg.mode)?;
    let ok = r.matches && r.degree_ok;
    let body = json!({ "result": r });
    Ok(Outcome { report: report("shapovalov", &cfg, body), csv: None, exit: if ok { 0 } else { 4 } })
}

#[derive(Serialize)]
struct ScanConfig {
    factors: Vec<FactorSpec>,
    grid: GridSpec,
    tol: f64,
    csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct PointCertificate {
    c: [String; 2],
    verdict: Verdict,
    closure_dim: usize,
    self_adjoint: bool,
}

pub fn spectrum_scan(flag_factors: Option<&str>, grid: Option<GridSpec>, tol: Option<f64>, csv: Option<PathBuf>, file: &ConfigFile) -> Result<Outcome, CliError> {
    let cfg = ScanConfig {
        factors: factors(flag_factors, file)?,
        grid: grid.or_else(|| file.grid.clone()).unwrap_or(GridSpec::Chart {
            count: 11,
            from: Scalar::from_integer((-4).into()),
            to: Scalar::from_integer(6.into()),
        }),
        tol: tol.or(file.tol).unwrap_or(1e-9),
        csv: csv.or_else(|| file.csv.clone()),
    };
    if !(cfg.tol > 0.0) {
        return Err(CliError::Parse("tol must be positive".into()));
    }
    let points = cfg.grid.points();
    if points.is_empty() {
        return Err(CliError::Parse("empty grid".into()));
    }
    let rep = numeric_rep(&cfg.factors)?;
    let mut warnings = Vec::new();
    let gram = match module_gram(rep.module()) {
        Ok(g) => Some(g),
        Err(e) => {
            let w = format!("module is not a tensor product of non-overlapping strings ({e}); exact certificates skipped");
            eprintln!("warning: {w}");
            warnings.push(w);
            None
        }
    };
    let mut certificates = Vec::new();
    let mut all_simple = gram.is_some();
    if let Some(g) = &gram {
        for (c1, c2) in &points {
            let p = BlowupPoint::diagonal(c1.clone(), c2.clone())?;
            let cert = certify_generators(&bethe_generator_matrices(&rep, &p), g)?;
            all_simple &= cert.verdict == Verdict::Simple;
            certificates.push(PointCertificate {
                c: [format_scalar(c1), format_scalar(c2)],
                verdict: cert.verdict,
                closure_dim: cert.closure_dim,
                self_adjoint: cert.self_adjoint,
            });
        }
    }
    let table = rp1_scan(&rep, &points, cfg.tol)?;
    let covered = table.points.iter().all(|p| p.eigenline_count == table.module_dim);
    let certified = all_simple;
    let ok = certified && covered;
    let body = json!({
        "module_dim": table.module_dim,
        "points": table.points.len(),
        "min_eigenlines": table.min_eigenlines(),
        "max_eigenlines": table.max_eigenlines(),
        "flagged": table.flagged(),
        "certified": certified,
        "certificates": if gram.is_some() { json!(certificates) } else { Value::Null },
        "warnings": warnings,
        "ok": ok,
    });
    let csv = cfg.csv.clone().map(|p| (p, table.to_csv()));
    Ok(Outcome { report: report("spectrum-scan", &cfg, body), csv, exit: if ok { 0 } else { 4 } })
}

#[derive(Serialize)]
struct UnitaryConfig {
    blocks: Vec<[String; 2]>,
}

pub fn unitary(flag_blocks: Option<&str>, file: &ConfigFile) -> Result<Outcome, CliError> {
    let blocks = match (flag_blocks, &file.blocks) {
        (Some(t), _) => block_list(t)?,
        (None, Some(b)) => b.iter().map(|p| scalar_array::<2>(p).map(|[a, b]| (a, b))).collect::<Result<_, _>>()?,
        (None, None) => return Err(CliError::Parse("no blocks given".into())),
    };
    let blocks = StringBlocks::new(blocks)?;
    let cfg = UnitaryConfig { blocks: blocks.as_text() };
    let cert = unitary_certificate(&blocks)?;
    let ok = cert.self_adjoint && cert.positive && cert.unitary && cert.tau_rank == cert.expected_rank;
    let mut body = serde_json::to_value(&cert).map_err(|e| CliError::Compute(e.to_string()))?;
    if let Value::Object(o) = &mut body {
        o.insert("ok".into(), json!(ok));
    }
    Ok(Outcome { report: report("unitary", &cfg, body), csv: None, exit: if ok { 0 } else { 4 } })
}

#[derive(Serialize)]
struct CyclicConfig {
    factors: Vec<FactorSpec>,
    c: [String; 4],
    y: Option<[String; 3]>,
    grade: Option<usize>,
    vector: TestVector,
    seed: u64,
}

/// Which vector [`cyclic`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestVector {
    HighestWeight,
    Generic,
}

pub fn cyclic(
    flag_factors: Option<&str>,
    c: Option<&str>,
    y: Option<&str>,
    grade: Option<usize>,
    vector: Option<TestVector>,
    file: &ConfigFile,
) -> Result<Outcome, CliError> {
    let factors = factors(flag_factors, file)?;
    let c: [Scalar; 4] = match (c, &file.c) {
        (Some(t), _) => scalar_array(&texts(&scalar_list(t)?))?,
        (None, Some(v)) => scalar_array(v)?,
        (None, None) => return Err(CliError::Parse("C is required".into())),
    };
    let y: Option<[Scalar; 3]> = match (y, &file.y) {
        (Some(t), _) => Some(scalar_array(&texts(&scalar_list(t)?))?),
        (None, Some(v)) => Some(scalar_array(v)?),
        (None, None) => None,
    };
    let rep = numeric_rep(&factors)?;
    let module = rep.module();
    let grade = grade.or(file.grade).or_else(|| factors.iter().filter_map(FactorSpec::cutoff).min());
    if let (Some(g), Some(min_cut)) = (grade, factors.iter().filter_map(FactorSpec::cutoff).min()) {
        if g > min_cut {
            return Err(CliError::Parse(format!("grade {g} exceeds the smallest cutoff {min_cut}")));
        }
    }
    let [x11, x12, x21, x22] = c.clone();
    let p = BlowupPoint::new(mat2(x11, x12, x21, x22), y.clone())?;
    let mut gens = bethe_generator_matrices(&rep, &p);
    let mut v = module.highest_weight_vector();
    if let Some(g) = grade {
        let idx = module.grade_indices(g);
        gens = gens.restrict(&idx);
        v = idx.iter().map(|&i| v[i].clone()).collect();
    }
    let algebra = algebra_closure(&gens);
    let dim = gens.dim();
    let hw = krylov_dim(&algebra, &v);
    // cyclic vectors form a Zariski-open set, so a random one is cyclic whenever any is
    let seed = file.seed.unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generic: Vec<Scalar> = (0..dim).map(|_| random_nonzero(&mut rng)).collect();
    let gk = krylov_dim(&algebra, &generic);
    let vector = vector.or(file.vector).unwrap_or(TestVector::HighestWeight);
    let cfg = CyclicConfig {
        factors,
        c: texts(&c).try_into().expect("four entries"),
        y: y.map(|y| texts(&y).try_into().expect("three entries")),
        grade,
        vector,
        seed,
    };
    let k = match vector {
        TestVector::HighestWeight => hw,
        TestVector::Generic => gk,
    };
    let body = json!({
        "cyclic": k == dim,
        "krylov_dim": k,
        "module_dim": dim,
        "highest_weight": { "cyclic": hw == dim, "krylov_dim": hw },
        "generic": { "cyclic": gk == dim, "krylov_dim": gk },
    });
    Ok(Outcome { report: report("cyclic", &cfg, body), csv: None, exit: 0 })
}
