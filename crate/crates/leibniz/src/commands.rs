//! The operations behind the `leibniz` binary.
//!
//! Every command returns its stdout text plus an exit code, or a
//! [`CliError`] carrying the exit-code contract: 0 success, 1 a
//! mathematical check failed, 2 usage/input error. Output documents are
//! deterministic for fixed input.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bimodule::{adjoint_module, check_module_axioms};
use crate::catalog::{nf_algebra, nf_superalgebra};
use crate::cochain::{differential, CochainSpace};
use crate::cohomology::{cochain_space_dim, cohomology};
use crate::deformations::{
    canonical_single_generated, family, is_linearly_integrable, FamilyKind, FamilyParams,
};
use crate::document::{AlgebraDocument, CochainDocument, ResultDocument};
use crate::error::AlgebraError;
use crate::rational::{frac, parse_rational, rat, Rational};
use crate::superalgebra::{Parity, SuperAlgebra};

/// Command failure with the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: bad flags, malformed or out-of-cap input, I/O problems.
    Usage(String),
    /// Exit 1: the input is mathematically unacceptable for the command.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Check(m) => m,
        }
    }
}

impl From<crate::error::ParseError> for CliError {
    fn from(e: crate::error::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Successful command output.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, exit: 0 }
    }
}

/// Default dimension cap for cohomology-sized computations; the
/// `LEIBNIZ_DIM_CAP` environment variable overrides it, `--force` bypasses.
const DEFAULT_DIM_CAP: usize = 16;
/// Default `n` caps for the `table` command.
const TABLE_CAP_NF: usize = 8;
const TABLE_CAP_SUPER: usize = 6;

fn env_cap(default: usize) -> usize {
    std::env::var("LEIBNIZ_DIM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default)
}

fn digest(input: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(input.as_bytes());
    format!("sha256:{:x}", hasher.finalize())
}

fn rational_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|part| {
            parse_rational(part.trim())
                .map_err(|e| CliError::Usage(format!("bad parameter list: {e}")))
        })
        .collect()
}

fn parse_parity(s: &str) -> Result<Parity, CliError> {
    match s {
        "even" => Ok(Parity::Even),
        "odd" => Ok(Parity::Odd),
        other => Err(CliError::Usage(format!(
            "parity must be \"even\" or \"odd\", got {other:?}"
        ))),
    }
}

fn load_algebra(input: &str) -> Result<(AlgebraDocument, SuperAlgebra), CliError> {
    let doc = AlgebraDocument::from_json(input)?;
    let algebra = doc.to_algebra()?;
    Ok((doc, algebra))
}

fn refuse_non_leibniz(a: &SuperAlgebra) -> Result<(), CliError> {
    let violations = a.check_leibniz_superidentity();
    if violations.is_empty() {
        return Ok(());
    }
    let sample: Vec<String> = violations
        .iter()
        .take(3)
        .map(|v| {
            format!(
                "({}, {}, {})",
                a.basis_name(v.triple.0),
                a.basis_name(v.triple.1),
                a.basis_name(v.triple.2)
            )
        })
        .collect();
    Err(CliError::Check(format!(
        "not a Leibniz superalgebra: the identity fails on {} basis triples (first: {})",
        violations.len(),
        sample.join(", ")
    )))
}

fn basis_as_strings(vectors: &[Vec<Rational>]) -> Value {
    json!(vectors
        .iter()
        .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

// ----- catalog -----

pub struct CatalogRequest {
    pub kind: String,
    pub n: usize,
    pub m: Option<usize>,
    pub params: Option<String>,
    pub t: Option<String>,
}

pub fn cmd_catalog(req: &CatalogRequest) -> Result<Outcome, CliError> {
    let bad = |m: String| Err(CliError::Usage(m));
    let algebra = match req.kind.as_str() {
        "nf" => {
            if req.m.is_some() || req.params.is_some() || req.t.is_some() {
                return bad("nf takes only --n".into());
            }
            nf_algebra(req.n).map_err(|e| CliError::Usage(e.to_string()))?
        }
        "nf-super" => {
            if req.params.is_some() || req.t.is_some() {
                return bad("nf-super takes only --n and --m".into());
            }
            let m = req
                .m
                .ok_or_else(|| CliError::Usage("nf-super requires --m".into()))?;
            nf_superalgebra(req.n, m).map_err(|e| CliError::Usage(e.to_string()))?
        }
        kind @ ("mu" | "nu" | "eta") => {
            if req.m.is_some() {
                return bad(format!("{kind} does not take --m"));
            }
            let params = req
                .params
                .as_deref()
                .ok_or_else(|| CliError::Usage(format!("{kind} requires --params")))?;
            let params = rational_list(params)?;
            let t = match req.t.as_deref() {
                Some(s) => {
                    parse_rational(s).map_err(|e| CliError::Usage(format!("bad --t: {e}")))?
                }
                None => rat(1),
            };
            let family_kind = match kind {
                "mu" => FamilyKind::Mu,
                "nu" => FamilyKind::Nu,
                _ => FamilyKind::Eta,
            };
            let fp = FamilyParams::new(family_kind, req.n, params)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            family(&fp, &t).map_err(|e| CliError::Usage(e.to_string()))?
        }
        other => return bad(format!("unknown catalog kind {other:?}")),
    };
    Ok(Outcome::ok(
        AlgebraDocument::from_algebra(&algebra).to_json(),
    ))
}

// ----- cohomology -----

pub struct CohomologyRequest {
    pub degree: usize,
    pub parity: String,
    pub emit_basis: bool,
    pub force: bool,
}

pub fn cmd_cohomology(input: &str, req: &CohomologyRequest) -> Result<Outcome, CliError> {
    if !(1..=3).contains(&req.degree) {
        return Err(CliError::Usage(format!(
            "degree must be 1, 2 or 3, got {}",
            req.degree
        )));
    }
    let parity = parse_parity(&req.parity)?;
    let (doc, algebra) = load_algebra(input)?;
    let cap = env_cap(DEFAULT_DIM_CAP);
    if algebra.dim() > cap && !req.force {
        return Err(CliError::Usage(format!(
            "dimension {} exceeds the cap {cap}; pass --force or set LEIBNIZ_DIM_CAP",
            algebra.dim()
        )));
    }
    refuse_non_leibniz(&algebra)?;
    let module = match doc.to_bimodule(&algebra)? {
        Some(module) => {
            let violations = check_module_axioms(&algebra, &module);
            if !violations.is_empty() {
                return Err(CliError::Check(format!(
                    "the module block violates the module axioms on {} triples",
                    violations.len()
                )));
            }
            module
        }
        None => adjoint_module(&algebra),
    };
    let spaces = cohomology(&algebra, &module, req.degree, parity);
    let mut payload = json!({
        "even_dim": algebra.even_dim(),
        "odd_dim": algebra.odd_dim(),
        "degree": req.degree,
        "parity": parity.to_string(),
        "dim_cochains": cochain_space_dim(&algebra, &module, req.degree, parity),
        "dim_cocycles": spaces.cocycles.dim(),
        "dim_coboundaries": spaces.coboundaries.dim(),
        "dim_cohomology": spaces.hl_dim,
    });
    if req.emit_basis {
        payload["cocycle_basis"] = basis_as_strings(spaces.cocycles.vectors());
        payload["coboundary_basis"] = basis_as_strings(spaces.coboundaries.vectors());
    }
    let result = ResultDocument {
        command: format!("cohomology --degree {} --parity {}", req.degree, parity),
        input_digest: digest(input),
        status: "ok".into(),
        payload,
    };
    Ok(Outcome::ok(serde_json::to_string_pretty(&result).unwrap()))
}

// ----- verify -----

pub struct VerifyRequest {
    pub checks: String,
    pub seed: u64,
}

fn violation_sample(a: &SuperAlgebra, triples: &[(usize, usize, usize)]) -> Value {
    json!(triples
        .iter()
        .take(5)
        .map(|(i, j, k)| format!(
            "({}, {}, {})",
            a.basis_name(*i),
            a.basis_name(*j),
            a.basis_name(*k)
        ))
        .collect::<Vec<_>>())
}

pub fn cmd_verify(input: &str, req: &VerifyRequest) -> Result<Outcome, CliError> {
    let (doc, algebra) = load_algebra(input)?;
    let checks: Vec<&str> = req
        .checks
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if checks.is_empty() {
        return Err(CliError::Usage("no checks requested".into()));
    }
    let mut results = Vec::new();
    let mut all_pass = true;
    for check in checks {
        let entry = match check {
            "identity" => {
                let violations = algebra.check_leibniz_superidentity();
                let triples: Vec<_> = violations.iter().map(|v| v.triple).collect();
                json!({
                    "check": "identity",
                    "pass": violations.is_empty(),
                    "violations": violations.len(),
                    "witnesses": violation_sample(&algebra, &triples),
                })
            }
            "module" => {
                let module = match doc.to_bimodule(&algebra)? {
                    Some(m) => m,
                    None => adjoint_module(&algebra),
                };
                let violations = check_module_axioms(&algebra, &module);
                let triples: Vec<_> = violations.iter().map(|v| v.triple).collect();
                json!({
                    "check": "module",
                    "pass": violations.is_empty(),
                    "violations": violations.len(),
                    "witnesses": violation_sample(&algebra, &triples),
                })
            }
            "nilpotent" => {
                let report = algebra.lower_central_series();
                json!({
                    "check": "nilpotent",
                    "pass": report.nilindex.is_some(),
                    "series_dims": report.dims,
                    "nilindex": report.nilindex,
                })
            }
            "null-filiform" => {
                let report = algebra.lower_central_series();
                json!({
                    "check": "null-filiform",
                    "pass": algebra.is_null_filiform(),
                    "series_dims": report.dims,
                })
            }
            "dsquared" => {
                let trials = dsquared_trials(&algebra, req.seed);
                json!({
                    "check": "dsquared",
                    "pass": trials.1,
                    "trials": trials.0,
                    "seed": req.seed,
                })
            }
            other => {
                if let Some(path) = other.strip_prefix("integrable:") {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::Usage(format!("cannot read cochain file {path:?}: {e}"))
                    })?;
                    let cochain_doc = CochainDocument::from_json(&text)?;
                    let cochain = cochain_doc.to_cochain(&algebra)?;
                    let (pass, violations) = is_linearly_integrable(&algebra, &cochain)
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    let triples: Vec<_> = violations.iter().map(|v| v.triple).collect();
                    json!({
                        "check": format!("integrable:{path}"),
                        "pass": pass,
                        "violations": violations.len(),
                        "witnesses": violation_sample(&algebra, &triples),
                    })
                } else {
                    return Err(CliError::Usage(format!("unknown check {other:?}")));
                }
            }
        };
        all_pass &= entry["pass"].as_bool().unwrap_or(false);
        results.push(entry);
    }
    let result = ResultDocument {
        command: format!("verify --checks {}", req.checks),
        input_digest: digest(input),
        status: if all_pass { "ok" } else { "failed" }.into(),
        payload: json!({ "checks": results }),
    };
    Ok(Outcome {
        stdout: serde_json::to_string_pretty(&result).unwrap(),
        exit: if all_pass { 0 } else { 1 },
    })
}

/// Seeded random cochains of degree 1 and 2, both parities: the composed
/// differential must vanish exactly on each.
fn dsquared_trials(a: &SuperAlgebra, seed: u64) -> (usize, bool) {
    let adj = adjoint_module(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trials = 0usize;
    for degree in [1usize, 2] {
        for parity in [Parity::Even, Parity::Odd] {
            let space = CochainSpace::new(a, &adj, degree, parity);
            if space.dim() == 0 {
                continue;
            }
            for _ in 0..10 {
                let coeffs: Vec<Rational> = (0..space.dim())
                    .map(|_| {
                        if rng.gen_bool(0.4) {
                            frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect();
                let f = space.cochain_from_vector(&coeffs).expect("valid vector");
                let dd = differential(a, &adj, &differential(a, &adj, &f));
                trials += 1;
                if !dd.is_zero() {
                    return (trials, false);
                }
            }
        }
    }
    (trials, true)
}

// ----- canonicalize -----

pub fn cmd_canonicalize(input: &str) -> Result<Outcome, CliError> {
    let (_, algebra) = load_algebra(input)?;
    if algebra.odd_dim() != 0 {
        return Err(CliError::Usage(
            "canonicalize requires an algebra with trivial odd part".into(),
        ));
    }
    refuse_non_leibniz(&algebra)?;
    let form = canonical_single_generated(&algebra).map_err(|e| match e {
        AlgebraError::NotSingleGenerated => CliError::Check("not single-generated".into()),
        AlgebraError::NotNilpotent => CliError::Check("not nilpotent".into()),
        other => CliError::Check(other.to_string()),
    })?;
    let generator: std::collections::BTreeMap<String, String> = form
        .generator
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (algebra.basis_name(i), c.to_string()))
        .collect();
    let payload = json!({
        "params": form.params.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "normalized": form.normalized,
        "scale_note": form.scale_note,
        "generator": generator,
        "canonical": serde_json::to_value(AlgebraDocument::from_algebra(&form.algebra)).unwrap(),
    });
    let result = ResultDocument {
        command: "canonicalize".into(),
        input_digest: digest(input),
        status: "ok".into(),
        payload,
    };
    Ok(Outcome::ok(serde_json::to_string_pretty(&result).unwrap()))
}

// ----- table -----

pub struct TableRequest {
    pub range: String,
    pub variant: String,
    pub format: String,
    pub force: bool,
}

type DimensionTriple = (usize, usize, usize);

struct TableRow {
    n: usize,
    computed: DimensionTriple,
    expected: DimensionTriple,
}

impl TableRow {
    fn matches(&self) -> bool {
        self.computed == self.expected
    }
}

pub fn cmd_table(req: &TableRequest) -> Result<Outcome, CliError> {
    let (lo, hi) = parse_range(&req.range)?;
    let (cap_default, expected): (usize, fn(usize) -> DimensionTriple) = match req.variant.as_str()
    {
        "nf" => (TABLE_CAP_NF, |n| (n * n - 1, n * n - n, n - 1)),
        "nn" => (TABLE_CAP_SUPER, |n| (2 * n * n - 1, 2 * n * n - n, n - 1)),
        "nn1" => (TABLE_CAP_SUPER, |n| {
            (2 * n * n + 2 * n - 1, 2 * n * n + n, n - 1)
        }),
        other => {
            return Err(CliError::Usage(format!(
                "variant must be nf, nn or nn1, got {other:?}"
            )))
        }
    };
    let cap = env_cap(cap_default);
    if hi > cap && !req.force {
        return Err(CliError::Usage(format!(
            "n = {hi} exceeds the cap {cap} for variant {}; pass --force or set LEIBNIZ_DIM_CAP",
            req.variant
        )));
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        let algebra = match req.variant.as_str() {
            "nf" => nf_algebra(n),
            "nn" => nf_superalgebra(n, n),
            _ => nf_superalgebra(n, n + 1),
        }
        .map_err(|e| CliError::Usage(e.to_string()))?;
        let adj = adjoint_module(&algebra);
        let spaces = cohomology(&algebra, &adj, 2, Parity::Even);
        rows.push(TableRow {
            n,
            computed: (
                spaces.cocycles.dim(),
                spaces.coboundaries.dim(),
                spaces.hl_dim,
            ),
            expected: expected(n),
        });
    }
    let command = format!(
        "table --range {} --variant {} --format {}",
        req.range, req.variant, req.format
    );
    match req.format.as_str() {
        "json" => {
            let payload = json!({
                "variant": req.variant,
                "rows": rows.iter().map(|r| json!({
                    "n": r.n,
                    "dim_cocycles": r.computed.0,
                    "dim_coboundaries": r.computed.1,
                    "dim_cohomology": r.computed.2,
                    "expected_cocycles": r.expected.0,
                    "expected_coboundaries": r.expected.1,
                    "expected_cohomology": r.expected.2,
                    "match": r.matches(),
                })).collect::<Vec<_>>(),
            });
            let result = ResultDocument {
                command,
                input_digest: digest(&format!("{}:{}", req.variant, req.range)),
                status: "ok".into(),
                payload,
            };
            Ok(Outcome::ok(serde_json::to_string_pretty(&result).unwrap()))
        }
        "csv" => {
            let mut out = String::from(
                "n,dim_cocycles,dim_coboundaries,dim_cohomology,expected_cocycles,\
                 expected_coboundaries,expected_cohomology,match\n",
            );
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.n,
                    r.computed.0,
                    r.computed.1,
                    r.computed.2,
                    r.expected.0,
                    r.expected.1,
                    r.expected.2,
                    r.matches()
                ));
            }
            Ok(Outcome::ok(out))
        }
        "markdown" => {
            let mut out = String::from(
                "| n | dim ZL | dim BL | dim HL | expected ZL | expected BL | expected HL | match |\n\
                 |---|--------|--------|--------|-------------|-------------|-------------|-------|\n",
            );
            for r in &rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    r.n,
                    r.computed.0,
                    r.computed.1,
                    r.computed.2,
                    r.expected.0,
                    r.expected.1,
                    r.expected.2,
                    r.matches()
                ));
            }
            Ok(Outcome::ok(out))
        }
        other => Err(CliError::Usage(format!(
            "format must be json, csv or markdown, got {other:?}"
        ))),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad range {s:?}: expected a..b"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}
