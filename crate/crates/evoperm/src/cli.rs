//! Document parsing, embedded fixtures, and the command implementations
//! behind the `evoperm` binary. Reports are plain data: serializable to
//! JSON losslessly and renderable as deterministic text.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Element, PermEvolutionAlgebra};
use crate::baric::{self, WeightFunction};
use crate::exactnum::{Rational, RationalMatrix};
use crate::idempotent::{self, IdempotentSet, RealNum};
use crate::nilpotent::{self, CycleKind, NilpotentReport};
use crate::oracle;
use crate::perm::Permutation;
use crate::structure::{self, BasisMap};

/// Hard cap on accepted dimensions.
pub const MAX_DIMENSION: usize = 64;

/// Default seed for randomized verification; override with `--seed` or
/// the `EVOPERM_SEED` environment variable.
pub const DEFAULT_SEED: u64 = 314159;

pub const FIXTURE_EXAMPLE1: &str = r#"{
  "label": "example1",
  "n": 4,
  "pi": [3, 1, 4, 2],
  "tau": [2, 3, 4, 1],
  "a_pi": ["-1", "1", "1", "1"],
  "a_tau": ["1", "1", "1", "1"]
}"#;

pub const FIXTURE_EXAMPLE2: &str = r#"{
  "label": "example2",
  "n": 4,
  "pi": [3, 2, 4, 1],
  "tau": [2, 3, 1, 4],
  "a_pi": ["1", "1", "1", "1"],
  "a_tau": ["1", "1", "1", "1"]
}"#;

pub const FIXTURE_SECTION3_ALLONES: &str = r#"{
  "label": "section3-allones",
  "n": 2,
  "pi": [2, 1],
  "tau": [1, 2],
  "a_pi": ["1", "1"],
  "a_tau": ["1", "1"]
}"#;

pub const FIXTURES: &[(&str, &str)] = &[
    ("example1", FIXTURE_EXAMPLE1),
    ("example2", FIXTURE_EXAMPLE2),
    ("section3-allones", FIXTURE_SECTION3_ALLONES),
];

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("JSON syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Document(#[from] DocumentError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl CliError {
    /// Process exit code: 2 parse, 3 precondition (oracle disagreement
    /// uses 4 and is signalled through the verify report instead).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Document(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Invalid {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    label: Option<String>,
    n: usize,
    pi: Vec<usize>,
    tau: Vec<usize>,
    a_pi: Vec<serde_json::Value>,
    a_tau: Vec<serde_json::Value>,
}

/// A validated algebra description. Rationals arrive as strings
/// (`"p/q"` or finite decimals) or JSON integers; JSON floats are
/// rejected to keep the exactness contract intact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub label: Option<String>,
    pub n: usize,
    pub pi: Vec<usize>,
    pub tau: Vec<usize>,
    pub a_pi: Vec<Rational>,
    pub a_tau: Vec<Rational>,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        if raw.n < 1 || raw.n > MAX_DIMENSION {
            return Err(invalid(
                "n",
                format!("must be between 1 and {MAX_DIMENSION}, got {}", raw.n),
            ));
        }
        for (name, v) in [("pi", &raw.pi), ("tau", &raw.tau)] {
            if v.len() != raw.n {
                return Err(invalid(
                    name,
                    format!("has {} images, expected n = {}", v.len(), raw.n),
                ));
            }
        }
        let a_pi = convert_coefficients("a_pi", &raw.a_pi, raw.n)?;
        let a_tau = convert_coefficients("a_tau", &raw.a_tau, raw.n)?;
        let doc = AlgebraDocument {
            label: raw.label,
            n: raw.n,
            pi: raw.pi,
            tau: raw.tau,
            a_pi,
            a_tau,
        };
        doc.to_algebra()?;
        Ok(doc)
    }

    pub fn fixture(name: &str) -> Option<Self> {
        FIXTURES
            .iter()
            .find(|(f, _)| *f == name)
            .map(|(_, text)| Self::parse(text).expect("embedded fixtures are valid"))
    }

    pub fn to_algebra(&self) -> Result<PermEvolutionAlgebra, DocumentError> {
        let pi = Permutation::from_images(self.pi.clone())
            .map_err(|e| invalid("pi", e.to_string()))?;
        let tau = Permutation::from_images(self.tau.clone())
            .map_err(|e| invalid("tau", e.to_string()))?;
        PermEvolutionAlgebra::new(pi, tau, self.a_pi.clone(), self.a_tau.clone()).map_err(
            |e| match e {
                AlgebraError::PiEqualsTau => invalid("tau", "pi and tau must differ"),
                other => invalid("document", other.to_string()),
            },
        )
    }

    pub fn display_label(&self) -> &str {
        self.label.as_deref().unwrap_or("unlabeled")
    }
}

fn convert_coefficients(
    field: &str,
    values: &[serde_json::Value],
    n: usize,
) -> Result<Vec<Rational>, DocumentError> {
    if values.len() != n {
        return Err(invalid(
            field,
            format!("has {} entries, expected n = {}", values.len(), n),
        ));
    }
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let slot = format!("{field}[{}]", i + 1);
            match v {
                serde_json::Value::String(s) => {
                    s.parse().map_err(|e| invalid(&slot, format!("{e}")))
                }
                serde_json::Value::Number(num) => {
                    if let Some(int) = num.as_i64() {
                        Ok(Rational::from_integer(int))
                    } else {
                        Err(invalid(
                            &slot,
                            "decimal coefficients must be quoted strings to stay exact",
                        ))
                    }
                }
                other => Err(invalid(
                    &slot,
                    format!("expected a rational string or integer, got {other}"),
                )),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureAvailability {
    pub decomposable: bool,
    pub decompose_note: String,
    pub cycle_identity_form: bool,
    pub inverse_pair_form: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub label: String,
    pub n: usize,
    pub pi: Vec<usize>,
    pub tau: Vec<usize>,
    pub a_pi: Vec<Rational>,
    pub a_tau: Vec<Rational>,
    pub structural_matrix: RationalMatrix,
    pub nilpotent: NilpotentReport,
    pub weights: Vec<WeightFunction>,
    pub idempotents: IdempotentReportBody,
    pub structure: StructureAvailability,
}

pub fn cmd_analyze(doc: &AlgebraDocument) -> Result<AnalyzeReport, CliError> {
    let alg = doc.to_algebra()?;
    let nilpotent = nilpotent::solve(&alg);
    let weights = baric::find_weights(&alg);
    let idempotents = idempotent_body(&alg);
    let structure = structure_availability(&alg);
    Ok(AnalyzeReport {
        label: doc.display_label().to_string(),
        n: doc.n,
        pi: doc.pi.clone(),
        tau: doc.tau.clone(),
        a_pi: doc.a_pi.clone(),
        a_tau: doc.a_tau.clone(),
        structural_matrix: alg.structural_matrix(),
        nilpotent,
        weights,
        idempotents,
        structure,
    })
}

fn structure_availability(alg: &PermEvolutionAlgebra) -> StructureAvailability {
    let (decomposable, decompose_note) = match structure::decompose(alg) {
        Ok(dec) => {
            let supports: Vec<String> = dec
                .blocks
                .iter()
                .map(|b| format!("{:?}", b.support))
                .collect();
            (true, format!("blocks on supports {}", supports.join(", ")))
        }
        Err(e) => (false, e.to_string()),
    };
    StructureAvailability {
        decomposable,
        decompose_note,
        cycle_identity_form: structure::canonical_cycle_identity(alg).is_ok(),
        inverse_pair_form: structure::canonical_inverse_pair(alg).is_ok(),
    }
}

// ---------------------------------------------------------------------------
// idempotent

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdempotentReportBody {
    /// "complete-n2" or "particular".
    pub route: String,
    pub set: IdempotentSet,
}

pub fn cmd_idempotent(doc: &AlgebraDocument) -> Result<IdempotentReportBody, CliError> {
    let alg = doc.to_algebra()?;
    Ok(idempotent_body(&alg))
}

fn idempotent_body(alg: &PermEvolutionAlgebra) -> IdempotentReportBody {
    match idempotent::solve_n2(alg) {
        Ok(set) => IdempotentReportBody {
            route: "complete-n2".to_string(),
            set,
        },
        Err(_) => IdempotentReportBody {
            route: "particular".to_string(),
            set: idempotent::particular_idempotents(alg),
        },
    }
}

// ---------------------------------------------------------------------------
// nilpotent / baric

pub fn cmd_nilpotent(doc: &AlgebraDocument) -> Result<NilpotentReport, CliError> {
    Ok(nilpotent::solve(&doc.to_algebra()?))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaricReport {
    pub label: String,
    pub weights: Vec<WeightFunction>,
    pub baric: bool,
}

pub fn cmd_baric(doc: &AlgebraDocument) -> Result<BaricReport, CliError> {
    let alg = doc.to_algebra()?;
    let weights = baric::find_weights(&alg);
    Ok(BaricReport {
        label: doc.display_label().to_string(),
        baric: !weights.is_empty(),
        weights,
    })
}

// ---------------------------------------------------------------------------
// decompose / canonical

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockReport {
    pub support: Vec<usize>,
    pub pi: Vec<usize>,
    pub tau: Vec<usize>,
    pub a_pi: Vec<Rational>,
    pub a_tau: Vec<Rational>,
    pub map: BasisMap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub label: String,
    pub blocks: Vec<BlockReport>,
}

pub fn cmd_decompose(doc: &AlgebraDocument) -> Result<DecomposeReport, CliError> {
    let alg = doc.to_algebra()?;
    let dec = structure::decompose(&alg).map_err(|e| CliError::Precondition(e.to_string()))?;
    Ok(DecomposeReport {
        label: doc.display_label().to_string(),
        blocks: dec
            .blocks
            .into_iter()
            .map(|b| BlockReport {
                support: b.support,
                pi: b.algebra.pi().images().to_vec(),
                tau: b.algebra.tau().images().to_vec(),
                a_pi: b.algebra.pi_coefficients().to_vec(),
                a_tau: b.algebra.tau_coefficients().to_vec(),
                map: b.map,
            })
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalReport {
    pub label: String,
    /// "cycle-identity" or "inverse-pair".
    pub kind: String,
    pub assignment: Vec<usize>,
    pub pi_star: Vec<usize>,
    pub tau_star: Vec<usize>,
    pub a_pi: Vec<Rational>,
    pub a_tau: Vec<Rational>,
    pub isomorphism_verified: bool,
}

pub fn cmd_canonical(doc: &AlgebraDocument) -> Result<CanonicalReport, CliError> {
    let alg = doc.to_algebra()?;
    let (kind, result) = if alg.tau().is_identity() {
        ("cycle-identity", structure::canonical_cycle_identity(&alg))
    } else {
        ("inverse-pair", structure::canonical_inverse_pair(&alg))
    };
    let (canon, map) = result.map_err(|e| CliError::Precondition(e.to_string()))?;
    let verified = structure::verify_isomorphism(&alg, &canon, &map)
        .map_err(|e| CliError::Precondition(e.to_string()))?;
    Ok(CanonicalReport {
        label: doc.display_label().to_string(),
        kind: kind.to_string(),
        assignment: map.assignment.clone(),
        pi_star: canon.pi().images().to_vec(),
        tau_star: canon.tau().images().to_vec(),
        a_pi: canon.pi_coefficients().to_vec(),
        a_tau: canon.tau_coefficients().to_vec(),
        isomorphism_verified: verified,
    })
}

// ---------------------------------------------------------------------------
// verify

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub subject: String,
    pub seed: u64,
    pub checks: Vec<CheckLine>,
    /// "passed/total" over the agreement-style checks.
    pub agreement: String,
    /// Converse-direction observations and other non-failing notes.
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Oracle-vs-analytic verification of a single document.
pub fn cmd_verify_document(doc: &AlgebraDocument, seed: u64) -> Result<VerifyReport, CliError> {
    let alg = doc.to_algebra()?;
    if alg.dim() > oracle::MAX_ORACLE_DIM {
        return Err(CliError::Precondition(format!(
            "oracle verification is capped at n = {}",
            oracle::MAX_ORACLE_DIM
        )));
    }
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    verify_instance(&alg, &mut rng, &mut checks, &mut notes, "");

    // idempotent cross-check only applies to the two-dimensional cyclic shape
    if let Ok((a, b, c, d)) = idempotent::section_coefficients(&alg) {
        if let (Ok(set), Ok(search)) = (
            idempotent::solve_n2(&alg),
            oracle::idempotent_search_n2(&a, &b, &c, &d),
        ) {
            let dist = point_set_distance(&set, &search.points);
            checks.push(CheckLine {
                name: "idempotent solutions match numeric root search".to_string(),
                passed: dist <= 1e-7,
                detail: format!("hausdorff distance {dist:.3e}"),
            });
            let residuals_ok = set.points.iter().all(|p| {
                match oracle::substitution_residual(
                    &alg,
                    &p.coords,
                    oracle::DefiningSystem::Idempotent,
                ) {
                    RealNum::Exact(r) => r.is_zero(),
                    RealNum::Approx(r) => r <= idempotent::ROOT_TOLERANCE,
                }
            });
            checks.push(CheckLine {
                name: "idempotent substitution residuals within tolerance".to_string(),
                passed: residuals_ok,
                detail: format!("{} points", set.points.len()),
            });
        }
    }

    let passed = checks.iter().filter(|c| c.passed).count();
    Ok(VerifyReport {
        subject: format!("document {}", doc.display_label()),
        seed,
        agreement: format!("{passed}/{}", checks.len()),
        checks,
        notes,
    })
}

/// Randomized verification over `trials` instances with `2 <= n <= max_n`
/// and coefficients in {-2..2}.
pub fn cmd_verify_random(trials: usize, max_n: usize, seed: u64) -> Result<VerifyReport, CliError> {
    if max_n > oracle::MAX_ORACLE_DIM {
        return Err(CliError::Precondition(format!(
            "oracle verification is capped at n = {}",
            oracle::MAX_ORACLE_DIM
        )));
    }
    if max_n < 2 {
        return Err(CliError::Precondition(
            "random verification needs max_n >= 2".to_string(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut agreements = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut criteria_violations = 0usize;
    let mut witness_failures = 0usize;
    let mut baric_mismatches = 0usize;
    let mut notes = Vec::new();
    for trial in 0..trials {
        let alg = random_algebra(&mut rng, max_n);
        let mut local_checks = Vec::new();
        let mut local_notes = Vec::new();
        verify_instance(
            &alg,
            &mut rng,
            &mut local_checks,
            &mut local_notes,
            &format!("trial {trial}: "),
        );
        let ok = local_checks.iter().all(|c| c.passed);
        if ok {
            agreements += 1;
        } else if failures.len() < 10 {
            for c in local_checks.iter().filter(|c| !c.passed) {
                failures.push(format!("trial {trial}: {} ({})", c.name, c.detail));
            }
        }
        for c in &local_checks {
            if !c.passed {
                match c.name.as_str() {
                    s if s.contains("criteria") => criteria_violations += 1,
                    s if s.contains("witness") => witness_failures += 1,
                    s if s.contains("weight") => baric_mismatches += 1,
                    _ => {}
                }
            }
        }
        notes.extend(local_notes.into_iter().take(1));
    }
    let converse_count = notes.len();
    let mut checks = vec![
        CheckLine {
            name: "analytic/oracle agreement".to_string(),
            passed: agreements == trials,
            detail: format!("{agreements}/{trials}"),
        },
        CheckLine {
            name: "criteria imply oracle uniqueness".to_string(),
            passed: criteria_violations == 0,
            detail: format!("{criteria_violations} violations"),
        },
        CheckLine {
            name: "witness soundness".to_string(),
            passed: witness_failures == 0,
            detail: format!("{witness_failures} failures"),
        },
        CheckLine {
            name: "weight functions match brute force".to_string(),
            passed: baric_mismatches == 0,
            detail: format!("{baric_mismatches} mismatches"),
        },
    ];
    checks.extend(failures.into_iter().map(|f| CheckLine {
        name: "failed trial".to_string(),
        passed: false,
        detail: f,
    }));
    let mut trimmed_notes: Vec<String> = Vec::new();
    if converse_count > 0 {
        trimmed_notes.push(format!(
            "{converse_count} instances where condition (rank-n2) failed yet the solution is unique; logged, not failed"
        ));
    }
    Ok(VerifyReport {
        subject: format!("random trials (n <= {max_n})"),
        seed,
        agreement: format!("{agreements}/{trials}"),
        checks,
        notes: trimmed_notes,
    })
}

/// Shared per-instance verification: nilpotent uniqueness vs oracle,
/// witness soundness, criteria implications, baric brute force.
fn verify_instance(
    alg: &PermEvolutionAlgebra,
    rng: &mut ChaCha8Rng,
    checks: &mut Vec<CheckLine>,
    notes: &mut Vec<String>,
    prefix: &str,
) {
    let report = nilpotent::solve(alg);
    let search = oracle::nilpotent_oracle(alg).expect("dimension checked by caller");
    checks.push(CheckLine {
        name: format!("{prefix}nilpotent uniqueness agrees with oracle"),
        passed: report.unique != search.nontrivial,
        detail: format!(
            "analytic unique = {}, oracle nontrivial = {}",
            report.unique, search.nontrivial
        ),
    });
    if let Some(u) = report.witness_squares() {
        checks.push(CheckLine {
            name: format!("{prefix}analytic witness passes substitution"),
            passed: nilpotent::verify_nilpotent_squares(alg, &u),
            detail: "u-space substitution".to_string(),
        });
    }
    if let Some(u) = &search.witness_squares {
        checks.push(CheckLine {
            name: format!("{prefix}oracle witness passes substitution"),
            passed: nilpotent::verify_nilpotent_squares(alg, u),
            detail: "u-space substitution".to_string(),
        });
    }
    let fired = report.criteria.fired();
    if !fired.is_empty() {
        checks.push(CheckLine {
            name: format!("{prefix}fired criteria imply oracle uniqueness"),
            passed: !search.nontrivial,
            detail: format!("fired: {}", fired.join(", ")),
        });
    }
    if report.criteria.rank_n2 == nilpotent::CriterionStatus::DoesNotCertify && !search.nontrivial
    {
        notes.push(format!(
            "{prefix}rank-n2 condition fails but the solution is unique (open converse direction)"
        ));
    }
    // baric: independent brute force through actual multiplication
    let analytic = baric::find_weights(alg);
    let brute = brute_force_weights(alg);
    let mut weights_ok = analytic == brute;
    'outer: for w in &analytic {
        for _ in 0..4 {
            let x = random_element(rng, alg.dim());
            let y = random_element(rng, alg.dim());
            let xy = alg.multiply(&x, &y).expect("dimensions match");
            if w.evaluate(&xy) != &w.evaluate(&x) * &w.evaluate(&y) {
                weights_ok = false;
                break 'outer;
            }
        }
    }
    checks.push(CheckLine {
        name: format!("{prefix}weight functions match brute force"),
        passed: weights_ok,
        detail: format!("{} weights", analytic.len()),
    });
    // particular idempotents must verify exactly
    let particular = idempotent::particular_idempotents(alg);
    let idem_ok = particular
        .points
        .iter()
        .all(|point| idempotent::verify_idempotent(alg, &point.coords));
    checks.push(CheckLine {
        name: format!("{prefix}particular idempotents verify"),
        passed: idem_ok,
        detail: format!("{} points", particular.points.len()),
    });
}

/// Brute-force single-coordinate character search, going through the
/// actual multiplication rather than the column criterion.
pub fn brute_force_weights(alg: &PermEvolutionAlgebra) -> Vec<WeightFunction> {
    let m = alg.structural_matrix();
    let n = alg.dim();
    (1..=n)
        .filter_map(|k0| {
            // sigma(e_{k0}^2) = c^2 forces c = M[k0][k0]
            let w = WeightFunction::new(k0, m.get(k0 - 1, k0 - 1).clone())?;
            for i in 1..=n {
                for j in 1..=n {
                    let ei = Element::basis(n, i);
                    let ej = Element::basis(n, j);
                    let prod = alg.multiply(&ei, &ej).expect("dimensions match");
                    if w.evaluate(&prod) != &w.evaluate(&ei) * &w.evaluate(&ej) {
                        return None;
                    }
                }
            }
            Some(w)
        })
        .collect()
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> Element {
    Element::new(
        (0..n)
            .map(|_| Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
            .collect(),
    )
}

/// Random algebra with coefficients in {-2..2} and `pi != tau`.
pub fn random_algebra(rng: &mut ChaCha8Rng, max_n: usize) -> PermEvolutionAlgebra {
    let n = rng.gen_range(2..=max_n);
    loop {
        let pi = random_permutation(rng, n);
        let tau = random_permutation(rng, n);
        if pi == tau {
            continue;
        }
        let a_pi = (0..n)
            .map(|_| Rational::from_integer(rng.gen_range(-2..=2)))
            .collect();
        let a_tau = (0..n)
            .map(|_| Rational::from_integer(rng.gen_range(-2..=2)))
            .collect();
        return PermEvolutionAlgebra::new(pi, tau, a_pi, a_tau)
            .expect("pi != tau checked above");
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffle preserves bijection")
}

/// Hausdorff distance between the analytic and searched idempotent
/// point sets, in the infinity norm.
fn point_set_distance(set: &IdempotentSet, searched: &[Vec<f64>]) -> f64 {
    let analytic: Vec<Vec<f64>> = set
        .points
        .iter()
        .map(|p| p.coords.iter().map(RealNum::to_f64).collect())
        .collect();
    let dist = |p: &Vec<f64>, q: &Vec<f64>| -> f64 {
        p.iter()
            .zip(q)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    let one_way = |from: &[Vec<f64>], to: &[Vec<f64>]| -> f64 {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| dist(p, q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    if analytic.is_empty() && searched.is_empty() {
        return 0.0;
    }
    if analytic.is_empty() || searched.is_empty() {
        return f64::INFINITY;
    }
    one_way(&analytic, searched).max(one_way(searched, &analytic))
}

// ---------------------------------------------------------------------------
// census

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub id: usize,
    pub pi: Vec<usize>,
    pub tau: Vec<usize>,
    pub a_pi: Vec<Rational>,
    pub a_tau: Vec<Rational>,
    pub baric: bool,
    pub weight_count: usize,
    pub unique_nilpotent: bool,
    pub criteria_fired: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub coefficients: Vec<Rational>,
    pub limit: usize,
    pub rows: Vec<CensusRow>,
    pub truncated: bool,
}

/// Deterministic enumeration of all ordered pairs `pi != tau` with all
/// coefficient assignments from the given list, in lexicographic order.
pub fn cmd_census(
    n: usize,
    coefficients: Vec<Rational>,
    limit: usize,
) -> Result<CensusReport, CliError> {
    if !(2..=4).contains(&n) {
        return Err(CliError::Precondition(format!(
            "census supports 2 <= n <= 4, got {n}"
        )));
    }
    if coefficients.is_empty() {
        return Err(CliError::Precondition(
            "census needs a nonempty coefficient list".to_string(),
        ));
    }
    let perms = all_permutations(n);
    let mut rows = Vec::new();
    let mut truncated = false;
    let mut id = 0usize;
    'outer: for pi in &perms {
        for tau in &perms {
            if pi == tau {
                continue;
            }
            let mut odometer = vec![0usize; 2 * n];
            loop {
                let a_pi: Vec<Rational> = (0..n)
                    .map(|i| coefficients[odometer[i]].clone())
                    .collect();
                let a_tau: Vec<Rational> = (0..n)
                    .map(|i| coefficients[odometer[n + i]].clone())
                    .collect();
                if rows.len() == limit {
                    truncated = true;
                    break 'outer;
                }
                let alg = PermEvolutionAlgebra::new(
                    pi.clone(),
                    tau.clone(),
                    a_pi.clone(),
                    a_tau.clone(),
                )
                .expect("pi != tau");
                let weights = baric::find_weights(&alg);
                let report = nilpotent::solve(&alg);
                rows.push(CensusRow {
                    id,
                    pi: pi.images().to_vec(),
                    tau: tau.images().to_vec(),
                    a_pi,
                    a_tau,
                    baric: !weights.is_empty(),
                    weight_count: weights.len(),
                    unique_nilpotent: report.unique,
                    criteria_fired: report
                        .criteria
                        .fired()
                        .iter()
                        .map(|s| s.to_string())
                        .collect(),
                });
                id += 1;
                if !advance_odometer(&mut odometer, coefficients.len()) {
                    break;
                }
            }
        }
    }
    Ok(CensusReport {
        n,
        coefficients,
        limit,
        rows,
        truncated,
    })
}

fn advance_odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// All permutations of degree `n` in lexicographic image order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_images(images.clone()).expect("permutation by construction"));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

// ---------------------------------------------------------------------------
// text rendering

fn fmt_rationals(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(Rational::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_indices(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_real(v: &RealNum) -> String {
    match v {
        RealNum::Exact(r) => r.to_string(),
        RealNum::Approx(x) => format!("{x:.16e}"),
    }
}

fn status_text(s: nilpotent::CriterionStatus) -> &'static str {
    match s {
        nilpotent::CriterionStatus::Certifies => "certifies",
        nilpotent::CriterionStatus::DoesNotCertify => "does not certify",
        nilpotent::CriterionStatus::Inapplicable => "inapplicable",
    }
}

pub fn render_nilpotent(report: &NilpotentReport, out: &mut String) {
    let _ = writeln!(out, "j-map (tau^-1 . pi): {}", fmt_indices(&report.j_map));
    for sol in &report.per_cycle {
        let cycle = sol
            .cycle
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let desc = match &sol.kind {
            CycleKind::TrivialOnly => "only the zero assignment".to_string(),
            CycleKind::FreeCoordinates { positions } => {
                format!(
                    "free coordinates {} (both structural coefficients vanish); rest zero",
                    fmt_indices(positions)
                )
            }
            CycleKind::OneParamFamily { ratios, .. } => {
                let rs: Vec<String> = ratios.iter().map(|r| r.to_string()).collect();
                format!(
                    "one-parameter family, |x| ratios [{}], signs independent",
                    rs.join(", ")
                )
            }
            CycleKind::SplitFamilies { families } => {
                let fs: Vec<String> = families
                    .iter()
                    .map(|f| {
                        let rs: Vec<String> = f.ratios.iter().map(|r| r.to_string()).collect();
                        format!(
                            "{{positions {}, ratios [{}]}}",
                            fmt_indices(&f.positions),
                            rs.join(", ")
                        )
                    })
                    .collect();
                format!("independent scaling families: {}", fs.join("; "))
            }
        };
        let _ = writeln!(out, "cycle ({cycle}): {desc}");
    }
    let _ = writeln!(
        out,
        "unique absolute nilpotent: {}",
        if report.unique { "yes (only x = 0)" } else { "no" }
    );
    let c = &report.criteria;
    let _ = writeln!(out, "det(system) = {}, rank = {}", c.det, c.rank);
    let _ = writeln!(out, "uniqueness criteria:");
    let _ = writeln!(out, "  det != 0:          {}", status_text(c.det_nonzero));
    match (&c.rank_n1_details, c.rank_n1) {
        (Some(d), s) => {
            let minors: Vec<String> = d.minor_dets.iter().map(Rational::to_string).collect();
            let extra = match (&d.certifying_index, &d.product) {
                (Some(i), Some(p)) => format!(", i0 = {i}, product = {p}"),
                _ => String::new(),
            };
            let _ = writeln!(
                out,
                "  rank n-1 minors:   {} (det pivot = {}, minor dets = [{}]{extra})",
                status_text(s),
                d.pivot_det,
                minors.join(", ")
            );
        }
        (None, s) => {
            let _ = writeln!(out, "  rank n-1 minors:   {}", status_text(s));
        }
    }
    let _ = writeln!(out, "  sign products:     {}", status_text(c.sign_products));
    match (&c.rank_n2_details, c.rank_n2) {
        (Some(d), s) => {
            let _ = writeln!(
                out,
                "  rank n-2 reduced:  {} (dependent {}, free {})",
                status_text(s),
                fmt_indices(&d.dependent),
                fmt_indices(&d.free)
            );
            let _ = write!(out, "{}", d.coefficients);
        }
        (None, s) => {
            let _ = writeln!(out, "  rank n-2 reduced:  {}", status_text(s));
        }
    }
    if !c.fired().is_empty() {
        let _ = writeln!(out, "criteria fired: {}", c.fired().join(", "));
    }
    if let Some(u) = report.witness_squares() {
        let _ = writeln!(out, "witness squares (t = 1): {}", fmt_rationals(&u));
    }
}

pub fn render_weights(weights: &[WeightFunction], out: &mut String) {
    if weights.is_empty() {
        let _ = writeln!(out, "weight functions: none (not baric)");
    } else {
        let parts: Vec<String> = weights
            .iter()
            .map(|w| format!("sigma(x) = {}*x_{}", w.c, w.k0))
            .collect();
        let _ = writeln!(out, "weight functions: {}", parts.join("; "));
    }
}

pub fn render_idempotents(body: &IdempotentReportBody, out: &mut String) {
    let _ = writeln!(
        out,
        "idempotents ({}, complete = {}):",
        body.route, body.set.complete
    );
    for p in &body.set.points {
        let coords: Vec<String> = p.coords.iter().map(fmt_real).collect();
        let _ = writeln!(
            out,
            "  ({}) residual {}",
            coords.join(", "),
            fmt_real(&p.residual)
        );
    }
    if let Some(c) = &body.set.classification {
        let _ = writeln!(
            out,
            "cubic classification: {:?} (degenerate = {})",
            c.case, c.degenerate
        );
        if let (Some(p), Some(q), Some(delta)) = (&c.p, &c.q, &c.delta) {
            let _ = writeln!(out, "  p = {p}, q = {q}, delta = {delta}");
        }
    }
    for note in &body.set.notes {
        let _ = writeln!(out, "  note: {note}");
    }
}

impl AnalyzeReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {} (n = {})", self.label, self.n);
        let _ = writeln!(out, "pi:  {}", fmt_indices(&self.pi));
        let _ = writeln!(out, "tau: {}", fmt_indices(&self.tau));
        let _ = writeln!(out, "a_pi:  {}", fmt_rationals(&self.a_pi));
        let _ = writeln!(out, "a_tau: {}", fmt_rationals(&self.a_tau));
        let _ = writeln!(out, "structural matrix:");
        let _ = write!(out, "{}", self.structural_matrix);
        render_nilpotent(&self.nilpotent, &mut out);
        render_weights(&self.weights, &mut out);
        render_idempotents(&self.idempotents, &mut out);
        let s = &self.structure;
        let _ = writeln!(
            out,
            "decomposition: {}{}",
            if s.decomposable { "available; " } else { "unavailable; " },
            s.decompose_note
        );
        let _ = writeln!(
            out,
            "canonical forms: cycle-identity = {}, inverse-pair = {}",
            s.cycle_identity_form, s.inverse_pair_form
        );
        out
    }
}

impl BaricReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}: baric = {}", self.label, self.baric);
        render_weights(&self.weights, &mut out);
        out
    }
}

impl DecomposeReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "algebra {}: {} blocks",
            self.label,
            self.blocks.len()
        );
        for (i, b) in self.blocks.iter().enumerate() {
            let _ = writeln!(
                out,
                "block {} on support {}: pi = {}, tau = {}, a_pi = {}, a_tau = {}",
                i + 1,
                fmt_indices(&b.support),
                fmt_indices(&b.pi),
                fmt_indices(&b.tau),
                fmt_rationals(&b.a_pi),
                fmt_rationals(&b.a_tau)
            );
        }
        out
    }
}

impl CanonicalReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}: canonical form ({})", self.label, self.kind);
        let _ = writeln!(out, "assignment e'_i = e_m: m = {}", fmt_indices(&self.assignment));
        let _ = writeln!(out, "pi* =  {}", fmt_indices(&self.pi_star));
        let _ = writeln!(out, "tau* = {}", fmt_indices(&self.tau_star));
        let _ = writeln!(out, "a_pi:  {}", fmt_rationals(&self.a_pi));
        let _ = writeln!(out, "a_tau: {}", fmt_rationals(&self.a_tau));
        let _ = writeln!(out, "isomorphism verified: {}", self.isomorphism_verified);
        out
    }
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "verify {} (seed {})", self.subject, self.seed);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {}: {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        let _ = writeln!(out, "analytic/oracle agreement: {}", self.agreement);
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

impl CensusReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "census n = {} over coefficients {} (limit {})",
            self.n,
            fmt_rationals(&self.coefficients),
            self.limit
        );
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{}\tpi={} tau={} a_pi={} a_tau={}\tbaric={} weights={}\tunique={}\tcriteria=[{}]",
                row.id,
                fmt_indices(&row.pi),
                fmt_indices(&row.tau),
                fmt_rationals(&row.a_pi),
                fmt_rationals(&row.a_tau),
                row.baric,
                row.weight_count,
                row.unique_nilpotent,
                row.criteria_fired.join(", ")
            );
        }
        if self.truncated {
            let _ = writeln!(out, "... truncated at limit {}", self.limit);
        }
        out
    }
}

impl NilpotentReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        render_nilpotent(self, &mut out);
        out
    }
}

impl IdempotentReportBody {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        render_idempotents(self, &mut out);
        out
    }
}
