//! Brute-force verifiers that are independent of the analytic modules:
//! no Bareiss elimination, no cycle machinery, no discriminant
//! classification. Used to cross-check every derived result.
//!
//! Nilpotent search: the squared system is a homogeneous linear system
//! in `u_i = x_i^2`, so nontrivial nilpotents exist exactly when the
//! kernel meets the nonnegative orthant outside the origin. The kernel
//! comes from plain reduced row echelon form; the cone question is
//! decided by Fourier-Motzkin elimination, exactly, with witness
//! extraction.
//!
//! Idempotent search (n = 2): real roots of the eliminated quartic via
//! companion-matrix eigenvalues, then coordinate recovery and residual
//! filtering.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::PermEvolutionAlgebra;
use crate::exactnum::{Rational, RationalMatrix};
use crate::idempotent::{self, RealNum};

/// Largest dimension accepted by the exact nilpotent search.
pub const MAX_ORACLE_DIM: usize = 12;

/// Residual bound for accepting numeric roots.
pub const NUMERIC_TOLERANCE: f64 = 1e-9;

/// Distinct numeric roots are merged below this separation.
pub const ROOT_SEPARATION: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("dimension {n} exceeds the oracle cap {max}")]
    DimensionCap { n: usize, max: usize },
    #[error("coefficient {which} must be nonzero")]
    ZeroCoefficient { which: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleMethod {
    ExactElimination,
    ConeAnalysis,
    GridSample,
    NumericRoots,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub instance: String,
    pub method: OracleMethod,
    /// Whether the search space was covered exactly.
    pub exhausted: bool,
    /// Nilpotent search: a nontrivial nonnegative solution exists.
    pub nontrivial: bool,
    /// Nilpotent search: exact squares of a witness.
    pub witness_squares: Option<Vec<Rational>>,
    /// Idempotent search: accepted solution points.
    pub points: Vec<Vec<f64>>,
}

/// Exact decision whether the algebra has a nontrivial absolute
/// nilpotent, independent of the cycle analysis.
pub fn nilpotent_oracle(a: &PermEvolutionAlgebra) -> Result<SearchReport, OracleError> {
    let n = a.dim();
    // equations assembled from the inverse permutations, not from the
    // structural-matrix code path
    let pi_inv = a.pi().inverse();
    let tau_inv = a.tau().inverse();
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for target in 1..=n {
        let i = pi_inv.apply(target);
        rows[target - 1][i - 1] = &rows[target - 1][i - 1] + a.pi_coefficient(i);
        let i = tau_inv.apply(target);
        rows[target - 1][i - 1] = &rows[target - 1][i - 1] + a.tau_coefficient(i);
    }
    let s = RationalMatrix::from_rows(rows).expect("rectangular by construction");
    let mut report = nilpotent_oracle_system(&s)?;
    report.instance = format!("pi={} tau={} n={}", a.pi(), a.tau(), n);
    Ok(report)
}

/// Same decision for an arbitrary homogeneous system (rows are
/// equations over the squared variables).
pub fn nilpotent_oracle_system(s: &RationalMatrix) -> Result<SearchReport, OracleError> {
    let n = s.cols();
    if n > MAX_ORACLE_DIM {
        return Err(OracleError::DimensionCap {
            n,
            max: MAX_ORACLE_DIM,
        });
    }
    let (pivot_cols, reduced) = rref(s.row_vecs());
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    if free_cols.is_empty() {
        return Ok(SearchReport {
            instance: format!("system {}x{}", s.rows(), n),
            method: OracleMethod::ExactElimination,
            exhausted: true,
            nontrivial: false,
            witness_squares: None,
            points: Vec::new(),
        });
    }
    // u_{pivot i} = sum_f dependency[i][f] * t_f
    let dependency: Vec<Vec<Rational>> = reduced
        .iter()
        .take(pivot_cols.len())
        .map(|row| free_cols.iter().map(|&f| -&row[f]).collect())
        .collect();

    let witness_t = nonzero_nonnegative_point(&dependency, free_cols.len());
    let witness_squares = witness_t.map(|t| {
        let mut u = vec![Rational::zero(); n];
        for (j, &f) in free_cols.iter().enumerate() {
            u[f] = t[j].clone();
        }
        for (i, &p) in pivot_cols.iter().enumerate() {
            u[p] = dependency[i]
                .iter()
                .zip(&t)
                .fold(Rational::zero(), |acc, (c, v)| &acc + &(c * v));
        }
        u
    });
    Ok(SearchReport {
        instance: format!("system {}x{}", s.rows(), n),
        method: OracleMethod::ConeAnalysis,
        exhausted: true,
        nontrivial: witness_squares.is_some(),
        witness_squares,
        points: Vec::new(),
    })
}

/// Reduced row echelon form; returns the pivot columns and the reduced
/// rows (pivot rows first, zero rows dropped).
#[allow(clippy::needless_range_loop)]
fn rref(mut rows: Vec<Vec<Rational>>) -> (Vec<usize>, Vec<Vec<Rational>>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.truncate(r);
    (pivot_cols, rows)
}

/// Searches for `t >= 0`, `t != 0`, with every dependency row
/// `sum_f dep[i][f] t_f >= 0`. Scaling lets us pin one coordinate to 1,
/// so the cone is nontrivial iff one of the pinned subproblems is
/// feasible; those are decided by Fourier-Motzkin elimination.
fn nonzero_nonnegative_point(dependency: &[Vec<Rational>], nfree: usize) -> Option<Vec<Rational>> {
    for pinned in 0..nfree {
        let mut constraints = Vec::new();
        // t_j >= 0 for the remaining variables
        for j in 0..nfree {
            if j == pinned {
                continue;
            }
            let mut coeffs = vec![Rational::zero(); nfree - 1];
            coeffs[reindex(j, pinned)] = Rational::one();
            constraints.push(Constraint {
                coeffs,
                rhs: Rational::zero(),
            });
        }
        for dep in dependency {
            let mut coeffs = vec![Rational::zero(); nfree - 1];
            for (j, c) in dep.iter().enumerate() {
                if j != pinned {
                    coeffs[reindex(j, pinned)] = c.clone();
                }
            }
            // sum dep * t >= 0 with t_pinned = 1
            constraints.push(Constraint {
                coeffs,
                rhs: -&dep[pinned],
            });
        }
        if let Some(rest) = fourier_motzkin(constraints, nfree - 1) {
            let mut t = Vec::with_capacity(nfree);
            for j in 0..nfree {
                if j == pinned {
                    t.push(Rational::one());
                } else {
                    t.push(rest[reindex(j, pinned)].clone());
                }
            }
            return Some(t);
        }
    }
    None
}

fn reindex(j: usize, pinned: usize) -> usize {
    if j < pinned {
        j
    } else {
        j - 1
    }
}

/// `sum(coeffs[i] * x_i) >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Constraint {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Constraint {
    fn normalized(mut self) -> Self {
        let scale = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.abs())
            .or_else(|| (!self.rhs.is_zero()).then(|| self.rhs.abs()));
        if let Some(s) = scale {
            let inv = s.recip().expect("nonzero scale");
            for c in self.coeffs.iter_mut() {
                *c = &*c * &inv;
            }
            self.rhs = &self.rhs * &inv;
        }
        self
    }
}

/// Exact Fourier-Motzkin feasibility with witness extraction.
/// Variables are eliminated from the highest index down; a surviving
/// constant constraint `0 >= rhs` with positive rhs refutes the system.
#[allow(clippy::needless_range_loop)]
fn fourier_motzkin(constraints: Vec<Constraint>, nvars: usize) -> Option<Vec<Rational>> {
    let mut current = constraints;
    let mut steps: Vec<(Vec<Constraint>, Vec<Constraint>)> = Vec::new();
    for v in (0..nvars).rev() {
        // constants first: they must already hold
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        let mut rest = Vec::new();
        for c in current {
            if c.coeffs.iter().all(Rational::is_zero) {
                if c.rhs.is_positive() {
                    return None;
                }
                continue;
            }
            match c.coeffs[v].signum() {
                1 => lowers.push(c),
                -1 => uppers.push(c),
                _ => rest.push(c),
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut next: Vec<Constraint> = Vec::new();
        for c in rest {
            let c = c.normalized();
            if seen.insert(c.clone()) {
                next.push(c);
            }
        }
        for l in &lowers {
            for u in &uppers {
                let lf = -&u.coeffs[v]; // positive
                let uf = l.coeffs[v].clone(); // positive
                let coeffs: Vec<Rational> = (0..l.coeffs.len())
                    .map(|j| &(&lf * &l.coeffs[j]) + &(&uf * &u.coeffs[j]))
                    .collect();
                debug_assert!(coeffs[v].is_zero());
                let rhs = &(&lf * &l.rhs) + &(&uf * &u.rhs);
                let c = Constraint { coeffs, rhs };
                if c.coeffs.iter().all(Rational::is_zero) {
                    if c.rhs.is_positive() {
                        return None;
                    }
                    continue;
                }
                let c = c.normalized();
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        steps.push((lowers, uppers));
        current = next;
    }
    for c in &current {
        if c.rhs.is_positive() {
            return None;
        }
    }
    // feasible: choose values from the lowest variable up
    let mut x = vec![Rational::zero(); nvars];
    for (v, (lowers, uppers)) in steps.iter().enumerate().rev().map(|(i, s)| (nvars - 1 - i, s)) {
        let eval = |c: &Constraint| -> Rational {
            let mut acc = c.rhs.clone();
            for j in 0..v {
                acc = &acc - &(&c.coeffs[j] * &x[j]);
            }
            &acc / &c.coeffs[v]
        };
        let lo = lowers.iter().map(&eval).max();
        let hi = uppers.iter().map(&eval).min();
        x[v] = match (lo, hi) {
            (Some(lo), Some(hi)) => {
                debug_assert!(lo <= hi, "feasible interval collapsed");
                lo
            }
            (Some(lo), None) => lo,
            (None, Some(hi)) => {
                if hi.is_negative() {
                    hi
                } else {
                    Rational::zero()
                }
            }
            (None, None) => Rational::zero(),
        };
    }
    Some(x)
}

/// All real solutions of the two-dimensional idempotent system via
/// companion-matrix roots of the quartic, independent of the
/// discriminant classification.
pub fn idempotent_search_n2(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<SearchReport, OracleError> {
    for (v, name) in [(a, "a"), (b, "b"), (c, "c"), (d, "d")] {
        if v.is_zero() {
            return Err(OracleError::ZeroCoefficient { which: name });
        }
    }
    let disc = &(b * d) - &(a * c);
    // quartic (bd-ac)^2 x^4 - 2b(bd-ac) x^3 + (b^2+cd) x^2 - c x + 0
    let coeffs = [
        &disc * &disc,
        -&(&(&Rational::from_integer(2) * b) * &disc),
        &(b * b) + &(c * d),
        -c,
        Rational::zero(),
    ];
    let xs = real_roots(&coeffs);
    let (bf, cf, df, af) = (b.to_f64(), c.to_f64(), d.to_f64(), a.to_f64());
    let discf = disc.to_f64();
    let mut points = Vec::new();
    for x in xs {
        let y = (bf * x - discf * x * x) / cf;
        let r1 = (af * x * x + bf * y * y - y).abs();
        let r2 = (df * x * x + cf * y * y - x).abs();
        if r1 <= NUMERIC_TOLERANCE && r2 <= NUMERIC_TOLERANCE {
            points.push(vec![x, y]);
        }
    }
    points.sort_by(|l, r| l[0].partial_cmp(&r[0]).expect("finite roots"));
    Ok(SearchReport {
        instance: format!("idempotent n=2 (a={a}, b={b}, c={c}, d={d})"),
        method: OracleMethod::NumericRoots,
        exhausted: false,
        nontrivial: !points.is_empty(),
        witness_squares: None,
        points,
    })
}

/// Distinct real roots of a rational-coefficient polynomial given in
/// descending powers. Exact leading zeros are trimmed and the exact
/// square-free part is extracted first (so multiple roots emerge as
/// clean simple roots); the remaining simple roots come from
/// companion-matrix eigenvalues with Newton polishing. Roots closer
/// than [`ROOT_SEPARATION`] are merged and values whose monic residual
/// exceeds [`NUMERIC_TOLERANCE`] are rejected.
pub fn real_roots(coeffs_desc: &[Rational]) -> Vec<f64> {
    let Some(start) = coeffs_desc.iter().position(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let trimmed = square_free_part(&coeffs_desc[start..]);
    if trimmed.len() < 2 {
        return Vec::new();
    }
    let lead = &trimmed[0];
    let monic: Vec<f64> = trimmed[1..].iter().map(|c| (c / lead).to_f64()).collect();
    let poly: Vec<f64> = std::iter::once(1.0).chain(monic.iter().copied()).collect();
    let mut out: Vec<f64> = Vec::new();
    for root in companion_real_roots(&monic) {
        let mut x = root;
        for _ in 0..3 {
            x = newton_step(x, &poly);
        }
        if poly_eval(x, &poly).abs() <= NUMERIC_TOLERANCE
            && !out.iter().any(|&seen| (seen - x).abs() <= ROOT_SEPARATION)
        {
            out.push(x);
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    out
}

/// `p / gcd(p, p')`, exactly: same distinct roots, all simple.
fn square_free_part(p: &[Rational]) -> Vec<Rational> {
    let derivative: Vec<Rational> = p[..p.len() - 1]
        .iter()
        .enumerate()
        .map(|(i, c)| c * &Rational::from_integer((p.len() - 1 - i) as i64))
        .collect();
    let g = poly_gcd(p.to_vec(), derivative);
    if g.len() <= 1 {
        return p.to_vec();
    }
    let (q, r) = poly_div_rem(p.to_vec(), &g);
    debug_assert!(r.iter().all(Rational::is_zero));
    q
}

/// Monic gcd by the Euclidean algorithm over the rationals.
fn poly_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    a = trim_poly(a);
    b = trim_poly(b);
    while !b.is_empty() {
        let (_, r) = poly_div_rem(a, &b);
        a = b;
        b = trim_poly(r);
    }
    if let Some(lead) = a.first().cloned() {
        let inv = lead.recip().expect("leading coefficient nonzero");
        for c in a.iter_mut() {
            *c = &*c * &inv;
        }
    }
    a
}

fn trim_poly(p: Vec<Rational>) -> Vec<Rational> {
    let start = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    p[start..].to_vec()
}

/// Euclidean division of dense descending-power polynomials.
fn poly_div_rem(mut num: Vec<Rational>, den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!den.is_empty());
    if num.len() < den.len() {
        return (Vec::new(), num);
    }
    let qlen = num.len() - den.len() + 1;
    let mut quot = vec![Rational::zero(); qlen];
    for i in 0..qlen {
        if num[i].is_zero() {
            continue;
        }
        let f = &num[i] / &den[0];
        for (j, d) in den.iter().enumerate() {
            let delta = &f * d;
            num[i + j] = &num[i + j] - &delta;
        }
        quot[i] = f;
    }
    (quot, num[qlen..].to_vec())
}

/// Real eigenvalues of the companion matrix of
/// `x^k + monic_rest[0] x^{k-1} + ... + monic_rest[k-1]`.
fn companion_real_roots(monic_rest: &[f64]) -> Vec<f64> {
    let k = monic_rest.len();
    if k == 0 {
        return Vec::new();
    }
    if k == 1 {
        return vec![-monic_rest[0]];
    }
    let m = DMatrix::<f64>::from_fn(k, k, |i, j| {
        if j == k - 1 {
            -monic_rest[k - 1 - i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() <= 1e-8 * (1.0 + z.re.abs()))
        .map(|z| z.re)
        .collect()
}

fn poly_eval(x: f64, poly: &[f64]) -> f64 {
    poly.iter().fold(0.0, |acc, c| acc * x + c)
}

fn newton_step(x: f64, poly: &[f64]) -> f64 {
    let f = poly_eval(x, poly);
    let dcoeffs: Vec<f64> = poly[..poly.len() - 1]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (poly.len() - 1 - i) as f64)
        .collect();
    let df = poly_eval(x, &dcoeffs);
    if df.abs() < f64::EPSILON {
        x
    } else {
        x - f / df
    }
}

/// Which defining equation a point is substituted into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DefiningSystem {
    Nilpotent,
    Idempotent,
}

/// Infinity-norm residual of `x^2 = 0` or `x^2 = x`; exact when all
/// coordinates are rational.
pub fn substitution_residual(
    a: &PermEvolutionAlgebra,
    coords: &[RealNum],
    system: DefiningSystem,
) -> RealNum {
    let exact: Option<Vec<Rational>> = coords.iter().map(|c| c.as_exact().cloned()).collect();
    match exact {
        Some(rs) => {
            let x = crate::algebra::Element::new(rs);
            let sq = a.square(&x).expect("dimension checked by caller");
            let mut worst = Rational::zero();
            for i in 1..=a.dim() {
                let target = match system {
                    DefiningSystem::Nilpotent => Rational::zero(),
                    DefiningSystem::Idempotent => x.coord(i).clone(),
                };
                let r = (sq.coord(i) - &target).abs();
                if r > worst {
                    worst = r;
                }
            }
            RealNum::Exact(worst)
        }
        None => {
            let fs: Vec<f64> = coords.iter().map(RealNum::to_f64).collect();
            let sq = idempotent::square_f64(a, &fs);
            let worst = fs
                .iter()
                .zip(&sq)
                .map(|(x, s)| match system {
                    DefiningSystem::Nilpotent => s.abs(),
                    DefiningSystem::Idempotent => (s - x).abs(),
                })
                .fold(0.0, f64::max);
            RealNum::Approx(worst)
        }
    }
}
