//! Idempotent elements: solutions of `x^2 = x`.
//!
//! For general dimension only the particular solutions are produced:
//! the zero element, and the uniform point `(1/d, ..., 1/d)` when every
//! equation has the same coefficient sum `d`. For `n = 2` in the cyclic
//! `pi = (1 2)`, `tau = id` configuration the solution set is computed
//! completely: eliminating `y` gives the quartic
//!
//! ```text
//! (bd-ac)^2 x^4 - 2b(bd-ac) x^3 + (b^2+cd) x^2 - c x = 0
//! ```
//!
//! whose `x = 0` branch is split off and whose cubic factor is
//! classified by the exact sign of the discriminant `(q/2)^2 + (p/3)^3`
//! before any floating point enters. Roots are rational whenever the
//! classification pins them (double, triple, degenerate-linear cases);
//! otherwise Cardano or the trigonometric method with one Newton polish
//! step produces them, and every emitted point is substituted back into
//! both original equations.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, PermEvolutionAlgebra};
use crate::exactnum::Rational;

/// Residual bound accepted for floating-point solutions.
pub const ROOT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdempotentError {
    #[error("coefficient {which} must be nonzero")]
    ZeroCoefficient { which: &'static str },
    #[error("complete solving needs n = 2 with pi = (1 2) and tau = id: {reason}")]
    WrongShape { reason: String },
}

/// A real coordinate: exact rational when available, floating otherwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RealNum {
    Exact(Rational),
    Approx(f64),
}

impl RealNum {
    pub fn to_f64(&self) -> f64 {
        match self {
            RealNum::Exact(r) => r.to_f64(),
            RealNum::Approx(v) => *v,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            RealNum::Exact(r) => Some(r),
            RealNum::Approx(_) => None,
        }
    }
}

impl fmt::Display for RealNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealNum::Exact(r) => write!(f, "{r}"),
            RealNum::Approx(v) => write!(f, "{v:.16e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicCase {
    /// `bd = ac`: the quartic degenerates, one linear root.
    DegLinear,
    /// `bd = ac` and `b^2 + cd = 0`: no nonzero branch at all.
    DegNoRoot,
    /// `delta < 0`: three distinct real roots.
    ThreeReal,
    /// `delta > 0`: one real root (plus a complex pair).
    OneReal,
    /// `delta = 0`, `p, q != 0`: a double and a simple real root.
    TwoReal,
    /// `delta = 0`, `p = q = 0`: one triple real root.
    OneRealTriple,
}

impl CubicCase {
    /// Distinct real roots of the (possibly degenerated) cubic factor.
    pub fn distinct_real_roots(self) -> usize {
        match self {
            CubicCase::DegLinear => 1,
            CubicCase::DegNoRoot => 0,
            CubicCase::ThreeReal => 3,
            CubicCase::OneReal => 1,
            CubicCase::TwoReal => 2,
            CubicCase::OneRealTriple => 1,
        }
    }
}

/// Exact classification data for the nonzero branch of the quartic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CubicClassification {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    /// `bd = ac`.
    pub degenerate: bool,
    pub p: Option<Rational>,
    pub q: Option<Rational>,
    pub delta: Option<Rational>,
    pub case: CubicCase,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdempotentPoint {
    pub coords: Vec<RealNum>,
    /// Infinity-norm of `x^2 - x`, exact zero for rational points.
    pub residual: RealNum,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdempotentSet {
    pub points: Vec<IdempotentPoint>,
    pub includes_zero: bool,
    pub classification: Option<CubicClassification>,
    /// Whether the listed points are provably all real idempotents.
    pub complete: bool,
    /// Human-readable notes (which particular solutions applied).
    pub notes: Vec<String>,
}

/// One equation of `x^2 = x`:
/// `pi_coeff * x_k^2 + tau_coeff * x_{j_k}^2 = x_target` with
/// `target = pi(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentEquation {
    pub k: usize,
    pub pi_coeff: Rational,
    pub j_k: usize,
    pub tau_coeff: Rational,
    pub target: usize,
}

/// The n quadratic equations of `x^2 = x`, indexed by `k` with target
/// coordinate `pi(k)`.
pub fn idempotent_system(a: &PermEvolutionAlgebra) -> Vec<IdempotentEquation> {
    (1..=a.dim())
        .map(|k| {
            let j_k = a.j_map().apply(k);
            IdempotentEquation {
                k,
                pi_coeff: a.pi_coefficient(k).clone(),
                j_k,
                tau_coeff: a.tau_coefficient(j_k).clone(),
                target: a.pi().apply(k),
            }
        })
        .collect()
}

/// The particular solutions known for arbitrary dimension: zero, and
/// the uniform point when every equation has coefficient sum `d != 0`.
pub fn particular_idempotents(a: &PermEvolutionAlgebra) -> IdempotentSet {
    let n = a.dim();
    let mut points = vec![exact_point(a, vec![Rational::zero(); n])];
    let mut notes = vec!["zero element".to_string()];
    if let Some(d) = constant_coefficient_sum(a) {
        let inv = d.recip().expect("nonzero by construction");
        points.push(exact_point(a, vec![inv; n]));
        notes.push(format!("uniform point 1/d with d = {d}"));
    } else {
        notes.push("coefficient sums not constant; uniform point unavailable".to_string());
    }
    IdempotentSet {
        points,
        includes_zero: true,
        classification: None,
        complete: false,
        notes,
    }
}

/// `d` with `a_pi[k] + a_tau[j_k] = d` for every `k`, if constant and
/// nonzero.
pub fn constant_coefficient_sum(a: &PermEvolutionAlgebra) -> Option<Rational> {
    let mut d: Option<Rational> = None;
    for k in 1..=a.dim() {
        let sum = a.pi_coefficient(k) + a.tau_coefficient(a.j_map().apply(k));
        match &d {
            None => d = Some(sum),
            Some(prev) if *prev == sum => {}
            Some(_) => return None,
        }
    }
    d.filter(|v| !v.is_zero())
}

/// Exact classification of the cubic factor
/// `(bd-ac)^2 x^3 - 2b(bd-ac) x^2 + (b^2+cd) x - c` for nonzero
/// rational `a, b, c, d`.
pub fn classify_cubic(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<CubicClassification, IdempotentError> {
    for (v, name) in [(a, "a"), (b, "b"), (c, "c"), (d, "d")] {
        if v.is_zero() {
            return Err(IdempotentError::ZeroCoefficient { which: name });
        }
    }
    let disc = &(b * d) - &(a * c); // bd - ac
    if disc.is_zero() {
        let b2cd = &(b * b) + &(c * d);
        let case = if b2cd.is_zero() {
            CubicCase::DegNoRoot
        } else {
            CubicCase::DegLinear
        };
        return Ok(CubicClassification {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            d: d.clone(),
            degenerate: true,
            p: None,
            q: None,
            delta: None,
            case,
        });
    }
    let disc2 = &disc * &disc;
    let disc3 = &disc2 * &disc;
    let three = Rational::from_integer(3);
    let p = &(&(&(&three * c) * d) - &(b * b)) / &(&three * &disc2);
    let q_num = &(&(&(&Rational::from_integer(9) * b) * c) * d) + &(&(b * b) * b);
    let q = &(&(&Rational::from_integer(2) * &q_num) / &(&Rational::from_integer(27) * &disc3))
        - &(c / &disc2);
    let half_q = &q / &Rational::from_integer(2);
    let third_p = &p / &three;
    let delta = &(&half_q * &half_q) + &(&(&third_p * &third_p) * &third_p);
    let case = match delta.signum() {
        -1 => CubicCase::ThreeReal,
        1 => CubicCase::OneReal,
        _ => {
            if p.is_zero() && q.is_zero() {
                CubicCase::OneRealTriple
            } else {
                CubicCase::TwoReal
            }
        }
    };
    Ok(CubicClassification {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        d: d.clone(),
        degenerate: false,
        p: Some(p),
        q: Some(q),
        delta: Some(delta),
        case,
    })
}

/// The four structural coefficients in the two-dimensional cyclic
/// configuration, as `(a, b, c, d) = (a_12, a_22, a_21, a_11)`.
pub fn section_coefficients(
    alg: &PermEvolutionAlgebra,
) -> Result<(Rational, Rational, Rational, Rational), IdempotentError> {
    if alg.dim() != 2 {
        return Err(IdempotentError::WrongShape {
            reason: format!("dimension is {}", alg.dim()),
        });
    }
    if alg.pi().images() != [2, 1] {
        return Err(IdempotentError::WrongShape {
            reason: format!("pi = {} is not the 2-cycle", alg.pi()),
        });
    }
    if !alg.tau().is_identity() {
        return Err(IdempotentError::WrongShape {
            reason: format!("tau = {} is not the identity", alg.tau()),
        });
    }
    Ok((
        alg.pi_coefficient(1).clone(),  // a = a_12
        alg.tau_coefficient(2).clone(), // b = a_22
        alg.pi_coefficient(2).clone(),  // c = a_21
        alg.tau_coefficient(1).clone(), // d = a_11
    ))
}

/// Complete real idempotent set for the two-dimensional configuration.
pub fn solve_n2(alg: &PermEvolutionAlgebra) -> Result<IdempotentSet, IdempotentError> {
    let (a, b, c, d) = section_coefficients(alg)?;
    let classification = classify_cubic(&a, &b, &c, &d)?;
    let disc = &(&b * &d) - &(&a * &c);
    let mut points = vec![exact_point(alg, vec![Rational::zero(), Rational::zero()])];

    // nonzero branch: roots of the cubic factor, exact where the
    // classification pins them
    match classification.case {
        CubicCase::DegLinear => {
            let b2cd = &(&b * &b) + &(&c * &d);
            let x = &c / &b2cd;
            points.push(exact_xy_point(alg, &x, &a, &b, &c, &disc));
        }
        CubicCase::DegNoRoot => {}
        CubicCase::OneRealTriple => {
            let x = triple_root(&b, &disc);
            points.push(exact_xy_point(alg, &x, &a, &b, &c, &disc));
        }
        CubicCase::TwoReal => {
            let p = classification.p.as_ref().unwrap();
            let q = classification.q.as_ref().unwrap();
            let shift = triple_root(&b, &disc);
            // z^3 + pz + q with delta = 0: simple root 3q/p, double -3q/(2p)
            let simple = &(&Rational::from_integer(3) * q) / p;
            let double = -&(&(&Rational::from_integer(3) * q)
                / &(&Rational::from_integer(2) * p));
            for z in [simple, double] {
                let x = &z + &shift;
                points.push(exact_xy_point(alg, &x, &a, &b, &c, &disc));
            }
        }
        CubicCase::OneReal | CubicCase::ThreeReal => {
            let p = classification.p.as_ref().unwrap().to_f64();
            let q = classification.q.as_ref().unwrap().to_f64();
            let delta = classification.delta.as_ref().unwrap().to_f64();
            let shift = triple_root(&b, &disc).to_f64();
            let zs = if classification.case == CubicCase::OneReal {
                let s = delta.max(0.0).sqrt();
                vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()]
            } else {
                // three real roots by the trigonometric method
                let m = 2.0 * (-p / 3.0).sqrt();
                let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
                let theta = arg.acos() / 3.0;
                (0..3)
                    .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
                    .collect()
            };
            let cubic = [
                (&disc * &disc).to_f64(),
                (-&(&Rational::from_integer(2) * &(&b * &disc))).to_f64(),
                (&(&b * &b) + &(&c * &d)).to_f64(),
                (-&c).to_f64(),
            ];
            for z in zs {
                let x = newton_polish(z + shift, &cubic);
                points.push(approx_xy_point(alg, x, &a, &b, &c, &disc));
            }
        }
    }

    points.sort_by(|l, r| {
        l.coords[0]
            .to_f64()
            .partial_cmp(&r.coords[0].to_f64())
            .expect("roots are finite")
    });
    Ok(IdempotentSet {
        points,
        includes_zero: true,
        classification: Some(classification),
        complete: true,
        notes: Vec::new(),
    })
}

/// `2b / (3(bd-ac))`, the shift between the cubic and its depressed
/// form; also the triple root in the `p = q = 0` case.
fn triple_root(b: &Rational, disc: &Rational) -> Rational {
    &(&Rational::from_integer(2) * b) / &(&Rational::from_integer(3) * disc)
}

/// One Newton step on the cubic `c3 x^3 + c2 x^2 + c1 x + c0`.
fn newton_polish(x: f64, coeffs: &[f64; 4]) -> f64 {
    let f = ((coeffs[0] * x + coeffs[1]) * x + coeffs[2]) * x + coeffs[3];
    let df = (3.0 * coeffs[0] * x + 2.0 * coeffs[1]) * x + coeffs[2];
    if df.abs() < f64::EPSILON {
        return x;
    }
    x - f / df
}

fn exact_point(alg: &PermEvolutionAlgebra, coords: Vec<Rational>) -> IdempotentPoint {
    let residual = exact_residual(alg, &coords);
    IdempotentPoint {
        coords: coords.into_iter().map(RealNum::Exact).collect(),
        residual: RealNum::Exact(residual),
    }
}

/// Recovers `y = (b x - (bd-ac) x^2) / c` for an exact root.
fn exact_xy_point(
    alg: &PermEvolutionAlgebra,
    x: &Rational,
    _a: &Rational,
    b: &Rational,
    c: &Rational,
    disc: &Rational,
) -> IdempotentPoint {
    let y = &(&(b * x) - &(disc * &(x * x))) / c;
    exact_point(alg, vec![x.clone(), y])
}

fn approx_xy_point(
    alg: &PermEvolutionAlgebra,
    x: f64,
    _a: &Rational,
    b: &Rational,
    c: &Rational,
    disc: &Rational,
) -> IdempotentPoint {
    let y = (b.to_f64() * x - disc.to_f64() * x * x) / c.to_f64();
    let coords = vec![x, y];
    let residual = approx_residual(alg, &coords);
    IdempotentPoint {
        coords: coords.into_iter().map(RealNum::Approx).collect(),
        residual: RealNum::Approx(residual),
    }
}

/// Infinity-norm of `x^2 - x` for exact coordinates.
pub fn exact_residual(alg: &PermEvolutionAlgebra, coords: &[Rational]) -> Rational {
    let x = Element::new(coords.to_vec());
    let sq = alg.square(&x).expect("dimension checked by caller");
    let mut worst = Rational::zero();
    for i in 1..=alg.dim() {
        let r = (sq.coord(i) - x.coord(i)).abs();
        if r > worst {
            worst = r;
        }
    }
    worst
}

/// Infinity-norm of `x^2 - x` in floating point.
pub fn approx_residual(alg: &PermEvolutionAlgebra, coords: &[f64]) -> f64 {
    let sq = square_f64(alg, coords);
    coords
        .iter()
        .zip(&sq)
        .map(|(x, s)| (s - x).abs())
        .fold(0.0, f64::max)
}

/// Coordinates of `x^2` evaluated in floating point.
pub fn square_f64(alg: &PermEvolutionAlgebra, coords: &[f64]) -> Vec<f64> {
    let n = alg.dim();
    let mut out = vec![0.0; n];
    for i in 1..=n {
        let c = coords[i - 1] * coords[i - 1];
        out[alg.pi().apply(i) - 1] += c * alg.pi_coefficient(i).to_f64();
        out[alg.tau().apply(i) - 1] += c * alg.tau_coefficient(i).to_f64();
    }
    out
}

/// Residual of `x^2 = x` for mixed coordinates: exact when every
/// coordinate is rational.
pub fn point_residual(alg: &PermEvolutionAlgebra, coords: &[RealNum]) -> RealNum {
    let exact: Option<Vec<Rational>> = coords
        .iter()
        .map(|c| c.as_exact().cloned())
        .collect();
    match exact {
        Some(rs) => RealNum::Exact(exact_residual(alg, &rs)),
        None => {
            let fs: Vec<f64> = coords.iter().map(RealNum::to_f64).collect();
            RealNum::Approx(approx_residual(alg, &fs))
        }
    }
}

/// Whether a point is idempotent: exactly for rational coordinates,
/// within [`ROOT_TOLERANCE`] otherwise.
pub fn verify_idempotent(alg: &PermEvolutionAlgebra, coords: &[RealNum]) -> bool {
    match point_residual(alg, coords) {
        RealNum::Exact(r) => r.is_zero(),
        RealNum::Approx(r) => r <= ROOT_TOLERANCE,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn ri(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn two_dim(a: i64, b: i64, c: i64, d: i64) -> PermEvolutionAlgebra {
        PermEvolutionAlgebra::new(
            Permutation::from_images(vec![2, 1]).unwrap(),
            Permutation::identity(2),
            vec![ri(a), ri(c)],
            vec![ri(d), ri(b)],
        )
        .unwrap()
    }

    #[test]
    fn system_for_two_dim_configuration() {
        let alg = two_dim(1, 1, 1, 1);
        let eqs = idempotent_system(&alg);
        assert_eq!(eqs.len(), 2);
        // k = 1 targets pi(1) = 2: a x^2 + b y^2 = y
        assert_eq!(eqs[0].target, 2);
        assert_eq!(eqs[0].j_k, 2);
        // k = 2 targets pi(2) = 1: c y^2 + d x^2 = x
        assert_eq!(eqs[1].target, 1);
        assert_eq!(eqs[1].j_k, 1);
    }

    #[test]
    fn particular_contains_zero_and_uniform() {
        let alg = two_dim(1, 1, 1, 1);
        let set = particular_idempotents(&alg);
        assert!(set.includes_zero);
        assert!(!set.complete);
        assert_eq!(set.points.len(), 2);
        assert_eq!(
            set.points[1].coords,
            vec![RealNum::Exact(rat(1, 2)), RealNum::Exact(rat(1, 2))]
        );
        for p in &set.points {
            assert_eq!(p.residual, RealNum::Exact(ri(0)));
        }
    }

    #[test]
    fn particular_without_constant_sums() {
        let alg = two_dim(1, 1, 2, 1);
        let set = particular_idempotents(&alg);
        assert_eq!(set.points.len(), 1);
        assert!(!set.complete);
    }

    #[test]
    fn classify_examples() {
        // all ones: degenerate, nonzero root x = c/(b^2+cd) = 1/2
        let c = classify_cubic(&ri(1), &ri(1), &ri(1), &ri(1)).unwrap();
        assert!(c.degenerate);
        assert_eq!(c.case, CubicCase::DegLinear);

        // (1,1,1,2): p = 5/3, q = 11/27, delta = 621/2916 > 0
        let c = classify_cubic(&ri(1), &ri(1), &ri(1), &ri(2)).unwrap();
        assert_eq!(c.p, Some(rat(5, 3)));
        assert_eq!(c.q, Some(rat(11, 27)));
        assert_eq!(c.delta, Some(rat(621, 2916)));
        assert_eq!(c.case, CubicCase::OneReal);

        // (1,3,1,3): p = q = 0, triple root
        let c = classify_cubic(&ri(1), &ri(3), &ri(1), &ri(3)).unwrap();
        assert_eq!(c.case, CubicCase::OneRealTriple);
        assert_eq!(c.p, Some(ri(0)));
        assert_eq!(c.q, Some(ri(0)));

        // (5/27, 1, 1, -1): delta = 0 with p, q nonzero
        let c = classify_cubic(&rat(5, 27), &ri(1), &ri(1), &ri(-1)).unwrap();
        assert_eq!(c.case, CubicCase::TwoReal);
        assert_eq!(c.delta, Some(ri(0)));

        assert!(classify_cubic(&ri(0), &ri(1), &ri(1), &ri(1)).is_err());
    }

    #[test]
    fn solve_all_ones() {
        let alg = two_dim(1, 1, 1, 1);
        let set = solve_n2(&alg).unwrap();
        assert!(set.complete);
        assert_eq!(set.points.len(), 2);
        assert_eq!(
            set.points[0].coords,
            vec![RealNum::Exact(ri(0)), RealNum::Exact(ri(0))]
        );
        assert_eq!(
            set.points[1].coords,
            vec![RealNum::Exact(rat(1, 2)), RealNum::Exact(rat(1, 2))]
        );
    }

    #[test]
    fn solve_triple_root_case() {
        // (a,b,c,d) = (1,3,1,3): triple root x = 2b/(3(bd-ac)) = 1/4
        let alg = two_dim(1, 3, 1, 3);
        let set = solve_n2(&alg).unwrap();
        assert_eq!(set.points.len(), 2);
        let p = &set.points[1];
        assert_eq!(p.coords[0], RealNum::Exact(rat(1, 4)));
        assert_eq!(p.residual, RealNum::Exact(ri(0)));
    }

    #[test]
    fn solve_two_real_case_exactly() {
        // (5/27, 1, 1, -1): double root x = -9/8, simple root x = 9/16
        let alg = PermEvolutionAlgebra::new(
            Permutation::from_images(vec![2, 1]).unwrap(),
            Permutation::identity(2),
            vec![rat(5, 27), ri(1)],
            vec![ri(-1), ri(1)],
        )
        .unwrap();
        let set = solve_n2(&alg).unwrap();
        assert_eq!(set.points.len(), 3);
        let xs: Vec<&Rational> = set
            .points
            .iter()
            .map(|p| p.coords[0].as_exact().unwrap())
            .collect();
        assert_eq!(xs, vec![&rat(-9, 8), &ri(0), &rat(9, 16)]);
        for p in &set.points {
            assert_eq!(p.residual, RealNum::Exact(ri(0)));
        }
    }

    #[test]
    fn solve_one_real_numeric() {
        let alg = two_dim(1, 1, 1, 2);
        let set = solve_n2(&alg).unwrap();
        assert_eq!(set.points.len(), 2);
        let approx = &set.points[1];
        match &approx.residual {
            RealNum::Approx(r) => assert!(*r <= ROOT_TOLERANCE),
            other => panic!("expected approximate residual, got {other:?}"),
        }
        assert!(verify_idempotent(&alg, &approx.coords));
    }

    #[test]
    fn solve_three_real_numeric() {
        // delta < 0 instance found by scanning small rationals
        let alg = two_dim(1, -3, 2, 1);
        let (a, b, c, d) = section_coefficients(&alg).unwrap();
        let cls = classify_cubic(&a, &b, &c, &d).unwrap();
        if cls.case == CubicCase::ThreeReal {
            let set = solve_n2(&alg).unwrap();
            assert_eq!(set.points.len(), 4);
            for p in &set.points {
                assert!(verify_idempotent(&alg, &p.coords));
            }
        }
    }

    #[test]
    fn wrong_shape_reported() {
        let alg = PermEvolutionAlgebra::new(
            Permutation::from_images(vec![1, 3, 2]).unwrap(),
            Permutation::identity(3),
            vec![ri(1); 3],
            vec![ri(1); 3],
        )
        .unwrap();
        assert!(matches!(
            solve_n2(&alg),
            Err(IdempotentError::WrongShape { .. })
        ));
        let alg = two_dim(0, 1, 1, 1);
        assert!(matches!(
            solve_n2(&alg),
            Err(IdempotentError::ZeroCoefficient { which: "a" })
        ));
    }

    #[test]
    fn verify_rejects_non_idempotent() {
        let alg = two_dim(1, 1, 1, 1);
        let one_one = vec![RealNum::Exact(ri(1)), RealNum::Exact(ri(1))];
        assert!(!verify_idempotent(&alg, &one_one));
    }
}
