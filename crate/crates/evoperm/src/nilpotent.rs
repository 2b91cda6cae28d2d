//! Absolute nilpotent elements: all solutions of `x^2 = 0`.
//!
//! Writing `u_i = x_i^2`, the equations decouple along the cycles of the
//! map `j: k -> tau^{-1}(pi(k))`; on a cycle `(l_1 .. l_p)` they read
//!
//! ```text
//! a_pi[l_k] * u_{l_k} + a_tau[l_{k+1}] * u_{l_{k+1}} = 0,   k = 1..p (cyclic)
//! ```
//!
//! Each equation either links two consecutive squares by a positive
//! ratio, pins one or both of them to zero, or vanishes identically.
//! Solving a cycle is therefore pure constraint propagation, and the
//! solution set is a product of independent one-parameter scaling
//! families. A nontrivial family around the *whole* cycle additionally
//! needs the closure product of the step ratios to equal 1.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Element, PermEvolutionAlgebra};
use crate::exactnum::{
    reduced_coefficients, sqrt_normalize, ExactError, Rational, RationalMatrix, SqrtRational,
};

/// One equation of the per-cycle system in the squared variables:
/// `left_coeff * u_left + right_coeff * u_right = 0`, contributing to
/// the `e_target` coordinate of `x^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleEquation {
    pub left_index: usize,
    pub left_coeff: Rational,
    pub right_index: usize,
    pub right_coeff: Rational,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleEquations {
    pub cycle: Vec<usize>,
    pub equations: Vec<CycleEquation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquaredSystem {
    pub cycles: Vec<CycleEquations>,
}

/// A set of coordinates scaling together in one parameter:
/// `|x_{positions[m]}| = ratios[m] * t` with independent signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalingFamily {
    pub positions: Vec<usize>,
    pub ratios: Vec<SqrtRational>,
}

impl ScalingFamily {
    fn singleton(position: usize) -> Self {
        ScalingFamily {
            positions: vec![position],
            ratios: vec![SqrtRational::one()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleKind {
    /// Only the all-zero assignment solves this cycle.
    TrivialOnly,
    /// Coordinates whose pi- and tau-coefficients both vanish are free;
    /// every other coordinate of the cycle is zero.
    FreeCoordinates { positions: Vec<usize> },
    /// The whole cycle scales in one parameter:
    /// `|x_{l_k}| = ratios[k-1] * |x_{l_1}|`, each sign independent.
    OneParamFamily {
        ratios: Vec<SqrtRational>,
        sign_freedom: bool,
    },
    /// Zero coefficients cut the cycle into independent scaling
    /// families (at least one of size > 1).
    SplitFamilies { families: Vec<ScalingFamily> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSolution {
    pub cycle: Vec<usize>,
    pub kind: CycleKind,
}

impl CycleSolution {
    pub fn is_trivial_only(&self) -> bool {
        matches!(self.kind, CycleKind::TrivialOnly)
    }

    /// The independent scaling families of this cycle's solution set.
    pub fn families(&self) -> Vec<ScalingFamily> {
        match &self.kind {
            CycleKind::TrivialOnly => Vec::new(),
            CycleKind::FreeCoordinates { positions } => positions
                .iter()
                .map(|&p| ScalingFamily::singleton(p))
                .collect(),
            CycleKind::OneParamFamily { ratios, .. } => vec![ScalingFamily {
                positions: self.cycle.clone(),
                ratios: ratios.clone(),
            }],
            CycleKind::SplitFamilies { families } => families.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriterionStatus {
    Certifies,
    DoesNotCertify,
    Inapplicable,
}

impl CriterionStatus {
    pub fn certifies(self) -> bool {
        self == CriterionStatus::Certifies
    }
}

/// Details for the rank-(n-1) determinant criterion: sign of
/// `det(M_i0n) * det(M_{n-1})` computed on the pivoted row/column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankN1Details {
    /// Determinant of the pivot minor (`det(M_{n-1})` up to the
    /// recorded row/column selection).
    pub pivot_det: Rational,
    /// `det(M_{i,free})` for each dependent unknown, in pivot order.
    pub minor_dets: Vec<Rational>,
    /// 1-indexed unknown certifying positivity, if any.
    pub certifying_index: Option<usize>,
    /// The certifying product `det(M_i0n) * det(M_{n-1})`.
    pub product: Option<Rational>,
}

/// Details for the rank-(n-2) criterion: the reduced matrix `D` with
/// `u_dep[i] = -(D[i][0] u_free1 + D[i][1] u_free2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankN2Details {
    pub dependent: Vec<usize>,
    pub free: Vec<usize>,
    pub coefficients: RationalMatrix,
    /// 1-indexed dependent unknown whose row of `D` is strictly
    /// positive, if any.
    pub certifying_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessCriteria {
    pub det: Rational,
    pub rank: usize,
    pub det_nonzero: CriterionStatus,
    pub rank_n1: CriterionStatus,
    pub sign_products: CriterionStatus,
    pub rank_n2: CriterionStatus,
    pub rank_n1_details: Option<RankN1Details>,
    pub rank_n2_details: Option<RankN2Details>,
}

impl UniquenessCriteria {
    /// Names of the criteria that certified uniqueness.
    pub fn fired(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.det_nonzero.certifies() {
            out.push("det-nonzero");
        }
        if self.rank_n1.certifies() {
            out.push("rank-n1-minors");
        }
        if self.sign_products.certifies() {
            out.push("sign-products");
        }
        if self.rank_n2.certifies() {
            out.push("rank-n2-reduced");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentReport {
    pub dim: usize,
    pub j_map: Vec<usize>,
    pub per_cycle: Vec<CycleSolution>,
    pub unique: bool,
    pub criteria: UniquenessCriteria,
}

impl NilpotentReport {
    /// Exact squares of a nontrivial absolute nilpotent (every family
    /// head set to 1), or `None` when the zero element is the only one.
    pub fn witness_squares(&self) -> Option<Vec<Rational>> {
        if self.unique {
            return None;
        }
        let mut u = vec![Rational::zero(); self.dim];
        for sol in &self.per_cycle {
            for family in sol.families() {
                for (pos, ratio) in family.positions.iter().zip(&family.ratios) {
                    u[pos - 1] = ratio.square();
                }
            }
        }
        Some(u)
    }
}

/// The per-cycle systems of the squared-variable equations.
pub fn squared_system(a: &PermEvolutionAlgebra) -> SquaredSystem {
    let cycles = a
        .j_map()
        .cycles()
        .cycles()
        .iter()
        .map(|cycle| {
            let p = cycle.len();
            let equations = (0..p)
                .map(|k| {
                    let l = cycle[k];
                    let next = cycle[(k + 1) % p];
                    CycleEquation {
                        left_index: l,
                        left_coeff: a.pi_coefficient(l).clone(),
                        right_index: next,
                        right_coeff: a.tau_coefficient(next).clone(),
                        target: a.pi().apply(l),
                    }
                })
                .collect();
            CycleEquations {
                cycle: cycle.clone(),
                equations,
            }
        })
        .collect();
    SquaredSystem { cycles }
}

/// Complete description of the absolute nilpotent elements.
pub fn solve(a: &PermEvolutionAlgebra) -> NilpotentReport {
    let per_cycle: Vec<CycleSolution> = a
        .j_map()
        .cycles()
        .cycles()
        .iter()
        .map(|cycle| solve_cycle(a, cycle))
        .collect();
    let unique = per_cycle.iter().all(CycleSolution::is_trivial_only);
    NilpotentReport {
        dim: a.dim(),
        j_map: a.j_map().images().to_vec(),
        per_cycle,
        unique,
        criteria: criteria(a),
    }
}

fn solve_cycle(a: &PermEvolutionAlgebra, cycle: &[usize]) -> CycleSolution {
    let p = cycle.len();
    let alpha: Vec<&Rational> = cycle.iter().map(|&l| a.pi_coefficient(l)).collect();
    let beta: Vec<&Rational> = cycle.iter().map(|&l| a.tau_coefficient(l)).collect();

    // Edge k couples u at cycle position k with position k+1 (mod p).
    // link[k] holds the positive step ratio rho_k with
    // u_{k+1} = rho_k * u_k when both coefficients are nonzero and of
    // opposite sign; every other pattern pins coordinates to zero or
    // drops the equation.
    let mut zero = vec![false; p];
    let mut link: Vec<Option<Rational>> = vec![None; p];
    for k in 0..p {
        let next = (k + 1) % p;
        match (alpha[k].is_zero(), beta[next].is_zero()) {
            (false, false) => {
                let rho = -(alpha[k] / beta[next]);
                if rho.is_positive() {
                    link[k] = Some(rho);
                } else {
                    zero[k] = true;
                    zero[next] = true;
                }
            }
            (false, true) => zero[k] = true,
            (true, false) => zero[next] = true,
            (true, true) => {}
        }
    }
    // zeros propagate both ways across links
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..p {
            if link[k].is_some() {
                let next = (k + 1) % p;
                if zero[k] != zero[next] {
                    zero[k] = true;
                    zero[next] = true;
                    changed = true;
                }
            }
        }
    }

    if zero.iter().all(|z| !z) && link.iter().all(Option::is_some) {
        // unbroken cycle: nontrivial solutions need the closure product 1
        let closure = link
            .iter()
            .fold(Rational::one(), |acc, rho| &acc * rho.as_ref().unwrap());
        if closure == Rational::one() {
            let mut ratios = Vec::with_capacity(p);
            let mut r_sq = Rational::one();
            ratios.push(sqrt_normalize(&r_sq).unwrap());
            for rho in link.iter().take(p - 1) {
                r_sq = &r_sq * rho.as_ref().unwrap();
                ratios.push(sqrt_normalize(&r_sq).unwrap());
            }
            return CycleSolution {
                cycle: cycle.to_vec(),
                kind: CycleKind::OneParamFamily {
                    ratios,
                    sign_freedom: true,
                },
            };
        }
        return CycleSolution {
            cycle: cycle.to_vec(),
            kind: CycleKind::TrivialOnly,
        };
    }

    if zero.iter().all(|&z| z) {
        return CycleSolution {
            cycle: cycle.to_vec(),
            kind: CycleKind::TrivialOnly,
        };
    }

    // The surviving coordinates form arcs chained by link edges; each
    // arc is an independent scaling family.
    let linked = |k: usize| link[k].is_some() && !zero[k];
    let mut families = Vec::new();
    for s in 0..p {
        if zero[s] || linked((s + p - 1) % p) {
            continue; // pinned, or interior of an arc
        }
        let mut positions = vec![cycle[s]];
        let mut ratios = vec![SqrtRational::one()];
        let mut r_sq = Rational::one();
        let mut k = s;
        while linked(k) {
            r_sq = &r_sq * link[k].as_ref().unwrap();
            k = (k + 1) % p;
            positions.push(cycle[k]);
            ratios.push(sqrt_normalize(&r_sq).unwrap());
        }
        families.push(ScalingFamily { positions, ratios });
    }
    debug_assert!(!families.is_empty());

    if families.iter().all(|f| f.positions.len() == 1) {
        let positions: Vec<usize> = families.iter().map(|f| f.positions[0]).collect();
        debug_assert!(positions
            .iter()
            .all(|&l| a.pi_coefficient(l).is_zero() && a.tau_coefficient(l).is_zero()));
        return CycleSolution {
            cycle: cycle.to_vec(),
            kind: CycleKind::FreeCoordinates { positions },
        };
    }
    CycleSolution {
        cycle: cycle.to_vec(),
        kind: CycleKind::SplitFamilies { families },
    }
}

/// All four uniqueness criteria, evaluated exactly.
pub fn criteria(a: &PermEvolutionAlgebra) -> UniquenessCriteria {
    let n = a.dim();
    let s = a.system_matrix();
    let det = s.det().expect("system matrix is square");
    let rank = s.rank();

    let det_nonzero = if det.is_zero() {
        CriterionStatus::DoesNotCertify
    } else {
        CriterionStatus::Certifies
    };

    let (rank_n1, rank_n1_details) = if !det.is_zero() || n == 0 || rank != n - 1 {
        (CriterionStatus::Inapplicable, None)
    } else {
        let red = reduced_coefficients(&s, n - 1).expect("rank just computed");
        let minor_dets: Vec<Rational> = (0..n - 1).map(|i| red.minor_det(i, 0)).collect();
        let certifying = (0..n - 1).find(|&i| red.coefficients.get(i, 0).is_positive());
        let details = RankN1Details {
            pivot_det: red.pivot_det.clone(),
            minor_dets: minor_dets.clone(),
            certifying_index: certifying.map(|i| red.dependent_cols[i] + 1),
            product: certifying.map(|i| &minor_dets[i] * &red.pivot_det),
        };
        let status = if certifying.is_some() {
            CriterionStatus::Certifies
        } else {
            CriterionStatus::DoesNotCertify
        };
        (status, Some(details))
    };

    let sign_products = if (1..=n).all(|k| {
        let j_k = a.j_map().apply(k);
        (a.pi_coefficient(k) * a.tau_coefficient(j_k)).is_positive()
    }) {
        CriterionStatus::Certifies
    } else {
        CriterionStatus::DoesNotCertify
    };

    let (rank_n2, rank_n2_details) = if !det.is_zero() || n < 2 || rank != n - 2 {
        (CriterionStatus::Inapplicable, None)
    } else {
        let red = reduced_coefficients(&s, n - 2).expect("rank just computed");
        let certifying = (0..n - 2).find(|&i| {
            red.coefficients.get(i, 0).is_positive() && red.coefficients.get(i, 1).is_positive()
        });
        let details = RankN2Details {
            dependent: red.dependent_cols.iter().map(|c| c + 1).collect(),
            free: red.free_cols.iter().map(|c| c + 1).collect(),
            coefficients: red.coefficients.clone(),
            certifying_index: certifying.map(|i| red.dependent_cols[i] + 1),
        };
        let status = if certifying.is_some() {
            CriterionStatus::Certifies
        } else {
            CriterionStatus::DoesNotCertify
        };
        (status, Some(details))
    };

    UniquenessCriteria {
        det,
        rank,
        det_nonzero,
        rank_n1,
        sign_products,
        rank_n2,
        rank_n1_details,
        rank_n2_details,
    }
}

pub fn uniqueness_by_det(a: &PermEvolutionAlgebra) -> bool {
    !a.system_matrix().det().expect("square").is_zero()
}

pub fn uniqueness_rank_n1(a: &PermEvolutionAlgebra) -> bool {
    criteria(a).rank_n1.certifies()
}

pub fn uniqueness_sign(a: &PermEvolutionAlgebra) -> bool {
    criteria(a).sign_products.certifies()
}

pub fn uniqueness_rank_n2(a: &PermEvolutionAlgebra) -> bool {
    criteria(a).rank_n2.certifies()
}

/// Decides exactly whether some `(u, v) >= 0`, `(u, v) != (0, 0)`
/// satisfies `-(d[i][0] u + d[i][1] v) >= 0` for every row `i`.
///
/// The feasible set is a closed convex cone in the quadrant; when it is
/// more than the origin it contains an extreme ray lying on an axis or
/// on the boundary line of some constraint, so testing those finitely
/// many rays decides feasibility.
pub fn cone_oracle(d: &RationalMatrix) -> Result<bool, ExactError> {
    if d.cols() != 2 {
        return Err(ExactError::WrongColumnCount {
            expected: 2,
            got: d.cols(),
        });
    }
    let feasible = |u: &Rational, v: &Rational| -> bool {
        (0..d.rows()).all(|i| !(&(d.get(i, 0) * u) + &(d.get(i, 1) * v)).is_positive())
    };
    let mut candidates = vec![
        (Rational::one(), Rational::zero()),
        (Rational::zero(), Rational::one()),
    ];
    for i in 0..d.rows() {
        let d1 = d.get(i, 0);
        let d2 = d.get(i, 1);
        if (d1 * d2).is_negative() {
            candidates.push((d2.abs(), d1.abs()));
        }
    }
    Ok(candidates.iter().any(|(u, v)| feasible(u, v)))
}

/// Exact check `square(x) = 0` for a rational element.
pub fn verify_nilpotent(a: &PermEvolutionAlgebra, x: &Element) -> Result<bool, AlgebraError> {
    Ok(a.square(x)?.is_zero())
}

/// Largest absolute value of the squared-system residuals for an exact
/// vector of squares `u` (so irrational-magnitude witnesses can be
/// checked without leaving the rationals).
pub fn squares_residual(a: &PermEvolutionAlgebra, u: &[Rational]) -> Rational {
    let mut worst = Rational::zero();
    for k in 1..=a.dim() {
        let j_k = a.j_map().apply(k);
        let r = (a.pi_coefficient(k) * &u[k - 1]) + (a.tau_coefficient(j_k) * &u[j_k - 1]);
        let r = r.abs();
        if r > worst {
            worst = r;
        }
    }
    worst
}

/// U-space soundness check for a vector of squares.
pub fn verify_nilpotent_squares(a: &PermEvolutionAlgebra, u: &[Rational]) -> bool {
    u.len() == a.dim()
        && u.iter().all(|v| !v.is_negative())
        && squares_residual(a, u).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn ri(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn example1(a13: i64) -> PermEvolutionAlgebra {
        PermEvolutionAlgebra::new(
            Permutation::from_images(vec![3, 1, 4, 2]).unwrap(),
            Permutation::from_images(vec![2, 3, 4, 1]).unwrap(),
            vec![ri(a13), ri(1), ri(1), ri(1)],
            vec![ri(1); 4],
        )
        .unwrap()
    }

    fn example2() -> PermEvolutionAlgebra {
        PermEvolutionAlgebra::new(
            Permutation::from_images(vec![3, 2, 4, 1]).unwrap(),
            Permutation::from_images(vec![2, 3, 1, 4]).unwrap(),
            vec![ri(1); 4],
            vec![ri(1); 4],
        )
        .unwrap()
    }

    fn two_dim(a_pi: [i64; 2], a_tau: [i64; 2]) -> PermEvolutionAlgebra {
        PermEvolutionAlgebra::new(
            Permutation::from_images(vec![2, 1]).unwrap(),
            Permutation::identity(2),
            a_pi.iter().map(|&v| ri(v)).collect(),
            a_tau.iter().map(|&v| ri(v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn squared_system_of_example1() {
        let sys = squared_system(&example1(-1));
        assert_eq!(sys.cycles.len(), 2);
        assert_eq!(sys.cycles[0].cycle, vec![1, 2, 4]);
        assert_eq!(sys.cycles[1].cycle, vec![3]);
        // first displayed equation: a13 u1 + a23 u2 = 0, target e_3
        let eq = &sys.cycles[0].equations[0];
        assert_eq!((eq.left_index, eq.right_index, eq.target), (1, 2, 3));
        assert_eq!(eq.left_coeff, ri(-1));
        assert_eq!(eq.right_coeff, ri(1));
        // fixed-point cycle: a34 u3 + a34 u3 = 0
        let eq = &sys.cycles[1].equations[0];
        assert_eq!((eq.left_index, eq.right_index), (3, 3));
        assert_eq!(&eq.left_coeff + &eq.right_coeff, ri(2));
    }

    #[test]
    fn squared_system_when_j_is_identity() {
        // pi == tau (allowed through the unrestricted constructor) makes
        // every j-cycle a fixed point with equation (a_pi + a_tau) u = 0.
        let p = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let a = PermEvolutionAlgebra::new_unrestricted(
            p.clone(),
            p,
            vec![ri(1), ri(2), ri(3)],
            vec![ri(4), ri(5), ri(6)],
        )
        .unwrap();
        let sys = squared_system(&a);
        assert_eq!(sys.cycles.len(), 3);
        for (k, c) in sys.cycles.iter().enumerate() {
            assert_eq!(c.cycle, vec![k + 1]);
        }
    }

    #[test]
    fn example1_unique_with_rank_n1_certificate() {
        let report = solve(&example1(-1));
        assert!(report.unique);
        assert!(report.per_cycle.iter().all(|c| c.is_trivial_only()));
        let crit = &report.criteria;
        assert_eq!(crit.det, ri(0));
        assert_eq!(crit.rank, 3);
        assert_eq!(crit.det_nonzero, CriterionStatus::DoesNotCertify);
        assert_eq!(crit.rank_n1, CriterionStatus::Certifies);
        assert_eq!(crit.sign_products, CriterionStatus::DoesNotCertify);
        assert_eq!(crit.rank_n2, CriterionStatus::Inapplicable);
        let details = crit.rank_n1_details.as_ref().unwrap();
        assert_eq!(details.pivot_det, ri(-2));
        assert_eq!(details.product, Some(ri(4)));
    }

    #[test]
    fn example1_all_ones_det_fires() {
        // det of the equation-ordered system:
        // 2(a13 a21 a34 a42 + a12 a23 a34 a41) = 4
        let a = example1(1);
        let report = solve(&a);
        assert_eq!(
            a.equation_system_matrix().det().unwrap(),
            ri(4)
        );
        assert_eq!(report.criteria.det.abs(), ri(4));
        assert!(report.criteria.det_nonzero.certifies());
        assert!(report.unique);
    }

    #[test]
    fn example2_sign_criterion_fires() {
        let report = solve(&example2());
        assert!(report.unique);
        assert_eq!(report.criteria.det, ri(0));
        assert_eq!(report.criteria.rank, 2);
        assert!(report.criteria.sign_products.certifies());
        // rank-(n-2) applies but does not certify here: D = identity has
        // no strictly positive row, yet the solution is unique (this is
        // exactly the open converse direction).
        assert_eq!(report.criteria.rank_n2, CriterionStatus::DoesNotCertify);
    }

    #[test]
    fn one_param_family_on_a_two_cycle() {
        let a = two_dim([1, 1], [-1, -1]);
        let report = solve(&a);
        assert!(!report.unique);
        assert_eq!(report.per_cycle.len(), 1);
        match &report.per_cycle[0].kind {
            CycleKind::OneParamFamily {
                ratios,
                sign_freedom,
            } => {
                assert!(sign_freedom);
                assert_eq!(ratios.len(), 2);
                assert_eq!(ratios[0].square(), ri(1));
                assert_eq!(ratios[1].square(), ri(1));
            }
            other => panic!("expected one-parameter family, got {other:?}"),
        }
        let u = report.witness_squares().unwrap();
        assert!(verify_nilpotent_squares(&a, &u));
        // rational witness x = (1, 1) squares to zero
        let x = Element::new(vec![ri(1), ri(1)]);
        assert!(verify_nilpotent(&a, &x).unwrap());
    }

    #[test]
    fn closure_failure_is_trivial_only() {
        // steps both negative but closure product (1/2)*(1) != 1
        let a = two_dim([1, 1], [-1, -2]);
        let report = solve(&a);
        assert!(report.unique);
    }

    #[test]
    fn free_coordinate_case() {
        // position 1 has both coefficients zero, the rest nonzero
        let a = two_dim([0, 1], [0, -1]);
        let report = solve(&a);
        assert!(!report.unique);
        match &report.per_cycle[0].kind {
            CycleKind::FreeCoordinates { positions } => assert_eq!(positions, &vec![1]),
            other => panic!("expected free coordinate, got {other:?}"),
        }
        let u = report.witness_squares().unwrap();
        assert_eq!(u, vec![ri(1), ri(0)]);
        assert!(verify_nilpotent_squares(&a, &u));
    }

    #[test]
    fn single_zero_with_nonzero_partners_is_trivial() {
        // a_pi[1] = 0, all tau coefficients nonzero
        let a = two_dim([0, 1], [-1, -1]);
        let report = solve(&a);
        assert!(report.unique);
    }

    #[test]
    fn split_family_from_mixed_zero_pattern() {
        // a_pi = (0, 1), a_tau = (-1, 0): no coordinate has both
        // coefficients zero, yet u2 = u1 is a nontrivial family.
        let a = two_dim([0, 1], [-1, 0]);
        let report = solve(&a);
        assert!(!report.unique);
        match &report.per_cycle[0].kind {
            CycleKind::SplitFamilies { families } => {
                assert_eq!(families.len(), 1);
                assert_eq!(families[0].positions.len(), 2);
            }
            other => panic!("expected split families, got {other:?}"),
        }
        let u = report.witness_squares().unwrap();
        assert!(verify_nilpotent_squares(&a, &u));
        let x = Element::new(vec![ri(1), ri(1)]);
        assert!(verify_nilpotent(&a, &x).unwrap());
    }

    #[test]
    fn cone_oracle_examples() {
        let d = RationalMatrix::from_i64_rows(&[&[1, 1]]);
        assert!(!cone_oracle(&d).unwrap());
        let d = RationalMatrix::from_i64_rows(&[&[-1, -1]]);
        assert!(cone_oracle(&d).unwrap());
        let d = RationalMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]);
        assert!(cone_oracle(&d).unwrap());
        let d = RationalMatrix::from_i64_rows(&[&[1, 0], &[0, 1]]);
        assert!(!cone_oracle(&d).unwrap());
        let d = RationalMatrix::from_i64_rows(&[&[1, 1], &[1, 2]]);
        assert!(!cone_oracle(&d).unwrap());
        assert!(cone_oracle(&RationalMatrix::zero(0, 2)).unwrap());
        assert!(cone_oracle(&RationalMatrix::zero(2, 3)).is_err());
    }

    #[test]
    fn verify_rejects_nonzero_on_example1() {
        let a = example1(-1);
        let x = Element::new(vec![ri(1), ri(1), ri(0), ri(1)]);
        assert!(!verify_nilpotent(&a, &x).unwrap());
        assert!(squares_residual(&a, &[ri(1), ri(1), ri(0), ri(1)]) > ri(0));
    }
}
