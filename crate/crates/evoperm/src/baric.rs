//! Weight functions supported on a single coordinate: the characters
//! `sigma(x) = c * x_{k0}` that make the algebra baric.
//!
//! `sigma` is a character iff column `k0` of the structural matrix is
//! zero off the diagonal and its diagonal entry equals `c`; matching
//! coefficients of `x_i * y_i` in `sigma(x*y) = sigma(x) * sigma(y)`
//! shows the basis check is equivalent to the full bilinear one. The
//! finder also derives the same set from the fixed-point conditions on
//! `pi` and `tau` and insists the two routes agree.

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, PermEvolutionAlgebra};
use crate::exactnum::Rational;

/// `sigma(x) = c * x_{k0}` with `c != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunction {
    pub k0: usize,
    pub c: Rational,
}

impl WeightFunction {
    /// Characters are nonzero by definition, so `c = 0` is rejected.
    pub fn new(k0: usize, c: Rational) -> Option<Self> {
        if c.is_zero() {
            None
        } else {
            Some(WeightFunction { k0, c })
        }
    }

    pub fn evaluate(&self, x: &Element) -> Rational {
        &self.c * x.coord(self.k0)
    }
}

/// All weight functions of the algebra, in increasing `k0` order. The
/// list is empty exactly when the algebra is not baric (within the
/// single-coordinate scope).
///
/// Panics if the column test and the fixed-point conditions ever
/// disagree; they are equivalent, so a panic here means a bug.
pub fn find_weights(a: &PermEvolutionAlgebra) -> Vec<WeightFunction> {
    let m = a.structural_matrix();
    let n = a.dim();
    let mut out = Vec::new();
    for k0 in 1..=n {
        let c = m.get(k0 - 1, k0 - 1).clone();
        let column_ok = !c.is_zero()
            && (1..=n).all(|i| i == k0 || m.get(i - 1, k0 - 1).is_zero());
        let by_conditions = fixed_point_weight(a, k0);
        match (column_ok, by_conditions) {
            (true, Some(expected)) => {
                assert_eq!(c, expected, "weight value mismatch at k0 = {k0}");
                out.push(WeightFunction { k0, c });
            }
            (false, None) => {}
            _ => panic!(
                "column test and fixed-point conditions disagree at k0 = {k0}"
            ),
        }
    }
    out
}

/// The weight at `k0` according to the fixed-point conditions:
/// either `pi` fixes `k0`, `tau` does not, and the incoming tau
/// coefficient vanishes (or symmetrically), or both fix `k0`; in every
/// case the diagonal entry must be nonzero.
fn fixed_point_weight(a: &PermEvolutionAlgebra, k0: usize) -> Option<Rational> {
    let pi_fixes = a.pi().apply(k0) == k0;
    let tau_fixes = a.tau().apply(k0) == k0;
    let c = match (pi_fixes, tau_fixes) {
        (true, true) => a.pi_coefficient(k0) + a.tau_coefficient(k0),
        (true, false) => {
            let incoming = a.tau().inverse().apply(k0);
            if !a.tau_coefficient(incoming).is_zero() {
                return None;
            }
            a.pi_coefficient(k0).clone()
        }
        (false, true) => {
            let incoming = a.pi().inverse().apply(k0);
            if !a.pi_coefficient(incoming).is_zero() {
                return None;
            }
            a.tau_coefficient(k0).clone()
        }
        (false, false) => return None,
    };
    if c.is_zero() {
        None
    } else {
        Some(c)
    }
}

/// Whether `sigma(x) = w.c * x_{w.k0}` is a character of the algebra:
/// `c * M[i][k0] = (c * delta_{i,k0})^2` for every `i`.
pub fn is_character(a: &PermEvolutionAlgebra, w: &WeightFunction) -> bool {
    if w.c.is_zero() {
        return false;
    }
    let m = a.structural_matrix();
    (1..=a.dim()).all(|i| {
        let lhs = &w.c * m.get(i - 1, w.k0 - 1);
        let rhs = if i == w.k0 {
            &w.c * &w.c
        } else {
            Rational::zero()
        };
        lhs == rhs
    })
}
