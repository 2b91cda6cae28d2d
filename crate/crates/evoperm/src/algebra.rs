//! The evolution algebra built from two permutations: a natural basis
//! `e_1..e_n` with `e_i * e_j = 0` for `i != j` and
//! `e_i * e_i = a_pi[i] * e_{pi(i)} + a_tau[i] * e_{tau(i)}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{Rational, RationalMatrix};
use crate::perm::{PermError, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("pi and tau must differ")]
    PiEqualsTau,
    #[error("{field} has length {got}, expected {expected}")]
    LengthMismatch {
        field: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("element has dimension {got}, algebra has dimension {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// An element in coordinates over the natural basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element {
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Element { coords }
    }

    pub fn zero(n: usize) -> Self {
        Element {
            coords: vec![Rational::zero(); n],
        }
    }

    /// The basis vector `e_i` (1-indexed).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.coords[i - 1] = Rational::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinate `x_i` (1-indexed).
    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i - 1]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }
}

/// Structural data of the algebra: two permutations of the same degree
/// and their coefficient vectors. Zero coefficients are allowed; they
/// drive several of the nilpotent cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermEvolutionAlgebra {
    n: usize,
    pi: Permutation,
    tau: Permutation,
    a_pi: Vec<Rational>,
    a_tau: Vec<Rational>,
    j_map: Permutation,
}

impl PermEvolutionAlgebra {
    /// Standard constructor; rejects `pi == tau`.
    pub fn new(
        pi: Permutation,
        tau: Permutation,
        a_pi: Vec<Rational>,
        a_tau: Vec<Rational>,
    ) -> Result<Self, AlgebraError> {
        if pi == tau {
            return Err(AlgebraError::PiEqualsTau);
        }
        Self::new_unrestricted(pi, tau, a_pi, a_tau)
    }

    /// Like [`PermEvolutionAlgebra::new`] but allows `pi == tau`. Needed
    /// for sub-algebras arising from direct-sum decomposition, where
    /// blocks of size one or two force the restricted permutations to
    /// coincide.
    pub fn new_unrestricted(
        pi: Permutation,
        tau: Permutation,
        a_pi: Vec<Rational>,
        a_tau: Vec<Rational>,
    ) -> Result<Self, AlgebraError> {
        let n = pi.degree();
        if tau.degree() != n {
            return Err(PermError::DegreeMismatch {
                left: n,
                right: tau.degree(),
            }
            .into());
        }
        if a_pi.len() != n {
            return Err(AlgebraError::LengthMismatch {
                field: "a_pi",
                got: a_pi.len(),
                expected: n,
            });
        }
        if a_tau.len() != n {
            return Err(AlgebraError::LengthMismatch {
                field: "a_tau",
                got: a_tau.len(),
                expected: n,
            });
        }
        let j_map = tau.inverse().compose(&pi)?;
        Ok(PermEvolutionAlgebra {
            n,
            pi,
            tau,
            a_pi,
            a_tau,
            j_map,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// `a_{k, pi(k)}` (1-indexed).
    pub fn pi_coefficient(&self, k: usize) -> &Rational {
        &self.a_pi[k - 1]
    }

    /// `a_{k, tau(k)}` (1-indexed).
    pub fn tau_coefficient(&self, k: usize) -> &Rational {
        &self.a_tau[k - 1]
    }

    pub fn pi_coefficients(&self) -> &[Rational] {
        &self.a_pi
    }

    pub fn tau_coefficients(&self) -> &[Rational] {
        &self.a_tau
    }

    /// The map `k -> tau^{-1}(pi(k))` whose cycles decouple the squared
    /// equations.
    pub fn j_map(&self) -> &Permutation {
        &self.j_map
    }

    /// The matrix `M` of structural constants: row `i` carries
    /// `a_pi[i]` at column `pi(i)` and `a_tau[i]` at column `tau(i)`,
    /// summed into one entry when the columns coincide.
    pub fn structural_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zero(self.n, self.n);
        for i in 1..=self.n {
            let cp = self.pi.apply(i) - 1;
            let v = m.get(i - 1, cp) + self.pi_coefficient(i);
            m.set(i - 1, cp, v);
            let ct = self.tau.apply(i) - 1;
            let v = m.get(i - 1, ct) + self.tau_coefficient(i);
            m.set(i - 1, ct, v);
        }
        m
    }

    /// Transpose of the structural matrix: row `j` lists the
    /// coefficients of the equation for the `e_j` coordinate of `x^2`.
    pub fn system_matrix(&self) -> RationalMatrix {
        self.structural_matrix().transpose()
    }

    /// The system matrix with rows in equation order: row `k` carries
    /// the equation contributed by basis index `k`, whose target
    /// coordinate is `pi(k)`. This is the same matrix as
    /// [`system_matrix`](Self::system_matrix) up to a row permutation by
    /// `pi`, and it is the ordering in which closed-form determinant
    /// expansions of the squared system come out sign-correct.
    pub fn equation_system_matrix(&self) -> RationalMatrix {
        let s = self.system_matrix();
        let mut m = RationalMatrix::zero(self.n, self.n);
        for k in 1..=self.n {
            let target = self.pi.apply(k);
            for c in 0..self.n {
                m.set(k - 1, c, s.get(target - 1, c).clone());
            }
        }
        m
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = Element::zero(self.n);
        for i in 1..=self.n {
            let c = x.coord(i) * y.coord(i);
            if c.is_zero() {
                continue;
            }
            let p = self.pi.apply(i) - 1;
            out.coords[p] = &out.coords[p] + &(&c * self.pi_coefficient(i));
            let t = self.tau.apply(i) - 1;
            out.coords[t] = &out.coords[t] + &(&c * self.tau_coefficient(i));
        }
        Ok(out)
    }

    pub fn square(&self, x: &Element) -> Result<Element, AlgebraError> {
        self.multiply(x, x)
    }

    fn check_dim(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.dim() != self.n {
            return Err(AlgebraError::DimensionMismatch {
                got: x.dim(),
                expected: self.n,
            });
        }
        Ok(())
    }
}
