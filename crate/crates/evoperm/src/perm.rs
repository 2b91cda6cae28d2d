//! Permutations on `{1..n}` in one-line image notation, 1-indexed
//! throughout to match the usual convention for structural constants
//! `a_{i,p(i)}`. Cycle decompositions are normalized: every cycle starts
//! at its minimal element and cycles are sorted by those minima.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image {value} at index {index} is outside 1..={n}")]
    ImageOutOfRange { index: usize, value: usize, n: usize },
    #[error("image {value} repeated at indices {first} and {second}")]
    DuplicateImage {
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("permutation degree must be at least 1")]
    EmptyPermutation,
}

/// A bijection of `{1..n}`; `images[i-1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::EmptyPermutation);
        }
        let mut seen: Vec<Option<usize>> = vec![None; n];
        for (idx0, &v) in images.iter().enumerate() {
            let index = idx0 + 1;
            if v < 1 || v > n {
                return Err(PermError::ImageOutOfRange { index, value: v, n });
            }
            if let Some(first) = seen[v - 1] {
                return Err(PermError::DuplicateImage {
                    value: v,
                    first,
                    second: index,
                });
            }
            seen[v - 1] = Some(index);
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds the cycle `(c_1 c_2 ... c_k)` on `{1..n}`, fixing
    /// everything outside the cycle.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=n).collect();
        for (i, &v) in cycle.iter().enumerate() {
            if v < 1 || v > n {
                return Err(PermError::ImageOutOfRange {
                    index: i + 1,
                    value: v,
                    n,
                });
            }
            images[v - 1] = cycle[(i + 1) % cycle.len()];
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `result(i) = self(other(i))`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: (1..=self.degree())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (idx0, &v) in self.images.iter().enumerate() {
            images[v - 1] = idx0 + 1;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur - 1] {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        // starting the walk at increasing unvisited indices already
        // yields min-first cycles sorted by their minima
        CycleDecomposition { n, cycles }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    /// True when the permutation is a single cycle through all n points.
    pub fn is_full_cycle(&self) -> bool {
        self.cycles().cycles().len() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;
    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Disjoint cycles covering `{1..n}`, including fixed points as
/// length-1 cycles. Normalized as described in the module docs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Reassembles the permutation the decomposition came from.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.n).collect();
        for cycle in &self.cycles {
            for (i, &v) in cycle.iter().enumerate() {
                images[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }

    /// The supports of the cycles, each sorted ascending, in cycle order.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.cycles
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect()
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(matches!(
            Permutation::from_images(vec![1, 3]),
            Err(PermError::ImageOutOfRange {
                index: 2,
                value: 3,
                n: 2
            })
        ));
        assert!(matches!(
            Permutation::from_images(vec![2, 2, 1]),
            Err(PermError::DuplicateImage {
                value: 2,
                first: 1,
                second: 2
            })
        ));
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn compose_identity_and_inverse() {
        let q = p(&[3, 1, 4, 2]);
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&q).unwrap(), q);
        assert_eq!(q.compose(&id).unwrap(), q);
        assert_eq!(q.compose(&q.inverse()).unwrap(), id);
        assert_eq!(q.inverse().compose(&q).unwrap(), id);
    }

    #[test]
    fn compose_is_tau_inv_pi_of_example1() {
        // j_k = tau^{-1}(pi(k)) for pi = [3,1,4,2], tau = [2,3,4,1]
        let pi = p(&[3, 1, 4, 2]);
        let tau = p(&[2, 3, 4, 1]);
        assert_eq!(tau.inverse(), p(&[4, 1, 2, 3]));
        let j = tau.inverse().compose(&pi).unwrap();
        assert_eq!(j, p(&[2, 4, 3, 1]));
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = p(&[2, 1]);
        let b = p(&[1, 2, 3]);
        assert!(matches!(
            a.compose(&b),
            Err(PermError::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_of_transposition_is_itself() {
        let t = p(&[2, 1, 3]);
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn cycle_decomposition_examples() {
        assert_eq!(
            Permutation::identity(3).cycles().cycles(),
            &[vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            p(&[2, 4, 3, 1]).cycles().cycles(),
            &[vec![1, 2, 4], vec![3]]
        );
        assert_eq!(p(&[3, 1, 4, 2]).cycles().cycles(), &[vec![1, 3, 4, 2]]);
    }

    #[test]
    fn cycles_roundtrip() {
        let q = p(&[5, 3, 2, 4, 1]);
        assert_eq!(q.cycles().to_permutation(), q);
    }

    #[test]
    fn fixed_points_examples() {
        assert_eq!(Permutation::identity(4).fixed_points(), vec![1, 2, 3, 4]);
        assert_eq!(p(&[3, 2, 4, 1]).fixed_points(), vec![2]);
        assert_eq!(p(&[2, 3, 4, 1]).fixed_points(), Vec::<usize>::new());
    }

    #[test]
    fn from_cycle_builds_expected_images() {
        let c = Permutation::from_cycle(4, &[1, 3, 4, 2]).unwrap();
        assert_eq!(c, p(&[3, 1, 4, 2]));
        assert!(Permutation::from_cycle(3, &[1, 4]).is_err());
    }
}
