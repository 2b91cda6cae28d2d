//! Structure theory: direct-sum decomposition along matching cycle
//! supports and canonical forms under basis relabeling, each backed by
//! an explicit isomorphism check.
//!
//! Decomposition applies when the cycles of `pi` and `tau` induce the
//! same partition of `{1..n}` and no structural coefficient vanishes;
//! each common support then carries a sub-algebra, and distinct blocks
//! multiply to zero. Note that blocks of size one or two force the
//! restricted permutations to coincide (there is only one cycle on two
//! points), so block algebras are built through the unrestricted
//! constructor.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Element, PermEvolutionAlgebra};
use crate::exactnum::Rational;
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("structural coefficient pair at index {index} contains a zero")]
    ZeroCoefficient { index: usize },
    #[error(
        "cycle supports interleave: pi-cycle {{{pi_support:?}}} overlaps tau-cycles {tau_supports:?} without matching any"
    )]
    SupportMismatch {
        pi_support: Vec<usize>,
        tau_supports: Vec<Vec<usize>>,
    },
    #[error("pi = {0} is not a single n-cycle")]
    PiNotFullCycle(String),
    #[error("tau = {0} is not the identity")]
    TauNotIdentity(String),
    #[error("tau is not pi^{{-1}}: tau(pi({k})) = {got} != {k}")]
    TauNotInverseOfPi { k: usize, got: usize },
    #[error("canonical forms need dimension >= {min}, got {got}")]
    DimensionTooSmall { got: usize, min: usize },
    #[error("basis map dimensions {map:?} do not match algebras ({left}, {right})")]
    MapDimensionMismatch {
        map: (usize, usize),
        left: usize,
        right: usize,
    },
    #[error("basis map assignment is not injective")]
    MapNotInjective,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A basis relabeling `e'_i = e_{assignment[i-1]}` from a target
/// algebra into a source algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub assignment: Vec<usize>,
}

impl BasisMap {
    pub fn new(
        source_dim: usize,
        target_dim: usize,
        assignment: Vec<usize>,
    ) -> Result<Self, StructureError> {
        let map = BasisMap {
            source_dim,
            target_dim,
            assignment,
        };
        map.validate()?;
        Ok(map)
    }

    fn validate(&self) -> Result<(), StructureError> {
        if self.assignment.len() != self.target_dim {
            return Err(StructureError::MapDimensionMismatch {
                map: (self.source_dim, self.target_dim),
                left: self.assignment.len(),
                right: self.target_dim,
            });
        }
        let mut seen = vec![false; self.source_dim];
        for &v in &self.assignment {
            if v < 1 || v > self.source_dim || seen[v - 1] {
                return Err(StructureError::MapNotInjective);
            }
            seen[v - 1] = true;
        }
        Ok(())
    }

    /// Source index of target basis vector `i` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i - 1]
    }

    /// Pushes target coordinates forward to source coordinates.
    pub fn transport(&self, target_coords: &Element) -> Element {
        let mut coords = vec![Rational::zero(); self.source_dim];
        for i in 1..=self.target_dim {
            coords[self.apply(i) - 1] = target_coords.coord(i).clone();
        }
        Element::new(coords)
    }

    /// Pulls source coordinates supported on the image back to target
    /// coordinates (coordinates outside the image are dropped).
    pub fn restrict(&self, source_coords: &Element) -> Element {
        Element::new(
            (1..=self.target_dim)
                .map(|i| source_coords.coord(self.apply(i)).clone())
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionBlock {
    /// Original indices carried by this block, ascending.
    pub support: Vec<usize>,
    pub algebra: PermEvolutionAlgebra,
    /// Block basis index -> parent basis index.
    pub map: BasisMap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub blocks: Vec<DecompositionBlock>,
}

/// Splits the algebra into one block per common cycle support of `pi`
/// and `tau`.
pub fn decompose(a: &PermEvolutionAlgebra) -> Result<Decomposition, StructureError> {
    for i in 1..=a.dim() {
        if a.pi_coefficient(i).is_zero() || a.tau_coefficient(i).is_zero() {
            return Err(StructureError::ZeroCoefficient { index: i });
        }
    }
    let pi_supports = a.pi().cycles().supports();
    let tau_supports = a.tau().cycles().supports();
    for ps in &pi_supports {
        if !tau_supports.contains(ps) {
            let overlapping: Vec<Vec<usize>> = tau_supports
                .iter()
                .filter(|ts| ts.iter().any(|v| ps.contains(v)))
                .cloned()
                .collect();
            return Err(StructureError::SupportMismatch {
                pi_support: ps.clone(),
                tau_supports: overlapping,
            });
        }
    }

    let mut blocks = Vec::with_capacity(pi_supports.len());
    for support in pi_supports {
        let k = support.len();
        let local = |v: usize| support.iter().position(|&s| s == v).unwrap() + 1;
        let pi_images: Vec<usize> = support.iter().map(|&s| local(a.pi().apply(s))).collect();
        let tau_images: Vec<usize> = support.iter().map(|&s| local(a.tau().apply(s))).collect();
        let a_pi: Vec<Rational> = support.iter().map(|&s| a.pi_coefficient(s).clone()).collect();
        let a_tau: Vec<Rational> = support
            .iter()
            .map(|&s| a.tau_coefficient(s).clone())
            .collect();
        let algebra = PermEvolutionAlgebra::new_unrestricted(
            Permutation::from_images(pi_images).expect("restriction of a bijection"),
            Permutation::from_images(tau_images).expect("restriction of a bijection"),
            a_pi,
            a_tau,
        )?;
        let map = BasisMap::new(a.dim(), k, support.clone())?;
        blocks.push(DecompositionBlock {
            support,
            algebra,
            map,
        });
    }
    Ok(Decomposition { blocks })
}

/// Canonical form for `pi` a single n-cycle and `tau` the identity:
/// relabeling `e'_i = e_{pi^{i-1}(1)}` turns `pi` into `(1, 2, ..., n)`.
pub fn canonical_cycle_identity(
    a: &PermEvolutionAlgebra,
) -> Result<(PermEvolutionAlgebra, BasisMap), StructureError> {
    let n = a.dim();
    if n < 2 {
        return Err(StructureError::DimensionTooSmall { got: n, min: 2 });
    }
    if !a.pi().is_full_cycle() {
        return Err(StructureError::PiNotFullCycle(a.pi().to_string()));
    }
    if !a.tau().is_identity() {
        return Err(StructureError::TauNotIdentity(a.tau().to_string()));
    }
    check_nonzero_coefficients(a)?;
    let map = orbit_map(a, n)?;
    let a_pi: Vec<Rational> = (1..=n).map(|i| a.pi_coefficient(map.apply(i)).clone()).collect();
    let a_tau: Vec<Rational> = (1..=n)
        .map(|i| a.tau_coefficient(map.apply(i)).clone())
        .collect();
    let target = PermEvolutionAlgebra::new(
        standard_cycle(n),
        Permutation::identity(n),
        a_pi,
        a_tau,
    )?;
    Ok((target, map))
}

/// Canonical form for `pi`, `tau` single n-cycles with `tau = pi^{-1}`:
/// the same relabeling turns the pair into `(1, 2, ..., n)` and
/// `(1, n, n-1, ..., 2)`.
pub fn canonical_inverse_pair(
    a: &PermEvolutionAlgebra,
) -> Result<(PermEvolutionAlgebra, BasisMap), StructureError> {
    let n = a.dim();
    if n < 3 {
        // for n = 2 the inverse of the 2-cycle is itself, so pi = tau
        return Err(StructureError::DimensionTooSmall { got: n, min: 3 });
    }
    if !a.pi().is_full_cycle() {
        return Err(StructureError::PiNotFullCycle(a.pi().to_string()));
    }
    for k in 1..=n {
        let got = a.tau().apply(a.pi().apply(k));
        if got != k {
            return Err(StructureError::TauNotInverseOfPi { k, got });
        }
    }
    check_nonzero_coefficients(a)?;
    let map = orbit_map(a, n)?;
    let a_pi: Vec<Rational> = (1..=n).map(|i| a.pi_coefficient(map.apply(i)).clone()).collect();
    let a_tau: Vec<Rational> = (1..=n)
        .map(|i| a.tau_coefficient(map.apply(i)).clone())
        .collect();
    let pi_star = standard_cycle(n);
    let tau_star = pi_star.inverse();
    let target = PermEvolutionAlgebra::new(pi_star, tau_star, a_pi, a_tau)?;
    Ok((target, map))
}

/// `e'_i = e_{pi^{i-1}(1)}`.
fn orbit_map(a: &PermEvolutionAlgebra, n: usize) -> Result<BasisMap, StructureError> {
    let mut assignment = Vec::with_capacity(n);
    let mut cur = 1;
    for _ in 0..n {
        assignment.push(cur);
        cur = a.pi().apply(cur);
    }
    BasisMap::new(n, n, assignment)
}

/// The cycle `(1, 2, ..., n)` in image notation.
fn standard_cycle(n: usize) -> Permutation {
    Permutation::from_images((1..=n).map(|i| i % n + 1).collect())
        .expect("shift is a bijection")
}

fn check_nonzero_coefficients(a: &PermEvolutionAlgebra) -> Result<(), StructureError> {
    for i in 1..=a.dim() {
        if a.pi_coefficient(i).is_zero() || a.tau_coefficient(i).is_zero() {
            return Err(StructureError::ZeroCoefficient { index: i });
        }
    }
    Ok(())
}

/// Whether `map` realizes an isomorphism from `target` onto `source`
/// basis vectors: transporting every target basis product must equal
/// the source product of the mapped vectors, exactly.
///
/// Distinct basis vectors multiply to zero on both sides (the map is
/// injective), so only the squares need comparing; they are computed
/// through the actual multiplication on both sides.
pub fn verify_isomorphism(
    source: &PermEvolutionAlgebra,
    target: &PermEvolutionAlgebra,
    map: &BasisMap,
) -> Result<bool, StructureError> {
    if map.source_dim != source.dim()
        || map.target_dim != target.dim()
        || source.dim() != target.dim()
    {
        return Err(StructureError::MapDimensionMismatch {
            map: (map.source_dim, map.target_dim),
            left: source.dim(),
            right: target.dim(),
        });
    }
    map.validate()?;
    for i in 1..=target.dim() {
        let e = Element::basis(target.dim(), i);
        let target_square = target.square(&e)?;
        let transported = map.transport(&target_square);
        let source_basis = Element::basis(source.dim(), map.apply(i));
        let source_square = source.square(&source_basis)?;
        if transported != source_square {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn decompose_two_blocks() {
        // pi = (1 2)(3 4 5), tau = (1 2)(3 5 4): supports match.
        let pi = perm(&[2, 1, 4, 5, 3]);
        let tau = perm(&[2, 1, 5, 3, 4]);
        let coeffs: Vec<Rational> = (1..=5).map(ri).collect();
        let a = PermEvolutionAlgebra::new(pi, tau, coeffs.clone(), coeffs).unwrap();
        let dec = decompose(&a).unwrap();
        assert_eq!(dec.blocks.len(), 2);
        assert_eq!(dec.blocks[0].support, vec![1, 2]);
        assert_eq!(dec.blocks[1].support, vec![3, 4, 5]);
        // size-2 block: restricted pi and tau coincide
        assert_eq!(
            dec.blocks[0].algebra.pi(),
            dec.blocks[0].algebra.tau()
        );
        // parent products are reproduced through the block maps
        for block in &dec.blocks {
            for (bi, &s) in block.support.iter().enumerate() {
                let parent_sq = a.square(&Element::basis(5, s)).unwrap();
                let block_sq = block
                    .algebra
                    .square(&Element::basis(block.support.len(), bi + 1))
                    .unwrap();
                assert_eq!(block.map.transport(&block_sq), parent_sq);
            }
        }
    }

    #[test]
    fn decompose_rejects_interleaved_supports() {
        // Example 2 shape: pi-cycle {1, 3, 4}, tau-cycle {1, 2, 3}.
        let pi = perm(&[3, 2, 4, 1]);
        let tau = perm(&[2, 3, 1, 4]);
        let a =
            PermEvolutionAlgebra::new(pi, tau, vec![ri(1); 4], vec![ri(1); 4]).unwrap();
        match decompose(&a).unwrap_err() {
            StructureError::SupportMismatch {
                pi_support,
                tau_supports,
            } => {
                assert_eq!(pi_support, vec![1, 3, 4]);
                assert!(tau_supports.contains(&vec![1, 2, 3]));
            }
            other => panic!("expected support mismatch, got {other}"),
        }
    }

    #[test]
    fn decompose_rejects_zero_coefficients() {
        let pi = perm(&[2, 1]);
        let tau = perm(&[1, 2]);
        let a = PermEvolutionAlgebra::new(
            pi,
            tau,
            vec![ri(1), ri(0)],
            vec![ri(1), ri(1)],
        )
        .unwrap();
        assert!(matches!(
            decompose(&a),
            Err(StructureError::ZeroCoefficient { index: 2 })
        ));
    }

    #[test]
    fn decompose_single_full_cycle_pair() {
        let pi = perm(&[2, 3, 1]);
        let tau = perm(&[3, 1, 2]);
        let a =
            PermEvolutionAlgebra::new(pi, tau, vec![ri(1); 3], vec![ri(2); 3]).unwrap();
        let dec = decompose(&a).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].support, vec![1, 2, 3]);
    }

    #[test]
    fn canonical_cycle_identity_example() {
        // pi = (1 3 4 2) with images [3, 1, 4, 2]: orbit of 1 is
        // 1, 3, 4, 2, so the relabeling is (1, 3, 4, 2).
        let a = PermEvolutionAlgebra::new(
            perm(&[3, 1, 4, 2]),
            Permutation::identity(4),
            vec![ri(2), ri(3), ri(5), ri(7)],
            vec![ri(11), ri(13), ri(17), ri(19)],
        )
        .unwrap();
        let (canon, map) = canonical_cycle_identity(&a).unwrap();
        assert_eq!(map.assignment, vec![1, 3, 4, 2]);
        assert_eq!(canon.pi().images(), &[2, 3, 4, 1]);
        assert!(canon.tau().is_identity());
        assert!(verify_isomorphism(&a, &canon, &map).unwrap());
    }

    #[test]
    fn canonical_cycle_identity_already_standard() {
        let a = PermEvolutionAlgebra::new(
            perm(&[2, 3, 1]),
            Permutation::identity(3),
            vec![ri(1), ri(2), ri(3)],
            vec![ri(4), ri(5), ri(6)],
        )
        .unwrap();
        let (canon, map) = canonical_cycle_identity(&a).unwrap();
        assert_eq!(map.assignment, vec![1, 2, 3]);
        assert_eq!(canon.pi_coefficients(), a.pi_coefficients());
        assert_eq!(canon.tau_coefficients(), a.tau_coefficients());
    }

    #[test]
    fn canonical_cycle_identity_preconditions() {
        // pi not a full cycle
        let a = PermEvolutionAlgebra::new(
            perm(&[2, 1, 3]),
            Permutation::identity(3),
            vec![ri(1); 3],
            vec![ri(1); 3],
        )
        .unwrap();
        assert!(matches!(
            canonical_cycle_identity(&a),
            Err(StructureError::PiNotFullCycle(_))
        ));
        // tau not identity
        let a = PermEvolutionAlgebra::new(
            perm(&[2, 3, 1]),
            perm(&[1, 3, 2]),
            vec![ri(1); 3],
            vec![ri(1); 3],
        )
        .unwrap();
        assert!(matches!(
            canonical_cycle_identity(&a),
            Err(StructureError::TauNotIdentity(_))
        ));
        // zero coefficient
        let a = PermEvolutionAlgebra::new(
            perm(&[2, 3, 1]),
            Permutation::identity(3),
            vec![ri(1), ri(0), ri(1)],
            vec![ri(1); 3],
        )
        .unwrap();
        assert!(matches!(
            canonical_cycle_identity(&a),
            Err(StructureError::ZeroCoefficient { index: 2 })
        ));
    }

    #[test]
    fn canonical_inverse_pair_n3() {
        let a = PermEvolutionAlgebra::new(
            perm(&[2, 3, 1]),
            perm(&[3, 1, 2]),
            vec![ri(2), ri(3), ri(5)],
            vec![ri(7), ri(11), ri(13)],
        )
        .unwrap();
        let (canon, map) = canonical_inverse_pair(&a).unwrap();
        assert_eq!(canon.pi().images(), &[2, 3, 1]);
        assert_eq!(canon.tau().images(), &[3, 1, 2]);
        assert!(verify_isomorphism(&a, &canon, &map).unwrap());
    }

    #[test]
    fn canonical_inverse_pair_rejects_non_inverse_tau() {
        // tau = pi itself never reaches the check (the constructor
        // rejects it); a full cycle that is not pi^{-1} does.
        let a = PermEvolutionAlgebra::new_unrestricted(
            perm(&[2, 3, 1]),
            perm(&[2, 3, 1]),
            vec![ri(1); 3],
            vec![ri(1); 3],
        )
        .unwrap();
        assert!(matches!(
            canonical_inverse_pair(&a),
            Err(StructureError::TauNotInverseOfPi { k: 1, got: 3 })
        ));
        let a = PermEvolutionAlgebra::new(
            perm(&[2, 3, 1]),
            perm(&[1, 3, 2]),
            vec![ri(1); 3],
            vec![ri(1); 3],
        )
        .unwrap();
        assert!(matches!(
            canonical_inverse_pair(&a),
            Err(StructureError::TauNotInverseOfPi { .. })
        ));
    }

    #[test]
    fn isomorphism_rejects_perturbed_coefficients() {
        let a = PermEvolutionAlgebra::new(
            perm(&[3, 1, 4, 2]),
            Permutation::identity(4),
            vec![ri(2), ri(3), ri(5), ri(7)],
            vec![ri(11), ri(13), ri(17), ri(19)],
        )
        .unwrap();
        let (canon, map) = canonical_cycle_identity(&a).unwrap();
        // perturb one transported coefficient
        let mut bad_coeffs = canon.pi_coefficients().to_vec();
        bad_coeffs[2] = &bad_coeffs[2] + &ri(1);
        let bad = PermEvolutionAlgebra::new(
            canon.pi().clone(),
            canon.tau().clone(),
            bad_coeffs,
            canon.tau_coefficients().to_vec(),
        )
        .unwrap();
        assert!(!verify_isomorphism(&a, &bad, &map).unwrap());
    }

    #[test]
    fn identity_map_between_identical_algebras() {
        let a = PermEvolutionAlgebra::new(
            perm(&[3, 1, 4, 2]),
            perm(&[2, 3, 4, 1]),
            vec![ri(1); 4],
            vec![ri(1); 4],
        )
        .unwrap();
        let map = BasisMap::new(4, 4, vec![1, 2, 3, 4]).unwrap();
        assert!(verify_isomorphism(&a, &a.clone(), &map).unwrap());
    }

    #[test]
    fn blocks_are_orthogonal() {
        let pi = perm(&[2, 1, 4, 5, 3]);
        let tau = perm(&[2, 1, 5, 3, 4]);
        let coeffs: Vec<Rational> = (1..=5).map(ri).collect();
        let a = PermEvolutionAlgebra::new(pi, tau, coeffs.clone(), coeffs).unwrap();
        let dec = decompose(&a).unwrap();
        for (s, t) in [(1usize, 3usize), (2, 4), (1, 5)] {
            let prod = a
                .multiply(&Element::basis(5, s), &Element::basis(5, t))
                .unwrap();
            assert!(prod.is_zero());
        }
        assert_eq!(dec.blocks.len(), 2);
    }
}
