//! Young's orthogonal (Young-Yamanouchi) form of the irreducible
//! representations of S_n.
//!
//! The basis of `ρ_λ` is [`enumerate_syt`] order. An adjacent transposition
//! acts by
//!
//! ```text
//! ρ(σ_i) Λ = (1/τ) Λ + sqrt(1 − 1/τ²) Λ'
//! ```
//!
//! where `τ` is the axial distance from box `i+1` to box `i` and `Λ'` swaps
//! the two entries. Arbitrary permutations are assembled along their
//! bubblesort word, so that `ρ(p ∘ q) = ρ(p) ρ(q)`.

use std::collections::HashMap;

use crate::error::{IrrepError, Result};
use crate::linalg::{real, CMatrix, CVector, DenseUnitary, SparseOperator, ONE, ZERO};
use crate::perm::Permutation;
use crate::tableaux::{enumerate_syt_capped, StandardTableau, YoungDiagram, DEFAULT_BOX_CAP};

/// Default limit on the representation dimension for dense assembly.
pub const DEFAULT_DIM_CAP: usize = 4096;

/// An irreducible representation of S_n with its tableau basis and the
/// sparse images of the adjacent transpositions.
#[derive(Debug, Clone)]
pub struct SymIrrep {
    shape: YoungDiagram,
    basis: Vec<StandardTableau>,
    index: HashMap<Vec<usize>, usize>,
    generators: Vec<SparseOperator>,
}

impl SymIrrep {
    pub fn new(shape: &YoungDiagram) -> Result<Self> {
        Self::with_caps(shape, DEFAULT_BOX_CAP, DEFAULT_DIM_CAP)
    }

    pub fn with_caps(shape: &YoungDiagram, max_boxes: usize, max_dim: usize) -> Result<Self> {
        if let Some(d) = shape.num_syt() {
            if d > max_dim as u128 {
                return Err(IrrepError::CapExceeded {
                    what: "representation dimension",
                    requested: usize::try_from(d).unwrap_or(usize::MAX),
                    limit: max_dim,
                });
            }
        }
        let basis = enumerate_syt_capped(shape, max_boxes)?;
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, t)| (t.reading_word(), k))
            .collect();
        let mut irrep = SymIrrep {
            shape: shape.clone(),
            basis,
            index,
            generators: Vec::new(),
        };
        irrep.generators = (1..shape.n())
            .map(|i| irrep.build_adjacent(i))
            .collect::<Result<_>>()?;
        Ok(irrep)
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    pub fn index_of(&self, t: &StandardTableau) -> Result<usize> {
        if t.shape() != &self.shape {
            return Err(IrrepError::InvalidTableau(format!(
                "tableau shape {:?} does not match {:?}",
                t.shape().rows(),
                self.shape.rows()
            )));
        }
        Ok(self.index[&t.reading_word()])
    }

    fn build_adjacent(&self, i: usize) -> Result<SparseOperator> {
        let mut triplets = Vec::with_capacity(2 * self.dim());
        for (col, t) in self.basis.iter().enumerate() {
            let tau = t.axial_distance(i)? as f64;
            triplets.push((col, col, real(1.0 / tau)));
            match t.swap_adjacent(i) {
                Some(swapped) => {
                    let row = self.index[&swapped.reading_word()];
                    triplets.push((row, col, real((1.0 - 1.0 / (tau * tau)).sqrt())));
                }
                None if tau.abs() != 1.0 => {
                    return Err(IrrepError::Invariant(format!(
                        "non-standard swap with axial distance {tau}"
                    )));
                }
                // sqrt(1 - 1/τ²) vanishes for τ = ±1
                None => {}
            }
        }
        Ok(SparseOperator::from_triplets(self.dim(), triplets))
    }

    /// `ρ_λ(σ_i)` for one-based `1 ≤ i ≤ n−1`.
    pub fn rep_adjacent(&self, i: usize) -> Result<&SparseOperator> {
        if i == 0 || i >= self.n() {
            return Err(IrrepError::OutOfRange {
                what: "adjacent transposition index",
                value: i as i64,
                range: format!("1..={}", self.n().saturating_sub(1)),
            });
        }
        Ok(&self.generators[i - 1])
    }

    fn check_size(&self, p: &Permutation) -> Result<()> {
        if p.n() != self.n() {
            return Err(IrrepError::SizeMismatch {
                expected: self.n(),
                found: p.n(),
            });
        }
        Ok(())
    }

    /// Dense `ρ_λ(p)`.
    pub fn rep_permutation(&self, p: &Permutation) -> Result<DenseUnitary> {
        Ok(DenseUnitary::new(self.rep_permutation_matrix(p)?)
            .expect("products of orthogonal generators are orthogonal"))
    }

    pub(crate) fn rep_permutation_matrix(&self, p: &Permutation) -> Result<CMatrix> {
        self.check_size(p)?;
        let mut m = CMatrix::identity(self.dim(), self.dim());
        for i in p.bubblesort_decompose() {
            m = self.generators[i - 1].dense_mul(&m);
        }
        Ok(m)
    }

    /// `ρ_λ(p) v`, applied generator by generator.
    pub fn apply(&self, p: &Permutation, v: &CVector) -> Result<CVector> {
        self.check_size(p)?;
        if v.len() != self.dim() {
            return Err(IrrepError::SizeMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        let mut out = v.clone();
        for i in p.bubblesort_decompose().into_iter().rev() {
            out = crate::linalg::LinearOperator::apply(&self.generators[i - 1], &out);
        }
        Ok(out)
    }

    /// `ρ_λ(p) e_col`.
    pub fn column(&self, p: &Permutation, col: usize) -> Result<CVector> {
        let mut e = CVector::from_element(self.dim(), ZERO);
        e[col] = ONE;
        self.apply(p, &e)
    }

    /// `⟨row | ρ_λ(p) | col⟩`.
    pub fn matrix_element(&self, p: &Permutation, row: &StandardTableau, col: &StandardTableau) -> Result<f64> {
        let r = self.index_of(row)?;
        let c = self.index_of(col)?;
        Ok(self.column(p, c)?[r].re)
    }

    /// `χ_λ(p) = Tr ρ_λ(p)`.
    pub fn exact_character(&self, p: &Permutation) -> Result<f64> {
        Ok(self.rep_permutation_matrix(p)?.trace().re)
    }
}

pub fn rep_adjacent(shape: &YoungDiagram, i: usize) -> Result<SparseOperator> {
    SymIrrep::new(shape)?.rep_adjacent(i).cloned()
}

pub fn rep_permutation(shape: &YoungDiagram, p: &Permutation) -> Result<DenseUnitary> {
    SymIrrep::new(shape)?.rep_permutation(p)
}

pub fn matrix_element(
    shape: &YoungDiagram,
    p: &Permutation,
    row: &StandardTableau,
    col: &StandardTableau,
) -> Result<f64> {
    SymIrrep::new(shape)?.matrix_element(p, row, col)
}

pub fn exact_character(shape: &YoungDiagram, p: &Permutation) -> Result<f64> {
    SymIrrep::new(shape)?.exact_character(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs;
    use crate::perm::all_permutations;
    use crate::random::random_permutation;
    use crate::tableaux::partitions;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shape(v: &[usize]) -> YoungDiagram {
        YoungDiagram::new(v.to_vec()).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn two_one_generators() {
        let irrep = SymIrrep::new(&shape(&[2, 1])).unwrap();
        let s1 = irrep.rep_adjacent(1).unwrap().to_dense();
        let expected = CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE]);
        assert!(max_abs(&(s1 - expected)) < 1e-15);
        let s2 = irrep.rep_adjacent(2).unwrap().to_dense();
        let h = 3f64.sqrt() / 2.0;
        let expected = CMatrix::from_row_slice(2, 2, &[real(-0.5), real(h), real(h), real(0.5)]);
        assert!(max_abs(&(s2 - expected)) < 1e-15);
        assert!(irrep.rep_adjacent(3).is_err());
        assert!(irrep.rep_adjacent(0).is_err());
    }

    #[test]
    fn trivial_shape_is_trivial() {
        let irrep = SymIrrep::new(&shape(&[4])).unwrap();
        for i in 1..4 {
            assert_eq!(irrep.rep_adjacent(i).unwrap(), &SparseOperator::identity(1));
        }
    }

    #[test]
    fn transposition_trace_and_sign_rep() {
        let lam = shape(&[2, 1]);
        let t13 = perm(&[3, 2, 1]);
        assert!(exact_character(&lam, &t13).unwrap().abs() < 1e-12);
        let sign_rep = SymIrrep::new(&shape(&[1, 1, 1])).unwrap();
        for p in all_permutations(3) {
            let m = sign_rep.rep_permutation(&p).unwrap();
            assert!((m.get(0, 0).re - p.sign() as f64).abs() < 1e-15);
        }
    }

    #[test]
    fn identity_maps_to_identity() {
        let irrep = SymIrrep::new(&shape(&[3, 2])).unwrap();
        let m = irrep.rep_permutation(&Permutation::identity(5)).unwrap();
        assert!(max_abs(&(m.into_matrix() - CMatrix::identity(5, 5))) < 1e-15);
    }

    #[test]
    fn matrix_element_examples() {
        let lam = shape(&[2, 1]);
        let irrep = SymIrrep::new(&lam).unwrap();
        let basis = irrep.basis().to_vec();
        let id = Permutation::identity(3);
        for a in &basis {
            for b in &basis {
                let v = irrep.matrix_element(&id, a, b).unwrap();
                assert_eq!(v, if a == b { 1.0 } else { 0.0 });
            }
        }
        let s2 = Permutation::adjacent(3, 2).unwrap();
        assert!((irrep.matrix_element(&s2, &basis[0], &basis[0]).unwrap() + 0.5).abs() < 1e-15);
        let wrong = StandardTableau::from_rows(vec![vec![1, 2, 3]]).unwrap();
        assert!(irrep.matrix_element(&s2, &wrong, &basis[0]).is_err());
    }

    #[test]
    fn character_examples() {
        let lam = shape(&[2, 1]);
        assert!((exact_character(&lam, &Permutation::identity(3)).unwrap() - 2.0).abs() < 1e-12);
        assert!((exact_character(&lam, &perm(&[2, 3, 1])).unwrap() + 1.0).abs() < 1e-12);
        let sign = shape(&[1, 1, 1, 1]);
        for p in all_permutations(4) {
            assert!((exact_character(&sign, &p).unwrap() - p.sign() as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let irrep = SymIrrep::new(&shape(&[2, 1])).unwrap();
        assert!(matches!(
            irrep.rep_permutation(&Permutation::identity(4)),
            Err(IrrepError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dimension_cap() {
        let err = SymIrrep::with_caps(&shape(&[3, 2, 1]), 12, 10).unwrap_err();
        assert!(matches!(err, IrrepError::CapExceeded { .. }));
    }

    #[test]
    fn apply_matches_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let irrep = SymIrrep::new(&shape(&[3, 2, 1])).unwrap();
        for _ in 0..20 {
            let p = random_permutation(6, &mut rng);
            let dense = irrep.rep_permutation(&p).unwrap();
            for c in [0, 5, 15] {
                let col = irrep.column(&p, c).unwrap();
                let diff = (col - dense.matrix().column(c)).norm();
                assert!(diff < 1e-12);
            }
        }
    }

    #[test]
    fn character_is_a_class_function() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for n in 1..=6 {
            for lam in partitions(n) {
                let irrep = SymIrrep::new(&lam).unwrap();
                for _ in 0..10 {
                    let p = random_permutation(n, &mut rng);
                    let g = random_permutation(n, &mut rng);
                    let conj = g.compose(&p).unwrap().compose(&g.inverse()).unwrap();
                    let a = irrep.exact_character(&p).unwrap();
                    let b = irrep.exact_character(&conj).unwrap();
                    assert!((a - b).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn subgroup_adapted_block_structure() {
        // p fixing k+1..n cannot mix tableaux whose 1..k sub-tableaux differ in shape
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for lam in [shape(&[3, 2, 1]), shape(&[4, 2]), shape(&[3, 3])] {
            let irrep = SymIrrep::new(&lam).unwrap();
            let n = lam.n();
            for k in 2..n {
                for _ in 0..5 {
                    let small = random_permutation(k, &mut rng);
                    let mut images = small.images();
                    images.extend(k + 1..=n);
                    let p = Permutation::new(images).unwrap();
                    let m = irrep.rep_permutation(&p).unwrap();
                    for (a, ta) in irrep.basis().iter().enumerate() {
                        for (b, tb) in irrep.basis().iter().enumerate() {
                            if ta.restricted_shape(k) != tb.restricted_shape(k) {
                                assert!(m.get(a, b).norm() < 1e-12, "{lam:?} k={k}");
                            }
                        }
                    }
                }
            }
        }
    }
}
