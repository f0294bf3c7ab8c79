//! Irreducible representations of the alternating group `A_n`.
//!
//! A non-self-conjugate shape restricts irreducibly (`whole`). A
//! self-conjugate shape splits into the `±1` eigenspaces of the associator
//! `S Λ = i^{(n−d)/2} sign(w_Λ) Λ̂`, where `Λ̂` is the conjugate tableau, `d`
//! the diagonal length and `w_Λ` the relabelling taking `Λ` to the typewriter
//! tableau.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{IrrepError, Result};
use crate::linalg::{CMatrix, CVector, SparseOperator, ONE, ZERO};
use crate::perm::Permutation;
use crate::symrep::SymIrrep;
use crate::tableaux::YoungDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AltBranch {
    Whole,
    Plus,
    Minus,
}

impl fmt::Display for AltBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AltBranch::Whole => "whole",
            AltBranch::Plus => "plus",
            AltBranch::Minus => "minus",
        })
    }
}

impl FromStr for AltBranch {
    type Err = IrrepError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "whole" => Ok(AltBranch::Whole),
            "plus" => Ok(AltBranch::Plus),
            "minus" => Ok(AltBranch::Minus),
            other => Err(IrrepError::InvalidArgument(format!(
                "branch must be whole, plus or minus, got {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltIrrepLabel {
    shape: YoungDiagram,
    branch: AltBranch,
}

impl AltIrrepLabel {
    pub fn new(shape: YoungDiagram, branch: AltBranch) -> Result<Self> {
        let split = shape.is_self_conjugate();
        if split == (branch == AltBranch::Whole) {
            return Err(IrrepError::InvalidArgument(format!(
                "branch {branch} does not apply to shape {:?} (self-conjugate: {split})",
                shape.rows()
            )));
        }
        Ok(AltIrrepLabel { shape, branch })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn branch(&self) -> AltBranch {
        self.branch
    }
}

/// One conjugate pair `(Λ, Λ̂)` as basis indices with `S Λ = alpha Λ̂`.
///
/// `first == second` only for the single-box shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugatePair {
    pub first: usize,
    pub second: usize,
    pub alpha: Complex64,
}

#[derive(Debug, Clone)]
pub struct AssociatorOperator {
    shape: YoungDiagram,
    half_gap: usize,
    pairs: Vec<ConjugatePair>,
    operator: SparseOperator,
}

impl AssociatorOperator {
    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    /// `(n − d(λ)) / 2`.
    pub fn half_gap(&self) -> usize {
        self.half_gap
    }

    pub fn pairs(&self) -> &[ConjugatePair] {
        &self.pairs
    }

    pub fn operator(&self) -> &SparseOperator {
        &self.operator
    }

    pub fn to_dense(&self) -> CMatrix {
        self.operator.to_dense()
    }
}

fn i_power(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

pub fn associator(shape: &YoungDiagram) -> Result<AssociatorOperator> {
    associator_for(&SymIrrep::new(shape)?)
}

pub fn associator_for(irrep: &SymIrrep) -> Result<AssociatorOperator> {
    let shape = irrep.shape();
    if !shape.is_self_conjugate() {
        return Err(IrrepError::NotSelfConjugate(shape.rows().to_vec()));
    }
    let n = shape.n();
    let half_gap = (n - shape.diagonal_length()) / 2;
    let phase = i_power(half_gap);
    let parity = if half_gap % 2 == 0 { 1 } else { -1 };
    let basis = irrep.basis();
    let signs: Vec<i32> = basis.iter().map(|t| t.typewriter_data().sign).collect();

    let mut pairs = Vec::with_capacity(basis.len().div_ceil(2));
    let mut triplets = Vec::with_capacity(basis.len());
    for (a, t) in basis.iter().enumerate() {
        let b = irrep.index_of(&t.conjugate())?;
        if signs[a] * signs[b] != parity {
            return Err(IrrepError::Invariant(format!(
                "sign(w) of {t:?} and its conjugate multiply to {}, expected {parity}",
                signs[a] * signs[b]
            )));
        }
        let alpha = phase * f64::from(signs[a]);
        triplets.push((b, a, alpha));
        if a <= b {
            pairs.push(ConjugatePair { first: a, second: b, alpha });
        }
    }
    Ok(AssociatorOperator {
        shape: shape.clone(),
        half_gap,
        pairs,
        operator: SparseOperator::from_triplets(basis.len(), triplets),
    })
}

/// Sparse description of one branch vector: `Σ coef · e_index`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchVector {
    pub terms: Vec<(usize, Complex64)>,
}

impl BranchVector {
    pub fn to_dense(&self, dim: usize) -> CVector {
        let mut v = CVector::from_element(dim, ZERO);
        for &(i, c) in &self.terms {
            v[i] += c;
        }
        v
    }
}

#[derive(Debug, Clone)]
pub struct SplitBasis {
    pub plus: Vec<BranchVector>,
    pub minus: Vec<BranchVector>,
}

pub fn split_basis(shape: &YoungDiagram) -> Result<SplitBasis> {
    Ok(split_from(&associator(shape)?))
}

/// `(Λ ± α Λ̂)/√2` for every pair, which satisfies `S v = ±v`.
fn split_from(s: &AssociatorOperator) -> SplitBasis {
    let r = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let mut plus = Vec::with_capacity(s.pairs.len());
    let mut minus = Vec::with_capacity(s.pairs.len());
    for p in &s.pairs {
        if p.first == p.second {
            // S e = α e with α = ±1 for the single-box shape.
            let target = if p.alpha.re > 0.0 { &mut plus } else { &mut minus };
            target.push(BranchVector { terms: vec![(p.first, ONE)] });
            continue;
        }
        plus.push(BranchVector { terms: vec![(p.first, r), (p.second, r * p.alpha)] });
        minus.push(BranchVector { terms: vec![(p.first, r), (p.second, -r * p.alpha)] });
    }
    SplitBasis { plus, minus }
}

/// An irreducible representation of `A_n`, as a branch of an `S_n` irrep.
#[derive(Debug, Clone)]
pub struct AltIrrep {
    label: AltIrrepLabel,
    sym: SymIrrep,
    vectors: Option<Vec<BranchVector>>,
}

impl AltIrrep {
    pub fn new(label: AltIrrepLabel) -> Result<Self> {
        let sym = SymIrrep::new(label.shape())?;
        let vectors = match label.branch() {
            AltBranch::Whole => None,
            branch => {
                let split = split_from(&associator_for(&sym)?);
                Some(if branch == AltBranch::Plus { split.plus } else { split.minus })
            }
        };
        Ok(AltIrrep { label, sym, vectors })
    }

    pub fn label(&self) -> &AltIrrepLabel {
        &self.label
    }

    pub fn sym(&self) -> &SymIrrep {
        &self.sym
    }

    pub fn dim(&self) -> usize {
        self.vectors.as_ref().map_or(self.sym.dim(), Vec::len)
    }

    fn check_even(p: &Permutation) -> Result<()> {
        if p.is_even() { Ok(()) } else { Err(IrrepError::OddPermutation) }
    }

    fn check_index(&self, idx: usize) -> Result<()> {
        if idx >= self.dim() {
            return Err(IrrepError::OutOfRange {
                what: "branch basis index",
                value: idx as i64,
                range: format!("0..{}", self.dim()),
            });
        }
        Ok(())
    }

    /// `⟨v_row| ρ_λ(p) |v_col⟩`, as a combination of at most four
    /// Young–Yamanouchi elements.
    pub fn matrix_element(&self, p: &Permutation, row: usize, col: usize) -> Result<Complex64> {
        Self::check_even(p)?;
        self.check_index(row)?;
        self.check_index(col)?;
        let Some(vectors) = &self.vectors else {
            return Ok(self.sym.column(p, col)?[row]);
        };
        let mut value = ZERO;
        for &(c_idx, c_coef) in &vectors[col].terms {
            let column = self.sym.column(p, c_idx)?;
            for &(r_idx, r_coef) in &vectors[row].terms {
                value += r_coef.conj() * column[r_idx] * c_coef;
            }
        }
        Ok(value)
    }

    /// The full block `P ρ_λ(p) P†` in the branch basis.
    pub fn matrix(&self, p: &Permutation) -> Result<CMatrix> {
        Self::check_even(p)?;
        let full = self.sym.rep_permutation_matrix(p)?;
        let Some(vectors) = &self.vectors else {
            return Ok(full);
        };
        let dim = self.sym.dim();
        let projector = CMatrix::from_fn(vectors.len(), dim, |r, c| {
            vectors[r].terms.iter().filter(|(i, _)| *i == c).map(|(_, v)| v.conj()).sum()
        });
        Ok(&projector * full * projector.adjoint())
    }

    pub fn character(&self, p: &Permutation) -> Result<Complex64> {
        Ok(self.matrix(p)?.trace())
    }
}

/// `⟨v_row| ρ_λ(p) |v_col⟩` for the branch named by `label`.
pub fn alt_matrix_element(label: &AltIrrepLabel, p: &Permutation, row: usize, col: usize) -> Result<Complex64> {
    AltIrrep::new(label.clone())?.matrix_element(p, row, col)
}
