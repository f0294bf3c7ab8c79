//! Sparse and dense complex operators, plus the dense matrix exponential.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{IrrepError, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// `‖U†U − I‖_max`.
pub fn unitarity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    max_abs(&(m.adjoint() * m - CMatrix::identity(n, n)))
}

/// Anything that can act on a state vector.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply(&self, v: &CVector) -> CVector;
}

impl LinearOperator for CMatrix {
    fn dim(&self) -> usize {
        self.nrows()
    }

    fn apply(&self, v: &CVector) -> CVector {
        self * v
    }
}

/// Row-indexed sparse complex matrix. Explicit zeros are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    dim: usize,
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl SparseOperator {
    pub fn zeros(dim: usize) -> Self {
        SparseOperator {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        SparseOperator {
            dim,
            rows: (0..dim).map(|i| vec![(i, ONE)]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates and
    /// dropping entries that cancel to exactly zero.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, Complex64)>) -> Self {
        let mut op = SparseOperator::zeros(dim);
        for (r, c, v) in triplets {
            op.add_entry(r, c, v);
        }
        op.prune();
        op
    }

    fn add_entry(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(row < self.dim && col < self.dim, "entry ({row}, {col}) outside {}", self.dim);
        match self.rows[row].iter_mut().find(|(c, _)| *c == col) {
            Some((_, v)) => *v += value,
            None => self.rows[row].push((col, value)),
        }
    }

    fn prune(&mut self) {
        for row in &mut self.rows {
            row.retain(|(_, v)| *v != ZERO);
            row.sort_by_key(|(c, _)| *c);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, Complex64)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.rows[row]
            .iter()
            .find(|(c, _)| *c == col)
            .map_or(ZERO, |(_, v)| *v)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn to_dense(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.triplets() {
            m[(r, c)] = v;
        }
        m
    }

    pub fn transpose(&self) -> SparseOperator {
        SparseOperator::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (c, r, v)))
    }

    pub fn adjoint(&self) -> SparseOperator {
        SparseOperator::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (c, r, v.conj())))
    }

    pub fn scale(&self, s: Complex64) -> SparseOperator {
        SparseOperator::from_triplets(self.dim, self.triplets().map(|(r, c, v)| (r, c, v * s)))
    }

    /// `Σ_k c_k A_k` over operators of equal dimension.
    pub fn linear_combination<'a>(dim: usize, terms: impl IntoIterator<Item = (Complex64, &'a SparseOperator)>) -> SparseOperator {
        let mut triplets = Vec::new();
        for (coef, op) in terms {
            assert_eq!(op.dim, dim, "dimension mismatch in linear combination");
            if coef != ZERO {
                triplets.extend(op.triplets().map(|(r, c, v)| (r, c, v * coef)));
            }
        }
        SparseOperator::from_triplets(dim, triplets)
    }

    /// `self · dense`.
    pub fn mul_dense(&self, dense: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim, dense.ncols());
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                for j in 0..dense.ncols() {
                    out[(r, j)] += v * dense[(c, j)];
                }
            }
        }
        out
    }

    /// `dense · self`.
    pub fn dense_mul(&self, dense: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(dense.nrows(), self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, v) in row {
                for i in 0..dense.nrows() {
                    out[(i, c)] += dense[(i, r)] * v;
                }
            }
        }
        out
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch in product");
        let mut triplets = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for &(k, a) in row {
                triplets.extend(other.rows[k].iter().map(|&(c, b)| (r, c, a * b)));
            }
        }
        SparseOperator::from_triplets(self.dim, triplets)
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &SparseOperator) -> SparseOperator {
        SparseOperator::linear_combination(self.dim, [(ONE, &self.mul(other)), (-ONE, &other.mul(self))])
    }

    pub fn max_abs(&self) -> f64 {
        self.triplets().map(|(_, _, v)| v.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute row sum (Gershgorin bound on the spectral norm of a
    /// normal operator).
    pub fn max_row_sum(&self) -> f64 {
        self.rows
            .iter()
            .map(|row| row.iter().map(|(_, v)| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl LinearOperator for SparseOperator {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, v: &CVector) -> CVector {
        CVector::from_iterator(
            self.dim,
            self.rows
                .iter()
                .map(|row| row.iter().map(|&(c, x)| x * v[c]).sum::<Complex64>()),
        )
    }
}

/// Dense unitary matrix, checked on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseUnitary {
    matrix: CMatrix,
}

impl DenseUnitary {
    /// Per-dimension tolerance on `‖U†U − I‖_max`.
    pub const TOLERANCE_PER_DIM: f64 = 1e-9;

    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(IrrepError::SizeMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols(),
            });
        }
        let deviation = unitarity_defect(&matrix);
        if deviation > Self::TOLERANCE_PER_DIM * matrix.nrows().max(1) as f64 {
            return Err(IrrepError::NotUnitary { deviation });
        }
        Ok(DenseUnitary { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        DenseUnitary {
            matrix: CMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }
}

impl LinearOperator for DenseUnitary {
    fn dim(&self) -> usize {
        self.dim()
    }

    fn apply(&self, v: &CVector) -> CVector {
        &self.matrix * v
    }
}

// Padé(13) coefficients, Higham 2005.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

fn one_norm(m: &CMatrix) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Matrix exponential by scaling and squaring with a degree-13 Padé approximant.
pub fn expm(a: &CMatrix) -> CMatrix {
    let n = a.nrows();
    assert!(a.is_square(), "expm needs a square matrix");
    if n == 0 {
        return a.clone();
    }
    if n == 1 {
        return CMatrix::from_element(1, 1, a[(0, 0)].exp());
    }
    let norm = one_norm(a);
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil().max(0.0) as i32
    } else {
        0
    };
    let scaled = a * real(0.5f64.powi(squarings));

    let b = |k: usize| real(PADE13[k]);
    let ident = CMatrix::identity(n, n);
    let a2 = &scaled * &scaled;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let u_inner = &a6 * (&a6 * b(13) + &a4 * b(11) + &a2 * b(9))
        + &a6 * b(7)
        + &a4 * b(5)
        + &a2 * b(3)
        + &ident * b(1);
    let u = &scaled * u_inner;
    let v = &a6 * (&a6 * b(12) + &a4 * b(10) + &a2 * b(8))
        + &a6 * b(6)
        + &a4 * b(4)
        + &a2 * b(2)
        + &ident * b(0);
    let numer = &v + &u;
    let denom = &v - &u;
    let mut result = denom
        .lu()
        .solve(&numer)
        .expect("Padé denominator is nonsingular for scaled input");
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Exponential of a sparse operator (densified).
pub fn expm_sparse(a: &SparseOperator) -> CMatrix {
    expm(&a.to_dense())
}

/// `[A, B] = AB − BA`.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .singular_values()
        .iter()
        .fold(0.0, |acc: f64, &s| acc.max(s))
}

/// Embeds a 2×2 block acting on basis vectors `i` and `j` of an `n`-dimensional space.
pub fn embed_two_level(block: &CMatrix, i: usize, j: usize, n: usize) -> CMatrix {
    let mut m = CMatrix::identity(n, n);
    m[(i, i)] = block[(0, 0)];
    m[(i, j)] = block[(0, 1)];
    m[(j, i)] = block[(1, 0)];
    m[(j, j)] = block[(1, 1)];
    m
}
