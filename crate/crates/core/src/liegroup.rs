//! Group-level representations of `U(n)`, `SU(n)` and `SO(n)`, and their
//! characters.
//!
//! A unitary is split into two-level factors, each factor is moved onto
//! adjacent basis vectors by swap conjugations, and every adjacent factor
//! `e^h` is mapped to `exp(a_m(h))`. Generators are antihermitian throughout:
//! `u = e^h`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{IrrepError, Result};
use crate::gelfand::{GTWeight, GlIrrep, GroupTag, SoIrrep};
use crate::linalg::{embed_two_level, expm, max_abs, spectral_norm, unitarity_defect, CMatrix, DenseUnitary, SparseOperator, I, ONE, ZERO};

/// Unitarity tolerance for inputs.
pub const INPUT_TOLERANCE: f64 = 1e-10;

/// Eigenvalue gap below which the `U(n)` determinant ratio is not used.
pub const U_GAP_TOLERANCE: f64 = 1e-6;

/// Weyl-denominator factor below which the `SO(n)` determinant ratio is not used.
pub const SO_GAP_TOLERANCE: f64 = 1e-4;

/// A unitary acting on basis vectors `i < j` (zero-based) only.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoLevelFactor {
    pub block: CMatrix,
    pub i: usize,
    pub j: usize,
}

impl TwoLevelFactor {
    pub fn new(block: CMatrix, i: usize, j: usize) -> Result<Self> {
        if block.shape() != (2, 2) {
            return Err(IrrepError::InvalidArgument("two-level block must be 2x2".into()));
        }
        if i >= j {
            return Err(IrrepError::InvalidArgument(format!("need i < j, got ({i}, {j})")));
        }
        let deviation = unitarity_defect(&block);
        if deviation > 1e-12 {
            return Err(IrrepError::NotUnitary { deviation });
        }
        Ok(TwoLevelFactor { block, i, j })
    }

    pub fn is_adjacent(&self) -> bool {
        self.j == self.i + 1
    }

    pub fn embed(&self, n: usize) -> CMatrix {
        embed_two_level(&self.block, self.i, self.j, n)
    }
}

fn check_unitary(u: &CMatrix) -> Result<()> {
    if !u.is_square() {
        return Err(IrrepError::SizeMismatch { expected: u.nrows(), found: u.ncols() });
    }
    let deviation = unitarity_defect(u);
    if deviation > INPUT_TOLERANCE {
        return Err(IrrepError::NotUnitary { deviation });
    }
    Ok(())
}

fn wrap_phase(phi: f64) -> f64 {
    let mut x = phi.rem_euclid(2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    }
    x
}

/// Antihermitian `h` with `e^h = u` and eigenphases in `(−π, π]`.
pub fn log_unitary_2x2(u: &CMatrix) -> Result<CMatrix> {
    if u.shape() != (2, 2) {
        return Err(IrrepError::SizeMismatch { expected: 2, found: u.nrows() });
    }
    check_unitary(u)?;
    let mut phi = u.determinant().arg() / 2.0;
    let mut w = u * Complex64::from_polar(1.0, -phi);
    let mut trace = (w[(0, 0)] + w[(1, 1)]).re;
    if trace < 0.0 {
        w = -w;
        phi += PI;
        trace = -trace;
    }
    let k = (&w - w.adjoint()) * Complex64::new(0.5, 0.0);
    let half_diff = (k[(0, 0)] - k[(1, 1)]) * 0.5;
    let k = CMatrix::from_row_slice(2, 2, &[half_diff, k[(0, 1)], k[(1, 0)], -half_diff]);
    let s = (half_diff.norm_sqr() + k[(0, 1)].norm_sqr()).sqrt();
    let ident = CMatrix::identity(2, 2);
    if s < 1e-15 {
        return Ok(ident * (I * wrap_phase(phi)) + k);
    }
    let theta = s.atan2(trace / 2.0);
    // h = iφ I + iθ N with N = K/(is) Hermitian, N² = I.
    let n = &k * (-I / s);
    let plus = (&ident + &n) * Complex64::new(0.5, 0.0);
    let minus = (&ident - &n) * Complex64::new(0.5, 0.0);
    Ok(plus * (I * wrap_phase(phi + theta)) + minus * (I * wrap_phase(phi - theta)))
}

/// Factors `F_1, …, F_K` with `U = F_1 F_2 ⋯ F_K`, `K ≤ n(n−1)/2`, by column
/// elimination.
pub fn two_level_decompose(u: &CMatrix) -> Result<Vec<TwoLevelFactor>> {
    check_unitary(u)?;
    let n = u.nrows();
    if n < 2 {
        return Err(IrrepError::InvalidArgument("two-level decomposition needs n >= 2".into()));
    }
    let mut v = u.clone();
    let mut eliminators: Vec<TwoLevelFactor> = Vec::new();
    let apply = |v: &mut CMatrix, g: &TwoLevelFactor| *v = g.embed(n) * &*v;
    for c in 0..n - 2 {
        for r in c + 1..n {
            let a = v[(c, c)];
            let b = v[(r, c)];
            if b.norm() == 0.0 {
                continue;
            }
            let nu = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let block = CMatrix::from_row_slice(2, 2, &[a.conj() / nu, b.conj() / nu, -b / nu, a / nu]);
            let g = TwoLevelFactor { block, i: c, j: r };
            apply(&mut v, &g);
            eliminators.push(g);
        }
        let a = v[(c, c)];
        if (a - ONE).norm() > 0.0 && eliminators.last().is_none_or(|g| g.i != c) {
            let block = CMatrix::from_row_slice(2, 2, &[a.conj(), ZERO, ZERO, ONE]);
            let g = TwoLevelFactor { block, i: c, j: c + 1 };
            apply(&mut v, &g);
            eliminators.push(g);
        }
    }
    let last = v.view((n - 2, n - 2), (2, 2)).adjoint();
    if max_abs(&(&last - CMatrix::identity(2, 2))) > 0.0 {
        eliminators.push(TwoLevelFactor { block: last, i: n - 2, j: n - 1 });
    }
    // G_K ⋯ G_1 U = I, so U = G_1† ⋯ G_K†.
    Ok(eliminators
        .into_iter()
        .map(|g| TwoLevelFactor { block: g.block.adjoint(), i: g.i, j: g.j })
        .collect())
}

fn swap_factor(i: usize) -> TwoLevelFactor {
    TwoLevelFactor {
        block: CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]),
        i,
        j: i + 1,
    }
}

/// Rewrites a factor on `(i, j)` as `S ⋯ S core S ⋯ S` with the core on
/// `(i, i+1)` and swaps of adjacent vectors; `2(j−i−1)+1` factors.
pub fn adjacency_reduce(f: &TwoLevelFactor) -> Vec<TwoLevelFactor> {
    if f.is_adjacent() {
        return vec![f.clone()];
    }
    let inner = TwoLevelFactor {
        block: f.block.clone(),
        i: f.i,
        j: f.j - 1,
    };
    let mut out = vec![swap_factor(f.j - 1)];
    out.extend(adjacency_reduce(&inner));
    out.push(swap_factor(f.j - 1));
    out
}

/// Representation of `U(n)` for a fixed `gl(n)` weight.
#[derive(Debug, Clone)]
pub struct UnitaryRep {
    irrep: GlIrrep,
}

impl UnitaryRep {
    pub fn new(weight: &GTWeight) -> Result<Self> {
        Ok(UnitaryRep { irrep: GlIrrep::new(weight)? })
    }

    pub fn irrep(&self) -> &GlIrrep {
        &self.irrep
    }

    pub fn dim(&self) -> usize {
        self.irrep.dim()
    }

    /// `A_m(e^h)` for a `2 × 2` antihermitian `h` placed on `(p, p+1)`.
    pub fn adjacent_exponential(&self, h: &CMatrix, p: usize) -> Result<CMatrix> {
        let n = self.irrep.n();
        let mut big = CMatrix::zeros(n, n);
        big.view_mut((p, p), (2, 2)).copy_from(h);
        Ok(expm(&self.irrep.algebra_element(&big)?.to_dense()))
    }

    pub fn apply(&self, u: &CMatrix) -> Result<DenseUnitary> {
        let n = self.irrep.n();
        if u.nrows() != n {
            return Err(IrrepError::SizeMismatch { expected: n, found: u.nrows() });
        }
        check_unitary(u)?;
        if n == 1 {
            let m = self.irrep.basis().weight().twice_entries()[0] / 2;
            return DenseUnitary::new(CMatrix::identity(1, 1) * u[(0, 0)].powi(m as i32));
        }
        let mut out = CMatrix::identity(self.dim(), self.dim());
        for factor in two_level_decompose(u)? {
            for adjacent in adjacency_reduce(&factor) {
                let h = log_unitary_2x2(&adjacent.block)?;
                out *= self.adjacent_exponential(&h, adjacent.i)?;
            }
        }
        DenseUnitary::new(out)
    }
}

pub fn group_rep_u(weight: &GTWeight, u: &CMatrix) -> Result<DenseUnitary> {
    UnitaryRep::new(weight)?.apply(u)
}

/// An adjacent Givens rotation `exp(θ I_{q+1,q})` on zero-based `(q−1, q)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    pub q: usize,
    pub theta: f64,
}

/// Rotations with `G = Π_k exp(θ_k I_{q_k+1,q_k})`, in order.
pub fn givens_decompose(g: &DMatrix<f64>) -> Result<Vec<Rotation>> {
    let n = g.nrows();
    if !g.is_square() {
        return Err(IrrepError::SizeMismatch { expected: n, found: g.ncols() });
    }
    let deviation = (g.transpose() * g - DMatrix::identity(n, n)).amax();
    if deviation > INPUT_TOLERANCE {
        return Err(IrrepError::NotOrthogonal { deviation });
    }
    let det = g.determinant();
    if (det - 1.0).abs() > INPUT_TOLERANCE {
        return Err(IrrepError::DeterminantNotOne(det));
    }
    let mut v = g.clone();
    let mut rotations = Vec::new();
    for c in 0..n.saturating_sub(1) {
        for r in (c + 1..n).rev() {
            let (x, y) = (v[(r - 1, c)], v[(r, c)]);
            if y == 0.0 {
                continue;
            }
            let rho = x.hypot(y);
            let (cs, sn) = (x / rho, y / rho);
            for col in 0..n {
                let (a, b) = (v[(r - 1, col)], v[(r, col)]);
                v[(r - 1, col)] = cs * a + sn * b;
                v[(r, col)] = -sn * a + cs * b;
            }
            rotations.push(Rotation { q: r, theta: sn.atan2(cs) });
        }
    }
    // R_K ⋯ R_1 G = I, so G = R_1ᵀ ⋯ R_Kᵀ and R(θ)ᵀ = R(−θ).
    Ok(rotations.into_iter().map(|r| Rotation { q: r.q, theta: -r.theta }).collect())
}

/// Representation of `SO(n)` for a fixed `so(n)` weight. Half-integer
/// weights give the exponentiated algebra action, defined up to sign.
#[derive(Debug, Clone)]
pub struct OrthogonalRep {
    irrep: SoIrrep,
}

impl OrthogonalRep {
    pub fn new(weight: &GTWeight) -> Result<Self> {
        Ok(OrthogonalRep { irrep: SoIrrep::new(weight)? })
    }

    pub fn irrep(&self) -> &SoIrrep {
        &self.irrep
    }

    pub fn dim(&self) -> usize {
        self.irrep.dim()
    }

    pub fn rotation(&self, r: Rotation) -> Result<CMatrix> {
        Ok(expm(&(self.irrep.action(r.q)?.to_dense() * Complex64::new(r.theta, 0.0))))
    }

    pub fn apply(&self, g: &DMatrix<f64>) -> Result<DenseUnitary> {
        let n = self.irrep.n();
        if g.nrows() != n {
            return Err(IrrepError::SizeMismatch { expected: n, found: g.nrows() });
        }
        let mut out = CMatrix::identity(self.dim(), self.dim());
        for r in givens_decompose(g)? {
            out *= self.rotation(r)?;
        }
        DenseUnitary::new(out)
    }

    /// Trace of the torus element `Π_r exp(θ_r I_{2r,2r−1})`.
    pub fn torus_character(&self, angles: &[f64]) -> Result<Complex64> {
        let k = self.irrep.n() / 2;
        if angles.len() != k {
            return Err(IrrepError::SizeMismatch { expected: k, found: angles.len() });
        }
        let ops: Vec<&SparseOperator> = (0..k).map(|r| self.irrep.action(2 * r + 1)).collect::<Result<_>>()?;
        let sum = SparseOperator::linear_combination(
            self.dim(),
            ops.into_iter().zip(angles).map(|(op, &t)| (Complex64::new(t, 0.0), op)),
        );
        Ok(expm(&sum.to_dense()).trace())
    }
}

pub fn group_rep_so(weight: &GTWeight, g: &DMatrix<f64>) -> Result<DenseUnitary> {
    OrthogonalRep::new(weight)?.apply(g)
}

/// The `2 × 2` rotation block of `exp(θ I_{q+1,q})`.
pub fn rotation_block(theta: f64) -> DMatrix<f64> {
    let (s, c) = theta.sin_cos();
    DMatrix::from_row_slice(2, 2, &[c, s, -s, c])
}

/// `(m − m_n·1, m_n)`: the representative with last entry zero and the shift.
pub fn su_canonical_weight(weight: &[i64]) -> Result<(Vec<i64>, i64)> {
    check_decreasing(weight)?;
    let s = *weight.last().expect("non-empty");
    Ok((weight.iter().map(|m| m - s).collect(), s))
}

fn check_decreasing(weight: &[i64]) -> Result<()> {
    if weight.is_empty() || weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(IrrepError::InvalidWeight(format!("{weight:?} must be non-empty and weakly decreasing")));
    }
    Ok(())
}

/// `l_i = m_i + n − i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentVector {
    pub l: Vec<i64>,
}

impl ExponentVector {
    pub fn new(weight: &[i64]) -> Result<Self> {
        check_decreasing(weight)?;
        let n = weight.len() as i64;
        Ok(ExponentVector {
            l: weight.iter().enumerate().map(|(i, m)| m + n - 1 - i as i64).collect(),
        })
    }
}

/// `|Π_{i<j}(l_i − l_j)| / Π_{i<j}(j − i)`.
pub fn weyl_dimension(weight: &[i64]) -> Result<u128> {
    let l = ExponentVector::new(weight)?.l;
    let overflow = || IrrepError::CapExceeded {
        what: "Weyl dimension (u128)",
        requested: weight.len(),
        limit: 0,
    };
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num = num.checked_mul(l[i].abs_diff(l[j]) as u128).ok_or_else(overflow)?;
            den = den.checked_mul((j - i) as u128).ok_or_else(overflow)?;
        }
    }
    Ok(num / den)
}

/// Eigenvalues of a unitary from the complex Schur form.
pub fn unitary_eigenvalues(u: &CMatrix) -> Result<Vec<Complex64>> {
    check_unitary(u)?;
    let (_, t) = u.clone().schur().unpack();
    Ok(t.diagonal().iter().copied().collect())
}

fn min_gap(values: &[Complex64]) -> f64 {
    let mut gap = f64::INFINITY;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            gap = gap.min((values[i] - values[j]).norm());
        }
    }
    gap
}

/// `χ_m(u)` from the eigenvalues of `u`: the determinant ratio when the
/// spectrum is separated, otherwise the sum over patterns of
/// `Π_p λ_p^{w_p}`.
pub fn weyl_character_u(weight: &[i64], eigenvalues: &[Complex64]) -> Result<Complex64> {
    let l = ExponentVector::new(weight)?.l;
    let n = l.len();
    if eigenvalues.len() != n {
        return Err(IrrepError::SizeMismatch { expected: n, found: eigenvalues.len() });
    }
    if min_gap(eigenvalues) > U_GAP_TOLERANCE {
        let a = CMatrix::from_fn(n, n, |i, j| eigenvalues[i].powi(l[j] as i32));
        let b = CMatrix::from_fn(n, n, |i, j| eigenvalues[i].powi((n - 1 - j) as i32));
        return Ok(a.determinant() / b.determinant());
    }
    gt_character_u(weight, eigenvalues)
}

/// `Σ_M Π_p λ_p^{w_p(M)}` over Gel'fand patterns.
pub fn gt_character_u(weight: &[i64], eigenvalues: &[Complex64]) -> Result<Complex64> {
    let w = GTWeight::gl(weight)?;
    if eigenvalues.len() != w.n() {
        return Err(IrrepError::SizeMismatch { expected: w.n(), found: eigenvalues.len() });
    }
    let basis = crate::gelfand::PatternBasis::new(&w)?;
    Ok(basis
        .patterns()
        .iter()
        .map(|m| {
            eigenvalues
                .iter()
                .enumerate()
                .map(|(p, lam)| lam.powi(m.gl_weight_component(p + 1) as i32))
                .product::<Complex64>()
        })
        .sum())
}

/// `χ_m(g)` for `g ∈ SO(n)` with rotation angles `θ_1..θ_k`, `k = ⌊n/2⌋`.
///
/// `g` is taken to be conjugate within `SO(n)` to `Π_r exp(θ_r I_{2r,2r−1})`,
/// whose `(2r−1, 2r)` block is `[[cos θ_r, sin θ_r], [−sin θ_r, cos θ_r]]`.
/// For `n = 2k` the orientation matters: `Pf((g − gᵀ)/2) = Π_r sin θ_r`.
///
/// The Weyl determinant ratio is used away from the walls of the Weyl
/// chamber; near them the trace of the exponentiated torus generators is
/// returned instead.
pub fn weyl_character_so(weight: &GTWeight, angles: &[f64]) -> Result<Complex64> {
    let k = weight.twice_entries().len();
    if weight.group() == GroupTag::Gl {
        return Err(IrrepError::InvalidWeight("expected an so weight".into()));
    }
    if angles.len() != k {
        return Err(IrrepError::SizeMismatch { expected: k, found: angles.len() });
    }
    let odd = weight.group() == GroupTag::SoOdd;
    let m = weight.entries();
    let shift = if odd { 0.5 } else { 0.0 };
    let l: Vec<f64> = (0..k).map(|i| m[i] + (k - 1 - i) as f64 + shift).collect();
    let rho: Vec<f64> = (0..k).map(|i| (k - 1 - i) as f64 + shift).collect();

    let mut wall = f64::INFINITY;
    for i in 0..k {
        for j in i + 1..k {
            wall = wall.min((angles[i].cos() - angles[j].cos()).abs());
        }
        if odd {
            wall = wall.min((angles[i] / 2.0).sin().abs());
        }
    }
    if wall < SO_GAP_TOLERANCE {
        return OrthogonalRep::new(weight)?.torus_character(angles);
    }
    let sines = |e: &[f64]| DMatrix::from_fn(k, k, |i, j| (e[i] * angles[j]).sin());
    if odd {
        return Ok(Complex64::new(sines(&l).determinant() / sines(&rho).determinant(), 0.0));
    }
    let cosines = |e: &[f64]| DMatrix::from_fn(k, k, |i, j| 2.0 * (e[i] * angles[j]).cos());
    let f = sines(&l).determinant() * 2f64.powi(k as i32);
    let e = cosines(&l).determinant();
    let g = cosines(&rho).determinant();
    // det F carries a factor i^k from 2i sin(l θ).
    Ok((Complex64::new(e, 0.0) + I.powi(k as i32) * f) / g)
}

/// Spectral norm and Gershgorin bound of `a_m(H_p)` at one position.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormEntry {
    pub position: usize,
    pub spectral_norm: f64,
    pub gershgorin_bound: f64,
}

/// `‖a_m(H_p)‖` for `H_p` equal to `h` on `(p, p+1)`, `p = 0..n−2`.
pub fn norm_profile(weight: &GTWeight, h: &CMatrix) -> Result<Vec<NormEntry>> {
    if h.shape() != (2, 2) {
        return Err(IrrepError::SizeMismatch { expected: 2, found: h.nrows() });
    }
    let defect = max_abs(&(h + h.adjoint()));
    if defect > INPUT_TOLERANCE {
        return Err(IrrepError::InvalidArgument(format!("h is not antihermitian (deviation {defect:e})")));
    }
    let irrep = GlIrrep::new(weight)?;
    let n = irrep.n();
    if n < 2 {
        return Err(IrrepError::InvalidArgument("norm profile needs n >= 2".into()));
    }
    (0..n - 1)
        .map(|p| {
            let mut big = CMatrix::zeros(n, n);
            big.view_mut((p, p), (2, 2)).copy_from(h);
            let a = irrep.algebra_element(&big)?;
            Ok(NormEntry {
                position: p,
                spectral_norm: spectral_norm(&a.to_dense()),
                gershgorin_bound: a.max_row_sum(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{haar_unitary, random_antihermitian};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn log_of_simple_unitaries() {
        let id = CMatrix::identity(2, 2);
        assert!(max_abs(&log_unitary_2x2(&id).unwrap()) < 1e-15);
        for theta in [0.3, -2.0, 3.0, PI] {
            let u = CMatrix::from_diagonal(&crate::linalg::CVector::from_vec(vec![
                Complex64::from_polar(1.0, theta),
                Complex64::from_polar(1.0, -theta),
            ]));
            let h = log_unitary_2x2(&u).unwrap();
            let expected_top = wrap_phase(theta);
            assert!((h[(0, 0)] - I * expected_top).norm() < 1e-12, "{theta}: {h}");
            assert!((h[(1, 1)] - I * wrap_phase(-theta)).norm() < 1e-12);
        }
        let bad = CMatrix::identity(2, 2) * Complex64::new(2.0, 0.0);
        assert!(matches!(log_unitary_2x2(&bad), Err(IrrepError::NotUnitary { .. })));
    }

    #[test]
    fn log_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..500 {
            let u = haar_unitary(2, &mut rng);
            let h = log_unitary_2x2(&u).unwrap();
            assert!(max_abs(&(expm(&h) - &u)) <= 1e-10);
            assert!(max_abs(&(&h + h.adjoint())) <= 1e-12);
            assert!(spectral_norm(&h) <= PI + 1e-12);
        }
        let swap = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]);
        assert!(max_abs(&(expm(&log_unitary_2x2(&swap).unwrap()) - &swap)) <= 1e-12);
        let minus = -CMatrix::identity(2, 2);
        assert!(max_abs(&(expm(&log_unitary_2x2(&minus).unwrap()) - &minus)) <= 1e-12);
    }

    #[test]
    fn decomposition_edge_cases() {
        assert!(two_level_decompose(&CMatrix::identity(4, 4)).unwrap().is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = haar_unitary(2, &mut rng);
        let f = two_level_decompose(&u).unwrap();
        assert_eq!(f.len(), 1);
        assert!(max_abs(&(f[0].embed(2) - &u)) < 1e-12);
        assert!(two_level_decompose(&CMatrix::identity(1, 1)).is_err());
        let d = CMatrix::from_diagonal(&crate::linalg::CVector::from_vec(vec![I, -ONE, ONE, -I]));
        let f = two_level_decompose(&d).unwrap();
        let prod = f.iter().fold(CMatrix::identity(4, 4), |acc, g| acc * g.embed(4));
        assert!(max_abs(&(prod - d)) < 1e-12);
    }

    #[test]
    fn reduction_to_adjacent_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let block = haar_unitary(2, &mut rng);
        let f = TwoLevelFactor::new(block.clone(), 1, 3).unwrap();
        let parts = adjacency_reduce(&f);
        assert_eq!(parts.len(), 3);
        let n = 6;
        let f = TwoLevelFactor::new(block, 0, n - 1).unwrap();
        let parts = adjacency_reduce(&f);
        assert_eq!(parts.len(), 2 * (n - 2) + 1);
        assert!(parts.iter().all(TwoLevelFactor::is_adjacent));
        let prod = parts.iter().fold(CMatrix::identity(n, n), |acc, g| acc * g.embed(n));
        assert!(max_abs(&(prod - f.embed(n))) < 1e-10);
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dimension(&[0, 0, 0]).unwrap(), 1);
        assert_eq!(weyl_dimension(&[2, 1, 0]).unwrap(), 8);
        assert_eq!(weyl_dimension(&[1, 0, 0, 0, 0]).unwrap(), 5);
        assert_eq!(weyl_dimension(&[1, 0, -1]).unwrap(), 8);
        assert!(weyl_dimension(&[0, 1]).is_err());
        assert_eq!(su_canonical_weight(&[3, 2, 1]).unwrap(), (vec![2, 1, 0], 1));
        assert_eq!(su_canonical_weight(&[0, 0, 0]).unwrap(), (vec![0, 0, 0], 0));
    }

    #[test]
    fn u_characters_two_ways() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = haar_unitary(3, &mut rng);
        let eig = unitary_eigenvalues(&u).unwrap();
        for w in [[2, 1, 0], [1, 0, -1], [3, 0, 0]] {
            let det_ratio = weyl_character_u(&w, &eig).unwrap();
            let patterns = gt_character_u(&w, &eig).unwrap();
            assert!((det_ratio - patterns).norm() < 1e-8);
        }
        let trace: Complex64 = eig.iter().sum();
        assert!((weyl_character_u(&[1, 0, 0], &eig).unwrap() - trace).norm() < 1e-10);
        let ones = vec![ONE; 3];
        assert!((weyl_character_u(&[2, 1, 0], &ones).unwrap() - Complex64::new(8.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn so_characters() {
        let spin = |twice: i64| GTWeight::so(3, vec![twice]).unwrap();
        for theta in [0.4, 1.3, 2.9, -0.7] {
            let chi = weyl_character_so(&spin(2), &[theta]).unwrap();
            assert!((chi.re - (1.0 + 2.0 * f64::cos(theta))).abs() < 1e-12);
            for j in 0..=3 {
                let expected: f64 = (-j..=j).map(|m| (m as f64 * theta).cos()).sum();
                assert!((weyl_character_so(&spin(2 * j), &[theta]).unwrap().re - expected).abs() < 1e-8);
            }
        }
        let so4 = GTWeight::so(4, vec![2, 0]).unwrap();
        let (a, b) = (0.3, 1.1);
        let chi = weyl_character_so(&so4, &[a, b]).unwrap();
        assert!((chi.re - 2.0 * (a.cos() + b.cos())).abs() < 1e-12);
        let so2 = GTWeight::so(2, vec![6]).unwrap();
        let chi = weyl_character_so(&so2, &[0.5]).unwrap();
        assert!((chi - Complex64::from_polar(1.0, 1.5)).norm() < 1e-12);
        let zero = GTWeight::so(5, vec![0, 0]).unwrap();
        assert!((weyl_character_so(&zero, &[0.2, 0.9]).unwrap() - ONE).norm() < 1e-12);
        // Degenerate angles fall back to the torus trace.
        let so5 = GTWeight::so(5, vec![2, 0]).unwrap();
        let chi = weyl_character_so(&so5, &[0.0, 0.8]).unwrap();
        assert!((chi.re - (1.0 + 2.0 + 2.0 * 0.8f64.cos())).abs() < 1e-10);
        let chi = weyl_character_so(&so5, &[0.8, 0.8]).unwrap();
        assert!((chi.re - (1.0 + 4.0 * 0.8f64.cos())).abs() < 1e-10);
    }

    #[test]
    fn norms_are_position_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let h = random_antihermitian(2, &mut rng);
        let w = GTWeight::gl(&[2, 1, 0]).unwrap();
        let profile = norm_profile(&w, &h).unwrap();
        assert_eq!(profile.len(), 2);
        assert!((profile[0].spectral_norm - profile[1].spectral_norm).abs() <= 1e-8);
        assert!(profile.iter().all(|e| e.spectral_norm <= e.gershgorin_bound + 1e-12));
        let zero = norm_profile(&w, &CMatrix::zeros(2, 2)).unwrap();
        assert!(zero.iter().all(|e| e.spectral_norm == 0.0));
    }
}
