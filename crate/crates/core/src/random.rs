//! Random group elements for tests, benchmarks and the CLI.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::perm::Permutation;

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_zero_based(v).expect("shuffle is a bijection")
}

pub fn random_even_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let p = random_permutation(n, rng);
    if p.is_even() || n < 2 {
        p
    } else {
        Permutation::transposition(n, 1, 2)
            .and_then(|t| t.compose(&p))
            .expect("n >= 2")
    }
}

fn gaussian_complex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) / std::f64::consts::SQRT_2
    })
}

/// Haar-distributed element of U(n) (QR of a Ginibre matrix with phase correction).
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let qr = gaussian_complex(n, rng).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar-distributed element of SU(n).
pub fn haar_special_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let u = haar_unitary(n, rng);
    let det = u.determinant();
    let correction = Complex64::from_polar(1.0, -det.arg() / n as f64);
    u * correction
}

/// Haar-distributed element of SO(n), returned as a real matrix.
pub fn haar_rotation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let (mut q, r) = g.qr().unpack();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            for i in 0..n {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    if q.determinant() < 0.0 {
        for i in 0..n {
            q[(i, 0)] = -q[(i, 0)];
        }
    }
    q
}

/// Random antihermitian `n × n` matrix with Gaussian entries.
pub fn random_antihermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = gaussian_complex(n, rng);
    (&g - g.adjoint()) * Complex64::new(0.5, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_samples_are_in_the_group() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..6 {
            let u = haar_unitary(n, &mut rng);
            let dev = crate::linalg::unitarity_defect(&u);
            assert!(dev < 1e-12);
            let su = haar_special_unitary(n, &mut rng);
            assert!((su.determinant() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
            let o = haar_rotation(n, &mut rng);
            assert!((o.transpose() * &o - DMatrix::identity(n, n)).amax() < 1e-12);
            assert!((o.determinant() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn even_permutations_are_even() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..8 {
            for _ in 0..20 {
                assert!(random_even_permutation(n, &mut rng).is_even());
            }
        }
    }
}
