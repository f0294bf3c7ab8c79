//! Permutations of `{1..n}` with one-based images.
//!
//! Composition is fixed globally as `(p ∘ q)(i) = p(q(i))`; every
//! representation in this crate satisfies `ρ(p ∘ q) = ρ(p) ρ(q)` under it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IrrepError, Result};

/// An element of S_n, stored as its image array.
///
/// Serializes as the one-based image array, e.g. `[2,3,1,5,4]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // zero-based: images[i] = π(i+1) - 1
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-based images (`images[i-1] = π(i)`).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(IrrepError::InvalidPermutation("n must be at least 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in &images {
            if img == 0 || img > n {
                return Err(IrrepError::InvalidPermutation(format!(
                    "image {img} outside 1..={n}"
                )));
            }
            if seen[img - 1] {
                return Err(IrrepError::InvalidPermutation(format!(
                    "image {img} repeated"
                )));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation from zero-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        Self::new(images.into_iter().map(|i| i + 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The adjacent transposition σ_i swapping `i` and `i+1` (one-based, `1 ≤ i < n`).
    pub fn adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(IrrepError::OutOfRange {
                what: "adjacent transposition index",
                value: i as i64,
                range: format!("1..={}", n.saturating_sub(1)),
            });
        }
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `(a b)` in S_n (one-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(IrrepError::OutOfRange {
                    what: "transposed point",
                    value: v as i64,
                    range: format!("1..={n}"),
                });
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// Rebuilds `σ_{w_1} ∘ σ_{w_2} ∘ … ∘ σ_{w_k}` from a word of adjacent indices.
    pub fn from_adjacent_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &i in word {
            p = p.compose(&Permutation::adjacent(n, i)?)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `π(i)` for one-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// One-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(IrrepError::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Number of pairs `i < j` with `π(i) > π(j)`.
    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Orbits of `{1..n}`, each listed from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Reduced word for the permutation in adjacent transpositions.
    ///
    /// The returned `[w_1, …, w_k]` satisfies `self = σ_{w_1} ∘ … ∘ σ_{w_k}` and
    /// `k` equals the inversion number.
    pub fn bubblesort_decompose(&self) -> Vec<usize> {
        // Swapping array positions j, j+1 is right multiplication by σ_{j+1};
        // sorting gives p ∘ σ_{s_1} ∘ … ∘ σ_{s_k} = id.
        let mut a = self.images.clone();
        let n = a.len();
        let mut swaps = Vec::new();
        for pass in 0..n {
            let mut swapped = false;
            for j in 0..n - 1 - pass.min(n - 1) {
                if a[j] > a[j + 1] {
                    a.swap(j, j + 1);
                    swaps.push(j + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        swaps.reverse();
        swaps
    }

    /// The statistics used to describe candidate hard instances.
    pub fn stats(&self) -> PermStats {
        let coxeter_length = self.inversions();
        let moved: Vec<usize> = (0..self.n()).filter(|&i| self.images[i] != i).collect();
        PermStats {
            sign: if coxeter_length % 2 == 0 { 1 } else { -1 },
            min_transpositions: self.n() - self.cycles().len(),
            moved: moved.len(),
            largest_moved: moved.last().map_or(0, |&i| i + 1),
            coxeter_length,
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = IrrepError;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `s(π)`, `l(π)`, `r(π)`, `|π|` and the sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermStats {
    pub sign: i32,
    /// `|π|`: minimum number of (arbitrary) transpositions.
    pub min_transpositions: usize,
    /// `s(π)`: number of points not fixed.
    pub moved: usize,
    /// `l(π)`: largest point not fixed, 0 for the identity.
    pub largest_moved: usize,
    /// `r(π)`: minimum number of adjacent transpositions (inversion number).
    pub coxeter_length: usize,
}

/// Partition of `n` given by orbit sizes, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Accepts positive parts in any order and sorts them descending.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(IrrepError::InvalidArgument(
                "cycle type parts must be positive and non-empty".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// A permutation with this cycle type: consecutive blocks `(1 2 … μ_1)(μ_1+1 …)…`.
    pub fn representative(&self) -> Permutation {
        let n = self.n();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in &self.parts {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }
}

impl TryFrom<Vec<usize>> for CycleType {
    type Error = IrrepError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        CycleType::new(parts)
    }
}

impl From<CycleType> for Vec<usize> {
    fn from(c: CycleType) -> Self {
        c.parts
    }
}

/// The transposition `(1 n)`: few moved points, but `l = n` and `r = 2n - 3`.
pub fn hard_instance(n: usize) -> Result<Permutation> {
    if n < 2 {
        return Err(IrrepError::OutOfRange {
            what: "n",
            value: n as i64,
            range: ">= 2".into(),
        });
    }
    Permutation::transposition(n, 1, n)
}

/// Every permutation of S_n in lexicographic order of image arrays.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(Permutation {
                images: prefix.clone(),
            });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
