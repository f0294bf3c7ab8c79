//! Gel'fand–Tsetlin patterns and the Lie-algebra actions on their span.
//!
//! Entries are stored doubled so that half-integer `so(n)` weights stay exact.
//! Rows are indexed by their length label: a `gl(n)` pattern has rows
//! `n, n−1, …, 1`, row `p` holding `p` entries; an `so(n)` pattern has rows
//! `n, …, 2`, row `p` holding `⌊p/2⌋` entries. The top row is the weight.
//!
//! Patterns are ordered lexicographically on the entries of row `n−1`, then
//! row `n−2`, and so on.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{IrrepError, Result};
use crate::linalg::{real, CMatrix, SparseOperator, ZERO};

pub const DEFAULT_PATTERN_CAP: usize = 20_000;

/// Largest count `gt_dimension` will reach before giving up; counting stores no patterns.
pub const DEFAULT_COUNT_CAP: usize = 50_000_000;

/// Magnitude below which a coefficient attached to an invalid pattern counts
/// as vanishing.
const VANISH_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupTag {
    Gl,
    SoOdd,
    SoEven,
}

impl GroupTag {
    fn row_width(self, p: usize) -> usize {
        match self {
            GroupTag::Gl => p,
            _ => p / 2,
        }
    }

    fn lowest_row(self) -> usize {
        match self {
            GroupTag::Gl => 1,
            _ => 2,
        }
    }
}

#[derive(Deserialize)]
struct RawWeight {
    group: GroupTag,
    twice_entries: Vec<i64>,
}

/// Highest weight, stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWeight")]
pub struct GTWeight {
    group: GroupTag,
    twice_entries: Vec<i64>,
}

impl TryFrom<RawWeight> for GTWeight {
    type Error = IrrepError;

    fn try_from(raw: RawWeight) -> Result<Self> {
        GTWeight::new(raw.group, raw.twice_entries)
    }
}

impl GTWeight {
    pub fn new(group: GroupTag, twice_entries: Vec<i64>) -> Result<Self> {
        let bad = |msg: &str| Err(IrrepError::InvalidWeight(format!("{group:?} {twice_entries:?}: {msg}")));
        let k = twice_entries.len();
        if k == 0 {
            return bad("weight must have at least one entry");
        }
        if twice_entries.windows(2).any(|w| w[0] < w[1]) {
            if !(group == GroupTag::SoEven && k >= 2 && twice_entries[..k - 1].windows(2).all(|w| w[0] >= w[1])) {
                return bad("entries must be weakly decreasing");
            }
        }
        let parity = twice_entries[0].rem_euclid(2);
        if twice_entries.iter().any(|&e| e.rem_euclid(2) != parity) {
            return bad("entries must be all integers or all half-integers");
        }
        match group {
            GroupTag::Gl if parity != 0 => return bad("gl weights are integers"),
            GroupTag::SoOdd if twice_entries[k - 1] < 0 => return bad("so(2k+1) weights are non-negative"),
            GroupTag::SoEven if k >= 2 && twice_entries[k - 2] < twice_entries[k - 1].abs() => {
                return bad("so(2k) weights need m_(k-1) >= |m_k|");
            }
            _ => {}
        }
        Ok(GTWeight { group, twice_entries })
    }

    pub fn gl(entries: &[i64]) -> Result<Self> {
        GTWeight::new(GroupTag::Gl, entries.iter().map(|e| 2 * e).collect())
    }

    /// Weight for `SO(n)` from doubled entries; the parity of `n` picks the tag.
    pub fn so(n: usize, twice_entries: Vec<i64>) -> Result<Self> {
        if n < 2 || twice_entries.len() != n / 2 {
            return Err(IrrepError::InvalidWeight(format!(
                "SO({n}) needs {} entries, got {}",
                n / 2,
                twice_entries.len()
            )));
        }
        let group = if n % 2 == 1 { GroupTag::SoOdd } else { GroupTag::SoEven };
        GTWeight::new(group, twice_entries)
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn twice_entries(&self) -> &[i64] {
        &self.twice_entries
    }

    pub fn entries(&self) -> Vec<f64> {
        self.twice_entries.iter().map(|&e| e as f64 / 2.0).collect()
    }

    /// Integer entries of a weight whose entries are all integers.
    pub fn integer_entries(&self) -> Option<Vec<i64>> {
        self.is_integral().then(|| self.twice_entries.iter().map(|e| e / 2).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.twice_entries.iter().all(|e| e % 2 == 0)
    }

    /// `n` in `gl(n)` / `so(n)`.
    pub fn n(&self) -> usize {
        let k = self.twice_entries.len();
        match self.group {
            GroupTag::Gl => k,
            GroupTag::SoOdd => 2 * k + 1,
            GroupTag::SoEven => 2 * k,
        }
    }

    fn require(&self, gl: bool) -> Result<()> {
        if (self.group == GroupTag::Gl) != gl {
            return Err(IrrepError::InvalidWeight(format!(
                "expected a {} weight, got {:?}",
                if gl { "gl" } else { "so" },
                self.group
            )));
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GelfandPattern {
    group: GroupTag,
    /// `rows[p]` is row `p`, doubled; unused low rows are empty.
    rows: Vec<Vec<i64>>,
}

impl GelfandPattern {
    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Doubled entries of row `p`.
    pub fn twice_row(&self, p: usize) -> &[i64] {
        &self.rows[p]
    }

    /// `m_{j,p}` (one-based `j`).
    pub fn entry(&self, j: usize, p: usize) -> f64 {
        self.rows[p][j - 1] as f64 / 2.0
    }

    /// Doubled rows from the top row down to the lowest row.
    pub fn twice_rows(&self) -> Vec<Vec<i64>> {
        (self.group.lowest_row()..=self.n()).rev().map(|p| self.rows[p].clone()).collect()
    }

    fn key(&self) -> Vec<i64> {
        (self.group.lowest_row()..self.n()).rev().flat_map(|p| self.rows[p].iter().copied()).collect()
    }

    fn shifted(&self, p: usize, j: usize, twice_delta: i64) -> GelfandPattern {
        let mut out = self.clone();
        out.rows[p][j - 1] += twice_delta;
        out
    }

    pub fn is_valid(&self) -> bool {
        (self.group.lowest_row() + 1..=self.n()).all(|p| {
            let bounds = lower_bounds(self.group, p, &self.rows[p]);
            bounds.len() == self.rows[p - 1].len()
                && bounds
                    .iter()
                    .zip(&self.rows[p - 1])
                    .all(|(&(lo, hi), &x)| lo <= x && x <= hi && (hi - x) % 2 == 0)
        })
    }

    /// Row-sum difference `Σ m_{i,p} − Σ m_{j,p−1}`, the `E_pp` eigenvalue.
    pub fn gl_weight_component(&self, p: usize) -> f64 {
        let sum = |q: usize| self.rows[q].iter().sum::<i64>() as f64 / 2.0;
        sum(p) - if p > 1 { sum(p - 1) } else { 0.0 }
    }
}

impl fmt::Debug for GelfandPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<f64>> = self
            .twice_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|e| e as f64 / 2.0).collect())
            .collect();
        write!(f, "Pattern{rows:?}")
    }
}

/// Inclusive doubled bounds for the entries of row `p − 1` below `upper`.
fn lower_bounds(group: GroupTag, p: usize, upper: &[i64]) -> Vec<(i64, i64)> {
    let width = group.row_width(p - 1);
    (0..width)
        .map(|j| {
            let hi = upper[j];
            let lo = match group {
                GroupTag::Gl => upper[j + 1],
                _ if j + 1 < width => upper[j + 1],
                _ if (p - 1) % 2 == 0 => -upper[j],
                _ => upper[j + 1].abs(),
            };
            (lo, hi)
        })
        .collect()
}

/// All patterns of a weight, in canonical order, with a reverse index.
#[derive(Debug, Clone)]
pub struct PatternBasis {
    weight: GTWeight,
    patterns: Vec<GelfandPattern>,
    index: HashMap<Vec<i64>, usize>,
}

impl PatternBasis {
    pub fn new(weight: &GTWeight) -> Result<Self> {
        PatternBasis::with_cap(weight, DEFAULT_PATTERN_CAP)
    }

    pub fn with_cap(weight: &GTWeight, cap: usize) -> Result<Self> {
        let n = weight.n();
        let mut rows = vec![Vec::new(); n + 1];
        rows[n] = weight.twice_entries.clone();
        let mut patterns = Vec::new();
        descend(weight.group, n, &mut rows, &mut patterns, cap)?;
        let index = patterns.iter().enumerate().map(|(i, m)| (m.key(), i)).collect();
        Ok(PatternBasis {
            weight: weight.clone(),
            patterns,
            index,
        })
    }

    pub fn weight(&self) -> &GTWeight {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[GelfandPattern] {
        &self.patterns
    }

    pub fn index_of(&self, m: &GelfandPattern) -> Option<usize> {
        self.index.get(&m.key()).copied()
    }
}

fn descend(
    group: GroupTag,
    p: usize,
    rows: &mut Vec<Vec<i64>>,
    out: &mut Vec<GelfandPattern>,
    cap: usize,
) -> Result<()> {
    if p <= group.lowest_row() {
        if out.len() == cap {
            return Err(IrrepError::CapExceeded {
                what: "Gel'fand patterns",
                requested: cap + 1,
                limit: cap,
            });
        }
        out.push(GelfandPattern {
            group,
            rows: rows.clone(),
        });
        return Ok(());
    }
    let bounds = lower_bounds(group, p, &rows[p]);
    let mut current: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        rows[p - 1] = current.clone();
        descend(group, p - 1, rows, out, cap)?;
        let Some(pos) = (0..current.len()).rev().find(|&i| current[i] + 2 <= bounds[i].1) else {
            return Ok(());
        };
        current[pos] += 2;
        for i in pos + 1..current.len() {
            current[i] = bounds[i].0;
        }
    }
}

pub fn enumerate_patterns(weight: &GTWeight) -> Result<Vec<GelfandPattern>> {
    Ok(PatternBasis::new(weight)?.patterns)
}

/// Number of patterns, i.e. the dimension of the irreducible representation.
pub fn gt_dimension(weight: &GTWeight) -> Result<usize> {
    gt_dimension_capped(weight, DEFAULT_COUNT_CAP)
}

pub fn gt_dimension_capped(weight: &GTWeight, cap: usize) -> Result<usize> {
    let mut count = 0;
    count_patterns(weight.group, weight.n(), &weight.twice_entries, &mut count, cap)?;
    Ok(count)
}

fn count_patterns(group: GroupTag, p: usize, upper: &[i64], count: &mut usize, cap: usize) -> Result<()> {
    if p <= group.lowest_row() {
        if *count == cap {
            return Err(IrrepError::CapExceeded {
                what: "Gel'fand patterns",
                requested: cap + 1,
                limit: cap,
            });
        }
        *count += 1;
        return Ok(());
    }
    let bounds = lower_bounds(group, p, upper);
    let mut current: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    loop {
        count_patterns(group, p - 1, &current, count, cap)?;
        let Some(pos) = (0..current.len()).rev().find(|&i| current[i] + 2 <= bounds[i].1) else {
            return Ok(());
        };
        current[pos] += 2;
        for i in pos + 1..current.len() {
            current[i] = bounds[i].0;
        }
    }
}

/// Adds `sign · scale · sqrt|num/den|` at `(target, col)`, or checks that the
/// numerator vanishes when `target` is not a pattern.
fn push_term(
    basis: &PatternBasis,
    triplets: &mut Vec<(usize, usize, num_complex::Complex64)>,
    col: usize,
    target: &GelfandPattern,
    (num, den): (f64, f64),
    scale: f64,
) -> Result<()> {
    match basis.index_of(target) {
        Some(row) => {
            if den == 0.0 {
                return Err(IrrepError::Invariant(format!("zero denominator reaching valid {target:?}")));
            }
            triplets.push((row, col, real(scale * (num / den).abs().sqrt())));
        }
        None if num.abs() > VANISH_TOL => {
            return Err(IrrepError::Invariant(format!(
                "coefficient {num} attached to invalid {target:?} does not vanish"
            )));
        }
        None => {}
    }
    Ok(())
}

/// Adjacent generators of `gl(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlGenerator {
    /// `E_{p−1,p}`, `2 ≤ p ≤ n`.
    Raise(usize),
    /// `E_{p,p−1}`, `2 ≤ p ≤ n`.
    Lower(usize),
    /// `E_{p,p}`, `1 ≤ p ≤ n`.
    Diagonal(usize),
}

/// The representation `a_m` of `gl(n)` on the pattern basis.
#[derive(Debug, Clone)]
pub struct GlIrrep {
    basis: PatternBasis,
    raise: Vec<SparseOperator>,
    lower: Vec<SparseOperator>,
    diagonal: Vec<SparseOperator>,
}

fn gl_l(m: &GelfandPattern, i: usize, p: usize) -> f64 {
    m.entry(i, p) - i as f64
}

/// Numerator and denominator of the raising coefficient `a^j_{p−1}` (`sign = 1`)
/// or the lowering coefficient `b^j_{p−1}` (`sign = −1`).
fn gl_coefficient(m: &GelfandPattern, p: usize, j: usize, raise: bool) -> (f64, f64) {
    let lj = gl_l(m, j, p - 1);
    let (s_top, s_below, s_den) = if raise { (0.0, -1.0, -1.0) } else { (1.0, 0.0, 1.0) };
    let mut num: f64 = (1..=p).map(|i| gl_l(m, i, p) - lj + s_top).product();
    if p >= 3 {
        num *= (1..=p - 2).map(|i| gl_l(m, i, p - 2) - lj + s_below).product::<f64>();
    }
    let den = (1..p)
        .filter(|&i| i != j)
        .map(|i| {
            let d = gl_l(m, i, p - 1) - lj;
            d * (d + s_den)
        })
        .product();
    (num, den)
}

impl GlIrrep {
    pub fn new(weight: &GTWeight) -> Result<Self> {
        GlIrrep::with_cap(weight, DEFAULT_PATTERN_CAP)
    }

    pub fn with_cap(weight: &GTWeight, cap: usize) -> Result<Self> {
        weight.require(true)?;
        let basis = PatternBasis::with_cap(weight, cap)?;
        let n = weight.n();
        let dim = basis.dim();
        let mut raise = Vec::with_capacity(n.saturating_sub(1));
        let mut lower = Vec::with_capacity(n.saturating_sub(1));
        for p in 2..=n {
            for (ops, up) in [(&mut raise, true), (&mut lower, false)] {
                let mut triplets = Vec::new();
                for (col, m) in basis.patterns().iter().enumerate() {
                    for j in 1..p {
                        let target = m.shifted(p - 1, j, if up { 2 } else { -2 });
                        push_term(&basis, &mut triplets, col, &target, gl_coefficient(m, p, j, up), 1.0)?;
                    }
                }
                ops.push(SparseOperator::from_triplets(dim, triplets));
            }
        }
        let diagonal = (1..=n)
            .map(|p| {
                SparseOperator::from_triplets(
                    dim,
                    basis.patterns().iter().enumerate().map(|(i, m)| (i, i, real(m.gl_weight_component(p)))),
                )
            })
            .collect();
        Ok(GlIrrep {
            basis,
            raise,
            lower,
            diagonal,
        })
    }

    pub fn basis(&self) -> &PatternBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn n(&self) -> usize {
        self.basis.weight().n()
    }

    fn check_index(&self, what: &'static str, value: usize, lo: usize) -> Result<()> {
        if value < lo || value > self.n() {
            return Err(IrrepError::OutOfRange {
                what,
                value: value as i64,
                range: format!("{lo}..={}", self.n()),
            });
        }
        Ok(())
    }

    pub fn action(&self, generator: GlGenerator) -> Result<&SparseOperator> {
        match generator {
            GlGenerator::Raise(p) => {
                self.check_index("generator index p", p, 2)?;
                Ok(&self.raise[p - 2])
            }
            GlGenerator::Lower(p) => {
                self.check_index("generator index p", p, 2)?;
                Ok(&self.lower[p - 2])
            }
            GlGenerator::Diagonal(p) => {
                self.check_index("generator index p", p, 1)?;
                Ok(&self.diagonal[p - 1])
            }
        }
    }

    /// `a(E_{ij})` for one-based `i, j`, from commutators of adjacent generators.
    pub fn generator(&self, i: usize, j: usize) -> Result<SparseOperator> {
        self.check_index("matrix unit row", i, 1)?;
        self.check_index("matrix unit column", j, 1)?;
        if i == j {
            return Ok(self.diagonal[i - 1].clone());
        }
        if j == i + 1 {
            return Ok(self.raise[j - 2].clone());
        }
        if i == j + 1 {
            return Ok(self.lower[i - 2].clone());
        }
        let k = if i < j { i + 1 } else { i - 1 };
        Ok(self.generator(i, k)?.commutator(&self.generator(k, j)?))
    }

    /// `a(H) = Σ h_ab a(E_ab)` for `H` supported on one adjacent `2 × 2` block.
    pub fn algebra_element(&self, h: &CMatrix) -> Result<SparseOperator> {
        let n = self.n();
        if h.nrows() != n || h.ncols() != n {
            return Err(IrrepError::SizeMismatch { expected: n, found: h.nrows() });
        }
        let support: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| h[(a, b)] != ZERO)
            .collect();
        let lo = support.iter().map(|&(a, b)| a.min(b)).min().unwrap_or(0);
        let hi = support.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        if hi > lo + 1 {
            return Err(IrrepError::UnsupportedSupport);
        }
        self.linear_combination(h, &support)
    }

    /// `a(H) = Σ h_ab a(E_ab)` for arbitrary `H`.
    pub fn algebra_element_general(&self, h: &CMatrix) -> Result<SparseOperator> {
        let n = self.n();
        if h.nrows() != n || h.ncols() != n {
            return Err(IrrepError::SizeMismatch { expected: n, found: h.nrows() });
        }
        let support: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| h[(a, b)] != ZERO)
            .collect();
        self.linear_combination(h, &support)
    }

    fn linear_combination(&self, h: &CMatrix, support: &[(usize, usize)]) -> Result<SparseOperator> {
        let ops = support
            .iter()
            .map(|&(a, b)| self.generator(a + 1, b + 1))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseOperator::linear_combination(
            self.dim(),
            support.iter().zip(&ops).map(|(&(a, b), op)| (h[(a, b)], op)),
        ))
    }
}

pub fn gl_action(weight: &GTWeight, generator: GlGenerator) -> Result<SparseOperator> {
    GlIrrep::new(weight)?.action(generator).cloned()
}

pub fn gl_action_general(weight: &GTWeight, i: usize, j: usize) -> Result<SparseOperator> {
    GlIrrep::new(weight)?.generator(i, j)
}

pub fn gl_algebra_element(weight: &GTWeight, h: &CMatrix) -> Result<SparseOperator> {
    GlIrrep::new(weight)?.algebra_element(h)
}

/// The representation `b_m` of `so(n)` on the pattern basis, given by the
/// images of `I_{q+1,q} = E_{q,q+1} − E_{q+1,q}`.
#[derive(Debug, Clone)]
pub struct SoIrrep {
    basis: PatternBasis,
    generators: Vec<SparseOperator>,
}

fn so_l(m: &GelfandPattern, j: usize, row: usize) -> f64 {
    let p = (row / 2) as f64;
    let shift = if row % 2 == 1 { 1.0 } else { 0.0 };
    m.entry(j, row) + p - j as f64 + shift
}

fn so_row(m: &GelfandPattern, row: usize) -> impl Iterator<Item = f64> + '_ {
    (1..=m.group.row_width(row)).map(move |r| so_l(m, r, row))
}

/// `A^j_{2p}` before the overall `1/2` and square root.
fn so_a(m: &GelfandPattern, p: usize, j: usize) -> (f64, f64) {
    let x = so_l(m, j, 2 * p) + 0.5;
    let num = so_row(m, 2 * p - 1)
        .chain(so_row(m, 2 * p + 1))
        .map(|l| (l - 0.5).powi(2) - x * x)
        .product();
    let lj = so_l(m, j, 2 * p);
    let den = (1..=p)
        .filter(|&r| r != j)
        .map(|r| {
            let lr = so_l(m, r, 2 * p);
            (lr * lr - lj * lj) * (lr * lr - (lj + 1.0).powi(2))
        })
        .product();
    (num, den)
}

/// `B^j_{2p+1}` before the square root.
fn so_b(m: &GelfandPattern, p: usize, j: usize) -> (f64, f64) {
    let lj2 = so_l(m, j, 2 * p + 1).powi(2);
    let num = so_row(m, 2 * p).chain(so_row(m, 2 * p + 2)).map(|l| l * l - lj2).product();
    let den = lj2 * (4.0 * lj2 - 1.0)
        * (1..=p)
            .filter(|&r| r != j)
            .map(|r| {
                let lr = so_l(m, r, 2 * p + 1);
                (lr * lr - lj2) * (lj2 - (lr - 1.0).powi(2))
            })
            .product::<f64>();
    (num, den)
}

/// `C_{2p}`; the `0/0` case at `m_{p,2p+1} = 0` is zero.
fn so_c(m: &GelfandPattern, p: usize) -> Result<f64> {
    let num: f64 = so_row(m, 2 * p).chain(so_row(m, 2 * p + 2)).product();
    let den: f64 = so_row(m, 2 * p + 1).map(|l| l * (l - 1.0)).product();
    if den == 0.0 {
        if num.abs() > VANISH_TOL {
            return Err(IrrepError::Invariant(format!("C coefficient {num}/0 on {m:?}")));
        }
        return Ok(0.0);
    }
    Ok(num / den)
}

impl SoIrrep {
    pub fn new(weight: &GTWeight) -> Result<Self> {
        SoIrrep::with_cap(weight, DEFAULT_PATTERN_CAP)
    }

    pub fn with_cap(weight: &GTWeight, cap: usize) -> Result<Self> {
        weight.require(false)?;
        let basis = PatternBasis::with_cap(weight, cap)?;
        let generators = (1..weight.n())
            .map(|q| SoIrrep::build(&basis, q))
            .collect::<Result<Vec<_>>>()?;
        Ok(SoIrrep { basis, generators })
    }

    fn build(basis: &PatternBasis, q: usize) -> Result<SparseOperator> {
        let p = q / 2;
        let (row, scale) = if q % 2 == 0 { (q, 0.5) } else { (q, 1.0) };
        let coefficient = |m: &GelfandPattern, j: usize| if q % 2 == 0 { so_a(m, p, j) } else { so_b(m, p, j) };
        let mut triplets = Vec::new();
        for (col, m) in basis.patterns().iter().enumerate() {
            for j in 1..=p {
                let up = m.shifted(row, j, 2);
                push_term(basis, &mut triplets, col, &up, coefficient(m, j), scale)?;
                let down = m.shifted(row, j, -2);
                push_term(basis, &mut triplets, col, &down, coefficient(&down, j), -scale)?;
            }
            if q % 2 == 1 {
                triplets.push((col, col, num_complex::Complex64::new(0.0, so_c(m, p)?)));
            }
        }
        Ok(SparseOperator::from_triplets(basis.dim(), triplets))
    }

    pub fn basis(&self) -> &PatternBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn n(&self) -> usize {
        self.basis.weight().n()
    }

    /// `b(I_{q+1,q})` for `1 ≤ q ≤ n−1`.
    pub fn action(&self, q: usize) -> Result<&SparseOperator> {
        if q == 0 || q >= self.n() {
            return Err(IrrepError::OutOfRange {
                what: "so generator index q",
                value: q as i64,
                range: format!("1..={}", self.n() - 1),
            });
        }
        Ok(&self.generators[q - 1])
    }

    /// `b(I_{k,i}) = b(E_{ik} − E_{ki})` for `i < k`, via
    /// `[I_{k−1,i}, I_{k,k−1}] = I_{k,i}`.
    pub fn generator(&self, k: usize, i: usize) -> Result<SparseOperator> {
        if i == 0 || k <= i || k > self.n() {
            return Err(IrrepError::InvalidArgument(format!("need 1 <= i < k <= {}, got ({k}, {i})", self.n())));
        }
        if k == i + 1 {
            return self.action(i).cloned();
        }
        Ok(self.generator(k - 1, i)?.commutator(self.action(k - 1)?))
    }
}

pub fn so_action(weight: &GTWeight, q: usize) -> Result<SparseOperator> {
    SoIrrep::new(weight)?.action(q).cloned()
}
