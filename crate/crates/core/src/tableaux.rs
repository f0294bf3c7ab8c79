//! Young diagrams and standard Young tableaux.
//!
//! Cells are addressed `(row, col)` zero-based, rows counted downward
//! (English notation). Tableaux are identified externally by their
//! row-reading word, which is also the basis order used everywhere else.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{IrrepError, Result};
use crate::perm::Permutation;

/// Default enumeration limit on the number of boxes.
pub const DEFAULT_BOX_CAP: usize = 12;

/// A partition of `n` drawn as left-justified rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(IrrepError::InvalidShape("diagram must have at least one box".into()));
        }
        if rows.contains(&0) {
            return Err(IrrepError::InvalidShape("row lengths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(IrrepError::InvalidShape(format!(
                "row lengths {rows:?} are not weakly decreasing"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row < self.rows.len() && col < self.rows[row]
    }

    /// Reflection about the main diagonal.
    pub fn conjugate(&self) -> YoungDiagram {
        let cols = self.rows[0];
        let rows = (0..cols)
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect();
        YoungDiagram { rows }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `d(λ)`: number of boxes on the main diagonal.
    pub fn diagonal_length(&self) -> usize {
        self.rows.iter().enumerate().filter(|&(i, &r)| r > i).count()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Arm plus leg plus one.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.rows[row] - col - 1;
        let leg = self.rows[row + 1..].iter().filter(|&&r| r > col).count();
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook length formula, `None` on overflow.
    pub fn num_syt(&self) -> Option<u128> {
        // Interleave multiplications and exact divisions to stay small.
        let mut hooks: Vec<u128> = self
            .cells()
            .map(|(r, c)| self.hook_length(r, c) as u128)
            .collect();
        hooks.sort_unstable();
        let mut num: u128 = 1;
        for k in 1..=self.n() as u128 {
            num = num.checked_mul(k)?;
            hooks.retain(|&h| {
                if h > 1 && num % h == 0 {
                    num /= h;
                    false
                } else {
                    true
                }
            });
        }
        for h in hooks {
            num /= h;
        }
        Some(num)
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = IrrepError;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungDiagram{:?}", self.rows)
    }
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if remaining == 0 {
            out.push(YoungDiagram { rows: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A filling of a Young diagram by `1..n`, increasing along rows and down columns.
///
/// Serializes as an array of rows, e.g. `[[1,3],[2]]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    shape: YoungDiagram,
    entries: Vec<Vec<usize>>,
    // positions[k - 1] = cell holding k
    positions: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn from_rows(entries: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(entries.iter().map(Vec::len).collect())
            .map_err(|e| IrrepError::InvalidTableau(e.to_string()))?;
        let n = shape.n();
        let mut positions = vec![(usize::MAX, usize::MAX); n];
        for (r, row) in entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(IrrepError::InvalidTableau(format!("entry {v} outside 1..={n}")));
                }
                if positions[v - 1].0 != usize::MAX {
                    return Err(IrrepError::InvalidTableau(format!("entry {v} repeated")));
                }
                positions[v - 1] = (r, c);
                if c > 0 && row[c - 1] >= v {
                    return Err(IrrepError::InvalidTableau(format!("row {} not increasing", r + 1)));
                }
                if r > 0 && entries[r - 1][c] >= v {
                    return Err(IrrepError::InvalidTableau(format!(
                        "column {} not increasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(StandardTableau {
            shape,
            entries,
            positions,
        })
    }

    /// Cuts a row-reading word into rows of the given shape.
    pub fn from_reading_word(shape: &YoungDiagram, word: &[usize]) -> Result<Self> {
        if word.len() != shape.n() {
            return Err(IrrepError::SizeMismatch {
                expected: shape.n(),
                found: word.len(),
            });
        }
        let mut rows = Vec::with_capacity(shape.num_rows());
        let mut start = 0;
        for &len in shape.rows() {
            rows.push(word[start..start + len].to_vec());
            start += len;
        }
        Self::from_rows(rows)
    }

    /// The typewriter tableau: `1..n` left to right, top to bottom.
    pub fn typewriter(shape: &YoungDiagram) -> Self {
        let word: Vec<usize> = (1..=shape.n()).collect();
        Self::from_reading_word(shape, &word).expect("typewriter filling is standard")
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.entries.iter().flatten().copied().collect()
    }

    /// Cell `(row, col)` holding entry `k` (one-based `k`).
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.positions[k - 1]
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.entries[row][col]
    }

    /// Transpose across the main diagonal.
    pub fn conjugate(&self) -> StandardTableau {
        let shape = self.shape.conjugate();
        let entries: Vec<Vec<usize>> = shape
            .rows()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| self.entries[c][r]).collect())
            .collect();
        let positions = self.positions.iter().map(|&(r, c)| (c, r)).collect();
        StandardTableau {
            shape,
            entries,
            positions,
        }
    }

    fn content(&self, k: usize) -> i64 {
        let (r, c) = self.position(k);
        c as i64 - r as i64
    }

    /// Signed hop count from box `i+1` to box `i` (down or left `+1`, up or right `-1`).
    ///
    /// Equals `content(i+1) - content(i)` and is never zero.
    pub fn axial_distance(&self, i: usize) -> Result<i64> {
        if i == 0 || i >= self.n() {
            return Err(IrrepError::OutOfRange {
                what: "axial distance index",
                value: i as i64,
                range: format!("1..={}", self.n().saturating_sub(1)),
            });
        }
        Ok(self.content(i + 1) - self.content(i))
    }

    /// The tableau with entries `i` and `i+1` exchanged, if still standard.
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        if i == 0 || i >= self.n() {
            return None;
        }
        let (ra, ca) = self.position(i);
        let (rb, cb) = self.position(i + 1);
        if ra == rb || ca == cb {
            return None;
        }
        let mut entries = self.entries.clone();
        entries[ra][ca] = i + 1;
        entries[rb][cb] = i;
        let mut positions = self.positions.clone();
        positions.swap(i - 1, i);
        Some(StandardTableau {
            shape: self.shape.clone(),
            entries,
            positions,
        })
    }

    /// Shape occupied by the entries `1..=k`.
    pub fn restricted_shape(&self, k: usize) -> Vec<usize> {
        self.entries
            .iter()
            .map(|row| row.iter().filter(|&&v| v <= k).count())
            .filter(|&len| len > 0)
            .collect()
    }

    /// The relabelling `w` with `w Λ = Λ_0` (typewriter tableau) and its sign.
    pub fn typewriter_data(&self) -> TypewriterData {
        let typewriter = StandardTableau::typewriter(&self.shape);
        let mut images = vec![0; self.n()];
        for (r, row) in self.entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                images[v - 1] = typewriter.entries[r][c];
            }
        }
        let w = Permutation::new(images).expect("relabelling is a bijection");
        let sign = w.sign();
        TypewriterData { w, sign }
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = IrrepError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::from_rows(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.entries
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StandardTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reading_word()
            .cmp(&other.reading_word())
            .then_with(|| self.shape.cmp(&other.shape))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{:?}", self.entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypewriterData {
    pub w: Permutation,
    pub sign: i32,
}

/// All standard tableaux of `shape` in row-reading-word order, limited to
/// [`DEFAULT_BOX_CAP`] boxes.
pub fn enumerate_syt(shape: &YoungDiagram) -> Result<Vec<StandardTableau>> {
    enumerate_syt_capped(shape, DEFAULT_BOX_CAP)
}

pub fn enumerate_syt_capped(shape: &YoungDiagram, max_boxes: usize) -> Result<Vec<StandardTableau>> {
    let n = shape.n();
    if n > max_boxes {
        return Err(IrrepError::CapExceeded {
            what: "tableau enumeration boxes",
            requested: n,
            limit: max_boxes,
        });
    }
    let mut out = Vec::new();
    let mut filled = vec![0usize; shape.num_rows()];
    let mut entries: Vec<Vec<usize>> = shape.rows().iter().map(|&len| vec![0; len]).collect();
    fill(shape, 1, &mut filled, &mut entries, &mut out);
    out.sort_by_key(StandardTableau::reading_word);
    Ok(out)
}

fn fill(
    shape: &YoungDiagram,
    next: usize,
    filled: &mut [usize],
    entries: &mut [Vec<usize>],
    out: &mut Vec<StandardTableau>,
) {
    if next > shape.n() {
        out.push(StandardTableau::from_rows(entries.to_vec()).expect("construction is standard"));
        return;
    }
    for r in 0..filled.len() {
        let c = filled[r];
        let fits_row = c < shape.rows()[r];
        let fits_col = r == 0 || filled[r - 1] > c;
        if fits_row && fits_col {
            entries[r][c] = next;
            filled[r] += 1;
            fill(shape, next + 1, filled, entries, out);
            filled[r] -= 1;
        }
    }
}

/// Uniform random standard tableau by the Greene–Nijenhuis–Wilf hook walk.
///
/// For `k = n, n-1, …, 1`: start at a uniform cell of the remaining diagram,
/// jump to a uniform cell of the current hook until a corner is reached,
/// write `k` there and remove the corner.
pub fn hook_walk_sample<R: Rng + ?Sized>(shape: &YoungDiagram, rng: &mut R) -> StandardTableau {
    let mut rows: Vec<usize> = shape.rows().to_vec();
    let mut entries: Vec<Vec<usize>> = shape.rows().iter().map(|&len| vec![0; len]).collect();
    let mut remaining = shape.n();
    while remaining > 0 {
        let mut pick = rng.random_range(0..remaining);
        let mut row = 0;
        while pick >= rows[row] {
            pick -= rows[row];
            row += 1;
        }
        let mut col = pick;
        loop {
            let arm = rows[row] - col - 1;
            let leg = rows[row + 1..].iter().take_while(|&&len| len > col).count();
            if arm + leg == 0 {
                break;
            }
            let step = rng.random_range(0..arm + leg);
            if step < arm {
                col += step + 1;
            } else {
                row += step - arm + 1;
            }
        }
        entries[row][col] = remaining;
        rows[row] -= 1;
        if rows[row] == 0 {
            rows.pop();
        }
        remaining -= 1;
    }
    StandardTableau::from_rows(entries).expect("hook walk yields a standard tableau")
}
