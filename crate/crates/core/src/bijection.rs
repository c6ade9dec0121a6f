//! The correspondence between binary lonesum `m x n` matrices and
//! permutations `σ` of `{1, .., m+n}` with `-n <= σ(i) - i <= m`.
//!
//! A lonesum matrix is first encoded by its column classes `C_1..C_k` and row
//! classes `R_1..R_k` (grouped by distinct nonzero sum, ascending), and the
//! classes are then laid out as chains of rooks in the permutation matrix.
//! Row and column indices in [`TuplePair`] are 0-based; permutation images
//! are 1-based, as in the usual one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::strong::strongly_lonesum;
use crate::BigCount;

/// Default bound on `m + n` for brute-force permutation enumeration.
pub const DEFAULT_PERMUTATION_LIMIT: usize = 10;

/// Column classes `C_1..C_k` and row classes `R_1..R_k` of a lonesum matrix.
/// The classes `C_0`, `R_0` (zero sums) are implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuplePair {
    pub cols: Vec<Vec<usize>>,
    pub rows: Vec<Vec<usize>>,
}

impl TuplePair {
    pub fn k(&self) -> usize {
        self.cols.len()
    }

    /// Checks shape and disjointness, and returns the label maps `C`, `R`.
    fn labels(&self, m: usize, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        if self.cols.len() != self.rows.len() {
            return Err(Error::domain(
                "column and row tuples have different lengths",
            ));
        }
        let c = label_map(&self.cols, n, "column")?;
        let r = label_map(&self.rows, m, "row")?;
        Ok((c, r))
    }
}

fn label_map(parts: &[Vec<usize>], size: usize, what: &str) -> Result<Vec<usize>> {
    let mut label = vec![0; size];
    for (a, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::domain(format!("{what} class {} is empty", a + 1)));
        }
        for &i in part {
            if i >= size {
                return Err(Error::domain(format!("{what} index {i} out of range")));
            }
            if label[i] != 0 {
                return Err(Error::domain(format!(
                    "{what} index {i} lies in two classes"
                )));
            }
            label[i] = a + 1;
        }
    }
    Ok(label)
}

fn require_binary_lonesum(m: &QMatrix) -> Result<()> {
    if m.q() != 2 {
        return Err(Error::domain("the bijection applies to binary matrices"));
    }
    if !strongly_lonesum(m) {
        return Err(Error::NotLonesum);
    }
    Ok(())
}

/// Groups columns (and rows) by their distinct nonzero sums, ascending.
fn classes_by_sum(sums: &[u64]) -> Vec<Vec<usize>> {
    let mut distinct: Vec<u64> = sums.iter().copied().filter(|&s| s > 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    distinct
        .iter()
        .map(|&s| (0..sums.len()).filter(|&i| sums[i] == s).collect())
        .collect()
}

pub fn matrix_to_tuples(m: &QMatrix) -> Result<TuplePair> {
    require_binary_lonesum(m)?;
    let margins = m.margins();
    let cols = classes_by_sum(&margins.col_sums);
    let rows = classes_by_sum(&margins.row_sums);
    debug_assert_eq!(cols.len(), rows.len());
    Ok(TuplePair { cols, rows })
}

/// The matrix with `M[j][i] = 1` iff `C(i) + R(j) > k`.
pub fn tuples_to_matrix(t: &TuplePair, m: usize, n: usize) -> Result<QMatrix> {
    let (c, r) = t.labels(m, n)?;
    let k = t.k();
    let rows: Vec<Vec<u8>> = (0..m)
        .map(|j| (0..n).map(|i| u8::from(c[i] + r[j] > k)).collect())
        .collect();
    QMatrix::new(2, m, n, rows.concat())
}

/// A permutation `σ` of `{1, .., m+n}` with `-n <= σ(i) - i <= m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoundedPermutation {
    m: usize,
    n: usize,
    images: Vec<usize>,
}

impl BoundedPermutation {
    /// `images[i - 1] = σ(i)`, 1-based values.
    pub fn new(m: usize, n: usize, images: Vec<usize>) -> Result<Self> {
        let size = m + n;
        if images.len() != size {
            return Err(Error::domain(format!(
                "expected {size} images, got {}",
                images.len()
            )));
        }
        let mut seen = vec![false; size + 1];
        for (idx, &s) in images.iter().enumerate() {
            if s == 0 || s > size || seen[s] {
                return Err(Error::domain("images do not form a permutation of 1..=m+n"));
            }
            seen[s] = true;
            let i = idx + 1;
            if s + n < i || s > i + m {
                return Err(Error::domain(format!(
                    "σ({i}) = {s} violates -{n} <= σ(i) - i <= {m}"
                )));
            }
        }
        Ok(BoundedPermutation { m, n, images })
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Parses space- or comma-separated 1-based images.
    pub fn parse(m: usize, n: usize, text: &str) -> Result<Self> {
        let images = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                usize::from_str(t)
                    .map_err(|_| Error::domain(format!("bad permutation entry '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, n, images)
    }
}

impl fmt::Display for BoundedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Rook positions of one side: `rows` rows whose heads sit in columns
/// `1..=width`, the class-0 head in column `width + 1`, and every other member
/// chained to column `previous member + width + 1`. Returns `(row, col)` pairs,
/// 1-based, with head columns for classes `1..=k` left as `None`.
fn chain_rooks(labels: &[usize], k: usize, width: usize) -> Vec<(usize, Option<usize>)> {
    let mut last = vec![None::<usize>; k + 1];
    let mut out = vec![(0, None); labels.len()];
    for (idx, &a) in labels.iter().enumerate() {
        let row = idx + 1;
        let col = match last[a] {
            Some(prev) => Some(prev + width + 1),
            None if a == 0 => Some(width + 1),
            None => None,
        };
        out[idx] = (row, col);
        last[a] = Some(row);
    }
    out
}

/// Places rooks from the tuple pair: chains in the top `n` rows for the
/// column classes, and (after a half turn, with `m` and `n` exchanged) in the
/// bottom `m` rows for the row classes. Head columns are the free columns, in
/// increasing order.
fn tuples_to_permutation(t: &TuplePair, m: usize, n: usize) -> Result<BoundedPermutation> {
    let (c, r) = t.labels(m, n)?;
    let k = t.k();
    let size = m + n;
    let rotate = |x: usize| size + 1 - x;

    let top = chain_rooks(&c, k, m);
    let bottom = chain_rooks(&r, k, n);

    let mut used = vec![false; size + 1];
    for &(_, col) in &top {
        if let Some(col) = col {
            used[col] = true;
        }
    }
    for &(_, col) in &bottom {
        if let Some(col) = col {
            used[rotate(col)] = true;
        }
    }
    let top_heads: Vec<usize> = (1..=m).filter(|&col| !used[col]).collect();
    let bottom_heads: Vec<usize> = (1..=n).filter(|&col| !used[rotate(col)]).collect();
    if top_heads.len() != k || bottom_heads.len() != k {
        return Err(Error::domain(
            "tuple pair does not determine a rook placement",
        ));
    }

    let mut images = vec![0; size];
    // Heads of C_a are ordered by class label, which is the order of c_a.
    for &(row, col) in &top {
        images[row - 1] = col.unwrap_or_else(|| top_heads[c[row - 1] - 1]);
    }
    for &(row, col) in &bottom {
        let rot_col = col.unwrap_or_else(|| bottom_heads[r[row - 1] - 1]);
        images[rotate(row) - 1] = rotate(rot_col);
    }
    BoundedPermutation::new(m, n, images)
}

/// Reads the class labels of one side off the rook chains.
fn read_chains(sigma: impl Fn(usize) -> usize, rows: usize, width: usize) -> (Vec<usize>, usize) {
    let mut heads: Vec<(usize, usize)> = (1..=rows)
        .filter(|&i| sigma(i) <= width)
        .map(|i| (sigma(i), i))
        .collect();
    heads.sort_unstable();
    let mut label = vec![0usize; rows + 1];
    for (a, &(_, row)) in heads.iter().enumerate() {
        label[row] = a + 1;
    }
    for i in 1..=rows {
        let s = sigma(i);
        if s > width + 1 {
            label[i] = label[s - width - 1];
        }
    }
    (label[1..].to_vec(), heads.len())
}

fn permutation_to_tuples(p: &BoundedPermutation) -> Result<TuplePair> {
    let (m, n) = p.bounds();
    let size = m + n;
    let (c, kc) = read_chains(|i| p.apply(i), n, m);
    let (r, kr) = read_chains(|i| size + 1 - p.apply(size + 1 - i), m, n);
    if kc != kr {
        return Err(Error::domain("rook placement has mismatched head counts"));
    }
    let group = |labels: &[usize]| -> Vec<Vec<usize>> {
        (1..=kc)
            .map(|a| (0..labels.len()).filter(|&i| labels[i] == a).collect())
            .collect()
    };
    Ok(TuplePair {
        cols: group(&c),
        rows: group(&r),
    })
}

pub fn matrix_to_permutation(m: &QMatrix) -> Result<BoundedPermutation> {
    let t = matrix_to_tuples(m)?;
    tuples_to_permutation(&t, m.rows(), m.cols())
}

pub fn permutation_to_matrix(p: &BoundedPermutation) -> Result<QMatrix> {
    let (m, n) = p.bounds();
    tuples_to_matrix(&permutation_to_tuples(p)?, m, n)
}

/// Calls `visit` on every bounded permutation, by backtracking.
fn for_each_bounded(m: usize, n: usize, mut visit: impl FnMut(&[usize])) {
    fn walk(
        i: usize,
        m: usize,
        n: usize,
        used: &mut [bool],
        images: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let size = m + n;
        if i > size {
            visit(images);
            return;
        }
        let lo = i.saturating_sub(n).max(1);
        let hi = (i + m).min(size);
        for s in lo..=hi {
            if !used[s] {
                used[s] = true;
                images.push(s);
                walk(i + 1, m, n, used, images, visit);
                images.pop();
                used[s] = false;
            }
        }
    }
    let mut used = vec![false; m + n + 1];
    walk(
        1,
        m,
        n,
        &mut used,
        &mut Vec::with_capacity(m + n),
        &mut visit,
    );
}

fn check_limit(m: usize, n: usize, limit: usize) -> Result<()> {
    if m + n > limit {
        return Err(Error::LimitExceeded {
            what: "bounded permutation enumeration (m+n)",
            required: (m + n) as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

/// All bounded permutations, lexicographically, for `m + n <= limit`.
pub fn bounded_permutations(m: usize, n: usize, limit: usize) -> Result<Vec<BoundedPermutation>> {
    check_limit(m, n, limit)?;
    let mut out = Vec::new();
    for_each_bounded(m, n, |images| {
        out.push(BoundedPermutation {
            m,
            n,
            images: images.to_vec(),
        })
    });
    Ok(out)
}

/// Brute-force count of bounded permutations for `m + n <= limit`.
pub fn count_bounded_permutations_with_limit(m: usize, n: usize, limit: usize) -> Result<BigCount> {
    check_limit(m, n, limit)?;
    let mut count: u64 = 0;
    for_each_bounded(m, n, |_| count += 1);
    Ok(BigCount::from(count))
}

pub fn count_bounded_permutations(m: usize, n: usize) -> Result<BigCount> {
    count_bounded_permutations_with_limit(m, n, DEFAULT_PERMUTATION_LIMIT)
}
