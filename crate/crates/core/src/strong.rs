//! Strong lonesum matrices: the 2x2 criterion, stair/block decomposition and
//! reconstruction from row and column sums.

use std::cmp::Reverse;
use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{window_allowed, MarginProfile, QMatrix, Symbol};

/// A 2x2 submatrix that blocks unique reconstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    /// `[[M[i1][j1], M[i1][j2]], [M[i2][j1], M[i2][j2]]]`.
    pub entries: [[Symbol; 2]; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongVerdict {
    Lonesum,
    Witness(ForbiddenWitness),
}

impl StrongVerdict {
    pub fn is_lonesum(&self) -> bool {
        matches!(self, StrongVerdict::Lonesum)
    }
}

/// Whether `[[a, b], [c, d]]` is equivalent under row and column swaps to one
/// of the five shapes that admit no margin-preserving trade.
pub fn allowed_2x2(q: Symbol, entries: [[Symbol; 2]; 2]) -> Result<bool> {
    if q < 2 {
        return Err(Error::domain(format!("alphabet size {q} is below 2")));
    }
    let [[a, b], [c, d]] = entries;
    if [a, b, c, d].iter().any(|&e| e >= q) {
        return Err(Error::domain(format!(
            "2x2 entries {entries:?} outside 0..{q}"
        )));
    }
    Ok(window_allowed(q, a, b, c, d))
}

/// First forbidden 2x2 submatrix in row-major order of `(i1, i2, j1, j2)`.
pub fn find_forbidden_2x2(m: &QMatrix) -> Option<ForbiddenWitness> {
    let q = m.q();
    for i1 in 0..m.rows() {
        for i2 in i1 + 1..m.rows() {
            for j1 in 0..m.cols() {
                for j2 in j1 + 1..m.cols() {
                    let (a, b) = (m.get(i1, j1), m.get(i1, j2));
                    let (c, d) = (m.get(i2, j1), m.get(i2, j2));
                    if !window_allowed(q, a, b, c, d) {
                        return Some(ForbiddenWitness {
                            rows: (i1, i2),
                            cols: (j1, j2),
                            entries: [[a, b], [c, d]],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Decides strong lonesum-ness. The standard form sweep is `O(mn log mn)`;
/// the quartic witness scan only runs on failure.
pub fn is_strong_lonesum(m: &QMatrix) -> StrongVerdict {
    if m.standard_form().is_ok() {
        return StrongVerdict::Lonesum;
    }
    let witness =
        find_forbidden_2x2(m).expect("a matrix without standard form has a forbidden 2x2");
    StrongVerdict::Witness(witness)
}

pub fn strongly_lonesum(m: &QMatrix) -> bool {
    m.standard_form().is_ok()
}

/// Ordered partitions `(A_0, .., A_j)` of the rows and `(B_0, .., B_j)` of the
/// columns locating the `q-1` entries: `(a, b)` holds `q-1` iff
/// `a` is in `A_i` and `b` is in `B_0 ∪ .. ∪ B_{j-i}` for some `i`.
/// `A_0` collects rows full of `q-1`, `B_0` columns full of `q-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionPair {
    pub row_parts: Vec<Vec<usize>>,
    pub col_parts: Vec<Vec<usize>>,
}

impl PartitionPair {
    /// Number of stairs minus one.
    pub fn j(&self) -> usize {
        self.row_parts.len() - 1
    }
}

/// The `i`th block `A_i x B_{j+1-i}` and the nonzero entries it carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub index: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `(row, col, value)` with `1 <= value <= q-2`, in row-major order.
    pub cells: Vec<(usize, usize, Symbol)>,
}

impl Block {
    /// Nonzero entries of a lonesum block share one row or one column.
    pub fn is_line(&self) -> bool {
        let same_row = self.cells.windows(2).all(|w| w[0].0 == w[1].0);
        let same_col = self.cells.windows(2).all(|w| w[0].1 == w[1].1);
        same_row || same_col
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub q: Symbol,
    pub m: usize,
    pub n: usize,
    pub partition: PartitionPair,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn reassemble(&self) -> QMatrix {
        let top = self.q - 1;
        let j = self.partition.j();
        let mut row_class = vec![0; self.m];
        for (i, part) in self.partition.row_parts.iter().enumerate() {
            for &r in part {
                row_class[r] = i;
            }
        }
        let mut col_class = vec![0; self.n];
        for (h, part) in self.partition.col_parts.iter().enumerate() {
            for &c in part {
                col_class[c] = h;
            }
        }
        let mut entries = vec![0; self.m * self.n];
        for r in 0..self.m {
            for c in 0..self.n {
                if row_class[r] + col_class[c] <= j {
                    entries[r * self.n + c] = top;
                }
            }
        }
        for block in &self.blocks {
            for &(r, c, v) in &block.cells {
                entries[r * self.n + c] = v;
            }
        }
        QMatrix::from_raw(self.q, self.m, self.n, entries)
    }
}

/// Splits a strongly lonesum matrix into its `q-1` stairs and blocks.
pub fn block_decomposition(m: &QMatrix) -> Result<BlockDecomposition> {
    if !strongly_lonesum(m) {
        return Err(Error::NotLonesum);
    }
    let (rows, cols, top) = (m.rows(), m.cols(), m.q() - 1);
    let row_tops: Vec<usize> = (0..rows)
        .map(|i| m.row(i).iter().filter(|&&e| e == top).count())
        .collect();
    let col_tops: Vec<usize> = (0..cols)
        .map(|j| m.column(j).filter(|&e| e == top).count())
        .collect();

    let mut lengths: Vec<usize> = row_tops.iter().copied().filter(|&t| t < cols).collect();
    lengths.sort_by_key(|&t| Reverse(t));
    lengths.dedup();
    let j = lengths.len();

    let mut row_parts = vec![Vec::new(); j + 1];
    for (r, &t) in row_tops.iter().enumerate() {
        let class = if t == cols {
            0
        } else {
            1 + lengths
                .iter()
                .position(|&l| l == t)
                .expect("length was collected")
        };
        row_parts[class].push(r);
    }

    // Columns in B_h carry q-1 exactly on A_0 ∪ .. ∪ A_{j-h}.
    let mut col_parts = vec![Vec::new(); j + 1];
    let mut prefix = Vec::with_capacity(j);
    let mut acc = 0;
    for part in &row_parts[..j] {
        acc += part.len();
        prefix.push(acc);
    }
    for (c, &t) in col_tops.iter().enumerate() {
        let class = if t == rows {
            0
        } else {
            match prefix.iter().position(|&p| p == t) {
                Some(k) => j - k,
                None => return Err(Error::NotLonesum),
            }
        };
        col_parts[class].push(c);
    }

    let blocks = (1..=j)
        .map(|i| {
            let (br, bc) = (row_parts[i].clone(), col_parts[j + 1 - i].clone());
            let cells = br
                .iter()
                .flat_map(|&r| bc.iter().map(move |&c| (r, c)))
                .filter_map(|(r, c)| {
                    let v = m.get(r, c);
                    (v != 0).then_some((r, c, v))
                })
                .collect();
            Block {
                index: i,
                rows: br,
                cols: bc,
                cells,
            }
        })
        .collect();

    let dec = BlockDecomposition {
        q: m.q(),
        m: rows,
        n: cols,
        partition: PartitionPair {
            row_parts,
            col_parts,
        },
        blocks,
    };
    if dec.reassemble() != *m || !dec.blocks.iter().all(Block::is_line) {
        return Err(Error::NotLonesum);
    }
    Ok(dec)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reconstruction {
    Unique(QMatrix),
    Ambiguous,
    Infeasible,
}

/// Necessary and sufficient condition for some matrix with entries in
/// `0..=cap` to realise the margins: equal totals, and for every `k` the `k`
/// largest column sums fit into `sum_i min(r_i, cap * k)`.
pub fn margins_feasible(cap: u64, row_sums: &[u64], col_sums: &[u64]) -> bool {
    let (m, n) = (row_sums.len() as u64, col_sums.len() as u64);
    if row_sums.iter().sum::<u64>() != col_sums.iter().sum::<u64>() {
        return false;
    }
    if row_sums.iter().any(|&r| r > cap * n) || col_sums.iter().any(|&c| c > cap * m) {
        return false;
    }
    let mut sorted = col_sums.to_vec();
    sorted.sort_unstable_by_key(|&c| Reverse(c));
    let mut lhs = 0;
    for (k, &c) in sorted.iter().enumerate() {
        lhs += c;
        let rhs: u64 = row_sums.iter().map(|&r| r.min(cap * (k as u64 + 1))).sum();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Fills rows in decreasing-sum order, each left to right over columns in
/// decreasing-sum order, taking as much as the cell, row and column allow.
fn stair_fill(cap: u64, row_sums: &[u64], col_sums: &[u64]) -> Option<Vec<u64>> {
    let (m, n) = (row_sums.len(), col_sums.len());
    let mut rord: Vec<usize> = (0..m).collect();
    rord.sort_by_key(|&i| (Reverse(row_sums[i]), i));
    let mut cord: Vec<usize> = (0..n).collect();
    cord.sort_by_key(|&j| (Reverse(col_sums[j]), j));
    let mut col_rem = col_sums.to_vec();
    let mut out = vec![0; m * n];
    for &i in &rord {
        let mut rem = row_sums[i];
        for &j in &cord {
            let v = cap.min(rem).min(col_rem[j]);
            out[i * n + j] = v;
            rem -= v;
            col_rem[j] -= v;
        }
        if rem != 0 {
            return None;
        }
    }
    col_rem.iter().all(|&c| c == 0).then_some(out)
}

/// Any realisation of the margins with entries in `0..=cap`, via augmenting
/// paths on the bipartite row/column network.
fn flow_realization(cap: u64, row_sums: &[u64], col_sums: &[u64]) -> Option<Vec<u64>> {
    let (m, n) = (row_sums.len(), col_sums.len());
    let (src, sink) = (m + n, m + n + 1);
    let size = m + n + 2;
    let mut residual = vec![vec![0u64; size]; size];
    for i in 0..m {
        residual[src][i] = row_sums[i];
        for j in 0..n {
            residual[i][m + j] = cap;
        }
    }
    for j in 0..n {
        residual[m + j][sink] = col_sums[j];
    }
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in 0..size {
                if prev[v] == usize::MAX && residual[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut bottleneck = u64::MAX;
        let mut v = sink;
        while v != src {
            bottleneck = bottleneck.min(residual[prev[v]][v]);
            v = prev[v];
        }
        let mut v = sink;
        while v != src {
            residual[prev[v]][v] -= bottleneck;
            residual[v][prev[v]] += bottleneck;
            v = prev[v];
        }
    }
    if (0..m).any(|i| residual[src][i] != 0) {
        return None;
    }
    let mut out = vec![0; m * n];
    for i in 0..m {
        for j in 0..n {
            out[i * n + j] = cap - residual[i][m + j];
        }
    }
    Some(out)
}

/// Rebuilds the unique `m x n` matrix over `0..q` with the given margins, or
/// reports that none or several exist.
pub fn reconstruct_strong(
    q: Symbol,
    margins: &MarginProfile,
    m: usize,
    n: usize,
) -> Result<Reconstruction> {
    if q < 2 {
        return Err(Error::domain(format!("alphabet size {q} is below 2")));
    }
    if m == 0 || n == 0 {
        return Err(Error::domain(
            "matrices must have at least one row and one column",
        ));
    }
    if margins.row_sums.len() != m || margins.col_sums.len() != n {
        return Err(Error::domain(format!(
            "margins have {} rows and {} columns, expected {m} and {n}",
            margins.row_sums.len(),
            margins.col_sums.len()
        )));
    }
    let cap = (q - 1) as u64;
    let (rs, cs) = (&margins.row_sums, &margins.col_sums);
    if !margins_feasible(cap, rs, cs) {
        return Ok(Reconstruction::Infeasible);
    }
    let filled = stair_fill(cap, rs, cs)
        .or_else(|| flow_realization(cap, rs, cs))
        .expect("feasible margins have a realisation");
    let candidate = QMatrix::from_raw(q, m, n, filled.into_iter().map(|v| v as Symbol).collect());
    debug_assert_eq!(&candidate.margins(), margins);
    Ok(if strongly_lonesum(&candidate) {
        Reconstruction::Unique(candidate)
    } else {
        Reconstruction::Ambiguous
    })
}
