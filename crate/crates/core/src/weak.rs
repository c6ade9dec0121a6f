//! Weak lonesum matrices: uniqueness given the row and column structure
//! vectors (symbol histograms).
//!
//! The decision procedure is a backtracking search for a second matrix with
//! the same structure profile. Alternating cycles certify non-uniqueness
//! directly, and the module carries the known forbidden matrices.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{QMatrix, Symbol};
use crate::strong::margins_feasible;

/// Default node budget for [`is_weak_lonesum`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WeakVerdict {
    /// No other matrix has the same structure profile.
    Unique { nodes: u64 },
    /// The lexicographically least other matrix with the same profile.
    Witness { alternative: QMatrix, nodes: u64 },
    /// The search stopped at its node budget.
    BudgetExceeded { nodes: u64 },
}

impl WeakVerdict {
    pub fn nodes(&self) -> u64 {
        match self {
            WeakVerdict::Unique { nodes }
            | WeakVerdict::Witness { nodes, .. }
            | WeakVerdict::BudgetExceeded { nodes } => *nodes,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, WeakVerdict::Unique { .. })
    }

    pub fn witness(&self) -> Option<&QMatrix> {
        match self {
            WeakVerdict::Witness { alternative, .. } => Some(alternative),
            _ => None,
        }
    }
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Cell-by-cell search in row-major order, symbols ascending, so solutions
/// are met in lexicographic order.
struct Search<'a> {
    q: usize,
    rows: usize,
    cols: usize,
    target: &'a [Symbol],
    row_rem: Vec<u32>,
    col_rem: Vec<u32>,
    cur: Vec<Symbol>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(m: &'a QMatrix, budget: u64) -> Self {
        let q = m.q() as usize;
        let profile = m.structure_profile();
        Search {
            q,
            rows: m.rows(),
            cols: m.cols(),
            target: m.entries(),
            row_rem: profile.row_structs.concat(),
            col_rem: profile.col_structs.concat(),
            cur: vec![0; m.rows() * m.cols()],
            nodes: 0,
            budget,
        }
    }

    /// Necessary conditions for completing the matrix after cell `(i, j)`.
    fn completable(&self, i: usize, j: usize) -> bool {
        let q = self.q;
        if j + 1 < self.cols {
            // The rest of row i must find, for each symbol, enough columns
            // that still need it.
            return (0..q).all(|s| {
                let need = self.row_rem[i * q + s] as usize;
                need == 0
                    || (j + 1..self.cols)
                        .filter(|&c| self.col_rem[c * q + s] > 0)
                        .count()
                        >= need
            });
        }
        // Row i is complete: each symbol's remaining 0/1 pattern must be
        // realizable on the remaining rows.
        (0..q).all(|s| {
            let rows: Vec<u64> = (i + 1..self.rows)
                .map(|t| u64::from(self.row_rem[t * q + s]))
                .collect();
            let cols: Vec<u64> = (0..self.cols)
                .map(|c| u64::from(self.col_rem[c * q + s]))
                .collect();
            margins_feasible(1, &rows, &cols)
        })
    }

    fn run(&mut self, cell: usize) -> Outcome {
        if cell == self.rows * self.cols {
            return if self.cur != self.target {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        let (i, j) = (cell / self.cols, cell % self.cols);
        let q = self.q;
        for s in 0..q {
            if self.row_rem[i * q + s] == 0 || self.col_rem[j * q + s] == 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Outcome::OutOfBudget;
            }
            self.cur[cell] = s as Symbol;
            self.row_rem[i * q + s] -= 1;
            self.col_rem[j * q + s] -= 1;
            if self.completable(i, j) {
                match self.run(cell + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.row_rem[i * q + s] += 1;
            self.col_rem[j * q + s] += 1;
        }
        Outcome::Exhausted
    }
}

/// Decides whether `m` is the only matrix with its row and column structure
/// vectors, returning the lexicographically least alternative otherwise.
pub fn is_weak_lonesum(m: &QMatrix, budget: u64) -> WeakVerdict {
    let mut search = Search::new(m, budget);
    match search.run(0) {
        Outcome::Found => WeakVerdict::Witness {
            alternative: QMatrix::new(m.q(), m.rows(), m.cols(), search.cur.clone())
                .expect("search keeps symbols in range"),
            nodes: search.nodes,
        },
        Outcome::Exhausted => WeakVerdict::Unique {
            nodes: search.nodes,
        },
        Outcome::OutOfBudget => WeakVerdict::BudgetExceeded {
            nodes: search.budget,
        },
    }
}

fn shares_line(p: (usize, usize), r: (usize, usize)) -> bool {
    p.0 == r.0 || p.1 == r.1
}

fn no_straight_triple(p: (usize, usize), r: (usize, usize), s: (usize, usize)) -> bool {
    !(p.0 == r.0 && r.0 == s.0) && !(p.1 == r.1 && r.1 == s.1)
}

/// An `ab`-path: distinct cells, consecutive ones sharing a row or a column,
/// no three consecutive in one line, values alternating `a, b, a, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSeq {
    pub a: Symbol,
    pub b: Symbol,
    pub cells: Vec<(usize, usize)>,
}

impl PathSeq {
    pub fn new(m: &QMatrix, cells: Vec<(usize, usize)>) -> Result<Self> {
        if cells.len() < 2 {
            return Err(Error::domain("a path needs at least two cells"));
        }
        if cells.iter().any(|&(i, j)| i >= m.rows() || j >= m.cols()) {
            return Err(Error::domain("path cell out of range"));
        }
        for (x, p) in cells.iter().enumerate() {
            if cells[x + 1..].contains(p) {
                return Err(Error::domain("path cells must be distinct"));
            }
        }
        if !cells.windows(2).all(|w| shares_line(w[0], w[1])) {
            return Err(Error::domain(
                "consecutive path cells must share a row or column",
            ));
        }
        if !cells
            .windows(3)
            .all(|w| no_straight_triple(w[0], w[1], w[2]))
        {
            return Err(Error::domain(
                "three consecutive path cells lie in one line",
            ));
        }
        let a = m.get(cells[0].0, cells[0].1);
        let b = m.get(cells[1].0, cells[1].1);
        let alternating = a != b
            && cells
                .iter()
                .enumerate()
                .all(|(x, &(i, j))| m.get(i, j) == if x % 2 == 0 { a } else { b });
        if !alternating {
            return Err(Error::domain(
                "path values must alternate between two symbols",
            ));
        }
        Ok(PathSeq { a, b, cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// An `ab`-cycle: a path whose wrap-around by its first two cells is still a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSeq {
    pub path: PathSeq,
}

impl CycleSeq {
    pub fn new(m: &QMatrix, cells: Vec<(usize, usize)>) -> Result<Self> {
        let path = PathSeq::new(m, cells)?;
        let c = &path.cells;
        let k = c.len();
        if k < 4 || k % 2 != 0 {
            return Err(Error::domain("a cycle has even length at least 4"));
        }
        let closes = shares_line(c[k - 1], c[0])
            && no_straight_triple(c[k - 2], c[k - 1], c[0])
            && no_straight_triple(c[k - 1], c[0], c[1]);
        if !closes {
            return Err(Error::domain("path does not close into a cycle"));
        }
        Ok(CycleSeq { path })
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.path.cells
    }

    /// Interchanges the two symbols along the cycle; the result has the same
    /// structure profile.
    pub fn swap_along(&self, m: &QMatrix) -> QMatrix {
        let mut entries = m.entries().to_vec();
        for &(i, j) in self.cells() {
            let v = &mut entries[i * m.cols() + j];
            *v = if *v == self.path.a {
                self.path.b
            } else {
                self.path.a
            };
        }
        QMatrix::new(m.q(), m.rows(), m.cols(), entries).expect("swap keeps symbols in range")
    }
}

/// A shortest alternating cycle of `m`, if any.
///
/// For each symbol pair `(a, b)`, an `a`-cell `(i, j)` is an arc from row `i`
/// to column `j` and a `b`-cell an arc back; alternating cycles are exactly the
/// directed cycles of this graph, found here by breadth-first search.
pub fn find_cycle(m: &QMatrix) -> Option<CycleSeq> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut best: Option<Vec<(usize, usize)>> = None;
    for a in 0..m.q() {
        for b in a + 1..m.q() {
            // Vertices: rows 0..rows, columns rows..rows+cols.
            let mut adj = vec![Vec::new(); rows + cols];
            for i in 0..rows {
                for j in 0..cols {
                    let v = m.get(i, j);
                    if v == a {
                        adj[i].push(rows + j);
                    } else if v == b {
                        adj[rows + j].push(i);
                    }
                }
            }
            for start in 0..rows {
                let Some(cycle) = shortest_cycle_through(&adj, start) else {
                    continue;
                };
                let cells = vertices_to_cells(&cycle, rows);
                if best.as_ref().is_none_or(|c| cells.len() < c.len()) {
                    best = Some(cells);
                }
            }
        }
    }
    best.map(|cells| CycleSeq::new(m, cells).expect("directed cycles are alternating cycles"))
}

fn shortest_cycle_through(adj: &[Vec<usize>], start: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if v == start {
                let mut cycle = vec![u];
                let mut x = u;
                while x != start {
                    x = parent[x];
                    cycle.push(x);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

/// Turns a vertex cycle `row, col, row, ...` into its cells.
fn vertices_to_cells(cycle: &[usize], rows: usize) -> Vec<(usize, usize)> {
    let k = cycle.len();
    (0..k)
        .map(|x| {
            let (u, v) = (cycle[x], cycle[(x + 1) % k]);
            if u < rows {
                (u, v - rows)
            } else {
                (v, u - rows)
            }
        })
        .collect()
}

/// The 5-ary `n x n` matrix with zero diagonal, ones on the superdiagonal and
/// in the bottom-left corner, threes above the superdiagonal, fours in column
/// 1 between the first and last rows, and twos elsewhere below the diagonal.
pub fn forbidden_family(n: usize) -> Result<QMatrix> {
    if n < 3 {
        return Err(Error::domain("the forbidden family starts at n = 3"));
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let v = if i == j {
                0
            } else if j == i + 1 || (i, j) == (n, 1) {
                1
            } else if j >= i + 2 {
                3
            } else if j == 1 {
                4
            } else {
                2
            };
            entries.push(v);
        }
    }
    QMatrix::new(5, n, n, entries)
}

/// Row and column deletions of `m` that still leave a matrix.
fn maximal_proper_submatrices(m: &QMatrix) -> Vec<QMatrix> {
    let mut out = Vec::new();
    if m.rows() > 1 {
        out.extend((0..m.rows()).map(|i| m.without_row(i).expect("row in range")));
    }
    if m.cols() > 1 {
        out.extend((0..m.cols()).map(|j| m.without_col(j).expect("column in range")));
    }
    out
}

/// True iff `m` is not weak lonesum while every one-row-deleted and
/// one-column-deleted submatrix is. Weak lonesum is inherited by submatrices
/// of weak lonesum matrices, so the maximal proper submatrices suffice.
pub fn is_minimal_forbidden(m: &QMatrix, budget: u64) -> Result<bool> {
    match is_weak_lonesum(m, budget) {
        WeakVerdict::Unique { .. } => return Ok(false),
        WeakVerdict::BudgetExceeded { nodes } => return Err(Error::BudgetExceeded { nodes }),
        WeakVerdict::Witness { .. } => {}
    }
    for sub in maximal_proper_submatrices(m) {
        match is_weak_lonesum(&sub, budget) {
            WeakVerdict::Unique { .. } => {}
            WeakVerdict::Witness { .. } => return Ok(false),
            WeakVerdict::BudgetExceeded { nodes } => return Err(Error::BudgetExceeded { nodes }),
        }
    }
    Ok(true)
}

/// Row and column indices selecting a submatrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubmatrixHandle {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    match k {
        2 => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| vec![a, b]))
            .collect(),
        3 => (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| vec![a, b, c])))
            .collect(),
        _ => unreachable!("only pairs and triples are scanned"),
    }
}

/// The first `2 x 2`, then `2 x 3`, then `3 x 2` submatrix that is not weak
/// lonesum, scanning index sets lexicographically.
pub fn small_forbidden_scan(m: &QMatrix) -> Option<SubmatrixHandle> {
    for (kr, kc) in [(2, 2), (2, 3), (3, 2)] {
        if m.rows() < kr || m.cols() < kc {
            continue;
        }
        for rows in index_subsets(m.rows(), kr) {
            for cols in index_subsets(m.cols(), kc) {
                let sub = m.submatrix(&rows, &cols).expect("indices in range");
                if !is_weak_lonesum(&sub, u64::MAX).is_unique() {
                    return Some(SubmatrixHandle { rows, cols });
                }
            }
        }
    }
    None
}

/// A matrix together with an alternative value on some of its cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedMatrix {
    base: QMatrix,
    alt: Vec<Option<Symbol>>,
}

impl AnnotatedMatrix {
    /// Rows of whitespace-separated entries `v` or `v_w` (value `v`,
    /// alternative `w`).
    fn parse(q: Symbol, rows: &[&str]) -> Self {
        let mut entries = Vec::new();
        let mut alt = Vec::new();
        let mut width = 0;
        for row in rows {
            let cells: Vec<&str> = row.split_whitespace().collect();
            width = cells.len();
            for cell in cells {
                let mut parts = cell
                    .split('_')
                    .map(|p| p.parse::<Symbol>().expect("embedded digit"));
                entries.push(parts.next().expect("entry value"));
                alt.push(parts.next());
            }
        }
        let base =
            QMatrix::new(q, rows.len(), width, entries).expect("embedded matrix is well formed");
        AnnotatedMatrix { base, alt }
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.base
    }

    /// The matrix with every annotated entry replaced by its alternative.
    pub fn alternative(&self) -> QMatrix {
        let entries = self
            .base
            .entries()
            .iter()
            .zip(&self.alt)
            .map(|(&v, a)| a.unwrap_or(v))
            .collect();
        QMatrix::new(self.base.q(), self.base.rows(), self.base.cols(), entries)
            .expect("alternatives in range")
    }

    /// Exchanges the roles of values and alternatives; an involution.
    pub fn flipped(&self) -> Self {
        let alt = self
            .base
            .entries()
            .iter()
            .zip(&self.alt)
            .map(|(&v, a)| a.map(|_| v))
            .collect();
        AnnotatedMatrix {
            base: self.alternative(),
            alt,
        }
    }
}

/// The forbidden ternary `6 x 6` matrix `T` with its alternative filling.
pub fn ternary_t() -> AnnotatedMatrix {
    AnnotatedMatrix::parse(
        3,
        &[
            "0_1 1_2 2_0 0   0   0",
            "1   1   0_1 0   0   1_0",
            "1   1   1_2 2_0 0_1 1",
            "1   2_1 2   2   1_2 1",
            "1_2 2   2   2   2_0 0_1",
            "2_0 2   2   0_2 0   0",
        ],
    )
}

/// The forbidden ternary `6 x 9` matrix `T'` with its alternative filling.
pub fn ternary_t_prime() -> AnnotatedMatrix {
    AnnotatedMatrix::parse(
        3,
        &[
            "1   0_1 1_2 2_0 2   0   0   0   0",
            "1   1   1   0_2 2_1 0   0   0   1_0",
            "1   1   1   2   1_2 2_0 0_1 0   1",
            "1   1   2_1 2   2   2   1_0 0_2 1",
            "1_2 1   2   2   2   2   0   2_0 0_1",
            "2_1 1_0 2   2   2   0_2 0   0   0",
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strong::strongly_lonesum;
    use proptest::prelude::*;

    fn mat(q: Symbol, rows: &[&[Symbol]]) -> QMatrix {
        QMatrix::from_rows(q, rows).unwrap()
    }

    /// Every matrix of the given shape sharing the structure profile of `m`.
    fn brute_class(m: &QMatrix) -> Vec<QMatrix> {
        let (q, cells) = (m.q() as u64, m.rows() * m.cols());
        let target = m.structure_profile();
        (0..q.pow(cells as u32))
            .map(|mut code| {
                let entries = (0..cells)
                    .map(|_| {
                        let v = (code % q) as Symbol;
                        code /= q;
                        v
                    })
                    .collect();
                QMatrix::new(m.q(), m.rows(), m.cols(), entries).unwrap()
            })
            .filter(|x| x.structure_profile() == target)
            .collect()
    }

    #[test]
    fn weak_example_is_unique() {
        let m = mat(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 1]]);
        assert!(is_weak_lonesum(&m, DEFAULT_BUDGET).is_unique());
        assert_eq!(brute_class(&m), vec![m]);
    }

    #[test]
    fn binary_identity_has_swapped_witness() {
        let m = mat(2, &[&[1, 0], &[0, 1]]);
        let v = is_weak_lonesum(&m, DEFAULT_BUDGET);
        assert_eq!(v.witness(), Some(&mat(2, &[&[0, 1], &[1, 0]])));
        assert!(v.nodes() > 0);
    }

    #[test]
    fn witness_is_lexicographically_least_alternative() {
        let cases = [
            mat(3, &[&[2, 0, 1], &[0, 1, 2], &[1, 2, 0]]),
            mat(3, &[&[1, 0, 2], &[0, 1, 2], &[2, 2, 0]]),
            mat(4, &[&[3, 1, 0], &[0, 3, 1]]),
        ];
        for m in cases {
            let mut class = brute_class(&m);
            class.retain(|x| *x != m);
            class.sort_by(|x, y| x.entries().cmp(y.entries()));
            assert_eq!(
                is_weak_lonesum(&m, DEFAULT_BUDGET).witness(),
                class.first(),
                "{m}"
            );
        }
    }

    #[test]
    fn budget_is_reported() {
        let t = ternary_t();
        assert_eq!(
            is_weak_lonesum(t.matrix(), 1),
            WeakVerdict::BudgetExceeded { nodes: 1 }
        );
        assert!(matches!(
            is_minimal_forbidden(t.matrix(), 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn family_generator() {
        assert_eq!(
            forbidden_family(3).unwrap(),
            mat(5, &[&[0, 1, 3], &[4, 0, 1], &[1, 2, 0]])
        );
        let m5 = mat(
            5,
            &[
                &[0, 1, 3, 3, 3],
                &[4, 0, 1, 3, 3],
                &[4, 2, 0, 1, 3],
                &[4, 2, 2, 0, 1],
                &[1, 2, 2, 2, 0],
            ],
        );
        assert_eq!(forbidden_family(5).unwrap(), m5);
        assert!(forbidden_family(2).is_err());
        for n in 3..=5 {
            let m = forbidden_family(n).unwrap();
            let swapped = m.swap_values(0, 1).unwrap();
            assert_eq!(swapped.structure_profile(), m.structure_profile());
            assert_eq!(
                is_weak_lonesum(&m, DEFAULT_BUDGET).witness(),
                Some(&swapped)
            );
        }
    }

    #[test]
    fn cycles() {
        let id = mat(2, &[&[1, 0], &[0, 1]]);
        let c = find_cycle(&id).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!((c.path.a, c.path.b), (0, 1));

        let m5 = forbidden_family(5).unwrap();
        let c = find_cycle(&m5).unwrap();
        assert_eq!(c.len(), 10);
        let mut cells = c.cells().to_vec();
        cells.sort_unstable();
        let mut bold: Vec<(usize, usize)> = (0..5)
            .map(|i| (i, i))
            .chain((0..4).map(|i| (i, i + 1)))
            .collect();
        bold.push((4, 0));
        bold.sort_unstable();
        assert_eq!(cells, bold);

        assert!(find_cycle(&QMatrix::filled(4, 3, 3, 2).unwrap()).is_none());
        assert!(find_cycle(&mat(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 1]])).is_none());
    }

    #[test]
    fn path_validation() {
        let m = mat(3, &[&[0, 1, 2], &[1, 0, 2], &[2, 2, 2]]);
        assert!(PathSeq::new(&m, vec![(0, 0), (0, 1), (1, 1)]).is_ok());
        // Three cells in one row.
        let row = mat(2, &[&[0, 1, 0]]);
        assert!(PathSeq::new(&row, vec![(0, 0), (0, 1), (0, 2)]).is_err());
        // Not adjacent.
        assert!(PathSeq::new(&m, vec![(0, 0), (1, 1)]).is_err());
        // Values do not alternate.
        assert!(PathSeq::new(&m, vec![(0, 0), (0, 1), (0, 2)]).is_err());
        assert!(PathSeq::new(&m, vec![(0, 0), (0, 0)]).is_err());
        assert!(PathSeq::new(&m, vec![(0, 0)]).is_err());
        assert!(CycleSeq::new(&m, vec![(0, 0), (0, 1), (1, 1), (1, 0)]).is_ok());
        assert!(CycleSeq::new(&m, vec![(0, 0), (0, 1), (1, 1)]).is_err());
    }

    #[test]
    fn minimality() {
        assert!(is_minimal_forbidden(&forbidden_family(3).unwrap(), DEFAULT_BUDGET).unwrap());
        assert!(is_minimal_forbidden(&mat(2, &[&[1, 0], &[0, 1]]), DEFAULT_BUDGET).unwrap());
        assert!(!is_minimal_forbidden(
            &mat(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 1]]),
            DEFAULT_BUDGET
        )
        .unwrap());
        // Contains the binary forbidden pattern in a proper submatrix.
        let bigger = mat(2, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]);
        assert!(!is_minimal_forbidden(&bigger, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn ternary_constants() {
        for t in [ternary_t(), ternary_t_prime()] {
            let alt = t.alternative();
            assert_ne!(&alt, t.matrix());
            assert_eq!(alt.structure_profile(), t.matrix().structure_profile());
            assert_eq!(t.flipped().flipped(), t);
            assert_eq!(&t.flipped().alternative(), t.matrix());
            assert!(find_cycle(t.matrix()).is_none());
        }
        assert_eq!(
            (ternary_t().matrix().rows(), ternary_t().matrix().cols()),
            (6, 6)
        );
        assert_eq!(
            (
                ternary_t_prime().matrix().rows(),
                ternary_t_prime().matrix().cols()
            ),
            (6, 9)
        );
    }

    #[test]
    fn ternary_t_is_minimal_forbidden() {
        let t = ternary_t();
        let verdict = is_weak_lonesum(t.matrix(), DEFAULT_BUDGET);
        assert_eq!(verdict.witness(), Some(&t.alternative()));
        let t_prime = ternary_t_prime();
        assert_eq!(
            is_weak_lonesum(t_prime.matrix(), DEFAULT_BUDGET).witness(),
            Some(&t_prime.alternative())
        );
        assert!(small_forbidden_scan(t.matrix()).is_none());
        assert!(is_minimal_forbidden(t.matrix(), DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn small_scan() {
        assert!(small_forbidden_scan(&QMatrix::filled(3, 4, 4, 0).unwrap()).is_none());
        let m = mat(2, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let hit = small_forbidden_scan(&m).unwrap();
        assert_eq!(
            hit,
            SubmatrixHandle {
                rows: vec![0, 1],
                cols: vec![1, 2]
            }
        );
    }

    #[test]
    fn binary_weak_equals_strong() {
        for (m, n) in [(2, 2), (2, 3), (3, 3)] {
            for code in 0u32..(1 << (m * n)) {
                let entries = (0..m * n).map(|b| ((code >> b) & 1) as Symbol).collect();
                let x = QMatrix::new(2, m, n, entries).unwrap();
                assert_eq!(
                    is_weak_lonesum(&x, DEFAULT_BUDGET).is_unique(),
                    strongly_lonesum(&x),
                    "{x}"
                );
            }
        }
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (2u8..=4, 1usize..=4, 1usize..=4).prop_flat_map(|(q, m, n)| {
            proptest::collection::vec(0..q, m * n)
                .prop_map(move |e| QMatrix::new(q, m, n, e).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cycle_swap_gives_witness(m in small_matrix()) {
            if let Some(c) = find_cycle(&m) {
                let swapped = c.swap_along(&m);
                prop_assert_ne!(&swapped, &m);
                prop_assert_eq!(swapped.structure_profile(), m.structure_profile());
                prop_assert!(is_weak_lonesum(&m, DEFAULT_BUDGET).witness().is_some());
            }
        }

        #[test]
        fn witnesses_share_the_profile(m in small_matrix()) {
            match is_weak_lonesum(&m, DEFAULT_BUDGET) {
                WeakVerdict::Witness { alternative, .. } => {
                    prop_assert_ne!(&alternative, &m);
                    prop_assert_eq!(alternative.structure_profile(), m.structure_profile());
                }
                WeakVerdict::Unique { .. } => prop_assert!(find_cycle(&m).is_none()),
                WeakVerdict::BudgetExceeded { .. } => prop_assert!(false, "tiny search ran out of budget"),
            }
        }
    }
}
