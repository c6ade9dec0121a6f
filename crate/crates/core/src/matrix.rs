//! Dense q-ary matrices and the profiles they are reconstructed from.
//!
//! A [`QMatrix`] is immutable once built; every transformation returns a new
//! value. Indices are zero-based throughout the library.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};

/// A single matrix entry, an element of `0..q`.
pub type Symbol = u8;

/// An `m x n` matrix over the alphabet `{0, .., q-1}`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMatrix {
    q: Symbol,
    rows: usize,
    cols: usize,
    entries: Vec<Symbol>,
}

/// Row and column sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarginProfile {
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
}

impl MarginProfile {
    pub fn new(row_sums: Vec<u64>, col_sums: Vec<u64>) -> Self {
        MarginProfile { row_sums, col_sums }
    }

    /// True when the row sums and column sums have the same total.
    pub fn is_balanced(&self) -> bool {
        self.row_sums.iter().sum::<u64>() == self.col_sums.iter().sum::<u64>()
    }
}

/// Row and column structure vectors: entry `[v]` of a vector counts symbol `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructureProfile {
    pub row_structs: Vec<Vec<u32>>,
    pub col_structs: Vec<Vec<u32>>,
}

/// A row and column arrangement putting a strongly lonesum matrix into its
/// monotone canonical shape.
///
/// `canon[i][j] == original[row_perm[i]][col_perm[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub canon: QMatrix,
}

/// Reasons a matrix has no standard form. Positions refer to the sorted
/// arrangement, not the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StandardFormError {
    #[error("no monotone arrangement exists (sorted entry ({row}, {col}) increases)")]
    NotMonotone { row: usize, col: usize },
    #[error("monotone arrangement has a forbidden 2x2 window at ({row}, {col})")]
    ForbiddenWindow { row: usize, col: usize },
}

/// Histogram of `v` over the alphabet `0..q`.
pub fn structure_vector(v: &[Symbol], q: Symbol) -> Result<Vec<u32>> {
    if q < 2 {
        return Err(Error::domain(format!("alphabet size {q} is below 2")));
    }
    let mut counts = vec![0u32; q as usize];
    for &s in v {
        if s >= q {
            return Err(Error::domain(format!("symbol {s} outside 0..{q}")));
        }
        counts[s as usize] += 1;
    }
    Ok(counts)
}

/// The 2x2 test shared by the standard form sweep and the strong criterion.
/// `a b / c d` is allowed iff no unit trade `(-1, +1, +1, -1)` or its
/// negation keeps every entry inside `0..q`.
pub(crate) fn window_allowed(q: Symbol, a: Symbol, b: Symbol, c: Symbol, d: Symbol) -> bool {
    let top = q - 2;
    let down_diag = a.min(d) >= 1 && b.max(c) <= top;
    let up_diag = b.min(c) >= 1 && a.max(d) <= top;
    !down_diag && !up_diag
}

fn check_permutation(p: &[usize], len: usize, what: &str) -> Result<()> {
    if p.len() != len {
        return Err(Error::domain(format!(
            "{what} permutation has length {}, expected {len}",
            p.len()
        )));
    }
    let mut seen = vec![false; len];
    for &i in p {
        if i >= len || std::mem::replace(&mut seen[i], true) {
            return Err(Error::domain(format!(
                "{what} permutation is not a bijection on 0..{len}"
            )));
        }
    }
    Ok(())
}

impl QMatrix {
    pub fn new(q: Symbol, rows: usize, cols: usize, entries: Vec<Symbol>) -> Result<Self> {
        if q < 2 {
            return Err(Error::domain(format!("alphabet size {q} is below 2")));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::domain(
                "matrices must have at least one row and one column",
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::domain(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= q) {
            return Err(Error::domain(format!("entry {bad} outside 0..{q}")));
        }
        Ok(QMatrix {
            q,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows<R: AsRef<[Symbol]>>(q: Symbol, rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != n) {
            return Err(Error::domain("rows have different lengths"));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        QMatrix::new(q, m, n, entries)
    }

    pub fn filled(q: Symbol, rows: usize, cols: usize, value: Symbol) -> Result<Self> {
        QMatrix::new(q, rows, cols, vec![value; rows * cols])
    }

    /// Builds a matrix without validation; callers guarantee the invariants.
    pub(crate) fn from_raw(q: Symbol, rows: usize, cols: usize, entries: Vec<Symbol>) -> Self {
        debug_assert!(rows > 0 && cols > 0 && entries.len() == rows * cols);
        debug_assert!(entries.iter().all(|&e| e < q));
        QMatrix {
            q,
            rows,
            cols,
            entries,
        }
    }

    pub fn q(&self) -> Symbol {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Symbol {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Symbol] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Symbol>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn with_entry(&self, i: usize, j: usize, value: Symbol) -> Result<Self> {
        if i >= self.rows || j >= self.cols || value >= self.q {
            return Err(Error::domain(format!("cannot set ({i}, {j}) to {value}")));
        }
        let mut entries = self.entries.clone();
        entries[i * self.cols + j] = value;
        Ok(QMatrix { entries, ..*self })
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|j| self.column(j).collect::<Vec<_>>())
            .collect();
        QMatrix::from_raw(self.q, self.cols, self.rows, entries)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::domain(
                "submatrix must keep at least one row and one column",
            ));
        }
        if rows.iter().any(|&i| i >= self.rows) || cols.iter().any(|&j| j >= self.cols) {
            return Err(Error::domain("submatrix index out of range"));
        }
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j)))
            .collect();
        Ok(QMatrix::from_raw(self.q, rows.len(), cols.len(), entries))
    }

    pub fn without_row(&self, i: usize) -> Result<Self> {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        self.submatrix(&rows, &(0..self.cols).collect::<Vec<_>>())
    }

    pub fn without_col(&self, j: usize) -> Result<Self> {
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &cols)
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        self.row(i).iter().map(|&e| e as u64).sum()
    }

    pub fn col_sum(&self, j: usize) -> u64 {
        self.column(j).map(|e| e as u64).sum()
    }

    pub fn margins(&self) -> MarginProfile {
        MarginProfile {
            row_sums: (0..self.rows).map(|i| self.row_sum(i)).collect(),
            col_sums: (0..self.cols).map(|j| self.col_sum(j)).collect(),
        }
    }

    fn histogram(&self, it: impl Iterator<Item = Symbol>) -> Vec<u32> {
        let mut counts = vec![0u32; self.q as usize];
        for s in it {
            counts[s as usize] += 1;
        }
        counts
    }

    pub fn structure_profile(&self) -> StructureProfile {
        StructureProfile {
            row_structs: (0..self.rows)
                .map(|i| self.histogram(self.row(i).iter().copied()))
                .collect(),
            col_structs: (0..self.cols)
                .map(|j| self.histogram(self.column(j)))
                .collect(),
        }
    }

    /// `result[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Result<Self> {
        check_permutation(row_perm, self.rows, "row")?;
        check_permutation(col_perm, self.cols, "column")?;
        self.submatrix(row_perm, col_perm)
    }

    /// Exchanges every occurrence of `a` with `b`.
    pub fn swap_values(&self, a: Symbol, b: Symbol) -> Result<Self> {
        if a >= self.q || b >= self.q {
            return Err(Error::domain(format!(
                "cannot swap {a} and {b} over alphabet 0..{}",
                self.q
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|&e| match e {
                e if e == a => b,
                e if e == b => a,
                e => e,
            })
            .collect();
        Ok(QMatrix { entries, ..*self })
    }

    /// Sorts rows and columns by (count of `q-1`, sum) descending, ties by
    /// index, then verifies the result is monotone and free of forbidden
    /// 2x2 windows.
    pub fn standard_form(&self) -> std::result::Result<StandardForm, StandardFormError> {
        let top = self.q - 1;
        let mut row_perm: Vec<usize> = (0..self.rows).collect();
        row_perm.sort_by_key(|&i| {
            let tops = self.row(i).iter().filter(|&&e| e == top).count();
            (Reverse(tops), Reverse(self.row_sum(i)), i)
        });
        let mut col_perm: Vec<usize> = (0..self.cols).collect();
        col_perm.sort_by_key(|&j| {
            let tops = self.column(j).filter(|&e| e == top).count();
            (Reverse(tops), Reverse(self.col_sum(j)), j)
        });
        let canon = self
            .submatrix(&row_perm, &col_perm)
            .expect("sorted indices are in range");

        let (m, n) = (canon.rows, canon.cols);
        for i in 0..m {
            for j in 0..n {
                let e = canon.get(i, j);
                if (j + 1 < n && canon.get(i, j + 1) > e) || (i + 1 < m && canon.get(i + 1, j) > e)
                {
                    return Err(StandardFormError::NotMonotone { row: i, col: j });
                }
            }
        }
        for i in 0..m.saturating_sub(1) {
            for j in 0..n.saturating_sub(1) {
                let (a, b) = (canon.get(i, j), canon.get(i, j + 1));
                let (c, d) = (canon.get(i + 1, j), canon.get(i + 1, j + 1));
                if !window_allowed(self.q, a, b, c, d) {
                    return Err(StandardFormError::ForbiddenWindow { row: i, col: j });
                }
            }
        }
        Ok(StandardForm {
            row_perm,
            col_perm,
            canon,
        })
    }

    /// Parses the text format: a header `q m n`, then `m` lines of `n` entries.
    /// Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `q m n`".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        let [q, m, n] = nums[..] else {
            return Err(Error::Parse {
                line: hline,
                message: format!("header needs 3 numbers, found {}", nums.len()),
            });
        };
        if !(2..=Symbol::MAX as u64).contains(&q) || m == 0 || n == 0 {
            return Err(Error::Parse {
                line: hline,
                message: format!("invalid header `{header}`"),
            });
        }
        let (q, m, n) = (q as Symbol, m as usize, n as usize);
        let mut entries = Vec::with_capacity(m * n);
        for r in 0..m {
            let (line, body) = lines.next().ok_or(Error::Parse {
                line: hline + r + 1,
                message: format!("expected {m} rows, found {r}"),
            })?;
            let row = parse_numbers(line, body)?;
            if row.len() != n {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            for v in row {
                if v >= q as u64 {
                    return Err(Error::Parse {
                        line,
                        message: format!("entry {v} outside 0..{q}"),
                    });
                }
                entries.push(v as Symbol);
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                message: "trailing content after the last row".into(),
            });
        }
        Ok(QMatrix::from_raw(q, m, n, entries))
    }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<u64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line,
                message: format!("`{tok}` is not a nonnegative integer"),
            })
        })
        .collect()
}

impl FromStr for QMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QMatrix::parse(s)
    }
}

/// Writes the text format accepted by [`QMatrix::parse`].
impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.q, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix(q={}, ", self.q)?;
        f.debug_list().entries(self.to_rows()).finish()?;
        write!(f, ")")
    }
}

impl Serialize for QMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QMatrix", 4)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("m", &self.rows)?;
        st.serialize_field("n", &self.cols)?;
        st.serialize_field("rows", &self.to_rows())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(q: Symbol, rows: &[&[Symbol]]) -> QMatrix {
        QMatrix::from_rows(q, rows).unwrap()
    }

    #[test]
    fn structure_vectors_of_example_rows() {
        assert_eq!(structure_vector(&[0, 1, 0], 3).unwrap(), vec![2, 1, 0]);
        assert_eq!(structure_vector(&[1, 2, 1], 3).unwrap(), vec![0, 2, 1]);
        assert_eq!(structure_vector(&[], 2).unwrap(), vec![0, 0]);
        assert!(structure_vector(&[3], 3).is_err());
    }

    #[test]
    fn margins_of_binary_and_ternary_examples() {
        let a = m(2, &[&[1, 1, 0], &[1, 0, 0], &[1, 1, 1]]);
        assert_eq!(
            a.margins(),
            MarginProfile::new(vec![2, 1, 3], vec![3, 2, 1])
        );
        let z = QMatrix::filled(2, 2, 2, 0).unwrap();
        assert_eq!(z.margins(), MarginProfile::new(vec![0, 0], vec![0, 0]));
        let b = m(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 0]]);
        assert_eq!(
            b.margins(),
            MarginProfile::new(vec![1, 4, 1], vec![1, 4, 1])
        );
    }

    #[test]
    fn structure_profile_rows() {
        let a = m(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 1]]);
        let p = a.structure_profile();
        assert_eq!(
            p.row_structs,
            vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 2, 0]]
        );
        assert_eq!(
            p.col_structs,
            vec![vec![2, 1, 0], vec![0, 2, 1], vec![1, 2, 0]]
        );

        let one = m(4, &[&[2]]);
        let p = one.structure_profile();
        assert_eq!(p.row_structs, vec![vec![0, 0, 1, 0]]);
        assert_eq!(p.col_structs, p.row_structs);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(QMatrix::new(2, 0, 3, vec![]).is_err());
        assert!(QMatrix::new(1, 1, 1, vec![0]).is_err());
        assert!(QMatrix::new(2, 1, 2, vec![0, 2]).is_err());
        assert!(QMatrix::new(2, 2, 2, vec![0; 3]).is_err());
    }

    #[test]
    fn permute_and_swap_edge_cases() {
        let a = m(3, &[&[0, 1, 2], &[2, 2, 0]]);
        assert_eq!(a.permute(&[0, 1], &[0, 1, 2]).unwrap(), a);
        assert_eq!(a.swap_values(1, 1).unwrap(), a);
        assert!(a.permute(&[0, 0], &[0, 1, 2]).is_err());
        assert!(a.permute(&[0, 1], &[0, 1]).is_err());
        assert!(a.swap_values(0, 3).is_err());
        let p = a.permute(&[1, 0], &[2, 0, 1]).unwrap();
        assert_eq!(p.to_rows(), vec![vec![0, 2, 2], vec![2, 0, 1]]);
    }

    #[test]
    fn eleven_by_eleven_stairs_are_already_standard() {
        let stairs = m(
            3,
            &[
                &[2, 2, 2, 2, 2, 2, 2, 1, 1, 0, 0],
                &[2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0],
                &[2, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0],
                &[2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                &[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            ],
        );
        let sf = stairs.standard_form().unwrap();
        assert_eq!(sf.row_perm, (0..11).collect::<Vec<_>>());
        assert_eq!(sf.col_perm, (0..11).collect::<Vec<_>>());
        assert_eq!(sf.canon, stairs);
    }

    #[test]
    fn standard_form_failures() {
        let anti = m(2, &[&[0, 1], &[1, 0]]);
        assert!(matches!(
            anti.standard_form(),
            Err(StandardFormError::NotMonotone { .. })
        ));
        // Monotone, yet shares its margins with [[2,0],[0,1]].
        let flat = m(3, &[&[1, 1], &[1, 0]]);
        assert!(matches!(
            flat.standard_form(),
            Err(StandardFormError::ForbiddenWindow { .. })
        ));
    }

    #[test]
    fn single_row_sorts_descending() {
        let r = m(4, &[&[1, 3, 0, 2, 3]]);
        let sf = r.standard_form().unwrap();
        assert_eq!(sf.canon.to_rows(), vec![vec![3, 3, 2, 1, 0]]);
        assert_eq!(sf.col_perm, vec![1, 4, 3, 0, 2]);
    }

    #[test]
    fn text_format_roundtrip_and_errors() {
        let a = m(3, &[&[0, 1, 2], &[2, 2, 0]]);
        let text = a.to_string();
        assert_eq!(text, "3 2 3\n0 1 2\n2 2 0\n");
        assert_eq!(text.parse::<QMatrix>().unwrap(), a);

        let err = |s: &str| match QMatrix::parse(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("2 1"), 1);
        assert_eq!(err("2 1 2\n0 2\n"), 2);
        assert_eq!(err("2 2 2\n0 1\n"), 3);
        assert_eq!(err("2 1 2\n0 1 1\n"), 2);
        assert_eq!(err("2 1 2\n0 1\n1 1\n"), 3);
        assert_eq!(err("3 1 1\nx\n"), 2);
    }

    fn arb_matrix(max_q: Symbol, max_dim: usize) -> impl Strategy<Value = QMatrix> {
        (2..=max_q, 1..=max_dim, 1..=max_dim).prop_flat_map(|(q, m, n)| {
            proptest::collection::vec(0..q, m * n)
                .prop_map(move |e| QMatrix::new(q, m, n, e).unwrap())
        })
    }

    fn arb_perm(len: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..len).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn permuted_margins_are_reordered(
            (a, rp, cp) in arb_matrix(5, 6).prop_flat_map(|a| {
                let (r, c) = (a.rows(), a.cols());
                (Just(a), arb_perm(r), arb_perm(c))
            })
        ) {
            let p = a.permute(&rp, &cp).unwrap();
            let (orig, moved) = (a.margins(), p.margins());
            for (i, &src) in rp.iter().enumerate() {
                prop_assert_eq!(moved.row_sums[i], orig.row_sums[src]);
            }
            for (j, &src) in cp.iter().enumerate() {
                prop_assert_eq!(moved.col_sums[j], orig.col_sums[src]);
            }
        }

        #[test]
        fn profiles_are_consistent(a in arb_matrix(5, 6)) {
            let marg = a.margins();
            prop_assert!(marg.is_balanced());
            let prof = a.structure_profile();
            for (i, s) in prof.row_structs.iter().enumerate() {
                prop_assert_eq!(s.iter().sum::<u32>() as usize, a.cols());
                let weighted: u64 = s.iter().enumerate().map(|(v, &c)| v as u64 * c as u64).sum();
                prop_assert_eq!(weighted, marg.row_sums[i]);
            }
            for v in 0..a.q() as usize {
                let by_rows: u32 = prof.row_structs.iter().map(|s| s[v]).sum();
                let by_cols: u32 = prof.col_structs.iter().map(|s| s[v]).sum();
                prop_assert_eq!(by_rows, by_cols);
            }
        }

        #[test]
        fn swap_is_an_involution(a in arb_matrix(5, 5), x in 0u8..5, y in 0u8..5) {
            prop_assume!(x < a.q() && y < a.q());
            let back = a.swap_values(x, y).unwrap().swap_values(x, y).unwrap();
            prop_assert_eq!(back.structure_profile(), a.structure_profile());
            prop_assert_eq!(back, a);
        }

        #[test]
        fn text_format_roundtrips(a in arb_matrix(7, 5)) {
            prop_assert_eq!(a.to_string().parse::<QMatrix>().unwrap(), a);
        }
    }
}
