//! Fixtures for the acceptance suite: exhaustive matrix enumeration and the
//! printed table of symmetric lonesum counts, with a small evaluator for its
//! polynomial column.

use lonesum::{QMatrix, Symbol};

/// The printed table of symmetric lonesum counts, row by row:
/// `(n, polynomial in q, value at q = 2, value at q = 3)`.
pub const SYMMETRIC_TABLE: [(usize, &str, u64, u64); 5] = [
    (1, "q", 2, 3),
    (2, "2q^2+2q-6", 6, 18),
    (3, "9q^3-12q^2+12q-22", 26, 149),
    (4, "16q^4+72q^3-312q^2+392q-218", 150, 1390),
    (5, "25q^5+160q^4+400q^3-3180q^2+4920q-2598", 1082, 13377),
];

/// Every `q`-ary `m x n` matrix; entries are the base-`q` digits of a counter,
/// least significant first in row-major order.
pub fn all_matrices(q: Symbol, m: usize, n: usize) -> impl Iterator<Item = QMatrix> {
    let base = u64::from(q);
    (0..base.pow((m * n) as u32)).map(move |mut idx| {
        let entries = (0..m * n)
            .map(|_| {
                let v = (idx % base) as Symbol;
                idx /= base;
                v
            })
            .collect();
        QMatrix::new(q, m, n, entries).expect("digits are below q")
    })
}

/// Value at `q` of an integer polynomial written like `2q^2+2q-6`.
pub fn eval_polynomial(text: &str, q: i64) -> i64 {
    text.replace('-', "+-")
        .split('+')
        .filter(|t| !t.is_empty())
        .map(|term| match term.split_once('q') {
            None => term.parse::<i64>().expect("integer constant term"),
            Some((c, rest)) => {
                let coef = match c {
                    "" => 1,
                    "-" => -1,
                    c => c.parse().expect("integer coefficient"),
                };
                let power = rest
                    .strip_prefix('^')
                    .map_or(1, |p| p.parse().expect("integer power"));
                coef * q.pow(power)
            }
        })
        .sum()
}
