//! JSON payloads shared by library callers and the command-line tool:
//! `{"verdict", "certificate", "count", "elapsed_ms"}`, with counts as
//! decimal strings so arbitrary precision survives JSON.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bijection::{matrix_to_permutation, permutation_to_matrix, BoundedPermutation};
use crate::count::{count_lonesum, count_symmetric_lonesum, stairs_count};
use crate::error::{Error, Result};
use crate::matrix::{MarginProfile, QMatrix, Symbol};
use crate::oracle::{oracle_report, Criterion};
use crate::series::{fixed_index_series, lonesum_egf, symmetric_egf};
use crate::strong::{is_strong_lonesum, reconstruct_strong, Reconstruction, StrongVerdict};
use crate::weak::{find_cycle, is_weak_lonesum, small_forbidden_scan, WeakVerdict};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Lonesum,
    NotLonesum,
    BudgetExceeded,
    Unique,
    Ambiguous,
    Infeasible,
    Ok,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Payload {
    pub verdict: Verdict,
    pub certificate: Option<Value>,
    pub count: Option<String>,
    pub elapsed_ms: f64,
}

impl Payload {
    fn timed(
        start: Instant,
        verdict: Verdict,
        certificate: Option<Value>,
        count: Option<String>,
    ) -> Self {
        Payload {
            verdict,
            certificate,
            count,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("payloads serialize")
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

/// Strong lonesum check; the certificate is a forbidden `2 x 2` or, for a
/// lonesum matrix, the standard-form permutations.
pub fn check_strong(m: &QMatrix) -> Payload {
    let start = Instant::now();
    match is_strong_lonesum(m) {
        StrongVerdict::Lonesum => {
            let form = m
                .standard_form()
                .expect("lonesum matrices have a standard form");
            let cert = json!({"row_perm": form.row_perm, "col_perm": form.col_perm});
            Payload::timed(start, Verdict::Lonesum, Some(cert), None)
        }
        StrongVerdict::Witness(w) => {
            Payload::timed(start, Verdict::NotLonesum, Some(to_value(&w)), None)
        }
    }
}

fn weak_payload(start: Instant, verdict: WeakVerdict, extra: Option<(&str, Value)>) -> Payload {
    let mut cert = to_value(&verdict);
    let obj = cert.as_object_mut().expect("verdicts serialize to objects");
    obj.remove("verdict");
    if let Some((key, value)) = extra {
        obj.insert(key.to_string(), value);
    }
    let v = match verdict {
        WeakVerdict::Unique { .. } => Verdict::Lonesum,
        WeakVerdict::Witness { .. } => Verdict::NotLonesum,
        WeakVerdict::BudgetExceeded { .. } => Verdict::BudgetExceeded,
    };
    Payload::timed(start, v, Some(cert), None)
}

/// Weak lonesum check; the certificate carries the node count and any
/// alternative matrix.
pub fn check_weak(m: &QMatrix, budget: u64) -> Payload {
    let start = Instant::now();
    weak_payload(start, is_weak_lonesum(m, budget), None)
}

/// Weak lonesum check plus a shortest alternating cycle and the first small
/// non-weak-lonesum submatrix, when these exist.
pub fn weak_search(m: &QMatrix, budget: u64) -> Payload {
    let start = Instant::now();
    let verdict = is_weak_lonesum(m, budget);
    let detail = json!({
        "cycle": find_cycle(m).map(|c| to_value(&c.path)),
        "small_forbidden": small_forbidden_scan(m).map(|h| to_value(&h)),
    });
    weak_payload(start, verdict, Some(("search", detail)))
}

pub fn reconstruct(q: Symbol, row_sums: Vec<u64>, col_sums: Vec<u64>) -> Result<Payload> {
    let start = Instant::now();
    let (m, n) = (row_sums.len(), col_sums.len());
    let margins = MarginProfile::new(row_sums, col_sums);
    Ok(match reconstruct_strong(q, &margins, m, n)? {
        Reconstruction::Unique(x) => {
            Payload::timed(start, Verdict::Unique, Some(to_value(&x)), None)
        }
        Reconstruction::Ambiguous => Payload::timed(start, Verdict::Ambiguous, None, None),
        Reconstruction::Infeasible => Payload::timed(start, Verdict::Infeasible, None, None),
    })
}

/// Which count to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountQuery {
    Lonesum {
        m: usize,
        n: usize,
    },
    Symmetric {
        n: usize,
    },
    /// Binary lonesum `m x n` matrices with `j + 1` stairs.
    Stairs {
        m: usize,
        n: usize,
        j: usize,
    },
}

pub fn count(q: u32, query: CountQuery) -> Result<Payload> {
    let start = Instant::now();
    if q < 2 {
        return Err(Error::domain("alphabet size must be at least 2"));
    }
    let value = match query {
        CountQuery::Lonesum { m, n } => count_lonesum(q, m, n),
        CountQuery::Symmetric { n } => count_symmetric_lonesum(q, n),
        CountQuery::Stairs { m, n, j } => {
            if q != 2 {
                return Err(Error::domain(
                    "stair counts are defined for binary matrices",
                ));
            }
            stairs_count(m, n, j)
        }
    };
    Ok(Payload::timed(
        start,
        Verdict::Ok,
        None,
        Some(value.to_string()),
    ))
}

/// Which generating function to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesQuery {
    /// `e^{x+y} / (1 - F_q)`, all `(m, n)` up to the order.
    Lonesum,
    /// The symmetric series; rows `(n, n, value)`.
    Symmetric,
    /// The fixed-index series for column count `k`; rows `(n, k, value)`.
    FixedIndex(usize),
}

/// EGF coefficients as `(m, n, value)` rows.
pub fn series_table(
    q: u32,
    order: usize,
    query: SeriesQuery,
) -> Result<Vec<(usize, usize, BigInt)>> {
    let mut rows = Vec::new();
    match query {
        SeriesQuery::Lonesum => {
            let s = lonesum_egf::<Rational>(q, order, order)?;
            for m in 0..=order {
                for n in 0..=order {
                    rows.push((m, n, s.egf_count(m, n)?));
                }
            }
        }
        SeriesQuery::Symmetric => {
            let s = symmetric_egf::<Rational>(q, order)?;
            for n in 0..=order {
                rows.push((n, n, s.egf_count(n)?));
            }
        }
        SeriesQuery::FixedIndex(k) => {
            let s = fixed_index_series::<Rational>(q, k, order)?;
            for n in 0..=order {
                rows.push((n, k, s.egf_count(n)?));
            }
        }
    }
    Ok(rows)
}

pub fn series(q: u32, order: usize, query: SeriesQuery) -> Result<Payload> {
    let start = Instant::now();
    let rows = series_table(q, order, query)?;
    let coefficients: Vec<Value> = rows
        .iter()
        .map(|(m, n, v)| json!({"m": m, "n": n, "value": v.to_string()}))
        .collect();
    Ok(Payload::timed(
        start,
        Verdict::Ok,
        Some(json!({ "coefficients": coefficients })),
        None,
    ))
}

pub fn to_permutation(m: &QMatrix) -> Result<Payload> {
    let start = Instant::now();
    let p = matrix_to_permutation(m)?;
    let cert = json!({"m": m.rows(), "n": m.cols(), "permutation": p.images()});
    Ok(Payload::timed(start, Verdict::Ok, Some(cert), None))
}

pub fn from_permutation(p: &BoundedPermutation) -> Result<Payload> {
    let start = Instant::now();
    let m = permutation_to_matrix(p)?;
    Ok(Payload::timed(start, Verdict::Ok, Some(to_value(&m)), None))
}

pub fn oracle(q: Symbol, m: usize, n: usize, criterion: Criterion) -> Result<Payload> {
    let start = Instant::now();
    let report = oracle_report(q, m, n, criterion)?;
    let count = report.lonesum.to_string();
    Ok(Payload::timed(
        start,
        Verdict::Ok,
        Some(to_value(&report)),
        Some(count),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(q: Symbol, rows: &[&[Symbol]]) -> QMatrix {
        QMatrix::from_rows(q, rows).unwrap()
    }

    #[test]
    fn check_payloads() {
        let p = check_strong(&mat(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(p.verdict, Verdict::NotLonesum);
        assert_eq!(p.certificate.unwrap()["entries"], json!([[1, 0], [0, 1]]));
        assert_eq!(
            check_strong(&mat(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 0]])).verdict,
            Verdict::Lonesum
        );

        let w = check_weak(&mat(3, &[&[0, 1, 0], &[1, 2, 1], &[0, 1, 1]]), 1000);
        assert_eq!(w.verdict, Verdict::Lonesum);
        assert!(w.certificate.unwrap()["nodes"].as_u64().unwrap() > 0);
        assert_eq!(
            check_weak(&mat(2, &[&[1, 0], &[0, 1]]), 1).verdict,
            Verdict::BudgetExceeded
        );
    }

    #[test]
    fn json_shape() {
        let p = count(3, CountQuery::Lonesum { m: 2, n: 2 }).unwrap();
        let v: Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(v["verdict"], "ok");
        assert_eq!(v["count"], "50");
        assert!(v["certificate"].is_null());
        assert!(v["elapsed_ms"].is_number());
        assert!(count(3, CountQuery::Stairs { m: 2, n: 2, j: 1 }).is_err());
    }

    #[test]
    fn reconstruct_payloads() {
        let p = reconstruct(2, vec![2, 1, 3], vec![3, 2, 1]).unwrap();
        assert_eq!(p.verdict, Verdict::Unique);
        assert_eq!(
            p.certificate.unwrap()["rows"],
            json!([[1, 1, 0], [1, 0, 0], [1, 1, 1]])
        );
        assert_eq!(
            reconstruct(3, vec![1, 4, 2], vec![1, 4, 2])
                .unwrap()
                .verdict,
            Verdict::Ambiguous
        );
        assert_eq!(
            reconstruct(2, vec![2], vec![0, 0]).unwrap().verdict,
            Verdict::Infeasible
        );
    }

    #[test]
    fn series_rows() {
        let rows = series_table(2, 5, SeriesQuery::Symmetric).unwrap();
        let values: Vec<String> = rows.iter().map(|r| r.2.to_string()).collect();
        assert_eq!(values, ["1", "2", "6", "26", "150", "1082"]);
        let fixed = series_table(3, 4, SeriesQuery::FixedIndex(2)).unwrap();
        assert_eq!(fixed[2], (2, 2, BigInt::from(50)));
    }

    #[test]
    fn permutation_payloads() {
        let m = mat(2, &[&[1, 1], &[1, 0]]);
        let p = to_permutation(&m).unwrap();
        let images: Vec<usize> =
            serde_json::from_value(p.certificate.unwrap()["permutation"].clone()).unwrap();
        let back = from_permutation(&BoundedPermutation::new(2, 2, images).unwrap()).unwrap();
        assert_eq!(back.certificate.unwrap(), to_value(&m));
    }
}
