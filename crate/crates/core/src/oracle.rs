//! Brute-force reference counts: enumerate every matrix of a shape, group by
//! margins or by structure profile, and count the singleton classes.
//!
//! Enumeration refuses shapes with more than [`ENUMERATION_LIMIT`] matrices.

use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{QMatrix, Symbol};
use crate::strong::strongly_lonesum;
use crate::weak::{is_weak_lonesum, DEFAULT_BUDGET};
use crate::BigCount;

/// Largest number of matrices an enumeration may visit.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

/// Mismatching matrices kept in a report.
const MAX_REPORTED_MISMATCHES: usize = 100;

/// Which notion of uniqueness a report checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Unique given row and column sums.
    Strong,
    /// Unique given row and column structure vectors.
    Weak,
    /// Symmetric matrices that are strongly lonesum.
    Symmetric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub q: Symbol,
    pub m: usize,
    pub n: usize,
    pub criterion: Criterion,
    /// Matrices enumerated.
    pub total: u64,
    /// Matrices alone in their class (for `Symmetric`: symmetric matrices
    /// accepted by the strong criterion).
    pub lonesum: u64,
    /// Matrices on which the class count and the library criterion disagree;
    /// `None` when no cross-check applies.
    pub mismatches: Option<Vec<QMatrix>>,
}

fn space_size(q: Symbol, cells: usize) -> Result<u64> {
    let required = (q as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if required > ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded {
            what: "matrix enumeration",
            required,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(required as u64)
}

fn check_shape(q: Symbol, m: usize, n: usize) -> Result<u64> {
    if q < 2 || m == 0 || n == 0 {
        return Err(Error::domain(
            "enumeration needs q >= 2 and a nonempty shape",
        ));
    }
    space_size(q, m * n)
}

/// The matrix whose row-major entries are the base-`q` digits of `index`,
/// least significant first.
fn decode(q: Symbol, m: usize, n: usize, mut index: u64) -> QMatrix {
    let base = u64::from(q);
    let entries = (0..m * n)
        .map(|_| {
            let v = (index % base) as Symbol;
            index /= base;
            v
        })
        .collect();
    QMatrix::new(q, m, n, entries).expect("digits are below q")
}

fn margin_key(m: &QMatrix) -> Vec<u64> {
    let p = m.margins();
    p.row_sums.into_iter().chain(p.col_sums).collect()
}

fn profile_key(m: &QMatrix) -> Vec<u32> {
    let p = m.structure_profile();
    p.row_structs
        .into_iter()
        .chain(p.col_structs)
        .flatten()
        .collect()
}

/// Class sizes of all `q^(mn)` matrices under `key`, merged from parallel workers.
fn class_sizes<K, F>(q: Symbol, m: usize, n: usize, total: u64, key: F) -> HashMap<K, u64>
where
    K: Hash + Eq + Send,
    F: Fn(&QMatrix) -> K + Sync,
{
    (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut acc, idx| {
            *acc.entry(key(&decode(q, m, n, idx))).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

fn mismatching(
    q: Symbol,
    m: usize,
    n: usize,
    total: u64,
    differs: impl Fn(&QMatrix) -> bool + Sync,
) -> Vec<u64> {
    (0..total)
        .into_par_iter()
        .filter(|&idx| differs(&decode(q, m, n, idx)))
        .collect()
}

fn singleton_count<K>(sizes: &HashMap<K, u64>) -> u64 {
    sizes.values().filter(|&&s| s == 1).count() as u64
}

/// Matrices alone in their margin class.
pub fn oracle_count_strong(q: Symbol, m: usize, n: usize) -> Result<BigCount> {
    let total = check_shape(q, m, n)?;
    Ok(BigCount::from(singleton_count(&class_sizes(
        q, m, n, total, margin_key,
    ))))
}

/// Matrices alone in their structure-profile class.
pub fn oracle_count_weak(q: Symbol, m: usize, n: usize) -> Result<BigCount> {
    let total = check_shape(q, m, n)?;
    Ok(BigCount::from(singleton_count(&class_sizes(
        q,
        m,
        n,
        total,
        profile_key,
    ))))
}

/// The symmetric matrix whose upper triangle (row-major, diagonal included)
/// holds the base-`q` digits of `index`.
fn decode_symmetric(q: Symbol, n: usize, mut index: u64) -> QMatrix {
    let base = u64::from(q);
    let mut entries = vec![0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = (index % base) as Symbol;
            index /= base;
            entries[i * n + j] = v;
            entries[j * n + i] = v;
        }
    }
    QMatrix::new(q, n, n, entries).expect("digits are below q")
}

/// Symmetric `n x n` matrices accepted by the strong lonesum criterion.
pub fn oracle_count_symmetric(q: Symbol, n: usize) -> Result<BigCount> {
    Ok(BigCount::from(symmetric_report(q, n)?.lonesum))
}

pub fn symmetric_report(q: Symbol, n: usize) -> Result<EnumerationReport> {
    if q < 2 || n == 0 {
        return Err(Error::domain("enumeration needs q >= 2 and n >= 1"));
    }
    let total = space_size(q, n * (n + 1) / 2)?;
    let lonesum = (0..total)
        .into_par_iter()
        .filter(|&idx| strongly_lonesum(&decode_symmetric(q, n, idx)))
        .count() as u64;
    Ok(EnumerationReport {
        q,
        m: n,
        n,
        criterion: Criterion::Symmetric,
        total,
        lonesum,
        mismatches: None,
    })
}

/// Counts singleton classes and lists the matrices on which class membership
/// and the library's decision procedure disagree.
pub fn oracle_report(
    q: Symbol,
    m: usize,
    n: usize,
    criterion: Criterion,
) -> Result<EnumerationReport> {
    if criterion == Criterion::Symmetric {
        if m != n {
            return Err(Error::domain("symmetric enumeration needs a square shape"));
        }
        return symmetric_report(q, n);
    }
    let total = check_shape(q, m, n)?;
    let (lonesum, mut mismatches) = match criterion {
        Criterion::Strong => {
            let sizes = class_sizes(q, m, n, total, margin_key);
            let bad = mismatching(q, m, n, total, |x| {
                (sizes[&margin_key(x)] == 1) != strongly_lonesum(x)
            });
            (singleton_count(&sizes), bad)
        }
        _ => {
            let sizes = class_sizes(q, m, n, total, profile_key);
            let bad = mismatching(q, m, n, total, |x| {
                (sizes[&profile_key(x)] == 1) != is_weak_lonesum(x, DEFAULT_BUDGET).is_unique()
            });
            (singleton_count(&sizes), bad)
        }
    };
    mismatches.sort_unstable();
    Ok(EnumerationReport {
        q,
        m,
        n,
        criterion,
        total,
        lonesum,
        mismatches: Some(
            mismatches
                .into_iter()
                .take(MAX_REPORTED_MISMATCHES)
                .map(|idx| decode(q, m, n, idx))
                .collect(),
        ),
    })
}

fn class_of<K: PartialEq + Sync>(
    m: &QMatrix,
    key: impl Fn(&QMatrix) -> K + Sync,
) -> Result<Vec<QMatrix>> {
    let total = check_shape(m.q(), m.rows(), m.cols())?;
    let target = key(m);
    let (q, r, c) = (m.q(), m.rows(), m.cols());
    let mut class: Vec<(u64, QMatrix)> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let x = decode(q, r, c, idx);
            (key(&x) == target).then_some((idx, x))
        })
        .collect();
    class.sort_unstable_by_key(|(idx, _)| *idx);
    Ok(class.into_iter().map(|(_, x)| x).collect())
}

/// All matrices with the same margins as `m`, including `m`.
pub fn margin_class(m: &QMatrix) -> Result<Vec<QMatrix>> {
    class_of(m, margin_key)
}

/// All matrices with the same structure profile as `m`, including `m`.
pub fn profile_class(m: &QMatrix) -> Result<Vec<QMatrix>> {
    class_of(m, profile_key)
}
