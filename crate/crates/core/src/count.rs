//! Closed-form counts: Stirling numbers, poly-Bernoulli numbers of negative
//! index, and the q-ary lonesum and symmetric lonesum counts.
//!
//! Everything is computed in arbitrary precision.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::BigCount;

/// Rows `0..=max_n` of the Stirling triangle of the second kind.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(max_n: usize) -> Self {
        let mut table = StirlingTable {
            rows: vec![vec![BigUint::one()]],
        };
        table.grow(max_n);
        table
    }

    /// Extends the table so that `S(max_n, k)` is available.
    pub fn grow(&mut self, max_n: usize) {
        while self.rows.len() <= max_n {
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let mut row = vec![BigUint::zero(); n + 1];
            for k in 1..=n {
                let mut v = if k - 1 < prev.len() {
                    prev[k - 1].clone()
                } else {
                    BigUint::zero()
                };
                if k < prev.len() {
                    v += &prev[k] * BigUint::from(k);
                }
                row[k] = v;
            }
            self.rows.push(row);
        }
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}

/// Number of partitions of an `n`-set into `k` nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> BigCount {
    StirlingTable::new(n).get(n, k)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

/// `B_m^{(-n)}` by inclusion-exclusion over Stirling numbers:
/// `sum_l (-1)^(l+m) l! S(m,l) (l+1)^n`.
pub fn poly_bernoulli_inclusion_exclusion(m: usize, n: usize) -> BigCount {
    let table = StirlingTable::new(m);
    let mut total = BigInt::zero();
    let mut fact = BigUint::one();
    for l in 0..=m {
        if l > 0 {
            fact *= BigUint::from(l);
        }
        let term = BigInt::from(&fact * table.get(m, l) * Pow::pow(BigUint::from(l + 1), n));
        if (l + m).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative());
    total
        .to_biguint()
        .expect("poly-Bernoulli numbers of negative index are positive")
}

/// `B_m^{(-n)} = sum_l (l!)^2 S(m+1,l+1) S(n+1,l+1)`.
pub fn poly_bernoulli_stirling_pair(m: usize, n: usize) -> BigCount {
    let table = StirlingTable::new(m.max(n) + 1);
    (0..=m.min(n))
        .map(|l| {
            let f = factorial(l);
            &f * &f * table.get(m + 1, l + 1) * table.get(n + 1, l + 1)
        })
        .sum()
}

/// Binary lonesum `m x n` matrices with `j + 1` stairs.
pub fn stairs_count(m: usize, n: usize, j: usize) -> BigCount {
    let table = StirlingTable::new(m.max(n) + 1);
    let f = factorial(j);
    &f * &f * table.get(m + 1, j + 1) * table.get(n + 1, j + 1)
}

/// Iterator over `(l_0, .., l_j)` with `l_0 >= 0`, `l_i >= 1` and sum `l`,
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Option<Vec<usize>>,
    total: usize,
}

/// All elements of the composition set `S_l^j`, lexicographically.
pub fn compositions(l: usize, j: usize) -> Compositions {
    let current = if j == 0 || j > l {
        (j == 0).then(|| vec![l])
    } else {
        let mut first = vec![1; j + 1];
        first[0] = 0;
        first[j] = l - (j - 1);
        Some(first)
    };
    Compositions { current, total: l }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        // Lexicographic successor: bump the rightmost position that can grow
        // (some later part exceeds its minimum), then reset the tail.
        let len = out.len();
        let min = |i: usize| usize::from(i > 0);
        let mut next = out.clone();
        for i in (0..len.saturating_sub(1)).rev() {
            let slack: usize = (i + 1..len).map(|t| next[t] - min(t)).sum();
            if slack > 0 {
                next[i] += 1;
                let prefix: usize = next[..=i].iter().sum();
                for (t, slot) in next.iter_mut().enumerate().skip(i + 1) {
                    *slot = min(t);
                }
                let tail_min: usize = (i + 1..len).map(min).sum();
                next[len - 1] += self.total - prefix - tail_min;
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Admissible fillings of an `r x s` block with symbols `0..=q-2`:
/// `1 + (q-2)rs + r((q-1)^s - (q-2)s - 1) + s((q-1)^r - (q-2)r - 1)`.
pub fn f_q(q: u32, r: usize, s: usize) -> BigCount {
    assert!(q >= 2, "alphabet size must be at least 2");
    let mid = BigInt::from(q - 2);
    let base = BigInt::from(q - 1);
    let (rb, sb) = (BigInt::from(r), BigInt::from(s));
    let row_lines = &rb * (Pow::pow(&base, s) - &mid * &sb - 1);
    let col_lines = &sb * (Pow::pow(&base, r) - &mid * &rb - 1);
    let total: BigInt = BigInt::one() + &mid * &rb * &sb + row_lines + col_lines;
    total.to_biguint().expect("block counts are positive")
}

/// Multinomials and block counts shared by one counting pass.
struct CountCache {
    q: u32,
    factorials: Vec<BigUint>,
    blocks: HashMap<(usize, usize), BigUint>,
}

impl CountCache {
    fn new(q: u32, max: usize) -> Self {
        let mut factorials = vec![BigUint::one()];
        for i in 1..=max {
            let next = &factorials[i - 1] * BigUint::from(i);
            factorials.push(next);
        }
        CountCache {
            q,
            factorials,
            blocks: HashMap::new(),
        }
    }

    fn multinomial(&self, parts: &[usize]) -> BigUint {
        let n: usize = parts.iter().sum();
        parts.iter().fold(self.factorials[n].clone(), |acc, &p| {
            acc / &self.factorials[p]
        })
    }

    fn block(&mut self, r: usize, s: usize) -> &BigUint {
        let q = self.q;
        self.blocks.entry((r, s)).or_insert_with(|| f_q(q, r, s))
    }
}

/// `q`-ary lonesum `m x n` matrices, summed over stair shapes and block
/// contents: `1 + sum_j sum_{(m_i),(n_i)} multinom(m) multinom(n)
/// prod_i f_q(m_i, n_{j+1-i})`. Zero-sized dimensions count the empty matrix.
pub fn count_lonesum(q: u32, m: usize, n: usize) -> BigCount {
    if binomial(m + n, m) <= BigUint::from(DOUBLE_SUM_PAIR_LIMIT) {
        count_lonesum_double_sum(q, m, n)
    } else {
        count_lonesum_recursive(q, m, n)
    }
}

/// Composition pairs above which [`count_lonesum`] switches from the
/// composition double sum to the polynomial block recursion.
pub const DOUBLE_SUM_PAIR_LIMIT: u64 = 1 << 20;

/// The composition-pair double sum, term by term; it has `C(m+n, m)` terms.
pub fn count_lonesum_double_sum(q: u32, m: usize, n: usize) -> BigCount {
    assert!(q >= 2, "alphabet size must be at least 2");
    let mut cache = CountCache::new(q, m.max(n));
    let mut total = BigUint::one();
    for j in 1..=m.min(n) {
        let col_comps: Vec<(Vec<usize>, BigUint)> = compositions(n, j)
            .map(|c| {
                let w = cache.multinomial(&c);
                (c, w)
            })
            .collect();
        for a in compositions(m, j) {
            let wa = cache.multinomial(&a);
            let mut inner = BigUint::zero();
            for (b, wb) in &col_comps {
                let mut prod = wb.clone();
                for i in 1..=j {
                    prod *= cache.block(a[i], b[j + 1 - i]);
                }
                inner += prod;
            }
            total += wa * inner;
        }
    }
    total
}

/// The same count by a polynomial recursion over ordered block sequences:
/// `H(r,s) = sum C(r,r1) C(s,s1) f_q(r1,s1) (δ + H(r-r1, s-s1))`, then
/// `1 + sum C(m,m0) C(n,n0) H(m-m0, n-n0)`. Suited to large `m, n`.
pub fn count_lonesum_recursive(q: u32, m: usize, n: usize) -> BigCount {
    assert!(q >= 2, "alphabet size must be at least 2");
    let mut cache = CountCache::new(q, m.max(n));
    let binom = |cache: &CountCache, a: usize, b: usize| cache.multinomial(&[b, a - b]);
    let mut h = vec![vec![BigUint::zero(); n + 1]; m + 1];
    for r in 1..=m {
        for s in 1..=n {
            let mut acc = BigUint::zero();
            for r1 in 1..=r {
                for s1 in 1..=s {
                    let rest = if r1 == r && s1 == s {
                        BigUint::one()
                    } else {
                        h[r - r1][s - s1].clone()
                    };
                    if rest.is_zero() {
                        continue;
                    }
                    let w = binom(&cache, r, r1) * binom(&cache, s, s1);
                    acc += w * cache.block(r1, s1) * rest;
                }
            }
            h[r][s] = acc;
        }
    }
    let mut total = BigUint::one();
    for m0 in 0..m {
        for n0 in 0..n {
            total += binom(&cache, m, m0) * binom(&cache, n, n0) * &h[m - m0][n - n0];
        }
    }
    total
}

/// `q`-ary symmetric lonesum `n x n` matrices: a single ordered partition of
/// the indices, consecutive parts paired into blocks, and a trailing diagonal
/// factor `1 + (q-2)(n - sum_{i <= 2 floor(j/2)} n_i)` for an unpaired part.
pub fn count_symmetric_lonesum(q: u32, n: usize) -> BigCount {
    assert!(q >= 2, "alphabet size must be at least 2");
    let mut cache = CountCache::new(q, n);
    let mut total = BigUint::one();
    for j in 1..=n {
        for c in compositions(n, j) {
            let mut term = cache.multinomial(&c);
            for i in 1..=j / 2 {
                term *= cache.block(c[2 * i - 1], c[2 * i]);
            }
            let paired: usize = c[..=2 * (j / 2)].iter().sum();
            term *= BigUint::one() + BigUint::from(q - 2) * BigUint::from(n - paired);
            total += term;
        }
    }
    total
}

/// Converts a small count, for tests and display.
pub fn to_u128(c: &BigCount) -> Option<u128> {
    c.to_u128()
}
