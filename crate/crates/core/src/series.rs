//! Truncated power series in one and two variables.
//!
//! Coefficients are ordinary (not exponential); factorial scaling happens only
//! when an EGF coefficient is extracted. The scalar type is generic: exact
//! `BigRational` is the default through the crate-root aliases, while `f64` and
//! `f32` give quick approximate evaluations of the same constructions.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

use crate::count::factorial;
use crate::error::{Error, Result};

/// A field in which series coefficients live.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f32().unwrap_or(f32::INFINITY)
    }
}

fn factorial_scalar<T: Scalar>(n: usize) -> T {
    T::from_bigint(&BigInt::from(factorial(n)))
}

/// Returns `v` as an integer if it has denominator 1.
fn exact_integer(v: &BigRational) -> Option<BigInt> {
    v.is_integer().then(|| v.to_integer())
}

/// Single-variable series `sum_{i <= order} c[i] x^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct UniSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniSeries<T> {
    pub fn zero(order: usize) -> Self {
        UniSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    /// `c x^power`, or zero if the power is beyond the order.
    pub fn monomial(c: T, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// `e^{a x}`.
    pub fn exp_linear(a: T, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = T::one();
        for i in 0..=order {
            if i > 0 {
                term = term * a.clone() / T::from_i64(i as i64);
            }
            coeffs.push(term.clone());
        }
        UniSeries { coeffs }
    }

    /// Truncates to the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        UniSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        UniSeries {
            coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    /// `s^e`, by repeated multiplication that stops once the result vanishes
    /// below the truncation order.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            if acc.valuation().is_none() {
                break;
            }
            acc = &acc * self;
        }
        acc
    }

    /// `1 / s`; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::domain(
                "reciprocal of a series with zero constant term",
            ));
        }
        let n = self.order();
        let mut r: Vec<T> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = if i == 0 { T::one() } else { T::zero() };
            for a in 1..=i {
                acc = acc - self.coeffs[a].clone() * r[i - a].clone();
            }
            r.push(acc / c0.clone());
        }
        Ok(UniSeries { coeffs: r })
    }

    /// `e^s` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp of a series with nonzero constant term"));
        }
        let n = self.order();
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        for k in 1..=n {
            power = &power * self;
            out = &out + &power.scale(&(T::one() / factorial_scalar::<T>(k)));
        }
        Ok(out)
    }

    /// `i! c[i]`.
    pub fn egf_coefficient(&self, i: usize) -> T {
        self.coeffs[i].clone() * factorial_scalar::<T>(i)
    }
}

impl UniSeries<BigRational> {
    /// `i! c[i]` as an integer; a domain error if it is not one.
    pub fn egf_count(&self, i: usize) -> Result<BigInt> {
        exact_integer(&self.egf_coefficient(i))
            .ok_or_else(|| Error::domain(format!("EGF coefficient {i} is not an integer")))
    }
}

impl<T: Scalar> Add for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn add(self, rhs: Self) -> UniSeries<T> {
        let n = self.order().min(rhs.order());
        UniSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn sub(self, rhs: Self) -> UniSeries<T> {
        let n = self.order().min(rhs.order());
        UniSeries {
            coeffs: (0..=n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Mul for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn mul(self, rhs: Self) -> UniSeries<T> {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniSeries { coeffs }
    }
}

impl<T: Scalar> Neg for &UniSeries<T> {
    type Output = UniSeries<T>;

    fn neg(self) -> UniSeries<T> {
        UniSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

/// Two-variable series `sum c[i][j] x^i y^j` with `i <= order_x`, `j <= order_y`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries<T> {
    order_x: usize,
    order_y: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> BiSeries<T> {
    pub fn zero(order_x: usize, order_y: usize) -> Self {
        BiSeries {
            order_x,
            order_y,
            coeffs: vec![T::zero(); (order_x + 1) * (order_y + 1)],
        }
    }

    pub fn constant(c: T, order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order_x: usize, order_y: usize) -> Self {
        Self::constant(T::one(), order_x, order_y)
    }

    pub fn x(order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        if order_x >= 1 {
            s.set(1, 0, T::one());
        }
        s
    }

    pub fn y(order_x: usize, order_y: usize) -> Self {
        let mut s = Self::zero(order_x, order_y);
        if order_y >= 1 {
            s.set(0, 1, T::one());
        }
        s
    }

    /// `e^{a x + b y}`.
    pub fn exp_linear(a: T, b: T, order_x: usize, order_y: usize) -> Self {
        let ex = UniSeries::exp_linear(a, order_x);
        let ey = UniSeries::exp_linear(b, order_y);
        let mut s = Self::zero(order_x, order_y);
        for i in 0..=order_x {
            for j in 0..=order_y {
                s.set(i, j, ex.coeff(i).clone() * ey.coeff(j).clone());
            }
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.order_x, self.order_y)
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.order_y + 1) + j
    }

    pub fn coeff(&self, i: usize, j: usize) -> &T {
        &self.coeffs[self.idx(i, j)]
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        let k = self.idx(i, j);
        self.coeffs[k] = v;
    }

    /// Restricts to smaller truncation orders.
    pub fn truncate(&self, order_x: usize, order_y: usize) -> Self {
        let (ox, oy) = (order_x.min(self.order_x), order_y.min(self.order_y));
        let mut s = Self::zero(ox, oy);
        for i in 0..=ox {
            for j in 0..=oy {
                s.set(i, j, self.coeff(i, j).clone());
            }
        }
        s
    }

    pub fn scale(&self, c: &T) -> Self {
        BiSeries {
            order_x: self.order_x,
            order_y: self.order_y,
            coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `1 / s`; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeff(0, 0).clone();
        if c0.is_zero() {
            return Err(Error::domain(
                "reciprocal of a series with zero constant term",
            ));
        }
        let mut r = Self::zero(self.order_x, self.order_y);
        for i in 0..=self.order_x {
            for j in 0..=self.order_y {
                let mut acc = if i == 0 && j == 0 {
                    T::one()
                } else {
                    T::zero()
                };
                for a in 0..=i {
                    for b in 0..=j {
                        if a == 0 && b == 0 {
                            continue;
                        }
                        let s = self.coeff(a, b);
                        if !s.is_zero() {
                            acc = acc - s.clone() * r.coeff(i - a, j - b).clone();
                        }
                    }
                }
                r.set(i, j, acc / c0.clone());
            }
        }
        Ok(r)
    }

    /// `e^s` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0, 0).is_zero() {
            return Err(Error::domain("exp of a series with nonzero constant term"));
        }
        let (ox, oy) = self.orders();
        let mut out = Self::one(ox, oy);
        let mut power = Self::one(ox, oy);
        // Every term of s^k has total degree >= k.
        for k in 1..=ox + oy {
            power = &power * self;
            if power.is_zero_series() {
                break;
            }
            out = &out + &power.scale(&(T::one() / factorial_scalar::<T>(k)));
        }
        Ok(out)
    }

    /// `s(x, x)`, exact through order `min(order_x, order_y)`.
    pub fn substitute_diagonal(&self) -> UniSeries<T> {
        let n = self.order_x.min(self.order_y);
        let mut u = UniSeries::zero(n);
        for d in 0..=n {
            let mut acc = T::zero();
            for i in 0..=d {
                acc = acc + self.coeff(i, d - i).clone();
            }
            u.coeffs[d] = acc;
        }
        u
    }

    /// `i! j! c[i][j]`.
    pub fn egf_coefficient(&self, i: usize, j: usize) -> T {
        self.coeff(i, j).clone() * factorial_scalar::<T>(i) * factorial_scalar::<T>(j)
    }
}

impl BiSeries<BigRational> {
    /// `i! j! c[i][j]` as an integer; a domain error if it is not one.
    pub fn egf_count(&self, i: usize, j: usize) -> Result<BigInt> {
        exact_integer(&self.egf_coefficient(i, j))
            .ok_or_else(|| Error::domain(format!("EGF coefficient ({i},{j}) is not an integer")))
    }
}

impl<T: Scalar> Add for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn add(self, rhs: Self) -> BiSeries<T> {
        let (ox, oy) = (self.order_x.min(rhs.order_x), self.order_y.min(rhs.order_y));
        let mut s = BiSeries::zero(ox, oy);
        for i in 0..=ox {
            for j in 0..=oy {
                s.set(i, j, self.coeff(i, j).clone() + rhs.coeff(i, j).clone());
            }
        }
        s
    }
}

impl<T: Scalar> Sub for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn sub(self, rhs: Self) -> BiSeries<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn neg(self) -> BiSeries<T> {
        BiSeries {
            order_x: self.order_x,
            order_y: self.order_y,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &BiSeries<T> {
    type Output = BiSeries<T>;

    fn mul(self, rhs: Self) -> BiSeries<T> {
        let (ox, oy) = (self.order_x.min(rhs.order_x), self.order_y.min(rhs.order_y));
        let mut s = BiSeries::<T>::zero(ox, oy);
        for a in 0..=ox {
            for b in 0..=oy {
                let l = self.coeff(a, b);
                if l.is_zero() {
                    continue;
                }
                for c in 0..=ox - a {
                    for d in 0..=oy - b {
                        let r = rhs.coeff(c, d);
                        if r.is_zero() {
                            continue;
                        }
                        let k = s.idx(a + c, b + d);
                        s.coeffs[k] = s.coeffs[k].clone() + l.clone() * r.clone();
                    }
                }
            }
        }
        s
    }
}

fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// `F_q(x,y) = 1 - e^x - e^y + (1 - x - y - (q-2)xy + x e^{(q-2)y} + y e^{(q-2)x}) e^{x+y}`,
/// whose EGF coefficients at `r, s >= 1` are the block counts `f_q(r,s)`.
pub fn f_q_series<T: Scalar>(q: u32, order_x: usize, order_y: usize) -> Result<BiSeries<T>> {
    if q < 2 {
        return Err(Error::domain("alphabet size must be at least 2"));
    }
    let (ox, oy) = (order_x, order_y);
    let mid: T = int(i64::from(q) - 2);
    let one = BiSeries::<T>::one(ox, oy);
    let x = BiSeries::<T>::x(ox, oy);
    let y = BiSeries::<T>::y(ox, oy);
    let ex = BiSeries::exp_linear(T::one(), T::zero(), ox, oy);
    let ey = BiSeries::exp_linear(T::zero(), T::one(), ox, oy);
    let exy = BiSeries::exp_linear(T::one(), T::one(), ox, oy);
    let e_mid_y = BiSeries::exp_linear(T::zero(), mid.clone(), ox, oy);
    let e_mid_x = BiSeries::exp_linear(mid.clone(), T::zero(), ox, oy);

    let mut inner = &(&one - &x) - &y;
    inner = &inner - &(&x * &y).scale(&mid);
    inner = &inner + &(&x * &e_mid_y);
    inner = &inner + &(&y * &e_mid_x);
    let head = &(&one - &ex) - &ey;
    Ok(&head + &(&inner * &exy))
}

/// `e^{x+y} / (1 - F_q(x,y))`: EGF coefficient `(m,n)` counts `q`-ary lonesum
/// `m x n` matrices.
pub fn lonesum_egf<T: Scalar>(q: u32, order_x: usize, order_y: usize) -> Result<BiSeries<T>> {
    let f = f_q_series::<T>(q, order_x, order_y)?;
    let denom = &BiSeries::one(order_x, order_y) - &f;
    let exy = BiSeries::exp_linear(T::one(), T::one(), order_x, order_y);
    Ok(&exy * &denom.reciprocal()?)
}

/// `e^{x+y} / (e^x + e^y - e^{x+y})`: EGF coefficient `(m,n)` is `B_m^{(-n)}`.
pub fn kaneko_egf<T: Scalar>(order_x: usize, order_y: usize) -> Result<BiSeries<T>> {
    let ex = BiSeries::exp_linear(T::one(), T::zero(), order_x, order_y);
    let ey = BiSeries::exp_linear(T::zero(), T::one(), order_x, order_y);
    let exy = BiSeries::exp_linear(T::one(), T::one(), order_x, order_y);
    let denom = &(&ex + &ey) - &exy;
    Ok(&exy * &denom.reciprocal()?)
}

/// `(1 + (q-2)x) e^{2x} / (1 - F_q(x,x))`: EGF coefficient `n` counts symmetric
/// `q`-ary lonesum `n x n` matrices.
pub fn symmetric_egf<T: Scalar>(q: u32, order: usize) -> Result<UniSeries<T>> {
    let f = f_q_series::<T>(q, order, order)?.substitute_diagonal();
    let denom = &UniSeries::one(order) - &f;
    let lead = &UniSeries::one(order) + &UniSeries::x(order).scale(&int(i64::from(q) - 2));
    let e2x = UniSeries::exp_linear(int(2), order);
    Ok(&(&lead * &e2x) * &denom.reciprocal()?)
}

/// `sum_n B_n^{(-k)}(q) x^n / n!` for a fixed column count `k`, assembled as
///
/// `sum_{l3 <= k} sum_{l1,l2,l4} l3! multinom(l1,l2,l3,l4) C(k,l3) (1-e^x)^{l1}
///  (-1+e^x-x e^x)^{l2} x^{l4} e^{(l3+l4+1)x} (-1-(q-2)x+e^{(q-2)x})^{l3}
///  (l2+l3+(q-1)l4+1)^{k-l3}`.
///
/// The three bracketed factors have valuations at least 1, 2 and 2, so only
/// tuples with `l1 + 2 l2 + 2 l3 + l4 <= order` contribute.
pub fn fixed_index_series<T: Scalar>(q: u32, k: usize, order: usize) -> Result<UniSeries<T>> {
    if q < 2 {
        return Err(Error::domain("alphabet size must be at least 2"));
    }
    let n = order;
    let one = UniSeries::<T>::one(n);
    let ex = UniSeries::<T>::exp_linear(T::one(), n);
    let x = UniSeries::<T>::x(n);
    let mid: T = int(i64::from(q) - 2);

    let a = &one - &ex;
    let b = &(&ex - &one) - &(&x * &ex);
    let d = &(&UniSeries::exp_linear(mid.clone(), n) - &one) - &x.scale(&mid);

    let powers = |s: &UniSeries<T>, max: usize| -> Vec<UniSeries<T>> {
        let mut out = vec![UniSeries::one(n)];
        for e in 1..=max {
            let next = &out[e - 1] * s;
            out.push(next);
        }
        out
    };
    let pa = powers(&a, n);
    let pb = powers(&b, n / 2);
    let pd = powers(&d, (n / 2).min(k));

    let mut total = UniSeries::<T>::zero(n);
    for l3 in 0..=k {
        if 2 * l3 > n {
            break;
        }
        if pd[l3].valuation().is_none() {
            continue;
        }
        let lead: T = T::from_bigint(&BigInt::from(factorial(l3) * crate::count::binomial(k, l3)));
        for l2 in 0..=(n - 2 * l3) / 2 {
            for l1 in 0..=n - 2 * l3 - 2 * l2 {
                for l4 in 0..=n - 2 * l3 - 2 * l2 - l1 {
                    let multinom = factorial(l1 + l2 + l3 + l4)
                        / (factorial(l1) * factorial(l2) * factorial(l3) * factorial(l4));
                    let base = BigInt::from(l2 + l3 + (q as usize - 1) * l4 + 1);
                    let weight = lead.clone()
                        * T::from_bigint(&BigInt::from(multinom))
                        * T::from_bigint(&num_traits::pow(base, k - l3));
                    let mut term = &(&pa[l1] * &pb[l2]) * &pd[l3];
                    term = &term * &UniSeries::monomial(T::one(), l4, n);
                    term = &term * &UniSeries::exp_linear(int((l3 + l4 + 1) as i64), n);
                    total = &total + &term.scale(&weight);
                }
            }
        }
    }
    Ok(total)
}
