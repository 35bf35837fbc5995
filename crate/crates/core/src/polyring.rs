//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so two polynomials are equal exactly when their coefficient vectors
//! are. Products switch from schoolbook to Karatsuba once both operands have
//! at least [`KARATSUBA_THRESHOLD`] coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Operand length (in coefficients) from which [`IntPoly::mul`] recurses with
/// Karatsuba instead of the schoolbook product.
pub const KARATSUBA_THRESHOLD: usize = 48;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `t + c`.
    pub fn linear(c: i64) -> Self {
        Self::from_i64s(&[c, 1])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients in ascending order; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// In-place `self *= t + c`.
    pub fn mul_linear_assign(&mut self, c: i64) {
        if self.is_zero() {
            return;
        }
        self.coeffs.push(BigInt::zero());
        for i in (1..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            scale_assign(&mut hi[0], c);
            hi[0] += &lo[i - 1];
        }
        scale_assign(&mut self.coeffs[0], c);
        trim(&mut self.coeffs);
    }

    /// In-place `self = other - self`.
    pub fn rsub_assign(&mut self, other: &IntPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (i, c) in self.coeffs.iter_mut().enumerate() {
            *c = -std::mem::take(c);
            if let Some(o) = other.coeffs.get(i) {
                *c += o;
            }
        }
        trim(&mut self.coeffs);
    }

    /// Exact product, dispatching on operand size.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(karatsuba(&self.coeffs, &other.coeffs))
    }

    /// Quadratic reference product.
    pub fn mul_schoolbook(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(schoolbook(&self.coeffs, &other.coeffs))
    }

    /// Karatsuba product that recurses all the way down to operands of
    /// length one; only useful to exercise the recursive path in tests.
    pub fn mul_karatsuba_full(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(karatsuba_with(&self.coeffs, &other.coeffs, 2))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Product of all factors, combined pairwise so that operands stay of
    /// similar size.
    pub fn product<I: IntoIterator<Item = IntPoly>>(factors: I) -> IntPoly {
        let mut layer: Vec<IntPoly> = factors.into_iter().collect();
        if layer.is_empty() {
            return IntPoly::one();
        }
        while layer.len() > 1 {
            let mut next = Vec::with_capacity(layer.len().div_ceil(2));
            let mut it = layer.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.mul(&b)),
                    None => next.push(a),
                }
            }
            layer = next;
        }
        layer.pop().unwrap()
    }

    /// Returns `q` with `self = d * q`, failing if the remainder is nonzero
    /// or a quotient coefficient would not be an integer.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly> {
        let dc = &d.coeffs;
        let Some(dd) = d.degree() else {
            return Err(Error::NonExactDivision);
        };
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let pd = self.degree().unwrap();
        if pd < dd {
            return Err(Error::NonExactDivision);
        }

        // Strip the power of t shared by the divisor first.
        let low = dc.iter().take_while(|c| c.is_zero()).count();
        if self.coeffs[..low].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        let mut rem: Vec<BigInt> = self.coeffs[low..].to_vec();
        let div = &dc[low..];
        let dd = dd - low;
        let lead = &div[dd];
        let lead_unit = lead.is_one() || (-lead).is_one();

        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = std::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let q = if lead_unit {
                if lead.is_one() {
                    top
                } else {
                    -top
                }
            } else {
                if !(&top % lead).is_zero() {
                    return Err(Error::NonExactDivision);
                }
                top / lead
            };
            for (j, dj) in div[..dd].iter().enumerate() {
                sub_mul(&mut rem[i + j], &q, dj);
            }
            quot[i] = q;
        }
        if rem[..dd].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(IntPoly::from_coeffs(quot))
    }
}

fn scale_assign(x: &mut BigInt, c: i64) {
    match c {
        1 => {}
        -1 => *x = -std::mem::take(x),
        0 => *x = BigInt::zero(),
        _ => *x *= c,
    }
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// `acc += a * b`, avoiding the multiplication for the coefficients that
/// dominate chromatic arithmetic.
#[inline]
fn add_mul(acc: &mut BigInt, a: &BigInt, b: &BigInt) {
    if b.is_zero() || a.is_zero() {
        return;
    }
    if b.is_one() {
        *acc += a;
    } else if b.is_negative() && b.magnitude().is_one() {
        *acc -= a;
    } else {
        *acc += a * b;
    }
}

/// `acc -= a * b`.
#[inline]
fn sub_mul(acc: &mut BigInt, a: &BigInt, b: &BigInt) {
    if b.is_zero() || a.is_zero() {
        return;
    }
    if b.is_one() {
        *acc -= a;
    } else if b.is_negative() && b.magnitude().is_one() {
        *acc += a;
    } else {
        *acc -= a * b;
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (j, s) in short.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        for (i, l) in long.iter().enumerate() {
            add_mul(&mut out[i + j], l, s);
        }
    }
    out
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    karatsuba_with(a, b, KARATSUBA_THRESHOLD)
}

fn karatsuba_with(a: &[BigInt], b: &[BigInt], threshold: usize) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() < threshold || b.len() < threshold {
        return schoolbook(a, b);
    }
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];

    if long.len() != short.len() {
        // Unbalanced: slice the longer operand into pieces of the shorter's size.
        for (k, chunk) in long.chunks(short.len()).enumerate() {
            let part = karatsuba_with(chunk, short, threshold);
            accumulate(&mut out, k * short.len(), part);
        }
        return out;
    }

    let m = long.len() / 2;
    let (a0, a1) = long.split_at(m);
    let (b0, b1) = short.split_at(m);
    let low = karatsuba_with(a0, b0, threshold);
    let high = karatsuba_with(a1, b1, threshold);
    let mut mid = karatsuba_with(&sum_slices(a0, a1), &sum_slices(b0, b1), threshold);
    for (i, c) in low.iter().enumerate() {
        mid[i] -= c;
    }
    for (i, c) in high.iter().enumerate() {
        mid[i] -= c;
    }
    accumulate(&mut out, 0, low);
    accumulate(&mut out, m, mid);
    accumulate(&mut out, 2 * m, high);
    out
}

fn sum_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn accumulate(out: &mut [BigInt], offset: usize, part: Vec<BigInt>) {
    for (i, c) in part.into_iter().enumerate() {
        if !c.is_zero() {
            out[offset + i] += c;
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        trim(&mut self.coeffs);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= r;
        }
        trim(&mut self.coeffs);
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidSize { min: 1, got: n });
    }
    Ok(())
}

/// `t(t-1)...(t-n+1)`, the chromatic polynomial of the complete graph.
pub fn chromatic_complete(n: usize) -> Result<IntPoly> {
    check_size(n)?;
    Ok(falling_factorial(n))
}

/// `t(t-1)...(t-n+1)`; `1` for `n = 0`.
pub fn falling_factorial(n: usize) -> IntPoly {
    IntPoly::product((0..n).map(|i| IntPoly::linear(-(i as i64))))
}

/// `(t-1)^n + (-1)^n (t-1)`. Valid down to `n = 1` (a loop) and `n = 2` (a
/// parallel pair).
pub fn chromatic_cycle(n: usize) -> Result<IntPoly> {
    check_size(n)?;
    let tm1 = IntPoly::linear(-1);
    let pow = tm1.pow(n as u32);
    Ok(if n.is_multiple_of(2) { &pow + &tm1 } else { &pow - &tm1 })
}

/// `t(t-1)^(n-1)`, shared by every tree on `n` vertices.
pub fn chromatic_tree(n: usize) -> Result<IntPoly> {
    check_size(n)?;
    Ok(IntPoly::t().mul(&IntPoly::linear(-1).pow(n as u32 - 1)))
}
