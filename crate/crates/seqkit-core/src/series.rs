//! Truncated formal power series with exact rational coefficients.
//!
//! A series carries its coefficients c_0..c_N together with the truncation
//! order N. Binary operations require equal orders and yield a result that
//! is valid to the same order. All operations are pure; values are immutable
//! after construction.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial_rat, rat, Rat};

/// Truncated formal power series: coefficients of x^0 .. x^N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Series from an explicit coefficient list; the order is len - 1.
    /// Panics on an empty list.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    /// Series from polynomial coefficients, zero-padded or truncated to
    /// the requested order.
    pub fn from_poly(poly: &[Rat], order: usize) -> Self {
        let mut coeffs: Vec<Rat> = poly.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rat::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The identity series x. Panics if order < 1.
    pub fn x(order: usize) -> Self {
        assert!(order >= 1);
        let mut s = Self::zero(order);
        s.coeffs[1] = Rat::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^n; zero beyond the truncation order is *not*
    /// implied, so indexing past N panics.
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Same series re-truncated (or zero-padded, which is only valid for
    /// polynomials) to the given order.
    pub fn truncated(&self, order: usize) -> Self {
        Self::from_poly(&self.coeffs, order)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(PowerSeries::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        PowerSeries::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Cauchy product, schoolbook convolution. Exactness first; any faster
    /// kernel would have to be bit-identical to this one.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(PowerSeries::new(out))
    }

    /// k-th power at the same truncation order.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = PowerSeries::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self).expect("orders match");
        }
        acc
    }

    /// Multiplicative inverse: solves c_0 r_0 = 1, sum_j c_j r_{n-j} = 0
    /// column by column.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let c0_inv = self.coeffs[0].recip();
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = c0_inv.clone();
        for m in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[m - j];
                }
            }
            out[m] = -acc * &c0_inv;
        }
        Ok(PowerSeries::new(out))
    }

    /// Composition g(f(x)) = sum_k g_k f(x)^k, requiring f(0) = 0 so the
    /// sum truncates.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let n = self.order();
        let mut out = PowerSeries::zero(n);
        // Horner evaluation: out = g_N; out = out*f + g_k.
        for g_k in self.coeffs.iter().rev() {
            out = out.mul(inner)?;
            out.coeffs[0] += g_k;
        }
        Ok(out)
    }

    /// Formal derivative; drops one order (an order-0 input stays order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return PowerSeries::zero(0);
        }
        let out: Vec<Rat> = (1..=self.order())
            .map(|n| &self.coeffs[n] * rat(n as i64))
            .collect();
        PowerSeries::new(out)
    }

    /// Divides by x: requires c_0 = 0, drops one order.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        if self.order() == 0 {
            return Ok(PowerSeries::zero(0));
        }
        Ok(PowerSeries::new(self.coeffs[1..].to_vec()))
    }

    /// Multiplies by x, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries::new(coeffs)
    }

    /// Compositional reversion: the series B with B(f(x)) = x, found by the
    /// triangular solve of [x^n] sum_k B_k f^k = [n = 1]. Requires f(0) = 0
    /// and f'(0) != 0.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if n < 1 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NoReversion);
        }
        // Powers f^1 .. f^N; f^k has valuation k with [x^k] f^k = f_1^k.
        let mut powers: Vec<PowerSeries> = Vec::with_capacity(n + 1);
        powers.push(self.clone());
        for _ in 1..n {
            let next = powers.last().unwrap().mul(self)?;
            powers.push(next);
        }
        let mut b = vec![Rat::zero(); n + 1];
        for m in 1..=n {
            let target = if m == 1 { Rat::one() } else { Rat::zero() };
            let mut acc = Rat::zero();
            for k in 1..m {
                if !b[k].is_zero() {
                    acc += &b[k] * powers[k - 1].coeff(m);
                }
            }
            b[m] = (target - acc) / powers[m - 1].coeff(m);
        }
        Ok(PowerSeries::new(b))
    }
}

/// Expansion of (1 + c x)^alpha with exact rational binomial coefficients:
/// [x^n] = binom(alpha, n) c^n.
pub fn binomial_series(alpha: &Rat, c: &Rat, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c_pow = Rat::one();
    for n in 0..=order {
        coeffs.push(binomial_rat(alpha, n) * &c_pow);
        c_pow *= c;
    }
    PowerSeries::new(coeffs)
}

/// The series c0 / (1 - c x) (geometric).
pub fn geometric_series(c0: &Rat, c: &Rat, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut acc = c0.clone();
    for _ in 0..=order {
        coeffs.push(acc.clone());
        acc *= c;
    }
    PowerSeries::new(coeffs)
}

/// The series s x / (1 - c x), valuation 1.
pub fn x_over_one_minus(s: &Rat, c: &Rat, order: usize) -> PowerSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    let mut acc = s.clone();
    for item in coeffs.iter_mut().skip(1) {
        *item = acc.clone();
        acc *= c;
    }
    PowerSeries::new(coeffs)
}
