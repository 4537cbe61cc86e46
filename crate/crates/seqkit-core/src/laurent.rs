//! Finite-window Laurent series: a valuation (possibly negative) plus
//! coefficients for the exponents valuation..=order.
//!
//! Needed for the negative columns f(x)^k, k < 0, of recursive matrices,
//! where f^k is the multiplicative inverse of f^(-k) in the ring of formal
//! Laurent series.

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::series::PowerSeries;

/// Laurent series on the exponent window valuation..=order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<Rat>,
}

impl LaurentSeries {
    /// Series with the given valuation and coefficients for exponents
    /// valuation, valuation+1, ... Leading zeros are trimmed so that the
    /// first stored coefficient is nonzero unless the window is all zero.
    pub fn new(valuation: i64, coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        let mut s = LaurentSeries { valuation, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs[0].is_zero() {
            self.coeffs.remove(0);
            self.valuation += 1;
        }
    }

    pub fn from_power_series(p: &PowerSeries) -> Self {
        LaurentSeries::new(0, p.coeffs().to_vec())
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Largest exponent stored in the window.
    pub fn order(&self) -> i64 {
        self.valuation + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of x^e. Exponents below the valuation are zero;
    /// exponents above the window are unknown and panic.
    pub fn coeff(&self, e: i64) -> Rat {
        if e < self.valuation {
            return Rat::zero();
        }
        assert!(e <= self.order(), "exponent {e} beyond window order {}", self.order());
        self.coeffs[(e - self.valuation) as usize].clone()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Product on the largest exponent window where it is exact:
    /// up to min(order_a + val_b, order_b + val_a).
    pub fn mul(&self, other: &Self) -> Self {
        let val = self.valuation + other.valuation;
        let order = (self.order() + other.valuation).min(other.order() + self.valuation);
        let len = (order - val + 1) as usize;
        let mut out = vec![Rat::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentSeries::new(val, out)
    }
}

/// Integer power f^k in the Laurent ring, for f of valuation 1
/// (f(0) = 0, f'(0) != 0). The result has valuation k; negative k uses the
/// multiplicative inverse of the unit series f/x.
pub fn laurent_int_pow(f: &PowerSeries, k: i64) -> Result<LaurentSeries> {
    if f.order() < 1 || !f.coeff(0).is_zero() || f.coeff(1).is_zero() {
        return Err(Error::NotValuationOne);
    }
    let u = f.shift_down()?; // unit series f/x, order N-1
    let base = if k >= 0 { u } else { u.inverse()? };
    let upow = base.pow(k.unsigned_abs() as usize);
    Ok(LaurentSeries::new(k, upow.coeffs().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ps(v: &[i64]) -> PowerSeries {
        PowerSeries::new(v.iter().map(|&n| rat(n)).collect())
    }

    #[test]
    fn pow_of_x() {
        let x = PowerSeries::x(4);
        let inv = laurent_int_pow(&x, -1).unwrap();
        assert_eq!(inv.valuation(), -1);
        assert_eq!(inv.coeff(-1), rat(1));
        assert!(inv.coeff(0).is_zero());
        let zero_pow = laurent_int_pow(&x, 0).unwrap();
        assert_eq!(zero_pow.valuation(), 0);
        assert_eq!(zero_pow.coeff(0), rat(1));
    }

    #[test]
    fn inverse_of_geometric_ratio() {
        // f = x/(1-x), f^-1 = (1-x)/x = x^-1 - 1
        let f = ps(&[0, 1, 1, 1, 1]);
        let inv = laurent_int_pow(&f, -1).unwrap();
        assert_eq!(inv.valuation(), -1);
        assert_eq!(inv.coeff(-1), rat(1));
        assert_eq!(inv.coeff(0), rat(-1));
        assert!(inv.coeff(1).is_zero());
        assert!(inv.coeff(2).is_zero());
    }

    #[test]
    fn positive_power_matches_series_mul() {
        let f = ps(&[0, 1, -2, 3, 1, 5]);
        let cube = laurent_int_pow(&f, 3).unwrap();
        let direct = f.pow(3);
        assert_eq!(cube.valuation(), 3);
        for e in 3..=5 {
            assert_eq!(cube.coeff(e), *direct.coeff(e as usize));
        }
    }

    #[test]
    fn group_law_window() {
        let f = ps(&[0, 2, 1, -1, 4, 2, 7, 1, 3]);
        let a = laurent_int_pow(&f, 2).unwrap();
        let b = laurent_int_pow(&f, -3).unwrap();
        let c = laurent_int_pow(&f, -1).unwrap();
        let prod = a.mul(&b);
        for e in prod.valuation()..=prod.order().min(c.order()) {
            assert_eq!(prod.coeff(e), c.coeff(e));
        }
        // f^k * f^-k = 1 on the window
        let unit = a.mul(&laurent_int_pow(&f, -2).unwrap());
        assert_eq!(unit.coeff(0), rat(1));
        for e in 1..=unit.order() {
            assert!(unit.coeff(e).is_zero());
        }
    }

    #[test]
    fn rejects_wrong_valuation() {
        assert!(laurent_int_pow(&ps(&[1, 1]), -1).is_err());
        assert!(laurent_int_pow(&ps(&[0, 0, 1]), 2).is_err());
    }

    #[test]
    fn product_valuations_add() {
        let a = LaurentSeries::new(-2, vec![rat(1), rat(3)]);
        let b = LaurentSeries::new(1, vec![rat(2), rat(5)]);
        let p = a.mul(&b);
        assert_eq!(p.valuation(), -1);
        assert_eq!(p.coeff(-1), rat(2));
        assert_eq!(p.coeff(0), rat(11));
    }
}
