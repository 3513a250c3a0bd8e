//! Power series in a formal parameter `eps`, truncated at a declared order,
//! with Laurent polynomial coefficients.
//!
//! Invariants: `coeffs.len() == order + 1`, all coefficients share one
//! variable set, and arithmetic truncates consistently — mixed orders
//! truncate to the smaller one.

use std::sync::Arc;

use super::laurent::LaurentPoly;
use super::matrix::DetElem;
use super::rational::{factorial, pow_signed, Rational};
use super::varset::VarSet;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl EpsSeries {
    pub fn zero(vars: &Arc<VarSet>, order: usize) -> Self {
        EpsSeries { order, coeffs: vec![LaurentPoly::zero(vars); order + 1] }
    }

    pub fn one(vars: &Arc<VarSet>, order: usize) -> Self {
        Self::from_poly(&LaurentPoly::one(vars), order)
    }

    /// Constant-in-eps series.
    pub fn from_poly(p: &LaurentPoly, order: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(p.vars()); order + 1];
        coeffs[0] = p.clone();
        EpsSeries { order, coeffs }
    }

    /// Build from the full coefficient vector; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "from_coeffs: need at least the eps^0 slot");
        let vars = coeffs[0].vars();
        assert!(
            coeffs.iter().all(|p| crate::algebra::VarSet::same(p.vars(), vars)),
            "from_coeffs: coefficients must share one variable set"
        );
        EpsSeries { order: coeffs.len() - 1, coeffs }
    }

    /// Truncated expansion of `exp(eps * c * X^e)`:
    /// the eps^j coefficient is `(c X^e)^j / j!`.
    pub fn exp_monomial(vars: &Arc<VarSet>, c: &Rational, e: &[i64], order: usize) -> Self {
        assert_eq!(e.len(), vars.len());
        let coeffs = (0..=order as u64)
            .map(|j| {
                let cj = pow_signed(c, j as i64) / factorial(j);
                let ej: Vec<i64> = e.iter().map(|&x| x * j as i64).collect();
                LaurentPoly::monomial(vars, cj, ej)
            })
            .collect();
        EpsSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.coeffs[0].vars()
    }

    /// Coefficient of `eps^m`.
    pub fn coeff(&self, m: usize) -> &LaurentPoly {
        &self.coeffs[m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncate: cannot extend a series");
        EpsSeries { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|m| &self.coeffs[m] + &other.coeffs[m]).collect();
        EpsSeries { order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|m| &self.coeffs[m] - &other.coeffs[m]).collect();
        EpsSeries { order, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let vars = self.vars();
        let mut coeffs = vec![LaurentPoly::zero(vars); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        EpsSeries { order, coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        EpsSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        EpsSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|q| q * p).collect(),
        }
    }

    /// Apply a polynomial map to every eps-coefficient. Since eps-order and
    /// monomial structure are independent, linear per-monomial operations
    /// act exactly this way on series.
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&LaurentPoly) -> Result<LaurentPoly>,
    {
        let coeffs: Result<Vec<_>> = self.coeffs.iter().map(&mut f).collect();
        Ok(EpsSeries { order: self.order, coeffs: coeffs? })
    }
}

impl DetElem for EpsSeries {
    fn zero_like(&self) -> Self {
        EpsSeries::zero(self.vars(), self.order)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// `exp(eps*m)` for an integer scalar `m`, over the given vars.
pub fn exp_scalar(vars: &Arc<VarSet>, m: i64, order: usize) -> EpsSeries {
    EpsSeries::exp_monomial(vars, &Rational::from_integer(m.into()), &vec![0; vars.len()], order)
}

/// `2 sinh(eps * c * X^e) = exp(+) - exp(-)`, truncated.
pub fn two_sinh_monomial(vars: &Arc<VarSet>, c: &Rational, e: &[i64], order: usize) -> EpsSeries {
    let plus = EpsSeries::exp_monomial(vars, c, e, order);
    let minus = EpsSeries::exp_monomial(vars, &-c.clone(), e, order);
    plus.sub(&minus)
}
