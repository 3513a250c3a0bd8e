//! Univariate rational functions over the Laurent polynomial ring.
//!
//! Only the surface needed by the differential-operator layer: arithmetic,
//! the Euler derivative via the quotient rule, and cross-multiplication
//! equality. Values are reduced by rational content after every operation;
//! no polynomial gcd is taken.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::rational::Rational;

#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Common rational content of the coefficients: gcd of numerators over lcm
/// of denominators, sign-normalised to be positive.
fn content(polys: &[&LaurentPoly]) -> Rational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for p in polys {
        for (_, c) in p.terms() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
    }
    if g.is_zero() {
        Rational::one()
    } else {
        Rational::new(g.abs(), l)
    }
}

impl RationalFunction {
    /// Build `num/den`; panics on a zero denominator, which is always a
    /// programming error here.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "RationalFunction: zero denominator");
        assert_eq!(num.vars().len(), 1, "RationalFunction is univariate");
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        rf
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.vars());
        Self::new(p, one)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.den.vars());
            return;
        }
        // Monomial factors are units in the Laurent ring: normalise the
        // denominator's minimal exponent to zero.
        let a = self.den.min_exponents()[0];
        if a != 0 {
            self.den = self.den.mul_monomial(&[-a], &Rational::one());
            self.num = self.num.mul_monomial(&[-a], &Rational::one());
        }
        // Cancel shared (x - 1) and (x + 1) factors. Iterated Euler
        // derivatives only ever introduce these into denominators, and
        // without cancellation the quotient rule doubles the denominator
        // degree at every step.
        let vars = self.den.vars().clone();
        let x = LaurentPoly::var_pow(&vars, 0, 1);
        for root in [1i64, -1] {
            let factor = &x - &LaurentPoly::constant(&vars, Rational::from_integer(root.into()));
            while let (Ok(n), Ok(d)) =
                (self.num.divide_exact(&factor), self.den.divide_exact(&factor))
            {
                self.num = n;
                self.den = d;
            }
        }
        let c = content(&[&self.num, &self.den]);
        let inv = c.recip();
        self.num = self.num.scale(&inv);
        self.den = self.den.scale(&inv);
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    /// Euler derivative `D = x d/dx` through the quotient rule:
    /// `D(p/q) = (Dp q - p Dq)/q^2`.
    pub fn euler_derivative(&self) -> Self {
        let dp = euler_poly(&self.num);
        let dq = euler_poly(&self.den);
        Self::new(&(&dp * &self.den) - &(&self.num * &dq), &self.den * &self.den)
    }

    /// Equality by cross-multiplication.
    pub fn equiv(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// Euler derivative on a univariate Laurent polynomial: `x^m -> m x^m`.
pub fn euler_poly(p: &LaurentPoly) -> LaurentPoly {
    p.scale_by_exponent(|e| Rational::from_integer(e[0].into()))
}
