//! Multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms are stored sparsely as `BTreeMap<Vec<i64>, Rational>` keyed by the
//! exponent vector (entries may be negative), over a shared [`VarSet`].
//!
//! Invariants:
//! - no zero coefficients are ever stored;
//! - every exponent vector has length `vars.len()`;
//! - the representation is canonical: two polynomials are equal iff their
//!   variable sets agree and their term maps are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{parse_frac, pow_signed, Rational};
use super::varset::VarSet;
use crate::{Error, Result};

pub type Exponents = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Exponents, Rational>,
}

fn add_term(map: &mut BTreeMap<Exponents, Rational>, e: Exponents, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl LaurentPoly {
    // ---- Constructors ----

    pub fn zero(vars: &Arc<VarSet>) -> Self {
        LaurentPoly { vars: Arc::clone(vars), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        LaurentPoly { vars: Arc::clone(vars), terms }
    }

    /// Single term `c * X^e`.
    pub fn monomial(vars: &Arc<VarSet>, c: Rational, e: Exponents) -> Self {
        assert_eq!(e.len(), vars.len(), "monomial: exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { vars: Arc::clone(vars), terms }
    }

    /// `vars[i]^m`.
    pub fn var_pow(vars: &Arc<VarSet>, i: usize, m: i64) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = m;
        Self::monomial(vars, Rational::one(), e)
    }

    /// Accumulate terms (duplicates allowed; zeros dropped).
    pub fn from_terms<I>(vars: &Arc<VarSet>, it: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut terms = BTreeMap::new();
        for (e, c) in it {
            assert_eq!(e.len(), vars.len(), "from_terms: exponent vector length");
            add_term(&mut terms, e, c);
        }
        LaurentPoly { vars: Arc::clone(vars), terms }
    }

    // ---- Accessors ----

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `X^e` (zero when absent).
    pub fn coeff(&self, e: &[i64]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The polynomial as a rational constant, if it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn check_same_vars(&self, other: &Self) -> Result<()> {
        if VarSet::same(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::VarSetMismatch(self.vars.to_string(), other.vars.to_string()))
        }
    }

    // ---- Ring arithmetic ----

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly { vars: Arc::clone(&self.vars), terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), -c.clone());
        }
        Ok(LaurentPoly { vars: Arc::clone(&self.vars), terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        // Keep the shorter operand in the outer loop and accumulate into a
        // hash map; ordering is only restored once at the end.
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Exponents, Rational> =
            HashMap::with_capacity(small.terms.len() * big.terms.len() / 2 + 1);
        for (ea, ca) in &small.terms {
            for (eb, cb) in &big.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(ca * cb);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += ca * cb;
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { vars: Arc::clone(&self.vars), terms })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        LaurentPoly { vars: Arc::clone(&self.vars), terms }
    }

    /// Multiply by the monomial `X^e`.
    pub fn mul_monomial(&self, e: &[i64], c: &Rational) -> Self {
        assert_eq!(e.len(), self.vars.len());
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(old, v)| (old.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
            .collect();
        LaurentPoly { vars: Arc::clone(&self.vars), terms }
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.try_mul(self).expect("pow: same varset");
        }
        acc
    }

    /// Rescale each coefficient by a function of its exponent vector.
    /// This is how diagonal (Euler-type) operators act.
    pub fn scale_by_exponent<F>(&self, f: F) -> Self
    where
        F: Fn(&[i64]) -> Rational,
    {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let s = f(e);
            if !s.is_zero() {
                terms.insert(e.clone(), c * s);
            }
        }
        LaurentPoly { vars: Arc::clone(&self.vars), terms }
    }

    // ---- Exact division ----

    /// Exact quotient in the Laurent polynomial ring. Fails with
    /// [`Error::NotDivisible`] when the division leaves a remainder, which
    /// always signals a broken identity upstream.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        self.check_same_vars(den)?;
        assert!(!den.is_zero(), "divide_exact: division by zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        // Shift both operands into the ordinary polynomial ring: Laurent
        // units are monomials, so divisibility is unchanged.
        let s = self.min_exponents();
        let t = den.min_exponents();
        let shift = |terms: &BTreeMap<Exponents, Rational>, m: &[i64]| {
            terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a - b).collect::<Exponents>(), c.clone()))
                .collect::<BTreeMap<_, _>>()
        };
        let mut f = shift(&self.terms, &s);
        let d: Vec<(Exponents, Rational)> = shift(&den.terms, &t).into_iter().rev().collect();
        let (d_lead_e, d_lead_c) = (&d[0].0, &d[0].1);

        let mut quot: BTreeMap<Exponents, Rational> = BTreeMap::new();
        while let Some((e_f, c_f)) = f.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            // Leading-term reduction w.r.t. lex order; the leading exponent
            // strictly decreases, so this terminates.
            let mut e_q = Vec::with_capacity(e_f.len());
            for (a, b) in e_f.iter().zip(d_lead_e) {
                let q = a - b;
                if q < 0 {
                    return Err(Error::NotDivisible);
                }
                e_q.push(q);
            }
            let c_q = &c_f / d_lead_c;
            for (e_d, c_d) in &d {
                let key: Exponents = e_q.iter().zip(e_d).map(|(a, b)| a + b).collect();
                add_term(&mut f, key, -(&c_q * c_d));
            }
            quot.insert(e_q, c_q);
        }
        // Undo the shift: quotient exponents move by s - t.
        let back: BTreeMap<Exponents, Rational> = quot
            .into_iter()
            .map(|(e, c)| {
                (
                    e.iter().zip(s.iter().zip(&t)).map(|(q, (a, b))| q + a - b).collect(),
                    c,
                )
            })
            .collect();
        Ok(LaurentPoly { vars: Arc::clone(&self.vars), terms: back })
    }

    /// Componentwise minimum of all exponent vectors (zeros for the zero
    /// polynomial).
    pub fn min_exponents(&self) -> Exponents {
        let n = self.vars.len();
        let mut m = vec![0i64; n];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                m.copy_from_slice(e);
                first = false;
            } else {
                for (mi, ei) in m.iter_mut().zip(e) {
                    *mi = (*mi).min(*ei);
                }
            }
        }
        m
    }

    // ---- Structural maps ----

    /// Replace `var` by the single-term image, exactly: `var^m` becomes
    /// `image^m`. The image must be one term with nonzero coefficient and
    /// must not involve `var` itself.
    pub fn substitute_monomial(&self, var: usize, image: &Self) -> Result<Self> {
        self.check_same_vars(image)?;
        if image.terms.len() != 1 {
            return Err(Error::NotMonomial);
        }
        let (e_img, c_img) = image.terms.iter().next().unwrap();
        if e_img[var] != 0 {
            return Err(Error::NotMonomial);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let m = e[var];
            let mut ne: Exponents = e.iter().zip(e_img).map(|(a, b)| a + m * b).collect();
            ne[var] = 0;
            let nc = c * pow_signed(c_img, m);
            add_term(&mut terms, ne, nc);
        }
        Ok(LaurentPoly { vars: Arc::clone(&self.vars), terms })
    }

    /// Substitute 1 for each listed variable.
    pub fn eval_at_one(&self, vars: &[usize]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            for &v in vars {
                ne[v] = 0;
            }
            add_term(&mut terms, ne, c.clone());
        }
        LaurentPoly { vars: Arc::clone(&self.vars), terms }
    }

    /// Re-express over another variable set, matching variables by name.
    /// Every variable that actually occurs must exist in the target.
    pub fn cast_to(&self, target: &Arc<VarSet>) -> Result<Self> {
        let map: Vec<Option<usize>> =
            self.vars.names().iter().map(|n| target.index_of(n)).collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    match map[i] {
                        Some(j) => ne[j] = x,
                        None => {
                            return Err(Error::Invalid {
                                what: "cast_to",
                                why: format!(
                                    "variable `{}` occurs but is absent from target",
                                    self.vars.name(i)
                                ),
                            })
                        }
                    }
                }
            }
            terms.insert(ne, c.clone());
        }
        Ok(LaurentPoly { vars: Arc::clone(target), terms })
    }

    /// Relabel into another variable set by explicit positions:
    /// `positions[i]` is the target index for this polynomial's variable `i`.
    pub fn map_vars_to(&self, target: &Arc<VarSet>, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.vars.len());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0i64; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[positions[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { vars: Arc::clone(target), terms }
    }

    /// Exchange the roles of two variables.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne.swap(i, j);
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { vars: Arc::clone(&self.vars), terms }
    }

    /// Send `vars[i]` to its inverse.
    pub fn invert_var(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] = -ne[i];
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { vars: Arc::clone(&self.vars), terms }
    }

    // ---- JSON ----

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.clone(),
                    n: c.numer().to_string(),
                    d: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let vars = VarSet::shared(j.vars.clone());
        let mut terms = BTreeMap::new();
        for t in &j.terms {
            if t.e.len() != vars.len() {
                return Err(Error::Invalid {
                    what: "polynomial JSON",
                    why: "exponent vector length does not match vars".into(),
                });
            }
            let c = parse_frac(&format!("{}/{}", t.n, t.d)).ok_or(Error::Invalid {
                what: "polynomial JSON",
                why: format!("bad coefficient {}/{}", t.n, t.d),
            })?;
            add_term(&mut terms, t.e.clone(), c);
        }
        Ok(LaurentPoly { vars, terms })
    }
}

/// Canonical JSON form of a polynomial. Integers are decimal strings so
/// arbitrary precision survives the encoding; terms are ordered
/// lexicographically by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i64>,
    pub n: String,
    pub d: String,
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("add: variable sets differ")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("sub: variable sets differ")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("mul: variable sets differ")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Descending lex order reads most naturally.
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            let mag_str = super::rational::to_string_frac(&mag);
            if is_const {
                write!(f, "{mag_str}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag_str}*")?;
                }
                let mut sep = "";
                for (i, &x) in e.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    write!(f, "{sep}{}", self.vars.name(i))?;
                    if x != 1 {
                        write!(f, "^{x}")?;
                    }
                    sep = "*";
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_i};

    fn x() -> (Arc<VarSet>, LaurentPoly, LaurentPoly) {
        let v = VarSet::single("x");
        let xp = LaurentPoly::var_pow(&v, 0, 1);
        let xm = LaurentPoly::var_pow(&v, 0, -1);
        (v, xp, xm)
    }

    #[test]
    fn difference_of_squares() {
        let (_, xp, xm) = x();
        let prod = &(&xp + &xm) * &(&xp - &xm);
        let expect = &xp.pow(2) - &xm.pow(2);
        assert_eq!(prod, expect);
    }

    #[test]
    fn additive_identity() {
        let (v, xp, xm) = x();
        let f = &xp.scale(&rat(3, 2)) + &xm;
        assert_eq!(&f + &LaurentPoly::zero(&v), f);
    }

    #[test]
    fn two_variable_product() {
        let v = VarSet::xs(2);
        let x1 = LaurentPoly::var_pow(&v, 0, 1);
        let x2 = LaurentPoly::var_pow(&v, 1, 1);
        let prod = &(&x1 - &x2) * &(&x1 + &x2);
        assert_eq!(prod, &x1.pow(2) - &x2.pow(2));
    }

    #[test]
    fn varset_mismatch_is_an_error() {
        let a = LaurentPoly::one(&VarSet::xs(2));
        let b = LaurentPoly::one(&VarSet::xs(3));
        assert!(matches!(a.try_add(&b), Err(Error::VarSetMismatch(_, _))));
    }

    #[test]
    fn exact_division() {
        let (_, xp, xm) = x();
        // (x^2 - x^-2) / (x - x^-1) = x + x^-1
        let num = &xp.pow(2) - &xm.pow(2);
        let den = &xp - &xm;
        assert_eq!(num.divide_exact(&den).unwrap(), &xp + &xm);
    }

    #[test]
    fn division_by_one_and_two_vars() {
        let v = VarSet::xs(2);
        let x1 = LaurentPoly::var_pow(&v, 0, 1);
        let x2 = LaurentPoly::var_pow(&v, 1, 1);
        let f = &(&x1 - &x2.pow(3)) * &(&x1 + &x2);
        assert_eq!(f.divide_exact(&LaurentPoly::one(&v)).unwrap(), f);
        let num = &x1.pow(2) - &x2.pow(2);
        let den = &x1 + &x2;
        assert_eq!(num.divide_exact(&den).unwrap(), &x1 - &x2);
    }

    #[test]
    fn division_failure_is_loud() {
        let (_, xp, xm) = x();
        let num = &xp.pow(2) + &LaurentPoly::one(xp.vars());
        let den = &xp - &xm;
        assert_eq!(num.divide_exact(&den), Err(Error::NotDivisible));
    }

    #[test]
    fn substitute_monomial_powers() {
        let v = VarSet::shared(["y", "w", "x"]);
        let y3 = LaurentPoly::var_pow(&v, 0, 3);
        let wx = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 1]);
        // y^3 with y -> w*x gives w^3 x^3
        assert_eq!(
            y3.substitute_monomial(0, &wx).unwrap(),
            LaurentPoly::monomial(&v, rat_i(1), vec![0, 3, 3])
        );
        // y - y^-1 with y -> x/w
        let f = &LaurentPoly::var_pow(&v, 0, 1) - &LaurentPoly::var_pow(&v, 0, -1);
        let x_over_w = LaurentPoly::monomial(&v, rat_i(1), vec![0, -1, 1]);
        let got = f.substitute_monomial(0, &x_over_w).unwrap();
        let want = &LaurentPoly::monomial(&v, rat_i(1), vec![0, -1, 1])
            - &LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, -1]);
        assert_eq!(got, want);
        // mu = 2 case: y^2 - y^-2 with y -> w*x
        let g = &LaurentPoly::var_pow(&v, 0, 2) - &LaurentPoly::var_pow(&v, 0, -2);
        let got = g.substitute_monomial(0, &wx).unwrap();
        let want = &LaurentPoly::monomial(&v, rat_i(1), vec![0, 2, 2])
            - &LaurentPoly::monomial(&v, rat_i(1), vec![0, -2, -2]);
        assert_eq!(got, want);
    }

    #[test]
    fn substitute_rejects_non_monomials() {
        let v = VarSet::shared(["y", "x"]);
        let y = LaurentPoly::var_pow(&v, 0, 1);
        let img = &LaurentPoly::var_pow(&v, 1, 1) + &LaurentPoly::one(&v);
        assert_eq!(y.substitute_monomial(0, &img), Err(Error::NotMonomial));
        assert_eq!(y.substitute_monomial(0, &LaurentPoly::zero(&v)), Err(Error::NotMonomial));
        // image may not involve the substituted variable
        assert_eq!(y.substitute_monomial(0, &y), Err(Error::NotMonomial));
    }

    #[test]
    fn eval_at_one_merges_terms() {
        let v = VarSet::xs(2);
        let f = &(&LaurentPoly::var_pow(&v, 0, 1) + &LaurentPoly::var_pow(&v, 0, -1))
            + &(&LaurentPoly::var_pow(&v, 1, 1) + &LaurentPoly::var_pow(&v, 1, -1));
        let g = f.eval_at_one(&[1]);
        let want = &(&LaurentPoly::var_pow(&v, 0, 1) + &LaurentPoly::var_pow(&v, 0, -1))
            + &LaurentPoly::constant(&v, rat_i(2));
        assert_eq!(g, want);
        assert_eq!(f.eval_at_one(&[]), f);
        let h = &LaurentPoly::var_pow(&v, 0, 2) - &LaurentPoly::var_pow(&v, 1, -2);
        assert!(h.eval_at_one(&[0, 1]).is_zero());
    }

    #[test]
    fn cast_between_varsets() {
        let small = VarSet::xs(2);
        let big = VarSet::shared(["w", "x1", "x2", "z"]);
        let f = &LaurentPoly::var_pow(&small, 0, 2) - &LaurentPoly::var_pow(&small, 1, -1);
        let up = f.cast_to(&big).unwrap();
        let back = up.cast_to(&small).unwrap();
        assert_eq!(back, f);
        // going down fails if a foreign variable occurs
        let g = LaurentPoly::var_pow(&big, 0, 1);
        assert!(g.cast_to(&small).is_err());
    }

    #[test]
    fn display_reads_naturally() {
        let v = VarSet::xs(2);
        let f = &(&LaurentPoly::var_pow(&v, 0, 2).scale(&rat(3, 2))
            - &LaurentPoly::var_pow(&v, 1, -1))
            + &LaurentPoly::one(&v);
        assert_eq!(f.to_string(), "3/2*x1^2 + 1 - x2^-1");
        assert_eq!(LaurentPoly::zero(&v).to_string(), "0");
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let v = VarSet::xs(2);
        let f = &(&LaurentPoly::var_pow(&v, 0, 2).scale(&rat(-7, 3))
            + &LaurentPoly::var_pow(&v, 1, -4))
            + &LaurentPoly::one(&v);
        let j = f.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let parsed: PolyJson = serde_json::from_str(&s).unwrap();
        let g = LaurentPoly::from_json(&parsed).unwrap();
        assert_eq!(f, g);
        assert_eq!(serde_json::to_string(&g.to_json()).unwrap(), s);
    }
}
