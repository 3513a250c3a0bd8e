//! Finite linear combinations of characters, and expansion of Weyl-invariant
//! Laurent polynomials in the character basis.
//!
//! Multiplying an invariant `f` by `a_delta` gives an antisymmetric
//! polynomial `sum_lambda c_lambda a_mu`; each strictly decreasing positive
//! monomial `x^nu` occurs in exactly one `a_mu` (the one with `mu = nu`,
//! coefficient 1), so the expansion coefficients can be read off directly
//! without solving a linear system. The reconstruction is re-checked
//! exactly afterwards.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{parse_frac, to_string_frac, Rational};
use crate::algebra::{LaurentPoly, VarSet};
use crate::{Error, Result};

use super::amu::{a_mu, a_mu_on};
use super::chi::chi;
use super::partition::{MuVector, Partition, PartitionJson};

/// A finite map `Partition -> Rational` representing `sum c_lambda chi_lambda`
/// for a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterExpansion {
    l: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl CharacterExpansion {
    pub fn new(l: usize) -> Self {
        assert!(l >= 1);
        CharacterExpansion { l, coeffs: BTreeMap::new() }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Add `c * chi_lambda`; zero coefficients are dropped.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        if lambda.len() != self.l {
            return Err(Error::Invalid {
                what: "character expansion",
                why: format!("partition {lambda} has length {}, L = {}", lambda.len(), self.l),
            });
        }
        let entry = self.coeffs.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// `sum c_lambda chi_lambda` as a polynomial over `x_1..x_L`.
    pub fn reconstruct(&self) -> Result<LaurentPoly> {
        let vars = VarSet::xs(self.l);
        let mut acc = LaurentPoly::zero(&vars);
        for (lam, c) in &self.coeffs {
            acc = &acc + &chi(lam)?.scale(c);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Vec<ExpansionTermJson> {
        self.coeffs
            .iter()
            .map(|(p, c)| ExpansionTermJson {
                partition: p.to_json(),
                coeff: to_string_frac(c),
            })
            .collect()
    }

    pub fn from_json(l: usize, terms: &[ExpansionTermJson]) -> Result<Self> {
        let mut e = CharacterExpansion::new(l);
        for t in terms {
            let p = Partition::from_json(&t.partition)?;
            let c = parse_frac(&t.coeff).ok_or(Error::Invalid {
                what: "character expansion JSON",
                why: format!("bad coefficient {}", t.coeff),
            })?;
            e.add_term(p, c)?;
        }
        Ok(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTermJson {
    pub partition: PartitionJson,
    pub coeff: String,
}

/// True iff `f` over `x_1..x_l` is invariant under all variable swaps and
/// under every `x_i -> x_i^{-1}` (the hyperoctahedral group action).
pub fn is_weyl_invariant(f: &LaurentPoly, l: usize) -> bool {
    for i in 0..l.saturating_sub(1) {
        if f.swap_vars(i, i + 1) != *f {
            return false;
        }
    }
    (0..l).all(|i| f.invert_var(i) == *f)
}

/// Expand an invariant polynomial in the character basis.
pub fn expand_in_chi_basis(f: &LaurentPoly, l: usize) -> Result<CharacterExpansion> {
    assert_eq!(f.vars().len(), l, "expand_in_chi_basis: variable count");
    if !is_weyl_invariant(f, l) {
        return Err(Error::NotWeylInvariant);
    }
    let vars = f.vars().clone();
    let rows: Vec<usize> = (0..l).collect();
    let a_delta = a_mu_on(&vars, &rows, &MuVector::delta(l));
    let g = f * &a_delta;
    let mut exp = CharacterExpansion::new(l);
    for (e, c) in g.terms() {
        let strictly_decreasing_positive =
            e.windows(2).all(|w| w[0] > w[1]) && e.last().is_some_and(|&x| x >= 1);
        if !strictly_decreasing_positive {
            continue;
        }
        // lambda_i = nu_i - (L - i + 1) is automatically a partition.
        let lam: Vec<i64> = e
            .iter()
            .enumerate()
            .map(|(i, &nu)| nu - (l as i64 - i as i64))
            .collect();
        exp.add_term(Partition::new(lam)?, c.clone())?;
    }
    // Reconstruction check at the antisymmetric level:
    // sum c_lambda a_mu must reproduce a_delta * f exactly.
    let mut back = LaurentPoly::zero(&vars);
    for (lam, c) in exp.iter() {
        back = &back + &a_mu(&lam.mu()).cast_to(&vars)?.scale(c);
    }
    if back != g {
        return Err(Error::ReconstructionMismatch);
    }
    Ok(exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_i;

    #[test]
    fn constant_expands_to_zero_partition() {
        let v = VarSet::xs(2);
        let f = LaurentPoly::one(&v);
        let e = expand_in_chi_basis(&f, 2).unwrap();
        assert_eq!(e.num_terms(), 1);
        assert_eq!(e.coeff(&Partition::zero(2)), rat_i(1));
    }

    #[test]
    fn fundamental_character_recovered() {
        let v = VarSet::xs(2);
        let f = &(&LaurentPoly::var_pow(&v, 0, 1) + &LaurentPoly::var_pow(&v, 0, -1))
            + &(&LaurentPoly::var_pow(&v, 1, 1) + &LaurentPoly::var_pow(&v, 1, -1));
        let e = expand_in_chi_basis(&f, 2).unwrap();
        assert_eq!(e.num_terms(), 1);
        assert_eq!(e.coeff(&Partition::new(vec![1, 0]).unwrap()), rat_i(1));
    }

    #[test]
    fn linear_combination() {
        let lam = Partition::new(vec![1, 0]).unwrap();
        let f = &chi(&lam).unwrap() + &chi(&Partition::zero(2)).unwrap().scale(&rat_i(2));
        let e = expand_in_chi_basis(&f, 2).unwrap();
        assert_eq!(e.coeff(&lam), rat_i(1));
        assert_eq!(e.coeff(&Partition::zero(2)), rat_i(2));
        assert_eq!(e.num_terms(), 2);
        // and reconstruct gives f back
        assert_eq!(e.reconstruct().unwrap(), f);
    }

    #[test]
    fn rejects_non_invariant_input() {
        let v = VarSet::xs(2);
        let f = LaurentPoly::var_pow(&v, 0, 1);
        assert_eq!(expand_in_chi_basis(&f, 2), Err(Error::NotWeylInvariant));
    }

    #[test]
    fn expansion_json_round_trip() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let mut e = CharacterExpansion::new(2);
        e.add_term(lam, crate::algebra::rational::rat(-3, 2)).unwrap();
        e.add_term(Partition::zero(2), rat_i(1)).unwrap();
        let j = e.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let parsed: Vec<ExpansionTermJson> = serde_json::from_str(&s).unwrap();
        assert_eq!(CharacterExpansion::from_json(2, &parsed).unwrap(), e);
    }
}
