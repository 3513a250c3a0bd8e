//! Basis-level action of the separation operators.
//!
//! On the character basis, `Q_z` multiplies the coefficient of
//! `chi_lambda` by `q_lambda(z)`, the separating chain step `A_k` sends the
//! truncated character to `q_lambda(x_k)` times the next truncation, and
//! the full separating operator produces
//! `dimension(lambda) prod_i q_lambda(x_i)`. Everything extends to finite
//! character expansions by linearity.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{LaurentPoly, VarSet};
use crate::characters::{
    chi_truncated, dimension, q_poly_on, CharacterExpansion, Partition,
};
use crate::Result;

/// `Q_z` on a character expansion: each coefficient `c_lambda` becomes
/// `c_lambda q_lambda(z)`, a polynomial in the chosen variable.
pub fn q_basis_apply(
    e: &CharacterExpansion,
    vars: &Arc<VarSet>,
    zvar: usize,
) -> Result<BTreeMap<Partition, LaurentPoly>> {
    let mut out = BTreeMap::new();
    for (lam, c) in e.iter() {
        let q = q_poly_on(vars, zvar, lam)?;
        out.insert(lam.clone(), q.scale(c));
    }
    Ok(out)
}

/// `A_k` on the basis element `chi_lambda`:
/// `q_lambda(x_k) chi_lambda(x_1..x_{k-1}, 1..1)` over `x_1..x_k`.
pub fn a_k_basis_apply(lambda: &Partition, k: usize) -> Result<LaurentPoly> {
    let l = lambda.len();
    if k < 1 || k > l {
        return Err(crate::Error::OutOfRange(format!("a_k_basis_apply: k = {k}, L = {l}")));
    }
    let vars = VarSet::xs(k);
    let q = q_poly_on(&vars, k - 1, lambda)?;
    let trunc = chi_truncated(lambda, k - 1)?.cast_to(&vars)?;
    Ok(&q * &trunc)
}

/// The separating operator on a character expansion:
/// `sum_lambda c_lambda dimension(lambda) prod_i q_lambda(x_i)` over
/// `x_1..x_L`.
pub fn separating_operator_apply(e: &CharacterExpansion) -> Result<LaurentPoly> {
    let l = e.l();
    let vars = VarSet::xs(l);
    let mut acc = LaurentPoly::zero(&vars);
    for (lam, c) in e.iter() {
        let mut term = LaurentPoly::constant(&vars, c * &dimension(lam));
        for i in 0..l {
            term = &term * &q_poly_on(&vars, i, lam)?;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The same operator computed through the `A_k` chain: at each step the
/// current truncated-character factor is peeled off by exact division and
/// replaced by the `a_k_basis_apply` value. Must agree with
/// [`separating_operator_apply`].
pub fn separating_operator_apply_stepwise(e: &CharacterExpansion) -> Result<LaurentPoly> {
    let l = e.l();
    let vars = VarSet::xs(l);
    let mut acc = LaurentPoly::zero(&vars);
    for (lam, c) in e.iter() {
        let mut cur = chi_truncated(lam, l)?; // the full character
        for k in (1..=l).rev() {
            let prev_factor = chi_truncated(lam, k)?.cast_to(&vars)?;
            let step = a_k_basis_apply(lam, k)?.cast_to(&vars)?;
            cur = &cur.divide_exact(&prev_factor)? * &step;
        }
        acc = &acc + &cur.scale(c);
    }
    Ok(acc)
}
