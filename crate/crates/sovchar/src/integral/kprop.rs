//! Series verification of the truncation limits relating `a_mu` to its
//! truncated determinants.
//!
//! Route one substitutes `x_i = e^{eps u_i}` for `i = k..L` with distinct
//! symbols `u_i` and expands the full determinant: all eps-coefficients
//! below order `(L-k+1)^2` vanish and the leading one is
//! `2^{L-k+1} a^(1)_(u_k..u_L) / prod_{m=0}^{L-k} (2m+1)!` times
//! `a^(k)_mu(x_1..x_{k-1})`.
//!
//! Route two is the inductive step: in `a^(k+1)_mu(x_1..x_{k-1}, e^eps)`
//! the coefficients below order `2(L-k)+1` vanish and the leading one is
//! `2/(2(L-k)+1)!` times `a^(k)_mu`.

use num_traits::One;

use crate::algebra::matrix::det_cofactor_generic;
use crate::algebra::rational::{factorial, rat_i, Rational};
use crate::algebra::series::two_sinh_monomial;
use crate::algebra::{EpsSeries, LaurentPoly, VarSet};
use crate::characters::{a1_product_symbolic, a_mu_trunc_on, Partition};
use crate::{Error, Result};

/// Outcome of a truncation-limit check: whether all series coefficients
/// below the leading order vanish, the leading coefficient, and its
/// closed-form value.
#[derive(Debug, Clone)]
pub struct KpropVerification {
    pub lower_orders_vanish: bool,
    pub leading: LaurentPoly,
    pub expected: LaurentPoly,
}

impl KpropVerification {
    pub fn pass(&self) -> bool {
        self.lower_orders_vanish && self.leading == self.expected
    }
}

/// Route one: the simultaneous limit with symbols `u_k..u_L`.
pub fn kprop_limit_verify(lambda: &Partition, k: usize) -> Result<KpropVerification> {
    let l = lambda.len();
    if k < 1 || k > l {
        return Err(Error::OutOfRange(format!("kprop_limit_verify: k = {k}, L = {l}")));
    }
    let mu = lambda.mu();
    let n = (l - k + 1) * (l - k + 1);
    let names = (1..k)
        .map(|i| format!("x{i}"))
        .chain((k..=l).map(|i| format!("u{i}")));
    let vars = VarSet::shared(names);
    // rows 1..k-1: x_i entries as constant series; rows k..L: 2 sinh(eps u_i mu_j)
    let mut m: Vec<Vec<EpsSeries>> = Vec::with_capacity(l);
    for i in 0..k - 1 {
        m.push(
            mu.values()
                .iter()
                .map(|&mj| {
                    let row = &LaurentPoly::var_pow(&vars, i, mj)
                        - &LaurentPoly::var_pow(&vars, i, -mj);
                    EpsSeries::from_poly(&row, n)
                })
                .collect(),
        );
    }
    for i in 0..=(l - k) {
        let u_idx = k - 1 + i;
        let mut e = vec![0i64; vars.len()];
        e[u_idx] = 1;
        m.push(
            mu.values()
                .iter()
                .map(|&mj| two_sinh_monomial(&vars, &rat_i(mj), &e, n))
                .collect(),
        );
    }
    let det = det_cofactor_generic(&m).expect("nonempty matrix");
    let lower_orders_vanish = (0..n).all(|d| det.coeff(d).is_zero());
    let leading = det.coeff(n).clone();

    let u_idxs: Vec<usize> = (k - 1..l).collect();
    let a1_u = a1_product_symbolic(&vars, &u_idxs);
    let x_rows: Vec<usize> = (0..k - 1).collect();
    let a_k = a_mu_trunc_on(&vars, &x_rows, &mu);
    let mut pref = Rational::one();
    for _ in 0..(l - k + 1) {
        pref *= rat_i(2);
    }
    for m_ in 0..=(l - k) as u64 {
        pref /= factorial(2 * m_ + 1);
    }
    let expected = (&a1_u * &a_k).scale(&pref);
    Ok(KpropVerification { lower_orders_vanish, leading, expected })
}

/// Route two: the one-variable inductive step from `a^(k+1)` to `a^(k)`.
pub fn kprop_inductive_verify(lambda: &Partition, k: usize) -> Result<KpropVerification> {
    let l = lambda.len();
    if k < 1 || k > l {
        return Err(Error::OutOfRange(format!("kprop_inductive_verify: k = {k}, L = {l}")));
    }
    let mu = lambda.mu();
    let n = 2 * (l - k) + 1;
    let vars = VarSet::xs(k - 1);
    let mut m: Vec<Vec<EpsSeries>> = Vec::with_capacity(l);
    for i in 0..k - 1 {
        m.push(
            mu.values()
                .iter()
                .map(|&mj| {
                    let row = &LaurentPoly::var_pow(&vars, i, mj)
                        - &LaurentPoly::var_pow(&vars, i, -mj);
                    EpsSeries::from_poly(&row, n)
                })
                .collect(),
        );
    }
    // row k: x_k = e^eps
    let zero_e = vec![0i64; vars.len()];
    m.push(
        mu.values()
            .iter()
            .map(|&mj| two_sinh_monomial(&vars, &rat_i(mj), &zero_e, n))
            .collect(),
    );
    // rows k+1..L: numeric
    for i in k + 1..=l {
        let p = 2 * (l as i64 - i as i64) + 1;
        m.push(
            mu.values()
                .iter()
                .map(|&mj| {
                    EpsSeries::from_poly(&LaurentPoly::constant(&vars, rat_i(mj).pow(p as i32)), n)
                })
                .collect(),
        );
    }
    let det = det_cofactor_generic(&m).expect("nonempty matrix");
    let lower_orders_vanish = (0..n).all(|d| det.coeff(d).is_zero());
    let leading = det.coeff(n).clone();

    let x_rows: Vec<usize> = (0..k - 1).collect();
    let a_k = a_mu_trunc_on(&vars, &x_rows, &mu);
    let pref = rat_i(2) / factorial(n as u64);
    let expected = a_k.scale(&pref);
    Ok(KpropVerification { lower_orders_vanish, leading, expected })
}
