//! The integral operator `A_k`, verified through its eps-limit identity.
//!
//! The kernel substitutes the two delta images
//! `y_k -> w^{+-1} e^eps prod_{l<k} t_l^2 x_l / y_l` into
//! `a^(k+1)_mu(y_1..y_k)`, w-integrates up to `x_k`, then eliminates the
//! `(y_i, t_i)` pairs — the last pair with upper bound `t_{k-1} e^eps`.
//! The eps^0 coefficient of the result must vanish and half the eps^1
//! coefficient must equal `phi_mu(x_k) a^(k)_mu(x_1..x_{k-1})`.

use std::sync::Arc;

use crate::algebra::rational::{rat, rat_i};
use crate::algebra::{EpsSeries, LaurentPoly, VarSet};
use crate::characters::{a_mu_trunc_on, phi_mu_on, Partition};
use crate::{Error, Result};

use super::calculus::{dlog_integral_eps, p_functional, substitute_monomial_eps, w_integral};

/// Variable layout for the `A_k` pipeline: `x_1..x_k, y_1..y_k, t_1..t_{k-1}, w`.
struct AkVars {
    vars: Arc<VarSet>,
    k: usize,
}

impl AkVars {
    fn new(k: usize) -> Self {
        let names = (1..=k)
            .map(|i| format!("x{i}"))
            .chain((1..=k).map(|i| format!("y{i}")))
            .chain((1..k).map(|i| format!("t{i}")))
            .chain(["w".to_string()]);
        AkVars { vars: VarSet::shared(names), k }
    }

    fn x(&self, i: usize) -> usize {
        i
    }

    fn y(&self, i: usize) -> usize {
        self.k + i
    }

    fn t(&self, i: usize) -> usize {
        2 * self.k + i
    }

    fn w(&self) -> usize {
        3 * self.k - 1
    }
}

/// Outcome of the eps-limit: the eps^0 coefficient (must vanish), half the
/// eps^1 coefficient, and the closed-form value it must match.
#[derive(Debug, Clone)]
pub struct AkVerification {
    pub eps0: LaurentPoly,
    pub extracted: LaurentPoly,
    pub expected: LaurentPoly,
}

impl AkVerification {
    pub fn pass(&self) -> bool {
        self.eps0.is_zero() && self.extracted == self.expected
    }
}

/// Run the `A_k` kernel pipeline for the given partition and `1 <= k <= L`,
/// at the given eps truncation order (2 suffices: the limit needs the
/// eps^0 and eps^1 coefficients).
pub fn a_k_integral_verify(
    lambda: &Partition,
    k: usize,
    eps_order: usize,
) -> Result<AkVerification> {
    let l = lambda.len();
    if k < 1 || k > l {
        return Err(Error::OutOfRange(format!("a_k_integral_verify: k = {k}, L = {l}")));
    }
    assert!(eps_order >= 1, "need at least the eps^1 coefficient");
    let av = AkVars::new(k);
    let vars = &av.vars;
    let mu = lambda.mu();

    // a^(k+1)_mu(y_1..y_k) lifted to a constant eps-series
    let y_rows: Vec<usize> = (0..k).map(|i| av.y(i)).collect();
    let base = a_mu_trunc_on(vars, &y_rows, &mu);
    let series = EpsSeries::from_poly(&base, eps_order);

    // both delta kernels: y_k -> w^{+-1} e^eps prod_{l<k} t_l^2 x_l / y_l
    let mut pi = vec![0i64; vars.len()];
    for i in 0..k - 1 {
        pi[av.t(i)] += 2;
        pi[av.x(i)] += 1;
        pi[av.y(i)] -= 1;
    }
    let mut fwd = pi.clone();
    fwd[av.w()] = 1;
    let mut bwd = pi;
    bwd[av.w()] = -1;
    let img_fwd = LaurentPoly::monomial(vars, rat_i(1), fwd);
    let img_bwd = LaurentPoly::monomial(vars, rat_i(1), bwd);
    let s = substitute_monomial_eps(&series, av.y(k - 1), &img_fwd, 1)?
        .add(&substitute_monomial_eps(&series, av.y(k - 1), &img_bwd, 1)?);

    // w-integral up to x_k, order by order
    let upper_w = LaurentPoly::var_pow(vars, av.x(k - 1), 1);
    let mut s = s.map_coeffs(|p| w_integral(p, av.w(), &upper_w))?;

    // (y_i, t_i) pairs innermost first; the last pair integrates y_{k-1}
    // up to t_{k-1} e^eps instead of t_{k-1} x_k
    for i in (0..k - 1).rev() {
        let mut lo = vec![0i64; vars.len()];
        lo[av.t(i)] = 1;
        lo[av.x(i)] = 1;
        let lower = LaurentPoly::monomial(vars, rat_i(1), lo);
        let mut hi = vec![0i64; vars.len()];
        hi[av.t(i)] = 1;
        let (upper, shift) = if i == k - 2 {
            (LaurentPoly::monomial(vars, rat_i(1), hi), 1)
        } else {
            hi[av.x(i + 1)] = 1;
            (LaurentPoly::monomial(vars, rat_i(1), hi), 0)
        };
        s = dlog_integral_eps(&s, av.y(i), &lower, &upper, shift)?;
        s = s.map_coeffs(|p| p_functional(p, av.t(i)))?;
    }

    // everything but the x's is gone now
    let xk = VarSet::xs(k);
    let eps0 = s.coeff(0).cast_to(&xk)?;
    let extracted = s.coeff(1).cast_to(&xk)?.scale(&rat(1, 2));

    let x_rows: Vec<usize> = (0..k - 1).collect();
    let expected = &phi_mu_on(&xk, &[k - 1], &mu) * &a_mu_trunc_on(&xk, &x_rows, &mu);
    Ok(AkVerification { eps0, extracted, expected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::partitions;

    #[test]
    fn single_variable_case_is_hand_traceable() {
        // L = 1, k = 1, lambda = (1), mu = (2):
        // the pipeline yields 2 sinh(2 eps)(w^2 + w^-2) integrated to x,
        // so the extracted polynomial is x^2 - x^-2 = phi_mu(x) a^(1)_mu.
        let lam = Partition::new(vec![1]).unwrap();
        let v = a_k_integral_verify(&lam, 1, 2).unwrap();
        assert!(v.eps0.is_zero());
        let xs = VarSet::xs(1);
        let want = &LaurentPoly::var_pow(&xs, 0, 2) - &LaurentPoly::var_pow(&xs, 0, -2);
        assert_eq!(v.extracted, want);
        assert_eq!(v.expected, want);
        assert!(v.pass());
    }

    #[test]
    fn staircase_l2_k2() {
        let lam = Partition::zero(2);
        let v = a_k_integral_verify(&lam, 2, 2).unwrap();
        assert!(v.pass());
    }

    #[test]
    fn l2_k1_fundamental() {
        let lam = Partition::new(vec![1, 0]).unwrap();
        let v = a_k_integral_verify(&lam, 1, 2).unwrap();
        assert!(v.pass());
    }

    #[test]
    fn sweep_l2() {
        for lam in partitions(2, 2) {
            for k in 1..=2 {
                let v = a_k_integral_verify(&lam, k, 2).unwrap();
                assert!(v.pass(), "lambda = {lam}, k = {k}");
            }
        }
    }

    #[test]
    fn k_out_of_range() {
        let lam = Partition::zero(2);
        assert!(a_k_integral_verify(&lam, 0, 2).is_err());
        assert!(a_k_integral_verify(&lam, 3, 2).is_err());
    }
}
