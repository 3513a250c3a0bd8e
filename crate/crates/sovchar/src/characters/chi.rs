//! The symplectic character `chi_lambda = a_mu / a_delta`, its truncations,
//! the dimension, and the `phi` / `q` polynomials.
//!
//! Every quotient here is exact in theory; a [`crate::Error::NotDivisible`]
//! from these functions therefore means a bug upstream, not bad input.

use std::sync::Arc;

use crate::algebra::rational::{factorial, rat_i, Rational};
use crate::algebra::{LaurentPoly, VarSet};
use crate::Result;

use super::amu::{a1_mu_product, a_mu_on, a_mu_trunc_on};
use super::partition::{MuVector, Partition};

/// `chi_lambda(x_1, ..., x_L)`, computed by exact division of the two
/// antisymmetric determinants.
pub fn chi(lambda: &Partition) -> Result<LaurentPoly> {
    let l = lambda.len();
    let vars = VarSet::xs(l);
    let rows: Vec<usize> = (0..l).collect();
    let num = a_mu_on(&vars, &rows, &lambda.mu());
    let den = a_mu_on(&vars, &rows, &MuVector::delta(l));
    num.divide_exact(&den)
}

/// `chi_lambda(x_1, ..., x_k, 1, ..., 1)` through the truncated
/// determinants `a^(k+1)_mu / a^(k+1)_delta`, over `x_1..x_k`.
pub fn chi_truncated(lambda: &Partition, k: usize) -> Result<LaurentPoly> {
    let l = lambda.len();
    if k > l {
        return Err(crate::Error::OutOfRange(format!("chi_truncated: k = {k}, L = {l}")));
    }
    let vars = VarSet::xs(k);
    let rows: Vec<usize> = (0..k).collect();
    let num = a_mu_trunc_on(&vars, &rows, &lambda.mu());
    let den = a_mu_trunc_on(&vars, &rows, &MuVector::delta(l));
    num.divide_exact(&den)
}

/// Dimension of the representation via the product formula
/// `prod mu_i/(2i-1)! * prod_{i<j}(mu_i^2 - mu_j^2)`; always a positive
/// integer, and equal to `chi_lambda` at all-ones.
pub fn dimension(lambda: &Partition) -> Rational {
    let mu = lambda.mu();
    let v = mu.values();
    let mut acc = Rational::from_integer(1.into());
    for (i, &m) in v.iter().enumerate() {
        acc *= rat_i(m) / factorial(2 * (i as u64 + 1) - 1);
    }
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= rat_i(v[i] * v[i] - v[j] * v[j]);
        }
    }
    acc
}

/// `phi_mu(z_1, ..., z_k) = a^(k+1)_mu(z_1..z_k) / a^(1)_mu` over the
/// listed variables of `vars`.
pub fn phi_mu_on(vars: &Arc<VarSet>, zvars: &[usize], mu: &MuVector) -> LaurentPoly {
    let det = a_mu_trunc_on(vars, zvars, mu);
    det.scale(&a1_mu_product(mu).recip())
}

/// Univariate `phi_mu(z)` over the single variable `z`.
pub fn phi_mu1(mu: &MuVector) -> LaurentPoly {
    let vars = VarSet::single("z");
    phi_mu_on(&vars, &[0], mu)
}

/// Closed form of `phi_delta(z) = (z+1)(z-1)^{2L-1} / (z^L (2L-1)!)`,
/// expanded as a Laurent polynomial over the given variable.
pub fn phi_delta_closed_form_on(vars: &Arc<VarSet>, zvar: usize, l: usize) -> LaurentPoly {
    let z = LaurentPoly::var_pow(vars, zvar, 1);
    let one = LaurentPoly::one(vars);
    let num = &(&z + &one) * &(&z - &one).pow(2 * l as u64 - 1);
    num.mul_monomial(
        &{
            let mut e = vec![0; vars.len()];
            e[zvar] = -(l as i64);
            e
        },
        &factorial(2 * l as u64 - 1).recip(),
    )
}

/// `phi_delta(z)` over the single variable `z`.
pub fn phi_delta_closed_form(l: usize) -> LaurentPoly {
    let vars = VarSet::single("z");
    phi_delta_closed_form_on(&vars, 0, l)
}

/// The separated polynomial `q_lambda(z) = phi_mu(z) / phi_delta(z)`,
/// over the listed variable. The division is exact; `q_lambda(1) = 1`.
pub fn q_poly_on(vars: &Arc<VarSet>, zvar: usize, lambda: &Partition) -> Result<LaurentPoly> {
    let l = lambda.len();
    let num = phi_mu_on(vars, &[zvar], &lambda.mu());
    let den = phi_mu_on(vars, &[zvar], &MuVector::delta(l));
    num.divide_exact(&den)
}

/// `q_lambda(z)` over the single variable `z`.
pub fn q_poly(lambda: &Partition) -> Result<LaurentPoly> {
    let vars = VarSet::single("z");
    q_poly_on(&vars, 0, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_i};
    use crate::characters::partition::partitions;

    fn zv() -> Arc<VarSet> {
        VarSet::single("z")
    }

    #[test]
    fn chi_of_zero_is_one() {
        for l in 1..=3 {
            let c = chi(&Partition::zero(l)).unwrap();
            assert_eq!(c, LaurentPoly::one(&VarSet::xs(l)));
        }
    }

    #[test]
    fn chi_single_box() {
        // L = 1, lambda = (1): (x^2 - x^-2)/(x - x^-1) = x + x^-1
        let c = chi(&Partition::new(vec![1]).unwrap()).unwrap();
        let v = VarSet::xs(1);
        assert_eq!(c, &LaurentPoly::var_pow(&v, 0, 1) + &LaurentPoly::var_pow(&v, 0, -1));
        // L = 2, lambda = (1,0): sum of x_i + x_i^-1
        let c = chi(&Partition::new(vec![1, 0]).unwrap()).unwrap();
        let v = VarSet::xs(2);
        let want = &(&LaurentPoly::var_pow(&v, 0, 1) + &LaurentPoly::var_pow(&v, 0, -1))
            + &(&LaurentPoly::var_pow(&v, 1, 1) + &LaurentPoly::var_pow(&v, 1, -1));
        assert_eq!(c, want);
    }

    #[test]
    fn chi_truncation_examples() {
        let lam = Partition::new(vec![1, 0]).unwrap();
        // k = 1: x + x^-1 + 2
        let t = chi_truncated(&lam, 1).unwrap();
        let v = VarSet::xs(1);
        let want = &(&LaurentPoly::var_pow(&v, 0, 1) + &LaurentPoly::var_pow(&v, 0, -1))
            + &LaurentPoly::constant(&v, rat_i(2));
        assert_eq!(t, want);
        // k = 0: the dimension, 24/6 = 4
        let d = chi_truncated(&lam, 0).unwrap();
        assert_eq!(d.as_constant().unwrap(), rat_i(4));
        // k = L: plain chi
        assert_eq!(chi_truncated(&lam, 2).unwrap(), chi(&lam).unwrap());
        assert!(chi_truncated(&lam, 3).is_err());
    }

    #[test]
    fn chi_truncated_agrees_with_eval_at_one() {
        for l in 1..=3usize {
            for lam in partitions(l, 2) {
                let full = chi(&lam).unwrap();
                for k in 0..=l {
                    let trunc = chi_truncated(&lam, k).unwrap();
                    let evald = full.eval_at_one(&(k..l).collect::<Vec<_>>());
                    let target = VarSet::xs(k);
                    assert_eq!(
                        evald.cast_to(&target).unwrap(),
                        trunc,
                        "lambda = {lam}, k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&Partition::zero(3)), rat_i(1));
        assert_eq!(dimension(&Partition::new(vec![1, 0]).unwrap()), rat_i(4));
        assert_eq!(dimension(&Partition::new(vec![1, 1]).unwrap()), rat_i(5));
    }

    #[test]
    fn phi_mu_examples() {
        let zvset = zv();
        let z = |m: i64| LaurentPoly::var_pow(&zvset, 0, m);
        // k = 0: a^(1)/a^(1) = 1
        let mu = MuVector::new(vec![3, 1]).unwrap();
        let p0 = phi_mu_on(&VarSet::empty(), &[], &mu);
        assert_eq!(p0.as_constant().unwrap(), rat_i(1));
        // mu = (2), L = 1: (z^2 - z^-2)/2
        let p = phi_mu1(&MuVector::new(vec![2]).unwrap());
        assert_eq!(p, (&z(2) - &z(-2)).scale(&rat(1, 2)));
        // mu = (3,1): (z^3 - z^-3)/24 - (z - z^-1)/8
        let p = phi_mu1(&mu);
        let want = &(&z(3) - &z(-3)).scale(&rat(1, 24)) - &(&z(1) - &z(-1)).scale(&rat(1, 8));
        assert_eq!(p, want);
    }

    #[test]
    fn phi_delta_closed_form_matches_definition() {
        let zvset = zv();
        let z = |m: i64| LaurentPoly::var_pow(&zvset, 0, m);
        // L = 1: z - z^-1
        assert_eq!(phi_delta_closed_form(1), &z(1) - &z(-1));
        for l in 1..=3usize {
            assert_eq!(
                phi_delta_closed_form(l),
                phi_mu1(&MuVector::delta(l)),
                "L = {l}"
            );
        }
    }

    #[test]
    fn q_poly_examples() {
        let zvset = zv();
        let z = |m: i64| LaurentPoly::var_pow(&zvset, 0, m);
        assert_eq!(q_poly(&Partition::zero(2)).unwrap(), LaurentPoly::one(&zvset));
        // L = 1, lambda = (1): (z + z^-1)/2
        let q = q_poly(&Partition::new(vec![1]).unwrap()).unwrap();
        assert_eq!(q, (&z(1) + &z(-1)).scale(&rat(1, 2)));
        // L = 2, lambda = (1,0): (z + z^-1 + 2)/4
        let q = q_poly(&Partition::new(vec![1, 0]).unwrap()).unwrap();
        let want = (&(&z(1) + &z(-1)) + &LaurentPoly::constant(&zvset, rat_i(2)))
            .scale(&rat(1, 4));
        assert_eq!(q, want);
    }

    #[test]
    fn q_at_one_is_one_and_inversion_invariant() {
        for l in 1..=3usize {
            for lam in partitions(l, 2) {
                let q = q_poly(&lam).unwrap();
                assert_eq!(q.eval_at_one(&[0]).as_constant().unwrap(), rat_i(1), "{lam}");
                assert_eq!(q.invert_var(0), q, "{lam}");
            }
        }
    }
}
