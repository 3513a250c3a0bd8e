//! The antisymmetric determinants `a_mu`, their truncations `a^(k)_mu`, and
//! the product-form identities they satisfy.
//!
//! `a_mu(x_1..x_L) = det[ x_i^{mu_j} - x_i^{-mu_j} ]`. The truncated
//! `a^(k)_mu(x_1..x_{k-1})` keeps rows `i < k` as above and replaces rows
//! `i >= k` by the numbers `mu_j^{2(L-i)+1}`; `k = 1` is a pure number and
//! `k = L+1` recovers `a_mu`.

use std::sync::Arc;

use num_traits::One;

use crate::algebra::matrix::det_poly_matrix;
use crate::algebra::rational::{factorial, rat_i, Rational};
use crate::algebra::{LaurentPoly, VarSet};
use crate::{Error, Result};

use super::partition::MuVector;

fn sinh_row_entry(vars: &Arc<VarSet>, var: usize, mu_j: i64) -> LaurentPoly {
    &LaurentPoly::var_pow(vars, var, mu_j) - &LaurentPoly::var_pow(vars, var, -mu_j)
}

/// `a_mu` with rows taken over the listed variables of `vars`.
pub fn a_mu_on(vars: &Arc<VarSet>, row_vars: &[usize], mu: &MuVector) -> LaurentPoly {
    assert_eq!(row_vars.len(), mu.len(), "a_mu: need one variable per row");
    let m: Vec<Vec<LaurentPoly>> = row_vars
        .iter()
        .map(|&v| mu.values().iter().map(|&mj| sinh_row_entry(vars, v, mj)).collect())
        .collect();
    det_poly_matrix(vars, &m)
}

/// `a_mu(x_1, ..., x_L)`.
pub fn a_mu(mu: &MuVector) -> LaurentPoly {
    let vars = VarSet::xs(mu.len());
    let rows: Vec<usize> = (0..mu.len()).collect();
    a_mu_on(&vars, &rows, mu)
}

/// Truncated determinant with polynomial rows over `row_vars` (length
/// `k - 1`) and numeric rows below.
pub fn a_mu_trunc_on(vars: &Arc<VarSet>, row_vars: &[usize], mu: &MuVector) -> LaurentPoly {
    let l = mu.len();
    let k = row_vars.len() + 1;
    assert!(k <= l + 1, "a_mu_trunc: k out of range");
    let mut m: Vec<Vec<LaurentPoly>> = Vec::with_capacity(l);
    for &v in row_vars {
        m.push(mu.values().iter().map(|&mj| sinh_row_entry(vars, v, mj)).collect());
    }
    for i in k..=l {
        let p = 2 * (l as i64 - i as i64) + 1;
        m.push(
            mu.values()
                .iter()
                .map(|&mj| LaurentPoly::constant(vars, rat_i(mj).pow(p as i32)))
                .collect(),
        );
    }
    det_poly_matrix(vars, &m)
}

/// `a^(k)_mu(x_1, ..., x_{k-1})` over the canonical variables, `1 <= k <= L+1`.
pub fn a_mu_trunc(mu: &MuVector, k: usize) -> Result<LaurentPoly> {
    if k < 1 || k > mu.len() + 1 {
        return Err(Error::OutOfRange(format!("a_mu_trunc: k = {k}, L = {}", mu.len())));
    }
    let vars = VarSet::xs(k - 1);
    let rows: Vec<usize> = (0..k - 1).collect();
    Ok(a_mu_trunc_on(&vars, &rows, mu))
}

/// Product form of the pure number `a^(1)_mu`:
/// `prod_i mu_i * prod_{i<j} (mu_i^2 - mu_j^2)`.
pub fn a1_mu_product(mu: &MuVector) -> Rational {
    let v = mu.values();
    let mut acc = Rational::one();
    for &m in v {
        acc *= rat_i(m);
    }
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= rat_i(v[i] * v[i] - v[j] * v[j]);
        }
    }
    acc
}

/// The same product with symbolic entries: `prod u_i * prod_{i<j}(u_i^2 - u_j^2)`
/// over the listed variables.
pub fn a1_product_symbolic(vars: &Arc<VarSet>, u_vars: &[usize]) -> LaurentPoly {
    let mut acc = LaurentPoly::one(vars);
    for &u in u_vars {
        acc = &acc * &LaurentPoly::var_pow(vars, u, 1);
    }
    for i in 0..u_vars.len() {
        for j in i + 1..u_vars.len() {
            let d = &LaurentPoly::var_pow(vars, u_vars[i], 2)
                - &LaurentPoly::var_pow(vars, u_vars[j], 2);
            acc = &acc * &d;
        }
    }
    acc
}

/// Row expansion of `a^(2)_mu(z)`: a signed sum of `z^{mu_k} - z^{-mu_k}`
/// weighted by the complementary products.
pub fn a2_mu_expansion_on(vars: &Arc<VarSet>, zvar: usize, mu: &MuVector) -> LaurentPoly {
    let v = mu.values();
    let l = v.len();
    let mut acc = LaurentPoly::zero(vars);
    for k in 0..l {
        let mut c = Rational::one();
        for (i, &vi) in v.iter().enumerate() {
            if i != k {
                c *= rat_i(vi);
            }
        }
        for i in 0..l {
            for j in i + 1..l {
                if i != k && j != k {
                    c *= rat_i(v[i] * v[i] - v[j] * v[j]);
                }
            }
        }
        if k % 2 == 1 {
            c = -c;
        }
        acc = &acc + &sinh_row_entry(vars, zvar, v[k]).scale(&c);
    }
    acc
}

/// `a^(2)_mu(z)` over the single variable `z`.
pub fn a2_mu_expansion(mu: &MuVector) -> LaurentPoly {
    let vars = VarSet::single("z");
    a2_mu_expansion_on(&vars, 0, mu)
}

/// Type-C Weyl denominator product over the listed variables:
/// `prod x_i^{i-L} prod_{i<j} (x_i - x_j) prod_{i<=j} (x_i - x_j^{-1})`.
pub fn weyl_denominator_product_on(vars: &Arc<VarSet>, row_vars: &[usize]) -> LaurentPoly {
    let l = row_vars.len();
    let mut acc = LaurentPoly::one(vars);
    for (i, &v) in row_vars.iter().enumerate() {
        acc = &acc * &LaurentPoly::var_pow(vars, v, (i + 1) as i64 - l as i64);
    }
    for i in 0..l {
        for j in i + 1..l {
            let d = &LaurentPoly::var_pow(vars, row_vars[i], 1)
                - &LaurentPoly::var_pow(vars, row_vars[j], 1);
            acc = &acc * &d;
        }
    }
    for i in 0..l {
        for j in i..l {
            let d = &LaurentPoly::var_pow(vars, row_vars[i], 1)
                - &LaurentPoly::var_pow(vars, row_vars[j], -1);
            acc = &acc * &d;
        }
    }
    acc
}

/// The Weyl denominator product over `x_1, ..., x_L`; equals `a_mu(delta)`.
pub fn weyl_denominator_product(l: usize) -> LaurentPoly {
    let vars = VarSet::xs(l);
    let rows: Vec<usize> = (0..l).collect();
    weyl_denominator_product_on(&vars, &rows)
}

/// Product form of the truncated staircase determinant `a^(k)_delta`:
/// factorial prefactor times `(x_i - 1)^{2(L-k+1)}`-weighted type-C factors.
pub fn a_delta_trunc_product(l: usize, k: usize) -> Result<LaurentPoly> {
    if k < 1 || k > l + 1 {
        return Err(Error::OutOfRange(format!("a_delta_trunc_product: k = {k}, L = {l}")));
    }
    let vars = VarSet::xs(k - 1);
    let mut pref = Rational::one();
    for i in 0..=(l as i64 - k as i64) {
        pref *= factorial((2 * i + 1) as u64);
    }
    let mut acc = LaurentPoly::constant(&vars, pref);
    let one = LaurentPoly::one(&vars);
    for i in 0..k - 1 {
        acc = &acc * &LaurentPoly::var_pow(&vars, i, (i + 1) as i64 - l as i64);
        let xm1 = &LaurentPoly::var_pow(&vars, i, 1) - &one;
        acc = &acc * &xm1.pow(2 * (l + 1 - k) as u64);
    }
    for i in 0..k - 1 {
        for j in i + 1..k - 1 {
            let d = &LaurentPoly::var_pow(&vars, i, 1) - &LaurentPoly::var_pow(&vars, j, 1);
            acc = &acc * &d;
        }
    }
    for i in 0..k - 1 {
        for j in i..k - 1 {
            let d = &LaurentPoly::var_pow(&vars, i, 1) - &LaurentPoly::var_pow(&vars, j, -1);
            acc = &acc * &d;
        }
    }
    Ok(acc)
}

/// `a^(1)_delta = prod_{i=1}^{L-1} (2i+1)!`.
pub fn a1_delta(l: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 1..l as u64 {
        acc *= factorial(2 * i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::partition::{partitions, Partition};

    #[test]
    fn a_mu_single_variable() {
        let mu = MuVector::new(vec![1]).unwrap();
        let v = VarSet::xs(1);
        let want = &LaurentPoly::var_pow(&v, 0, 1) - &LaurentPoly::var_pow(&v, 0, -1);
        assert_eq!(a_mu(&mu), want);
        let mu2 = MuVector::new(vec![2]).unwrap();
        let want2 = &LaurentPoly::var_pow(&v, 0, 2) - &LaurentPoly::var_pow(&v, 0, -2);
        assert_eq!(a_mu(&mu2), want2);
    }

    #[test]
    fn a_mu_two_rows_expansion() {
        let mu = MuVector::new(vec![2, 1]).unwrap();
        let v = VarSet::xs(2);
        let s = |i: usize, m: i64| {
            &LaurentPoly::var_pow(&v, i, m) - &LaurentPoly::var_pow(&v, i, -m)
        };
        let want = &(&s(0, 2) * &s(1, 1)) - &(&s(0, 1) * &s(1, 2));
        assert_eq!(a_mu(&mu), want);
        // and this equals the Weyl denominator product for L = 2
        assert_eq!(a_mu(&mu), weyl_denominator_product(2));
    }

    #[test]
    fn truncation_examples() {
        let mu31 = MuVector::new(vec![3, 1]).unwrap();
        // k = 1: det [[27, 3], [1, 1]] = 24
        let t1 = a_mu_trunc(&mu31, 1).unwrap();
        assert_eq!(t1.as_constant().unwrap(), rat_i(24));
        assert_eq!(a1_mu_product(&mu31), rat_i(24));

        // k = 2, mu = (2,1): (x^2 - x^-2) - 2(x - x^-1)
        let mu21 = MuVector::new(vec![2, 1]).unwrap();
        let t2 = a_mu_trunc(&mu21, 2).unwrap();
        let v = VarSet::xs(1);
        let want = &(&LaurentPoly::var_pow(&v, 0, 2) - &LaurentPoly::var_pow(&v, 0, -2))
            - &(&LaurentPoly::var_pow(&v, 0, 1) - &LaurentPoly::var_pow(&v, 0, -1))
                .scale(&rat_i(2));
        assert_eq!(t2, want);

        // k = L+1 degenerates to a_mu
        let t3 = a_mu_trunc(&mu21, 3).unwrap();
        assert_eq!(t3, a_mu(&mu21));

        assert!(a_mu_trunc(&mu21, 0).is_err());
        assert!(a_mu_trunc(&mu21, 4).is_err());
    }

    #[test]
    fn a1_products() {
        assert_eq!(a1_mu_product(&MuVector::new(vec![1]).unwrap()), rat_i(1));
        // 3*1*(9-1) = 24
        assert_eq!(a1_mu_product(&MuVector::new(vec![3, 1]).unwrap()), rat_i(24));
        // 6*(9-4)(9-1)(4-1) = 720 = a^(1)_delta for L = 3
        assert_eq!(a1_mu_product(&MuVector::new(vec![3, 2, 1]).unwrap()), rat_i(720));
        assert_eq!(a1_delta(3), rat_i(720));
        assert_eq!(a1_delta(2), rat_i(6));
        assert_eq!(a1_delta(1), rat_i(1));
    }

    #[test]
    fn a2_expansion_matches_truncation() {
        let v = VarSet::single("z");
        let z = |m: i64| LaurentPoly::var_pow(&v, 0, m);
        // mu = (3,1): (z^3 - z^-3) - 3(z - z^-1)
        let mu31 = MuVector::new(vec![3, 1]).unwrap();
        let want = &(&z(3) - &z(-3)) - &(&z(1) - &z(-1)).scale(&rat_i(3));
        assert_eq!(a2_mu_expansion(&mu31), want);
        // mu = (2,1): (z^2 - z^-2) - 2(z - z^-1)
        let mu21 = MuVector::new(vec![2, 1]).unwrap();
        let want = &(&z(2) - &z(-2)) - &(&z(1) - &z(-1)).scale(&rat_i(2));
        assert_eq!(a2_mu_expansion(&mu21), want);
        // mu = (1): single term
        let mu1 = MuVector::new(vec![1]).unwrap();
        assert_eq!(a2_mu_expansion(&mu1), &z(1) - &z(-1));
        // cross-check against the determinant route on a sweep
        for l in 1..=3usize {
            for lam in partitions(l, 2) {
                let mu = lam.mu();
                let det = a_mu_trunc_on(&v, &[0], &mu);
                assert_eq!(det, a2_mu_expansion(&mu), "mu = {:?}", mu.values());
            }
        }
    }

    #[test]
    fn weyl_denominator_equals_a_delta() {
        for l in 1..=3usize {
            let delta = MuVector::delta(l);
            assert_eq!(a_mu(&delta), weyl_denominator_product(l), "L = {l}");
        }
    }

    #[test]
    fn truncated_staircase_products() {
        // L=2, k=1: 3! = 6
        assert_eq!(
            a_delta_trunc_product(2, 1).unwrap().as_constant().unwrap(),
            rat_i(6)
        );
        // L=3, k=1: 3! 5! = 720
        assert_eq!(
            a_delta_trunc_product(3, 1).unwrap().as_constant().unwrap(),
            rat_i(720)
        );
        // L=2, k=2: x^-1 (x-1)^2 (x - x^-1), compared against the determinant
        let got = a_delta_trunc_product(2, 2).unwrap();
        let v = VarSet::xs(1);
        let x = LaurentPoly::var_pow(&v, 0, 1);
        let xm = LaurentPoly::var_pow(&v, 0, -1);
        let want = &(&xm * &(&x - &LaurentPoly::one(&v)).pow(2)) * &(&x - &xm);
        assert_eq!(got, want);
        assert_eq!(got, a_mu_trunc(&MuVector::delta(2), 2).unwrap());
        // full agreement across k for small L
        for l in 1..=3usize {
            for k in 1..=l + 1 {
                assert_eq!(
                    a_delta_trunc_product(l, k).unwrap(),
                    a_mu_trunc(&MuVector::delta(l), k).unwrap(),
                    "L = {l}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn antisymmetry_under_swap_and_inversion() {
        let lam = Partition::new(vec![2, 1, 0]).unwrap();
        let a = a_mu(&lam.mu());
        for i in 0..2 {
            assert_eq!(a.swap_vars(i, i + 1), -&a);
        }
        for i in 0..3 {
            assert_eq!(a.invert_var(i), -&a);
        }
    }
}
