//! Differential operators acting on Laurent polynomials.
//!
//! Everything here is built from the Euler operator `D = x d/dx`, which acts
//! diagonally on Laurent monomials (`x^m -> m x^m`). Operator determinants in
//! commuting Euler operators therefore act monomial by monomial through the
//! scalar determinant of the exponents; the literal permutation expansion is
//! kept only as a small-size oracle.

use num_traits::{One, Zero};

use crate::algebra::rational::{rat_i, Rational};
use crate::algebra::{LaurentPoly, RationalFunction, VarSet};
use crate::characters::{a_mu_on, phi_mu_on, q_poly, q_poly_on, MuVector, Partition};
use crate::{Error, Result};

/// Elementary symmetric function `e_j` of the given values; `e_0 = 1`.
pub fn elementary_symmetric(vals: &[Rational], j: usize) -> Result<Rational> {
    if j > vals.len() {
        return Err(Error::OutOfRange(format!(
            "elementary_symmetric: j = {j}, n = {}",
            vals.len()
        )));
    }
    let mut e = vec![Rational::zero(); j + 1];
    e[0] = Rational::one();
    for v in vals {
        for m in (1..=j).rev() {
            let add = &e[m - 1] * v;
            e[m] += add;
        }
    }
    Ok(e[j].clone())
}

fn elementary_symmetric_i64(vals: &[i64], j: usize) -> Rational {
    let rs: Vec<Rational> = vals.iter().map(|&v| rat_i(v)).collect();
    elementary_symmetric(&rs, j).expect("j validated by caller")
}

/// One Euler derivative in the given variable.
pub fn euler_d(f: &LaurentPoly, var: usize) -> LaurentPoly {
    f.scale_by_exponent(|e| rat_i(e[var]))
}

/// An even power of the Euler operator in one variable, `D_{x_i}^{2p}`.
/// Acts diagonally: a monomial with exponent `m_i` is multiplied by
/// `m_i^{2p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMonomialAction {
    var: usize,
    half_power: u32,
}

impl EulerMonomialAction {
    /// `D_{var}^{2p}`.
    pub fn new(var: usize, p: u32) -> Self {
        EulerMonomialAction { var, half_power: p }
    }

    pub fn power(&self) -> u32 {
        2 * self.half_power
    }

    /// Apply by literally composing single Euler derivatives.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        let mut cur = f.clone();
        for _ in 0..self.power() {
            cur = euler_d(&cur, self.var);
        }
        cur
    }
}

/// `e_j(D^2)` over an explicit subset of variables, for polynomials that
/// carry spectator variables (such as `z`).
pub fn apply_e_j_of_d2_on(f: &LaurentPoly, vars_idx: &[usize], j: usize) -> Result<LaurentPoly> {
    if j > vars_idx.len() {
        return Err(Error::OutOfRange(format!(
            "apply_e_j_of_d2: j = {j}, L = {}",
            vars_idx.len()
        )));
    }
    Ok(f.scale_by_exponent(|e| {
        let sq: Vec<i64> = vars_idx.iter().map(|&i| e[i] * e[i]).collect();
        elementary_symmetric_i64(&sq, j)
    }))
}

/// `e_j(D_{x_1}^2, ..., D_{x_L}^2)` acting diagonally: each monomial with
/// exponents `m` is scaled by `e_j(m_1^2, ..., m_L^2)`.
pub fn apply_e_j_of_d2(f: &LaurentPoly, j: usize) -> Result<LaurentPoly> {
    let all: Vec<usize> = (0..f.vars().len()).collect();
    apply_e_j_of_d2_on(f, &all, j)
}

/// The Hamiltonian `H_j f = a_delta^{-1} e_j(D^2) (a_delta f)`. The final
/// division is exact precisely when `f` is Weyl-invariant; a
/// `NotDivisible` error means it was not.
pub fn hamiltonian_apply(j: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let l = f.vars().len();
    let rows: Vec<usize> = (0..l).collect();
    let a_delta = a_mu_on(f.vars(), &rows, &MuVector::delta(l));
    let scaled = apply_e_j_of_d2(&(&a_delta * f), j)?;
    scaled.divide_exact(&a_delta)
}

/// Eigenvalue `h_j(lambda) = e_j(mu_1^2, ..., mu_L^2)`.
pub fn eigenvalue(lambda: &Partition, j: usize) -> Result<Rational> {
    if j < 1 || j > lambda.len() {
        return Err(Error::OutOfRange(format!("eigenvalue: j = {j}, L = {}", lambda.len())));
    }
    let sq: Vec<i64> = lambda.mu().values().iter().map(|&m| m * m).collect();
    Ok(elementary_symmetric_i64(&sq, j))
}

/// The operator determinant `K_n = det[ D_{x_i}^{2(n-j)} ]` acting on the
/// first `n` variables. Entries commute, so on a monomial with exponents
/// `m` it multiplies by the Vandermonde `prod_{i<j} (m_i^2 - m_j^2)`.
pub fn k_operator_apply(f: &LaurentPoly, n: usize) -> LaurentPoly {
    assert!(n <= f.vars().len(), "k_operator_apply: n exceeds variable count");
    f.scale_by_exponent(|e| {
        let mut c = Rational::one();
        for i in 0..n {
            for j in i + 1..n {
                c *= rat_i(e[i] * e[i] - e[j] * e[j]);
            }
        }
        c
    })
}

/// Literal permutation expansion of `K_n`: `sum_sigma sgn(sigma)
/// prod_i D_{x_i}^{2(n - sigma(i))}`, with every Euler derivative applied
/// one step at a time. Independent oracle for `k_operator_apply`.
pub fn k_operator_permutation_oracle(f: &LaurentPoly, n: usize) -> LaurentPoly {
    assert!(n <= f.vars().len());
    let mut acc = LaurentPoly::zero(f.vars());
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut term = f.clone();
        for (i, &pi) in p.iter().enumerate() {
            // sigma(i) = pi + 1 in 1-based terms: apply D_{x_i}^{2(n - 1 - pi)}
            term = EulerMonomialAction::new(i, (n - 1 - pi) as u32).apply(&term);
        }
        if permutation_sign(p) {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    });
    acc
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// true for even permutations.
fn permutation_sign(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// Inverse of the k-step separation chain:
/// `S_k^{-1} f = sign * phi_delta(x_1..x_k)^{-1} K_k prod_{i<=k} phi_delta(x_i) f`,
/// where the sign exponent is `L(L-1)/2 + k(L+1) + (L-k)(L-k+3)/2`. The
/// last summand is forced by the k = 1 case, where `K_1` is the identity
/// and the whole operator must be too; expanding `K_k prod phi_mu(x_i)`
/// by Laplace over the numeric rows shows the same correction holds for
/// every k. `f` lives over `x_1..x_k`.
pub fn s_k_inverse_apply(f: &LaurentPoly, l: usize, k: usize) -> Result<LaurentPoly> {
    if k < 1 || k > l {
        return Err(Error::OutOfRange(format!("s_k_inverse_apply: k = {k}, L = {l}")));
    }
    assert_eq!(f.vars().len(), k, "s_k_inverse_apply: f must live over x_1..x_k");
    let vars = f.vars().clone();
    let delta = MuVector::delta(l);
    let mut g = f.clone();
    for i in 0..k {
        g = &g * &phi_mu_on(&vars, &[i], &delta);
    }
    let h = k_operator_apply(&g, k);
    let rows: Vec<usize> = (0..k).collect();
    let den = phi_mu_on(&vars, &rows, &delta);
    let q = h.divide_exact(&den)?;
    let s = l - k;
    let sign = (l * (l - 1) / 2 + k * (l + 1) + s * (s + 3) / 2) % 2;
    Ok(if sign == 1 { -&q } else { q })
}

/// Inverse separating operator on `L` variables (the `k = L` chain).
pub fn s_inverse_apply(f: &LaurentPoly, l: usize) -> Result<LaurentPoly> {
    s_k_inverse_apply(f, l, l)
}

/// `prod_{n} (D^2 - mu_n^2)` applied to a polynomial, diagonally in the
/// given variable.
pub fn apply_d2_minus_mu2_product(f: &LaurentPoly, var: usize, mu: &MuVector) -> LaurentPoly {
    f.scale_by_exponent(|e| {
        let m2 = e[var] * e[var];
        let mut c = Rational::one();
        for &mn in mu.values() {
            c *= rat_i(m2 - mn * mn);
        }
        c
    })
}

/// Annihilation of `q_lambda` through the conjugated polynomial identity:
/// `prod_n (D_z^2 - mu_n^2) (phi_delta(z) q_lambda(z)) = 0` exactly.
pub fn w_annihilates_poly_route(lambda: &Partition) -> Result<bool> {
    let l = lambda.len();
    let vars = VarSet::single("z");
    let q = q_poly_on(&vars, 0, lambda)?;
    let phi_delta = phi_mu_on(&vars, &[0], &MuVector::delta(l));
    let p = &phi_delta * &q;
    Ok(apply_d2_minus_mu2_product(&p, 0, &lambda.mu()).is_zero())
}

/// The same annihilation through the operator `Z = D_z + g(z)` with
/// `g = (Lz^2 + 2Lz - 2z + L)/(z^2 - 1)`, applied to `q_lambda` as a
/// rational function: `prod_n (Z^2 - mu_n^2) q_lambda = 0` away from
/// `z = +-1`.
pub fn w_annihilates_ratfunc_route(lambda: &Partition) -> Result<bool> {
    let l = lambda.len() as i64;
    let vars = VarSet::single("z");
    let z = LaurentPoly::var_pow(&vars, 0, 1);
    let z2 = LaurentPoly::var_pow(&vars, 0, 2);
    let one = LaurentPoly::one(&vars);
    // (L z^2 + (2L-2) z + L) / (z^2 - 1)
    let num = &(&z2.scale(&rat_i(l)) + &z.scale(&rat_i(2 * l - 2))) + &one.scale(&rat_i(l));
    let g = RationalFunction::new(num, &z2 - &one);

    let zop = |u: &RationalFunction| -> RationalFunction {
        u.euler_derivative().add(&g.mul(u))
    };

    let mut v = RationalFunction::from_poly(q_poly(lambda)?);
    for &mn in lambda.mu().values() {
        v = zop(&zop(&v)).sub(&v.scale(&rat_i(mn * mn)));
    }
    Ok(v.is_zero())
}

/// Both annihilation routes must agree and hold.
pub fn w_annihilation_check(lambda: &Partition) -> Result<bool> {
    Ok(w_annihilates_poly_route(lambda)? && w_annihilates_ratfunc_route(lambda)?)
}

/// Site weights for the factorised Hamiltonian; they must sum to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    c: Vec<Rational>,
}

impl WeightVector {
    pub fn new(c: Vec<Rational>) -> Result<Self> {
        let sum: Rational = c.iter().cloned().sum();
        if !sum.is_one() {
            return Err(Error::BadWeights(crate::algebra::rational::to_string_frac(&sum)));
        }
        Ok(WeightVector { c })
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.c
    }
}

/// `prod_{i=1}^L q_lambda(x_i)` over `x_1..x_L`.
pub fn q_product(lambda: &Partition) -> Result<LaurentPoly> {
    let l = lambda.len();
    let vars = VarSet::xs(l);
    let mut acc = LaurentPoly::one(&vars);
    for i in 0..l {
        acc = &acc * &q_poly_on(&vars, i, lambda)?;
    }
    Ok(acc)
}

/// Per-site data for the factorised Hamiltonian: the factorised
/// eigenfunction `prod q_lambda(x_k)` and each `W_i` applied to it, where
/// `W_i f = phi_delta(x_i)^{-1} prod_n (D_{x_i}^2 - mu_n^2) phi_delta(x_i) f`.
pub struct FactorizedSites {
    pub prod_q: LaurentPoly,
    pub w_applied: Vec<LaurentPoly>,
}

pub fn factorized_sites(lambda: &Partition) -> Result<FactorizedSites> {
    let l = lambda.len();
    let vars = VarSet::xs(l);
    let mu = lambda.mu();
    let delta = MuVector::delta(l);
    let prod_q = q_product(lambda)?;
    let w_applied: Vec<LaurentPoly> = (0..l)
        .map(|i| {
            let phi_i = phi_mu_on(&vars, &[i], &delta);
            let conj = apply_d2_minus_mu2_product(&(&phi_i * &prod_q), i, &mu);
            conj.divide_exact(&phi_i)
        })
        .collect::<Result<_>>()?;
    Ok(FactorizedSites { prod_q, w_applied })
}

impl FactorizedSites {
    /// `H~_j = sum_i c_i (W_i + h_j)` applied to `prod q`.
    pub fn apply(&self, lambda: &Partition, j: usize, weights: &WeightVector) -> Result<LaurentPoly> {
        let l = lambda.len();
        if weights.len() != l {
            return Err(Error::Invalid {
                what: "weights",
                why: format!("need {l} weights, got {}", weights.len()),
            });
        }
        let h_j = eigenvalue(lambda, j)?;
        let mut acc = LaurentPoly::zero(self.prod_q.vars());
        for (i, c_i) in weights.values().iter().enumerate() {
            let site = &self.w_applied[i] + &self.prod_q.scale(&h_j);
            acc = &acc + &site.scale(c_i);
        }
        Ok(acc)
    }
}

/// Apply the factorised Hamiltonian `H~_j = sum_i c_i (W_i + h_j)` to
/// `prod q_lambda(x_k)`, realising each `W_i` through conjugation by
/// `phi_delta(x_i)`. Returns the resulting polynomial.
pub fn factorized_hamiltonian_apply(
    lambda: &Partition,
    j: usize,
    weights: &WeightVector,
) -> Result<LaurentPoly> {
    factorized_sites(lambda)?.apply(lambda, j, weights)
}

/// True iff `H~_j prod q = h_j prod q` exactly for the given weights.
pub fn factorized_hamiltonian_check(
    lambda: &Partition,
    j: usize,
    weights: &WeightVector,
) -> Result<bool> {
    let got = factorized_hamiltonian_apply(lambda, j, weights)?;
    let h_j = eigenvalue(lambda, j)?;
    let want = q_product(lambda)?.scale(&h_j);
    Ok(got == want)
}
