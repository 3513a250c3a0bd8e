//! The formal integration calculus.
//!
//! Integrands are Laurent polynomials (or eps-series of them) over an
//! extended variable set holding the `x`s, the integration variables
//! `y_i`, `t_i`, `w`, and the spectral variable `z`. Every operation here
//! eliminates one variable by a per-monomial linear map:
//!
//! - the P-functional sends `t^m -> 1/m` and is undefined on constant terms;
//! - the dlog integral sends `y^m -> (upper^m - lower^m)/m` for monomial
//!   bounds, rejecting constant terms (they would produce logarithms);
//! - the w-integral is the dlog integral from 1.
//!
//! A constant-term error always signals a violated exponent-nonvanishing
//! assumption upstream (e.g. coincident `mu` values), never a fallthrough.

use crate::algebra::rational::{pow_signed, rat_i, Rational};
use crate::algebra::{EpsSeries, LaurentPoly};
use crate::{Error, Result};

/// Require a single-term image/bound not involving `var`; return its
/// coefficient and exponent vector.
fn monomial_parts(m: &LaurentPoly, var: usize) -> Result<(&Rational, &[i64])> {
    let mut it = m.terms();
    match (it.next(), it.next()) {
        (Some((e, c)), None) if e[var] == 0 => Ok((c, e)),
        _ => Err(Error::NotMonomial),
    }
}

/// `sum c_m var^m -> sum c_m / m`, eliminating `var`. The coefficient of
/// `var^0` must vanish.
pub fn p_functional(f: &LaurentPoly, var: usize) -> Result<LaurentPoly> {
    let mut out = Vec::with_capacity(f.num_terms());
    for (e, c) in f.terms() {
        let m = e[var];
        if m == 0 {
            return Err(Error::ConstantTerm {
                op: "p_functional",
                var: f.vars().name(var).to_string(),
            });
        }
        let mut ne = e.clone();
        ne[var] = 0;
        out.push((ne, c / rat_i(m)));
    }
    Ok(LaurentPoly::from_terms(f.vars(), out))
}

/// `var^m -> (upper^m - lower^m)/m` for monomial bounds; eliminates `var`.
pub fn dlog_integral(
    f: &LaurentPoly,
    var: usize,
    lower: &LaurentPoly,
    upper: &LaurentPoly,
) -> Result<LaurentPoly> {
    let (lc, le) = monomial_parts(lower, var)?;
    let (uc, ue) = monomial_parts(upper, var)?;
    let mut out = Vec::with_capacity(2 * f.num_terms());
    for (e, c) in f.terms() {
        let m = e[var];
        if m == 0 {
            return Err(Error::ConstantTerm {
                op: "dlog_integral",
                var: f.vars().name(var).to_string(),
            });
        }
        let scale = c / rat_i(m);
        let mut up: Vec<i64> = e.iter().zip(ue).map(|(a, b)| a + m * b).collect();
        up[var] = 0;
        out.push((up, &scale * &pow_signed(uc, m)));
        let mut lo: Vec<i64> = e.iter().zip(le).map(|(a, b)| a + m * b).collect();
        lo[var] = 0;
        out.push((lo, -(&scale * &pow_signed(lc, m))));
    }
    Ok(LaurentPoly::from_terms(f.vars(), out))
}

/// `var^m -> (upper^m - 1)/m`: the dlog integral from 1.
pub fn w_integral(f: &LaurentPoly, var: usize, upper: &LaurentPoly) -> Result<LaurentPoly> {
    let one = LaurentPoly::one(f.vars());
    dlog_integral(f, var, &one, upper)
}

/// Replace `var` by `image * exp(eps * eps_shift)` inside an eps-series:
/// `var^m` becomes `image^m * exp(eps * eps_shift * m)`, the exponential
/// expanded up to the series order.
pub fn substitute_monomial_eps(
    f: &EpsSeries,
    var: usize,
    image: &LaurentPoly,
    eps_shift: i64,
) -> Result<EpsSeries> {
    let order = f.order();
    let vars = f.vars().clone();
    let (ic, ie) = monomial_parts(image, var)?;
    let mut coeffs: Vec<Vec<(Vec<i64>, Rational)>> = vec![Vec::new(); order + 1];
    for d in 0..=order {
        for (e, c) in f.coeff(d).terms() {
            let m = e[var];
            let mut base: Vec<i64> = e.iter().zip(ie).map(|(a, b)| a + m * b).collect();
            base[var] = 0;
            let base_c = c * pow_signed(ic, m);
            // exp(eps * shift * m) spreads the term upward in eps-order
            let s = rat_i(eps_shift * m);
            let mut factor = Rational::from_integer(1.into());
            for r in 0..=(order - d) {
                if r > 0 {
                    factor = factor * &s / rat_i(r as i64);
                }
                coeffs[d + r].push((base.clone(), &base_c * &factor));
            }
        }
    }
    let polys: Vec<LaurentPoly> =
        coeffs.into_iter().map(|ts| LaurentPoly::from_terms(&vars, ts)).collect();
    Ok(EpsSeries::from_coeffs(polys))
}

/// dlog integral whose upper bound carries an `exp(eps * upper_eps_shift)`
/// factor: `var^m -> (upper^m exp(eps m shift) - lower^m)/m`.
pub fn dlog_integral_eps(
    f: &EpsSeries,
    var: usize,
    lower: &LaurentPoly,
    upper: &LaurentPoly,
    upper_eps_shift: i64,
) -> Result<EpsSeries> {
    let order = f.order();
    let vars = f.vars().clone();
    let (lc, le) = monomial_parts(lower, var)?;
    let (uc, ue) = monomial_parts(upper, var)?;
    let mut coeffs: Vec<Vec<(Vec<i64>, Rational)>> = vec![Vec::new(); order + 1];
    for d in 0..=order {
        for (e, c) in f.coeff(d).terms() {
            let m = e[var];
            if m == 0 {
                return Err(Error::ConstantTerm {
                    op: "dlog_integral",
                    var: vars.name(var).to_string(),
                });
            }
            let scale = c / rat_i(m);
            // lower bound: stays at this eps-order
            let mut lo: Vec<i64> = e.iter().zip(le).map(|(a, b)| a + m * b).collect();
            lo[var] = 0;
            coeffs[d].push((lo, -(&scale * &pow_signed(lc, m))));
            // upper bound: exp factor spreads upward
            let mut up: Vec<i64> = e.iter().zip(ue).map(|(a, b)| a + m * b).collect();
            up[var] = 0;
            let up_c = &scale * &pow_signed(uc, m);
            let s = rat_i(upper_eps_shift * m);
            let mut factor = Rational::from_integer(1.into());
            for r in 0..=(order - d) {
                if r > 0 {
                    factor = factor * &s / rat_i(r as i64);
                }
                coeffs[d + r].push((up.clone(), &up_c * &factor));
            }
        }
    }
    let polys: Vec<LaurentPoly> =
        coeffs.into_iter().map(|ts| LaurentPoly::from_terms(&vars, ts)).collect();
    Ok(EpsSeries::from_coeffs(polys))
}

/// One eliminating step of an integration plan.
#[derive(Debug, Clone)]
pub enum IntegrationStep {
    /// Unconditional delta-kernel substitution `var -> image`.
    DeltaSubstitute { var: usize, image: LaurentPoly },
    /// `int_{lower}^{upper} d var / var`.
    DlogIntegrate { var: usize, lower: LaurentPoly, upper: LaurentPoly },
    /// The P-functional over `var`.
    PFunctional { var: usize },
    /// `int_1^{upper} d var / var`.
    WIntegrate { var: usize, upper: LaurentPoly },
}

impl IntegrationStep {
    fn var(&self) -> usize {
        match self {
            IntegrationStep::DeltaSubstitute { var, .. }
            | IntegrationStep::DlogIntegrate { var, .. }
            | IntegrationStep::PFunctional { var }
            | IntegrationStep::WIntegrate { var, .. } => *var,
        }
    }
}

/// An ordered list of eliminating steps. Each variable is eliminated by
/// exactly one step, and once eliminated it may not reappear in later
/// bounds or images.
#[derive(Debug, Clone)]
pub struct IntegrationPlan {
    steps: Vec<IntegrationStep>,
}

impl IntegrationPlan {
    pub fn new(steps: Vec<IntegrationStep>) -> Result<Self> {
        let mut seen = Vec::new();
        for s in &steps {
            let v = s.var();
            if seen.contains(&v) {
                return Err(Error::Invalid {
                    what: "integration plan",
                    why: format!("variable index {v} eliminated twice"),
                });
            }
            // bounds and images of this step may not involve already
            // eliminated variables
            let touches: Vec<&LaurentPoly> = match s {
                IntegrationStep::DeltaSubstitute { image, .. } => vec![image],
                IntegrationStep::DlogIntegrate { lower, upper, .. } => vec![lower, upper],
                IntegrationStep::WIntegrate { upper, .. } => vec![upper],
                IntegrationStep::PFunctional { .. } => vec![],
            };
            for p in touches {
                for (e, _) in p.terms() {
                    for &dead in &seen {
                        if e[dead] != 0 {
                            return Err(Error::Invalid {
                                what: "integration plan",
                                why: format!(
                                    "step over variable index {v} references eliminated index {dead}"
                                ),
                            });
                        }
                    }
                }
            }
            seen.push(v);
        }
        Ok(IntegrationPlan { steps })
    }

    pub fn steps(&self) -> &[IntegrationStep] {
        &self.steps
    }

    /// Run all steps on a Laurent polynomial integrand.
    pub fn run(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let mut cur = f.clone();
        for s in &self.steps {
            cur = match s {
                IntegrationStep::DeltaSubstitute { var, image } => {
                    cur.substitute_monomial(*var, image)?
                }
                IntegrationStep::DlogIntegrate { var, lower, upper } => {
                    dlog_integral(&cur, *var, lower, upper)?
                }
                IntegrationStep::PFunctional { var } => p_functional(&cur, *var)?,
                IntegrationStep::WIntegrate { var, upper } => w_integral(&cur, *var, upper)?,
            };
            debug_assert!(
                cur.terms().all(|(e, _)| e[s.var()] == 0),
                "eliminated variable reappeared"
            );
        }
        Ok(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::VarSet;

    #[test]
    fn p_functional_values() {
        let v = VarSet::single("t");
        // 2 t^3 - 5 t^-2 -> 2/3 + 5/2 = 19/6
        let f = &LaurentPoly::var_pow(&v, 0, 3).scale(&rat_i(2))
            - &LaurentPoly::var_pow(&v, 0, -2).scale(&rat_i(5));
        let got = p_functional(&f, 0).unwrap();
        assert_eq!(got.as_constant().unwrap(), rat(19, 6));
        // constant term errors
        let g = LaurentPoly::constant(&v, rat_i(7));
        assert!(matches!(p_functional(&g, 0), Err(Error::ConstantTerm { .. })));
    }

    #[test]
    fn p_functional_with_carried_factor() {
        // t^(mu_j + mu_r) * g -> g/(mu_j + mu_r) with g free of t
        let v = VarSet::shared(["t", "x"]);
        let f = LaurentPoly::monomial(&v, rat_i(3), vec![5, 2]); // 3 t^5 x^2
        let got = p_functional(&f, 0).unwrap();
        assert_eq!(got, LaurentPoly::monomial(&v, rat(3, 5), vec![0, 2]));
    }

    #[test]
    fn dlog_integral_power_rule() {
        // y^3 from t*x1 to t*x2 -> t^3 (x2^3 - x1^3)/3
        let v = VarSet::shared(["y", "t", "x1", "x2"]);
        let f = LaurentPoly::var_pow(&v, 0, 3);
        let lower = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 1, 0]);
        let upper = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 0, 1]);
        let got = dlog_integral(&f, 0, &lower, &upper).unwrap();
        let want = &LaurentPoly::monomial(&v, rat(1, 3), vec![0, 3, 0, 3])
            - &LaurentPoly::monomial(&v, rat(1, 3), vec![0, 3, 3, 0]);
        assert_eq!(got, want);
        // y^0 errors
        let g = LaurentPoly::monomial(&v, rat_i(1), vec![0, 0, 1, 0]);
        assert!(matches!(
            dlog_integral(&g, 0, &lower, &upper),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn dlog_integral_difference_pattern() {
        // y^(mu_j - mu_r): bounds (t x1, t x2) give
        // t^(mu_j-mu_r) (x2^(mu_j-mu_r) - x1^(mu_j-mu_r)) / (mu_j - mu_r)
        let v = VarSet::shared(["y", "t", "x1", "x2"]);
        let d = 3 - 1; // mu_j - mu_r
        let f = LaurentPoly::var_pow(&v, 0, d);
        let lower = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 1, 0]);
        let upper = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 0, 1]);
        let got = dlog_integral(&f, 0, &lower, &upper).unwrap();
        let want = (&LaurentPoly::monomial(&v, rat_i(1), vec![0, d, 0, d])
            - &LaurentPoly::monomial(&v, rat_i(1), vec![0, d, d, 0]))
            .scale(&rat(1, d));
        assert_eq!(got, want);
    }

    #[test]
    fn w_integral_values() {
        let v = VarSet::shared(["w", "z"]);
        // w^2 + w^-2, upper z -> (z^2 - z^-2)/2
        let f = &LaurentPoly::var_pow(&v, 0, 2) + &LaurentPoly::var_pow(&v, 0, -2);
        let upper = LaurentPoly::var_pow(&v, 1, 1);
        let got = w_integral(&f, 0, &upper).unwrap();
        let want = (&LaurentPoly::var_pow(&v, 1, 2) - &LaurentPoly::var_pow(&v, 1, -2))
            .scale(&rat(1, 2));
        assert_eq!(got, want);
        // w^m -> (z^m - 1)/m
        let g = LaurentPoly::var_pow(&v, 0, 5);
        let got = w_integral(&g, 0, &upper).unwrap();
        let want = (&LaurentPoly::var_pow(&v, 1, 5) - &LaurentPoly::one(&v)).scale(&rat(1, 5));
        assert_eq!(got, want);
        // constants error
        let c = LaurentPoly::one(&v);
        assert!(matches!(w_integral(&c, 0, &upper), Err(Error::ConstantTerm { .. })));
    }

    #[test]
    fn eps_substitution_spreads_orders() {
        // y -> x * exp(eps), applied to y^2: x^2 (1 + 2 eps + 2 eps^2)
        let v = VarSet::shared(["y", "x"]);
        let f = EpsSeries::from_poly(&LaurentPoly::var_pow(&v, 0, 2), 2);
        let image = LaurentPoly::var_pow(&v, 1, 1);
        let got = substitute_monomial_eps(&f, 0, &image, 1).unwrap();
        let x2 = LaurentPoly::monomial(&v, rat_i(1), vec![0, 2]);
        assert_eq!(got.coeff(0), &x2);
        assert_eq!(got.coeff(1), &x2.scale(&rat_i(2)));
        assert_eq!(got.coeff(2), &x2.scale(&rat_i(2)));
    }

    #[test]
    fn eps_dlog_matches_plain_when_shift_zero() {
        let v = VarSet::shared(["y", "t", "x1", "x2"]);
        let f = &LaurentPoly::var_pow(&v, 0, 2) - &LaurentPoly::var_pow(&v, 0, -3);
        let lower = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 1, 0]);
        let upper = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 0, 1]);
        let plain = dlog_integral(&f, 0, &lower, &upper).unwrap();
        let s = EpsSeries::from_poly(&f, 2);
        let got = dlog_integral_eps(&s, 0, &lower, &upper, 0).unwrap();
        assert_eq!(got.coeff(0), &plain);
        assert!(got.coeff(1).is_zero());
        assert!(got.coeff(2).is_zero());
    }

    #[test]
    fn plan_validation() {
        let v = VarSet::shared(["y", "t", "x"]);
        let x = LaurentPoly::var_pow(&v, 2, 1);
        let tx = LaurentPoly::monomial(&v, rat_i(1), vec![0, 1, 1]);
        // eliminating the same variable twice is rejected
        let bad = IntegrationPlan::new(vec![
            IntegrationStep::PFunctional { var: 0 },
            IntegrationStep::PFunctional { var: 0 },
        ]);
        assert!(bad.is_err());
        // a bound may not reference an eliminated variable
        let y_bound = LaurentPoly::var_pow(&v, 0, 1);
        let bad = IntegrationPlan::new(vec![
            IntegrationStep::PFunctional { var: 0 },
            IntegrationStep::WIntegrate { var: 1, upper: y_bound },
        ]);
        assert!(bad.is_err());
        let ok = IntegrationPlan::new(vec![
            IntegrationStep::DlogIntegrate { var: 0, lower: tx.clone(), upper: tx },
            IntegrationStep::PFunctional { var: 1 },
        ]);
        assert!(ok.is_ok());
        let _ = x;
    }
}
