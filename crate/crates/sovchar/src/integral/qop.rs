//! The integral operator `Q_z`, executed through the formal calculus.
//!
//! The kernel is two delta substitutions for `y_L` (one per half-line),
//! followed by the w-integral up to `z` and, for `i = L-1` down to `1`,
//! the dlog integral over `y_i` between `t_i x_i` and `t_i x_{i+1}` and the
//! P-functional over `t_i`. On the antisymmetric determinant this pipeline
//! must reproduce `phi_mu(z) a_mu(x)` exactly; dividing by
//! `phi_delta(z) a_delta(x)` then exhibits `Q_z chi = q(z) chi`.

use std::sync::Arc;

use crate::algebra::rational::{rat_i, Rational};
use crate::algebra::{LaurentPoly, VarSet};
use crate::characters::{a_mu_on, phi_mu_on, MuVector, Partition};
use crate::Result;

use super::calculus::{IntegrationPlan, IntegrationStep};

/// Variable layout for the `Q_z` pipeline:
/// `x_1..x_L, y_1..y_L, t_1..t_{L-1}, w, z`.
pub struct QVars {
    vars: Arc<VarSet>,
    l: usize,
}

impl QVars {
    pub fn new(l: usize) -> Self {
        assert!(l >= 1);
        let names = (1..=l)
            .map(|i| format!("x{i}"))
            .chain((1..=l).map(|i| format!("y{i}")))
            .chain((1..l).map(|i| format!("t{i}")))
            .chain(["w".to_string(), "z".to_string()]);
        QVars { vars: VarSet::shared(names), l }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn x(&self, i: usize) -> usize {
        assert!(i < self.l);
        i
    }

    pub fn y(&self, i: usize) -> usize {
        assert!(i < self.l);
        self.l + i
    }

    pub fn t(&self, i: usize) -> usize {
        assert!(i < self.l - 1);
        2 * self.l + i
    }

    pub fn w(&self) -> usize {
        3 * self.l - 1
    }

    pub fn z(&self) -> usize {
        3 * self.l
    }

    /// `prod_{l=1}^{L-1} x_l t_l^2 / y_l` as an exponent vector.
    fn interlace_product_exps(&self) -> Vec<i64> {
        let mut e = vec![0i64; self.vars.len()];
        for i in 0..self.l - 1 {
            e[self.x(i)] += 1;
            e[self.t(i)] += 2;
            e[self.y(i)] -= 1;
        }
        e
    }

    /// The two delta images for `y_L`: `w^{+-1} x_L prod x_l t_l^2 / y_l`.
    fn delta_images(&self) -> (LaurentPoly, LaurentPoly) {
        let mut e = self.interlace_product_exps();
        e[self.x(self.l - 1)] += 1;
        let mut fwd = e.clone();
        fwd[self.w()] = 1;
        let mut bwd = e;
        bwd[self.w()] = -1;
        (
            LaurentPoly::monomial(&self.vars, Rational::from_integer(1.into()), fwd),
            LaurentPoly::monomial(&self.vars, Rational::from_integer(1.into()), bwd),
        )
    }

    /// The shared tail of both branch plans: w-integral to `z`, then the
    /// `(y_i, t_i)` pairs innermost-y first.
    fn tail_steps(&self) -> Vec<IntegrationStep> {
        let mut steps = vec![IntegrationStep::WIntegrate {
            var: self.w(),
            upper: LaurentPoly::var_pow(&self.vars, self.z(), 1),
        }];
        for i in (0..self.l - 1).rev() {
            let mut lo = vec![0i64; self.vars.len()];
            lo[self.t(i)] = 1;
            lo[self.x(i)] = 1;
            let mut hi = vec![0i64; self.vars.len()];
            hi[self.t(i)] = 1;
            hi[self.x(i + 1)] = 1;
            steps.push(IntegrationStep::DlogIntegrate {
                var: self.y(i),
                lower: LaurentPoly::monomial(&self.vars, rat_i(1), lo),
                upper: LaurentPoly::monomial(&self.vars, rat_i(1), hi),
            });
            steps.push(IntegrationStep::PFunctional { var: self.t(i) });
        }
        steps
    }

    /// The two branch plans (one per delta kernel).
    pub fn branch_plans(&self) -> Result<(IntegrationPlan, IntegrationPlan)> {
        let (fwd, bwd) = self.delta_images();
        let mk = |image: LaurentPoly| -> Result<IntegrationPlan> {
            let mut steps =
                vec![IntegrationStep::DeltaSubstitute { var: self.y(self.l - 1), image }];
            steps.extend(self.tail_steps());
            IntegrationPlan::new(steps)
        };
        Ok((mk(fwd)?, mk(bwd)?))
    }
}

/// Run the kernel pipeline on `a_mu(y_1..y_L)` and return the result over
/// `x_1..x_L, z`. It must equal `phi_mu(z) a_mu(x)`.
pub fn q_operator_integral_apply(lambda: &Partition) -> Result<LaurentPoly> {
    let l = lambda.len();
    let qv = QVars::new(l);
    let y_rows: Vec<usize> = (0..l).map(|i| qv.y(i)).collect();
    let integrand = a_mu_on(qv.vars(), &y_rows, &lambda.mu());
    let (pa, pb) = qv.branch_plans()?;
    let sum = &pa.run(&integrand)? + &pb.run(&integrand)?;
    sum.cast_to(&VarSet::xs_z(l))
}

/// The right-hand side of the kernel identity: `phi_mu(z) a_mu(x)` over
/// `x_1..x_L, z`.
pub fn q_reduction_expected(lambda: &Partition) -> LaurentPoly {
    let l = lambda.len();
    let vars = VarSet::xs_z(l);
    let mu = lambda.mu();
    let rows: Vec<usize> = (0..l).collect();
    &phi_mu_on(&vars, &[l], &mu) * &a_mu_on(&vars, &rows, &mu)
}

/// Full `Q_z` on a Weyl-invariant polynomial `f(x_1..x_L)`:
/// wrap `a_delta f` in the kernel pipeline and strip the prefactor
/// `phi_delta(z) a_delta(x)`. For `f = chi_lambda` this returns
/// `q_lambda(z) chi_lambda(x)` over `x_1..x_L, z`.
pub fn q_operator_full_apply(f: &LaurentPoly) -> Result<LaurentPoly> {
    let l = f.vars().len();
    let qv = QVars::new(l);
    let y_positions: Vec<usize> = (0..l).map(|i| qv.y(i)).collect();
    let f_y = f.map_vars_to(qv.vars(), &y_positions);
    let delta = MuVector::delta(l);
    let a_delta_y = a_mu_on(qv.vars(), &y_positions, &delta);
    let integrand = &a_delta_y * &f_y;
    let (pa, pb) = qv.branch_plans()?;
    let sum = &pa.run(&integrand)? + &pb.run(&integrand)?;
    let xz = VarSet::xs_z(l);
    let raw = sum.cast_to(&xz)?;
    let x_rows: Vec<usize> = (0..l).collect();
    let den = &phi_mu_on(&xz, &[l], &delta) * &a_mu_on(&xz, &x_rows, &delta);
    raw.divide_exact(&den)
}
