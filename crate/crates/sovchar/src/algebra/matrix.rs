//! Exact determinants of matrices over polynomial rings.
//!
//! Small matrices go through cofactor expansion; larger ones use
//! fraction-free Bareiss elimination, whose interior divisions are exact in
//! any integral domain. The 0x0 determinant is 1, so truncated formulas
//! degenerate gracefully.

use std::sync::Arc;

use super::laurent::LaurentPoly;
use super::varset::VarSet;

/// Minimal ring surface needed by cofactor expansion; lets the same code
/// run over Laurent polynomials and over truncated series.
pub trait DetElem: Clone {
    fn zero_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

impl DetElem for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.vars())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Cofactor expansion along the first row. `None` only for the empty matrix.
pub fn det_cofactor_generic<T: DetElem>(m: &[Vec<T>]) -> Option<T> {
    let n = m.len();
    if n == 0 {
        return None;
    }
    for row in m {
        assert_eq!(row.len(), n, "determinant: matrix must be square");
    }
    Some(det_rec(m, &(0..n).collect::<Vec<_>>(), 0))
}

fn det_rec<T: DetElem>(m: &[Vec<T>], cols: &[usize], row: usize) -> T {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc: Option<T> = None;
    for (k, &j) in cols.iter().enumerate() {
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        let minor = det_rec(m, &sub_cols, row + 1);
        let term = m[row][j].mul_ref(&minor);
        acc = Some(match acc {
            None => {
                if k % 2 == 0 {
                    term
                } else {
                    term.zero_like().sub_ref(&term)
                }
            }
            Some(a) => {
                if k % 2 == 0 {
                    a.add_ref(&term)
                } else {
                    a.sub_ref(&term)
                }
            }
        });
    }
    acc.expect("det_rec: nonempty column list")
}

/// Cofactor-expansion determinant of a Laurent polynomial matrix.
pub fn det_cofactor(vars: &Arc<VarSet>, m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    match det_cofactor_generic(m) {
        Some(d) => d,
        None => LaurentPoly::one(vars),
    }
}

/// Fraction-free Bareiss elimination. Pivots are chosen as the first
/// nonzero entry scanning rows top-down; every interior division is exact.
pub fn det_bareiss(vars: &Arc<VarSet>, m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(vars);
    }
    for row in m {
        assert_eq!(row.len(), n, "determinant: matrix must be square");
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev_pivot = LaurentPoly::one(vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return LaurentPoly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .divide_exact(&prev_pivot)
                    .expect("Bareiss interior division is exact");
            }
        }
        prev_pivot = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Exact determinant: cofactor expansion up to 4x4, Bareiss above.
pub fn det_poly_matrix(vars: &Arc<VarSet>, m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    if m.len() <= 4 {
        det_cofactor(vars, m)
    } else {
        det_bareiss(vars, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_i;

    #[test]
    fn vandermonde_2x2() {
        let v = VarSet::xs(2);
        let x1 = LaurentPoly::var_pow(&v, 0, 1);
        let x2 = LaurentPoly::var_pow(&v, 1, 1);
        let one = LaurentPoly::one(&v);
        let m = vec![vec![x1.clone(), one.clone()], vec![x2.clone(), one]];
        assert_eq!(det_poly_matrix(&v, &m), &x1 - &x2);
    }

    #[test]
    fn numeric_2x2() {
        let v = VarSet::empty();
        let c = |n: i64| LaurentPoly::constant(&v, rat_i(n));
        let m = vec![vec![c(27), c(3)], vec![c(1), c(1)]];
        assert_eq!(det_poly_matrix(&v, &m), c(24));
    }

    #[test]
    fn identity_3x3_and_empty() {
        let v = VarSet::xs(1);
        let one = LaurentPoly::one(&v);
        let zero = LaurentPoly::zero(&v);
        let m = vec![
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(det_poly_matrix(&v, &m), one);
        let empty: Vec<Vec<LaurentPoly>> = Vec::new();
        assert_eq!(det_poly_matrix(&v, &empty), LaurentPoly::one(&v));
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let v = VarSet::empty();
        let c = |n: i64| LaurentPoly::constant(&v, rat_i(n));
        // leading entry zero forces the row swap
        let m = vec![
            vec![c(0), c(2), c(1)],
            vec![c(1), c(0), c(3)],
            vec![c(4), c(1), c(0)],
        ];
        assert_eq!(det_bareiss(&v, &m), det_cofactor(&v, &m));
        // singular matrix
        let s = vec![
            vec![c(1), c(2), c(3)],
            vec![c(2), c(4), c(6)],
            vec![c(1), c(1), c(1)],
        ];
        assert!(det_bareiss(&v, &s).is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_on_laurent_entries() {
        let v = VarSet::xs(2);
        let e = |a: i64, b: i64, c: i64| {
            LaurentPoly::monomial(&v, rat_i(c), vec![a, b])
        };
        let m = vec![
            vec![&e(1, 0, 1) + &e(0, -1, 2), e(0, 1, 3), e(-1, 0, 1), e(0, 0, 2)],
            vec![e(0, 0, 5), &e(2, 0, 1) - &e(0, 0, 1), e(0, -2, 4), e(1, 1, 1)],
            vec![e(0, 1, 2), e(1, -1, 3), &e(0, 0, 7) + &e(1, 0, 1), e(0, 0, 1)],
            vec![e(-1, -1, 1), e(0, 0, 2), e(1, 0, 3), &e(0, 2, 1) - &e(0, -2, 1)],
        ];
        assert_eq!(det_bareiss(&v, &m), det_cofactor(&v, &m));
    }
}
