//! Exact linear algebra: dense matrices over a coefficient field, Gaussian
//! elimination for solving/kernels, and fraction-free Bareiss determinants
//! over the polynomial ring.

use crate::field::Field;
use crate::mpoly::MPoly;

#[derive(Clone, Debug)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Matrix<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn fill(rows: usize, cols: usize, v: T) -> Matrix<T> {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }
}

/// Result of solving A x = b exactly.
#[derive(Clone, Debug)]
pub enum LinSolve<E> {
    /// Affine solution set: one particular solution plus a nullspace basis.
    Solution {
        particular: Vec<E>,
        nullspace: Vec<Vec<E>>,
    },
    Inconsistent,
}

/// Gaussian elimination over a field, with an optional column order.
/// Returns the row echelon data: pivot column per row.
fn eliminate<F: Field>(
    f: &F,
    m: &mut Matrix<F::Elem>,
    col_order: &[usize],
) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for &col in col_order {
        if row >= m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = f.div(&f.one(), m.at(row, col));
        for c in 0..m.cols {
            let v = f.mul(m.at(row, c), &inv);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r != row && !f.is_zero(m.at(r, col)) {
                let factor = m.at(r, col).clone();
                for c in 0..m.cols {
                    let v = f.sub(m.at(r, c), &f.mul(&factor, m.at(row, c)));
                    m.set(r, c, v);
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    pivots
}

/// Solves A x = b over the field, reporting inconsistency distinctly from an
/// underdetermined system (which comes back with a nullspace basis).
pub fn solve_linear<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    b: &[F::Elem],
) -> LinSolve<F::Elem> {
    assert_eq!(a.rows, b.len(), "dimension mismatch");
    let n = a.cols;
    let mut aug = Matrix::fill(a.rows, n + 1, f.zero());
    for r in 0..a.rows {
        for c in 0..n {
            aug.set(r, c, a.at(r, c).clone());
        }
        aug.set(r, n, b[r].clone());
    }
    let order: Vec<usize> = (0..n).collect();
    let pivots = eliminate(f, &mut aug, &order);
    // inconsistent iff a pivot would land in the b column
    for r in pivots.len()..a.rows {
        if !f.is_zero(aug.at(r, n)) {
            return LinSolve::Inconsistent;
        }
    }
    let mut particular = vec![f.zero(); n];
    for &(r, c) in &pivots {
        particular[c] = aug.at(r, n).clone();
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut nullspace = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for &(r, c) in &pivots {
            v[c] = f.neg(aug.at(r, free));
        }
        nullspace.push(v);
    }
    LinSolve::Solution {
        particular,
        nullspace,
    }
}

/// Kernel basis of A over the field, with a caller-chosen column order
/// (any order gives a basis of the same space).
pub fn kernel<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    col_order: Option<&[usize]>,
) -> Vec<Vec<F::Elem>> {
    let n = a.cols;
    let default: Vec<usize> = (0..n).collect();
    let order = col_order.unwrap_or(&default);
    let mut m = a.clone();
    let pivots = eliminate(f, &mut m, order);
    let pivot_cols: std::collections::BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for &free in order {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for &(r, c) in &pivots {
            v[c] = f.neg(m.at(r, free));
        }
        basis.push(v);
    }
    basis
}

pub fn rank<F: Field>(f: &F, a: &Matrix<F::Elem>) -> usize {
    let order: Vec<usize> = (0..a.cols).collect();
    let mut m = a.clone();
    eliminate(f, &mut m, &order).len()
}

/// Fraction-free Bareiss determinant over the polynomial ring. All divisions
/// performed are exact by construction.
pub fn bareiss_det(a: &Matrix<MPoly>) -> MPoly {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        panic!("determinant of an empty matrix");
    }
    let ctx = a.at(0, 0).ctx().clone();
    let mut m = a.clone();
    let mut sign = false;
    let mut prev = MPoly::one(&ctx);
    for k in 0..n - 1 {
        if m.at(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                return MPoly::zero(&ctx);
            };
            m.swap_rows(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m
                    .at(i, j)
                    .mul(m.at(k, k))
                    .sub(&m.at(i, k).mul(m.at(k, j)));
                let q = t.div_exact(&prev).expect("Bareiss division is exact");
                m.set(i, j, q);
            }
            m.set(i, k, MPoly::zero(&ctx));
        }
        prev = m.at(k, k).clone();
    }
    let det = m.at(n - 1, n - 1).clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
pub fn cofactor_det(a: &Matrix<MPoly>) -> MPoly {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let ctx = a.at(0, 0).ctx().clone();
    if n == 1 {
        return a.at(0, 0).clone();
    }
    let mut det = MPoly::zero(&ctx);
    for c in 0..n {
        if a.at(0, c).is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<MPoly>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&cc| cc != c)
                    .map(|cc| a.at(r, cc).clone())
                    .collect()
            })
            .collect();
        let minor = bareiss_det(&Matrix::from_rows(minor_rows));
        let term = a.at(0, c).mul(&minor);
        det = if c % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatField, RatFuncField};
    use crate::mpoly::VarCtx;
    use crate::rat::Rat;
    use crate::ratfunc::RatFunc;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_system() {
        let f = RatField;
        let a = Matrix::from_rows(vec![
            vec![Rat::one(), Rat::zero()],
            vec![Rat::zero(), Rat::one()],
        ]);
        let b = vec![Rat::from_int(3), Rat::from_int(-5)];
        match solve_linear(&f, &a, &b) {
            LinSolve::Solution {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, b);
                assert!(nullspace.is_empty());
            }
            LinSolve::Inconsistent => panic!("identity system inconsistent"),
        }
    }

    #[test]
    fn inconsistent_vs_underdetermined() {
        let f = RatField;
        let a = Matrix::from_rows(vec![
            vec![Rat::one(), Rat::one()],
            vec![Rat::from_int(2), Rat::from_int(2)],
        ]);
        match solve_linear(&f, &a, &[Rat::one(), Rat::from_int(3)]) {
            LinSolve::Inconsistent => {}
            _ => panic!("expected inconsistency"),
        }
        match solve_linear(&f, &a, &[Rat::one(), Rat::from_int(2)]) {
            LinSolve::Solution { nullspace, .. } => assert_eq!(nullspace.len(), 1),
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn bareiss_matches_cofactor_random() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = MPoly::var_named(&ctx, "c");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4usize {
            for _ in 0..6 {
                let rows: Vec<Vec<MPoly>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                let a = rng.gen_range(-4i64..=4);
                                let b = rng.gen_range(-3i64..=3);
                                MPoly::int(&ctx, a).add(&c.scale(&Rat::from_int(b)))
                            })
                            .collect()
                    })
                    .collect();
                let m = Matrix::from_rows(rows);
                assert_eq!(bareiss_det(&m), cofactor_det(&m));
            }
        }
    }

    #[test]
    fn solve_over_function_field_vs_cofactor_inverse() {
        // random 4x4 over Q(c): check A * x = b via determinant-based inverse
        let ctx = VarCtx::new(vec!["c"]);
        let f = RatFuncField::new(ctx.clone());
        let c = MPoly::var_named(&ctx, "c");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let entries: Vec<Vec<MPoly>> = (0..4)
            .map(|_| {
                (0..4)
                    .map(|_| {
                        let a = rng.gen_range(-3i64..=3);
                        let b = rng.gen_range(-2i64..=2);
                        MPoly::int(&ctx, a).add(&c.scale(&Rat::from_int(b)))
                    })
                    .collect()
            })
            .collect();
        let poly_m = Matrix::from_rows(entries.clone());
        let det = bareiss_det(&poly_m);
        assert!(!det.is_zero(), "retry with another seed");
        let a = poly_m.map(|p| RatFunc::from_poly(p.clone()));
        let b: Vec<RatFunc> = (0..4)
            .map(|i| RatFunc::from_poly(c.pow(i as u32)))
            .collect();
        let LinSolve::Solution { particular, .. } = solve_linear(&f, &a, &b) else {
            panic!("nonsingular system must solve");
        };
        // Cramer oracle: x_i * det == det of A with column i replaced by b
        for i in 0..4 {
            let mut cols = entries.clone();
            for (r, row) in cols.iter_mut().enumerate() {
                row[i] = c.pow(r as u32);
            }
            let di = bareiss_det(&Matrix::from_rows(cols));
            let expect = RatFunc::new(di, det.clone());
            assert_eq!(particular[i], expect);
        }
    }
}
