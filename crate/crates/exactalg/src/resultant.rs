//! Sylvester resultants for eliminating one variable from a pair of
//! polynomials.

use crate::linalg::{bareiss_det, Matrix};
use crate::mpoly::MPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ResultantError {
    DegreeZero { which: &'static str },
}

impl std::fmt::Display for ResultantError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ResultantError::DegreeZero { which } => {
                write!(f, "{which} input has degree 0 in the elimination variable")
            }
        }
    }
}

impl std::error::Error for ResultantError {}

/// Sylvester resultant of p and q with respect to `var`. Both inputs must
/// genuinely depend on `var`.
pub fn resultant(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly, ResultantError> {
    let dp = p.degree_in(var) as usize;
    let dq = q.degree_in(var) as usize;
    if dp == 0 {
        return Err(ResultantError::DegreeZero { which: "first" });
    }
    if dq == 0 {
        return Err(ResultantError::DegreeZero { which: "second" });
    }
    let ctx = p.ctx().clone();
    let pc = p.coeffs_in(var); // constant term first
    let qc = q.coeffs_in(var);
    let n = dp + dq;
    let mut m = Matrix::fill(n, n, MPoly::zero(&ctx));
    // dq rows of p's coefficients (descending), then dp rows of q's
    for r in 0..dq {
        for (k, coeff) in pc.iter().enumerate() {
            // coefficient of var^k goes to column r + (dp - k)
            m.set(r, r + dp - k, coeff.clone());
        }
    }
    for r in 0..dp {
        for (k, coeff) in qc.iter().enumerate() {
            m.set(dq + r, r + dq - k, coeff.clone());
        }
    }
    Ok(bareiss_det(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::VarCtx;
    use crate::rat::Rat;

    #[test]
    fn linear_pair() {
        // Res_lambda(lambda - 1, lambda + 1) = 2 (up to sign convention)
        let ctx = VarCtx::new(vec!["c", "lambda"]);
        let l = MPoly::var_named(&ctx, "lambda");
        let p = l.sub(&MPoly::one(&ctx));
        let q = l.add(&MPoly::one(&ctx));
        let r = resultant(&p, &q, 1).unwrap();
        assert_eq!(r.as_constant().map(|c| c.abs()), Some(Rat::from_int(2)));
    }

    #[test]
    fn vanishes_at_common_roots() {
        // p = lambda - c, q = lambda - c^2 share a root iff c = c^2
        let ctx = VarCtx::new(vec!["c", "lambda"]);
        let c = MPoly::var_named(&ctx, "c");
        let l = MPoly::var_named(&ctx, "lambda");
        let p = l.sub(&c);
        let q = l.sub(&c.mul(&c));
        let r = resultant(&p, &q, 1).unwrap();
        // r = +-(c - c^2)
        assert!(r.eval(&[Rat::zero(), Rat::zero()]).is_zero());
        assert!(r.eval(&[Rat::one(), Rat::zero()]).is_zero());
        assert!(!r.eval(&[Rat::from_int(2), Rat::zero()]).is_zero());
    }

    #[test]
    fn degree_zero_rejected() {
        let ctx = VarCtx::new(vec!["c", "lambda"]);
        let c = MPoly::var_named(&ctx, "c");
        let l = MPoly::var_named(&ctx, "lambda");
        assert!(resultant(&c, &l, 1).is_err());
    }

    #[test]
    fn multiplicative_in_first_argument() {
        let ctx = VarCtx::new(vec!["c", "lambda"]);
        let c = MPoly::var_named(&ctx, "c");
        let l = MPoly::var_named(&ctx, "lambda");
        let a = l.sub(&c);
        let b = l.add(&c.mul(&c));
        let q = l.mul(&l).add(&c.sub(&MPoly::int(&ctx, 3)));
        let lhs = resultant(&a.mul(&b), &q, 1).unwrap();
        let rhs = resultant(&a, &q, 1)
            .unwrap()
            .mul(&resultant(&b, &q, 1).unwrap());
        assert_eq!(lhs, rhs);
    }
}
