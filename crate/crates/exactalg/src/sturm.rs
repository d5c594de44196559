//! Sturm-chain real root counting and isolation for univariate polynomials,
//! used to report where non-rational intersection roots live.

use crate::mpoly::MPoly;
use crate::rat::Rat;

/// Euclidean remainder of univariate polynomials over Q.
fn poly_rem(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
    let db = b.degree_in(var);
    assert!(!b.is_zero());
    let bc = b.coeffs_in(var);
    let lb = bc[db as usize].as_constant().expect("univariate divisor");
    let x = MPoly::var(a.ctx(), var);
    let mut rem = a.clone();
    while !rem.is_zero() {
        let da = rem.degree_in(var);
        if da < db {
            break;
        }
        let la = rem.coeffs_in(var)[da as usize]
            .as_constant()
            .expect("univariate dividend");
        let t = x
            .pow(da - db)
            .scale(&(la / lb.clone()));
        rem = rem.sub(&t.mul(b));
    }
    rem
}

fn sturm_chain(p: &MPoly, var: usize) -> Vec<MPoly> {
    let mut chain = vec![p.clone(), p.derivative(var)];
    while !chain.last().unwrap().is_zero() && chain.last().unwrap().degree_in(var) > 0 {
        let n = chain.len();
        let r = poly_rem(&chain[n - 2], &chain[n - 1], var).neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_changes(chain: &[MPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    let point = [x.clone()];
    for p in chain {
        let v = p.eval(&point);
        if v.is_zero() {
            continue;
        }
        let neg = v.is_negative();
        if let Some(l) = last {
            if l != neg {
                count += 1;
            }
        }
        last = Some(neg);
    }
    count
}

/// Number of distinct real roots of a squarefree `p` in (lo, hi].
pub fn count_roots_in(p: &MPoly, var: usize, lo: &Rat, hi: &Rat) -> usize {
    let chain = sturm_chain(p, var);
    sign_changes(&chain, lo) - sign_changes(&chain, hi)
}

/// Isolating intervals (lo, hi] for every real root of a squarefree
/// univariate polynomial. Endpoints are exact rationals.
pub fn isolate_real_roots(p: &MPoly, var: usize) -> Vec<(Rat, Rat)> {
    if p.degree_in(var) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(p, var);
    // Cauchy bound on root magnitude
    let coeffs = p.coeffs_in(var);
    let lead = coeffs.last().unwrap().as_constant().unwrap().abs();
    let mut maxc = Rat::zero();
    for c in &coeffs {
        let a = c.as_constant().unwrap().abs();
        if a > maxc {
            maxc = a;
        }
    }
    let bound = Rat::one() + maxc / lead;
    let mut work = vec![(-bound.clone(), bound.clone())];
    let mut out = Vec::new();
    while let Some((lo, hi)) = work.pop() {
        let n = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) * Rat::frac(1, 2);
                work.push((lo, mid.clone()));
                work.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::VarCtx;

    #[test]
    fn isolates_quadratic() {
        let ctx = VarCtx::new(vec!["x"]);
        let x = MPoly::var_named(&ctx, "x");
        let p = x.pow(2).sub(&MPoly::int(&ctx, 2));
        let iv = isolate_real_roots(&p, 0);
        assert_eq!(iv.len(), 2);
        assert_eq!(count_roots_in(&p, 0, &Rat::one(), &Rat::from_int(2)), 1);
    }

    #[test]
    fn no_real_roots() {
        let ctx = VarCtx::new(vec!["x"]);
        let x = MPoly::var_named(&ctx, "x");
        let p = x.pow(2).add(&MPoly::one(&ctx));
        assert!(isolate_real_roots(&p, 0).is_empty());
    }

    #[test]
    fn cubic_three_roots() {
        let ctx = VarCtx::new(vec!["x"]);
        let x = MPoly::var_named(&ctx, "x");
        // (x+2)(x)(x-3) has roots -2, 0, 3
        let p = x
            .add(&MPoly::int(&ctx, 2))
            .mul(&x)
            .mul(&x.sub(&MPoly::int(&ctx, 3)));
        let iv = isolate_real_roots(&p, 0);
        assert_eq!(iv.len(), 3);
    }
}
