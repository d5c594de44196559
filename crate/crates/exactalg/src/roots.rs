//! Rational root finding for univariate polynomials over Q, by divisor
//! search on the leading and trailing coefficients.
//!
//! Coefficients beyond the configured bound (2^256) make the search report
//! itself incomplete instead of failing silently.

use crate::mpoly::MPoly;
use crate::rat::Rat;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct RootSearch {
    /// (root, multiplicity) pairs, sorted.
    pub roots: Vec<(Rat, u32)>,
    /// False when divisor enumeration was abandoned (coefficients too large
    /// or too composite); the reported roots are then only a subset.
    pub complete: bool,
    /// What remains after dividing out the rational roots (primitive).
    pub remainder: MPoly,
}

/// All rational roots of a nonzero polynomial that is univariate in `var`
/// (other context variables must not occur).
pub fn rational_roots(p: &MPoly, var: usize) -> RootSearch {
    assert!(!p.is_zero(), "root search on the zero polynomial");
    for (m, _) in p.terms() {
        for v in m.vars() {
            assert_eq!(v, var, "polynomial is not univariate in the given variable");
        }
    }
    let ctx = p.ctx().clone();
    let x = MPoly::var(&ctx, var);

    let mut work = p.primitive();
    let mut roots: Vec<(Rat, u32)> = Vec::new();

    // strip x^k
    let mut zero_mult = 0u32;
    loop {
        if work.terms().all(|(m, _)| m.exp_of(var) > 0) && !work.is_zero() {
            work = work.div_exact(&x).unwrap();
            zero_mult += 1;
        } else {
            break;
        }
    }
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult));
    }
    if work.total_degree() == 0 {
        return RootSearch {
            roots,
            complete: true,
            remainder: work,
        };
    }

    // integer coefficients, ascending by degree
    let coeffs = integer_coeffs(&work, var);
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg].magnitude().clone();
    let trail = coeffs
        .iter()
        .find(|c| !c.is_zero())
        .unwrap()
        .magnitude()
        .clone();

    let bound = BigUint::one() << 256;
    if lead > bound || trail > bound {
        return RootSearch {
            roots,
            complete: false,
            remainder: work,
        };
    }

    let (mut lead_divs, ok_l) = divisors(&lead);
    let (mut trail_divs, ok_t) = divisors(&trail);
    let mut complete = ok_l && ok_t;
    lead_divs.sort();
    lead_divs.dedup();
    trail_divs.sort();
    trail_divs.dedup();
    if lead_divs.len() * trail_divs.len() > 1 << 22 {
        // divisor grid too large to enumerate; report what we can
        complete = false;
        lead_divs.truncate(1 << 11);
        trail_divs.truncate(1 << 11);
    }

    // Cauchy bound: |root| <= 1 + max |a_i| / |a_n|
    let max_abs = coeffs
        .iter()
        .map(|c| c.magnitude().clone())
        .max()
        .unwrap();
    let cauchy_num = &max_abs + &lead;

    let mut found: Vec<Rat> = Vec::new();
    for q in &lead_divs {
        for pnum in &trail_divs {
            if pnum.gcd(q) != BigUint::one() {
                continue;
            }
            // |p/q| <= 1 + max/lead  <=>  p * lead <= q * (max + lead)
            if pnum * &lead > q * &cauchy_num {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rat::new(
                    BigInt::from(pnum.clone()) * BigInt::from(sign),
                    BigInt::from(q.clone()),
                );
                if eval_univariate(&coeffs, &cand).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found.sort();
    found.dedup();

    for r in found {
        // divide out (x - r) repeatedly for the multiplicity
        let factor = x.sub(&MPoly::constant(&ctx, r.clone()));
        let mut mult = 0u32;
        while let Some(q) = work.div_exact(&factor) {
            work = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        roots.push((r, mult));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));

    RootSearch {
        roots,
        complete,
        remainder: work.primitive(),
    }
}

fn integer_coeffs(p: &MPoly, var: usize) -> Vec<BigInt> {
    let deg = p.degree_in(var) as usize;
    let mut lcm = BigInt::one();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exp_of(var) as usize;
        out[e] = c.numer() * (&lcm / c.denom());
    }
    out
}

fn eval_univariate(coeffs: &[BigInt], x: &Rat) -> Rat {
    // Horner over Q
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + Rat::new(c.clone(), BigInt::one());
    }
    acc
}

/// All divisors of n (n > 0 assumed after masking zero). The flag is false
/// when factorization gave up on a large cofactor.
fn divisors(n: &BigUint) -> (Vec<BigUint>, bool) {
    if n.is_zero() {
        return (vec![BigUint::one()], true);
    }
    let (factors, complete) = factorize(n.clone());
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > 1 << 22 {
            return (divs, false);
        }
    }
    (divs, complete)
}

/// Factorization by trial division then Pollard-Brent rho. Gives up (and says
/// so) if rho stalls on a large composite cofactor.
pub fn factorize(mut n: BigUint) -> (Vec<(BigUint, u32)>, bool) {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut complete = true;
    if n <= BigUint::one() {
        return (out, true);
    }
    for p in SMALL_PRIMES {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0u32;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
    }
    if n > BigUint::one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                push_factor(&mut out, m);
                continue;
            }
            match pollard_brent(&m) {
                Some(d) => {
                    stack.push(&m / &d);
                    stack.push(d);
                }
                None => {
                    // treat the stubborn cofactor as a unit we cannot split
                    push_factor(&mut out, m);
                    complete = false;
                }
            }
        }
    }
    out.sort();
    (out, complete)
}

fn push_factor(out: &mut Vec<(BigUint, u32)>, p: BigUint) {
    for f in out.iter_mut() {
        if f.0 == p {
            f.1 += 1;
            return;
        }
    }
    out.push((p, 1));
}

fn is_probable_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigUint::from(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with fixed witnesses (deterministic far beyond our sizes
    // of interest, probabilistic but safe for the internal divisor search)
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return Some(two);
    }
    let mut c = BigUint::from(1u32);
    for _attempt in 0..20 {
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count: u64 = 0;
        while d == one {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            count += 1;
            if count > 4_000_000 {
                return None;
            }
        }
        if d != one && &d != n {
            return Some(d);
        }
        c += 1u32;
    }
    None
}

const SMALL_PRIMES: [u32; 168] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
    307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419,
    421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
    547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653,
    659, 661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787,
    797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919,
    929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997,
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::VarCtx;

    #[test]
    fn simple_roots() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = MPoly::var_named(&ctx, "c");
        // 2c - 1 -> {1/2}
        let p = c.scale(&Rat::from_int(2)).sub(&MPoly::one(&ctx));
        let rs = rational_roots(&p, 0);
        assert!(rs.complete);
        assert_eq!(rs.roots, vec![(Rat::frac(1, 2), 1)]);
    }

    #[test]
    fn product_roots() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = MPoly::var_named(&ctx, "c");
        // (3c+2)(5c-4) -> {-2/3, 4/5}
        let p = c
            .scale(&Rat::from_int(3))
            .add(&MPoly::int(&ctx, 2))
            .mul(&c.scale(&Rat::from_int(5)).sub(&MPoly::int(&ctx, 4)));
        let rs = rational_roots(&p, 0);
        assert!(rs.complete);
        assert_eq!(
            rs.roots,
            vec![(Rat::frac(-2, 3), 1), (Rat::frac(4, 5), 1)]
        );
    }

    #[test]
    fn multiplicity_and_remainder() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = MPoly::var_named(&ctx, "c");
        // c^2 (c-1)^2 (c^2+1)
        let p = c
            .pow(2)
            .mul(&c.sub(&MPoly::one(&ctx)).pow(2))
            .mul(&c.pow(2).add(&MPoly::one(&ctx)));
        let rs = rational_roots(&p, 0);
        assert!(rs.complete);
        assert_eq!(rs.roots, vec![(Rat::zero(), 2), (Rat::one(), 2)]);
        assert_eq!(rs.remainder, c.pow(2).add(&MPoly::one(&ctx)));
    }

    #[test]
    fn factorize_smoke() {
        let (f, ok) = factorize(BigUint::from(2u32).pow(10) * BigUint::from(10007u32));
        assert!(ok);
        assert_eq!(
            f,
            vec![(BigUint::from(2u32), 10), (BigUint::from(10007u32), 1)]
        );
    }
}
