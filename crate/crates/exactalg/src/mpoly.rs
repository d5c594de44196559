//! Sparse multivariate polynomials over Q.
//!
//! Terms are keyed by sparse exponent vectors (only nonzero exponents stored)
//! and ordered graded-lexicographically with respect to the fixed variable
//! order of the owning `VarCtx`. No zero coefficients are ever stored.

use crate::rat::Rat;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered list of variable names. The ordering is fixed for the lifetime of
/// any polynomial built over it; polynomials from different contexts never mix.
#[derive(Debug, PartialEq, Eq)]
pub struct VarCtx {
    names: Vec<String>,
}

impl VarCtx {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<VarCtx> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable name {n:?}");
        }
        Arc::new(VarCtx { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn same_ctx(a: &Arc<VarCtx>, b: &Arc<VarCtx>) {
    assert!(
        Arc::ptr_eq(a, b) || a == b,
        "variable context mismatch: {:?} vs {:?}",
        a.names,
        b.names
    );
}

/// Sparse exponent vector: (variable index, exponent > 0) pairs sorted by index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(SmallVec<[(u32, u32); 4]>);

impl Mono {
    pub fn unit() -> Mono {
        Mono(SmallVec::new())
    }

    pub fn var(i: usize) -> Mono {
        Mono(SmallVec::from_slice(&[(i as u32, 1)]))
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Mono {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate variable in monomial");
        }
        Mono(SmallVec::from_vec(pairs))
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exp_of(&self, var: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(v, _)| v as usize == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(v, _)| v as usize)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Mono(out)
    }

    /// Exact monomial quotient, or None if some exponent would go negative.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = SmallVec::new();
        let mut i = 0;
        for &(vb, eb) in &other.0 {
            loop {
                let &(va, ea) = self.0.get(i)?;
                if va < vb {
                    out.push((va, ea));
                    i += 1;
                } else if va == vb {
                    if ea < eb {
                        return None;
                    }
                    if ea > eb {
                        out.push((va, ea - eb));
                    }
                    i += 1;
                    break;
                } else {
                    return None;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        Some(Mono(out))
    }

    /// Graded lexicographic comparison: total degree first, then lex with the
    /// lowest-index variable most significant (higher exponent = larger).
    fn grlex(&self, other: &Mono) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                // remaining exponents sit on higher-index (less significant)
                // variables; the side that ran out is *larger* on the current var
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if va > vb {
                        return Ordering::Less;
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex(other)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    ctx: Arc<VarCtx>,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero(ctx: &Arc<VarCtx>) -> MPoly {
        MPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarCtx>, r: Rat) -> MPoly {
        let mut p = MPoly::zero(ctx);
        if !r.is_zero() {
            p.terms.insert(Mono::unit(), r);
        }
        p
    }

    pub fn one(ctx: &Arc<VarCtx>) -> MPoly {
        MPoly::constant(ctx, Rat::one())
    }

    pub fn int(ctx: &Arc<VarCtx>, n: i64) -> MPoly {
        MPoly::constant(ctx, Rat::from_int(n))
    }

    pub fn var(ctx: &Arc<VarCtx>, i: usize) -> MPoly {
        assert!(i < ctx.arity(), "variable index out of range");
        let mut p = MPoly::zero(ctx);
        p.terms.insert(Mono::var(i), Rat::one());
        p
    }

    pub fn var_named(ctx: &Arc<VarCtx>, name: &str) -> MPoly {
        let i = ctx
            .index_of(name)
            .unwrap_or_else(|| panic!("no variable {name:?} in context"));
        MPoly::var(ctx, i)
    }

    pub fn from_terms(ctx: &Arc<VarCtx>, terms: Vec<(Mono, Rat)>) -> MPoly {
        let mut p = MPoly::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::unit()))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Mono::unit()).cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp_of(var)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp_of(var) > 0)
    }

    /// Leading term under grlex.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        same_ctx(&self.ctx, &other.ctx);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        same_ctx(&self.ctx, &other.ctx);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        same_ctx(&self.ctx, &other.ctx);
        let mut out = MPoly::zero(&self.ctx);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        // iterate over the smaller operand outside
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> MPoly {
        if r.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * r;
        }
        out
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one(&self.ctx);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to one variable.
    pub fn derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.exp_of(var);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(u32, u32)> = m.pairs().to_vec();
            for p in pairs.iter_mut() {
                if p.0 as usize == var {
                    p.1 -= 1;
                }
            }
            out.add_term(Mono::from_pairs(pairs), c * &Rat::from_int(e as i64));
        }
        out
    }

    /// Full evaluation at a rational point (one value per context variable).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.ctx.arity(), "point arity mismatch");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                t *= point[v as usize].pow(e);
            }
            acc += t;
        }
        acc
    }

    /// Substitutes polynomials for a subset of variables (by index).
    pub fn subst(&self, map: &BTreeMap<usize, MPoly>) -> MPoly {
        let mut out = MPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&self.ctx, c.clone());
            let mut rest: Vec<(u32, u32)> = Vec::new();
            for &(v, e) in m.pairs() {
                match map.get(&(v as usize)) {
                    Some(p) => t = t.mul(&p.pow(e)),
                    None => rest.push((v, e)),
                }
            }
            let rest = MPoly::from_terms(&self.ctx, vec![(Mono::from_pairs(rest), Rat::one())]);
            out = out.add(&t.mul(&rest));
        }
        out
    }

    /// Substitutes var := num/den and clears denominators: returns
    /// self(var := num/den) * den^deg_var(self), one multiplication per
    /// coefficient layer. Intended for constraint rewriting where overall
    /// nonzero factors are irrelevant.
    pub fn subst_one_frac(&self, var: usize, num: &MPoly, den: &MPoly) -> MPoly {
        let deg = self.degree_in(var);
        if deg == 0 {
            return self.clone();
        }
        let layers = self.coeffs_in(var);
        // horner in num/den: sum_k layer_k num^k den^(deg-k)
        let mut out = MPoly::zero(&self.ctx);
        let mut num_pow = MPoly::one(&self.ctx);
        let mut den_pows = vec![MPoly::one(&self.ctx)];
        for _ in 0..deg {
            den_pows.push(den_pows.last().unwrap().mul(den));
        }
        for (k, layer) in layers.iter().enumerate() {
            if !layer.is_zero() {
                out = out.add(&layer.mul(&num_pow).mul(&den_pows[deg as usize - k]));
            }
            if (k as u32) < deg {
                num_pow = num_pow.mul(num);
            }
        }
        out
    }

    /// Rebuilds this polynomial over another context, matching variables by name.
    pub fn migrate(&self, to: &Arc<VarCtx>) -> MPoly {
        let lut: Vec<usize> = self
            .ctx
            .names()
            .iter()
            .map(|n| {
                to.index_of(n)
                    .unwrap_or_else(|| panic!("target context lacks variable {n:?}"))
            })
            .collect();
        let mut out = MPoly::zero(to);
        for (m, c) in &self.terms {
            let pairs = m
                .pairs()
                .iter()
                .map(|&(v, e)| (lut[v as usize] as u32, e))
                .collect();
            out.add_term(Mono::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Coefficients with respect to powers of `var`, constant term first.
    /// The coefficients live in the same context but do not use `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero(&self.ctx); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp_of(var) as usize;
            let pairs = m
                .pairs()
                .iter()
                .copied()
                .filter(|&(v, _)| v as usize != var)
                .collect();
            out[e].add_term(Mono::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Rational content: gcd of all coefficients (nonnegative).
    pub fn content(&self) -> Rat {
        let mut g = Rat::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the rational content and fixes the grlex-leading
    /// coefficient to be positive. Zero stays zero.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().unwrap().1.is_negative() {
            g = -g;
        }
        self.scale(&g.recip())
    }

    /// Exact polynomial division: returns q with self = divisor * q, if it exists.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        same_ctx(&self.ctx, &divisor.ctx);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MPoly::zero(&self.ctx);
        let (dm, dc) = {
            let (m, c) = divisor.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = &rc / &dc;
            let t = MPoly::from_terms(&self.ctx, vec![(qm, qc)]);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// True iff `self` divides `other` exactly.
    pub fn divides(&self, other: &MPoly) -> bool {
        assert!(!self.is_zero(), "divisibility by zero");
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder of `self` by `divisor` with respect to `var`:
    /// lc(divisor)^(da-db+1) * self = q * divisor + rem.
    pub fn pseudo_rem(&self, divisor: &MPoly, var: usize) -> MPoly {
        let db = divisor.degree_in(var);
        assert!(db > 0 || !divisor.is_zero());
        let bcoeffs = divisor.coeffs_in(var);
        let lb = bcoeffs[db as usize].clone();
        let mut rem = self.clone();
        let xv = MPoly::var(&self.ctx, var);
        loop {
            let da = rem.degree_in(var);
            if rem.is_zero() || da < db {
                return rem;
            }
            let la = rem.coeffs_in(var)[da as usize].clone();
            // rem = rem * lb - la * x^(da-db) * divisor
            rem = rem.mul(&lb).sub(&la.mul(&xv.pow(da - db)).mul(divisor));
        }
    }

    /// GCD by primitive-part Euclidean recursion on the highest live variable.
    /// Result is integer-primitive with positive leading coefficient.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let var = {
            let mut v: Option<usize> = None;
            for m in self.terms.keys().chain(other.terms.keys()) {
                for x in m.vars() {
                    v = Some(v.map_or(x, |b| b.max(x)));
                }
            }
            match v {
                None => return MPoly::one(&self.ctx),
                Some(v) => v,
            }
        };
        if !self.uses_var(var) || !other.uses_var(var) {
            // var lives in only one operand: gcd divides the content in var
            let (with, without) = if self.uses_var(var) {
                (self, other)
            } else {
                (other, self)
            };
            let cont = with
                .coeffs_in(var)
                .into_iter()
                .filter(|c| !c.is_zero())
                .fold(MPoly::zero(&self.ctx), |acc, c| acc.gcd(&c));
            return cont.gcd(without);
        }
        // contents with respect to var
        let cont = |p: &MPoly| -> MPoly {
            p.coeffs_in(var)
                .into_iter()
                .filter(|c| !c.is_zero())
                .fold(MPoly::zero(&self.ctx), |acc, c| acc.gcd(&c))
        };
        let ca = cont(self);
        let cb = cont(other);
        let cg = ca.gcd(&cb);
        let mut a = self.div_exact(&ca).expect("content division");
        let mut b = other.div_exact(&cb).expect("content division");
        if a.degree_in(var) < b.degree_in(var) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b, var);
            a = b;
            b = if r.is_zero() {
                r
            } else {
                let c = cont(&r);
                r.div_exact(&c).expect("primitive part")
            };
        }
        let prim = {
            let c = cont(&a);
            a.div_exact(&c).expect("primitive part")
        };
        cg.mul(&prim).primitive()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            if !mag.is_one() || m.is_unit() {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for &(v, e) in m.pairs() {
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ctx.name(v as usize))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx2() -> Arc<VarCtx> {
        VarCtx::new(vec!["c", "lambda"])
    }

    #[test]
    fn difference_of_squares() {
        let ctx = ctx2();
        let c = MPoly::var_named(&ctx, "c");
        let one = MPoly::one(&ctx);
        let p = c.sub(&one).mul(&c.add(&one));
        assert_eq!(p, c.mul(&c).sub(&one));
    }

    #[test]
    fn det4_factor_expansion() {
        // (c-25)(c-1) = 25 - 26 c + c^2
        let ctx = ctx2();
        let c = MPoly::var_named(&ctx, "c");
        let p = c.sub(&MPoly::int(&ctx, 25)).mul(&c.sub(&MPoly::int(&ctx, 1)));
        let expect = MPoly::int(&ctx, 25)
            .sub(&c.scale(&Rat::from_int(26)))
            .add(&c.mul(&c));
        assert_eq!(p, expect);
    }

    #[test]
    fn grlex_order() {
        let ctx = ctx2();
        // c^2 > c*lambda > lambda^2 > c > lambda > 1 under grlex with c first
        let c = Mono::from_pairs(vec![(0, 1)]);
        let l = Mono::from_pairs(vec![(1, 1)]);
        let c2 = Mono::from_pairs(vec![(0, 2)]);
        let cl = Mono::from_pairs(vec![(0, 1), (1, 1)]);
        let l2 = Mono::from_pairs(vec![(1, 2)]);
        let mut v = vec![
            Mono::unit(),
            l.clone(),
            c.clone(),
            l2.clone(),
            cl.clone(),
            c2.clone(),
        ];
        v.sort();
        assert_eq!(v, vec![Mono::unit(), l, c, l2, cl, c2]);
        let _ = ctx;
    }

    #[test]
    fn gcd_and_divides() {
        let ctx = ctx2();
        let c = MPoly::var_named(&ctx, "c");
        let one = MPoly::one(&ctx);
        let a = c.mul(&c).sub(&one); // c^2 - 1
        let b = c.sub(&one); // c - 1
        assert_eq!(a.gcd(&b), b);
        assert!(b.divides(&a));
        assert!(!c.sub(&MPoly::int(&ctx, 2)).divides(&a));
    }

    #[test]
    fn gcd_bivariate() {
        let ctx = ctx2();
        let c = MPoly::var_named(&ctx, "c");
        let l = MPoly::var_named(&ctx, "lambda");
        let f = c.add(&l); // c + lambda
        let g = c.sub(&l); // c - lambda
        let a = f.mul(&g).mul(&f);
        let b = f.mul(&g).mul(&g);
        let d = a.gcd(&b);
        assert_eq!(d, f.mul(&g).primitive());
    }

    #[test]
    fn subst_eval() {
        let ctx = ctx2();
        let c = MPoly::var_named(&ctx, "c");
        let l = MPoly::var_named(&ctx, "lambda");
        let p = c.mul(&c).add(&l.scale(&Rat::frac(3, 2)));
        let v = p.eval(&[Rat::from_int(2), Rat::from_int(4)]);
        assert_eq!(v, Rat::from_int(10));
        let mut map = BTreeMap::new();
        map.insert(1usize, c.clone()); // lambda := c
        let q = p.subst(&map);
        assert_eq!(q, c.mul(&c).add(&c.scale(&Rat::frac(3, 2))));
    }

    #[test]
    fn derivative() {
        let ctx = ctx2();
        let c = MPoly::var_named(&ctx, "c");
        let p = c.pow(3).scale(&Rat::frac(1, 3));
        assert_eq!(p.derivative(0), c.pow(2));
    }
}
