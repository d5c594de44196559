//! Rational functions num/den over a shared variable context.
//!
//! Canonical form: gcd(num, den) is a unit, den is integer-primitive with
//! positive grlex-leading coefficient, and zero is 0/1.

use crate::mpoly::{MPoly, VarCtx};
use crate::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(num: MPoly, den: MPoly) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(num: MPoly) -> RatFunc {
        let den = MPoly::one(num.ctx());
        RatFunc { num, den }
    }

    pub fn zero(ctx: &Arc<VarCtx>) -> RatFunc {
        RatFunc::from_poly(MPoly::zero(ctx))
    }

    pub fn one(ctx: &Arc<VarCtx>) -> RatFunc {
        RatFunc::from_poly(MPoly::one(ctx))
    }

    pub fn constant(ctx: &Arc<VarCtx>, r: Rat) -> RatFunc {
        RatFunc::from_poly(MPoly::constant(ctx, r))
    }

    pub fn var_named(ctx: &Arc<VarCtx>, name: &str) -> RatFunc {
        RatFunc::from_poly(MPoly::var_named(ctx, name))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        self.num.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The denominator is constant, i.e. the value is polynomial over Q.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Clears a constant denominator. Panics if the value is not polynomial.
    pub fn to_poly(&self) -> MPoly {
        let d = self
            .den
            .as_constant()
            .expect("rational function is not polynomial");
        self.num.scale(&d.recip())
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one(self.num.ctx());
            return;
        }
        if !self.den.is_constant() {
            let g = self.num.gcd(&self.den);
            if !g.is_one() {
                self.num = self.num.div_exact(&g).expect("gcd divides num");
                self.den = self.den.div_exact(&g).expect("gcd divides den");
            }
        }
        // integer-primitive positive-leading denominator
        let prim = self.den.primitive();
        let unit = self
            .den
            .div_exact(&prim)
            .and_then(|q| q.as_constant())
            .expect("denominator unit part");
        self.den = prim;
        self.num = self.num.scale(&unit.recip());
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_exact(&g).unwrap(),
                other.den.div_exact(&g).unwrap(),
            )
        };
        // lcm = da * g * db ; a/(da g) + b/(db g) = (a db + b da) / (da db g)
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        RatFunc::new(num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        // cross-cancel before multiplying to keep intermediates small
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        assert!(!other.is_zero(), "division by zero rational function");
        self.mul(&RatFunc::new(other.den.clone(), other.num.clone()))
    }

    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, r: &Rat) -> RatFunc {
        if r.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        RatFunc {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        let mut out = RatFunc::one(self.ctx());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes rational functions for selected variables.
    pub fn subst(&self, map: &BTreeMap<usize, RatFunc>) -> RatFunc {
        let ctx = self.ctx();
        let subst_poly = |p: &MPoly| -> RatFunc {
            let mut acc = RatFunc::zero(ctx);
            for (m, c) in p.terms() {
                let mut t = RatFunc::constant(ctx, c.clone());
                let mut rest: Vec<(u32, u32)> = Vec::new();
                for &(v, e) in m.pairs() {
                    match map.get(&(v as usize)) {
                        Some(rf) => t = t.mul(&rf.pow(e)),
                        None => rest.push((v, e)),
                    }
                }
                if !rest.is_empty() {
                    let mono = MPoly::from_terms(
                        ctx,
                        vec![(crate::mpoly::Mono::from_pairs(rest), Rat::one())],
                    );
                    t = t.mul(&RatFunc::from_poly(mono));
                }
                acc = acc.add(&t);
            }
            acc
        };
        let n = subst_poly(&self.num);
        let d = subst_poly(&self.den);
        assert!(
            !d.is_zero(),
            "substitution sends denominator {} to zero",
            self.den
        );
        n.div(&d)
    }

    /// Substitutes var := num/den into this value with a single
    /// normalization at the end (much cheaper than the general `subst` for
    /// chains of single-variable replacements).
    pub fn subst_one_frac(&self, var: usize, num: &MPoly, den: &MPoly) -> RatFunc {
        let dn = self.num.degree_in(var);
        let dd = self.den.degree_in(var);
        if dn == 0 && dd == 0 {
            return self.clone();
        }
        // scale both by den^max so the den powers line up
        let top = dn.max(dd);
        let n = self.num.subst_one_frac(var, num, den);
        let d = self.den.subst_one_frac(var, num, den);
        let (n, d) = if dn < top {
            (n.mul(&den.pow(top - dn)), d)
        } else if dd < top {
            (n, d.mul(&den.pow(top - dd)))
        } else {
            (n, d)
        };
        RatFunc::new(n, d)
    }

    /// Full evaluation at a rational point. None if the denominator vanishes.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    pub fn migrate(&self, to: &Arc<VarCtx>) -> RatFunc {
        RatFunc {
            num: self.num.migrate(to),
            den: self.den.migrate(to),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::VarCtx;

    #[test]
    fn normalization_idempotent() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = MPoly::var_named(&ctx, "c");
        let one = MPoly::one(&ctx);
        // (c^2-1) / (2c-2) reduces to (c+1)/2 with the constant den absorbed
        let rf = RatFunc::new(
            c.mul(&c).sub(&one),
            c.scale(&Rat::from_int(2)).sub(&MPoly::int(&ctx, 2)),
        );
        assert_eq!(rf.num(), &c.add(&one).scale(&Rat::frac(1, 2)));
        assert_eq!(rf.den(), &MPoly::one(&ctx));
        assert!(rf.is_polynomial());
        let again = RatFunc::new(rf.num().clone(), rf.den().clone());
        assert_eq!(rf, again);
    }

    #[test]
    fn field_ops() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = RatFunc::var_named(&ctx, "c");
        let one = RatFunc::one(&ctx);
        let a = one.div(&c.sub(&one)); // 1/(c-1)
        let b = one.div(&c.add(&one)); // 1/(c+1)
        let s = a.add(&b); // 2c/(c^2-1)
        let expect = RatFunc::new(
            MPoly::var_named(&ctx, "c").scale(&Rat::from_int(2)),
            MPoly::var_named(&ctx, "c")
                .mul(&MPoly::var_named(&ctx, "c"))
                .sub(&MPoly::one(&ctx)),
        );
        assert_eq!(s, expect);
        assert_eq!(s.mul(&s.recip()), one);
    }

    #[test]
    fn denominator_sign_canonical() {
        let ctx = VarCtx::new(vec!["c"]);
        let c = MPoly::var_named(&ctx, "c");
        let rf = RatFunc::new(MPoly::one(&ctx), c.neg());
        assert_eq!(rf.den(), &c);
        assert_eq!(rf.num(), &MPoly::int(&ctx, -1));
    }
}
