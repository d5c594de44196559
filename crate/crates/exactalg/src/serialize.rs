//! Stable text serialization for polynomials and rational functions.
//!
//! `MPoly` serializes as a list of {exponents, coeff} with dense exponent
//! vectors and "p/q" coefficient strings; round-trips are bit-exact given
//! the owning context.

use crate::mpoly::{MPoly, Mono, VarCtx};
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermRepr {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MPolyRepr {
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RatFuncRepr {
    pub num: MPolyRepr,
    pub den: MPolyRepr,
}

impl MPolyRepr {
    pub fn of(p: &MPoly) -> MPolyRepr {
        let arity = p.ctx().arity();
        let terms = p
            .terms()
            .map(|(m, c)| {
                let mut exps = vec![0u32; arity];
                for &(v, e) in m.pairs() {
                    exps[v as usize] = e;
                }
                TermRepr {
                    exponents: exps,
                    coeff: c.to_string(),
                }
            })
            .collect();
        MPolyRepr { terms }
    }

    pub fn build(&self, ctx: &Arc<VarCtx>) -> Result<MPoly, String> {
        let mut out = MPoly::zero(ctx);
        for t in &self.terms {
            if t.exponents.len() != ctx.arity() {
                return Err(format!(
                    "exponent vector of length {} in context of arity {}",
                    t.exponents.len(),
                    ctx.arity()
                ));
            }
            let pairs = t
                .exponents
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| (v as u32, e))
                .collect();
            let c: Rat = t.coeff.parse()?;
            if c.is_zero() {
                return Err("explicit zero coefficient in serialized polynomial".into());
            }
            out.add_term(Mono::from_pairs(pairs), c);
        }
        Ok(out)
    }
}

impl RatFuncRepr {
    pub fn of(rf: &RatFunc) -> RatFuncRepr {
        RatFuncRepr {
            num: MPolyRepr::of(rf.num()),
            den: MPolyRepr::of(rf.den()),
        }
    }

    pub fn build(&self, ctx: &Arc<VarCtx>) -> Result<RatFunc, String> {
        let num = self.num.build(ctx)?;
        let den = self.den.build(ctx)?;
        if den.is_zero() {
            return Err("zero denominator in serialized rational function".into());
        }
        Ok(RatFunc::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let ctx = VarCtx::new(vec!["c", "lambda"]);
        let c = MPoly::var_named(&ctx, "c");
        let l = MPoly::var_named(&ctx, "lambda");
        let p = c
            .pow(3)
            .scale(&Rat::frac(-32, 63))
            .add(&l.mul(&c).scale(&Rat::from_int(49)))
            .sub(&MPoly::one(&ctx));
        let repr = MPolyRepr::of(&p);
        let json = serde_json::to_string(&repr).unwrap();
        let back: MPolyRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build(&ctx).unwrap(), p);

        let rf = RatFunc::new(p.clone(), c.sub(&MPoly::one(&ctx)));
        let rrepr = RatFuncRepr::of(&rf);
        let json2 = serde_json::to_string(&rrepr).unwrap();
        let back2: RatFuncRepr = serde_json::from_str(&json2).unwrap();
        assert_eq!(back2.build(&ctx).unwrap(), rf);
    }
}
