//! The reparametrization by lambda: closed forms for a3, a7, d28 (and the
//! weight-14 parameter e), the quadratic constraint they satisfy, and the
//! substitution that turns the table into polynomial data in (c, lambda).

use crate::vars::{VAR_A3, VAR_A7, VAR_C, VAR_D28, VAR_E, VAR_LAMBDA};
use crate::{BootResult, Bootstrap, BootstrapError};
use exactalg::{MPoly, Rat, RatFunc, VarCtx};
use std::collections::BTreeMap;
use std::sync::Arc;

fn c_of(ctx: &Arc<VarCtx>) -> MPoly {
    MPoly::var(ctx, VAR_C)
}

fn lam_of(ctx: &Arc<VarCtx>) -> MPoly {
    MPoly::var(ctx, VAR_LAMBDA)
}

/// a3 = 256 (c-1)(24+c)(2c-1) lambda
pub fn a3_value(ctx: &Arc<VarCtx>) -> MPoly {
    let c = c_of(ctx);
    let one = MPoly::one(ctx);
    c.sub(&one)
        .mul(&c.add(&MPoly::int(ctx, 24)))
        .mul(&c.scale(&Rat::from_int(2)).sub(&one))
        .mul(&lam_of(ctx))
        .scale(&Rat::from_int(256))
}

/// a7 = -(640/63)(c-1)(24+c)(2c-1)(-1 + 49 lambda^2 (c-25)(c-1))
pub fn a7_value(ctx: &Arc<VarCtx>) -> MPoly {
    let c = c_of(ctx);
    let one = MPoly::one(ctx);
    let lam = lam_of(ctx);
    let disc = lam
        .mul(&lam)
        .mul(&c.sub(&MPoly::int(ctx, 25)))
        .mul(&c.sub(&one))
        .scale(&Rat::from_int(49))
        .sub(&one);
    c.sub(&one)
        .mul(&c.add(&MPoly::int(ctx, 24)))
        .mul(&c.scale(&Rat::from_int(2)).sub(&one))
        .mul(&disc)
        .scale(&Rat::frac(-640, 63))
}

/// d28 = (4/21)(2c-1)(5 - 49 lambda (c-1)); e is fixed to the same value.
pub fn d28_value(ctx: &Arc<VarCtx>) -> MPoly {
    let c = c_of(ctx);
    let one = MPoly::one(ctx);
    let inner = MPoly::int(ctx, 5).sub(
        &lam_of(ctx)
            .mul(&c.sub(&one))
            .scale(&Rat::from_int(49)),
    );
    c.scale(&Rat::from_int(2))
        .sub(&one)
        .mul(&inner)
        .scale(&Rat::frac(4, 21))
}

/// The rejected second branch d28' = (4/21)(2c-1)(-5 - 49 lambda (c-1)).
pub fn d28_rejected_value(ctx: &Arc<VarCtx>) -> MPoly {
    let c = c_of(ctx);
    let one = MPoly::one(ctx);
    let inner = MPoly::int(ctx, -5).sub(
        &lam_of(ctx)
            .mul(&c.sub(&one))
            .scale(&Rat::from_int(49)),
    );
    c.scale(&Rat::from_int(2))
        .sub(&one)
        .mul(&inner)
        .scale(&Rat::frac(4, 21))
}

/// 7 a3^2 + 960 a7 (1-2c) + 784 d28 a3 (c-1) + 10752 d28^2 (c-1)(24+c),
/// the constraint that ends d28's freedom at the weight-14 stage.
pub fn d28_quadratic(ctx: &Arc<VarCtx>) -> MPoly {
    let c = c_of(ctx);
    let one = MPoly::one(ctx);
    let a3 = MPoly::var(ctx, VAR_A3);
    let a7 = MPoly::var(ctx, VAR_A7);
    let d28 = MPoly::var(ctx, VAR_D28);
    let t1 = a3.mul(&a3).scale(&Rat::from_int(7));
    let t2 = a7
        .mul(&one.sub(&c.scale(&Rat::from_int(2))))
        .scale(&Rat::from_int(960));
    let t3 = d28
        .mul(&a3)
        .mul(&c.sub(&one))
        .scale(&Rat::from_int(784));
    let t4 = d28
        .mul(&d28)
        .mul(&c.sub(&one))
        .mul(&c.add(&MPoly::int(ctx, 24)))
        .scale(&Rat::from_int(10752));
    t1.add(&t2).add(&t3).add(&t4)
}

/// The substitution map for (a3, a7, d28) and optionally e.
pub fn lambda_map(ctx: &Arc<VarCtx>, with_e: bool) -> BTreeMap<usize, RatFunc> {
    let mut map = BTreeMap::new();
    map.insert(VAR_A3, RatFunc::from_poly(a3_value(ctx)));
    map.insert(VAR_A7, RatFunc::from_poly(a7_value(ctx)));
    map.insert(VAR_D28, RatFunc::from_poly(d28_value(ctx)));
    if with_e {
        map.insert(VAR_E, RatFunc::from_poly(d28_value(ctx)));
    }
    map
}

impl Bootstrap {
    /// Substitutes the lambda parametrization for the named parameters
    /// (including e when `with_e`), after which every table coefficient is
    /// a polynomial in (c, lambda). Verifies on the way that both branches
    /// of d28 satisfy the quadratic and that the chosen one is used.
    pub fn substitute_lambda(&mut self, with_e: bool) -> BootResult<()> {
        let ctx = self.ctx.clone();
        let field = self.field();
        let quad = d28_quadratic(&ctx);

        // both branches of d28 kill the quadratic
        for d in [d28_value(&ctx), d28_rejected_value(&ctx)] {
            let mut m: BTreeMap<usize, MPoly> = BTreeMap::new();
            m.insert(VAR_A3, a3_value(&ctx));
            m.insert(VAR_A7, a7_value(&ctx));
            m.insert(VAR_D28, d);
            if !quad.subst(&m).is_zero() {
                return Err(BootstrapError::Inconsistent {
                    stage: 14,
                    detail: "a d28 branch fails the quadratic".into(),
                });
            }
        }

        let map = lambda_map(&ctx, with_e);
        let table = self.alg.table().map_coeffs_into(&field, |c| c.subst(&map));
        // definedness over the polynomial ring: no denominators survive
        for (a, b) in table.pairs().collect::<Vec<_>>() {
            for (k, s) in table.entry_list(a, b).unwrap().iter().enumerate() {
                for (m, cf) in s.terms() {
                    if !cf.is_polynomial() {
                        return Err(BootstrapError::Inconsistent {
                            stage: 14,
                            detail: format!(
                                "entry W{a}_({k})W{b}, monomial {m}: coefficient {cf} is not polynomial in (c, lambda)"
                            ),
                        });
                    }
                }
            }
        }
        self.alg.replace_table(table);
        self.lambda_substituted = with_e;
        self.note(format!("lambda substitution applied (with_e = {with_e})"));
        Ok(())
    }

    /// Exports the table over the compact (c, lambda) context. Panics if
    /// named parameters or unknowns are still present.
    pub fn export_table(&self) -> (Arc<VarCtx>, noa::OpeTable<RatFunc>) {
        let small = VarCtx::new(vec!["c", "lambda"]);
        let sf = exactalg::RatFuncField::new(small.clone());
        let table = self.alg.table().map_coeffs_into(&sf, |cf| {
            let strip = |p: &MPoly| -> MPoly {
                let mut out = MPoly::zero(&small);
                for (m, co) in p.terms() {
                    let pairs: Vec<(u32, u32)> = m
                        .pairs()
                        .iter()
                        .map(|&(v, e)| {
                            assert!(
                                (v as usize) < 2,
                                "table still depends on {}",
                                self.ctx.name(v as usize)
                            );
                            (v, e)
                        })
                        .collect();
                    out.add_term(exactalg::Mono::from_pairs(pairs), co.clone());
                }
                out
            };
            RatFunc::new(strip(cf.num()), strip(cf.den()))
        });
        (small, table)
    }
}
