//! The bootstrap variable context: base parameters, the four named
//! structure-constant parameters, and a pool of ansatz unknowns.

use exactalg::{MPoly, VarCtx};
use noa::Monomial;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const VAR_C: usize = 0;
pub const VAR_LAMBDA: usize = 1;
pub const VAR_A3: usize = 2;
pub const VAR_A7: usize = 3;
pub const VAR_D28: usize = 4;
pub const VAR_E: usize = 5;
pub const FIRST_UNKNOWN: usize = 6;

/// Size of the reserved ansatz-unknown pool. Enough for the full weight-16
/// stage and inductive extensions through pair weight 16.
pub const UNKNOWN_POOL: usize = 8000;

pub fn bootstrap_ctx() -> Arc<VarCtx> {
    let mut names: Vec<String> = vec![
        "c".into(),
        "lambda".into(),
        "a3".into(),
        "a7".into(),
        "d28".into(),
        "e".into(),
    ];
    for i in 0..UNKNOWN_POOL {
        names.push(format!("u{i}"));
    }
    VarCtx::new(names)
}

/// Whether a variable index is an ansatz unknown (pool member).
pub fn is_pool_var(v: usize) -> bool {
    v >= FIRST_UNKNOWN
}

/// Whether a variable is one of the four named free parameters.
pub fn is_named_param(v: usize) -> bool {
    (VAR_A3..=VAR_E).contains(&v)
}

/// Provenance of an ansatz variable: which product entry and monomial it
/// multiplies.
#[derive(Clone, Debug)]
pub struct VarOrigin {
    pub pair: (u32, u32),
    pub k: i64,
    pub monomial: Monomial,
}

#[derive(Default)]
pub struct VarTable {
    next: usize,
    pub origins: BTreeMap<usize, VarOrigin>,
}

impl VarTable {
    pub fn new() -> VarTable {
        VarTable {
            next: FIRST_UNKNOWN,
            origins: BTreeMap::new(),
        }
    }

    /// Allocates a fresh unknown, or binds one of the named parameters when
    /// the entry slot is the one the parameter is defined by.
    pub fn alloc(&mut self, origin: VarOrigin, named: Option<usize>) -> usize {
        let idx = match named {
            Some(v) => v,
            None => {
                let v = self.next;
                assert!(
                    v < FIRST_UNKNOWN + UNKNOWN_POOL,
                    "ansatz unknown pool exhausted"
                );
                self.next += 1;
                v
            }
        };
        self.origins.insert(idx, origin);
        idx
    }

    pub fn describe(&self, ctx: &Arc<VarCtx>, v: usize) -> String {
        match self.origins.get(&v) {
            Some(o) => format!(
                "{} = coeff of {} in W{}_({})W{}",
                ctx.name(v),
                o.monomial,
                o.pair.0,
                o.k,
                o.pair.1
            ),
            None => ctx.name(v).to_string(),
        }
    }
}

/// Variable indices (of any kind beyond c, lambda) occurring in a polynomial.
pub fn param_vars(p: &MPoly) -> Vec<usize> {
    let mut vs: Vec<usize> = Vec::new();
    for (m, _) in p.terms() {
        for v in m.vars() {
            if v >= VAR_A3 && !vs.contains(&v) {
                vs.push(v);
            }
        }
    }
    vs.sort();
    vs
}

/// Pool unknowns occurring in a polynomial.
pub fn pool_vars(p: &MPoly) -> Vec<usize> {
    param_vars(p).into_iter().filter(|&v| is_pool_var(v)).collect()
}
