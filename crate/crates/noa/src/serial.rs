//! Structured-text serialization of states and OPE tables with rational
//! function coefficients. Round-trips are bit-exact.

use crate::state::State;
use crate::table::OpeTable;
use crate::word::{GenSym, Monomial};
use exactalg::serialize::RatFuncRepr;
use exactalg::{RatFunc, RatFuncField, VarCtx};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct StateDoc {
    pub weight: u32,
    pub terms: Vec<(Vec<GenSym>, RatFuncRepr)>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PairDoc {
    pub a: u32,
    pub b: u32,
    pub products: Vec<StateDoc>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TableDoc {
    pub version: u32,
    pub vars: Vec<String>,
    pub pairs: Vec<PairDoc>,
}

pub fn state_to_doc(s: &State<RatFunc>) -> StateDoc {
    StateDoc {
        weight: s.weight(),
        terms: s
            .terms()
            .map(|(m, c)| (m.factors().to_vec(), RatFuncRepr::of(c)))
            .collect(),
    }
}

pub fn state_from_doc(
    doc: &StateDoc,
    ctx: &Arc<VarCtx>,
    field: &RatFuncField,
) -> Result<State<RatFunc>, String> {
    let mut s = State::zero(doc.weight);
    for (factors, repr) in &doc.terms {
        let m = Monomial::from_canonical(factors.clone());
        if m.weight() != doc.weight {
            return Err(format!(
                "monomial {m} has weight {} in a weight-{} state",
                m.weight(),
                doc.weight
            ));
        }
        let c = repr.build(ctx)?;
        if c.is_zero() {
            return Err(format!("explicit zero coefficient on {m}"));
        }
        s.add_term(field, m, c);
    }
    Ok(s)
}

pub fn table_to_doc(ctx: &Arc<VarCtx>, table: &OpeTable<RatFunc>) -> TableDoc {
    let pairs = table
        .pairs()
        .map(|(a, b)| PairDoc {
            a,
            b,
            products: table
                .entry_list(a, b)
                .unwrap()
                .iter()
                .map(state_to_doc)
                .collect(),
        })
        .collect();
    TableDoc {
        version: TABLE_FORMAT_VERSION,
        vars: ctx.names().to_vec(),
        pairs,
    }
}

pub fn table_from_doc(doc: &TableDoc) -> Result<(Arc<VarCtx>, OpeTable<RatFunc>), String> {
    if doc.version != TABLE_FORMAT_VERSION {
        return Err(format!(
            "table format version {} (expected {})",
            doc.version, TABLE_FORMAT_VERSION
        ));
    }
    let ctx = VarCtx::new(doc.vars.clone());
    let field = RatFuncField::new(ctx.clone());
    let mut table = OpeTable::new();
    for p in &doc.pairs {
        if p.a > p.b {
            return Err(format!("pair ({}, {}) not weight-ordered", p.a, p.b));
        }
        if p.products.len() != (p.a + p.b) as usize {
            return Err(format!(
                "pair ({}, {}) has {} products (expected {})",
                p.a,
                p.b,
                p.products.len(),
                p.a + p.b
            ));
        }
        let mut states = Vec::with_capacity(p.products.len());
        for (k, sd) in p.products.iter().enumerate() {
            let expect = p.a + p.b - k as u32 - 1;
            if sd.weight != expect {
                return Err(format!(
                    "entry W{}_({k})W{}: weight {} violates homogeneity (expected {expect})",
                    p.a, p.b, sd.weight
                ));
            }
            states.push(state_from_doc(sd, &ctx, &field).map_err(|e| {
                format!("entry W{}_({k})W{}: {e}", p.a, p.b)
            })?);
        }
        table.insert_pair(p.a, p.b, states);
    }
    Ok((ctx, table))
}
