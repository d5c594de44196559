//! Constructs the OPE data of the universal even-spin algebra: ansatz
//! generation for the pair products, Jacobi-residue constraint extraction,
//! staged solving, the lambda reparametrization, and the inductive
//! extension that raises the weight budget.

pub mod lambda;
pub mod solver;
pub mod stages;
pub mod vars;

use exactalg::{Field, MPoly, Rat, RatFunc, RatFuncField, VarCtx};
use noa::{Algebra, GenSym, Monomial, OpeTable, State};
use std::sync::Arc;

pub use stages::{ExtendReport, StageReport};
pub use vars::{VarOrigin, VarTable};

#[derive(Debug)]
pub enum BootstrapError {
    Noa(noa::NoaError),
    /// A stage left pool unknowns undetermined.
    Underdetermined { stage: u32, unsolved: Vec<String> },
    /// A residual constraint contradicts the expected family.
    Inconsistent { stage: u32, detail: String },
}

impl std::fmt::Display for BootstrapError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BootstrapError::Noa(e) => write!(f, "{e}"),
            BootstrapError::Underdetermined { stage, unsolved } => write!(
                f,
                "stage {stage} left unknowns undetermined: {}",
                unsolved.join(", ")
            ),
            BootstrapError::Inconsistent { stage, detail } => {
                write!(f, "stage {stage} inconsistent: {detail}")
            }
        }
    }
}

impl std::error::Error for BootstrapError {}

impl From<noa::NoaError> for BootstrapError {
    fn from(e: noa::NoaError) -> Self {
        BootstrapError::Noa(e)
    }
}

pub type BootResult<T> = Result<T, BootstrapError>;

/// The bootstrap engine: an algebra over Q(c, lambda, a3, a7, d28, e, u...)
/// whose table is grown stage by stage.
pub struct Bootstrap {
    pub ctx: Arc<VarCtx>,
    pub alg: Algebra<RatFuncField>,
    pub vars: VarTable,
    pub log: Vec<String>,
    /// Highest pair total weight whose entries are fully determined.
    pub solved_pair_weight: u32,
    /// Set once the lambda substitution has been applied.
    pub lambda_substituted: bool,
    /// Prints per-identity progress to stderr.
    pub verbose: bool,
}

impl Bootstrap {
    /// Table containing only the Virasoro field and the weight-4 primary:
    /// L_(k)L per the central-charge OPE and L_(k)W4 with W4 primary.
    pub fn seed() -> Bootstrap {
        let ctx = vars::bootstrap_ctx();
        let field = RatFuncField::new(ctx.clone());
        let c = RatFunc::from_poly(MPoly::var(&ctx, vars::VAR_C));
        let l = GenSym::base(2);
        let w4 = GenSym::base(4);

        let mut table = OpeTable::new();
        let mut k0 = State::zero(3);
        k0.add_term(&field, Monomial::single(l.d(1)), field.one());
        let mut k1 = State::zero(2);
        k1.add_term(&field, Monomial::single(l), field.from_int(2));
        let k2 = State::zero(1);
        let mut k3 = State::zero(0);
        k3.add_term(&field, Monomial::vacuum(), c.scale(&Rat::frac(1, 2)));
        table.insert_pair(2, 2, vec![k0, k1, k2, k3]);

        let mut p0 = State::zero(5);
        p0.add_term(&field, Monomial::single(w4.d(1)), field.one());
        let mut p1 = State::zero(4);
        p1.add_term(&field, Monomial::single(w4), field.from_int(4));
        table.insert_pair(
            2,
            4,
            vec![
                p0,
                p1,
                State::zero(3),
                State::zero(2),
                State::zero(1),
                State::zero(0),
            ],
        );

        Bootstrap {
            ctx,
            alg: Algebra::new(field, table),
            vars: VarTable::new(),
            log: Vec::new(),
            solved_pair_weight: 6,
            lambda_substituted: false,
            verbose: std::env::var("BOOTSTRAP_VERBOSE").is_ok(),
        }
    }

    pub fn field(&self) -> RatFuncField {
        self.alg.field.clone()
    }

    pub fn note(&mut self, s: String) {
        self.log.push(s);
    }
}
