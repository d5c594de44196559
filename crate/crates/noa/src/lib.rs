//! Normally ordered algebra over a generator-pair OPE table: the
//! free-generation monomial basis, weight-graded states, and the complete
//! n-th product calculus for composite states.

pub mod algebra;
pub mod serial;
pub mod state;
pub mod table;
pub mod word;

pub use algebra::{basis_states, validate_table, Algebra};
pub use state::State;
pub use table::{pair_key, NoaError, NoaResult, OpeTable};
pub use word::{basis, character, GenSym, Monomial};
