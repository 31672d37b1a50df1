//! Yang–Baxter and Hecke relation checkers, braid-group representations on
//! tensor powers, and Markov-trace link invariants from enhanced operators.

mod hecke;
mod invariant;
mod ybop;

pub use hecke::{check_hecke, check_hecke_algebroid, HeckeCase, HeckeFamily, HeckeParams};
pub use invariant::{builtin_jones, eyb_invariant, eyb_trace, EnhancedYb, EybError};
pub use ybop::{braid_rep, check_ybe, YbError, YbOp, MAX_REP_DIMENSION};
