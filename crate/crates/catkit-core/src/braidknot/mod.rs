//! Braid words, their Markov closures as planar link diagrams, and a
//! Kauffman-bracket skein oracle producing Jones values.

mod braid;
mod bracket;
mod pd;

pub use braid::{braiding_gamma, BraidError, BraidWord, Permutation};
pub use bracket::{kauffman_bracket, BracketError, MAX_BRACKET_CROSSINGS};
pub use pd::{Crossing, PdError, PlanarDiagram};
