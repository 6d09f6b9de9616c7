//! Exact certification of infinite rank for satellite operators on the knot
//! concordance group.
//!
//! Two routes are covered. Patterns with nonzero winding number are handled
//! by Tristram-Levine signature jumps and Litherland's satellite formula
//! ([`signature`]). Winding-number-zero patterns are handled through the
//! rational self-linking of the lifted axis in the branched double cover
//! ([`seifert`]) combined with the instanton cobordism inequality and a
//! recursive torus-knot family construction ([`instanton`]).

pub mod arith;
pub mod catalog;
pub mod error;
pub mod instanton;
pub mod io;
pub mod seifert;
pub mod signature;

pub use error::{Error, Result};
