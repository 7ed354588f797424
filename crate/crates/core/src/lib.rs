//! An explicit edge-coloring of `K_{q²}` (q an odd prime) in which every
//! five vertices span at least six colors, plus the tooling used to argue
//! it: detectors for forbidden colored configurations, an enumerator of
//! small colorings up to isomorphism, and an exhaustive clique verifier.
//!
//! The coloring is the product of two factors:
//!
//! * [`cfls`]: a block-structured coloring of β²-bit strings refined by a
//!   per-block sign vector;
//! * [`algebraic`]: `x1·y1 − x2 − y2` over `F_q` refined by a split of each
//!   reflection matching `β ↔ 2α − β`.
//!
//! [`combined`] embeds `F_q²` into bit strings and materializes the product.

pub mod algebraic;
pub mod cfls;
pub mod cli;
pub mod coloring;
pub mod combined;
pub mod enumerator;
pub mod error;
pub mod field;
pub mod patterns;
pub mod soundness;
pub mod verifier;

pub use coloring::EdgeColoring;
pub use combined::{Construction, Projection};
pub use error::{Error, Result};
pub use patterns::{ForbiddenPattern, PatternSet};
pub use verifier::{verify, VerifyReport};
