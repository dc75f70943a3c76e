//! Combinatorics of Schubert curves: jeu de taquin on skew tableaux, a
//! local algorithm for evacuation-shuffling, the monodromy operator it
//! computes, and the genomic tableaux its jumps generate.
//!
//! The crate is organized around the run of a single marked square through
//! a ballot filling:
//!
//! - [`partition`] and [`skew`]: partitions, rectangles, skew shapes,
//!   semistandard fillings, reading words, ballotness.
//! - [`jdt`]: slides, rectification, and the shuffle of adjacent tableaux.
//! - [`punctured`]: fillings with one marked square and the slide between
//!   the two chain endpoints.
//! - [`oracle`]: evacuation-shuffling by rectify, promote, un-rectify, used
//!   as the reference implementation.
//! - [`local`]: the local algorithm, its reverse, step operators, and
//!   strip decompositions.
//! - [`enumerate`]: exhaustive listings of the tableau sets for a triple of
//!   partitions, plus the extremal parameter families.
//! - [`monodromy`]: orbits of the monodromy operator, genomic bijections,
//!   factorizations, fixed points, and curve invariants.
//! - [`sweep`], [`report`], [`svg`], [`mod@bench`]: verification sweeps over
//!   all small problems, JSON reports, path diagrams, and step-count
//!   benchmarks.
//!
//! Everything is deterministic; no randomness is used anywhere (the
//! `TABLEAU_SEED` environment variable is read by nothing and ignored).

pub mod bench;
pub mod enumerate;
pub mod error;
pub mod jdt;
pub mod local;
pub mod monodromy;
pub mod naive;
pub mod oracle;
pub mod partition;
pub mod punctured;
pub mod report;
pub mod skew;
pub mod svg;
pub mod sweep;

pub use enumerate::SchubertProblem;
pub use error::{Error, Result};
pub use partition::{Cell, Partition, Rectangle};
pub use punctured::{BoxPosition, PuncturedTableau};
pub use skew::{SkewShape, SkewTableau, MARKER};
