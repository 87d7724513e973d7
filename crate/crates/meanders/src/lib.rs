//! Open meanders, meandric systems, and the alternating knots and links they close into.
//!
//! The crate enumerates open meanders (a single curve crossing a horizontal axis
//! `n` times) and meandric systems, closes them into alternating knot/link
//! diagrams, computes exact polynomial invariants (Kauffman bracket, Jones
//! evaluations) with integer arithmetic, and runs censuses that group diagrams
//! into knot/link types. On top of that sit the diagram operations: sums of
//! meanders, products of ordered Gauss codes, chord diagrams, and searches for
//! minimal meander / ordered-code diagrams of a given knot.
//!
//! The data-parallel inner loops (census fingerprinting, crossing-change
//! searches) run on rayon when the default `parallel` feature is enabled and
//! fall back to sequential iteration otherwise.

pub mod algebra;
pub mod arch;
pub mod catalog;
pub mod classify;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod meander;
pub mod moves;
pub mod par;
pub mod poly;
pub mod render;
pub mod verify;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
