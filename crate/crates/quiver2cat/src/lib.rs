//! Construct, verify and deconstruct finitary 2-categories presented by
//! 2-quivers.
//!
//! The pipeline mirrors the way such categories are assembled by hand:
//!
//! 1. [`quiver2`] — 2-quivers, licit 1-compositions and formal direct sums;
//! 2. [`pathcat`] — 2-paths and matrices of path polynomials with vertical
//!    composition;
//! 3. [`quotient`] — admissible vertical ideals and echelon normal forms;
//! 4. [`drop`] — vertical drop tables, their axioms, and the horizontal
//!    composition they induce;
//! 5. [`twocat`] — assembled concrete finitary 2-categories (the interchange
//!    format) and the full axiom suite;
//! 6. [`gabriel`] — vertical radicals, Gabriel 2-quiver extraction and the
//!    round trip;
//! 7. [`structure`] — cells, weak involutions, adjunctions, fiat reports;
//! 8. [`constructions`] — builders for ordered monoids, Catalan monoids,
//!    projective (semi)categories, and the shipped fixtures.
//!
//! All scalars are exact rationals ([`exactlin`]), so every certification in
//! this crate is bit-reproducible.

pub mod cells;
pub mod cli;
pub mod constructions;
pub mod drop;
pub mod exactlin;
pub mod fileio;
pub mod gabriel;
pub mod pathcat;
pub mod quiver2;
pub mod quotient;
pub mod report;
pub mod structure;
pub mod twocat;

pub use exactlin::Rat;
