//! Combinatorics of chord diagrams on an oriented circle and of the braided
//! words that close up to them.
//!
//! The crate is organized in four layers:
//!
//! * [`diagram`]: canonical names for chord diagrams, crossing graphs, fans,
//!   amalgamation, and the structural predicates built on them.
//! * [`braidword`]: words in the monoid of horizontal chords on m strands,
//!   the closure map back to diagrams, and the rewriting moves
//!   (commutation, cyclic permutation, stabilization, strand merging).
//! * [`braidindex`]: braid index computation by stabilization search, an
//!   independent brute-force oracle, and the 3-braid uniqueness check.
//! * [`relations`]: exact rational linear algebra over diagrams modulo
//!   four-term and one-term relations, with combing of chord words.
//!
//! The core crate is `no_std` (with `alloc`); everything is deterministic,
//! so repeated runs produce identical output byte for byte.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod braidindex;
pub mod braidword;
pub mod diagram;
pub mod error;
pub mod relations;

pub use braidindex::{BraidIndexResult, Strategy};
pub use braidword::{ChordWord, Generator, Move, MoveTrace};
pub use diagram::{ChordDiagram, Name, WeightedDiagram};
pub use error::{Error, Result};

/// Search and enumeration caps.
///
/// The defaults keep every operation comfortably interactive. [`Limits::slow`]
/// raises the oracle cap for the expensive cross-checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest chord count the brute-force oracle will attempt.
    pub oracle_max_chords: usize,
    /// Largest chord count for diagram enumeration.
    pub enumerate_max_chords: usize,
    /// Largest chord count (after amalgamation for the merge strategy) for
    /// which the braid index search will enumerate labelings.
    pub braid_index_max_chords: usize,
    /// Safety valve for the one-block rewriting loop.
    pub one_block_iteration_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_max_chords: 4,
            enumerate_max_chords: 6,
            braid_index_max_chords: 8,
            one_block_iteration_cap: 100_000,
        }
    }
}

impl Limits {
    /// Limits for slow verification runs: the oracle accepts five chords.
    pub fn slow() -> Self {
        Limits {
            oracle_max_chords: 5,
            ..Limits::default()
        }
    }
}
