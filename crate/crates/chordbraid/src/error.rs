//! Error type shared by every module in the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A name or word string could not be tokenized.
    Syntax(String),
    /// A label appears a number of times other than exactly twice.
    LabelCount { label: u32, count: usize },
    /// Labels must be exactly 1..=n; this one is out of range.
    LabelGap { label: u32, max: u32 },
    /// The input was empty where a nonempty value is required.
    EmptyInput,
    /// The word is empty but the operation needs at least one generator.
    EmptyWord,
    /// A generator or strand index lies outside the declared strand count.
    IndexOutOfRange { index: u32, strands: u32 },
    /// A position argument points past the end of a word.
    Position { position: usize, len: usize },
    /// The requested move is not applicable there; the message names the
    /// violated clause.
    NotApplicable(String),
    /// A weighted diagram was built on a base that still contains a
    /// non-singleton fan.
    NotAmalgamated(String),
    /// The input is larger than the configured cap.
    CapExceeded(String),
    /// An enumeration budget ran out before the search finished.
    BudgetExceeded(String),
    /// The diagram has no special chord, so the construction is undefined.
    NoSpecialChord,
    /// The diagram does not have braid index three.
    NotThreeBraid(String),
    /// The word is not in one-block form where one is required.
    NotOneBlock,
    /// An iteration cap tripped.
    IterationCap { cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax(msg) => write!(f, "syntax error: {msg}"),
            Error::LabelCount { label, count } => {
                write!(f, "label {label} occurs {count} times, expected exactly 2")
            }
            Error::LabelGap { label, max } => {
                write!(f, "label {label} out of range, labels must cover 1..={max}")
            }
            Error::EmptyInput => write!(f, "input is empty"),
            Error::EmptyWord => write!(f, "word is empty"),
            Error::IndexOutOfRange { index, strands } => {
                write!(f, "index {index} out of range for {strands} strands")
            }
            Error::Position { position, len } => {
                write!(f, "position {position} out of range for word of length {len}")
            }
            Error::NotApplicable(msg) => write!(f, "move not applicable: {msg}"),
            Error::NotAmalgamated(msg) => write!(f, "base is not amalgamated: {msg}"),
            Error::CapExceeded(msg) => write!(f, "configured cap exceeded: {msg}"),
            Error::BudgetExceeded(msg) => write!(f, "search budget exceeded: {msg}"),
            Error::NoSpecialChord => write!(f, "diagram has no special chord"),
            Error::NotThreeBraid(msg) => write!(f, "diagram is not a 3-braid diagram: {msg}"),
            Error::NotOneBlock => write!(f, "word is not in one-block form"),
            Error::IterationCap { cap } => write!(f, "iteration cap of {cap} passes exceeded"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
