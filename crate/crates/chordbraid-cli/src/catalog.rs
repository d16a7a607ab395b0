//! JSON-lines catalog of diagrams with their computed indices.
//!
//! One record per canonical diagram, sorted by name, written atomically as
//! one string so repeated builds are byte-identical.

use std::path::Path;

use chordbraid::braidindex::compute_braid_index;
use chordbraid::{ChordDiagram, Limits, Strategy};
use serde::Serialize;

/// Everything the catalog stores about one diagram.
#[derive(Debug, Serialize)]
pub struct CatalogRecord {
    /// Canonical name in comma form, valid for any label size.
    pub canonical_name: String,
    /// Chord count.
    pub n: usize,
    /// Braid index under the merge strategy.
    pub braid_index: u32,
    /// Value reached by the literal strategy; at least `braid_index`.
    pub literal_index: u32,
    /// Merge witness word realizing `braid_index`.
    pub witness: String,
    /// Lower and upper bound from the parallel-set and chord-count rules.
    pub bounds: (u32, u32),
    /// Whether some chord crosses every other chord.
    pub has_special_chord: bool,
    /// For diagrams with a special chord: whether an associated permutation
    /// has exactly one descent. Null otherwise.
    pub single_descent: Option<bool>,
    /// Weights of the amalgamated diagram, in chord order.
    pub fan_profile: Vec<u32>,
}

/// Computes the record for one diagram.
pub fn record(diagram: &ChordDiagram, limits: &Limits) -> chordbraid::Result<CatalogRecord> {
    let merge = compute_braid_index(diagram, Strategy::Merge, limits)?;
    let literal = compute_braid_index(diagram, Strategy::Literal, limits)?;
    let specials = diagram.special_chords();
    let single_descent = if specials.is_empty() {
        None
    } else {
        Some(diagram.is_braid_index_three_special()?)
    };
    let fan_profile = diagram.amalgamate()?.weights().to_vec();
    Ok(CatalogRecord {
        canonical_name: diagram.name().comma_string(),
        n: diagram.chord_count(),
        braid_index: merge.value,
        literal_index: literal.value,
        witness: merge.witness.to_string(),
        bounds: diagram.index_bounds(),
        has_special_chord: !specials.is_empty(),
        single_descent,
        fan_profile,
    })
}

/// Writes one JSON line per diagram and returns the record count.
pub fn write_catalog(
    path: &Path,
    diagrams: &[ChordDiagram],
    limits: &Limits,
) -> Result<usize, Box<dyn std::error::Error>> {
    let mut out = String::new();
    for d in diagrams {
        out.push_str(&serde_json::to_string(&record(d, limits)?)?);
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(diagrams.len())
}
