//! Drivers for the `verify` subcommand.
//!
//! Each driver re-checks one structural fact across every case up to a size
//! cap and returns the number of cases examined together with a description
//! of every violation. An empty violation list means the fact held.

use std::collections::BTreeMap;

use chordbraid::braidindex::{compute_braid_index, verify_three_braid_uniqueness};
use chordbraid::braidword::{braid_up, cyclically_equivalent};
use chordbraid::diagram::enumerate_diagrams;
use chordbraid::relations::{
    four_term_relations, is_one_block, one_block_form, rat, special_chord_property, DiagramCombo,
    RelationSystem,
};
use chordbraid::{ChordWord, Generator, Limits, Name, Result, Strategy};

/// The recognized check tokens, in the order they are documented.
pub const CHECKS: [&str; 8] = [
    "thm2.3",
    "thm3.2",
    "thm4.1",
    "prop3.4",
    "prop3.6",
    "prop5.1",
    "prop5.3",
    "remark5.2",
];

/// What a driver found.
pub struct Outcome {
    /// The check that ran.
    pub check: String,
    /// How many cases were examined.
    pub cases: u64,
    /// One line per violation; empty when the fact held everywhere.
    pub violations: Vec<String>,
}

/// Runs the named check. `max_chords` widens or narrows the sweep; each
/// check has its own default matching the documented desk-scale run.
pub fn run_check(check: &str, max_chords: Option<usize>, limits: &Limits) -> Result<Outcome> {
    let (cases, violations) = match check {
        "thm2.3" => braidings_converge(max_chords.unwrap_or(3), limits)?,
        "thm3.2" => strategies_agree(max_chords.unwrap_or(4), limits)?,
        "thm4.1" => uniqueness(max_chords.unwrap_or(6), limits)?,
        "prop3.4" => amalgamation_preserves_index(max_chords.unwrap_or(5), limits)?,
        "prop3.6" => bounds_bracket(max_chords.unwrap_or(5), limits)?,
        "prop5.1" => one_block_spans(max_chords.unwrap_or(4), limits)?,
        "prop5.3" => descent_characterizes(max_chords.unwrap_or(5), limits)?,
        "remark5.2" => one_block_words_special(max_chords.unwrap_or(3), limits)?,
        other => {
            return Err(chordbraid::Error::Syntax(format!(
                "unknown check '{other}'"
            )))
        }
    };
    Ok(Outcome {
        check: check.to_string(),
        cases,
        violations,
    })
}

/// All generators of the monoid on `m` strands, in lex order.
fn all_gens(m: u32) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..m {
        for j in (i + 1)..=m {
            out.push(Generator::new(i, j).expect("valid indices"));
        }
    }
    out
}

/// All words of exactly `len` letters over `gens` on `m` strands.
fn words_of_length(m: u32, gens: &[Generator], len: usize) -> Vec<ChordWord> {
    let mut out = Vec::new();
    let mut picked = Vec::with_capacity(len);
    fn fill(
        m: u32,
        gens: &[Generator],
        len: usize,
        picked: &mut Vec<Generator>,
        out: &mut Vec<ChordWord>,
    ) {
        if picked.len() == len {
            out.push(ChordWord::new(m, picked.clone()).expect("valid word"));
            return;
        }
        for &g in gens {
            picked.push(g);
            fill(m, gens, len, picked, out);
            picked.pop();
        }
    }
    fill(m, gens, len, &mut picked, &mut out);
    out
}

/// Any two words with the same closure braid up to cyclically equivalent
/// canonical braidings, the braiding preserves the closure, and the recorded
/// trace replays. Sweeps all words of length at most `max_len` on at most
/// `max_len + 1` strands.
fn braidings_converge(max_len: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let _ = limits;
    let mut buckets: BTreeMap<Name, Vec<ChordWord>> = BTreeMap::new();
    for m in 1..=(max_len as u32 + 1) {
        let gens = all_gens(m);
        for len in 0..=max_len {
            if len > 0 && gens.is_empty() {
                break;
            }
            for w in words_of_length(m, &gens, len) {
                buckets.entry(w.close()?.name().clone()).or_default().push(w);
            }
        }
    }
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for (name, words) in &buckets {
        let mut first: Option<ChordWord> = None;
        for w in words {
            cases += 1;
            let (up, trace) = braid_up(w);
            let collapsed_empty = up.is_empty() && up.strand_count() == 1;
            if !up.is_canonical_braiding() && !collapsed_empty {
                violations.push(format!("braid_up({w}) = {up} is not a canonical braiding"));
                continue;
            }
            if up.close()?.name() != name {
                violations.push(format!("braid_up({w}) changed the closure to {}", up.close()?));
                continue;
            }
            match trace.replay(w) {
                Ok(r) if r == up => {}
                _ => {
                    violations.push(format!("the move trace for braid_up({w}) does not replay"));
                    continue;
                }
            }
            match &first {
                None => first = Some(up),
                Some(f) => {
                    if !cyclically_equivalent(f, &up) {
                        violations.push(format!(
                            "braidings of {name} disagree: {f} vs {up} are not cyclically \
                             equivalent"
                        ));
                    }
                }
            }
        }
    }
    Ok((cases, violations))
}

/// The merge-strategy search agrees with the brute-force oracle, and the
/// literal strategy never beats it, on every diagram with at most `max_n`
/// chords.
fn strategies_agree(max_n: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let mut limits = limits.clone();
    if limits.oracle_max_chords < max_n {
        limits.oracle_max_chords = max_n;
    }
    if limits.enumerate_max_chords < max_n {
        limits.enumerate_max_chords = max_n;
    }
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 0..=max_n {
        for d in enumerate_diagrams(n, &limits)? {
            cases += 1;
            let merge = compute_braid_index(&d, Strategy::Merge, &limits)?.value;
            let oracle = compute_braid_index(&d, Strategy::Oracle, &limits)?.value;
            let literal = compute_braid_index(&d, Strategy::Literal, &limits)?.value;
            if merge != oracle {
                violations.push(format!("{d}: merge found {merge} but the oracle found {oracle}"));
            }
            if literal < merge {
                violations.push(format!("{d}: literal found {literal}, below merge {merge}"));
            }
        }
    }
    Ok((cases, violations))
}

/// Every braid-index-3 diagram with at most `max_n` chords has one or two
/// cyclic classes of 3-strand representatives, and two-class diagrams match
/// the flype exponent pattern.
fn uniqueness(max_n: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let mut limits = limits.clone();
    if limits.enumerate_max_chords < max_n {
        limits.enumerate_max_chords = max_n;
    }
    let violations = verify_three_braid_uniqueness(max_n, &limits)?;
    let mut cases = 0u64;
    for n in 1..=max_n {
        cases += enumerate_diagrams(n, &limits)?.len() as u64;
    }
    Ok((cases, violations))
}

/// Amalgamation round-trips (expanding the weighted diagram restores the
/// original) and preserves the braid index, for every diagram with at most
/// `max_n` chords.
fn amalgamation_preserves_index(max_n: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let mut limits = limits.clone();
    if limits.enumerate_max_chords < max_n {
        limits.enumerate_max_chords = max_n;
    }
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 1..=max_n {
        for d in enumerate_diagrams(n, &limits)? {
            cases += 1;
            let weighted = d.amalgamate()?;
            let back = weighted.expand()?;
            if back != d {
                violations.push(format!("{d}: expanding the amalgamation gave {back}"));
                continue;
            }
            let whole = compute_braid_index(&d, Strategy::Merge, &limits)?.value;
            let base = compute_braid_index(weighted.base(), Strategy::Merge, &limits)?.value;
            if whole != base {
                violations.push(format!(
                    "{d}: braid index {whole} but its amalgamation {} has {base}",
                    weighted.base()
                ));
            }
        }
    }
    Ok((cases, violations))
}

/// The parallel-set lower bound and the chord-count upper bound bracket the
/// computed braid index on every diagram with at most `max_n` chords.
fn bounds_bracket(max_n: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let mut limits = limits.clone();
    if limits.enumerate_max_chords < max_n {
        limits.enumerate_max_chords = max_n;
    }
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 0..=max_n {
        for d in enumerate_diagrams(n, &limits)? {
            cases += 1;
            let (lo, hi) = d.index_bounds();
            let b = compute_braid_index(&d, Strategy::Merge, &limits)?.value;
            if b < lo || b > hi {
                violations.push(format!("{d}: braid index {b} outside bounds {lo}..={hi}"));
            }
        }
    }
    Ok((cases, violations))
}

/// One-block form rewrites every 3-strand word of length at most `max_len`
/// into one-block words whose closures agree with the input's closure
/// modulo the four-term relations.
fn one_block_spans(max_len: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let gens = all_gens(3);
    let mut four_term: BTreeMap<usize, RelationSystem> = BTreeMap::new();
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for len in 0..=max_len {
        let system = four_term_relations(len, limits)?;
        four_term.insert(len, system);
        for w in words_of_length(3, &gens, len) {
            cases += 1;
            let combo = one_block_form(&w, limits)?;
            if let Some(bad) = combo.terms().keys().find(|t| !is_one_block(t)) {
                violations.push(format!("one_block_form({w}) contains non-one-block {bad}"));
                continue;
            }
            let mut row = DiagramCombo::zero();
            for (t, c) in combo.terms() {
                row.add(t.close()?.name().clone(), c.clone());
            }
            row.add(w.close()?.name().clone(), rat(-1));
            if !four_term[&len].contains(&row) {
                violations.push(format!(
                    "one_block_form({w}) shifts the closure by {row}, outside the four-term span"
                ));
            }
        }
    }
    Ok((cases, violations))
}

/// Diagrams with a special chord have braid index 3 exactly when an
/// associated permutation has a single descent, for at most `max_n` chords.
fn descent_characterizes(max_n: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let mut limits = limits.clone();
    if limits.enumerate_max_chords < max_n {
        limits.enumerate_max_chords = max_n;
    }
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for n in 1..=max_n {
        for d in enumerate_diagrams(n, &limits)? {
            if d.special_chords().is_empty() {
                continue;
            }
            cases += 1;
            let predicted = d.is_braid_index_three_special()?;
            let b = compute_braid_index(&d, Strategy::Merge, &limits)?.value;
            if predicted != (b == 3) {
                violations.push(format!(
                    "{d}: single-descent predicate says {predicted} but the braid index is {b}"
                ));
            }
        }
    }
    Ok((cases, violations))
}

/// Prefixing a top chord to a one-block word always produces a diagram with
/// a special chord. Sweeps all one-block words of length at most `max_len`
/// on 2 to 4 strands.
fn one_block_words_special(max_len: usize, limits: &Limits) -> Result<(u64, Vec<String>)> {
    let _ = limits;
    let mut cases = 0u64;
    let mut violations = Vec::new();
    for m in 2..=4u32 {
        let top: Vec<Generator> = (1..m)
            .map(|i| Generator::new(i, m).expect("valid indices"))
            .collect();
        for len in 0..=max_len {
            for w in words_of_length(m, &top, len) {
                cases += 1;
                if !special_chord_property(&w)? {
                    violations.push(format!("{w}: no special chord after prefixing a top chord"));
                }
            }
        }
    }
    Ok((cases, violations))
}
