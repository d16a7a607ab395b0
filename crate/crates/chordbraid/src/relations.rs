//! Linear relations among chord diagrams, with exact rational arithmetic.
//!
//! The span of the four-term rows inside the vector space freely generated
//! by the n-chord diagrams is the classical relation space; the same span
//! arises from commutator rows of words in the chord monoid, and
//! [`RelationSystem::span_eq`] checks that. Quotient dimensions, optional
//! one-term rows, and a braid-index filtration are layered on top, along
//! with the comb rewriting that brings words into one-block form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::braidindex::{compute_braid_index, Strategy};
use crate::braidword::{ChordWord, Generator};
use crate::diagram::{enumerate_diagrams, Name};
use crate::error::{Error, Result};
use crate::Limits;

/// The rational with value `i`, handy for building rows.
pub fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// A finite formal sum of keys with rational coefficients. Zero
/// coefficients are pruned as they appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCombo<K: Ord + Clone> {
    terms: BTreeMap<K, BigRational>,
}

/// A rational combination of diagram names.
pub type DiagramCombo = LinearCombo<Name>;

/// A rational combination of chord words.
pub type WordCombo = LinearCombo<ChordWord>;

impl<K: Ord + Clone> LinearCombo<K> {
    /// The zero combination.
    pub fn zero() -> LinearCombo<K> {
        LinearCombo { terms: BTreeMap::new() }
    }

    /// A single term.
    pub fn term(key: K, coefficient: BigRational) -> LinearCombo<K> {
        let mut combo = LinearCombo::zero();
        combo.add(key, coefficient);
        combo
    }

    /// Adds `coefficient * key`.
    pub fn add(&mut self, key: K, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coefficient;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `factor * other`.
    pub fn add_scaled(&mut self, other: &LinearCombo<K>, factor: &BigRational) {
        for (k, c) in &other.terms {
            self.add(k.clone(), c * factor);
        }
    }

    /// Multiplies every coefficient by `factor`.
    pub fn scale(&mut self, factor: &BigRational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    /// True when no terms remain.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when the combination has no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms, keyed in order.
    pub fn terms(&self) -> &BTreeMap<K, BigRational> {
        &self.terms
    }

    /// The least key and its coefficient.
    pub fn leading(&self) -> Option<(&K, &BigRational)> {
        self.terms.iter().next()
    }

    /// Removes and returns the least term.
    pub fn pop_leading(&mut self) -> Option<(K, BigRational)> {
        self.terms.pop_first()
    }

    /// The coefficient of `key`, zero when absent.
    pub fn coefficient(&self, key: &K) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinearCombo<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = BigRational::one();
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if magnitude != one {
                write!(f, "{magnitude} ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// A growing system of diagram relations held in echelon form.
///
/// Rows are reduced as they arrive; each surviving row is stored monic,
/// keyed by its least diagram. Exact rational arithmetic throughout.
#[derive(Debug, Clone, Default)]
pub struct RelationSystem {
    echelon: BTreeMap<Name, DiagramCombo>,
    rows_seen: u64,
}

impl RelationSystem {
    /// An empty system.
    pub fn new() -> RelationSystem {
        RelationSystem::default()
    }

    /// Rank of the span so far.
    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// How many rows have been fed in, including dependent and zero rows.
    pub fn rows_seen(&self) -> u64 {
        self.rows_seen
    }

    /// Reduces `row` against the system without changing it.
    pub fn reduce(&self, row: &DiagramCombo) -> DiagramCombo {
        let mut r = row.clone();
        loop {
            let hit = r
                .terms()
                .keys()
                .find(|k| self.echelon.contains_key(*k))
                .cloned();
            let Some(k) = hit else { break };
            let factor = -r.coefficient(&k);
            let pivot_row = self.echelon.get(&k).expect("key came from the echelon");
            r.add_scaled(pivot_row, &factor);
        }
        r
    }

    /// True when the row is already in the span.
    pub fn contains(&self, row: &DiagramCombo) -> bool {
        self.reduce(row).is_zero()
    }

    /// Feeds one row; returns whether the rank grew.
    pub fn add_row(&mut self, row: DiagramCombo) -> bool {
        self.rows_seen += 1;
        let mut r = self.reduce(&row);
        let Some((pivot, lead)) = r.leading().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        r.scale(&(BigRational::one() / lead));
        self.echelon.insert(pivot, r);
        true
    }

    /// The echelon rows, in pivot order.
    pub fn echelon_rows(&self) -> impl Iterator<Item = &DiagramCombo> {
        self.echelon.values()
    }

    /// The pivot diagrams, in order.
    pub fn pivots(&self) -> impl Iterator<Item = &Name> {
        self.echelon.keys()
    }

    /// A system spanning the union of both spans.
    pub fn merged(&self, other: &RelationSystem) -> RelationSystem {
        let mut out = self.clone();
        for row in other.echelon_rows() {
            out.add_row(row.clone());
        }
        out
    }

    /// True when the two systems span the same subspace.
    pub fn span_eq(&self, other: &RelationSystem) -> bool {
        self.rank() == other.rank() && self.merged(other).rank() == self.rank()
    }
}

/// All matchings of `points` linearly ordered points, each matching a list
/// of index pairs. Generated by pairing the least free point with every
/// later one.
fn matchings(points: usize) -> Vec<Vec<(usize, usize)>> {
    fn fill(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(acc.clone());
            return;
        }
        let a = free.remove(0);
        for idx in 0..free.len() {
            let b = free.remove(idx);
            acc.push((a, b));
            fill(free, acc, out);
            acc.pop();
            free.insert(idx, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    fill(&mut (0..points).collect(), &mut Vec::new(), &mut out);
    out
}

/// The four-term rows on `n` chords, as combinations of canonical names.
///
/// Every row comes from a template: one slider chord with an endpoint
/// pinned at the top of the circle, the other n-1 chords matched over the
/// remaining points. Sliding the free endpoint across both endpoints of a
/// pivot chord contributes (after - before) at each endpoint, and those
/// four insertions sum to zero in the relation space. Identically zero
/// rows are dropped.
pub fn four_term_rows(n: usize, limits: &Limits) -> Result<Vec<DiagramCombo>> {
    if n > limits.enumerate_max_chords {
        return Err(Error::CapExceeded(format!(
            "four-term rows on {n} chords exceed the cap of {}",
            limits.enumerate_max_chords
        )));
    }
    let mut rows = Vec::new();
    if n < 2 {
        return Ok(rows);
    }
    // Template positions: 0 is the slider's pinned endpoint, 1..2n-2 hold
    // the matched chords. Insertion slot s puts the free endpoint right
    // before template position s; slot 2n-1 appends it.
    let insert = |pairs: &[(usize, usize)], slot: usize| -> Name {
        let mut labels = vec![0u32; 2 * n];
        let mut chord_at = vec![0u32; 2 * n - 1];
        chord_at[0] = 1;
        for (c, &(p, q)) in pairs.iter().enumerate() {
            chord_at[p + 1] = c as u32 + 2;
            chord_at[q + 1] = c as u32 + 2;
        }
        let mut out = 0;
        for (pos, &chord) in chord_at.iter().enumerate() {
            if pos == slot {
                labels[out] = 1;
                out += 1;
            }
            labels[out] = chord;
            out += 1;
        }
        if slot == 2 * n - 1 {
            labels[out] = 1;
        }
        Name::from_labels(labels)
            .expect("template labels pair up")
            .canonical()
    };
    for pairs in matchings(2 * n - 2) {
        for &(p, q) in &pairs {
            let mut row = DiagramCombo::zero();
            for endpoint in [p + 1, q + 1] {
                row.add(insert(&pairs, endpoint + 1), rat(1));
                row.add(insert(&pairs, endpoint), rat(-1));
            }
            if !row.is_zero() {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// The four-term rows assembled into an echelon system.
pub fn four_term_relations(n: usize, limits: &Limits) -> Result<RelationSystem> {
    let mut system = RelationSystem::new();
    for row in four_term_rows(n, limits)? {
        system.add_row(row);
    }
    Ok(system)
}

/// One unit row per n-chord diagram containing a chord that crosses
/// nothing.
pub fn one_term_rows(n: usize, limits: &Limits) -> Result<Vec<DiagramCombo>> {
    let mut rows = Vec::new();
    for diagram in enumerate_diagrams(n, limits)? {
        let crossing = diagram.crossing_graph();
        let isolated = (1..=n as u32)
            .any(|c| !crossing.iter().any(|&(a, b)| a == c || b == c));
        if isolated && n > 0 {
            rows.push(DiagramCombo::term(diagram.name().clone(), rat(1)));
        }
    }
    Ok(rows)
}

/// Relation rows harvested from the chord monoid: for every word context
/// U, V and every generator triple P = A(i,j), Q = A(j,k), R = A(i,k), the
/// closures satisfy [UPQV] + [UPRV] = [UQPV] + [URPV]. Words run over all
/// strand counts from 3 to `m_max`; every row lands in the span of the
/// n-chord diagram space.
pub fn braid_context_relations(n: usize, m_max: u32, limits: &Limits) -> Result<RelationSystem> {
    let mut system = RelationSystem::new();
    if n < 2 || m_max < 3 {
        return Ok(system);
    }
    let mut budget: u64 = 0;
    for m in 3..=m_max {
        let g = u64::from(m) * u64::from(m - 1) / 2;
        let contexts: u64 = (0..=(n - 2) as u32)
            .map(|u| g.pow(u) * g.pow((n - 2) as u32 - u))
            .sum();
        budget = budget.saturating_add(contexts * g * u64::from(m - 2));
    }
    if budget > 5_000_000 {
        return Err(Error::CapExceeded(format!(
            "braid context sweep would enumerate {budget} rows"
        )));
    }
    let _ = limits;
    for m in 3..=m_max {
        let gens = crate::braidindex::monoid_generators(m);
        for u_len in 0..=(n - 2) {
            let v_len = n - 2 - u_len;
            for prefix in all_words(&gens, u_len) {
                for suffix in all_words(&gens, v_len) {
                    for &p in &gens {
                        for k in 1..=m {
                            if p.touches(k) {
                                continue;
                            }
                            let q = ordered(p.upper(), k);
                            let r = ordered(p.lower(), k);
                            let mut row = DiagramCombo::zero();
                            for (first, second, sign) in
                                [(p, q, 1), (p, r, 1), (q, p, -1), (r, p, -1)]
                            {
                                let mut gens_word =
                                    Vec::with_capacity(prefix.len() + suffix.len() + 2);
                                gens_word.extend_from_slice(&prefix);
                                gens_word.push(first);
                                gens_word.push(second);
                                gens_word.extend_from_slice(&suffix);
                                let word = ChordWord::new(m, gens_word)
                                    .expect("generators fit on m strands");
                                row.add(word.close()?.name().clone(), rat(sign));
                            }
                            if !row.is_zero() {
                                system.add_row(row);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(system)
}

fn ordered(a: u32, b: u32) -> Generator {
    Generator::new(a.min(b), a.max(b)).expect("distinct strands")
}

fn all_words(gens: &[Generator], len: usize) -> Vec<Vec<Generator>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * gens.len());
        for w in &out {
            for &g in gens {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Dimensions of the n-chord diagram space modulo the relation span, with
/// an optional braid-index filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    /// Chord count n.
    pub chords: usize,
    /// Number of n-chord diagrams.
    pub diagram_count: usize,
    /// Rank of the relation span (four-term, plus one-term if requested).
    pub relation_rank: usize,
    /// Dimension of the quotient.
    pub dimension: usize,
    /// Whether one-term rows were included.
    pub with_one_term: bool,
    /// The braid-index cap, if one was applied.
    pub braid_cap: Option<u32>,
    /// Diagrams with braid index at most the cap (all diagrams without one).
    pub low_count: usize,
    /// Dimension of the image of the low-diagram span in the quotient.
    pub low_image_dimension: usize,
    /// Rank of the relations induced among the low diagrams.
    pub induced_relations: usize,
    /// Induced relations beyond those spanned by rows supported entirely
    /// on low diagrams.
    pub not_directly_generated: usize,
}

/// Computes the quotient dimensions at `n` chords; see [`QuotientReport`].
pub fn quotient_report(
    n: usize,
    braid_cap: Option<u32>,
    with_one_term: bool,
    limits: &Limits,
) -> Result<QuotientReport> {
    let diagrams = enumerate_diagrams(n, limits)?;
    let mut rows = four_term_rows(n, limits)?;
    if with_one_term {
        rows.extend(one_term_rows(n, limits)?);
    }
    let mut system = RelationSystem::new();
    for row in &rows {
        system.add_row(row.clone());
    }
    let relation_rank = system.rank();
    let dimension = diagrams.len() - relation_rank;
    let low: Vec<Name> = match braid_cap {
        None => diagrams.iter().map(|d| d.name().clone()).collect(),
        Some(cap) => {
            let mut low = Vec::new();
            for d in &diagrams {
                if compute_braid_index(d, Strategy::Merge, limits)?.value <= cap {
                    low.push(d.name().clone());
                }
            }
            low
        }
    };
    let mut with_units = system.clone();
    let mut low_image_dimension = 0;
    for name in &low {
        if with_units.add_row(DiagramCombo::term(name.clone(), rat(1))) {
            low_image_dimension += 1;
        }
    }
    let induced_relations = low.len() - low_image_dimension;
    let low_set: BTreeSet<&Name> = low.iter().collect();
    let mut direct = RelationSystem::new();
    for row in &rows {
        if row.terms().keys().all(|k| low_set.contains(k)) {
            direct.add_row(row.clone());
        }
    }
    Ok(QuotientReport {
        chords: n,
        diagram_count: diagrams.len(),
        relation_rank,
        dimension,
        with_one_term,
        braid_cap,
        low_count: low.len(),
        low_image_dimension,
        induced_relations,
        not_directly_generated: induced_relations - direct.rank(),
    })
}

/// The quotient dimension at `n` chords.
pub fn quotient_dimension(n: usize, with_one_term: bool, limits: &Limits) -> Result<usize> {
    Ok(quotient_report(n, None, with_one_term, limits)?.dimension)
}

/// The position of the leftmost adjacent pair whose upper strands strictly
/// ascend, if any.
fn first_ascending(word: &ChordWord) -> Option<usize> {
    let gens = word.generators();
    (0..gens.len().saturating_sub(1)).find(|&p| gens[p].upper() < gens[p + 1].upper())
}

/// Rewrites the ascending pair at `p`, returning replacement words with
/// coefficients. The pair either commutes, shares its middle strand, or
/// shares its bottom strand; those are the only cases, since the upper
/// strands differ and the lower strand of the first sits below both.
fn rewrite_pair(word: &ChordWord, p: usize) -> Vec<(ChordWord, BigRational)> {
    let gens = word.generators();
    let g1 = gens[p];
    let g2 = gens[p + 1];
    let with_pair = |a: Generator, b: Generator| -> ChordWord {
        let mut v = gens.to_vec();
        v[p] = a;
        v[p + 1] = b;
        ChordWord::new(word.strand_count(), v).expect("rewrites stay on the same strands")
    };
    if g1.disjoint(&g2) {
        return vec![(with_pair(g2, g1), rat(1))];
    }
    let (i, j, l) = (g1.lower(), g1.upper(), g2.upper());
    let gen = |a, b| Generator::new(a, b).expect("strands are ordered");
    if g2.lower() == j {
        // A(i,j) A(j,l)
        vec![
            (with_pair(gen(j, l), gen(i, j)), rat(1)),
            (with_pair(gen(i, l), gen(i, j)), rat(1)),
            (with_pair(gen(i, j), gen(i, l)), rat(-1)),
        ]
    } else {
        // A(i,j) A(i,l): the strands share the bottom.
        vec![
            (with_pair(gen(i, l), gen(i, j)), rat(1)),
            (with_pair(gen(i, l), gen(j, l)), rat(1)),
            (with_pair(gen(j, l), gen(i, l)), rat(-1)),
        ]
    }
}

/// Combs a word into a combination of words whose upper strands never
/// ascend, by repeatedly rewriting the leftmost ascending pair.
///
/// Each rewrite lexicographically raises the sequence of upper strands
/// except for the lone stalling term of the middle-strand rule, whose next
/// rewrite at the same position strictly raises it, so the process stops.
pub fn comb(word: &ChordWord) -> WordCombo {
    let mut pending = vec![(word.clone(), BigRational::one())];
    let mut done = WordCombo::zero();
    while let Some((w, c)) = pending.pop() {
        match first_ascending(&w) {
            None => done.add(w, c),
            Some(p) => {
                for (next, k) in rewrite_pair(&w, p) {
                    pending.push((next, &c * k));
                }
            }
        }
    }
    done
}

/// True when every generator reaches the top strand.
pub fn is_one_block(word: &ChordWord) -> bool {
    word.generators()
        .iter()
        .all(|g| g.upper() == word.strand_count())
}

/// Rewrites a word into a combination of one-block words: comb, then push
/// any combed term still below the top strand once around the closure and
/// comb again. A combed word's last generator sits lowest, so the push
/// raises it without wrapping, and the total distance to the top strictly
/// falls; the iteration cap is a safety net.
pub fn one_block_form(word: &ChordWord, limits: &Limits) -> Result<WordCombo> {
    let mut pending = comb(word);
    let mut done = WordCombo::zero();
    let mut steps = 0usize;
    while let Some((w, c)) = pending.pop_leading() {
        steps += 1;
        if steps > limits.one_block_iteration_cap {
            return Err(Error::IterationCap { cap: limits.one_block_iteration_cap });
        }
        if is_one_block(&w) {
            done.add(w, c);
            continue;
        }
        let pushed = w.cyclic_permute().expect("a non-one-block word is nonempty");
        pending.add_scaled(&comb(&pushed), &c);
    }
    Ok(done)
}

/// For a one-block word w, whether the closure of A(1,m) w has a chord
/// crossing every other chord.
pub fn special_chord_property(word: &ChordWord) -> Result<bool> {
    let m = word.strand_count();
    if m < 2 {
        return Err(Error::NotApplicable(String::from(
            "needs at least two strands",
        )));
    }
    if !is_one_block(word) {
        return Err(Error::NotOneBlock);
    }
    let mut gens = vec![Generator::new(1, m)?];
    gens.extend_from_slice(word.generators());
    let closed = ChordWord::new(m, gens)?.close()?;
    Ok(!closed.special_chords().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> ChordWord {
        ChordWord::parse(text).unwrap()
    }

    fn combo(pairs: &[(&str, i64)]) -> WordCombo {
        let mut c = WordCombo::zero();
        for &(text, k) in pairs {
            c.add(w(text), rat(k));
        }
        c
    }

    #[test]
    fn combos_prune_zeros() {
        let mut c = DiagramCombo::term(Name::parse("1122").unwrap(), rat(2));
        c.add(Name::parse("1122").unwrap(), rat(-2));
        assert!(c.is_zero());
        assert_eq!(c.to_string(), "0");
        c.add(Name::parse("1212").unwrap(), rat(1));
        c.add(Name::parse("1122").unwrap(), rat(-3));
        assert_eq!(c.to_string(), "-3 1122 + 1212");
    }

    #[test]
    fn four_term_ranks() {
        let limits = Limits::default();
        assert_eq!(four_term_relations(2, &limits).unwrap().rank(), 0);
        assert_eq!(four_term_relations(3, &limits).unwrap().rank(), 2);
        assert_eq!(four_term_relations(4, &limits).unwrap().rank(), 12);
    }

    #[test]
    fn quotient_dimensions() {
        let limits = Limits::default();
        for (n, dim) in [(1, 1), (2, 2), (3, 3), (4, 6)] {
            assert_eq!(quotient_dimension(n, false, &limits).unwrap(), dim, "n={n}");
        }
        for (n, dim) in [(1, 0), (2, 1), (3, 1), (4, 3)] {
            assert_eq!(quotient_dimension(n, true, &limits).unwrap(), dim, "n={n}");
        }
    }

    #[test]
    fn one_term_rows_pick_isolated_chords() {
        let limits = Limits::default();
        let rows = one_term_rows(3, &limits).unwrap();
        let names: Vec<String> = rows
            .iter()
            .map(|r| r.leading().unwrap().0.to_string())
            .collect();
        assert_eq!(names, ["112233", "112323", "112332"]);
    }

    #[test]
    fn braid_rows_span_the_four_term_space() {
        let limits = Limits::default();
        assert_eq!(braid_context_relations(2, 4, &limits).unwrap().rank(), 0);
        let four = four_term_relations(3, &limits).unwrap();
        let braid = braid_context_relations(3, 6, &limits).unwrap();
        assert!(four.span_eq(&braid));
        assert!(!four.span_eq(&RelationSystem::new()));
    }

    #[test]
    fn filtration_report() {
        let limits = Limits::default();
        let report = quotient_report(3, Some(3), false, &limits).unwrap();
        assert_eq!(report.diagram_count, 5);
        assert_eq!(report.dimension, 3);
        // Of the five 3-chord diagrams, only 112233 and 112332 need four
        // strands.
        assert_eq!(report.low_count, 3);
        assert_eq!(
            report.low_image_dimension + report.induced_relations,
            report.low_count
        );
    }

    #[test]
    fn comb_frozen_values() {
        assert_eq!(comb(&w("ab")), combo(&[("ba", 1), ("bc", 1), ("cb", -1)]));
        assert_eq!(comb(&w("ac")), combo(&[("ca", 1), ("cb", 1), ("bc", -1)]));
        assert_eq!(comb(&w("ba")), combo(&[("ba", 1)]));
        assert_eq!(comb(&w("@3")), combo(&[("@3", 1)]));
    }

    #[test]
    fn one_block_frozen_values() {
        let limits = Limits::default();
        assert_eq!(
            one_block_form(&w("ba"), &limits).unwrap(),
            combo(&[("bb", 1)])
        );
        assert_eq!(
            one_block_form(&w("aba"), &limits).unwrap(),
            combo(&[("bbb", 1), ("bbc", 1), ("bcb", -1)])
        );
        let tight = Limits { one_block_iteration_cap: 1, ..Limits::default() };
        assert!(matches!(
            one_block_form(&w("aba"), &tight),
            Err(Error::IterationCap { cap: 1 })
        ));
    }

    #[test]
    fn special_chord_checks() {
        assert!(special_chord_property(&w("c")).unwrap());
        assert!(special_chord_property(&w("bc")).unwrap());
        assert!(special_chord_property(&w("A(2,4)A(3,4)@4")).unwrap());
        assert!(matches!(
            special_chord_property(&w("ab")),
            Err(Error::NotOneBlock)
        ));
    }
}
