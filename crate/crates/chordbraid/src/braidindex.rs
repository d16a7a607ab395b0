//! Braid index of a chord diagram: the fewest strands any word closing to
//! the diagram can live on.
//!
//! Two search strategies are provided, plus a brute-force oracle. The
//! literal strategy only unwinds canonical braidings by decreasing
//! stabilizations, which can get stuck above the true index; the merge
//! strategy amalgamates parallel chords first and then searches rotations
//! and strand merges, which reaches it.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braidword::{canonical_braiding, ChordWord, Generator};
use crate::diagram::{canonical_rotations, ChordDiagram, Name, WeightedDiagram};
use crate::error::{Error, Result};
use crate::Limits;

/// How to compute a braid index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Decreasing stabilizations from canonical braidings, no amalgamation.
    Literal,
    /// Amalgamate, then search rotations and strand merges.
    Merge,
    /// Exhaust all words of matching length, strand count ascending.
    Oracle,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Literal => "literal",
            Strategy::Merge => "merge",
            Strategy::Oracle => "oracle",
        })
    }
}

/// Outcome of a braid index computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidIndexResult {
    /// The strand count reached.
    pub value: u32,
    /// A word on that many strands closing to the diagram.
    pub witness: ChordWord,
    /// The strategy that produced it.
    pub strategy: Strategy,
    /// Chord labelings seeded (searches) or candidate words checked (oracle).
    pub labelings_examined: u64,
}

/// Computes the braid index of `diagram` with the chosen strategy.
///
/// The literal and merge values can differ: the literal search is allowed
/// to get stuck, and its result is an upper bound for the merge result.
pub fn compute_braid_index(
    diagram: &ChordDiagram,
    strategy: Strategy,
    limits: &Limits,
) -> Result<BraidIndexResult> {
    if diagram.chord_count() == 0 {
        // The empty diagram is the closure of the empty word on one strand.
        return Ok(BraidIndexResult {
            value: 1,
            witness: ChordWord::new(1, Vec::new())?,
            strategy,
            labelings_examined: 0,
        });
    }
    match strategy {
        Strategy::Literal => literal_search(diagram, limits),
        Strategy::Merge => merge_search(diagram, limits),
        Strategy::Oracle => oracle_braid_index(diagram, limits),
    }
}

/// All bijections old label -> new label fixing label 1, in lex order of
/// the image sequence.
fn labelings_fixing_first(n: usize) -> Vec<Vec<u32>> {
    fn fill(prefix: &mut Vec<u32>, left: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for idx in 0..left.len() {
            let v = left.remove(idx);
            prefix.push(v);
            fill(prefix, left, out);
            prefix.pop();
            left.insert(idx, v);
        }
    }
    let mut out = Vec::new();
    let mut left: Vec<u32> = (2..=n as u32).collect();
    fill(&mut vec![1], &mut left, &mut out);
    out
}

fn relabel(name: &Name, sigma: &[u32]) -> Name {
    let labels = name
        .labels()
        .iter()
        .map(|&l| sigma[(l - 1) as usize])
        .collect();
    Name::from_labels(labels).expect("relabeling keeps every label paired")
}

/// Records `word` as encountered; keeps the least `(strands, word)` seen and
/// reports whether the floor was hit.
fn note(
    visited: &mut BTreeSet<ChordWord>,
    best: &mut Option<ChordWord>,
    word: ChordWord,
    floor: u32,
) -> bool {
    if !visited.insert(word.clone()) {
        return false;
    }
    let hit = word.strand_count() == floor;
    if best.as_ref().map_or(true, |b| word < *b) {
        *best = Some(word);
    }
    hit
}

fn literal_search(diagram: &ChordDiagram, limits: &Limits) -> Result<BraidIndexResult> {
    let n = diagram.chord_count();
    if n > limits.braid_index_max_chords {
        return Err(Error::CapExceeded(format!(
            "literal search on {n} chords exceeds the cap of {}",
            limits.braid_index_max_chords
        )));
    }
    let floor = diagram.index_bounds().0;
    let mut visited = BTreeSet::new();
    let mut best: Option<ChordWord> = None;
    let mut queue = VecDeque::new();
    let mut labelings = 0u64;
    let mut done = false;
    for sigma in labelings_fixing_first(n) {
        labelings += 1;
        let start = canonical_braiding(&relabel(diagram.name(), &sigma));
        if note(&mut visited, &mut best, start.clone(), floor) {
            done = true;
            break;
        }
        queue.push_back(start);
    }
    while !done {
        let Some(word) = queue.pop_front() else { break };
        for p in 0..word.len() {
            let Ok(next) = word.decrease_stabilize(p) else { continue };
            if visited.contains(&next) {
                continue;
            }
            if note(&mut visited, &mut best, next.clone(), floor) {
                done = true;
                break;
            }
            queue.push_back(next);
        }
    }
    let witness = best.expect("at least one labeling was seeded");
    Ok(BraidIndexResult {
        value: witness.strand_count(),
        witness,
        strategy: Strategy::Literal,
        labelings_examined: labelings,
    })
}

/// Rotation neighbors in normal form: every generator movable to the end,
/// moved there, cyclically permuted and renormalized.
fn rotation_neighbors(word: &ChordWord) -> Vec<ChordWord> {
    let mut out = Vec::new();
    for p in 0..word.len() {
        if word.generators()[p + 1..]
            .iter()
            .any(|h| !h.disjoint(&word.generators()[p]))
        {
            continue;
        }
        let mut gens = word.generators().to_vec();
        let g = gens.remove(p);
        gens.push(g);
        let moved = ChordWord::new(word.strand_count(), gens)
            .expect("reordering keeps strands valid");
        out.push(
            moved
                .cyclic_permute()
                .expect("nonempty word")
                .trace_normal_form(),
        );
    }
    out
}

fn merge_search(diagram: &ChordDiagram, limits: &Limits) -> Result<BraidIndexResult> {
    let weighted = diagram.amalgamate()?;
    let k = weighted.base().chord_count();
    if k > limits.braid_index_max_chords {
        return Err(Error::CapExceeded(format!(
            "merge search on {k} amalgamated chords exceeds the cap of {}",
            limits.braid_index_max_chords
        )));
    }
    let floor = diagram.index_bounds().0;
    let mut visited = BTreeSet::new();
    let mut best: Option<ChordWord> = None;
    let mut queue = VecDeque::new();
    let mut labelings = 0u64;
    for sigma in labelings_fixing_first(k) {
        labelings += 1;
        let start =
            canonical_braiding(&relabel(weighted.base().name(), &sigma)).trace_normal_form();
        if note(&mut visited, &mut best, start.clone(), floor) {
            queue.clear();
            break;
        }
        queue.push_back(start);
    }
    'search: while let Some(word) = queue.pop_front() {
        let mut neighbors = rotation_neighbors(&word);
        for j in 2..=word.strand_count() {
            if let Ok(merged) = word.strand_merge(j) {
                neighbors.push(merged.trace_normal_form());
            }
        }
        for next in neighbors {
            if visited.contains(&next) {
                continue;
            }
            if note(&mut visited, &mut best, next.clone(), floor) {
                break 'search;
            }
            queue.push_back(next);
        }
        assert!(
            visited.len() <= 2_000_000,
            "merge search blew past its state budget"
        );
    }
    let base_witness = best.expect("at least one labeling was seeded");
    let value = base_witness.strand_count();
    let witness = power_witness(&base_witness, &weighted, diagram);
    Ok(BraidIndexResult {
        value,
        witness,
        strategy: Strategy::Merge,
        labelings_examined: labelings,
    })
}

/// Expands a witness on the amalgamated diagram back to one on the original
/// by repeating each generator as many times as its chord's weight.
fn power_witness(
    base_witness: &ChordWord,
    weighted: &WeightedDiagram,
    diagram: &ChordDiagram,
) -> ChordWord {
    let read = base_witness.read_name();
    let (canon, rotations) = canonical_rotations(read.labels());
    assert_eq!(
        canon,
        weighted.base().name().labels(),
        "witness must close to the amalgamated diagram"
    );
    // Any rotation map identifies witness chords with base chords; the maps
    // differ by symmetries of the base, and weight transport along a
    // symmetry expands to the same diagram.
    let map = &rotations[0].1;
    let mut gens = Vec::new();
    for (idx, g) in base_witness.generators().iter().enumerate() {
        let weight = weighted.weights()[(map[idx] - 1) as usize];
        for _ in 0..weight {
            gens.push(*g);
        }
    }
    let powered = ChordWord::new(base_witness.strand_count(), gens)
        .expect("powering keeps strands valid");
    assert_eq!(
        powered.close().expect("witness closes"),
        *diagram,
        "powered witness must close to the original diagram"
    );
    powered
}

/// The generators of the chord monoid on `m` strands, in lex order.
pub(crate) fn monoid_generators(m: u32) -> Vec<Generator> {
    let mut gens = Vec::new();
    for i in 1..m {
        for j in i + 1..=m {
            gens.push(Generator::new(i, j).expect("i < j"));
        }
    }
    gens
}

/// Finds the braid index by exhausting, for each strand count in turn,
/// every word of exactly `n` generators and testing its closure. Slow but
/// assumption-free; capped by `limits.oracle_max_chords`.
pub fn oracle_braid_index(diagram: &ChordDiagram, limits: &Limits) -> Result<BraidIndexResult> {
    let n = diagram.chord_count();
    if n == 0 {
        return Ok(BraidIndexResult {
            value: 1,
            witness: ChordWord::new(1, Vec::new())?,
            strategy: Strategy::Oracle,
            labelings_examined: 0,
        });
    }
    if n > limits.oracle_max_chords {
        return Err(Error::BudgetExceeded(format!(
            "oracle on {n} chords exceeds the budget of {}",
            limits.oracle_max_chords
        )));
    }
    let mut checked = 0u64;
    for m in 1..=(n as u32 + 1) {
        let gens = monoid_generators(m);
        if gens.is_empty() {
            continue;
        }
        // Odometer over generator indices, least significant position last.
        let mut digits = vec![0usize; n];
        loop {
            let word = ChordWord::new(m, digits.iter().map(|&d| gens[d]).collect())
                .expect("generators fit on m strands");
            checked += 1;
            if word.close()? == *diagram {
                return Ok(BraidIndexResult {
                    value: m,
                    witness: word,
                    strategy: Strategy::Oracle,
                    labelings_examined: checked,
                });
            }
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < gens.len() {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    unreachable!("every diagram on n chords closes from some word on n + 1 strands")
}

/// The three-strand words closing to `diagram`, grouped into classes under
/// commutation and cyclic permutation. No two generators on three strands
/// commute, so each class is a single cyclic-permutation orbit.
///
/// Defined only for diagrams of braid index exactly three.
pub fn three_braid_representatives(
    diagram: &ChordDiagram,
    limits: &Limits,
) -> Result<Vec<Vec<ChordWord>>> {
    let n = diagram.chord_count();
    if n == 0 {
        return Err(Error::NotThreeBraid(String::from(
            "the empty diagram has braid index one",
        )));
    }
    if n > limits.braid_index_max_chords {
        return Err(Error::CapExceeded(format!(
            "three-strand enumeration on {n} chords exceeds the cap of {}",
            limits.braid_index_max_chords
        )));
    }
    let bucket = three_strand_words(n)
        .filter(|w| w.close().is_ok_and(|d| d == *diagram))
        .collect::<BTreeSet<_>>();
    if bucket.is_empty() {
        return Err(Error::NotThreeBraid(String::from(
            "no three-strand word closes to the diagram",
        )));
    }
    if diagram.amalgamate()?.base().chord_count() == 1 {
        return Err(Error::NotThreeBraid(String::from(
            "the diagram is a two-strand closure",
        )));
    }
    Ok(orbit_partition(bucket))
}

/// All words of exactly `n` generators on three strands, in lex order.
fn three_strand_words(n: usize) -> impl Iterator<Item = ChordWord> {
    let gens = monoid_generators(3);
    let count = 3usize.pow(n as u32);
    (0..count).map(move |code| {
        let mut digits = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            digits.push(c % 3);
            c /= 3;
        }
        digits.reverse();
        ChordWord::new(3, digits.iter().map(|&d| gens[d]).collect())
            .expect("three-strand generators fit")
    })
}

/// Partitions words into cyclic-permutation orbits, each orbit sorted, the
/// orbits ordered by their least element.
fn orbit_partition(mut remaining: BTreeSet<ChordWord>) -> Vec<Vec<ChordWord>> {
    let mut classes = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let mut orbit = BTreeSet::new();
        let mut cur = first.clone();
        loop {
            orbit.insert(cur.clone());
            cur = cur.cyclic_permute().expect("orbit words are nonempty");
            if cur == first {
                break;
            }
        }
        for w in &orbit {
            remaining.remove(w);
        }
        classes.push(orbit.into_iter().collect());
    }
    classes
}

/// Checks, over all diagrams arising as closures of three-strand words of
/// up to `n_max` generators, that a braid-index-three diagram has at most
/// two word classes, and that two classes only occur in the flype pattern
/// x^l y^m x^n versus x^l y^n x^m with m != n. Returns the violations.
pub fn verify_three_braid_uniqueness(n_max: usize, limits: &Limits) -> Result<Vec<String>> {
    if n_max > limits.braid_index_max_chords {
        return Err(Error::CapExceeded(format!(
            "uniqueness sweep to {n_max} chords exceeds the cap of {}",
            limits.braid_index_max_chords
        )));
    }
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let mut buckets: BTreeMap<Name, BTreeSet<ChordWord>> = BTreeMap::new();
        for word in three_strand_words(n) {
            let d = word.close()?;
            buckets.entry(d.name().clone()).or_default().insert(word);
        }
        for (name, words) in buckets {
            let d = ChordDiagram::new(name.clone())?;
            if d.amalgamate()?.base().chord_count() == 1 {
                continue;
            }
            let classes = orbit_partition(words);
            match classes.len() {
                1 => {}
                2 => {
                    if !flype_pair(&classes, n) {
                        violations.push(format!(
                            "{name}: two classes that are not a flype pair"
                        ));
                    }
                }
                k => violations.push(format!("{name}: {k} classes")),
            }
        }
    }
    Ok(violations)
}

/// True when the two classes are the orbits of x^l y^m x^n and x^l y^n x^m
/// for some generators x, y sharing a strand and some l, m, n >= 1, m != n.
fn flype_pair(classes: &[Vec<ChordWord>], n: usize) -> bool {
    let a = Generator::new(1, 2).expect("i < j");
    let b = Generator::new(2, 3).expect("i < j");
    let c = Generator::new(1, 3).expect("i < j");
    let build = |x: Generator, y: Generator, l: usize, mid: usize, r: usize| {
        let mut gens = Vec::with_capacity(n);
        gens.extend(core::iter::repeat(x).take(l));
        gens.extend(core::iter::repeat(y).take(mid));
        gens.extend(core::iter::repeat(x).take(r));
        ChordWord::new(3, gens).expect("three-strand generators fit")
    };
    for (x, y) in [(a, c), (b, a), (c, b)] {
        for l in 1..n {
            for mid in 1..n - l {
                let r = n - l - mid;
                if r == 0 || mid == r {
                    continue;
                }
                let w1 = build(x, y, l, mid, r);
                let w2 = build(x, y, l, r, mid);
                if (classes[0].contains(&w1) && classes[1].contains(&w2))
                    || (classes[0].contains(&w2) && classes[1].contains(&w1))
                {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> ChordDiagram {
        ChordDiagram::parse(text).unwrap()
    }

    fn w(text: &str) -> ChordWord {
        ChordWord::parse(text).unwrap()
    }

    fn index(text: &str, strategy: Strategy) -> BraidIndexResult {
        compute_braid_index(&d(text), strategy, &Limits::default()).unwrap()
    }

    #[test]
    fn empty_diagram_closes_from_one_strand() {
        for strategy in [Strategy::Literal, Strategy::Merge, Strategy::Oracle] {
            let r = compute_braid_index(&ChordDiagram::empty(), strategy, &Limits::default())
                .unwrap();
            assert_eq!(r.value, 1);
            assert_eq!(r.witness, w("@1"));
        }
    }

    #[test]
    fn literal_gets_stuck_above_the_index() {
        let r = index("1212", Strategy::Literal);
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, w("A(1,3)A(2,3)@3"));
        assert_eq!(r.labelings_examined, 1);
        let r = index("1212", Strategy::Merge);
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, w("A(1,2)A(1,2)@2"));
    }

    #[test]
    fn merge_witnesses() {
        let r = index("1122", Strategy::Merge);
        assert_eq!(r.value, 3);
        assert_eq!(r.witness, w("A(1,2)A(2,3)@3"));
        let r = index("11", Strategy::Merge);
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, w("A(1,2)@2"));
    }

    #[test]
    fn pinned_indices() {
        for (name, value) in [
            ("11", 2),
            ("1122", 3),
            ("1212", 2),
            ("112233", 4),
            ("112323", 3),
            ("112332", 4),
            ("121323", 3),
            ("123123", 2),
            ("123321", 4),
            ("12341342", 3),
        ] {
            assert_eq!(index(name, Strategy::Merge).value, value, "{name}");
        }
    }

    #[test]
    fn witnesses_close_to_their_diagram() {
        for name in ["1122", "1212", "112323", "121323", "12341342"] {
            for strategy in [Strategy::Literal, Strategy::Merge] {
                let r = index(name, strategy);
                assert_eq!(r.witness.close().unwrap(), d(name), "{name} {strategy}");
                assert_eq!(r.witness.strand_count(), r.value, "{name} {strategy}");
            }
        }
    }

    #[test]
    fn oracle_agrees_with_merge_on_small_diagrams() {
        let limits = Limits::default();
        for n in 0..=3 {
            for diagram in crate::diagram::enumerate_diagrams(n, &limits).unwrap() {
                let merge = compute_braid_index(&diagram, Strategy::Merge, &limits).unwrap();
                let oracle = oracle_braid_index(&diagram, &limits).unwrap();
                assert_eq!(merge.value, oracle.value, "{}", diagram.name());
                let literal = compute_braid_index(&diagram, Strategy::Literal, &limits).unwrap();
                assert!(literal.value >= merge.value, "{}", diagram.name());
            }
        }
    }

    #[test]
    fn oracle_respects_its_budget() {
        let err = oracle_braid_index(&d("1234512345"), &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }

    #[test]
    fn bounds_bracket_the_index() {
        let limits = Limits::default();
        for n in 1..=4 {
            for diagram in crate::diagram::enumerate_diagrams(n, &limits).unwrap() {
                let (lo, hi) = diagram.index_bounds();
                let b = compute_braid_index(&diagram, Strategy::Merge, &limits)
                    .unwrap()
                    .value;
                assert!(lo <= b && b <= hi, "{}: {lo} <= {b} <= {hi}", diagram.name());
            }
        }
    }

    #[test]
    fn three_braid_classes() {
        let limits = Limits::default();
        let classes = three_braid_representatives(&d("1221"), &limits).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0], vec![w("ab"), w("ca"), w("bc")]);

        let classes = three_braid_representatives(&d("121323"), &limits).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(classes[0].contains(&w("aba")));
        assert!(classes[0].contains(&w("acb")));

        let flype = w("acaa").close().unwrap();
        let classes = three_braid_representatives(&flype, &limits).unwrap();
        assert_eq!(classes.len(), 2);
        let holds_acaa = classes.iter().position(|c| c.contains(&w("acaa"))).unwrap();
        let holds_acca = classes.iter().position(|c| c.contains(&w("acca"))).unwrap();
        assert_ne!(holds_acaa, holds_acca);

        assert!(matches!(
            three_braid_representatives(&d("1212"), &limits),
            Err(Error::NotThreeBraid(_))
        ));
        assert!(matches!(
            three_braid_representatives(&d("112233"), &limits),
            Err(Error::NotThreeBraid(_))
        ));
        assert!(matches!(
            three_braid_representatives(&ChordDiagram::empty(), &limits),
            Err(Error::NotThreeBraid(_))
        ));
    }

    #[test]
    fn uniqueness_sweep_is_clean() {
        let violations = verify_three_braid_uniqueness(4, &Limits::default()).unwrap();
        assert!(violations.is_empty(), "{violations:?}");
    }
}
