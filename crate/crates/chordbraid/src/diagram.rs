//! Chord diagrams on an oriented circle.
//!
//! A diagram with n chords is a pairing of 2n points on an oriented circle.
//! It is written as a name: the sequence of chord labels met while walking
//! the circle once, so every label in 1..=n appears exactly twice. Two names
//! denote the same diagram when some rotation of one, relabeled in order of
//! first occurrence, equals the other. The canonical name is the
//! lexicographically least such rotation; reflections are never identified.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::Limits;

/// A raw diagram name: each label in 1..=n occurs exactly twice.
///
/// A `Name` is any valid spelling, canonical or not. [`ChordDiagram`] stores
/// the canonical one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(Vec<u32>);

impl Name {
    /// Validates a label sequence: every label in 1..=n exactly twice, no
    /// gaps. The empty sequence is the name of the empty diagram.
    pub fn from_labels(labels: Vec<u32>) -> Result<Name> {
        let n = labels.len() / 2;
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &l in &labels {
            *counts.entry(l).or_insert(0) += 1;
        }
        for (&l, &c) in &counts {
            if c != 2 {
                return Err(Error::LabelCount { label: l, count: c });
            }
        }
        // Every label occurs twice, so there are exactly n distinct values;
        // they fill 1..=n exactly when none falls outside that range.
        for &l in counts.keys() {
            if l == 0 || l as usize > n {
                return Err(Error::LabelGap { label: l, max: n as u32 });
            }
        }
        Ok(Name(labels))
    }

    /// Parses either the compact digit form (`"1212"`, labels at most 9) or
    /// the comma form (`"1,2,1,2"`, mandatory once labels pass 9). A blank
    /// string is the empty diagram.
    pub fn parse(text: &str) -> Result<Name> {
        let t = text.trim();
        if t.is_empty() {
            return Name::from_labels(Vec::new());
        }
        let labels = if t.contains(',') {
            t.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>()
                        .map_err(|_| Error::Syntax(format!("bad label '{tok}'")))
                })
                .collect::<Result<Vec<u32>>>()?
        } else {
            t.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d),
                    _ => Err(Error::Syntax(format!("unexpected character '{c}'"))),
                })
                .collect::<Result<Vec<u32>>>()?
        };
        Name::from_labels(labels)
    }

    /// The label sequence.
    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    /// Number of chords.
    pub fn chord_count(&self) -> usize {
        self.0.len() / 2
    }

    /// Lexicographically least rotation, relabeled by first occurrence.
    pub fn canonical(&self) -> Name {
        Name(canonical_rotations(&self.0).0)
    }

    /// True when the name already is its own canonical form.
    pub fn is_canonical(&self) -> bool {
        canonical_rotations(&self.0).0 == self.0
    }

    /// Comma-separated spelling, valid for any label size.
    pub fn comma_string(&self) -> String {
        let mut out = String::new();
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&format!("{l}"));
        }
        out
    }
}

impl fmt::Display for Name {
    /// Digit form when every label fits in one digit, comma form otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&l| l <= 9) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.comma_string())
        }
    }
}

/// Relabels `labels` rotated left by `rot` in order of first occurrence.
/// Returns the relabeled sequence and the map `map[old-1] = new`. The
/// labels may skip values, as they do for a fan-filtered name.
fn relabel_rotation(labels: &[u32], rot: usize) -> (Vec<u32>, Vec<u32>) {
    let len = labels.len();
    let top = labels.iter().copied().max().unwrap_or(0) as usize;
    let mut map = vec![0u32; top];
    let mut next = 1u32;
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let old = labels[(rot + k) % len];
        let slot = &mut map[(old - 1) as usize];
        if *slot == 0 {
            *slot = next;
            next += 1;
        }
        out.push(*slot);
    }
    (out, map)
}

/// Canonical sequence plus every rotation (with its relabel map) achieving it.
pub(crate) fn canonical_rotations(labels: &[u32]) -> (Vec<u32>, Vec<(usize, Vec<u32>)>) {
    let len = labels.len();
    if len == 0 {
        return (Vec::new(), vec![(0, Vec::new())]);
    }
    let mut best: Option<Vec<u32>> = None;
    let mut hits: Vec<(usize, Vec<u32>)> = Vec::new();
    for rot in 0..len {
        let (seq, map) = relabel_rotation(labels, rot);
        match &best {
            Some(b) if seq > *b => {}
            Some(b) if seq == *b => hits.push((rot, map)),
            _ => {
                best = Some(seq);
                hits.clear();
                hits.push((rot, map));
            }
        }
    }
    (best.unwrap(), hits)
}

/// A chord diagram held by its canonical name.
///
/// Construction canonicalizes, so two values compare equal exactly when they
/// are the same diagram. At most 64 chords are supported.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    name: Name,
}

impl ChordDiagram {
    /// Builds a diagram from any valid name, canonicalizing it.
    pub fn new(name: Name) -> Result<ChordDiagram> {
        if name.chord_count() > 64 {
            return Err(Error::CapExceeded(format!(
                "{} chords, at most 64 supported",
                name.chord_count()
            )));
        }
        Ok(ChordDiagram { name: name.canonical() })
    }

    /// Parses a name string and canonicalizes it.
    pub fn parse(text: &str) -> Result<ChordDiagram> {
        ChordDiagram::new(Name::parse(text)?)
    }

    /// Builds a diagram straight from a label sequence.
    pub fn from_labels(labels: Vec<u32>) -> Result<ChordDiagram> {
        ChordDiagram::new(Name::from_labels(labels)?)
    }

    /// The diagram with no chords.
    pub fn empty() -> ChordDiagram {
        ChordDiagram { name: Name(Vec::new()) }
    }

    /// Canonical name.
    pub fn name(&self) -> &Name {
        &self.name
    }

    /// Number of chords.
    pub fn chord_count(&self) -> usize {
        self.name.chord_count()
    }

    /// Endpoint positions (0-based, ascending) of each chord, indexed by
    /// label minus one.
    pub fn endpoints(&self) -> Vec<(usize, usize)> {
        let n = self.chord_count();
        let mut first = vec![usize::MAX; n];
        let mut out = vec![(0usize, 0usize); n];
        for (pos, &l) in self.name.labels().iter().enumerate() {
            let idx = (l - 1) as usize;
            if first[idx] == usize::MAX {
                first[idx] = pos;
            } else {
                out[idx] = (first[idx], pos);
            }
        }
        out
    }

    /// Crossing masks: bit s-1 of entry r-1 is set when chords r and s cross.
    /// Chords cross when each separates the other's endpoints on the circle.
    fn crossing_masks(&self) -> Vec<u64> {
        let n = self.chord_count();
        let ends = self.endpoints();
        let mut masks = vec![0u64; n];
        for r in 0..n {
            for s in (r + 1)..n {
                let (a1, a2) = ends[r];
                let (b1, b2) = ends[s];
                let inside = |p: usize| p > a1 && p < a2;
                if inside(b1) != inside(b2) {
                    masks[r] |= 1 << s;
                    masks[s] |= 1 << r;
                }
            }
        }
        masks
    }

    /// Crossing pairs `(r, s)` with r < s, ascending.
    pub fn crossing_graph(&self) -> Vec<(u32, u32)> {
        let n = self.chord_count();
        let masks = self.crossing_masks();
        let mut out = Vec::new();
        for (r, &mask) in masks.iter().enumerate() {
            for s in (r + 1)..n {
                if mask & (1 << s) != 0 {
                    out.push((r as u32 + 1, s as u32 + 1));
                }
            }
        }
        out
    }

    /// Maximal fans, each listed in chain order; blocks sorted by head label.
    ///
    /// Chord s directly follows chord r in a fan when both endpoints of r are
    /// immediately followed on the circle by an endpoint of s. Maximal chains
    /// of that relation are the maximal fans; a chain that closes into a
    /// cycle covers the whole diagram.
    pub fn maximal_fans(&self) -> Vec<Vec<u32>> {
        let n = self.chord_count();
        if n == 0 {
            return Vec::new();
        }
        let labels = self.name.labels();
        let len = labels.len();
        let ends = self.endpoints();
        let mut succ = vec![None; n];
        let mut pred = vec![None; n];
        for r in 0..n {
            let (p1, p2) = ends[r];
            let a = labels[(p1 + 1) % len];
            let b = labels[(p2 + 1) % len];
            if a == b && a != r as u32 + 1 {
                succ[r] = Some(a);
                pred[(a - 1) as usize] = Some(r as u32 + 1);
            }
        }
        let mut blocks = Vec::new();
        let mut seen = vec![false; n];
        for head in 1..=n as u32 {
            if pred[(head - 1) as usize].is_some() || seen[(head - 1) as usize] {
                continue;
            }
            let mut block = Vec::new();
            let mut cur = head;
            loop {
                block.push(cur);
                seen[(cur - 1) as usize] = true;
                match succ[(cur - 1) as usize] {
                    Some(next) if !seen[(next - 1) as usize] => cur = next,
                    _ => break,
                }
            }
            blocks.push(block);
        }
        // Anything left sits on successor cycles; start each at its least
        // label so the result is deterministic.
        for start in 1..=n as u32 {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut block = Vec::new();
            let mut cur = start;
            loop {
                block.push(cur);
                seen[(cur - 1) as usize] = true;
                match succ[(cur - 1) as usize] {
                    Some(next) if !seen[(next - 1) as usize] => cur = next,
                    _ => break,
                }
            }
            blocks.push(block);
        }
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    /// Collapses every maximal fan to a single chord.
    ///
    /// The result keeps one representative chord per fan and records the fan
    /// sizes as weights, so `expand` restores the original diagram.
    pub fn amalgamate(&self) -> Result<WeightedDiagram> {
        let blocks = self.maximal_fans();
        let mut keep = vec![false; self.chord_count()];
        let mut size_of_head = vec![0u32; self.chord_count()];
        for block in &blocks {
            keep[(block[0] - 1) as usize] = true;
            size_of_head[(block[0] - 1) as usize] = block.len() as u32;
        }
        let reduced: Vec<u32> = self
            .name
            .labels()
            .iter()
            .copied()
            .filter(|&l| keep[(l - 1) as usize])
            .collect();
        let (_, rots) = canonical_rotations(&reduced);
        let map = &rots[0].1;
        let base = ChordDiagram::from_labels(relabel_rotation(&reduced, rots[0].0).0)?;
        let mut weights = vec![0u32; base.chord_count()];
        for (old_idx, &w) in size_of_head.iter().enumerate() {
            if w > 0 {
                weights[(map[old_idx] - 1) as usize] = w;
            }
        }
        WeightedDiagram::new(base, weights)
    }

    /// Largest set of pairwise non-crossing chords, lexicographically least
    /// among the maximum ones.
    pub fn max_parallel_set(&self) -> Vec<u32> {
        let n = self.chord_count();
        if n == 0 {
            return Vec::new();
        }
        let masks = self.crossing_masks();
        fn mis(avail: u64, masks: &[u64]) -> u32 {
            if avail == 0 {
                return 0;
            }
            let v = avail.trailing_zeros() as usize;
            let without = mis(avail & !(1 << v), masks);
            let with = 1 + mis(avail & !(1 << v) & !masks[v], masks);
            with.max(without)
        }
        let full = (1u64 << n) - 1;
        let target = mis(full, &masks);
        let mut chosen = Vec::new();
        let mut avail = full;
        let mut need = target;
        for v in 0..n {
            if avail & (1 << v) == 0 {
                continue;
            }
            let rest = avail & !(1 << v) & !masks[v];
            if 1 + mis(rest, &masks) == need {
                chosen.push(v as u32 + 1);
                avail = rest;
                need -= 1;
                if need == 0 {
                    break;
                }
            } else {
                avail &= !(1 << v);
            }
        }
        chosen
    }

    /// Lower and upper bounds for the braid index: the parallel-set bound
    /// below and one more than the chord count above.
    pub fn index_bounds(&self) -> (u32, u32) {
        let n = self.chord_count() as u32;
        if n == 0 {
            return (1, 1);
        }
        let p = self.max_parallel_set().len() as u32;
        ((p + 1).max(2), n + 1)
    }

    /// Chords that cross every other chord, ascending. For a single chord
    /// the condition holds vacuously.
    pub fn special_chords(&self) -> Vec<u32> {
        let n = self.chord_count();
        let masks = self.crossing_masks();
        (0..n)
            .filter(|&r| masks[r].count_ones() as usize == n - 1)
            .map(|r| r as u32 + 1)
            .collect()
    }

    /// Permutations read off at each endpoint of each special chord.
    ///
    /// Rotating the name to start at an endpoint of a special chord always
    /// yields `1..n` followed by a permutation fixing 1, because every other
    /// chord has exactly one endpoint on each side. The two endpoints of one
    /// chord give mutually inverse permutations.
    pub fn associated_permutations(&self) -> Result<Vec<AssociatedPermutation>> {
        let specials = self.special_chords();
        if specials.is_empty() {
            return Err(Error::NoSpecialChord);
        }
        let n = self.chord_count();
        let labels = self.name.labels();
        let ends = self.endpoints();
        let mut out = Vec::new();
        for &c in &specials {
            let (p1, p2) = ends[(c - 1) as usize];
            for (which, p) in [(0u8, p1), (1u8, p2)] {
                let (seq, _) = relabel_rotation(labels, p);
                debug_assert!(seq[..n].iter().enumerate().all(|(k, &l)| l == k as u32 + 1));
                let sigma = seq[n..].to_vec();
                debug_assert_eq!(sigma.first(), Some(&1));
                out.push(AssociatedPermutation { chord: c, endpoint: which, sigma });
            }
        }
        Ok(out)
    }

    /// True when some associated permutation has exactly one descent.
    ///
    /// For diagrams with a special chord this characterizes braid index
    /// three; zero descents happen exactly for the identity, which reads off
    /// a fan of braid index two.
    pub fn is_braid_index_three_special(&self) -> Result<bool> {
        let perms = self.associated_permutations()?;
        Ok(perms.iter().any(|p| descents(&p.sigma) == 1))
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// Number of positions where the one-line form decreases.
pub fn descents(sigma: &[u32]) -> usize {
    sigma.windows(2).filter(|w| w[0] > w[1]).count()
}

/// One permutation read off a special chord endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedPermutation {
    /// The special chord the permutation was read from.
    pub chord: u32,
    /// 0 for the first endpoint in the canonical name, 1 for the second.
    pub endpoint: u8,
    /// One-line form; always starts with 1.
    pub sigma: Vec<u32>,
}

/// A diagram with all-singleton fans plus a positive weight per chord.
///
/// Expanding chord r into a fan of `weight[r-1]` parallel copies restores a
/// full diagram; amalgamating any diagram produces a value of this type.
/// Weights are normalized to the lexicographically least vector over the
/// rotational symmetries of the base, which makes expansion followed by
/// amalgamation the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeightedDiagram {
    base: ChordDiagram,
    weights: Vec<u32>,
}

impl WeightedDiagram {
    /// Validates the invariants and normalizes the weight vector.
    pub fn new(base: ChordDiagram, weights: Vec<u32>) -> Result<WeightedDiagram> {
        if weights.len() != base.chord_count() {
            return Err(Error::Syntax(format!(
                "{} weights for {} chords",
                weights.len(),
                base.chord_count()
            )));
        }
        if let Some(w) = weights.iter().find(|&&w| w == 0) {
            return Err(Error::Syntax(format!("weight {w} must be at least 1")));
        }
        if let Some(fan) = base.maximal_fans().iter().find(|b| b.len() > 1) {
            return Err(Error::NotAmalgamated(format!(
                "base {} contains the fan {:?}",
                base, fan
            )));
        }
        // The same canonical name can be reached from several rotations;
        // each gives a relabeling of the chords. Pick the least weight
        // vector so equal diagrams get equal weighted forms.
        let (_, rots) = canonical_rotations(base.name.labels());
        let mut best: Option<Vec<u32>> = None;
        for (_, map) in &rots {
            let mut cand = vec![0u32; weights.len()];
            for (old_idx, &w) in weights.iter().enumerate() {
                cand[(map[old_idx] - 1) as usize] = w;
            }
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
        Ok(WeightedDiagram { base, weights: best.unwrap_or(weights) })
    }

    /// The amalgamated diagram.
    pub fn base(&self) -> &ChordDiagram {
        &self.base
    }

    /// Fan sizes, indexed by base chord label minus one.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Replaces each chord by a fan of parallel copies of its weight.
    pub fn expand(&self) -> Result<ChordDiagram> {
        let labels = self.base.name.labels();
        let n = self.base.chord_count();
        // Allocate consecutive fresh labels per chord in order of first
        // occurrence so the result is a valid name as written.
        let mut start = vec![0u32; n];
        let mut next = 1u32;
        for &l in labels {
            let idx = (l - 1) as usize;
            if start[idx] == 0 {
                start[idx] = next;
                next += self.weights[idx];
            }
        }
        let mut out = Vec::new();
        for &l in labels {
            let idx = (l - 1) as usize;
            for k in 0..self.weights[idx] {
                out.push(start[idx] + k);
            }
        }
        ChordDiagram::from_labels(out)
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with weights {:?}", self.base, self.weights)
    }
}

/// All diagrams with exactly `n` chords, sorted by canonical name.
pub fn enumerate_diagrams(n: usize, limits: &Limits) -> Result<Vec<ChordDiagram>> {
    if n > limits.enumerate_max_chords {
        return Err(Error::CapExceeded(format!(
            "{} chords, enumeration capped at {}",
            n, limits.enumerate_max_chords
        )));
    }
    if n == 0 {
        return Ok(vec![ChordDiagram::empty()]);
    }
    let mut seen = BTreeSet::new();
    let mut slots = vec![0u32; 2 * n];
    fn rec(slots: &mut Vec<u32>, next: u32, seen: &mut BTreeSet<Name>) {
        let first = match slots.iter().position(|&l| l == 0) {
            Some(p) => p,
            None => {
                let name = Name::from_labels(slots.clone()).expect("pairing is a valid name");
                seen.insert(name.canonical());
                return;
            }
        };
        for second in (first + 1)..slots.len() {
            if slots[second] != 0 {
                continue;
            }
            slots[first] = next;
            slots[second] = next;
            rec(slots, next + 1, seen);
            slots[first] = 0;
            slots[second] = 0;
        }
    }
    rec(&mut slots, 1, &mut seen);
    seen.into_iter().map(ChordDiagram::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(text: &str) -> ChordDiagram {
        ChordDiagram::parse(text).unwrap()
    }

    #[test]
    fn parse_and_canonicalize() {
        assert_eq!(d("1212").to_string(), "1212");
        assert_eq!(d("2121").to_string(), "1212");
        assert_eq!(d("1221").to_string(), "1122");
        assert_eq!(d("1,2,1,2"), d("1212"));
        assert_eq!(d("").chord_count(), 0);
        assert_eq!(d("121323").to_string(), "121323");
        assert_eq!(d("12341342").to_string(), "12134234");
        assert_eq!(d("12341342"), d("12341423"));
        assert_eq!(d("12342143").to_string(), "12314324");
        assert_eq!(d("12341324").to_string(), "12314234");
    }

    #[test]
    fn parse_rejects_bad_names() {
        assert!(matches!(
            ChordDiagram::parse("1213"),
            Err(Error::LabelCount { label: 2, count: 1 })
        ));
        assert!(matches!(ChordDiagram::parse("1a"), Err(Error::Syntax(_))));
        assert!(matches!(ChordDiagram::parse("0101"), Err(Error::Syntax(_))));
        assert!(matches!(
            ChordDiagram::parse("1133"),
            Err(Error::LabelGap { label: 3, max: 2 })
        ));
    }

    #[test]
    fn canonical_is_idempotent_and_rotation_invariant() {
        for text in ["1212", "1122", "121323", "12341342", "112233", "12314324"] {
            let name = Name::parse(text).unwrap();
            let canon = name.canonical();
            assert_eq!(canon.canonical(), canon);
            let labels = name.labels();
            for rot in 0..labels.len() {
                let rotated: Vec<u32> =
                    (0..labels.len()).map(|k| labels[(rot + k) % labels.len()]).collect();
                let (relabeled, _) = relabel_rotation(&rotated, 0);
                assert_eq!(Name::from_labels(relabeled).unwrap().canonical(), canon);
            }
        }
    }

    #[test]
    fn crossing_graphs() {
        assert_eq!(d("1212").crossing_graph(), vec![(1, 2)]);
        assert!(d("1122").crossing_graph().is_empty());
        assert!(d("1221").crossing_graph().is_empty());
        // Canonical form of 12342143; chords 1-4 and 2-3 stay parallel.
        assert_eq!(
            d("12342143").crossing_graph(),
            vec![(1, 2), (1, 3), (2, 4), (3, 4)]
        );
        // Canonical form of 12341324; every pair crosses except 1-4.
        assert_eq!(
            d("12341324").crossing_graph(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn fans() {
        assert_eq!(d("1212").maximal_fans(), vec![vec![1, 2]]);
        assert_eq!(d("1122").maximal_fans(), vec![vec![1], vec![2]]);
        assert_eq!(d("123123").maximal_fans(), vec![vec![1, 2, 3]]);
        assert_eq!(d("121323").maximal_fans(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(d("12341342").maximal_fans(), vec![vec![1], vec![2], vec![3, 4]]);
        assert_eq!(d("11").maximal_fans(), vec![vec![1]]);
    }

    #[test]
    fn amalgamation() {
        let w = d("123123").amalgamate().unwrap();
        assert_eq!(w.base().to_string(), "11");
        assert_eq!(w.weights(), &[3]);

        let w = d("1212").amalgamate().unwrap();
        assert_eq!(w.base().to_string(), "11");
        assert_eq!(w.weights(), &[2]);

        let w = d("1122").amalgamate().unwrap();
        assert_eq!(w.base(), &d("1122"));
        assert_eq!(w.weights(), &[1, 1]);

        let w = d("12341342").amalgamate().unwrap();
        assert_eq!(w.base().to_string(), "121323");
        assert_eq!(w.weights(), &[1, 1, 2]);
    }

    #[test]
    fn expansion_round_trips() {
        let w = WeightedDiagram::new(d("11"), vec![3]).unwrap();
        assert_eq!(w.expand().unwrap(), d("123123"));

        let w = WeightedDiagram::new(d("121323"), vec![1, 1, 2]).unwrap();
        assert_eq!(w.expand().unwrap().to_string(), "12134234");

        // The two spellings of the weight vector describe the same diagram,
        // so normalization identifies them.
        let a = WeightedDiagram::new(d("121323"), vec![1, 1, 2]).unwrap();
        let b = WeightedDiagram::new(d("121323"), vec![2, 1, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.expand().unwrap(), a.expand().unwrap());

        // A base with a non-singleton fan is rejected.
        assert!(matches!(
            WeightedDiagram::new(d("1212"), vec![1, 1]),
            Err(Error::NotAmalgamated(_))
        ));

        let limits = Limits::default();
        for n in 0..=4 {
            for diagram in enumerate_diagrams(n, &limits).unwrap() {
                let w = diagram.amalgamate().unwrap();
                assert_eq!(w.expand().unwrap(), diagram, "round trip for {diagram}");
                let again = w.expand().unwrap().amalgamate().unwrap();
                assert_eq!(again, w, "weights stable for {diagram}");
            }
        }
    }

    #[test]
    fn parallel_sets_and_bounds() {
        assert_eq!(d("123123").max_parallel_set(), vec![1]);
        assert_eq!(d("112233").max_parallel_set(), vec![1, 2, 3]);
        assert_eq!(d("123321").max_parallel_set().len(), 3);
        assert_eq!(d("12342143").max_parallel_set(), vec![1, 4]);
        assert_eq!(d("1212").index_bounds(), (2, 3));
        assert_eq!(d("123321").index_bounds(), (4, 4));
        assert_eq!(d("112233").index_bounds(), (4, 4));
        assert_eq!(ChordDiagram::empty().index_bounds(), (1, 1));
        assert_eq!(d("11").index_bounds(), (2, 2));
    }

    #[test]
    fn special_chords_and_permutations() {
        assert_eq!(d("1212").special_chords(), vec![1, 2]);
        assert!(d("1122").special_chords().is_empty());
        assert!(d("1221").special_chords().is_empty());
        assert!(d("12342143").special_chords().is_empty());
        assert_eq!(d("12341324").special_chords(), vec![2, 3]);
        assert_eq!(d("121323").special_chords(), vec![2]);
        assert_eq!(d("11").special_chords(), vec![1]);

        let perms = d("12341342").associated_permutations().unwrap();
        let sigmas: Vec<&[u32]> = perms.iter().map(|p| p.sigma.as_slice()).collect();
        assert!(sigmas.contains(&[1, 3, 4, 2].as_slice()));
        assert!(sigmas.contains(&[1, 4, 2, 3].as_slice()));
        // The two endpoints of one chord read inverse permutations.
        for pair in perms.chunks(2) {
            let (a, b) = (&pair[0].sigma, &pair[1].sigma);
            for (k, &v) in a.iter().enumerate() {
                assert_eq!(b[(v - 1) as usize], k as u32 + 1);
            }
        }
        assert!(matches!(
            d("1122").associated_permutations(),
            Err(Error::NoSpecialChord)
        ));
    }

    #[test]
    fn single_descent_predicate() {
        assert!(d("12341342").is_braid_index_three_special().unwrap());
        assert!(d("123132").is_braid_index_three_special().unwrap());
        assert!(d("121323").is_braid_index_three_special().unwrap());
        assert!(!d("123123").is_braid_index_three_special().unwrap());
        assert!(!d("1212").is_braid_index_three_special().unwrap());
        assert!(!d("11").is_braid_index_three_special().unwrap());
    }

    #[test]
    fn enumeration_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> =
            (1..=6).map(|n| enumerate_diagrams(n, &limits).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 18, 105, 902]);

        let names: Vec<String> = enumerate_diagrams(2, &limits)
            .unwrap()
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(names, vec!["1122", "1212"]);

        let names: Vec<String> = enumerate_diagrams(3, &limits)
            .unwrap()
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(names, vec!["112233", "112323", "112332", "121323", "123123"]);

        assert!(matches!(
            enumerate_diagrams(7, &limits),
            Err(Error::CapExceeded(_))
        ));
        assert_eq!(enumerate_diagrams(0, &limits).unwrap().len(), 1);
    }
}
