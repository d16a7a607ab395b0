//! Words of horizontal chords on numbered strands.
//!
//! A word lives on m parallel strands and is a finite product of generators
//! A(i,j) with 1 <= i < j <= m, each a horizontal chord joining strands i
//! and j. Two generators commute exactly when their strand pairs are
//! disjoint. Closing the strands into circles and reading the chords along
//! them turns a word into a chord diagram; every move in this module
//! preserves that closure.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{ChordDiagram, Name};
use crate::error::{Error, Result};

/// A horizontal chord joining strands `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    i: u32,
    j: u32,
}

impl Generator {
    /// Validates `1 <= i < j`.
    pub fn new(i: u32, j: u32) -> Result<Generator> {
        if i == 0 || i >= j {
            return Err(Error::Syntax(format!("A({i},{j}) needs 1 <= i < j")));
        }
        Ok(Generator { i, j })
    }

    /// Lower strand.
    pub fn lower(&self) -> u32 {
        self.i
    }

    /// Upper strand.
    pub fn upper(&self) -> u32 {
        self.j
    }

    /// True when the chord has an endpoint on strand `s`.
    pub fn touches(&self, s: u32) -> bool {
        self.i == s || self.j == s
    }

    /// True when the two chords share no strand, i.e. they commute.
    pub fn disjoint(&self, other: &Generator) -> bool {
        !self.touches(other.i) && !self.touches(other.j)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({},{})", self.i, self.j)
    }
}

/// A word of horizontal chords on `m` strands.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordWord {
    m: u32,
    gens: Vec<Generator>,
}

impl ChordWord {
    /// Validates that every generator fits on `m >= 1` strands.
    pub fn new(m: u32, gens: Vec<Generator>) -> Result<ChordWord> {
        if m == 0 {
            return Err(Error::IndexOutOfRange { index: 0, strands: 0 });
        }
        for g in &gens {
            if g.j > m {
                return Err(Error::IndexOutOfRange { index: g.j, strands: m });
            }
        }
        Ok(ChordWord { m, gens })
    }

    /// Parses the explicit form `"A(1,3)A(2,4)@4"` (possibly with no
    /// generators, as in `"@3"`), or the three-strand letter form where
    /// a = A(1,2), b = A(2,3), c = A(1,3) and a letter may carry an
    /// exponent: `"aba"`, `"a2c1b3"`, `"a^2c"`.
    pub fn parse(text: &str) -> Result<ChordWord> {
        let t = text.trim();
        if let Some(at) = t.rfind('@') {
            let m: u32 = t[at + 1..]
                .trim()
                .parse()
                .map_err(|_| Error::Syntax(format!("bad strand count '{}'", &t[at + 1..])))?;
            let gens = parse_explicit(&t[..at])?;
            ChordWord::new(m, gens)
        } else {
            let gens = parse_letters(t)?;
            ChordWord::new(3, gens)
        }
    }

    /// Strand count.
    pub fn strand_count(&self) -> u32 {
        self.m
    }

    /// The generator sequence.
    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// True when the word has no generators.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Endpoints per strand, indexed by strand minus one.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.m as usize];
        for g in &self.gens {
            counts[(g.i - 1) as usize] += 1;
            counts[(g.j - 1) as usize] += 1;
        }
        counts
    }

    /// The raw diagram name read off the closed-up strands: generators are
    /// labeled 1..n in word order, then each strand circle is traversed and
    /// the labels it meets are written out, strand by strand.
    pub fn read_name(&self) -> Name {
        let mut labels = Vec::with_capacity(2 * self.gens.len());
        for s in 1..=self.m {
            for (idx, g) in self.gens.iter().enumerate() {
                if g.touches(s) {
                    labels.push(idx as u32 + 1);
                }
            }
        }
        Name::from_labels(labels).expect("every generator label occurs exactly twice")
    }

    /// The chord diagram the word closes up to.
    pub fn close(&self) -> Result<ChordDiagram> {
        ChordDiagram::new(self.read_name())
    }

    /// Moves the last generator to the front, shifted one strand up; a
    /// generator ending on the top strand wraps to A(1, i+1). This is what
    /// sliding a chord once around the closed-up braid does.
    pub fn cyclic_permute(&self) -> Result<ChordWord> {
        let g = *self.gens.last().ok_or(Error::EmptyWord)?;
        let moved = if g.j < self.m {
            Generator { i: g.i + 1, j: g.j + 1 }
        } else {
            Generator { i: 1, j: g.i + 1 }
        };
        let mut gens = Vec::with_capacity(self.gens.len());
        gens.push(moved);
        gens.extend_from_slice(&self.gens[..self.gens.len() - 1]);
        Ok(ChordWord { m: self.m, gens })
    }

    /// The least linearization of the word's commutation class: repeatedly
    /// emit the smallest generator that no earlier unemitted generator
    /// shares a strand with.
    pub fn trace_normal_form(&self) -> ChordWord {
        let mut remaining = self.gens.clone();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let mut best: Option<usize> = None;
            for k in 0..remaining.len() {
                if remaining[..k].iter().all(|h| h.disjoint(&remaining[k]))
                    && best.map_or(true, |b| remaining[k] < remaining[b])
                {
                    best = Some(k);
                }
            }
            out.push(remaining.remove(best.expect("a first element is always minimal")));
        }
        ChordWord { m: self.m, gens: out }
    }

    /// Positions whose generator commutes with everything after it, so it
    /// can be carried to the end of the word.
    fn movable_to_end(&self) -> Vec<usize> {
        (0..self.gens.len())
            .filter(|&p| self.gens[p + 1..].iter().all(|h| h.disjoint(&self.gens[p])))
            .collect()
    }

    /// Splits strand `j = upper(gens[position])` just above that endpoint,
    /// adding one strand. Everything before the position keeps strand j;
    /// the chosen endpoint and everything after move to the new strand j+1.
    pub fn increase_stabilize(&self, position: usize) -> Result<ChordWord> {
        let g = *self
            .gens
            .get(position)
            .ok_or(Error::Position { position, len: self.gens.len() })?;
        let j = g.j;
        let bump_gt = |x: u32| if x > j { x + 1 } else { x };
        let bump_ge = |x: u32| if x >= j { x + 1 } else { x };
        let mut gens = Vec::with_capacity(self.gens.len());
        for h in &self.gens[..position] {
            gens.push(Generator { i: bump_gt(h.i), j: bump_gt(h.j) });
        }
        gens.push(Generator { i: g.i, j: j + 1 });
        for h in &self.gens[position + 1..] {
            gens.push(Generator { i: bump_ge(h.i), j: bump_ge(h.j) });
        }
        Ok(ChordWord { m: self.m + 1, gens })
    }

    /// Inverse of [`increase_stabilize`](Self::increase_stabilize) at the
    /// same position: fuses strands j-1 and j at the chosen endpoint. Needs
    /// the prefix clear of strand j, the suffix clear of strand j-1, and
    /// the generator not to join adjacent strands.
    pub fn decrease_stabilize(&self, position: usize) -> Result<ChordWord> {
        let g = *self
            .gens
            .get(position)
            .ok_or(Error::Position { position, len: self.gens.len() })?;
        let j = g.j;
        if g.i == j - 1 {
            return Err(Error::NotApplicable(format!(
                "generator {g} joins adjacent strands"
            )));
        }
        if self.gens[..position].iter().any(|h| h.touches(j)) {
            return Err(Error::NotApplicable(format!("prefix touches strand {j}")));
        }
        if self.gens[position + 1..].iter().any(|h| h.touches(j - 1)) {
            return Err(Error::NotApplicable(format!(
                "suffix touches strand {}",
                j - 1
            )));
        }
        let drop_gt = |x: u32| if x > j { x - 1 } else { x };
        let drop_ge = |x: u32| if x >= j { x - 1 } else { x };
        let mut gens = Vec::with_capacity(self.gens.len());
        for h in &self.gens[..position] {
            gens.push(Generator { i: drop_gt(h.i), j: drop_gt(h.j) });
        }
        gens.push(Generator { i: g.i, j: j - 1 });
        for h in &self.gens[position + 1..] {
            gens.push(Generator { i: drop_ge(h.i), j: drop_ge(h.j) });
        }
        Ok(ChordWord { m: self.m - 1, gens })
    }

    /// Merges strand `j` into strand `j-1`, reordering within the
    /// commutation class first. Applicable when no chord on strand j has to
    /// come before a chord on strand j-1; the word is then split into a
    /// prefix clear of j followed by a suffix clear of j-1 and the strands
    /// are fused. Returns the merged word and the split position.
    fn strand_merge_split(&self, j: u32) -> Result<(ChordWord, usize)> {
        if j < 2 || j > self.m {
            return Err(Error::IndexOutOfRange { index: j, strands: self.m });
        }
        let len = self.gens.len();
        // down[q] collects every position that must stay before q under the
        // commutation order (shared strands, transitively).
        let mut down: Vec<Vec<bool>> = Vec::with_capacity(len);
        for q in 0..len {
            let mut set = vec![false; len];
            set[q] = true;
            for p in 0..q {
                if !self.gens[p].disjoint(&self.gens[q]) && !set[p] {
                    for (slot, &v) in down[p].iter().enumerate() {
                        if v {
                            set[slot] = true;
                        }
                    }
                    set[p] = true;
                }
            }
            down.push(set);
        }
        let mut in_prefix = vec![false; len];
        for (g, reaches) in self.gens.iter().zip(&down) {
            if g.touches(j - 1) {
                for (slot, &v) in reaches.iter().enumerate() {
                    if v {
                        in_prefix[slot] = true;
                    }
                }
            }
        }
        if let Some(p) = (0..len).find(|&p| in_prefix[p] && self.gens[p].touches(j)) {
            return Err(Error::NotApplicable(format!(
                "{} on strand {j} cannot follow the strand-{} chords",
                self.gens[p],
                j - 1
            )));
        }
        let drop_gt = |x: u32| if x > j { x - 1 } else { x };
        let drop_ge = |x: u32| if x >= j { x - 1 } else { x };
        let mut gens = Vec::with_capacity(len);
        let mut split = 0;
        for (&early, h) in in_prefix.iter().zip(&self.gens) {
            if early {
                gens.push(Generator { i: drop_gt(h.i), j: drop_gt(h.j) });
                split += 1;
            }
        }
        for (&early, h) in in_prefix.iter().zip(&self.gens) {
            if !early {
                gens.push(Generator { i: drop_ge(h.i), j: drop_ge(h.j) });
            }
        }
        Ok((ChordWord { m: self.m - 1, gens }, split))
    }

    /// Merges strand `j` into strand `j-1`; see
    /// [`strand_merge_split`](Self::strand_merge_split) for the condition.
    pub fn strand_merge(&self, j: u32) -> Result<ChordWord> {
        self.strand_merge_split(j).map(|(w, _)| w)
    }

    /// Deletes every strand without endpoints, renumbering the rest. An
    /// empty word collapses to the single bare circle.
    pub fn remove_empty_strands(&self) -> ChordWord {
        if self.gens.is_empty() {
            return ChordWord { m: 1, gens: Vec::new() };
        }
        let counts = self.strand_counts();
        let mut map = vec![0u32; self.m as usize];
        let mut next = 0u32;
        for s in 0..self.m as usize {
            if counts[s] > 0 {
                next += 1;
                map[s] = next;
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| Generator { i: map[(g.i - 1) as usize], j: map[(g.j - 1) as usize] })
            .collect();
        ChordWord { m: next, gens }
    }

    /// True for the distinguished braiding shape: 2n strands for n chords,
    /// one endpoint per strand.
    pub fn is_canonical_braiding(&self) -> bool {
        self.m as usize == 2 * self.gens.len()
            && self.strand_counts().iter().all(|&c| c == 1)
    }
}

impl fmt::Display for ChordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gens {
            write!(f, "{g}")?;
        }
        write!(f, "@{}", self.m)
    }
}

fn expect_char(chars: &mut core::iter::Peekable<core::str::Chars<'_>>, want: char) -> Result<()> {
    match chars.next() {
        Some(c) if c == want => Ok(()),
        other => Err(Error::Syntax(format!("expected '{want}', found {other:?}"))),
    }
}

fn read_int(chars: &mut core::iter::Peekable<core::str::Chars<'_>>, stop: char) -> Result<u32> {
    let mut digits = String::new();
    loop {
        match chars.next() {
            Some(c) if c.is_ascii_digit() => digits.push(c),
            Some(c) if c == stop && !digits.is_empty() => break,
            other => {
                return Err(Error::Syntax(format!(
                    "expected digit or '{stop}', found {other:?}"
                )))
            }
        }
    }
    digits
        .parse()
        .map_err(|_| Error::Syntax(format!("bad number '{digits}'")))
}

fn parse_explicit(text: &str) -> Result<Vec<Generator>> {
    let mut gens = Vec::new();
    let mut chars = text.trim().chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != 'A' {
            return Err(Error::Syntax(format!("expected 'A', found '{c}'")));
        }
        chars.next();
        expect_char(&mut chars, '(')?;
        let i = read_int(&mut chars, ',')?;
        let j = read_int(&mut chars, ')')?;
        gens.push(Generator::new(i, j)?);
    }
    Ok(gens)
}

fn parse_letters(text: &str) -> Result<Vec<Generator>> {
    let mut gens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let g = match c {
            'a' => Generator { i: 1, j: 2 },
            'b' => Generator { i: 2, j: 3 },
            'c' => Generator { i: 1, j: 3 },
            _ => return Err(Error::Syntax(format!("unexpected character '{c}'"))),
        };
        if chars.peek() == Some(&'^') {
            chars.next();
        }
        let mut digits = String::new();
        while let Some(&d) = chars.peek() {
            if d.is_ascii_digit() {
                digits.push(d);
                chars.next();
            } else {
                break;
            }
        }
        let count: u32 = if digits.is_empty() {
            1
        } else {
            let e = digits
                .parse()
                .map_err(|_| Error::Syntax(format!("bad exponent '{digits}'")))?;
            if e == 0 {
                return Err(Error::Syntax("exponent 0".into()));
            }
            e
        };
        for _ in 0..count {
            gens.push(g);
        }
    }
    Ok(gens)
}

/// The braiding read straight off a name: chord r of a 2n-letter name
/// becomes A(p, q) on 2n strands, where p and q are the positions of r.
/// Reading the result back strand by strand reproduces the name exactly.
pub fn canonical_braiding(name: &Name) -> ChordWord {
    let labels = name.labels();
    let n = name.chord_count();
    if n == 0 {
        return ChordWord { m: 1, gens: Vec::new() };
    }
    let mut first = vec![0u32; n];
    let mut gens = vec![Generator { i: 0, j: 0 }; n];
    for (pos, &l) in labels.iter().enumerate() {
        let idx = (l - 1) as usize;
        if first[idx] == 0 {
            first[idx] = pos as u32 + 1;
        } else {
            gens[idx] = Generator { i: first[idx], j: pos as u32 + 1 };
        }
    }
    ChordWord { m: 2 * n as u32, gens }
}

/// True when the words are related by commutations and cyclic permutations.
///
/// Breadth-first search over commutation classes: from each class, any
/// generator movable to the end can be cyclically permuted to the front.
/// This explores strictly more than rotating one fixed spelling, which can
/// miss classmates that only appear after interleaved commutations.
pub fn cyclically_equivalent(v: &ChordWord, w: &ChordWord) -> bool {
    if v.m != w.m || v.gens.len() != w.gens.len() {
        return false;
    }
    if v.gens.is_empty() {
        return true;
    }
    let target = w.trace_normal_form();
    let start = v.trace_normal_form();
    if start == target {
        return true;
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(state) = queue.pop_front() {
        for p in state.movable_to_end() {
            let mut gens = state.gens.clone();
            let g = gens.remove(p);
            gens.push(g);
            let moved = ChordWord { m: state.m, gens };
            let next = moved
                .cyclic_permute()
                .expect("nonempty word")
                .trace_normal_form();
            if next == target {
                return true;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        assert!(
            seen.len() <= 2_000_000,
            "cyclic equivalence search blew past its state budget"
        );
    }
    false
}

/// One rewriting step on a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Swap the commuting generators at `position` and `position + 1`.
    Commute { position: usize },
    /// Slide the last generator around the closure to the front.
    CyclicPermute,
    /// Increasing stabilization at a generator position.
    Increase { position: usize },
    /// Decreasing stabilization at a generator position.
    Decrease { position: usize },
    /// Merge `strand` into `strand - 1`; `split` records how many
    /// generators land in the prefix, as a replay check.
    Merge { strand: u32, split: usize },
}

impl Move {
    /// Applies the move to a word.
    pub fn apply(&self, word: &ChordWord) -> Result<ChordWord> {
        match *self {
            Move::Commute { position } => {
                if position + 1 >= word.gens.len() {
                    return Err(Error::Position { position, len: word.gens.len() });
                }
                if !word.gens[position].disjoint(&word.gens[position + 1]) {
                    return Err(Error::NotApplicable(format!(
                        "{} and {} share a strand",
                        word.gens[position],
                        word.gens[position + 1]
                    )));
                }
                let mut gens = word.gens.clone();
                gens.swap(position, position + 1);
                Ok(ChordWord { m: word.m, gens })
            }
            Move::CyclicPermute => word.cyclic_permute(),
            Move::Increase { position } => word.increase_stabilize(position),
            Move::Decrease { position } => word.decrease_stabilize(position),
            Move::Merge { strand, split } => {
                let (merged, actual) = word.strand_merge_split(strand)?;
                if actual != split {
                    return Err(Error::NotApplicable(format!(
                        "merge split drifted: recorded {split}, recomputed {actual}"
                    )));
                }
                Ok(merged)
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Commute { position } => write!(f, "commute@{position}"),
            Move::CyclicPermute => write!(f, "cycle"),
            Move::Increase { position } => write!(f, "increase@{position}"),
            Move::Decrease { position } => write!(f, "decrease@{position}"),
            Move::Merge { strand, split } => write!(f, "merge strand {strand} (split {split})"),
        }
    }
}

/// A replayable sequence of moves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub moves: Vec<Move>,
}

impl MoveTrace {
    /// Applies every move in order to `source`.
    pub fn replay(&self, source: &ChordWord) -> Result<ChordWord> {
        let mut cur = source.clone();
        for mv in &self.moves {
            cur = mv.apply(&cur)?;
        }
        Ok(cur)
    }
}

/// Endpoint crowding: how far the word is from one endpoint per strand.
fn crowding(word: &ChordWord) -> usize {
    word.strand_counts().iter().map(|&c| c.saturating_sub(1)).sum()
}

/// Rewrites a word into a canonical braiding of its closure, recording the
/// moves taken.
///
/// Strategy: while some strand carries two or more endpoints, cut the
/// highest such strand by an increasing stabilization at its last endpoint
/// that leaves an earlier endpoint behind; when no strand can be cut,
/// cyclically permute. Cutting above the first endpoint of a strand only
/// inserts an empty strand, so those cuts are never taken and empty strands
/// are merged away only at the end. If the rotation loop closes without
/// offering a cut, a breadth-first search over rotations and arbitrary
/// stabilizations finds the nearest word with less crowding.
///
/// The empty word has no canonical braiding (it would need zero strands);
/// it collapses to the empty word on one strand.
pub fn braid_up(word: &ChordWord) -> (ChordWord, MoveTrace) {
    let mut cur = word.clone();
    let mut moves = Vec::new();
    let mut recent: BTreeSet<ChordWord> = BTreeSet::new();
    loop {
        if cur.is_canonical_braiding() || (cur.is_empty() && cur.m == 1) {
            return (cur, MoveTrace { moves });
        }
        let counts = cur.strand_counts();
        if counts.iter().all(|&c| c <= 1) {
            // Only empty strands are in the way; merge them away from the
            // top down so lower indices stay valid. An empty strand 1 is
            // absorbed by merging strand 2 into it.
            while cur.m > 1 {
                let counts = cur.strand_counts();
                let Some(s) = (1..=cur.m).rev().find(|&s| counts[(s - 1) as usize] == 0)
                else {
                    break;
                };
                let j = s.max(2);
                let (merged, split) =
                    cur.strand_merge_split(j).expect("empty strand always merges");
                moves.push(Move::Merge { strand: j, split });
                cur = merged;
            }
            continue;
        }
        let mut cut = None;
        'strand: for s in (1..=cur.m).rev() {
            if counts[(s - 1) as usize] < 2 {
                continue;
            }
            let mut seen_s = false;
            let mut best = None;
            for (p, g) in cur.generators().iter().enumerate() {
                if g.upper() == s && seen_s {
                    best = Some(p);
                }
                if g.touches(s) {
                    seen_s = true;
                }
            }
            if let Some(p) = best {
                cut = Some(p);
                break 'strand;
            }
        }
        if let Some(p) = cut {
            moves.push(Move::Increase { position: p });
            cur = cur.increase_stabilize(p).expect("position comes from the word");
            recent.clear();
        } else if recent.insert(cur.clone()) {
            moves.push(Move::CyclicPermute);
            cur = cur.cyclic_permute().expect("crowded word is nonempty");
        } else {
            // The rotation orbit closed without a cut; search for the
            // nearest crowding drop.
            let path = uncrowd_search(&cur);
            for mv in path {
                cur = mv.apply(&cur).expect("searched move applies");
                moves.push(mv);
            }
            recent.clear();
        }
    }
}

/// Breadth-first search from `start` over rotations and all increasing
/// stabilizations, returning the move path to the first word with strictly
/// less crowding.
fn uncrowd_search(start: &ChordWord) -> Vec<Move> {
    let goal = crowding(start);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut parents: Vec<(ChordWord, usize, Move)> = Vec::new();
    seen.insert(start.clone());
    queue.push_back((start.clone(), usize::MAX));
    while let Some((state, parent)) = queue.pop_front() {
        let mut neighbors: Vec<(Move, ChordWord)> = Vec::new();
        if let Ok(next) = state.cyclic_permute() {
            neighbors.push((Move::CyclicPermute, next));
        }
        for p in 0..state.len() {
            if let Ok(next) = state.increase_stabilize(p) {
                neighbors.push((Move::Increase { position: p }, next));
            }
        }
        for (mv, next) in neighbors {
            if !seen.insert(next.clone()) {
                continue;
            }
            parents.push((state.clone(), parent, mv));
            let link = parents.len() - 1;
            if crowding(&next) < goal {
                let mut path = Vec::new();
                let mut at = link;
                loop {
                    let (_, up, mv) = (&parents[at].0, parents[at].1, parents[at].2);
                    path.push(mv);
                    if up == usize::MAX {
                        break;
                    }
                    at = up;
                }
                path.reverse();
                return path;
            }
            queue.push_back((next, link));
        }
        assert!(
            seen.len() <= 200_000,
            "braiding search blew past its state budget"
        );
    }
    unreachable!("a crowded word always admits a crowding drop")
}
