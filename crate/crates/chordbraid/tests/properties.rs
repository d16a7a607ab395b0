//! Randomized and exhaustive cross-checks of the word calculus.

use chordbraid::braidword::{braid_up, canonical_braiding, ChordWord, Generator};
use chordbraid::diagram::{enumerate_diagrams, ChordDiagram};
use chordbraid::Limits;
use proptest::prelude::{prop_assert_eq, prop_assume, proptest, Just, Strategy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(rng: &mut ChaCha8Rng) -> ChordWord {
    let m = rng.gen_range(2..=6u32);
    let len = rng.gen_range(0..=6usize);
    let gens = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..m);
            let j = rng.gen_range(i + 1..=m);
            Generator::new(i, j).unwrap()
        })
        .collect();
    ChordWord::new(m, gens).unwrap()
}

/// Every one-step rewrite of the word: commutations, the cyclic
/// permutation, all stabilizations in both directions, and strand merges.
fn neighbors(word: &ChordWord) -> Vec<ChordWord> {
    let mut out = Vec::new();
    let gens = word.generators();
    for p in 0..gens.len().saturating_sub(1) {
        if gens[p].disjoint(&gens[p + 1]) {
            let mut v = gens.to_vec();
            v.swap(p, p + 1);
            out.push(ChordWord::new(word.strand_count(), v).unwrap());
        }
    }
    if let Ok(w) = word.cyclic_permute() {
        out.push(w);
    }
    for p in 0..word.len() {
        if word.strand_count() <= 12 {
            out.push(word.increase_stabilize(p).unwrap());
        }
        if let Ok(w) = word.decrease_stabilize(p) {
            out.push(w);
        }
    }
    for j in 2..=word.strand_count() {
        if let Ok(w) = word.strand_merge(j) {
            out.push(w);
        }
    }
    out
}

#[test]
fn closures_survive_random_move_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let mut word = random_word(&mut rng);
        let diagram = word.close().unwrap();
        for _ in 0..12 {
            let options = neighbors(&word);
            if options.is_empty() {
                break;
            }
            word = options[rng.gen_range(0..options.len())].clone();
            assert_eq!(word.close().unwrap(), diagram, "diverged at {word}");
        }
    }
}

#[test]
fn braid_up_reaches_a_canonical_braiding() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb5a1d);
    for _ in 0..300 {
        let word = random_word(&mut rng);
        let (braided, trace) = braid_up(&word);
        if word.is_empty() {
            assert_eq!(braided, ChordWord::new(1, Vec::new()).unwrap());
        } else {
            assert!(braided.is_canonical_braiding(), "{word} -> {braided}");
        }
        assert_eq!(braided.close().unwrap(), word.close().unwrap(), "{word}");
        assert_eq!(trace.replay(&word).unwrap(), braided, "{word}");
    }
}

#[test]
fn every_small_diagram_round_trips_through_its_braiding() {
    let limits = Limits::default();
    for n in 0..=4 {
        for diagram in enumerate_diagrams(n, &limits).unwrap() {
            let braiding = canonical_braiding(diagram.name());
            if n > 0 {
                assert!(braiding.is_canonical_braiding(), "{}", diagram.name());
            }
            assert_eq!(&braiding.read_name(), diagram.name());
            assert_eq!(braiding.close().unwrap(), diagram);
        }
    }
}

#[test]
fn stabilizations_invert_each_other() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1217);
    let mut checked = 0;
    while checked < 500 {
        let word = random_word(&mut rng);
        if word.is_empty() {
            continue;
        }
        let p = rng.gen_range(0..word.len());
        let up = word.increase_stabilize(p).unwrap();
        assert_eq!(up.decrease_stabilize(p).unwrap(), word, "{word} at {p}");
        checked += 1;
    }
}

proptest! {
    #[test]
    fn words_round_trip_through_display(
        pairs in proptest::collection::vec(
            (1u32..=5).prop_flat_map(|i| (Just(i), i + 1..=6u32)),
            0..6,
        )
    ) {
        let gens: Vec<Generator> = pairs
            .into_iter()
            .map(|(i, j)| Generator::new(i, j).unwrap())
            .collect();
        let word = ChordWord::new(6, gens).unwrap();
        let back = ChordWord::parse(&word.to_string()).unwrap();
        prop_assert_eq!(back, word);
    }

    #[test]
    fn names_ignore_where_the_circle_is_cut(
        pairs in proptest::collection::vec(
            (1u32..=5).prop_flat_map(|i| (Just(i), i + 1..=6u32)),
            1..6,
        ),
        rot in 0usize..12,
    ) {
        let gens: Vec<Generator> = pairs
            .into_iter()
            .map(|(i, j)| Generator::new(i, j).unwrap())
            .collect();
        let word = ChordWord::new(6, gens).unwrap();
        let name = word.read_name();
        let labels = name.labels().to_vec();
        prop_assume!(!labels.is_empty());
        let k = rot % labels.len();
        let rotated: Vec<u32> = labels[k..]
            .iter()
            .chain(&labels[..k])
            .copied()
            .collect();
        let a = ChordDiagram::from_labels(rotated).unwrap();
        let b = ChordDiagram::new(name).unwrap();
        prop_assert_eq!(a, b);
    }
}
