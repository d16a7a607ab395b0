//! Acceptance sweep: one test per primary criterion, so the test report
//! shows one pass/fail line for each. Criteria 1 through 8 drive the
//! library directly; criterion 9 exercises the installed binary.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chordbraid::braidindex::{compute_braid_index, three_braid_representatives};
use chordbraid::braidword::{braid_up, canonical_braiding, cyclically_equivalent};
use chordbraid::diagram::enumerate_diagrams;
use chordbraid::relations::{
    braid_context_relations, four_term_relations, is_one_block, one_block_form, quotient_report,
    rat, DiagramCombo,
};
use chordbraid::{ChordDiagram, ChordWord, Generator, Limits, Move, Strategy};

fn diagram(name: &str) -> ChordDiagram {
    ChordDiagram::parse(name).expect("valid name")
}

fn word(text: &str) -> ChordWord {
    ChordWord::parse(text).expect("valid word")
}

fn index_of(d: &ChordDiagram, strategy: Strategy, limits: &Limits) -> u32 {
    compute_braid_index(d, strategy, limits)
        .expect("index computable")
        .value
}

/// Criterion 1: the merge strategy agrees with the brute-force oracle on
/// every diagram with up to 4 chords and on 50 sampled 5-chord diagrams,
/// and reproduces the documented spot values.
#[test]
fn criterion_1_merge_strategy_matches_oracle() {
    let limits = Limits::default();
    for n in 0..=4 {
        for d in enumerate_diagrams(n, &limits).unwrap() {
            let merge = index_of(&d, Strategy::Merge, &limits);
            let oracle = index_of(&d, Strategy::Oracle, &limits);
            assert_eq!(merge, oracle, "strategies disagree on {d}");
        }
    }
    for (name, expected) in [
        ("1212", 2),
        ("123123", 2),
        ("1122", 3),
        ("1221", 3),
        ("121323", 3),
        ("12341342", 3),
        ("112233", 4),
        ("123321", 4),
    ] {
        let d = diagram(name);
        assert_eq!(index_of(&d, Strategy::Merge, &limits), expected, "merge on {name}");
        if d.chord_count() <= limits.oracle_max_chords {
            assert_eq!(index_of(&d, Strategy::Oracle, &limits), expected, "oracle on {name}");
        }
    }
    // Slow half: sampled 5-chord diagrams against the widened oracle.
    let slow = Limits::slow();
    let all = enumerate_diagrams(5, &slow).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce55);
    let picks = rand::seq::index::sample(&mut rng, all.len(), 50);
    for k in picks.iter() {
        let d = &all[k];
        let merge = index_of(d, Strategy::Merge, &slow);
        let oracle = index_of(d, Strategy::Oracle, &slow);
        assert_eq!(merge, oracle, "strategies disagree on {d}");
    }
}

/// Criterion 2: the parallel-set and chord-count bounds bracket the index,
/// and amalgamation preserves it, on every diagram with up to 5 chords.
#[test]
fn criterion_2_bounds_bracket_and_amalgamation_preserves() {
    let limits = Limits::default();
    for n in 0..=5 {
        for d in enumerate_diagrams(n, &limits).unwrap() {
            let (lo, hi) = d.index_bounds();
            let b = index_of(&d, Strategy::Merge, &limits);
            assert!(lo <= b && b <= hi, "{d}: index {b} outside {lo}..={hi}");
            let weighted = d.amalgamate().unwrap();
            assert_eq!(weighted.expand().unwrap(), d, "{d}: expand round trip");
            let base = index_of(weighted.base(), Strategy::Merge, &limits);
            assert_eq!(b, base, "{d}: amalgamation changed the index");
        }
    }
}

/// Criterion 3: the 3-braid uniqueness sweep to 6 chords finds no
/// violations, and the known two-class diagram is reproduced: "acaa" and
/// "acca" share a closure yet are not cyclically equivalent.
#[test]
fn criterion_3_three_braid_uniqueness_holds_to_six_chords() {
    let limits = Limits::default();
    let violations =
        chordbraid::braidindex::verify_three_braid_uniqueness(6, &limits).unwrap();
    assert!(violations.is_empty(), "violations: {violations:?}");

    let v = word("acaa");
    let w = word("acca");
    let d = v.close().unwrap();
    assert_eq!(d, w.close().unwrap(), "the flype pair must share a closure");
    assert!(!cyclically_equivalent(&v, &w), "acaa ~ acca must fail");
    let classes = three_braid_representatives(&d, &limits).unwrap();
    assert_eq!(classes.len(), 2, "expected a two-class diagram, got {}", classes.len());
}

/// Criterion 4: on every diagram with a special chord and up to 5 chords,
/// the single-descent predicate matches braid index 3 exactly.
#[test]
fn criterion_4_single_descent_characterizes_index_three() {
    let limits = Limits::default();
    let mut seen = 0usize;
    for n in 1..=5 {
        for d in enumerate_diagrams(n, &limits).unwrap() {
            if d.special_chords().is_empty() {
                continue;
            }
            seen += 1;
            let predicted = d.is_braid_index_three_special().unwrap();
            let b = index_of(&d, Strategy::Merge, &limits);
            assert_eq!(predicted, b == 3, "{d}: descent predicate vs index {b}");
        }
    }
    assert!(seen > 0, "the sweep must cover special-chord diagrams");
}

fn random_word(rng: &mut ChaCha8Rng) -> ChordWord {
    let m = rng.gen_range(2..=6u32);
    let len = rng.gen_range(0..=6usize);
    let mut gens = Vec::with_capacity(len);
    for _ in 0..len {
        let i = rng.gen_range(1..m);
        let j = rng.gen_range(i + 1..=m);
        gens.push(Generator::new(i, j).unwrap());
    }
    ChordWord::new(m, gens).unwrap()
}

/// Every word reachable from `w` by one move of any kind.
fn moved(w: &ChordWord) -> Vec<ChordWord> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        if let Ok(v) = (Move::Commute { position: p }).apply(w) {
            out.push(v);
        }
    }
    if !w.is_empty() {
        out.push(w.cyclic_permute().unwrap());
    }
    if w.strand_count() <= 12 {
        for p in 0..=w.len() {
            if let Ok(v) = w.increase_stabilize(p) {
                out.push(v);
            }
        }
    }
    for p in 0..w.len() {
        if let Ok(v) = w.decrease_stabilize(p) {
            out.push(v);
        }
    }
    for j in 2..=w.strand_count() {
        if let Ok(v) = w.strand_merge(j) {
            out.push(v);
        }
    }
    out.push(w.remove_empty_strands());
    out
}

/// Criterion 5: the move calculus preserves closures on 1,000 randomized
/// words, the canonical braiding round-trips exhaustively for up to 4
/// chords, and braiding up always lands on a canonical braiding.
#[test]
fn criterion_5_move_calculus_preserves_closures() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let w = random_word(&mut rng);
        let d = w.close().unwrap();
        for v in moved(&w) {
            assert_eq!(v.close().unwrap(), d, "move changed the closure of {w}");
        }
        let (up, trace) = braid_up(&w);
        assert!(
            up.is_canonical_braiding() || (up.is_empty() && up.strand_count() == 1),
            "braid_up({w}) = {up} is not canonical"
        );
        assert_eq!(up.close().unwrap(), d, "braid_up changed the closure of {w}");
        assert_eq!(trace.replay(&w).unwrap(), up, "trace replay of {w}");
    }
    let limits = Limits::default();
    for n in 0..=4 {
        for d in enumerate_diagrams(n, &limits).unwrap() {
            let w = canonical_braiding(d.name());
            if n > 0 {
                assert!(w.is_canonical_braiding(), "{d}: braiding not canonical");
            }
            assert_eq!(&w.read_name(), d.name(), "{d}: read-back differs");
            assert_eq!(w.close().unwrap(), d, "{d}: closure differs");
        }
    }
}

/// Criterion 6: the four-term span equals the braid-context span at 2, 3,
/// and 4 chords; the 2-chord system has rank 0; and the one-term-augmented
/// dimensions at 1..4 chords are 0, 1, 1, 3.
#[test]
fn criterion_6_relation_spans_cross_validate() {
    let limits = Limits::default();
    assert_eq!(four_term_relations(2, &limits).unwrap().rank(), 0);
    for n in 2..=4usize {
        let four = four_term_relations(n, &limits).unwrap();
        let braid = braid_context_relations(n, 2 * n as u32, &limits).unwrap();
        assert!(four.span_eq(&braid), "spans differ at {n} chords");
    }
    let mut dims = Vec::new();
    for n in 1..=4 {
        dims.push(quotient_report(n, None, true, &limits).unwrap().dimension);
    }
    assert_eq!(dims, [0, 1, 1, 3]);
}

/// Criterion 7: one-block form is sound for every 3-strand word of length
/// at most 4 (outputs one-block, closures equal modulo the four-term span),
/// and prefixing a top chord to any one-block word with up to 4 strands and
/// 3 letters yields a special chord.
#[test]
fn criterion_7_one_block_form_is_sound() {
    let limits = Limits::default();
    let three = [
        Generator::new(1, 2).unwrap(),
        Generator::new(2, 3).unwrap(),
        Generator::new(1, 3).unwrap(),
    ];
    for len in 0..=4usize {
        let four_term = four_term_relations(len, &limits).unwrap();
        let mut stack = vec![Vec::new()];
        while let Some(picked) = stack.pop() {
            if picked.len() == len {
                let w = ChordWord::new(3, picked).unwrap();
                let combo = one_block_form(&w, &limits).unwrap();
                for t in combo.terms().keys() {
                    assert!(is_one_block(t), "one_block_form({w}) kept {t}");
                }
                let mut row = DiagramCombo::zero();
                for (t, c) in combo.terms() {
                    row.add(t.close().unwrap().name().clone(), c.clone());
                }
                row.add(w.close().unwrap().name().clone(), rat(-1));
                assert!(
                    four_term.contains(&row),
                    "one_block_form({w}) moved the closure outside the four-term span"
                );
                continue;
            }
            for &g in &three {
                let mut next = picked.clone();
                next.push(g);
                stack.push(next);
            }
        }
    }
    for m in 2..=4u32 {
        let top: Vec<Generator> = (1..m).map(|i| Generator::new(i, m).unwrap()).collect();
        let mut stack = vec![Vec::new()];
        while let Some(picked) = stack.pop() {
            let w = ChordWord::new(m, picked.clone()).unwrap();
            assert!(
                chordbraid::relations::special_chord_property(&w).unwrap(),
                "special chord property failed on {w}"
            );
            if picked.len() == 3 {
                continue;
            }
            for &g in &top {
                let mut next = picked.clone();
                next.push(g);
                stack.push(next);
            }
        }
    }
}

/// Criterion 8: the literal reduction rule gets stuck at 3 on "1212" while
/// merge and oracle reach 2, and merge never exceeds literal below 5 chords.
#[test]
fn criterion_8_literal_rule_discrepancy_is_reproduced() {
    let limits = Limits::default();
    let d = diagram("1212");
    assert_eq!(index_of(&d, Strategy::Literal, &limits), 3);
    assert_eq!(index_of(&d, Strategy::Merge, &limits), 2);
    assert_eq!(index_of(&d, Strategy::Oracle, &limits), 2);
    for n in 0..=4 {
        for d in enumerate_diagrams(n, &limits).unwrap() {
            let merge = index_of(&d, Strategy::Merge, &limits);
            let literal = index_of(&d, Strategy::Literal, &limits);
            assert!(merge <= literal, "{d}: merge {merge} above literal {literal}");
        }
    }
}

fn run_binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn assert_well_formed_svg(svg: &str) {
    assert!(svg.starts_with("<svg "), "missing opening tag");
    assert!(svg.trim_end().ends_with("</svg>"), "missing closing tag");
    assert_eq!(svg.matches('<').count(), svg.matches('>').count());
    for line in svg.lines().skip(1) {
        let line = line.trim();
        if line == "</svg>" || line.is_empty() {
            continue;
        }
        assert!(
            line.ends_with("/>") || line.ends_with("</text>"),
            "element not closed: {line}"
        );
    }
}

/// Criterion 9: the catalog rebuild is byte-identical with the documented
/// spot values, and the renderer emits well-formed SVG with the right
/// element counts on all three documented examples.
#[test]
fn criterion_9_catalog_and_renderer_plumbing() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = |n: &str| dir.path().join(n);
    let as_str = |p: &std::path::PathBuf| p.to_str().expect("utf8 path").to_string();

    // Byte-identical rebuilds.
    let first = path("a.jsonl");
    let second = path("b.jsonl");
    for p in [&first, &second] {
        let out = run_binary(&["enumerate", "--chords", "3", "--catalog", &as_str(p)]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&first).unwrap();
    let bytes_b = std::fs::read(&second).unwrap();
    assert_eq!(bytes_a, bytes_b, "catalog rebuild differs");

    // Documented record counts and values at 1, 2, and 3 chords.
    let records = |n: &str| -> Vec<serde_json::Value> {
        let p = path(&format!("c{n}.jsonl"));
        let out = run_binary(&["enumerate", "--chords", n, "--catalog", &as_str(&p)]);
        assert!(out.status.success());
        std::fs::read_to_string(&p)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str(l).expect("json line"))
            .collect()
    };
    let one = records("1");
    assert_eq!(one.len(), 1);
    assert_eq!(one[0]["canonical_name"], "1,1");
    assert_eq!(one[0]["braid_index"], 2);
    let two = records("2");
    assert_eq!(two.len(), 2);
    let by_name = |rs: &[serde_json::Value], name: &str| -> u64 {
        rs.iter()
            .find(|r| r["canonical_name"] == name)
            .unwrap_or_else(|| panic!("no record {name}"))["braid_index"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(by_name(&two, "1,2,1,2"), 2);
    assert_eq!(by_name(&two, "1,1,2,2"), 3);
    let three = records("3");
    assert_eq!(three.len(), 5);
    assert_eq!(by_name(&three, "1,2,3,1,2,3"), 2);
    let names: Vec<String> = three
        .iter()
        .map(|r| r["canonical_name"].as_str().unwrap().to_string())
        .collect();
    let distinct: BTreeSet<&String> = names.iter().collect();
    assert_eq!(distinct.len(), names.len(), "duplicate catalog records");
    let sorted = {
        let mut s = names.clone();
        s.sort();
        s
    };
    assert_eq!(names, sorted, "catalog not sorted by name");

    // The three documented render examples.
    let svg_for = |input: &str, file: &str| -> String {
        let p = path(file);
        let out = run_binary(&["render", input, "--out", &as_str(&p)]);
        assert!(out.status.success());
        std::fs::read_to_string(&p).unwrap()
    };
    let svg = svg_for("1212", "a.svg");
    assert_well_formed_svg(&svg);
    assert_eq!(svg.matches("class=\"endpoint\"").count(), 4);
    assert_eq!(svg.matches("class=\"chord\"").count(), 2);

    let svg = svg_for("A(1,3)A(2,4)@4", "b.svg");
    assert_well_formed_svg(&svg);
    assert_eq!(svg.matches("class=\"strand\"").count(), 4);
    assert_eq!(svg.matches("class=\"generator\"").count(), 2);

    let svg = svg_for("12342143", "c.svg");
    assert_well_formed_svg(&svg);
    assert_eq!(svg.matches("class=\"endpoint\"").count(), 8);
    assert_eq!(svg.matches("class=\"chord\"").count(), 4);
}
