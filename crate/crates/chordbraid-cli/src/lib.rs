//! Command line front end for the chordbraid library.
//!
//! Subcommands inspect diagrams, compute braid indices, rewrite words,
//! run the relation linear algebra, sweep verification checks, build
//! JSON-lines catalogs, and render SVG pictures. Every command honors
//! `--format text|json` and the optional config file named by the
//! `CHORDBRAID_CONFIG` environment variable.
//!
//! Exit codes: 0 for success, 1 for domain errors (and for `verify` runs
//! that find violations), 2 for usage errors.

mod catalog;
mod config;
mod render;
mod verify;

use std::path::PathBuf;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use chordbraid::braidindex::compute_braid_index;
use chordbraid::braidword::{canonical_braiding, cyclically_equivalent};
use chordbraid::diagram::enumerate_diagrams;
use chordbraid::relations::{
    four_term_rows, one_block_form, one_term_rows, quotient_report, RelationSystem, WordCombo,
};
use chordbraid::{ChordDiagram, ChordWord, Strategy};

pub use config::{Config, OutputFormat};

#[derive(Parser)]
#[command(
    name = "chordbraid",
    version,
    about = "Chord diagrams, their braidings, and braid-index combinatorics"
)]
struct Cli {
    /// Output format; a config file may set the default.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Literal,
    Merge,
    Oracle,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Literal => Strategy::Literal,
            StrategyArg::Merge => Strategy::Merge,
            StrategyArg::Oracle => Strategy::Oracle,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    /// Quotient dimensions.
    Dim,
    /// The reduced relation matrix.
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form, crossings, fans, bounds, and special chords.
    Info {
        /// Diagram name, digits ("1212") or comma form ("1,2,1,2").
        name: String,
    },
    /// The braid index of a diagram.
    BraidIndex {
        /// Diagram name.
        name: String,
        /// Search strategy.
        #[arg(long, value_enum, default_value_t = StrategyArg::Merge)]
        strategy: StrategyArg,
        /// Also print the witness word.
        #[arg(long)]
        witness: bool,
    },
    /// The diagram a word closes to.
    Close {
        /// Word, explicit ("A(1,2)A(1,3)@3") or letter form ("aba").
        word: String,
    },
    /// The canonical braiding read straight off a name.
    CanonicalBraiding {
        /// Diagram name.
        name: String,
    },
    /// Whether two words are cyclically equivalent.
    Equivalent {
        /// First word.
        first: String,
        /// Second word.
        second: String,
    },
    /// Comb a word: push ascending pairs apart modulo the relations.
    Comb {
        /// Word to comb.
        word: String,
    },
    /// Rewrite a word as a combination of one-block words.
    OneBlock {
        /// Word to rewrite.
        word: String,
    },
    /// Relation spans and quotient dimensions at a fixed chord count.
    Relations {
        /// Chord count.
        #[arg(long)]
        chords: usize,
        /// Also impose the one-term (isolated chord) relations.
        #[arg(long)]
        one_term: bool,
        /// Restrict attention to diagrams with braid index at most this.
        #[arg(long)]
        braid_cap: Option<u32>,
        /// What to print.
        #[arg(long, value_enum, default_value_t = EmitArg::Dim)]
        emit: EmitArg,
    },
    /// List the canonical diagrams with exactly the given chord count.
    Enumerate {
        /// Chord count.
        #[arg(long)]
        chords: usize,
        /// Write a JSON-lines catalog; with no value, use the configured
        /// catalog path.
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        catalog: Option<String>,
    },
    /// Re-check one structural fact across all small cases.
    Verify {
        /// Which fact to check.
        #[arg(value_parser = PossibleValuesParser::new(verify::CHECKS))]
        check: String,
        /// Widen or narrow the sweep; each check has its own default.
        #[arg(long)]
        max_chords: Option<usize>,
    },
    /// Draw a diagram or word as SVG.
    Render {
        /// Diagram name or word; anything containing letters is a word.
        input: String,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses the command line, loads the config, runs the command, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let cfg = match config::load() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let format = cli.format.or(cfg.format).unwrap_or(OutputFormat::Text);
    match execute(cli.command, format, &cfg) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

type CommandResult = Result<i32, Box<dyn std::error::Error>>;

fn execute(command: Command, format: OutputFormat, cfg: &Config) -> CommandResult {
    match command {
        Command::Info { name } => info(&name, format),
        Command::BraidIndex {
            name,
            strategy,
            witness,
        } => braid_index(&name, strategy, witness, format, cfg),
        Command::Close { word } => close(&word, format),
        Command::CanonicalBraiding { name } => braiding(&name, format),
        Command::Equivalent { first, second } => equivalent(&first, &second, format),
        Command::Comb { word } => comb(&word, format),
        Command::OneBlock { word } => one_block(&word, format, cfg),
        Command::Relations {
            chords,
            one_term,
            braid_cap,
            emit,
        } => relations(chords, one_term, braid_cap, emit, format, cfg),
        Command::Enumerate { chords, catalog } => enumerate(chords, catalog, format, cfg),
        Command::Verify { check, max_chords } => run_verify(&check, max_chords, format, cfg),
        Command::Render { input, out } => render_command(&input, &out, format),
    }
}

/// Prints `text` or `value` depending on the requested format.
fn emit(format: OutputFormat, text: &str, value: serde_json::Value) {
    match format {
        OutputFormat::Text => println!("{text}"),
        OutputFormat::Json => println!("{value}"),
    }
}

fn info(name: &str, format: OutputFormat) -> CommandResult {
    let d = ChordDiagram::parse(name)?;
    let crossings = d.crossing_graph();
    let fans = d.maximal_fans();
    let weighted = d.amalgamate()?;
    let parallel = d.max_parallel_set();
    let (lo, hi) = d.index_bounds();
    let specials = d.special_chords();
    let single_descent = if specials.is_empty() {
        None
    } else {
        Some(d.is_braid_index_three_special()?)
    };
    let mut text = format!(
        "name: {d}\nchords: {}\ncrossings: {}",
        d.chord_count(),
        join(crossings.iter().map(|(i, j)| format!("({i},{j})")), " ")
    );
    text += &format!(
        "\nfans: {}\namalgamated: {} weights {}",
        join(
            fans.iter().map(|f| format!("{{{}}}", join_u32(f, ","))),
            " "
        ),
        weighted.base(),
        join_u32(weighted.weights(), ","),
    );
    text += &format!(
        "\nparallel set: {}\nbounds: {lo}..={hi}\nspecial chords: {}",
        join_u32(&parallel, ","),
        if specials.is_empty() {
            "none".to_string()
        } else {
            join_u32(&specials, ",")
        },
    );
    if let Some(s) = single_descent {
        text += &format!("\nsingle descent: {s}");
    }
    let value = json!({
        "name": d.to_string(),
        "comma_name": d.name().comma_string(),
        "chords": d.chord_count(),
        "crossings": crossings,
        "crossing_count": crossings.len(),
        "fans": fans,
        "amalgamated_base": weighted.base().to_string(),
        "fan_profile": weighted.weights(),
        "parallel_set": parallel,
        "bounds": [lo, hi],
        "special_chords": specials,
        "single_descent": single_descent,
    });
    emit(format, &text, value);
    Ok(0)
}

fn braid_index(
    name: &str,
    strategy: StrategyArg,
    witness: bool,
    format: OutputFormat,
    cfg: &Config,
) -> CommandResult {
    let d = ChordDiagram::parse(name)?;
    let result = compute_braid_index(&d, strategy.into(), &cfg.limits)?;
    let mut text = format!("braid index: {} ({})", result.value, result.strategy);
    if witness {
        text += &format!("\nwitness: {}", result.witness);
    }
    text += &format!("\nlabelings examined: {}", result.labelings_examined);
    let value = json!({
        "name": d.to_string(),
        "value": result.value,
        "strategy": result.strategy.to_string(),
        "witness": result.witness.to_string(),
        "labelings_examined": result.labelings_examined,
    });
    emit(format, &text, value);
    Ok(0)
}

fn close(word: &str, format: OutputFormat) -> CommandResult {
    let w = ChordWord::parse(word)?;
    let d = w.close()?;
    let value = json!({
        "name": d.to_string(),
        "comma_name": d.name().comma_string(),
        "chords": d.chord_count(),
    });
    emit(format, &d.to_string(), value);
    Ok(0)
}

fn braiding(name: &str, format: OutputFormat) -> CommandResult {
    let d = ChordDiagram::parse(name)?;
    let w = canonical_braiding(d.name());
    let value = json!({
        "word": w.to_string(),
        "strands": w.strand_count(),
        "closes_to": d.to_string(),
    });
    emit(format, &w.to_string(), value);
    Ok(0)
}

fn equivalent(first: &str, second: &str, format: OutputFormat) -> CommandResult {
    let v = ChordWord::parse(first)?;
    let w = ChordWord::parse(second)?;
    let eq = cyclically_equivalent(&v, &w);
    emit(format, &eq.to_string(), json!({ "equivalent": eq }));
    Ok(0)
}

fn comb(word: &str, format: OutputFormat) -> CommandResult {
    let w = ChordWord::parse(word)?;
    let combo = chordbraid::relations::comb(&w);
    emit_combo(&combo, format);
    Ok(0)
}

fn one_block(word: &str, format: OutputFormat, cfg: &Config) -> CommandResult {
    let w = ChordWord::parse(word)?;
    let combo = one_block_form(&w, &cfg.limits)?;
    emit_combo(&combo, format);
    Ok(0)
}

fn emit_combo(combo: &WordCombo, format: OutputFormat) {
    let terms: Vec<serde_json::Value> = combo
        .terms()
        .iter()
        .map(|(t, c)| json!({ "word": t.to_string(), "coefficient": c.to_string() }))
        .collect();
    emit(format, &combo.to_string(), json!({ "terms": terms }));
}

fn relations(
    chords: usize,
    one_term: bool,
    braid_cap: Option<u32>,
    emit_arg: EmitArg,
    format: OutputFormat,
    cfg: &Config,
) -> CommandResult {
    if emit_arg == EmitArg::Matrix {
        if braid_cap.is_some() {
            return Err("--braid-cap applies to --emit dim only".into());
        }
        let mut rows = four_term_rows(chords, &cfg.limits)?;
        if one_term {
            rows.extend(one_term_rows(chords, &cfg.limits)?);
        }
        let mut system = RelationSystem::new();
        for row in rows {
            system.add_row(row);
        }
        let basis: Vec<String> = enumerate_diagrams(chords, &cfg.limits)?
            .iter()
            .map(|d| d.to_string())
            .collect();
        let mut text = format!("chords: {chords}\nrank: {}", system.rank());
        let mut json_rows = Vec::new();
        for row in system.echelon_rows() {
            text += &format!("\n{row}");
            let cols: Vec<serde_json::Value> = row
                .terms()
                .iter()
                .map(|(name, c)| json!([name.to_string(), c.to_string()]))
                .collect();
            json_rows.push(serde_json::Value::Array(cols));
        }
        let value = json!({
            "chords": chords,
            "with_one_term": one_term,
            "basis": basis,
            "rank": system.rank(),
            "rows": json_rows,
        });
        emit(format, &text, value);
        return Ok(0);
    }
    let report = quotient_report(chords, braid_cap, one_term, &cfg.limits)?;
    let mut text = format!(
        "chords: {}\ndiagrams: {}\nrelation rank: {}\ndimension: {}",
        report.chords, report.diagram_count, report.relation_rank, report.dimension
    );
    if let Some(cap) = report.braid_cap {
        text += &format!(
            "\nbraid cap: {cap}\nlow diagrams: {}\nlow image dimension: {}\n\
             induced relations: {}\nnot directly generated: {}",
            report.low_count,
            report.low_image_dimension,
            report.induced_relations,
            report.not_directly_generated
        );
    }
    let value = json!({
        "chords": report.chords,
        "diagrams": report.diagram_count,
        "relation_rank": report.relation_rank,
        "dimension": report.dimension,
        "with_one_term": report.with_one_term,
        "braid_cap": report.braid_cap,
        "low_count": report.low_count,
        "low_image_dimension": report.low_image_dimension,
        "induced_relations": report.induced_relations,
        "not_directly_generated": report.not_directly_generated,
    });
    emit(format, &text, value);
    Ok(0)
}

fn enumerate(
    chords: usize,
    catalog_flag: Option<String>,
    format: OutputFormat,
    cfg: &Config,
) -> CommandResult {
    let diagrams = enumerate_diagrams(chords, &cfg.limits)?;
    match catalog_flag {
        None => {
            let names: Vec<String> = diagrams.iter().map(|d| d.to_string()).collect();
            let mut text = names.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            text += &format!("total: {}", names.len());
            let value = json!({
                "chords": chords,
                "count": names.len(),
                "names": names,
            });
            emit(format, &text, value);
        }
        Some(raw) => {
            let path = if raw.is_empty() {
                cfg.catalog
                    .clone()
                    .ok_or("no catalog path given and none configured")?
            } else {
                PathBuf::from(raw)
            };
            let count = catalog::write_catalog(&path, &diagrams, &cfg.limits)?;
            let text = format!("wrote {count} records to {}", path.display());
            let value = json!({
                "chords": chords,
                "count": count,
                "path": path.display().to_string(),
            });
            emit(format, &text, value);
        }
    }
    Ok(0)
}

fn run_verify(
    check: &str,
    max_chords: Option<usize>,
    format: OutputFormat,
    cfg: &Config,
) -> CommandResult {
    let outcome = verify::run_check(check, max_chords, &cfg.limits)?;
    let mut text = String::new();
    for v in &outcome.violations {
        text += &format!("violation: {v}\n");
    }
    text += &format!(
        "{}: {} cases, {} violations",
        outcome.check,
        outcome.cases,
        outcome.violations.len()
    );
    let value = json!({
        "check": outcome.check,
        "cases": outcome.cases,
        "violations": outcome.violations,
        "ok": outcome.violations.is_empty(),
    });
    emit(format, &text, value);
    Ok(if outcome.violations.is_empty() { 0 } else { 1 })
}

fn render_command(input: &str, out: &std::path::Path, format: OutputFormat) -> CommandResult {
    let is_word = input.contains('@') || input.chars().any(|c| c.is_ascii_alphabetic());
    let svg = if is_word {
        render::word_svg(&ChordWord::parse(input)?)
    } else {
        render::diagram_svg(&ChordDiagram::parse(input)?)
    };
    std::fs::write(out, &svg)?;
    let text = format!("wrote {}", out.display());
    let value = json!({
        "out": out.display().to_string(),
        "kind": if is_word { "word" } else { "diagram" },
        "bytes": svg.len(),
    });
    emit(format, &text, value);
    Ok(0)
}

fn join(items: impl Iterator<Item = String>, sep: &str) -> String {
    items.collect::<Vec<_>>().join(sep)
}

fn join_u32(items: &[u32], sep: &str) -> String {
    join(items.iter().map(|v| v.to_string()), sep)
}

#[cfg(test)]
mod tests {
    use chordbraid::{ChordDiagram, ChordWord};

    use crate::render::{diagram_svg, word_svg};

    fn count(hay: &str, needle: &str) -> usize {
        hay.matches(needle).count()
    }

    #[test]
    fn diagram_svg_has_one_element_per_feature() {
        let d = ChordDiagram::parse("12342143").unwrap();
        let svg = diagram_svg(&d);
        assert_eq!(count(&svg, "class=\"endpoint\""), 8);
        assert_eq!(count(&svg, "class=\"chord\""), 4);
        assert_eq!(count(&svg, "class=\"label\""), 8);
        assert_eq!(count(&svg, "class=\"boundary\""), 1);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn word_svg_has_one_element_per_feature() {
        let w = ChordWord::parse("A(1,3)A(2,4)@4").unwrap();
        let svg = word_svg(&w);
        assert_eq!(count(&svg, "class=\"strand\""), 4);
        assert_eq!(count(&svg, "class=\"generator\""), 2);
        assert_eq!(count(&svg, "class=\"closure\""), 4);
    }

    #[test]
    fn rendering_is_deterministic() {
        let d = ChordDiagram::parse("1212").unwrap();
        assert_eq!(diagram_svg(&d), diagram_svg(&d));
        let w = ChordWord::parse("aba").unwrap();
        assert_eq!(word_svg(&w), word_svg(&w));
    }
}
