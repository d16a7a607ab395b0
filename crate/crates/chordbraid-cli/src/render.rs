//! Deterministic SVG pictures of diagrams and words.
//!
//! Diagrams are drawn as a circle with equally spaced endpoints joined by
//! straight chords; words as horizontal strands with one vertical chord per
//! generator and dashed closure arcs on both ends. All coordinates are
//! written with two decimals so identical input yields identical bytes.

use std::fmt::Write as _;

use chordbraid::{ChordDiagram, ChordWord};

const CIRCLE_CENTER: f64 = 200.0;
const CIRCLE_RADIUS: f64 = 160.0;
const LABEL_RADIUS: f64 = 180.0;

/// Renders a chord diagram: boundary circle, one `chord` line per chord,
/// one `endpoint` dot and one `label` text per boundary point.
pub fn diagram_svg(diagram: &ChordDiagram) -> String {
    let labels = diagram.name().labels();
    let points = labels.len();
    let mut svg = String::new();
    svg.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
        "width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
    ));
    let _ = writeln!(
        svg,
        "  <circle class=\"boundary\" cx=\"{CIRCLE_CENTER:.2}\" cy=\"{CIRCLE_CENTER:.2}\" \
         r=\"{CIRCLE_RADIUS:.2}\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\"/>"
    );
    for (chord, (p, q)) in diagram.endpoints().iter().enumerate() {
        let (x1, y1) = point(*p, points, CIRCLE_RADIUS);
        let (x2, y2) = point(*q, points, CIRCLE_RADIUS);
        let _ = writeln!(
            svg,
            "  <line class=\"chord\" data-chord=\"{}\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" \
             x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#2060c0\" stroke-width=\"2\"/>",
            chord + 1
        );
    }
    for (k, &label) in labels.iter().enumerate() {
        let (x, y) = point(k, points, CIRCLE_RADIUS);
        let _ = writeln!(
            svg,
            "  <circle class=\"endpoint\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4.00\" \
             fill=\"#444444\"/>"
        );
        let (tx, ty) = point(k, points, LABEL_RADIUS);
        let _ = writeln!(
            svg,
            "  <text class=\"label\" x=\"{tx:.2}\" y=\"{ty:.2}\" font-size=\"13\" \
             text-anchor=\"middle\" dominant-baseline=\"middle\">{label}</text>"
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Position `k` of `points` equally spaced boundary points, starting at the
/// top and moving clockwise, at the given radius.
fn point(k: usize, points: usize, radius: f64) -> (f64, f64) {
    let angle = -std::f64::consts::FRAC_PI_2
        + 2.0 * std::f64::consts::PI * k as f64 / points.max(1) as f64;
    (
        CIRCLE_CENTER + radius * angle.cos(),
        CIRCLE_CENTER + radius * angle.sin(),
    )
}

/// Renders a word: one `strand` line per strand, one vertical `generator`
/// line per letter in word order, and dashed `closure` arcs joining the
/// strand ends around the outside.
pub fn word_svg(word: &ChordWord) -> String {
    let m = word.strand_count() as usize;
    let len = word.len();
    let x_left = 60.0;
    let x_right = x_left + 70.0 * (len as f64 + 1.0);
    let width = x_right + 60.0;
    let y_of = |s: usize| 50.0 + 50.0 * (s as f64 - 1.0);
    let height = y_of(m) + 50.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width:.2}\" height=\"{height:.2}\" viewBox=\"0 0 {width:.2} {height:.2}\">"
    );
    for s in 1..=m {
        let y = y_of(s);
        let _ = writeln!(
            svg,
            "  <line class=\"strand\" data-strand=\"{s}\" x1=\"{x_left:.2}\" y1=\"{y:.2}\" \
             x2=\"{x_right:.2}\" y2=\"{y:.2}\" stroke=\"#444444\" stroke-width=\"1.5\"/>"
        );
        let _ = writeln!(
            svg,
            "  <text class=\"strand-label\" x=\"{:.2}\" y=\"{y:.2}\" font-size=\"13\" \
             text-anchor=\"middle\" dominant-baseline=\"middle\">{s}</text>",
            x_left - 20.0
        );
    }
    for (k, g) in word.generators().iter().enumerate() {
        let x = x_left + 70.0 * (k as f64 + 1.0);
        let y1 = y_of(g.lower() as usize);
        let y2 = y_of(g.upper() as usize);
        let _ = writeln!(
            svg,
            "  <line class=\"generator\" data-position=\"{}\" x1=\"{x:.2}\" y1=\"{y1:.2}\" \
             x2=\"{x:.2}\" y2=\"{y2:.2}\" stroke=\"#2060c0\" stroke-width=\"2\"/>",
            k + 1
        );
        for y in [y1, y2] {
            let _ = writeln!(
                svg,
                "  <circle class=\"attachment\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3.50\" \
                 fill=\"#2060c0\"/>"
            );
        }
    }
    // Closure arcs: join the right end of each strand back to its left end
    // around the bottom, drawn as dashed cubic curves.
    for s in 1..=m {
        let y = y_of(s);
        let drop = height - y + 20.0 * s as f64;
        let _ = writeln!(
            svg,
            "  <path class=\"closure\" data-strand=\"{s}\" d=\"M {x_right:.2} {y:.2} \
             C {:.2} {:.2}, {:.2} {:.2}, {x_left:.2} {y:.2}\" fill=\"none\" \
             stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>",
            x_right + 30.0,
            y + drop,
            x_left - 30.0,
            y + drop,
        );
    }
    svg.push_str("</svg>\n");
    svg
}
