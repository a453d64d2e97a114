//! Integer-strip drawings.
//!
//! Cell `(x, y)` with `x` in `[0, b)` shows `origin + x·a + y·b`. Since
//! `gcd(a, b) = 1` every integer of the band appears in exactly one cell, and
//! its coordinates are the UV representation of `n - origin`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::semigroup::gcd;

/// Above this many cells the SVG output drops the numbers.
pub const SVG_LABEL_LIMIT: usize = 2500;

const MARKERS: [char; 6] = ['*', '+', '#', '@', '%', '&'];
const OVERLAP: char = '!';
const COLORS: [&str; 6] = ["#f4a259", "#5b8e7d", "#8cb8d8", "#bc4b51", "#c3a6d8", "#f4e285"];
const OVERLAP_COLOR: &str = "#4a4a4a";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub name: String,
    pub elements: BTreeSet<i64>,
}

impl Layer {
    pub fn new(name: impl Into<String>, elements: impl IntoIterator<Item = i64>) -> Self {
        Layer { name: name.into(), elements: elements.into_iter().collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripSpec {
    pub a: i64,
    pub b: i64,
    pub origin: i64,
    /// Inclusive `(lo, hi)` range of rows; row `hi` is drawn on top.
    pub rows: (i64, i64),
    pub layers: Vec<Layer>,
}

impl StripSpec {
    pub fn validate(&self) -> Result<()> {
        if self.a < 1 || self.b < 1 {
            return Err(Error::BadStrip(format!("a = {}, b = {} must be positive", self.a, self.b)));
        }
        if gcd(self.a, self.b) != 1 {
            return Err(Error::BadStrip(format!("gcd({}, {}) != 1", self.a, self.b)));
        }
        if self.rows.0 > self.rows.1 {
            return Err(Error::BadStrip(format!("empty row range {}:{}", self.rows.0, self.rows.1)));
        }
        if (self.rows.1 - self.rows.0 + 1).saturating_mul(self.b) > 1_000_000 {
            return Err(Error::BadStrip("more than 10^6 cells".into()));
        }
        Ok(())
    }

    pub fn cell_value(&self, x: i64, y: i64) -> i64 {
        self.origin + x * self.a + y * self.b
    }

    /// Column and row of `n`, whether or not the row is inside the window.
    pub fn cell_of(&self, n: i64) -> (i64, i64) {
        let (a, b) = (self.a, self.b);
        let a_inv = (1..=b).find(|&t| (a * t) % b == 1 % b).unwrap_or(0);
        let d = n - self.origin;
        let x = (d.rem_euclid(b) * a_inv).rem_euclid(b);
        (x, (d - x * a) / b)
    }

    fn in_window(&self, y: i64) -> bool {
        self.rows.0 <= y && y <= self.rows.1
    }

    /// Elements of layer `name` that fall inside the drawn band.
    pub fn highlighted(&self, name: &str) -> BTreeSet<i64> {
        self.layers
            .iter()
            .filter(|l| l.name == name)
            .flat_map(|l| l.elements.iter().copied())
            .filter(|&n| self.in_window(self.cell_of(n).1))
            .collect()
    }

    /// Indices of the layers containing `n`.
    fn layers_of(&self, n: i64) -> Vec<usize> {
        (0..self.layers.len()).filter(|&i| self.layers[i].elements.contains(&n)).collect()
    }
}

/// The ground `{origin + (i·a mod b) : 0 <= i < b}`.
pub fn ground_layer(a: i64, b: i64, origin: i64) -> Layer {
    Layer::new("ground", (0..b).map(|i| origin + (i * a).rem_euclid(b)))
}

pub fn render_strip(spec: &StripSpec, format: Format) -> Result<String> {
    spec.validate()?;
    Ok(match format {
        Format::Text => render_text(spec),
        Format::Svg => render_svg(spec),
    })
}

fn render_text(spec: &StripSpec) -> String {
    let (lo, hi) = spec.rows;
    let width = [
        spec.cell_value(0, lo),
        spec.cell_value(spec.b - 1, hi),
        spec.cell_value(0, hi),
        spec.cell_value(spec.b - 1, lo),
    ]
    .iter()
    .map(|v| v.to_string().len())
    .max()
    .unwrap_or(1);
    let label = (lo..=hi).map(|y| y.to_string().len()).max().unwrap_or(1);

    let mut out = String::new();
    for y in (lo..=hi).rev() {
        let _ = write!(out, "{y:>label$} |");
        for x in 0..spec.b {
            let n = spec.cell_value(x, y);
            let mark = match spec.layers_of(n).as_slice() {
                [] => ' ',
                [i] => MARKERS[i % MARKERS.len()],
                _ => OVERLAP,
            };
            let _ = write!(out, " {n:>width$}{mark}");
        }
        out.push('\n');
    }
    for (i, layer) in spec.layers.iter().enumerate() {
        let _ = writeln!(out, "{} {}", MARKERS[i % MARKERS.len()], layer.name);
    }
    if spec.layers.len() > 1 {
        let _ = writeln!(out, "{OVERLAP} several layers");
    }
    out
}

fn render_svg(spec: &StripSpec) -> String {
    const CELL: i64 = 36;
    let (lo, hi) = spec.rows;
    let nrows = hi - lo + 1;
    let legend = spec.layers.len() as i64 + i64::from(spec.layers.len() > 1);
    let (w, h) = (spec.b * CELL, (nrows + legend) * CELL);
    let labels = (nrows * spec.b) as usize <= SVG_LABEL_LIMIT;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"monospace\" font-size=\"12\">"
    );
    for y in (lo..=hi).rev() {
        let top = (hi - y) * CELL;
        for x in 0..spec.b {
            let n = spec.cell_value(x, y);
            let fill = match spec.layers_of(n).as_slice() {
                [] => "#ffffff",
                [i] => COLORS[i % COLORS.len()],
                _ => OVERLAP_COLOR,
            };
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{top}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#999999\" data-n=\"{n}\"/>",
                x * CELL
            );
            if labels {
                let ink = if fill == OVERLAP_COLOR { "#ffffff" } else { "#000000" };
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"{ink}\">{n}</text>",
                    x * CELL + CELL / 2,
                    top + CELL / 2 + 4
                );
            }
        }
    }
    let mut entries: Vec<(&str, String)> =
        spec.layers.iter().enumerate().map(|(i, l)| (COLORS[i % COLORS.len()], xml_escape(&l.name))).collect();
    if spec.layers.len() > 1 {
        entries.push((OVERLAP_COLOR, "several layers".into()));
    }
    for (k, (color, name)) in entries.iter().enumerate() {
        let top = (nrows + k as i64) * CELL;
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"8\" fill=\"{color}\"/><text x=\"{}\" y=\"{}\">{name}</text>",
            CELL / 2,
            top + CELL / 2,
            CELL,
            top + CELL / 2 + 4
        );
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
