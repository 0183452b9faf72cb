//! Standalone SVG heat map of sweep records.
//!
//! Rows are `(beta, mu, lambda)` conditions and columns are
//! `(network, strategy)` pairs, both in order of first appearance. Fill
//! runs green (lowest fraction in the whole sweep) through yellow to red
//! (highest).

use std::fmt::Write as _;
use std::io::{self, Write};

use super::SweepRecord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub fn hex(&self) -> String {
        format!("#{:02X}{:02X}{:02X}", self.0, self.1, self.2)
    }
}

pub const GREEN: Rgb = Rgb(0x63, 0xBE, 0x7B);
pub const YELLOW: Rgb = Rgb(0xFF, 0xEB, 0x84);
pub const RED: Rgb = Rgb(0xF8, 0x69, 0x6B);

fn lerp(a: Rgb, b: Rgb, t: f64) -> Rgb {
    let mix = |x: u8, y: u8| (x as f64 + (y as f64 - x as f64) * t).round() as u8;
    Rgb(mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

/// Color at position `t` in `[0, 1]` of the green-yellow-red scale.
fn scale(t: f64) -> Rgb {
    if t <= 0.5 {
        lerp(GREEN, YELLOW, t * 2.0)
    } else {
        lerp(YELLOW, RED, (t - 0.5) * 2.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeatCell {
    pub row: usize,
    pub col: usize,
    pub value: f64,
    pub fill: Rgb,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeatmapLayout {
    pub row_labels: Vec<String>,
    pub column_labels: Vec<String>,
    pub cells: Vec<HeatCell>,
    pub min: f64,
    pub max: f64,
}

fn index_of<T: PartialEq>(list: &mut Vec<T>, item: T) -> usize {
    match list.iter().position(|x| *x == item) {
        Some(i) => i,
        None => {
            list.push(item);
            list.len() - 1
        }
    }
}

/// Places every record on the grid and colors it against the global
/// min/max. When all values are equal every cell is green.
pub fn heatmap_layout(records: &[SweepRecord]) -> Result<HeatmapLayout> {
    if records.is_empty() {
        return Err(Error::invalid("heat map needs at least one record"));
    }
    let min = records
        .iter()
        .map(|r| r.avg_infected_fraction)
        .fold(f64::INFINITY, f64::min);
    let max = records
        .iter()
        .map(|r| r.avg_infected_fraction)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut cells = Vec::with_capacity(records.len());
    for r in records {
        let row = index_of(
            &mut rows,
            [r.beta.to_bits(), r.mu.to_bits(), r.lambda.to_bits()],
        );
        let col = index_of(&mut cols, (r.network.clone(), r.strategy));
        let t = if max > min {
            (r.avg_infected_fraction - min) / (max - min)
        } else {
            0.0
        };
        cells.push(HeatCell {
            row,
            col,
            value: r.avg_infected_fraction,
            fill: scale(t),
        });
    }
    let row_labels = rows
        .iter()
        .map(|k| {
            let [b, m, l] = k.map(f64::from_bits);
            format!("β={b:.2} μ={m:.2} λ={l:.2}")
        })
        .collect();
    let column_labels = cols.iter().map(|(n, s)| format!("{n} {s}")).collect();
    Ok(HeatmapLayout {
        row_labels,
        column_labels,
        cells,
        min,
        max,
    })
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

const CELL_W: usize = 64;
const CELL_H: usize = 20;
const LEFT: usize = 150;
const TOP: usize = 110;

pub fn render_svg(layout: &HeatmapLayout) -> String {
    let width = LEFT + CELL_W * layout.column_labels.len() + 10;
    let height = TOP + CELL_H * layout.row_labels.len() + 10;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="10">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );
    for (i, label) in layout.column_labels.iter().enumerate() {
        let x = LEFT + CELL_W * i + CELL_W / 2;
        let y = TOP - 6;
        let _ = writeln!(
            s,
            r#"<text class="col-label" x="{x}" y="{y}" transform="rotate(-60 {x} {y})">{}</text>"#,
            escape(label)
        );
    }
    for (j, label) in layout.row_labels.iter().enumerate() {
        let y = TOP + CELL_H * j + CELL_H / 2 + 4;
        let _ = writeln!(
            s,
            r#"<text class="row-label" x="{}" y="{y}" text-anchor="end">{}</text>"#,
            LEFT - 6,
            escape(label)
        );
    }
    for c in &layout.cells {
        let x = LEFT + CELL_W * c.col;
        let y = TOP + CELL_H * c.row;
        let _ = writeln!(
            s,
            r#"<rect class="cell" data-row="{}" data-col="{}" x="{x}" y="{y}" width="{CELL_W}" height="{CELL_H}" fill="{}" stroke="white"/>"#,
            c.row,
            c.col,
            c.fill.hex()
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{:.4}</text>"#,
            x + CELL_W / 2,
            y + CELL_H / 2 + 4,
            c.value
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_heatmap<W: Write>(records: &[SweepRecord], mut out: W) -> Result<()> {
    let svg = render_svg(&heatmap_layout(records)?);
    out.write_all(svg.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e: io::Error| Error::Data(format!("writing heat map: {e}")))
}
