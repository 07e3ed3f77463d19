//! ASCII and SVG pictures of Newton diagrams.
//!
//! In two variables `(0,0)` is at the origin, `(0,1)` points at angle pi/3
//! and `(1,0)` at 2pi/3, so levels stack upward.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::diagram::{neighbors, simplex_points, NewtonDiagram, Point, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

/// A 2D cell: a single sign, or several points of both signs merged by a projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    One(Sign),
    Mixed,
}

impl Cell {
    fn merge(self, s: Sign) -> Cell {
        match self {
            Cell::One(t) if t == s => self,
            _ => Cell::Mixed,
        }
    }

    fn glyph(self) -> char {
        match self {
            Cell::One(Sign::P) => 'P',
            Cell::One(Sign::N) => 'N',
            Cell::Mixed => '*',
        }
    }
}

struct Panel {
    title: String,
    /// Number of levels shown.
    d: i32,
    cells: BTreeMap<Point, Cell>,
}

fn panel_of_2d(title: &str, d: i32, pts: impl Iterator<Item = (Point, Sign)>) -> Panel {
    let mut cells: BTreeMap<Point, Cell> = BTreeMap::new();
    for (m, s) in pts {
        cells.entry(m).and_modify(|c| *c = c.merge(s)).or_insert(Cell::One(s));
    }
    Panel { title: title.into(), d, cells }
}

fn panels(diag: &NewtonDiagram) -> Result<Vec<Panel>> {
    let d = diag.d() as i32;
    let pts = diag.sorted_points();
    match diag.n() {
        2 => Ok(vec![panel_of_2d("diagram", d, pts.into_iter())]),
        3 => {
            let mut out = Vec::new();
            let names = ["(m1, m2+m3)", "(m1+m3, m2)", "(m1+m2, m3)"];
            for (j, name) in names.iter().enumerate() {
                let proj = pts.iter().map(|(m, s)| {
                    let p = match j {
                        0 => vec![m[0], m[1] + m[2]],
                        1 => vec![m[0] + m[2], m[1]],
                        _ => vec![m[0] + m[1], m[2]],
                    };
                    (p, *s)
                });
                out.push(panel_of_2d(&format!("projection {name}"), d, proj));
            }
            // level stacks: points with m1 + m2 + m3 = L drawn by (m1, m2)
            for level in 0..d {
                let slice = pts.iter().filter(|(m, _)| m.iter().sum::<i32>() == level).map(|(m, s)| (vec![m[0], m[1]], *s));
                out.push(panel_of_2d(&format!("level {level}"), level + 1, slice));
            }
            Ok(out)
        }
        n => Err(Error::Dimension(n)),
    }
}

pub fn render_diagram(diag: &NewtonDiagram, format: Format) -> Result<String> {
    let panels = panels(diag)?;
    Ok(match format {
        Format::Ascii => ascii(&panels, diag.n()),
        Format::Svg => svg(&panels, diag.n()),
    })
}

fn ascii(panels: &[Panel], n: usize) -> String {
    let mut out = String::new();
    for (i, p) in panels.iter().enumerate() {
        if n == 3 {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "{}:", p.title);
        }
        for level in (0..p.d).rev() {
            let mut row = " ".repeat((p.d - 1 - level) as usize);
            let cells: Vec<String> = (0..=level)
                .rev()
                .map(|a| {
                    let m = vec![a, level - a];
                    p.cells.get(&m).map_or('.', |c| c.glyph()).to_string()
                })
                .collect();
            row.push_str(&cells.join(" "));
            let _ = writeln!(out, "{}", row.trim_end());
        }
    }
    out
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn position(m: &[i32]) -> (f64, f64) {
    let (a, b) = (m[0] as f64, m[1] as f64);
    // adding 0.0 turns -0.0 into 0.0
    ((b - a) / 2.0 * UNIT + 0.0, -(a + b) * 3f64.sqrt() / 2.0 * UNIT + 0.0)
}

fn svg(panels: &[Panel], n: usize) -> String {
    let dmax = panels.iter().map(|p| p.d).max().unwrap_or(1).max(1);
    let width = (dmax as f64 - 1.0) * UNIT + 2.0 * MARGIN;
    let height = (dmax as f64 - 1.0) * 3f64.sqrt() / 2.0 * UNIT + 2.0 * MARGIN + 16.0;
    let total_w = width * panels.len() as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w:.1}" height="{height:.1}" viewBox="0 0 {total_w:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (i, p) in panels.iter().enumerate() {
        let ox = i as f64 * width + width / 2.0;
        let oy = height - MARGIN;
        let _ = writeln!(out, r#"<g class="panel" transform="translate({ox:.3},{oy:.3})">"#);
        if n == 3 {
            let ty = -(height - MARGIN - 12.0);
            let _ = writeln!(out, r#"<text x="0" y="{ty:.3}" font-size="11" text-anchor="middle">{}</text>"#, p.title);
        }
        // lattice sites
        for m in simplex_points(2, p.d - 1) {
            let (x, y) = position(&m);
            let _ = writeln!(out, r#"<circle class="site" cx="{x:.3}" cy="{y:.3}" r="1.5" fill="gray"/>"#);
        }
        // adjacency between nonzero neighbours
        for m in p.cells.keys() {
            for nb in neighbors(m) {
                if nb > *m && p.cells.contains_key(&nb) {
                    let (x1, y1) = position(m);
                    let (x2, y2) = position(&nb);
                    let _ = writeln!(
                        out,
                        r#"<line class="edge" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="1.5"/>"#
                    );
                }
            }
        }
        for (m, c) in &p.cells {
            let (x, y) = position(m);
            let (class, fill) = match c {
                Cell::One(Sign::P) => ("marker P", "white"),
                Cell::One(Sign::N) => ("marker N", "black"),
                Cell::Mixed => ("marker mixed", "gray"),
            };
            let _ = writeln!(
                out,
                r#"<circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="8" fill="{fill}" stroke="black" stroke-width="1.5"/>"#
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}
