//! ASCII and SVG pictures of a window of a cylindric diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::diagrams::{BottomKind, CylindricDiagram};
use crate::lattice::CylCell;

const CELL_PX: i64 = 36;

struct Grid {
    cells: BTreeMap<(i64, i64), CylCell>,
    rows: i64,
    b_min: i64,
    b_max: i64,
}

impl Grid {
    fn new(d: &CylindricDiagram, depth: usize) -> Self {
        let cells: BTreeMap<(i64, i64), CylCell> = d.window(depth).into_iter().map(|x| ((x.a(), x.b()), x)).collect();
        let b_min = cells.keys().map(|k| k.1).min().unwrap_or(1);
        let b_max = cells.keys().map(|k| k.1).max().unwrap_or(0);
        Grid {
            cells,
            rows: d.period().m(),
            b_min,
            b_max,
        }
    }

    fn has(&self, a: i64, b: i64) -> bool {
        self.cells.contains_key(&(a, b))
    }
}

fn mark(kind: Option<BottomKind>) -> char {
    match kind {
        Some(BottomKind::Max) => '^',
        Some(BottomKind::Min) => 'v',
        Some(BottomKind::Interior) => '.',
        None => ' ',
    }
}

fn bottom_kinds(d: &CylindricDiagram) -> BTreeMap<CylCell, BottomKind> {
    let bottom = d.bottom_set();
    bottom.cells().iter().copied().zip(bottom.kinds().iter().copied()).collect()
}

/// Rows `1..=m` of `window(depth)` with content residues. Bottom cells carry
/// `^` (maximal), `v` (minimal) or `.`; cells of `highlight` are prefixed by `#`.
pub fn render_ascii(d: &CylindricDiagram, depth: usize, highlight: &BTreeSet<CylCell>) -> String {
    let grid = Grid::new(d, depth);
    let kinds = bottom_kinds(d);
    let p = d.period();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "omega=({},-{}) lambda={:?} kappa={} depth={}",
        p.m(),
        p.ell(),
        d.lambda().parts(),
        d.kappa(),
        depth
    );
    let _ = writeln!(out, "columns {}..{}", grid.b_min, grid.b_max);
    for a in 1..=grid.rows + 1 {
        // border above row a
        let mut line = String::new();
        for b in grid.b_min..=grid.b_max + 1 {
            let corner = grid.has(a, b) || grid.has(a - 1, b) || grid.has(a, b - 1) || grid.has(a - 1, b - 1);
            line.push(if corner { '+' } else { ' ' });
            if b <= grid.b_max {
                line.push_str(if grid.has(a, b) || grid.has(a - 1, b) { "----" } else { "    " });
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if a > grid.rows {
            break;
        }
        let mut line = String::new();
        for b in grid.b_min..=grid.b_max + 1 {
            line.push(if grid.has(a, b) || grid.has(a, b - 1) { '|' } else { ' ' });
            if b > grid.b_max {
                continue;
            }
            match grid.cells.get(&(a, b)) {
                Some(&x) => {
                    let hl = if highlight.contains(&x) { '#' } else { ' ' };
                    let _ = write!(line, "{hl}{:>2}{}", d.content(x).expect("window cell"), mark(kinds.get(&x).copied()));
                }
                None => line.push_str("    "),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn fill(kind: Option<BottomKind>, highlighted: bool) -> &'static str {
    match (kind, highlighted) {
        (_, true) => "#f5b7b1",
        (Some(BottomKind::Max), _) => "#f7dc6f",
        (Some(BottomKind::Min), _) => "#aed6f1",
        (Some(BottomKind::Interior), _) => "#fcf3cf",
        (None, _) => "#ffffff",
    }
}

/// Deterministic SVG of the same picture.
pub fn render_svg(d: &CylindricDiagram, depth: usize, highlight: &BTreeSet<CylCell>) -> String {
    let grid = Grid::new(d, depth);
    let kinds = bottom_kinds(d);
    let width = (grid.b_max - grid.b_min + 1).max(0) * CELL_PX + 2;
    let height = grid.rows * CELL_PX + 2;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "<g font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">");
    for (&(a, b), &x) in &grid.cells {
        let px = (b - grid.b_min) * CELL_PX + 1;
        let py = (a - 1) * CELL_PX + 1;
        let kind = kinds.get(&x).copied();
        let _ = writeln!(
            out,
            "<rect x=\"{px}\" y=\"{py}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" fill=\"{}\" stroke=\"#000000\"/>",
            fill(kind, highlight.contains(&x))
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{}</text>",
            px + CELL_PX / 2,
            py + CELL_PX / 2 + 5,
            d.content(x).expect("window cell")
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
