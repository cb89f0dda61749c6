//! Pictures of snake graphs: ASCII art and SVG.

use std::collections::BTreeSet;
use std::fmt::Write;

use snakefrac::{Edge, PerfectMatching, Point, SnakeGraph};

// each tile is 3 columns by 2 rows inside its borders
const CELL_W: i64 = 4;
const CELL_H: i64 = 3;

fn bounds(g: &SnakeGraph) -> (i64, i64) {
    let max_x = g.vertices().iter().map(|p| p.x).max().unwrap_or(0);
    let max_y = g.vertices().iter().map(|p| p.y).max().unwrap_or(0);
    (max_x, max_y)
}

/// Draws `g` on a character grid. Edges in `overlay` are drawn doubled:
/// `===` for horizontal, `#` for vertical.
pub fn render_ascii(g: &SnakeGraph, overlay: Option<&PerfectMatching>) -> String {
    let (max_x, max_y) = bounds(g);
    let width = (max_x * CELL_W + 1) as usize;
    let height = (max_y * CELL_H + 1) as usize;
    let mut grid = vec![vec![' '; width]; height];
    let bold: BTreeSet<Edge> = overlay.map(|m| m.edges().copied().collect()).unwrap_or_default();
    let at = |p: Point| ((max_y - p.y) * CELL_H) as usize;

    for e in g.edges() {
        let (a, b) = e.endpoints();
        let strong = bold.contains(e);
        if e.is_horizontal() {
            let row = at(a);
            let col = (a.x * CELL_W) as usize;
            for c in 1..CELL_W as usize {
                grid[row][col + c] = if strong { '=' } else { '-' };
            }
        } else {
            let col = (a.x * CELL_W) as usize;
            let top = at(b);
            for r in 1..CELL_H as usize {
                grid[top + r][col] = if strong { '#' } else { '|' };
            }
        }
        for p in [a, b] {
            grid[at(p)][(p.x * CELL_W) as usize] = '+';
        }
    }
    for t in g.tiles() {
        let label = t.label.to_string();
        let row = at(t.anchor) - CELL_H as usize + 1;
        let start = (t.anchor.x * CELL_W) as usize + 1 + (3usize.saturating_sub(label.len())) / 2;
        for (k, ch) in label.chars().enumerate() {
            grid[row][start + k] = ch;
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Tiles as unit squares, matching edges as thick segments.
pub fn render_svg(g: &SnakeGraph, overlay: Option<&PerfectMatching>) -> String {
    const SCALE: i64 = 40;
    const MARGIN: i64 = 10;
    let (max_x, max_y) = bounds(g);
    let (w, h) = (max_x * SCALE + 2 * MARGIN, max_y * SCALE + 2 * MARGIN);
    let sx = |p: Point| p.x * SCALE + MARGIN;
    let sy = |p: Point| (max_y - p.y) * SCALE + MARGIN;
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#).unwrap();
    for t in g.tiles() {
        let corner = Point::new(t.anchor.x, t.anchor.y + 1);
        writeln!(
            out,
            r##"  <rect x="{}" y="{}" width="{SCALE}" height="{SCALE}" fill="#f4f4f4" stroke="#888" stroke-width="1"/>"##,
            sx(corner),
            sy(corner)
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="14" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            sx(t.anchor) + SCALE / 2,
            sy(t.anchor) - SCALE / 2,
            t.label
        )
        .unwrap();
    }
    if let Some(m) = overlay {
        for e in m.edges() {
            let (a, b) = e.endpoints();
            writeln!(
                out,
                r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c00" stroke-width="5" stroke-linecap="round"/>"##,
                sx(a),
                sy(a),
                sx(b),
                sy(b)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
