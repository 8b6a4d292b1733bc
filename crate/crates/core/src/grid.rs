//! Text grids in the usual display convention: first axis horizontal,
//! origin bottom left, so the top row is `x_1 = r_1`. Tables of dimension
//! three or more are printed as one grid per value of the remaining
//! coordinates, each under a `(_, _, x_2, …)` header.

use std::fmt::Write;

use crate::cryptomorph::PointSet;
use crate::error::{Error, Result};
use crate::lattice::{Hypercuboid, Point, Width};
use crate::matricube::RankTable;

fn slices(width: &Width) -> Vec<Vec<usize>> {
    let rest = Width::new(width.entries().get(2..).unwrap_or(&[]).to_vec());
    match Hypercuboid::new(rest) {
        Ok(cube) => cube.points().map(|p| p.0).collect(),
        Err(_) => Vec::new(),
    }
}

fn render_cells(width: &Width, cell: impl Fn(&Point) -> String) -> String {
    let d = width.dim();
    if d == 0 {
        return format!("{}\n", cell(&Point::new(Vec::new())));
    }
    let (w, h) = (width.get(0), if d > 1 { width.get(1) } else { 0 });
    let mut out = String::new();
    for (k, tail) in slices(width).into_iter().enumerate() {
        if d > 2 {
            if k > 0 {
                out.push('\n');
            }
            let head: Vec<String> = ["_".to_string(), "_".to_string()]
                .into_iter()
                .chain(tail.iter().map(usize::to_string))
                .collect();
            writeln!(out, "({}):", head.join(", ")).expect("string write");
        }
        let at = |x: usize, y: usize| {
            let mut c = vec![x];
            if d > 1 {
                c.push(y);
            }
            c.extend(&tail);
            cell(&Point(c))
        };
        let cells: Vec<Vec<String>> = (0..=h)
            .rev()
            .map(|y| (0..=w).map(|x| at(x, y)).collect())
            .collect();
        let pad = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let row: Vec<String> = row.iter().map(|c| format!("{c:>pad$}")).collect();
            writeln!(out, "{}", row.join(" ")).expect("string write");
        }
    }
    out
}

/// Renders a table, one grid row per line.
pub fn render_table(t: &RankTable) -> String {
    render_cells(t.width(), |p| t.at(p).expect("in range").to_string())
}

/// Renders a point set: `x` on members, `.` elsewhere.
pub fn render_point_set(s: &PointSet) -> String {
    render_cells(s.width(), |p| {
        if s.contains(p) { "x" } else { "." }.to_string()
    })
}

/// Parses a two-dimensional grid written as displayed: whitespace-separated
/// integers, top row first, blank lines ignored.
pub fn parse_grid(text: &str) -> Result<RankTable> {
    let rows: Vec<Vec<i64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|v| {
                    v.parse()
                        .map_err(|_| Error::Malformed(format!("bad grid entry {v:?}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    RankTable::from_rows(&refs)
}
