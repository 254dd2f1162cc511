//! Text renderings of Vogan diagrams: a character-grid picture and DOT.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::str::FromStr;

use crate::cartan::{Arrow, Edge, Series};
use crate::vogan::VoganDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Dot,
}

impl FromStr for RenderFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "dot" => Ok(RenderFormat::Dot),
            other => Err(format!("unknown render format {other:?}; use ascii or dot")),
        }
    }
}

pub fn render_diagram(vd: &VoganDiagram, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(vd),
        RenderFormat::Dot => render_dot(vd),
    }
}

const SLOT: usize = 6;

fn glyph(vd: &VoganDiagram, i: usize) -> String {
    format!("{}{i}", if vd.painted.contains(&i) { '●' } else { '○' })
}

/// Grid position `(row, column)` of each node; rows are node rows only.
fn layout(series: Series, rank: usize) -> Vec<(usize, usize)> {
    let mut pos = vec![(0, 0); rank + 1];
    match series {
        Series::A if rank == 1 => {
            pos[1] = (0, 1);
        }
        Series::A => {
            pos[0] = (0, (rank - 1) / 2);
            for i in 1..=rank {
                pos[i] = (1, i - 1);
            }
        }
        Series::B => {
            pos[0] = (0, 1);
            for i in 1..=rank {
                pos[i] = (1, i - 1);
            }
        }
        Series::C => {
            for (i, p) in pos.iter_mut().enumerate() {
                *p = (0, i);
            }
        }
        Series::D => {
            pos[0] = (0, 1);
            for i in 1..rank {
                pos[i] = (1, i - 1);
            }
            pos[rank] = (2, rank - 3);
        }
    }
    pos
}

struct Grid {
    cells: BTreeMap<(usize, usize), char>,
}

impl Grid {
    fn put(&mut self, y: usize, x: usize, c: char) {
        self.cells.insert((y, x), c);
    }
    fn text(&mut self, y: usize, x: usize, s: &str) {
        for (k, c) in s.chars().enumerate() {
            self.put(y, x + k, c);
        }
    }
    fn lines(&self) -> Vec<String> {
        let h = self.cells.keys().map(|k| k.0).max().map_or(0, |m| m + 1);
        (0..h)
            .map(|y| {
                let w = self.cells.keys().filter(|k| k.0 == y).map(|k| k.1 + 1).max().unwrap_or(0);
                let line: String = (0..w).map(|x| *self.cells.get(&(y, x)).unwrap_or(&' ')).collect();
                line.trim_end().to_string()
            })
            .collect()
    }
}

fn bond_chars(mult: u8) -> char {
    match mult {
        1 => '─',
        2 => '═',
        3 => '≡',
        _ => '≣',
    }
}

/// Arrowhead pointing from the long root toward the short one, seen from left to right.
fn arrowhead(e: &Edge, left: usize) -> Option<(char, char)> {
    let towards_right = match e.arrow {
        Arrow::None => return None,
        Arrow::Both => return Some(('<', '>')),
        Arrow::Forward => e.i == left,
        Arrow::Backward => e.j == left,
    };
    Some(if towards_right { ('═', '>') } else { ('<', '═') })
}

fn render_ascii(vd: &VoganDiagram) -> String {
    let d = &vd.diagram;
    let pos = layout(d.series, d.rank);
    let mut g = Grid { cells: BTreeMap::new() };
    let slot = if d.series == Series::A && d.rank == 1 { SLOT + 2 } else { SLOT };
    let y_of = |row: usize| 2 * row;
    let x_of = |col: usize| 2 + col * slot;
    let cycle = d.series == Series::A && d.rank >= 2;
    for i in 0..d.node_count() {
        let (r, c) = pos[i];
        if cycle && i == 0 {
            continue;
        }
        g.text(y_of(r), x_of(c), &glyph(vd, i));
    }
    for e in &d.edges {
        let (a, b) = (pos[e.i], pos[e.j]);
        if cycle && (e.i == 0 || e.j == 0) {
            continue;
        }
        if a.0 == b.0 {
            let (l, rgt) = if a.1 < b.1 { (e.i, e.j) } else { (e.j, e.i) };
            let x0 = x_of(pos[l].1) + glyph(vd, l).chars().count() + 1;
            let x1 = x_of(pos[rgt].1) - 1;
            let y = y_of(a.0);
            for x in x0..x1 {
                g.put(y, x, bond_chars(e.mult));
            }
            if let Some((lc, rc)) = arrowhead(e, l) {
                if lc == '<' {
                    g.put(y, x0, '<');
                }
                if rc == '>' {
                    g.put(y, x1 - 1, '>');
                }
            }
        } else {
            let top = if a.0 < b.0 { e.i } else { e.j };
            let x = x_of(pos[top].1) + 1;
            let y = y_of(pos[top].0) + 1;
            let ch = match e.arrow {
                Arrow::None => {
                    if e.mult == 1 {
                        '│'
                    } else {
                        '║'
                    }
                }
                Arrow::Forward | Arrow::Backward => {
                    let down = (e.arrow == Arrow::Forward) == (e.i == top);
                    if down {
                        'v'
                    } else {
                        '^'
                    }
                }
                Arrow::Both => '↕',
            };
            g.put(y, x, ch);
        }
    }
    if cycle {
        let left = x_of(0) + 1;
        let right = x_of(d.rank - 1) + 1;
        let label = glyph(vd, 0);
        let width = label.chars().count();
        let start = (left + right).div_ceil(2) - width / 2;
        for x in left..=right {
            g.put(0, x, '─');
        }
        g.put(0, left, '╭');
        g.put(0, right, '╮');
        if start > left + 2 && start + width + 2 < right {
            g.put(0, start - 1, ' ');
            g.put(0, start + width, ' ');
        }
        g.text(0, start, &label);
        g.put(1, left, '│');
        g.put(1, right, '│');
    }
    let mut out = format!("{}{}⁽¹⁾  automorphism {}  painted {:?}\n", d.series, d.rank, vd.automorphism.name, vd.painted_vec());
    for line in g.lines() {
        out.push_str(&line);
        out.push('\n');
    }
    for (i, j) in vd.orbits() {
        let _ = writeln!(out, "  orbit {i} <- - -> {j}");
    }
    out.push_str("  ● painted (non-compact)  ○ unpainted (compact)\n");
    out
}

fn render_dot(vd: &VoganDiagram) -> String {
    let d = &vd.diagram;
    let mut out = String::new();
    let _ = writeln!(out, "graph vogan {{");
    let _ = writeln!(out, "  label=\"{}{}(1), automorphism {}\";", d.series, d.rank, vd.automorphism.name);
    let _ = writeln!(out, "  node [shape=circle, width=0.35, fixedsize=true];");
    for i in 0..d.node_count() {
        if vd.painted.contains(&i) {
            let _ = writeln!(out, "  n{i} [label=\"{i}\", style=filled, fillcolor=black, fontcolor=white];");
        } else {
            let _ = writeln!(out, "  n{i} [label=\"{i}\"];");
        }
    }
    for e in &d.edges {
        let color = vec!["black"; usize::from(e.mult.min(4))].join(":");
        let dir = match e.arrow {
            Arrow::None => "none",
            Arrow::Forward => "forward",
            Arrow::Backward => "back",
            Arrow::Both => "both",
        };
        let _ = writeln!(out, "  n{} -- n{} [color=\"{color}\", dir={dir}];", e.i, e.j);
    }
    for (i, j) in vd.orbits() {
        let _ = writeln!(out, "  n{i} -- n{j} [style=dashed, dir=both, constraint=false];");
    }
    out.push_str("}\n");
    out
}
