//! Deterministic SVG drawings. Coordinates are printed with three decimals
//! and primitives are emitted in sorted order, so equal inputs give
//! byte-identical files.
//!
//! For `d = 3` the projections `h_1, h_2, h_3` point at 90, 210 and 330
//! degrees.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, LegSet, Window};
use crate::residue::NormalData;
use crate::tiling::{plane_edges, plane_label, ChristoffelParallelogram, PlaneEdge};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Style {
    pub leg_color: String,
    pub body_color: String,
    /// `None` draws arrows for `d = 2` drawings and omits them for `d = 3`.
    pub arrows: Option<bool>,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            leg_color: "red".into(),
            body_color: "blue".into(),
            arrows: None,
        }
    }
}

const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// `m h_1 + n h_2` in the drawing plane.
pub fn plane_point(p: [i64; 2]) -> (f64, f64) {
    let (m, n) = (p[0] as f64, p[1] as f64);
    (-n * SQRT3_2, m - 0.5 * n)
}

#[derive(Default)]
struct Canvas {
    lines: Vec<(f64, f64, f64, f64, String, bool, bool)>,
    dots: Vec<(f64, f64, String)>,
    labels: Vec<(f64, f64, String)>,
    polygons: Vec<(Vec<(f64, f64)>, String)>,
    arrows: bool,
}

impl Canvas {
    fn line(&mut self, a: (f64, f64), b: (f64, f64), color: &str, leg: bool) {
        self.lines
            .push((a.0, a.1, b.0, b.1, color.to_string(), leg, false));
    }

    fn dashed(&mut self, a: (f64, f64), b: (f64, f64), color: &str) {
        self.lines
            .push((a.0, a.1, b.0, b.1, color.to_string(), false, true));
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let pts = self
            .lines
            .iter()
            .flat_map(|l| [(l.0, l.1), (l.2, l.3)])
            .chain(self.dots.iter().map(|d| (d.0, d.1)))
            .chain(self.labels.iter().map(|d| (d.0, d.1)))
            .chain(self.polygons.iter().flat_map(|p| p.0.iter().copied()));
        let mut b = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        for (x, y) in pts {
            b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
        }
        if !b.0.is_finite() {
            b = (0.0, 0.0, 0.0, 0.0);
        }
        b
    }

    fn finish(self, leg_color: &str, body_color: &str) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let px = |x: f64| (x - x0) * SCALE + MARGIN;
        let py = |y: f64| (y1 - y) * SCALE + MARGIN;
        let w = (x1 - x0) * SCALE + 2.0 * MARGIN;
        let h = (y1 - y0) * SCALE + 2.0 * MARGIN;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.3}\" height=\"{h:.3}\" viewBox=\"0 0 {w:.3} {h:.3}\">"
        );
        if self.arrows {
            s.push_str("<defs>\n");
            for (id, c) in [("leg", leg_color), ("body", body_color)] {
                let _ = writeln!(
                    s,
                    "<marker id=\"arrow-{id}\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{c}\"/></marker>"
                );
            }
            s.push_str("</defs>\n");
        }
        for (pts, color) in &self.polygons {
            let p: Vec<String> = pts
                .iter()
                .map(|&(x, y)| format!("{:.3},{:.3}", px(x), py(y)))
                .collect();
            let _ = writeln!(
                s,
                "<polygon points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-dasharray=\"4 3\"/>",
                p.join(" ")
            );
        }
        for (ax, ay, bx, by, color, leg, dashed) in &self.lines {
            let extra = if *dashed {
                " stroke-dasharray=\"4 3\"".to_string()
            } else if self.arrows {
                format!(
                    " marker-end=\"url(#arrow-{})\"",
                    if *leg { "leg" } else { "body" }
                )
            } else {
                String::new()
            };
            let _ = writeln!(
                s,
                "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"{color}\" stroke-width=\"2\"{extra}/>",
                px(*ax),
                py(*ay),
                px(*bx),
                py(*by)
            );
        }
        for (x, y, color) in &self.dots {
            let _ = writeln!(
                s,
                "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"3\" fill=\"{color}\"/>",
                px(*x),
                py(*y)
            );
        }
        for (x, y, text) in &self.labels {
            let _ = writeln!(
                s,
                "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"12\" font-family=\"sans-serif\">{text}</text>",
                px(*x) + 4.0,
                py(*y) - 4.0
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

/// A `d = 2` edge set on a grid, one unit per lattice step.
pub fn render_h_window(nd: &NormalData, set: &EdgeSet, style: &Style) -> Result<String> {
    if nd.dim() != 2 || set.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            found: set.dim(),
        });
    }
    let q = LegSet::for_normal(nd)?;
    let mut c = Canvas {
        arrows: style.arrows.unwrap_or(true),
        ..Canvas::default()
    };
    if let Window::Box { lo, hi } = set.window() {
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                let color = if nd.residue(&[x, y])? == 0 {
                    &style.leg_color
                } else {
                    "gray"
                };
                c.dots.push((x as f64, y as f64, color.to_string()));
            }
        }
    }
    for e in set.iter() {
        let h = e.head();
        let leg = q.contains(e);
        let color = if leg {
            &style.leg_color
        } else {
            &style.body_color
        };
        c.line(
            (e.tail[0] as f64, e.tail[1] as f64),
            (h[0] as f64, h[1] as f64),
            color,
            leg,
        );
    }
    Ok(c.finish(&style.leg_color, &style.body_color))
}

fn add_plane_edges(c: &mut Canvas, nd: &NormalData, edges: &[PlaneEdge], style: &Style) {
    for e in edges {
        let leg = plane_label(nd, e.tail) == 0 || plane_label(nd, e.head()) == 0;
        let color = if leg {
            &style.leg_color
        } else {
            &style.body_color
        };
        c.line(plane_point(e.tail), plane_point(e.head()), color, leg);
    }
}

/// `I_a` (or `flip(I_a)`) in `D` for `d = 3`, over the `(m, n)` ranges.
pub fn render_i_window(
    nd: &NormalData,
    flipped: bool,
    m_range: (i64, i64),
    n_range: (i64, i64),
    style: &Style,
) -> Result<String> {
    let inside = |p: [i64; 2]| {
        (m_range.0..=m_range.1).contains(&p[0]) && (n_range.0..=n_range.1).contains(&p[1])
    };
    let edges: Vec<PlaneEdge> = plane_edges(nd, flipped, m_range, n_range, inside)?
        .into_iter()
        .collect();
    let mut c = Canvas {
        arrows: style.arrows.unwrap_or(false),
        ..Canvas::default()
    };
    add_plane_edges(&mut c, nd, &edges, style);
    Ok(c.finish(&style.leg_color, &style.body_color))
}

/// The quotient graph on `omega` points placed on a circle, `0` at the top.
pub fn render_quotient(nd: &NormalData, style: &Style) -> String {
    let w = nd.omega();
    let radius = (w as f64 / 3.0).max(2.0);
    let pos = |k: i64| {
        let th = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * k as f64 / w as f64;
        (radius * th.cos(), radius * th.sin())
    };
    let mut c = Canvas {
        arrows: style.arrows.unwrap_or(true),
        ..Canvas::default()
    };
    for e in crate::tiling::quotient_graph(nd) {
        let leg = e.from == 0 || e.to == 0;
        let color = if leg {
            &style.leg_color
        } else {
            &style.body_color
        };
        c.line(pos(e.from), pos(e.to), color, leg);
    }
    for k in 0..w {
        let (x, y) = pos(k);
        c.dots.push((x, y, "black".into()));
        c.labels.push((x, y, k.to_string()));
    }
    c.finish(&style.leg_color, &style.body_color)
}

/// The parallelogram outline, its edges and the labels of its `s` points.
pub fn render_parallelogram(
    nd: &NormalData,
    par: &ChristoffelParallelogram,
    style: &Style,
) -> String {
    let mut c = Canvas {
        arrows: style.arrows.unwrap_or(false),
        ..Canvas::default()
    };
    let [p1, p2] = par.sides;
    c.polygons.push((
        vec![
            plane_point([0, 0]),
            plane_point(p1),
            plane_point(par.far_corner()),
            plane_point(p2),
        ],
        "gray".into(),
    ));
    let edges: Vec<PlaneEdge> = par.edges().into_iter().collect();
    add_plane_edges(&mut c, nd, &edges, style);
    for p in &par.points {
        let (x, y) = plane_point([p.m, p.n]);
        c.dots.push((x, y, "black".into()));
        c.labels.push((x, y, p.label.to_string()));
    }
    c.finish(&style.leg_color, &style.body_color)
}

/// The lattice path of a word (`a` right, `b` up) with the segment joining
/// its endpoints.
pub fn render_word_path(word: &Word, style: &Style) -> String {
    let mut c = Canvas {
        arrows: style.arrows.unwrap_or(true),
        ..Canvas::default()
    };
    let (mut x, mut y) = (0i64, 0i64);
    c.dots.push((0.0, 0.0, "black".into()));
    for ch in word.as_str().chars() {
        let (nx, ny) = if ch == 'a' { (x + 1, y) } else { (x, y + 1) };
        c.line(
            (x as f64, y as f64),
            (nx as f64, ny as f64),
            &style.body_color,
            false,
        );
        x = nx;
        y = ny;
        c.dots.push((x as f64, y as f64, "black".into()));
    }
    c.dashed((0.0, 0.0), (x as f64, y as f64), "gray");
    c.finish(&style.leg_color, &style.body_color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::window_edges;
    use crate::tiling::christoffel_parallelogram;
    use crate::words::christoffel_word;

    #[test]
    fn h_window_has_one_line_per_edge() {
        let nd = NormalData::new(&[2, 5], None).unwrap();
        let set = window_edges(&nd, &Window::centered(2, 2).unwrap()).unwrap();
        let svg = render_h_window(&nd, &set, &Style::default()).unwrap();
        assert_eq!(svg.matches("<line").count(), set.len());
        assert!(svg.contains("marker-end"));
        assert!(svg.contains("stroke=\"red\""));
        assert_eq!(svg, render_h_window(&nd, &set, &Style::default()).unwrap());
    }

    #[test]
    fn d3_drawings_omit_arrows_by_default() {
        let nd = NormalData::new(&[2, 3, 5], None).unwrap();
        let svg = render_i_window(&nd, false, (-2, 2), (-2, 2), &Style::default()).unwrap();
        assert!(!svg.contains("marker-end"));
        let par = christoffel_parallelogram(&nd).unwrap();
        let svg = render_parallelogram(&nd, &par, &Style::default());
        assert_eq!(svg.matches("<text").count(), 10);
        assert!(render_h_window(
            &nd,
            &crate::graph::fundamental_edges(&nd).unwrap(),
            &Style::default()
        )
        .is_err());
    }

    #[test]
    fn quotient_and_word_drawings() {
        let nd = NormalData::new(&[2, 5], None).unwrap();
        let svg = render_quotient(&nd, &Style::default());
        assert_eq!(svg.matches("<line").count(), 7);
        let w = christoffel_word(8, 5).unwrap();
        let svg = render_word_path(&w, &Style::default());
        assert_eq!(svg.matches("<line").count(), 14);
        assert!(svg.contains("stroke-dasharray"));
    }
}
