//! Browser demo: SVG drawings of Christoffel graphs, their flips,
//! Christoffel parallelograms and word paths.
//!
//! The `*_svg` functions are plain Rust and return the SVG text or an error
//! message; the `#[wasm_bindgen]` wrappers only forward to them.

use christoffel::cli::parse_ints;
use christoffel::graph::{window_edges, LegSet, Window};
use christoffel::residue::NormalData;
use christoffel::svg::{
    render_h_window, render_i_window, render_parallelogram, render_word_path, Style,
};
use christoffel::tiling::christoffel_parallelogram;
use christoffel::words::{central_factorize, christoffel_word};
use wasm_bindgen::prelude::*;

/// Largest window radius and parameter accepted from the page.
const MAX_RADIUS: i64 = 8;
const MAX_SUM: i64 = 400;

fn normal(a: &str, w: &str) -> Result<NormalData, String> {
    let a = parse_ints(a).map_err(|e| e.to_string())?;
    let w = match w.trim() {
        "" => None,
        t => Some(t.parse::<i64>().map_err(|e| format!("width: {e}"))?),
    };
    let nd = NormalData::new(&a, w).map_err(|e| e.to_string())?;
    if nd.sum() > MAX_SUM {
        return Err(format!("sum of entries above {MAX_SUM}"));
    }
    Ok(nd)
}

/// `H` or `flip(H)` on the box `[-r, r]^d` for `d = 2`, or on the plane
/// window of the same radius for `d = 3`.
pub fn graph_svg(a: &str, w: &str, flipped: bool, r: i64) -> Result<String, String> {
    let nd = normal(a, w)?;
    if !(1..=MAX_RADIUS).contains(&r) {
        return Err(format!("radius must be in 1..={MAX_RADIUS}"));
    }
    let style = Style::default();
    match nd.dim() {
        2 => {
            let win = Window::centered(2, r).map_err(|e| e.to_string())?;
            let mut set = window_edges(&nd, &win).map_err(|e| e.to_string())?;
            if flipped {
                let q = LegSet::for_normal(&nd).map_err(|e| e.to_string())?;
                set = christoffel::graph::flip(&set, &q).map_err(|e| e.to_string())?;
            }
            render_h_window(&nd, &set, &style).map_err(|e| e.to_string())
        }
        3 => render_i_window(&nd, flipped, (-r, r), (-r, r), &style).map_err(|e| e.to_string()),
        d => Err(format!("drawings need d = 2 or 3, got {d}")),
    }
}

pub fn parallelogram_svg(a: &str) -> Result<String, String> {
    let nd = normal(a, "")?;
    let par = christoffel_parallelogram(&nd).map_err(|e| e.to_string())?;
    Ok(render_parallelogram(&nd, &par, &Style::default()))
}

/// The word, its central factor and the lattice path, as
/// `word\ncentral\n<svg...>`.
pub fn word_svg(p: i64, q: i64) -> Result<String, String> {
    if p + q > MAX_SUM {
        return Err(format!("p + q above {MAX_SUM}"));
    }
    let w = christoffel_word(p, q).map_err(|e| e.to_string())?;
    let central = match central_factorize(&w) {
        Ok((_, m, _)) => m.to_string(),
        Err(_) => String::new(),
    };
    Ok(format!(
        "{w}\n{central}\n{}",
        render_word_path(&w, &Style::default())
    ))
}

#[wasm_bindgen(js_name = graphSvg)]
pub fn graph_svg_js(a: &str, w: &str, flipped: bool, r: i32) -> Result<String, JsValue> {
    graph_svg(a, w, flipped, r.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = parallelogramSvg)]
pub fn parallelogram_svg_js(a: &str) -> Result<String, JsValue> {
    parallelogram_svg(a).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = wordSvg)]
pub fn word_svg_js(p: i32, q: i32) -> Result<String, JsValue> {
    word_svg(p.into(), q.into()).map_err(|e| JsValue::from_str(&e))
}
