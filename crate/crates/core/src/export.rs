//! JSON and DOT exports of edge sets. Directions are 1-based in both.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, LegSet, Window};
use crate::lattice::Lattice;
use crate::residue::{Edge, NormalData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub tail: Vec<i64>,
    pub dir: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum WindowJson {
    Box { lo: Vec<i64>, hi: Vec<i64> },
    Domain { basis: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub a: Vec<i64>,
    pub omega: i64,
    pub edges: Vec<EdgeJson>,
    pub window: WindowJson,
}

impl GraphJson {
    pub fn new(nd: &NormalData, set: &EdgeSet) -> Self {
        let window = match set.window() {
            Window::Box { lo, hi } => WindowJson::Box {
                lo: lo.clone(),
                hi: hi.clone(),
            },
            Window::Domain(k) => WindowJson::Domain {
                basis: k.basis().to_vec(),
            },
        };
        GraphJson {
            a: nd.a().to_vec(),
            omega: nd.omega(),
            edges: set
                .iter()
                .map(|e| EdgeJson {
                    tail: e.tail.clone(),
                    dir: e.dir + 1,
                })
                .collect(),
            window,
        }
    }

    /// Validates and rebuilds the normal data and the edge set.
    pub fn into_parts(self) -> Result<(NormalData, EdgeSet)> {
        let nd = NormalData::new(&self.a, Some(self.omega))
            .or_else(|_| NormalData::from_width_pattern(&self.a, self.omega))?;
        let window = match self.window {
            WindowJson::Box { lo, hi } => Window::new_box(lo, hi)?,
            WindowJson::Domain { basis } => {
                Window::Domain(Lattice::from_generators(nd.dim(), &basis)?)
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in self.edges {
            if e.dir == 0 || e.dir > nd.dim() {
                return Err(Error::InvalidDirection {
                    dir: e.dir,
                    dim: nd.dim(),
                });
            }
            edges.push(Edge::new(e.tail, e.dir - 1));
        }
        Ok((nd, EdgeSet::new(window, edges)?))
    }
}

pub fn to_json(nd: &NormalData, set: &EdgeSet) -> String {
    let mut s = serde_json::to_string_pretty(&GraphJson::new(nd, set))
        .expect("graph JSON serialization cannot fail");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<(NormalData, EdgeSet)> {
    let g: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    g.into_parts()
}

fn node(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("\"{}\"", parts.join(","))
}

/// Graphviz digraph; legs are red, body edges blue.
pub fn to_dot(nd: &NormalData, set: &EdgeSet) -> Result<String> {
    let q = LegSet::for_normal(nd)?;
    let mut out = String::from("digraph H {\n  node [shape=point];\n");
    for e in set.iter() {
        let color = if q.contains(e) { "red" } else { "blue" };
        out.push_str(&format!(
            "  {} -> {} [label={}, color={color}];\n",
            node(&e.tail),
            node(&e.head()),
            e.dir + 1
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
