//! Finite windows of Christoffel graphs and the three operations on edge
//! sets: flip (exchange the edges incident to zero), reversal and
//! translation.
//!
//! A [`Window::Domain`] edge set stands for a whole `K`-periodic edge set:
//! its tails are the coset representatives of `K`, and translation and
//! reversal reduce their results modulo `K`. Comparing two such sets is
//! therefore an exact comparison of the periodic sets on all of `Z^d`.
//! A [`Window::Box`] edge set holds the edges whose two endpoints lie in an
//! axis-aligned box; translation and reversal move the box along.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::lattice::{kernel_basis, Lattice};
use crate::residue::{Edge, NormalData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Window {
    /// Inclusive bounds `lo[i] <= x_i <= hi[i]` on both endpoints.
    Box { lo: Vec<i64>, hi: Vec<i64> },
    /// One fundamental domain of the lattice.
    Domain(Lattice),
}

impl Window {
    pub fn new_box(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                found: hi.len(),
            });
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::EmptyWindow);
        }
        Ok(Window::Box { lo, hi })
    }

    /// The box `[-r, r]^d`.
    pub fn centered(dim: usize, r: i64) -> Result<Self> {
        Self::new_box(vec![-r; dim], vec![r; dim])
    }

    pub fn dim(&self) -> usize {
        match self {
            Window::Box { lo, .. } => lo.len(),
            Window::Domain(k) => k.dim(),
        }
    }

    /// Canonical form of an edge in this window, if it belongs to it.
    fn normalize(&self, e: &Edge) -> Option<Edge> {
        match self {
            Window::Box { lo, hi } => {
                let inside =
                    e.tail
                        .iter()
                        .zip(lo)
                        .zip(hi)
                        .enumerate()
                        .all(|(i, ((&x, &l), &h))| {
                            let top = if i == e.dir { x + 1 } else { x };
                            x >= l && top <= h
                        });
                inside.then(|| e.clone())
            }
            Window::Domain(k) => Some(Edge::new(k.reduce(&e.tail), e.dir)),
        }
    }

    /// Every lattice edge of `E_d` in the window.
    pub fn all_edges(&self) -> BTreeSet<Edge> {
        let d = self.dim();
        let tails: Vec<Vec<i64>> = match self {
            Window::Box { lo, hi } => lo
                .iter()
                .zip(hi)
                .map(|(&l, &h)| l..=h)
                .multi_cartesian_product()
                .collect(),
            Window::Domain(k) => k.coset_representatives(),
        };
        let mut out = BTreeSet::new();
        for u in tails {
            for i in 0..d {
                let e = Edge::new(u.clone(), i);
                if let Some(e) = self.normalize(&e) {
                    out.insert(e);
                }
            }
        }
        out
    }

    fn translated(&self, t: &[i64]) -> Window {
        match self {
            Window::Box { lo, hi } => Window::Box {
                lo: lo.iter().zip(t).map(|(x, y)| x + y).collect(),
                hi: hi.iter().zip(t).map(|(x, y)| x + y).collect(),
            },
            Window::Domain(_) => self.clone(),
        }
    }

    fn reversed(&self) -> Window {
        match self {
            Window::Box { lo, hi } => Window::Box {
                lo: hi.iter().map(|x| -x).collect(),
                hi: lo.iter().map(|x| -x).collect(),
            },
            Window::Domain(_) => self.clone(),
        }
    }
}

/// A finite set of unit edges together with the window it was taken over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    edges: BTreeSet<Edge>,
    window: Window,
}

impl EdgeSet {
    /// Builds an edge set, normalizing each edge into the window; edges
    /// outside a box window are rejected.
    pub fn new(window: Window, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let d = window.dim();
        let mut set = BTreeSet::new();
        for e in edges {
            if e.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: e.dim(),
                });
            }
            if e.dir >= d {
                return Err(Error::InvalidDirection { dir: e.dir, dim: d });
            }
            let n = window
                .normalize(&e)
                .ok_or_else(|| Error::WindowMismatch(format!("edge {e:?} outside window")))?;
            set.insert(n);
        }
        Ok(EdgeSet { edges: set, window })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.window.dim()
    }

    /// Membership; for a domain window the edge is first reduced mod `K`.
    pub fn contains(&self, e: &Edge) -> bool {
        self.window
            .normalize(e)
            .is_some_and(|n| self.edges.contains(&n))
    }

    /// Number of edges in each direction.
    pub fn count_by_direction(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dim()];
        for e in &self.edges {
            counts[e.dir] += 1;
        }
        counts
    }

    /// The edges of `E_d` in the window that are not in the set.
    pub fn complement(&self) -> EdgeSet {
        let edges = self.window.all_edges();
        EdgeSet {
            edges: edges.difference(&self.edges).cloned().collect(),
            window: self.window.clone(),
        }
    }

    fn with_edges(&self, edges: BTreeSet<Edge>) -> EdgeSet {
        EdgeSet {
            edges,
            window: self.window.clone(),
        }
    }
}

/// The edges incident to zero modulo `K`: `(u, v)` with `u in K` or `v in K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegSet {
    kernel: Lattice,
}

impl LegSet {
    pub fn new(kernel: Lattice) -> Self {
        LegSet { kernel }
    }

    /// Legs of `H_{a,omega}`: the kernel is that of the residue map.
    pub fn for_normal(nd: &NormalData) -> Result<Self> {
        Ok(LegSet::new(kernel_basis(nd)?))
    }

    pub fn kernel(&self) -> &Lattice {
        &self.kernel
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.kernel.contains(&e.tail) || self.kernel.contains(&e.head())
    }

    /// `Q` restricted to a window.
    pub fn edges_in(&self, window: &Window) -> Result<BTreeSet<Edge>> {
        if window.dim() != self.kernel.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.kernel.dim(),
                found: window.dim(),
            });
        }
        match window {
            Window::Domain(k) => {
                if k != &self.kernel {
                    return Err(Error::WindowMismatch(
                        "domain lattice differs from the leg lattice".into(),
                    ));
                }
                let d = k.dim();
                let mut out = BTreeSet::new();
                for i in 0..d {
                    out.insert(Edge::new(vec![0; d], i));
                    let mut back = vec![0; d];
                    back[i] = -1;
                    out.insert(Edge::new(k.reduce(&back), i));
                }
                Ok(out)
            }
            Window::Box { .. } => Ok(window
                .all_edges()
                .into_iter()
                .filter(|e| self.contains(e))
                .collect()),
        }
    }
}

/// All edges of `H_{a,omega}` in the window. A domain window must use a
/// lattice on which the residue map vanishes.
pub fn window_edges(nd: &NormalData, window: &Window) -> Result<EdgeSet> {
    nd.check_dim(window.dim())?;
    if let Window::Domain(k) = window {
        for row in k.basis() {
            if nd.residue(row)? != 0 {
                return Err(Error::NotPeriodic);
            }
        }
    }
    let mut edges = BTreeSet::new();
    for e in window.all_edges() {
        if nd.edge_in_graph(&e)? {
            edges.insert(e);
        }
    }
    Ok(EdgeSet {
        edges,
        window: window.clone(),
    })
}

/// `H_{a,omega}` over one fundamental domain of its kernel.
pub fn fundamental_edges(nd: &NormalData) -> Result<EdgeSet> {
    window_edges(nd, &Window::Domain(kernel_basis(nd)?))
}

/// `X -> (X \ Q) u (Q \ X)`.
pub fn flip(x: &EdgeSet, q: &LegSet) -> Result<EdgeSet> {
    let legs = q.edges_in(&x.window)?;
    let edges = x.edges.symmetric_difference(&legs).cloned().collect();
    Ok(x.with_edges(edges))
}

/// `X \ Q`.
pub fn body(x: &EdgeSet, q: &LegSet) -> EdgeSet {
    x.with_edges(x.edges.iter().filter(|e| !q.contains(e)).cloned().collect())
}

/// `X n Q`.
pub fn legs(x: &EdgeSet, q: &LegSet) -> EdgeSet {
    x.with_edges(x.edges.iter().filter(|e| q.contains(e)).cloned().collect())
}

/// `-X = {(-v, -u)}`.
pub fn reverse(x: &EdgeSet) -> EdgeSet {
    let window = x.window.reversed();
    let edges = x
        .edges
        .iter()
        .map(|e| {
            window
                .normalize(&e.reversed())
                .expect("reversal maps the window onto its reverse")
        })
        .collect();
    EdgeSet { edges, window }
}

/// `X + t`.
pub fn translate(x: &EdgeSet, t: &[i64]) -> Result<EdgeSet> {
    if t.len() != x.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: t.len(),
        });
    }
    let window = x.window.translated(t);
    let edges = x
        .edges
        .iter()
        .map(|e| {
            window
                .normalize(&e.translated(t))
                .expect("translation maps the window onto its translate")
        })
        .collect();
    Ok(EdgeSet { edges, window })
}

/// Checks `H + t = flip(H)` over a full fundamental domain for the given
/// witness `t`.
pub fn verify_flip_translate_with(nd: &NormalData, t: &[i64]) -> Result<bool> {
    let h = fundamental_edges(nd)?;
    let q = LegSet::for_normal(nd)?;
    Ok(translate(&h, t)? == flip(&h, &q)?)
}

/// Checks `H + t = flip(H)` with `t` the canonical unit translation, and
/// returns `t` together with the outcome.
pub fn verify_flip_translate(nd: &NormalData) -> Result<(Vec<i64>, bool)> {
    let t = nd.unit_translation();
    let ok = verify_flip_translate_with(nd, &t)?;
    Ok((t, ok))
}

/// Checks `-H = H + t` (standard width only).
pub fn verify_reversal_translate(nd: &NormalData) -> Result<bool> {
    if !nd.is_standard() {
        return Err(Error::RequiresStandardWidth);
    }
    let h = fundamental_edges(nd)?;
    let t = nd.unit_translation();
    Ok(reverse(&h) == translate(&h, &t)?)
}
