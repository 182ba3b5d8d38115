//! The converse direction: given a lattice `K` containing the diagonal and a
//! translation `t`, recover the unique `K`-periodic pattern `M` whose legs
//! are `{(u, u + e_i) : u in K}` and which satisfies `M + t = flip(M)`, and
//! identify it as a Christoffel graph of some width.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{flip, reverse, translate, window_edges, EdgeSet, LegSet, Window};
use crate::lattice::Lattice;
use crate::residue::{Edge, NormalData};

/// Data recovered from `(K, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConverseAnalysis {
    pub kernel: Lattice,
    pub t: Vec<i64>,
    /// Order of `t` in `Z^d / K`.
    pub omega: i64,
    pub b: Vec<i64>,
    pub a: Vec<i64>,
    pub q: i64,
    pub l: i64,
}

impl ConverseAnalysis {
    pub fn dim(&self) -> usize {
        self.b.len()
    }

    /// `H_{a,omega}` as normal data.
    pub fn normal_data(&self) -> Result<NormalData> {
        NormalData::from_width_pattern(&self.a, self.omega)
    }
}

/// Walks the orbit of `t` modulo `K` and finds, for each `i`, the unique
/// `0 < b_i < omega` with `e_i + b_i t in K`.
pub fn discover_b(kernel: &Lattice, t: &[i64]) -> Result<ConverseAnalysis> {
    let d = kernel.dim();
    if t.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: t.len(),
        });
    }
    if !kernel.contains(&vec![1; d]) {
        return Err(Error::DiagonalNotInLattice);
    }
    if kernel.contains(t) {
        return Err(Error::TrivialTranslation);
    }
    let omega = kernel.order_of(t);

    // orbit[k] = k t mod K
    let mut orbit = Vec::with_capacity(omega as usize);
    let mut cur = vec![0i64; d];
    for _ in 0..omega {
        orbit.push(cur.clone());
        let next: Vec<i64> = cur.iter().zip(t).map(|(x, y)| x + y).collect();
        cur = kernel.reduce(&next);
    }

    let mut b = Vec::with_capacity(d);
    for i in 0..d {
        // e_i + k t in K  <=>  k t = -e_i mod K
        let mut target = vec![0; d];
        target[i] = -1;
        let target = kernel.reduce(&target);
        let k = orbit
            .iter()
            .skip(1)
            .position(|p| *p == target)
            .ok_or(Error::NotGenerator { dir: i + 1 })?;
        b.push(k as i64 + 1);
    }

    let a: Vec<i64> = b.iter().map(|bi| omega - bi).collect();
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    // (1,...,1) in K forces omega | sum b; both divisions are exact.
    debug_assert!(sa % omega == 0 && sb % omega == 0);
    Ok(ConverseAnalysis {
        kernel: kernel.clone(),
        t: t.to_vec(),
        omega,
        b,
        a,
        q: sa / omega,
        l: sb / omega,
    })
}

/// `M = {(0, e_i) + k t : 0 <= k < b_i} + K` over one fundamental domain.
pub fn pattern_from_b(analysis: &ConverseAnalysis) -> Result<EdgeSet> {
    let d = analysis.dim();
    let k = &analysis.kernel;
    let mut edges = Vec::new();
    for i in 0..d {
        let mut tail = vec![0i64; d];
        for _ in 0..analysis.b[i] {
            edges.push(Edge::new(tail.clone(), i));
            let next: Vec<i64> = tail.iter().zip(&analysis.t).map(|(x, y)| x + y).collect();
            tail = k.reduce(&next);
        }
    }
    EdgeSet::new(Window::Domain(k.clone()), edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    /// `sum a_i = omega`: the pattern is `H_a`.
    ChristoffelGraph {
        a: Vec<i64>,
        omega: i64,
    },
    /// `sum b_i = omega`: the complement of the pattern is `-H_b`.
    ComplementOfReversal {
        b: Vec<i64>,
        omega: i64,
    },
    /// Neither extreme: the pattern is `H_{a,omega}` with `omega < sum a`.
    WidthGraph {
        a: Vec<i64>,
        omega: i64,
    },
    Inconsistent {
        reason: String,
    },
}

impl Classification {
    /// The width-graph parameters `(a, omega)` that every consistent
    /// classification also carries.
    pub fn width_graph(&self) -> Option<(Vec<i64>, i64)> {
        match self {
            Classification::ChristoffelGraph { a, omega }
            | Classification::WidthGraph { a, omega } => Some((a.clone(), *omega)),
            Classification::ComplementOfReversal { b, omega } => {
                Some((b.iter().map(|x| omega - x).collect(), *omega))
            }
            Classification::Inconsistent { .. } => None,
        }
    }

    /// Rebuilds the pattern over one fundamental domain of `kernel` from the
    /// classification alone.
    pub fn realize(&self, kernel: &Lattice) -> Result<EdgeSet> {
        let window = Window::Domain(kernel.clone());
        match self {
            Classification::ChristoffelGraph { a, omega }
            | Classification::WidthGraph { a, omega } => {
                window_edges(&NormalData::from_width_pattern(a, *omega)?, &window)
            }
            Classification::ComplementOfReversal { b, omega } => {
                let hb = window_edges(&NormalData::from_width_pattern(b, *omega)?, &window)?;
                Ok(reverse(&hb).complement())
            }
            Classification::Inconsistent { reason } => {
                Err(Error::NotChristoffelForm(reason.clone()))
            }
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::ChristoffelGraph { a, omega } => {
                write!(f, "christoffel a={} omega={omega}", fmt_vec(a))
            }
            Classification::ComplementOfReversal { b, omega } => {
                write!(f, "complement-of-reversal b={} omega={omega}", fmt_vec(b))
            }
            Classification::WidthGraph { a, omega } => {
                write!(f, "width-graph a={} omega={omega}", fmt_vec(a))
            }
            Classification::Inconsistent { reason } => write!(f, "inconsistent: {reason}"),
        }
    }
}

pub(crate) fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `q = 1` takes precedence, so for `d = 2` the answer is always a
/// Christoffel graph.
pub fn classify_pattern(analysis: &ConverseAnalysis) -> Classification {
    let omega = analysis.omega;
    if analysis.q == 1 {
        Classification::ChristoffelGraph {
            a: analysis.a.clone(),
            omega,
        }
    } else if analysis.l == 1 {
        Classification::ComplementOfReversal {
            b: analysis.b.clone(),
            omega,
        }
    } else {
        Classification::WidthGraph {
            a: analysis.a.clone(),
            omega,
        }
    }
}

/// [`discover_b`] followed by [`classify_pattern`]; a translation that does
/// not generate the quotient is reported as inconsistent.
pub fn classify_translation(kernel: &Lattice, t: &[i64]) -> Result<Classification> {
    match discover_b(kernel, t) {
        Ok(an) => Ok(classify_pattern(&an)),
        Err(Error::NotGenerator { dir }) => Ok(Classification::Inconsistent {
            reason: format!("no b_{dir}: t does not generate Z^d/K"),
        }),
        Err(e) => Err(e),
    }
}

/// Checks `M + t = flip(M)` exactly on the fundamental domain.
pub fn verify_pattern(analysis: &ConverseAnalysis, m: &EdgeSet) -> Result<bool> {
    let q = LegSet::new(analysis.kernel.clone());
    Ok(translate(m, &analysis.t)? == flip(m, &q)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PirilloSolution {
    /// Coset representative from the Hermite box.
    pub t: Vec<i64>,
    /// Shortest vector of the same coset (smallest l1 norm, then
    /// lexicographically largest), for display.
    pub t_short: Vec<i64>,
    pub analysis: ConverseAnalysis,
    pub classification: Classification,
}

/// Tries every nonzero coset representative as `t` and keeps the ones whose
/// reconstructed pattern satisfies `M + t = flip(M)`.
pub fn pirillo_search(kernel: &Lattice) -> Result<Vec<PirilloSolution>> {
    let d = kernel.dim();
    if !kernel.contains(&vec![1; d]) {
        return Err(Error::DiagonalNotInLattice);
    }
    let mut out = Vec::new();
    for t in kernel.coset_representatives() {
        if t.iter().all(|&c| c == 0) {
            continue;
        }
        let analysis = match discover_b(kernel, &t) {
            Ok(a) => a,
            Err(Error::NotGenerator { .. }) => continue,
            Err(e) => return Err(e),
        };
        let m = pattern_from_b(&analysis)?;
        if !verify_pattern(&analysis, &m)? {
            continue;
        }
        out.push(PirilloSolution {
            t_short: short_representative(kernel, &t),
            classification: classify_pattern(&analysis),
            t,
            analysis,
        });
    }
    Ok(out)
}

/// A vector of minimal l1 norm in `x + K`. Ties go to the lexicographically
/// largest vector.
pub fn short_representative(kernel: &Lattice, x: &[i64]) -> Vec<i64> {
    let d = kernel.dim();
    let target = kernel.reduce(x);
    // The HNF box representative bounds the search radius.
    let bound: i64 = target.iter().map(|c| c.abs()).sum();
    let mut best: Option<Vec<i64>> = None;
    for norm in 0..=bound {
        let mut found: Vec<Vec<i64>> = Vec::new();
        vectors_of_norm(d, norm, &mut Vec::new(), &mut |v| {
            if kernel.reduce(v) == target {
                found.push(v.to_vec());
            }
        });
        if let Some(v) = found.into_iter().max() {
            best = Some(v);
            break;
        }
    }
    best.unwrap_or(target)
}

fn vectors_of_norm(d: usize, norm: i64, prefix: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    let used: i64 = prefix.iter().map(|c| c.abs()).sum();
    let left = norm - used;
    if prefix.len() + 1 == d {
        for c in if left == 0 {
            vec![0]
        } else {
            vec![-left, left]
        } {
            prefix.push(c);
            f(prefix);
            prefix.pop();
        }
        return;
    }
    for c in -left..=left {
        prefix.push(c);
        vectors_of_norm(d, norm, prefix, f);
        prefix.pop();
    }
}
