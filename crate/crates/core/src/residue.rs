//! The residue map `x -> a.x mod omega` and the local structure of the
//! Christoffel graph it defines: edge membership, sigma-paths and the
//! hypercube subgraphs hanging off every non-edge.
//!
//! Directions are 0-based throughout the library (`0..d`); the command
//! line and the JSON format use 1-based directions.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Normal vector `a`, its sum `s` and the width `omega`.
///
/// The graph `H_{a,omega}` contains the unit edge `(u, u + e_i)` exactly when
/// the residue of `u` is smaller than the residue of `u + e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalData {
    a: Vec<i64>,
    sum: i64,
    omega: i64,
}

impl NormalData {
    /// Validates a normal vector and an optional width (default: the sum).
    ///
    /// Requirements: `d >= 2`, positive coprime entries, `omega | s`,
    /// `0 < s/omega < d`, and `a_i < omega` whenever `omega < s`.
    pub fn new(a: &[i64], omega: Option<i64>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::DimensionTooSmall(a.len()));
        }
        if a.iter().any(|&x| x <= 0) {
            return Err(Error::NonPositiveEntry);
        }
        let g = a.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        let sum = checked_sum(a)?;
        let omega = omega.unwrap_or(sum);
        Self::check_width(a, sum, omega)?;
        Ok(NormalData {
            a: a.to_vec(),
            sum,
            omega,
        })
    }

    /// Parameters recovered by the converse analysis: `0 < a_i < omega`,
    /// `omega | s`, `0 < s/omega < d`, and `gcd(a, omega) = 1` so that the
    /// residue map is onto. The entries themselves need not be coprime
    /// (e.g. `a = (2,2,2)`, `omega = 3`).
    pub fn from_width_pattern(a: &[i64], omega: i64) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::DimensionTooSmall(a.len()));
        }
        if a.iter().any(|&x| x <= 0) {
            return Err(Error::NonPositiveEntry);
        }
        let sum = checked_sum(a)?;
        Self::check_width(a, sum, omega)?;
        for (index, &value) in a.iter().enumerate() {
            if value >= omega {
                return Err(Error::EntryNotBelowWidth {
                    index: index + 1,
                    value,
                    omega,
                });
            }
        }
        let g = a.iter().fold(omega, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::NotSurjective { omega, gcd: g });
        }
        Ok(NormalData {
            a: a.to_vec(),
            sum,
            omega,
        })
    }

    fn check_width(a: &[i64], sum: i64, omega: i64) -> Result<()> {
        if omega <= 0 || sum % omega != 0 {
            return Err(Error::WidthNotDivisor { omega, sum });
        }
        let ratio = sum / omega;
        if ratio <= 0 || ratio >= a.len() as i64 {
            return Err(Error::WidthRatioOutOfRange {
                ratio,
                dim: a.len(),
            });
        }
        if omega < sum {
            for (index, &value) in a.iter().enumerate() {
                if value >= omega {
                    return Err(Error::EntryNotBelowWidth {
                        index: index + 1,
                        value,
                        omega,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn sum(&self) -> i64 {
        self.sum
    }

    pub fn omega(&self) -> i64 {
        self.omega
    }

    /// `true` when `omega = s`, i.e. the graph is the ordinary `H_a`.
    pub fn is_standard(&self) -> bool {
        self.omega == self.sum
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            });
        }
        Ok(())
    }

    /// `a.x mod omega`, in `0..omega`.
    pub fn residue(&self, x: &[i64]) -> Result<i64> {
        self.check_dim(x.len())?;
        let mut acc: i128 = 0;
        for (&ai, &xi) in self.a.iter().zip(x) {
            acc = acc
                .checked_add(ai as i128 * xi as i128)
                .ok_or(Error::Overflow)?;
        }
        Ok(acc.rem_euclid(self.omega as i128) as i64)
    }

    /// Membership of the unit edge `(tail, tail + e_dir)` in `H_{a,omega}`:
    /// the residue of the tail lies in `[0, omega - a_dir - 1]`.
    pub fn edge_in_graph(&self, edge: &Edge) -> Result<bool> {
        self.check_dim(edge.tail.len())?;
        self.check_dir(edge.dir)?;
        let r = self.residue(&edge.tail)?;
        Ok(r < self.omega - self.a[edge.dir])
    }

    pub(crate) fn check_dir(&self, dir: usize) -> Result<()> {
        if dir >= self.dim() {
            return Err(Error::InvalidDirection {
                dir,
                dim: self.dim(),
            });
        }
        Ok(())
    }

    /// Position (0-based) of the single edge of a sigma-path that is not in
    /// `H_a`. The partial sums of `a_sigma` cut `[0, s)` into `d` consecutive
    /// half-open intervals; the missing edge is the one whose interval
    /// wraps past zero.
    pub fn missing_edge(&self, path: &SigmaPath) -> Result<usize> {
        if !self.is_standard() {
            return Err(Error::RequiresStandardWidth);
        }
        self.check_dim(path.start.len())?;
        let mut r = self.residue(&path.start)?;
        for (k, &dir) in path.perm.iter().enumerate() {
            let next = r + self.a[dir];
            if next >= self.sum {
                return Ok(k);
            }
            r = next;
        }
        // The intervals partition [0, s), so some step always wraps.
        unreachable!("sigma-path residues sum to s")
    }

    /// Deterministic `t` with `residue(t) = 1`: Bezout coefficients from an
    /// iterated extended gcd over `a_1, ..., a_d` (stopping as soon as the
    /// running gcd is 1), each reduced modulo omega to the representative of
    /// smallest absolute value, ties to the positive one.
    pub fn unit_translation(&self) -> Vec<i64> {
        let d = self.dim();
        let w = self.omega as i128;
        let mut coeffs = vec![0i128; d];
        coeffs[0] = 1;
        let mut g = self.a[0] as i128;
        for i in 1..d {
            if g == 1 {
                break;
            }
            let (h, x, y) = extended_gcd(g, self.a[i] as i128);
            for c in coeffs.iter_mut().take(i) {
                *c = (*c * x).rem_euclid(w);
            }
            coeffs[i] = y.rem_euclid(w);
            g = h;
        }
        if g != 1 {
            // gcd(a) > 1 but gcd(a, omega) = 1: finish against omega.
            let (_, x, _) = extended_gcd(g, self.omega as i128);
            for c in coeffs.iter_mut() {
                *c = (*c * x).rem_euclid(w);
            }
        }
        let t: Vec<i64> = coeffs
            .into_iter()
            .map(|c| {
                let mut r = c.rem_euclid(w);
                if 2 * r > w {
                    r -= w;
                }
                r as i64
            })
            .collect();
        debug_assert_eq!(self.residue(&t), Ok(1 % self.omega));
        t
    }
}

fn checked_sum(a: &[i64]) -> Result<i64> {
    a.iter()
        .try_fold(0i64, |acc, &x| acc.checked_add(x))
        .ok_or(Error::Overflow)
}

/// Iterative extended Euclid: returns `(g, x, y)` with `a x + b y = g >= 0`.
pub(crate) fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// A directed unit edge `(tail, tail + e_dir)` of the hypercubic lattice.
/// The head is never stored, so every edge is a unit step by construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: Vec<i64>,
    pub dir: usize,
}

impl Edge {
    pub fn new(tail: Vec<i64>, dir: usize) -> Self {
        Edge { tail, dir }
    }

    pub fn head(&self) -> Vec<i64> {
        let mut h = self.tail.clone();
        h[self.dir] += 1;
        h
    }

    pub fn dim(&self) -> usize {
        self.tail.len()
    }

    /// The edge `(-head, -tail)`.
    pub fn reversed(&self) -> Edge {
        let mut tail: Vec<i64> = self.tail.iter().map(|x| -x).collect();
        tail[self.dir] -= 1;
        Edge {
            tail,
            dir: self.dir,
        }
    }

    pub fn translated(&self, t: &[i64]) -> Edge {
        Edge {
            tail: self.tail.iter().zip(t).map(|(x, y)| x + y).collect(),
            dir: self.dir,
        }
    }
}

/// The path from `start` to `start + (1,...,1)` taking unit steps in the
/// order given by `perm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPath {
    start: Vec<i64>,
    perm: Vec<usize>,
}

impl SigmaPath {
    pub fn new(start: Vec<i64>, perm: Vec<usize>) -> Result<Self> {
        let d = perm.len();
        if start.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: start.len(),
            });
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || seen[p] {
                return Err(Error::InvalidPermutation(d));
            }
            seen[p] = true;
        }
        Ok(SigmaPath { start, perm })
    }

    pub fn start(&self) -> &[i64] {
        &self.start
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut at = self.start.clone();
        self.perm
            .iter()
            .map(|&dir| {
                let e = Edge::new(at.clone(), dir);
                at[dir] += 1;
                e
            })
            .collect()
    }
}

/// Edges of the hypercube graph from `base` to `base + sum_{i in dirs} e_i`:
/// the covering relations of the Boolean lattice on `dirs`, shifted to
/// `base`. There are `|R| 2^(|R|-1)` of them.
pub fn hypercube_edges(base: &[i64], dirs: &[usize]) -> Result<BTreeSet<Edge>> {
    let d = base.len();
    let mut dirs: Vec<usize> = dirs.to_vec();
    dirs.sort_unstable();
    dirs.dedup();
    if let Some(&bad) = dirs.iter().find(|&&i| i >= d) {
        return Err(Error::InvalidDirection { dir: bad, dim: d });
    }
    let r = dirs.len();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << r) {
        let mut corner = base.to_vec();
        for (bit, &i) in dirs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                corner[i] += 1;
            }
        }
        for (bit, &i) in dirs.iter().enumerate() {
            if mask >> bit & 1 == 0 {
                out.insert(Edge::new(corner.clone(), i));
            }
        }
    }
    Ok(out)
}
