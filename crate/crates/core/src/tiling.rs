//! The diagonal hyperplane `D = {x : sum x_i = 0}`: orthogonal projection,
//! point location in the tiling of `D` by projected hypercube faces, the
//! quotient graph on `Z/omega`, and Christoffel parallelograms for `d = 3`.
//!
//! For `d = 3` the lattice `pi(Z^3)` is written in coordinates `(m, n)` for
//! the point `m h_1 + n h_2`, so `h_3 = (-1, -1)`.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{hermite_normal_form, kernel_basis_projected};
use crate::rational::{self, Q};
use crate::residue::{NormalData, SigmaPath};

/// A point of `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPoint {
    coords: Vec<Q>,
}

impl DiagonalPoint {
    pub fn new(coords: Vec<Q>) -> Result<Self> {
        let s: Q = coords.iter().sum();
        if !s.is_zero() {
            return Err(Error::Parse(
                "coordinates of a point of D must sum to 0".into(),
            ));
        }
        Ok(DiagonalPoint { coords })
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }
}

/// `x - (sum x_i / d) (1, ..., 1)`.
pub fn project_pi(x: &[Q]) -> DiagonalPoint {
    let d = Q::from_integer(x.len().into());
    let mean: Q = x.iter().sum::<Q>() / d;
    DiagonalPoint {
        coords: x.iter().map(|c| c - &mean).collect(),
    }
}

/// The projection of the face of the unit cube at `base` spanned by every
/// direction except `omitted`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tile {
    pub base: Vec<i64>,
    pub omitted: usize,
}

impl Tile {
    pub fn spanning(&self) -> Vec<usize> {
        (0..self.base.len())
            .filter(|&j| j != self.omitted)
            .collect()
    }

    /// Coordinates of `x` in the tile: writing
    /// `x = base + sum_{j != i} lambda_j e_j + mu (1, ..., 1)` gives
    /// `mu = x_i - base_i` and `lambda_j = x_j - base_j - mu`.
    pub fn barycentric(&self, x: &[Q]) -> Vec<Q> {
        let i = self.omitted;
        let mu = &x[i] - rational::int(self.base[i]);
        self.spanning()
            .into_iter()
            .map(|j| &x[j] - rational::int(self.base[j]) - &mu)
            .collect()
    }

    /// Whether `pi(x)` lies in the closed tile.
    pub fn contains(&self, x: &[Q]) -> bool {
        self.barycentric(x).iter().all(rational::in_unit_interval)
    }

    /// Same tile up to a diagonal shift of the base.
    pub fn same_projection(&self, other: &Tile) -> bool {
        if self.omitted != other.omitted || self.base.len() != other.base.len() {
            return false;
        }
        let k = other.base[0] - self.base[0];
        self.base.iter().zip(&other.base).all(|(x, y)| y - x == k)
    }
}

/// Locates the tile of `pi(x)`: with `u = floor(x)` and `sigma` ordering the
/// fractional parts decreasingly, `x` lies in the simplex spanned by the
/// sigma-path from `u`, whose missing edge `(u', v')` names the tile at `v'`.
pub fn locate_tile(nd: &NormalData, x: &[Q]) -> Result<Tile> {
    nd.check_dim(x.len())?;
    if !nd.is_standard() {
        return Err(Error::RequiresStandardWidth);
    }
    let u = x
        .iter()
        .map(rational::floor_i64)
        .collect::<Result<Vec<_>>>()?;
    let fr: Vec<Q> = x.iter().map(rational::frac).collect();
    let mut perm: Vec<usize> = (0..x.len()).collect();
    perm.sort_by(|&i, &j| fr[j].cmp(&fr[i]));
    if perm.windows(2).any(|w| fr[w[0]] == fr[w[1]]) {
        return Err(Error::TileBoundary);
    }
    let path = SigmaPath::new(u, perm)?;
    let k = nd.missing_edge(&path)?;
    let e = &path.edges()[k];
    Ok(Tile {
        base: e.head(),
        omitted: e.dir,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuotientEdge {
    pub from: i64,
    pub to: i64,
    pub dir: usize,
}

/// `G_{a,omega} = {(k, k + a_i) : k + a_i < omega}`, ordered by direction
/// then by `k`.
pub fn quotient_graph(nd: &NormalData) -> Vec<QuotientEdge> {
    let w = nd.omega();
    let mut out = Vec::new();
    for (dir, &ai) in nd.a().iter().enumerate() {
        let ai = ai % w;
        for k in 0..w - ai {
            out.push(QuotientEdge {
                from: k,
                to: k + ai,
                dir,
            });
        }
    }
    out
}

/// Steps of `h_1, h_2, h_3` in `(m, n)` coordinates.
pub const PLANE_STEPS: [[i64; 2]; 3] = [[1, 0], [0, 1], [-1, -1]];

/// An edge of `I_a` from `tail` along `h_dir`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PlaneEdge {
    pub tail: [i64; 2],
    pub dir: usize,
}

impl PlaneEdge {
    pub fn head(&self) -> [i64; 2] {
        let s = PLANE_STEPS[self.dir];
        [self.tail[0] + s[0], self.tail[1] + s[1]]
    }

    pub fn translated(&self, t: [i64; 2]) -> PlaneEdge {
        PlaneEdge {
            tail: [self.tail[0] + t[0], self.tail[1] + t[1]],
            dir: self.dir,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LabeledPoint {
    pub m: i64,
    pub n: i64,
    pub label: i64,
}

/// Residue of the lattice point `m h_1 + n h_2`.
pub fn plane_label(nd: &NormalData, p: [i64; 2]) -> i64 {
    let a = nd.a();
    (a[0] as i128 * p[0] as i128 + a[1] as i128 * p[1] as i128).rem_euclid(nd.omega() as i128)
        as i64
}

/// Whether the plane edge belongs to `I_a`, or to `flip(I_a)` when `flipped`.
pub fn plane_edge_in_graph(nd: &NormalData, e: &PlaneEdge, flipped: bool) -> bool {
    let r = plane_label(nd, e.tail);
    let ai = nd.a()[e.dir];
    let present = r + ai < nd.omega();
    if !flipped {
        return present;
    }
    let leg = r == 0 || plane_label(nd, e.head()) == 0;
    present != leg
}

/// Edges of `I_a` (or `flip(I_a)`) whose endpoints both satisfy `keep`, with
/// tails in the given inclusive ranges.
pub fn plane_edges(
    nd: &NormalData,
    flipped: bool,
    m_range: (i64, i64),
    n_range: (i64, i64),
    keep: impl Fn([i64; 2]) -> bool,
) -> Result<BTreeSet<PlaneEdge>> {
    if nd.dim() != 3 {
        return Err(Error::UnsupportedDimension {
            expected: 3,
            found: nd.dim(),
        });
    }
    let mut out = BTreeSet::new();
    for m in m_range.0..=m_range.1 {
        for n in n_range.0..=n_range.1 {
            for dir in 0..3 {
                let e = PlaneEdge { tail: [m, n], dir };
                if keep(e.tail) && keep(e.head()) && plane_edge_in_graph(nd, &e, flipped) {
                    out.insert(e);
                }
            }
        }
    }
    Ok(out)
}

/// A fundamental domain of the projected kernel with `O` as a vertex and the
/// graph drawn inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChristoffelParallelogram {
    pub a: Vec<i64>,
    /// `P1 = (p, r)` and `P2 = (0, t)` in `(m, n)` coordinates.
    pub sides: [[i64; 2]; 2],
    /// The `s` points of the half-open parallelogram, by `(m, n)`.
    pub points: Vec<LabeledPoint>,
    /// Edges of `I_a` with both endpoints in the closed parallelogram and no
    /// endpoint labeled `0`.
    pub body: BTreeSet<PlaneEdge>,
    /// Edges of `I_a` in the closed parallelogram incident to a `0` label.
    pub legs: BTreeSet<PlaneEdge>,
}

impl ChristoffelParallelogram {
    /// `P1 + P2`.
    pub fn far_corner(&self) -> [i64; 2] {
        let [p1, p2] = self.sides;
        [p1[0] + p2[0], p1[1] + p2[1]]
    }

    /// Whether `(m, n)` lies in the closed parallelogram; with `half_open`
    /// the two sides not through `O` are excluded.
    pub fn contains(&self, q: [i64; 2], half_open: bool) -> bool {
        let [[p, r], [_, t]] = self.sides;
        // q = alpha P1 + beta P2 with alpha = m/p, beta = (p n - r m)/(p t)
        let am = q[0];
        let bn = p * q[1] - r * q[0];
        if half_open {
            (0..p).contains(&am) && (0..p * t).contains(&bn)
        } else {
            (0..=p).contains(&am) && (0..=p * t).contains(&bn)
        }
    }

    /// All edges, body and legs.
    pub fn edges(&self) -> BTreeSet<PlaneEdge> {
        self.body.union(&self.legs).cloned().collect()
    }

    /// Point reflection through the center: `x -> P1 + P2 - x`, which maps
    /// an edge `(x, x + h_i)` to `(c - x - h_i, c - x)`.
    pub fn reflect(&self, e: &PlaneEdge) -> PlaneEdge {
        let c = self.far_corner();
        let h = e.head();
        PlaneEdge {
            tail: [c[0] - h[0], c[1] - h[1]],
            dir: e.dir,
        }
    }

    /// Ranges for `m` and `n` that cover the closed parallelogram.
    pub fn bounding_ranges(&self) -> ((i64, i64), (i64, i64)) {
        let [p1, p2] = self.sides;
        let xs = [0, p1[0], p2[0], p1[0] + p2[0]];
        let ys = [0, p1[1], p2[1], p1[1] + p2[1]];
        (
            (*xs.iter().min().unwrap(), *xs.iter().max().unwrap()),
            (*ys.iter().min().unwrap(), *ys.iter().max().unwrap()),
        )
    }
}

/// Builds the parallelogram whose sides are the Hermite basis of the
/// projected kernel lattice.
pub fn christoffel_parallelogram(nd: &NormalData) -> Result<ChristoffelParallelogram> {
    if nd.dim() != 3 {
        return Err(Error::UnsupportedDimension {
            expected: 3,
            found: nd.dim(),
        });
    }
    if !nd.is_standard() {
        return Err(Error::RequiresStandardWidth);
    }
    let gens: Vec<Vec<i64>> = kernel_basis_projected(nd.a())?
        .iter()
        .map(|r| r.to_vec())
        .collect();
    let h = hermite_normal_form(&gens, 2)?;
    if h.len() != 2 {
        return Err(Error::RankDeficient);
    }
    let sides = [[h[0][0], h[0][1]], [h[1][0], h[1][1]]];
    let mut par = ChristoffelParallelogram {
        a: nd.a().to_vec(),
        sides,
        points: Vec::new(),
        body: BTreeSet::new(),
        legs: BTreeSet::new(),
    };
    let (mr, nr) = par.bounding_ranges();
    for m in mr.0..=mr.1 {
        for n in nr.0..=nr.1 {
            if par.contains([m, n], true) {
                par.points.push(LabeledPoint {
                    m,
                    n,
                    label: plane_label(nd, [m, n]),
                });
            }
        }
    }
    let edges = plane_edges(nd, false, mr, nr, |q| par.contains(q, false))?;
    for e in edges {
        if plane_label(nd, e.tail) == 0 || plane_label(nd, e.head()) == 0 {
            par.legs.insert(e);
        } else {
            par.body.insert(e);
        }
    }
    Ok(par)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fundamental_edges;
    use crate::rational::{int, parse};
    use proptest::prelude::*;

    fn q(s: &str) -> Q {
        parse(s).unwrap()
    }

    fn nd(a: &[i64]) -> NormalData {
        NormalData::new(a, None).unwrap()
    }

    #[test]
    fn projection_examples() {
        assert!(project_pi(&[int(1), int(1), int(1)])
            .coords()
            .iter()
            .all(|c| c.is_zero()));
        let d = 4;
        let mut total = vec![Q::zero(); d];
        for i in 0..d {
            let mut e = vec![int(0); d];
            e[i] = int(1);
            for (t, c) in total.iter_mut().zip(project_pi(&e).coords()) {
                *t += c;
            }
        }
        assert!(total.iter().all(|c| c.is_zero()));
        let x = vec![q("1/2"), q("-3"), q("7/5")];
        let y: Vec<Q> = x.iter().map(|c| c + q("5/7")).collect();
        assert_eq!(project_pi(&x), project_pi(&y));
        assert!(DiagonalPoint::new(vec![int(1), int(0)]).is_err());
    }

    #[test]
    fn locate_example() {
        let n = nd(&[2, 3, 5]);
        let x = vec![q("0.6"), q("0.2"), q("0")];
        let t = locate_tile(&n, &x).unwrap();
        assert_eq!(
            t,
            Tile {
                base: vec![1, 1, 1],
                omitted: 2
            }
        );
        assert!(t.contains(&x));
        assert_eq!(
            locate_tile(&n, &[int(1), int(0), int(0)]),
            Err(Error::TileBoundary)
        );
        let wide = NormalData::new(&[15, 11, 10], Some(18)).unwrap();
        assert_eq!(locate_tile(&wide, &x), Err(Error::RequiresStandardWidth));
    }

    #[test]
    fn quotient_examples() {
        let g = quotient_graph(&nd(&[2, 5]));
        let d0: Vec<(i64, i64)> = g
            .iter()
            .filter(|e| e.dir == 0)
            .map(|e| (e.from, e.to))
            .collect();
        let d1: Vec<(i64, i64)> = g
            .iter()
            .filter(|e| e.dir == 1)
            .map(|e| (e.from, e.to))
            .collect();
        assert_eq!(d0, vec![(0, 2), (1, 3), (2, 4), (3, 5), (4, 6)]);
        assert_eq!(d1, vec![(0, 5), (1, 6)]);
        assert_eq!(quotient_graph(&nd(&[2, 3, 5])).len(), 20);
    }

    #[test]
    fn quotient_is_residue_image_of_fundamental_domain() {
        for (a, w) in [
            (&[2, 3, 5][..], 10),
            (&[15, 11, 10], 18),
            (&[1, 2, 3, 4], 5),
        ] {
            let n = NormalData::new(a, Some(w)).unwrap();
            let img: BTreeSet<QuotientEdge> = fundamental_edges(&n)
                .unwrap()
                .iter()
                .map(|e| {
                    let r = n.residue(&e.tail).unwrap();
                    QuotientEdge {
                        from: r,
                        to: n.residue(&e.head()).unwrap(),
                        dir: e.dir,
                    }
                })
                .collect();
            let g: BTreeSet<QuotientEdge> = quotient_graph(&n).into_iter().collect();
            assert_eq!(img, g);
            assert_eq!(g.len() as i64, n.dim() as i64 * w - n.sum());
        }
    }

    #[test]
    fn parallelogram_2_3_5() {
        let p = christoffel_parallelogram(&nd(&[2, 3, 5])).unwrap();
        assert_eq!(p.points.len(), 10);
        let labels: BTreeSet<i64> = p.points.iter().map(|x| x.label).collect();
        assert_eq!(labels, (0..10).collect());
        for e in &p.body {
            assert!(p.body.contains(&p.reflect(e)));
        }
        assert!(christoffel_parallelogram(&nd(&[2, 5])).is_err());
    }

    #[test]
    fn parallelogram_flip_is_translate_and_reflection() {
        for a in [[2, 3, 5], [4, 6, 7], [3, 7, 8]] {
            let n = nd(&a);
            let p = christoffel_parallelogram(&n).unwrap();
            let s = n.sum() as usize;
            assert_eq!(p.points.len(), s);

            let t = n.unit_translation();
            let shift = [t[0] - t[2], t[1] - t[2]];
            assert_eq!(plane_label(&n, shift), 1);
            let inside = |q: [i64; 2]| p.contains([q[0] - shift[0], q[1] - shift[1]], false);
            let ((m0, m1), (n0, n1)) = p.bounding_ranges();
            let flipped = plane_edges(
                &n,
                true,
                (m0 + shift[0], m1 + shift[0]),
                (n0 + shift[1], n1 + shift[1]),
                inside,
            )
            .unwrap();
            let moved: BTreeSet<PlaneEdge> =
                p.edges().iter().map(|e| e.translated(shift)).collect();
            assert_eq!(flipped, moved, "a = {a:?}");

            let local_flip =
                plane_edges(&n, true, (m0, m1), (n0, n1), |q| p.contains(q, false)).unwrap();
            let reflected: BTreeSet<PlaneEdge> = p.edges().iter().map(|e| p.reflect(e)).collect();
            assert_eq!(local_flip, reflected, "a = {a:?}");
        }
    }

    fn random_generic_point() -> impl Strategy<Value = Vec<Q>> {
        prop::collection::vec((-40i64..40, 1i64..13), 3).prop_map(|v| {
            v.into_iter()
                .map(|(p, d)| Q::new(p.into(), d.into()))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn located_tile_contains_point(x in random_generic_point()) {
            let n = nd(&[4, 6, 7]);
            match locate_tile(&n, &x) {
                Ok(t) => prop_assert!(t.contains(&x)),
                Err(Error::TileBoundary) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }

        #[test]
        fn located_tile_is_covariant(x in random_generic_point(), c in -3i64..3) {
            let n = nd(&[2, 3, 5]);
            let k = [5 * c, 0, -2 * c];
            let Ok(t) = locate_tile(&n, &x) else { return Ok(()); };
            let y: Vec<Q> = x.iter().zip(k).map(|(a, b)| a + int(b)).collect();
            let u = locate_tile(&n, &y).unwrap();
            let shifted: Vec<i64> = t.base.iter().zip(k).map(|(a, b)| a + b).collect();
            prop_assert_eq!(u, Tile { base: shifted, omitted: t.omitted });
        }
    }
}
