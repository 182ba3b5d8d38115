//! The stepped surface `S` of the slab `0 <= a.x < s`: the union of the unit
//! cube facets it contains. A point lies in `S` iff some coordinate is an
//! integer, `sum a_i floor(x_i) >= 0` and `sum a_i ceil(x_i) < s`. Every
//! line parallel to `(1, ..., 1)` meets `S` exactly once, which defines
//! `f(X)` and the offset `t(X)` with `X = f(X) + t(X) (1, ..., 1)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::residue::NormalData;

fn check(nd: &NormalData, len: usize) -> Result<()> {
    nd.check_dim(len)?;
    if !nd.is_standard() {
        return Err(Error::RequiresStandardWidth);
    }
    Ok(())
}

fn weighted(a: &[i64], x: &[i64]) -> Result<i64> {
    let mut acc: i128 = 0;
    for (&ai, &xi) in a.iter().zip(x) {
        acc = acc
            .checked_add(ai as i128 * xi as i128)
            .ok_or(Error::Overflow)?;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow)
}

/// `sum a_i floor(x_i)`.
pub fn floor_sum(nd: &NormalData, x: &[Q]) -> Result<i64> {
    let f = x
        .iter()
        .map(rational::floor_i64)
        .collect::<Result<Vec<_>>>()?;
    weighted(nd.a(), &f)
}

/// `sum a_i ceil(x_i)`.
pub fn ceil_sum(nd: &NormalData, x: &[Q]) -> Result<i64> {
    let c = x
        .iter()
        .map(rational::ceil_i64)
        .collect::<Result<Vec<_>>>()?;
    weighted(nd.a(), &c)
}

pub fn in_surface(nd: &NormalData, x: &[Q]) -> Result<bool> {
    check(nd, x.len())?;
    if !x.iter().any(rational::is_integer) {
        return Ok(false);
    }
    Ok(floor_sum(nd, x)? >= 0 && ceil_sum(nd, x)? < nd.sum())
}

/// `0 <= a.x < s`.
pub fn integer_in_surface(nd: &NormalData, x: &[i64]) -> Result<bool> {
    check(nd, x.len())?;
    let v = weighted(nd.a(), x)?;
    Ok(0 <= v && v < nd.sum())
}

/// The point `Y = f(X)` of `S` on the diagonal line through `X`, and
/// `t = t(X)`.
///
/// First `X` is moved by an integral diagonal shift so that
/// `sum a_i floor(x_i)` lies in `[0, s)`. Then, while `X` is not in `S`, it
/// descends by the smallest positive fractional part (or by `1` when `X` is
/// integral), which visits every point of the line having an integer
/// coordinate in decreasing order.
pub fn project_f(nd: &NormalData, x: &[Q]) -> Result<(Vec<Q>, Q)> {
    check(nd, x.len())?;
    let s = nd.sum();
    let l = floor_sum(nd, x)?;
    let k = l.div_euclid(s);
    let mut y: Vec<Q> = x.iter().map(|c| c - rational::int(k)).collect();
    let mut t = rational::int(k);
    // at most one step per breakpoint: d per unit of descent, at most 2 units
    let limit = 4 * x.len() * (s as usize + 2);
    for _ in 0..limit {
        if in_surface(nd, &y)? {
            return Ok((y, t));
        }
        let eps = y
            .iter()
            .map(rational::frac)
            .filter(|f| !f.is_zero())
            .min()
            .unwrap_or_else(Q::one);
        for c in y.iter_mut() {
            *c -= &eps;
        }
        t += eps;
    }
    Err(Error::NotInSurface)
}

/// The facet `M + sum_{j != i} [0, 1] e_j` of the cube at `M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Facet {
    pub corner: Vec<i64>,
    pub normal: usize,
}

/// `a.M >= 0` and `a.M + sum_{j != i} a_j < s`.
pub fn facet_in_surface(nd: &NormalData, f: &Facet) -> Result<bool> {
    check(nd, f.corner.len())?;
    nd.check_dir(f.normal)?;
    let low = weighted(nd.a(), &f.corner)?;
    let high = low + nd.sum() - nd.a()[f.normal];
    Ok(low >= 0 && high < nd.sum())
}

/// For `M` in `S`, whether `M + [0, 1] e_i` lies in `S`, i.e. whether
/// `a.(M + e_i) < s`.
pub fn segment_in_surface(nd: &NormalData, m: &[i64], dir: usize) -> Result<bool> {
    if !integer_in_surface(nd, m)? {
        return Err(Error::NotInSurface);
    }
    nd.check_dir(dir)?;
    Ok(weighted(nd.a(), m)? + nd.a()[dir] < nd.sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, parse};
    use crate::residue::Edge;

    fn nd(a: &[i64]) -> NormalData {
        NormalData::new(a, None).unwrap()
    }

    fn qv(s: &[&str]) -> Vec<Q> {
        s.iter().map(|x| parse(x).unwrap()).collect()
    }

    #[test]
    fn membership_examples() {
        let n = nd(&[2, 3, 5]);
        assert!(in_surface(&n, &qv(&["0", "0", "0"])).unwrap());
        assert!(!in_surface(&n, &qv(&["1", "1", "1"])).unwrap());
        assert!(in_surface(&n, &qv(&["1/2", "0", "0"])).unwrap());
        assert!(!in_surface(&n, &qv(&["1/2", "1/3", "1/5"])).unwrap());
        assert!(integer_in_surface(&n, &[-1, -1, 1]).unwrap());
        assert!(!integer_in_surface(&n, &[0, 0, 2]).unwrap());
    }

    #[test]
    fn projection_examples() {
        let n = nd(&[2, 3, 5]);
        let (y, t) = project_f(&n, &qv(&["1", "1", "1"])).unwrap();
        assert_eq!((y, t), (qv(&["0", "0", "0"]), int(1)));
        let (y, t) = project_f(&n, &qv(&["-1", "-1", "-1"])).unwrap();
        assert_eq!((y, t), (qv(&["0", "0", "0"]), int(-1)));
        let x = qv(&["1/2", "0", "0"]);
        assert_eq!(project_f(&n, &x).unwrap(), (x.clone(), int(0)));
    }

    #[test]
    fn facet_and_segment_examples() {
        let n = nd(&[2, 3, 5]);
        assert!(facet_in_surface(
            &n,
            &Facet {
                corner: vec![0, 0, 0],
                normal: 2
            }
        )
        .unwrap());
        assert!(!facet_in_surface(
            &n,
            &Facet {
                corner: vec![0, 0, 1],
                normal: 2
            }
        )
        .unwrap());
        assert!(segment_in_surface(&n, &[0, 0, 0], 0).unwrap());
        assert!(!segment_in_surface(&n, &[1, 1, 0], 2).unwrap());
        assert_eq!(
            segment_in_surface(&n, &[0, 0, 2], 0),
            Err(Error::NotInSurface)
        );
    }

    #[test]
    fn segments_match_graph_edges() {
        for a in [&[2, 3, 5][..], &[1, 1], &[3, 4, 5, 7]] {
            let n = nd(a);
            let k = crate::lattice::kernel_basis(&n).unwrap();
            for r in k.coset_representatives() {
                // move r into the slab along the diagonal
                let v = n.residue(&r).unwrap() - weighted(a, &r).unwrap();
                let shift = v / n.sum();
                let m: Vec<i64> = r.iter().map(|c| c + shift).collect();
                assert!(integer_in_surface(&n, &m).unwrap());
                for i in 0..a.len() {
                    let e = Edge::new(m.clone(), i);
                    assert_eq!(
                        segment_in_surface(&n, &m, i).unwrap(),
                        n.edge_in_graph(&e).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn non_standard_width_is_refused() {
        let n = NormalData::new(&[15, 11, 10], Some(18)).unwrap();
        assert_eq!(
            in_surface(&n, &qv(&["0", "0", "0"])),
            Err(Error::RequiresStandardWidth)
        );
    }
}
