//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use christoffel::lattice::Lattice;
use christoffel::rational::{self, Q};
use christoffel::residue::{Edge, NormalData};
use christoffel::tiling::Tile;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random coprime positive vector with `2 <= d <= max_d` and sum at most
/// `max_s`.
pub fn random_a(r: &mut ChaCha8Rng, max_d: usize, max_s: i64) -> Vec<i64> {
    loop {
        let d = r.gen_range(2..=max_d);
        let a: Vec<i64> = (0..d).map(|_| r.gen_range(1..=max_s / d as i64)).collect();
        let g = a.iter().fold(0, |g, x| g.gcd(x));
        if g == 1 && a.iter().sum::<i64>() <= max_s {
            return a;
        }
    }
}

/// Every valid width for `a`: `s` itself and each divisor `omega` with
/// `0 < s/omega < d` and all `a_i < omega`.
pub fn all_widths(a: &[i64]) -> Vec<NormalData> {
    let s: i64 = a.iter().sum();
    (1..=s)
        .filter(|w| s % w == 0)
        .filter_map(|w| NormalData::new(a, Some(w)).ok())
        .collect()
}

/// Membership straight from the residue interval.
pub fn in_h(nd: &NormalData, u: &[i64], i: usize) -> bool {
    let w = nd.omega() as i128;
    let r: i128 = nd
        .a()
        .iter()
        .zip(u)
        .map(|(&a, &x)| a as i128 * x as i128)
        .sum::<i128>()
        .rem_euclid(w);
    r < w - nd.a()[i] as i128
}

/// Membership in `flip(H)` from the definition, with `K` the kernel.
pub fn in_flip_h(nd: &NormalData, k: &Lattice, u: &[i64], i: usize) -> bool {
    let mut v = u.to_vec();
    v[i] += 1;
    let leg = k.contains(u) || k.contains(&v);
    in_h(nd, u, i) != leg
}

/// `3 x 3` determinant by cofactor expansion.
pub fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn random_rational(r: &mut ChaCha8Rng, span: i64, max_den: i64) -> Q {
    let den = r.gen_range(1..=max_den);
    let num = r.gen_range(-span * den..=span * den);
    Q::new(num.into(), den.into())
}

/// Projection onto `sum x = 0` scaled by `d` to stay integral-free of the
/// mean: `d x - (sum x) 1`.
fn scaled_pi(x: &[Q]) -> Vec<Q> {
    let d = rational::int(x.len() as i64);
    let s: Q = x.iter().sum();
    x.iter().map(|c| c * &d - &s).collect()
}

/// Solves `pi(x) = pi(base) + l1 pi(e_j1) + l2 pi(e_j2)` for `d = 3` by
/// Cramer's rule on two coordinates of the projected vectors.
pub fn barycentric_2d(tile: &Tile, x: &[Q]) -> Option<(Q, Q)> {
    let span = tile.spanning();
    assert_eq!(span.len(), 2);
    let unit = |j: usize| {
        let mut e = vec![Q::zero(); 3];
        e[j] = Q::one();
        scaled_pi(&e)
    };
    let base: Vec<Q> = tile.base.iter().map(|&c| rational::int(c)).collect();
    let px = scaled_pi(x);
    let pb = scaled_pi(&base);
    let rhs: Vec<Q> = px.iter().zip(&pb).map(|(a, b)| a - b).collect();
    let (u, v) = (unit(span[0]), unit(span[1]));
    for (r0, r1) in [(0, 1), (0, 2), (1, 2)] {
        let det = &u[r0] * &v[r1] - &u[r1] * &v[r0];
        if det.is_zero() {
            continue;
        }
        let l1 = (&rhs[r0] * &v[r1] - &rhs[r1] * &v[r0]) / &det;
        let l2 = (&u[r0] * &rhs[r1] - &u[r1] * &rhs[r0]) / &det;
        // the third coordinate follows since every vector sums to zero
        return Some((l1, l2));
    }
    None
}

fn in_closed_unit(x: &Q) -> bool {
    !x.is_negative() && *x <= Q::one()
}

fn in_open_unit(x: &Q) -> bool {
    x.is_positive() && *x < Q::one()
}

pub fn tile_contains_2d(tile: &Tile, x: &[Q]) -> bool {
    barycentric_2d(tile, x).is_some_and(|(a, b)| in_closed_unit(&a) && in_closed_unit(&b))
}

/// Every tile of the tiling (`d = 3`) whose open interior contains `pi(x)`.
/// Tiles are the projected faces at `v` omitting `i` for each nonedge
/// `(v - e_i, v)`; bases are normalized to `v_0 = 0`.
pub fn tiles_with_interior_point(nd: &NormalData, x: &[Q]) -> Vec<Tile> {
    let c1 = rational::floor_i64(&(&x[1] - &x[0])).unwrap();
    let c2 = rational::floor_i64(&(&x[2] - &x[0])).unwrap();
    let mut out = Vec::new();
    for v1 in c1 - 3..=c1 + 3 {
        for v2 in c2 - 3..=c2 + 3 {
            for i in 0..3 {
                let base = vec![0, v1, v2];
                let mut tail = base.clone();
                tail[i] -= 1;
                if in_h(nd, &tail, i) {
                    continue;
                }
                let t = Tile { base, omitted: i };
                if let Some((a, b)) = barycentric_2d(&t, x) {
                    if in_open_unit(&a) && in_open_unit(&b) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

pub fn floor_sum(a: &[i64], x: &[Q]) -> i64 {
    a.iter()
        .zip(x)
        .map(|(ai, c)| ai * rational::floor_i64(c).unwrap())
        .sum()
}

/// `Y` is a facet point of the cubes `M + [0,1]^d` with `a.M >= 0`.
pub fn in_upper_cubes_boundary(a: &[i64], y: &[Q]) -> bool {
    y.iter().any(rational::is_integer) && floor_sum(a, y) >= 0
}

/// Visibility from `-infinity` along `(1, ..., 1)`: `Y` is a facet point of
/// the upper cubes and no facet point `Y - lambda (1, ..., 1)`,
/// `0 < lambda <= depth`, is. Only points with an integer coordinate can be
/// facet points, so it suffices to scan those values of `lambda`.
pub fn visible_by_scan(a: &[i64], y: &[Q]) -> bool {
    if !in_upper_cubes_boundary(a, y) {
        return false;
    }
    let s: i64 = a.iter().sum();
    let depth = (s + a.iter().min().unwrap() - 1) / a.iter().min().unwrap() + 1;
    let mut lambdas: Vec<Q> = Vec::new();
    for c in y {
        let f = rational::frac(c);
        for k in 0..=depth {
            let l = &f + rational::int(k);
            if l.is_positive() && l <= rational::int(depth) {
                lambdas.push(l);
            }
        }
    }
    lambdas.sort();
    lambdas.dedup();
    lambdas.iter().all(|l| {
        let z: Vec<Q> = y.iter().map(|c| c - l).collect();
        !in_upper_cubes_boundary(a, &z)
    })
}

pub fn edge(u: &[i64], i: usize) -> Edge {
    Edge::new(u.to_vec(), i)
}
