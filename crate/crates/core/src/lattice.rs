//! Full-rank sublattices of `Z^d`: Hermite normal form, kernels of residue
//! maps, indices through minors, and coset enumeration.

use itertools::Itertools;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::residue::NormalData;

/// A finite-index subgroup of `Z^d`, stored by its row-style Hermite normal
/// form: upper triangular, positive diagonal, and every entry above a pivot
/// reduced into `[0, pivot)`. Two lattices are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: Vec<Vec<i64>>,
}

impl Lattice {
    /// The subgroup generated by `rows`. Fails if it does not have full rank.
    pub fn from_generators(dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
        }
        let h = hermite_normal_form(rows, dim)?;
        if h.len() != dim || (0..dim).any(|i| h[i][i] == 0) {
            return Err(Error::RankDeficient);
        }
        Ok(Lattice { basis: h })
    }

    /// `m Z^d`.
    pub fn scaled_identity(dim: usize, m: i64) -> Result<Self> {
        let rows: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { m } else { 0 }).collect())
            .collect();
        Self::from_generators(dim, &rows)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// `[Z^d : K]`, the product of the HNF diagonal.
    pub fn index(&self) -> i64 {
        (0..self.dim()).map(|i| self.basis[i][i]).product()
    }

    /// The representative of `x + K` in the box `0 <= x_i < h_ii`.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        debug_assert_eq!(x.len(), self.dim());
        let mut v: Vec<i128> = x.iter().map(|&c| c as i128).collect();
        for (i, row) in self.basis.iter().enumerate() {
            let q = v[i].div_euclid(row[i] as i128);
            if q != 0 {
                for (vj, &rj) in v.iter_mut().zip(row).skip(i) {
                    *vj -= q * rj as i128;
                }
            }
        }
        v.into_iter().map(|c| c as i64).collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&c| c == 0)
    }

    /// One representative per coset, enumerated as a mixed-radix counter over
    /// the HNF diagonal (first coordinate slowest).
    pub fn coset_representatives(&self) -> Vec<Vec<i64>> {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, row)| 0..row[i])
            .multi_cartesian_product()
            .collect()
    }

    /// Order of `t` in `Z^d / K`.
    pub fn order_of(&self, t: &[i64]) -> i64 {
        let mut acc = self.reduce(t);
        let mut k = 1;
        while acc.iter().any(|&c| c != 0) {
            let next: Vec<i64> = acc.iter().zip(t).map(|(a, b)| a + b).collect();
            acc = self.reduce(&next);
            k += 1;
        }
        k
    }
}

/// Lattice equality via the canonical Hermite basis.
pub fn lattices_equal(k1: &Lattice, k2: &Lattice) -> bool {
    k1 == k2
}

/// Row-style Hermite normal form of the row space of `rows`; zero rows are
/// dropped. Columns without a pivot are skipped, so the output is in echelon
/// form for any rank.
pub fn hermite_normal_form(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut p = 0;
    for col in 0..ncols {
        if p == m.len() {
            break;
        }
        loop {
            let best = (p..m.len())
                .filter(|&r| m[r][col] != 0)
                .min_by_key(|&r| m[r][col].abs());
            let Some(best) = best else { break };
            m.swap(p, best);
            let mut clean = true;
            for r in p + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col] / m[p][col];
                    sub_row(&mut m, r, p, q)?;
                    if m[r][col] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if m[p][col] == 0 {
            continue;
        }
        if m[p][col] < 0 {
            for x in m[p].iter_mut() {
                *x = -*x;
            }
        }
        for r in 0..p {
            let q = m[r][col].div_euclid(m[p][col]);
            if q != 0 {
                sub_row(&mut m, r, p, q)?;
            }
        }
        p += 1;
    }
    m.truncate(p);
    m.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
                .collect()
        })
        .collect()
}

// row[r] -= q * row[p]
fn sub_row(m: &mut [Vec<i128>], r: usize, p: usize, q: i128) -> Result<()> {
    let (src, dst) = if r < p {
        let (lo, hi) = m.split_at_mut(p);
        (&hi[0], &mut lo[r])
    } else {
        let (lo, hi) = m.split_at_mut(r);
        (&lo[p], &mut hi[0])
    };
    for (d, &s) in dst.iter_mut().zip(src.iter()) {
        *d = q
            .checked_mul(s)
            .and_then(|v| d.checked_sub(v))
            .ok_or(Error::Overflow)?;
    }
    Ok(())
}

/// `{x in Z^d : a.x = 0 mod omega}` for arbitrary `a` and `omega > 0`.
///
/// The row space of `[a_i | e_i]` together with `[omega | 0]` is
/// `{(a.x + omega k, x)}`; in its Hermite form every row after the first has
/// a zero in column 0, and those rows span exactly the kernel.
pub(crate) fn kernel_of(a: &[i64], omega: i64) -> Result<Lattice> {
    let d = a.len();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(d + 1);
    for (i, &ai) in a.iter().enumerate() {
        let mut r = vec![0; d + 1];
        r[0] = ai.rem_euclid(omega);
        r[i + 1] = 1;
        rows.push(r);
    }
    let mut last = vec![0; d + 1];
    last[0] = omega;
    rows.push(last);
    let h = hermite_normal_form(&rows, d + 1)?;
    let gens: Vec<Vec<i64>> = h
        .iter()
        .filter(|r| r[0] == 0)
        .map(|r| r[1..].to_vec())
        .collect();
    Lattice::from_generators(d, &gens)
}

/// Kernel of the residue map of `nd`; its index is `omega`.
pub fn kernel_basis(nd: &NormalData) -> Result<Lattice> {
    kernel_of(nd.a(), nd.omega())
}

/// The four closed-form generators of the kernel for `d = 3`, `omega = s`:
/// `(a3,0,-a1)`, `(0,a3,-a2)`, `(a2,-a1,0)`, `(1,1,1)`.
pub fn kernel_basis_d3(a: &[i64]) -> Result<[[i64; 3]; 4]> {
    if a.len() != 3 {
        return Err(Error::UnsupportedDimension {
            expected: 3,
            found: a.len(),
        });
    }
    let (a1, a2, a3) = (a[0], a[1], a[2]);
    Ok([[a3, 0, -a1], [0, a3, -a2], [a2, -a1, 0], [1, 1, 1]])
}

/// The projected kernel generators `a3 h1 - a1 h3`, `a3 h2 - a2 h3`,
/// `a2 h1 - a1 h2`, written on the basis `(h1, h2)` using `h3 = -h1 - h2`.
pub fn kernel_basis_projected(a: &[i64]) -> Result<[[i64; 2]; 3]> {
    let g = kernel_basis_d3(a)?;
    // x1 h1 + x2 h2 + x3 h3 = (x1 - x3) h1 + (x2 - x3) h2
    let proj = |v: [i64; 3]| [v[0] - v[2], v[1] - v[2]];
    Ok([proj(g[0]), proj(g[1]), proj(g[2])])
}

/// `[Z^n : K]` for `K` generated by the rows of an `m x n` matrix of rank
/// `n`, computed as the gcd of all `n x n` minors.
pub fn subgroup_index(rows: &[Vec<i64>]) -> Result<i64> {
    let Some(first) = rows.first() else {
        return Err(Error::RankDeficient);
    };
    let n = first.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: r.len(),
        });
    }
    if rows.len() < n {
        return Err(Error::RankDeficient);
    }
    let mut g: i128 = 0;
    for pick in (0..rows.len()).combinations(n) {
        let minor: Vec<Vec<i64>> = pick.iter().map(|&i| rows[i].clone()).collect();
        g = g.gcd(&determinant(&minor)?);
        if g == 1 {
            break;
        }
    }
    if g == 0 {
        return Err(Error::RankDeficient);
    }
    i64::try_from(g).map_err(|_| Error::Overflow)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .zip(a[i][k].checked_mul(a[k][j]))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::Overflow)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}
