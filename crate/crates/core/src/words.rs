//! Words over `{a, b}`: Christoffel words, their central factorization, and
//! the words read along lattice lines of a Christoffel graph (`a` for an
//! edge, `b` for a nonedge).

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::residue::{Edge, NormalData};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(String);

impl Word {
    pub fn parse(s: &str) -> Result<Self> {
        if let Some(c) = s.chars().find(|c| !matches!(c, 'a' | 'b')) {
            return Err(Error::Parse(format!("letter {c:?} is not a or b")));
        }
        Ok(Word(s.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: char) -> usize {
        self.0.chars().filter(|&c| c == letter).count()
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.bytes().eq(self.0.bytes().rev())
    }

    /// `p` is a period when `w[k] = w[k + p]` wherever both exist.
    pub fn has_period(&self, p: usize) -> bool {
        let b = self.0.as_bytes();
        p > 0 && (0..b.len().saturating_sub(p)).all(|k| b[k] == b[k + p])
    }

    /// All periods `1..=len`.
    pub fn periods(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.has_period(p)).collect()
    }

    /// Rotation by `k`: `w[k..] w[..k]`.
    pub fn rotate(&self, k: usize) -> Word {
        let k = if self.is_empty() { 0 } else { k % self.len() };
        Word(format!("{}{}", &self.0[k..], &self.0[..k]))
    }

    /// Whether `other` is a rotation of `self`.
    pub fn is_conjugate(&self, other: &Word) -> bool {
        self.len() == other.len() && format!("{0}{0}", self.0).contains(&other.0)
    }

    /// The smallest `k` with `rotate(k) == other`.
    pub fn rotation_to(&self, other: &Word) -> Option<usize> {
        (0..self.len().max(1)).find(|&k| self.rotate(k) == *other)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Lower Christoffel word of slope `q/p`: `p` letters `a`, `q` letters `b`,
/// read off the cycle `k -> k + q mod (p + q)` from `0`, with `a` on ascents.
pub fn christoffel_word(p: i64, q: i64) -> Result<Word> {
    if p < 1 || q < 1 {
        return Err(Error::NonPositiveEntry);
    }
    let g = p.gcd(&q);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let n = p + q;
    let mut k = 0;
    let mut w = String::with_capacity(n as usize);
    for _ in 0..n {
        let next = (k + q) % n;
        w.push(if next > k { 'a' } else { 'b' });
        k = next;
    }
    Ok(Word(w))
}

/// The `n` letters read from `x` in direction `dir` (0-based).
pub fn line_word(nd: &NormalData, x: &[i64], dir: usize, n: usize) -> Result<Word> {
    nd.check_dim(x.len())?;
    nd.check_dir(dir)?;
    if n == 0 {
        return Err(Error::EmptyWindow);
    }
    let mut w = String::with_capacity(n);
    let mut tail = x.to_vec();
    for _ in 0..n {
        let e = Edge::new(tail.clone(), dir);
        w.push(if nd.edge_in_graph(&e)? { 'a' } else { 'b' });
        tail[dir] = tail[dir].checked_add(1).ok_or(Error::Overflow)?;
    }
    Ok(Word(w))
}

/// `w = x m y` with `x = a`, `y = b`.
pub fn central_factorize(w: &Word) -> Result<(char, Word, char)> {
    let s = w.as_str();
    if s.len() < 2 {
        return Err(Error::NotChristoffelForm("length below 2".into()));
    }
    if !s.starts_with('a') || !s.ends_with('b') {
        return Err(Error::NotChristoffelForm(format!(
            "{s} is not of the form a..b"
        )));
    }
    Ok(('a', Word(s[1..s.len() - 1].to_string()), 'b'))
}

/// For `w = amb`, whether `amb` and `bma` are conjugate.
pub fn pirillo_check(w: &Word) -> Result<bool> {
    let (_, m, _) = central_factorize(w)?;
    let swapped = Word(format!("b{m}a"));
    Ok(w.is_conjugate(&swapped))
}
