//! Exact rational helpers on top of `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q` or a finite decimal such as `-0.25`.
pub fn parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        if !ip.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{}{fp}", if ip.is_empty() { "0" } else { ip })
            .parse()
            .map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let v = Q::new(digits, den);
        return Ok(if neg { -v } else { v });
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(p))
}

/// Comma-separated list of rationals.
pub fn parse_vec(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse).collect()
}

pub fn floor_i64(x: &Q) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or(Error::Overflow)
}

pub fn ceil_i64(x: &Q) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or(Error::Overflow)
}

/// `x - floor(x)`, in `[0, 1)`.
pub fn frac(x: &Q) -> Q {
    x - x.floor()
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `p` or `p/q` in lowest terms.
pub fn format(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vec(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(format).collect();
    format!("({})", parts.join(","))
}

pub(crate) fn in_unit_interval(x: &Q) -> bool {
    !x.is_negative() && *x <= Q::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-3/6").unwrap(), Q::new((-1).into(), 2.into()));
        assert_eq!(parse("0.6").unwrap(), Q::new(3.into(), 5.into()));
        assert_eq!(parse("-1.25").unwrap(), Q::new((-5).into(), 4.into()));
        assert_eq!(parse("-.5").unwrap(), Q::new((-1).into(), 2.into()));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("1.").is_err());
    }

    #[test]
    fn floor_ceil_frac() {
        let x = parse("-7/3").unwrap();
        assert_eq!(floor_i64(&x).unwrap(), -3);
        assert_eq!(ceil_i64(&x).unwrap(), -2);
        assert_eq!(frac(&x), parse("2/3").unwrap());
        assert_eq!(format(&x), "-7/3");
        assert_eq!(format(&int(4)), "4");
    }
}
