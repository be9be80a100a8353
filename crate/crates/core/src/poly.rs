//! Dense integer polynomials, constant coefficient first.
//!
//! These are the low-level routines behind order arithmetic and the
//! minimal-polynomial validation. The zero polynomial is the empty vector
//! after trimming.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Drops trailing zero coefficients.
pub(crate) fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    let mut d = p.len();
    while d > 0 && p[d - 1].is_zero() {
        d -= 1;
    }
    d.checked_sub(1)
}

pub(crate) fn is_zero(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Remainder of `p` modulo a monic polynomial `m`.
pub(crate) fn rem_by_monic(p: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(m.last().is_some_and(One::is_one));
    let md = m.len() - 1;
    let mut r = trim(p.to_vec());
    while r.len() > md {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - md;
        for (k, c) in m[..md].iter().enumerate() {
            r[shift + k] -= &lead * c;
        }
    }
    trim(r)
}

/// Exact division over Z; `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let b = trim(b.to_vec());
    let db = degree(&b)?;
    let mut r = trim(a.to_vec());
    if is_zero(&r) {
        return Some(Vec::new());
    }
    let da = degree(&r).unwrap();
    if da < db {
        return None;
    }
    let lead_b = b[db].clone();
    let mut q = vec![BigInt::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            return None;
        }
        let (quot, rem) = num_integer::div_rem(r[dr].clone(), lead_b.clone());
        if !rem.is_zero() {
            return None;
        }
        q[dr - db] = quot.clone();
        for (k, c) in b.iter().enumerate() {
            r[dr - db + k] -= &quot * c;
        }
        r = trim(r);
        if r.is_empty() {
            return Some(q);
        }
    }
    Some(q)
}

pub(crate) fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn to_rational(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from(c.clone())).collect()
}

/// Renders a polynomial in a named variable, highest power first.
pub(crate) fn format_poly(coeffs: &[BigInt], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match k {
            0 => mag.to_string(),
            _ => {
                let power = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if mag.is_one() {
                    power
                } else {
                    format!("{mag}{power}")
                }
            }
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        terms.push((sign, body));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (sign, body)) in terms.iter().enumerate() {
        if idx == 0 {
            if *sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(body);
    }
    out
}
