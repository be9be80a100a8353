//! Units of the order: certificates, Pell solutions, and bounded search.
//!
//! A unit is witnessed by a [`UnitCertificate`] carrying the element, its
//! inverse, and the constant term of its characteristic polynomial; the
//! inverse is an integer polynomial in the element itself, so certifying
//! never leaves the order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::order::{Order, OrderElement};

/// Witness that an element is invertible in its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCertificate {
    element: OrderElement,
    inverse: OrderElement,
    charpoly_constant: BigInt,
}

impl UnitCertificate {
    /// Re-validates the certificate invariants; used when reading
    /// untrusted serialized data.
    pub fn from_parts(
        element: OrderElement,
        inverse: OrderElement,
        charpoly_constant: BigInt,
    ) -> Result<UnitCertificate, Error> {
        if !charpoly_constant.abs().is_one() {
            return Err(Error::InvalidCertificate(
                "unit charpoly constant must be +1 or -1".into(),
            ));
        }
        if element.charpoly()[0] != charpoly_constant {
            return Err(Error::InvalidCertificate(
                "stored charpoly constant does not match the element".into(),
            ));
        }
        if !(&element * &inverse).is_one() {
            return Err(Error::InvalidCertificate(
                "element times inverse is not 1".into(),
            ));
        }
        Ok(UnitCertificate {
            element,
            inverse,
            charpoly_constant,
        })
    }

    pub fn element(&self) -> &OrderElement {
        &self.element
    }

    pub fn inverse(&self) -> &OrderElement {
        &self.inverse
    }

    pub fn charpoly_constant(&self) -> &BigInt {
        &self.charpoly_constant
    }

    /// k-th power for any integer k; negative exponents go through the
    /// certified inverse.
    pub fn pow(&self, k: i64) -> OrderElement {
        if k >= 0 {
            self.element.pow(k as u64)
        } else {
            self.inverse.pow(k.unsigned_abs())
        }
    }
}

impl OrderElement {
    /// Certifies this element as a unit, or returns `None` when the norm
    /// is not ±1. The inverse comes from the characteristic polynomial:
    /// with constant term c ∈ {±1}, a·(a^(d-1) + c_(d-1)·a^(d-2) + ... +
    /// c_1) = −c, so the inverse is an integer polynomial in a.
    pub fn unit_certificate(&self) -> Option<UnitCertificate> {
        let cp = self.charpoly();
        let constant = cp[0].clone();
        if !constant.abs().is_one() {
            return None;
        }
        let order = self.order().clone();
        let d = order.degree();
        let mut acc = order.zero();
        // Horner evaluation of a^(d-1) + c_(d-1) a^(d-2) + ... + c_1
        for k in (1..=d).rev() {
            acc = &(&acc * self) + &order.one().scale(&cp[k]);
        }
        let inverse = acc.scale(&-&constant);
        debug_assert!((self * &inverse).is_one());
        Some(UnitCertificate {
            element: self.clone(),
            inverse,
            charpoly_constant: constant,
        })
    }
}

/// Fundamental unit x + y√D of Z\[√D\] for squarefree D ≥ 2: the solution
/// of x² − Dy² = ±1 with smallest y ≥ 1, from the continued-fraction
/// expansion of √D.
pub fn fundamental_unit_quadratic(d: i64) -> Result<UnitCertificate, Error> {
    if d < 2 {
        return Err(Error::DiscriminantTooSmall(d));
    }
    if !is_squarefree(d as u64) {
        return Err(Error::NotSquarefree(d));
    }
    let order = Order::quadratic(d)?;
    let (x, y) = pell_fundamental(&BigInt::from(d));
    let unit = order.try_element(vec![x, y])?;
    let cert = unit
        .unit_certificate()
        .expect("continued-fraction convergent solves x^2 - D y^2 = ±1");
    Ok(cert)
}

/// Continued-fraction expansion of √D, returning the convergent at the
/// end of the first period. That convergent (p, q) satisfies
/// p² − Dq² = (−1)^period and has the least q ≥ 1 among all solutions.
fn pell_fundamental(d: &BigInt) -> (BigInt, BigInt) {
    let a0 = d.sqrt();
    debug_assert!(&(&a0 * &a0) < d, "D must not be a perfect square");

    let mut m = BigInt::zero();
    let mut den = BigInt::one();
    let mut a = a0.clone();

    let (mut p_prev, mut p) = (BigInt::one(), a0.clone());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());

    let two_a0 = &a0 * 2;
    loop {
        m = &den * &a - &m;
        den = (d - &m * &m) / &den;
        a = (&a0 + &m).div_floor(&den);

        if a == two_a0 {
            return (p, q);
        }
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
}

pub(crate) fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut n = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Deterministic bounded search for a unit other than ±1.
///
/// Coefficient vectors with max-abs coefficient at most `height_bound`
/// are scanned in graded order (grade = sum of absolute coefficients),
/// within a grade by lexicographically descending absolute pattern, and
/// within a pattern by sign vectors with + before −. The first element
/// of norm ±1 that is neither +1 nor −1 is returned; in a totally real
/// field such an element has infinite order, since the only roots of
/// unity are ±1.
pub fn search_unit(order: &Order, height_bound: u32) -> Option<UnitCertificate> {
    let d = order.degree();
    let bound = height_bound as u64;
    for grade in 1..=(d as u64) * bound {
        let mut pattern = first_pattern(grade, d, bound).expect("grade stays within d * bound");
        loop {
            if let Some(cert) = scan_signs(order, &pattern) {
                return Some(cert);
            }
            if !next_pattern(&mut pattern, bound) {
                break;
            }
        }
    }
    None
}

/// First composition of `grade` into d parts bounded by `bound`, in the
/// descending-lex order used by the scan. `None` when grade > d·bound.
fn first_pattern(grade: u64, d: usize, bound: u64) -> Option<Vec<u64>> {
    let mut pattern = vec![0u64; d];
    let mut rest = grade;
    for slot in pattern.iter_mut() {
        let take = rest.min(bound);
        *slot = take;
        rest -= take;
    }
    if rest > 0 {
        None
    } else {
        Some(pattern)
    }
}

/// Advances to the next composition with the same sum, descending-lex.
fn next_pattern(pattern: &mut [u64], bound: u64) -> bool {
    let d = pattern.len();
    // Find the rightmost position (except the last) that can donate to
    // strictly later positions.
    let suffix_sum: u64 = pattern.iter().sum();
    let mut tail: u64 = 0;
    for i in (0..d - 1).rev() {
        tail += pattern[i + 1];
        if pattern[i] == 0 {
            continue;
        }
        let moved = tail + 1;
        let capacity = (d - i - 1) as u64 * bound;
        if moved <= capacity {
            pattern[i] -= 1;
            let mut rest = moved;
            for slot in pattern[i + 1..].iter_mut() {
                let take = rest.min(bound);
                *slot = take;
                rest -= take;
            }
            debug_assert_eq!(pattern.iter().sum::<u64>(), suffix_sum);
            return true;
        }
    }
    false
}

fn scan_signs(order: &Order, pattern: &[u64]) -> Option<UnitCertificate> {
    let nonzero: Vec<usize> = (0..pattern.len()).filter(|&i| pattern[i] != 0).collect();
    let k = nonzero.len();
    for mask in 0..(1u64 << k) {
        let coeffs: Vec<BigInt> = (0..pattern.len())
            .map(|i| {
                let mag = BigInt::from(pattern[i]);
                match nonzero.iter().position(|&z| z == i) {
                    // the sign bit for the lowest index sits highest, so
                    // all-plus comes first and + sorts before −
                    Some(bit) if mask >> (k - 1 - bit) & 1 == 1 => -mag,
                    _ => mag,
                }
            })
            .collect();
        let candidate = order
            .try_element(coeffs)
            .expect("pattern length equals degree");
        if candidate.is_plus_minus_one() {
            continue;
        }
        if candidate.norm().abs().is_one() {
            return candidate.unit_certificate();
        }
    }
    None
}
