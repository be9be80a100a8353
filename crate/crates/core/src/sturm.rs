//! Sturm-sequence counting of distinct real roots, over exact rationals.
//!
//! No floating point and no root isolation: the count at the infinities
//! is read off leading coefficients, so the verdict is exact for any
//! integer polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::poly;

/// Number of distinct real roots of a nonzero integer polynomial.
pub(crate) fn count_real_roots(p: &[BigInt]) -> usize {
    let chain = sturm_chain(&poly::to_rational(p));
    let at_minus_inf = sign_variations(&chain, Sign::MinusInfinity);
    let at_plus_inf = sign_variations(&chain, Sign::PlusInfinity);
    at_minus_inf - at_plus_inf
}

fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![normalize(p.to_vec()), normalize(rat_derivative(p))];
    loop {
        let n = chain.len();
        if rat_is_zero(&chain[n - 1]) {
            chain.pop();
            break;
        }
        let r = rat_rem(&chain[n - 2], &chain[n - 1]);
        if rat_is_zero(&r) {
            break;
        }
        chain.push(normalize(r.iter().map(|c| -c).collect()));
    }
    chain
}

enum Sign {
    MinusInfinity,
    PlusInfinity,
}

fn sign_variations(chain: &[Vec<BigRational>], at: Sign) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .filter_map(|p| {
            let d = rat_degree(p)?;
            let lead = if p[d].is_positive() { 1 } else { -1 };
            Some(match at {
                Sign::PlusInfinity => lead,
                Sign::MinusInfinity => {
                    if d % 2 == 0 {
                        lead
                    } else {
                        -lead
                    }
                }
            })
        })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Trims trailing zeros and scales by the positive inverse of the
/// leading coefficient's absolute value; keeps every sign in the chain
/// intact while bounding growth.
fn normalize(mut p: Vec<BigRational>) -> Vec<BigRational> {
    match rat_degree(&p) {
        None => {
            p.clear();
            p
        }
        Some(d) => {
            p.truncate(d + 1);
            let scale = p[d].abs();
            p.into_iter().map(|c| c / &scale).collect()
        }
    }
}

fn rat_degree(p: &[BigRational]) -> Option<usize> {
    let mut d = p.len();
    while d > 0 && p[d - 1].is_zero() {
        d -= 1;
    }
    d.checked_sub(1)
}

fn rat_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return Vec::new();
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| BigRational::from(BigInt::from(k)) * c)
        .collect()
}

fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = rat_degree(b).expect("nonzero divisor");
    let mut r = a.to_vec();
    while let Some(dr) = rat_degree(&r) {
        if dr < db {
            break;
        }
        let q = &r[dr] / &b[db];
        for (k, c) in b.iter().enumerate() {
            let t = &q * c;
            r[dr - db + k] -= t;
        }
        r[dr] = BigRational::zero();
    }
    r
}
