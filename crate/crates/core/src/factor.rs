//! Irreducibility screening for monic integer polynomials.
//!
//! Degree up to 6 is decided exactly: integer roots come from divisors of
//! the constant term, and factors of degree 2 or 3 are found by
//! Kronecker interpolation through divisor tuples of small-point values.
//! Above degree 6 (or when a value at every usable interpolation point
//! resists factoring) the verdict is `Unverified` and callers must carry
//! that flag forward.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly;

pub(crate) enum Screen {
    Irreducible,
    Unverified,
    Factor(Vec<BigInt>),
}

/// Largest degree decided exactly.
pub(crate) const EXACT_DEGREE_CAP: usize = 6;

/// Trial-division bound when factoring values at interpolation points.
const SMOOTHNESS_BOUND: u64 = 1_000_000;

/// Screens a monic polynomial of degree >= 2 for a nontrivial factor.
pub(crate) fn screen_irreducible(p: &[BigInt]) -> Screen {
    debug_assert!(p.last().is_some_and(One::is_one));
    let d = p.len() - 1;

    match integer_root(p) {
        Ok(Some(root)) => return Screen::Factor(vec![-root, BigInt::one()]),
        Ok(None) => {}
        Err(NotSmooth) => return Screen::Unverified,
    }
    if d > EXACT_DEGREE_CAP {
        return Screen::Unverified;
    }

    for k in 2..=d / 2 {
        match kronecker_factor(p, k) {
            Ok(Some(factor)) => return Screen::Factor(factor),
            Ok(None) => {}
            Err(NotSmooth) => return Screen::Unverified,
        }
    }
    Screen::Irreducible
}

/// Any integer root of a monic polynomial divides the constant term.
fn integer_root(p: &[BigInt]) -> Result<Option<BigInt>, NotSmooth> {
    if p[0].is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    let divs = divisors(&p[0]).ok_or(NotSmooth)?;
    for div in divs {
        for cand in [div.clone(), -div] {
            if poly::eval(p, &cand).is_zero() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

struct NotSmooth;

/// Searches for a monic factor of exact degree `k` by interpolating
/// through all divisor choices of `p` evaluated at `k + 1` small points.
fn kronecker_factor(p: &[BigInt], k: usize) -> Result<Option<Vec<BigInt>>, NotSmooth> {
    let mut points = Vec::with_capacity(k + 1);
    let mut divisor_lists: Vec<Vec<BigInt>> = Vec::with_capacity(k + 1);
    for x in interpolation_pool() {
        let v = poly::eval(p, &x);
        assert!(!v.is_zero(), "integer roots were screened first");
        if let Some(divs) = divisors(&v) {
            points.push(x);
            divisor_lists.push(divs);
            if points.len() == k + 1 {
                break;
            }
        }
    }
    if points.len() < k + 1 {
        return Err(NotSmooth);
    }

    // Negating a candidate factor negates its value at every point at
    // once, so the first point only needs positive divisors.
    let mut choice = vec![0usize; k + 1];
    let mut signs = vec![false; k + 1]; // false: +, true: -; signs[0] stays +
    loop {
        let values: Vec<BigInt> = (0..=k)
            .map(|i| {
                let v = &divisor_lists[i][choice[i]];
                if signs[i] {
                    -v
                } else {
                    v.clone()
                }
            })
            .collect();
        if let Some(candidate) = interpolate_integer(&points, &values) {
            if candidate_divides(p, candidate.clone(), k) {
                let normalized = monic_normalize(candidate);
                return Ok(Some(normalized));
            }
        }
        if !advance(&mut choice, &mut signs, &divisor_lists) {
            return Ok(None);
        }
    }
}

fn advance(choice: &mut [usize], signs: &mut [bool], lists: &[Vec<BigInt>]) -> bool {
    for i in (0..choice.len()).rev() {
        // sign toggles fastest, except at index 0 which is pinned to +
        if i > 0 && !signs[i] {
            signs[i] = true;
            return true;
        }
        signs[i] = false;
        if choice[i] + 1 < lists[i].len() {
            choice[i] += 1;
            return true;
        }
        choice[i] = 0;
    }
    false
}

fn candidate_divides(p: &[BigInt], candidate: Vec<BigInt>, k: usize) -> bool {
    if poly::degree(&candidate) != Some(k) {
        return false;
    }
    let lead = candidate.last().unwrap();
    if !lead.abs().is_one() {
        return false;
    }
    poly::div_exact(p, &candidate).is_some()
}

fn monic_normalize(candidate: Vec<BigInt>) -> Vec<BigInt> {
    if candidate.last().unwrap().is_negative() {
        candidate.into_iter().map(|c| -c).collect()
    } else {
        candidate
    }
}

fn interpolation_pool() -> impl Iterator<Item = BigInt> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![BigInt::zero()]
        } else {
            vec![BigInt::from(k), BigInt::from(-k)]
        }
    })
}

/// Lagrange interpolation, keeping only candidates with integer
/// coefficients.
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> Option<Vec<BigInt>> {
    use num_rational::BigRational;
    let n = points.len();
    let mut acc: Vec<BigRational> = Vec::new();
    for i in 0..n {
        let mut basis = vec![BigRational::from(BigInt::one())];
        let mut denom = BigRational::from(BigInt::one());
        for j in 0..n {
            if i == j {
                continue;
            }
            // basis *= (x - x_j)
            let mut next = vec![BigRational::from(BigInt::zero()); basis.len() + 1];
            for (t, c) in basis.iter().enumerate() {
                next[t + 1] += c;
                next[t] -= c * BigRational::from(points[j].clone());
            }
            basis = next;
            denom *= BigRational::from(&points[i] - &points[j]);
        }
        let scale = BigRational::from(values[i].clone()) / denom;
        if acc.len() < basis.len() {
            acc.resize(basis.len(), BigRational::from(BigInt::zero()));
        }
        for (t, c) in basis.iter().enumerate() {
            acc[t] += c * &scale;
        }
    }
    let mut out = Vec::with_capacity(acc.len());
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(poly::trim(out))
}

/// All positive divisors, or `None` when the value resists complete
/// factorization by trial division up to the smoothness bound.
fn divisors(v: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = v.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= SMOOTHNESS_BOUND {
        let bp = BigInt::from(p);
        if (&bp * &bp) > n {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = num_integer::div_rem(n.clone(), bp.clone());
            if r.is_zero() {
                n = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        // Remaining cofactor: prime exactly when below the square of the
        // trial bound (no smaller prime divides it).
        let bound_sq = BigInt::from(SMOOTHNESS_BOUND) * BigInt::from(SMOOTHNESS_BOUND);
        if n < bound_sq {
            primes.push((n, 1));
        } else {
            return None;
        }
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}
