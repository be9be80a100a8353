//! The order Z\[θ\] of a totally real number field, in the power basis.
//!
//! An [`Order`] is defined by a validated monic integer minimal
//! polynomial: monic, degree at least 2, totally real (checked by a
//! Sturm-sequence root count), and irreducible (decided exactly up to
//! degree 6; above that the order carries an explicit unverified flag
//! that downstream certificates must surface).
//!
//! Elements are integer coefficient vectors in the basis
//! 1, θ, ..., θ^(d-1). All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::factor::{self, Screen};
use crate::{intmat, poly, sturm};

struct OrderInner {
    degree: usize,
    minpoly: Vec<BigInt>,
    irreducibility_verified: bool,
}

/// A validated order Z\[θ\]. Cheap to clone and safe to share across
/// threads; all state is immutable after construction.
#[derive(Clone)]
pub struct Order {
    inner: Arc<OrderInner>,
}

impl Order {
    /// Validates a monic minimal polynomial (constant coefficient first,
    /// leading 1 included) and builds the order it defines.
    pub fn new(minpoly: Vec<BigInt>) -> Result<Order, Error> {
        if !minpoly.last().is_some_and(One::is_one) {
            return Err(Error::NotMonic);
        }
        let degree = minpoly.len() - 1;
        if degree < 2 {
            return Err(Error::DegreeTooSmall(degree));
        }
        let real_roots = sturm::count_real_roots(&minpoly);
        if real_roots < degree {
            return Err(Error::NotTotallyReal { real_roots, degree });
        }
        let irreducibility_verified = match factor::screen_irreducible(&minpoly) {
            Screen::Irreducible => true,
            Screen::Unverified => false,
            Screen::Factor(factor) => return Err(Error::Reducible { factor }),
        };
        Ok(Order {
            inner: Arc::new(OrderInner {
                degree,
                minpoly,
                irreducibility_verified,
            }),
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_minpoly(coeffs: &[i64]) -> Result<Order, Error> {
        Order::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The order Z\[√D\] defined by x² − D.
    pub fn quadratic(d: i64) -> Result<Order, Error> {
        Order::from_minpoly(&[-d, 0, 1])
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Minimal polynomial, constant coefficient first, leading 1 last.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.inner.minpoly
    }

    /// False only when the degree exceeds the exact factoring cap and
    /// irreducibility is being assumed rather than known.
    pub fn irreducibility_verified(&self) -> bool {
        self.inner.irreducibility_verified
    }

    /// Returns D when the minimal polynomial is exactly x² − D.
    pub fn quadratic_discriminant(&self) -> Option<BigInt> {
        if self.inner.degree == 2 && self.inner.minpoly[1].is_zero() {
            Some(-self.inner.minpoly[0].clone())
        } else {
            None
        }
    }

    pub fn same_order(&self, other: &Order) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.minpoly == other.inner.minpoly
    }

    /// Builds an element from power-basis coordinates.
    ///
    /// Panics when the coefficient count differs from the degree; use
    /// [`Order::try_element`] for untrusted input.
    pub fn element<T: Into<BigInt> + Clone>(&self, coeffs: &[T]) -> OrderElement {
        self.try_element(coeffs.iter().map(|c| c.clone().into()).collect())
            .expect("coefficient vector length must equal the order degree")
    }

    pub fn try_element(&self, coeffs: Vec<BigInt>) -> Result<OrderElement, Error> {
        if coeffs.len() != self.inner.degree {
            return Err(Error::DegreeMismatch {
                expected: self.inner.degree,
                got: coeffs.len(),
            });
        }
        Ok(OrderElement {
            order: self.clone(),
            coeffs,
        })
    }

    pub fn zero(&self) -> OrderElement {
        OrderElement {
            order: self.clone(),
            coeffs: vec![BigInt::zero(); self.inner.degree],
        }
    }

    pub fn one(&self) -> OrderElement {
        self.from_int(1)
    }

    pub fn from_int(&self, value: i64) -> OrderElement {
        let mut coeffs = vec![BigInt::zero(); self.inner.degree];
        coeffs[0] = BigInt::from(value);
        OrderElement {
            order: self.clone(),
            coeffs,
        }
    }

    /// The generator θ.
    pub fn theta(&self) -> OrderElement {
        let mut coeffs = vec![BigInt::zero(); self.inner.degree];
        coeffs[1] = BigInt::one();
        OrderElement {
            order: self.clone(),
            coeffs,
        }
    }

    fn reduce(&self, raw: &[BigInt]) -> Vec<BigInt> {
        let mut r = poly::rem_by_monic(raw, &self.inner.minpoly);
        r.resize(self.inner.degree, BigInt::zero());
        r
    }
}

impl fmt::Debug for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Order({})", poly::format_poly(&self.inner.minpoly, "x"))
    }
}

impl PartialEq for Order {
    fn eq(&self, other: &Self) -> bool {
        self.same_order(other)
    }
}

impl Eq for Order {}

/// An element of an [`Order`], as an integer coordinate vector in the
/// power basis.
#[derive(Clone)]
pub struct OrderElement {
    order: Order,
    coeffs: Vec<BigInt>,
}

impl OrderElement {
    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True for +1 or −1.
    pub fn is_plus_minus_one(&self) -> bool {
        self.coeffs[0].abs().is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> OrderElement {
        OrderElement {
            order: self.order.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact k-th power by square-and-multiply.
    pub fn pow(&self, k: u64) -> OrderElement {
        let mut result = self.order.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Matrix of multiplication by this element in the power basis
    /// (column j holds the coordinates of a·θ^j).
    pub fn regular_representation(&self) -> Vec<Vec<BigInt>> {
        let d = self.order.degree();
        let minpoly = self.order.minpoly();
        let mut columns = Vec::with_capacity(d);
        let mut current = self.coeffs.clone();
        columns.push(current.clone());
        for _ in 1..d {
            // multiply by θ: shift up one degree, reduce the overflow
            let lead = current[d - 1].clone();
            let mut next = vec![BigInt::zero(); d];
            next[1..d].clone_from_slice(&current[..d - 1]);
            for k in 0..d {
                next[k] -= &lead * &minpoly[k];
            }
            columns.push(next.clone());
            current = next;
        }
        (0..d)
            .map(|row| (0..d).map(|col| columns[col][row].clone()).collect())
            .collect()
    }

    /// Characteristic polynomial of the regular representation, constant
    /// coefficient first, monic of degree d. Computed by the
    /// Faddeev–LeVerrier recurrence; every interior division is exact.
    pub fn charpoly(&self) -> Vec<BigInt> {
        let d = self.order.degree();
        let m = self.regular_representation();
        let mut descending = vec![BigInt::one()];
        let mut a = m.clone();
        for k in 1..=d {
            let t = intmat::trace(&a);
            let (c, r) = num_integer::div_rem(-t, BigInt::from(k));
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
            descending.push(c.clone());
            if k < d {
                let mut shifted = a;
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] += &c;
                }
                a = intmat::mat_mul(&m, &shifted);
            }
        }
        descending.reverse();
        descending
    }

    /// Field norm: the determinant of the regular representation.
    pub fn norm(&self) -> BigInt {
        intmat::det(&self.regular_representation())
    }

    /// Exact division inside the order; `None` when the quotient does
    /// not lie in the order (or the divisor is zero).
    pub fn div_exact(&self, divisor: &OrderElement) -> Option<OrderElement> {
        assert_same_order(self, divisor);
        if divisor.is_zero() {
            return None;
        }
        let solution = intmat::solve_rational(&divisor.regular_representation(), &self.coeffs)?;
        let mut coeffs = Vec::with_capacity(solution.len());
        for c in solution {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(OrderElement {
            order: self.order.clone(),
            coeffs,
        })
    }

    /// Exact division of every coordinate by an integer.
    pub fn div_exact_int(&self, k: &BigInt) -> Option<OrderElement> {
        if k.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = num_integer::div_rem(c.clone(), k.clone());
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(OrderElement {
            order: self.order.clone(),
            coeffs,
        })
    }

    /// Coordinates reduced into [0, m).
    pub fn coeffs_mod(&self, m: &BigInt) -> Vec<BigInt> {
        use num_integer::Integer;
        self.coeffs.iter().map(|c| c.mod_floor(m)).collect()
    }
}

pub(crate) fn assert_same_order(a: &OrderElement, b: &OrderElement) {
    assert!(
        a.order.same_order(&b.order),
        "elements belong to different orders"
    );
}

impl PartialEq for OrderElement {
    fn eq(&self, other: &Self) -> bool {
        self.order.same_order(&other.order) && self.coeffs == other.coeffs
    }
}

impl Eq for OrderElement {}

impl fmt::Debug for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly::format_poly(&self.coeffs, "θ"))
    }
}

impl Add for &OrderElement {
    type Output = OrderElement;
    fn add(self, rhs: &OrderElement) -> OrderElement {
        assert_same_order(self, rhs);
        OrderElement {
            order: self.order.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &OrderElement {
    type Output = OrderElement;
    fn sub(self, rhs: &OrderElement) -> OrderElement {
        assert_same_order(self, rhs);
        OrderElement {
            order: self.order.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &OrderElement {
    type Output = OrderElement;
    fn mul(self, rhs: &OrderElement) -> OrderElement {
        assert_same_order(self, rhs);
        let raw = poly::mul(&self.coeffs, &rhs.coeffs);
        OrderElement {
            order: self.order.clone(),
            coeffs: self.order.reduce(&raw),
        }
    }
}

impl Neg for &OrderElement {
    type Output = OrderElement;
    fn neg(self) -> OrderElement {
        OrderElement {
            order: self.order.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
