//! Finite-index subrings of Z\[θ\], given by an explicit Z-basis.
//!
//! These model endomorphism rings that are smaller than the full order.
//! Validation checks that the span is a unital ring: nonzero
//! determinant, contains 1, and closed under multiplication on all
//! pairwise basis products.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::intmat;
use crate::order::{Order, OrderElement};
use crate::units::UnitCertificate;

/// A finite-index subring of the ambient order, with rows of `basis`
/// giving a Z-basis in power-basis coordinates.
#[derive(Clone, Debug)]
pub struct Suborder {
    order: Order,
    basis: Vec<Vec<BigInt>>,
    index: BigInt,
}

impl Suborder {
    pub fn new(order: &Order, basis: Vec<Vec<BigInt>>) -> Result<Suborder, Error> {
        let d = order.degree();
        if basis.len() != d || basis.iter().any(|row| row.len() != d) {
            return Err(Error::ShapeMismatch);
        }
        let det = intmat::det(&basis);
        if det.is_zero() {
            return Err(Error::SuborderSingular);
        }
        let suborder = Suborder {
            order: order.clone(),
            basis,
            index: det.abs(),
        };
        if !suborder.contains(&order.one()) {
            return Err(Error::SuborderMissingIdentity);
        }
        for i in 0..d {
            for j in i..d {
                let a = suborder.basis_element(i);
                let b = suborder.basis_element(j);
                if !suborder.contains(&(&a * &b)) {
                    return Err(Error::SuborderNotClosed);
                }
            }
        }
        Ok(suborder)
    }

    /// The ambient order itself, index 1.
    pub fn full(order: &Order) -> Suborder {
        Suborder {
            order: order.clone(),
            basis: intmat::identity(order.degree()),
            index: BigInt::from(1),
        }
    }

    /// Convenience constructor from machine integers.
    pub fn from_rows(order: &Order, rows: &[&[i64]]) -> Result<Suborder, Error> {
        Suborder::new(
            order,
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Index in the ambient order: the absolute determinant of the basis.
    pub fn index(&self) -> &BigInt {
        &self.index
    }

    pub fn basis_element(&self, i: usize) -> OrderElement {
        self.order
            .try_element(self.basis[i].clone())
            .expect("basis rows have the ambient degree")
    }

    /// Membership by an exact integer linear solve against the basis.
    pub fn contains(&self, element: &OrderElement) -> bool {
        self.coordinates(element).is_some()
    }

    /// Coordinates of `element` in this basis, when they are integral.
    pub fn coordinates(&self, element: &OrderElement) -> Option<Vec<BigInt>> {
        assert!(
            self.order.same_order(element.order()),
            "element belongs to a different order"
        );
        let d = self.order.degree();
        // Solve Bᵀ y = coeffs: column i of the system is basis row i.
        let mat: Vec<Vec<BigInt>> = (0..d)
            .map(|r| (0..d).map(|c| self.basis[c][r].clone()).collect())
            .collect();
        let solution =
            intmat::solve_rational(&mat, element.coeffs()).expect("basis determinant is nonzero");
        let mut out = Vec::with_capacity(d);
        for c in solution {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(out)
    }
}

/// Least k in 1..=max_exp with unit^k in the suborder, together with
/// that power. `None` when the bound is exhausted.
pub fn power_into_suborder(
    unit: &UnitCertificate,
    suborder: &Suborder,
    max_exp: u32,
) -> Option<(u32, OrderElement)> {
    let mut power = suborder.order().one();
    for k in 1..=max_exp {
        power = &power * unit.element();
        if suborder.contains(&power) {
            return Some((k, power));
        }
    }
    None
}
