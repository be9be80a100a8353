//! Human-readable rendering of order elements.
//!
//! Quadratic orders x² − D print as `a + b√D`; everything else falls
//! back to the coefficient polynomial in θ. No embeddings are computed,
//! only notation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use symforge_core::{Order, OrderElement};

pub fn element(e: &OrderElement) -> String {
    match e.order().quadratic_discriminant() {
        Some(d) => quadratic(&e.coeffs()[0], &e.coeffs()[1], &d),
        None => e.to_string(),
    }
}

pub fn order_name(order: &Order) -> String {
    match order.quadratic_discriminant() {
        Some(d) => format!("Z[√{d}]"),
        None => "Z[θ]".to_string(),
    }
}

fn quadratic(a: &BigInt, b: &BigInt, d: &BigInt) -> String {
    let radical = format!("√{d}");
    if b.is_zero() {
        return a.to_string();
    }
    let b_mag = b.abs();
    let b_term = if b_mag == BigInt::from(1) {
        radical
    } else {
        format!("{b_mag}{radical}")
    };
    if a.is_zero() {
        return if b.is_negative() {
            format!("-{b_term}")
        } else {
            b_term
        };
    }
    let sign = if b.is_negative() { "-" } else { "+" };
    format!("{a} {sign} {b_term}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_forms() {
        let order = Order::from_minpoly(&[-2, 0, 1]).unwrap();
        assert_eq!(element(&order.element(&[4, 3])), "4 + 3√2");
        assert_eq!(element(&order.element(&[17, -12])), "17 - 12√2");
        assert_eq!(element(&order.element(&[0, 1])), "√2");
        assert_eq!(element(&order.element(&[0, -1])), "-√2");
        assert_eq!(element(&order.element(&[-3, 0])), "-3");
        assert_eq!(element(&order.zero()), "0");
    }

    #[test]
    fn general_orders_use_theta() {
        let order = Order::from_minpoly(&[-1, -2, 1, 1]).unwrap();
        assert_eq!(element(&order.element(&[1, 0, -2])), "-2θ^2 + 1");
        assert_eq!(order_name(&order), "Z[θ]");
    }
}
