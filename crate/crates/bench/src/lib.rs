//! Shared fixtures for the criterion benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use symforge_core::{Order, OrderMatrix};

pub fn sqrt2() -> Order {
    Order::from_minpoly(&[-2, 0, 1]).unwrap()
}

pub fn cubic() -> Order {
    Order::from_minpoly(&[-1, -2, 1, 1]).unwrap()
}

/// Deterministic circulant fixture with coefficients in [-9, 9].
pub fn random_circulant(order: &Order, n: usize, seed: u64) -> OrderMatrix {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let d = order.degree();
    let f_coeffs: Vec<i64> = (0..d).map(|_| rng.random_range(-9..=9)).collect();
    let g_coeffs: Vec<i64> = (0..d).map(|_| rng.random_range(-9..=9)).collect();
    OrderMatrix::circulant(&order.element(&f_coeffs), &order.element(&g_coeffs), n).unwrap()
}
