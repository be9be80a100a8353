//! Matrices over the order, permutations, and the symmetric form.
//!
//! The central shape is the circulant-style matrix with one element f on
//! the diagonal and another g everywhere else, composed with a row
//! permutation. [`recognize_symmetric_form`] decides exactly whether a
//! matrix has that shape, and [`is_natural_form`] whether it is a
//! permuted constant diagonal.

use std::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::order::{assert_same_order, Order, OrderElement};

/// A permutation of {1..n}, stored 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    /// Swap of positions a and b (0-indexed) in the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        assert!(a < n && b < n, "transposition indices out of range");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation(images)
    }

    /// Parses a 1-indexed image array, validating bijectivity.
    pub fn from_one_indexed(images: &[usize]) -> Result<Permutation, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation(zero_based))
    }

    pub fn to_one_indexed(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Image of index i (0-indexed).
    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img] = i;
        }
        Permutation(inv)
    }

    /// Sign of the permutation: +1 or −1 by cycle parity.
    pub fn sign(&self) -> i8 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut sign = 1i8;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// All permutations of n symbols, in lexicographic order of their
    /// image arrays.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (0..n).permutations(n).map(Permutation).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "identity");
        }
        let images: Vec<String> = self.to_one_indexed().iter().map(usize::to_string).collect();
        write!(f, "[{}]", images.join(", "))
    }
}

/// An n×n matrix over a shared order, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderMatrix {
    order: Order,
    n: usize,
    entries: Vec<OrderElement>,
}

impl OrderMatrix {
    pub fn from_rows(rows: Vec<Vec<OrderElement>>) -> Result<OrderMatrix, Error> {
        let n = rows.len();
        if n < 2 {
            return Err(Error::MatrixTooSmall(n));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch);
        }
        let order = rows[0][0].order().clone();
        for row in &rows {
            for e in row {
                if !order.same_order(e.order()) {
                    return Err(Error::OrderMismatch);
                }
            }
        }
        Ok(OrderMatrix {
            order,
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// f on the diagonal, g everywhere else.
    pub fn circulant(f: &OrderElement, g: &OrderElement, n: usize) -> Result<OrderMatrix, Error> {
        assert_same_order(f, g);
        if n < 2 {
            return Err(Error::MatrixTooSmall(n));
        }
        let order = f.order().clone();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i == j { f.clone() } else { g.clone() });
            }
        }
        Ok(OrderMatrix { order, n, entries })
    }

    pub fn identity(order: &Order, n: usize) -> Result<OrderMatrix, Error> {
        OrderMatrix::circulant(&order.one(), &order.zero(), n)
    }

    /// h repeated on the diagonal, zero elsewhere.
    pub fn diagonal(h: &OrderElement, n: usize) -> Result<OrderMatrix, Error> {
        OrderMatrix::circulant(h, &h.order().zero(), n)
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &OrderElement {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[OrderElement]> {
        self.entries.chunks(self.n)
    }

    pub fn with_entry(&self, row: usize, col: usize, value: OrderElement) -> OrderMatrix {
        let mut out = self.clone();
        out.entries[row * self.n + col] = value;
        out
    }

    /// Left composition with the permutation matrix of σ: row k of the
    /// input lands in row σ(k) of the output.
    pub fn permute_rows(&self, sigma: &Permutation) -> OrderMatrix {
        assert_eq!(sigma.len(), self.n, "permutation size must match");
        let mut entries = vec![self.order.zero(); self.n * self.n];
        for k in 0..self.n {
            let target = sigma.image(k);
            for j in 0..self.n {
                entries[target * self.n + j] = self.entry(k, j).clone();
            }
        }
        OrderMatrix {
            order: self.order.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn mat_mul(&self, rhs: &OrderMatrix) -> OrderMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes must match");
        assert!(self.order.same_order(&rhs.order), "orders must match");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.order.zero();
                for k in 0..n {
                    acc = &acc + &(self.entry(i, k) * rhs.entry(k, j));
                }
                entries.push(acc);
            }
        }
        OrderMatrix {
            order: self.order.clone(),
            n,
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Exact determinant: cofactor expansion up to 6×6, fraction-free
    /// (Bareiss) elimination above — its interior divisions are exact in
    /// any integral domain.
    pub fn det(&self) -> OrderElement {
        let rows: Vec<Vec<OrderElement>> = self.rows().map(|r| r.to_vec()).collect();
        if self.n <= 6 {
            det_cofactor(&self.order, &rows)
        } else {
            det_bareiss(&self.order, rows)
        }
    }

    /// Inverse over the order: exists exactly when the determinant is a
    /// unit, and is then adjugate times the certified inverse of the
    /// determinant.
    pub fn invert(&self) -> Option<OrderMatrix> {
        let det = self.det();
        let unit = det.unit_certificate()?;
        let det_inv = unit.inverse();
        let n = self.n;
        let rows: Vec<Vec<OrderElement>> = self.rows().map(|r| r.to_vec()).collect();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // adjugate: cofactor of (j, i)
                let minor = minor_matrix(&rows, j, i);
                let mut c = det_cofactor(&self.order, &minor);
                if (i + j) % 2 == 1 {
                    c = -&c;
                }
                entries.push(&c * det_inv);
            }
        }
        let inverse = OrderMatrix {
            order: self.order.clone(),
            n,
            entries,
        };
        assert!(
            self.mat_mul(&inverse).is_identity(),
            "adjugate inverse must verify"
        );
        Some(inverse)
    }
}

impl fmt::Debug for OrderMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OrderMatrix {}x{} [", self.n, self.n)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

fn minor_matrix(
    rows: &[Vec<OrderElement>],
    skip_row: usize,
    skip_col: usize,
) -> Vec<Vec<OrderElement>> {
    rows.iter()
        .enumerate()
        .filter(|(r, _)| *r != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != skip_col)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

fn det_cofactor(order: &Order, rows: &[Vec<OrderElement>]) -> OrderElement {
    let n = rows.len();
    if n == 0 {
        return order.one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = order.zero();
    for (col, pivot) in rows[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor = minor_matrix(rows, 0, col);
        let term = pivot * &det_cofactor(order, &minor);
        acc = if col % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn det_bareiss(order: &Order, mut a: Vec<Vec<OrderElement>>) -> OrderElement {
    let n = a.len();
    let mut sign = 1i8;
    let mut prev = order.one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return order.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination divides exactly in an integral domain");
            }
            a[i][k] = order.zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// The determinant of the circulant pattern in closed form:
/// (f − g)^(n−1) · (f + (n−1)·g).
pub fn det_closed_form(f: &OrderElement, g: &OrderElement, n: usize) -> OrderElement {
    assert_same_order(f, g);
    assert!(n >= 2, "closed form needs n >= 2");
    let diff = f - g;
    let scaled = f + &g.scale(&BigInt::from(n as u64 - 1));
    &diff.pow(n as u64 - 1) * &scaled
}

/// A successful decomposition M = P_σ · circulant(f, g, n) with f ≠ g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricForm {
    pub sigma: Permutation,
    pub f: OrderElement,
    pub g: OrderElement,
}

impl SymmetricForm {
    /// Rebuilds the matrix this form describes.
    pub fn assemble(&self) -> OrderMatrix {
        OrderMatrix::circulant(&self.f, &self.g, self.sigma.len())
            .expect("form sizes were validated")
            .permute_rows(&self.sigma)
    }
}

/// Decides exactly whether M = P_σ · circulant(f, g, n) with f ≠ g, and
/// returns the decomposition.
///
/// For n = 2 the two roles are interchangeable (the diagonal of any such
/// matrix is constant), so the convention is σ = identity with f taken
/// from the diagonal.
pub fn recognize_symmetric_form(m: &OrderMatrix) -> Option<SymmetricForm> {
    let n = m.size();
    if n == 2 {
        let f = m.entry(0, 0);
        let g = m.entry(0, 1);
        if f == g || m.entry(1, 1) != f || m.entry(1, 0) != g {
            return None;
        }
        return Some(SymmetricForm {
            sigma: Permutation::identity(2),
            f: f.clone(),
            g: g.clone(),
        });
    }

    // n >= 3: in every row g appears n−1 >= 2 times and f exactly once,
    // so the minority entry of the first row determines the pair.
    let first: Vec<&OrderElement> = (0..n).map(|j| m.entry(0, j)).collect();
    let (f, g) = split_row(&first)?;

    // f sits at (σ(j), j); collect σ from the columns and verify every
    // entry against the pattern.
    let mut images = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for (col, image) in images.iter_mut().enumerate() {
        let mut f_row = None;
        for row in 0..n {
            let e = m.entry(row, col);
            if e == f {
                if f_row.is_some() {
                    return None;
                }
                f_row = Some(row);
            } else if e != g {
                return None;
            }
        }
        let row = f_row?;
        if seen[row] {
            return None;
        }
        seen[row] = true;
        *image = row;
    }
    let sigma = Permutation(images);
    Some(SymmetricForm {
        sigma,
        f: f.clone(),
        g: g.clone(),
    })
}

/// Splits a row into (minority f, majority g) for n >= 3; `None` when the
/// multiset is not one f and n−1 copies of g with f ≠ g.
fn split_row<'a>(row: &[&'a OrderElement]) -> Option<(&'a OrderElement, &'a OrderElement)> {
    let n = row.len();
    let first_count = row.iter().filter(|e| **e == row[0]).count();
    if first_count == n {
        return None; // constant row means f = g
    }
    let (f, g) = if first_count == 1 {
        let g = row.iter().find(|e| **e != row[0])?;
        (row[0], *g)
    } else if first_count == n - 1 {
        let f = row.iter().find(|e| **e != row[0])?;
        (*f, row[0])
    } else {
        return None;
    };
    // all non-f entries must equal g
    if row.iter().filter(|e| **e == f).count() != 1 {
        return None;
    }
    if row.iter().any(|e| *e != f && *e != g) {
        return None;
    }
    Some((f, g))
}

/// True exactly when M = P_σ · diag(h, ..., h) for some permutation σ and
/// single element h — the shape of a natural map. The zero matrix
/// qualifies with h = 0.
pub fn is_natural_form(m: &OrderMatrix) -> bool {
    let n = m.size();
    if (0..n).all(|i| (0..n).all(|j| m.entry(i, j).is_zero())) {
        return true;
    }
    let mut h: Option<&OrderElement> = None;
    let mut seen = vec![false; n];
    for col in 0..n {
        let mut nonzero_row = None;
        for row in 0..n {
            if !m.entry(row, col).is_zero() {
                if nonzero_row.is_some() {
                    return false;
                }
                nonzero_row = Some(row);
            }
        }
        let Some(row) = nonzero_row else { return false };
        if seen[row] {
            return false;
        }
        seen[row] = true;
        let e = m.entry(row, col);
        match h {
            None => h = Some(e),
            Some(prev) if prev == e => {}
            Some(_) => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> Order {
        Order::from_minpoly(&[-2, 0, 1]).unwrap()
    }

    #[test]
    fn circulant_layout() {
        let order = sqrt2();
        let f = order.element(&[4, 3]);
        let g = order.element(&[3, 2]);
        let m = OrderMatrix::circulant(&f, &g, 2).unwrap();
        assert_eq!(m.entry(0, 0), &f);
        assert_eq!(m.entry(0, 1), &g);
        assert_eq!(m.entry(1, 0), &g);
        assert_eq!(m.entry(1, 1), &f);

        assert!(OrderMatrix::identity(&order, 3).unwrap().is_identity());
        assert!(matches!(
            OrderMatrix::circulant(&f, &g, 1),
            Err(Error::MatrixTooSmall(1))
        ));
    }

    #[test]
    fn permute_rows_swaps() {
        let order = sqrt2();
        let m = OrderMatrix::circulant(&order.one(), &order.theta(), 2).unwrap();
        let swapped = m.permute_rows(&Permutation::transposition(2, 0, 1));
        assert_eq!(swapped.entry(0, 0), &order.theta());
        assert_eq!(swapped.entry(0, 1), &order.one());
        let back = swapped.permute_rows(&Permutation::transposition(2, 0, 1));
        assert_eq!(back, m);
        assert_eq!(m.permute_rows(&Permutation::identity(2)), m);
    }

    #[test]
    fn circulant_commutes_with_all_permutations_up_to_4() {
        let order = sqrt2();
        let f = order.element(&[1, 2]);
        let g = order.element(&[-3, 1]);
        for n in 2..=4 {
            let c = OrderMatrix::circulant(&f, &g, n).unwrap();
            let id = OrderMatrix::identity(&order, n).unwrap();
            for sigma in Permutation::all(n) {
                let p = id.permute_rows(&sigma);
                assert_eq!(c.mat_mul(&p), p.mat_mul(&c), "n={n} sigma={sigma}");
            }
        }
    }

    #[test]
    fn circulant_commutes_with_transpositions_up_to_6() {
        let order = sqrt2();
        let f = order.element(&[0, 1]);
        let g = order.element(&[5, -2]);
        for n in 5..=6 {
            let c = OrderMatrix::circulant(&f, &g, n).unwrap();
            let id = OrderMatrix::identity(&order, n).unwrap();
            for a in 0..n {
                for b in a + 1..n {
                    let p = id.permute_rows(&Permutation::transposition(n, a, b));
                    assert_eq!(c.mat_mul(&p), p.mat_mul(&c));
                }
            }
        }
    }

    #[test]
    fn determinant_2x2() {
        let order = sqrt2();
        let m = OrderMatrix::circulant(&order.one(), &order.theta(), 2).unwrap();
        assert_eq!(m.det(), order.from_int(-1));
        assert_eq!(OrderMatrix::identity(&order, 4).unwrap().det(), order.one());
    }

    #[test]
    fn closed_form_matches_hand_values() {
        let order = sqrt2();
        let one = order.one();
        let theta = order.theta();
        assert_eq!(det_closed_form(&one, &theta, 2), order.from_int(-1));
        // g = 0 collapses to f^n
        let f = order.element(&[2, 1]);
        assert_eq!(det_closed_form(&f, &order.zero(), 3), f.pow(3));
        // the forged d=2 instance
        let ff = order.element(&[4, 3]);
        let gg = order.element(&[3, 2]);
        assert_eq!(det_closed_form(&ff, &gg, 2), order.element(&[17, 12]));
    }

    #[test]
    fn bareiss_agrees_with_closed_form_above_cofactor_cap() {
        let order = sqrt2();
        let f = order.element(&[2, -1]);
        let g = order.element(&[1, 1]);
        let n = 7;
        let m = OrderMatrix::circulant(&f, &g, n).unwrap();
        assert_eq!(m.det(), det_closed_form(&f, &g, n));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let order = sqrt2();
        // permutation matrix of a 7-cycle has zero diagonal everywhere
        let id = OrderMatrix::identity(&order, 7).unwrap();
        let cycle = Permutation::from_one_indexed(&[2, 3, 4, 5, 6, 7, 1]).unwrap();
        let p = id.permute_rows(&cycle);
        assert_eq!(p.det(), order.from_int(cycle.sign() as i64));
    }

    #[test]
    fn invert_unit_determinant() {
        let order = sqrt2();
        let m = OrderMatrix::circulant(&order.one(), &order.theta(), 2).unwrap();
        let inv = m.invert().unwrap();
        assert_eq!(inv.entry(0, 0), &order.from_int(-1));
        assert_eq!(inv.entry(0, 1), &order.theta());
        assert_eq!(inv.entry(1, 0), &order.theta());
        assert_eq!(inv.entry(1, 1), &order.from_int(-1));
        assert!(m.mat_mul(&inv).is_identity());
        assert!(inv.mat_mul(&m).is_identity());
    }

    #[test]
    fn invert_refuses_non_unit_determinant() {
        let order = sqrt2();
        let m = OrderMatrix::circulant(&order.from_int(2), &order.zero(), 2).unwrap();
        assert!(m.invert().is_none());
    }

    #[test]
    fn recognizer_round_trips() {
        let order = sqrt2();
        let f = order.element(&[4, 3]);
        let g = order.element(&[3, 2]);
        let c = OrderMatrix::circulant(&f, &g, 3).unwrap();
        let form = recognize_symmetric_form(&c).unwrap();
        assert!(form.sigma.is_identity());
        assert_eq!(form.f, f);
        assert_eq!(form.g, g);

        let sigma = Permutation::from_one_indexed(&[2, 3, 1, 4]).unwrap();
        let m = OrderMatrix::circulant(&f, &g, 4)
            .unwrap()
            .permute_rows(&sigma);
        let form = recognize_symmetric_form(&m).unwrap();
        assert_eq!(form.sigma, sigma);
        assert_eq!(form.assemble(), m);
    }

    #[test]
    fn recognizer_n2_uses_identity_convention() {
        let order = sqrt2();
        let f = order.element(&[4, 3]);
        let g = order.element(&[3, 2]);
        let m = OrderMatrix::circulant(&f, &g, 2)
            .unwrap()
            .permute_rows(&Permutation::transposition(2, 0, 1));
        let form = recognize_symmetric_form(&m).unwrap();
        assert!(form.sigma.is_identity());
        assert_eq!(form.f, g);
        assert_eq!(form.g, f);
        assert_eq!(form.assemble(), m);
    }

    #[test]
    fn recognizer_rejects_broken_patterns() {
        let order = sqrt2();
        let f = order.element(&[4, 3]);
        let g = order.element(&[3, 2]);
        // bottom-right corner differs from f
        let m = OrderMatrix::circulant(&f, &g, 2)
            .unwrap()
            .with_entry(1, 1, order.element(&[9, 9]));
        assert!(recognize_symmetric_form(&m).is_none());
        // f = g is rejected even though the layout matches
        let constant = OrderMatrix::circulant(&f, &f, 3).unwrap();
        assert!(recognize_symmetric_form(&constant).is_none());
        // zero matrix
        let zero = OrderMatrix::circulant(&order.zero(), &order.zero(), 3);
        assert!(zero.is_err() || recognize_symmetric_form(&zero.unwrap()).is_none());
    }

    #[test]
    fn recognizer_allows_zero_g() {
        let order = sqrt2();
        let h = order.element(&[2, 1]);
        let m = OrderMatrix::diagonal(&h, 3).unwrap();
        let form = recognize_symmetric_form(&m).unwrap();
        assert_eq!(form.f, h);
        assert!(form.g.is_zero());
    }

    #[test]
    fn natural_form_examples() {
        let order = sqrt2();
        let h = order.element(&[1, 1]);
        let diag = OrderMatrix::diagonal(&h, 2).unwrap();
        assert!(is_natural_form(&diag));
        assert!(is_natural_form(
            &diag.permute_rows(&Permutation::transposition(2, 0, 1))
        ));

        let f = order.element(&[4, 3]);
        let g = order.element(&[3, 2]);
        let forged = OrderMatrix::circulant(&f, &g, 2).unwrap();
        assert!(!is_natural_form(&forged));

        // degenerate n = 2 case: zero diagonal with nonzero g is the
        // swap of a constant diagonal
        let m = OrderMatrix::circulant(&order.zero(), &g, 2).unwrap();
        assert!(is_natural_form(&m));
        // but not for n >= 3, where g appears twice per column
        let m3 = OrderMatrix::circulant(&order.zero(), &g, 3).unwrap();
        assert!(!is_natural_form(&m3));
    }
}
