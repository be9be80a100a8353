//! Brute-force verification on finite modules.
//!
//! The model for a point group is (Z/m)^d with θ acting through its
//! companion matrix mod m. This is a rank-d module proxy, deliberately
//! not the rank-2d torsion group of an abelian variety: the properties
//! checked here — descent to the symmetric quotient, diagonal
//! preservation, bijectivity, naturality of the form — are statements
//! about the matrix over the ring acting on a faithful module, so the
//! smaller model loses nothing that is testable while halving the state
//! space. Reports only ever claim model-level verdicts.
//!
//! Tuples enumerate in a fixed odometer order (first coordinate of the
//! first point varies fastest); a reported counterexample is the least
//! failure in that order. Sampling modes record their seed.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::error::Error;
use crate::intmat;
use crate::matrix::{OrderMatrix, Permutation};
use crate::order::{Order, OrderElement};

/// Default cap on exhaustive enumeration, counted in tuple-permutation
/// pairs (or tuples, for the diagonal checks).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// How a check walks the tuple space.
#[derive(Clone, Copy, Debug)]
pub enum CheckMode {
    Exhaustive { budget: u64 },
    Sample { count: u64, seed: u64 },
}

impl CheckMode {
    pub fn exhaustive() -> CheckMode {
        CheckMode::Exhaustive {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// A point of the model: a length-d coordinate vector over Z/m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelPoint {
    coords: Vec<u64>,
}

impl ModelPoint {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// The module (Z/m)^d with θ acting by its companion matrix mod m.
#[derive(Clone, Debug)]
pub struct FiniteModel {
    order: Order,
    m: u64,
    theta: Vec<Vec<u64>>,
}

impl FiniteModel {
    pub fn new(order: &Order, m: u64) -> Result<FiniteModel, Error> {
        if m < 2 {
            return Err(Error::ModulusTooSmall(m));
        }
        let theta = reduce_int_matrix(&order.theta().regular_representation(), m);
        let model = FiniteModel {
            order: order.clone(),
            m,
            theta,
        };
        debug_assert!(model.theta_satisfies_minpoly());
        Ok(model)
    }

    fn theta_satisfies_minpoly(&self) -> bool {
        let d = self.order.degree();
        let mut acc = vec![vec![0u64; d]; d];
        let mut power: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d).map(|j| u64::from(i == j)).collect())
            .collect();
        for (k, c) in self.order.minpoly().iter().enumerate() {
            let c = c.mod_floor(&self.m.into()).to_u64().unwrap();
            for r in 0..d {
                for s in 0..d {
                    acc[r][s] = (acc[r][s] + mul_mod(c, power[r][s], self.m)) % self.m;
                }
            }
            if k + 1 < self.order.minpoly().len() {
                power = mat_mul_mod(&power, &self.theta, self.m);
            }
        }
        acc.iter().all(|row| row.iter().all(|&v| v == 0))
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn theta_action(&self) -> &[Vec<u64>] {
        &self.theta
    }

    /// Builds a point, reducing the coordinates mod m.
    pub fn point(&self, coords: &[u64]) -> ModelPoint {
        assert_eq!(
            coords.len(),
            self.order.degree(),
            "point length must equal the order degree"
        );
        ModelPoint {
            coords: coords.iter().map(|&c| c % self.m).collect(),
        }
    }

    pub fn zero_point(&self) -> ModelPoint {
        ModelPoint {
            coords: vec![0; self.order.degree()],
        }
    }

    /// The regular representation of an element, reduced mod m.
    pub fn element_matrix(&self, e: &OrderElement) -> Vec<Vec<u64>> {
        assert!(
            self.order.same_order(e.order()),
            "element belongs to a different order"
        );
        reduce_int_matrix(&e.regular_representation(), self.m)
    }

    /// Action of a ring element on a point.
    pub fn act(&self, e: &OrderElement, p: &ModelPoint) -> ModelPoint {
        let mat = self.element_matrix(e);
        ModelPoint {
            coords: apply_mod(&mat, &p.coords, self.m),
        }
    }

    /// Action of a matrix on an n-tuple of points: row i sends the tuple
    /// to the sum of entry (i, j) applied to point j.
    pub fn act_tuple(&self, matrix: &OrderMatrix, points: &[ModelPoint]) -> Vec<ModelPoint> {
        let n = matrix.size();
        assert_eq!(points.len(), n, "tuple length must match the matrix size");
        let blocks = self.reduce_matrix(matrix);
        let flat: Vec<u64> = points.iter().flat_map(|p| p.coords.clone()).collect();
        let image = blocks.apply(&flat);
        image
            .chunks(self.order.degree())
            .map(|c| ModelPoint { coords: c.to_vec() })
            .collect()
    }

    fn reduce_matrix(&self, matrix: &OrderMatrix) -> Blocks {
        let n = matrix.size();
        let d = self.order.degree();
        let mats = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.element_matrix(matrix.entry(i, j)))
            .collect();
        Blocks {
            n,
            d,
            m: self.m,
            mats,
        }
    }

    /// True when the matrix acts bijectively on the model: the integer
    /// determinant of the full (dn)×(dn) regular-representation matrix
    /// is invertible mod m.
    pub fn check_bijective(&self, matrix: &OrderMatrix) -> bool {
        let n = matrix.size();
        let d = self.order.degree();
        let mut big = vec![vec![num_bigint::BigInt::from(0); d * n]; d * n];
        for i in 0..n {
            for j in 0..n {
                let rep = matrix.entry(i, j).regular_representation();
                for r in 0..d {
                    for s in 0..d {
                        big[i * d + r][j * d + s] = rep[r][s].clone();
                    }
                }
            }
        }
        let det = intmat::det(&big);
        det.gcd(&self.m.into()).is_one()
    }

    /// Number of tuples in the model for matrices of size n.
    pub fn tuple_space(&self, n: usize) -> Option<u128> {
        (self.m as u128).checked_pow((self.order.degree() * n) as u32)
    }

    /// Checks that permuting a tuple before applying the matrix never
    /// changes the coordinate multiset of the image.
    pub fn check_descent(
        &self,
        matrix: &OrderMatrix,
        mode: CheckMode,
    ) -> Result<CheckReport, Error> {
        let n = matrix.size();
        let d = self.order.degree();
        let blocks = self.reduce_matrix(matrix);
        let perms = Permutation::all(n);
        let factorial = perms.len() as u128;

        let mut examined: u64 = 0;
        let mut counterexample = None;

        let test_tuple = |flat: &[u64], examined: &mut u64| -> Option<Counterexample> {
            let base = sorted_chunks(&blocks.apply(flat), d);
            for tau in &perms {
                *examined += 1;
                let permuted = permute_tuple(flat, tau, d);
                let image = blocks.apply(&permuted);
                if sorted_chunks(&image, d) != base {
                    return Some(Counterexample {
                        tuple: chunk(flat, d),
                        tau: Some(tau.to_one_indexed()),
                        image: chunk(&blocks.apply(flat), d),
                        permuted_image: Some(chunk(&image, d)),
                    });
                }
            }
            None
        };

        match mode {
            CheckMode::Exhaustive { budget } => {
                let tuples = self.tuple_space(n).ok_or(Error::BudgetExceeded {
                    required: u128::MAX,
                    budget,
                })?;
                let required = tuples.saturating_mul(factorial);
                if required > budget as u128 {
                    return Err(Error::BudgetExceeded { required, budget });
                }
                let mut odometer = Odometer::new(d * n, self.m);
                while let Some(flat) = odometer.next() {
                    if let Some(ce) = test_tuple(flat, &mut examined) {
                        counterexample = Some(ce);
                        break;
                    }
                }
                Ok(CheckReport::new(
                    "descent",
                    self,
                    n,
                    exhaustive_mode(),
                    examined,
                    counterexample,
                ))
            }
            CheckMode::Sample { count, seed } => {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                for _ in 0..count {
                    let flat: Vec<u64> = (0..d * n).map(|_| rng.random_range(0..self.m)).collect();
                    if let Some(ce) = test_tuple(&flat, &mut examined) {
                        counterexample = Some(ce);
                        break;
                    }
                }
                Ok(CheckReport::new(
                    "descent",
                    self,
                    n,
                    sample_mode(count, seed),
                    examined,
                    counterexample,
                ))
            }
        }
    }

    /// Checks F(Δ) ⊆ Δ where Δ is the set of tuples with two equal
    /// coordinates.
    pub fn check_big_diagonal(
        &self,
        matrix: &OrderMatrix,
        mode: CheckMode,
    ) -> Result<CheckReport, Error> {
        self.check_diagonal_set(matrix, mode, DiagonalKind::Big)
    }

    /// Checks F(Δ′) ⊆ Δ′ where Δ′ is the set of tuples in which all but
    /// one coordinate coincide; needs n >= 3 (Δ′ = Δ when n = 3).
    pub fn check_delta_prime(
        &self,
        matrix: &OrderMatrix,
        mode: CheckMode,
    ) -> Result<CheckReport, Error> {
        if matrix.size() < 3 {
            return Err(Error::Precondition("delta-prime check needs n >= 3"));
        }
        self.check_diagonal_set(matrix, mode, DiagonalKind::Prime)
    }

    fn check_diagonal_set(
        &self,
        matrix: &OrderMatrix,
        mode: CheckMode,
        kind: DiagonalKind,
    ) -> Result<CheckReport, Error> {
        let n = matrix.size();
        let d = self.order.degree();
        let blocks = self.reduce_matrix(matrix);
        let name = match kind {
            DiagonalKind::Big => "big_diagonal",
            DiagonalKind::Prime => "delta_prime",
        };

        let member = |flat: &[u64]| -> bool {
            match kind {
                DiagonalKind::Big => in_big_diagonal(flat, d, n),
                DiagonalKind::Prime => in_delta_prime(flat, d, n),
            }
        };

        let mut examined: u64 = 0;
        let mut counterexample = None;
        let test_tuple = |flat: &[u64], examined: &mut u64| -> Option<Counterexample> {
            *examined += 1;
            let image = blocks.apply(flat);
            if member(&image) {
                None
            } else {
                Some(Counterexample {
                    tuple: chunk(flat, d),
                    tau: None,
                    image: chunk(&image, d),
                    permuted_image: None,
                })
            }
        };

        match mode {
            CheckMode::Exhaustive { budget } => {
                let required = self.tuple_space(n).ok_or(Error::BudgetExceeded {
                    required: u128::MAX,
                    budget,
                })?;
                if required > budget as u128 {
                    return Err(Error::BudgetExceeded { required, budget });
                }
                let mut odometer = Odometer::new(d * n, self.m);
                while let Some(flat) = odometer.next() {
                    if !member(flat) {
                        continue;
                    }
                    if let Some(ce) = test_tuple(flat, &mut examined) {
                        counterexample = Some(ce);
                        break;
                    }
                }
                Ok(CheckReport::new(
                    name,
                    self,
                    n,
                    exhaustive_mode(),
                    examined,
                    counterexample,
                ))
            }
            CheckMode::Sample { count, seed } => {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                for _ in 0..count {
                    let flat = match kind {
                        DiagonalKind::Big => {
                            // random tuple, then force two positions equal
                            let mut flat: Vec<u64> =
                                (0..d * n).map(|_| rng.random_range(0..self.m)).collect();
                            let a = rng.random_range(0..n as u64) as usize;
                            let mut b = rng.random_range(0..n as u64 - 1) as usize;
                            if b >= a {
                                b += 1;
                            }
                            for t in 0..d {
                                flat[b * d + t] = flat[a * d + t];
                            }
                            flat
                        }
                        DiagonalKind::Prime => {
                            // all but one coordinate share a common point
                            let common: Vec<u64> =
                                (0..d).map(|_| rng.random_range(0..self.m)).collect();
                            let free = rng.random_range(0..n as u64) as usize;
                            let mut flat = Vec::with_capacity(d * n);
                            for idx in 0..n {
                                if idx == free {
                                    for _ in 0..d {
                                        flat.push(rng.random_range(0..self.m));
                                    }
                                } else {
                                    flat.extend_from_slice(&common);
                                }
                            }
                            flat
                        }
                    };
                    if let Some(ce) = test_tuple(&flat, &mut examined) {
                        counterexample = Some(ce);
                        break;
                    }
                }
                Ok(CheckReport::new(
                    name,
                    self,
                    n,
                    sample_mode(count, seed),
                    examined,
                    counterexample,
                ))
            }
        }
    }

    /// Exhaustive search for (τ, h) with M ≡ P_τ·diag(h, ..., h) as maps
    /// on the model. Enumerates all m^d candidate elements h against all
    /// n! permutations.
    pub fn naturality_probe(
        &self,
        matrix: &OrderMatrix,
        budget: u64,
    ) -> Result<NaturalityReport, Error> {
        let n = matrix.size();
        let d = self.order.degree();
        let blocks = self.reduce_matrix(matrix);
        let perms = Permutation::all(n);

        let candidates = (self.m as u128)
            .checked_pow(d as u32)
            .ok_or(Error::BudgetExceeded {
                required: u128::MAX,
                budget,
            })?;
        let required = candidates.saturating_mul(perms.len() as u128);
        if required > budget as u128 {
            return Err(Error::BudgetExceeded { required, budget });
        }

        // action matrices of 1, θ, ..., θ^(d-1)
        let mut theta_powers: Vec<Vec<Vec<u64>>> = Vec::with_capacity(d);
        let mut power: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d).map(|j| u64::from(i == j)).collect())
            .collect();
        for _ in 0..d {
            theta_powers.push(power.clone());
            power = mat_mul_mod(&power, &self.theta, self.m);
        }

        let mut examined = 0u64;
        for tau in &perms {
            let mut odometer = Odometer::new(d, self.m);
            while let Some(h) = odometer.next() {
                examined += 1;
                let mut h_mat = vec![vec![0u64; d]; d];
                for (k, coeff) in h.iter().enumerate() {
                    for r in 0..d {
                        for s in 0..d {
                            h_mat[r][s] = (h_mat[r][s]
                                + mul_mod(*coeff, theta_powers[k][r][s], self.m))
                                % self.m;
                        }
                    }
                }
                if blocks.matches_permuted_diagonal(tau, &h_mat) {
                    return Ok(self.naturality_report(
                        n,
                        true,
                        Some(NaturalWitness {
                            tau: tau.to_one_indexed(),
                            h: h.to_vec(),
                        }),
                        examined,
                    ));
                }
            }
        }
        Ok(self.naturality_report(n, false, None, examined))
    }

    fn naturality_report(
        &self,
        n: usize,
        natural: bool,
        witness: Option<NaturalWitness>,
        examined: u64,
    ) -> NaturalityReport {
        NaturalityReport {
            check: "naturality_probe".to_string(),
            minpoly: self.order.minpoly().iter().map(|c| c.to_string()).collect(),
            modulus: self.m,
            n,
            natural,
            witness,
            examined,
        }
    }
}

enum DiagonalKind {
    Big,
    Prime,
}

/// The reduced block action of a matrix over the order.
struct Blocks {
    n: usize,
    d: usize,
    m: u64,
    mats: Vec<Vec<Vec<u64>>>,
}

impl Blocks {
    fn apply(&self, flat: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.d * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let mat = &self.mats[i * self.n + j];
                for r in 0..self.d {
                    let mut acc = 0u128;
                    for c in 0..self.d {
                        acc += mat[r][c] as u128 * flat[j * self.d + c] as u128;
                    }
                    out[i * self.d + r] =
                        ((out[i * self.d + r] as u128 + acc) % self.m as u128) as u64;
                }
            }
        }
        out
    }

    fn matches_permuted_diagonal(&self, tau: &Permutation, h_mat: &[Vec<u64>]) -> bool {
        for j in 0..self.n {
            let target_row = tau.image(j);
            for i in 0..self.n {
                let expected: Option<&[Vec<u64>]> =
                    if i == target_row { Some(h_mat) } else { None };
                let block = &self.mats[i * self.n + j];
                for r in 0..self.d {
                    for s in 0..self.d {
                        let want = expected.map_or(0, |m| m[r][s]);
                        if block[r][s] != want {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Odometer over fixed-length digit vectors base m; the first digit
/// varies fastest.
struct Odometer {
    digits: Vec<u64>,
    m: u64,
    started: bool,
    done: bool,
}

impl Odometer {
    fn new(len: usize, m: u64) -> Odometer {
        Odometer {
            digits: vec![0; len],
            m,
            started: false,
            done: false,
        }
    }

    fn next(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.digits);
        }
        for digit in self.digits.iter_mut() {
            *digit += 1;
            if *digit < self.m {
                return Some(&self.digits);
            }
            *digit = 0;
        }
        self.done = true;
        None
    }
}

fn reduce_int_matrix(mat: &[Vec<num_bigint::BigInt>], m: u64) -> Vec<Vec<u64>> {
    let modulus = num_bigint::BigInt::from(m);
    mat.iter()
        .map(|row| {
            row.iter()
                .map(|c| c.mod_floor(&modulus).to_u64().unwrap())
                .collect()
        })
        .collect()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut out = vec![vec![0u64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut acc = 0u128;
            for k in 0..d {
                acc += a[i][k] as u128 * b[k][j] as u128;
            }
            out[i][j] = (acc % m as u128) as u64;
        }
    }
    out
}

fn apply_mod(mat: &[Vec<u64>], v: &[u64], m: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            let acc: u128 = row
                .iter()
                .zip(v)
                .map(|(&a, &b)| a as u128 * b as u128)
                .sum();
            (acc % m as u128) as u64
        })
        .collect()
}

fn chunk(flat: &[u64], d: usize) -> Vec<Vec<u64>> {
    flat.chunks(d).map(<[u64]>::to_vec).collect()
}

fn sorted_chunks(flat: &[u64], d: usize) -> Vec<Vec<u64>> {
    let mut chunks = chunk(flat, d);
    chunks.sort_unstable();
    chunks
}

/// Coordinate j of the permuted tuple lands in slot τ(j).
fn permute_tuple(flat: &[u64], tau: &Permutation, d: usize) -> Vec<u64> {
    let n = tau.len();
    let mut out = vec![0u64; flat.len()];
    for j in 0..n {
        let target = tau.image(j);
        out[target * d..(target + 1) * d].copy_from_slice(&flat[j * d..(j + 1) * d]);
    }
    out
}

fn in_big_diagonal(flat: &[u64], d: usize, n: usize) -> bool {
    for i in 0..n {
        for j in i + 1..n {
            if flat[i * d..(i + 1) * d] == flat[j * d..(j + 1) * d] {
                return true;
            }
        }
    }
    false
}

fn in_delta_prime(flat: &[u64], d: usize, n: usize) -> bool {
    (0..n).any(|skip| {
        let mut shared: Option<&[u64]> = None;
        for idx in 0..n {
            if idx == skip {
                continue;
            }
            let point = &flat[idx * d..(idx + 1) * d];
            match shared {
                None => shared = Some(point),
                Some(existing) if existing == point => {}
                Some(_) => return false,
            }
        }
        true
    })
}

/// Serializable verdict of one check run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ModeReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub tuple: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<usize>>,
    pub image: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permuted_image: Option<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub minpoly: Vec<String>,
    pub modulus: u64,
    pub n: usize,
    pub mode: ModeReport,
    pub verdict: Verdict,
    pub examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    fn new(
        check: &str,
        model: &FiniteModel,
        n: usize,
        mode: ModeReport,
        examined: u64,
        counterexample: Option<Counterexample>,
    ) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            minpoly: model
                .order
                .minpoly()
                .iter()
                .map(|c| c.to_string())
                .collect(),
            modulus: model.m,
            n,
            mode,
            verdict: if counterexample.is_none() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            examined,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn exhaustive_mode() -> ModeReport {
    ModeReport {
        kind: "exhaustive".to_string(),
        samples: None,
        seed: None,
    }
}

fn sample_mode(samples: u64, seed: u64) -> ModeReport {
    ModeReport {
        kind: "sample".to_string(),
        samples: Some(samples),
        seed: Some(seed),
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (m = {}, {}): {} after {} steps",
            self.check, self.modulus, self.mode.kind, self.verdict, self.examined
        )?;
        if let Some(ce) = &self.counterexample {
            write!(f, "\n  counterexample x = {:?}", ce.tuple)?;
            if let Some(tau) = &ce.tau {
                write!(f, ", tau = {tau:?}")?;
            }
            write!(f, ", image = {:?}", ce.image)?;
            if let Some(p) = &ce.permuted_image {
                write!(f, ", permuted image = {p:?}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NaturalWitness {
    pub tau: Vec<usize>,
    pub h: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NaturalityReport {
    pub check: String,
    pub minpoly: Vec<String>,
    pub modulus: u64,
    pub n: usize,
    pub natural: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NaturalWitness>,
    pub examined: u64,
}

impl fmt::Display for NaturalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "naturality probe (m = {}): {} after {} candidates",
            self.modulus,
            if self.natural {
                "natural form found"
            } else {
                "no natural form"
            },
            self.examined
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness tau = {:?}, h = {:?}", w.tau, w.h)?;
        }
        Ok(())
    }
}
