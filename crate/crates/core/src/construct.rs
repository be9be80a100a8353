//! The constructive pipeline: obtain a unit α, pigeonhole two powers
//! with congruent coordinates mod n, split them into f and g, assemble
//! the permuted circulant matrix, and certify every claim.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::Error;
use crate::matrix::{
    det_closed_form, is_natural_form, recognize_symmetric_form, OrderMatrix, Permutation,
};
use crate::order::{Order, OrderElement};
use crate::suborder::{power_into_suborder, Suborder};
use crate::units::{fundamental_unit_quadratic, is_squarefree, search_unit, UnitCertificate};

/// Options for [`forge`].
#[derive(Clone, Debug, Default)]
pub struct ForgeOptions {
    /// Use this unit instead of searching for one.
    pub unit: Option<OrderElement>,
    /// Height bound for the unit search when no unit is given and the
    /// quadratic fast path does not apply. Zero means the default.
    pub height_bound: u32,
    /// Row permutation σ; identity when absent.
    pub sigma: Option<Permutation>,
    /// Restrict the construction to a finite-index subring.
    pub suborder: Option<Suborder>,
    /// Bound for the power step into the suborder. Zero means the
    /// default.
    pub max_exp: u32,
}

const DEFAULT_HEIGHT_BOUND: u32 = 10;
const DEFAULT_MAX_EXP: u32 = 64;

impl ForgeOptions {
    fn height_bound(&self) -> u32 {
        if self.height_bound == 0 {
            DEFAULT_HEIGHT_BOUND
        } else {
            self.height_bound
        }
    }

    fn max_exp(&self) -> u32 {
        if self.max_exp == 0 {
            DEFAULT_MAX_EXP
        } else {
            self.max_exp
        }
    }
}

/// The full forged construction with its verification flags.
#[derive(Clone, Debug)]
pub struct AutomorphismCertificate {
    pub order: Order,
    pub n: usize,
    pub alpha: UnitCertificate,
    pub i: u64,
    pub j: u64,
    pub f: OrderElement,
    pub g: OrderElement,
    pub sigma: Permutation,
    pub matrix: OrderMatrix,
    pub det_value: OrderElement,
    pub det_inverse: OrderElement,
    pub flags: BTreeMap<String, bool>,
    pub unverified_assumptions: Vec<String>,
}

/// Least exponent pair with congruent power-basis coordinates mod n:
/// scans i = 2, 3, ... and returns the first i whose coordinate vector
/// mod n repeats an earlier one, with the earliest such j. Termination
/// within n^d + 1 steps is a counting fact; exceeding the cap is an
/// internal error.
pub fn pigeonhole_exponents(alpha: &UnitCertificate, n: u64) -> Result<(u64, u64), Error> {
    pigeonhole_with_coords(alpha, n, |e| Some(e.coeffs().to_vec()))
}

pub(crate) fn pigeonhole_with_coords(
    alpha: &UnitCertificate,
    n: u64,
    coords: impl Fn(&OrderElement) -> Option<Vec<BigInt>>,
) -> Result<(u64, u64), Error> {
    if n < 2 {
        return Err(Error::Precondition("pigeonhole needs n >= 2"));
    }
    if alpha.element().is_plus_minus_one() {
        return Err(Error::UnitIsTrivial);
    }
    let order = alpha.element().order();
    let modulus = BigInt::from(n);
    let cap = BigInt::from(n).pow(order.degree() as u32) + 1;

    let mut seen: HashMap<Vec<BigInt>, u64> = HashMap::new();
    let mut power = order.one();
    let mut i: u64 = 0;
    loop {
        i += 1;
        if BigInt::from(i) > cap {
            return Err(Error::PigeonholeCapExceeded);
        }
        power = &power * alpha.element();
        let vector =
            coords(&power).expect("powers of an element of the subring stay in the subring");
        let key: Vec<BigInt> = vector.iter().map(|c| c.mod_floor(&modulus)).collect();
        match seen.get(&key) {
            Some(&j) => return Ok((i, j)),
            None => {
                seen.insert(key, i);
            }
        }
    }
}

/// Splits congruent powers into the pair f = (α^i + (n−1)·α^j)/n and
/// g = (α^i − α^j)/n, verifying every division exactly and re-deriving
/// the defining system by ring arithmetic.
pub fn build_fg(
    alpha: &UnitCertificate,
    i: u64,
    j: u64,
    n: u64,
) -> Result<(OrderElement, OrderElement), Error> {
    if n < 2 {
        return Err(Error::Precondition("construction needs n >= 2"));
    }
    if j < 1 || i <= j {
        return Err(Error::Precondition("exponents must satisfy i > j >= 1"));
    }
    let alpha_i = alpha.element().pow(i);
    let alpha_j = alpha.element().pow(j);
    let n_big = BigInt::from(n);
    let n_minus_one = &n_big - 1;

    let f = (&alpha_i + &alpha_j.scale(&n_minus_one))
        .div_exact_int(&n_big)
        .ok_or(Error::InexactDivision)?;
    let g = (&alpha_i - &alpha_j)
        .div_exact_int(&n_big)
        .ok_or(Error::InexactDivision)?;
    if g.is_zero() {
        return Err(Error::ZeroG);
    }
    if &f - &g != alpha_j || &f + &g.scale(&n_minus_one) != alpha_i {
        return Err(Error::CheckFailed("fg_system".into()));
    }
    Ok((f, g))
}

/// Runs the whole pipeline and certifies the result. Every flag is
/// recomputed from the assembled data; any failure aborts loudly.
pub fn forge(
    order: &Order,
    n: usize,
    options: &ForgeOptions,
) -> Result<AutomorphismCertificate, Error> {
    if n < 2 {
        return Err(Error::Precondition("construction needs n >= 2"));
    }

    let base_unit = match &options.unit {
        Some(element) => {
            if !order.same_order(element.order()) {
                return Err(Error::OrderMismatch);
            }
            if element.is_plus_minus_one() {
                return Err(Error::UnitIsTrivial);
            }
            element.unit_certificate().ok_or(Error::NotAUnit)?
        }
        None => obtain_unit(order, options.height_bound())?,
    };

    let alpha = match &options.suborder {
        Some(sub) => {
            let (_, power) = power_into_suborder(&base_unit, sub, options.max_exp()).ok_or(
                Error::SuborderPowerNotFound {
                    max_exp: options.max_exp(),
                },
            )?;
            power
                .unit_certificate()
                .expect("any power of a unit is a unit")
        }
        None => base_unit,
    };

    // The congruence has to be read in coordinates of the ring the
    // construction lives in, so that the divisions by n stay inside it.
    let (i, j) = match &options.suborder {
        Some(sub) => pigeonhole_with_coords(&alpha, n as u64, |e| sub.coordinates(e))?,
        None => pigeonhole_exponents(&alpha, n as u64)?,
    };
    let (f, g) = build_fg(&alpha, i, j, n as u64)?;

    let sigma = match &options.sigma {
        Some(s) => {
            if s.len() != n {
                return Err(Error::InvalidPermutation);
            }
            s.clone()
        }
        None => Permutation::identity(n),
    };
    let matrix = OrderMatrix::circulant(&f, &g, n)?.permute_rows(&sigma);

    let det_value = matrix.det();
    let closed = det_closed_form(&f, &g, n);
    let signed_closed = if sigma.sign() < 0 { -&closed } else { closed };
    let det_unit = det_value.unit_certificate();

    let mut flags = BTreeMap::new();
    let alpha_i = alpha.element().pow(i);
    let alpha_j = alpha.element().pow(j);
    let n_big = BigInt::from(n as u64);
    flags.insert(
        "alpha_is_unit".to_string(),
        (alpha.element() * alpha.inverse()).is_one() && alpha.element().norm().abs().is_one(),
    );
    flags.insert(
        "alpha_nontrivial".to_string(),
        !alpha.element().is_plus_minus_one(),
    );
    flags.insert(
        "exponent_congruence".to_string(),
        alpha_i.coeffs_mod(&n_big) == alpha_j.coeffs_mod(&n_big),
    );
    flags.insert(
        "fg_system".to_string(),
        &f - &g == alpha_j && &f + &g.scale(&(&n_big - 1)) == alpha_i,
    );
    flags.insert("g_nonzero".to_string(), !g.is_zero());
    flags.insert(
        "determinant_matches_closed_form".to_string(),
        det_value == signed_closed,
    );
    flags.insert("determinant_is_unit".to_string(), det_unit.is_some());
    flags.insert("nonnatural_form".to_string(), !is_natural_form(&matrix));
    flags.insert(
        "symmetric_form_recognized".to_string(),
        recognize_symmetric_form(&matrix).is_some_and(|form| form.assemble() == matrix),
    );
    if let Some(sub) = &options.suborder {
        flags.insert(
            "alpha_in_suborder".to_string(),
            sub.contains(alpha.element()),
        );
        flags.insert("f_in_suborder".to_string(), sub.contains(&f));
        flags.insert("g_in_suborder".to_string(), sub.contains(&g));
    }

    if let Some((name, _)) = flags.iter().find(|(_, &ok)| !ok) {
        return Err(Error::CheckFailed(name.clone()));
    }
    let det_inverse = det_unit
        .expect("determinant unit flag was just checked")
        .inverse()
        .clone();

    let mut unverified_assumptions = Vec::new();
    if !order.irreducibility_verified() {
        unverified_assumptions.push(format!(
            "minimal polynomial irreducibility not verified (degree {} exceeds the exact \
             factoring cap)",
            order.degree()
        ));
    }

    Ok(AutomorphismCertificate {
        order: order.clone(),
        n,
        alpha,
        i,
        j,
        f,
        g,
        sigma,
        matrix,
        det_value,
        det_inverse,
        flags,
        unverified_assumptions,
    })
}

fn obtain_unit(order: &Order, height_bound: u32) -> Result<UnitCertificate, Error> {
    if let Some(d) = order.quadratic_discriminant() {
        if let Some(d) = d.to_i64() {
            if d >= 2 && is_squarefree(d as u64) {
                let cert = fundamental_unit_quadratic(d)?;
                // rebind to the caller's order instance
                let element = order
                    .try_element(cert.element().coeffs().to_vec())
                    .expect("degrees match");
                return Ok(element
                    .unit_certificate()
                    .expect("fundamental unit certifies"));
            }
        }
    }
    search_unit(order, height_bound).ok_or(Error::UnitNotFound { height_bound })
}

/// The conjugate-pair constructor over Z\[√D\] for n = 2: with u the
/// fundamental unit and ū its conjugate, f = (u^i + ū^i)/2 and
/// g = (u^i − ū^i)/2. The evenness of both splits is checked, not
/// assumed.
pub fn quad_conjugate_construction(d: i64, i: u32) -> Result<(OrderElement, OrderElement), Error> {
    if i < 1 {
        return Err(Error::Precondition("conjugate construction needs i >= 1"));
    }
    let unit = fundamental_unit_quadratic(d)?;
    let u_pow = unit.element().pow(i as u64);
    let conj_pow = quadratic_conjugate(unit.element()).pow(i as u64);

    let two = BigInt::from(2);
    let f = (&u_pow + &conj_pow)
        .div_exact_int(&two)
        .ok_or(Error::ParityFailure)?;
    let g = (&u_pow - &conj_pow)
        .div_exact_int(&two)
        .ok_or(Error::ParityFailure)?;
    if g.is_zero() {
        return Err(Error::ZeroG);
    }
    if &f - &g != conj_pow || &f + &g != u_pow {
        return Err(Error::CheckFailed("conjugate_system".into()));
    }
    if !u_pow.norm().abs().is_one() || !conj_pow.norm().abs().is_one() {
        return Err(Error::CheckFailed("conjugate_units".into()));
    }
    Ok((f, g))
}

/// Galois conjugate x + y√D → x − y√D; a ring map exactly when the
/// minimal polynomial is x² − D.
fn quadratic_conjugate(e: &OrderElement) -> OrderElement {
    assert!(
        e.order().quadratic_discriminant().is_some(),
        "conjugation needs a x^2 - D order"
    );
    let c = e.coeffs();
    e.order()
        .try_element(vec![c[0].clone(), -&c[1]])
        .expect("degree 2")
}

/// One named re-check of a certificate claim.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
}

/// Outcome of re-verifying a certificate from scratch.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn items(&self) -> &[CheckItem] {
        &self.items
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|item| item.passed)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.items
            .iter()
            .find(|item| !item.passed)
            .map(|item| item.name.as_str())
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for item in &self.items {
            writeln!(
                f,
                "{:<34} {}",
                item.name,
                if item.passed { "pass" } else { "FAIL" }
            )?;
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// Recomputes every invariant of a certificate from its raw data:
/// powers, divisibility, both determinant routes, unit inverses, and the
/// naturality rejection. Stored values are compared against, never
/// trusted.
pub fn verify_certificate(cert: &AutomorphismCertificate) -> VerificationReport {
    let mut items = Vec::new();
    let mut check = |name: &str, passed: bool| {
        items.push(CheckItem {
            name: name.to_string(),
            passed,
        });
    };

    let rebuilt_order = Order::new(cert.order.minpoly().to_vec());
    check("order_valid", rebuilt_order.is_ok());

    let alpha = cert.alpha.element();
    let alpha_unit = (alpha * cert.alpha.inverse()).is_one()
        && alpha.norm().abs().is_one()
        && &alpha.charpoly()[0] == cert.alpha.charpoly_constant();
    check("alpha_unit", alpha_unit);
    check("alpha_nontrivial", !alpha.is_plus_minus_one());

    check("exponents_ordered", cert.i > cert.j && cert.j >= 1);

    let n_big = BigInt::from(cert.n as u64);
    let alpha_i = alpha.pow(cert.i);
    let alpha_j = alpha.pow(cert.j);
    check(
        "exponent_congruence",
        alpha_i.coeffs_mod(&n_big) == alpha_j.coeffs_mod(&n_big),
    );

    let n_minus_one = &n_big - 1;
    let f_rebuilt = (&alpha_i + &alpha_j.scale(&n_minus_one)).div_exact_int(&n_big);
    let g_rebuilt = (&alpha_i - &alpha_j).div_exact_int(&n_big);
    check(
        "fg_construction",
        f_rebuilt.as_ref() == Some(&cert.f) && g_rebuilt.as_ref() == Some(&cert.g),
    );
    check(
        "fg_system",
        &cert.f - &cert.g == alpha_j && &cert.f + &cert.g.scale(&n_minus_one) == alpha_i,
    );
    check("g_nonzero", !cert.g.is_zero());

    let assembled =
        OrderMatrix::circulant(&cert.f, &cert.g, cert.n).map(|c| c.permute_rows(&cert.sigma));
    check(
        "matrix_structure",
        assembled.map(|m| m == cert.matrix).unwrap_or(false),
    );

    check(
        "determinant_elimination",
        cert.matrix.det() == cert.det_value,
    );

    let closed = det_closed_form(&cert.f, &cert.g, cert.n);
    let signed_closed = if cert.sigma.sign() < 0 {
        -&closed
    } else {
        closed
    };
    check("determinant_closed_form", cert.det_value == signed_closed);
    check(
        "determinant_unit",
        (&cert.det_value * &cert.det_inverse).is_one() && cert.det_value.norm().abs().is_one(),
    );

    check("nonnatural_form", !is_natural_form(&cert.matrix));
    check(
        "symmetric_form_recognized",
        recognize_symmetric_form(&cert.matrix).is_some_and(|form| form.assemble() == cert.matrix),
    );

    let assumption_listed = cert.order.irreducibility_verified()
        || cert
            .unverified_assumptions
            .iter()
            .any(|a| a.contains("irreducibility"));
    check("unverified_assumptions_declared", assumption_listed);

    VerificationReport { items }
}
