//! Exact arithmetic in orders of totally real number fields, and the
//! construction, recognition, and verification of symmetric-condition
//! automorphisms of n-fold products built from them.
//!
//! The pipeline: validate an order Z\[θ\] ([`Order`]), certify a unit α
//! ([`UnitCertificate`]), find exponents i > j with α^i ≡ α^j
//! coordinatewise mod n by pigeonhole, split the powers into f and g
//! with exact divisions, and assemble the permuted matrix with f on the
//! diagonal and g elsewhere. The determinant is computed on two
//! independent routes (elimination and the closed form
//! (f−g)^(n−1)(f+(n−1)g)) and certified as a unit, which makes the
//! matrix an automorphism with nonzero off-diagonal part — a shape no
//! diagonal map composed with a permutation can have.
//!
//! Everything is exact: arbitrary-precision integers throughout, Sturm
//! sequences for the totally-real check, and fraction-free elimination
//! for determinants. [`finmodel`] adds brute-force checks of the
//! quotient-descent and diagonal-preservation properties on finite
//! module models.

mod error;
mod factor;
mod intmat;
mod poly;
mod sturm;

pub mod construct;
pub mod finmodel;
pub mod format;
pub mod matrix;
pub mod order;
pub mod suborder;
pub mod units;

pub use error::Error;

pub use construct::{
    build_fg, forge, pigeonhole_exponents, quad_conjugate_construction, verify_certificate,
    AutomorphismCertificate, CheckItem, ForgeOptions, VerificationReport,
};
pub use finmodel::{CheckMode, CheckReport, FiniteModel, ModelPoint, NaturalityReport};
pub use format::{CertificateFile, MatrixFile, FORMAT_VERSION};
pub use matrix::{
    det_closed_form, is_natural_form, recognize_symmetric_form, OrderMatrix, Permutation,
    SymmetricForm,
};
pub use order::{Order, OrderElement};
pub use suborder::{power_into_suborder, Suborder};
pub use units::{fundamental_unit_quadratic, search_unit, UnitCertificate};
