//! JSON wire formats for certificates and matrices.
//!
//! Every unbounded integer travels as a decimal string; element
//! coefficient lists are constant coordinate first, like the in-memory
//! representation. `format_version` is required on read and must be 1.
//! Serialization is deterministic: struct fields keep their declared
//! order and check maps are sorted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::construct::AutomorphismCertificate;
use crate::error::Error;
use crate::matrix::{OrderMatrix, Permutation};
use crate::order::Order;
use crate::units::UnitCertificate;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderRepr {
    pub minpoly: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaRepr {
    pub coeffs: Vec<String>,
    pub inverse: Vec<String>,
    pub charpoly_constant: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExponentsRepr {
    pub i: String,
    pub j: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DetRepr {
    pub value: Vec<String>,
    pub inverse: Vec<String>,
}

/// On-disk form of an [`AutomorphismCertificate`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateFile {
    pub order: OrderRepr,
    pub n: String,
    pub alpha: AlphaRepr,
    pub exponents: ExponentsRepr,
    pub f: Vec<String>,
    pub g: Vec<String>,
    pub sigma: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub det: DetRepr,
    pub checks: BTreeMap<String, bool>,
    pub unverified_assumptions: Vec<String>,
    pub format_version: u32,
}

impl CertificateFile {
    pub fn from_certificate(cert: &AutomorphismCertificate) -> CertificateFile {
        CertificateFile {
            order: OrderRepr {
                minpoly: to_strings(cert.order.minpoly()),
            },
            n: cert.n.to_string(),
            alpha: AlphaRepr {
                coeffs: to_strings(cert.alpha.element().coeffs()),
                inverse: to_strings(cert.alpha.inverse().coeffs()),
                charpoly_constant: cert.alpha.charpoly_constant().to_string(),
            },
            exponents: ExponentsRepr {
                i: cert.i.to_string(),
                j: cert.j.to_string(),
            },
            f: to_strings(cert.f.coeffs()),
            g: to_strings(cert.g.coeffs()),
            sigma: cert
                .sigma
                .to_one_indexed()
                .iter()
                .map(usize::to_string)
                .collect(),
            matrix: cert
                .matrix
                .rows()
                .flat_map(|row| row.iter().map(|e| to_strings(e.coeffs())))
                .collect(),
            det: DetRepr {
                value: to_strings(cert.det_value.coeffs()),
                inverse: to_strings(cert.det_inverse.coeffs()),
            },
            checks: cert.flags.clone(),
            unverified_assumptions: cert.unverified_assumptions.clone(),
            format_version: FORMAT_VERSION,
        }
    }

    /// Structural validation and reconstruction of the domain objects.
    /// Semantic claims are re-checked separately by certificate
    /// verification.
    pub fn to_certificate(&self) -> Result<AutomorphismCertificate, Error> {
        check_version(self.format_version)?;
        let order = Order::new(parse_bigints(&self.order.minpoly)?)?;
        let n: usize = parse_plain(&self.n)?;
        if n < 2 {
            return Err(Error::InvalidCertificate("n must be at least 2".into()));
        }

        let alpha = UnitCertificate::from_parts(
            order.try_element(parse_bigints(&self.alpha.coeffs)?)?,
            order.try_element(parse_bigints(&self.alpha.inverse)?)?,
            parse_bigint(&self.alpha.charpoly_constant)?,
        )?;
        let i: u64 = parse_plain(&self.exponents.i)?;
        let j: u64 = parse_plain(&self.exponents.j)?;

        let f = order.try_element(parse_bigints(&self.f)?)?;
        let g = order.try_element(parse_bigints(&self.g)?)?;

        let sigma_images: Vec<usize> = self
            .sigma
            .iter()
            .map(|s| parse_plain::<usize>(s))
            .collect::<Result<_, _>>()?;
        let sigma = Permutation::from_one_indexed(&sigma_images)?;
        if sigma.len() != n {
            return Err(Error::InvalidCertificate(
                "sigma length does not match n".into(),
            ));
        }

        if self.matrix.len() != n * n {
            return Err(Error::InvalidCertificate(format!(
                "matrix must hold {} row-major entries, found {}",
                n * n,
                self.matrix.len()
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for row_cells in self.matrix.chunks(n) {
            let mut row = Vec::with_capacity(n);
            for cell in row_cells {
                row.push(order.try_element(parse_bigints(cell)?)?);
            }
            rows.push(row);
        }
        let matrix = OrderMatrix::from_rows(rows)?;

        let det_value = order.try_element(parse_bigints(&self.det.value)?)?;
        let det_inverse = order.try_element(parse_bigints(&self.det.inverse)?)?;

        Ok(AutomorphismCertificate {
            order,
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
            flags: self.checks.clone(),
            unverified_assumptions: self.unverified_assumptions.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<CertificateFile, Error> {
        let file: CertificateFile = serde_json::from_str(text)?;
        check_version(file.format_version)?;
        Ok(file)
    }
}

/// On-disk form of a matrix over an order: row-major serialized elements
/// plus the order descriptor.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub order: OrderRepr,
    pub n: String,
    pub entries: Vec<Vec<String>>,
    pub format_version: u32,
}

impl MatrixFile {
    pub fn from_matrix(matrix: &OrderMatrix) -> MatrixFile {
        MatrixFile {
            order: OrderRepr {
                minpoly: to_strings(matrix.order().minpoly()),
            },
            n: matrix.size().to_string(),
            entries: matrix
                .rows()
                .flat_map(|row| row.iter().map(|e| to_strings(e.coeffs())))
                .collect(),
            format_version: FORMAT_VERSION,
        }
    }

    pub fn to_matrix(&self) -> Result<OrderMatrix, Error> {
        check_version(self.format_version)?;
        let order = Order::new(parse_bigints(&self.order.minpoly)?)?;
        let n: usize = parse_plain(&self.n)?;
        if self.entries.len() != n * n {
            return Err(Error::InvalidCertificate(format!(
                "matrix must hold {} row-major entries, found {}",
                n * n,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for row_cells in self.entries.chunks(n) {
            let mut row = Vec::with_capacity(n);
            for cell in row_cells {
                row.push(order.try_element(parse_bigints(cell)?)?);
            }
            rows.push(row);
        }
        OrderMatrix::from_rows(rows)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<MatrixFile, Error> {
        let file: MatrixFile = serde_json::from_str(text)?;
        check_version(file.format_version)?;
        Ok(file)
    }
}

fn check_version(version: u32) -> Result<(), Error> {
    if version != FORMAT_VERSION {
        return Err(Error::InvalidCertificate(format!(
            "unsupported format_version {version}, expected {FORMAT_VERSION}"
        )));
    }
    Ok(())
}

fn to_strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn parse_bigint(text: &str) -> Result<BigInt, Error> {
    text.parse::<BigInt>()
        .map_err(|_| Error::ParseInt(text.to_string()))
}

fn parse_bigints(texts: &[String]) -> Result<Vec<BigInt>, Error> {
    texts.iter().map(|t| parse_bigint(t)).collect()
}

fn parse_plain<T: std::str::FromStr>(text: &str) -> Result<T, Error> {
    text.parse::<T>()
        .map_err(|_| Error::ParseInt(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{forge, verify_certificate, ForgeOptions};

    fn sample_certificate() -> AutomorphismCertificate {
        let order = Order::from_minpoly(&[-2, 0, 1]).unwrap();
        forge(&order, 2, &ForgeOptions::default()).unwrap()
    }

    #[test]
    fn certificate_round_trip() {
        let cert = sample_certificate();
        let file = CertificateFile::from_certificate(&cert);
        let json = file.to_json();
        let parsed = CertificateFile::from_json(&json).unwrap();
        let rebuilt = parsed.to_certificate().unwrap();
        assert_eq!(rebuilt.f, cert.f);
        assert_eq!(rebuilt.g, cert.g);
        assert_eq!(rebuilt.matrix, cert.matrix);
        assert_eq!(rebuilt.sigma, cert.sigma);
        assert_eq!((rebuilt.i, rebuilt.j), (cert.i, cert.j));
        assert!(verify_certificate(&rebuilt).passed());
    }

    #[test]
    fn serialization_is_deterministic() {
        let cert = sample_certificate();
        let a = CertificateFile::from_certificate(&cert).to_json();
        let b = CertificateFile::from_certificate(&cert).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn integers_travel_as_decimal_strings() {
        let cert = sample_certificate();
        let json = CertificateFile::from_certificate(&cert).to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["n"], "2");
        assert_eq!(value["exponents"]["i"], "3");
        assert_eq!(value["f"][0], "4");
        assert_eq!(value["det"]["value"][1], "12");
        assert_eq!(value["format_version"], 1);
    }

    #[test]
    fn version_is_required_and_checked() {
        let cert = sample_certificate();
        let mut file = CertificateFile::from_certificate(&cert);
        file.format_version = 2;
        let json = file.to_json();
        assert!(matches!(
            CertificateFile::from_json(&json),
            Err(Error::InvalidCertificate(_))
        ));

        let mut value: serde_json::Value =
            serde_json::from_str(&CertificateFile::from_certificate(&cert).to_json()).unwrap();
        value.as_object_mut().unwrap().remove("format_version");
        assert!(CertificateFile::from_json(&value.to_string()).is_err());
    }

    #[test]
    fn structural_tampering_is_rejected() {
        let cert = sample_certificate();
        // corrupting the alpha inverse breaks the unit certificate
        let mut file = CertificateFile::from_certificate(&cert);
        file.alpha.inverse = vec!["5".into(), "5".into()];
        assert!(matches!(
            file.to_certificate(),
            Err(Error::InvalidCertificate(_))
        ));

        let mut file = CertificateFile::from_certificate(&cert);
        file.sigma = vec!["1".into(), "1".into()];
        assert!(matches!(
            file.to_certificate(),
            Err(Error::InvalidPermutation)
        ));

        let mut file = CertificateFile::from_certificate(&cert);
        file.matrix.pop();
        assert!(file.to_certificate().is_err());
    }

    #[test]
    fn matrix_file_round_trip() {
        let cert = sample_certificate();
        let file = MatrixFile::from_matrix(&cert.matrix);
        let rebuilt = file.to_matrix().unwrap();
        assert_eq!(rebuilt, cert.matrix);
        let parsed = MatrixFile::from_json(&file.to_json()).unwrap();
        assert_eq!(parsed.to_matrix().unwrap(), cert.matrix);
    }
}
