//! Job configuration files: a ring, the two structure maps, and the
//! polynomials or degree to examine.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constructors::{
    formal_derivative, frobenius, galois_field, inner_automorphism, inner_derivation, matrix_ring,
    product, truncated_poly, zmod,
};
use crate::error::{Error, Result};
use crate::linalg::DEFAULT_ENUM_CAP;
use crate::ring::{check_commuting, FiniteRing, MapKind, StructureMap, ValidationReport};
use crate::skew::{SkewPolynomial, SkewRing, MAX_INVARIANCE_DEGREE};

/// A ring given by a constructor or by its structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Constructor(Constructor),
    Presentation(Presentation),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "ring", deny_unknown_fields)]
pub enum Constructor {
    Zmod { n: u64 },
    /// `F_p[w]/(modulus)`, coefficients low to high.
    #[serde(rename = "GF")]
    Gf { p: u64, modulus: Vec<i64> },
    TruncatedPoly { p: u64, e: usize },
    MatrixRing { base: Box<RingSpec>, n: usize },
    Product { factors: Vec<RingSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    pub characteristic: u64,
    pub rank: usize,
    pub one: Vec<i64>,
    pub mul: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// `"identity"`, `"zero"`, `"frobenius"`, `"formal_derivative"`, a matrix
/// whose column `j` is the image of `e_j`, or an inner map by a unit `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Named(String),
    Matrix { matrix: Vec<Vec<i64>> },
    Inner { inner: Vec<i64> },
}

/// Polynomial coefficients low to high. With `monic_degree` the leading `1`
/// is implied and `coeffs` (if present) lists `a_0, ..., a_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolySpec {
    #[serde(default)]
    pub coeffs: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monic_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub ring: RingSpec,
    #[serde(default = "identity_spec")]
    pub rho: MapSpec,
    #[serde(default = "zero_spec")]
    pub d: MapSpec,
    #[serde(default)]
    pub polynomials: Vec<PolySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_enum: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
}

fn identity_spec() -> MapSpec {
    MapSpec::Named("identity".into())
}

fn zero_spec() -> MapSpec {
    MapSpec::Named("zero".into())
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn max_enum(&self) -> u128 {
        self.max_enum.unwrap_or(DEFAULT_ENUM_CAP)
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree.unwrap_or(MAX_INVARIANCE_DEGREE).min(MAX_INVARIANCE_DEGREE)
    }

    /// Builds the ring and both maps without validating the axioms.
    pub fn resolve(&self) -> Result<Resolved> {
        let ring = self.ring.build()?;
        let rho = self.rho.build(&ring, MapKind::Automorphism, None)?;
        let d = self.d.build(&ring, MapKind::Derivation, Some(&rho))?;
        Ok(Resolved { ring, rho, d })
    }
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Presentation(p) => {
                FiniteRing::new(p.characteristic, p.rank, p.one.clone(), p.mul.clone(), p.labels.clone())
            }
            RingSpec::Constructor(c) => match c {
                Constructor::Zmod { n } => zmod(*n),
                Constructor::Gf { p, modulus } => galois_field(*p, modulus),
                Constructor::TruncatedPoly { p, e } => truncated_poly(*p, *e),
                Constructor::MatrixRing { base, n } => matrix_ring(&base.build()?, *n),
                Constructor::Product { factors } => {
                    let rings = factors.iter().map(RingSpec::build).collect::<Result<Vec<_>>>()?;
                    product(&rings)
                }
            },
        }
    }
}

impl MapSpec {
    fn build(&self, ring: &FiniteRing, kind: MapKind, rho: Option<&StructureMap>) -> Result<StructureMap> {
        let element = |coords: &[i64]| {
            ring.element(coords).map_err(|e| Error::Config(format!("inner element: {e}")))
        };
        match (self, kind) {
            (MapSpec::Named(name), MapKind::Automorphism) => match name.as_str() {
                "identity" | "id" => Ok(StructureMap::identity(ring)),
                "frobenius" => frobenius(ring),
                other => Err(Error::Config(format!("unknown automorphism {other:?}"))),
            },
            (MapSpec::Named(name), MapKind::Derivation) => match name.as_str() {
                "zero" | "0" => Ok(StructureMap::zero(ring)),
                "formal_derivative" | "d/dt" => Ok(formal_derivative(ring)),
                other => Err(Error::Config(format!("unknown derivation {other:?}"))),
            },
            (MapSpec::Matrix { matrix }, _) => StructureMap::from_matrix(ring, kind, matrix),
            (MapSpec::Inner { inner }, MapKind::Automorphism) => {
                inner_automorphism(ring, &element(inner)?)
            }
            (MapSpec::Inner { inner }, MapKind::Derivation) => {
                let rho = rho.expect("derivations are built after rho");
                Ok(inner_derivation(ring, rho, &element(inner)?))
            }
        }
    }
}

impl PolySpec {
    pub fn build(&self, ctx: &Arc<SkewRing>, max_degree: usize) -> Result<SkewPolynomial> {
        let ring = ctx.ring();
        let mut coeffs = self
            .coeffs
            .iter()
            .map(|c| ring.element(c))
            .collect::<Result<Vec<_>>>()?;
        if let Some(m) = self.monic_degree {
            if coeffs.len() > m {
                return Err(Error::Config(format!(
                    "monic_degree {m} takes at most {m} lower coefficients, got {}",
                    coeffs.len()
                )));
            }
            coeffs.resize(m, ring.zero());
            coeffs.push(ring.one());
        }
        let f = SkewPolynomial::new(ctx, coeffs)?;
        match f.degree() {
            Some(d) if d > max_degree => Err(Error::DegreeCap { degree: d, cap: max_degree }),
            _ => Ok(f),
        }
    }
}

/// A ring with candidate maps, not yet checked.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub ring: FiniteRing,
    pub rho: StructureMap,
    pub d: StructureMap,
}

/// Axiom checks on a resolved configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationSummary {
    pub passed: bool,
    pub ring: ValidationReport,
    pub rho: Option<ValidationReport>,
    pub d: Option<ValidationReport>,
    pub rho_d_commute: Option<bool>,
}

impl Resolved {
    /// Each check runs only if the ones it depends on passed.
    pub fn validate(&self) -> ValidationSummary {
        let ring = self.ring.validate();
        let rho = ring.passed().then(|| self.rho.validate_automorphism(&self.ring));
        let rho_ok = rho.as_ref().is_some_and(ValidationReport::passed);
        let d = rho_ok.then(|| self.d.validate_derivation(&self.ring, &self.rho));
        let d_ok = d.as_ref().is_some_and(ValidationReport::passed);
        let rho_d_commute = d_ok.then(|| check_commuting(&self.rho, &self.d));
        ValidationSummary { passed: d_ok, ring, rho, d, rho_d_commute }
    }

    pub fn into_context(self) -> Result<Arc<SkewRing>> {
        SkewRing::new(self.ring, self.rho, self.d)
    }
}

/// A self-contained description of a validated context, sufficient to
/// rebuild it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextDescriptor {
    pub fingerprint: String,
    pub ring: Presentation,
    pub rho: Vec<Vec<u64>>,
    pub d: Vec<Vec<u64>>,
}

impl ContextDescriptor {
    pub fn of(ctx: &SkewRing) -> Self {
        let r = ctx.ring();
        let to_i64 = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<i64>>();
        let mul = r
            .table()
            .iter()
            .map(|row| row.iter().map(|v| to_i64(v)).collect())
            .collect();
        ContextDescriptor {
            fingerprint: ctx.fingerprint().to_string(),
            ring: Presentation {
                characteristic: r.characteristic(),
                rank: r.rank(),
                one: to_i64(r.one().coords()),
                mul,
                labels: Some(r.labels().to_vec()),
            },
            rho: ctx.rho().matrix(),
            d: ctx.derivation().matrix(),
        }
    }

    pub fn rebuild(&self) -> Result<Arc<SkewRing>> {
        let ring = RingSpec::Presentation(self.ring.clone()).build()?;
        let signed = |m: &[Vec<u64>]| -> Vec<Vec<i64>> {
            m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
        };
        let rho = StructureMap::from_matrix(&ring, MapKind::Automorphism, &signed(&self.rho))?;
        let d = StructureMap::from_matrix(&ring, MapKind::Derivation, &signed(&self.d))?;
        let ctx = SkewRing::new(ring, rho, d)?;
        if ctx.fingerprint() != self.fingerprint {
            return Err(Error::ContextMismatch);
        }
        Ok(ctx)
    }

    /// Hash of the context, the degree, the cap and the library version.
    pub fn cache_key(&self, degree: usize, cap: u128) -> String {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(self).expect("serializable"));
        h.update(degree.to_le_bytes());
        h.update(cap.to_le_bytes());
        h.update(env!("CARGO_PKG_VERSION").as_bytes());
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_and_named_maps() {
        let cfg = JobConfig::from_json(
            r#"{"ring": {"ring": "GF", "p": 2, "modulus": [1, 1, 1]}, "rho": "frobenius"}"#,
        )
        .unwrap();
        let summary = cfg.resolve().unwrap().validate();
        assert!(summary.passed);
        assert_eq!(summary.rho_d_commute, Some(true));
    }

    #[test]
    fn singular_matrix_is_not_bijective() {
        let cfg = JobConfig::from_json(
            r#"{"ring": {"ring": "GF", "p": 2, "modulus": [1, 1, 1]}, "rho": {"matrix": [[1, 0], [0, 0]]}}"#,
        )
        .unwrap();
        let summary = cfg.resolve().unwrap().validate();
        assert!(!summary.passed);
        let failure = summary.rho.unwrap().first_failure().unwrap().to_string();
        assert!(failure.contains("not bijective"), "{failure}");
    }

    #[test]
    fn raw_presentation_round_trips_through_descriptor() {
        let cfg = JobConfig::from_json(
            r#"{"ring": {"characteristic": 2, "rank": 2, "one": [1, 0],
                "mul": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]}, "d": "d/dt"}"#,
        )
        .unwrap();
        let ctx = cfg.resolve().unwrap().into_context().unwrap();
        let desc = ContextDescriptor::of(&ctx);
        assert!(desc.rebuild().unwrap().same_context(&ctx));
    }

    #[test]
    fn monic_degree_fills_in_the_leading_one() {
        let cfg = JobConfig::from_json(r#"{"ring": {"ring": "Zmod", "n": 2}}"#).unwrap();
        let ctx = cfg.resolve().unwrap().into_context().unwrap();
        let spec = PolySpec { coeffs: vec![vec![1]], monic_degree: Some(2) };
        assert_eq!(spec.build(&ctx, 8).unwrap().to_string(), "X^2 + 1");
        let too_big = PolySpec { coeffs: vec![], monic_degree: Some(9) };
        assert!(matches!(too_big.build(&ctx, 8), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn malformed_json_reports_location() {
        let err = JobConfig::from_json("{\"ring\": \n  {\"ring\": \"Zmod\", \"n\": }").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
