//! Separability and Hirata separability of `A = B[X; rho, D] / f B[X; rho, D]`
//! over `B`.
//!
//! The criteria in terms of `V_0` and `V_{m-1}` run for every invariant `f`.
//! The definitional searches in `A ⊗_B A` run only where the tensor normal
//! form exists, and serve as independent oracles there.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::solve_combination;
use crate::quotient::{separability_sum, Assumptions, QuotientElement, QuotientRing, QuotientRingExt};
use crate::skew::{is_invariant_coefficientwise, is_invariant_direct, InvariantPolynomial, SkewPolynomial};
use crate::tensor::{TensorElement, TensorSquare, TensorSquareExt};

/// `h` in `V_{m-1}` with `sum_j y_j h x^j = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityWitness {
    pub h: QuotientElement,
}

/// Pairs `(g_i, h_i)` in `V_0 x V_{m-1}` with `sum_i g_i x^k h_i` equal to
/// `1` for `k = m-1` and `0` for `k < m-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirataWitness {
    pub pairs: Vec<(QuotientElement, QuotientElement)>,
}

/// Pairs `(g_i, mu_i)` with `g_i` in `V_0`, `mu_i` in the centralizer of `A`
/// in `A ⊗_B A`, and `sum_i g_i mu_i = sum_i mu_i g_i = 1 ⊗ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorHirataWitness {
    pub pairs: Vec<(QuotientElement, TensorElement)>,
}

/// Either kind of witness, for [`verify_witness`].
#[derive(Clone, Debug)]
pub enum Witness<'a> {
    Separable(&'a SeparabilityWitness),
    Hirata(&'a HirataWitness),
}

/// Decides separability from `V_{m-1}`, returning the lexicographically
/// least `h`.
pub fn separable_by_criterion(a: &Arc<QuotientRing>) -> Option<SeparabilityWitness> {
    let one = a.one().coords();
    let top = a.top_twisted_centralizer();
    let image = |v: &[u64]| separability_sum(&a.from_coords(v)).expect("ctx").coords();
    top.least_preimage(a.dim(), image, &one)
        .map(|h| SeparabilityWitness { h: a.from_coords(&h) })
}

/// Searches the centralizer of `A` in `A ⊗_B A` for `mu` with
/// `mult_map(mu) = 1`.
pub fn separable_by_definition(t: &Arc<TensorSquare>) -> Option<TensorElement> {
    let a = t.quotient();
    let one = a.one().coords();
    let centralizer = t.centralizer();
    let image = |v: &[u64]| t.from_coords(v).mult_map().coords();
    centralizer.least_preimage(a.dim(), image, &one).map(|mu| t.from_coords(&mu))
}

/// Greedy support reduction: drops generator indices one at a time while the
/// target stays reachable, returning the final lexicographically least
/// coefficients.
fn sparse_combination(modulus: u64, ambient: usize, rows: &[Vec<u64>], target: &[u64]) -> Option<Vec<u64>> {
    let mut lambda = solve_combination(modulus, ambient, rows, target)?.particular;
    let zero = vec![0; ambient];
    let mut allowed: Vec<bool> = lambda.iter().map(|&l| l != 0).collect();
    for i in 0..rows.len() {
        if !allowed[i] {
            continue;
        }
        allowed[i] = false;
        let masked: Vec<Vec<u64>> = rows
            .iter()
            .zip(&allowed)
            .map(|(r, &ok)| if ok { r.clone() } else { zero.clone() })
            .collect();
        match solve_combination(modulus, ambient, &masked, target) {
            Some(sol) => {
                lambda = sol.particular;
                for (ok, &l) in allowed.iter_mut().zip(&lambda) {
                    *ok &= l != 0;
                }
            }
            None => allowed[i] = true,
        }
    }
    Some(lambda)
}

/// `(g x^0 h, ..., g x^{m-1} h)` flattened.
fn power_profile(a: &Arc<QuotientRing>, g: &QuotientElement, h: &QuotientElement) -> Vec<u64> {
    (0..a.degree())
        .flat_map(|k| g.mul(&a.x_power(k)).expect("ctx").mul(h).expect("ctx").coords())
        .collect()
}

/// Elements that can be combined into merged witness pairs.
trait Factor: Clone {
    fn scaled(&self, s: u64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn vanishes(&self) -> bool;
}

impl Factor for QuotientElement {
    fn scaled(&self, s: u64) -> Self {
        self.mul_scalar_right(&self.context().skew().ring().integer(s as i64))
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("ctx")
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Factor for TensorElement {
    fn scaled(&self, s: u64) -> Self {
        let a = self.context().quotient();
        self.left_mul(&a.embed(&a.skew().ring().integer(s as i64))).expect("ctx")
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("ctx")
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// `sum_b lambda_b * items[b]` over the nonzero coefficients, if any.
fn weighted_sum<T: Factor>(terms: impl Iterator<Item = (u64, T)>) -> Option<T> {
    terms
        .filter(|(l, _)| *l != 0)
        .map(|(l, t)| t.scaled(l))
        .reduce(|acc, t| acc.plus(&t))
        .filter(|t| !t.vanishes())
}

/// Groups `sum_{ab} lambda_ab (g_a, h_b)` into pairs sharing a left factor or
/// a right factor, whichever gives fewer pairs, by bilinearity.
fn merge_pairs<L: Factor, R: Factor>(lambda: &[u64], left: &[L], right: &[R]) -> Vec<(L, R)> {
    let nr = right.len();
    let by_left: Vec<(L, R)> = left
        .iter()
        .enumerate()
        .filter_map(|(a, g)| {
            weighted_sum((0..nr).map(|b| (lambda[a * nr + b], right[b].clone())))
                .map(|h| (g.clone(), h))
        })
        .collect();
    let by_right: Vec<(L, R)> = right
        .iter()
        .enumerate()
        .filter_map(|(b, h)| {
            weighted_sum(left.iter().enumerate().map(|(a, g)| (lambda[a * nr + b], g.clone())))
                .map(|g| (g, h.clone()))
        })
        .collect();
    if by_right.len() < by_left.len() {
        by_right
    } else {
        by_left
    }
}

/// Decides Hirata separability from `V_0` and `V_{m-1}`.
///
/// The sums `sum_i (g_i x^k h_i)_k` form the `Z/c`-span of the profiles of
/// generator pairs, so the decision is a span membership test.
pub fn hirata_by_criterion(a: &Arc<QuotientRing>) -> Option<HirataWitness> {
    let m = a.degree();
    let n = a.dim();
    let gs: Vec<QuotientElement> = a.base_centralizer().rows().iter().map(|r| a.from_coords(r)).collect();
    let hs: Vec<QuotientElement> = a.top_twisted_centralizer().rows().iter().map(|r| a.from_coords(r)).collect();
    let rows: Vec<Vec<u64>> = gs
        .iter()
        .flat_map(|g| hs.iter().map(move |h| (g, h)))
        .map(|(g, h)| power_profile(a, g, h))
        .collect();
    let mut target = vec![0; n * m];
    target[n * (m - 1)..].copy_from_slice(&a.one().coords());
    let lambda = sparse_combination(a.characteristic(), n * m, &rows, &target)?;
    Some(HirataWitness { pairs: merge_pairs(&lambda, &gs, &hs) })
}

/// Searches for `g_i` in `V_0` and centralizing `mu_i` with
/// `sum_i g_i mu_i = sum_i mu_i g_i = 1 ⊗ 1`.
pub fn hirata_by_definition(t: &Arc<TensorSquare>) -> Option<TensorHirataWitness> {
    let a = t.quotient();
    let gs: Vec<QuotientElement> = a.base_centralizer().rows().iter().map(|r| a.from_coords(r)).collect();
    let mus: Vec<TensorElement> = t.centralizer().rows().iter().map(|r| t.from_coords(r)).collect();
    let rows: Vec<Vec<u64>> = gs
        .iter()
        .flat_map(|g| mus.iter().map(move |mu| (g, mu)))
        .map(|(g, mu)| {
            let mut v = mu.left_mul(g).expect("ctx").coords();
            v.extend(mu.right_mul(g).expect("ctx").coords());
            v
        })
        .collect();
    let one = t.one().coords();
    let target: Vec<u64> = one.iter().chain(&one).copied().collect();
    let lambda = sparse_combination(a.characteristic(), 2 * t.dim(), &rows, &target)?;
    Some(TensorHirataWitness { pairs: merge_pairs(&lambda, &gs, &mus) })
}

/// Re-checks a witness with plain arithmetic in `A`, including membership of
/// every factor in its centralizer.
pub fn verify_witness(a: &Arc<QuotientRing>, w: Witness<'_>) -> bool {
    let m = a.degree();
    match w {
        Witness::Separable(s) => {
            s.h.context().same_context(a)
                && a.twisted_centralizer_failure(m - 1, &s.h).is_none()
                && separability_sum(&s.h).is_ok_and(|v| v == a.one())
        }
        Witness::Hirata(hw) => {
            let members = hw.pairs.iter().all(|(g, h)| {
                g.context().same_context(a)
                    && h.context().same_context(a)
                    && a.twisted_centralizer_failure(0, g).is_none()
                    && a.twisted_centralizer_failure(m - 1, h).is_none()
            });
            members
                && (0..m).all(|k| {
                    let expected = if k == m - 1 { a.one() } else { a.zero() };
                    sum_with_middle(a, &hw.pairs, &a.x_power(k)) == expected
                })
        }
    }
}

/// `sum_i g_i * middle * h_i`.
fn sum_with_middle(
    a: &Arc<QuotientRing>,
    pairs: &[(QuotientElement, QuotientElement)],
    middle: &QuotientElement,
) -> QuotientElement {
    pairs.iter().fold(a.zero(), |acc, (g, h)| {
        acc.add(&g.mul(middle).expect("ctx").mul(h).expect("ctx")).expect("ctx")
    })
}

/// The same conditions in the `y`-basis: `sum_i g_i y_0 h_i = 1` and
/// `sum_i g_i y_k h_i = 0` for `k >= 1`.
pub fn yx_conversion_check(a: &Arc<QuotientRing>, w: &HirataWitness) -> bool {
    a.y_elements().iter().enumerate().all(|(k, y)| {
        let expected = if k == 0 { a.one() } else { a.zero() };
        sum_with_middle(a, &w.pairs, y) == expected
    })
}

/// Checks a definitional witness: factors centralize, and both products give `1 ⊗ 1`.
pub fn verify_tensor_witness(t: &Arc<TensorSquare>, w: &TensorHirataWitness) -> bool {
    let a = t.quotient();
    let centralizer = t.centralizer();
    let members = w.pairs.iter().all(|(g, mu)| {
        a.twisted_centralizer_failure(0, g).is_none() && centralizer.contains(&mu.coords())
    });
    let mut left = t.zero();
    let mut right = t.zero();
    for (g, mu) in &w.pairs {
        left = left.add(&mu.left_mul(g).expect("ctx")).expect("ctx");
        right = right.add(&mu.right_mul(g).expect("ctx")).expect("ctx");
    }
    members && left == t.one() && right == t.one()
}

/// A verdict that may be undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "true",
            Verdict::No => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::Yes => s.serialize_bool(true),
            Verdict::No => s.serialize_bool(false),
            Verdict::Unknown => s.serialize_str("unknown"),
        }
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bool(bool),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Bool(b) => Ok(Verdict::from_bool(b)),
            Raw::Str(s) if s == "unknown" => Ok(Verdict::Unknown),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("unknown verdict {s:?}"))),
        }
    }
}

/// Whether each definitional oracle agreed with its criterion; `None` where
/// the oracle does not apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAgreement {
    pub separable: Option<bool>,
    pub hirata: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceTests {
    pub direct: bool,
    /// `None` when `rho D != D rho`.
    pub coefficientwise: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub g: Vec<Vec<u64>>,
    pub h: Vec<Vec<u64>>,
}

pub const EQUIVALENCE_PROVEN: &str = "criterion and definition are equivalent under the stated assumptions";
pub const EQUIVALENCE_UNPROVEN: &str = "criterion-only, equivalence unproven here";

/// Full outcome for one polynomial. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    /// Coordinate vectors of `a_0, ..., a_m`.
    pub coeffs: Vec<Vec<u64>>,
    pub polynomial: String,
    pub invariant: bool,
    pub invariance_tests: InvarianceTests,
    pub separable: Verdict,
    pub hirata: Verdict,
    pub witness_h: Option<Vec<Vec<u64>>>,
    pub witness_pairs: Option<Vec<WitnessPair>>,
    pub oracle_agreement: OracleAgreement,
    pub assumptions: Assumptions,
    pub equivalence: Option<String>,
}

/// Runs invariance tests, both criteria, and (where they apply) both
/// definitional oracles. Every returned witness has been re-verified.
pub fn decide(f: &SkewPolynomial) -> Result<DecisionReport> {
    let ctx = f.context();
    let direct = is_invariant_direct(f)?.invariant;
    let coefficientwise = if ctx.is_commuting() {
        Some(is_invariant_coefficientwise(f)?.invariant())
    } else {
        None
    };
    let fixed = ctx.fixed_subring();
    let assumptions = Assumptions {
        rho_d_commute: ctx.is_commuting(),
        coeffs_in_b_rho: f.coeffs().iter().all(|c| fixed.contains(c.coords())),
    };
    let mut report = DecisionReport {
        coeffs: f.coeffs().iter().map(|c| c.coords().to_vec()).collect(),
        polynomial: f.to_string(),
        invariant: direct,
        invariance_tests: InvarianceTests { direct, coefficientwise },
        separable: Verdict::Unknown,
        hirata: Verdict::Unknown,
        witness_h: None,
        witness_pairs: None,
        oracle_agreement: OracleAgreement { separable: None, hirata: None },
        assumptions,
        equivalence: None,
    };
    if !direct {
        return Ok(report);
    }
    let a = QuotientRing::new(InvariantPolynomial::new(f.clone())?);
    let sep = separable_by_criterion(&a);
    let hir = hirata_by_criterion(&a);
    if let Some(w) = &sep {
        if !verify_witness(&a, Witness::Separable(w)) {
            return Err(Error::Structural(format!("separability witness for {f} failed verification")));
        }
    }
    if let Some(w) = &hir {
        if !verify_witness(&a, Witness::Hirata(w)) || !yx_conversion_check(&a, w) {
            return Err(Error::Structural(format!("Hirata witness for {f} failed verification")));
        }
    }
    report.separable = Verdict::from_bool(sep.is_some());
    report.hirata = Verdict::from_bool(hir.is_some());
    report.witness_h = sep.map(|w| w.h.coeff_vectors());
    report.witness_pairs = hir.map(|w| {
        w.pairs
            .iter()
            .map(|(g, h)| WitnessPair { g: g.coeff_vectors(), h: h.coeff_vectors() })
            .collect()
    });
    if assumptions.hold() {
        let t = TensorSquare::new(&a)?;
        let sep_def = separable_by_definition(&t);
        let hir_def = hirata_by_definition(&t);
        if let Some(w) = &hir_def {
            if !verify_tensor_witness(&t, w) {
                return Err(Error::Structural(format!("tensor witness for {f} failed verification")));
            }
        }
        report.oracle_agreement = OracleAgreement {
            separable: Some(sep_def.is_some() == report.separable.is_yes()),
            hirata: Some(hir_def.is_some() == report.hirata.is_yes()),
        };
        report.equivalence = Some(EQUIVALENCE_PROVEN.into());
    } else {
        report.equivalence = Some(EQUIVALENCE_UNPROVEN.into());
    }
    Ok(report)
}
