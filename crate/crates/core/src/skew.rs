//! Skew polynomials `B[X; rho, D]` with `a X = X rho(a) + D(a)`.
//!
//! Polynomials are stored in right-coefficient normal form `sum_i X^i b_i`.
//! Iterating the degree-one law is the reference semantics; the closed
//! binomial expansions are used only when `rho` and `D` commute, and are
//! checked against the iterated law in the tests.

use std::fmt;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{self, Submodule};
use crate::ring::{check_commuting, FiniteRing, MapKind, RingElement, StructureMap};

/// Largest degree produced by polynomial arithmetic.
pub const MAX_ARITH_DEGREE: usize = 16;
/// Largest degree accepted by the invariance tests.
pub const MAX_INVARIANCE_DEGREE: usize = 8;

/// Binomial coefficients `C(n, k) mod c` for `n <= max` via Pascal's rule.
pub fn binomial_table(max: usize, c: u64) -> Vec<Vec<u64>> {
    let mut t: Vec<Vec<u64>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![0u64; n + 1];
        row[0] = 1 % c;
        row[n] = 1 % c;
        for k in 1..n {
            row[k] = linalg::add_mod(t[n - 1][k - 1], t[n - 1][k], c);
        }
        t.push(row);
    }
    t
}

/// The data `(B, rho, D)` of a skew polynomial ring, validated.
#[derive(Debug)]
pub struct SkewRing {
    ring: FiniteRing,
    rho: StructureMap,
    d: StructureMap,
    commuting: bool,
    fingerprint: String,
    binom: Vec<Vec<u64>>,
    rho_pows: Vec<StructureMap>,
    rho_inv_pows: Vec<StructureMap>,
    d_pows: Vec<StructureMap>,
}

impl SkewRing {
    /// Validates the ring, `rho` as an automorphism and `d` as a
    /// `rho`-derivation.
    pub fn new(ring: FiniteRing, rho: StructureMap, d: StructureMap) -> Result<Arc<Self>> {
        if rho.rank() != ring.rank() || d.rank() != ring.rank() {
            return Err(Error::Structural("structure maps do not match the ring rank".into()));
        }
        let report = ring.validate();
        if let Some(f) = report.first_failure() {
            return Err(Error::InvalidMap(format!("base ring: {f}")));
        }
        let report = rho.validate_automorphism(&ring);
        if let Some(f) = report.first_failure() {
            return Err(Error::InvalidMap(format!("rho: {f}")));
        }
        let report = d.validate_derivation(&ring, &rho);
        if let Some(f) = report.first_failure() {
            return Err(Error::InvalidMap(format!("D: {f}")));
        }
        let rho_inv = rho.inverse().expect("validated automorphism is invertible");
        let c = ring.characteristic();
        let top = MAX_ARITH_DEGREE + 1;
        let powers = |m: &StructureMap| {
            let mut v = vec![m.pow(0)];
            for i in 1..=top {
                let next = m.compose(&v[i - 1]);
                v.push(next);
            }
            v
        };
        let commuting = check_commuting(&rho, &d);
        let fingerprint = fingerprint(&ring, &rho, &d);
        Ok(Arc::new(SkewRing {
            binom: binomial_table(top, c),
            rho_pows: powers(&rho),
            rho_inv_pows: powers(&rho_inv),
            d_pows: powers(&d),
            ring,
            rho,
            d,
            commuting,
            fingerprint,
        }))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn rho(&self) -> &StructureMap {
        &self.rho
    }

    pub fn derivation(&self) -> &StructureMap {
        &self.d
    }

    /// Whether `rho D = D rho`.
    pub fn is_commuting(&self) -> bool {
        self.commuting
    }

    /// Content hash of the ring table and both maps.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn same_context(&self, other: &SkewRing) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    pub fn binom(&self, n: usize, k: usize) -> u64 {
        self.binom[n][k]
    }

    pub fn rho_pow(&self, e: usize) -> &StructureMap {
        &self.rho_pows[e]
    }

    pub fn rho_inv_pow(&self, e: usize) -> &StructureMap {
        &self.rho_inv_pows[e]
    }

    pub fn d_pow(&self, e: usize) -> &StructureMap {
        &self.d_pows[e]
    }

    /// `B^rho`.
    pub fn fixed_subring(&self) -> Submodule {
        self.rho.fixed_subring()
    }

    /// `B^D`.
    pub fn constants(&self) -> Submodule {
        self.d.kernel_submodule()
    }

    /// `B^{rho,D}`.
    pub fn fixed_constants(&self) -> Submodule {
        self.fixed_subring().intersect(&self.constants())
    }

    /// Center of `B^{rho,D}`.
    pub fn center_of_fixed_constants(&self) -> Submodule {
        self.ring.center_of(&self.fixed_constants())
    }

    /// `a X^j` in right normal form by applying `b X = X rho(b) + D(b)` `j` times.
    pub fn pass_left_iterated(&self, a: &RingElement, j: usize) -> Vec<RingElement> {
        let r = &self.ring;
        let mut coeffs = vec![a.clone()];
        for _ in 0..j {
            let mut next = vec![r.zero(); coeffs.len() + 1];
            for (i, b) in coeffs.iter().enumerate() {
                next[i + 1] = r.add(&next[i + 1], &self.rho.apply(b));
                next[i] = r.add(&next[i], &self.d.apply(b));
            }
            coeffs = next;
        }
        coeffs
    }

    /// `a X^j = sum_i C(j,i) X^i rho^i D^{j-i}(a)`, valid when `rho D = D rho`.
    pub fn pass_left_closed(&self, a: &RingElement, j: usize) -> Result<Vec<RingElement>> {
        if !self.commuting {
            return Err(Error::Precondition("closed expansion needs rho D = D rho".into()));
        }
        let r = &self.ring;
        Ok((0..=j)
            .map(|i| {
                let t = self.rho_pows[i].apply(&self.d_pows[j - i].apply(a));
                r.scale(&t, self.binom[j][i])
            })
            .collect())
    }

    /// Right coefficients of `a X^j`.
    pub fn pass_left(&self, a: &RingElement, j: usize) -> Vec<RingElement> {
        if self.commuting && j <= MAX_ARITH_DEGREE {
            self.pass_left_closed(a, j).expect("commuting")
        } else {
            self.pass_left_iterated(a, j)
        }
    }

    /// Left coefficients `c_i` of `X^j a = sum_i c_i X^i`, by iterating
    /// `X b = rho^{-1}(b) X - D(rho^{-1}(b))`.
    pub fn right_commute_iterated(&self, j: usize, a: &RingElement) -> Vec<RingElement> {
        let r = &self.ring;
        let rho_inv = &self.rho_inv_pows[1];
        let mut coeffs = vec![a.clone()];
        for _ in 0..j {
            let mut next = vec![r.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                let b = rho_inv.apply(c);
                next[i] = r.sub(&next[i], &self.d.apply(&b));
                next[i + 1] = r.add(&next[i + 1], &b);
            }
            coeffs = next;
        }
        coeffs
    }

    /// `X^j a = sum_i (-1)^{j-i} C(j,i) rho^{-j} D^{j-i}(a) X^i`, valid when
    /// `rho D = D rho`.
    pub fn right_commute_closed(&self, j: usize, a: &RingElement) -> Result<Vec<RingElement>> {
        if !self.commuting {
            return Err(Error::Precondition("closed expansion needs rho D = D rho".into()));
        }
        let r = &self.ring;
        Ok((0..=j)
            .map(|i| {
                let t = self.rho_inv_pows[j].apply(&self.d_pows[j - i].apply(a));
                let t = r.scale(&t, self.binom[j][i]);
                if (j - i) % 2 == 1 {
                    r.neg(&t)
                } else {
                    t
                }
            })
            .collect())
    }

    /// Left coefficients of `X^j a`.
    pub fn right_commute(&self, j: usize, a: &RingElement) -> Vec<RingElement> {
        if self.commuting && j <= MAX_ARITH_DEGREE {
            self.right_commute_closed(j, a).expect("commuting")
        } else {
            self.right_commute_iterated(j, a)
        }
    }
}

fn fingerprint(ring: &FiniteRing, rho: &StructureMap, d: &StructureMap) -> String {
    let mut h = Sha256::new();
    h.update(ring.characteristic().to_le_bytes());
    h.update((ring.rank() as u64).to_le_bytes());
    for x in ring.one().coords() {
        h.update(x.to_le_bytes());
    }
    for row in ring.table().iter().flatten() {
        for x in row {
            h.update(x.to_le_bytes());
        }
    }
    for m in [rho, d] {
        for img in m.images() {
            for x in img.coords() {
                h.update(x.to_le_bytes());
            }
        }
    }
    let digest = h.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// `p = sum_i X^i b_i` over a [`SkewRing`].
#[derive(Clone)]
pub struct SkewPolynomial {
    ctx: Arc<SkewRing>,
    coeffs: Vec<RingElement>,
}

impl fmt::Debug for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewPolynomial").field("coeffs", &self.coeffs).finish()
    }
}

impl PartialEq for SkewPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_context(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for SkewPolynomial {}

impl SkewPolynomial {
    /// From right coefficients, low to high; trailing zeros are trimmed.
    pub fn new(ctx: &Arc<SkewRing>, coeffs: Vec<RingElement>) -> Result<Self> {
        let k = ctx.ring().rank();
        if coeffs.iter().any(|c| c.coords().len() != k) {
            return Err(Error::Structural(format!("coefficients must have {k} coordinates")));
        }
        let p = Self::from_raw(ctx, coeffs);
        match p.degree() {
            Some(d) if d > MAX_ARITH_DEGREE => Err(Error::DegreeCap { degree: d, cap: MAX_ARITH_DEGREE }),
            _ => Ok(p),
        }
    }

    fn from_raw(ctx: &Arc<SkewRing>, mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        SkewPolynomial { ctx: Arc::clone(ctx), coeffs }
    }

    /// `X^m + sum_{i<m} X^i a_i`.
    pub fn monic(ctx: &Arc<SkewRing>, lower: Vec<RingElement>) -> Result<Self> {
        let mut coeffs = lower;
        coeffs.push(ctx.ring().one());
        Self::new(ctx, coeffs)
    }

    pub fn zero(ctx: &Arc<SkewRing>) -> Self {
        SkewPolynomial { ctx: Arc::clone(ctx), coeffs: Vec::new() }
    }

    pub fn constant(ctx: &Arc<SkewRing>, a: RingElement) -> Self {
        Self::from_raw(ctx, vec![a])
    }

    /// `X^j b`.
    pub fn monomial(ctx: &Arc<SkewRing>, j: usize, b: RingElement) -> Self {
        let mut coeffs = vec![ctx.ring().zero(); j];
        coeffs.push(b);
        Self::from_raw(ctx, coeffs)
    }

    pub fn x(ctx: &Arc<SkewRing>) -> Self {
        Self::monomial(ctx, 1, ctx.ring().one())
    }

    /// `sum_i c_i X^i` from left coefficients.
    pub fn from_left_coeffs(ctx: &Arc<SkewRing>, left: &[RingElement]) -> Result<Self> {
        let r = ctx.ring();
        let mut acc = vec![r.zero(); left.len()];
        for (i, c) in left.iter().enumerate() {
            for (l, b) in ctx.pass_left(c, i).iter().enumerate() {
                acc[l] = r.add(&acc[l], b);
            }
        }
        Self::new(ctx, acc)
    }

    /// Left coefficients `c_i` with `self = sum_i c_i X^i`.
    pub fn to_left_coeffs(&self) -> Vec<RingElement> {
        let r = self.ctx.ring();
        let mut acc = vec![r.zero(); self.coeffs.len()];
        for (i, b) in self.coeffs.iter().enumerate() {
            for (l, c) in self.ctx.right_commute(i, b).iter().enumerate() {
                acc[l] = r.add(&acc[l], c);
            }
        }
        acc
    }

    pub fn context(&self) -> &Arc<SkewRing> {
        &self.ctx
    }

    /// Right coefficients, low to high, without trailing zeros.
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.ring().zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == self.ctx.ring().one())
    }

    fn check(&self, other: &SkewPolynomial) -> Result<()> {
        if self.ctx.same_context(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &SkewPolynomial) -> Result<SkewPolynomial> {
        self.check(other)?;
        let r = self.ctx.ring();
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| r.add(&self.coeff(i), &other.coeff(i))).collect();
        Ok(Self::from_raw(&self.ctx, coeffs))
    }

    pub fn sub(&self, other: &SkewPolynomial) -> Result<SkewPolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SkewPolynomial {
        let r = self.ctx.ring();
        Self::from_raw(&self.ctx, self.coeffs.iter().map(|c| r.neg(c)).collect())
    }

    /// `self * b` for a scalar `b` on the right.
    pub fn mul_scalar_right(&self, b: &RingElement) -> SkewPolynomial {
        let r = self.ctx.ring();
        Self::from_raw(&self.ctx, self.coeffs.iter().map(|c| r.mul(c, b)).collect())
    }

    pub fn mul(&self, other: &SkewPolynomial) -> Result<SkewPolynomial> {
        self.check(other)?;
        let (Some(dp), Some(dq)) = (self.degree(), other.degree()) else {
            return Ok(Self::zero(&self.ctx));
        };
        if dp + dq > MAX_ARITH_DEGREE {
            return Err(Error::DegreeCap { degree: dp + dq, cap: MAX_ARITH_DEGREE });
        }
        let r = self.ctx.ring();
        let mut out = vec![r.zero(); dp + dq + 1];
        // X^i b_i X^j c_j = X^i (b_i X^j) c_j
        for (i, b) in self.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (j, c) in other.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (l, beta) in self.ctx.pass_left(b, j).iter().enumerate() {
                    out[i + l] = r.add(&out[i + l], &r.mul(beta, c));
                }
            }
        }
        Ok(Self::from_raw(&self.ctx, out))
    }

    /// `(q, r)` with `self = f q + r` and `deg r < deg f`, for monic `f`.
    pub fn div_rem_left(&self, f: &SkewPolynomial) -> Result<(SkewPolynomial, SkewPolynomial)> {
        self.check(f)?;
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let m = f.degree().expect("monic is nonzero");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx);
        while let Some(n) = rem.degree().filter(|&n| n >= m) {
            let term = Self::monomial(&self.ctx, n - m, rem.coeffs[n].clone());
            rem = rem.sub(&f.mul(&term)?)?;
            quot = quot.add(&term)?;
        }
        Ok((quot, rem))
    }

    /// `(q, r)` with `self = q f + r` and `deg r < deg f`, for monic `f`.
    pub fn div_rem_right(&self, f: &SkewPolynomial) -> Result<(SkewPolynomial, SkewPolynomial)> {
        self.check(f)?;
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        let m = f.degree().expect("monic is nonzero");
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx);
        while let Some(n) = rem.degree().filter(|&n| n >= m) {
            // b' X^m = X^m rho^m(b') + lower, so take b' = rho^{-m}(b)
            let b = self.ctx.rho_inv_pow(m).apply(&rem.coeffs[n]);
            let term = Self::monomial(&self.ctx, n - m, b);
            rem = rem.sub(&term.mul(f)?)?;
            quot = quot.add(&term)?;
        }
        Ok((quot, rem))
    }
}

impl fmt::Display for SkewPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let r = self.ctx.ring();
        let mut terms = Vec::new();
        for (i, b) in self.coeffs.iter().enumerate().rev() {
            if b.is_zero() {
                continue;
            }
            let x = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            let c = r.format(b);
            let one = *b == r.one();
            terms.push(match (x.is_empty(), one) {
                (true, _) => c,
                (false, true) => x,
                (false, false) if c.contains(' ') => format!("{x}({c})"),
                (false, false) => format!("{x}*{c}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Which defining identity of an invariant polynomial fails.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvarianceFailure {
    /// `e_basis f != f rho^m(e_basis)`.
    Scalar { basis: usize },
    /// `X f != f (X - rho(a_{m-1}) + a_{m-1})`.
    XIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub failure: Option<InvarianceFailure>,
}

fn require_invariance_shape(f: &SkewPolynomial) -> Result<usize> {
    let m = match f.degree() {
        Some(m) if m >= 1 && f.is_monic() => m,
        _ => return Err(Error::NotMonic),
    };
    if m > MAX_INVARIANCE_DEGREE {
        return Err(Error::DegreeCap { degree: m, cap: MAX_INVARIANCE_DEGREE });
    }
    Ok(m)
}

/// Tests `a f = f rho^m(a)` for every basis element `a` and
/// `X f = f (X - rho(a_{m-1}) + a_{m-1})`.
pub fn is_invariant_direct(f: &SkewPolynomial) -> Result<InvarianceReport> {
    let m = require_invariance_shape(f)?;
    let ctx = f.context();
    let r = ctx.ring();
    for a in 0..r.rank() {
        let e = r.basis(a);
        let lhs = SkewPolynomial::constant(ctx, e.clone()).mul(f)?;
        let rhs = f.mul_scalar_right(&ctx.rho_pow(m).apply(&e));
        if lhs != rhs {
            return Ok(InvarianceReport {
                invariant: false,
                failure: Some(InvarianceFailure::Scalar { basis: a }),
            });
        }
    }
    let top = f.coeff(m - 1);
    let shift = r.sub(&top, &ctx.rho().apply(&top));
    let factor = SkewPolynomial::x(ctx).add(&SkewPolynomial::constant(ctx, shift))?;
    let lhs = SkewPolynomial::x(ctx).mul(f)?;
    let rhs = f.mul(&factor)?;
    if lhs != rhs {
        return Ok(InvarianceReport { invariant: false, failure: Some(InvarianceFailure::XIdentity) });
    }
    Ok(InvarianceReport { invariant: true, failure: None })
}

/// Per-condition outcome of the coefficientwise invariance test.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientwiseReport {
    /// `(i, basis)` pairs where `a_i rho^m(a) = sum_j C(j,i) rho^i D^{j-i}(a) a_j` fails.
    pub scalar_failures: Vec<(usize, usize)>,
    /// `i` in `1..m` where `D(a_i) = a_{i-1} - rho(a_{i-1}) + a_i (rho(a_{m-1}) - a_{m-1})` fails.
    pub shift_failures: Vec<usize>,
    /// Whether `D(a_0) = a_0 (rho(a_{m-1}) - a_{m-1})` holds.
    pub constant_term_holds: bool,
}

impl CoefficientwiseReport {
    pub fn invariant(&self) -> bool {
        self.scalar_failures.is_empty() && self.shift_failures.is_empty() && self.constant_term_holds
    }
}

/// Invariance via conditions on the coefficients `a_i` alone, for contexts
/// with `rho D = D rho`.
///
/// The twist in the scalar condition is `rho^i`, which is what iterating the
/// defining law produces for `a X^j`; the sign of the `a_i` correction in the
/// shift condition is the one obtained by comparing coefficients of
/// `X f` and `f (X - rho(a_{m-1}) + a_{m-1})`.
pub fn is_invariant_coefficientwise(f: &SkewPolynomial) -> Result<CoefficientwiseReport> {
    let m = require_invariance_shape(f)?;
    let ctx = f.context();
    if !ctx.is_commuting() {
        return Err(Error::Precondition(
            "coefficientwise invariance test needs rho D = D rho; use the direct test".into(),
        ));
    }
    let r = ctx.ring();
    let a: Vec<RingElement> = (0..=m).map(|i| f.coeff(i)).collect();
    let mut report = CoefficientwiseReport::default();

    for i in 0..m {
        for basis in 0..r.rank() {
            let alpha = r.basis(basis);
            let lhs = r.mul(&a[i], &ctx.rho_pow(m).apply(&alpha));
            let mut rhs = r.zero();
            for (j, aj) in a.iter().enumerate().skip(i) {
                let t = ctx.rho_pow(i).apply(&ctx.d_pow(j - i).apply(&alpha));
                let t = r.scale(&t, ctx.binom(j, i));
                rhs = r.add(&rhs, &r.mul(&t, aj));
            }
            if lhs != rhs {
                report.scalar_failures.push((i, basis));
            }
        }
    }

    let shift = r.sub(&ctx.rho().apply(&a[m - 1]), &a[m - 1]);
    for i in 1..m {
        let lhs = ctx.derivation().apply(&a[i]);
        let rhs = r.add(
            &r.sub(&a[i - 1], &ctx.rho().apply(&a[i - 1])),
            &r.mul(&a[i], &shift),
        );
        if lhs != rhs {
            report.shift_failures.push(i);
        }
    }
    report.constant_term_holds = ctx.derivation().apply(&a[0]) == r.mul(&a[0], &shift);
    Ok(report)
}

/// A monic polynomial of degree `m >= 1` generating a two-sided ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPolynomial(SkewPolynomial);

impl InvariantPolynomial {
    pub fn new(f: SkewPolynomial) -> Result<Self> {
        let report = is_invariant_direct(&f)?;
        match report.failure {
            None => Ok(InvariantPolynomial(f)),
            Some(failure) => Err(Error::Precondition(format!(
                "polynomial {f} is not invariant ({failure:?})"
            ))),
        }
    }

    pub fn poly(&self) -> &SkewPolynomial {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("invariant polynomials are monic")
    }

    /// `a_0, ..., a_m` with `a_m = 1`.
    pub fn coeffs(&self) -> &[RingElement] {
        self.0.coeffs()
    }

    pub fn context(&self) -> &Arc<SkewRing> {
        self.0.context()
    }

    /// Whether every coefficient lies in `B^rho`.
    pub fn coeffs_in_fixed_subring(&self) -> bool {
        let fixed = self.context().fixed_subring();
        self.coeffs().iter().all(|a| fixed.contains(a.coords()))
    }
}

/// Outcome of the coefficient-containment check for invariant polynomials
/// with coefficients in `B^rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterContainmentReport {
    /// Center of `B^{rho,D}`.
    pub center: Submodule,
    /// Indices `i < m` with `a_i` outside the center.
    pub outside_center: Vec<usize>,
    /// `(i, basis)` where
    /// `a a_i = sum_{j>=i} (-1)^{j-i} C(j,i) a_j rho^{m-j} D^{j-i}(a)` fails.
    pub identity_failures: Vec<(usize, usize)>,
}

impl CenterContainmentReport {
    pub fn passed(&self) -> bool {
        self.outside_center.is_empty() && self.identity_failures.is_empty()
    }
}

/// Checks that the coefficients of `f` lie in the center of `B^{rho,D}` and
/// satisfy the commutation identity with every basis element.
pub fn check_center_containment(f: &InvariantPolynomial) -> Result<CenterContainmentReport> {
    let ctx = f.context();
    if !ctx.is_commuting() {
        return Err(Error::Precondition("needs rho D = D rho".into()));
    }
    if !f.coeffs_in_fixed_subring() {
        return Err(Error::Precondition("coefficients must lie in B^rho".into()));
    }
    let r = ctx.ring();
    let m = f.degree();
    let a = f.coeffs();
    let center = ctx.center_of_fixed_constants();
    let outside_center = (0..m).filter(|&i| !center.contains(a[i].coords())).collect();
    let mut identity_failures = Vec::new();
    for i in 0..=m {
        for basis in 0..r.rank() {
            let alpha = r.basis(basis);
            let lhs = r.mul(&alpha, &a[i]);
            let mut rhs = r.zero();
            for j in i..=m {
                let t = ctx.rho_pow(m - j).apply(&ctx.d_pow(j - i).apply(&alpha));
                let t = r.scale(&r.mul(&a[j], &t), ctx.binom(j, i));
                rhs = if (j - i) % 2 == 1 { r.sub(&rhs, &t) } else { r.add(&rhs, &t) };
            }
            if lhs != rhs {
                identity_failures.push((i, basis));
            }
        }
    }
    Ok(CenterContainmentReport { center, outside_center, identity_failures })
}

/// Convenience for building a [`SkewRing`] with `D = 0`.
pub fn automorphism_type(ring: FiniteRing, rho: StructureMap) -> Result<Arc<SkewRing>> {
    let d = StructureMap::zero(&ring);
    SkewRing::new(ring, rho, d)
}

/// Convenience for building a [`SkewRing`] with `rho = id`.
pub fn derivation_type(ring: FiniteRing, d: StructureMap) -> Result<Arc<SkewRing>> {
    if d.kind() != MapKind::Derivation {
        return Err(Error::InvalidMap("expected a derivation".into()));
    }
    let rho = StructureMap::identity(&ring);
    SkewRing::new(ring, rho, d)
}

/// Every monic polynomial of degree `m`, ordered lexicographically by
/// `(a_0, ..., a_{m-1})`. Refuses when `|B|^m` exceeds `cap`.
pub fn all_monic(ctx: &Arc<SkewRing>, m: usize, cap: u128) -> Result<Vec<SkewPolynomial>> {
    let r = ctx.ring();
    let count = r
        .order()
        .and_then(|o| o.checked_pow(m as u32))
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::EnumerationCap {
            size: format!("{}^{m}", r.order().map_or("?".into(), |o| o.to_string())),
            cap,
        })?;
    let elems = r.elements(cap)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut idx = vec![0usize; m];
    loop {
        let lower: Vec<RingElement> = idx.iter().map(|&i| elems[i].clone()).collect();
        out.push(SkewPolynomial::monic(ctx, lower)?);
        // odometer with a_{m-1} fastest, so a_0 is most significant
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn el(ctx: &Arc<SkewRing>, c: &[i64]) -> RingElement {
        ctx.ring().element(c).unwrap()
    }

    fn poly(ctx: &Arc<SkewRing>, coeffs: &[&[i64]]) -> SkewPolynomial {
        SkewPolynomial::new(ctx, coeffs.iter().map(|c| el(ctx, c)).collect()).unwrap()
    }

    #[test]
    fn binomials_mod_c() {
        let t = binomial_table(6, 4);
        assert_eq!(t[4], vec![1, 0, 2, 0, 1]);
        assert_eq!(t[6][3], 0);
        assert_eq!(binomial_table(5, 3)[5][2], 1);
    }

    #[test]
    fn pass_left_examples() {
        let ctx = corpus::dual_numbers_ddt();
        let t = el(&ctx, &[0, 1]);
        // t X = X t + 1
        assert_eq!(ctx.pass_left_iterated(&t, 1), vec![el(&ctx, &[1, 0]), t.clone()]);
        // t X^2 = X^2 t in characteristic 2
        assert_eq!(
            ctx.pass_left(&t, 2),
            vec![ctx.ring().zero(), ctx.ring().zero(), t.clone()]
        );
        let ctx = corpus::f4_frobenius();
        let w = el(&ctx, &[0, 1]);
        let out = ctx.pass_left(&w, 2);
        assert_eq!(out[2], w);
        assert!(out[0].is_zero() && out[1].is_zero());
    }

    #[test]
    fn products() {
        let ctx = corpus::dual_numbers_ddt();
        let p = poly(&ctx, &[&[0, 1], &[1, 0]]); // X + t
        assert_eq!(p.mul(&p).unwrap(), poly(&ctx, &[&[1, 0], &[0, 0], &[1, 0]]));
        let one = SkewPolynomial::constant(&ctx, ctx.ring().one());
        assert_eq!(p.mul(&one).unwrap(), p);
        assert!(p.mul(&SkewPolynomial::zero(&ctx)).unwrap().is_zero());

        let ctx = corpus::f4_frobenius();
        let xw = SkewPolynomial::monomial(&ctx, 1, el(&ctx, &[0, 1]));
        // (X w)(X w) = X^2 rho(w) w = X^2 w^3 = X^2
        assert_eq!(xw.mul(&xw).unwrap(), SkewPolynomial::monomial(&ctx, 2, ctx.ring().one()));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = SkewPolynomial::x(&corpus::zmod_plain(2));
        let b = SkewPolynomial::x(&corpus::zmod_plain(3));
        assert!(matches!(a.mul(&b), Err(Error::ContextMismatch)));
        assert!(matches!(a.add(&b), Err(Error::ContextMismatch)));
    }

    #[test]
    fn degree_cap() {
        let ctx = corpus::zmod_plain(2);
        let p = SkewPolynomial::monomial(&ctx, 9, ctx.ring().one());
        assert!(matches!(p.mul(&p), Err(Error::DegreeCap { degree: 18, cap: 16 })));
        let coeffs = vec![ctx.ring().one(); 18];
        assert!(SkewPolynomial::new(&ctx, coeffs).is_err());
    }

    #[test]
    fn right_commute_examples() {
        let ctx = corpus::dual_numbers_ddt();
        let t = el(&ctx, &[0, 1]);
        // X t = t X - D(t) = t X + 1
        assert_eq!(ctx.right_commute(1, &t), vec![el(&ctx, &[1, 0]), t.clone()]);
        assert_eq!(ctx.right_commute_iterated(1, &t), ctx.right_commute(1, &t));
        let one = ctx.ring().one();
        let left = ctx.right_commute(3, &one);
        assert_eq!(left[3], one);
        assert!(left[..3].iter().all(RingElement::is_zero));

        let ctx = corpus::f4_frobenius();
        let w = el(&ctx, &[0, 1]);
        let left = ctx.right_commute(2, &w);
        assert_eq!(left[2], ctx.rho_inv_pow(2).apply(&w));
        let back = SkewPolynomial::from_left_coeffs(&ctx, &left).unwrap();
        assert_eq!(back, SkewPolynomial::monomial(&ctx, 2, w));
    }

    #[test]
    fn closed_forms_refuse_noncommuting_context() {
        let ctx = corpus::f4_noncommuting();
        assert!(!ctx.is_commuting());
        let w = el(&ctx, &[0, 1]);
        assert!(ctx.pass_left_closed(&w, 2).is_err());
        assert!(ctx.right_commute_closed(2, &w).is_err());
        // the dispatching versions fall back to the iterated law
        assert_eq!(ctx.pass_left(&w, 3), ctx.pass_left_iterated(&w, 3));
    }

    #[test]
    fn invariance_examples() {
        let ctx = corpus::zmod_plain(2);
        let f = poly(&ctx, &[&[1], &[1], &[1]]);
        assert!(is_invariant_direct(&f).unwrap().invariant);
        assert!(is_invariant_coefficientwise(&f).unwrap().invariant());

        let ctx = corpus::f4_frobenius();
        let f = poly(&ctx, &[&[1, 0], &[0, 0], &[1, 0]]);
        assert!(is_invariant_direct(&f).unwrap().invariant);

        let ctx = corpus::dual_numbers_ddt();
        let f = poly(&ctx, &[&[0, 0], &[0, 1], &[1, 0]]); // X^2 + X t
        let direct = is_invariant_direct(&f).unwrap();
        assert!(!direct.invariant);
        let cw = is_invariant_coefficientwise(&f).unwrap();
        assert!(!cw.invariant());
        assert!(cw.shift_failures.contains(&1));

        let f = poly(&ctx, &[&[0, 0], &[0, 0], &[1, 0]]); // X^2
        assert!(is_invariant_direct(&f).unwrap().invariant);
        assert!(is_invariant_coefficientwise(&f).unwrap().invariant());
    }

    #[test]
    fn invariance_rejects_non_monic() {
        let ctx = corpus::zmod_plain(3);
        let f = poly(&ctx, &[&[1], &[2]]);
        assert!(matches!(is_invariant_direct(&f), Err(Error::NotMonic)));
        let c = poly(&ctx, &[&[1]]);
        assert!(matches!(is_invariant_direct(&c), Err(Error::NotMonic)));
        let big = SkewPolynomial::monomial(&ctx, 9, ctx.ring().one());
        assert!(matches!(is_invariant_direct(&big), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn coefficientwise_refuses_noncommuting() {
        let ctx = corpus::f4_noncommuting();
        let f = SkewPolynomial::monic(&ctx, vec![ctx.ring().zero()]).unwrap();
        assert!(matches!(is_invariant_coefficientwise(&f), Err(Error::Precondition(_))));
    }

    #[test]
    fn center_containment_examples() {
        let ctx = corpus::f4_frobenius();
        let f = InvariantPolynomial::new(poly(&ctx, &[&[1, 0], &[0, 0], &[1, 0]])).unwrap();
        let report = check_center_containment(&f).unwrap();
        assert!(report.passed());
        assert_eq!(report.center.order(), Some(2));

        let ctx = corpus::dual_numbers_ddt();
        let f = InvariantPolynomial::new(poly(&ctx, &[&[0, 0], &[0, 0], &[1, 0]])).unwrap();
        assert!(check_center_containment(&f).unwrap().passed());

        let ctx = corpus::zmod_plain(4);
        for f in all_monic(&ctx, 2, 1000).unwrap() {
            let f = InvariantPolynomial::new(f).unwrap();
            let report = check_center_containment(&f).unwrap();
            assert!(report.passed());
            assert_eq!(report.center.order(), Some(4));
        }
    }

    #[test]
    fn center_containment_needs_fixed_coefficients() {
        let ctx = corpus::f9_frobenius_inner();
        let fixed = ctx.fixed_subring();
        assert!(!fixed.contains(ctx.ring().basis(1).coords()));
        for f in all_monic(&ctx, 1, 100).unwrap() {
            if let Ok(inv) = InvariantPolynomial::new(f) {
                let in_fixed = fixed.contains(inv.coeffs()[0].coords());
                assert_eq!(check_center_containment(&inv).is_ok(), in_fixed);
            }
        }
        let ctx = corpus::f4_plain();
        let f = InvariantPolynomial::new(poly(&ctx, &[&[0, 1], &[1, 0]])).unwrap();
        assert!(check_center_containment(&f).unwrap().passed());
    }

    #[test]
    fn division_identities() {
        let ctx = corpus::dual_numbers_ddt();
        let f = poly(&ctx, &[&[0, 0], &[0, 0], &[1, 0]]);
        let p = poly(&ctx, &[&[1, 1], &[0, 1], &[1, 0], &[0, 1], &[1, 1]]);
        let (q, r) = p.div_rem_left(&f).unwrap();
        assert_eq!(f.mul(&q).unwrap().add(&r).unwrap(), p);
        assert!(r.degree().is_none_or(|d| d < 2));
        let (q, r) = p.div_rem_right(&f).unwrap();
        assert_eq!(q.mul(&f).unwrap().add(&r).unwrap(), p);
        assert!(r.degree().is_none_or(|d| d < 2));
    }

    #[test]
    fn all_monic_counts_and_order() {
        let ctx = corpus::zmod_plain(2);
        let polys = all_monic(&ctx, 2, 100).unwrap();
        assert_eq!(polys.len(), 4);
        assert_eq!(polys[1].to_string(), "X^2 + X");
        assert!(matches!(all_monic(&ctx, 20, 1000), Err(Error::EnumerationCap { .. })));
    }

    #[test]
    fn display() {
        let ctx = corpus::dual_numbers_ddt();
        assert_eq!(poly(&ctx, &[&[1, 1], &[0, 1], &[1, 0]]).to_string(), "X^2 + X*t + 1 + t");
        assert_eq!(SkewPolynomial::zero(&ctx).to_string(), "0");
    }
}
