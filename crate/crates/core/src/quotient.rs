//! The residue ring `A = B[X; rho, D] / f B[X; rho, D]` of an invariant
//! polynomial `f`, with elements in the right `B`-basis `1, x, ..., x^{m-1}`.

use std::fmt;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::Submodule;
use crate::ring::RingElement;
use crate::skew::{InvariantPolynomial, SkewPolynomial, SkewRing};

pub struct QuotientRing {
    f: InvariantPolynomial,
    m: usize,
    fingerprint: String,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientRing({})", self.f.poly())
    }
}

impl QuotientRing {
    pub fn new(f: InvariantPolynomial) -> Arc<Self> {
        let m = f.degree();
        let mut h = Sha256::new();
        h.update(f.context().fingerprint().as_bytes());
        for c in f.coeffs() {
            for x in c.coords() {
                h.update(x.to_le_bytes());
            }
        }
        let fingerprint = h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect();
        Arc::new(QuotientRing { f, m, fingerprint })
    }

    pub fn skew(&self) -> &Arc<SkewRing> {
        self.f.context()
    }

    pub fn modulus_poly(&self) -> &InvariantPolynomial {
        &self.f
    }

    /// `m = deg f`.
    pub fn degree(&self) -> usize {
        self.m
    }

    /// Rank of `A` as a free `Z/c`-module, `k * m`.
    pub fn dim(&self) -> usize {
        self.m * self.skew().ring().rank()
    }

    pub fn characteristic(&self) -> u64 {
        self.skew().ring().characteristic()
    }

    /// Content hash of the base context and `f`.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn same_context(&self, other: &QuotientRing) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    /// Which of the hypotheses behind the tensor normal form hold.
    pub fn assumptions(&self) -> Assumptions {
        Assumptions {
            rho_d_commute: self.skew().is_commuting(),
            coeffs_in_b_rho: self.f.coeffs_in_fixed_subring(),
        }
    }

    /// `a_i`, with `a_m = 1`.
    pub fn a(&self, i: usize) -> RingElement {
        self.f.poly().coeff(i)
    }
}

/// `rho D = D rho` and `f` has coefficients in `B^rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Assumptions {
    pub rho_d_commute: bool,
    pub coeffs_in_b_rho: bool,
}

impl Assumptions {
    pub fn hold(&self) -> bool {
        self.rho_d_commute && self.coeffs_in_b_rho
    }
}

/// Operations that hand out elements need the shared handle.
pub trait QuotientRingExt {
    fn element(&self, coeffs: Vec<RingElement>) -> Result<QuotientElement>;
    fn reduce(&self, p: &SkewPolynomial) -> Result<QuotientElement>;
    fn zero(&self) -> QuotientElement;
    fn one(&self) -> QuotientElement;
    fn embed(&self, a: &RingElement) -> QuotientElement;
    fn x(&self) -> QuotientElement;
    fn x_power(&self, k: usize) -> QuotientElement;
    /// `x^j b`.
    fn monomial(&self, j: usize, b: &RingElement) -> QuotientElement;
    fn from_coords(&self, coords: &[u64]) -> QuotientElement;
    /// `y_0, ..., y_{m-1}` with `y_j = x^{m-j-1} + x^{m-j-2} a_{m-1} + ... + a_{j+1}`.
    fn y_elements(&self) -> Vec<QuotientElement>;
    /// `{h : rho^e(a) h = h a for all a in B}` as a submodule of coordinates.
    fn twisted_centralizer(&self, e: usize) -> Submodule;
    /// `V_0`, the centralizer of `B` in `A`.
    fn base_centralizer(&self) -> Submodule;
    /// `V_{m-1}`.
    fn top_twisted_centralizer(&self) -> Submodule;
    /// First basis element `e_a` with `rho^e(e_a) h != h e_a`.
    fn twisted_centralizer_failure(&self, e: usize, h: &QuotientElement) -> Option<usize>;
    /// Reads an element, refusing one written for another context.
    fn from_json(&self, json: &QuotientElementJson) -> Result<QuotientElement>;
}

impl QuotientRingExt for Arc<QuotientRing> {
    fn element(&self, coeffs: Vec<RingElement>) -> Result<QuotientElement> {
        let k = self.skew().ring().rank();
        if coeffs.len() != self.m || coeffs.iter().any(|c| c.coords().len() != k) {
            return Err(Error::Structural(format!(
                "quotient elements have {} coefficients of {k} coordinates",
                self.m
            )));
        }
        Ok(QuotientElement { ctx: Arc::clone(self), coeffs })
    }

    fn reduce(&self, p: &SkewPolynomial) -> Result<QuotientElement> {
        if !p.context().same_context(self.skew()) {
            return Err(Error::ContextMismatch);
        }
        let (_, r) = p.div_rem_left(self.f.poly())?;
        let coeffs = (0..self.m).map(|i| r.coeff(i)).collect();
        Ok(QuotientElement { ctx: Arc::clone(self), coeffs })
    }

    fn zero(&self) -> QuotientElement {
        let z = self.skew().ring().zero();
        QuotientElement { ctx: Arc::clone(self), coeffs: vec![z; self.m] }
    }

    fn one(&self) -> QuotientElement {
        self.embed(&self.skew().ring().one())
    }

    fn embed(&self, a: &RingElement) -> QuotientElement {
        let mut e = self.zero();
        e.coeffs[0] = a.clone();
        e
    }

    fn x(&self) -> QuotientElement {
        self.x_power(1)
    }

    fn x_power(&self, k: usize) -> QuotientElement {
        self.monomial(k, &self.skew().ring().one())
    }

    fn monomial(&self, j: usize, b: &RingElement) -> QuotientElement {
        if j < self.m {
            let mut e = self.zero();
            e.coeffs[j] = b.clone();
            return e;
        }
        // multiply by x one step at a time so intermediate degrees stay at most m
        let one = self.skew().ring().one();
        let x = self
            .reduce(&SkewPolynomial::monomial(self.skew(), 1, one.clone()))
            .expect("same context");
        let mut acc = self.embed(&one);
        for _ in 0..j {
            acc = acc.mul(&x).expect("same context");
        }
        acc.mul(&self.embed(b)).expect("same context")
    }

    fn from_coords(&self, coords: &[u64]) -> QuotientElement {
        let ring = self.skew().ring();
        let k = ring.rank();
        assert_eq!(coords.len(), k * self.m, "coordinate length");
        let coeffs = coords.chunks(k).map(|c| ring.from_coords(c.to_vec())).collect();
        QuotientElement { ctx: Arc::clone(self), coeffs }
    }

    fn y_elements(&self) -> Vec<QuotientElement> {
        let m = self.m;
        (0..m)
            .map(|j| {
                let mut y = self.zero();
                // y_j = sum_{l=0}^{m-j-1} x^l a_{j+1+l}
                for l in 0..(m - j) {
                    y.coeffs[l] = self.a(j + 1 + l);
                }
                y
            })
            .collect()
    }

    fn twisted_centralizer(&self, e: usize) -> Submodule {
        let ring = self.skew().ring();
        let k = ring.rank();
        let n = self.dim();
        let left: Vec<QuotientElement> =
            (0..k).map(|a| self.embed(&self.skew().rho_pow(e).apply(&ring.basis(a)))).collect();
        let right: Vec<QuotientElement> = (0..k).map(|a| self.embed(&ring.basis(a))).collect();
        let full = Submodule::full(ring.characteristic(), n);
        full.kernel_of(n * k, |v| {
            let h = self.from_coords(v);
            left.iter()
                .zip(&right)
                .flat_map(|(l, r)| {
                    let d = l.mul(&h).expect("ctx").sub(&h.mul(r).expect("ctx")).expect("ctx");
                    d.coords()
                })
                .collect()
        })
    }

    fn base_centralizer(&self) -> Submodule {
        self.twisted_centralizer(0)
    }

    fn top_twisted_centralizer(&self) -> Submodule {
        self.twisted_centralizer(self.m - 1)
    }

    fn twisted_centralizer_failure(&self, e: usize, h: &QuotientElement) -> Option<usize> {
        let ring = self.skew().ring();
        (0..ring.rank()).find(|&a| {
            let alpha = ring.basis(a);
            let l = self.embed(&self.skew().rho_pow(e).apply(&alpha));
            let r = self.embed(&alpha);
            l.mul(h).expect("ctx") != h.mul(&r).expect("ctx")
        })
    }

    fn from_json(&self, json: &QuotientElementJson) -> Result<QuotientElement> {
        if json.context != self.fingerprint {
            return Err(Error::ContextMismatch);
        }
        let ring = self.skew().ring();
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| {
                let c: Vec<i64> = c.iter().map(|&x| x as i64).collect();
                ring.element(&c)
            })
            .collect::<Result<_>>()?;
        self.element(coeffs)
    }
}

/// Serialized form of a [`QuotientElement`], tagged with its context hash.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct QuotientElementJson {
    pub context: String,
    pub coeffs: Vec<Vec<u64>>,
}

/// `sum_j x^j b_j` in `A`.
#[derive(Clone)]
pub struct QuotientElement {
    ctx: Arc<QuotientRing>,
    coeffs: Vec<RingElement>,
}

impl PartialEq for QuotientElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_context(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for QuotientElement {}

impl fmt::Debug for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientElement({self})")
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.lift().to_string();
        write!(f, "{}", s.replace('X', "x"))
    }
}

impl QuotientElement {
    pub fn context(&self) -> &Arc<QuotientRing> {
        &self.ctx
    }

    /// Right coefficients `b_0, ..., b_{m-1}`.
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &RingElement {
        &self.coeffs[j]
    }

    /// Concatenated coordinates of `b_0, ..., b_{m-1}`.
    pub fn coords(&self) -> Vec<u64> {
        self.coeffs.iter().flat_map(|c| c.coords().iter().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    pub fn to_json(&self) -> QuotientElementJson {
        QuotientElementJson {
            context: self.ctx.fingerprint.clone(),
            coeffs: self.coeff_vectors(),
        }
    }

    /// Coordinate vectors of `b_0, ..., b_{m-1}`.
    pub fn coeff_vectors(&self) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|c| c.coords().to_vec()).collect()
    }

    /// The representative of degree `< m` in `B[X; rho, D]`.
    pub fn lift(&self) -> SkewPolynomial {
        SkewPolynomial::new(self.ctx.skew(), self.coeffs.clone()).expect("degree below m")
    }

    fn check(&self, other: &QuotientElement) -> Result<()> {
        if self.ctx.same_context(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.check(other)?;
        let r = self.ctx.skew().ring();
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| r.add(a, b)).collect();
        Ok(QuotientElement { ctx: Arc::clone(&self.ctx), coeffs })
    }

    pub fn sub(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuotientElement {
        let r = self.ctx.skew().ring();
        let coeffs = self.coeffs.iter().map(|a| r.neg(a)).collect();
        QuotientElement { ctx: Arc::clone(&self.ctx), coeffs }
    }

    pub fn mul(&self, other: &QuotientElement) -> Result<QuotientElement> {
        self.check(other)?;
        let p = self.lift().mul(&other.lift())?;
        self.ctx.reduce(&p)
    }

    /// `self * b` for `b` in `B`.
    pub fn mul_scalar_right(&self, b: &RingElement) -> QuotientElement {
        let r = self.ctx.skew().ring();
        let coeffs = self.coeffs.iter().map(|c| r.mul(c, b)).collect();
        QuotientElement { ctx: Arc::clone(&self.ctx), coeffs }
    }
}

/// `sum_j y_j h x^j`.
pub fn separability_sum(h: &QuotientElement) -> Result<QuotientElement> {
    let ctx = h.context();
    let mut acc = ctx.zero();
    for (j, y) in ctx.y_elements().iter().enumerate() {
        acc = acc.add(&y.mul(h)?.mul(&ctx.x_power(j))?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn quotient(ctx: &Arc<SkewRing>, lower: &[&[i64]]) -> Arc<QuotientRing> {
        let r = ctx.ring();
        let lower = lower.iter().map(|c| r.element(c).unwrap()).collect();
        let f = SkewPolynomial::monic(ctx, lower).unwrap();
        QuotientRing::new(InvariantPolynomial::new(f).unwrap())
    }

    #[test]
    fn reduce_examples() {
        let a = quotient(&corpus::zmod_plain(2), &[&[1], &[1]]);
        let x2 = SkewPolynomial::monomial(a.skew(), 2, a.skew().ring().one());
        assert_eq!(a.reduce(&x2).unwrap().to_string(), "x + 1");
        assert!(a.reduce(a.modulus_poly().poly()).unwrap().is_zero());

        let b = quotient(&corpus::f4_frobenius(), &[&[1, 0], &[0, 0]]);
        let x2 = SkewPolynomial::monomial(b.skew(), 2, b.skew().ring().one());
        assert_eq!(b.reduce(&x2).unwrap(), b.one());
    }

    #[test]
    fn weyl_relation_in_dual_numbers() {
        let a = quotient(&corpus::dual_numbers_ddt(), &[&[0, 0], &[0, 0]]);
        let t = a.embed(&a.skew().ring().basis(1));
        let xt = a.x().mul(&t).unwrap();
        let tx = t.mul(&a.x()).unwrap();
        assert_eq!(xt.coords(), vec![0, 0, 0, 1]);
        assert_eq!(tx.coords(), vec![1, 0, 0, 1]);
    }

    #[test]
    fn x_power_m_is_the_reduction() {
        let a = quotient(&corpus::zmod_plain(3), &[&[2], &[1]]);
        let expected = a.element(vec![a.skew().ring().integer(-2), a.skew().ring().integer(-1)]);
        assert_eq!(a.x_power(2), expected.unwrap());
    }

    #[test]
    fn y_elements_and_recurrences() {
        let a = quotient(&corpus::zmod_plain(2), &[&[1], &[1]]);
        let y = a.y_elements();
        assert_eq!(y[0].to_string(), "x + 1");
        assert_eq!(y[1], a.one());
        let x = a.x();
        assert_eq!(x.mul(&y[1]).unwrap(), y[0].sub(&a.embed(&a.a(1))).unwrap());
        assert_eq!(x.mul(&y[0]).unwrap(), a.embed(&a.a(0)).neg());
    }

    #[test]
    fn centralizers_of_frobenius_quotient() {
        let a = quotient(&corpus::f4_frobenius(), &[&[1, 0], &[0, 0]]);
        let base_c = a.base_centralizer();
        let v1 = a.top_twisted_centralizer();
        assert_eq!(base_c.order(), Some(4));
        assert_eq!(v1.order(), Some(4));
        for v in base_c.rows() {
            assert!(v[2..].iter().all(|&c| c == 0));
        }
        for v in v1.rows() {
            assert!(v[..2].iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn centralizer_of_weyl_quotient_is_base() {
        let a = quotient(&corpus::dual_numbers_ddt(), &[&[0, 0], &[0, 0]]);
        let base = Submodule::from_generators(2, 4, [vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        assert_eq!(a.base_centralizer(), base);
        assert_eq!(a.top_twisted_centralizer(), base);
    }

    #[test]
    fn degree_one_quotient_is_base() {
        let a = quotient(&corpus::zmod_plain(4), &[&[3]]);
        assert_eq!(a.x(), a.embed(&a.skew().ring().integer(1)));
        assert_eq!(a.base_centralizer(), a.top_twisted_centralizer());
        assert_eq!(a.base_centralizer().order(), Some(4));
    }

    #[test]
    fn json_round_trip_checks_context() {
        let a = quotient(&corpus::dual_numbers_ddt(), &[&[0, 0], &[0, 0]]);
        let b = quotient(&corpus::dual_numbers_ddt(), &[&[1, 0], &[0, 0]]);
        let t = a.monomial(1, &a.skew().ring().basis(1));
        let json = serde_json::to_string(&t.to_json()).unwrap();
        let back: QuotientElementJson = serde_json::from_str(&json).unwrap();
        assert_eq!(a.from_json(&back).unwrap(), t);
        assert!(matches!(b.from_json(&back), Err(Error::ContextMismatch)));
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = quotient(&corpus::zmod_plain(2), &[&[1], &[1]]);
        let b = quotient(&corpus::zmod_plain(2), &[&[1], &[0]]);
        assert!(matches!(a.one().mul(&b.one()), Err(Error::ContextMismatch)));
    }
}
