//! `A ⊗_B A` in the normal form `sum_j z_j ⊗ x^j`, its `A`-centralizer, and
//! the parametrization of that centralizer by `V_{m-1}`.
//!
//! The normal form is only built when `rho D = D rho` and the coefficients of
//! `f` lie in `B^rho`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Submodule;
use crate::quotient::{QuotientElement, QuotientRing, QuotientRingExt};
use crate::ring::RingElement;

pub struct TensorSquare {
    a: Arc<QuotientRing>,
    /// `right_commute[j][a][i]`: left coefficient of `x^i` in `x^j e_a`.
    right_commute: Vec<Vec<Vec<RingElement>>>,
}

impl fmt::Debug for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorSquare({:?})", self.a)
    }
}

impl TensorSquare {
    pub fn new(a: &Arc<QuotientRing>) -> Result<Arc<Self>> {
        let assumptions = a.assumptions();
        if !assumptions.rho_d_commute {
            return Err(Error::Precondition("tensor normal form needs rho D = D rho".into()));
        }
        if !assumptions.coeffs_in_b_rho {
            return Err(Error::Precondition(
                "tensor normal form needs the coefficients of f in B^rho".into(),
            ));
        }
        let skew = a.skew();
        let k = skew.ring().rank();
        let right_commute = (0..a.degree())
            .map(|j| (0..k).map(|e| skew.right_commute(j, &skew.ring().basis(e))).collect())
            .collect();
        Ok(Arc::new(TensorSquare { a: Arc::clone(a), right_commute }))
    }

    pub fn quotient(&self) -> &Arc<QuotientRing> {
        &self.a
    }

    /// `k * m^2`.
    pub fn dim(&self) -> usize {
        self.a.dim() * self.a.degree()
    }
}

pub trait TensorSquareExt {
    fn element(&self, z: Vec<QuotientElement>) -> Result<TensorElement>;
    fn zero(&self) -> TensorElement;
    /// `1 ⊗ 1`.
    fn one(&self) -> TensorElement;
    fn from_coords(&self, coords: &[u64]) -> TensorElement;
    /// `{mu : a mu = mu a for all a in A}`, from the generators `x` and `e_a`.
    fn centralizer(&self) -> Submodule;
    /// `sum_j y_j h ⊗ x^j`, refusing `h` outside `V_{m-1}`.
    fn canonical_from_h(&self, h: &QuotientElement) -> Result<TensorElement>;
    /// Image of `V_{m-1}` under [`TensorSquareExt::canonical_from_h`].
    fn canonical_image(&self) -> Submodule;
    fn compare_centralizer_with_image(&self) -> CentralizerComparison;
}

impl TensorSquareExt for Arc<TensorSquare> {
    fn element(&self, z: Vec<QuotientElement>) -> Result<TensorElement> {
        if z.len() != self.a.degree() {
            return Err(Error::Structural(format!(
                "tensor elements have {} components",
                self.a.degree()
            )));
        }
        if z.iter().any(|c| !c.context().same_context(&self.a)) {
            return Err(Error::ContextMismatch);
        }
        Ok(TensorElement { ctx: Arc::clone(self), z })
    }

    fn zero(&self) -> TensorElement {
        TensorElement { ctx: Arc::clone(self), z: vec![self.a.zero(); self.a.degree()] }
    }

    fn one(&self) -> TensorElement {
        let mut t = self.zero();
        t.z[0] = self.a.one();
        t
    }

    fn from_coords(&self, coords: &[u64]) -> TensorElement {
        let n = self.a.dim();
        assert_eq!(coords.len(), n * self.a.degree(), "coordinate length");
        let z = coords.chunks(n).map(|c| self.a.from_coords(c)).collect();
        TensorElement { ctx: Arc::clone(self), z }
    }

    fn centralizer(&self) -> Submodule {
        let k = self.a.skew().ring().rank();
        let n = self.dim();
        let x = self.a.x();
        let basis: Vec<(RingElement, QuotientElement)> = (0..k)
            .map(|e| {
                let b = self.a.skew().ring().basis(e);
                let q = self.a.embed(&b);
                (b, q)
            })
            .collect();
        let full = Submodule::full(self.a.characteristic(), n);
        full.kernel_of(n * (k + 1), |v| {
            let mu = self.from_coords(v);
            let mut out = mu.left_mul(&x).expect("ctx").sub(&mu.right_mul_x()).expect("ctx").coords();
            for (b, q) in &basis {
                let d = mu.left_mul(q).expect("ctx").sub(&mu.right_mul_b(b)).expect("ctx");
                out.extend(d.coords());
            }
            out
        })
    }

    fn canonical_from_h(&self, h: &QuotientElement) -> Result<TensorElement> {
        if !h.context().same_context(&self.a) {
            return Err(Error::ContextMismatch);
        }
        if let Some(basis) = self.a.twisted_centralizer_failure(self.a.degree() - 1, h) {
            return Err(Error::NotInCentralizer { basis });
        }
        Ok(canonical_unchecked(self, h))
    }

    fn canonical_image(&self) -> Submodule {
        self.a
            .top_twisted_centralizer()
            .image(self.dim(), |v| canonical_unchecked(self, &self.a.from_coords(v)).coords())
    }

    fn compare_centralizer_with_image(&self) -> CentralizerComparison {
        let top = self.a.top_twisted_centralizer();
        let image = self.canonical_image();
        let centralizer = self.centralizer();
        CentralizerComparison {
            equal: image == centralizer,
            centralizer_order: centralizer.order(),
            top_centralizer_order: top.order(),
            image_order: image.order(),
        }
    }
}

fn canonical_unchecked(ctx: &Arc<TensorSquare>, h: &QuotientElement) -> TensorElement {
    let z = ctx.a.y_elements().iter().map(|y| y.mul(h).expect("ctx")).collect();
    TensorElement { ctx: Arc::clone(ctx), z }
}

/// The centralizer of `A` in `A ⊗_B A` against the canonical image of `V_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerComparison {
    /// The two submodules have the same canonical form.
    pub equal: bool,
    pub centralizer_order: Option<u128>,
    pub top_centralizer_order: Option<u128>,
    pub image_order: Option<u128>,
}

impl CentralizerComparison {
    /// Equality plus injectivity of `h |-> sum_j y_j h ⊗ x^j`.
    pub fn holds(&self) -> bool {
        self.equal && self.centralizer_order == self.top_centralizer_order && self.image_order == self.top_centralizer_order
    }
}

/// Serialized [`TensorElement`]: `z[j][i]` holds the coordinates of the
/// `x^i` coefficient of `z_j`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TensorElementJson {
    pub context: String,
    pub z: Vec<Vec<Vec<u64>>>,
}

/// `sum_j z_j ⊗ x^j`.
#[derive(Clone)]
pub struct TensorElement {
    ctx: Arc<TensorSquare>,
    z: Vec<QuotientElement>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.z == other.z
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .z
            .iter()
            .enumerate()
            .filter(|(_, z)| !z.is_zero())
            .map(|(j, z)| match j {
                0 => format!("({z}) ⊗ 1"),
                1 => format!("({z}) ⊗ x"),
                _ => format!("({z}) ⊗ x^{j}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl TensorElement {
    pub fn context(&self) -> &Arc<TensorSquare> {
        &self.ctx
    }

    pub fn components(&self) -> &[QuotientElement] {
        &self.z
    }

    pub fn coords(&self) -> Vec<u64> {
        self.z.iter().flat_map(QuotientElement::coords).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.z.iter().all(QuotientElement::is_zero)
    }

    pub fn to_json(&self) -> TensorElementJson {
        TensorElementJson {
            context: self.ctx.a.fingerprint().to_string(),
            z: self.z.iter().map(QuotientElement::coeff_vectors).collect(),
        }
    }

    fn with(&self, z: Vec<QuotientElement>) -> TensorElement {
        TensorElement { ctx: Arc::clone(&self.ctx), z }
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        let z = self.z.iter().zip(&other.z).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(self.with(z))
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        let z = self.z.iter().zip(&other.z).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(self.with(z))
    }

    /// `a * self`.
    pub fn left_mul(&self, a: &QuotientElement) -> Result<TensorElement> {
        let z = self.z.iter().map(|z| a.mul(z)).collect::<Result<_>>()?;
        Ok(self.with(z))
    }

    /// `self * alpha` for `alpha` in `B`, moving the left coefficients of
    /// `x^j alpha` across the tensor sign.
    pub fn right_mul_b(&self, alpha: &RingElement) -> TensorElement {
        let ring = self.ctx.a.skew().ring();
        let m = self.z.len();
        let mut out = vec![self.ctx.a.zero(); m];
        for (e, &coord) in alpha.coords().iter().enumerate() {
            if coord == 0 {
                continue;
            }
            for (j, z) in self.z.iter().enumerate() {
                for (i, c) in self.ctx.right_commute[j][e].iter().enumerate() {
                    let c = ring.scale(c, coord);
                    out[i] = out[i].add(&z.mul_scalar_right(&c)).expect("ctx");
                }
            }
        }
        self.with(out)
    }

    /// `self * x`, folding `z_{m-1} ⊗ x^m` with `x^m = -sum_j a_j x^j`.
    pub fn right_mul_x(&self) -> TensorElement {
        let a = &self.ctx.a;
        let m = self.z.len();
        let last = &self.z[m - 1];
        let z = (0..m)
            .map(|j| {
                let shifted = if j == 0 { a.zero() } else { self.z[j - 1].clone() };
                shifted.sub(&last.mul_scalar_right(&a.a(j))).expect("ctx")
            })
            .collect();
        self.with(z)
    }

    /// `self * g` for `g = sum_j x^j b_j`.
    pub fn right_mul(&self, g: &QuotientElement) -> Result<TensorElement> {
        if !g.context().same_context(&self.ctx.a) {
            return Err(Error::ContextMismatch);
        }
        let mut acc = self.ctx.zero();
        let mut power = self.clone();
        for (j, b) in g.coeffs().iter().enumerate() {
            if j > 0 {
                power = power.right_mul_x();
            }
            acc = acc.add(&power.right_mul_b(b))?;
        }
        Ok(acc)
    }

    /// `sum_j z_j x^j`.
    pub fn mult_map(&self) -> QuotientElement {
        let a = &self.ctx.a;
        self.z.iter().enumerate().fold(a.zero(), |acc, (j, z)| {
            acc.add(&z.mul(&a.x_power(j)).expect("ctx")).expect("ctx")
        })
    }
}
