//! Named skew polynomial contexts used by the examples and test suites.

use std::sync::Arc;

use crate::constructors::{
    formal_derivative, frobenius, galois_field, inner_automorphism, inner_derivation,
    matrix_ring, product, truncated_poly, zmod,
};
use crate::ring::StructureMap;
use crate::skew::SkewRing;

#[derive(Clone, Debug)]
pub struct NamedContext {
    pub name: &'static str,
    pub ctx: Arc<SkewRing>,
}

fn named(name: &'static str, ctx: Arc<SkewRing>) -> NamedContext {
    NamedContext { name, ctx }
}

/// `Z/n` with `rho = id`, `D = 0`.
pub fn zmod_plain(n: u64) -> Arc<SkewRing> {
    let r = zmod(n).expect("n >= 2");
    let (rho, d) = (StructureMap::identity(&r), StructureMap::zero(&r));
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_4 = F_2[w]/(w^2 + w + 1)` with `rho = id`, `D = 0`.
pub fn f4_plain() -> Arc<SkewRing> {
    let r = galois_field(2, &[1, 1, 1]).expect("irreducible");
    let (rho, d) = (StructureMap::identity(&r), StructureMap::zero(&r));
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_4` with the Frobenius automorphism and `D = 0`.
pub fn f4_frobenius() -> Arc<SkewRing> {
    let r = galois_field(2, &[1, 1, 1]).expect("irreducible");
    let rho = frobenius(&r).expect("field");
    let d = StructureMap::zero(&r);
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_2[t]/(t^2)` with `rho = id`, `D = 0`.
pub fn dual_numbers_plain() -> Arc<SkewRing> {
    let r = truncated_poly(2, 2).expect("valid");
    let (rho, d) = (StructureMap::identity(&r), StructureMap::zero(&r));
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_2[t]/(t^2)` with `rho = id`, `D = d/dt`.
pub fn dual_numbers_ddt() -> Arc<SkewRing> {
    let r = truncated_poly(2, 2).expect("valid");
    let rho = StructureMap::identity(&r);
    let d = formal_derivative(&r);
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_9 = F_3[w]/(w^2 + 1)` with Frobenius and `D(a) = a - rho(a)`.
/// Both maps are nontrivial and commute.
pub fn f9_frobenius_inner() -> Arc<SkewRing> {
    let r = galois_field(3, &[1, 0, 1]).expect("irreducible");
    let rho = frobenius(&r).expect("field");
    let d = inner_derivation(&r, &rho, &r.one());
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_2 x F_2` with the swap automorphism and `D(a) = a - rho(a)`.
pub fn swap_product() -> Arc<SkewRing> {
    let f2 = zmod(2).expect("valid");
    let r = product(&[f2.clone(), f2]).expect("valid");
    let rho = StructureMap::from_matrix(
        &r,
        crate::ring::MapKind::Automorphism,
        &[vec![0, 1], vec![1, 0]],
    )
    .expect("shape");
    let d = inner_derivation(&r, &rho, &r.one());
    SkewRing::new(r, rho, d).expect("valid")
}

/// `M_2(F_2)` with conjugation by `[[1,1],[0,1]]` and `D(a) = a - rho(a)`.
pub fn matrices_conjugation() -> Arc<SkewRing> {
    let r = matrix_ring(&zmod(2).expect("valid"), 2).expect("valid");
    let u = r.element(&[1, 1, 0, 1]).expect("shape");
    let rho = inner_automorphism(&r, &u).expect("unit");
    let d = inner_derivation(&r, &rho, &r.one());
    SkewRing::new(r, rho, d).expect("valid")
}

/// `F_4` with Frobenius and the inner derivation `a |-> w a - rho(a) w`,
/// which does not commute with `rho`.
pub fn f4_noncommuting() -> Arc<SkewRing> {
    let r = galois_field(2, &[1, 1, 1]).expect("irreducible");
    let rho = frobenius(&r).expect("field");
    let d = inner_derivation(&r, &rho, &r.basis(1));
    SkewRing::new(r, rho, d).expect("valid")
}

/// The seven base contexts: `Z/2`, `Z/3`, `Z/4`, `F_4` with identity and
/// Frobenius, and `F_2[t]/(t^2)` with `D = 0` and `D = d/dt`.
pub fn standard() -> Vec<NamedContext> {
    vec![
        named("Z/2", zmod_plain(2)),
        named("Z/3", zmod_plain(3)),
        named("Z/4", zmod_plain(4)),
        named("F4/id", f4_plain()),
        named("F4/frobenius", f4_frobenius()),
        named("F2[t]/(t^2)/0", dual_numbers_plain()),
        named("F2[t]/(t^2)/d/dt", dual_numbers_ddt()),
    ]
}

/// [`standard`] plus contexts with noncommutative base rings and with both
/// maps nontrivial.
pub fn extended() -> Vec<NamedContext> {
    let mut v = standard();
    v.push(named("F9/frobenius/inner", f9_frobenius_inner()));
    v.push(named("F2xF2/swap/inner", swap_product()));
    v.push(named("M2(F2)/conj/inner", matrices_conjugation()));
    v
}

/// Contexts where `rho D != D rho`.
pub fn noncommuting() -> Vec<NamedContext> {
    vec![named("F4/frobenius/inner-w", f4_noncommuting())]
}
