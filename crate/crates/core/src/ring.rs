//! Finite base rings presented by structure constants over `Z/c`, and the
//! automorphisms and twisted derivations acting on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, add_mod, mul_mod, neg_mod, sub_mod, Submodule};

/// Coordinates of a ring element in the additive basis `e_0, ..., e_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement(Vec<u64>);

impl RingElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// A ring that is a free `Z/c`-module of rank `k`, with
/// `e_a * e_b = sum_d mul[a][b][d] * e_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    characteristic: u64,
    rank: usize,
    mul: Vec<u64>,
    one: RingElement,
    labels: Vec<String>,
}

impl FiniteRing {
    /// Builds a presentation, reducing every entry modulo `characteristic`.
    ///
    /// Only the shape is checked here; ring axioms are checked by
    /// [`FiniteRing::validate`].
    pub fn new(
        characteristic: u64,
        rank: usize,
        one: Vec<i64>,
        mul: Vec<Vec<Vec<i64>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if characteristic < 2 {
            return Err(Error::Structural("characteristic must be at least 2".into()));
        }
        if characteristic > u32::MAX as u64 {
            return Err(Error::Structural("characteristic must fit in 32 bits".into()));
        }
        if rank == 0 {
            return Err(Error::Structural("rank must be at least 1".into()));
        }
        if one.len() != rank {
            return Err(Error::Structural(format!(
                "identity has {} coordinates, expected {rank}",
                one.len()
            )));
        }
        if mul.len() != rank
            || mul.iter().any(|row| row.len() != rank || row.iter().any(|v| v.len() != rank))
        {
            return Err(Error::Structural(format!(
                "multiplication table must be {rank}x{rank}x{rank}"
            )));
        }
        let labels = match labels {
            Some(l) if l.len() != rank => {
                return Err(Error::Structural(format!(
                    "{} labels given for rank {rank}",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..rank).map(|i| format!("e{i}")).collect(),
        };
        let red = |x: i64| linalg::reduce_signed(x as i128, characteristic);
        let flat = mul.iter().flatten().flatten().map(|&x| red(x)).collect();
        Ok(FiniteRing {
            characteristic,
            rank,
            mul: flat,
            one: RingElement(one.iter().map(|&x| red(x)).collect()),
            labels,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `mul[a][b]` as a coordinate slice.
    pub fn basis_product(&self, a: usize, b: usize) -> &[u64] {
        let k = self.rank;
        &self.mul[(a * k + b) * k..(a * k + b + 1) * k]
    }

    pub fn table(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.rank)
            .map(|a| (0..self.rank).map(|b| self.basis_product(a, b).to_vec()).collect())
            .collect()
    }

    /// Element from integer coordinates, reduced modulo `c`.
    pub fn element(&self, coords: &[i64]) -> Result<RingElement> {
        if coords.len() != self.rank {
            return Err(Error::Structural(format!(
                "element has {} coordinates, expected {}",
                coords.len(),
                self.rank
            )));
        }
        Ok(RingElement(
            coords
                .iter()
                .map(|&x| linalg::reduce_signed(x as i128, self.characteristic))
                .collect(),
        ))
    }

    /// Element from coordinates already in `[0, c)` (reduced again to be safe).
    pub fn from_coords(&self, coords: Vec<u64>) -> RingElement {
        assert_eq!(coords.len(), self.rank, "coordinate length");
        RingElement(coords.into_iter().map(|x| x % self.characteristic).collect())
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.rank])
    }

    pub fn one(&self) -> RingElement {
        self.one.clone()
    }

    pub fn basis(&self, i: usize) -> RingElement {
        RingElement(linalg::unit_vector(self.rank, i))
    }

    pub fn integer(&self, n: i64) -> RingElement {
        self.scale(&self.one, linalg::reduce_signed(n as i128, self.characteristic))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let c = self.characteristic;
        RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| add_mod(x, y, c)).collect())
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let c = self.characteristic;
        RingElement(a.0.iter().zip(&b.0).map(|(&x, &y)| sub_mod(x, y, c)).collect())
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        let c = self.characteristic;
        RingElement(a.0.iter().map(|&x| neg_mod(x, c)).collect())
    }

    pub fn scale(&self, a: &RingElement, s: u64) -> RingElement {
        let c = self.characteristic;
        RingElement(a.0.iter().map(|&x| mul_mod(x, s % c, c)).collect())
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let c = self.characteristic;
        let k = self.rank;
        let mut out = vec![0u64; k];
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let s = mul_mod(ai, bj, c);
                for (o, &t) in out.iter_mut().zip(self.basis_product(i, j)) {
                    *o = add_mod(*o, mul_mod(s, t, c), c);
                }
            }
        }
        RingElement(out)
    }

    pub fn commutator(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank)
            .all(|a| (a..self.rank).all(|b| self.basis_product(a, b) == self.basis_product(b, a)))
    }

    /// Number of elements, `c^k`, if it fits in a `u128`.
    pub fn order(&self) -> Option<u128> {
        (self.characteristic as u128).checked_pow(self.rank as u32)
    }

    /// Every element, refusing past `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<RingElement>> {
        let full = Submodule::full(self.characteristic, self.rank);
        Ok(full.enumerate(cap)?.map(RingElement).collect())
    }

    /// Checks associativity and the identity on all basis elements.
    pub fn validate(&self) -> ValidationReport {
        let k = self.rank;
        let mut failures = Vec::new();
        for a in 0..k {
            for b in 0..k {
                let ab = RingElement(self.basis_product(a, b).to_vec());
                for c in 0..k {
                    let bc = RingElement(self.basis_product(b, c).to_vec());
                    let left = self.mul(&ab, &self.basis(c));
                    let right = self.mul(&self.basis(a), &bc);
                    if left != right {
                        failures.push(AxiomFailure::Associativity { a, b, c });
                    }
                }
            }
        }
        for a in 0..k {
            let e = self.basis(a);
            if self.mul(&self.one, &e) != e {
                failures.push(AxiomFailure::LeftIdentity { a });
            }
            if self.mul(&e, &self.one) != e {
                failures.push(AxiomFailure::RightIdentity { a });
            }
        }
        ValidationReport { failures }
    }

    /// Solves `u * v = 1` for a two-sided inverse `v`, if one exists.
    pub fn inverse(&self, u: &RingElement) -> Option<RingElement> {
        let k = self.rank;
        let c = self.characteristic;
        // v |-> (u v, v u) is linear in v
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|j| {
                let e = self.basis(j);
                let mut row = self.mul(u, &e).0;
                row.extend(self.mul(&e, u).0);
                row
            })
            .collect();
        let mut target = self.one.0.clone();
        target.extend_from_slice(&self.one.0);
        linalg::solve_combination(c, 2 * k, &rows, &target).map(|s| RingElement(s.particular))
    }

    /// Human-readable form using the basis labels.
    pub fn format(&self, a: &RingElement) -> String {
        let terms: Vec<String> = a
            .0
            .iter()
            .zip(&self.labels)
            .filter(|(&x, _)| x != 0)
            .map(|(&x, l)| if x == 1 { l.clone() } else { format!("{x}{l}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Elements `s` of `sub` commuting with every element of `sub`.
    pub fn center_of(&self, sub: &Submodule) -> Submodule {
        let k = self.rank;
        let gens: Vec<RingElement> = sub.rows().iter().map(|r| RingElement(r.clone())).collect();
        sub.kernel_of(k * gens.len(), |v| {
            let s = RingElement(v.to_vec());
            gens.iter().flat_map(|g| self.commutator(&s, g).0).collect()
        })
    }

    /// The whole ring as a submodule of its coordinate space.
    pub fn as_submodule(&self) -> Submodule {
        Submodule::full(self.characteristic, self.rank)
    }

    pub fn contains(&self, sub: &Submodule, a: &RingElement) -> bool {
        sub.contains(&a.0)
    }
}

/// One failing instance of a ring, automorphism or derivation axiom.
/// Indices refer to basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomFailure {
    Associativity { a: usize, b: usize, c: usize },
    LeftIdentity { a: usize },
    RightIdentity { a: usize },
    NotMultiplicative { a: usize, b: usize },
    OneNotFixed,
    NotBijective,
    TwistedLeibniz { a: usize, b: usize },
    DerivationOfOne,
    WrongKind,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::Associativity { a, b, c } => {
                write!(f, "associativity fails on (e{a}, e{b}, e{c})")
            }
            AxiomFailure::LeftIdentity { a } => write!(f, "one * e{a} != e{a}"),
            AxiomFailure::RightIdentity { a } => write!(f, "e{a} * one != e{a}"),
            AxiomFailure::NotMultiplicative { a, b } => {
                write!(f, "map is not multiplicative on (e{a}, e{b})")
            }
            AxiomFailure::OneNotFixed => write!(f, "map does not fix one"),
            AxiomFailure::NotBijective => write!(f, "not bijective"),
            AxiomFailure::TwistedLeibniz { a, b } => {
                write!(f, "twisted Leibniz rule fails on (e{a}, e{b})")
            }
            AxiomFailure::DerivationOfOne => write!(f, "derivation does not vanish on one"),
            AxiomFailure::WrongKind => write!(f, "map has the wrong kind"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&AxiomFailure> {
        self.failures.first()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Automorphism,
    Derivation,
}

/// An additive endomorphism of the base ring, stored by the images of the
/// basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureMap {
    kind: MapKind,
    modulus: u64,
    images: Vec<RingElement>,
}

impl StructureMap {
    /// `images[j]` is the image of `e_j`.
    pub fn from_images(ring: &FiniteRing, kind: MapKind, images: Vec<RingElement>) -> Result<Self> {
        if images.len() != ring.rank() || images.iter().any(|i| i.0.len() != ring.rank()) {
            return Err(Error::Structural(format!(
                "structure map must have {} images of length {}",
                ring.rank(),
                ring.rank()
            )));
        }
        Ok(StructureMap { kind, modulus: ring.characteristic(), images })
    }

    /// `matrix[i][j]` is coordinate `i` of the image of `e_j`, so the map acts
    /// on column coordinate vectors.
    pub fn from_matrix(ring: &FiniteRing, kind: MapKind, matrix: &[Vec<i64>]) -> Result<Self> {
        let k = ring.rank();
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::Structural(format!("structure map matrix must be {k}x{k}")));
        }
        let images = (0..k)
            .map(|j| {
                let col: Vec<i64> = matrix.iter().map(|r| r[j]).collect();
                ring.element(&col)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(ring, kind, images)
    }

    /// Map defined by a function, sampled on the basis.
    pub fn from_fn<F>(ring: &FiniteRing, kind: MapKind, f: F) -> Self
    where
        F: Fn(&RingElement) -> RingElement,
    {
        let images = (0..ring.rank()).map(|j| f(&ring.basis(j))).collect();
        StructureMap { kind, modulus: ring.characteristic(), images }
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        Self::from_fn(ring, MapKind::Automorphism, |a| a.clone())
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Self::from_fn(ring, MapKind::Derivation, |_| ring.zero())
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn matrix(&self) -> Vec<Vec<u64>> {
        let k = self.rank();
        (0..k).map(|i| (0..k).map(|j| self.images[j].0[i]).collect()).collect()
    }

    pub fn apply(&self, a: &RingElement) -> RingElement {
        let k = self.rank();
        let n = self.modulus;
        let mut out = vec![0u64; k];
        for (&x, img) in a.0.iter().zip(&self.images) {
            if x == 0 {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(&img.0) {
                *o = add_mod(*o, mul_mod(x, y, n), n);
            }
        }
        RingElement(out)
    }

    /// `self ∘ other`, keeping the kind of `self`.
    pub fn compose(&self, other: &StructureMap) -> StructureMap {
        StructureMap {
            kind: self.kind,
            modulus: self.modulus,
            images: other.images.iter().map(|i| self.apply(i)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> StructureMap {
        let k = self.rank();
        let mut acc = StructureMap {
            kind: self.kind,
            modulus: self.modulus,
            images: (0..k).map(|j| RingElement(linalg::unit_vector(k, j))).collect(),
        };
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_injective(&self) -> bool {
        let k = self.rank();
        let rows: Vec<Vec<u64>> = self.images.iter().map(|i| i.0.clone()).collect();
        linalg::kernel_of_rows(self.modulus, k, &rows).is_zero()
    }

    /// Inverse as an additive map, if bijective.
    pub fn inverse(&self) -> Option<StructureMap> {
        let k = self.rank();
        let rows: Vec<Vec<u64>> = self.images.iter().map(|i| i.0.clone()).collect();
        let images = (0..k)
            .map(|j| {
                linalg::solve_combination(self.modulus, k, &rows, &linalg::unit_vector(k, j))
                    .filter(|s| s.kernel.is_zero())
                    .map(|s| RingElement(s.particular))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(StructureMap { kind: self.kind, modulus: self.modulus, images })
    }

    /// Elements sent to zero.
    pub fn kernel_submodule(&self) -> Submodule {
        let rows: Vec<Vec<u64>> = self.images.iter().map(|i| i.0.clone()).collect();
        linalg::kernel_of_rows(self.modulus, self.rank(), &rows)
    }

    /// Elements fixed by the map.
    pub fn fixed_subring(&self) -> Submodule {
        let n = self.modulus;
        let rows: Vec<Vec<u64>> = self
            .images
            .iter()
            .enumerate()
            .map(|(j, img)| {
                let mut r = img.0.clone();
                r[j] = sub_mod(r[j], 1, n);
                r
            })
            .collect();
        linalg::kernel_of_rows(n, self.rank(), &rows)
    }

    /// Checks that the map is a unital ring automorphism.
    pub fn validate_automorphism(&self, ring: &FiniteRing) -> ValidationReport {
        let mut failures = Vec::new();
        if self.kind != MapKind::Automorphism {
            failures.push(AxiomFailure::WrongKind);
        }
        if !self.is_injective() {
            failures.push(AxiomFailure::NotBijective);
        }
        if self.apply(&ring.one()) != ring.one() {
            failures.push(AxiomFailure::OneNotFixed);
        }
        let k = ring.rank();
        for a in 0..k {
            for b in 0..k {
                let ab = RingElement(ring.basis_product(a, b).to_vec());
                if self.apply(&ab) != ring.mul(&self.images[a], &self.images[b]) {
                    failures.push(AxiomFailure::NotMultiplicative { a, b });
                }
            }
        }
        ValidationReport { failures }
    }

    /// Checks `D(ab) = D(a) b + rho(a) D(b)` on basis pairs and `D(1) = 0`.
    pub fn validate_derivation(&self, ring: &FiniteRing, rho: &StructureMap) -> ValidationReport {
        let mut failures = Vec::new();
        if self.kind != MapKind::Derivation {
            failures.push(AxiomFailure::WrongKind);
        }
        let k = ring.rank();
        for a in 0..k {
            for b in 0..k {
                let ab = RingElement(ring.basis_product(a, b).to_vec());
                let lhs = self.apply(&ab);
                let rhs = ring.add(
                    &ring.mul(&self.images[a], &ring.basis(b)),
                    &ring.mul(&rho.images[a], &self.images[b]),
                );
                if lhs != rhs {
                    failures.push(AxiomFailure::TwistedLeibniz { a, b });
                }
            }
        }
        if !self.apply(&ring.one()).is_zero() {
            failures.push(AxiomFailure::DerivationOfOne);
        }
        ValidationReport { failures }
    }
}

/// True iff `rho ∘ d = d ∘ rho`.
pub fn check_commuting(rho: &StructureMap, d: &StructureMap) -> bool {
    rho.compose(d).images == d.compose(rho).images
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        formal_derivative, frobenius, galois_field, inner_derivation, matrix_ring, truncated_poly,
        zmod,
    };

    fn f4() -> FiniteRing {
        galois_field(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn zmod4_passes() {
        let r = FiniteRing::new(4, 1, vec![1], vec![vec![vec![1]]], None).unwrap();
        assert!(r.validate().passed());
        let z = zmod(4).unwrap();
        assert_eq!((r.table(), r.one()), (z.table(), z.one()));
    }

    #[test]
    fn f4_passes_and_squares_as_expected() {
        let r = f4();
        assert!(r.validate().passed());
        let w = r.basis(1);
        // w^2 = w + 1
        assert_eq!(r.mul(&w, &w), r.element(&[1, 1]).unwrap());
    }

    #[test]
    fn broken_identity_is_reported() {
        // e1 e1 = e2, e2 ea = 0, one = e1
        let mul = vec![
            vec![vec![0, 1], vec![0, 0]],
            vec![vec![0, 0], vec![0, 0]],
        ];
        let r = FiniteRing::new(2, 2, vec![1, 0], mul, None).unwrap();
        let report = r.validate();
        assert!(!report.passed());
        assert!(report.failures.contains(&AxiomFailure::LeftIdentity { a: 1 }));
    }

    #[test]
    fn dimension_mismatch_is_structural() {
        let err = FiniteRing::new(2, 2, vec![1, 0], vec![vec![vec![1]]], None).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let err = FiniteRing::new(2, 1, vec![1, 0], vec![vec![vec![1]]], None).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn entries_are_reduced_on_load() {
        let r = FiniteRing::new(4, 1, vec![5], vec![vec![vec![-3]]], None).unwrap();
        assert_eq!(r.one().coords(), &[1]);
        assert_eq!(r.basis_product(0, 0), &[1]);
    }

    #[test]
    fn frobenius_on_f4() {
        let r = f4();
        let rho = frobenius(&r).unwrap();
        assert!(rho.validate_automorphism(&r).passed());
        assert_eq!(rho.apply(&r.basis(1)), r.element(&[1, 1]).unwrap());
        assert_eq!(rho.pow(2), StructureMap::identity(&r));
        let fixed = rho.fixed_subring();
        assert_eq!(fixed.order(), Some(2));
        assert!(fixed.contains(r.one().coords()));
    }

    #[test]
    fn collapsing_map_is_not_bijective() {
        let r = f4();
        let m = StructureMap::from_matrix(&r, MapKind::Automorphism, &[vec![1, 0], vec![0, 0]])
            .unwrap();
        let report = m.validate_automorphism(&r);
        assert_eq!(report.first_failure(), Some(&AxiomFailure::NotBijective));
        assert_eq!(report.first_failure().unwrap().to_string(), "not bijective");
    }

    #[test]
    fn identity_is_automorphism_everywhere() {
        for r in [zmod(6).unwrap(), f4(), truncated_poly(3, 3).unwrap(), matrix_ring(&zmod(2).unwrap(), 2).unwrap()] {
            assert!(StructureMap::identity(&r).validate_automorphism(&r).passed());
            assert!(StructureMap::zero(&r).validate_derivation(&r, &StructureMap::identity(&r)).passed());
        }
    }

    #[test]
    fn d_dt_on_dual_numbers() {
        let r = truncated_poly(2, 2).unwrap();
        let id = StructureMap::identity(&r);
        let d = formal_derivative(&r);
        assert!(d.validate_derivation(&r, &id).passed());
        assert_eq!(d.apply(&r.basis(1)), r.one());
        assert!(d.apply(&r.one()).is_zero());
        assert!(check_commuting(&id, &d));
        assert_eq!(d.kernel_submodule(), Submodule::from_generators(2, 2, [vec![1, 0]]));
    }

    #[test]
    fn nonzero_on_one_fails_leibniz() {
        let r = truncated_poly(2, 2).unwrap();
        let id = StructureMap::identity(&r);
        // D(1) = 1, D(t) = t
        let d = StructureMap::from_matrix(&r, MapKind::Derivation, &[vec![1, 0], vec![0, 1]])
            .unwrap();
        let report = d.validate_derivation(&r, &id);
        assert!(report.failures.contains(&AxiomFailure::TwistedLeibniz { a: 0, b: 0 }));
        assert!(report.failures.contains(&AxiomFailure::DerivationOfOne));
        // D(t) = t alone with D(1) = 0 passes the (t, t) pair in char 2
        let d = StructureMap::from_matrix(&r, MapKind::Derivation, &[vec![0, 0], vec![0, 1]])
            .unwrap();
        let report = d.validate_derivation(&r, &id);
        assert!(!report.failures.contains(&AxiomFailure::TwistedLeibniz { a: 1, b: 1 }));
    }

    #[test]
    fn commuting_special_cases() {
        let r = f4();
        let rho = frobenius(&r).unwrap();
        assert!(check_commuting(&rho, &StructureMap::zero(&r)));
        let d = inner_derivation(&r, &rho, &r.one());
        assert!(d.validate_derivation(&r, &rho).passed());
        assert!(check_commuting(&rho, &d));
        // an inner derivation by a non-fixed element does not commute with rho
        let d = inner_derivation(&r, &rho, &r.basis(1));
        assert!(d.validate_derivation(&r, &rho).passed());
        assert!(!check_commuting(&rho, &d));
    }

    #[test]
    fn inverse_map_and_ring_inverse() {
        let r = galois_field(3, &[2, 2, 1]).unwrap();
        let rho = frobenius(&r).unwrap();
        let inv = rho.inverse().unwrap();
        assert_eq!(rho.compose(&inv), StructureMap::identity(&r));
        for a in r.elements(100).unwrap() {
            match r.inverse(&a) {
                Some(b) => assert_eq!(r.mul(&a, &b), r.one()),
                None => assert!(a.is_zero()),
            }
        }
    }

    #[test]
    fn center_of_matrix_ring_is_scalars() {
        let r = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        let z = r.center_of(&r.as_submodule());
        assert_eq!(z.order(), Some(2));
        assert!(z.contains(r.one().coords()));
    }

    #[test]
    fn matrix_action_agrees_with_elementwise_action() {
        // additive maps on (Z/c)^k are Z/c-linear, so sampling on a basis is lossless
        let r = galois_field(3, &[2, 2, 1]).unwrap();
        let rho = frobenius(&r).unwrap();
        for a in r.elements(100).unwrap() {
            let cube = r.mul(&a, &r.mul(&a, &a));
            assert_eq!(rho.apply(&a), cube);
        }
    }
}
