//! Builds finite rings from constructors and from a raw multiplication table,
//! then checks the ring, automorphism and derivation axioms.

use skewsep::constructors::{formal_derivative, frobenius, galois_field, truncated_poly};
use skewsep::ring::{FiniteRing, MapKind, StructureMap};

fn main() -> Result<(), skewsep::error::Error> {
    let f4 = galois_field(2, &[1, 1, 1])?;
    let frob = frobenius(&f4)?;
    println!("F4 basis {:?}, commutative: {}", f4.labels(), f4.is_commutative());
    println!("frobenius matrix {:?}", frob.matrix());
    println!("frobenius is an automorphism: {}", frob.validate_automorphism(&f4).passed());
    println!("fixed subring order: {:?}", frob.fixed_subring().order());

    // w -> 0 is not bijective
    let collapse = StructureMap::from_matrix(&f4, MapKind::Automorphism, &[vec![1, 0], vec![0, 0]])?;
    let report = collapse.validate_automorphism(&f4);
    println!("w -> 0 passes: {}, first failure: {:?}", report.passed(), report.first_failure());

    let dual = truncated_poly(2, 2)?;
    let d = formal_derivative(&dual);
    let id = StructureMap::identity(&dual);
    println!("d/dt on F2[t]/(t^2) is a derivation: {}", d.validate_derivation(&dual, &id).passed());

    // Z/6 written out as a rank-one table: e0 * e0 = e0
    let z6 = FiniteRing::new(6, 1, vec![1], vec![vec![vec![1]]], None)?;
    println!("Z/6 validates: {}, order {:?}", z6.validate().passed(), z6.order());
    Ok(())
}
