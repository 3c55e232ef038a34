//! The tensor square A ⊗_B A, its centralizer of A, and the comparison with
//! the image of h |-> sum_j y_j h ⊗ x^j.

use skewsep::corpus;
use skewsep::quotient::{QuotientRing, QuotientRingExt};
use skewsep::skew::{InvariantPolynomial, SkewPolynomial};
use skewsep::tensor::{TensorSquare, TensorSquareExt};

fn main() -> Result<(), skewsep::error::Error> {
    for (name, ctx) in [("F4, Frobenius", corpus::f4_frobenius()), ("F2[t]/(t^2), d/dt", corpus::dual_numbers_ddt())] {
        let r = ctx.ring();
        let f = SkewPolynomial::monic(&ctx, vec![r.zero(), r.zero()])?;
        let a = QuotientRing::new(InvariantPolynomial::new(f)?);
        let t = TensorSquare::new(&a)?;
        println!("{name}, f = {}: tensor square of rank {}", a.modulus_poly().poly(), t.dim());

        let one = t.one();
        let x = a.x();
        println!("  1 ⊗ 1 = {one}");
        println!("  x(1 ⊗ 1) = {}", one.left_mul(&x)?);
        println!("  (1 ⊗ 1)x = {}", one.right_mul(&x)?);

        let cmp = t.compare_centralizer_with_image();
        println!(
            "  centralizer order {:?}, image order {:?}, equal: {}",
            cmp.centralizer_order, cmp.image_order, cmp.holds()
        );
        let h = a.from_coords(&a.top_twisted_centralizer().rows()[0]);
        let z = t.canonical_from_h(&h)?;
        println!("  h = {h} gives {z}, multiplied out: {}", z.mult_map());
    }
    Ok(())
}
