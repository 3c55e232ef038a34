//! The quotient ring A = R/fR for f = X^2 + 1 over F4 with Frobenius,
//! its y-elements and twisted centralizers.

use skewsep::corpus;
use skewsep::quotient::{separability_sum, QuotientRing, QuotientRingExt};
use skewsep::skew::{InvariantPolynomial, SkewPolynomial};

fn main() -> Result<(), skewsep::error::Error> {
    let ctx = corpus::f4_frobenius();
    let r = ctx.ring();
    let f = SkewPolynomial::monic(&ctx, vec![r.one(), r.zero()])?;
    let a = QuotientRing::new(InvariantPolynomial::new(f)?);
    println!("A = R/fR, f = {}, rank {} over Z/{}", a.modulus_poly().poly(), a.dim(), a.characteristic());

    let w = a.embed(&r.basis(1));
    let x = a.x();
    println!("x * w = {}", x.mul(&w)?);
    println!("w * x = {}", w.mul(&x)?);
    println!("x^2 = {}", a.x_power(2));

    for (j, y) in a.y_elements().iter().enumerate() {
        println!("y_{j} = {y}");
    }

    let base = a.base_centralizer();
    let top = a.top_twisted_centralizer();
    println!("centralizer of the base ring: order {:?}", base.order());
    println!("twisted centralizer for rho^(m-1): order {:?}", top.order());
    for row in top.rows() {
        let h = a.from_coords(row);
        println!("  generator {h}: sum y_j h x^j = {}", separability_sum(&h)?);
    }
    Ok(())
}
