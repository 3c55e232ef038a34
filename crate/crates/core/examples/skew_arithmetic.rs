//! Arithmetic in a skew polynomial ring over the dual numbers with the
//! formal derivative, and the two invariance tests.

use skewsep::corpus;
use skewsep::skew::{is_invariant_coefficientwise, is_invariant_direct, SkewPolynomial};

fn main() -> Result<(), skewsep::error::Error> {
    let ctx = corpus::dual_numbers_ddt();
    let r = ctx.ring();
    let t = r.basis(1);

    let x = SkewPolynomial::x(&ctx);
    let tp = SkewPolynomial::constant(&ctx, t.clone());
    println!("t * X = {}", tp.mul(&x)?);
    println!("X * t = {}", x.mul(&tp)?);

    // moving t past X^3 two ways
    let closed = ctx.pass_left_closed(&t, 3)?;
    let iterated = ctx.pass_left_iterated(&t, 3);
    println!("t X^3: closed form matches iteration: {}", closed == iterated);

    let p = SkewPolynomial::monic(&ctx, vec![t.clone(), r.one()])?;
    println!("p = {p}, left coefficients {:?}", p.to_left_coeffs().iter().map(|c| r.format(c)).collect::<Vec<_>>());
    let (q, rem) = x.mul(&x)?.mul(&x)?.div_rem_left(&p)?;
    println!("X^3 = p * ({q}) + {rem}");

    for lower in [vec![r.zero(), r.zero()], vec![t.clone(), r.zero()], vec![r.one(), r.one()]] {
        let f = SkewPolynomial::monic(&ctx, lower)?;
        let direct = is_invariant_direct(&f)?;
        let coeffwise = is_invariant_coefficientwise(&f)?;
        println!("{f}: direct {}, coefficientwise {}", direct.invariant, coeffwise.invariant());
    }
    Ok(())
}
