//! Decides separability and Hirata separability of a few quotients, shows
//! the witnesses, and compares against the tensor-square definitions.

use skewsep::corpus;
use skewsep::quotient::QuotientRing;
use skewsep::separability::{
    decide, hirata_by_criterion, hirata_by_definition, separable_by_criterion,
    separable_by_definition,
};
use skewsep::skew::{InvariantPolynomial, SkewPolynomial};
use skewsep::tensor::TensorSquare;

fn main() -> Result<(), skewsep::error::Error> {
    let cases = [
        ("F4, Frobenius", corpus::f4_frobenius(), vec![1, 0]),
        ("F4, Frobenius", corpus::f4_frobenius(), vec![0, 0]),
        ("F2[t]/(t^2), d/dt", corpus::dual_numbers_ddt(), vec![0, 0]),
        ("Z/4", corpus::zmod_plain(4), vec![1, 0]),
    ];
    for (name, ctx, lower) in cases {
        let r = ctx.ring();
        let lower = lower.into_iter().map(|c| r.integer(c)).collect();
        let f = SkewPolynomial::monic(&ctx, lower)?;
        let a = QuotientRing::new(InvariantPolynomial::new(f.clone())?);
        println!("{name}, f = {f}");

        match separable_by_criterion(&a) {
            Some(w) => println!("  separable, h = {}", w.h),
            None => println!("  not separable"),
        }
        match hirata_by_criterion(&a) {
            Some(w) => {
                let pairs: Vec<String> = w.pairs.iter().map(|(g, h)| format!("({g}, {h})")).collect();
                println!("  Hirata separable, pairs {}", pairs.join(", "));
            }
            None => println!("  not Hirata separable"),
        }
        if a.assumptions().hold() {
            let t = TensorSquare::new(&a)?;
            println!(
                "  by definition: separable {}, Hirata {}",
                separable_by_definition(&t).is_some(),
                hirata_by_definition(&t).is_some()
            );
        }
    }

    let ctx = corpus::dual_numbers_ddt();
    let f = SkewPolynomial::monic(&ctx, vec![ctx.ring().zero(), ctx.ring().zero()])?;
    println!("{}", serde_json::to_string(&decide(&f)?).expect("serializable"));
    Ok(())
}
