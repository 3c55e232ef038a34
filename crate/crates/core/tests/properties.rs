//! Randomized algebraic laws for skew polynomials, the quotient ring and the
//! tensor square.

use std::sync::Arc;

use proptest::prelude::*;
use skewsep::corpus;
use skewsep::quotient::{QuotientElement, QuotientRing, QuotientRingExt};
use skewsep::ring::RingElement;
use skewsep::skew::{InvariantPolynomial, SkewPolynomial, SkewRing};
use skewsep::tensor::{TensorSquare, TensorSquareExt};

fn contexts() -> Vec<Arc<SkewRing>> {
    corpus::extended()
        .into_iter()
        .chain(corpus::noncommuting())
        .map(|c| c.ctx)
        .collect()
}

fn element(ctx: &SkewRing, seed: &[u64]) -> RingElement {
    let r = ctx.ring();
    r.from_coords((0..r.rank()).map(|i| seed[i % seed.len()] % r.characteristic()).collect())
}

fn poly(ctx: &Arc<SkewRing>, seeds: &[Vec<u64>]) -> SkewPolynomial {
    SkewPolynomial::new(ctx, seeds.iter().map(|s| element(ctx, s)).collect()).unwrap()
}

fn seeds(max_len: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0u64..12, 4), 0..=max_len)
}

/// Invariant polynomials of degree 1 and 2 from every context.
fn quotients() -> Vec<Arc<QuotientRing>> {
    contexts()
        .iter()
        .flat_map(|ctx| {
            (1..=2).flat_map(move |m| skewsep::skew::all_monic(ctx, m, 1 << 12).unwrap())
        })
        .filter_map(|f| InvariantPolynomial::new(f).ok())
        .map(QuotientRing::new)
        .collect()
}

fn quotient_element(a: &Arc<QuotientRing>, seed: &[u64]) -> QuotientElement {
    let c = a.characteristic();
    let v: Vec<u64> = (0..a.dim()).map(|i| seed[i % seed.len()] % c).collect();
    a.from_coords(&v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_and_distributive(
        which in 0usize..11, p in seeds(5), q in seeds(5), s in seeds(5),
    ) {
        let ctxs = contexts();
        let ctx = &ctxs[which % ctxs.len()];
        let (p, q, s) = (poly(ctx, &p), poly(ctx, &q), poly(ctx, &s));
        let left = p.mul(&q).unwrap().mul(&s).unwrap();
        let right = p.mul(&q.mul(&s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let dist = p.mul(&q.add(&s).unwrap()).unwrap();
        prop_assert_eq!(dist, p.mul(&q).unwrap().add(&p.mul(&s).unwrap()).unwrap());
        prop_assert_eq!(p.mul(&SkewPolynomial::constant(ctx, ctx.ring().one())).unwrap(), p.clone());
        prop_assert!(p.mul(&SkewPolynomial::zero(ctx)).unwrap().is_zero());
    }

    #[test]
    fn left_form_round_trip(which in 0usize..11, seed in prop::collection::vec(0u64..12, 4), j in 0usize..=6) {
        let ctxs = contexts();
        let ctx = &ctxs[which % ctxs.len()];
        let alpha = element(ctx, &seed);
        // alpha X^j in right form, rewritten in left form and back
        let product = SkewPolynomial::constant(ctx, alpha.clone())
            .mul(&SkewPolynomial::monomial(ctx, j, ctx.ring().one()))
            .unwrap();
        prop_assert_eq!(product.coeffs().to_vec(), {
            let mut v = ctx.pass_left(&alpha, j);
            while v.last().is_some_and(RingElement::is_zero) { v.pop(); }
            v
        });
        let left = product.to_left_coeffs();
        let back = SkewPolynomial::from_left_coeffs(ctx, &left).unwrap();
        prop_assert!(back.sub(&product).unwrap().is_zero());
        // X^j alpha from the closed left form
        let xa = SkewPolynomial::monomial(ctx, j, alpha.clone());
        let from_left = SkewPolynomial::from_left_coeffs(ctx, &ctx.right_commute(j, &alpha)).unwrap();
        prop_assert_eq!(from_left, xa);
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(which in 0usize..1000, p in seeds(5), q in seeds(5)) {
        let qs = quotients();
        let a = &qs[which % qs.len()];
        let (p, q) = (poly(a.skew(), &p), poly(a.skew(), &q));
        let lhs = a.reduce(&p.mul(&q).unwrap()).unwrap();
        let rhs = a.reduce(&p).unwrap().mul(&a.reduce(&q).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(a.reduce(&a.modulus_poly().poly().mul(&p).unwrap()).unwrap().is_zero());
        prop_assert!(a.reduce(&p.mul(a.modulus_poly().poly()).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn tensor_actions_commute(which in 0usize..1000, s in prop::collection::vec(0u64..12, 6), u in prop::collection::vec(0u64..12, 6), v in prop::collection::vec(0u64..12, 6)) {
        let ts: Vec<_> = quotients().iter().filter_map(|a| TensorSquare::new(a).ok()).collect();
        let t = &ts[which % ts.len()];
        let a = t.quotient();
        let seed: Vec<u64> = s.iter().cycle().take(t.dim()).copied().collect();
        let mu = t.from_coords(&seed.iter().map(|x| x % a.characteristic()).collect::<Vec<_>>());
        let g = quotient_element(a, &u);
        let h = quotient_element(a, &v);
        // (g mu) h = g (mu h), and (mu g) h = mu (g h)
        prop_assert_eq!(mu.left_mul(&g).unwrap().right_mul(&h).unwrap(), mu.right_mul(&h).unwrap().left_mul(&g).unwrap());
        prop_assert_eq!(mu.right_mul(&g).unwrap().right_mul(&h).unwrap(), mu.right_mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(mu.left_mul(&g).unwrap().left_mul(&h).unwrap(), mu.left_mul(&h.mul(&g).unwrap()).unwrap());
        // the multiplication map is a bimodule map
        prop_assert_eq!(mu.left_mul(&g).unwrap().right_mul(&h).unwrap().mult_map(), g.mul(&mu.mult_map()).unwrap().mul(&h).unwrap());
    }

    #[test]
    fn canonical_image_is_injective_and_bridges(which in 0usize..1000, s in prop::collection::vec(0u64..12, 6)) {
        let ts: Vec<_> = quotients().iter().filter_map(|a| TensorSquare::new(a).ok()).collect();
        let t = &ts[which % ts.len()];
        let a = t.quotient();
        let top = a.top_twisted_centralizer();
        let lambda: Vec<u64> = s.iter().cycle().take(top.rows().len()).copied().collect();
        let h = a.from_coords(&top.combine(&lambda));
        let mu = t.canonical_from_h(&h).unwrap();
        prop_assert_eq!(mu.components().last().unwrap(), &h);
        prop_assert!(t.centralizer().contains(&mu.coords()));
        let ys = a.y_elements();
        let direct = ys.iter().enumerate().fold(a.zero(), |acc, (j, y)| {
            acc.add(&y.mul(&h).unwrap().mul(&a.x_power(j)).unwrap()).unwrap()
        });
        prop_assert_eq!(mu.mult_map(), direct);
    }
}

#[test]
fn embedding_is_a_unital_homomorphism() {
    for a in quotients() {
        let r = a.skew().ring();
        assert_eq!(a.embed(&r.one()), a.one());
        for i in 0..r.rank() {
            for j in 0..r.rank() {
                let (x, y) = (r.basis(i), r.basis(j));
                assert_eq!(a.embed(&r.mul(&x, &y)), a.embed(&x).mul(&a.embed(&y)).unwrap());
            }
        }
    }
}
