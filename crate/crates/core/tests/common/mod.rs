//! Brute-force oracles shared by the integration tests. They enumerate
//! elements directly and never touch the Howell-form solver.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use skewsep::quotient::{QuotientElement, QuotientRing, QuotientRingExt};
use skewsep::skew::{all_monic, InvariantPolynomial, SkewRing};

/// Every vector in `(Z/c)^len`, or `None` past `cap`.
pub fn all_vectors(c: u64, len: usize, cap: u128) -> Option<Vec<Vec<u64>>> {
    let count = (c as u128).checked_pow(len as u32).filter(|&n| n <= cap)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut v = vec![0u64; len];
    loop {
        out.push(v.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return Some(out);
            }
            i -= 1;
            v[i] += 1;
            if v[i] < c {
                break;
            }
            v[i] = 0;
        }
    }
}

pub fn all_elements(a: &Arc<QuotientRing>, cap: u128) -> Option<Vec<QuotientElement>> {
    let vs = all_vectors(a.characteristic(), a.dim(), cap)?;
    Some(vs.iter().map(|v| a.from_coords(v)).collect())
}

/// `{h : rho^e(b) h = h b for every b in B}` by filtering all of `A`.
pub fn brute_twisted_centralizer(a: &Arc<QuotientRing>, e: usize, cap: u128) -> Option<Vec<QuotientElement>> {
    let ring = a.skew().ring();
    let all_b = ring.elements(cap).ok()?;
    let elems = all_elements(a, cap)?;
    Some(
        elems
            .into_iter()
            .filter(|h| {
                all_b.iter().all(|b| {
                    let l = a.embed(&a.skew().rho_pow(e).apply(b));
                    l.mul(h).unwrap() == h.mul(&a.embed(b)).unwrap()
                })
            })
            .collect(),
    )
}

pub fn y_sum(a: &Arc<QuotientRing>, h: &QuotientElement) -> QuotientElement {
    let ys = a.y_elements();
    ys.iter().enumerate().fold(a.zero(), |acc, (j, y)| {
        acc.add(&y.mul(h).unwrap().mul(&a.x_power(j)).unwrap()).unwrap()
    })
}

/// All `h` in `V_{m-1}` with `sum_j y_j h x^j = 1`.
pub fn brute_separability_elements(a: &Arc<QuotientRing>, cap: u128) -> Option<Vec<QuotientElement>> {
    let top = brute_twisted_centralizer(a, a.degree() - 1, cap)?;
    Some(top.into_iter().filter(|h| y_sum(a, h) == a.one()).collect())
}

pub fn additive_closure(c: u64, gens: &BTreeSet<Vec<u64>>) -> BTreeSet<Vec<u64>> {
    let len = gens.iter().next().map_or(0, Vec::len);
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::from([vec![0; len]]);
    let mut frontier: Vec<Vec<u64>> = seen.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(x, y)| (x + y) % c).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// Whether some finite family of pairs in `V_0 x V_{m-1}` meets the Hirata
/// conditions: closes the set of single-pair profiles under addition.
pub fn brute_hirata(a: &Arc<QuotientRing>, cap: u128) -> Option<bool> {
    let m = a.degree();
    let base_c = brute_twisted_centralizer(a, 0, cap)?;
    let top = brute_twisted_centralizer(a, m - 1, cap)?;
    if (base_c.len() * top.len()) as u128 > cap {
        return None;
    }
    let powers: Vec<QuotientElement> = (0..m).map(|k| a.x_power(k)).collect();
    let mut profiles = BTreeSet::new();
    for g in &base_c {
        for h in &top {
            let p: Vec<u64> = powers
                .iter()
                .flat_map(|xk| g.mul(xk).unwrap().mul(h).unwrap().coords())
                .collect();
            profiles.insert(p);
        }
    }
    let mut target = vec![0; a.dim() * m];
    let n = a.dim();
    target[n * (m - 1)..].copy_from_slice(&a.one().coords());
    // pairs and sums of two pairs first, then the full closure
    if profiles.contains(&target) {
        return Some(true);
    }
    let c = a.characteristic();
    for p in &profiles {
        let need: Vec<u64> = target.iter().zip(p).map(|(t, x)| (t + c - x) % c).collect();
        if profiles.contains(&need) {
            return Some(true);
        }
    }
    Some(additive_closure(c, &profiles).contains(&target))
}

/// Invariant monic polynomials of degree `1..=max_m`.
pub fn invariant_polys(ctx: &Arc<SkewRing>, max_m: usize) -> Vec<InvariantPolynomial> {
    (1..=max_m)
        .flat_map(|m| all_monic(ctx, m, 1 << 16).unwrap())
        .filter_map(|f| InvariantPolynomial::new(f).ok())
        .collect()
}
