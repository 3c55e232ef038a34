//! Built-in presentations and structure maps used by the test corpus and the
//! configuration shorthands.

use crate::error::{Error, Result};
use crate::linalg::{self, add_mod, mul_mod, sub_mod};
use crate::ring::{FiniteRing, MapKind, RingElement, StructureMap};

fn from_table(c: u64, one: Vec<u64>, table: Vec<Vec<Vec<u64>>>, labels: Vec<String>) -> Result<FiniteRing> {
    let rank = one.len();
    let conv = |v: &Vec<u64>| v.iter().map(|&x| x as i64).collect::<Vec<i64>>();
    let mul = table
        .iter()
        .map(|row| row.iter().map(conv).collect())
        .collect();
    FiniteRing::new(c, rank, conv(&one), mul, Some(labels))
}

/// `Z/n` as a rank-1 presentation.
pub fn zmod(n: u64) -> Result<FiniteRing> {
    FiniteRing::new(n, 1, vec![1], vec![vec![vec![1]]], Some(vec!["1".into()]))
}

/// `(Z/c)[t]/(g)` for a monic `g`, given low-to-high with the leading 1.
pub fn poly_quotient(c: u64, modulus: &[i64], var: &str) -> Result<FiniteRing> {
    let e = modulus.len().checked_sub(1).filter(|&e| e >= 1).ok_or_else(|| {
        Error::Structural("quotient modulus must have degree at least 1".into())
    })?;
    let g: Vec<u64> = modulus.iter().map(|&x| linalg::reduce_signed(x as i128, c)).collect();
    if g[e] != 1 {
        return Err(Error::Structural("quotient modulus must be monic".into()));
    }
    // t^s reduced, for s < 2e - 1
    let mut powers: Vec<Vec<u64>> = Vec::new();
    let mut cur = linalg::unit_vector(e, 0);
    for _ in 0..(2 * e - 1) {
        powers.push(cur.clone());
        // multiply by t, then fold t^e = -sum g_i t^i
        let top = cur[e - 1];
        let mut next = vec![0u64; e];
        next[1..e].copy_from_slice(&cur[..e - 1]);
        for i in 0..e {
            next[i] = sub_mod(next[i], mul_mod(top, g[i], c), c);
        }
        cur = next;
    }
    let table = (0..e)
        .map(|a| (0..e).map(|b| powers[a + b].clone()).collect())
        .collect();
    let labels = (0..e)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        })
        .collect();
    from_table(c, linalg::unit_vector(e, 0), table, labels)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Whether the monic polynomial `g` over `F_p` has no monic factor of degree
/// between 1 and `deg g / 2`. Brute force; intended for small fields.
pub fn is_irreducible_mod_p(p: u64, g: &[u64]) -> bool {
    let n = g.len() - 1;
    for d in 1..=n / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut h = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                h.push(x % p);
                x /= p;
            }
            h.push(1);
            if poly_rem_is_zero(p, g, &h) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u64, g: &[u64], h: &[u64]) -> bool {
    let mut r = g.to_vec();
    let dh = h.len() - 1;
    while r.len() > dh {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dh;
        for (i, &hi) in h.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(lead, hi, p), p);
        }
        r.pop();
    }
    r.iter().all(|&x| x == 0)
}

/// `GF(p^r) = F_p[w]/(g)` for a supplied irreducible monic `g` of degree `r`.
pub fn galois_field(p: u64, irreducible: &[i64]) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::Structural(format!("{p} is not prime")));
    }
    let g: Vec<u64> = irreducible.iter().map(|&x| linalg::reduce_signed(x as i128, p)).collect();
    if g.len() < 2 || *g.last().unwrap() != 1 {
        return Err(Error::Structural("field modulus must be monic of degree >= 1".into()));
    }
    if !is_irreducible_mod_p(p, &g) {
        return Err(Error::Structural("field modulus is not irreducible".into()));
    }
    poly_quotient(p, irreducible, "w")
}

/// `(Z/c)[t]/(t^e)`.
pub fn truncated_poly(c: u64, e: usize) -> Result<FiniteRing> {
    let mut g = vec![0i64; e + 1];
    g[e] = 1;
    poly_quotient(c, &g, "t")
}

/// `n x n` matrices over `base`. Basis index `(i*n + j)*k + a` is `E_ij * b_a`.
pub fn matrix_ring(base: &FiniteRing, n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(Error::Structural("matrix size must be at least 1".into()));
    }
    let k = base.rank();
    let rank = n * n * k;
    let idx = |i: usize, j: usize, a: usize| (i * n + j) * k + a;
    let mut table = vec![vec![vec![0u64; rank]; rank]; rank];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for a in 0..k {
                    for b in 0..k {
                        let prod = base.basis_product(a, b);
                        for (d, &v) in prod.iter().enumerate() {
                            table[idx(i, j, a)][idx(j, l, b)][idx(i, l, d)] = v;
                        }
                    }
                }
            }
        }
    }
    let mut one = vec![0u64; rank];
    for i in 0..n {
        for (a, &v) in base.one().coords().iter().enumerate() {
            one[idx(i, i, a)] = v;
        }
    }
    let labels = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..k).map(move |a| (i, j, a))))
        .map(|(i, j, a)| {
            if k == 1 {
                format!("E{}{}", i + 1, j + 1)
            } else {
                format!("E{}{}*{}", i + 1, j + 1, base.labels()[a])
            }
        })
        .collect();
    from_table(base.characteristic(), one, table, labels)
}

/// Direct product of rings with a common characteristic.
pub fn product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    let first = factors
        .first()
        .ok_or_else(|| Error::Structural("product of no rings".into()))?;
    let c = first.characteristic();
    if factors.iter().any(|f| f.characteristic() != c) {
        return Err(Error::Structural("product factors must share the characteristic".into()));
    }
    let rank: usize = factors.iter().map(FiniteRing::rank).sum();
    let mut table = vec![vec![vec![0u64; rank]; rank]; rank];
    let mut one = Vec::with_capacity(rank);
    let mut labels = Vec::with_capacity(rank);
    let mut offset = 0;
    for (fi, f) in factors.iter().enumerate() {
        let k = f.rank();
        for a in 0..k {
            for b in 0..k {
                for (d, &v) in f.basis_product(a, b).iter().enumerate() {
                    table[offset + a][offset + b][offset + d] = v;
                }
            }
        }
        one.extend_from_slice(f.one().coords());
        labels.extend(f.labels().iter().map(|l| format!("{l}@{fi}")));
        offset += k;
    }
    from_table(c, one, table, labels)
}

/// `a |-> a^p` on a commutative ring of prime characteristic `p`.
pub fn frobenius(ring: &FiniteRing) -> Result<StructureMap> {
    let p = ring.characteristic();
    if !is_prime(p) {
        return Err(Error::InvalidMap("frobenius needs prime characteristic".into()));
    }
    if !ring.is_commutative() {
        return Err(Error::InvalidMap("frobenius needs a commutative ring".into()));
    }
    Ok(StructureMap::from_fn(ring, MapKind::Automorphism, |a| {
        let mut acc = ring.one();
        for _ in 0..p {
            acc = ring.mul(&acc, a);
        }
        acc
    }))
}

/// `d/dt` on a ring presented with basis `1, t, ..., t^{k-1}`:
/// `t^i |-> i t^{i-1}`. Whether this is a derivation of the quotient depends on
/// the modulus; validate it.
pub fn formal_derivative(ring: &FiniteRing) -> StructureMap {
    let c = ring.characteristic();
    let k = ring.rank();
    let images = (0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            if i > 0 {
                v[i - 1] = (i as u64) % c;
            }
            ring.from_coords(v)
        })
        .collect();
    StructureMap::from_images(ring, MapKind::Derivation, images).expect("shape matches")
}

/// `a |-> u a u^{-1}`.
pub fn inner_automorphism(ring: &FiniteRing, u: &RingElement) -> Result<StructureMap> {
    let inv = ring
        .inverse(u)
        .ok_or_else(|| Error::InvalidMap("conjugating element is not a unit".into()))?;
    Ok(StructureMap::from_fn(ring, MapKind::Automorphism, |a| {
        ring.mul(&ring.mul(u, a), &inv)
    }))
}

/// The inner `rho`-derivation `a |-> u a - rho(a) u`.
pub fn inner_derivation(ring: &FiniteRing, rho: &StructureMap, u: &RingElement) -> StructureMap {
    StructureMap::from_fn(ring, MapKind::Derivation, |a| {
        ring.sub(&ring.mul(u, a), &ring.mul(&rho.apply(a), u))
    })
}

/// Adds `s * e_i` to the coordinates of `a`.
pub fn add_basis_multiple(ring: &FiniteRing, a: &RingElement, i: usize, s: u64) -> RingElement {
    let c = ring.characteristic();
    let mut v = a.coords().to_vec();
    v[i] = add_mod(v[i], s % c, c);
    ring.from_coords(v)
}
