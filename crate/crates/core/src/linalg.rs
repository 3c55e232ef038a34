//! Exact linear algebra over `Z/c` for possibly composite `c`.
//!
//! Submodules of `(Z/c)^n` are kept in Howell form: an echelon form whose
//! pivots divide `c`, whose entries above each pivot are reduced below it, and
//! which has the Howell property (every element of the row space whose first
//! `j` entries vanish is a combination of the rows whose pivot lies at or
//! after column `j`). Two generator sets span the same submodule iff their
//! Howell forms are equal, and reducing a vector by the rows yields the
//! lexicographically least representative of its coset.

use crate::error::{Error, Result};

/// Default cap on the number of elements an enumeration may produce.
pub const DEFAULT_ENUM_CAP: u128 = 65_536;

#[inline]
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + n as u128 - b as u128) % n as u128) as u64
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
pub fn neg_mod(a: u64, n: u64) -> u64 {
    if a == 0 {
        0
    } else {
        n - a
    }
}

/// Reduces a signed integer into `[0, n)`.
pub fn reduce_signed(a: i128, n: u64) -> u64 {
    a.rem_euclid(n as i128) as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Returns `(g, s, t)` with `g = gcd(a, b) = s*a + t*b`.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `n`, if `a` is a unit.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (g, s, _) = xgcd(a as i128, n as i128);
    (g == 1).then(|| reduce_signed(s, n))
}

/// A unit `u` of `Z/n` with `u * a = gcd(a, n)`.
fn unit_normalizer(a: u64, n: u64) -> u64 {
    let d = gcd(a, n);
    let n_red = n / d;
    if n_red == 1 {
        return 1;
    }
    let base = inv_mod((a / d) % n_red, n_red).expect("cofactor is a unit");
    let mut u = base;
    while gcd(u, n) != 1 {
        u += n_red;
    }
    u
}

fn axpy(dst: &mut [u64], coef: u64, src: &[u64], n: u64) {
    if coef == 0 {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d = add_mod(*d, mul_mod(coef, *s, n), n);
    }
}

fn scaled(row: &[u64], coef: u64, n: u64) -> Vec<u64> {
    row.iter().map(|&x| mul_mod(x, coef, n)).collect()
}

/// Howell form of the row space spanned by `gens` in `(Z/n)^ncols`.
pub fn howell_form(n: u64, ncols: usize, gens: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = gens
        .iter()
        .map(|g| {
            debug_assert_eq!(g.len(), ncols);
            g.iter().map(|&x| x % n).collect::<Vec<u64>>()
        })
        .filter(|g| g.iter().any(|&x| x != 0))
        .collect();

    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][col] == 0 {
                continue;
            }
            let pa = a[r][col] as i128;
            let pb = a[i][col] as i128;
            let (g, s, t) = xgcd(pa, pb);
            let (s, t) = (reduce_signed(s, n), reduce_signed(t, n));
            let u = (pa / g) as u64;
            let v = reduce_signed(-(pb / g), n);
            let mut top = scaled(&a[r], s, n);
            axpy(&mut top, t, &a[i], n);
            let mut bottom = scaled(&a[i], u, n);
            axpy(&mut bottom, v, &a[r], n);
            debug_assert_eq!(bottom[col], 0);
            a[r] = top;
            a[i] = bottom;
        }

        let unit = unit_normalizer(a[r][col], n);
        a[r] = scaled(&a[r], unit, n);
        let d = a[r][col];
        debug_assert_eq!(n % d, 0);

        let pivot_row = a[r].clone();
        for row in a.iter_mut().take(r) {
            let q = row[col] / d;
            if q != 0 {
                axpy(row, neg_mod(q % n, n), &pivot_row, n);
            }
        }

        // annihilator multiple of the pivot row; it vanishes at `col` and is
        // absorbed by later columns
        if d != 1 {
            let extra = scaled(&pivot_row, n / d, n);
            if extra.iter().any(|&x| x != 0) {
                a.push(extra);
            }
        }
        r += 1;
    }
    a.truncate(r);
    debug_assert!(a.iter().all(|row| row.iter().any(|&x| x != 0)));
    a
}

fn leading(row: &[u64]) -> usize {
    row.iter().position(|&x| x != 0).expect("nonzero row")
}

/// A submodule of `(Z/c)^n` in canonical (Howell) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    modulus: u64,
    ambient: usize,
    rows: Vec<Vec<u64>>,
}

impl Submodule {
    pub fn from_generators<I>(modulus: u64, ambient: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let gens: Vec<Vec<u64>> = gens.into_iter().collect();
        let rows = howell_form(modulus, ambient, &gens);
        Submodule { modulus, ambient, rows }
    }

    pub fn zero(modulus: u64, ambient: usize) -> Self {
        Submodule { modulus, ambient, rows: Vec::new() }
    }

    pub fn full(modulus: u64, ambient: usize) -> Self {
        let gens = (0..ambient).map(|i| unit_vector(ambient, i));
        Self::from_generators(modulus, ambient, gens)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The canonical rows. They generate the submodule.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// `(column, pivot)` for each canonical row.
    pub fn pivots(&self) -> Vec<(usize, u64)> {
        self.rows
            .iter()
            .map(|r| {
                let c = leading(r);
                (c, r[c])
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of elements, or `None` if it does not fit in a `u128`.
    pub fn order(&self) -> Option<u128> {
        self.pivots()
            .into_iter()
            .try_fold(1u128, |acc, (_, d)| acc.checked_mul((self.modulus / d) as u128))
    }

    /// `log2` of the order, usable when [`Submodule::order`] overflows.
    pub fn order_log2(&self) -> f64 {
        self.pivots()
            .into_iter()
            .map(|(_, d)| ((self.modulus / d) as f64).log2())
            .sum()
    }

    /// Lexicographically least element of the coset `v + self`.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let n = self.modulus;
        let mut out: Vec<u64> = v.iter().map(|&x| x % n).collect();
        for row in &self.rows {
            let c = leading(row);
            let q = out[c] / row[c];
            if q != 0 {
                axpy(&mut out, neg_mod(q % n, n), row, n);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn is_subset_of(&self, other: &Submodule) -> bool {
        self.modulus == other.modulus
            && self.ambient == other.ambient
            && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        assert_eq!(self.ambient, other.ambient);
        let gens = self.rows.iter().chain(&other.rows).cloned();
        Submodule::from_generators(self.modulus, self.ambient, gens)
    }

    pub fn intersect(&self, other: &Submodule) -> Submodule {
        assert_eq!(self.ambient, other.ambient);
        assert_eq!(self.modulus, other.modulus);
        let n = self.ambient;
        // rows [s | s] for s in self and [t | 0] for t in other; the rows
        // vanishing on the first half carry the intersection in the second
        let mut gens = Vec::with_capacity(self.rows.len() + other.rows.len());
        for s in &self.rows {
            let mut row = s.clone();
            row.extend_from_slice(s);
            gens.push(row);
        }
        for t in &other.rows {
            let mut row = t.clone();
            row.resize(2 * n, 0);
            gens.push(row);
        }
        let h = howell_form(self.modulus, 2 * n, &gens);
        let tail = h
            .into_iter()
            .filter(|row| leading(row) >= n)
            .map(|row| row[n..].to_vec());
        Submodule::from_generators(self.modulus, n, tail)
    }

    /// Image under a `Z/c`-linear map given as a function on vectors.
    pub fn image<F>(&self, out_dim: usize, f: F) -> Submodule
    where
        F: Fn(&[u64]) -> Vec<u64>,
    {
        let gens = self.rows.iter().map(|r| f(r));
        Submodule::from_generators(self.modulus, out_dim, gens)
    }

    /// Elements `v` of `self` with `f(v) = 0`, for a linear `f`.
    pub fn kernel_of<F>(&self, out_dim: usize, f: F) -> Submodule
    where
        F: Fn(&[u64]) -> Vec<u64>,
    {
        let images: Vec<Vec<u64>> = self.rows.iter().map(|r| f(r)).collect();
        let coeffs = kernel_of_rows(self.modulus, out_dim, &images);
        let gens = coeffs.rows().iter().map(|lambda| self.combine(lambda));
        Submodule::from_generators(self.modulus, self.ambient, gens)
    }

    /// Lexicographically least `v` in `self` with `f(v) = target`.
    pub fn least_preimage<F>(&self, out_dim: usize, f: F, target: &[u64]) -> Option<Vec<u64>>
    where
        F: Fn(&[u64]) -> Vec<u64>,
    {
        let images: Vec<Vec<u64>> = self.rows.iter().map(|r| f(r)).collect();
        let sol = solve_combination(self.modulus, out_dim, &images, target)?;
        let v = self.combine(&sol.particular);
        let kernel = Submodule::from_generators(
            self.modulus,
            self.ambient,
            sol.kernel.rows().iter().map(|lambda| self.combine(lambda)),
        );
        Some(kernel.reduce(&v))
    }

    /// `sum_i lambda_i * rows[i]`.
    pub fn combine(&self, lambda: &[u64]) -> Vec<u64> {
        combine_rows(self.modulus, self.ambient, &self.rows, lambda)
    }

    /// Every element exactly once, refusing when the order exceeds `cap`.
    pub fn enumerate(&self, cap: u128) -> Result<Elements<'_>> {
        match self.order() {
            Some(order) if order <= cap => Ok(Elements::new(self)),
            Some(order) => Err(Error::EnumerationCap { size: order.to_string(), cap }),
            None => Err(Error::EnumerationCap {
                size: format!("2^{:.1}", self.order_log2()),
                cap,
            }),
        }
    }
}

/// Iterator over the elements of a [`Submodule`].
///
/// Each element has a unique expression `sum_i l_i r_i` with
/// `0 <= l_i < c / d_i` over the canonical rows `r_i` with pivots `d_i`.
pub struct Elements<'a> {
    module: &'a Submodule,
    radices: Vec<u64>,
    counter: Vec<u64>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(module: &'a Submodule) -> Self {
        let radices: Vec<u64> = module
            .pivots()
            .into_iter()
            .map(|(_, d)| module.modulus / d)
            .collect();
        let counter = vec![0; radices.len()];
        Elements { module, radices, counter, done: false }
    }
}

impl Iterator for Elements<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.module.combine(&self.counter);
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[i] += 1;
            if self.counter[i] < self.radices[i] {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn combine_rows(modulus: u64, ambient: usize, rows: &[Vec<u64>], lambda: &[u64]) -> Vec<u64> {
    let mut out = vec![0; ambient];
    for (row, &l) in rows.iter().zip(lambda) {
        axpy(&mut out, l % modulus, row, modulus);
    }
    out
}

/// Solution set of a linear system: one particular solution and the kernel.
///
/// `particular` is the lexicographically least solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<u64>,
    pub kernel: Submodule,
}

impl LinearSolution {
    pub fn contains(&self, x: &[u64]) -> bool {
        let n = self.kernel.modulus();
        let diff: Vec<u64> = x
            .iter()
            .zip(&self.particular)
            .map(|(&a, &b)| sub_mod(a, b, n))
            .collect();
        self.kernel.contains(&diff)
    }
}

/// Solves `sum_i x_i * rows[i] = target` for `x`.
pub fn solve_combination(
    modulus: u64,
    ambient: usize,
    rows: &[Vec<u64>],
    target: &[u64],
) -> Option<LinearSolution> {
    assert_eq!(target.len(), ambient);
    let r = rows.len();
    let width = ambient + r;
    let gens: Vec<Vec<u64>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), ambient);
            let mut w = row.clone();
            w.resize(width, 0);
            w[ambient + i] = 1;
            w
        })
        .collect();
    let h = howell_form(modulus, width, &gens);

    let mut v: Vec<u64> = target.iter().map(|&x| x % modulus).collect();
    v.resize(width, 0);
    for row in &h {
        let c = leading(row);
        if c >= ambient {
            break;
        }
        if !v[c].is_multiple_of(row[c]) {
            return None;
        }
        let q = v[c] / row[c];
        axpy(&mut v, neg_mod(q % modulus, modulus), row, modulus);
    }
    if v[..ambient].iter().any(|&x| x != 0) {
        return None;
    }
    let x: Vec<u64> = v[ambient..].iter().map(|&a| neg_mod(a, modulus)).collect();
    let kernel = Submodule::from_generators(
        modulus,
        r,
        h.into_iter()
            .filter(|row| leading(row) >= ambient)
            .map(|row| row[ambient..].to_vec()),
    );
    let particular = kernel.reduce(&x);
    Some(LinearSolution { particular, kernel })
}

/// Kernel of `x |-> sum_i x_i * rows[i]`.
pub fn kernel_of_rows(modulus: u64, ambient: usize, rows: &[Vec<u64>]) -> Submodule {
    solve_combination(modulus, ambient, rows, &vec![0; ambient])
        .expect("homogeneous system is solvable")
        .kernel
}

/// Solves `M x = b` over `Z/modulus`, where `m` lists the rows of `M`.
///
/// Returns `Ok(None)` when the system has no solution.
pub fn solve_linear(modulus: u64, m: &[Vec<u64>], b: &[u64]) -> Result<Option<LinearSolution>> {
    if m.len() != b.len() {
        return Err(Error::Structural(format!(
            "matrix has {} rows but right-hand side has {} entries",
            m.len(),
            b.len()
        )));
    }
    let ncols = m.first().map_or(0, Vec::len);
    if m.iter().any(|row| row.len() != ncols) {
        return Err(Error::Structural("ragged matrix".into()));
    }
    let columns: Vec<Vec<u64>> = (0..ncols)
        .map(|j| m.iter().map(|row| row[j] % modulus).collect())
        .collect();
    Ok(solve_combination(modulus, m.len(), &columns, b))
}
