use std::fmt;

use crate::{Error, Result};

/// Largest field size accepted by [`FiniteField::new`].
pub const FIELD_CAP: u64 = 1 << 16;

/// An element of a [`FiniteField`], labelled by the base-`p` reading of its
/// coefficient vector (constant term is the least significant digit).
pub type Elem = u32;

/// The finite field GF(p^n), realised as `Z/p[x] / (modulus)`.
///
/// Multiplication goes through discrete log tables built from a primitive
/// element, so every operation is a table lookup or a short digit loop.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    n: u32,
    order: u32,
    /// Monic modulus, low-to-high, length `n + 1`.
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q` as `p^n` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut n = 0;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p as u32, n))
}

impl FiniteField {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::with_cap(p, n, FIELD_CAP)
    }

    pub fn with_cap(p: u32, n: u32, cap: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if n == 0 {
            return Err(Error::InvalidParameters(
                "field extension degree must be positive".into(),
            ));
        }
        let size = (p as u64).checked_pow(n);
        if size.map_or(true, |s| s > cap) {
            return Err(Error::FieldTooLarge { p, n, cap });
        }
        let order = size.unwrap() as u32;
        let modulus = canonical_modulus(p, n);
        let mut field = FiniteField {
            p,
            n,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_log_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Number of elements `p^n`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let q1 = self.order - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % q1;
        self.exp[e as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let q1 = self.order - 1;
        let e = (q1 - self.log[a as usize]) % q1;
        Some(self.exp[e as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let q1 = (self.order - 1) as u64;
        let k = (self.log[a as usize] as u64 * (e % q1)) % q1;
        self.exp[k as usize]
    }

    /// The squaring map `x -> x^2`; an automorphism in characteristic 2.
    pub fn frobenius(&self, x: Elem) -> Elem {
        self.mul(x, x)
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        if self.order == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Coefficient vector of an element, low-to-high.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.n as usize);
        let mut x = a;
        for _ in 0..self.n {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    fn from_coefficients(&self, c: &[u32]) -> Elem {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn digitwise(&self, a: Elem, b: Elem, f: impl Fn(u32, u32) -> u32) -> Elem {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    /// Polynomial product modulo the modulus, used only to seed the log tables.
    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let n = self.n as usize;
        let p = self.p as u64;
        let ca = self.coefficients(a);
        let cb = self.coefficients(b);
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for d in (n..2 * n).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..n].iter().enumerate() {
                let t = d - n + i;
                prod[t] = (prod[t] + (p - c) * m as u64) % p;
            }
        }
        let reduced: Vec<u32> = prod[..n].iter().map(|&x| x as u32).collect();
        self.from_coefficients(&reduced)
    }

    fn slow_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = self.mul_slow(x, g);
            k += 1;
        }
        k
    }

    fn build_log_tables(&mut self) {
        let q = self.order as usize;
        let q1 = q - 1;
        let generator = (1..q as Elem)
            .find(|&g| self.slow_order(g) == q1)
            .expect("nonzero elements of a finite field form a cyclic group");
        let mut exp = vec![0; q1];
        let mut log = vec![0; q];
        let mut x: Elem = 1;
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = k as u32;
            x = self.mul_slow(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree `n`
/// over `Z/p`, comparing coefficient vectors from the constant term upward.
fn canonical_modulus(p: u32, n: u32) -> Vec<u32> {
    let count = (p as u64).pow(n);
    for t in 0..count {
        // Constant term is the most significant digit of `t`.
        let mut coeffs = vec![0u32; n as usize + 1];
        let mut x = t;
        for i in (0..n as usize).rev() {
            coeffs[i] = (x % p as u64) as u32;
            x /= p as u64;
        }
        coeffs[n as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for t in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut x = t;
            for slot in g.iter_mut().take(d) {
                *slot = (x % p as u64) as u32;
                x /= p as u64;
            }
            g[d] = 1;
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    for d in (dg..r.len()).rev() {
        let c = r[d];
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let t = d - dg + i;
            r[t] = (r[t] + (p - c) * gi as u64 % p) % p;
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}
