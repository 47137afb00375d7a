//! Small finite fields GF(r^f) with table arithmetic.
//!
//! Elements are `u16` literals: the coefficient vector of the element in the
//! power basis of the modulus root, read as a base-`r` integer (little-endian).
//! `0` is zero and `1` is one in every field.

use crate::error::{Error, Result};

pub type El = u16;

const FULL_TABLE_MAX: u32 = 256;

#[derive(Clone)]
pub struct Field {
    r: u32,
    f: u32,
    q: u32,
    /// monic modulus, coefficients c_0..c_f (c_f = 1)
    modulus: Vec<u32>,
    exp: Vec<El>,
    log: Vec<u32>,
    /// zech[n] = log(1 + g^n), or NONE when 1 + g^n = 0
    zech: Vec<u32>,
    add_tab: Vec<El>,
    mul_tab: Vec<El>,
}

const NONE: u32 = u32::MAX;

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{})", self.r, self.f)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.f == other.f
    }
}
impl Eq for Field {}

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

/// Distinct prime divisors by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Decompose q = r^f; `None` if q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let ps = prime_divisors(q);
    if ps.len() != 1 {
        return None;
    }
    let r = ps[0];
    let (mut x, mut f) = (q, 0);
    while x > 1 {
        x /= r;
        f += 1;
    }
    Some((r as u32, f))
}

fn digits(mut v: u32, r: u32, f: u32) -> Vec<u32> {
    (0..f)
        .map(|_| {
            let d = v % r;
            v /= r;
            d
        })
        .collect()
}

fn undigits(d: &[u32], r: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * r + x)
}

impl Field {
    pub fn new(r: u32, f: u32) -> Result<Field> {
        if !is_prime(r as u64) {
            return Err(Error::NotPrime(r as u64));
        }
        if f == 0 || (r as u64).checked_pow(f).map_or(true, |q| q > 1 << 16) {
            return Err(Error::FieldTooLarge { r, f });
        }
        let q = r.pow(f);
        // least primitive modulus by integer encoding of (c_0..c_{f-1})
        for code in 1..q {
            let low = digits(code, r, f);
            if low[0] == 0 {
                continue;
            }
            if let Some(exp) = primitive_powers(r, f, &low) {
                let mut modulus = low;
                modulus.push(1);
                return Ok(Field::from_powers(r, f, modulus, exp));
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    fn from_powers(r: u32, f: u32, modulus: Vec<u32>, exp1: Vec<El>) -> Field {
        let q = r.pow(f);
        let n = (q - 1) as usize;
        let mut log = vec![NONE; q as usize];
        for (i, &e) in exp1.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let mut exp = exp1.clone();
        exp.extend_from_slice(&exp1);
        let mut fld = Field { r, f, q, modulus, exp, log, zech: Vec::new(), add_tab: Vec::new(), mul_tab: Vec::new() };
        fld.zech = (0..n)
            .map(|k| {
                let s = fld.add_digits(1, fld.exp[k]);
                if s == 0 {
                    NONE
                } else {
                    fld.log[s as usize]
                }
            })
            .collect();
        if q <= FULL_TABLE_MAX {
            let qs = q as usize;
            let mut add_tab = vec![0; qs * qs];
            let mut mul_tab = vec![0; qs * qs];
            for a in 0..qs {
                for b in 0..qs {
                    add_tab[a * qs + b] = fld.add_digits(a as El, b as El);
                    mul_tab[a * qs + b] = fld.mul_log(a as El, b as El);
                }
            }
            fld.add_tab = add_tab;
            fld.mul_tab = mul_tab;
        }
        fld
    }

    pub fn from_order(q: u64) -> Result<Field> {
        let (r, f) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(r, f)
    }

    #[inline]
    pub fn char(&self) -> u32 {
        self.r
    }
    #[inline]
    pub fn degree(&self) -> u32 {
        self.f
    }
    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The primitive root of the modulus (the element `x`).
    pub fn gen(&self) -> El {
        self.exp[1 % (self.q as usize - 1).max(1)]
    }

    fn add_digits(&self, a: El, b: El) -> El {
        if self.r == 2 {
            return a ^ b;
        }
        let (r, mut a, mut b) = (self.r, a as u32, b as u32);
        let (mut out, mut pw) = (0u32, 1u32);
        for _ in 0..self.f {
            out += ((a % r + b % r) % r) * pw;
            a /= r;
            b /= r;
            pw *= r;
        }
        out as El
    }

    fn mul_log(&self, a: El, b: El) -> El {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    #[inline]
    pub fn add(&self, a: El, b: El) -> El {
        if self.r == 2 {
            return a ^ b;
        }
        if !self.add_tab.is_empty() {
            return self.add_tab[a as usize * self.q as usize + b as usize];
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        // a + b = a (1 + b/a)
        let (la, lb) = (self.log[a as usize], self.log[b as usize]);
        let d = (lb + self.q - 1 - la) % (self.q - 1);
        match self.zech[d as usize] {
            NONE => 0,
            z => self.exp[(la + z) as usize],
        }
    }

    #[inline]
    pub fn mul(&self, a: El, b: El) -> El {
        if !self.mul_tab.is_empty() {
            return self.mul_tab[a as usize * self.q as usize + b as usize];
        }
        self.mul_log(a, b)
    }

    #[inline]
    pub fn neg(&self, a: El) -> El {
        if self.r == 2 || a == 0 {
            return a;
        }
        // -1 = g^((q-1)/2) in odd characteristic
        self.exp[(self.log[a as usize] + (self.q - 1) / 2) as usize]
    }

    #[inline]
    pub fn sub(&self, a: El, b: El) -> El {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: El) -> El {
        debug_assert!(a != 0, "inverse of zero");
        let l = self.log[a as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }

    pub fn div(&self, a: El, b: El) -> El {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: El, k: i64) -> El {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as i64;
        let e = (self.log[a as usize] as i64 * k.rem_euclid(n)).rem_euclid(n);
        self.exp[e as usize]
    }

    /// t ↦ t^(r^k)
    #[inline]
    pub fn frob(&self, a: El, k: u32) -> El {
        if a == 0 || k % self.f == 0 {
            return a;
        }
        let n = (self.q - 1) as u64;
        let s = (self.r as u64).pow(k % self.f) % n;
        self.exp[((self.log[a as usize] as u64 * s) % n) as usize]
    }

    /// Discrete log base `gen()`; `None` for zero.
    pub fn log(&self, a: El) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, k: u64) -> El {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: El) -> u64 {
        let n = (self.q - 1) as u64;
        n / num_integer::gcd(n, self.log[a as usize] as u64)
    }

    pub fn from_int(&self, k: i64) -> El {
        let v = k.rem_euclid(self.r as i64) as El;
        v
    }

    pub fn elements(&self) -> impl Iterator<Item = El> {
        0..self.q as El
    }

    pub fn is_square(&self, a: El) -> bool {
        a == 0 || self.r == 2 || self.log[a as usize] % 2 == 0
    }

    /// Some square root (characteristic 2 or a square in odd characteristic).
    pub fn sqrt(&self, a: El) -> Option<El> {
        if a == 0 {
            return Some(0);
        }
        let l = self.log[a as usize];
        if self.r == 2 {
            // squaring is a bijection; invert it on logs
            let n = self.q - 1;
            let half = (l as u64 * ((n as u64 + 1) / 2)) % n as u64;
            return Some(self.exp[half as usize]);
        }
        (l % 2 == 0).then(|| self.exp[(l / 2) as usize])
    }

    /// Reference multiplication by schoolbook polynomial product mod the modulus.
    pub fn poly_mul(&self, a: El, b: El) -> El {
        let (r, f) = (self.r, self.f as usize);
        let (da, db) = (digits(a as u32, r, self.f), digits(b as u32, r, self.f));
        let mut prod = vec![0u32; 2 * f];
        for i in 0..f {
            for j in 0..f {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % r;
            }
        }
        for k in (f..2 * f).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..f {
                    prod[k - f + i] = (prod[k - f + i] + (r - c) * self.modulus[i] % r) % r;
                }
                prod[k] = 0;
            }
        }
        undigits(&prod[..f], r) as El
    }

    /// Embedding of the subfield `sub` (same characteristic, degree dividing ours)
    /// as a lookup table indexed by subfield literal. The image of the subfield's
    /// generator is a root of the subfield's modulus, so the map is additive.
    pub fn embedding(&self, sub: &Field) -> Result<Vec<El>> {
        if sub.r != self.r || self.f % sub.f != 0 {
            return Err(Error::FieldMismatch);
        }
        let n = (self.q - 1) as u64;
        let nd = (sub.q - 1) as u64;
        let s = n / nd;
        for j in 1..=nd.max(1) {
            if num_integer::gcd(j, nd.max(1)) != 1 {
                continue;
            }
            let root_log = (s * j) % n;
            let root = self.exp[root_log as usize];
            // evaluate the subfield modulus (coefficients in GF(r)) at root
            let mut acc: El = 0;
            for &c in sub.modulus.iter().rev() {
                acc = self.add(self.mul(acc, root), c as El);
            }
            if acc == 0 {
                let mut tab = vec![0; sub.q as usize];
                for t in 1..sub.q as usize {
                    let l = sub.log[t] as u64;
                    tab[t] = self.exp[((l * root_log) % n) as usize];
                }
                return Ok(tab);
            }
        }
        Err(Error::FieldMismatch)
    }

    /// Checked element wrapper.
    pub fn elem(&self, v: El) -> Result<FieldElem> {
        if (v as u32) < self.q {
            Ok(FieldElem { r: self.r, f: self.f, v })
        } else {
            Err(Error::BadLiteral(v as u64))
        }
    }

    pub fn arith(&self, a: FieldElem, b: FieldElem, op: Op) -> Result<FieldElem> {
        for x in [a, b] {
            if x.r != self.r || x.f != self.f {
                return Err(Error::FieldMismatch);
            }
        }
        let v = match op {
            Op::Add => self.add(a.v, b.v),
            Op::Mul => self.mul(a.v, b.v),
            Op::Inv => {
                if a.v == 0 {
                    return Err(Error::ZeroInverse);
                }
                self.inv(a.v)
            }
            Op::Pow(k) => {
                if a.v == 0 && k < 0 {
                    return Err(Error::ZeroInverse);
                }
                self.pow(a.v, k)
            }
            Op::Frobenius(k) => self.frob(a.v, k),
        };
        Ok(FieldElem { v, ..a })
    }
}

/// Powers x^0..x^{q-2} modulo the monic polynomial with low coefficients `low`,
/// provided x has multiplicative order exactly q-1.
fn primitive_powers(r: u32, f: u32, low: &[u32]) -> Option<Vec<El>> {
    let q = r.pow(f) as usize;
    let fu = f as usize;
    let mut cur = vec![0u32; fu];
    cur[0] = 1;
    let mut out = Vec::with_capacity(q - 1);
    for i in 0..q - 1 {
        let lit = undigits(&cur, r) as El;
        if i > 0 && lit == 1 {
            return None;
        }
        out.push(lit);
        // multiply by x
        let top = cur[fu - 1];
        for k in (1..fu).rev() {
            cur[k] = cur[k - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for k in 0..fu {
                cur[k] = (cur[k] + (r - top) * low[k] % r) % r;
            }
        }
    }
    (undigits(&cur, r) == 1).then_some(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Mul,
    Inv,
    Pow(i64),
    Frobenius(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub r: u32,
    pub f: u32,
    pub v: El,
}

/// Parse a field spec "q" or "r^f".
pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('^') {
        let r = a.trim().parse().map_err(|_| Error::Parse(s.into()))?;
        let f = b.trim().parse().map_err(|_| Error::Parse(s.into()))?;
        Field::new(r, f)
    } else {
        Field::from_order(s.parse().map_err(|_| Error::Parse(s.into()))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[1, 1]);
        assert_eq!(f2.order() - 1, 1);
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let g = f4.gen();
        assert_eq!(f4.mul(g, g), f4.add(g, 1));
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.order() - 1, 8);
        for a in f9.elements() {
            assert_eq!(f9.frob(f9.frob(a, 1), 1), a);
        }
    }

    #[test]
    fn quadratic_modulus_is_unique_primitive_over_gf2() {
        // the four monic quadratics over GF(2): x², x²+1, x²+x, x²+x+1
        let irreducible: Vec<[u32; 2]> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .into_iter()
            .filter(|c| (0..2u32).all(|t| (t * t + c[1] * t + c[0]) % 2 != 0))
            .collect();
        assert_eq!(irreducible, vec![[1, 1]]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 17).is_err());
        let f = Field::new(5, 1).unwrap();
        let z = f.elem(0).unwrap();
        assert!(matches!(f.arith(z, z, Op::Inv), Err(Error::ZeroInverse)));
        let g = Field::new(7, 1).unwrap().elem(1).unwrap();
        assert!(matches!(f.arith(z, g, Op::Add), Err(Error::FieldMismatch)));
    }

    #[test]
    fn tables_match_polynomial_arithmetic() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256, 343, 512, 625, 729, 1024] {
            let f = Field::from_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.poly_mul(a, b), "q={q} {a}*{b}");
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn zech_addition_for_large_fields() {
        let f = Field::new(3, 7).unwrap(); // 2187 > full-table bound
        for a in (0..f.order() as El).step_by(7) {
            for b in (0..f.order() as El).step_by(11) {
                assert_eq!(f.add(a, b), f.add_digits(a, b));
            }
        }
    }

    #[test]
    fn frobenius_fixed_field_is_prime_field() {
        for q in [4u64, 8, 9, 16, 25, 27, 49, 64, 81, 125, 243, 256, 625, 729, 1024, 2048, 2187, 3125, 4096] {
            let f = Field::from_order(q).unwrap();
            let fixed = f.elements().filter(|&a| f.frob(a, 1) == a).count();
            assert_eq!(fixed as u32, f.char());
            for a in f.elements().take(50) {
                assert_eq!(f.frob(a, f.degree()), a);
            }
        }
    }

    #[test]
    fn subfield_embedding_is_a_ring_map() {
        for (r, d, e) in [(2, 1, 2), (2, 2, 4), (2, 1, 4), (3, 1, 2), (2, 2, 6), (3, 2, 4), (2, 3, 6), (5, 1, 2)] {
            let small = Field::new(r, d).unwrap();
            let big = Field::new(r, e).unwrap();
            let emb = big.embedding(&small).unwrap();
            for a in small.elements() {
                for b in small.elements() {
                    assert_eq!(emb[small.add(a, b) as usize], big.add(emb[a as usize], emb[b as usize]));
                    assert_eq!(emb[small.mul(a, b) as usize], big.mul(emb[a as usize], emb[b as usize]));
                }
            }
        }
    }
}
