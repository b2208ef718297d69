//! Irreducibility over the rationals for small integer polynomials.
//!
//! Degree-limited factor search: the polynomial is factored modulo a prime
//! `p` larger than twice the Mignotte bound on the coefficients of any
//! integer factor, and every product of modular factors with degree at most
//! half the input is lifted to its symmetric representative and tried as an
//! exact divisor over the integers. Because `p` exceeds the bound no Hensel
//! lifting is needed, which keeps this adequate for the degrees met by small
//! graphs and nothing more.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};

use super::{poly_squarefree, IntPoly};
use crate::{Error, Result};

/// True iff `f` has no factorization over Q into two polynomials of
/// positive degree. Constants are not irreducible.
pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.primitive_part();
    let n = f.degree() as usize;
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    if f.coeff(0).is_zero() || !poly_squarefree(&f)? {
        return Ok(false);
    }

    let lead = f.leading().cloned().unwrap_or_default();
    let bound = coefficient_bound(&f);
    let twice = &bound * 2u32;
    if twice.bits() > 62 {
        return Err(Error::TooLarge { size: twice.bits() as usize, bound: 62 });
    }
    let Some(p) = choose_prime(&f, twice.to_u64().unwrap_or(u64::MAX)) else {
        return Err(Error::TooLarge { size: n, bound: 62 });
    };

    let field = Fp::new(p);
    let modular = field.reduce(&f);
    let monic = field.monic(&modular);
    let factors = field.factor_squarefree(&monic);
    if factors.len() == 1 {
        return Ok(true);
    }

    let lead_mod = field.reduce_int(&lead);
    let r = factors.len();
    for mask in 1u32..(1 << r) - 1 {
        let deg: usize = (0..r).filter(|k| mask & (1 << k) != 0).map(|k| factors[k].len() - 1).sum();
        if deg == 0 || deg > n / 2 {
            continue;
        }
        let mut prod = vec![lead_mod];
        for (k, fac) in factors.iter().enumerate() {
            if mask & (1 << k) != 0 {
                prod = field.mul(&prod, fac);
            }
        }
        let candidate = field.lift_symmetric(&prod).primitive_part();
        if candidate.degree() as usize == deg && candidate.divides(&f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|lc| * C(k, k/2) * ceil(||f||_2)` with `k = deg f / 2`: bounds every
/// coefficient of `lc(f)/lc(g) * g` for an integer factor `g` of degree
/// at most `k`.
fn coefficient_bound(f: &IntPoly) -> BigUint {
    let k = (f.degree() / 2) as u64;
    let sq: BigUint = f.coeffs().iter().map(|c| c.magnitude() * c.magnitude()).sum();
    let norm = sq.sqrt() + 1u32;
    let lead = f.leading().map(|c| c.magnitude().clone()).unwrap_or_default();
    lead * BigUint::from(binomial(k, k / 2)) * norm
}

fn choose_prime(f: &IntPoly, above: u64) -> Option<u64> {
    let mut p = above.checked_add(1)? | 1;
    loop {
        if p >= 1 << 62 {
            return None;
        }
        if is_prime(p) {
            let field = Fp::new(p);
            let reduced = field.reduce(f);
            // degree must survive and the reduction must stay squarefree
            if reduced.len() == f.coeffs().len() {
                let monic = field.monic(&reduced);
                let d = field.derivative(&monic);
                if !d.is_empty() && field.gcd(&monic, &d).len() == 1 {
                    return Some(p);
                }
            }
        }
        p += 2;
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let f = Fp::new(n);
    'witness: for &a in &WITNESSES {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul_scalar(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Arithmetic in `GF(p)[t]`; polynomials are low-to-high coefficient
/// vectors with no trailing zeros.
struct Fp {
    p: u64,
}

type FpPoly = Vec<u64>;

impl Fp {
    fn new(p: u64) -> Self {
        Fp { p }
    }

    fn mul_scalar(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn add_scalar(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    fn sub_scalar(&self, a: u64, b: u64) -> u64 {
        self.add_scalar(a, self.p - b)
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_scalar(acc, base);
            }
            base = self.mul_scalar(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn reduce_int(&self, c: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((c % &m) + &m) % &m;
        r.to_u64().unwrap_or(0)
    }

    fn reduce(&self, f: &IntPoly) -> FpPoly {
        trim(f.coeffs().iter().map(|c| self.reduce_int(c)).collect())
    }

    fn lift_symmetric(&self, a: &FpPoly) -> IntPoly {
        let half = self.p / 2;
        IntPoly::from_coeffs(
            a.iter()
                .map(|&c| if c > half { BigInt::from(c) - BigInt::from(self.p) } else { BigInt::from(c) })
                .collect(),
        )
    }

    fn monic(&self, a: &FpPoly) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul_scalar(c, inv)).collect()
            }
        }
    }

    fn derivative(&self, a: &FpPoly) -> FpPoly {
        trim(a.iter().enumerate().skip(1).map(|(k, &c)| self.mul_scalar(c, k as u64 % self.p)).collect())
    }

    fn sub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.len().max(b.len());
        trim((0..n).map(|k| self.sub_scalar(a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0))).collect())
    }

    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add_scalar(out[i + j], self.mul_scalar(x, y));
            }
        }
        trim(out)
    }

    fn divrem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let db = b.len();
        if a.len() < db {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(b[db - 1]);
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - db + 1];
        for k in (0..q.len()).rev() {
            let c = self.mul_scalar(r[k + db - 1], inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = self.sub_scalar(r[k + j], self.mul_scalar(c, bj));
            }
        }
        (trim(q), trim(r))
    }

    fn rem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    fn gcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    fn pow_mod(&self, base: &FpPoly, e: &BigUint, modulus: &FpPoly) -> FpPoly {
        let mut acc = self.rem(&vec![1], modulus);
        let base = self.rem(base, modulus);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), modulus);
            }
        }
        acc
    }

    /// Irreducible monic factors of a monic squarefree polynomial.
    fn factor_squarefree(&self, f: &FpPoly) -> Vec<FpPoly> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x: FpPoly = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut frob = self.rem(&x, &rest);
        let mut d = 1;
        while rest.len() > 2 * d {
            frob = self.pow_mod(&frob, &p, &rest);
            let g = self.gcd(&self.sub(&frob, &x), &rest);
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                frob = self.rem(&frob, &rest);
                self.split_equal_degree(&g, d, &mut out);
            }
            d += 1;
        }
        if rest.len() > 1 {
            out.push(rest);
        }
        out
    }

    /// Cantor-Zassenhaus splitting of a product of distinct degree-`d`
    /// irreducibles.
    fn split_equal_degree(&self, g: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
        if g.len() - 1 == d {
            out.push(g.clone());
            return;
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        let mut rng = XorShift(0x9e37_79b9_7f4a_7c15 ^ (g.len() as u64));
        loop {
            let a = trim((0..g.len() - 1).map(|_| rng.next() % self.p).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &e, g), &vec![1]);
            let h = self.gcd(&b, g);
            if h.len() > 1 && h.len() < g.len() {
                let other = self.divrem(g, &h).0;
                self.split_equal_degree(&h, d, out);
                self.split_equal_degree(&self.monic(&other), d, out);
                return;
            }
        }
    }
}

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}
