//! Binary field arithmetic over GF(2^(2e+1)).
//!
//! Elements are bit-packed polynomials over GF(2) modulo a fixed irreducible
//! polynomial: bit `i` is the coefficient of `t^i`. The modulus is always the
//! lexicographically smallest irreducible polynomial of the requested degree,
//! so element encodings (and everything derived from them, such as group
//! element fingerprints) are reproducible.
//!
//! Besides the ring operations the field carries the two automorphisms the
//! Suzuki construction needs: the Frobenius `x -> x^2` and the twist
//! `x -> x^(2^(e+1))`, whose square is the Frobenius.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree; products fit in a `u128`.
pub const MAX_DEGREE: u32 = 63;

/// Log/antilog tables are built up to this degree.
const TABLE_DEGREE_LIMIT: u32 = 20;

/// A bit-packed element of GF(2^n).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub const fn new(bits: u64) -> Self {
        FieldElement(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parameters of GF(q), q = 2^(2e+1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub e: u32,
    pub degree: u32,
    pub q: u64,
    /// `2^(e+1)`, the exponent of the Suzuki twist.
    pub r: u64,
    /// Irreducible modulus including the leading `t^degree` bit.
    pub modulus: u64,
    /// `(2e+1)/3` when 3 divides the degree.
    pub triality_exponent: Option<u32>,
}

impl FieldParams {
    /// Parameters for GF(2^degree) with the smallest irreducible modulus.
    pub fn for_degree(degree: u32) -> Result<Self> {
        if degree.is_multiple_of(2) {
            return Err(Error::EvenDegree(degree));
        }
        if degree < 3 {
            return Err(Error::DegreeTooSmall(degree));
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        let e = (degree - 1) / 2;
        let modulus = smallest_irreducible(degree);
        Ok(FieldParams {
            e,
            degree,
            q: 1u64 << degree,
            r: 1u64 << (e + 1),
            modulus,
            triality_exponent: (degree.is_multiple_of(3)).then_some(degree / 3),
        })
    }

    /// Shorthand for `for_degree(2e+1)`.
    pub fn for_e(e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::DegreeTooSmall(1));
        }
        Self::for_degree(2 * e + 1)
    }
}

/// `make_field` under its operational name.
pub fn make_field(degree: u32) -> Result<FieldParams> {
    FieldParams::for_degree(degree)
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    generator: FieldElement,
}

/// GF(2^(2e+1)) with arithmetic.
///
/// Multiplication goes through log/antilog tables for small degrees and
/// falls back to carry-less multiplication otherwise.
pub struct Field {
    params: FieldParams,
    tables: Option<Tables>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Field").field("params", &self.params).finish()
    }
}

impl Field {
    pub fn new(params: FieldParams) -> Self {
        let tables = (params.degree <= TABLE_DEGREE_LIMIT).then(|| build_tables(&params));
        Field { params, tables }
    }

    pub fn with_degree(degree: u32) -> Result<Self> {
        Ok(Self::new(FieldParams::for_degree(degree)?))
    }

    pub fn with_e(e: u32) -> Result<Self> {
        Ok(Self::new(FieldParams::for_e(e)?))
    }

    #[inline]
    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.params.q
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.params.degree
    }

    /// The element with the given bit pattern, reduced into range.
    pub fn element(&self, bits: u64) -> FieldElement {
        FieldElement(bits & (self.params.q - 1))
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.params.q).map(FieldElement)
    }

    /// A multiplicative generator, available when tables were built.
    pub fn primitive_element(&self) -> Option<FieldElement> {
        self.tables.as_ref().map(|t| t.generator)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    return FieldElement::ZERO;
                }
                let s = t.log[a.0 as usize] + t.log[b.0 as usize];
                FieldElement(t.exp[s as usize] as u64)
            }
            None => self.mul_clmul(a, b),
        }
    }

    /// Multiplication by carry-less product and reduction, never using tables.
    pub fn mul_clmul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(mulmod(a.0, b.0, self.params.modulus, self.params.degree))
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip(a))
    }

    /// Inverse of a value the caller knows to be nonzero.
    #[inline]
    pub(crate) fn recip(&self, a: FieldElement) -> FieldElement {
        debug_assert!(!a.is_zero(), "inverse of zero");
        match &self.tables {
            Some(t) => {
                let n = (self.params.q - 1) as u32;
                let l = t.log[a.0 as usize];
                FieldElement(t.exp[((n - l) % n) as usize] as u64)
            }
            None => self.pow(a, self.params.q - 2),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, mut n: u64) -> FieldElement {
        if let Some(t) = &self.tables {
            if a.is_zero() {
                return if n == 0 { FieldElement::ONE } else { FieldElement::ZERO };
            }
            let order = self.params.q - 1;
            let l = (t.log[a.0 as usize] as u128 * (n % order) as u128 % order as u128) as usize;
            return FieldElement(t.exp[l] as u64);
        }
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_clmul(acc, base);
            }
            base = self.mul_clmul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `x -> x^(2^s)`; `s` is taken modulo the degree.
    #[inline]
    pub fn automorphism(&self, x: FieldElement, s: u32) -> FieldElement {
        let s = s % self.params.degree;
        if s == 0 || x.0 <= 1 {
            return x;
        }
        if let Some(t) = &self.tables {
            let order = self.params.q - 1;
            let l = (t.log[x.0 as usize] as u64) << s;
            return FieldElement(t.exp[(l % order) as usize] as u64);
        }
        let mut y = x;
        for _ in 0..s {
            y = self.mul_clmul(y, y);
        }
        y
    }

    #[inline]
    pub fn frobenius(&self, x: FieldElement) -> FieldElement {
        self.automorphism(x, 1)
    }

    /// The Suzuki twist `x -> x^(2^(e+1))`.
    #[inline]
    pub fn theta(&self, x: FieldElement) -> FieldElement {
        self.automorphism(x, self.params.e + 1)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.params.q - 1;
        let mut order = n;
        for (p, _) in factorize(n) {
            while order.is_multiple_of(p) && self.pow(a, order / p) == FieldElement::ONE {
                order /= p;
            }
        }
        Ok(order)
    }
}

/// Carry-less product of two polynomials below `2^63`.
#[inline]
fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= (a as u128) << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

/// Reduce a polynomial modulo `modulus` of the given degree.
#[inline]
fn reduce(mut x: u128, modulus: u64, degree: u32) -> u64 {
    let top = 127 - x.leading_zeros().min(127) as i64;
    let mut i = top;
    while i >= degree as i64 {
        if (x >> i) & 1 == 1 {
            x ^= (modulus as u128) << (i - degree as i64);
        }
        i -= 1;
    }
    x as u64
}

fn mulmod(a: u64, b: u64, modulus: u64, degree: u32) -> u64 {
    reduce(clmul(a, b), modulus, degree)
}

fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        // a mod b
        let db = poly_degree(b);
        while a != 0 && poly_degree(a) >= db {
            a ^= b << (poly_degree(a) - db);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin's test: `f` of degree n is irreducible iff `t^(2^n) = t mod f` and
/// `gcd(t^(2^d) - t, f) = 1` for every proper divisor d of n.
pub fn is_irreducible(f: u64) -> bool {
    let n = poly_degree(f);
    if n < 1 {
        return false;
    }
    let n = n as u32;
    if n == 1 {
        return true;
    }
    // powers[d] = t^(2^d) mod f
    let mut x = 0b10u64;
    let mut powers = Vec::with_capacity(n as usize + 1);
    powers.push(x);
    for _ in 0..n {
        x = mulmod(x, x, f, n);
        powers.push(x);
    }
    if powers[n as usize] != 0b10 {
        return false;
    }
    (1..n)
        .filter(|&d| n.is_multiple_of(d))
        .all(|d| poly_gcd(powers[d as usize] ^ 0b10, f) == 1)
}

/// Lexicographically smallest irreducible polynomial of the given degree.
pub fn smallest_irreducible(degree: u32) -> u64 {
    let lead = 1u64 << degree;
    // odd constant term is necessary for irreducibility (degree >= 2)
    (0..lead)
        .map(|low| lead | low)
        .find(|&f| f & 1 == 1 && is_irreducible(f))
        .expect("irreducible polynomials exist in every degree")
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn build_tables(params: &FieldParams) -> Tables {
    let q = params.q;
    let n = q - 1;
    let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
    let pow = |a: u64, mut k: u64| {
        let (mut base, mut acc) = (a, 1u64);
        while k > 0 {
            if k & 1 == 1 {
                acc = mulmod(acc, base, params.modulus, params.degree);
            }
            base = mulmod(base, base, params.modulus, params.degree);
            k >>= 1;
        }
        acc
    };
    let generator = (2..q)
        .find(|&g| primes.iter().all(|&p| pow(g, n / p) != 1))
        .unwrap_or(1);
    let mut exp = vec![0u32; 2 * n as usize];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u64;
    for i in 0..n as usize {
        exp[i] = x as u32;
        exp[i + n as usize] = x as u32;
        log[x as usize] = i as u32;
        x = mulmod(x, generator, params.modulus, params.degree);
    }
    Tables {
        exp,
        log,
        generator: FieldElement(generator),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Irreducibility by trial division against every polynomial of degree
    /// at most n/2; independent of Rabin's test.
    fn irreducible_by_sieve(f: u64) -> bool {
        let n = poly_degree(f);
        for g in 2u64..(1u64 << (n / 2 + 1)) {
            if poly_degree(g) >= 1 && poly_degree(g) <= n / 2 {
                let mut r = f;
                let dg = poly_degree(g);
                while r != 0 && poly_degree(r) >= dg {
                    r ^= g << (poly_degree(r) - dg);
                }
                if r == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn degree_three_modulus_is_t3_t_1() {
        let p = make_field(3).unwrap();
        assert_eq!(p.modulus, 0b1011);
        assert_eq!((p.q, p.r, p.e, p.triality_exponent), (8, 4, 1, Some(1)));
        let sieved = (8u64..16).find(|&f| irreducible_by_sieve(f)).unwrap();
        assert_eq!(sieved, p.modulus);
    }

    #[test]
    fn degree_nine_and_five_parameters() {
        let p = make_field(9).unwrap();
        assert_eq!((p.q, p.r, p.triality_exponent), (512, 32, Some(3)));
        let p = make_field(5).unwrap();
        assert_eq!((p.q, p.triality_exponent), (32, None));
    }

    #[test]
    fn rabin_test_agrees_with_sieve() {
        for f in 2u64..(1 << 11) {
            assert_eq!(is_irreducible(f), irreducible_by_sieve(f), "f = {f:#b}");
        }
    }

    #[test]
    fn smallest_modulus_matches_sieve_for_small_degrees() {
        for d in [3u32, 5, 7, 9, 11] {
            let lead = 1u64 << d;
            let sieved = (lead..2 * lead).find(|&f| irreducible_by_sieve(f)).unwrap();
            assert_eq!(smallest_irreducible(d), sieved);
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        assert!(matches!(make_field(4), Err(Error::EvenDegree(4))));
        assert!(matches!(make_field(1), Err(Error::DegreeTooSmall(1))));
        assert!(matches!(make_field(65), Err(Error::DegreeTooLarge(65))));
    }

    #[test]
    fn make_field_is_deterministic() {
        for d in [3, 9, 15] {
            assert_eq!(make_field(d).unwrap(), make_field(d).unwrap());
        }
    }

    #[test]
    fn gf8_examples() {
        let f = Field::with_degree(3).unwrap();
        let el = FieldElement::new;
        assert_eq!(f.mul(el(3), el(5)), el(4));
        assert_eq!(f.inv(el(2)).unwrap(), el(5));
        assert_eq!(f.theta(el(2)), el(6));
        assert_eq!(f.frobenius(el(2)), el(4));
        assert_eq!(f.theta(f.theta(el(2))), el(4));
        for a in f.elements() {
            assert_eq!(f.add(a, a), FieldElement::ZERO);
            assert_eq!(f.automorphism(a, 0), a);
        }
        assert!(matches!(f.inv(FieldElement::ZERO), Err(Error::DivisionByZero)));
    }

    /// Log table built by repeated multiplication by t, cross-checked against
    /// table-driven and carry-less multiplication.
    #[test]
    fn gf8_log_table_oracle() {
        let f = Field::with_degree(3).unwrap();
        let mut powers = vec![1u64];
        for _ in 1..7 {
            let last = *powers.last().unwrap();
            let mut next = last << 1;
            if next & 0b1000 != 0 {
                next ^= 0b1011;
            }
            powers.push(next);
        }
        let log = |x: u64| powers.iter().position(|&p| p == x).unwrap();
        for a in 1..8u64 {
            for b in 1..8u64 {
                let expect = powers[(log(a) + log(b)) % 7];
                let (ea, eb) = (FieldElement::new(a), FieldElement::new(b));
                assert_eq!(f.mul(ea, eb).bits(), expect);
                assert_eq!(f.mul_clmul(ea, eb).bits(), expect);
            }
        }
    }

    #[test]
    fn tables_agree_with_clmul_gf512() {
        let f = Field::with_degree(9).unwrap();
        for a in (0..512).step_by(7) {
            for b in 0..512 {
                let (a, b) = (FieldElement::new(a), FieldElement::new(b));
                assert_eq!(f.mul(a, b), f.mul_clmul(a, b));
            }
        }
    }

    #[test]
    fn large_degree_uses_clmul_path() {
        let f = Field::with_degree(33).unwrap();
        assert!(f.primitive_element().is_none());
        let a = FieldElement::new(0x1_2345_6789);
        let ai = f.inv(a).unwrap();
        assert_eq!(f.mul(a, ai), FieldElement::ONE);
        assert_eq!(f.theta(f.theta(a)), f.frobenius(a));
    }

    #[test]
    fn fermat_and_twist_exhaustive_small() {
        for d in [3u32, 5, 7, 9] {
            let f = Field::with_degree(d).unwrap();
            for x in f.elements() {
                if !x.is_zero() {
                    assert_eq!(f.pow(x, f.q() - 1), FieldElement::ONE);
                }
                assert_eq!(f.theta(f.theta(x)), f.square(x));
            }
        }
    }

    #[test]
    fn primitive_element_generates() {
        let f = Field::with_degree(9).unwrap();
        let g = f.primitive_element().unwrap();
        assert_eq!(f.multiplicative_order(g).unwrap(), 511);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(511), vec![(7, 1), (73, 1)]);
        assert_eq!(factorize(545), vec![(5, 1), (109, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(64), vec![(2, 6)]);
    }
}
