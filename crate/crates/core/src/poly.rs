//! Polynomials over GF(2).
//!
//! Coefficients are packed little-endian into `u64` words; bit `i` is the
//! coefficient of `x^i`. The same convention (least significant bit =
//! constant term) is used by the hexadecimal serialization.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomy;
use crate::error::{Error, Result};
use crate::field::{BinaryExtension, FieldSpec, WideField};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    // Invariant: no trailing zero words.
    words: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_mask(1)
    }

    pub fn x() -> Self {
        Self::from_mask(2)
    }

    pub fn monomial(degree: usize) -> Self {
        let mut p = Self { words: vec![0; degree / 64 + 1] };
        p.words[degree / 64] = 1 << (degree % 64);
        p
    }

    pub fn from_mask(mask: u64) -> Self {
        Self::from_words(vec![mask])
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Self { words };
        p.trim();
        p
    }

    /// Polynomial with a coefficient 1 at each listed exponent (repeats cancel).
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    /// `x^n - 1`, which over GF(2) is `x^n + 1`.
    pub fn x_n_minus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.flip(0);
        p
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low 64 coefficients as a mask.
    pub fn low_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// `self += other * x^shift`.
    pub(crate) fn add_shifted(&mut self, other: &Self, shift: usize) {
        if other.is_zero() {
            return;
        }
        xor_shifted(&mut self.words, &other.words, shift);
        self.trim();
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let deg = a.degree().unwrap() + b.degree().unwrap();
        let mut acc = vec![0u64; deg / 64 + 1];
        for i in a.support() {
            xor_shifted(&mut acc, &b.words, i);
        }
        Self::from_words(acc)
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0u64; (da - db) / 64 + 1];
        for i in (db..=da).rev() {
            if (rem[i / 64] >> (i % 64)) & 1 == 1 {
                quot[(i - db) / 64] |= 1 << ((i - db) % 64);
                xor_shifted(&mut rem, &divisor.words, i - db);
            }
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let (q, _) = self.divmod(&g).expect("gcd of nonzero polynomials is nonzero");
        q.mul(other)
    }

    /// `self(x)^2`, by spreading the coefficient bits.
    pub fn square(&self) -> Self {
        let mut out = vec![0u64; self.words.len() * 2];
        for (i, &w) in self.words.iter().enumerate() {
            out[2 * i] = spread(w as u32);
            out[2 * i + 1] = spread((w >> 32) as u32);
        }
        Self::from_words(out)
    }

    /// Coefficient reversal `x^deg h(1/x)`, the generator of the dual code
    /// when `self` is a parity-check polynomial.
    pub fn reciprocal(&self) -> Result<Self> {
        let deg = self.degree().ok_or(Error::ZeroConstantTerm)?;
        if !self.coeff(0) {
            return Err(Error::ZeroConstantTerm);
        }
        let mut out = vec![0u64; deg / 64 + 1];
        for i in self.support() {
            let j = deg - i;
            out[j / 64] |= 1 << (j % 64);
        }
        Ok(Self::from_words(out))
    }

    /// Lowercase hexadecimal coefficient mask, e.g. `0x13` for `x^4 + x + 1`.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0".to_string();
        }
        let mut s = String::from("0x");
        let last = self.words.len() - 1;
        s.push_str(&format!("{:x}", self.words[last]));
        for w in self.words[..last].iter().rev() {
            s.push_str(&format!("{w:016x}"));
        }
        s
    }

    pub fn from_hex(text: &str) -> Result<Self> {
        let digits = text
            .strip_prefix("0x")
            .or_else(|| text.strip_prefix("0X"))
            .unwrap_or(text);
        if digits.is_empty() {
            return Err(Error::InvalidParameter(format!("empty hex mask {text:?}")));
        }
        let mut words = Vec::with_capacity(digits.len() / 16 + 1);
        let bytes = digits.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = &digits[start..end];
            let w = u64::from_str_radix(chunk, 16)
                .map_err(|_| Error::InvalidParameter(format!("bad hex mask {text:?}")))?;
            words.push(w);
            end = start;
        }
        Ok(Self::from_words(words))
    }
}

fn spread(mut x: u32) -> u64 {
    let mut out = 0u64;
    let mut i = 0;
    while x != 0 {
        if x & 1 == 1 {
            out |= 1 << (2 * i);
        }
        x >>= 1;
        i += 1;
    }
    out
}

/// `acc ^= src << shift`, growing `acc` as needed.
pub(crate) fn xor_shifted(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
    let wshift = shift / 64;
    let bshift = shift % 64;
    let need = wshift + src.len() + usize::from(bshift != 0);
    if acc.len() < need {
        acc.resize(need, 0);
    }
    if bshift == 0 {
        for (i, &w) in src.iter().enumerate() {
            acc[wshift + i] ^= w;
        }
    } else {
        for (i, &w) in src.iter().enumerate() {
            acc[wshift + i] ^= w << bshift;
            acc[wshift + i + 1] ^= w >> (64 - bshift);
        }
    }
}

impl Add for &BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn add(self, rhs: &BinaryPolynomial) -> BinaryPolynomial {
        let mut out = self.clone();
        out.add_shifted(rhs, 0);
        out
    }
}

impl Mul for &BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn mul(self, rhs: &BinaryPolynomial) -> BinaryPolynomial {
        BinaryPolynomial::mul(self, rhs)
    }
}

impl fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPolynomial({})", self.to_hex())
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for BinaryPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for BinaryPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Expands `prod (x - r)` over the given roots in an extension field and
/// returns it as a GF(2) polynomial, failing if any coefficient is not 0/1.
pub fn expand_roots<F: BinaryExtension>(field: &F, roots: &[F::Elem]) -> Result<BinaryPolynomial> {
    let mut coeffs = vec![field.one()];
    for r in roots {
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            // (x + r) * c x^j
            next[j + 1] = field.add(&next[j + 1], c);
            let t = field.mul(r, c);
            next[j] = field.add(&next[j], &t);
        }
        coeffs = next;
    }
    let mut p = BinaryPolynomial::zero();
    for (j, c) in coeffs.iter().enumerate() {
        match field.as_bit(c) {
            Some(true) => p.flip(j),
            Some(false) => {}
            None => return Err(Error::NonBinaryCoefficient),
        }
    }
    Ok(p)
}

/// Minimal polynomial over GF(2) of a nonzero element, computed as the
/// product of `(x - e^{2^j})` over its distinct conjugates.
pub fn minimal_polynomial<F: BinaryExtension>(field: &F, e: &F::Elem) -> Result<BinaryPolynomial> {
    if field.is_zero(e) {
        return Err(Error::ZeroElement);
    }
    let mut roots = vec![e.clone()];
    loop {
        let next = field.mul(roots.last().unwrap(), roots.last().unwrap());
        if next == roots[0] {
            break;
        }
        roots.push(next);
    }
    expand_roots(field, &roots)
}

/// Minimal polynomial of `β^s` where `β = α^{(2^m-1)/n}`; the roots are
/// `β^i` for `i` in the 2-cyclotomic coset of `s` modulo `n`.
pub fn coset_minimal_polynomial<F: BinaryExtension>(
    field: &F,
    beta: &F::Elem,
    n: u64,
    s: u64,
) -> Result<BinaryPolynomial> {
    let coset = cyclotomy::coset_of(n, s)?;
    let roots: Vec<F::Elem> = coset.members.iter().map(|&i| field.pow(beta, i)).collect();
    expand_roots(field, &roots)
}

/// Irreducible factors of `x^n - 1` over GF(2), one minimal polynomial per
/// coset leader (ascending leader order).
///
/// The returned factors are checked to multiply back to `x^n - 1`.
pub fn verify_factorization(n: u64, field: &FieldSpec) -> Result<Vec<BinaryPolynomial>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let beta = field.nth_root_of_unity(n)?;
    factor_with(field, &beta.value(), n)
}

/// Same as [`verify_factorization`] with the field chosen automatically:
/// the table-backed field when `ord_n(2) <= 32`, otherwise a polynomial-basis
/// extension field.
pub fn factor_x_n_minus_one(n: u64) -> Result<Vec<BinaryPolynomial>> {
    let m = cyclotomy::ord_mod(n)?;
    if (2..=32).contains(&m) {
        verify_factorization(n, &FieldSpec::new(m)?)
    } else if m == 1 {
        // n = 1: x - 1 is its own factorization.
        Ok(vec![BinaryPolynomial::from_mask(0b11)])
    } else {
        let wide = WideField::for_length(n)?;
        let beta = wide.root_of_unity(n)?;
        factor_with(&wide, &beta, n)
    }
}

fn factor_with<F: BinaryExtension>(field: &F, beta: &F::Elem, n: u64) -> Result<Vec<BinaryPolynomial>> {
    let table = cyclotomy::all_cosets(n)?;
    let mut factors = Vec::with_capacity(table.cosets().len());
    for coset in table.cosets() {
        let roots: Vec<F::Elem> = coset.members.iter().map(|&i| field.pow(beta, i)).collect();
        factors.push(expand_roots(field, &roots)?);
    }
    let product = factors
        .iter()
        .fold(BinaryPolynomial::one(), |acc, f| acc.mul(f));
    if product != BinaryPolynomial::x_n_minus_one(n as usize) {
        return Err(Error::InvalidParameter(format!(
            "factor product differs from x^{n} - 1"
        )));
    }
    Ok(factors)
}
