//! Arithmetic in GF(2^m).
//!
//! [`FieldSpec`] covers `2 <= m <= 32` with a primitive modulus, so `α = x`
//! generates the multiplicative group. Up to `m = 20` multiplication goes
//! through exponent/log tables; above that it is carry-less multiplication
//! followed by reduction.
//!
//! [`WideField`] is a plain polynomial-basis field of any degree over an
//! irreducible (not necessarily primitive) modulus. It only exists so that
//! `x^n - 1` can be factored for lengths whose `ord_n(2)` exceeds 32.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use crate::cyclotomy;
use crate::error::{Error, Result};
use crate::poly::BinaryPolynomial;

/// Lexicographically smallest primitive polynomial of each degree 2..=32,
/// as coefficient masks (bit i = coefficient of x^i).
pub const PRIMITIVE_MODULI: [u64; 31] = [
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11d,
    0x211,
    0x409,
    0x805,
    0x1053,
    0x201b,
    0x402b,
    0x8003,
    0x1002d,
    0x20009,
    0x40027,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x4000047,
    0x8000027,
    0x10000009,
    0x20000005,
    0x40000053,
    0x80000009,
    0x1000000af,
];

/// Largest degree for which exponent/log tables are materialized.
pub const TABLE_MAX_DEGREE: u32 = 20;

/// Common interface for the extension fields used to expand conjugate
/// products into GF(2) polynomials.
pub trait BinaryExtension {
    type Elem: Clone + PartialEq;

    fn degree(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `Some(bit)` when the element lies in the prime field.
    fn as_bit(&self, a: &Self::Elem) -> Option<bool>;
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// GF(2^m) with a fixed primitive modulus. Immutable after construction.
pub struct FieldSpec {
    m: u32,
    modulus: u64,
    order: u64,
    order_factors: Vec<u64>,
    tables: Option<LogTables>,
    baby_steps: OnceLock<HashMap<u32, u32>>,
}

/// An element of a particular [`FieldSpec`], tagged with its modulus so
/// that operands from different fields are rejected.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: u64,
}

impl FieldElement {
    /// Bit-vector view (bit i = coefficient of α^i in the polynomial basis).
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn field_modulus(&self) -> u64 {
        self.field
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:#x} mod {:#x})", self.value, self.field)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

fn clmul_reduce(a: u32, b: u32, modulus: u64, m: u32) -> u32 {
    let mut prod = 0u64;
    let mut a = a as u64;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            prod ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    for i in (m..64).rev() {
        if (prod >> i) & 1 == 1 {
            prod ^= modulus << (i - m);
        }
    }
    prod as u32
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn pow_mod_poly(base: u32, mut e: u64, modulus: u64, m: u32) -> u32 {
    let mut acc = 1u32;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = clmul_reduce(acc, b, modulus, m);
        }
        b = clmul_reduce(b, b, modulus, m);
        e >>= 1;
    }
    acc
}

/// Whether `mask` is a primitive polynomial of degree `m` (`2 <= m <= 32`):
/// `x` has multiplicative order exactly `2^m - 1` modulo it.
pub fn is_primitive_modulus(mask: u64, m: u32) -> bool {
    if !(2..=32).contains(&m) || mask >> m != 1 || mask & 1 == 0 {
        return false;
    }
    let order = (1u64 << m) - 1;
    if pow_mod_poly(2, order, mask, m) != 1 {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|p| pow_mod_poly(2, order / p, mask, m) != 1)
}

impl FieldSpec {
    /// GF(2^m) over the built-in primitive modulus.
    pub fn new(m: u32) -> Result<Self> {
        if !(2..=32).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        Ok(Self::build(m, PRIMITIVE_MODULI[(m - 2) as usize]))
    }

    /// GF(2^m) over a caller-chosen modulus, which must be primitive.
    pub fn with_modulus(m: u32, modulus: u64) -> Result<Self> {
        if !(2..=32).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        if !is_primitive_modulus(modulus, m) {
            return Err(Error::NotPrimitive(modulus, m));
        }
        Ok(Self::build(m, modulus))
    }

    fn build(m: u32, modulus: u64) -> Self {
        let order = (1u64 << m) - 1;
        let tables = (m <= TABLE_MAX_DEGREE).then(|| {
            let mut exp = Vec::with_capacity(order as usize);
            let mut log = vec![0u32; order as usize + 1];
            let mut v: u32 = 1;
            for i in 0..order as u32 {
                exp.push(v);
                log[v as usize] = i;
                v <<= 1;
                if (v as u64) >> m & 1 == 1 {
                    v ^= modulus as u32;
                }
            }
            LogTables { exp, log }
        });
        Self {
            m,
            modulus,
            order,
            order_factors: prime_factors(order),
            tables,
            baby_steps: OnceLock::new(),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> BinaryPolynomial {
        BinaryPolynomial::from_mask(self.modulus)
    }

    pub fn modulus_mask(&self) -> u64 {
        self.modulus
    }

    /// Order `2^m - 1` of the multiplicative group.
    pub fn group_order(&self) -> u64 {
        self.order
    }

    /// `exp_table[i] = α^i`, when tables are materialized (`m <= 20`).
    pub fn exp_table(&self) -> Option<&[u32]> {
        self.tables.as_ref().map(|t| t.exp.as_slice())
    }

    /// `log_table[v] = log_α v` for nonzero `v`; entry 0 is unused.
    pub fn log_table(&self) -> Option<&[u32]> {
        self.tables.as_ref().map(|t| t.log.as_slice())
    }

    // Raw bit-vector arithmetic; callers guarantee values are < 2^m.

    pub fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[a as usize] as u64 + t.log[b as usize] as u64;
                t.exp[(s % self.order) as usize]
            }
            None => clmul_reduce(a, b, self.modulus, self.m),
        }
    }

    pub fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return u32::from(e == 0);
        }
        match &self.tables {
            Some(t) => {
                let l = t.log[a as usize] as u128 * (e % self.order) as u128;
                t.exp[(l % self.order as u128) as usize]
            }
            None => pow_mod_poly(a, e % self.order, self.modulus, self.m),
        }
    }

    pub fn inv_raw(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow_raw(a, self.order - 1))
    }

    pub fn alpha_pow_raw(&self, e: u64) -> u32 {
        match &self.tables {
            Some(t) => t.exp[(e % self.order) as usize],
            None => pow_mod_poly(2, e % self.order, self.modulus, self.m),
        }
    }

    /// Discrete logarithm base α of a nonzero value.
    pub fn log_raw(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            return Some(t.log[a as usize] as u64);
        }
        // Baby-step giant-step over a group of order up to 2^32 - 1.
        let step = (self.order as f64).sqrt().ceil() as u64;
        let baby = self.baby_steps.get_or_init(|| {
            let mut map = HashMap::with_capacity(step as usize);
            let mut v = 1u32;
            for j in 0..step as u32 {
                map.entry(v).or_insert(j);
                v = clmul_reduce(v, 2, self.modulus, self.m);
            }
            map
        });
        let giant = self.inv_raw(self.alpha_pow_raw(step)).expect("nonzero");
        let mut gamma = a;
        for i in 0..=step {
            if let Some(&j) = baby.get(&gamma) {
                return Some((i * step + j as u64) % self.order);
            }
            gamma = self.mul_raw(gamma, giant);
        }
        None
    }

    /// Absolute trace `a + a^2 + ... + a^{2^{m-1}}`, returned as 0 or 1.
    pub fn trace_raw(&self, a: u32) -> u8 {
        let mut acc = 0u32;
        let mut x = a;
        for _ in 0..self.m {
            acc ^= x;
            x = self.mul_raw(x, x);
        }
        debug_assert!(acc <= 1, "trace must lie in GF(2)");
        acc as u8
    }

    fn tag(&self, value: u32) -> FieldElement {
        FieldElement {
            value,
            field: self.modulus,
        }
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if a.field == self.modulus {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if self.m < 32 && value >> self.m != 0 {
            return Err(Error::InvalidParameter(format!(
                "value {value:#x} has more than {} bits",
                self.m
            )));
        }
        Ok(self.tag(value))
    }

    pub fn zero(&self) -> FieldElement {
        self.tag(0)
    }

    pub fn one(&self) -> FieldElement {
        self.tag(1)
    }

    /// The primitive element α (the class of x).
    pub fn alpha(&self) -> FieldElement {
        self.tag(2)
    }

    pub fn alpha_pow(&self, e: u64) -> FieldElement {
        self.tag(self.alpha_pow_raw(e))
    }

    /// Exponent view: `Some(e)` with `α^e = a` iff `a != 0`.
    pub fn exponent(&self, a: &FieldElement) -> Result<Option<u64>> {
        self.check(a)?;
        Ok(self.log_raw(a.value))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.tag(a.value ^ b.value))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.tag(self.mul_raw(a.value, b.value)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.inv_raw(a.value)
            .map(|v| self.tag(v))
            .ok_or(Error::InverseOfZero)
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.tag(self.pow_raw(a.value, e)))
    }

    pub fn trace(&self, a: &FieldElement) -> Result<u8> {
        self.check(a)?;
        Ok(self.trace_raw(a.value))
    }

    /// `β = α^{(2^m-1)/n}`, a primitive n-th root of unity.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        if n == 0 || !self.order.is_multiple_of(n) {
            return Err(Error::NotADivisor { n, m: self.m });
        }
        Ok(self.alpha_pow(self.order / n))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &FieldElement) -> Result<u64> {
        self.check(a)?;
        if a.value == 0 {
            return Err(Error::ZeroElement);
        }
        let mut ord = self.order;
        for &p in &self.order_factors {
            while ord.is_multiple_of(p) && self.pow_raw(a.value, ord / p) == 1 {
                ord /= p;
            }
        }
        Ok(ord)
    }
}

impl BinaryExtension for FieldSpec {
    type Elem = u32;

    fn degree(&self) -> u32 {
        self.m
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        a ^ b
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul_raw(*a, *b)
    }
    fn pow(&self, a: &u32, e: u64) -> u32 {
        self.pow_raw(*a, e)
    }
    fn as_bit(&self, a: &u32) -> Option<bool> {
        (*a <= 1).then_some(*a == 1)
    }
}

/// GF(2^m) in a polynomial basis over an irreducible modulus of any degree.
#[derive(Debug, Clone)]
pub struct WideField {
    m: u32,
    modulus: BinaryPolynomial,
}

impl WideField {
    /// Field over the smallest irreducible polynomial of degree `m`.
    pub fn new(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::DegreeOutOfRange(m));
        }
        let m_factors = prime_factors(m as u64);
        let mut candidate = BinaryPolynomial::monomial(m as usize);
        candidate.flip(0);
        loop {
            if is_irreducible(&candidate, m, &m_factors) {
                return Ok(Self {
                    m,
                    modulus: candidate,
                });
            }
            // Next odd mask of the same degree.
            candidate = next_candidate(&candidate);
        }
    }

    /// Field of degree `ord_n(2)`, the smallest containing n-th roots of unity.
    pub fn for_length(n: u64) -> Result<Self> {
        Self::new(cyclotomy::ord_mod(n)?)
    }

    pub fn modulus(&self) -> &BinaryPolynomial {
        &self.modulus
    }

    fn reduce(&self, a: &BinaryPolynomial) -> BinaryPolynomial {
        a.rem(&self.modulus).expect("nonzero modulus")
    }

    pub fn pow_big(&self, a: &BinaryPolynomial, e: &BigUint) -> BinaryPolynomial {
        let mut acc = BinaryPolynomial::one();
        for i in (0..e.bits()).rev() {
            acc = self.reduce(&acc.square());
            if e.bit(i) {
                acc = self.reduce(&acc.mul(a));
            }
        }
        acc
    }

    /// An element of multiplicative order exactly `n`.
    pub fn root_of_unity(&self, n: u64) -> Result<BinaryPolynomial> {
        let group = (BigUint::one() << self.m) - BigUint::one();
        if &group % n != BigUint::from(0u32) {
            return Err(Error::NotADivisor { n, m: self.m });
        }
        let cofactor = &group / n;
        let n_factors = prime_factors(n);
        let mut g_mask = 2u64;
        loop {
            let g = BinaryPolynomial::from_mask(g_mask);
            let b = self.pow_big(&g, &cofactor);
            if !b.is_zero()
                && n_factors
                    .iter()
                    .all(|&p| !BinaryExtension::pow(self, &b, n / p).is_one())
            {
                return Ok(b);
            }
            g_mask += 1;
        }
    }
}

fn next_candidate(p: &BinaryPolynomial) -> BinaryPolynomial {
    // Add 2 to the mask (keeps the constant term, walks upward).
    let mut words = p.words().to_vec();
    let mut carry = 2u64;
    for w in words.iter_mut() {
        let (s, o) = w.overflowing_add(carry);
        *w = s;
        if !o {
            break;
        }
        carry = 1;
    }
    BinaryPolynomial::from_words(words)
}

/// Rabin's test: `f` of degree `m` is irreducible iff `x^{2^m} = x mod f`
/// and `gcd(x^{2^{m/q}} - x, f) = 1` for every prime `q | m`.
fn is_irreducible(f: &BinaryPolynomial, m: u32, m_factors: &[u64]) -> bool {
    let x = BinaryPolynomial::x();
    let frob = |k: u64| {
        let mut t = x.clone();
        for _ in 0..k {
            t = t.square().rem(f).expect("nonzero modulus");
        }
        t
    };
    if frob(m as u64) != x {
        return false;
    }
    m_factors.iter().all(|&q| {
        let t = &frob(m as u64 / q) + &x;
        t.gcd(f).is_one()
    })
}

impl BinaryExtension for WideField {
    type Elem = BinaryPolynomial;

    fn degree(&self) -> u32 {
        self.m
    }
    fn zero(&self) -> BinaryPolynomial {
        BinaryPolynomial::zero()
    }
    fn one(&self) -> BinaryPolynomial {
        BinaryPolynomial::one()
    }
    fn is_zero(&self, a: &BinaryPolynomial) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BinaryPolynomial, b: &BinaryPolynomial) -> BinaryPolynomial {
        a + b
    }
    fn mul(&self, a: &BinaryPolynomial, b: &BinaryPolynomial) -> BinaryPolynomial {
        self.reduce(&a.mul(b))
    }
    fn as_bit(&self, a: &BinaryPolynomial) -> Option<bool> {
        match a.degree() {
            None => Some(false),
            Some(0) => Some(true),
            _ => None,
        }
    }
}
