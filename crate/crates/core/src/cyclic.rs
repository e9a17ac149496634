//! Binary cyclic codes described by a defining set with respect to a fixed
//! primitive n-th root of unity `β = α^{(2^m-1)/n}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::cyclotomy;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{coset_minimal_polynomial, BinaryPolynomial};

/// Above this length only coset leaders and sizes of a defining set are kept.
pub const EXPLICIT_LIMIT: u64 = 1 << 22;

/// Designed distance `delta` and starting exponent `b` of a narrow- or
/// wide-sense BCH code of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BchDesign {
    pub n: usize,
    pub delta: usize,
    pub b: u64,
}

impl BchDesign {
    pub fn new(n: usize, delta: usize, b: u64) -> Self {
        Self { n, delta, b }
    }
}

/// A union of 2-cyclotomic cosets modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    /// `(leader, size)`, sorted by leader.
    cosets: Vec<(u64, usize)>,
    /// All residues, sorted; only kept for `n <= EXPLICIT_LIMIT`.
    residues: Option<Vec<u64>>,
}

impl DefiningSet {
    /// Union of the cosets containing each of `seeds`.
    pub fn from_seeds(n: u64, seeds: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut leaders: Vec<u64> = seeds
            .into_iter()
            .map(|s| cyclotomy::coset_leader(n, s))
            .collect::<Result<_>>()?;
        leaders.sort_unstable();
        leaders.dedup();
        let mut cosets = Vec::with_capacity(leaders.len());
        let mut residues = (n <= EXPLICIT_LIMIT).then(Vec::new);
        for l in leaders {
            let c = cyclotomy::coset_of(n, l)?;
            cosets.push((l, c.size()));
            if let Some(r) = residues.as_mut() {
                r.extend_from_slice(&c.members);
            }
        }
        if let Some(r) = residues.as_mut() {
            r.sort_unstable();
        }
        Ok(Self {
            n,
            cosets,
            residues,
        })
    }

    /// Validates that `residues` is closed under doubling and groups it into cosets.
    pub fn from_residues(n: u64, residues: &[u64]) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenLength(n));
        }
        let mut sorted = residues.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &t in &sorted {
            if t >= n {
                return Err(Error::ResidueOutOfRange { residue: t, n });
            }
            let d = (t * 2) % n;
            if sorted.binary_search(&d).is_err() {
                return Err(Error::NotDoublingClosed {
                    present: t,
                    missing: d,
                });
            }
        }
        Self::from_seeds(n, sorted)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn leaders(&self) -> Vec<u64> {
        self.cosets.iter().map(|&(l, _)| l).collect()
    }

    /// `(leader, size)` pairs.
    pub fn cosets(&self) -> &[(u64, usize)] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.iter().map(|&(_, s)| s).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn residues(&self) -> Option<&[u64]> {
        self.residues.as_deref()
    }

    pub fn contains(&self, i: u64) -> bool {
        let i = i % self.n;
        match &self.residues {
            Some(r) => r.binary_search(&i).is_ok(),
            None => {
                let leader = cyclotomy::coset_leader(self.n, i).expect("odd n");
                self.cosets.binary_search_by_key(&leader, |&(l, _)| l).is_ok()
            }
        }
    }

    fn for_each_member(&self, mut f: impl FnMut(u64)) {
        match &self.residues {
            Some(r) => r.iter().copied().for_each(f),
            None => {
                for &(l, _) in &self.cosets {
                    let c = cyclotomy::coset_of(self.n, l).expect("odd n");
                    c.members.into_iter().for_each(&mut f);
                }
            }
        }
    }

    /// Length of the longest run of cyclically consecutive residues.
    pub fn longest_run(&self) -> usize {
        let n = self.n;
        if self.len() as u64 == n {
            return n as usize;
        }
        let mut best = 0;
        self.for_each_member(|t| {
            if self.contains((t + n - 1) % n) {
                return;
            }
            let mut len = 1;
            while self.contains((t + len as u64) % n) {
                len += 1;
            }
            best = best.max(len);
        });
        best
    }
}

/// A binary cyclic code `<g(x)>` of odd length `n`.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    n: usize,
    field: Arc<FieldSpec>,
    beta_exp: u64,
    defining_set: DefiningSet,
    generator: BinaryPolynomial,
}

fn field_for_length(n: usize) -> Result<Arc<FieldSpec>> {
    let m = cyclotomy::ord_mod(n as u64)?.max(2);
    Ok(Arc::new(FieldSpec::new(m)?))
}

fn check_field(n: usize, field: &FieldSpec) -> Result<u64> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n as u64));
    }
    let order = field.group_order();
    if !order.is_multiple_of(n as u64) {
        return Err(Error::NotADivisor {
            n: n as u64,
            m: field.m(),
        });
    }
    Ok(order / n as u64)
}

impl CyclicCode {
    /// BCH code `C_(2,n,δ,b)` in the smallest field containing n-th roots of unity.
    pub fn bch(design: BchDesign) -> Result<Self> {
        Self::bch_in(design, field_for_length(design.n)?)
    }

    /// BCH code with `g = lcm(M_{β^b}, ..., M_{β^{b+δ-2}})` over the given field.
    pub fn bch_in(design: BchDesign, field: Arc<FieldSpec>) -> Result<Self> {
        let BchDesign { n, delta, b } = design;
        let beta_exp = check_field(n, &field)?;
        if delta < 2 || delta > n {
            return Err(Error::DesignOutOfRange { delta, n });
        }
        let n64 = n as u64;
        let seeds = (0..delta as u64 - 1).map(|j| (b % n64 + j) % n64);
        let defining_set = DefiningSet::from_seeds(n64, seeds)?;
        let beta = field.alpha_pow_raw(beta_exp);
        let mut generator = BinaryPolynomial::one();
        for leader in defining_set.leaders() {
            let mp = coset_minimal_polynomial(field.as_ref(), &beta, n64, leader)?;
            generator = generator.lcm(&mp);
        }
        Ok(Self {
            n,
            field,
            beta_exp,
            defining_set,
            generator,
        })
    }

    /// Cyclic code with `g = prod_{i in T} (x - β^i)` in the smallest field.
    pub fn from_defining_set(n: usize, residues: &[u64]) -> Result<Self> {
        Self::from_defining_set_in(n, residues, field_for_length(n)?)
    }

    pub fn from_defining_set_in(n: usize, residues: &[u64], field: Arc<FieldSpec>) -> Result<Self> {
        let beta_exp = check_field(n, &field)?;
        let defining_set = DefiningSet::from_residues(n as u64, residues)?;
        Self::from_parts(n, field, beta_exp, defining_set)
    }

    /// Union of the cosets of the given leaders (or any representatives).
    pub fn from_coset_representatives(n: usize, reps: &[u64], field: Arc<FieldSpec>) -> Result<Self> {
        let beta_exp = check_field(n, &field)?;
        let defining_set = DefiningSet::from_seeds(n as u64, reps.iter().copied())?;
        Self::from_parts(n, field, beta_exp, defining_set)
    }

    fn from_parts(
        n: usize,
        field: Arc<FieldSpec>,
        beta_exp: u64,
        defining_set: DefiningSet,
    ) -> Result<Self> {
        let beta = field.alpha_pow_raw(beta_exp);
        let mut generator = BinaryPolynomial::one();
        for leader in defining_set.leaders() {
            let mp = coset_minimal_polynomial(field.as_ref(), &beta, n as u64, leader)?;
            generator = generator.mul(&mp);
        }
        Ok(Self {
            n,
            field,
            beta_exp,
            defining_set,
            generator,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.n - self.generator.degree().expect("generator is nonzero")
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.dimension()
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn beta_exp(&self) -> u64 {
        self.beta_exp
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &BinaryPolynomial {
        &self.generator
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn parity_check(&self) -> BinaryPolynomial {
        let (h, r) = BinaryPolynomial::x_n_minus_one(self.n)
            .divmod(&self.generator)
            .expect("nonzero generator");
        debug_assert!(r.is_zero());
        h
    }

    /// Lower bound `d >= run + 1` from the longest run of consecutive
    /// exponents in the defining set.
    pub fn bch_bound(&self) -> usize {
        self.defining_set.longest_run() + 1
    }

    /// Dual code, generated by the reciprocal of the parity-check polynomial;
    /// its defining set is `{-i mod n : i not in T}`.
    pub fn dual(&self) -> Result<Self> {
        let n = self.n as u64;
        if n > EXPLICIT_LIMIT {
            return Err(Error::TooLarge(n));
        }
        let generator = self.parity_check().reciprocal()?;
        let residues: Vec<u64> = (0..n)
            .filter(|&i| !self.defining_set.contains(i))
            .map(|i| (n - i) % n)
            .collect();
        let defining_set = DefiningSet::from_seeds(n, residues)?;
        debug_assert_eq!(generator.degree(), Some(defining_set.len()));
        Ok(Self {
            n: self.n,
            field: Arc::clone(&self.field),
            beta_exp: self.beta_exp,
            defining_set,
            generator,
        })
    }

    /// Rows `x^i g(x)` for `i < k`.
    pub fn generator_rows(&self) -> Vec<BitVector> {
        (0..self.dimension())
            .map(|i| {
                let mut p = BinaryPolynomial::zero();
                p.add_shifted(&self.generator, i);
                BitVector::from_poly(&p, self.n)
            })
            .collect()
    }

    /// Non-systematic encoding `c(x) = u(x) g(x)`.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        let k = self.dimension();
        if message.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: message.len(),
            });
        }
        Ok(BitVector::from_poly(&message.to_poly().mul(&self.generator), self.n))
    }

    fn check_len(&self, v: &BitVector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `g(x) | v(x)`.
    pub fn is_codeword_by_division(&self, v: &BitVector) -> Result<bool> {
        self.check_len(v)?;
        Ok(v.to_poly().rem(&self.generator)?.is_zero())
    }

    /// `v(β^i) = 0` for every `i in T`; checking one element per coset suffices.
    pub fn is_codeword_by_roots(&self, v: &BitVector) -> Result<bool> {
        self.check_len(v)?;
        let f = self.field.as_ref();
        let beta = f.alpha_pow_raw(self.beta_exp);
        for leader in self.defining_set.leaders() {
            let x = f.pow_raw(beta, leader);
            let mut acc = 0u32;
            for i in (0..self.n).rev() {
                acc = f.mul_raw(acc, x) ^ u32::from(v.get(i));
            }
            if acc != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_codeword(&self, v: &BitVector) -> Result<bool> {
        let by_division = self.is_codeword_by_division(v)?;
        debug_assert_eq!(Ok(by_division), self.is_codeword_by_roots(v));
        Ok(by_division)
    }
}
