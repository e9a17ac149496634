use std::collections::BTreeMap;
use std::fmt;
use std::thread;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::BitVector;
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};

/// Default limit on the dimension of a code enumerated exhaustively.
pub const DEFAULT_ENUM_CAP: u32 = 26;

/// Number of codewords of each Hamming weight. Zero counts are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
}

impl WeightDistribution {
    pub fn from_counts<C: Into<BigUint>>(
        n: usize,
        counts: impl IntoIterator<Item = (usize, C)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (w, c) in counts {
            if w > n {
                return Err(Error::InconsistentDistribution(format!(
                    "weight {w} exceeds length {n}"
                )));
            }
            let c: BigUint = c.into();
            if !c.is_zero() {
                *map.entry(w).or_insert_with(BigUint::zero) += c;
            }
        }
        Ok(Self { n, counts: map })
    }

    fn from_dense(counts: &[u64]) -> Self {
        let n = counts.len() - 1;
        let counts = counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| (w, BigUint::from(c)))
            .collect();
        Self { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    /// Nonzero `(weight, count)` entries in ascending weight order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `log2` of the total, when the total is a power of two.
    pub fn dimension(&self) -> Option<usize> {
        let t = self.total();
        let bits = t.bits();
        (bits > 0 && t == BigUint::one() << (bits - 1)).then(|| (bits - 1) as usize)
    }

    /// Smallest nonzero weight present.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn all_even(&self) -> bool {
        self.counts.keys().all(|w| w % 2 == 0)
    }

    /// `(weight, count-as-decimal)` pairs for serialization.
    pub fn to_pairs(&self) -> Vec<(usize, String)> {
        self.iter().map(|(w, c)| (w, c.to_string())).collect()
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, String)]) -> Result<Self> {
        let parsed = pairs
            .iter()
            .map(|(w, c)| {
                c.parse::<BigUint>()
                    .map(|c| (*w, c))
                    .map_err(|_| Error::InvalidParameter(format!("bad count {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_counts(n, parsed)
    }

    /// Same counts with length `n`; fails if some weight exceeds `n`.
    pub fn with_length(self, n: usize) -> Result<Self> {
        Self::from_counts(n, self.counts)
    }

    fn check_code(&self, k: usize) -> Result<()> {
        if self.total() != BigUint::one() << k {
            return Err(Error::InconsistentDistribution(format!(
                "counts sum to {} instead of 2^{k}",
                self.total()
            )));
        }
        if self.count(0) != BigUint::one() {
            return Err(Error::InconsistentDistribution(
                "the zero word must be counted exactly once".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .iter()
            .map(|(w, c)| match w {
                0 => c.to_string(),
                _ if c.is_one() => format!("z^{w}"),
                _ => format!("{c}z^{w}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    /// The length is not part of the wire format; it is taken as the
    /// largest weight present. Use [`WeightDistribution::from_pairs`] when
    /// the length is known.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(usize, String)>::deserialize(d)?;
        let n = pairs.iter().map(|(w, _)| *w).max().unwrap_or(0);
        Self::from_pairs(n, &pairs).map_err(serde::de::Error::custom)
    }
}

fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |p| p.get())
}

/// Weight distribution of the span of `rows` (assumed linearly independent)
/// by Gray-code enumeration: each step XORs one row into the running word.
///
/// The top bits of the message are fixed per worker and the partial
/// histograms summed, so the result does not depend on `workers`.
pub fn enumerate_span(rows: &[BitVector], n: usize, cap: u32, workers: usize) -> Result<WeightDistribution> {
    let k = rows.len();
    if k > cap as usize {
        return Err(Error::ExceedsCap { dim: k, cap });
    }
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: r.len(),
        });
    }
    let workers = workers.max(1);
    // Split on at most 6 top bits, and keep at least 2^10 words per chunk.
    let mut split = 0;
    while split < 6 && split + 10 < k && (1usize << split) < workers {
        split += 1;
    }
    let low = k - split;
    let chunks: Vec<usize> = (0..1usize << split).collect();
    let per_worker = chunks.len().div_ceil(workers);
    let nwords = n.div_ceil(64);

    let histograms: Vec<Vec<u64>> = thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .chunks(per_worker)
            .map(|mine| {
                scope.spawn(move || {
                    let mut hist = vec![0u64; n + 1];
                    let mut cur = vec![0u64; nwords];
                    for &chunk in mine {
                        cur.iter_mut().for_each(|w| *w = 0);
                        for bit in 0..split {
                            if (chunk >> bit) & 1 == 1 {
                                for (c, r) in cur.iter_mut().zip(rows[low + bit].words()) {
                                    *c ^= r;
                                }
                            }
                        }
                        let weight = |cur: &[u64]| cur.iter().map(|w| w.count_ones() as usize).sum::<usize>();
                        hist[weight(&cur)] += 1;
                        for step in 1u64..(1u64 << low) {
                            let row = rows[step.trailing_zeros() as usize].words();
                            for (c, r) in cur.iter_mut().zip(row) {
                                *c ^= r;
                            }
                            hist[weight(&cur)] += 1;
                        }
                    }
                    hist
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut total = vec![0u64; n + 1];
    for h in histograms {
        for (t, c) in total.iter_mut().zip(h) {
            *t += c;
        }
    }
    Ok(WeightDistribution::from_dense(&total))
}

/// All codewords in the span of `rows`, in Gray-code order.
pub fn span_codewords(rows: &[BitVector], n: usize, cap: u32) -> Result<Vec<BitVector>> {
    if rows.len() > cap as usize {
        return Err(Error::ExceedsCap {
            dim: rows.len(),
            cap,
        });
    }
    let mut cur = BitVector::zeros(n);
    let mut out = Vec::with_capacity(1 << rows.len());
    out.push(cur.clone());
    for step in 1u64..(1u64 << rows.len()) {
        cur.xor_assign(&rows[step.trailing_zeros() as usize]);
        out.push(cur.clone());
    }
    Ok(out)
}

/// Exact weight distribution of a cyclic code with `dim <= cap`.
pub fn weight_distribution_exhaustive(code: &CyclicCode, cap: u32) -> Result<WeightDistribution> {
    weight_distribution_with_workers(code, cap, default_workers())
}

pub fn weight_distribution_with_workers(
    code: &CyclicCode,
    cap: u32,
    workers: usize,
) -> Result<WeightDistribution> {
    let k = code.dimension();
    if k > cap as usize {
        return Err(Error::ExceedsCap { dim: k, cap });
    }
    enumerate_span(&code.generator_rows(), code.n(), cap, workers)
}

/// `(1 - z)^i (1 + z)^{n-i}`, whose coefficients are the Krawtchouk values `K_j(i)`.
fn krawtchouk_column(n: usize, i: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::one();
    // (1 + z)^{n-i}
    for deg in 0..n - i {
        for j in (1..=deg + 1).rev() {
            let prev = poly[j - 1].clone();
            poly[j] += prev;
        }
    }
    // times (1 - z)^i
    for deg in n - i..n {
        for j in (1..=deg + 1).rev() {
            let prev = poly[j - 1].clone();
            poly[j] -= prev;
        }
    }
    poly
}

/// Largest length accepted by [`macwilliams_transform`].
const MACWILLIAMS_MAX_LEN: usize = 1 << 16;

/// Weight distribution of the dual of a binary `[n, k]` code:
/// `B_j = 2^{-k} sum_i A_i K_j(i)`, in exact integer arithmetic.
pub fn macwilliams_transform(wd: &WeightDistribution, k: usize) -> Result<WeightDistribution> {
    wd.check_code(k)?;
    let n = wd.n;
    if n > MACWILLIAMS_MAX_LEN {
        return Err(Error::TooLarge(n as u64));
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, a) in wd.iter() {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (j, kj) in krawtchouk_column(n, i).into_iter().enumerate() {
            if !kj.is_zero() {
                acc[j] += &a * kj;
            }
        }
    }
    let scale = BigInt::one() << k;
    let mut out = BTreeMap::new();
    for (j, v) in acc.into_iter().enumerate() {
        let (q, r) = v.div_rem(&scale);
        if !r.is_zero() {
            return Err(Error::NonIntegral(format!("B_{j} is not an integer")));
        }
        if q.is_negative() {
            return Err(Error::InconsistentDistribution(format!("B_{j} is negative")));
        }
        if !q.is_zero() {
            out.insert(j, q.to_biguint().expect("nonnegative"));
        }
    }
    Ok(WeightDistribution { n, counts: out })
}

/// `K_j(i) = sum_t (-1)^t C(i, t) C(n - i, j - t)`.
fn krawtchouk(n: usize, j: usize, i: usize) -> BigInt {
    let binom = |a: usize, b: usize| -> BigInt {
        if b > a {
            return BigInt::zero();
        }
        let mut c = BigInt::one();
        for t in 0..b {
            c = c * (a - t) / (t + 1);
        }
        c
    };
    (0..=j.min(i))
        .map(|t| {
            let term = binom(i, t) * binom(n - i, j - t);
            if t % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// A single dual count `B_j`; cheap for small `j` at any length.
pub fn macwilliams_coefficient(wd: &WeightDistribution, k: usize, j: usize) -> Result<BigUint> {
    wd.check_code(k)?;
    if j > wd.n {
        return Ok(BigUint::zero());
    }
    let acc: BigInt = wd
        .iter()
        .map(|(i, a)| BigInt::from_biguint(Sign::Plus, a.clone()) * krawtchouk(wd.n, j, i))
        .sum();
    let (q, r) = acc.div_rem(&(BigInt::one() << k));
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("B_{j} is not an integer")));
    }
    q.to_biguint()
        .ok_or_else(|| Error::InconsistentDistribution(format!("B_{j} is negative")))
}

/// `A_3` of an `[n, k]` code with `d >= 3`, from the dual's distribution via
/// the fourth power moment `8 sum j^3 B_j = 2^{n-k} (n^2 (n+3) - 6 A_3)`.
pub fn pless_fourth_moment_a3(dual: &WeightDistribution, n: usize, k: usize) -> Result<BigUint> {
    if dual.n != n || k > n {
        return Err(Error::InconsistentDistribution(format!(
            "dual of length {} does not match [{n}, {k}]",
            dual.n
        )));
    }
    dual.check_code(n - k)?;
    let moment: BigUint = dual
        .iter()
        .map(|(j, b)| b * BigUint::from(j).pow(3))
        .sum::<BigUint>()
        * 8u32;
    let scale = BigUint::one() << (n - k);
    let (per_word, r) = moment.div_rem(&scale);
    if !r.is_zero() {
        return Err(Error::NonIntegral("third moment not divisible by 2^(n-k)".into()));
    }
    let nn = BigInt::from(n);
    let numerator: BigInt = &nn * &nn * (&nn + 3) - BigInt::from(per_word);
    let (a3, r) = numerator.div_rem(&BigInt::from(6));
    if !r.is_zero() {
        return Err(Error::NonIntegral("A_3 is not an integer".into()));
    }
    a3.to_biguint().ok_or_else(|| {
        Error::InconsistentDistribution(format!("A_3 = {a3} is negative"))
    })
}

impl WeightDistribution {
    /// Count at weight `w` as `u64`, when it fits.
    pub fn count_u64(&self, w: usize) -> Option<u64> {
        self.count(w).to_u64()
    }
}
