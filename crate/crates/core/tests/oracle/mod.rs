//! Reference computations written independently of the library: a plain
//! shift-and-add GF(2^m), parity-check matrices built straight from powers
//! of a root of unity, and brute-force enumeration.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

pub struct Gf {
    pub m: u32,
    pub modulus: u64,
}

impl Gf {
    /// GF(2^m) with the first primitive modulus found by brute force.
    pub fn new(m: u32) -> Self {
        Self::new_skipping(m, 0)
    }

    /// Like [`Gf::new`] but skips the first `skip` primitive moduli.
    pub fn new_skipping(m: u32, mut skip: usize) -> Self {
        let mut mask = (1u64 << m) | 1;
        loop {
            let f = Gf { m, modulus: mask };
            if f.order(2) == (1u64 << m) - 1 {
                if skip == 0 {
                    return f;
                }
                skip -= 1;
            }
            mask += 2;
        }
    }

    pub fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let mut r = 0;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.m & 1 == 1 {
                a ^= self.modulus;
            }
        }
        r
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// Multiplicative order by repeated multiplication; 0 if not invertible.
    pub fn order(&self, a: u64) -> u64 {
        let mut x = a;
        for k in 1..=(1u64 << self.m) {
            if x == 1 {
                return k;
            }
            x = self.mul(x, a);
            if x == 0 {
                return 0;
            }
        }
        0
    }

    pub fn trace(&self, a: u64) -> u64 {
        let mut t = 0;
        let mut x = a;
        for _ in 0..self.m {
            t ^= x;
            x = self.mul(x, x);
        }
        t
    }
}

/// Smallest `m` with `2^m = 1 mod n`.
pub fn ord2(n: u64) -> u32 {
    let mut x = 2 % n;
    let mut m = 1;
    while x != 1 % n {
        x = x * 2 % n;
        m += 1;
    }
    m
}

/// The 2-cyclotomic coset of `i` modulo `n`.
pub fn coset(n: u64, i: u64) -> Vec<u64> {
    let mut c = vec![i % n];
    let mut x = i * 2 % n;
    while x != i % n {
        c.push(x);
        x = x * 2 % n;
    }
    c
}

/// Closure under doubling of `b, b+1, ..., b+delta-2`.
pub fn bch_defining_set(n: u64, delta: u64, b: u64) -> Vec<u64> {
    let mut t: Vec<u64> = (0..delta - 1)
        .flat_map(|j| coset(n, (b + j) % n))
        .collect();
    t.sort_unstable();
    t.dedup();
    t
}

pub type Row = Vec<u64>;

pub fn row_zero(n: usize) -> Row {
    vec![0; n.div_ceil(64)]
}

pub fn set_bit(r: &mut Row, i: usize) {
    r[i / 64] |= 1 << (i % 64);
}

pub fn get_bit(r: &Row, i: usize) -> bool {
    r[i / 64] >> (i % 64) & 1 == 1
}

pub fn weight(r: &Row) -> usize {
    r.iter().map(|w| w.count_ones() as usize).sum()
}

/// Binary expansion of the conditions `c(β^t) = 0` for every `t` in
/// `defining_set`, row-reduced. Its row space is the dual code.
pub struct ParityCheck {
    pub n: usize,
    pub rows: Vec<Row>,
}

impl ParityCheck {
    pub fn new(n: u64, defining_set: &[u64], gf: &Gf) -> Self {
        let m = gf.m;
        let beta = gf.pow(2, ((1u64 << m) - 1) / n);
        assert_eq!(gf.order(beta), n, "β must have order n");
        let mut rows = Vec::new();
        for &t in defining_set {
            let bt = gf.pow(beta, t);
            let mut block = vec![row_zero(n as usize); m as usize];
            let mut x = 1u64;
            for j in 0..n as usize {
                for (r, row) in block.iter_mut().enumerate() {
                    if x >> r & 1 == 1 {
                        set_bit(row, j);
                    }
                }
                x = gf.mul(x, bt);
            }
            rows.extend(block);
        }
        Self {
            n: n as usize,
            rows: reduce(rows),
        }
    }

    /// Parity check of the code extended by an overall parity bit.
    pub fn extended(&self) -> Self {
        let n1 = self.n + 1;
        let mut rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| {
                let mut x = row_zero(n1);
                for i in 0..self.n {
                    if get_bit(r, i) {
                        set_bit(&mut x, i);
                    }
                }
                x
            })
            .collect();
        let mut ones = row_zero(n1);
        for i in 0..n1 {
            set_bit(&mut ones, i);
        }
        rows.push(ones);
        Self {
            n: n1,
            rows: reduce(rows),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dimension(&self) -> usize {
        self.n - self.rank()
    }

    /// Column `j` packed into an integer (rank at most 128).
    pub fn column(&self, j: usize) -> u128 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (r, row)| acc | (get_bit(row, j) as u128) << r)
    }
}

/// Gaussian elimination; returns a basis of the row space.
pub fn reduce(mut rows: Vec<Row>) -> Vec<Row> {
    let mut basis: Vec<Row> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut r in rows.drain(..) {
        for (b, &p) in basis.iter().zip(&pivots) {
            if get_bit(&r, p) {
                for (x, y) in r.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if let Some(p) = (0..r.len() * 64).find(|&i| i / 64 < r.len() && get_bit(&r, i)) {
            for (b, _) in basis.iter_mut().zip(&pivots) {
                if get_bit(b, p) {
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x ^= y;
                    }
                }
            }
            basis.push(r);
            pivots.push(p);
        }
    }
    basis
}

/// Weight histogram of the span of `basis`, walking a Gray code.
pub fn span_histogram(basis: &[Row], n: usize) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let mut cur = row_zero(n);
    hist[0] = 1;
    for g in 1u64..(1u64 << basis.len()) {
        let bit = g.trailing_zeros() as usize;
        for (x, y) in cur.iter_mut().zip(&basis[bit]) {
            *x ^= y;
        }
        hist[weight(&cur)] += 1;
    }
    hist
}

/// All words of the span of `basis`.
pub fn span_words(basis: &[Row], n: usize) -> Vec<Row> {
    let mut out = vec![row_zero(n)];
    for b in basis {
        let more: Vec<Row> = out
            .iter()
            .map(|w| w.iter().zip(b).map(|(x, y)| x ^ y).collect())
            .collect();
        out.extend(more);
    }
    out
}

pub fn sparse(hist: &[u64]) -> BTreeMap<usize, u64> {
    hist.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(w, &c)| (w, c))
        .collect()
}

pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// `sum_{i <= r} C(n, i)`.
pub fn ball(n: u64, r: u64) -> BigUint {
    (0..=r).map(|i| binom(n, i)).sum()
}

/// Rows `0..=n` of Pascal's triangle.
pub fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for a in 1..=n {
        let prev = &rows[a - 1];
        let mut row = vec![BigInt::one(); a + 1];
        for b in 1..a {
            row[b] = &prev[b - 1] + &prev[b];
        }
        rows.push(row);
    }
    rows
}

/// Distribution of the dual of the code with histogram `hist` and
/// dimension `k`, evaluated as `2^{-k} sum_i A_i K_j(i)`.
pub fn macwilliams(hist: &BTreeMap<usize, u64>, n: usize, k: usize) -> BTreeMap<usize, BigUint> {
    let c = pascal(n);
    let scale = BigInt::one() << k;
    let mut out = BTreeMap::new();
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (&i, &a) in hist {
            let mut kj = BigInt::zero();
            for t in j.saturating_sub(n - i)..=j.min(i) {
                let term = &c[i][t] * &c[n - i][j - t];
                if t % 2 == 1 {
                    kj -= term;
                } else {
                    kj += term;
                }
            }
            acc += kj * a;
        }
        assert!((&acc % &scale).is_zero(), "non-integral MacWilliams coefficient at {j}");
        let q = acc / &scale;
        assert!(!q.is_negative());
        if !q.is_zero() {
            out.insert(j, q.to_biguint().unwrap());
        }
    }
    out
}

pub fn min_nonzero(d: &BTreeMap<usize, BigUint>) -> usize {
    *d.keys().find(|&&w| w > 0).expect("nonzero code")
}

/// Number of weight-3 codewords, by testing every triple of columns.
pub fn direct_weight3(h: &ParityCheck) -> u64 {
    let cols: Vec<u128> = (0..h.n).map(|j| h.column(j)).collect();
    let mut count = 0;
    for a in 0..h.n {
        for b in a + 1..h.n {
            let ab = cols[a] ^ cols[b];
            count += cols[b + 1..].iter().filter(|&&c| c == ab).count() as u64;
        }
    }
    count
}

/// Everything the acceptance checks need about one BCH code.
pub struct Measured {
    pub n: usize,
    pub k: usize,
    pub dual: BTreeMap<usize, u64>,
    pub code: BTreeMap<usize, BigUint>,
    pub d: usize,
    pub ext_dual: BTreeMap<usize, u64>,
    pub ext_code: BTreeMap<usize, BigUint>,
    pub ext_d: usize,
}

pub fn measure_bch(n: u64, delta: u64, b: u64) -> Measured {
    let gf = Gf::new(ord2(n));
    let h = ParityCheck::new(n, &bch_defining_set(n, delta, b), &gf);
    let nn = n as usize;
    let k = h.dimension();
    let dual = sparse(&span_histogram(&h.rows, nn));
    let code = macwilliams(&dual, nn, h.rank());
    let he = h.extended();
    let ext_dual = sparse(&span_histogram(&he.rows, nn + 1));
    let ext_code = macwilliams(&ext_dual, nn + 1, he.rank());
    Measured {
        n: nn,
        k,
        d: min_nonzero(&code),
        ext_d: min_nonzero(&ext_code),
        dual,
        code,
        ext_dual,
        ext_code,
    }
}

pub fn to_u64_map(d: &BTreeMap<usize, BigUint>) -> BTreeMap<usize, u64> {
    d.iter().map(|(&w, c)| (w, c.to_u64().unwrap())).collect()
}
