//! Length thresholds above which `C_(2, (2^s - 1)/λ, 2ℓ, 0)` has dimension
//! `n - 1 - (ℓ-1)s` and is sphere-packing optimal.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ball_volume;
use crate::cyclotomy;
use crate::error::{Error, Result};

/// Smallest `c` with `2^c >= x`.
fn ceil_log2(x: &BigUint) -> u32 {
    if x <= &BigUint::one() {
        0
    } else {
        (x - 1u32).bits() as u32
    }
}

fn validate(ell: u32, lambda: u64) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ell = {ell} must be at least 2")));
    }
    if lambda == 0 || lambda.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("lambda = {lambda} must be odd")));
    }
    Ok(())
}

/// Smallest `s` with `(2ℓ - 1)λ <= 2^{ceil(s/2)}`.
pub fn threshold_s2(ell: u32, lambda: u64) -> Result<u32> {
    validate(ell, lambda)?;
    let target = BigUint::from(2 * ell as u64 - 1) * lambda;
    Ok((2 * ceil_log2(&target)).saturating_sub(1).max(1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    /// Coefficient of `n^i` at index `i`; the last entry is the leading 1.
    #[serde(with = "crate::decimal::signed_vec")]
    pub coefficients: Vec<BigInt>,
    /// `max_{i < ℓ} |a_i|`.
    #[serde(with = "crate::decimal")]
    pub a: BigUint,
    /// Smallest `s` with `1 + ℓλa < 2^{ceil(s/2)}`.
    pub s1: u32,
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_scaled(acc: &mut Vec<BigInt>, p: &[BigInt], scale: &BigInt) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, c) in acc.iter_mut().zip(p) {
        *a += c * scale;
    }
}

/// `ℓ! (sum_{i <= ℓ} C(n, i) - 2 (λn + 1)^{ℓ-1})` as a polynomial in `n`.
pub fn expansion_and_s1(ell: u32, lambda: u64) -> Result<Expansion> {
    validate(ell, lambda)?;
    let ell_us = ell as usize;
    let mut coefficients = vec![BigInt::zero()];
    // falling = n (n-1) ... (n-i+1); ℓ! C(n, i) = (ℓ!/i!) falling.
    let mut falling = vec![BigInt::one()];
    let mut scale: BigInt = (1..=ell as u64).product::<u64>().into();
    for i in 0..=ell_us {
        if i > 0 {
            falling = poly_mul(&falling, &[BigInt::from(-(i as i64 - 1)), BigInt::one()]);
            scale /= i as u64;
        }
        poly_add_scaled(&mut coefficients, &falling, &scale);
    }
    let factorial: BigInt = (1..=ell as u64).product::<u64>().into();
    let mut power = vec![BigInt::one()];
    for _ in 1..ell {
        power = poly_mul(&power, &[BigInt::one(), BigInt::from(lambda)]);
    }
    poly_add_scaled(&mut coefficients, &power, &(-2 * factorial));
    debug_assert_eq!(coefficients.len(), ell_us + 1);
    debug_assert!(coefficients[ell_us].is_one());

    let a = coefficients[..ell_us]
        .iter()
        .map(|c| c.abs().to_biguint().expect("absolute value"))
        .max()
        .unwrap_or_default();
    let bound = BigUint::one() + &a * ell * lambda;
    // Smallest c with 2^c > bound, then the smallest s with ceil(s/2) = c.
    let c = bound.bits() as u32;
    Ok(Expansion {
        coefficients,
        a,
        s1: (2 * c).saturating_sub(1).max(1),
    })
}

/// Horner evaluation of an integer polynomial.
pub fn evaluate_expansion(coefficients: &[BigInt], n: &BigInt) -> BigInt {
    coefficients
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * n + c)
}

/// Outcome at one admissible `s'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdCheck {
    pub s: u32,
    pub n: u64,
    /// Odd `i < 2ℓ - 2` lead distinct cosets of size `s`.
    pub cosets_ok: bool,
    /// `sum_{i <= ℓ} C(n, i) > 2^{(ℓ-1)s + 1}`, excluding distance `2ℓ + 1`.
    pub sphere_packing_ok: bool,
}

impl ThresholdCheck {
    pub fn pass(&self) -> bool {
        self.cosets_ok && self.sphere_packing_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub ell: u32,
    pub lambda: u64,
    pub s2: u32,
    #[serde(with = "crate::decimal::signed_vec")]
    pub coefficients: Vec<BigInt>,
    #[serde(with = "crate::decimal")]
    pub a: BigUint,
    pub s1: u32,
    pub s_theorem: u32,
    /// Smallest `s` such that every admissible `s'` in `[s, horizon]` passes;
    /// `None` when the horizon itself fails.
    pub s_empirical: Option<u32>,
    pub horizon: u32,
    pub checks: Vec<ThresholdCheck>,
}

/// Largest horizon supported; lengths must fit in `u64`.
const MAX_HORIZON: u32 = 63;

fn check_at(ell: u32, lambda: u64, s: u32) -> Result<Option<ThresholdCheck>> {
    let full = (1u64 << s) - 1;
    if !full.is_multiple_of(lambda) {
        return Ok(None);
    }
    let n = full / lambda;
    let mut cosets_ok = true;
    for i in (1..=2 * ell as u64 - 3).step_by(2) {
        if i >= n
            || cyclotomy::coset_leader(n, i)? != i
            || cyclotomy::coset_size(n, i)? != s as usize
        {
            cosets_ok = false;
            break;
        }
    }
    let sphere_packing_ok = ball_volume(n as usize, ell as usize)
        > BigUint::one() << ((ell as usize - 1) * s as usize + 1);
    Ok(Some(ThresholdCheck {
        s,
        n,
        cosets_ok,
        sphere_packing_ok,
    }))
}

pub fn empirical_threshold(ell: u32, lambda: u64, horizon: u32) -> Result<ThresholdReport> {
    let s2 = threshold_s2(ell, lambda)?;
    if horizon < s2 {
        return Err(Error::HorizonBelowS2 { horizon, s2 });
    }
    if horizon > MAX_HORIZON {
        return Err(Error::InvalidParameter(format!(
            "horizon {horizon} exceeds {MAX_HORIZON}"
        )));
    }
    let expansion = expansion_and_s1(ell, lambda)?;
    let mut checks = Vec::new();
    for s in 1..=horizon {
        if let Some(c) = check_at(ell, lambda, s)? {
            checks.push(c);
        }
    }
    let s_empirical = match checks.iter().rposition(|c| !c.pass()) {
        None => Some(1),
        Some(i) if i + 1 < checks.len() => Some(checks[i + 1].s),
        Some(_) => None,
    };
    Ok(ThresholdReport {
        ell,
        lambda,
        s2,
        s_theorem: expansion.s1.max(s2),
        coefficients: expansion.coefficients,
        a: expansion.a,
        s1: expansion.s1,
        s_empirical,
        horizon,
        checks,
    })
}

/// Reports for `ℓ = 2..=ell_max`, computed in parallel and returned in order.
pub fn table1(lambda: u64, ell_max: u32, horizon: u32) -> Result<Vec<ThresholdReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = (2..=ell_max)
            .map(|ell| scope.spawn(move || empirical_threshold(ell, lambda, horizon)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("threshold worker panicked"))
            .collect()
    })
}
