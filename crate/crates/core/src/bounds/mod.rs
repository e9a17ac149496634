//! Sphere packing and Griesmer bounds, and optimality certificates built
//! from a distance interval.

mod threshold;

pub use threshold::{
    empirical_threshold, evaluate_expansion, expansion_and_s1, table1, threshold_s2, Expansion,
    ThresholdCheck, ThresholdReport,
};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::analysis::{DistanceBound, DistanceInfo, Provenance};
use crate::error::{Error, Result};

/// `sum_{i <= r} C(n, i)`.
pub fn ball_volume(n: usize, r: usize) -> BigUint {
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    for i in 1..=r.min(n) {
        term = term * (n - i + 1) / i;
        sum += &term;
    }
    sum
}

/// Sphere packing admits `[n, k, d]` iff `V(n, floor((d-1)/2)) <= 2^{n-k}`.
pub fn sphere_packing_admits(n: usize, k: usize, d: usize) -> bool {
    if d == 0 {
        return true;
    }
    ball_volume(n, (d - 1) / 2) <= BigUint::one() << (n - k)
}

/// Largest `d <= n` admitted by the sphere packing bound.
pub fn sphere_packing_max_d(n: usize, k: usize) -> usize {
    let cap = BigUint::one() << (n - k);
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    let mut r = 0;
    while r < n {
        let next = &term * (n - r) / (r + 1);
        if &sum + &next > cap {
            break;
        }
        term = next;
        sum += &term;
        r += 1;
    }
    (2 * r + 2).min(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriesmerCheck {
    /// `sum_{i < k} ceil(d / 2^i)`.
    pub sum: u64,
    pub satisfied: bool,
    pub meets_with_equality: bool,
}

pub fn griesmer_check(n: usize, k: usize, d: usize) -> GriesmerCheck {
    let d = d as u64;
    let mut sum = 0u64;
    for i in 0..k {
        // Once 2^i >= d every remaining term is 1.
        if i >= 64 || (1u64 << i) >= d {
            sum += (k - i) as u64;
            break;
        }
        sum += d.div_ceil(1u64 << i);
    }
    GriesmerCheck {
        sum,
        satisfied: n as u64 >= sum,
        meets_with_equality: n as u64 == sum,
    }
}

/// Exact values entering the sphere packing verdict for distance `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundArithmetic {
    /// `2^{n-k}`.
    #[serde(with = "crate::decimal")]
    pub redundancy_power: BigUint,
    /// `V(n, floor((d-1)/2))`; at most `redundancy_power` for any real code.
    #[serde(with = "crate::decimal")]
    pub ball_at_d: BigUint,
    /// `V(n, floor(d/2))`; exceeding `redundancy_power` excludes distance `d + 1`.
    #[serde(with = "crate::decimal")]
    pub ball_at_d_plus_one: BigUint,
    /// `V(n - 1, floor((d-1)/2))`. An `[n, k, d+1]` code punctures to an
    /// `[n-1, k, d]` code, so exceeding `redundancy_power / 2` also excludes
    /// `d + 1`. This is what settles odd `d`, where both balls coincide.
    #[serde(with = "crate::decimal")]
    pub punctured_ball: BigUint,
}

impl BoundArithmetic {
    /// Sphere packing, at length `n` or after puncturing, rules out `d + 1`.
    pub fn excludes_next(&self) -> bool {
        if self.ball_at_d_plus_one > self.redundancy_power {
            return true;
        }
        // k = n leaves nothing to puncture into: d = 1 is forced.
        self.redundancy_power.is_one() || self.punctured_ball > (&self.redundancy_power >> 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityCertificate {
    pub n: usize,
    pub k: usize,
    pub d_lower: DistanceBound,
    pub d_upper: DistanceBound,
    /// Distance pinned and `d + 1` excluded by sphere packing, applied to the
    /// code or to its puncturing.
    pub optimal: bool,
    /// Sphere packing met with equality.
    pub perfect: bool,
    pub griesmer: GriesmerCheck,
    pub bound_arithmetic: BoundArithmetic,
}

impl OptimalityCertificate {
    pub fn exact_distance(&self) -> Option<usize> {
        (self.d_lower.value == self.d_upper.value).then_some(self.d_lower.value)
    }
}

/// Certificate for an `[n, k]` code whose distance lies in `[lower, upper]`.
pub fn certify_distance(
    n: usize,
    k: usize,
    lower: DistanceBound,
    upper: DistanceBound,
) -> Result<OptimalityCertificate> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("dimension {k} for length {n}")));
    }
    if lower.value > upper.value {
        return Err(Error::InconsistentBounds {
            lower: lower.value,
            upper: upper.value,
        });
    }
    let d = lower.value;
    let redundancy_power = BigUint::one() << (n - k);
    let ball_at_d = ball_volume(n, d.saturating_sub(1) / 2);
    let ball_at_d_plus_one = ball_volume(n, d / 2);
    let punctured_ball = ball_volume(n - 1, d.saturating_sub(1) / 2);
    let exact = lower.value == upper.value;
    if exact && ball_at_d > redundancy_power {
        return Err(Error::InconsistentBounds {
            lower: d,
            upper: sphere_packing_max_d(n, k),
        });
    }
    let bound_arithmetic = BoundArithmetic {
        redundancy_power,
        ball_at_d,
        ball_at_d_plus_one,
        punctured_ball,
    };
    Ok(OptimalityCertificate {
        n,
        k,
        optimal: exact && bound_arithmetic.excludes_next(),
        perfect: exact && bound_arithmetic.ball_at_d == bound_arithmetic.redundancy_power,
        griesmer: griesmer_check(n, k, d),
        d_lower: lower,
        d_upper: upper,
        bound_arithmetic,
    })
}

/// Certificate from the result of [`crate::analysis::min_distance`] or
/// [`crate::analysis::extend_parameters`].
pub fn certify(info: &DistanceInfo) -> Result<OptimalityCertificate> {
    certify_distance(info.n, info.k, info.lower, info.upper)
}

/// Certificate for a code with known exact distance and no finer provenance.
pub fn certify_exact(n: usize, k: usize, d: usize, provenance: Provenance) -> Result<OptimalityCertificate> {
    let b = DistanceBound {
        value: d,
        provenance,
    };
    certify_distance(n, k, b, b)
}
