use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::weights::{
    macwilliams_coefficient, macwilliams_transform, weight_distribution_with_workers,
    WeightDistribution, DEFAULT_ENUM_CAP,
};
use crate::bits::BitVector;
use crate::bounds::sphere_packing_max_d;
use crate::cyclic::{CyclicCode, EXPLICIT_LIMIT};
use crate::error::{Error, Result};

/// Where a distance bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    BchBound,
    SpherePacking,
    Enumeration,
    DualEnumeration,
    SupportSearch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub value: usize,
    pub provenance: Provenance,
}

/// Minimum distance of an `[n, k]` code as an interval with provenances,
/// plus the full weight distribution when it was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceInfo {
    pub n: usize,
    pub k: usize,
    pub lower: DistanceBound,
    pub upper: DistanceBound,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<WeightDistribution>,
}

impl DistanceInfo {
    pub fn is_exact(&self) -> bool {
        self.lower.value == self.upper.value
    }

    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower.value)
    }
}

/// Limits for [`min_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisBudget {
    /// Largest dimension (of the code or its dual) enumerated exhaustively.
    pub max_enum_dim: u32,
    /// Largest `C(n, w)` allowed for a weight-`w` support search.
    pub support_budget: u64,
    pub workers: usize,
}

impl Default for AnalysisBudget {
    fn default() -> Self {
        Self {
            max_enum_dim: DEFAULT_ENUM_CAP,
            support_budget: 10_000_000_000,
            workers: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

/// Longest code whose full distribution is recovered from its dual.
const FULL_TRANSFORM_LEN: usize = 1024;

/// Largest weight handled by [`find_codeword_of_weight`].
const MAX_SUPPORT_WEIGHT: usize = 4;

fn binomial_within(n: usize, w: usize, budget: u64) -> bool {
    let mut c = BigUint::from(1u32);
    for i in 0..w {
        c = c * (n - i) / (i + 1);
    }
    c <= BigUint::from(budget)
}

/// `x^i mod g(x)` for `i < n`, each packed into words.
fn syndromes(code: &CyclicCode) -> Vec<Vec<u64>> {
    let g = code.generator();
    let r = g.degree().expect("nonzero generator");
    let nwords = r.div_ceil(64).max(1);
    let gw: Vec<u64> = (0..nwords).map(|i| g.words().get(i).copied().unwrap_or(0)).collect();
    let top = r % 64;
    let mut cur = vec![0u64; nwords];
    cur[0] = 1;
    let mut out = Vec::with_capacity(code.n());
    for _ in 0..code.n() {
        out.push(cur.clone());
        // cur <- x cur mod g
        let mut carry = 0u64;
        for w in cur.iter_mut() {
            let next = *w >> 63;
            *w = (*w << 1) | carry;
            carry = next;
        }
        let overflow = if top == 0 {
            carry == 1
        } else {
            (cur[nwords - 1] >> top) & 1 == 1
        };
        if overflow {
            if top != 0 {
                cur[nwords - 1] &= !(1u64 << top);
            }
            // g without its leading term.
            for (c, gv) in cur.iter_mut().zip(&gw) {
                *c ^= gv;
            }
            if top != 0 {
                cur[nwords - 1] &= (1u64 << top) - 1;
            }
        }
    }
    out
}

fn xor(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn word_from_support(n: usize, support: &[usize]) -> BitVector {
    let mut v = BitVector::zeros(n);
    for &i in support {
        v.set(i, true);
    }
    v
}

/// A codeword of weight exactly `w <= 4`, searched over supports containing
/// position 0 (enough by cyclic symmetry). `Ok(None)` means none exists.
///
/// Fails with [`Error::TooLarge`] when `C(n, w)` exceeds `budget`.
pub fn find_codeword_of_weight(code: &CyclicCode, w: usize, budget: u64) -> Result<Option<BitVector>> {
    let n = code.n();
    if w == 0 || w > MAX_SUPPORT_WEIGHT || w > n {
        return Err(Error::InvalidParameter(format!(
            "support search needs 1 <= w <= {MAX_SUPPORT_WEIGHT} and w <= n"
        )));
    }
    if !binomial_within(n, w, budget) {
        return Err(Error::TooLarge(n as u64));
    }
    if code.generator().is_one() {
        return Ok(Some(word_from_support(n, &(0..w).collect::<Vec<_>>())));
    }
    if w == 1 {
        return Ok(None);
    }
    let syn = syndromes(code);
    let mut index: HashMap<&[u64], Vec<usize>> = HashMap::with_capacity(n);
    for (i, s) in syn.iter().enumerate() {
        index.entry(s.as_slice()).or_default().push(i);
    }
    let lookup = |target: &[u64], used: &[usize]| -> Option<usize> {
        index
            .get(target)?
            .iter()
            .copied()
            .find(|c| !used.contains(c))
    };
    let found = match w {
        2 => lookup(&syn[0], &[0]).map(|a| vec![0, a]),
        3 => (1..n).find_map(|a| lookup(&xor(&syn[0], &syn[a]), &[0, a]).map(|b| vec![0, a, b])),
        4 => (1..n).find_map(|a| {
            let sa = xor(&syn[0], &syn[a]);
            (a + 1..n).find_map(|b| {
                lookup(&xor(&sa, &syn[b]), &[0, a, b]).map(|c| vec![0, a, b, c])
            })
        }),
        _ => unreachable!(),
    };
    Ok(found.map(|s| {
        let v = word_from_support(n, &s);
        debug_assert!(code.is_codeword_by_division(&v).unwrap_or(false));
        v
    }))
}

/// Exact minimum distance when the budget allows it, otherwise an interval.
///
/// Tried in order: BCH bound below and sphere packing above; exhaustive
/// enumeration of the smaller of the code and its dual; support search for
/// weights up to 4. Stops as soon as the interval closes.
pub fn min_distance(code: &CyclicCode, budget: &AnalysisBudget) -> Result<DistanceInfo> {
    let n = code.n();
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let mut info = DistanceInfo {
        n,
        k,
        lower: DistanceBound {
            value: code.bch_bound().min(n),
            provenance: Provenance::BchBound,
        },
        upper: DistanceBound {
            value: sphere_packing_max_d(n, k),
            provenance: Provenance::SpherePacking,
        },
        distribution: None,
    };
    if info.lower.value > info.upper.value {
        return Err(Error::InconsistentBounds {
            lower: info.lower.value,
            upper: info.upper.value,
        });
    }
    if info.is_exact() {
        return Ok(info);
    }

    let cap = budget.max_enum_dim;
    let r = n - k;
    let distribution = if k <= r && k as u32 <= cap {
        Some((weight_distribution_with_workers(code, cap, budget.workers)?, Provenance::Enumeration))
    } else if r as u32 <= cap && n as u64 <= EXPLICIT_LIMIT {
        let dual = weight_distribution_with_workers(&code.dual()?, cap, budget.workers)?;
        if n <= FULL_TRANSFORM_LEN {
            Some((macwilliams_transform(&dual, r)?, Provenance::DualEnumeration))
        } else {
            // Only the low-weight counts are needed to locate d.
            let mut d = info.lower.value;
            while macwilliams_coefficient(&dual, r, d)?.is_zero() {
                d += 1;
                if d > info.upper.value {
                    return Err(Error::InconsistentBounds {
                        lower: d,
                        upper: info.upper.value,
                    });
                }
            }
            let exact = DistanceBound {
                value: d,
                provenance: Provenance::DualEnumeration,
            };
            info.lower = exact;
            info.upper = exact;
            return Ok(info);
        }
    } else if k as u32 <= cap {
        Some((weight_distribution_with_workers(code, cap, budget.workers)?, Provenance::Enumeration))
    } else {
        None
    };
    if let Some((wd, provenance)) = distribution {
        let d = wd.min_nonzero_weight().ok_or(Error::ZeroCode)?;
        if d < info.lower.value || d > info.upper.value {
            return Err(Error::InconsistentBounds {
                lower: info.lower.value.max(d),
                upper: info.upper.value.min(d),
            });
        }
        let exact = DistanceBound { value: d, provenance };
        info.lower = exact;
        info.upper = exact;
        info.distribution = Some(wd);
        return Ok(info);
    }

    // Every weight below `lower` is excluded; probe upward.
    while !info.is_exact() && info.lower.value <= MAX_SUPPORT_WEIGHT {
        let w = info.lower.value;
        match find_codeword_of_weight(code, w, budget.support_budget) {
            Ok(Some(_)) => {
                info.upper = DistanceBound {
                    value: w,
                    provenance: Provenance::SupportSearch,
                };
            }
            Ok(None) => {
                info.lower = DistanceBound {
                    value: w + 1,
                    provenance: Provenance::SupportSearch,
                };
            }
            Err(Error::TooLarge(_)) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(info)
}
