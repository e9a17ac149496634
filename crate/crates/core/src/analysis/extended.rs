use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::distance::{DistanceBound, DistanceInfo, Provenance};
use super::weights::{weight_distribution_exhaustive, WeightDistribution};
use crate::bits::BitVector;
use crate::bounds::sphere_packing_max_d;
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};

/// The length-`n+1` code obtained by appending an overall parity bit to
/// every codeword of `base`.
#[derive(Debug, Clone, Copy)]
pub struct ExtendedCode<'a> {
    base: &'a CyclicCode,
}

pub fn extend_code(code: &CyclicCode) -> ExtendedCode<'_> {
    ExtendedCode { base: code }
}

impl ExtendedCode<'_> {
    pub fn base(&self) -> &CyclicCode {
        self.base
    }

    pub fn n(&self) -> usize {
        self.base.n() + 1
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension()
    }

    pub fn extend_word(&self, c: &BitVector) -> BitVector {
        c.push(c.weight() % 2 == 1)
    }

    pub fn generator_rows(&self) -> Vec<BitVector> {
        extended_generator_rows(self.base)
    }

    pub fn is_codeword(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: v.len(),
            });
        }
        let mut head = BitVector::zeros(self.base.n());
        for i in 0..self.base.n() {
            head.set(i, v.get(i));
        }
        Ok(v.weight().is_multiple_of(2) && self.base.is_codeword(&head)?)
    }
}

/// Generator rows `x^i g(x)` with their parity bit appended.
pub fn extended_generator_rows(code: &CyclicCode) -> Vec<BitVector> {
    code.generator_rows()
        .iter()
        .map(|r| r.push(r.weight() % 2 == 1))
        .collect()
}

/// Distribution of the extended code: odd weight `w` moves to `w + 1`.
pub fn extend_distribution(wd: &WeightDistribution) -> WeightDistribution {
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (w, c) in wd.iter() {
        *counts.entry(w + w % 2).or_default() += c;
    }
    WeightDistribution::from_counts(wd.n() + 1, counts).expect("weights stay within n + 1")
}

/// Distance interval of the extended code.
///
/// An exact odd `d` becomes `d + 1` and an exact even `d` stays. For an
/// interval, the lower end rounds up to even and the upper end is also
/// capped by sphere packing at length `n + 1`.
pub fn extend_parameters(info: &DistanceInfo) -> DistanceInfo {
    let n = info.n + 1;
    let up_even = |d: usize| d + d % 2;
    let distribution = info.distribution.as_ref().map(extend_distribution);
    if let Some(wd) = &distribution {
        let d = wd.min_nonzero_weight().expect("nonzero code");
        let exact = DistanceBound {
            value: d,
            provenance: info.lower.provenance,
        };
        return DistanceInfo {
            n,
            k: info.k,
            lower: exact,
            upper: exact,
            distribution,
        };
    }
    let lower = DistanceBound {
        value: up_even(info.lower.value),
        provenance: info.lower.provenance,
    };
    let sp = sphere_packing_max_d(n, info.k);
    let upper = if up_even(info.upper.value) <= sp {
        DistanceBound {
            value: up_even(info.upper.value),
            provenance: info.upper.provenance,
        }
    } else {
        DistanceBound {
            value: sp,
            provenance: Provenance::SpherePacking,
        }
    };
    DistanceInfo {
        n,
        k: info.k,
        lower,
        upper,
        distribution: None,
    }
}

/// Distribution of the dual of the extended code, from the dual's
/// distribution: the dual of the extension is the zero-padded dual plus its
/// translate by the all-ones word.
///
/// Requires every weight of `dual` to be even.
pub fn extended_dual_from(dual: &WeightDistribution) -> Result<WeightDistribution> {
    if let Some((w, _)) = dual.iter().find(|(w, _)| w % 2 == 1) {
        return Err(Error::OddWeightInDual(w));
    }
    let n1 = dual.n() + 1;
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (w, c) in dual.iter() {
        *counts.entry(w).or_default() += c;
        *counts.entry(n1 - w).or_default() += c;
    }
    WeightDistribution::from_counts(n1, counts)
}

/// Enumerates the dual of `code` and applies [`extended_dual_from`].
pub fn extended_dual(code: &CyclicCode, cap: u32) -> Result<WeightDistribution> {
    extended_dual_from(&weight_distribution_exhaustive(&code.dual()?, cap)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::nullspace;
    use crate::cyclic::BchDesign;
    use crate::analysis::enumerate_span;

    fn wd(n: usize, pairs: &[(usize, u64)]) -> WeightDistribution {
        WeightDistribution::from_counts(n, pairs.iter().map(|&(w, c)| (w, c))).unwrap()
    }

    #[test]
    fn hamming_extends_to_8_4_4() {
        let c = CyclicCode::bch(BchDesign::new(7, 3, 1)).unwrap();
        let base = wd(7, &[(0, 1), (3, 7), (4, 7), (7, 1)]);
        assert_eq!(extend_distribution(&base), wd(8, &[(0, 1), (4, 14), (8, 1)]));
        let ext = extend_code(&c);
        for r in ext.generator_rows() {
            assert!(ext.is_codeword(&r).unwrap());
            assert_eq!(r.weight() % 2, 0);
        }
    }

    #[test]
    fn extended_dual_matches_nullspace() {
        let c = CyclicCode::bch(BchDesign::new(51, 3, 1)).unwrap();
        let from_formula = extended_dual(&c, 26).unwrap();
        assert_eq!(
            from_formula,
            wd(52, &[(0, 1), (20, 51), (24, 204), (28, 204), (32, 51), (52, 1)])
        );
        let basis = nullspace(&extended_generator_rows(&c), 52);
        assert_eq!(basis.len(), 9);
        assert_eq!(enumerate_span(&basis, 52, 26, 2).unwrap(), from_formula);
    }

    #[test]
    fn odd_dual_weight_rejected() {
        let d = wd(7, &[(0, 1), (3, 7), (4, 7), (7, 1)]);
        assert_eq!(extended_dual_from(&d).unwrap_err(), Error::OddWeightInDual(3));
    }

    #[test]
    fn interval_extension() {
        let info = DistanceInfo {
            n: 51,
            k: 35,
            lower: DistanceBound {
                value: 5,
                provenance: Provenance::BchBound,
            },
            upper: DistanceBound {
                value: 6,
                provenance: Provenance::SpherePacking,
            },
            distribution: None,
        };
        let ext = extend_parameters(&info);
        assert_eq!((ext.n, ext.k, ext.lower.value, ext.upper.value), (52, 35, 6, 6));
    }
}
