use std::collections::HashSet;

use super::weights::span_codewords;
use crate::bits::{row_reduce, BitVector};
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};

/// Largest field degree and dual dimension compared by full enumeration.
const ENUMERATE_LIMIT: u32 = 16;

/// `(Tr(a γ^i))_{i<n}`.
fn trace_vector(code: &CyclicCode, gamma: u32, a: u32) -> BitVector {
    let f = code.field().as_ref();
    let mut v = BitVector::zeros(code.n());
    let mut x = a;
    for i in 0..code.n() {
        if f.trace_raw(x) == 1 {
            v.set(i, true);
        }
        x = f.mul_raw(x, gamma);
    }
    v
}

/// `γ = β`. Then `c_a · v = Tr(a v(β))`, which vanishes for every codeword
/// `v` whose defining set contains 1. Taking `γ = β^{-1}` instead gives the
/// same code with coordinates reversed, which equals the dual only when
/// `-1` lies in the coset of 1.
fn gamma(code: &CyclicCode) -> u32 {
    code.field().alpha_pow_raw(code.beta_exp())
}

/// `{(Tr(a γ^i))_{i<n} : a in GF(2^m)}` with `γ = β`, one vector per `a` in
/// value order.
pub fn trace_vectors(code: &CyclicCode, cap: u32) -> Result<Vec<BitVector>> {
    let m = code.field().m();
    if m > cap {
        return Err(Error::ExceedsCap {
            dim: m as usize,
            cap,
        });
    }
    let g = gamma(code);
    Ok((0..(1u64 << m)).map(|a| trace_vector(code, g, a as u32)).collect())
}

/// Whether the trace vectors of [`trace_vectors`] form exactly the dual of
/// `code`.
///
/// Small cases compare both sets element by element. Otherwise the map
/// `a -> c_a` is GF(2)-linear, so it suffices that the images of a basis lie
/// in the dual and have rank equal to the dual's dimension.
pub fn trace_code_equals_dual(code: &CyclicCode, cap: u32) -> Result<bool> {
    let dual = code.dual()?;
    let m = code.field().m();
    let k = dual.dimension() as u32;
    if m <= ENUMERATE_LIMIT.min(cap) && k <= ENUMERATE_LIMIT.min(cap) {
        let words: HashSet<BitVector> = span_codewords(&dual.generator_rows(), code.n(), cap)?
            .into_iter()
            .collect();
        let traces: HashSet<BitVector> = trace_vectors(code, cap)?.into_iter().collect();
        return Ok(words == traces);
    }
    let g = gamma(code);
    let images: Vec<BitVector> = (0..m).map(|j| trace_vector(code, g, 1 << j)).collect();
    for v in &images {
        if !dual.is_codeword_by_division(v)? {
            return Ok(false);
        }
    }
    Ok(row_reduce(&images).0.len() == k as usize)
}
