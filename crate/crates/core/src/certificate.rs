//! Serializable code descriptors and certificate files.
//!
//! Every integer that can exceed 64 bits is written as a decimal string.

use serde::{Deserialize, Serialize};

use crate::analysis::{DistanceBound, DistanceInfo, WeightDistribution};
use crate::bounds::{certify, BoundArithmetic, GriesmerCheck, OptimalityCertificate};
use crate::cyclic::CyclicCode;
use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Everything needed to rebuild a cyclic code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    /// Extension degree of the field holding the n-th roots of unity.
    pub m: u32,
    /// Primitive modulus of GF(2^m), hex.
    pub modulus: String,
    /// `β = α^beta_exp`.
    pub beta_exp: u64,
    pub defining_set_leaders: Vec<u64>,
    pub defining_set_size: usize,
    /// Generator polynomial, hex with bit `i` the coefficient of `x^i`.
    pub generator: String,
    pub dimension: usize,
}

impl CodeDescriptor {
    pub fn of(code: &CyclicCode) -> Self {
        let f = code.field();
        Self {
            n: code.n(),
            m: f.m(),
            modulus: f.modulus().to_hex(),
            beta_exp: code.beta_exp(),
            defining_set_leaders: code.defining_set().leaders(),
            defining_set_size: code.defining_set().len(),
            generator: code.generator().to_hex(),
            dimension: code.dimension(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasuredParameters {
    pub n: usize,
    pub k: usize,
    pub d_lower: DistanceBound,
    pub d_upper: DistanceBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub exact_distance: bool,
    pub optimal: bool,
    pub perfect: bool,
    pub griesmer: GriesmerCheck,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCertificate")]
pub struct CertificateFile {
    pub schema_version: u32,
    pub code: CodeDescriptor,
    /// Parameters refer to the code with an overall parity bit appended.
    pub extended: bool,
    pub measured: MeasuredParameters,
    pub bounds: BoundArithmetic,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<WeightDistribution>,
    pub verdicts: Verdicts,
    pub tool_version: String,
    pub wall_clock_seconds: f64,
}

/// Wire form; the distribution's length is restored from `measured.n`.
#[derive(Deserialize)]
struct RawCertificate {
    schema_version: u32,
    code: CodeDescriptor,
    extended: bool,
    measured: MeasuredParameters,
    bounds: BoundArithmetic,
    #[serde(default)]
    weight_distribution: Option<WeightDistribution>,
    verdicts: Verdicts,
    tool_version: String,
    wall_clock_seconds: f64,
}

impl TryFrom<RawCertificate> for CertificateFile {
    type Error = crate::error::Error;

    fn try_from(r: RawCertificate) -> Result<Self> {
        let weight_distribution = r
            .weight_distribution
            .map(|wd| wd.with_length(r.measured.n))
            .transpose()?;
        Ok(Self {
            schema_version: r.schema_version,
            code: r.code,
            extended: r.extended,
            measured: r.measured,
            bounds: r.bounds,
            weight_distribution,
            verdicts: r.verdicts,
            tool_version: r.tool_version,
            wall_clock_seconds: r.wall_clock_seconds,
        })
    }
}

impl CertificateFile {
    /// Certificate for `code` (or its extension) from an analysed distance.
    pub fn build(
        code: &CyclicCode,
        info: &DistanceInfo,
        extended: bool,
        wall_clock_seconds: f64,
    ) -> Result<Self> {
        let cert = certify(info)?;
        Ok(Self::from_parts(code, info, &cert, extended, wall_clock_seconds))
    }

    pub fn from_parts(
        code: &CyclicCode,
        info: &DistanceInfo,
        cert: &OptimalityCertificate,
        extended: bool,
        wall_clock_seconds: f64,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            code: CodeDescriptor::of(code),
            extended,
            measured: MeasuredParameters {
                n: info.n,
                k: info.k,
                d_lower: info.lower,
                d_upper: info.upper,
            },
            bounds: cert.bound_arithmetic.clone(),
            weight_distribution: info.distribution.clone(),
            verdicts: Verdicts {
                exact_distance: info.is_exact(),
                optimal: cert.optimal,
                perfect: cert.perfect,
                griesmer: cert.griesmer,
            },
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            wall_clock_seconds,
        }
    }
}
