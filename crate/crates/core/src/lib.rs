//! Binary BCH codes of three length families plus the `(2^s - 1)/λ` family,
//! with exact parameters, weight distributions and sphere-packing
//! optimality certificates.
//!
//! The crate is layered bottom-up:
//!
//! - [`field`]: GF(2^m) arithmetic, primitive roots of unity, absolute trace.
//! - [`poly`]: GF(2)[x] ring operations, minimal polynomials, `x^n - 1` factorization.
//! - [`cyclotomy`]: 2-cyclotomic cosets and coset-leader checks.
//! - [`cyclic`]: cyclic and BCH code construction, duals, encoding.
//! - [`analysis`]: weight distributions, MacWilliams, minimum distance, extended codes.
//! - [`bounds`]: sphere packing and Griesmer bounds, certificates, threshold tables.
//! - [`families`]: closed-form predictions and the verification harness.
//! - [`certificate`]: JSON descriptors and certificate files.

pub mod analysis;
pub mod bits;
pub mod bounds;
pub mod certificate;
pub mod cyclic;
pub mod cyclotomy;
mod decimal;
pub mod error;
pub mod families;
pub mod field;
pub mod fixtures;
pub mod poly;

pub use analysis::{AnalysisBudget, DistanceInfo, WeightDistribution};
pub use bounds::{OptimalityCertificate, ThresholdReport};
pub use cyclic::{BchDesign, CyclicCode};
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilySpec, Variant};
pub use field::{FieldElement, FieldSpec};
pub use poly::BinaryPolynomial;
