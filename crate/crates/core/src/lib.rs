//! Exact arithmetic for the rational bordism ring of pairs `(M, ξ)`, where
//! `M` is a closed oriented manifold with stably trivial normal bundle and
//! `ξ` is a virtual SU-bundle of virtual dimension one over `M`.
//!
//! Rationally this ring is the polynomial algebra `ℚ[t₂, t₃, …]` with
//! `deg tₙ = 2n`, where `tₙ` is the class of the sphere `S²ⁿ` carrying the
//! generating bundle. The crate provides
//!
//! * partitions into parts `≥ 2` with a refinement-extending total order
//!   ([`partitions`]),
//! * the cohomology ring of a product of even spheres ([`cohomology`]),
//! * virtual SU-classes modelled by their Chern character ([`kclass`]),
//! * characteristic numbers and the nonsingular `p′(n) × p′(n)` matrix
//!   ([`charnum`]),
//! * the t-monomial basis, characteristic vectors and the basis solve
//!   ([`bordism`]),
//! * stable-range bookkeeping for matrix Grassmannians ([`grassmann`]).
//!
//! Only torsion-free information is modelled: every group here is a
//! `ℚ`-vector space.
//!
//! The algebra is generic over the coefficient field through [`Scalar`].
//! The aliases at the crate root fix it to arbitrary-precision rationals,
//! which is what everything outside of tests should use.

pub mod bordism;
pub mod charnum;
pub mod cohomology;
mod error;
pub mod grassmann;
pub mod kclass;
pub mod partitions;
mod scalar;
pub mod serial;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational coefficients.
pub type Rational = BigRational;

pub type SphereProduct = cohomology::SphereProduct;
pub type CohClass = cohomology::CohClass<Rational>;
pub type VirtualClass = kclass::VirtualClass<Rational>;
pub type BordismElement = bordism::BordismElement<Rational>;
pub type CharVector = bordism::CharVector<Rational>;
pub type CharMatrix = charnum::CharMatrix;
pub type GrassmannPair = grassmann::GrassmannPair;
