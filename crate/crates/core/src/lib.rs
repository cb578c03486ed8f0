//! Exact-arithmetic construction and verification of generalized plateaued
//! functions `f: V_n -> Z_{p^k}`.
//!
//! The crate provides:
//! - finite-field and product-space plumbing ([`ff`]),
//! - the ring `Z[zeta_{p^k}]` with polar decomposition of plateau values
//!   ([`cyclotomic`]),
//! - exact forward/inverse Walsh transforms and plateau classification
//!   ([`walsh`]),
//! - spectral-domain design verification and synthesis ([`spectral`]),
//! - the construction methods T1-T7, P3 and C3 ([`builders`]),
//! - structural predicates: derivatives, linear structures, partial bentness,
//!   WRP membership, vectorial checks and the completed-GMM line obstruction
//!   ([`analysis`]),
//! - the reproduction corpus and report formats ([`corpus`], [`report`],
//!   [`params`]).
//!
//! All spectral arithmetic is exact. The cyclotomic layer is generic over its
//! coefficient scalar; the aliases below fix the defaults used across the
//! crate.

pub mod analysis;
pub mod builders;
pub mod corpus;
pub mod cyclotomic;
pub mod ff;
pub mod params;
pub mod report;
pub mod spectral;
pub mod walsh;

/// Default coefficient scalar. Walsh sums over domains up to `3^12` points
/// keep every canonical coefficient below `p^n` and every norm product below
/// `phi * p^{2n}`, far inside `i64` range; arithmetic is checked regardless.
pub type DefaultCoeff = i64;

/// Cyclotomic integer over the default scalar.
pub type Cyc = cyclotomic::CycInt<i64>;

/// Cyclotomic integer with unbounded coefficients.
pub type CycBig = cyclotomic::CycInt<num_bigint::BigInt>;

/// Walsh spectrum over the default scalar.
pub type Spectrum = walsh::WalshSpectrum<i64>;
