//! Exact-arithmetic machinery for integer symplectic lattices and the
//! cell complex of cyclic decompositions.
//!
//! The crate is organized around a handful of layers:
//!
//! * [`intmat`] — dense arbitrary-precision integer matrices with Hermite
//!   and Smith normal forms, kernels and linear solving.
//! * [`lattice`] — quasi-unimodular lattices: alternating forms,
//!   transvections, saturation, perps, form-induced projections and
//!   integer symplectic bases.
//! * [`ratmat`] / [`exterior`] — exact rational subspace arithmetic and
//!   exterior powers `∧²`, `∧³` with the Johnson quotient target.
//! * [`johnson`] — the Johnson homomorphism on bounding-pair data and the
//!   transvection action on the quotient target.
//! * [`complex`] — cells of the quotient complex as cyclic decompositions,
//!   the boundary operator, Bestvina–Margalit tori and their relations.
//! * [`invariants`] — per-piece rank and pairing invariants of edges and
//!   tori, orbit keys and bounded-key enumeration.
//! * [`reduction`] — certificate-producing rewriting engines that drive
//!   rank and pairing invariants down to 1 in absolute value.
//! * [`coinvariants`] — finite-dimensional fixed spaces, coinvariants and
//!   cokernels for matrix group actions.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything here is safe to share across threads.
//! The crate is `no_std` (with `alloc`); IO and serialization live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod complex;
pub mod coinvariants;
pub mod config;
pub mod exterior;
pub mod gen;
pub mod intmat;
pub mod invariants;
pub mod johnson;
pub mod lattice;
pub mod ratmat;
pub mod reduction;
pub mod rng;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Convenience constructor for `Int`.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Convenience constructor for `Rat`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}
