//! Geometry of Reinhardt domains and numerical Laurent analysis.
//!
//! The crate has two halves. The exact half models a Reinhardt domain by
//! the polyhedral shadow of its modulus set in log coordinates and
//! computes complete and log-convex complete hulls with rational
//! arithmetic. The numerical half samples holomorphic functions on tori
//! inside the domain, extracts scaled Laurent coefficients with an FFT,
//! reports negative-index obstructions and derivative-growth statistics,
//! and evaluates truncated Taylor extensions with a certified tail bound.

pub mod corpus;
pub mod domain;
pub mod geometry;
pub mod hulls;
pub mod laurent;
pub mod rat;

pub use rat::Rat;
