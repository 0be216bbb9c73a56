//! Exact-arithmetic toolkit for intrinsic Grassmannians of type (2,n) with
//! Picard number two: Cox rings `K[T_ij; 1<=i<j<=n, S_l]/I_{2,n}` graded by
//! `Cl(X) = Z^2`, their validity predicates and divisor-class cones, the
//! six-type smoothness classification, Fano criteria, enumeration and
//! counting of the smooth Fano members, multigraded Hilbert dimensions via
//! standard monomials, and the elementary-contraction geometry reports.
//!
//! Everything is computed over the integers; no floating point anywhere.

pub mod classify;
pub mod error;
pub mod faces;
pub mod geometry;
pub mod grading;
pub mod hilbert;
pub mod plucker;

pub use error::{Error, Result};
