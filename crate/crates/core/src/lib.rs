//! Exact-arithmetic toolkit for quartic symmetroids.
//!
//! A symmetric 4x4 matrix of linear forms A(x) = A_0 x_0 + ... + A_n x_n
//! determines a quartic hypersurface det A(x) = 0, a web of quadrics
//! y^T A(x) y, rank-degeneracy loci, and (over the reals) a spectrahedron.
//! This crate computes all of these over Q(i) with no floating point:
//! Groebner bases, zero-dimensional solving, rank loci via minors,
//! pencil-of-quadrics classification, and exact semidefiniteness.

#![forbid(unsafe_code)]

pub mod arith;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod pencil;
pub mod poly;
pub mod solve;
pub mod spectra;
pub mod web;

pub use arith::GaussianRational;
pub use error::Error;
pub use poly::MultiPoly;
