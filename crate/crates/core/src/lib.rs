//! Heckman–Opdam hypergeometric functions for root systems of type `BC_n`.
//!
//! The crate evaluates the hypergeometric function `F(λ, m; a)` attached to a
//! `BC_n` root system and a (possibly negative) real multiplicity triple
//! `m = (m_s, m_m, m_l)` in two independent ways:
//!
//! * on the positive chamber, as the c-function weighted Weyl sum of
//!   Harish-Chandra series ([`hyperfun::eval_f`]);
//! * in rank one, as the identity-normalized Frobenius series in the invariant
//!   variable `s = (x + 1/x) / 2`, `x = e^{2α}` ([`rankone`]).
//!
//! On top of that it provides the explicit rank-one shift operators
//! ([`shiftops`]), the χ-spherical functions obtained from shifted
//! multiplicities ([`spherical`]) and the rank-one χ-spherical Fourier
//! transform with an exponential-type estimator ([`transform`]).
//!
//! Conventions used throughout:
//!
//! * roots and spectral parameters are written in the orthonormal ε-basis, so
//!   `⟨ε_i, ε_i⟩ = 1` and the short root of `BC_1` has length one;
//! * multiplicities follow the `(m_s, m_m, m_l)` convention, not the `k`
//!   convention of Heckman and Opdam (`k_{2α} = m_α / 2`);
//! * in rank one, `t = 2α(X)` (noncompact, `s = cosh t`) or `t = 2α(Y)`
//!   (compact torus `x = e^{it}`, `s = cos t`).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cfunction;
pub mod error;
pub mod gamma;
pub mod hyperfun;
pub mod poly;
pub mod quadrature;
pub mod rankone;
pub mod root_system;
pub mod series;
pub mod shiftops;
pub mod spherical;
pub mod transform;

pub use error::{Error, ErrorKind, Result};
pub use num_complex::Complex64;
pub use root_system::{Multiplicity, Orbit, Root, RootSystemBC, SpectralParameter, WeylElement};
