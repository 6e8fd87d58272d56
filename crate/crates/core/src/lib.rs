//! Exact-arithmetic analysis of stable polynomials and their supports.
//!
//! A polynomial `f` in `n` complex variables is *stable* when it does not
//! vanish while every variable lies in the open upper half-plane; it has the
//! *half-plane property* when the same holds for some open half-plane whose
//! boundary passes through the origin. This crate collects:
//!
//! * [`poly`]: sparse polynomials over the Gaussian rationals and the
//!   transforms used on supports (derivatives, reciprocals, interval
//!   restrictions, line restrictions, polarization).
//! * [`realroot`]: exact univariate real-root analysis, interlacing, proper
//!   position and the Hermite–Biehler test.
//! * [`combstruct`]: jump system, delta-matroid and matroid axiom checkers.
//! * [`stability`]: Rayleigh differences, the multi-affine real-stability
//!   criterion and seeded falsifiers.
//! * [`constructors`]: polynomials that are stable by construction.
//! * [`obstruction`]: the coefficient-propagation argument that rules out a
//!   rank-3 matroid as the support of any stable polynomial.
//!
//! Everything is `no_std` with `alloc`; file formats and the command-line
//! driver live in the `halfplane` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod combstruct;
pub mod constructors;
pub mod linalg;
pub mod number;
pub mod obstruction;
pub mod poly;
pub mod realroot;
pub mod rng;
pub mod stability;

pub use error::{Error, Result};
pub use number::{ComplexRational, Rational};
pub use poly::Polynomial;
