//! Symbolic engine for double Poisson brackets on cobar algebras of cyclic
//! A-infinity coalgebras.
//!
//! Everything is computed over the rationals. Grading is homological: every
//! differential has degree -1. A coalgebra element `c` of degree `|c|` gives a
//! cobar letter `s^-1 c` of degree `|c| - 1`. Each coalgebra element also
//! carries a weight (tensor length in the Koszul dual), and every operator in
//! the crate preserves total weight, so all complexes split into
//! finite-dimensional `(degree, weight)` blocks.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod ainf;
pub mod cobar;
pub mod error;
pub mod gerstenhaber;
pub mod hkr;
pub mod linalg;
pub mod poisson;
pub mod tensor;

pub use error::Error;
pub use tensor::{q, qr, Q};
