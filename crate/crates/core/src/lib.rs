//! Closed-form fractional Laplacian of the Higgins and Christov function
//! families on the real line, with operator-matrix assembly and automatic
//! working-precision selection.
//!
//! The crate is `no_std` when built without the default `std` feature; it
//! still needs `alloc`.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod adaptive;
pub mod error;
pub mod kernels;
pub mod mp;
pub mod opmatrix;
pub mod oracle;
pub mod specfun;

pub use error::{Error, Result};
pub use mp::{BigComplex, BigReal, ExactParam, PrecisionContext};
