//! Exact symbolic computation for the even dihedral groups I2(2s):
//! Dunkl operators, harmonic polynomial bases, Poisson and binomial-type
//! kernels, the intertwining operator V, and a verification layer for the
//! singular parameter values k0 + k1 = -m.
//!
//! All coefficients are carried as exact rational functions of the two
//! reflection multiplicities (k0, k1); floating point appears only inside
//! numeric oracles that cross-check the symbolic layer.

pub mod error;
pub mod field;
pub mod scalar;

pub mod multipoly;

pub mod dunkl;
pub mod harmonic;
pub mod hypergeom;
pub mod intertwine;
pub mod kernels;
pub mod singular;

pub mod json;
pub mod quadrature;
pub mod render;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Rat;
