//! Coloured partitions with difference conditions given by an `n x n`
//! matrix: colour sequences, kernels, minimal partitions, Frobenius
//! partitions, the bijection onto `C_n x P^0`, and the exact q-series
//! machinery used to check the generating functions.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod colour;
pub mod error;
pub mod qseries;
pub mod sequence;

pub use colour::{Colour, DeltaGammaTable, Metric, Variant};
pub use error::{Error, Result};
pub use sequence::{ColourSequence, KernelStructure};
pub mod partition;
pub mod frobenius;
pub mod bijection;
