//! Exact combinatorics for SL2 tilting modules and the Verlinde categories
//! `Ver_p` and `Ver_{p^n}` in characteristic `p`.
//!
//! - [`charlab`]: symmetric Laurent-polynomial characters, Weyl/simple bases
//! - [`tiltring`]: tilting characters, tensor decomposition, negligible ideal
//! - [`fusion`]: fusion rules of `Ver_p`, Verlinde oracle, FP dimensions, `gd`
//! - [`verpn`]: simple objects of `Ver_{p^n}` and symmetric-power vanishing
//! - [`padix`]: Hilbert series over `F_p` and p-adic dimensions
//! - [`growth`]: length providers and the symmetric growth dimension estimator
//!
//! Batch sweeps take an [`Exec`] policy. With the `parallel` feature (on by
//! default) [`Exec::Parallel`] runs on the rayon pool; without it every
//! policy runs sequentially.

mod bigmath;
pub mod charlab;
mod error;
pub mod exec;
pub mod fusion;
pub mod growth;
pub mod padix;
mod prime;
pub mod tiltring;
pub mod verpn;

pub use charlab::{Basis, BasisLabel, Character, Decomposition, Specialization, SpecializationPoint};
pub use error::{Error, Result};
pub use exec::Exec;
pub use prime::Prime;
