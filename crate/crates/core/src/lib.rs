//! Presentation by conjugation for Weyl groups of type A1 root systems
//! extended by a free abelian group `G = Z^n`.
//!
//! The natural map from the initial reflection group `U` onto the Weyl group
//! `W` is an isomorphism exactly when the nonzero classes `T^ab \ {0}` of the
//! roots in `G/2G` are 2-independent: their sym-squares `t⊗t` are linearly
//! independent over F2. [`decision::decide`] runs that test by bit-packed
//! elimination in dimension `n(n+1)/2`; [`decision::extract_witness`] and
//! [`decision::find_identity_word`] certify a negative answer with a kernel
//! element and an explicit word of reflections that is trivial in `W`.
//!
//! ```
//! use a1_weyl::{decide, RootDatum};
//!
//! assert!(decide(&RootDatum::full(2).unwrap()).iso);
//! assert!(!decide(&RootDatum::full(3).unwrap()).iso);
//! ```

pub mod cli;
pub mod decision;
pub mod error;
pub mod f2_linalg;
pub mod lattice;
pub mod selftest;
pub mod symmetric_space;
pub mod weyl;

pub use decision::{decide, enumerate, extract_witness, find_identity_word, Verdict, Witness};
pub use error::{Error, Result};
pub use f2_linalg::{F2Matrix, F2Vector};
pub use lattice::{GVector, SymTensor, WedgeVector};
pub use symmetric_space::{smul, RootDatum};
pub use weyl::{AffineElement, Sign, UabElement, WabElement, WeylElement};
