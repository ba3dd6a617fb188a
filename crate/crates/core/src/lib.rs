//! Finite commutative rings, their ideal lattices, expansion functions on
//! ideals, and the semiprimary-type classification hierarchy built on them,
//! together with an exhaustive theorem-verification harness and a small
//! Gröbner-basis engine for ideal membership in polynomial rings over prime
//! fields.
//!
//! The crate is `no_std` + `alloc`: everything here is pure computation over
//! owned tables and bitsets. IO, JSON reports, and the command-line front end
//! live in the companion `finring-cli` crate.
//!
//! Layout:
//! - [`ring`]: ring construction (`Z_n`, products, truncated polynomial
//!   rings, explicit tables) with exhaustive axiom verification.
//! - [`ideal`]: ideals as membership bitsets, lattice operations, radicals,
//!   integral closure, and full ideal enumeration.
//! - [`expansion`]: expansion functions as first-class values.
//! - [`classify`]: the prime/primary/semiprimary predicate family and
//!   dual-zero witnesses.
//! - [`construct`]: quotients, localizations, and ring homomorphisms.
//! - [`poly`]: multivariate polynomials over `F_p`, Buchberger's algorithm,
//!   and membership certificates.
//! - [`dsl`]: the text syntax for rings, ideals, and expansions.
//! - [`harness`]: the ring universe, theorem checkers, counterexample
//!   search, and worked-example verification.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod classify;
pub mod construct;
pub mod dsl;
mod error;
pub mod expansion;
pub mod harness;
pub mod ideal;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
