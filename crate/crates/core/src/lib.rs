//! Exact arithmetic on C-semigroups: affine semigroups with finite complement
//! in a positive integer cone `C = cone(A) ∩ N^d`.
//!
//! The crate computes the classical invariants of such semigroups (gaps,
//! Frobenius elements, minimal generators, pseudo-Frobenius elements, special
//! gaps), decides `k`-positioned and primary positioned semigroups, and
//! arranges the set `P(k)` of all primary positioned semigroups for a fixed
//! `k` as a rooted forest. A brute-force [`oracle`] enumerates the same set
//! independently.
//!
//! Everything here is `no_std` with `alloc`; file formats, parallel drivers
//! and the command line live in the `conesemi` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub use error::{Error, Result};

pub mod vector;
pub use vector::{Vector, MAX_DIM};

pub mod order;
pub use order::{OrderKind, TermOrder};

pub mod cone;
pub use cone::Cone;

pub mod semigroup;
pub use semigroup::CSemigroup;

pub mod positioned;
pub use positioned::{Class, PositionedContext};

pub mod irreducible;
pub use irreducible::{IrreducibleKind, PairDecomposition};

pub mod forest;
pub use forest::{Forest, ForestNode, Tree};

pub mod oracle;
