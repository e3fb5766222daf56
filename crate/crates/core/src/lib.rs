//! Exact combinatorics for chromatic thresholds of graphs.
//!
//! The crate is `no_std` with `alloc`: every routine is a pure function of
//! its inputs (plus an explicit seed where randomness is involved), and long
//! searches take a [`Budget`] that caps work or observes a cancellation flag.
//!
//! Layout:
//! - [`graph`], [`bitset`], [`clique`], [`coloring`], [`subgraph`], [`canon`]:
//!   the graph carrier and classical exact invariants.
//! - [`constructions`]: Kneser, shift, Hajnal, r-Hajnal, Zykov and
//!   multipartite families.
//! - [`classify`]: decomposition families, near-acyclicity and threshold
//!   classification.
//! - [`fractional`] and [`lp`]: exact fractional chromatic number, Kneser
//!   homomorphisms and random projections.
//! - [`stability`]: partition extraction/refinement and certificates.
//! - [`vcdim`]: VC dimension, transversals and the recursive coloring.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod budget;
pub mod canon;
pub mod classify;
pub mod clique;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod lp;
pub mod rational;
pub mod stability;
pub mod subgraph;
pub mod vcdim;

pub use bitset::VertexSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
