//! Heterochromatic numbers of hypergraphs built from matroids.
//!
//! A matroid is given by a rank oracle on at most 64 elements. Its circuits,
//! cocircuits, bases, flats and related families become hypergraphs, and
//! [`hc::hc`] computes the least `t` such that every `t`-colouring of the
//! ground set has a rainbow edge, together with a witness partition.

pub mod catalog;
pub mod charpoly;
pub mod cli;
pub mod constructions;
pub mod elemset;
pub mod error;
pub mod hc;
pub mod hypergraph;
pub mod matroid;
pub mod theorems;

pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use hypergraph::{Family, Hypergraph};
pub use matroid::{Matroid, MinorSpec};
