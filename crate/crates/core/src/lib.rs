//! Spanning tree, matching and 2-regular decompositions of claw-free cubic
//! graphs.
//!
//! [`decompose`] produces a labeling, [`verify()`] checks one, and
//! [`oracle`] searches exhaustively for small graphs.

#![no_std]

extern crate alloc;

pub mod decomposition;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod recognition;
pub mod verify;

pub use decomposition::{Decomposition, EdgeLabel};
pub use engine::{
    apply_reduction, decompose, decompose_base, decompose_capped, decompose_with, lift, reroute_cycle,
    reroute_frame, select_reduction, DecomposeOptions, Decomposed, ReducedGraph, ReductionStep, RerouteFrame,
    RerouteInstance,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use verify::{lemma2_check, verify, VerificationReport};
