//! Exact transversality combinatorics and conic-reduction classification for
//! Hamiltonian U(2)-actions on projectivized representations
//! `P(⊕_a det^{l_a} ⊗ Sym^{k_a} C²)`, with a seeded numeric verifier for the
//! closed-form moment-map identities.

pub mod cli;
pub mod dh_classifier;
pub mod error;
pub mod moment_eval;
pub mod orbit_geometry;
pub mod rep_model;
pub mod verifier;

pub use error::{Error, Result};
