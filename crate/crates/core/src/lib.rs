//! Reconstruction parameters of error graphs.
//!
//! `N(Γ, r)` is the largest number of vertices that two distinct balls of
//! radius `r` can share; any `N(Γ, r) + 1` distinct vertices inside a ball of
//! radius `r` pin down its centre. This crate computes `N` by brute force over
//! implicit graphs, evaluates the closed forms known for Hamming, Johnson and
//! transposition Cayley graphs, and implements the reconstruction procedures
//! that recover a centre from distorted observations.
//!
//! Module map:
//!
//! * [`graph`]: implicit graph views, BFS, balls, `λ`, `μ`, `N(Γ, r)`, bounds,
//!   automorphism counting.
//! * [`perm`]: permutations, cycle types, conjugacy classes, sphere streams.
//! * [`numbers`]: Stirling numbers, Poincaré polynomials, factorization counts,
//!   restricted Stirling numbers, exact interpolation.
//! * [`symt`]: the transposition Cayley graph `Sym_n(T)`.
//! * [`classic`]: Hamming and Johnson graphs, strongly regular families.
//! * [`reconstruct`]: observation sampling and centre reconstruction.
//! * [`desc`]: textual graph descriptors shared by the command line tool.

pub mod classic;
pub mod decimal;
pub mod desc;
pub mod error;
pub mod graph;
pub mod numbers;
pub mod perm;
pub mod reconstruct;
pub mod symt;

pub use error::{Error, Result};
pub use graph::{ExplicitGraph, GraphView, LocalProfile, NResult};
pub use numbers::{ExactInt, IntPolynomial};
pub use perm::{CycleType, Permutation, Transposition};
pub use symt::SymnTView;
