//! Tropical dot-product representations of finite simple graphs.
//!
//! A map `f: V → T^k` with threshold `t > 0` represents `G` when `uv ∈ E`
//! exactly when the tropical dot product `f(u) ⊙ f(v)` reaches `t`, the dot
//! product taking the min (min-plus) or max (max-plus) of coordinate-wise
//! sums. This crate builds such representations, checks them, and computes
//! the least dimension exactly via threshold covers:
//! `ρ_T̂(G) = Θ(G)` and `ρ_T(G) = Θ(Ḡ)`.
//!
//! All arithmetic is exact (`BigRational`). The crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
#[macro_use]
extern crate std;

pub mod cover;
pub mod error;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod iso;
pub mod limits;
pub mod representations;
pub mod threshold;
pub mod tropical;
pub mod verifier;

pub use cover::{theta, theta_bounds, theta_hat, CoverMode, CoverSolution, ThetaBounds};
pub use error::{Error, Result};
pub use generators::{CaterpillarSpec, Family};
pub use graph::Graph;
pub use limits::ExactLimits;
pub use representations::Representation;
pub use threshold::{is_threshold, ThresholdCertificate};
pub use tropical::{Algebra, Rational, TropicalValue, TropicalVector};
pub use verifier::{
    check_conjecture, project_slices, realize_graph, rho, verify, DimensionMethod,
    DimensionResult, VerificationReport,
};
