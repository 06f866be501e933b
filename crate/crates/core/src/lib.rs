//! Third Falk invariant φ₃ of hyperplane arrangements attached to gain graphs.
//!
//! Two routes compute φ₃:
//!
//! * a census of distinguished biased subgraphs ([`patterns`]) fed to a linear
//!   formula ([`falk::phi3_combinatorial`]);
//! * exact ranks of the degree-2 and degree-3 pieces of the Orlik–Solomon ideal
//!   ([`exterior`]) fed to Falk's rank formula ([`falk::phi3_rank`]).
//!
//! [`falk::verify`] runs both and reports whether they agree.

pub mod exterior;
pub mod falk;
pub mod gain_graph;
pub mod hypotheses;
pub mod linalg;
pub mod patterns;
pub mod random;
pub mod realization;
pub mod scalar;

pub mod cli;

use num_rational::BigRational;

/// Exact rationals; the working field of the crate.
pub type Rational = BigRational;

/// Degree-2/3 exterior vectors over the rationals.
pub type QExteriorVector = exterior::ExteriorVector<Rational>;

/// Sparse echelon basis over the rationals.
pub type QEchelon = linalg::SparseEchelon<Rational>;

pub use falk::{phi3_combinatorial, phi3_rank, verify, FalkReport};
pub use gain_graph::{Circle, Direction, Edge, EdgeId, Gain, GainGraph, GraphError, VertexId};
pub use hypotheses::{Hypothesis, ValidationReport, Verdict};
pub use patterns::{
    biased_isomorphic, count_patterns, find_occurrences, triangles, Occurrence, Pattern,
    PatternCounts, Triangle, TriangleKind,
};
pub use realization::{arrangement, dependent_3sets, Hyperplane};
