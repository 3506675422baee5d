//! Distance Pareto spectra of connected graphs.
//!
//! The Pareto eigenvalues of the distance matrix of a connected graph are
//! exactly the spectral radii of its principal submatrices. This crate
//! computes those spectra by subset enumeration, certifies individual
//! values through the complementarity characterization, evaluates the
//! closed forms and inequalities relating the largest two values,
//! classifies the fifth and sixth smallest values from induced-subgraph
//! structure, and scans graph6 corpora for extremal behavior.

#![forbid(unsafe_code)]

pub mod bound;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod pareto;
pub mod patterns;
pub mod report;
pub mod scan;
pub mod spectral;
pub mod theorems;

pub use bound::{BoundCheck, Relation, EQUALITY_TOL};
pub use error::{Error, Result};
pub use graph::{distance_matrix, make_family, DistanceMatrix, Graph};
pub use matrix::{principal_submatrix, SymMatrix, VertexSubset};
pub use pareto::{pareto_spectrum, ParetoCertificate, ParetoSpectrum};
pub use patterns::PatternId;
pub use spectral::{all_eigenvalues, rayleigh, spectral_radius, SpectralResult};
