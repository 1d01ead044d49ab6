//! Exact and numerical spectral toolkit for k-uniform hypertrees: matching
//! polynomials, distinct eigenvalues, spectral radii, and an independent
//! characteristic-polynomial oracle that measures the algebraic multiplicity
//! of the spectral radius and compares it with k^(m(k-2)).

pub mod charpoly;
pub mod error;
pub mod hypergraph;
pub mod matching;
pub mod poly;
pub mod report;
pub mod spectrum;
pub mod tensor;

pub use error::Error;
pub use hypergraph::Hypergraph;
pub use poly::UniPoly;
