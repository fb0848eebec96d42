//! Construction and numerical certification of quantum anticliques for
//! non-commutative operator graphs generated by generalized Pauli operators.
//!
//! The crate builds operator graphs and code spaces, then checks the
//! anticlique condition `dim P_K 𝒱 P_K = 1` and the graph dimension with two
//! independent oracles: exact Weyl-label counting and the numerical rank of
//! the Hilbert–Schmidt Gram matrix.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod weyl;
pub mod cli;

pub use error::{Error, Result};
pub use graph::{CodeSpace, CompressionReport, DimMethod, GraphDim, OperatorGraph};
pub use linalg::{ComplexMatrix, ComplexVector, Tolerance};
pub use weyl::{WeylLabel, WeylLabelPair};
