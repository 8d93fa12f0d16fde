//! Moment-angle complexes `Z_K`, their real analogues, and the motivic refinement:
//! exact integral homology, splitting decompositions, Grothendieck-Witt Euler
//! characteristics, affine models and independent combinatorial oracles.

pub mod affine;
pub mod error;
pub mod examples;
pub mod generate;
pub mod gw;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod motivic;
pub mod oracles;
pub mod simplicial;
pub mod snf;
pub mod splitting;

pub use error::{AffineError, ComplexError, HomologyError, InvariantError, OracleError, ParseError};
pub use gw::GwElement;
pub use homology::{GradedHomology, HomologyGroup};
pub use simplicial::{MonomialIdeal, SimplicialComplex, VertexSet};
