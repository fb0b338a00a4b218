//! Exact computation and verification of unavoidable color patterns in 2- and
//! k-edge-colorings of complete graphs.

pub mod balance;
pub mod bits;
pub mod canon;
pub mod certificate;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod multicolor;
pub mod params;
pub mod patterns;
pub mod reference;
pub mod search;
pub mod suites;

pub use certificate::{ExtremalCertificate, Witness};
pub use coloring::{KColoring, TwoColoring};
pub use error::{Error, Result};
pub use graph::{NamedGraph, SimpleGraph};
pub use patterns::PatternFamily;
