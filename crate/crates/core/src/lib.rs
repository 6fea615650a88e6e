//! Exact structure-constant toolkit for Hom-Poisson, Hom-pre-Poisson and
//! related Hom-algebras.

pub mod algebra;
pub mod check;
pub mod checkers;
pub mod constructions;
pub mod deformations;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graded;
pub mod io;
pub mod jobs;
pub mod linalg;
pub mod operators;
pub mod representations;

pub use algebra::{AnyAlgebra, HomAlgebra, HomPairAlgebra, Kind, PairKind};
pub use check::{CheckOptions, CheckReport, Violation};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Tensor3, Vector};
