//! Supermixed quiver settings: orthogonal, symplectic and general ε-simple
//! existence, local (mixed) quiver settings at semisimple points, and an exact
//! rational linear-algebra oracle that double-checks the combinatorics.
//!
//! The matrix layer is generic over [`linalg::Scalar`]; the algorithms use the
//! exact instance [`Rational`].

pub mod error;
pub mod involution;
pub mod linalg;
pub mod local;
pub mod oracle;
pub mod quiver;
pub mod setting;
pub mod simples;

pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, SpanBasis};
pub use local::{FactorKind, SemisimpleDecomposition, SimpleFactor};
pub use oracle::{Classification, Representation};
pub use quiver::{Arrow, DimensionVector, Path, Quiver};
pub use setting::{
    ArrowKind, RawSetting, SettingBuilder, Sign, Subject, SupermixedQuiver, SupermixedSetting,
    VertexKind, Violation,
};
pub use simples::{SimplesReport, Step, TraceEntry};

/// Exact rationals, the scalar type used throughout the algorithms and oracle.
pub type Rational = num_rational::BigRational;
pub type RationalMatrix = Matrix<Rational>;
pub type FloatMatrix = Matrix<f64>;
