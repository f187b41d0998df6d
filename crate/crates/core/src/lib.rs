//! Exact computation with split octonions, the 27-dimensional Albert space and
//! the exceptional groups SE6(q), F4(q) and 2SE6(q) over small finite fields.

pub mod albert;
pub mod error;
pub mod gf;
pub mod group;
pub mod linalg;
pub mod octonion;
pub mod orbits;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{Fe, Field, FieldElement, FieldSpec};
pub use octonion::{OctIndex, Octonion, Octonions};
pub use albert::{Albert, AlbertVector, Color};
pub use group::{GeneratorKind, LinearOp27, OctMatrix3};
