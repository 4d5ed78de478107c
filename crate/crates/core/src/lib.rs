//! One-sided non-commutative topologies on finite-dimensional quiver representations,
//! built from the order of Jordan-Hölder factors, together with the composition monoid
//! of an acyclic quiver as a word-rewriting system.
//!
//! Everything is exact and works over a small prime field `F_p`, so every existential
//! statement ("there is a filtration", "there is an isomorphism") is decided by
//! exhaustive search at desk scale.

pub mod error;
pub mod fp;
pub mod iso;
pub mod jh;
pub mod kernel;
pub mod matching;
pub mod matrix;
pub mod monoid;
pub mod opens;
pub mod quiver;
pub mod rep;

pub use error::{KernelError, LinearError, MonoidError, OpenError, QuiverError, RepError};
pub use fp::{Fp, Prime};
pub use iso::{enumerate_slice, enumerate_universe, iso_test, IsoClass};
pub use jh::{ext1_dim, jh_sequences, FactorSequence};
pub use matrix::{quotient_action, Matrix, Rref, Vector};
pub use quiver::{build_quiver, Quiver, QuiverKind, QuiverSpec, SimpleId};
pub use rep::{DimVector, Representation};
