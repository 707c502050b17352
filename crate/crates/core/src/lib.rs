//! Exact constructions of Yang–Baxter operators from Leibniz and 3-Leibniz
//! algebras, finite racks and 3-racks, and linear and trilinear racks on
//! coalgebras, together with exhaustive verification of every axiom.
//!
//! All arithmetic is over ℚ. Tensor bases are lexicographic with the left
//! factor most significant, and column `j` of an operator matrix is the
//! image of basis vector `j`.

pub mod algebras;
pub mod coalgebra;
pub mod error;
pub mod io;
pub mod linalg;
pub mod racks;
pub mod reference;
pub mod report;
pub mod repro;
pub mod samples;
pub mod scalar;
pub mod tensor;
pub mod ybe;

pub use error::{Error, Result};
pub use linalg::{Mat, TensorShape, Vector};
pub use report::{VerificationReport, Witness};
pub use scalar::Scalar;
