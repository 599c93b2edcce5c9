//! Exact invariants of reduced plane projective curves.
//!
//! Given a homogeneous polynomial f in x, y, z with rational coefficients,
//! this crate computes — in exact arithmetic — the graded pieces of the
//! Jacobian ideal and its saturation, the minimal degree of a relation
//! among the partial derivatives, the total Tjurina number, the graded
//! dimensions of the Jacobian module, and the resulting freeness defect
//! and free / nearly-free classification. Supporting modules provide
//! singularity-type tables (log canonical thresholds, local Tjurina and
//! delta numbers), bound checkers, constructors for notable curve
//! families, and a command-line reporting surface.
//!
//! Rank and kernel computations are accelerated modulo word-sized primes
//! but every returned value is certified exact (see [`linalg`]).

pub mod families;
pub mod forms;
pub mod jacobian;
pub mod linalg;
pub mod report;
pub mod verify;
pub mod scalar;
pub mod singularities;

pub use forms::Form;
pub use linalg::ExactMatrix;
pub use scalar::Scalar;
