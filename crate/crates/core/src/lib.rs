//! Exact computations with symplectic alternating algebras over prime fields:
//! central series, nilpotent presentations, the maximal-class criterion and
//! the classification of nilpotent algebras of dimension at most 8.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod presentation;
pub mod verify;

pub use algebra::{Algebra, Nilpotency, SeriesReport, TernaryForm, UcsMethod};
pub use classify::{classify_small, fingerprint, ClassLabel, Fingerprint};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use linalg::{GramMatrix, Matrix, Subspace};
pub use presentation::{build_algebra, extract_presentation, NilpotentPresentation};
