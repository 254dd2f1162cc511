//! Exact computations with untwisted affine Kac-Moody algebras.
//!
//! The crate realizes `Xₙ⁽¹⁾` (X = A, B, C, D) as centrally extended loop
//! algebras of matrices over Gaussian-rational Laurent polynomials, applies
//! involutive automorphisms to split compact forms into `K ⊕ P`, and
//! classifies the resulting real forms through Vogan diagrams.

pub mod cartan;
pub mod catalog;
pub mod crosscheck;
pub mod degree0;
pub mod io;
pub mod involutions;
pub mod labels;
pub mod linalg;
pub mod loop_algebra;
pub mod matrix;
pub mod render;
pub mod scalars;
pub mod vogan;

/// Version tag carried by every JSON document the crate emits.
pub const SCHEMA: &str = "kmss/1";
