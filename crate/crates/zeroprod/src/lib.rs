//! A workbench for finite-dimensional associative algebras over prime fields.
//!
//! The crate computes left/right annihilators, the Galois connection between
//! the lattices of one-sided ideals, maximal orthogonal pairs and regular
//! inner ideals, and from those classifies every maximal zero-product subset
//! (a subset `S` with `S² = 0`) of an algebra given by structure constants.
//! The classification is cross-checked by an independent brute-force oracle,
//! by the idempotent form `eQ(1-e)` available in matrix algebras, by the
//! dual-pair geometry `W ↦ W ⊗ W^⊥`, and by the abelian-inner-ideal view of
//! the associated Lie ring.
//!
//! Layers, bottom up:
//!
//! - [`linalg`]: exact linear algebra over GF(p) — matrices, RREF, kernels,
//!   canonical subspaces and full subspace enumeration.
//! - [`algebra`]: structure-constant algebras, validation, ring predicates
//!   (semiprime / prime / simple / core) and element inventories.
//! - [`annlattice`]: annihilators, closures, orthogonal pairs and regular
//!   inner ideals.
//! - [`classify`]: the classification pipeline and its bijection checks.
//! - [`oracle`]: the independent exhaustive / randomized brute-force oracle.
//! - [`dualpair`]: finite-dimensional dual-pair model of matrix algebras.
//! - [`lie`]: the derived Lie bracket and abelian inner-ideal cross-checks.

pub mod algebra;
pub mod annlattice;
pub mod classify;
pub mod dualpair;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod oracle;

pub use algebra::{Algebra, Element, IdealSide, RawAlgebra};
pub use annlattice::OrthogonalPair;
pub use classify::{ClassEntry, ClassificationReport, ClassifyOptions, OracleMode, OraclePolicy};
pub use dualpair::DualPair;
pub use error::Error;
pub use linalg::{Mat, Scalar, Subspace};
