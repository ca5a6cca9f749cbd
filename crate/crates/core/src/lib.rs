//! Exact computations on SU(3) / SL(3, C) in a Cartan-Weyl basis.
//!
//! Everything below the diagram renderer is exact: scalars live in
//! Q(i, √2, √3) with arbitrary-precision rational coordinates.
//!
//! * [`scalar`]: the coefficient field and its text grammar.
//! * [`matrix`], [`boson`]: the two element backends.
//! * [`presentation`], [`lie`]: labeled generator sets, structure constants,
//!   adjoint roots, Killing form and normalization.
//! * [`verifier`]: Cartan-Weyl axiom checks and presentation comparison.
//! * [`presets`], [`reference`], [`errata`]: built-in algebras, transcribed
//!   reference tables, and their disagreements with recomputation.
//! * [`algebra_file`], [`report`], [`diagram`], [`cli`]: I/O.

pub mod algebra_file;
pub mod boson;
pub mod cli;
pub mod diagram;
pub mod errata;
mod error;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod presentation;
pub mod presets;
pub mod reference;
pub mod report;
pub mod scalar;
pub mod span;
pub mod verifier;

pub use boson::{BosonMonomial, BosonPoly};
pub use error::{Error, Result};
pub use lie::{RootVector, StructureConstants};
pub use matrix::Mat;
pub use presentation::{Backend, Element, Generator, Presentation};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use verifier::{compare_presentations, verify_cartan_weyl, CartanWeylReport};
