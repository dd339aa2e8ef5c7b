//! Exact computations for weighted directed algebraic topology.
//!
//! - [`dmetric`]: finite δ-metric spaces with limits, colimits, tensor,
//!   internal hom, symmetrization and scaling.
//! - [`paths`]: span, length and Lipschitz weight of piecewise-affine and
//!   chain paths in the standard δ-line, δ-interval and δ-circle.
//! - [`wcat`]: finite weighted categories, functors, pushouts and the
//!   future and past spectra.
//! - [`fundcat`]: weighted fundamental categories of rectangles with
//!   rectangular holes, and the van Kampen comparison.
//! - [`wspace`]: chain models of w-spaces, the Galois connection with
//!   δ-metric spaces, and the classification into linear, span- and
//!   length-metrizable spaces.
//! - [`rotation`]: irrational rotation w-spaces for quadratic irrationals and
//!   their isometric and Lipschitz classification.
//! - [`json`]: exact JSON descriptions of all of the above.
//!
//! All arithmetic is exact: weights are rationals extended by `∞`, or elements
//! of a real quadratic field for rotations.

pub mod dmetric;
pub mod error;
pub mod fundcat;
pub mod json;
pub mod paths;
pub mod rotation;
pub mod wcat;
pub mod weight;
pub mod wspace;

pub use error::{Error, ParseError, Result};
pub use weight::ExtWeight;
