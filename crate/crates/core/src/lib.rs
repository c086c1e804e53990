//! Pythagorean-hodograph curves in the exponential-polynomial spaces
//! `EP_m = span{1, t, e^{±ωt}, …, e^{±mωt}}` for m ∈ {1, 2}.
//!
//! * [`basis`]: the bases of the preimage, hodograph and curve spaces, in
//!   naive, large-ω and small-ω evaluation modes.
//! * [`curve`]: Bézier-like curves, PH curves from quaternion preimages,
//!   parametric speed and arc length.
//! * [`hermite`]: C¹ Hermite interpolation by PH curves in `EP_2`.
//! * [`eval`]: point evaluation algorithms.
//! * [`bench`]: accuracy and timing experiments for the evaluators.

pub mod basis;
pub mod bench;
pub mod cli;
pub mod curve;
pub mod error;
pub mod eval;
pub mod hermite;
pub mod quat;

pub use basis::{EvalMode, Order, ShapeParam};
pub use curve::{EphCurve, Preimage};
pub use error::{EphError, Result};
pub use eval::EvalMethod;
pub use quat::{Quaternion, Vector3};
