//! Exact-arithmetic toolkit for parametrized families of totally real
//! units: power sums of roots and their Newton–Girard polynomials, the
//! root-power transform, Sturm-based reality checks, nonconstant power-sum
//! witnesses, and Lagrange/Kamke representations.

pub(crate) mod decimal;
pub mod error;
pub mod families;
pub mod intpoly;
pub mod realroots;
pub mod ring;
pub mod symfun;
pub mod waring;

pub use error::{Error, Hypothesis, Result};
pub use intpoly::{Assignment, IntPoly, MultiParamPoly, ParamXPoly};

/// Version string recorded in reports and certificates.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
