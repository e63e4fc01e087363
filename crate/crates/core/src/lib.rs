//! Two-parameter Cusa-type bounds for `sin(x)/x` on `(0, pi/2)`.
//!
//! The library is layered bottom-up:
//! [`series`] (exact Bernoulli-based coefficients), [`kernel`] (the ratio
//! function and its derivative pieces), [`bounds`] (closed-form bounding
//! families), [`constants`] (sharp constants), [`invtrig`] and [`means`]
//! (consequences), and [`claims`] + [`verifier`] (a catalog of inequality
//! statements with a deterministic numerical checker).

pub mod bounds;
pub mod claims;
pub mod constants;
pub mod error;
pub mod invtrig;
pub mod kernel;
pub mod means;
pub mod numeric;
pub mod output;
pub mod series;
pub mod verifier;

pub use error::{Error, Result};
