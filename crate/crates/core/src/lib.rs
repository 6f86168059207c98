//! Exact computations for hereditary orders over discrete valuation rings
//! and over the projective line, and for weighted projective lines.
pub mod dvr;
pub mod error;
pub mod grading;
pub mod k0;
pub mod linalg;
pub mod p1;
pub mod wpl;

pub use error::{Error, Result};
