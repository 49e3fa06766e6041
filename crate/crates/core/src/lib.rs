//! Unitarily invariant and symmetric gauge norms, computed exactly on two
//! desk-scale models: dense complex matrices with the ordinary trace, and
//! compactly supported step functions on the half line.
//!
//! The pipeline is the same for every operand: reduce it to its s-number
//! curve ([`snumbers`]), then evaluate norms on the curve ([`norms`]).
//! Dual norms, second duals and Hölder's inequality live in [`duality`];
//! Ky Fan dominance and the representation of a gauge norm as a supremum
//! of f-norms live in [`dominance`].
//!
//! ```
//! use gaugenorm::linalg::ComplexMatrix;
//! use gaugenorm::norms::ky_fan;
//! use gaugenorm::snumbers::mu_of_matrix;
//!
//! let mu = mu_of_matrix(&ComplexMatrix::diag(&[3.0, 2.0, 1.0])).unwrap();
//! assert!((ky_fan(&mu, 2.0).unwrap() - 5.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod dominance;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod norms;
pub mod random;
pub mod snumbers;
pub mod stepfn;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use norms::NormSpec;
pub use snumbers::{SNumberCurve, SimpleOperator};
pub use stepfn::StepFunction;
