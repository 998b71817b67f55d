//! Scalar abstraction for all numeric kernels.
//!
//! Every matrix, energy and optimizer routine in this crate is generic over
//! [`Float`], so the whole pipeline runs in `f32` or `f64` without code
//! changes. Concrete aliases for the common `f64` instantiation live at the
//! crate root.

use num_traits::{FromPrimitive, NumAssignOps};

/// Floating-point scalar: `f32` or `f64`.
pub trait Float:
    num_traits::Float
    + FromPrimitive
    + NumAssignOps
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance used to decide whether a Laplacian eigenvalue is
    /// zero (graph disconnected). Integer Laplacians solved densely meet
    /// this comfortably.
    const DEFAULT_EIG_TOL: Self;

    /// Lossless-enough conversion from `f64` literals (constants, config).
    fn from_f64_lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    /// Widen to `f64` for reporting and p-value computation.
    fn to_f64_lossy(self) -> f64;
}

impl Float for f64 {
    const DEFAULT_EIG_TOL: Self = 1e-8;

    fn to_f64_lossy(self) -> f64 {
        self
    }
}

impl Float for f32 {
    const DEFAULT_EIG_TOL: Self = 3e-4;

    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}
