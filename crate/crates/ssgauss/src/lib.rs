//! Simulation and numerical verification toolkit for self-similar Gaussian
//! processes.
//!
//! The crate samples fractional Brownian motion, sub-fractional and
//! bi-fractional Brownian motion, and the Riemann–Liouville process exactly
//! on uniform grids; evaluates occupation functionals ∫₀ᵗ γ(X_s) ds for the
//! mollified delta, Riesz, and product kernels; computes exact small-order
//! moments by quadrature; and closes the loop between closed-form
//! large-deviation constants and Monte Carlo tail estimates.
//!
//! Per-path work is data-parallel (rayon, behind the default `parallel`
//! feature) with a sequential fallback, and every computation is bit-for-bit
//! reproducible from its seed regardless of the thread count.

pub mod error;
pub mod exec;
pub mod process;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use exec::Execution;
pub use process::{Grid, ProcessKind, ProcessSpec};
