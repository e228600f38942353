//! Process specifications: which self-similar Gaussian process, with which
//! parameters, in which dimension.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The family of centered self-similar Gaussian processes covered by the
/// toolkit. Components of the d-dimensional process are i.i.d. copies of the
/// scalar process.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ProcessKind {
    /// Fractional Brownian motion, Hurst index in (0,1).
    Fbm { hurst: f64 },
    /// Sub-fractional Brownian motion, index in (0,1). (Scaling-limit claims
    /// downstream additionally require H < 1/2.)
    SubFbm { hurst: f64 },
    /// Bi-fractional Brownian motion, H in (0,1), K in (0,1].
    BiFbm { hurst: f64, k: f64 },
    /// Riemann–Liouville process with index alpha in (0,1).
    RiemannLiouville { alpha: f64 },
    /// The auxiliary smooth Gaussian process with covariance
    /// Γ(1-2α)/(2α) (t^{2α}+s^{2α}-(t+s)^{2α}); alpha in (0, 1/2).
    AuxY { alpha: f64 },
    /// Standard Brownian motion.
    BrownianMotion,
}

/// A process kind plus the spatial dimension.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProcessSpec {
    #[serde(flatten)]
    pub kind: ProcessKind,
    pub dim: usize,
}

impl ProcessSpec {
    pub fn new(kind: ProcessKind, dim: usize) -> Result<Self> {
        if dim < 1 {
            return Err(Error::domain("dimension must be at least 1"));
        }
        match kind {
            ProcessKind::Fbm { hurst } | ProcessKind::SubFbm { hurst } => {
                if !(hurst > 0.0 && hurst < 1.0) {
                    return Err(Error::domain(format!("hurst must lie in (0,1), got {hurst}")));
                }
            }
            ProcessKind::BiFbm { hurst, k } => {
                if !(hurst > 0.0 && hurst < 1.0) {
                    return Err(Error::domain(format!("hurst must lie in (0,1), got {hurst}")));
                }
                if !(k > 0.0 && k <= 1.0) {
                    return Err(Error::domain(format!("k must lie in (0,1], got {k}")));
                }
            }
            ProcessKind::RiemannLiouville { alpha } => {
                if !(alpha > 0.0 && alpha < 1.0) {
                    return Err(Error::domain(format!("alpha must lie in (0,1), got {alpha}")));
                }
            }
            ProcessKind::AuxY { alpha } => {
                // The covariance requires alpha < 1/2 for positivity.
                if !(alpha > 0.0 && alpha < 0.5) {
                    return Err(Error::domain(format!(
                        "aux-y alpha must lie in (0,1/2), got {alpha}"
                    )));
                }
            }
            ProcessKind::BrownianMotion => {}
        }
        Ok(ProcessSpec { kind, dim })
    }

    /// The self-similarity exponent: X_{at} equals a^{α_ss} X_t in law.
    pub fn ss_index(&self) -> f64 {
        match self.kind {
            ProcessKind::Fbm { hurst } | ProcessKind::SubFbm { hurst } => hurst,
            ProcessKind::BiFbm { hurst, k } => hurst * k,
            ProcessKind::RiemannLiouville { alpha } | ProcessKind::AuxY { alpha } => alpha,
            ProcessKind::BrownianMotion => 0.5,
        }
    }

    /// Short, stable name for reports and file headers.
    pub fn label(&self) -> String {
        match self.kind {
            ProcessKind::Fbm { hurst } => format!("fbm(H={hurst})"),
            ProcessKind::SubFbm { hurst } => format!("subfbm(H={hurst})"),
            ProcessKind::BiFbm { hurst, k } => format!("bifbm(H={hurst},K={k})"),
            ProcessKind::RiemannLiouville { alpha } => format!("rl(alpha={alpha})"),
            ProcessKind::AuxY { alpha } => format!("aux-y(alpha={alpha})"),
            ProcessKind::BrownianMotion => "bm".to_string(),
        }
    }
}

/// Uniform grid {T/n, 2T/n, ..., T}; the origin t = 0, where every process
/// vanishes, stays implicit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub n: usize,
    pub horizon: f64,
}

impl Grid {
    pub fn new(n: usize, horizon: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain("grid needs at least 2 points"));
        }
        if !(horizon > 0.0) {
            return Err(Error::domain("grid horizon must be positive"));
        }
        Ok(Grid { n, horizon })
    }

    pub fn dt(&self) -> f64 {
        self.horizon / self.n as f64
    }

    /// The i-th grid time, 0-indexed: (i+1)·T/n.
    pub fn time(&self, i: usize) -> f64 {
        (i + 1) as f64 * self.dt()
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|i| self.time(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ProcessSpec::new(ProcessKind::Fbm { hurst: 1.5 }, 1).is_err());
        assert!(ProcessSpec::new(ProcessKind::AuxY { alpha: 0.5 }, 1).is_err());
        assert!(ProcessSpec::new(ProcessKind::BiFbm { hurst: 0.5, k: 0.0 }, 1).is_err());
        assert!(ProcessSpec::new(ProcessKind::BrownianMotion, 0).is_err());
        assert!(ProcessSpec::new(ProcessKind::BiFbm { hurst: 0.5, k: 1.0 }, 2).is_ok());
    }

    #[test]
    fn ss_index_values() {
        let bm = ProcessSpec::new(ProcessKind::BrownianMotion, 1).unwrap();
        assert_eq!(bm.ss_index(), 0.5);
        let z = ProcessSpec::new(ProcessKind::BiFbm { hurst: 0.6, k: 0.5 }, 1).unwrap();
        assert!((z.ss_index() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn grid_times() {
        let g = Grid::new(4, 2.0).unwrap();
        let t: Vec<f64> = g.times().collect();
        assert_eq!(t, vec![0.5, 1.0, 1.5, 2.0]);
        assert!(Grid::new(1, 1.0).is_err());
    }
}
