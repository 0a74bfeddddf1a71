//! m-dependent sequences `X_n = h(T_n, ..., T_{n+m})` over i.i.d. inputs.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::StationaryProcess;
use crate::error::{ensure, Result};
use crate::geometry::SupportModel;
use crate::rng::SimRng;

/// An m-dependent sequence built from a user-supplied window map `h` and an
/// i.i.d. base sampler. Stationary from the first index; no burn-in.
pub struct MDependentConfig<B, H> {
    pub m: usize,
    /// Dimension of `h`'s output.
    pub dim: usize,
    pub base: B,
    pub h: H,
    /// Caller-asserted compact support of `X_1`.
    pub support: Option<SupportModel>,
}

impl<B, H> StationaryProcess for MDependentConfig<B, H>
where
    B: Fn(&mut SimRng) -> Vec<f64> + Sync,
    H: Fn(&[Vec<f64>]) -> Vec<f64> + Sync,
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn validate(&self) -> Result<()> {
        ensure!(self.dim >= 1, "output dimension must be at least 1");
        if let Some(s) = &self.support {
            s.validate()?;
            ensure!(
                s.dim() == self.dim,
                "asserted support has dimension {} not {}",
                s.dim(),
                self.dim
            );
        }
        Ok(())
    }

    fn support(&self) -> Option<SupportModel> {
        self.support.clone()
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        let mut window: Vec<Vec<f64>> = (0..=self.m).map(|_| (self.base)(rng)).collect();
        for i in 0..n {
            let x = (self.h)(&window);
            assert_eq!(
                x.len(),
                self.dim,
                "window map returned a point of the wrong dimension"
            );
            out.extend_from_slice(&x);
            if i + 1 < n {
                window.rotate_left(1);
                window[self.m] = (self.base)(rng);
            }
        }
    }
}

/// Moving average of `m + 1` i.i.d. uniforms on `[0, 1]`; support `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MovingAverage {
    pub m: usize,
}

impl StationaryProcess for MovingAverage {
    fn dim(&self) -> usize {
        1
    }

    fn validate(&self) -> Result<()> {
        Ok(())
    }

    fn support(&self) -> Option<SupportModel> {
        Some(SupportModel::Interval { a: 0.0, b: 1.0 })
    }

    fn sample_into(&self, n: usize, rng: &mut SimRng, out: &mut Vec<f64>) {
        let w = self.m + 1;
        let t: Vec<f64> = (0..n + self.m).map(|_| rng.random::<f64>()).collect();
        out.extend(t.windows(w).map(|win| win.iter().sum::<f64>() / w as f64));
    }
}
