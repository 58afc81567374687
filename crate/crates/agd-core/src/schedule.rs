//! Diffusion time discretization: the β_t, α_t, ᾱ_t bookkeeping every other
//! module indexes into.
//!
//! Steps are 1-based (`t = 1..=T`); `alpha_bar(0) = 1` by convention so that
//! step 0 returns the clean image.

use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};

pub const DEFAULT_STEPS: usize = 100;
pub const DEFAULT_BETA_START: f64 = 1e-3;
pub const DEFAULT_BETA_END: f64 = 0.2;

/// Immutable after construction; safe to share across workers.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSchedule {
    betas: Vec<f64>,
    alphas: Vec<f64>,
    alpha_bars: Vec<f64>,
}

impl NoiseSchedule {
    /// Chain length `T`.
    pub fn steps(&self) -> usize {
        self.betas.len()
    }

    pub fn beta(&self, t: usize) -> Result<f64> {
        self.check_step(t)?;
        Ok(self.betas[t - 1])
    }

    pub fn alpha(&self, t: usize) -> Result<f64> {
        self.check_step(t)?;
        Ok(self.alphas[t - 1])
    }

    /// ᾱ_t for `t = 0..=T`, with ᾱ_0 = 1.
    pub fn alpha_bar(&self, t: usize) -> Result<f64> {
        if t > self.steps() {
            return Err(Error::StepOutOfRange {
                t,
                max: self.steps(),
            });
        }
        Ok(if t == 0 { 1.0 } else { self.alpha_bars[t - 1] })
    }

    fn check_step(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.steps() {
            return Err(Error::StepOutOfRange {
                t,
                max: self.steps(),
            });
        }
        Ok(())
    }
}

impl Default for NoiseSchedule {
    fn default() -> Self {
        build_linear_schedule(DEFAULT_STEPS, DEFAULT_BETA_START, DEFAULT_BETA_END)
            .expect("default schedule parameters are valid")
    }
}

/// Linear β schedule inclusive of both endpoints, ᾱ computed as a running
/// product.
pub fn build_linear_schedule(steps: usize, beta_start: f64, beta_end: f64) -> Result<NoiseSchedule> {
    if steps < 2 {
        return Err(Error::InvalidParameter("schedule needs at least 2 steps".into()));
    }
    if !(beta_start > 0.0 && beta_start <= beta_end && beta_end < 1.0) {
        return Err(Error::InvalidParameter(
            "betas must satisfy 0 < beta_start <= beta_end < 1".into(),
        ));
    }
    let mut betas = Vec::with_capacity(steps);
    let mut alphas = Vec::with_capacity(steps);
    let mut alpha_bars = Vec::with_capacity(steps);
    let mut running = 1.0;
    for i in 0..steps {
        let frac = i as f64 / (steps - 1) as f64;
        let beta = beta_start + (beta_end - beta_start) * frac;
        let alpha = 1.0 - beta;
        running *= alpha;
        betas.push(beta);
        alphas.push(alpha);
        alpha_bars.push(running);
    }
    Ok(NoiseSchedule {
        betas,
        alphas,
        alpha_bars,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_two_step_schedule() {
        let s = build_linear_schedule(2, 0.5, 0.5).unwrap();
        assert_eq!(s.beta(1).unwrap(), 0.5);
        assert_eq!(s.beta(2).unwrap(), 0.5);
        assert_eq!(s.alpha_bar(1).unwrap(), 0.5);
        assert_eq!(s.alpha_bar(2).unwrap(), 0.25);
    }

    #[test]
    fn alpha_bar_zero_is_one() {
        let s = NoiseSchedule::default();
        assert_eq!(s.alpha_bar(0).unwrap(), 1.0);
        assert!((s.alpha_bar(1).unwrap() - 0.999).abs() < 1e-15);
    }

    #[test]
    fn default_chain_ends_near_pure_noise() {
        let s = NoiseSchedule::default();
        // Oracle: compensated (Kahan-style two-product) running product.
        let mut hi = 1.0f64;
        let mut lo = 0.0f64;
        for i in 0..100 {
            let beta = 1e-3 + (0.2 - 1e-3) * i as f64 / 99.0;
            let a = 1.0 - beta;
            let p = hi * a;
            let err = hi.mul_add(a, -p);
            hi = p;
            lo = lo * a + err;
        }
        let oracle = hi + lo;
        let got = s.alpha_bar(100).unwrap();
        assert!(got < 1e-3, "terminal alpha_bar {got} too large");
        assert!(
            (got - oracle).abs() <= 1e-15 * oracle.abs().max(1.0),
            "got {got}, oracle {oracle}"
        );
    }

    #[test]
    fn single_step_is_rejected() {
        assert!(build_linear_schedule(1, 0.1, 0.2).is_err());
    }

    #[test]
    fn invalid_betas_are_rejected() {
        assert!(build_linear_schedule(10, 0.0, 0.2).is_err());
        assert!(build_linear_schedule(10, 0.3, 0.2).is_err());
        assert!(build_linear_schedule(10, 0.1, 1.0).is_err());
    }

    #[test]
    fn out_of_range_indexing() {
        let s = NoiseSchedule::default();
        assert!(s.alpha_bar(101).is_err());
        assert!(s.beta(0).is_err());
        assert!(s.beta(101).is_err());
    }

    #[test]
    fn recurrence_is_exact() {
        let s = NoiseSchedule::default();
        for t in 1..=s.steps() {
            let lhs = s.alpha_bar(t).unwrap();
            let rhs = s.alpha_bar(t - 1).unwrap() * (1.0 - s.beta(t).unwrap());
            assert!((lhs - rhs).abs() < 1e-12, "t={t}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn alpha_bar_strictly_decreasing() {
        let s = NoiseSchedule::default();
        for t in 0..s.steps() {
            assert!(s.alpha_bar(t + 1).unwrap() < s.alpha_bar(t).unwrap());
        }
    }
}
