use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::MeasureError;
use crate::sample::MeasureSample;

/// Largest accepted condition number of the column-scaled design matrix.
pub const MAX_CONDITION: f64 = 1e12;

/// Least-squares fit of `value = sum_k c_k r^{e_k}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    pub exponents: Vec<f64>,
    pub coefficients: Vec<f64>,
    /// Residual norm of the relative (row-scaled) system.
    pub residual_norm: f64,
    pub condition: f64,
    /// `(value - c_0 r^{e_0}) / r^{e_1}` for each sample.
    pub richardson: Vec<f64>,
}

/// Rows are divided by `r^{e_0}` so every sample carries the same relative
/// weight; columns are scaled to unit max-norm before the SVD.
pub fn fit_expansion(samples: &[MeasureSample], exponents: &[f64]) -> Result<FitResult, MeasureError> {
    let n = samples.len();
    let k = exponents.len();
    if k == 0 || n < k {
        return Err(MeasureError::TooFewSamples { needed: k.max(1), got: n });
    }
    let e0 = exponents[0];
    let mut a = DMatrix::from_fn(n, k, |i, j| samples[i].r.powf(exponents[j] - e0));
    let b = DVector::from_fn(n, |i, _| samples[i].value / samples[i].r.powf(e0));
    let mut scale = vec![1.0; k];
    for (j, s) in scale.iter_mut().enumerate() {
        let m = a.column(j).amax();
        if m > 0.0 {
            *s = m;
            a.column_mut(j).unscale_mut(m);
        }
    }
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = smax / smin;
    if !condition.is_finite() || condition > MAX_CONDITION {
        return Err(MeasureError::IllConditioned(condition));
    }
    let x = svd.solve(&b, 0.0).map_err(|_| MeasureError::IllConditioned(condition))?;
    let residual_norm = (&a * &x - &b).norm();
    let coefficients: Vec<f64> = x.iter().zip(&scale).map(|(v, s)| v / s).collect();
    let richardson = if k >= 2 {
        samples.iter().map(|s| (s.value - coefficients[0] * s.r.powf(e0)) / s.r.powf(exponents[1])).collect()
    } else {
        vec![]
    };
    Ok(FitResult { exponents: exponents.to_vec(), coefficients, residual_norm, condition, richardson })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityRatio {
    /// `(r, value / r^m)`
    pub ratios: Vec<(f64, f64)>,
    /// Extrapolation to `r = 0` of `L + sum_{k=1}^{3} c_k r^k`.
    pub limit: f64,
}

pub fn density_ratio(samples: &[MeasureSample], m: f64) -> Result<DensityRatio, MeasureError> {
    if samples.is_empty() {
        return Err(MeasureError::TooFewSamples { needed: 1, got: 0 });
    }
    let ratios: Vec<(f64, f64)> = samples.iter().map(|s| (s.r, s.value / s.r.powf(m))).collect();
    let terms = (samples.len() - 1).min(3);
    let pts: Vec<MeasureSample> = ratios.iter().map(|&(r, v)| MeasureSample { r, value: v, error: 0.0 }).collect();
    let exps: Vec<f64> = (0..=terms).map(|k| k as f64).collect();
    let limit = fit_expansion(&pts, &exps)?.coefficients[0];
    Ok(DensityRatio { ratios, limit })
}

/// Geometric radius ladder `r_k = r0 factor^k`, `k = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusLadder {
    pub r0: f64,
    pub count: usize,
    pub factor: f64,
}

impl Default for RadiusLadder {
    fn default() -> Self {
        RadiusLadder { r0: 0.1, count: 8, factor: 0.5 }
    }
}

impl RadiusLadder {
    pub fn new(r0: f64, count: usize, factor: f64) -> Result<Self, String> {
        if !(r0 > 0.0 && r0.is_finite()) {
            return Err(format!("r0 must be positive, got {r0}"));
        }
        if count == 0 {
            return Err("count must be at least 1".into());
        }
        if !(factor > 0.0 && factor < 1.0) {
            return Err(format!("factor must lie in (0, 1), got {factor}"));
        }
        Ok(RadiusLadder { r0, count, factor })
    }

    pub fn radii(&self) -> Vec<f64> {
        (0..self.count).map(|k| self.r0 * self.factor.powi(k as i32)).collect()
    }
}

impl std::str::FromStr for RadiusLadder {
    type Err = String;
    /// `"r0,count,factor"`
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!("expected r0,count,factor, got {s:?}"));
        }
        let r0 = parts[0].parse::<f64>().map_err(|e| format!("r0: {e}"))?;
        let count = parts[1].parse::<usize>().map_err(|e| format!("count: {e}"))?;
        let factor = parts[2].parse::<f64>().map_err(|e| format!("factor: {e}"))?;
        RadiusLadder::new(r0, count, factor)
    }
}

/// Result of [`fit_on_ladder`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LadderFit {
    pub ladder: RadiusLadder,
    pub samples: Vec<MeasureSample>,
    pub fit: FitResult,
    /// `|c_1 r0^{e_1}| / |c_0 r0^{e_0}|` on the final ladder.
    pub next_order_ratio: f64,
    pub shrinks: usize,
}

pub const MAX_NEXT_ORDER_RATIO: f64 = 0.1;

/// Measures on the ladder and fits; halves `r0` (at most `max_shrinks`
/// times) while the second fitted term exceeds 10% of the leading one.
pub fn fit_on_ladder(
    measure: impl Fn(f64) -> Result<MeasureSample, MeasureError>,
    ladder: RadiusLadder,
    exponents: &[f64],
    max_shrinks: usize,
) -> Result<LadderFit, MeasureError> {
    let mut ladder = ladder;
    let mut shrinks = 0;
    loop {
        let samples = ladder.radii().into_iter().map(&measure).collect::<Result<Vec<_>, _>>()?;
        let fit = fit_expansion(&samples, exponents)?;
        let next_order_ratio = if exponents.len() >= 2 {
            let lead = (fit.coefficients[0] * ladder.r0.powf(exponents[0])).abs();
            (fit.coefficients[1] * ladder.r0.powf(exponents[1])).abs() / lead
        } else {
            0.0
        };
        if next_order_ratio <= MAX_NEXT_ORDER_RATIO || shrinks >= max_shrinks {
            return Ok(LadderFit { ladder, samples, fit, next_order_ratio, shrinks });
        }
        ladder.r0 *= 0.5;
        shrinks += 1;
    }
}
