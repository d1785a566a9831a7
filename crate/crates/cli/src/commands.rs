use koranyi_calculus::{ball_integral, monomial_ball_integral, SphereQuadrature};
use measure_engine::{density_ratio, fit_on_ladder, FitResult, MeasureSample, RadiusLadder};
use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;
use crate::input::Case;
use crate::output::{csv_table, json, num, opt};

pub fn default_ladder(case: &Case) -> RadiusLadder {
    let r0 = if case.degree == 3 { 0.1 } else { 0.2 };
    RadiusLadder { r0, count: 8, factor: 0.75 }
}

#[derive(Serialize)]
struct DensityRow {
    r: f64,
    measure: f64,
    err_estimate: f64,
    ratio: f64,
}

#[derive(Serialize)]
struct DensityReport {
    kind: &'static str,
    degree: u8,
    ladder: RadiusLadder,
    rows: Vec<DensityRow>,
    limit: f64,
    predicted_limit: Option<f64>,
}

pub fn density(case: &Case, ladder: RadiusLadder, format: Format) -> Result<Vec<u8>, CliError> {
    let samples = ladder.radii().into_iter().map(|r| case.measure(r)).collect::<Result<Vec<_>, _>>()?;
    let d = density_ratio(&samples, case.degree as f64)?;
    let rows: Vec<DensityRow> = samples
        .iter()
        .zip(&d.ratios)
        .map(|(s, &(_, ratio))| DensityRow { r: s.r, measure: s.value, err_estimate: s.error, ratio })
        .collect();
    match format {
        Format::Csv => {
            let t: Vec<Vec<String>> =
                rows.iter().map(|r| vec![num(r.r), num(r.measure), num(r.err_estimate), num(r.ratio), num(d.limit)]).collect();
            csv_table(&["r", "measure", "err_estimate", "ratio", "limit"], &t)
        }
        Format::Json => json(&DensityReport {
            kind: case.kind,
            degree: case.degree,
            ladder,
            rows,
            limit: d.limit,
            predicted_limit: case.predicted_limit(),
        }),
    }
}

#[derive(Serialize)]
struct ExpandReport {
    kind: &'static str,
    ladder: RadiusLadder,
    samples: Vec<MeasureSample>,
    fit: FitResult,
    predicted: Vec<Option<f64>>,
    rel_error: Vec<Option<f64>>,
}

pub fn expand(case: &Case, ladder: RadiusLadder, order: Option<usize>, format: Format) -> Result<Vec<u8>, CliError> {
    let default = if case.degree == 3 { 5 } else { 3 };
    let n = order.unwrap_or(default);
    if n == 0 || n > case.exponents.len() {
        return Err(CliError::Input(format!("order must lie in 1..={}, got {n}", case.exponents.len())));
    }
    let fit = fit_on_ladder(|r| case.measure(r), ladder, &case.exponents[..n], 0)?;
    let predicted = case.predicted[..n].to_vec();
    let rel_error: Vec<Option<f64>> = fit
        .fit
        .coefficients
        .iter()
        .zip(&predicted)
        .map(|(c, p)| p.map(|p| if p == 0.0 { (c - p).abs() } else { ((c - p) / p).abs() }))
        .collect();
    match format {
        Format::Csv => {
            let t: Vec<Vec<String>> = (0..n)
                .map(|k| vec![num(case.exponents[k]), num(fit.fit.coefficients[k]), opt(predicted[k]), opt(rel_error[k])])
                .collect();
            csv_table(&["exponent", "fitted", "predicted", "rel_error"], &t)
        }
        Format::Json => json(&ExpandReport { kind: case.kind, ladder: fit.ladder, samples: fit.samples, fit: fit.fit, predicted, rel_error }),
    }
}

#[derive(Serialize)]
struct TableRow {
    a: u32,
    b: u32,
    closed_form: f64,
    quadrature: f64,
    rel_error: f64,
    sphere: f64,
    sphere_over_ball: f64,
    weighted_degree: u32,
}

/// `int_B eta1^{2a} eta2^{2b}` in closed form and by quadrature, with the
/// sphere integral and its ratio to the ball integral (`d + 3`).
pub fn table(format: Format) -> Result<Vec<u8>, CliError> {
    let sphere = SphereQuadrature::default();
    let mut rows = vec![];
    for a in 0..=4u32 {
        for b in 0..=4 - a {
            let h = move |e: [f64; 2]| e[0].powi(2 * a as i32) * e[1].powi(2 * b as i32);
            let closed_form = monomial_ball_integral(a, b);
            let quadrature = ball_integral(h, 1e-11).map_err(measure_engine::MeasureError::from)?;
            let s = sphere.integrate(h).map_err(measure_engine::MeasureError::from)?;
            rows.push(TableRow {
                a,
                b,
                closed_form,
                quadrature,
                rel_error: ((quadrature - closed_form) / closed_form).abs(),
                sphere: s,
                sphere_over_ball: s / closed_form,
                weighted_degree: 2 * a + 4 * b,
            });
        }
    }
    match format {
        Format::Csv => {
            let t: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.a.to_string(),
                        r.b.to_string(),
                        r.weighted_degree.to_string(),
                        num(r.closed_form),
                        num(r.quadrature),
                        num(r.rel_error),
                        num(r.sphere),
                        num(r.sphere_over_ball),
                    ]
                })
                .collect();
            csv_table(&["a", "b", "weighted_degree", "closed_form", "quadrature", "rel_error", "sphere", "sphere_over_ball"], &t)
        }
        Format::Json => json(&rows),
    }
}
