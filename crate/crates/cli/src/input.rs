//! Spec loading and the per-input measurement setup.

use std::f64::consts::PI;
use std::path::Path;

use curve_lab::spec::{Curve, CurveSpec, LiftedCircle};
use curve_lab::{horizontal_point_density, lifted_circle_jet, measure_series, CurveJet, PlanarJet};
use heis_core::HPoint;
use jet_algebra::{Jet, Rational, Scalar, DEFAULT_ORDER};
use measure_engine::{
    beta1, curve_ball_measure_tol, surface_ball_measure, x3_graph_ball_measure, MeasureError, MeasureSample, PolarQuadrature,
    CURVE_QUAD_TOL, DEFAULT_RADIAL_NODES,
};
use koranyi_calculus::{omega_h, SphereQuadrature, DEFAULT_SPHERE_NODES};
use serde::Deserialize;
use surface_lab::{
    graph_coeff_c1, horizontal_data, normalize_at_point, pde_residual, GraphSurface, Poly3, QuadricSpec, SurfaceSpec,
};

use crate::error::CliError;

pub enum Input {
    Curve(CurveSpec),
    Circle { radius: f64 },
    Surface(SurfaceSpec),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CircleSpec {
    #[allow(dead_code)]
    r#type: String,
    radius: f64,
}

pub fn load(path: &Path) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// Objects with a `"type"` field are surfaces, except `lifted-circle`;
/// everything else is a curve spec.
pub fn parse(text: &str) -> Result<Input, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    match value.get("type").and_then(|t| t.as_str()) {
        Some("lifted-circle") => {
            let c: CircleSpec = serde_json::from_value(value).map_err(|e| CliError::Input(e.to_string()))?;
            if !(c.radius > 0.0 && c.radius.is_finite()) {
                return Err(CliError::Input(format!("radius must be positive, got {}", c.radius)));
            }
            Ok(Input::Circle { radius: c.radius })
        }
        Some(_) => SurfaceSpec::from_json(text).map(Input::Surface).map_err(|e| CliError::Input(e.to_string())),
        None => CurveSpec::from_json(text).map(Input::Curve).map_err(|e| CliError::Input(e.to_string())),
    }
}

fn parse_coords(s: &str) -> Result<Vec<f64>, CliError> {
    s.split(',')
        .map(|p| {
            let v: f64 = p.trim().parse().map_err(|_| CliError::Input(format!("bad center coordinate {p:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::Input(format!("bad center coordinate {p:?}")))
            }
        })
        .collect()
}

/// A prepared measurement: the measure as a function of `r`, its scaling
/// degree, and the closed-form expansion coefficients where known.
pub struct Case {
    pub kind: &'static str,
    /// `mu(B(x, r)) ~ r^degree`
    pub degree: u8,
    /// Exponents for `expand`, leading term first.
    pub exponents: Vec<f64>,
    /// Closed-form coefficient per exponent, where one is available.
    pub predicted: Vec<Option<f64>>,
    measure: Box<dyn Fn(f64) -> Result<MeasureSample, MeasureError> + Sync>,
}

impl Case {
    pub fn measure(&self, r: f64) -> Result<MeasureSample, MeasureError> {
        (self.measure)(r)
    }

    pub fn predicted_limit(&self) -> Option<f64> {
        self.predicted.first().copied().flatten()
    }
}

pub fn prepare(input: Input, center: Option<&str>, tol: Option<f64>) -> Result<Case, CliError> {
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Input(format!("tolerance must be positive, got {t}")));
        }
    }
    match input {
        Input::Curve(spec) => {
            let s0 = curve_center(center)?;
            curve_case(&spec, s0, tol.unwrap_or(CURVE_QUAD_TOL))
        }
        Input::Circle { radius } => {
            let s0 = curve_center(center)?;
            circle_case(radius, s0, tol.unwrap_or(CURVE_QUAD_TOL))
        }
        Input::Surface(spec) => surface_case(spec, center, tol),
    }
}

fn curve_center(center: Option<&str>) -> Result<f64, CliError> {
    match center {
        None => Ok(0.0),
        Some(c) => match parse_coords(c)?.as_slice() {
            [s] => Ok(*s),
            _ => Err(CliError::Input("a curve center is a single parameter value".into())),
        },
    }
}

/// `p(s0 + t)` as a jet in `t`.
fn shift(p: &Jet<Rational>, s0: &Rational, order: usize) -> Jet<Rational> {
    let mut d = p.clone();
    let mut fact = Rational::one();
    let mut out = Vec::with_capacity(order + 1);
    for k in 0..=order {
        if k > 0 {
            d = d.derive();
            fact = fact * Rational::from_i64(k as i64);
        }
        out.push(d.eval(s0) / fact.clone());
    }
    Jet::new(out, order)
}

/// Series coefficients of the measure; exact when the rational oracle
/// applies, floating point otherwise.
fn series(jet: &CurveJet<Rational>) -> Result<Vec<f64>, CliError> {
    match measure_series(jet) {
        Ok(m) => Ok(m.coeffs().iter().map(|c| c.to_f64()).collect()),
        Err(_) => Ok(measure_series(&jet.to_f64())?.coeffs().to_vec()),
    }
}

fn nonzero_terms(coeffs: &[f64]) -> (Vec<f64>, Vec<Option<f64>>) {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.abs() > 1e-12 * scale)
        .map(|(k, c)| (k as f64, Some(*c)))
        .unzip()
}

fn curve_case(spec: &CurveSpec, s0: f64, tol: f64) -> Result<Case, CliError> {
    let exact = spec.jet(spec.degree().max(DEFAULT_ORDER))?;
    let s = Rational::from_float(s0).ok_or_else(|| CliError::Input("non-finite center".into()))?;
    let x1 = shift(&exact.planar.x1, &s, DEFAULT_ORDER);
    let x2 = shift(&exact.planar.x2, &s, DEFAULT_ORDER);
    let x3 = shift(&exact.x3, &s, DEFAULT_ORDER);
    let horizontal = exact.contact_jet().coeffs().iter().all(|c| c.is_zero());
    let jet = CurveJet::new(PlanarJet::new(x1, x2)?, x3)?;
    let theta = jet.contact_jet();
    let curve = spec.poly_curve()?;
    let (kind, degree, exponents, predicted) = if horizontal {
        let (e, p) = nonzero_terms(&series(&jet)?);
        ("horizontal-curve", 1, e, p)
    } else if theta.coeffs()[0].is_zero() {
        // horizontal point of a nonhorizontal curve: only the density is known
        let (a, b) = jet.planar.derivative(1)?;
        let speed = (a.clone() * a + b.clone() * b).to_f64().sqrt();
        let lead = horizontal_point_density(speed, theta.coeffs()[1].to_f64())?;
        ("horizontal-point", 2, (2..8).map(f64::from).collect(), std::iter::once(Some(lead)).chain([None; 5]).collect())
    } else {
        let (e, p) = nonzero_terms(&series(&jet)?);
        ("nonhorizontal-curve", 2, e, p)
    };
    Ok(Case {
        kind,
        degree,
        exponents,
        predicted,
        measure: Box::new(move |r| curve_ball_measure_tol(&curve, s0, r, degree, tol)),
    })
}

fn circle_case(radius: f64, s0: f64, tol: f64) -> Result<Case, CliError> {
    let r = Rational::from_float(radius).ok_or_else(|| CliError::Input("non-finite radius".into()))?;
    let jet = lifted_circle_jet(r, DEFAULT_ORDER)?;
    let (exponents, predicted) = nonzero_terms(&series(&jet)?);
    let curve = LiftedCircle { radius };
    Ok(Case {
        kind: "horizontal-curve",
        degree: 1,
        exponents,
        predicted,
        measure: Box::new(move |r| curve_ball_measure_tol(&curve as &dyn Curve, s0, r, 1, tol)),
    })
}

const MAX_SPHERE_NODES: usize = 16 * DEFAULT_SPHERE_NODES;

fn polar(nodes: usize) -> PolarQuadrature {
    PolarQuadrature::new(SphereQuadrature::new(nodes).expect("node count is a multiple of 4"), DEFAULT_RADIAL_NODES)
}

/// Runs `m` with the default node count, doubling while the error estimate
/// exceeds `tol * |value|`.
fn refine(m: impl Fn(&PolarQuadrature) -> Result<MeasureSample, MeasureError>, tol: Option<f64>) -> Result<MeasureSample, MeasureError> {
    let mut nodes = DEFAULT_SPHERE_NODES;
    loop {
        let s = m(&polar(nodes))?;
        match tol {
            Some(t) if s.error > t * s.value.abs() && nodes < MAX_SPHERE_NODES => nodes *= 2,
            _ => return Ok(s),
        }
    }
}

fn surface_exponents(predicted: Vec<Option<f64>>) -> (Vec<f64>, Vec<Option<f64>>) {
    let exps = vec![3.0, 5.0, 6.0, 7.0, 8.0];
    let mut p = predicted;
    p.resize(exps.len(), None);
    (exps, p)
}

fn graph_case(g: GraphSurface, c1: f64, tol: Option<f64>) -> Case {
    let (exponents, predicted) = surface_exponents(vec![Some(omega_h()), Some(beta1() * c1)]);
    Case {
        kind: "surface",
        degree: 3,
        exponents,
        predicted,
        measure: Box::new(move |r| refine(|q| surface_ball_measure(&g, r, q), tol)),
    }
}

fn surface_case(spec: SurfaceSpec, center: Option<&str>, tol: Option<f64>) -> Result<Case, CliError> {
    let (u, quadric, alpha): (Poly3, Option<QuadricSpec>, Option<f64>) = match spec {
        SurfaceSpec::Graph(g) => {
            if center.is_some() {
                return Err(CliError::Input("graph specs are centered at their base point".into()));
            }
            let c1 = graph_coeff_c1(&g)?;
            return Ok(graph_case(g, c1, tol));
        }
        SurfaceSpec::LevelPoly(u) => (u, None, None),
        SurfaceSpec::Quadric(q) => (q.defining_function(), Some(q), None),
        SurfaceSpec::Paraboloid { alpha } => {
            let q = QuadricSpec::paraboloid(alpha);
            (q.defining_function(), Some(q), Some(alpha))
        }
    };
    let coords = match center {
        None => vec![0.0, 0.0, 0.0],
        Some(c) => parse_coords(c)?,
    };
    let x = match (coords.as_slice(), &quadric) {
        ([x1, x2, x3], _) => HPoint::new(*x1, *x2, *x3),
        ([x1, x2], Some(q)) => HPoint::new(*x1, *x2, q.height([*x1, *x2])),
        _ => return Err(CliError::Input("surface center is x1,x2,x3 (x1,x2 for quadrics)".into())),
    };
    let off = u.value([x.x1, x.x2, x.x3]);
    if off.abs() > 1e-10 * (1.0 + x.x3.abs()) {
        return Err(CliError::Input(format!("center is not on the surface (u = {off:e})")));
    }
    let hd = horizontal_data(&u, x)?;
    if !hd.is_characteristic {
        let c1 = pde_residual(&u, x)?;
        let g = normalize_at_point(&u, x)?;
        return Ok(graph_case(g, c1, tol));
    }
    let Some(q) = quadric else {
        return Err(surface_lab::SurfaceError::Characteristic(hd.grad0_norm).into());
    };
    // characteristic point: the density r^-3 mu(B) tends to (4 pi / 3) sqrt(cos alpha) at the paraboloid vertex
    let lead = alpha.filter(|_| x.x1 == 0.0 && x.x2 == 0.0).map(|a| 4.0 * PI / 3.0 * a.cos().abs().sqrt());
    let mut predicted = vec![lead];
    predicted.resize(5, None);
    let cz = [x.x1, x.x2];
    Ok(Case {
        kind: "characteristic-point",
        degree: 3,
        exponents: vec![3.0, 4.0, 5.0, 6.0, 7.0],
        predicted,
        measure: Box::new(move |r| {
            let f = |z: [f64; 2]| {
                let [[a, b], [_, d]] = q.s;
                (q.height(z), [2.0 * (a * z[0] + b * z[1]), 2.0 * (b * z[0] + d * z[1])])
            };
            refine(|p| x3_graph_ball_measure(&f, cz, r, p.sphere.nodes.len(), p), tol)
        }),
    })
}
