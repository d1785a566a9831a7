//! JSON surface specs.

use heis_core::HPoint;
use serde::Deserialize;

use crate::error::SurfaceError;
use crate::graph::GraphSurface;
use crate::poly::{Bipoly, Poly3};
use crate::quadric::QuadricSpec;

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
enum Raw {
    LevelPoly {
        u: Vec<[f64; 4]>,
    },
    Quadric {
        #[serde(rename = "S")]
        s: [[f64; 2]; 2],
    },
    Paraboloid {
        alpha: f64,
    },
    Graph {
        phi: Vec<[f64; 3]>,
        #[serde(default)]
        base: Option<[f64; 3]>,
        #[serde(default)]
        theta: Option<f64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceSpec {
    LevelPoly(Poly3),
    Quadric(QuadricSpec),
    Paraboloid { alpha: f64 },
    Graph(GraphSurface),
}

fn exponent(v: f64) -> Result<u32, SurfaceError> {
    if v >= 0.0 && v.fract() == 0.0 && v <= 64.0 {
        Ok(v as u32)
    } else {
        Err(SurfaceError::Spec(format!("exponent {v} is not a small nonnegative integer")))
    }
}

impl SurfaceSpec {
    pub fn from_json(text: &str) -> Result<Self, SurfaceError> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| SurfaceError::Spec(e.to_string()))?;
        let finite = |v: f64| if v.is_finite() { Ok(v) } else { Err(SurfaceError::Spec("non-finite number".into())) };
        Ok(match raw {
            Raw::LevelPoly { u } => {
                let mut terms = vec![];
                for [i, j, k, c] in u {
                    terms.push(([exponent(i)?, exponent(j)?, exponent(k)?], finite(c)?));
                }
                let p = Poly3::new(&terms);
                if p.degree() == 0 {
                    return Err(SurfaceError::Spec("defining function is constant".into()));
                }
                SurfaceSpec::LevelPoly(p)
            }
            Raw::Quadric { s } => {
                s.iter().flatten().try_for_each(|v| finite(*v).map(|_| ()))?;
                SurfaceSpec::Quadric(QuadricSpec::new(s)?)
            }
            Raw::Paraboloid { alpha } => {
                let alpha = finite(alpha)?;
                if alpha.cos().abs() < 1e-12 {
                    return Err(SurfaceError::Spec("alpha must not be an odd multiple of pi/2".into()));
                }
                SurfaceSpec::Paraboloid { alpha }
            }
            Raw::Graph { phi, base, theta } => {
                let mut terms = vec![];
                for [i, j, c] in phi {
                    terms.push(([exponent(i)?, exponent(j)?], finite(c)?));
                }
                let b = base.unwrap_or([0.0; 3]);
                b.iter().try_for_each(|v| finite(*v).map(|_| ()))?;
                let g = GraphSurface::with_placement(Bipoly::new(&terms), HPoint::from_array(b), finite(theta.unwrap_or(0.0))?);
                g.check_normalized()?;
                SurfaceSpec::Graph(g)
            }
        })
    }

    /// Defining function, for every variant but `Graph`.
    pub fn defining_function(&self) -> Option<Poly3> {
        match self {
            SurfaceSpec::LevelPoly(p) => Some(p.clone()),
            SurfaceSpec::Quadric(q) => Some(q.defining_function()),
            SurfaceSpec::Paraboloid { alpha } => Some(QuadricSpec::paraboloid(*alpha).defining_function()),
            SurfaceSpec::Graph(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_variants() {
        let s = SurfaceSpec::from_json(r#"{"type":"level-poly","u":[[1,0,0,1.0]]}"#).unwrap();
        assert_eq!(s.defining_function().unwrap(), Poly3::new(&[([1, 0, 0], 1.0)]));
        let s = SurfaceSpec::from_json(r#"{"type":"quadric","S":[[1,0.5],[0.5,2]]}"#).unwrap();
        assert!(matches!(s, SurfaceSpec::Quadric(_)));
        let s = SurfaceSpec::from_json(r#"{"type":"paraboloid","alpha":0.9553}"#).unwrap();
        assert_eq!(s, SurfaceSpec::Paraboloid { alpha: 0.9553 });
        let s = SurfaceSpec::from_json(r#"{"type":"graph","phi":[[2,0,0.5],[0,1,-1]]}"#).unwrap();
        let SurfaceSpec::Graph(g) = s else { panic!() };
        assert_eq!(g.phi.coeff(2, 0), 0.5);
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in [
            r#"{"type":"quadric","S":[[1,0.5],[0.4,2]]}"#,
            r#"{"type":"graph","phi":[[1,0,1.0]]}"#,
            r#"{"type":"level-poly","u":[[0.5,0,0,1.0]]}"#,
            r#"{"type":"level-poly","u":[[0,0,0,1.0]]}"#,
            r#"{"type":"sphere"}"#,
            "not json",
        ] {
            assert!(SurfaceSpec::from_json(bad).is_err(), "{bad}");
        }
    }
}
