use curve_lab::spec::{Curve, LiftedCircle, PolyCurve, Transformed};
use curve_lab::{horizontal_point_density, measure_series, vertical_completion, CurveJet, PlanarJet};
use heis_core::{corner_distance_quartic, koranyi_dist, HPoint};
use jet_algebra::{rat, Jet, Rational, Scalar};
use koranyi_calculus::{monomial_ball_integral, omega_h};
use measure_engine::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surface_lab::*;

fn random_phi(rng: &mut ChaCha8Rng) -> Bipoly {
    let mut t = vec![([0, 1], rng.gen_range(-1.0..1.0))];
    for e in [[2, 0], [1, 1], [0, 2], [3, 0], [2, 1], [1, 2], [0, 3]] {
        t.push((e, rng.gen_range(-1.0..1.0)));
    }
    Bipoly::new(&t)
}

fn line(v: [f64; 3]) -> PolyCurve {
    PolyCurve::new(Jet::from_coeffs(vec![0.0, v[0]]), Jet::from_coeffs(vec![0.0, v[1]]), Jet::from_coeffs(vec![0.0, v[2]]))
}

/// Surface ladder: `r_k = 0.1 * 0.75^k`, fitted with exponents 3, 5, 6, 7, 8.
fn surface_fit(g: &GraphSurface) -> LadderFit {
    let q = PolarQuadrature::default();
    let ladder = RadiusLadder::new(0.1, 8, 0.75).unwrap();
    fit_on_ladder(|r| surface_ball_measure(g, r, &q), ladder, &[3.0, 5.0, 6.0, 7.0, 8.0], 0).unwrap()
}

#[test]
fn beta1_from_monomial_integrals() {
    // 2(a11^2 - a12) int eta1^2 - (9/2) a2^2 int eta1^2 eta2^2 - (9/2) a11^2 int eta1^6
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let (a11, a12, a2): (f64, f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let combo = 2.0 * (a11 * a11 - a12) * monomial_ball_integral(1, 0)
            - 4.5 * a2 * a2 * monomial_ball_integral(1, 1)
            - 4.5 * a11 * a11 * monomial_ball_integral(3, 0);
        let c1 = (2.0 * a11).powi(2) - 16.0 * a12 - 8.0 * a2 * a2;
        assert!((combo - beta1() * c1).abs() < 1e-13);
    }
}

#[test]
fn random_graph_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..4 {
        let g = GraphSurface::new(random_phi(&mut rng));
        let f = surface_fit(&g);
        let want = beta1() * graph_coeff_c1(&g).unwrap();
        assert!((f.fit.coefficients[0] / omega_h() - 1.0).abs() < 1e-3);
        assert!((f.fit.coefficients[1] / want - 1.0).abs() < 0.02, "{} vs {want}", f.fit.coefficients[1]);
    }
}

#[test]
fn rho0_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let phi = random_phi(&mut rng);
    let g = GraphSurface::new(phi.clone());
    let (a2, a11, a12, a111) = (phi.coeff(0, 1), phi.coeff(2, 0), phi.coeff(1, 1), phi.coeff(3, 0));
    let xi = [0.8f64, (1.0 - 0.8f64.powi(4)).sqrt()];
    let b2 = a11 * xi[0] * xi[0] + a2 * xi[1];
    let b3 = a12 * xi[0] * xi[1] + a111 * xi[0].powi(3);
    let mut prev = f64::INFINITY;
    for k in 0..5 {
        let r = 0.05 * 0.5f64.powi(k);
        let rho = rho0_solve(&g, xi, r).unwrap();
        assert!(rho <= r);
        let series = r - 0.5 * xi[0] * xi[0] * b2 * b2 * r.powi(3) - xi[0] * xi[0] * b2 * b3 * r.powi(4);
        let scaled = (rho - series).abs() / r.powi(5);
        assert!(scaled < 10.0);
        if k > 1 {
            assert!(scaled < 2.0 * prev);
        }
        prev = scaled;
    }
}

#[test]
fn quadric_two_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let q = PolarQuadrature::default();
    for _ in 0..5 {
        let s = QuadricSpec::rotated_diagonal(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.0..3.2));
        let z = [rng.gen_range(0.3..1.0), rng.gen_range(0.3..1.0)];
        let x = HPoint::new(z[0], z[1], s.height(z));
        let g = normalize_at_point(&s.defining_function(), x).unwrap();
        let m = s.s;
        let f = move |z: [f64; 2]| {
            let sz = [m[0][0] * z[0] + m[0][1] * z[1], m[1][0] * z[0] + m[1][1] * z[1]];
            (z[0] * sz[0] + z[1] * sz[1], [2.0 * sz[0], 2.0 * sz[1]])
        };
        for r in [0.05, 0.1] {
            let a = surface_ball_measure(&g, r, &q).unwrap().value;
            // away from characteristic points the z-plane section is a thin
            // sliver, so the angular rule needs many more nodes
            let b = x3_graph_ball_measure(&f, z, r, 16384, &q).unwrap().value;
            assert!((a - b).abs() < 1e-9 * a, "{a} vs {b}");
        }
    }
}

#[test]
fn surface_measure_is_isometry_invariant_and_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let q = PolarQuadrature::default();
    let s = QuadricSpec::rotated_diagonal(0.7, -0.4, 0.3);
    let u = s.defining_function();
    let z = [0.6, -0.4];
    let x = HPoint::new(z[0], z[1], s.height(z));
    let iso = Isometry::new(HPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), 1.3);
    let a = normalize_at_point(&u, x).unwrap();
    let b = normalize_at_point(&iso.push_forward(&u), iso.apply(x)).unwrap();
    let mut prev = 0.0;
    for r in [0.02, 0.05, 0.1, 0.15] {
        let ma = surface_ball_measure(&a, r, &q).unwrap().value;
        let mb = surface_ball_measure(&b, r, &q).unwrap().value;
        assert!((ma - mb).abs() < 1e-10 * ma);
        assert!(ma > prev);
        prev = ma;
    }
}

#[test]
fn curve_measure_invariance_and_monotonicity() {
    let c = LiftedCircle { radius: 0.8 };
    let t = Transformed { inner: c, translate: HPoint::new(0.3, -1.1, 2.0), theta: 2.2 };
    let mut prev = 0.0;
    for r in [0.01, 0.05, 0.1, 0.2] {
        let a = curve_ball_measure(&c, 0.0, r, 1).unwrap().value;
        let b = curve_ball_measure(&t, 0.0, r, 1).unwrap().value;
        assert!((a - b).abs() < 1e-11);
        assert!(a > prev);
        prev = a;
    }
}

#[test]
fn lifted_circle_fit() {
    let c = LiftedCircle { radius: 1.0 };
    let f = fit_on_ladder(|r| curve_ball_measure(&c, 0.0, r, 1), RadiusLadder::new(0.2, 8, 0.75).unwrap(), &[1.0, 3.0, 5.0], 2).unwrap();
    assert!((f.fit.coefficients[0] - 2.0).abs() < 1e-8);
    assert!((f.fit.coefficients[1] * 36.0 - 1.0).abs() < 0.01);
}

#[test]
fn vertical_line_fit() {
    let c = line([0.0, 0.0, 1.0]);
    let f = fit_on_ladder(|r| curve_ball_measure(&c, 0.0, r, 2), RadiusLadder::default(), &[2.0, 6.0, 10.0], 0).unwrap();
    assert!((f.fit.coefficients[0] - 2.0).abs() < 1e-10);
    assert!(f.fit.coefficients[1].abs() < 1e-6 && f.fit.coefficients[2].abs() < 1e-2);
}

#[test]
fn homogeneous_curves_follow_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..3 {
        let mut co = |n: usize| -> Vec<Rational> {
            let mut v = vec![rat(0, 1)];
            for _ in 0..n {
                v.push(rat(rng.gen_range(-6..7), rng.gen_range(2..6)));
            }
            v
        };
        let (x1, x2) = (co(3), co(3));
        let planar = PlanarJet::new(Jet::new(x1, 8), Jet::new(x2, 8)).unwrap();
        let jet: CurveJet<Rational> = vertical_completion(&planar, rat(0, 1));
        let series = measure_series(&jet).unwrap();
        let b = |k: usize| series.coeff(k).unwrap().to_f64();
        let curve = PolyCurve::from_jet(&jet.to_f64());
        let mut prev = f64::INFINITY;
        for k in 0..8 {
            let r = 0.2 * 0.8f64.powi(k);
            let m = curve_ball_measure(&curve, 0.0, r, 2).unwrap();
            let err = (m.value - (b(2) * r * r + b(6) * r.powi(6) + b(10) * r.powi(10))).abs() / r.powi(10);
            assert!(err < 0.6 * prev, "r = {r}: {err} after {prev}");
            prev = err;
        }
    }
}

#[test]
fn density_limits() {
    let ladder = RadiusLadder::new(0.1, 6, 0.5).unwrap();
    let measure = |c: &dyn Curve, deg: u8| -> Vec<MeasureSample> { ladder.radii().iter().map(|&r| curve_ball_measure(c, 0.0, r, deg).unwrap()).collect() };
    let l1 = density_ratio(&measure(&LiftedCircle { radius: 1.0 }, 1), 1.0).unwrap().limit;
    let l2 = density_ratio(&measure(&line([1.0, 0.5, 1.0]), 2), 2.0).unwrap().limit;
    let hp = PolyCurve::new(Jet::from_coeffs(vec![0.0, 1.0]), Jet::from_coeffs(vec![0.0]), Jet::from_coeffs(vec![0.0, 0.0, 1.0]));
    let l3 = density_ratio(&measure(&hp, 2), 2.0).unwrap().limit;
    assert!((l1 - 2.0).abs() < 1e-6);
    assert!((l2 - 2.0).abs() < 1e-6);
    assert!((l3 - horizontal_point_density(1.0, 2.0).unwrap()).abs() < 1e-6);
    assert!((l3 - 2f64.sqrt()).abs() < 1e-6);
}

#[test]
fn no_corners() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let p = HPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let (d1, d2) = (rng.gen_range(0.01..3.0), rng.gen_range(0.01..3.0));
        let phi = rng.gen_range(0.0..6.3);
        let theta = rng.gen_range(0.01..std::f64::consts::PI);
        // canonical pair (-d1, 0, 0), (d2 cos theta, d2 sin theta, 0), rotated by phi
        let y = p * HPoint::new(-d1 * f64::cos(phi), -d1 * f64::sin(phi), 0.0);
        let z = p * HPoint::new(d2 * f64::cos(phi + theta), d2 * f64::sin(phi + theta), 0.0);
        let d = koranyi_dist(y, z);
        assert!(d < d1 + d2);
        assert!((d.powi(4) - corner_distance_quartic(d1, d2, theta)).abs() < 1e-10 * (d1 + d2).powi(4));
    }
}
