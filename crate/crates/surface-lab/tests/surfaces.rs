use heis_core::HPoint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surface_lab::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / (1.0 + b.abs())
}

fn paraboloid(alpha: f64) -> Poly3 {
    QuadricSpec::paraboloid(alpha).defining_function()
}

fn random_cubic(rng: &mut ChaCha8Rng) -> Poly3 {
    let mut terms = vec![([1, 0, 0], 1.0), ([0, 0, 1], rng.gen_range(-1.0..1.0))];
    for _ in 0..8 {
        let e = [rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..2)];
        terms.push((e, rng.gen_range(-1.0..1.0)));
    }
    Poly3::new(&terms)
}

/// `phi` with `phi(0) = phi_1(0) = 0`, quadratic and cubic terms.
fn random_phi(rng: &mut ChaCha8Rng) -> Bipoly {
    let mut t = vec![([0, 1], rng.gen_range(-1.0..1.0))];
    for e in [[2, 0], [1, 1], [0, 2], [3, 0], [2, 1], [1, 2], [0, 3]] {
        t.push((e, rng.gen_range(-1.0..1.0)));
    }
    Bipoly::new(&t)
}

/// `x1 - phi(x2, x3)`.
fn graph_field(phi: &Bipoly) -> Poly3 {
    let mut t = vec![([1, 0, 0], 1.0)];
    for (e, c) in phi.terms() {
        t.push(([0, e[0], e[1]], -c));
    }
    Poly3::new(&t)
}

#[test]
fn paraboloid_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let alpha = rng.gen_range(0.05..1.5);
        let u = paraboloid(alpha);
        let z = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        let x = HPoint::new(z[0], z[1], alpha.tan() * (z[0] * z[0] + z[1] * z[1]));
        let r2 = z[0] * z[0] + z[1] * z[1];
        let c = curvatures(&u, x).unwrap();
        let (s, co) = alpha.sin_cos();
        assert!(rel(c.h0, s / r2.sqrt()) < 1e-10);
        assert!(rel(c.p0, -2.0 * co / r2.sqrt()) < 1e-10);
        assert!(rel(c.e1_p0, -2.0 * co * co / r2) < 1e-10);
        assert!(rel(c.pde_residual(), (s * s - 2.0 * co * co) / r2) < 1e-10);
    }
}

#[test]
fn paraboloid_flat_only_for_tan_squared_two() {
    let u = paraboloid(2f64.sqrt().atan());
    let x = HPoint::new(0.4, -0.7, 2f64.sqrt() * 0.65);
    assert!(pde_residual(&u, x).unwrap().abs() < 1e-12);
    for alpha in [0.3, 0.9, 1.2] {
        assert!(pde_residual(&paraboloid(alpha), HPoint::new(0.4, -0.7, alpha.tan() * 0.65)).unwrap().abs() > 1e-3);
    }
    let hd = horizontal_data(&paraboloid(0.7), HPoint::ORIGIN).unwrap();
    assert!(hd.is_characteristic);
    assert!(matches!(curvatures(&paraboloid(0.7), HPoint::ORIGIN), Err(SurfaceError::Characteristic(_))));
}

#[test]
fn sign_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let u = random_cubic(&mut rng);
        let x = HPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let (Ok(a), Ok(b)) = (curvatures(&u, x), curvatures(&u.scale(-1.0), x)) else { continue };
        assert!(rel(a.h0 * a.h0, b.h0 * b.h0) < 1e-12);
        assert!(rel(a.p0 * a.p0, b.p0 * b.p0) < 1e-12);
        assert!(rel(a.e1_p0, b.e1_p0) < 1e-12);
        assert!(rel(a.pde_residual(), b.pde_residual()) < 1e-12);
    }
}

#[test]
fn isometry_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for _ in 0..60 {
        let u = random_cubic(&mut rng);
        let x = HPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let iso = Isometry::new(HPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)), rng.gen_range(-3.0..3.0));
        let Ok(a) = curvatures(&u, x) else { continue };
        let b = curvatures(&iso.push_forward(&u), iso.apply(x)).unwrap();
        assert!(rel(a.h0, b.h0) < 1e-9, "{a:?} {b:?}");
        assert!(rel(a.p0, b.p0) < 1e-9);
        assert!(rel(a.e1_p0, b.e1_p0) < 1e-9);
        checked += 1;
    }
    assert!(checked > 40);
}

#[test]
fn graph_identifications() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..30 {
        let phi = random_phi(&mut rng);
        let g = GraphSurface::new(phi.clone());
        let c = curvatures(&graph_field(&phi), HPoint::ORIGIN).unwrap();
        let (p2, p11, p12) = g.second_order_data();
        assert!(rel(p2, -0.25 * c.p0) < 1e-12);
        assert!(rel(p11, -c.h0) < 1e-12);
        assert!(rel(p12, -0.25 * c.e1_p0 - 0.125 * c.p0 * c.p0) < 1e-12);
        assert!(rel(graph_coeff_c1(&g).unwrap(), c.pde_residual()) < 1e-12);
    }
}

#[test]
fn normalization_recovers_a_moved_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let phi = random_phi(&mut rng);
        let iso = Isometry::new(HPoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), rng.gen_range(-3.0..3.0));
        let u = iso.push_forward(&graph_field(&phi));
        let g = normalize_at_point(&u, iso.apply(HPoint::ORIGIN)).unwrap();
        let dtheta = (g.theta - iso.theta).rem_euclid(2.0 * std::f64::consts::PI);
        assert!(dtheta.min(2.0 * std::f64::consts::PI - dtheta) < 1e-12);
        for i in 0..=4 {
            for j in 0..=4 - i {
                assert!((g.phi.coeff(i, j) - phi.coeff(i, j)).abs() < 1e-10, "({i},{j})");
            }
        }
    }
}

#[test]
fn normalized_c1_matches_level_residual_on_quadrics() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..40 {
        let q = QuadricSpec::rotated_diagonal(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(0.0..3.2));
        let u = q.defining_function();
        let z = [rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)];
        let x = HPoint::new(z[0], z[1], q.height(z));
        let Ok(res) = pde_residual(&u, x) else { continue };
        let g = normalize_at_point(&u, x).unwrap();
        let hd = horizontal_data(&u, x).unwrap();
        assert!((g.theta.cos() - hd.n0[0]).abs() < 1e-14 && (g.theta.sin() - hd.n0[1]).abs() < 1e-14);
        let c1 = graph_coeff_c1(&g).unwrap();
        assert!((c1 - res).abs() <= 1e-8 * res.abs().max(1e-3), "{c1} vs {res}");
    }
}

#[test]
fn stencil_matches_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let q = QuadricSpec::rotated_diagonal(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.0..3.2));
        let p = q.defining_function();
        let z = [rng.gen_range(0.5..1.0), rng.gen_range(0.5..1.0)];
        let x = HPoint::new(z[0], z[1], q.height(z));
        let pp = p.clone();
        let closed = ClosedField {
            value: Box::new(move |y| pp.value(y)),
            gradient: Box::new({
                let p = p.clone();
                move |y| p.gradient(y)
            }),
            hessian: Box::new({
                let p = p.clone();
                move |y| p.hessian(y)
            }),
        };
        let a = normalize_at_point(&p, x).unwrap();
        let b = normalize_by_stencil(&closed, x, DEFAULT_STENCIL_STEP).unwrap();
        let (sa, sb) = (a.second_order_data(), b.second_order_data());
        assert!((sa.0 - sb.0).abs() < 1e-6 && (sa.1 - sb.1).abs() < 1e-6 && (sa.2 - sb.2).abs() < 1e-6, "{sa:?} {sb:?}");
        assert!((graph_coeff_c1(&a).unwrap() - graph_coeff_c1(&b).unwrap()).abs() < 1e-5);
    }
}

#[test]
fn quadric_residual_is_m() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let q = QuadricSpec::rotated_diagonal(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(0.0..3.2));
        let z = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        let x = HPoint::new(z[0], z[1], q.height(z));
        let res = pde_residual(&q.defining_function(), x).unwrap();
        let m = quadric_m(&q, z).unwrap();
        assert!((res - m).abs() < 1e-9 * (1.0 + m.abs()), "{res} vs {m}");
    }
}

#[test]
fn quadric_m_rotation_covariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let (l1, l2, phi) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.0..6.3));
        let s = QuadricSpec::rotated_diagonal(l1, l2, phi);
        let z = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        let (sn, cs) = f64::sin_cos(phi);
        let qz = [cs * z[0] - sn * z[1], sn * z[0] + cs * z[1]];
        let a = quadric_m(&s, z).unwrap();
        let b = quadric_m(&QuadricSpec::diagonal(l1, l2), qz).unwrap();
        assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
    }
}

#[test]
fn flat_test_coefficients_expand_the_cleared_expression() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let dot = |a: [f64; 2], b: [f64; 2]| a[0] * b[0] + a[1] * b[1];
    for _ in 0..50 {
        let (l1, l2) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let t = quadric_flat_test(l1, l2);
        let z = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        let a = l2 * z[1] + z[0];
        let b = l1 * z[0] - z[1];
        // w = (L - J) z, J v = (v2, -v1)
        let w = [b, a];
        let jw = [w[1], -w[0]];
        let lam = |v: [f64; 2]| [l1 * v[0], l2 * v[1]];
        let n2 = dot(w, w);
        let lhs = dot(lam(jw), jw).powi(2) - 2.0 * n2 * n2 - 8.0 * n2 * dot(lam(w), jw);
        let [c0, c1, c2, c3] = t.coefficients;
        let rhs = c0 * a.powi(4) + c1 * b.powi(4) + c2 * a * a * b * b + c3 * a * b * (a * a + b * b);
        assert!((lhs - rhs).abs() < 1e-9 * (1.0 + lhs.abs()), "{lhs} vs {rhs}");
    }
}

#[test]
fn flat_test_collapsed_coefficient() {
    for l1 in [0.3, 1.0, -2.5, 4.0] {
        let l2 = -1.0 / l1;
        let t = quadric_flat_test(l1, l2);
        let literal = l1 * l1 - 2.0 + l1.powi(4) * (l2 * l2 - 2.0) - 6.0 * l1 * l1 + 8.0 * (l2 - l1) * l1 * (1.0 + l1 * l1);
        let c = t.collapsed.unwrap();
        assert!((c - literal).abs() < 1e-10 * literal.abs());
        assert_eq!(c, -10.0 * (1.0 + l1 * l1).powi(2));
        assert!(!t.vanishes_identically);
    }
}

proptest! {
    #[test]
    fn diagonal_flat_iff_lambda_squared_two(l in -3.0..3.0f64) {
        let t = quadric_flat_test(l, l);
        prop_assert_eq!(t.vanishes_identically, (l * l - 2.0).abs() <= FLAT_TOL * (1.0 + l * l));
    }

    #[test]
    fn sqrt_two_is_flat(sign in prop::bool::ANY) {
        let l = if sign { 2f64.sqrt() } else { -(2f64.sqrt()) };
        prop_assert!(quadric_flat_test(l, l).vanishes_identically);
    }
}
