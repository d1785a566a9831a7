//! Invariant suites behind `heis verify`.

use curve_lab::spec::LiftedCircle;
use curve_lab::{
    coeff_a1, coeff_b3_literal, eqn_b1, eqn_b2, eval_wpoly, horizontal_lift, measure_series, vertical_completion, CurveJet, PlanarJet,
};
use heis_core::{corner_distance_quartic, dilate, frame_decompose, group_inv, group_mul, koranyi_dist, rotate, HPoint};
use jet_algebra::{rat, solve_norm_equation, Branch, Jet, Rational};
use koranyi_calculus::{
    ball_integral, gamma_fn, monomial_ball_integral, omega_h, polar_identity_check, SphereQuadrature,
};
use measure_engine::curve_ball_measure;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use surface_lab::{
    graph_coeff_c1, normalize_at_point, pde_residual, quadric_flat_test, quadric_m, QuadricSpec,
};

use crate::config::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Invariant {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Group {
    pub name: String,
    pub status: Status,
    pub invariants: Vec<Invariant>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub groups: Vec<Group>,
    pub failed_groups: usize,
}

/// Exit codes above this are reserved.
pub const MAX_EXIT: usize = 100;

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.failed_groups.min(MAX_EXIT) as i32
    }
}

/// Optional mutation of the eqnB2 constants.
#[derive(Debug, Clone, Copy, Default)]
pub struct Mutation {
    pub b2_numerator: i64,
}

struct Checks(Vec<Invariant>);

impl Checks {
    fn check(&mut self, name: &str, ok: bool, detail: String) {
        self.0.push(Invariant { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail });
    }

    /// Records the worst value of `err` over the cases against `tol`.
    fn worst(&mut self, name: &str, tol: f64, errs: impl IntoIterator<Item = f64>) {
        let w = errs.into_iter().fold(0.0f64, |m, e| if e.is_nan() || m.is_nan() { f64::NAN } else { m.max(e) });
        self.check(name, w <= tol, format!("max error {w:e} (tolerance {tol:e})"));
    }

    fn count(&mut self, name: &str, failures: usize, total: usize) {
        self.check(name, failures == 0, format!("{failures} of {total} cases failed"));
    }
}

pub fn run(suite: Suite, seed: u64, mutation: Mutation) -> Report {
    let groups: Vec<Group> = suite
        .expand()
        .into_iter()
        .map(|s| {
            // each group draws from its own stream so groups are independent of one another
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (s as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut c = Checks(vec![]);
            match s {
                Suite::Frame => frame(&mut c, &mut rng),
                Suite::Jets => jets(&mut c, &mut rng),
                Suite::Curves => curves(&mut c, &mut rng, mutation),
                Suite::Surfaces => surfaces(&mut c, &mut rng),
                Suite::Integrals => integrals(&mut c),
                Suite::All => unreachable!("expanded above"),
            }
            let status = if c.0.iter().all(|i| i.status == Status::Pass) { Status::Pass } else { Status::Fail };
            Group { name: s.name().into(), status, invariants: c.0 }
        })
        .collect();
    let failed_groups = groups.iter().filter(|g| g.status == Status::Fail).count();
    Report { suite: suite.name().into(), seed, groups, failed_groups }
}

fn pt(rng: &mut ChaCha8Rng) -> HPoint {
    HPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

fn dist3(a: HPoint, b: HPoint) -> f64 {
    (a.x1 - b.x1).abs().max((a.x2 - b.x2).abs()).max((a.x3 - b.x3).abs())
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn frame(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let n = 200;
    let trip: Vec<_> = (0..n).map(|_| (pt(rng), pt(rng), pt(rng))).collect();
    c.worst("group-associativity", 1e-12, trip.iter().map(|&(p, q, r)| dist3(group_mul(group_mul(p, q), r), group_mul(p, group_mul(q, r)))));
    c.worst("group-inverse", 1e-12, trip.iter().map(|&(p, _, _)| dist3(group_mul(p, group_inv(p)), HPoint::ORIGIN)));
    c.worst("left-invariance", 1e-12, trip.iter().map(|&(a, p, q)| rel(koranyi_dist(group_mul(a, p), group_mul(a, q)), koranyi_dist(p, q))));
    c.worst(
        "rotation-invariance",
        1e-12,
        trip.iter().map(|&(a, p, q)| rel(koranyi_dist(rotate(p, a.x1), rotate(q, a.x1)), koranyi_dist(p, q))),
    );
    c.worst(
        "dilation-homogeneity",
        1e-12,
        trip.iter().map(|&(a, p, q)| {
            let t = a.x2.abs() + 0.1;
            match (dilate(p, t), dilate(q, t)) {
                (Ok(dp), Ok(dq)) => rel(koranyi_dist(dp, dq), t * koranyi_dist(p, q)),
                _ => f64::NAN,
            }
        }),
    );
    c.worst(
        "frame-is-horizontal",
        1e-12,
        trip.iter().flat_map(|&(p, _, _)| {
            let x1 = frame_decompose(p, [1.0, 0.0, 2.0 * p.x2]);
            let x2 = frame_decompose(p, [0.0, 1.0, -2.0 * p.x1]);
            [x1.c3.abs(), x2.c3.abs(), (x1.c1 - 1.0).abs(), (x2.c2 - 1.0).abs()]
        }),
    );
    let corners: Vec<(f64, f64, f64)> =
        (0..n).map(|_| (rng.gen_range(0.01..3.0), rng.gen_range(0.01..3.0), rng.gen_range(0.05..std::f64::consts::TAU - 0.05))).collect();
    c.worst(
        "corner-quartic",
        1e-12,
        corners.iter().map(|&(d1, d2, t)| {
            let d = koranyi_dist(HPoint::new(-d1, 0.0, 0.0), HPoint::new(d2 * t.cos(), d2 * t.sin(), 0.0));
            rel(d.powi(4), corner_distance_quartic(d1, d2, t))
        }),
    );
    let fails = corners
        .iter()
        .filter(|&&(d1, d2, t)| !(corner_distance_quartic(d1, d2, t).sqrt().sqrt() < d1 + d2))
        .count();
    c.count("no-corners", fails, corners.len());
}

fn rq(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=5))
}

fn random_jet(rng: &mut ChaCha8Rng, c0: Rational, order: usize) -> Jet<Rational> {
    let mut c = vec![c0];
    c.extend((0..order).map(|_| rq(rng)));
    Jet::new(c, order)
}

fn jets(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let order = 8;
    let (mut rev, mut rec, mut trig, mut norm, mut root) = (0, 0, 0, 0, 0);
    let n = 10;
    for _ in 0..n {
        let mut f = random_jet(rng, rat(0, 1), order);
        let mut v = f.coeffs().to_vec();
        v[1] = rat(rng.gen_range(1..=4), rng.gen_range(1..=3));
        f = Jet::new(v, order);
        let ok = f.reversion().and_then(|g| f.compose(&g)).map(|h| h == Jet::variable(order)).unwrap_or(false);
        rev += usize::from(!ok);

        let u0 = rat(rng.gen_range(1..=5), rng.gen_range(1..=3));
        let u = random_jet(rng, u0, order);
        let ok = u.recip().map(|w| &u * &w == Jet::constant(rat(1, 1), order)).unwrap_or(false);
        rec += usize::from(!ok);

        let ok = f
            .cos_sin()
            .map(|(co, si)| &(&co * &co) + &(&si * &si) == Jet::constant(rat(1, 1), order))
            .unwrap_or(false);
        trig += usize::from(!ok);

        // F = s^4 (1 + ...) solved for s(r) with F(s(r)) = r^4
        let g = random_jet(rng, rat(1, 1), order);
        let big = &Jet::monomial(rat(1, 1), 4, order + 4) * &g.with_order(order + 4);
        let ok = solve_norm_equation(&big, 4, Branch::Plus)
            .and_then(|s| big.with_order(s.order()).compose(&s))
            .map(|v| v == Jet::monomial(rat(1, 1), 4, v.order()))
            .unwrap_or(false);
        norm += usize::from(!ok);

        let sq = &u * &u;
        let ok = sq.sqrt().map(|w| w == u || w == -u.clone()).unwrap_or(false);
        root += usize::from(!ok);
    }
    c.count("reversion-inverts-composition", rev, n);
    c.count("reciprocal", rec, n);
    c.count("cos-sin-pythagoras", trig, n);
    c.count("norm-equation-roots", norm, n);
    c.count("exact-square-root", root, n);
}

/// Horizontal curve through the origin with rational unit velocity.
fn random_horizontal(rng: &mut ChaCha8Rng, order: usize) -> CurveJet<Rational> {
    const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (1, 0, 1)];
    let (a, b, h) = TRIPLES[rng.gen_range(0..4)];
    let mut x1 = vec![rat(0, 1), rat(a, h)];
    let mut x2 = vec![rat(0, 1), rat(b, h)];
    for _ in 2..=order {
        x1.push(rq(rng));
        x2.push(rq(rng));
    }
    horizontal_lift(&PlanarJet::new(Jet::new(x1, order), Jet::new(x2, order)).expect("same order"), rat(0, 1))
}

/// Homogeneous-arclength completion of a random planar jet through the origin.
fn random_homogeneous(rng: &mut ChaCha8Rng) -> CurveJet<Rational> {
    let order = 8;
    let mut x1 = vec![rat(0, 1)];
    let mut x2 = vec![rat(0, 1)];
    for _ in 0..order {
        x1.push(rq(rng));
        x2.push(rq(rng));
    }
    vertical_completion(&PlanarJet::new(Jet::new(x1, order), Jet::new(x2, order)).expect("same order"), rat(0, 1))
}

fn curves(c: &mut Checks, rng: &mut ChaCha8Rng, mutation: Mutation) {
    let n = 8;
    let mut a1_fail = 0;
    for _ in 0..n {
        let j = random_horizontal(rng, 7);
        let ok = match (measure_series(&j), coeff_a1(&j)) {
            (Ok(m), Ok(a1)) => m.coeffs()[1] == rat(2, 1) && m.coeffs()[2] == rat(0, 1) && m.coeffs()[3] == a1,
            _ => false,
        };
        a1_fail += usize::from(!ok);
    }
    c.count("horizontal-r3-equals-a1", a1_fail, n);

    let mut b2 = eqn_b2();
    b2.terms[0].num += mutation.b2_numerator;
    let (b1, mut f1, mut f2, mut f3) = (eqn_b1(), 0, 0, 0);
    for _ in 0..n {
        let j = random_homogeneous(rng);
        let Ok(m) = measure_series(&j) else {
            f1 += 1;
            f2 += 1;
            f3 += 1;
            continue;
        };
        let m = m.coeffs();
        f1 += usize::from(eval_wpoly(&b1, &j.planar).map(|v| m[6] == v && m[2] == rat(2, 1)).unwrap_or(false) == false);
        f2 += usize::from(eval_wpoly(&b2, &j.planar).map(|v| m[10] == v).unwrap_or(false) == false);
        f3 += usize::from(coeff_b3_literal(&j).map(|v| m[14] == v * rat(2, 1)).unwrap_or(false) == false);
    }
    c.count("eqnB1-matches-oracle", f1, n);
    c.count("eqnB2-matches-oracle", f2, n);
    c.count("eqnB3-normalized-matches-oracle", f3, n);

    let line = vertical_completion(&PlanarJet::new(Jet::<Rational>::variable(8), Jet::zero(8)).expect("same order"), rat(0, 1));
    let want = [(2, rat(2, 1)), (6, rat(-1, 1)), (10, rat(7, 4)), (14, rat(-33, 8))];
    let ok = measure_series(&line).map(|m| want.iter().all(|(k, v)| &m.coeffs()[*k] == v)).unwrap_or(false);
    c.check("tilted-line-coefficients", ok, "(s, 0, s): 2, -1, 7/4, -33/8".into());

    let r: f64 = 0.05;
    let v = curve_ball_measure(&LiftedCircle { radius: 1.0 }, 0.0, r, 1).map(|s| s.value).unwrap_or(f64::NAN);
    c.worst("lifted-circle-quadrature", 1e-9, [(v - (2.0 * r + r.powi(3) / 36.0)).abs()]);
}

fn surfaces(c: &mut Checks, rng: &mut ChaCha8Rng) {
    let n = 50;
    let mut errs = vec![];
    for _ in 0..n {
        let alpha = rng.gen_range(0.05..1.5);
        let z = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
        let q = QuadricSpec::paraboloid(alpha);
        let x = HPoint::new(z[0], z[1], q.height(z));
        let (s, co) = alpha.sin_cos();
        let want = (s * s - 2.0 * co * co) / (z[0] * z[0] + z[1] * z[1]);
        errs.push(pde_residual(&q.defining_function(), x).map(|v| (v - want).abs() / want.abs()).unwrap_or(f64::NAN));
    }
    c.worst("paraboloid-residual", 1e-10, errs);

    let flat = QuadricSpec::paraboloid(2f64.sqrt().atan());
    let v = pde_residual(&flat.defining_function(), HPoint::new(0.4, -0.7, flat.height([0.4, -0.7]))).unwrap_or(f64::NAN);
    let others = [0.3, 0.9, 1.2].iter().all(|&a| {
        let q = QuadricSpec::paraboloid(a);
        pde_residual(&q.defining_function(), HPoint::new(0.4, -0.7, q.height([0.4, -0.7]))).map(|v| v.abs() > 1e-3).unwrap_or(false)
    });
    c.check("flat-iff-tan-squared-two", v.abs() < 1e-12 && others, format!("residual at tan^2 = 2: {v:e}"));

    let mut m_err = vec![];
    let mut cov = vec![];
    let mut c1_err = vec![];
    for k in 0..n {
        let (l1, l2, phi) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(0.0..6.3));
        let q = QuadricSpec::rotated_diagonal(l1, l2, phi);
        let z = [rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)];
        let u = q.defining_function();
        let x = HPoint::new(z[0], z[1], q.height(z));
        let m = quadric_m(&q, z).unwrap_or(f64::NAN);
        m_err.push(pde_residual(&u, x).map(|v| (v - m).abs() / m.abs().max(1.0)).unwrap_or(f64::NAN));
        let t = rng.gen_range(0.0..6.3);
        let rq = QuadricSpec::rotated_diagonal(l1, l2, phi + t);
        let rz = rotate(HPoint::new(z[0], z[1], 0.0), -t);
        cov.push(quadric_m(&rq, [rz.x1, rz.x2]).map(|v| (v - m).abs() / m.abs().max(1.0)).unwrap_or(f64::NAN));
        if k < 10 {
            let e = normalize_at_point(&u, x).and_then(|g| graph_coeff_c1(&g)).map(|v| (v - m).abs() / m.abs().max(1.0));
            c1_err.push(e.unwrap_or(f64::NAN));
        }
    }
    c.worst("quadric-residual-equals-m", 1e-9, m_err);
    c.worst("m-rotation-covariance", 1e-10, cov);
    c.worst("normalized-graph-c1", 1e-8, c1_err);

    let errs: Vec<f64> = [0.3, 1.0, -2.5, 4.0]
        .iter()
        .map(|&l1| {
            let t = quadric_flat_test(l1, -1.0 / l1);
            let [a, b, ab, mixed] = t.coefficients;
            let literal = a + b * l1.powi(4) + ab * l1 * l1 + mixed * l1 * (1.0 + l1 * l1);
            let closed = -10.0 * (1.0 + l1 * l1).powi(2);
            let c = t.collapsed.unwrap_or(f64::NAN);
            ((literal - closed) / closed).abs().max(((c - closed) / closed).abs())
        })
        .collect();
    c.worst("collapsed-coefficient", 1e-12, errs);
}

fn integrals(c: &mut Checks) {
    let w = omega_h();
    c.check("omega-h-value", (w - 3.49608).abs() < 5e-5 && (w - monomial_ball_integral(0, 0)).abs() < 1e-14, format!("omega_H = {w}"));
    c.worst(
        "gamma-recurrence",
        1e-12,
        [0.25, 0.5, 0.75, 1.3, 2.7, 4.1].iter().map(|&x| match (gamma_fn(x + 1.0), gamma_fn(x)) {
            (Ok(a), Ok(b)) => (a - x * b).abs() / a,
            _ => f64::NAN,
        }),
    );
    let mut quad = vec![];
    for a in 0..=2u32 {
        for b in 0..=2 - a {
            let h = move |e: [f64; 2]| e[0].powi(2 * a as i32) * e[1].powi(2 * b as i32);
            let want = monomial_ball_integral(a, b);
            quad.push(ball_integral(h, 1e-11).map(|v| (v - want).abs() / want).unwrap_or(f64::NAN));
        }
    }
    c.worst("monomial-closed-form", 1e-8, quad);
    let checks = [(0u32, 0u32), (1, 0), (0, 1), (2, 0), (1, 1), (4, 0), (3, 1)];
    c.worst(
        "sphere-ball-factor",
        1e-6,
        checks.iter().map(|&(p, q)| {
            let h = move |e: [f64; 2]| e[0].powi(2 * p as i32) * e[1].powi(2 * q as i32);
            polar_identity_check(h, 2 * p + 4 * q, 1e-11).map(|r| r.rel_error).unwrap_or(f64::NAN)
        }),
    );
    let coarse = SphereQuadrature::new(512).and_then(|s| s.integrate(|e| e[0].powi(4) + e[1].powi(2)));
    let fine = SphereQuadrature::new(1024).and_then(|s| s.integrate(|e| e[0].powi(4) + e[1].powi(2)));
    let e = match (coarse, fine) {
        (Ok(a), Ok(b)) => (a - b).abs() / b,
        _ => f64::NAN,
    };
    c.worst("sphere-rule-doubling", 1e-12, [e]);
}
