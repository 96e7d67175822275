//! End-to-end acceptance checks. Run with
//! `cargo test -p bernstein-core --test acceptance`; prints one line per
//! criterion and exits nonzero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bernstein_core::bernstein::{
    bernstein_szego_1d, random_interior_point, trial_rng, verify_upper_bound,
};
use bernstein_core::ellipse::best_ellipse;
use bernstein_core::kernel::{
    cloud_area, kernel_area_closed, kernel_ellipse_closed_form, kernel_intersect, kr_cloud_disks,
    upper_disk_union_area, DirectionalBoundTable,
};
use bernstein_core::simplex::{baran_derivative, ellipse_constant, ellipse_constant_dir};
use bernstein_core::sweep::{
    alpha_constant, alpha_squared_constant, compare_sweep, constants_sweep, interior_grid,
    DEFAULT_MARGIN,
};
use bernstein_core::{ConvexPolygon, Point, SimplexPoint, UnitDirection};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.2?}]", o.detail, took);
    if let Some(limit) = limit {
        if took > limit {
            o.pass = false;
            o.detail = format!("{} exceeds {:?}", o.detail, limit);
        }
    }
    o
}

fn coincidence() -> Outcome {
    let mut worst: f64 = 0.0;
    for x in interior_grid(50, DEFAULT_MARGIN).unwrap() {
        for k in 0..64 {
            let phi = 2.0 * PI * k as f64 / 64.0;
            let y = [phi.cos(), phi.sin()];
            let d = baran_derivative(&x, &y).unwrap().value();
            let e = ellipse_constant_dir(&x, &y).unwrap();
            worst = worst.max((d * e - 1.0).abs());
        }
    }
    outcome(worst <= 1e-12, format!("max |D·E − 1| = {worst:.3e}"))
}

fn oracle_agreement() -> Outcome {
    let t = ConvexPolygon::standard_triangle();
    let mut rng = trial_rng(20_240_601, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let x = random_interior_point(&mut rng, DEFAULT_MARGIN);
        let phi = rng.random_range(0.0..PI);
        let (a, b) = (x.coords()[0], x.coords()[1]);
        let got = best_ellipse(
            &t.interior(Point::new(a, b)).unwrap(),
            &UnitDirection::from_angle(phi),
        )
        .best_b;
        let want = ellipse_constant_dir(&x, &[phi.cos(), phi.sin()]).unwrap();
        worst = worst.max((got - want).abs() / want);
    }
    outcome(worst <= 1e-6, format!("max relative deviation {worst:.3e}"))
}

fn hexagon() -> Outcome {
    let m = SimplexPoint::centroid();
    let k = kernel_intersect(&DirectionalBoundTable::kroo_revesz(&m, 4096).unwrap()).unwrap();
    let s = 6f64.sqrt();
    let expected = [(s, 0.0), (s, s), (0.0, s), (-s, 0.0), (-s, -s), (0.0, -s)];
    let miss = expected
        .iter()
        .map(|&(a, b)| {
            let v = Point::new(a, b);
            k.polygon
                .vertices()
                .iter()
                .map(|w| (w - v).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    let area_err = (k.area - 18.0).abs();
    outcome(
        area_err <= 1e-3 && miss <= 1e-3,
        format!(
            "area {:.9} (|Δ| = {area_err:.2e}), worst vertex miss {miss:.2e}",
            k.area
        ),
    )
}

fn cloud() -> Outcome {
    let m = SimplexPoint::centroid();
    let area = cloud_area(&m).unwrap();
    let disks = kr_cloud_disks(&m).unwrap();
    let union = 2.0 * upper_disk_union_area(&disks);
    let mut radii: Vec<f64> = disks.iter().map(|d| d.radius).collect();
    radii.sort_by(f64::total_cmp);
    let radii_ok = (radii[0] - 1.5f64.sqrt()).abs() < 1e-12
        && (radii[1] - 1.5f64.sqrt()).abs() < 1e-12
        && (radii[2] - 3f64.sqrt()).abs() < 1e-12;
    let pass = (area - 23.137).abs() <= 1e-3 && (union - area).abs() <= 1e-4 && radii_ok;
    outcome(
        pass,
        format!(
            "polar area {area:.9}, disk union {union:.9}, 9 + 9π/2 = {:.9}",
            9.0 + 4.5 * PI
        ),
    )
}

fn kernel_ellipse_area() -> Outcome {
    let mut worst: f64 = 0.0;
    for x in interior_grid(20, DEFAULT_MARGIN).unwrap() {
        let k = kernel_intersect(&DirectionalBoundTable::baran(&x, 2048).unwrap()).unwrap();
        let closed = kernel_area_closed(&x).unwrap();
        worst = worst.max((k.area - closed).abs() / closed);
    }
    let m = SimplexPoint::centroid();
    let at_m = kernel_intersect(&DirectionalBoundTable::baran(&m, 2048).unwrap())
        .unwrap()
        .area;
    outcome(
        worst <= 1e-3 && (at_m - 16.3242).abs() <= 0.02,
        format!("max relative deviation {worst:.3e}, area at M {at_m:.6}"),
    )
}

fn max_norm_identity() -> Outcome {
    let mut worst: f64 = 0.0;
    for x in interior_grid(100, DEFAULT_MARGIN).unwrap() {
        let nu = kernel_ellipse_closed_form(&x).unwrap().major;
        worst = worst.max((nu * ellipse_constant(&x).unwrap() - 1.0).abs());
    }
    outcome(worst <= 1e-12, format!("max |ν·E − 1| = {worst:.3e}"))
}

fn constants() -> Outcome {
    let c = constants_sweep(200, DEFAULT_MARGIN).unwrap();
    let (a, a2) = (alpha_constant(), alpha_squared_constant());
    let echo = format!("{:.7}", (3.0 + 5f64.sqrt()).sqrt());
    let pass = (a - 0.02..=a + 1e-6).contains(&c.sup_ratio_alpha)
        && (a2 - 0.02..=a2 + 1e-6).contains(&c.sup_ratio_alpha2)
        && echo == "2.2882456";
    outcome(
        pass,
        format!(
            "sup {:.6} (√3/2 = {a:.6}), sup {:.6} (√(3+√5)/2 = {a2:.6}), √(3+√5) = {echo}",
            c.sup_ratio_alpha, c.sup_ratio_alpha2
        ),
    )
}

fn inequality_harness() -> Outcome {
    let total = 10_000;
    let degrees = 6;
    let mut violations = 0;
    let mut max_q: f64 = 0.0;
    let mut witness = f64::NAN;
    let mut skipped = 0;
    for d in 1..=degrees {
        let trials = total / degrees + usize::from(d <= total % degrees);
        let r = verify_upper_bound(d, trials, 42).unwrap();
        violations += r.violations.len();
        skipped += r.skipped.len();
        max_q = max_q.max(r.max_quotient);
        witness = r.witness_quotient;
    }
    outcome(
        violations == 0 && (witness - 1.0).abs() <= 1e-9,
        format!("{total} trials, {violations} violations, {skipped} skipped, max quotient {max_q:.6}, witness {witness:.12}"),
    )
}

fn equality_directions() -> Outcome {
    let s = compare_sweep(50, 64, DEFAULT_MARGIN).unwrap();
    let targets = [0.0, PI / 2.0, 3.0 * PI / 4.0, PI];
    let stray: Vec<f64> = s
        .summary
        .near_equality_angles
        .iter()
        .copied()
        .filter(|phi| {
            !targets
                .iter()
                .any(|t| (phi.rem_euclid(PI) - t).abs() <= 1e-3)
        })
        .collect();
    outcome(
        stray.is_empty() && s.summary.near_equality > 0,
        format!(
            "{} near-equality rows at angles {:?}, min quotient {:.12}",
            s.summary.near_equality, s.summary.near_equality_angles, s.summary.min_quotient
        ),
    )
}

fn one_dimensional_sharpness() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut over = false;
    for n in 1..=6 {
        for &(a, b) in &[(-1.0, 1.0), (0.0, 1.0), (-2.0, 3.0)] {
            for k in 0..20 {
                let x = a + (b - a) * (k as f64 + 0.5) / 20.0;
                let (r, bound) = bernstein_szego_1d(n, x, a, b).unwrap();
                worst = worst.max(bound - r);
                over |= r > bound * (1.0 + 1e-12);
            }
        }
    }
    outcome(
        worst <= 1e-3 && !over,
        format!("max shortfall {worst:.3e}, exceeds bound: {over}"),
    )
}

fn main() -> ExitCode {
    type Check = (&'static str, Option<Duration>, fn() -> Outcome);
    let checks: [Check; 10] = [
        (
            "coincidence of D and 1/E",
            Some(Duration::from_secs(1)),
            coincidence,
        ),
        (
            "numeric ellipse vs closed form",
            Some(Duration::from_secs(30)),
            oracle_agreement,
        ),
        ("hexagon kernel at M", None, hexagon),
        ("cloud area at M", None, cloud),
        ("kernel ellipse area", None, kernel_ellipse_area),
        ("max-norm identity", None, max_norm_identity),
        ("constants sweep", None, constants),
        (
            "randomized inequality harness",
            Some(Duration::from_secs(120)),
            inequality_harness,
        ),
        ("equality directions", None, equality_directions),
        ("one-dimensional sharpness", None, one_dimensional_sharpness),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in checks.iter().enumerate() {
        let o = timed(*limit, f);
        failed += usize::from(!o.pass);
        println!(
            "{} {:>2}. {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        checks.len() - failed,
        checks.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
