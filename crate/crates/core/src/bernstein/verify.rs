use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point, UnitDirection};
use crate::simplex::{baran_derivative, SimplexPoint};

use super::poly::{chebyshev_transplant, TotalDegreePolynomial};
use super::supnorm::sup_norm_simplex;

pub const MAX_DEGREE: usize = 8;
pub const VERIFY_SLACK: f64 = 1e-3;
pub const BOUNDARY_MARGIN: f64 = 1e-3;
pub const CATALOG_SIZE: usize = 64;

fn planar(x: &SimplexPoint) -> Result<Point> {
    match x.coords() {
        &[a, b] => Ok(Point::new(a, b)),
        c => Err(Error::Dimension {
            expected: 2,
            got: c.len(),
        }),
    }
}

/// `|⟨∇p(x), y⟩| / (n √(norm² − p(x)²))` against a given sup-norm value.
pub fn bernstein_ratio_with_norm(
    p: &TotalDegreePolynomial,
    norm: f64,
    x: &SimplexPoint,
    y: &UnitDirection,
) -> Result<f64> {
    let g = gradient_over_norm(p, norm, x)?;
    Ok(g.dot(&y.vector()).abs())
}

/// The directional Bernstein factor of `p` at `x`, normalized by the
/// certified sup-norm on the triangle.
pub fn bernstein_ratio(
    p: &TotalDegreePolynomial,
    x: &SimplexPoint,
    y: &UnitDirection,
) -> Result<f64> {
    bernstein_ratio_with_norm(p, sup_norm_simplex(p).value, x, y)
}

fn gradient_over_norm(p: &TotalDegreePolynomial, norm: f64, x: &SimplexPoint) -> Result<Point> {
    if p.degree() == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let at = planar(x)?;
    let (v, g) = p.value_and_gradient(&at);
    if v.abs() >= norm {
        return Err(Error::RatioUndefined { value: v, norm });
    }
    let denom = p.degree() as f64 * ((norm - v.abs()) * (norm + v.abs())).sqrt();
    Ok(g / denom)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradientSample {
    pub x: SimplexPoint,
    /// `∇p(x) / (n √(‖p‖² − p(x)²))`.
    pub vector: Point,
}

impl GradientSample {
    pub fn new(p: &TotalDegreePolynomial, norm: f64, x: &SimplexPoint) -> Result<Self> {
        Ok(Self {
            x: x.clone(),
            vector: gradient_over_norm(p, norm, x)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub x: [f64; 2],
    pub phi: f64,
    pub sup_norm: f64,
    pub ratio: f64,
    pub bound: f64,
    pub quotient: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub ensemble: &'static str,
    pub boundary_margin: f64,
    pub slack: f64,
    pub max_quotient: f64,
    /// Quotient of the linear extremal `2x₁ + 2x₂ − 1` at the centroid in
    /// direction `(1, 1)/√2`.
    pub witness_quotient: f64,
    /// Trials where `|p(x)|` reached the certified norm and no ratio exists.
    pub skipped: Vec<usize>,
    pub violations: Vec<TrialRecord>,
    pub records: Vec<TrialRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Generator for trial `trial` of a run seeded with `seed`, independent of
/// the order in which trials are executed.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Uniform point of the triangle at barycentric distance at least `margin`
/// from its boundary.
pub fn random_interior_point<R: Rng + ?Sized>(rng: &mut R, margin: f64) -> SimplexPoint {
    loop {
        let (mut u, mut v) = (rng.random::<f64>(), rng.random::<f64>());
        if u + v > 1.0 {
            (u, v) = (1.0 - u, 1.0 - v);
        }
        if u.min(v).min(1.0 - u - v) >= margin {
            if let Ok(x) = SimplexPoint::planar(u, v) {
                return x;
            }
        }
    }
}

fn evaluate(
    trial: usize,
    p: &TotalDegreePolynomial,
    norm: f64,
    x: &SimplexPoint,
    phi: f64,
) -> Result<TrialRecord> {
    let y = UnitDirection::from_angle(phi);
    let v = y.vector();
    let ratio = bernstein_ratio_with_norm(p, norm, x, &y)?;
    let bound = baran_derivative(x, &[v.x, v.y])?.value();
    let c = x.coords();
    Ok(TrialRecord {
        trial,
        x: [c[0], c[1]],
        phi,
        sup_norm: norm,
        ratio,
        bound,
        quotient: ratio / bound,
    })
}

fn linear_witness() -> TotalDegreePolynomial {
    TotalDegreePolynomial::new(1, vec![-1.0, 2.0, 2.0]).expect("three coefficients")
}

/// Checks `ratio ≤ (1 + slack)·D_y⁺V(x)` for random polynomials of the given
/// degree at random interior points and directions.
pub fn verify_upper_bound(degree: usize, trials: usize, seed: u64) -> Result<VerifyReport> {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::InvalidArgument(format!(
            "degree must lie in 1..={MAX_DEGREE}, got {degree}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument(
            "at least one trial is required".into(),
        ));
    }
    let outcomes: Vec<(usize, Option<TrialRecord>)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let p = TotalDegreePolynomial::random(degree, &mut rng);
            let x = random_interior_point(&mut rng, BOUNDARY_MARGIN);
            let phi = rng.random_range(0.0..2.0 * PI);
            // x itself may beat the grid certificate
            let at = planar(&x).expect("planar point");
            let norm = sup_norm_simplex(&p).value.max(p.eval(&at).abs());
            (t, evaluate(t, &p, norm, &x, phi).ok())
        })
        .collect();

    let mut records = Vec::with_capacity(trials);
    let mut skipped = Vec::new();
    for (t, r) in outcomes {
        match r {
            Some(r) => records.push(r),
            None => skipped.push(t),
        }
    }
    let violations: Vec<TrialRecord> = records
        .iter()
        .filter(|r| r.quotient > 1.0 + VERIFY_SLACK)
        .cloned()
        .collect();
    let max_quotient = records.iter().map(|r| r.quotient).fold(0.0, f64::max);
    let witness = evaluate(
        trials,
        &linear_witness(),
        1.0,
        &SimplexPoint::centroid(),
        PI / 4.0,
    )?;

    Ok(VerifyReport {
        degree,
        trials,
        seed,
        ensemble: "monomial coefficients i.i.d. uniform on [-1, 1]",
        boundary_margin: BOUNDARY_MARGIN,
        slack: VERIFY_SLACK,
        max_quotient,
        witness_quotient: witness.quotient,
        skipped,
        violations,
        records,
    })
}

/// Affine functional `c₀ + ⟨c, x⟩` mapping the triangle onto `[−1, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineFunctional {
    pub c0: f64,
    pub c: [f64; 2],
}

/// For `θ_k = kπ/32`, the functional increasing along `(cos θ_k, sin θ_k)`
/// that takes the values −1 and 1 at the extreme vertices.
pub fn transplant_catalog() -> Vec<AffineFunctional> {
    (0..CATALOG_SIZE)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / CATALOG_SIZE as f64;
            let u = Point::new(theta.cos(), theta.sin());
            let hi = 0f64.max(u.x).max(u.y);
            let lo = 0f64.min(u.x).min(u.y);
            let w = hi - lo;
            AffineFunctional {
                c0: -(hi + lo) / w,
                c: [2.0 * u.x / w, 2.0 * u.y / w],
            }
        })
        .collect()
}

/// Samples of the normalized gradient set at `x`: `trials` random
/// polynomials with degrees cycling through `1..=degree`, then every
/// Chebyshev transplant of the catalog for each degree.
pub fn empirical_gradient_cloud(
    x: &SimplexPoint,
    degree: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<GradientSample>> {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::InvalidArgument(format!(
            "degree must lie in 1..={MAX_DEGREE}, got {degree}"
        )));
    }
    let at = planar(x)?;
    let mut samples: Vec<GradientSample> = (0..trials)
        .into_par_iter()
        .filter_map(|t| {
            let mut rng = trial_rng(seed, t);
            let p = TotalDegreePolynomial::random(1 + t % degree, &mut rng);
            let norm = sup_norm_simplex(&p).value.max(p.eval(&at).abs());
            GradientSample::new(&p, norm, x).ok()
        })
        .collect();
    for l in transplant_catalog() {
        for n in 1..=degree {
            let p = chebyshev_transplant(n, l.c0, l.c)?;
            if let Ok(s) = GradientSample::new(&p, 1.0, x) {
                samples.push(s);
            }
        }
    }
    Ok(samples)
}

/// Chebyshev polynomial and its derivative at `u` by the three-term recurrence.
fn chebyshev_with_derivative(n: usize, u: f64) -> (f64, f64) {
    let (mut t0, mut t1) = (1.0, u);
    let (mut d0, mut d1) = (0.0, 1.0);
    if n == 0 {
        return (1.0, 0.0);
    }
    for _ in 1..n {
        let t2 = 2.0 * u * t1 - t0;
        let d2 = 2.0 * t1 + 2.0 * u * d1 - d0;
        (t0, t1, d0, d1) = (t1, t2, d1, d2);
    }
    (t1, d1)
}

/// One-variable Bernstein–Szegő check on `[a, b]`: returns the supremum of
/// `|p′(x)| / √(1 − p(x)²)` over the Chebyshev polynomials `T_n ∘ ℓ`, with
/// `ℓ` ranging over affine maps of `[a, b]` onto subintervals of `[−1, 1]`
/// that keep one endpoint, together with the bound `n / √((b − x)(x − a))`.
pub fn bernstein_szego_1d(n: usize, x: f64, a: f64, b: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if !(a < x && x < b) {
        return Err(Error::InvalidArgument(format!(
            "need a < x < b, got {a}, {x}, {b}"
        )));
    }
    let bound = n as f64 / ((b - x) * (x - a)).sqrt();
    let t = (x - a) / (b - a);
    let mut best: f64 = 0.0;
    let shrink = std::iter::once(0.0).chain((1..=8).map(|k| 10f64.powi(-k)));
    for s in shrink {
        let len = 2.0 - s;
        // ℓ maps [a, b] onto [−1 + s, 1] or onto [−1, 1 − s]
        for lo in [-1.0 + s, -1.0] {
            let u = lo + len * t;
            let (p, dp) = chebyshev_with_derivative(n, u);
            let gap = (1.0 - p) * (1.0 + p);
            if gap <= 1e-14 {
                continue;
            }
            best = best.max(dp.abs() * len / (b - a) / gap.sqrt());
        }
    }
    Ok((best, bound))
}
