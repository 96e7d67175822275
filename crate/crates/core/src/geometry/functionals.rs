//! Support function, widths, maximal chords, gauges and the generalized
//! Minkowski functional of a convex polygon.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numeric::golden_section_min;

use super::polygon::{ConvexPolygon, InteriorPoint, Point, UnitDirection, BOUNDARY_TOL};

/// `h(K, u) = max ⟨u, v⟩` over the vertices.
pub fn support(k: &ConvexPolygon, u: &UnitDirection) -> f64 {
    let d = u.vector();
    k.vertices()
        .iter()
        .map(|v| d.dot(v))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `w(K, u) = h(K, u) + h(K, −u)`.
pub fn width(k: &ConvexPolygon, u: &UnitDirection) -> f64 {
    support(k, u) + support(k, &u.opposite())
}

/// Minimal width; attained at one of the edge normals.
pub fn min_width(k: &ConvexPolygon) -> f64 {
    k.halfplanes()
        .iter()
        .map(|h| {
            let u = UnitDirection::from_vector(h.normal).expect("edge normals are unit");
            width(k, &u)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Gauge of a body that contains the origin strictly inside, given by its
/// edge half-planes `⟨n, p⟩ ≤ c` with `c > 0`.
fn gauge_of(k: &ConvexPolygon, x: &Point) -> f64 {
    k.halfplanes()
        .iter()
        .map(|h| h.normal.dot(x) / h.offset)
        .fold(0.0, f64::max)
}

/// Maximal chord `τ(K, v) = sup{λ ≥ 0 : λv ∈ K − K}`.
///
/// Ray-shoots the difference body from the origin, so the value is exact up
/// to rounding.
pub fn maximal_chord(k: &ConvexPolygon, v: &UnitDirection) -> f64 {
    maximal_chord_in(&k.difference_body(), v)
}

/// [`maximal_chord`] against a precomputed difference body.
pub fn maximal_chord_in(difference_body: &ConvexPolygon, v: &UnitDirection) -> f64 {
    1.0 / gauge_of(difference_body, &v.vector())
}

/// Minkowski functional `inf{λ > 0 : x ∈ λK}`.
pub fn minkowski_gauge(k: &ConvexPolygon, x: Point) -> Result<f64> {
    if !(k.signed_distance(&Point::zeros()) > BOUNDARY_TOL) {
        return Err(Error::OriginNotInterior);
    }
    Ok(gauge_of(k, &x))
}

/// Distance from an interior point to the boundary along `u`.
pub fn ray_exit(k: &ConvexPolygon, x: &Point, u: &Point) -> f64 {
    k.halfplanes()
        .iter()
        .filter_map(|h| {
            let rate = h.normal.dot(u);
            (rate > 0.0).then(|| h.slack(x) / rate)
        })
        .fold(f64::INFINITY, f64::min)
}

/// `2√(‖x−a‖‖x−b‖)/‖a−b‖` for the chord through `x` at angle `theta`.
pub fn chord_balance(x: &InteriorPoint<'_>, theta: f64) -> f64 {
    let k = x.body();
    let p = x.point();
    let u = Point::new(theta.cos(), theta.sin());
    let fwd = ray_exit(k, &p, &u);
    let back = ray_exit(k, &p, &-u);
    2.0 * (fwd * back).sqrt() / (fwd + back)
}

/// Number of grid angles in the chord sweep.
pub const GAMMA_SWEEP_SAMPLES: usize = 2048;

/// Result of the chord-balance minimization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaEstimate {
    /// Refined infimum.
    pub value: f64,
    /// Chord angle in `[0, π)` where the refined infimum was found.
    pub angle: f64,
    /// Best value on the angular grid alone; always `≥ value`.
    pub grid_value: f64,
}

/// `γ(K, x)`, the infimum of [`chord_balance`] over chord directions.
pub fn gamma(x: &InteriorPoint<'_>) -> GammaEstimate {
    gamma_with_samples(x, GAMMA_SWEEP_SAMPLES)
}

/// [`gamma`] with an explicit grid size; the three best grid cells are
/// refined by golden-section search.
pub fn gamma_with_samples(x: &InteriorPoint<'_>, samples: usize) -> GammaEstimate {
    let samples = samples.max(8);
    let step = PI / samples as f64;
    let grid: Vec<f64> = (0..samples)
        .map(|i| chord_balance(x, i as f64 * step))
        .collect();

    let mut order: Vec<usize> = (0..samples).collect();
    order.sort_by(|&a, &b| grid[a].total_cmp(&grid[b]).then(a.cmp(&b)));
    let grid_best = order[0];
    let grid_value = grid[grid_best];

    let mut best = (grid_best as f64 * step, grid_value);
    for &i in order.iter().take(3) {
        let center = i as f64 * step;
        let (t, v) =
            golden_section_min(|t| chord_balance(x, t), center - step, center + step, 1e-10);
        if v < best.1 {
            best = (t, v);
        }
    }
    GammaEstimate {
        value: best.1,
        angle: best.0.rem_euclid(PI),
        grid_value,
    }
}

/// Generalized Minkowski functional `α(K, x) = √(1 − γ²)`.
pub fn alpha(x: &InteriorPoint<'_>) -> f64 {
    let g = gamma(x).value.min(1.0);
    (1.0 - g * g).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> ConvexPolygon {
        ConvexPolygon::standard_triangle()
    }

    fn box2() -> ConvexPolygon {
        ConvexPolygon::rectangle(-1.0, -1.0, 1.0, 1.0).unwrap()
    }

    const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn support_examples() {
        let t = tri();
        assert_eq!(support(&t, &UnitDirection::from_angle(0.0)), 1.0);
        assert!(support(&t, &UnitDirection::from_angle(PI)).abs() < 1e-15);
        assert!((support(&t, &UnitDirection::from_angle(PI / 4.0)) - R2).abs() < 1e-15);
    }

    #[test]
    fn width_examples() {
        let t = tri();
        assert!((width(&t, &UnitDirection::from_angle(0.0)) - 1.0).abs() < 1e-15);
        assert!((width(&t, &UnitDirection::from_angle(PI / 4.0)) - R2).abs() < 1e-15);
        let sq = ConvexPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        assert!((width(&sq, &UnitDirection::from_angle(PI / 2.0)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn min_width_matches_direction_sweep() {
        let t = tri();
        let brute = (0..10_000)
            .map(|i| width(&t, &UnitDirection::from_angle(PI * i as f64 / 10_000.0)))
            .fold(f64::INFINITY, f64::min);
        let w = min_width(&t);
        assert!((w - R2).abs() < 1e-15);
        assert!(w <= brute + 1e-15 && brute - w < 1e-6);
        assert!(
            (min_width(&ConvexPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap()) - 1.0).abs() < 1e-15
        );
        assert!(
            (min_width(&ConvexPolygon::rectangle(0.0, 0.0, 2.0, 1.0).unwrap()) - 1.0).abs() < 1e-15
        );
    }

    #[test]
    fn maximal_chord_of_triangle() {
        let t = tri();
        let tau = |phi: f64| maximal_chord(&t, &UnitDirection::from_angle(phi));
        assert!((tau(0.0) - 1.0).abs() < 1e-14);
        assert!((tau(PI / 4.0) - R2).abs() < 1e-14);
        assert!((tau(3.0 * PI / 4.0) - 2f64.sqrt()).abs() < 1e-14);
        // τ(v) = τ(−v)
        assert!((tau(0.3) - tau(0.3 + PI)).abs() < 1e-14);
    }

    #[test]
    fn gauge_examples() {
        let b = box2();
        assert!((minkowski_gauge(&b, Point::new(0.5, 0.0)).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(minkowski_gauge(&b, Point::zeros()).unwrap(), 0.0);
        assert!((minkowski_gauge(&b, Point::new(0.5, 0.5)).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(
            minkowski_gauge(&tri(), Point::new(0.1, 0.1)),
            Err(Error::OriginNotInterior)
        );
    }

    #[test]
    fn gamma_examples() {
        let t = tri();
        let m = t.interior(Point::new(1.0 / 3.0, 1.0 / 3.0)).unwrap();
        assert!((gamma(&m).value - 8f64.sqrt() / 3.0).abs() < 1e-9);
        let c = box2();
        let o = c.interior(Point::zeros()).unwrap();
        assert!((gamma(&o).value - 1.0).abs() < 1e-12);
        let q = t.interior(Point::new(0.25, 0.25)).unwrap();
        // α = 1 − 2·0.25 = 0.5 so γ = √(1 − 0.25)
        assert!((gamma(&q).value - 0.75f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn alpha_examples() {
        let t = tri();
        let a = |x: f64, y: f64| alpha(&t.interior(Point::new(x, y)).unwrap());
        assert!((a(1.0 / 3.0, 1.0 / 3.0) - 1.0 / 3.0).abs() < 1e-6);
        assert!((a(0.1, 0.1) - 0.8).abs() < 1e-6);
        assert!(alpha(&box2().interior(Point::zeros()).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn refinement_never_increases_gamma() {
        let t = tri();
        for &(x, y) in &[(0.2, 0.3), (0.05, 0.6), (0.7, 0.1), (0.33, 0.33)] {
            let g = gamma(&t.interior(Point::new(x, y)).unwrap());
            assert!(g.value <= g.grid_value);
            assert!((0.0..PI).contains(&g.angle));
        }
    }
}
