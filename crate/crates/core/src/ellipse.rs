//! Best inscribed ellipses through an interior point of a convex polygon.
//!
//! The ellipse `r(t) = cos t · a + b sin t · y + (x − a)` passes through `x`
//! at `t = 0` with tangent `b·y`. Against an edge `⟨n, p⟩ ≤ c` its extent is
//! `⟨n, x − a⟩ + √(⟨n, a⟩² + b²⟨n, y⟩²)`. Writing `s = c − ⟨n, x⟩ > 0` and
//! `q = ⟨n, y⟩`, containment in that edge is equivalent to the linear
//! inequality
//!
//! ```text
//! 2s⟨n, a⟩ − q²·b² ≥ −s²
//! ```
//!
//! in the unknowns `(a, b²)`. The largest `b` is therefore the optimum of a
//! three-variable linear program, solved here exactly by enumerating the
//! vertices of its feasible polyhedron.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Vector3};

use crate::error::{Error, Result};
use crate::geometry::{ConvexPolygon, InteriorPoint, Point, UnitDirection};
use crate::numeric::golden_section_min;

/// Slack allowed by the containment certificate.
pub const CONTAINMENT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InscribedEllipse {
    pub base: Point,
    pub direction: UnitDirection,
    /// Vector from the center to the base point.
    pub axis: Point,
    /// Semi-axis along `direction`; the Bernstein-relevant parameter.
    pub b: f64,
}

impl InscribedEllipse {
    pub fn center(&self) -> Point {
        self.base - self.axis
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.axis * t.cos() + self.direction.vector() * (self.b * t.sin()) + self.center()
    }

    /// Smallest per-edge slack `c − max_t ⟨n, r(t)⟩`; negative when the
    /// ellipse leaves the polygon.
    pub fn certificate_slack(&self, k: &ConvexPolygon) -> f64 {
        let y = self.direction.vector();
        k.halfplanes()
            .iter()
            .map(|h| {
                let reach = h.normal.dot(&self.center())
                    + h.normal.dot(&self.axis).hypot(self.b * h.normal.dot(&y));
                h.offset - reach
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Analytic containment test with tolerance [`CONTAINMENT_TOL`].
pub fn ellipse_in_polygon(e: &InscribedEllipse, k: &ConvexPolygon) -> bool {
    e.certificate_slack(k) >= -CONTAINMENT_TOL
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseSolveReport {
    /// `E(K, x, y)`.
    pub best_b: f64,
    pub witness: InscribedEllipse,
    /// Candidate vertices of the linear program that were examined.
    pub iterations: usize,
    /// `max(0, −certificate_slack)` of the witness.
    pub feasibility_residual: f64,
}

/// `E(K, x, y)`: the largest `b` of an ellipse inside `K` through `x`,
/// tangent to `y` there.
pub fn best_ellipse(x: &InteriorPoint<'_>, y: &UnitDirection) -> EllipseSolveReport {
    let k = x.body();
    let p = x.point();
    let yv = y.vector();
    // Each row encodes 2s⟨n, a⟩ − q²β ≥ −s².
    let rows: Vec<(Vector3<f64>, f64)> = k
        .halfplanes()
        .iter()
        .map(|h| {
            let s = h.slack(&p);
            let q = h.normal.dot(&yv);
            (
                Vector3::new(2.0 * s * h.normal.x, 2.0 * s * h.normal.y, -q * q),
                -s * s,
            )
        })
        .collect();
    let scale = rows.iter().map(|(_, r)| r.abs()).fold(0.0, f64::max);
    let feasible = |z: &Vector3<f64>| rows.iter().all(|(r, rhs)| r.dot(z) - rhs >= -1e-12 * scale);

    let m = rows.len();
    let mut best: Option<Vector3<f64>> = None;
    let mut iterations = 0;
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                iterations += 1;
                let mat = Matrix3::from_rows(&[
                    rows[i].0.transpose(),
                    rows[j].0.transpose(),
                    rows[l].0.transpose(),
                ]);
                let rhs = Vector3::new(rows[i].1, rows[j].1, rows[l].1);
                let Some(z) = mat.lu().solve(&rhs) else {
                    continue;
                };
                if !z.iter().all(|v| v.is_finite()) || !feasible(&z) {
                    continue;
                }
                if best.is_none_or(|b| z.z > b.z) {
                    best = Some(z);
                }
            }
        }
    }
    // The polyhedron always has a vertex for a body with nonzero area; the
    // fallback is the trivial feasible point a = 0, b = 0.
    let z = best.unwrap_or_else(Vector3::zeros);
    let witness = InscribedEllipse {
        base: p,
        direction: *y,
        axis: Point::new(z.x, z.y),
        b: z.z.max(0.0).sqrt(),
    };
    EllipseSolveReport {
        best_b: witness.b,
        witness,
        iterations,
        feasibility_residual: (-witness.certificate_slack(k)).max(0.0),
    }
}

/// Minimum of `E(K, x, y)` over directions and where it was found.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DirectionalMinimum {
    pub value: f64,
    /// Angle of the minimizing direction in `[0, π)`.
    pub angle: f64,
}

/// `E(K, x) = inf_y E(K, x, y)`: a sweep over `n_dirs` angles in `[0, π)`
/// followed by golden-section refinement around the best cell. Ties go to
/// the smallest angle.
pub fn best_ellipse_all_dirs(x: &InteriorPoint<'_>, n_dirs: usize) -> Result<DirectionalMinimum> {
    if n_dirs < 16 {
        return Err(Error::InvalidArgument(format!(
            "need at least 16 directions, got {n_dirs}"
        )));
    }
    let b_at = |theta: f64| best_ellipse(x, &UnitDirection::from_angle(theta)).best_b;
    let step = PI / n_dirs as f64;
    let mut best = (0.0, b_at(0.0));
    for i in 1..n_dirs {
        let t = i as f64 * step;
        let v = b_at(t);
        if v < best.1 {
            best = (t, v);
        }
    }
    let (t, v) = golden_section_min(b_at, best.0 - step, best.0 + step, 1e-10);
    if v < best.1 {
        best = (t, v);
    }
    Ok(DirectionalMinimum {
        value: best.1,
        angle: best.0.rem_euclid(PI),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ray_exit;

    fn square() -> ConvexPolygon {
        ConvexPolygon::rectangle(-1.0, -1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn containment_examples() {
        let k = square();
        let mut e = InscribedEllipse {
            base: Point::zeros(),
            direction: UnitDirection::from_angle(0.0),
            axis: Point::new(0.0, 0.5),
            b: 1.0,
        };
        assert!(ellipse_in_polygon(&e, &k));
        e.b = 1.01;
        assert!(!ellipse_in_polygon(&e, &k));

        // degenerate segment ellipse along the chord behind x
        let t = ConvexPolygon::standard_triangle();
        let x = Point::new(0.2, 0.3);
        let d = Point::new(0.6, 0.8);
        let back = ray_exit(&t, &x, &-d);
        let seg = InscribedEllipse {
            base: x,
            direction: UnitDirection::from_angle(1.0),
            axis: d * (back / 2.0),
            b: 0.0,
        };
        assert!(ellipse_in_polygon(&seg, &t));
    }

    #[test]
    fn curve_passes_through_base_with_tangent_y() {
        let e = InscribedEllipse {
            base: Point::new(0.3, 0.1),
            direction: UnitDirection::from_angle(0.4),
            axis: Point::new(0.05, -0.02),
            b: 0.2,
        };
        assert!((e.point_at(0.0) - e.base).norm() < 1e-15);
        let h = 1e-6;
        let tangent = (e.point_at(h) - e.point_at(-h)) / (2.0 * h);
        assert!((tangent - e.direction.vector() * e.b).norm() < 1e-8);
    }

    #[test]
    fn square_center() {
        let k = square();
        let x = k.interior(Point::zeros()).unwrap();
        let r = best_ellipse(&x, &UnitDirection::from_angle(0.0));
        assert!((r.best_b - 1.0).abs() < 1e-12);
        assert!(r.feasibility_residual <= 1e-9);
        let all = best_ellipse_all_dirs(&x, 64).unwrap();
        assert!((all.value - 1.0).abs() < 1e-6);
    }

    #[test]
    fn triangle_centroid() {
        let t = ConvexPolygon::standard_triangle();
        let m = t.interior(Point::new(1.0 / 3.0, 1.0 / 3.0)).unwrap();
        let r = best_ellipse(&m, &UnitDirection::from_angle(0.0));
        assert!((r.best_b - 6f64.sqrt().recip()).abs() < 1e-12);
        let r = best_ellipse(&m, &UnitDirection::from_angle(PI / 4.0));
        assert!((r.best_b - 1.0 / 3.0).abs() < 1e-12);
        assert!(ellipse_in_polygon(&r.witness, &t));
        let all = best_ellipse_all_dirs(&m, 256).unwrap();
        assert!((all.value - 1.0 / 3.0).abs() < 1e-5);
    }

    #[test]
    fn triangle_near_vertex() {
        let t = ConvexPolygon::standard_triangle();
        let x = t.interior(Point::new(0.1, 0.1)).unwrap();
        let all = best_ellipse_all_dirs(&x, 256).unwrap();
        assert!((all.value - 0.08f64.sqrt()).abs() < 1e-4);
    }

    #[test]
    fn too_few_directions() {
        let t = ConvexPolygon::standard_triangle();
        let x = t.interior(Point::new(0.2, 0.2)).unwrap();
        assert!(best_ellipse_all_dirs(&x, 8).is_err());
    }
}
