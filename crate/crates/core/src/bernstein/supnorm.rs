use serde::Serialize;

use crate::geometry::Point;

use super::poly::TotalDegreePolynomial;

const REFINE_STARTS: usize = 10;
const REFINE_ITERS: usize = 40;

/// Sup-norm of a polynomial on the standard triangle, from below.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SupNormCertificate {
    pub value: f64,
    /// Subdivisions per side of the evaluation grid.
    pub grid_resolution: usize,
    pub refined: bool,
    /// Always true: the value is attained by `|p|` at `argmax`, so it never
    /// exceeds the true sup-norm.
    pub lower_bound: bool,
    #[serde(skip)]
    pub argmax: Point,
}

pub fn grid_resolution(degree: usize) -> usize {
    64.max(8 * degree * degree)
}

/// Euclidean projection onto the closed standard triangle.
fn project(p: Point) -> Point {
    if p.x >= 0.0 && p.y >= 0.0 && p.x + p.y <= 1.0 {
        return p;
    }
    let on_segment = |a: Point, b: Point| {
        let d = b - a;
        let t = ((p - a).dot(&d) / d.norm_squared()).clamp(0.0, 1.0);
        a + d * t
    };
    let o = Point::zeros();
    let e1 = Point::new(1.0, 0.0);
    let e2 = Point::new(0.0, 1.0);
    [on_segment(o, e1), on_segment(e1, e2), on_segment(e2, o)]
        .into_iter()
        .min_by(|a, b| (a - p).norm_squared().total_cmp(&(b - p).norm_squared()))
        .unwrap()
}

enum Face {
    Interior,
    /// Unit tangent and inward unit normal of the edge.
    Edge(Point, Point),
    Vertex,
}

fn active_face(p: &Point) -> Face {
    let eps = 1e-14;
    let r = 0.5f64.sqrt();
    let edges = [
        (p.y <= eps, Point::new(1.0, 0.0), Point::new(0.0, 1.0)),
        (
            p.x + p.y >= 1.0 - eps,
            Point::new(-r, r),
            Point::new(-r, -r),
        ),
        (p.x <= eps, Point::new(0.0, 1.0), Point::new(1.0, 0.0)),
    ];
    let mut on = edges.iter().filter(|e| e.0);
    match (on.next(), on.next()) {
        (None, _) => Face::Interior,
        (Some(&(_, t, n)), None) => Face::Edge(t, n),
        _ => Face::Vertex,
    }
}

fn newton_or_gradient(g: Point, h: nalgebra::Matrix2<f64>) -> Point {
    match h.try_inverse() {
        Some(inv) if h.determinant() > 0.0 && h[(0, 0)] < 0.0 => -(inv * g),
        _ => g * 1e-2,
    }
}

/// Projected Newton ascent of `s·p` from `start`, `s = sign p(start)`.
fn polish(p: &TotalDegreePolynomial, start: Point) -> (Point, f64) {
    let sign = if p.eval(&start) < 0.0 { -1.0 } else { 1.0 };
    let f = |x: &Point| sign * p.eval(x);
    let mut x = start;
    let mut fx = f(&x);
    for _ in 0..REFINE_ITERS {
        let g = p.gradient(&x) * sign;
        let h = p.hessian(&x) * sign;
        let step = match active_face(&x) {
            Face::Interior => newton_or_gradient(g, h),
            Face::Edge(_, n) if g.dot(&n) > 0.0 => newton_or_gradient(g, h),
            Face::Edge(t, _) => {
                let gt = g.dot(&t);
                let ht = t.dot(&(h * t));
                if ht < 0.0 {
                    t * (-gt / ht)
                } else {
                    t * (gt * 1e-2)
                }
            }
            Face::Vertex => g * 1e-2,
        };
        let mut scale = 1.0;
        let mut moved = false;
        for _ in 0..30 {
            let cand = project(x + step * scale);
            let fc = f(&cand);
            if fc > fx {
                moved = (cand - x).norm() > 1e-15;
                x = cand;
                fx = fc;
                break;
            }
            scale *= 0.5;
        }
        if !moved {
            break;
        }
    }
    (x, fx)
}

/// `max |p|` over a barycentric grid with `max(64, 8n²)` subdivisions per
/// side, polished from the best ten grid points by projected Newton steps.
pub fn sup_norm_simplex(p: &TotalDegreePolynomial) -> SupNormCertificate {
    let m = grid_resolution(p.degree());
    let h = 1.0 / m as f64;
    let mut top: Vec<(f64, Point)> = Vec::with_capacity(REFINE_STARTS + 1);
    for i in 0..=m {
        for j in 0..=m - i {
            let x = Point::new(i as f64 * h, j as f64 * h);
            let v = p.eval(&x).abs();
            if top.len() < REFINE_STARTS || v > top[top.len() - 1].0 {
                let at = top.partition_point(|(w, _)| *w >= v);
                top.insert(at, (v, x));
                top.truncate(REFINE_STARTS);
            }
        }
    }
    let (mut value, mut argmax) = top[0];
    let mut refined = false;
    for &(_, start) in &top {
        let (x, v) = polish(p, start);
        if v > value {
            value = v;
            argmax = x;
            refined = true;
        }
    }
    SupNormCertificate {
        value,
        grid_resolution: m,
        refined,
        lower_bound: true,
        argmax,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::poly::chebyshev_transplant;

    #[test]
    fn linear() {
        let p = TotalDegreePolynomial::new(1, vec![-1.0, 2.0, 2.0]).unwrap();
        let c = sup_norm_simplex(&p);
        assert!((c.value - 1.0).abs() < 1e-15);
        assert!(c.lower_bound);
        assert_eq!(c.grid_resolution, 64);
    }

    #[test]
    fn chebyshev_on_an_edge() {
        let p = chebyshev_transplant(4, -1.0, [2.0, 0.0]).unwrap();
        let c = sup_norm_simplex(&p);
        assert!((c.value - 1.0).abs() < 1e-12);
        assert_eq!(c.grid_resolution, 128);
    }

    #[test]
    fn constant() {
        let c = sup_norm_simplex(&TotalDegreePolynomial::constant(2, -2.5));
        assert_eq!(c.value, 2.5);
    }

    #[test]
    fn interior_maximum_is_polished() {
        // 1 − 2((x₁ − 0.3017)² + (x₂ − 0.2113)²): peak off the grid
        let (a, b) = (0.3017, 0.2113);
        let mut p = TotalDegreePolynomial::zero(2);
        p.set_coeff(0, 0, 1.0 - 2.0 * (a * a + b * b));
        p.set_coeff(1, 0, 4.0 * a);
        p.set_coeff(0, 1, 4.0 * b);
        p.set_coeff(2, 0, -2.0);
        p.set_coeff(0, 2, -2.0);
        let c = sup_norm_simplex(&p);
        assert!((c.value - 1.0).abs() < 1e-12, "{}", c.value);
        assert!(c.refined);
        assert!((c.argmax - Point::new(a, b)).norm() < 1e-6);
    }

    #[test]
    fn edge_maximum_is_polished() {
        // along x₂ = 0 the maximum is at x₁ = 0.4123; the interior gradient points outward
        let a = 0.4123;
        let mut p = TotalDegreePolynomial::zero(2);
        p.set_coeff(0, 0, 1.0 - 3.0 * a * a);
        p.set_coeff(1, 0, 6.0 * a);
        p.set_coeff(2, 0, -3.0);
        p.set_coeff(0, 1, -0.5);
        let c = sup_norm_simplex(&p);
        assert!((c.value - 1.0).abs() < 1e-12, "{}", c.value);
        assert!((c.argmax - Point::new(a, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn projection() {
        assert_eq!(project(Point::new(0.2, 0.2)), Point::new(0.2, 0.2));
        assert_eq!(project(Point::new(1.0, 1.0)), Point::new(0.5, 0.5));
        assert_eq!(project(Point::new(-1.0, -1.0)), Point::zeros());
        assert_eq!(project(Point::new(0.5, -1.0)), Point::new(0.5, 0.0));
    }
}
