use std::f64::consts::PI;

use nalgebra::Vector2;

use crate::error::{Error, Result};

/// A point (or free vector) of the plane.
pub type Point = Vector2<f64>;

/// Points closer than this to an edge line count as boundary points.
pub const BOUNDARY_TOL: f64 = 1e-12;

#[inline]
pub(crate) fn cross(a: &Point, b: &Point) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Closed half-plane `⟨normal, p⟩ ≤ offset` with unit `normal`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane {
    pub normal: Point,
    pub offset: f64,
}

impl HalfPlane {
    /// Normalizes `normal`; returns `None` for a zero normal.
    pub fn new(normal: Point, offset: f64) -> Option<Self> {
        let len = normal.norm();
        if len == 0.0 || !len.is_finite() || !offset.is_finite() {
            return None;
        }
        Some(Self {
            normal: normal / len,
            offset: offset / len,
        })
    }

    /// `offset - ⟨normal, p⟩`: positive strictly inside, zero on the line.
    #[inline]
    pub fn slack(&self, p: &Point) -> f64 {
        self.offset - self.normal.dot(p)
    }
}

/// Unit vector `(cos θ, sin θ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitDirection {
    theta: f64,
    v: Point,
}

impl UnitDirection {
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            theta,
            v: Point::new(c, s),
        }
    }

    /// Normalizes a nonzero vector.
    pub fn from_vector(v: Point) -> Result<Self> {
        let len = v.norm();
        if len == 0.0 || !len.is_finite() {
            return Err(Error::ZeroDirection);
        }
        Ok(Self {
            theta: v.y.atan2(v.x),
            v: v / len,
        })
    }

    #[inline]
    pub fn theta(&self) -> f64 {
        self.theta
    }

    #[inline]
    pub fn vector(&self) -> Point {
        self.v
    }

    pub fn opposite(&self) -> Self {
        Self {
            theta: self.theta + PI,
            v: -self.v,
        }
    }
}

/// Compact convex polygon with counterclockwise vertices and nonzero area.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    planes: Vec<HalfPlane>,
}

/// A validation failure, optionally pinned to a vertex index.
pub(crate) struct Invalid {
    pub vertex: Option<usize>,
    pub message: String,
}

pub(crate) fn validate(vertices: &[Point]) -> std::result::Result<(), Invalid> {
    let n = vertices.len();
    if n < 3 {
        return Err(Invalid {
            vertex: None,
            message: format!("need at least 3 vertices, got {n}"),
        });
    }
    if let Some(i) = vertices
        .iter()
        .position(|v| !(v.x.is_finite() && v.y.is_finite()))
    {
        return Err(Invalid {
            vertex: Some(i),
            message: "non-finite coordinate".into(),
        });
    }
    let scale = vertices
        .iter()
        .map(|v| v.amax())
        .fold(0.0, f64::max)
        .max(1e-300);
    for i in 0..n {
        let j = (i + 1) % n;
        if (vertices[j] - vertices[i]).norm() <= 1e-14 * scale {
            return Err(Invalid {
                vertex: Some(j),
                message: format!("vertex {j} repeats vertex {i}"),
            });
        }
    }
    let mut turning = 0.0;
    for i in 0..n {
        let e1 = vertices[(i + 1) % n] - vertices[i];
        let e2 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        let c = cross(&e1, &e2);
        if c < -1e-10 * e1.norm() * e2.norm() {
            return Err(Invalid {
                vertex: Some((i + 1) % n),
                message: format!(
                    "not convex or not counterclockwise at vertex {}",
                    (i + 1) % n
                ),
            });
        }
        turning += c.atan2(e1.dot(&e2));
    }
    if (turning - 2.0 * PI).abs() > 1e-6 {
        return Err(Invalid {
            vertex: None,
            message: format!(
                "boundary winds {:.3} turns; expected one counterclockwise turn",
                turning / (2.0 * PI)
            ),
        });
    }
    if signed_area(vertices) <= 1e-14 * scale * scale {
        return Err(Invalid {
            vertex: None,
            message: "zero area".into(),
        });
    }
    Ok(())
}

/// Shoelace formula; positive for counterclockwise order.
pub fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| cross(&vertices[i], &vertices[(i + 1) % n]))
        .sum::<f64>()
        * 0.5
}

/// Drops repeated and collinear vertices left behind by clipping or merging.
pub(crate) fn simplify(points: Vec<Point>) -> Vec<Point> {
    let scale = points
        .iter()
        .map(|v| v.amax())
        .fold(0.0, f64::max)
        .max(1e-300);
    let mut pts: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if pts
            .last()
            .is_none_or(|q: &Point| (p - q).norm() > 1e-12 * scale)
        {
            pts.push(p);
        }
    }
    while pts.len() > 1 && (pts[0] - pts[pts.len() - 1]).norm() <= 1e-12 * scale {
        pts.pop();
    }
    loop {
        let n = pts.len();
        if n < 3 {
            return pts;
        }
        let mut keep = vec![true; n];
        let mut changed = false;
        for i in 0..n {
            let prev = pts[(i + n - 1) % n];
            let next = pts[(i + 1) % n];
            let e1 = pts[i] - prev;
            let e2 = next - pts[i];
            if cross(&e1, &e2).abs() <= 1e-13 * e1.norm() * e2.norm() && e1.dot(&e2) > 0.0 {
                keep[i] = false;
                changed = true;
                break;
            }
        }
        if !changed {
            return pts;
        }
        pts = pts
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();
    }
}

/// Sutherland–Hodgman step: the part of a convex polygon inside `plane`.
pub(crate) fn clip_convex(vertices: &[Point], plane: &HalfPlane) -> Vec<Point> {
    let n = vertices.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = vertices[i];
        let next = vertices[(i + 1) % n];
        let sc = plane.slack(&cur);
        let sn = plane.slack(&next);
        if sc >= 0.0 {
            out.push(cur);
        }
        if (sc >= 0.0) != (sn >= 0.0) {
            let t = sc / (sc - sn);
            out.push(cur + (next - cur) * t);
        }
    }
    out
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        validate(&vertices).map_err(|e| Error::InvalidPolygon(e.message))?;
        let n = vertices.len();
        let planes = (0..n)
            .map(|i| {
                let a = vertices[i];
                let e = vertices[(i + 1) % n] - a;
                let normal = Point::new(e.y, -e.x);
                HalfPlane::new(normal, normal.dot(&a)).expect("validated edges are nonzero")
            })
            .collect();
        Ok(Self { vertices, planes })
    }

    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    /// The standard triangle with vertices `(0,0)`, `(1,0)`, `(0,1)`.
    pub fn standard_triangle() -> Self {
        Self::from_coords(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap()
    }

    /// Axis-parallel rectangle `[x0, x1] × [y0, y1]`.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::from_coords(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1)])
    }

    /// Convex hull of a point cloud (Andrew's monotone chain).
    pub fn convex_hull(points: &[Point]) -> Result<Self> {
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::InvalidPolygon(
                "hull of fewer than 3 distinct points".into(),
            ));
        }
        let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
                Box::new(pts.iter())
            } else {
                Box::new(pts.iter().rev())
            };
            for p in iter {
                while hull.len() >= start + 2 {
                    let a = hull[hull.len() - 2];
                    let b = hull[hull.len() - 1];
                    if cross(&(b - a), &(p - a)) <= 0.0 {
                        hull.pop();
                    } else {
                        break;
                    }
                }
                hull.push(*p);
            }
            hull.pop();
        }
        Self::new(simplify(hull))
    }

    #[inline]
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Outward edge half-planes; edge `i` runs from vertex `i` to vertex `i+1`.
    #[inline]
    pub fn halfplanes(&self) -> &[HalfPlane] {
        &self.planes
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn centroid(&self) -> Point {
        let n = self.vertices.len();
        let mut acc = Point::zeros();
        let mut a2 = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = cross(&p, &q);
            acc += (p + q) * w;
            a2 += w;
        }
        acc / (3.0 * a2)
    }

    /// Brute force over vertex pairs.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max((v[i] - v[j]).norm());
            }
        }
        d
    }

    /// Minimum over edges of the distance from `p` to the edge line; negative outside.
    pub fn signed_distance(&self, p: &Point) -> f64 {
        self.planes
            .iter()
            .map(|h| h.slack(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        self.signed_distance(p) >= -tol
    }

    /// Validates that `p` lies at least [`BOUNDARY_TOL`] inside every edge.
    pub fn interior(&self, p: Point) -> Result<InteriorPoint<'_>> {
        if !(self.signed_distance(&p) > BOUNDARY_TOL) {
            return Err(Error::NotInterior { x: p.x, y: p.y });
        }
        Ok(InteriorPoint {
            body: self,
            point: p,
        })
    }

    pub fn translate(&self, by: Point) -> Self {
        Self::new(self.vertices.iter().map(|v| v + by).collect())
            .expect("translation keeps validity")
    }

    /// Point reflection `p ↦ −p`.
    pub fn negate(&self) -> Self {
        Self::new(self.vertices.iter().map(|v| -v).collect())
            .expect("point reflection keeps validity")
    }

    /// Reflection across the horizontal axis, `(x, y) ↦ (x, −y)`.
    pub fn mirror(&self) -> Self {
        let mut v: Vec<Point> = self
            .vertices
            .iter()
            .map(|p| Point::new(p.x, -p.y))
            .collect();
        v.reverse();
        Self::new(v).expect("reflection keeps validity")
    }

    /// Intersection with a half-plane; errors if the remainder is degenerate.
    pub fn clip(&self, plane: &HalfPlane) -> Result<Self> {
        Self::new(simplify(clip_convex(&self.vertices, plane)))
    }

    /// Minkowski sum by merging the edge sequences in angular order.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        fn rotate_to_bottom(v: &[Point]) -> Vec<Point> {
            let start = (0..v.len())
                .min_by(|&i, &j| v[i].y.total_cmp(&v[j].y).then(v[i].x.total_cmp(&v[j].x)))
                .unwrap();
            v[start..]
                .iter()
                .chain(v[..start].iter())
                .copied()
                .collect()
        }
        let p = rotate_to_bottom(&self.vertices);
        let q = rotate_to_bottom(&other.vertices);
        let (n, m) = (p.len(), q.len());
        let mut out = Vec::with_capacity(n + m);
        let (mut i, mut j) = (0, 0);
        while i < n || j < m {
            out.push(p[i % n] + q[j % m]);
            let ep = p[(i + 1) % n] - p[i % n];
            let eq = q[(j + 1) % m] - q[j % m];
            let c = if i == n {
                -1.0
            } else if j == m {
                1.0
            } else {
                cross(&ep, &eq)
            };
            if c >= 0.0 {
                i += 1;
            }
            if c <= 0.0 {
                j += 1;
            }
        }
        Self::new(simplify(out)).expect("sum of convex bodies is a convex body")
    }

    /// The difference body `K − K = K ⊕ (−K)`, centrally symmetric.
    pub fn difference_body(&self) -> Self {
        self.minkowski_sum(&self.negate())
    }
}

/// A point strictly inside a specific polygon.
#[derive(Clone, Copy, Debug)]
pub struct InteriorPoint<'a> {
    body: &'a ConvexPolygon,
    point: Point,
}

impl<'a> InteriorPoint<'a> {
    #[inline]
    pub fn body(&self) -> &'a ConvexPolygon {
        self.body
    }

    #[inline]
    pub fn point(&self) -> Point {
        self.point
    }
}
