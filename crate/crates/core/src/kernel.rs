//! Kernel sets of directional derivative bounds.
//!
//! A family `r(θ)` of bounds on `|⟨v, y(θ)⟩|` describes the star-shaped region
//! `H = {t·y(θ) : |t| ≤ r(θ)}`. Intersecting the slabs `|⟨v, y(θ)⟩| ≤ r(θ)`
//! gives the convex, origin-symmetric kernel `H̃ ⊆ H`, which still contains
//! every normalized gradient. On the triangle the kernel of the ellipse (or
//! pluripotential) bounds is an explicit ellipse, see [`kernel_ellipse_closed_form`].

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{clip_convex, simplify, ConvexPolygon, HalfPlane, Point};
use crate::numeric::adaptive_simpson;
use crate::simplex::{self, SimplexPoint};

/// Default number of directions for kernel approximations.
pub const DEFAULT_DIRECTIONS: usize = 2048;

/// `r(θ)` sampled at `θ_k = kπ/N`, `k = 0..N`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectionalBoundTable {
    thetas: Vec<f64>,
    r: Vec<f64>,
}

impl DirectionalBoundTable {
    pub fn new(r: Vec<f64>) -> Result<Self> {
        let n = r.len();
        if n < 16 {
            return Err(Error::InvalidTable(format!(
                "need at least 16 directions, got {n}"
            )));
        }
        if let Some(bad) = r.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::InvalidTable(format!(
                "bounds must be positive and finite, found {bad}"
            )));
        }
        let thetas = (0..n).map(|k| PI * k as f64 / n as f64).collect();
        Ok(Self { thetas, r })
    }

    pub fn from_fn<F>(n: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> f64,
    {
        Self::new((0..n).map(|k| f(PI * k as f64 / n as f64)).collect())
    }

    /// Kroó–Révész bounds on the triangle at `x`.
    pub fn kroo_revesz(x: &SimplexPoint, n: usize) -> Result<Self> {
        simplex::alpha_simplex(x)?;
        Self::from_fn(n, |t| {
            simplex::kr_bound_dir(x, t).expect("planar point checked")
        })
    }

    /// Exact ellipse / pluripotential bounds `D_y⁺V_Δ(x)` on the triangle.
    pub fn baran(x: &SimplexPoint, n: usize) -> Result<Self> {
        simplex::alpha_simplex(x)?;
        Self::from_fn(n, |t| {
            simplex::baran_derivative(x, &[t.cos(), t.sin()])
                .expect("planar point checked")
                .value()
        })
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn bounds(&self) -> &[f64] {
        &self.r
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelRegion {
    pub polygon: ConvexPolygon,
    pub n_halfplanes: usize,
    pub area: f64,
}

impl KernelRegion {
    /// Largest distance from a vertex `v` to the nearest vertex of `−P`.
    pub fn symmetry_defect(&self) -> f64 {
        let v = self.polygon.vertices();
        v.iter()
            .map(|p| {
                v.iter()
                    .map(|q| (p + q).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }

    pub fn max_norm(&self) -> f64 {
        self.polygon
            .vertices()
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }
}

/// Outer polygonal approximation of `H̃`: a bounding square of half-width
/// `2·max r` clipped by the `2N` half-planes `±⟨v, y(θ)⟩ ≤ r(θ)`.
pub fn kernel_intersect(table: &DirectionalBoundTable) -> Result<KernelRegion> {
    if table.r.iter().any(|v| !(*v > 0.0)) {
        return Err(Error::InvalidTable("bounds must be positive".into()));
    }
    let half = 2.0 * table.r.iter().copied().fold(0.0, f64::max);
    let mut poly = vec![
        Point::new(-half, -half),
        Point::new(half, -half),
        Point::new(half, half),
        Point::new(-half, half),
    ];
    for (&theta, &r) in table.thetas.iter().zip(&table.r) {
        let y = Point::new(theta.cos(), theta.sin());
        for normal in [y, -y] {
            let plane = HalfPlane::new(normal, r).expect("unit normal");
            poly = clip_convex(&poly, &plane);
        }
    }
    let polygon = ConvexPolygon::new(simplify(poly))?;
    let area = polygon.area();
    Ok(KernelRegion {
        polygon,
        n_halfplanes: 2 * table.len(),
        area,
    })
}

/// Area `∫₀^π r(θ)² dθ` of the star-shaped region `{t·y(θ) : |t| ≤ r(θ)}` for a
/// π-periodic `r`, integrated piecewise between the given breakpoints.
pub fn polar_area<F>(r: F, breakpoints: &[f64], tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    let f = |t: f64| {
        let v = r(t);
        v * v
    };
    let mut pts = vec![0.0];
    pts.extend(breakpoints.iter().copied().filter(|b| *b > 0.0 && *b < PI));
    pts.push(PI);
    pts.windows(2)
        .map(|w| adaptive_simpson(&f, w[0], w[1], tol))
        .sum()
}

/// Area of the "fleecy cloud" `H(Δ, x)` swept by the Kroó–Révész bounds.
pub fn cloud_area(x: &SimplexPoint) -> Result<f64> {
    let r0 = simplex::kr_bound_dir(x, PI / 4.0)?;
    let tol = 1e-10 * r0 * r0;
    Ok(polar_area(
        |t| simplex::kr_bound_dir(x, t).expect("planar point checked"),
        &[PI / 2.0, 3.0 * PI / 4.0],
        tol,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

/// The three disks through the origin whose union above the horizontal axis
/// is the upper half of `H(Δ, x)`: one per branch of the maximal chord.
pub fn kr_cloud_disks(x: &SimplexPoint) -> Result<[Disk; 3]> {
    let k = 2.0 / (1.0 - simplex::alpha_simplex(x)?).sqrt();
    Ok([
        Disk {
            center: Point::new(0.5 * k, 0.5 * k),
            radius: k * std::f64::consts::FRAC_1_SQRT_2,
        },
        Disk {
            center: Point::new(0.0, 0.5 * k),
            radius: 0.5 * k,
        },
        Disk {
            center: Point::new(-0.5 * k, 0.0),
            radius: 0.5 * k,
        },
    ])
}

/// Area of `(⋃ disks) ∩ {y ≥ 0}` by integrating vertical slice lengths.
pub fn upper_disk_union_area(disks: &[Disk]) -> f64 {
    let slice = |x: f64| -> f64 {
        let mut spans: Vec<(f64, f64)> = disks
            .iter()
            .filter_map(|d| {
                let dx = x - d.center.x;
                let h2 = d.radius * d.radius - dx * dx;
                if h2 <= 0.0 {
                    return None;
                }
                let h = h2.sqrt();
                let lo = (d.center.y - h).max(0.0);
                let hi = d.center.y + h;
                (hi > lo).then_some((lo, hi))
            })
            .collect();
        spans.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut total = 0.0;
        let mut cur: Option<(f64, f64)> = None;
        for (lo, hi) in spans {
            match cur {
                Some((cl, ch)) if lo <= ch => cur = Some((cl, ch.max(hi))),
                Some((cl, ch)) => {
                    total += ch - cl;
                    cur = Some((lo, hi));
                }
                None => cur = Some((lo, hi)),
            }
        }
        if let Some((cl, ch)) = cur {
            total += ch - cl;
        }
        total
    };

    // Breakpoints: horizontal extents, crossings with the axis, and pairwise
    // circle intersections.
    let mut xs = Vec::new();
    for d in disks {
        xs.push(d.center.x - d.radius);
        xs.push(d.center.x + d.radius);
        let h2 = d.radius * d.radius - d.center.y * d.center.y;
        if h2 > 0.0 {
            xs.push(d.center.x - h2.sqrt());
            xs.push(d.center.x + h2.sqrt());
        }
    }
    for (i, a) in disks.iter().enumerate() {
        for b in &disks[i + 1..] {
            let delta = b.center - a.center;
            let dist = delta.norm();
            if dist == 0.0 || dist > a.radius + b.radius || dist < (a.radius - b.radius).abs() {
                continue;
            }
            let along = (a.radius * a.radius - b.radius * b.radius + dist * dist) / (2.0 * dist);
            let h = (a.radius * a.radius - along * along).max(0.0).sqrt();
            let mid = a.center + delta * (along / dist);
            let perp = Point::new(-delta.y, delta.x) / dist;
            xs.push((mid + perp * h).x);
            xs.push((mid - perp * h).x);
        }
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    xs.windows(2)
        .map(|w| adaptive_simpson(&slice, w[0], w[1], 1e-12))
        .sum()
}

/// Closed-form kernel ellipse `a u₁² + b u₂² − c u₁u₂ ≤ 1` of the exact
/// bounds on the triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelEllipse {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// `D = √((a − b)² + c²)`.
    pub d: f64,
    /// `π/4` when `a = b`, else `½ arctan(c/(a − b))`.
    pub rotation: f64,
    /// Minor semi-axis `√(2/(a + b + D))`.
    pub minor: f64,
    /// Major semi-axis `√(2/(a + b − D))`.
    pub major: f64,
}

impl KernelEllipse {
    pub fn form(&self, u: &Point) -> f64 {
        self.a * u.x * u.x + self.b * u.y * u.y - self.c * u.x * u.y
    }

    pub fn contains(&self, u: &Point, slack: f64) -> bool {
        self.form(u) <= 1.0 + slack
    }

    pub fn area(&self) -> f64 {
        PI * self.minor * self.major
    }

    /// Unit vector along the major axis.
    pub fn major_axis(&self) -> Point {
        let lambda = 0.5 * (self.a + self.b - self.d);
        let v = Point::new(0.5 * self.c, self.a - lambda);
        if v.norm() > 0.0 {
            v.normalize()
        } else {
            Point::new(1.0, 0.0)
        }
    }
}

pub fn kernel_ellipse_closed_form(x: &SimplexPoint) -> Result<KernelEllipse> {
    let d = simplex::discriminant(x)?;
    let (x1, x2) = (x.coords()[0], x.coords()[1]);
    let a = x1 * (1.0 - x1);
    let b = x2 * (1.0 - x2);
    let c = 2.0 * x1 * x2;
    let rotation = if a == b {
        PI / 4.0
    } else {
        0.5 * (c / (a - b)).atan()
    };
    Ok(KernelEllipse {
        a,
        b,
        c,
        d,
        rotation,
        minor: (2.0 / (a + b + d)).sqrt(),
        major: (2.0 / (a + b - d)).sqrt(),
    })
}

/// `area H̃(Δ, x) = π/√(x₁x₂(1 − x₁ − x₂))`.
pub fn kernel_area_closed(x: &SimplexPoint) -> Result<f64> {
    simplex::alpha_simplex(x)?;
    let (x1, x2, x3) = (x.coords()[0], x.coords()[1], x.slack());
    Ok(PI / (x1 * x2 * x3).sqrt())
}

/// `max_{v ∈ H̃} ‖v‖`, the major semi-axis of the kernel ellipse.
pub fn kernel_max_norm(x: &SimplexPoint) -> Result<f64> {
    Ok(kernel_ellipse_closed_form(x)?.major)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> SimplexPoint {
        SimplexPoint::centroid()
    }

    #[test]
    fn isotropic_table_gives_disk() {
        let t = DirectionalBoundTable::new(vec![1.0; 1024]).unwrap();
        let k = kernel_intersect(&t).unwrap();
        assert_eq!(k.polygon.len(), 2048);
        assert!((k.area - PI).abs() / PI < 1e-4);
        assert!(k.area >= PI);
        assert!(k.symmetry_defect() < 1e-9);
    }

    #[test]
    fn table_validation() {
        assert!(DirectionalBoundTable::new(vec![1.0; 8]).is_err());
        let mut r = vec![1.0; 32];
        r[3] = 0.0;
        assert!(DirectionalBoundTable::new(r).is_err());
        let p3 = SimplexPoint::new(vec![0.1, 0.1, 0.1]).unwrap();
        assert!(DirectionalBoundTable::baran(&p3, 32).is_err());
    }

    #[test]
    fn kernel_ellipse_at_centroid() {
        let e = kernel_ellipse_closed_form(&m()).unwrap();
        for v in [e.a, e.b, e.c, e.d] {
            assert!((v - 2.0 / 9.0).abs() < 1e-15);
        }
        assert!((e.minor - 3f64.sqrt()).abs() < 1e-14);
        assert!((e.major - 3.0).abs() < 1e-14);
        assert!((e.rotation - PI / 4.0).abs() < 1e-15);
        assert!((e.area() - 16.3242).abs() < 1e-4);
        let ax = e.major_axis();
        assert!((ax - Point::new(1.0, 1.0).normalize()).norm() < 1e-14);
    }

    #[test]
    fn kernel_ellipse_at_quarter() {
        let x = SimplexPoint::planar(0.25, 0.25).unwrap();
        let e = kernel_ellipse_closed_form(&x).unwrap();
        assert!((e.a - 3.0 / 16.0).abs() < 1e-15);
        assert!((e.c - 0.125).abs() < 1e-15);
        assert!((e.d - 0.125).abs() < 1e-15);
        assert!((e.minor - 2.0).abs() < 1e-14);
        assert!((e.major - 2.0 * 2f64.sqrt()).abs() < 1e-14);
        assert!((kernel_area_closed(&x).unwrap() - 4.0 * PI * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn major_axis_is_principal() {
        for &(x1, x2) in &[(0.1, 0.3), (0.6, 0.2), (0.05, 0.05), (0.3, 0.1)] {
            let e = kernel_ellipse_closed_form(&SimplexPoint::planar(x1, x2).unwrap()).unwrap();
            let ax = e.major_axis();
            assert!((e.form(&(ax * e.major)) - 1.0).abs() < 1e-12);
            let perp = Point::new(-ax.y, ax.x);
            assert!((e.form(&(perp * e.minor)) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn cloud_area_at_centroid() {
        let a = cloud_area(&m()).unwrap();
        assert!((a - (9.0 + 4.5 * PI)).abs() < 1e-8);
        assert!((a - 23.137).abs() < 1e-3);
    }

    #[test]
    fn disks_at_centroid_match_description() {
        let d = kr_cloud_disks(&m()).unwrap();
        let s = 1.5f64.sqrt();
        assert!(
            (d[0].center - Point::new(s, s)).norm() < 1e-14
                && (d[0].radius - 3f64.sqrt()).abs() < 1e-14
        );
        assert!(
            (d[1].center - Point::new(0.0, s)).norm() < 1e-14 && (d[1].radius - s).abs() < 1e-14
        );
        assert!(
            (d[2].center - Point::new(-s, 0.0)).norm() < 1e-14 && (d[2].radius - s).abs() < 1e-14
        );
    }

    #[test]
    fn disk_union_of_single_disks() {
        let unit = Disk {
            center: Point::zeros(),
            radius: 1.0,
        };
        assert!((upper_disk_union_area(&[unit]) - PI / 2.0).abs() < 1e-7);
        // the disk touching the axis at the origin overlaps the half disk in a lens
        let shifted = Disk {
            center: Point::new(0.0, 1.0),
            radius: 1.0,
        };
        assert!(
            (upper_disk_union_area(&[shifted, unit])
                - (1.5 * PI - (2.0 * PI / 3.0 - 3f64.sqrt() / 2.0)))
                .abs()
                < 1e-7
        );
    }

    #[test]
    fn max_norm_identity() {
        for &(x1, x2) in &[
            (1.0 / 3.0, 1.0 / 3.0),
            (0.25, 0.25),
            (0.7, 0.1),
            (0.01, 0.5),
        ] {
            let x = SimplexPoint::planar(x1, x2).unwrap();
            let prod = kernel_max_norm(&x).unwrap() * simplex::ellipse_constant(&x).unwrap();
            assert!((prod - 1.0).abs() < 1e-12);
        }
        assert!((kernel_max_norm(&m()).unwrap() - 3.0).abs() < 1e-14);
    }
}
