//! Closed forms on the standard simplex `Δ_d = {x ≥ 0, Σxᵢ ≤ 1}`.
//!
//! The inscribed-ellipse constant `E(Δ, x, y)` and the normal derivative
//! `D_y⁺V_Δ(x)` of the extremal function are reciprocal to each other; both
//! are provided so the identity can be checked rather than assumed. Planar
//! quantities (`τ`, `α`, `E(Δ, x)`, the equilibrium density and the
//! Kroó–Révész bound) require `d = 2`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::BOUNDARY_TOL;

/// A point strictly inside the standard simplex of dimension `d ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    /// Every coordinate and the slack `1 − Σxᵢ` must exceed [`BOUNDARY_TOL`].
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        let slack = 1.0 - coords.iter().sum::<f64>();
        let ok = !coords.is_empty()
            && coords.iter().all(|c| c.is_finite() && *c > BOUNDARY_TOL)
            && slack > BOUNDARY_TOL;
        if ok {
            Ok(Self { coords })
        } else {
            Err(Error::OutsideSimplex(coords))
        }
    }

    pub fn planar(x1: f64, x2: f64) -> Result<Self> {
        Self::new(vec![x1, x2])
    }

    /// The centroid `M = (1/3, 1/3)` of the triangle.
    pub fn centroid() -> Self {
        Self::planar(1.0 / 3.0, 1.0 / 3.0).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// The last barycentric coordinate `1 − Σxᵢ`.
    pub fn slack(&self) -> f64 {
        1.0 - self.coords.iter().sum::<f64>()
    }

    fn planar_coords(&self) -> Result<(f64, f64, f64)> {
        match self.coords.as_slice() {
            &[x1, x2] => Ok((x1, x2, self.slack())),
            other => Err(Error::Dimension {
                expected: 2,
                got: other.len(),
            }),
        }
    }
}

/// `D_y⁺V_Δ(x)` or `1/E(Δ, x, y)`: a per-degree Bernstein factor.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct DirectionalBoundValue(f64);

impl DirectionalBoundValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// `Σ yᵢ²/xᵢ + (Σ yᵢ)²/(1 − Σ xᵢ)` for `y` rescaled to unit length.
fn quadratic_in_direction(x: &SimplexPoint, y: &[f64]) -> Result<f64> {
    if y.len() != x.dim() {
        return Err(Error::Dimension {
            expected: x.dim(),
            got: y.len(),
        });
    }
    let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    if !(norm > 0.0 && norm.is_finite()) {
        return Err(Error::ZeroDirection);
    }
    let mut q = 0.0;
    let mut sum = 0.0;
    for (&xi, &yi) in x.coords.iter().zip(y) {
        let u = yi / norm;
        q += u * u / xi;
        sum += u;
    }
    Ok(q + sum * sum / x.slack())
}

/// Best inscribed-ellipse constant `E(Δ, x, y)`.
///
/// `y` is normalized first; the raw expression is homogeneous of degree −1
/// in `y`.
pub fn ellipse_constant_dir(x: &SimplexPoint, y: &[f64]) -> Result<f64> {
    Ok(quadratic_in_direction(x, y)?.sqrt().recip())
}

/// Normal derivative `D_y⁺V_Δ(x)` of the simplex extremal function, `y`
/// normalized first.
pub fn baran_derivative(x: &SimplexPoint, y: &[f64]) -> Result<DirectionalBoundValue> {
    Ok(DirectionalBoundValue(quadratic_in_direction(x, y)?.sqrt()))
}

/// `D(x) = √((x₁(1−x₁) − x₂(1−x₂))² + 4x₁²x₂²)`.
pub fn discriminant(x: &SimplexPoint) -> Result<f64> {
    let (x1, x2, _) = x.planar_coords()?;
    let a = x1 * (1.0 - x1);
    let b = x2 * (1.0 - x2);
    Ok((a - b).hypot(2.0 * x1 * x2))
}

/// `E(Δ, x) = min_y E(Δ, x, y)` on the triangle.
pub fn ellipse_constant(x: &SimplexPoint) -> Result<f64> {
    let (x1, x2, x3) = x.planar_coords()?;
    let d = discriminant(x)?;
    Ok((2.0 * x1 * x2 * x3 / (x1 * (1.0 - x1) + x2 * (1.0 - x2) + d)).sqrt())
}

/// `α(Δ, x) = 1 − 2 min(x₁, x₂, 1 − x₁ − x₂)`.
pub fn alpha_simplex(x: &SimplexPoint) -> Result<f64> {
    let (x1, x2, x3) = x.planar_coords()?;
    Ok(1.0 - 2.0 * x1.min(x2).min(x3))
}

/// Maximal chord of the triangle in direction `(cos φ, sin φ)`; π-periodic.
pub fn tau_simplex(phi: f64) -> f64 {
    let p = phi.rem_euclid(PI);
    let (s, c) = p.sin_cos();
    if p <= PI / 2.0 {
        1.0 / (c + s)
    } else if p <= 3.0 * PI / 4.0 {
        1.0 / s
    } else {
        -1.0 / c
    }
}

/// Density `2π/√(x₁x₂x₃)` of the equilibrium measure in the interior.
pub fn equilibrium_density(x: &SimplexPoint) -> Result<f64> {
    let (x1, x2, x3) = x.planar_coords()?;
    Ok(2.0 * PI / (x1 * x2 * x3).sqrt())
}

/// Kroó–Révész directional factor `2 / (τ(Δ, y) √(1 − α(Δ, x)))`.
pub fn kr_bound_dir(x: &SimplexPoint, phi: f64) -> Result<f64> {
    let alpha = alpha_simplex(x)?;
    Ok(2.0 / (tau_simplex(phi) * (1.0 - alpha).sqrt()))
}

/// A finite vector of `ℂ^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexVector(Vec<Complex64>);

impl ComplexVector {
    pub fn new(z: Vec<Complex64>) -> Result<Self> {
        if z.is_empty() || z.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(
                "complex vector must be nonempty and finite".into(),
            ));
        }
        Ok(Self(z))
    }

    /// `x + iεy` for real `x`, `y` of equal length.
    pub fn from_real_imag(x: &[f64], eps: f64, y: &[f64]) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                got: y.len(),
            });
        }
        Self::new(
            x.iter()
                .zip(y)
                .map(|(&a, &b)| Complex64::new(a, eps * b))
                .collect(),
        )
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }
}

/// Inverse Joukowski map `h(w) = w + √(w² − 1)`, branch with `|h| ≥ 1`.
///
/// Evaluated as `w + √(w−1)·√(w+1)` with principal roots and inverted when
/// the result falls inside the unit disk.
pub fn joukowski_inverse(w: Complex64) -> Complex64 {
    let h = w + (w - 1.0).sqrt() * (w + 1.0).sqrt();
    if h.norm() < 1.0 {
        h.inv()
    } else {
        h
    }
}

/// `|u| − Re u` without cancellation when `Re u > 0`.
fn modulus_excess(u: Complex64) -> f64 {
    if u.re > 0.0 {
        u.im * u.im / (u.norm() + u.re)
    } else {
        u.norm() - u.re
    }
}

/// Siciak–Zaharjuta extremal function of the simplex,
/// `V_Δ(z) = log|h(|z₁| + … + |z_d| + |1 − (z₁ + … + z_d)|)|`.
///
/// The argument `w` of `h` is real and at least 1, so `V_Δ = acosh(w)`. It is
/// computed from the excess `w − 1 = Σ(|zᵢ| − Re zᵢ) + (|1 − Σzᵢ| − Re(1 − Σzᵢ))`,
/// which keeps the small-`ε` regime `z = x + iεy` accurate.
pub fn siciak_extremal(z: &ComplexVector) -> f64 {
    let sum: Complex64 = z.0.iter().sum();
    let excess = z.0.iter().map(|&c| modulus_excess(c)).sum::<f64>()
        + modulus_excess(Complex64::new(1.0, 0.0) - sum);
    if excess <= 0.0 {
        return 0.0;
    }
    (excess + (excess * (excess + 2.0)).sqrt()).ln_1p()
}
