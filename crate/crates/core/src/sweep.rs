//! Grid sweeps over the interior of the triangle comparing the ellipse,
//! pluripotential and Kroó–Révész bounds.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{min_width, ConvexPolygon, BOUNDARY_TOL};
use crate::simplex::{self, SimplexPoint};

pub const DEFAULT_MARGIN: f64 = 1e-3;
/// Quotients below `1 + NEAR_EQUALITY` count as equality cases.
pub const NEAR_EQUALITY: f64 = 1e-6;

/// Barycentric lattice with `grid` points per side, shrunk so every
/// barycentric coordinate is at least `margin`: `x = m + (1 − 3m)(i, j)/(grid − 1)`
/// for `i + j ≤ grid − 1`, in row-major `(i, j)` order. The lattice is
/// invariant under permutations of the barycentric coordinates, so the three
/// medians are sampled.
pub fn interior_grid(grid: usize, margin: f64) -> Result<Vec<SimplexPoint>> {
    if grid < 2 {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least 2, got {grid}"
        )));
    }
    if !(margin > BOUNDARY_TOL && margin < 1.0 / 3.0) {
        return Err(Error::InvalidArgument(format!(
            "margin must lie in (0, 1/3), got {margin}"
        )));
    }
    let h = (1.0 - 3.0 * margin) / (grid - 1) as f64;
    let mut out = Vec::with_capacity(grid * (grid + 1) / 2);
    for i in 0..grid {
        for j in 0..grid - i {
            out.push(SimplexPoint::planar(
                margin + h * i as f64,
                margin + h * j as f64,
            )?);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub x1: f64,
    pub x2: f64,
    pub phi: f64,
    /// `1/E(Δ, x, y)`.
    pub inv_e: f64,
    pub kr: f64,
    /// `D_y⁺V_Δ(x)`.
    pub baran: f64,
    /// `kr / inv_e`, at least 1.
    pub quotient: f64,
}

impl ComparisonRow {
    pub fn new(x: &SimplexPoint, phi: f64) -> Result<Self> {
        let y = [phi.cos(), phi.sin()];
        let inv_e = 1.0 / simplex::ellipse_constant_dir(x, &y)?;
        let baran = simplex::baran_derivative(x, &y)?.value();
        let kr = simplex::kr_bound_dir(x, phi)?;
        let row = Self {
            x1: x.coords()[0],
            x2: x.coords()[1],
            phi,
            inv_e,
            kr,
            baran,
            quotient: kr / inv_e,
        };
        row.check()?;
        Ok(row)
    }

    fn check(&self) -> Result<()> {
        if self.quotient < 1.0 - 1e-9 {
            return Err(Error::InvariantViolated(format!(
                "quotient {} < 1 at ({}, {}), phi = {}",
                self.quotient, self.x1, self.x2, self.phi
            )));
        }
        if (self.inv_e - self.baran).abs() > 1e-12 * self.baran.max(1.0) {
            return Err(Error::InvariantViolated(format!(
                "1/E = {} differs from D = {} at ({}, {}), phi = {}",
                self.inv_e, self.baran, self.x1, self.x2, self.phi
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonSummary {
    pub min_quotient: f64,
    /// `[x₁, x₂, φ]` of the smallest quotient; first in row order on ties.
    pub argmin: [f64; 3],
    pub near_equality: usize,
    /// Distinct angles among the near-equality rows, increasing.
    pub near_equality_angles: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonSweep {
    pub grid: usize,
    pub dirs: usize,
    pub margin: f64,
    pub summary: ComparisonSummary,
    pub rows: Vec<ComparisonRow>,
}

/// Every grid point against `dirs` angles `φ_k = kπ/dirs`; rows are ordered
/// by point, then angle.
pub fn compare_sweep(grid: usize, dirs: usize, margin: f64) -> Result<ComparisonSweep> {
    if grid < 4 {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least 4, got {grid}"
        )));
    }
    if dirs == 0 {
        return Err(Error::InvalidArgument("need at least one direction".into()));
    }
    let points = interior_grid(grid, margin)?;
    let per_point: Vec<Vec<ComparisonRow>> = points
        .par_iter()
        .map(|x| {
            (0..dirs)
                .map(|k| ComparisonRow::new(x, PI * k as f64 / dirs as f64))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let rows: Vec<ComparisonRow> = per_point.into_iter().flatten().collect();

    let mut best = rows[0];
    let mut angles: Vec<f64> = Vec::new();
    let mut near_equality = 0;
    for r in &rows {
        if r.quotient < best.quotient {
            best = *r;
        }
        if r.quotient < 1.0 + NEAR_EQUALITY {
            near_equality += 1;
            if !angles.contains(&r.phi) {
                angles.push(r.phi);
            }
        }
    }
    angles.sort_by(f64::total_cmp);
    Ok(ComparisonSweep {
        grid,
        dirs,
        margin,
        summary: ComparisonSummary {
            min_quotient: best.quotient,
            argmin: [best.x1, best.x2, best.phi],
            near_equality,
            near_equality_angles: angles,
        },
        rows,
    })
}

/// `√3/2`.
pub fn alpha_constant() -> f64 {
    3f64.sqrt() / 2.0
}

/// `√(3 + √5)/2`.
pub fn alpha_squared_constant() -> f64 {
    (3.0 + 5f64.sqrt()).sqrt() / 2.0
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantSweepResult {
    /// `sup w(Δ)√(1 − α)/(2E(Δ, x))`.
    pub sup_ratio_alpha: f64,
    /// `sup w(Δ)√(1 − α²)/(2E(Δ, x))`.
    pub sup_ratio_alpha2: f64,
    pub argmax_alpha: [f64; 2],
    pub argmax_alpha2: [f64; 2],
    pub grid_resolution: usize,
    pub margin: f64,
}

pub fn constants_sweep(grid: usize, margin: f64) -> Result<ConstantSweepResult> {
    if grid < 50 {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least 50, got {grid}"
        )));
    }
    let w = min_width(&ConvexPolygon::standard_triangle());
    let points = interior_grid(grid, margin)?;
    let values: Vec<(f64, f64)> = points
        .par_iter()
        .map(|x| {
            let a = simplex::alpha_simplex(x)?;
            let e = simplex::ellipse_constant(x)?;
            Ok((
                w * (1.0 - a).sqrt() / (2.0 * e),
                w * (1.0 - a * a).sqrt() / (2.0 * e),
            ))
        })
        .collect::<Result<_>>()?;

    let argmax = |pick: fn(&(f64, f64)) -> f64| {
        let mut best = 0;
        for (i, v) in values.iter().enumerate() {
            if pick(v) > pick(&values[best]) {
                best = i;
            }
        }
        best
    };
    let (i1, i2) = (argmax(|v| v.0), argmax(|v| v.1));
    let at = |i: usize| [points[i].coords()[0], points[i].coords()[1]];
    let result = ConstantSweepResult {
        sup_ratio_alpha: values[i1].0,
        sup_ratio_alpha2: values[i2].1,
        argmax_alpha: at(i1),
        argmax_alpha2: at(i2),
        grid_resolution: grid,
        margin,
    };
    if result.sup_ratio_alpha > alpha_constant() + 1e-6
        || result.sup_ratio_alpha2 > alpha_squared_constant() + 1e-6
    {
        return Err(Error::InvariantViolated(format!(
            "constant sweep exceeds its bound: {} / {}",
            result.sup_ratio_alpha, result.sup_ratio_alpha2
        )));
    }
    Ok(result)
}
