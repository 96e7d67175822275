//! Planar convex geometry on polygons.

mod functionals;
mod polygon;
mod text;

pub use functionals::{
    alpha, chord_balance, gamma, gamma_with_samples, maximal_chord, maximal_chord_in, min_width,
    minkowski_gauge, ray_exit, support, width, GammaEstimate, GAMMA_SWEEP_SAMPLES,
};
pub(crate) use polygon::{clip_convex, simplify};
pub use polygon::{
    signed_area, ConvexPolygon, HalfPlane, InteriorPoint, Point, UnitDirection, BOUNDARY_TOL,
};
pub use text::{format_polygon, parse_polygon};
