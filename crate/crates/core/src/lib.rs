//! Bernstein-type bounds for the derivative of multivariate polynomials on
//! convex bodies.
//!
//! Two independent routes to the directional Bernstein factor are provided:
//!
//! - the inscribed-ellipse route: [`ellipse::best_ellipse`] computes the best
//!   ellipse constant `E(K, x, y)` for any convex polygon, and
//!   [`simplex::ellipse_constant_dir`] gives its closed form on the simplex;
//! - the pluripotential route: [`simplex::siciak_extremal`] evaluates the
//!   extremal function of the simplex and [`simplex::baran_derivative`] its
//!   normal derivative `D_y⁺V(x)`.
//!
//! [`kernel`] intersects families of directional bounds into convex kernel
//! sets, [`bernstein`] checks the bounds against explicit polynomials, and
//! [`sweep`] tabulates the comparison on the triangle.

pub mod bernstein;
pub mod ellipse;
pub mod error;
pub mod geometry;
pub mod kernel;
pub mod numeric;
pub mod simplex;
pub mod sweep;

pub use error::{Error, Result};
pub use geometry::{ConvexPolygon, InteriorPoint, Point, UnitDirection};
pub use simplex::SimplexPoint;
