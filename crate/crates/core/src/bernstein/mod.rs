//! Explicit polynomials on the standard triangle: evaluation, sup-norm
//! certificates and randomized checks of the directional Bernstein bound.

mod poly;
mod supnorm;
mod verify;

pub use poly::{chebyshev_transplant, TotalDegreePolynomial};
pub use supnorm::{grid_resolution, sup_norm_simplex, SupNormCertificate};
pub use verify::{
    bernstein_ratio, bernstein_ratio_with_norm, bernstein_szego_1d, empirical_gradient_cloud,
    random_interior_point, transplant_catalog, trial_rng, verify_upper_bound, AffineFunctional,
    GradientSample, TrialRecord, VerifyReport, BOUNDARY_MARGIN, CATALOG_SIZE, MAX_DEGREE,
    VERIFY_SLACK,
};
