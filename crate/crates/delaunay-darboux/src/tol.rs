//! Pinned tolerances and finite-difference parameters.
//!
//! Every residual threshold used by the verification checks and the test
//! suites is defined here, not inline at the call sites.

/// Below this norm a quaternion is treated as zero and not inverted.
/// Double precision with values of order 1..1e2 throughout.
pub const EPS_INV: f64 = 1e-14;

/// Target relative accuracy of the special functions (Carlson integrals,
/// Jacobi functions). Leaves headroom for downstream 1e-8 residuals.
pub const ELLIPTIC_TARGET: f64 = 1e-12;

/// |t^2| below this marks a branch point (t = 0) of the spectral data.
pub const BRANCH_POINT_TOL: f64 = 1e-12;

/// |mu|, |mu - 1| below this are rejected as excluded spectral parameters.
pub const EXCLUDED_PARAM_TOL: f64 = 1e-12;

/// |m t - round(m t)| below this counts as an integer, i.e. the section has
/// a multiplier on the m-fold cover.
pub const CLOSURE_INT_TOL: f64 = 1e-9;

/// Relative tolerance of the adaptive integrator behind the section ODE
/// backend.
pub const ODE_TOL: f64 = 1e-12;

/// Residual bound for parallel sections inserted into their defining PDEs.
pub const PDE_RESIDUAL_TOL: f64 = 1e-8;

/// Step for 4th-order central first derivatives.
pub const FD_H1: f64 = 1e-5;

/// Step for 4th-order central second derivatives.
pub const FD_H2: f64 = 1e-4;

/// |H - 1| bound for the finite-difference mean curvature oracle.
pub const CURVATURE_TOL: f64 = 1e-4;

/// Sup-norm bound for closure of a transform on its cover.
pub const CLOSURE_TOL: f64 = 1e-8;

/// Normalized standard deviation bound for |f_hat - (f + N)| over a grid.
pub const CONSTANT_DISTANCE_TOL: f64 = 1e-8;

/// Conformality residual bound for exact surfaces of revolution.
pub const CONFORMAL_TOL_BASE: f64 = 1e-8;

/// Conformality residual bound for Darboux transforms (FD partials only).
pub const CONFORMAL_TOL_TRANSFORM: f64 = 1e-6;

/// Normalized one-sided Hausdorff bound for the dihedral symmetry check.
/// Heuristic point-set check, calibrated on generated data.
pub const DIHEDRAL_TOL: f64 = 2e-2;

/// Sup pointwise distance bound between pipelines that differ only in the
/// order of their stages.
pub const PERMUTE_ORDER_TOL: f64 = 1e-7;

/// Backend agreement bound: closed-form c_pm vs ODE continuation, wherever
/// both are defined.
pub const BACKEND_AGREEMENT_TOL: f64 = 1e-8;
