//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Quaternion inversion requested for a near-zero quaternion.
    #[error("quaternion with |q| = {norm:.3e} is too close to zero to invert")]
    NearZeroQuaternion { norm: f64 },

    /// Elliptic parameter outside [0, 1).
    #[error("elliptic parameter M = {m} is outside [0, 1)")]
    ParameterOutOfRange { m: f64 },

    /// Pole of the third-kind integrand lies on the integration path.
    #[error("characteristic n = {n} puts a pole on the integration path to phi = {phi}")]
    SingularCharacteristic { n: f64, phi: f64 },

    /// Necksize outside (-inf, 1/2] \ {0}.
    #[error("necksize r = {r} is invalid (need r <= 1/2 and r != 0)")]
    InvalidNecksize { r: f64 },

    /// Spectral parameter 0 or 1 (no Darboux transform exists there).
    #[error("spectral parameter mu = {mu} is excluded")]
    ExcludedParameter { mu: f64 },

    /// t = 0: branch point of the multiplier spectral curve; the section
    /// system is not diagonalizable and no multiplier section exists.
    #[error("mu = {mu} is a branch point (t = 0) for necksize r = {r}")]
    BranchPoint { mu: f64, r: f64 },

    /// Denominator 1 +- t + (a-1)(1-r) of the Pi-characteristic vanishes.
    #[error("singular characteristic denominator for sign {sign:+}")]
    SingularDenominator { sign: i8 },

    /// Parallel section vanishes (or both coefficients are zero).
    #[error("parallel section is zero at the queried point")]
    ZeroSection,

    /// T^{-1} of the Darboux transform is numerically singular.
    #[error("transform datum T^-1 has norm {norm:.3e}, too close to zero")]
    SingularT { norm: f64 },

    /// Closure requested but the section has no multiplier on the cover.
    #[error("section does not close on the {cover}-fold cover")]
    NotClosed { cover: u32 },

    /// (m, n) fails the admissibility inequalities for the necksize.
    #[error("pair (m, n) = ({m}, {n}) is not admissible for necksize r = {r}")]
    NotAdmissible { r: f64, m: u32, n: u32 },

    /// Bianchi permutability requires distinct spectral parameters.
    #[error("equal spectral parameters mu = {mu} in permutability step")]
    EqualSpectralParams { mu: f64 },

    /// Finite-difference metric is singular at a grid point.
    #[error("degenerate first fundamental form at (x, y) = ({x}, {y})")]
    DegenerateMetric { x: f64, y: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("mesh error: {0}")]
    Mesh(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
