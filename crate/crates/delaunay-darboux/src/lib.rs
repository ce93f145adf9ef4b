//! Delaunay surfaces and their closed CMC Darboux transforms.
//!
//! This crate constructs the constant mean curvature surfaces of revolution
//! (cylinder, unduloids, nodoids) from their explicit profile in terms of
//! Jacobi elliptic functions, evaluates all parallel sections of the
//! associated family of flat connections in closed form, and builds the
//! μ-Darboux transforms these sections generate: bubbletons, multi-cover
//! CMC cylinders with dihedral symmetry, and same-lobed multibubbletons
//! obtained by Bianchi permutability.
//!
//! Every construction ships with a numerical verification harness
//! ([`verify`]) that turns the geometric claims (conformality, mean
//! curvature one, closure on a given cover, constant distance to the
//! parallel surface, dihedral symmetry) into residual checks with pinned
//! tolerances.
//!
//! The crate is organized as a library first; see the `examples/` directory
//! for one runnable example per capability, and the `delaunay-darboux`
//! binary for a thin command line around [`job::run`].

pub mod algebra;
pub mod bianchi;
pub mod cli;
pub mod darboux;
pub mod delaunay;
pub mod elliptic;
pub mod error;
pub mod job;
pub mod mesh;
mod ode;
pub mod report;
pub mod resonance;
pub mod spectral;
pub mod tol;
pub mod verify;

pub use algebra::{Complex, Quaternion, Vector3};
pub use delaunay::{DelaunayProfile, NeckSize, SurfaceSample};
pub use error::{Error, Result};
pub use resonance::{AdmissiblePair, PairKind, ResonancePoint};
pub use spectral::{ParallelSection, SectionCoefficients, SpectralData};
