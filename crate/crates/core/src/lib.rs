//! Orthogonal almost complex structures on an oriented Euclidean R^6.
//!
//! The space `Z = SO(6)/U(3)` of orthogonal, orientation-compatible almost
//! complex structures is diffeomorphic to `CP^3`. This crate provides:
//!
//! * [`acs`]: the [`Acs`] type, validation, the four vertex structures
//!   `I_0..I_3` and the fundamental 2-form correspondence;
//! * [`chart`]: the explicit projective chart `[1,a,b,c] -> Acs` around `I_0`,
//!   its inverse, the Cayley-type operator `K`, and the extension to all of
//!   `CP^3` by vertex transport;
//! * [`angles`]: the six-angle parametrization as a composition of plane
//!   rotations, the torus action and the closed-form component table;
//! * [`lie`]: structure constants, the Nijenhuis tensor and the
//!   `su(2) x su(2)` catalog of integrable and maximally non-integrable
//!   structures;
//! * [`io`], [`scan`] and [`commands`]: JSON/CSV formats and the command
//!   implementations behind the `acs6` binary.

pub mod acs;
pub mod angles;
pub mod chart;
pub mod commands;
pub mod io;
pub mod lie;
pub mod linalg6;
pub mod scan;

pub use acs::{Acs, ValidationReport};
pub use angles::{AngleParams, PlatformRotation};
pub use chart::{CayleyK, ChartCoords, ProjPoint};
pub use lie::{LieAlgebra6, NijenhuisReport};
pub use linalg6::{CVec4, Mat6, TwoForm, Vec6};

pub use num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix is singular (det = {det:e})")]
    Singular { det: f64 },
    #[error("matrix is not an orthogonal almost complex structure (defect {defect:e})")]
    NotCompatible { defect: f64 },
    #[error("structure has negative Pfaffian and lies outside Z")]
    WrongOrientation,
    #[error("structure lies on the face z0 = 0 (chart denominator {denominator:e})")]
    OutsideChart { denominator: f64 },
    #[error("edge coefficients violate r^2 + u^2 + x^2 = 1 (got {norm_sq})")]
    NotOnSphere { norm_sq: f64 },
    #[error("homogeneous coordinates are all zero")]
    ZeroVector,
    #[error("angle {name} = {value} is outside its domain")]
    AngleOutOfRange { name: &'static str, value: f64 },
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid scan specification: {0}")]
    InvalidScan(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
