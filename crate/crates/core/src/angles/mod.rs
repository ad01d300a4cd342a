//! Six-angle parametrization of `Z` as a composition of plane rotations.
//!
//! Three angles `(phi, psi, theta)` select a torus orbit, the quotient
//! `Z / T^3` being a solid tetrahedron; three torus angles `(phi1, phi2,
//! phi3)` rotate the platforms `D_1 = <e1,e4>`, `D_2 = <e2,e5>`,
//! `D_3 = <e3,e6>`. With `alpha = (psi + theta)/2` and `beta = (psi - theta)/2`
//! the frame is
//!
//! ```text
//! S = R_{D1}(phi1) R_{D2}(phi2) R_{D3}(phi3) R_{<e2,e4>}(beta) R_{<e1,e5>}(pi/2 - alpha) R_{<e1,e6>}(phi)
//! ```
//!
//! and `J = S I_ref S^T`, where `I_ref` has fundamental form
//! `-e13 + e25 + e46`. All rotations turn `e_i` towards `e_j` in the plane
//! `<e_i, e_j>`. The torus factors act outermost, so `J_14`, `J_25` and
//! `J_36 = sin phi` only depend on `(phi, psi, theta)`, and on the slice
//! `phi1 = phi2 = phi3 = 0` the structure is exactly [`form_from_angles`].
//!
//! `S` is the identity at the reference angles `phi = 0`,
//! `psi = theta = pi/2`, `phi_i = 0` ([`AngleParams::reference`]).

pub mod closed_form;

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix3, Matrix4};

use crate::acs::Acs;
use crate::linalg6::{basis, plane_rotation, Mat6, TwoForm};
use crate::{Error, Result};

// slack on the closed angle intervals
const RANGE_SLACK: f64 = 1e-12;

/// The six angles `(phi, psi, theta, phi1, phi2, phi3)`, in radians.
///
/// `phi` lies in `[-pi/2, pi/2]`; `psi` and `theta` in `[-pi, pi]` (the
/// tetrahedron itself only needs `[-pi/2, pi/2]`, the meridian families use
/// the wider range); the torus angles are periodic and any finite value is
/// accepted.
#[derive(Clone, Copy, Debug, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct AngleParams {
    pub phi: f64,
    pub psi: f64,
    pub theta: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
}

impl AngleParams {
    pub fn new(phi: f64, psi: f64, theta: f64, phi1: f64, phi2: f64, phi3: f64) -> Result<Self> {
        let p = Self { phi, psi, theta, phi1, phi2, phi3 };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        let bounded = [("phi", self.phi, FRAC_PI_2), ("psi", self.psi, PI), ("theta", self.theta, PI)];
        for (name, value, bound) in bounded {
            if value.is_nan() || value.abs() > bound + RANGE_SLACK {
                return Err(Error::AngleOutOfRange { name, value });
            }
        }
        for (name, value) in [("phi1", self.phi1), ("phi2", self.phi2), ("phi3", self.phi3)] {
            if !value.is_finite() {
                return Err(Error::AngleOutOfRange { name, value });
            }
        }
        Ok(())
    }

    /// The angles at which every rotation factor is the identity.
    pub fn reference() -> Self {
        Self { phi: 0.0, psi: FRAC_PI_2, theta: FRAC_PI_2, phi1: 0.0, phi2: 0.0, phi3: 0.0 }
    }

    /// `(psi + theta) / 2`
    pub fn alpha(&self) -> f64 {
        0.5 * (self.psi + self.theta)
    }

    /// `(psi - theta) / 2`
    pub fn beta(&self) -> f64 {
        0.5 * (self.psi - self.theta)
    }

    pub fn torus(&self) -> [f64; 3] {
        [self.phi1, self.phi2, self.phi3]
    }

    pub fn with_torus(&self, torus: [f64; 3]) -> Self {
        Self { phi1: torus[0], phi2: torus[1], phi3: torus[2], ..*self }
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.phi, self.psi, self.theta, self.phi1, self.phi2, self.phi3]
    }
}

/// A rotation by `angle` in the coordinate plane `<e_i, e_j>` (1-based),
/// turning `e_i` towards `e_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlatformRotation {
    pub plane: (usize, usize),
    pub angle: f64,
}

impl PlatformRotation {
    pub fn new(i: usize, j: usize, angle: f64) -> Self {
        assert!(i != j && (1..=6).contains(&i) && (1..=6).contains(&j), "bad plane ({i}, {j})");
        Self { plane: (i, j), angle }
    }

    pub fn matrix(&self) -> Mat6 {
        plane_rotation(self.plane.0, self.plane.1, self.angle)
    }
}

/// The six factors in written order `R_phi, R_alpha, R_beta, R_phi3, R_phi2, R_phi1`.
pub fn rotation_factors(p: &AngleParams) -> [PlatformRotation; 6] {
    [
        PlatformRotation::new(1, 6, p.phi),
        PlatformRotation::new(1, 5, FRAC_PI_2 - p.alpha()),
        PlatformRotation::new(2, 4, p.beta()),
        PlatformRotation::new(3, 6, p.phi3),
        PlatformRotation::new(2, 5, p.phi2),
        PlatformRotation::new(1, 4, p.phi1),
    ]
}

/// The frame `S` in SO(6); the factors are applied as successive frame
/// changes, so the last written factor is the leftmost matrix.
pub fn rotation_composition(p: &AngleParams) -> Mat6 {
    rotation_factors(p).iter().rev().fold(Mat6::identity(), |acc, r| acc * r.matrix())
}

/// `I_ref`, the structure at [`AngleParams::reference`]; form `-e13 + e25 + e46`.
pub fn reference_structure() -> Acs {
    let w = TwoForm::from_terms(&[(-1.0, 1, 3), (1.0, 2, 5), (1.0, 4, 6)]);
    Acs::from_matrix_unchecked(w.to_skew_matrix())
}

pub fn acs_from_angles(p: &AngleParams) -> Acs {
    reference_structure().conjugate(&rotation_composition(p))
}

/// Representative of the torus orbit with angles `(phi, psi, theta)`:
///
/// ```text
/// e3 ^ (sin phi e6 + cos phi f) + (sin phi f - cos phi e6) ^ (-sin beta e2 + cos beta e4)
///   + (cos beta e2 + sin beta e4) ^ (-cos alpha e1 + sin alpha e5)
/// ```
///
/// with `f = sin alpha e1 + cos alpha e5`.
pub fn form_from_angles(phi: f64, psi: f64, theta: f64) -> TwoForm {
    let alpha = 0.5 * (psi + theta);
    let beta = 0.5 * (psi - theta);
    let (sf, cf) = phi.sin_cos();
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    let e = basis;
    let f = e(1) * sa + e(5) * ca;
    TwoForm::wedge(&e(3), &(e(6) * sf + f * cf))
        + TwoForm::wedge(&(f * sf - e(6) * cf), &(e(2) * (-sb) + e(4) * cb))
        + TwoForm::wedge(&(e(2) * cb + e(4) * sb), &(e(1) * (-ca) + e(5) * sa))
}

/// The platform rotation `O = R_{D1}(a1) R_{D2}(a2) R_{D3}(a3)`.
pub fn torus_rotation(a1: f64, a2: f64, a3: f64) -> Mat6 {
    plane_rotation(1, 4, a1) * plane_rotation(2, 5, a2) * plane_rotation(3, 6, a3)
}

/// Torus action `J -> O J O^{-1}`. Fixes the four vertex structures.
pub fn t3_act(j: &Acs, a1: f64, a2: f64, a3: f64) -> Acs {
    j.conjugate(&torus_rotation(a1, a2, a3))
}

/// The SO(4) block on `D = <e1, e2, e4, e5>` and its images in SO(3) x SO(3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PMatrices {
    /// Acts on `(e1, e2, e4, e5)` in that order.
    pub so4: Matrix4<f64>,
    /// Action on `Lambda^2_+` in the basis `(e14 + e25, e12 + e54, e15 + e42)`.
    pub plus: Matrix3<f64>,
    /// Action on `Lambda^2_-` in the basis `(e14 - e25, e12 - e54, e15 - e42)`.
    pub minus: Matrix3<f64>,
}

/// The SO(4) matrix moving `p_+` along the edge `E_03` by `psi` and `p_-` along
/// `E_12` by `theta`, together with its pair `(P_+, P_-)`.
///
/// `P_+` sends `e14 + e25` to `sin psi (e14 + e25) + cos psi (e12 + e54)`;
/// `P_-` sends `e14 - e25` to `sin theta (e14 - e25) - cos theta (e12 - e54)`.
pub fn p_matrices(psi: f64, theta: f64) -> PMatrices {
    let (sa, ca) = (0.5 * (psi + theta)).sin_cos();
    let (sb, cb) = (0.5 * (psi - theta)).sin_cos();
    #[rustfmt::skip]
    let so4 = Matrix4::new(
        sa, 0.0, 0.0, -ca,
        0.0, cb, -sb, 0.0,
        0.0, sb, cb, 0.0,
        ca, 0.0, 0.0, sa,
    );
    let (sp, cp) = psi.sin_cos();
    let (st, ct) = theta.sin_cos();
    #[rustfmt::skip]
    let plus = Matrix3::new(
        sp, -cp, 0.0,
        cp, sp, 0.0,
        0.0, 0.0, 1.0,
    );
    #[rustfmt::skip]
    let minus = Matrix3::new(
        st, ct, 0.0,
        -ct, st, 0.0,
        0.0, 0.0, 1.0,
    );
    PMatrices { so4, plus, minus }
}
