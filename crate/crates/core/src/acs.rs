//! Orthogonal almost complex structures and their fundamental forms.
//!
//! Sign convention: the fundamental form of `J` has coefficients
//! `omega_ij = J_ij` for `i < j` (the strict upper triangle of the matrix in
//! the column convention), i.e. `omega(X, Y) = g(X, JY)`. With it the vertex
//! structure `I_0` (`I_0 e_1 = -e_4`, `I_0 e_2 = -e_5`, `I_0 e_3 = -e_6`) has
//! form `e14 + e25 + e36`.

use serde::Serialize;

use crate::linalg6::{max_abs, pfaffian, Mat6, TwoForm};
use crate::{Error, Result};

/// Default tolerance for [`validate`] and [`Acs::new`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// An orthogonal almost complex structure on R^6: `m^2 = -Id`, `m^T m = Id`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Acs {
    m: Mat6,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    /// `||m^2 + Id||_inf` (max-entry norm)
    pub square_defect: f64,
    /// `||m^T m - Id||_inf`
    pub orth_defect: f64,
    /// `||m^T + m||_inf`
    pub skew_defect: f64,
    /// Sign of the Pfaffian of the fundamental form; `+1` inside `Z`.
    pub orientation: i8,
}

impl ValidationReport {
    /// All three defects are below `tol`. Orientation is reported separately.
    pub fn accepted(&self, tol: f64) -> bool {
        self.square_defect < tol && self.orth_defect < tol && self.skew_defect < tol
    }

    pub fn max_defect(&self) -> f64 {
        self.square_defect.max(self.orth_defect).max(self.skew_defect)
    }
}

pub fn validate(m: &Mat6) -> ValidationReport {
    let id = Mat6::identity();
    let pf = pfaffian(&TwoForm::from_upper_triangle(m));
    ValidationReport {
        square_defect: max_abs(&(m * m + id)),
        orth_defect: max_abs(&(m.transpose() * m - id)),
        skew_defect: max_abs(&(m.transpose() + m)),
        orientation: if pf > 0.0 { 1 } else { -1 },
    }
}

impl Acs {
    /// Accepts `m` if it passes [`validate`] at `tol`. Orientation is not
    /// checked; see [`Acs::in_z`].
    pub fn new(m: Mat6, tol: f64) -> Result<Self> {
        let report = validate(&m);
        if report.accepted(tol) {
            Ok(Self { m })
        } else {
            Err(Error::NotCompatible { defect: report.max_defect() })
        }
    }

    /// Wraps a matrix that is an orthogonal complex structure by construction.
    pub(crate) fn from_matrix_unchecked(m: Mat6) -> Self {
        debug_assert!(validate(&m).accepted(1e-6), "not an ACS: {m}");
        Self { m }
    }

    pub fn matrix(&self) -> &Mat6 {
        &self.m
    }

    pub fn into_matrix(self) -> Mat6 {
        self.m
    }

    /// Matrix entry `J_ij` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i - 1, j - 1)]
    }

    pub fn fundamental_form(&self) -> TwoForm {
        fundamental_form(self)
    }

    pub fn report(&self) -> ValidationReport {
        validate(&self.m)
    }

    /// Whether the structure induces the reference orientation (positive
    /// Pfaffian), i.e. belongs to `Z = SO(6)/U(3)`.
    pub fn in_z(&self) -> bool {
        pfaffian(&self.fundamental_form()) > 0.0
    }

    /// `S J S^{-1}` for orthogonal `S` (uses `S^T` as the inverse).
    pub fn conjugate(&self, s: &Mat6) -> Acs {
        Acs { m: s * self.m * s.transpose() }
    }

    pub fn max_abs_diff(&self, other: &Acs) -> f64 {
        max_abs(&(self.m - other.m))
    }
}

/// The vertex structures `I_0..I_3`, i.e. the points `[1,0,0,0]..[0,0,0,1]` of `CP^3`.
///
/// `I_k e_i = s_i e_{i+3}` for `i = 1, 2, 3` with sign patterns
/// `(-,-,-)`, `(-,+,+)`, `(+,-,+)`, `(+,+,-)`.
///
/// Panics if `k > 3`.
pub fn standard_structure(k: usize) -> Acs {
    const SIGNS: [[f64; 3]; 4] = [[-1.0, -1.0, -1.0], [-1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [1.0, 1.0, -1.0]];
    assert!(k < 4, "standard structures are indexed 0..=3");
    let mut m = Mat6::zeros();
    for i in 0..3 {
        let s = SIGNS[k][i];
        m[(i + 3, i)] = s;
        m[(i, i + 3)] = -s;
    }
    Acs { m }
}

pub fn fundamental_form(j: &Acs) -> TwoForm {
    TwoForm::from_upper_triangle(&j.m)
}

/// Inverse of [`fundamental_form`]: rebuilds the skew matrix and validates it.
pub fn acs_from_form(w: &TwoForm, tol: f64) -> Result<Acs> {
    Acs::new(w.to_skew_matrix(), tol)
}
