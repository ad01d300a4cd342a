//! Structure constants, the Nijenhuis tensor of left-invariant structures,
//! and the `su(2) x su(2)` examples.
//!
//! For a left-invariant almost complex structure `J` on a Lie group the
//! Nijenhuis tensor is evaluated on the Lie algebra:
//! `N(X, Y) = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY]`. It vanishes
//! identically iff `J` is integrable.

use std::f64::consts::PI;

use serde::Serialize;

use crate::acs::Acs;
use crate::angles::{acs_from_angles, AngleParams};
use crate::linalg6::{basis, Mat6, TwoForm, Vec6};
use crate::{Error, Result};

/// Default cutoff on the Nijenhuis norm below which a structure counts as
/// integrable (unit-scale structure constants).
pub const INTEGRABILITY_TOL: f64 = 1e-10;

/// Jacobi defect accepted by [`LieAlgebra6::from_brackets`], relative to
/// `max(1, max |c|^2)`.
pub const JACOBI_TOL: f64 = 1e-12;

/// A 6-dimensional real Lie algebra, `[e_i, e_j] = sum_k c^k_ij e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra6 {
    // c[k][i][j], 0-based
    c: [[[f64; 6]; 6]; 6],
}

impl LieAlgebra6 {
    /// All brackets zero.
    pub fn abelian() -> Self {
        Self { c: [[[0.0; 6]; 6]; 6] }
    }

    /// Builds an algebra from nonzero constants `(i, j, k, c)` meaning
    /// `c^k_ij = c` (1-based, `i < j`); `c^k_ji = -c` is implied. Rejects bad
    /// indices, repeated entries and Jacobi violations.
    pub fn from_brackets(entries: &[(usize, usize, usize, f64)]) -> Result<Self> {
        let mut g = Self::abelian();
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j, k, c) in entries {
            let in_range = |n: usize| (1..=6).contains(&n);
            if !(in_range(i) && in_range(j) && in_range(k)) {
                return Err(Error::InvalidAlgebra(format!("index out of range in ({i}, {j}, {k})")));
            }
            if i >= j {
                return Err(Error::InvalidAlgebra(format!("brackets must be listed with i < j, got [e{i}, e{j}]")));
            }
            if !c.is_finite() {
                return Err(Error::InvalidAlgebra(format!("non-finite constant for [e{i}, e{j}]")));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidAlgebra(format!("duplicate constant c^{k}_{i}{j}")));
            }
            g.c[k - 1][i - 1][j - 1] = c;
            g.c[k - 1][j - 1][i - 1] = -c;
        }
        let scale = g.max_constant().powi(2).max(1.0);
        let defect = g.jacobi_defect();
        if defect > JACOBI_TOL * scale {
            return Err(Error::InvalidAlgebra(format!("Jacobi identity fails (defect {defect:e})")));
        }
        Ok(g)
    }

    /// `su(2) x su(2)` with `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2` and the
    /// same cyclic rule on `(e4, e5, e6)`.
    pub fn su2xsu2() -> Self {
        Self::from_brackets(&[
            (1, 2, 3, 1.0),
            (2, 3, 1, 1.0),
            (1, 3, 2, -1.0),
            (4, 5, 6, 1.0),
            (5, 6, 4, 1.0),
            (4, 6, 5, -1.0),
        ])
        .expect("su(2) x su(2) satisfies Jacobi")
    }

    /// `c^k_ij` with 1-based indices.
    pub fn structure_constant(&self, k: usize, i: usize, j: usize) -> f64 {
        self.c[k - 1][i - 1][j - 1]
    }

    /// Nonzero constants with `i < j`, in `(i, j, k)` order.
    pub fn brackets(&self) -> Vec<(usize, usize, usize, f64)> {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in (i + 1)..6 {
                for k in 0..6 {
                    let c = self.c[k][i][j];
                    if c != 0.0 {
                        out.push((i + 1, j + 1, k + 1, c));
                    }
                }
            }
        }
        out
    }

    fn max_constant(&self) -> f64 {
        self.c.iter().flatten().flatten().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// `max_{i,j,k,l} |sum_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj|`
    pub fn jacobi_defect(&self) -> f64 {
        let c = &self.c;
        let mut worst: f64 = 0.0;
        for i in 0..6 {
            for j in 0..6 {
                for k in 0..6 {
                    for l in 0..6 {
                        let s: f64 = (0..6)
                            .map(|m| c[m][i][j] * c[l][m][k] + c[m][j][k] * c[l][m][i] + c[m][k][i] * c[l][m][j])
                            .sum();
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    pub fn bracket(&self, x: &Vec6, y: &Vec6) -> Vec6 {
        let mut out = Vec6::zeros();
        for k in 0..6 {
            let mut s = 0.0;
            for i in 0..6 {
                if x[i] == 0.0 {
                    continue;
                }
                for j in 0..6 {
                    s += self.c[k][i][j] * x[i] * y[j];
                }
            }
            out[k] = s;
        }
        out
    }
}

/// `N(X, Y) = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY]`
pub fn nijenhuis(g: &LieAlgebra6, j: &Acs, x: &Vec6, y: &Vec6) -> Vec6 {
    let m = j.matrix();
    let (jx, jy) = (m * x, m * y);
    g.bracket(&jx, &jy) - g.bracket(x, y) - m * g.bracket(&jx, y) - m * g.bracket(x, &jy)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NijenhuisReport {
    /// `sqrt(sum_{i<j} |N(e_i, e_j)|^2)`
    pub norm: f64,
    /// Largest `|N(e_i, e_j)_k|`.
    pub max_component: f64,
    pub integrable: bool,
}

/// Frobenius norm of `N` over the 15 basis pairs, with the verdict at `tol`.
pub fn nijenhuis_norm(g: &LieAlgebra6, j: &Acs, tol: f64) -> NijenhuisReport {
    let mut sum_sq = 0.0;
    let mut max_component: f64 = 0.0;
    for a in 1..=6 {
        for b in (a + 1)..=6 {
            let n = nijenhuis(g, j, &basis(a), &basis(b));
            sum_sq += n.norm_squared();
            max_component = n.iter().fold(max_component, |m, v| m.max(v.abs()));
        }
    }
    let norm = sum_sq.sqrt();
    NijenhuisReport { norm, max_component, integrable: norm < tol }
}

/// The integrable structure `I e1 = -e4`, `I e2 = -e3`, `I e5 = e6` on
/// `su(2) x su(2)`; form `e14 + e23 - e56`.
pub fn calabi_eckmann_structure() -> Acs {
    let w = TwoForm::from_terms(&[(1.0, 1, 4), (1.0, 2, 3), (-1.0, 5, 6)]);
    Acs::from_matrix_unchecked(w.to_skew_matrix())
}

/// An integrable structure on `su(2) x su(2)` together with the tetrahedron
/// edge `E_ij` it lies on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CatalogEntry {
    pub edge: (usize, usize),
    pub form: TwoForm,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        format!("E{}{}", self.edge.0, self.edge.1)
    }
}

type Edge = (usize, usize);
type Term = (f64, usize, usize);

/// Twelve integrable structures, two antipodal points on the equator of each
/// tetrahedron edge.
pub fn calabi_eckmann_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::with_capacity(12);
    for s in [1.0, -1.0] {
        let rows: [(Edge, [Term; 3]); 6] = [
            ((0, 1), [(1.0, 1, 4), (s, 2, 3), (-s, 5, 6)]),
            ((2, 3), [(-1.0, 1, 4), (s, 2, 3), (s, 5, 6)]),
            ((0, 3), [(s, 1, 2), (-s, 4, 5), (1.0, 3, 6)]),
            ((1, 2), [(s, 1, 2), (s, 4, 5), (-1.0, 3, 6)]),
            ((0, 2), [(1.0, 2, 5), (s, 4, 6), (-s, 1, 3)]),
            ((1, 3), [(-1.0, 2, 5), (s, 4, 6), (s, 1, 3)]),
        ];
        for (edge, terms) in rows {
            out.push(CatalogEntry { edge, form: TwoForm::from_terms(&terms) });
        }
    }
    out
}

/// Both 3x3 diagonal blocks of `J` vanish: `J` maps `span(e1,e2,e3)` onto
/// `span(e4,e5,e6)`.
pub fn is_block_offdiagonal(j: &Acs, tol: f64) -> bool {
    let m = j.matrix();
    let upper = m.fixed_view::<3, 3>(0, 0).abs().max();
    let lower = m.fixed_view::<3, 3>(3, 3).abs().max();
    upper < tol && lower < tol
}

/// Whether the torus angles solve one of the systems
/// `cos phi1 = sin phi2 = sin phi3 = 0` or `sin phi1 = cos phi2 = cos phi3 = 0`
/// (within `tol`).
///
/// For `(phi, psi, theta)` in the open cube `|.| < pi/2` this is equivalent to
/// [`is_block_offdiagonal`] of [`acs_from_angles`]; on the boundary faces
/// further block-offdiagonal structures exist.
pub fn is_max_nonintegrable_angles(p: &AngleParams, tol: f64) -> bool {
    let (s1, c1) = p.phi1.sin_cos();
    let (s2, c2) = p.phi2.sin_cos();
    let (s3, c3) = p.phi3.sin_cos();
    let small = |v: f64| v.abs() < tol;
    (small(c1) && small(s2) && small(s3)) || (small(s1) && small(c2) && small(c3))
}

/// Convenience: the structure and its block test in one call.
pub fn max_nonintegrable_by_matrix(p: &AngleParams, tol: f64) -> bool {
    is_block_offdiagonal(&acs_from_angles(p), tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meridian {
    /// Through the edge `E_03`.
    Plus,
    /// Through the edge `E_12`.
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MeridianVariant {
    /// `M_-` carries `+e36` and has negative Pfaffian.
    Printed,
    /// `M_-` carries `-e36`, so every member lies in `Z`.
    #[default]
    Oriented,
}

/// One-parameter families of maximally non-integrable structures:
/// `M_+(t) = sin t (e14 + e25) + cos t (e15 + e42) + e36` and
/// `M_-(t) = sin t (e14 - e25) + cos t (e15 - e42) -/+ e36`, `t in [-pi, pi]`.
pub fn meridian_forms(side: Meridian, t: f64, variant: MeridianVariant) -> Result<TwoForm> {
    if t.is_nan() || t.abs() > PI + 1e-12 {
        return Err(Error::AngleOutOfRange { name: "t", value: t });
    }
    let (s, c) = t.sin_cos();
    let w = match side {
        Meridian::Plus => TwoForm::from_terms(&[(s, 1, 4), (s, 2, 5), (c, 1, 5), (c, 4, 2), (1.0, 3, 6)]),
        Meridian::Minus => {
            let e36 = match variant {
                MeridianVariant::Printed => 1.0,
                MeridianVariant::Oriented => -1.0,
            };
            TwoForm::from_terms(&[(s, 1, 4), (-s, 2, 5), (c, 1, 5), (-c, 4, 2), (e36, 3, 6)])
        }
    };
    Ok(w)
}

/// `diag(A, B)` for `A, B` acting on `span(e1,e2,e3)` and `span(e4,e5,e6)`.
pub fn block_diagonal(a: &nalgebra::Matrix3<f64>, b: &nalgebra::Matrix3<f64>) -> Mat6 {
    let mut m = Mat6::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(a);
    m.fixed_view_mut::<3, 3>(3, 3).copy_from(b);
    m
}
