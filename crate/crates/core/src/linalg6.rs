//! Fixed-size linear algebra on R^6 and C^4.
//!
//! Matrices follow the column convention: column `j` of a [`Mat6`] is the
//! image of the basis vector `e_{j+1}`. Indices in the public API that refer
//! to basis vectors are 1-based (`e_1..e_6`), storage indices are 0-based.

use std::fmt;

use nalgebra::{Matrix6, Vector6};
use num_complex::Complex64;

use crate::Error;

pub type Mat6 = Matrix6<f64>;
pub type Vec6 = Vector6<f64>;

/// A vector of C^4, used for homogeneous coordinates on CP^3.
pub type CVec4 = [Complex64; 4];

/// Default cutoff on `|det|` below which [`mat_inverse`] reports a singular matrix.
pub const SINGULARITY_TOL: f64 = 1e-12;

/// The 15 index pairs `(i, j)`, `1 <= i < j <= 6`, in lexicographic order.
pub const PAIRS: [(usize, usize); 15] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 6),
];

fn pair_slot(i: usize, j: usize) -> Option<(usize, f64)> {
    let (lo, hi, sign) = match i.cmp(&j) {
        std::cmp::Ordering::Less => (i, j, 1.0),
        std::cmp::Ordering::Greater => (j, i, -1.0),
        std::cmp::Ordering::Equal => return None,
    };
    if lo < 1 || hi > 6 {
        return None;
    }
    // offset of row `lo` in the packed strict upper triangle
    let row_start = (lo - 1) * (12 - lo) / 2;
    Some((row_start + (hi - lo - 1), sign))
}

/// A skew 2-form `sum_{i<j} c_ij e^i ^ e^j` on R^6.
///
/// Only the strict upper triangle is stored, so antisymmetry holds by
/// construction.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct TwoForm {
    coeff: [f64; 15],
}

impl TwoForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Coefficients in the order of [`PAIRS`].
    pub fn from_coefficients(coeff: [f64; 15]) -> Self {
        Self { coeff }
    }

    /// Builds a form from `(c, i, j)` terms meaning `c e^i ^ e^j`. Terms with
    /// `i > j` are folded in with a sign flip.
    ///
    /// Panics on an out-of-range or repeated index pair.
    pub fn from_terms(terms: &[(f64, usize, usize)]) -> Self {
        let mut form = Self::zero();
        for &(c, i, j) in terms {
            form.add_term(c, i, j);
        }
        form
    }

    pub fn coefficients(&self) -> &[f64; 15] {
        &self.coeff
    }

    /// `omega(e_i, e_j)` for 1-based indices; antisymmetric, zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match pair_slot(i, j) {
            Some((slot, sign)) => sign * self.coeff[slot],
            None if i == j && (1..=6).contains(&i) => 0.0,
            None => panic!("basis index out of range: ({i}, {j})"),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        let (slot, sign) = pair_slot(i, j).expect("index pair must be distinct and within 1..=6");
        self.coeff[slot] = sign * value;
    }

    pub fn add_term(&mut self, c: f64, i: usize, j: usize) {
        let (slot, sign) = pair_slot(i, j).expect("index pair must be distinct and within 1..=6");
        self.coeff[slot] += sign * c;
    }

    /// The skew matrix `M` with `M_ij = omega(e_i, e_j)`.
    pub fn to_skew_matrix(&self) -> Mat6 {
        let mut m = Mat6::zeros();
        for (slot, &(i, j)) in PAIRS.iter().enumerate() {
            m[(i - 1, j - 1)] = self.coeff[slot];
            m[(j - 1, i - 1)] = -self.coeff[slot];
        }
        m
    }

    /// Reads the strict upper triangle of `m`; the lower triangle is ignored.
    pub fn from_upper_triangle(m: &Mat6) -> Self {
        let mut coeff = [0.0; 15];
        for (slot, &(i, j)) in PAIRS.iter().enumerate() {
            coeff[slot] = m[(i - 1, j - 1)];
        }
        Self { coeff }
    }

    /// `a ^ b` for two covectors given by their coefficients.
    pub fn wedge(a: &Vec6, b: &Vec6) -> Self {
        let mut coeff = [0.0; 15];
        for (slot, &(i, j)) in PAIRS.iter().enumerate() {
            coeff[slot] = a[i - 1] * b[j - 1] - a[j - 1] * b[i - 1];
        }
        Self { coeff }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { coeff: self.coeff.map(|c| c * s) }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeff.iter().zip(other.coeff.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

impl std::ops::Add for TwoForm {
    type Output = TwoForm;

    fn add(mut self, rhs: TwoForm) -> TwoForm {
        for (a, b) in self.coeff.iter_mut().zip(rhs.coeff) {
            *a += b;
        }
        self
    }
}

impl std::ops::Neg for TwoForm {
    type Output = TwoForm;

    fn neg(self) -> TwoForm {
        self.scale(-1.0)
    }
}

impl fmt::Display for TwoForm {
    /// Prints the nonzero terms, e.g. `e14 + e25 - e36`. With a precision
    /// (`{:.3}`) coefficients are rounded and terms that round to 0 dropped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let precision = f.precision();
        let cutoff = precision.map_or(0.0, |p| 0.5 * 10f64.powi(-(p as i32)));
        let mut first = true;
        for (slot, &(i, j)) in PAIRS.iter().enumerate() {
            let c = self.coeff[slot];
            if c == 0.0 || c.abs() < cutoff {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_tol = cutoff.max(f64::EPSILON);
            if (c.abs() - 1.0).abs() > unit_tol {
                match precision {
                    Some(p) => write!(f, "{:.p$}*", c.abs())?,
                    None => write!(f, "{}*", c.abs())?,
                }
            }
            write!(f, "e{i}{j}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &Mat6, b: &Mat6) -> Mat6 {
    a * b
}

/// Inverse of `a`, refusing matrices with `|det a| <= tol`.
pub fn mat_inverse(a: &Mat6, tol: f64) -> Result<Mat6, Error> {
    let det = a.determinant();
    if det.is_nan() || det.abs() <= tol {
        return Err(Error::Singular { det });
    }
    a.try_inverse().ok_or(Error::Singular { det })
}

/// Pfaffian of a 2-form, normalized so that `pfaffian(e14 + e25 + e36) = +1`.
///
/// This is the negative of the textbook Pfaffian of the skew matrix (which
/// assigns `-1` to that form), so `pfaffian(w)^2 = det(w.to_skew_matrix())`
/// still holds.
pub fn pfaffian(w: &TwoForm) -> f64 {
    let m = w.to_skew_matrix();
    let idx: Vec<usize> = (0..6).collect();
    -pfaffian_expand(&m, &idx)
}

// Expansion along the first remaining row: Pf(A) = sum_j (-1)^(j+1) a_{0j} Pf(A_{\hat0 \hat j}).
fn pfaffian_expand(m: &Mat6, idx: &[usize]) -> f64 {
    match idx.len() {
        0 => 1.0,
        2 => m[(idx[0], idx[1])],
        _ => {
            let first = idx[0];
            let mut total = 0.0;
            for (pos, &col) in idx.iter().enumerate().skip(1) {
                let entry = m[(first, col)];
                if entry == 0.0 {
                    continue;
                }
                let rest: Vec<usize> = idx.iter().copied().filter(|&k| k != first && k != col).collect();
                let sign = if pos % 2 == 1 { 1.0 } else { -1.0 };
                total += sign * entry * pfaffian_expand(m, &rest);
            }
            total
        }
    }
}

/// `max_ij |m_ij|`.
pub fn max_abs(m: &Mat6) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// Rotation by `angle` in the oriented coordinate plane `<e_i, e_j>` (1-based):
/// `e_i -> cos e_i + sin e_j`, `e_j -> -sin e_i + cos e_j`.
pub fn plane_rotation(i: usize, j: usize, angle: f64) -> Mat6 {
    assert!(i != j && (1..=6).contains(&i) && (1..=6).contains(&j));
    let (s, c) = angle.sin_cos();
    let mut r = Mat6::identity();
    r[(i - 1, i - 1)] = c;
    r[(j - 1, j - 1)] = c;
    r[(j - 1, i - 1)] = s;
    r[(i - 1, j - 1)] = -s;
    r
}

/// Basis vector `e_k` (1-based).
pub fn basis(k: usize) -> Vec6 {
    let mut v = Vec6::zeros();
    v[k - 1] = 1.0;
    v
}
