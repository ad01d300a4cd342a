//! Projective coordinates on `Z = SO(6)/U(3) ~ CP^3`.
//!
//! The affine chart `[1, a, b, c]` covers the neighborhood of `I_0` where
//! `1 - I I_0` is invertible; its complement is the face `z^0 = 0`. The rest of
//! `CP^3` is reached by vertex transport: for `k = 1, 2, 3` the SU(4) element
//! `sigma_k: (u^0, u^k) -> (-u^k, u^0)` acts on `Z` by conjugation with a
//! signed permutation `S_k` in SO(6) sending `I_0` to `I_k`.

use num_complex::Complex64;

use crate::acs::{standard_structure, Acs};
use crate::linalg6::{mat_inverse, max_abs, CVec4, Mat6, TwoForm, SINGULARITY_TOL};
use crate::{Error, Result};

/// Below this `|1 + I_14 + I_25 + I_36|` a structure is treated as lying on
/// the face `z^0 = 0`.
pub const CHART_CUTOFF: f64 = 1e-9;

/// Tolerance on `r^2 + u^2 + x^2 = 1` for [`edge01_form`].
pub const SPHERE_TOL: f64 = 1e-9;

/// Affine coordinates `(a, b, c)` of the point `[1, a, b, c]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChartCoords {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: f64,
}

impl ChartCoords {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Self {
        let x = 1.0 + a.norm_sqr() + b.norm_sqr() + c.norm_sqr();
        Self { a, b, c, x }
    }

    pub fn origin() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// `1 + |a|^2 + |b|^2 + |c|^2`
    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn to_array(&self) -> [Complex64; 3] {
        [self.a, self.b, self.c]
    }

    /// `max(|da|, |db|, |dc|)`
    pub fn max_abs_diff(&self, other: &ChartCoords) -> f64 {
        self.to_array().iter().zip(other.to_array().iter()).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max)
    }
}

/// A point of `CP^3` given by homogeneous coordinates (not all zero).
///
/// `PartialEq` compares representatives; see [`ProjPoint::canonical_distance`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjPoint {
    z: CVec4,
}

impl ProjPoint {
    pub fn new(z: CVec4) -> Result<Self> {
        if z.iter().all(|c| c.norm() == 0.0) || z.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { z })
    }

    /// The vertex `[0,..,1,..,0]` with the one in slot `k`.
    pub fn vertex(k: usize) -> Self {
        let mut z = [Complex64::new(0.0, 0.0); 4];
        z[k] = Complex64::new(1.0, 0.0);
        Self { z }
    }

    pub fn from_chart(c: &ChartCoords) -> Self {
        Self { z: [Complex64::new(1.0, 0.0), c.a, c.b, c.c] }
    }

    pub fn coords(&self) -> &CVec4 {
        &self.z
    }

    /// Index of the coordinate of largest modulus (smallest index on ties).
    pub fn pivot(&self) -> usize {
        let mut best = 0;
        for k in 1..4 {
            if self.z[k].norm() > self.z[best].norm() {
                best = k;
            }
        }
        best
    }

    /// Representative whose largest-modulus coordinate equals 1.
    pub fn canonical(&self) -> ProjPoint {
        let p = self.z[self.pivot()];
        let mut z = self.z.map(|c| c / p);
        z[self.pivot()] = Complex64::new(1.0, 0.0);
        ProjPoint { z }
    }

    pub fn scaled(&self, lambda: Complex64) -> Result<ProjPoint> {
        ProjPoint::new(self.z.map(|c| c * lambda))
    }

    /// Affine chart coordinates when `z^0 != 0`.
    pub fn chart_coords(&self) -> Option<ChartCoords> {
        let z0 = self.z[0];
        if z0.norm() == 0.0 {
            return None;
        }
        Some(ChartCoords::new(self.z[1] / z0, self.z[2] / z0, self.z[3] / z0))
    }

    /// Distance between canonical representatives (max modulus), or infinity
    /// when the pivots differ.
    pub fn canonical_distance(&self, other: &ProjPoint) -> f64 {
        let (p, q) = (self.canonical(), other.canonical());
        if p.pivot() != q.pivot() {
            // near-ties can pick different pivots; compare in p's frame
            let piv = p.pivot();
            if q.z[piv].norm() == 0.0 {
                return f64::INFINITY;
            }
            let q = q.z.map(|c| c / q.z[piv]);
            return p.z.iter().zip(q.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        }
        p.z.iter().zip(q.z.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// The chart map `[1, a, b, c] -> I` around `I_0`.
pub fn acs_from_chart(coords: &ChartCoords) -> Acs {
    let (a, b, c, x) = (coords.a, coords.b, coords.c, coords.x);
    let ab = a.conj() * b;
    let ac = a.conj() * c;
    let bc = b.conj() * c;
    let (na, nb, nc) = (a.norm_sqr(), b.norm_sqr(), c.norm_sqr());

    // upper triangle; the matrix is skew
    let mut m = Mat6::zeros();
    let mut put = |i: usize, j: usize, v: f64| {
        m[(i - 1, j - 1)] = v / x;
        m[(j - 1, i - 1)] = -v / x;
    };
    put(1, 2, 2.0 * (ab + c).im);
    put(1, 3, 2.0 * (ac - b).im);
    put(1, 4, x - 2.0 * nb - 2.0 * nc);
    put(1, 5, 2.0 * (ab - c).re);
    put(1, 6, 2.0 * (ac + b).re);
    put(2, 3, 2.0 * (bc + a).im);
    put(2, 4, 2.0 * (ab + c).re);
    put(2, 5, x - 2.0 * na - 2.0 * nc);
    put(2, 6, 2.0 * (bc - a).re);
    put(3, 4, 2.0 * (ac - b).re);
    put(3, 5, 2.0 * (bc + a).re);
    put(3, 6, x - 2.0 * na - 2.0 * nb);
    put(4, 5, 2.0 * (ab - c).im);
    put(4, 6, 2.0 * (ac + b).im);
    put(5, 6, 2.0 * (bc - a).im);
    Acs::from_matrix_unchecked(m)
}

/// `1 + I_14 + I_25 + I_36`; equals `4 |z^0|^2 / |z|^2` for the point `[z]` of `I`.
pub fn chart_denominator(j: &Acs) -> f64 {
    1.0 + j.entry(1, 4) + j.entry(2, 5) + j.entry(3, 6)
}

/// Inverse chart. Fails with [`Error::OutsideChart`] on the face `z^0 = 0`.
pub fn chart_from_acs(j: &Acs) -> Result<ChartCoords> {
    let d = chart_denominator(j);
    if d.abs() < CHART_CUTOFF {
        return Err(Error::OutsideChart { denominator: d });
    }
    let e = |i, k| j.entry(i, k);
    let a = Complex64::new(e(3, 5) - e(2, 6), e(2, 3) - e(5, 6)) / d;
    let b = Complex64::new(e(1, 6) - e(3, 4), e(4, 6) - e(1, 3)) / d;
    let c = Complex64::new(e(2, 4) - e(1, 5), e(1, 2) - e(4, 5)) / d;
    Ok(ChartCoords::new(a, b, c))
}

// e_i -> e_j, e_j -> -e_i
fn quarter_turn(i: usize, j: usize) -> Mat6 {
    let mut r = Mat6::identity();
    r[(i - 1, i - 1)] = 0.0;
    r[(j - 1, j - 1)] = 0.0;
    r[(j - 1, i - 1)] = 1.0;
    r[(i - 1, j - 1)] = -1.0;
    r
}

/// The rotation `S_k` with `S_k I_0 S_k^T = I_k` that realizes the coordinate
/// swap `sigma_k` on `CP^3`. `S_0` is the identity.
///
/// Panics if `k > 3`.
pub fn vertex_transport(k: usize) -> Mat6 {
    match k {
        0 => Mat6::identity(),
        1 => quarter_turn(2, 3) * quarter_turn(6, 5),
        2 => quarter_turn(3, 1) * quarter_turn(4, 6),
        3 => quarter_turn(1, 2) * quarter_turn(5, 4),
        _ => panic!("vertex index must be 0..=3, got {k}"),
    }
}

/// `sigma_k: (u^0, u^k) -> (-u^k, u^0)`, the identity for `k = 0`.
pub fn swap_coordinates(z: &CVec4, k: usize) -> CVec4 {
    let mut out = *z;
    if k != 0 {
        out[0] = -z[k];
        out[k] = z[0];
    }
    out
}

/// Inverse of [`swap_coordinates`]: `(u^0, u^k) -> (u^k, -u^0)`.
pub fn unswap_coordinates(z: &CVec4, k: usize) -> CVec4 {
    let mut out = *z;
    if k != 0 {
        out[0] = z[k];
        out[k] = -z[0];
    }
    out
}

/// The structure of an arbitrary point of `CP^3`.
///
/// Charts around the vertex of the largest-modulus coordinate, so the affine
/// coordinates used are bounded by 1.
pub fn acs_from_point(p: &ProjPoint) -> Acs {
    let k = p.pivot();
    let w = unswap_coordinates(p.coords(), k);
    let local = ProjPoint { z: w }.chart_coords().expect("pivot coordinate is nonzero");
    let j = acs_from_chart(&local);
    if k == 0 {
        j
    } else {
        j.conjugate(&vertex_transport(k))
    }
}

/// Total inverse of [`acs_from_point`], returned in canonical form.
///
/// Uses the transported chart with the largest denominator
/// (`4 |z^k|^2 / |z|^2 >= 1`).
pub fn chart_point_from_acs(j: &Acs) -> ProjPoint {
    let (k, local) = (0..4)
        .map(|k| {
            let s = vertex_transport(k);
            (k, j.conjugate(&s.transpose()))
        })
        .max_by(|(_, p), (_, q)| chart_denominator(p).total_cmp(&chart_denominator(q)))
        .expect("four candidate charts");
    let coords = chart_from_acs(&local).expect("best chart denominator is at least 1");
    let w = ProjPoint::from_chart(&coords);
    ProjPoint { z: swap_coordinates(w.coords(), k) }.canonical()
}

/// The skew operator `K` with `I = (1 - K) I_0 (1 - K)^{-1}` for `I` in the chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CayleyK {
    k: Mat6,
}

impl CayleyK {
    pub fn matrix(&self) -> &Mat6 {
        &self.k
    }

    /// `(1 - K) I_0 (1 - K)^{-1}`
    pub fn reconstruct(&self) -> Result<Acs> {
        let id = Mat6::identity();
        let i0 = standard_structure(0);
        let inv = mat_inverse(&(id - self.k), SINGULARITY_TOL)?;
        let m = (id - self.k) * i0.matrix() * inv;
        Ok(Acs::from_matrix_unchecked(m))
    }

    /// `||K I_0 + I_0 K||_inf`
    pub fn anticommutator_defect(&self) -> f64 {
        let i0 = standard_structure(0);
        max_abs(&(self.k * i0.matrix() + i0.matrix() * self.k))
    }
}

/// `K = (1 - I I_0)^{-1} (1 + I I_0)` in closed form.
///
/// Block form `((A, B), (B, -A))` with
/// `A + iB = ((0, c, -b), (-c, 0, a), (b, -a, 0))`.
pub fn cayley_k(coords: &ChartCoords) -> CayleyK {
    let (a, b, c) = (coords.a, coords.b, coords.c);
    let zero = Complex64::new(0.0, 0.0);
    let z = [[zero, c, -b], [-c, zero, a], [b, -a, zero]];
    let mut k = Mat6::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let (re, im) = (z[i][j].re, z[i][j].im);
            k[(i, j)] = re;
            k[(i, j + 3)] = im;
            k[(i + 3, j)] = im;
            k[(i + 3, j + 3)] = -re;
        }
    }
    CayleyK { k }
}

/// `K` computed directly as `(1 - I I_0)^{-1} (1 + I I_0)`.
pub fn cayley_k_from_acs(j: &Acs) -> Result<CayleyK> {
    let id = Mat6::identity();
    let p = j.matrix() * standard_structure(0).matrix();
    let inv = mat_inverse(&(id - p), SINGULARITY_TOL)?;
    Ok(CayleyK { k: inv * (id + p) })
}

/// Fundamental forms on the edge joining `I_0` and `I_1`:
/// `e14 + r(e25 + e36) + u(e23 + e65) + x(e26 + e53)` with `r^2 + u^2 + x^2 = 1`.
pub fn edge01_form(r: f64, u: f64, x: f64) -> Result<TwoForm> {
    let norm_sq = r * r + u * u + x * x;
    if (norm_sq - 1.0).abs() > SPHERE_TOL {
        return Err(Error::NotOnSphere { norm_sq });
    }
    Ok(TwoForm::from_terms(&[(1.0, 1, 4), (r, 2, 5), (r, 3, 6), (u, 2, 3), (u, 6, 5), (x, 2, 6), (x, 5, 3)]))
}

/// The same edge in spherical coordinates:
/// `r = sin psi`, `u = cos phi cos psi`, `x = sin phi cos psi`.
pub fn edge01_from_sphere(psi: f64, phi: f64) -> TwoForm {
    let (sp, cp) = psi.sin_cos();
    let (sf, cf) = phi.sin_cos();
    edge01_form(sp, cf * cp, sf * cp).expect("spherical coordinates lie on the unit sphere")
}

/// Reads `(psi, phi)` back from an edge form; `phi` in `(-pi, pi]` and
/// arbitrary (reported as 0) at the poles.
pub fn edge01_sphere_coords(w: &TwoForm) -> (f64, f64) {
    let r = w.get(2, 5).clamp(-1.0, 1.0);
    let (u, x) = (w.get(2, 3), w.get(2, 6));
    (r.asin(), x.atan2(u))
}
