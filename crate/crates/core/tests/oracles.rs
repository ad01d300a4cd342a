//! Independent constructions checked against the library.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use acs6::acs::standard_structure;
use acs6::angles::closed_form::{closed_form_matrix, Table};
use acs6::angles::{acs_from_angles, form_from_angles, p_matrices, AngleParams};
use acs6::chart::{
    acs_from_chart, acs_from_point, cayley_k, chart_point_from_acs, vertex_transport, ChartCoords, ProjPoint,
};
use acs6::lie::{nijenhuis, LieAlgebra6};
use acs6::linalg6::{basis, max_abs, pfaffian, Mat6, TwoForm};
use acs6::{Acs, Complex64};
use nalgebra::{Matrix4, SMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The structure of `[u]` from `Lambda^2 C^4 = C^6 (x) C`: the 3-plane
/// `{u ^ v}` is mapped to complex covectors by
/// `2 v0^v1 = e1 + i e4`, `2 v2^v3 = e1 - i e4`, `2 v0^v2 = e2 + i e5`,
/// `2 v3^v1 = e2 - i e5`, `2 v0^v3 = e3 + i e6`, `2 v1^v2 = e3 - i e6`,
/// and the structure sends `Re alpha` to `-Im alpha` on that plane.
fn lambda2_structure(u: [Complex64; 4]) -> Mat6 {
    let table: [((usize, usize), usize, f64); 6] =
        [((0, 1), 0, 1.0), ((2, 3), 0, -1.0), ((0, 2), 1, 1.0), ((3, 1), 1, -1.0), ((0, 3), 2, 1.0), ((1, 2), 2, -1.0)];
    let wedge = |v: [Complex64; 4]| {
        let mut out = [Complex64::new(0.0, 0.0); 6];
        for ((i, j), slot, s) in table {
            let c = (u[i] * v[j] - u[j] * v[i]) * 0.5;
            out[slot] += c;
            out[slot + 3] += c * cx(0.0, s);
        }
        out
    };
    let mut p = SMatrix::<f64, 6, 8>::zeros();
    let mut q = SMatrix::<f64, 6, 8>::zeros();
    for k in 0..4 {
        let mut v = [cx(0.0, 0.0); 4];
        v[k] = cx(1.0, 0.0);
        let w = wedge(v);
        for (col, phase) in [(2 * k, cx(1.0, 0.0)), (2 * k + 1, cx(0.0, 1.0))] {
            for r in 0..6 {
                let a = w[r] * phase;
                p[(r, col)] = a.re;
                q[(r, col)] = -a.im;
            }
        }
    }
    let gram = (p * p.transpose()).try_inverse().expect("the plane spans R^6");
    q * p.transpose() * gram
}

fn random_point(rng: &mut impl Rng, scale: f64) -> [Complex64; 4] {
    std::array::from_fn(|_| cx(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
}

#[test]
fn chart_matches_exterior_square_construction() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let z = random_point(&mut rng, 3.0);
        let c = ChartCoords::new(z[1], z[2], z[3]);
        let oracle = lambda2_structure([cx(1.0, 0.0), z[1], z[2], z[3]]);
        assert!(max_abs(&(acs_from_chart(&c).into_matrix() - oracle)) < 1e-12);
    }
}

#[test]
fn every_point_matches_exterior_square_construction() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 0..400 {
        let mut z = random_point(&mut rng, 1.0);
        // exercise each pivot and the face z0 = 0
        z[n % 4] *= 10.0;
        if n % 5 == 0 {
            z[0] = cx(0.0, 0.0);
        }
        let oracle = lambda2_structure(z);
        let j = acs_from_point(&ProjPoint::new(z).unwrap());
        assert!(max_abs(&(j.into_matrix() - oracle)) < 1e-12, "{z:?}");
    }
}

#[test]
fn vertices_from_exterior_square() {
    for k in 0..4 {
        let mut u = [cx(0.0, 0.0); 4];
        u[k] = cx(1.0, 0.0);
        let oracle = lambda2_structure(u);
        assert!(max_abs(&(oracle - standard_structure(k).into_matrix())) < 1e-14, "I_{k}");
    }
}

/// `e14 + r(e25 + e36) + u(e23 + e65) + x(e26 + e53)`, term by term.
fn edge_form_literal(r: f64, u: f64, x: f64) -> Mat6 {
    let mut m = Mat6::zeros();
    let mut put = |i: usize, j: usize, c: f64| {
        m[(i - 1, j - 1)] += c;
        m[(j - 1, i - 1)] -= c;
    };
    put(1, 4, 1.0);
    put(2, 5, r);
    put(3, 6, r);
    put(2, 3, u);
    put(6, 5, u);
    put(2, 6, x);
    put(5, 3, x);
    m
}

#[test]
fn edge_01_substitution() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let (s, c1, c2): (f64, f64, f64) =
            (rng.gen_range(0.01..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let n = (s * s + c1 * c1 + c2 * c2).sqrt();
        let (s, c1, c2) = (s / n, c1 / n, c2 / n);
        let z = [cx(s, 0.0), cx(c1, c2), cx(0.0, 0.0), cx(0.0, 0.0)];
        let expected = edge_form_literal(2.0 * s * s - 1.0, 2.0 * s * c2, -2.0 * s * c1);
        let j = acs_from_point(&ProjPoint::new(z).unwrap());
        assert!(max_abs(&(j.into_matrix() - expected)) < 1e-12);
        assert!(max_abs(&(lambda2_structure(z) - expected)) < 1e-12);
    }
}

#[test]
fn chart_at_unit_a() {
    let j = acs_from_chart(&ChartCoords::new(cx(1.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0)));
    let expected = TwoForm::from_terms(&[(1.0, 1, 4), (-1.0, 2, 6), (1.0, 3, 5)]);
    assert!(j.fundamental_form().max_abs_diff(&expected) < 1e-15);
}

#[test]
fn edge_23_midpoint_by_transport() {
    // sigma_3^-1 sigma_1^-1 sigma_2^-1 [1, 1, 0, 0] = [0, 0, -1, -1]
    let s = FRAC_1_SQRT_2;
    let start = edge_form_literal(0.0, 0.0, -2.0 * s * s);
    let m = vertex_transport(3).transpose() * vertex_transport(1).transpose() * vertex_transport(2).transpose();
    let expected = m * start * m.transpose();
    let z = [cx(0.0, 0.0), cx(0.0, 0.0), cx(1.0, 0.0), cx(1.0, 0.0)];
    let j = acs_from_point(&ProjPoint::new(z).unwrap()).into_matrix();
    assert!(max_abs(&(j - expected)) < 1e-14);
    assert!(max_abs(&(lambda2_structure(z) - expected)) < 1e-14);
    let w = TwoForm::from_upper_triangle(&j);
    assert!(w.max_abs_diff(&TwoForm::from_terms(&[(-1.0, 1, 4), (1.0, 2, 6), (1.0, 3, 5)])) < 1e-14);
}

#[test]
fn cayley_operator_by_direct_inversion() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let id = Mat6::identity();
    let i0 = standard_structure(0).into_matrix();
    for _ in 0..200 {
        let z = random_point(&mut rng, 4.0);
        let c = ChartCoords::new(z[1], z[2], z[3]);
        let i = acs_from_chart(&c).into_matrix();
        let direct = (id - i * i0).try_inverse().unwrap() * (id + i * i0);
        let k = *cayley_k(&c).matrix();
        assert!(max_abs(&(k - direct)) < 1e-9 * (1.0 + max_abs(&direct)));
        let rebuilt = (id - k) * i0 * (id - k).try_inverse().unwrap();
        assert!(max_abs(&(rebuilt - i)) < 1e-9);
    }
}

#[test]
fn cayley_block_form() {
    // K = [[A, B], [B, -A]] with A + iB the skew matrix ((0,c,-b),(-c,0,a),(b,-a,0))
    let (a, b, c) = (cx(0.3, -0.2), cx(1.5, 0.4), cx(-0.8, 0.9));
    let k = *cayley_k(&ChartCoords::new(a, b, c)).matrix();
    let t = [[cx(0.0, 0.0), c, -b], [-c, cx(0.0, 0.0), a], [b, -a, cx(0.0, 0.0)]];
    for i in 0..3 {
        for j in 0..3 {
            assert!((k[(i, j)] - t[i][j].re).abs() < 1e-14);
            assert!((k[(i, j + 3)] - t[i][j].im).abs() < 1e-14);
            assert!((k[(i + 3, j)] - t[i][j].im).abs() < 1e-14);
            assert!((k[(i + 3, j + 3)] + t[i][j].re).abs() < 1e-14);
        }
    }
}

fn rot(i: usize, j: usize, t: f64) -> Mat6 {
    // e_i -> cos t e_i + sin t e_j
    let mut m = Mat6::identity();
    let (s, c) = t.sin_cos();
    m[(i - 1, i - 1)] = c;
    m[(j - 1, j - 1)] = c;
    m[(j - 1, i - 1)] = s;
    m[(i - 1, j - 1)] = -s;
    m
}

fn composition_oracle(p: &AngleParams) -> Mat6 {
    let alpha = 0.5 * (p.psi + p.theta);
    let beta = 0.5 * (p.psi - p.theta);
    let s = rot(1, 4, p.phi1)
        * rot(2, 5, p.phi2)
        * rot(3, 6, p.phi3)
        * rot(2, 4, beta)
        * rot(1, 5, FRAC_PI_2 - alpha)
        * rot(1, 6, p.phi);
    let mut reference = Mat6::zeros();
    for (i, j, c) in [(1, 3, -1.0), (2, 5, 1.0), (4, 6, 1.0)] {
        reference[(i - 1, j - 1)] = c;
        reference[(j - 1, i - 1)] = -c;
    }
    s * reference * s.transpose()
}

fn random_params(rng: &mut impl Rng) -> AngleParams {
    let h = FRAC_PI_2;
    AngleParams::new(
        rng.gen_range(-h..h),
        rng.gen_range(-h..h),
        rng.gen_range(-h..h),
        rng.gen_range(-PI..PI),
        rng.gen_range(-PI..PI),
        rng.gen_range(-PI..PI),
    )
    .unwrap()
}

#[test]
fn angle_structure_matches_rotation_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..300 {
        let p = random_params(&mut rng);
        let j = acs_from_angles(&p);
        assert!(max_abs(&(j.into_matrix() - composition_oracle(&p))) < 1e-13);
        assert!((j.entry(3, 6) - p.phi.sin()).abs() < 1e-13);
    }
}

#[test]
fn orbit_representative_on_trivial_torus() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..200 {
        let p = random_params(&mut rng).with_torus([0.0, 0.0, 0.0]);
        let w = form_from_angles(p.phi, p.psi, p.theta);
        assert!(w.max_abs_diff(&acs_from_angles(&p).fundamental_form()) < 1e-13);
    }
}

#[test]
fn verbatim_table_is_a_torus_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let p = random_params(&mut rng);
        let shifted = p.with_torus(p.torus().map(|a| FRAC_PI_2 - a));
        let verbatim = closed_form_matrix(&p, Table::Verbatim);
        assert!(max_abs(&(verbatim.into_matrix() - composition_oracle(&shifted))) < 1e-13);
    }
}

#[test]
fn calabi_eckmann_angles() {
    let p = AngleParams::new(0.0, FRAC_PI_2, -FRAC_PI_2, 0.0, FRAC_PI_2, 0.0).unwrap();
    let expected = TwoForm::from_terms(&[(1.0, 1, 4), (1.0, 2, 3), (-1.0, 5, 6)]);
    assert!(acs_from_angles(&p).fundamental_form().max_abs_diff(&expected) < 1e-15);
}

/// `P_4 B P_4^T` on 2-forms over `(e1, e2, e4, e5)`, read in the given basis.
fn induced(p4: &Matrix4<f64>, basis4: &[Matrix4<f64>; 3]) -> nalgebra::Matrix3<f64> {
    let dot = |a: &Matrix4<f64>, b: &Matrix4<f64>| a.component_mul(b).sum() / 2.0;
    nalgebra::Matrix3::from_fn(|r, c| {
        let image = p4 * basis4[c] * p4.transpose();
        dot(&basis4[r], &image) / dot(&basis4[r], &basis4[r])
    })
}

fn form4(terms: &[(f64, usize, usize)]) -> Matrix4<f64> {
    // positions of e1, e2, e4, e5
    let pos = |i: usize| [0, 1, usize::MAX, 2, 3][i - 1];
    let mut m = Matrix4::zeros();
    for &(c, i, j) in terms {
        m[(pos(i), pos(j))] += c;
        m[(pos(j), pos(i))] -= c;
    }
    m
}

#[test]
fn p_matrices_are_the_induced_action() {
    let plus_basis =
        [form4(&[(1.0, 1, 4), (1.0, 2, 5)]), form4(&[(1.0, 1, 2), (1.0, 5, 4)]), form4(&[(1.0, 1, 5), (1.0, 4, 2)])];
    let minus_basis =
        [form4(&[(1.0, 1, 4), (-1.0, 2, 5)]), form4(&[(1.0, 1, 2), (-1.0, 5, 4)]), form4(&[(1.0, 1, 5), (-1.0, 4, 2)])];
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..100 {
        let (psi, theta) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
        let p = p_matrices(psi, theta);
        assert!((p.so4.determinant() - 1.0).abs() < 1e-12);
        assert!((induced(&p.so4, &plus_basis) - p.plus).abs().max() < 1e-13);
        assert!((induced(&p.so4, &minus_basis) - p.minus).abs().max() < 1e-13);
        assert!((p.plus.determinant() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn pfaffian_by_permutation_sum() {
    // sum over perfect matchings of {1..6}, sign normalized so that Pf(w0) = 1
    fn matchings(rest: &[usize]) -> Vec<(f64, Vec<(usize, usize)>)> {
        if rest.is_empty() {
            return vec![(1.0, vec![])];
        }
        let first = rest[0];
        let mut out = Vec::new();
        for k in 1..rest.len() {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let others: Vec<usize> =
                rest.iter().enumerate().filter(|&(n, _)| n != 0 && n != k).map(|(_, &v)| v).collect();
            for (s, mut m) in matchings(&others) {
                m.push((first, rest[k]));
                out.push((sign * s, m));
            }
        }
        out
    }
    let all = matchings(&[1, 2, 3, 4, 5, 6]);
    assert_eq!(all.len(), 15);
    let textbook =
        |w: &TwoForm| all.iter().map(|(s, m)| s * m.iter().map(|&(i, j)| w.get(i, j)).product::<f64>()).sum::<f64>();
    let w0 = standard_structure(0).fundamental_form();
    assert_eq!(textbook(&w0), -1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..100 {
        let w = TwoForm::from_coefficients(std::array::from_fn(|_| rng.gen_range(-2.0..2.0)));
        assert!((pfaffian(&w) + textbook(&w)).abs() < 1e-12);
    }
}

#[test]
fn nijenhuis_by_hand_on_vertex() {
    // I0: e1 -> -e4, e2 -> -e5, e3 -> -e6
    let g = LieAlgebra6::su2xsu2();
    let i0 = standard_structure(0);
    // N(e1, e4) = [-e4, e1] - [e1, e4] - J[-e4, e4] - J[e1, e1] = 0
    assert_eq!(nijenhuis(&g, &i0, &basis(1), &basis(4)), nalgebra::Vector6::zeros());
    // N(e1, e5) = [-e4, -e2] - 0 - J[-e4, e5] - J[e1, -e2] = -J(-e6) + J e3 = -e6 + ... computed below
    let jm = i0.matrix();
    let br = |x: &nalgebra::Vector6<f64>, y: &nalgebra::Vector6<f64>| g.bracket(x, y);
    let (x, y) = (basis(1), basis(5));
    let expected = br(&(jm * x), &(jm * y)) - br(&x, &y) - jm * br(&(jm * x), &y) - jm * br(&x, &(jm * y));
    assert_eq!(nijenhuis(&g, &i0, &x, &y), expected);
    assert!(expected.norm() > 0.5);
}

#[test]
fn round_trip_through_projective_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..300 {
        let z = random_point(&mut rng, 2.0);
        let p = ProjPoint::new(z).unwrap();
        let j = Acs::new(lambda2_structure(z), 1e-9).unwrap();
        let back = chart_point_from_acs(&j);
        assert!(back.canonical_distance(&p) < 1e-10);
    }
}
