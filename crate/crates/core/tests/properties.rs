use std::f64::consts::{FRAC_PI_2, PI};

use acs6::acs::{acs_from_form, standard_structure, validate, DEFAULT_TOL};
use acs6::angles::{acs_from_angles, t3_act, AngleParams};
use acs6::chart::{acs_from_chart, acs_from_point, chart_from_acs, chart_point_from_acs, ChartCoords, ProjPoint};
use acs6::lie::{block_diagonal, nijenhuis, nijenhuis_norm, LieAlgebra6, INTEGRABILITY_TOL};
use acs6::linalg6::{mat_inverse, max_abs, pfaffian, Mat6, TwoForm, Vec6};
use acs6::{Acs, Complex64};
use nalgebra::{Matrix3, Rotation3, Vector3};
use proptest::prelude::*;

fn coord(r: f64) -> impl Strategy<Value = f64> {
    -r..r
}

fn complex(r: f64) -> impl Strategy<Value = Complex64> {
    (coord(r), coord(r)).prop_map(|(a, b)| Complex64::new(a, b))
}

fn chart(r: f64) -> impl Strategy<Value = ChartCoords> {
    (complex(r), complex(r), complex(r)).prop_map(|(a, b, c)| ChartCoords::new(a, b, c))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    prop::array::uniform4(complex(2.0))
        .prop_filter("nonzero", |z| z.iter().any(|c| c.norm() > 1e-3))
        .prop_map(|z| ProjPoint::new(z).unwrap())
}

fn matrix() -> impl Strategy<Value = Mat6> {
    prop::array::uniform32(coord(2.0)).prop_flat_map(|head| {
        prop::array::uniform4(coord(2.0))
            .prop_map(move |tail| Mat6::from_iterator(head.iter().chain(tail.iter()).copied()))
    })
}

/// Q factor of a random matrix, with its sign fixed to det = +1.
fn rotation() -> impl Strategy<Value = Mat6> {
    matrix().prop_filter_map("full rank", |m| {
        let qr = m.qr();
        if qr.r().diagonal().iter().any(|d| d.abs() < 1e-3) {
            return None;
        }
        let mut q = qr.q();
        if q.determinant() < 0.0 {
            q.column_mut(0).neg_mut();
        }
        Some(q)
    })
}

fn angles() -> impl Strategy<Value = AngleParams> {
    (-FRAC_PI_2..FRAC_PI_2, -PI..PI, -PI..PI, -2.0 * PI..2.0 * PI, -2.0 * PI..2.0 * PI, -2.0 * PI..2.0 * PI)
        .prop_map(|(a, b, c, d, e, f)| AngleParams::new(a, b, c, d, e, f).unwrap())
}

fn vec6() -> impl Strategy<Value = Vec6> {
    prop::array::uniform6(coord(3.0)).prop_map(Vec6::from)
}

fn so3() -> impl Strategy<Value = Matrix3<f64>> {
    (coord(1.0), coord(1.0), coord(1.0), 0.0..PI).prop_filter_map("axis", |(x, y, z, t)| {
        let axis = Vector3::new(x, y, z);
        (axis.norm() > 1e-2).then(|| *Rotation3::from_axis_angle(&nalgebra::Unit::new_normalize(axis), t).matrix())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pfaffian_squares_to_determinant(c in prop::array::uniform15(coord(2.0))) {
        let w = TwoForm::from_coefficients(c);
        let det = w.to_skew_matrix().determinant();
        let pf = pfaffian(&w);
        prop_assert!((pf * pf - det).abs() < 1e-9 * (1.0 + det.abs()));
    }

    #[test]
    fn inverse_of_inverse(m in matrix()) {
        if let Ok(inv) = mat_inverse(&m, 1e-6) {
            if let Ok(back) = mat_inverse(&inv, 1e-12) {
                prop_assert!(max_abs(&(back - m)) < 1e-6 * (1.0 + max_abs(&inv)).powi(2));
                prop_assert!(max_abs(&(m * inv - Mat6::identity())) < 1e-6 * (1.0 + max_abs(&inv)));
            }
        }
    }

    #[test]
    fn skew_matrix_round_trip(c in prop::array::uniform15(coord(5.0))) {
        let w = TwoForm::from_coefficients(c);
        let m = w.to_skew_matrix();
        prop_assert_eq!(m.transpose(), -m);
        prop_assert_eq!(TwoForm::from_upper_triangle(&m), w);
    }

    #[test]
    fn chart_output_is_valid(c in chart(10.0)) {
        let j = acs_from_chart(&c);
        let r = j.report();
        prop_assert!(r.square_defect < 1e-12 && r.orth_defect < 1e-12);
        prop_assert!(r.skew_defect < 1e-12);
        prop_assert_eq!(r.orientation, 1);
    }

    #[test]
    fn form_round_trip_on_valid_structures(c in chart(5.0)) {
        let j = acs_from_chart(&c);
        let w = j.fundamental_form();
        let back = acs_from_form(&w, DEFAULT_TOL).unwrap();
        prop_assert_eq!(back, j);
        prop_assert_eq!(back.fundamental_form(), w);
    }

    #[test]
    fn conjugation_keeps_structures_valid(c in chart(3.0), s in rotation()) {
        let j = acs_from_chart(&c).conjugate(&s);
        let r = validate(j.matrix());
        prop_assert!(r.max_defect() < 1e-12);
        prop_assert_eq!(r.orientation, 1);
    }

    #[test]
    fn chart_inverse(c in chart(10.0)) {
        let back = chart_from_acs(&acs_from_chart(&c)).unwrap();
        let scale = 1.0 + c.to_array().iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(back.max_abs_diff(&c) < 1e-9 * scale);
    }

    #[test]
    fn projective_scale_invariance(p in point(), re in coord(3.0), im in coord(3.0)) {
        let lambda = Complex64::new(re, im);
        prop_assume!(lambda.norm() > 1e-2);
        let q = p.scaled(lambda).unwrap();
        prop_assert!(acs_from_point(&p).max_abs_diff(&acs_from_point(&q)) < 1e-12);
    }

    #[test]
    fn point_round_trip(p in point()) {
        let back = chart_point_from_acs(&acs_from_point(&p));
        prop_assert!(back.canonical_distance(&p) < 1e-10);
    }

    #[test]
    fn torus_action_group_law(c in chart(3.0), a in prop::array::uniform3(coord(7.0)), b in prop::array::uniform3(coord(7.0))) {
        let j = acs_from_chart(&c);
        let lhs = t3_act(&t3_act(&j, a[0], a[1], a[2]), b[0], b[1], b[2]);
        let rhs = t3_act(&j, a[0] + b[0], a[1] + b[1], a[2] + b[2]);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn torus_fixes_vertices(k in 0usize..4, a in prop::array::uniform3(coord(7.0))) {
        let i = standard_structure(k);
        prop_assert!(t3_act(&i, a[0], a[1], a[2]).max_abs_diff(&i) < 1e-15);
    }

    #[test]
    fn torus_shifts_platform_angles(p in angles(), a in prop::array::uniform3(coord(3.0))) {
        let moved = t3_act(&acs_from_angles(&p), a[0], a[1], a[2]);
        let shifted = p.with_torus([p.phi1 + a[0], p.phi2 + a[1], p.phi3 + a[2]]);
        prop_assert!(moved.max_abs_diff(&acs_from_angles(&shifted)) < 1e-12);
    }

    #[test]
    fn angle_structures_are_in_z(p in angles()) {
        let j = acs_from_angles(&p);
        prop_assert!(j.report().max_defect() < 1e-12);
        prop_assert!(j.in_z());
        prop_assert!((j.entry(3, 6) - p.phi.sin()).abs() < 1e-12);
    }

    #[test]
    fn nijenhuis_is_antisymmetric_and_bilinear(c in chart(3.0), x in vec6(), y in vec6(), z in vec6(), t in coord(4.0)) {
        let g = LieAlgebra6::su2xsu2();
        let j = acs_from_chart(&c);
        let n = |a: &Vec6, b: &Vec6| nijenhuis(&g, &j, a, b);
        let scale = 1.0 + x.norm() * (y.norm() + z.norm()) * (1.0 + t.abs());
        prop_assert!((n(&x, &y) + n(&y, &x)).norm() < 1e-12 * scale);
        prop_assert!(n(&x, &x).norm() < 1e-12 * scale);
        prop_assert!((n(&x, &(y * t + z)) - (n(&x, &y) * t + n(&x, &z))).norm() < 1e-12 * scale);
        prop_assert!((n(&(y * t + z), &x) - (n(&y, &x) * t + n(&z, &x))).norm() < 1e-12 * scale);
    }

    #[test]
    fn nijenhuis_norm_is_automorphism_invariant(c in chart(3.0), a in so3(), b in so3()) {
        let g = LieAlgebra6::su2xsu2();
        let j = acs_from_chart(&c);
        let s = block_diagonal(&a, &b);
        let before = nijenhuis_norm(&g, &j, INTEGRABILITY_TOL).norm;
        let after = nijenhuis_norm(&g, &j.conjugate(&s), INTEGRABILITY_TOL).norm;
        prop_assert!((before - after).abs() < 1e-9);
    }

    #[test]
    fn factor_swap_preserves_norm(c in chart(3.0)) {
        // (e1,e2,e3) <-> (e4,e5,e6) is an automorphism of su(2) x su(2) with det -1
        let g = LieAlgebra6::su2xsu2();
        let mut s = Mat6::zeros();
        for i in 0..3 {
            s[(i + 3, i)] = 1.0;
            s[(i, i + 3)] = 1.0;
        }
        let j = acs_from_chart(&c);
        let swapped = Acs::new(s * j.matrix() * s.transpose(), DEFAULT_TOL).unwrap();
        prop_assert!(!swapped.in_z());
        let before = nijenhuis_norm(&g, &j, INTEGRABILITY_TOL).norm;
        prop_assert!((before - nijenhuis_norm(&g, &swapped, INTEGRABILITY_TOL).norm).abs() < 1e-9);
    }
}
