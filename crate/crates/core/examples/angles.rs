//! Six-angle coordinates: the rotation composition, the orbit representative
//! for trivial torus angles, the torus action, and the closed-form table.

use std::f64::consts::FRAC_PI_2;

use acs6::angles::closed_form::{closed_form_matrix, Table};
use acs6::angles::{acs_from_angles, form_from_angles, rotation_factors, t3_act, AngleParams};

fn main() {
    let p = AngleParams::new(0.3, -0.7, 1.1, 0.4, 2.5, 5.9).unwrap();
    println!("angles {p:?}");
    for r in rotation_factors(&p) {
        println!("  rotate <e{}, e{}> by {:+.4}", r.plane.0, r.plane.1, r.angle);
    }
    let j = acs_from_angles(&p);
    println!("form: {:.6}", j.fundamental_form());
    println!("J36 = {:.12}, sin phi = {:.12}", j.entry(3, 6), p.phi.sin());

    let corrected = closed_form_matrix(&p, Table::Corrected);
    let verbatim = closed_form_matrix(&p, Table::Verbatim);
    println!("corrected table vs composition: {:e}", corrected.max_abs_diff(&j));
    println!("verbatim table vs composition:  {:.3}", verbatim.max_abs_diff(&j));
    let shifted = p.with_torus(p.torus().map(|a| FRAC_PI_2 - a));
    println!("verbatim table vs composition at pi/2 - phi_k: {:e}", verbatim.max_abs_diff(&acs_from_angles(&shifted)));

    let rep = form_from_angles(p.phi, p.psi, p.theta);
    println!("\norbit representative: {rep:.6}");
    let moved = t3_act(&acs_from_angles(&p.with_torus([0.0; 3])), p.phi1, p.phi2, p.phi3);
    println!("torus action reaches the full structure: {:e}", moved.max_abs_diff(&j));
}
