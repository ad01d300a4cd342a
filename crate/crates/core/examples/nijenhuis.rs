//! Integrable and maximally non-integrable structures on su(2) x su(2).

use std::f64::consts::PI;

use acs6::acs::{acs_from_form, standard_structure};
use acs6::lie::{
    calabi_eckmann_catalog, calabi_eckmann_structure, is_block_offdiagonal, meridian_forms, nijenhuis_norm,
    LieAlgebra6, Meridian, MeridianVariant, INTEGRABILITY_TOL,
};
use acs6::scan::{nijenhuis_sweep, ScanSpec};

fn main() {
    let g = LieAlgebra6::su2xsu2();
    let ce = nijenhuis_norm(&g, &calabi_eckmann_structure(), INTEGRABILITY_TOL);
    println!("Calabi-Eckmann: {ce:?}");

    println!("\ncatalog:");
    for e in calabi_eckmann_catalog() {
        let j = acs_from_form(&e.form, 1e-12).unwrap();
        println!(
            "  {}  {:<20} norm {:.1e}",
            e.label(),
            e.form.to_string(),
            nijenhuis_norm(&g, &j, INTEGRABILITY_TOL).norm
        );
    }

    println!("\nvertices:");
    for k in 0..4 {
        println!("  I_{k}: norm {:.9}", nijenhuis_norm(&g, &standard_structure(k), INTEGRABILITY_TOL).norm);
    }

    println!("\nmeridians (oriented):");
    for side in [Meridian::Plus, Meridian::Minus] {
        for t in [-PI, -1.0, 0.0, 2.0] {
            let w = meridian_forms(side, t, MeridianVariant::Oriented).unwrap();
            let j = acs_from_form(&w, 1e-12).unwrap();
            println!(
                "  {side:?} t={t:+.3}: norm {:.9}, block off-diagonal {}, in Z {}",
                nijenhuis_norm(&g, &j, INTEGRABILITY_TOL).norm,
                is_block_offdiagonal(&j, 1e-12),
                j.in_z()
            );
        }
    }

    let rows = nijenhuis_sweep(&g, &ScanSpec::AngleRandom { samples: 20_000, seed: 1 }).unwrap();
    let best = rows.iter().max_by(|a, b| a.norm.total_cmp(&b.norm)).unwrap();
    println!("\nlargest norm in 20000 random structures: {:.9} at {:?}", best.norm, best.angles);
}
