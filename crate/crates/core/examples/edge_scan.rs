//! Writes the edge E_01 on a (psi, phi) grid as CSV, ready for plotting.
//!
//!     cargo run -p acs6 --example edge_scan > edge.csv

use std::f64::consts::{FRAC_PI_2, PI};

use acs6::chart::edge01_sphere_coords;
use acs6::scan::{edge_csv, edge_scan, ParamRange};

fn main() {
    let rows = edge_scan(ParamRange::new(-FRAC_PI_2, FRAC_PI_2, 7), ParamRange::new(-PI, PI, 13)).unwrap();
    let worst = rows
        .iter()
        .filter(|r| r.psi.abs() < FRAC_PI_2 - 1e-9 && r.phi.abs() < PI - 1e-9)
        .map(|r| {
            let (psi, phi) = edge01_sphere_coords(&r.form);
            (psi - r.psi).abs().max((phi - r.phi).abs())
        })
        .fold(0.0, f64::max);
    eprintln!("{} rows, coordinate recovery error {worst:e}", rows.len());
    print!("{}", edge_csv(&rows));
}
