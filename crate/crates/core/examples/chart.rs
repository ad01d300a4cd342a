//! The projective chart around I_0: coordinates (a, b, c) to a structure
//! and back, and the Cayley operator K.

use acs6::chart::{acs_from_chart, cayley_k, chart_denominator, chart_from_acs, ChartCoords};
use acs6::Complex64;

fn main() {
    let c = ChartCoords::new(Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.0), Complex64::new(0.0, 0.7));
    let j = acs_from_chart(&c);
    println!("structure at [1, {}, {}, {}]:", c.a(), c.b(), c.c());
    println!("{:.6}", j.matrix());
    println!("form: {:.6}", j.fundamental_form());
    println!("defects: {:?}", j.report());
    println!("chart denominator 1 + J14 + J25 + J36 = {:.6}", chart_denominator(&j));

    let back = chart_from_acs(&j).expect("inside the chart");
    println!("recovered a = {:.12}, b = {:.12}, c = {:.12}", back.a(), back.b(), back.c());

    let k = cayley_k(&c);
    println!("K (anticommutes with I_0 up to {:e}):", k.anticommutator_defect());
    println!("{:.6}", k.matrix());
    let rebuilt = k.reconstruct().expect("1 - K invertible");
    println!("|(1-K) I_0 (1-K)^-1 - J| = {:e}", rebuilt.max_abs_diff(&j));
}
