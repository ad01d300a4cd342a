//! All of CP^3: vertex transport to the faces z^k = 0 and the total inverse.

use acs6::acs::standard_structure;
use acs6::chart::{acs_from_point, chart_from_acs, chart_point_from_acs, vertex_transport, ProjPoint};
use acs6::Complex64;

fn main() {
    for k in 0..4 {
        let s = vertex_transport(k);
        let moved = standard_structure(0).conjugate(&s);
        println!("S_{k} I_0 S_{k}^T = I_{k}: {}", moved == standard_structure(k));
        println!("  form of I_{k}: {}", standard_structure(k).fundamental_form());
    }

    let re = |x: f64| Complex64::new(x, 0.0);
    let p = ProjPoint::new([re(0.0), Complex64::new(0.0, 1.0), re(0.5), re(-2.0)]).unwrap();
    let j = acs_from_point(&p);
    println!("\npoint {:?} on the face z^0 = 0", p.coords());
    println!("form: {:.6}", j.fundamental_form());
    match chart_from_acs(&j) {
        Ok(c) => println!("chart coords {c:?}"),
        Err(e) => println!("chart around I_0: {e}"),
    }
    let q = chart_point_from_acs(&j);
    println!("recovered (canonical) {:?}", q.coords());
    println!("distance to input: {:e}", q.canonical_distance(&p));
}
