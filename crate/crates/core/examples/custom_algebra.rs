//! Loading structure constants from JSON and testing integrability on
//! another algebra (here a Heisenberg algebra plus an abelian summand).

use acs6::acs::standard_structure;
use acs6::io::{algebra_json, parse_algebra};
use acs6::lie::{nijenhuis_norm, INTEGRABILITY_TOL};

fn main() {
    // [e1, e2] = e3
    let text = r#"{"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 1.0}]}"#;
    let g = parse_algebra(text).expect("valid algebra");
    println!("{}", algebra_json(&g));
    for k in 0..4 {
        let r = nijenhuis_norm(&g, &standard_structure(k), INTEGRABILITY_TOL);
        println!("I_{k}: norm {:.6}, integrable {}", r.norm, r.integrable);
    }
    let broken = r#"{"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 1.0}, {"i": 1, "j": 3, "k": 1, "c": 1.0}]}"#;
    println!("{}", parse_algebra(broken).unwrap_err());
}
