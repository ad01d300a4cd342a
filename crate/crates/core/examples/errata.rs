//! Regenerates ERRATA.md: every entry of the published closed-form table that
//! disagrees with the rotation composition, with a counterexample.
//!
//!     cargo run -p acs6 --example errata > crates/core/ERRATA.md

use acs6::angles::closed_form::{errata_table, render_errata_markdown, ERRATA_SAMPLES, ERRATA_THRESHOLD};

fn main() {
    let errata = errata_table(ERRATA_SAMPLES, ERRATA_THRESHOLD);
    print!("{}", render_errata_markdown(&errata));
}
