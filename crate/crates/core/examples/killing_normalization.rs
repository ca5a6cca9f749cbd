//! Rescaling sl(3, C) so that the Killing form is canonical, then matching
//! its structure constants against the boson realization.
//!
//! ```bash
//! cargo run --example killing_normalization
//! ```

use cwlab::lie::{killing_form, normalize_presentation};
use cwlab::presets::{self, boson_to_sl3c_labels};
use cwlab::verifier::Comparison;
use cwlab::{compare_presentations, verify_cartan_weyl, Result};

fn main() -> Result<()> {
    let raw = presets::sl3c();
    let q = normalize_presentation(&raw)?;

    println!("Killing form before and after:");
    for (a, b) in [("H1", "H1"), ("H1", "H2"), ("H2", "H2"), ("Ea", "E-a")] {
        let before = killing_form(raw.get(a)?, raw.get(b)?, &raw)?;
        let after = killing_form(q.get(a)?, q.get(b)?, &q)?;
        println!("  K({a},{b}) {before:>6} -> {after}");
    }

    let r = verify_cartan_weyl(&q);
    println!("\nnormalized eq3 strict: {}", r.verdicts.eq3_strict);
    for e in &r.eq4.table {
        if e.left < e.right {
            println!("  N({},{}) = {}", e.left, e.right, e.n);
        }
    }

    let verdict = compare_presentations(&presets::su3_boson(), &q, &boson_to_sl3c_labels())?;
    match verdict {
        Comparison::Equal => println!("\nsu3-boson and normalized sl3c have equal structure constants"),
        other => println!("\nfirst mismatch: {other:?}"),
    }
    Ok(())
}
