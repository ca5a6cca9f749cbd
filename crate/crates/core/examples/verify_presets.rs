//! Cartan-Weyl checks on every built-in presentation.
//!
//! ```bash
//! cargo run --example verify_presets
//! ```

use cwlab::presets::{self, PRESET_NAMES};
use cwlab::report::{render_verify, Format};
use cwlab::verifier::Eq2Result;
use cwlab::{verify_cartan_weyl, Result};

fn main() -> Result<()> {
    for name in PRESET_NAMES {
        let r = verify_cartan_weyl(&presets::preset(name)?);
        let v = r.verdicts;
        println!(
            "{name:<13} eq1 {} eq2 {} eq3 strict {} relaxed {} eq4 {}",
            v.eq1, v.eq2, v.eq3_strict, v.eq3_relaxed, v.eq4
        );
        for e in &r.eq2 {
            match &e.result {
                Eq2Result::Root { root } => println!("    {:<7} root {root}", e.label),
                Eq2Result::NotEigen { failing_cartan } => {
                    println!("    {:<7} not an eigenvector of ad {failing_cartan}", e.label)
                }
                Eq2Result::ZeroElement => println!("    {:<7} zero", e.label),
            }
        }
        for row in r.eq3.rows.iter().filter(|row| !row.strict) {
            println!("    [{},{}] - α·H = {}", row.positive, row.negative, row.residual);
        }
    }

    println!();
    print!("{}", render_verify(&verify_cartan_weyl(&presets::su3_boson()), Format::Md)?);
    Ok(())
}
