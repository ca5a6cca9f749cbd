//! Printed reference tables compared against recomputed values.
//!
//! ```bash
//! cargo run --example errata_report
//! ```

use cwlab::errata::errata;
use cwlab::lie::jacobi_check;
use cwlab::presets::{self, PRESET_NAMES};
use cwlab::reference::{printed_structure_constants, reference_tables};
use cwlab::report::{render_errata, Format};
use cwlab::Result;

fn main() -> Result<()> {
    for name in PRESET_NAMES {
        let report = errata(name)?;
        println!("{name}: {} entries", report.entries.len());
    }

    println!();
    print!("{}", render_errata(&errata("su3-x")?, Format::Md)?);

    let p = presets::su3_x();
    let printed = printed_structure_constants(&p, reference_tables("su3-x")?.brackets)?;
    let bad = jacobi_check(&printed);
    println!("\nprinted X table: {} Jacobi triples fail", bad.len());
    Ok(())
}
