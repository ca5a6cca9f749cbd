//! Commutator table of the eight X matrices, with every bracket
//! expanded in the basis itself.
//!
//! ```bash
//! cargo run --example commutator_table
//! ```

use cwlab::presets;
use cwlab::report::{commutator_table, render_table, Format};
use cwlab::Result;

fn main() -> Result<()> {
    let p = presets::su3_x();
    for g in p.generators().iter().take(2) {
        println!("{} =", g.label);
        for row in g.element.as_matrix().expect("matrix preset").rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
            println!("  [{}]", cells.join(" "));
        }
    }
    println!();

    let table = commutator_table(&p)?;
    print!("{}", render_table(&table, Format::Txt)?);

    let row = table.row("X3", "X4").expect("row exists");
    let coeffs: Vec<String> = row.coefficients.iter().map(|c| c.to_string()).collect();
    println!("\n[X3,X4] coefficients over X1..X8: ({})", coeffs.join(", "));
    Ok(())
}
