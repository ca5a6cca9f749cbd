//! Root diagrams as SVG and ASCII.
//!
//! ```bash
//! cargo run --example root_diagram -- /tmp/sl3c.svg
//! ```

use cwlab::diagram::{labeled_roots, render_ascii, render_svg, swap_invariant};
use cwlab::presets;
use cwlab::{Error, Result};

fn main() -> Result<()> {
    for p in [presets::su3_gellmann(), presets::sl3c()] {
        let roots = labeled_roots(&p)?;
        println!("{} (swap invariant: {})", p.name(), swap_invariant(&roots));
        print!("{}", render_ascii(&roots)?);
        println!();
    }

    let svg = render_svg(&labeled_roots(&presets::sl3c())?)?;
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &svg).map_err(|source| Error::Io {
                path: path.clone().into(),
                source,
            })?;
            println!("wrote {path}");
        }
        None => print!("{svg}"),
    }
    Ok(())
}
