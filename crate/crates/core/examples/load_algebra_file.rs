//! Loading presentations from JSON and reporting validation errors.
//!
//! ```bash
//! cargo run --example load_algebra_file
//! cargo run --example load_algebra_file -- path/to/algebra.json
//! ```

use std::path::PathBuf;

use cwlab::algebra_file::{load_algebra_file, parse_algebra_json};
use cwlab::report::{render_roots, roots_report, Format};
use cwlab::{verify_cartan_weyl, Result};

fn main() -> Result<()> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let paths: Vec<PathBuf> = match std::env::args().nth(1) {
        Some(p) => vec![p.into()],
        None => vec![data.join("sl2_boson.json"), data.join("sl3_normalized.json")],
    };
    for path in paths {
        let p = load_algebra_file(&path)?;
        let r = verify_cartan_weyl(&p);
        println!(
            "{}: {} generators, strict {}, relaxed {}",
            p.name(),
            p.generators().len(),
            r.verdicts.strict,
            r.verdicts.relaxed
        );
        print!("{}", render_roots(&roots_report(&p), Format::Txt)?);
    }

    println!();
    let broken = [
        r#"{"name": "x", "backend": "matrix", "n": 2, "cartan": ["A"], "generators": [{"label": "A", "entries": [["1", "0"], ["0", "sqrt5"]]}]}"#,
        r#"{"name": "x", "backend": "matrix", "n": 2, "cartan": ["A"], "generators": [{"label": "A", "entries": [["1", "0"]]}]}"#,
        r#"{"name": "x", "backend": "matrix", "n": 2, "cartan": ["A"], "generatrs": []}"#,
    ];
    for text in broken {
        if let Err(e) = parse_algebra_json(text) {
            println!("rejected: {e}");
        }
    }
    Ok(())
}
