//! Normal-ordered boson polynomials and the bilinear SU(3) generators.
//!
//! ```bash
//! cargo run --example boson_algebra
//! ```

use cwlab::boson::{boson_commutator, make_generator, normal_product, GENERATOR_NAMES};
use cwlab::{BosonMonomial, BosonPoly, Result, Scalar};

fn main() -> Result<()> {
    // C1² · C1⁺² reordered with creations first
    let c2 = BosonPoly::monomial(BosonMonomial::new(vec![0, 0, 0], vec![2, 0, 0])?, Scalar::one());
    let cd2 = BosonPoly::monomial(BosonMonomial::new(vec![2, 0, 0], vec![0, 0, 0])?, Scalar::one());
    println!("C1^2 * C1+^2 = {}", normal_product(&c2, &cd2)?);

    for name in GENERATOR_NAMES {
        println!("{name:>4} = {}", make_generator(name)?);
    }

    let pairs = [("Eg", "E-g"), ("Ea", "Eb"), ("E-a", "E-b"), ("Ea", "H2"), ("H1", "H2")];
    println!();
    for (a, b) in pairs {
        let bracket = boson_commutator(&make_generator(a)?, &make_generator(b)?)?;
        println!("[{a},{b}] = {bracket}");
    }
    Ok(())
}
