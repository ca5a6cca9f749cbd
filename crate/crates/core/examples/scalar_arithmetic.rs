//! Exact arithmetic in Q(i, √2, √3).
//!
//! ```bash
//! cargo run --example scalar_arithmetic
//! ```

use cwlab::scalar::{scalar_arithmetic, ArithOp};
use cwlab::{format_scalar, parse_scalar, Result};

fn main() -> Result<()> {
    let a = parse_scalar("1/2 + sqrt3*i")?;
    let b = parse_scalar("sqrt2 - 1/3*i")?;
    for (op, sym) in [
        (ArithOp::Add, "+"),
        (ArithOp::Sub, "-"),
        (ArithOp::Mul, "*"),
        (ArithOp::Div, "/"),
    ] {
        let c = scalar_arithmetic(&a, &b, op)?;
        println!("({a}) {sym} ({b}) = {}", format_scalar(&c));
    }

    // radicals multiply within the field
    let s6 = &parse_scalar("sqrt2")? * &parse_scalar("sqrt3")?;
    println!("sqrt2 * sqrt3 = {s6}");
    println!("1/sqrt6 = {}", s6.inv()?);

    // inputs are normalized to a canonical text form
    for text in ["2*(sqrt3 + i) - 2*i", "(1 + i)*(1 - i)", "1/12*sqrt6*sqrt6"] {
        println!("{text:>20}  ->  {}", format_scalar(&parse_scalar(text)?));
    }

    match scalar_arithmetic(&a, &parse_scalar("0")?, ArithOp::Div) {
        Err(e) => println!("a / 0: {e}"),
        Ok(v) => println!("a / 0 = {v}"),
    }
    Ok(())
}
