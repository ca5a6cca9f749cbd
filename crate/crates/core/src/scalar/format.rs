use num_traits::{One, Signed, Zero};

use super::{Radical, Scalar};

/// Canonical text form, readable back by [`parse_scalar`](super::parse_scalar).
///
/// Terms appear in the order (1, √2, √3, √6) × (real, imaginary); a unit
/// coefficient is omitted in front of a radical or `i`.
pub fn format_scalar(x: &Scalar) -> String {
    let mut out = String::new();
    for radical in Radical::ALL {
        for imaginary in [false, true] {
            let q = x.coord(radical, imaginary);
            if q.is_zero() {
                continue;
            }
            let negative = q.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }

            let mag = q.abs();
            let mut factors: Vec<String> = Vec::with_capacity(3);
            let bare = radical != Radical::One || imaginary;
            if !(bare && mag.is_one()) {
                factors.push(mag.to_string());
            }
            if let Some(tok) = radical.token() {
                factors.push(tok.to_string());
            }
            if imaginary {
                factors.push("i".to_string());
            }
            out.push_str(&factors.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
