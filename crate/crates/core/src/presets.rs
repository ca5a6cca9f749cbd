//! The four built-in presentations of su(3) / sl(3, C).
//!
//! | preset | backend | Cartan | ladders |
//! |--------|---------|--------|---------|
//! | `su3-x` | matrix | X7, X8 | the raw hermitian X1…X6 |
//! | `su3-boson` | boson | H1, H2 | (1/√6) C_i⁺C_j |
//! | `sl3c` | matrix | diag(1,−1,0), diag(0,1,−1) | matrix units E_ij |
//! | `su3-gellmann` | matrix | X7, X8 | (X_k ± i X_{k+1}) / 2 |

use std::collections::BTreeMap;

use crate::boson::make_generator;
use crate::error::{Error, Result};
use crate::lie::ladder_combine;
use crate::matrix::Mat;
use crate::presentation::{Generator, Presentation};
use crate::scalar::Scalar;

pub const PRESET_NAMES: [&str; 4] = ["su3-x", "su3-boson", "sl3c", "su3-gellmann"];

/// X1…X8 as 3×3 matrices. X8 = (1/√3)·diag(1, 1, −2).
pub fn x_matrices() -> Vec<Mat> {
    let i = Scalar::i();
    let zero = Scalar::zero;
    let one = Scalar::one;
    let sym = |r: usize, c: usize| {
        let mut rows = vec![vec![zero(); 3]; 3];
        rows[r][c] = one();
        rows[c][r] = one();
        Mat::from_rows(rows).expect("3x3")
    };
    let antisym = |r: usize, c: usize| {
        let mut rows = vec![vec![zero(); 3]; 3];
        rows[r][c] = -&i;
        rows[c][r] = i.clone();
        Mat::from_rows(rows).expect("3x3")
    };
    let inv_sqrt3 = Scalar::sqrt3() * Scalar::from_ratio(1, 3);
    vec![
        sym(0, 1),
        antisym(0, 1),
        sym(0, 2),
        antisym(0, 2),
        sym(1, 2),
        antisym(1, 2),
        Mat::diag(&[one(), Scalar::from(-1), zero()]),
        Mat::diag(&[one(), one(), Scalar::from(-2)]).scale(&inv_sqrt3),
    ]
}

pub fn su3_x() -> Presentation {
    let gens = x_matrices()
        .into_iter()
        .enumerate()
        .map(|(k, m)| Generator::new(format!("X{}", k + 1), m))
        .collect();
    Presentation::new("su3-x", gens, &["X7", "X8"]).expect("valid preset")
}

/// Boson generators in the order of their X counterparts:
/// Eg↔X1, E-g↔X2, Ea↔X3, E-a↔X4, Eb↔X5, E-b↔X6, H1↔X7, H2↔X8.
pub fn su3_boson() -> Presentation {
    let gens = ["Eg", "E-g", "Ea", "E-a", "Eb", "E-b", "H1", "H2"]
        .into_iter()
        .map(|name| Generator::new(name, make_generator(name).expect("known name")))
        .collect();
    Presentation::new("su3-boson", gens, &["H1", "H2"]).expect("valid preset")
}

pub fn sl3c() -> Presentation {
    let e = |i, j| Mat::unit(3, i, j);
    let gens = vec![
        Generator::new("H1", Mat::from_integers([[1, 0, 0], [0, -1, 0], [0, 0, 0]])),
        Generator::new("H2", Mat::from_integers([[0, 0, 0], [0, 1, 0], [0, 0, -1]])),
        Generator::new("Ea", e(0, 1)),
        Generator::new("E-a", e(1, 0)),
        Generator::new("Eb", e(1, 2)),
        Generator::new("E-b", e(2, 1)),
        Generator::new("Eg", e(0, 2)),
        Generator::new("E-g", e(2, 0)),
    ];
    Presentation::new("sl3c", gens, &["H1", "H2"]).expect("valid preset")
}

/// Ladders `(X1 ± iX2)/2`, `(X3 ± iX4)/2`, `(X5 ± iX6)/2` with Cartan
/// `{diag(1,−1,0), (1/√3)·diag(1,1,−2)}`.
pub fn su3_gellmann() -> Presentation {
    let pairs = [("X1", "X2"), ("X3", "X4"), ("X5", "X6")];
    ladder_combine(&su3_x(), &pairs, &Scalar::from_ratio(1, 2), None)
        .expect("valid preset")
        .with_name("su3-gellmann")
}

pub fn preset(name: &str) -> Result<Presentation> {
    match name {
        "su3-x" => Ok(su3_x()),
        "su3-boson" => Ok(su3_boson()),
        "sl3c" => Ok(sl3c()),
        "su3-gellmann" => Ok(su3_gellmann()),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// Label map from `su3-boson` to `sl3c` induced by `C_i⁺C_j ↦ E_ij`.
pub fn boson_to_sl3c_labels() -> BTreeMap<String, String> {
    [
        ("H1", "H1"),
        ("H2", "H2"),
        ("Eg", "Ea"),    // C1+C2 ↦ E12
        ("E-g", "E-a"),  // C2+C1 ↦ E21
        ("Ea", "Eg"),    // C1+C3 ↦ E13
        ("E-a", "E-g"),  // C3+C1 ↦ E31
        ("Eb", "E-b"),   // C3+C2 ↦ E32
        ("E-b", "Eb"),   // C2+C3 ↦ E23
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect()
}
