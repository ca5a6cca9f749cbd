#![allow(dead_code)]

use cwlab::{BosonMonomial, BosonPoly, Mat, Scalar};
use proptest::prelude::*;

/// Field basis `{1, √2, √3, √6} × {1, i}` in coordinate order.
pub fn basis() -> [Scalar; 8] {
    let radicals = [Scalar::one(), Scalar::sqrt2(), Scalar::sqrt3(), Scalar::sqrt6()];
    let mut out: [Scalar; 8] = Default::default();
    for (r, b) in radicals.iter().enumerate() {
        out[2 * r] = b.clone();
        out[2 * r + 1] = b * &Scalar::i();
    }
    out
}

pub fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    prop_oneof![
        2 => Just((0, 1)),
        3 => (-6i64..=6, 1i64..=4),
    ]
}

/// Scalars with small, often-zero rational coordinates in all eight slots.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec(small_rational(), 8).prop_map(|coords| {
        coords
            .into_iter()
            .zip(basis())
            .map(|((n, d), b)| Scalar::from_ratio(n, d) * b)
            .sum()
    })
}

/// Cheaper scalars in Q(i) for sweeps that multiply many of them.
pub fn gaussian() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Scalar::from(a) + Scalar::from(b) * Scalar::i())
}

pub fn mat3() -> impl Strategy<Value = Mat> {
    proptest::collection::vec(scalar(), 9).prop_map(|v| {
        Mat::from_rows(v.chunks(3).map(<[Scalar]>::to_vec).collect()).unwrap()
    })
}

pub const MODES: usize = 3;

/// Monomials of total degree at most 2 over three modes.
pub fn monomial() -> impl Strategy<Value = BosonMonomial> {
    proptest::collection::vec((any::<bool>(), 0..MODES), 0..=2).prop_map(|factors| {
        let mut creation = vec![0; MODES];
        let mut annihilation = vec![0; MODES];
        for (is_creation, mode) in factors {
            if is_creation {
                creation[mode] += 1;
            } else {
                annihilation[mode] += 1;
            }
        }
        BosonMonomial::new(creation, annihilation).unwrap()
    })
}

/// Polynomials of degree at most 2 with up to three terms.
pub fn boson_poly() -> impl Strategy<Value = BosonPoly> {
    proptest::collection::vec((monomial(), gaussian()), 0..=3).prop_map(|terms| {
        terms.into_iter().fold(BosonPoly::zero(MODES), |acc, (m, c)| {
            acc.try_add(&BosonPoly::monomial(m, c)).unwrap()
        })
    })
}

/// Number-conserving bilinears `Σ c_ij C_i⁺ C_j`.
pub fn bilinear() -> impl Strategy<Value = BosonPoly> {
    proptest::collection::vec((0..MODES, 0..MODES, gaussian()), 1..=4).prop_map(|terms| {
        terms.into_iter().fold(BosonPoly::zero(MODES), |acc, (i, j, c)| {
            acc.try_add(&BosonPoly::bilinear(MODES, i, j).scale(&c)).unwrap()
        })
    })
}
