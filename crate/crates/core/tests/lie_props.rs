mod common;

use common::{gaussian, mat3, scalar};
use cwlab::lie::{jacobi_check, ladder_roots, normalize_presentation, structure_constants};
use cwlab::matrix::{commutator, decompose_in_basis};
use cwlab::presets::{self, x_matrices, PRESET_NAMES};
use cwlab::span::{recompose, Decomposition};
use cwlab::{Mat, Scalar};
use proptest::prelude::*;

fn coords8() -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(gaussian(), 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bracket_is_bilinear_antisymmetric_traceless(
        a in mat3(), b in mat3(), c in mat3(), s in scalar()
    ) {
        let ab = commutator(&a, &b).unwrap();
        prop_assert!(ab.trace().is_zero());
        prop_assert_eq!(&ab + &commutator(&b, &a).unwrap(), Mat::zeros(3));
        prop_assert_eq!(
            commutator(&(&a.scale(&s) + &c), &b).unwrap(),
            &ab.scale(&s) + &commutator(&c, &b).unwrap()
        );
    }

    #[test]
    fn decompose_recompose(c in coords8()) {
        let basis = x_matrices();
        let m = recompose(&Mat::zeros(3), &c, &basis);
        match decompose_in_basis(&m, &basis).unwrap() {
            Decomposition::Coefficients(got) => prop_assert_eq!(got, c),
            Decomposition::NotInSpan { .. } => prop_assert!(false, "X basis spans sl(3)"),
        }
    }

    #[test]
    fn decomposition_reproduces_input(m in mat3()) {
        let basis = x_matrices();
        match decompose_in_basis(&m, &basis).unwrap() {
            Decomposition::Coefficients(c) => prop_assert_eq!(recompose(&m, &c, &basis), m),
            Decomposition::NotInSpan { residual } => {
                prop_assert!(!m.trace().is_zero());
                prop_assert!(!residual.is_zero());
            }
        }
    }

    #[test]
    fn killing_is_ad_invariant_and_symmetric(x in coords8(), y in coords8(), z in coords8()) {
        for p in [presets::sl3c(), presets::su3_boson()] {
            let sc = structure_constants(&p).unwrap();
            let left = sc.killing(&sc.bracket(&x, &y), &z);
            let right = sc.killing(&x, &sc.bracket(&y, &z));
            prop_assert_eq!(left, right);
            prop_assert_eq!(sc.killing(&x, &y), sc.killing(&y, &x));
        }
    }
}

#[test]
fn every_preset_tensor_satisfies_jacobi() {
    for name in PRESET_NAMES {
        let sc = structure_constants(&presets::preset(name).unwrap()).unwrap();
        assert!(jacobi_check(&sc).is_empty(), "{name}");
        for i in 0..sc.dim() {
            assert!(sc.bracket_row(i, i).iter().all(Scalar::is_zero));
        }
    }
}

#[test]
fn normalized_roots_come_in_pairs() {
    for name in ["sl3c", "su3-gellmann", "su3-boson"] {
        let q = normalize_presentation(&presets::preset(name).unwrap()).unwrap();
        let roots: Vec<_> = ladder_roots(&q)
            .unwrap()
            .into_iter()
            .map(|(_, r)| r.root().cloned().unwrap())
            .collect();
        for r in &roots {
            assert!(roots.contains(&-r), "{name} {r}");
        }
    }
}

#[test]
fn normalization_is_idempotent() {
    let once = normalize_presentation(&presets::sl3c()).unwrap();
    assert_eq!(normalize_presentation(&once).unwrap(), once);
    let boson = presets::su3_boson();
    assert_eq!(normalize_presentation(&boson).unwrap(), boson);
}
