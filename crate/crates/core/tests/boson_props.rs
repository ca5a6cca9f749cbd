mod common;

use std::collections::BTreeMap;

use common::{bilinear, boson_poly, MODES};
use cwlab::boson::{boson_commutator, make_generator, normal_product, GENERATOR_NAMES};
use cwlab::{BosonMonomial, BosonPoly, Scalar};
use proptest::prelude::*;

/// Occupation cutoff per mode for the truncated Fock space.
const CUTOFF: u32 = 4;

type State = [u32; MODES];
type Vector = BTreeMap<State, Scalar>;

// Unnormalized occupation basis |n⟩ = Π (C_i⁺)^{n_i} |0⟩, in which
// C⁺|n⟩ = |n+1⟩ and C|n⟩ = n|n−1⟩ with integer amplitudes only.
fn apply_monomial(m: &BosonMonomial, state: &State) -> Option<(State, i64)> {
    let mut s = *state;
    let mut amp = 1i64;
    for mode in 0..MODES {
        for _ in 0..m.annihilation()[mode] {
            if s[mode] == 0 {
                return None;
            }
            amp *= i64::from(s[mode]);
            s[mode] -= 1;
        }
        s[mode] += m.creation()[mode];
    }
    Some((s, amp))
}

fn in_space(s: &State, cutoff: u32) -> bool {
    s.iter().all(|&n| n <= cutoff)
}

/// `P` as an operator on the truncated space: outputs above the cutoff are dropped.
fn apply_truncated(p: &BosonPoly, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (state, x) in v {
        for (m, c) in p.terms() {
            if let Some((s, amp)) = apply_monomial(m, state) {
                if in_space(&s, CUTOFF) {
                    *out.entry(s).or_default() += &(x * c * Scalar::from(amp));
                }
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn states(cutoff: u32) -> impl Iterator<Item = State> {
    (0..=cutoff).flat_map(move |a| {
        (0..=cutoff).flat_map(move |b| (0..=cutoff).map(move |c| [a, b, c]))
    })
}

fn product_monomials_are_normal(p: &BosonPoly) -> bool {
    // creations first means the printed factor list has every `+` before any bare operator
    p.terms().all(|(m, _)| {
        let text = m.to_string();
        let factors: Vec<&str> = text.split('*').collect();
        let first_bare = factors.iter().position(|f| !f.contains('+'));
        match first_bare {
            Some(k) => factors[k..].iter().all(|f| !f.contains('+')),
            None => true,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fock_oracle(p in boson_poly(), q in boson_poly()) {
        let pq = normal_product(&p, &q).unwrap();
        // degree ≤ 2 factors raise any occupation by at most 2
        for s in states(CUTOFF - 2) {
            let basis: Vector = [(s, Scalar::one())].into();
            let symbolic = apply_truncated(&pq, &basis);
            let composed = apply_truncated(&p, &apply_truncated(&q, &basis));
            prop_assert_eq!(symbolic, composed, "state {:?}", s);
        }
    }

    #[test]
    fn associativity(p in boson_poly(), q in boson_poly(), r in boson_poly()) {
        let left = normal_product(&normal_product(&p, &q).unwrap(), &r).unwrap();
        let right = normal_product(&p, &normal_product(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn canonical_form(p in boson_poly(), q in boson_poly()) {
        let pq = normal_product(&p, &q).unwrap();
        prop_assert!(product_monomials_are_normal(&pq));
        prop_assert!(pq.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn bilinear_closure(p in bilinear(), q in bilinear()) {
        let b = boson_commutator(&p, &q).unwrap();
        for (m, _) in b.terms() {
            prop_assert_eq!(m.creation_degree(), 1);
            prop_assert_eq!(m.annihilation_degree(), 1);
        }
    }

    #[test]
    fn commutator_antisymmetry(p in boson_poly(), q in boson_poly()) {
        let pq = boson_commutator(&p, &q).unwrap();
        let qp = boson_commutator(&q, &p).unwrap();
        prop_assert!(pq.try_add(&qp).unwrap().is_zero());
        prop_assert!(boson_commutator(&p, &p).unwrap().is_zero());
    }
}

#[test]
fn generator_brackets_conserve_number() {
    for a in GENERATOR_NAMES {
        for b in GENERATOR_NAMES {
            let bracket =
                boson_commutator(&make_generator(a).unwrap(), &make_generator(b).unwrap()).unwrap();
            for (m, _) in bracket.terms() {
                assert_eq!(m.creation_degree(), m.annihilation_degree(), "[{a},{b}]");
            }
        }
    }
}

#[test]
fn double_reorder_against_oracle() {
    // C1² · C1⁺² = C1⁺²C1² + 4 C1⁺C1 + 2
    let c2 = BosonPoly::monomial(BosonMonomial::new(vec![0, 0, 0], vec![2, 0, 0]).unwrap(), Scalar::one());
    let cd2 = BosonPoly::monomial(BosonMonomial::new(vec![2, 0, 0], vec![0, 0, 0]).unwrap(), Scalar::one());
    let product = normal_product(&c2, &cd2).unwrap();
    for s in states(2) {
        let basis: Vector = [(s, Scalar::one())].into();
        assert_eq!(
            apply_truncated(&product, &basis),
            apply_truncated(&c2, &apply_truncated(&cd2, &basis))
        );
    }
    assert_eq!(product.to_string(), "2 + 4*C1+*C1 + C1+^2*C1^2");
}
