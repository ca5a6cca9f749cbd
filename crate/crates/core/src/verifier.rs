//! Checks of the Cartan-Weyl relations
//!
//! ```text
//! (1) [H_i, H_k] = 0
//! (2) [H, E_α] = α E_α
//! (3) [E_α, E_−α] = α·H = Σ α^i H_i
//! (4) [E_α, E_β] = N_αβ E_{α+β} if α+β is a root, 0 otherwise
//! ```
//!
//! against a [`Presentation`]. Relation (3) is checked in two modes: strict
//! (the bracket equals the Euclidean contraction α·H) and relaxed (the
//! bracket lies in the Cartan span). Failures are report content, never
//! errors.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{ad_root, structure_constants, AdRoot, RootVector};
use crate::presentation::{Backend, Element, Presentation};
use crate::scalar::Scalar;
use crate::span::{self, Decomposition, LinearElement};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eq1Entry {
    pub left: String,
    pub right: String,
    pub bracket: Element,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Eq2Result {
    Root { root: RootVector },
    NotEigen { failing_cartan: String },
    ZeroElement,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eq2Entry {
    pub label: String,
    #[serde(flatten)]
    pub result: Eq2Result,
}

impl Eq2Entry {
    pub fn root(&self) -> Option<&RootVector> {
        match &self.result {
            Eq2Result::Root { root } => Some(root),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eq3Row {
    pub positive: String,
    pub negative: String,
    pub root: RootVector,
    /// `[E_α, E_−α]`.
    pub bracket: Element,
    /// Coefficients of the bracket over the Cartan generators, when it lies
    /// in their span.
    pub cartan_coefficients: Option<Vec<Scalar>>,
    /// `α·H`.
    pub contraction: Element,
    /// `[E_α, E_−α] − α·H`.
    pub residual: Element,
    pub strict: bool,
    pub relaxed: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Eq3Section {
    pub rows: Vec<Eq3Row>,
    /// Ladder generators whose negated root belongs to no generator.
    pub unpaired: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NEntry {
    pub left: String,
    pub right: String,
    /// Generator carrying the root α+β.
    pub sum: String,
    pub n: Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eq4ViolationKind {
    /// α+β is not a root but the bracket is nonzero.
    NonzeroForNonRoot { sum: RootVector },
    /// α+β is the root of `target` but the bracket is not a multiple of it.
    NotProportional { target: String },
    /// One of the two generators has no root, and the bracket is nonzero.
    UndefinedRoot,
    /// Several generators carry the root α+β.
    AmbiguousRoot { candidates: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eq4Violation {
    pub left: String,
    pub right: String,
    #[serde(flatten)]
    pub kind: Eq4ViolationKind,
    pub bracket: Element,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Eq4Section {
    /// `N_αβ` for every ordered ladder pair whose root sum is a root.
    pub table: Vec<NEntry>,
    pub violations: Vec<Eq4Violation>,
}

impl Eq4Section {
    pub fn n(&self, left: &str, right: &str) -> Option<&Scalar> {
        self.table
            .iter()
            .find(|e| e.left == left && e.right == right)
            .map(|e| &e.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub eq1: bool,
    pub eq2: bool,
    pub eq3_strict: bool,
    pub eq3_relaxed: bool,
    pub eq4: bool,
    /// All four relations with (3) in strict mode.
    pub strict: bool,
    /// All four relations with (3) in relaxed mode.
    pub relaxed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CartanWeylReport {
    pub presentation: String,
    pub backend: Backend,
    pub cartan: Vec<String>,
    pub eq1: Vec<Eq1Entry>,
    pub eq2: Vec<Eq2Entry>,
    pub eq3: Eq3Section,
    pub eq4: Eq4Section,
    pub verdicts: Verdicts,
}

impl CartanWeylReport {
    pub fn root_of(&self, label: &str) -> Option<&RootVector> {
        self.eq2.iter().find(|e| e.label == label)?.root()
    }
}

/// Relation (2) for every non-Cartan generator, in presentation order.
pub fn root_table(p: &Presentation) -> Vec<Eq2Entry> {
    let cartan_idx = p.cartan_indices();
    let cartan = p.cartan_elements();
    p.ladder_indices()
        .into_iter()
        .map(|i| {
            let result = match ad_root(&cartan, p.element(i)) {
                Ok(AdRoot::Root(root)) => Eq2Result::Root { root },
                Ok(AdRoot::NotEigen { cartan_index }) => Eq2Result::NotEigen {
                    failing_cartan: p.label(cartan_idx[cartan_index]).to_string(),
                },
                Err(Error::ZeroElement) => Eq2Result::ZeroElement,
                Err(e) => unreachable!("ad_root on a valid presentation: {e}"),
            };
            Eq2Entry {
                label: p.label(i).to_string(),
                result,
            }
        })
        .collect()
}

fn bracket(p: &Presentation, i: usize, j: usize) -> Element {
    p.element(i)
        .bracket(p.element(j))
        .expect("generators of a presentation share a backend")
}

pub fn verify_cartan_weyl(p: &Presentation) -> CartanWeylReport {
    let cartan_idx = p.cartan_indices().to_vec();
    let cartan = p.cartan_elements();
    let ladders = p.ladder_indices();

    let mut eq1 = Vec::new();
    for (a, &i) in cartan_idx.iter().enumerate() {
        for &k in &cartan_idx[a + 1..] {
            let b = bracket(p, i, k);
            eq1.push(Eq1Entry {
                left: p.label(i).to_string(),
                right: p.label(k).to_string(),
                pass: b.is_zero(),
                bracket: b,
            });
        }
    }

    let eq2 = root_table(p);
    let roots: BTreeMap<usize, RootVector> = ladders
        .iter()
        .zip(&eq2)
        .filter_map(|(&i, e)| Some((i, e.root()?.clone())))
        .collect();

    let holders = |root: &RootVector| -> Vec<usize> {
        roots
            .iter()
            .filter(|(_, r)| *r == root)
            .map(|(&i, _)| i)
            .collect()
    };

    let mut eq3 = Eq3Section::default();
    let mut paired: BTreeSet<usize> = BTreeSet::new();
    for (&i, alpha) in &roots {
        if paired.contains(&i) {
            continue;
        }
        let neg = -alpha;
        let Some(j) = holders(&neg).into_iter().find(|&j| j != i && !paired.contains(&j)) else {
            eq3.unpaired.push(p.label(i).to_string());
            continue;
        };
        paired.insert(i);
        paired.insert(j);

        let b = bracket(p, i, j);
        let cartan_coefficients = match span::decompose(&b, &cartan) {
            Ok(Decomposition::Coefficients(c)) => Some(c),
            _ => None,
        };
        let contraction = alpha.contract(&cartan).expect("Cartan set is nonempty");
        let residual = b.minus(&contraction);
        eq3.rows.push(Eq3Row {
            positive: p.label(i).to_string(),
            negative: p.label(j).to_string(),
            root: alpha.clone(),
            strict: residual.is_zero(),
            relaxed: cartan_coefficients.is_some(),
            bracket: b,
            cartan_coefficients,
            contraction,
            residual,
        });
    }

    let mut eq4 = Eq4Section::default();
    for (a, &i) in ladders.iter().enumerate() {
        for &j in &ladders[a + 1..] {
            let b = bracket(p, i, j);
            let violation = |kind| Eq4Violation {
                left: p.label(i).to_string(),
                right: p.label(j).to_string(),
                kind,
                bracket: b.clone(),
            };
            let (Some(ra), Some(rb)) = (roots.get(&i), roots.get(&j)) else {
                if !b.is_zero() {
                    eq4.violations.push(violation(Eq4ViolationKind::UndefinedRoot));
                }
                continue;
            };
            let sum = ra + rb;
            if sum.is_zero() {
                continue;
            }
            match holders(&sum).as_slice() {
                [] => {
                    if !b.is_zero() {
                        eq4.violations
                            .push(violation(Eq4ViolationKind::NonzeroForNonRoot { sum }));
                    }
                }
                &[k] => match span::proportionality(&b, p.element(k)) {
                    Some(n) => {
                        eq4.table.push(NEntry {
                            left: p.label(i).to_string(),
                            right: p.label(j).to_string(),
                            sum: p.label(k).to_string(),
                            n: n.clone(),
                        });
                        eq4.table.push(NEntry {
                            left: p.label(j).to_string(),
                            right: p.label(i).to_string(),
                            sum: p.label(k).to_string(),
                            n: -n,
                        });
                    }
                    None => eq4.violations.push(violation(Eq4ViolationKind::NotProportional {
                        target: p.label(k).to_string(),
                    })),
                },
                many => eq4.violations.push(violation(Eq4ViolationKind::AmbiguousRoot {
                    candidates: many.iter().map(|&k| p.label(k).to_string()).collect(),
                })),
            }
        }
    }

    let v_eq1 = eq1.iter().all(|e| e.pass);
    let v_eq2 = roots.len() == ladders.len();
    // without a full root system relation (3) cannot be established
    let complete = v_eq2 && eq3.unpaired.is_empty();
    let v_eq3_strict = complete && eq3.rows.iter().all(|r| r.strict);
    let v_eq3_relaxed = complete && eq3.rows.iter().all(|r| r.relaxed);
    let v_eq4 = eq4.violations.is_empty();
    let verdicts = Verdicts {
        eq1: v_eq1,
        eq2: v_eq2,
        eq3_strict: v_eq3_strict,
        eq3_relaxed: v_eq3_relaxed,
        eq4: v_eq4,
        strict: v_eq1 && v_eq2 && v_eq3_strict && v_eq4,
        relaxed: v_eq1 && v_eq2 && v_eq3_relaxed && v_eq4,
    };

    CartanWeylReport {
        presentation: p.name().to_string(),
        backend: p.backend(),
        cartan: p.cartan_labels().into_iter().map(String::from).collect(),
        eq1,
        eq2,
        eq3,
        eq4,
        verdicts,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Comparison {
    Equal,
    /// First `(i, j, k)`, in `p`'s generator order, where
    /// `c_p[i][j][k] ≠ c_q[σi][σj][σk]`. Labels are `p`'s.
    FirstMismatch {
        i: String,
        j: String,
        k: String,
        left: Scalar,
        right: Scalar,
    },
}

/// Compares structure constants of `p` and `q` under a label bijection
/// `mapping: p-label → q-label`.
pub fn compare_presentations(
    p: &Presentation,
    q: &Presentation,
    mapping: &BTreeMap<String, String>,
) -> Result<Comparison> {
    if p.len() != q.len() || mapping.len() != p.len() {
        return Err(Error::InvalidMapping(format!(
            "{} generators, {} generators, {} mapping entries",
            p.len(),
            q.len(),
            mapping.len()
        )));
    }
    let mut sigma = Vec::with_capacity(p.len());
    let mut hit = BTreeSet::new();
    for label in p.labels() {
        let target = mapping
            .get(label)
            .ok_or_else(|| Error::InvalidMapping(format!("{label} is not mapped")))?;
        let idx = q
            .index_of(target)
            .map_err(|_| Error::InvalidMapping(format!("{target} is not a generator")))?;
        if !hit.insert(idx) {
            return Err(Error::InvalidMapping(format!("{target} is hit twice")));
        }
        sigma.push(idx);
    }

    let cp = structure_constants(p)?;
    let cq = structure_constants(q)?;
    let d = p.len();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let left = cp.get(i, j, k);
                let right = cq.get(sigma[i], sigma[j], sigma[k]);
                if left != right {
                    return Ok(Comparison::FirstMismatch {
                        i: p.label(i).to_string(),
                        j: p.label(j).to_string(),
                        k: p.label(k).to_string(),
                        left: left.clone(),
                        right: right.clone(),
                    });
                }
            }
        }
    }
    Ok(Comparison::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::normalize_presentation;
    use crate::presets;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn root(a: &str, b: &str) -> RootVector {
        RootVector(vec![s(a), s(b)])
    }

    #[test]
    fn boson_preset_passes_strict() {
        let r = verify_cartan_weyl(&presets::su3_boson());
        assert!(r.verdicts.strict, "{:#?}", r.verdicts);
        assert_eq!(r.root_of("Eg"), Some(&root("1/3*sqrt3", "0")));
        assert_eq!(r.root_of("Ea"), Some(&root("1/6*sqrt3", "1/2")));
        assert_eq!(r.root_of("Eb"), Some(&root("1/6*sqrt3", "-1/2")));
        assert_eq!(r.eq4.n("Ea", "Eb"), Some(&s("1/6*sqrt6")));
        assert_eq!(r.eq4.n("Eb", "Ea"), Some(&s("-1/6*sqrt6")));
        assert_eq!(r.eq3.rows.len(), 3);
    }

    #[test]
    fn raw_x_preset_fails() {
        let r = verify_cartan_weyl(&presets::su3_x());
        assert!(r.eq2.iter().all(|e| matches!(e.result, Eq2Result::NotEigen { .. })));
        assert!(r
            .eq4
            .violations
            .iter()
            .any(|v| v.left == "X1" && v.right == "X5"));
        assert!(r.verdicts.eq1);
        assert!(!r.verdicts.eq2 && !r.verdicts.eq4 && !r.verdicts.strict);
    }

    #[test]
    fn sl3c_strict_eq3_fails_relaxed_passes() {
        let r = verify_cartan_weyl(&presets::sl3c());
        let v = r.verdicts;
        assert!(v.eq1 && v.eq2 && v.eq4 && v.eq3_relaxed);
        assert!(!v.eq3_strict && !v.strict && v.relaxed);
        let row = &r.eq3.rows[0];
        assert_eq!((row.positive.as_str(), row.negative.as_str()), ("Ea", "E-a"));
        assert_eq!(row.cartan_coefficients, Some(vec![s("1"), s("0")]));
        assert!(!row.strict);
    }

    #[test]
    fn normalized_sl3c_passes_strict() {
        let q = normalize_presentation(&presets::sl3c()).unwrap();
        assert!(verify_cartan_weyl(&q).verdicts.strict);
    }

    #[test]
    fn comparison() {
        let boson = presets::su3_boson();
        let sl3 = presets::sl3c();
        let map = presets::boson_to_sl3c_labels();
        let norm = normalize_presentation(&sl3).unwrap();
        assert_eq!(compare_presentations(&boson, &norm, &map).unwrap(), Comparison::Equal);
        assert!(matches!(
            compare_presentations(&boson, &sl3, &map).unwrap(),
            Comparison::FirstMismatch { .. }
        ));

        let id: BTreeMap<String, String> =
            sl3.labels().iter().map(|l| (l.to_string(), l.to_string())).collect();
        assert_eq!(compare_presentations(&sl3, &sl3, &id).unwrap(), Comparison::Equal);

        let mut bad = id.clone();
        bad.insert("H1".into(), "H2".into());
        assert!(matches!(
            compare_presentations(&sl3, &sl3, &bad),
            Err(Error::InvalidMapping(_))
        ));
    }
}
