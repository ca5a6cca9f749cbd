//! Normal-ordered polynomials in boson creation and annihilation operators.
//!
//! Modes are zero-based in the API and one-based in text (`C1+` is the
//! creation operator of mode 0). The only relation used is
//! `[C_i, C_j⁺] = δ_ij`, with all other pairs commuting, and it is applied in
//! exactly one place: [`reorder_mode`].

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{self, Mat};
use crate::scalar::Scalar;
use crate::span::{self, Decomposition, LinearElement};

/// `Π_i C_i⁺^{creation[i]} · Π_i C_i^{annihilation[i]}`, creations on the left.
///
/// Ordering is lexicographic in `(creation, annihilation)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BosonMonomial {
    creation: Vec<u32>,
    annihilation: Vec<u32>,
}

impl BosonMonomial {
    pub fn new(creation: Vec<u32>, annihilation: Vec<u32>) -> Result<Self> {
        if creation.len() != annihilation.len() {
            return Err(Error::ModeCountMismatch {
                left: creation.len(),
                right: annihilation.len(),
            });
        }
        Ok(BosonMonomial {
            creation,
            annihilation,
        })
    }

    pub fn identity(modes: usize) -> Self {
        BosonMonomial {
            creation: vec![0; modes],
            annihilation: vec![0; modes],
        }
    }

    pub fn modes(&self) -> usize {
        self.creation.len()
    }

    pub fn creation(&self) -> &[u32] {
        &self.creation
    }

    pub fn annihilation(&self) -> &[u32] {
        &self.annihilation
    }

    pub fn creation_degree(&self) -> u32 {
        self.creation.iter().sum()
    }

    pub fn annihilation_degree(&self) -> u32 {
        self.annihilation.iter().sum()
    }
}

impl fmt::Display for BosonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (exps, suffix) in [(&self.creation, "+"), (&self.annihilation, "")] {
            for (mode, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("C{}{}", mode + 1, suffix)),
                    _ => factors.push(format!("C{}{}^{}", mode + 1, suffix, e)),
                }
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BosonPoly {
    modes: usize,
    // no zero coefficients
    terms: BTreeMap<BosonMonomial, Scalar>,
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// `C^p C⁺^q = Σ_k k!·C(p,k)·C(q,k) · C⁺^{q−k} C^{p−k}` for a single mode,
/// as `(coefficient, creation power, annihilation power)`.
pub fn reorder_mode(p: u32, q: u32) -> Vec<(i64, u32, u32)> {
    (0..=p.min(q))
        .map(|k| (factorial(k) * binomial(p, k) * binomial(q, k), q - k, p - k))
        .collect()
}

impl BosonPoly {
    pub fn zero(modes: usize) -> Self {
        BosonPoly {
            modes,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(modes: usize, c: Scalar) -> Self {
        Self::monomial(BosonMonomial::identity(modes), c)
    }

    pub fn monomial(m: BosonMonomial, c: Scalar) -> Self {
        let mut p = Self::zero(m.modes());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    fn single(modes: usize, mode: usize, creation: bool) -> Self {
        let mut m = BosonMonomial::identity(modes);
        if creation {
            m.creation[mode] = 1;
        } else {
            m.annihilation[mode] = 1;
        }
        Self::monomial(m, Scalar::one())
    }

    /// `C_mode⁺`.
    pub fn creation(modes: usize, mode: usize) -> Self {
        Self::single(modes, mode, true)
    }

    /// `C_mode`.
    pub fn annihilation(modes: usize, mode: usize) -> Self {
        Self::single(modes, mode, false)
    }

    /// `C_i⁺ C_j`.
    pub fn bilinear(modes: usize, i: usize, j: usize) -> Self {
        let mut m = BosonMonomial::identity(modes);
        m.creation[i] = 1;
        m.annihilation[j] = 1;
        Self::monomial(m, Scalar::one())
    }

    /// `n_i = C_i⁺ C_i`.
    pub fn number(modes: usize, mode: usize) -> Self {
        Self::bilinear(modes, mode, mode)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BosonMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &BosonMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: BosonMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.modes);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * s);
        }
        out
    }

    fn check_modes(&self, other: &Self) -> Result<()> {
        if self.modes != other.modes {
            return Err(Error::ModeCountMismatch {
                left: self.modes,
                right: other.modes,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_modes(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&Scalar::from(-1)))
    }

    fn monomial_product(a: &BosonMonomial, b: &BosonMonomial) -> Vec<(BosonMonomial, i64)> {
        // a = C⁺^{a.c} C^{a.a}, b = C⁺^{b.c} C^{b.a}; only C^{a.a} C⁺^{b.c} needs
        // reordering, and distinct modes commute, so expand mode by mode.
        let mut partial = vec![(BosonMonomial::identity(a.modes()), 1i64)];
        for mode in 0..a.modes() {
            let expansion = reorder_mode(a.annihilation[mode], b.creation[mode]);
            let mut next = Vec::with_capacity(partial.len() * expansion.len());
            for (m, c) in &partial {
                for &(k, cre, ann) in &expansion {
                    let mut m = m.clone();
                    m.creation[mode] = a.creation[mode] + cre;
                    m.annihilation[mode] = ann + b.annihilation[mode];
                    next.push((m, c * k));
                }
            }
            partial = next;
        }
        partial
    }

    /// `P · Q` rewritten in normal order.
    pub fn normal_product(&self, other: &Self) -> Result<Self> {
        self.check_modes(other)?;
        let mut out = Self::zero(self.modes);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, k) in Self::monomial_product(ma, mb) {
                    out.add_term(m, &c * &Scalar::from(k));
                }
            }
        }
        Ok(out)
    }

    /// `PQ − QP` in normal order.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.normal_product(other)?
            .try_sub(&other.normal_product(self)?)
    }
}

/// Free-function form of [`BosonPoly::normal_product`].
pub fn normal_product(p: &BosonPoly, q: &BosonPoly) -> Result<BosonPoly> {
    p.normal_product(q)
}

/// Free-function form of [`BosonPoly::commutator`].
pub fn boson_commutator(p: &BosonPoly, q: &BosonPoly) -> Result<BosonPoly> {
    p.commutator(q)
}

/// Coefficients of `p` over `basis`; see [`span::decompose`].
pub fn boson_decompose(p: &BosonPoly, basis: &[BosonPoly]) -> Result<Decomposition<BosonPoly>> {
    span::decompose(p, basis)
}

pub const GENERATOR_NAMES: [&str; 8] = ["H1", "H2", "Ea", "E-a", "Eb", "E-b", "Eg", "E-g"];

/// The eight three-mode SU(3) generators:
///
/// | name | definition |
/// |------|------------|
/// | `H1` | (1/(2√3)) (n₁ − n₂) |
/// | `H2` | (1/6) (n₁ + n₂ − 2n₃) |
/// | `Ea`, `E-a` | (1/√6) C₁⁺C₃, (1/√6) C₃⁺C₁ |
/// | `Eb`, `E-b` | (1/√6) C₃⁺C₂, (1/√6) C₂⁺C₃ |
/// | `Eg`, `E-g` | (1/√6) C₁⁺C₂, (1/√6) C₂⁺C₁ |
pub fn make_generator(name: &str) -> Result<BosonPoly> {
    const M: usize = 3;
    let inv_sqrt6 = Scalar::sqrt6().inv()?;
    let ladder = |i: usize, j: usize| BosonPoly::bilinear(M, i, j).scale(&inv_sqrt6);
    let n = |i: usize| BosonPoly::number(M, i);
    let poly = match name {
        "H1" => {
            // 1/(2√3) = √3/6
            let c = Scalar::sqrt3() * Scalar::from_ratio(1, 6);
            n(0).try_sub(&n(1))?.scale(&c)
        }
        "H2" => n(0)
            .try_add(&n(1))?
            .try_sub(&n(2).scale(&Scalar::from(2)))?
            .scale(&Scalar::from_ratio(1, 6)),
        "Ea" => ladder(0, 2),
        "E-a" => ladder(2, 0),
        "Eb" => ladder(2, 1),
        "E-b" => ladder(1, 2),
        "Eg" => ladder(0, 1),
        "E-g" => ladder(1, 0),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(poly)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlSide {
    Boson,
    Matrix,
}

/// One failure of `[X_ij, X_kl] = δ_jk X_il − δ_li X_kj` (one-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlViolation {
    pub indices: (usize, usize, usize, usize),
    pub side: GlSide,
}

/// Checks the gl(m) bracket relations on both the boson bilinears
/// `C_i⁺C_j` and the matrix units `E_ij`, returning every failure.
pub fn gl_bracket_check(modes: usize) -> Vec<GlViolation> {
    let delta = |a: usize, b: usize| Scalar::from((a == b) as i64);
    let mut out = Vec::new();
    for i in 0..modes {
        for j in 0..modes {
            for k in 0..modes {
                for l in 0..modes {
                    let indices = (i + 1, j + 1, k + 1, l + 1);

                    let b = |x, y| BosonPoly::bilinear(modes, x, y);
                    let lhs = b(i, j).commutator(&b(k, l)).expect("same modes");
                    let rhs = b(i, l)
                        .scale(&delta(j, k))
                        .try_sub(&b(k, j).scale(&delta(l, i)))
                        .expect("same modes");
                    if lhs != rhs {
                        out.push(GlViolation {
                            indices,
                            side: GlSide::Boson,
                        });
                    }

                    let e = |x, y| Mat::unit(modes, x, y);
                    let lhs = matrix::commutator(&e(i, j), &e(k, l)).expect("same n");
                    let rhs = &e(i, l).scale(&delta(j, k)) - &e(k, j).scale(&delta(l, i));
                    if lhs != rhs {
                        out.push(GlViolation {
                            indices,
                            side: GlSide::Matrix,
                        });
                    }
                }
            }
        }
    }
    out
}

impl LinearElement for BosonPoly {
    type Key = BosonMonomial;

    fn coordinates(&self) -> BTreeMap<BosonMonomial, Scalar> {
        self.terms.clone()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.check_modes(other)
    }

    fn zero_like(&self) -> Self {
        BosonPoly::zero(self.modes)
    }

    fn scaled(&self, s: &Scalar) -> Self {
        self.scale(s)
    }

    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).expect("boson mode count mismatch")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Writes a coefficient so that it can prefix a product: multi-term
/// scalars are parenthesised.
pub(crate) fn coefficient_prefix(c: &Scalar) -> String {
    let text = c.to_string();
    let body = text.strip_prefix('-').unwrap_or(&text);
    if body.contains(" + ") || body.contains(" - ") {
        format!("({text})")
    } else {
        text
    }
}

impl fmt::Display for BosonPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negated;
            let c = if k == 0 {
                c
            } else if c.to_string().starts_with('-') && !coefficient_prefix(c).starts_with('(') {
                f.write_str(" - ")?;
                negated = -c;
                &negated
            } else {
                f.write_str(" + ")?;
                c
            };
            let is_identity = m.creation_degree() + m.annihilation_degree() == 0;
            if is_identity {
                write!(f, "{}", coefficient_prefix(c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", coefficient_prefix(c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BosonPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BosonPoly({self})")
    }
}
