//! Linear-algebra view shared by matrices and boson polynomials.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::{self, Solution};
use crate::scalar::Scalar;

/// An element of a finite-dimensional vector space over [`Scalar`], exposed
/// through its nonzero coordinates in some fixed monomial basis.
pub trait LinearElement: Clone + PartialEq {
    type Key: Ord + Clone;

    /// Nonzero coordinates, keyed by basis monomial.
    fn coordinates(&self) -> BTreeMap<Self::Key, Scalar>;

    /// Errors when the two elements live in different spaces.
    fn check_compatible(&self, other: &Self) -> Result<()>;

    fn zero_like(&self) -> Self;
    fn scaled(&self, s: &Scalar) -> Self;
    fn plus(&self, other: &Self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-Scalar::one()))
    }

    fn is_zero(&self) -> bool {
        self.coordinates().is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Decomposition<E> {
    /// `target = Σ c_k · basis_k`.
    Coefficients(Vec<Scalar>),
    /// The target is outside the span. `residual` is what is left after
    /// subtracting the best pivot-row fit.
    NotInSpan { residual: E },
}

impl<E> Decomposition<E> {
    pub fn coefficients(&self) -> Option<&[Scalar]> {
        match self {
            Decomposition::Coefficients(c) => Some(c),
            Decomposition::NotInSpan { .. } => None,
        }
    }
}

/// `Σ c_k · basis_k`, starting from `like`'s zero.
pub fn recompose<E: LinearElement>(like: &E, coeffs: &[Scalar], basis: &[E]) -> E {
    coeffs
        .iter()
        .zip(basis)
        .filter(|(c, _)| !c.is_zero())
        .fold(like.zero_like(), |acc, (c, b)| acc.plus(&b.scaled(c)))
}

/// Exact coefficients of `target` over `basis`.
///
/// Fails with [`Error::DependentBasis`] when `basis` is linearly dependent.
pub fn decompose<E: LinearElement>(target: &E, basis: &[E]) -> Result<Decomposition<E>> {
    for b in basis {
        target.check_compatible(b)?;
    }
    let target_coords = target.coordinates();
    let basis_coords: Vec<_> = basis.iter().map(LinearElement::coordinates).collect();
    let keys: BTreeSet<E::Key> = target_coords
        .keys()
        .chain(basis_coords.iter().flat_map(|c| c.keys()))
        .cloned()
        .collect();

    let column = |coords: &BTreeMap<E::Key, Scalar>| -> Vec<Scalar> {
        keys.iter()
            .map(|k| coords.get(k).cloned().unwrap_or_else(Scalar::zero))
            .collect()
    };
    let columns: Vec<Vec<Scalar>> = basis_coords.iter().map(column).collect();
    let rhs = column(&target_coords);

    match linalg::solve(&columns, &rhs) {
        Solution::Unique(c) => Ok(Decomposition::Coefficients(c)),
        Solution::Inconsistent(c) => Ok(Decomposition::NotInSpan {
            residual: target.minus(&recompose(target, &c, basis)),
        }),
        Solution::Dependent => Err(Error::DependentBasis),
    }
}

/// The scalar `λ` with `target = λ · reference`, if one exists.
///
/// Reads the ratio off the first nonzero coordinate of `reference` and then
/// checks every coordinate exactly. `reference` must be nonzero.
pub fn proportionality<E: LinearElement>(target: &E, reference: &E) -> Option<Scalar> {
    let r = reference.coordinates();
    let (key, pivot) = r.iter().next()?;
    let t = target.coordinates();
    let ratio = match t.get(key) {
        Some(v) => v.checked_div(pivot).ok()?,
        None => Scalar::zero(),
    };
    (target.minus(&reference.scaled(&ratio)).is_zero()).then_some(ratio)
}
