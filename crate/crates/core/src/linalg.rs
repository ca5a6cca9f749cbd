//! Exact Gaussian elimination over a field.
//!
//! Used twice: to invert scalars (an 8×8 system over the rationals) and to
//! decompose matrices or boson polynomials in a basis (a system over
//! [`Scalar`](crate::Scalar)).

use num_traits::{One, Zero};

use crate::scalar::{Rational, Scalar};

/// The handful of field operations elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse. Only called on nonzero pivots.
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        Scalar::inv(self).expect("pivot is nonzero")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution<F> {
    /// The columns are independent and `rhs` lies in their span.
    Unique(Vec<F>),
    /// The columns are independent but `rhs` is outside their span. The
    /// coefficients solve the pivot rows only.
    Inconsistent(Vec<F>),
    /// The columns are linearly dependent.
    Dependent,
}

/// Solves `Σ_k x_k · columns[k] = rhs`.
///
/// Every column must have the same length as `rhs`.
pub fn solve<F: Field>(columns: &[Vec<F>], rhs: &[F]) -> Solution<F> {
    let rows = rhs.len();
    let k = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));
    if k > rows {
        return Solution::Dependent;
    }

    // augmented row-major matrix [A | b]
    let mut a: Vec<Vec<F>> = (0..rows)
        .map(|r| {
            let mut row: Vec<F> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();

    for col in 0..k {
        let Some(pivot) = (col..rows).find(|&r| !a[r][col].is_zero()) else {
            return Solution::Dependent;
        };
        a.swap(col, pivot);
        let inv = a[col][col].inv();
        for c in col..=k {
            a[col][c] = a[col][c].mul(&inv);
        }
        for r in 0..rows {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..=k {
                let t = factor.mul(&a[col][c]);
                a[r][c] = a[r][c].sub(&t);
            }
        }
    }

    let x: Vec<F> = (0..k).map(|c| a[c][k].clone()).collect();
    if (k..rows).any(|r| !a[r][k].is_zero()) {
        Solution::Inconsistent(x)
    } else {
        Solution::Unique(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn solves_small_system() {
        // x + y = 3, x - y = 1
        let cols = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]];
        let sol = solve(&cols, &[q(3, 1), q(1, 1)]);
        assert_eq!(sol, Solution::Unique(vec![q(2, 1), q(1, 1)]));
    }

    #[test]
    fn detects_dependence_and_inconsistency() {
        let cols = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(solve(&cols, &[q(1, 1), q(2, 1)]), Solution::Dependent);

        let cols = vec![vec![q(1, 1), q(0, 1)]];
        assert!(matches!(
            solve(&cols, &[q(1, 1), q(1, 1)]),
            Solution::Inconsistent(_)
        ));
    }

    #[test]
    fn empty_basis() {
        let cols: Vec<Vec<Rational>> = vec![];
        assert_eq!(solve(&cols, &[q(0, 1)]), Solution::Unique(vec![]));
        assert_eq!(solve(&cols, &[q(1, 1)]), Solution::Inconsistent(vec![]));
    }
}
