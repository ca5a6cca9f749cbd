//! Dense square matrices over [`Scalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::span::{self, Decomposition, LinearElement};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    // row-major
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    /// The matrix unit with a single 1 at `(row, col)` (zero-based).
    pub fn unit(n: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(n);
        m.entries[row * n + col] = Scalar::one();
        m
    }

    pub fn diag(values: &[Scalar]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    /// Builds a matrix from rows, each of which must be as long as the row count.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonSquareMatrix {
                    label: String::new(),
                    rows: n,
                    row: r,
                    cols: row.len(),
                    expected: n,
                });
            }
            entries.extend(row);
        }
        Ok(Mat { n, entries })
    }

    /// Integer-entry convenience constructor for tests and presets.
    pub fn from_integers<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Mat {
            n: N,
            entries: rows.iter().flatten().map(|&x| Scalar::from(x)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            n: self.n,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn check_dim(&self, other: &Mat) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `AB − BA`.
pub fn commutator(a: &Mat, b: &Mat) -> Result<Mat> {
    Ok(&a.try_mul(b)? - &b.try_mul(a)?)
}

/// Coefficients of `m` over `basis`; see [`span::decompose`].
pub fn decompose_in_basis(m: &Mat, basis: &[Mat]) -> Result<Decomposition<Mat>> {
    span::decompose(m, basis)
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        Mat {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        Mat {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        self.scale(&Scalar::from(-1))
    }
}

impl LinearElement for Mat {
    type Key = (usize, usize);

    fn coordinates(&self) -> BTreeMap<(usize, usize), Scalar> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| ((k / self.n, k % self.n), x.clone()))
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.check_dim(other)
    }

    fn zero_like(&self) -> Self {
        Mat::zeros(self.n)
    }

    fn scaled(&self, s: &Scalar) -> Self {
        self.scale(s)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn is_zero(&self) -> bool {
        Mat::is_zero(self)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
            f.write_str(&cells.join(", "))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::x_matrices;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn x1_x2_bracket_is_2i_x7() {
        let x = x_matrices();
        let c = commutator(&x[0], &x[1]).unwrap();
        assert_eq!(c, x[6].scale(&s("2*i")));
    }

    #[test]
    fn self_bracket_vanishes() {
        for m in x_matrices() {
            assert!(commutator(&m, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn x1_x5_bracket_is_plus_i_x4() {
        let x = x_matrices();
        let c = commutator(&x[0], &x[4]).unwrap();
        let expected = Mat::from_integers([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]);
        assert_eq!(c, expected);
        assert_eq!(c, x[3].scale(&Scalar::i()));
    }

    #[test]
    fn dimension_mismatch() {
        let err = commutator(&Mat::identity(2), &Mat::identity(3)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn decompose_x3_x4_bracket() {
        let x = x_matrices();
        let c = commutator(&x[2], &x[3]).unwrap();
        let coeffs = decompose_in_basis(&c, &x).unwrap();
        let mut expected = vec![Scalar::zero(); 8];
        expected[6] = s("i");
        expected[7] = s("sqrt3*i");
        assert_eq!(coeffs, Decomposition::Coefficients(expected));
    }

    #[test]
    fn decompose_zero_and_unit() {
        let x = x_matrices();
        let zero = decompose_in_basis(&Mat::zeros(3), &x).unwrap();
        assert_eq!(zero, Decomposition::Coefficients(vec![Scalar::zero(); 8]));

        let e13 = Mat::unit(3, 0, 2);
        let Decomposition::Coefficients(c) = decompose_in_basis(&e13, &x).unwrap() else {
            panic!("E13 lies in the span");
        };
        let mut expected = vec![Scalar::zero(); 8];
        expected[2] = s("1/2");
        expected[3] = s("1/2*i");
        assert_eq!(c, expected);
        assert_eq!(span::recompose(&e13, &c, &x), e13);
    }

    #[test]
    fn decompose_failures() {
        let x = x_matrices();
        // the identity is not traceless
        let d = decompose_in_basis(&Mat::identity(3), &x).unwrap();
        let Decomposition::NotInSpan { residual } = d else {
            panic!("identity is outside su(3)");
        };
        assert!(!residual.is_zero());

        let dependent = vec![x[0].clone(), x[0].scale(&Scalar::from(2))];
        assert!(matches!(
            decompose_in_basis(&x[0], &dependent),
            Err(Error::DependentBasis)
        ));
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let rows = vec![vec![Scalar::zero(); 3], vec![Scalar::zero(); 3]];
        assert!(matches!(Mat::from_rows(rows), Err(Error::NonSquareMatrix { .. })));
    }
}
