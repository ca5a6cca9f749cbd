//! Structure constants, adjoint roots, the Killing form and Killing
//! normalization of a [`Presentation`].

use std::fmt;
use std::ops::{Add, Neg};

use crate::error::{Error, Result};
use crate::presentation::{Element, Generator, Presentation};
use crate::scalar::Scalar;
use crate::span::{self, Decomposition, LinearElement};

/// `c[i][j][k]` with `[g_i, g_j] = Σ_k c[i][j][k] g_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    labels: Vec<String>,
    values: Vec<Scalar>,
}

impl StructureConstants {
    /// All-zero tensor (the abelian algebra) over the given labels.
    pub fn zero(labels: Vec<String>) -> Self {
        let d = labels.len();
        StructureConstants {
            labels,
            values: vec![Scalar::zero(); d * d * d],
        }
    }

    /// Builds the tensor from the brackets `[g_i, g_j]` for `i < j`, filling
    /// the lower half by antisymmetry.
    pub fn from_upper<F>(labels: Vec<String>, mut bracket: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<Vec<Scalar>>,
    {
        let mut t = Self::zero(labels);
        let d = t.dim();
        for i in 0..d {
            for j in i + 1..d {
                let row = bracket(i, j)?;
                assert_eq!(row.len(), d, "bracket row has wrong length");
                for (k, c) in row.into_iter().enumerate() {
                    t.set(j, i, k, -&c);
                    t.set(i, j, k, c);
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let d = self.dim();
        (i * d + j) * d + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.values[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j, k);
        self.values[o] = v;
    }

    /// Coefficients of `[g_i, g_j]`.
    pub fn bracket_row(&self, i: usize, j: usize) -> &[Scalar] {
        let o = self.offset(i, j, 0);
        &self.values[o..o + self.dim()]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yj;
                for (k, c) in self.bracket_row(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&w * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x` in the generator basis: `ad[k][j]` is the
    /// `g_k`-coefficient of `[x, g_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        let d = self.dim();
        let mut ad = vec![vec![Scalar::zero(); d]; d];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..d {
                for (k, c) in self.bracket_row(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        ad[k][j] += &(xi * c);
                    }
                }
            }
        }
        ad
    }

    /// `trace(ad x ∘ ad y)`.
    pub fn killing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let ax = self.ad(x);
        let ay = self.ad(y);
        let d = self.dim();
        let mut acc = Scalar::zero();
        for k in 0..d {
            for j in 0..d {
                if !ax[k][j].is_zero() && !ay[j][k].is_zero() {
                    acc += &(&ax[k][j] * &ay[j][k]);
                }
            }
        }
        acc
    }
}

/// Structure constants of `p` in its own generator basis.
///
/// Fails with [`Error::DependentBasis`] if the generators are dependent and
/// with [`Error::NotClosed`] on the first bracket that leaves their span.
pub fn structure_constants(p: &Presentation) -> Result<StructureConstants> {
    let basis = p.elements();
    let labels = p.labels().into_iter().map(String::from).collect();
    StructureConstants::from_upper(labels, |i, j| {
        let b = basis[i].bracket(&basis[j])?;
        match span::decompose(&b, &basis)? {
            Decomposition::Coefficients(c) => Ok(c),
            Decomposition::NotInSpan { residual } => Err(Error::NotClosed {
                left: p.label(i).to_string(),
                right: p.label(j).to_string(),
                residual: Box::new(residual),
            }),
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    /// `Σ_m (c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l)` for each `l`.
    pub residual: Vec<Scalar>,
}

/// Every triple `i < j < k` for which the Jacobi identity fails.
pub fn jacobi_check(c: &StructureConstants) -> Vec<JacobiViolation> {
    let d = c.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let residual: Vec<Scalar> = (0..d)
                    .map(|l| {
                        let mut acc = Scalar::zero();
                        for m in 0..d {
                            for (a, b, e) in [(i, j, k), (j, k, i), (k, i, j)] {
                                let x = c.get(a, b, m);
                                let y = c.get(m, e, l);
                                if !x.is_zero() && !y.is_zero() {
                                    acc += &(x * y);
                                }
                            }
                        }
                        acc
                    })
                    .collect();
                if residual.iter().any(|r| !r.is_zero()) {
                    out.push(JacobiViolation {
                        triple: (i, j, k),
                        residual,
                    });
                }
            }
        }
    }
    out
}

/// `(α_1, …, α_l)` with `[H_i, E] = α_i E`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootVector(pub Vec<Scalar>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![Scalar::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Euclidean contraction `α·H = Σ α^i H_i`.
    pub fn contract(&self, cartan: &[Element]) -> Option<Element> {
        let first = cartan.first()?;
        Some(span::recompose(first, &self.0, cartan))
    }
}

impl<'a> Add<&'a RootVector> for &'a RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Scalar::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootVector{self}")
    }
}

impl serde::Serialize for RootVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AdRoot {
    Root(RootVector),
    /// `[H_cartan_index, E]` is not a multiple of `E`.
    NotEigen { cartan_index: usize },
}

impl AdRoot {
    pub fn root(&self) -> Option<&RootVector> {
        match self {
            AdRoot::Root(r) => Some(r),
            AdRoot::NotEigen { .. } => None,
        }
    }
}

/// Simultaneous adjoint eigenvalues of `e` under the Cartan elements.
pub fn ad_root(cartan: &[Element], e: &Element) -> Result<AdRoot> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut comps = Vec::with_capacity(cartan.len());
    for (i, h) in cartan.iter().enumerate() {
        let b = h.bracket(e)?;
        match span::proportionality(&b, e) {
            Some(alpha) => comps.push(alpha),
            None => return Ok(AdRoot::NotEigen { cartan_index: i }),
        }
    }
    Ok(AdRoot::Root(RootVector(comps)))
}

/// Roots of every non-Cartan generator, in presentation order.
pub fn ladder_roots(p: &Presentation) -> Result<Vec<(usize, AdRoot)>> {
    let cartan = p.cartan_elements();
    p.ladder_indices()
        .into_iter()
        .map(|i| Ok((i, ad_root(&cartan, p.element(i))?)))
        .collect()
}

/// Replaces each pair `(a, b)` by `scale·(a + i·b)` and `scale·(a − i·b)`,
/// labeled `"a+ib"` and `"a-ib"`, at the positions of `a` and `b`.
///
/// Cartan labels are kept unless `cartan` is given.
pub fn ladder_combine(
    p: &Presentation,
    pairs: &[(&str, &str)],
    scale: &Scalar,
    cartan: Option<&[&str]>,
) -> Result<Presentation> {
    let mut generators: Vec<Generator> = p.generators().to_vec();
    let i = Scalar::i();
    for &(a, b) in pairs {
        let ia = p.index_of(a)?;
        let ib = p.index_of(b)?;
        let ea = p.element(ia);
        let eb = p.element(ib).scaled(&i);
        generators[ia] = Generator::new(format!("{a}+i{b}"), ea.plus(&eb).scaled(scale));
        generators[ib] = Generator::new(format!("{a}-i{b}"), ea.minus(&eb).scaled(scale));
    }
    let carried: Vec<&str>;
    let cartan = match cartan {
        Some(c) => c,
        None => {
            carried = p.cartan_labels();
            &carried
        }
    };
    Presentation::new(p.name(), generators, cartan)
}

/// Coordinates of an element in the generator basis of `p`.
pub fn coordinates_in(p: &Presentation, x: &Element) -> Result<Vec<Scalar>> {
    match span::decompose(x, &p.elements())? {
        Decomposition::Coefficients(c) => Ok(c),
        Decomposition::NotInSpan { residual } => Err(Error::NotInSpan {
            residual: Box::new(residual),
        }),
    }
}

/// `K(a, b) = trace(ad a ∘ ad b)` computed through the structure constants
/// of `p`.
pub fn killing_form(a: &Element, b: &Element, p: &Presentation) -> Result<Scalar> {
    let sc = structure_constants(p)?;
    Ok(sc.killing(&coordinates_in(p, a)?, &coordinates_in(p, b)?))
}

fn inv_sqrt(x: &Scalar) -> Result<Scalar> {
    x.sqrt()
        .ok_or_else(|| Error::NoSquareRoot(x.to_string()))?
        .inv()
}

/// Killing-normalizes a presentation.
///
/// The Cartan generators are Gram-Schmidt orthonormalized in presentation
/// order, so `K(H_i', H_j') = δ_ij`. Each ladder generator `E` with partner
/// `F` (the generator of root `−α`) is scaled by `1/√K(E, F)`, which gives
/// `K(E', F') = 1`.
pub fn normalize_presentation(p: &Presentation) -> Result<Presentation> {
    let sc = structure_constants(p)?;
    let d = p.len();
    let unit = |i: usize| -> Vec<Scalar> {
        (0..d)
            .map(|k| if k == i { Scalar::one() } else { Scalar::zero() })
            .collect()
    };
    let combine = |x: &[Scalar], y: &[Scalar], s: &Scalar| -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| a + &(b * s)).collect()
    };

    let mut orthonormal: Vec<Vec<Scalar>> = Vec::with_capacity(p.rank());
    for &h in p.cartan_indices() {
        let mut v = unit(h);
        for u in &orthonormal {
            let proj = sc.killing(&v, u);
            v = combine(&v, u, &-proj);
        }
        let norm2 = sc.killing(&v, &v);
        if norm2.is_zero() {
            return Err(Error::DegenerateCartan);
        }
        let c = inv_sqrt(&norm2)?;
        v = v.iter().map(|x| x * &c).collect();
        orthonormal.push(v);
    }

    let elements = p.elements();
    let mut generators: Vec<Generator> = p.generators().to_vec();
    for (&h, v) in p.cartan_indices().iter().zip(&orthonormal) {
        generators[h].element = span::recompose(&elements[h], v, &elements);
    }

    let roots = ladder_roots(p)?;
    for &(i, ref root) in &roots {
        let root = root
            .root()
            .ok_or_else(|| Error::NotEigen(p.label(i).to_string()))?;
        let neg = -root;
        let partner = roots
            .iter()
            .find(|(_, r)| r.root() == Some(&neg))
            .map(|(j, _)| *j)
            .ok_or_else(|| Error::NoPartner(p.label(i).to_string()))?;
        let k = sc.killing(&unit(i), &unit(partner));
        if k.is_zero() {
            return Err(Error::NoPartner(p.label(i).to_string()));
        }
        generators[i].element = elements[i].scaled(&inv_sqrt(&k)?);
    }

    Presentation::new(p.name(), generators, &p.cartan_labels())
}
