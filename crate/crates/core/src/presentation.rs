//! Labeled generator sets with a designated Cartan subset.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::boson::{BosonMonomial, BosonPoly};
use crate::error::{Error, Result};
use crate::matrix::{self, Mat};
use crate::scalar::Scalar;
use crate::span::LinearElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Matrix,
    Boson,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Matrix => "matrix",
            Backend::Boson => "boson",
        })
    }
}

/// A Lie algebra element in either backend.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Matrix(Mat),
    Boson(BosonPoly),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ElementKey {
    Entry(usize, usize),
    Monomial(BosonMonomial),
}

impl Element {
    pub fn backend(&self) -> Backend {
        match self {
            Element::Matrix(_) => Backend::Matrix,
            Element::Boson(_) => Backend::Boson,
        }
    }

    /// Matrix dimension or boson mode count.
    pub fn size(&self) -> usize {
        match self {
            Element::Matrix(m) => m.dim(),
            Element::Boson(p) => p.modes(),
        }
    }

    pub fn as_matrix(&self) -> Option<&Mat> {
        match self {
            Element::Matrix(m) => Some(m),
            Element::Boson(_) => None,
        }
    }

    pub fn as_boson(&self) -> Option<&BosonPoly> {
        match self {
            Element::Boson(p) => Some(p),
            Element::Matrix(_) => None,
        }
    }

    pub fn bracket(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Matrix(a), Element::Matrix(b)) => {
                Ok(Element::Matrix(matrix::commutator(a, b)?))
            }
            (Element::Boson(a), Element::Boson(b)) => Ok(Element::Boson(a.commutator(b)?)),
            _ => Err(Error::BackendMismatch),
        }
    }
}

impl From<Mat> for Element {
    fn from(m: Mat) -> Self {
        Element::Matrix(m)
    }
}

impl From<BosonPoly> for Element {
    fn from(p: BosonPoly) -> Self {
        Element::Boson(p)
    }
}

// Mixed-backend arithmetic is a caller bug: presentations are homogeneous.
impl LinearElement for Element {
    type Key = ElementKey;

    fn coordinates(&self) -> BTreeMap<ElementKey, Scalar> {
        match self {
            Element::Matrix(m) => m
                .coordinates()
                .into_iter()
                .map(|((r, c), v)| (ElementKey::Entry(r, c), v))
                .collect(),
            Element::Boson(p) => p
                .coordinates()
                .into_iter()
                .map(|(m, v)| (ElementKey::Monomial(m), v))
                .collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        match (self, other) {
            (Element::Matrix(a), Element::Matrix(b)) => a.check_compatible(b),
            (Element::Boson(a), Element::Boson(b)) => a.check_compatible(b),
            _ => Err(Error::BackendMismatch),
        }
    }

    fn zero_like(&self) -> Self {
        match self {
            Element::Matrix(m) => Element::Matrix(m.zero_like()),
            Element::Boson(p) => Element::Boson(p.zero_like()),
        }
    }

    fn scaled(&self, s: &Scalar) -> Self {
        match self {
            Element::Matrix(m) => Element::Matrix(m.scale(s)),
            Element::Boson(p) => Element::Boson(p.scale(s)),
        }
    }

    fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (Element::Matrix(a), Element::Matrix(b)) => Element::Matrix(a + b),
            (Element::Boson(a), Element::Boson(b)) => Element::Boson(a.plus(b)),
            _ => panic!("cannot add matrix and boson elements"),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Element::Matrix(m) => m.is_zero(),
            Element::Boson(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Matrix(m) => m.fmt(f),
            Element::Boson(p) => p.fmt(f),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Matrix(m) => m.fmt(f),
            Element::Boson(p) => p.fmt(f),
        }
    }
}

impl serde::Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub label: String,
    pub element: Element,
}

impl Generator {
    pub fn new(label: impl Into<String>, element: impl Into<Element>) -> Self {
        Generator {
            label: label.into(),
            element: element.into(),
        }
    }
}

/// An ordered, labeled generator list over one backend, with the Cartan
/// generators `H = (H_1, …, H_l)` singled out by label.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    name: String,
    generators: Vec<Generator>,
    // indices into `generators`, in the order the Cartan labels were given
    cartan: Vec<usize>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(
        name: impl Into<String>,
        generators: Vec<Generator>,
        cartan_labels: &[S],
    ) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.label.as_str()) {
                return Err(Error::DuplicateLabel(g.label.clone()));
            }
        }
        if let Some(first) = generators.first() {
            for g in &generators[1..] {
                first.element.check_compatible(&g.element)?;
            }
        }
        if cartan_labels.is_empty() {
            return Err(Error::EmptyCartan);
        }
        let mut cartan = Vec::with_capacity(cartan_labels.len());
        for label in cartan_labels {
            let label = label.as_ref();
            let idx = generators
                .iter()
                .position(|g| g.label == label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            if cartan.contains(&idx) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            cartan.push(idx);
        }
        Ok(Presentation {
            name: name.into(),
            generators,
            cartan,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn backend(&self) -> Backend {
        self.generators[0].element.backend()
    }

    /// Matrix dimension `n` or boson mode count `m`.
    pub fn size(&self) -> usize {
        self.generators[0].element.size()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.label.as_str()).collect()
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.generators[idx].label
    }

    pub fn element(&self, idx: usize) -> &Element {
        &self.generators[idx].element
    }

    pub fn elements(&self) -> Vec<Element> {
        self.generators.iter().map(|g| g.element.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn get(&self, label: &str) -> Result<&Element> {
        Ok(self.element(self.index_of(label)?))
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    pub fn cartan_labels(&self) -> Vec<&str> {
        self.cartan.iter().map(|&i| self.label(i)).collect()
    }

    pub fn cartan_elements(&self) -> Vec<Element> {
        self.cartan.iter().map(|&i| self.element(i).clone()).collect()
    }

    pub fn is_cartan(&self, idx: usize) -> bool {
        self.cartan.contains(&idx)
    }

    /// Indices of the non-Cartan generators, in presentation order.
    pub fn ladder_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_cartan(i)).collect()
    }
}
