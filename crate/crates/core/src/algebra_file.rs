//! JSON algebra definitions.
//!
//! ```json
//! {
//!   "name": "sl2",
//!   "backend": "matrix",
//!   "n": 2,
//!   "generators": [
//!     {"label": "H", "entries": [["1", "0"], ["0", "-1"]]},
//!     {"label": "E", "entries": [["0", "1"], ["0", "0"]]},
//!     {"label": "F", "entries": [["0", "0"], ["1", "0"]]}
//!   ],
//!   "cartan": ["H"]
//! }
//! ```
//!
//! Boson generators use `"modes": m` and
//! `"terms": [{"creation": [..m], "annihilation": [..m], "coeff": "1/6*sqrt6"}]`.
//! Every scalar is a string in the scalar grammar.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::boson::{BosonMonomial, BosonPoly};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::presentation::{Backend, Element, Generator, Presentation};
use crate::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub backend: Backend,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modes: Option<usize>,
    pub generators: Vec<GeneratorSpec>,
    pub cartan: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<TermSpec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub creation: Vec<u32>,
    pub annihilation: Vec<u32>,
    pub coeff: String,
}

fn schema(path: String, message: impl Into<String>) -> Error {
    Error::Schema {
        path,
        message: message.into(),
    }
}

fn scalar_at(text: &str, path: String) -> Result<Scalar> {
    parse_scalar(text).map_err(|source| Error::ScalarField { path, source })
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            schema(path, e.into_inner().to_string())
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("algebra files serialize");
        s.push('\n');
        s
    }

    pub fn into_presentation(self) -> Result<Presentation> {
        let mut generators = Vec::with_capacity(self.generators.len());
        for (g, spec) in self.generators.iter().enumerate() {
            let at = |field: &str| format!("generators[{g}].{field}");
            let element: Element = match self.backend {
                Backend::Matrix => {
                    let n = self.n.ok_or_else(|| schema("n".into(), "required for matrix backend"))?;
                    if spec.terms.is_some() {
                        return Err(schema(at("terms"), "not allowed for matrix backend"));
                    }
                    let rows = spec
                        .entries
                        .as_ref()
                        .ok_or_else(|| schema(at("entries"), "missing field `entries`"))?;
                    for (r, row) in rows.iter().enumerate() {
                        if row.len() != rows.len() {
                            return Err(Error::NonSquareMatrix {
                                label: spec.label.clone(),
                                rows: rows.len(),
                                row: r,
                                cols: row.len(),
                                expected: rows.len(),
                            });
                        }
                    }
                    if rows.len() != n {
                        return Err(Error::DimensionMismatch {
                            left: n,
                            right: rows.len(),
                        });
                    }
                    let values = rows
                        .iter()
                        .enumerate()
                        .map(|(r, row)| {
                            row.iter()
                                .enumerate()
                                .map(|(c, s)| scalar_at(s, format!("generators[{g}].entries[{r}][{c}]")))
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Mat::from_rows(values)?.into()
                }
                Backend::Boson => {
                    let m = self
                        .modes
                        .ok_or_else(|| schema("modes".into(), "required for boson backend"))?;
                    if spec.entries.is_some() {
                        return Err(schema(at("entries"), "not allowed for boson backend"));
                    }
                    let terms = spec
                        .terms
                        .as_ref()
                        .ok_or_else(|| schema(at("terms"), "missing field `terms`"))?;
                    let mut poly = BosonPoly::zero(m);
                    for (t, term) in terms.iter().enumerate() {
                        let path = |f: &str| format!("generators[{g}].terms[{t}].{f}");
                        for (field, v) in [("creation", &term.creation), ("annihilation", &term.annihilation)] {
                            if v.len() != m {
                                return Err(schema(
                                    path(field),
                                    format!("expected {m} exponents, found {}", v.len()),
                                ));
                            }
                        }
                        let c = scalar_at(&term.coeff, path("coeff"))?;
                        let mono = BosonMonomial::new(term.creation.clone(), term.annihilation.clone())?;
                        poly = poly.try_add(&BosonPoly::monomial(mono, c))?;
                    }
                    poly.into()
                }
            };
            generators.push(Generator::new(spec.label.clone(), element));
        }
        if generators.is_empty() {
            return Err(schema("generators".into(), "at least one generator is required"));
        }
        Presentation::new(self.name, generators, &self.cartan)
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let generators = p
            .generators()
            .iter()
            .map(|g| match &g.element {
                Element::Matrix(m) => GeneratorSpec {
                    label: g.label.clone(),
                    entries: Some(
                        m.rows()
                            .map(|row| row.iter().map(format_scalar).collect())
                            .collect(),
                    ),
                    terms: None,
                },
                Element::Boson(poly) => GeneratorSpec {
                    label: g.label.clone(),
                    entries: None,
                    terms: Some(
                        poly.terms()
                            .map(|(mono, c)| TermSpec {
                                creation: mono.creation().to_vec(),
                                annihilation: mono.annihilation().to_vec(),
                                coeff: format_scalar(c),
                            })
                            .collect(),
                    ),
                },
            })
            .collect();
        let (n, modes) = match p.backend() {
            Backend::Matrix => (Some(p.size()), None),
            Backend::Boson => (None, Some(p.size())),
        };
        AlgebraFile {
            name: p.name().to_string(),
            backend: p.backend(),
            n,
            modes,
            generators,
            cartan: p.cartan_labels().into_iter().map(String::from).collect(),
        }
    }
}

pub fn parse_algebra_json(text: &str) -> Result<Presentation> {
    AlgebraFile::from_json(text)?.into_presentation()
}

pub fn load_algebra_file(path: impl AsRef<Path>) -> Result<Presentation> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_algebra_json(&text)
}
