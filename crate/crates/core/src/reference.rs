//! Published bracket and root tables, transcribed as printed.
//!
//! These are data, kept apart from recomputation so that disagreements can
//! be displayed rather than silently resolved. Coefficients use the scalar
//! grammar; labels use the preset labels.

use crate::error::{Error, Result};
use crate::lie::StructureConstants;
use crate::presentation::Presentation;
use crate::scalar::{parse_scalar, Scalar};

/// One printed row `[left, right] = Σ coeff · label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedBracket {
    pub left: &'static str,
    pub right: &'static str,
    pub terms: &'static [(&'static str, &'static str)],
}

impl PrintedBracket {
    pub fn location(&self) -> String {
        format!("[{},{}]", self.left, self.right)
    }

    /// Coefficients over the generators of `p`.
    pub fn coefficients(&self, p: &Presentation) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); p.len()];
        for (coeff, label) in self.terms {
            out[p.index_of(label)?] += &parse_scalar(coeff)?;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedRoot {
    pub label: &'static str,
    pub components: &'static [&'static str],
}

impl PrintedRoot {
    pub fn values(&self) -> Result<Vec<Scalar>> {
        self.components
            .iter()
            .map(|c| Ok(parse_scalar(c)?))
            .collect()
    }
}

/// How a printed root list relates to `[H, E] = αE`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootConvention {
    /// Printed as `α` with `[H, E] = αE`.
    AdjointH,
    /// Printed from `[E, H]`, so every root appears negated.
    BracketEH,
}

/// How printed roots should be matched to generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMatching {
    PerLabel,
    /// Printed labels do not identify generators; compare the sets.
    SetOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceTables {
    pub brackets: &'static [PrintedBracket],
    pub roots: &'static [PrintedRoot],
    pub convention: RootConvention,
    pub matching: RootMatching,
}

const fn row(
    left: &'static str,
    right: &'static str,
    terms: &'static [(&'static str, &'static str)],
) -> PrintedBracket {
    PrintedBracket { left, right, terms }
}

const fn root(label: &'static str, components: &'static [&'static str]) -> PrintedRoot {
    PrintedRoot { label, components }
}

pub const SU3_X_BRACKETS: [PrintedBracket; 28] = [
    row("X1", "X2", &[("2*i", "X7")]),
    row("X1", "X3", &[("-i", "X6")]),
    row("X1", "X4", &[("-i", "X5")]),
    row("X1", "X5", &[("-i", "X4")]),
    row("X1", "X6", &[("-i", "X3")]),
    row("X1", "X7", &[("-2*i", "X2")]),
    row("X1", "X8", &[]),
    row("X2", "X3", &[("i", "X5")]),
    row("X2", "X4", &[("-i", "X6")]),
    row("X2", "X5", &[("-i", "X3")]),
    row("X2", "X6", &[("i", "X4")]),
    row("X2", "X7", &[("2*i", "X1")]),
    row("X2", "X8", &[]),
    row("X3", "X4", &[("i", "X7"), ("sqrt3*i", "X8")]),
    row("X3", "X5", &[("-i", "X2")]),
    row("X3", "X6", &[("-i", "X1")]),
    row("X3", "X7", &[("i", "X4")]),
    row("X3", "X8", &[("-sqrt3*i", "X4")]),
    row("X4", "X5", &[("-i", "X1")]),
    row("X4", "X6", &[("-i", "X2")]),
    row("X4", "X7", &[("i", "X3")]),
    row("X4", "X8", &[("sqrt3*i", "X3")]),
    row("X5", "X6", &[("-i", "X7"), ("sqrt3*i", "X8")]),
    row("X5", "X7", &[("-i", "X6")]),
    row("X5", "X8", &[("-sqrt3*i", "X6")]),
    row("X6", "X7", &[("-i", "X5")]),
    row("X6", "X8", &[("sqrt3*i", "X5")]),
    row("X7", "X8", &[]),
];

pub const SU3_X_ROOTS: [PrintedRoot; 6] = [
    root("X1", &["-2", "0"]),
    root("X2", &["2", "0"]),
    root("X3", &["1", "-sqrt3"]),
    root("X4", &["1", "sqrt3"]),
    root("X5", &["-1", "-sqrt3"]),
    root("X6", &["-1", "sqrt3"]),
];

pub const SU3_BOSON_BRACKETS: [PrintedBracket; 28] = [
    row("Eg", "E-g", &[("1/3*sqrt3", "H1")]),
    row("Eg", "Ea", &[]),
    row("Eg", "E-a", &[("-1/6*sqrt6", "Eb")]),
    row("Eg", "Eb", &[]),
    row("Eg", "E-b", &[("1/6*sqrt6", "Ea")]),
    row("Eg", "H1", &[("-1/3*sqrt3", "Eg")]),
    row("Eg", "H2", &[]),
    row("E-g", "Ea", &[("1/6*sqrt6", "E-b")]),
    row("E-g", "E-a", &[]),
    row("E-g", "Eb", &[("-1/6*sqrt6", "E-a")]),
    row("E-g", "E-b", &[]),
    row("E-g", "H1", &[("1/3*sqrt3", "E-g")]),
    row("E-g", "H2", &[]),
    row("Ea", "E-a", &[("1/6*sqrt3", "H1"), ("1/2", "H2")]),
    row("Ea", "Eb", &[("1/6*sqrt6", "Eg")]),
    row("Ea", "E-b", &[]),
    row("Ea", "H1", &[("-1/6*sqrt3", "Ea")]),
    row("Ea", "H2", &[("-1/2", "Ea")]),
    row("E-a", "Eb", &[]),
    row("E-a", "E-b", &[("1/6*sqrt6", "E-g")]),
    row("E-a", "H1", &[("1/6*sqrt3", "E-a")]),
    row("E-a", "H2", &[("1/2", "E-a")]),
    row("Eb", "E-b", &[("1/6*sqrt3", "H1"), ("-1/2", "H2")]),
    row("Eb", "H1", &[("-1/6*sqrt3", "Eb")]),
    row("Eb", "H2", &[("1/2", "Eb")]),
    row("E-b", "H1", &[("1/6*sqrt3", "E-b")]),
    row("E-b", "H2", &[("-1/2", "E-b")]),
    row("H1", "H2", &[]),
];

/// Printed from `[E, H]`, hence negated relative to `[H, E] = αE`.
pub const SU3_BOSON_ROOTS: [PrintedRoot; 6] = [
    root("Eg", &["-1/3*sqrt3", "0"]),
    root("E-g", &["1/3*sqrt3", "0"]),
    root("Ea", &["-1/6*sqrt3", "-1/2"]),
    root("E-a", &["1/6*sqrt3", "1/2"]),
    root("Eb", &["-1/6*sqrt3", "1/2"]),
    root("E-b", &["1/6*sqrt3", "-1/2"]),
];

pub const SL3C_BRACKETS: [PrintedBracket; 28] = [
    row("H1", "H2", &[]),
    row("H1", "Ea", &[("2", "Ea")]),
    row("H1", "E-a", &[("-2", "E-a")]),
    row("H2", "Ea", &[("-1", "Ea")]),
    row("H2", "E-a", &[("1", "E-a")]),
    row("H1", "Eb", &[("-1", "Eb")]),
    row("H1", "E-b", &[("1", "E-b")]),
    row("H2", "Eb", &[("2", "Eb")]),
    row("H2", "E-b", &[("-2", "E-b")]),
    row("H1", "Eg", &[("1", "Eg")]),
    row("H1", "E-g", &[("-1", "E-g")]),
    row("H2", "Eg", &[("1", "Eg")]),
    row("H2", "E-g", &[("-1", "E-g")]),
    row("Ea", "E-a", &[("1", "H1")]),
    row("Eb", "E-b", &[("1", "H2")]),
    row("Eg", "E-g", &[("1", "H1"), ("1", "H2")]),
    row("Ea", "Eb", &[("1", "Eg")]),
    row("E-a", "E-b", &[("-1", "Eg")]),
    row("Ea", "E-b", &[]),
    row("Eb", "E-a", &[]),
    row("Ea", "Eg", &[]),
    row("E-a", "E-g", &[]),
    row("Eb", "Eg", &[]),
    row("E-b", "E-g", &[]),
    row("Eb", "E-g", &[("1", "E-a")]),
    row("Eg", "E-b", &[("1", "Ea")]),
    row("Ea", "E-g", &[("-1", "E-b")]),
    row("Eg", "E-a", &[("-1", "Eb")]),
];

pub const SL3C_ROOTS: [PrintedRoot; 6] = [
    root("Ea", &["2", "-1"]),
    root("E-a", &["-2", "1"]),
    root("Eb", &["-1", "2"]),
    root("E-b", &["1", "-2"]),
    root("Eg", &["1", "1"]),
    root("E-g", &["-1", "-1"]),
];

/// Printed against the raw labels X1…X6, which do not name the ladder
/// combinations one to one.
pub const SU3_GELLMANN_ROOTS: [PrintedRoot; 6] = [
    root("X1", &["2", "0"]),
    root("X2", &["-2", "0"]),
    root("X3", &["-1", "sqrt3"]),
    root("X4", &["1", "-sqrt3"]),
    root("X5", &["1", "sqrt3"]),
    root("X6", &["-1", "-sqrt3"]),
];

pub fn reference_tables(preset: &str) -> Result<ReferenceTables> {
    match preset {
        "su3-x" => Ok(ReferenceTables {
            brackets: &SU3_X_BRACKETS,
            roots: &SU3_X_ROOTS,
            convention: RootConvention::AdjointH,
            matching: RootMatching::PerLabel,
        }),
        "su3-boson" => Ok(ReferenceTables {
            brackets: &SU3_BOSON_BRACKETS,
            roots: &SU3_BOSON_ROOTS,
            convention: RootConvention::BracketEH,
            matching: RootMatching::PerLabel,
        }),
        "sl3c" => Ok(ReferenceTables {
            brackets: &SL3C_BRACKETS,
            roots: &SL3C_ROOTS,
            convention: RootConvention::AdjointH,
            matching: RootMatching::PerLabel,
        }),
        "su3-gellmann" => Ok(ReferenceTables {
            brackets: &[],
            roots: &SU3_GELLMANN_ROOTS,
            convention: RootConvention::AdjointH,
            matching: RootMatching::SetOnly,
        }),
        _ => Err(Error::NoReferenceTables(preset.to_string())),
    }
}

/// Structure constants read off a printed table over the generators of `p`.
/// Pairs missing from the table are zero; rows printed as `[b, a]` fill
/// `(a, b)` by antisymmetry.
pub fn printed_structure_constants(
    p: &Presentation,
    rows: &[PrintedBracket],
) -> Result<StructureConstants> {
    let labels: Vec<String> = p.labels().into_iter().map(String::from).collect();
    let mut out = StructureConstants::zero(labels);
    for r in rows {
        let i = p.index_of(r.left)?;
        let j = p.index_of(r.right)?;
        for (k, v) in r.coefficients(p)?.into_iter().enumerate() {
            out.set(j, i, k, -&v);
            out.set(i, j, k, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{jacobi_check, structure_constants};
    use crate::presets;

    #[test]
    fn tables_cover_every_pair_once() {
        for name in ["su3-x", "su3-boson", "sl3c"] {
            let p = presets::preset(name).unwrap();
            let t = reference_tables(name).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for r in t.brackets {
                let (i, j) = (p.index_of(r.left).unwrap(), p.index_of(r.right).unwrap());
                assert!(seen.insert((i.min(j), i.max(j))), "{name} {}", r.location());
            }
            assert_eq!(seen.len(), 28, "{name}");
        }
        assert!(matches!(
            reference_tables("custom"),
            Err(Error::NoReferenceTables(_))
        ));
    }

    #[test]
    fn printed_x_table_fails_jacobi() {
        let p = presets::su3_x();
        let printed = printed_structure_constants(&p, &SU3_X_BRACKETS).unwrap();
        assert!(!jacobi_check(&printed).is_empty());
        assert!(jacobi_check(&structure_constants(&p).unwrap()).is_empty());
    }

    #[test]
    fn printed_rows_parse() {
        let p = presets::su3_x();
        let c = SU3_X_BRACKETS[13].coefficients(&p).unwrap();
        assert_eq!(c[6], Scalar::i());
        assert_eq!(c[7], Scalar::sqrt3() * Scalar::i());
    }
}
