//! Disagreements between the printed reference tables and recomputation.
//!
//! Every `recomputed` string is derived from the engines at call time; only
//! the `printed` side comes from [`crate::reference`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::lie::{coordinates_in, RootVector};
use crate::presets;
use crate::reference::{reference_tables, RootConvention, RootMatching};
use crate::report::format_combination;
use crate::verifier::{root_table, Eq2Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataEntry {
    /// Table row, e.g. `[X1,X5]` or `root Ea`.
    pub location: String,
    pub printed: String,
    pub recomputed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrataReport {
    pub source: String,
    pub entries: Vec<ErrataEntry>,
    pub notes: Vec<String>,
}

impl ErrataReport {
    pub fn entry(&self, location: &str) -> Option<&ErrataEntry> {
        self.entries.iter().find(|e| e.location == location)
    }
}

const CONVENTION_NOTE: &str =
    "printed roots are read from [E, H]; each equals the negated root of [H, E] = αE";

pub fn errata(preset: &str) -> Result<ErrataReport> {
    let tables = reference_tables(preset)?;
    let p = presets::preset(preset)?;
    let labels = p.labels();
    let mut entries = Vec::new();
    let mut notes = Vec::new();

    for row in tables.brackets {
        let printed = row.coefficients(&p)?;
        let b = p.get(row.left)?.bracket(p.get(row.right)?)?;
        let recomputed = coordinates_in(&p, &b)?;
        if printed != recomputed {
            entries.push(ErrataEntry {
                location: row.location(),
                printed: format_combination(&printed, &labels),
                recomputed: format_combination(&recomputed, &labels),
                note: None,
            });
        }
    }

    let table = root_table(&p);
    match tables.matching {
        RootMatching::PerLabel => {
            if tables.convention == RootConvention::BracketEH {
                notes.push(CONVENTION_NOTE.to_string());
            }
            for printed_root in tables.roots {
                let printed = RootVector(printed_root.values()?);
                let entry = table
                    .iter()
                    .find(|e| e.label == printed_root.label)
                    .expect("printed roots name ladder generators");
                let location = format!("root {}", printed_root.label);
                match &entry.result {
                    Eq2Result::Root { root } => {
                        if &printed == root {
                            continue;
                        }
                        let note = (tables.convention == RootConvention::BracketEH
                            && printed == -root)
                            .then(|| "sign convention only".to_string());
                        entries.push(ErrataEntry {
                            location,
                            printed: printed.to_string(),
                            recomputed: root.to_string(),
                            note,
                        });
                    }
                    Eq2Result::NotEigen { failing_cartan } => entries.push(ErrataEntry {
                        location,
                        printed: printed.to_string(),
                        recomputed: format!("not an eigenvector of ad {failing_cartan}"),
                        note: None,
                    }),
                    Eq2Result::ZeroElement => entries.push(ErrataEntry {
                        location,
                        printed: printed.to_string(),
                        recomputed: "zero element".to_string(),
                        note: None,
                    }),
                }
            }
        }
        RootMatching::SetOnly => {
            let printed: BTreeSet<String> = tables
                .roots
                .iter()
                .map(|r| Ok(RootVector(r.values()?).to_string()))
                .collect::<Result<_>>()?;
            let recomputed: BTreeSet<String> = table
                .iter()
                .map(|e| match e.root() {
                    Some(r) => r.to_string(),
                    None => format!("{}: no root", e.label),
                })
                .collect();
            if printed != recomputed {
                let join = |s: &BTreeSet<String>| s.iter().cloned().collect::<Vec<_>>().join(", ");
                entries.push(ErrataEntry {
                    location: "root set".to_string(),
                    printed: join(&printed),
                    recomputed: join(&recomputed),
                    note: None,
                });
            }
            notes.push("printed root labels do not name the ladder combinations; only the root set is compared".to_string());
            for printed_root in tables.roots {
                let printed = RootVector(printed_root.values()?);
                if let Some(e) = table.iter().find(|e| e.root() == Some(&printed)) {
                    notes.push(format!(
                        "printed {} {} is the root of {}",
                        printed_root.label, printed, e.label
                    ));
                }
            }
        }
    }

    Ok(ErrataReport {
        source: preset.to_string(),
        entries,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn su3_x_rows() {
        let r = errata("su3-x").unwrap();
        let e = r.entry("[X1,X5]").unwrap();
        assert_eq!(e.printed, "-i · X4");
        assert_eq!(e.recomputed, "i · X4");
        let rows: Vec<&str> = r
            .entries
            .iter()
            .filter(|e| e.location.starts_with('['))
            .map(|e| e.location.as_str())
            .collect();
        assert_eq!(
            rows,
            [
                "[X1,X3]", "[X1,X5]", "[X2,X4]", "[X2,X6]", "[X3,X5]", "[X3,X6]", "[X3,X7]",
                "[X4,X6]", "[X5,X7]"
            ]
        );
        assert_eq!(r.entries.len(), 9 + 6);
    }

    #[test]
    fn boson_and_sl3c_rows() {
        let r = errata("su3-boson").unwrap();
        let e = r.entry("[E-a,E-b]").unwrap();
        assert_eq!(e.printed, "1/6*sqrt6 · E-g");
        assert_eq!(e.recomputed, "-1/6*sqrt6 · E-g");
        let roots: Vec<_> = r.entries.iter().filter(|e| e.location.starts_with("root")).collect();
        assert_eq!(roots.len(), 6);
        assert!(roots.iter().all(|e| e.note.as_deref() == Some("sign convention only")));

        let r = errata("sl3c").unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].location, "[E-a,E-b]");
        assert_eq!(r.entries[0].recomputed, "-E-g");
    }

    #[test]
    fn gellmann_set_agrees() {
        let r = errata("su3-gellmann").unwrap();
        assert!(r.entries.is_empty());
        assert!(r.notes.iter().any(|n| n == "printed X3 (-1, sqrt3) is the root of X5+iX6"));
    }

    #[test]
    fn printed_differs_from_recomputed() {
        for name in presets::PRESET_NAMES {
            for e in errata(name).unwrap().entries {
                assert_ne!(e.printed, e.recomputed);
            }
        }
        assert!(matches!(errata("x.json"), Err(Error::NoReferenceTables(_))));
    }
}
