//! Text renderings of tables, roots, verification reports and errata.
//!
//! All scalars are printed with [`format_scalar`](crate::format_scalar), so
//! every document is exact and byte-for-byte deterministic.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::boson::coefficient_prefix;
use crate::errata::ErrataReport;
use crate::error::{Error, Result};
use crate::lie::structure_constants;
use crate::presentation::{Backend, Presentation};
use crate::scalar::Scalar;
use crate::verifier::{root_table, CartanWeylReport, Eq2Entry, Eq2Result, Eq4ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Md,
    Json,
    Svg,
    Txt,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Md => "md",
            Format::Json => "json",
            Format::Svg => "svg",
            Format::Txt => "txt",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Σ c_k · label_k` over the nonzero coefficients, e.g. `i · X7 + sqrt3*i · X8`.
/// Unit coefficients are dropped and the zero combination prints `0`.
pub fn format_combination<S: AsRef<str>>(coeffs: &[Scalar], labels: &[S]) -> String {
    let mut out = String::new();
    for (c, label) in coeffs.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let label = label.as_ref();
        let mut c = c.clone();
        if !out.is_empty() {
            if c.to_string().starts_with('-') && !coefficient_prefix(&c).starts_with('(') {
                out.push_str(" - ");
                c = -c;
            } else {
                out.push_str(" + ");
            }
        }
        if c.is_one() {
            out.push_str(label);
        } else if (-&c).is_one() {
            let _ = write!(out, "-{label}");
        } else {
            let _ = write!(out, "{} · {label}", coefficient_prefix(&c));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn unsupported(command: &str, format: Format) -> Error {
    Error::UnsupportedFormat {
        command: command.to_string(),
        format: format.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub left: String,
    pub right: String,
    pub coefficients: Vec<Scalar>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub presentation: String,
    pub backend: Backend,
    pub labels: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn row(&self, left: &str, right: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.left == left && r.right == right)
    }
}

/// Every bracket `[g_i, g_j]`, `i < j`, decomposed over the generators.
pub fn commutator_table(p: &Presentation) -> Result<TableReport> {
    let sc = structure_constants(p)?;
    let labels = p.labels();
    let mut rows = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let coefficients = sc.bracket_row(i, j).to_vec();
            rows.push(TableRow {
                left: labels[i].to_string(),
                right: labels[j].to_string(),
                value: format_combination(&coefficients, &labels),
                coefficients,
            });
        }
    }
    Ok(TableReport {
        presentation: p.name().to_string(),
        backend: p.backend(),
        labels: labels.into_iter().map(String::from).collect(),
        rows,
    })
}

pub fn render_table(t: &TableReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return Ok(json(t)),
        Format::Md => {
            let _ = writeln!(out, "# Commutators of {}\n", t.presentation);
            out.push_str("| bracket | value |\n|---|---|\n");
            for r in &t.rows {
                let _ = writeln!(out, "| `[{},{}]` | `{}` |", r.left, r.right, r.value);
            }
        }
        Format::Txt => {
            for r in &t.rows {
                let _ = writeln!(out, "[{},{}] = {}", r.left, r.right, r.value);
            }
        }
        Format::Svg => return Err(unsupported("table", format)),
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootsReport {
    pub presentation: String,
    pub cartan: Vec<String>,
    pub roots: Vec<Eq2Entry>,
}

pub fn roots_report(p: &Presentation) -> RootsReport {
    RootsReport {
        presentation: p.name().to_string(),
        cartan: p.cartan_labels().into_iter().map(String::from).collect(),
        roots: root_table(p),
    }
}

fn eq2_text(e: &Eq2Entry) -> String {
    match &e.result {
        Eq2Result::Root { root } => root.to_string(),
        Eq2Result::NotEigen { failing_cartan } => {
            format!("not an eigenvector of ad {failing_cartan}")
        }
        Eq2Result::ZeroElement => "zero element".to_string(),
    }
}

pub fn render_roots(r: &RootsReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return Ok(json(r)),
        Format::Md => {
            let _ = writeln!(
                out,
                "# Roots of {} (Cartan {})\n",
                r.presentation,
                r.cartan.join(", ")
            );
            out.push_str("| generator | root |\n|---|---|\n");
            for e in &r.roots {
                let _ = writeln!(out, "| {} | `{}` |", e.label, eq2_text(e));
            }
        }
        Format::Txt => {
            for e in &r.roots {
                let _ = writeln!(out, "{}: {}", e.label, eq2_text(e));
            }
        }
        Format::Svg => return Err(unsupported("roots", format)),
    }
    Ok(out)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

fn violation_text(kind: &Eq4ViolationKind) -> String {
    match kind {
        Eq4ViolationKind::NonzeroForNonRoot { sum } => format!("α+β = {sum} is not a root"),
        Eq4ViolationKind::NotProportional { target } => {
            format!("not a multiple of {target}")
        }
        Eq4ViolationKind::UndefinedRoot => "a generator has no root".to_string(),
        Eq4ViolationKind::AmbiguousRoot { candidates } => {
            format!("α+β carried by {}", candidates.join(", "))
        }
    }
}

pub fn render_verify(r: &CartanWeylReport, format: Format) -> Result<String> {
    let v = &r.verdicts;
    let mut out = String::new();
    match format {
        Format::Json => return Ok(json(r)),
        Format::Md => {
            let _ = writeln!(out, "# Cartan-Weyl check of {}\n", r.presentation);
            let _ = writeln!(out, "Cartan: {}\n", r.cartan.join(", "));
            out.push_str("| relation | verdict |\n|---|---|\n");
            for (name, pass) in [
                ("(1) [H_i, H_k] = 0", v.eq1),
                ("(2) [H, E] = αE", v.eq2),
                ("(3) strict: [E_α, E_−α] = α·H", v.eq3_strict),
                ("(3) relaxed: [E_α, E_−α] in Cartan span", v.eq3_relaxed),
                ("(4) [E_α, E_β] = N E_α+β or 0", v.eq4),
                ("all, strict", v.strict),
                ("all, relaxed", v.relaxed),
            ] {
                let _ = writeln!(out, "| {name} | {} |", verdict(pass));
            }

            out.push_str("\n## Relation (1)\n\n| pair | bracket | verdict |\n|---|---|---|\n");
            for e in &r.eq1 {
                let _ = writeln!(
                    out,
                    "| [{},{}] | `{}` | {} |",
                    e.left,
                    e.right,
                    e.bracket,
                    verdict(e.pass)
                );
            }

            out.push_str("\n## Relation (2)\n\n| generator | root |\n|---|---|\n");
            for e in &r.eq2 {
                let _ = writeln!(out, "| {} | `{}` |", e.label, eq2_text(e));
            }

            out.push_str("\n## Relation (3)\n\n");
            out.push_str("| pair | root | bracket over Cartan | α·H residual | strict | relaxed |\n");
            out.push_str("|---|---|---|---|---|---|\n");
            for row in &r.eq3.rows {
                let over = row
                    .cartan_coefficients
                    .as_ref()
                    .map(|c| format_combination(c, &r.cartan))
                    .unwrap_or_else(|| "not in Cartan span".to_string());
                let _ = writeln!(
                    out,
                    "| [{},{}] | `{}` | `{}` | `{}` | {} | {} |",
                    row.positive,
                    row.negative,
                    row.root,
                    over,
                    row.residual,
                    verdict(row.strict),
                    verdict(row.relaxed)
                );
            }
            if !r.eq3.unpaired.is_empty() {
                let _ = writeln!(out, "\nWithout a partner: {}", r.eq3.unpaired.join(", "));
            }

            out.push_str("\n## Relation (4)\n\n| pair | E_α+β | N |\n|---|---|---|\n");
            for n in &r.eq4.table {
                let _ = writeln!(out, "| [{},{}] | {} | `{}` |", n.left, n.right, n.sum, n.n);
            }
            if !r.eq4.violations.is_empty() {
                out.push_str("\nViolations:\n\n");
                for x in &r.eq4.violations {
                    let _ = writeln!(
                        out,
                        "- [{},{}] = `{}`: {}",
                        x.left,
                        x.right,
                        x.bracket,
                        violation_text(&x.kind)
                    );
                }
            }
        }
        Format::Txt => {
            let _ = writeln!(out, "presentation {}", r.presentation);
            let _ = writeln!(out, "eq1 {}", verdict(v.eq1));
            let _ = writeln!(out, "eq2 {}", verdict(v.eq2));
            let _ = writeln!(out, "eq3 strict {}", verdict(v.eq3_strict));
            let _ = writeln!(out, "eq3 relaxed {}", verdict(v.eq3_relaxed));
            let _ = writeln!(out, "eq4 {}", verdict(v.eq4));
            let _ = writeln!(out, "strict {}", verdict(v.strict));
            let _ = writeln!(out, "relaxed {}", verdict(v.relaxed));
            for row in r.eq3.rows.iter().filter(|row| !row.strict) {
                let _ = writeln!(
                    out,
                    "eq3 [{},{}] residual {}",
                    row.positive, row.negative, row.residual
                );
            }
            for x in &r.eq4.violations {
                let _ = writeln!(
                    out,
                    "eq4 [{},{}] = {}: {}",
                    x.left,
                    x.right,
                    x.bracket,
                    violation_text(&x.kind)
                );
            }
        }
        Format::Svg => return Err(unsupported("verify", format)),
    }
    Ok(out)
}

pub fn render_errata(r: &ErrataReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return Ok(json(r)),
        Format::Md => {
            let _ = writeln!(out, "# Errata for {}\n", r.source);
            if r.entries.is_empty() {
                out.push_str("No disagreements.\n");
            } else {
                out.push_str("| location | printed | recomputed | note |\n|---|---|---|---|\n");
                for e in &r.entries {
                    let _ = writeln!(
                        out,
                        "| {} | `{}` | `{}` | {} |",
                        e.location,
                        e.printed,
                        e.recomputed,
                        e.note.as_deref().unwrap_or("")
                    );
                }
            }
            if !r.notes.is_empty() {
                out.push('\n');
                for n in &r.notes {
                    let _ = writeln!(out, "- {n}");
                }
            }
        }
        Format::Txt => {
            for e in &r.entries {
                let _ = write!(
                    out,
                    "{}: printed {}, recomputed {}",
                    e.location, e.printed, e.recomputed
                );
                if let Some(n) = &e.note {
                    let _ = write!(out, " ({n})");
                }
                out.push('\n');
            }
            for n in &r.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        Format::Svg => return Err(unsupported("errata", format)),
    }
    Ok(out)
}
