//! Command dispatch behind the `cwlab` binary.
//!
//! `cwlab <cmd> --source <preset|file.json> [--format md|json|svg|txt] [--out path]`

use std::path::PathBuf;

use crate::algebra_file::{load_algebra_file, AlgebraFile};
use crate::diagram::{labeled_roots, render_ascii, render_svg};
use crate::errata::errata;
use crate::error::{Error, Result};
use crate::lie::normalize_presentation;
use crate::presentation::Presentation;
use crate::presets::{self, PRESET_NAMES};
use crate::report::{
    commutator_table, render_errata, render_roots, render_table, render_verify, roots_report,
    Format,
};
use crate::verifier::verify_cartan_weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Command {
    /// Every bracket [g_i, g_j], i < j, in the generator basis.
    Table,
    /// Root of every non-Cartan generator.
    Roots,
    /// Cartan-Weyl relations (1)-(4).
    Verify,
    /// Killing-normalized presentation as an algebra file.
    Normalize,
    /// Rank-2 root diagram.
    Diagram,
    /// Printed reference tables against recomputation.
    Errata,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Table => "table",
            Command::Roots => "roots",
            Command::Verify => "verify",
            Command::Normalize => "normalize",
            Command::Diagram => "diagram",
            Command::Errata => "errata",
        }
    }

    pub fn default_format(self) -> Format {
        match self {
            Command::Normalize => Format::Json,
            Command::Diagram => Format::Svg,
            _ => Format::Md,
        }
    }
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Command::Table,
            Command::Roots,
            Command::Verify,
            Command::Normalize,
            Command::Diagram,
            Command::Errata,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| Error::UnknownCommand(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Preset(String),
    File(PathBuf),
}

impl Source {
    /// Preset names win; anything ending in `.json` or naming an existing
    /// path is a file.
    pub fn resolve(s: &str) -> Result<Self> {
        if PRESET_NAMES.contains(&s) {
            return Ok(Source::Preset(s.to_string()));
        }
        let path = PathBuf::from(s);
        if s.ends_with(".json") || path.exists() {
            Ok(Source::File(path))
        } else {
            Err(Error::UnknownPreset(s.to_string()))
        }
    }

    pub fn load(&self) -> Result<Presentation> {
        match self {
            Source::Preset(name) => presets::preset(name),
            Source::File(path) => load_algebra_file(path),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub document: String,
    /// Set by `verify` when any relation fails in strict mode.
    pub strict_failure: bool,
}

impl CommandOutput {
    fn plain(document: String) -> Self {
        CommandOutput {
            document,
            strict_failure: false,
        }
    }
}

pub fn run_command(cmd: Command, source: &str, format: Option<Format>) -> Result<CommandOutput> {
    let format = format.unwrap_or(cmd.default_format());
    let source = Source::resolve(source)?;
    let unsupported = || Error::UnsupportedFormat {
        command: cmd.name().to_string(),
        format: format.to_string(),
    };

    if cmd == Command::Errata {
        let Source::Preset(name) = &source else {
            return Err(Error::NoReferenceTables(match &source {
                Source::File(p) => p.display().to_string(),
                Source::Preset(n) => n.clone(),
            }));
        };
        return Ok(CommandOutput::plain(render_errata(&errata(name)?, format)?));
    }

    let p = source.load()?;
    match cmd {
        Command::Table => Ok(CommandOutput::plain(render_table(&commutator_table(&p)?, format)?)),
        Command::Roots => Ok(CommandOutput::plain(render_roots(&roots_report(&p), format)?)),
        Command::Verify => {
            let report = verify_cartan_weyl(&p);
            Ok(CommandOutput {
                document: render_verify(&report, format)?,
                strict_failure: !report.verdicts.strict,
            })
        }
        Command::Normalize => match format {
            Format::Json => {
                let q = normalize_presentation(&p)?;
                Ok(CommandOutput::plain(AlgebraFile::from_presentation(&q).to_json()))
            }
            _ => Err(unsupported()),
        },
        Command::Diagram => {
            let roots = labeled_roots(&p)?;
            match format {
                Format::Svg => Ok(CommandOutput::plain(render_svg(&roots)?)),
                Format::Txt => Ok(CommandOutput::plain(render_ascii(&roots)?)),
                _ => Err(unsupported()),
            }
        }
        Command::Errata => unreachable!("handled above"),
    }
}
