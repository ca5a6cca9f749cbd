use std::path::PathBuf;

use thiserror::Error;

use crate::presentation::Element;
use crate::scalar::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("boson mode counts differ: {left} vs {right}")]
    ModeCountMismatch { left: usize, right: usize },

    #[error("cannot mix matrix and boson elements")]
    BackendMismatch,

    #[error("basis elements are linearly dependent")]
    DependentBasis,

    #[error("element is not in the span of the basis (residual {residual})")]
    NotInSpan { residual: Box<Element> },

    #[error("bracket [{left}, {right}] leaves the span of the generators (residual {residual})")]
    NotClosed {
        left: String,
        right: String,
        residual: Box<Element>,
    },

    #[error("element is zero")]
    ZeroElement,

    #[error("generator {0} is not a simultaneous eigenvector of the Cartan set")]
    NotEigen(String),

    #[error("ladder generator {0} has no generator with the negated root")]
    NoPartner(String),

    #[error("Cartan set is degenerate under the Killing form")]
    DegenerateCartan,

    #[error("square root of {0} does not lie in Q(i, sqrt2, sqrt3)")]
    NoSquareRoot(String),

    #[error("unknown generator name {0:?}")]
    UnknownName(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("Cartan set must not be empty")]
    EmptyCartan,

    #[error("label mapping is not a bijection: {0}")]
    InvalidMapping(String),

    #[error("generator {label:?} is not square: {rows} rows, row {row} has {cols} entries (expected {expected})")]
    NonSquareMatrix {
        label: String,
        rows: usize,
        row: usize,
        cols: usize,
        expected: usize,
    },

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("scalar at {path}: {source}")]
    ScalarField { path: String, source: ParseError },

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("no reference tables are recorded for {0:?}")]
    NoReferenceTables(String),

    #[error("format {format} is not supported by {command}")]
    UnsupportedFormat { command: String, format: String },

    #[error("unknown command {0:?}")]
    UnknownCommand(String),

    #[error("root diagrams need rank 2, got rank {0}")]
    RankNotTwo(usize),

    #[error("no roots to draw")]
    EmptyRootSet,

    #[error("root of {0} has a non-real component")]
    NonRealRoot(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}
