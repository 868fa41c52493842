//! Crate-wide error type.

use thiserror::Error;

/// Which polymatroid rank axiom a table failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// r(∅) = 0
    P1,
    /// monotonicity
    P2,
    /// submodularity
    P3,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::P1 => write!(f, "P1"),
            Axiom::P2 => write!(f, "P2"),
            Axiom::P3 => write!(f, "P3"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("axiom {axiom} violated by subsets {x} and {y}")]
    AxiomViolation { axiom: Axiom, x: String, y: String },

    #[error("negative rank {value} for subset {subset}")]
    NegativeRank { subset: String, value: i64 },

    #[error("ground set size {n} exceeds the cap of {max}", max = crate::core::MAX_GROUND_SIZE)]
    SizeCapExceeded { n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("edge #{index} = ({}, {}) has an endpoint outside 1..={vertices}", edge.0, edge.1)]
    InvalidEdge {
        index: usize,
        edge: (usize, usize),
        vertices: usize,
    },

    #[error("not the base set of a polymatroid: {0}")]
    NotAPolymatroidBaseSet(String),

    #[error("dual parameter s = {s} is below the largest singleton rank {required}")]
    STooSmall { s: i64, required: i64 },

    #[error("subset {0} is not a circuit-hyperplane")]
    NotACircuitHyperplane(String),

    #[error("operation requires a matroid")]
    NotAMatroid,

    #[error("vector {0} is not a base")]
    NotABase(String),

    #[error("subset {0} is not a basis")]
    NotABasis(String),

    #[error("lattice point count overflowed 64 bits")]
    CountOverflow,

    #[error("grid of {rows}x{cols} entries is too small; need at least {need}x{need}")]
    GridTooSmall {
        rows: usize,
        cols: usize,
        need: usize,
    },

    #[error("degree bound exceeded: nonzero binomial coefficient {value} at ({i}, {j})")]
    DegreeExceeded { i: usize, j: usize, value: String },

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("activity condition selected {found} bases for partition {partition}, expected exactly one")]
    UniquenessViolation { found: usize, partition: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AxiomViolation { .. } => "AxiomViolation",
            Error::NegativeRank { .. } => "NegativeRank",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::InvalidParams(_) => "InvalidParams",
            Error::InvalidEdge { .. } => "InvalidEdge",
            Error::NotAPolymatroidBaseSet(_) => "NotAPolymatroidBaseSet",
            Error::STooSmall { .. } => "STooSmall",
            Error::NotACircuitHyperplane(_) => "NotACircuitHyperplane",
            Error::NotAMatroid => "NotAMatroid",
            Error::NotABase(_) => "NotABase",
            Error::NotABasis(_) => "NotABasis",
            Error::CountOverflow => "CountOverflow",
            Error::GridTooSmall { .. } => "GridTooSmall",
            Error::DegreeExceeded { .. } => "DegreeExceeded",
            Error::InexactDivision(_) => "InexactDivision",
            Error::UniquenessViolation { .. } => "UniquenessViolation",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
