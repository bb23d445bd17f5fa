use thiserror::Error;

use crate::lattice::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid period ({m},{}): need m >= 1 and l >= 1", -ell)]
    InvalidPeriod { m: i64, ell: i64 },

    #[error("invalid generalized partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<i64>, reason: String },

    #[error("cell {x} is not below {y} in the cylinder")]
    NotComparable { x: Cell, y: Cell },

    #[error("cell {0} does not belong to the diagram")]
    NotInDiagram(Cell),

    #[error("rank mismatch: {0} vs {1}")]
    KappaMismatch(usize, usize),

    #[error("root is not in Q+: {0:?}")]
    NotNonNegative(Vec<i64>),

    #[error("a_{{ij}} needs i < j, got i={i}, j={j}")]
    EmptyInterval { i: i64, j: i64 },

    #[error("residue {residue} out of range for kappa={kappa}")]
    ResidueOutOfRange { residue: usize, kappa: usize },

    #[error("length {length} exceeds enumeration cap {cap}")]
    LengthCapExceeded { length: usize, cap: usize },

    #[error("label {label} outside the tableau range 1..={len}")]
    LabelOutOfRange { label: usize, len: usize },

    #[error("cell {0} is not in the tableau domain")]
    NotInTableau(Cell),

    #[error("{0} is not an order ideal of the diagram")]
    NotAnIdeal(String),

    #[error("w_zeta depends on the tableau for ideal {0}")]
    TableauDependence(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
