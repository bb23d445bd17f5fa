//! Cylindric Young diagrams realized inside the affine root system of type
//! `A_{κ-1}^{(1)}` through colored hook lengths.
//!
//! The crate covers the cylinder and its order ([`lattice`]), cylindric
//! diagrams and their finite ideals ([`diagrams`]), the root lattice
//! ([`roots`]), the affine Weyl group ([`weyl`]), colored hook lengths and
//! the orders on inversion sets ([`hooks`]), the ideal/weak Bruhat interval
//! correspondence ([`ideals_bruhat`]) and the classical finite case
//! ([`classical`]). [`verify`] bundles the exhaustive checks behind the CLI.

pub mod classical;
pub mod diagrams;
pub mod error;
pub mod hooks;
pub mod ideals_bruhat;
pub mod lattice;
pub mod render;
pub mod report;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use diagrams::{BottomKind, BottomSet, CylindricDiagram, GeneralizedPartition, Ideal, Tableau};
pub use error::{Error, Result};
pub use lattice::{Cell, CylCell, Period};
pub use roots::{RootVector, WeightVector};
pub use weyl::{WeylElement, Word};
