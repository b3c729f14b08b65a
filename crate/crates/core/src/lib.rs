//! Simplicial free resolutions of monomial rings, the explicit A∞-structure
//! obtained by homotopy transfer from the Taylor resolution, and certified
//! Golod verdicts for rooted rings.

pub mod ainfty;
pub mod chain;
pub mod error;
pub mod field;
pub mod golod;
pub mod io;
pub mod linalg;
pub mod massey;
pub mod moment_angle;
pub mod monomial;
mod par;
pub mod resolution;
pub mod rooting;
pub mod series;
pub mod simplicial;

pub use error::{Error, Result};
pub use field::FieldConfig;
pub use monomial::{Guards, LcmLattice, Monomial, MonomialIdeal, VariableContext};
pub use simplicial::{Face, LabeledComplex, SimplicialComplex};
