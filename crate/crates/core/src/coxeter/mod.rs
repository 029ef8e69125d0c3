//! Finite Coxeter systems: roots, elements, reflections, lengths.

mod datum;
mod element;
pub mod scalar;
mod system;

pub use datum::{CoxeterDatum, Kind};
pub use element::{Element, ElementId};
pub use scalar::Scalar;
pub use system::{CoxeterSystem, Inversion, Realization, DEFAULT_CAP};
