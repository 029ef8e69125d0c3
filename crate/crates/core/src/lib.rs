//! Bruhat intervals and inversion arrangements of finite Coxeter groups.
//!
//! The crate enumerates a finite Coxeter group exactly, builds Bruhat graphs
//! of principal order ideals `[e, w]`, the inversion arrangement of `w` with
//! its NBC sets, and the map sending an NBC set `{i_1 < … < i_m}` to
//! `t_{i_1}⋯t_{i_m}·w`. On top of that it decides the directed-distance
//! criterion for that map to be onto, the rational-smoothness tests (regular
//! Bruhat graph, broken rhombi) and, for symmetric groups, the pattern and
//! right-hull characterisations.

pub mod arrangement;
pub mod bruhat;
pub mod coxeter;
mod error;
pub mod typea;
pub mod verify;

pub use arrangement::{InversionArrangement, NbcFamily, PhiCheck};
pub use bruhat::{BrokenRhombus, BruhatGraph, BruhatInterval};
pub use coxeter::{CoxeterDatum, CoxeterSystem, Element, ElementId, Kind, DEFAULT_CAP};
pub use error::{Error, Result};
pub use typea::Permutation;
