//! Fixtures shared by the benchmarks.

use coxarr::{CoxeterDatum, CoxeterSystem, ElementId, Kind};

pub fn system(kind: Kind, rank: usize) -> CoxeterSystem {
    CoxeterSystem::new(CoxeterDatum::new(kind, rank, None).unwrap()).unwrap()
}

/// An element of length about half of `ℓ(w0)`, the interesting middle of
/// the group.
pub fn middle_element(sys: &CoxeterSystem) -> ElementId {
    let half = sys.length(sys.longest_element()) / 2;
    sys.ids().find(|&x| sys.length(x) == half).unwrap()
}
