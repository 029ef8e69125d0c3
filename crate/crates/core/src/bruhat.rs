//! Bruhat order, Bruhat graphs of principal ideals and the quantities read
//! off them: directed distances, degrees, broken rhombi and meeting points.

use std::collections::VecDeque;

use crate::coxeter::{CoxeterSystem, ElementId};
use crate::error::{Error, Result};

const ABSENT: u32 = u32::MAX;

/// `u ≤ w` in the Bruhat order, by descent lifting.
///
/// If `s` is a left descent of `w`, then `u ≤ w` iff `su ≤ sw` when `s` is
/// also a left descent of `u`, and iff `u ≤ sw` otherwise.
pub fn leq(sys: &CoxeterSystem, u: ElementId, w: ElementId) -> bool {
    let (mut u, mut w) = (u, w);
    loop {
        if sys.length(u) > sys.length(w) {
            return false;
        }
        if sys.length(u) == sys.length(w) {
            return u == w;
        }
        let s = (0..sys.rank())
            .find(|&s| sys.is_left_descent(s, w))
            .expect("w > e has a left descent");
        if sys.is_left_descent(s, u) {
            u = sys.left_mul_generator(s, u);
        }
        w = sys.left_mul_generator(s, w);
    }
}

/// The principal order ideal `[e, w]`.
#[derive(Clone, Debug)]
pub struct BruhatInterval<'a> {
    sys: &'a CoxeterSystem,
    top: ElementId,
    members: Vec<ElementId>,
    local: Vec<u32>,
}

impl<'a> BruhatInterval<'a> {
    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    /// Members in canonical index order (so `e` comes first).
    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: ElementId) -> bool {
        self.local[u.index()] != ABSENT
    }

    /// Position of `u` in [`members`](Self::members).
    pub fn position(&self, u: ElementId) -> Option<usize> {
        match self.local[u.index()] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    pub fn leq(&self, u: ElementId, v: ElementId) -> bool {
        self.contains(u) && self.contains(v) && leq(self.sys, u, v)
    }

    /// Reflections `t` with `tu ∈ [e, w]`, i.e. the edges at `u` in `bg(w)`.
    pub fn edge_set(&self, u: ElementId) -> Result<Vec<ElementId>> {
        if !self.contains(u) {
            return Err(Error::NotInIdeal);
        }
        Ok((0..self.sys.positive_root_count())
            .filter(|&r| self.contains(self.sys.left_mul_reflection(r, u)))
            .map(|r| self.sys.reflection(r))
            .collect())
    }

    pub fn degree(&self, u: ElementId) -> Result<usize> {
        self.edge_set(u).map(|e| e.len())
    }

    /// Members of `[e, w]` reachable from `u` by a single upward edge.
    fn up_neighbours(&self, u: ElementId) -> Vec<ElementId> {
        let lu = self.sys.length(u);
        (0..self.sys.positive_root_count())
            .map(|r| self.sys.left_mul_reflection(r, u))
            .filter(|&v| self.sys.length(v) > lu && self.contains(v))
            .collect()
    }
}

/// `[e, w]`, found by filtering the whole group.
pub fn ideal(sys: &CoxeterSystem, w: ElementId) -> BruhatInterval<'_> {
    let members: Vec<ElementId> = sys.ids().filter(|&u| leq(sys, u, w)).collect();
    let mut local = vec![ABSENT; sys.order()];
    for (i, u) in members.iter().enumerate() {
        local[u.index()] = i as u32;
    }
    BruhatInterval {
        sys,
        top: w,
        members,
        local,
    }
}

/// A directed edge `from → to = t·from` with `ℓ(from) < ℓ(to)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BruhatEdge {
    pub from: ElementId,
    pub to: ElementId,
    /// Positive root of the reflection `t`.
    pub root: usize,
}

/// The Bruhat graph `bg(w)`: all reflection edges inside `[e, w]`.
#[derive(Clone, Debug)]
pub struct BruhatGraph<'a> {
    interval: BruhatInterval<'a>,
    edges: Vec<BruhatEdge>,
}

impl<'a> BruhatGraph<'a> {
    pub fn interval(&self) -> &BruhatInterval<'a> {
        &self.interval
    }

    pub fn edges(&self) -> &[BruhatEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.interval.len()
    }

    /// Edges of length difference one, which are exactly the cover relations.
    pub fn is_covering(&self, e: &BruhatEdge) -> bool {
        let sys = self.interval.sys;
        sys.length(e.to) == sys.length(e.from) + 1
    }

    pub fn covering_edges(&self) -> impl Iterator<Item = &BruhatEdge> {
        self.edges.iter().filter(|e| self.is_covering(e))
    }

    pub fn non_covering_edges(&self) -> impl Iterator<Item = &BruhatEdge> {
        self.edges.iter().filter(|e| !self.is_covering(e))
    }
}

pub fn bruhat_graph(sys: &CoxeterSystem, w: ElementId) -> BruhatGraph<'_> {
    let interval = ideal(sys, w);
    let edges = interval
        .members
        .iter()
        .flat_map(|&u| {
            let interval = &interval;
            (0..sys.positive_root_count()).filter_map(move |r| {
                let v = sys.left_mul_reflection(r, u);
                (sys.length(v) > sys.length(u) && interval.contains(v)).then_some(BruhatEdge {
                    from: u,
                    to: v,
                    root: r,
                })
            })
        })
        .collect();
    BruhatGraph { interval, edges }
}

/// Directed distance to `w` from every group element (`None` when `u ≰ w`).
///
/// Breadth-first search backwards from `w`: the in-neighbours of `v` are the
/// `tv` with `ℓ(tv) < ℓ(v)`, all of which already lie below `w`.
pub fn distances_to(sys: &CoxeterSystem, w: ElementId) -> Vec<Option<u32>> {
    let mut dist = vec![None; sys.order()];
    dist[w.index()] = Some(0);
    let mut queue = VecDeque::from([w]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v.index()].unwrap();
        for r in 0..sys.positive_root_count() {
            let u = sys.left_mul_reflection(r, v);
            if sys.length(u) < sys.length(v) && dist[u.index()].is_none() {
                dist[u.index()] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// `al(u, w)`, the length of a shortest directed path `u → ⋯ → w`.
pub fn directed_distance(sys: &CoxeterSystem, u: ElementId, w: ElementId) -> Option<usize> {
    distances_to(sys, w)[u.index()].map(|d| d as usize)
}

/// Members `u ≤ w` with `al(u, w) > ℓ′(uw⁻¹)`.
pub fn distance_defects(sys: &CoxeterSystem, w: ElementId) -> Vec<ElementId> {
    let dist = distances_to(sys, w);
    sys.ids()
        .filter(|&u| match dist[u.index()] {
            Some(d) => d as usize != sys.reflection_distance(u, w),
            None => false,
        })
        .collect()
}

/// Whether `al(u, w) = ℓ′(uw⁻¹)` for every `u ≤ w`.
pub fn distance_condition(sys: &CoxeterSystem, w: ElementId) -> bool {
    distance_defects(sys, w).is_empty()
}

/// A witness `v ≤ u, w` with `al(v, w) + al(v, u) = ℓ′(uw⁻¹)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeetPoint {
    pub v: ElementId,
    pub to_w: usize,
    pub to_u: usize,
}

/// Finds a meeting point, trying candidates in increasing
/// `ℓ′(vu⁻¹) + ℓ′(vw⁻¹)` order (ties by canonical index).
pub fn meet_point(sys: &CoxeterSystem, u: ElementId, w: ElementId) -> Result<MeetPoint> {
    let target = sys.reflection_distance(u, w);
    let du = distances_to(sys, u);
    let dw = distances_to(sys, w);
    let mut candidates: Vec<(usize, ElementId, usize, usize)> = sys
        .ids()
        .filter_map(|v| {
            let (a, b) = (dw[v.index()]?, du[v.index()]?);
            let score = sys.reflection_distance(v, u) + sys.reflection_distance(v, w);
            Some((score, v, a as usize, b as usize))
        })
        .collect();
    candidates.sort_unstable_by_key(|c| (c.0, c.1));
    candidates
        .into_iter()
        .find(|&(_, _, a, b)| a + b == target)
        .map(|(_, v, to_w, to_u)| MeetPoint { v, to_w, to_u })
        .ok_or(Error::SearchExhausted)
}

/// `E(u) = {t ∈ T : tu ≤ w}`.
pub fn edge_set_at(sys: &CoxeterSystem, u: ElementId, w: ElementId) -> Result<Vec<ElementId>> {
    if !leq(sys, u, w) {
        return Err(Error::NotInIdeal);
    }
    Ok(sys
        .reflections()
        .iter()
        .copied()
        .filter(|&t| leq(sys, sys.multiply(t, u), w))
        .collect())
}

pub fn degree(sys: &CoxeterSystem, u: ElementId, w: ElementId) -> Result<usize> {
    edge_set_at(sys, u, w).map(|e| e.len())
}

/// Whether every vertex of `bg(w)` has degree `ℓ(w)`.
pub fn is_regular_bg(sys: &CoxeterSystem, w: ElementId) -> bool {
    let interval = ideal(sys, w);
    let lw = sys.length(w);
    interval
        .members()
        .iter()
        .all(|&u| interval.degree(u).unwrap() == lw)
}

/// `x ← y → z` in `bg(w)` with `x`, `z` incomparable and no `v ≤ w` such
/// that `x → v ← z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BrokenRhombus {
    pub x: ElementId,
    pub y: ElementId,
    pub z: ElementId,
}

/// Every broken rhombus of `[e, w]`, as ordered triples (both `(x, y, z)`
/// and `(z, y, x)` are listed).
pub fn broken_rhombi(sys: &CoxeterSystem, w: ElementId) -> Vec<BrokenRhombus> {
    rhombi_scan(sys, w, false)
}

pub fn has_broken_rhombus(sys: &CoxeterSystem, w: ElementId) -> bool {
    !rhombi_scan(sys, w, true).is_empty()
}

fn rhombi_scan(sys: &CoxeterSystem, w: ElementId, first_only: bool) -> Vec<BrokenRhombus> {
    let interval = ideal(sys, w);
    let up: Vec<Vec<ElementId>> = interval
        .members()
        .iter()
        .map(|&u| {
            let mut n = interval.up_neighbours(u);
            n.sort_unstable();
            n
        })
        .collect();
    let up_of = |u: ElementId| &up[interval.position(u).unwrap()];
    let mut out = Vec::new();
    for (i, &y) in interval.members().iter().enumerate() {
        for &x in &up[i] {
            for &z in &up[i] {
                if x == z || leq(sys, x, z) || leq(sys, z, x) {
                    continue;
                }
                if disjoint_sorted(up_of(x), up_of(z)) {
                    out.push(BrokenRhombus { x, y, z });
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out
}

fn disjoint_sorted(a: &[ElementId], b: &[ElementId]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests;
