//! Inversion arrangements, their circuits in reduced-word order, NBC sets,
//! and the map `φ: NBC(w) → [e, w]`.
//!
//! Positions are 0-based indices into the chosen reduced word. A broken
//! circuit is a circuit with its *largest* position removed; that choice is
//! what makes `φ` land in `[e, w]` and must not be swapped for the usual
//! matroid convention.

use itertools::Itertools;

use crate::bruhat;
use crate::coxeter::{CoxeterSystem, ElementId, Inversion};
use crate::error::{Error, Result};

/// Largest arrangement for which subsets are enumerated.
pub const MAX_HYPERPLANES: usize = 22;

/// A minimal dependent set of positions, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit(pub Vec<usize>);

impl Circuit {
    /// The circuit without its largest position.
    pub fn broken(&self) -> Vec<usize> {
        self.0[..self.0.len() - 1].to_vec()
    }
}

/// The hyperplanes `α_1^⊥, …, α_k^⊥` of the inversions of `w`, in the
/// order given by a fixed reduced word.
#[derive(Clone, Debug)]
pub struct InversionArrangement<'a> {
    sys: &'a CoxeterSystem,
    w: ElementId,
    word: Vec<usize>,
    inversions: Vec<Inversion>,
}

/// All NBC sets of an arrangement, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbcFamily {
    pub sets: Vec<Vec<usize>>,
}

impl NbcFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.sets
            .binary_search_by(|s| s.as_slice().cmp(set))
            .is_ok()
    }
}

/// Outcome of checking `φ` against `[e, w]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiCheck {
    /// Every image lies in `[e, w]`.
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub nbc_count: usize,
    pub interval_size: usize,
}

impl<'a> InversionArrangement<'a> {
    pub fn new(sys: &'a CoxeterSystem, w: ElementId, word: Vec<usize>) -> Result<Self> {
        let inversions = sys.inversions(w, &word)?;
        Ok(InversionArrangement {
            sys,
            w,
            word,
            inversions,
        })
    }

    /// Arrangement ordered by the system's canonical reduced word.
    pub fn canonical(sys: &'a CoxeterSystem, w: ElementId) -> Self {
        Self::new(sys, w, sys.reduced_word(w)).expect("canonical word is reduced")
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn top(&self) -> ElementId {
        self.w
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Number of hyperplanes, `ℓ(w)`.
    pub fn len(&self) -> usize {
        self.inversions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inversions.is_empty()
    }

    pub fn inversions(&self) -> &[Inversion] {
        &self.inversions
    }

    /// Positive root indices `α_1, …, α_k` in word order.
    pub fn roots(&self) -> Vec<usize> {
        self.inversions.iter().map(|i| i.root).collect()
    }

    pub fn reflection_at(&self, position: usize) -> ElementId {
        self.inversions[position].reflection
    }

    pub fn rank_of(&self, positions: &[usize]) -> usize {
        let roots: Vec<usize> = positions.iter().map(|&p| self.inversions[p].root).collect();
        self.sys.root_rank(&roots)
    }

    fn guard(&self) -> Result<()> {
        if self.len() > MAX_HYPERPLANES {
            return Err(Error::TooManyHyperplanes {
                k: self.len(),
                max: MAX_HYPERPLANES,
            });
        }
        Ok(())
    }

    /// All circuits, by increasing size and then lexicographically.
    pub fn circuits(&self) -> Result<Vec<Circuit>> {
        self.guard()?;
        let k = self.len();
        let max_size = (self.sys.rank() + 1).min(k);
        let mut out = Vec::new();
        for size in 1..=max_size {
            for subset in (0..k).combinations(size) {
                if self.rank_of(&subset) != size - 1 {
                    continue;
                }
                let minimal = (0..size).all(|drop| {
                    let rest: Vec<usize> = subset
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &p)| p)
                        .collect();
                    self.rank_of(&rest) == size - 1
                });
                if minimal {
                    out.push(Circuit(subset));
                }
            }
        }
        Ok(out)
    }

    /// NBC sets by depth-first extension, pruning on broken circuits.
    pub fn nbc_sets(&self) -> Result<NbcFamily> {
        let k = self.len();
        // broken circuits as bitmasks, grouped by their largest position
        let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); k];
        for c in self.circuits()? {
            let b = c.broken();
            if let Some(&top) = b.last() {
                by_max[top].push(b.iter().fold(0u64, |m, &p| m | 1 << p));
            }
        }
        let mut sets = vec![Vec::new()];
        let mut stack: Vec<usize> = Vec::new();
        self.nbc_extend(&by_max, 0, 0, &mut stack, &mut sets);
        Ok(NbcFamily { sets })
    }

    fn nbc_extend(
        &self,
        by_max: &[Vec<u64>],
        mask: u64,
        start: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for p in start..self.len() {
            let next = mask | 1 << p;
            if by_max[p].iter().any(|&b| b & !next == 0) {
                continue;
            }
            stack.push(p);
            out.push(stack.clone());
            self.nbc_extend(by_max, next, p + 1, stack, out);
            stack.pop();
        }
    }

    /// Coefficients `c_j` of `χ(t) = Σ_j c_j t^j`, from the Whitney sum
    /// `Σ_B (−1)^{|B|} t^{d − rank B}` over all subsets `B`, `d` the rank of
    /// the ambient reflection representation.
    pub fn characteristic_polynomial(&self) -> Result<Vec<i64>> {
        self.guard()?;
        let k = self.len();
        let d = self.sys.rank();
        let mut coeffs = vec![0i64; d + 1];
        let mut subset = Vec::with_capacity(k);
        for mask in 0u32..(1u32 << k) {
            subset.clear();
            subset.extend((0..k).filter(|&i| mask & (1 << i) != 0));
            let r = self.rank_of(&subset);
            let sign = if subset.len() % 2 == 0 { 1 } else { -1 };
            coeffs[d - r] += sign;
        }
        Ok(coeffs)
    }

    /// Number of regions, `(−1)^d χ(−1)`.
    pub fn region_count(&self) -> Result<u64> {
        let coeffs = self.characteristic_polynomial()?;
        let d = coeffs.len() - 1;
        let at_minus_one: i64 = coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| if j % 2 == 0 { c } else { -c })
            .sum();
        let count = if d % 2 == 0 {
            at_minus_one
        } else {
            -at_minus_one
        };
        Ok(u64::try_from(count).expect("region count is positive"))
    }

    /// `t_{i_1}⋯t_{i_m}·w` for ascending positions, without membership check.
    pub fn phi_unchecked(&self, positions: &[usize]) -> ElementId {
        positions.iter().rev().fold(self.w, |x, &p| {
            self.sys.left_mul_reflection(self.inversions[p].root, x)
        })
    }

    pub fn phi(&self, family: &NbcFamily, positions: &[usize]) -> Result<ElementId> {
        if !family.contains(positions) {
            return Err(Error::NotNbc(positions.to_vec()));
        }
        Ok(self.phi_unchecked(positions))
    }

    /// `w, t_{i_m}w, t_{i_{m−1}}t_{i_m}w, …, φ(positions)`.
    pub fn phi_chain(&self, positions: &[usize]) -> Vec<ElementId> {
        let mut chain = vec![self.w];
        for &p in positions.iter().rev() {
            let last = *chain.last().unwrap();
            chain.push(self.sys.left_mul_reflection(self.inversions[p].root, last));
        }
        chain
    }

    /// `(NBC set, φ(set))` for every NBC set.
    pub fn phi_table(&self, family: &NbcFamily) -> Vec<(Vec<usize>, ElementId)> {
        family
            .sets
            .iter()
            .map(|s| (s.clone(), self.phi_unchecked(s)))
            .collect()
    }

    pub fn phi_check(&self) -> Result<PhiCheck> {
        let family = self.nbc_sets()?;
        let interval = bruhat::ideal(self.sys, self.w);
        let mut images: Vec<ElementId> =
            family.sets.iter().map(|s| self.phi_unchecked(s)).collect();
        let well_defined = images.iter().all(|&u| interval.contains(u));
        images.sort_unstable();
        images.dedup();
        let injective = images.len() == family.len();
        Ok(PhiCheck {
            well_defined,
            injective,
            surjective: well_defined && images.len() == interval.len(),
            nbc_count: family.len(),
            interval_size: interval.len(),
        })
    }

    /// Evaluates the reduced word with the given positions deleted.
    pub fn delete_positions(&self, positions: &[usize]) -> ElementId {
        let mut skip = positions.iter().peekable();
        let mut x = self.sys.identity();
        for (i, &s) in self.word.iter().enumerate() {
            if skip.peek() == Some(&&i) {
                skip.next();
                continue;
            }
            x = self.sys.right_mul_generator(x, s);
        }
        x
    }

    /// The deletion positions `i_1 < ⋯ < i_m`, `m = al(u, w)`, producing `u`
    /// with `(i_m, …, i_1)` lexicographically largest.
    ///
    /// Requires `al(v, w) = ℓ′(vw⁻¹)` for all `v ≤ w`; under that hypothesis
    /// the result is an NBC set mapped to `u` by `φ`.
    pub fn lexmax_preimage(&self, u: ElementId) -> Result<Vec<usize>> {
        if !bruhat::distance_condition(self.sys, self.w) {
            return Err(Error::PreconditionViolated(
                "distance condition fails for w",
            ));
        }
        let m = bruhat::directed_distance(self.sys, u, self.w).ok_or(Error::NotInIdeal)?;
        (0..self.len())
            .combinations(m)
            .filter(|c| self.delete_positions(c) == u)
            .max_by(|a, b| a.iter().rev().cmp(b.iter().rev()))
            .ok_or(Error::SearchExhausted)
    }
}
