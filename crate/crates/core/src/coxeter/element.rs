use std::fmt;

/// Canonical index of an element inside its [`CoxeterSystem`](super::CoxeterSystem).
///
/// Indices follow breadth-first order over the simple generators, so they are
/// weakly increasing in Coxeter length and index 0 is always the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub(crate) u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A group element, stored as its permutation of the signed roots.
///
/// With `N` positive roots, slot `i < N` stands for the positive root `α_i`
/// and slot `i + N` for `−α_i`. The permutation commutes with negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    perm: Box<[u16]>,
    length: u32,
}

impl Element {
    pub(crate) fn from_perm(perm: Box<[u16]>) -> Self {
        let n = perm.len() / 2;
        let length = perm[..n].iter().filter(|&&j| j as usize >= n).count() as u32;
        Element { perm, length }
    }

    pub fn identity(positive_roots: usize) -> Self {
        Self::from_perm((0..2 * positive_roots as u16).collect())
    }

    /// Image of signed root slot `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn positive_roots(&self) -> usize {
        self.perm.len() / 2
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// `self · other`, acting as `α ↦ self(other(α))`.
    pub fn compose(&self, other: &Element) -> Element {
        debug_assert_eq!(self.perm.len(), other.perm.len());
        Self::from_perm(other.perm.iter().map(|&j| self.perm[j as usize]).collect())
    }

    pub fn inverse(&self) -> Element {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Element {
            perm: inv.into_boxed_slice(),
            length: self.length,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Whether the permutation is compatible with root negation.
    pub fn commutes_with_negation(&self) -> bool {
        let n = self.positive_roots();
        let neg = |i: usize| (i + n) % (2 * n);
        (0..2 * n).all(|i| self.apply(neg(i)) == neg(self.apply(i)))
    }
}
