//! Symmetric groups in one-line notation.
//!
//! Composition is read left to right: `(uw)(i) = w(u(i))`. With this
//! convention left multiplication by a transposition `(a b)` swaps the
//! entries in positions `a` and `b`, and the inversions of the Coxeter
//! element coincide with the usual inversions of a permutation.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::arrangement::InversionArrangement;
use crate::bruhat;
use crate::coxeter::{CoxeterDatum, CoxeterSystem, ElementId, Kind};
use crate::error::{Error, Result};

/// The four patterns whose avoidance characterises `#reg(w) = #[e, w]`.
pub const FORBIDDEN_PATTERNS: [&str; 4] = ["4231", "35142", "42513", "351624"];

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(oneline: Vec<u8>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("{oneline:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// `i ↦ n + 1 − i`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    /// The transposition `(a b)` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u8).permutations(n).map(Permutation)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn oneline(&self) -> &[u8] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `self · w`, that is `i ↦ w(self(i))`.
    pub fn compose(&self, w: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| w.0[i as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// Number of inversions `i < j`, `w(i) > w(j)`.
    pub fn inversion_count(&self) -> usize {
        self.0
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count()
    }

    /// Disjoint cycles, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.at(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Rotation of the diagram by 180°: `(i, j) ↦ (n+1−i, n+1−j)`.
    pub fn rotate(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    /// Adjacent-transposition word of `self` (1-based letters), obtained by
    /// repeatedly swapping the leftmost descent.
    fn descent_word(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            word.push(i + 1);
            p.swap(i, i + 1);
        }
        word
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"3412"` (single digits) or separated values `"3,4,1,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<u8>> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("`{c}` is not a digit")))
                })
                .collect()
        };
        let values = values?;
        if values.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            self.0.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

/// Whether some subsequence of `w` is order-isomorphic to `p`.
pub fn contains_pattern(w: &Permutation, p: &Permutation) -> bool {
    let m = p.n();
    if m > w.n() {
        return false;
    }
    (0..w.n()).combinations(m).any(|idx| {
        (0..m)
            .tuple_combinations()
            .all(|(j, k)| (p.0[j] < p.0[k]) == (w.0[idx[j]] < w.0[idx[k]]))
    })
}

pub fn avoids_forbidden_patterns(w: &Permutation) -> bool {
    FORBIDDEN_PATTERNS
        .iter()
        .all(|p| !contains_pattern(w, &p.parse().unwrap()))
}

/// `w[i, j] = #{x ≤ i : w(x) ≥ j}`, stored at `[i−1][j−1]`.
pub fn rank_table(w: &Permutation) -> Vec<Vec<u8>> {
    let n = w.n();
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| (1..=i).filter(|&x| w.at(x) >= j).count() as u8)
                .collect()
        })
        .collect()
}

/// Bruhat order on `S_n` through rank tables.
pub fn dominance_leq(u: &Permutation, w: &Permutation) -> bool {
    assert_eq!(u.n(), w.n(), "permutations of different sizes");
    let (tu, tw) = (rank_table(u), rank_table(w));
    tu.iter()
        .flatten()
        .zip(tw.iter().flatten())
        .all(|(a, b)| a <= b)
}

/// Dots `(i, w(i))` in matrix coordinates, `(1, 1)` top left.
pub fn diagram(w: &Permutation) -> Vec<(usize, usize)> {
    (1..=w.n()).map(|i| (i, w.at(i))).collect()
}

/// A set of cells of the `n × n` board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightHull {
    n: usize,
    cells: Vec<bool>,
}

impl RightHull {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n)
            .cartesian_product(1..=self.n)
            .filter(|&(i, j)| self.contains(i, j))
    }

    pub fn len(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains_diagram(&self, u: &Permutation) -> bool {
        diagram(u).into_iter().all(|(i, j)| self.contains(i, j))
    }
}

/// Cells `(i, j)` such that both `{x ≤ i, y ≥ j}` and `{x ≥ i, y ≤ j}` meet
/// the diagram of `w`.
pub fn right_hull(w: &Permutation) -> RightHull {
    let n = w.n();
    let dots = diagram(w);
    let cells = (1..=n)
        .cartesian_product(1..=n)
        .map(|(i, j)| {
            dots.iter().any(|&(x, y)| x <= i && y >= j)
                && dots.iter().any(|&(x, y)| x >= i && y <= j)
        })
        .collect();
    RightHull { n, cells }
}

/// `[e, w] = {u : diag(u) ⊆ rh(w)}`.
pub fn has_right_hull_property(w: &Permutation) -> bool {
    let hull = right_hull(w);
    let tw = rank_table(w);
    Permutation::all(w.n()).all(|u| {
        let below = rank_table(&u)
            .iter()
            .flatten()
            .zip(tw.iter().flatten())
            .all(|(a, b)| a <= b);
        below == hull.contains_diagram(&u)
    })
}

/// `n − c(w)` with `c(w)` the number of cycles.
pub fn absolute_length_cycles(w: &Permutation) -> usize {
    w.n() - w.cycles().len()
}

/// The type `A_{n−1}` system realising `S_n`.
pub fn symmetric_group(n: usize) -> Result<CoxeterSystem> {
    if n < 2 {
        return Err(Error::InvalidDatum(format!(
            "S_{n} has no simple reflections"
        )));
    }
    CoxeterSystem::new(CoxeterDatum::a(n - 1))
}

fn check_type_a(sys: &CoxeterSystem, n: usize) -> Result<()> {
    let d = sys.datum();
    if d.kind() != Kind::A || d.rank() + 1 != n {
        return Err(Error::NotTypeA(n.saturating_sub(1)));
    }
    Ok(())
}

/// The element of `A_{n−1}` matching `w`, with `s_i ↦ (i, i+1)`.
pub fn to_element(sys: &CoxeterSystem, w: &Permutation) -> Result<ElementId> {
    check_type_a(sys, w.n())?;
    let word: Vec<usize> = w.descent_word().iter().map(|i| i - 1).collect();
    sys.evaluate(&word)
}

/// Inverse of [`to_element`].
pub fn from_element(sys: &CoxeterSystem, x: ElementId) -> Permutation {
    let n = sys.rank() + 1;
    let mut p = Permutation::identity(n);
    // s_i · p swaps positions i and i+1
    for &s in sys.reduced_word(x).iter().rev() {
        p.0.swap(s, s + 1);
    }
    p
}

/// The four equivalent conditions for a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollectionCheck {
    /// `#NBC(w) = #[e, w]`, i.e. regions of the inversion arrangement.
    pub regions_eq_interval: bool,
    pub right_hull_prop: bool,
    pub avoids_patterns: bool,
    pub distance_cond: bool,
}

impl CollectionCheck {
    pub fn all_agree(&self) -> bool {
        let v = self.regions_eq_interval;
        self.right_hull_prop == v && self.avoids_patterns == v && self.distance_cond == v
    }
}

pub fn check_collection(sys: &CoxeterSystem, w: &Permutation) -> Result<CollectionCheck> {
    let x = to_element(sys, w)?;
    let arr = InversionArrangement::canonical(sys, x);
    let nbc = arr.nbc_sets()?.len();
    Ok(CollectionCheck {
        regions_eq_interval: nbc == bruhat::ideal(sys, x).len(),
        right_hull_prop: has_right_hull_property(w),
        avoids_patterns: avoids_forbidden_patterns(w),
        distance_cond: bruhat::distance_condition(sys, x),
    })
}
