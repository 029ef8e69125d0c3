use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use rand::Rng;

use super::datum::CoxeterDatum;
use super::element::{Element, ElementId};
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Default upper bound on the number of group elements built.
pub const DEFAULT_CAP: usize = 50_000;

const NONE: u32 = u32::MAX;

/// How roots are realised.
#[derive(Clone, Debug)]
pub enum Realization {
    /// Positive roots as coordinate vectors over `Z[τ]` in the simple-root basis.
    Linear {
        cartan: Vec<Vec<Scalar>>,
        roots: Vec<Vec<Scalar>>,
    },
    /// `I2(m)`: positive root `d` points in direction `dπ/m`. No coordinates
    /// are needed since every rank question is answered by the rank-2 rule.
    Dihedral { m: u32 },
}

/// A reflection `t_i` of an ordered inversion list together with its root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inversion {
    pub reflection: ElementId,
    pub root: usize,
}

/// A finite Coxeter system with its whole group enumerated.
///
/// Immutable once built; all queries take `&self`.
#[derive(Debug)]
pub struct CoxeterSystem {
    datum: CoxeterDatum,
    realization: Realization,
    simple_roots: Vec<usize>,
    elements: Vec<Element>,
    lookup: HashMap<Box<[u16]>, u32>,
    word_depth: Vec<u32>,
    left_gen: Vec<u32>,
    right_gen: Vec<u32>,
    inverse: Vec<u32>,
    reflections: Vec<ElementId>,
    reflection_root: Vec<u32>,
    left_refl: Vec<u32>,
    longest: ElementId,
    absolute: OnceLock<Vec<u32>>,
}

impl CoxeterSystem {
    pub fn new(datum: CoxeterDatum) -> Result<Self> {
        Self::build(datum, DEFAULT_CAP)
    }

    pub fn build(datum: CoxeterDatum, cap: usize) -> Result<Self> {
        let order = datum.predicted_order().unwrap_or(u64::MAX);
        if order > cap as u64 {
            return Err(Error::CapExceeded { order, cap });
        }
        let (realization, simple_roots, reflection_perms) = match datum.cartan_matrix() {
            Some(cartan) => linear_roots(cartan),
            None => dihedral_roots(datum.dihedral_order().unwrap()),
        };
        let generator_perms: Vec<&Element> =
            simple_roots.iter().map(|&r| &reflection_perms[r]).collect();
        let npos = reflection_perms.len();
        let rank = simple_roots.len();

        // breadth-first enumeration by left multiplication with generators
        let mut elements = vec![Element::identity(npos)];
        let mut lookup: HashMap<Box<[u16]>, u32> = HashMap::new();
        lookup.insert(elements[0].perm().into(), 0);
        let mut word_depth = vec![0u32];
        let mut left_gen = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for s in &generator_perms {
                let y = s.compose(&elements[head]);
                let id = match lookup.get(y.perm()) {
                    Some(&id) => id,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::CapExceeded {
                                order: elements.len() as u64 + 1,
                                cap,
                            });
                        }
                        let id = elements.len() as u32;
                        lookup.insert(y.perm().into(), id);
                        word_depth.push(word_depth[head] + 1);
                        elements.push(y);
                        id
                    }
                };
                left_gen.push(id);
            }
            head += 1;
        }

        let find = |e: &Element| lookup[e.perm()];
        let right_gen = elements
            .iter()
            .flat_map(|x| generator_perms.iter().map(|s| find(&x.compose(s))))
            .collect();
        let inverse = elements.iter().map(|x| find(&x.inverse())).collect();
        let reflections: Vec<ElementId> = reflection_perms
            .iter()
            .map(|t| ElementId(find(t)))
            .collect();
        let mut reflection_root = vec![NONE; elements.len()];
        for (r, t) in reflections.iter().enumerate() {
            reflection_root[t.index()] = r as u32;
        }
        let left_refl = elements
            .iter()
            .flat_map(|x| reflection_perms.iter().map(|t| find(&t.compose(x))))
            .collect();
        let longest = elements
            .iter()
            .enumerate()
            .max_by_key(|(_, e)| e.length())
            .map(|(i, _)| ElementId(i as u32))
            .unwrap();
        debug_assert_eq!(left_gen.len(), elements.len() * rank);

        Ok(CoxeterSystem {
            datum,
            realization,
            simple_roots,
            elements,
            lookup,
            word_depth,
            left_gen,
            right_gen,
            inverse,
            reflections,
            reflection_root,
            left_refl,
            longest,
            absolute: OnceLock::new(),
        })
    }

    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn positive_root_count(&self) -> usize {
        self.reflections.len()
    }

    /// Positive root indices of the simple roots, in generator order.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple_roots
    }

    pub fn ids(&self) -> impl ExactSizeIterator<Item = ElementId> + Clone + '_ {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn element(&self, id: ElementId) -> &Element {
        &self.elements[id.index()]
    }

    pub fn id_of(&self, e: &Element) -> Option<ElementId> {
        self.lookup.get(e.perm()).map(|&i| ElementId(i))
    }

    pub fn id_from_index(&self, index: usize) -> Option<ElementId> {
        (index < self.elements.len()).then_some(ElementId(index as u32))
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn longest_element(&self) -> ElementId {
        self.longest
    }

    pub fn generator(&self, s: usize) -> ElementId {
        self.left_mul_generator(s, self.identity())
    }

    pub fn generators(&self) -> Vec<ElementId> {
        (0..self.rank()).map(|s| self.generator(s)).collect()
    }

    /// The reflection set `T`, indexed by positive root.
    pub fn reflections(&self) -> &[ElementId] {
        &self.reflections
    }

    pub fn reflection(&self, root: usize) -> ElementId {
        self.reflections[root]
    }

    /// Positive root of a reflection, `None` if `x` is not a reflection.
    pub fn root_of(&self, x: ElementId) -> Option<usize> {
        match self.reflection_root[x.index()] {
            NONE => None,
            r => Some(r as usize),
        }
    }

    pub fn is_reflection(&self, x: ElementId) -> bool {
        self.root_of(x).is_some()
    }

    pub fn multiply(&self, x: ElementId, y: ElementId) -> ElementId {
        let p = self.element(x).compose(self.element(y));
        self.id_of(&p).expect("group closed under multiplication")
    }

    pub fn inverse(&self, x: ElementId) -> ElementId {
        ElementId(self.inverse[x.index()])
    }

    /// `s · x` for the simple generator `s`.
    pub fn left_mul_generator(&self, s: usize, x: ElementId) -> ElementId {
        ElementId(self.left_gen[x.index() * self.rank() + s])
    }

    /// `x · s` for the simple generator `s`.
    pub fn right_mul_generator(&self, x: ElementId, s: usize) -> ElementId {
        ElementId(self.right_gen[x.index() * self.rank() + s])
    }

    /// `t · x` where `t` is the reflection of positive root `root`.
    pub fn left_mul_reflection(&self, root: usize, x: ElementId) -> ElementId {
        ElementId(self.left_refl[x.index() * self.positive_root_count() + root])
    }

    /// Coxeter length (cached inversion count).
    pub fn length(&self, x: ElementId) -> usize {
        self.element(x).length() as usize
    }

    /// Coxeter length as word distance from `e` in the generator Cayley graph.
    pub fn length_by_word_bfs(&self, x: ElementId) -> usize {
        self.word_depth[x.index()] as usize
    }

    pub fn is_left_descent(&self, s: usize, x: ElementId) -> bool {
        self.length(self.left_mul_generator(s, x)) < self.length(x)
    }

    pub fn evaluate(&self, word: &[usize]) -> Result<ElementId> {
        let mut x = self.identity();
        for &s in word.iter().rev() {
            if s >= self.rank() {
                return Err(Error::BadGenerator(s));
            }
            x = self.left_mul_generator(s, x);
        }
        Ok(x)
    }

    /// Reduced word obtained by always stripping the smallest-index left descent.
    pub fn reduced_word(&self, x: ElementId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(x));
        let mut cur = x;
        while cur != self.identity() {
            let s = (0..self.rank())
                .find(|&s| self.is_left_descent(s, cur))
                .expect("non-identity element has a left descent");
            word.push(s);
            cur = self.left_mul_generator(s, cur);
        }
        word
    }

    pub fn is_reduced_word(&self, x: ElementId, word: &[usize]) -> bool {
        word.len() == self.length(x) && self.evaluate(word).ok() == Some(x)
    }

    /// All reduced words of `x`, or [`Error::TooManyWords`] once more than
    /// `cap` have been found.
    pub fn enumerate_reduced_words(&self, x: ElementId, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.length(x));
        self.words_rec(x, &mut prefix, &mut out, cap)?;
        Ok(out)
    }

    fn words_rec(
        &self,
        x: ElementId,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if x == self.identity() {
            if out.len() == cap {
                return Err(Error::TooManyWords { cap });
            }
            out.push(prefix.clone());
            return Ok(());
        }
        for s in 0..self.rank() {
            if self.is_left_descent(s, x) {
                prefix.push(s);
                self.words_rec(self.left_mul_generator(s, x), prefix, out, cap)?;
                prefix.pop();
            }
        }
        Ok(())
    }

    /// A reduced word built by stripping uniformly chosen left descents.
    pub fn random_reduced_word<R: Rng + ?Sized>(&self, x: ElementId, rng: &mut R) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(x));
        let mut cur = x;
        while cur != self.identity() {
            let descents: Vec<usize> = (0..self.rank())
                .filter(|&s| self.is_left_descent(s, cur))
                .collect();
            let s = descents[rng.gen_range(0..descents.len())];
            word.push(s);
            cur = self.left_mul_generator(s, cur);
        }
        word
    }

    /// Ordered inversions `t_i = s_1⋯s_{i−1} s_i s_{i−1}⋯s_1` of a reduced word.
    ///
    /// The root of `t_i` is `s_1⋯s_{i−1}(α_{s_i})`.
    pub fn inversions(&self, x: ElementId, word: &[usize]) -> Result<Vec<Inversion>> {
        if !self.is_reduced_word(x, word) {
            return Err(Error::NotReduced(word.to_vec()));
        }
        let npos = self.positive_root_count();
        let mut prefix = self.identity();
        let mut out = Vec::with_capacity(word.len());
        for &s in word {
            let slot = self.element(prefix).apply(self.simple_roots[s]);
            debug_assert!(slot < npos, "reduced word yields positive roots");
            out.push(Inversion {
                reflection: self.reflections[slot],
                root: slot,
            });
            prefix = self.right_mul_generator(prefix, s);
        }
        Ok(out)
    }

    /// Left inversion set `{t ∈ T : ℓ(tx) < ℓ(x)}` as sorted root indices.
    pub fn inversion_roots(&self, x: ElementId) -> Vec<usize> {
        (0..self.positive_root_count())
            .filter(|&r| self.length(self.left_mul_reflection(r, x)) < self.length(x))
            .collect()
    }

    /// Reflection-Cayley-graph distances from `e`, computed once.
    pub fn absolute_lengths(&self) -> &[u32] {
        self.absolute.get_or_init(|| {
            let mut dist = vec![NONE; self.order()];
            dist[0] = 0;
            let mut queue = VecDeque::from([self.identity()]);
            while let Some(x) = queue.pop_front() {
                let d = dist[x.index()];
                for r in 0..self.positive_root_count() {
                    let y = self.left_mul_reflection(r, x);
                    if dist[y.index()] == NONE {
                        dist[y.index()] = d + 1;
                        queue.push_back(y);
                    }
                }
            }
            dist
        })
    }

    /// Absolute length by breadth-first search over `T`.
    pub fn absolute_length_bfs(&self, x: ElementId) -> usize {
        self.absolute_lengths()[x.index()] as usize
    }

    /// `ℓ′(x y⁻¹)`, the undirected reflection distance between `x` and `y`.
    pub fn reflection_distance(&self, x: ElementId, y: ElementId) -> usize {
        self.absolute_length_bfs(self.multiply(x, self.inverse(y)))
    }

    /// Coordinates of signed root slot `slot` (linear realisations only).
    pub fn root_vector(&self, slot: usize) -> Option<Vec<Scalar>> {
        let Realization::Linear { roots, .. } = &self.realization else {
            return None;
        };
        let n = roots.len();
        Some(if slot < n {
            roots[slot].clone()
        } else {
            roots[slot - n].iter().map(|&c| -c).collect()
        })
    }

    /// Matrix of `x` on the simple-root basis; column `j` is `x(α_j)`.
    pub fn representation_matrix(&self, x: ElementId) -> Option<Vec<Vec<Scalar>>> {
        let n = self.rank();
        let cols: Vec<Vec<Scalar>> = self
            .simple_roots
            .iter()
            .map(|&r| self.root_vector(self.element(x).apply(r)))
            .collect::<Option<_>>()?;
        Some(
            (0..n)
                .map(|i| (0..n).map(|j| cols[j][i]).collect())
                .collect(),
        )
    }

    /// Absolute length as `rank(I − x)` on the reflection representation.
    ///
    /// For `I2(m)` the dihedral rule is used: `e ↦ 0`, reflections `↦ 1`,
    /// nontrivial rotations `↦ 2`.
    pub fn absolute_length_carter(&self, x: ElementId) -> Result<usize> {
        match &self.realization {
            Realization::Dihedral { .. } => Ok(if x == self.identity() {
                0
            } else if self.is_reflection(x) {
                1
            } else {
                2
            }),
            Realization::Linear { .. } => {
                let mut m = self
                    .representation_matrix(x)
                    .ok_or(Error::UnsupportedRing)?;
                for (i, row) in m.iter_mut().enumerate() {
                    for (j, v) in row.iter_mut().enumerate() {
                        let id = if i == j { Scalar::ONE } else { Scalar::ZERO };
                        *v = id - *v;
                    }
                }
                Ok(scalar::rank(&m))
            }
        }
    }

    /// Dimension of the span of the given positive roots.
    pub fn root_rank(&self, roots: &[usize]) -> usize {
        match &self.realization {
            Realization::Dihedral { .. } => {
                let mut distinct = roots.to_vec();
                distinct.sort_unstable();
                distinct.dedup();
                distinct.len().min(2)
            }
            Realization::Linear { roots: coords, .. } => {
                let rows: Vec<Vec<Scalar>> = roots.iter().map(|&r| coords[r].clone()).collect();
                scalar::rank(&rows)
            }
        }
    }

    /// Whether the roots of the given reflections are linearly independent.
    ///
    /// # Panics
    /// If some element is not a reflection.
    pub fn independent_roots(&self, ts: &[ElementId]) -> bool {
        let roots: Vec<usize> = ts
            .iter()
            .map(|&t| self.root_of(t).expect("not a reflection"))
            .collect();
        self.root_rank(&roots) == roots.len()
    }
}

/// Closes the simple roots under simple reflections.
fn linear_roots(cartan: Vec<Vec<Scalar>>) -> (Realization, Vec<usize>, Vec<Element>) {
    let n = cartan.len();
    let reflect = |i: usize, v: &[Scalar]| -> Vec<Scalar> {
        let pairing = (0..n).fold(Scalar::ZERO, |acc, j| acc + cartan[i][j] * v[j]);
        let mut out = v.to_vec();
        out[i] = out[i] - pairing;
        out
    };
    let mut roots: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| Scalar::int((i == j) as i128)).collect())
        .collect();
    // parent[r] = (p, s) with root r = s(root p); simple roots have none
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut index: HashMap<Vec<Scalar>, usize> = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    let mut head = 0;
    while head < roots.len() {
        for s in 0..n {
            let v = reflect(s, &roots[head]);
            if v.iter().all(|c| c.is_nonnegative()) && !index.contains_key(&v) {
                index.insert(v.clone(), roots.len());
                parent.push(Some((head, s)));
                roots.push(v);
            }
        }
        head += 1;
    }
    let npos = roots.len();
    let slot = |v: &[Scalar]| -> usize {
        if let Some(&i) = index.get(v) {
            return i;
        }
        let neg: Vec<Scalar> = v.iter().map(|&c| -c).collect();
        index[&neg] + npos
    };
    let generators: Vec<Element> = (0..n)
        .map(|s| {
            let perm = (0..2 * npos)
                .map(|k| {
                    let v: Vec<Scalar> = if k < npos {
                        roots[k].clone()
                    } else {
                        roots[k - npos].iter().map(|&c| -c).collect()
                    };
                    slot(&reflect(s, &v)) as u16
                })
                .collect();
            Element::from_perm(perm)
        })
        .collect();
    let mut reflections: Vec<Element> = Vec::with_capacity(npos);
    for r in 0..npos {
        let t = match parent[r] {
            None => generators[r].clone(),
            Some((p, s)) => generators[s]
                .compose(&reflections[p])
                .compose(&generators[s]),
        };
        reflections.push(t);
    }
    (
        Realization::Linear { cartan, roots },
        (0..n).collect(),
        reflections,
    )
}

/// `I2(m)`: slot `k` (signed) is the direction `kπ/m`, and the reflection in
/// root `a` sends direction `k` to `2a + m − k (mod 2m)`.
fn dihedral_roots(m: u32) -> (Realization, Vec<usize>, Vec<Element>) {
    let m = m as usize;
    let reflections = (0..m)
        .map(|a| {
            Element::from_perm(
                (0..2 * m)
                    .map(|k| ((2 * a + 3 * m - k) % (2 * m)) as u16)
                    .collect(),
            )
        })
        .collect();
    (
        Realization::Dihedral { m: m as u32 },
        vec![0, m - 1],
        reflections,
    )
}
