//! Exhaustive verification suites over a whole group.
//!
//! Each suite walks every element (or every pair) of a system and collects
//! human-readable violations instead of stopping at the first one.

use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::arrangement::InversionArrangement;
use crate::bruhat;
use crate::coxeter::{CoxeterSystem, ElementId, Kind};
use crate::error::{Error, Result};
use crate::typea::{self, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    WorkedExample,
    APrime,
    ThMain,
    Collection,
    Census,
    Rhombi,
    Corollary,
    Carter,
    LemmaPath,
    Oracle,
    Poset,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::WorkedExample,
        Suite::APrime,
        Suite::ThMain,
        Suite::Collection,
        Suite::Census,
        Suite::Rhombi,
        Suite::Corollary,
        Suite::Carter,
        Suite::LemmaPath,
        Suite::Oracle,
        Suite::Poset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WorkedExample => "worked-example",
            Suite::APrime => "a-prime",
            Suite::ThMain => "th-main",
            Suite::Collection => "collection",
            Suite::Census => "census",
            Suite::Rhombi => "rhombi",
            Suite::Corollary => "corollary",
            Suite::Carter => "carter",
            Suite::LemmaPath => "lemma-path",
            Suite::Oracle => "oracle",
            Suite::Poset => "poset",
        }
    }

    /// Suites that only make sense for symmetric groups.
    pub fn type_a_only(self) -> bool {
        matches!(self, Suite::WorkedExample | Suite::Collection)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Which reduced words to try where the answer should not depend on one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WordStrategy {
    #[default]
    Canonical,
    /// Every reduced word, falling back to sampling past the word cap.
    All,
    Sample,
}

impl FromStr for WordStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(WordStrategy::Canonical),
            "all" => Ok(WordStrategy::All),
            "sample" => Ok(WordStrategy::Sample),
            _ => Err(Error::Parse(format!("unknown word strategy `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub words: WordStrategy,
    pub seed: u64,
    /// Words drawn per element when sampling.
    pub samples: usize,
    pub word_cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            words: WordStrategy::Canonical,
            seed: 0,
            samples: 8,
            word_cap: 10_000,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    /// Number of elements, pairs or words examined.
    pub checked: usize,
    /// Cases out of reach of the exhaustive routines.
    pub skipped: usize,
    pub violations: Vec<String>,
    /// Informational lines, e.g. the failures listed by a census.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            name: suite.name().to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} skipped, {} violations)",
            self.name,
            if self.passed() { "pass" } else { "FAIL" },
            self.checked,
            self.skipped,
            self.violations.len()
        )
    }
}

/// One-line notation in type A, canonical index otherwise.
pub fn label(sys: &CoxeterSystem, x: ElementId) -> String {
    if sys.datum().kind() == Kind::A {
        typea::from_element(sys, x).to_string()
    } else {
        x.to_string()
    }
}

pub fn run(suite: Suite, sys: &CoxeterSystem, opts: &Options) -> Result<SuiteReport> {
    match suite {
        Suite::WorkedExample => worked_example(sys),
        Suite::APrime => Ok(a_prime(sys)),
        Suite::ThMain => Ok(th_main(sys)),
        Suite::Collection => collection(sys),
        Suite::Census => Ok(census(sys)),
        Suite::Rhombi => Ok(rhombi(sys)),
        Suite::Corollary => Ok(corollary(sys)),
        Suite::Carter => carter(sys),
        Suite::LemmaPath => Ok(lemma_path(sys)),
        Suite::Oracle => oracle(sys, opts),
        Suite::Poset => Ok(poset(sys)),
    }
}

fn require_s4(sys: &CoxeterSystem) -> Result<()> {
    let d = sys.datum();
    if d.kind() != Kind::A || d.rank() != 3 {
        return Err(Error::NotTypeA(3));
    }
    Ok(())
}

/// The permutation 3412 in `S_4`, checked against every stated number.
pub fn worked_example(sys: &CoxeterSystem) -> Result<SuiteReport> {
    require_s4(sys)?;
    let mut r = SuiteReport::new(Suite::WorkedExample);
    let el = |s: &str| typea::to_element(sys, &s.parse::<Permutation>().unwrap()).unwrap();
    let w = el("3412");
    let mut expect = |ok: bool, what: &str| {
        r.checked += 1;
        if !ok {
            r.violations.push(what.to_string());
        }
    };
    let arr = InversionArrangement::canonical(sys, w);
    let interval = bruhat::ideal(sys, w);
    expect(interval.len() == 14, "|[e,3412]| = 14");
    expect(arr.nbc_sets().map(|f| f.len()) == Ok(14), "#NBC = 14");
    expect(arr.region_count() == Ok(14), "regions = 14");
    let phi = arr.phi_check()?;
    expect(
        phi.well_defined && phi.injective && phi.surjective,
        "phi bijective",
    );
    let g = bruhat::bruhat_graph(sys, w);
    expect(
        g.non_covering_edges().count() == 2,
        "two non-covering edges",
    );
    expect(!bruhat::is_regular_bg(sys, w), "bg(3412) not regular");
    let rhombi = bruhat::broken_rhombi(sys, w);
    for (x, y, z) in [("2314", "1324", "1342"), ("1432", "1234", "2134")] {
        let found = rhombi.contains(&bruhat::BrokenRhombus {
            x: el(x),
            y: el(y),
            z: el(z),
        });
        expect(found, &format!("broken rhombus ({x},{y},{z})"));
    }
    expect(
        bruhat::distance_condition(sys, w),
        "distance condition for 3412",
    );
    Ok(r)
}

/// `φ` lands in `[e, w]` and is injective.
pub fn a_prime(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::APrime);
    for w in sys.ids() {
        match InversionArrangement::canonical(sys, w).phi_check() {
            Ok(c) => {
                r.checked += 1;
                if !c.well_defined {
                    r.violations
                        .push(format!("{}: image outside [e,w]", label(sys, w)));
                }
                if !c.injective {
                    r.violations
                        .push(format!("{}: phi not injective", label(sys, w)));
                }
            }
            Err(_) => r.skipped += 1,
        }
    }
    r
}

/// `φ` is onto exactly when `al(u, w) = ℓ′(uw⁻¹)` for all `u ≤ w`.
pub fn th_main(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::ThMain);
    for w in sys.ids() {
        let Ok(c) = InversionArrangement::canonical(sys, w).phi_check() else {
            r.skipped += 1;
            continue;
        };
        r.checked += 1;
        let dc = bruhat::distance_condition(sys, w);
        if c.surjective != dc {
            r.violations.push(format!(
                "{}: surjective={} distance_condition={dc}",
                label(sys, w),
                c.surjective
            ));
        }
    }
    r
}

/// Regions, right hull, patterns and distances agree on every permutation.
pub fn collection(sys: &CoxeterSystem) -> Result<SuiteReport> {
    if sys.datum().kind() != Kind::A {
        return Err(Error::NotTypeA(sys.rank()));
    }
    let mut r = SuiteReport::new(Suite::Collection);
    for w in Permutation::all(sys.rank() + 1) {
        let c = typea::check_collection(sys, &w)?;
        r.checked += 1;
        if !c.all_agree() {
            r.violations.push(format!("{w}: {c:?}"));
        }
    }
    Ok(r)
}

/// Counts elements with `#NBC = #[e, w]` and checks them against the region
/// count; the elements failing it are listed as notes.
pub fn census(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Census);
    let mut stars = 0;
    for w in sys.ids() {
        let arr = InversionArrangement::canonical(sys, w);
        let (Ok(nbc), Ok(regions)) = (arr.nbc_sets(), arr.region_count()) else {
            r.skipped += 1;
            continue;
        };
        r.checked += 1;
        if nbc.len() as u64 != regions {
            r.violations.push(format!(
                "{}: #NBC={} regions={regions}",
                label(sys, w),
                nbc.len()
            ));
        }
        if nbc.len() == bruhat::ideal(sys, w).len() {
            stars += 1;
        } else {
            r.notes.push(format!("fails (*): {}", label(sys, w)));
        }
    }
    r.notes
        .insert(0, format!("(*) holds for {stars} of {}", r.checked));
    r
}

/// No broken rhombi exactly when every vertex of `bg(w)` has degree `ℓ(w)`.
pub fn rhombi(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Rhombi);
    for w in sys.ids() {
        r.checked += 1;
        let regular = bruhat::is_regular_bg(sys, w);
        let none = !bruhat::has_broken_rhombus(sys, w);
        if regular != none {
            r.violations.push(format!(
                "{}: regular={regular} rhombus-free={none}",
                label(sys, w)
            ));
        }
    }
    r
}

/// Regular Bruhat graph implies `φ` onto.
pub fn corollary(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Corollary);
    for w in sys.ids() {
        if !bruhat::is_regular_bg(sys, w) {
            r.checked += 1;
            continue;
        }
        match InversionArrangement::canonical(sys, w).phi_check() {
            Ok(c) => {
                r.checked += 1;
                if !c.surjective {
                    r.violations
                        .push(format!("{}: regular but phi not onto", label(sys, w)));
                }
            }
            Err(_) => r.skipped += 1,
        }
    }
    r
}

/// Reflection BFS against `rank(I − w)`, and against `n − #cycles` in type A.
pub fn carter(sys: &CoxeterSystem) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Carter);
    let type_a = sys.datum().kind() == Kind::A;
    for w in sys.ids() {
        r.checked += 1;
        let bfs = sys.absolute_length_bfs(w);
        let rank = sys.absolute_length_carter(w)?;
        if bfs != rank {
            r.violations
                .push(format!("{}: bfs={bfs} carter={rank}", label(sys, w)));
        }
        if type_a {
            let cyc = typea::absolute_length_cycles(&typea::from_element(sys, w));
            if cyc != bfs {
                r.violations
                    .push(format!("{}: bfs={bfs} cycles={cyc}", label(sys, w)));
            }
        }
    }
    Ok(r)
}

/// A meeting point exists for every ordered pair, with the exact distance sum.
pub fn lemma_path(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::LemmaPath);
    let dist: Vec<Vec<Option<u32>>> = sys.ids().map(|w| bruhat::distances_to(sys, w)).collect();
    for u in sys.ids() {
        for w in sys.ids() {
            r.checked += 1;
            let pair = || format!("({}, {})", label(sys, u), label(sys, w));
            let mp = match bruhat::meet_point(sys, u, w) {
                Ok(mp) => mp,
                Err(e) => {
                    r.violations.push(format!("{}: {e}", pair()));
                    continue;
                }
            };
            let to_w = dist[w.index()][mp.v.index()];
            let to_u = dist[u.index()][mp.v.index()];
            let ok = to_w == Some(mp.to_w as u32)
                && to_u == Some(mp.to_u as u32)
                && mp.to_w + mp.to_u == sys.reflection_distance(u, w);
            if !ok {
                r.violations.push(format!(
                    "{}: bad meeting point {}",
                    pair(),
                    label(sys, mp.v)
                ));
            }
        }
    }
    r
}

/// `#NBC` against the Whitney region count, and its independence of the
/// reduced word.
pub fn oracle(sys: &CoxeterSystem, opts: &Options) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Oracle);
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for w in sys.ids() {
        let arr = InversionArrangement::canonical(sys, w);
        let (Ok(nbc), Ok(regions)) = (arr.nbc_sets(), arr.region_count()) else {
            r.skipped += 1;
            continue;
        };
        r.checked += 1;
        if nbc.len() as u64 != regions {
            r.violations.push(format!(
                "{}: #NBC={} regions={regions}",
                label(sys, w),
                nbc.len()
            ));
        }
        let words = match opts.words {
            WordStrategy::Canonical => Vec::new(),
            WordStrategy::All => match sys.enumerate_reduced_words(w, opts.word_cap) {
                Ok(words) => words,
                Err(Error::TooManyWords { .. }) => (0..opts.samples)
                    .map(|_| sys.random_reduced_word(w, &mut rng))
                    .collect(),
                Err(e) => return Err(e),
            },
            WordStrategy::Sample => (0..opts.samples)
                .map(|_| sys.random_reduced_word(w, &mut rng))
                .collect(),
        };
        for word in words {
            r.checked += 1;
            let count = InversionArrangement::new(sys, w, word.clone())?
                .nbc_sets()?
                .len();
            if count != nbc.len() {
                r.violations.push(format!(
                    "{}: word {word:?} gives #NBC={count}, canonical {}",
                    label(sys, w),
                    nbc.len()
                ));
            }
        }
    }
    Ok(r)
}

/// Graded Hasse diagram of `[e, w]` on local indices.
struct Hasse {
    level: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Hasse {
    fn new(sys: &CoxeterSystem, w: ElementId) -> Self {
        let g = bruhat::bruhat_graph(sys, w);
        let iv = g.interval();
        let n = iv.len();
        let level = iv.members().iter().map(|&u| sys.length(u)).collect();
        let (mut up, mut down) = (vec![Vec::new(); n], vec![Vec::new(); n]);
        for e in g.covering_edges() {
            let (a, b) = (iv.position(e.from).unwrap(), iv.position(e.to).unwrap());
            up[a].push(b);
            down[b].push(a);
        }
        Hasse { level, up, down }
    }

    fn signature(&self) -> Vec<(usize, usize, usize)> {
        let mut s: Vec<_> = (0..self.level.len())
            .map(|i| (self.level[i], self.up[i].len(), self.down[i].len()))
            .collect();
        s.sort_unstable();
        s
    }

    fn isomorphic(&self, other: &Hasse) -> bool {
        if self.signature() != other.signature() {
            return false;
        }
        let n = self.level.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.level[i]);
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(other, &order, 0, &mut map, &mut used)
    }

    fn extend(
        &self,
        other: &Hasse,
        order: &[usize],
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&a) = order.get(k) else {
            return true;
        };
        for b in 0..map.len() {
            if used[b]
                || other.level[b] != self.level[a]
                || other.up[b].len() != self.up[a].len()
                || other.down[b].len() != self.down[a].len()
            {
                continue;
            }
            // everything below `a` is already mapped
            let mut image: Vec<usize> = self.down[a].iter().map(|&d| map[d]).collect();
            image.sort_unstable();
            let mut target = other.down[b].clone();
            target.sort_unstable();
            if image != target {
                continue;
            }
            map[a] = b;
            used[b] = true;
            if self.extend(other, order, k + 1, map, used) {
                return true;
            }
            used[b] = false;
            map[a] = usize::MAX;
        }
        false
    }
}

/// Isomorphic intervals `[e, u] ≅ [e, w]` agree on whether `φ` is onto.
pub fn poset(sys: &CoxeterSystem) -> SuiteReport {
    let mut r = SuiteReport::new(Suite::Poset);
    let data: Vec<(ElementId, Hasse, Option<bool>)> = sys
        .ids()
        .map(|w| {
            let onto = InversionArrangement::canonical(sys, w)
                .phi_check()
                .ok()
                .map(|c| c.surjective);
            (w, Hasse::new(sys, w), onto)
        })
        .collect();
    for (i, (u, hu, su)) in data.iter().enumerate() {
        for (w, hw, sw) in &data[i + 1..] {
            let (Some(su), Some(sw)) = (su, sw) else {
                r.skipped += 1;
                continue;
            };
            if !hu.isomorphic(hw) {
                continue;
            }
            r.checked += 1;
            if su != sw {
                r.violations.push(format!(
                    "[e,{}] and [e,{}] are isomorphic but differ",
                    label(sys, *u),
                    label(sys, *w)
                ));
            }
        }
    }
    r
}
