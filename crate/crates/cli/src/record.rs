use std::time::Instant;

use serde::Serialize;

use coxarr::bruhat;
use coxarr::typea;
use coxarr::{CoxeterSystem, ElementId, Error, InversionArrangement, Kind};

use crate::args::{one_based, WordArgs, WordChoice};

/// Reduced words enumerated per element before falling back to sampling.
const WORD_CAP: usize = 10_000;
const FALLBACK_SAMPLES: usize = 8;

/// One line of `scan` output.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub group: String,
    pub index: usize,
    /// One-line notation in type A, otherwise the canonical word.
    pub element: String,
    /// Reduced word (1-based generators) ordering the arrangement.
    pub word: Vec<usize>,
    pub length: usize,
    pub absolute_length: usize,
    pub interval_size: usize,
    /// `null` when the arrangement is too large to enumerate.
    pub nbc: Option<usize>,
    pub regions: Option<u64>,
    pub star: Option<bool>,
    pub distance_cond: bool,
    pub regular_bg: bool,
    pub has_rhombus: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_hull: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub avoids_patterns: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nbc_word_invariant: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

pub fn element_name(sys: &CoxeterSystem, x: ElementId) -> String {
    if sys.datum().kind() == Kind::A {
        return typea::from_element(sys, x).to_string();
    }
    let word = sys.reduced_word(x);
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|s| format!("s{}", s + 1)).collect()
    }
}

pub fn compute(
    sys: &CoxeterSystem,
    x: ElementId,
    word: Option<Vec<usize>>,
    words: &WordArgs,
    timing: bool,
) -> Result<ScanRecord, Error> {
    let start = Instant::now();
    let word = word.unwrap_or_else(|| words.word_for(sys, x));
    let arr = InversionArrangement::new(sys, x, word.clone())?;
    let interval = bruhat::ideal(sys, x);
    let nbc = optional(arr.nbc_sets().map(|f| f.len()))?;
    let regions = optional(arr.region_count())?;
    let (words_checked, nbc_word_invariant) = match (words.word_strategy, nbc) {
        (WordChoice::All, Some(n)) => {
            let all = match sys.enumerate_reduced_words(x, WORD_CAP) {
                Ok(all) => all,
                Err(Error::TooManyWords { .. }) => {
                    let mut rng = words.rng_for(x);
                    (0..FALLBACK_SAMPLES)
                        .map(|_| sys.random_reduced_word(x, &mut rng))
                        .collect()
                }
                Err(e) => return Err(e),
            };
            let mut same = true;
            for w in &all {
                same &= InversionArrangement::new(sys, x, w.clone())?
                    .nbc_sets()?
                    .len()
                    == n;
            }
            (Some(all.len()), Some(same))
        }
        _ => (None, None),
    };
    let perm = (sys.datum().kind() == Kind::A).then(|| typea::from_element(sys, x));
    let mut rec = ScanRecord {
        group: sys.datum().to_string(),
        index: x.index(),
        element: element_name(sys, x),
        word: one_based(&word),
        length: sys.length(x),
        absolute_length: sys.absolute_length_bfs(x),
        interval_size: interval.len(),
        nbc,
        regions,
        star: nbc.map(|n| n == interval.len()),
        distance_cond: bruhat::distance_condition(sys, x),
        regular_bg: bruhat::is_regular_bg(sys, x),
        has_rhombus: bruhat::has_broken_rhombus(sys, x),
        right_hull: perm.as_ref().map(typea::has_right_hull_property),
        avoids_patterns: perm.as_ref().map(typea::avoids_forbidden_patterns),
        words_checked,
        nbc_word_invariant,
        micros: None,
    };
    if timing {
        rec.micros = Some(start.elapsed().as_micros() as u64);
    }
    Ok(rec)
}

fn optional<T>(r: Result<T, Error>) -> Result<Option<T>, Error> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::TooManyHyperplanes { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
