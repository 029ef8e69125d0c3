use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;

use coxarr::typea::{self, Permutation};
use coxarr::verify::WordStrategy;
use coxarr::{CoxeterDatum, CoxeterSystem, ElementId, Error, Kind, DEFAULT_CAP};

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Family: A, B (or C), D, E, F, G, H or I2.
    #[arg(long = "type", value_name = "TYPE")]
    pub kind: Option<String>,
    /// Number of simple reflections; may be omitted for G, F and I2.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Dihedral order for I2.
    #[arg(long)]
    pub m: Option<u32>,
    /// The symmetric group S_n, i.e. type A of rank n-1.
    #[arg(long, conflicts_with_all = ["kind", "rank", "m"])]
    pub n: Option<usize>,
    /// Refuse to build groups with more elements than this.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

impl GroupArgs {
    pub fn is_given(&self) -> bool {
        self.kind.is_some() || self.n.is_some()
    }

    pub fn datum(&self) -> Result<CoxeterDatum> {
        if let Some(n) = self.n {
            if n < 2 {
                bail!("--n must be at least 2");
            }
            return Ok(CoxeterDatum::a(n - 1));
        }
        let kind: Kind = self
            .kind
            .as_deref()
            .ok_or_else(|| anyhow!("a group is required: pass --type (and --rank) or --n"))?
            .parse()?;
        let rank = match (kind, self.rank) {
            (_, Some(r)) => r,
            (Kind::G | Kind::I2, None) => 2,
            (Kind::F, None) => 4,
            _ => bail!("--rank is required for type {kind:?}"),
        };
        Ok(CoxeterDatum::new(kind, rank, self.m)?)
    }

    pub fn build(&self) -> Result<CoxeterSystem> {
        let d = self.datum()?;
        CoxeterSystem::build(d, self.cap).with_context(|| format!("building {d}"))
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum WordChoice {
    /// The lexicographically first reduced word (smallest left descent first).
    #[default]
    Canonical,
    /// Every reduced word; the record flags whether #NBC is invariant.
    All,
    /// A seeded random reduced word.
    Sample,
}

impl From<WordChoice> for WordStrategy {
    fn from(w: WordChoice) -> Self {
        match w {
            WordChoice::Canonical => WordStrategy::Canonical,
            WordChoice::All => WordStrategy::All,
            WordChoice::Sample => WordStrategy::Sample,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct WordArgs {
    /// Which reduced word orders the inversion arrangement.
    #[arg(long, value_enum, default_value_t = WordChoice::Canonical)]
    pub word_strategy: WordChoice,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl WordArgs {
    /// A deterministic per-element generator, independent of scheduling.
    pub fn rng_for(&self, x: ElementId) -> StdRng {
        StdRng::seed_from_u64(self.seed ^ (x.index() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    pub fn word_for(&self, sys: &CoxeterSystem, x: ElementId) -> Vec<usize> {
        match self.word_strategy {
            WordChoice::Sample => sys.random_reduced_word(x, &mut self.rng_for(x)),
            _ => sys.reduced_word(x),
        }
    }
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct ElementSpec {
    /// One-line notation, e.g. 3412 or 10,1,2,...; type A only.
    #[arg(long)]
    pub perm: Option<String>,
    /// Word in the simple generators, 1-based, e.g. 2,1,3,2; `e` for the identity.
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Canonical element index, as printed by `scan`.
    #[arg(long)]
    pub index: Option<usize>,
}

/// A chosen element, plus the reduced word the user supplied if any.
pub struct Resolved {
    pub id: ElementId,
    pub word: Option<Vec<usize>>,
}

impl ElementSpec {
    pub fn resolve(&self, sys: &CoxeterSystem) -> Result<Resolved> {
        if let Some(p) = &self.perm {
            if sys.datum().kind() != Kind::A {
                bail!("--perm needs a type A group");
            }
            let perm: Permutation = p.parse()?;
            let id = typea::to_element(sys, &perm).map_err(|e| match e {
                Error::NotTypeA(_) => anyhow!(
                    "{perm} has {} letters but {} permutes {}",
                    perm.n(),
                    sys.datum(),
                    sys.rank() + 1
                ),
                e => e.into(),
            })?;
            return Ok(Resolved { id, word: None });
        }
        if let Some(w) = &self.word {
            let word = parse_word(w)?;
            let id = sys.evaluate(&word)?;
            let word = sys.is_reduced_word(id, &word).then_some(word);
            return Ok(Resolved { id, word });
        }
        let index = self.index.expect("clap enforces one element spec");
        let id = sys
            .id_from_index(index)
            .ok_or_else(|| anyhow!("index {index} out of range (group order {})", sys.order()))?;
        Ok(Resolved { id, word: None })
    }
}

/// Parses a 1-based generator list into 0-based indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let g: usize = t
                .trim_start_matches('s')
                .parse()
                .with_context(|| format!("bad generator `{t}`"))?;
            g.checked_sub(1)
                .ok_or_else(|| anyhow!("generators are numbered from 1"))
        })
        .collect()
}

pub fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|s| s + 1).collect()
}
