use std::io::Write;

use anyhow::{bail, Result};

use coxarr::verify::{self, Options, Suite};
use coxarr::{CoxeterDatum, CoxeterSystem, Kind};

use crate::args::{GroupArgs, WordArgs};
use crate::Status;

/// Violations printed per suite; the count is always exact.
const SHOW_VIOLATIONS: usize = 20;

fn fits(suite: Suite, sys: &CoxeterSystem) -> bool {
    let d = sys.datum();
    match suite {
        Suite::WorkedExample => d.kind() == Kind::A && d.rank() == 3,
        Suite::Collection => d.kind() == Kind::A,
        _ => true,
    }
}

pub fn run(
    names: &[String],
    group: &GroupArgs,
    words: &WordArgs,
    samples: usize,
    out: &mut dyn Write,
) -> Result<Status> {
    let all = names.iter().any(|n| n == "all");
    let mut suites: Vec<Suite> = if all {
        Suite::ALL.to_vec()
    } else {
        names.iter().map(|n| n.parse()).collect::<Result<_, _>>()?
    };
    suites.dedup();
    let sys = if group.is_given() {
        group.build()?
    } else if suites == [Suite::WorkedExample] {
        CoxeterSystem::build(CoxeterDatum::a(3), group.cap)?
    } else {
        bail!("a group is required: pass --type (and --rank) or --n");
    };
    if all {
        suites.retain(|&s| fits(s, &sys));
    } else if let Some(s) = suites.iter().find(|&&s| !fits(s, &sys)) {
        bail!("suite {s} does not apply to {}", sys.datum());
    }
    let opts = Options {
        words: words.word_strategy.into(),
        seed: words.seed,
        samples,
        ..Options::default()
    };
    let mut failed = false;
    for suite in suites {
        let report = verify::run(suite, &sys, &opts)?;
        writeln!(out, "{} {report}", sys.datum())?;
        for note in &report.notes {
            writeln!(out, "  {note}")?;
        }
        for v in report.violations.iter().take(SHOW_VIOLATIONS) {
            writeln!(out, "  violation: {v}")?;
        }
        if report.violations.len() > SHOW_VIOLATIONS {
            writeln!(
                out,
                "  ... {} more",
                report.violations.len() - SHOW_VIOLATIONS
            )?;
        }
        failed |= !report.passed();
    }
    Ok(if failed {
        Status::VerificationFailed
    } else {
        Status::Ok
    })
}
