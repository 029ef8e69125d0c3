use std::io::Write;

use anyhow::Result;
use serde_json::{json, Value};

use coxarr::bruhat;
use coxarr::{CoxeterSystem, InversionArrangement};

use crate::args::{one_based, Resolved, WordArgs};
use crate::record::{self, element_name};

pub struct Show {
    pub rhombi: bool,
    pub phi: bool,
    pub json: bool,
}

pub fn run(
    sys: &CoxeterSystem,
    el: Resolved,
    words: &WordArgs,
    show: Show,
    out: &mut dyn Write,
) -> Result<()> {
    let x = el.id;
    let word = el.word.unwrap_or_else(|| words.word_for(sys, x));
    let rec = record::compute(sys, x, Some(word.clone()), words, false)?;
    let name = |y| element_name(sys, y);
    let rhombi: Option<Vec<[String; 3]>> = show.rhombi.then(|| {
        bruhat::broken_rhombi(sys, x)
            .iter()
            .map(|r| [name(r.x), name(r.y), name(r.z)])
            .collect()
    });
    let phi: Option<Vec<(Vec<usize>, String)>> = if show.phi {
        let arr = InversionArrangement::new(sys, x, word)?;
        let family = arr.nbc_sets()?;
        Some(
            arr.phi_table(&family)
                .into_iter()
                .map(|(set, y)| (one_based(&set), name(y)))
                .collect(),
        )
    } else {
        None
    };

    if show.json {
        let mut v = serde_json::to_value(&rec)?;
        if let Some(r) = &rhombi {
            v["rhombi"] = json!(r);
        }
        if let Some(p) = &phi {
            v["phi"] = Value::Array(
                p.iter()
                    .map(|(set, y)| json!({ "positions": set, "image": y }))
                    .collect(),
            );
        }
        serde_json::to_writer(&mut *out, &v)?;
        writeln!(out)?;
        return Ok(());
    }

    let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a (too many hyperplanes)".into());
    let word_text = if rec.word.is_empty() {
        "(empty)".to_string()
    } else {
        join(&rec.word, " ")
    };
    let mut rows = vec![
        ("element", rec.element.clone()),
        ("group", rec.group.clone()),
        ("index", rec.index.to_string()),
        ("word", word_text.clone()),
        ("length", rec.length.to_string()),
        ("absolute length", rec.absolute_length.to_string()),
        ("interval size", rec.interval_size.to_string()),
        ("nbc sets", opt(rec.nbc.map(|n| n.to_string()))),
        ("regions", opt(rec.regions.map(|n| n.to_string()))),
        ("star", opt(rec.star.map(|b| b.to_string()))),
        ("distance condition", rec.distance_cond.to_string()),
        ("regular graph", rec.regular_bg.to_string()),
        ("broken rhombus", rec.has_rhombus.to_string()),
    ];
    if let Some(b) = rec.right_hull {
        rows.push(("right hull property", b.to_string()));
    }
    if let Some(b) = rec.avoids_patterns {
        rows.push(("avoids patterns", b.to_string()));
    }
    if let (Some(n), Some(b)) = (rec.words_checked, rec.nbc_word_invariant) {
        rows.push(("nbc word-invariant", format!("{b} ({n} words)")));
    }
    for (k, v) in rows {
        writeln!(out, "{k:<20}{v}")?;
    }
    if let Some(r) = rhombi {
        writeln!(out, "\nbroken rhombi ({}):", r.len())?;
        for [a, b, c] in r {
            writeln!(out, "  ({a}, {b}, {c})")?;
        }
    }
    if let Some(p) = phi {
        writeln!(
            out,
            "\nphi, positions in word {word_text} ({} sets):",
            p.len()
        )?;
        for (set, y) in p {
            writeln!(out, "  {{{}}} -> {y}", join(&set, ","))?;
        }
    }
    Ok(())
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
