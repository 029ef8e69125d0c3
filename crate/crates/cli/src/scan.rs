use std::io::Write;

use anyhow::Result;
use rayon::prelude::*;

use coxarr::CoxeterSystem;

use crate::args::WordArgs;
use crate::record::{self, ScanRecord};

/// Records are computed in parallel but written in canonical index order.
pub fn run(
    sys: &CoxeterSystem,
    words: &WordArgs,
    jobs: usize,
    timing: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let ids: Vec<_> = sys.ids().collect();
    let records: Vec<ScanRecord> = pool.install(|| {
        ids.par_iter()
            .map(|&x| record::compute(sys, x, None, words, timing))
            .collect::<Result<_, _>>()
    })?;
    for r in &records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
