mod args;
mod dot;
mod element;
mod record;
mod scan;
mod suites;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use args::{ElementSpec, GroupArgs, WordArgs};

#[derive(Parser)]
#[command(
    version,
    about = "Bruhat intervals and inversion arrangements of finite Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One JSON record per group element, in canonical order.
    Scan {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        words: WordArgs,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Add per-element wall-clock time (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report on a single element.
    Element {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        spec: ElementSpec,
        #[command(flatten)]
        words: WordArgs,
        /// List the broken rhombi of [e, w].
        #[arg(long)]
        rhombi: bool,
        /// Print the NBC sets and their images.
        #[arg(long)]
        phi: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Bruhat graph of [e, w] in DOT.
    Graph {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        spec: ElementSpec,
        /// Output file; stdout when absent.
        #[arg(long, alias = "out")]
        dot: Option<PathBuf>,
    },
    /// Run verification suites over a whole group.
    Verify {
        /// Suite name, repeatable; `all` runs every suite that fits the group.
        #[arg(long = "suite", required = true)]
        suites: Vec<String>,
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        words: WordArgs,
        /// Random words per element for `--word-strategy sample`.
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// How a command ended, short of an error.
pub enum Status {
    Ok,
    VerificationFailed,
}

fn output(path: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Scan {
            group,
            words,
            jobs,
            timing,
            out,
        } => {
            let sys = group.build()?;
            let mut w = output(out.as_ref())?;
            scan::run(&sys, &words, jobs, timing, &mut w)?;
            w.flush()?;
            Ok(Status::Ok)
        }
        Command::Element {
            group,
            spec,
            words,
            rhombi,
            phi,
            json,
            out,
        } => {
            let sys = group.build()?;
            let el = spec.resolve(&sys)?;
            let mut w = output(out.as_ref())?;
            let opts = element::Show { rhombi, phi, json };
            element::run(&sys, el, &words, opts, &mut w)?;
            w.flush()?;
            Ok(Status::Ok)
        }
        Command::Graph { group, spec, dot } => {
            let sys = group.build()?;
            let el = spec.resolve(&sys)?;
            let mut w = output(dot.as_ref())?;
            dot::write(&sys, el.id, &mut w)?;
            w.flush()?;
            Ok(Status::Ok)
        }
        Command::Verify {
            suites,
            group,
            words,
            samples,
            out,
        } => {
            let mut w = output(out.as_ref())?;
            let status = suites::run(&suites, &group, &words, samples, &mut w)?;
            w.flush()?;
            Ok(status)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
