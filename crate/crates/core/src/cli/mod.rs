//! Command-line front end: `gen`, `classicalise`, `verify` and `render`.
//!
//! Each command is a plain function returning its exit code and writing to
//! the given streams, so the binary is a thin wrapper over [`run`].

pub mod document;
pub mod generate;
pub mod render;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::engine::classicalise;
use crate::error::Error;
use crate::oracle::verify_run;
use document::{read_json, to_json, write_text, Document, GeneratorParams, TraceDocument};

pub mod exit {
    pub const SUCCESS: u8 = 0;
    /// Verification failed, an output could not be written, or a budgeted
    /// run stopped before reaching a fixpoint.
    pub const FAILURE: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const SLACK_NOT_POSITIVE: u8 = 3;
    pub const INTERNAL: u8 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "swiss-cheese", version, about = "Classicalise Swiss cheeses and check the results")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a random cheese document with positive slack.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        discs: usize,
        #[arg(long, default_value_t = 0.1)]
        delta_min: f64,
        #[arg(long, default_value_t = 3.0)]
        outer_r: f64,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the merge/shrink iteration to a classical cheese and write the trace.
    Classicalise {
        input: PathBuf,
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Replay and check a trace document.
    Verify {
        trace: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render a cheese or trace document as SVG.
    Render {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match cli.command {
        Command::Gen {
            seed,
            discs,
            delta_min,
            outer_r,
            out: path,
        } => {
            let params = GeneratorParams {
                seed,
                discs,
                delta_min,
                outer_r,
            };
            cmd_gen(&params, path.as_deref(), out, err)
        }
        Command::Classicalise {
            input,
            trace,
            budget,
        } => cmd_classicalise(&input, &trace, budget, out, err),
        Command::Verify {
            trace,
            points,
            seed,
        } => cmd_verify(&trace, points, seed, out, err),
        Command::Render {
            input,
            output,
            width,
        } => cmd_render(&input, &output, width, err),
    }
}

pub fn cmd_gen(
    params: &GeneratorParams,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let doc = match generate::generate(params) {
        Ok(doc) => doc,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::PARSE;
        }
    };
    let text = to_json(&doc);
    match path {
        Some(path) => {
            if let Err(e) = write_text(path, &text) {
                let _ = writeln!(err, "error: {e}");
                return exit::FAILURE;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    exit::SUCCESS
}

pub fn cmd_classicalise(
    input: &Path,
    trace_path: &Path,
    budget: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let initial = match read_json::<document::CheeseDocument>(input).and_then(|d| d.to_assignment())
    {
        Ok(h) => h,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::PARSE;
        }
    };
    let run = match classicalise(&initial, budget) {
        Ok(run) => run,
        Err(e @ Error::SlackNotPositive { .. }) => {
            let _ = writeln!(err, "error: {e}");
            return exit::SLACK_NOT_POSITIVE;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::INTERNAL;
        }
    };

    if let Err(e) = write_text(trace_path, &to_json(&TraceDocument::from_run(&initial, &run))) {
        let _ = writeln!(err, "error: {e}");
        return exit::FAILURE;
    }
    let _ = writeln!(out, "delta_initial: {:?}", initial.delta().delta);
    let _ = writeln!(out, "delta_final: {:?}", run.final_assignment.delta().delta);
    let _ = writeln!(out, "steps: {}", run.steps);
    let _ = writeln!(out, "stabilised: {}", run.stabilised);

    // Per-step certificates only; sampling is left to `verify`.
    let report = verify_run(&run, &initial, 0, 0);
    if !report.passed() {
        let _ = writeln!(err, "internal invariant failure:\n{report}");
        return exit::INTERNAL;
    }
    if run.stabilised {
        exit::SUCCESS
    } else {
        exit::FAILURE
    }
}

pub fn cmd_verify(
    trace_path: &Path,
    points: usize,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let (initial, run) = match read_json::<TraceDocument>(trace_path).and_then(|t| t.to_run()) {
        Ok(parsed) => parsed,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::PARSE;
        }
    };
    let report = verify_run(&run, &initial, points, seed);
    let _ = writeln!(out, "{report}");
    if report.passed() {
        exit::SUCCESS
    } else {
        exit::FAILURE
    }
}

pub fn cmd_render(input: &Path, output: &Path, width: u32, err: &mut dyn Write) -> u8 {
    let frames = read_json::<Document>(input).and_then(|doc| match doc {
        Document::Trace(t) => t.frames(),
        Document::Cheese(c) => Ok(vec![c.to_cheese()?]),
    });
    let frames = match frames {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit::PARSE;
        }
    };
    if let Err(e) = write_text(output, &render::render_frames(&frames, width)) {
        let _ = writeln!(err, "error: {e}");
        return exit::FAILURE;
    }
    exit::SUCCESS
}
