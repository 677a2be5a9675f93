// Save a run as a trace document and render its frames to SVG.
//
// Run with `cargo run --example render_trace -- out_dir`; files go to the
// system temp directory when no directory is given.

use std::path::{Path, PathBuf};

use swiss_cheese::cli::document::{read_json, to_json, write_text, TraceDocument};
use swiss_cheese::cli::render::render_frames;
use swiss_cheese::{classicalise, ClosedDisc, DiscAssignment, OpenDisc};

pub fn render_into(dir: &Path) -> swiss_cheese::Result<PathBuf> {
    let initial = DiscAssignment::new(
        ClosedDisc::at(0.0, 0.0, 5.0)?,
        [
            (1, OpenDisc::at(0.0, 0.0, 1.0)?),
            (2, OpenDisc::at(1.5, 0.0, 1.0)?),
            (3, OpenDisc::at(3.0, 0.0, 1.0)?),
            (4, OpenDisc::at(-2.0, 3.5, 0.6)?),
        ],
    )?;
    let run = classicalise(&initial, None)?;

    let trace_path = dir.join("trace.json");
    write_text(&trace_path, &to_json(&TraceDocument::from_run(&initial, &run)))?;
    let doc: TraceDocument = read_json(&trace_path)?;
    let frames = doc.frames()?;

    let svg_path = dir.join("trace.svg");
    write_text(&svg_path, &render_frames(&frames, 320 * frames.len() as u32))?;
    println!("{} frames written to {}", frames.len(), svg_path.display());
    Ok(svg_path)
}

pub fn run_example() -> swiss_cheese::Result<()> {
    render_into(&std::env::temp_dir()).map(|_| ())
}

fn main() -> swiss_cheese::Result<()> {
    let dir = std::env::args().nth(1).map_or_else(std::env::temp_dir, PathBuf::from);
    render_into(&dir).map(|_| ())
}
