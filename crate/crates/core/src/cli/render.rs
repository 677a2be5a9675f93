//! SVG 1.1 rendering of cheeses and traces.
//!
//! Each frame is one `<g>` holding the outer disc as a filled circle and each
//! removed disc as a white circle on top. Frames of a trace are laid out left
//! to right, all fitted to the first frame's outer disc with a 5% margin
//! (later outer discs only shrink inside it).

use std::fmt::Write;

use crate::cheese::SwissCheese;

const MARGIN: f64 = 0.05;
const CHEESE_FILL: &str = "#f3cf55";
const HOLE_FILL: &str = "#ffffff";
const STROKE: &str = "#7a5c12";

/// Render `frames` side by side, `width` pixels wide in total.
pub fn render_frames(frames: &[SwissCheese], width: u32) -> String {
    let mut svg = String::new();
    let Some(first) = frames.first() else {
        return svg;
    };
    let center = first.outer.center();
    let half = first.outer.radius() * (1.0 + MARGIN);
    let side = 2.0 * half;
    let total_w = side * frames.len() as f64;
    let height = (f64::from(width) * side / total_w).round().max(1.0) as u32;
    let stroke_width = side * 0.002;
    // Frame-local coordinates, y flipped so that +y points up.
    let to_local = |x: f64, y: f64| (x - (center.x - half), (center.y + half) - y);

    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {} {}">"#,
        num(total_w),
        num(side)
    );
    for (k, frame) in frames.iter().enumerate() {
        let _ = writeln!(
            svg,
            r#"<g id="frame-{k}" transform="translate({} 0)">"#,
            num(side * k as f64)
        );
        let (cx, cy) = to_local(frame.outer.center().x, frame.outer.center().y);
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="{}" fill="{CHEESE_FILL}" stroke="{STROKE}" stroke-width="{}"/>"#,
            num(cx),
            num(cy),
            num(frame.outer.radius()),
            num(stroke_width)
        );
        for d in &frame.discs {
            let (cx, cy) = to_local(d.center().x, d.center().y);
            let _ = writeln!(
                svg,
                r#"<circle cx="{}" cy="{}" r="{}" fill="{HOLE_FILL}" stroke="{STROKE}" stroke-width="{}"/>"#,
                num(cx),
                num(cy),
                num(d.radius()),
                num(stroke_width)
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    svg
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
