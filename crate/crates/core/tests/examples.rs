//! Every example runs to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(merge_and_shrink, "merge_and_shrink.rs");
example!(nested_limits, "nested_limits.rs");
example!(classicalise_cheese, "classicalise_cheese.rs");
example!(random_batch, "random_batch.rs");
example!(allocation_maps, "allocation_maps.rs");
example!(render_trace, "render_trace.rs");
example!(tamper_detection, "tamper_detection.rs");

#[test]
fn geometry_examples_run() {
    merge_and_shrink::run_example().unwrap();
    nested_limits::run_example().unwrap();
}

#[test]
fn engine_examples_run() {
    classicalise_cheese::run_example().unwrap();
    random_batch::run_example().unwrap();
    allocation_maps::run_example().unwrap();
    tamper_detection::run_example().unwrap();
}

#[test]
fn render_example_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = render_trace::render_into(dir.path()).unwrap();
    let text = std::fs::read_to_string(svg).unwrap();
    assert!(text.matches("<g ").count() >= 2);
}
