//! Benchmark inputs.

use std::path::PathBuf;

use grobfan::io::{parse_input, InputDocument};

/// Parses `data/<name>` from the workspace root.
pub fn load(name: &str) -> InputDocument {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_input(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
