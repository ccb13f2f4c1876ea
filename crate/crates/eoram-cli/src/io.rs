//! File loading, flavor detection, and deterministic JSON output.

use eoram_core::cert::{ColoringJson, HostJson, MatrixJson, WordJson};
use eoram_core::matrices::ZeroOneMatrix;
use eoram_core::paramwords::ParameterWord;
use eoram_core::ramsey::AnyGraph;
use eoram_core::{EdgeOrderedGraph, Error, Graph, Result, VertexOrderedGraph};
use std::path::{Path, PathBuf};

fn context(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::InvalidArgument(format!("{}: {e}", path.display()))
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| context(path, e))
}

/// Load a graph of any flavor, recognized by its fields.
pub fn load_any_graph(path: &Path) -> Result<AnyGraph> {
    let json: HostJson =
        serde_json::from_str(&read_text(path)?).map_err(|e| context(path, e))?;
    json.to_any()
}

pub fn load_eog(path: &Path) -> Result<EdgeOrderedGraph> {
    match load_any_graph(path)? {
        AnyGraph::EdgeOrdered(g) => Ok(g),
        other => Err(context(
            path,
            format!("expected an edge-ordered graph, found {}", other.kind_name()),
        )),
    }
}

pub fn load_vog(path: &Path) -> Result<VertexOrderedGraph> {
    match load_any_graph(path)? {
        AnyGraph::VertexOrdered(g) => Ok(g),
        other => Err(context(
            path,
            format!("expected a vertex-ordered graph, found {}", other.kind_name()),
        )),
    }
}

pub fn load_plain(path: &Path) -> Result<Graph> {
    match load_any_graph(path)? {
        AnyGraph::Plain(g) => Ok(g),
        other => Err(context(
            path,
            format!("expected a plain graph, found {}", other.kind_name()),
        )),
    }
}

pub fn load_coloring_json(path: &Path) -> Result<ColoringJson> {
    serde_json::from_str(&read_text(path)?).map_err(|e| context(path, e))
}

pub fn load_matrix(path: &Path) -> Result<ZeroOneMatrix> {
    let json: MatrixJson =
        serde_json::from_str(&read_text(path)?).map_err(|e| context(path, e))?;
    json.to_matrix()
}

pub fn load_word(path: &Path, relaxed: bool) -> Result<ParameterWord> {
    let json: WordJson =
        serde_json::from_str(&read_text(path)?).map_err(|e| context(path, e))?;
    json.to_word(relaxed)
}

/// Pretty-print a serializable value with a trailing newline.
pub fn to_json_text<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Write to the file when given, otherwise to stdout.
pub fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| context(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// The copy-hypergraph cache directory, taken from `EORAM_CACHE_DIR`.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os("EORAM_CACHE_DIR").map(PathBuf::from)
}

/// Parse `red`/`blue` or a number as a color.
pub fn parse_color(s: &str) -> Result<u8> {
    match s {
        "red" => Ok(eoram_core::RED),
        "blue" => Ok(eoram_core::BLUE),
        other => other
            .parse::<u8>()
            .map_err(|_| Error::InvalidArgument(format!("unknown color {other:?}"))),
    }
}
