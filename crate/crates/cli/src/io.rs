use std::fs;
use std::path::Path;

use holefree_core::format::{parse_graph, Format};
use holefree_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {err}")]
    Read { path: String, err: std::io::Error },
    #[error("{path}: {err}")]
    Parse { path: String, err: holefree_core::ParseError },
}

/// Format from the extension: `.g6` is graph6, `.txt`, `.el` and `.edges` are
/// edge lists. Anything else is sniffed: a leading `n ` means an edge list.
pub fn detect_format(path: &Path, bytes: &[u8]) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::Graph6,
        Some("txt" | "el" | "edges") => Format::EdgeList,
        _ => {
            let head = bytes.iter().skip_while(|b| b.is_ascii_whitespace());
            if head.take(2).copied().collect::<Vec<u8>>() == b"n " {
                Format::EdgeList
            } else {
                Format::Graph6
            }
        }
    }
}

pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, InputError> {
    let name = path.display().to_string();
    let bytes = fs::read(path).map_err(|err| InputError::Read { path: name.clone(), err })?;
    let format = format.unwrap_or_else(|| detect_format(path, &bytes));
    parse_graph(&bytes, format).map_err(|err| InputError::Parse { path: name, err })
}
