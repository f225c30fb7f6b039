//! JSON helpers: single polygons and loops, and JSON-lines polygon corpora.

use std::io::{BufRead, Write};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Polygon;
use crate::loops::LegalLoop;

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let out = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    out.expect("library types serialize infallibly")
}

/// Parses `{"vertices": [[x, y], ...]}`; vertex order and orientation are free.
pub fn parse_polygon(text: &str) -> Result<Polygon> {
    from_json(text)
}

/// Parses `{"vectors": [[x, y], ...]}`.
pub fn parse_loop(text: &str) -> Result<LegalLoop> {
    from_json(text)
}

/// Reads a corpus: one polygon object per nonblank line.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Polygon>> {
    let mut out = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Io(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_polygon(&line).map_err(|e| Error::Parse(format!("line {}: {e}", n + 1)))?);
    }
    Ok(out)
}

pub fn write_corpus<W: Write>(mut writer: W, polygons: &[Polygon]) -> Result<()> {
    for p in polygons {
        writeln!(writer, "{}", to_json(p, false)).map_err(|e| Error::Io(e.to_string()))?;
    }
    Ok(())
}
