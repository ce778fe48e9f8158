use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use crate::quad::QuadGraph;

/// The interchange format used by every CLI verb:
/// `{ "p": <int>, "rotations": [[<int>...], ...], "labels": {"<id>": "<str>"}?, "parts": [[<int>...],[<int>...]]? }`
/// where rotations[i] lists the neighbours of vertex i in counterclockwise
/// order. Output is a single compact line; label keys appear in numeric
/// order.
pub fn to_json(g: &PlaneGraph) -> String {
    render(g, None)
}

/// Like `to_json`, with the quadrangulation's two parts attached.
pub fn quad_to_json(r: &QuadGraph) -> String {
    render(r.graph(), Some([r.part(0), r.part(1)]))
}

fn render(g: &PlaneGraph, parts: Option<[Vec<usize>; 2]>) -> String {
    let mut obj = Map::new();
    obj.insert("p".into(), json!(g.vertex_count()));
    obj.insert("rotations".into(), json!(g.rotations()));
    if !g.labels().is_empty() {
        let mut labels = Map::new();
        for (&v, l) in g.labels() {
            labels.insert(v.to_string(), json!(l));
        }
        obj.insert("labels".into(), Value::Object(labels));
    }
    if let Some(parts) = parts {
        obj.insert("parts".into(), json!(parts));
    }
    Value::Object(obj).to_string()
}

#[derive(Deserialize)]
struct RawGraph {
    p: usize,
    rotations: Vec<Vec<usize>>,
    #[serde(default)]
    labels: BTreeMap<String, String>,
    #[serde(default)]
    parts: Option<[Vec<usize>; 2]>,
}

/// Parses a graph record; returns the validated graph and the parts array
/// when one was present.
pub fn from_json(s: &str) -> Result<(PlaneGraph, Option<[Vec<usize>; 2]>)> {
    let raw: RawGraph =
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
    if raw.p != raw.rotations.len() {
        return Err(Error::Format(format!(
            "p = {} but {} rotation lists",
            raw.p,
            raw.rotations.len()
        )));
    }
    let mut labels = BTreeMap::new();
    for (k, v) in raw.labels {
        let id: usize = k
            .parse()
            .map_err(|_| Error::Format(format!("label key {k:?} is not a vertex id")))?;
        labels.insert(id, v);
    }
    let g = PlaneGraph::build_labeled(raw.rotations, labels)?;
    Ok((g, raw.parts))
}

/// Reads a quadrangulation: parts are taken from the file when present and
/// recomputed from the bipartition otherwise.
pub fn quad_from_json(s: &str) -> Result<QuadGraph> {
    let (g, parts) = from_json(s)?;
    match parts {
        Some([a, b]) => {
            let mut side = vec![u8::MAX; g.vertex_count()];
            for &v in &a {
                if v >= g.vertex_count() {
                    return Err(Error::Format(format!("part vertex {v} out of range")));
                }
                side[v] = 0;
            }
            for &v in &b {
                if v >= g.vertex_count() {
                    return Err(Error::Format(format!("part vertex {v} out of range")));
                }
                side[v] = 1;
            }
            if side.iter().any(|&s| s == u8::MAX) {
                return Err(Error::Format("parts do not cover all vertices".into()));
            }
            QuadGraph::with_sides(g, side)
        }
        None => QuadGraph::new(g),
    }
}

/// Adjacency-only DOT text, one line per edge; face walks appended as
/// comments on request.
pub fn to_dot(g: &PlaneGraph, with_faces: bool) -> String {
    let mut out = String::from("graph {\n");
    for (&v, l) in g.labels() {
        out.push_str(&format!("  {v} [label=\"{l}\"];\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    if with_faces {
        for (i, walk) in g.faces().iter().enumerate() {
            let words: Vec<String> = walk.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("  // face {i}: {}\n", words.join(" ")));
        }
    }
    out.push_str("}\n");
    out
}
