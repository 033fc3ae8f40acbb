//! File formats: graphs (JSON or graph6), capacity maps, list assignments,
//! certificates (JSONL), embeddings, orientations and the planar round
//! ledger.
//!
//! Vertices are always referred to by their string id. Numeric ids in JSON
//! are accepted and turned into strings.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use weakstar_core::alon_tarsi::{AtError, Orientation};
use weakstar_core::calculus::Op;
use weakstar_core::colouring::ListAssignment;
use weakstar_core::graph6;
use weakstar_core::planar::{Embedding, EmbeddingError, PlanarCertificate};
use weakstar_core::{CapMap, Graph, GraphError, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{what}: {source}")]
    Json { what: String, source: serde_json::Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex id must be a string or an integer, got {0}")]
    BadId(Value),
    #[error("bad capacity spec {0:?}: expected const:k, deg, trunc:k or file:PATH")]
    CapsSpec(String),
    #[error("capacity file gives {got} of {n} vertices")]
    CapsIncomplete { n: usize, got: usize },
    #[error("list file gives {got} of {n} vertices")]
    ListsIncomplete { n: usize, got: usize },
    #[error("bad colour token {0}")]
    BadColour(Value),
    #[error("certificate line {line}: {msg}")]
    Certificate { line: usize, msg: String },
    #[error("certificate header graph {found} does not match the input graph {expected}")]
    HeaderMismatch { expected: String, found: String },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Orientation(#[from] AtError),
    #[error("unknown corpus graph {0:?}")]
    UnknownCorpus(String),
}

pub type Result<T> = std::result::Result<T, FormatError>;

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.to_path_buf(), source })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| FormatError::Io { path: path.to_path_buf(), source })
}

fn json_err(what: impl Into<String>) -> impl FnOnce(serde_json::Error) -> FormatError {
    let what = what.into();
    move |source| FormatError::Json { what, source }
}

fn id_of(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(FormatError::BadId(other.clone())),
    }
}

// ---------------------------------------------------------------- graphs

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Value>,
    edges: Vec<[Value; 2]>,
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(json_err("graph"))?;
    let vs = raw.vertices.iter().map(id_of).collect::<Result<Vec<_>>>()?;
    let es = raw
        .edges
        .iter()
        .map(|[a, b]| Ok((id_of(a)?, id_of(b)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Graph::from_labelled(&vs, &es)?)
}

pub fn graph_to_json(g: &Graph) -> Value {
    serde_json::json!({
        "vertices": g.labels(),
        "edges": g.edges().map(|(u, v)| [g.label(u), g.label(v)]).collect::<Vec<_>>(),
    })
}

/// Parses a graph from file contents: JSON when it starts with `{`,
/// otherwise the first non-empty graph6 line (an optional `>>graph6<<`
/// header is skipped).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim_start();
    if t.starts_with('{') {
        return graph_from_json(t);
    }
    let line = t.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    Ok(graph6::decode(line)?)
}

/// Resolves a `--graph` argument: `empty` (no vertices), `corpus:NAME`
/// (see [`crate::corpus`]) or a file path.
pub fn load_graph(arg: &str) -> Result<Graph> {
    if arg == "empty" {
        return Ok(Graph::empty(0));
    }
    if let Some(name) = arg.strip_prefix("corpus:") {
        return crate::corpus::by_name(name).ok_or_else(|| FormatError::UnknownCorpus(name.to_string()));
    }
    parse_graph(&read_text(Path::new(arg))?)
}

// ---------------------------------------------------------------- caps

pub fn caps_to_json(g: &Graph, f: &CapMap) -> Value {
    let m: BTreeMap<&str, i64> = g.vertices().map(|v| (g.label(v), f[v])).collect();
    serde_json::json!({ "caps": m })
}

fn caps_from_value(g: &Graph, v: &Value) -> Result<CapMap> {
    #[derive(Deserialize)]
    struct Raw {
        caps: BTreeMap<String, i64>,
    }
    let raw: Raw = serde_json::from_value(v.clone()).map_err(json_err("caps"))?;
    let mut vals = vec![None; g.n()];
    for (id, k) in raw.caps {
        vals[g.lookup(&id)?] = Some(k);
    }
    let got = vals.iter().flatten().count();
    if got != g.n() {
        return Err(FormatError::CapsIncomplete { n: g.n(), got });
    }
    Ok(CapMap::new(vals.into_iter().flatten().collect()))
}

pub fn caps_from_json(g: &Graph, text: &str) -> Result<CapMap> {
    let v: Value = serde_json::from_str(text).map_err(json_err("caps"))?;
    caps_from_value(g, &v)
}

/// `const:k`, `deg`, `trunc:k` or `file:PATH`.
pub fn parse_caps_spec(g: &Graph, spec: &str) -> Result<CapMap> {
    let bad = || FormatError::CapsSpec(spec.to_string());
    let num = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
    if spec == "deg" {
        Ok(CapMap::degree(g))
    } else if let Some(k) = spec.strip_prefix("const:") {
        Ok(CapMap::constant(g.n(), num(k)?))
    } else if let Some(k) = spec.strip_prefix("trunc:") {
        Ok(CapMap::truncated(g, num(k)?))
    } else if let Some(p) = spec.strip_prefix("file:") {
        caps_from_json(g, &read_text(Path::new(p))?)
    } else {
        Err(bad())
    }
}

// ---------------------------------------------------------------- lists

/// Colour tokens: integers map to themselves, a single lowercase letter
/// `a`..`z` maps to `101`.. (the naming used by the gadget fixtures).
pub fn colour_from_token(v: &Value) -> Result<u32> {
    let bad = || FormatError::BadColour(v.clone());
    match v {
        Value::Number(n) => n.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(bad),
        Value::String(s) => {
            if let Ok(x) = s.parse::<u32>() {
                return Ok(x);
            }
            match s.as_bytes() {
                [c @ b'a'..=b'z'] => Ok(101 + u32::from(c - b'a')),
                _ => Err(bad()),
            }
        }
        _ => Err(bad()),
    }
}

pub fn colour_token(c: u32) -> Value {
    if (101..=126).contains(&c) {
        Value::String(weakstar_core::counterexamples::colour_name(c))
    } else {
        Value::from(c)
    }
}

pub fn lists_from_json(g: &Graph, text: &str) -> Result<ListAssignment> {
    #[derive(Deserialize)]
    struct Raw {
        lists: BTreeMap<String, Vec<Value>>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(json_err("lists"))?;
    let mut lists = vec![None; g.n()];
    for (id, toks) in raw.lists {
        let l = toks.iter().map(colour_from_token).collect::<Result<Vec<_>>>()?;
        lists[g.lookup(&id)?] = Some(l);
    }
    let got = lists.iter().flatten().count();
    if got != g.n() {
        return Err(FormatError::ListsIncomplete { n: g.n(), got });
    }
    Ok(ListAssignment::new(lists.into_iter().flatten().collect()))
}

pub fn lists_to_json(g: &Graph, l: &ListAssignment) -> Value {
    let m: BTreeMap<&str, Vec<Value>> =
        g.vertices().map(|v| (g.label(v), l.list(v).iter().map(|&c| colour_token(c)).collect())).collect();
    serde_json::json!({ "lists": m })
}

/// Colouring as `{id: colour}`.
pub fn colouring_to_json(g: &Graph, phi: &[u32]) -> Value {
    let m: BTreeMap<&str, Value> = g.vertices().map(|v| (g.label(v), colour_token(phi[v]))).collect();
    Value::from(serde_json::Map::from_iter(m.into_iter().map(|(k, v)| (k.to_string(), v))))
}

// ---------------------------------------------------------------- certificates

pub fn op_to_json(g: &Graph, op: &Op) -> Value {
    let l = |v: Vertex| g.label(v).to_string();
    match *op {
        Op::Reduce { x, s } => serde_json::json!({"op": "reduce", "x": l(x), "s": s}),
        Op::EdgeDelete { x, y } => serde_json::json!({"op": "edgedel", "x": l(x), "y": l(y)}),
        Op::VertexDelete { x } => serde_json::json!({"op": "vdel", "x": l(x)}),
        Op::DeleteSave { x, y } => serde_json::json!({"op": "deletesave", "x": l(x), "y": l(y)}),
    }
}

pub fn op_from_json(g: &Graph, v: &Value) -> std::result::Result<Op, String> {
    let field = |k: &str| -> std::result::Result<Vertex, String> {
        let id = v.get(k).ok_or_else(|| format!("missing field {k:?}"))?;
        let id = id_of(id).map_err(|e| e.to_string())?;
        g.lookup(&id).map_err(|e| e.to_string())
    };
    let name = v.get("op").and_then(Value::as_str).ok_or("missing field \"op\"")?;
    match name {
        "reduce" => {
            let s = v.get("s").and_then(Value::as_i64).ok_or("missing integer field \"s\"")?;
            Ok(Op::Reduce { x: field("x")?, s })
        }
        "edgedel" => Ok(Op::EdgeDelete { x: field("x")?, y: field("y")? }),
        "vdel" => Ok(Op::VertexDelete { x: field("x")? }),
        "deletesave" => Ok(Op::DeleteSave { x: field("x")?, y: field("y")? }),
        other => Err(format!("unknown op {other:?}")),
    }
}

/// Header line then one move per line.
pub fn certificate_to_jsonl(g: &Graph, f: &CapMap, ops: &[Op]) -> String {
    let header = serde_json::json!({
        "graph": graph6::encode(g),
        "labels": g.labels(),
        "caps": caps_to_json(g, f)["caps"],
    });
    let mut out = header.to_string();
    out.push('\n');
    for op in ops {
        out.push_str(&op_to_json(g, op).to_string());
        out.push('\n');
    }
    out
}

/// A parsed certificate file. The header's graph must equal `g` up to
/// labels; the header caps are returned for the caller to compare.
#[derive(Debug, Clone)]
pub struct CertificateFile {
    pub header_caps: Option<CapMap>,
    pub ops: Vec<Op>,
}

pub fn certificate_from_jsonl(g: &Graph, text: &str) -> Result<CertificateFile> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let bad = |line: usize, msg: String| FormatError::Certificate { line: line + 1, msg };
    let (i, first) = lines.next().ok_or_else(|| bad(0, "empty file".into()))?;
    let header: Value = serde_json::from_str(first).map_err(|e| bad(i, e.to_string()))?;
    let expected = graph6::encode(g);
    match header.get("graph").and_then(Value::as_str) {
        Some(found) if found == expected => {}
        Some(found) => return Err(FormatError::HeaderMismatch { expected, found: found.to_string() }),
        None => return Err(bad(i, "header lacks \"graph\"".into())),
    }
    let header_caps = match header.get("caps") {
        Some(c) => Some(caps_from_value(g, &serde_json::json!({ "caps": c }))?),
        None => None,
    };
    let mut ops = Vec::new();
    for (i, line) in lines {
        let v: Value = serde_json::from_str(line).map_err(|e| bad(i, e.to_string()))?;
        ops.push(op_from_json(g, &v).map_err(|m| bad(i, m))?);
    }
    Ok(CertificateFile { header_caps, ops })
}

// ---------------------------------------------------------------- embeddings

/// `{"rotation": {id: [ids clockwise]}, "outer": k}` where `k` indexes the
/// boundary walks in tracing order (the face index for connected graphs).
pub fn embedding_from_json(g: &Graph, text: &str) -> Result<Embedding> {
    #[derive(Deserialize)]
    struct Raw {
        rotation: BTreeMap<String, Vec<Value>>,
        #[serde(default)]
        outer: usize,
    }
    let raw: Raw = serde_json::from_str(text).map_err(json_err("embedding"))?;
    let mut rot = vec![Vec::new(); g.n()];
    for (id, nb) in raw.rotation {
        let v = g.lookup(&id)?;
        rot[v] = nb.iter().map(|x| Ok(g.lookup(&id_of(x)?)?)).collect::<Result<Vec<_>>>()?;
    }
    Ok(Embedding::new(g, rot, raw.outer)?)
}

pub fn embedding_to_json(e: &Embedding) -> Value {
    let g = e.graph();
    let rot: BTreeMap<&str, Vec<&str>> =
        g.vertices().map(|v| (g.label(v), e.rotation(v).iter().map(|&u| g.label(u)).collect())).collect();
    serde_json::json!({ "rotation": rot, "outer": e.outer_walk() })
}

// ---------------------------------------------------------------- orientations

pub fn orientation_to_json(g: &Graph, d: &Orientation) -> Value {
    let arcs: Vec<[&str; 2]> = d.arcs().iter().map(|&(t, h)| [g.label(t), g.label(h)]).collect();
    serde_json::json!({ "arcs": arcs })
}

pub fn orientation_from_json(g: &Graph, text: &str) -> Result<Orientation> {
    #[derive(Deserialize)]
    struct Raw {
        arcs: Vec<[Value; 2]>,
    }
    let raw: Raw = serde_json::from_str(text).map_err(json_err("orientation"))?;
    let arcs = raw
        .arcs
        .iter()
        .map(|[t, h]| Ok((g.lookup(&id_of(t)?)?, g.lookup(&id_of(h)?)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Orientation::new(g, arcs)?)
}

// ---------------------------------------------------------------- ledger

/// One JSON line per protector round. Every round in a returned
/// certificate already passed the three invariant checks; the line records
/// the quantities they were checked on.
pub fn planar_ledger_jsonl(g: &Graph, c: &PlanarCertificate) -> String {
    let mut out = String::new();
    for r in &c.rounds {
        let steps: Vec<Value> = r
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "component": s.component,
                    "deleted": s.deleted.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                    "target": g.label(s.target),
                    "paid": s.paid,
                })
            })
            .collect();
        let line = serde_json::json!({
            "round": r.round,
            "vertex": g.label(r.vertex),
            "earlier_neighbours": r.earlier_neighbours,
            "cap_before": r.cap_before,
            "cap_at_delete": r.cap_at_delete,
            "steps": steps,
            "invariants": "ok",
        });
        out.push_str(&line.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use weakstar_core::graph::families;

    fn labelled() -> Graph {
        Graph::from_labelled(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn graph_json_round_trip() {
        let g = labelled();
        let back = graph_from_json(&graph_to_json(&g).to_string()).unwrap();
        assert_eq!(back, g);
        let num = graph_from_json(r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(num, families::path(3));
    }

    #[test]
    fn graph6_text_is_accepted() {
        let g = families::cycle(5);
        let text = format!(">>graph6<<{}\n", graph6::encode(&g));
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(load_graph("empty").unwrap().n(), 0);
    }

    #[test]
    fn bad_graphs_are_rejected() {
        assert!(matches!(
            graph_from_json(r#"{"vertices":["a"],"edges":[["a","b"]]}"#),
            Err(FormatError::Graph(GraphError::UnknownVertex(_)))
        ));
        assert!(matches!(graph_from_json(r#"{"vertices":[1.5],"edges":[]}"#), Err(FormatError::BadId(_))));
    }

    #[test]
    fn caps_specs() {
        let g = families::star(3);
        assert_eq!(parse_caps_spec(&g, "deg").unwrap().values(), &[3, 1, 1, 1]);
        assert_eq!(parse_caps_spec(&g, "const:2").unwrap().values(), &[2; 4]);
        assert_eq!(parse_caps_spec(&g, "trunc:2").unwrap().values(), &[2, 1, 1, 1]);
        assert!(matches!(parse_caps_spec(&g, "deg:3"), Err(FormatError::CapsSpec(_))));
        assert!(matches!(parse_caps_spec(&g, "const:x"), Err(FormatError::CapsSpec(_))));
        let f = CapMap::new(vec![4, 0, 2, 1]);
        assert_eq!(caps_from_json(&g, &caps_to_json(&g, &f).to_string()).unwrap(), f);
        assert!(matches!(caps_from_json(&g, r#"{"caps":{"0":1}}"#), Err(FormatError::CapsIncomplete { n: 4, got: 1 })));
    }

    #[test]
    fn lists_round_trip() {
        let g = labelled();
        let l = ListAssignment::new(vec![vec![1, 101], vec![2, 3], vec![102]]);
        let j = lists_to_json(&g, &l);
        assert_eq!(j["lists"]["a"], serde_json::json!([1, "a"]));
        assert_eq!(lists_from_json(&g, &j.to_string()).unwrap(), l);
        assert!(lists_from_json(&g, r#"{"lists":{"a":["ab"],"b":[],"c":[]}}"#).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let g = labelled();
        let f = CapMap::new(vec![3, 2, 2]);
        let ops = vec![
            Op::Reduce { x: 0, s: 1 },
            Op::EdgeDelete { x: 0, y: 1 },
            Op::DeleteSave { x: 1, y: 2 },
            Op::VertexDelete { x: 0 },
            Op::VertexDelete { x: 2 },
        ];
        let text = certificate_to_jsonl(&g, &f, &ops);
        assert!(text.lines().nth(2).unwrap().contains(r#""op":"edgedel""#));
        let back = certificate_from_jsonl(&g, &text).unwrap();
        assert_eq!(back.ops, ops);
        assert_eq!(back.header_caps, Some(f));
        let other = families::cycle(3);
        assert!(matches!(certificate_from_jsonl(&other, &text), Err(FormatError::HeaderMismatch { .. })));
        let broken = text.replace("vdel", "vanish");
        assert!(matches!(certificate_from_jsonl(&g, &broken), Err(FormatError::Certificate { line: 5, .. })));
    }

    #[test]
    fn embedding_and_orientation_round_trip() {
        let g = families::wheel(5);
        let e = weakstar_core::planar::planar_embedding(&g).unwrap();
        let back = embedding_from_json(&g, &embedding_to_json(&e).to_string()).unwrap();
        assert_eq!(back, e);
        let d = Orientation::from_choice(&g, 0b1010_1010);
        let back = orientation_from_json(&g, &orientation_to_json(&g, &d).to_string()).unwrap();
        assert_eq!(back.arcs(), d.arcs());
    }
}
