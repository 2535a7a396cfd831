//! Interchange formats: graph JSON files, family shorthands, distribution
//! and target parsing, and replayable witness files.
//!
//! Anywhere a graph file is accepted, a shorthand works too: `trivial`,
//! `path:N`, `cycle:N`, `complete:N`, `cube:D`, or `product(A,B)` where A
//! and B are themselves shorthands.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::distribution::{self, Distribution, DistributionSet};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{Graph, VertexId};
use crate::solver::{Move, MoveSequence};

/// On-disk graph shape: `{"n": .., "labels": [..]?, "edges": [[u,v,w],..]}`
/// with 0-based endpoints, `u < v`, and weights at least 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<(usize, usize, u64)>,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> GraphFile {
        GraphFile {
            n: g.n(),
            labels: g.labels().map(|ls| ls.to_vec()),
            edges: g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect(),
        }
    }
}

impl GraphFile {
    /// Validates the strict file shape (`u < v` is required here, unlike
    /// the permissive constructor) and builds the graph.
    pub fn into_graph(self) -> Result<Graph> {
        for &(u, v, _) in &self.edges {
            if u >= v {
                return Err(Error::InvalidInput(format!(
                    "graph file edges must satisfy u < v, got [{u}, {v}]"
                )));
            }
        }
        let mut g = Graph::new(self.n, &self.edges)?;
        if let Some(labels) = self.labels {
            g = g.with_labels(labels)?;
        }
        Ok(g)
    }
}

/// True if the string uses the family shorthand grammar rather than
/// naming a file.
pub fn is_shorthand(s: &str) -> bool {
    let s = s.trim();
    s == "trivial"
        || s.starts_with("product(")
        || ["path:", "cycle:", "complete:", "cube:"].iter().any(|p| s.starts_with(p))
}

/// Parses a family shorthand. Products nest: `product(product(path:2,
/// path:2),cycle:3)` is valid.
pub fn parse_shorthand(s: &str) -> Result<Graph> {
    let (g, rest) = parse_shorthand_prefix(s.trim())?;
    if !rest.is_empty() {
        return Err(Error::InvalidInput(format!(
            "trailing input '{rest}' after graph shorthand"
        )));
    }
    Ok(g)
}

fn parse_shorthand_prefix(s: &str) -> Result<(Graph, &str)> {
    if let Some(rest) = s.strip_prefix("product(") {
        let (a, rest) = parse_shorthand_prefix(rest.trim_start())?;
        let rest = rest
            .trim_start()
            .strip_prefix(',')
            .ok_or_else(|| Error::InvalidInput("product(A,B) needs a comma".into()))?;
        let (b, rest) = parse_shorthand_prefix(rest.trim_start())?;
        let rest = rest
            .trim_start()
            .strip_prefix(')')
            .ok_or_else(|| Error::InvalidInput("product(A,B) is missing ')'".into()))?;
        return Ok((a.cartesian_product(&b), rest));
    }
    let end = s.find([',', ')']).unwrap_or(s.len());
    let (tok, rest) = s.split_at(end);
    Ok((parse_family_token(tok.trim())?, rest))
}

fn parse_family_token(tok: &str) -> Result<Graph> {
    if tok == "trivial" {
        return Ok(families::trivial());
    }
    let (name, arg) = tok.split_once(':').ok_or_else(|| {
        Error::InvalidInput(format!("unknown graph shorthand '{tok}'"))
    })?;
    let k: usize = arg
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad size '{arg}' in '{tok}'")))?;
    match name {
        "path" => families::path(k),
        "cycle" => families::cycle(k),
        "complete" => families::complete(k),
        "cube" => {
            let d = u32::try_from(k)
                .map_err(|_| Error::InvalidInput(format!("cube dimension '{arg}' too large")))?;
            families::hypercube(d)
        }
        _ => Err(Error::InvalidInput(format!("unknown graph family '{name}'"))),
    }
}

/// Resolves a CLI graph argument: shorthand if it looks like one, JSON
/// file otherwise.
pub fn load_graph(spec: &str) -> Result<Graph> {
    if is_shorthand(spec) {
        return parse_shorthand(spec);
    }
    let text = std::fs::read_to_string(Path::new(spec))?;
    let file: GraphFile = serde_json::from_str(&text)?;
    file.into_graph()
}

/// Parses a bracketed count vector `[c0,c1,...]`.
pub fn parse_distribution(s: &str) -> Result<Distribution> {
    let counts: Vec<u64> = serde_json::from_str(s.trim())
        .map_err(|e| Error::InvalidInput(format!("bad distribution '{}': {e}", s.trim())))?;
    Ok(Distribution::new(counts))
}

/// Parses a JSON array of count vectors into a distribution set.
pub fn parse_distribution_set(s: &str) -> Result<DistributionSet> {
    let rows: Vec<Vec<u64>> = serde_json::from_str(s.trim())
        .map_err(|e| Error::InvalidInput(format!("bad distribution set: {e}")))?;
    DistributionSet::new(rows.into_iter().map(Distribution::new).collect())
}

/// Reads a distribution-set file (a JSON array of count vectors).
pub fn load_distribution_set(path: &Path) -> Result<DistributionSet> {
    parse_distribution_set(&std::fs::read_to_string(path)?)
}

/// Resolves a vertex argument: a 0-based index, or a vertex name as
/// printed by `Graph::vertex_name`.
pub fn parse_vertex(g: &Graph, s: &str) -> Result<VertexId> {
    let s = s.trim();
    if let Ok(v) = s.parse::<usize>() {
        if v < g.n() {
            return Ok(v);
        }
        return Err(Error::InvalidInput(format!(
            "vertex {v} out of range for a graph on {} vertices",
            g.n()
        )));
    }
    (0..g.n())
        .find(|&v| g.vertex_name(v) == s)
        .ok_or_else(|| Error::InvalidInput(format!("no vertex named '{s}'")))
}

/// A resolved target argument: a single distribution or a selectable set.
#[derive(Clone, Debug)]
pub enum TargetSpec {
    One(Distribution),
    Many(DistributionSet),
}

/// Resolves a target argument against a graph. Accepted forms: `gamma`
/// (one pebble everywhere), `delta:v`, `tdelta:v:t`, `S_t:t` (t pebbles on
/// any one vertex), `D_t:t` (t pebbles on either path end), a bracketed
/// count vector, or the name of a distribution-set file.
pub fn parse_target(g: &Graph, s: &str) -> Result<TargetSpec> {
    let s = s.trim();
    if s == "gamma" {
        return Ok(TargetSpec::One(distribution::gamma_target(g)));
    }
    if let Some(arg) = s.strip_prefix("delta:") {
        return Ok(TargetSpec::One(distribution::delta(g, parse_vertex(g, arg)?)?));
    }
    if let Some(arg) = s.strip_prefix("tdelta:") {
        let (vs, ts) = arg
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput("tdelta:v:t needs two arguments".into()))?;
        let t = parse_count(ts)?;
        return Ok(TargetSpec::One(distribution::delta(g, parse_vertex(g, vs)?)?.scale(t)));
    }
    if let Some(arg) = s.strip_prefix("S_t:") {
        return Ok(TargetSpec::Many(distribution::s_t(g, parse_count(arg)?)?));
    }
    if let Some(arg) = s.strip_prefix("D_t:") {
        return Ok(TargetSpec::Many(distribution::d_t(g, parse_count(arg)?)?));
    }
    if s.starts_with('[') {
        let d = parse_distribution(s)?;
        if d.n() != g.n() {
            return Err(Error::InvalidInput(format!(
                "distribution has {} entries for a graph on {} vertices",
                d.n(),
                g.n()
            )));
        }
        return Ok(TargetSpec::One(d));
    }
    let path = Path::new(s);
    if path.exists() {
        return Ok(TargetSpec::Many(load_distribution_set(path)?));
    }
    Err(Error::InvalidInput(format!("unrecognized target '{s}'")))
}

fn parse_count(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad count '{}'", s.trim())))
}

/// On-disk witness shape: `{"start": [..], "moves": [[from,to],..],
/// "end": [..]}`. Move costs are implied by the graph's edge weights.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessFile {
    pub start: Vec<u64>,
    pub moves: Vec<(usize, usize)>,
    pub end: Vec<u64>,
}

/// Renders a move sequence for on-disk storage; replays it to fill in the
/// end state.
pub fn witness_to_file(g: &Graph, seq: &MoveSequence) -> Result<WitnessFile> {
    let end = seq.replay(g)?;
    Ok(WitnessFile {
        start: seq.start.counts().to_vec(),
        moves: seq.moves.iter().map(|m| (m.from, m.to)).collect(),
        end: end.counts().to_vec(),
    })
}

/// Rebuilds a replayable sequence from a witness file, looking up move
/// costs from the graph and checking the recorded end state.
pub fn witness_from_file(g: &Graph, file: &WitnessFile) -> Result<MoveSequence> {
    let moves = file
        .moves
        .iter()
        .map(|&(u, v)| {
            let cost = g
                .neighbors(u)
                .iter()
                .find(|&&(w, _)| w == v)
                .map(|&(_, c)| c)
                .ok_or_else(|| Error::InvalidInput(format!("no edge between {u} and {v}")))?;
            Ok(Move { from: u, to: v, cost })
        })
        .collect::<Result<Vec<_>>>()?;
    let seq = MoveSequence { start: Distribution::new(file.start.clone()), moves };
    let end = seq.replay(g)?;
    if end.counts() != file.end.as_slice() {
        return Err(Error::InvalidInput(
            "witness end state does not match its replay".into(),
        ));
    }
    Ok(seq)
}
