//! Labelled simple graphs and the structural operations used by growth:
//! pinching a matching onto a new vertex, vertex deletion and the Havel swap.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::seq::DegreeSequence;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); vertex_count], edge_count: 0 }
    }

    /// Rejects loops, out-of-range endpoints and repeated edges.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Graph::empty(vertex_count);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::InvalidEdge(u, v));
            }
        }
        Ok(g)
    }

    /// Returns `Ok(false)` when the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.vertex_count();
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidEdge(u, v));
        }
        let fresh = self.adj[u].insert(v);
        if fresh {
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return false;
        }
        let had = self.adj[u].remove(&v);
        if had {
            self.adj[v].remove(&u);
            self.edge_count -= 1;
        }
        had
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adj[u].contains(&v)
    }

    /// All edges as normalized pairs in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// Parses the edge-list format: one `u v` pair per line, `#` comments,
    /// and an optional leading `n <count>` line that declares isolated vertices.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen_content = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let a = toks.next().unwrap_or_default();
            let b = toks.next();
            if toks.next().is_some() {
                return Err(Error::Parse(format!("line {}: expected two fields", lineno + 1)));
            }
            if a == "n" && !seen_content {
                let count = b
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("line {}: bad vertex count", lineno + 1)))?;
                declared = Some(count);
                seen_content = true;
                continue;
            }
            seen_content = true;
            let parse = |t: &str| {
                t.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad vertex {t:?}", lineno + 1)))
            };
            let b = b.ok_or_else(|| Error::Parse(format!("line {}: missing endpoint", lineno + 1)))?;
            edges.push((parse(a)?, parse(b)?));
        }
        let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let n = match declared {
            Some(n) if n < implied => {
                return Err(Error::Parse(format!("declared n = {n} but edges use vertex {}", implied - 1)))
            }
            Some(n) => n,
            None => implied,
        };
        Graph::from_edges(n, edges)
    }

    /// Writes the edge-list format, always with an `n` header line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Serialized as `{ "n": .., "edges": [[u, v], ..] }`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.vertex_count(), edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone)]
pub struct Pinched {
    pub graph: Graph,
    pub new_vertex: Vertex,
    /// Set when the matching was empty, leaving the new vertex isolated.
    pub degenerate: bool,
}

/// Replaces the edges of `m` by a new vertex joined to every matched endpoint.
/// The new vertex gets id `g.vertex_count()` and degree `2|M|`; every other
/// degree is unchanged.
pub fn pinch(g: &Graph, m: &Matching) -> Result<Pinched> {
    if m.host_vertex_count() > g.vertex_count() {
        return Err(Error::NotASubMatching("matching host is larger than graph".into()));
    }
    if let Some(&(u, v)) = m.edges().iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::NotASubMatching(format!("edge {u}-{v} not in graph")));
    }
    let mut out = g.clone();
    let w = out.add_vertex();
    for &(u, v) in m.edges() {
        out.remove_edge(u, v);
        out.add_edge(w, u)?;
        out.add_edge(w, v)?;
    }
    Ok(Pinched { graph: out, new_vertex: w, degenerate: m.is_empty() })
}

/// Removes `v` and re-indexes the remaining vertices densely, preserving order.
/// The returned map sends old ids to new ids (`None` for `v`).
pub fn delete_vertex(g: &Graph, v: Vertex) -> Result<(Graph, Vec<Option<Vertex>>)> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let map: Vec<Option<Vertex>> = (0..n)
        .map(|x| match x.cmp(&v) {
            std::cmp::Ordering::Less => Some(x),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(x - 1),
        })
        .collect();
    let edges = g.edges().into_iter().filter_map(|(a, b)| Some((map[a]?, map[b]?)));
    Ok((Graph::from_edges(n - 1, edges)?, map))
}

/// Havel's exchange: moves `u`'s neighbour `vi` to the non-neighbour `vj`
/// (requires `deg(vj) >= deg(vi)`) keeping every degree fixed.
///
/// A witness `w` adjacent to `vj` but not to `vi` always exists under the
/// precondition; the smallest such `w` is used, and the edges `u-vi`, `w-vj`
/// are traded for `u-vj`, `w-vi`.
pub fn hh_swap(g: &Graph, u: Vertex, vi: Vertex, vj: Vertex) -> Result<Graph> {
    let n = g.vertex_count();
    for x in [u, vi, vj] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == vi || u == vj || vi == vj {
        return Err(Error::SwapPrecondition("vertices must be distinct".into()));
    }
    if !g.has_edge(u, vi) {
        return Err(Error::SwapPrecondition(format!("{u} is not adjacent to {vi}")));
    }
    if g.has_edge(u, vj) {
        return Err(Error::SwapPrecondition(format!("{u} is already adjacent to {vj}")));
    }
    if g.degree(vj) < g.degree(vi) {
        return Err(Error::SwapPrecondition(format!("deg({vj}) < deg({vi})")));
    }
    let w = g
        .neighbors(vj)
        .find(|&w| w != vi && !g.has_edge(w, vi))
        .ok_or_else(|| Error::Consistency("no exchange witness despite degree condition".into()))?;
    let mut out = g.clone();
    out.remove_edge(u, vi);
    out.remove_edge(w, vj);
    out.add_edge(u, vj)?;
    out.add_edge(w, vi)?;
    Ok(out)
}
