//! Deterministic generators for the example graph families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn build(n: usize, edges: impl IntoIterator<Item = Edge>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid edge")
}

fn clique_edges(vs: &[usize]) -> Vec<Edge> {
    let mut out = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.push((u, v));
        }
    }
    out
}

/// Vertices `1..=n` (stored as `0..n`); `ij` is an edge iff both are at most
/// `n/2` or `i + n/2 <= j`.
pub fn half_graph(n: usize) -> Result<Graph> {
    if n < 2 || n % 2 == 1 {
        return Err(invalid(format!("half-graph needs an even n >= 2, got {n}")));
    }
    let h = n / 2;
    let edges = (1..=n).flat_map(|i| {
        (i + 1..=n).filter_map(move |j| ((i <= h && j <= h) || i + h <= j).then_some((i - 1, j - 1)))
    });
    Ok(build(n, edges))
}

/// `t` copies of `K_l` sharing the centre vertex 0.
pub fn windmill(t: usize, l: usize) -> Result<Graph> {
    if t < 1 || l < 2 {
        return Err(invalid(format!("windmill needs t >= 1 and l >= 2, got t={t}, l={l}")));
    }
    let n = t * (l - 1) + 1;
    let mut edges = Vec::new();
    for blade in 0..t {
        let mut vs = vec![0];
        vs.extend((0..l - 1).map(|j| 1 + blade * (l - 1) + j));
        edges.extend(clique_edges(&vs));
    }
    Ok(build(n, edges))
}

pub fn complete(n: usize) -> Graph {
    build(n, clique_edges(&(0..n).collect::<Vec<_>>()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i))))
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(invalid(format!("complete bipartite needs a, b >= 1, got {a}, {b}")));
    }
    Ok(build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))))
}

pub fn disjoint_cliques(k: usize, l: usize) -> Result<Graph> {
    if k < 1 || l < 1 {
        return Err(invalid(format!("disjoint cliques need k, l >= 1, got {k}, {l}")));
    }
    let edges = (0..k).flat_map(|c| clique_edges(&(c * l..(c + 1) * l).collect::<Vec<_>>()));
    Ok(build(k * l, edges))
}

pub fn disjoint_triangles(k: usize) -> Result<Graph> {
    disjoint_cliques(k, 3)
}

/// `i` joined to `i ± 1, ..., i ± floor(r/2)` (mod n), plus the antipode
/// `i + n/2` when `r` is odd.
pub fn regular_circulant(n: usize, r: usize) -> Result<Graph> {
    if r >= n {
        return Err(invalid(format!("circulant needs r < n, got r={r}, n={n}")));
    }
    if (n * r) % 2 == 1 {
        return Err(invalid(format!("n·r must be even, got n={n}, r={r}")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        for off in 1..=r / 2 {
            g.add_edge(i, (i + off) % n)?;
        }
        if r % 2 == 1 {
            g.add_edge(i, (i + n / 2) % n)?;
        }
    }
    Ok(g)
}

/// Every generator, addressable by name and parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    HalfGraph { n: usize },
    Windmill { t: usize, l: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    RegularCirculant { n: usize, r: usize },
    CompleteBipartite { a: usize, b: usize },
    DisjointTriangles { k: usize },
    DisjointCliques { k: usize, l: usize },
}

pub const FAMILY_NAMES: &[&str] = &[
    "half-graph",
    "windmill",
    "complete",
    "cycle",
    "path",
    "regular-circulant",
    "complete-bipartite",
    "disjoint-triangles",
    "disjoint-cliques",
];

pub fn make_family(family: Family) -> Result<Graph> {
    match family {
        Family::HalfGraph { n } => half_graph(n),
        Family::Windmill { t, l } => windmill(t, l),
        Family::Complete { n } => Ok(complete(n)),
        Family::Cycle { n } => cycle(n),
        Family::Path { n } => path(n),
        Family::RegularCirculant { n, r } => regular_circulant(n, r),
        Family::CompleteBipartite { a, b } => complete_bipartite(a, b),
        Family::DisjointTriangles { k } => disjoint_triangles(k),
        Family::DisjointCliques { k, l } => disjoint_cliques(k, l),
    }
}
