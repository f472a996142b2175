//! Matchings: exact maximum matching (Edmonds' blossom search), seeded greedy
//! maximal matchings, and an exact minimum maximal matching by branching.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};

/// Default vertex cap for the exhaustive minimum-maximal-matching search.
pub const MIN_MAXIMAL_CAP: usize = 16;

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges over a host of `host_vertex_count` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    host_vertex_count: usize,
    edges: Vec<Edge>,
}

impl Matching {
    pub fn empty(host_vertex_count: usize) -> Self {
        Matching { host_vertex_count, edges: Vec::new() }
    }

    /// Validates range and disjointness; edges are normalized and sorted.
    pub fn new(host_vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = vec![false; host_vertex_count];
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v || u >= host_vertex_count || v >= host_vertex_count {
                return Err(Error::InvalidEdge(u, v));
            }
            if seen[u] || seen[v] {
                return Err(Error::NotASubMatching(format!("edge {u}-{v} shares an endpoint")));
            }
            seen[u] = true;
            seen[v] = true;
            norm.push(edge(u, v));
        }
        norm.sort_unstable();
        Ok(Matching { host_vertex_count, edges: norm })
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges =
            mate.iter().enumerate().filter(|&(u, &v)| v != NONE && u < v).map(|(u, &v)| (u, v)).collect();
        Matching { host_vertex_count: mate.len(), edges }
    }

    pub fn host_vertex_count(&self) -> usize {
        self.host_vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `mate[v]` for every host vertex.
    pub fn mates(&self) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; self.host_vertex_count];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// `V_M`, in increasing order.
    pub fn matched_vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// `U_M`, in increasing order.
    pub fn unmatched_vertices(&self) -> Vec<Vertex> {
        let mate = self.mates();
        (0..self.host_vertex_count).filter(|&v| mate[v].is_none()).collect()
    }

    /// Keeps only the listed edge positions.
    pub fn restrict(&self, keep: &[usize]) -> Matching {
        let mut edges: Vec<Edge> = keep.iter().map(|&i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { host_vertex_count: self.host_vertex_count, edges }
    }
}

/// True iff `edges` is a matching of `g` (and, when asked, a maximal one).
pub fn verify_matching(g: &Graph, edges: &[Edge], require_maximal: bool) -> bool {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    for &(u, v) in edges {
        if !g.has_edge(u, v) || covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    !require_maximal || g.edges().iter().all(|&(u, v)| covered[u] || covered[v])
}

pub fn is_maximal(g: &Graph, m: &Matching) -> bool {
    verify_matching(g, m.edges(), true)
}

/// Maximum-cardinality matching. Deterministic for a fixed graph.
pub fn max_matching(g: &Graph) -> Matching {
    let adj: Vec<Vec<Vertex>> = (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect();
    Blossom::new(&adj).run()
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).len()
}

struct Blossom<'a> {
    adj: &'a [Vec<Vertex>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<Vertex>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn run(mut self) -> Matching {
        let n = self.adj.len();
        // greedy warm start
        for u in 0..n {
            if self.mate[u] == NONE {
                if let Some(&v) = self.adj[u].iter().find(|&&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        Matching::from_mates(&self.mate)
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`, contracting odd cycles.
    /// Returns the free endpoint of an augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        None
    }
}

/// Randomized greedy maximal matching: edges are scanned in a seeded random
/// order and taken whenever both endpoints are still free.
pub fn greedy_maximal_matching(g: &Graph, rng_seed: u64) -> Matching {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut edges = g.edges();
    edges.shuffle(&mut rng);
    greedy_in_order(g.vertex_count(), &edges)
}

pub(crate) fn greedy_in_order(n: usize, edges: &[Edge]) -> Matching {
    let mut free = vec![true; n];
    let mut taken = Vec::new();
    for &(u, v) in edges {
        if free[u] && free[v] {
            free[u] = false;
            free[v] = false;
            taken.push((u, v));
        }
    }
    taken.sort_unstable();
    Matching { host_vertex_count: n, edges: taken }
}

/// Exact minimum maximal matching (`ν̄(G)`) with the default vertex cap.
pub fn min_maximal_matching(g: &Graph) -> Result<Matching> {
    min_maximal_matching_capped(g, MIN_MAXIMAL_CAP)
}

/// Branches on the first edge with both endpoints free: any maximal
/// extension must match one of its endpoints.
pub fn min_maximal_matching_capped(g: &Graph, cap: usize) -> Result<Matching> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { what: "exact minimum maximal matching", actual: n, cap });
    }
    let edges = g.edges();
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut search = MinMaximal {
        edges: &edges,
        adj: &adj,
        free: vec![true; n],
        current: Vec::new(),
        best: greedy_in_order(n, &edges).edges,
    };
    search.descend();
    let mut best = search.best;
    best.sort_unstable();
    Ok(Matching { host_vertex_count: n, edges: best })
}

struct MinMaximal<'a> {
    edges: &'a [Edge],
    adj: &'a [Vec<Vertex>],
    free: Vec<bool>,
    current: Vec<Edge>,
    best: Vec<Edge>,
}

impl MinMaximal<'_> {
    fn descend(&mut self) {
        let open = self.edges.iter().copied().find(|&(u, v)| self.free[u] && self.free[v]);
        let Some((u, v)) = open else {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
            }
            return;
        };
        if self.current.len() + 1 >= self.best.len() {
            return;
        }
        for (x, skip) in [(u, NONE), (v, u)] {
            for idx in 0..self.adj[x].len() {
                let w = self.adj[x][idx];
                if w == skip || !self.free[w] {
                    continue;
                }
                self.free[x] = false;
                self.free[w] = false;
                self.current.push(edge(x, w));
                self.descend();
                self.current.pop();
                self.free[x] = true;
                self.free[w] = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[Edge]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> Graph {
        g(n, &(0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect::<Vec<_>>())
    }

    fn path(n: usize) -> Graph {
        g(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    /// Exhaustive ν by branching on the lowest vertex: leave it out, or match
    /// it to each neighbour.
    fn brute_nu(g: &Graph) -> usize {
        fn go(g: &Graph, free: &mut Vec<bool>, from: usize) -> usize {
            let Some(v) = (from..g.vertex_count()).find(|&v| free[v]) else { return 0 };
            free[v] = false;
            let mut best = go(g, free, v + 1);
            for w in g.neighbors(v).collect::<Vec<_>>() {
                if free[w] {
                    free[w] = false;
                    best = best.max(1 + go(g, free, v + 1));
                    free[w] = true;
                }
            }
            free[v] = true;
            best
        }
        go(g, &mut vec![true; g.vertex_count()], 0)
    }

    #[test]
    fn max_matching_examples() {
        assert_eq!(matching_number(&cycle(3)), 1);
        assert_eq!(matching_number(&cycle(6)), 3);
        let wd23 = g(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        let m = max_matching(&wd23);
        assert_eq!(m.len(), 2);
        assert_eq!(m.unmatched_vertices().len(), 1);
        assert!(verify_matching(&wd23, m.edges(), true));
        assert_eq!(max_matching(&Graph::empty(0)).len(), 0);
    }

    #[test]
    fn blossom_needed() {
        // Two triangles joined by a path; greedy warm start can pick badly.
        let gr = g(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5), (1, 7)]);
        assert_eq!(matching_number(&gr), brute_nu(&gr));
        // Petersen graph has a perfect matching
        let pet = g(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        assert_eq!(matching_number(&pet), 5);
    }

    #[test]
    fn max_matching_agrees_with_brute_force_on_seeded_graphs() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..400 {
            let n = rng.gen_range(0..=10);
            let p = [0.15, 0.3, 0.5, 0.8][rng.gen_range(0..4)];
            let mut gr = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        gr.add_edge(u, v).unwrap();
                    }
                }
            }
            let m = max_matching(&gr);
            assert!(verify_matching(&gr, m.edges(), true));
            assert_eq!(m.len(), brute_nu(&gr), "{:?}", gr.edges());
        }
    }

    #[test]
    fn greedy_examples() {
        for seed in 0..30 {
            let m = greedy_maximal_matching(&path(4), seed);
            assert!((1..=2).contains(&m.len()));
            assert!(is_maximal(&path(4), &m));
            assert_eq!(greedy_maximal_matching(&complete(4), seed).len(), 2);
        }
        assert!(greedy_maximal_matching(&Graph::empty(5), 1).is_empty());
        assert_eq!(greedy_maximal_matching(&cycle(9), 7), greedy_maximal_matching(&cycle(9), 7));
    }

    #[test]
    fn min_maximal_examples() {
        let m = min_maximal_matching(&path(4)).unwrap();
        assert_eq!(m.edges(), &[(1, 2)]);
        assert_eq!(min_maximal_matching(&cycle(6)).unwrap().len(), 2);
        assert_eq!(min_maximal_matching(&cycle(3)).unwrap().len(), 1);
        assert_eq!(min_maximal_matching(&Graph::empty(3)).unwrap().len(), 0);
        assert!(matches!(min_maximal_matching(&Graph::empty(17)), Err(Error::CapExceeded { .. })));
    }

    /// Compare with a scan over every edge subset.
    #[test]
    fn min_maximal_matches_subset_scan() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..150 {
            let n = rng.gen_range(1..=7);
            let mut gr = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.45) {
                        gr.add_edge(u, v).unwrap();
                    }
                }
            }
            let es = gr.edges();
            let mut best = usize::MAX;
            for mask in 0u32..(1 << es.len()) {
                let sub: Vec<Edge> =
                    es.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                if verify_matching(&gr, &sub, true) {
                    best = best.min(sub.len());
                }
            }
            let m = min_maximal_matching(&gr).unwrap();
            assert!(is_maximal(&gr, &m));
            assert_eq!(m.len(), best);
        }
    }

    #[test]
    fn verify_matching_examples() {
        let tri = cycle(3);
        assert!(verify_matching(&tri, &[(0, 1)], true));
        let p = path(4);
        assert!(verify_matching(&p, &[(1, 2)], true));
        assert!(!verify_matching(&p, &[(0, 1)], true));
        assert!(verify_matching(&p, &[(0, 1)], false));
        assert!(!verify_matching(&p, &[(0, 1), (1, 2)], false));
        assert!(!verify_matching(&p, &[(0, 2)], false));
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(3, vec![(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(3, vec![(0, 3)]).is_err());
        let m = Matching::new(5, vec![(3, 1), (0, 4)]).unwrap();
        assert_eq!(m.edges(), &[(0, 4), (1, 3)]);
        assert_eq!(m.matched_vertices(), vec![0, 1, 3, 4]);
        assert_eq!(m.unmatched_vertices(), vec![2]);
    }
}
