//! Exhaustive oracles over all labelled realizations of small sequences.
//!
//! Realizations are labelled: vertex `i` has degree `d_{i+1}` of the arranged
//! sequence, and no isomorphism reduction is done.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{gale_ryser_bound, maximality_bound};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::graphicality::is_graphic_eg;
use crate::matching::{matching_number, min_maximal_matching};
use crate::seq::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub max_n: usize,
    pub max_degree_sum: u64,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { max_n: 8, max_degree_sum: 24 }
    }
}

impl EnumerationCaps {
    /// Admits every sequence on up to `n` vertices.
    pub fn complete(n: usize) -> Self {
        EnumerationCaps { max_n: n, max_degree_sum: (n * n.saturating_sub(1)) as u64 }
    }

    fn check(&self, d: &DegreeSequence) -> Result<()> {
        if d.len() > self.max_n {
            return Err(Error::CapExceeded { what: "enumeration (n)", actual: d.len(), cap: self.max_n });
        }
        if d.degree_sum() > self.max_degree_sum {
            return Err(Error::CapExceeded {
                what: "enumeration (degree sum)",
                actual: d.degree_sum() as usize,
                cap: self.max_degree_sum as usize,
            });
        }
        Ok(())
    }
}

struct Frame {
    vertex: usize,
    candidates: Vec<usize>,
    /// Indices into `candidates` of the applied combination, if any.
    chosen: Option<Vec<usize>>,
}

/// Lazy backtracking over every labelled realization.
///
/// Vertices are completed in order; vertex `v` picks exactly its residual
/// number of partners among later vertices that still have residual degree.
/// A branch is cut when the later residual degrees have odd sum or some
/// residual exceeds the number of other later vertices still open. The
/// search never consults a graphicality test, so it can serve as an oracle
/// for one.
pub struct Realizations {
    n: usize,
    residual: Vec<usize>,
    edges: Vec<Edge>,
    frames: Vec<Frame>,
    finished: bool,
}

impl Realizations {
    fn new(d: &DegreeSequence) -> Self {
        let n = d.len();
        let mut it = Realizations {
            n,
            residual: d.degrees().to_vec(),
            edges: Vec::new(),
            frames: Vec::new(),
            finished: d.degree_sum() % 2 == 1,
        };
        if n > 0 && !it.finished {
            it.push_frame(0);
        }
        it
    }

    fn push_frame(&mut self, vertex: usize) {
        let candidates = (vertex + 1..self.n).filter(|&w| self.residual[w] > 0).collect();
        self.frames.push(Frame { vertex, candidates, chosen: None });
    }

    fn apply(&mut self, frame: usize, sign: bool) {
        let f = &self.frames[frame];
        let v = f.vertex;
        let Some(chosen) = &f.chosen else { return };
        let partners: Vec<usize> = chosen.iter().map(|&i| f.candidates[i]).collect();
        for w in partners {
            if sign {
                self.residual[w] -= 1;
                self.edges.push((v, w));
            } else {
                self.residual[w] += 1;
                self.edges.pop();
            }
        }
        self.residual[v] = if sign { 0 } else { self.frames[frame].chosen.as_ref().unwrap().len() };
    }

    fn later_residual_plausible(&self, vertex: usize) -> bool {
        let rest = &self.residual[vertex + 1..];
        let open = rest.iter().filter(|&&r| r > 0).count();
        rest.iter().sum::<usize>() % 2 == 0 && rest.iter().all(|&r| r == 0 || r < open)
    }

    /// Moves the top frame to its next combination that keeps the rest
    /// realizable; returns false when the frame is exhausted.
    fn advance_top(&mut self) -> bool {
        let top = self.frames.len() - 1;
        let vertex = self.frames[top].vertex;
        let k_total = self.frames[top].candidates.len();
        loop {
            let next = match self.frames[top].chosen.take() {
                None => {
                    let need = self.residual[vertex];
                    (need <= k_total).then(|| (0..need).collect::<Vec<_>>())
                }
                Some(prev) => {
                    // undo the previous choice before moving on
                    self.frames[top].chosen = Some(prev.clone());
                    self.apply(top, false);
                    self.frames[top].chosen = None;
                    next_combination(prev, k_total)
                }
            };
            let Some(comb) = next else { return false };
            self.frames[top].chosen = Some(comb);
            self.apply(top, true);
            if self.later_residual_plausible(vertex) {
                return true;
            }
        }
    }
}

fn next_combination(mut c: Vec<usize>, total: usize) -> Option<Vec<usize>> {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < total - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return Some(c);
        }
    }
    None
}

impl Iterator for Realizations {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.finished {
            return None;
        }
        if self.n == 0 {
            self.finished = true;
            return Some(Graph::empty(0));
        }
        loop {
            if self.frames.is_empty() {
                self.finished = true;
                return None;
            }
            if !self.advance_top() {
                self.frames.pop();
                continue;
            }
            let vertex = self.frames.last().unwrap().vertex;
            if vertex + 1 == self.n {
                let g = Graph::from_edges(self.n, self.edges.iter().copied())
                    .expect("backtracking only joins distinct, unjoined vertices");
                return Some(g);
            }
            self.push_frame(vertex + 1);
        }
    }
}

/// Every labelled realization of `d`, produced lazily.
pub fn enumerate_realizations(d: &DegreeSequence, caps: EnumerationCaps) -> Result<Realizations> {
    caps.check(d)?;
    Ok(Realizations::new(d))
}

fn require_graphic(d: &DegreeSequence) -> Result<()> {
    let v = is_graphic_eg(d);
    if v.is_graphic {
        Ok(())
    } else {
        Err(Error::NotGraphic(v))
    }
}

/// `ν*(d) = max ν(G)` over the enumerated realizations.
pub fn nu_star_brute(d: &DegreeSequence, caps: EnumerationCaps) -> Result<usize> {
    require_graphic(d)?;
    let ceiling = d.degrees().iter().filter(|&&x| x > 0).count() / 2;
    let mut best = 0;
    for g in enumerate_realizations(d, caps)? {
        best = best.max(matching_number(&g));
        if best == ceiling {
            break;
        }
    }
    Ok(best)
}

/// `ν̄(d) = min ν̄(G)` over the enumerated realizations.
pub fn nu_bar_sequence(d: &DegreeSequence, caps: EnumerationCaps) -> Result<usize> {
    require_graphic(d)?;
    let mut best = usize::MAX;
    for g in enumerate_realizations(d, caps)? {
        best = best.min(min_maximal_matching(&g)?.len());
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

fn induced(g: &Graph, vs: &[usize]) -> Graph {
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vs.iter().enumerate() {
        pos[v] = i;
    }
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
        .map(|(u, v)| (pos[u], pos[v]));
    Graph::from_edges(vs.len(), edges).expect("induced subgraph is simple")
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.iter().map(|&i| items[i]).collect());
        match next_combination(c, items.len()) {
            Some(n) => c = n,
            None => return out,
        }
    }
}

/// Whether some realization has a `δ/2`-matching whose covered degrees are,
/// as a multiset, exactly `{d_1, ..., d_δ}`.
pub fn strong_extension_check(d: &DegreeSequence, delta: usize, caps: EnumerationCaps) -> Result<bool> {
    require_graphic(d)?;
    if delta % 2 == 1 {
        return Err(Error::OddDelta(delta));
    }
    if delta == 0 {
        return Err(Error::DeltaTooSmall);
    }
    if delta > d.len() {
        return Err(Error::DeltaExceedsN { delta, n: d.len() });
    }
    let deg = d.degrees();
    let pivot = deg[delta - 1];
    let forced: Vec<usize> = (0..d.len()).filter(|&v| deg[v] > pivot).collect();
    let ties: Vec<usize> = (0..d.len()).filter(|&v| deg[v] == pivot).collect();
    let choices = combinations(&ties, delta - forced.len());
    for g in enumerate_realizations(d, caps)? {
        for pick in &choices {
            let mut cover = forced.clone();
            cover.extend(pick);
            if 2 * matching_number(&induced(&g, &cover)) == delta {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Non-increasing sequences of length `n` with entries in `1..=max_entry`,
/// in lexicographic order.
pub fn positive_arranged_sequences(n: usize, max_entry: usize) -> Vec<DegreeSequence> {
    fn go(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if cur.len() == n {
            out.push(DegreeSequence::from_degrees(cur.clone()));
            return;
        }
        for x in 1..=cap {
            cur.push(x);
            go(n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && max_entry > 0 {
        go(n, max_entry, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// All graphic sequences with positive entries and `1 <= n <= n_max`, in
/// lexicographic order.
pub fn graphic_sequences(n_max: usize) -> Vec<DegreeSequence> {
    let mut out: Vec<DegreeSequence> = (1..=n_max)
        .flat_map(|n| positive_arranged_sequences(n, n.saturating_sub(1)))
        .filter(|d| d.degree_sum() % 2 == 0 && is_graphic_eg(d).is_graphic)
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub sequence: DegreeSequence,
    pub nu_bar_d: usize,
    pub ell_star: usize,
    pub k_star: usize,
    pub equal: bool,
}

/// `ν̄(d)` against `ℓ*` and `k*` for every graphic sequence up to `n_max`.
///
/// Fails if any row has `ν̄(d) < ℓ*` or `ν̄(d) < k*`; equality is only
/// reported.
pub fn conjecture_scan(n_max: usize, caps: EnumerationCaps) -> Result<Vec<ConjectureRow>> {
    if n_max > caps.max_n {
        return Err(Error::CapExceeded { what: "conjecture scan (n)", actual: n_max, cap: caps.max_n });
    }
    let rows: Vec<Result<ConjectureRow>> = graphic_sequences(n_max)
        .into_par_iter()
        .map(|d| {
            let nu_bar_d = nu_bar_sequence(&d, caps)?;
            let ell_star = gale_ryser_bound(&d)?;
            let k_star = maximality_bound(&d)?;
            if nu_bar_d < ell_star || nu_bar_d < k_star {
                return Err(Error::Consistency(format!(
                    "ν̄({d}) = {nu_bar_d} below ℓ* = {ell_star} or k* = {k_star}"
                )));
            }
            Ok(ConjectureRow { equal: nu_bar_d == ell_star, sequence: d, nu_bar_d, ell_star, k_star })
        })
        .collect();
    rows.into_iter().collect()
}

/// `sequence;nu_bar;ell_star;k_star;equal`, with a header line.
pub fn conjecture_csv(rows: &[ConjectureRow]) -> String {
    let mut out = String::from("sequence;nu_bar;ell_star;k_star;equal\n");
    for r in rows {
        let _ = writeln!(out, "{};{};{};{};{}", r.sequence, r.nu_bar_d, r.ell_star, r.k_star, r.equal);
    }
    out
}
