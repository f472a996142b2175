//! Graphicality (Erdős–Gallai and Havel–Hakimi), Havel–Hakimi realization,
//! extension feasibility `d ∘ δ`, and the maximum matching number over all
//! realizations `ν*(d)` computed two independent ways.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seq::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphicVerdict {
    pub is_graphic: bool,
    /// Smallest checked index `k` where the Erdős–Gallai inequality fails.
    pub failing_k: Option<usize>,
    pub parity_ok: bool,
}

/// Which indices the Erdős–Gallai test inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgMode {
    /// Only `k <= s` with `d_k > d_{k+1}`, plus `k = s`, where `s = max{i : d_i >= i}`.
    JumpLoci,
    /// Every `k = 1..n`.
    All,
}

/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)` on an arranged slice.
fn eg_holds_at(d: &[usize], k: usize) -> bool {
    let lhs: u64 = d[..k].iter().map(|&x| x as u64).sum();
    let k64 = k as u64;
    let rhs: u64 = k64 * (k64.saturating_sub(1)) + d[k..].iter().map(|&x| (x as u64).min(k64)).sum::<u64>();
    lhs <= rhs
}

pub fn eg_verdict(d: &DegreeSequence, mode: EgMode) -> GraphicVerdict {
    let parity_ok = d.degree_sum().is_multiple_of(2);
    if !parity_ok {
        return GraphicVerdict { is_graphic: false, failing_k: None, parity_ok };
    }
    let deg = d.degrees();
    let n = deg.len();
    let at = |i: usize| if i <= n { deg[i - 1] } else { 0 };
    let failing_k = match mode {
        EgMode::All => (1..=n).find(|&k| !eg_holds_at(deg, k)),
        EgMode::JumpLoci => {
            let s = (1..=n).filter(|&i| deg[i - 1] >= i).max().unwrap_or(0);
            (1..=s).filter(|&k| k == s || at(k) > at(k + 1)).find(|&k| !eg_holds_at(deg, k))
        }
    };
    GraphicVerdict { is_graphic: failing_k.is_none(), failing_k, parity_ok }
}

/// Erdős–Gallai test restricted to jump loci.
pub fn is_graphic_eg(d: &DegreeSequence) -> GraphicVerdict {
    eg_verdict(d, EgMode::JumpLoci)
}

/// Graphicality of an arbitrary (not necessarily arranged) list.
pub fn is_graphic_list(values: &[usize]) -> bool {
    is_graphic_eg(&DegreeSequence::from_degrees(values.iter().copied())).is_graphic
}

/// Havel–Hakimi: repeatedly lay off the largest entry against the next ones.
pub fn is_graphic_hh(d: &DegreeSequence) -> bool {
    let mut rest: Vec<usize> = d.degrees().to_vec();
    loop {
        rest.sort_unstable_by(|a, b| b.cmp(a));
        while rest.last() == Some(&0) {
            rest.pop();
        }
        let Some((&top, tail)) = rest.split_first() else { return true };
        if top > tail.len() {
            return false;
        }
        let mut next = tail.to_vec();
        for x in next.iter_mut().take(top) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
        rest = next;
    }
}

fn require_graphic(d: &DegreeSequence) -> Result<()> {
    let v = is_graphic_eg(d);
    if v.is_graphic {
        Ok(())
    } else {
        Err(Error::NotGraphic(v))
    }
}

/// Havel–Hakimi realization. Vertex `i` receives target degree `d_{i+1}`.
///
/// The vertex with the largest residual degree (lowest index on ties) is
/// joined to the vertices with the next largest residuals (lowest index on
/// ties), then retired.
pub fn realize_hh(d: &DegreeSequence) -> Result<Graph> {
    require_graphic(d)?;
    let n = d.len();
    let mut residual: Vec<usize> = d.degrees().to_vec();
    let mut g = Graph::empty(n);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let hub = order[0];
        let need = residual[hub];
        if need == 0 {
            break;
        }
        for &w in &order[1..=need] {
            if residual[w] == 0 {
                return Err(Error::Consistency("Havel–Hakimi ran out of partners".into()));
            }
            residual[w] -= 1;
            g.add_edge(hub, w)?;
        }
        residual[hub] = 0;
    }
    Ok(g)
}

/// Whether `d ∘ δ` is graphic, decided on the top-reduced sequence.
pub fn extension_feasible(d: &DegreeSequence, delta: usize) -> Result<bool> {
    require_graphic(d)?;
    if delta % 2 == 1 {
        return Err(Error::OddDelta(delta));
    }
    if delta == 0 {
        return Err(Error::DeltaTooSmall);
    }
    match d.reduce_top(delta) {
        Ok(reduced) => Ok(is_graphic_list(&reduced)),
        Err(Error::WouldGoNegative(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Largest even `δ` with `d ∘ δ` graphic, by binary search on `μ = δ/2`
/// over `[1, floor(n/2)]`. Feasibility is monotone in `δ`.
pub fn delta_star(d: &DegreeSequence) -> Result<usize> {
    require_graphic(d)?;
    if d.is_all_zero() {
        return Err(Error::AllZero);
    }
    let feasible = |mu: usize| extension_feasible(d, 2 * mu);
    let (mut lo, mut hi) = (1usize, d.len() / 2);
    if !feasible(lo)? {
        return Err(Error::Consistency("d ∘ 2 not graphic for a graphic non-zero d".into()));
    }
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if feasible(mid)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(2 * lo)
}

/// `ν*(d)` from the closed-form inequality system: the largest `μ` such that
///
/// * for every `1 <= k < μ`:
///   `sum_{i<=k} d_i <= k^2 + sum_{i>k} min(d_i - [i <= 2μ], k)`, and
/// * at `k = 2μ + t_d(2μ)`:
///   `sum_{i<=k} d_i - k + #{i > 2μ : d_i = d_2μ} <= k(k-1) + sum_{i>k} min(d_i - [d_i = d_2μ], k)`.
///
/// Zero entries are dropped first; they never take part in a matching.
pub fn nu_star_formula(d: &DegreeSequence) -> Result<usize> {
    require_graphic(d)?;
    let (d, _) = d.strip_zeros();
    if d.is_empty() {
        return Err(Error::AllZero);
    }
    for mu in (1..=d.len() / 2).rev() {
        if small_k_family_holds(&d, mu) && tie_block_inequality_holds(&d, mu)? {
            return Ok(mu);
        }
    }
    Err(Error::Consistency("no μ >= 1 satisfies the inequality system".into()))
}

fn small_k_family_holds(d: &DegreeSequence, mu: usize) -> bool {
    let deg = d.degrees();
    let top = 2 * mu;
    (1..mu).all(|k| {
        let kk = k as i64;
        let lhs = d.prefix_sum(k) as i64;
        let rhs: i64 = kk * kk
            + deg
                .iter()
                .enumerate()
                .skip(k)
                .map(|(idx, &x)| {
                    let reduced = x as i64 - i64::from(idx < top);
                    reduced.min(kk)
                })
                .sum::<i64>();
        lhs <= rhs
    })
}

fn tie_block_inequality_holds(d: &DegreeSequence, mu: usize) -> Result<bool> {
    let deg = d.degrees();
    let delta = 2 * mu;
    let pivot = d.get(delta)?;
    let k = delta as i64 + d.t_d(delta)?;
    if k < 0 || k as usize > deg.len() {
        return Err(Error::Consistency(format!("tie-block index {k} out of range")));
    }
    let ku = k as usize;
    let ties_after = deg[delta..].iter().filter(|&&x| x == pivot).count() as i64;
    let lhs = d.prefix_sum(ku) as i64 - k + ties_after;
    let rhs = k * (k - 1).max(0)
        + deg[ku..].iter().map(|&x| (x as i64 - i64::from(x == pivot)).min(k)).sum::<i64>();
    Ok(lhs <= rhs)
}

/// `ν*(d)` as `δ*/2`, cross-checked against [`nu_star_formula`].
pub fn nu_star(d: &DegreeSequence) -> Result<usize> {
    let by_search = delta_star(d)? / 2;
    let by_formula = nu_star_formula(d)?;
    if by_search != by_formula {
        return Err(Error::Consistency(format!(
            "ν*({d}): δ*/2 = {by_search} but closed form gives {by_formula}"
        )));
    }
    Ok(by_search)
}
