//! Lower bounds on matchings that depend only on the degree sequence.
//!
//! | bound | holds for |
//! |---|---|
//! | [`maximality_bound`] (`k*`) | every maximal matching |
//! | [`gale_ryser_bound`] (`ℓ*`) | every maximal matching |
//! | [`matching_lower_bound`] | maximum matchings |
//! | [`vizing_bound`] | maximum matchings |
//! | [`posa_bound`] | maximum matchings |
//!
//! Every bound drops zero entries first: isolated vertices neither block nor
//! join a matching.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphicality::is_graphic_eg;
use crate::seq::DegreeSequence;

fn positive_graphic(d: &DegreeSequence) -> Result<(DegreeSequence, bool)> {
    let verdict = is_graphic_eg(d);
    if !verdict.is_graphic {
        return Err(Error::NotGraphic(verdict));
    }
    Ok(d.strip_zeros())
}

/// Prefix sums with `p[k] = d_1 + ... + d_k`, padded with the total past `n`.
fn prefix_sums(d: &DegreeSequence, upto: usize) -> Vec<i64> {
    let mut p = Vec::with_capacity(upto + 1);
    p.push(0i64);
    for k in 1..=upto {
        let next = p[k - 1] + d.degrees().get(k - 1).copied().unwrap_or(0) as i64;
        p.push(next);
    }
    p
}

/// `r(k) = sum_{i<=2k} d_i - m - k` on the zero-stripped sequence.
pub fn r_k(d: &DegreeSequence, k: usize) -> i64 {
    let (d, _) = d.strip_zeros();
    let m = (d.degree_sum() / 2) as i64;
    d.prefix_sum(2 * k) as i64 - m - k as i64
}

/// `k* = min{k : r(k) >= 0}`.
pub fn maximality_bound(d: &DegreeSequence) -> Result<usize> {
    let (d, _) = positive_graphic(d)?;
    let m = (d.degree_sum() / 2) as i64;
    let limit = d.len().div_ceil(2);
    let p = prefix_sums(&d, 2 * limit);
    (0..=limit)
        .find(|&k| p[2 * k] - m - k as i64 >= 0)
        .ok_or_else(|| Error::Consistency(format!("no k <= {limit} with r(k) >= 0")))
}

/// Exact `m / (Δ + 1)`, kept unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VizingBound {
    pub numerator: u64,
    pub denominator: u64,
}

impl VizingBound {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.numerator, self.denominator)
    }

    pub fn ceil(&self) -> u64 {
        self.numerator.div_ceil(self.denominator)
    }
}

pub fn vizing_bound(d: &DegreeSequence) -> VizingBound {
    let (d, _) = d.strip_zeros();
    VizingBound { numerator: d.degree_sum() / 2, denominator: d.max_degree() as u64 + 1 }
}

/// `t(q)`: number of entries not exceeding `q`.
pub fn low_degree_count(d: &DegreeSequence, q: usize) -> usize {
    d.degrees().iter().filter(|&&x| x <= q).count()
}

/// `r(G) = min{ℓ >= 1 : max_{0 <= q < (n-ℓ)/2} (t(q) - q + 1) <= ℓ}`, where an
/// empty range of `q` satisfies the condition.
pub fn posa_deficiency(d: &DegreeSequence) -> usize {
    let (d, _) = d.strip_zeros();
    let n = d.len();
    (1..=n.max(1))
        .find(|&ell| {
            (0..n)
                .take_while(|&q| 2 * q + ell < n)
                .all(|q| low_degree_count(&d, q) as i64 - (q as i64) < ell as i64)
        })
        .unwrap_or(n)
}

/// `ceil((n - r(G)) / 2)`.
pub fn posa_bound(d: &DegreeSequence) -> usize {
    let (d, _) = d.strip_zeros();
    let n = d.len();
    if n == 0 {
        return 0;
    }
    (n - posa_deficiency(&d)).div_ceil(2)
}

/// `ℓ* = min{ℓ : sum_{i<=2ℓ} min(d_i - 1, k) >= sum_{i=2ℓ+1}^{2ℓ+k} d_i, k = 1..n-2ℓ}`.
pub fn gale_ryser_bound(d: &DegreeSequence) -> Result<usize> {
    let (d, _) = positive_graphic(d)?;
    let deg = d.degrees();
    let n = deg.len();
    let holds = |ell: usize| {
        let top = 2 * ell;
        (1..=n.saturating_sub(top)).all(|k| {
            let lhs: usize = deg[..top.min(n)].iter().map(|&x| (x - 1).min(k)).sum();
            let rhs: usize = deg[top..top + k].iter().sum();
            lhs >= rhs
        })
    };
    Ok((0..=n.div_ceil(2)).find(|&ell| holds(ell)).unwrap_or(n.div_ceil(2)))
}

/// `min{k >= 0 : sum_{i<=k} 2 d_i + sum_{i=k+1}^{2k} d_i >= 2m}`.
pub fn matching_lower_bound(d: &DegreeSequence) -> Result<usize> {
    let (d, _) = positive_graphic(d)?;
    let two_m = d.degree_sum() as i64;
    let limit = d.len();
    let p = prefix_sums(&d, 2 * limit);
    (0..=limit)
        .find(|&k| p[k] + p[2 * k] >= two_m)
        .ok_or_else(|| Error::Consistency("matching lower bound not reached".into()))
}

/// All five bounds for one graphic sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub sequence: String,
    pub n: usize,
    pub m: u64,
    pub max_degree: usize,
    pub k_star: usize,
    pub ell_star: usize,
    #[serde(rename = "noP3")]
    pub no_p3: usize,
    pub vizing_num: u64,
    pub vizing_den: u64,
    pub vizing_ceil: u64,
    pub posa: usize,
    pub zeros_stripped: bool,
}

impl BoundReport {
    pub fn vizing(&self) -> VizingBound {
        VizingBound { numerator: self.vizing_num, denominator: self.vizing_den }
    }

    /// Largest bound valid for every maximal matching.
    pub fn maximal_floor(&self) -> usize {
        self.k_star.max(self.ell_star)
    }

    /// Largest bound valid for maximum matchings.
    pub fn maximum_floor(&self) -> usize {
        self.maximal_floor().max(self.no_p3).max(self.posa).max(self.vizing_ceil as usize)
    }
}

/// `m <= k* (2Δ - 1)`, the integer form of `m/(2Δ-1) <= k*`.
pub fn comparison_lemma_holds(m: u64, max_degree: usize, k_star: usize) -> bool {
    max_degree == 0 || m <= k_star as u64 * (2 * max_degree as u64 - 1)
}

pub fn bound_report(d: &DegreeSequence) -> Result<BoundReport> {
    let (stripped, zeros_stripped) = positive_graphic(d)?;
    let m = stripped.degree_sum() / 2;
    let max_degree = stripped.max_degree();
    let k_star = maximality_bound(&stripped)?;
    if !comparison_lemma_holds(m, max_degree, k_star) {
        return Err(Error::Consistency(format!(
            "m/(2Δ-1) = {m}/{} exceeds k* = {k_star}",
            2 * max_degree - 1
        )));
    }
    let viz = vizing_bound(&stripped);
    Ok(BoundReport {
        sequence: d.to_string(),
        n: stripped.len(),
        m,
        max_degree,
        k_star,
        ell_star: gale_ryser_bound(&stripped)?,
        no_p3: matching_lower_bound(&stripped)?,
        vizing_num: viz.numerator,
        vizing_den: viz.denominator,
        vizing_ceil: viz.ceil(),
        posa: posa_bound(&stripped),
        zeros_stripped,
    })
}
