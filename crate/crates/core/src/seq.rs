//! Degree-sequence value type and its sequence-level primitives.
//!
//! All public indices (`delta`, support-set entries) are 1-based so that
//! position `i` refers to `d_i` of the arranged sequence `d_1 >= ... >= d_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing list of non-negative degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Builds an arranged sequence from arbitrary signed input, rejecting
    /// negative entries. Input order is irrelevant.
    pub fn make(values: &[i64]) -> Result<Self> {
        let mut degrees = Vec::with_capacity(values.len());
        for (index, &value) in values.iter().enumerate() {
            if value < 0 {
                return Err(Error::NegativeDegree { index, value });
            }
            degrees.push(value as usize);
        }
        Ok(Self::from_degrees(degrees))
    }

    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut degrees: Vec<usize> = degrees.into_iter().collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }

    /// `m = sum / 2`, only when the sum is even.
    pub fn edge_count(&self) -> Option<u64> {
        let s = self.degree_sum();
        s.is_multiple_of(2).then_some(s / 2)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn has_zeros(&self) -> bool {
        self.degrees.last() == Some(&0)
    }

    pub fn is_all_zero(&self) -> bool {
        self.max_degree() == 0
    }

    /// Drops zero entries; the flag reports whether any were present.
    pub fn strip_zeros(&self) -> (DegreeSequence, bool) {
        let stripped: Vec<usize> = self.degrees.iter().copied().filter(|&d| d > 0).collect();
        let had = stripped.len() != self.degrees.len();
        (DegreeSequence { degrees: stripped }, had)
    }

    /// 1-based access to `d_i`.
    pub fn get(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, n: self.len() });
        }
        Ok(self.degrees[i - 1])
    }

    /// Sum of the first `k` entries, with entries past `n` counted as zero.
    pub fn prefix_sum(&self, k: usize) -> u64 {
        self.degrees.iter().take(k).map(|&d| d as u64).sum()
    }

    /// `t_d(delta)`: how many later entries share `d_delta`, minus how many
    /// entries at or before `delta` do.
    pub fn t_d(&self, delta: usize) -> Result<i64> {
        let value = self.get(delta)?;
        let after = self.degrees[delta..].iter().filter(|&&d| d == value).count() as i64;
        let upto = self.degrees[..delta].iter().filter(|&&d| d == value).count() as i64;
        Ok(after - upto)
    }

    /// Subtracts one from each of the first `delta` entries. The result is
    /// returned raw and may not be arranged.
    pub fn reduce_top(&self, delta: usize) -> Result<Vec<usize>> {
        if delta > self.len() {
            return Err(Error::DeltaExceedsN { delta, n: self.len() });
        }
        let mut out = self.degrees.clone();
        for (i, d) in out.iter_mut().take(delta).enumerate() {
            *d = d.checked_sub(1).ok_or(Error::WouldGoNegative(i + 1))?;
        }
        Ok(out)
    }

    /// `d ∘ delta`: append `delta` and re-arrange. Parity is not checked here.
    pub fn augment(&self, delta: usize) -> Result<DegreeSequence> {
        if delta < 1 {
            return Err(Error::DeltaTooSmall);
        }
        if delta > self.len() {
            return Err(Error::DeltaExceedsN { delta, n: self.len() });
        }
        Ok(self.with_appended(delta))
    }

    /// Appends a degree with no range checks.
    pub(crate) fn with_appended(&self, d: usize) -> DegreeSequence {
        let mut degrees = self.degrees.clone();
        let pos = degrees.partition_point(|&x| x >= d);
        degrees.insert(pos, d);
        DegreeSequence { degrees }
    }

    /// `d - k` for a 0/1 vector given by its 1-based support. Not re-arranged.
    pub fn subtract_support(&self, support: &SupportSet) -> Result<Vec<usize>> {
        let mut out = self.degrees.clone();
        for &i in support.indices() {
            if i == 0 || i > out.len() {
                return Err(Error::IndexOutOfRange { index: i, n: out.len() });
            }
            out[i - 1] = out[i - 1].checked_sub(1).ok_or(Error::WouldGoNegative(i))?;
        }
        Ok(out)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence::from_degrees(v)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.degrees {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the comma-separated text format, e.g. `"3, 2,2,1"`.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DegreeSequence::default());
        }
        let values = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>().map_err(|_| Error::Parse(format!("bad degree {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::make(&values)
    }
}

/// The 1-based positions where a 0/1 vector is one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportSet {
    indices: Vec<usize>,
}

impl SupportSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if let Some(&first) = indices.first() {
            if first == 0 {
                return Err(Error::IndexOutOfRange { index: 0, n: 0 });
            }
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("support set must be strictly increasing".into()));
        }
        Ok(SupportSet { indices })
    }

    /// `{1, ..., size}`, the minimum of the left-shift order.
    pub fn leftmost(size: usize) -> Self {
        SupportSet { indices: (1..=size).collect() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `self ⪯ other`: equal size and positionwise `<=`.
    pub fn left_shift_leq(&self, other: &SupportSet) -> bool {
        self.len() == other.len() && self.indices.iter().zip(&other.indices).all(|(a, b)| a <= b)
    }
}

pub fn left_shift_leq(a: &SupportSet, b: &SupportSet) -> bool {
    a.left_shift_leq(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_degrees(v.to_vec())
    }

    fn set(v: &[usize]) -> SupportSet {
        SupportSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn make_arranges() {
        let d = DegreeSequence::make(&[3, 1, 2, 2]).unwrap();
        assert_eq!(d.degrees(), &[3, 2, 2, 1]);
        assert_eq!(DegreeSequence::make(&[]).unwrap().len(), 0);
        assert_eq!(DegreeSequence::make(&[2, -1]), Err(Error::NegativeDegree { index: 1, value: -1 }));
    }

    #[test]
    fn parse_text_format() {
        let d: DegreeSequence = " 3, 2,2 ,1".parse().unwrap();
        assert_eq!(d.degrees(), &[3, 2, 2, 1]);
        assert_eq!(d.to_string(), "3,2,2,1");
        assert!("3,x".parse::<DegreeSequence>().is_err());
        assert!("".parse::<DegreeSequence>().unwrap().is_empty());
    }

    #[test]
    fn t_d_examples() {
        assert_eq!(seq(&[3, 2, 2, 2, 1]).t_d(2).unwrap(), 1);
        assert_eq!(seq(&[2, 2, 2]).t_d(2).unwrap(), -1);
        assert_eq!(seq(&[3, 3, 2, 2, 2, 2]).t_d(4).unwrap(), 0);
        assert!(seq(&[2, 2]).t_d(0).is_err());
        assert!(seq(&[2, 2]).t_d(3).is_err());
    }

    #[test]
    fn left_shift_examples() {
        assert!(left_shift_leq(&set(&[1, 3]), &set(&[2, 3])));
        assert!(!left_shift_leq(&set(&[2, 3]), &set(&[1, 3])));
        assert!(!left_shift_leq(&set(&[1]), &set(&[1, 2])));
        assert!(SupportSet::new(vec![2, 2]).is_err());
    }

    #[test]
    fn reduce_top_examples() {
        assert_eq!(seq(&[3, 3, 2, 2]).reduce_top(2).unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(seq(&[2, 2, 2]).reduce_top(2).unwrap(), vec![1, 1, 2]);
        assert_eq!(seq(&[2, 2, 2]).reduce_top(0).unwrap(), vec![2, 2, 2]);
        assert!(matches!(seq(&[2]).reduce_top(2), Err(Error::DeltaExceedsN { .. })));
        assert_eq!(seq(&[1, 0]).reduce_top(2), Err(Error::WouldGoNegative(2)));
    }

    #[test]
    fn augment_examples() {
        assert_eq!(seq(&[2, 2, 2]).augment(2).unwrap().degrees(), &[2, 2, 2, 2]);
        assert_eq!(seq(&[1, 1]).augment(2).unwrap().degrees(), &[2, 1, 1]);
        assert!(matches!(seq(&[3, 1]).augment(4), Err(Error::DeltaExceedsN { .. })));
        assert_eq!(seq(&[3, 1]).augment(0), Err(Error::DeltaTooSmall));
    }

    #[test]
    fn large_sums_do_not_overflow() {
        let d = DegreeSequence::from_degrees(vec![1_000_000_000usize; 4]);
        assert_eq!(d.degree_sum(), 4_000_000_000);
        assert_eq!(d.edge_count(), Some(2_000_000_000));
    }

    fn arb_seq() -> impl Strategy<Value = DegreeSequence> {
        prop::collection::vec(1usize..8, 1..9).prop_map(DegreeSequence::from_degrees)
    }

    fn arb_set(n: usize, size: usize) -> impl Strategy<Value = SupportSet> {
        prop::sample::subsequence((1..=n).collect::<Vec<_>>(), size).prop_map(|v| SupportSet::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn reduce_then_restore_multiset(d in arb_seq(), frac in 0.0f64..=1.0) {
            let delta = ((d.len() as f64) * frac) as usize;
            let reduced = d.reduce_top(delta).unwrap();
            let restored: Vec<usize> = reduced
                .iter()
                .enumerate()
                .map(|(i, &x)| if i < delta { x + 1 } else { x })
                .collect();
            prop_assert_eq!(DegreeSequence::from_degrees(restored), d.clone());
            prop_assert_eq!(
                DegreeSequence::from_degrees(reduced).degree_sum() + delta as u64,
                d.degree_sum()
            );
        }

        #[test]
        fn left_shift_is_a_partial_order(
            (a, b, c) in (1usize..4).prop_flat_map(|size| (arb_set(6, size), arb_set(6, size), arb_set(6, size)))
        ) {
            prop_assert!(a.left_shift_leq(&a));
            if a.left_shift_leq(&b) && b.left_shift_leq(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.left_shift_leq(&b) && b.left_shift_leq(&c) {
                prop_assert!(a.left_shift_leq(&c));
            }
        }

        #[test]
        fn t_d_depends_only_on_value_block(d in arb_seq(), pick in 0usize..8) {
            let delta = pick % d.len() + 1;
            let v = d.get(delta).unwrap();
            let count = d.degrees().iter().filter(|&&x| x == v).count() as i64;
            let upto = d.degrees()[..delta].iter().filter(|&&x| x == v).count() as i64;
            prop_assert_eq!(d.t_d(delta).unwrap(), count - 2 * upto);
        }
    }
}
