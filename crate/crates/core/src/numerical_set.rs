//! Numerical sets: cofinite subsets of the nonnegative integers containing 0.
//!
//! A proper numerical set is stored as its small elements
//! `0 = r_0 < r_1 < ... < r_n = conductor`; every integer at or above the
//! conductor belongs to the set. The nonnegative integers themselves are the
//! one-element sequence `[0]` (conductor 0, Frobenius number -1).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted conductor. Keeps hook lengths and sums of three operands
/// comfortably inside `i64`.
pub const MAX_CONDUCTOR: i64 = 1 << 31;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSet {
    small: Vec<i64>,
}

impl NumericalSet {
    /// Builds a set from a list of small elements, the last entry standing for
    /// "this and everything above".
    ///
    /// Redundant trailing elements are folded into the conductor:
    /// `[0,3,6,7]` is `{0,3,6,→}` and `[0,1,2,3]` is the nonnegative integers.
    pub fn from_small_elements(seq: &[i64]) -> Result<Self> {
        validate(seq)?;
        let mut end = seq.len() - 1;
        while end > 0 && seq[end - 1] == seq[end] - 1 {
            end -= 1;
        }
        Ok(Self {
            small: seq[..=end].to_vec(),
        })
    }

    /// Like [`from_small_elements`](Self::from_small_elements) but rejects
    /// input that is not already in canonical form.
    pub fn from_small_elements_strict(seq: &[i64]) -> Result<Self> {
        let set = Self::from_small_elements(seq)?;
        if set.small.len() != seq.len() {
            return Err(Error::PreconditionFailed(format!(
                "{} is not canonical; the conductor is {}",
                join(seq),
                set.conductor()
            )));
        }
        Ok(set)
    }

    /// Builds the set whose gaps are exactly `gaps` (any order, no duplicates).
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        let mut sorted = gaps.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::PreconditionFailed("duplicate gap".into()));
        }
        if sorted.first().is_some_and(|&g| g <= 0) {
            return Err(Error::PreconditionFailed("gaps must be positive".into()));
        }
        let Some(&frobenius) = sorted.last() else {
            return Ok(Self::naturals());
        };
        if frobenius >= MAX_CONDUCTOR {
            return Err(Error::Overflow { max: MAX_CONDUCTOR });
        }
        let mut small = Vec::with_capacity((frobenius + 2) as usize - sorted.len());
        let mut gi = 0;
        for x in 0..=frobenius + 1 {
            if gi < sorted.len() && sorted[gi] == x {
                gi += 1;
            } else {
                small.push(x);
            }
        }
        Ok(Self { small })
    }

    /// The nonnegative integers, the only non-proper numerical set.
    pub fn naturals() -> Self {
        Self { small: vec![0] }
    }

    /// The ordinary set `{0, m, →}`; needs `m >= 2`.
    pub fn ordinary(m: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::PreconditionFailed(format!(
                "ordinary sets need m >= 2, got {m}"
            )));
        }
        if m > MAX_CONDUCTOR {
            return Err(Error::Overflow { max: MAX_CONDUCTOR });
        }
        Ok(Self { small: vec![0, m] })
    }

    /// Wraps an already canonical sequence. Callers guarantee the invariants.
    pub(crate) fn from_canonical(small: Vec<i64>) -> Self {
        debug_assert!(validate(&small).is_ok());
        debug_assert!(small.len() < 2 || small[small.len() - 2] != small[small.len() - 1] - 1);
        Self { small }
    }

    pub fn small_elements(&self) -> &[i64] {
        &self.small
    }

    /// Small elements below the conductor.
    pub fn left_elements(&self) -> &[i64] {
        if self.is_proper() {
            &self.small[..self.small.len() - 1]
        } else {
            &[]
        }
    }

    pub fn is_proper(&self) -> bool {
        self.small.len() > 1
    }

    pub fn conductor(&self) -> i64 {
        self.small[self.small.len() - 1]
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor() - 1
    }

    /// Number of nonzero small elements (the `n` of `{0, r_1, ..., r_n, →}`),
    /// which is also the column count of the Young diagram.
    pub fn nonzero_small_count(&self) -> usize {
        self.small.len() - 1
    }

    pub fn genus(&self) -> usize {
        self.conductor() as usize - self.nonzero_small_count()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        if self.is_proper() {
            self.small[1]
        } else {
            1
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor() || (x >= 0 && self.small.binary_search(&x).is_ok())
    }

    pub fn gaps(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.genus());
        let mut next = 0;
        for &r in &self.small {
            out.extend(next..r);
            next = r + 1;
        }
        out
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::NonProperInput)
        }
    }

    fn require_proper_semigroup(&self) -> Result<()> {
        self.require_proper()?;
        if self.is_semigroup() {
            Ok(())
        } else {
            Err(Error::NotASemigroup)
        }
    }

    /// The dual `{0} ∪ {F - a : a a gap, a ≠ F} ∪ {conductor, →}`.
    pub fn dual(&self) -> Result<Self> {
        self.require_proper()?;
        let f = self.frobenius();
        let gaps = self.gaps();
        let mut small = Vec::with_capacity(gaps.len() + 1);
        small.push(0);
        small.extend(gaps[..gaps.len() - 1].iter().rev().map(|a| f - a));
        small.push(self.conductor());
        Ok(Self::from_canonical(small))
    }

    /// Exactly one of `a`, `F - a` lies in the set for every `a` in `[0, F]`.
    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_proper()?;
        let f = self.frobenius();
        Ok((0..=f).all(|a| self.contains(a) != self.contains(f - a)))
    }

    /// Closure under addition. Sums involving the conductor or anything above
    /// it land at or above the conductor, so pairs of left elements suffice.
    pub fn is_semigroup(&self) -> bool {
        let left = self.left_elements();
        left.iter()
            .enumerate()
            .all(|(i, &a)| left[i..].iter().all(|&b| self.contains(a + b)))
    }

    /// Pseudo-Frobenius numbers in increasing order.
    ///
    /// Only gaps are scanned: for `z < 0` the element `F - z` is a nonzero
    /// member with `z + (F - z) = F` missing, so no negative `z` qualifies.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        self.require_proper_semigroup()?;
        let nonzero = &self.small[1..];
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&z| nonzero.iter().all(|&r| self.contains(z + r)))
            .collect())
    }

    /// Number of pseudo-Frobenius numbers.
    pub fn semigroup_type(&self) -> Result<usize> {
        Ok(self.pseudo_frobenius()?.len())
    }

    pub fn is_pseudo_symmetric(&self) -> Result<bool> {
        self.require_proper_semigroup()?;
        let f = self.frobenius();
        Ok(2 * self.genus() as i64 == f + 2 && f % 2 == 0)
    }

    /// `2g = F + t`.
    pub fn is_almost_symmetric(&self) -> Result<bool> {
        let t = self.semigroup_type()? as i64;
        Ok(2 * self.genus() as i64 == self.frobenius() + t)
    }

    /// Every gap `z` is pseudo-Frobenius or has `F - z` in the set.
    pub fn is_almost_symmetric_elementwise(&self) -> Result<bool> {
        let pf = self.pseudo_frobenius()?;
        let f = self.frobenius();
        Ok(self
            .gaps()
            .iter()
            .all(|&z| pf.binary_search(&z).is_ok() || self.contains(f - z)))
    }

    /// `a_i + a_{t-i} = a_t` for the sorted pseudo-Frobenius numbers.
    pub fn is_almost_symmetric_by_pairing(&self) -> Result<bool> {
        let pf = self.pseudo_frobenius()?;
        let t = pf.len();
        Ok((1..t).all(|i| pf[i - 1] + pf[t - i - 1] == pf[t - 1]))
    }

    /// Nonzero elements that are not a sum of two nonzero elements.
    ///
    /// Every `x >= conductor + multiplicity` is `m + (x - m)` with both
    /// summands in the set, so the scan stops below that.
    pub fn minimal_generators(&self) -> Result<Vec<i64>> {
        if !self.is_semigroup() {
            return Err(Error::NotASemigroup);
        }
        if !self.is_proper() {
            return Ok(vec![1]);
        }
        let limit = self.conductor() + self.multiplicity();
        Ok((1..limit)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..=x / 2).any(|y| self.contains(y) && self.contains(x - y)))
            .collect())
    }

    /// `{x - r : x in R, x >= r}` for a small element `r`.
    pub fn shift(&self, r: i64) -> Result<Self> {
        let idx = self
            .small
            .binary_search(&r)
            .map_err(|_| Error::NotAnElement(r))?;
        let shifted: Vec<i64> = self.small[idx..].iter().map(|x| x - r).collect();
        Self::from_small_elements(&shifted)
    }

    /// `{0} ∪ {s - 1 : s in R*, s >= 1}`.
    pub fn shift_down_dual(&self) -> Result<Self> {
        let dual = self.dual()?;
        let mut small = vec![0];
        small.extend(dual.small[1..].iter().map(|s| s - 1).filter(|&s| s > 0));
        Self::from_small_elements(&small)
    }

    pub fn report(&self) -> InvariantReport {
        let proper = self.is_proper();
        let is_semigroup = self.is_semigroup();
        let semigroup_facts = proper && is_semigroup;
        let pseudo_frobenius = if semigroup_facts {
            self.pseudo_frobenius().ok()
        } else {
            None
        };
        InvariantReport {
            small_elements: self.small.clone(),
            gaps: self.gaps(),
            genus: self.genus(),
            frobenius: self.frobenius(),
            conductor: self.conductor(),
            is_semigroup,
            is_symmetric: proper && self.is_symmetric().unwrap_or(false),
            is_pseudo_symmetric: semigroup_facts && self.is_pseudo_symmetric().unwrap_or(false),
            is_almost_symmetric: semigroup_facts && self.is_almost_symmetric().unwrap_or(false),
            semigroup_type: pseudo_frobenius.as_ref().map(Vec::len),
            pseudo_frobenius,
        }
    }

    /// Comma-separated small elements, e.g. `0,4,6,7,9,10,12`.
    pub fn literal(&self) -> String {
        join(&self.small)
    }
}

fn validate(seq: &[i64]) -> Result<()> {
    match seq.first() {
        Some(0) => {}
        _ => return Err(Error::NotStartingAtZero),
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing);
    }
    if seq[seq.len() - 1] > MAX_CONDUCTOR {
        return Err(Error::Overflow { max: MAX_CONDUCTOR });
    }
    Ok(())
}

pub(crate) fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},→}}", self.literal())
    }
}

impl fmt::Debug for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `0,4,6,7,9,10,12`, optionally wrapped in braces and followed by a
/// trailing `->` or `→`.
impl FromStr for NumericalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('{') {
            body = inner
                .strip_suffix('}')
                .ok_or_else(|| Error::Parse(s.into()))?;
        }
        let body = body.trim();
        let body = body
            .strip_suffix("->")
            .or_else(|| body.strip_suffix('→'))
            .unwrap_or(body)
            .trim_end()
            .trim_end_matches(',');
        let seq = body
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(s.into())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_small_elements(&seq)
    }
}

impl Serialize for NumericalSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.small.serialize(serializer)
    }
}

/// Everything `analyze` reports about a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub small_elements: Vec<i64>,
    pub gaps: Vec<i64>,
    pub genus: usize,
    pub frobenius: i64,
    pub conductor: i64,
    pub is_semigroup: bool,
    pub is_symmetric: bool,
    pub is_pseudo_symmetric: bool,
    pub is_almost_symmetric: bool,
    /// Present for proper semigroups only.
    pub pseudo_frobenius: Option<Vec<i64>>,
    #[serde(rename = "type")]
    pub semigroup_type: Option<usize>,
}
