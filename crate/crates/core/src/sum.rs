//! Bonded, end-to-end and conjoint sums of diagrams and numerical sets.
//!
//! For `R = {0, r_1, ..., r_n, →}` and `S = {0, s_1, ..., s_m, →}`:
//!
//! ```text
//! R ⊞_B S = {0, r_1, ..., r_{n-1}, r_n - 1, s_1 + r_n - 1, ..., s_m + r_n - 1, →}
//! R ⊞_E S = {0, r_1, ..., r_n,            s_1 + r_n,     ..., s_m + r_n,     →}
//! R ⊞_C S = {0, r_1, ..., r_{n-1},        s_1 + r_n - 1, ..., s_m + r_n - 1, →}
//! ```
//!
//! The nonnegative integers are accepted as a right operand of every sum and
//! as a left operand of the end-to-end sum only; `ℕ₀ ⊞_B R` and `ℕ₀ ⊞_C R`
//! are not numerical sets in general.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::diagram::Partition;
use crate::error::{Error, Result};
use crate::numerical_set::NumericalSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SumKind {
    Bonded,
    EndToEnd,
    Conjoint,
}

impl SumKind {
    pub const ALL: [SumKind; 3] = [SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint];

    /// The kind `k'` with `(R ⊞_k S)* = S* ⊞_k' R*`.
    pub fn dual(self) -> SumKind {
        match self {
            SumKind::Bonded => SumKind::Conjoint,
            SumKind::EndToEnd => SumKind::EndToEnd,
            SumKind::Conjoint => SumKind::Bonded,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SumKind::Bonded => "bonded",
            SumKind::EndToEnd => "e2e",
            SumKind::Conjoint => "conjoint",
        }
    }

    /// `⊞_B`, `⊞_E` or `⊞_C`.
    pub fn symbol(self) -> &'static str {
        match self {
            SumKind::Bonded => "⊞_B",
            SumKind::EndToEnd => "⊞_E",
            SumKind::Conjoint => "⊞_C",
        }
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bonded" | "b" => Ok(SumKind::Bonded),
            "e2e" | "end-to-end" | "e" => Ok(SumKind::EndToEnd),
            "conjoint" | "c" => Ok(SumKind::Conjoint),
            _ => Err(Error::Parse(s.into())),
        }
    }
}

impl Serialize for SumKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Diagram-level sum: glues `x` above `y`.
pub fn sum_partitions(y: &Partition, x: &Partition, kind: SumKind) -> Result<Partition> {
    if y.is_empty() || x.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let top = y.width();
    let (lift, rest) = match kind {
        SumKind::Bonded => (top, &y.parts()[1..]),
        SumKind::EndToEnd => (top, y.parts()),
        SumKind::Conjoint => (top - 1, y.parts()),
    };
    let mut parts: Vec<usize> = x.parts().iter().map(|mu| mu + lift).collect();
    parts.extend_from_slice(rest);
    Ok(Partition::from_parts_unchecked(parts))
}

/// Set-level sum.
pub fn sum_sets(r: &NumericalSet, s: &NumericalSet, kind: SumKind) -> Result<NumericalSet> {
    if !r.is_proper() {
        return match kind {
            SumKind::EndToEnd => Ok(s.clone()),
            _ => Err(Error::LeftIdentityUndefined(kind)),
        };
    }
    let rn = r.conductor();
    // ℕ₀ contributes its conductor 0 in place of s_1..s_m
    let tail: &[i64] = if s.is_proper() {
        &s.small_elements()[1..]
    } else {
        s.small_elements()
    };
    let mut small = r.left_elements().to_vec();
    let offset = match kind {
        SumKind::Bonded => {
            small.push(rn - 1);
            rn - 1
        }
        SumKind::EndToEnd => {
            small.push(rn);
            rn
        }
        SumKind::Conjoint => rn - 1,
    };
    small.extend(tail.iter().map(|x| x + offset));
    small.dedup();
    NumericalSet::from_small_elements(&small)
}

/// Gaps of `r ⊞ s` computed from the gaps of the operands alone.
///
/// With `F = F(R)`: bonded gives `G(R) ∖ {F} ∪ (F + G(S))`, end-to-end
/// `G(R) ∪ (F + 1 + G(S))`, conjoint `G(R) ∪ (F + G(S))`.
pub fn sum_gaps(r: &NumericalSet, s: &NumericalSet, kind: SumKind) -> Result<Vec<i64>> {
    if !r.is_proper() {
        return match kind {
            SumKind::EndToEnd => Ok(s.gaps()),
            _ => Err(Error::LeftIdentityUndefined(kind)),
        };
    }
    let mut gaps = r.gaps();
    let f = r.frobenius();
    if !s.is_proper() {
        if kind != SumKind::EndToEnd {
            gaps.pop();
        }
        return Ok(gaps);
    }
    let offset = match kind {
        SumKind::Bonded => {
            gaps.pop();
            f
        }
        SumKind::EndToEnd => f + 1,
        SumKind::Conjoint => f,
    };
    gaps.extend(s.gaps().into_iter().map(|b| b + offset));
    Ok(gaps)
}

/// Both sides of the duality law: `((R ⊞_k S)*, S* ⊞_k' R*)`.
pub fn dual_law(
    r: &NumericalSet,
    s: &NumericalSet,
    kind: SumKind,
) -> Result<(NumericalSet, NumericalSet)> {
    let left = sum_sets(r, s, kind)?.dual()?;
    let right = sum_sets(&s.dual()?, &r.dual()?, kind.dual())?;
    Ok((left, right))
}

/// Checks `R ⊞_E S = R ⊞_C {0,2,→} ⊞_B S`.
pub fn e_sum_factorization_check(r: &NumericalSet, s: &NumericalSet) -> Result<bool> {
    let two = NumericalSet::ordinary(2)?;
    let rhs = sum_sets(&sum_sets(r, &two, SumKind::Conjoint)?, s, SumKind::Bonded)?;
    Ok(sum_sets(r, s, SumKind::EndToEnd)? == rhs)
}

/// Left-to-right fold `((a ⊞ b) ⊞ c) ⊞ ...`.
pub fn fold_sets(operands: &[NumericalSet], kind: SumKind) -> Result<NumericalSet> {
    let (first, rest) = operands
        .split_first()
        .ok_or_else(|| Error::PreconditionFailed("no operands".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, x| sum_sets(&acc, x, kind))
}

pub fn fold_partitions(operands: &[Partition], kind: SumKind) -> Result<Partition> {
    let (first, rest) = operands
        .split_first()
        .ok_or_else(|| Error::PreconditionFailed("no operands".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, x| sum_partitions(&acc, x, kind))
}
