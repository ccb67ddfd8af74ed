//! Exhaustive enumeration of numerical sets and semigroups, definitional
//! oracles, and bounded verification of the structural results.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::decompose::{
    closure_conditions, closure_sum, collapse, compose_symmetric, decompose_almost_symmetric,
    decompose_almost_symmetric_semigroup, decompose_symmetric, decompose_symmetric_semigroup,
    pf_block, ClosureShape, SymmetricShape,
};
use crate::diagram::{is_semigroup_via_hooks, numerical_set_of, partition_of};
use crate::error::{Error, Result};
use crate::numerical_set::NumericalSet;
use crate::sum::{
    dual_law, e_sum_factorization_check, sum_gaps, sum_partitions, sum_sets, SumKind,
};

pub const DEFAULT_MAX_CONDUCTOR: u32 = 24;
pub const DEFAULT_MAX_GENUS: u32 = 14;

/// Upper limits on enumeration bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_conductor: u32,
    pub max_genus: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_conductor: DEFAULT_MAX_CONDUCTOR,
            max_genus: DEFAULT_MAX_GENUS,
        }
    }
}

impl Caps {
    /// No practical limit; the caller accepts the exponential cost.
    pub fn unlimited() -> Self {
        Self {
            max_conductor: 62,
            max_genus: 30,
        }
    }

    fn check_conductor(&self, c: u32) -> Result<()> {
        if c > self.max_conductor {
            return Err(Error::BoundTooLarge {
                bound: c,
                cap: self.max_conductor,
            });
        }
        Ok(())
    }

    fn check_genus(&self, g: u32) -> Result<()> {
        if g > self.max_genus {
            return Err(Error::BoundTooLarge {
                bound: g,
                cap: self.max_genus,
            });
        }
        Ok(())
    }
}

/// Iterator over the proper numerical sets of one conductor, in
/// lexicographic order of their small elements.
#[derive(Debug, Clone)]
pub struct SetsOfConductor {
    c: u32,
    next: Option<u64>,
}

impl Iterator for SetsOfConductor {
    type Item = NumericalSet;

    fn next(&mut self) -> Option<NumericalSet> {
        let mask = self.next?;
        self.next = mask.checked_sub(1);
        let width = self.c - 2;
        // element i of {1, ..., c-2} sits at bit width - i
        let mut small = Vec::with_capacity(mask.count_ones() as usize + 2);
        small.push(0);
        small.extend(
            (1..=width)
                .filter(|i| mask >> (width - i) & 1 == 1)
                .map(i64::from),
        );
        small.push(i64::from(self.c));
        Some(NumericalSet::from_canonical(small))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.next.map_or(0, |m| m as usize + 1);
        (n, Some(n))
    }
}

impl ExactSizeIterator for SetsOfConductor {}

/// All `2^(c-2)` proper numerical sets with conductor exactly `c`.
pub fn enumerate_sets(c: u32) -> Result<SetsOfConductor> {
    enumerate_sets_capped(c, &Caps::default())
}

pub fn enumerate_sets_capped(c: u32, caps: &Caps) -> Result<SetsOfConductor> {
    if c < 2 {
        return Err(Error::PreconditionFailed(format!("conductor {c} < 2")));
    }
    caps.check_conductor(c)?;
    Ok(SetsOfConductor {
        c,
        next: Some((1u64 << (c - 2)) - 1),
    })
}

/// All numerical semigroups of genus exactly `g`, by walking the genus tree:
/// the children of `S` are `S ∖ {x}` for each minimal generator `x > F(S)`.
/// Output is sorted.
pub fn enumerate_semigroups(g: u32) -> Result<Vec<NumericalSet>> {
    enumerate_semigroups_capped(g, &Caps::default())
}

pub fn enumerate_semigroups_capped(g: u32, caps: &Caps) -> Result<Vec<NumericalSet>> {
    caps.check_genus(g)?;
    let mut level = vec![NumericalSet::naturals()];
    for _ in 0..g {
        level = level
            .par_iter()
            .flat_map_iter(genus_tree_children)
            .collect();
    }
    level.sort();
    Ok(level)
}

fn genus_tree_children(s: &NumericalSet) -> Vec<NumericalSet> {
    let c = s.conductor();
    let generators = s
        .minimal_generators()
        .expect("genus tree nodes are semigroups");
    generators
        .into_iter()
        .filter(|&x| x >= c)
        .map(|x| {
            let mut small = s.left_elements().to_vec();
            small.extend(c..x);
            small.push(x + 1);
            NumericalSet::from_canonical(small)
        })
        .collect()
}

/// Semigroups of genus exactly `g` found by scanning every gap set of that
/// size with conductor at most `2g` through [`oracle::is_semigroup`].
pub fn enumerate_semigroups_brute(g: u32) -> Result<Vec<NumericalSet>> {
    Caps::default().check_genus(g)?;
    if g == 0 {
        return Ok(vec![NumericalSet::naturals()]);
    }
    let mut found: Vec<NumericalSet> = (g + 1..=2 * g)
        .into_par_iter()
        .flat_map_iter(|c| {
            // the Frobenius number c - 1 is always a gap; pick g - 1 more below it
            let width = c - 2;
            subsets_of_size(width, g - 1).filter_map(move |mask| {
                let gaps = (1..=width)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .map(i64::from);
                let mut small = vec![0];
                let mut gap_iter = gaps.peekable();
                for x in 1..=width as i64 {
                    if gap_iter.peek() == Some(&x) {
                        gap_iter.next();
                    } else {
                        small.push(x);
                    }
                }
                small.push(i64::from(c));
                let r = NumericalSet::from_canonical(small);
                oracle::is_semigroup(&r).then_some(r)
            })
        })
        .collect();
    found.sort();
    Ok(found)
}

/// Bitmasks over `width` bits with exactly `k` bits set, increasing.
fn subsets_of_size(width: u32, k: u32) -> impl Iterator<Item = u64> {
    let limit = 1u64 << width;
    let first = if k > width { limit } else { (1u64 << k) - 1 };
    std::iter::successors(Some(first), move |&v| {
        if v == 0 {
            return None;
        }
        // Gosper's hack
        let c = v & v.wrapping_neg();
        let r = v + c;
        Some((((r ^ v) >> 2) / c) | r)
    })
    .take_while(move |&v| v < limit)
}

/// Definitional checks that share no code with the main modules beyond
/// membership and the list of small elements.
pub mod oracle {
    use crate::numerical_set::NumericalSet;

    fn members_up_to(r: &NumericalSet, limit: i64) -> Vec<i64> {
        (0..=limit).filter(|&x| r.contains(x)).collect()
    }

    fn conductor(r: &NumericalSet) -> i64 {
        (0..=*r.small_elements().last().unwrap())
            .rev()
            .take_while(|&x| r.contains(x))
            .last()
            .unwrap_or(0)
    }

    pub fn gaps(r: &NumericalSet) -> Vec<i64> {
        (0..conductor(r)).filter(|&x| !r.contains(x)).collect()
    }

    /// Every pair of members sums to a member.
    pub fn is_semigroup(r: &NumericalSet) -> bool {
        let c = conductor(r);
        let elems = members_up_to(r, c);
        elems
            .iter()
            .all(|a| elems.iter().all(|b| r.contains(a + b)))
    }

    /// `x ∈ R` exactly when `F - x ∉ R`, for `0 ≤ x ≤ F`.
    pub fn is_symmetric(r: &NumericalSet) -> bool {
        let f = conductor(r) - 1;
        (0..=f).all(|x| r.contains(x) != r.contains(f - x))
    }

    /// Non-members `z` with `z + r ∈ R` for every nonzero member `r`.
    pub fn pseudo_frobenius(r: &NumericalSet) -> Vec<i64> {
        let c = conductor(r);
        let nonzero: Vec<i64> = members_up_to(r, c).into_iter().filter(|&x| x > 0).collect();
        (0..c)
            .filter(|&z| !r.contains(z) && nonzero.iter().all(|&x| r.contains(z + x)))
            .collect()
    }

    /// `{0} ∪ {F - a : a a gap, a ≠ F} ∪ {c, →}`.
    pub fn dual(r: &NumericalSet) -> NumericalSet {
        let c = conductor(r);
        let f = c - 1;
        let mut small = vec![0];
        small.extend(gaps(r).into_iter().filter(|&a| a != f).map(|a| f - a));
        small.push(c);
        small.sort_unstable();
        small.dedup();
        NumericalSet::from_small_elements(&small).expect("dual is a numerical set")
    }

    /// Semigroup with `2g = F + t`.
    pub fn is_almost_symmetric(r: &NumericalSet) -> bool {
        if conductor(r) == 0 || !is_semigroup(r) {
            return false;
        }
        2 * gaps(r).len() as i64 == conductor(r) - 1 + pseudo_frobenius(r).len() as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    Sets,
    Semigroups,
    Symmetric,
    AlmostSymmetric,
}

impl FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sets" => Ok(SetKind::Sets),
            "semigroups" => Ok(SetKind::Semigroups),
            "symmetric" => Ok(SetKind::Symmetric),
            "almost-symmetric" | "almost_symmetric" => Ok(SetKind::AlmostSymmetric),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundType {
    Conductor,
    Genus,
}

/// Which instances to enumerate. Bounds are inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSpec {
    pub kind: SetKind,
    pub bound_type: BoundType,
    pub bound: u32,
    pub min_type: Option<usize>,
    pub max_type: Option<usize>,
    /// Keep only semigroups whose pseudo-Frobenius block is (or is not)
    /// confined and consecutive.
    pub consecutive_pf: Option<bool>,
    pub caps: Caps,
}

impl EnumSpec {
    pub fn new(kind: SetKind, bound_type: BoundType, bound: u32) -> Self {
        Self {
            kind,
            bound_type,
            bound,
            min_type: None,
            max_type: None,
            consecutive_pf: None,
            caps: Caps::default(),
        }
    }

    pub fn by_conductor(kind: SetKind, bound: u32) -> Self {
        Self::new(kind, BoundType::Conductor, bound)
    }

    pub fn by_genus(kind: SetKind, bound: u32) -> Self {
        Self::new(kind, BoundType::Genus, bound)
    }

    /// Every instance, sorted by bound then lexicographically.
    pub fn instances(&self) -> Result<Vec<NumericalSet>> {
        let base: Vec<NumericalSet> = match (self.bound_type, self.kind) {
            (BoundType::Conductor, _) => {
                self.caps.check_conductor(self.bound)?;
                let per_c: Vec<Vec<NumericalSet>> = (2..=self.bound)
                    .into_par_iter()
                    .map(|c| {
                        enumerate_sets_capped(c, &self.caps)
                            .expect("bound checked")
                            .filter(|r| self.keep(r))
                            .collect()
                    })
                    .collect();
                per_c.into_iter().flatten().collect()
            }
            (BoundType::Genus, SetKind::Sets | SetKind::Symmetric) => {
                self.caps.check_genus(self.bound)?;
                // a set of genus g has conductor at most g + 1
                let mut out = Vec::new();
                for c in 2..=self.bound + 1 {
                    out.extend(
                        enumerate_sets_capped(c, &Caps::unlimited())?
                            .filter(|r| r.genus() <= self.bound as usize && self.keep(r)),
                    );
                }
                out.sort_by_key(|r| r.genus());
                out
            }
            (BoundType::Genus, _) => {
                let mut out = Vec::new();
                for g in 1..=self.bound {
                    out.extend(
                        enumerate_semigroups_capped(g, &self.caps)?
                            .into_iter()
                            .filter(|r| self.keep(r)),
                    );
                }
                out
            }
        };
        Ok(base)
    }

    fn keep(&self, r: &NumericalSet) -> bool {
        let kind_ok = match self.kind {
            SetKind::Sets => true,
            SetKind::Semigroups => oracle::is_semigroup(r),
            SetKind::Symmetric => oracle::is_symmetric(r),
            SetKind::AlmostSymmetric => oracle::is_almost_symmetric(r),
        };
        if !kind_ok {
            return false;
        }
        if self.min_type.is_some() || self.max_type.is_some() || self.consecutive_pf.is_some() {
            if !oracle::is_semigroup(r) {
                return false;
            }
            let t = oracle::pseudo_frobenius(r).len();
            if self.min_type.is_some_and(|m| t < m) || self.max_type.is_some_and(|m| t > m) {
                return false;
            }
            if let Some(want) = self.consecutive_pf {
                let has = pf_block(r).is_ok_and(|b| b.consecutive);
                if has != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Results of checking one structural property over bounded instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub instances: u64,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Properties that [`verify`] can check exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Set to partition and back, in both directions.
    Bijection,
    /// Semigroup iff every column hook set lies in the first column's.
    HookCriterion,
    /// Gap formulas for the three sums, and agreement with diagram sums.
    SumGaps,
    /// `(R ⊞ S)* = S* ⊞' R*`.
    SumDuality,
    /// Identity and associativity laws, and the end-to-end factorization.
    E2eMonoid,
    /// Symmetric sets split as `S ⊞ {0,2,→} ⊞ S*`.
    SymmetricDecomposition,
    /// The four `S`, `S*` constructions are symmetric.
    SymmetricConstruction,
    /// Symmetric semigroups split with `S` a semigroup.
    SymmetricSemigroup,
    /// The collapsed set is symmetric with conductor `co(R) - t + 1`, and the
    /// pseudo-Frobenius numbers pair up as `a_i + a_{t-i} = F`.
    Collapse,
    /// Almost symmetric semigroups split as `S ⊞ {0,t+1,→} ⊞ S*`.
    AlmostSymmetric,
    /// Almost symmetric semigroups split with `S` a semigroup.
    AlmostSymmetricSemigroup,
    /// The arithmetic closure conditions match a direct semigroup check.
    ClosureConditions,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Bijection,
        TheoremId::HookCriterion,
        TheoremId::SumGaps,
        TheoremId::SumDuality,
        TheoremId::E2eMonoid,
        TheoremId::SymmetricDecomposition,
        TheoremId::SymmetricConstruction,
        TheoremId::SymmetricSemigroup,
        TheoremId::Collapse,
        TheoremId::AlmostSymmetric,
        TheoremId::AlmostSymmetricSemigroup,
        TheoremId::ClosureConditions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Bijection => "bijection",
            TheoremId::HookCriterion => "hook-criterion",
            TheoremId::SumGaps => "sum-gaps",
            TheoremId::SumDuality => "sum-duality",
            TheoremId::E2eMonoid => "e2e-monoid",
            TheoremId::SymmetricDecomposition => "symmetric-decomposition",
            TheoremId::SymmetricConstruction => "symmetric-construction",
            TheoremId::SymmetricSemigroup => "symmetric-semigroup",
            TheoremId::Collapse => "collapse",
            TheoremId::AlmostSymmetric => "almost-symmetric",
            TheoremId::AlmostSymmetricSemigroup => "almost-symmetric-semigroup",
            TheoremId::ClosureConditions => "closure-conditions",
        }
    }

    /// A sensible instance family for `verify --bound`.
    pub fn default_spec(self, bound: u32) -> EnumSpec {
        use TheoremId::*;
        match self {
            Bijection
            | HookCriterion
            | SumGaps
            | SumDuality
            | E2eMonoid
            | SymmetricConstruction => EnumSpec::by_conductor(SetKind::Sets, bound),
            SymmetricDecomposition | SymmetricSemigroup => {
                EnumSpec::by_conductor(SetKind::Symmetric, bound)
            }
            Collapse | AlmostSymmetric | AlmostSymmetricSemigroup => {
                EnumSpec::by_genus(SetKind::AlmostSymmetric, bound)
            }
            ClosureConditions => EnumSpec::by_conductor(SetKind::Semigroups, bound),
        }
    }

    fn on_pairs(self) -> bool {
        matches!(
            self,
            TheoremId::SumGaps | TheoremId::SumDuality | TheoremId::E2eMonoid
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Outcome of one instance: how many checks ran and what failed.
#[derive(Default)]
struct Tally {
    checked: u64,
    failures: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }

    fn check(&mut self, ok: Result<bool>, label: impl FnOnce() -> String) {
        self.checked += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(label()),
            Err(e) => self.failures.push(format!("{} ({})", label(), e.name())),
        }
    }
}

/// Checks `theorem` over every instance of `spec`, in parallel.
pub fn verify(theorem: TheoremId, spec: &EnumSpec) -> Result<VerifyReport> {
    verify_with(theorem, spec, true)
}

/// As [`verify`]; with `parallel = false` the work runs on one thread and
/// yields the same counts and failures in the same order.
pub fn verify_with(theorem: TheoremId, spec: &EnumSpec, parallel: bool) -> Result<VerifyReport> {
    let start = Instant::now();
    let sets = spec.instances()?;
    let tally = if theorem.on_pairs() {
        let run = |r: &NumericalSet| {
            sets.iter()
                .map(|s| check_pair(theorem, r, s))
                .fold(Tally::default(), Tally::merge)
        };
        if parallel {
            sets.par_iter()
                .map(run)
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::default(), Tally::merge)
        } else {
            sets.iter().map(run).fold(Tally::default(), Tally::merge)
        }
    } else if parallel {
        sets.par_iter()
            .map(|r| check_one(theorem, r))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Tally::default(), Tally::merge)
    } else {
        sets.iter()
            .map(|r| check_one(theorem, r))
            .fold(Tally::default(), Tally::merge)
    };
    Ok(VerifyReport {
        theorem: theorem.name().to_string(),
        instances: tally.checked,
        failures: tally.failures,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn check_one(theorem: TheoremId, r: &NumericalSet) -> Tally {
    let mut t = Tally::default();
    let label = || r.to_string();
    match theorem {
        TheoremId::Bijection => t.check(
            (|| {
                let p = partition_of(r)?;
                let back = numerical_set_of(&p)?;
                Ok(back == *r && partition_of(&back)? == p && p.len() == r.genus())
            })(),
            label,
        ),
        TheoremId::HookCriterion => {
            if r.is_proper() {
                t.check(
                    is_semigroup_via_hooks(r)
                        .map(|h| h == oracle::is_semigroup(r) && h == r.is_semigroup()),
                    label,
                );
            }
        }
        TheoremId::SymmetricDecomposition => {
            if r.is_proper() && oracle::is_symmetric(r) && r.small_elements() != [0, 2] {
                t.check(
                    decompose_symmetric(r).map(|d| {
                        let half_in = r.contains(r.conductor() / 2);
                        let want = if half_in {
                            [SumKind::Conjoint, SumKind::Bonded]
                        } else {
                            [SumKind::Bonded, SumKind::Conjoint]
                        };
                        d.is_verified() && d.kinds == want
                    }),
                    label,
                );
            }
        }
        TheoremId::SymmetricConstruction => {
            if r.is_proper() {
                for shape in SymmetricShape::ALL {
                    t.check(
                        compose_symmetric(r, shape).map(|x| oracle::is_symmetric(&x)),
                        || format!("{r} {shape:?}"),
                    );
                }
            }
        }
        TheoremId::SymmetricSemigroup => {
            if r.is_proper()
                && oracle::is_symmetric(r)
                && oracle::is_semigroup(r)
                && r.small_elements() != [0, 2]
            {
                t.check(
                    decompose_symmetric_semigroup(r)
                        .map(|d| d.is_verified() && oracle::is_semigroup(&d.s)),
                    label,
                );
            }
        }
        TheoremId::Collapse => {
            if in_almost_symmetric_scope(r, true) {
                t.check(
                    (|| {
                        let pf = oracle::pseudo_frobenius(r);
                        let n = pf.len();
                        let f = pf[n - 1];
                        let paired = (0..n - 1).all(|i| pf[i] + pf[n - 2 - i] == f);
                        let c = collapse(r, n)?;
                        Ok(paired
                            && oracle::is_symmetric(&c)
                            && c.conductor() == r.conductor() - n as i64 + 1)
                    })(),
                    label,
                );
            }
        }
        TheoremId::AlmostSymmetric => {
            if in_almost_symmetric_scope(r, false) {
                t.check(
                    decompose_almost_symmetric(r).map(|d| d.is_verified()),
                    label,
                );
            }
        }
        TheoremId::AlmostSymmetricSemigroup => {
            if in_almost_symmetric_scope(r, false) {
                t.check(
                    decompose_almost_symmetric_semigroup(r)
                        .map(|d| d.is_verified() && oracle::is_semigroup(&d.s)),
                    label,
                );
            }
        }
        TheoremId::ClosureConditions => {
            if r.is_proper() && oracle::is_semigroup(r) {
                for tt in 3..=5 {
                    for shape in ClosureShape::ALL {
                        t.check(
                            (|| {
                                let stated = closure_conditions(r, tt, shape)?;
                                let direct = oracle::is_semigroup(&closure_sum(r, tt, shape)?);
                                Ok(stated == direct)
                            })(),
                            || format!("{r} t={tt} {}", shape.name()),
                        );
                    }
                }
            }
        }
        TheoremId::SumGaps | TheoremId::SumDuality | TheoremId::E2eMonoid => {
            unreachable!("pair theorems go through check_pair")
        }
    }
    t
}

/// Almost symmetric semigroups of type at least 2 whose pseudo-Frobenius
/// block is confined and consecutive; `with_base` keeps `{0,t+1,→}`.
fn in_almost_symmetric_scope(r: &NumericalSet, with_base: bool) -> bool {
    if !r.is_proper() || !oracle::is_almost_symmetric(r) {
        return false;
    }
    let t = oracle::pseudo_frobenius(r).len();
    if t < 2 || !pf_block(r).is_ok_and(|b| b.consecutive) {
        return false;
    }
    with_base || r.small_elements() != [0, t as i64 + 1]
}

fn check_pair(theorem: TheoremId, r: &NumericalSet, s: &NumericalSet) -> Tally {
    let mut t = Tally::default();
    if !r.is_proper() || !s.is_proper() {
        return t;
    }
    for kind in SumKind::ALL {
        let label = || format!("{r} {} {s}", kind.symbol());
        match theorem {
            TheoremId::SumGaps => t.check(
                (|| {
                    let sum = sum_sets(r, s, kind)?;
                    let diagram = sum_partitions(&partition_of(r)?, &partition_of(s)?, kind)?;
                    Ok(oracle::gaps(&sum) == sum_gaps(r, s, kind)?
                        && partition_of(&sum)? == diagram)
                })(),
                label,
            ),
            TheoremId::SumDuality => t.check(
                (|| {
                    let (lhs, rhs) = dual_law(r, s, kind)?;
                    Ok(lhs == rhs && lhs == oracle::dual(&sum_sets(r, s, kind)?))
                })(),
                label,
            ),
            TheoremId::E2eMonoid => t.check(
                (|| {
                    let two = NumericalSet::ordinary(2)?;
                    let assoc =
                        |a: &NumericalSet, b: &NumericalSet, c: &NumericalSet| -> Result<bool> {
                            Ok(sum_sets(&sum_sets(a, b, kind)?, c, kind)?
                                == sum_sets(a, &sum_sets(b, c, kind)?, kind)?)
                        };
                    let mut ok = assoc(r, s, r)? && assoc(s, r, s)? && assoc(r, s, &two)?;
                    if kind == SumKind::EndToEnd {
                        let n0 = NumericalSet::naturals();
                        ok &= sum_sets(&n0, r, kind)? == *r && sum_sets(r, &n0, kind)? == *r;
                        ok &= e_sum_factorization_check(r, s)?;
                    }
                    Ok(ok)
                })(),
                label,
            ),
            _ => unreachable!("single-instance theorems go through check_one"),
        }
    }
    t
}
