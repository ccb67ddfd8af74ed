//! Decompositions of symmetric and almost symmetric numerical sets into sums
//! of a set `S`, an ordinary middle set and the dual of `S`.
//!
//! Every decomposition is built constructively and then re-evaluated; the
//! result carries the recomposed set so callers can confirm it matches.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerical_set::NumericalSet;
use crate::sum::{sum_sets, SumKind};

/// Which variant of `S*` closes the sum chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualForm {
    /// `S*`
    Dual,
    /// `S* - 1 = {s - 1 : s ∈ S*, s ≥ 1} ∪ {0}`
    DualMinusOne,
}

impl DualForm {
    pub fn name(self) -> &'static str {
        match self {
            DualForm::Dual => "dual",
            DualForm::DualMinusOne => "dual_minus_one",
        }
    }

    pub fn apply(self, s: &NumericalSet) -> Result<NumericalSet> {
        match self {
            DualForm::Dual => s.dual(),
            DualForm::DualMinusOne => s.shift_down_dual(),
        }
    }
}

impl Serialize for DualForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// `input = S ⊞ [middle ⊞] form(S)`, evaluated left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub input: NumericalSet,
    pub s: NumericalSet,
    pub s_form: DualForm,
    pub middle: Option<NumericalSet>,
    pub kinds: Vec<SumKind>,
    pub reconstructed: NumericalSet,
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    input: &'a NumericalSet,
    #[serde(rename = "S")]
    s: &'a NumericalSet,
    #[serde(rename = "S_form")]
    s_form: DualForm,
    middle: Option<&'a NumericalSet>,
    kinds: &'a [SumKind],
    verified: bool,
}

impl Decomposition {
    fn build(
        input: &NumericalSet,
        s: NumericalSet,
        s_form: DualForm,
        middle: Option<NumericalSet>,
        kinds: Vec<SumKind>,
    ) -> Result<Self> {
        let reconstructed = evaluate_chain(&s, middle.as_ref(), s_form, &kinds)?;
        Ok(Self {
            input: input.clone(),
            s,
            s_form,
            middle,
            kinds,
            reconstructed,
        })
    }

    pub fn is_verified(&self) -> bool {
        self.reconstructed == self.input
    }

    /// Re-evaluates the recorded chain.
    pub fn recompose(&self) -> Result<NumericalSet> {
        evaluate_chain(&self.s, self.middle.as_ref(), self.s_form, &self.kinds)
    }

    /// Human-readable shape, e.g. `R = S ⊞_C {0,4,→} ⊞_B S*`.
    pub fn formula(&self) -> String {
        let last = match self.s_form {
            DualForm::Dual => "S*",
            DualForm::DualMinusOne => "(S*-1)",
        };
        let mut out = String::from("R = S");
        let mut kinds = self.kinds.iter();
        if let Some(m) = &self.middle {
            let k = kinds
                .next()
                .expect("chain with a middle term has two kinds");
            out.push_str(&format!(" {} {m}", k.symbol()));
        }
        let k = kinds.next().expect("chain has at least one kind");
        out.push_str(&format!(" {} {last}", k.symbol()));
        out
    }

    pub fn to_json(&self) -> String {
        let json = DecompositionJson {
            input: &self.input,
            s: &self.s,
            s_form: self.s_form,
            middle: self.middle.as_ref(),
            kinds: &self.kinds,
            verified: self.is_verified(),
        };
        serde_json::to_string(&json).expect("plain data serializes")
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.formula())?;
        writeln!(f, "S = {}", self.s.literal())?;
        match &self.middle {
            Some(m) => writeln!(f, "middle = {}", m.literal())?,
            None => writeln!(f, "middle = none")?,
        }
        let kinds: Vec<&str> = self.kinds.iter().map(|k| k.name()).collect();
        writeln!(f, "kinds = {}", kinds.join(","))?;
        writeln!(f, "S_form = {}", self.s_form.name())?;
        write!(f, "verified = {}", self.is_verified())
    }
}

fn evaluate_chain(
    s: &NumericalSet,
    middle: Option<&NumericalSet>,
    s_form: DualForm,
    kinds: &[SumKind],
) -> Result<NumericalSet> {
    let closing = s_form.apply(s)?;
    let terms: Vec<&NumericalSet> = std::iter::once(s).chain(middle).chain([&closing]).collect();
    if kinds.len() + 1 != terms.len() {
        return Err(Error::PreconditionFailed(format!(
            "{} terms need {} kinds, got {}",
            terms.len(),
            terms.len() - 1,
            kinds.len()
        )));
    }
    let mut acc = terms[0].clone();
    for (term, &kind) in terms[1..].iter().zip(kinds) {
        acc = sum_sets(&acc, term, kind)?;
    }
    Ok(acc)
}

/// The four symmetric constructions from an arbitrary proper set `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricShape {
    /// `S ⊞_C {0,2,→} ⊞_B S*`
    Cb,
    /// `S ⊞_B {0,2,→} ⊞_C S*`
    Bc,
    /// `S* ⊞_C {0,2,→} ⊞_B S`
    CbDualFirst,
    /// `S* ⊞_B {0,2,→} ⊞_C S`
    BcDualFirst,
}

impl SymmetricShape {
    pub const ALL: [SymmetricShape; 4] = [
        SymmetricShape::Cb,
        SymmetricShape::Bc,
        SymmetricShape::CbDualFirst,
        SymmetricShape::BcDualFirst,
    ];
}

/// Builds a symmetric set from any proper `S`.
pub fn compose_symmetric(s: &NumericalSet, shape: SymmetricShape) -> Result<NumericalSet> {
    let dual = s.dual()?;
    let two = NumericalSet::ordinary(2)?;
    let (first, last, kinds) = match shape {
        SymmetricShape::Cb => (s, &dual, [SumKind::Conjoint, SumKind::Bonded]),
        SymmetricShape::Bc => (s, &dual, [SumKind::Bonded, SumKind::Conjoint]),
        SymmetricShape::CbDualFirst => (&dual, s, [SumKind::Conjoint, SumKind::Bonded]),
        SymmetricShape::BcDualFirst => (&dual, s, [SumKind::Bonded, SumKind::Conjoint]),
    };
    sum_sets(&sum_sets(first, &two, kinds[0])?, last, kinds[1])
}

fn require_symmetric(r: &NumericalSet) -> Result<()> {
    if !r.is_symmetric()? {
        return Err(Error::NotSymmetric);
    }
    if r.small_elements() == [0, 2] {
        return Err(Error::ExcludedBaseCase(r.to_string()));
    }
    Ok(())
}

/// Elements of `r` strictly below `bound`, closed off by `conductor`.
fn prefix_with_conductor(r: &NumericalSet, bound: i64, conductor: i64) -> Result<NumericalSet> {
    let mut small: Vec<i64> = r
        .small_elements()
        .iter()
        .copied()
        .take_while(|&x| x < bound)
        .collect();
    small.push(conductor);
    NumericalSet::from_small_elements(&small)
}

/// Splits a symmetric `R ≠ {0,2,→}` as `S ⊞_C {0,2,→} ⊞_B S*` when half the
/// conductor lies in `R`, and as `S ⊞_B {0,2,→} ⊞_C S*` otherwise.
pub fn decompose_symmetric(r: &NumericalSet) -> Result<Decomposition> {
    require_symmetric(r)?;
    let half = r.conductor() / 2;
    let two = NumericalSet::ordinary(2)?;
    if r.contains(half) {
        // half - 1 = F - half is a gap, so half is the conductor of S
        let s = prefix_with_conductor(r, half, half)?;
        Decomposition::build(
            r,
            s,
            DualForm::Dual,
            Some(two),
            vec![SumKind::Conjoint, SumKind::Bonded],
        )
    } else {
        // by symmetry half - 1 is an element
        let rk = half - 1;
        let s = prefix_with_conductor(r, rk, rk + 1)?;
        Decomposition::build(
            r,
            s,
            DualForm::Dual,
            Some(two),
            vec![SumKind::Bonded, SumKind::Conjoint],
        )
    }
}

/// Splits a symmetric semigroup `R ≠ {0,2,→}` with `S` itself a semigroup:
/// `R = S ⊞_E S*` when half the conductor lies in `R`, otherwise
/// `R = S ⊞_C (S* - 1)` with `S = {0, r_1, ..., r_k, r_k + 2, →}` and
/// `r_k = co(R)/2 - 1`.
pub fn decompose_symmetric_semigroup(r: &NumericalSet) -> Result<Decomposition> {
    require_symmetric(r)?;
    if !r.is_semigroup() {
        return Err(Error::NotASemigroup);
    }
    let half = r.conductor() / 2;
    let d = if r.contains(half) {
        let s = prefix_with_conductor(r, half, half)?;
        Decomposition::build(r, s, DualForm::Dual, None, vec![SumKind::EndToEnd])?
    } else {
        let rk = half - 1;
        let s = prefix_with_conductor(r, rk + 1, rk + 2)?;
        Decomposition::build(r, s, DualForm::DualMinusOne, None, vec![SumKind::Conjoint])?
    };
    if !d.s.is_semigroup() {
        return Err(Error::NotASemigroup);
    }
    Ok(d)
}

/// Position of the pseudo-Frobenius numbers below the Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PfBlockInfo {
    /// Sorted pseudo-Frobenius numbers; the last is the Frobenius number.
    pub pf: Vec<i64>,
    pub t: usize,
    /// Largest small element below the block.
    pub lower: i64,
    /// Smallest small element above the block.
    pub upper: i64,
    /// Index of `upper` among the small elements.
    pub k: usize,
    /// Block entries differ by one (vacuous for `t = 2`).
    pub consecutive: bool,
}

pub fn pf_block(r: &NumericalSet) -> Result<PfBlockInfo> {
    let pf = r.pseudo_frobenius()?;
    let t = pf.len();
    if t < 2 {
        return Err(Error::TypeTooSmall(t));
    }
    let small = r.small_elements();
    let k = small.partition_point(|&x| x < pf[0]);
    let (lower, upper) = (small[k - 1], small[k]);
    if pf[t - 2] > upper {
        return Err(Error::BlockSplit);
    }
    let consecutive = pf[..t - 1].windows(2).all(|w| w[1] - w[0] == 1);
    Ok(PfBlockInfo {
        pf,
        t,
        lower,
        upper,
        k,
        consecutive,
    })
}

/// Lowers every small element above the pseudo-Frobenius block by `t - 1`.
///
/// For an almost symmetric semigroup of type `t` whose block is consecutive
/// the result is a symmetric numerical set with conductor `co(R) - t + 1`.
/// Type 1 returns `R` unchanged.
pub fn collapse(r: &NumericalSet, t: usize) -> Result<NumericalSet> {
    let ty = r.semigroup_type()?;
    if ty != t {
        return Err(Error::PreconditionFailed(format!("type is {ty}, not {t}")));
    }
    if !r.is_almost_symmetric()? {
        return Err(Error::PreconditionFailed("not almost symmetric".into()));
    }
    if t == 1 {
        return Ok(r.clone());
    }
    let block = pf_block(r).map_err(|e| Error::PreconditionFailed(e.to_string()))?;
    if !block.consecutive {
        return Err(Error::PreconditionFailed(
            Error::NonConsecutivePF.to_string(),
        ));
    }
    collapse_block(r, &block)
}

fn collapse_block(r: &NumericalSet, block: &PfBlockInfo) -> Result<NumericalSet> {
    let drop = block.t as i64 - 1;
    let small: Vec<i64> = r
        .small_elements()
        .iter()
        .map(|&x| if x >= block.upper { x - drop } else { x })
        .collect();
    NumericalSet::from_small_elements(&small)
}

/// Validated almost symmetric input: its block and collapsed set.
fn almost_symmetric_setup(r: &NumericalSet) -> Result<(PfBlockInfo, NumericalSet)> {
    if !r.is_proper() {
        return Err(Error::NonProperInput);
    }
    if !r.is_semigroup() || !r.is_almost_symmetric()? {
        return Err(Error::NotAlmostSymmetric);
    }
    let t = r.semigroup_type()?;
    if t < 2 {
        return Err(Error::TypeTooSmall(t));
    }
    if r.small_elements() == [0, t as i64 + 1] {
        return Err(Error::ExcludedBaseCase(r.to_string()));
    }
    let block = pf_block(r)?;
    if !block.consecutive {
        return Err(Error::NonConsecutivePF);
    }
    let collapsed = collapse_block(r, &block)?;
    if collapsed.conductor() % 2 != 0 {
        return Err(Error::PreconditionFailed(format!(
            "collapsed set {collapsed} has odd conductor"
        )));
    }
    Ok((block, collapsed))
}

/// Splits an almost symmetric semigroup of type `t ≥ 2` with a consecutive
/// pseudo-Frobenius block as `S ⊞_C {0,t+1,→} ⊞_B S*` or
/// `S ⊞_B {0,t+1,→} ⊞_C S*`, choosing by whether half the conductor of the
/// collapsed set belongs to it.
pub fn decompose_almost_symmetric(r: &NumericalSet) -> Result<Decomposition> {
    let (block, collapsed) = almost_symmetric_setup(r)?;
    let t = block.t as i64;
    let middle = NumericalSet::ordinary(t + 1)?;
    if collapsed.contains(collapsed.conductor() / 2) {
        let s = prefix_with_conductor(r, block.lower + 1, block.upper - t + 1)?;
        Decomposition::build(
            r,
            s,
            DualForm::Dual,
            Some(middle),
            vec![SumKind::Conjoint, SumKind::Bonded],
        )
    } else {
        let s = prefix_with_conductor(r, block.lower, block.lower + 1)?;
        Decomposition::build(
            r,
            s,
            DualForm::Dual,
            Some(middle),
            vec![SumKind::Bonded, SumKind::Conjoint],
        )
    }
}

/// Variant of [`decompose_almost_symmetric`] in which `S` is a semigroup.
///
/// When half the collapsed conductor is an element the split is unchanged
/// (and equals `S ⊞_C {0,t,→} ⊞_E S*`). Otherwise
/// `S = {0, r_1, ..., r_{k-1}, r_{k-1} + 2, →}` and the split is `S ⊞_C S*`
/// for `t = 2` or `S ⊞_C {0,t-1,→} ⊞_C S*` for `t > 2`.
pub fn decompose_almost_symmetric_semigroup(r: &NumericalSet) -> Result<Decomposition> {
    let (block, collapsed) = almost_symmetric_setup(r)?;
    let t = block.t as i64;
    let d = if collapsed.contains(collapsed.conductor() / 2) {
        let s = prefix_with_conductor(r, block.lower + 1, block.upper - t + 1)?;
        let middle = NumericalSet::ordinary(t + 1)?;
        Decomposition::build(
            r,
            s,
            DualForm::Dual,
            Some(middle),
            vec![SumKind::Conjoint, SumKind::Bonded],
        )?
    } else {
        let s = prefix_with_conductor(r, block.lower + 1, block.lower + 2)?;
        if t == 2 {
            Decomposition::build(r, s, DualForm::Dual, None, vec![SumKind::Conjoint])?
        } else {
            let middle = NumericalSet::ordinary(t - 1)?;
            Decomposition::build(
                r,
                s,
                DualForm::Dual,
                Some(middle),
                vec![SumKind::Conjoint, SumKind::Conjoint],
            )?
        }
    };
    if !d.s.is_semigroup() {
        return Err(Error::NotASemigroup);
    }
    Ok(d)
}

/// Every `(shape, S)` with `S ⊞_C {0,2,→} ⊞_B S*` or `S ⊞_B {0,2,→} ⊞_C S*`
/// equal to `r`, found by trying all proper `S` with conductor up to
/// `co(R)/2 + 1`. Exponential in the conductor; meant for small sets.
pub fn symmetric_witnesses(r: &NumericalSet) -> Result<Vec<(SymmetricShape, NumericalSet)>> {
    if !r.is_proper() {
        return Err(Error::NonProperInput);
    }
    let mut found = Vec::new();
    for c in 2..=r.conductor() / 2 + 1 {
        for mask in 0..1u64 << (c - 2) {
            let mut small = vec![0];
            small.extend((1..c - 1).filter(|i| mask >> (i - 1) & 1 == 1));
            small.push(c);
            let s = NumericalSet::from_small_elements(&small)?;
            for shape in [SymmetricShape::Cb, SymmetricShape::Bc] {
                if compose_symmetric(&s, shape)? == *r {
                    found.push((shape, s.clone()));
                }
            }
        }
    }
    Ok(found)
}

/// Routes to the symmetric or almost symmetric decomposition.
pub fn decompose(r: &NumericalSet, semigroup_variant: bool) -> Result<Decomposition> {
    if r.is_symmetric()? {
        return if semigroup_variant {
            decompose_symmetric_semigroup(r)
        } else {
            decompose_symmetric(r)
        };
    }
    if semigroup_variant {
        decompose_almost_symmetric_semigroup(r)
    } else {
        decompose_almost_symmetric(r)
    }
}

/// The three sum shapes built from a semigroup `R`, a parameter `t` and `R*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureShape {
    /// `R ⊞_C {0,t+1,→} ⊞_B R*`
    Cb,
    /// `R ⊞_B {0,t+1,→} ⊞_C R*`
    Bc,
    /// `R ⊞_C {0,t-1,→} ⊞_C R*`
    Cc,
}

impl ClosureShape {
    pub const ALL: [ClosureShape; 3] = [ClosureShape::Cb, ClosureShape::Bc, ClosureShape::Cc];

    pub fn name(self) -> &'static str {
        match self {
            ClosureShape::Cb => "CB",
            ClosureShape::Bc => "BC",
            ClosureShape::Cc => "CC",
        }
    }
}

/// Evaluates `R ⊞ {0,m,→} ⊞ R*` for the given shape.
pub fn closure_sum(r: &NumericalSet, t: i64, shape: ClosureShape) -> Result<NumericalSet> {
    let dual = r.dual()?;
    let (m, kinds) = match shape {
        ClosureShape::Cb => (t + 1, [SumKind::Conjoint, SumKind::Bonded]),
        ClosureShape::Bc => (t + 1, [SumKind::Bonded, SumKind::Conjoint]),
        ClosureShape::Cc => (t - 1, [SumKind::Conjoint, SumKind::Conjoint]),
    };
    let middle = NumericalSet::ordinary(m)?;
    sum_sets(&sum_sets(r, &middle, kinds[0])?, &dual, kinds[1])
}

/// Arithmetic conditions on the small elements `r_0 = 0 < ... < r_n` of a
/// semigroup `R` for [`closure_sum`] to be a semigroup, for `t > 2`:
///
/// * `Cb`: `r_n, ..., r_n + t - 2` are minimal generators,
///   `t < r_{n-1} + r_1 - r_n + 2`, and `2r_n - r_i - r_j + t - 2 ≠ r_k`;
/// * `Bc`: `r_n, ..., r_n + t - 1` are minimal generators,
///   `t < r_{n-1} + r_1 - r_n + 1`, `r_n - r_i + t - 1 ≠ r_k` and
///   `2r_n - r_i - r_j + t - 2 ≠ r_k`;
/// * `Cc`: `r_n, ..., r_n + t - 3` are minimal generators,
///   `t < r_{n-1} + r_1 - r_n + 3`, and `2r_n - r_i - r_j + t - 4 ≠ r_k`;
///
/// with `i, j, k` ranging over `0..n`. The conditions are evaluated exactly
/// as stated. They characterize the semigroup property only when `R` has a
/// nonzero left element: for ordinary `R = {0,m,→}` the term `r_{n-1}` is
/// `r_0 = 0` and the answer can disagree with [`closure_sum`]
/// (e.g. `{0,2,→}`, `t = 3`, `Cb`).
pub fn closure_conditions(r: &NumericalSet, t: i64, shape: ClosureShape) -> Result<bool> {
    if t <= 2 {
        return Err(Error::TypeTooSmall(t.max(0) as usize));
    }
    if !r.is_proper() {
        return Err(Error::NonProperInput);
    }
    let generators = r.minimal_generators()?;
    let small = r.small_elements();
    let n = small.len() - 1;
    let rn = small[n];
    let left = &small[..n];
    let is_left = |x: i64| left.binary_search(&x).is_ok();
    let generates = |count: i64| (0..count).all(|j| generators.binary_search(&(rn + j)).is_ok());
    let bound = small[n - 1] + small[1] - rn;
    let pair_free = |offset: i64| {
        left.iter()
            .all(|&ri| left.iter().all(|&rj| !is_left(2 * rn - ri - rj + offset)))
    };
    Ok(match shape {
        ClosureShape::Cb => generates(t - 1) && t < bound + 2 && pair_free(t - 2),
        ClosureShape::Bc => {
            generates(t)
                && t < bound + 1
                && left.iter().all(|&ri| !is_left(rn - ri + t - 1))
                && pair_free(t - 2)
        }
        ClosureShape::Cc => generates(t - 2) && t < bound + 3 && pair_free(t - 4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[i64]) -> NumericalSet {
        NumericalSet::from_small_elements(xs).unwrap()
    }

    #[test]
    fn symmetric_case_half_in_set() {
        let d = decompose_symmetric(&set(&[0, 2, 5, 6, 8, 10])).unwrap();
        assert_eq!(d.s, set(&[0, 2, 5]));
        assert_eq!(d.kinds, vec![SumKind::Conjoint, SumKind::Bonded]);
        assert_eq!(d.middle, Some(set(&[0, 2])));
        assert!(d.is_verified());
        assert_eq!(d.s.dual().unwrap(), set(&[0, 1, 3, 5]));
    }

    #[test]
    fn symmetric_case_half_missing() {
        let d = decompose_symmetric(&set(&[0, 2, 5, 7, 8, 10, 12])).unwrap();
        assert_eq!(d.s, set(&[0, 2, 6]));
        assert_eq!(d.kinds, vec![SumKind::Bonded, SumKind::Conjoint]);
        assert!(d.is_verified());
        assert_eq!(d.s.dual().unwrap(), set(&[0, 1, 2, 4, 6]));

        let d = decompose_symmetric(&set(&[0, 1, 4])).unwrap();
        assert_eq!(d.s, set(&[0, 2]));
        assert_eq!(d.kinds, vec![SumKind::Bonded, SumKind::Conjoint]);
        assert!(d.is_verified());
    }

    #[test]
    fn symmetric_errors() {
        assert_eq!(
            decompose_symmetric(&set(&[0, 4, 6, 7, 9, 10, 12])),
            Err(Error::NotSymmetric)
        );
        assert!(matches!(
            decompose_symmetric(&set(&[0, 2])),
            Err(Error::ExcludedBaseCase(_))
        ));
        assert_eq!(
            decompose_symmetric(&NumericalSet::naturals()),
            Err(Error::NonProperInput)
        );
    }

    #[test]
    fn compose_symmetric_examples() {
        assert_eq!(
            compose_symmetric(&set(&[0, 2, 5]), SymmetricShape::Cb).unwrap(),
            set(&[0, 2, 5, 6, 8, 10])
        );
        for shape in SymmetricShape::ALL {
            assert!(compose_symmetric(&set(&[0, 2]), shape)
                .unwrap()
                .is_symmetric()
                .unwrap());
            let r = compose_symmetric(&set(&[0, 4, 6, 7, 9, 10, 12]), shape).unwrap();
            assert!(r.is_symmetric().unwrap(), "{shape:?}");
        }
    }

    #[test]
    fn symmetric_semigroup_examples() {
        // ⟨3,4⟩: half the conductor is an element
        let d = decompose_symmetric_semigroup(&set(&[0, 3, 4, 6])).unwrap();
        assert_eq!(d.s, set(&[0, 3]));
        assert_eq!(d.kinds, vec![SumKind::EndToEnd]);
        assert!(d.is_verified());
        // ⟨3,5⟩: it is not
        let d = decompose_symmetric_semigroup(&set(&[0, 3, 5, 6, 8])).unwrap();
        assert_eq!(d.s, set(&[0, 3, 5]));
        assert_eq!(d.s_form, DualForm::DualMinusOne);
        assert_eq!(d.kinds, vec![SumKind::Conjoint]);
        assert!(d.is_verified());
        assert!(d.s.is_semigroup());
        assert_eq!(d.formula(), "R = S ⊞_C (S*-1)");
    }

    #[test]
    fn symmetric_semigroup_rejects_non_semigroups() {
        assert_eq!(
            decompose_symmetric_semigroup(&set(&[0, 2, 5, 6, 8, 10])),
            Err(Error::NotASemigroup)
        );
        assert_eq!(
            decompose_symmetric_semigroup(&set(&[0, 2, 5, 7, 8, 10, 12])),
            Err(Error::NotASemigroup)
        );
        assert!(matches!(
            decompose_symmetric_semigroup(&set(&[0, 2])),
            Err(Error::ExcludedBaseCase(_))
        ));
    }

    #[test]
    fn pf_blocks() {
        let b = pf_block(&set(&[0, 4, 8, 12, 14, 15, 16, 18, 19, 20, 22])).unwrap();
        assert_eq!(
            (b.pf.clone(), b.t, b.lower, b.upper, b.consecutive),
            (vec![10, 11, 21], 3, 8, 12, true)
        );
        let b = pf_block(&set(&[0, 7, 9, 14, 16, 17, 18, 19, 20, 21, 23])).unwrap();
        assert_eq!(
            (b.pf.clone(), b.t, b.lower, b.upper, b.consecutive),
            (vec![10, 11, 12, 22], 4, 9, 14, true)
        );
        let b = pf_block(&set(&[0, 3, 4, 5])).unwrap();
        assert_eq!((b.pf.clone(), b.t, b.consecutive), (vec![1, 2], 2, true));
        assert_eq!(pf_block(&set(&[0, 2])), Err(Error::TypeTooSmall(1)));
        assert_eq!(pf_block(&set(&[0, 2, 3, 5])), Err(Error::NotASemigroup));
        // PF = {2,5,7}: 2 and 5 straddle the element 4
        assert_eq!(pf_block(&set(&[0, 4, 6, 8])), Err(Error::BlockSplit));
    }

    #[test]
    fn collapses() {
        let r = set(&[0, 4, 8, 12, 14, 15, 16, 18, 19, 20, 22]);
        let c = collapse(&r, 3).unwrap();
        assert_eq!(c, set(&[0, 4, 8, 10, 12, 13, 14, 16, 17, 18, 20]));
        assert!(c.is_symmetric().unwrap());
        assert_eq!(c.conductor(), r.conductor() - 3 + 1);
        let r = set(&[0, 7, 9, 14, 16, 17, 18, 19, 20, 21, 23]);
        assert_eq!(
            collapse(&r, 4).unwrap(),
            set(&[0, 7, 9, 11, 13, 14, 15, 16, 17, 18, 20])
        );
        let sym = set(&[0, 3, 5, 6, 8]);
        assert_eq!(collapse(&sym, 1).unwrap(), sym);
        assert!(matches!(
            collapse(&sym, 2),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn almost_symmetric_examples() {
        let d =
            decompose_almost_symmetric(&set(&[0, 4, 8, 12, 14, 15, 16, 18, 19, 20, 22])).unwrap();
        assert_eq!(d.s, set(&[0, 4, 8, 10]));
        assert_eq!(d.middle, Some(set(&[0, 4])));
        assert_eq!(d.kinds, vec![SumKind::Conjoint, SumKind::Bonded]);
        assert!(d.is_verified());
        assert_eq!(d.s.dual().unwrap(), set(&[0, 2, 3, 4, 6, 7, 8, 10]));
        assert_eq!(d.formula(), "R = S ⊞_C {0,4,→} ⊞_B S*");

        let d =
            decompose_almost_symmetric(&set(&[0, 7, 9, 14, 16, 17, 18, 19, 20, 21, 23])).unwrap();
        assert_eq!(d.s, set(&[0, 7, 10]));
        assert_eq!(d.middle, Some(set(&[0, 5])));
        assert_eq!(d.kinds, vec![SumKind::Bonded, SumKind::Conjoint]);
        assert!(d.is_verified());
        assert_eq!(d.s.dual().unwrap(), set(&[0, 1, 3, 4, 5, 6, 7, 8, 10]));
    }

    #[test]
    fn pseudo_symmetric_example() {
        // ⟨4,5,7⟩, type 2
        let d = decompose_almost_symmetric(&set(&[0, 4, 5, 7])).unwrap();
        assert_eq!(d.s, set(&[0, 3]));
        assert_eq!(d.middle, Some(set(&[0, 3])));
        assert!(d.is_verified());
        // {0,3,4,5,→} is {0,3,→}, the excluded base case for t = 2
        assert!(matches!(
            decompose_almost_symmetric(&set(&[0, 3, 4, 5])),
            Err(Error::ExcludedBaseCase(_))
        ));
    }

    #[test]
    fn almost_symmetric_errors() {
        assert_eq!(
            decompose_almost_symmetric(&set(&[0, 3, 5, 6, 8])),
            Err(Error::TypeTooSmall(1))
        );
        assert_eq!(
            decompose_almost_symmetric(&set(&[0, 2, 3, 5])),
            Err(Error::NotAlmostSymmetric)
        );
        // ⟨3,7,8⟩ = {0,3,6,→}: type 2 but 2g = 8 ≠ F + t = 7
        assert_eq!(
            decompose_almost_symmetric(&set(&[0, 3, 6])),
            Err(Error::NotAlmostSymmetric)
        );
    }

    #[test]
    fn almost_symmetric_semigroup_examples() {
        let r = set(&[0, 4, 8, 12, 14, 15, 16, 18, 19, 20, 22]);
        let d = decompose_almost_symmetric_semigroup(&r).unwrap();
        assert_eq!(d.s, set(&[0, 4, 8, 10]));
        assert!(d.s.is_semigroup());
        assert!(d.is_verified());
        // alternative end-to-end form
        let alt = sum_sets(
            &sum_sets(&d.s, &NumericalSet::ordinary(3).unwrap(), SumKind::Conjoint).unwrap(),
            &d.s.dual().unwrap(),
            SumKind::EndToEnd,
        )
        .unwrap();
        assert_eq!(alt, r);

        // t = 4, half missing: S ⊞_C {0,3,→} ⊞_C S*
        let d =
            decompose_almost_symmetric_semigroup(&set(&[0, 7, 9, 14, 16, 17, 18, 19, 20, 21, 23]))
                .unwrap();
        assert_eq!(d.s, set(&[0, 7, 9, 11]));
        assert_eq!(d.middle, Some(set(&[0, 3])));
        assert_eq!(d.kinds, vec![SumKind::Conjoint, SumKind::Conjoint]);
        assert!(d.is_verified());

        // t = 3, half missing: S ⊞_C {0,2,→} ⊞_C S*
        let d = decompose_almost_symmetric_semigroup(&set(&[0, 4, 8, 9, 10, 12])).unwrap();
        assert_eq!(d.s, set(&[0, 4, 6]));
        assert_eq!(d.middle, Some(set(&[0, 2])));
        assert!(d.is_verified());

        // pseudo-symmetric, half missing: S ⊞_C S*
        let d = decompose_almost_symmetric_semigroup(&set(&[0, 3, 6, 7, 9])).unwrap();
        assert_eq!(d.s, set(&[0, 3, 5]));
        assert_eq!(d.middle, None);
        assert_eq!(d.kinds, vec![SumKind::Conjoint]);
        assert!(d.is_verified());
    }

    #[test]
    fn dispatch() {
        let d = decompose(&set(&[0, 4, 8, 12, 14, 15, 16, 18, 19, 20, 22]), false).unwrap();
        assert_eq!(d.middle, Some(set(&[0, 4])));
        let d = decompose(&set(&[0, 2, 5, 6, 8, 10]), false).unwrap();
        assert_eq!(d.s, set(&[0, 2, 5]));
        assert_eq!(
            decompose(&set(&[0, 4, 6, 7, 9, 10, 12]), false),
            Err(Error::NotAlmostSymmetric)
        );
        assert_eq!(
            decompose(&NumericalSet::naturals(), false),
            Err(Error::NonProperInput)
        );
    }

    #[test]
    fn json_and_display() {
        let d =
            decompose_almost_symmetric(&set(&[0, 4, 8, 12, 14, 15, 16, 18, 19, 20, 22])).unwrap();
        assert_eq!(
            d.to_json(),
            r#"{"input":[0,4,8,12,14,15,16,18,19,20,22],"S":[0,4,8,10],"S_form":"dual","middle":[0,4],"kinds":["conjoint","bonded"],"verified":true}"#
        );
        assert_eq!(
            d.to_string(),
            "R = S ⊞_C {0,4,→} ⊞_B S*\nS = 0,4,8,10\nmiddle = 0,4\nkinds = conjoint,bonded\nS_form = dual\nverified = true"
        );
    }

    #[test]
    fn closure_condition_edge_cases() {
        assert_eq!(
            closure_conditions(&set(&[0, 3, 5, 6, 8]), 2, ClosureShape::Cb),
            Err(Error::TypeTooSmall(2))
        );
        assert_eq!(
            closure_conditions(&set(&[0, 2, 3, 5]), 3, ClosureShape::Cb),
            Err(Error::NotASemigroup)
        );
        // ordinary R: the stated conditions say no, the sum is a semigroup anyway
        let two = set(&[0, 2]);
        assert!(!closure_conditions(&two, 3, ClosureShape::Cb).unwrap());
        let sum = closure_sum(&two, 3, ClosureShape::Cb).unwrap();
        assert_eq!(sum, set(&[0, 4, 6]));
        assert!(sum.is_semigroup());
        // the t - 1 middle of the Cc shape
        assert_eq!(
            closure_sum(&two, 3, ClosureShape::Cc).unwrap(),
            sum_sets(
                &sum_sets(&two, &set(&[0, 2]), SumKind::Conjoint).unwrap(),
                &two,
                SumKind::Conjoint
            )
            .unwrap()
        );
    }
}
