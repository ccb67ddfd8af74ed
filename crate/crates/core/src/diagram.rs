//! Young diagrams of proper numerical sets.
//!
//! The diagram of `R` is cut out by the lattice path that walks `0, 1, ..., F`
//! stepping right on elements and up on gaps. Partitions list row lengths
//! from the top row down, so the top row has one box per nonzero small
//! element and the bottom row corresponds to the smallest gap.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerical_set::NumericalSet;

/// Non-increasing positive parts, top row first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NotAPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition("parts must be non-increasing".into()));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Self::new(parts.clone()).is_ok());
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition: rows and columns exchanged.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.width())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(s.into()))?
            .trim();
        if body.is_empty() {
            return Partition::new(Vec::new());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(s.into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Row lengths of the diagram of `R`.
///
/// Scans consecutive small elements from the top: the `q` gaps strictly
/// between `r_{i-1}` and `r_i` each give a row of length `i`.
pub fn partition_of(r: &NumericalSet) -> Result<Partition> {
    if !r.is_proper() {
        return Err(Error::NonProperInput);
    }
    let small = r.small_elements();
    let mut parts = Vec::with_capacity(r.genus());
    for i in (1..small.len()).rev() {
        let gaps_between = (small[i] - small[i - 1] - 1) as usize;
        parts.extend(std::iter::repeat_n(i, gaps_between));
    }
    Ok(Partition::from_parts_unchecked(parts))
}

/// The numerical set whose diagram is `p`; the empty partition gives the
/// nonnegative integers.
///
/// Walks the boundary path bottom row first: right steps up to the row's
/// length are elements, the step up past the row is a gap.
pub fn numerical_set_of(p: &Partition) -> Result<NumericalSet> {
    let mut small = Vec::with_capacity(p.width() + 1);
    let mut x = 0usize;
    let mut next = 0i64;
    for &row in p.parts().iter().rev() {
        for _ in x..row {
            small.push(next);
            next += 1;
        }
        x = row;
        // up step: `next` is a gap
        next += 1;
    }
    small.push(next);
    NumericalSet::from_small_elements(&small)
}

/// Hook lengths of the diagram, one row per part, top row first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookGrid {
    pub rows: Vec<Vec<i64>>,
}

impl HookGrid {
    /// Entries of the first column read bottom to top (the gaps of the set).
    pub fn first_column_upward(&self) -> Vec<i64> {
        self.rows.iter().rev().map(|row| row[0]).collect()
    }

    /// `\ytableaushort{...}` body: single digits inline, longer entries braced.
    pub fn ytableau_rows(&self) -> String {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&h| {
                        if (0..10).contains(&h) {
                            h.to_string()
                        } else {
                            format!("{{{h}}}")
                        }
                    })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Hook lengths row by row.
///
/// The top row is `F - r_j` over the left elements; each lower row drops
/// `p_{i-1} - p_i + 1` from the row above and keeps the positive entries.
pub fn hook_grid(r: &NumericalSet) -> Result<HookGrid> {
    let partition = partition_of(r)?;
    let f = r.frobenius();
    let parts = partition.parts();
    let mut rows = Vec::with_capacity(parts.len());
    let mut row: Vec<i64> = r
        .small_elements()
        .iter()
        .map(|x| f - x)
        .filter(|&h| h > 0)
        .collect();
    rows.push(row.clone());
    for i in 1..parts.len() {
        let drop = (parts[i - 1] - parts[i] + 1) as i64;
        row = row.iter().map(|h| h - drop).filter(|&h| h > 0).collect();
        rows.push(row.clone());
    }
    Ok(HookGrid { rows })
}

/// Hook lengths in column `i` (0-based): `{a - r_i : a a gap, a > r_i}`.
pub fn column_hook_set(r: &NumericalSet, i: usize) -> Result<Vec<i64>> {
    if !r.is_proper() {
        return Err(Error::NonProperInput);
    }
    let columns = r.nonzero_small_count();
    if i >= columns {
        return Err(Error::IndexOutOfRange { index: i, columns });
    }
    let ri = r.small_elements()[i];
    Ok(r.gaps()
        .into_iter()
        .filter(|&a| a > ri)
        .map(|a| a - ri)
        .collect())
}

/// Semigroup test through the diagram: every column's hook set sits inside
/// the first column's.
pub fn is_semigroup_via_hooks(r: &NumericalSet) -> Result<bool> {
    let first = column_hook_set(r, 0)?;
    for i in 1..r.nonzero_small_count() {
        if !column_hook_set(r, i)?
            .iter()
            .all(|h| first.binary_search(h).is_ok())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sorted union of all column hook sets.
pub fn union_of_column_hook_sets(r: &NumericalSet) -> Result<Vec<i64>> {
    if !r.is_proper() {
        return Err(Error::NonProperInput);
    }
    let mut all = Vec::new();
    for i in 0..r.nonzero_small_count() {
        all.extend(column_hook_set(r, i)?);
    }
    all.sort_unstable();
    all.dedup();
    Ok(all)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    LatexYdiagram,
    LatexHooks,
    Json,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Self::Ascii),
            "ydiagram" => Ok(Self::LatexYdiagram),
            "hooks" => Ok(Self::LatexHooks),
            "json" => Ok(Self::Json),
            _ => Err(Error::Parse(s.into())),
        }
    }
}

#[derive(Serialize)]
struct DiagramJson<'a> {
    small_elements: &'a [i64],
    gaps: Vec<i64>,
    frobenius: i64,
    conductor: i64,
    genus: usize,
    partition: &'a [usize],
    hooks: Vec<Vec<i64>>,
}

/// Renders the diagram of a proper set. Output has no trailing newline.
///
/// `Ascii` draws one `[hh]` cell per box holding its hook length, top row
/// first, cells padded to a common width (at least 4).
pub fn render(r: &NumericalSet, format: RenderFormat) -> Result<String> {
    let partition = partition_of(r)?;
    Ok(match format {
        RenderFormat::LatexYdiagram => {
            let parts = partition.to_string();
            format!("\\ydiagram{{{}}}", &parts[1..parts.len() - 1])
        }
        RenderFormat::LatexHooks => {
            let parts = partition.to_string();
            let grid = hook_grid(r)?;
            format!(
                "\\ytableaushort{{{}}}*{{{}}}",
                grid.ytableau_rows(),
                &parts[1..parts.len() - 1]
            )
        }
        RenderFormat::Ascii => {
            let grid = hook_grid(r)?;
            let digits = grid.rows[0][0].to_string().len();
            let inner = digits.max(2);
            grid.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|h| format!("[{h:>inner$}]"))
                        .collect::<String>()
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        RenderFormat::Json => {
            let grid = hook_grid(r)?;
            let json = DiagramJson {
                small_elements: r.small_elements(),
                gaps: r.gaps(),
                frobenius: r.frobenius(),
                conductor: r.conductor(),
                genus: r.genus(),
                partition: partition.parts(),
                hooks: grid.rows,
            };
            serde_json::to_string(&json).expect("plain data serializes")
        }
    })
}

pub fn render_partition(p: &Partition, format: RenderFormat) -> Result<String> {
    render(&numerical_set_of(p)?, format)
}
