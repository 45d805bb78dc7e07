//! Littlewood–Richardson fillings, coefficients and skew Schur expansions.
//!
//! Fillings are generated by backtracking over the boxes in reading order
//! (top row first, each row right to left). In that order the reading word
//! is built left to right, so the ballot condition is checked incrementally
//! and the output comes out sorted by reading word.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape, StaircaseSpec};
use crate::tableaux::{is_lattice, Content, Tableau};

/// A finite integer combination of Schur functions of a common degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut e = SchurExpansion::zero(degree);
        for (nu, c) in terms {
            e.add_term(nu, c)?;
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `coeff * s_nu`, dropping the term if it cancels.
    pub fn add_term(&mut self, nu: Partition, coeff: i64) -> Result<()> {
        if nu.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: nu.size(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(nu).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn coefficient(&self, nu: &Partition) -> i64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    /// Terms in lexicographically descending order of the index partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term indexed by a partition with more than `m` parts.
    pub fn restrict(&self, m: usize) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= m)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    /// Coefficientwise `self - other`.
    pub fn checked_sub(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (nu, &c) in &other.terms {
            out.add_term(nu.clone(), c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("expansion serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    nu: Vec<usize>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            degree: self.degree,
            terms: self
                .terms()
                .map(|(p, c)| TermJson {
                    nu: p.parts().to_vec(),
                    coeff: c,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ExpansionJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Partition::new(t.nu).map(|p| (p, t.coeff)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SchurExpansion::from_terms(raw.degree, terms).map_err(serde::de::Error::custom)
    }
}

/// Box layout in reading order, with back-references to the already-placed
/// right neighbour and the box above.
struct ReadingLayout {
    cells: Vec<(usize, usize)>,
    right: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl ReadingLayout {
    fn new(shape: &SkewShape) -> Self {
        let mut cells = Vec::with_capacity(shape.size());
        let mut index = HashMap::new();
        for r in 0..shape.num_rows() {
            let off = shape.row_offset(r);
            for c in (off..off + shape.row_len(r)).rev() {
                index.insert((r, c), cells.len());
                cells.push((r, c));
            }
        }
        let right = cells
            .iter()
            .map(|&(r, c)| index.get(&(r, c + 1)).copied())
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| r.checked_sub(1).and_then(|up| index.get(&(up, c)).copied()))
            .collect();
        ReadingLayout {
            cells,
            right,
            above,
        }
    }
}

struct Search<'a, F> {
    layout: &'a ReadingLayout,
    filter: Option<&'a [usize]>,
    max_entry: usize,
    word: Vec<usize>,
    counts: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize], &[usize])> Search<'_, F> {
    fn run(&mut self, pos: usize) {
        if pos == self.layout.cells.len() {
            (self.visit)(&self.word, &self.counts);
            return;
        }
        let lo = self.layout.above[pos].map_or(1, |a| self.word[a] + 1);
        let hi =
            self.layout.right[pos].map_or(self.max_entry, |r| self.word[r].min(self.max_entry));
        for v in lo..=hi {
            if v > 1 {
                // counts stay a partition along a lattice prefix, so once the
                // previous value is absent every larger value is blocked too
                if self.counts[v - 1] == 0 {
                    break;
                }
                if self.counts[v] >= self.counts[v - 1] {
                    continue;
                }
            }
            if let Some(f) = self.filter {
                if self.counts[v] >= f.get(v - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.word[pos] = v;
            self.run(pos + 1);
            self.counts[v] -= 1;
        }
    }
}

/// Calls `visit(reading_word, counts)` for every LR filling of `shape`;
/// `counts[v]` is the multiplicity of value `v` (index 0 unused).
pub fn for_each_lr_filling<F>(
    shape: &SkewShape,
    content: Option<&Content>,
    max_entry: Option<usize>,
    visit: F,
) where
    F: FnMut(&[usize], &[usize]),
{
    let n = shape.size();
    if let Some(c) = content {
        if c.total() != n {
            return;
        }
    }
    let max_entry = max_entry.unwrap_or(n).min(n.max(1));
    let layout = ReadingLayout::new(shape);
    let mut search = Search {
        layout: &layout,
        filter: content.map(Content::counts),
        max_entry,
        word: vec![0; n],
        counts: vec![0; max_entry + 2],
        visit,
    };
    search.run(0);
}

/// All semistandard fillings of `shape` with lattice reading word, optionally
/// restricted to a content and/or an entry bound, sorted by reading word.
pub fn enumerate_lr_tableaux(
    shape: &SkewShape,
    content: Option<&Content>,
    max_entry: Option<usize>,
) -> Vec<Tableau> {
    let layout_rows = shape.row_lengths();
    let mut out = Vec::new();
    for_each_lr_filling(shape, content, max_entry, |word, _| {
        let mut rows = Vec::with_capacity(layout_rows.len());
        let mut at = 0;
        for &len in &layout_rows {
            let mut row = word[at..at + len].to_vec();
            row.reverse();
            rows.push(row);
            at += len;
        }
        out.push(Tableau::new(shape.clone(), rows).expect("fillings match their shape"));
    });
    out
}

/// Number of LR fillings grouped by content.
pub fn lr_content_counts(shape: &SkewShape, max_entry: Option<usize>) -> BTreeMap<Partition, u64> {
    let mut raw: HashMap<Vec<usize>, u64> = HashMap::new();
    for_each_lr_filling(shape, None, max_entry, |_, counts| {
        *raw.entry(counts[1..].to_vec()).or_insert(0) += 1;
    });
    raw.into_iter()
        .map(|(c, n)| {
            (
                Partition::new(c).expect("lattice contents are partitions"),
                n,
            )
        })
        .collect()
}

/// `c^outer_{inner, nu}`: LR fillings of `outer / inner` with content `nu`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, nu: &Partition) -> Result<u64> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    if outer.size() != inner.size() + nu.size() {
        return Err(Error::SizeMismatch {
            left: outer.size(),
            right: inner.size() + nu.size(),
        });
    }
    let mut count = 0u64;
    for_each_lr_filling(&shape, Some(&Content::from(nu)), None, |_, _| count += 1);
    Ok(count)
}

/// `s_shape` in the Schur basis; with `num_vars = Some(m)` only terms with at
/// most `m` parts survive.
pub fn skew_schur_expansion(shape: &SkewShape, num_vars: Option<usize>) -> Result<SchurExpansion> {
    let mut e = SchurExpansion::zero(shape.size());
    for (nu, count) in lr_content_counts(shape, num_vars) {
        e.add_term(nu, i64::try_from(count).map_err(|_| Error::Overflow)?)?;
    }
    Ok(e)
}

/// The only LR filling of `Δ_n`: row `i` (from the top) is `1, 2, ..., i`.
pub fn unique_delta_filling(n: usize) -> Tableau {
    let rows = (1..=n).map(|i| (1..=i).collect()).collect();
    Tableau::new(SkewShape::delta(n), rows).expect("staircase rows fit Δ_n")
}

/// Places a straight-shape foundation filling under the unique filling of
/// `Δ_n`, giving a tableau of shape `S(p, k, n)`.
///
/// Hypotheses (checked): `k <= 1`, `p_1 <= n + k`, the filling of `p ⊕ Δ_n`
/// is semistandard with lattice reading word, and the first foundation row
/// holds at most `k` ones.
pub fn shift_join(foundation: &Tableau, k: usize, n: usize) -> Result<Tableau> {
    if k > 1 {
        return Err(Error::Precondition(format!(
            "shift_join needs k <= 1, got {k}"
        )));
    }
    if !foundation.shape().is_straight() {
        return Err(Error::Precondition(
            "foundation must have straight shape".into(),
        ));
    }
    let lambda = foundation.shape().outer().clone();
    if lambda.first() > n + k {
        return Err(Error::Precondition(format!(
            "lambda_1 <= n + k violated: {} > {}",
            lambda.first(),
            n + k
        )));
    }
    if !foundation.is_semistandard() {
        return Err(Error::Precondition("foundation is not semistandard".into()));
    }
    let delta = unique_delta_filling(n);
    let mut word = delta.reading_word();
    word.extend(foundation.reading_word());
    if !is_lattice(&word) {
        return Err(Error::Precondition(
            "reading word of the foundation under Δ_n is not lattice".into(),
        ));
    }
    let ones = foundation
        .rows()
        .first()
        .map_or(0, |r| r.iter().filter(|&&v| v == 1).count());
    if ones > k {
        return Err(Error::Precondition(format!(
            "first foundation row has {ones} entries equal to 1, at most k = {k} allowed"
        )));
    }
    let spec = StaircaseSpec::new(lambda, k, n)?;
    let mut rows = delta.into_rows();
    rows.extend(foundation.rows().iter().cloned());
    let joined = Tableau::new(spec.shape(), rows)?;
    if !joined.is_semistandard() {
        return Err(Error::Bijection(format!(
            "joined tableau {joined} is not semistandard"
        )));
    }
    Ok(joined)
}

/// The foundation rows of a tableau of shape `S(λ, k, n)` with `k <= 1`, as a
/// straight-shape tableau.
pub fn split_foundation(t: &Tableau, spec: &StaircaseSpec) -> Result<Tableau> {
    if spec.k > 1 {
        return Err(Error::Precondition("foundation split needs k <= 1".into()));
    }
    if t.shape() != &spec.shape() {
        return Err(Error::ShapeMismatch(format!(
            "tableau shape {} is not S = {}",
            t.shape(),
            spec.shape()
        )));
    }
    Tableau::straight(t.rows()[spec.n..].to_vec())
}
