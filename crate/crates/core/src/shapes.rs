//! Partitions, skew diagrams and staircases with a bad foundation.
//!
//! A [`SkewShape`] is always kept in canonical form: no empty leading or
//! trailing rows and no empty leading columns, so two shapes with the same
//! box set (up to translation) compare equal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(n, n-1, ..., 1)`; empty for `n <= 0`.
    pub fn staircase(n: isize) -> Self {
        debug_assert!(n >= -1, "staircase index below -1");
        let n = n.max(0) as usize;
        Partition {
            parts: (1..=n).rev().collect(),
        }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.first())
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// True if the Ferrers diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// True iff every part after the first equals 1.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// All partitions `p` with `lower ⊆ p ⊆ upper`, in lexicographically
    /// descending order.
    pub fn between(lower: &Partition, upper: &Partition) -> Vec<Partition> {
        fn rec(
            i: usize,
            cap: usize,
            lower: &Partition,
            upper: &Partition,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == upper.len() {
                out.push(Partition::new(cur.clone()).expect("generated parts are decreasing"));
                return;
            }
            let hi = cap.min(upper.get(i));
            let lo = lower.get(i);
            if lo > hi {
                return;
            }
            for v in (lo..=hi).rev() {
                cur.push(v);
                rec(i + 1, v, lower, upper, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if upper.contains(lower) {
            rec(0, usize::MAX, lower, upper, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All partitions of `n`, lexicographically descending.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for v in (1..=cap.min(rem)).rev() {
                cur.push(v);
                rec(rem - v, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Partition::new(parts)
    }
}

/// A skew diagram `outer / inner` in canonical form.
///
/// Row `i` occupies columns `inner[i] .. outer[i]` (0-based, half-open).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(Self::canonical(outer.parts(), inner.parts()))
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    fn canonical(outer: &[usize], inner: &[usize]) -> Self {
        let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
        let rows = outer.len();
        let nonempty = |i: usize| at(outer, i) > at(inner, i);
        let Some(top) = (0..rows).find(|&i| nonempty(i)) else {
            return SkewShape {
                outer: Partition::empty(),
                inner: Partition::empty(),
            };
        };
        let bottom = (0..rows).rev().find(|&i| nonempty(i)).unwrap();
        let shift = at(inner, bottom);
        let o = (top..=bottom).map(|i| at(outer, i) - shift).collect();
        let n = (top..=bottom).map(|i| at(inner, i) - shift).collect();
        SkewShape {
            outer: Partition::new(o).expect("rows of a partition stay decreasing"),
            inner: Partition::new(n).expect("rows of a partition stay decreasing"),
        }
    }

    /// The 180° rotation of the staircase `δ_n`: outer `(n^n)`, inner `δ_{n-1}`.
    pub fn delta(n: usize) -> Self {
        SkewShape::canonical(
            Partition::rectangle(n, n).parts(),
            Partition::staircase(n as isize - 1).parts(),
        )
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_offset(&self, row: usize) -> usize {
        self.inner.get(row)
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.get(row) - self.inner.get(row)
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows()).map(|r| self.row_len(r)).collect()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Boxes as `(row, column)` pairs, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_rows())
            .flat_map(move |r| (self.row_offset(r)..self.outer.get(r)).map(move |c| (r, c)))
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row < self.num_rows() && self.inner.get(row) <= col && col < self.outer.get(row)
    }

    /// Length of the longest column.
    pub fn max_column_len(&self) -> usize {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (0..oc.len())
            .map(|c| oc.get(c) - ic.get(c))
            .max()
            .unwrap_or(0)
    }

    /// Connectivity under edge adjacency. Rows of a skew shape are intervals
    /// and columns are intervals too, so it suffices that no row is empty and
    /// consecutive rows share a column.
    pub fn is_connected(&self) -> bool {
        let rows = self.num_rows();
        (0..rows).all(|r| self.row_len(r) > 0)
            && (1..rows).all(|r| self.outer.get(r) > self.inner.get(r - 1))
    }

    /// Diagonal direct sum: `other` strictly above and to the right of `self`,
    /// sharing no row or column.
    pub fn direct_sum(&self, other: &SkewShape) -> SkewShape {
        let width = self.outer.first();
        let mut outer: Vec<usize> = other.outer.parts().iter().map(|p| p + width).collect();
        let mut inner: Vec<usize> = (0..other.num_rows())
            .map(|r| other.inner.get(r) + width)
            .collect();
        outer.extend_from_slice(self.outer.parts());
        inner.extend((0..self.num_rows()).map(|r| self.inner.get(r)));
        SkewShape::canonical(&outer, &inner)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewShape({self})")
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (o, i) = match s.split_once('/') {
            Some((o, i)) => (o.parse()?, i.parse()?),
            None => (s.parse()?, Partition::empty()),
        };
        SkewShape::new(o, i)
    }
}

/// The triple `(λ, k, n)` describing a staircase with bad foundation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct StaircaseSpec {
    pub lambda: Partition,
    pub k: usize,
    pub n: usize,
}

impl StaircaseSpec {
    pub fn new(lambda: Partition, k: usize, n: usize) -> Result<Self> {
        let spec = StaircaseSpec { lambda, k, n };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the defining constraints, naming the first one that fails.
    pub fn validate(&self) -> Result<()> {
        let StaircaseSpec { lambda, k, n } = self;
        let (k, n) = (*k, *n);
        if n == 0 {
            return Err(Error::InvalidSpec("n must be positive".into()));
        }
        let base = Partition::staircase(k as isize - 1);
        if !lambda.contains(&base) {
            return Err(Error::InvalidSpec(format!(
                "lambda {lambda} does not contain the staircase {base}"
            )));
        }
        if lambda.first() < k {
            return Err(Error::InvalidSpec(format!(
                "k <= lambda_1 violated: k = {k}, lambda_1 = {}",
                lambda.first()
            )));
        }
        if lambda.first() > n + k {
            return Err(Error::InvalidSpec(format!(
                "lambda_1 <= n + k violated: lambda_1 = {}, n + k = {}",
                lambda.first(),
                n + k
            )));
        }
        let foundation = SkewShape::canonical(lambda.parts(), base.parts());
        if !foundation.is_connected() {
            return Err(Error::InvalidSpec(format!(
                "foundation {lambda}/{base} is not connected"
            )));
        }
        Ok(())
    }

    /// The same spec with the foundation transposed.
    pub fn transposed(&self) -> Result<Self> {
        StaircaseSpec::new(self.lambda.conjugate(), self.k, self.n)
    }

    /// `S(λ, k, n)` realised as `μ / δ_{n+k-1}` with `μ = ((n+k)^n, λ_1, λ_2, ...)`.
    pub fn shape(&self) -> SkewShape {
        let width = self.n + self.k;
        let mut outer = vec![width; self.n];
        outer.extend_from_slice(self.lambda.parts());
        let inner = Partition::staircase(width as isize - 1);
        SkewShape::canonical(&outer, inner.parts())
    }

    /// The foundation `λ / δ_{k-1}`.
    pub fn foundation(&self) -> SkewShape {
        SkewShape::canonical(
            self.lambda.parts(),
            Partition::staircase(self.k as isize - 1).parts(),
        )
    }
}

impl fmt::Display for StaircaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={};k={};n={}", self.lambda, self.k, self.n)
    }
}

impl FromStr for StaircaseSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut lambda, mut k, mut n) = (None, None, None);
        for field in s.split(';').map(str::trim).filter(|f| !f.is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {field:?}")))?;
            let num = || {
                value
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad {key}: {e}")))
            };
            match key.trim() {
                "lambda" => lambda = Some(value.parse::<Partition>()?),
                "k" => k = Some(num()?),
                "n" => n = Some(num()?),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let missing = |what: &str| Error::Parse(format!("missing {what}"));
        StaircaseSpec::new(
            lambda.ok_or_else(|| missing("lambda"))?,
            k.ok_or_else(|| missing("k"))?,
            n.ok_or_else(|| missing("n"))?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, VecDeque};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn boxes(s: &SkewShape) -> BTreeSet<(usize, usize)> {
        s.cells().collect()
    }

    fn bfs_connected(s: &SkewShape) -> bool {
        let cells = boxes(s);
        let Some(&start) = cells.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((r, c)) = queue.pop_front() {
            let nbrs = [
                (r.wrapping_sub(1), c),
                (r + 1, c),
                (r, c.wrapping_sub(1)),
                (r, c + 1),
            ];
            for nb in nbrs {
                if cells.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert_eq!(p(&[3, 1, 0, 0]).parts(), &[3, 1]);
        assert!(Partition::new(vec![3, 0, 1]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_is_size_preserving_involution() {
        for size in 0..=12 {
            for q in Partition::all_of_size(size) {
                let c = q.conjugate();
                assert_eq!(c.size(), size);
                assert_eq!(c.conjugate(), q);
            }
        }
    }

    #[test]
    fn all_of_size_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn staircases() {
        assert_eq!(Partition::staircase(-1), Partition::empty());
        assert_eq!(Partition::staircase(0), Partition::empty());
        assert_eq!(Partition::staircase(4), p(&[4, 3, 2, 1]));
        assert_eq!(Partition::staircase(5), p(&[5, 4, 3, 2, 1]));
    }

    #[test]
    fn delta_shapes() {
        let d1 = SkewShape::delta(1);
        assert_eq!((d1.outer(), d1.inner()), (&p(&[1]), &Partition::empty()));
        let d2 = SkewShape::delta(2);
        assert_eq!((d2.outer(), d2.inner()), (&p(&[2, 2]), &p(&[1])));
        let d5 = SkewShape::delta(5);
        assert_eq!(d5.outer(), &p(&[5, 5, 5, 5, 5]));
        assert_eq!(d5.inner(), &p(&[4, 3, 2, 1]));
        assert_eq!(d5.row_lengths(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn delta_is_rotated_staircase() {
        for n in 1..=7 {
            let d = SkewShape::delta(n);
            let stair = SkewShape::straight(Partition::staircase(n as isize));
            let rotated: BTreeSet<_> = stair.cells().map(|(r, c)| (n - 1 - r, n - 1 - c)).collect();
            assert_eq!(boxes(&d), rotated, "n = {n}");
        }
    }

    #[test]
    fn canonical_form_strips_offsets() {
        let a: SkewShape = "3,3,2/2,2,1".parse().unwrap();
        let b: SkewShape = "2,2,1/1,1".parse().unwrap();
        assert_eq!(a, b);
        let c: SkewShape = "4,2/4".parse().unwrap();
        assert_eq!(c, SkewShape::straight(p(&[2])));
        assert_eq!("".parse::<SkewShape>().unwrap().size(), 0);
    }

    #[test]
    fn skew_text_roundtrip() {
        let s: SkewShape = "6,6,6,6,6,5,4,2/5,4,3,2,1".parse().unwrap();
        assert_eq!(s.to_string(), "6,6,6,6,6,5,4,2/5,4,3,2,1");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "()");
    }

    #[test]
    fn staircase_shapes_match_pictures() {
        let s0 = StaircaseSpec::new(p(&[5, 4, 2]), 0, 5).unwrap().shape();
        assert_eq!(s0.outer(), &p(&[5, 5, 5, 5, 5, 5, 4, 2]));
        assert_eq!(s0.inner(), &p(&[4, 3, 2, 1]));
        assert_eq!(s0.row_lengths(), vec![1, 2, 3, 4, 5, 5, 4, 2]);
        // foundation is left-justified with the bottom row of Δ_5
        assert_eq!(s0.row_offset(4), 0);
        assert_eq!(s0.row_offset(5), 0);

        let s1 = StaircaseSpec::new(p(&[5, 4, 2]), 1, 5).unwrap().shape();
        assert_eq!(s1.to_string(), "6,6,6,6,6,5,4,2/5,4,3,2,1");
        // foundation starts one column left of Δ_5
        assert_eq!(s1.row_offset(4), 1);
        assert_eq!(s1.row_offset(5), 0);
        assert!(s1.is_connected());
    }

    #[test]
    fn boundary_spec_is_valid() {
        let s = StaircaseSpec::new(p(&[3]), 1, 2).unwrap();
        assert!(s.shape().is_connected());
        assert_eq!(s.shape().row_lengths(), vec![1, 2, 3]);
    }

    #[test]
    fn spec_rejections_name_the_constraint() {
        let e = StaircaseSpec::new(p(&[6]), 0, 5).unwrap_err().to_string();
        assert!(e.contains("n + k"), "{e}");
        let e = StaircaseSpec::new(p(&[1]), 2, 5).unwrap_err().to_string();
        assert!(e.contains("k <= lambda_1"), "{e}");
        let e = StaircaseSpec::new(p(&[3]), 3, 5).unwrap_err().to_string();
        assert!(e.contains("contain"), "{e}");
        // λ/δ_1 = (3,1)/(1) is disconnected
        let e = StaircaseSpec::new(p(&[3, 1]), 2, 5)
            .unwrap_err()
            .to_string();
        assert!(e.contains("connected"), "{e}");
        assert!(StaircaseSpec::new(p(&[1]), 0, 0).is_err());
    }

    #[test]
    fn spec_text_format() {
        let s: StaircaseSpec = "lambda=5,4,2;k=1;n=5".parse().unwrap();
        assert_eq!(s.lambda, p(&[5, 4, 2]));
        assert_eq!((s.k, s.n), (1, 5));
        assert_eq!(s.to_string(), "lambda=5,4,2;k=1;n=5");
        assert!("lambda=5,4,2;k=1".parse::<StaircaseSpec>().is_err());
        assert!("lambda=5,4,2;k=1;n=5;q=1".parse::<StaircaseSpec>().is_err());
    }

    #[test]
    fn foundations() {
        let f = StaircaseSpec::new(p(&[3]), 0, 4).unwrap().foundation();
        assert_eq!(f, SkewShape::straight(p(&[3])));
        let f = StaircaseSpec::new(p(&[7, 6]), 0, 11).unwrap().foundation();
        assert_eq!(f, SkewShape::straight(p(&[7, 6])));
        let f = StaircaseSpec::new(p(&[3, 1]), 1, 4).unwrap().foundation();
        assert_eq!(f, SkewShape::straight(p(&[3, 1])));
        let f = StaircaseSpec::new(p(&[4, 3, 2]), 3, 2)
            .unwrap()
            .foundation();
        assert_eq!(f.to_string(), "4,3,2/2,1");
        assert!(StaircaseSpec::new(p(&[4, 3, 1]), 3, 2).is_err());
    }

    #[test]
    fn staircase_connectivity() {
        assert!(SkewShape::delta(5).is_connected());
        let s = StaircaseSpec::new(p(&[5, 4, 2]), 1, 5).unwrap();
        assert!(s.shape().is_connected());
        let s = StaircaseSpec::new(p(&[2, 2]), 2, 3).unwrap();
        assert!(!s.shape().is_connected());
    }

    #[test]
    fn staircase_size_and_connectivity_properties() {
        for n in 1..=4usize {
            for k in 0..=3usize {
                let upper = Partition::rectangle(n + k, n + k);
                for lambda in Partition::between(&Partition::empty(), &upper) {
                    let Ok(spec) = StaircaseSpec::new(lambda.clone(), k, n) else {
                        continue;
                    };
                    let shape = spec.shape();
                    let expected = lambda.size() - Partition::staircase(k as isize - 1).size()
                        + Partition::staircase(n as isize).size();
                    assert_eq!(shape.size(), expected, "{spec}");
                    if lambda.is_empty() {
                        // nothing below the staircase
                        assert!(shape.is_connected());
                    } else {
                        assert_eq!(shape.is_connected(), k < lambda.first(), "{spec}");
                    }
                    assert_eq!(shape.is_connected(), bfs_connected(&shape), "{spec}");
                }
            }
        }
    }

    #[test]
    fn hooks() {
        assert!(p(&[4, 1, 1]).is_hook());
        assert!(p(&[3, 1]).is_hook());
        assert!(!p(&[2, 2]).is_hook());
    }

    #[test]
    fn direct_sum_examples() {
        let row3 = SkewShape::straight(p(&[3]));
        let d2 = SkewShape::delta(2);
        let s = row3.direct_sum(&d2);
        assert_eq!((s.outer(), s.inner()), (&p(&[5, 5, 3]), &p(&[4, 3])));
        let empty = SkewShape::straight(Partition::empty());
        assert_eq!(empty.direct_sum(&d2), d2);
        let one = SkewShape::straight(p(&[1]));
        let s = one.direct_sum(&one);
        assert_eq!((s.outer(), s.inner()), (&p(&[2, 1]), &p(&[1])));
    }

    #[test]
    fn direct_sum_is_disjoint_and_additive() {
        let shapes: Vec<SkewShape> = ["3,1", "2,2/1", "4,4,4/3,2,1", "1", "3,3,1/2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        for a in &shapes {
            for b in &shapes {
                let s = a.direct_sum(b);
                assert_eq!(s.size(), a.size() + b.size());
                let cells: Vec<_> = s.cells().collect();
                let (top, bottom) = cells.split_at(b.size());
                for &(r1, c1) in top {
                    for &(r2, c2) in bottom {
                        assert!(r1 < r2 && c1 > c2);
                    }
                }
            }
        }
    }

    #[test]
    fn between_respects_bounds() {
        let lo = Partition::staircase(2);
        let hi = Partition::rectangle(3, 3);
        let all = Partition::between(&lo, &hi);
        assert!(all.iter().all(|q| hi.contains(q) && q.contains(&lo)));
        let brute = (0..=9)
            .flat_map(Partition::all_of_size)
            .filter(|q| hi.contains(q) && q.contains(&lo))
            .count();
        assert_eq!(all.len(), brute);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }
}
