//! Fillings of skew shapes and the predicates the LR rule needs.

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// Multiplicities of entry values: `counts[j]` is the number of entries
/// equal to `j + 1`. Trailing zeros are stripped.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Content(Vec<usize>);

impl Content {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity of value `v` (1-based).
    pub fn of(&self, v: usize) -> usize {
        if v == 0 {
            return 0;
        }
        self.0.get(v - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The content as a partition, if it is weakly decreasing with no gaps.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl From<&Partition> for Content {
    fn from(p: &Partition) -> Self {
        Content(p.parts().to_vec())
    }
}

/// A filling of a skew shape by positive integers, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::ShapeMismatch(format!(
                "{} rows given for shape {shape} with {} rows",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::ShapeMismatch(format!(
                    "row {r} has {} entries, shape {shape} needs {}",
                    row.len(),
                    shape.row_len(r)
                )));
            }
            if row.contains(&0) {
                return Err(Error::ShapeMismatch("entries must be positive".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// A tableau of straight shape whose row lengths are read off the rows.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// Parses `"2,4,5/6,7"` against a known shape.
    pub fn parse(shape: SkewShape, s: &str) -> Result<Self> {
        Tableau::new(shape, parse_rows(s)?)
    }

    /// Parses `"2,4,5/6,7"` as a straight-shape tableau.
    pub fn parse_straight(s: &str) -> Result<Self> {
        Tableau::straight(parse_rows(s)?)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    /// Entry at absolute position `(row, col)`, if that cell is in the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        Some(self.rows[row][col - self.shape.row_offset(row)])
    }

    /// Rows right to left, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        rows_ok
            && self.shape.cells().all(|(r, c)| {
                match r.checked_sub(1).and_then(|up| self.get(up, c)) {
                    Some(above) => above < self.get(r, c).unwrap(),
                    None => true,
                }
            })
    }

    pub fn content(&self) -> Content {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Content::new(counts)
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Transpose of a straight-shape tableau: entry `(i, j)` moves to `(j, i)`.
    pub fn transpose_straight(&self) -> Result<Tableau> {
        if !self.shape.is_straight() {
            return Err(Error::Precondition(format!(
                "transpose needs a straight shape, got {}",
                self.shape
            )));
        }
        let conj = self.shape.outer().conjugate();
        let rows = (0..conj.len())
            .map(|j| (0..conj.get(j)).map(|i| self.rows[i][j]).collect())
            .collect();
        Tableau::new(SkewShape::straight(conj), rows)
    }
}

/// Ballot condition: every prefix has at least as many `j`s as `j+1`s.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| {
            let row = row.trim();
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({} on {})", self, self.shape)
    }
}
