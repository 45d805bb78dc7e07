//! Content-preserving maps between LR tableaux of `S(λ,k,n)` and
//! `S(λᵗ,k,n)` for two-row `λ`.
//!
//! Both directions work on a [`TwoLine`]: the two columns of the `λᵗ`
//! foundation, which are the same data as the two rows of the `λ`
//! foundation. Forward fixes repeated values down the second column; reverse
//! fixes ballot violations met while reading the rows.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr_engine::{shift_join, split_foundation};
use crate::shapes::StaircaseSpec;
use crate::tableaux::{is_lattice, Tableau};

/// The two lines of a two-row (or two-column) foundation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TwoLine {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl TwoLine {
    /// Rows of the straight tableau whose columns are `first` and `second`.
    pub fn column_rows(&self) -> Vec<Vec<usize>> {
        (0..self.first.len())
            .map(|r| match self.second.get(r) {
                Some(&s) => vec![self.first[r], s],
                None => vec![self.first[r]],
            })
            .collect()
    }

    pub fn row_rows(&self) -> Vec<Vec<usize>> {
        vec![self.first.clone(), self.second.clone()]
    }

    fn contains(&self, v: usize) -> bool {
        self.first.contains(&v) || self.second.contains(&v)
    }
}

/// A set of cells moved by one rotation: inclusive index ranges into the
/// two lines, the repeated value `pivot` and the run length `extension`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Block {
    pub pivot: usize,
    pub extension: usize,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl Block {
    /// Cells as `(line, index)`, `first` ascending then `second` descending:
    /// walking this list goes once around the block.
    pub fn cycle(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize)> =
            (self.first.0..=self.first.1).map(|i| (0, i)).collect();
        cells.extend((self.second.0..=self.second.1).rev().map(|i| (1, i)));
        cells
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// Clockwise in the column picture.
    Forward,
    /// Clockwise in the row picture; undoes `Forward`.
    Reverse,
}

/// Shifts the block's entries one step around its cycle.
pub fn rotate_block(t: &TwoLine, b: &Block, dir: Direction) -> TwoLine {
    let cells = b.cycle();
    let get = |(line, i): (usize, usize)| if line == 0 { t.first[i] } else { t.second[i] };
    let old: Vec<usize> = cells.iter().map(|&c| get(c)).collect();
    let m = cells.len();
    let mut out = t.clone();
    for (pos, &(line, i)) in cells.iter().enumerate() {
        let from = match dir {
            Direction::Forward => (pos + 1) % m,
            Direction::Reverse => (pos + m - 1) % m,
        };
        let slot = if line == 0 {
            &mut out.first[i]
        } else {
            &mut out.second[i]
        };
        *slot = old[from];
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Transpose,
    Swap2a,
    Swap2b,
    Rotate,
}

/// One entry of a bijection trace. `tableau` is the current foundation,
/// rows separated by `/`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceStep {
    pub step: StepKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<Block>,
    pub tableau: String,
}

fn rows_string(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::Bijection(msg))
}

fn check_two_row(spec: &StaircaseSpec) -> Result<StaircaseSpec> {
    if spec.lambda.len() != 2 {
        return Err(Error::Precondition(format!(
            "lambda = {} must have exactly two rows",
            spec.lambda
        )));
    }
    if spec.k > 1 {
        return Err(Error::Precondition(format!(
            "k = {} must be 0 or 1",
            spec.k
        )));
    }
    spec.transposed()
}

fn check_lr(t: &Tableau, spec: &StaircaseSpec) -> Result<()> {
    if t.shape() != &spec.shape() {
        return Err(Error::ShapeMismatch(format!(
            "tableau shape {} is not S = {}",
            t.shape(),
            spec.shape()
        )));
    }
    if !t.is_semistandard() {
        return Err(Error::Precondition(format!("{t} is not semistandard")));
    }
    if !is_lattice(&t.reading_word()) {
        return Err(Error::Precondition(format!(
            "reading word of {t} is not lattice"
        )));
    }
    Ok(())
}

/// Locates the block for the first repeated pair of the second column at or
/// below row `from`, returning the pair's upper row and the block.
fn next_forward_block(t: &TwoLine, from: usize) -> Result<Option<(usize, Block)>> {
    let s = &t.second;
    for r in from..s.len().saturating_sub(1) {
        let j = s[r];
        if s[r + 1] != j {
            continue;
        }
        if j < 3 {
            return fail(format!("repeated value {j} in the second column"));
        }
        let mut i = 0;
        while i < r && s[r - i - 1] + i + 1 == j {
            i += 1;
        }
        let Some(p) = t.first.iter().position(|&v| v == j - 1) else {
            return fail(format!(
                "no {} in the first column for the repeated {j}",
                j - 1
            ));
        };
        if p < r + 1 {
            return fail(format!(
                "{} sits above the cell left of the lower {j}",
                j - 1
            ));
        }
        if p < i || (0..=i).any(|d| t.first[p - d] + d + 1 != j) {
            return fail(format!(
                "first column lacks the run {}..{} above row {p}",
                j - 1 - i,
                j - 1
            ));
        }
        let block = Block {
            pivot: j,
            extension: i,
            first: (p - i, p),
            second: (r - i, r + 1),
        };
        return Ok(Some((r, block)));
    }
    Ok(None)
}

/// The blocks rotated when fixing `t` top to bottom, in order. Later blocks
/// are located after the earlier rotations are applied.
pub fn detect_blocks_forward(t: &TwoLine) -> Result<Vec<Block>> {
    Ok(fix_columns(t.clone(), &mut |_, _| {})?.1)
}

fn fix_columns(
    mut t: TwoLine,
    log: &mut dyn FnMut(&TwoLine, &Block),
) -> Result<(TwoLine, Vec<Block>)> {
    let mut blocks = Vec::new();
    let mut from = 0;
    while let Some((r, block)) = next_forward_block(&t, from)? {
        t = rotate_block(&t, &block, Direction::Forward);
        log(&t, &block);
        blocks.push(block);
        from = r + 1;
    }
    Ok((t, blocks))
}

/// Maps an LR tableau of `S(λ,k,n)` to one of `S(λᵗ,k,n)` with the same
/// content; `spec` describes the source shape.
pub fn forward_map(t1: &Tableau, spec: &StaircaseSpec) -> Result<Tableau> {
    forward_map_traced(t1, spec).map(|(t, _)| t)
}

pub fn forward_map_traced(t1: &Tableau, spec: &StaircaseSpec) -> Result<(Tableau, Vec<TraceStep>)> {
    let conj = check_two_row(spec)?;
    check_lr(t1, spec)?;
    let n = spec.n;
    let rows = split_foundation(t1, spec)?.into_rows();
    let mut t = TwoLine {
        first: rows[0].clone(),
        second: rows[1].clone(),
    };
    let mut trace = vec![TraceStep {
        step: StepKind::Transpose,
        block: None,
        tableau: rows_string(&t.column_rows()),
    }];

    let (l1, l2) = (t.first.len(), t.second.len());
    if t.first.contains(&(n + 2)) || t.second[..l2 - 1].contains(&(n + 2)) {
        return fail(format!("{} away from the end of the second row", n + 2));
    }
    if t.second[l2 - 1] == n + 2 {
        if t.first[l1 - 1] != n + 1 {
            return fail(format!(
                "{} present without {} ending the first row",
                n + 2,
                n + 1
            ));
        }
        let kind = if l1 > l2 {
            std::mem::swap(&mut t.first[l1 - 1], &mut t.second[l2 - 1]);
            StepKind::Swap2a
        } else {
            std::mem::swap(&mut t.first[l2 - 1], &mut t.second[l2 - 2]);
            StepKind::Swap2b
        };
        trace.push(TraceStep {
            step: kind,
            block: None,
            tableau: rows_string(&t.column_rows()),
        });
    }

    let (t, _) = fix_columns(t, &mut |cur, b| {
        trace.push(TraceStep {
            step: StepKind::Rotate,
            block: Some(*b),
            tableau: rows_string(&cur.column_rows()),
        })
    })?;
    let out = shift_join(&Tableau::straight(t.column_rows())?, spec.k, n)?;
    check_lr(&out, &conj)?;
    Ok((out, trace))
}

/// Locates the first `j, j` ballot problem met while reading the rows
/// (first row right to left, then the second) and its block.
fn next_reverse_block(t: &TwoLine) -> Result<Option<Block>> {
    let word = t
        .first
        .iter()
        .rev()
        .map(|&v| (0, v))
        .chain(t.second.iter().rev().map(|&v| (1, v)));
    let mut counts = vec![0usize; t.first.iter().chain(&t.second).max().copied().unwrap_or(0) + 2];
    for (line, j) in word {
        counts[j] += 1;
        if j < 2 || counts[j] != 2 || counts[j - 1] != 0 {
            continue;
        }
        if line != 1 {
            return fail(format!("value {j} repeated within the first row"));
        }
        let ct = t
            .first
            .iter()
            .position(|&v| v == j)
            .ok_or_else(|| Error::Bijection(format!("no {j} in the first row")))?;
        let cb = t.second.iter().rposition(|&v| v == j).expect("just read");
        if ct < cb || cb == 0 || t.second[cb - 1] != j - 1 {
            return fail(format!("no {} immediately left of the lower {j}", j - 1));
        }
        let mut i = 0;
        while ct + i + 1 < t.first.len()
            && cb + i + 1 < t.second.len()
            && t.first[ct + i + 1] == j + i + 1
            && t.second[cb + i + 1] == j + i + 1
        {
            i += 1;
        }
        return Ok(Some(Block {
            pivot: j,
            extension: i,
            first: (ct, ct + i),
            second: (cb - 1, cb + i),
        }));
    }
    Ok(None)
}

/// Maps an LR tableau of `S(λᵗ,k,n)` back to `S(λ,k,n)`; `spec` describes
/// the target shape (the same spec as for [`forward_map`]).
pub fn reverse_map(t2: &Tableau, spec: &StaircaseSpec) -> Result<Tableau> {
    reverse_map_traced(t2, spec).map(|(t, _)| t)
}

pub fn reverse_map_traced(t2: &Tableau, spec: &StaircaseSpec) -> Result<(Tableau, Vec<TraceStep>)> {
    let conj = check_two_row(spec)?;
    check_lr(t2, &conj)?;
    let n = spec.n;
    let cols = split_foundation(t2, &conj)?
        .transpose_straight()?
        .into_rows();
    let mut t = TwoLine {
        first: cols[0].clone(),
        second: cols[1].clone(),
    };
    let mut trace = vec![TraceStep {
        step: StepKind::Transpose,
        block: None,
        tableau: rows_string(&t.row_rows()),
    }];

    // each rotation moves one entry of the second row strictly left, so the
    // number of fixes is bounded by the size of the foundation squared
    let cap = (t.first.len() + t.second.len()).pow(2) + 1;
    let mut fixes = 0;
    while let Some(block) = next_reverse_block(&t)? {
        fixes += 1;
        if fixes > cap {
            return fail("ballot fixes did not terminate".into());
        }
        t = rotate_block(&t, &block, Direction::Reverse);
        trace.push(TraceStep {
            step: StepKind::Rotate,
            block: Some(block),
            tableau: rows_string(&t.row_rows()),
        });
    }

    let had_top = t.contains(n + 2);
    if had_top {
        let (l1, l2) = (t.first.len(), t.second.len());
        let kind = if l1 > l2 {
            if t.first[l1 - 1] != n + 2 || t.second[l2 - 1] != n + 1 {
                return fail(format!(
                    "{} is not in a position produced by the forward map",
                    n + 2
                ));
            }
            std::mem::swap(&mut t.first[l1 - 1], &mut t.second[l2 - 1]);
            StepKind::Swap2a
        } else {
            if l2 < 2 || t.second[l2 - 1] != n + 2 || t.second[l2 - 2] != n + 1 {
                return fail(format!(
                    "{} is not in a position produced by the forward map",
                    n + 2
                ));
            }
            std::mem::swap(&mut t.first[l2 - 1], &mut t.second[l2 - 2]);
            StepKind::Swap2b
        };
        trace.push(TraceStep {
            step: kind,
            block: None,
            tableau: rows_string(&t.row_rows()),
        });
    }

    let out = shift_join(&Tableau::straight(t.row_rows())?, spec.k, n)?;
    check_lr(&out, spec)?;
    if had_top && forward_map(&out, spec)? != *t2 {
        return fail(format!(
            "input with {} is not the image of the forward map",
            n + 2
        ));
    }
    Ok((out, trace))
}
