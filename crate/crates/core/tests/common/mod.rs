#![allow(dead_code)]

use stairlr_core::{Partition, SkewShape, StaircaseSpec};

/// Every canonical skew shape with between 1 and `max` boxes whose
/// consecutive rows touch at least at a corner.
pub fn skew_shapes_up_to(max: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for len in 1..=max {
        stack.push((0, len));
        grow(&mut stack, max - len, &mut out);
        stack.pop();
    }
    out
}

fn grow(rows: &mut Vec<(usize, usize)>, left: usize, out: &mut Vec<SkewShape>) {
    let outer: Vec<usize> = rows.iter().rev().map(|r| r.1).collect();
    let inner: Vec<usize> = rows.iter().rev().map(|r| r.0).collect();
    out.push(
        SkewShape::new(
            Partition::new(outer).unwrap(),
            Partition::new(inner).unwrap(),
        )
        .unwrap(),
    );
    let &(lo, hi) = rows.last().unwrap();
    for new_lo in lo..=hi {
        for new_hi in hi.max(new_lo + 1)..=new_lo + left {
            rows.push((new_lo, new_hi));
            grow(rows, left - (new_hi - new_lo), out);
            rows.pop();
        }
    }
}

/// Valid specs with `|λ| <= size`, `n <= max_n`, `k` in `ks`.
pub fn specs(
    size: usize,
    max_n: usize,
    ks: &[usize],
    keep: impl Fn(&Partition) -> bool,
) -> Vec<StaircaseSpec> {
    let mut out = Vec::new();
    for s in 1..=size {
        for lambda in Partition::all_of_size(s).into_iter().filter(|p| keep(p)) {
            for n in 1..=max_n {
                for &k in ks {
                    if let Ok(spec) = StaircaseSpec::new(lambda.clone(), k, n) {
                        out.push(spec);
                    }
                }
            }
        }
    }
    out
}

/// Semistandard fillings counted by plain backtracking in row-major order.
pub fn count_ssyt(shape: &SkewShape, content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut grid = std::collections::HashMap::new();
    let mut left = content.to_vec();
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        grid: &mut std::collections::HashMap<(usize, usize), usize>,
        left: &mut [usize],
    ) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid.get(&(r, c - 1)).is_some_and(|&w| w > v) {
                continue;
            }
            if r > 0 && grid.get(&(r - 1, c)).is_some_and(|&w| w >= v) {
                continue;
            }
            left[v - 1] -= 1;
            grid.insert((r, c), v);
            total += go(i + 1, cells, grid, left);
            grid.remove(&(r, c));
            left[v - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}
