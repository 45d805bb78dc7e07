//! Differences `s_{S(λᵗ,k,n)} - s_{S(λ,k,n)}`: predicates on expansions and
//! the closed formulas for single-row and hook foundations.

use std::cmp::Reverse;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr_engine::{shift_join, skew_schur_expansion, SchurExpansion};
use crate::shapes::{Partition, SkewShape, StaircaseSpec};
use crate::tableaux::Tableau;

pub fn schur_difference(a: &SchurExpansion, b: &SchurExpansion) -> Result<SchurExpansion> {
    a.checked_sub(b)
}

pub fn is_schur_positive(e: &SchurExpansion) -> bool {
    e.terms().all(|(_, c)| c > 0)
}

pub fn is_multiplicity_free(e: &SchurExpansion) -> bool {
    e.terms().all(|(_, c)| c == 1)
}

/// `s_{S(λᵗ,k,n)} - s_{S(λ,k,n)}` by direct enumeration, optionally in
/// finitely many variables.
pub fn oracle_difference(spec: &StaircaseSpec, num_vars: Option<usize>) -> Result<SchurExpansion> {
    let conj = spec.transposed()?;
    let upper = skew_schur_expansion(&conj.shape(), num_vars)?;
    let lower = skew_schur_expansion(&spec.shape(), num_vars)?;
    schur_difference(&upper, &lower)
}

/// Whether two skew Schur functions agree in `m` variables.
pub fn equal_in_vars(s1: &SkewShape, s2: &SkewShape, m: usize) -> Result<bool> {
    if s1.size() != s2.size() {
        return Err(Error::SizeMismatch {
            left: s1.size(),
            right: s2.size(),
        });
    }
    Ok(skew_schur_expansion(s1, Some(m))? == skew_schur_expansion(s2, Some(m))?)
}

fn staircase_plus(n: usize, len: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..=n).rev().collect();
    v.resize(len.max(n), 0);
    v
}

fn into_partition(v: Vec<usize>) -> Result<Partition> {
    Partition::new(v.clone())
        .map_err(|_| Error::Bijection(format!("vector sum {v:?} is not weakly decreasing")))
}

/// `δ_n + e_A + (0^n, 1^{λ₁-|A|})`.
pub fn nu_of_a(a: &[usize], lambda1: usize, n: usize) -> Result<Partition> {
    if a.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::Precondition(format!(
            "A = {a:?} must lie in 1..={n}"
        )));
    }
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(format!(
            "A = {a:?} must be strictly increasing"
        )));
    }
    if a.len() + 2 > lambda1 {
        return Err(Error::Precondition(format!(
            "|A| <= lambda_1 - 2 violated: |A| = {}",
            a.len()
        )));
    }
    let tail = lambda1 - a.len();
    let mut v = staircase_plus(n, n + tail);
    for &x in a {
        v[x - 1] += 1;
    }
    for slot in &mut v[n..] {
        *slot += 1;
    }
    into_partition(v)
}

fn subsets(pool: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u64..1 << pool.len()).map(move |mask| {
        pool.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

fn check_k(k: usize) -> Result<()> {
    if k > 1 {
        return Err(Error::Precondition(format!(
            "closed formulas need k <= 1, got {k}"
        )));
    }
    Ok(())
}

/// Sum of `s_{ν(A)}` over `A ⊆ {2-k, ..., n}` with `|A| <= λ₁ - 2`.
pub fn single_row_formula(lambda1: usize, k: usize, n: usize) -> Result<SchurExpansion> {
    check_k(k)?;
    if n == 0 || lambda1 == 0 {
        return Err(Error::Precondition(
            "n and lambda_1 must be positive".into(),
        ));
    }
    if lambda1 > n + k {
        return Err(Error::Precondition(format!(
            "lambda_1 <= n + k violated: {lambda1} > {}",
            n + k
        )));
    }
    let degree = n * (n + 1) / 2 + lambda1;
    let mut e = SchurExpansion::zero(degree);
    if lambda1 < 2 {
        return Ok(e);
    }
    let pool: Vec<usize> = (2 - k..=n).collect();
    for a in subsets(&pool).filter(|a| a.len() + 2 <= lambda1) {
        e.add_term(nu_of_a(&a, lambda1, n)?, 1)?;
    }
    Ok(e)
}

/// The sets indexing one term of the hook formula. Both are kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct BcPair {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl BcPair {
    pub fn new(mut b: Vec<usize>, mut c: Vec<usize>) -> Self {
        b.sort_unstable();
        b.dedup();
        c.sort_unstable();
        c.dedup();
        BcPair { b, c }
    }

    /// Checks the admissibility conditions for the hook with arm `lambda_a`
    /// (first row) and leg `lambda_l` (first column).
    pub fn validate(&self, lambda_a: usize, lambda_l: usize, k: usize, n: usize) -> Result<()> {
        let bad = |why: &str| {
            Err(Error::Precondition(format!(
                "pair B={:?}, C={:?}: {why}",
                self.b, self.c
            )))
        };
        let size = lambda_a + lambda_l - 1;
        if self.b.last() != Some(&(n + 1)) {
            return bad("n + 1 must be the largest element of B");
        }
        if self.b[0] < 2 - k.min(1) {
            return bad("B must lie in {2-k, ..., n+1}");
        }
        if self.c.first().is_some_and(|&c| c < 3 - k.min(1)) {
            return bad("C must lie in {3-k, ..., n+1}");
        }
        if !self.c.iter().all(|c| self.b.contains(c)) || self.c.len() == self.b.len() {
            return bad("C must be a proper subset of B");
        }
        if self.b.len() + self.c.len() + 1 > size {
            return bad("|B| + |C| <= |lambda| - 1 violated");
        }
        if self.b.len() < lambda_l {
            return bad("|B| >= lambda_l violated");
        }
        if self.c.len() + 1 > lambda_l {
            return bad("|C| + 1 <= lambda_l violated");
        }
        for (i, &c) in self.c.iter().enumerate() {
            let starts_interval = i == 0 || self.c[i - 1] + 1 != c;
            if starts_interval && !(self.b.contains(&(c - 1)) && !self.c.contains(&(c - 1))) {
                return bad("each maximal interval of C must be preceded by an element of B - C");
            }
        }
        Ok(())
    }
}

/// Admissible `(B, C)` for a hook with arm `lambda_a` and leg `lambda_l`,
/// ordered by `|C|` descending, then `C`, `|B|`, `B`.
pub fn enumerate_bc_pairs(lambda_a: usize, lambda_l: usize, k: usize, n: usize) -> Vec<BcPair> {
    if k > 1 || n == 0 || lambda_l == 0 || lambda_l > lambda_a {
        return Vec::new();
    }
    let pool: Vec<usize> = (2 - k..=n).collect();
    let mut out = Vec::new();
    for mut b in subsets(&pool) {
        b.push(n + 1);
        let c_pool: Vec<usize> = b.iter().copied().filter(|&x| x >= 3 - k).collect();
        for c in subsets(&c_pool) {
            let pair = BcPair { b: b.clone(), c };
            if pair.validate(lambda_a, lambda_l, k, n).is_ok() {
                out.push(pair);
            }
        }
    }
    out.sort_by(|x, y| {
        (Reverse(x.c.len()), &x.c, x.b.len(), &x.b).cmp(&(
            Reverse(y.c.len()),
            &y.c,
            y.b.len(),
            &y.b,
        ))
    });
    out
}

fn hook_arms(lambda: &Partition) -> Result<(usize, usize)> {
    if lambda.is_empty() || !lambda.is_hook() {
        return Err(Error::Precondition(format!("{lambda} is not a hook")));
    }
    Ok((lambda.first(), lambda.len()))
}

/// `δ_n + Σ_{b∈B} e_b + Σ_{c∈C} e_c + (0^{n+1}, 1^{|λ|-|B|-|C|})`.
pub fn nu_of_bc(pair: &BcPair, lambda: &Partition, k: usize, n: usize) -> Result<Partition> {
    let (a, l) = hook_arms(lambda)?;
    pair.validate(a, l, k, n)?;
    let tail = lambda.size() - pair.b.len() - pair.c.len();
    let mut v = staircase_plus(n, n + 1 + tail);
    for &x in pair.b.iter().chain(&pair.c) {
        v[x - 1] += 1;
    }
    for slot in &mut v[n + 1..] {
        *slot += 1;
    }
    into_partition(v)
}

/// `binom(a, b)`, zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1i64, |acc, i| acc * (a - i) / (i + 1))
}

/// The hook formula: signed binomial weights over `enumerate_bc_pairs`.
pub fn hook_formula(lambda: &Partition, k: usize, n: usize) -> Result<SchurExpansion> {
    check_k(k)?;
    let (a, l) = hook_arms(lambda)?;
    if l > a {
        return Err(Error::Precondition(format!(
            "hook {lambda} has leg {l} longer than arm {a}; pass its conjugate"
        )));
    }
    if a > n + k {
        return Err(Error::Precondition(format!(
            "lambda_1 <= n + k violated: {a} > {}",
            n + k
        )));
    }
    let mut e = SchurExpansion::zero(n * (n + 1) / 2 + lambda.size());
    for pair in enumerate_bc_pairs(a, l, k, n) {
        let free = pair.b.len() as i64 - pair.c.len() as i64 - 1;
        let cc = pair.c.len() as i64;
        let coeff = binom(free, l as i64 - cc - 1) - binom(free, a as i64 - cc - 1);
        e.add_term(nu_of_bc(&pair, lambda, k, n)?, coeff)?;
    }
    Ok(e)
}

/// A filling of the hook `h` with content `ν(B,C) - δ_n`, joined under the
/// staircase: values above `n + 1` at the foot of the first column, `min B`
/// in the corner, `C` plus the smallest remaining `B`-values across the first
/// row, everything else down the column. `h` may be either of the two
/// conjugate hooks; the filling exists only when `|B| >= h_1`.
pub fn canonical_hook_filling(pair: &BcPair, h: &Partition, k: usize, n: usize) -> Result<Tableau> {
    let (arm, leg) = hook_arms(h)?;
    pair.validate(arm.max(leg), arm.min(leg), k, n)?;
    if pair.b.len() < arm {
        return Err(Error::Precondition(format!(
            "no filling of {h}: |B| = {} is below the first row length {arm}",
            pair.b.len()
        )));
    }
    let tail = h.size() - pair.b.len() - pair.c.len();
    let corner = pair.b[0];
    let rest: Vec<usize> = pair.b[1..]
        .iter()
        .copied()
        .filter(|x| !pair.c.contains(x))
        .collect();
    let take = arm - pair.c.len() - 1;
    let mut row: Vec<usize> = pair
        .c
        .iter()
        .copied()
        .chain(rest[..take].iter().copied())
        .collect();
    row.sort_unstable();
    let mut column: Vec<usize> = pair
        .c
        .iter()
        .copied()
        .chain(rest[take..].iter().copied())
        .collect();
    column.sort_unstable();
    column.extend(n + 2..n + 2 + tail);

    let mut rows = vec![std::iter::once(corner).chain(row).collect::<Vec<_>>()];
    rows.extend(column.into_iter().map(|v| vec![v]));
    let foundation = Tableau::straight(rows)?;
    shift_join(&foundation, k, n)
}
