use serde::Serialize;
use stairlr_core::bijection::{forward_map_traced, reverse_map_traced, TraceStep};
use stairlr_core::lr_engine::shift_join;
use stairlr_core::theorems::{
    hook_formula, is_multiplicity_free, is_schur_positive, oracle_difference, single_row_formula,
};
use stairlr_core::{
    skew_schur_expansion, Result, SchurExpansion, SkewShape, StaircaseSpec, Tableau,
};

/// What `expand` was asked about.
pub enum Target {
    Spec(StaircaseSpec),
    Shape(SkewShape),
}

impl Target {
    pub fn shape(&self) -> SkewShape {
        match self {
            Target::Spec(s) => s.shape(),
            Target::Shape(s) => s.clone(),
        }
    }
}

pub fn expand(target: &Target, vars: Option<usize>) -> Result<SchurExpansion> {
    skew_schur_expansion(&target.shape(), vars)
}

#[derive(Serialize)]
pub struct DiffReport {
    pub spec: String,
    pub degree: usize,
    pub positive: bool,
    pub multiplicity_free: bool,
    pub terms: SchurExpansion,
    pub formula: Option<SchurExpansion>,
    pub formula_agrees: Option<bool>,
}

impl DiffReport {
    pub fn disagrees(&self) -> bool {
        self.formula_agrees == Some(false)
    }
}

/// The closed formula covering `spec`, if any: single rows, and hooks whose
/// leg is at most their arm, with `k <= 1`.
pub fn formula_for(spec: &StaircaseSpec) -> Result<Option<SchurExpansion>> {
    let l = &spec.lambda;
    if spec.k > 1 || l.is_empty() {
        return Ok(None);
    }
    if l.len() == 1 {
        return single_row_formula(l.first(), spec.k, spec.n).map(Some);
    }
    if l.is_hook() && l.len() <= l.first() {
        return hook_formula(l, spec.k, spec.n).map(Some);
    }
    Ok(None)
}

/// `s_{S(λᵗ,k,n)} - s_{S(λ,k,n)}` with its flags and, where a closed formula
/// applies, the formula and whether it matches. The formula comparison is
/// skipped in finite-variable mode.
pub fn diff(spec: &StaircaseSpec, vars: Option<usize>) -> Result<DiffReport> {
    let d = oracle_difference(spec, vars)?;
    let formula = match vars {
        None => formula_for(spec)?,
        Some(_) => None,
    };
    let formula_agrees = formula.as_ref().map(|f| *f == d);
    Ok(DiffReport {
        spec: spec.to_string(),
        degree: d.degree(),
        positive: is_schur_positive(&d),
        multiplicity_free: is_multiplicity_free(&d),
        terms: d,
        formula,
        formula_agrees,
    })
}

/// Runs the bijection on a foundation filling. Forward takes the two rows of
/// the `λ` foundation; reverse takes the rows of the `λᵗ` foundation.
pub fn trace(spec: &StaircaseSpec, foundation: &str, reverse: bool) -> Result<Vec<TraceStep>> {
    let f = Tableau::parse_straight(foundation)?;
    let full = shift_join(&f, spec.k, spec.n)?;
    let (_, steps) = if reverse {
        reverse_map_traced(&full, spec)?
    } else {
        forward_map_traced(&full, spec)?
    };
    Ok(steps)
}

pub fn expansion_table(e: &SchurExpansion) -> String {
    let mut out = format!("degree {}\n", e.degree());
    for (nu, c) in e.terms() {
        out.push_str(&format!("{c:>6}  ({nu})\n"));
    }
    out
}
