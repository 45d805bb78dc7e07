//! One PASS/FAIL line per acceptance criterion. Each check must also finish
//! inside its time limit.

use std::process::ExitCode;
use std::sync::atomic::AtomicBool;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use stairlr_cli::commands::{self, diff};
use stairlr_cli::sweep::{run_sweep, SweepOptions};
use stairlr_core::bijection::{forward_map, reverse_map};
use stairlr_core::lr_engine::{shift_join, split_foundation};
use stairlr_core::theorems::{
    equal_in_vars, hook_formula, is_schur_positive, oracle_difference, single_row_formula,
};
use stairlr_core::{
    enumerate_lr_tableaux, is_lattice, skew_schur_expansion, Partition, SkewShape, StaircaseSpec,
};

type Check = fn() -> Result<(), String>;

const CRITERIA: &[(&str, Duration, Check)] = &[
    (
        "single-row example",
        Duration::from_secs(1),
        single_row_example,
    ),
    ("hook example", Duration::from_secs(1), hook_example),
    (
        "block-rotation golden trace",
        Duration::from_secs(1),
        golden_trace,
    ),
    (
        "closed formulas vs enumeration",
        Duration::from_secs(10 * 60),
        formula_sweeps,
    ),
    (
        "two-row bijection suite",
        Duration::from_secs(15 * 60),
        two_row_suite,
    ),
    (
        "equality sweep at desk scale",
        Duration::from_secs(30 * 60),
        desk_sweep,
    ),
    (
        "LR engine invariants",
        Duration::from_secs(5 * 60),
        lr_invariants,
    ),
];

fn spec(s: &str) -> StaircaseSpec {
    s.parse().expect("valid spec")
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("partition")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn specs_up_to(size: usize, max_n: usize, keep: impl Fn(&Partition) -> bool) -> Vec<StaircaseSpec> {
    let mut out = Vec::new();
    for s in 1..=size {
        for lambda in Partition::all_of_size(s).into_iter().filter(|l| keep(l)) {
            for n in 1..=max_n {
                for k in 0..=1 {
                    if let Ok(sp) = StaircaseSpec::new(lambda.clone(), k, n) {
                        out.push(sp);
                    }
                }
            }
        }
    }
    out
}

fn exact_terms(s: &str, expected: &[&[usize]]) -> Result<(), String> {
    let report = diff(&spec(s), None).map_err(|e| e.to_string())?;
    let got: Vec<(Partition, i64)> = report
        .terms
        .terms()
        .map(|(nu, c)| (nu.clone(), c))
        .collect();
    let mut want: Vec<(Partition, i64)> = expected.iter().map(|nu| (p(nu), 1)).collect();
    want.sort_by(|a, b| b.0.cmp(&a.0));
    ensure(got == want, || format!("{s}: got {got:?}"))?;
    ensure(report.formula_agrees == Some(true), || {
        format!("{s}: formula disagrees")
    })
}

fn single_row_example() -> Result<(), String> {
    exact_terms(
        "lambda=3;k=0;n=4",
        &[
            &[4, 3, 2, 1, 1, 1, 1],
            &[4, 4, 2, 1, 1, 1],
            &[4, 3, 3, 1, 1, 1],
            &[4, 3, 2, 2, 1, 1],
        ],
    )
}

fn hook_example() -> Result<(), String> {
    exact_terms(
        "lambda=3,1;k=0;n=4",
        &[
            &[4, 4, 3, 1, 1, 1],
            &[4, 4, 2, 2, 1, 1],
            &[4, 3, 3, 2, 1, 1],
            &[4, 4, 2, 1, 1, 1, 1],
            &[4, 3, 3, 1, 1, 1, 1],
            &[4, 3, 2, 2, 1, 1, 1],
            &[4, 3, 2, 2, 2, 1],
        ],
    )
}

fn golden_trace() -> Result<(), String> {
    let sp = spec("lambda=7,6;k=0;n=11");
    let fwd =
        commands::trace(&sp, "2,4,5,6,9,10,12/6,7,7,8,11,11", false).map_err(|e| e.to_string())?;
    let last = &fwd.last().ok_or("empty trace")?.tableau;
    ensure(last == "2,5/4,6/6,7/7,8/9,10/11,11/12", || {
        format!("forward ends at {last}")
    })?;
    let back = commands::trace(&sp, last, true).map_err(|e| e.to_string())?;
    ensure(back[0].tableau == "2,4,6,7,9,11,12/5,6,7,8,10,11", || {
        format!("final columns {}", back[0].tableau)
    })?;
    let orig = &back.last().ok_or("empty trace")?.tableau;
    ensure(orig == "2,4,5,6,9,10,12/6,7,7,8,11,11", || {
        format!("reverse ends at {orig}")
    })
}

fn formula_sweeps() -> Result<(), String> {
    let cases = specs_up_to(7, 4, |l| {
        l.len() == 1 || (l.is_hook() && l.len() <= l.first())
    });
    let bad: Vec<String> = cases
        .par_iter()
        .filter(|sp| sp.transposed().is_ok())
        .filter_map(|sp| {
            let formula = if sp.lambda.len() == 1 {
                single_row_formula(sp.lambda.first(), sp.k, sp.n)
            } else {
                hook_formula(&sp.lambda, sp.k, sp.n)
            };
            match (formula, oracle_difference(sp, None)) {
                (Ok(f), Ok(o)) if f == o => None,
                _ => Some(sp.to_string()),
            }
        })
        .collect();
    ensure(bad.is_empty(), || {
        format!("{} mismatches, first {}", bad.len(), bad[0])
    })
}

fn two_row_case(sp: &StaircaseSpec) -> Result<(), String> {
    let err = |e: stairlr_core::Error| format!("{sp}: {e}");
    let conj = sp.transposed().map_err(err)?;
    ensure(
        is_schur_positive(&oracle_difference(sp, None).map_err(err)?),
        || format!("{sp}: not positive"),
    )?;
    let (a, b) = (conj.shape(), sp.shape());
    ensure(equal_in_vars(&a, &b, sp.n + 1).map_err(err)?, || {
        format!("{sp}: unequal in n+1")
    })?;
    if conj.lambda != sp.lambda {
        ensure(!equal_in_vars(&a, &b, sp.n + 2).map_err(err)?, || {
            format!("{sp}: equal in n+2")
        })?;
    }
    for t1 in enumerate_lr_tableaux(&b, None, None) {
        let t2 = forward_map(&t1, sp).map_err(err)?;
        ensure(reverse_map(&t2, sp).map_err(err)? == t1, || {
            format!("{sp}: round trip fails on {t1}")
        })?;
    }
    Ok(())
}

fn two_row_suite() -> Result<(), String> {
    let cases: Vec<_> = specs_up_to(8, 4, |l| l.len() == 2 && l.first() > 1)
        .into_iter()
        .filter(|sp| sp.transposed().is_ok())
        .collect();
    ensure(!cases.is_empty(), || "no cases".into())?;
    cases.par_iter().map(two_row_case).collect()
}

fn desk_sweep() -> Result<(), String> {
    let stop = AtomicBool::new(false);
    for (n, k_max) in [(2, 3), (3, 2)] {
        let mut opts = SweepOptions::new(n, 0, k_max);
        opts.jobs = 4;
        for r in run_sweep(&opts, &stop).map_err(|e| e.to_string())? {
            ensure(r.complete && r.unequal == 0 && r.skipped_limit == 0, || {
                format!(
                    "n={n} k={}: {} unequal {:?}",
                    r.k, r.unequal, r.counterexamples
                )
            })?;
        }
    }
    Ok(())
}

fn lr_invariants() -> Result<(), String> {
    for n in 1..=5 {
        let e = skew_schur_expansion(&SkewShape::delta(n), None).map_err(|e| e.to_string())?;
        let stair = Partition::staircase(n as isize);
        ensure(e.len() == 1 && e.coefficient(&stair) == 1, || {
            format!("Delta_{n} expands to {e:?}")
        })?;
    }
    specs_up_to(6, 4, |_| true)
        .par_iter()
        .map(|sp| {
            let (k, n) = (sp.k, sp.n);
            for t in enumerate_lr_tableaux(&sp.shape(), None, None) {
                let row = &t.rows()[n];
                ensure(
                    row.windows(2).all(|w| w[0] < w[1])
                        && row.iter().all(|&v| v + k >= 2 && v <= n + 1)
                        && (k == 1 || !row.contains(&1)),
                    || format!("{sp}: first foundation row of {t}"),
                )?;
                let f = split_foundation(&t, sp).map_err(|e| e.to_string())?;
                let joined = shift_join(&f, k, n).map_err(|e| e.to_string())?;
                ensure(
                    joined.is_semistandard() && is_lattice(&joined.reading_word()) && joined == t,
                    || format!("{sp}: join of {f} gives {joined}"),
                )?;
            }
            Ok(())
        })
        .collect()
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (name, limit, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(()) if took <= *limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over time limit {limit:?})"),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("{verdict} [{}] {name} in {took:.2?}", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
