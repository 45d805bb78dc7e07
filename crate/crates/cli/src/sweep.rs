//! Checks `s_{S(λᵗ,k,n)} = s_{S(λ,k,n)}` in `n + 1` variables for every `λ`
//! with `δ_{k+1} ⊆ λ ⊆ ((n+k)^{n+k})`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use stairlr_core::theorems::equal_in_vars;
use stairlr_core::{Error, Partition, Result, StaircaseSpec};

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub n: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    /// Shapes with more boxes than this are not expanded.
    pub max_boxes: usize,
    /// Stop after this many newly computed outcomes.
    pub stop_after: Option<usize>,
}

impl SweepOptions {
    pub fn new(n: usize, k_min: usize, k_max: usize) -> Self {
        SweepOptions {
            n,
            k_min,
            k_max,
            jobs: 1,
            checkpoint: None,
            max_boxes: 40,
            stop_after: None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Equal,
    Unequal,
    SkippedZero,
    SkippedLimit,
}

#[derive(Serialize, Deserialize)]
struct Record {
    n: usize,
    k: usize,
    lambda: Vec<usize>,
    outcome: Outcome,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub k: usize,
    pub total: usize,
    pub equal: usize,
    pub unequal: usize,
    pub skipped_zero: usize,
    pub skipped_limit: usize,
    pub counterexamples: Vec<Vec<usize>>,
    pub complete: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    /// Holds for the examined part of the range.
    pub fn holds(&self) -> bool {
        self.unequal == 0
    }
}

/// The `λ` examined for `(n, k)`, in lexicographically decreasing order.
pub fn domain(n: usize, k: usize) -> Vec<Partition> {
    Partition::between(
        &Partition::staircase(k as isize + 1),
        &Partition::rectangle(n + k, n + k),
    )
}

/// Decides one `λ`. Outcomes other than the two comparisons are exact
/// shortcuts: outside `δ_{n+k}` both sides vanish in `n + 1` variables.
pub fn classify(lambda: &Partition, k: usize, n: usize, max_boxes: usize) -> Result<Outcome> {
    if !Partition::staircase((n + k) as isize).contains(lambda) {
        return Ok(Outcome::SkippedZero);
    }
    let spec = StaircaseSpec::new(lambda.clone(), k, n)?;
    let conj = spec.transposed()?;
    if conj.lambda == spec.lambda {
        return Ok(Outcome::Equal);
    }
    let (a, b) = (conj.shape(), spec.shape());
    if a.size() > max_boxes {
        return Ok(Outcome::SkippedLimit);
    }
    Ok(if equal_in_vars(&a, &b, n + 1)? {
        Outcome::Equal
    } else {
        Outcome::Unequal
    })
}

/// Finished outcomes keyed by `(n, k, λ)`.
type Done = HashMap<(usize, usize, Vec<usize>), Outcome>;

fn load_checkpoint(path: &PathBuf) -> Result<Done> {
    let mut done = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => {
            return Err(Error::Parse(format!(
                "cannot read checkpoint {}: {e}",
                path.display()
            )))
        }
    };
    let lines: Vec<String> = BufReader::new(file)
        .lines()
        .collect::<std::io::Result<_>>()
        .map_err(|e| Error::Parse(format!("cannot read checkpoint: {e}")))?;
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<Record>(line) {
            Ok(r) => {
                done.insert((r.n, r.k, r.lambda), r.outcome);
            }
            // a torn final line from an interrupted write is recomputed
            Err(_) if i + 1 == lines.len() => {}
            Err(e) => return Err(Error::Parse(format!("checkpoint line {}: {e}", i + 1))),
        }
    }
    Ok(done)
}

struct Checkpoint {
    file: Option<Mutex<File>>,
}

impl Checkpoint {
    fn open(path: Option<&PathBuf>) -> Result<Self> {
        let file = match path {
            None => None,
            Some(p) => {
                // drop a record cut off by an interrupted write; it is recomputed
                if let Ok(text) = std::fs::read(p) {
                    let keep = text.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
                    if keep < text.len() {
                        let f = OpenOptions::new()
                            .write(true)
                            .open(p)
                            .map_err(|e| Error::Parse(e.to_string()))?;
                        f.set_len(keep as u64)
                            .map_err(|e| Error::Parse(e.to_string()))?;
                    }
                }
                let f = OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(p)
                    .map_err(|e| {
                        Error::Parse(format!("cannot open checkpoint {}: {e}", p.display()))
                    })?;
                Some(Mutex::new(f))
            }
        };
        Ok(Checkpoint { file })
    }

    fn write(&self, r: &Record) -> Result<()> {
        if let Some(f) = &self.file {
            let mut line = serde_json::to_string(r).expect("record serializes");
            line.push('\n');
            let mut f = f.lock().expect("checkpoint lock");
            f.write_all(line.as_bytes())
                .and_then(|_| f.flush())
                .map_err(|e| Error::Parse(format!("checkpoint write failed: {e}")))?;
        }
        Ok(())
    }
}

/// Runs the sweep for each `k` in range. `interrupt` is polled between
/// shapes; once set (or once `stop_after` is reached) the remaining shapes
/// are left undecided and the reports are marked incomplete.
pub fn run_sweep(opts: &SweepOptions, interrupt: &AtomicBool) -> Result<Vec<SweepReport>> {
    if opts.n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if opts.k_min > opts.k_max {
        return Err(Error::Precondition("k-min exceeds k-max".into()));
    }
    let done = match &opts.checkpoint {
        Some(p) => load_checkpoint(p)?,
        None => HashMap::new(),
    };
    let checkpoint = Checkpoint::open(opts.checkpoint.as_ref())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("worker pool: {e}")))?;
    let computed = AtomicUsize::new(0);
    let stop = |c: &AtomicUsize| {
        interrupt.load(Ordering::SeqCst)
            || opts
                .stop_after
                .is_some_and(|s| c.load(Ordering::SeqCst) >= s)
    };

    let mut reports = Vec::new();
    for k in opts.k_min..=opts.k_max {
        let start = Instant::now();
        let lambdas = domain(opts.n, k);
        let outcomes: Vec<Result<Option<Outcome>>> = pool.install(|| {
            lambdas
                .par_iter()
                .map(|lambda| {
                    if let Some(&o) = done.get(&(opts.n, k, lambda.parts().to_vec())) {
                        return Ok(Some(o));
                    }
                    if stop(&computed) {
                        return Ok(None);
                    }
                    let o = classify(lambda, k, opts.n, opts.max_boxes)?;
                    checkpoint.write(&Record {
                        n: opts.n,
                        k,
                        lambda: lambda.parts().to_vec(),
                        outcome: o,
                    })?;
                    computed.fetch_add(1, Ordering::SeqCst);
                    Ok(Some(o))
                })
                .collect()
        });

        let mut report = SweepReport {
            n: opts.n,
            k,
            total: 0,
            equal: 0,
            unequal: 0,
            skipped_zero: 0,
            skipped_limit: 0,
            counterexamples: Vec::new(),
            complete: true,
            wall_time: Duration::ZERO,
        };
        for (lambda, o) in lambdas.iter().zip(outcomes) {
            match o? {
                None => report.complete = false,
                Some(o) => {
                    report.total += 1;
                    match o {
                        Outcome::Equal => report.equal += 1,
                        Outcome::Unequal => {
                            report.unequal += 1;
                            report.counterexamples.push(lambda.parts().to_vec());
                        }
                        Outcome::SkippedZero => report.skipped_zero += 1,
                        Outcome::SkippedLimit => report.skipped_limit += 1,
                    }
                }
            }
        }
        report.wall_time = start.elapsed();
        reports.push(report);
    }
    Ok(reports)
}

pub fn report_table(reports: &[SweepReport]) -> String {
    let mut out = String::from("   n   k  total  equal  unequal  zero  limit  complete\n");
    for r in reports {
        out.push_str(&format!(
            "{:>4}{:>4}{:>7}{:>7}{:>9}{:>6}{:>7}  {}\n",
            r.n, r.k, r.total, r.equal, r.unequal, r.skipped_zero, r.skipped_limit, r.complete
        ));
        for c in &r.counterexamples {
            out.push_str(&format!("        counterexample {c:?}\n"));
        }
    }
    out
}
