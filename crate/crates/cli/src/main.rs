//! Command line front end: compute a single polynomial, run a verification
//! sweep comparing the enumeration and determinant sides, or print the three
//! counterexample instances where the determinant stays nonzero while the
//! enumeration vanishes.
//!
//! Exit codes: 0 success, 1 a sweep found a mismatch, 2 usage error,
//! 3 domain error (for example a non-partition where one is required).

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jtdual::alphabets::{h_pleth, x_interval};
use jtdual::jacobi_trudi::{
    e_det, e_det_finite, e_entry, ee_partial, g_dual_via_phi, h_det, h_entry, hh_partial, JtError,
    RingMatrix, RowSet,
};
use jtdual::polyring::{Polynomial, TAssignment};
use jtdual::rpp_enum::{
    g_col_flagged, g_row_flagged, g_unflagged_truncated, r_bar_partial, r_partial, PartialFilling,
};
use jtdual::shapes::{
    flag_condition_col, flag_condition_row, parse_part_list, weakly_decreasing_vectors, Flags,
    Partition, SkewShape,
};

#[derive(Parser)]
#[command(name = "jtdual", version, about = "Flagged refined dual stable Grothendieck polynomials: enumeration, determinants, and verification sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one polynomial and print it
    Compute(ComputeArgs),
    /// Sweep small instances and compare two ways of computing each one
    Verify(VerifyArgs),
    /// Print the three instances showing which hypotheses the determinant
    /// formulas cannot do without
    DemoRemarks,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Enumerate fillings and sum their weights
    Enum,
    /// Determinant with elementary-symmetric entries (column flags)
    DetE,
    /// Same determinant, entries on explicit finite variable lists
    DetEFinite,
    /// Determinant with complete homogeneous entries (row flags)
    DetH,
    /// Determinant of shifted h-operators; equals the t = 1 specialization
    PhiT1,
}

#[derive(Args)]
struct ComputeArgs {
    /// Outer shape, comma-separated parts (e.g. 3,3,1)
    #[arg(long)]
    outer: String,
    /// Inner shape, zero-padded against the outer shape
    #[arg(long, default_value = "")]
    inner: String,
    /// Flags index rows of the shape
    #[arg(long, conflicts_with = "col")]
    row: bool,
    /// Flags index columns of the shape
    #[arg(long)]
    col: bool,
    /// Lower flags, one per row of the shape
    #[arg(long)]
    alpha: Option<String>,
    /// Upper flags, one per row of the shape
    #[arg(long)]
    beta: Option<String>,
    /// Truncate to the variables x_1..x_nx (unflagged computations only)
    #[arg(long)]
    nx: Option<u32>,
    #[arg(long, value_enum, default_value_t = Method::Enum)]
    method: Method,
    /// Substitute every t variable by 0 or 1 after computing
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    t: Option<u8>,
    /// Print the polynomial as JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum VerifyMode {
    /// Column-flagged: determinant against enumeration
    Col,
    /// Row-flagged: determinant against enumeration
    Row,
    /// Finite-list entries against prefix-alphabet entries, no filter
    Equiv,
    /// t = 0 against the plain Schur determinant
    T0,
    /// t = 1 against the shifted-h determinant
    T1,
    /// Branching recurrence at every cell on random instances
    Partial,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    mode: VerifyMode,
    /// Largest part allowed in the swept shapes
    #[arg(long, default_value_t = 3)]
    max_part: u32,
    /// Largest number of rows in the swept shapes
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    /// Largest flag value in the swept flag vectors
    #[arg(long, default_value_t = 3)]
    max_flag: u32,
    /// Seed for the randomized modes
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Truncation for the t0/t1 modes (defaults: 4 for t0, 3 for t1)
    #[arg(long)]
    nx: Option<u32>,
    /// Print the report as JSON
    #[arg(long)]
    json: bool,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(args) => run_compute(&args),
        Command::Verify(args) => run_verify(&args),
        Command::DemoRemarks => run_demo(),
    };
    std::process::exit(code);
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<JtError> for CliError {
    fn from(e: JtError) -> CliError {
        CliError::Domain(e.to_string())
    }
}

fn run_compute(args: &ComputeArgs) -> i32 {
    match compute_polynomial(args) {
        Ok(p) => {
            if args.json {
                println!("{}", p.to_json());
            } else {
                println!("{}", p.canonical_string());
            }
            0
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}

fn parse_parts(text: &str, what: &str) -> Result<Vec<u32>, CliError> {
    parse_part_list(text).map_err(|e| CliError::Usage(format!("bad {what}: {e}")))
}

// transpose of a partition, padded to `rows` rows
fn transpose_to(parts: &[u32], rows: usize) -> Vec<u32> {
    Partition::new(parts.to_vec()).transpose_with_len(rows).parts().to_vec()
}

fn compute_polynomial(args: &ComputeArgs) -> Result<Polynomial, CliError> {
    let mut outer = parse_parts(&args.outer, "--outer")?;
    let mut inner = parse_parts(&args.inner, "--inner")?;
    let n = outer.len().max(inner.len());
    outer.resize(n, 0);
    inner.resize(n, 0);
    let shape = SkewShape::new(outer.clone(), inner.clone());

    let flagged = args.row || args.col;
    if flagged && args.nx.is_some() {
        return Err(CliError::Usage("--nx only applies without --row/--col".into()));
    }
    if !flagged && (args.alpha.is_some() || args.beta.is_some()) {
        return Err(CliError::Usage("--alpha/--beta need --row or --col".into()));
    }

    let flags = if flagged {
        let (Some(alpha), Some(beta)) = (&args.alpha, &args.beta) else {
            return Err(CliError::Usage("--row/--col need both --alpha and --beta".into()));
        };
        let alpha = parse_parts(alpha, "--alpha")?;
        let beta = parse_parts(beta, "--beta")?;
        if alpha.len() != n || beta.len() != n {
            return Err(CliError::Usage(format!(
                "flags must have one entry per row ({n}), got {} and {}",
                alpha.len(),
                beta.len()
            )));
        }
        Some(Flags::new(alpha, beta))
    } else {
        None
    };

    let poly = match (&flags, args.method) {
        (Some(_), Method::PhiT1) => {
            return Err(CliError::Usage("--method phi-t1 is unflagged; drop --row/--col".into()))
        }
        (Some(_), Method::DetE | Method::DetEFinite) if args.row => {
            return Err(CliError::Usage(
                "--method det-e/det-e-finite pair with --col (or no flags), not --row".into(),
            ))
        }
        (Some(_), Method::DetH) if args.col => {
            return Err(CliError::Usage("--method det-h pairs with --row (or no flags), not --col".into()))
        }

        (Some(flags), Method::Enum) if args.row => g_row_flagged(&shape, flags),
        (Some(flags), Method::DetH) => h_det(&shape, flags)?,
        (Some(flags), Method::Enum) => {
            // flags address columns: enumerate the transposed shape
            if shape.is_valid() {
                let rows = outer[0] as usize;
                let col_shape = SkewShape::new(transpose_to(&outer, rows), transpose_to(&inner, rows));
                g_col_flagged(&col_shape, flags)
            } else {
                Polynomial::zero()
            }
        }
        (Some(flags), Method::DetE) => e_det(&shape, flags)?,
        (Some(flags), Method::DetEFinite) => e_det_finite(&shape, flags)?,

        (None, method) => {
            let Some(nx) = args.nx else {
                return Err(CliError::Usage("--nx is required without --row/--col".into()));
            };
            match method {
                Method::Enum => g_unflagged_truncated(&shape, nx),
                Method::DetH => h_det(&shape, &Flags::constant(n, 0, nx))?,
                Method::PhiT1 => g_dual_via_phi(&shape, nx)?,
                Method::DetE | Method::DetEFinite => {
                    if !jtdual::shapes::is_weakly_decreasing(&outer)
                        || !jtdual::shapes::is_weakly_decreasing(&inner)
                    {
                        return Err(CliError::Domain(JtError::NonPartitionInput.to_string()));
                    }
                    let rows = outer.first().copied().max(inner.first().copied()).unwrap_or(0) as usize;
                    let t_shape = SkewShape::new(transpose_to(&outer, rows), transpose_to(&inner, rows));
                    let t_flags = Flags::constant(rows, 0, nx);
                    if method == Method::DetE {
                        e_det(&t_shape, &t_flags)?
                    } else {
                        e_det_finite(&t_shape, &t_flags)?
                    }
                }
            }
        }
    };

    match args.t {
        // uniform assignment covers every t index, so this cannot fail
        Some(v) => Ok(poly.substitute_t(&TAssignment::uniform(v)).unwrap()),
        None => Ok(poly),
    }
}

struct Mismatch {
    order: (usize, usize),
    request: String,
    lhs: String,
    rhs: String,
}

struct Report {
    cases: u64,
    mismatches: u64,
    first: Option<Mismatch>,
}

impl Report {
    fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.mismatches += other.mismatches;
        self.first = match (self.first.take(), other.first) {
            (Some(a), Some(b)) => Some(if a.order <= b.order { a } else { b }),
            (a, b) => a.or(b),
        };
    }
}

fn thread_count() -> usize {
    let available = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var("JT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        Some(n) if n >= 1 => n.min(available.max(1)),
        _ => available,
    }
}

// Every (outer, inner) pair with the given bounds, both weakly decreasing,
// containment NOT required: the sweeps must also exercise the vanishing cases.
fn shape_pairs(max_len: usize, max_part: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for outer in weakly_decreasing_vectors(n, max_part) {
            for inner in weakly_decreasing_vectors(n, max_part) {
                out.push((outer.clone(), inner));
            }
        }
    }
    out
}

fn all_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * (max as usize + 1));
        for v in &out {
            for value in 0..=max {
                let mut w = v.clone();
                w.push(value);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn fmt_parts(parts: &[u32]) -> String {
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

fn fmt_request(outer: &[u32], inner: &[u32], flags: Option<&Flags>) -> String {
    let mut s = format!("outer={} inner={}", fmt_parts(outer), fmt_parts(inner));
    if let Some(f) = flags {
        let _ = write!(s, " alpha={} beta={}", fmt_parts(&f.alpha), fmt_parts(&f.beta));
    }
    s
}

// Run `check` over all (pair, flag vector) requests, sharded by pair across
// worker threads. The reported first mismatch is the smallest request index,
// independent of scheduling.
fn sweep_flagged(
    args: &VerifyArgs,
    check: impl Fn(&[u32], &[u32], &Flags) -> Option<(String, String)> + Sync,
) -> Report {
    let pairs = shape_pairs(args.max_len, args.max_part);
    let workers = thread_count();
    let run_slice = |worker: usize| -> Report {
        let mut report = Report { cases: 0, mismatches: 0, first: None };
        for (pair_idx, (outer, inner)) in pairs.iter().enumerate() {
            if pair_idx % workers != worker {
                continue;
            }
            let n = outer.len();
            let flag_vecs = all_vectors(n, args.max_flag);
            let mut flag_idx = 0;
            for alpha in &flag_vecs {
                for beta in &flag_vecs {
                    let flags = Flags::new(alpha.clone(), beta.clone());
                    let order = (pair_idx, flag_idx);
                    flag_idx += 1;
                    if let Some((lhs, rhs)) = check(outer, inner, &flags) {
                        report.cases += 1;
                        if lhs != rhs {
                            report.mismatches += 1;
                            let better = report.first.as_ref().is_none_or(|m| order < m.order);
                            if better {
                                report.first = Some(Mismatch {
                                    order,
                                    request: fmt_request(outer, inner, Some(&flags)),
                                    lhs,
                                    rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
        report
    };
    let mut total = Report { cases: 0, mismatches: 0, first: None };
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers).map(|w| scope.spawn(move || run_slice(w))).collect();
        for h in handles {
            total.absorb(h.join().expect("verify worker panicked"));
        }
    });
    total
}

fn sweep_pairs(
    args: &VerifyArgs,
    check: impl Fn(&[u32], &[u32]) -> (String, String) + Sync,
) -> Report {
    let pairs = shape_pairs(args.max_len, args.max_part);
    let workers = thread_count();
    let run_slice = |worker: usize| -> Report {
        let mut report = Report { cases: 0, mismatches: 0, first: None };
        for (pair_idx, (outer, inner)) in pairs.iter().enumerate() {
            if pair_idx % workers != worker {
                continue;
            }
            let (lhs, rhs) = check(outer, inner);
            report.cases += 1;
            if lhs != rhs {
                report.mismatches += 1;
                let order = (pair_idx, 0);
                if report.first.as_ref().is_none_or(|m| order < m.order) {
                    report.first = Some(Mismatch { order, request: fmt_request(outer, inner, None), lhs, rhs });
                }
            }
        }
        report
    };
    let mut total = Report { cases: 0, mismatches: 0, first: None };
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers).map(|w| scope.spawn(move || run_slice(w))).collect();
        for h in handles {
            total.absorb(h.join().expect("verify worker panicked"));
        }
    });
    total
}

fn run_verify(args: &VerifyArgs) -> i32 {
    let start = Instant::now();
    let report = match args.mode {
        VerifyMode::Col => sweep_flagged(args, |outer, inner, flags| {
            let shape = SkewShape::new(outer.to_vec(), inner.to_vec());
            if !flag_condition_col(&shape, flags) {
                return None;
            }
            let rows = outer[0] as usize;
            let col_shape = if shape.is_valid() {
                SkewShape::new(transpose_to(outer, rows), transpose_to(inner, rows))
            } else {
                // any invalid stand-in keeps the enumeration at zero
                SkewShape::new(vec![0], vec![1])
            };
            Some((
                e_det(&shape, flags).unwrap().canonical_string(),
                g_col_flagged(&col_shape, flags).canonical_string(),
            ))
        }),
        VerifyMode::Row => sweep_flagged(args, |outer, inner, flags| {
            let shape = SkewShape::new(outer.to_vec(), inner.to_vec());
            if !flag_condition_row(&shape, flags) {
                return None;
            }
            Some((
                h_det(&shape, flags).unwrap().canonical_string(),
                g_row_flagged(&shape, flags).canonical_string(),
            ))
        }),
        VerifyMode::Equiv => sweep_flagged(args, |outer, inner, flags| {
            let shape = SkewShape::new(outer.to_vec(), inner.to_vec());
            Some((
                e_det_finite(&shape, flags).unwrap().canonical_string(),
                e_det(&shape, flags).unwrap().canonical_string(),
            ))
        }),
        VerifyMode::T0 => {
            let nx = args.nx.unwrap_or(4);
            sweep_pairs(args, |outer, inner| {
                let shape = SkewShape::new(outer.to_vec(), inner.to_vec());
                let lhs = g_unflagged_truncated(&shape, nx)
                    .substitute_t(&TAssignment::uniform(0))
                    .unwrap();
                let rhs = RingMatrix::from_fn(outer.len(), |i, j| {
                    let k = outer[i - 1] as i64 - inner[j - 1] as i64 - i as i64 + j as i64;
                    h_pleth(k, &x_interval(0, nx as i64))
                })
                .det();
                (lhs.canonical_string(), rhs.canonical_string())
            })
        }
        VerifyMode::T1 => {
            let nx = args.nx.unwrap_or(3);
            sweep_pairs(args, |outer, inner| {
                let shape = SkewShape::new(outer.to_vec(), inner.to_vec());
                let lhs = g_unflagged_truncated(&shape, nx)
                    .substitute_t(&TAssignment::uniform(1))
                    .unwrap();
                let rhs = g_dual_via_phi(&shape, nx).unwrap();
                (lhs.canonical_string(), rhs.canonical_string())
            })
        }
        VerifyMode::Partial => verify_partial(args.seed, args.max_part.max(1), args.max_len.max(1)),
    };

    let elapsed = start.elapsed();
    if args.json {
        let first = report.first.as_ref().map(|m| {
            serde_json::json!({
                "request": m.request,
                "lhs": m.lhs,
                "rhs": m.rhs,
            })
        });
        let out = serde_json::json!({
            "mode": format!("{:?}", args.mode).to_lowercase(),
            "cases_run": report.cases,
            "mismatches": report.mismatches,
            "first_mismatch": first,
            "elapsed_ms": elapsed.as_millis() as u64,
        });
        println!("{out}");
    } else {
        println!("cases run: {}", report.cases);
        println!("mismatches: {}", report.mismatches);
        if let Some(m) = &report.first {
            println!("first mismatch:");
            println!("  request: {}", m.request);
            println!("  lhs: {}", m.lhs);
            println!("  rhs: {}", m.rhs);
        }
        println!("elapsed: {elapsed:?}");
    }
    if report.mismatches > 0 {
        1
    } else {
        0
    }
}

fn sorted_desc(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn draw_nearly_increasing(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Vec<u32> {
    loop {
        let v: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max)).collect();
        if v.windows(2).all(|w| w[0] <= w[1] + 1) {
            return v;
        }
    }
}

fn draw_upper(rng: &mut ChaCha8Rng, alpha: &[u32], increasing: bool) -> Vec<u32> {
    loop {
        let v: Vec<u32> = alpha.iter().map(|a| rng.random_range(a + 1..=a + 3)).collect();
        let ok = if increasing {
            v.windows(2).all(|w| w[0] <= w[1])
        } else {
            v.windows(2).all(|w| w[0] <= w[1] + 1)
        };
        if ok {
            return v;
        }
    }
}

// One descent of the fill order checking the branching identity at each cell;
// returns the first failing state, if any.
fn walk_partial(
    rng: &mut ChaCha8Rng,
    flags: &Flags,
    shape: &SkewShape,
    value: &dyn Fn(&Flags, &PartialFilling) -> Polynomial,
) -> Option<(String, String, String)> {
    let mut r0 = PartialFilling::empty(shape);
    while let Some((r, c)) = r0.diagram().next_cell() {
        let bounds = r0.effective_bounds(&flags.beta);
        let mut lo = flags.alpha[r - 1] + 1;
        if r > 1 && r0.diagram().contains_cell(r - 1, c) {
            lo = lo.max(bounds[r - 2]);
        }
        let hi = bounds[r - 1];
        let lhs = value(flags, &r0);
        let mut sum = Polynomial::zero();
        for k in lo..=hi {
            sum += &value(flags, &r0.extended(k));
        }
        if lhs != sum {
            return Some((
                format!("state [{r0}] at cell ({r},{c})"),
                lhs.canonical_string(),
                sum.canonical_string(),
            ));
        }
        if lo > hi {
            return None;
        }
        r0 = r0.extended(rng.random_range(lo..=hi));
    }
    None
}

fn verify_partial(seed: u64, max_part: u32, max_len: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report { cases: 0, mismatches: 0, first: None };
    for case in 0..50usize {
        let n = rng.random_range(1..=max_len);
        let lambda = sorted_desc((0..n).map(|_| rng.random_range(1..=max_part)).collect());
        let mu = sorted_desc(lambda.iter().map(|l| rng.random_range(0..*l)).collect());
        let shape = SkewShape::new(lambda.clone(), mu.clone());
        let empty = PartialFilling::empty(&shape);

        let mut fail: Option<(String, String, String)> = None;

        let alpha = draw_nearly_increasing(&mut rng, n, max_part);
        let beta = draw_upper(&mut rng, &alpha, false);
        let e_flags = Flags::new(alpha, beta);
        let lhs = ee_partial(&e_flags, &empty).unwrap();
        let rhs = r_bar_partial(&e_flags, &empty).unwrap();
        if lhs != rhs {
            fail = Some(("empty state".into(), lhs.canonical_string(), rhs.canonical_string()));
        }
        if fail.is_none() {
            fail = walk_partial(&mut rng, &e_flags, &shape, &|f, r0| ee_partial(f, r0).unwrap());
        }

        let mut alpha: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max_part)).collect();
        alpha.sort_unstable();
        let beta = draw_upper(&mut rng, &alpha, true);
        let h_flags = Flags::new(alpha, beta);
        if fail.is_none() {
            let lhs = hh_partial(&h_flags, &empty).unwrap();
            let rhs = r_partial(&h_flags, &empty).unwrap();
            if lhs != rhs {
                fail = Some(("empty state".into(), lhs.canonical_string(), rhs.canonical_string()));
            }
        }
        if fail.is_none() {
            fail = walk_partial(&mut rng, &h_flags, &shape, &|f, r0| hh_partial(f, r0).unwrap());
        }

        report.cases += 1;
        if let Some((state, lhs, rhs)) = fail {
            report.mismatches += 1;
            if report.first.is_none() {
                report.first = Some(Mismatch {
                    order: (case, 0),
                    request: format!("{} {state}", fmt_request(&lambda, &mu, Some(&e_flags))),
                    lhs,
                    rhs,
                });
            }
        }
    }
    report
}

fn run_demo() -> i32 {
    let none = RowSet::new();

    println!("== column flags on outer=3,3 inner=2,0: alpha=2,0 beta=2,2 ==");
    let (l, m) = (vec![3u32, 3], vec![2u32, 0]);
    let flags = Flags::new(vec![2, 0], vec![2, 2]);
    let shape = SkewShape::new(l.clone(), m.clone());
    println!("column flag condition: {}", flag_condition_col(&shape, &flags));
    let col_shape = SkewShape::new(vec![2, 2, 2], vec![1, 1, 0]);
    println!("enumeration: {}", g_col_flagged(&col_shape, &flags).canonical_string());
    println!("matrix:");
    for i in 1..=2 {
        let row: Vec<String> = (1..=2)
            .map(|j| e_entry(&l, &m, &flags, &none, i, j).canonical_string())
            .collect();
        println!("  [{}]", row.join(", "));
    }
    println!("determinant: {}", e_det(&shape, &flags).unwrap().canonical_string());

    println!();
    println!("== row flags on outer=2,2 inner=1,0: alpha=1,0 beta=1,1 ==");
    let (l, m) = (vec![2u32, 2], vec![1u32, 0]);
    let flags = Flags::new(vec![1, 0], vec![1, 1]);
    let shape = SkewShape::new(l.clone(), m.clone());
    println!("row flag condition: {}", flag_condition_row(&shape, &flags));
    println!("enumeration: {}", g_row_flagged(&shape, &flags).canonical_string());
    println!("matrix:");
    for i in 1..=2 {
        let row: Vec<String> = (1..=2)
            .map(|j| h_entry(&l, &m, &flags, &none, i, j).canonical_string())
            .collect();
        println!("  [{}]", row.join(", "));
    }
    println!("determinant: {}", h_det(&shape, &flags).unwrap().canonical_string());

    println!();
    println!("== row flags on outer=1,1 inner=0,1 (inner not a partition): alpha=0,0 beta=1,1 ==");
    let (l, m) = (vec![1u32, 1], vec![0u32, 1]);
    let flags = Flags::new(vec![0, 0], vec![1, 1]);
    let shape = SkewShape::new(l.clone(), m.clone());
    println!("row flag condition: {}", flag_condition_row(&shape, &flags));
    println!("enumeration: {}", g_row_flagged(&shape, &flags).canonical_string());
    println!("matrix:");
    for i in 1..=2 {
        let row: Vec<String> = (1..=2)
            .map(|j| h_entry(&l, &m, &flags, &none, i, j).canonical_string())
            .collect();
        println!("  [{}]", row.join(", "));
    }
    let det = RingMatrix::from_fn(2, |i, j| h_entry(&l, &m, &flags, &none, i, j)).det();
    println!("determinant: {}", det.canonical_string());

    0
}
