//! Command-line front end for `tbf-core`.
//!
//! Exit codes: 0 when every check in the report holds, 1 when a
//! verification fails (the failing checks are also listed on stderr), 2 for
//! usage or configuration errors.

pub mod config;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::sync::Arc;

use config::{Command, Format, HyperCommand, Op, RunConfig};
use report::{HyperSummary, IdealResult, Report, SemigroupSummary, StarBfVerdict};
use tbf_core::hypersurface::{verify_counterexample, verify_frobenius_closure, verify_ytzt_closure};
use tbf_core::survey::{axiom_check, classify, find_valid_t};
use tbf_core::{test_ideal, ClosureContext, ClosureRegistry, NumericalSemigroup, SemigroupIdeal};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn ring(gens: &config::GenList) -> tbf_core::Result<Arc<NumericalSemigroup>> {
    NumericalSemigroup::from_generators(&gens.0).map(Arc::new)
}

fn gens_of(i: &SemigroupIdeal) -> Vec<usize> {
    i.generators_or_empty()
}

fn ideal_report(
    gens: &config::GenList,
    op: Op,
    ideals: &[config::GenList],
    t_ideal: Option<&config::GenList>,
    p: u32,
) -> tbf_core::Result<Report> {
    let r = ring(gens)?;
    let operands: Vec<SemigroupIdeal> = ideals
        .iter()
        .map(|g| SemigroupIdeal::from_generators(&r, &g.0))
        .collect::<tbf_core::Result<_>>()?;
    let t = t_ideal.map(|g| SemigroupIdeal::from_generators(&r, &g.0)).transpose()?;
    let ring_gens = r.generators().to_vec();
    let first = &operands[0];

    if op == Op::StarBf {
        let registry = ClosureRegistry::default();
        let ctx = ClosureContext { ring: &r, t: None };
        let star = registry.build("star", &ctx)?.close(first)?;
        let bf = registry.build("bf", &ctx)?.close(first)?;
        return Ok(Report::StarBf(StarBfVerdict {
            ring: ring_gens,
            op: op.name(),
            ideal: gens_of(first),
            star: gens_of(&star),
            bf: gens_of(&bf),
            verdict: first.is_star_basically_full()?,
        }));
    }

    let mut q = None;
    let result = match op {
        Op::Sum => first.sum(&operands[1])?,
        Op::Product => first.product(&operands[1])?,
        Op::Colon => first.colon(&operands[1])?,
        Op::Intersect => first.intersect(&operands[1])?,
        Op::Fpow => {
            q = Some(p as usize);
            first.frobenius_power(p as usize)?
        }
        Op::Star | Op::Integral | Op::Tbf | Op::Bf => {
            let name = match op {
                Op::Star => "star",
                Op::Integral => "integral",
                Op::Tbf => "tbf",
                _ => "bf",
            };
            let ctx = ClosureContext { ring: &r, t: t.as_ref() };
            ClosureRegistry::default().build(name, &ctx)?.close(first)?
        }
        Op::StarBf => unreachable!(),
    };
    Ok(Report::Ideal(IdealResult {
        ring: ring_gens,
        op: op.name(),
        operands: operands.iter().map(gens_of).collect(),
        t_ideal: t.as_ref().map(gens_of),
        q,
        result: gens_of(&result),
    }))
}

/// Computes the report for a validated configuration.
pub fn build_report(cfg: &RunConfig) -> tbf_core::Result<Report> {
    Ok(match &cfg.command {
        Command::Semigroup { gens } => {
            let r = ring(gens)?;
            Report::Semigroup(SemigroupSummary {
                ring: r.generators().to_vec(),
                gaps: r.gaps(),
                frobenius: r.frobenius_number(),
                conductor: r.conductor_exponent(),
                test_ideal: gens_of(&test_ideal(&r)),
            })
        }
        Command::Ideal { gens, op, ideals, t_ideal, p } => ideal_report(gens, *op, ideals, t_ideal.as_ref(), *p)?,
        Command::Survey { gens, bound, p, trials, seed } => {
            let r = ring(gens)?;
            let mut report = classify(&r, *bound, *p)?;
            if *trials > 0 {
                report.attach_axioms(&axiom_check(&r, *trials, *seed, &ClosureRegistry::default())?);
            }
            Report::Survey(report)
        }
        Command::Axioms { gens, trials, seed } => {
            let r = ring(gens)?;
            Report::Axioms(axiom_check(&r, *trials, *seed, &ClosureRegistry::default())?)
        }
        Command::FindT { gens, bound } => Report::FindT(find_valid_t(&ring(gens)?, *bound)?.1),
        Command::Hyper { command } => {
            let (p, reports) = match command {
                HyperCommand::Verify { p, t, deg } => {
                    let ts = t.map_or(vec![*p], |t| t.values());
                    let d = deg.unwrap_or(3 * ts.iter().max().unwrap() + p);
                    (*p, vec![verify_ytzt_closure(*p, &ts, d)?, verify_frobenius_closure(*p)?])
                }
                HyperCommand::Counterexample { p } => (*p, vec![verify_counterexample(*p)?]),
            };
            Report::Hyper(HyperSummary {
                p,
                passed: reports.iter().all(|r| r.all_passed()),
                reports,
            })
        }
    })
}

/// Parses `argv` (program name first), runs, writes the report and returns
/// the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::parse_argv(argv) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Err(msg) = cfg.validate() {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let report = match build_report(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = match cfg.format {
        Format::Json => report.to_json().map_err(|e| e.to_string()),
        Format::Csv => report.to_csv().map_err(|e| e.to_string()),
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        EXIT_OK
    } else {
        for line in report.failures() {
            eprintln!("failed: {line}");
        }
        EXIT_FAILED
    }
}
