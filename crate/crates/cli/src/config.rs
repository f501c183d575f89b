//! Command-line configuration and its inverse, [`RunConfig::to_argv`].

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

/// Comma-separated integers, e.g. `4,5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenList(pub Vec<i64>);

impl FromStr for GenList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad generator {x:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(GenList)
    }
}

impl fmt::Display for GenList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Inclusive range `lo-hi`, or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TRange {
    pub lo: u32,
    pub hi: u32,
}

impl TRange {
    pub fn values(&self) -> Vec<u32> {
        (self.lo..=self.hi).collect()
    }
}

impl FromStr for TRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("bad t value {x:?}: {e}"));
        let (lo, hi) = match s.split_once('-') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let t = parse(s)?;
                (t, t)
            }
        };
        if lo > hi {
            return Err(format!("empty t range {s}"));
        }
        Ok(TRange { lo, hi })
    }
}

impl fmt::Display for TRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}-{}", self.lo, self.hi)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Sum,
    Product,
    Colon,
    Intersect,
    Star,
    Integral,
    Fpow,
    Tbf,
    Bf,
    StarBf,
}

impl Op {
    /// Number of `--ideal` operands the operation takes.
    pub fn arity(self) -> usize {
        match self {
            Op::Sum | Op::Product | Op::Colon | Op::Intersect => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Op::Sum => "sum",
            Op::Product => "product",
            Op::Colon => "colon",
            Op::Intersect => "intersect",
            Op::Star => "star",
            Op::Integral => "integral",
            Op::Fpow => "fpow",
            Op::Tbf => "tbf",
            Op::Bf => "bf",
            Op::StarBf => "star-bf",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "tbf", version, about = "Closure operations in numerical semigroup rings and Fermat-type hypersurfaces")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Gaps, Frobenius number, conductor and test ideal of a semigroup.
    Semigroup {
        #[arg(long)]
        gens: GenList,
    },
    /// Ideal arithmetic and closures.
    Ideal {
        #[arg(long)]
        gens: GenList,
        #[arg(long, value_enum)]
        op: Op,
        /// Ideal operand; repeat for binary operations.
        #[arg(long = "ideal", required = true)]
        ideals: Vec<GenList>,
        /// `T` for `--op tbf`.
        #[arg(long)]
        t_ideal: Option<GenList>,
        /// Characteristic for `--op fpow` (raises to `q = p`).
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Classify every m-primary monomial ideal containing all `b >= bound`.
    Survey {
        #[arg(long)]
        gens: GenList,
        #[arg(long, default_value_t = 12)]
        bound: usize,
        /// Prime for the Frobenius witness.
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Axiom trials to attach to the report; 0 skips them.
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded closure-axiom checks over every registered closure.
    Axioms {
        #[arg(long)]
        gens: GenList,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every `T` for which all enumerated ideals are star-T-basically full.
    FindT {
        #[arg(long)]
        gens: GenList,
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
    /// Checks in `F_p(u,v,w)[[x,y,z]]/(ux^p+vy^p+wz^p)`.
    Hyper {
        #[command(subcommand)]
        command: HyperCommand,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum HyperCommand {
    /// Closure of `(y^t, z^t)`, colon chain, counterexample and Frobenius
    /// closure suites.
    Verify {
        #[arg(long)]
        p: u32,
        /// `t` value or inclusive range `lo-hi`; defaults to `p`.
        #[arg(long)]
        t: Option<TRange>,
        /// Degree bound; defaults to `3 * max t + p`.
        #[arg(long)]
        deg: Option<u32>,
    },
    /// The explicit ideals that are not star-tau-basically full.
    Counterexample {
        #[arg(long)]
        p: u32,
    },
}

impl RunConfig {
    pub fn parse_argv<I, T>(argv: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        RunConfig::try_parse_from(argv)
    }

    /// Rejects combinations that parse but cannot run.
    pub fn validate(&self) -> Result<(), String> {
        match &self.command {
            Command::Ideal { op, ideals, t_ideal, .. } => {
                if ideals.len() != op.arity() {
                    return Err(format!(
                        "--op {} takes {} --ideal operand(s), got {}",
                        op.name(),
                        op.arity(),
                        ideals.len()
                    ));
                }
                if *op == Op::Tbf && t_ideal.is_none() {
                    return Err("--op tbf requires --t-ideal".into());
                }
                if *op != Op::Tbf && t_ideal.is_some() {
                    return Err("--t-ideal is only used by --op tbf".into());
                }
            }
            Command::Axioms { trials, .. } if *trials == 0 => {
                return Err("--trials must be at least 1".into());
            }
            _ => {}
        }
        Ok(())
    }

    /// Arguments that parse back to this configuration, program name first.
    pub fn to_argv(&self) -> Vec<String> {
        let mut a: Vec<String> = vec!["tbf".into()];
        let flag = |a: &mut Vec<String>, name: &str, value: String| {
            a.push(format!("--{name}"));
            a.push(value);
        };
        match &self.command {
            Command::Semigroup { gens } => {
                a.push("semigroup".into());
                flag(&mut a, "gens", gens.to_string());
            }
            Command::Ideal { gens, op, ideals, t_ideal, p } => {
                a.push("ideal".into());
                flag(&mut a, "gens", gens.to_string());
                flag(&mut a, "op", op.name().into());
                for i in ideals {
                    flag(&mut a, "ideal", i.to_string());
                }
                if let Some(t) = t_ideal {
                    flag(&mut a, "t-ideal", t.to_string());
                }
                flag(&mut a, "p", p.to_string());
            }
            Command::Survey { gens, bound, p, trials, seed } => {
                a.push("survey".into());
                flag(&mut a, "gens", gens.to_string());
                flag(&mut a, "bound", bound.to_string());
                flag(&mut a, "p", p.to_string());
                flag(&mut a, "trials", trials.to_string());
                flag(&mut a, "seed", seed.to_string());
            }
            Command::Axioms { gens, trials, seed } => {
                a.push("axioms".into());
                flag(&mut a, "gens", gens.to_string());
                flag(&mut a, "trials", trials.to_string());
                flag(&mut a, "seed", seed.to_string());
            }
            Command::FindT { gens, bound } => {
                a.push("find-t".into());
                flag(&mut a, "gens", gens.to_string());
                flag(&mut a, "bound", bound.to_string());
            }
            Command::Hyper { command } => {
                a.push("hyper".into());
                match command {
                    HyperCommand::Verify { p, t, deg } => {
                        a.push("verify".into());
                        flag(&mut a, "p", p.to_string());
                        if let Some(t) = t {
                            flag(&mut a, "t", t.to_string());
                        }
                        if let Some(d) = deg {
                            flag(&mut a, "deg", d.to_string());
                        }
                    }
                    HyperCommand::Counterexample { p } => {
                        a.push("counterexample".into());
                        flag(&mut a, "p", p.to_string());
                    }
                }
            }
        }
        let format = match self.format {
            Format::Json => "json",
            Format::Csv => "csv",
        };
        flag(&mut a, "format", format.into());
        if let Some(out) = &self.out {
            flag(&mut a, "out", out.display().to_string());
        }
        a
    }
}
