//! Report values emitted by the subcommands, as JSON (field order is the
//! declaration order below) or `;`-delimited CSV.

use serde::Serialize;
use tbf_core::hypersurface::VerificationReport;
use tbf_core::survey::{AxiomReport, SurveyReport, ValidTReport};

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupSummary {
    pub ring: Vec<usize>,
    pub gaps: Vec<usize>,
    pub frobenius: i64,
    pub conductor: usize,
    pub test_ideal: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealResult {
    pub ring: Vec<usize>,
    pub op: &'static str,
    pub operands: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_ideal: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub result: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StarBfVerdict {
    pub ring: Vec<usize>,
    pub op: &'static str,
    pub ideal: Vec<usize>,
    pub star: Vec<usize>,
    pub bf: Vec<usize>,
    pub verdict: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HyperSummary {
    pub p: u32,
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Report {
    Semigroup(SemigroupSummary),
    Ideal(IdealResult),
    StarBf(StarBfVerdict),
    Survey(SurveyReport),
    Axioms(AxiomReport),
    FindT(ValidTReport),
    Hyper(HyperSummary),
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl Report {
    /// Whether every check carried by the report holds.
    pub fn passed(&self) -> bool {
        match self {
            Report::Semigroup(_) | Report::Ideal(_) => true,
            Report::StarBf(v) => v.verdict,
            Report::Survey(s) => s.all_star_checks_pass(),
            Report::Axioms(a) => a.violations.is_empty(),
            Report::FindT(t) => t.outside_test_ideal.is_empty() && t.valid.contains(&t.test_ideal),
            Report::Hyper(h) => h.passed,
        }
    }

    /// One line per failed check, for stderr.
    pub fn failures(&self) -> Vec<String> {
        match self {
            Report::StarBf(v) if !v.verdict => vec![format!(
                "star-bf: (mI:m) = ({}) differs from I^* = ({})",
                list(&v.bf),
                list(&v.star)
            )],
            Report::Survey(s) => {
                let mut out: Vec<String> = s
                    .records
                    .iter()
                    .filter(|r| !(r.verdict_star_bf && r.verdict_star_tau_bf))
                    .map(|r| format!("survey: ideal ({}) star_bf={} star_tau_bf={}", list(&r.ideal_gens), r.verdict_star_bf, r.verdict_star_tau_bf))
                    .collect();
                if !s.frobenius_witness_ok {
                    out.push("survey: frobenius witness".into());
                }
                if s.axiom_violations > 0 {
                    out.push(format!("survey: {} axiom violations", s.axiom_violations));
                }
                out
            }
            Report::Axioms(a) => a
                .violations
                .iter()
                .map(|v| format!("axioms: trial {} {} {} I=({}) J=({}) T=({})", v.trial, v.closure, v.property, list(&v.i), list(&v.j), list(&v.t)))
                .collect(),
            Report::FindT(t) => {
                let mut out: Vec<String> = t
                    .outside_test_ideal
                    .iter()
                    .map(|g| format!("find-t: T = ({}) is not inside the test ideal", list(g)))
                    .collect();
                if !t.valid.contains(&t.test_ideal) {
                    out.push("find-t: test ideal is not a valid T".into());
                }
                out
            }
            Report::Hyper(h) => h
                .reports
                .iter()
                .flat_map(|r| {
                    r.failures().map(move |c| {
                        format!("{}: {} {:?} {}", r.suite, c.name, c.parameters, c.witness.clone().unwrap_or_default())
                    })
                })
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self).map(|s| s + "\n")
    }

    fn csv_table(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        match self {
            Report::Semigroup(s) => (
                vec!["ring", "gaps", "frobenius", "conductor", "test_ideal"],
                vec![vec![list(&s.ring), list(&s.gaps), s.frobenius.to_string(), s.conductor.to_string(), list(&s.test_ideal)]],
            ),
            Report::Ideal(i) => (
                vec!["op", "operands", "t_ideal", "result"],
                vec![vec![
                    i.op.to_string(),
                    i.operands.iter().map(|o| list(o)).collect::<Vec<_>>().join(" "),
                    i.t_ideal.as_deref().map(list).unwrap_or_default(),
                    list(&i.result),
                ]],
            ),
            Report::StarBf(v) => (
                vec!["ideal", "star", "bf", "verdict"],
                vec![vec![list(&v.ideal), list(&v.star), list(&v.bf), v.verdict.to_string()]],
            ),
            Report::Survey(s) => (
                vec!["ideal_gens", "star_gens", "bf_gens", "basically_full", "star_bf", "star_tau_bf"],
                s.records
                    .iter()
                    .map(|r| {
                        vec![
                            list(&r.ideal_gens),
                            list(&r.star_gens),
                            list(&r.bf_gens),
                            r.verdict_basically_full.to_string(),
                            r.verdict_star_bf.to_string(),
                            r.verdict_star_tau_bf.to_string(),
                        ]
                    })
                    .collect(),
            ),
            Report::Axioms(a) => (
                vec!["trial", "closure", "property", "i", "j", "t"],
                a.violations
                    .iter()
                    .map(|v| vec![v.trial.to_string(), v.closure.clone(), v.property.to_string(), list(&v.i), list(&v.j), list(&v.t)])
                    .collect(),
            ),
            Report::FindT(t) => (
                vec!["t_gens", "inside_test_ideal"],
                t.valid
                    .iter()
                    .map(|g| vec![list(g), (!t.outside_test_ideal.contains(g)).to_string()])
                    .collect(),
            ),
            Report::Hyper(h) => (
                vec!["suite", "name", "parameters", "verdict", "witness"],
                h.reports
                    .iter()
                    .flat_map(|r| {
                        r.checks.iter().map(move |c| {
                            let params: Vec<String> = c.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                            vec![
                                r.suite.clone(),
                                c.name.clone(),
                                params.join(","),
                                c.verdict.to_string(),
                                c.witness.clone().unwrap_or_default(),
                            ]
                        })
                    })
                    .collect(),
            ),
        }
    }

    pub fn to_csv(&self) -> csv::Result<String> {
        let (header, rows) = self.csv_table();
        let mut w = csv::WriterBuilder::new().delimiter(b';').from_writer(Vec::new());
        w.write_record(&header)?;
        for row in rows {
            w.write_record(&row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
