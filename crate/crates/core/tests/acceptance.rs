//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tbf_core::hypersurface::{
    check_colon_chain, check_star_equals_colon, star_ytzt_closed_form, star_ytzt_member,
    verify_counterexample, verify_frobenius_closure,
};
use tbf_core::laurent::sparse::{sparse_from_dense, sparse_rank};
use tbf_core::laurent::{solve_in_span, PolyMatrix, SpanVerdict};
use tbf_core::survey::{axiom_check, classify, enumerate_m_primary_ideals, find_valid_t};
use tbf_core::{test_ideal, ClosureRegistry, NumericalSemigroup, Result, SemigroupIdeal};

use common::minors;

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Outcome);

fn ring(gens: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
}

fn ideal(r: &Arc<NumericalSemigroup>, gens: &[i64]) -> SemigroupIdeal {
    SemigroupIdeal::from_generators(r, gens).unwrap()
}

const PROP_RINGS: [&[i64]; 5] = [&[2, 3], &[2, 5], &[3, 4], &[3, 7], &[4, 5]];

fn c1_two_five() -> Outcome {
    let r = ring(&[2, 5]);
    let m = SemigroupIdeal::maximal(&r);
    let mut fails = Vec::new();
    if test_ideal(&r).minimal_generators()? != [4, 5] {
        fails.push("test ideal".to_string());
    }
    for n in (4..=20).filter(|&n| r.has(n)) {
        let i = ideal(&r, &[n as i64]);
        let star = i.tight_closure()?.minimal_generators()?;
        let bf = i.t_basically_full_closure(&m)?.minimal_generators()?;
        if star != [n, n + 1] {
            fails.push(format!("(t^{n})^* = {star:?}"));
        }
        if bf != [n, n + 3] {
            fails.push(format!("(m(t^{n}):m) = {bf:?}"));
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c2_weakly_regular_in_m() -> Outcome {
    let mut fails = Vec::new();
    for gens in [&[2, 3][..], &[3, 4, 5]] {
        let r = ring(gens);
        if test_ideal(&r) != SemigroupIdeal::maximal(&r) {
            fails.push(format!("{r}: test ideal is not m"));
        }
        let rep = classify(&r, 12, 2)?;
        for rec in rep.records.iter().filter(|x| !x.verdict_star_bf) {
            fails.push(format!("{r}: {:?}", rec.ideal_gens));
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c3_tau_oracle() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0;
    for gens in PROP_RINGS {
        let r = ring(gens);
        let tau = test_ideal(&r);
        for i in enumerate_m_primary_ideals(&r, 12)? {
            count += 1;
            let star = i.tight_closure()?;
            let ti = tau.product(&i)?;
            if ti.colon(&tau)? != star {
                fails.push(format!("{r} {i}: (tau I:tau)"));
            }
            if ti != tau.product(&star)? {
                fails.push(format!("{r} {i}: tau I vs tau I^*"));
            }
        }
    }
    Ok((fails.is_empty(), format!("{count} ideals {}", fails.join("; "))))
}

fn c4_axioms() -> Outcome {
    let registry = ClosureRegistry::default();
    let mut fails = Vec::new();
    for gens in PROP_RINGS.iter().copied().chain([&[3, 4, 5][..]]) {
        let r = ring(gens);
        let rep = axiom_check(&r, 1000, 20_240_917, &registry)?;
        if !rep.violations.is_empty() {
            fails.push(format!("{r}: {:?}", rep.violations.first()));
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c5_not_basically_full() -> Outcome {
    let mut fails = Vec::new();
    for gens in PROP_RINGS {
        let r = ring(gens);
        let rep = classify(&r, 12, 2)?;
        if !rep.records.iter().any(|x| !x.verdict_basically_full) {
            fails.push(format!("{r}: every ideal basically full"));
        }
    }
    let r = ring(&[2, 3]);
    if ideal(&r, &[2]).is_basically_full()? {
        fails.push("(t^2) in <2,3> is basically full".into());
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c6_valid_t() -> Outcome {
    let r = ring(&[2, 5]);
    let (valid, rep) = find_valid_t(&r, 12)?;
    let tau = test_ideal(&r);
    let m = SemigroupIdeal::maximal(&r);
    let mut fails = Vec::new();
    if !valid.contains(&tau) {
        fails.push("tau missing".to_string());
    }
    if !rep.outside_test_ideal.is_empty() {
        fails.push(format!("outside tau: {:?}", rep.outside_test_ideal));
    }
    if valid.contains(&m) {
        fails.push("m present".into());
    }
    let t4 = ideal(&r, &[4]);
    if t4.t_basically_full_closure(&m)? == t4.tight_closure()? {
        fails.push("(t^4) does not witness m".into());
    }
    Ok((fails.is_empty(), format!("{} valid T {}", valid.len(), fails.join("; "))))
}

fn c7_core_identity() -> Outcome {
    let mut fails = Vec::new();
    for p in [3u32, 5] {
        for t in p..=p + 2 {
            let c = check_star_equals_colon(p, t, 3 * t + p)?;
            if !c.verdict {
                fails.push(format!("p={p} t={t} {:?}", c.witness));
            }
        }
        for k in 0..p {
            for r in 0..=3 * p {
                for s in 0..=3 * p {
                    for t in 0..=3 * p {
                        if star_ytzt_member(p, k, r, s, t)? != star_ytzt_closed_form(k, r, s, t) {
                            fails.push(format!("p={p} k={k} r={r} s={s} t={t}"));
                        }
                    }
                }
            }
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c8_colon_chain() -> Outcome {
    let mut fails = Vec::new();
    for p in [3u32, 5] {
        let t = p;
        for l in 1..2 * t {
            let c = check_colon_chain(p, t, l, 3 * t + p)?;
            if !c.verdict {
                fails.push(c.witness.unwrap_or_default());
            }
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c9_counterexamples() -> Outcome {
    let mut fails = Vec::new();
    for p in [5, 3] {
        for c in verify_counterexample(p)?.failures() {
            fails.push(format!("p={p} {} {:?}", c.name, c.witness));
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c10_frobenius_closure() -> Outcome {
    let mut fails = Vec::new();
    for p in [3, 5] {
        for c in verify_frobenius_closure(p)?.failures() {
            fails.push(format!("p={p} {} {:?}", c.name, c.witness));
        }
    }
    Ok((fails.is_empty(), fails.join("; ")))
}

fn c11_linear_algebra_oracle() -> Outcome {
    let sizes = [(3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (5, 6), (6, 6), (6, 8)];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut fails = Vec::new();
    let mut deficient = 0;
    let mut members = 0;
    for (rows, cols) in sizes {
        for trial in 0..200 {
            let p = if trial % 2 == 0 { 5 } else { 7 };
            let a = common::random_matrix(&mut rng, p, rows, cols);
            let target = common::random_target(&mut rng, p, &a);
            let m = PolyMatrix::from_rows(p, cols, a.clone())?;

            let rank = m.rank();
            let oracle_rank = minors::rank(&a);
            let sparse: Vec<_> = a.iter().map(|r| sparse_from_dense(r)).collect();
            if rank != oracle_rank || sparse_rank(p, &sparse) != oracle_rank {
                fails.push(format!("{rows}x{cols}#{trial} rank"));
            }
            if rank < rows.min(cols) {
                deficient += 1;
            }

            let columns: Vec<Vec<_>> = (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect();
            let verdict = solve_in_span(p, &columns, &target)?;
            let oracle_member = minors::in_column_span(&a, &target);
            members += oracle_member as usize;
            if verdict.is_member() != oracle_member {
                fails.push(format!("{rows}x{cols}#{trial} membership"));
            }
            if let SpanVerdict::InSpan(cert) = &verdict {
                let lhs = m.mul_vec(&cert.coefficients)?;
                if lhs.iter().zip(&target).any(|(l, t)| *l != t * &cert.denominator) {
                    fails.push(format!("{rows}x{cols}#{trial} certificate"));
                }
            }

            let kernel = m.solution_space();
            if kernel.len() != minors::kernel_dimension(&a) {
                fails.push(format!("{rows}x{cols}#{trial} kernel dimension"));
            }
            for v in &kernel {
                if m.mul_vec(v)?.iter().any(|x| !x.is_zero()) {
                    fails.push(format!("{rows}x{cols}#{trial} A v != 0"));
                }
            }
        }
    }
    let total = sizes.len() * 200;
    Ok((
        fails.is_empty(),
        format!("{total} matrices, {deficient} rank-deficient, {members} targets in span {}", fails.join("; ")),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("<2,5> closures, conductor and basically full closures", c1_two_five),
        ("<2,3>, <3,4,5>: test ideal m, all ideals star-basically full", c2_weakly_regular_in_m),
        ("(tau I : tau) = I^* and tau I = tau I^*", c3_tau_oracle),
        ("closure axioms over 1000 seeded trials", c4_axioms),
        ("non-DVR rings have non-basically-full ideals", c5_not_basically_full),
        ("valid T lie in the test ideal", c6_valid_t),
        ("(y^t,z^t)^* = (y^t,z^t) : m^(p-1); closed form", c7_core_identity),
        ("colon chain (y^t,z^t) : m^l", c8_colon_chain),
        ("counterexamples for p = 5 and p = 3", c9_counterexamples),
        ("Frobenius closure memberships", c10_frobenius_closure),
        ("fraction-free solver vs determinantal oracle", c11_linear_algebra_oracle),
    ];
    let mut all = true;
    for (n, (label, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!(
            "criterion {:>2}: {} - {label} [{:.1}s] {detail}",
            n + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
