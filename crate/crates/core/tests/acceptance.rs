//! Acceptance suite: one PASS/FAIL line per criterion, exit status nonzero
//! if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use spun::reduction::{self, q_prime_bruteforce, run_reduction, PointConfig};
use spun::verify::{self, Suite};

struct Outcome {
    pass: bool,
    detail: String,
}

fn suites_outcome(suites: &[Suite], min_per_check: u64) -> Outcome {
    let mut failed = Vec::new();
    let mut checks = 0u64;
    let mut thin = Vec::new();
    for s in suites {
        for c in &s.checks {
            checks += c.passed + c.failed;
            if c.failed > 0 {
                failed.push(format!(
                    "d={} {}: {} failed ({})",
                    s.dim,
                    c.name,
                    c.failed,
                    c.first_failure.as_deref().unwrap_or("")
                ));
            }
        }
    }
    for s in suites {
        for c in &s.checks {
            if c.passed + c.failed < min_per_check {
                thin.push(format!("d={} {}: only {} cases", s.dim, c.name, c.passed + c.failed));
            }
        }
    }
    let pass = failed.is_empty() && thin.is_empty();
    let detail = if pass {
        format!("{checks} exact checks")
    } else {
        failed.into_iter().chain(thin).collect::<Vec<_>>().join("; ")
    };
    Outcome { pass, detail }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > limit {
        out.pass = false;
        out.detail = format!("{}; runtime {:.1?} exceeds {:?}", out.detail, took, limit);
    } else {
        out.detail = format!("{}; {:.1?} (limit {:?})", out.detail, took, limit);
    }
    out
}

fn algebra() -> Outcome {
    let suites: Vec<Suite> = (2..=6).map(|d| verify::algebra_suite(d, 100, 1000 + d as u64)).collect();
    let mut out = suites_outcome(&suites, 1);
    let assoc: u64 = suites
        .iter()
        .flat_map(|s| s.checks.iter())
        .filter(|c| c.name == "associativity")
        .map(|c| c.passed)
        .sum();
    if assoc != 500 {
        out.pass = false;
        out.detail = format!("{}; associativity ran {assoc} of 500 cases", out.detail);
    }
    out
}

fn group() -> Outcome {
    let suites: Vec<Suite> = (2..=5).map(|d| verify::group_suite(d, 50, 2000 + d as u64)).collect();
    suites_outcome(&suites, 1)
}

fn quadric() -> Outcome {
    let s = verify::quadric_suite(250, 3000);
    suites_outcome(&[s], 200)
}

fn flats() -> Outcome {
    let suites: Vec<Suite> = (2..=5).map(|d| verify::flat_suite(d, 50, 4000 + d as u64)).collect();
    suites_outcome(&suites, 50)
}

fn eta() -> Outcome {
    let suites: Vec<Suite> = (2..=5).map(|d| verify::eta_suite(d, 100, 5000 + d as u64)).collect();
    suites_outcome(&suites, 100)
}

fn config(dim: usize, pts: &[&[i64]]) -> PointConfig {
    PointConfig::new(dim, pts.iter().map(|p| reduction::point(p)).collect()).expect("valid config")
}

fn end_to_end() -> Outcome {
    let cases = [
        ("two points", config(2, &[&[0, 0], &[1, 0]])),
        ("three collinear points", config(2, &[&[0, 0], &[1, 0], &[2, 0]])),
        ("unit square", PointConfig::lattice(2, 2).expect("grid")),
        ("3x3 grid", PointConfig::lattice(2, 3).expect("grid")),
        ("2x2x2 grid", PointConfig::lattice(3, 2).expect("grid")),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, p) in &cases {
        let r = match run_reduction(p, 7) {
            Ok(r) => r,
            Err(e) => {
                pass = false;
                notes.push(format!("{name}: {e}"));
                continue;
            }
        };
        let oracle = q_prime_bruteforce(p, true);
        let mut ok = r.all_pass() && r.pair_count == oracle;
        if *name == "2x2x2 grid" {
            let d = r.stats.distinct() as u128;
            ok &= d == 3
                && r.stats.q_count == 1216
                && 4 * d * r.stats.q_count == 14592
                && 14592 > 4096
                && r.flats == 56;
        }
        if !ok {
            pass = false;
            let failing: Vec<String> = r
                .verdicts
                .iter()
                .filter(|(_, v)| !v.pass)
                .map(|(k, v)| format!("({k}) {}: {}", v.name, v.detail))
                .collect();
            notes.push(format!(
                "{name}: pairs {} vs oracle {oracle}; failing {}",
                r.pair_count,
                if failing.is_empty() { "none".into() } else { failing.join(", ") }
            ));
        } else {
            notes.push(format!(
                "{name}: D={} Q={} pairs={} = oracle",
                r.stats.distinct(),
                r.stats.q_count,
                r.pair_count
            ));
        }
    }
    Outcome {
        pass,
        detail: notes.join("; "),
    }
}

fn mterms() -> Outcome {
    let suites: Vec<Suite> = (2..=5).map(|d| verify::mterm_suite(d, 100, 7000 + d as u64)).collect();
    let mut out = suites_outcome(&suites, 1);
    for name in [
        "conjugation by Spin keeps m-terms",
        "x e_d (i(a) + e_d) has m- and (m+2)-terms, nonzero m-part",
        "tau_ap keeps m- and (m+2)-terms, nonzero m-part",
    ] {
        let n: u64 = suites
            .iter()
            .flat_map(|s| s.checks.iter())
            .filter(|c| c.name == name)
            .map(|c| c.passed + c.failed)
            .sum();
        if n < 100 {
            out.pass = false;
            out.detail = format!("{}; {name}: only {n} inputs", out.detail);
        }
    }
    out
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("algebra suite, d=2..6", Duration::from_secs(10), algebra),
        ("group suite, d=2..5", Duration::from_secs(30), group),
        ("d=3 quadric characterization", Duration::from_secs(60), quadric),
        ("flat suite, d=2..5", Duration::from_secs(120), flats),
        ("eta bijection and j_lift", Duration::from_secs(120), eta),
        ("end-to-end reduction", Duration::from_secs(300), end_to_end),
        ("m-term grade laws", Duration::from_secs(120), mterms),
    ];
    let mut all = true;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let out = timed(limit, run);
        all &= out.pass;
        println!(
            "criterion {} [PRIMARY] {}: {} ({})",
            i + 1,
            name,
            if out.pass { "PASS" } else { "FAIL" },
            out.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
