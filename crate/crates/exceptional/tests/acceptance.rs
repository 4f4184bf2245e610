// Runs every suite once and groups the checks by acceptance criterion, one
// pass/fail line each. Built without the test harness so the lines always print.

use std::process::ExitCode;

use exceptional::report::{run, Check, Config, Suite};

struct Criterion {
    name: &'static str,
    what: &'static str,
    select: fn(&str) -> bool,
    /// Checks that must be present for the criterion to count as covered.
    required: &'static [&'static str],
}

fn roots_check(id: &str, names: &[&str]) -> bool {
    id.starts_with("roots-") && names.iter().any(|n| id.ends_with(&format!(".{n}")))
}

const LEVELS: [&str; 4] = ["f4", "e6", "e7", "e8"];

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            name: "AC1",
            what: "dimensions 21/35/66/133, 52/78, 21/35, real forms 66/133, centralizer 99",
            select: |id| {
                (id.starts_with("dims.") && !id.contains("jacobi") && !id.contains("cache"))
                    || (id.starts_with("realforms.") && !id.ends_with("centralizer-zero"))
            },
            required: &[
                "dims.f4-eps", "dims.e6-eps", "dims.e7-eps", "dims.e8-eps", "dims.f4", "dims.e6", "dims.f4H", "dims.e6H",
                "realforms.e7H", "realforms.e8H", "realforms.centralizer-e8-eps", "realforms.centralizer-e8H",
            ],
        },
        Criterion {
            name: "AC2",
            what: "Killing constants 40/3, -5, 72, -8, -9 and closed forms against brute-force traces",
            select: |id| id.starts_with("killing.") && !id.contains("invariance"),
            required: &[
                "killing.e7H-nu-trace", "killing.e7H-constant", "killing.e8H-1tilde-trace", "killing.e8H-1tilde-inner",
                "killing.e8H-constant", "killing.B4-f4", "killing.closed-vs-brute-f4", "killing.closed-vs-brute-e6",
                "killing.closed-vs-brute-e7", "killing.closed-vs-brute-e8",
            ],
        },
        Criterion {
            name: "AC3",
            what: "ranks 3/5/6/7, 18/30/60/126 roots, tables matched as sets",
            select: |id| roots_check(id, &["rank", "root-count", "table-set", "delta-display", "symmetric", "zero-weight"]),
            required: &["roots-f4.table-set", "roots-e6.table-set", "roots-e7.table-set", "roots-e8.table-set", "roots-f4.delta-display"],
        },
        Criterion {
            name: "AC4",
            what: "fundamental systems with the tabulated expansion coefficients",
            select: |id| roots_check(id, &["simple-are-roots", "fundamental", "expansions", "positive-set", "spot-expansion"]),
            required: &["roots-f4.spot-expansion", "roots-f4.expansions", "roots-e6.expansions", "roots-e7.expansions", "roots-e8.expansions"],
        },
        Criterion {
            name: "AC5",
            what: "inner products, canonical elements, Dynkin types C3/A5/D6/E7",
            select: |id| {
                id.starts_with("roots-")
                    && (id.contains(".inner-") || id.contains(".canonical-") || id.ends_with(".dynkin") || id.ends_with(".dynkin-lex") || id.ends_with(".cartan-matrix"))
            },
            required: &["roots-f4.dynkin", "roots-e6.dynkin", "roots-e7.dynkin", "roots-e8.dynkin", "roots-f4.canonical-a1"],
        },
        Criterion {
            name: "AC6",
            what: "W-locus: 1_- annihilates the basis, 13 conditions equivalent to annihilation, exp closed form",
            select: |id| id.starts_with("wspace."),
            required: &["wspace.one-lower-e8H", "wspace.one-lower-e8-eps", "wspace.equivalence", "wspace.exp-closed-form", "wspace.ad-power"],
        },
        Criterion {
            name: "AC7",
            what: "triality companions reproduce the explicit L2, L3 display",
            select: |id| id.starts_with("triality.companions-"),
            required: &["triality.companions-delta-e0", "triality.companions-delta-e1", "triality.companions-delta-e2"],
        },
        Criterion {
            name: "AC8",
            what: "seeded sweeps: Jacobi, ad-invariance, Cayley laws, automorphisms, eps relations",
            select: |id| {
                id.contains(".jacobi-")
                    || id.contains(".invariance-")
                    || ["triality.identity-sweep", "triality.cayley-laws", "triality.automorphisms"].contains(&id)
                    || id.starts_with("triality.relation-")
            },
            required: &["triality.cayley-laws", "triality.automorphisms", "triality.relation-gamma2", "dims.jacobi-e8H", "killing.invariance-e8H"],
        },
    ]
}

fn main() -> ExitCode {
    let report = run(&Config { suite: Suite::All, seed: 1, samples: 20 });
    let mut all_ok = true;
    for c in criteria() {
        let checks: Vec<&Check> = report.checks.iter().filter(|k| (c.select)(&k.id)).collect();
        let missing: Vec<&str> = c.required.iter().copied().filter(|r| !checks.iter().any(|k| k.id == *r)).collect();
        let failed: Vec<&Check> = checks.iter().copied().filter(|k| !k.pass).collect();
        let ok = missing.is_empty() && failed.is_empty();
        all_ok &= ok;
        println!("{} {}: {} ({} checks)", c.name, if ok { "pass" } else { "FAIL" }, c.what, checks.len());
        for m in &missing {
            println!("    missing check {m}");
        }
        for k in &failed {
            println!("    {}: expected {}, got {}", k.id, k.expected, k.actual);
        }
    }
    for level in LEVELS {
        let rank = report.checks.iter().find(|k| k.id == format!("roots-{level}.rank")).map(|k| k.actual.as_str());
        let count = report.checks.iter().find(|k| k.id == format!("roots-{level}.root-count")).map(|k| k.actual.as_str());
        println!("    {level}: rank {}, {} roots", rank.unwrap_or("?"), count.unwrap_or("?"));
    }
    println!("{} checks, {} passed, {} failed", report.summary.total, report.summary.passed, report.summary.failed);
    if all_ok && report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
