//! Acceptance run: eight criteria, each exact and timed, one pass/fail line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use triality::clifford::center_of_even_basis;
use triality::report::{CheckResult, CheckStatus};
use triality::suites::{verify_chevalley, verify_exterior};
use triality::{octonion, triality as tri, triples};

struct Outcome {
    ok: bool,
    detail: String,
}

fn count(results: &[CheckResult], prefix: &str) -> (usize, usize) {
    let matching: Vec<_> = results.iter().filter(|r| r.check_id.starts_with(prefix)).collect();
    (matching.iter().filter(|r| r.passed()).count(), matching.len())
}

fn failures(results: &[CheckResult]) -> Vec<String> {
    results.iter().filter(|r| r.status == CheckStatus::Fail).map(|r| format!("{}: {}", r.check_id, r.detail)).collect()
}

fn all_pass(results: &[CheckResult], what: &str) -> Outcome {
    let bad = failures(results);
    let anomalies = results.iter().filter(|r| r.status == CheckStatus::Anomaly).count();
    Outcome {
        ok: bad.is_empty() && anomalies == 0,
        detail: if bad.is_empty() && anomalies == 0 {
            format!("{} {what} checks pass", results.len())
        } else {
            format!("{} failures, {anomalies} anomalies: {}", bad.len(), bad.join("; "))
        },
    }
}

fn psi_table() -> Outcome {
    let r = tri::verify_psi_table();
    let (pass, total) = count(&r, "triality.psi_table.");
    Outcome { ok: pass == 48 && total == 48, detail: format!("{pass}/{total} generator-image rows") }
}

fn theta_plus_table() -> Outcome {
    let mut r = tri::verify_theta_plus_via_psi();
    r.extend(tri::verify_order_three());
    let (via, via_total) = count(&r, "triality.theta_plus_via_psi.");
    let (cube, cube_total) = count(&r, "triality.theta_plus.order_three.");
    let base = all_pass(&r, "theta+");
    Outcome {
        ok: base.ok && via == 24 && via_total == 24 && cube == 24 && cube_total == 24,
        detail: format!("table vs Psi {via}/24, cube = id {cube}/24; {}", base.detail),
    }
}

fn theta_and_switch() -> Outcome {
    let mut r = tri::verify_theta_description();
    r.extend(tri::verify_switch_corollary());
    let (sw, sw_total) = count(&r, "triality.switch.");
    let base = all_pass(&r, "theta/switch");
    Outcome { ok: base.ok && sw == 24 && sw_total == 24, detail: format!("switch {sw}/24; {}", base.detail) }
}

fn octonions() -> Outcome {
    let r = octonion::verify_all(0);
    let (table, table_total) = count(&r, "octonion.table.");
    let (comp, comp_total) = count(&r, "octonion.composition.");
    let (semi, semi_total) = count(&r, "octonion.semitrace.");
    let bad = failures(&r);
    let anomalies: Vec<&str> =
        r.iter().filter(|c| c.status == CheckStatus::Anomaly).map(|c| c.check_id.as_str()).collect();
    Outcome {
        ok: bad.is_empty() && table == 48 && table_total == 48 && comp == comp_total && comp >= 3 && semi == semi_total && semi > 0,
        detail: format!(
            "table {table}/48, composition {comp}/{comp_total}, semitrace {semi}/{semi_total}, anomalies reported: {:?}, failures: {}",
            anomalies,
            bad.len()
        ),
    }
}

fn structural() -> Outcome {
    let r = verify_exterior(0);
    let base = all_pass(&r, "exterior");
    let gram_exact = ["exterior.b_wedge.gram_even", "exterior.b_wedge.gram_odd"]
        .iter()
        .all(|id| r.iter().any(|c| c.check_id == *id && c.passed()));
    let bijective = r.iter().any(|c| c.check_id == "exterior.phi.bijective" && c.passed());
    let center = center_of_even_basis(4).len();
    Outcome {
        ok: base.ok && gram_exact && bijective && center == 2,
        detail: format!("Phi full rank: {bijective}, Gram antidiagonal: {gram_exact}, dim center: {center}; {}", base.detail),
    }
}

fn chevalley_layer() -> Outcome {
    let mut r = verify_chevalley();
    r.extend(tri::theta_plus_on_h().into_iter().filter(|c| c.check_id.contains("e3+e4") && !c.check_id.ends_with("t=1")));
    let (chi, _) = count(&r, "chevalley.chi.");
    let (comm, _) = count(&r, "chevalley.commutator.");
    let (torus, torus_total) = count(&r, "triality.theta_plus_on_h.");
    let kernel = r.iter().any(|c| c.check_id == "chevalley.kernel" && c.passed());
    let base = all_pass(&r, "chevalley");
    Outcome {
        ok: base.ok && chi == 24 && comm >= 24 && kernel && torus == 2 && torus_total == 2,
        detail: format!("chi {chi}/24, commutator rows {comm}, kernel: {kernel}, theta+ on h {torus}/2; {}", base.detail),
    }
}

fn triples_layer() -> Outcome {
    let r = triples::verify_all(0);
    let base = all_pass(&r, "triples");
    let families = [
        "theta_plus_order_three",
        "theta_order_two",
        "theta_plus_theta",
        "choice_independence",
        "trialg",
    ];
    let mut sampled = Vec::new();
    let mut ok = base.ok;
    for f in families {
        let (p, total) = count(&r, &format!("triples.{f}.sample_"));
        ok &= total >= 5 && p == total;
        sampled.push(format!("{f} {p}/{total}"));
    }
    for prefix in ["triples.cover.equivariance.", "triples.cover.pushforward", "triples.semidirect.sample_", "triples.trialg.split"] {
        let (p, total) = count(&r, prefix);
        ok &= total > 0 && p == total;
    }
    Outcome { ok, detail: format!("{}; {}", sampled.join(", "), base.detail) }
}

fn whole_suite() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_triality"))
            .args(["verify", "--suite", "all", "--format", "json", "--seed", "0"])
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    let stable = a.stdout == b.stdout;
    let code = a.status.code();
    let summary = serde_json::from_slice::<serde_json::Value>(&a.stdout)
        .map(|v| v["summary"].to_string())
        .unwrap_or_else(|e| format!("unparseable report: {e}"));
    Outcome { ok: code == Some(0) && stable, detail: format!("exit {code:?}, byte-stable: {stable}, summary {summary}") }
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("Psi table", Duration::from_secs(30), psi_table),
        ("theta+ table", Duration::from_secs(10), theta_plus_table),
        ("theta and the switch", Duration::from_secs(30), theta_and_switch),
        ("octonion agreement", Duration::from_secs(120), octonions),
        ("structural isomorphisms", Duration::from_secs(60), structural),
        ("Chevalley layer", Duration::from_secs(120), chevalley_layer),
        ("triples layer", Duration::from_secs(180), triples_layer),
        ("whole suite", Duration::from_secs(600), whole_suite),
    ];
    let mut all_ok = true;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.ok && elapsed <= *limit;
        all_ok &= ok;
        println!(
            "criterion {} {:<24} {}  ({:.2}s / {}s)  {}",
            k + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            outcome.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
