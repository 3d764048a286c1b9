//! Acceptance checks, one line per criterion. Exits non-zero if any fails.

use std::io::Write;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use condorcet_axioms::axioms::audit::{audit, AuditConfig, AuditReport};
use condorcet_axioms::axioms::{check, AxiomId, Counterexample};
use condorcet_axioms::classify::{classify4, classify5, expected_winner_fig1, ClassLabel};
use condorcet_axioms::methods::{winners, MethodId};
use condorcet_axioms::profiles::{debord_realize, margins_of_profile, Parity};
use condorcet_axioms::tournament::{parse_tournament, WeightedTournament};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tournament(labels: [&str; 4], entries: [(&str, &str, i64); 6]) -> WeightedTournament {
    WeightedTournament::build(labels, entries).unwrap()
}

fn four_cycle() -> WeightedTournament {
    tournament(
        ["N", "W", "E", "S"],
        [("W", "N", 8), ("N", "E", 2), ("E", "W", 6), ("S", "W", 4), ("N", "S", 10), ("E", "S", 12)],
    )
}

fn cgb_fixture() -> WeightedTournament {
    tournament(
        ["W", "N", "E", "S"],
        [("W", "N", 2), ("N", "E", 6), ("E", "W", 8), ("W", "S", 4), ("N", "S", 10), ("E", "S", 14)],
    )
}

fn uncovered_fixture() -> WeightedTournament {
    tournament(
        ["W", "N", "E", "S"],
        [("W", "N", 8), ("N", "E", 6), ("E", "W", 4), ("S", "W", 2), ("N", "S", 10), ("E", "S", 12)],
    )
}

fn g_fixture() -> WeightedTournament {
    tournament(
        ["W", "N", "E", "S"],
        [("W", "N", 12), ("N", "E", 10), ("E", "W", 6), ("S", "W", 8), ("N", "S", 4), ("E", "S", 2)],
    )
}

/// Checks every cell against the expected pattern and replays every witness.
fn matches_pattern(report: &AuditReport, expected: &[(AxiomId, &[bool])]) -> Result<usize, String> {
    let mut witnesses = 0;
    for &(axiom, row) in expected {
        for (&method, &holds) in report.methods.iter().zip(row) {
            let cell = report.cell(method, axiom).ok_or(format!("missing {method}/{axiom}"))?;
            ensure(cell.holds == holds, || {
                format!("{method}/{axiom}: expected holds={holds}, got {}", cell.holds)
            })?;
            if let Some(ce) = &cell.counterexample {
                ce.verify().map_err(|e| format!("{method}/{axiom} witness: {e}"))?;
                witnesses += 1;
            }
        }
    }
    Ok(witnesses)
}

fn table1_report() -> Result<AuditReport, String> {
    audit(&AuditConfig::table1()).map_err(|e| e.to_string())
}

fn ac1() -> Outcome {
    let started = Instant::now();
    let report = table1_report()?;
    let elapsed = started.elapsed();
    ensure(report.tournaments_checked == 46_080, || format!("{} tournaments", report.tournaments_checked))?;
    // columns: Copeland, Minimax, MWSL, variant
    let pattern: [(AxiomId, &[bool]); 5] = [
        (AxiomId::ProximityCondorcet, &[true, true, true, false]),
        (AxiomId::Iid, &[true, true, true, false]),
        (AxiomId::WinMonotonicity, &[true, true, true, true]),
        (AxiomId::WinDominance, &[true, false, true, true]),
        (AxiomId::RareTies, &[false, true, true, true]),
    ];
    let witnesses = matches_pattern(&report, &pattern)?;
    let ce = report
        .cell(MethodId::VariantLocalMin, AxiomId::Iid)
        .and_then(|c| c.counterexample.as_ref())
        .ok_or("no variant IID witness")?;
    four_cycle_witness(ce)?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:.1?}"))?;
    Ok(format!("pattern exact, {witnesses} witnesses replayed, variant IID witness is an LS four cycle, {elapsed:.1?}"))
}

/// The winner moves from the cycle's N to its E, as in the four-cycle picture.
fn four_cycle_witness(ce: &Counterexample) -> Result<(), String> {
    let after = ce.secondary.as_ref().ok_or("IID witness without a second tournament")?;
    let (t, before, after_set) = (&ce.primary, ce.winners_before, ce.winners_after.unwrap());
    for (u, w) in [(t, before), (after, after_set)] {
        let class = classify4(u).map_err(|e| e.to_string())?;
        if class.label == ClassLabel::LSFourCycle {
            let n = class.role("N").unwrap();
            let e = class.role("E").unwrap();
            // the variant picks N on the LS cycle; MWSL picks E
            let (variant, mwsl) = (winners(MethodId::VariantLocalMin, u), winners(MethodId::Mwsl, u));
            ensure(variant.is_singleton(n) && mwsl.is_singleton(e), || "LS roles disagree with winners".into())?;
            ensure(w.is_singleton(n), || "variant winner is not the cycle's N".into())?;
            return Ok(());
        }
    }
    Err(format!("neither tournament is an LS four cycle: {t:?} / {after:?}"))
}

fn ac2() -> Outcome {
    let space = AuditConfig::table1().space().map_err(|e| e.to_string())?;
    let mut counts = std::collections::BTreeMap::new();
    for t in space.iter() {
        let class = classify4(&t).map_err(|e| e.to_string())?;
        let expected = expected_winner_fig1(&class, &t).map_err(|e| e.to_string())?;
        ensure(winners(MethodId::Mwsl, &t).is_singleton(expected), || format!("mismatch on {t:?}"))?;
        *counts.entry(class.label).or_insert(0usize) += 1;
    }
    ensure(counts.len() == 6, || format!("only {} classes seen", counts.len()))?;
    Ok(format!("0 mismatches over {} tournaments ({counts:?})", space.len()))
}

fn witness_of(axiom: AxiomId, method: MethodId, t: &WeightedTournament) -> Result<Counterexample, String> {
    let v = check(axiom, method, t, None).map_err(|e| e.to_string())?;
    let ce = v.counterexample.ok_or(format!("{method} satisfies {axiom} on the fixture"))?;
    ce.verify()?;
    Ok(ce)
}

fn ac3() -> Outcome {
    let name = |t: &WeightedTournament, c| t.label(c).to_string();

    let t = cgb_fixture();
    let (e, n) = (t.id("E").unwrap(), t.id("N").unwrap());
    ensure(t.symmetric_borda(e) == 16 && t.symmetric_borda(n) == 14, || "Borda scores".into())?;
    let ce = witness_of(AxiomId::ProximityCondorcet, MethodId::CgbPlus, &t)?;
    ensure(ce.actor("A") == Some(n) && ce.actor("B") == Some(e) && ce.n == Some(3), || ce.describe())?;

    let t = uncovered_fixture();
    let flipped = t.with_margin(t.id("S").unwrap(), t.id("N").unwrap(), 10).unwrap();
    ensure(
        name(&t, winners(MethodId::UncoveredMinimax, &t).as_singleton().unwrap()) == "W"
            && winners(MethodId::UncoveredMinimax, &flipped).as_singleton() == Some(t.id("E").unwrap()),
        || "N/S flip does not move W to E".into(),
    )?;
    let ce = witness_of(AxiomId::Iid, MethodId::UncoveredMinimax, &t)?;
    ensure(name(&t, ce.actor("A").unwrap()) == "W" && name(&t, ce.actor("B").unwrap()) == "E", || ce.describe())?;

    let t = g_fixture();
    let ce = witness_of(AxiomId::WinMonotonicity, MethodId::GFixture, &t)?;
    let bumped = t
        .improve_margin(t.id("S").unwrap(), t.id("W").unwrap(), 1)
        .and_then(|u| u.improve_margin(t.id("E").unwrap(), t.id("W").unwrap(), 1))
        .unwrap();
    ensure(
        winners(MethodId::GFixture, &t).is_singleton(t.id("S").unwrap())
            && winners(MethodId::GFixture, &bumped).is_singleton(t.id("E").unwrap()),
        || "G does not move S to E".into(),
    )?;
    ensure(ce.actor("A") == t.id("S").ok(), || ce.describe())?;

    let mut config = AuditConfig::table1();
    let complements = [
        (MethodId::CgbPlus, AxiomId::ProximityCondorcet),
        (MethodId::UncoveredMinimax, AxiomId::Iid),
        (MethodId::GFixture, AxiomId::WinMonotonicity),
    ];
    for (method, fails) in complements {
        config.methods = vec![method];
        config.axioms = AxiomId::TABLE1.iter().copied().filter(|&a| a != fails).collect();
        let report = audit(&config).map_err(|e| e.to_string())?;
        if let Some(bad) = report.violations().next() {
            return Err(bad.counterexample.as_ref().unwrap().describe());
        };
    }
    Ok("three fixture violations replayed; each method satisfies the other four axioms on all 46080".into())
}

fn ac4() -> Outcome {
    let started = Instant::now();
    let report = audit(&AuditConfig::table2(100_000, 1)).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    // columns: MWSL, CGM, CLM
    let pattern: [(AxiomId, &[bool]); 7] = [
        (AxiomId::ProximityCondorcet, &[true, true, false]),
        (AxiomId::ProximityCopeland, &[true, false, false]),
        (AxiomId::ImmunitySpoilers, &[true, true, false]),
        (AxiomId::Iid, &[true, true, false]),
        (AxiomId::WinMonotonicity, &[true, true, true]),
        (AxiomId::WinDominance, &[true, true, true]),
        (AxiomId::RareTies, &[true, true, true]),
    ];
    let witnesses = matches_pattern(&report, &pattern)?;
    let ce = report
        .cell(MethodId::Cgm, AxiomId::ProximityCopeland)
        .and_then(|c| c.counterexample.as_ref())
        .ok_or("no CGM witness")?;
    let t = &ce.primary;
    let class = classify5(t).map_err(|e| e.to_string())?;
    ensure(class.label == ClassLabel::PentagramT12, || format!("CGM witness is {}", class.label))?;
    let a = ce.actor("A").unwrap();
    ensure(winners(MethodId::Mwsl, t).is_singleton(a), || "A is not the MWSL winner".into())?;
    ensure(t.smallest_loss(a) == 2 && ce.n == Some(3), || ce.describe())?;
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:.1?}"))?;
    Ok(format!(
        "{} samples, pattern exact, {witnesses} witnesses replayed, CGM witness: pentagram, loss 2, n=3, {elapsed:.1?}",
        report.tournaments_checked
    ))
}

fn ac5() -> Outcome {
    let axioms = vec![AxiomId::RareTies, AxiomId::ImmunitySpoilers, AxiomId::CondorcetCriterion];
    let mut four = AuditConfig::table1();
    let mut five = AuditConfig::table2(20_000, 1);
    let mut passing = 0;
    for config in [&mut four, &mut five] {
        config.methods = MethodId::ALL.to_vec();
        config.axioms = axioms.clone();
        let report = audit(config).map_err(|e| e.to_string())?;
        for m in MethodId::ALL {
            let ok = |a| report.holds(m, a) == Some(true);
            if ok(AxiomId::RareTies) && ok(AxiomId::ImmunitySpoilers) {
                passing += 1;
                ensure(ok(AxiomId::CondorcetCriterion), || format!("{m} on {} candidates", config.candidates))?;
            }
        }
    }
    for v in (-20..=20).filter(|&v| v != 0) {
        let t = WeightedTournament::build(["A", "B"], [("A", "B", v)]).unwrap();
        let majority = t.id(if v > 0 { "A" } else { "B" }).unwrap();
        for m in MethodId::ALL {
            ensure(winners(m, &t).is_singleton(majority), || format!("{m} on m(A,B)={v}"))?;
        }
    }
    Ok(format!("{passing} (method, space) pairs pass both premises and the Condorcet criterion; majority rule on 2"))
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..1000 {
        let k = rng.gen_range(3..=5);
        let labels: Vec<String> = (0..k).map(|j| format!("x{j}")).collect();
        let mut m = vec![vec![0i64; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let v = 2 * rng.gen_range(-10..=10);
                m[a][b] = v;
                m[b][a] = -v;
            }
        }
        let t = WeightedTournament::from_matrix(labels, &m).unwrap();
        let profile = debord_realize(&t, Parity::Even).map_err(|e| format!("#{i}: {e}"))?;
        ensure(margins_of_profile(&profile) == t, || format!("#{i}: roundtrip differs for {t:?}"))?;
    }
    Ok("1000 of 1000 even tournaments round-trip exactly".into())
}

fn run_cli(args: &[&str], stdin: &str) -> Result<(Option<i32>, Vec<u8>), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_condorcet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| e.to_string())?;
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    Ok((out.status.code(), out.stdout))
}

fn ac7() -> Outcome {
    let (code, ballots) = run_cli(&["realize"], &four_cycle().to_file_text())?;
    ensure(code == Some(0), || "realize failed".into())?;
    let ballots = String::from_utf8(ballots).map_err(|e| e.to_string())?;
    for (method, expected) in [("mwsl", "E"), ("variant_local_min", "N")] {
        let (code, out) = run_cli(&["tally", "--json", "--method", method], &ballots)?;
        let report: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
        ensure(code == Some(0) && report["winners"] == serde_json::json!([expected]), || {
            format!("{method}: exit {code:?}, winners {}", report["winners"])
        })?;
    }
    let (code, _) = run_cli(&["audit"], "")?;
    ensure(code == Some(3), || format!("default audit exit {code:?}"))?;
    let args = ["audit", "--candidates", "5", "--mode", "sample", "--samples", "2000", "--seed", "1", "--json"];
    let (_, one) = run_cli(&args, "")?;
    let (_, two) = run_cli(&args, "")?;
    ensure(!one.is_empty() && one == two, || "sampled JSON differs between runs".into())?;
    let reparsed = parse_tournament(&four_cycle().to_file_text()).map_err(|e| e.to_string())?;
    ensure(reparsed == four_cycle(), || "tournament file round trip".into())?;
    Ok(format!("tally E/N with exit 0, audit exit 3, {} identical JSON bytes", one.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("AC1 four-candidate table", ac1),
        ("AC2 class table predicts MWSL", ac2),
        ("AC3 independence fixtures", ac3),
        ("AC4 five-candidate table", ac4),
        ("AC5 rare ties + spoilers imply Condorcet", ac5),
        ("AC6 profile realization round trip", ac6),
        ("AC7 command line", ac7),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
