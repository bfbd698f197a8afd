//! Acceptance criteria, one pass/fail line each. Exits non-zero if any
//! criterion fails.

mod common;

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{fixtures_dir, negative_text};
use oneplanar::audit;
use oneplanar::bounds::{self, brute_force_max_edges_nonbipartite_trianglefree, erdos_bound};
use oneplanar::drawing::validate_drawing;
use oneplanar::format::{parse, parse_drawing_file, serialize, serialize_file};
use oneplanar::generators;
use oneplanar::graph::families;
use oneplanar::oracle::{find_with_threads, min_crossings_one_planar, Budget, OracleOutcome};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bound_solve() -> Outcome {
    ensure!(bounds::max_degree_bound_solve() == 10, "solve gave {}", bounds::max_degree_bound_solve());
    let ledger = bounds::bound_ledger();
    let row = |k: usize| *ledger.iter().find(|r| r.k == k).unwrap();
    let (r11, r10) = (row(11), row(10));
    ensure!((r11.lower, r11.upper, r11.feasible) == (40, 39, false), "k=11 row {r11:?}");
    ensure!((r10.lower, r10.upper, r10.feasible) == (34, 35, true), "k=10 row {r10:?}");
    ensure!(ledger.iter().filter(|r| r.k >= 11).all(|r| !r.feasible), "a row k >= 11 is feasible");
    Ok(())
}

fn erdos_verification() -> Outcome {
    for n in 4..=7 {
        let exact = brute_force_max_edges_nonbipartite_trianglefree(n).unwrap();
        let bound = erdos_bound(n).unwrap();
        // None: every triangle-free graph on n vertices is bipartite.
        ensure!(exact.is_none_or(|e| e <= bound), "n={n}: exact {exact:?} vs bound {bound}");
    }
    ensure!(brute_force_max_edges_nonbipartite_trianglefree(5).unwrap() == Some(5), "n=5 is not 5");
    ensure!(erdos_bound(5).unwrap() == 5, "bound at 5");
    ensure!((6..=7).all(|n| brute_force_max_edges_nonbipartite_trianglefree(n).unwrap().is_some()), "n=6,7 empty");
    Ok(())
}

fn k7_refutation() -> Outcome {
    let report = find_with_threads(&families::complete(7), Budget::new(10, 50_000_000), 1);
    ensure!(report.outcome == OracleOutcome::Refuted, "outcome {}", report.outcome.label());
    Ok(())
}

fn witnesses() -> Outcome {
    for (n, expected) in [(5, 1), (6, 3)] {
        let started = Instant::now();
        let found = min_crossings_one_planar(&families::complete(n), 10, 50_000_000, None)
            .map_err(|_| format!("K{n} budget exceeded"))?;
        let (count, d) = found.ok_or(format!("K{n} refuted"))?;
        ensure!(count == expected, "K{n} needs {count}");
        ensure!(validate_drawing(d.data()).is_valid(), "K{n} witness invalid");
        ensure!(started.elapsed() < Duration::from_secs(60), "K{n} took {:?}", started.elapsed());
    }
    Ok(())
}

fn corpus_claims() -> Outcome {
    let expected: &[(&str, usize, usize)] = &[
        ("h0", 10, 3),
        ("fig1-left", 8, 6),
        ("fig1-right", 8, 6),
        ("fig5-ii", 8, 4),
        ("k2222", 6, 6),
    ];
    let corpus = generators::corpus();
    ensure!(corpus.len() == 13, "corpus has {} fixtures", corpus.len());
    for f in &corpus {
        ensure!(validate_drawing(f.drawing.data()).is_valid(), "{} invalid", f.name);
        let g = &f.graph;
        ensure!(g.max_degree() == f.claims.delta, "{} delta {}", f.name, g.max_degree());
        ensure!(g.vertex_connectivity() == f.claims.kappa, "{} kappa", f.name);
        ensure!(g.is_claw_free() == f.claims.claw_free, "{} claw-freeness", f.name);
        ensure!(g.is_claw_free(), "{} has a claw", f.name);
        if f.name.starts_with('g') || f.name.starts_with("h0") {
            ensure!(g.max_degree() == 10, "{} delta", f.name);
        }
        if let Some(&(_, delta, kappa)) = expected.iter().find(|e| e.0 == f.name) {
            ensure!((g.max_degree(), g.vertex_connectivity()) == (delta, kappa), "{} parameters", f.name);
        }
    }
    Ok(())
}

fn lemma_audits() -> Outcome {
    for f in generators::corpus() {
        for threshold in [4, 6, 7] {
            let k = f.claims.kappa.min(threshold);
            let lemma = audit::audit_lemma3(&f.drawing, k).map_err(|e| e.to_string())?;
            let props = audit::audit_propositions(&f.drawing, k).map_err(|e| e.to_string())?;
            ensure!(!lemma.has_failures(), "{} at {k}: {:?}", f.name, lemma.machine_lines());
            ensure!(!props.has_failures(), "{} at {k}: {:?}", f.name, props.machine_lines());
        }
    }
    let cases = [
        ("separating-fake-triangle", 4, audit::FAKE_TRIANGLES, true),
        ("separating-type-i-cycle", 6, audit::TYPE_I_FOUR_CYCLES, true),
        ("separating-triangle", 7, audit::ALL_TRIANGLES, true),
        ("chord-crosses-spoke", 4, audit::CHORD_AVOIDS_SPOKES, false),
        ("chord-crosses-inner-edge", 6, audit::CHORD_AVOIDS_NEIGHBORHOOD, false),
        ("far-neighbors-adjacent", 7, audit::FAR_NEIGHBORS, false),
        ("second-neighbor-chord-uncrossed", 7, audit::SECOND_NEIGHBOR_CHORD, false),
    ];
    for (name, k, check, is_lemma) in cases {
        let d = parse_drawing_file(&negative_text(name)).map_err(|e| format!("{name}: {e}"))?;
        let report = if is_lemma {
            audit::audit_lemma3_unchecked(&d, k)
        } else {
            audit::audit_propositions_unchecked(&d, k)
        };
        let failing: Vec<&str> = report.failures().map(|c| c.name).collect();
        ensure!(failing == [check], "{name}: failing checks {failing:?}");
    }
    Ok(())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oneplanar"))
}

fn theorem_sweep() -> Outcome {
    let out = bin().args(["sweep", "--count", "1000", "--max-n", "8"]).output().map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure!(out.status.code() == Some(0), "exit {:?}: {text}", out.status.code());
    let checked = generators::corpus().len() + 1000;
    ensure!(text.lines().any(|l| l == format!("checked {checked}")), "{text}");
    ensure!(text.lines().any(|l| l == "violations 0"), "{text}");
    Ok(())
}

fn lemma2_spot_check() -> Outcome {
    let mut checked = 0;
    for f in generators::corpus() {
        if let Ok(holds) = bounds::check_lemma2_on_fixture(&f.drawing) {
            ensure!(holds, "{} has more than 4n - 9 edges", f.name);
            checked += 1;
        }
    }
    let k5 = min_crossings_one_planar(&families::complete(5), 1, 1_000_000, Some(1))
        .map_err(|_| "K5 budget".to_string())?
        .ok_or("K5 refuted")?
        .1;
    ensure!(bounds::check_lemma2_on_fixture(&k5) == Ok(true), "K5");
    checked += 1;
    ensure!(checked >= 1, "no dominating vertex anywhere");
    Ok(())
}

fn machine_outputs() -> Result<Vec<(String, Vec<u8>)>, String> {
    let dir = std::env::temp_dir().join(format!("oneplanar-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut runs: Vec<Vec<String>> = vec![vec!["bounds".into()], vec!["gen".into(), "list".into()]];
    for name in generators::catalog() {
        let path = fixtures_dir().join(format!("{name}.opg")).to_string_lossy().into_owned();
        for cmd in ["validate", "analyze", "audit", "export-dot"] {
            runs.push(vec![cmd.into(), path.clone()]);
        }
    }
    for n in [5, 6] {
        let path = dir.join(format!("k{n}.g"));
        fs::write(&path, serialize(&format!("k{n}"), &families::complete(n), None)).map_err(|e| e.to_string())?;
        for threads in ["1", "4", "8"] {
            runs.push(vec!["oracle".into(), path.to_string_lossy().into_owned(), "--threads".into(), threads.into()]);
        }
    }
    runs.push(vec!["sweep".into(), "--count".into(), "50".into()]);
    runs.into_iter()
        .map(|args| {
            let out = bin().args(&args).output().map_err(|e| e.to_string())?;
            Ok((args.join(" "), out.stdout))
        })
        .collect()
}

fn without_node_count(out: &[u8]) -> String {
    String::from_utf8_lossy(out)
        .lines()
        .filter(|l| !l.starts_with("nodes "))
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Outcome {
    let first = machine_outputs()?;
    let second = machine_outputs()?;
    for ((cmd, a), (_, b)) in first.iter().zip(&second) {
        ensure!(a == b, "`{cmd}` differs between runs");
    }
    for n in [5, 6] {
        let witness = |threads: &str| {
            first
                .iter()
                .find(|(cmd, _)| cmd.contains(&format!("k{n}.g")) && cmd.ends_with(&format!("--threads {threads}")))
                .map(|(_, out)| without_node_count(out))
                .unwrap()
        };
        let one = witness("1");
        ensure!(one.starts_with("witness"), "K{n}: {one}");
        ensure!(witness("4") == one && witness("8") == one, "K{n} witness depends on thread count");
    }
    Ok(())
}

fn round_trip() -> Outcome {
    let mut paths: Vec<_> = generators::catalog()
        .iter()
        .map(|n| fixtures_dir().join(format!("{n}.opg")))
        .collect();
    for entry in fs::read_dir(fixtures_dir().join("negative")).map_err(|e| e.to_string())? {
        paths.push(entry.map_err(|e| e.to_string())?.path());
    }
    for path in paths {
        let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let file = parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure!(serialize_file(&file) == text, "{} is not a fixed point", path.display());
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("bound solve", bound_solve, Duration::from_secs(1)),
        ("erdos verification", erdos_verification, Duration::from_secs(120)),
        ("k7 refutation", k7_refutation, Duration::from_secs(600)),
        ("k5 and k6 witnesses", witnesses, Duration::from_secs(120)),
        ("corpus claims", corpus_claims, Duration::from_secs(60)),
        ("lemma and proposition audits", lemma_audits, Duration::from_secs(60)),
        ("theorem sweep", theorem_sweep, Duration::from_secs(900)),
        ("dominating vertex edge bound", lemma2_spot_check, Duration::from_secs(1)),
        ("determinism", determinism, Duration::MAX),
        ("round trip", round_trip, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let elapsed = started.elapsed();
        let result = result.and_then(|()| {
            if elapsed > limit {
                Err(format!("took {elapsed:.1?}, limit {limit:?}"))
            } else {
                Ok(())
            }
        });
        match result {
            Ok(()) => println!("criterion {:>2} {name}: pass ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({elapsed:.2?}) {why}", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
