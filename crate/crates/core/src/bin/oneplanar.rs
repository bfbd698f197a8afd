//! Command-line front end.
//!
//! Exit codes: 0 success, 1 property fails or no witness, 2 invalid input,
//! 3 search budget exceeded, 4 a structural theorem failed its audit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use oneplanar::audit::{self, AuditReport};
use oneplanar::bounds;
use oneplanar::drawing::OnePlaneDrawing;
use oneplanar::format::{self, GraphFile, RawFile};
use oneplanar::generators::{self, Fixture};
use oneplanar::oracle::{self, Budget, OracleOutcome};

const OK: u8 = 0;
const FAILS: u8 = 1;
const INVALID: u8 = 2;
const BUDGET: u8 = 3;
const ALARM: u8 = 4;

#[derive(Parser)]
#[command(name = "oneplanar", version, about = "Claw-free 1-planar graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a drawing against every drawing convention.
    Validate { file: PathBuf },
    /// Print graph invariants (all of them unless some are selected).
    Analyze {
        file: PathBuf,
        #[arg(long)]
        delta: bool,
        #[arg(long)]
        kappa: bool,
        #[arg(long)]
        claw: bool,
    },
    /// Write a catalog fixture; `list` prints the catalog.
    Gen {
        name: String,
        /// Path length parameter for `gk`.
        #[arg(long)]
        k: Option<usize>,
        /// Number of copies for `h0-chain`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Decide 1-planarity exhaustively.
    Oracle {
        file: PathBuf,
        #[arg(long = "max-crossings")]
        max_crossings: Option<usize>,
        #[arg(long = "node-limit", default_value_t = Budget::default().node_limit)]
        node_limit: u64,
        #[arg(long)]
        threads: Option<usize>,
        /// Write the witness drawing here instead of standard output.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Audit the structural theorems, and with a drawing the cycle and
    /// rotation constraints.
    Audit {
        file: PathBuf,
        #[arg(long = "assume-kappa")]
        assume_kappa: Option<usize>,
    },
    /// Print the degree-bound table.
    Bounds,
    /// Graphviz export with crossings as diamond nodes.
    ExportDot {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Theorem audit over the corpus and random oracle-certified graphs.
    Sweep {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long = "node-limit", default_value_t = 200_000)]
        node_limit: u64,
    },
}

struct Failure(u8, String);

type Outcome = Result<u8, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(INVALID, msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load_raw(path: &Path) -> Result<RawFile, Failure> {
    format::parse_raw(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GraphFile, Failure> {
    format::parse(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| invalid(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(file: &Path) -> Outcome {
    let raw = load_raw(file)?;
    let Some(data) = raw.drawing.as_ref() else {
        println!("no-drawing");
        return Ok(FAILS);
    };
    let report = oneplanar::drawing::validate_drawing(data);
    if report.is_valid() {
        println!("valid");
        println!("vertices {}", raw.graph.n());
        println!("edges {}", raw.graph.e());
        println!("crossings {}", data.crossings.len());
        return Ok(OK);
    }
    println!("invalid");
    for v in &report.violations {
        println!("violation {} line {} {}", v.class(), raw.line_of(v), v.witness(data));
    }
    Ok(FAILS)
}

fn analyze(file: &Path, delta: bool, kappa: bool, claw: bool) -> Outcome {
    let g = load_raw(file)?.graph;
    let all = !(delta || kappa || claw);
    println!("vertices {}", g.n());
    println!("edges {}", g.e());
    if all || delta {
        println!("delta {}", g.max_degree());
    }
    if all || kappa {
        println!("kappa {}", g.vertex_connectivity());
    }
    if all || claw {
        match g.find_induced_claw() {
            Some(w) => println!("claw {}", w.render(&g)),
            None => println!("claw-free"),
        }
    }
    Ok(OK)
}

fn fixture_for(name: &str, k: Option<usize>, m: Option<usize>) -> Result<Fixture, Failure> {
    let built = match (name, k, m) {
        ("gk", Some(k), _) => generators::gen_gk(k),
        ("gk", None, _) => return Err(invalid("gk needs --k")),
        ("h0-chain", _, Some(m)) => generators::glue_h0_chain(m),
        ("h0-chain", _, None) => return Err(invalid("h0-chain needs --m")),
        _ => generators::by_name(name),
    };
    built.map_err(|e| invalid(e.to_string()))
}

fn gen(name: &str, k: Option<usize>, m: Option<usize>, output: Option<&Path>) -> Outcome {
    if name == "list" {
        for n in generators::catalog() {
            let f = generators::by_name(n).expect("catalog names resolve");
            println!(
                "{n} vertices {} edges {} crossings {} delta {} kappa {} claw-free {}",
                f.graph.n(),
                f.graph.e(),
                f.drawing.crossing_count(),
                f.claims.delta,
                f.claims.kappa,
                f.claims.claw_free
            );
        }
        return Ok(OK);
    }
    let f = fixture_for(name, k, m)?;
    emit(&format::serialize(&f.name, &f.graph, Some(&f.drawing)), output)?;
    Ok(OK)
}

fn run_oracle(
    file: &Path,
    max_crossings: Option<usize>,
    node_limit: u64,
    threads: Option<usize>,
    output: Option<&Path>,
) -> Outcome {
    let parsed = load_raw(file)?;
    let g = parsed.graph;
    let budget = Budget::new(max_crossings.unwrap_or(usize::MAX), node_limit);
    let report = match threads {
        Some(0) => return Err(invalid("--threads must be positive")),
        Some(t) => oracle::find_with_threads(&g, budget, t),
        None => oracle::find_with_threads(&g, budget, 1),
    };
    println!("{}", report.outcome.label());
    println!("nodes {}", report.nodes);
    match report.outcome {
        OracleOutcome::Witness(d) => {
            println!("crossings {}", d.crossing_count());
            let text = format::serialize(&parsed.name, &g, Some(&d));
            match output {
                Some(_) => emit(&text, output)?,
                None => print!("{text}"),
            }
            Ok(OK)
        }
        OracleOutcome::Refuted => Ok(FAILS),
        OracleOutcome::BudgetExceeded => Ok(BUDGET),
    }
}

fn full_audit(file: &GraphFile, assume: Option<usize>) -> Result<(AuditReport, bool), Failure> {
    let g = &file.graph;
    let theorems = audit::audit_theorems(g, file.drawing.as_ref()).map_err(|e| invalid(e.to_string()))?;
    let alarm = theorems.has_failures();
    let mut report = theorems;
    if let Some(d) = &file.drawing {
        let kappa = assume.unwrap_or_else(|| g.vertex_connectivity().min(7));
        let lemma = audit::audit_lemma3(d, kappa).map_err(|e| invalid(e.to_string()))?;
        let props = audit::audit_propositions(d, kappa).map_err(|e| invalid(e.to_string()))?;
        report.merge(lemma);
        report.merge(props);
    }
    Ok((report, alarm))
}

fn run_audit(file: &Path, assume: Option<usize>) -> Outcome {
    let parsed = load(file)?;
    let (report, alarm) = full_audit(&parsed, assume)?;
    print!("{}", report.render_table());
    println!();
    for line in report.machine_lines() {
        println!("{line}");
    }
    Ok(if alarm {
        ALARM
    } else if report.has_failures() {
        FAILS
    } else {
        OK
    })
}

fn run_bounds() -> Outcome {
    let ledger = bounds::bound_ledger();
    println!("{:>3} {:>6} {:>6} {:>6}  feasible", "k", "erdos", "lower", "upper");
    for row in &ledger {
        println!(
            "{:>3} {:>6} {:>6} {:>6}  {}",
            row.k,
            row.erdos,
            row.lower,
            row.upper,
            if row.feasible { "yes" } else { "no" }
        );
    }
    println!();
    for row in &ledger {
        println!("{} {} {} {}", row.k, row.lower, row.upper, row.feasible);
    }
    println!("max-degree {}", bounds::max_degree_bound_solve());
    Ok(OK)
}

fn export_dot(file: &Path, output: Option<&Path>) -> Outcome {
    let parsed = load(file)?;
    emit(&format::to_dot(&parsed.name, &parsed.graph, parsed.drawing.as_ref()), output)?;
    Ok(OK)
}

fn sweep(count: usize, max_n: usize, seed: u64, node_limit: u64) -> Outcome {
    let mut checked = 0;
    let mut violations = 0;
    let mut check = |label: &str, g: &oneplanar::graph::Graph, d: &OnePlaneDrawing| {
        let report = audit::audit_theorems(g, Some(d)).expect("drawing of g");
        checked += 1;
        for c in report.failures() {
            violations += 1;
            for w in &c.witnesses {
                println!("violation {label} {} {w}", c.name);
            }
        }
    };
    for f in generators::corpus() {
        check(&f.name, &f.graph, &f.drawing);
    }
    for (i, (g, d)) in audit::sample_certified(count, max_n, node_limit, seed).iter().enumerate() {
        check(&format!("random-{i}"), g, d);
    }
    println!("checked {checked}");
    println!("violations {violations}");
    Ok(if violations > 0 { ALARM } else { OK })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Analyze {
            file,
            delta,
            kappa,
            claw,
        } => analyze(&file, delta, kappa, claw),
        Command::Gen { name, k, m, output } => gen(&name, k, m, output.as_deref()),
        Command::Oracle {
            file,
            max_crossings,
            node_limit,
            threads,
            output,
        } => run_oracle(&file, max_crossings, node_limit, threads, output.as_deref()),
        Command::Audit { file, assume_kappa } => run_audit(&file, assume_kappa),
        Command::Bounds => run_bounds(),
        Command::ExportDot { file, output } => export_dot(&file, output.as_deref()),
        Command::Sweep {
            count,
            max_n,
            seed,
            node_limit,
        } => sweep(count, max_n, seed, node_limit),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
