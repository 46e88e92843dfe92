#![forbid(unsafe_code)]

//! Command-line front end: analyze a group, verify family closed forms over
//! prime ranges, reproduce the seven-group summary table, and export DOT.
//!
//! Exit codes: 0 ok, 1 internal inconsistency, 2 parse error, 3 order cap
//! exceeded, 4 verification mismatch, 5 size refusal.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use bigen::bigraph::Family;
use bigen::dot::{dot_collapsed, dot_full};
use bigen::error::Error;
use bigen::lattice::enumerate_subgroups;
use bigen::report::{analyze, to_json_pretty};
use bigen::table::{table1_compare, table1_computed, table1_csv, table1_reference};
use bigen::verify::{primes_in_range, verify_family};
use bigen::{build_degree_map_threaded, make_group_with_cap, DEFAULT_ORDER_CAP};

#[derive(Parser)]
#[command(
    name = "bigen",
    version,
    about = "Generation bigraphs of finite groups"
)]
struct Cli {
    /// Maximum group order to construct.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: u64,

    /// Worker threads for pair scans; 0 means all cores. Results do not
    /// depend on the thread count.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one group, written as JSON.
    Analyze {
        /// Group description, e.g. Z:12, D:8, Q:16, S:4, A:5, X(Z:2,Z:4).
        #[arg(long)]
        group: String,
        /// Include per-subgroup generating-graph edge counts.
        #[arg(long)]
        with_gen_graph: bool,
    },
    /// Check a family's closed-form star forest against brute force for
    /// every prime in a range, one JSON certificate per line.
    Verify {
        /// One of: D2p, D2p2, Q4p, Q4p2, Zp, Z2p, Zp2, Z2p2, noncyclic_p2.
        #[arg(long)]
        family: String,
        /// Inclusive prime range, e.g. 2..7.
        #[arg(long)]
        primes: String,
    },
    /// Recompute the seven-group summary table as CSV and compare it against
    /// the embedded reference values.
    Table1,
    /// Export the bigraph as DOT.
    Dot {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = DotMode::Full)]
        mode: DotMode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DotMode {
    /// Every pair vertex and its edge.
    Full,
    /// One node per star with its leaf count.
    Collapsed,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let threads = if cli.threads == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        cli.threads
    };

    let outcome = match &cli.command {
        Command::Analyze {
            group,
            with_gen_graph,
        } => analyze(group, cli.cap, threads, *with_gen_graph)
            .map(|report| (to_json_pretty(&report), 0)),
        Command::Verify { family, primes } => run_verify(family, primes, cli.cap, threads),
        Command::Table1 => run_table1(cli.cap, threads),
        Command::Dot { group, mode } => run_dot(group, *mode, cli.cap, threads),
    };

    match outcome {
        Ok((output, code)) => {
            if let Err(e) = write_output(&cli.out, &output) {
                eprintln!("error: cannot write output: {e}");
                return 1;
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run_verify(
    family: &str,
    primes: &str,
    cap: u64,
    threads: usize,
) -> Result<(String, i32), Error> {
    let family = Family::parse(family)?;
    let (lo, hi) = parse_prime_range(primes)?;
    let mut lines = String::new();
    let mut all_passed = true;
    for p in primes_in_range(lo, hi) {
        let certificate = verify_family(family, p, cap, threads)?;
        all_passed &= certificate.passed();
        lines.push_str(&serde_json::to_string(&certificate).expect("certificate serializes"));
        lines.push('\n');
    }
    if !all_passed {
        eprintln!("verification mismatch for family {}", family.name());
    }
    Ok((lines, if all_passed { 0 } else { 4 }))
}

fn parse_prime_range(spec: &str) -> Result<(u64, u64), Error> {
    let parsed = spec
        .split_once("..")
        .and_then(|(lo, hi)| Some((lo.trim().parse().ok()?, hi.trim().parse().ok()?)));
    match parsed {
        Some((lo, hi)) if lo <= hi => Ok((lo, hi)),
        _ => Err(Error::Parse(format!(
            "expected an inclusive range like 2..7, got {spec:?}"
        ))),
    }
}

fn run_table1(cap: u64, threads: usize) -> Result<(String, i32), Error> {
    let computed = table1_computed(cap, threads)?;
    let csv = table1_csv(&computed);
    let mismatches = table1_compare(&computed, &table1_reference());
    for m in &mismatches {
        eprintln!(
            "table mismatch: {} {}: reference {} vs computed {}",
            m.group, m.column, m.reference, m.computed
        );
    }
    Ok((csv, if mismatches.is_empty() { 0 } else { 4 }))
}

fn run_dot(group: &str, mode: DotMode, cap: u64, threads: usize) -> Result<(String, i32), Error> {
    let g = make_group_with_cap(group, cap)?;
    let lat = enumerate_subgroups(&g);
    let text = match mode {
        DotMode::Full => dot_full(&g, &lat)?,
        DotMode::Collapsed => {
            let dm = build_degree_map_threaded(&g, &lat, threads)?;
            dot_collapsed(&g, &lat, &dm)
        }
    };
    Ok((text, 0))
}

fn write_output(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}
