use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use powergraph::invariants::{SolverLimits, DEFAULT_CHI_CAP, DEFAULT_HOLE_LENGTH, DEFAULT_MIS_CAP};
use powergraph_cli::analyze::{analyze, ReportFormat};
use powergraph_cli::checks::{self, CheckContext, CheckId, Status, VerificationOutcome};
use powergraph_cli::corpus::{default_corpus, load_corpus};
use powergraph_cli::export::{ExportFormat, ExportedGraph, GraphKind};
use powergraph_cli::spec::{max_order_from_env, parse_spec_with_cap, GroupSpec};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Power graphs of finite groups: invariants, exports and theorem checks.
///
/// Groups are written as products of atoms such as `C(9)xS(3)`: C(n) cyclic
/// of order n, D(n) dihedral of order 2n, Q(m) generalized quaternion of
/// order m, S(n) symmetric. PG_MAX_ORDER caps the group order (default 4096).
#[derive(Parser)]
#[command(name = "powergraph", version)]
struct Cli {
    /// Vertex cap for the exact independence and clique solvers.
    #[arg(long, global = true, default_value_t = DEFAULT_MIS_CAP)]
    mis_cap: usize,
    /// Vertex cap for the exact coloring and clique-cover solvers.
    #[arg(long, global = true, default_value_t = DEFAULT_CHI_CAP)]
    chi_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants of P(G) and P*(G).
    Analyze {
        spec: String,
        /// Report only P*(G).
        #[arg(long)]
        proper: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Write a power graph as DOT, an edge list or JSON.
    Export {
        spec: String,
        #[arg(long, value_enum, default_value = "power")]
        graph: GraphKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a theorem against exhaustive computation; exit 0 when every
    /// entry passes, 1 on any failure, 2 on usage or parse errors.
    Verify {
        #[arg(value_enum)]
        check: CheckId,
        /// A single group; inapplicable groups exit 2.
        #[arg(long, conflicts_with = "corpus")]
        spec: Option<String>,
        /// Corpus file, one spec per line. Defaults to the bundled corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Exponent window for infinite-cyclic-window.
        #[arg(long, default_value_t = 10_000)]
        window: u64,
        /// Omit wall times so runs can be diffed.
        #[arg(long)]
        compare: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn parse_group(text: &str) -> Result<GroupSpec, ExitCode> {
    parse_spec_with_cap(text, max_order_from_env()).map_err(|e| usage(format!("{text:?}: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = SolverLimits {
        mis_cap: cli.mis_cap,
        chi_cap: cli.chi_cap,
        hole_length: DEFAULT_HOLE_LENGTH,
    };
    let result = match cli.command {
        Command::Analyze {
            spec,
            proper,
            format,
        } => cmd_analyze(&spec, proper, format, &limits),
        Command::Export {
            spec,
            graph,
            format,
            out,
        } => cmd_export(&spec, graph, format, out),
        Command::Verify {
            check,
            spec,
            corpus,
            window,
            compare,
            inject_fault,
        } => cmd_verify(
            check,
            spec,
            corpus,
            window,
            compare,
            CheckContext {
                limits,
                inject_fault,
            },
        ),
    };
    result.unwrap_or_else(|code| code)
}

fn cmd_analyze(
    text: &str,
    proper: bool,
    format: ReportFormat,
    limits: &SolverLimits,
) -> Result<ExitCode, ExitCode> {
    let g = parse_group(text)?.build();
    let report = analyze(&g, limits, proper)
        .map_err(|e| usage(format!("{e}; raise --mis-cap or --chi-cap")))?;
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Table => report.to_table(&g),
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(
    text: &str,
    graph: GraphKind,
    format: ExportFormat,
    out: Option<PathBuf>,
) -> Result<ExitCode, ExitCode> {
    let g = parse_group(text)?.build();
    let body = ExportedGraph::build(&g, graph).render(format);
    match out {
        Some(path) => {
            std::fs::write(&path, body).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(usage)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    check: CheckId,
    spec: Option<String>,
    corpus: Option<PathBuf>,
    window: u64,
    compare: bool,
    ctx: CheckContext,
) -> Result<ExitCode, ExitCode> {
    if ctx.inject_fault && !check.supports_fault() {
        return Err(usage(format!(
            "fault injection is not available for {check}"
        )));
    }
    let single = spec.is_some();
    let mut outcomes = if check == CheckId::InfiniteCyclicWindow {
        if single || corpus.is_some() {
            return Err(usage("infinite-cyclic-window takes --window, not a group"));
        }
        vec![checks::run_window(window)]
    } else {
        let cap = max_order_from_env();
        let specs: Vec<GroupSpec> = if let Some(text) = spec {
            vec![parse_group(&text)?]
        } else if let Some(path) = corpus {
            let entries = load_corpus(&path, cap).map_err(usage)?;
            entries.into_iter().map(|e| e.spec).collect()
        } else if check == CheckId::TruncationChains {
            checks::DEFAULT_CHAIN_SPECS
                .iter()
                .map(|s| parse_group(s))
                .collect::<Result<_, _>>()?
        } else {
            default_corpus(cap)
                .map_err(usage)?
                .into_iter()
                .map(|e| e.spec)
                .collect()
        };
        checks::run_all(check, &specs, &ctx)
    };
    let mut stdout = std::io::stdout().lock();
    for o in &mut outcomes {
        if compare {
            o.wall_ms = None;
        }
        writeln!(
            stdout,
            "{}",
            serde_json::to_string(o).expect("serializable")
        )
        .map_err(usage)?;
    }
    Ok(exit_code(&outcomes, single))
}

fn exit_code(outcomes: &[VerificationOutcome], single: bool) -> ExitCode {
    if outcomes.iter().any(|o| o.status == Status::Fail) {
        ExitCode::from(EXIT_FAIL)
    } else if single && outcomes.iter().any(|o| o.status == Status::Skip) {
        eprintln!("error: {}", outcomes[0].detail);
        ExitCode::from(EXIT_USAGE)
    } else {
        ExitCode::SUCCESS
    }
}
