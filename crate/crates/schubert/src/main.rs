//! Thin command-line front end. All real work lives in the library; see
//! the examples directory for programmatic use.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use schubert_curves::bench::{bench_table, staircase_bench};
use schubert_curves::enumerate::{
    enumerate_box_first, enumerate_box_last, enumerate_genomic, many_components_family,
    staircase_family, SchubertProblem,
};
use schubert_curves::local::{local_esh, local_esh_reverse, replay};
use schubert_curves::monodromy::{check_conjecture, curve_invariants, orbit_decomposition};
use schubert_curves::punctured::{BoxPosition, PuncturedTableau};
use schubert_curves::report;
use schubert_curves::svg::render_path;
use schubert_curves::sweep::{run_sweep, Check, SweepSpec};
use schubert_curves::{Partition, Rectangle};

/// Print to stdout, exiting quietly when the consumer closes the pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "schubert",
    about = "Evacuation-shuffling, monodromy orbits, and genomic tableaux for triples of partitions in a rectangle",
    long_about = "Evacuation-shuffling, monodromy orbits, and genomic tableaux for triples of \
                  partitions in a rectangle.\n\nPartitions are comma-separated parts (\"3,2,1\"; \
                  \"0\" or \"\" for the empty partition); rectangles are ROWSxCOLS (\"4x5\"). \
                  Everything is deterministic: the TABLEAU_SEED environment variable is ignored.",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a tableau set for a triple in canonical order
    Enumerate(EnumerateArgs),
    /// Step-by-step trace of the local algorithm on one tableau
    Trace(TraceArgs),
    /// Orbit decomposition of the monodromy operator
    Orbits(TripleArgs),
    /// Numerical curve invariants for a triple
    Invariants(TripleArgs),
    /// Run a full pipeline on a named parameter family
    Family(FamilyArgs),
    /// Exhaustively verify the algorithmic theorems on all small problems
    Verify(VerifyArgs),
    /// Compare local and oracle step counters on the staircase family
    Bench(BenchArgs),
}

#[derive(Args)]
struct TripleArgs {
    /// First partition, e.g. 2,2,1
    #[arg(long)]
    alpha: Partition,
    /// Second partition (the content of the moving filling)
    #[arg(long)]
    beta: Partition,
    /// Third partition
    #[arg(long)]
    gamma: Partition,
    /// Ambient rectangle, e.g. 4x4
    #[arg(long)]
    rect: Rectangle,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

impl TripleArgs {
    fn problem(&self) -> anyhow::Result<SchubertProblem> {
        Ok(SchubertProblem::new(
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.rect,
        )?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetChoice {
    BoxFirst,
    BoxLast,
    Genomic,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    triple: TripleArgs,
    /// Which set to list
    #[arg(long, value_enum)]
    set: SetChoice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Reverse,
}

#[derive(Args)]
struct TraceArgs {
    /// Text tableau file: '.' for inner cells, 'X' for the marked square,
    /// one row per line
    #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma", "rect", "index"])]
    input: Option<PathBuf>,
    #[arg(long, requires_all = ["beta", "gamma", "rect", "index"])]
    alpha: Option<Partition>,
    #[arg(long)]
    beta: Option<Partition>,
    #[arg(long)]
    gamma: Option<Partition>,
    #[arg(long)]
    rect: Option<Rectangle>,
    /// Index into the canonical listing of the triple
    #[arg(long)]
    index: Option<usize>,
    #[arg(long, value_enum, default_value = "forward")]
    direction: Direction,
    /// Write an SVG diagram of the path here
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Staircase family parameter (t >= 3)
    #[arg(long, conflicts_with = "components")]
    staircase: Option<usize>,
    /// Many-components family parameter (m >= 2)
    #[arg(long)]
    components: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bound on rows + cols of the swept rectangles (8 runs in minutes;
    /// larger bounds grow quickly)
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Comma-separated checks; default is all of them
    #[arg(long, value_delimiter = ',')]
    checks: Vec<Check>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Sweep a single rectangle instead of all within the bound
    #[arg(long)]
    rect: Option<Rectangle>,
    /// Restrict to one triple (all three must be given)
    #[arg(long, requires_all = ["beta", "gamma"])]
    alpha: Option<Partition>,
    #[arg(long)]
    beta: Option<Partition>,
    #[arg(long)]
    gamma: Option<Partition>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 3)]
    t_min: usize,
    #[arg(long, default_value_t = 7)]
    t_max: usize,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Orbits(args) => cmd_orbits(args),
        Command::Invariants(args) => cmd_invariants(args),
        Command::Family(args) => cmd_family(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> anyhow::Result<ExitCode> {
    let problem = args.triple.problem()?;
    match args.set {
        SetChoice::BoxFirst | SetChoice::BoxLast => {
            let (name, items) = match args.set {
                SetChoice::BoxFirst => ("box-first", enumerate_box_first(&problem)?),
                _ => ("box-last", enumerate_box_last(&problem)?),
            };
            if args.triple.json {
                out!(
                    "{}",
                    serde_json::to_string_pretty(&report::listing(&problem, name, &items))?
                );
            } else {
                out!("{} {name} tableaux for {problem}", items.len());
                for (i, t) in items.iter().enumerate() {
                    out!("--- {i}\n{t}");
                }
            }
        }
        SetChoice::Genomic => {
            let items = enumerate_genomic(&problem)?;
            if args.triple.json {
                out!(
                    "{}",
                    serde_json::to_string_pretty(&report::genomic_listing(&problem, &items))?
                );
            } else {
                out!("{} genomic tableaux for {problem}", items.len());
                for (i, g) in items.iter().enumerate() {
                    let (a, b) = g.marked();
                    out!("--- {i} family {} marked {a} {b}\n{}", g.family(), g.base());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_trace(args: TraceArgs) -> anyhow::Result<ExitCode> {
    let want_last = args.direction == Direction::Reverse;
    let pt = if let Some(path) = &args.input {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        PuncturedTableau::parse_text(&text, want_last)?
    } else {
        let (Some(alpha), Some(beta), Some(gamma), Some(rect), Some(index)) = (
            args.alpha.clone(),
            args.beta.clone(),
            args.gamma.clone(),
            args.rect,
            args.index,
        ) else {
            bail!("provide either --input FILE or a full triple with --index");
        };
        let problem = SchubertProblem::new(alpha, beta, gamma, rect)?;
        let items = if want_last {
            enumerate_box_last(&problem)?
        } else {
            enumerate_box_first(&problem)?
        };
        items
            .get(index)
            .cloned()
            .with_context(|| format!("index {index} out of range ({} tableaux)", items.len()))?
    };
    let expected = if want_last {
        BoxPosition::Last
    } else {
        BoxPosition::First
    };
    if pt.position() != expected {
        bail!("the marked square is not in the position the direction needs");
    }

    let (direction, out, path) = match args.direction {
        Direction::Forward => {
            let (out, path) = local_esh(&pt)?;
            ("forward", out, path)
        }
        Direction::Reverse => {
            let (out, path) = local_esh_reverse(&pt)?;
            ("reverse", out, path)
        }
    };
    let snapshots = replay(pt.tableau(), &path.moves);
    if let Some(svg_path) = &args.svg {
        std::fs::write(svg_path, render_path(pt.shape(), &path, pt.strips()))
            .with_context(|| format!("writing {}", svg_path.display()))?;
    }
    if args.json {
        let doc = report::trace(direction, &pt, &out, &path, &snapshots);
        out!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        out!("input:\n{pt}\n");
        for (mv, t) in &snapshots {
            out!("{mv}\n{t}\n");
        }
        out!("transition step: {}", path.transition_step);
        out!(
            "path ({} squares): {}",
            path.cells.len(),
            path.cells
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_orbits(args: TripleArgs) -> anyhow::Result<ExitCode> {
    let problem = args.problem()?;
    let report_data = orbit_decomposition(&problem)?;
    if args.json {
        out!(
            "{}",
            serde_json::to_string_pretty(&report::orbit_report(&report_data))?
        );
    } else {
        out!("{problem}");
        out!(
            "{} tableaux, {} orbits, {} fixed points\n",
            report_data.tableaux.len(),
            report_data.orbits.len(),
            report_data.fixed_points.len()
        );
        out!("{}", report::orbit_table(&report_data).trim_end());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_invariants(args: TripleArgs) -> anyhow::Result<ExitCode> {
    let problem = args.problem()?;
    let inv = curve_invariants(&problem)?;
    if args.json {
        out!(
            "{}",
            serde_json::to_string_pretty(&report::invariants(&problem, &inv))?
        );
    } else {
        print_invariants(&problem, &inv);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_invariants(problem: &SchubertProblem, inv: &schubert_curves::monodromy::CurveInvariants) {
    out!("{problem}");
    out!("tableaux (degree):        {}", inv.lr_count);
    out!(
        "genomic tableaux:         {} (by family: {:?})",
        inv.k_count,
        inv.k_by_family
    );
    out!("euler characteristic:     {}", inv.chi);
    out!("real components (orbits): {}", inv.eta);
    out!("reflection length:        {}", inv.rlength);
    out!("sign:                     {}", inv.sign);
    match inv.genus {
        Some(g) => out!("arithmetic genus:         {g}"),
        None => out!("arithmetic genus:         - (curve not connected)"),
    }
    out!("ramification/2 if smooth: {}", inv.half_ramification);
}

fn cmd_family(args: FamilyArgs) -> anyhow::Result<ExitCode> {
    let problem = match (args.staircase, args.components) {
        (Some(t), None) => staircase_family(t)?,
        (None, Some(m)) => many_components_family(m)?,
        _ => bail!("choose exactly one of --staircase T or --components M"),
    };
    let orbits = orbit_decomposition(&problem)?;
    let inv = curve_invariants(&problem)?;
    let conj = check_conjecture(&problem)?;
    if args.json {
        out!(
            "{}",
            serde_json::to_string_pretty(&report::family(&problem, &orbits, &inv, &conj))?
        );
    } else {
        print_invariants(&problem, &inv);
        out!();
        out!("{}", report::orbit_table(&orbits).trim_end());
        out!(
            "\norbit-by-orbit bounds: {}",
            if conj.all_pass() { "pass" } else { "FAIL" }
        );
    }
    if conj.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let checks = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks.clone()
    };
    let triple = match (&args.alpha, &args.beta, &args.gamma) {
        (Some(a), Some(b), Some(g)) => Some((a.clone(), b.clone(), g.clone())),
        (None, None, None) => None,
        _ => bail!("a triple filter needs --alpha, --beta and --gamma together"),
    };
    let mut spec = SweepSpec::new(args.max_n, checks.clone())?
        .with_rect(args.rect)
        .with_triple(triple);
    if let Some(jobs) = args.jobs {
        spec = spec.with_jobs(jobs);
    }
    let outcome = run_sweep(&spec)?;
    if args.json {
        out!(
            "{}",
            serde_json::to_string_pretty(&report::verify(args.max_n, &checks, &outcome))?
        );
    } else {
        out!(
            "swept {} rectangles, {} problems, {} tableaux",
            outcome.rectangles,
            outcome.problems,
            outcome.tableaux
        );
        for c in &checks {
            let n = outcome.failures.iter().filter(|f| f.check == *c).count();
            out!(
                "{:<20} {}",
                c.name(),
                if n == 0 {
                    "pass".to_string()
                } else {
                    format!("FAIL ({n} counterexamples)")
                }
            );
        }
        if let Some(f) = outcome.failures.first() {
            out!("\nfirst counterexample ({}, {}):", f.check, f.problem);
            out!("  {}", f.detail);
            for row in &f.tableau_rows {
                out!("  {row}");
            }
        }
    }
    Ok(if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bench(args: BenchArgs) -> anyhow::Result<ExitCode> {
    let rows = staircase_bench(args.t_min, args.t_max)?;
    if args.json {
        out!("{}", serde_json::to_string_pretty(&report::bench(&rows))?);
    } else {
        out!("{}", bench_table(&rows).trim_end());
        out!("\n(step counters are deterministic; times are wall-clock color)");
    }
    Ok(ExitCode::SUCCESS)
}
