mod bench;
mod gen;
mod report;
mod solve;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use indforest::exact3::DEFAULT_PARTITION_CAP;
use indforest::forest::DEFAULT_NODE_BUDGET;
use indforest::oracle::{HostClass, OracleBudget};
use indforest::ptas::{
    build_catalog_with_cap, delta_for_epsilon, that_set_with, PtasOptions, DEFAULT_DELTA_CAP,
    DEFAULT_STATE_BUDGET,
};
use indforest::{parse_forests, to_dot, to_edge_list, Forest};

use report::{InstanceReport, Report, Status, Verification};
use solve::Solved;

const EXIT_PARSE: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "indforest",
    version,
    about = "Common induced subforests and superforests of forests"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write reports and result files into this directory instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for batch instances (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for every random choice; recorded in reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node budget for each backtracking containment search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    /// Include wall-clock times in reports (breaks byte-identical output).
    #[arg(long, global = true)]
    timing: bool,
    /// Test hook: damage solver output before verification.
    #[arg(long, global = true, hide = true)]
    corrupt_output: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edges,
}

#[derive(Args)]
struct Inputs {
    /// Edge-list files.
    #[arg(long, num_args = 1.., required = true)]
    input: Vec<PathBuf>,
    /// Treat every file as its own instance instead of pooling all forests.
    #[arg(long)]
    batch: bool,
}

#[derive(Args)]
struct OracleLimits {
    #[arg(long, default_value_t = 16)]
    max_host_order: usize,
    #[arg(long, default_value_t = 20)]
    max_subset_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum common subtree of two trees.
    Mcs2 {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Minimum supertree of two trees.
    Super2 {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Greedy supertree of any number of trees.
    Greedy {
        #[command(flatten)]
        inputs: Inputs,
        /// A known supertree; reports greedy order / known order.
        #[arg(long)]
        known: Option<PathBuf>,
    },
    /// Exact minimum supertree of three trees.
    Exact3 {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = DEFAULT_PARTITION_CAP)]
        partition_cap: usize,
    },
    /// Approximate maximum common subforest.
    Ptas {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        epsilon: Option<f64>,
        /// Component bound; overrides --epsilon.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DELTA_CAP)]
        delta_cap: usize,
        /// Fall back to --delta-cap instead of failing when the bound is larger.
        #[arg(long)]
        clamp_delta: bool,
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        state_budget: usize,
        /// Export every input's census vector set as CSV.
        #[arg(long)]
        vectors_csv: Option<PathBuf>,
    },
    /// Exhaustive maximum common subforest.
    OracleSub {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        limits: OracleLimits,
    },
    /// Exhaustive minimum common superforest.
    OracleSuper {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        limits: OracleLimits,
        /// Search all forests even when every input is a tree.
        #[arg(long)]
        forests: bool,
    },
    /// Generate instance families.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
    /// Experiments.
    Bench {
        #[command(subcommand)]
        kind: BenchCommand,
    },
}

#[derive(Subcommand)]
pub enum GenCommand {
    /// Subdivided-star pair from a 3-PARTITION instance.
    Prop1 {
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<usize>,
    },
    /// Tree triple from a 3DM instance, e.g. --triples "0,0,0;1,1,1".
    Thm1 {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        triples: String,
        /// Indices of a perfect matching; adds the witness supertree.
        #[arg(long, value_delimiter = ',')]
        matching: Option<Vec<usize>>,
    },
    /// Greedy tightness caterpillars and their known supertree.
    Tightness {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
    },
    /// Caterpillar with the given leaf counts along the spine.
    Caterpillar {
        #[arg(long, value_delimiter = ',', required = true)]
        counts: Vec<usize>,
    },
    /// Random trees or forests; --components takes precedence over --max-degree.
    Random {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        components: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Greedy versus the known supertree on the tightness family.
    Ratio {
        #[arg(long, value_delimiter = ',', default_values_t = [25, 50, 100, 200, 400, 1000])]
        a: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        b: usize,
        #[arg(long, default_value_t = 1)]
        c: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn from_core(e: indforest::Error) -> Self {
        Failure {
            code: if e.is_budget() { EXIT_BUDGET } else { EXIT_PARSE },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::parse(e.to_string())
    }
}

struct Instance {
    source: String,
    forests: Vec<Forest>,
}

fn read_forests(path: &Path) -> Result<Vec<Forest>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    parse_forests(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn read_instances(inputs: &Inputs) -> Result<Vec<Instance>, Failure> {
    let mut per_file = Vec::new();
    for p in &inputs.input {
        per_file.push(Instance {
            source: p.display().to_string(),
            forests: read_forests(p)?,
        });
    }
    if inputs.batch {
        return Ok(per_file);
    }
    Ok(vec![Instance {
        source: per_file
            .iter()
            .map(|i| i.source.as_str())
            .collect::<Vec<_>>()
            .join(","),
        forests: per_file.into_iter().flat_map(|i| i.forests).collect(),
    }])
}

fn write_output(out: Option<&Path>, name: &str, text: &str) -> Result<(), Failure> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join(name), text)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_report(cli: &Cli, report: &Report) -> Result<(), Failure> {
    let json = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    let out = cli.out.as_deref();
    match cli.format {
        Format::Json => write_output(out, "report.json", &json),
        Format::Dot | Format::Edges => {
            let ext = if cli.format == Format::Dot { "dot" } else { "edges" };
            let mut all = String::new();
            for inst in &report.instances {
                let Some(f) = &inst.forest else { continue };
                let text = match cli.format {
                    Format::Dot => to_dot(f, &format!("instance_{}", inst.id)),
                    _ => format!("# instance {}\n{}", inst.id, to_edge_list(f)),
                };
                match out {
                    Some(dir) => write_output(Some(dir), &format!("instance-{}.{ext}", inst.id), &text)?,
                    None => all.push_str(&text),
                }
            }
            match out {
                Some(dir) => write_output(Some(dir), "report.json", &json),
                None => write_output(None, "", &all),
            }
        }
    }
}

fn exit_code(reports: &[InstanceReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Invalid) {
        EXIT_PARSE
    } else if reports.iter().any(|r| r.verification == Verification::Fail) {
        EXIT_VERIFY
    } else if reports.iter().any(|r| r.status == Status::Budget) {
        EXIT_BUDGET
    } else {
        0
    }
}

fn oracle_budget(cli: &Cli, limits: &OracleLimits) -> OracleBudget {
    OracleBudget {
        max_host_order: limits.max_host_order,
        max_subset_order: limits.max_subset_order,
        node_budget: cli.budget_nodes,
    }
}

fn ptas_options(
    delta: Option<usize>,
    delta_cap: usize,
    clamp: bool,
    state_budget: usize,
) -> PtasOptions {
    PtasOptions {
        delta,
        delta_cap,
        clamp,
        state_budget,
    }
}

fn export_vectors(
    path: &Path,
    instances: &[Instance],
    epsilon: f64,
    opts: &PtasOptions,
) -> Result<(), Failure> {
    let requested = match opts.delta {
        Some(d) => d,
        None => delta_for_epsilon(epsilon).map_err(Failure::from_core)?,
    };
    let delta = if opts.clamp { requested.min(opts.delta_cap) } else { requested };
    let catalog = build_catalog_with_cap(delta, opts.delta_cap).map_err(Failure::from_core)?;
    let mut w = csv::Writer::from_path(path).map_err(|e| Failure::parse(e.to_string()))?;
    let mut header = vec!["instance".to_string(), "input".to_string()];
    header.extend((0..catalog.q()).map(|i| format!("t{}", i + 1)));
    header.push("order".into());
    w.write_record(&header).map_err(|e| Failure::parse(e.to_string()))?;
    for (id, inst) in instances.iter().enumerate() {
        for (i, f) in inst.forests.iter().enumerate() {
            let set = that_set_with(f, &catalog, opts.state_budget).map_err(Failure::from_core)?;
            for v in set.vectors() {
                let mut row = vec![id.to_string(), i.to_string()];
                row.extend(v.t.iter().map(u32::to_string));
                row.push(v.value(&catalog).to_string());
                w.write_record(&row).map_err(|e| Failure::parse(e.to_string()))?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn solve_all(
    cli: &Cli,
    name: &str,
    instances: &[Instance],
    solver: impl Fn(&[Forest]) -> Result<Solved, indforest::Error> + Sync,
) -> Result<u8, Failure> {
    let reports: Vec<InstanceReport> = instances
        .par_iter()
        .enumerate()
        .map(|(id, inst)| {
            let start = Instant::now();
            let outcome = solver(&inst.forests).map(|mut s| {
                if cli.corrupt_output {
                    solve::corrupt(&mut s);
                }
                s
            });
            let mut r = report::from_outcome(id, inst.source.clone(), name, outcome);
            if cli.timing {
                r.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            r
        })
        .collect();
    let code = exit_code(&reports);
    for r in reports.iter().filter(|r| r.error.is_some()) {
        eprintln!(
            "instance {} ({}): {}",
            r.id,
            r.source,
            r.error.as_deref().unwrap_or_default()
        );
    }
    let report = Report {
        tool: "indforest",
        version: env!("CARGO_PKG_VERSION"),
        command: name.to_string(),
        seed: cli.seed,
        instances: reports,
    };
    emit_report(cli, &report)?;
    Ok(code)
}

fn run_gen(cli: &Cli, family: &GenCommand) -> Result<u8, Failure> {
    let g = gen::generate(family, cli.seed).map_err(Failure::from_core)?;
    let out = cli.out.as_deref();
    match (cli.format, out) {
        (Format::Json, None) => {
            let doc = serde_json::json!({
                "family": g.family,
                "seed": cli.seed,
                "forests": g.forests.iter().map(|(n, f)| (n.clone(), serde_json::to_value(f).unwrap())).collect::<serde_json::Map<_, _>>(),
                "meta": g.meta,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        (format, _) => {
            let mut all = String::new();
            for (name, f) in &g.forests {
                let (ext, text) = match format {
                    Format::Dot => ("dot", to_dot(f, name)),
                    _ => ("edges", format!("# {name}\n{}", to_edge_list(f))),
                };
                match out {
                    Some(dir) => write_output(Some(dir), &format!("{name}.{ext}"), &text)?,
                    None => all.push_str(&text),
                }
            }
            match out {
                Some(dir) => {
                    let sidecar = serde_json::json!({
                        "family": g.family,
                        "seed": cli.seed,
                        "files": g.forests.iter().map(|(n, f)| serde_json::json!({"name": n, "order": f.order()})).collect::<Vec<_>>(),
                        "meta": g.meta,
                    });
                    let text = serde_json::to_string_pretty(&sidecar).expect("json") + "\n";
                    write_output(Some(dir), &format!("{}.meta.json", g.family), &text)?;
                }
                None => print!("{all}"),
            }
        }
    }
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let known = match &cli.command {
        Command::Greedy { known: Some(p), .. } => {
            let mut fs = read_forests(p)?;
            if fs.len() != 1 {
                return Err(Failure::parse(format!(
                    "{}: expected one known supertree",
                    p.display()
                )));
            }
            fs.pop()
        }
        _ => None,
    };
    match &cli.command {
        Command::Mcs2 { inputs } => solve_all(cli, "mcs2", &read_instances(inputs)?, solve::mcs2),
        Command::Super2 { inputs } => {
            solve_all(cli, "super2", &read_instances(inputs)?, solve::super2)
        }
        Command::Greedy { inputs, .. } => solve_all(cli, "greedy", &read_instances(inputs)?, |f| {
            solve::greedy(f, known.as_ref())
        }),
        Command::Exact3 {
            inputs,
            partition_cap,
        } => solve_all(cli, "exact3", &read_instances(inputs)?, |f| {
            solve::exact3(f, *partition_cap)
        }),
        Command::Ptas {
            inputs,
            epsilon,
            delta,
            delta_cap,
            clamp_delta,
            state_budget,
            vectors_csv,
        } => {
            if epsilon.is_none() && delta.is_none() {
                return Err(Failure::parse("ptas needs --epsilon or --delta"));
            }
            let eps = epsilon.unwrap_or(1.0);
            let opts = ptas_options(*delta, *delta_cap, *clamp_delta, *state_budget);
            let instances = read_instances(inputs)?;
            if let Some(path) = vectors_csv {
                export_vectors(path, &instances, eps, &opts)?;
            }
            solve_all(cli, "ptas", &instances, |f| solve::ptas(f, eps, &opts))
        }
        Command::OracleSub { inputs, limits } => {
            let budget = oracle_budget(cli, limits);
            solve_all(cli, "oracle-sub", &read_instances(inputs)?, |f| {
                solve::oracle_sub(f, &budget)
            })
        }
        Command::OracleSuper {
            inputs,
            limits,
            forests,
        } => {
            let budget = oracle_budget(cli, limits);
            let class = if *forests {
                HostClass::Forests
            } else {
                HostClass::Auto
            };
            solve_all(cli, "oracle-super", &read_instances(inputs)?, |f| {
                solve::oracle_super(f, &budget, class)
            })
        }
        Command::Gen { family } => run_gen(cli, family),
        Command::Bench {
            kind: BenchCommand::Ratio { a, b, c },
        } => {
            let rows = bench::ratio_sweep(a, *b, *c).map_err(Failure::from_core)?;
            let text = bench::to_csv(&rows).map_err(|e| Failure::parse(e.to_string()))?;
            write_output(cli.out.as_deref(), "ratio.csv", &text)?;
            Ok(if rows.iter().all(|r| r.verified) { 0 } else { EXIT_VERIFY })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new().stack_size(256 << 20);
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool.build().expect("thread pool");
    // The subtree DP recurses along tree paths, so give it deep stacks.
    let code = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(move || pool.install(|| run(&cli)))
        .expect("spawn worker")
        .join()
        .expect("worker panicked");
    match code {
        Ok(c) => ExitCode::from(c),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
