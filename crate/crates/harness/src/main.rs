use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use belab::enumerate::{enumerate_unicyclic, enumerate_whiskered_cycles, GraphCase};
use belab::oracle::{run_oracle, OracleConfig, OracleOutcome};
use belab::verify::verify_all;
use belab::Cache;
use belab_algebra::resolution::Budgets;
use belab_algebra::{MonOrder, DEFAULT_CHAR};
use belab_core::primes::minimal_primes;
use belab_core::{predict, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "belab", version, about = "Betti numbers of binomial edge ideals: predict and check")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Predicted depth, regularity and extremal Betti numbers as JSON.
    Predict {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Compute the graded Betti table of S/J_G.
    Betti {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        oracle: OracleArgs,
        /// Print the table as JSON instead of the text layout.
        #[arg(long)]
        json: bool,
    },
    /// Minimal primes of J_G as JSON.
    Primes {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Compare predictions with computed Betti tables over a family of graphs.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Extra graphs to include, as JSON files.
        #[arg(long = "graph")]
        graphs: Vec<PathBuf>,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, default_value = "report.csv")]
        out: PathBuf,
        /// JSON report path; defaults to the CSV path with a .json extension.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List the graphs of a family, one JSON object per line.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Unicyclic,
    WhiskeredCycle,
    Cycle,
    Complete,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Largest vertex count (unicyclic, cycle, complete).
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    girth_min: usize,
    #[arg(long)]
    girth_max: Option<usize>,
    /// Cycle length for whiskered cycles.
    #[arg(long)]
    k: Option<usize>,
    /// Total number of whiskers.
    #[arg(long, default_value_t = 0)]
    budget: usize,
    /// Take every whisker total from 0 up to --budget instead of exactly --budget.
    #[arg(long)]
    cumulative: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long = "char", default_value_t = DEFAULT_CHAR)]
    p: u32,
    #[arg(long, default_value = "degrevlex")]
    order: MonOrder,
    /// Resolve graphs above the default size limit too.
    #[arg(long)]
    force: bool,
    /// Cap on S-pair and syzygy work, used for both stages.
    #[arg(long, env = "BELAB_BUDGET")]
    work_budget: Option<u64>,
    #[arg(long, env = "BELAB_CACHE")]
    cache: Option<PathBuf>,
}

impl OracleArgs {
    fn config(&self) -> Result<OracleConfig> {
        let mut cfg = OracleConfig { p: self.p, order: self.order, force: self.force, ..OracleConfig::default() };
        if let Some(b) = self.work_budget {
            cfg.budgets = Budgets { pairs: b, frame: b };
        }
        if let Some(dir) = &self.cache {
            cfg.cache = Some(Cache::open(dir).with_context(|| format!("opening cache {}", dir.display()))?);
        }
        Ok(cfg)
    }
}

impl FamilyArgs {
    fn cases(&self) -> Result<Vec<GraphCase>> {
        let Some(family) = self.family else { return Ok(Vec::new()) };
        let cases = match family {
            Family::Unicyclic => enumerate_unicyclic(self.max_n, self.girth_min, self.girth_max.unwrap_or(self.max_n))?,
            Family::WhiskeredCycle => {
                let k = self.k.context("--k is required for whiskered cycles")?;
                let totals = if self.cumulative { 0..=self.budget } else { self.budget..=self.budget };
                let mut out = Vec::new();
                for b in totals {
                    out.extend(enumerate_whiskered_cycles(k, b)?);
                }
                out
            }
            Family::Cycle => (self.girth_min.max(3)..=self.max_n)
                .map(|k| Ok(GraphCase::new(Graph::cycle(k)?, format!("C{k}"))))
                .collect::<Result<_>>()?,
            Family::Complete => {
                (2..=self.max_n).map(|m| Ok(GraphCase::new(Graph::complete(m)?, format!("K{m}")))).collect::<Result<_>>()?
            }
        };
        Ok(cases)
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Predict { graph } => {
            let g = read_graph(&graph)?;
            println!("{}", serde_json::to_string_pretty(&predict(&g)?)?);
        }
        Cmd::Primes { graph } => {
            let g = read_graph(&graph)?;
            println!("{}", serde_json::to_string_pretty(&minimal_primes(&g)?)?);
        }
        Cmd::Betti { graph, oracle, json } => {
            let g = read_graph(&graph)?;
            let cfg = oracle.config()?;
            match run_oracle(&g, &cfg)? {
                OracleOutcome::Skipped(why) => bail!("not resolved: {why}"),
                OracleOutcome::Computed(res) if json => {
                    println!("{}", serde_json::to_string_pretty(&res.betti.to_json(g.n(), cfg.p, cfg.order.name()))?)
                }
                OracleOutcome::Computed(res) => {
                    let inv = &res.invariants;
                    print!("{}", res.betti);
                    println!("pd {} depth {} reg {}", inv.pd, inv.depth, inv.reg);
                    let ext: Vec<String> = inv.extremal.iter().map(|(i, j)| format!("({i},{j})")).collect();
                    println!("extremal {}{}", ext.join(" "), if inv.unique_extremal { " (unique)" } else { "" });
                }
            }
        }
        Cmd::Enumerate { family } => {
            if family.family.is_none() {
                bail!("--family is required");
            }
            for c in family.cases()? {
                println!("{}\t{}", c.recipe, c.graph.to_json());
            }
        }
        Cmd::Verify { family, graphs, oracle, out, json, jobs } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
            }
            let mut cases = family.cases()?;
            for path in &graphs {
                cases.push(GraphCase::new(read_graph(path)?, path.display().to_string()));
            }
            if cases.is_empty() {
                bail!("nothing to verify: give --family or --graph");
            }
            let cfg = oracle.config()?;
            let report = verify_all(&cases, &cfg)?;
            let json = json.unwrap_or_else(|| out.with_extension("json"));
            report.write_files(&out, &json)?;
            for r in &report.records {
                if !r.notes.is_empty() && r.verdict != belab::Verdict::OracleSkipped || r.consistency_failure {
                    eprintln!("{} {}: {}: {}", r.recipe, r.graph_id, r.verdict, r.notes.join("; "));
                }
            }
            println!("{}", report.summary());
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
