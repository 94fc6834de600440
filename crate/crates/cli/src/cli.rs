//! Argument parsing and the subcommands. Structured output goes to stdout as
//! JSON, human-readable notes to stderr.
//!
//! Exit status: 0 on success, 1 when a property violation was found, 2 on a
//! usage, input or parse error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use holefree_core::coloring::{certified_class_color, dsatur, four_color_a3_components, ColorMethod, ColoringError};
use holefree_core::exact::chromatic_number_with_cap;
use holefree_core::format::{serialize_graph, to_graph6, Format};
use holefree_core::generate::{named_graph, random_in_class, GenSpec, NamedGraph};
use holefree_core::holes::{class_membership, enumerate_induced_cycles, ClassSpec, Family};
use holefree_core::{FourColorOutcome, Graph};
use serde_json::{json, Value};

use crate::io::read_graph;
use crate::report::{coloring_map, WitnessJson};
use crate::verify::{verify_corpus, Suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "holefree",
    version,
    about = "Hole detection, class membership and colouring for graphs with odd-hole restrictions"
)]
pub struct Cli {
    /// Input format; by default `.g6` files are graph6 and `n <count>` headers mark edge lists.
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::EdgeList => Format::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClassArg {
    A,
    B,
    G,
    F,
}

impl From<ClassArg> for Family {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::A => Family::A,
            ClassArg::B => Family::B,
            ClassArg::G => Family::G,
            ClassArg::F => Family::F,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct ClassOpts {
    #[arg(long = "class", value_enum, ignore_case = true)]
    pub family: ClassArg,
    #[arg(long)]
    pub ell: usize,
    #[arg(long)]
    pub seven_hole_free: bool,
}

impl ClassOpts {
    fn spec(&self) -> anyhow::Result<ClassSpec> {
        Ok(ClassSpec::new(self.family.into(), self.ell)?.with_seven_hole_free(self.seven_hole_free))
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct OptionalClassOpts {
    #[arg(long = "class", value_enum, ignore_case = true, requires = "ell")]
    pub family: Option<ClassArg>,
    #[arg(long, requires = "family")]
    pub ell: Option<usize>,
    #[arg(long, requires = "family")]
    pub seven_hole_free: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    A3,
    Dsatur,
    Exact,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Named {
    Petersen,
    Grotzsch,
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    Tree,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class membership with a witness hole.
    Check {
        file: PathBuf,
        #[command(flatten)]
        class: ClassOpts,
    },
    /// Colour a graph.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "a3")]
        method: Method,
        /// Certify against the class bound; the graph must be a member.
        #[command(flatten)]
        class: OptionalClassOpts,
    },
    /// Exact chromatic number.
    Chroma { file: PathBuf },
    /// All induced cycles up to a length.
    Holes {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Generate class members into a directory as graph6 files.
    Gen {
        #[command(flatten)]
        class: ClassOpts,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Number of graphs, with seeds `seed, seed + 1, ..`.
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Fraction of vertex pairs tried as edges.
        #[arg(long, default_value_t = 1.0)]
        density: f64,
        /// Rejected pairs allowed before stopping.
        #[arg(long)]
        retry_budget: Option<usize>,
    },
    /// Write a named graph.
    Named {
        #[arg(value_enum)]
        name: Named,
        /// Size parameters: `n` for cycle, path, complete and tree, `a b` for complete-bipartite.
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "graph6")]
        to: InputFormat,
    },
    /// Run every applicable property on a corpus of graph6 files.
    Verify {
        dir: PathBuf,
        #[arg(long)]
        report: PathBuf,
        /// Property suites to run (repeatable); all by default.
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
        /// Per-property time limit in seconds.
        #[arg(long, default_value_t = 30.0)]
        timeout: f64,
    },
}

/// A run that ended without a usage error: its JSON and exit status.
pub struct Outcome {
    pub json: Value,
    pub violation: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, violation: false }
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            out.violation as i32
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let load = |p: &Path| -> anyhow::Result<Graph> { Ok(read_graph(p, cli.format.map(Format::from))?) };
    match &cli.command {
        Command::Check { file, class } => {
            let spec = class.spec()?;
            let g = load(file)?;
            let w = class_membership(&g, &spec).witness;
            Ok(Outcome::ok(json!({
                "class": spec.to_string(),
                "member": w.is_none(),
                "witness": w.as_ref().map(|w| &w.cycle),
                "witness_kind": w.as_ref().map(|w| w.kind.to_string()),
            })))
        }
        Command::Color { file, method, class } => {
            let g = load(file)?;
            match class.family {
                Some(f) => {
                    let spec =
                        ClassSpec::new(f.into(), class.ell.unwrap_or(0))?.with_seven_hole_free(class.seven_hole_free);
                    certified(&g, &spec)
                }
                None => color(&g, *method),
            }
        }
        Command::Chroma { file } => {
            let g = load(file)?;
            let r = chromatic_number_with_cap(&g, crate::oracle_cap())?;
            Ok(Outcome::ok(json!({ "chi": r.chi, "coloring": coloring_map(&r.optimal_coloring) })))
        }
        Command::Holes { file, max_len } => {
            let g = load(file)?;
            let cycles = enumerate_induced_cycles(&g, *max_len);
            Ok(Outcome::ok(json!({ "max_len": max_len, "count": cycles.len(), "cycles": cycles })))
        }
        Command::Gen { class, n, seed, out, count, density, retry_budget } => {
            let spec = class.spec()?;
            if !(0.0..=1.0).contains(density) {
                bail!("--density must lie in [0, 1]");
            }
            fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
            let mut written = Vec::new();
            for i in 0..*count {
                let s = seed.wrapping_add(i);
                let mut gs = GenSpec::new(spec, *n, s).with_density(*density);
                if let Some(b) = retry_budget {
                    gs = gs.with_retry_budget(*b);
                }
                let res = random_in_class(&gs)?;
                let name = corpus_file_name(&spec, *n, s);
                let path = out.join(&name);
                fs::write(&path, serialize_graph(&res.graph, Format::Graph6))
                    .with_context(|| format!("writing {}", path.display()))?;
                written.push(json!({
                    "file": name,
                    "seed": s,
                    "n": res.graph.n(),
                    "edges": res.graph.edge_count(),
                    "attempted": res.attempted,
                    "rejected": res.rejected,
                    "degenerate": res.degenerate,
                }));
            }
            eprintln!("wrote {} graph(s) to {}", written.len(), out.display());
            Ok(Outcome::ok(json!({ "class": spec.to_string(), "graphs": written })))
        }
        Command::Named { name, params, seed, out, to } => {
            let g = named_graph(named(*name, params, *seed)?)?;
            let text = serialize_graph(&g, (*to).into());
            match out {
                Some(p) => {
                    fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
                    Ok(Outcome::ok(
                        json!({ "file": p.display().to_string(), "n": g.n(), "edges": g.edge_count(), "graph6": to_graph6(&g) }),
                    ))
                }
                None => Ok(Outcome::ok(json!({ "n": g.n(), "edges": g.edge_count(), "graph6": to_graph6(&g) }))),
            }
        }
        Command::Verify { dir, report, suites, timeout } => {
            if !(timeout.is_finite() && *timeout > 0.0) {
                bail!("--timeout must be a positive number of seconds");
            }
            let mut opts = VerifyOptions { timeout: Duration::from_secs_f64(*timeout), ..VerifyOptions::default() };
            if !suites.is_empty() {
                let mut s = suites.clone();
                s.sort();
                s.dedup();
                opts.suites = s;
            }
            let rep = verify_corpus(dir, &opts).with_context(|| format!("reading corpus {}", dir.display()))?;
            let text = serde_json::to_string_pretty(&rep)? + "\n";
            fs::write(report, text).with_context(|| format!("writing {}", report.display()))?;
            let s = &rep.summary;
            eprintln!(
                "{} file(s): {} pass, {} fail, {} timeout, {} inconclusive, {} skipped, {} unreadable",
                s.files, s.pass, s.fail, s.timeout, s.inconclusive, s.skipped, s.errors
            );
            Ok(Outcome {
                json: json!({ "report": report.display().to_string(), "summary": s }),
                violation: rep.has_failures(),
            })
        }
    }
}

/// `<family><ell>_<n>_<seed>.g6`, with `+7hf` after the class for 7-hole-free specs.
pub fn corpus_file_name(spec: &ClassSpec, n: usize, seed: u64) -> String {
    format!("{spec}_{n}_{seed}.g6")
}

fn named(name: Named, params: &[usize], seed: u64) -> anyhow::Result<NamedGraph> {
    let one = || match params {
        [n] => Ok(*n),
        _ => Err(anyhow::anyhow!("expected one size parameter")),
    };
    Ok(match name {
        Named::Petersen => NamedGraph::Petersen,
        Named::Grotzsch => NamedGraph::Grotzsch,
        Named::Cycle => NamedGraph::Cycle(one()?),
        Named::Path => NamedGraph::Path(one()?),
        Named::Complete => NamedGraph::Complete(one()?),
        Named::Tree => NamedGraph::Tree(one()?, seed),
        Named::CompleteBipartite => match params {
            [a, b] => NamedGraph::CompleteBipartite(*a, *b),
            _ => bail!("expected two size parameters"),
        },
    })
}

fn color(g: &Graph, method: Method) -> anyhow::Result<Outcome> {
    let (c, name) = match method {
        Method::A3 => match four_color_a3_components(g) {
            FourColorOutcome::Colored(c) => (c, "a3"),
            FourColorOutcome::OddLayer { layer, cycle } => {
                return Ok(Outcome {
                    json: json!({
                        "method": "a3",
                        "colored": false,
                        "evidence": { "layer": layer, "odd_cycle": cycle },
                        "note": "a distance layer is not bipartite, so the graph is not in A3",
                    }),
                    violation: true,
                });
            }
        },
        Method::Dsatur => (dsatur(g), "dsatur"),
        Method::Exact => (chromatic_number_with_cap(g, crate::oracle_cap())?.optimal_coloring, "exact"),
    };
    Ok(Outcome::ok(json!({
        "method": name,
        "colored": true,
        "colors_used": c.colors_used(),
        "proper": c.is_proper(g),
        "coloring": coloring_map(&c),
    })))
}

fn certified(g: &Graph, spec: &ClassSpec) -> anyhow::Result<Outcome> {
    match certified_class_color(g, spec) {
        Ok(cert) => {
            let method = match cert.method {
                ColorMethod::FourColorA3 => "a3",
                ColorMethod::Dsatur => "dsatur",
            };
            Ok(Outcome {
                violation: cert.within == Some(false),
                json: json!({
                    "class": spec.to_string(),
                    "method": method,
                    "colored": true,
                    "colors_used": cert.coloring.colors_used(),
                    "proper": cert.coloring.is_proper(g),
                    "bound": cert.bound,
                    "within": cert.within,
                    "coloring": coloring_map(&cert.coloring),
                }),
            })
        }
        Err(ColoringError::NotMember { spec, witness }) => Ok(Outcome {
            json: json!({ "class": spec.to_string(), "member": false, "witness": WitnessJson::from(&witness) }),
            violation: true,
        }),
        Err(e) => Err(e.into()),
    }
}
