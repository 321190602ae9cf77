//! Command-line driver: load topologies, posets, graphs, and covers from
//! JSON, build the six separation graphs, run the constructive bridges, and
//! execute the named exhaustive verification suites.
//!
//! Exit codes: 0 success, 1 property/validation failure (with the first
//! counterexample), 2 usage or parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use topograph::axiom::Axiom;
use topograph::covers::{
    clique_cover_graph, cover_from_topology, decompose_critical, greedy_simplicial_cover,
    hypergraph_from_cover, is_g2_critical, line_graph, universe_cover_from_topology,
    validate_universe_cover,
};
use topograph::enumerate::{all_posets, all_topologies};
use topograph::error::Error;
use topograph::graph::Graph;
use topograph::io::{
    clique_cover_to_json, graph_from_json, graph_to_dot, graph_to_json, hypergraph_to_json,
    poset_from_json, poset_to_json, topology_from_json, topology_to_json,
    universe_cover_from_json, universe_cover_to_json, LabelTable,
};
use topograph::normalize::{distinguish_min_sets, reduce_height_2, reduce_height_3};
use topograph::poset::Poset;
use topograph::separation::{graph_chain, separation_graph};
use topograph::suites::run_suite;
use topograph::topology::FiniteTopology;

#[derive(Parser)]
#[command(
    name = "topograph",
    version,
    about = "Finite topologies and their separation-axiom graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxiomArg {
    T0,
    T1,
    T2,
    T3p,
    T3pp,
    T4,
    All,
}

impl AxiomArg {
    fn axioms(self) -> Vec<Axiom> {
        match self {
            AxiomArg::T0 => vec![Axiom::T0],
            AxiomArg::T1 => vec![Axiom::T1],
            AxiomArg::T2 => vec![Axiom::T2],
            AxiomArg::T3p => vec![Axiom::T3Prime],
            AxiomArg::T3pp => vec![Axiom::T3DoublePrime],
            AxiomArg::T4 => vec![Axiom::T4],
            AxiomArg::All => Axiom::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    ToTopology,
    ToPoset,
}

#[derive(Clone, Copy, ValueEnum)]
enum TaskArg {
    Simplicial,
    Universe,
    Critical,
    Linegraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Topologies,
    Posets,
}

#[derive(Subcommand)]
enum Command {
    /// Build the separation graph(s) of a topology file as JSON and DOT
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        axiom: AxiomArg,
        #[arg(long)]
        out: PathBuf,
        /// Restrict output to one format (default: both)
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Convert between posets and topologies; also writes the five poset graphs
    Bridge {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Cover and criticality constructions with certificate output
    Covers {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        task: TaskArg,
        /// Universe cover file to validate (with --task universe on a graph)
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a graph-preserving normalization to a topology file
    Normalize(NormalizeArgs),
    /// Dump every topology or poset on n points as JSON files
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "topologies")]
        kind: KindArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a named exhaustive verification suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Args)]
struct NormalizeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Split equal minimal sets (preserves G_1 .. G_4)
    #[arg(long, conflicts_with_all = ["height2", "height3"])]
    distinct: bool,
    /// Reduce height to 2 (preserves G_2)
    #[arg(long, conflicts_with = "height3")]
    height2: bool,
    /// Reduce height to 3 (preserves the chosen axiom's graph)
    #[arg(long)]
    height3: bool,
    /// Axiom for --height3 (t3p, t3pp, or t4)
    #[arg(long, value_enum)]
    axiom: Option<AxiomArg>,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures that should exit 2: bad usage and unreadable input.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::Io(_) | Error::UnknownSuite(_) | Error::AxiomOutOfRange(_)
    )
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, contents)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_build(
    input: &Path,
    axiom: AxiomArg,
    out: &Path,
    format: Option<FormatArg>,
) -> Result<(), Error> {
    let (t, labels) = topology_from_json(&read(input)?)?;
    let axioms = axiom.axioms();
    fs::create_dir_all(out)?;
    let (json_on, dot_on) = match format {
        None => (true, true),
        Some(FormatArg::Json) => (true, false),
        Some(FormatArg::Dot) => (false, true),
    };
    for a in &axioms {
        let g = separation_graph(&t, *a);
        if json_on {
            write_file(&out.join(format!("g_{a}.json")), &graph_to_json(&g, &labels))?;
        }
        if dot_on {
            let dot = graph_to_dot(&g, &labels, &format!("G_{a}"));
            write_file(&out.join(format!("g_{a}.dot")), &dot)?;
        }
    }
    if axioms.len() == 6 {
        let chain = graph_chain(&t)?;
        let counts: Vec<usize> = chain.iter().map(|g| g.edge_count()).collect();
        let report = serde_json::json!({
            "edge_counts": Axiom::ALL
                .iter()
                .zip(&counts)
                .map(|(a, c)| (a.to_string(), c))
                .collect::<std::collections::BTreeMap<_, _>>(),
            "monotone": true,
        });
        write_file(
            &out.join("chain_report.json"),
            &serde_json::to_string_pretty(&report).unwrap(),
        )?;
    }
    Ok(())
}

fn write_poset_graphs(p: &Poset, labels: &LabelTable, out: &Path) -> Result<(), Error> {
    let graphs: [(&str, Graph); 5] = [
        ("comparability", p.comparability_graph()),
        ("upper_bound", p.upper_bound_graph()),
        ("half_closed", p.half_closed_ub_graph()),
        ("fully_closed", p.fully_closed_ub_graph()),
        ("extended_closed", p.extended_closed_ub_graph()),
    ];
    for (name, g) in graphs {
        write_file(&out.join(format!("{name}.json")), &graph_to_json(&g, labels))?;
    }
    Ok(())
}

fn cmd_bridge(input: &Path, direction: DirectionArg, out: &Path) -> Result<(), Error> {
    fs::create_dir_all(out)?;
    match direction {
        DirectionArg::ToTopology => {
            let (p, labels) = poset_from_json(&read(input)?)?;
            let t = p.to_topology();
            write_file(&out.join("topology.json"), &topology_to_json(&t, &labels))?;
            write_poset_graphs(&p, &labels, out)?;
        }
        DirectionArg::ToPoset => {
            let (t, labels) = topology_from_json(&read(input)?)?;
            let p = Poset::from_topology(&t).map_err(|e| match e {
                Error::NonDistinctMinSets(x, y) => Error::Parse(format!(
                    "points {:?} and {:?} share a minimal set; run `topograph normalize \
                     --distinct` first",
                    labels.label(x),
                    labels.label(y)
                )),
                other => other,
            })?;
            write_file(&out.join("poset.json"), &poset_to_json(&p, &labels))?;
            write_poset_graphs(&p, &labels, out)?;
        }
    }
    Ok(())
}

/// Either a graph file or a topology file; topologies are taken to their
/// G_2 (or G_3', for universes) with the loaded label table.
enum CoverInput {
    Graph(Graph, LabelTable),
    Topology(Box<FiniteTopology>, LabelTable),
}

fn load_cover_input(input: &Path) -> Result<CoverInput, Error> {
    let text = read(input)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("edges").is_some() {
        let (g, labels) = graph_from_json(&text)?;
        Ok(CoverInput::Graph(g, labels))
    } else {
        let (t, labels) = topology_from_json(&text)?;
        Ok(CoverInput::Topology(Box::new(t), labels))
    }
}

fn maybe_write(out: &Option<PathBuf>, name: &str, contents: &str) -> Result<(), Error> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            write_file(&dir.join(name), contents)
        }
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

fn cmd_covers(
    input: &Path,
    task: TaskArg,
    cover: Option<&PathBuf>,
    out: &Option<PathBuf>,
) -> Result<(), Error> {
    let loaded = load_cover_input(input)?;
    match task {
        TaskArg::Simplicial => {
            let (g, c, labels) = match loaded {
                CoverInput::Topology(t, labels) => {
                    let (g, c) = cover_from_topology(&t);
                    (g, Some(c), labels)
                }
                CoverInput::Graph(g, labels) => {
                    let c = greedy_simplicial_cover(&g);
                    (g, c, labels)
                }
            };
            match c {
                Some(c) => {
                    println!(
                        "edge-simplicial: {} cliques cover {} edges",
                        c.cliques.len(),
                        g.edge_count()
                    );
                    maybe_write(out, "clique_cover.json", &clique_cover_to_json(&c, &labels))?;
                }
                None => {
                    println!("not edge-simplicial");
                    return Err(Error::InvalidCover(
                        "no simplicial-witness cover exists".into(),
                    ));
                }
            }
        }
        TaskArg::Universe => match loaded {
            CoverInput::Topology(t, labels) => {
                let (g, uc) = universe_cover_from_topology(&t);
                println!(
                    "universe cover: {} universes cover {} edges",
                    uc.universes.len(),
                    g.edge_count()
                );
                maybe_write(out, "graph_t3p.json", &graph_to_json(&g, &labels))?;
                maybe_write(
                    out,
                    "universe_cover.json",
                    &universe_cover_to_json(&uc, &labels),
                )?;
            }
            CoverInput::Graph(g, labels) => {
                let path = cover.ok_or_else(|| {
                    Error::Parse("validating a universe cover on a graph needs --cover".into())
                })?;
                let uc = universe_cover_from_json(&read(path)?, &labels)?;
                validate_universe_cover(&g, &uc)?;
                println!("universe cover: valid ({} universes)", uc.universes.len());
            }
        },
        TaskArg::Critical => {
            let (g, labels) = match loaded {
                CoverInput::Graph(g, labels) => (g, labels),
                CoverInput::Topology(t, labels) => (separation_graph(&t, Axiom::T2), labels),
            };
            if is_g2_critical(&g)? {
                match decompose_critical(&g) {
                    Some(d) => {
                        println!(
                            "critical, decomposition: {} step{}",
                            d.steps.len(),
                            if d.steps.len() == 1 { "" } else { "s" }
                        );
                        let json = serde_json::json!({
                            "base": d.base.iter().map(|&v| labels.label(v)).collect::<Vec<_>>(),
                            "steps": d.steps.iter().map(|s| serde_json::json!({
                                "center": labels.label(s.center),
                                "clique": s.clique.iter().map(|&v| labels.label(v)).collect::<Vec<_>>(),
                                "leaves": s.leaves.iter().map(|&v| labels.label(v)).collect::<Vec<_>>(),
                            })).collect::<Vec<_>>(),
                        });
                        maybe_write(
                            out,
                            "decomposition.json",
                            &serde_json::to_string_pretty(&json).unwrap(),
                        )?;
                    }
                    None => println!("critical (irreducible core)"),
                }
            } else {
                println!("not critical");
            }
        }
        TaskArg::Linegraph => {
            let (g, c, labels) = match loaded {
                CoverInput::Topology(t, labels) => {
                    let (g, c) = cover_from_topology(&t);
                    (g, c, labels)
                }
                CoverInput::Graph(g, labels) => {
                    let c = greedy_simplicial_cover(&g).ok_or_else(|| {
                        Error::InvalidCover("graph is not edge-simplicial".into())
                    })?;
                    (g, c, labels)
                }
            };
            let h = clique_cover_graph(&g, &c);
            let (k, map) = hypergraph_from_cover(&g, &c)?;
            let lk = line_graph(&k);
            let iso = topograph::oracle::are_isomorphic(&lk, &h)?.is_some();
            println!(
                "clique cover graph on {} cliques; hypergraph rank {}; line graph isomorphic: {iso}",
                c.cliques.len(),
                k.rank()
            );
            let clique_labels = LabelTable::default_for(c.cliques.len());
            let k_labels =
                LabelTable::new(map.iter().map(|&v| labels.label(v).to_string()).collect())?;
            maybe_write(out, "cover_graph.json", &graph_to_json(&h, &clique_labels))?;
            maybe_write(out, "hypergraph.json", &hypergraph_to_json(&k, &k_labels))?;
            if !iso {
                return Err(Error::InvalidCover(
                    "line graph does not match the clique cover graph".into(),
                ));
            }
        }
    }
    Ok(())
}

fn cmd_normalize(args: &NormalizeArgs) -> Result<(), Error> {
    let (t, labels) = topology_from_json(&read(&args.input)?)?;
    let result = if args.distinct {
        distinguish_min_sets(&t)
    } else if args.height2 {
        reduce_height_2(&t)
    } else if args.height3 {
        let axiom = match args.axiom.map(|a| a.axioms()) {
            Some(axioms) if axioms.len() == 1 => axioms[0],
            Some(_) => return Err(Error::Parse("--axiom all is not a single axiom".into())),
            None => return Err(Error::Parse("--height3 needs --axiom".into())),
        };
        reduce_height_3(&t, axiom)?
    } else {
        return Err(Error::Parse(
            "choose one of --distinct, --height2, --height3".into(),
        ));
    };
    let json = topology_to_json(&result, &labels);
    match &args.out {
        Some(path) => write_file(path, &json)?,
        None => println!("{json}"),
    }
    Ok(())
}

fn cmd_enumerate(n: usize, kind: KindArg, out: &Path) -> Result<(), Error> {
    fs::create_dir_all(out)?;
    let labels = LabelTable::default_for(n);
    let mut count = 0usize;
    match kind {
        KindArg::Topologies => {
            for (i, t) in all_topologies(n)?.enumerate() {
                fs::write(
                    out.join(format!("topology_{i:06}.json")),
                    topology_to_json(&t, &labels),
                )?;
                count += 1;
            }
        }
        KindArg::Posets => {
            for (i, p) in all_posets(n)?.enumerate() {
                fs::write(
                    out.join(format!("poset_{i:06}.json")),
                    poset_to_json(&p, &labels),
                )?;
                count += 1;
            }
        }
    }
    println!("enumerated {count} objects on {n} points into {}", out.display());
    Ok(())
}

fn cmd_verify(suite: &str, n: usize) -> Result<bool, Error> {
    let report = run_suite(suite, n)?;
    println!("{}", report.summary());
    for note in &report.notes {
        println!("  note: {note}");
    }
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Build { input, axiom, out, format } => {
            cmd_build(input, *axiom, out, *format)?;
            Ok(true)
        }
        Command::Bridge { input, direction, out } => {
            cmd_bridge(input, *direction, out)?;
            Ok(true)
        }
        Command::Covers { input, task, cover, out } => {
            cmd_covers(input, *task, cover.as_ref(), out)?;
            Ok(true)
        }
        Command::Normalize(args) => {
            cmd_normalize(args)?;
            Ok(true)
        }
        Command::Enumerate { n, kind, out } => {
            cmd_enumerate(*n, *kind, out)?;
            Ok(true)
        }
        Command::Verify { suite, n } => cmd_verify(suite, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if is_usage_error(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
