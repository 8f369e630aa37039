use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use old_digraphs::canon::canonical_form;
use old_digraphs::construct::{build_half_graph_digraph, build_tc_rooted_tree, construct_from_blueprint};
use old_digraphs::digraph::directed_cycle;
use old_digraphs::figures::regenerate_figures;
use old_digraphs::forcing::{build_h_digraph, forcing_decomposition};
use old_digraphs::io::{parse_blueprint, parse_edge_list, to_dot, to_edge_list, DotStyle};
use old_digraphs::trees::enumerate_t_n;
use old_digraphs::verify::{default_workers, verify, Claim, VerifyOptions};
use old_digraphs::{forced_report, is_extremal, is_locatable, min_old_set, Digraph};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "old-digraphs", version, about = "OLD sets and extremal digraphs with loops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Forcing structure, γ_OL and classification of an edge-list digraph.
    Analyze {
        file: PathBuf,
        /// Print DOT instead of text.
        #[arg(long)]
        dot: bool,
    },
    /// Minimum OLD set.
    MinOld { file: PathBuf },
    /// Whether γ_OL = n.
    Extremal { file: PathBuf },
    /// Generate a digraph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Extremal tree digraphs of order n from the recursive rules.
    EnumTrees {
        n: usize,
        /// List every labelled digraph of each class.
        #[arg(long)]
        labelled: bool,
        /// Show the rule that produced each class.
        #[arg(long)]
        provenance: bool,
        /// Write one DOT file per class.
        #[arg(long, value_name = "DIR")]
        dot_dir: Option<PathBuf>,
    },
    /// Exhaustively check a claim on small orders.
    Verify {
        claim: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads (default: $OLD_DIGRAPHS_WORKERS or all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Write the figure panels as DOT files.
    Figures { dir: PathBuf },
}

#[derive(Subcommand)]
enum GenKind {
    /// Build the digraph described by a blueprint file.
    Blueprint { file: PathBuf },
    /// The half-graph H_k as a symmetric digraph.
    HalfGraph { k: usize },
    /// Transitive closure of a rooted tree; parents as `-,0,0,1` (`-` marks the root).
    TcTree {
        #[arg(allow_hyphen_values = true)]
        parents: String,
        #[arg(long)]
        loops: bool,
    },
    /// The directed cycle of order n.
    Cycle { n: usize },
}

type CliResult = Result<u8, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_digraph(path: &Path) -> Result<Digraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Analyze { file, dot } => analyze(&read_digraph(&file)?, dot),
        Command::MinOld { file } => {
            let d = read_digraph(&file)?;
            let r = min_old_set(&d);
            match (r.gamma, r.witness) {
                (Some(g), Some(w)) => println!("gamma {g}\nwitness {}", join(w.iter())),
                _ => println!("NOT LOCATABLE"),
            }
            Ok(0)
        }
        Command::Extremal { file } => {
            let d = read_digraph(&file)?;
            println!("{}", if is_extremal(&d) { "YES" } else { "NO" });
            Ok(0)
        }
        Command::Gen { kind } => {
            let d = match kind {
                GenKind::Blueprint { file } => {
                    let text = fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
                    let b = parse_blueprint(&text).map_err(|e| format!("{}: {e}", file.display()))?;
                    construct_from_blueprint(&b).map_err(|e| e.to_string())?
                }
                GenKind::HalfGraph { k } => build_half_graph_digraph(k).map_err(|e| e.to_string())?,
                GenKind::TcTree { parents, loops } => {
                    build_tc_rooted_tree(&parse_parents(&parents)?, loops).map_err(|e| e.to_string())?
                }
                GenKind::Cycle { n } => {
                    if n == 0 || n > old_digraphs::MAX_ORDER {
                        return Err(format!("cycle order must be in 1..={}", old_digraphs::MAX_ORDER));
                    }
                    directed_cycle(n)
                }
            };
            print!("{}", to_edge_list(&d));
            Ok(0)
        }
        Command::EnumTrees { n, labelled, provenance, dot_dir } => enum_trees(n, labelled, provenance, dot_dir),
        Command::Verify { claim, max_n, workers } => {
            let claim: Claim = claim.parse().map_err(|e: old_digraphs::GraphError| e.to_string())?;
            let opts = VerifyOptions { max_n, workers: workers.unwrap_or_else(default_workers) };
            let report = verify(claim, opts).map_err(|e| e.to_string())?;
            print!("{}", report.to_text(true));
            Ok(if report.verified() { 0 } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Figures { dir } => {
            let paths = regenerate_figures(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for p in paths {
                println!("{}", p.display());
            }
            Ok(0)
        }
    }
}

fn join(it: impl Iterator<Item = usize>) -> String {
    it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_parents(text: &str) -> Result<Vec<Option<usize>>, String> {
    text.split(',')
        .map(|t| match t.trim() {
            "-" => Ok(None),
            t => t.parse().map(Some).map_err(|_| format!("bad parent entry {t:?}")),
        })
        .collect()
}

fn analyze(d: &Digraph, dot: bool) -> CliResult {
    if dot {
        print!("{}", to_dot(d, &DotStyle::forcing("D", d)));
        return Ok(0);
    }
    let c = d.classify();
    println!("order {}", d.order());
    println!("arcs {}", d.arc_count());
    let flags = [
        ("symmetric", c.symmetric),
        ("reflexive", c.reflexive),
        ("loop-free", c.loop_free),
        ("oriented", c.oriented),
        ("two-cycle", c.has_two_cycle),
        ("connected", c.connected_underlying),
        ("source", c.source_exists),
        ("sink", c.sink_exists),
    ];
    let set: Vec<&str> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
    println!("class {}", if set.is_empty() { "-".to_string() } else { set.join(" ") });
    println!("locatable {}", yes_no(is_locatable(d)));
    let r = min_old_set(d);
    match (r.gamma, r.witness) {
        (Some(g), Some(w)) => println!("gamma {g}\nwitness {}", join(w.iter())),
        _ => println!("gamma undefined"),
    }
    println!("extremal {}", yes_no(is_extremal(d)));
    let report = forced_report(d);
    for (v, f) in report.vertices.iter().enumerate() {
        let mut parts = Vec::new();
        if let Some(w) = f.domination_witness {
            parts.push(format!("dom-forced by {w}"));
        }
        for (x, y) in &f.location_witnesses {
            parts.push(format!("loc-forced by {x},{y}"));
        }
        if parts.is_empty() {
            parts.push("not forced".to_string());
        }
        println!("vertex {v}: {}", parts.join("; "));
    }
    let dec = forcing_decomposition(d);
    let arcs: Vec<String> = dec.forcing_arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
    println!("forcing-arcs {}", if arcs.is_empty() { "-".to_string() } else { arcs.join(" ") });
    match &dec.cycles {
        Some(cycles) => {
            let text: Vec<String> = cycles.iter().map(|c| format!("({})", join(c.iter().copied()))).collect();
            println!("forcing-cycles {}", text.join(" "));
            let h = build_h_digraph(d);
            let harcs: Vec<String> = h.arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
            println!("h-arcs {}", if harcs.is_empty() { "-".to_string() } else { harcs.join(" ") });
            println!("h-forest {}", yes_no(h.is_forest()));
        }
        None => println!("forcing-cycles none"),
    }
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn enum_trees(n: usize, labelled: bool, provenance: bool, dot_dir: Option<PathBuf>) -> CliResult {
    let catalog = enumerate_t_n(n).map_err(|e| e.to_string())?;
    println!("order {n}");
    println!("classes {}", catalog.len());
    println!("labelled {}", catalog.labelled_count);
    if let Some(dir) = &dot_dir {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    for (i, m) in catalog.members.iter().enumerate() {
        let mut header = format!("# class {i}");
        if provenance {
            header.push_str(&format!(" [{}; {} derivations]", m.provenance, m.derivations));
        }
        println!("{header}");
        print!("{}", to_edge_list(&m.digraph));
        if labelled {
            for d in labellings(&m.digraph) {
                println!("labelled {}", old_digraphs::io::to_compact_edge_list(&d));
            }
        }
        if let Some(dir) = &dot_dir {
            let name = format!("tree_n{n}_{i}");
            let path = dir.join(format!("{name}.dot"));
            fs::write(&path, to_dot(&m.digraph, &DotStyle::forcing(&name, &m.digraph)))
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
    }
    Ok(0)
}

/// Every relabelling of `d`, sorted by edge list.
fn labellings(d: &Digraph) -> Vec<Digraph> {
    let form = canonical_form(d).ok();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in old_digraphs::construct::permutations(d.order()) {
        let e = d.permute(&p);
        debug_assert_eq!(canonical_form(&e).ok(), form);
        if seen.insert(to_edge_list(&e)) {
            out.push(e);
        }
    }
    out.sort_by_key(to_edge_list);
    out
}
