//! Command-line front end: graph ingestion, subcommand dispatch, and
//! deterministic text/JSON output.
//!
//! Exit codes: 0 success (or verdict Trivial), 1 verdict Nontrivial,
//! 2 verdict Unknown, 64 usage or parse error, 69 resource limit.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use graphic_braids::braid::parse_pair_word;
use graphic_braids::classify::{
    analyze, bgamma_report, graphic_arrangement, graphic_discriminantal, AnalyzeOptions,
};
use graphic_braids::freegroup::DEFAULT_WORD_LIMIT;
use graphic_braids::graphic::{
    example6_commutator_check, presentation, word_problem_with_family, UnknownReason, WordVerdict,
};
use graphic_braids::graphs::{
    incidence_graph, maximal_cliques, parse_dot, parse_edge_list, parse_graph, parse_inline,
    triangles, Graph, DEFAULT_AUT_BOUND,
};

const EXIT_NONTRIVIAL: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_RESOURCE: u8 = 69;

#[derive(Parser)]
#[command(
    name = "gbraid",
    about = "Computations with the pure braid group quotients determined by simple graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    EdgeList,
    Dot,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file (edge-list or DOT subset; auto-detected without --format)
    file: Option<String>,
    /// Inline graph, e.g. "n=3;1-2;1-3"
    #[arg(long)]
    graph: Option<String>,
    /// Force the input format
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct OutputArgs {
    /// Human-readable tables instead of JSON
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for a graph
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Include semidirect splitting data over this clique, e.g. 1,2,3
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
        /// Bound for the exhaustive automorphism search
        #[arg(long, default_value_t = DEFAULT_AUT_BOUND)]
        aut_bound: usize,
    },
    /// Maximal cliques of the graph
    Cliques {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Presentation of the quotient group
    Present {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Project a word onto a vertex subset
    Rho {
        /// Word over edge generators, e.g. "a_1_2 a_2_3^-1"
        word: String,
        /// Target vertex subset, e.g. 1,2,3
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<usize>,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide whether two words are equal in the quotient group
    WordEq {
        word1: String,
        word2: String,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Word-length guard for the free-group evaluation
        #[arg(long, default_value_t = DEFAULT_WORD_LIMIT)]
        word_limit: usize,
    },
    /// Decide whether a word is trivial in the quotient group
    WordTriv {
        word: String,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = DEFAULT_WORD_LIMIT)]
        word_limit: usize,
    },
    /// Hyperplane list of the graphic arrangement
    Arrangement {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Kernel arrangement of the splitting over a clique
    Discriminantal {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// The clique, e.g. 1,2,3,4
        #[arg(long, value_delimiter = ',', required = true)]
        clique: Vec<usize>,
    },
    /// Incidence graph summary (generators versus clique family)
    Incidence {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Use all triangles instead of the maximal cliques
        #[arg(long)]
        triangles: bool,
    },
    /// Extension-group report: automorphisms and torsion witnesses
    Bgamma {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, default_value_t = DEFAULT_AUT_BOUND)]
        aut_bound: usize,
    },
    /// The nested-commutator check of the six-vertex worked example
    Example6 {
        #[command(flatten)]
        output: OutputArgs,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_graph(args: &GraphArgs) -> Result<Graph, Failure> {
    match (&args.file, &args.graph) {
        (Some(_), Some(_)) => Err(Failure::usage("give either a graph file or --graph, not both")),
        (None, None) => Err(Failure::usage("no graph given; pass a file or --graph")),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
            let parsed = match args.format {
                Some(Format::EdgeList) => parse_edge_list(&text),
                Some(Format::Dot) => parse_dot(&text),
                None => parse_graph(&text),
            };
            parsed.map_err(|e| Failure::usage(e.to_string()))
        }
        (None, Some(inline)) => parse_inline(inline).map_err(|e| Failure::usage(e.to_string())),
    }
}

fn emit(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report types serialize")
    );
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Analyze {
            graph,
            output,
            clique,
            aut_bound,
        } => {
            let g = load_graph(&graph)?;
            let opts = AnalyzeOptions { aut_bound, clique };
            let report = analyze(&g, &opts).map_err(|e| Failure::usage(e.to_string()))?;
            if output.text {
                print!("{}", analyze_text(&report));
            } else {
                emit(&report);
            }
            Ok(0)
        }
        Command::Cliques { graph, output } => {
            let g = load_graph(&graph)?;
            let fam = maximal_cliques(&g);
            if output.text {
                for m in fam.members() {
                    let line: Vec<String> = m.iter().map(|v| v.to_string()).collect();
                    println!("{}", line.join(" "));
                }
            } else {
                emit(&fam.members().to_vec());
            }
            Ok(0)
        }
        Command::Present { graph, output } => {
            let g = load_graph(&graph)?;
            let p = presentation(&g);
            if output.text {
                print!("{p}");
            } else {
                let gens: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
                let rels: Vec<String> = p.relators().iter().map(|r| r.to_string()).collect();
                emit(&BTreeMap::from([("generators", gens), ("relators", rels)]));
            }
            Ok(0)
        }
        Command::Rho {
            word,
            vertices,
            graph,
            output,
        } => {
            let g = load_graph(&graph)?;
            for &v in &vertices {
                if v == 0 || v > g.n() {
                    return Err(Failure::usage(format!("vertex {v} out of range 1..={}", g.n())));
                }
            }
            let w = parse_pair_word(&word).map_err(|e| Failure::usage(e.to_string()))?;
            let mut subset = vertices;
            subset.sort_unstable();
            subset.dedup();
            let image = graphic_braids::graphic::rho(&g, &w, &subset);
            let rank = |v: usize| subset.iter().position(|&u| u == v).expect("in subset") + 1;
            let relabelled = graphic_braids::freegroup::FreeWord::from_letters(
                image.letters().iter().map(|l| {
                    graphic_braids::freegroup::Letter::new(
                        graphic_braids::braid::Pair::sorted(rank(l.symbol.i()), rank(l.symbol.j())),
                        l.sign,
                    )
                }),
            );
            if output.text {
                println!("image: {image}");
                println!("relabelled: {relabelled}");
            } else {
                #[derive(serde::Serialize)]
                struct RhoOut {
                    subset: Vec<usize>,
                    image: String,
                    relabelled: String,
                    relabelling: Vec<(usize, usize)>,
                }
                let relabelling = subset.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
                emit(&RhoOut {
                    subset: subset.clone(),
                    image: image.to_string(),
                    relabelled: relabelled.to_string(),
                    relabelling,
                });
            }
            Ok(0)
        }
        Command::WordEq {
            word1,
            word2,
            graph,
            output,
            word_limit,
        } => {
            let g = load_graph(&graph)?;
            let w1 = parse_pair_word(&word1).map_err(|e| Failure::usage(e.to_string()))?;
            let w2 = parse_pair_word(&word2).map_err(|e| Failure::usage(e.to_string()))?;
            decide(&g, &w1.mul(&w2.inverse()), word_limit, output.text)
        }
        Command::WordTriv {
            word,
            graph,
            output,
            word_limit,
        } => {
            let g = load_graph(&graph)?;
            let w = parse_pair_word(&word).map_err(|e| Failure::usage(e.to_string()))?;
            decide(&g, &w, word_limit, output.text)
        }
        Command::Arrangement { graph, output } => {
            let g = load_graph(&graph)?;
            let arr = graphic_arrangement(&g);
            if output.text {
                for h in &arr.hyperplanes {
                    println!("{h}");
                }
            } else {
                emit(&arr);
            }
            Ok(0)
        }
        Command::Discriminantal {
            graph,
            output,
            clique,
        } => {
            let g = load_graph(&graph)?;
            let (arr, relabel) =
                graphic_discriminantal(&g, &clique).map_err(|e| Failure::usage(e.to_string()))?;
            if output.text {
                println!("relabelling: {relabel}");
                for h in &arr.hyperplanes {
                    println!("{h}");
                }
            } else {
                #[derive(serde::Serialize)]
                struct DiscOut {
                    clique: Vec<usize>,
                    relabel: Vec<usize>,
                    arrangement: graphic_braids::classify::Arrangement,
                }
                let mut sorted = clique;
                sorted.sort_unstable();
                emit(&DiscOut {
                    clique: sorted,
                    relabel: relabel.images().to_vec(),
                    arrangement: arr,
                });
            }
            Ok(0)
        }
        Command::Incidence {
            graph,
            output,
            triangles: use_triangles,
        } => {
            let g = load_graph(&graph)?;
            let fam = if use_triangles {
                triangles(&g)
            } else {
                maximal_cliques(&g)
            };
            let inc = incidence_graph(&g, &fam);
            #[derive(serde::Serialize)]
            struct IncOut {
                family: &'static str,
                left_vertices: usize,
                right_vertices: usize,
                vertex_count: usize,
                edge_count: usize,
                components: usize,
                betti1: usize,
                has_isthmus: bool,
            }
            let out = IncOut {
                family: if use_triangles { "triangles" } else { "maximal_cliques" },
                left_vertices: inc.left().len(),
                right_vertices: inc.right().len(),
                vertex_count: inc.vertex_count(),
                edge_count: inc.edge_count(),
                components: inc.component_count(),
                betti1: inc.betti1(),
                has_isthmus: inc.has_isthmus(),
            };
            if output.text {
                println!("family: {}", out.family);
                println!(
                    "vertices: {} ({} + {})",
                    out.vertex_count, out.left_vertices, out.right_vertices
                );
                println!("edges: {}", out.edge_count);
                println!("components: {}", out.components);
                println!("betti1: {}", out.betti1);
                println!("has_isthmus: {}", out.has_isthmus);
            } else {
                emit(&out);
            }
            Ok(0)
        }
        Command::Bgamma {
            graph,
            output,
            aut_bound,
        } => {
            let g = load_graph(&graph)?;
            let report = bgamma_report(&g, aut_bound)
                .map_err(|e| Failure::usage(format!("{e}; see --aut-bound")))?;
            if output.text {
                println!("aut_order: {}", report.aut_order);
                println!("pure_index: {}", report.pure_index);
                println!("torsion_free: {:?}", report.torsion_free.status);
                println!("torsion_witnesses: {}", report.torsion_witnesses.len());
            } else {
                emit(&report);
            }
            Ok(0)
        }
        Command::Example6 { output } => {
            let nontrivial = example6_commutator_check();
            if output.text {
                println!("nontrivial: {nontrivial}");
            } else {
                emit(&BTreeMap::from([("nontrivial", nontrivial)]));
            }
            Ok(if nontrivial { 0 } else { EXIT_UNKNOWN })
        }
    }
}

fn decide(
    g: &Graph,
    w: &graphic_braids::freegroup::FreeWord<graphic_braids::braid::Pair>,
    word_limit: usize,
    text: bool,
) -> Result<u8, Failure> {
    let fam = maximal_cliques(g);
    let verdict = word_problem_with_family(g, w, &fam, word_limit)
        .map_err(|e| Failure::usage(e.to_string()))?;
    #[derive(serde::Serialize)]
    struct VerdictOut {
        verdict: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        reason: Option<String>,
    }
    let (out, code) = match &verdict {
        WordVerdict::Trivial => (
            VerdictOut {
                verdict: "trivial",
                witness: None,
                reason: None,
            },
            0,
        ),
        WordVerdict::Nontrivial { witness } => (
            VerdictOut {
                verdict: "nontrivial",
                witness: Some(witness.clone()),
                reason: None,
            },
            EXIT_NONTRIVIAL,
        ),
        WordVerdict::Unknown { reason } => {
            let (note, code) = match reason {
                UnknownReason::NoCertificate { note } => (note.clone(), EXIT_UNKNOWN),
                UnknownReason::ResourceLimit { note } => (note.clone(), EXIT_RESOURCE),
            };
            (
                VerdictOut {
                    verdict: "unknown",
                    witness: None,
                    reason: Some(note),
                },
                code,
            )
        }
    };
    if text {
        match (&out.witness, &out.reason) {
            (Some(w), _) => println!("{} (witness {:?})", out.verdict, w),
            (None, Some(r)) => println!("{} ({r})", out.verdict),
            (None, None) => println!("{}", out.verdict),
        }
    } else {
        emit(&out);
    }
    Ok(code)
}

fn analyze_text(report: &graphic_braids::classify::AnalysisReport) -> String {
    let mut s = String::new();
    let g = &report.graph;
    s.push_str(&format!(
        "graph: n={} edges={} connected={}\n",
        g.n, g.edge_count, g.connected
    ));
    s.push_str(&format!("maximal cliques: {:?}\n", report.maximal_cliques));
    s.push_str(&format!(
        "injectivity: {} ({})\n",
        report.injectivity.status,
        report.injectivity.rule.as_deref().unwrap_or("-")
    ));
    s.push_str(&format!(
        "finiteness: triangles={} {:?}\n",
        report.finiteness_pure.triangle_count, report.finiteness_pure.class
    ));
    s.push_str(&format!("kpi1: {:?}\n", report.kpi1));
    if let Some(b) = &report.bgamma {
        s.push_str(&format!(
            "aut_order: {} torsion_witnesses: {}\n",
            b.aut_order,
            b.torsion_witnesses.len()
        ));
    }
    s
}
