use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use indcx::collapse::{
    collapsibility_number, is_d_collapsible, verify_sequence, CollapseConfig, CollapseOutcome,
    CollapseSequence, CollapseStep, SequenceCheck,
};
use indcx::complexes::{parse_complex, write_complex, Complex};
use indcx::graphs::{self, parse_edge_list, write_edge_list, Graph};
use indcx::homology::{
    betti_in_degree, betti_via_dual_nerve_complex, leray_lower_bound, leray_number,
    reduced_betti_auto, reduced_betti_with_limit, DEFAULT_FACE_LIMIT, DEFAULT_LERAY_VERTEX_LIMIT,
};
use indcx::rainbow::f_exact;
use indcx::verify::{verify_paper, Profile, Verdict};
use indcx::Error;

#[derive(Parser)]
#[command(
    name = "indcx",
    version,
    about = "Homology, collapsibility and rainbow numbers of independence complexes"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for random generators.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Node budget per collapse search.
    #[arg(long, default_value_t = indcx::collapse::DEFAULT_BUDGET, global = true)]
    budget: u64,
    /// Face-enumeration limit for homology.
    #[arg(long, default_value_t = DEFAULT_FACE_LIMIT, global = true)]
    limit_faces: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a graph from a named family as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Build I_n(G) from a graph, or normalize a complex file.
    Complex {
        #[command(flatten)]
        src: Source,
        /// Write facets instead of missing faces.
        #[arg(long)]
        facets: bool,
    },
    /// Reduced Betti numbers over the rationals.
    Betti {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Compute a single degree by direct elimination.
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<isize>,
    },
    /// Leray number by exhaustive scan, or a lower bound.
    Leray {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = DEFAULT_LERAY_VERTEX_LIMIT)]
        vertex_limit: usize,
        /// Only the bound from the top homology of the whole complex.
        #[arg(long)]
        lower_bound: bool,
    },
    /// Collapsibility number, d-collapse search and witness checking.
    Collapse {
        #[command(subcommand)]
        action: CollapseAction,
    },
    /// Rainbow number f_G(n).
    Fnum {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        #[arg(value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
    /// Compare C(I_n(G)) with ceil((D+1)/2)(n-1) on random max-degree-3
    /// graphs. Observations only; no verdicts.
    Explore {
        #[arg(long, default_value_t = 20)]
        count: u64,
        #[arg(long, default_value_t = 8)]
        vertices: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    Cycle {
        m: usize,
    },
    Path {
        m: usize,
    },
    Complete {
        m: usize,
    },
    /// Part sizes, comma separated.
    Multipartite {
        #[arg(value_delimiter = ',')]
        parts: Vec<usize>,
    },
    Circulant {
        m: usize,
        #[arg(value_delimiter = ',')]
        distances: Vec<usize>,
    },
    /// Circulant power of a cycle of length (k/2+1)n.
    Extremal {
        k: usize,
        n: usize,
    },
    Petersen {
        m: usize,
        j: usize,
    },
    Dodecahedral,
    /// Random graph with bounded maximum degree (uses --seed).
    RandomDegree {
        m: usize,
        max_degree: usize,
    },
    /// Random chordal graph (uses --seed).
    RandomChordal {
        m: usize,
    },
    /// Disjoint union of edge-list files.
    Union {
        files: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CollapseAction {
    /// Exact C(X), or a bracket with the source of each end.
    Number {
        #[command(flatten)]
        src: Source,
    },
    /// Search for a d-collapse to the void complex.
    Search {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        d: usize,
    },
    /// Re-check a witness file.
    Verify {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        witness: PathBuf,
        /// Required when the witness file is a bare list of steps.
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Direct,
    DualNerve,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Args)]
struct Source {
    /// Edge-list file; the complex is I_n(G).
    #[arg(
        long,
        conflicts_with = "complex",
        required_unless_present = "complex",
        requires = "n"
    )]
    graph: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Complex file.
    #[arg(long)]
    complex: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Complex, Error> {
        match (&self.graph, &self.complex) {
            (Some(g), _) => Complex::independence_complex(&read_graph(g)?, self.n.unwrap_or(1)),
            (None, Some(c)) => parse_complex(&fs::read_to_string(c)?),
            (None, None) => Err(Error::InvalidParameter("need --graph or --complex".into())),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WitnessFile {
    /// Output of `collapse search --format json`.
    Search {
        witness: CollapseSequence,
    },
    Sequence(CollapseSequence),
    Steps(Vec<CollapseStep>),
}

fn read_graph(p: &Path) -> Result<Graph, Error> {
    parse_edge_list(&fs::read_to_string(p)?)
}

struct Output {
    json: Value,
    text: String,
    /// Exit code 1 when false.
    ok: bool,
}

impl Output {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            ok: true,
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let config = CollapseConfig {
        budget: cli.budget,
        ..CollapseConfig::default()
    };
    match &cli.cmd {
        Cmd::Gen { family } => {
            let g = generate(family, cli.seed)?;
            let json = json!({"vertices": g.vertex_count(), "edges": g.edges()});
            Ok(Output::ok(json, write_edge_list(&g)))
        }
        Cmd::Complex { src, facets } => {
            let x = src.load()?;
            let json = json!({
                "ground": x.ground(),
                "void": x.is_void(),
                "dimension": x.dimension(),
                "missing_faces": x.missing_faces(),
                "facets": x.facets(),
            });
            Ok(Output::ok(json, write_complex(&x, *facets)))
        }
        Cmd::Betti {
            src,
            method,
            degree,
        } => {
            let x = src.load()?;
            if let Some(deg) = degree {
                let b = betti_in_degree(&x, *deg, cli.limit_faces)?;
                return Ok(Output::ok(
                    json!({"degree": deg, "betti": b}),
                    format!("b{deg} = {b}\n"),
                ));
            }
            let b = match method {
                Method::Auto => reduced_betti_auto(&x, cli.limit_faces)?,
                Method::Direct => reduced_betti_with_limit(&x, cli.limit_faces)?,
                Method::DualNerve => betti_via_dual_nerve_complex(&x)?,
            };
            let json = serde_json::to_value(&b).expect("serializable");
            Ok(Output::ok(json, format!("{b}\n")))
        }
        Cmd::Leray {
            src,
            vertex_limit,
            lower_bound,
        } => {
            let x = src.load()?;
            let (l, exact) = if *lower_bound {
                (leray_lower_bound(&x, None)?, false)
            } else {
                (leray_number(&x, *vertex_limit)?, true)
            };
            let text = if exact {
                format!("L = {l}\n")
            } else {
                format!("L >= {l}\n")
            };
            Ok(Output::ok(json!({"leray": l, "exact": exact}), text))
        }
        Cmd::Collapse { action } => collapse(action, &config),
        Cmd::Fnum { graph, n, cap } => {
            let g = read_graph(graph)?;
            let r = f_exact(&g, *n, *cap)?;
            let text = format!(
                "f = {} ({:?}), rainbow-free family of size {}\n",
                r.f,
                r.certificate,
                r.witness_family.len()
            );
            let json = json!({
                "f": r.f,
                "witness_family": r.witness_family,
                "certificate": r.certificate,
            });
            Ok(Output::ok(json, text))
        }
        Cmd::VerifyPaper { profile } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let criteria = verify_paper(profile);
            let mut text = String::new();
            for c in &criteria {
                text += &format!(
                    "[{}] {} {}: {} pass, {} fail, {} inconclusive ({:.0} ms)\n",
                    c.verdict(),
                    c.id,
                    c.title,
                    c.count(Verdict::Pass),
                    c.count(Verdict::Fail),
                    c.count(Verdict::Inconclusive),
                    c.runtime_ms
                );
                for r in c.reports.iter().filter(|r| r.verdict != Verdict::Pass) {
                    text += &format!(
                        "    {} {} on {}: claimed {}, computed {}\n",
                        r.verdict, r.name, r.instance.description, r.claimed, r.computed
                    );
                }
            }
            let ok = criteria.iter().all(|c| c.verdict() != Verdict::Fail);
            let json = json!(criteria
                .iter()
                .map(|c| json!({"criterion": c, "verdict": c.verdict()}))
                .collect::<Vec<_>>());
            Ok(Output { json, text, ok })
        }
        Cmd::Explore { count, vertices, n } => explore(cli.seed, *count, *vertices, *n, &config),
    }
}

fn generate(family: &Family, seed: u64) -> Result<Graph, Error> {
    match family {
        Family::Cycle { m } => graphs::cycle(*m),
        Family::Path { m } => graphs::path(*m),
        Family::Complete { m } => graphs::complete(*m),
        Family::Multipartite { parts } => graphs::complete_multipartite(parts),
        Family::Circulant { m, distances } => graphs::circulant(*m, distances),
        Family::Extremal { k, n } => graphs::extremal_circulant(*k, *n),
        Family::Petersen { m, j } => graphs::generalized_petersen(*m, *j),
        Family::Dodecahedral => Ok(graphs::dodecahedral()),
        Family::RandomDegree { m, max_degree } => graphs::random_max_degree(*m, *max_degree, seed),
        Family::RandomChordal { m } => graphs::random_chordal(*m, seed),
        Family::Union { files } => {
            let parts = files
                .iter()
                .map(|f| read_graph(f))
                .collect::<Result<Vec<_>, _>>()?;
            graphs::disjoint_union(&parts)
        }
    }
}

fn collapse(action: &CollapseAction, config: &CollapseConfig) -> Result<Output, Error> {
    match action {
        CollapseAction::Number { src } => {
            let x = src.load()?;
            let r = collapsibility_number(&x, config);
            let text = match r.exact() {
                Some(c) => format!("C = {c}\n"),
                None => format!(
                    "C in [{}, {}] ({:?}, {:?})\n",
                    r.lo, r.hi, r.lo_source, r.hi_source
                ),
            };
            Ok(Output::ok(
                serde_json::to_value(&r).expect("serializable"),
                text,
            ))
        }
        CollapseAction::Search { src, d } => {
            let x = src.load()?;
            let (json, text) = match is_d_collapsible(&x, *d, config.budget) {
                CollapseOutcome::Witness(w) => (
                    json!({"outcome": "witness", "witness": w}),
                    format!("{}-collapsible in {} steps\n", d, w.steps.len()),
                ),
                CollapseOutcome::Refuted { nodes } => (
                    json!({"outcome": "refuted", "nodes": nodes}),
                    format!("not {d}-collapsible ({nodes} states explored)\n"),
                ),
                CollapseOutcome::BudgetExhausted { nodes } => (
                    json!({"outcome": "budget_exhausted", "nodes": nodes}),
                    format!("undecided: budget exhausted after {nodes} states\n"),
                ),
            };
            Ok(Output::ok(json, text))
        }
        CollapseAction::Verify { src, witness, d } => {
            let x = src.load()?;
            let text = fs::read_to_string(witness)?;
            let parsed: WitnessFile = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                msg: e.to_string(),
            })?;
            let seq = match parsed {
                WitnessFile::Search { witness: s } | WitnessFile::Sequence(s) => CollapseSequence {
                    d: d.unwrap_or(s.d),
                    steps: s.steps,
                },
                WitnessFile::Steps(steps) => CollapseSequence {
                    d: d.ok_or_else(|| {
                        Error::InvalidParameter("a bare step list needs --d".into())
                    })?,
                    steps,
                },
            };
            Ok(match verify_sequence(&x, &seq) {
                SequenceCheck::Valid => Output::ok(
                    json!({"valid": true, "d": seq.d, "steps": seq.steps.len()}),
                    format!("valid {}-collapse in {} steps\n", seq.d, seq.steps.len()),
                ),
                SequenceCheck::Invalid { step, reason } => Output {
                    json: json!({"valid": false, "step": step, "reason": reason}),
                    text: format!("invalid at step {step}: {reason}\n"),
                    ok: false,
                },
            })
        }
    }
}

fn explore(
    seed: u64,
    count: u64,
    vertices: usize,
    n: usize,
    config: &CollapseConfig,
) -> Result<Output, Error> {
    let mut rows = Vec::new();
    let mut text = String::new();
    for s in seed..seed + count {
        let g = graphs::random_max_degree(vertices, 3, s)?;
        let delta = g.max_degree();
        let guess = delta.div_ceil(2).max(1) * n.saturating_sub(1);
        let r = collapsibility_number(&Complex::independence_complex(&g, n)?, config);
        let relation = if r.lo > guess {
            "above"
        } else if r.hi <= guess {
            "at most"
        } else {
            "undecided"
        };
        text += &format!(
            "seed {s}: max degree {delta}, C in [{}, {}], ceil((D+1)/2)(n-1) = {guess}: {relation}\n",
            r.lo, r.hi
        );
        rows.push(json!({
            "seed": s, "max_degree": delta, "lo": r.lo, "hi": r.hi,
            "conjectured": guess, "relation": relation,
        }));
    }
    Ok(Output::ok(Value::Array(rows), text))
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::InvalidParameter(_)
        | Error::VertexOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::TooManyVertices { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&out.json).expect("serializable") + "\n"
                }
                Format::Text => out.text,
            };
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            match cli.format {
                Format::Json => eprintln!("{}", json!({"error": e.to_string()})),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(exit_code_for(&e))
        }
    }
}
