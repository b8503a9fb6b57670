use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use unigraphs::classify::{self, Class, Route, Verdict, Witness};
use unigraphs::enumerate::all_graphs;
use unigraphs::realize::{enumerate_realizations, realization_count, realize_one, realize_pair};
use unigraphs::search::{self, Mode};
use unigraphs::split::inverse;
use unigraphs::{decompose, ks_partitions, rao_contains, recompose, CrossDegreePair, DegreeSequence, Error, Graph};

const CHECKPOINT_DIR_VAR: &str = "UNIGRAPHS_CHECKPOINT_DIR";

#[derive(Parser)]
#[command(name = "unigraphs", version, about = "Unigraphs, Tyshkevich decomposition and the hereditary closure of unigraphs")]
struct Cli {
    /// Print plain text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership of a graph (graph6) or of the realizations of a sequence.
    Classify {
        #[arg(long, value_enum, default_value_t = ClassArg::Hcu)]
        class: ClassArg,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
        input: String,
    },
    /// Tyshkevich decomposition of a graph, or of a sequence by its terms.
    Decompose { input: String },
    /// Rao containment queries.
    Rao {
        #[command(subcommand)]
        op: RaoOp,
    },
    /// Realize a sequence or a cross-degree pair ("a,.. | b,..").
    Realize {
        #[arg(value_enum)]
        which: RealizeArg,
        input: String,
    },
    /// Search for minimal forbidden induced subgraphs level by level.
    Search {
        #[arg(value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 14)]
        cap: usize,
        /// Checkpoint file; defaults to <mode>.ckpt under $UNIGRAPHS_CHECKPOINT_DIR when set.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Exhaustive cross-checks on small graphs.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print one of the bundled lists.
    Constants {
        #[arg(value_enum)]
        which: ConstantArg,
    },
}

#[derive(Subcommand)]
enum RaoOp {
    /// Whether the first sequence Rao-contains the second.
    Contains { rho: String, pi: String },
    /// Whether a forbidden sequence is Rao-minimal.
    Minimal { sequence: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Unigraph,
    Hu,
    Hcu,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Auto,
    Structural,
    Sequence,
    Rao,
    Forbidden,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum RealizeArg {
    One,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Nonsplit,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Unigraph,
    Hu,
    Hcu,
    Decomposition,
    RaoMinimal,
    Artifact,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantArg {
    L1,
    L2,
    Star,
    F,
    Y,
}

enum Input {
    Graph(Graph),
    Sequence(DegreeSequence),
    Pair(CrossDegreePair),
}

struct Output {
    json: Value,
    plain: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.plain {
                println!("{}", out.plain.trim_end());
            } else {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize"));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapacityExceeded { .. } => 3,
                Error::Io(_) => 1,
                _ => 2,
            })
        }
    }
}

fn run(command: Command) -> unigraphs::Result<Output> {
    match command {
        Command::Classify { class, route, input } => classify_cmd(class, route, &input),
        Command::Decompose { input } => decompose_cmd(&input),
        Command::Rao { op } => rao_cmd(op),
        Command::Realize { which, input } => realize_cmd(which, &input),
        Command::Search { mode, cap, checkpoint, jobs } => search_cmd(mode, cap, checkpoint, jobs),
        Command::Verify { suite, max_n, jobs } => with_jobs(jobs, || verify_cmd(suite, max_n)),
        Command::Constants { which } => constants_cmd(which),
    }
}

fn parse_input(text: &str) -> unigraphs::Result<Input> {
    let t = text.trim();
    if t.contains('|') {
        return Ok(Input::Pair(t.parse()?));
    }
    if !t.is_empty() && t.chars().all(|c| c.is_ascii_digit() || matches!(c, ',' | ' ' | '(' | ')')) {
        return Ok(Input::Sequence(t.parse()?));
    }
    Ok(Input::Graph(Graph::from_graph6(t)?))
}

fn parse_sequence(text: &str) -> unigraphs::Result<DegreeSequence> {
    match parse_input(text)? {
        Input::Sequence(s) => Ok(s),
        _ => Err(Error::Parse(format!("expected a comma-separated sequence, got {text:?}"))),
    }
}

/// The graph to classify: the input graph, or one realization of the input sequence.
fn input_graph(text: &str) -> unigraphs::Result<Graph> {
    match parse_input(text)? {
        Input::Graph(g) => Ok(g),
        Input::Sequence(s) => realize_one(&s),
        Input::Pair(p) => Ok(realize_pair(&p)?.0),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> unigraphs::Result<T> + Send) -> unigraphs::Result<T> {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(f),
        None => f(),
    }
}

fn route_of(r: RouteArg) -> Route {
    match r {
        RouteArg::Auto => Route::Auto,
        RouteArg::Structural => Route::Structural,
        RouteArg::Sequence => Route::Sequence,
        RouteArg::Rao => Route::Rao,
        RouteArg::Forbidden => Route::Forbidden,
        RouteArg::Brute => Route::Brute,
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::None => Value::Null,
        Witness::Sequence(s) => json!({ "sequence": s.to_string() }),
        Witness::Subgraph { graph, vertices } => json!({ "subgraph": graph.to_graph6(), "vertices": vertices }),
        Witness::Families(tags) => {
            json!({ "families": tags.iter().map(|t| t.as_ref().map(|t| t.to_string())).collect::<Vec<_>>() })
        }
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::None => "none".into(),
        Witness::Sequence(s) => format!("sequence ({s})"),
        Witness::Subgraph { graph, vertices } => format!("subgraph {graph} on {vertices:?}"),
        Witness::Families(tags) => {
            let parts: Vec<String> =
                tags.iter().map(|t| t.as_ref().map_or("none".into(), |t| t.to_string())).collect();
            format!("families [{}]", parts.join(", "))
        }
    }
}

fn classify_cmd(class: ClassArg, route: RouteArg, input: &str) -> unigraphs::Result<Output> {
    let g = input_graph(input)?;
    let route = route_of(route);
    let v: Verdict = match class {
        ClassArg::Unigraph => classify::is_unigraph(&g, route)?,
        ClassArg::Hu => classify::is_hu(&g, route)?,
        ClassArg::Hcu => classify::is_hcu(&g, route)?,
    };
    let class_name = match v.class {
        Class::Unigraph => "unigraph",
        Class::Hu => "HU",
        Class::Hcu => "HCU",
    };
    Ok(Output {
        json: json!({
            "input": input.trim(),
            "graph6": g.to_graph6(),
            "class": class_name,
            "member": v.member,
            "route": v.route.to_string(),
            "witness": witness_json(&v.witness),
        }),
        plain: format!(
            "{class_name} member={} route={} witness={}",
            v.member,
            v.route,
            witness_text(&v.witness)
        ),
    })
}

fn decompose_cmd(input: &str) -> unigraphs::Result<Output> {
    match parse_input(input)? {
        Input::Graph(g) => {
            let dec = decompose(&g)?;
            let mut plain = String::new();
            let comps: Vec<Value> = dec
                .components
                .iter()
                .map(|c| {
                    let local = |mask: u64| -> Vec<usize> {
                        (0..c.graph.n()).filter(|&i| mask >> i & 1 == 1).map(|i| c.vertices[i]).collect()
                    };
                    let (clique, stable) = match c.partition {
                        Some(p) => (Some(local(p.clique)), Some(local(p.stable))),
                        None => (None, None),
                    };
                    plain.push_str(&format!(
                        "{} ({}) vertices={:?} clique={:?} stable={:?}\n",
                        c.graph,
                        c.graph.degree_sequence(),
                        c.vertices,
                        clique,
                        stable
                    ));
                    json!({
                        "graph6": c.graph.to_graph6(),
                        "sequence": c.graph.degree_sequence().to_string(),
                        "vertices": c.vertices,
                        "split": c.is_split(),
                        "clique": clique,
                        "stable": stable,
                    })
                })
                .collect();
            Ok(Output { json: json!({ "input": input.trim(), "components": comps }), plain })
        }
        Input::Sequence(s) => {
            let dec = s.decompose_by_degrees()?;
            let mut plain = String::new();
            let comps: Vec<Value> = dec
                .components
                .iter()
                .map(|c| {
                    let pair = c.pair.as_ref().map(|p| p.to_string());
                    plain.push_str(&format!("({}) pair={}\n", c.sequence, pair.as_deref().unwrap_or("none")));
                    json!({ "sequence": c.sequence.to_string(), "pair": pair })
                })
                .collect();
            Ok(Output { json: json!({ "input": input.trim(), "components": comps }), plain })
        }
        Input::Pair(_) => Err(Error::Parse("decompose takes a graph6 string or a sequence".into())),
    }
}

fn rao_cmd(op: RaoOp) -> unigraphs::Result<Output> {
    match op {
        RaoOp::Contains { rho, pi } => {
            let (rho, pi) = (parse_sequence(&rho)?, parse_sequence(&pi)?);
            let member = rao_contains(&rho, &pi)?;
            Ok(Output {
                json: json!({ "rho": rho.to_string(), "pi": pi.to_string(), "member": member }),
                plain: format!("member={member}"),
            })
        }
        RaoOp::Minimal { sequence } => {
            let s = parse_sequence(&sequence)?;
            let minimal = search::verify_rao_minimal(&s)?;
            Ok(Output {
                json: json!({ "sequence": s.to_string(), "rao_minimal": minimal }),
                plain: format!("rao_minimal={minimal}"),
            })
        }
    }
}

fn realize_cmd(which: RealizeArg, input: &str) -> unigraphs::Result<Output> {
    let parsed = parse_input(input)?;
    match (which, parsed) {
        (RealizeArg::One, Input::Sequence(s)) => {
            let g = realize_one(&s)?;
            Ok(Output {
                json: json!({ "input": s.to_string(), "graph6": g.to_graph6(), "edges": g.edges() }),
                plain: g.to_graph6(),
            })
        }
        (RealizeArg::One, Input::Pair(p)) => {
            let (g, part) = realize_pair(&p)?;
            Ok(Output {
                json: json!({
                    "input": p.to_string(),
                    "graph6": g.to_graph6(),
                    "edges": g.edges(),
                    "clique": part.clique_vertices(),
                    "stable": part.stable_vertices(),
                }),
                plain: g.to_graph6(),
            })
        }
        (RealizeArg::All, Input::Sequence(s)) => {
            let graphs = enumerate_realizations(&s)?;
            Ok(list_output(json!(s.to_string()), &graphs))
        }
        (RealizeArg::All, Input::Pair(p)) => {
            p.is_graphic().then_some(()).ok_or_else(|| Error::PairNotGraphic(p.to_string()))?;
            let mut graphs = Vec::new();
            for s in p.to_sequences() {
                for g in enumerate_realizations(&s)? {
                    if ks_partitions(&g).iter().any(|part| CrossDegreePair::of_graph(&g, part) == p) && !graphs.contains(&g) {
                        graphs.push(g);
                    }
                }
            }
            graphs.sort();
            Ok(list_output(json!(p.to_string()), &graphs))
        }
        (_, Input::Graph(_)) => Err(Error::Parse("realize takes a sequence or a cross-degree pair".into())),
    }
}

fn list_output(input: Value, graphs: &[Graph]) -> Output {
    let g6: Vec<String> = graphs.iter().map(Graph::to_graph6).collect();
    Output { json: json!({ "input": input, "count": g6.len(), "graphs": g6 }), plain: g6.join("\n") }
}

fn search_cmd(mode: ModeArg, cap: usize, checkpoint: Option<PathBuf>, jobs: Option<usize>) -> unigraphs::Result<Output> {
    let mode = match mode {
        ModeArg::Nonsplit => Mode::NonSplit,
        ModeArg::Split => Mode::Split,
    };
    let checkpoint =
        checkpoint.or_else(|| std::env::var_os(CHECKPOINT_DIR_VAR).map(|d| PathBuf::from(d).join(format!("{mode}.ckpt"))));
    let state = with_jobs(jobs, || search::run_search(mode, cap, checkpoint.as_deref()))?;
    let levels: Vec<Value> = state
        .selected
        .iter()
        .map(|(l, s)| json!({ "level": l, "selected": s.len(), "minimal": state.minimal[l].len() }))
        .collect();
    let extras: Vec<String> = state.extra_graphs().iter().map(Graph::to_graph6).collect();
    let minimal: Vec<String> = state.minimal_graphs().iter().map(Graph::to_graph6).collect();
    let mut plain = format!("mode={mode} n={} done={}\n", state.n, state.done);
    for (l, s) in &state.selected {
        plain.push_str(&format!("level {l}: selected {} minimal {}\n", s.len(), state.minimal[l].len()));
    }
    for g in &extras {
        plain.push_str(&format!("extra {g}\n"));
    }
    Ok(Output {
        json: json!({
            "mode": mode.to_string(),
            "n": state.n,
            "done": state.done,
            "checkpoint": checkpoint.map(|p| p.display().to_string()),
            "levels": levels,
            "minimal": minimal,
            "extras": extras,
        }),
        plain,
    })
}

/// Run `check` on every graph up to `max_n` vertices; a returned string is a disagreement.
fn over_graphs(max_n: usize, check: impl Fn(&Graph) -> unigraphs::Result<Option<String>> + Sync) -> unigraphs::Result<(usize, Vec<String>)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=max_n {
        let graphs = all_graphs(n)?;
        checked += graphs.len();
        let found: Vec<Option<String>> = graphs.par_iter().map(&check).collect::<unigraphs::Result<_>>()?;
        bad.extend(found.into_iter().flatten());
    }
    Ok((checked, bad))
}

fn verify_cmd(suite: Suite, max_n: Option<usize>) -> unigraphs::Result<Output> {
    let n = max_n.unwrap_or(7);
    let (name, checked, bad) = match suite {
        Suite::Unigraph => {
            let (c, b) = over_graphs(n, |g| {
                let structural = classify::is_unigraph(g, Route::Structural)?.member;
                let counted = realization_count(&g.degree_sequence())? == 1;
                Ok((structural != counted).then(|| g.to_graph6()))
            })?;
            ("unigraph", c, b)
        }
        Suite::Hu => {
            let (c, b) = over_graphs(n, |g| {
                let rao = classify::is_hu(g, Route::Rao)?.member;
                let forbidden = classify::is_hu(g, Route::Forbidden)?.member;
                Ok((rao != forbidden).then(|| g.to_graph6()))
            })?;
            ("hu", c, b)
        }
        Suite::Hcu => {
            let (c, b) = over_graphs(n, |g| {
                let s = classify::is_hcu(g, Route::Sequence)?.member;
                let r = classify::is_hcu(g, Route::Rao)?.member;
                let f = classify::is_hcu(g, Route::Forbidden)?.member;
                Ok((s != r || s != f).then(|| g.to_graph6()))
            })?;
            ("hcu", c, b)
        }
        Suite::Decomposition => {
            let (c, b) = over_graphs(n, |g| {
                let dec = decompose(g)?;
                let back = recompose(&dec)?;
                let co = decompose(&g.complement())?;
                let mut ok = back.is_isomorphic(g) && co.len() == dec.len();
                if let Some(p) = ks_partitions(g).first() {
                    ok &= decompose(&inverse(g, p)?)?.len() == dec.len();
                }
                Ok((!ok).then(|| g.to_graph6()))
            })?;
            ("decomposition", c, b)
        }
        Suite::RaoMinimal => {
            let mut bad = Vec::new();
            let all = classify::l2();
            for s in &all {
                if !search::verify_rao_minimal(s)? {
                    bad.push(s.to_string());
                }
            }
            ("rao-minimal", all.len(), bad)
        }
        Suite::Artifact => {
            let y = classify::y_graphs();
            let mut bad = Vec::new();
            for g in y {
                if !search::is_minimal_forbidden(g)? {
                    bad.push(g.to_graph6());
                }
            }
            ("artifact", y.len(), bad)
        }
    };
    let passed = bad.is_empty();
    Ok(Output {
        json: json!({ "suite": name, "max_n": n, "checked": checked, "disagreements": bad, "passed": passed }),
        plain: format!("{name}: checked {checked}, disagreements {}, passed={passed}", bad.len()),
    })
}

fn constants_cmd(which: ConstantArg) -> unigraphs::Result<Output> {
    let seqs = |v: Vec<DegreeSequence>| -> Vec<String> { v.iter().map(|s| s.to_string()).collect() };
    let graphs = |v: &[Graph]| -> Vec<String> { v.iter().map(Graph::to_graph6).collect() };
    Ok(match which {
        ConstantArg::L1 => {
            let l = seqs(classify::l1());
            Output { plain: l.join("\n"), json: json!({ "l1": l }) }
        }
        ConstantArg::L2 => {
            let (a, b) = (seqs(classify::l2_nonsplit()), seqs(classify::l2_split()));
            let plain = a.iter().map(|s| format!("nonsplit {s}")).chain(b.iter().map(|s| format!("split {s}"))).collect::<Vec<_>>();
            Output { plain: plain.join("\n"), json: json!({ "nonsplit": a, "split": b }) }
        }
        ConstantArg::Star => {
            let l: Vec<String> = classify::star_pairs().iter().map(|p| p.to_string()).collect();
            Output { plain: l.join("\n"), json: json!({ "pairs": l }) }
        }
        ConstantArg::F => {
            let l = graphs(&classify::derive_f());
            Output { plain: l.join("\n"), json: json!({ "count": l.len(), "graphs": l }) }
        }
        ConstantArg::Y => {
            let l = graphs(classify::y_graphs());
            Output { plain: l.join("\n"), json: json!({ "count": l.len(), "graphs": l }) }
        }
    })
}
