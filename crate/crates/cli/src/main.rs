mod dot;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylbrick::quiverrep::{bricks_of_permutation, ThinRep};
use weylbrick::sortable::{coxeter_element, Orientation, OrientationSpec};
use weylbrick::typea::{
    arc_diagram, avoids_patterns, bruhat_classical_inversions, classical_inversions,
    count_forest_like, defining_quiver, inversion_graph, is_forest, join_irreducible_w_e,
    perm_to_weyl, Permutation,
};
use weylbrick::verify::{self, Suite, VerifyConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use weylbrick::{BinvMethod, DynkinDiagram, Root, RootSystem, WeylElement, Word, DEFAULT_CAP};

/// Bruhat inversions, root sequences and Jordan-Hölder checks for simply-laced
/// Weyl groups.
#[derive(Parser)]
#[command(name = "weylbrick", version, about)]
struct Cli {
    #[command(flatten)]
    input: Input,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Diagram preset: A1..A8, D4..D8, E6, E7, E8.
    #[arg(long = "type", global = true, value_name = "PRESET")]
    diagram: Option<String>,
    /// Custom diagram as `a-b` edges on vertices 0..n, e.g. `0-1,1-2,1-3`.
    #[arg(long, global = true, value_name = "EDGES", conflicts_with = "diagram")]
    edges: Option<String>,
    /// Comma-separated vertex labels, e.g. `1,2,3,1,2`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    word: Option<String>,
    /// Permutation in one-line notation: `42153` or `4,2,1,5,3`.
    #[arg(
        long = "one-line",
        global = true,
        value_name = "PERM",
        conflicts_with = "word"
    )]
    one_line: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Upper bound on enumerated elements, words or permutations.
    #[arg(long, global = true, env = "WEYLBRICK_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled verification.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    #[value(alias = "definition")]
    Def,
    Deletion,
    Sum,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots.
    Roots,
    /// Inversion set of the element.
    Inv,
    /// Root sequence of a reduced word, with Papi's check.
    Rootseq,
    /// Bruhat inversions.
    Binv {
        #[arg(long, value_enum, default_value_t = MethodArg::Deletion)]
        method: MethodArg,
    },
    /// Jordan-Hölder verdict: #Binv against #supp.
    Jhp,
    /// Weak-order interval below the element with root labels.
    Hasse,
    /// Rank sizes of the Bruhat interval [e, w].
    Poincare,
    /// Type-A tools on a permutation given by --one-line.
    Perm {
        #[command(subcommand)]
        action: PermAction,
    },
    /// Number of forest-like permutations of n letters.
    CountForest {
        #[arg(long)]
        n: usize,
    },
    /// c-sortable elements for a quiver orientation.
    Sortable {
        /// Orientation JSON, inline or as a file path. Defaults to arrows
        /// from larger to smaller vertex.
        #[arg(long, global = true)]
        orientation: Option<String>,
        #[command(subcommand)]
        action: SortAction,
    },
    /// Run acceptance suites.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Random elements per sampled group.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum PermAction {
    /// Classical inversions (i,j).
    Inv,
    /// Bruhat inversions (i,j).
    Binv,
    /// The Bruhat inversion graph.
    Graph,
    /// Whether the graph is a forest.
    Forest,
    /// Whether 4231 and 34|12 are avoided.
    Patterns,
    /// Arc diagrams and defining quivers.
    Arcs {
        #[arg(long, value_name = "I,J")]
        edge: Option<String>,
    },
    /// Thin bricks B_e for the Bruhat inversions.
    Simples {
        /// Also print composition-series pictures.
        #[arg(long)]
        tex: bool,
    },
    /// The unique-descent permutation w_e.
    We {
        #[arg(long, value_name = "I,J")]
        edge: String,
    },
}

#[derive(Subcommand)]
enum SortAction {
    /// Every c-sortable element with its sorting word.
    List,
    /// Number of c-sortable elements.
    Count,
    /// Simples of F_Q(w) for the element given by --word or --one-line.
    Simples,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Oracle,
    Figures,
    Counts,
    All,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<weylbrick::Error> for Failure {
    fn from(e: weylbrick::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.input.jobs {
        if jobs == 0 {
            return report(Err(usage("--jobs must be at least 1")));
        }
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    report(run(&cli))
}

fn report(outcome: Outcome) -> ExitCode {
    match outcome {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let input = &cli.input;
    match &cli.command {
        Command::Roots => roots(input),
        Command::Inv => inv(input),
        Command::Rootseq => rootseq(input),
        Command::Binv { method } => binv(input, *method),
        Command::Jhp => jhp(input),
        Command::Hasse => hasse(input),
        Command::Poincare => poincare(input),
        Command::Perm { action } => perm(input, action),
        Command::CountForest { n } => count_forest(input, *n),
        Command::Sortable {
            orientation,
            action,
        } => sortable(input, orientation.as_deref(), action),
        Command::Verify { suite, samples } => run_verify(input, *suite, *samples),
    }
}

fn to_json(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("values serialize")
}

fn reject_dot(input: &Input, what: &str) -> Result<(), Failure> {
    if input.format == Format::Dot {
        return Err(usage(format!("--format dot is not available for {what}")));
    }
    Ok(())
}

fn parse_edges(spec: &str) -> Result<DynkinDiagram, Failure> {
    let mut pairs = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = part
            .split_once('-')
            .ok_or_else(|| usage(format!("--edges: `{part}` is not of the form a-b")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("--edges: `{s}` is not a vertex id")))
        };
        pairs.push((parse(a)?, parse(b)?));
    }
    let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
    Ok(DynkinDiagram::from_edges(n, pairs)?)
}

fn permutation(input: &Input) -> Result<Option<Permutation>, Failure> {
    input
        .one_line
        .as_deref()
        .map(|s| s.parse::<Permutation>().map_err(Failure::from))
        .transpose()
}

fn root_system(input: &Input) -> Result<RootSystem, Failure> {
    if let Some(edges) = &input.edges {
        return Ok(RootSystem::new(parse_edges(edges)?));
    }
    if let Some(name) = &input.diagram {
        return Ok(RootSystem::preset(name)?);
    }
    if let Some(p) = permutation(input)? {
        return Ok(p.root_system()?);
    }
    Err(usage("a diagram is required: pass --type or --edges"))
}

fn parse_labels(s: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    let bad = |t: &str| usage(format!("--word: `{t}` is not a vertex label"));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad(t)))
            .collect()
    } else if s.chars().all(|c| c.is_ascii_digit()) {
        Ok(s.chars().map(|c| i64::from(c as u8 - b'0')).collect())
    } else {
        Err(bad(s))
    }
}

/// The element named by --word or --one-line, with the word it came from
/// when one was given.
fn element(input: &Input, rs: &RootSystem) -> Result<(WeylElement, Option<Word>), Failure> {
    if let Some(word) = &input.word {
        let word = rs.word(&parse_labels(word)?)?;
        return Ok((rs.evaluate(&word)?, Some(word)));
    }
    if let Some(p) = permutation(input)? {
        return Ok((perm_to_weyl(rs, &p)?, None));
    }
    Err(usage("an element is required: pass --word or --one-line"))
}

fn reduced_word(rs: &RootSystem, w: &WeylElement, given: Option<Word>) -> Result<Word, Failure> {
    match given {
        Some(word) if rs.is_reduced(&word)? => Ok(word),
        _ => Ok(rs.canonical_reduced_word(w)),
    }
}

fn root_list<'a>(rs: &RootSystem, roots: impl IntoIterator<Item = &'a Root>) -> Vec<String> {
    roots.into_iter().map(|r| rs.format_root(r)).collect()
}

fn label_list(rs: &RootSystem, vertices: &BTreeSet<usize>) -> Vec<usize> {
    vertices.iter().map(|&v| rs.diagram().label(v)).collect()
}

fn roots(input: &Input) -> Outcome {
    reject_dot(input, "roots")?;
    let rs = root_system(input)?;
    let list = root_list(&rs, rs.positive_roots());
    Ok(match input.format {
        Format::Json => to_json(json!({
            "diagram": rs.diagram().to_string(),
            "count": list.len(),
            "positive_roots": list,
        })),
        _ => list.join("\n"),
    })
}

fn inv(input: &Input) -> Outcome {
    reject_dot(input, "inv")?;
    let rs = root_system(input)?;
    let (w, given) = element(input, &rs)?;
    let word = reduced_word(&rs, &w, given)?;
    let inv = root_list(&rs, &rs.inversion_set(&w));
    Ok(match input.format {
        Format::Json => to_json(json!({
            "word": rs.word_labels(&word),
            "length": inv.len(),
            "inv": inv,
        })),
        _ => inv.join("\n"),
    })
}

fn rootseq(input: &Input) -> Outcome {
    reject_dot(input, "rootseq")?;
    let rs = root_system(input)?;
    let word = match (&input.word, permutation(input)?) {
        (Some(w), _) => rs.word(&parse_labels(w)?)?,
        (None, Some(p)) => rs.canonical_reduced_word(&perm_to_weyl(&rs, &p)?),
        (None, None) => return Err(usage("an element is required: pass --word or --one-line")),
    };
    let seq = rs.root_sequence(&word)?;
    let papi = rs.papi_check(&seq);
    let list = root_list(&rs, seq.roots());
    Ok(match input.format {
        Format::Json => to_json(json!({
            "word": rs.word_labels(&word),
            "root_sequence": list,
            "papi": papi.is_ok(),
        })),
        _ => list.join("\n"),
    })
}

fn binv(input: &Input, method: MethodArg) -> Outcome {
    reject_dot(input, "binv")?;
    let rs = root_system(input)?;
    let (w, given) = element(input, &rs)?;
    let word = reduced_word(&rs, &w, given)?;
    let def = rs.bruhat_inversions_def(&w);
    let deletion = rs.bruhat_inversions_deletion(&word)?;
    let sum = rs.bruhat_inversions(&w, BinvMethod::Sum);
    let chosen = match method {
        MethodArg::Def => def.clone(),
        MethodArg::Deletion | MethodArg::All => deletion.clone(),
        MethodArg::Sum => sum.clone(),
    };
    let supp = rs.support(&w);
    let report = rs.jhp_check(&w)?;
    let mut out = json!({
        "word": rs.word_labels(&word),
        "inv": root_list(&rs, &rs.inversion_set(&w)),
        "binv": root_list(&rs, &chosen),
        "supp": label_list(&rs, &supp),
        "jhp": report.verdict,
        "counts": {"binv": chosen.len(), "supp": supp.len()},
    });
    let agree = def == deletion && deletion == sum;
    if method == MethodArg::All {
        out["methods"] = json!({
            "definition": root_list(&rs, &def),
            "deletion": root_list(&rs, &deletion),
            "sum": root_list(&rs, &sum),
        });
        out["agree"] = json!(agree);
    }
    let text = match input.format {
        Format::Json => to_json(out),
        _ => {
            let mut t = root_list(&rs, &chosen).join("\n");
            if method == MethodArg::All {
                let _ = write!(t, "\nmethods agree: {agree}");
            }
            t
        }
    };
    if !agree && method == MethodArg::All {
        println!("{text}");
        return Err(Failure::Domain(
            "definition, deletion and sum methods disagree".into(),
        ));
    }
    Ok(text)
}

fn jhp(input: &Input) -> Outcome {
    reject_dot(input, "jhp")?;
    let rs = root_system(input)?;
    let (w, _) = element(input, &rs)?;
    let r = rs.jhp_check(&w)?;
    Ok(match input.format {
        Format::Json => to_json(json!({
            "binv": root_list(&rs, &r.binv),
            "supp": label_list(&rs, &r.supp),
            "counts": {"binv": r.binv.len(), "supp": r.supp.len()},
            "linearly_independent": r.linearly_independent,
            "jhp": r.verdict,
        })),
        _ => format!(
            "JHP {}: #Binv = {}, #supp = {}",
            if r.verdict { "holds" } else { "fails" },
            r.binv.len(),
            r.supp.len()
        ),
    })
}

fn hasse(input: &Input) -> Outcome {
    let rs = root_system(input)?;
    let (w, _) = element(input, &rs)?;
    let h = rs.weak_order_hasse_interval(&w, input.cap)?;
    Ok(match input.format {
        Format::Dot => dot::hasse(&rs, &h),
        Format::Json => {
            let vertices: Vec<Value> = h
                .words
                .iter()
                .enumerate()
                .map(|(k, word)| json!({"id": k, "word": rs.word_labels(word)}))
                .collect();
            let arrows: Vec<Value> = h
                .arrows
                .iter()
                .map(|a| {
                    json!({
                        "from": a.from,
                        "to": a.to,
                        "letter": rs.diagram().label(a.letter),
                        "label": rs.format_root(&a.label),
                    })
                })
                .collect();
            to_json(json!({
                "top": h.top,
                "bottom": h.bottom,
                "vertices": vertices,
                "arrows": arrows,
                "maximal_paths": h.maximal_path_count().to_string(),
            }))
        }
        Format::Text => {
            let mut t = String::new();
            for a in &h.arrows {
                let _ = writeln!(
                    t,
                    "{} -> {} [{}]",
                    dot::word_name(&rs, &h.words[a.from]),
                    dot::word_name(&rs, &h.words[a.to]),
                    rs.format_root(&a.label)
                );
            }
            let _ = write!(
                t,
                "{} elements, {} arrows, {} maximal chains",
                h.vertices.len(),
                h.arrows.len(),
                h.maximal_path_count()
            );
            t
        }
    })
}

fn poincare(input: &Input) -> Outcome {
    reject_dot(input, "poincare")?;
    let rs = root_system(input)?;
    let (w, _) = element(input, &rs)?;
    let a = rs.bruhat_interval_poincare(&w, input.cap)?;
    Ok(match input.format {
        Format::Json => to_json(json!({
            "length": a.len() - 1,
            "coefficients": a,
            "supp": rs.support(&w).len(),
            "binv": rs.bruhat_inversions_def(&w).len(),
        })),
        _ => a
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    })
}

fn parse_edge(s: &str) -> Result<(usize, usize), Failure> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = trimmed.split(',').map(str::trim).collect();
    let bad = || usage(format!("--edge: `{s}` is not of the form i,j"));
    match parts.as_slice() {
        [a, b] => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

fn pair_list(pairs: &BTreeSet<(usize, usize)>) -> Vec<[usize; 2]> {
    pairs.iter().map(|&(i, j)| [i, j]).collect()
}

fn pair_text(pairs: &BTreeSet<(usize, usize)>) -> String {
    pairs
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn perm(input: &Input, action: &PermAction) -> Outcome {
    let p = permutation(input)?.ok_or_else(|| usage("perm needs --one-line"))?;
    if input.diagram.is_some() || input.edges.is_some() {
        perm_to_weyl(&root_system(input)?, &p)?;
    }
    let dot_ok = matches!(action, PermAction::Graph | PermAction::Arcs { .. });
    if !dot_ok {
        reject_dot(input, "this perm action")?;
    }
    let json = input.format == Format::Json;
    Ok(match action {
        PermAction::Inv | PermAction::Binv => {
            let pairs = if matches!(action, PermAction::Inv) {
                classical_inversions(&p)
            } else {
                bruhat_classical_inversions(&p)
            };
            if json {
                to_json(json!({"permutation": p.to_string(), "pairs": pair_list(&pairs)}))
            } else {
                pair_text(&pairs)
            }
        }
        PermAction::Graph => {
            let g = inversion_graph(&p);
            match input.format {
                Format::Dot => dot::inversion_graph(&g),
                Format::Json => to_json(json!({
                    "permutation": p.to_string(),
                    "dots": g.dots,
                    "edges": pair_list(&g.edges),
                    "forest": is_forest(&g),
                })),
                Format::Text => format!("{} dots, edges {}", g.size(), pair_text(&g.edges)),
            }
        }
        PermAction::Forest | PermAction::Patterns => {
            let (key, value) = if matches!(action, PermAction::Forest) {
                ("forest", is_forest(&inversion_graph(&p)))
            } else {
                ("avoids_patterns", avoids_patterns(&p))
            };
            if json {
                to_json(json!({"permutation": p.to_string(), key: value}))
            } else {
                value.to_string()
            }
        }
        PermAction::Arcs { edge } => {
            let edges: Vec<(usize, usize)> = match edge {
                Some(e) => vec![parse_edge(e)?],
                None => bruhat_classical_inversions(&p).into_iter().collect(),
            };
            let mut arcs = Vec::new();
            for e in edges {
                arcs.push(arc_diagram(&p, e)?);
            }
            let quivers: Vec<_> = arcs.iter().map(defining_quiver).collect();
            match input.format {
                Format::Dot => dot::quivers(&quivers),
                Format::Json => serde_json::to_string_pretty(&quivers).expect("quivers serialize"),
                Format::Text => {
                    let mut t = String::new();
                    for (arc, q) in arcs.iter().zip(&quivers) {
                        let passes: Vec<String> = arc
                            .passes
                            .iter()
                            .map(|(k, side)| format!("{k}:{side:?}").to_lowercase())
                            .collect();
                        let arrows: Vec<String> =
                            q.arrows.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                        let _ = writeln!(
                            t,
                            "({},{}) passes [{}] vertices {:?} arrows [{}]",
                            q.edge.0,
                            q.edge.1,
                            passes.join(" "),
                            q.vertices,
                            arrows.join(" ")
                        );
                    }
                    t
                }
            }
        }
        PermAction::Simples { tex } => {
            let bricks = bricks_of_permutation(&p)?;
            let reps: Vec<&ThinRep> = bricks.iter().map(|(_, b)| b).collect();
            let mut t = if json {
                serde_json::to_string_pretty(&reps).expect("reps serialize")
            } else {
                bricks
                    .iter()
                    .map(|((i, j), b)| {
                        let arrows: Vec<String> = b
                            .arrows()
                            .iter()
                            .map(|(a, c)| format!("{a}->{c}"))
                            .collect();
                        format!(
                            "({i},{j}) support {:?} arrows [{}]",
                            b.support(),
                            arrows.join(" ")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            if *tex {
                for ((i, j), b) in &bricks {
                    let _ = write!(t, "\n% ({i},{j})\n${}$", b.to_tex());
                }
            }
            t
        }
        PermAction::We { edge } => {
            let e = parse_edge(edge)?;
            let we = join_irreducible_w_e(&p, e)?;
            if json {
                to_json(json!({
                    "permutation": p.to_string(),
                    "edge": [e.0, e.1],
                    "w_e": we.to_string(),
                    "descents": we.descent_count(),
                }))
            } else {
                we.to_string()
            }
        }
    })
}

fn count_forest(input: &Input, n: usize) -> Outcome {
    reject_dot(input, "count-forest")?;
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let count = count_forest_like(n, input.cap)?;
    Ok(match input.format {
        Format::Json => to_json(json!({"n": n, "count": count})),
        _ => count.to_string(),
    })
}

fn orientation(input: &Input, spec: Option<&str>) -> Result<Orientation, Failure> {
    match spec {
        Some(s) => {
            let text = if s.trim_start().starts_with('{') {
                s.to_string()
            } else {
                std::fs::read_to_string(s)
                    .map_err(|e| usage(format!("--orientation: cannot read `{s}`: {e}")))?
            };
            let spec: OrientationSpec =
                serde_json::from_str(&text).map_err(|e| usage(format!("--orientation: {e}")))?;
            Ok(Orientation::from_spec(&spec)?)
        }
        None => Ok(Orientation::descending(
            root_system(input)?.diagram().clone(),
        )),
    }
}

fn sortable(input: &Input, spec: Option<&str>, action: &SortAction) -> Outcome {
    reject_dot(input, "sortable")?;
    let o = orientation(input, spec)?;
    let rs = RootSystem::new(o.diagram().clone());
    let c = coxeter_element(&o);
    let json = input.format == Format::Json;
    Ok(match action {
        SortAction::List | SortAction::Count => {
            let elements = rs.sortable_elements(&o, input.cap)?;
            if matches!(action, SortAction::Count) {
                if json {
                    to_json(json!({"coxeter": rs.word_labels(&c), "count": elements.len()}))
                } else {
                    elements.len().to_string()
                }
            } else {
                let words: Vec<Vec<usize>> = elements
                    .iter()
                    .map(|w| {
                        let blocks = rs.c_sorting_word(w, &c).expect("filtered as sortable");
                        rs.word_labels(&blocks.word())
                    })
                    .collect();
                if json {
                    to_json(json!({"coxeter": rs.word_labels(&c), "elements": words}))
                } else {
                    words
                        .iter()
                        .map(|w| {
                            if w.is_empty() {
                                "e".to_string()
                            } else {
                                w.iter()
                                    .map(|l| l.to_string())
                                    .collect::<Vec<_>>()
                                    .join(",")
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("\n")
                }
            }
        }
        SortAction::Simples => {
            let (w, _) = element(input, &rs)?;
            let simples = rs.path_algebra_simples(&w, &o)?;
            let jhp = rs.jhp_check(&w)?;
            if json {
                to_json(json!({
                    "coxeter": rs.word_labels(&c),
                    "simples": root_list(&rs, &simples),
                    "indecomposables": root_list(&rs, &rs.torsion_free_indecomposables(&w, &o)?),
                    "jhp": jhp.verdict,
                }))
            } else {
                root_list(&rs, &simples).join("\n")
            }
        }
    })
}

fn run_verify(input: &Input, suite: SuiteArg, samples: usize) -> Outcome {
    reject_dot(input, "verify")?;
    let cfg = VerifyConfig {
        seed: input.seed,
        samples,
    };
    let outcomes = match suite {
        SuiteArg::Oracle => verify::run_suite(Suite::Oracle, &cfg),
        SuiteArg::Figures => verify::run_suite(Suite::Figures, &cfg),
        SuiteArg::Counts => verify::run_suite(Suite::Counts, &cfg),
        SuiteArg::All => verify::run_all(&cfg),
    };
    let text = match input.format {
        Format::Json => serde_json::to_string_pretty(&outcomes).expect("outcomes serialize"),
        _ => outcomes
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
    };
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    if failed > 0 {
        println!("{text}");
        return Err(Failure::Domain(format!("{failed} criteria failed")));
    }
    Ok(text)
}
