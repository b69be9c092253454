use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qalex::coloring::{
    cocycle_invariant, enumerate_colorings, find_cocycle, format_cocycle, parse_cocycle_table, verify_cocycle, Cocycle,
    InvariantMultiset, SearchOutcome,
};
use qalex::diagram::{parse_pd, LinkDiagram, Presentation};
use qalex::error::{DiagramError, ParseError};
use qalex::quandle::io::{parse_pair, parse_quandle_table};
use qalex::quandle::{verify_alexander_pair, verify_quandle_axioms, AlexanderPairTable, FiniteQuandle};
use qalex::ring::{
    compare_laurent, ideal_equal_finite, GroupRingElem, IdealGens, LaurentVerdict, MAX_DIM,
};
use qalex::twisted::{
    cocycle_pair, deficiency_bound, e0_multiset, multisets_differ, verify_theorem, verify_theorem_all, DerivativeContext, TheoremReport,
};

#[derive(Parser)]
#[command(name = "qalex", version, about = "Quandle colorings, cocycle invariants and twisted Alexander ideals")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest matrix dimension for minor expansion.
    #[arg(long, global = true, default_value_t = MAX_DIM)]
    max_dim: usize,
    /// Most candidates tried by searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify quandle axioms, Alexander pair identities, cocycle identities
    /// and diagram structure.
    Check {
        #[arg(long)]
        quandle: Option<PathBuf>,
        /// Pair file (needs --quandle).
        #[arg(long)]
        pair: Option<PathBuf>,
        /// Cocycle file (needs --quandle).
        #[arg(long)]
        cocycle: Option<PathBuf>,
        #[arg(long)]
        diagram: Option<PathBuf>,
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// List all colorings of a diagram.
    Colorings {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        quandle: PathBuf,
    },
    /// Cocycle invariant and E_0 ideal multisets, checked against each other.
    Invariant {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        quandle: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// Twisted Alexander matrix and its elementary ideals.
    Matrix {
        #[command(flatten)]
        input: MatrixInput,
        /// Elementary ideal indices to print.
        #[arg(long = "d")]
        d: Vec<i64>,
    },
    /// One elementary ideal, optionally compared with a given ideal.
    Ideal {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long = "d")]
        d: i64,
        /// Generators separated by `;`, e.g. "t^2 - t + 1".
        #[arg(long)]
        compare: Option<String>,
    },
    /// Find a 2-cocycle over Z_n, optionally matching an invariant.
    SearchCocycle {
        #[arg(long)]
        quandle: PathBuf,
        #[arg(long)]
        modulus: i64,
        #[arg(long, requires = "filter_multiset")]
        filter_diagram: Option<PathBuf>,
        /// Target invariant such as `e:6,u:24`.
        #[arg(long, requires = "filter_diagram")]
        filter_multiset: Option<String>,
        /// Write the cocycle here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare E_0 with the product of (Φ - 1) over components, per coloring.
    VerifyTheorem {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        quandle: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
        /// Arc colors separated by commas; all colorings when absent.
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Decide whether the E_0 multisets of two diagrams differ.
    Distinguish {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        quandle: PathBuf,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// Generators minus relators of a presentation.
    Deficiency {
        #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
        presentation: Option<PathBuf>,
        /// Uses the Wirtinger presentation.
        #[arg(long)]
        diagram: Option<PathBuf>,
    },
}

#[derive(Args)]
struct MatrixInput {
    #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
    presentation: Option<PathBuf>,
    /// Uses the Wirtinger presentation.
    #[arg(long)]
    diagram: Option<PathBuf>,
    #[arg(long)]
    quandle: PathBuf,
    /// Generator images separated by commas; constant 0 when absent.
    #[arg(long)]
    images: Option<String>,
    /// Pair file; (t, 1 - t) when neither this nor --cocycle is given.
    #[arg(long, conflicts_with = "cocycle")]
    pair: Option<PathBuf>,
    /// Use the pair (θ, 0) of a cocycle file.
    #[arg(long)]
    cocycle: Option<PathBuf>,
}

enum Failure {
    Parse(String),
    Semantic(String),
    Exhausted(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Semantic(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Exhausted(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Semantic(m) | Failure::Exhausted(m) => m,
        }
    }
}

type Outcome = Result<String, Failure>;

fn semantic(e: impl std::fmt::Display) -> Failure {
    Failure::Semantic(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parse_err(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Parse(format!("{}: {e}", path.display()))
}

fn load_quandle(path: &Path) -> Result<FiniteQuandle, Failure> {
    let table = parse_quandle_table(&read(path)?).map_err(|e| parse_err(path, e))?;
    FiniteQuandle::from_table(table).map_err(|e| Failure::Semantic(format!("{}: {e}", path.display())))
}

fn load_cocycle(path: &Path, q: &FiniteQuandle) -> Result<Cocycle, Failure> {
    let (g, phi) = parse_cocycle_table(&read(path)?, q).map_err(|e| parse_err(path, e))?;
    Cocycle::new(q, g, phi).map_err(|e| Failure::Semantic(format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<LinkDiagram, Failure> {
    parse_pd(&read(path)?).map_err(|e| match e {
        DiagramError::Parse(p) => parse_err(path, p),
        other => parse_err(path, other),
    })
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    Presentation::parse(&read(path)?).map_err(|e: ParseError| parse_err(path, e))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| w.parse().map_err(|_| Failure::Parse(format!("{what}: `{w}` is not an element index"))))
        .collect()
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json") + "\n",
    }
}

fn ideal_text(i: &IdealGens) -> String {
    let r = i.without_associates();
    if r.generators().is_empty() {
        "0".into()
    } else {
        r.generators().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn multiset_json(m: &InvariantMultiset) -> Value {
    Value::Array(
        m.entries()
            .iter()
            .map(|(t, k)| json!({ "value": m.format_tuple(t), "count": k }))
            .collect(),
    )
}

fn ideals_json(ms: &[(IdealGens, usize)]) -> Value {
    Value::Array(ms.iter().map(|(i, k)| json!({ "ideal": i.to_string(), "count": k })).collect())
}

fn ideals_text(ms: &[(IdealGens, usize)]) -> String {
    ms.iter().map(|(i, k)| format!("{i} x {k}\n")).collect()
}

fn cmd_check(
    format: Format,
    quandle: Option<PathBuf>,
    pair: Option<PathBuf>,
    cocycle: Option<PathBuf>,
    diagram: Option<PathBuf>,
    presentation: Option<PathBuf>,
) -> Outcome {
    if quandle.is_none() && (pair.is_some() || cocycle.is_some()) {
        return Err(Failure::Parse("--pair and --cocycle need --quandle".into()));
    }
    let mut results: Vec<(String, String, Vec<String>)> = vec![];
    let mut q = None;
    if let Some(path) = &quandle {
        let table = parse_quandle_table(&read(path)?).map_err(|e| parse_err(path, e))?;
        let v = verify_quandle_axioms(&table);
        if v.is_empty() {
            q = Some(FiniteQuandle::from_table(table).map_err(semantic)?);
        }
        results.push(("quandle".into(), path.display().to_string(), v.iter().map(ToString::to_string).collect()));
    }
    let need_q = |kind: &str| Failure::Semantic(format!("cannot check the {kind}: the quandle is invalid"));
    if let Some(path) = &pair {
        let q = q.as_ref().ok_or_else(|| need_q("pair"))?;
        let tables = parse_pair(&read(path)?, q).map_err(|e| parse_err(path, e))?;
        let v = match verify_alexander_pair(&tables) {
            Ok(v) => v.iter().map(ToString::to_string).collect(),
            Err(e) => vec![e.to_string()],
        };
        results.push(("pair".into(), path.display().to_string(), v));
    }
    if let Some(path) = &cocycle {
        let q = q.as_ref().ok_or_else(|| need_q("cocycle"))?;
        let (g, phi) = parse_cocycle_table(&read(path)?, q).map_err(|e| parse_err(path, e))?;
        let v = verify_cocycle(q, &g, &phi).iter().map(ToString::to_string).collect();
        results.push(("cocycle".into(), path.display().to_string(), v));
    }
    if let Some(path) = &diagram {
        load_diagram(path)?;
        results.push(("diagram".into(), path.display().to_string(), vec![]));
    }
    if let Some(path) = &presentation {
        load_presentation(path)?;
        results.push(("presentation".into(), path.display().to_string(), vec![]));
    }
    if results.is_empty() {
        return Err(Failure::Parse("nothing to check".into()));
    }
    let mut text = String::new();
    for (kind, path, v) in &results {
        if v.is_empty() {
            let _ = writeln!(text, "{kind} {path}: PASS");
        } else {
            let _ = writeln!(text, "{kind} {path}: FAIL ({} violations)", v.len());
            for line in v.iter().take(20) {
                let _ = writeln!(text, "  {line}");
            }
            if v.len() > 20 {
                let _ = writeln!(text, "  ... and {} more", v.len() - 20);
            }
        }
    }
    let value = Value::Array(
        results
            .iter()
            .map(|(k, p, v)| json!({ "kind": k, "path": p, "pass": v.is_empty(), "violations": v }))
            .collect(),
    );
    let out = render(format, text, value);
    if results.iter().all(|r| r.2.is_empty()) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Semantic("check failed".into()))
    }
}

fn cmd_colorings(format: Format, diagram: &Path, quandle: &Path) -> Outcome {
    let d = load_diagram(diagram)?;
    let q = load_quandle(quandle)?;
    let cs = enumerate_colorings(&d, &q);
    let mut text = format!("{} colorings\n", cs.len());
    for c in &cs {
        let _ = writeln!(text, "{}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    }
    Ok(render(format, text, json!({ "count": cs.len(), "colorings": cs })))
}

fn first_mismatch(reports: &[TheoremReport]) -> Option<&TheoremReport> {
    reports.iter().find(|r| !r.equal)
}

fn mismatch_message(r: &TheoremReport) -> String {
    format!(
        "mismatch at coloring {:?}: E_0 generated by [{}], product {}",
        r.coloring,
        r.lhs_generators.join(", "),
        r.rhs_generator
    )
}

fn cmd_invariant(format: Format, max_dim: usize, diagram: &Path, quandle: &Path, cocycle: &Path) -> Outcome {
    let d = load_diagram(diagram)?;
    let q = load_quandle(quandle)?;
    let theta = load_cocycle(cocycle, &q)?;
    let inv = cocycle_invariant(&d, &theta);
    let reports = verify_theorem_all(&d, &theta, max_dim).map_err(semantic)?;
    if let Some(r) = first_mismatch(&reports) {
        return Err(Failure::Semantic(mismatch_message(r)));
    }
    let ideals = e0_multiset(&d, &theta, max_dim).map_err(semantic)?;
    let text = format!(
        "cocycle invariant:\n{inv}E_0 ideals:\n{}correspondence: {n}/{n} colorings\n",
        ideals_text(&ideals),
        n = reports.len()
    );
    let value = json!({
        "colorings": reports.len(),
        "cocycle_invariant": multiset_json(&inv),
        "e0_ideals": ideals_json(&ideals),
        "correspondence": true,
    });
    Ok(render(format, text, value))
}

fn build_context(input: &MatrixInput) -> Result<DerivativeContext, Failure> {
    let q = load_quandle(&input.quandle)?;
    let p = match (&input.presentation, &input.diagram) {
        (Some(p), _) => load_presentation(p)?,
        (None, Some(d)) => Presentation::wirtinger(&load_diagram(d)?),
        (None, None) => unreachable!("clap requires one input"),
    };
    let images = match &input.images {
        Some(s) => parse_list(s, "--images")?,
        None => vec![0; p.n_gens()],
    };
    let pair = match (&input.pair, &input.cocycle) {
        (Some(path), _) => {
            let tables = parse_pair(&read(path)?, &q).map_err(|e| parse_err(path, e))?;
            AlexanderPairTable::new(tables).map_err(|e| Failure::Semantic(format!("{}: {e}", path.display())))?
        }
        (None, Some(path)) => cocycle_pair(&load_cocycle(path, &q)?),
        (None, None) => AlexanderPairTable::burau(&q),
    };
    DerivativeContext::new(p, images, pair).map_err(semantic)
}

fn cmd_matrix(format: Format, max_dim: usize, input: &MatrixInput, ds: &[i64]) -> Outcome {
    let ctx = build_context(input)?;
    let m = ctx.twisted_matrix().map_err(semantic)?;
    let mut text = format!("{} x {} matrix over Z[{}]\n", m.rows(), m.cols(), m.group());
    let _ = write!(text, "{m}");
    let mut ideals = vec![];
    for &d in ds {
        let i = ctx.twisted_ideals(d, max_dim).map_err(semantic)?;
        let _ = writeln!(text, "E_{d}: {}", ideal_text(&i));
        ideals.push(json!({ "d": d, "generators": i.without_associates().generators().iter().map(ToString::to_string).collect::<Vec<_>>() }));
    }
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect();
    Ok(render(format, text, json!({ "rows": m.rows(), "cols": m.cols(), "matrix": rows, "ideals": ideals })))
}

fn cmd_ideal(format: Format, max_dim: usize, input: &MatrixInput, d: i64, compare: Option<&str>) -> Outcome {
    let ctx = build_context(input)?;
    let i = ctx.twisted_ideals(d, max_dim).map_err(semantic)?;
    let mut text = format!("E_{d}: {}\n", ideal_text(&i));
    let mut value = json!({ "d": d, "generators": i.without_associates().generators().iter().map(ToString::to_string).collect::<Vec<_>>() });
    if let Some(spec) = compare {
        let g = i.group();
        let gens = spec
            .split(';')
            .map(|s| GroupRingElem::parse(g, s.trim()).map_err(|e| Failure::Parse(format!("--compare: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let other = IdealGens::new(g, gens);
        let verdict = if g.is_finite() {
            if ideal_equal_finite(&i, &other).map_err(semantic)? {
                "EQUAL"
            } else {
                "NOT-EQUAL"
            }
        } else if g.is_laurent() {
            match compare_laurent(&i, &other).map_err(semantic)? {
                LaurentVerdict::Equal => "EQUAL",
                LaurentVerdict::NotEqual => "NOT-EQUAL",
                LaurentVerdict::Inconclusive => "INCONCLUSIVE",
            }
        } else {
            return Err(Failure::Semantic("ideal comparison needs a finite group or Z[t^±1]".into()));
        };
        let _ = writeln!(text, "{verdict}");
        value["verdict"] = json!(verdict);
    }
    Ok(render(format, text, value))
}

fn cmd_search(
    format: Format,
    budget: u64,
    quandle: &Path,
    modulus: i64,
    filter_diagram: Option<&Path>,
    filter_multiset: Option<&str>,
    output: Option<&Path>,
) -> Outcome {
    let q = load_quandle(quandle)?;
    if modulus < 2 {
        return Err(Failure::Semantic(format!("modulus must be at least 2, got {modulus}")));
    }
    let filter = match (filter_diagram, filter_multiset) {
        (Some(d), Some(m)) => {
            let d = load_diagram(d)?;
            let g = qalex::ring::AbelianGroup::cyclic(modulus).map_err(semantic)?.arc();
            let target = InvariantMultiset::parse(g, m).map_err(|e| Failure::Parse(format!("--filter-multiset: {e}")))?;
            Some((d, target))
        }
        _ => None,
    };
    let pred = |c: &Cocycle| match &filter {
        Some((d, target)) => cocycle_invariant(d, c) == *target,
        None => true,
    };
    match find_cocycle(&q, modulus, budget, pred).map_err(semantic)? {
        SearchOutcome::Found { cocycle, tried } => {
            let file = format!("# found by search-cocycle after {tried} candidates\n{}", format_cocycle(&cocycle));
            let summary = match output {
                Some(path) => {
                    std::fs::write(path, &file).map_err(|e| semantic(format!("{}: {e}", path.display())))?;
                    format!("wrote {} after {tried} candidates\n", path.display())
                }
                None => file,
            };
            let value = json!({ "found": true, "tried": tried, "exponents": cocycle.exponents() });
            Ok(render(format, summary, value))
        }
        SearchOutcome::Exhausted { tried, complete } => Err(Failure::Exhausted(format!(
            "no matching cocycle after {tried} candidates ({})",
            if complete { "solution space exhausted" } else { "budget exhausted" }
        ))),
    }
}

fn cmd_verify(
    format: Format,
    max_dim: usize,
    diagram: &Path,
    quandle: &Path,
    cocycle: &Path,
    coloring: Option<&str>,
) -> Outcome {
    let d = load_diagram(diagram)?;
    let q = load_quandle(quandle)?;
    let theta = load_cocycle(cocycle, &q)?;
    let reports = match coloring {
        Some(s) => {
            let c = parse_list(s, "--coloring")?;
            if c.len() != d.n_arcs() {
                return Err(Failure::Semantic(format!("expected {} arc colors, got {}", d.n_arcs(), c.len())));
            }
            vec![verify_theorem(&d, &theta, &c, max_dim).map_err(semantic)?]
        }
        None => verify_theorem_all(&d, &theta, max_dim).map_err(semantic)?,
    };
    let mut text = String::new();
    for r in &reports {
        let colors: Vec<String> = r.coloring.iter().map(usize::to_string).collect();
        let _ = writeln!(
            text,
            "coloring {}: E_0 = ({}), product = {}, blocks {}, {}",
            colors.join(" "),
            r.lhs_generators.join(", "),
            r.rhs_generator,
            if r.block_structure { "ok" } else { "wrong" },
            if r.equal { "EQUAL" } else { "DIFFERENT" }
        );
    }
    let ok = reports.iter().filter(|r| r.equal).count();
    let _ = writeln!(text, "{ok}/{} colorings satisfy the identity", reports.len());
    let out = render(format, text, serde_json::to_value(&reports).expect("json"));
    if ok == reports.len() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Semantic(mismatch_message(first_mismatch(&reports).unwrap())))
    }
}

fn cmd_distinguish(format: Format, max_dim: usize, a: &Path, b: &Path, quandle: &Path, cocycle: &Path) -> Outcome {
    let q = load_quandle(quandle)?;
    let theta = load_cocycle(cocycle, &q)?;
    let (da, db) = (load_diagram(a)?, load_diagram(b)?);
    let (ia, ib) = (e0_multiset(&da, &theta, max_dim).map_err(semantic)?, e0_multiset(&db, &theta, max_dim).map_err(semantic)?);
    let differ = multisets_differ(&ia, &ib).map_err(semantic)?;
    let verdict = if differ { "DISTINGUISHED" } else { "NOT-DISTINGUISHED" };
    let text = format!(
        "{}:\n{}{}:\n{}{verdict}\n",
        a.display(),
        ideals_text(&ia),
        b.display(),
        ideals_text(&ib)
    );
    let value = json!({ "first": ideals_json(&ia), "second": ideals_json(&ib), "verdict": verdict });
    Ok(render(format, text, value))
}

fn cmd_deficiency(format: Format, presentation: Option<&Path>, diagram: Option<&Path>) -> Outcome {
    let p = match (presentation, diagram) {
        (Some(p), _) => load_presentation(p)?,
        (None, Some(d)) => Presentation::wirtinger(&load_diagram(d)?),
        (None, None) => unreachable!("clap requires one input"),
    };
    let def = deficiency_bound(&p);
    let text = format!("{def}\n");
    Ok(render(format, text, json!({ "generators": p.n_gens(), "relators": p.relators().len(), "deficiency_bound": def })))
}

fn run(cli: Cli) -> Outcome {
    let f = cli.format;
    match cli.cmd {
        Cmd::Check { quandle, pair, cocycle, diagram, presentation } => {
            cmd_check(f, quandle, pair, cocycle, diagram, presentation)
        }
        Cmd::Colorings { diagram, quandle } => cmd_colorings(f, &diagram, &quandle),
        Cmd::Invariant { diagram, quandle, cocycle } => cmd_invariant(f, cli.max_dim, &diagram, &quandle, &cocycle),
        Cmd::Matrix { input, d } => cmd_matrix(f, cli.max_dim, &input, &d),
        Cmd::Ideal { input, d, compare } => cmd_ideal(f, cli.max_dim, &input, d, compare.as_deref()),
        Cmd::SearchCocycle { quandle, modulus, filter_diagram, filter_multiset, output } => cmd_search(
            f,
            cli.budget,
            &quandle,
            modulus,
            filter_diagram.as_deref(),
            filter_multiset.as_deref(),
            output.as_deref(),
        ),
        Cmd::VerifyTheorem { diagram, quandle, cocycle, coloring } => {
            cmd_verify(f, cli.max_dim, &diagram, &quandle, &cocycle, coloring.as_deref())
        }
        Cmd::Distinguish { first, second, quandle, cocycle } => {
            cmd_distinguish(f, cli.max_dim, &first, &second, &quandle, &cocycle)
        }
        Cmd::Deficiency { presentation, diagram } => cmd_deficiency(f, presentation.as_deref(), diagram.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
