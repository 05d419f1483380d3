//! `covrough` — covering rough sets from the command line.
//!
//! Spaces and mappings are JSON files; every command reads them, runs the
//! corresponding library operation, and prints deterministic, canonical
//! output.  Exit codes are stable across commands: 0 success, 1 parse
//! error (unreadable or syntactically invalid input), 2 semantic error
//! (well-formed input violating a precondition), 3 law failure.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use covrough::laws::MAX_SCOPE_N;
use covrough::{
    ApproxSpace, Covering, HomMode, LawId, LawReport, Mapping, MappingDoc, Outcome, ScopeSpec,
    SpaceDoc, Subset, Universe,
};

/// Covering-based rough sets: approximations, covering operators,
/// morphisms, and an executable law suite.
#[derive(Parser)]
#[command(name = "covrough", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Approximate a set of elements in a covering space.
    Approx {
        /// JSON space file.
        #[arg(long)]
        space: PathBuf,
        /// Comma-separated element labels; the empty string is the empty set.
        #[arg(long)]
        set: String,
        /// Route used for the upper approximation (all three agree).
        #[arg(long, value_enum, default_value_t = Method::Neigh)]
        method: Method,
        /// Comma-separated selection of lower, upper, neighborhoods.
        #[arg(long, default_value = "lower,upper")]
        show: String,
    },
    /// Apply a covering operator and print the resulting space.
    Op {
        /// JSON space file.
        #[arg(long)]
        space: PathBuf,
        /// Operator to apply.
        #[arg(long, value_enum)]
        apply: OpKind,
    },
    /// Combine two coverings of the same universe.
    Combine {
        /// JSON space file (left operand).
        #[arg(long)]
        left: PathBuf,
        /// JSON space file (right operand).
        #[arg(long)]
        right: PathBuf,
        /// How to combine the two coverings.
        #[arg(long = "with", value_enum)]
        combine_with: CombineKind,
    },
    /// Compare the approximation operators of two coverings.
    Equiv {
        /// JSON space file (left operand).
        #[arg(long)]
        left: PathBuf,
        /// JSON space file (right operand).
        #[arg(long)]
        right: PathBuf,
    },
    /// Check a mapping between two spaces; optionally report how it
    /// transports the approximations of one set.
    Hom {
        /// JSON space file (source).
        #[arg(long)]
        source: PathBuf,
        /// JSON space file (target).
        #[arg(long)]
        target: PathBuf,
        /// JSON mapping file ({"map": {"x1": "y1", ...}}).
        #[arg(long)]
        map: PathBuf,
        /// Whether member images must be members (strict) or unions of
        /// members (definable).
        #[arg(long, value_enum, default_value_t = ModeArg::Definable)]
        mode: ModeArg,
        /// Comma-separated source labels to run the preservation report on.
        #[arg(long)]
        set: Option<String>,
    },
    /// Print the exact number of coverings of an n-element universe.
    CountCoverings {
        /// Universe size (1 through 6).
        #[arg(long)]
        n: u32,
    },
    /// List every covering of an n-element universe, one JSON space per line.
    EnumerateCoverings {
        /// Universe size (1 through 4).
        #[arg(long)]
        n: usize,
    },
    /// Run the law suite (all laws, or a selection).
    Check {
        /// Law identifier to run (repeatable); all laws when omitted.
        #[arg(long = "law")]
        laws: Vec<String>,
        /// Cap on swept universe sizes.
        #[arg(long)]
        max_n: Option<usize>,
        /// Seeded draws per sampled universe size.
        #[arg(long)]
        seeds: Option<u64>,
        /// Random target sets per sampled instance.
        #[arg(long)]
        sample_sets: Option<usize>,
        /// Emit one JSON report per line instead of the table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Lower approximation plus the neighborhoods of the uncovered rest.
    Def3,
    /// Union of the neighborhoods of the set's elements.
    Neigh,
    /// Intersection of the unions of all subcoverings.
    Subcov,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    /// Drop members that are unions of other members.
    Reduct,
    /// Drop members that are intersections of other members.
    Int,
    /// Replace the covering by its neighborhood family.
    Nei,
    /// Adjoin the union of every nonempty sub-family.
    Closure,
}

#[derive(Clone, Copy, ValueEnum)]
enum CombineKind {
    /// Pool the members of both coverings.
    Join,
    /// Intersect the two neighborhoods of every element.
    Meet,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Member images must be members of the target covering.
    Strict,
    /// Member images must be unions of target members.
    Definable,
}

impl From<ModeArg> for HomMode {
    fn from(mode: ModeArg) -> HomMode {
        match mode {
            ModeArg::Strict => HomMode::Strict,
            ModeArg::Definable => HomMode::Definable,
        }
    }
}

/// A command failure carrying the exit-code class it belongs to.
enum Failure {
    /// Unreadable or syntactically invalid input: exit 1.
    Parse(String),
    /// Well-formed input violating a precondition: exit 2.
    Semantic(String),
    /// At least one law did not pass: exit 3.
    Laws(usize),
}

impl Failure {
    fn exit(&self) -> ExitCode {
        match self {
            Failure::Parse(_) => ExitCode::from(1),
            Failure::Semantic(_) => ExitCode::from(2),
            Failure::Laws(_) => ExitCode::from(3),
        }
    }
}

fn parse_error(context: &Path, error: impl Display) -> Failure {
    Failure::Parse(format!("{}: {error}", context.display()))
}

fn semantic(error: impl Display) -> Failure {
    Failure::Semantic(error.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Parse(msg) => eprintln!("error (parse): {msg}"),
                Failure::Semantic(msg) => eprintln!("error: {msg}"),
                Failure::Laws(count) => eprintln!("error: {count} law(s) did not pass"),
            }
            failure.exit()
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Approx {
            space,
            set,
            method,
            show,
        } => cmd_approx(&space, &set, method, &show),
        Command::Op { space, apply } => cmd_op(&space, apply),
        Command::Combine {
            left,
            right,
            combine_with,
        } => cmd_combine(&left, &right, combine_with),
        Command::Equiv { left, right } => cmd_equiv(&left, &right),
        Command::Hom {
            source,
            target,
            map,
            mode,
            set,
        } => cmd_hom(&source, &target, &map, mode, set.as_deref()),
        Command::CountCoverings { n } => cmd_count(n),
        Command::EnumerateCoverings { n } => cmd_enumerate(n),
        Command::Check {
            laws,
            max_n,
            seeds,
            sample_sets,
            json,
        } => cmd_check(&laws, max_n, seeds, sample_sets, json),
    }
}

// ---------------------------------------------------------------------------
// Input plumbing.
// ---------------------------------------------------------------------------

fn load_space(path: &Path) -> Result<ApproxSpace, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let doc = SpaceDoc::parse(&text).map_err(|e| parse_error(path, e))?;
    doc.to_space().map_err(semantic)
}

fn load_mapping(path: &Path, source: &Universe, target: &Universe) -> Result<Mapping, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let doc = MappingDoc::parse(&text).map_err(|e| parse_error(path, e))?;
    doc.to_mapping(source, target).map_err(semantic)
}

fn parse_set(universe: &Universe, csv: &str) -> Result<Subset, Failure> {
    if csv.is_empty() {
        return Ok(Subset::empty(universe));
    }
    Subset::from_labels(universe, csv.split(',')).map_err(semantic)
}

fn labels_value(set: &Subset) -> Value {
    Value::Array(set.labels().into_iter().map(Value::String).collect())
}

fn covering_value(covering: &Covering) -> Value {
    Value::Array(
        covering
            .members()
            .map(|member| labels_value(&member))
            .collect(),
    )
}

fn print_json(value: &Value) {
    println!("{value}");
}

// ---------------------------------------------------------------------------
// Commands.
// ---------------------------------------------------------------------------

fn cmd_approx(space: &Path, set: &str, method: Method, show: &str) -> Result<(), Failure> {
    let space = load_space(space)?;
    let x = parse_set(space.universe(), set)?;
    let mut out = Map::new();
    out.insert("set".to_string(), labels_value(&x));
    for part in show.split(',') {
        match part {
            "lower" => {
                let lower = space.lower(&x).map_err(semantic)?;
                out.insert("lower".to_string(), labels_value(&lower));
            }
            "upper" => {
                let upper = match method {
                    Method::Def3 => space.upper_def3(&x),
                    Method::Neigh => space.upper_neigh(&x),
                    Method::Subcov => space.upper_subcov(&x),
                }
                .map_err(semantic)?;
                out.insert("upper".to_string(), labels_value(&upper));
                out.insert(
                    "method".to_string(),
                    Value::String(
                        match method {
                            Method::Def3 => "def3",
                            Method::Neigh => "neigh",
                            Method::Subcov => "subcov",
                        }
                        .to_string(),
                    ),
                );
            }
            "neighborhoods" => {
                let mut table = Map::new();
                for name in space.universe().names() {
                    let neighborhood = space.neighborhood(name).map_err(semantic)?;
                    table.insert(name.clone(), labels_value(&neighborhood));
                }
                out.insert("neighborhoods".to_string(), Value::Object(table));
            }
            other => {
                return Err(Failure::Semantic(format!(
                    "unknown --show selection {other:?} (expected lower, upper, neighborhoods)"
                )))
            }
        }
    }
    print_json(&Value::Object(out));
    Ok(())
}

fn cmd_op(space: &Path, apply: OpKind) -> Result<(), Failure> {
    let space = load_space(space)?;
    let covering = space.covering();
    let result = match apply {
        OpKind::Reduct => covering.reduct(),
        OpKind::Int => covering.int(),
        OpKind::Nei => covering.nei(),
        OpKind::Closure => covering.definable_closure().map_err(semantic)?,
    };
    println!("{}", SpaceDoc::from_covering(&result).to_json());
    Ok(())
}

fn cmd_combine(left: &Path, right: &Path, combine_with: CombineKind) -> Result<(), Failure> {
    let left = load_space(left)?;
    let right = load_space(right)?;
    let result = match combine_with {
        CombineKind::Join => left.covering().join(right.covering()),
        CombineKind::Meet => left.covering().meet(right.covering()),
    }
    .map_err(semantic)?;
    println!("{}", SpaceDoc::from_covering(&result).to_json());
    Ok(())
}

fn cmd_equiv(left: &Path, right: &Path) -> Result<(), Failure> {
    let left = load_space(left)?;
    let right = load_space(right)?;
    let same_lower = left
        .covering()
        .same_lower_operator(right.covering())
        .map_err(semantic)?;
    let same_upper = left
        .covering()
        .same_upper_operator(right.covering())
        .map_err(semantic)?;
    print_json(&json!({
        "same_lower": same_lower,
        "same_upper": same_upper,
        "reduct_left": covering_value(&left.covering().reduct()),
        "reduct_right": covering_value(&right.covering().reduct()),
    }));
    Ok(())
}

fn cmd_hom(
    source: &Path,
    target: &Path,
    map: &Path,
    mode: ModeArg,
    set: Option<&str>,
) -> Result<(), Failure> {
    let source = load_space(source)?;
    let target = load_space(target)?;
    let mapping = load_mapping(map, source.universe(), target.universe())?;
    let hom = mapping
        .is_homomorphism(&source, &target, mode.into())
        .map_err(semantic)?;
    let iso = mapping
        .is_isomorphism(&source, &target, mode.into())
        .map_err(semantic)?;
    let mut out = Map::new();
    out.insert(
        "mode".to_string(),
        Value::String(
            match mode {
                ModeArg::Strict => "strict",
                ModeArg::Definable => "definable",
            }
            .to_string(),
        ),
    );
    out.insert("hom".to_string(), Value::Bool(hom));
    out.insert("iso".to_string(), Value::Bool(iso));
    if let Some(csv) = set {
        let x = parse_set(source.universe(), csv)?;
        let report = mapping
            .preservation_report(&source, &target, &x)
            .map_err(semantic)?;
        out.insert(
            "preservation".to_string(),
            json!({
                "set": labels_value(&x),
                "f_lower_x": labels_value(&report.f_lower_x),
                "lower_f_x": labels_value(&report.lower_f_x),
                "f_upper_x": labels_value(&report.f_upper_x),
                "upper_f_x": labels_value(&report.upper_f_x),
                "lower_inclusion_holds": report.lower_inclusion_holds,
                "lower_equal": report.lower_equal,
                "upper_equal": report.upper_equal,
                "neighborhood_transport": report.neighborhood_transport,
            }),
        );
    }
    print_json(&Value::Object(out));
    Ok(())
}

fn cmd_count(n: u32) -> Result<(), Failure> {
    let count = covrough::count_coverings(n).map_err(semantic)?;
    println!("{count}");
    Ok(())
}

fn cmd_enumerate(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Semantic(
            "universe size must be at least 1".to_string(),
        ));
    }
    let universe =
        Universe::new((1..=n).map(|i| format!("x{i}"))).expect("indexed names are valid");
    let stream = covrough::enumerate_coverings(&universe).map_err(semantic)?;
    for covering in stream {
        println!("{}", SpaceDoc::from_covering(&covering).to_json());
    }
    Ok(())
}

fn scope_from_flags(
    max_n: Option<usize>,
    seeds: Option<u64>,
    sample_sets: Option<usize>,
) -> Result<ScopeSpec, Failure> {
    let mut scope = ScopeSpec::default();
    if let Some(m) = max_n {
        scope.max_n = m;
    }
    if let Some(s) = seeds {
        scope.seeds = s;
    }
    if let Some(k) = sample_sets {
        scope.sample_sets = k;
    }
    if let Ok(cap) = std::env::var("COVROUGH_MAX_N") {
        let cap: usize = cap.parse().map_err(|_| {
            Failure::Semantic(format!(
                "COVROUGH_MAX_N must be an integer, got {cap:?}"
            ))
        })?;
        scope.max_n = scope.max_n.min(cap);
    }
    if scope.max_n > MAX_SCOPE_N {
        return Err(Failure::Semantic(format!(
            "--max-n {} exceeds the supported limit {MAX_SCOPE_N}",
            scope.max_n
        )));
    }
    Ok(scope)
}

fn print_report_line(report: &LawReport) {
    let label = match report.outcome {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::ExpectedFailureFound => "PASS",
    };
    let kind = match report.outcome {
        Outcome::ExpectedFailureFound => " (expected failure found)",
        _ => "",
    };
    println!(
        "{label}  {:<22} {:>12} instances  {:>9.1} ms  {}{kind}",
        report.law.name(),
        report.instances_checked,
        report.elapsed.as_secs_f64() * 1e3,
        report.scope,
    );
    if let Some(witness) = &report.witness {
        if let Some(note) = &witness.note {
            println!("      note: {note}");
        }
        if report.outcome == Outcome::Fail {
            println!(
                "      witness: {}",
                serde_json::to_string(witness).expect("witnesses serialize")
            );
        }
    }
}

fn cmd_check(
    laws: &[String],
    max_n: Option<usize>,
    seeds: Option<u64>,
    sample_sets: Option<usize>,
    json: bool,
) -> Result<(), Failure> {
    let scope = scope_from_flags(max_n, seeds, sample_sets)?;
    let selection: Vec<LawId> = if laws.is_empty() {
        LawId::ALL.to_vec()
    } else {
        laws.iter()
            .map(|name| name.parse::<LawId>().map_err(semantic))
            .collect::<Result<_, _>>()?
    };
    let mut failed = 0usize;
    for law in &selection {
        let report = covrough::run_law(*law, &scope).map_err(semantic)?;
        if !report.outcome.is_success() {
            failed += 1;
        }
        if json {
            println!(
                "{}",
                serde_json::to_string(&report).expect("reports serialize")
            );
        } else {
            print_report_line(&report);
        }
    }
    if !json {
        println!(
            "{} law(s) run, {} passed, {failed} failed",
            selection.len(),
            selection.len() - failed,
        );
    }
    if failed > 0 {
        Err(Failure::Laws(failed))
    } else {
        Ok(())
    }
}
