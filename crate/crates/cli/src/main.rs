use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use simple_braids::conjugacy::{
    is_conjugate_simple_with, is_markov_simple_bounded_with, positive_conjugacy_orbit_with, DEFAULT_MAX_ORBIT,
    DEFAULT_MAX_STRANDS,
};
use simple_braids::link::dpoly::is_geometrically_simple_with;
use simple_braids::verify::{run_all, Status, VerifyConfig};
use simple_braids::{
    canonical_conjugacy_word, closure_components, conjugacy_type, crossing_counts, cycle_decomposition,
    divisor_canonical_form, invariant_simple_set, is_literally_simple, linking_matrix, markov_reduce, replay_moves,
    split_support, BraidError, BraidWord, DEvaluator, NormalForm, SearchLimits,
};

#[derive(Parser)]
#[command(name = "braids", version, about = "Positive braids, simple braids and the D polynomial")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Strand count (default: largest index + 1)
    #[arg(long, global = true)]
    strands: Option<usize>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Largest orbit or state set to explore (BRAID_MAX_ORBIT overrides the default)
    #[arg(long, global = true)]
    max_orbit: Option<usize>,
    /// Largest strand count for searches; for `verify`, the largest suite size
    #[arg(long, global = true)]
    max_strands: Option<usize>,
    /// Report elapsed time
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form, and the block form when square-free
    Nf { word: String },
    /// All five simplicity tests
    Simple {
        word: String,
        /// Extra strands allowed by stabilization in the Markov test
        #[arg(long, default_value_t = 1)]
        extra: usize,
    },
    /// Decomposition into disjoint cycles
    Cycles { word: String },
    /// Conjugacy type and its canonical word
    ConjCanon { word: String },
    /// D polynomial of the closure
    DPoly { word: String },
    /// Positive conjugacy orbit
    Orbit { word: String },
    /// Markov moves down to a unit braid
    MarkovReduce { word: String },
    /// Components and linking numbers of the closure
    Closure { word: String },
    /// Run the verification suites
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Nf { .. } => "nf",
            Command::Simple { .. } => "simple",
            Command::Cycles { .. } => "cycles",
            Command::ConjCanon { .. } => "conj-canon",
            Command::DPoly { .. } => "d-poly",
            Command::Orbit { .. } => "orbit",
            Command::MarkovReduce { .. } => "markov-reduce",
            Command::Closure { .. } => "closure",
            Command::Verify => "verify",
        }
    }

    fn word(&self) -> Option<&str> {
        match self {
            Command::Nf { word }
            | Command::Simple { word, .. }
            | Command::Cycles { word }
            | Command::ConjCanon { word }
            | Command::DPoly { word }
            | Command::Orbit { word }
            | Command::MarkovReduce { word }
            | Command::Closure { word } => Some(word),
            Command::Verify => None,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::Syntax { .. } | BraidError::IndexOutOfRange { .. } | BraidError::InvalidStrands(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// Result payload: ordered `(key, value)` pairs plus the `partial` flag.
struct Payload {
    fields: Vec<(&'static str, Value)>,
    text: Vec<String>,
    partial: bool,
}

impl Payload {
    fn new() -> Self {
        Payload { fields: Vec::new(), text: Vec::new(), partial: false }
    }

    fn field(&mut self, key: &'static str, value: Value, text: impl Into<String>) {
        self.fields.push((key, value));
        self.text.push(text.into());
    }
}

fn limits(common: &Common) -> SearchLimits {
    let env_orbit = std::env::var("BRAID_MAX_ORBIT").ok().and_then(|v| v.parse().ok());
    SearchLimits {
        max_strands: common.max_strands.unwrap_or(DEFAULT_MAX_STRANDS),
        max_orbit: common.max_orbit.or(env_orbit).unwrap_or(DEFAULT_MAX_ORBIT),
    }
}

fn words(list: &[NormalForm]) -> Value {
    Value::Array(list.iter().map(|nf| Value::String(nf.to_word().to_string())).collect())
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `Ok(Some)` on success, `Ok(None)` on a search bound, error otherwise.
fn bounded<T>(r: simple_braids::Result<T>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(BraidError::BoundExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn cmd_nf(w: &BraidWord) -> Result<Payload, Failure> {
    let nf = NormalForm::of_word(w);
    let mut p = Payload::new();
    let factors: Vec<Value> = nf.factors().iter().map(|f| json!(f.images())).collect();
    p.field("normal_form", json!(factors), format!("normal form: {nf}"));
    p.field("factor_count", json!(nf.factor_count()), format!("factors: {}", nf.factor_count()));
    p.field("degree", json!(nf.degree()), format!("degree: {}", nf.degree()));
    p.field("canonical_word", json!(nf.to_word().to_string()), format!("canonical word: {}", nf.to_word()));
    p.field("square_free", json!(nf.is_square_free()), format!("square_free={}", nf.is_square_free()));
    let inn: Vec<usize> = nf.initial_set().into_iter().collect();
    p.field("initial_set", json!(inn), format!("initial set: {inn:?}"));
    p.field("permutation", json!(nf.permutation().images()), format!("permutation: {:?}", nf.permutation().images()));
    if nf.is_square_free() {
        let blocks = divisor_canonical_form(w)?;
        let k: Vec<usize> = blocks.iter().map(|b| b.k).collect();
        let j: Vec<usize> = blocks.iter().map(|b| b.j).collect();
        p.field("blocks", json!({ "K": k, "J": j }), format!("blocks: K={k:?} J={j:?}"));
    }
    Ok(p)
}

fn cmd_simple(w: &BraidWord, extra: usize, limits: SearchLimits) -> Result<Payload, Failure> {
    let n = w.strands();
    let mut p = Payload::new();
    let nf = NormalForm::of_word(w);
    p.field("square_free", json!(nf.is_square_free()), format!("square-free: {}", flag(nf.is_square_free())));
    let ls = is_literally_simple(w);
    p.field("literally_simple", json!(ls), format!("literally simple: {}", flag(ls)));

    let report = |p: &mut Payload, key: &'static str, label: &str, value: Option<bool>| {
        match value {
            Some(b) => p.field(key, json!(b), format!("{label}: {}", flag(b))),
            None => {
                p.partial = true;
                p.field(key, Value::Null, format!("{label}: bound exceeded"));
            }
        };
    };
    let cs = bounded(is_conjugate_simple_with(w, limits))?;
    report(&mut p, "conjugate_simple", "conjugate simple", cs);
    let is = bounded(invariant_simple_set(n, limits))?.map(|set| set.binary_search(&nf).is_ok());
    report(&mut p, "invariant_simple", "invariant simple", is);
    let ms = bounded(is_markov_simple_bounded_with(w, extra, limits))?;
    report(&mut p, "markov_simple", &format!("Markov simple (+{extra} strands)"), ms);
    let gs = bounded(is_geometrically_simple_with(w, &mut DEvaluator::new(limits)))?;
    report(&mut p, "geometrically_simple", "geometrically simple", gs);
    Ok(p)
}

fn cmd_cycles(w: &BraidWord) -> Result<Payload, Failure> {
    let d = cycle_decomposition(w)?;
    let mut p = Payload::new();
    p.field("decomposition", json!(d.to_string()), format!("cycles: {d}"));
    let supports: Vec<Value> = d.cycles().iter().map(|c| json!([c.support().0, c.support().1])).collect();
    p.field("supports", json!(supports), format!("supports: {:?}", d.cycles().iter().map(|c| c.support()).collect::<Vec<_>>()));
    Ok(p)
}

fn cmd_conj_canon(w: &BraidWord) -> Result<Payload, Failure> {
    let t = conjugacy_type(w)?;
    let canonical = canonical_conjugacy_word(&t);
    let mut p = Payload::new();
    p.field("type", json!(t.to_string()), t.to_string());
    p.field("A", json!(t.sizes()), format!("A: {:?}", t.sizes()));
    p.field("trivial_strands", json!(t.trivial_strands()), format!("trivial strands: {}", t.trivial_strands()));
    p.field("components", json!(t.components()), format!("components: {}", t.components()));
    p.field("canonical_word", json!(canonical.to_string()), format!("canonical word: {canonical}"));
    Ok(p)
}

fn cmd_d_poly(w: &BraidWord, limits: SearchLimits) -> Result<(Value, String), Failure> {
    let d = DEvaluator::new(limits).evaluate(w)?;
    Ok((serde_json::to_value(&d).expect("serializable"), format!("D = {d}")))
}

fn cmd_orbit(w: &BraidWord, limits: SearchLimits) -> Result<Payload, Failure> {
    let o = positive_conjugacy_orbit_with(w, limits)?;
    let mut p = Payload::new();
    p.partial = !o.complete;
    p.field("size", json!(o.representatives.len()), format!("orbit size: {}", o.representatives.len()));
    p.field("complete", json!(o.complete), format!("complete: {}", flag(o.complete)));
    p.field("all_square_free", json!(o.all_square_free), format!("all square-free: {}", flag(o.all_square_free)));
    match &o.square_witness {
        Some(s) => p.field(
            "witness",
            serde_json::to_value(s).expect("serializable"),
            format!("witness: {} (conjugator: {})", s.witness, s.conjugator),
        ),
        None => p.field("witness", Value::Null, "witness: none"),
    }
    let members = o.representatives.iter().map(|m| format!("  {}", m.to_word())).collect::<Vec<_>>().join("\n");
    p.field("members", words(&o.representatives), format!("members:\n{members}"));
    Ok(p)
}

fn cmd_markov(w: &BraidWord) -> Result<Payload, Failure> {
    let moves = markov_reduce(w)?;
    let end = replay_moves(w, &moves)?;
    let mut p = Payload::new();
    let lines: Vec<String> = moves
        .iter()
        .map(|m| match &m.conjugator {
            Some(c) => format!("  {} by {c} ({} strands)", m.kind.name(), m.strands_before),
            None => format!("  {} {} -> {} strands", m.kind.name(), m.strands_before, m.strands_after),
        })
        .collect();
    p.field("moves", serde_json::to_value(&moves).expect("serializable"), format!("moves:\n{}", lines.join("\n")));
    p.field("final_strands", json!(end.strands()), format!("ends at the unit braid on {} strands", end.strands()));
    Ok(p)
}

fn cmd_closure(w: &BraidWord) -> Result<Payload, Failure> {
    let c = closure_components(w);
    let mut p = Payload::new();
    p.field("component_count", json!(c.count()), format!("components: {}", c.count()));
    p.field("components", json!(c.components), format!("strands per component: {:?}", c.components));
    let matrix: Vec<Vec<String>> =
        linking_matrix(w).iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    let rows: Vec<String> = matrix.iter().map(|r| format!("  {}", r.join(" "))).collect();
    p.field("linking_matrix", json!(matrix), format!("|linking numbers|:\n{}", rows.join("\n")));
    let crossings = crossing_counts(w);
    p.field("crossings", json!(crossings), format!("crossings between components: {crossings:?}"));
    let groups: Vec<Value> =
        split_support(w).into_iter().map(|(g, (lo, hi))| json!({ "strands": [lo, hi], "word": g.to_string() })).collect();
    p.field("split_groups", json!(groups.len()), format!("split pieces: {}", groups.len()));
    Ok(p)
}

fn cmd_verify(common: &Common) -> Result<Payload, Failure> {
    let max = common.max_strands.unwrap_or(4);
    if !(2..=6).contains(&max) {
        return Err(Failure::Usage(format!("--max-strands for verify must be between 2 and 6, got {max}")));
    }
    let reports = run_all(&VerifyConfig { max_strands: max, ..VerifyConfig::default() });
    let mut p = Payload::new();
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    if common.timing {
        for (l, r) in lines.iter_mut().zip(&reports) {
            l.push_str(&format!(" ({:.2}s)", r.elapsed.as_secs_f64()));
        }
    }
    p.field("max_strands", json!(max), format!("suites up to {max} strands"));
    p.field("suites", serde_json::to_value(&reports).expect("serializable"), lines.join("\n"));
    p.field("failed", json!(failed), format!("{failed} failed"));
    if failed > 0 {
        p.partial = true;
    }
    Ok(p)
}

fn execute(cli: &Cli, w: Option<&BraidWord>) -> Result<Payload, Failure> {
    let limits = limits(&cli.common);
    let w = || w.expect("word commands parse a word");
    match &cli.command {
        Command::Nf { .. } => cmd_nf(w()),
        Command::Simple { extra, .. } => cmd_simple(w(), *extra, limits),
        Command::Cycles { .. } => cmd_cycles(w()),
        Command::ConjCanon { .. } => cmd_conj_canon(w()),
        Command::DPoly { .. } => {
            let (value, text) = cmd_d_poly(w(), limits)?;
            let mut p = Payload::new();
            p.field("", value, text);
            Ok(p)
        }
        Command::Orbit { .. } => cmd_orbit(w(), limits),
        Command::MarkovReduce { .. } => cmd_markov(w()),
        Command::Closure { .. } => cmd_closure(w()),
        Command::Verify => cmd_verify(&cli.common),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let command = cli.command.name();

    let word = match cli.command.word().map(|t| BraidWord::parse(t, cli.common.strands)).transpose() {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let (payload, code) = match execute(&cli, word.as_ref()) {
        Ok(p) => {
            let code = if p.partial { 1 } else { 0 };
            (p, code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };

    if cli.common.json {
        let mut report = Map::new();
        report.insert("schema".into(), json!("1"));
        report.insert("command".into(), json!(command));
        if let Some(w) = &word {
            report.insert("input".into(), json!(w.to_string()));
            report.insert("strands".into(), json!(w.strands()));
        }
        let result = match payload.fields.as_slice() {
            [("", value)] => value.clone(),
            fields => Value::Object(fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()),
        };
        report.insert("result".into(), result);
        report.insert("partial".into(), json!(payload.partial));
        if cli.common.timing {
            report.insert("elapsed_ms".into(), json!(start.elapsed().as_millis() as u64));
        }
        println!("{}", serde_json::to_string(&Value::Object(report)).expect("serializable"));
    } else {
        if let Some(w) = &word {
            println!("{command} {w} ({} strands)", w.strands());
        }
        for line in &payload.text {
            println!("{line}");
        }
        if payload.partial {
            println!("partial result: a search bound was reached");
        }
        if cli.common.timing {
            println!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
        }
    }
    ExitCode::from(code)
}
