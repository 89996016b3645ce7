//! `congruence`: orbit, index and congruence experiments for stabilizers of
//! epimorphisms `F2 → G` in Aut⁺(F2).

mod spec;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use congruence::analysis::{self, all_passed, Check};
use congruence::epi::kernel_orbit_census;
use congruence::fixtures::Fixtures;
use congruence::groups::{DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER};
use congruence::{Epimorphism, Error, GroupTable, Mat2, Sl2Subgroup};

use spec::{split_pair, GroupSpec};

const SCHEMA: u32 = 1;
const DEFAULT_MAX_PAIRS: usize = 1 << 22;

#[derive(Parser, Debug)]
#[command(name = "congruence", version, about = "Congruence subgroups of Aut+(F2) and their images in SL2(Z)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Coset limit for every enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
    /// Largest group order accepted
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Largest |G|^2 scanned by `census`
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PAIRS)]
    max_pairs: usize,
    /// JSON report (the default)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Plain text report
    #[arg(long, global = true)]
    text: bool,
    /// Directory holding g128.pres, table1.words, table2.words, witness.word
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbit length of π, inner index and index of the ρ-image
    Index(GroupArgs),
    /// The index computation followed by level and congruence test
    Congruence(GroupArgs),
    /// Check one family of identities: presentation, dihedral-identities:<n>,
    /// table1, table2 or witness
    Verify { name: String },
    /// Aut⁺(F2)-orbits on the kernels of epimorphisms F2 → G
    Census { group: String },
    /// Compare the index for Z/p ⋉ Z/q with q p (p^2 - 1)
    Conjecture { p: u64, q: u64 },
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// cyclic:<m>, abelian:<m>,<n>, dihedral:<n>, perm:<cycles;...> or fp:<path>
    group: String,
    /// Images of x and y, by label or generator name; defaults to the first
    /// two generators
    #[arg(long)]
    pi: Option<String>,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<congruence::ParseError> for CliError {
    fn from(e: congruence::ParseError) -> Self {
        CliError::Core(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::EnumerationLimit { .. } | Error::OrderCap { .. }) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Serialize)]
struct Report {
    schema: u32,
    version: &'static str,
    command: String,
    inputs: Value,
    results: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<Check>,
    passed: bool,
    /// sha256 of each fixture file
    fixtures: BTreeMap<&'static str, String>,
    timing: Timing,
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: f64,
}

/// What a command produced before it is wrapped into a report.
struct Outcome {
    inputs: Value,
    results: Value,
    checks: Vec<Check>,
    passed: bool,
}

impl Outcome {
    fn checks(inputs: Value, results: Value, checks: Vec<Check>) -> Self {
        let passed = all_passed(&checks);
        Outcome { inputs, results, checks, passed }
    }
}

struct Ctx {
    opts: Opts,
    fixtures: Fixtures,
}

impl Ctx {
    /// Reads `path`, falling back to the fixture of the same file name.
    fn load(&self, path: &Path) -> congruence::Result<String> {
        if let Ok(text) = std::fs::read_to_string(path) {
            return Ok(text);
        }
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        self.fixtures
            .files()
            .iter()
            .find(|(f, _)| *f == name)
            .map(|(_, text)| text.to_string())
            .ok_or_else(|| Error::Invalid(format!("cannot read {}", path.display())))
    }

    fn epimorphism(&self, args: &GroupArgs) -> CliResult<(GroupSpec, Epimorphism)> {
        let spec: GroupSpec = args.group.parse()?;
        let g = spec.build(self.opts.max_cosets, self.opts.max_order, |p| self.load(p))?;
        let (x, y) = match &args.pi {
            Some(pi) => split_pair(pi)?,
            None => default_pi(&g)?,
        };
        Ok((spec, Epimorphism::from_labels(Arc::new(g), &x, &y)?))
    }

    fn g128(&self) -> CliResult<Epimorphism> {
        let g = GroupTable::from_presentation(&self.fixtures.g128()?, self.opts.max_cosets, self.opts.max_order)?;
        Ok(Epimorphism::from_labels(Arc::new(g), "g1", "g2")?)
    }

    fn g128_image(&self) -> CliResult<Sl2Subgroup> {
        Ok(analysis::analyze_index(&self.g128()?, self.opts.max_cosets)?.image)
    }
}

fn default_pi(g: &GroupTable) -> CliResult<(String, String)> {
    match g.generators() {
        [a, b, ..] => Ok((a.0.clone(), b.0.clone())),
        _ => Err(Error::Invalid("the group has fewer than two named generators; pass --pi".into()).into()),
    }
}

fn pi_inputs(spec: &GroupSpec, e: &Epimorphism) -> Value {
    let g = e.group();
    json!({ "group": spec.to_string(), "pi": [g.label(e.gx()), g.label(e.gy())] })
}

fn cmd_index(ctx: &Ctx, args: &GroupArgs) -> CliResult<Outcome> {
    let (spec, e) = ctx.epimorphism(args)?;
    let a = analysis::analyze_index(&e, ctx.opts.max_cosets)?;
    let passed = a.report.factorization_holds;
    Ok(Outcome { inputs: pi_inputs(&spec, &e), results: json!(a.report), checks: Vec::new(), passed })
}

fn cmd_congruence(ctx: &Ctx, args: &GroupArgs) -> CliResult<Outcome> {
    let (spec, e) = ctx.epimorphism(args)?;
    let (_, report) = analysis::analyze_congruence(&e, ctx.opts.max_cosets)?;
    let passed = report.index.factorization_holds;
    Ok(Outcome { inputs: pi_inputs(&spec, &e), results: json!(report), checks: Vec::new(), passed })
}

fn cmd_census(ctx: &Ctx, group: &str) -> CliResult<Outcome> {
    let spec: GroupSpec = group.parse()?;
    let g = spec.build(ctx.opts.max_cosets, ctx.opts.max_order, |p| ctx.load(p))?;
    let census = kernel_orbit_census(&g, ctx.opts.max_pairs)?;
    let results = json!({
        "census": census,
        "transitive": census.is_transitive(),
        "distinct_indices": census.distinct_indices(),
    });
    Ok(Outcome { inputs: json!({ "group": spec.to_string() }), results, checks: Vec::new(), passed: true })
}

fn cmd_conjecture(ctx: &Ctx, p: u64, q: u64) -> CliResult<Outcome> {
    let r = analysis::conjecture(p, q, ctx.opts.max_cosets)?;
    Ok(Outcome { inputs: json!({ "p": p, "q": q }), results: json!(r), checks: Vec::new(), passed: true })
}

fn cmd_verify(ctx: &Ctx, name: &str) -> CliResult<Outcome> {
    let inputs = json!({ "name": name });
    match name {
        "presentation" => {
            let mut checks = analysis::aut_plus_relation_checks();
            let relations = checks.len();
            checks.extend(analysis::sl2_relator_checks());
            Ok(Outcome::checks(inputs, json!({ "aut_plus_relations": relations }), checks))
        }
        "table1" => verify_table1(ctx, inputs),
        "table2" => verify_table2(ctx, inputs),
        "witness" => verify_witness(ctx, inputs),
        _ => match name.strip_prefix("dihedral-identities:") {
            Some(n) => {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("dihedral-identities needs an integer, got {n:?}")))?;
                let checks = analysis::dihedral_identity_checks(n, ctx.opts.max_cosets)?;
                let parity = if n % 2 == 1 { "odd" } else { "even" };
                Ok(Outcome::checks(inputs, json!({ "n": n, "case": parity }), checks))
            }
            None => Err(Error::Invalid(format!(
                "unknown verification {name:?}; expected presentation, dihedral-identities:<n>, table1, table2 or witness"
            ))
            .into()),
        },
    }
}

fn verify_table1(ctx: &Ctx, inputs: Value) -> CliResult<Outcome> {
    let e = ctx.g128()?;
    let words = ctx.fixtures.table1()?;
    let checks = words
        .iter()
        .map(|(text, f)| Check::new(format!("{text} stabilizes π"), e.is_stabilized_by(f)))
        .collect();
    let results = json!({ "group_order": e.group().order(), "words": words.len() });
    Ok(Outcome::checks(inputs, results, checks))
}

fn verify_table2(ctx: &Ctx, inputs: Value) -> CliResult<Outcome> {
    let h = ctx.g128_image()?;
    let words = ctx.fixtures.table2()?;
    let mut checks: Vec<Check> = words
        .iter()
        .map(|(text, w)| Check::new(format!("{text} lies in the ρ-image"), h.contains(&w.eval())))
        .collect();
    let ws: Vec<_> = words.iter().map(|(_, w)| w.clone()).collect();
    let k = Sl2Subgroup::from_words(&ws, ctx.opts.max_cosets)?;
    checks.push(
        Check::new("the words generate the ρ-image", k.index() == h.index())
            .with_detail(format!("index {} against {}", k.index(), h.index())),
    );
    let results = json!({ "words": words.len(), "rho_index": h.index(), "generated_index": k.index() });
    Ok(Outcome::checks(inputs, results, checks))
}

fn transpose(m: &Mat2) -> Mat2 {
    Mat2::new(m.a().clone(), m.c().clone(), m.b().clone(), m.d().clone()).expect("transpose keeps det 1")
}

fn verify_witness(ctx: &Ctx, inputs: Value) -> CliResult<Outcome> {
    let (w, claimed) = ctx.fixtures.witness()?;
    let m = w.eval();
    let h = ctx.g128_image()?;
    let level = h.level();
    let report = h.is_congruence()?;
    let contained = h.contains(&m);
    let transpose_contained = h.contains(&transpose(&m));
    let mut checks = vec![
        Check::new(format!("{w} evaluates to {claimed}"), m == claimed).with_detail(format!("got {m}")),
        Check::new("det = 1", m.det() == 1.into()),
        Check::new(format!("≡ I mod {level}"), m.is_identity_mod(level)),
        Check::new("rejected by membership", !contained).with_detail(format!(
            "the matrix is {}in the ρ-image; its transpose is {}in it",
            if contained { "" } else { "not " },
            if transpose_contained { "" } else { "not " }
        )),
    ];
    if let Some(x) = &report.witness {
        checks.push(Check::new(
            format!("computed witness {x} is ≡ I mod {level} and rejected"),
            x.is_identity_mod(level) && !h.contains(x),
        ));
    }
    let results = json!({
        "word": w.to_string(),
        "matrix": m,
        "level": level,
        "rho_index": h.index(),
        "is_congruence": report.is_congruence,
        "contained": contained,
        "transpose_contained": transpose_contained,
        "computed_witness": report.witness,
    });
    Ok(Outcome::checks(inputs, results, checks))
}

fn hashes(f: &Fixtures) -> BTreeMap<&'static str, String> {
    f.files().iter().map(|(name, text)| (*name, hex::encode(Sha256::digest(text.as_bytes())))).collect()
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ({})", r.command, if r.passed { "ok" } else { "FAILED" });
    if let Value::Object(m) = &r.inputs {
        for (k, v) in m {
            let _ = writeln!(out, "  {k}: {}", scalar(v));
        }
    }
    render_value(&mut out, "", &r.results);
    for c in &r.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        let _ = match &c.detail {
            Some(d) => writeln!(out, "  [{mark}] {} ({d})", c.name),
            None => writeln!(out, "  [{mark}] {}", c.name),
        };
    }
    let _ = writeln!(out, "  elapsed: {:.1} ms", r.timing.elapsed_ms);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_value(out: &mut String, prefix: &str, v: &Value) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                match v {
                    Value::Object(_) => render_value(out, &key, v),
                    _ => {
                        let _ = writeln!(out, "  {key}: {}", scalar(v));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "  {}", scalar(other));
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    let fixtures = match &cli.opts.fixtures {
        Some(dir) => Fixtures::load(dir).map_err(|e| CliError::Io(format!("reading fixtures from {}: {e}", dir.display())))?,
        None => Fixtures::default(),
    };
    let ctx = Ctx { opts: cli.opts, fixtures };
    let start = Instant::now();
    let (command, outcome) = match &cli.command {
        Command::Index(a) => ("index", cmd_index(&ctx, a)?),
        Command::Congruence(a) => ("congruence", cmd_congruence(&ctx, a)?),
        Command::Verify { name } => ("verify", cmd_verify(&ctx, name)?),
        Command::Census { group } => ("census", cmd_census(&ctx, group)?),
        Command::Conjecture { p, q } => ("conjecture", cmd_conjecture(&ctx, *p, *q)?),
    };
    let report = Report {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        command: command.to_string(),
        inputs: outcome.inputs,
        results: outcome.results,
        checks: outcome.checks,
        passed: outcome.passed,
        fixtures: hashes(&ctx.fixtures),
        timing: Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 },
    };
    let text = if ctx.opts.text {
        render_text(&report)
    } else {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
