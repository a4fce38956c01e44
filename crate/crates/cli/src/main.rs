//! `setfam`: command-line front end for the set-family toolkit.
//!
//! Every command reads and writes JSON; `-` stands for stdin or stdout.
//! Exit codes: 0 success, 1 predicate false or violation found,
//! 2 usage or validation error, 3 resource cap or time limit.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use setfam::battery::{run_suite, BatteryConfig, Suite};
use setfam::bounds::{self, BoundReport};
use setfam::search::{self, diametral_overflow, overflow_even_of, overflow_odd_of, verify_hilton, Reduction};
use setfam::{transforms, walks, BigRational, Construction, Objective, SearchCertificate, SearchOptions};
use setfam::{SetFamily, SubsetMask};

#[derive(Parser, Debug)]
#[command(name = "setfam", version, about = "Exact tools for extremal set families")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named family.
    Construct(ConstructArgs),
    /// Test a predicate on a family file.
    Check(CheckArgs),
    /// Apply a compression or set operation to a family file.
    Transform(TransformArgs),
    /// Overflow of a family against the Katona family or the best ball.
    Overflow(OverflowArgs),
    /// Lattice-walk tools.
    Walks {
        #[command(subcommand)]
        command: WalksCommand,
    },
    /// Evaluate a named bound or inequality.
    Bound(BoundArgs),
    /// Solve an extremal problem exactly and write a certificate.
    Search(SearchArgs),
    /// Run a verification battery.
    #[command(long_about = VERIFY_HELP)]
    Verify(VerifyArgs),
    /// Re-check a search certificate independently of the search.
    Recheck {
        /// Certificate file.
        #[arg(default_value = "-")]
        certificate: PathBuf,
    },
}

const VERIFY_HELP: &str = "Run a verification battery and report every violation.

Grids:
  hilton        every (n, a, b) with n > a + b and C(n,a) + C(n,b) <= 22;
                all cross-intersecting pairs enumerated
  facts         --samples random families with 2 <= n <= 8: shifts preserve size,
                layers, t-intersection, u-union and cross status; make-initial is
                initial; walk hits and prefix majorities for initial families;
                layer facts for u-union families; complement duality.
                Down-shift facts: all family pairs for n <= 3, restricted
                universes at n = 4, samples up to n = 8; ball images for n <= 6,
                u <= 4, every center and element; overflow equals diametral
                overflow on --samples/10 + 1 random complexes with n <= 8
  sperner       --samples random cross-intersecting pairs and --samples random
                uniform families (shadow bound), n <= 8
  reflection    reflection count against brute force for n <= --max-n,
                0 <= k <= n, -4 <= t <= 4, 0 <= a, b <= 3 (valid cells only)
  katona-small  exhaustive max u-union and max diameter for 2 <= u < n <= --max-n,
                with maximizer counts

Exit status is 1 if any check fails.";

#[derive(Args, Debug)]
struct ConstructArgs {
    /// katona, katona-star, katona-x, full-star, hilton-milner, triangle,
    /// b-family, d-even, d-2r, d-odd5, g-family, ball, lex-segment
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    m: Option<u64>,
    /// Ball center, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    center: Option<Vec<usize>>,
    #[arg(long)]
    axis: Option<usize>,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    Intersecting,
    TIntersecting,
    UUnion,
    Diameter,
    Complex,
    Initial,
    Uniform,
    CrossTIntersecting,
    WalksHit,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum)]
    pred: Predicate,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    u: Option<usize>,
    /// Family file.
    #[arg(short, long, default_value = "-")]
    input: PathBuf,
    /// Second family, for cross predicates.
    #[arg(long)]
    other: Option<PathBuf>,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransformOp {
    ShiftInitial,
    DownshiftComplex,
    Complement,
    Closure,
    Translate,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(value_enum)]
    op: TransformOp,
    /// Offset for `translate`.
    #[arg(long)]
    p: Option<usize>,
    #[arg(short, long, default_value = "-")]
    input: PathBuf,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
    /// Also write the operator log (shift-initial, downshift-complex).
    #[arg(long)]
    log: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OverflowArgs {
    #[arg(long)]
    u: usize,
    /// Best ball instead of the Katona family.
    #[arg(long)]
    diametral: bool,
    #[arg(short, long, default_value = "-")]
    input: PathBuf,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

#[derive(Subcommand, Debug)]
enum WalksCommand {
    /// Walks from (a, b) with n steps, k of them up, that touch y = x + t.
    Count {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, default_value_t = 0)]
        a: i64,
        #[arg(long, default_value_t = 0)]
        b: i64,
        /// Also count by enumeration and compare.
        #[arg(long)]
        brute: bool,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Grid points of the walk of one set.
    Trace {
        #[arg(long)]
        n: usize,
        /// The set, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<i64>,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Whether the walk of every member touches y = x + t.
    VerifyHits {
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(short, long, default_value = "-")]
        input: PathBuf,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundName {
    Katona,
    Ekr,
    HiltonMilner,
    Overflow,
    UpperLayer,
    Diversity,
    UniversalLayer,
    ImprovedLayer,
    WalkGap,
    WalkSkip,
    KeyRatio,
    DEvenOverflow,
    DEvenGap,
    DEvenGapClosed,
    D2rGap,
    D2rGapReduced,
    DOdd5Gap,
    Quintic,
    Hilton,
    Sperner,
    Shadow,
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(value_enum)]
    name: BoundName,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    u: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    l: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    r: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    /// Rational such as `11/10`.
    #[arg(long)]
    c: Option<String>,
    /// Shadow level.
    #[arg(long)]
    level: Option<usize>,
    #[arg(short, long)]
    input: Option<PathBuf>,
    #[arg(long)]
    other: Option<PathBuf>,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// max-union-size, max-diameter-size, overflow-even, overflow-odd,
    /// upper-layers, diversity, diametral-overflow
    #[arg(long)]
    objective: String,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    u: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Seconds; a best-so-far certificate is written when it expires.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Search initial complexes only (true) or all families (false).
    #[arg(long)]
    restrict: Option<bool>,
    /// Disable filters and branch bounds.
    #[arg(long)]
    no_prune: bool,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// hilton, facts, sperner, reflection, katona-small
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    /// Largest n for the reflection and katona-small grids.
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

/// How a command finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    False,
    Limit,
}

impl Status {
    fn holds(h: bool) -> Status {
        if h {
            Status::Ok
        } else {
            Status::False
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<setfam::Error>() {
        Some(setfam::Error::CapExceeded(_) | setfam::Error::GroundSetTooLarge { .. }) => 3,
        _ => 2,
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
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::False) => ExitCode::from(1),
        Ok(Status::Limit) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let out = Out { format: cli.format };
    match cli.command {
        Command::Construct(a) => construct(&out, a),
        Command::Check(a) => check(&out, a),
        Command::Transform(a) => transform(&out, a),
        Command::Overflow(a) => overflow(&out, a),
        Command::Walks { command } => walks_cmd(&out, command),
        Command::Bound(a) => bound(&out, a),
        Command::Search(a) => search_cmd(&out, a),
        Command::Verify(a) => verify(&out, a),
        Command::Recheck { certificate } => {
            let text = read_input(&certificate)?;
            let cert = SearchCertificate::from_json_str(&text)?;
            let holds = search::recheck(&cert);
            out.write(&PathBuf::from("-"), &json!({ "objective": cert.objective, "holds": holds }))?;
            Ok(Status::holds(holds))
        }
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_family(path: &PathBuf) -> anyhow::Result<SetFamily> {
    let text = read_input(path)?;
    Ok(SetFamily::from_json_str(&text)?)
}

struct Out {
    format: Format,
}

impl Out {
    fn write<T: Serialize>(&self, path: &PathBuf, value: &T) -> anyhow::Result<()> {
        let text = match self.format {
            Format::Json => serde_json::to_string(value)? + "\n",
            Format::Table => table(&serde_json::to_value(value)?),
        };
        if path.as_os_str() == "-" {
            io::stdout().lock().write_all(text.as_bytes())?;
        } else {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }
}

/// Plain rendering: one `key  value` line per field, sets as `{1,2}`.
fn table(v: &Value) -> String {
    fn cell(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(items) if items.iter().all(Value::is_number) => {
                let inner: Vec<String> = items.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            }
            Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
            Value::Object(m) => m
                .iter()
                .map(|(k, v)| format!("{k}={}", cell(v)))
                .collect::<Vec<_>>()
                .join(" "),
            other => other.to_string(),
        }
    }
    match v {
        Value::Object(m) => {
            let width = m.keys().map(String::len).max().unwrap_or(0);
            m.iter().map(|(k, v)| format!("{k:width$}  {}\n", cell(v))).collect()
        }
        other => cell(other) + "\n",
    }
}

fn need<T: Copy>(v: Option<T>, name: &str) -> anyhow::Result<T> {
    v.ok_or_else(|| anyhow!("missing --{name}"))
}

fn to_usize(v: i64, name: &str) -> anyhow::Result<usize> {
    usize::try_from(v).map_err(|_| anyhow!("--{name} must be nonnegative, got {v}"))
}

fn construct(out: &Out, a: ConstructArgs) -> anyhow::Result<Status> {
    let mut recipe = serde_json::Map::new();
    recipe.insert("name".into(), json!(a.family.replace('-', "_")));
    recipe.insert("n".into(), json!(a.n));
    for (key, v) in [("u", a.u), ("k", a.k), ("t", a.t), ("d", a.d), ("r", a.r), ("x", a.x), ("axis", a.axis)] {
        if let Some(v) = v {
            recipe.insert(key.into(), json!(v));
        }
    }
    if let Some(m) = a.m {
        recipe.insert("m".into(), json!(m));
    }
    if let Some(c) = a.center {
        recipe.insert("center".into(), json!(c));
    }
    let recipe: Construction =
        serde_json::from_value(Value::Object(recipe)).map_err(|e| setfam::Error::InvalidParameter(e.to_string()))?;
    let family = recipe.build()?;
    out.write(&a.output, &family)?;
    Ok(Status::Ok)
}

fn check(out: &Out, a: CheckArgs) -> anyhow::Result<Status> {
    let f = read_family(&a.input)?;
    let mut params = BTreeMap::new();
    let holds = match a.pred {
        Predicate::Intersecting => f.is_t_intersecting(1),
        Predicate::TIntersecting => {
            let t = need(a.t, "t")?;
            params.insert("t", t.to_string());
            f.is_t_intersecting(to_usize(t, "t")?)
        }
        Predicate::UUnion => {
            let u = need(a.u, "u")?;
            params.insert("u", u.to_string());
            f.is_u_union(u)
        }
        Predicate::Diameter => {
            let u = need(a.u, "u")?;
            params.insert("u", u.to_string());
            f.diameter() <= u
        }
        Predicate::Complex => f.is_complex(),
        Predicate::Initial => transforms::is_initial(&f),
        Predicate::Uniform => f.uniform_size().is_ok(),
        Predicate::CrossTIntersecting => {
            let t = need(a.t, "t")?;
            params.insert("t", t.to_string());
            let other = read_family(&a.other.ok_or_else(|| anyhow!("missing --other"))?)?;
            setfam::is_cross_t_intersecting(&f, &other, to_usize(t, "t")?)?
        }
        Predicate::WalksHit => {
            let t = need(a.t, "t")?;
            params.insert("t", t.to_string());
            walks::family_walks_hit(&f, t)
        }
    };
    let pred = a.pred.to_possible_value().expect("no skipped variants");
    out.write(&a.output, &json!({ "pred": pred.get_name(), "params": params, "holds": holds }))?;
    Ok(Status::holds(holds))
}

fn transform(out: &Out, a: TransformArgs) -> anyhow::Result<Status> {
    let f = read_family(&a.input)?;
    let (result, log) = match a.op {
        TransformOp::ShiftInitial => {
            let (g, log) = transforms::make_initial(&f);
            (g, Some(log))
        }
        TransformOp::DownshiftComplex => {
            let (g, log) = transforms::downshift_to_complex(&f);
            (g, Some(log))
        }
        TransformOp::Complement => (f.complement(), None),
        TransformOp::Closure => (f.down_closure(), None),
        TransformOp::Translate => (transforms::left_translate(&f, need(a.p, "p")?)?, None),
    };
    out.write(&a.output, &result)?;
    if let Some(path) = a.log {
        let log = log.ok_or_else(|| anyhow!("--log applies to shift-initial and downshift-complex only"))?;
        out.write(&path, &log)?;
    }
    Ok(Status::Ok)
}

fn overflow(out: &Out, a: OverflowArgs) -> anyhow::Result<Status> {
    let f = read_family(&a.input)?;
    let value = if a.diametral {
        serde_json::to_value(diametral_overflow(&f, a.u)?)?
    } else if a.u.is_multiple_of(2) {
        let v = overflow_even_of(&f, a.u / 2)?;
        json!({ "u": a.u.to_string(), "value": v.to_string() })
    } else {
        let (v, x) = overflow_odd_of(&f, a.u / 2)?;
        json!({ "u": a.u.to_string(), "value": v.to_string(), "axis": x })
    };
    out.write(&a.output, &value)?;
    Ok(Status::Ok)
}

fn walks_cmd(out: &Out, cmd: WalksCommand) -> anyhow::Result<Status> {
    match cmd {
        WalksCommand::Count { n, k, t, a, b, brute, output } => {
            let count = walks::reflection_count(n, k, t, a, b)?;
            let mut v = json!({ "n": n.to_string(), "k": k.to_string(), "t": t.to_string(),
                                "a": a.to_string(), "b": b.to_string(), "count": count.to_string() });
            let mut status = Status::Ok;
            if brute {
                let bc = walks::brute_hit_count(n, k, t, a, b)?;
                v["brute"] = json!(bc.to_string());
                v["holds"] = json!(bc == count);
                status = Status::holds(bc == count);
            }
            out.write(&output, &v)?;
            Ok(status)
        }
        WalksCommand::Trace { n, set, output } => {
            let mask = SubsetMask::try_from_elements(n, &set)?;
            let trace = walks::walk_of_set(mask, n)?;
            out.write(&output, &json!({ "set": mask, "points": trace.points, "endpoint": trace.endpoint() }))?;
            Ok(Status::Ok)
        }
        WalksCommand::VerifyHits { t, input, output } => {
            let f = read_family(&input)?;
            let misses: Vec<SubsetMask> = f.iter().copied().filter(|&m| !walks::hits_line(m, f.n(), t)).collect();
            let holds = misses.is_empty();
            out.write(&output, &json!({ "t": t.to_string(), "holds": holds, "misses": misses }))?;
            Ok(Status::holds(holds))
        }
    }
}

fn value_report(name: &str, params: &[(&str, i64)], value: impl ToString) -> Value {
    let params: BTreeMap<&str, String> = params.iter().map(|(k, v)| (*k, v.to_string())).collect();
    json!({ "name": name, "params": params, "value": value.to_string() })
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn bound(out: &Out, a: BoundArgs) -> anyhow::Result<Status> {
    use BoundName::*;
    let g = |v: Option<i64>, name: &str| need(v, name);
    let report = |r: BoundReport| -> anyhow::Result<(Value, Option<bool>)> {
        let holds = r.holds;
        Ok((serde_json::to_value(&r)?, holds))
    };
    let plain = |v: Value| -> anyhow::Result<(Value, Option<bool>)> { Ok((v, None)) };
    let (value, holds) = match a.name {
        Katona => {
            let (n, u) = (g(a.n, "n")?, g(a.u, "u")?);
            plain(value_report("katona", &[("n", n), ("u", u)], bounds::katona_bound(n, u)?))?
        }
        Ekr => {
            let (n, k, t) = (g(a.n, "n")?, g(a.k, "k")?, g(a.t, "t")?);
            plain(value_report("ekr", &[("n", n), ("k", k), ("t", t)], bounds::ekr_bound(n, k, t)?))?
        }
        HiltonMilner => {
            let (n, k) = (g(a.n, "n")?, g(a.k, "k")?);
            plain(value_report("hilton_milner", &[("n", n), ("k", k)], bounds::hm_bound(n, k)?))?
        }
        Overflow => report(bounds::overflow_bound(g(a.n, "n")?, g(a.u, "u")?)?)?,
        UpperLayer => report(bounds::upper_layer_bound(g(a.n, "n")?, g(a.u, "u")?)?)?,
        Diversity => report(bounds::diversity_formula(g(a.n, "n")?, g(a.k, "k")?)?)?,
        UniversalLayer => {
            let (n, l) = (g(a.n, "n")?, g(a.l, "l")?);
            plain(value_report("universal_layer", &[("n", n), ("l", l)], bounds::universal_layer_bound(n, l)))?
        }
        ImprovedLayer => report(bounds::improved_layer_bound(g(a.n, "n")?, g(a.t, "t")?, g(a.l, "l")?)?)?,
        WalkGap => {
            let (n, k, p) = (g(a.n, "n")?, g(a.k, "k")?, g(a.p, "p")?);
            plain(value_report("walk_gap", &[("n", n), ("k", k), ("p", p)], bounds::walk_gap_bound(n, k, p)?))?
        }
        WalkSkip => {
            let (n, k, p) = (g(a.n, "n")?, g(a.k, "k")?, g(a.p, "p")?);
            plain(value_report("walk_skip", &[("n", n), ("k", k), ("p", p)], bounds::walk_skip_bound(n, k, p)?))?
        }
        KeyRatio => report(bounds::key_ratio_holds(g(a.n, "n")?, g(a.r, "r")?, g(a.a, "a")?, g(a.b, "b")?)?)?,
        DEvenOverflow => {
            let (n, d) = (g(a.n, "n")?, g(a.d, "d")?);
            plain(value_report("d_even_overflow", &[("n", n), ("d", d)], bounds::d_even_overflow(n, d)?))?
        }
        DEvenGap => {
            let (n, d) = (g(a.n, "n")?, g(a.d, "d")?);
            plain(value_report("d_even_gap", &[("n", n), ("d", d)], bounds::d_even_gap(n, d)?))?
        }
        DEvenGapClosed => {
            let (n, d) = (g(a.n, "n")?, g(a.d, "d")?);
            let q = bounds::d_even_gap_closed_form(n, d)?;
            plain(value_report("d_even_gap_closed", &[("n", n), ("d", d)], rational_string(&q)))?
        }
        D2rGap => {
            let (n, r) = (g(a.n, "n")?, g(a.r, "r")?);
            plain(value_report("d2r_gap", &[("n", n), ("r", r)], bounds::d2r_gap(n, r)?))?
        }
        D2rGapReduced => {
            let (n, r) = (g(a.n, "n")?, g(a.r, "r")?);
            plain(value_report("d2r_gap_reduced", &[("n", n), ("r", r)], bounds::d2r_gap_reduced(n, r)?))?
        }
        DOdd5Gap => {
            let (n, r) = (g(a.n, "n")?, g(a.r, "r")?);
            plain(value_report("d_odd5_gap", &[("n", n), ("r", r)], bounds::d_odd5_gap(n, r)?))?
        }
        Quintic => {
            let text = a.c.ok_or_else(|| anyhow!("missing --c"))?;
            let c: BigRational = text
                .parse()
                .map_err(|_| setfam::Error::InvalidParameter(format!("not a rational: {text:?}")))?;
            let sign = match bounds::crossover_quintic(&c)? {
                std::cmp::Ordering::Greater => "positive",
                std::cmp::Ordering::Less => "negative",
                std::cmp::Ordering::Equal => "zero",
            };
            plain(json!({ "name": "crossover_quintic", "c": rational_string(&c), "sign": sign }))?
        }
        Hilton => {
            let (n, x, y) = (g(a.n, "n")?, g(a.a, "a")?, g(a.b, "b")?);
            report(verify_hilton(to_usize(n, "n")?, to_usize(x, "a")?, to_usize(y, "b")?)?)?
        }
        Sperner => {
            let f = read_family(&a.input.ok_or_else(|| anyhow!("missing --input"))?)?;
            let h = read_family(&a.other.ok_or_else(|| anyhow!("missing --other"))?)?;
            report(bounds::sperner_cross_check(&f, &h)?)?
        }
        Shadow => {
            let f = read_family(&a.input.ok_or_else(|| anyhow!("missing --input"))?)?;
            report(bounds::shadow_bound_check(&f, need(a.level, "level")?)?)?
        }
    };
    out.write(&a.output, &value)?;
    Ok(holds.map_or(Status::Ok, Status::holds))
}

fn search_cmd(out: &Out, a: SearchArgs) -> anyhow::Result<Status> {
    let name = a.objective.replace('-', "_");
    let key = Objective::parameter_name(&name)
        .ok_or_else(|| setfam::Error::InvalidParameter(format!("unknown objective {:?}", a.objective)))?;
    let mut params = BTreeMap::from([("n".to_string(), a.n)]);
    for (k, v) in [("u", a.u), ("d", a.d), ("k", a.k)] {
        if let Some(v) = v {
            params.insert(k.to_string(), v);
        }
    }
    if !params.contains_key(key) {
        return Err(setfam::Error::InvalidParameter(format!("{} needs --{key}", a.objective)).into());
    }
    let objective = Objective::from_parts(&name, &params)?;
    let time_limit = match a.time_limit {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(setfam::Error::InvalidParameter(format!("time limit {s} must be positive")).into()),
        None => None,
    };
    let options = SearchOptions {
        time_limit,
        worker_count: a.workers.max(1),
        restrict_to_initial_complexes: a.restrict,
        prune: !a.no_prune,
    };
    let cert = search::maximize(&objective, &options)?;
    out.write(&a.output, &cert)?;
    // Without a time-out, only a restricted search of a non-invariant
    // objective leaves the certificate unproven.
    let timed_out =
        !cert.proven_optimal && (cert.reduction == Reduction::None || objective.is_shift_invariant());
    Ok(if timed_out { Status::Limit } else { Status::Ok })
}

fn verify(out: &Out, a: VerifyArgs) -> anyhow::Result<Status> {
    let suite = Suite::parse(&a.suite)?;
    let defaults = BatteryConfig::default();
    let max_n = a.max_n.unwrap_or(match suite {
        Suite::Reflection => 12,
        _ => defaults.max_n,
    });
    let cfg = BatteryConfig { seed: a.seed, samples: a.samples, max_n };
    let report = run_suite(suite, &cfg)?;
    out.write(&a.output, &report)?;
    Ok(Status::holds(report.passed()))
}
