//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code:
//!
//! * `0` success
//! * `1` domain error (unreadable or malformed input, invalid topology)
//! * `2` usage error
//! * `3` two computation paths disagreed

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use fintop::enumeration::{self, HARD_MAX_ENUMERATION_N, MAX_ENUMERATION_N};
use fintop::format::{self, Style};
use fintop::maps::{self, Multifunction, PointFunction};
use fintop::operators::{self, definitional};
use fintop::quotient::{self, CotsQuotient};
use fintop::{properties, PointSet, Space};

use render::{Checks, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fintop", version, about = "Compute with finite topological spaces")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a space file and check the topology axioms.
    Validate {
        file: PathBuf,
        /// Re-emit the space in the given form.
        #[arg(long, value_enum)]
        emit: Option<EmitStyle>,
    },
    /// Separation, dimension and connectedness report.
    Info { file: PathBuf },
    /// Operators applied to a subset, and its classification.
    Set(SetArgs),
    /// Continuity and openness classes of a function.
    Map(MapArgs),
    /// Semicontinuity of a multifunction.
    Multi(MultiArgs),
    /// Multifunction induced on a quotient of [0, 1] by a piecewise-linear map.
    Quotient(QuotientArgs),
    /// Enumerate topologies on n points.
    Enumerate(EnumerateArgs),
    /// DOT rendering of the specialization order.
    Hasse { file: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmitStyle {
    Opens,
    Minbase,
    Order,
}

impl From<EmitStyle> for Style {
    fn from(s: EmitStyle) -> Self {
        match s {
            EmitStyle::Opens => Style::Opens,
            EmitStyle::Minbase => Style::MinBase,
            EmitStyle::Order => Style::Order,
        }
    }
}

#[derive(Debug, Args)]
struct SetArgs {
    file: PathBuf,
    /// Subset literal, e.g. "{y z}".
    #[arg(long = "set")]
    set: String,
    /// Comma-separated operators: cl, int, clint, intcl, boundary, exterior, derived.
    #[arg(long, value_delimiter = ',')]
    show: Vec<String>,
}

#[derive(Debug, Args)]
struct MapArgs {
    source: PathBuf,
    target: PathBuf,
    /// Images, e.g. "x:x y:z z:y".
    #[arg(long = "map")]
    map: String,
}

#[derive(Debug, Args)]
struct MultiArgs {
    source: PathBuf,
    target: PathBuf,
    /// Value sets, e.g. "a:{a b} b:{a}".
    #[arg(long = "map")]
    map: String,
    /// Comma-separated checks: usc, lsc.
    #[arg(long, value_delimiter = ',')]
    check: Vec<String>,
}

#[derive(Debug, Args)]
struct QuotientArgs {
    /// Cut points, e.g. "0,1/2,1".
    #[arg(long)]
    cuts: String,
    /// Breakpoint:value pairs, e.g. "0:3/4 1/4:1/4 1:1/2".
    #[arg(long)]
    pwl: String,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Keep only T0 spaces.
    #[arg(long)]
    t0: bool,
    /// Emit one representative per homeomorphism class.
    #[arg(long)]
    classes: bool,
    /// Comma-separated predicates: dim=K, height=K, t0, t1, thalf,
    /// submaximal, connected, cots, discrete, indiscrete. Prefix `!` negates.
    #[arg(long, value_delimiter = ',')]
    filter: Vec<String>,
    /// Permit n above 5 (up to 8).
    #[arg(long)]
    allow_large: bool,
}

enum Failure {
    Usage(String),
    Domain(String),
}

type CmdResult = Result<Report, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Validate { file, emit } => validate(file, *emit),
        Command::Info { file } => info(file),
        Command::Set(a) => set(a),
        Command::Map(a) => map(a),
        Command::Multi(a) => multi(a),
        Command::Quotient(a) => quotient_cmd(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Hasse { file } => hasse(file),
    };
    match result {
        Ok(report) => {
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&report.json).expect("report serializes");
                s.push('\n');
                s
            } else {
                report.text
            };
            let _ = out.write_all(text.as_bytes());
            if report.disagreements.is_empty() {
                EXIT_OK
            } else {
                for d in &report.disagreements {
                    let _ = writeln!(err, "internal error: computation paths disagree on {d}");
                }
                EXIT_DISAGREE
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn load(path: &Path) -> Result<Space, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    format::parse_space(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn literal_error(what: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Domain(format!("{what}: {e}"))
}

fn validate(file: &Path, emit: Option<EmitStyle>) -> CmdResult {
    let space = load(file)?;
    let opens = space.open_family().map(|f| f.len());
    let mut text = match opens {
        Some(k) => format!("valid: {} points, {} open sets\n", space.n(), k),
        None => format!("valid: {} points\n", space.n()),
    };
    let emitted = emit.map(|s| format::write_space(&space, s.into()));
    if let Some(e) = &emitted {
        text.push_str(e);
    }
    let json = serde_json::json!({
        "valid": true,
        "points": space.labels(),
        "open_sets": opens,
        "minimal_base": render::labelled_sets(&space, space.nbhds()),
        "emitted": emitted,
    });
    Ok(Report::new(text, json))
}

fn info(file: &Path) -> CmdResult {
    let space = load(file)?;
    let r = properties::report(&space);
    let mut checks = Checks::new(&space);
    let family = space.open_family();

    let open_def = family.map(properties::open_points_definitional);
    let closed_def = family.map(properties::closed_points_definitional);
    checks.set("open points", r.open_points, open_def);
    checks.set("closed points", r.closed_points, closed_def);
    checks.boolean(
        "T½",
        r.t_half,
        open_def
            .zip(closed_def)
            .map(|(o, c)| (o | c) == space.universe()),
    );
    checks.sets(
        "components",
        &r.components,
        family.map(properties::connected_components_by_clopens),
    );
    let brute = (space.n() <= 20).then(|| properties::is_submaximal(&space));
    checks.boolean("submaximal", properties::is_submaximal_structural(&space), brute);
    if let Some(h) = r.height {
        checks.int("dim", r.dim_inductive as i64, Some(h as i64 - 1));
    }

    let yn = render::yes_no;
    let mut text = String::new();
    text.push_str(&format!("points: {}\n", space.labels().join(" ")));
    text.push_str(&format!("T0: {}\n", yn(r.t0)));
    text.push_str(&format!("T1: {}\n", yn(r.t1)));
    text.push_str(&format!("T½: {}\n", yn(r.t_half)));
    text.push_str(&format!("discrete: {}\n", yn(r.discrete)));
    text.push_str(&format!("indiscrete: {}\n", yn(r.indiscrete)));
    text.push_str(&format!("submaximal: {}\n", yn(r.submaximal)));
    text.push_str(&format!("connected: {}\n", yn(r.connected)));
    text.push_str(&format!("COTS: {}\n", yn(r.cots)));
    text.push_str(&format!("dim: {}\n", r.dim_inductive));
    match r.height {
        Some(h) => text.push_str(&format!("height: {h}\n")),
        None => text.push_str("height: n/a (not T0)\n"),
    }
    text.push_str(&format!("open points: {}\n", space.format_set(r.open_points)));
    text.push_str(&format!("closed points: {}\n", space.format_set(r.closed_points)));
    let comps: Vec<String> = r.components.iter().map(|&c| space.format_set(c)).collect();
    text.push_str(&format!("components: {}\n", comps.join(" ")));
    text.push_str(&checks.text());

    let json = serde_json::json!({
        "points": space.labels(),
        "report": {
            "n": r.n,
            "t0": r.t0,
            "t1": r.t1,
            "t_half": r.t_half,
            "discrete": r.discrete,
            "indiscrete": r.indiscrete,
            "submaximal": r.submaximal,
            "connected": r.connected,
            "cots": r.cots,
            "dim_inductive": r.dim_inductive,
            "height": r.height,
            "open_points": render::labels_of(&space, r.open_points),
            "closed_points": render::labels_of(&space, r.closed_points),
            "isolated_points": render::labels_of(&space, r.isolated_points),
            "components": render::labelled_sets(&space, &r.components),
        },
        "checks": checks.json(),
    });
    Ok(Report::new(text, json).with_disagreements(checks.disagreements()))
}

const SET_OPS: [&str; 7] = ["cl", "int", "clint", "intcl", "boundary", "exterior", "derived"];

fn set(args: &SetArgs) -> CmdResult {
    let space = load(&args.file)?;
    let a = format::parse_set(&space, &args.set).map_err(|e| literal_error("--set", e))?;
    let shows: Vec<&str> = if args.show.is_empty() {
        SET_OPS.to_vec()
    } else {
        args.show.iter().map(|s| s.trim()).collect()
    };
    if let Some(bad) = shows.iter().find(|s| !SET_OPS.contains(s)) {
        return Err(Failure::Usage(format!(
            "unknown operator `{bad}`, expected one of {}",
            SET_OPS.join(", ")
        )));
    }
    let family = space.open_family();
    let t0 = properties::is_t0(&space);
    let mut checks = Checks::new(&space);
    let mut lines = String::new();
    let mut values = serde_json::Map::new();
    for op in &shows {
        let (name, order, def) = match *op {
            "cl" => ("cl", operators::closure(&space, a), family.map(|f| definitional::closure(f, a))),
            "int" => ("int", operators::interior(&space, a), family.map(|f| definitional::interior(f, a))),
            "clint" => (
                "cl int",
                operators::closure_of_interior(&space, a),
                family.map(|f| definitional::closure(f, definitional::interior(f, a))),
            ),
            "intcl" => (
                "int cl",
                operators::interior_of_closure(&space, a),
                family.map(|f| definitional::interior(f, definitional::closure(f, a))),
            ),
            "boundary" => ("boundary", operators::boundary(&space, a), family.map(|f| definitional::boundary(f, a))),
            "exterior" => ("exterior", operators::exterior(&space, a), family.map(|f| definitional::exterior(f, a))),
            _ => ("derived", operators::derived_set(&space, a), family.map(|f| definitional::derived_set(f, a))),
        };
        checks.set(name, order, def);
        if t0 && *op == "clint" {
            checks.set("cl int by maxima", order, Some(operators::closure_of_interior_by_maxima(&space, a)));
        }
        if t0 && *op == "intcl" {
            checks.set("int cl by maxima", order, Some(operators::interior_of_closure_by_maxima(&space, a)));
        }
        lines.push_str(&format!("{name} = {}\n", space.format_set(order)));
        values.insert(op.to_string(), render::labels_of(&space, order).into());
    }
    let class = operators::classify_set(&space, a);
    let class_def = family.map(|f| operators::classify_set_definitional(f, a));
    let class_vals = render::flags(&class);
    let def_vals = class_def.map(|c| render::flags(&c));
    for (i, (flag, v)) in class_vals.iter().enumerate() {
        checks.boolean(flag, *v, def_vals.as_ref().map(|d| d[i].1));
    }

    let mut text = format!("A = {}\n", space.format_set(a));
    text.push_str(&lines);
    let set_flags: Vec<&str> = class_vals.iter().filter(|(_, v)| *v).map(|(k, _)| k.as_str()).collect();
    text.push_str(&format!(
        "classification: {}\n",
        if set_flags.is_empty() { "none".to_string() } else { set_flags.join(", ") }
    ));
    text.push_str(&checks.text());
    let json = serde_json::json!({
        "set": render::labels_of(&space, a),
        "operators": values,
        "classification": class,
        "checks": checks.json(),
    });
    Ok(Report::new(text, json).with_disagreements(checks.disagreements()))
}

fn map(args: &MapArgs) -> CmdResult {
    let src = load(&args.source)?;
    let dst = load(&args.target)?;
    let image = format::parse_point_map(&src, &dst, &args.map).map_err(|e| literal_error("--map", e))?;
    let f = PointFunction::new(&src, &dst, image)
        .map_err(|e| literal_error("--map", e.describe(src.labels())))?;
    let mut checks = Checks::new(&dst);
    let cont = maps::continuity_class(&f);
    let cont_def = maps::continuity_class_definitional(&f).ok();
    let open = maps::openness_class(&f);
    let open_def = maps::openness_class_definitional(&f).ok();
    let cv = render::flags(&cont);
    let cdv = cont_def.as_ref().map(render::flags);
    for (i, (flag, v)) in cv.iter().enumerate() {
        checks.boolean(flag, *v, cdv.as_ref().map(|d| d[i].1));
    }
    let ov = render::flags(&open);
    let odv = open_def.as_ref().map(render::flags);
    for (i, (flag, v)) in ov.iter().enumerate() {
        checks.boolean(&format!("{flag} map"), *v, odv.as_ref().map(|d| d[i].1));
    }
    let closed = maps::is_closed_map(&f);
    let closed_def = src.open_family().zip(dst.open_family()).map(|(sf, df)| {
        sf.closed_sets().all(|c| df.is_closed(f.image_of(c)))
    });
    checks.boolean("closed map", closed, closed_def);
    let theorem = maps::check_open_map_theorem(&f).ok();

    let yn = render::yes_no;
    let mut text = String::new();
    let images: Vec<String> = (0..src.n())
        .map(|x| format!("{}->{}", src.label(x), dst.label(f.apply(x))))
        .collect();
    text.push_str(&format!("f: {}\n", images.join(" ")));
    for (flag, v) in &cv {
        text.push_str(&format!("{}: {}\n", flag.replace('_', " "), yn(*v)));
    }
    for (flag, v) in &ov {
        text.push_str(&format!("{} map: {}\n", flag.replace('_', " "), yn(*v)));
    }
    text.push_str(&format!("closed map: {}\n", yn(closed)));
    let failures: Vec<&str> = maps::continuity_failures(&f).into_iter().map(|x| src.label(x)).collect();
    if !failures.is_empty() {
        text.push_str(&format!("f(U_x) not within U_f(x) at: {}\n", failures.join(" ")));
    }
    if let Some(t) = &theorem {
        text.push_str(&format!(
            "open-map criterion: hypotheses {} (continuous {}, closed fibres singleton {}, closure condition {}), open {}\n",
            yn(t.hypotheses_hold),
            yn(t.continuous),
            yn(t.closed_fibres_singleton),
            yn(t.closure_condition),
            yn(t.is_open)
        ));
    }
    text.push_str(&checks.text());
    let json = serde_json::json!({
        "map": (0..src.n()).map(|x| (src.label(x).to_string(), dst.label(f.apply(x)).to_string())).collect::<std::collections::BTreeMap<_, _>>(),
        "continuity": cont,
        "openness": open,
        "closed_map": closed,
        "open_map_criterion": theorem,
        "checks": checks.json(),
    });
    Ok(Report::new(text, json).with_disagreements(checks.disagreements()))
}

fn semicontinuity(f: &Multifunction, want_usc: bool, want_lsc: bool, checks: &mut Checks) -> (String, serde_json::Value) {
    let src = f.source();
    let dst = f.target();
    let yn = render::yes_no;
    let mut text = String::new();
    let mut json = serde_json::Map::new();
    if want_usc {
        let fails = maps::usc_failures(f);
        let pts: PointSet = fails.iter().map(|w| w.point).collect();
        let def = maps::usc_failure_points_definitional(f).ok();
        checks.set("usc failure points", pts, def);
        text.push_str(&format!("usc: {}", yn(fails.is_empty())));
        if let Some(w) = fails.first() {
            text.push_str(&format!(
                " (witness {}: F(U_{}) = {} not within {})",
                src.label(w.point),
                src.label(w.point),
                dst.format_set(w.image_of_nbhd),
                dst.format_set(w.bound)
            ));
        }
        text.push('\n');
        let witnesses: Vec<serde_json::Value> = fails
            .iter()
            .map(|w| {
                serde_json::json!({
                    "point": src.label(w.point),
                    "image_of_nbhd": render::labels_of(dst, w.image_of_nbhd),
                    "bound": render::labels_of(dst, w.bound),
                })
            })
            .collect();
        json.insert("usc".into(), serde_json::json!({"holds": fails.is_empty(), "witnesses": witnesses}));
    }
    if want_lsc {
        let fails = maps::lsc_failures(f);
        let pts: PointSet = fails.iter().map(|w| w.point).collect();
        let def = maps::lsc_failure_points_definitional(f).ok();
        checks.set("lsc failure points", pts, def);
        text.push_str(&format!("lsc: {}", yn(fails.is_empty())));
        if let Some(w) = fails.first() {
            text.push_str(&format!(
                " (witness {}: F({}) misses U_{})",
                src.label(w.point),
                src.label(w.neighbour),
                dst.label(w.value)
            ));
        }
        text.push('\n');
        let witnesses: Vec<serde_json::Value> = fails
            .iter()
            .map(|w| {
                serde_json::json!({
                    "point": src.label(w.point),
                    "neighbour": src.label(w.neighbour),
                    "value": dst.label(w.value),
                })
            })
            .collect();
        json.insert("lsc".into(), serde_json::json!({"holds": fails.is_empty(), "witnesses": witnesses}));
    }
    (text, json.into())
}

fn parse_checks(list: &[String]) -> Result<(bool, bool), Failure> {
    if list.is_empty() {
        return Ok((true, true));
    }
    let (mut usc, mut lsc) = (false, false);
    for c in list {
        match c.trim() {
            "usc" => usc = true,
            "lsc" => lsc = true,
            other => return Err(Failure::Usage(format!("unknown check `{other}`, expected usc or lsc"))),
        }
    }
    Ok((usc, lsc))
}

fn values_text(f: &Multifunction) -> String {
    let parts: Vec<String> = (0..f.source().n())
        .map(|x| format!("{}->{}", f.source().label(x), f.target().format_set(f.value(x))))
        .collect();
    parts.join(" ")
}

fn values_json(f: &Multifunction) -> serde_json::Value {
    (0..f.source().n())
        .map(|x| (f.source().label(x).to_string(), render::labels_of(f.target(), f.value(x)).into()))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn multi(args: &MultiArgs) -> CmdResult {
    let (want_usc, want_lsc) = parse_checks(&args.check)?;
    let src = load(&args.source)?;
    let dst = load(&args.target)?;
    let values = format::parse_multi_map(&src, &dst, &args.map).map_err(|e| literal_error("--map", e))?;
    let f = Multifunction::new(&src, &dst, values)
        .map_err(|e| literal_error("--map", e.describe(src.labels())))?;
    let mut checks = Checks::new(&src);
    let (body, verdicts) = semicontinuity(&f, want_usc, want_lsc, &mut checks);
    let mut text = format!("F: {}\n", values_text(&f));
    text.push_str(&body);
    text.push_str(&checks.text());
    let json = serde_json::json!({
        "values": values_json(&f),
        "verdicts": verdicts,
        "checks": checks.json(),
    });
    Ok(Report::new(text, json).with_disagreements(checks.disagreements()))
}

fn quotient_cmd(args: &QuotientArgs) -> CmdResult {
    let cuts = quotient::parse_cuts(&args.cuts).map_err(|e| literal_error("--cuts", e))?;
    let f = quotient::parse_pwl(&args.pwl).map_err(|e| literal_error("--pwl", e))?;
    let q = CotsQuotient::new(cuts).map_err(|e| literal_error("--cuts", e))?;
    let g = q.induced_multifunction(&f);
    let y = q.space();
    let mut checks = Checks::new(y);
    let (body, verdicts) = semicontinuity(&g, true, true, &mut checks);

    let mut text = String::new();
    text.push_str(&format::write_space(y, Style::MinBase));
    for p in 0..y.n() {
        text.push_str(&format!("fibre {}: {}\n", y.label(p), render::cell(&q.fibre(p))));
    }
    text.push_str(&format!("g: {}\n", values_text(&g)));
    text.push_str(&body);
    let single = g.as_function();
    let continuous = single.as_ref().map(|h| {
        let c = maps::is_continuous(h);
        checks.boolean("continuous", c, maps::is_continuous_definitional(h).ok());
        c
    });
    match continuous {
        Some(c) => text.push_str(&format!("single-valued, continuous: {}\n", render::yes_no(c))),
        None => text.push_str("not single-valued\n"),
    }
    text.push_str(&checks.text());
    let json = serde_json::json!({
        "points": y.labels(),
        "minimal_base": render::labelled_sets(y, y.nbhds()),
        "fibres": (0..y.n()).map(|p| (y.label(p).to_string(), serde_json::Value::from(render::cell(&q.fibre(p))))).collect::<serde_json::Map<_, _>>(),
        "values": values_json(&g),
        "verdicts": verdicts,
        "single_valued_continuous": continuous,
        "checks": checks.json(),
    });
    Ok(Report::new(text, json).with_disagreements(checks.disagreements()))
}

enum Pred {
    Dim(i32),
    Height(usize),
    Flag(fn(&Space) -> bool),
}

fn parse_filter(items: &[String]) -> Result<Vec<(Pred, bool)>, Failure> {
    let mut preds = Vec::new();
    for raw in items {
        let item = raw.trim();
        if item.is_empty() {
            continue;
        }
        let (negate, body) = match item.strip_prefix('!') {
            Some(b) => (true, b),
            None => (false, item),
        };
        let bad = || Failure::Usage(format!("unknown filter `{item}`"));
        let pred = if let Some(v) = body.strip_prefix("dim=") {
            Pred::Dim(v.parse().map_err(|_| bad())?)
        } else if let Some(v) = body.strip_prefix("height=") {
            Pred::Height(v.parse().map_err(|_| bad())?)
        } else {
            let f: fn(&Space) -> bool = match body {
                "t0" => properties::is_t0,
                "t1" => properties::is_t1,
                "thalf" => properties::is_t_half,
                "submaximal" => properties::is_submaximal,
                "connected" => properties::is_connected,
                "cots" => properties::is_cots,
                "discrete" => properties::is_discrete,
                "indiscrete" => properties::is_indiscrete,
                _ => return Err(bad()),
            };
            Pred::Flag(f)
        };
        preds.push((pred, negate));
    }
    Ok(preds)
}

fn matches(space: &Space, preds: &[(Pred, bool)]) -> bool {
    preds.iter().all(|(p, negate)| {
        let v = match p {
            Pred::Dim(d) => properties::dimension_inductive(space) == *d,
            Pred::Height(h) => properties::poset_height(space).ok() == Some(*h),
            Pred::Flag(f) => f(space),
        };
        v != *negate
    })
}

fn enumerate(args: &EnumerateArgs) -> CmdResult {
    let max = if args.allow_large { HARD_MAX_ENUMERATION_N } else { MAX_ENUMERATION_N };
    if args.n == 0 || args.n > max {
        let hint = if args.allow_large { "" } else { " (use --allow-large for up to 8)" };
        return Err(Failure::Usage(format!("--n must be between 1 and {max}{hint}")));
    }
    let mut preds = parse_filter(&args.filter)?;
    if args.t0 {
        preds.push((Pred::Flag(properties::is_t0), false));
    }
    let labeled: Vec<Space> = enumeration::enumerate_labeled_with_limit(args.n, max)
        .map_err(|e| Failure::Usage(e.to_string()))?
        .collect();
    let total_labeled = labeled.len();
    let mut text = String::new();
    let mut blocks = Vec::new();
    let emitted: usize;
    let classes_total;
    if args.classes {
        let classes = enumeration::classify(labeled);
        classes_total = Some(classes.len());
        let kept: Vec<_> = classes.iter().filter(|c| matches(&c.representative, &preds)).collect();
        emitted = kept.len();
        for (i, c) in kept.iter().enumerate() {
            let body = format::write_space(&c.representative, Style::Opens);
            text.push_str(&format!("# class {} ({} labeled)\n{body}\n", i + 1, c.labeled_count));
            blocks.push(serde_json::json!({
                "labeled_count": c.labeled_count,
                "canonical_form": c.form.to_hex(),
                "text": body,
            }));
        }
    } else {
        classes_total = None;
        let kept: Vec<&Space> = labeled.iter().filter(|s| matches(s, &preds)).collect();
        emitted = kept.len();
        for (i, s) in kept.iter().enumerate() {
            let body = format::write_space(s, Style::Opens);
            text.push_str(&format!("# space {}\n{body}\n", i + 1));
            blocks.push(serde_json::json!({ "text": body }));
        }
    }
    let filter_desc = {
        let mut f: Vec<String> = args.filter.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        if args.t0 {
            f.push("t0".into());
        }
        if f.is_empty() { "none".to_string() } else { f.join(",") }
    };
    text.push_str("# summary\n");
    text.push_str(&format!("# {:<3} {:<20} {:>8} {:>8} {:>8}\n", "n", "filter", "labeled", "classes", "emitted"));
    text.push_str(&format!(
        "# {:<3} {:<20} {:>8} {:>8} {:>8}\n",
        args.n,
        filter_desc,
        total_labeled,
        classes_total.map(|c| c.to_string()).unwrap_or_else(|| "-".into()),
        emitted
    ));
    let json = serde_json::json!({
        "n": args.n,
        "filter": filter_desc,
        "labeled_total": total_labeled,
        "classes_total": classes_total,
        "emitted": emitted,
        "spaces": blocks,
    });
    Ok(Report::new(text, json))
}

fn hasse(file: &Path) -> CmdResult {
    let space = load(file)?;
    let dot = fintop::hasse_dot(&space);
    let json = serde_json::json!({ "dot": dot });
    Ok(Report::new(dot, json))
}
