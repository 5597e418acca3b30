use pairstab::chambers::FramingComponent;
use pairstab::{
    brute_force_verdict, chamber_of, check_chi, check_mu, check_sectional, critical_mu,
    curve_threshold, delta_upper_bound, discriminant_bound, eta_delta_conversion,
    framed_delta_window, hilbert_verdict, level_structure_dimension, level_structure_window,
    mu_interval_criterion, point_level_strictly_semistable_dimension, rank2_chamber,
    restriction_degree, series_indices, validate_witness, wall_set, BasisProfile, ChamberLocation,
    DeltaBound, Direction, Mode, PairProblem, Rational, Regime, Severity, SubobjectWitness,
    Verdict, WallSet,
};
use serde_json::{json, Map, Value};

use crate::input::ProblemFile;
use crate::report::{
    Report, Style, Warnings, NOTE_DISCRIMINANT, NOTE_INTERVAL, NOTE_RANK2, NOTE_RESTRICTION,
};
use crate::{
    BoundsArgs, ChambersArgs, Cli, CliError, Command, FramedArgs, GitArgs, LevelArgs, RestrictArgs,
    WallsArgs,
};

/// A finished report together with the process exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_ON_WALL: i32 = 4;

struct Ctx {
    style: Style,
    warnings: Warnings,
    exit_code: i32,
}

impl Ctx {
    fn new(json: bool) -> Self {
        Ctx {
            style: Style { json },
            warnings: Warnings::default(),
            exit_code: EXIT_OK,
        }
    }

    fn raise(&mut self, code: i32) {
        // a domain error outranks an on-wall hit
        if code == EXIT_DOMAIN || self.exit_code == EXIT_OK {
            self.exit_code = code;
        }
    }

    fn finish(self, command: &str, inputs: Value, results: Value) -> Outcome {
        Outcome {
            report: Report {
                command: command.into(),
                inputs,
                results,
                warnings: self.warnings.into_vec(),
            },
            exit_code: self.exit_code,
        }
    }
}

fn modes(requested: Option<Mode>) -> Vec<Mode> {
    requested.map_or_else(|| vec![Mode::Semistable, Mode::Stable], |m| vec![m])
}

fn load(cli: &Cli) -> Result<ProblemFile, CliError> {
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| CliError::Usage("this command needs --input FILE".into()))?;
    ProblemFile::read(path)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check => {
            let file = load(cli)?;
            cmd_check(&file, cli.mode, cli.json)
        }
        Command::Walls(a) => cmd_walls(a, cli.json),
        Command::Chambers(a) => cmd_chambers(a, cli.json),
        Command::Bounds(a) => {
            let file = cli
                .input
                .as_ref()
                .map(|p| ProblemFile::read(p))
                .transpose()?;
            cmd_bounds(a, file.as_ref(), cli.json)
        }
        Command::Restrict(a) => cmd_restrict(a, cli.json),
        Command::Framed(a) => cmd_framed(a, cli.json),
        Command::Level(a) => cmd_level(a, cli.json),
        Command::Git(a) => cmd_git(a, cli.mode, cli.json),
        Command::Report => {
            let file = load(cli)?;
            cmd_report(&file, cli.mode, cli.json)
        }
    }
}

fn file_inputs(file: &ProblemFile) -> Value {
    serde_json::to_value(file).expect("problem files serialize")
}

fn witness_label(w: &SubobjectWitness, index: usize) -> String {
    w.label.clone().unwrap_or_else(|| format!("#{}", index + 1))
}

fn verdict_or_reason(ctx: &Ctx, v: pairstab::Result<Verdict>) -> (Value, Option<Verdict>) {
    match v {
        Ok(v) => (ctx.style.verdict(&v), Some(v)),
        Err(e) => (json!({ "not_applicable": e.to_string() }), None),
    }
}

/// Whether the witness destabilizes in `mode`: decided by the χ-inequality,
/// or by the μ-margin's sign when no `χ_G` is available.
fn destabilizes(chi: &Option<Verdict>, mu: &Option<Verdict>) -> (Option<bool>, &'static str) {
    if let Some(v) = chi {
        return (Some(!v.satisfied), "chi");
    }
    match mu.as_ref().map(|v| &v.margin) {
        Some(pairstab::Margin::Scalar(m)) if !m.is_zero() => (Some(m.is_negative()), "mu"),
        _ => (None, "undecided"),
    }
}

fn check_witnesses(
    file: &ProblemFile,
    problem: &PairProblem,
    requested: Option<Mode>,
    ctx: &mut Ctx,
) -> Value {
    let n = file.witnesses.len();
    if n == 0 {
        ctx.warnings
            .push("vacuous: no witnesses supplied, nothing was checked");
    }
    let mut first_violator: Option<String> = None;
    let mut entries = Vec::with_capacity(n);
    let mut undecided = 0usize;
    for (index, w) in file.witnesses.iter().enumerate() {
        let label = witness_label(w, index);
        let violations = validate_witness(problem, w);
        let has_error = violations.iter().any(|v| v.severity == Severity::Error);
        if has_error {
            ctx.raise(EXIT_DOMAIN);
        }
        let mut per_mode = Map::new();
        let mut violated_here = has_error;
        for mode in modes(requested) {
            let (chi_value, chi) = verdict_or_reason(ctx, check_chi(problem, w, mode));
            let (mu_value, mu) = verdict_or_reason(ctx, check_mu(problem, w, mode));
            let mut entry = Map::new();
            entry.insert("chi".into(), chi_value);
            entry.insert("mu".into(), mu_value);
            if let (Some(sec), Some(_)) = (&file.sectional, w.section_count) {
                let (v, _) = verdict_or_reason(
                    ctx,
                    check_sectional(problem, w, &sec.delta_bar, &sec.p, mode),
                );
                entry.insert("sectional".into(), v);
            }
            let (flag, basis) = destabilizes(&chi, &mu);
            match flag {
                Some(true) => violated_here = true,
                None => undecided += 1,
                Some(false) => {}
            }
            entry.insert("destabilizes".into(), flag.map_or(Value::Null, Value::Bool));
            entry.insert("decided_by".into(), Value::String(basis.into()));
            per_mode.insert(mode.to_string(), Value::Object(entry));
        }
        if w.section_count.is_some() && file.sectional.is_none() {
            ctx.warnings.push(
                "section counts supplied without a \"sectional\" block; sectional checks skipped",
            );
        }
        if violated_here && first_violator.is_none() {
            first_violator = Some(label.clone());
        }
        entries.push(json!({
            "label": label,
            "violations": violations,
            "verdicts": per_mode,
        }));
    }
    if undecided > 0 {
        ctx.warnings
            .push("some verdicts are undecided: no χ_G was supplied and the μ-margin is zero");
    }
    let summary = match &first_violator {
        None => format!("no violation among {n} supplied witnesses"),
        Some(label) => format!("first violator: {label} (of {n} supplied witnesses)"),
    };
    json!({
        "regime": "pair",
        "summary": summary,
        "first_violator": first_violator,
        "witnesses": entries,
    })
}

const QUOT_SUMMARY: &str = "all pairs stable; parametrized by Quot scheme";

pub fn cmd_check(file: &ProblemFile, mode: Option<Mode>, json: bool) -> Result<Outcome, CliError> {
    let problem = file.problem()?;
    let mut ctx = Ctx::new(json);
    let results = if problem.regime() == Regime::Quot {
        ctx.warnings
            .push("deg δ ≥ dim X: stability predicates are vacuous, witnesses not checked");
        json!({ "regime": "quot", "summary": QUOT_SUMMARY })
    } else {
        check_witnesses(file, &problem, mode, &mut ctx)
    };
    Ok(ctx.finish("check", file_inputs(file), results))
}

fn chambers_value(style: &Style, walls: &WallSet) -> Value {
    Value::Array(
        walls
            .chambers()
            .iter()
            .map(|c| {
                let mut v = style.interval(&c.lo, c.hi.as_ref());
                v["index"] = json!(c.index);
                v
            })
            .collect(),
    )
}

/// Wall set plus the chamber containing `delta1`, if given.
fn wall_analysis(
    r: u32,
    d: &Rational,
    delta1: Option<&Rational>,
    ctx: &mut Ctx,
) -> Result<Value, CliError> {
    let walls = wall_set(r, d)?;
    let style = ctx.style;
    let mut out = Map::new();
    out.insert("walls".into(), style.rationals(&walls.walls));
    out.insert("range_hi".into(), style.rational(&walls.range_hi));
    out.insert("degenerate".into(), Value::Bool(walls.degenerate));
    out.insert("chambers".into(), chambers_value(&style, &walls));
    if walls.degenerate {
        ctx.warnings.push(format!(
            "degenerate wall set: [0, -d/(r-1)) = [0, {}) is empty, so no pairs with nonzero kernel exist",
            walls.range_hi
        ));
        ctx.raise(EXIT_ON_WALL);
    }
    if !d.is_integer() {
        ctx.warnings
            .push("degree is not integral: the wall family is only known to be complete for integral degrees");
    }
    if let Some(x) = delta1 {
        let location = match chamber_of(&walls, x)? {
            ChamberLocation::OnWall { value } => {
                ctx.warnings.push(format!("δ₁ = {value} lies on a wall"));
                ctx.raise(EXIT_ON_WALL);
                json!({ "on_wall": style.rational(&value) })
            }
            ChamberLocation::Chamber(c) => {
                if c.beyond_range && !walls.degenerate {
                    ctx.warnings.push(format!(
                        "δ₁ = {x} exceeds -d/(r-1) = {}: only pairs with injective α can be semistable",
                        walls.range_hi
                    ));
                }
                let mut v = style.interval(&c.lo, c.hi.as_ref());
                v["index"] = json!(c.index);
                v["beyond_range"] = json!(c.beyond_range);
                json!({ "chamber": v })
            }
        };
        out.insert("location".into(), location);
        if x.is_positive() {
            ctx.warnings.push(NOTE_INTERVAL);
            out.insert(
                "interval_criterion".into(),
                Value::Bool(mu_interval_criterion(r, d, x)?),
            );
        }
    }
    Ok(Value::Object(out))
}

pub fn cmd_walls(a: &WallsArgs, json: bool) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    let mut results = wall_analysis(a.rank, &a.degree, a.delta1.as_ref(), &mut ctx)?;
    if a.rank == 2 && a.degree.is_integer() && a.degree.is_negative() {
        let series = series_indices(&a.degree)?;
        results["series"] = json!({ "i_min": series.i_min, "i_max": series.i_max });
        results["rank2_chambers"] = rank2_series(&style, &a.degree, series.i_min, series.i_max);
        ctx.warnings.push(NOTE_RANK2);
    }
    let inputs = json!({
        "rank": a.rank,
        "degree": style.rational(&a.degree),
        "delta1": a.delta1.as_ref().map(|x| style.rational(x)),
    });
    Ok(ctx.finish("walls", inputs, results))
}

fn rank2_series(style: &Style, d: &Rational, i_min: i64, i_max: i64) -> Value {
    Value::Array(
        (i_min..=i_max)
            .filter_map(|i| rank2_chamber(i, d).ok())
            .map(|c| {
                let mut v = style.interval(&c.lo, c.hi.as_ref());
                v["index"] = json!(c.index);
                v
            })
            .collect(),
    )
}

pub fn cmd_chambers(a: &ChambersArgs, json: bool) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    let series = series_indices(&a.degree)?;
    ctx.warnings.push(NOTE_RANK2);
    let coarse = wall_set(2, &a.degree)?;
    let mut results = json!({
        "series": { "i_min": series.i_min, "i_max": series.i_max },
        "coarse_walls": style.rationals(&coarse.walls),
    });
    match a.index {
        None => {
            results["chambers"] = rank2_series(&style, &a.degree, series.i_min, series.i_max);
        }
        Some(i) => {
            let empty = series.is_empty_at(i);
            if empty {
                ctx.warnings.push(format!(
                    "index {i} ≥ -d: the moduli spaces for this chamber are empty"
                ));
            }
            let c = rank2_chamber(i, &a.degree)?;
            let mut v = style.interval(&c.lo, c.hi.as_ref());
            v["index"] = json!(i);
            v["empty"] = json!(empty);
            v["in_series"] = json!(series.contains(i));
            results["chamber"] = v;
        }
    }
    let inputs = json!({ "degree": style.rational(&a.degree), "index": a.index });
    Ok(ctx.finish("chambers", inputs, results))
}

fn bound_value(style: &Style, b: &DeltaBound) -> Value {
    match b {
        DeltaBound::Unbounded => json!({ "kind": "unbounded" }),
        DeltaBound::Bounded { polynomial, delta1 } => json!({
            "kind": "bounded",
            "delta1": style.rational(delta1),
            "polynomial": polynomial.as_ref().map(|p| style.poly(p)),
        }),
    }
}

fn discriminant_value(
    style: &Style,
    delta1: &Rational,
    h2: &Rational,
    ctx: &mut Ctx,
) -> Result<Value, CliError> {
    let b = discriminant_bound(delta1, h2)?;
    ctx.warnings.push(NOTE_DISCRIMINANT);
    Ok(json!({
        "stated": style.rational(&b.stated),
        "proof_derived": style.rational(&b.proof_derived),
    }))
}

/// δ bound, discriminant bound and curve threshold for a loaded problem.
fn problem_bounds(
    file: &ProblemFile,
    problem: &PairProblem,
    kernel_rank: Option<u32>,
    ctx: &mut Ctx,
) -> Result<Value, CliError> {
    let style = ctx.style;
    let mut out = Map::new();
    let kernel_rank = kernel_rank.or(file.kernel_rank);
    match delta_upper_bound(problem, kernel_rank) {
        Ok(bound) => {
            if let Some(b) = bound.delta1() {
                if &problem.delta1() > b {
                    ctx.warnings.push(format!(
                        "δ₁ = {} exceeds the bound {b}: every semistable pair has injective α",
                        problem.delta1()
                    ));
                }
                if !bound.admits_positive_delta1() {
                    ctx.warnings
                        .push("empty parameter window: no δ₁ > 0 admits semistable pairs with nonzero kernel");
                }
            }
            out.insert("delta_bound".into(), bound_value(&style, &bound));
        }
        Err(e) => {
            out.insert(
                "delta_bound".into(),
                json!({ "not_applicable": e.to_string() }),
            );
        }
    }
    if let Some(h2) = problem.ctx().h_squared() {
        let delta1 = problem.delta1();
        if !delta1.is_negative() {
            out.insert(
                "discriminant".into(),
                discriminant_value(&style, &delta1, h2, ctx)?,
            );
        }
    }
    if let Some(g) = problem.ctx().genus() {
        let delta = problem.delta().coefficient(0);
        let t = curve_threshold(problem.rank(), &g, &delta)?;
        out.insert(
            "curve_threshold".into(),
            json!({
                "value": style.rational(&t),
                "degree_exceeds": problem.degree() > &t,
            }),
        );
    }
    Ok(Value::Object(out))
}

pub fn cmd_bounds(
    a: &BoundsArgs,
    file: Option<&ProblemFile>,
    json: bool,
) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    let mut results = Map::new();
    let inputs = match file {
        Some(f) => {
            let problem = f.problem()?;
            if let Value::Object(m) = problem_bounds(f, &problem, a.kernel_rank, &mut ctx)? {
                results.extend(m);
            }
            file_inputs(f)
        }
        None => json!({
            "kernel_rank": a.kernel_rank,
            "delta1": a.delta1.as_ref().map(|x| style.rational(x)),
            "h_squared": a.h_squared.as_ref().map(|x| style.rational(x)),
        }),
    };
    match (&a.delta1, &a.h_squared) {
        (Some(d1), Some(h2)) => {
            let v = discriminant_value(&style, d1, h2, &mut ctx)?;
            results.insert("discriminant".into(), v);
        }
        (None, None) => {}
        _ => {
            return Err(CliError::Usage(
                "--delta1 and --h-squared go together".into(),
            ))
        }
    }
    if results.is_empty() {
        return Err(CliError::Usage(
            "bounds needs --input FILE or --delta1 with --h-squared".into(),
        ));
    }
    Ok(ctx.finish("bounds", inputs, Value::Object(results)))
}

pub fn cmd_restrict(a: &RestrictArgs, json: bool) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    ctx.warnings.push(NOTE_RESTRICTION);
    let r = restriction_degree(&a.degree, &a.c1_squared, &a.c2, &a.delta1, &a.h_squared)?;
    let results = json!({
        "gap": style.rational(&r.gap),
        "threshold": style.rational(&r.threshold),
        "n0": r.n0.to_string(),
    });
    let inputs = json!({
        "degree": style.rational(&a.degree),
        "c1_squared": style.rational(&a.c1_squared),
        "c2": style.rational(&a.c2),
        "delta1": style.rational(&a.delta1),
        "h_squared": style.rational(&a.h_squared),
    });
    Ok(ctx.finish("restrict", inputs, results))
}

pub fn parse_component(text: &str) -> Result<FramingComponent, CliError> {
    let bad = || CliError::Usage(format!("component {text:?} must look like A:NU1,NU2,..."));
    let (a, nu) = text.split_once(':').ok_or_else(bad)?;
    let multiplicity = a.trim().parse().map_err(|_| bad())?;
    let nu = if nu.trim().is_empty() {
        Vec::new()
    } else {
        nu.split(',')
            .map(|x| x.trim().parse::<Rational>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    };
    Ok(FramingComponent { multiplicity, nu })
}

pub fn cmd_framed(a: &FramedArgs, json: bool) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    let components: Vec<FramingComponent> = a
        .components
        .iter()
        .map(|c| parse_component(c))
        .collect::<Result<_, _>>()?;
    let w = framed_delta_window(a.rank, &a.c_dot_h, &components)?;
    if w.is_empty() {
        ctx.warnings
            .push("empty window: the lower bound reaches (r-1)·C.H");
    }
    let results = json!({
        "lower_bound": style.rational(&w.lower_bound),
        "window": w.window.as_ref().map(|(lo, hi)| style.interval(lo, Some(hi))),
        "empty": w.is_empty(),
    });
    let inputs = json!({
        "rank": a.rank,
        "c_dot_h": style.rational(&a.c_dot_h),
        "components": components.iter().map(|c| json!({
            "multiplicity": c.multiplicity,
            "nu": style.rationals(&c.nu),
        })).collect::<Vec<_>>(),
    });
    Ok(ctx.finish("framed", inputs, results))
}

pub fn cmd_level(a: &LevelArgs, json: bool) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    if a.genus < 2 {
        ctx.warnings
            .push("genus below 2: the existence window is only established for g ≥ 2");
    }
    let window = level_structure_window(a.rank, a.length)?;
    let mut results = json!({
        "window": {
            "lo": style.rational(&window.lo),
            "hi": style.rational(&window.hi),
            "notation": format!("({}, {}]", window.lo, window.hi),
        },
        "dimension": level_structure_dimension(a.rank, a.genus, a.length),
    });
    if a.rank == 2 && a.length == 1 {
        let ss = point_level_strictly_semistable_dimension(a.genus);
        results["strictly_semistable_dimension"] = json!(ss);
        results["strictly_semistable_codimension"] =
            json!(level_structure_dimension(2, a.genus, 1) - ss);
    }
    if let Some(delta) = &a.delta {
        results["delta_inside"] = json!(window.contains(delta));
    }
    let inputs = json!({
        "rank": a.rank,
        "length": a.length,
        "genus": a.genus,
        "delta": a.delta.as_ref().map(|x| style.rational(x)),
    });
    Ok(ctx.finish("level", inputs, results))
}

fn classification(semistable: &Verdict) -> &'static str {
    match (semistable.satisfied, semistable.strict) {
        (_, true) => "stable",
        (true, false) => "semistable_not_stable",
        (false, _) => "unstable",
    }
}

pub fn cmd_git(a: &GitArgs, mode: Option<Mode>, json: bool) -> Result<Outcome, CliError> {
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    let profile = BasisProfile::new(a.p, a.r, a.ell, a.k.clone())?;
    let eta = match (&a.eta, &a.delta_bar) {
        (Some(eta), None) => eta.clone(),
        (None, Some(db)) => eta_delta_conversion(a.p, a.r, db, Direction::DeltaBarToEta)?,
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --eta and --delta-bar".into(),
            ))
        }
    };
    let semi = hilbert_verdict(&profile, &eta, Mode::Semistable)?;
    let rows: Vec<Value> = semi
        .rows
        .iter()
        .map(|row| {
            json!({
                "condition": row.condition,
                "j": row.j,
                "value": style.rational(&row.value),
            })
        })
        .collect();
    let critical: Vec<Value> = (1..a.p)
        .map(|i| critical_mu(&profile, &eta, i).map(|m| style.rational(&m)))
        .collect::<pairstab::Result<_>>()?;
    let mut results = json!({
        "eta": style.rational(&eta),
        "rows": rows,
        "critical_values": critical,
    });
    let bound = a.bound.unwrap_or(a.p as i64);
    let mut verdicts = Map::new();
    let mut classified = classification(&semi.verdict);
    for m in modes(mode) {
        let table = hilbert_verdict(&profile, &eta, m)?.verdict;
        let mut entry = style.verdict(&table);
        if a.oracle {
            let oracle = brute_force_verdict(&profile, &eta, bound, m)?;
            let agrees = oracle.satisfied == table.satisfied && oracle.strict == table.strict;
            entry["oracle"] = json!({
                "agrees": agrees,
                "satisfied": oracle.satisfied,
                "strict": oracle.strict,
                "min_weight": style.margin(&oracle.margin),
            });
            if !agrees {
                ctx.warnings.push(
                    "table and enumeration disagree; the enumeration verdict is authoritative",
                );
                if m == Mode::Semistable {
                    classified = classification(&oracle);
                }
                entry["satisfied"] = json!(oracle.satisfied);
                entry["strict"] = json!(oracle.strict);
            }
        }
        verdicts.insert(m.to_string(), entry);
    }
    results["verdicts"] = Value::Object(verdicts);
    results["classification"] = json!(classified);
    let inputs = json!({
        "p": a.p,
        "r": a.r,
        "ell": a.ell,
        "K": a.k,
        "eta": a.eta.as_ref().map(|x| style.rational(x)),
        "delta_bar": a.delta_bar.as_ref().map(|x| style.rational(x)),
        "oracle": a.oracle,
        "bound": a.oracle.then_some(bound),
    });
    Ok(ctx.finish("git", inputs, results))
}

pub fn cmd_report(file: &ProblemFile, mode: Option<Mode>, json: bool) -> Result<Outcome, CliError> {
    let problem = file.problem()?;
    let mut ctx = Ctx::new(json);
    let style = ctx.style;
    let regime = problem.regime();
    let mut results = Map::new();
    results.insert(
        "problem".into(),
        json!({
            "chi": style.poly(problem.chi()),
            "delta": style.poly(problem.delta()),
            "delta1": style.rational(&problem.delta1()),
            "regime": match regime { Regime::Pair => "pair", Regime::Quot => "quot" },
        }),
    );
    if regime == Regime::Quot {
        ctx.warnings
            .push("deg δ ≥ dim X: stability predicates are vacuous, witnesses not checked");
        results.insert(
            "check".into(),
            json!({ "regime": "quot", "summary": QUOT_SUMMARY }),
        );
        return Ok(ctx.finish("report", file_inputs(file), Value::Object(results)));
    }
    results.insert(
        "check".into(),
        check_witnesses(file, &problem, mode, &mut ctx),
    );
    results.insert(
        "bounds".into(),
        problem_bounds(file, &problem, None, &mut ctx)?,
    );
    let delta1 = problem.delta1();
    if problem.rank() >= 2 && delta1.is_positive() {
        let walls = wall_analysis(problem.rank(), problem.degree(), Some(&delta1), &mut ctx)?;
        results.insert("walls".into(), walls);
    }
    Ok(ctx.finish("report", file_inputs(file), Value::Object(results)))
}
