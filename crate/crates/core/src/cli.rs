//! Command-line front end.
//!
//! [`run`] never prints; it returns the exit code and the rendered report so
//! the binary stays a two-line wrapper and tests can drive every subcommand.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::angle::parse_rational;
use crate::circleseq::{
    check_signed_digit_form, lift_to_reals, max_feasible_depth, standard_rep, sweep, DivChain,
    QSeq, DEFAULT_BUDGET,
};
use crate::classify::{classify, GroupClass, SymbolicGroup, Verdict, WitnessSource};
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::verify;
use crate::Angle;

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "qconvex",
    version,
    about = "Exact quasi-convex hulls in finite abelian groups and the circle"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum number of character evaluations.
    #[arg(long, global = true, env = "QCONVEX_BUDGET", value_parser = parse_budget)]
    pub budget: Option<u128>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_budget(s: &str) -> std::result::Result<u128, String> {
    match s.trim().parse::<u128>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(b) => Ok(b),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Quasi-convex hull of a set of elements.
    Hull(GroupSet),
    /// Characters mapping every element of the set into the arc [-1/4, 1/4].
    Polar(GroupSet),
    /// Elements mapped into [-1/4, 1/4] by every character in the set.
    Prepolar(GroupSet),
    /// Whether a set equals its hull.
    CheckQc(GroupSet),
    /// Whether non-zero elements generate their direct sum.
    Indep(GroupSet),
    /// Standard representation of a rational along a divisibility chain.
    Stdrep {
        /// The rational, e.g. 1/6.
        #[arg(long)]
        z: String,
        /// Divisibility chain, e.g. 3,6.
        #[arg(long)]
        chain: String,
    },
    /// Hull of {0} ∪ {±1/b_n} at finite depth, and its signed-digit form.
    CheckSeq {
        /// Sequence q_0,...,q_N or primes>8:n=K.
        #[arg(conflicts_with = "qs")]
        seq: Option<String>,
        #[arg(long)]
        qs: Option<String>,
        /// Truncate to q_0..q_depth.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Decide whether a symbolic group admits non-trivial quasi-convex null sequences.
    Classify {
        /// Group such as "Z2^inf x Z5^3".
        #[arg(conflicts_with = "group")]
        input: Option<String>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, group = "class")]
        minimal: bool,
        #[arg(long, group = "class")]
        totally_minimal: bool,
        #[arg(long, group = "class")]
        omega_bounded: bool,
    },
    /// Reduce a decreasing real sequence with integer ratios >= 8 to the circle.
    Lift {
        /// Comma-separated rationals, e.g. 1,1/8,1/64.
        xs: String,
    },
    /// Run the seeded property suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
    /// Exploratory hull table over all sequences in [qmin, qmax]^len.
    Sweep {
        #[arg(long, default_value_t = 2)]
        qmin: u64,
        #[arg(long, default_value_t = 7)]
        qmax: u64,
        #[arg(long = "depth", default_value_t = 3)]
        len: usize,
        /// Emit CSV.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GroupSet {
    /// Group such as "Z4 x Z4", or @path to read it from a file.
    #[arg(long)]
    pub group: String,
    /// Tuples such as "(0,0),(1,0)", or @path.
    #[arg(long)]
    pub set: String,
}

/// Exit code and rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    json: Value,
    text: String,
}

impl Report {
    fn new(code: i32, json: Value, text: String) -> Self {
        Report { code, json, text }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    match dispatch(&cli.command, budget) {
        Ok(r) => {
            let stdout = if cli.json {
                render_json(r.json)
            } else {
                r.text
            };
            Outcome {
                code: r.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                Outcome {
                    code,
                    stdout: render_json(
                        json!({"error": {"kind": error_kind(&e), "message": e.to_string()}}),
                    ),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Budget { .. } => "budget",
        Error::Hypothesis { .. } => "hypothesis",
        Error::NotApplicable(_) => "not-applicable",
    }
}

fn render_json(mut v: Value) -> String {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

/// Inline text, or the contents of a file when prefixed with `@`.
fn load(input: &str) -> Result<String> {
    match input.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::Input(format!("cannot read {path}: {e}"))),
        None => Ok(input.to_string()),
    }
}

fn dispatch(cmd: &Command, budget: u128) -> Result<Report> {
    match cmd {
        Command::Hull(a) => hull(a, budget),
        Command::Polar(a) => polar(a),
        Command::Prepolar(a) => prepolar(a),
        Command::CheckQc(a) => check_qc(a, budget),
        Command::Indep(a) => indep(a),
        Command::Stdrep { z, chain } => stdrep(z, chain),
        Command::CheckSeq { seq, qs, depth } => {
            let input = seq.as_deref().or(qs.as_deref()).ok_or_else(|| {
                Error::Input("check-seq needs a sequence (positional or --qs)".into())
            })?;
            check_seq(&load(input)?, *depth, budget)
        }
        Command::Classify {
            input,
            group,
            minimal,
            totally_minimal,
            omega_bounded,
        } => {
            let s = input.as_deref().or(group.as_deref()).ok_or_else(|| {
                Error::Input("classify needs a group (positional or --group)".into())
            })?;
            let class = if *minimal {
                GroupClass::Minimal
            } else if *totally_minimal {
                GroupClass::TotallyMinimal
            } else if *omega_bounded {
                GroupClass::OmegaBounded
            } else {
                GroupClass::Compact
            };
            classify_cmd(&load(s)?, class)
        }
        Command::Lift { xs } => lift(&load(xs)?),
        Command::Verify { seed, cases } => Ok(verify_cmd(*seed, *cases)),
        Command::Sweep {
            qmin,
            qmax,
            len,
            csv,
        } => sweep_cmd(*qmin, *qmax, *len, *csv, budget),
    }
}

fn group_and_set(a: &GroupSet) -> Result<(FiniteAbelianGroup, String)> {
    let g: FiniteAbelianGroup = load(&a.group)?.parse()?;
    Ok((g, load(&a.set)?))
}

fn tuples<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn listing(title: &str, xs: &[String]) -> String {
    let mut s = format!("{title} ({}):\n", xs.len());
    for x in xs {
        let _ = writeln!(s, "  {x}");
    }
    s
}

fn hull(a: &GroupSet, budget: u128) -> Result<Report> {
    let (g, set) = group_and_set(a)?;
    let e = g.parse_set(&set)?;
    let (h, evaluations) = g.qc_hull_with_budget(&e, budget)?;
    let (e, h) = (tuples(&e), tuples(&h));
    let text = format!("group: {g}\n{}{}", listing("set", &e), listing("hull", &h));
    Ok(Report::new(
        EXIT_OK,
        json!({"command": "hull", "group": g.to_string(), "set": e, "hull": h, "size": h.len(), "evaluations": evaluations.to_string()}),
        text,
    ))
}

fn polar(a: &GroupSet) -> Result<Report> {
    let (g, set) = group_and_set(a)?;
    let e = g.parse_set(&set)?;
    let p = tuples(&g.polar(&e)?);
    Ok(Report::new(
        EXIT_OK,
        json!({"command": "polar", "group": g.to_string(), "set": tuples(&e), "polar": p, "size": p.len()}),
        format!("group: {g}\n{}", listing("polar", &p)),
    ))
}

fn prepolar(a: &GroupSet) -> Result<Report> {
    let (g, set) = group_and_set(a)?;
    let chars = g.parse_character_set(&set)?;
    let p = tuples(&g.prepolar(&chars)?);
    Ok(Report::new(
        EXIT_OK,
        json!({"command": "prepolar", "group": g.to_string(), "characters": tuples(&chars), "prepolar": p, "size": p.len()}),
        format!("group: {g}\n{}", listing("prepolar", &p)),
    ))
}

fn check_qc(a: &GroupSet, budget: u128) -> Result<Report> {
    let (g, set) = group_and_set(a)?;
    let e = crate::group::canonical(&g.parse_set(&set)?);
    let (h, _) = g.qc_hull_with_budget(&e, budget)?;
    let missing: Vec<GroupElement> = h
        .iter()
        .filter(|x| e.binary_search(x).is_err())
        .cloned()
        .collect();
    let qc = missing.is_empty();
    let mut text = format!("group: {g}\nquasi-convex: {qc}\n");
    if !qc {
        text.push_str(&listing("hull elements outside the set", &tuples(&missing)));
    }
    Ok(Report::new(
        if qc { EXIT_OK } else { EXIT_PROPERTY },
        json!({"command": "check-qc", "group": g.to_string(), "quasi_convex": qc, "missing": tuples(&missing), "hull_size": h.len()}),
        text,
    ))
}

fn indep(a: &GroupSet) -> Result<Report> {
    let (g, set) = group_and_set(a)?;
    let fs = g.parse_set(&set)?;
    let independent = g.is_independent(&fs)?;
    let orders: Vec<u64> = fs.iter().map(|f| g.element_order(f)).collect();
    let span = g.generated_subgroup(&fs)?.len();
    Ok(Report::new(
        if independent { EXIT_OK } else { EXIT_PROPERTY },
        json!({"command": "indep", "group": g.to_string(), "elements": tuples(&fs), "orders": orders, "subgroup_order": span, "independent": independent}),
        format!(
            "group: {g}\norders: {orders:?}\nsubgroup order: {span}\nindependent: {independent}\n"
        ),
    ))
}

fn stdrep(z: &str, chain: &str) -> Result<Report> {
    let z = Angle::from_rational(&parse_rational(&load(z)?)?);
    let chain: DivChain = load(chain)?.parse()?;
    let rep = standard_rep(&z, &chain);
    let coeffs: Vec<String> = rep.coeffs().iter().map(ToString::to_string).collect();
    let standard = rep.is_standard();
    let text = format!(
        "z = {z}\nchain = {chain}\ncoefficients = ({})\nresidual = {}\nstandard = {standard}\nsupport = {:?}\ntail bound = {}\n",
        coeffs.join(","),
        rep.residual(),
        rep.support(),
        rep.tail_bound()
    );
    Ok(Report::new(
        EXIT_OK,
        json!({
            "command": "stdrep",
            "z": z.to_string(),
            "chain": chain.to_string(),
            "coeffs": coeffs,
            "residual": rep.residual().to_string(),
            "standard": standard,
            "support": rep.support(),
            "tail_bound": rep.tail_bound().to_string(),
        }),
        text,
    ))
}

fn check_seq(input: &str, depth: Option<usize>, budget: u128) -> Result<Report> {
    let mut q: QSeq = input.parse()?;
    if let Some(n) = depth {
        q = q.prefix(n)?;
    }
    let form = match check_signed_digit_form(&q, budget) {
        Ok(f) => f,
        Err(Error::Budget {
            required,
            budget: b,
        }) => {
            let feasible = max_feasible_depth(&q, budget)?;
            let hint = feasible.map_or("no depth fits".to_string(), |n| {
                format!("largest feasible depth is {n}")
            });
            return Ok(Report::new(
                EXIT_BUDGET,
                json!({
                    "command": "check-seq",
                    "qs": q.qs(),
                    "error": {"kind": "budget", "required": required.to_string(), "budget": b.to_string()},
                    "max_feasible_depth": feasible,
                }),
                format!("budget exceeded: at least {required} character evaluations required, budget is {b}; {hint}\n"),
            ));
        }
        Err(e) => return Err(e),
    };
    let h = &form.hull;
    let guaranteed = q.qs().iter().all(|&x| x >= 8);
    let angles = |rs: &[u64]| {
        rs.iter()
            .map(|&r| h.angle(r).to_string())
            .collect::<Vec<_>>()
    };
    let x = angles(&h.x);
    let hull = angles(&h.hull);
    let witnesses = angles(&h.witnesses());
    let form_witnesses: Vec<Value> = form
        .witnesses
        .iter()
        .map(|w| json!({"angle": w.angle.to_string(), "coeffs": w.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>()}))
        .collect();
    let failed = (guaranteed && !h.equal()) || (form.hypothesis_satisfied && !form.holds);
    let mut text = format!(
        "qs = {q}\nb_N = {}\n|X| = {}\nhull size = {}\nequal = {}\n",
        h.modulus,
        x.len(),
        hull.len(),
        h.equal()
    );
    if !witnesses.is_empty() {
        let _ = writeln!(text, "hull elements outside X: {}", witnesses.join(" "));
    }
    let _ = writeln!(
        text,
        "signed-digit form: {}{}",
        if form.holds { "holds" } else { "fails" },
        if form.hypothesis_satisfied {
            ""
        } else {
            " (hypothesis not satisfied)"
        }
    );
    for w in &form.witnesses {
        let c: Vec<String> = w.coeffs.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "  {} = ({})", w.angle, c.join(","));
    }
    Ok(Report::new(
        if failed { EXIT_PROPERTY } else { EXIT_OK },
        json!({
            "command": "check-seq",
            "qs": q.qs(),
            "bs": q.bs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "X": x,
            "hull": hull,
            "hull_size": h.hull.len(),
            "equal": h.equal(),
            "witnesses": witnesses,
            "evaluations": h.evaluations.to_string(),
            "signed_digit_form": {
                "hypothesis_satisfied": form.hypothesis_satisfied,
                "holds": form.holds,
                "witnesses": form_witnesses,
            },
        }),
        text,
    ))
}

fn classify_cmd(input: &str, class: GroupClass) -> Result<Report> {
    let g: SymbolicGroup = input.parse()?;
    let c = classify(&g, class);
    let (json, text) = match &c.verdict {
        Verdict::No { .. } => {
            let nf = c
                .verdict
                .normal_form()
                .expect("negative verdict")
                .to_string();
            (
                json!({"verdict": "NO", "normal_form": nf}),
                format!("verdict: NO\nnormal form: {nf}\n"),
            )
        }
        Verdict::Yes { witness } => {
            let source = match witness.source {
                WitnessSource::LargeFactor => "factor of order at least 4",
                WitnessSource::TwoThreeMixing => "Z2^inf x Z3^inf = Z6^inf",
            };
            let orders = vec![witness.order; 4];
            (
                json!({
                    "verdict": "YES",
                    "witness": {
                        "orders": orders,
                        "e": witness.e.to_string(),
                        "y": witness.y.to_string(),
                        "source": source,
                    },
                }),
                format!(
                    "verdict: YES\nwitness: Z{}^inf ({source}), orders {},...\n",
                    witness.order,
                    orders
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            )
        }
    };
    let mut json = json;
    json["command"] = json!("classify");
    json["group"] = json!(g.to_string());
    json["criterion"] = json!(c.criterion());
    Ok(Report::new(
        EXIT_OK,
        json,
        format!("group: {g}\ncriterion: {}\n{text}", c.criterion()),
    ))
}

fn lift(xs: &str) -> Result<Report> {
    let xs = xs
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    let r = lift_to_reals(&xs)?;
    let scaled: Vec<String> = r.scaled.iter().map(ToString::to_string).collect();
    Ok(Report::new(
        EXIT_OK,
        json!({
            "command": "lift",
            "alpha": r.alpha.to_string(),
            "qs": r.qs.qs(),
            "bs": r.qs.bs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "scaled": scaled,
            "reciprocals_match": r.reciprocals_match,
            "sup_abs": r.sup_abs.to_string(),
            "inside_open_half": r.inside_open_half,
        }),
        format!(
            "alpha = {}\nqs = {}\nscaled = {}\nalpha x_n = 1/b_n: {}\nsup |alpha y| = {}\n",
            r.alpha,
            r.qs,
            scaled.join(", "),
            r.reciprocals_match,
            r.sup_abs
        ),
    ))
}

fn verify_cmd(seed: u64, cases: usize) -> Report {
    let results = verify::run_all(seed, cases);
    let all = results.iter().all(verify::CheckResult::passed);
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(
            text,
            "{:<width$}  {}  {} cases",
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.cases
        );
        if let Some(w) = &r.witness {
            let _ = writeln!(text, "    witness: {w}");
        }
    }
    let _ = writeln!(
        text,
        "{}",
        if all {
            "all suites passed"
        } else {
            "some suites failed"
        }
    );
    Report::new(
        if all { EXIT_OK } else { EXIT_PROPERTY },
        json!({"command": "verify", "seed": seed, "cases": cases, "passed": all, "checks": results}),
        text,
    )
}

fn sweep_cmd(qmin: u64, qmax: u64, len: usize, csv: bool, budget: u128) -> Result<Report> {
    let rows = sweep(qmin, qmax, len, budget)?;
    let qs_str = |qs: &[u64]| {
        qs.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut text = String::new();
    if csv {
        text.push_str("# EXPLORATORY: no guarantee for q < 8\nqs,modulus,x_size,hull_size,equal,form_hypothesis,form_holds\n");
        for r in &rows {
            let _ = writeln!(
                text,
                "\"{}\",{},{},{},{},{},{}",
                qs_str(&r.qs),
                r.modulus,
                r.x_size,
                r.hull_size,
                r.equal,
                r.form_hypothesis,
                r.form_holds
            );
        }
    } else {
        text.push_str("EXPLORATORY: no guarantee for q < 8\n");
        for r in &rows {
            let _ = writeln!(
                text,
                "{:<16} b_N={:<6} |X|={:<3} |hull|={:<5} equal={:<5} form={}",
                qs_str(&r.qs),
                r.modulus,
                r.x_size,
                r.hull_size,
                r.equal,
                r.form_holds
            );
        }
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "qs": r.qs,
                "modulus": r.modulus,
                "x_size": r.x_size,
                "hull_size": r.hull_size,
                "equal": r.equal,
                "form_hypothesis": r.form_hypothesis,
                "form_holds": r.form_holds,
            })
        })
        .collect();
    Ok(Report::new(
        EXIT_OK,
        json!({"command": "sweep", "label": "EXPLORATORY", "rows": json_rows}),
        text,
    ))
}
