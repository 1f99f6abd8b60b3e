//! Command-line front end.
//!
//! Every command prints one report on standard output, either as aligned
//! text (`--output human`) or as a single JSON object with a fixed field
//! order (`--output machine`). Exit codes: 0 success / equal / pass,
//! 1 validation failure / differ / hypothesis failure, 2 malformed input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::arith::{GaussRat, Poly};
use crate::certifier::{
    affine_symmetry, certify_fujimoto, certify_gap_form, certify_two_set, certify_weight_equivalence,
    critical_structure_with, deficiency_inequality, Certificate, Generator, SymmetryKind, TheoremId,
};
use crate::families::{
    construct_alzahary, construct_an, construct_an_hoa, construct_bc, construct_bcj,
    construct_frank_reinders, construct_li_yang, shift_family, CheckStatus, FamilyError, FamilyId,
    FamilyInstance, Mode, ThresholdRule,
};
use crate::parse::{parse_poly_literal, parse_scalar, ParseError};
use crate::roots::{BigFloat, ClusterReport, IsolationOptions, DEFAULT_PRECISION};
use crate::sharing::{deficiency, share_check, Point, RationalMap, ShareMode, ShareOutcome};

#[derive(Debug, Parser)]
#[command(name = "urs", version, about = "Exact checks for unique range set polynomials")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub output: OutputFormat,
    /// Working precision in bits for root isolation.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    /// Upper bound on isolating disk radii, as a hex float (e.g. 0x1p-53).
    #[arg(long, global = true)]
    pub radius: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and validate a member of a polynomial family.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Check theorem hypotheses and emit certificates.
    Certify {
        #[arg(long, conflicts_with = "family")]
        poly: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        /// Restrict the report to one theorem id.
        #[arg(long)]
        theorem: Option<String>,
        /// Assert that P is a uniqueness polynomial.
        #[arg(long)]
        assume_uniqueness: bool,
    },
    /// Detect affine symmetries P(az + b) = c P(z).
    Symmetry {
        #[arg(long)]
        poly: String,
    },
    /// Decide whether two rational maps share the zero set of a polynomial.
    ShareCheck {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum)]
        mode: ShareModeArg,
        /// Weight for the weighted and weak modes.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Deficiencies of a rational map, or the deficiency inequality.
    Deficiency {
        #[arg(long, required_unless_present = "theta_f", conflicts_with = "theta_f")]
        f: Option<String>,
        /// Target value; `inf` for the point at infinity.
        #[arg(long, default_value = "inf", allow_hyphen_values = true)]
        a: String,
        #[arg(long, requires_all = ["theta_g", "delta0", "n", "k"])]
        theta_f: Option<String>,
        #[arg(long)]
        theta_g: Option<String>,
        #[arg(long)]
        delta0: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Affine substitution, reversal, or family shift.
    Transform {
        #[arg(long, conflicts_with = "family")]
        poly: Option<String>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Replace P by z^N P(1/z), N = --degree or deg P.
        #[arg(long, conflicts_with_all = ["alpha", "beta"])]
        reverse: bool,
        #[arg(long, requires = "reverse")]
        degree: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShareModeArg {
    Cm,
    Im,
    Weighted,
    Weak,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Function class: mero or entire.
    #[arg(long, default_value = "mero")]
    pub mode: String,
    /// Degree threshold for the li-yang family: liyang15 or yi13.
    #[arg(long, default_value = "liyang15")]
    pub rule: String,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Malformed input: exit 2.
    Input(String),
}

impl From<(&str, ParseError)> for Failure {
    fn from((flag, e): (&str, ParseError)) -> Self {
        Failure::Input(format!("--{flag}: {e}"))
    }
}

/// A finished report: exit code plus machine and human renderings.
struct Report {
    code: i32,
    machine: Value,
    human: String,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let stdout = match cli.output {
                OutputFormat::Machine => {
                    let mut s = serde_json::to_string_pretty(&report.machine).expect("json");
                    s.push('\n');
                    s
                }
                OutputFormat::Human => report.human,
            };
            Outcome { code: report.code, stdout, stderr: String::new() }
        }
        Err(Failure::Input(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let opts = isolation_options(cli)?;
    match &cli.command {
        Command::Construct { family } => construct(family, &opts),
        Command::Certify { poly, family, theorem, assume_uniqueness } => {
            certify(poly.as_deref(), family, theorem.as_deref(), *assume_uniqueness, &opts)
        }
        Command::Symmetry { poly } => symmetry(&poly_arg("poly", poly)?),
        Command::ShareCheck { f, g, poly, mode, k } => share(f, g, poly, *mode, *k),
        Command::Deficiency { f, a, theta_f, theta_g, delta0, n, k } => match f {
            Some(f) => deficiency_report(f, a),
            None => inequality_report(
                theta_f.as_deref().expect("clap requires"),
                theta_g.as_deref().expect("clap requires"),
                delta0.as_deref().expect("clap requires"),
                n.expect("clap requires"),
                k.expect("clap requires"),
            ),
        },
        Command::Transform { poly, family, alpha, beta, reverse, degree } => {
            transform(poly.as_deref(), family, alpha.as_deref(), beta.as_deref(), *reverse, *degree, &opts)
        }
    }
}

fn isolation_options(cli: &Cli) -> Result<IsolationOptions, Failure> {
    let mut opts = IsolationOptions { precision: cli.precision.max(16), ..Default::default() };
    if let Some(r) = &cli.radius {
        let bound = BigFloat::parse_hex(r)
            .ok_or_else(|| Failure::Input(format!("--radius: malformed hex float '{r}'")))?;
        if bound.is_zero() || bound.is_negative() {
            return Err(Failure::Input("--radius: must be positive".into()));
        }
        opts.radius_bound = bound;
    }
    Ok(opts)
}

fn poly_arg(flag: &str, text: &str) -> Result<Poly, Failure> {
    parse_poly_literal(text).map_err(|e| (flag, e).into())
}

fn scalar_arg(flag: &str, text: Option<&str>) -> Result<GaussRat, Failure> {
    let text = text.ok_or_else(|| Failure::Input(format!("missing --{flag}")))?;
    parse_scalar(text).map_err(|e| (flag, e).into())
}

fn map_arg(flag: &str, text: &str) -> Result<RationalMap, Failure> {
    RationalMap::parse(text).map_err(|e| (flag, e).into())
}

fn rational_arg(flag: &str, text: &str) -> Result<BigRational, Failure> {
    let v = parse_scalar(text).map_err(|e| Failure::from((flag, e)))?;
    if !v.is_real() {
        return Err(Failure::Input(format!("--{flag}: expected a real rational, got {v}")));
    }
    Ok(v.re)
}

fn mode_arg(text: &str) -> Result<Mode, Failure> {
    text.parse().map_err(|e: String| Failure::Input(format!("--mode: {e}")))
}

fn need(flag: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Input(format!("missing --{flag}")))
}

fn build_family(args: &FamilyArgs) -> Result<Result<FamilyInstance, FamilyError>, Failure> {
    let name = args.family.as_deref().ok_or_else(|| Failure::Input("missing --family".into()))?;
    let id: FamilyId = name.parse().map_err(|e: String| Failure::Input(format!("--family: {e}")))?;
    let mode = mode_arg(&args.mode)?;
    let rule: ThresholdRule =
        args.rule.parse().map_err(|e: String| Failure::Input(format!("--rule: {e}")))?;
    let (a, b, c) = (args.a.as_deref(), args.b.as_deref(), args.c.as_deref());
    Ok(match id {
        FamilyId::LiYang => construct_li_yang(
            need("n", args.n)?,
            need("m", args.m)?,
            &scalar_arg("a", a)?,
            &scalar_arg("b", b)?,
            mode,
            rule,
        ),
        FamilyId::An => construct_an(
            need("n", args.n)?,
            need("m", args.m)?,
            &scalar_arg("a", a)?,
            &scalar_arg("b", b)?,
            &scalar_arg("c", c)?,
        ),
        FamilyId::FrankReinders => construct_frank_reinders(need("n", args.n)?, &scalar_arg("c", c)?),
        FamilyId::Alzahary => {
            construct_alzahary(need("n", args.n)?, &scalar_arg("a", a)?, &scalar_arg("b", b)?)
        }
        FamilyId::Bcj => construct_bcj(need("n", args.n)?, need("m", args.m)?, &scalar_arg("c", c)?),
        FamilyId::Bc => construct_bc(
            need("m", args.m)?,
            need("n", args.n)?,
            &scalar_arg("a", a)?,
            &scalar_arg("b", b)?,
            &scalar_arg("c", c)?,
        ),
        FamilyId::AnHoa => construct_an_hoa(
            need("n", args.n)?,
            &scalar_arg("a", a)?,
            &scalar_arg("b", b)?,
            &scalar_arg("c", c)?,
        ),
    })
}

fn family_failure(command: &str, e: &FamilyError) -> Report {
    let violations: Vec<Value> = e
        .violations()
        .iter()
        .map(|v| json!({"kind": v.kind, "condition": v.condition, "evidence": v.evidence}))
        .collect();
    let mut human = format!("{command}: invalid\n  {e}\n");
    for v in e.violations() {
        human.push_str(&format!("  [fail] {}: {}\n", v.condition, v.evidence));
    }
    Report {
        code: 1,
        machine: json!({
            "command": command,
            "status": "invalid",
            "error": e.to_string(),
            "violations": violations,
        }),
        human,
    }
}

fn instance_json(inst: &FamilyInstance, opts: &IsolationOptions) -> Value {
    let params: serde_json::Map<String, Value> = inst
        .params
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    let clusters = crate::roots::isolate_roots(&inst.poly, opts)
        .map(|cs| cs.iter().map(ClusterReport::from).collect::<Vec<_>>())
        .ok();
    json!({
        "family": inst.family.as_str(),
        "mode": inst.mode.as_str(),
        "params": params,
        "poly": inst.poly.to_string(),
        "degree": inst.degree(),
        "k": inst.k,
        "critical_multiplicities": inst.critical_multiplicities,
        "separated": inst.separated,
        "published_elements": inst.published_elements,
        "conditions": inst.checked_conditions,
        "zeros": clusters,
    })
}

fn instance_human(inst: &FamilyInstance) -> String {
    let params: Vec<String> = inst.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut out = format!(
        "family    {} ({})\nmode      {}\npoly      {}\ndegree    {}\nk         {}\nq         {:?}\nseparated {}\n",
        inst.family,
        params.join(", "),
        inst.mode.as_str(),
        inst.poly,
        inst.degree(),
        inst.k,
        inst.critical_multiplicities,
        inst.separated,
    );
    if let Some(p) = inst.published_elements {
        out.push_str(&format!("published {p}\n"));
    }
    for c in &inst.checked_conditions {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Unevaluated => "unevaluated",
        };
        out.push_str(&format!("  [{status}] {}: {}\n", c.name, c.evidence));
    }
    out
}

fn construct(args: &FamilyArgs, opts: &IsolationOptions) -> Result<Report, Failure> {
    Ok(match build_family(args)? {
        Ok(inst) => {
            let mut machine = json!({"command": "construct", "status": "valid"});
            merge(&mut machine, instance_json(&inst, opts));
            Report { code: 0, machine, human: instance_human(&inst) }
        }
        Err(e) => family_failure("construct", &e),
    })
}

fn merge(into: &mut Value, from: Value) {
    let (Value::Object(a), Value::Object(b)) = (into, from) else {
        unreachable!("objects")
    };
    a.extend(b);
}

fn certificate_human(c: &Certificate) -> String {
    let mut out = format!(
        "{:<24} {:<12} {}\n",
        c.theorem_id.as_str(),
        format!("{:?}", c.mode),
        if c.passed() { "PASS" } else { "FAIL" }
    );
    for h in &c.hypotheses {
        out.push_str(&format!(
            "    [{}] {}: {}\n",
            if h.pass { "pass" } else { "fail" },
            h.name,
            h.evidence
        ));
    }
    if let Some(concl) = &c.conclusion {
        out.push_str(&format!("    => {concl}\n"));
        for cond in &c.conditional_on {
            out.push_str(&format!("       conditional on: {cond}\n"));
        }
    }
    out
}

fn certify(
    poly: Option<&str>,
    family: &FamilyArgs,
    theorem: Option<&str>,
    assume_uniqueness: bool,
    opts: &IsolationOptions,
) -> Result<Report, Failure> {
    let theorem: Option<TheoremId> = theorem
        .map(|t| t.parse().map_err(|e: String| Failure::Input(format!("--theorem: {e}"))))
        .transpose()?;
    let mode = mode_arg(&family.mode)?;
    let p = match poly {
        Some(text) => poly_arg("poly", text)?,
        None => match build_family(family)? {
            Ok(inst) => inst.poly,
            Err(e) => return Ok(family_failure("certify", &e)),
        },
    };
    let n = p.degree().unwrap_or(0);
    if n < 2 {
        return Err(Failure::Input(format!("--poly: degree {n} given; certification needs degree >= 2")));
    }
    let cs = critical_structure_with(&p, opts).map_err(|e| Failure::Input(e.to_string()))?;
    let sym = affine_symmetry(&p);
    let mut certs = certify_fujimoto(&p, mode, assume_uniqueness);
    certs.extend(certify_weight_equivalence(&p, mode));
    let two = certify_two_set(&p, mode, assume_uniqueness).map_err(|e| Failure::Input(e.to_string()))?;
    certs.push(two.weight2.clone());
    certs.push(two.weight3.clone());
    certs.push(certify_gap_form(&p, mode));
    if let Some(t) = theorem {
        certs.retain(|c| c.theorem_id == t);
    }
    let code = if certs.iter().any(Certificate::passed) { 0 } else { 1 };
    let clusters: Vec<ClusterReport> = cs.clusters.iter().map(ClusterReport::from).collect();
    let machine = json!({
        "command": "certify",
        "poly": p.to_string(),
        "degree": n,
        "mode": mode.as_str(),
        "critical": {
            "k": cs.k,
            "multiplicities": cs.multiplicities(),
            "separation": cs.separation,
            "no_simple_critical_zero": cs.no_simple_critical_zero,
            "clusters": clusters,
        },
        "symmetry": symmetry_kind_json(&sym.kind),
        "certificates": certs,
    });
    let mut human = format!(
        "poly      {p}\ndegree    {n}\nmode      {}\nk         {}\nq         {:?}\nseparated {}\nsymmetry  {}\n\n",
        mode.as_str(),
        cs.k,
        cs.multiplicities(),
        cs.separation,
        symmetry_kind_human(&sym.kind),
    );
    for c in &certs {
        human.push_str(&certificate_human(c));
    }
    Ok(Report { code, machine, human })
}

fn symmetry_kind_json(kind: &SymmetryKind) -> Value {
    match kind {
        SymmetryKind::TrivialOnly => json!({"kind": "trivial-only"}),
        SymmetryKind::Continuous => json!({"kind": "continuous"}),
        SymmetryKind::Cyclic { order, generator } => {
            let generator = match generator {
                Generator::Exact { a, b, c } => {
                    json!({"a": a.to_string(), "b": b.to_string(), "c": c.to_string()})
                }
                Generator::RootOfUnity { order } => json!({"root_of_unity": order}),
            };
            json!({"kind": "cyclic", "order": order, "generator": generator})
        }
    }
}

fn symmetry_kind_human(kind: &SymmetryKind) -> String {
    match kind {
        SymmetryKind::TrivialOnly => "trivial only".into(),
        SymmetryKind::Continuous => "continuous".into(),
        SymmetryKind::Cyclic { order, generator: Generator::Exact { a, b, c } } => {
            format!("cyclic of order {order}, generator a={a} b={b} c={c}")
        }
        SymmetryKind::Cyclic { order, .. } => {
            format!("cyclic of order {order}, generator a=primitive {order}-th root of unity")
        }
    }
}

fn symmetry(p: &Poly) -> Result<Report, Failure> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(Failure::Input("--poly: symmetry needs degree >= 1".into()));
    }
    let r = affine_symmetry(p);
    let mut machine = json!({"command": "symmetry", "poly": p.to_string(), "centroid": r.centroid.to_string()});
    merge(&mut machine, symmetry_kind_json(&r.kind));
    merge(&mut machine, json!({"verification": r.verification}));
    let human = format!(
        "poly      {p}\ncentroid  {}\nsymmetry  {}\nverified  {}\n",
        r.centroid,
        symmetry_kind_human(&r.kind),
        r.verification.as_str()
    );
    Ok(Report { code: 0, machine, human })
}

fn share(f: &str, g: &str, poly: &str, mode: ShareModeArg, k: Option<usize>) -> Result<Report, Failure> {
    let (f, g, p) = (map_arg("f", f)?, map_arg("g", g)?, poly_arg("poly", poly)?);
    let mode = match mode {
        ShareModeArg::Cm => ShareMode::Cm,
        ShareModeArg::Im => ShareMode::Im,
        ShareModeArg::Weighted => ShareMode::Weighted(need("k", k)?),
        ShareModeArg::Weak => ShareMode::WeakWeight(need("k", k)?),
    };
    let out = share_check(&f, &g, &p, mode).map_err(|e| Failure::Input(e.to_string()))?;
    let base = json!({
        "command": "share-check",
        "f": f.to_string(),
        "g": g.to_string(),
        "poly": p.to_string(),
        "mode": mode.to_string(),
    });
    let (code, result, human) = match &out {
        ShareOutcome::Equal => (0, json!({"result": "Equal"}), format!("Equal ({mode})\n")),
        ShareOutcome::Differ { class, witness } => (
            1,
            json!({"result": "Differ", "class": class, "witness": witness.to_string()}),
            format!("Differ ({mode}) at {class}: witness {witness}\n"),
        ),
    };
    let mut machine = base;
    merge(&mut machine, result);
    Ok(Report { code, machine, human })
}

fn deficiency_report(f: &str, a: &str) -> Result<Report, Failure> {
    let f = map_arg("f", f)?;
    let point = match a.trim() {
        "inf" | "infinity" => Point::Infinity,
        other => Point::Finite(parse_scalar(other).map_err(|e| Failure::from(("a", e)))?),
    };
    let (delta, theta) = deficiency(&f, &point).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(Report {
        code: 0,
        machine: json!({
            "command": "deficiency",
            "f": f.to_string(),
            "a": point.to_string(),
            "degree": f.degree(),
            "delta": delta.to_string(),
            "theta": theta.to_string(),
        }),
        human: format!("f      {f}\na      {point}\ndelta  {delta}\ntheta  {theta}\n"),
    })
}

fn inequality_report(tf: &str, tg: &str, d0: &str, n: usize, k: usize) -> Result<Report, Failure> {
    let (tf, tg, d0) = (rational_arg("theta-f", tf)?, rational_arg("theta-g", tg)?, rational_arg("delta0", d0)?);
    let holds = deficiency_inequality(&tf, &tg, &d0, n, k).map_err(|e| Failure::Input(e.to_string()))?;
    let rhs = BigRational::new((2 * k as i64 + 6 - n as i64).into(), 2.into());
    Ok(Report {
        code: if holds { 0 } else { 1 },
        machine: json!({
            "command": "deficiency",
            "theta_f": tf.to_string(),
            "theta_g": tg.to_string(),
            "delta0": d0.to_string(),
            "n": n,
            "k": k,
            "bound": rhs.to_string(),
            "holds": holds,
        }),
        human: format!("{tf} + {tg} + {d0}/2 > {rhs}: {holds}\n"),
    })
}

fn transform(
    poly: Option<&str>,
    family: &FamilyArgs,
    alpha: Option<&str>,
    beta: Option<&str>,
    reverse: bool,
    degree: Option<usize>,
    opts: &IsolationOptions,
) -> Result<Report, Failure> {
    let alpha = alpha.map(|a| scalar_arg("alpha", Some(a))).transpose()?.unwrap_or_else(|| GaussRat::from_int(1));
    let beta = beta.map(|b| scalar_arg("beta", Some(b))).transpose()?.unwrap_or_else(|| GaussRat::from_int(0));
    let Some(text) = poly else {
        let inst = match build_family(family)? {
            Ok(inst) => inst,
            Err(e) => return Ok(family_failure("transform", &e)),
        };
        return Ok(match shift_family(&inst, &alpha, &beta) {
            Ok(shifted) => {
                let mut machine = json!({
                    "command": "transform",
                    "operation": "shift",
                    "alpha": alpha.to_string(),
                    "beta": beta.to_string(),
                    "status": "valid",
                });
                merge(&mut machine, instance_json(&shifted, opts));
                Report { code: 0, machine, human: instance_human(&shifted) }
            }
            Err(e) => family_failure("transform", &e),
        });
    };
    let p = poly_arg("poly", text)?;
    let (operation, result) = if reverse {
        let n = degree.unwrap_or_else(|| p.degree().unwrap_or(0));
        ("reversal", p.reversal(n))
    } else {
        ("affine", p.affine_substitute(&alpha, &beta))
    };
    Ok(match result {
        Ok(q) => Report {
            code: 0,
            machine: json!({
                "command": "transform",
                "operation": operation,
                "input": p.to_string(),
                "result": q.to_string(),
            }),
            human: format!("{q}\n"),
        },
        Err(e) => Report {
            code: 1,
            machine: json!({
                "command": "transform",
                "operation": operation,
                "input": p.to_string(),
                "error": e.to_string(),
            }),
            human: format!("transform failed: {e}\n"),
        },
    })
}
