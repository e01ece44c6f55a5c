use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use lrcex::families::{
    binomial, counterexample_report, family_value, horn_count_two_rows, horn_triples,
    kostka_family, log_concavity_check, parabolic_kostka, ComparisonRecord, Family, Rectangle,
    RectangleSequence, ReportConfig,
};
use lrcex::lr::{
    count_by_enumeration, enumerate_lr_fillings, fit_polynomial, lr_coefficient,
    multi_lr_coefficient,
};
use lrcex::lr::{stretched_values, PolynomialFit};
use lrcex::quiver::{
    euler_form, k4_star_quiver, kronecker_quiver, kronecker_si_dim, kronecker_si_dim_general,
    t434_quiver,
};
use lrcex::{Partition, SkewShape};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::output::{num, CheckLine, Output};
use crate::{Command, Guard};

pub fn run(command: &Command, guard: Guard) -> Result<Output> {
    match command {
        Command::Lr(a) => lr(a, guard),
        Command::MultiLr(a) => multi_lr(a),
        Command::Kostka(a) => kostka(a),
        Command::Counterexample(a) => counterexample(a),
        Command::Quiver(q) => quiver(q),
        Command::Stretch(a) => stretch(a),
        Command::Horn(a) => horn(a),
    }
}

#[derive(Debug, Args)]
pub struct LrArgs {
    /// Outer partition λ, e.g. `4,2,1` or `4^2,3^4`.
    #[arg(long)]
    outer: Partition,
    /// First inner partition μ.
    #[arg(long)]
    inner1: Partition,
    /// Second inner partition ν (the filling content).
    #[arg(long)]
    inner2: Partition,
    /// Also print every LR filling of λ/μ with content ν.
    #[arg(long)]
    enumerate: bool,
    /// Recount by enumeration and require agreement.
    #[arg(long)]
    oracle: bool,
}

fn lr(a: &LrArgs, guard: Guard) -> Result<Output> {
    let mut out = Output::new("lr");
    out.input("outer", a.outer.to_string())
        .input("inner1", a.inner1.to_string())
        .input("inner2", a.inner2.to_string());
    let value = lr_coefficient(&a.outer, &a.inner1, &a.inner2);
    out.line("value", &value);
    let mut result = json!({ "value": num(&value) });

    if a.enumerate || a.oracle {
        let shape = SkewShape::new(a.outer.clone(), a.inner1.clone())?;
        let boxes = shape.boxes();
        ensure!(
            guard.force || boxes <= guard.timeout_boxes,
            "skew shape has {boxes} boxes, above --timeout-boxes {}; pass --force to enumerate anyway",
            guard.timeout_boxes
        );
        if a.enumerate {
            let fillings = if boxes == a.inner2.size() {
                enumerate_lr_fillings(&shape, &a.inner2)
            } else {
                Vec::new()
            };
            out.text = fillings.iter().map(|f| f.to_string()).collect();
            result["fillings"] = Value::Array(
                fillings
                    .iter()
                    .map(|f| Value::String(f.to_string()))
                    .collect(),
            );
        }
        if a.oracle {
            let counted = BigUint::from(count_by_enumeration(&shape, &a.inner2));
            out.check(CheckLine::equal("memoized = enumeration", &value, &counted));
        }
    }
    out.result = result;
    Ok(out)
}

#[derive(Debug, Args)]
pub struct MultiLrArgs {
    /// Outer partition γ.
    #[arg(long)]
    outer: Partition,
    /// A factor μ(i); repeat for each factor.
    #[arg(long = "factor", required = true)]
    factors: Vec<Partition>,
}

fn multi_lr(a: &MultiLrArgs) -> Result<Output> {
    let mut out = Output::new("multi-lr");
    out.input("outer", a.outer.to_string()).input(
        "factors",
        Value::Array(
            a.factors
                .iter()
                .map(|f| Value::String(f.to_string()))
                .collect(),
        ),
    );
    let value = multi_lr_coefficient(&a.outer, &a.factors);
    out.line("value", &value);
    out.result = json!({ "value": num(&value) });
    Ok(out)
}

#[derive(Debug, Args)]
pub struct KostkaArgs {
    /// λ; omit when using --family-n.
    #[arg(long, required_unless_present = "family_n")]
    lambda: Option<Partition>,
    /// A rectangle `m^l`; repeat for each rectangle of R.
    #[arg(long = "rect")]
    rects: Vec<Rectangle>,
    /// Use the family pair (λ(n), R(n)).
    #[arg(long, conflicts_with_all = ["lambda", "rects"])]
    family_n: Option<u32>,
    /// Stretch both λ and R by this factor.
    #[arg(long, default_value_t = 1)]
    stretch: u32,
}

fn kostka(a: &KostkaArgs) -> Result<Output> {
    let (lambda, rects) = match (&a.lambda, a.family_n) {
        (_, Some(n)) => {
            ensure!(n >= 1, "--family-n must be at least 1");
            kostka_family(n)
        }
        (Some(l), None) => (l.clone(), RectangleSequence::new(a.rects.clone())),
        (None, None) => bail!("give --lambda or --family-n"),
    };
    let (lambda, rects) = (lambda.stretch(a.stretch), rects.stretch(a.stretch));
    let mut out = Output::new("kostka");
    out.input("lambda", lambda.to_string())
        .input("rectangles", rects.to_string());
    let value = parabolic_kostka(&lambda, &rects);
    out.line("lambda", &lambda)
        .line("R", &rects)
        .line("value", &value);
    out.result = json!({ "value": num(&value) });
    Ok(out)
}

/// `21`, `20..22` or `20-22`.
fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let s = s.trim();
    let (lo, hi) = s
        .split_once("..")
        .map(|(a, b)| (a, b.trim_start_matches('=')))
        .or_else(|| s.split_once('-'))
        .unwrap_or((s, s));
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{s}` is not n or lo..hi"))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo == 0 || lo > hi {
        return Err(format!("`{s}` must satisfy 1 ≤ lo ≤ hi"));
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Okounkov,
    Kostka,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Okounkov => Family::Okounkov,
            FamilyArg::Kostka => Family::Kostka,
        }
    }
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long, value_enum, default_value = "okounkov")]
    family: FamilyArg,
    /// A single n or a range `lo..hi`.
    #[arg(long = "n", value_parser = parse_range, default_value = "20..22")]
    range: (u32, u32),
    /// Stretch N at which f(N−1)·f(N+1) ≤ f(N)² is tested.
    #[arg(long = "N", default_value_t = 1)]
    stretch: u32,
    /// Cross-check against direct LR / parabolic Kostka counts for small n.
    #[arg(long)]
    verify_direct: bool,
    /// Largest n for direct checks at stretch 1.
    #[arg(long, default_value_t = ReportConfig::default().direct_one)]
    direct_one_max: u32,
    /// Largest n for direct checks at stretches ≥ 2.
    #[arg(long, default_value_t = ReportConfig::default().direct_two)]
    direct_two_max: u32,
}

fn counterexample(a: &CounterexampleArgs) -> Result<Output> {
    let family = Family::from(a.family);
    let (lo, hi) = a.range;
    ensure!(a.stretch >= 1, "--N must be at least 1");
    let config = if a.verify_direct {
        ReportConfig {
            direct_one: a.direct_one_max,
            direct_two: a.direct_two_max,
            ..ReportConfig::default()
        }
    } else {
        ReportConfig::minimal()
    };
    let records = if a.stretch == 1 {
        counterexample_report(family, lo, hi, &config)?
    } else {
        (lo..=hi)
            .map(|n| stretched_record(family, n, a.stretch, &config))
            .collect()
    };

    let mut out = Output::new("counterexample");
    out.input("family", family.name())
        .input("n_lo", lo)
        .input("n_hi", hi)
        .input("N", a.stretch)
        .input("verify_direct", a.verify_direct);
    out.header = ["n", "f(N-1)", "f(N)", "f(N+1)", "lhs", "rhs", "holds"]
        .map(String::from)
        .to_vec();
    let mut rows_json = Vec::new();
    for r in &records {
        out.rows.push(vec![
            r.n.to_string(),
            r.values[0].to_string(),
            r.values[1].to_string(),
            r.values[2].to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.holds.to_string(),
        ]);
        rows_json.push(json!({
            "n": r.n,
            "values": r.values.iter().map(num).collect::<Vec<_>>(),
            "lhs": num(&r.lhs),
            "rhs": num(&r.rhs),
            "holds": r.holds,
        }));
        for c in &r.checks {
            let mut line = CheckLine::from(c);
            line.name = format!("n={} {}", r.n, line.name);
            out.check(line);
        }
    }
    out.result = json!({ "family": family.name(), "N": a.stretch, "records": rows_json });
    Ok(out)
}

fn stretched_record(
    family: Family,
    n: u32,
    stretch: u32,
    config: &ReportConfig,
) -> ComparisonRecord {
    let mut rec = log_concavity_check(format!("{family} n={n}"), n, stretch, |k| {
        family_value(n, k)
    });
    for (k, v) in (stretch - 1..=stretch + 1).zip(rec.values.clone()) {
        match k {
            1 => rec.checks.push(lrcex::families::Check::new(
                "f(1) = binom(n+2,2)",
                v.clone(),
                binomial(n as u64 + 2, 2),
            )),
            2 => rec.checks.push(lrcex::families::Check::new(
                "f(2) = binom(n+5,5)",
                v.clone(),
                binomial(n as u64 + 5, 5),
            )),
            _ => {}
        }
        let bound = if k == 1 {
            config.direct_one
        } else {
            config.direct_two
        };
        if k >= 1 && n <= bound {
            rec.checks.push(lrcex::families::Check::new(
                format!("f({k}) direct {family}"),
                family.direct_value(n, k),
                v,
            ));
        }
    }
    rec
}

#[derive(Debug, Subcommand)]
pub enum QuiverCommand {
    /// ⟨α,β⟩ on θ(l), or the Euler-form data of a preset exceptional pair.
    Euler(EulerArgs),
    /// dim SI(θ(l), (n,n))_{(−m,m)}.
    SiDim(SiDimArgs),
    /// dim SI(θ(3),(n,n))_{(−m,m)} against dim SI(θ(3),(m,2m))_{(−2n,n)}.
    Reciprocity(NmArgs),
    /// dim SI(θ(3),(n,n))_{(−m,m)} against the family coefficient at stretch m.
    EmbedCheck(EmbedArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Preset {
    T434Pair,
    K4starPair,
}

#[derive(Debug, Args)]
pub struct EulerArgs {
    #[arg(long, value_enum, conflicts_with_all = ["l", "alpha", "beta"])]
    preset: Option<Preset>,
    /// Number of arrows of θ(l).
    #[arg(long, required_unless_present = "preset")]
    l: Option<u32>,
    /// α as `a1,a2` (values at the head and tail vertex).
    #[arg(long, required_unless_present = "preset", value_parser = parse_pair)]
    alpha: Option<(i64, i64)>,
    /// β as `b1,b2`.
    #[arg(long, required_unless_present = "preset", value_parser = parse_pair)]
    beta: Option<(i64, i64)>,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("`{s}` is not `a,b`"))?;
    let p = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("`{t}` is not an integer"))
    };
    Ok((p(a)?, p(b)?))
}

#[derive(Debug, Args)]
pub struct SiDimArgs {
    #[arg(long, default_value_t = 3)]
    l: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
}

#[derive(Debug, Args)]
pub struct NmArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value = "okounkov")]
    family: FamilyArg,
}

fn quiver(q: &QuiverCommand) -> Result<Output> {
    match q {
        QuiverCommand::Euler(a) => euler(a),
        QuiverCommand::SiDim(a) => {
            let mut out = Output::new("quiver si-dim");
            out.input("l", a.l).input("n", a.n).input("m", a.m);
            ensure!(a.l >= 1, "θ(l) needs l ≥ 1");
            let value = kronecker_si_dim(a.l, a.n, a.m);
            out.line("value", &value);
            out.result = json!({ "value": num(&value) });
            Ok(out)
        }
        QuiverCommand::Reciprocity(a) => {
            let mut out = Output::new("quiver reciprocity");
            out.input("n", a.n).input("m", a.m);
            let left = kronecker_si_dim(3, a.n, a.m);
            let right = kronecker_si_dim_general(3, (a.m, 2 * a.m), (-2 * a.n as i64, a.n as i64));
            out.line("SI((n,n))_(-m,m)", &left)
                .line("SI((m,2m))_(-2n,n)", &right);
            out.check(CheckLine::equal("reciprocity", &left, &right));
            out.result =
                json!({ "left": num(&left), "right": num(&right), "agree": left == right });
            Ok(out)
        }
        QuiverCommand::EmbedCheck(a) => {
            let family = Family::from(a.family);
            let mut out = Output::new("quiver embed-check");
            out.input("n", a.n)
                .input("m", a.m)
                .input("family", family.name());
            ensure!(a.n >= 1, "--n must be at least 1");
            let si = kronecker_si_dim(3, a.n, a.m);
            let direct = family.direct_value(a.n, a.m);
            out.line("si_dim", &si)
                .line(family.name(), &direct)
                .line("agree", si == direct);
            out.check(CheckLine::equal(format!("SI = {family}"), &si, &direct));
            out.result =
                json!({ "si_dim": num(&si), "direct": num(&direct), "agree": si == direct });
            Ok(out)
        }
    }
}

fn euler(a: &EulerArgs) -> Result<Output> {
    let mut out = Output::new("quiver euler");
    if let Some(preset) = a.preset {
        let (name, (q, pair)) = match preset {
            Preset::T434Pair => ("t434-pair", t434_quiver()),
            Preset::K4starPair => ("k4star-pair", k4_star_quiver()),
        };
        out.input("preset", name);
        let (e1, e2) = (pair.first(), pair.second());
        let v21 = euler_form(&q, e2, e1)?;
        let v11 = euler_form(&q, e1, e1)?;
        let v22 = euler_form(&q, e2, e2)?;
        let v12 = euler_form(&q, e1, e2)?;
        out.line("vertices", q.labels().join(","))
            .line("eps1", e1)
            .line("eps2", e2)
            .line("<eps1,eps1>", v11)
            .line("<eps2,eps2>", v22)
            .line("<eps1,eps2>", v12)
            .line("<eps2,eps1>", v21);
        out.result = json!({
            "value": v21,
            "vertices": q.labels(),
            "eps1": e1.values(),
            "eps2": e2.values(),
            "eps1_eps1": v11,
            "eps2_eps2": v22,
            "eps1_eps2": v12,
        });
        return Ok(out);
    }
    let (l, alpha, beta) = match (a.l, a.alpha, a.beta) {
        (Some(l), Some(x), Some(y)) => (l, x, y),
        _ => bail!("give --preset, or all of --l, --alpha and --beta"),
    };
    let q = kronecker_quiver(l)?;
    let x = q.dimension_vector(vec![alpha.0, alpha.1])?;
    let y = q.dimension_vector(vec![beta.0, beta.1])?;
    let value = euler_form(&q, &x, &y).context("evaluating the Euler form")?;
    out.input("l", l)
        .input("alpha", x.to_string())
        .input("beta", y.to_string());
    out.line("value", value);
    out.result = json!({ "value": value });
    Ok(out)
}

#[derive(Debug, Args)]
pub struct StretchArgs {
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
    /// Largest stretch factor sampled.
    #[arg(long, default_value_t = 6)]
    n_max: u32,
}

fn stretch(a: &StretchArgs) -> Result<Output> {
    let mut out = Output::new("stretch");
    out.input("lambda", a.lambda.to_string())
        .input("mu", a.mu.to_string())
        .input("nu", a.nu.to_string())
        .input("n_max", a.n_max);
    let table = stretched_values(&a.lambda, &a.mu, &a.nu, a.n_max);
    out.header = vec!["N".into(), "value".into()];
    for (k, v) in table.values.iter().enumerate() {
        out.rows.push(vec![k.to_string(), v.to_string()]);
    }
    let values: Vec<Value> = table.values.iter().map(num).collect();
    match fit_polynomial(&table.values)? {
        PolynomialFit::Confirmed(p) => {
            let constant_is_one =
                p.constant_term() == num_rational::BigRational::from_integer(1.into());
            out.line("degree", p.degree())
                .line("polynomial", &p)
                .line("constant term is 1", constant_is_one);
            out.result = json!({
                "values": values,
                "degree": p.degree(),
                "coefficients": p.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "constant_term_is_one": constant_is_one,
            });
        }
        PolynomialFit::NotConfirmed { points } => {
            out.line(
                "degree",
                format!("cannot confirm degree from {points} values"),
            );
            out.result = json!({ "values": values, "degree": Value::Null });
        }
    }
    Ok(out)
}

#[derive(Debug, Args)]
pub struct HornArgs {
    #[arg(long)]
    n: u32,
    /// List every triple with its monomial exponents.
    #[arg(long)]
    list: bool,
}

fn horn(a: &HornArgs) -> Result<Output> {
    ensure!(a.n >= 1, "--n must be at least 1");
    let mut out = Output::new("horn");
    out.input("n", a.n).input("list", a.list);
    let count = horn_count_two_rows(a.n);
    let closed = binomial(a.n as u64 + 5, 5);
    out.line("count", &count);
    out.check(CheckLine::equal("count = binom(n+5,5)", &count, &closed));
    let mut result = json!({ "count": num(&count) });
    if a.list {
        let triples = horn_triples(a.n);
        out.header = ["lambda1", "lambda2", "lambda3", "monomial"]
            .map(String::from)
            .to_vec();
        let mut listed = Vec::new();
        for t in &triples {
            let mono: Vec<String> = t.monomial.iter().map(u32::to_string).collect();
            out.rows.push(vec![
                t.triple[0].to_string(),
                t.triple[1].to_string(),
                t.triple[2].to_string(),
                mono.join(","),
            ]);
            listed.push(json!({
                "triple": t.triple.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "monomial": t.monomial,
            }));
        }
        result["triples"] = Value::Array(listed);
    }
    out.result = result;
    Ok(out)
}
