//! `zpz`: command-line front end for the entropy bounds on Z/pZ and Z.
//!
//! Distributions are read in the canonical JSON form, either inline or from
//! a file. Exit status: 0 on success, 1 when a checked verdict fails, 2 on
//! bad input.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use report::{verdict, Format, Report};
use zpz_entropy::applications::{
    cauchy_davenport_check, count_solutions, discrete_epi_check, doubling_gap, kanter_g,
    kanter_small_ball_check, lo_entropy_bound, small_ball, LinearForm,
};
use zpz_entropy::oracle::{brute_extremal_check, brute_small_ball, min_entropy_over_permutations};
use zpz_entropy::random::{random_mixed_pmf, seeded};
use zpz_entropy::selftest::{run_criterion, CRITERIA, DEFAULT_SEED};
use zpz_entropy::serial::{fn_to_value, format_rational, parse_fn, parse_rational, to_canonical};
use zpz_entropy::{
    classify_regularity, decompose, rearrange, renyi, verify_main_inequality, Alpha, Domain, Mass, NonnegFn,
    Pmf, Regularity, Sign,
};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] zpz_entropy::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(name = "zpz", version, about = "Renyi-entropy lower bounds for sums on Z/pZ and Z")]
struct Cli {
    /// Renyi orders, comma separated: 0, 1, inf or positive rationals.
    #[arg(long, global = true, value_delimiter = ',', default_value = "1")]
    alpha: Vec<Alpha>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Report entropies in bits instead of nats.
    #[arg(long, global = true)]
    bits: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct DomainArg {
    /// Work in Z/pZ; without it, in the integers.
    #[arg(short = 'p', long = "modulus")]
    modulus: Option<i64>,
}

impl DomainArg {
    fn domain(self) -> CliResult<Domain> {
        Ok(match self.modulus {
            Some(p) => Domain::cyclic(p)?,
            None => Domain::INTEGERS,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Perm,
    Extremal,
    Smallball,
}

#[derive(Subcommand)]
enum Command {
    /// Renyi entropies of a distribution.
    Entropy { pmf: String },
    /// The + , - or * rearrangement.
    Rearrange {
        pmf: String,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Triangle/square decomposition.
    Decompose { pmf: String },
    /// Both sides of the lower bound for a sum of independent factors.
    Lowerbound {
        #[arg(required = true)]
        pmfs: Vec<String>,
    },
    /// Entropy of a weighted sum against the unweighted sum.
    Lo {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        coeffs: Vec<i64>,
        /// One distribution (used for every term) or one per coefficient.
        #[arg(required = true)]
        pmfs: Vec<String>,
    },
    /// Kanter's G at points, or the small-ball check for three-point laws.
    Kanter {
        #[arg(long, value_delimiter = ',')]
        x: Vec<f64>,
        /// Probabilities of 0 for each three-point factor.
        #[arg(long, value_delimiter = ',')]
        q: Vec<String>,
    },
    /// Solutions of a.x = a.x' with x_i, x_i' in the given sets.
    Count {
        #[command(flatten)]
        domain: DomainArg,
        /// One set per variable, repeat the flag: --set 0,1 --set 0,2.
        #[arg(long = "set", required = true, allow_hyphen_values = true)]
        sets: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<i64>,
    },
    /// Cauchy-Davenport for two sets.
    Cd {
        #[command(flatten)]
        domain: DomainArg,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b: Vec<i64>,
    },
    /// Entropy power inequality for uniforms on integer sets.
    Epi {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b: Vec<i64>,
    },
    /// Entropy gain of X+ + X- over X for uniform X on n points.
    Gap {
        n: u64,
        /// Sweep n..=to.
        #[arg(long)]
        to: Option<u64>,
    },
    /// Brute-force cross-checks.
    Oracle {
        #[arg(long, value_enum)]
        mode: OracleMode,
        pmfs: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<i64>,
        /// Random instances for extremal mode when no distributions are given.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        factors: usize,
        #[command(flatten)]
        domain: DomainArg,
    },
    /// Runs the acceptance criteria.
    Selftest {
        /// Criteria to run, default all.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u8>,
    },
}

/// Reads a distribution given inline or as a path (`-` for stdin).
fn read_fn(arg: &str) -> CliResult<NonnegFn> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|source| CliError::Io { path: "-".into(), source })?
    } else {
        std::fs::read_to_string(arg).map_err(|source| CliError::Io { path: arg.into(), source })?
    };
    Ok(parse_fn(&text)?)
}

fn read_pmf(arg: &str) -> CliResult<Pmf> {
    Ok(Pmf::try_from_fn(read_fn(arg)?)?)
}

fn parse_set(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("bad set element {t:?}"))))
        .collect()
}

struct Ctx {
    alphas: Vec<Alpha>,
    bits: bool,
    seed: u64,
}

impl Ctx {
    fn unit(&self) -> &'static str {
        if self.bits {
            "bits"
        } else {
            "nats"
        }
    }

    fn scale(&self, h: f64) -> f64 {
        if self.bits {
            h / std::f64::consts::LN_2
        } else {
            h
        }
    }

    fn entropy(&self, f: &Pmf, a: &Alpha) -> f64 {
        self.scale(renyi(f, a))
    }
}

fn regularity_name(r: Regularity) -> &'static str {
    match r {
        Regularity::Triangle => "triangle",
        Regularity::Square => "square",
        Regularity::Neither => "neither",
    }
}

fn entropy_cmd(ctx: &Ctx, pmf: &str) -> CliResult<Report> {
    let f = read_pmf(pmf)?;
    let values: Vec<(Alpha, f64)> = ctx.alphas.iter().map(|a| (a.clone(), ctx.entropy(&f, a))).collect();
    let mut r = Report::new(json!({
        "pmf": fn_to_value(&f),
        "unit": ctx.unit(),
        "entropies": values.iter().map(|(a, h)| json!({"alpha": a.to_string(), "value": h})).collect::<Vec<_>>(),
    }));
    r.table(vec!["alpha", "entropy"]);
    for (a, h) in &values {
        r.line(format!("H_{a} = {h} {}", ctx.unit()));
        r.row(vec![a.to_string(), h.to_string()]);
    }
    Ok(r)
}

fn rearrange_cmd(pmf: &str, sign: SignArg) -> CliResult<Report> {
    let f = read_fn(pmf)?;
    let sign = match sign {
        SignArg::Plus => Sign::Plus,
        SignArg::Minus => Sign::Minus,
        SignArg::Star => Sign::Star,
    };
    let g = rearrange(&f, sign)?;
    let kind = regularity_name(classify_regularity(&f));
    let mut r = Report::new(json!({"regularity": kind, "result": fn_to_value(&g)}));
    r.line(format!("regularity: {kind}")).line(to_canonical(&g));
    fn_rows(&mut r, &[("result", &g)]);
    Ok(r)
}

fn fn_rows(r: &mut Report, parts: &[(&str, &NonnegFn)]) {
    r.table(vec!["part", "index", "mass"]);
    for (name, f) in parts {
        for (i, v) in f.iter() {
            r.row(vec![name.to_string(), i.to_string(), format_rational(v)]);
        }
    }
}

fn decompose_cmd(pmf: &str) -> CliResult<Report> {
    let f = read_fn(pmf)?;
    let d = decompose(&f);
    let mut r = Report::new(json!({
        "regularity": regularity_name(classify_regularity(&f)),
        "triangle": fn_to_value(&d.triangle),
        "square": fn_to_value(&d.square),
        "ordering": d.ordering.indices(),
    }));
    r.line(format!("triangle: {}", to_canonical(&d.triangle)))
        .line(format!("square:   {}", to_canonical(&d.square)));
    fn_rows(&mut r, &[("triangle", &d.triangle), ("square", &d.square)]);
    Ok(r)
}

fn lowerbound_cmd(ctx: &Ctx, pmfs: &[String]) -> CliResult<Report> {
    let fs = pmfs.iter().map(|s| read_pmf(s)).collect::<CliResult<Vec<_>>>()?;
    let report = match verify_main_inequality(&fs, &ctx.alphas) {
        Ok(rep) => rep,
        Err(zpz_entropy::Error::BoundViolated { failing_prefix }) => {
            let mut r = Report::new(json!({"majorized": false, "failing_prefix": failing_prefix}));
            r.line(format!("majorization fails at prefix {failing_prefix}: FAIL"));
            r.passed = false;
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    let rows: Vec<(String, f64, f64)> = report
        .entropies
        .iter()
        .map(|p| (p.alpha.to_string(), ctx.scale(p.lhs), ctx.scale(p.extremal)))
        .collect();
    let mut r = Report::new(json!({
        "lhs": fn_to_value(&report.lhs),
        "extremal": fn_to_value(&report.extremal),
        "majorized": true,
        "unit": ctx.unit(),
        "entropies": rows.iter().map(|(a, l, e)| json!({"alpha": a, "lhs": l, "extremal": e, "gap": l - e})).collect::<Vec<_>>(),
    }));
    r.line(format!("sum:      {}", to_canonical(&report.lhs)))
        .line(format!("extremal: {}", to_canonical(&report.extremal)))
        .line("majorized: PASS");
    r.table(vec!["instance", "alpha", "lhs", "rhs", "gap"]);
    for (a, l, e) in &rows {
        r.line(format!("H_{a}: {l} >= {e} (gap {}) {}", l - e, ctx.unit()));
        r.row(vec!["0".into(), a.clone(), l.to_string(), e.to_string(), (l - e).to_string()]);
    }
    Ok(r)
}

fn linear_form(coeffs: &[i64], pmfs: &[String]) -> CliResult<LinearForm> {
    let fs = pmfs.iter().map(|s| read_pmf(s)).collect::<CliResult<Vec<_>>>()?;
    Ok(match fs.as_slice() {
        [law] => LinearForm::iid(coeffs.to_vec(), law.clone())?,
        _ => LinearForm::new(coeffs.to_vec(), fs)?,
    })
}

fn lo_cmd(ctx: &Ctx, coeffs: &[i64], pmfs: &[String]) -> CliResult<Report> {
    let form = linear_form(coeffs, pmfs)?;
    let q = small_ball(&form)?;
    let bounds = ctx
        .alphas
        .iter()
        .map(|a| Ok((a.to_string(), lo_entropy_bound(&form, a)?)))
        .collect::<CliResult<Vec<_>>>()?;
    let mut r = Report::new(json!({
        "small_ball": format_rational(&q),
        "unit": ctx.unit(),
        "bounds": bounds.iter().map(|(a, b)| json!({
            "alpha": a,
            "weighted": ctx.scale(b.weighted),
            "unweighted": ctx.scale(b.unweighted),
            "holds": b.holds,
            "exact": b.exact,
        })).collect::<Vec<_>>(),
    }));
    r.line(format!("max point mass: {}", format_rational(&q)));
    r.table(vec!["instance", "alpha", "lhs", "rhs", "gap"]);
    for (a, b) in &bounds {
        let (w, u) = (ctx.scale(b.weighted), ctx.scale(b.unweighted));
        r.line(format!("H_{a}: weighted {w} >= unweighted {u} {}", verdict(b.holds)));
        r.row(vec!["0".into(), a.clone(), w.to_string(), u.to_string(), (w - u).to_string()]);
        r.passed &= b.holds;
    }
    Ok(r)
}

fn kanter_cmd(xs: &[f64], qs: &[String]) -> CliResult<Report> {
    if xs.is_empty() && qs.is_empty() {
        return Err(CliError::Usage("give --x points or --q probabilities".into()));
    }
    let gs = xs.iter().map(|&x| Ok((x, kanter_g(x)?))).collect::<CliResult<Vec<_>>>()?;
    let mut r = Report::new(Value::Null);
    r.table(vec!["x", "G"]);
    for (x, g) in &gs {
        r.line(format!("G({x}) = {g}"));
        r.row(vec![x.to_string(), g.to_string()]);
    }
    let mut check = Value::Null;
    if !qs.is_empty() {
        let qs = qs.iter().map(|s| parse_rational(s)).collect::<zpz_entropy::Result<Vec<Mass>>>()?;
        let k = kanter_small_ball_check(&qs)?;
        let p = k.probability.to_f64().unwrap_or(f64::NAN);
        r.line(format!(
            "P(sum in {{0,1}}) = {} ~ {p} <= G = {} {}",
            format_rational(&k.probability),
            k.bound,
            verdict(k.holds)
        ));
        r.passed = k.holds;
        check = json!({"probability": format_rational(&k.probability), "bound": k.bound, "holds": k.holds});
    }
    r.json = json!({
        "values": gs.iter().map(|(x, g)| json!({"x": x, "G": g})).collect::<Vec<_>>(),
        "check": check,
    });
    Ok(r)
}

fn count_cmd(domain: Domain, sets: &[String], coeffs: &[i64]) -> CliResult<Report> {
    let sets = sets.iter().map(|s| parse_set(s)).collect::<CliResult<Vec<_>>>()?;
    let coeffs = if coeffs.is_empty() { vec![1; sets.len()] } else { coeffs.to_vec() };
    let (count, best) = count_solutions(domain, &sets, &coeffs)?;
    let ok = count <= best;
    let mut r =
        Report::new(json!({"solutions": count.to_string(), "maximum": best.to_string(), "holds": ok}));
    r.line(format!("{count} <= {best} {}", verdict(ok)));
    r.table(vec!["solutions", "maximum", "holds"]).row(vec![
        count.to_string(),
        best.to_string(),
        ok.to_string(),
    ]);
    r.passed = ok;
    Ok(r)
}

fn cd_cmd(domain: Domain, a: &[i64], b: &[i64]) -> CliResult<Report> {
    let c = cauchy_davenport_check(a, b, domain)?;
    let mut r = Report::new(json!({
        "sumset_size": c.sumset_size,
        "bound": c.bound,
        "rearranged_size": c.rearranged_size,
        "holds": c.holds,
    }));
    r.line(format!("{} ≥ {} {}", c.sumset_size, c.bound, verdict(c.holds)))
        .line(format!("rearranged sumset size: {}", c.rearranged_size));
    r.table(vec!["sumset_size", "bound", "rearranged_size", "holds"]).row(vec![
        c.sumset_size.to_string(),
        c.bound.to_string(),
        c.rearranged_size.to_string(),
        c.holds.to_string(),
    ]);
    r.passed = c.holds;
    Ok(r)
}

fn epi_cmd(a: &[i64], b: &[i64]) -> CliResult<Report> {
    let e = discrete_epi_check(a, b)?;
    let ok = e.holds();
    let mut r =
        Report::new(json!({"n_sum": e.n_sum, "n_x": e.n_x, "n_y": e.n_y, "slack": e.slack, "holds": ok}));
    r.line(format!(
        "N(X+Y) + 1 = {} >= N(X) + N(Y) = {} (slack {}) {}",
        e.n_sum + 1.0,
        e.n_x + e.n_y,
        e.slack,
        verdict(ok)
    ));
    r.table(vec!["n_sum", "n_x", "n_y", "slack"]).row(vec![
        e.n_sum.to_string(),
        e.n_x.to_string(),
        e.n_y.to_string(),
        e.slack.to_string(),
    ]);
    r.passed = ok;
    Ok(r)
}

fn gap_cmd(ctx: &Ctx, n: u64, to: Option<u64>) -> CliResult<Report> {
    let end = to.unwrap_or(n);
    if end < n {
        return Err(CliError::Usage(format!("--to {end} is below n = {n}")));
    }
    let mut r = Report::new(Value::Null);
    r.table(vec!["n", "gap", "estimate", "holds"]);
    let mut items = Vec::new();
    for k in n..=end {
        let (g, est) = doubling_gap(k)?;
        let (g, est) = (ctx.scale(g), ctx.scale(est));
        let ok = g >= est - 1e-12;
        r.passed &= ok;
        r.line(format!("n = {k}: gap {g} >= {est} {}", verdict(ok)));
        r.row(vec![k.to_string(), g.to_string(), est.to_string(), ok.to_string()]);
        items.push(json!({"n": k, "gap": g, "estimate": est, "holds": ok}));
    }
    r.json = json!({"unit": ctx.unit(), "gaps": items});
    Ok(r)
}

fn oracle_cmd(
    ctx: &Ctx,
    mode: OracleMode,
    pmfs: &[String],
    coeffs: &[i64],
    trials: usize,
    factors: usize,
    domain: DomainArg,
) -> CliResult<Report> {
    match mode {
        OracleMode::Perm => {
            let [f, g] = pmfs else {
                return Err(CliError::Usage("perm mode takes exactly two distributions".into()));
            };
            let (f, g) = (read_pmf(f)?, read_pmf(g)?);
            let bound = zpz_entropy::extremal_distribution(&[f.clone(), g.clone()])?;
            let mut r = Report::new(Value::Null);
            r.table(vec!["alpha", "minimum", "bound", "holds"]);
            let mut items = Vec::new();
            for a in &ctx.alphas {
                let m = min_entropy_over_permutations(&f, &g, a)?;
                let (h, b) = (ctx.scale(m.entropy), ctx.entropy(&bound, a));
                let ok = h >= b - 1e-12;
                r.passed &= ok;
                r.line(format!(
                    "H_{a}: minimum {h} over {} arrangements, bound {b} {}",
                    m.searched,
                    verdict(ok)
                ));
                r.row(vec![a.to_string(), h.to_string(), b.to_string(), ok.to_string()]);
                items.push(json!({
                    "alpha": a.to_string(),
                    "minimum": h,
                    "bound": b,
                    "first": m.pair.first,
                    "second": m.pair.second,
                    "distribution": fn_to_value(&m.distribution),
                    "searched": m.searched,
                }));
            }
            r.json = json!({"unit": ctx.unit(), "results": items});
            Ok(r)
        }
        OracleMode::Extremal => {
            let instances: Vec<Vec<Pmf>> = if pmfs.is_empty() {
                let d = match domain.modulus {
                    Some(_) => domain.domain()?,
                    None => Domain::cyclic(5)?,
                };
                let mut rng = seeded(ctx.seed);
                (0..trials)
                    .map(|_| (0..factors).map(|_| random_mixed_pmf(&mut rng, d, 64, 6)).collect())
                    .collect()
            } else {
                vec![pmfs.iter().map(|s| read_pmf(s)).collect::<CliResult<Vec<_>>>()?]
            };
            let c = brute_extremal_check(&instances)?;
            let mut r = Report::new(json!({
                "checked": c.checked,
                "mismatches": c.mismatches,
                "unmajorized": c.unmajorized,
                "passed": c.passed(),
            }));
            r.line(format!(
                "{} instances, {} mismatches, {} unmajorized {}",
                c.checked,
                c.mismatches.len(),
                c.unmajorized.len(),
                verdict(c.passed())
            ));
            r.table(vec!["checked", "mismatches", "unmajorized"]).row(vec![
                c.checked.to_string(),
                c.mismatches.len().to_string(),
                c.unmajorized.len().to_string(),
            ]);
            r.passed = c.passed();
            Ok(r)
        }
        OracleMode::Smallball => {
            let form = linear_form(coeffs, pmfs)?;
            let brute = brute_small_ball(&form)?;
            let fast = small_ball(&form)?;
            let ok = brute == fast;
            let mut r = Report::new(
                json!({"brute": format_rational(&brute), "convolution": format_rational(&fast), "agree": ok}),
            );
            r.line(format!(
                "enumeration {} = convolution {} {}",
                format_rational(&brute),
                format_rational(&fast),
                verdict(ok)
            ));
            r.table(vec!["brute", "convolution", "agree"]).row(vec![
                format_rational(&brute),
                format_rational(&fast),
                ok.to_string(),
            ]);
            r.passed = ok;
            Ok(r)
        }
    }
}

fn selftest_cmd(ctx: &Ctx, ids: &[u8]) -> CliResult<Report> {
    let ids: Vec<u8> =
        if ids.is_empty() { CRITERIA.iter().map(|(id, _)| *id).collect() } else { ids.to_vec() };
    if let Some(bad) = ids.iter().find(|id| !(1..=10).contains(*id)) {
        return Err(CliError::Usage(format!("criterion {bad} is not in 1..=10")));
    }
    let mut r = Report::new(Value::Null);
    r.table(vec!["criterion", "name", "passed", "detail", "seconds"]);
    let mut items = Vec::new();
    for id in ids {
        let c = run_criterion(id, ctx.seed)?;
        r.passed &= c.passed;
        r.line(c.to_string());
        r.row(vec![
            c.id.to_string(),
            c.name.into(),
            c.passed.to_string(),
            c.detail.clone(),
            c.elapsed.as_secs_f64().to_string(),
        ]);
        items.push(json!({"criterion": c.id, "name": c.name, "passed": c.passed, "detail": c.detail, "seconds": c.elapsed.as_secs_f64()}));
    }
    r.json = json!({"seed": ctx.seed, "criteria": items});
    Ok(r)
}

fn run(cli: Cli) -> CliResult<Report> {
    let ctx = Ctx { alphas: cli.alpha, bits: cli.bits, seed: cli.seed };
    match cli.command {
        Command::Entropy { pmf } => entropy_cmd(&ctx, &pmf),
        Command::Rearrange { pmf, sign } => rearrange_cmd(&pmf, sign),
        Command::Decompose { pmf } => decompose_cmd(&pmf),
        Command::Lowerbound { pmfs } => lowerbound_cmd(&ctx, &pmfs),
        Command::Lo { coeffs, pmfs } => lo_cmd(&ctx, &coeffs, &pmfs),
        Command::Kanter { x, q } => kanter_cmd(&x, &q),
        Command::Count { domain, sets, coeffs } => count_cmd(domain.domain()?, &sets, &coeffs),
        Command::Cd { domain, a, b } => cd_cmd(domain.domain()?, &a, &b),
        Command::Epi { a, b } => epi_cmd(&a, &b),
        Command::Gap { n, to } => gap_cmd(&ctx, n, to),
        Command::Oracle { mode, pmfs, coeffs, trials, factors, domain } => {
            oracle_cmd(&ctx, mode, &pmfs, &coeffs, trials, factors, domain)
        }
        Command::Selftest { criterion } => selftest_cmd(&ctx, &criterion),
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
    let format = cli.format;
    match run(cli) {
        Ok(r) => {
            println!("{}", r.render(format));
            if r.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
