use std::fmt::Write as _;
use std::time::Instant;

use bihoradam_core::horadam::GeneratingFunction;
use bihoradam_core::identities::{default_bounds, IndexRange, Scope, SecondIndex, SweepBounds};
use bihoradam_core::{
    bh_term_counted, sweep_verify, Bicomplex, EvalStrategy, Execution, HoradamParams, IdentityId, IdentityReport,
    Preset, Rational,
};
use serde::Serialize;

use crate::args::{BenchArgs, Command, GfArgs, OutputFormat, TermArgs, VerifyArgs};

/// Captured output of one command.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

/// Usage-level failure, reported on stderr with exit status 2.
pub type CmdResult = Result<Outcome, String>;

pub fn run(command: &Command) -> CmdResult {
    match command {
        Command::Term(a) => term(a),
        Command::Gf(a) => gf(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    }
}

fn parse_strategy(s: &str) -> Result<EvalStrategy, String> {
    s.trim().parse::<EvalStrategy>().map_err(|e| e.to_string())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

fn csv_row(cells: &[String]) -> String {
    let mut s = cells.join(",");
    s.push('\n');
    s
}

fn components(b: &Bicomplex<Rational>) -> [String; 4] {
    [b.w.to_string(), b.x.to_string(), b.y.to_string(), b.z.to_string()]
}

fn term(args: &TermArgs) -> CmdResult {
    let params = args.params.resolve(Preset::Fibonacci);
    let strategy = parse_strategy(&args.strategy)?;
    let (value, _) = bh_term_counted(args.n, &params, strategy).map_err(|e| e.to_string())?;

    #[derive(Serialize)]
    struct TermJson<'a> {
        n: i64,
        coeffs: &'a Bicomplex<Rational>,
    }

    let stdout = match args.format {
        OutputFormat::Pretty => format!("{value}\n"),
        OutputFormat::Json => json(&TermJson {
            n: args.n,
            coeffs: &value,
        }),
        OutputFormat::Csv => {
            let mut row = vec![args.n.to_string()];
            row.extend(components(&value));
            csv_row(&["n", "1", "i", "j", "k"].map(String::from)) + &csv_row(&row)
        }
    };
    Ok(Outcome::ok(stdout))
}

/// `c_0 + c_1 t + c_2 t^2 ...` with negative coefficients folded into `-`.
fn format_poly(coeffs: &[Rational]) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        let power = match k {
            0 => String::new(),
            1 => "*t".to_string(),
            _ => format!("*t^{k}"),
        };
        if k == 0 {
            let _ = write!(s, "{c}{power}");
        } else if c.is_negative() {
            let _ = write!(s, " - {}{power}", c.abs());
        } else {
            let _ = write!(s, " + {c}{power}");
        }
    }
    s
}

fn gf(args: &GfArgs) -> CmdResult {
    let params = args.params.resolve(Preset::Fibonacci);
    let gf = GeneratingFunction::for_params(&params);
    let coeffs = gf.expand(args.order);

    #[derive(Serialize)]
    struct GfJson<'a> {
        params: &'a HoradamParams,
        numerator: &'a [Bicomplex<Rational>; 2],
        denominator: &'a [Rational; 3],
        coefficients: &'a [Bicomplex<Rational>],
    }

    let stdout = match args.format {
        OutputFormat::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "params: {params}");
            let _ = writeln!(s, "numerator: ({}) + ({})*t", gf.numerator[0], gf.numerator[1]);
            let _ = writeln!(s, "denominator: {}", format_poly(&gf.denominator));
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(s, "c_{n} = {c}");
            }
            s
        }
        OutputFormat::Json => json(&GfJson {
            params: &params,
            numerator: &gf.numerator,
            denominator: &gf.denominator,
            coefficients: &coeffs,
        }),
        OutputFormat::Csv => {
            let mut s = csv_row(&["part", "index", "1", "i", "j", "k"].map(String::from));
            for (idx, c) in gf.numerator.iter().enumerate() {
                let mut row = vec!["numerator".to_string(), idx.to_string()];
                row.extend(components(c));
                s += &csv_row(&row);
            }
            for (idx, d) in gf.denominator.iter().enumerate() {
                let row = [
                    "denominator".to_string(),
                    idx.to_string(),
                    d.to_string(),
                    "0".into(),
                    "0".into(),
                    "0".into(),
                ];
                s += &csv_row(&row);
            }
            for (idx, c) in coeffs.iter().enumerate() {
                let mut row = vec!["coefficient".to_string(), idx.to_string()];
                row.extend(components(c));
                s += &csv_row(&row);
            }
            s
        }
    };
    Ok(Outcome::ok(stdout))
}

enum Target {
    All,
    One(IdentityId),
}

fn verify_target(args: &VerifyArgs) -> Result<Target, String> {
    let name = args
        .target
        .as_deref()
        .or(args.identity.as_deref())
        .ok_or("verify needs an identity id or `all`")?;
    if name.eq_ignore_ascii_case("all") {
        return Ok(Target::All);
    }
    name.parse::<IdentityId>().map(Target::One).map_err(|e| e.to_string())
}

/// Default bounds for `id`, overridden by any flags given. In catalog mode
/// lower bounds are raised to each identity's smallest admissible index
/// and flags for an index the identity lacks are ignored.
fn bounds_for(id: IdentityId, args: &VerifyArgs, catalog: bool) -> Result<SweepBounds, String> {
    let defaults = default_bounds(id);
    let lower = |flag: Option<i64>, floor: i64, default: i64| match flag {
        Some(v) if catalog => v.max(floor),
        Some(v) => v,
        None => default,
    };
    let n = IndexRange::new(
        lower(args.n_min, id.min_n(), defaults.n.min),
        args.n_max.unwrap_or(defaults.n.max),
    );
    let m_flags = args.m_min.is_some() || args.m_max.is_some();
    let r_flags = args.r_min.is_some() || args.r_max.is_some();
    let kind = id.second_index();
    if !catalog {
        if m_flags && kind != Some(SecondIndex::M) {
            return Err(format!("{} has no m index", id.name()));
        }
        if r_flags && kind != Some(SecondIndex::R) {
            return Err(format!("{} has no r index", id.name()));
        }
    }
    let (min_flag, max_flag) = match kind {
        Some(SecondIndex::M) => (args.m_min, args.m_max),
        Some(SecondIndex::R) => (args.r_min, args.r_max),
        None => return Ok(SweepBounds::single(n)),
    };
    let second_default = defaults.second.expect("two-index identity has a second range");
    let second = IndexRange::new(
        lower(min_flag, id.min_second(), second_default.min),
        max_flag.unwrap_or(second_default.max),
    );
    Ok(SweepBounds::pair(n, second))
}

fn range_text(report: &IdentityReport) -> String {
    let mut s = format!("n in [{}, {}]", report.range.n.min, report.range.n.max);
    for (name, range) in [("m", report.range.m), ("r", report.range.r)] {
        if let Some(r) = range {
            let _ = write!(s, ", {name} in [{}, {}]", r.min, r.max);
        }
    }
    s
}

const PRETTY_COUNTEREXAMPLES: usize = 3;

fn pretty_report(report: &IdentityReport) -> String {
    let verdict = if report.holds() { "HOLDS" } else { "FAILS" };
    let mut s = format!(
        "{} {} {}: {verdict}",
        report.identity.name(),
        report.params,
        range_text(report)
    );
    if !report.holds() {
        let _ = write!(s, " ({} counterexamples)", report.counterexamples.len());
    }
    s.push('\n');
    for ce in report.counterexamples.iter().take(PRETTY_COUNTEREXAMPLES) {
        let mut at = format!("n={}", ce.indices.n);
        if let Some(m) = ce.indices.m {
            let _ = write!(at, " m={m}");
        }
        if let Some(r) = ce.indices.r {
            let _ = write!(at, " r={r}");
        }
        let _ = writeln!(s, "  {at}: lhs = {}", ce.lhs);
        let _ = writeln!(s, "  {at}: rhs = {}", ce.rhs);
        let _ = writeln!(s, "  {at}: lhs - rhs = {}", ce.difference);
        if let Some(reference) = &ce.reference {
            let _ = writeln!(s, "  {at}: closed form = {reference}");
        }
    }
    s
}

fn csv_report(report: &IdentityReport) -> String {
    let verdict = if report.holds() { "HOLDS" } else { "FAILS" };
    let (second_name, second) = match (report.range.m, report.range.r) {
        (Some(m), _) => ("m", Some(m)),
        (_, Some(r)) => ("r", Some(r)),
        _ => ("", None),
    };
    let first = report.counterexamples.first();
    csv_row(&[
        report.identity.name().to_string(),
        verdict.to_string(),
        report.counterexamples.len().to_string(),
        report.range.n.min.to_string(),
        report.range.n.max.to_string(),
        second_name.to_string(),
        second.map(|r| r.min.to_string()).unwrap_or_default(),
        second.map(|r| r.max.to_string()).unwrap_or_default(),
        first.map(|c| c.indices.n.to_string()).unwrap_or_default(),
        first
            .and_then(|c| c.indices.m.or(c.indices.r))
            .map(|v| v.to_string())
            .unwrap_or_default(),
    ])
}

fn verify(args: &VerifyArgs) -> CmdResult {
    let target = verify_target(args)?;
    let params = args.params.resolve(Preset::Lucas);
    let exec = Execution::default();
    let (reports, single) = match target {
        Target::One(id) => {
            let bounds = bounds_for(id, args, false)?;
            let report = sweep_verify(id, &params, &bounds, exec).map_err(|e| e.to_string())?;
            (vec![report], true)
        }
        Target::All => {
            let mut reports = Vec::with_capacity(IdentityId::ALL.len());
            for id in IdentityId::ALL {
                let p = match id.scope() {
                    Scope::FibonacciLucas => HoradamParams::lucas(),
                    Scope::Horadam => params.clone(),
                };
                let bounds = bounds_for(id, args, true)?;
                reports.push(sweep_verify(id, &p, &bounds, exec).map_err(|e| e.to_string())?);
            }
            (reports, false)
        }
    };

    let stdout = match args.format {
        OutputFormat::Json if single => json(&reports[0]),
        OutputFormat::Json => json(&reports),
        OutputFormat::Pretty => reports.iter().map(pretty_report).collect(),
        OutputFormat::Csv => {
            let header = [
                "identity",
                "verdict",
                "counterexamples",
                "n_min",
                "n_max",
                "second",
                "second_min",
                "second_max",
                "first_n",
                "first_second",
            ]
            .map(String::from);
            csv_row(&header) + &reports.iter().map(csv_report).collect::<String>()
        }
    };
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| !r.holds())
        .map(|r| r.identity.name())
        .collect();
    let (code, stderr) = if failing.is_empty() {
        (0, String::new())
    } else {
        (1, format!("FAILS: {}\n", failing.join(", ")))
    };
    Ok(Outcome { stdout, stderr, code })
}

#[derive(Serialize)]
struct BenchRow {
    strategy: &'static str,
    elapsed_us: u128,
    ring_muls: u64,
    matrix_products: u64,
}

/// Short rendering of a possibly huge value.
fn summarize(value: &Bicomplex<Rational>) -> String {
    const LIMIT: usize = 200;
    let full = value.to_string();
    if full.len() <= LIMIT {
        full
    } else {
        let digits = value.w.numer().to_string().trim_start_matches('-').len();
        format!("({digits}-digit real part)")
    }
}

fn bench(args: &BenchArgs) -> CmdResult {
    let params = args.params.resolve(Preset::Fibonacci);
    let degenerate = params.delta() == Rational::from(0);
    let mut stderr = String::new();
    let strategies: Vec<EvalStrategy> = match &args.strategies {
        Some(list) => {
            let parsed = list.iter().map(|s| parse_strategy(s)).collect::<Result<Vec<_>, _>>()?;
            if degenerate && parsed.contains(&EvalStrategy::Binet) {
                return Err(format!("binet needs a nonzero discriminant; p^2 + 4q = 0 for {params}"));
            }
            parsed
        }
        None => {
            if degenerate {
                stderr.push_str("note: binet skipped, discriminant is zero\n");
            }
            EvalStrategy::ALL
                .into_iter()
                .filter(|s| !(degenerate && *s == EvalStrategy::Binet))
                .collect()
        }
    };
    if strategies.is_empty() {
        return Err("no strategies given".into());
    }

    let mut rows = Vec::with_capacity(strategies.len());
    let mut values: Vec<Bicomplex<Rational>> = Vec::with_capacity(strategies.len());
    for &strategy in &strategies {
        let start = Instant::now();
        let (value, ops) = bh_term_counted(args.n, &params, strategy).map_err(|e| e.to_string())?;
        let elapsed_us = start.elapsed().as_micros();
        rows.push(BenchRow {
            strategy: strategy.name(),
            elapsed_us,
            ring_muls: ops.ring_muls,
            matrix_products: ops.matrix_products,
        });
        values.push(value);
    }

    let mut agree = true;
    for (strategy, value) in strategies.iter().zip(&values).skip(1) {
        if *value != values[0] {
            agree = false;
            let _ = writeln!(
                stderr,
                "DISAGREEMENT at n={}: {} gives {} but {} gives {}",
                args.n,
                strategies[0].name(),
                summarize(&values[0]),
                strategy.name(),
                summarize(value)
            );
        }
    }

    #[derive(Serialize)]
    struct BenchJson<'a> {
        n: i64,
        params: &'a HoradamParams,
        agree: bool,
        results: &'a [BenchRow],
    }

    let stdout = match args.format {
        OutputFormat::Pretty => {
            let mut s = format!("BH_{} for {params}: {}\n", args.n, summarize(&values[0]));
            let _ = writeln!(
                s,
                "{:<10} {:>12} {:>12} {:>16}",
                "strategy", "elapsed_us", "ring_muls", "matrix_products"
            );
            for row in &rows {
                let _ = writeln!(
                    s,
                    "{:<10} {:>12} {:>12} {:>16}",
                    row.strategy, row.elapsed_us, row.ring_muls, row.matrix_products
                );
            }
            let _ = writeln!(
                s,
                "{}",
                if agree {
                    "all strategies agree"
                } else {
                    "STRATEGIES DISAGREE"
                }
            );
            s
        }
        OutputFormat::Json => json(&BenchJson {
            n: args.n,
            params: &params,
            agree,
            results: &rows,
        }),
        OutputFormat::Csv => {
            let mut s = csv_row(&["strategy", "elapsed_us", "ring_muls", "matrix_products"].map(String::from));
            for row in &rows {
                s += &csv_row(&[
                    row.strategy.to_string(),
                    row.elapsed_us.to_string(),
                    row.ring_muls.to_string(),
                    row.matrix_products.to_string(),
                ]);
            }
            s
        }
    };
    Ok(Outcome {
        stdout,
        stderr,
        code: if agree { 0 } else { 1 },
    })
}
