use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qballot::json::{cx_to_json, laurent_to_json, polytope_to_json, report_to_json, to_pretty};
use qballot::{cache, runner, svg, tables, FormatError, SharedBallotTable};
use qballot_core::analysis::{newton_polytope, theorem1_numerator, Suite, SuiteOptions, SuiteReport, SuiteStatus};
use qballot_core::ballot::{ballot, catalan, qballot_paths, qcatalan, tilde_qcatalan, DEFAULT_PATH_CAP};
use qballot_core::qcore::to_qbinom_basis;
use qballot_core::{BallotCache, CFamily, Error, Method};

#[derive(Parser, Debug)]
#[command(name = "qballot", version, about = "q-ballot numbers, q-Catalan numbers and the C_n(x|q) family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Load the q-ballot memo table from this JSON file and save it back.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for suites that split over n.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table 1 (ballot numbers) or table 2 (q-ballot numbers).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// f(n,k) and f(n,k|q).
    Ballot {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Also enumerate lattice paths and compare.
        #[arg(long)]
        paths: bool,
    },
    /// C_n, C_n(q) and its reversal.
    Catalan {
        #[arg(long, required_unless_present = "max_n", conflicts_with = "max_n")]
        n: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// The polynomial C_n(x|q).
    Cx {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Theorem1)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Basis::Qbinom)]
        basis: Basis,
    },
    /// Run a named check suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<u32>,
        /// Andrews suite: also try the alternate readings.
        #[arg(long)]
        alternate_readings: bool,
    },
    /// Positivity and irreducibility of the numerators P_n for 2 <= n <= max-n.
    Conjecture {
        #[arg(long, default_value_t = 27)]
        max_n: u32,
    },
    /// Newton polytope of P_n.
    Polytope {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Difference,
    Theorem1,
    Recurrence,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Difference => Method::Difference,
            MethodArg::Theorem1 => Method::Theorem1,
            MethodArg::Recurrence => Method::Recurrence,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Qbinom,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}`; expected one of: {}", names.join(", "))
    })
}

enum CliError {
    Usage(String),
    Format(FormatError),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Format(e.into())
    }
}

struct Output {
    body: String,
    /// Verification outcome; `false` exits with status 1.
    passed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, passed: true }
    }
}

fn path_cap() -> Result<u32, CliError> {
    match std::env::var("QBALLOT_PATH_CAP") {
        Err(_) => Ok(DEFAULT_PATH_CAP),
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("QBALLOT_PATH_CAP must be a nonnegative integer, got `{v}`"))),
    }
}

fn require_format(cmd: &str, f: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&f) {
        return Ok(());
    }
    let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
    Err(CliError::Usage(format!("`{cmd}` supports --format {}", names.join("|"))))
}

fn run(cli: &Cli, memo: &SharedBallotTable) -> Result<Output, CliError> {
    let cap = path_cap()?;
    let jobs = cli.jobs.map(usize::from);
    let fmt = cli.format;
    let mut cache = memo.clone();
    match cli.command {
        Command::Table { which, max_n } => {
            require_format("table", fmt, &[Format::Text, Format::Json, Format::Csv])?;
            let t = tables::build(which, max_n, &mut cache)?;
            let body = match fmt {
                Format::Json => to_pretty(&t.to_json()),
                Format::Csv => {
                    let mut buf = Vec::new();
                    t.write_csv(&mut buf)?;
                    String::from_utf8(buf).expect("csv output is utf-8")
                }
                _ => t.render_text(),
            };
            Ok(Output::ok(body))
        }
        Command::Ballot { n, k, paths } => {
            require_format("ballot", fmt, &[Format::Text, Format::Json])?;
            if k > n {
                return Err(CliError::Usage(format!("ballot numbers need k <= n, got n = {n}, k = {k}")));
            }
            if paths && n + k > cap {
                return Err(CliError::Usage(format!(
                    "path enumeration is capped at n + k <= {cap} (set QBALLOT_PATH_CAP to raise it); got {}",
                    n + k
                )));
            }
            let f = ballot(n, k).to_integer();
            let fq = cache.qballot(n, k);
            let agree = if paths { Some(qballot_paths(n, k, cap)? == fq) } else { None };
            let body = if fmt == Format::Json {
                to_pretty(&json!({ "n": n, "k": k, "ballot": f.to_string(), "qballot": laurent_to_json(&fq), "paths_agree": agree }))
            } else {
                let mut s = format!("f({n},{k}) = {f}\nf({n},{k}|q) = {fq}\n");
                if let Some(a) = agree {
                    s.push_str(if a { "path enumeration: agrees\n" } else { "path enumeration: DISAGREES\n" });
                }
                s
            };
            Ok(Output { body, passed: agree != Some(false) })
        }
        Command::Catalan { n, max_n } => {
            require_format("catalan", fmt, &[Format::Text, Format::Json])?;
            let range = match (n, max_n) {
                (Some(n), _) => n..=n,
                (None, Some(m)) => 0..=m,
                (None, None) => unreachable!("clap requires one of --n, --max-n"),
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for n in range {
                let c = catalan(n);
                let cq = qcatalan(n, &mut cache);
                let ct = tilde_qcatalan(n, &mut cache);
                text.push_str(&format!("C_{n} = {c}\nC_{n}(q) = {cq}\nC~_{n}(q) = {ct}\n"));
                rows.push(json!({ "n": n, "catalan": c.to_string(), "q_catalan": laurent_to_json(&cq), "tilde_q_catalan": laurent_to_json(&ct) }));
            }
            let body = if fmt == Format::Json { to_pretty(&json!(rows)) } else { text };
            Ok(Output::ok(body))
        }
        Command::Cx { n, method, basis } => {
            require_format("cx", fmt, &[Format::Text, Format::Json])?;
            if n == 0 {
                return Err(CliError::Usage("C_n(x|q) is defined for n >= 1".into()));
            }
            let fam = CFamily::build(method.into(), n, &mut cache)?;
            let c = fam.get(n).expect("family built to n");
            let body = match (basis, fmt) {
                (Basis::Monomial, Format::Json) => to_pretty(&cx_to_json(n, "monomial", c.coeffs())),
                (Basis::Monomial, _) => format!("C_{n}(x|q) = {c}\n"),
                (Basis::Qbinom, Format::Json) => to_pretty(&cx_to_json(n, "qbinom", &to_qbinom_basis(c)?.coeffs)),
                (Basis::Qbinom, _) => format!("C_{n}(x|q) = {}\n", to_qbinom_basis(c)?),
            };
            Ok(Output::ok(body))
        }
        Command::Verify { suite, max_n, alternate_readings } => {
            require_format("verify", fmt, &[Format::Text, Format::Json])?;
            let max_n = max_n.unwrap_or_else(|| suite.default_max_n());
            if suite == Suite::Paths && max_n > cap {
                return Err(CliError::Usage(format!(
                    "the paths suite enumerates up to n + k = {max_n}, above the cap {cap} (set QBALLOT_PATH_CAP)"
                )));
            }
            let opts = SuiteOptions { path_cap: cap, alternate_readings };
            let report = runner::run_parallel(suite, max_n, opts, jobs, memo)?;
            let body = if fmt == Format::Json { to_pretty(&report_to_json(&report)) } else { render_report(&report, max_n) };
            Ok(Output { body, passed: report.status != SuiteStatus::Fail })
        }
        Command::Conjecture { max_n } => {
            require_format("conjecture", fmt, &[Format::Text, Format::Json])?;
            let report = runner::run_parallel(Suite::Conjecture, max_n, SuiteOptions::default(), jobs, memo)?;
            let body =
                if fmt == Format::Json { to_pretty(&report_to_json(&report)) } else { render_conjecture(&report, max_n) };
            Ok(Output { body, passed: report.status == SuiteStatus::Pass })
        }
        Command::Polytope { n } => {
            require_format("polytope", fmt, &[Format::Text, Format::Json, Format::Svg])?;
            if n < 2 {
                return Err(CliError::Usage(format!("the Newton polytope is degenerate for n < 2, got n = {n}")));
            }
            let r = theorem1_numerator(n, &mut cache);
            let p = newton_polytope(&r)?;
            let body = match fmt {
                Format::Json => to_pretty(&polytope_to_json(n, &p)),
                Format::Svg => svg::render(n, &p),
                _ => {
                    let pts = |v: &[(i64, i64)]| v.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ");
                    let slopes: Vec<String> = p.upper_hull_slopes.iter().map(|s| s.to_string()).collect();
                    format!(
                        "Newton polytope of P_{n} in (q-exponent, x-exponent)\npoints: {}\nhull: {}\nupper hull: {}\nlower hull: {}\nupper hull slopes: {}\n",
                        pts(&p.points),
                        pts(&p.hull),
                        pts(&p.upper_hull),
                        pts(&p.lower_hull),
                        slopes.join(" ")
                    )
                }
            };
            Ok(Output::ok(body))
        }
    }
}

fn render_report(r: &SuiteReport, max_n: u32) -> String {
    let failed = r.failures().count();
    let mut s = format!("suite: {}\nmax n: {max_n}\nchecks: {}, failed: {failed}\n", r.suite, r.results.len());
    let reported = r.status == SuiteStatus::Reported;
    for c in &r.results {
        let tag = match (reported, c.pass) {
            (true, true) => "match",
            (true, false) => "mismatch",
            (false, false) => "FAIL",
            (false, true) if c.detail.is_some() => "note",
            _ => continue,
        };
        let k = c.k.map(|k| format!(" k={k}")).unwrap_or_default();
        let detail = c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default();
        s.push_str(&format!("[{tag}] {} n={}{k}{detail}\n", c.id, c.n));
    }
    let status = if reported { "reported, not asserted" } else { r.status.name() };
    s.push_str(&format!("status: {status}\n"));
    s
}

fn render_conjecture(r: &SuiteReport, max_n: u32) -> String {
    let mut s = String::from("n   polynomial  irreducible  positive  routes-agree\n");
    let ids = ["conj-polynomial", "conj-irreducible", "conj-positive", "conj-routes"];
    for n in 2..=max_n {
        let cell = |id: &str| {
            let ok = r.results.iter().filter(|c| c.n == n && c.id == id).all(|c| c.pass);
            if ok { "yes" } else { "NO" }
        };
        s.push_str(&format!(
            "{n:<3} {:<11} {:<12} {:<9} {}\n",
            cell(ids[0]),
            cell(ids[1]),
            cell(ids[2]),
            cell(ids[3])
        ));
    }
    s.push_str(&format!("status: {} (2 <= n <= {max_n})\n", r.status.name()));
    s
}

fn exit_code_for(e: &FormatError) -> u8 {
    match e {
        FormatError::Core(Error::Inconsistent(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let memo = match &cli.cache {
        Some(path) => match cache::load(path) {
            Ok(t) => SharedBallotTable::from_table(t),
            Err(e) => {
                eprintln!("qballot: cannot use cache: {e}");
                return ExitCode::from(2);
            }
        },
        None => SharedBallotTable::new(),
    };
    let out = match run(&cli, &memo) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            eprintln!("qballot: {msg}");
            eprintln!("run `qballot --help` for usage");
            return ExitCode::from(2);
        }
        Err(CliError::Format(e)) => {
            eprintln!("qballot: {e}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &out.body).map_err(|source| FormatError::Io { path: path.clone(), source }),
        None => std::io::stdout()
            .write_all(out.body.as_bytes())
            .map_err(|source| FormatError::Io { path: "<stdout>".into(), source }),
    };
    if let Err(e) = written {
        eprintln!("qballot: {e}");
        return ExitCode::from(2);
    }
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::save(path, &memo.snapshot()) {
            eprintln!("qballot: cannot save cache: {e}");
            return ExitCode::from(2);
        }
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
