use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gfact::error::Error;
use gfact::normfact::{explore_all_pairs, Caps, Exploration, Strategy};
use gfact::orderarith::{audit_claim, group_order, zsigmondy, Family, ScanRange, Variant, CLAIMS};
use gfact::table1::section2::verify_section2;
use gfact::table1::{
    default_params, line_def, markdown_summary, named_group, negative_control, registry, verify_line, LineReport, Params,
    RunOptions, ScenarioConfig, NEGATIVE_CONTROLS,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "gfact", version, about = "Normalizer and centralizer factorizations of almost simple groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// write the JSON report here (default: stdout summary only)
    #[arg(long)]
    json: Option<PathBuf>,
    /// keep wall-clock fields in JSON output (otherwise zeroed for reproducibility)
    #[arg(long)]
    timings: bool,
    /// accepted for compatibility; all computations are single-threaded
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify table lines (one line, a scenario config, or the default set)
    Verify {
        #[arg(long)]
        line: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        /// scenario config file (key = value)
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long)]
        element_cap: Option<u64>,
        #[arg(long)]
        orbit_cap: Option<u64>,
        /// markdown summary output path
        #[arg(long)]
        markdown: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Test all pairs of prime-order cyclic classes of a named group
    Explore {
        /// e.g. M11, Sym:7, Alt:6, PSL2(13), PGammaL2(8), SL:2:13
        #[arg(long)]
        group: String,
        /// also follow up composite orders
        #[arg(long)]
        composite: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Orbits of the spin-embedded Ω₈⁻(2) on minus-type 2-spaces over F_q
    Section2 {
        #[arg(long, default_value_t = 4)]
        q: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Scan an order-arithmetic claim over a parameter grid
    Audit {
        /// claim id, or "all"
        #[arg(long, default_value = "all")]
        claim: String,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        q_max: Option<u64>,
        /// print every scanned tuple as CSV
        #[arg(long)]
        csv: bool,
    },
    /// Primitive prime divisors of q^n - 1
    Zsigmondy {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// Group order from the closed formulas
    Orders {
        /// SL, GL, SU, GU, Sp, OmegaPlus, OmegaMinus, OmegaOdd, GO, SO, Sym, Alt, M11
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        q: u64,
        /// simple, linear, projective or conformal
        #[arg(long, default_value = "simple")]
        variant: String,
    },
    /// Run every line at its default parameters and print the markdown table
    Report {
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

/// Exit status for an error: caps map to 3, everything else is a configuration problem.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::Cap(_) | Error::DomainOverflow { .. } | Error::DimensionCap(_) => EXIT_CAP,
        _ => EXIT_CONFIG,
    }
}

fn strip_timings(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(m) => {
            for (k, x) in m.iter_mut() {
                if k == "elapsed_ms" || k == "seconds" {
                    *x = serde_json::Value::from(0);
                } else {
                    strip_timings(x);
                }
            }
        }
        serde_json::Value::Array(a) => a.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

fn emit_json(common: &Common, value: &impl serde::Serialize) -> Result<(), Error> {
    if let Some(path) = &common.json {
        let mut v = serde_json::to_value(value)?;
        if !common.timings {
            strip_timings(&mut v);
        }
        std::fs::write(path, serde_json::to_string_pretty(&v)? + "\n")?;
    }
    Ok(())
}

fn print_line(r: &LineReport) {
    let mark = |v: &Option<gfact::normfact::FactorizationReport>| v.as_ref().map_or("-".to_string(), |r| format!("{:?}", r.verdict));
    println!(
        "line {} (n={}, q={}) {}: N {} / C {} -> {}",
        r.line,
        r.params.n,
        r.params.q,
        r.group,
        mark(&r.normalizer),
        mark(&r.centralizer),
        if r.ok { "ok" } else if r.inconclusive() { "inconclusive" } else { "MISMATCH" }
    );
    for c in r.checks.iter().filter(|c| !c.ok) {
        println!("  failed check: {} {}", c.name, c.detail);
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
}

fn line_status(reports: &[LineReport]) -> u8 {
    if reports.iter().any(|r| !r.ok && !r.inconclusive()) {
        EXIT_MISMATCH
    } else if reports.iter().any(|r| r.inconclusive()) {
        EXIT_CAP
    } else {
        0
    }
}

fn run_lines(jobs: &[(u32, Params)], opts: &RunOptions) -> Result<Vec<LineReport>, Error> {
    let mut out = Vec::new();
    for &(line, p) in jobs {
        let r = verify_line(line, p, opts)?;
        print_line(&r);
        out.push(r);
    }
    Ok(out)
}

fn default_jobs() -> Vec<(u32, Params)> {
    registry().iter().flat_map(|d| d.defaults.iter().map(move |&(n, q)| (d.id, Params { n, q }))).collect()
}

fn explore(group: &str, composite: bool, common: &Common) -> Result<u8, Error> {
    let caps = Caps::default();
    let (ex, check): (Exploration, Option<_>) = if NEGATIVE_CONTROLS.contains(&group) {
        let (ex, c) = negative_control(group, caps, common.seed)?;
        (ex, Some(c))
    } else {
        let g = named_group(group, common.seed)?;
        (explore_all_pairs(&g, composite, caps, common.seed)?, None)
    };
    println!("{} of order {}: {} cyclic classes, max |N(<x>)| = {}", ex.group, ex.order, ex.classes.len(), ex.max_normalizer_order);
    for p in ex.pairs.iter().chain(&ex.composite_pairs) {
        println!("  pair |x|={} |y|={}: {:?}", p.x_order, p.y_order, p.report.verdict);
    }
    if ex.pairs.is_empty() && ex.composite_pairs.is_empty() {
        println!("  no factorizing pairs");
    }
    emit_json(common, &ex)?;
    match check {
        Some(c) => {
            println!("control: {} {}", if c.ok { "ok" } else { "MISMATCH" }, c.detail);
            Ok(if c.ok { 0 } else { EXIT_MISMATCH })
        }
        None => Ok(0),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Verify { line, n, q, config, strategy, element_cap, orbit_cap, markdown, common } => {
            let mut opts = RunOptions { seed: common.seed, strategy: strategy.parse::<Strategy>()?, ..Default::default() };
            let mut jobs = Vec::new();
            if let Some(path) = config {
                let cfg: ScenarioConfig = std::fs::read_to_string(&path)?.parse()?;
                let id: u32 = cfg.line.parse().map_err(|_| Error::Parse(format!("line {}", cfg.line)))?;
                let d = default_params(id)?;
                jobs.push((id, Params { n: cfg.n.unwrap_or(d.n), q: cfg.q.unwrap_or(d.q) }));
                opts.seed = cfg.seed;
                opts.strategy = cfg.strategy;
                opts.caps = Caps { elements: cfg.element_cap, orbit: cfg.orbit_cap };
                if !cfg.extensions.is_empty() {
                    eprintln!("note: extensions {:?} are fixed per line and ignored", cfg.extensions);
                }
            } else if let Some(id) = line {
                let d = line_def(id)?;
                let dp = default_params(d.id)?;
                jobs.push((id, Params { n: n.unwrap_or(dp.n), q: q.unwrap_or(dp.q) }));
            } else {
                jobs = default_jobs();
            }
            if let Some(e) = element_cap {
                opts.caps.elements = e;
            }
            if let Some(o) = orbit_cap {
                opts.caps.orbit = o;
            }
            if opts.caps.elements == 0 || opts.caps.orbit == 0 {
                return Err(Error::Parse("caps must be positive".into()));
            }
            let reports = run_lines(&jobs, &opts)?;
            emit_json(&common, &reports)?;
            if let Some(p) = markdown {
                std::fs::write(p, markdown_summary(&reports))?;
            }
            Ok(line_status(&reports))
        }
        Cmd::Explore { group, composite, common } => explore(&group, composite, &common),
        Cmd::Section2 { q, common } => {
            let r = verify_section2(q, common.seed)?;
            println!("q = {q}: expected domain {}", r.expected_domain);
            for c in &r.checks {
                println!("  [{}] {} {}", if c.ok { "ok" } else { "FAIL" }, c.name, c.detail);
            }
            emit_json(&common, &r)?;
            if r.status == gfact::table1::section2::Section2Status::InconclusiveScale {
                println!("inconclusive by scale");
                return Ok(EXIT_CAP);
            }
            println!("domain {}", r.domain_size);
            println!("{}", r.witness);
            println!("{}", r.augmented);
            if let Some((a, b)) = &r.untwisted {
                println!("{a}\n{b}");
            }
            Ok(if r.ok() { 0 } else { EXIT_MISMATCH })
        }
        Cmd::Audit { claim, n_max, q_max, csv } => {
            let mut range = ScanRange::default();
            range.n_max = n_max.unwrap_or(range.n_max);
            range.q_max = q_max.unwrap_or(range.q_max);
            let claims: Vec<&str> = if claim == "all" { CLAIMS.to_vec() } else { vec![claim.as_str()] };
            let mut code = 0;
            for c in claims {
                let r = audit_claim(c, range)?;
                if csv {
                    print!("{}", r.to_csv());
                }
                println!(
                    "{c}: satisfying {:?} expected {:?} -> {}",
                    r.satisfying,
                    r.expected,
                    if r.exact_match() { "exact" } else if r.contained() { "contained (not exact)" } else { "MISMATCH" }
                );
                if !r.exact_match() {
                    code = EXIT_MISMATCH;
                }
            }
            Ok(code)
        }
        Cmd::Zsigmondy { q, n } => {
            println!("{}", zsigmondy(q, n)?);
            Ok(0)
        }
        Cmd::Orders { family, n, q, variant } => {
            let fam: Family = family.parse()?;
            let var = match variant.to_ascii_lowercase().as_str() {
                "simple" => Variant::Simple,
                "linear" => Variant::Linear,
                "projective" => Variant::Projective,
                "conformal" => Variant::Conformal,
                v => return Err(Error::Parse(format!("variant {v}"))),
            };
            println!("{}", group_order(fam, n, q, var)?);
            Ok(0)
        }
        Cmd::Report { out, common } => {
            let opts = RunOptions { seed: common.seed, ..Default::default() };
            let reports = run_lines(&default_jobs(), &opts)?;
            let md = markdown_summary(&reports);
            match out {
                Some(p) => std::fs::write(p, &md)?,
                None => print!("{md}"),
            }
            emit_json(&common, &reports)?;
            Ok(line_status(&reports))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
