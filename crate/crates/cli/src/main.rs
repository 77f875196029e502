mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use output::{emit, Format, Report};
use rootloci::exactnum::text::render_ratfunc;
use rootloci::exactnum::{parse_rat, render_rat, Rat, RatFunc};
use rootloci::ideals::{
    dual_ring_spanning, generator_table, hilbert_series_theorem, ideal_dimension, Grading,
    IdealSpec,
};
use rootloci::interp::{interp_jack, modified_interp_jack};
use rootloci::jack::{jack, modified_jack};
use rootloci::macdonald::{macdonald, modified_macdonald, special_q};
use rootloci::partitions::{
    classify, companions_bruteforce, enumerate_partitions, enumerate_up_to, is_admissible, Case,
    Partition,
};
use rootloci::symfunc::{sympoly_to_json, JsonCoeff, SymPoly};
use rootloci::verify::{default_t0s, run_criterion, VerifyConfig, CRITERIA};

#[derive(Parser)]
#[command(name = "rootloci", version, about = "Exact computations for ideals of symmetric polynomials vanishing on double diagonals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Screen every rank modulo this prime (2^30 < p < 2^32).
    #[arg(long, value_parser = parse_prime, global = true)]
    mod_prime: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// List the admissible partitions of a degree with their case tags.
    Admissible {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        /// Include non-admissible partitions.
        #[arg(long)]
        all: bool,
    },
    /// Ideal dimensions against the character and the admissible count.
    Hilbert {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..) )]
        n: u64,
        #[arg(long)]
        max_degree: u32,
    },
    /// Jack polynomial P_λ (or the modified P̄_λ).
    Jack(PolyArgs),
    /// Macdonald polynomial P_λ in q at a fixed t = t0.
    Macdonald {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_parser = parse_t0, default_value = "2")]
        t0: Rat,
        /// Specialize q = t0^-2.
        #[arg(long)]
        special: bool,
    },
    /// Interpolation Jack polynomial P*_λ (or the modified P̄*_λ).
    Interp(PolyArgs),
    /// Degrees of minimal generators.
    Gendeg {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..))]
        n: u64,
        #[arg(long)]
        max_degree: u32,
        /// Use the p-fold coincidence ideal instead of the double diagonal.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value = "binary-form")]
        grading: GradingArg,
    },
    /// Run the acceptance suite; exits 1 if any criterion fails.
    Verify {
        /// Restrict criteria that range over several n to this one.
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..))]
        n: Option<u64>,
        #[arg(long = "t0", value_parser = parse_t0)]
        t0s: Vec<Rat>,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
        /// Run only these criteria (1-16).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=16))]
        criterion: Vec<u64>,
        /// Include the full generator list for n = 6.
        #[arg(long)]
        extended: bool,
    },
    /// Brute-force the companions of every Case A partition.
    Companions {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..))]
        n: u64,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
    },
    /// Dual-ring quotient dimensions against admissible counts.
    Dualring {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(4..))]
        n: u64,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Parts, comma separated; zero padded to length n.
    #[arg(long, value_delimiter = ',')]
    lambda: Vec<u32>,
    /// Use the modified combination for admissible λ.
    #[arg(long)]
    modified: bool,
    /// Specialize θ to this value (jack, interp).
    #[arg(long, value_parser = parse_rational, default_value = "-1/2")]
    theta: Rat,
    /// Keep θ symbolic (jack, interp).
    #[arg(long)]
    symbolic: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GradingArg {
    BinaryForm,
    Weight,
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("{s:?} is not a rational number"))
}

fn parse_t0(s: &str) -> Result<Rat, String> {
    let t = parse_rational(s)?;
    let one = Rat::from_integer(1.into());
    if t == Rat::from_integer(0.into()) || t == one || t == -one {
        return Err("t0 must not be 0, 1 or -1".into());
    }
    Ok(t)
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if p <= 1 << 30 || p >= 1 << 32 {
        return Err("prime must lie between 2^30 and 2^32".into());
    }
    if (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(format!("{p} is not prime"));
    }
    Ok(p)
}

enum Failure {
    Usage(String),
    Compute(String),
    Verify(String),
}

impl From<rootloci::error::Error> for Failure {
    fn from(e: rootloci::error::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn partition_arg(parts: &[u32], n: usize) -> Result<Partition, Failure> {
    if parts.len() > n {
        return Err(Failure::Usage(format!("λ has more than {n} parts")));
    }
    let mut v = parts.to_vec();
    v.resize(n, 0);
    Partition::new(v).map_err(|_| Failure::Usage("λ must be weakly decreasing".into()))
}

fn case_fields(l: &Partition) -> (Option<&'static str>, Option<usize>, Option<Partition>) {
    match classify(l) {
        Ok(tag) => {
            let (name, pivot) = match tag.case {
                Case::A(i) => ("A", Some(i)),
                Case::B(i) => ("B", Some(i)),
                Case::C => ("C", None),
            };
            (Some(name), pivot, tag.companion)
        }
        Err(_) => (None, None, None),
    }
}

fn admissible(n: usize, degree: u32, all: bool) -> Report {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for l in enumerate_partitions(n, degree) {
        let ok = is_admissible(&l);
        if !ok && !all {
            continue;
        }
        let (case, pivot, companion) = case_fields(&l);
        let mut line = format!("{l}  {}", case.unwrap_or("-"));
        if let Some(i) = pivot {
            line += &format!("  pivot {i}");
        }
        if let Some(c) = &companion {
            line += &format!("  companion {c}");
        }
        text += &line;
        text.push('\n');
        rows.push(vec![
            l.to_string(),
            ok.to_string(),
            case.unwrap_or("").into(),
            pivot.map(|i| i.to_string()).unwrap_or_default(),
            companion.as_ref().map(|c| c.to_string()).unwrap_or_default(),
        ]);
        items.push(json!({
            "partition": l.parts(),
            "admissible": ok,
            "case": case,
            "pivot": pivot,
            "companion": companion.as_ref().map(|c| c.parts().to_vec()),
        }));
    }
    Report {
        text,
        json: json!({"schema": 1, "n": n, "degree": degree, "partitions": items}),
        header: vec!["partition", "admissible", "case", "pivot", "companion"],
        rows,
    }
}

fn hilbert(n: usize, bound: u32, prime: Option<u64>) -> Result<Report, Failure> {
    let series = hilbert_series_theorem(n, bound as usize);
    let spec = IdealSpec::double_diagonal(n);
    let mut text = format!("{:>3} {:>6} {:>10} {:>8}\n", "d", "dim", "admissible", "series");
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for d in 0..=bound {
        let dim = ideal_dimension(&spec, d, prime)?;
        let count = enumerate_partitions(n, d).into_iter().filter(is_admissible).count();
        let coeff = series.coeff(d as usize);
        text += &format!("{d:>3} {dim:>6} {count:>10} {coeff:>8}\n");
        rows.push(vec![n.to_string(), d.to_string(), dim.to_string(), count.to_string(), coeff.to_string()]);
        items.push(json!({"n": n, "d": d, "dim": dim, "admissible_count": count, "series_coeff": coeff}));
    }
    Ok(Report {
        text,
        json: json!({"schema": 1, "rows": items}),
        header: vec!["n", "d", "dim", "admissible_count", "series_coeff"],
        rows,
    })
}

fn poly_report<F: JsonCoeff>(f: &SymPoly<F>, symbol: &str, extra: &[(&str, Value)], show: impl Fn(&F) -> String) -> Report {
    let mut text = String::new();
    let mut rows = Vec::new();
    for (l, c) in f.terms().iter().rev() {
        text += &format!("m{l}  {}\n", show(c));
        let (num, den) = c.to_num_den(symbol);
        rows.push(vec![l.to_string(), num, den]);
    }
    if text.is_empty() {
        text = "0\n".into();
    }
    Report {
        text,
        json: sympoly_to_json(f, symbol, extra),
        header: vec!["partition", "num", "den"],
        rows,
    }
}

fn theta_poly(f: &SymPoly<RatFunc>, a: &PolyArgs, extra: Vec<(&str, Value)>) -> Result<Report, Failure> {
    if a.symbolic {
        return Ok(poly_report(f, "theta", &extra, |c| render_ratfunc(c, "theta")));
    }
    let g = f.specialize(&a.theta)?;
    let mut extra = extra;
    extra.push(("theta", json!(render_rat(&a.theta))));
    Ok(poly_report(&g, "none", &extra, render_rat))
}

fn modified_check(l: &Partition, modified: bool) -> Result<(), Failure> {
    if modified && !is_admissible(l) {
        return Err(Failure::Usage(format!("--modified needs an admissible λ; {l} is not")));
    }
    Ok(())
}

fn jack_cmd(a: &PolyArgs) -> Result<Report, Failure> {
    let n = a.n as usize;
    let l = partition_arg(&a.lambda, n)?;
    modified_check(&l, a.modified)?;
    let f = if a.modified { modified_jack(&l, n)? } else { jack(&l, n).expansion };
    theta_poly(&f, a, vec![("lambda", json!(l.parts()))])
}

fn interp_cmd(a: &PolyArgs) -> Result<Report, Failure> {
    let n = a.n as usize;
    let l = partition_arg(&a.lambda, n)?;
    modified_check(&l, a.modified)?;
    let f = if a.modified {
        modified_interp_jack(&l, n)?
    } else {
        interp_jack(&l, n).expansion.clone()
    };
    theta_poly(&f, a, vec![("lambda", json!(l.parts())), ("inhomogeneous", json!(true))])
}

fn macdonald_cmd(a: &PolyArgs, t0: &Rat, special: bool) -> Result<Report, Failure> {
    let n = a.n as usize;
    let l = partition_arg(&a.lambda, n)?;
    modified_check(&l, a.modified)?;
    let f = if a.modified {
        modified_macdonald(&l, n, t0)?
    } else {
        macdonald(&l, n, t0)?.expansion.clone()
    };
    let extra = vec![("lambda", json!(l.parts())), ("t0", json!(render_rat(t0)))];
    if special {
        let q0 = special_q(t0);
        let g = f.specialize(&q0)?;
        let mut extra = extra;
        extra.push(("q", json!(render_rat(&q0))));
        return Ok(poly_report(&g, "none", &extra, render_rat));
    }
    Ok(poly_report(&f, "q", &extra, |c| render_ratfunc(c, "q")))
}

fn gendeg(n: usize, bound: u32, p: Option<usize>, grading: GradingArg, prime: Option<u64>) -> Result<Report, Failure> {
    let spec = match p {
        Some(p) if !(2..=n).contains(&p) => return Err(Failure::Usage(format!("--p must lie in 2..={n}"))),
        Some(p) => IdealSpec::p_fold(n, p),
        None => IdealSpec::double_diagonal(n),
    };
    let grading = match grading {
        GradingArg::BinaryForm => Grading::BinaryForm,
        GradingArg::Weight => Grading::Weight,
    };
    let table = generator_table(&spec, bound, grading, prime)?;
    let mut degrees: Vec<u32> = table
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.degree, r.new_generators))
        .collect();
    degrees.sort_unstable();
    let listed: Vec<String> = degrees.iter().map(u32::to_string).collect();
    let mut text = format!("{spec}, degree <= {bound}\ngenerator degrees: {}\n", listed.join(" "));
    let mut rows = Vec::new();
    for r in &table {
        let k = r.coefficient_degree.map(|k| k.to_string()).unwrap_or_default();
        if r.new_generators > 0 {
            let at = if k.is_empty() { String::new() } else { format!(" (coefficient degree {k})") };
            text += &format!("  weight {}{at}: {} new\n", r.degree, r.new_generators);
        }
        rows.push(vec![
            r.degree.to_string(),
            k,
            r.dim.to_string(),
            r.products_rank.to_string(),
            r.new_generators.to_string(),
        ]);
    }
    Ok(Report {
        text,
        json: json!({
            "schema": 1,
            "ideal": spec.to_string(),
            "n": n,
            "bound": bound,
            "grading": grading,
            "degrees": degrees,
            "rows": table,
        }),
        header: vec!["degree", "coefficient_degree", "dim", "products_rank", "new_generators"],
        rows,
    })
}

fn verify(cfg: &VerifyConfig, ids: &[usize]) -> (Report, bool) {
    let results: Vec<_> = ids.iter().map(|&id| run_criterion(id, cfg)).collect();
    let passed = results.iter().all(|r| r.passed);
    let mut text: String = results.iter().map(|r| r.line() + "\n").collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    text += &format!("{} of {} criteria passed\n", results.len() - failed, results.len());
    let rows = results
        .iter()
        .map(|r| vec![r.id.to_string(), r.label.into(), r.passed.to_string(), r.detail.clone()])
        .collect();
    let report = Report {
        text,
        json: json!({"schema": 1, "passed": passed, "criteria": results}),
        header: vec!["id", "label", "passed", "detail"],
        rows,
    };
    (report, passed)
}

fn companions(n: usize, bound: u32) -> Result<Report, Failure> {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for l in enumerate_up_to(n, bound).into_iter().filter(is_admissible) {
        let Case::A(i) = classify(&l)?.case else { continue };
        let found = companions_bruteforce(&l);
        let names: Vec<String> = found.iter().map(Partition::to_string).collect();
        text += &format!("{l}  pivot {i}  companions {}\n", names.join(" "));
        rows.push(vec![l.to_string(), i.to_string(), names.join(" ")]);
        items.push(json!({
            "partition": l.parts(),
            "pivot": i,
            "companions": found.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
        }));
    }
    Ok(Report {
        text,
        json: json!({"schema": 1, "n": n, "bound": bound, "partitions": items}),
        header: vec!["partition", "pivot", "companions"],
        rows,
    })
}

fn dualring(n: usize, bound: u32, prime: Option<u64>) -> Result<Report, Failure> {
    let mut text = format!("{:>3} {:>9} {:>6} {:>8} {:>10}\n", "d", "monomials", "rank", "quotient", "admissible");
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for d in 0..=bound {
        let r = dual_ring_spanning(n, d, prime)?;
        text += &format!(
            "{d:>3} {:>9} {:>6} {:>8} {:>10}\n",
            r.monomials, r.relation_rank, r.quotient_dim, r.admissible_count
        );
        rows.push(vec![
            d.to_string(),
            r.monomials.to_string(),
            r.relation_rank.to_string(),
            r.quotient_dim.to_string(),
            r.admissible_count.to_string(),
        ]);
        items.push(r);
    }
    Ok(Report {
        text,
        json: json!({"schema": 1, "n": n, "rows": items}),
        header: vec!["d", "monomials", "relation_rank", "quotient_dim", "admissible_count"],
        rows,
    })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let prime = cli.mod_prime;
    match &cli.command {
        Command::Admissible { n, degree, all } => Ok(admissible(*n, *degree, *all)),
        Command::Hilbert { n, max_degree } => hilbert(*n as usize, *max_degree, prime),
        Command::Jack(a) => jack_cmd(a),
        Command::Macdonald { poly, t0, special } => macdonald_cmd(poly, t0, *special),
        Command::Interp(a) => interp_cmd(a),
        Command::Gendeg { n, max_degree, p, grading } => gendeg(*n as usize, *max_degree, *p, *grading, prime),
        Command::Verify { n, t0s, seed, criterion, extended } => {
            let cfg = VerifyConfig {
                n: n.map(|n| n as usize),
                t0s: if t0s.is_empty() { default_t0s() } else { t0s.clone() },
                seed: *seed,
                prime: prime.or(VerifyConfig::default().prime),
                extended: *extended,
            };
            let ids: Vec<usize> = if criterion.is_empty() {
                (1..=CRITERIA.len()).collect()
            } else {
                criterion.iter().map(|&c| c as usize).collect()
            };
            let (report, passed) = verify(&cfg, &ids);
            if passed {
                Ok(report)
            } else {
                Err(Failure::Verify(report.render(cli.format).map_err(Failure::Compute)?))
            }
        }
        Command::Companions { n, max_degree } => companions(*n as usize, *max_degree),
        Command::Dualring { n, max_degree } => dualring(*n as usize, *max_degree, prime),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.as_deref();
    let write = |s: &str| {
        emit(s, out).map_err(|e| {
            eprintln!("error: cannot write output: {e}");
        })
    };
    match run(&cli) {
        Ok(report) => match report.render(cli.format) {
            Ok(s) if write(&s).is_ok() => ExitCode::SUCCESS,
            Ok(_) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(s)) => {
            let _ = write(&s);
            ExitCode::from(1)
        }
    }
}
