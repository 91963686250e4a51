use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hfactor::report::write_case_csv;
use hfactor::verifier::{search_counterexample, verify_sharpness, verify_theorem11, verify_theorem12_family};
use hfactor::{parse_graph6, parse_graph6_lines, write_graph6, Error, VerificationReport};
use hfactor_core::extremal::{check_case, phi_b2, phi_b3, phi_b4, phi_bstar};
use hfactor_core::{
    binding_number, enumerate_connected, find_h_factor, lu_kano_deficiency, spectral_radius, Graph, HAssignment,
    DEFAULT_POWER_TOL,
};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Parser)]
#[command(name = "hfactor", version, about = "Spectral radius, binding number and H-factor tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "B2")]
    B2,
    #[value(name = "B3")]
    B3,
    #[value(name = "B4")]
    B4,
    #[value(name = "Bstar")]
    Bstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    Thm11,
    #[value(name = "thm12-family")]
    Thm12Family,
    Sharpness,
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral radius by power iteration.
    Rho {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_POWER_TOL)]
        tol: f64,
    },
    /// Binding number with a minimizing set.
    Binding {
        #[command(flatten)]
        input: Input,
    },
    /// Lu–Kano criterion: max over S of components(G - S) - |S|.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Search for an H-factor; `--h` gives one character per vertex, 1 for {1} and 0 for {0,2}.
    Hfactor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        h: String,
    },
    /// Closed-form quotient characteristic polynomial.
    Charpoly {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Inequality chain comparing rho(G_2) with rho(G_*).
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        /// Also write the record as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(long, value_enum)]
        campaign: Campaign,
        #[arg(long, default_value_t = 7)]
        nmax: usize,
        #[arg(long, default_value_t = 11)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Family scan: also allow up to this many parts beyond s + 2.
        #[arg(long, default_value_t = 0)]
        extra_parts: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Connected graphs of order n, one graph6 string per line.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Graph6(_) | Error::Io(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<hfactor_core::Error> for Failure {
    fn from(e: hfactor_core::Error) -> Failure {
        match e {
            hfactor_core::Error::AssignmentChar(_) | hfactor_core::Error::AssignmentLength { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn load(input: &Input) -> Result<(String, Vec<Graph>), Failure> {
    match (&input.g6, &input.file) {
        (Some(code), None) => Ok((format!("g6={code}"), vec![parse_graph6(code).map_err(Error::from)?])),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(Error::from)?;
            let graphs = parse_graph6_lines(&text)
                .map_err(|(line, e)| Failure::Usage(format!("{}:{line}: {e}", path.display())))?;
            if graphs.is_empty() {
                return Err(Failure::Usage(format!("{}: no graphs", path.display())));
            }
            Ok((format!("file={}", path.display()), graphs))
        }
        _ => Err(Failure::Usage("give exactly one of --g6 or --file".into())),
    }
}

fn context(command: &str, detail: &str) {
    println!("# hfactor {} {command} {detail}", env!("CARGO_PKG_VERSION"));
}

fn for_each_graph(
    command: &str,
    input: &Input,
    extra: &str,
    mut f: impl FnMut(&Graph) -> Result<String, Failure>,
) -> Result<u8, Failure> {
    let (source, graphs) = load(input)?;
    context(command, &format!("{source}{extra}"));
    for g in &graphs {
        let line = f(g)?;
        if graphs.len() > 1 {
            println!("{}\t{line}", write_graph6(g));
        } else {
            println!("{line}");
        }
    }
    Ok(0)
}

fn charpoly(family: Family, n: Option<usize>, s: Option<usize>) -> Result<u8, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
    let (label, poly) = match family {
        Family::B2 => {
            let (n, s) = (need(n, "n")?, need(s, "s")?);
            (format!("family=B2 n={n} s={s}"), phi_b2(n, s))
        }
        Family::B3 => {
            let s = need(s, "s")?;
            (format!("family=B3 s={s}"), phi_b3(s))
        }
        Family::B4 => {
            let s = need(s, "s")?;
            (format!("family=B4 s={s}"), phi_b4(s))
        }
        Family::Bstar => {
            let n = need(n, "n")?;
            if n < 5 {
                return Err(Failure::Usage(format!("--n must be at least 5, got {n}")));
            }
            (format!("family=Bstar n={n}"), phi_bstar(n))
        }
    };
    context("charpoly", &label);
    println!("{poly}");
    Ok(0)
}

fn extremal(n: usize, s: usize, csv: Option<PathBuf>) -> Result<u8, Failure> {
    let record = check_case(n, s).map_err(|e| Failure::Usage(e.to_string()))?;
    context("extremal", &format!("n={n} s={s}"));
    println!(
        "case={} rho_G2={:.12} rho_Gstar={:.12} phi_star_at_rho={:.6e} passed={}",
        record.case.number(),
        record.rho_g2,
        record.rho_gstar,
        record.phi_star_at_rho,
        record.passed && record.chain_holds
    );
    for step in &record.steps {
        println!("  [{}] {}: {} vs {}", if step.holds { "ok" } else { "FAIL" }, step.label, step.lhs, step.rhs);
    }
    if let Some(path) = csv {
        let file = std::fs::File::create(&path).map_err(Error::from)?;
        write_case_csv(std::slice::from_ref(&record), file)?;
    }
    Ok(if record.passed && record.chain_holds { 0 } else { EXIT_FAILED })
}

fn verify(
    campaign: Campaign,
    nmax: usize,
    n: usize,
    samples: usize,
    seed: u64,
    extra_parts: usize,
    json: Option<PathBuf>,
) -> Result<u8, Failure> {
    let report: VerificationReport = match campaign {
        Campaign::Thm11 => verify_theorem11(nmax),
        Campaign::Thm12Family => verify_theorem12_family(n, extra_parts),
        Campaign::Sharpness => verify_sharpness(n),
        Campaign::Search => search_counterexample(n, samples, seed),
    }?;
    match json {
        Some(path) => {
            report.write_json(&path)?;
            context(
                "verify",
                &format!(
                    "campaign={} checked={} passed={} report={}",
                    report.campaign,
                    report.checked,
                    report.passed,
                    path.display()
                ),
            );
        }
        None => println!("{}", report.to_json()),
    }
    Ok(if report.passed { 0 } else { EXIT_FAILED })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Rho { input, tol } => for_each_graph("rho", &input, &format!(" tol={tol:e}"), |g| {
            let d = spectral_radius(g, tol)?;
            Ok(format!("{:.12} residual={:.3e} iterations={}", d.radius, d.residual, d.iterations))
        }),
        Command::Binding { input } => for_each_graph("binding", &input, "", |g| {
            let r = binding_number(g)?;
            Ok(format!("{} witness={}", r.value, r.witness))
        }),
        Command::Check { input } => for_each_graph("check", &input, "", |g| {
            let r = lu_kano_deficiency(g)?;
            Ok(format!("criterion={} deficiency={} witness={}", r.criterion_holds(), r.max_deficiency, r.witness))
        }),
        Command::Hfactor { input, h } => {
            let assignment = HAssignment::from_bitstring(&h)?;
            for_each_graph("hfactor", &input, &format!(" h={h}"), |g| {
                Ok(match find_h_factor(g, &assignment)? {
                    Some(f) => {
                        let edges: Vec<String> = f.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                        format!("factor edges=[{}]", edges.join(","))
                    }
                    None => "none".to_string(),
                })
            })
        }
        Command::Charpoly { family, n, s } => charpoly(family, n, s),
        Command::Extremal { n, s, csv } => extremal(n, s, csv),
        Command::Verify { campaign, nmax, n, samples, seed, extra_parts, json } => {
            verify(campaign, nmax, n, samples, seed, extra_parts, json)
        }
        Command::Enumerate { n } => {
            let graphs = enumerate_connected(n).map_err(|e| Failure::Usage(e.to_string()))?;
            context("enumerate", &format!("n={n}"));
            for g in graphs {
                println!("{}", write_graph6(&g));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_COMPUTE)
        }
    }
}
