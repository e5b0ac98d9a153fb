use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use chaincorr::analysis::linspace;
use chaincorr::chain::{transition_amplitude, ChainSpec};
use chaincorr::channel::evolve_pair;
use chaincorr::checks::{self, CheckConfig, Scale};
use chaincorr::correlations::{full_report_x, CorrelationReport};
use chaincorr::figures::{self, FigureId, FigureOptions};
use chaincorr::io::csv_row;
use chaincorr::linalg::C64;
use chaincorr::states::{family_state, XState};

/// Correlation transport across a uniform XX spin chain. Times are in units
/// of 1/J. Set RAYON_NUM_THREADS to bound the number of worker threads.
#[derive(Parser)]
#[command(name = "chaincorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transition amplitude f_r(t) as CSV rows t,re_f,im_f,abs_f.
    Amplitude(AmplitudeArgs),
    /// Correlation report of a state, optionally after the channel, as JSON.
    Report(ReportArgs),
    /// Writes the CSV of one figure: 1, 2, 3, 4, 5a, 5b, 5p, 6 or 7.
    Figure(FigureArgs),
    /// Runs the acceptance checks and prints one line per criterion.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct ChainArgs {
    /// Number of sites.
    #[arg(long)]
    n: usize,
    /// Coupling J.
    #[arg(long, default_value_t = 1.0)]
    j: f64,
    /// Uniform field h, in the same units as J.
    #[arg(long, default_value_t = 0.0)]
    h: f64,
}

#[derive(Args)]
struct AmplitudeArgs {
    #[command(flatten)]
    chain: ChainArgs,
    /// Target site, 1..N. Defaults to N.
    #[arg(long)]
    r: Option<usize>,
    /// Single time.
    #[arg(long, conflicts_with_all = ["t_max", "steps"])]
    t: Option<f64>,
    /// End of the time window starting at 0.
    #[arg(long, requires = "steps")]
    t_max: Option<f64>,
    /// Number of times in the window, end points included.
    #[arg(long, requires = "t_max")]
    steps: Option<usize>,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// pure:C | werner:a | mdms-p:a,g | mdms-r:a,g | mmm:cx,cy,cz
    #[arg(long, conflicts_with = "state_json", required_unless_present = "state_json")]
    state: Option<String>,
    /// X state as JSON ({"p1":..,"p2":..,"p3":..,"p4":..,"c14":[re,im],"c23":[re,im]}),
    /// or @path to read it from a file.
    #[arg(long)]
    state_json: Option<String>,
    /// Send the state through a channel with this |f|.
    #[arg(long, conflicts_with = "n")]
    f: Option<f64>,
    /// Phase of f, used with --f.
    #[arg(long, default_value_t = 0.0, requires = "f")]
    arg_f: f64,
    /// Send the state through an N-site chain instead (needs --t).
    #[arg(long, requires = "t")]
    n: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    j: f64,
    #[arg(long, default_value_t = 0.0)]
    h: f64,
    /// Target site for --n, defaults to N.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, requires = "n")]
    t: Option<f64>,
}

#[derive(Args)]
struct FigureArgs {
    id: String,
    /// Output path; defaults to figure_<id>.csv.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Chain length for the time-domain figures.
    #[arg(long)]
    n: Option<usize>,
    /// End of the time window (default 3N/2).
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of time points (default 600).
    #[arg(long)]
    steps: Option<usize>,
    /// Number of |f| points in (0, 1] (default 200).
    #[arg(long)]
    points: Option<usize>,
    /// Comma-separated series values replacing the figure's own.
    #[arg(long, value_delimiter = ',')]
    series: Option<Vec<f64>>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Use the grid sizes of the acceptance criteria instead of reduced ones.
    #[arg(long)]
    full: bool,
    /// Negate the tolerances of one criterion, which must then fail.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=11))]
    inject: Option<u8>,
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn amplitude(args: AmplitudeArgs) -> Result<()> {
    let spec = ChainSpec::new(args.chain.n, args.chain.j, args.chain.h)?;
    let r = args.r.unwrap_or(spec.n_sites());
    let times = match (args.t, args.t_max, args.steps) {
        (Some(t), _, _) => vec![t],
        (None, Some(t_max), Some(steps)) if steps > 0 => linspace(0.0, t_max, steps),
        (None, Some(_), Some(_)) => bail!("--steps must be positive"),
        _ => bail!("give either --t or both --t-max and --steps"),
    };
    let mut out = String::from("t,re_f,im_f,abs_f\n");
    for t in times {
        let f = transition_amplitude(&spec, r, t)?.value();
        out.push_str(&csv_row(&[t, f.re, f.im, f.norm()]));
        out.push('\n');
    }
    emit(args.output.as_ref(), &out)
}

#[derive(Serialize)]
struct ReportOutput {
    input: XState,
    #[serde(skip_serializing_if = "Option::is_none", with = "optional_complex")]
    f: Option<C64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    evolved: Option<XState>,
    report: CorrelationReport,
}

mod optional_complex {
    use serde::Serializer;

    use chaincorr::linalg::C64;

    pub fn serialize<S: Serializer>(z: &Option<C64>, s: S) -> Result<S::Ok, S::Error> {
        match z {
            Some(z) => chaincorr::io::complex::serialize(z, s),
            None => s.serialize_none(),
        }
    }
}

fn report(args: ReportArgs) -> Result<()> {
    let input = match (&args.state, &args.state_json) {
        (Some(family), _) => family_state(family)?,
        (None, Some(json)) => {
            let text = match json.strip_prefix('@') {
                Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
                None => json.clone(),
            };
            serde_json::from_str(&text).context("parsing the state JSON")?
        }
        (None, None) => bail!("give --state or --state-json"),
    };
    let f = match (args.f, args.n) {
        (Some(mag), _) => {
            if !(0.0..=1.0).contains(&mag) {
                bail!("--f must lie in [0, 1], got {mag}");
            }
            Some(C64::from_polar(mag, args.arg_f))
        }
        (None, Some(n)) => {
            let spec = ChainSpec::new(n, args.j, args.h)?;
            let t = args.t.context("--n needs --t")?;
            Some(transition_amplitude(&spec, args.r.unwrap_or(n), t)?.clamped())
        }
        (None, None) => None,
    };
    let evolved = f.map(|f| evolve_pair(&input, f)).transpose()?;
    let report = full_report_x(evolved.as_ref().unwrap_or(&input))?;
    let out = ReportOutput { input, f, evolved, report };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn figure(args: FigureArgs) -> Result<()> {
    let id: FigureId = args.id.parse()?;
    let opts = FigureOptions {
        n_sites: args.n,
        t_max: args.t_max,
        steps: args.steps,
        amplitude_points: args.points,
        series: args.series,
    };
    let csv = figures::render(id, &opts)?;
    let path = args.output.unwrap_or_else(|| PathBuf::from(format!("figure_{}.csv", id.name())));
    fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn selftest(args: SelftestArgs) -> Result<bool> {
    let cfg = CheckConfig { scale: if args.full { Scale::Full } else { Scale::Reduced }, inject: args.inject };
    let outcomes = checks::run_all(&cfg);
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<String> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id.to_string()).collect();
    if failed.is_empty() {
        println!("all {} criteria passed", outcomes.len());
    } else {
        println!("failed criteria: {}", failed.join(", "));
    }
    Ok(failed.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Amplitude(a) => amplitude(a).map(|_| true),
        Command::Report(a) => report(a).map(|_| true),
        Command::Figure(a) => figure(a).map(|_| true),
        Command::Selftest(a) => selftest(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
