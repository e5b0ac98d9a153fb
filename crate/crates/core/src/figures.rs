//! Parameter sets of the published figures and their CSV output.
//!
//! Each figure becomes one long-format CSV: a leading column names the
//! series (concurrence, Werner parameter, field, ...), followed by the axis
//! and the plotted quantities. The first lines are '#' comments recording
//! every parameter and the tool version.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::analysis::{amplitude_moduli, linspace, scan_amplitude, scan_time, ScanSeries};
use crate::chain::ChainSpec;
use crate::error::{Error, Result};
use crate::io::csv_row;
use crate::states::{mdms_p, mdms_r, mdms_werner, mmm_state, pure_state, XState};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    /// N = 3, pure inputs: t, E, D.
    F1,
    /// N = 50, pure inputs: t, E, D.
    F2,
    /// N = 15, three concurrences, long format for surface plots.
    F3,
    /// Werner inputs against |f|, rescaled.
    F4,
    /// ρ^R with (a, g) = (0.0150, 0.9747) against |f|.
    F5a,
    /// ρ^R with (a, g) = (0.1625, 0.7649) against |f|.
    F5b,
    /// ρ^P with g = 0, a ∈ {0.503, 0.574} against |f|.
    F5p,
    /// N = 50 Bell-diagonal input under four fields: t, D.
    F6,
    /// N = 3 classically correlated input, h ∈ {0, 2}: t, D, |f3|.
    F7,
}

impl FigureId {
    pub const ALL: [FigureId; 9] = [
        FigureId::F1,
        FigureId::F2,
        FigureId::F3,
        FigureId::F4,
        FigureId::F5a,
        FigureId::F5b,
        FigureId::F5p,
        FigureId::F6,
        FigureId::F7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::F1 => "1",
            FigureId::F2 => "2",
            FigureId::F3 => "3",
            FigureId::F4 => "4",
            FigureId::F5a => "5a",
            FigureId::F5b => "5b",
            FigureId::F5p => "5p",
            FigureId::F6 => "6",
            FigureId::F7 => "7",
        }
    }

    fn default_sites(self) -> Option<usize> {
        match self {
            FigureId::F1 | FigureId::F7 => Some(3),
            FigureId::F2 | FigureId::F6 => Some(50),
            FigureId::F3 => Some(15),
            _ => None,
        }
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown figure '{s}' (expected one of 1, 2, 3, 4, 5a, 5b, 5p, 6, 7)")))
    }
}

/// Overrides for the defaults of a figure. Unset fields keep the figure's
/// own choice.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FigureOptions {
    pub n_sites: Option<usize>,
    /// Upper end of the time window, in units of 1/J (figures use J = 1).
    pub t_max: Option<f64>,
    /// Number of time points.
    pub steps: Option<usize>,
    /// Number of |f| points in (0, 1].
    pub amplitude_points: Option<usize>,
    /// Replaces the figure's list of series parameters (concurrences for
    /// figures 1–3, Werner a for 4, ρ^P a for 5p, fields for 6 and 7).
    pub series: Option<Vec<f64>>,
}

const DEFAULT_STEPS: usize = 600;
const DEFAULT_AMPLITUDE_POINTS: usize = 200;

struct Setup {
    spec: Option<ChainSpec>,
    times: Vec<f64>,
    amplitudes: Vec<f64>,
    series: Vec<f64>,
}

fn setup(id: FigureId, opts: &FigureOptions, default_series: &[f64]) -> Result<Setup> {
    let spec = match id.default_sites() {
        Some(n) => Some(ChainSpec::uniform(opts.n_sites.unwrap_or(n))?),
        None => None,
    };
    let times = match spec {
        Some(s) => {
            let t_max = opts.t_max.unwrap_or(1.5 * s.n_sites() as f64);
            if !(t_max > 0.0 && t_max.is_finite()) {
                return Err(Error::domain(format!("t_max must be positive, got {t_max}")));
            }
            linspace(0.0, t_max, opts.steps.unwrap_or(DEFAULT_STEPS))
        }
        None => Vec::new(),
    };
    let n = opts.amplitude_points.unwrap_or(DEFAULT_AMPLITUDE_POINTS);
    if n == 0 || opts.steps == Some(0) {
        return Err(Error::domain("grids need at least one point"));
    }
    let amplitudes = (1..=n).map(|i| i as f64 / n as f64).collect();
    let series = opts.series.clone().unwrap_or_else(|| default_series.to_vec());
    if series.is_empty() {
        return Err(Error::domain("empty series list"));
    }
    Ok(Setup { spec, times, amplitudes, series })
}

fn list(values: &[f64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn header(out: &mut String, id: FigureId, lines: &[String], columns: &str) {
    let _ = writeln!(out, "# chaincorr {VERSION} figure {}", id.name());
    for l in lines {
        let _ = writeln!(out, "# {l}");
    }
    let _ = writeln!(out, "{columns}");
}

fn time_window(s: &Setup) -> String {
    let t_max = s.times.last().copied().unwrap_or(0.0);
    format!("t = linspace(0, {t_max}, {}) in units of 1/J", s.times.len())
}

fn amplitude_window(s: &Setup) -> String {
    format!("|f| = i/{n} for i = 1..{n}, arg f = 0", n = s.amplitudes.len())
}

fn chain_line(spec: &ChainSpec, r: usize) -> String {
    format!("N = {}, J = 1, r = {r}", spec.n_sites())
}

fn pure_transport(id: FigureId, opts: &FigureOptions, default_series: &[f64]) -> Result<String> {
    let s = setup(id, opts, default_series)?;
    let spec = s.spec.expect("transport figures have a chain");
    let r = spec.n_sites();
    let mut out = String::new();
    header(
        &mut out,
        id,
        &[
            format!("{}, h = 0", chain_line(&spec, r)),
            format!("input: pure state with concurrence C in {{{}}}", list(&s.series)),
            time_window(&s),
        ],
        "C,t,E,D",
    );
    for &c0 in &s.series {
        let scan = scan_time(&spec, &pure_state(c0)?, r, &s.times)?;
        for p in &scan.points {
            out.push_str(&csv_row(&[c0, p.axis_value, p.report.eof, p.report.discord_two_way]));
            out.push('\n');
        }
    }
    Ok(out)
}

fn rescaled_rows(out: &mut String, label: f64, scan: &ScanSeries) {
    for p in &scan.points {
        let r = p.rescaled.expect("amplitude scans carry rescaled values");
        out.push_str(&csv_row(&[label, p.axis_value, r.discord, r.eof]));
        out.push('\n');
    }
}

fn amplitude_family(id: FigureId, opts: &FigureOptions, what: &str, default_series: &[f64], make: impl Fn(f64) -> Result<XState>) -> Result<String> {
    let s = setup(id, opts, default_series)?;
    let mut out = String::new();
    header(
        &mut out,
        id,
        &[
            format!("input: {what} with a in {{{}}}", list(&s.series)),
            amplitude_window(&s),
            "D_rescaled = D/D(input), E_rescaled = E/E(input)".to_string(),
        ],
        "a,abs_f,D_rescaled,E_rescaled",
    );
    for &a in &s.series {
        rescaled_rows(&mut out, a, &scan_amplitude(&make(a)?, &s.amplitudes, 0.0)?);
    }
    Ok(out)
}

fn single_r(id: FigureId, opts: &FigureOptions, a: f64, g: f64) -> Result<String> {
    let s = setup(id, opts, &[a])?;
    let mut out = String::new();
    header(
        &mut out,
        id,
        &[
            format!("input: rho^R with (a, g) = ({a}, {g})"),
            amplitude_window(&s),
            "D_rescaled = D/D(input), E_rescaled = E/E(input)".to_string(),
        ],
        "abs_f,D_rescaled,E_rescaled",
    );
    for p in &scan_amplitude(&mdms_r(a, g)?, &s.amplitudes, 0.0)?.points {
        let r = p.rescaled.expect("amplitude scans carry rescaled values");
        out.push_str(&csv_row(&[p.axis_value, r.discord, r.eof]));
        out.push('\n');
    }
    Ok(out)
}

fn field_figure(id: FigureId, opts: &FigureOptions, input: XState, input_text: &str, default_fields: &[f64], with_amplitude: bool) -> Result<String> {
    let s = setup(id, opts, default_fields)?;
    let base = s.spec.expect("field figures have a chain");
    let r = base.n_sites();
    let mut out = String::new();
    let columns = if with_amplitude { "h,t,D,abs_f" } else { "h,t,D" };
    header(
        &mut out,
        id,
        &[
            chain_line(&base, r),
            format!("input: {input_text}"),
            format!("fields h in {{{}}} (units of J)", list(&s.series)),
            time_window(&s),
        ],
        columns,
    );
    for &h in &s.series {
        let spec = base.with_field(h)?;
        let scan = scan_time(&spec, &input, r, &s.times)?;
        let moduli = if with_amplitude { amplitude_moduli(&spec, r, &s.times)? } else { Vec::new() };
        for (i, p) in scan.points.iter().enumerate() {
            let mut row = vec![h, p.axis_value, p.report.discord_two_way];
            if with_amplitude {
                row.push(moduli[i]);
            }
            out.push_str(&csv_row(&row));
            out.push('\n');
        }
    }
    Ok(out)
}

/// CSV text of one figure. Identical options give identical bytes.
pub fn render(id: FigureId, opts: &FigureOptions) -> Result<String> {
    match id {
        FigureId::F1 | FigureId::F2 => pure_transport(id, opts, &[0.1, 0.4, 0.7, 1.0]),
        FigureId::F3 => pure_transport(id, opts, &[0.1, 0.6, 1.0]),
        FigureId::F4 => amplitude_family(id, opts, "Werner state", &[0.4, 0.7, 1.0], mdms_werner),
        FigureId::F5a => single_r(id, opts, 0.0150, 0.9747),
        FigureId::F5b => single_r(id, opts, 0.1625, 0.7649),
        FigureId::F5p => amplitude_family(id, opts, "rho^P with g = 0", &[0.503, 0.574], |a| mdms_p(a, 0.0)),
        FigureId::F6 => field_figure(
            id,
            opts,
            mmm_state(0.53, 0.340, 0.035)?,
            "maximally mixed marginals, (cx, cy, cz) = (0.53, 0.340, 0.035)",
            &[0.0, 0.5, 1.0, 5.0],
            false,
        ),
        FigureId::F7 => field_figure(
            id,
            opts,
            mmm_state(1.0, 0.0, 0.0)?,
            "classically correlated, (cx, cy, cz) = (1, 0, 0)",
            &[0.0, 2.0],
            true,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> FigureOptions {
        FigureOptions { steps: Some(12), amplitude_points: Some(10), ..Default::default() }
    }

    fn data_rows(csv: &str) -> Vec<Vec<f64>> {
        csv.lines()
            .filter(|l| !l.starts_with('#'))
            .skip(1)
            .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
            .collect()
    }

    #[test]
    fn ids_round_trip() {
        for id in FigureId::ALL {
            assert_eq!(id.name().parse::<FigureId>().unwrap(), id);
        }
        assert!("8".parse::<FigureId>().is_err());
    }

    #[test]
    fn figure_4_has_three_series() {
        let csv = render(FigureId::F4, &small()).unwrap();
        assert!(csv.starts_with("# chaincorr"));
        let rows = data_rows(&csv);
        assert_eq!(rows.len(), 30);
        for row in rows.iter().filter(|r| r[1] == 1.0) {
            assert!((row[2] - 1.0).abs() < 1e-8 && (row[3] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn figure_7_columns() {
        let csv = render(FigureId::F7, &small()).unwrap();
        assert!(csv.lines().any(|l| l == "h,t,D,abs_f"));
        let rows = data_rows(&csv);
        assert_eq!(rows.len(), 24);
        // The field only changes the phase of f.
        for (a, b) in rows[..12].iter().zip(&rows[12..]) {
            assert!((a[3] - b[3]).abs() < 1e-12);
        }
    }

    #[test]
    fn deterministic_output() {
        let opts = FigureOptions { series: Some(vec![0.4]), ..small() };
        assert_eq!(render(FigureId::F1, &opts).unwrap(), render(FigureId::F1, &opts).unwrap());
    }

    #[test]
    fn rejects_bad_overrides() {
        assert!(render(FigureId::F1, &FigureOptions { steps: Some(0), ..Default::default() }).is_err());
        assert!(render(FigureId::F4, &FigureOptions { series: Some(vec![]), ..Default::default() }).is_err());
        assert!(render(FigureId::F1, &FigureOptions { t_max: Some(-1.0), ..Default::default() }).is_err());
    }
}
