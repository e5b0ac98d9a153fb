//! Scenario-level studies: time and amplitude scans, rescaled measures,
//! sudden-death thresholds, zero-discord classification, the discord/EoF
//! crossover and the magnetic-field comparison.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{transition_amplitude, ChainSpec};
use crate::channel::{evolve_at_time, evolve_pair};
use crate::correlations::{discord_one_way, full_report_x, CorrelationReport, Side};
use crate::error::{Error, Result};
use crate::linalg::{sigma_x, sigma_y, sigma_z, identity2, C64};
use crate::states::XState;

/// Initial measures below this are not used as rescaling denominators.
pub const RESCALE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanAxis {
    /// Time in units of 1/J.
    Time,
    /// Modulus of the transition amplitude.
    Amplitude,
}

impl ScanAxis {
    pub fn label(self) -> &'static str {
        match self {
            ScanAxis::Time => "t",
            ScanAxis::Amplitude => "abs_f",
        }
    }
}

/// D and E divided by their values for the input state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rescaled {
    pub discord: f64,
    pub eof: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub axis_value: f64,
    pub report: CorrelationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rescaled: Option<Rescaled>,
}

/// Which rescaled columns fell back to raw values because the input
/// measure was zero.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFallback {
    pub discord: bool,
    pub eof: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSeries {
    pub axis: ScanAxis,
    pub points: Vec<ScanPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_fallback: Option<RawFallback>,
}

impl ScanSeries {
    pub fn csv_header(&self) -> String {
        let mut h = CorrelationReport::CSV_HEADER.replacen("t_or_f", self.axis.label(), 1);
        if self.points.iter().any(|p| p.rescaled.is_some()) {
            h.push_str(",D_rescaled,E_rescaled");
        }
        h
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.csv_header();
        out.push('\n');
        for p in &self.points {
            out.push_str(&p.report.csv_row(p.axis_value));
            if let Some(r) = p.rescaled {
                out.push(',');
                out.push_str(&crate::io::csv_row(&[r.discord, r.eof]));
            }
            out.push('\n');
        }
        out
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::domain("scan grid is empty"));
    }
    if grid.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("scan grid has non-finite values"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("scan grid must be strictly increasing"));
    }
    Ok(())
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// 600 points over [0, 3N/(2J)].
pub fn default_time_grid(spec: &ChainSpec) -> Vec<f64> {
    linspace(0.0, 1.5 * spec.n_sites() as f64 / spec.coupling(), 600)
}

/// Correlations of the pair (r, 0) at each time of the grid.
pub fn scan_time(spec: &ChainSpec, input: &XState, r: usize, t_grid: &[f64]) -> Result<ScanSeries> {
    check_grid(t_grid)?;
    let points = t_grid
        .par_iter()
        .map(|&t| {
            let state = evolve_at_time(spec, input, r, t)?;
            Ok(ScanPoint { axis_value: t, report: full_report_x(&state)?, rescaled: None })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanSeries { axis: ScanAxis::Time, points, raw_fallback: None })
}

fn rescale(value: f64, initial: f64) -> (f64, bool) {
    if initial < RESCALE_FLOOR {
        (value, true)
    } else {
        (value / initial, false)
    }
}

/// Correlations as functions of |f| with f = |f| e^{i arg_f}, together with
/// D and E rescaled by the input's own values.
pub fn scan_amplitude(input: &XState, f_grid: &[f64], arg_f: f64) -> Result<ScanSeries> {
    check_grid(f_grid)?;
    if f_grid.iter().any(|f| !(0.0..=1.0).contains(f)) {
        return Err(Error::domain("|f| grid must lie in [0, 1]"));
    }
    let initial = full_report_x(input)?;
    let fallback = RawFallback {
        discord: initial.discord_two_way < RESCALE_FLOOR,
        eof: initial.eof < RESCALE_FLOOR,
    };
    let points = f_grid
        .par_iter()
        .map(|&mag| {
            let state = evolve_pair(input, C64::from_polar(mag, arg_f))?;
            let report = full_report_x(&state)?;
            let rescaled = Rescaled {
                discord: rescale(report.discord_two_way, initial.discord_two_way).0,
                eof: rescale(report.eof, initial.eof).0,
            };
            Ok(ScanPoint { axis_value: mag, report, rescaled: Some(rescaled) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanSeries { axis: ScanAxis::Amplitude, points, raw_fallback: Some(fallback) })
}

/// Bounds on |f|² at or below which each concurrence branch is dead.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EsdThresholds {
    /// From the ρ14 branch; `None` when ρ33ρ44 = 0.
    pub branch_14: Option<f64>,
    /// From the ρ23 branch; `None` when ρ33ρ44 = 0.
    pub branch_23: Option<f64>,
    /// Set when ρ33ρ44 = 0, in which case C(f) = |f|·C(0) and
    /// entanglement only dies at f = 0.
    pub scaling_law: bool,
}

impl EsdThresholds {
    /// Largest |f|² at which the evolved state is separable.
    pub fn death_threshold(&self) -> f64 {
        match (self.branch_14, self.branch_23) {
            (Some(a), Some(b)) => a.min(b).max(0.0),
            _ => 0.0,
        }
    }

    /// Whether the evolved concurrence vanishes at a given |f|².
    pub fn is_dead(&self, abs_f_sq: f64) -> bool {
        abs_f_sq == 0.0 || abs_f_sq <= self.death_threshold()
    }
}

pub fn esd_threshold(input: &XState) -> EsdThresholds {
    let denom = input.p3 * input.p4;
    if denom == 0.0 {
        return EsdThresholds { branch_14: None, branch_23: None, scaling_law: true };
    }
    EsdThresholds {
        branch_14: Some(1.0 - (input.c14.norm_sqr() - input.p2 * input.p3) / denom),
        branch_23: Some(1.0 - (input.c23.norm_sqr() - input.p1 * input.p4) / denom),
        scaling_law: false,
    }
}

/// Structural zero-discord classes of X states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroDiscordClass {
    /// ρ14 = ρ23 = 0: classical-classical, both one-way discords vanish.
    DiagonalCc,
    /// ρ11 = ρ22, ρ33 = ρ44, |ρ14| = |ρ23|: zero discord for a measurement
    /// on the detached spin only.
    QuantumClassical,
    /// ρ11 = ρ33, ρ22 = ρ44, |ρ14| = |ρ23|: zero discord for a measurement
    /// on the chain spin only.
    ClassicalQuantum,
    /// All ρii = 1/4 with |ρ14| = |ρ23|: both of the previous at once.
    SymmetricZero,
    Nonzero,
}

impl ZeroDiscordClass {
    /// Predicted (D_ab, D_ba) == 0 pattern; D_ab measures B, D_ba measures A.
    pub fn predicted_zeros(self) -> (bool, bool) {
        match self {
            ZeroDiscordClass::DiagonalCc | ZeroDiscordClass::SymmetricZero => (true, true),
            ZeroDiscordClass::QuantumClassical => (true, false),
            ZeroDiscordClass::ClassicalQuantum => (false, true),
            ZeroDiscordClass::Nonzero => (false, false),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub class: ZeroDiscordClass,
    pub discord_ab: f64,
    pub discord_ba: f64,
}

const STRUCTURE_TOL: f64 = 1e-10;
const ZERO_DISCORD_TOL: f64 = 1e-6;

pub fn structural_class(x: &XState) -> ZeroDiscordClass {
    let eq = |a: f64, b: f64| (a - b).abs() <= STRUCTURE_TOL;
    let equal_coherence = eq(x.c14.norm(), x.c23.norm());
    if x.c14.norm() <= STRUCTURE_TOL && x.c23.norm() <= STRUCTURE_TOL {
        ZeroDiscordClass::DiagonalCc
    } else if equal_coherence && x.populations().iter().all(|p| eq(*p, 0.25)) {
        ZeroDiscordClass::SymmetricZero
    } else if equal_coherence && eq(x.p1, x.p2) && eq(x.p3, x.p4) {
        ZeroDiscordClass::QuantumClassical
    } else if equal_coherence && eq(x.p1, x.p3) && eq(x.p2, x.p4) {
        ZeroDiscordClass::ClassicalQuantum
    } else {
        ZeroDiscordClass::Nonzero
    }
}

/// Structural class, cross-checked against the numerically optimized
/// one-way discords.
pub fn classify_zero_discord(x: &XState) -> Result<Classification> {
    let class = structural_class(x);
    let rho = x.to_dense();
    let discord_ab = discord_one_way(&rho, Side::B)?;
    let discord_ba = discord_one_way(&rho, Side::A)?;
    let (zero_ab, zero_ba) = class.predicted_zeros();
    if (zero_ab && discord_ab > ZERO_DISCORD_TOL) || (zero_ba && discord_ba > ZERO_DISCORD_TOL) {
        return Err(Error::consistency(format!(
            "class {class:?} predicts zero discord but found D_ab = {discord_ab:e}, D_ba = {discord_ba:e}"
        )));
    }
    Ok(Classification { class, discord_ab, discord_ba })
}

fn rescaled_gap(input: &XState, initial: &CorrelationReport, mag: f64, arg_f: f64) -> Result<f64> {
    let r = full_report_x(&evolve_pair(input, C64::from_polar(mag, arg_f))?)?;
    Ok(rescale(r.discord_two_way, initial.discord_two_way).0 - rescale(r.eof, initial.eof).0)
}

/// Number of |f| brackets scanned before bisection.
pub const CROSSOVER_BRACKETS: usize = 200;

/// Smallest |f| in (0, 1) where the rescaled EoF overtakes the rescaled
/// discord, or `None` when it never does.
pub fn crossover_amplitude(input: &XState, arg_f: f64) -> Result<Option<f64>> {
    let initial = full_report_x(input)?;
    let gap = |mag: f64| rescaled_gap(input, &initial, mag, arg_f);
    let grid: Vec<f64> = (1..CROSSOVER_BRACKETS).map(|i| i as f64 / CROSSOVER_BRACKETS as f64).collect();
    let gaps = grid.par_iter().map(|&m| gap(m)).collect::<Result<Vec<_>>>()?;
    let Some(i) = (0..grid.len() - 1).find(|&i| gaps[i] > 0.0 && gaps[i + 1] < 0.0) else {
        return Ok(None);
    };
    let (mut lo, mut hi) = (grid[i], grid[i + 1]);
    while hi - lo > 1e-7 {
        let mid = 0.5 * (lo + hi);
        if gap(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

/// Outcome of comparing discord with and without a field along a time grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldBound {
    pub holds: bool,
    /// Largest D^(0)(t) − D^(h)(t) over the grid (≤ 0 when D^(h) dominates).
    pub max_violation: f64,
    pub discord_zero_field: Vec<f64>,
    pub discord_with_field: Vec<f64>,
}

/// Slack allowed below the zero-field discord.
pub const FIELD_BOUND_SLACK: f64 = 1e-7;

/// Checks D^(h)(t) ≥ D^(0)(t) pointwise for pair (r, 0).
pub fn field_lower_bound_check(spec: &ChainSpec, input: &XState, r: usize, t_grid: &[f64]) -> Result<FieldBound> {
    check_grid(t_grid)?;
    let zero = spec.with_field(0.0)?;
    let series = |s: &ChainSpec| -> Result<Vec<f64>> {
        Ok(scan_time(s, input, r, t_grid)?.points.iter().map(|p| p.report.discord_two_way).collect())
    };
    let d0 = series(&zero)?;
    let dh = series(spec)?;
    let max_violation = d0.iter().zip(&dh).map(|(a, b)| a - b).fold(f64::NEG_INFINITY, f64::max);
    Ok(FieldBound {
        holds: max_violation <= FIELD_BOUND_SLACK,
        max_violation,
        discord_zero_field: d0,
        discord_with_field: dh,
    })
}

/// Pauli expectation values, with σz|↑⟩ = +|↑⟩.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Observables {
    /// ⟨σx ⊗ σx⟩.
    pub sx_sx: f64,
    /// ⟨σy ⊗ σx⟩, σy on the chain spin.
    pub sy_sx: f64,
    /// ⟨σz⟩ of the chain spin.
    pub sz_a: f64,
    /// ⟨σz⟩ of the detached spin.
    pub sz_b: f64,
}

pub fn observables(x: &XState) -> Observables {
    let rho = x.to_dense();
    let id = identity2();
    Observables {
        sx_sx: rho.expectation(&sigma_x(), &sigma_x()),
        sy_sx: rho.expectation(&sigma_y(), &sigma_x()),
        sz_a: rho.expectation(&sigma_z(), &id),
        sz_b: rho.expectation(&id, &sigma_z()),
    }
}

/// Prediction for when a quantum-classical state turns classical-classical
/// under damping of its chain spin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeathTimePrediction {
    /// 1/2 + ρ11/(1 − 2ρ11).
    pub formula_value: f64,
    /// The same value read as |f|²: the damping at which every population
    /// reaches 1/4.
    pub amplitude_from_square: f64,
    /// Discords (D_ab, D_ba) of the state evolved with |f| = √formula_value.
    pub discords_at_square_reading: (f64, f64),
    /// Discords evolved with |f| = formula_value, when that is at most 1.
    pub discords_at_literal_reading: Option<(f64, f64)>,
}

/// Requires a condition-2 (quantum-classical) input with ρ11 < 1/4.
pub fn classical_classical_death_time(x: &XState) -> Result<DeathTimePrediction> {
    if x.p1 >= 0.25 {
        return Err(Error::domain(format!("needs ρ11 < 1/4, got {}", x.p1)));
    }
    let tol = 1e-12;
    let equalities = (x.p1 - x.p2).abs() < tol && (x.p3 - x.p4).abs() < tol && (x.c14.norm() - x.c23.norm()).abs() < tol;
    if !equalities {
        return Err(Error::domain("input is not a quantum-classical state of the ρ11 = ρ22, ρ33 = ρ44 kind"));
    }
    let formula_value = 0.5 + x.p1 / (1.0 - 2.0 * x.p1);
    let discords = |mag: f64| -> Result<(f64, f64)> {
        let rho = evolve_pair(x, C64::new(mag, 0.0))?.to_dense();
        Ok((discord_one_way(&rho, Side::B)?, discord_one_way(&rho, Side::A)?))
    };
    let amplitude_from_square = formula_value.sqrt();
    Ok(DeathTimePrediction {
        formula_value,
        amplitude_from_square,
        discords_at_square_reading: discords(amplitude_from_square)?,
        discords_at_literal_reading: if formula_value <= 1.0 { Some(discords(formula_value)?) } else { None },
    })
}

/// |f_r(t)| on a grid, handy next to discord time series.
pub fn amplitude_moduli(spec: &ChainSpec, r: usize, t_grid: &[f64]) -> Result<Vec<f64>> {
    t_grid.iter().map(|&t| Ok(transition_amplitude(spec, r, t)?.norm())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::concurrence_x;
    use crate::linalg::c;
    use crate::states::{mdms_p, mdms_r, mdms_werner, mmm_state, pure_state};

    #[test]
    fn grid_validation() {
        let spec = ChainSpec::uniform(3).unwrap();
        let x = pure_state(0.4).unwrap();
        assert!(scan_time(&spec, &x, 3, &[]).is_err());
        assert!(scan_time(&spec, &x, 3, &[1.0, 0.5]).is_err());
        assert!(scan_amplitude(&x, &[0.5, 1.5], 0.0).is_err());
    }

    #[test]
    fn single_time_point_reports_input() {
        let spec = ChainSpec::uniform(5).unwrap();
        let x = mdms_werner(0.7).unwrap();
        let s = scan_time(&spec, &x, 1, &[0.0]).unwrap();
        let direct = full_report_x(&x).unwrap();
        assert!((s.points[0].report.eof - direct.eof).abs() < 1e-12);
        assert!((s.points[0].report.discord_two_way - direct.discord_two_way).abs() < 1e-9);
    }

    #[test]
    fn identity_channel_rescales_to_one() {
        let s = scan_amplitude(&mdms_werner(0.7).unwrap(), &[0.5, 1.0], 0.0).unwrap();
        let last = s.points.last().unwrap().rescaled.unwrap();
        assert!((last.discord - 1.0).abs() < 1e-8 && (last.eof - 1.0).abs() < 1e-12);
        assert_eq!(s.raw_fallback, Some(RawFallback { discord: false, eof: false }));
    }

    #[test]
    fn unentangled_input_falls_back_to_raw() {
        let s = scan_amplitude(&mdms_werner(0.2).unwrap(), &[0.5, 1.0], 0.0).unwrap();
        assert_eq!(s.raw_fallback, Some(RawFallback { discord: false, eof: true }));
        assert_eq!(s.points[1].rescaled.unwrap().eof, 0.0);
    }

    #[test]
    fn werner_discord_survives_without_entanglement() {
        let x = mdms_werner(0.4).unwrap();
        let s = scan_amplitude(&x, &linspace(0.05, 1.0, 20), 0.0).unwrap();
        assert!(s.points.iter().all(|p| p.report.discord_two_way > 0.0));
        assert!(s.points[0].report.eof == 0.0);
    }

    #[test]
    fn separable_input_is_always_dead() {
        let t = esd_threshold(&mdms_werner(0.2).unwrap());
        assert!(t.death_threshold() >= 1.0);
        assert!(t.is_dead(1.0));
    }

    #[test]
    fn werner_threshold_matches_direct_evaluation() {
        let x = mdms_werner(0.5).unwrap();
        let t = esd_threshold(&x);
        for k in 0..=1000 {
            let mag = k as f64 / 1000.0;
            let f2 = mag * mag;
            if (f2 - t.death_threshold()).abs() < 1e-9 {
                continue;
            }
            let conc = concurrence_x(&evolve_pair(&x, c(mag, 0.0)).unwrap());
            assert_eq!(conc == 0.0, t.is_dead(f2), "|f| = {mag}");
        }
    }

    #[test]
    fn rho44_free_input_scales_linearly() {
        let x = mdms_r(0.1, 0.5).unwrap();
        // ρ^R has ρ33 = 0.
        let t = esd_threshold(&x);
        assert!(t.scaling_law && t.branch_14.is_none());
        let c0 = concurrence_x(&x);
        for k in 0..=50 {
            let mag = k as f64 / 50.0;
            let conc = concurrence_x(&evolve_pair(&x, C64::from_polar(mag, 0.3)).unwrap());
            assert!((conc - mag * c0).abs() < 1e-12);
        }
    }

    #[test]
    fn classification_examples() {
        let diag = classify_zero_discord(&XState::diagonal(0.1, 0.2, 0.3, 0.4).unwrap()).unwrap();
        assert_eq!(diag.class, ZeroDiscordClass::DiagonalCc);
        let xx = classify_zero_discord(&mmm_state(1.0, 0.0, 0.0).unwrap()).unwrap();
        assert_eq!(xx.class, ZeroDiscordClass::SymmetricZero);
        assert!(xx.discord_ab < 1e-7 && xx.discord_ba < 1e-7);
        let qc = evolve_pair(&mmm_state(1.0, 0.0, 0.0).unwrap(), c(0.8, 0.0)).unwrap();
        let qc = classify_zero_discord(&qc).unwrap();
        assert_eq!(qc.class, ZeroDiscordClass::QuantumClassical);
        assert!(qc.discord_ab < 1e-7 && qc.discord_ba > 1e-3);
        assert_eq!(classify_zero_discord(&mdms_p(0.55, 0.0).unwrap()).unwrap().class, ZeroDiscordClass::Nonzero);
    }

    #[test]
    fn werner_crossover() {
        let f = crossover_amplitude(&mdms_werner(1.0).unwrap(), 0.0).unwrap().unwrap();
        assert!((f - 1.0 / 2f64.sqrt()).abs() < 1e-4, "{f}");
    }

    #[test]
    fn observables_of_evolved_xx_state() {
        let mag: f64 = 0.6;
        let real = observables(&evolve_pair(&mmm_state(1.0, 0.0, 0.0).unwrap(), c(mag, 0.0)).unwrap());
        assert!((real.sx_sx - mag).abs() < 1e-14);
        // Both spins lose the excitation toward |↓⟩ only on the chain side.
        assert!((real.sz_a - (mag * mag - 1.0)).abs() < 1e-14);
        assert!(real.sz_b.abs() < 1e-14);
        let imag = observables(&evolve_pair(&mmm_state(1.0, 0.0, 0.0).unwrap(), c(0.0, mag)).unwrap());
        assert!((imag.sy_sx - mag).abs() < 1e-14 && imag.sx_sx.abs() < 1e-14);

        let zero = observables(&XState::maximally_mixed());
        assert_eq!((zero.sx_sx, zero.sy_sx, zero.sz_a, zero.sz_b), (0.0, 0.0, 0.0, 0.0));
        let up = observables(&XState::diagonal(0.0, 0.0, 0.0, 1.0).unwrap());
        assert_eq!((up.sz_a, up.sz_b), (1.0, 1.0));
    }

    #[test]
    fn death_time_formula() {
        let qc = |p1: f64, coh: f64| XState::new(p1, p1, 0.5 - p1, 0.5 - p1, c(coh, 0.0), c(coh, 0.0)).unwrap();
        assert!((classical_classical_death_time(&qc(0.0, 0.0)).unwrap().formula_value - 0.5).abs() < 1e-15);
        let p = classical_classical_death_time(&qc(0.125, 0.1)).unwrap();
        assert!((p.formula_value - 2.0 / 3.0).abs() < 1e-15);
        assert!(p.discords_at_square_reading.0 < 1e-7 && p.discords_at_square_reading.1 < 1e-7);
        assert!(classical_classical_death_time(&qc(0.25, 0.1)).is_err());
        assert!(classical_classical_death_time(&mdms_p(0.3, 0.0).unwrap()).is_err());
    }
}
