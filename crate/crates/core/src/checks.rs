//! Numerical acceptance checks, shared by the `selftest` command and the
//! acceptance test target. Each check returns measured values next to the
//! expected ones so a failure explains itself.

use std::f64::consts::FRAC_1_SQRT_2;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::analysis::{crossover_amplitude, esd_threshold, linspace, scan_amplitude, scan_time, structural_class, ZeroDiscordClass};
use crate::chain::{locate_peak, propagator_oracle, transition_amplitude, transition_amplitudes_all, ChainSpec};
use crate::channel::{evolve_at_time, evolve_pair, undo_local_phase};
use crate::correlations::{concurrence_x, discord_bruteforce_polished, discord_one_way, discord_two_way, full_report_x, Side};
use crate::error::Result;
use crate::linalg::{c, max_abs_diff4, trace_distance4, Mat4, C64};
use crate::states::{mdms_p, mdms_r, mdms_werner, mmm_state, pure_state, von_neumann_entropy, XState};

pub const CRITERIA: [u8; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Grid sizes as stated in the acceptance criteria.
    Full,
    /// Smaller grids for a quick self-test.
    Reduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub scale: Scale,
    /// Negates the tolerances of one criterion so it must fail. Used to
    /// show that the checks can fail at all.
    pub inject: Option<u8>,
}

impl CheckConfig {
    pub fn new(scale: Scale) -> Self {
        Self { scale, inject: None }
    }

    fn tol(&self, id: u8, base: f64) -> f64 {
        if self.inject == Some(id) {
            -base
        } else {
            base
        }
    }

    fn pick(&self, full: usize, reduced: usize) -> usize {
        match self.scale {
            Scale::Full => full,
            Scale::Reduced => reduced,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl Outcome {
    /// One summary line; leaves out the run time so repeated runs match.
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {:>2}: {verdict} {} | {}", self.id, self.title, self.detail)
    }
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "amplitude closed form vs dense oracle",
        2 => "perfect transfer on three sites",
        3 => "pure states have D = E",
        4 => "Werner crossover at 1/sqrt(2)",
        5 => "Bell-diagonal discord anchor",
        6 => "field independence of E and field lower bound on D",
        7 => "discord created from a classical input",
        8 => "sudden-death thresholds",
        9 => "optimizer vs brute-force discord",
        10 => "zero-discord taxonomy",
        11 => "MDMS transport ordering",
        _ => "unknown criterion",
    }
}

pub fn run(id: u8, cfg: &CheckConfig) -> Result<Outcome> {
    let start = Instant::now();
    let (passed, detail) = match id {
        1 => amplitude_oracle(cfg)?,
        2 => perfect_transfer(cfg)?,
        3 => pure_equality(cfg)?,
        4 => werner_crossover(cfg)?,
        5 => bell_diagonal_anchor(cfg)?,
        6 => field_theorems(cfg)?,
        7 => discord_creation(cfg)?,
        8 => esd_thresholds(cfg)?,
        9 => optimizer_vs_bruteforce(cfg)?,
        10 => zero_discord_taxonomy(cfg)?,
        11 => mdms_ordering(cfg)?,
        _ => (false, format!("no criterion {id}")),
    };
    Ok(Outcome { id, title: title(id), passed, detail, elapsed: start.elapsed() })
}

/// Runs every criterion; a computation error counts as a failure.
pub fn run_all(cfg: &CheckConfig) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .map(|&id| {
            run(id, cfg).unwrap_or_else(|e| Outcome {
                id,
                title: title(id),
                passed: false,
                detail: format!("error: {e}"),
                elapsed: Duration::ZERO,
            })
        })
        .collect()
}

type Verdict = (bool, String);

/// Random valid X state with phases on both coherences.
pub fn random_x_state(rng: &mut impl Rng) -> XState {
    let mut p: [f64; 4] = std::array::from_fn(|_| rng.gen::<f64>());
    let s: f64 = p.iter().sum();
    p.iter_mut().for_each(|v| *v /= s);
    let r14 = (p[0] * p[3]).sqrt() * rng.gen::<f64>();
    let r23 = (p[1] * p[2]).sqrt() * rng.gen::<f64>();
    XState {
        p1: p[0],
        p2: p[1],
        p3: p[2],
        p4: 1.0 - p[0] - p[1] - p[2],
        c14: C64::from_polar(r14, rng.gen_range(0.0..std::f64::consts::TAU)),
        c23: C64::from_polar(r23, rng.gen_range(0.0..std::f64::consts::TAU)),
    }
}

fn amplitude_oracle(cfg: &CheckConfig) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(1);
    let per_size = cfg.pick(100, 20);
    let mut worst = 0.0f64;
    for n in [2, 3, 5, 15, 50] {
        let spec = ChainSpec::uniform(n)?;
        for _ in 0..per_size {
            let t = rng.gen_range(0.0..2.0 * n as f64);
            let oracle = propagator_oracle(&spec, t)?;
            for (r, f) in transition_amplitudes_all(&spec, t)?.iter().enumerate() {
                worst = worst.max((f.value() - oracle[(r, 0)]).norm());
            }
        }
    }
    Ok((worst <= cfg.tol(1, 1e-9), format!("max deviation {worst:.3e} (tol 1e-9)")))
}

fn perfect_transfer(cfg: &CheckConfig) -> Result<Verdict> {
    let spec = ChainSpec::uniform(3)?;
    let t_star = locate_peak(&spec, 3, 0.0, 4.0, 400)?;
    let f = transition_amplitude(&spec, 3, t_star)?;
    let peak_gap = (f.norm() - 1.0).abs();
    let mut corrected = 0.0f64;
    let mut literal = 0.0f64;
    for c0 in [0.1, 0.4, 0.7, 1.0] {
        let x = pure_state(c0)?;
        let y = evolve_at_time(&spec, &x, 3, t_star)?;
        let target = x.to_dense();
        literal = literal.max(trace_distance4(y.to_dense().matrix(), target.matrix()));
        let restored = undo_local_phase(&y, f.value().arg());
        corrected = corrected.max(trace_distance4(restored.to_dense().matrix(), target.matrix()));
    }
    let passed = peak_gap <= cfg.tol(2, 1e-6) && corrected <= cfg.tol(2, 1e-8);
    Ok((
        passed,
        format!(
            "t* = {t_star:.9}, | |f3| - 1 | = {peak_gap:.3e} (tol 1e-6), arg f3 = {:.6}, trace distance after local phase correction {corrected:.3e} (tol 1e-8), without {literal:.3e}",
            f.value().arg()
        ),
    ))
}

fn pure_equality(cfg: &CheckConfig) -> Result<Verdict> {
    let gaps = linspace(0.0, 1.0, 50)
        .par_iter()
        .map(|&c0| {
            let r = full_report_x(&pure_state(c0)?)?;
            Ok((r.discord_two_way - r.eof).abs())
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = gaps.iter().copied().fold(0.0, f64::max);
    Ok((worst <= cfg.tol(3, 1e-5), format!("max |D - E| = {worst:.3e} over 50 states (tol 1e-5)")))
}

fn werner_crossover(cfg: &CheckConfig) -> Result<Verdict> {
    let x = mdms_werner(1.0)?;
    let cross = crossover_amplitude(&x, 0.0)?;
    let cross_gap = cross.map(|v| (v - FRAC_1_SQRT_2).abs()).unwrap_or(f64::INFINITY);
    let y = evolve_pair(&x, c(FRAC_1_SQRT_2, 0.0))?;
    let h = 1.0 / (2.0 * 2f64.sqrt());
    let z = c(0.0, 0.0);
    #[rustfmt::skip]
    let expected = Mat4::new(
        c(0.5, 0.0), z, z, c(h, 0.0),
        z, c(0.25, 0.0), z, z,
        z, z, z, z,
        c(h, 0.0), z, z, c(0.25, 0.0),
    );
    let entry_gap = max_abs_diff4(y.to_dense().matrix(), &expected);
    let entropy = von_neumann_entropy(&y)?;
    let entropy_gap = (entropy - 0.811278).abs();
    let passed = cross_gap <= cfg.tol(4, 1e-4) && entry_gap <= cfg.tol(4, 1e-12) && entropy_gap <= cfg.tol(4, 1e-5);
    let cross_text = cross.map_or("none".to_string(), |v| format!("{v:.7}"));
    Ok((
        passed,
        format!(
            "|f|* = {cross_text} (1/sqrt2 = {FRAC_1_SQRT_2:.7}, tol 1e-4), entrywise gap {entry_gap:.3e} (tol 1e-12), S = {entropy:.6} (expected 0.811278, tol 1e-5)"
        ),
    ))
}

fn bell_diagonal_anchor(cfg: &CheckConfig) -> Result<Verdict> {
    let d = discord_two_way(&mmm_state(0.53, 0.340, 0.035)?.to_dense())?;
    let gap = (d - 0.210).abs();
    Ok((gap <= cfg.tol(5, 5e-3), format!("D = {d:.6} (expected 0.210, tol 5e-3)")))
}

fn field_theorems(cfg: &CheckConfig) -> Result<Verdict> {
    let n = 50;
    let points = cfg.pick(400, 60);
    let zero = ChainSpec::uniform(n)?;
    let field = zero.with_field(5.0)?;
    let grid = linspace(0.0, 1.5 * n as f64, points);
    let input = mmm_state(0.53, 0.340, 0.035)?;
    let a = scan_time(&zero, &input, n, &grid)?;
    let b = scan_time(&field, &input, n, &grid)?;
    let mut eof_gap = 0.0f64;
    let mut violation = f64::NEG_INFINITY;
    for (p, q) in a.points.iter().zip(&b.points) {
        eof_gap = eof_gap.max((p.report.eof - q.report.eof).abs());
        violation = violation.max(p.report.discord_two_way - q.report.discord_two_way);
    }
    let passed = eof_gap <= cfg.tol(6, 1e-10) && violation <= cfg.tol(6, 1e-7);
    Ok((
        passed,
        format!(
            "{points} times: max |E(h=5) - E(h=0)| = {eof_gap:.3e} (tol 1e-10), max D(h=0) - D(h=5) = {violation:.3e} (tol 1e-7)"
        ),
    ))
}

fn discord_creation(cfg: &CheckConfig) -> Result<Verdict> {
    let spec = ChainSpec::uniform(3)?;
    let input = mmm_state(1.0, 0.0, 0.0)?;
    let t_star = locate_peak(&spec, 3, 0.0, 4.0, 400)?;
    let grid = linspace(0.0, 2.0 * t_star, cfg.pick(400, 80));
    let series = scan_time(&spec, &input, 3, &grid)?;
    let mut weakest = f64::INFINITY;
    let mut covered = 0;
    for (t, p) in grid.iter().zip(&series.points) {
        let mag = transition_amplitude(&spec, 3, *t)?.norm();
        if mag > 0.05 && mag < 0.95 {
            covered += 1;
            weakest = weakest.min(p.report.discord_two_way);
        }
    }
    // The end points |f3| = 0 (t = 0 and the exact channel f = 0) and
    // |f3| = 1 (t = t*).
    let ends = [
        discord_two_way(&evolve_at_time(&spec, &input, 3, 0.0)?.to_dense())?,
        discord_two_way(&evolve_pair(&input, c(0.0, 0.0))?.to_dense())?,
        discord_two_way(&evolve_at_time(&spec, &input, 3, t_star)?.to_dense())?,
    ];
    let end_max = ends.iter().copied().fold(0.0, f64::max);
    let passed = covered > 0 && weakest > 1e-4 && end_max <= cfg.tol(7, 1e-7);
    Ok((
        passed,
        format!("min D over {covered} times with 0.05 < |f3| < 0.95: {weakest:.3e} (needs > 1e-4), max D at |f3| in {{0, 1}}: {end_max:.3e} (tol 1e-7)"),
    ))
}

fn esd_thresholds(cfg: &CheckConfig) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(8);
    let wanted = cfg.pick(1000, 100);
    let slack = cfg.tol(8, 1e-9);
    let grid = linspace(0.0, 1.0, 201);
    let mut mismatches = 0;
    let mut boundary_worst = 0.0f64;
    let mut tested = 0;
    while tested < wanted {
        let x = random_x_state(&mut rng);
        if concurrence_x(&x) <= 0.0 || x.p3 * x.p4 < 1e-6 {
            continue;
        }
        tested += 1;
        let thr = esd_threshold(&x);
        let death = thr.death_threshold();
        for &mag in &grid {
            let sq = mag * mag;
            if (sq - death).abs() <= slack.abs() {
                continue;
            }
            let dead = concurrence_x(&evolve_pair(&x, c(mag, 0.0))?) == 0.0;
            if dead != thr.is_dead(sq) {
                mismatches += 1;
            }
        }
        if death > 0.0 && death < 1.0 {
            let at = concurrence_x(&evolve_pair(&x, c(death.sqrt(), 0.0))?);
            boundary_worst = boundary_worst.max(at);
        }
    }
    // Zero ρ33ρ44: either ρ44 = 0 (only ρ23 survives) or ρ33 = 0 as in ρ^R.
    let mut scaling_worst = 0.0f64;
    let mut scaling_inputs = vec![mdms_r(0.015, 0.9747)?, mdms_r(0.1625, 0.7649)?];
    for _ in 0..cfg.pick(100, 20) {
        let p: [f64; 3] = std::array::from_fn(|_| rng.gen::<f64>() + 0.01);
        let s: f64 = p.iter().sum();
        let (p1, p2, p3) = (p[0] / s, p[1] / s, p[2] / s);
        let r23 = (p2 * p3).sqrt() * rng.gen::<f64>();
        scaling_inputs.push(XState::new(p1, p2, p3, 0.0, c(0.0, 0.0), C64::from_polar(r23, rng.gen_range(0.0..std::f64::consts::TAU)))?);
    }
    for x in &scaling_inputs {
        let c0 = concurrence_x(x);
        if !esd_threshold(x).scaling_law {
            scaling_worst = f64::INFINITY;
        }
        for &mag in &grid {
            let cf = concurrence_x(&evolve_pair(x, c(mag, 0.0))?);
            scaling_worst = scaling_worst.max((cf - mag * c0).abs());
        }
    }
    let passed = mismatches == 0 && boundary_worst <= slack && scaling_worst <= cfg.tol(8, 1e-12);
    Ok((
        passed,
        format!(
            "{tested} entangled states x 201 |f|: {mismatches} mismatches, max C at threshold {boundary_worst:.3e} (tol 1e-9); scaling law max deviation {scaling_worst:.3e} over {} states (tol 1e-12)",
            scaling_inputs.len()
        ),
    ))
}

/// Named families plus a few evolved states.
fn family_states() -> Result<Vec<XState>> {
    let mut v = vec![
        pure_state(0.1)?,
        pure_state(0.4)?,
        pure_state(0.7)?,
        pure_state(1.0)?,
        mdms_werner(0.4)?,
        mdms_werner(0.7)?,
        mdms_werner(1.0)?,
        mdms_p(0.503, 0.0)?,
        mdms_p(0.55, 0.0)?,
        mdms_p(0.574, 0.0)?,
        mdms_r(0.015, 0.9747)?,
        mdms_r(0.1625, 0.7649)?,
        mmm_state(0.53, 0.340, 0.035)?,
        mmm_state(1.0, 0.0, 0.0)?,
    ];
    for f in [0.3, 0.8] {
        v.push(evolve_pair(&mmm_state(1.0, 0.0, 0.0)?, c(f, 0.0))?);
        v.push(evolve_pair(&mdms_werner(1.0)?, c(0.0, f))?);
    }
    Ok(v)
}

fn optimizer_vs_bruteforce(cfg: &CheckConfig) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(9);
    let mut states: Vec<XState> = (0..cfg.pick(200, 20)).map(|_| random_x_state(&mut rng)).collect();
    states.extend(family_states()?);
    let grid = match cfg.scale {
        Scale::Full => (256, 128),
        Scale::Reduced => (128, 64),
    };
    let gaps = states
        .par_iter()
        .map(|x| {
            let rho = x.to_dense();
            let mut worst = 0.0f64;
            for side in [Side::A, Side::B] {
                let opt = discord_one_way(&rho, side)?;
                let oracle = discord_bruteforce_polished(&rho, side, grid)?;
                worst = worst.max((opt - oracle).abs());
            }
            Ok(worst)
        })
        .collect::<Result<Vec<f64>>>()?;
    let worst = gaps.iter().copied().fold(0.0, f64::max);
    Ok((
        worst <= cfg.tol(9, 1e-4),
        format!("{} states, both sides: max |D_opt - D_grid| = {worst:.3e} (tol 1e-4)", states.len()),
    ))
}

/// A state meeting one of the four zero-discord conditions, with random
/// populations and coherences of random phase.
fn condition_state(condition: u8, rng: &mut impl Rng) -> Result<XState> {
    let phase = |rng: &mut dyn rand::RngCore| C64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    match condition {
        1 => {
            let p: [f64; 4] = std::array::from_fn(|_| rng.gen::<f64>() + 0.01);
            let s: f64 = p.iter().sum();
            XState::diagonal(p[0] / s, p[1] / s, p[2] / s, p[3] / s)
        }
        2 | 3 => {
            // Two well separated population values u, v with 2u + 2v = 1; near
            // u = v the state approaches the symmetric class and the
            // surviving discord becomes tiny.
            let u: f64 = rng.gen_range(0.05..0.18);
            let v = 0.5 - u;
            let m = (u * v).sqrt() * rng.gen_range(0.5..1.0);
            let (c14, c23) = (phase(rng) * m, phase(rng) * m);
            if condition == 2 {
                XState::new(u, u, v, v, c14, c23)
            } else {
                XState::new(u, v, u, v, c14, c23)
            }
        }
        _ => {
            let m = 0.25 * rng.gen_range(0.5..1.0);
            XState::new(0.25, 0.25, 0.25, 0.25, phase(rng) * m, phase(rng) * m)
        }
    }
}

fn zero_discord_taxonomy(cfg: &CheckConfig) -> Result<Verdict> {
    let mut rng = StdRng::seed_from_u64(10);
    let tol = cfg.tol(10, 1e-6);
    let per_condition = cfg.pick(25, 5);
    let mut failures = Vec::new();
    let mut worst_zero = 0.0f64;
    let mut weakest_nonzero = f64::INFINITY;
    for condition in 1..=4u8 {
        let expected_class = match condition {
            1 => ZeroDiscordClass::DiagonalCc,
            2 => ZeroDiscordClass::QuantumClassical,
            3 => ZeroDiscordClass::ClassicalQuantum,
            _ => ZeroDiscordClass::SymmetricZero,
        };
        for _ in 0..per_condition {
            let x = condition_state(condition, &mut rng)?;
            let class = structural_class(&x);
            let rho = x.to_dense();
            let d_ab = discord_one_way(&rho, Side::B)?;
            let d_ba = discord_one_way(&rho, Side::A)?;
            let (zero_ab, zero_ba) = class.predicted_zeros();
            for (zero, d) in [(zero_ab, d_ab), (zero_ba, d_ba)] {
                if zero {
                    worst_zero = worst_zero.max(d);
                } else {
                    weakest_nonzero = weakest_nonzero.min(d);
                }
                if zero != (d <= tol) {
                    failures.push(format!("condition {condition}: D = {d:.3e}"));
                }
            }
            if class != expected_class {
                failures.push(format!("condition {condition} classified as {class:?}"));
            }
        }
    }
    let mut persistent = 0.0f64;
    for _ in 0..100 {
        let x = condition_state(1, &mut rng)?;
        let f = C64::from_polar(rng.gen::<f64>(), rng.gen_range(0.0..std::f64::consts::TAU));
        let rho = evolve_pair(&x, f)?.to_dense();
        persistent = persistent.max(discord_one_way(&rho, Side::A)?).max(discord_one_way(&rho, Side::B)?);
    }
    if persistent > tol {
        failures.push(format!("evolved diagonal state has D = {persistent:.3e}"));
    }
    let passed = failures.is_empty();
    let mut detail = format!(
        "max predicted-zero D {worst_zero:.3e}, min predicted-nonzero D {weakest_nonzero:.3e}, max D of evolved diagonal states {persistent:.3e} (tol 1e-6)"
    );
    if !passed {
        detail.push_str(&format!("; failures: {}", failures.join("; ")));
    }
    Ok((passed, detail))
}

/// Largest Ẽ − D̃ on the grid below |f| = 1 and |D̃ − Ẽ| at |f| = 1.
fn rescaled_margins(x: &XState, grid: &[f64]) -> Result<(f64, f64)> {
    let s = scan_amplitude(x, grid, 0.0)?;
    let mut inside = f64::NEG_INFINITY;
    let mut at_one = 0.0;
    for p in &s.points {
        let r = p.rescaled.expect("amplitude scans carry rescaled values");
        if p.axis_value < 1.0 {
            inside = inside.max(r.eof - r.discord);
        } else {
            at_one = (r.discord - r.eof).abs();
        }
    }
    Ok((inside, at_one))
}

fn mdms_ordering(cfg: &CheckConfig) -> Result<Verdict> {
    let tol = cfg.tol(11, 1e-6);
    let n = cfg.pick(100, 25);
    let grid: Vec<f64> = (1..=n).map(|i| i as f64 / n as f64).collect();
    let mut passed = true;
    let mut parts = Vec::new();
    for a in [0.503, 0.55, 0.574] {
        let (inside, at_one) = rescaled_margins(&mdms_p(a, 0.0)?, &grid)?;
        // Strict D̃ > Ẽ below 1 and equality at 1.
        passed &= inside < -tol && at_one <= tol;
        parts.push(format!("P(a={a}): max E~-D~ below 1 = {inside:.3e}, gap at 1 = {at_one:.3e}"));
    }
    let r_a = mdms_r(0.015, 0.9747)?;
    let entropy = von_neumann_entropy(&r_a)?;
    let cross = crossover_amplitude(&r_a, 0.0)?;
    passed &= (entropy - 0.159).abs() <= cfg.tol(11, 2e-3) && cross.is_some();
    parts.push(format!(
        "R(0.0150,0.9747): S = {entropy:.4} (expected 0.159, tol 2e-3), crossover {}",
        cross.map_or("none".to_string(), |v| format!("{v:.6}"))
    ));
    let (inside_b, _) = rescaled_margins(&mdms_r(0.1625, 0.7649)?, &grid)?;
    passed &= inside_b <= tol;
    parts.push(format!("R(0.1625,0.7649): max E~-D~ = {inside_b:.3e}"));
    // Not part of the verdict: the same family with a on ρ33 instead of ρ22,
    // i.e. with the roles of the two spins exchanged.
    let mirrored = |a: f64, g: f64| XState::new((1.0 - a) / 2.0, 0.0, a, (1.0 - a) / 2.0, c(g / 2.0, 0.0), c(0.0, 0.0));
    let (mirror_b, _) = rescaled_margins(&mirrored(0.1625, 0.7649)?, &grid)?;
    let mirror_cross = crossover_amplitude(&mirrored(0.015, 0.9747)?, 0.0)?;
    parts.push(format!(
        "[info] with a on rho33: R(0.1625,0.7649) max E~-D~ = {mirror_b:.3e}, R(0.0150,0.9747) crossover {}",
        mirror_cross.map_or("none".to_string(), |v| format!("{v:.6}"))
    ));
    Ok((passed, parts.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injection_flips_a_passing_check() {
        let cfg = CheckConfig::new(Scale::Reduced);
        assert!(run(3, &cfg).unwrap().passed);
        assert!(!run(3, &CheckConfig { inject: Some(3), ..cfg }).unwrap().passed);
    }

    #[test]
    fn random_states_are_valid() {
        let mut rng = StdRng::seed_from_u64(0);
        for _ in 0..1000 {
            random_x_state(&mut rng).validate().unwrap();
        }
    }
}
