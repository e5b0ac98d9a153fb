//! One-way classical correlation and quantum discord under rank-1
//! projective measurements on one qubit.
//!
//! The quantity minimized is the conditional entropy Σ_i p_i S(ρ_i) of the
//! unmeasured qubit after measuring the other along a Bloch direction n.
//! Writing T_k = Tr_m[(1⊗σ_k)ρ] for the measured qubit m, the two
//! unnormalized conditional states are (ρ_u ± Σ_k n_k T_k)/2, so each
//! evaluation costs two 2×2 eigenvalue problems.

use std::f64::consts::PI;

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use super::simplex::{self, SimplexOptions};
use crate::error::{Error, Result};
use crate::linalg::{self, c, Mat2};
use crate::states::{bloch, von_neumann_entropy, DensityMatrix2Q, MeasurementBasis, QubitState};

/// Rounding slack below zero that is clamped instead of reported.
pub const NEGATIVE_CLAMP: f64 = 1e-9;

/// Which qubit is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The chain-side qubit (first tensor factor).
    A,
    /// The detached qubit (second tensor factor).
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Settings for the grid-then-simplex search over measurement directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscordOptions {
    /// (n_theta, n_phi) of the coarse grid.
    pub grid: (usize, usize),
    /// Number of best grid points polished by the simplex.
    pub polish_starts: usize,
    pub f_tol: f64,
    pub x_tol: f64,
    pub max_iter: usize,
    /// Extra simplex runs restarted from the incumbent minimum.
    pub restarts: usize,
}

impl Default for DiscordOptions {
    fn default() -> Self {
        Self { grid: (64, 32), polish_starts: 3, f_tol: 1e-9, x_tol: 1e-6, max_iter: 500, restarts: 6 }
    }
}

/// Conditional entropy of the unmeasured qubit as a function of the
/// measurement direction on the measured one.
#[derive(Debug, Clone)]
pub struct ConditionalEntropy {
    unmeasured: Mat2,
    correlators: [Mat2; 3],
}

impl ConditionalEntropy {
    pub fn new(rho: &DensityMatrix2Q, side: Side) -> Self {
        // Bring the measured qubit into the second slot.
        let rho = match side {
            Side::B => rho.clone(),
            Side::A => rho.swapped(),
        };
        let m = rho.matrix();
        let reduce = |p: &Mat2| {
            let mut out = Mat2::zeros();
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        for l in 0..2 {
                            out[(i, j)] += m[(2 * i + k, 2 * j + l)] * p[(l, k)];
                        }
                    }
                }
            }
            out
        };
        Self {
            unmeasured: reduce(&linalg::identity2()),
            correlators: linalg::paulis().map(|p| reduce(&p)),
        }
    }

    fn branches(&self, n: [f64; 3]) -> [Mat2; 2] {
        let shift = self.correlators[0] * c(n[0], 0.0) + self.correlators[1] * c(n[1], 0.0) + self.correlators[2] * c(n[2], 0.0);
        [(self.unmeasured + shift) * c(0.5, 0.0), (self.unmeasured - shift) * c(0.5, 0.0)]
    }

    pub fn eval(&self, theta: f64, phi: f64) -> f64 {
        self.eval_direction(bloch(theta, phi))
    }

    /// Directions tied to the state rather than the frame: the right
    /// singular vectors of the correlation matrix Tr[(σ_j⊗σ_k)ρ] and the
    /// Bloch vector of the measured qubit. They follow the state under local
    /// unitaries, so seeding from them makes the search frame-independent.
    fn natural_directions(&self) -> Vec<[f64; 3]> {
        let paulis = linalg::paulis();
        let corr = Matrix3::from_fn(|j, k| (paulis[j] * self.correlators[k]).trace().re);
        let mut out: Vec<[f64; 3]> = corr
            .svd(false, true)
            .v_t
            .map(|vt| (0..3).map(|i| [vt[(i, 0)], vt[(i, 1)], vt[(i, 2)]]).collect())
            .unwrap_or_default();
        let b: [f64; 3] = std::array::from_fn(|k| self.correlators[k].trace().re);
        let norm = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
        if norm > 1e-12 {
            out.push(b.map(|x| x / norm));
        }
        out
    }

    /// Same, for a unit Bloch vector.
    pub fn eval_direction(&self, n: [f64; 3]) -> f64 {
        self.branches(n)
            .iter()
            .map(|m| {
                let p = m.trace().re;
                if p > 0.0 {
                    p * linalg::entropy_normalized2(m, p)
                } else {
                    0.0
                }
            })
            .sum()
    }
}

/// One outcome of a projective measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub probability: f64,
    /// `None` for outcomes of zero probability, which carry no state.
    pub state: Option<QubitState>,
}

/// Outcome probabilities and conditional states of the unmeasured qubit.
pub fn post_measurement_ensemble(rho: &DensityMatrix2Q, basis: &MeasurementBasis, measured: Side) -> [Branch; 2] {
    let ce = ConditionalEntropy::new(rho, measured);
    ce.branches(basis.direction()).map(|m| {
        let p = m.trace().re.max(0.0);
        let state = if p > 1e-15 {
            let cond = m * c(1.0 / p, 0.0);
            Some(QubitState((cond + cond.adjoint()) * c(0.5, 0.0)))
        } else {
            None
        };
        Branch { probability: p, state }
    })
}

/// Result of the one-way optimization for a fixed measured side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OneWay {
    pub measured: Side,
    pub classical: f64,
    pub discord: f64,
    pub conditional_entropy: f64,
    pub basis: MeasurementBasis,
}

fn grid_points(grid: (usize, usize)) -> impl Iterator<Item = (f64, f64)> {
    let (nt, np) = grid;
    (0..nt).flat_map(move |i| {
        let theta = PI * i as f64 / (nt - 1) as f64;
        (0..np).map(move |j| (theta, 2.0 * PI * j as f64 / np as f64))
    })
}

fn check_grid(grid: (usize, usize)) -> Result<()> {
    if grid.0 < 2 || grid.1 < 2 {
        return Err(Error::domain(format!("measurement grid {grid:?} needs at least 2×2 points")));
    }
    Ok(())
}

/// Minimum conditional entropy over measurement directions: coarse grid,
/// then simplex polish from the best grid points and from the axis-aligned
/// directions z, x and y.
pub fn minimize_conditional_entropy(ce: &ConditionalEntropy, opts: &DiscordOptions) -> Result<(f64, MeasurementBasis)> {
    check_grid(opts.grid)?;
    let mut samples: Vec<(f64, f64, f64)> = grid_points(opts.grid).map(|(t, p)| (ce.eval(t, p), t, p)).collect();
    // Stable sort keeps grid order among ties.
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut best = samples[0];
    let mut starts: Vec<(f64, f64)> = samples.iter().take(opts.polish_starts).map(|s| (s.1, s.2)).collect();
    starts.extend([(0.0, 0.0), (PI / 2.0, 0.0), (PI / 2.0, PI / 2.0)]);
    starts.extend(ce.natural_directions().iter().map(|n| (n[2].clamp(-1.0, 1.0).acos(), n[1].atan2(n[0]))));

    let step = [PI / (opts.grid.0 - 1) as f64, 2.0 * PI / opts.grid.1 as f64];
    let simplex_opts = SimplexOptions { f_tol: opts.f_tol, x_tol: opts.x_tol, max_iter: opts.max_iter };
    let mut any_converged = false;
    for (t0, p0) in starts {
        let run = simplex::minimize(|x| ce.eval(x[0], x[1]), [t0, p0], step, &simplex_opts);
        any_converged |= run.converged;
        if run.value < best.0 {
            best = (run.value, run.x[0], run.x[1]);
        }
    }
    // Restart in a tangent-plane chart around the incumbent direction. It is
    // regular everywhere, unlike (θ, φ) near the poles, and a fresh simplex
    // gets past early collapse where a nearly pure branch makes the surface
    // steep.
    let mut scale = step[0] / 4.0;
    for _ in 0..opts.restarts {
        let n0 = bloch(best.1, best.2);
        let (e1, e2) = tangent_frame(n0);
        let at = |u: [f64; 2]| {
            let v: [f64; 3] = std::array::from_fn(|k| n0[k] + u[0] * e1[k] + u[1] * e2[k]);
            let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            v.map(|x| x / norm)
        };
        let run = simplex::minimize(|u| ce.eval_direction(at(u)), [0.0, 0.0], [scale, scale], &simplex_opts);
        any_converged |= run.converged;
        if run.value.is_nan() || run.value >= best.0 - 1e-15 {
            break;
        }
        let n = at(run.x);
        best = (run.value, n[2].clamp(-1.0, 1.0).acos(), n[1].atan2(n[0]));
        scale /= 4.0;
    }
    if !any_converged {
        return Err(Error::Computation {
            message: format!("measurement search did not converge within {} steps", opts.max_iter),
            best: best.0,
        });
    }
    Ok((best.0, MeasurementBasis::new(best.1, best.2)))
}

/// Two unit vectors completing `n` to an orthonormal frame.
fn tangent_frame(n: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let pick = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let d = pick[0] * n[0] + pick[1] * n[1] + pick[2] * n[2];
    let mut e1: [f64; 3] = std::array::from_fn(|k| pick[k] - d * n[k]);
    let l = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    e1.iter_mut().for_each(|x| *x /= l);
    let e2 = [n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2], n[0] * e1[1] - n[1] * e1[0]];
    (e1, e2)
}

fn clamp_nonnegative(value: f64, what: &str) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -NEGATIVE_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::consistency(format!("{what} came out negative ({value:e})")))
    }
}

struct Entropies {
    total: f64,
    measured: f64,
    unmeasured: f64,
}

fn entropies(rho: &DensityMatrix2Q, measured: Side) -> Result<Entropies> {
    let sa = von_neumann_entropy(&rho.marginal_a())?;
    let sb = von_neumann_entropy(&rho.marginal_b())?;
    let (measured_s, unmeasured_s) = match measured {
        Side::A => (sa, sb),
        Side::B => (sb, sa),
    };
    Ok(Entropies { total: von_neumann_entropy(rho)?, measured: measured_s, unmeasured: unmeasured_s })
}

fn one_way_from_minimum(e: &Entropies, h_min: f64, basis: MeasurementBasis, measured: Side) -> Result<OneWay> {
    let classical = clamp_nonnegative(e.unmeasured - h_min, "classical correlation")?;
    let discord = clamp_nonnegative(e.measured - e.total + h_min, "discord")?;
    Ok(OneWay { measured, classical, discord, conditional_entropy: h_min, basis })
}

pub fn one_way_with(rho: &DensityMatrix2Q, measured: Side, opts: &DiscordOptions) -> Result<OneWay> {
    let e = entropies(rho, measured)?;
    let (h_min, basis) = minimize_conditional_entropy(&ConditionalEntropy::new(rho, measured), opts)?;
    one_way_from_minimum(&e, h_min, basis, measured)
}

pub fn one_way(rho: &DensityMatrix2Q, measured: Side) -> Result<OneWay> {
    one_way_with(rho, measured, &DiscordOptions::default())
}

/// One-way classical correlation with the minimizing measurement.
pub fn classical_correlation(rho: &DensityMatrix2Q, measured: Side) -> Result<(f64, MeasurementBasis)> {
    let w = one_way(rho, measured)?;
    Ok((w.classical, w.basis))
}

pub fn discord_one_way(rho: &DensityMatrix2Q, measured: Side) -> Result<f64> {
    Ok(one_way(rho, measured)?.discord)
}

/// max of the two one-way discords.
pub fn discord_two_way(rho: &DensityMatrix2Q) -> Result<f64> {
    Ok(discord_one_way(rho, Side::A)?.max(discord_one_way(rho, Side::B)?))
}

/// Discord from the minimum over a uniform (θ, φ) grid alone. The grid
/// minimum can only overestimate the conditional-entropy minimum, so this
/// bounds the optimized discord from above.
pub fn discord_bruteforce(rho: &DensityMatrix2Q, measured: Side, grid: (usize, usize)) -> Result<f64> {
    check_grid(grid)?;
    let ce = ConditionalEntropy::new(rho, measured);
    let h_min = grid_points(grid).map(|(t, p)| ce.eval(t, p)).fold(f64::INFINITY, f64::min);
    let e = entropies(rho, measured)?;
    Ok(one_way_from_minimum(&e, h_min, MeasurementBasis::new(0.0, 0.0), measured)?.discord)
}

/// Grid minimum refined by repeated local zooming: a 9×9 patch spanning
/// one grid cell either side of the incumbent, shrunk fourfold per round.
/// Shares nothing with the simplex path beyond the objective itself.
pub fn discord_bruteforce_polished(rho: &DensityMatrix2Q, measured: Side, grid: (usize, usize)) -> Result<f64> {
    check_grid(grid)?;
    let ce = ConditionalEntropy::new(rho, measured);
    let mut best = grid_points(grid)
        .map(|(t, p)| (ce.eval(t, p), t, p))
        .fold((f64::INFINITY, 0.0, 0.0), |a, b| if b.0 < a.0 { b } else { a });
    let mut half = [PI / (grid.0 - 1) as f64, 2.0 * PI / grid.1 as f64];
    for _ in 0..20 {
        let (_, t0, p0) = best;
        for i in 0..9 {
            for j in 0..9 {
                let t = t0 + half[0] * (i as f64 - 4.0) / 4.0;
                let p = p0 + half[1] * (j as f64 - 4.0) / 4.0;
                let v = ce.eval(t, p);
                if v < best.0 {
                    best = (v, t, p);
                }
            }
        }
        half = [half[0] / 4.0, half[1] / 4.0];
    }
    let e = entropies(rho, measured)?;
    Ok(one_way_from_minimum(&e, best.0, MeasurementBasis::new(best.1, best.2), measured)?.discord)
}
