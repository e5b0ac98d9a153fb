//! Correlation measures for two-qubit states: entropies, mutual
//! information, concurrence, entanglement of formation, one-way classical
//! correlations and one- and two-way quantum discord.

mod discord;
mod entanglement;
pub mod simplex;

use serde::{Deserialize, Serialize};

pub use discord::{
    classical_correlation, discord_bruteforce, discord_bruteforce_polished, discord_one_way, discord_two_way,
    minimize_conditional_entropy, one_way, one_way_with, post_measurement_ensemble, Branch, ConditionalEntropy,
    DiscordOptions, OneWay, Side, NEGATIVE_CLAMP,
};
pub use entanglement::{concurrence_general, concurrence_x, eof, eof_from_concurrence, eof_x};

use crate::error::{Error, Result};
use crate::io::csv_row;
use crate::states::{von_neumann_entropy, DensityMatrix2Q, XState};

/// Every measure for one state, in bits where applicable.
///
/// `_ab` fields refer to qubit A conditioned on a measurement of B (the
/// "←" direction); `_ba` fields measure A instead (the "→" direction).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub entropy_total: f64,
    pub entropy_a: f64,
    pub entropy_b: f64,
    pub mutual_info: f64,
    pub classical_ab: f64,
    pub classical_ba: f64,
    pub discord_ab: f64,
    pub discord_ba: f64,
    pub discord_two_way: f64,
    pub concurrence: f64,
    pub eof: f64,
}

impl CorrelationReport {
    pub const CSV_HEADER: &'static str = "t_or_f,S,I,J_ab,J_ba,D_ab,D_ba,D,C,E";

    pub fn csv_row(&self, axis_value: f64) -> String {
        csv_row(&[
            axis_value,
            self.entropy_total,
            self.mutual_info,
            self.classical_ab,
            self.classical_ba,
            self.discord_ab,
            self.discord_ba,
            self.discord_two_way,
            self.concurrence,
            self.eof,
        ])
    }

    /// Checks the ordering constraints every report must satisfy.
    pub fn check_consistency(&self) -> Result<()> {
        let slack = 1e-9;
        let bounded = |v: f64| v >= 0.0 && v <= self.mutual_info + slack;
        if self.mutual_info < 0.0 {
            return Err(Error::consistency("negative mutual information"));
        }
        if self.discord_two_way != self.discord_ab.max(self.discord_ba) {
            return Err(Error::consistency("two-way discord is not the max of the one-way values"));
        }
        for (name, v) in [
            ("D_ab", self.discord_ab),
            ("D_ba", self.discord_ba),
            ("J_ab", self.classical_ab),
            ("J_ba", self.classical_ba),
        ] {
            if !bounded(v) {
                return Err(Error::consistency(format!("{name} = {v} outside [0, I = {}]", self.mutual_info)));
            }
        }
        Ok(())
    }
}

fn assemble(rho: &DensityMatrix2Q, entropy_total: f64, concurrence: f64, opts: &DiscordOptions) -> Result<CorrelationReport> {
    let entropy_a = von_neumann_entropy(&rho.marginal_a())?;
    let entropy_b = von_neumann_entropy(&rho.marginal_b())?;
    let mi = entropy_a + entropy_b - entropy_total;
    let mutual_info = if (-NEGATIVE_CLAMP..0.0).contains(&mi) { 0.0 } else { mi };
    let ab = one_way_with(rho, Side::B, opts)?;
    let ba = one_way_with(rho, Side::A, opts)?;
    let report = CorrelationReport {
        entropy_total,
        entropy_a,
        entropy_b,
        mutual_info,
        classical_ab: ab.classical,
        classical_ba: ba.classical,
        discord_ab: ab.discord,
        discord_ba: ba.discord,
        discord_two_way: ab.discord.max(ba.discord),
        concurrence,
        eof: eof_from_concurrence(concurrence),
    };
    report.check_consistency()?;
    Ok(report)
}

/// Report for a general two-qubit state.
pub fn full_report(rho: &DensityMatrix2Q) -> Result<CorrelationReport> {
    full_report_with(rho, &DiscordOptions::default())
}

pub fn full_report_with(rho: &DensityMatrix2Q, opts: &DiscordOptions) -> Result<CorrelationReport> {
    assemble(rho, von_neumann_entropy(rho)?, concurrence_general(rho), opts)
}

/// Report for an X state, using the closed-form spectrum and concurrence.
pub fn full_report_x(x: &XState) -> Result<CorrelationReport> {
    full_report_x_with(x, &DiscordOptions::default())
}

pub fn full_report_x_with(x: &XState, opts: &DiscordOptions) -> Result<CorrelationReport> {
    assemble(&x.to_dense(), von_neumann_entropy(x)?, concurrence_x(x), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::evolve_pair;
    use crate::linalg::{c, Mat2, C64};
    use crate::states::{mdms_p, mdms_r, mdms_werner, mmm_state, pure_state};
    use rand::{Rng, SeedableRng};

    #[test]
    fn maximally_mixed_report() {
        let r = full_report_x(&XState::maximally_mixed()).unwrap();
        assert!((r.entropy_total - 2.0).abs() < 1e-12);
        assert!((r.entropy_a - 1.0).abs() < 1e-12 && (r.entropy_b - 1.0).abs() < 1e-12);
        for v in [r.mutual_info, r.classical_ab, r.classical_ba, r.discord_two_way, r.concurrence, r.eof] {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn bell_report() {
        let r = full_report(&pure_state(1.0).unwrap().to_dense()).unwrap();
        assert!((r.mutual_info - 2.0).abs() < 1e-9);
        for v in [r.classical_ab, r.classical_ba, r.discord_ab, r.discord_ba, r.concurrence, r.eof] {
            assert!((v - 1.0).abs() < 1e-8, "{r:?}");
        }
    }

    #[test]
    fn pure_states_have_equal_discord_and_eof() {
        for k in 0..=20 {
            let x = pure_state(k as f64 / 20.0).unwrap();
            let r = full_report_x(&x).unwrap();
            assert!((r.discord_two_way - r.eof).abs() < 1e-5);
            assert!((concurrence_x(&x) - k as f64 / 20.0).abs() < 1e-10);
        }
    }

    #[test]
    fn evolved_bell_state_has_equal_discord_and_eof() {
        let y = evolve_pair(&mdms_werner(1.0).unwrap(), c(1.0 / 2f64.sqrt(), 0.0)).unwrap();
        let r = full_report_x(&y).unwrap();
        assert!((r.discord_two_way - r.eof).abs() < 1e-4, "{r:?}");
    }

    // Closed form for states diagonal in the Bell basis: I minus the classical
    // part, which depends only on the largest |c_i|.
    fn bell_diagonal_oracle(cs: [f64; 3]) -> f64 {
        let [c1, c2, c3] = cs;
        let lams = [
            (1.0 - c1 - c2 - c3) / 4.0,
            (1.0 - c1 + c2 + c3) / 4.0,
            (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0,
        ];
        let s: f64 = lams.iter().filter(|&&l| l > 0.0).map(|&l| -l * l.log2()).sum();
        let m = c1.abs().max(c2.abs()).max(c3.abs());
        let h = |p: f64| if p > 0.0 { p * p.log2() } else { 0.0 };
        let classical = h((1.0 - m) / 2.0) + h((1.0 + m) / 2.0) + 1.0;
        2.0 - s - classical
    }

    #[test]
    fn bell_diagonal_closed_form() {
        for cs in [[0.53, 0.340, 0.035], [0.2, -0.5, 0.1], [-0.6, 0.3, 0.4], [0.9, 0.0, 0.0]] {
            let d = discord_two_way(&mmm_state(cs[0], cs[1], cs[2]).unwrap().to_dense()).unwrap();
            let want = bell_diagonal_oracle(cs);
            assert!((d - want).abs() < 1e-7, "{cs:?}: {d} vs {want}");
        }
    }

    #[test]
    fn quantum_classical_directions() {
        let y = evolve_pair(&mmm_state(1.0, 0.0, 0.0).unwrap(), c(0.8, 0.0)).unwrap();
        let rho = y.to_dense();
        assert!(discord_one_way(&rho, Side::B).unwrap() < 1e-7);
        assert!(discord_one_way(&rho, Side::A).unwrap() > 1e-3);
    }

    #[test]
    fn report_json_and_csv() {
        let r = full_report_x(&mdms_r(0.1625, 0.7649).unwrap()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: CorrelationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let row = r.csv_row(0.5);
        assert_eq!(row.split(',').count(), CorrelationReport::CSV_HEADER.split(',').count());
    }

    fn random_unitary(rng: &mut impl Rng) -> Mat2 {
        let (a, b, g, d) = (rng.gen_range(0.0..6.3), rng.gen_range(0.0..6.3), rng.gen_range(0.0..6.3), rng.gen_range(0.0..3.2f64));
        let (s, co) = (d / 2.0).sin_cos();
        let ph = C64::from_polar(1.0, a);
        Mat2::new(C64::from_polar(co, b), C64::from_polar(s, g), -C64::from_polar(s, -g), C64::from_polar(co, -b)) * ph
    }

    #[test]
    fn local_unitary_invariance() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for x in [mdms_p(0.55, 0.0).unwrap(), mmm_state(0.53, 0.34, 0.035).unwrap(), mdms_r(0.015, 0.9747).unwrap()] {
            let rho = x.to_dense();
            let base = full_report(&rho).unwrap();
            for _ in 0..3 {
                let rotated = rho.conjugate_local(&random_unitary(&mut rng), &random_unitary(&mut rng));
                let r = full_report(&rotated).unwrap();
                for (u, v) in [
                    (base.mutual_info, r.mutual_info),
                    (base.discord_ab, r.discord_ab),
                    (base.discord_ba, r.discord_ba),
                    (base.classical_ab, r.classical_ab),
                    (base.concurrence, r.concurrence),
                    (base.eof, r.eof),
                ] {
                    assert!((u - v).abs() < 1e-8, "{base:?} vs {r:?}");
                }
            }
        }
    }

    #[test]
    fn consistency_check_catches_bad_two_way() {
        let mut r = full_report_x(&mdms_werner(0.5).unwrap()).unwrap();
        r.discord_two_way += 0.1;
        assert!(r.check_consistency().is_err());
    }
}
