use proptest::prelude::*;

use chaincorr::analysis::{esd_threshold, scan_time};
use chaincorr::chain::{transition_amplitude, transition_amplitudes_all, ChainSpec};
use chaincorr::channel::evolve_pair;
use chaincorr::correlations::{concurrence_general, concurrence_x, discord_one_way, full_report_x, Side};
use chaincorr::linalg::C64;
use chaincorr::states::XState;

fn x_state() -> impl Strategy<Value = XState> {
    (
        prop::array::uniform4(0.001f64..1.0),
        0.0f64..=1.0,
        0.0f64..=1.0,
        0.0f64..std::f64::consts::TAU,
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(|(p, s14, s23, a14, a23)| {
            let total: f64 = p.iter().sum();
            let p = p.map(|v| v / total);
            XState {
                p1: p[0],
                p2: p[1],
                p3: p[2],
                p4: 1.0 - p[0] - p[1] - p[2],
                c14: C64::from_polar(s14 * (p[0] * p[3]).sqrt(), a14),
                c23: C64::from_polar(s23 * (p[1] * p[2]).sqrt(), a23),
            }
        })
}

fn amplitude() -> impl Strategy<Value = C64> {
    (0.0f64..=1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(m, a)| C64::from_polar(m, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_only_adds_a_phase(n in 2usize..40, h in -3.0f64..3.0, t in 0.0f64..60.0, pick in 0.0f64..1.0) {
        let r = 1 + ((n - 1) as f64 * pick) as usize;
        let free = transition_amplitude(&ChainSpec::uniform(n).unwrap(), r, t).unwrap().value();
        let spec = ChainSpec::new(n, 1.0, h).unwrap();
        let with = transition_amplitude(&spec, r, t).unwrap().value();
        prop_assert!((with - free * C64::from_polar(1.0, -2.0 * h * t)).norm() < 1e-12);
    }

    #[test]
    fn single_excitation_probability_is_conserved(n in 2usize..60, j in 0.2f64..3.0, t in 0.0f64..80.0) {
        let spec = ChainSpec::new(n, j, 0.0).unwrap();
        let total: f64 = transition_amplitudes_all(&spec, t).unwrap().iter().map(|f| f.value().norm_sqr()).sum();
        prop_assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn channel_keeps_states_valid(x in x_state(), f in amplitude()) {
        let y = evolve_pair(&x, f).unwrap();
        prop_assert!(y.eigenvalues().iter().all(|&l| l > -1e-12));
        prop_assert!((y.populations().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn channels_compose(x in x_state(), f in amplitude(), g in amplitude()) {
        let twice = evolve_pair(&evolve_pair(&x, f).unwrap(), g).unwrap();
        let once = evolve_pair(&x, f * g).unwrap();
        prop_assert!(twice.max_abs_diff(&once) < 1e-12);
    }

    #[test]
    fn concurrence_formulas_agree(x in x_state()) {
        prop_assert!((concurrence_x(&x) - concurrence_general(&x.to_dense())).abs() < 1e-9);
    }

    #[test]
    fn concurrence_never_grows_under_the_channel(x in x_state(), f in amplitude()) {
        prop_assert!(concurrence_x(&evolve_pair(&x, f).unwrap()) <= concurrence_x(&x) + 1e-12);
    }

    #[test]
    fn thresholds_predict_sudden_death(x in x_state(), m in 0.0f64..=1.0) {
        prop_assume!(x.p3 * x.p4 > 1e-9);
        let thr = esd_threshold(&x);
        prop_assume!((m * m - thr.death_threshold()).abs() > 1e-9);
        let dead = concurrence_x(&evolve_pair(&x, C64::new(m, 0.0)).unwrap()) == 0.0;
        prop_assert_eq!(dead, thr.is_dead(m * m));
    }

    #[test]
    fn report_respects_orderings(x in x_state()) {
        let r = full_report_x(&x).unwrap();
        r.check_consistency().unwrap();
        prop_assert!(r.discord_two_way >= 0.0 && r.discord_two_way <= r.mutual_info + 1e-9);
        prop_assert!(r.eof <= r.concurrence + 1e-12);
        prop_assert!(r.mutual_info <= 2.0 * r.entropy_a.min(r.entropy_b) + 1e-9);
    }

    #[test]
    fn phase_of_f_does_not_change_discord(x in x_state(), m in 0.0f64..=1.0, a in 0.0f64..std::f64::consts::TAU) {
        let real = evolve_pair(&x, C64::new(m, 0.0)).unwrap().to_dense();
        let rotated = evolve_pair(&x, C64::from_polar(m, a)).unwrap().to_dense();
        for side in [Side::A, Side::B] {
            let d0 = discord_one_way(&real, side).unwrap();
            let d1 = discord_one_way(&rotated, side).unwrap();
            prop_assert!((d0 - d1).abs() < 1e-7, "{} vs {}", d0, d1);
        }
    }
}

#[test]
fn parallel_scan_matches_serial_evaluation() {
    let spec = ChainSpec::uniform(9).unwrap();
    let x = XState::new(0.3, 0.2, 0.1, 0.4, C64::new(0.2, 0.1), C64::new(0.0, 0.1)).unwrap();
    let grid: Vec<f64> = (0..64).map(|i| i as f64 * 0.2).collect();
    let scan = scan_time(&spec, &x, 9, &grid).unwrap();
    for (p, &t) in scan.points.iter().zip(&grid) {
        let f = transition_amplitude(&spec, 9, t).unwrap().clamped();
        let serial = full_report_x(&evolve_pair(&x, f).unwrap()).unwrap();
        assert_eq!(p.report, serial);
    }
}
