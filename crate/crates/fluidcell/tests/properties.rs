//! Randomized invariants over the public API, driven by proptest.

use proptest::prelude::*;

use fluidcell::channel::q_function;
use fluidcell::fenton::{h_function, y_factor_discrete, yf_moments_discrete};
use fluidcell::hexnet::DistanceProfile;
use fluidcell::outage::{outage_fading, outage_shadowing, sinr_at_outage_model};
use fluidcell::rng;
use fluidcell::{ChannelParams, OutageMode, QuadratureConfig, YfMoments};

fn profile_strategy() -> impl Strategy<Value = (DistanceProfile, f64, f64)> {
    (
        0.05f64..1.0,
        prop::collection::vec(1.0f64..20.0, 1..40),
        2.1f64..6.0,
        0.0f64..12.0,
    )
        .prop_map(|(r, mults, eta, sigma)| {
            let dists = mults.iter().map(|m| r * m).collect();
            (DistanceProfile::new(r, dists).unwrap(), eta, sigma)
        })
}

proptest! {
    #[test]
    fn normal_quantile_inverts_q(u in 1e-9f64..=0.999999999) {
        let z = rng::inverse_normal_cdf(u);
        let q = q_function(z);
        let want = 1.0 - u;
        prop_assert!((q - want).abs() <= 1e-9 * want.max(1e-6));
    }

    #[test]
    fn uniform_draws_stay_inside_the_open_interval(seed in any::<u64>(), counter in any::<u64>()) {
        let u = rng::u01(seed, counter);
        prop_assert!(u > 0.0 && u < 1.0);
    }

    #[test]
    fn shadowing_gain_is_bounded(g in 1e-6f64..=1.0, sigma in 0.0f64..15.0) {
        let h = h_function(g, sigma).unwrap();
        prop_assert!(h >= 1.0 - 1e-12);
        prop_assert!(h <= g.powf(-0.5) * (1.0 + 1e-12));
    }

    #[test]
    fn matched_moments_keep_their_envelope((profile, eta, sigma) in profile_strategy()) {
        let ch = ChannelParams::new(eta, sigma, 1.0, 1.0, 0.0).unwrap();
        let m = yf_moments_discrete(&profile, &ch).unwrap();
        // spread cap and consistency of the dB median with the pathloss sum
        prop_assert!(m.s_f_db >= 0.0);
        prop_assert!(m.s_f_db <= 2f64.sqrt() * sigma + 1e-12);
        prop_assert!(m.g_factor > 0.0 && m.g_factor <= 1.0);
        prop_assert!(m.h_factor >= 1.0 - 1e-12);
        let y = y_factor_discrete(&profile, eta).unwrap();
        prop_assert!((m.y_f_linear - y).abs() <= 1e-12 * y);
    }

    #[test]
    fn adding_an_interferer_raises_interference(
        (profile, eta, _) in profile_strategy(),
        extra in 1.0f64..20.0,
    ) {
        let y0 = y_factor_discrete(&profile, eta).unwrap();
        let mut dists = profile.interferer_distances.clone();
        dists.push(profile.r * extra);
        let bigger = DistanceProfile::new(profile.r, dists).unwrap();
        let y1 = y_factor_discrete(&bigger, eta).unwrap();
        prop_assert!(y1 > y0);
    }

    #[test]
    fn outage_values_are_probabilities(
        m_db in -20.0f64..20.0,
        s_db in 0.0f64..12.0,
        d_lo in -40.0f64..10.0,
        gap in 0.1f64..20.0,
    ) {
        let m = YfMoments::from_db(m_db, s_db).unwrap();
        let qc = QuadratureConfig::default();
        let d_hi = d_lo + gap;
        for mode in [OutageMode::Shadowing, OutageMode::Fading] {
            let (lo, hi) = match mode {
                OutageMode::Shadowing => (outage_shadowing(&m, d_lo), outage_shadowing(&m, d_hi)),
                OutageMode::Fading => (
                    outage_fading(&m, d_lo, &qc).unwrap(),
                    outage_fading(&m, d_hi, &qc).unwrap(),
                ),
            };
            prop_assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
            prop_assert!(hi >= lo - 1e-12);
        }
    }

    #[test]
    fn threshold_inversion_round_trips(
        m_db in -15.0f64..15.0,
        s_db in 0.5f64..12.0,
        p in 0.01f64..0.99,
    ) {
        let m = YfMoments::from_db(m_db, s_db).unwrap();
        let qc = QuadratureConfig::default();
        let d = sinr_at_outage_model(&m, OutageMode::Shadowing, &qc, p).unwrap();
        let back = outage_shadowing(&m, d);
        prop_assert!((back - p).abs() <= 1e-5);
    }
}
