//! Moment matching for sums of lognormal interference terms.
//!
//! A sum of lognormals is approximated by a single lognormal whose first
//! two moments match (Fenton-Wilkinson). The same machinery produces the
//! moments of the interference-to-signal ratio when every term shares the
//! serving link's shadowing distribution, which is what the outage
//! formulas consume.

use crate::channel::{ChannelParams, LN10_OVER_10};
use crate::error::{Error, Result};
use crate::hexnet::DistanceProfile;

/// Matched lognormal for a sum of independent lognormal powers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceMoments {
    /// Arithmetic mean of the summed power, linear scale.
    pub mean_linear: f64,
    /// Spread of the matched lognormal in dB.
    pub sigma_t_db: f64,
}

impl InterferenceMoments {
    /// Median of the matched lognormal, linear scale.
    pub fn median_linear(&self) -> f64 {
        let a = LN10_OVER_10;
        self.mean_linear * (-(a * self.sigma_t_db).powi(2) / 2.0).exp()
    }
}

/// Lognormal model of the interference-to-signal power ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YfMoments {
    /// Median of the ratio in dB.
    pub m_f_db: f64,
    /// Spread of the ratio in dB.
    pub s_f_db: f64,
    /// Interference concentration factor, in (0, 1] for any real layout.
    pub g_factor: f64,
    /// Pathloss-only interference-to-signal ratio.
    pub y_f_linear: f64,
    /// Shadowing correction multiplying the pathloss ratio.
    pub h_factor: f64,
}

impl YfMoments {
    /// Median of the ratio on the linear scale.
    pub fn m_f_linear(&self) -> f64 {
        10f64.powf(self.m_f_db / 10.0)
    }

    /// Moments specified directly in dB, bypassing any geometry.
    pub fn from_db(m_f_db: f64, s_f_db: f64) -> Result<Self> {
        if !m_f_db.is_finite() {
            return Err(Error::domain(format!("median must be finite, got {m_f_db}")));
        }
        if !(s_f_db >= 0.0) {
            return Err(Error::domain(format!(
                "spread must be nonnegative, got {s_f_db}"
            )));
        }
        Ok(YfMoments {
            m_f_db,
            s_f_db,
            g_factor: 1.0,
            y_f_linear: 10f64.powf(m_f_db / 10.0),
            h_factor: 1.0,
        })
    }
}

/// Neumaier-compensated sum; terms of wildly different magnitude appear
/// when near and far rings mix.
pub(crate) fn compensated_sum<I: IntoIterator<Item = f64>>(terms: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in terms {
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    sum + comp
}

fn check_eta(eta: f64) -> Result<()> {
    if !(eta > 2.0) {
        return Err(Error::domain(format!(
            "pathloss exponent must exceed 2, got {eta}"
        )));
    }
    Ok(())
}

fn check_nonempty(profile: &DistanceProfile) -> Result<()> {
    if profile.interferer_distances.is_empty() {
        return Err(Error::domain("profile has no interferers"));
    }
    Ok(())
}

/// Pathloss-only interference-to-signal ratio
/// `y = sum_j (r / r_j)^eta` over the interferers of `profile`.
pub fn y_factor_discrete(profile: &DistanceProfile, eta: f64) -> Result<f64> {
    check_eta(eta)?;
    check_nonempty(profile)?;
    Ok(compensated_sum(
        profile
            .interferer_distances
            .iter()
            .map(|rj| (profile.r / rj).powf(eta)),
    ))
}

/// Interference concentration factor
/// `G = sum_j r_j^(-2 eta) / (sum_j r_j^(-eta))^2`, scale free and in
/// (0, 1]; it reaches 1 only when one interferer dominates completely.
pub fn g_factor_discrete(profile: &DistanceProfile, eta: f64) -> Result<f64> {
    check_eta(eta)?;
    check_nonempty(profile)?;
    let ratios = |p: f64| {
        compensated_sum(
            profile
                .interferer_distances
                .iter()
                .map(|rj| (profile.r / rj).powf(p)),
        )
    };
    let s1 = ratios(eta);
    // Sum of squares never exceeds the squared sum of nonnegative terms;
    // rounding may overshoot 1 by an ulp when a single term dominates.
    Ok((ratios(2.0 * eta) / (s1 * s1)).min(1.0))
}

/// Shadowing gain of the matched lognormal over the pathloss-only median:
/// `ln H = t/2 - ln(1 + g (e^t - 1)) / 2` with `t = (a sigma)^2`.
pub fn h_function(g: f64, sigma_db: f64) -> Result<f64> {
    if !(g > 0.0 && g <= 1.0) {
        return Err(Error::domain(format!(
            "concentration factor must lie in (0, 1], got {g}"
        )));
    }
    if !(sigma_db >= 0.0) {
        return Err(Error::domain(format!(
            "shadowing spread must be nonnegative, got {sigma_db}"
        )));
    }
    let t = (LN10_OVER_10 * sigma_db).powi(2);
    // ln(1 + g(e^t - 1)) overflows e^t near t ~ 710; rewrite as
    // ln g + t + ln(1 + (1-g) e^(-t) / g) once e^t dwarfs 1/g
    let ln_denom = if t < 30.0 {
        (g * t.exp_m1()).ln_1p()
    } else {
        g.ln() + t + ((1.0 - g) / g * (-t).exp()).ln_1p()
    };
    Ok((0.5 * t - 0.5 * ln_denom).exp())
}

/// Fenton-Wilkinson moments for the summed interference power
/// `sum_j P d_j^(-eta) 10^(X_j / 10)` with independent `X_j ~
/// N(0, sigma^2)` in dB.
pub fn sum_lognormal_moments(
    distances: &[f64],
    channel: &ChannelParams,
) -> Result<InterferenceMoments> {
    if distances.is_empty() {
        return Err(Error::domain("no component distances"));
    }
    if distances.iter().any(|d| !(*d > 0.0)) {
        return Err(Error::domain("component distances must be positive"));
    }
    let a = LN10_OVER_10;
    let t = (a * channel.sigma_db).powi(2);
    let s1 = compensated_sum(distances.iter().map(|d| d.powf(-channel.eta)));
    let s2 = compensated_sum(distances.iter().map(|d| d.powf(-2.0 * channel.eta)));
    let g = s2 / (s1 * s1);
    // variance matching: a^2 sigma_t^2 = ln(1 + g (e^t - 1))
    let sigma_t_db = ((g * t.exp_m1()).ln_1p()).sqrt() / a;
    Ok(InterferenceMoments {
        mean_linear: channel.power * s1 * (t / 2.0).exp(),
        sigma_t_db,
    })
}

/// Moments of the interference-to-signal ratio for explicit factors.
pub(crate) fn moments_from_y_g(y: f64, g: f64, sigma_db: f64) -> Result<YfMoments> {
    if !(y > 0.0) {
        return Err(Error::domain(format!(
            "pathloss ratio must be positive, got {y}"
        )));
    }
    let h = h_function(g, sigma_db)?;
    let a = LN10_OVER_10;
    // matched spread of the ratio: own shadowing plus the sum's spread,
    // s_f^2 = sigma^2 + sigma_t^2 with a^2 sigma_t^2 = (a sigma)^2 - 2 ln H
    let s_f_db = (2.0 * (sigma_db * sigma_db - h.ln() / (a * a))).sqrt();
    Ok(YfMoments {
        m_f_db: 10.0 * (y * h).log10(),
        s_f_db,
        g_factor: g,
        y_f_linear: y,
        h_factor: h,
    })
}

/// Ratio moments for a discrete station layout.
pub fn yf_moments_discrete(profile: &DistanceProfile, channel: &ChannelParams) -> Result<YfMoments> {
    let y = y_factor_discrete(profile, channel.eta)?;
    let g = g_factor_discrete(profile, channel.eta)?;
    moments_from_y_g(y, g, channel.sigma_db)
}
