//! Snapshot Monte Carlo simulation of the downlink SINR.
//!
//! Each snapshot draws independent shadowing and fast-fading variates per
//! link and records the resulting SINR in dB. Draws are keyed by
//! `(seed, sample index, link, variate kind)` through a counter-based
//! generator, so results are bit-identical for any worker count.

use rayon::prelude::*;

use crate::channel::{ChannelParams, OutageCurve, LN10_OVER_10};
use crate::error::{Error, Result};
use crate::fenton::compensated_sum;
use crate::hexnet::{distance_profile, ring_positions, DistanceProfile, NetworkLayout};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MobileSpec {
    /// One mobile at explicit coordinates.
    Fixed { x: f64, y: f64 },
    /// Mobiles at `n_angles` azimuths on the circle of radius `r`.
    Ring { r: f64, n_angles: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub snapshots: u64,
    pub seed: u64,
    pub mobile: MobileSpec,
    /// Draw lognormal shadowing per link.
    pub shadowing: bool,
    /// Draw exponential fast fading on the serving link.
    pub fading: bool,
    /// Draw fast fading on interfering links too; meaningful only with
    /// `fading` on. Turning it off reproduces the analytic model's
    /// neglect of interferer fading.
    pub interferer_fading: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimMeta {
    pub layout_hash: u64,
    pub config: SimConfig,
    pub n_positions: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SinrSamples {
    /// SINR per sample in dB, ordered by `snapshot * n_positions + angle`.
    pub values_db: Vec<f64>,
    pub meta: SimMeta,
}

/// FNV-1a over the geometry so reports can state which layout produced a
/// sample set.
fn layout_fingerprint(layout: &NetworkLayout) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(layout.rings as u64);
    eat(layout.rc.to_bits());
    for p in &layout.positions {
        eat(p[0].to_bits());
        eat(p[1].to_bits());
    }
    h
}

// Counter layout: bits 24.. hold the sample index, bits 1..24 the link
// (0 = serving, then interferers by ascending distance), bit 0 the
// variate kind (0 shadowing, 1 fading).
fn counter(sample_index: u64, link: u64, kind: u64) -> u64 {
    (sample_index << 24) | (link << 1) | kind
}

fn shadow_factor(seed: u64, ctr: u64, a_sigma: f64) -> f64 {
    (a_sigma * rng::inverse_normal_cdf(rng::u01(seed, ctr))).exp()
}

/// Runs the snapshot simulation and returns one SINR sample per
/// (snapshot, mobile position) pair.
pub fn simulate(
    layout: &NetworkLayout,
    params: &ChannelParams,
    sc: &SimConfig,
) -> Result<SinrSamples> {
    if sc.snapshots == 0 {
        return Err(Error::domain("need at least one snapshot"));
    }
    if layout.positions.len() < 2 {
        return Err(Error::domain("layout has no interfering stations"));
    }
    let positions = match sc.mobile {
        MobileSpec::Fixed { x, y } => vec![[x, y]],
        MobileSpec::Ring { r, n_angles } => ring_positions(layout.rc, r, n_angles)?,
    };
    let profiles = positions
        .iter()
        .map(|p| distance_profile(layout, *p))
        .collect::<Result<Vec<_>>>()?;
    // pathloss weights (r / r_j)^eta per position, interferers ascending
    let weights: Vec<Vec<f64>> = profiles
        .iter()
        .map(|p| {
            p.interferer_distances
                .iter()
                .map(|rj| (p.r / rj).powf(params.eta))
                .collect()
        })
        .collect();

    let n_pos = positions.len();
    let total = (sc.snapshots as usize) * n_pos;
    let a_sigma = LN10_OVER_10 * params.sigma_db;
    let seed = sc.seed;
    let draw_shadow = sc.shadowing && params.sigma_db > 0.0;
    let interferer_fading = sc.fading && sc.interferer_fading;

    let values_db: Vec<f64> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let w = &weights[idx % n_pos];
            let si = idx as u64;
            let y0 = if draw_shadow {
                shadow_factor(seed, counter(si, 0, 0), a_sigma)
            } else {
                1.0
            };
            let x0 = if sc.fading {
                rng::exponential(rng::u01(seed, counter(si, 0, 1)))
            } else {
                1.0
            };
            let denom = compensated_sum(w.iter().enumerate().map(|(j, wj)| {
                let link = j as u64 + 1;
                let yj = if draw_shadow {
                    shadow_factor(seed, counter(si, link, 0), a_sigma)
                } else {
                    1.0
                };
                let xj = if interferer_fading {
                    rng::exponential(rng::u01(seed, counter(si, link, 1)))
                } else {
                    1.0
                };
                wj * yj * xj
            }));
            10.0 * (y0 * x0 / denom).log10()
        })
        .collect();

    Ok(SinrSamples {
        values_db,
        meta: SimMeta {
            layout_hash: layout_fingerprint(layout),
            config: sc.clone(),
            n_positions: n_pos,
        },
    })
}

/// Empirical outage curve with its pointwise binomial standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalOutage {
    pub curve: OutageCurve,
    pub stderr: Vec<f64>,
}

/// Fraction of samples strictly below each grid threshold.
pub fn empirical_outage(samples: &SinrSamples, grid_db: &[f64]) -> Result<EmpiricalOutage> {
    if samples.values_db.is_empty() {
        return Err(Error::domain("no samples"));
    }
    let mut sorted = samples.values_db.clone();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut probs = Vec::with_capacity(grid_db.len());
    let mut stderr = Vec::with_capacity(grid_db.len());
    for &g in grid_db {
        let below = sorted.partition_point(|v| *v < g);
        let p = below as f64 / n;
        probs.push(p);
        stderr.push((p * (1.0 - p) / n).sqrt());
    }
    Ok(EmpiricalOutage {
        curve: OutageCurve::new(grid_db.to_vec(), probs)?,
        stderr,
    })
}

/// Sampling oracle for the moment-matched interference sum: draws `n`
/// realizations of `sum_j P r_j^(-eta) 10^(X_j/10)` over the profile's
/// interferers and returns the sample mean (linear) and the standard
/// deviation of its dB logarithm.
pub fn sample_lognormal_sum(
    profile: &DistanceProfile,
    params: &ChannelParams,
    n: u64,
    seed: u64,
) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 draws, got {n}")));
    }
    if profile.interferer_distances.is_empty() {
        return Err(Error::domain("profile has no interferers"));
    }
    let terms: Vec<f64> = profile
        .interferer_distances
        .iter()
        .map(|d| params.power * d.powf(-params.eta))
        .collect();
    let a_sigma = LN10_OVER_10 * params.sigma_db;
    if a_sigma == 0.0 {
        // every draw is the same deterministic sum
        return Ok((compensated_sum(terms.iter().copied()), 0.0));
    }
    let n_j = terms.len() as u64;
    let (mut sum_s, mut sum_l, mut sum_l2) = (0.0f64, 0.0f64, 0.0f64);
    for i in 0..n {
        let s = compensated_sum(
            terms
                .iter()
                .enumerate()
                .map(|(j, t)| t * shadow_factor(seed, i * n_j + j as u64, a_sigma)),
        );
        let l = 10.0 * s.log10();
        sum_s += s;
        sum_l += l;
        sum_l2 += l * l;
    }
    let nf = n as f64;
    let var_l = (sum_l2 - sum_l * sum_l / nf) / (nf - 1.0);
    Ok((sum_s / nf, var_l.max(0.0).sqrt()))
}

/// Sample dump with header `snapshot,angle_index,sinr_db`.
pub fn samples_csv(samples: &SinrSamples) -> String {
    let n_pos = samples.meta.n_positions.max(1);
    let mut out = String::from("snapshot,angle_index,sinr_db\n");
    for (idx, v) in samples.values_db.iter().enumerate() {
        out.push_str(&format!("{},{},{:.6}\n", idx / n_pos, idx % n_pos, v));
    }
    out
}
