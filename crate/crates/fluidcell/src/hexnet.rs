//! Hexagonal base-station layout and mobile-to-station distance profiles.
//!
//! Stations sit on a triangular lattice with inter-site distance `2*rc`,
//! arranged in `rings` concentric rings around the serving station at the
//! origin. A [`DistanceProfile`] captures what the interference math needs
//! from the geometry: the serving distance and the sorted interferer
//! distances.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkLayout {
    /// Station coordinates in meters, serving station first at the origin.
    pub positions: Vec<[f64; 2]>,
    /// Ring index of each station, aligned with `positions`.
    pub ring_index: Vec<u32>,
    /// Half the inter-site distance.
    pub rc: f64,
    /// Number of rings around the central station.
    pub rings: u32,
    /// Network radius: outermost station distance plus `rc`.
    pub r_nw: f64,
    /// Station density, `1 / (2*sqrt(3)*rc^2)`.
    pub rho_bs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceProfile {
    /// Distance to the serving station.
    pub r: f64,
    /// Distances to all other stations, ascending.
    pub interferer_distances: Vec<f64>,
}

impl DistanceProfile {
    pub fn new(r: f64, mut interferer_distances: Vec<f64>) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::domain(format!(
                "serving distance must be positive, got {r}"
            )));
        }
        if interferer_distances.iter().any(|d| !(*d > 0.0)) {
            return Err(Error::domain("interferer distances must be positive"));
        }
        interferer_distances.sort_unstable_by(f64::total_cmp);
        Ok(DistanceProfile {
            r,
            interferer_distances,
        })
    }

    pub fn n_interferers(&self) -> usize {
        self.interferer_distances.len()
    }
}

/// Builds the hexagonal layout: `1 + 3*rings*(rings+1)` stations on a
/// triangular lattice with lattice constant `2*rc`.
pub fn build_hex_network(rings: u32, rc: f64) -> Result<NetworkLayout> {
    if !(rc > 0.0) {
        return Err(Error::domain(format!(
            "cell half-distance must be positive, got {rc}"
        )));
    }
    let n = rings as i64;
    // lattice basis (2rc, 0) and (rc, sqrt(3)*rc); ring index of (i, j) is
    // max(|i|, |j|, |i+j|)
    let sqrt3 = 3f64.sqrt();
    let mut stations: Vec<([f64; 2], u32)> = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            let ring = i.abs().max(j.abs()).max((i + j).abs());
            if ring == 0 || ring > n {
                continue;
            }
            let x = 2.0 * rc * i as f64 + rc * j as f64;
            let y = sqrt3 * rc * j as f64;
            stations.push(([x, y], ring as u32));
        }
    }
    stations.sort_by(|a, b| {
        let ra = a.1.cmp(&b.1);
        if ra != std::cmp::Ordering::Equal {
            return ra;
        }
        let ang_a = a.0[1].atan2(a.0[0]);
        let ang_b = b.0[1].atan2(b.0[0]);
        ang_a.total_cmp(&ang_b)
    });

    let mut positions = Vec::with_capacity(stations.len() + 1);
    let mut ring_index = Vec::with_capacity(stations.len() + 1);
    positions.push([0.0, 0.0]);
    ring_index.push(0);
    let mut outermost = 0.0f64;
    for (p, ring) in stations {
        outermost = outermost.max((p[0] * p[0] + p[1] * p[1]).sqrt());
        positions.push(p);
        ring_index.push(ring);
    }

    Ok(NetworkLayout {
        positions,
        ring_index,
        rc,
        rings,
        r_nw: outermost + rc,
        rho_bs: 1.0 / (2.0 * sqrt3 * rc * rc),
    })
}

// Relative slack when comparing the serving distance against interferer
// distances at cell boundaries.
const MEMBERSHIP_TOL: f64 = 1e-12;

fn distances(layout: &NetworkLayout, mobile: [f64; 2]) -> (f64, Vec<f64>) {
    let r = ((mobile[0] - layout.positions[0][0]).powi(2)
        + (mobile[1] - layout.positions[0][1]).powi(2))
    .sqrt();
    let interferers = layout.positions[1..]
        .iter()
        .map(|p| ((mobile[0] - p[0]).powi(2) + (mobile[1] - p[1]).powi(2)).sqrt())
        .collect();
    (r, interferers)
}

/// Distance profile for a mobile inside the central cell. Errors if the
/// mobile is strictly closer to a non-serving station; use
/// [`distance_profile_unchecked`] to bypass that check.
pub fn distance_profile(layout: &NetworkLayout, mobile: [f64; 2]) -> Result<DistanceProfile> {
    let (r, interferers) = distances(layout, mobile);
    if let Some(d) = interferers.iter().find(|d| r > **d * (1.0 + MEMBERSHIP_TOL)) {
        return Err(Error::Precondition(format!(
            "mobile at ({}, {}) is outside the central cell: serving distance {r} \
             exceeds interferer distance {d}",
            mobile[0], mobile[1]
        )));
    }
    DistanceProfile::new(r, interferers)
}

/// Distance profile for an arbitrary mobile position, skipping the
/// central-cell membership check. The serving station stays the central
/// one.
pub fn distance_profile_unchecked(
    layout: &NetworkLayout,
    mobile: [f64; 2],
) -> Result<DistanceProfile> {
    let (r, interferers) = distances(layout, mobile);
    DistanceProfile::new(r, interferers)
}

/// `n_angles` points uniformly spaced in azimuth on the circle of radius
/// `r` around the serving station, starting at azimuth 0.
pub fn ring_positions(rc: f64, r: f64, n_angles: usize) -> Result<Vec<[f64; 2]>> {
    if !(rc > 0.0) {
        return Err(Error::domain(format!(
            "cell half-distance must be positive, got {rc}"
        )));
    }
    if !(r > 0.0 && r <= rc) {
        return Err(Error::domain(format!(
            "ring radius must lie in (0, rc], got {r} for rc = {rc}"
        )));
    }
    if n_angles == 0 {
        return Err(Error::domain("need at least one azimuth"));
    }
    Ok((0..n_angles)
        .map(|k| {
            let phi = 2.0 * std::f64::consts::PI * k as f64 / n_angles as f64;
            [r * phi.cos(), r * phi.sin()]
        })
        .collect())
}

/// Layout dump with header `x_m,y_m,ring_index`.
pub fn layout_csv(layout: &NetworkLayout) -> String {
    let mut out = String::from("x_m,y_m,ring_index\n");
    for (p, ring) in layout.positions.iter().zip(&layout.ring_index) {
        out.push_str(&format!("{:.6},{:.6},{}\n", p[0], p[1], ring));
    }
    out
}
