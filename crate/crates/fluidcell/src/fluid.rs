//! Continuum approximation of the interfering network.
//!
//! Interfering stations are smeared into a uniform density ring between
//! the first-neighbor distance and the network edge, which turns the
//! interference sums into closed-form integrals of the pathloss over an
//! annulus centered on the mobile.

use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::fenton::{h_function, moments_from_y_g, YfMoments};
use crate::hexnet::NetworkLayout;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluidParams {
    /// Station density per unit area.
    pub rho_bs: f64,
    /// Half the inter-site distance.
    pub rc: f64,
    /// Network radius measured from the serving station.
    pub r_nw: f64,
}

impl FluidParams {
    pub fn new(rho_bs: f64, rc: f64, r_nw: f64) -> Result<Self> {
        if !(rho_bs > 0.0) {
            return Err(Error::domain(format!(
                "station density must be positive, got {rho_bs}"
            )));
        }
        if !(rc > 0.0) {
            return Err(Error::domain(format!(
                "cell half-distance must be positive, got {rc}"
            )));
        }
        if !(r_nw >= 2.0 * rc) {
            return Err(Error::domain(format!(
                "network radius {r_nw} cannot be smaller than the first \
                 interferer distance {}",
                2.0 * rc
            )));
        }
        Ok(FluidParams { rho_bs, rc, r_nw })
    }

    /// Continuum parameters consistent with a discrete layout.
    pub fn matching_layout(layout: &NetworkLayout) -> Result<Self> {
        FluidParams::new(layout.rho_bs, layout.rc, layout.r_nw)
    }
}

fn check_mobile_radius(r: f64, fp: &FluidParams) -> Result<()> {
    if !(r > 0.0 && r < 2.0 * fp.rc) {
        return Err(Error::domain(format!(
            "mobile radius must lie in (0, 2*rc), got {r} for rc = {}",
            fp.rc
        )));
    }
    Ok(())
}

/// Annulus integral of the pathloss ratio with exponent `p`:
/// `2 pi rho r^p / (p - 2) * ((2 rc - r)^(2-p) - (r_nw - r)^(2-p))`.
fn annulus_moment(r: f64, p: f64, fp: &FluidParams) -> f64 {
    let lo = 2.0 * fp.rc - r;
    let hi = fp.r_nw - r;
    2.0 * std::f64::consts::PI * fp.rho_bs * r.powf(p) / (p - 2.0)
        * (lo.powf(2.0 - p) - hi.powf(2.0 - p))
}

/// Pathloss-only interference-to-signal ratio in the continuum model.
pub fn y_fluid(r: f64, eta: f64, fp: &FluidParams) -> Result<f64> {
    if !(eta > 2.0) {
        return Err(Error::domain(format!(
            "pathloss exponent must exceed 2, got {eta}"
        )));
    }
    check_mobile_radius(r, fp)?;
    Ok(annulus_moment(r, eta, fp))
}

/// Concentration factor of the continuum interference field. The model
/// itself can push this outside (0, 1] when the annulus is so thin that
/// the matched lognormal stops existing; that case is reported as a
/// model violation carrying the offending value.
pub fn g_fluid(r: f64, eta: f64, fp: &FluidParams) -> Result<f64> {
    if !(eta > 2.0) {
        return Err(Error::domain(format!(
            "pathloss exponent must exceed 2, got {eta}"
        )));
    }
    check_mobile_radius(r, fp)?;
    let y = annulus_moment(r, eta, fp);
    let g = annulus_moment(r, 2.0 * eta, fp) / (y * y);
    if !(g > 0.0 && g <= 1.0) {
        return Err(Error::ModelViolation {
            quantity: "fluid concentration factor",
            value: g,
            expected: "a value in (0, 1]",
        });
    }
    Ok(g)
}

/// Ratio moments of the continuum model at mobile radius `r`.
pub fn yf_moments_fluid(r: f64, channel: &ChannelParams, fp: &FluidParams) -> Result<YfMoments> {
    let y = y_fluid(r, channel.eta, fp)?;
    let g = g_fluid(r, channel.eta, fp)?;
    moments_from_y_g(y, g, channel.sigma_db)
}

/// Shadowing gain versus spread at fixed geometry: pairs
/// `(sigma_db, H(g_fluid(r), sigma_db))` for each grid point.
pub fn h_saturation_curve(
    r: f64,
    eta: f64,
    fp: &FluidParams,
    sigma_grid_db: &[f64],
) -> Result<Vec<(f64, f64)>> {
    let g = g_fluid(r, eta, fp)?;
    sigma_grid_db
        .iter()
        .map(|&s| h_function(g, s).map(|h| (s, h)))
        .collect()
}
