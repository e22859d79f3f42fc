//! Experiment orchestration: builds the model objects from a config,
//! computes one outage curve per requested mode, compares them pairwise
//! and emits the CSV/SVG outputs.

use std::fmt;
use std::path::{Path, PathBuf};

use fluidcell::fenton::yf_moments_discrete;
use fluidcell::fluid::yf_moments_fluid;
use fluidcell::hexnet::{
    build_hex_network, distance_profile, layout_csv, ring_positions, NetworkLayout,
};
use fluidcell::mcsim::{empirical_outage, samples_csv, simulate, MobileSpec, SimConfig, SinrSamples};
use fluidcell::outage::{mean_capacity, outage_curve, sinr_at_outage_curve};
use fluidcell::{
    ChannelParams, Error, FluidModel, FluidParams, OutageCurve, OutageMode, QuadratureConfig,
};

use crate::config::{ExperimentConfig, Mode};
use crate::csvout;
use crate::svg;

/// Failures split by exit code: bad input (2) versus a failure while
/// computing or writing results (3).
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
        }
    }
}

fn config_err(e: Error) -> CliError {
    CliError::Config(e.to_string())
}

fn runtime_err(e: Error) -> CliError {
    CliError::Runtime(e.to_string())
}

/// Validated config plus the derived geometry shared by every operation.
pub struct Setup {
    pub cfg: ExperimentConfig,
    pub grid: Vec<f64>,
    pub layout: NetworkLayout,
    pub fluid: FluidParams,
    pub out_dir: PathBuf,
}

impl Setup {
    pub fn new(cfg: ExperimentConfig, out_dir: PathBuf) -> Result<Self, CliError> {
        let layout =
            build_hex_network(cfg.network.rings, cfg.network.rc_m).map_err(config_err)?;
        let r_nw = cfg.network.r_nw_m.unwrap_or(layout.r_nw);
        let fluid = FluidParams::new(layout.rho_bs, layout.rc, r_nw).map_err(config_err)?;
        let grid = cfg.threshold_grid();
        Ok(Setup {
            cfg,
            grid,
            layout,
            fluid,
            out_dir,
        })
    }

    fn channel(&self, eta: f64, sigma_db: f64) -> Result<ChannelParams, CliError> {
        ChannelParams::new(
            eta,
            sigma_db,
            self.cfg.channel.power,
            self.cfg.channel.k_const,
            self.cfg.channel.noise,
        )
        .map_err(config_err)
    }

    /// One outage curve for one mode; Monte Carlo modes also return the
    /// pointwise standard error and the raw samples.
    fn curve(
        &self,
        mode: Mode,
        ch: &ChannelParams,
        r_frac: f64,
    ) -> Result<(OutageCurve, Option<Vec<f64>>, Option<SinrSamples>), CliError> {
        let qc = QuadratureConfig::default();
        let stat = if mode.with_fading() {
            OutageMode::Fading
        } else {
            OutageMode::Shadowing
        };
        let r = r_frac * self.layout.rc;
        match mode {
            Mode::FluidShadowing | Mode::FluidFading => {
                let m = yf_moments_fluid(r, ch, &self.fluid).map_err(runtime_err)?;
                let c = outage_curve(&m, &self.grid, stat, &qc).map_err(runtime_err)?;
                Ok((c, None, None))
            }
            Mode::DiscreteShadowing | Mode::DiscreteFading => {
                let pts = ring_positions(self.layout.rc, r, self.cfg.mobile.n_angles)
                    .map_err(runtime_err)?;
                let mut acc = vec![0.0f64; self.grid.len()];
                for p in &pts {
                    let profile = distance_profile(&self.layout, *p).map_err(runtime_err)?;
                    let m = yf_moments_discrete(&profile, ch).map_err(runtime_err)?;
                    let c = outage_curve(&m, &self.grid, stat, &qc).map_err(runtime_err)?;
                    for (a, p) in acc.iter_mut().zip(c.probs()) {
                        *a += p;
                    }
                }
                let n = pts.len() as f64;
                let probs = acc.into_iter().map(|a| a / n).collect();
                let c = OutageCurve::new(self.grid.clone(), probs).map_err(runtime_err)?;
                Ok((c, None, None))
            }
            Mode::McShadowing | Mode::McFading => {
                let sc = SimConfig {
                    snapshots: self.cfg.sim.snapshots,
                    seed: self.cfg.sim.seed,
                    mobile: MobileSpec::Ring {
                        r,
                        n_angles: self.cfg.mobile.n_angles,
                    },
                    shadowing: true,
                    fading: mode.with_fading(),
                    interferer_fading: self.cfg.sim.interferer_fading,
                };
                let samples = simulate(&self.layout, ch, &sc).map_err(runtime_err)?;
                let emp = empirical_outage(&samples, &self.grid).map_err(runtime_err)?;
                Ok((emp.curve, Some(emp.stderr), Some(samples)))
            }
        }
    }
}

/// Closeness summary of two curves on the same threshold grid. The SINR
/// entries are the 10%-outage thresholds; a curve that never brackets
/// 10% reports NaN there.
#[derive(Debug, Clone, Copy)]
pub struct ComparisonReport {
    pub max_dev: f64,
    pub delta10_a_db: f64,
    pub delta10_b_db: f64,
    /// `delta10_b_db - delta10_a_db`
    pub shift_db: f64,
}

pub fn compare_curves(a: &OutageCurve, b: &OutageCurve) -> Result<ComparisonReport, Error> {
    let max_dev = a.max_abs_deviation(b)?;
    let delta10 = |c: &OutageCurve| match sinr_at_outage_curve(c, 0.1) {
        Ok(v) => Ok(v),
        Err(Error::OutOfRange { .. }) => Ok(f64::NAN),
        Err(e) => Err(e),
    };
    let delta10_a_db = delta10(a)?;
    let delta10_b_db = delta10(b)?;
    Ok(ComparisonReport {
        max_dev,
        delta10_a_db,
        delta10_b_db,
        shift_db: delta10_b_db - delta10_a_db,
    })
}

fn fmt_num(x: f64) -> String {
    format!("{x}")
}

fn combo_tag(eta: f64, sigma: f64, r_frac: f64) -> String {
    format!("eta{}_sigma{}_r{:.2}", fmt_num(eta), fmt_num(sigma), r_frac)
}

fn write_file(dir: &Path, name: &str, content: &str) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, content)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(path)
}

/// Computes the selected modes for every (eta, sigma, r) combination,
/// writes one curve file per mode, a combined pairwise `report.csv` and
/// optional SVG overlays.
pub fn run_experiment(
    setup: &Setup,
    selected: &[Mode],
    dump_samples: bool,
    dump_layout: bool,
) -> Result<(), CliError> {
    if selected.is_empty() {
        return Err(CliError::Config(
            "no configured mode matches this subcommand".into(),
        ));
    }
    let mut report_rows = Vec::new();
    for &eta in &setup.cfg.channel.eta {
        for &sigma in &setup.cfg.channel.sigma_db {
            let ch = setup.channel(eta, sigma)?;
            for &r_frac in &setup.cfg.mobile.r_over_rc {
                let tag = combo_tag(eta, sigma, r_frac);
                let mut curves: Vec<(Mode, OutageCurve, Option<Vec<f64>>)> = Vec::new();
                for &mode in selected {
                    let (c, stderr, samples) = setup.curve(mode, &ch, r_frac)?;
                    let name = format!("curve_{tag}_{}.csv", mode.label());
                    write_file(
                        &setup.out_dir,
                        &name,
                        &csvout::curve_csv(&c, stderr.as_deref()),
                    )?;
                    if dump_samples {
                        if let Some(s) = &samples {
                            let name = format!("samples_{tag}_{}.csv", mode.label());
                            write_file(&setup.out_dir, &name, &samples_csv(s))?;
                        }
                    }
                    curves.push((mode, c, stderr));
                }
                for i in 0..curves.len() {
                    for j in i + 1..curves.len() {
                        let rep = compare_curves(&curves[i].1, &curves[j].1)
                            .map_err(runtime_err)?;
                        println!(
                            "{tag}: {} vs {}: max dev {:.4}, shift {:.2} dB",
                            curves[i].0.label(),
                            curves[j].0.label(),
                            rep.max_dev,
                            rep.shift_db
                        );
                        report_rows.push(csvout::ReportRow {
                            eta,
                            sigma_db: sigma,
                            r_over_rc: r_frac,
                            mode_a: curves[i].0.label(),
                            mode_b: curves[j].0.label(),
                            rep,
                        });
                    }
                }
                if setup.cfg.output.svg {
                    let series: Vec<svg::Series> = curves
                        .iter()
                        .map(|(m, c, _)| svg::Series {
                            label: m.label(),
                            probs: c.probs().to_vec(),
                            dotted: m.is_mc(),
                        })
                        .collect();
                    let chart = svg::curve_chart(&tag, &setup.grid, &series);
                    write_file(&setup.out_dir, &format!("curves_{tag}.svg"), &chart)?;
                }
            }
        }
    }
    if dump_layout {
        write_file(&setup.out_dir, "layout.csv", &layout_csv(&setup.layout))?;
    }
    write_file(&setup.out_dir, "report.csv", &csvout::report_csv(&report_rows))?;
    Ok(())
}

/// Statistics actually requested by the config, in fixed order.
fn configured_stats(cfg: &ExperimentConfig) -> Vec<OutageMode> {
    let mut stats = Vec::new();
    if cfg.modes.iter().any(|m| !m.with_fading()) {
        stats.push(OutageMode::Shadowing);
    }
    if cfg.modes.iter().any(|m| m.with_fading()) {
        stats.push(OutageMode::Fading);
    }
    stats
}

fn stat_label(stat: OutageMode) -> &'static str {
    match stat {
        OutageMode::Shadowing => "shadowing",
        OutageMode::Fading => "fading",
    }
}

/// Largest serving distance whose outage stays at or below the target,
/// per (eta, sigma, statistic), on the fluid model.
pub fn run_coverage(setup: &Setup, delta_db: f64, p_target: f64) -> Result<(), CliError> {
    if !(p_target > 0.0 && p_target <= 1.0) {
        return Err(CliError::Config(format!(
            "p-target must lie in (0, 1], got {p_target}"
        )));
    }
    if !delta_db.is_finite() {
        return Err(CliError::Config(format!(
            "delta-db must be finite, got {delta_db}"
        )));
    }
    let mut rows = Vec::new();
    for &eta in &setup.cfg.channel.eta {
        for &sigma in &setup.cfg.channel.sigma_db {
            let ch = setup.channel(eta, sigma)?;
            for stat in configured_stats(&setup.cfg) {
                let model = FluidModel {
                    channel: ch,
                    fluid: setup.fluid,
                    mode: stat,
                    quad: QuadratureConfig::default(),
                };
                let r = coverage(&model, delta_db, p_target, setup.layout.rc)?;
                let r_star = r.unwrap_or(f64::NAN);
                println!(
                    "eta={} sigma={} {}: r* = {}",
                    fmt_num(eta),
                    fmt_num(sigma),
                    stat_label(stat),
                    if r_star.is_nan() {
                        "unreachable".to_string()
                    } else {
                        format!("{:.4} m", r_star)
                    }
                );
                rows.push(csvout::CoverageRow {
                    eta,
                    sigma_db: sigma,
                    mode: stat_label(stat),
                    delta_db,
                    p_target,
                    r_star_m: r_star,
                    r_star_over_rc: r_star / setup.layout.rc,
                });
            }
        }
    }
    write_file(&setup.out_dir, "coverage.csv", &csvout::coverage_csv(&rows))?;
    Ok(())
}

fn coverage(
    model: &FluidModel,
    delta_db: f64,
    p_target: f64,
    rc: f64,
) -> Result<Option<f64>, CliError> {
    fluidcell::outage::coverage_radius(model, delta_db, p_target, rc).map_err(runtime_err)
}

/// Mean downlink spectral efficiency per (eta, sigma, r) for every
/// configured analytic mode; Monte Carlo modes have no capacity integral
/// and are skipped.
pub fn run_capacity(setup: &Setup) -> Result<(), CliError> {
    let analytic: Vec<Mode> = setup
        .cfg
        .modes
        .iter()
        .copied()
        .filter(|m| !m.is_mc())
        .collect();
    if analytic.is_empty() {
        return Err(CliError::Config(
            "capacity needs at least one non-mc mode in `modes`".into(),
        ));
    }
    let qc = QuadratureConfig::default();
    let mut rows = Vec::new();
    for &eta in &setup.cfg.channel.eta {
        for &sigma in &setup.cfg.channel.sigma_db {
            let ch = setup.channel(eta, sigma)?;
            for &r_frac in &setup.cfg.mobile.r_over_rc {
                let r = r_frac * setup.layout.rc;
                for &mode in &analytic {
                    let stat = if mode.with_fading() {
                        OutageMode::Fading
                    } else {
                        OutageMode::Shadowing
                    };
                    let cap = match mode {
                        Mode::FluidShadowing | Mode::FluidFading => {
                            let m =
                                yf_moments_fluid(r, &ch, &setup.fluid).map_err(runtime_err)?;
                            mean_capacity(&m, stat, &qc).map_err(runtime_err)?
                        }
                        _ => {
                            let pts =
                                ring_positions(setup.layout.rc, r, setup.cfg.mobile.n_angles)
                                    .map_err(runtime_err)?;
                            let mut acc = 0.0;
                            for p in &pts {
                                let profile = distance_profile(&setup.layout, *p)
                                    .map_err(runtime_err)?;
                                let m =
                                    yf_moments_discrete(&profile, &ch).map_err(runtime_err)?;
                                acc += mean_capacity(&m, stat, &qc).map_err(runtime_err)?;
                            }
                            acc / pts.len() as f64
                        }
                    };
                    println!(
                        "eta={} sigma={} r={:.2}: {} capacity {:.4} bit/s/Hz",
                        fmt_num(eta),
                        fmt_num(sigma),
                        r_frac,
                        mode.label(),
                        cap
                    );
                    rows.push(csvout::CapacityRow {
                        eta,
                        sigma_db: sigma,
                        r_over_rc: r_frac,
                        mode: mode.label(),
                        capacity: cap,
                    });
                }
            }
        }
    }
    write_file(&setup.out_dir, "capacity.csv", &csvout::capacity_csv(&rows))?;
    Ok(())
}

/// Moment-matching summary against the shadowing spread at fixed
/// geometry: the first configured exponent and serving distance.
pub fn run_mf_sweep(setup: &Setup, sigma_max_db: f64, sigma_step_db: f64) -> Result<(), CliError> {
    if !(sigma_step_db > 0.0) || !(sigma_max_db >= 0.0) {
        return Err(CliError::Config(format!(
            "sigma sweep needs step > 0 and max >= 0, got step {sigma_step_db}, max {sigma_max_db}"
        )));
    }
    let eta = setup.cfg.channel.eta[0];
    let r_frac = setup.cfg.mobile.r_over_rc[0];
    let r = r_frac * setup.layout.rc;
    let count = (sigma_max_db / sigma_step_db + 1e-9).floor() as usize + 1;
    let mut rows = Vec::new();
    for i in 0..count {
        let sigma = sigma_step_db * i as f64;
        let ch = setup.channel(eta, sigma)?;
        let m = yf_moments_fluid(r, &ch, &setup.fluid).map_err(runtime_err)?;
        rows.push(csvout::MfRow {
            sigma_db: sigma,
            m_f_db: m.m_f_db,
            s_f_db: m.s_f_db,
            h_factor: m.h_factor,
            g_factor: m.g_factor,
        });
    }
    println!(
        "swept sigma 0..{} dB at eta={}, r/rc={:.2}: m_f {:.3} -> {:.3} dB",
        fmt_num(sigma_max_db),
        fmt_num(eta),
        r_frac,
        rows.first().map(|r| r.m_f_db).unwrap_or(f64::NAN),
        rows.last().map(|r| r.m_f_db).unwrap_or(f64::NAN),
    );
    write_file(&setup.out_dir, "mf_vs_sigma.csv", &csvout::mf_csv(&rows))?;
    Ok(())
}

/// The full reference suite: pairwise comparison over every configured
/// combination, the moment sweep, coverage at -15 dB / 10%, and mean
/// capacity.
pub fn run_reproduce(setup: &Setup) -> Result<(), CliError> {
    println!("== outage curves and comparison ==");
    run_experiment(setup, &setup.cfg.modes, false, false)?;
    println!("== moment matching vs shadowing spread ==");
    run_mf_sweep(setup, 15.0, 0.5)?;
    println!("== coverage radius ==");
    run_coverage(setup, -15.0, 0.1)?;
    println!("== mean capacity ==");
    run_capacity(setup)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use fluidcell::outage::outage_shadowing;
    use fluidcell::YfMoments;

    fn shadow_curve(m_f_db: f64, s_f_db: f64, grid: &[f64]) -> OutageCurve {
        let m = YfMoments::from_db(m_f_db, s_f_db).unwrap();
        let probs = grid.iter().map(|d| outage_shadowing(&m, *d)).collect();
        OutageCurve::new(grid.to_vec(), probs).unwrap()
    }

    #[test]
    fn identical_curves_compare_to_zero() {
        let grid: Vec<f64> = (0..301).map(|i| -20.0 + 0.1 * i as f64).collect();
        let a = shadow_curve(0.0, 3.0, &grid);
        let rep = compare_curves(&a, &a).unwrap();
        assert_eq!(rep.max_dev, 0.0);
        assert_eq!(rep.shift_db, 0.0);
    }

    #[test]
    fn threshold_translation_shows_up_as_the_shift() {
        let grid: Vec<f64> = (0..301).map(|i| -20.0 + 0.1 * i as f64).collect();
        let a = shadow_curve(0.0, 3.0, &grid);
        // one extra dB of median interference moves the crossing 1 dB left
        let b = shadow_curve(1.0, 3.0, &grid);
        let rep = compare_curves(&a, &b).unwrap();
        assert!((rep.shift_db - (-1.0)).abs() <= 0.1 + 1e-9, "{}", rep.shift_db);
    }

    #[test]
    fn grid_mismatch_is_a_domain_error() {
        let grid_a: Vec<f64> = (0..11).map(|i| -5.0 + i as f64).collect();
        let grid_b: Vec<f64> = (0..11).map(|i| -5.5 + i as f64).collect();
        let a = shadow_curve(0.0, 3.0, &grid_a);
        let b = shadow_curve(0.0, 3.0, &grid_b);
        assert!(matches!(
            compare_curves(&a, &b),
            Err(Error::Domain(_))
        ));
    }
}
