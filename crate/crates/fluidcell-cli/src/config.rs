//! JSON experiment configuration. Unknown keys are rejected so typos fail
//! fast; every field has a default, so `{}` is a valid config. The schema
//! shipped in `docs/config.schema.json` mirrors these structs.

use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub network: NetworkSection,
    pub channel: ChannelSection,
    pub mobile: MobileSection,
    pub thresholds: ThresholdSection,
    pub modes: Vec<Mode>,
    pub sim: SimSection,
    pub output: OutputSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct NetworkSection {
    /// Interfering rings around the central cell.
    pub rings: u32,
    /// Half the inter-site distance in meters.
    pub rc_m: f64,
    /// Network radius override in meters; `null` derives it from the rings.
    pub r_nw_m: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ChannelSection {
    pub eta: Vec<f64>,
    pub sigma_db: Vec<f64>,
    pub power: f64,
    pub k_const: f64,
    pub noise: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct MobileSection {
    /// Serving distances as fractions of the cell radius, each in (0, 1].
    pub r_over_rc: Vec<f64>,
    /// Ring positions sampled per serving distance.
    pub n_angles: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ThresholdSection {
    pub min_db: f64,
    pub max_db: f64,
    pub step_db: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimSection {
    pub snapshots: u64,
    pub seed: u64,
    pub interferer_fading: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSection {
    pub dir: String,
    pub svg: bool,
}

/// One curve recipe: which model produces it and which randomness the
/// outage statistic integrates over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum Mode {
    #[serde(rename = "fluid-shadowing")]
    FluidShadowing,
    #[serde(rename = "fluid-fading")]
    FluidFading,
    #[serde(rename = "discrete-shadowing")]
    DiscreteShadowing,
    #[serde(rename = "discrete-fading")]
    DiscreteFading,
    #[serde(rename = "mc-shadowing")]
    McShadowing,
    #[serde(rename = "mc-fading")]
    McFading,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::FluidShadowing => "fluid-shadowing",
            Mode::FluidFading => "fluid-fading",
            Mode::DiscreteShadowing => "discrete-shadowing",
            Mode::DiscreteFading => "discrete-fading",
            Mode::McShadowing => "mc-shadowing",
            Mode::McFading => "mc-fading",
        }
    }

    pub fn is_mc(self) -> bool {
        matches!(self, Mode::McShadowing | Mode::McFading)
    }

    pub fn with_fading(self) -> bool {
        matches!(
            self,
            Mode::FluidFading | Mode::DiscreteFading | Mode::McFading
        )
    }
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            network: NetworkSection::default(),
            channel: ChannelSection::default(),
            mobile: MobileSection::default(),
            thresholds: ThresholdSection::default(),
            modes: vec![Mode::FluidFading, Mode::McFading],
            sim: SimSection::default(),
            output: OutputSection::default(),
        }
    }
}

impl Default for NetworkSection {
    fn default() -> Self {
        NetworkSection {
            rings: 4,
            rc_m: 1.0,
            r_nw_m: None,
        }
    }
}

impl Default for ChannelSection {
    fn default() -> Self {
        ChannelSection {
            eta: vec![3.0],
            sigma_db: vec![3.0],
            power: 1.0,
            k_const: 1.0,
            noise: 0.0,
        }
    }
}

impl Default for MobileSection {
    fn default() -> Self {
        MobileSection {
            r_over_rc: vec![1.0],
            n_angles: 12,
        }
    }
}

impl Default for ThresholdSection {
    fn default() -> Self {
        ThresholdSection {
            min_db: -30.0,
            max_db: 10.0,
            step_db: 0.25,
        }
    }
}

impl Default for SimSection {
    fn default() -> Self {
        SimSection {
            snapshots: 100_000,
            seed: 42,
            interferer_fading: true,
        }
    }
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection {
            dir: ".".to_string(),
            svg: false,
        }
    }
}

impl ExperimentConfig {
    /// The reference experiment: both pathloss exponents, both shadowing
    /// spreads, half-radius and edge mobiles, fluid analytic against the
    /// hexagonal simulation.
    pub fn canonical() -> Self {
        ExperimentConfig {
            channel: ChannelSection {
                eta: vec![3.0, 4.0],
                sigma_db: vec![3.0, 6.0],
                ..ChannelSection::default()
            },
            mobile: MobileSection {
                r_over_rc: vec![0.5, 1.0],
                n_angles: 12,
            },
            ..ExperimentConfig::default()
        }
    }

    pub fn threshold_grid(&self) -> Vec<f64> {
        let t = &self.thresholds;
        let count = ((t.max_db - t.min_db) / t.step_db + 1e-9).floor() as usize + 1;
        (0..count).map(|i| t.min_db + t.step_db * i as f64).collect()
    }

    /// Field-level checks beyond what deserialization enforces. Returns
    /// the offending field path and a reason.
    pub fn validate(&self) -> Result<(), String> {
        let err = |field: &str, why: String| Err(format!("{field}: {why}"));
        if self.network.rc_m <= 0.0 {
            return err("network.rc_m", format!("must be positive, got {}", self.network.rc_m));
        }
        if let Some(rnw) = self.network.r_nw_m {
            if rnw < 2.0 * self.network.rc_m {
                return err(
                    "network.r_nw_m",
                    format!("must be at least twice rc_m, got {rnw}"),
                );
            }
        }
        if self.channel.eta.is_empty() {
            return err("channel.eta", "must not be empty".into());
        }
        if self.channel.eta.iter().any(|e| !(*e > 2.0)) {
            return err("channel.eta", "every exponent must exceed 2".into());
        }
        if self.channel.sigma_db.is_empty() {
            return err("channel.sigma_db", "must not be empty".into());
        }
        if self.channel.sigma_db.iter().any(|s| !(*s >= 0.0)) {
            return err("channel.sigma_db", "spreads must be nonnegative".into());
        }
        if self.mobile.r_over_rc.is_empty() {
            return err("mobile.r_over_rc", "must not be empty".into());
        }
        if self.mobile.r_over_rc.iter().any(|r| !(*r > 0.0 && *r <= 1.0)) {
            return err("mobile.r_over_rc", "fractions must lie in (0, 1]".into());
        }
        if self.mobile.n_angles == 0 {
            return err("mobile.n_angles", "must be at least 1".into());
        }
        if !(self.thresholds.step_db > 0.0) {
            return err("thresholds.step_db", "must be positive".into());
        }
        if !(self.thresholds.max_db > self.thresholds.min_db) {
            return err("thresholds", "max_db must exceed min_db".into());
        }
        if self.modes.is_empty() {
            return err("modes", "must not be empty".into());
        }
        if self.sim.snapshots == 0 {
            return err("sim.snapshots", "must be at least 1".into());
        }
        let needs_layout = self
            .modes
            .iter()
            .any(|m| m.is_mc() || matches!(m, Mode::DiscreteShadowing | Mode::DiscreteFading));
        if needs_layout && self.network.rings == 0 {
            return err(
                "network.rings",
                "discrete and mc modes need at least one interfering ring".into(),
            );
        }
        Ok(())
    }
}

/// Parses and validates a config, mapping JSON syntax and schema errors
/// to a line-referenced message.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, String> {
    let cfg: ExperimentConfig = serde_json::from_str(text).map_err(|e| {
        // serde_json appends its own " at line L column C"; keep one location.
        let msg = e.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_owned();
        format!("line {}, column {}: {msg}", e.line(), e.column())
    })?;
    cfg.validate()?;
    Ok(cfg)
}
