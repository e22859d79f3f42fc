//! Shared numeric primitives and propagation-model types.
//!
//! Everything downstream converts between dB and linear units through the
//! two functions here, and every Gaussian tail probability goes through
//! [`q_function`]. The constant [`LN10_OVER_10`] is the single definition
//! of `a = ln(10)/10` used by all dB/natural-log algebra in the crate.

use crate::error::{Error, Result};

/// `a = ln(10)/10`. For a power `x` with dB value `x_db`,
/// `ln(x) = LN10_OVER_10 * x_db`.
pub const LN10_OVER_10: f64 = std::f64::consts::LN_10 / 10.0;

/// Propagation parameters shared by every base station.
///
/// `noise` is carried for completeness but the interference-limited model
/// never reads it; `k_const` scales absolute received power and cancels in
/// every SIR ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    /// Pathloss exponent, must exceed 2.
    pub eta: f64,
    /// Shadowing standard deviation in dB.
    pub sigma_db: f64,
    /// Transmit power, linear unit.
    pub power: f64,
    /// Pathloss constant.
    pub k_const: f64,
    /// Thermal noise power, linear unit. Unused.
    pub noise: f64,
}

impl ChannelParams {
    pub fn new(eta: f64, sigma_db: f64, power: f64, k_const: f64, noise: f64) -> Result<Self> {
        if !(eta > 2.0) {
            return Err(Error::domain(format!(
                "pathloss exponent must exceed 2, got {eta}"
            )));
        }
        if !(sigma_db >= 0.0) {
            return Err(Error::domain(format!(
                "shadowing spread must be nonnegative, got {sigma_db}"
            )));
        }
        if !(power > 0.0) {
            return Err(Error::domain(format!("power must be positive, got {power}")));
        }
        if !(k_const > 0.0) {
            return Err(Error::domain(format!(
                "pathloss constant must be positive, got {k_const}"
            )));
        }
        Ok(ChannelParams {
            eta,
            sigma_db,
            power,
            k_const,
            noise,
        })
    }

    /// Unit power and pathloss constant, zero noise.
    pub fn simple(eta: f64, sigma_db: f64) -> Result<Self> {
        ChannelParams::new(eta, sigma_db, 1.0, 1.0, 0.0)
    }
}

/// Parameters of a lognormal variable expressed in the dB domain: the
/// underlying normal has mean `mu_db` and standard deviation `sigma_db`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LognormalParams {
    pub mu_db: f64,
    pub sigma_db: f64,
}

impl LognormalParams {
    pub fn new(mu_db: f64, sigma_db: f64) -> Result<Self> {
        if !(sigma_db >= 0.0) {
            return Err(Error::domain(format!(
                "sigma_db must be nonnegative, got {sigma_db}"
            )));
        }
        Ok(LognormalParams { mu_db, sigma_db })
    }

    /// Arithmetic mean of the linear-domain variable.
    pub fn mean_linear(&self) -> f64 {
        let a = LN10_OVER_10;
        (a * self.mu_db + 0.5 * (a * self.sigma_db).powi(2)).exp()
    }

    /// Median of the linear-domain variable.
    pub fn median_linear(&self) -> f64 {
        db_to_linear(self.mu_db)
    }
}

/// Outage probability sampled on a strictly increasing grid of SIR
/// thresholds. This is the CDF of the SIR evaluated pointwise.
#[derive(Debug, Clone, PartialEq)]
pub struct OutageCurve {
    thresholds_db: Vec<f64>,
    probs: Vec<f64>,
}

// Nondecrease slack for quadrature noise in analytic curves.
const CURVE_MONOTONE_SLACK: f64 = 1e-6;

impl OutageCurve {
    pub fn new(thresholds_db: Vec<f64>, probs: Vec<f64>) -> Result<Self> {
        if thresholds_db.len() != probs.len() {
            return Err(Error::domain(format!(
                "grid length {} != probability length {}",
                thresholds_db.len(),
                probs.len()
            )));
        }
        if thresholds_db.is_empty() {
            return Err(Error::domain("empty outage curve"));
        }
        for w in thresholds_db.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::domain(format!(
                    "thresholds must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        let mut probs = probs;
        for (i, p) in probs.iter_mut().enumerate() {
            if !(*p >= -1e-12 && *p <= 1.0 + 1e-12) {
                return Err(Error::domain(format!(
                    "probability {p} at index {i} outside [0,1]"
                )));
            }
            *p = p.clamp(0.0, 1.0);
        }
        for (i, w) in probs.windows(2).enumerate() {
            if w[1] < w[0] - CURVE_MONOTONE_SLACK {
                return Err(Error::domain(format!(
                    "outage probabilities decrease at index {}: {} -> {}",
                    i, w[0], w[1]
                )));
            }
        }
        Ok(OutageCurve {
            thresholds_db,
            probs,
        })
    }

    pub fn thresholds_db(&self) -> &[f64] {
        &self.thresholds_db
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.thresholds_db.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thresholds_db.is_empty()
    }

    /// Largest pointwise probability difference against a curve on the
    /// same grid.
    pub fn max_abs_deviation(&self, other: &OutageCurve) -> Result<f64> {
        if self.thresholds_db != other.thresholds_db {
            return Err(Error::domain("curves sampled on different grids"));
        }
        Ok(self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

pub fn db_to_linear(x_db: f64) -> f64 {
    (LN10_OVER_10 * x_db).exp()
}

pub fn linear_to_db(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "dB of a nonpositive value is undefined, got {x}"
        )));
    }
    Ok(10.0 * x.log10())
}

/// Gaussian tail probability `Q(u) = P(Z > u) = erfc(u/sqrt(2))/2`.
pub fn q_function(u: f64) -> f64 {
    0.5 * erfc(u * std::f64::consts::FRAC_1_SQRT_2)
}

/// `ln Q(z)`, stable far into the upper tail where `Q` underflows.
pub(crate) fn ln_q(z: f64) -> f64 {
    if z < 35.0 {
        q_function(z).ln()
    } else {
        // asymptotic tail: Q(z) ~ phi(z)/z * (1 - 1/z^2 + 3/z^4 - 15/z^6)
        let zi2 = 1.0 / (z * z);
        -0.5 * z * z
            - (z * (2.0 * std::f64::consts::PI).sqrt()).ln()
            + (zi2 * (-1.0 + zi2 * (3.0 - 15.0 * zi2))).ln_1p()
    }
}

/// CDF of the Rayleigh-fading power factor, `P(X < x) = 1 - e^{-x}`.
pub fn rayleigh_power_cdf(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!(
            "fading power is nonnegative, got {x}"
        )));
    }
    Ok(-(-x).exp_m1())
}

// Complementary error function, rational-approximation scheme of the
// FreeBSD msun s_erf.c (SunPro). Relative accuracy ~1e-16 over the f64
// range; erfc(x) underflows to 0 near x = 27.2.

const ERX: f64 = 8.450_629_115_104_675_3e-1;

const PP0: f64 = 1.283_791_670_955_125_6e-1;
const PP1: f64 = -3.250_421_072_470_015e-1;
const PP2: f64 = -2.848_174_957_559_851e-2;
const PP3: f64 = -5.770_270_296_489_442e-3;
const PP4: f64 = -2.376_301_665_665_016_3e-5;
const QQ1: f64 = 3.979_172_239_591_553_4e-1;
const QQ2: f64 = 6.502_224_998_876_729e-2;
const QQ3: f64 = 5.081_306_281_875_766e-3;
const QQ4: f64 = 1.324_947_380_043_216_4e-4;
const QQ5: f64 = -3.960_228_278_775_368e-6;

const PA0: f64 = -2.362_118_560_752_659_4e-3;
const PA1: f64 = 4.148_561_186_837_483_3e-1;
const PA2: f64 = -3.722_078_760_357_013_3e-1;
const PA3: f64 = 3.183_466_199_011_617_5e-1;
const PA4: f64 = -1.108_946_942_823_966_8e-1;
const PA5: f64 = 3.547_830_432_561_823_6e-2;
const PA6: f64 = -2.166_375_594_868_791e-3;
const QA1: f64 = 1.064_208_804_008_442_3e-1;
const QA2: f64 = 5.403_979_177_021_711e-1;
const QA3: f64 = 7.182_865_441_419_627e-2;
const QA4: f64 = 1.261_712_198_087_616_4e-1;
const QA5: f64 = 1.363_708_391_202_905e-2;
const QA6: f64 = 1.198_449_984_679_910_7e-2;

const RA0: f64 = -9.864_944_034_847_148e-3;
const RA1: f64 = -6.938_585_727_071_818e-1;
const RA2: f64 = -1.055_862_622_532_329_1e1;
const RA3: f64 = -6.237_533_245_032_600_6e1;
const RA4: f64 = -1.623_966_694_625_734_7e2;
const RA5: f64 = -1.846_050_929_067_110_4e2;
const RA6: f64 = -8.128_743_550_630_66e1;
const RA7: f64 = -9.814_329_344_169_145e0;
const SA1: f64 = 1.965_127_166_743_925_7e1;
const SA2: f64 = 1.376_577_541_435_190_4e2;
const SA3: f64 = 4.345_658_774_752_292_3e2;
const SA4: f64 = 6.453_872_717_332_679e2;
const SA5: f64 = 4.290_081_400_275_678_4e2;
const SA6: f64 = 1.086_350_055_417_794_4e2;
const SA7: f64 = 6.570_249_770_319_282e0;
const SA8: f64 = -6.042_441_521_485_81e-2;

const RB0: f64 = -9.864_942_924_700_099e-3;
const RB1: f64 = -7.992_832_376_805_23e-1;
const RB2: f64 = -1.775_795_491_775_475_2e1;
const RB3: f64 = -1.606_363_848_558_219_2e2;
const RB4: f64 = -6.375_664_433_683_896e2;
const RB5: f64 = -1.025_095_131_611_077_2e3;
const RB6: f64 = -4.835_191_916_086_514e2;
const SB1: f64 = 3.033_806_074_348_246e1;
const SB2: f64 = 3.257_925_129_965_739_2e2;
const SB3: f64 = 1.536_729_586_084_437e3;
const SB4: f64 = 3.199_858_219_508_595_5e3;
const SB5: f64 = 2.553_050_406_433_164_4e3;
const SB6: f64 = 4.745_285_412_069_553_7e2;
const SB7: f64 = -2.244_095_244_658_581_8e1;

const TINY: f64 = 1.387_778_780_781_445_7e-17; // 2^-56

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return 0.0;
    }
    if x == f64::NEG_INFINITY {
        return 2.0;
    }
    let sign = x < 0.0;
    let x = x.abs();
    if x < 0.84375 {
        let temp = if x < TINY {
            x
        } else {
            let z = x * x;
            let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
            let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
            let y = r / s;
            if x < 0.25 {
                x + x * y
            } else {
                0.5 + (x * y + (x - 0.5))
            }
        };
        return if sign { 1.0 + temp } else { 1.0 - temp };
    }
    if x < 1.25 {
        let s = x - 1.0;
        let p = PA0 + s * (PA1 + s * (PA2 + s * (PA3 + s * (PA4 + s * (PA5 + s * PA6)))));
        let q = 1.0 + s * (QA1 + s * (QA2 + s * (QA3 + s * (QA4 + s * (QA5 + s * QA6)))));
        return if sign {
            1.0 + ERX + p / q
        } else {
            1.0 - ERX - p / q
        };
    }
    if x < 28.0 {
        let s = 1.0 / (x * x);
        let (r, q) = if x < 1.0 / 0.35 {
            (
                RA0 + s * (RA1 + s * (RA2 + s * (RA3 + s * (RA4 + s * (RA5 + s * (RA6 + s * RA7)))))),
                1.0 + s
                    * (SA1
                        + s * (SA2
                            + s * (SA3 + s * (SA4 + s * (SA5 + s * (SA6 + s * (SA7 + s * SA8))))))),
            )
        } else {
            if sign && x > 6.0 {
                return 2.0;
            }
            (
                RB0 + s * (RB1 + s * (RB2 + s * (RB3 + s * (RB4 + s * (RB5 + s * RB6))))),
                1.0 + s
                    * (SB1 + s * (SB2 + s * (SB3 + s * (SB4 + s * (SB5 + s * (SB6 + s * SB7)))))),
            )
        };
        // split x into a high part with zeroed low word for the exp product
        let z = f64::from_bits(x.to_bits() & 0xffff_ffff_0000_0000);
        let v = (-z * z - 0.5625).exp() * ((z - x) * (z + x) + r / q).exp();
        return if sign { 2.0 - v / x } else { v / x };
    }
    if sign {
        2.0
    } else {
        0.0
    }
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_infinite() {
        return x.signum();
    }
    if x.abs() < 0.84375 {
        // 1 - erfc loses accuracy only outside this range
        let ax = x.abs();
        let z = ax * ax;
        let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
        let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
        let temp = ax + ax * (r / s);
        return if x < 0.0 { -temp } else { temp };
    }
    if x > 0.0 {
        1.0 - erfc(x)
    } else {
        erfc(-x) - 1.0
    }
}
