//! Downlink SIR analysis for cellular networks.
//!
//! The received signal-to-interference ratio of a mobile served by the
//! nearest base station is driven by three effects: power-law pathloss,
//! slowly varying lognormal shadowing and Rayleigh fast fading. This crate
//! evaluates the resulting outage probability (the CDF of the SIR) three
//! ways and cross-checks them:
//!
//! * a moment-matching approximation that collapses the interference sum
//!   into a single equivalent lognormal ([`fenton`]),
//! * a continuum ("fluid") network model with closed-form interference
//!   factors that depend on the mobile distance only ([`fluid`]),
//! * a snapshot Monte Carlo simulator on an explicit hexagonal layout
//!   ([`mcsim`]).
//!
//! [`outage`] turns either analytic model into outage curves, coverage
//! radii and Shannon capacity; [`hexnet`] builds the lattice geometry.

pub mod channel;
pub mod error;
pub mod fenton;
pub mod fluid;
pub mod hexnet;
pub mod mcsim;
pub mod outage;
pub mod rng;

mod quad;

pub use channel::{ChannelParams, LognormalParams, OutageCurve};
pub use error::{Error, Result};
pub use fenton::{InterferenceMoments, YfMoments};
pub use fluid::FluidParams;
pub use hexnet::{DistanceProfile, NetworkLayout};
pub use mcsim::{MobileSpec, SimConfig, SinrSamples};
pub use outage::{FluidModel, OutageMode, QuadMethod, QuadratureConfig};
