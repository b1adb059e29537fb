//! Classical angular-momentum ensembles on the sphere, three detector models,
//! and the correlation machinery needed to evaluate Bell-CHSH combinations on
//! them — both in closed form and by seeded Monte Carlo.
//!
//! The library is organized around the stations of a two-particle
//! angular-momentum experiment:
//!
//! * [`geometry`] — measurement axes in the zy plane, momentum vectors,
//!   reproducible random streams, and uniform sphere sampling.
//! * [`ensembles`] — the particle distributions: fixed-`J_z` phase-space
//!   orbits, their configuration-space density, spherical readout zones, and
//!   the back-to-back two-particle source.
//! * [`detectors`] — sharp (quantized, may miss), direct (exact projection),
//!   and interacting (zone-conditioned random readout) measurements.
//! * [`correlations`] — pair expectations `E(a,b)`, CHSH combinations, axis
//!   scans, stratified and finite-ring estimators, and a deterministic
//!   locally-responding baseline.
//! * [`verification`] — density histogram validation, hemisphere overlap
//!   geometry, and the witness-function checks.
//! * [`cli`] — the command-line front end used by the `bellphase` binary.
//!
//! Every estimator takes an explicit [`RngStream`] and a substream count, and
//! merges per-substream partial sums in index order, so results are
//! bit-reproducible for a fixed `(seed, stream, substreams)` triple no matter
//! how many worker threads run underneath.
//!
//! See the crate `examples/` directory for one runnable program per major
//! capability.

pub mod cli;
pub mod correlations;
pub mod detectors;
pub mod ensembles;
pub mod geometry;
mod numint;
pub mod verification;

pub use correlations::{
    analytic_e, analytic_e_dyn, analytic_e_stat, bell_local_e, chsh_analytic, chsh_from_pairs,
    chsh_scan, mc_e_dyn, mc_e_stat_ring, mc_e_stat_stratified, ChshResult, ChshScan,
    ChshSettings, CorrelationEstimate, GridResponse, ResponseFunction, RingEstimates,
};
pub use detectors::{
    detect_direct, detect_sharp, DetectorReading, OutcomeDistribution, OutcomeFamily,
};
pub use ensembles::{
    config_density, config_density_theta_marginal, mean_projection_jz, sample_fixed_jz_orbit,
    sample_singlet_pair, sample_zone, support_theta_bounds, zone_index, zone_mean_projection,
    GaugeConfig, HalfInt, Mode, PhasePoint, ZoneSpec,
};
pub use geometry::{sample_uniform_sphere, Axis, MomentumVector, RngStream};
pub use verification::{
    contradiction_gap, density_histogram_check, hemisphere_overlap, hemisphere_overlap_mc,
    witness_check, ContradictionReport, DensityCheckReport, Witness, WitnessReport,
};

/// Errors reported by the library.
///
/// `Config` covers invalid parameters caught before any sampling starts;
/// `Contract` covers numerical invariants found broken while a computation is
/// running.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
