//! Total variation, exact evolution, the theoretical bound and mixing times.

pub mod bounds;
pub mod curve;
pub mod distribution;
pub mod empirical;
pub mod evolution;

pub use bounds::{mixing_time_bound, theoretical_bound};
pub use curve::{TvCurve, TvRow};
pub use distribution::{total_variation, Distance, DistributionVector, Masses, SpaceKind, StateSpace};
pub use empirical::{
    empirical_mixing_time, empirical_orbit_distribution, noise_budget, orbit_tv_to_uniform, MixingMethod,
    MixingTimeEstimate,
};
pub use evolution::{
    exact_distribution_at_time, exact_lumped_distribution_at_time, worst_case_tv, worst_case_tv_curve,
    ExactVector, FactoredChain, LumpedChain, FULL_EXACT_CAP, LUMPED_EXACT_CAP,
};
