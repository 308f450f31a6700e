//! Sampling-based distances and mixing-time estimates.

use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::bounds::mixing_time_bound;
use super::distribution::{DistributionVector, StateSpace};
use super::evolution::{worst_case_tv_curve, LumpedChain, FULL_EXACT_CAP, LUMPED_EXACT_CAP};
use crate::burnside::{run_replicas, Scratch};
use crate::combinatorics::{catalan, ParkingFunction, IPF_ENUMERATION_CAP};
use crate::error::{invalid, Error, Result};
use crate::rational::to_f64_round_up;
use crate::rng::{replica_rng, ChainRng};

/// Normalized counts of `x̄` over `replicas` chains run `t` steps from
/// `(1, 2, ..., n)`.
pub fn empirical_orbit_distribution(n: usize, t: usize, replicas: usize, seed: u64) -> Result<DistributionVector> {
    if n == 0 || replicas == 0 {
        return invalid("need n >= 1 and at least one replica");
    }
    let space = StateSpace::increasing_parking_functions(n)?;
    let finals = run_replicas(&ParkingFunction::identity(n), t, seed, replicas);
    let mut counts = vec![0u64; space.len()];
    for x in finals {
        let mut e = x.into_entries();
        e.sort_unstable();
        counts[space.index_of(&e).expect("sorted parking function is increasing")] += 1;
    }
    let masses = counts.iter().map(|&c| c as f64 / replicas as f64).collect();
    DistributionVector::empirical(space, masses)
}

/// TV between the empirical law of `x̄` over `samples` and the uniform law
/// on `IPF_n`, without enumerating `IPF_n`.
pub fn orbit_tv_to_uniform(n: usize, samples: &[ParkingFunction]) -> f64 {
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for x in samples {
        let mut e = x.entries().to_vec();
        e.sort_unstable();
        *counts.entry(e).or_default() += 1;
    }
    sparse_tv_to_uniform(&counts, samples.len(), catalan(n).to_f64().unwrap_or(f64::INFINITY))
}

fn sparse_tv_to_uniform(counts: &HashMap<Vec<usize>, u64>, total: usize, classes: f64) -> f64 {
    let u = 1.0 / classes;
    let seen: f64 = counts
        .values()
        .map(|&c| (c as f64 / total as f64 - u).abs())
        .sum();
    let unseen = (classes - counts.len() as f64) * u;
    0.5 * (seen + unseen)
}

/// Sampling noise allowance for an empirical TV over `states` cells.
pub fn noise_budget(states: usize, replicas: usize) -> f64 {
    (states as f64 / replicas as f64).sqrt() / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixingMethod {
    /// Exact worst case over all starts on `PF_n`.
    ExactWorstCase,
    /// Exact lumped chain from the orbit of the start.
    ExactLumped,
    /// Replica chains from the start, orbit law compared to uniform.
    Empirical { replicas: usize },
}

impl fmt::Display for MixingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixingMethod::ExactWorstCase => write!(f, "exact-worst-case"),
            MixingMethod::ExactLumped => write!(f, "exact-lumped"),
            MixingMethod::Empirical { replicas } => write!(f, "empirical({replicas} replicas)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixingTimeEstimate {
    pub n: usize,
    pub epsilon: f64,
    /// Smallest `t` with measured distance `<= epsilon`.
    pub t: usize,
    /// Measured distance at `t`.
    pub tv: f64,
    pub method: MixingMethod,
    /// `None` for the worst case over all starts.
    pub start: Option<ParkingFunction>,
    pub bound: usize,
}

/// Smallest `t` with measured distance at most `epsilon`.
///
/// `n <= 5` uses the exact worst case `d(t)`; `n <= 8` the exact lumped
/// chain from `(1, ..., 1)`; larger `n` runs `replicas` chains from
/// `(1, ..., 1)` and gives up after `4 * mixing_time_bound(n, epsilon)` steps.
pub fn empirical_mixing_time(n: usize, epsilon: f64, replicas: usize, seed: u64) -> Result<MixingTimeEstimate> {
    let bound = mixing_time_bound(n, epsilon)?;
    if n <= FULL_EXACT_CAP {
        let curve = worst_case_tv_curve(n, bound)?;
        let (t, tv) = curve
            .iter()
            .map(to_f64_round_up)
            .enumerate()
            .find(|(_, tv)| *tv <= epsilon)
            .ok_or_else(|| Error::NotReached(format!("d(t) > {epsilon} up to t = {bound}")))?;
        return Ok(MixingTimeEstimate {
            n,
            epsilon,
            t,
            tv,
            method: MixingMethod::ExactWorstCase,
            start: None,
            bound,
        });
    }
    let start = ParkingFunction::all_ones(n);
    let horizon = 4 * bound;
    if n <= LUMPED_EXACT_CAP {
        let chain = LumpedChain::new(n)?;
        let mut v = chain.point_mass(chain.space().index_of(start.entries()).expect("all-ones is increasing"));
        for t in 0..=horizon {
            let tv = to_f64_round_up(&chain.tv_to_uniform(&v));
            if tv <= epsilon {
                return Ok(MixingTimeEstimate {
                    n,
                    epsilon,
                    t,
                    tv,
                    method: MixingMethod::ExactLumped,
                    start: Some(start),
                    bound,
                });
            }
            v = chain.step(&v);
        }
        return Err(Error::NotReached(format!("lumped distance > {epsilon} up to t = {horizon}")));
    }
    if n > IPF_ENUMERATION_CAP || replicas == 0 {
        return invalid(format!("empirical mixing time needs 1 <= replicas and n <= {IPF_ENUMERATION_CAP}"));
    }
    let mut chains: Vec<(ParkingFunction, ChainRng)> =
        (0..replicas).map(|r| (start.clone(), replica_rng(seed, r as u64))).collect();
    for t in 0..=horizon {
        let states: Vec<ParkingFunction> = chains.iter().map(|(x, _)| x.clone()).collect();
        let tv = orbit_tv_to_uniform(n, &states);
        if tv <= epsilon {
            return Ok(MixingTimeEstimate {
                n,
                epsilon,
                t,
                tv,
                method: MixingMethod::Empirical { replicas },
                start: Some(start),
                bound,
            });
        }
        chains.par_iter_mut().for_each_init(Scratch::default, |scratch, (x, rng)| {
            scratch.step_pf(x.entries_mut(), rng);
        });
    }
    Err(Error::NotReached(format!(
        "empirical distance > {epsilon} up to t = {horizon}; noise floor is about {:.3}",
        noise_budget(catalan(n).to_usize().unwrap_or(usize::MAX), replicas)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_is_mixed_at_time_zero() {
        let est = empirical_mixing_time(1, 0.5, 10, 0).unwrap();
        assert_eq!(est.t, 0);
        let d = empirical_orbit_distribution(1, 5, 10, 0).unwrap();
        assert_eq!(d.mass_f64(0), 1.0);
    }

    #[test]
    fn exact_mixing_time_respects_bound() {
        for n in 1..=4 {
            let est = empirical_mixing_time(n, 0.25, 0, 0).unwrap();
            assert!(est.t <= est.bound);
            assert_eq!(est.method, MixingMethod::ExactWorstCase);
            let tighter = empirical_mixing_time(n, 0.1, 0, 0).unwrap();
            assert!(tighter.t >= est.t);
        }
    }

    #[test]
    fn sparse_tv_matches_dense() {
        let samples: Vec<ParkingFunction> = ["1,1,1", "1,2,1", "2,1,1", "1,1,1", "3,1,2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        // orbit counts: 111 -> 2, 112 -> 2, 123 -> 1, others 0; C_3 = 5
        let expected = 0.5 * (2.0 * (0.4 - 0.2) + (0.2 - 0.2) + 2.0 * 0.2);
        assert!((orbit_tv_to_uniform(3, &samples) - expected).abs() < 1e-12);
    }
}
