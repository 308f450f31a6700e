//! Dyck paths, labeled Dyck paths and triangulations, and the samplers that
//! reach them through the parking-function chain.

pub mod dyck;
pub mod labeled;
pub mod triangulation;

pub use dyck::{dyck_to_ipf, enumerate_dyck, ipf_to_dyck, DyckPath, Step};
pub use labeled::{act_on_labeled_dyck, labeled_dyck_to_pf, outcome_map, pf_to_labeled_dyck, LabeledDyckPath};
pub use triangulation::{diagonals_cross, dyck_to_triangulation, triangulation_to_dyck, Triangulation};

use crate::burnside::{run_replicas, ChainState};
use crate::combinatorics::ParkingFunction;
use crate::error::{invalid, Result};

/// The Burnside process on labeled Dyck paths.
///
/// `F` is `S_n`-equivariant, so this is the parking-function chain read
/// through `F`; there is no second implementation to drift.
#[derive(Debug, Clone)]
pub struct LabeledDyckChain {
    inner: ChainState,
}

impl LabeledDyckChain {
    pub fn new(start: &LabeledDyckPath, seed: u64) -> Self {
        Self {
            inner: ChainState::new(labeled_dyck_to_pf(start), seed),
        }
    }

    pub fn current(&self) -> LabeledDyckPath {
        pf_to_labeled_dyck(self.inner.current())
    }

    pub fn step(&mut self) -> LabeledDyckPath {
        pf_to_labeled_dyck(self.inner.step())
    }

    pub fn advance(&mut self, t: usize) -> LabeledDyckPath {
        pf_to_labeled_dyck(self.inner.advance(t))
    }
}

/// Orbit projection of a chain state to its Dyck path.
pub fn orbit_dyck_path(x: &ParkingFunction) -> DyckPath {
    ipf_to_dyck(&x.sorted())
}

fn check_start(n: usize, x0: Option<&ParkingFunction>) -> Result<ParkingFunction> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    match x0 {
        Some(x) if x.len() != n => invalid(format!("start state has length {}, expected {n}", x.len())),
        Some(x) => Ok(x.clone()),
        None => Ok(ParkingFunction::identity(n)),
    }
}

/// Runs the chain `t` steps from `x0` (default `(1, ..., n)`), projects to the
/// orbit's Dyck path and returns the corresponding triangulation.
pub fn sample_triangulation(n: usize, t: usize, seed: u64, x0: Option<&ParkingFunction>) -> Result<Triangulation> {
    Ok(sample_triangulations(n, t, seed, 1, x0)?.remove(0))
}

/// Replica `r` equals `sample_triangulation` run on stream `r` of `seed`.
pub fn sample_triangulations(
    n: usize,
    t: usize,
    seed: u64,
    replicas: usize,
    x0: Option<&ParkingFunction>,
) -> Result<Vec<Triangulation>> {
    let start = check_start(n, x0)?;
    run_replicas(&start, t, seed, replicas)
        .iter()
        .map(|x| dyck_to_triangulation(&orbit_dyck_path(x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_forced() {
        for seed in 0..5 {
            let t = sample_triangulation(1, 10, seed, None).unwrap();
            assert!(t.diagonals().is_empty());
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = sample_triangulation(6, 20, 99, None).unwrap();
        let b = sample_triangulation(6, 20, 99, None).unwrap();
        assert_eq!(a, b);
        let batch = sample_triangulations(6, 20, 99, 3, None).unwrap();
        assert_eq!(batch[0], a);
    }

    #[test]
    fn labeled_chain_tracks_the_pf_chain() {
        let start = pf_to_labeled_dyck(&"4,1,3,4,1".parse().unwrap());
        let mut ld = LabeledDyckChain::new(&start, 5);
        let mut pf = ChainState::new("4,1,3,4,1".parse().unwrap(), 5);
        assert_eq!(ld.current(), start);
        for _ in 0..50 {
            assert_eq!(labeled_dyck_to_pf(&ld.step()), *pf.step());
        }
    }

    #[test]
    fn start_length_checked() {
        let x: ParkingFunction = "1,1".parse().unwrap();
        assert!(sample_triangulation(3, 1, 0, Some(&x)).is_err());
    }
}
