//! Probability vectors over an enumerated state space.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::combinatorics::{enumerate_ipf, enumerate_pf, enumerate_words};
use crate::error::{invalid, Result};
use crate::rational::{abs_diff, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    ParkingFunctions,
    IncreasingParkingFunctions,
    Words { k: usize },
}

/// A fixed, ordered list of states with a reverse index.
#[derive(Debug, Clone)]
pub struct StateSpace {
    kind: SpaceKind,
    n: usize,
    states: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl PartialEq for StateSpace {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.n == other.n && self.states == other.states
    }
}

impl StateSpace {
    fn from_states(kind: SpaceKind, n: usize, states: Vec<Vec<usize>>) -> Arc<Self> {
        let index = states.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Arc::new(Self { kind, n, states, index })
    }

    /// `PF_n` in lexicographic order.
    pub fn parking_functions(n: usize) -> Result<Arc<Self>> {
        let states = enumerate_pf(n)?.into_iter().map(|x| x.into_entries()).collect();
        Ok(Self::from_states(SpaceKind::ParkingFunctions, n, states))
    }

    /// `IPF_n` in lexicographic order.
    pub fn increasing_parking_functions(n: usize) -> Result<Arc<Self>> {
        let states = enumerate_ipf(n)?
            .into_iter()
            .map(|u| u.into_parking_function().into_entries())
            .collect();
        Ok(Self::from_states(SpaceKind::IncreasingParkingFunctions, n, states))
    }

    /// `[k]^n` in lexicographic order.
    pub fn words(n: usize, k: usize) -> Arc<Self> {
        Self::from_states(SpaceKind::Words { k }, n, enumerate_words(n, k))
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[Vec<usize>] {
        &self.states
    }

    pub fn index_of(&self, state: &[usize]) -> Option<usize> {
        self.index.get(state).copied()
    }
}

/// A distance or mass that is exact when every input was exact.
#[derive(Debug, Clone, PartialEq)]
pub enum Distance {
    Exact(Rational),
    Approx(f64),
}

impl Distance {
    pub fn to_f64(&self) -> f64 {
        match self {
            Distance::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Distance::Approx(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Distance::Exact(r) => Some(r),
            Distance::Approx(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Masses {
    Exact(Vec<Rational>),
    Empirical(Vec<f64>),
}

/// Masses over a [`StateSpace`], exact or empirical.
#[derive(Debug, Clone)]
pub struct DistributionVector {
    space: Arc<StateSpace>,
    masses: Masses,
}

const EMPIRICAL_SUM_TOLERANCE: f64 = 1e-12;

impl DistributionVector {
    /// Exact masses; must be nonnegative and sum to exactly one.
    pub fn exact(space: Arc<StateSpace>, masses: Vec<Rational>) -> Result<Self> {
        if masses.len() != space.len() {
            return invalid(format!("{} masses for {} states", masses.len(), space.len()));
        }
        if masses.iter().any(|m| m.is_negative()) {
            return invalid("negative mass");
        }
        let total = crate::rational::sum(&masses);
        if !crate::rational::is_one(&total) {
            return invalid(format!("masses sum to {total}"));
        }
        Ok(Self {
            space,
            masses: Masses::Exact(masses),
        })
    }

    /// Floating masses; must be nonnegative and sum to one within 1e-12.
    pub fn empirical(space: Arc<StateSpace>, masses: Vec<f64>) -> Result<Self> {
        if masses.len() != space.len() {
            return invalid(format!("{} masses for {} states", masses.len(), space.len()));
        }
        if masses.iter().any(|m| m.is_nan() || *m < 0.0) {
            return invalid("negative or NaN mass");
        }
        let total: f64 = masses.iter().sum();
        if (total - 1.0).abs() > EMPIRICAL_SUM_TOLERANCE {
            return invalid(format!("masses sum to {total}"));
        }
        Ok(Self {
            space,
            masses: Masses::Empirical(masses),
        })
    }

    pub(crate) fn exact_unchecked(space: Arc<StateSpace>, masses: Vec<Rational>) -> Self {
        Self {
            space,
            masses: Masses::Exact(masses),
        }
    }

    pub fn point_mass(space: Arc<StateSpace>, state: &[usize]) -> Result<Self> {
        let Some(i) = space.index_of(state) else {
            return invalid("state not in space");
        };
        let mut masses = vec![Rational::zero(); space.len()];
        masses[i] = Rational::from_integer(1.into());
        Ok(Self::exact_unchecked(space, masses))
    }

    pub fn uniform(space: Arc<StateSpace>) -> Self {
        let m = Rational::new(1.into(), space.len().into());
        let masses = vec![m; space.len()];
        Self::exact_unchecked(space, masses)
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn masses(&self) -> &Masses {
        &self.masses
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.masses, Masses::Exact(_))
    }

    pub fn exact_masses(&self) -> Option<&[Rational]> {
        match &self.masses {
            Masses::Exact(m) => Some(m),
            Masses::Empirical(_) => None,
        }
    }

    pub fn mass_f64(&self, i: usize) -> f64 {
        match &self.masses {
            Masses::Exact(m) => m[i].to_f64().unwrap_or(f64::NAN),
            Masses::Empirical(m) => m[i],
        }
    }

    pub fn total(&self) -> Distance {
        match &self.masses {
            Masses::Exact(m) => Distance::Exact(crate::rational::sum(m)),
            Masses::Empirical(m) => Distance::Approx(m.iter().sum()),
        }
    }

    /// Pushes mass forward along `state ↦ sorted(state)` onto `orbits`.
    pub fn lump(&self, orbits: Arc<StateSpace>) -> Result<Self> {
        let mut target = Vec::with_capacity(self.space.len());
        for s in self.space.states() {
            let mut key = s.clone();
            key.sort_unstable();
            match orbits.index_of(&key) {
                Some(i) => target.push(i),
                None => return invalid("orbit space does not contain every sorted state"),
            }
        }
        Ok(match &self.masses {
            Masses::Exact(m) => {
                let mut out = vec![Rational::zero(); orbits.len()];
                for (mass, &i) in m.iter().zip(&target) {
                    out[i] += mass;
                }
                Self::exact_unchecked(orbits, out)
            }
            Masses::Empirical(m) => {
                let mut out = vec![0.0; orbits.len()];
                for (mass, &i) in m.iter().zip(&target) {
                    out[i] += mass;
                }
                Self {
                    space: orbits,
                    masses: Masses::Empirical(out),
                }
            }
        })
    }
}

/// Half the L1 distance. Exact when both inputs are exact.
pub fn total_variation(p: &DistributionVector, q: &DistributionVector) -> Result<Distance> {
    if !Arc::ptr_eq(&p.space, &q.space) && *p.space != *q.space {
        return invalid("distributions live on different state spaces");
    }
    Ok(match (&p.masses, &q.masses) {
        (Masses::Exact(a), Masses::Exact(b)) => {
            let total = a
                .iter()
                .zip(b)
                .fold(Rational::zero(), |acc, (x, y)| acc + abs_diff(x, y));
            Distance::Exact(total / Rational::from_integer(2.into()))
        }
        _ => {
            let total: f64 = (0..p.space.len()).map(|i| (p.mass_f64(i) - q.mass_f64(i)).abs()).sum();
            Distance::Approx(total / 2.0)
        }
    })
}
