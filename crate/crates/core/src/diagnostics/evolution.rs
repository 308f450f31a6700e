//! Exact `t`-step distributions and distances to stationarity.
//!
//! A Burnside kernel factors through the group: `K = A B` with
//! `A(x, g) = 1/|G_x|` for `g` in `G_x` and `B(g, y) = 1/|X_g|` for `y` in
//! `X_g`. Pushing a vector through `A` then `B` touches
//! `sum_x |G_x| + sum_g |X_g| = 2 n! z` entries (`z` orbits) per step instead
//! of `|X|^2`, which is what makes exact curves at `n = 5` cheap. Vectors are
//! kept as nonnegative integer numerators over one common denominator.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::distribution::{DistributionVector, StateSpace};
use crate::burnside::PfKernel;
use crate::combinatorics::counting::factorial;
use crate::combinatorics::{IncreasingParkingFunction, ParkingFunction, Permutation};
use crate::error::{invalid, Error, Result};
use crate::rational::Rational;

/// Largest `n` for exact evolution on all of `PF_n`.
pub const FULL_EXACT_CAP: usize = 5;
/// Largest `n` for exact evolution of the lumped chain on `IPF_n`.
pub const LUMPED_EXACT_CAP: usize = 8;
const WORD_SPACE_CAP: usize = 20_000;

/// A probability vector `numer / denom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactVector {
    numer: Vec<BigUint>,
    denom: BigUint,
}

impl ExactVector {
    fn point_mass(len: usize, i: usize) -> Self {
        let mut numer = vec![BigUint::zero(); len];
        numer[i] = BigUint::one();
        Self {
            numer,
            denom: BigUint::one(),
        }
    }

    pub fn mass(&self, i: usize) -> Rational {
        Rational::new(BigInt::from(self.numer[i].clone()), BigInt::from(self.denom.clone()))
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        (0..self.numer.len()).map(|i| self.mass(i)).collect()
    }

    /// Divides numerators and denominator by their common gcd.
    pub fn reduce(&mut self) {
        let mut g = self.denom.clone();
        for x in &self.numer {
            if g.is_one() {
                return;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if !g.is_one() {
            self.numer.iter_mut().for_each(|x| *x /= &g);
            self.denom /= &g;
        }
    }
}

/// Exact Burnside chain on an `S_n`-invariant set of words, evaluated
/// through the group factorization.
#[derive(Debug, Clone)]
pub struct FactoredChain {
    space: Arc<StateSpace>,
    /// per state: indices of the group elements fixing it
    stabilizers: Vec<Vec<u32>>,
    /// per group element: indices of the states it fixes
    fixed_sets: Vec<Vec<u32>>,
    /// per state: n! / |G_x|
    stab_weight: Vec<u64>,
    /// per group element: L / |X_g| with L = max_g |X_g|
    fixed_weight: Vec<u64>,
    step_denom: BigUint,
    /// n! times the number of orbits; pi(y) = |G_y| / this
    stationary_denom: u64,
    orbit_reps: Vec<usize>,
}

impl FactoredChain {
    /// The parking-function chain on all of `PF_n`, `n <= 5`.
    pub fn parking(n: usize) -> Result<Self> {
        if n > FULL_EXACT_CAP {
            return Err(Error::ResourceLimit {
                what: "exact evolution on PF_n",
                n,
                cap: FULL_EXACT_CAP,
            });
        }
        Ok(Self::new(StateSpace::parking_functions(n)?))
    }

    /// The Bose-Einstein chain on `[k]^n`.
    pub fn bose_einstein(n: usize, k: usize) -> Result<Self> {
        match k.checked_pow(n as u32) {
            Some(size) if size <= WORD_SPACE_CAP && n >= 1 => Ok(Self::new(StateSpace::words(n, k))),
            _ => invalid(format!("[{k}]^{n} is too large for exact evolution")),
        }
    }

    fn new(space: Arc<StateSpace>) -> Self {
        let n = space.n();
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let mut stabilizers = vec![Vec::new(); space.len()];
        let mut fixed_sets = vec![Vec::new(); perms.len()];
        for (xi, x) in space.states().iter().enumerate() {
            for (gi, g) in perms.iter().enumerate() {
                if g.fixes(x) {
                    stabilizers[xi].push(gi as u32);
                    fixed_sets[gi].push(xi as u32);
                }
            }
        }
        let n_fact = factorial(n);
        let n_fact_u64: u64 = (&n_fact).try_into().expect("n! fits in u64");
        let largest = fixed_sets.iter().map(Vec::len).max().unwrap_or(1) as u64;
        let stab_weight = stabilizers.iter().map(|s| n_fact_u64 / s.len() as u64).collect();
        let fixed_weight = fixed_sets
            .iter()
            .map(|f| {
                let size = f.len() as u64;
                assert_eq!(largest % size, 0, "fixed-set sizes must divide the largest");
                largest / size
            })
            .collect();
        let orbit_keys: HashSet<Vec<usize>> = space
            .states()
            .iter()
            .map(|s| {
                let mut k = s.clone();
                k.sort_unstable();
                k
            })
            .collect();
        let orbit_reps = space
            .states()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.windows(2).all(|w| w[0] <= w[1]))
            .map(|(i, _)| i)
            .collect();
        Self {
            stationary_denom: n_fact_u64 * orbit_keys.len() as u64,
            space,
            stabilizers,
            fixed_sets,
            stab_weight,
            fixed_weight,
            step_denom: n_fact * largest,
            orbit_reps,
        }
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    /// Indices of the weakly increasing states, one per orbit.
    pub fn orbit_representatives(&self) -> &[usize] {
        &self.orbit_reps
    }

    pub fn point_mass(&self, i: usize) -> ExactVector {
        ExactVector::point_mass(self.space.len(), i)
    }

    /// `v K`.
    pub fn step(&self, v: &ExactVector) -> ExactVector {
        let weighted: Vec<BigUint> = v
            .numer
            .iter()
            .zip(&self.stab_weight)
            .map(|(x, &w)| if x.is_zero() { BigUint::zero() } else { x * w })
            .collect();
        let through_group: Vec<BigUint> = self
            .fixed_sets
            .iter()
            .zip(&self.fixed_weight)
            .map(|(fixed, &w)| {
                let s = fixed
                    .iter()
                    .fold(BigUint::zero(), |acc, &x| acc + &weighted[x as usize]);
                s * w
            })
            .collect();
        let numer = self
            .stabilizers
            .iter()
            .map(|stab| {
                stab.iter()
                    .fold(BigUint::zero(), |acc, &g| acc + &through_group[g as usize])
            })
            .collect();
        ExactVector {
            numer,
            denom: &v.denom * &self.step_denom,
        }
    }

    pub fn stationary_mass(&self, i: usize) -> Rational {
        Rational::new(
            BigInt::from(self.stabilizers[i].len()),
            BigInt::from(self.stationary_denom),
        )
    }

    pub fn stationary(&self) -> DistributionVector {
        let masses = (0..self.space.len()).map(|i| self.stationary_mass(i)).collect();
        DistributionVector::exact_unchecked(self.space.clone(), masses)
    }

    /// `|| v - pi ||_TV`, exactly.
    pub fn tv_to_stationary(&self, v: &ExactVector) -> Rational {
        let scale = BigInt::from(self.stationary_denom);
        let denom = BigInt::from(v.denom.clone());
        let total = v
            .numer
            .iter()
            .zip(&self.stabilizers)
            .fold(BigInt::zero(), |acc, (x, stab)| {
                let d = BigInt::from(x.clone()) * &scale - &denom * stab.len() as u64;
                acc + d.abs()
            });
        Rational::new(total, denom * scale * 2u32)
    }

    pub fn to_distribution(&self, v: &ExactVector) -> DistributionVector {
        DistributionVector::exact_unchecked(self.space.clone(), v.to_rationals())
    }

    pub fn evolve(&self, start: usize, t: usize) -> ExactVector {
        let mut v = self.point_mass(start);
        for _ in 0..t {
            v = self.step(&v);
        }
        v.reduce();
        v
    }

    /// `|| K^t(x, ·) - pi ||_TV` for `t = 0..=t_max`.
    pub fn tv_curve_from(&self, start: usize, t_max: usize) -> Vec<Rational> {
        let mut v = self.point_mass(start);
        let mut out = Vec::with_capacity(t_max + 1);
        out.push(self.tv_to_stationary(&v));
        for _ in 0..t_max {
            v = self.step(&v);
            out.push(self.tv_to_stationary(&v));
        }
        out
    }

    /// `d(t)` for `t = 0..=t_max`. The kernel commutes with the `S_n`
    /// action and `pi` is invariant, so the distance from `sigma x` equals
    /// the distance from `x`; one start per orbit suffices.
    pub fn worst_case_curve(&self, t_max: usize) -> Vec<Rational> {
        let curves: Vec<Vec<Rational>> = self
            .orbit_reps
            .par_iter()
            .map(|&i| self.tv_curve_from(i, t_max))
            .collect();
        (0..=t_max)
            .map(|t| {
                curves
                    .iter()
                    .map(|c| &c[t])
                    .max()
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect()
    }
}

/// Exact `K^t(x0, ·)` on `PF_n`, `n <= 5`.
pub fn exact_distribution_at_time(x0: &ParkingFunction, t: usize) -> Result<DistributionVector> {
    let chain = FactoredChain::parking(x0.len())?;
    let start = chain.space().index_of(x0.entries()).expect("valid parking function is enumerated");
    let v = chain.evolve(start, t);
    Ok(chain.to_distribution(&v))
}

/// `d(t) = max_x || K^t(x, ·) - pi ||_TV`, exactly, `n <= 5`.
pub fn worst_case_tv(n: usize, t: usize) -> Result<Rational> {
    Ok(worst_case_tv_curve(n, t)?.pop().expect("curve has t_max + 1 points"))
}

/// `d(0), ..., d(t_max)`.
pub fn worst_case_tv_curve(n: usize, t_max: usize) -> Result<Vec<Rational>> {
    Ok(FactoredChain::parking(n)?.worst_case_curve(t_max))
}

/// The lumped chain on `IPF_n` as a dense integer matrix over one
/// denominator, built from the contingency-table formula.
#[derive(Debug, Clone)]
pub struct LumpedChain {
    space: Arc<StateSpace>,
    numer: Vec<Vec<BigUint>>,
    denom: BigUint,
}

impl LumpedChain {
    pub fn new(n: usize) -> Result<Self> {
        if n > LUMPED_EXACT_CAP {
            return Err(Error::ResourceLimit {
                what: "exact lumped evolution",
                n,
                cap: LUMPED_EXACT_CAP,
            });
        }
        let space = StateSpace::increasing_parking_functions(n)?;
        let kernel = PfKernel::new(n);
        // every entry has denominator dividing (n+1)^(n-1) n!
        let denom = crate::combinatorics::counting::pow(n + 1, n - 1) * factorial(n);
        let denom_int = BigInt::from(denom.clone());
        let numer = space
            .states()
            .par_iter()
            .map(|u| {
                space
                    .states()
                    .iter()
                    .map(|v| {
                        let p = kernel.lumped(u, v);
                        let scaled = p * Rational::from_integer(denom_int.clone());
                        assert!(scaled.is_integer(), "lumped kernel denominator");
                        scaled.to_integer().to_biguint().expect("nonnegative")
                    })
                    .collect()
            })
            .collect();
        Ok(Self { space, numer, denom })
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        &self.space
    }

    pub fn entry(&self, u: usize, v: usize) -> Rational {
        Rational::new(BigInt::from(self.numer[u][v].clone()), BigInt::from(self.denom.clone()))
    }

    pub fn point_mass(&self, i: usize) -> ExactVector {
        ExactVector::point_mass(self.space.len(), i)
    }

    pub fn from_distribution(&self, p: &DistributionVector) -> Result<ExactVector> {
        let Some(masses) = p.exact_masses() else {
            return invalid("lumped evolution needs an exact distribution");
        };
        if **p.space() != *self.space {
            return invalid("distribution is not over IPF_n");
        }
        let denom = masses
            .iter()
            .fold(BigInt::one(), |acc, m| acc.lcm(m.denom()));
        let numer = masses
            .iter()
            .map(|m| (m.numer() * (&denom / m.denom())).to_biguint().expect("nonnegative"))
            .collect();
        Ok(ExactVector {
            numer,
            denom: denom.to_biguint().expect("positive"),
        })
    }

    pub fn step(&self, v: &ExactVector) -> ExactVector {
        let len = self.space.len();
        let mut out = vec![BigUint::zero(); len];
        for (u, x) in v.numer.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, k) in out.iter_mut().zip(&self.numer[u]) {
                *o += x * k;
            }
        }
        let mut next = ExactVector {
            numer: out,
            denom: &v.denom * &self.denom,
        };
        next.reduce();
        next
    }

    /// TV to the uniform distribution `1/C_n`.
    pub fn tv_to_uniform(&self, v: &ExactVector) -> Rational {
        let c = BigInt::from(self.space.len());
        let denom = BigInt::from(v.denom.clone());
        let total = v.numer.iter().fold(BigInt::zero(), |acc, x| {
            acc + (BigInt::from(x.clone()) * &c - &denom).abs()
        });
        Rational::new(total, denom * c * 2u32)
    }

    pub fn to_distribution(&self, v: &ExactVector) -> DistributionVector {
        DistributionVector::exact_unchecked(self.space.clone(), v.to_rationals())
    }
}

/// Exact lumped distribution after `t` steps from the orbit of `u0`, `n <= 8`.
pub fn exact_lumped_distribution_at_time(u0: &IncreasingParkingFunction, t: usize) -> Result<DistributionVector> {
    let chain = LumpedChain::new(u0.len())?;
    let start = chain.space().index_of(u0.entries()).expect("valid increasing parking function is enumerated");
    let mut v = chain.point_mass(start);
    for _ in 0..t {
        v = chain.step(&v);
    }
    Ok(chain.to_distribution(&v))
}
