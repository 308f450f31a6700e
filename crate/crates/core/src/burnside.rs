//! The Burnside process on parking functions.
//!
//! One step from `x`: draw `sigma` uniformly from the stabilizer `G_x`, then
//! draw `y` uniformly from the parking functions fixed by `sigma`. The
//! stabilizer of a word under coordinate permutation is the Young subgroup of
//! its value partition, so the first draw is an independent shuffle of every
//! level set. The second draw assigns one uniform value in `[n+1]` to each
//! cycle of `sigma` and maps the resulting word to the unique parking
//! function in its global-shift orbit.
//!
//! The exact kernel and its lumped version over increasing parking functions
//! are computed in closed form with exact rationals.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::combinatorics::counting::{catalan, factorial, pow, rising_numerators};
use crate::combinatorics::enumerate::for_each_contingency_table;
use crate::combinatorics::pollak::pollak_shift;
use crate::combinatorics::word::density_of_entries;
use crate::combinatorics::{IncreasingParkingFunction, ParkingFunction, Permutation};
use crate::error::{invalid, Result};
use crate::rational::Rational;
use crate::rng::{replica_rng, seeded_rng, ChainRng};

/// `|G_x| = prod_a i_a(x)!`.
pub fn stabilizer_order(x: &ParkingFunction) -> BigUint {
    x.histogram().factorial_product()
}

/// Uniform element of `G_x`: an independent uniform shuffle of each level set.
pub fn sample_stabilizer<R: Rng + ?Sized>(x: &ParkingFunction, rng: &mut R) -> Permutation {
    sample_word_stabilizer(x.entries(), rng)
}

/// Uniform element of the stabilizer of any word under coordinate permutation.
pub fn sample_word_stabilizer<R: Rng + ?Sized>(entries: &[usize], rng: &mut R) -> Permutation {
    let mut scratch = Scratch::default();
    scratch.draw_stabilizer(entries, rng);
    Permutation::from_zero_based(scratch.images)
}

/// `|(PF_n)_sigma| = (n+1)^(l(sigma) - 1)`.
pub fn fixed_pf_count(sigma: &Permutation) -> BigUint {
    let n = sigma.degree();
    pow(n + 1, sigma.cycle_count() - 1)
}

/// Uniform parking function fixed by `sigma`.
pub fn sample_fixed_pf<R: Rng + ?Sized>(sigma: &Permutation, rng: &mut R) -> ParkingFunction {
    let mut scratch = Scratch::default();
    scratch.images.extend_from_slice(sigma.zero_based());
    let mut out = vec![0; sigma.degree()];
    scratch.draw_fixed_pf(&mut out, rng);
    ParkingFunction::new_unchecked(out)
}

/// One Burnside step from `x`.
pub fn burnside_step<R: Rng + ?Sized>(x: &ParkingFunction, rng: &mut R) -> ParkingFunction {
    let sigma = sample_stabilizer(x, rng);
    sample_fixed_pf(&sigma, rng)
}

/// Reusable buffers for the in-place step. Consumes randomness in the same
/// order as [`sample_stabilizer`] followed by [`sample_fixed_pf`].
#[derive(Debug, Default, Clone)]
pub(crate) struct Scratch {
    images: Vec<usize>,
    by_value: Vec<usize>,
    starts: Vec<usize>,
    block: Vec<usize>,
    seen: Vec<bool>,
    word: Vec<usize>,
    next_free: Vec<usize>,
}

impl Scratch {
    fn draw_stabilizer<R: Rng + ?Sized>(&mut self, entries: &[usize], rng: &mut R) {
        let n = entries.len();
        let k = entries.iter().copied().max().unwrap_or(0);
        // positions grouped by value, increasing within each group
        self.starts.clear();
        self.starts.resize(k + 2, 0);
        for &v in entries {
            self.starts[v + 1] += 1;
        }
        for a in 1..self.starts.len() {
            self.starts[a] += self.starts[a - 1];
        }
        self.by_value.clear();
        self.by_value.resize(n, 0);
        let mut fill = self.starts.clone();
        for (r, &v) in entries.iter().enumerate() {
            self.by_value[fill[v]] = r;
            fill[v] += 1;
        }
        self.images.clear();
        self.images.resize(n, 0);
        for a in 1..=k {
            let level = &self.by_value[self.starts[a]..self.starts[a + 1]];
            if level.is_empty() {
                continue;
            }
            self.block.clear();
            self.block.extend_from_slice(level);
            self.block.shuffle(rng);
            for (&from, &to) in level.iter().zip(&self.block) {
                self.images[from] = to;
            }
        }
    }

    /// Cycle-constant uniform word over `[k]`, written to `out`.
    fn draw_cycle_constant<R: Rng + ?Sized>(&mut self, k: usize, out: &mut [usize], rng: &mut R) {
        let n = self.images.len();
        self.seen.clear();
        self.seen.resize(n, false);
        for start in 0..n {
            if self.seen[start] {
                continue;
            }
            let value = rng.gen_range(1..=k);
            let mut i = start;
            while !self.seen[i] {
                self.seen[i] = true;
                out[i] = value;
                i = self.images[i];
            }
        }
    }

    fn draw_fixed_pf<R: Rng + ?Sized>(&mut self, out: &mut [usize], rng: &mut R) {
        let n = self.images.len();
        let k = n + 1;
        let mut word = std::mem::take(&mut self.word);
        word.clear();
        word.resize(n, 0);
        self.draw_cycle_constant(k, &mut word, rng);
        let c = pollak_shift(&word, &mut self.next_free);
        for (o, &a) in out.iter_mut().zip(&word) {
            *o = (a - 1 + c) % k + 1;
        }
        self.word = word;
    }

    pub(crate) fn step_pf<R: Rng + ?Sized>(&mut self, x: &mut [usize], rng: &mut R) {
        self.draw_stabilizer(x, rng);
        self.draw_fixed_pf(x, rng);
    }

    /// Bose-Einstein step on `[k]^n`: no shift correction.
    pub(crate) fn step_word<R: Rng + ?Sized>(&mut self, x: &mut [usize], k: usize, rng: &mut R) {
        self.draw_stabilizer(x, rng);
        self.draw_cycle_constant(k, x, rng);
    }
}

/// Closed-form kernel evaluator for a fixed `n`.
///
/// `K(x, y) = (n+1) / prod_a i_a(x)! * prod_{a,b} (1/(n+1))_(m_{a,b}(x,y))`.
/// Since the `m_{a,b}` sum to `n`, this is
/// `prod_{a,b} R(m_{a,b}) / ((n+1)^(n-1) prod_a i_a(x)!)` with
/// `R(m) = prod_{j<m} (1 + j(n+1))`.
#[derive(Debug, Clone)]
pub struct PfKernel {
    n: usize,
    rising: Vec<BigUint>,
    base_denominator: BigUint,
    factorials: Vec<BigUint>,
}

impl PfKernel {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "n must be at least 1");
        Self {
            n,
            rising: rising_numerators(n + 1, n),
            base_denominator: pow(n + 1, n - 1),
            factorials: (0..=n).map(factorial).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `K(x, y)`; panics if either argument has the wrong length.
    pub fn eval(&self, x: &[usize], y: &[usize]) -> Rational {
        assert!(x.len() == self.n && y.len() == self.n, "length mismatch");
        let dens = density_of_entries(x, y, self.n);
        let numer = dens
            .cells()
            .iter()
            .filter(|&&m| m > 1)
            .fold(BigUint::one(), |acc, &m| acc * &self.rising[m]);
        let mut denom = self.base_denominator.clone();
        for &c in dens.row_margins().iter() {
            if c > 1 {
                denom *= &self.factorials[c];
            }
        }
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    /// `pi(x) = prod_a i_a(x)! / (n! C_n)`.
    pub fn stationary(&self, x: &[usize]) -> Rational {
        let hist = crate::combinatorics::word::Histogram::of_entries(x, self.n);
        Rational::new(
            BigInt::from(hist.factorial_product()),
            BigInt::from(&self.factorials[self.n] * catalan(self.n)),
        )
    }

    /// `K̄(u, v) = (n+1) sum_M prod_{a,b} (1/m_{a,b}!) (1/(n+1))_(m_{a,b})`
    /// over contingency tables `M` with margins `hist(u)`, `hist(v)`.
    pub fn lumped(&self, u: &[usize], v: &[usize]) -> Rational {
        let n = self.n;
        let i = crate::combinatorics::word::Histogram::of_entries(u, n);
        let j = crate::combinatorics::word::Histogram::of_entries(v, n);
        // each term times n! is the integer prod R(m) * n! / prod m!
        let n_fact = &self.factorials[n];
        let mut total = BigUint::default();
        for_each_contingency_table(i.counts(), j.counts(), |cells| {
            let mut rising = BigUint::one();
            let mut fact = BigUint::one();
            for &m in cells.iter().filter(|&&m| m > 1) {
                rising *= &self.rising[m];
                fact *= &self.factorials[m];
            }
            total += rising * (n_fact / fact);
        })
        .expect("histograms of words of equal length have equal sums");
        Rational::new(BigInt::from(total), BigInt::from(&self.base_denominator * n_fact))
    }
}

fn same_length(x: &[usize], y: &[usize]) -> Result<()> {
    if x.len() != y.len() {
        return invalid(format!("length mismatch: {} vs {}", x.len(), y.len()));
    }
    Ok(())
}

/// Exact transition probability `K(x, y)`.
pub fn kernel(x: &ParkingFunction, y: &ParkingFunction) -> Result<Rational> {
    same_length(x.entries(), y.entries())?;
    Ok(PfKernel::new(x.len()).eval(x.entries(), y.entries()))
}

/// Exact stationary mass `pi(x)`.
pub fn stationary(x: &ParkingFunction) -> Rational {
    PfKernel::new(x.len()).stationary(x.entries())
}

/// Exact lumped transition probability between orbits, indexed by their
/// increasing representatives.
pub fn lumped_kernel(u: &IncreasingParkingFunction, v: &IncreasingParkingFunction) -> Result<Rational> {
    same_length(u.entries(), v.entries())?;
    Ok(PfKernel::new(u.len()).lumped(u.entries(), v.entries()))
}

/// A single-owner running chain.
#[derive(Debug, Clone)]
pub struct ChainState {
    current: ParkingFunction,
    step_count: u64,
    rng: ChainRng,
    scratch: Scratch,
}

impl ChainState {
    pub fn new(x0: ParkingFunction, seed: u64) -> Self {
        Self::with_rng(x0, seeded_rng(seed))
    }

    pub fn with_rng(x0: ParkingFunction, rng: ChainRng) -> Self {
        Self {
            current: x0,
            step_count: 0,
            rng,
            scratch: Scratch::default(),
        }
    }

    pub fn current(&self) -> &ParkingFunction {
        &self.current
    }

    pub fn step_count(&self) -> u64 {
        self.step_count
    }

    pub fn step(&mut self) -> &ParkingFunction {
        self.scratch.step_pf(self.current.entries_mut(), &mut self.rng);
        self.step_count += 1;
        &self.current
    }

    pub fn advance(&mut self, t: usize) -> &ParkingFunction {
        for _ in 0..t {
            self.step();
        }
        &self.current
    }

    pub fn into_current(self) -> ParkingFunction {
        self.current
    }
}

/// Result of [`run_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRun {
    pub final_state: ParkingFunction,
    /// `x_0, ..., x_t` when recording was requested.
    pub trajectory: Option<Vec<ParkingFunction>>,
}

/// Applies `t` Burnside steps to `x0`.
pub fn run_chain<R: Rng + ?Sized>(x0: &ParkingFunction, t: usize, rng: &mut R, record: bool) -> ChainRun {
    let mut scratch = Scratch::default();
    let mut x = x0.clone();
    let mut trajectory = record.then(|| {
        let mut v = Vec::with_capacity(t + 1);
        v.push(x0.clone());
        v
    });
    for _ in 0..t {
        scratch.step_pf(x.entries_mut(), rng);
        if let Some(tr) = trajectory.as_mut() {
            tr.push(x.clone());
        }
    }
    ChainRun {
        final_state: x,
        trajectory,
    }
}

/// Final states of `replicas` independent chains from `x0`, in replica order.
/// Replica `r` uses stream `r` of `seed`; the result does not depend on the
/// number of worker threads.
pub fn run_replicas(x0: &ParkingFunction, t: usize, seed: u64, replicas: usize) -> Vec<ParkingFunction> {
    (0..replicas)
        .into_par_iter()
        .map_init(Scratch::default, |scratch, r| {
            let mut rng = replica_rng(seed, r as u64);
            let mut x = x0.clone();
            for _ in 0..t {
                scratch.step_pf(x.entries_mut(), &mut rng);
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn pf(s: &str) -> ParkingFunction {
        s.parse().unwrap()
    }

    #[test]
    fn stabilizer_orders() {
        assert_eq!(stabilizer_order(&pf("1,1,3,4,4")), BigUint::from(4u32));
        assert_eq!(stabilizer_order(&ParkingFunction::identity(6)), BigUint::one());
        assert_eq!(stabilizer_order(&pf("1,1")), BigUint::from(2u32));
    }

    #[test]
    fn fixed_counts() {
        assert_eq!(fixed_pf_count(&Permutation::identity(3)), BigUint::from(16u32));
        assert_eq!(fixed_pf_count(&"2,1".parse().unwrap()), BigUint::one());
        let sigma = Permutation::from_cycles(5, &[&[1, 5, 3], &[2, 4]]).unwrap();
        assert_eq!(fixed_pf_count(&sigma), BigUint::from(6u32));
    }

    #[test]
    fn kernel_spot_values() {
        assert_eq!(kernel(&pf("1,1"), &pf("1,1")).unwrap(), ratio(2, 3));
        assert_eq!(kernel(&pf("1,1"), &pf("1,2")).unwrap(), ratio(1, 6));
        assert_eq!(kernel(&pf("1,1"), &pf("2,1")).unwrap(), ratio(1, 6));
        assert_eq!(kernel(&pf("1"), &pf("1")).unwrap(), ratio(1, 1));
        assert!(kernel(&pf("1"), &pf("1,1")).is_err());
    }

    #[test]
    fn stationary_spot_values() {
        assert_eq!(stationary(&pf("1,1")), ratio(1, 2));
        assert_eq!(stationary(&pf("1,2")), ratio(1, 4));
        assert_eq!(stationary(&pf("2,1")), ratio(1, 4));
        assert_eq!(stationary(&pf("1")), ratio(1, 1));
    }

    #[test]
    fn lumped_spot_values() {
        let u = |s: &str| s.parse::<IncreasingParkingFunction>().unwrap();
        assert_eq!(lumped_kernel(&u("1,1"), &u("1,2")).unwrap(), ratio(1, 3));
        assert_eq!(lumped_kernel(&u("1,2"), &u("1,2")).unwrap(), ratio(2, 3));
        assert_eq!(lumped_kernel(&u("1,1"), &u("1,1")).unwrap(), ratio(2, 3));
        assert_eq!(lumped_kernel(&u("1"), &u("1")).unwrap(), ratio(1, 1));
    }

    #[test]
    fn stabilizer_draws_fix_the_state() {
        let mut rng = seeded_rng(3);
        let x = pf("4,1,3,4,1");
        for _ in 0..10_000 {
            assert!(x.is_fixed_by(&sample_stabilizer(&x, &mut rng)));
        }
        let x = pf("1,2");
        for _ in 0..100 {
            assert!(sample_stabilizer(&x, &mut rng).is_identity());
        }
    }

    #[test]
    fn fixed_pf_draws_are_fixed() {
        let mut rng = seeded_rng(5);
        let all: Vec<Permutation> = Permutation::all(6).collect();
        for i in 0..10_000 {
            let sigma = &all[rng.gen_range(0..all.len())];
            let y = sample_fixed_pf(sigma, &mut rng);
            assert!(y.is_fixed_by(sigma), "draw {i}");
        }
        let swap: Permutation = "2,1".parse().unwrap();
        for _ in 0..100 {
            assert_eq!(sample_fixed_pf(&swap, &mut rng), pf("1,1"));
        }
    }

    #[test]
    fn in_place_step_matches_composed_samplers() {
        let x0 = pf("4,1,3,4,1");
        let mut a = seeded_rng(11);
        let mut b = seeded_rng(11);
        let mut x = x0.clone();
        let mut scratch = Scratch::default();
        let mut y = x0.into_entries();
        for _ in 0..200 {
            x = burnside_step(&x, &mut a);
            scratch.step_pf(&mut y, &mut b);
            assert_eq!(x.entries(), &y[..]);
        }
    }

    #[test]
    fn singleton_chain() {
        let mut rng = seeded_rng(1);
        for _ in 0..10 {
            assert_eq!(burnside_step(&pf("1"), &mut rng), pf("1"));
        }
    }

    #[test]
    fn run_chain_basics() {
        let x0 = ParkingFunction::identity(5);
        let run = run_chain(&x0, 0, &mut seeded_rng(1), true);
        assert_eq!(run.final_state, x0);
        assert_eq!(run.trajectory.unwrap(), vec![x0.clone()]);
        let a = run_chain(&x0, 25, &mut seeded_rng(9), true);
        let b = run_chain(&x0, 25, &mut seeded_rng(9), false);
        assert_eq!(a.final_state, b.final_state);
        assert_eq!(a.trajectory.as_ref().unwrap().len(), 26);
        assert!(b.trajectory.is_none());
        let mut state = ChainState::new(x0.clone(), 9);
        state.advance(25);
        assert_eq!(state.current(), &a.final_state);
        assert_eq!(state.step_count(), 25);
    }

    #[test]
    fn replicas_match_single_runs() {
        let x0 = ParkingFunction::identity(4);
        let batch = run_replicas(&x0, 12, 77, 8);
        for (r, x) in batch.iter().enumerate() {
            let single = run_chain(&x0, 12, &mut replica_rng(77, r as u64), false);
            assert_eq!(&single.final_state, x);
        }
    }
}
