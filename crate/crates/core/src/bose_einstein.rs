//! The Bose-Einstein Burnside chain: `S_n` permuting coordinates of `[k]^n`.
//!
//! At `k = n + 1` the parking-function chain is its quotient by global
//! cyclic shifts, with `K = (n+1) K^BE` on parking functions.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::Rng;

use crate::burnside::Scratch;
use crate::combinatorics::counting::{binomial, factorial, pow, rising_numerators};
use crate::combinatorics::pollak::shift_entries;
use crate::combinatorics::word::{density_of_entries, Histogram};
use crate::combinatorics::{Permutation, Word};
use crate::error::{invalid, Result};
use crate::rational::Rational;

/// A state of the Bose-Einstein chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BEState {
    word: Word,
}

impl BEState {
    pub fn new(word: Word) -> Result<Self> {
        if word.alphabet() < 1 {
            return invalid("alphabet must be nonempty");
        }
        Ok(Self { word })
    }

    /// A state over the default alphabet `[n+1]`.
    pub fn with_default_alphabet(entries: Vec<usize>) -> Result<Self> {
        let k = entries.len() + 1;
        Self::new(Word::new(entries, k)?)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn k(&self) -> usize {
        self.word.alphabet()
    }
}

/// An element of `Z_k` acting by global shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftElement {
    c: usize,
    k: usize,
}

impl ShiftElement {
    pub fn new(c: usize, k: usize) -> Result<Self> {
        if c >= k {
            return invalid(format!("shift {c} outside Z_{k}"));
        }
        Ok(Self { c, k })
    }

    pub fn value(&self) -> usize {
        self.c
    }

    pub fn modulus(&self) -> usize {
        self.k
    }

    pub fn inverse(&self) -> Self {
        Self {
            c: (self.k - self.c) % self.k,
            k: self.k,
        }
    }
}

/// `c · x = (x_1 + c, ..., x_n + c)` in `Z_k`.
pub fn shift(x: &Word, c: ShiftElement) -> Result<Word> {
    if x.alphabet() != c.k {
        return invalid(format!("word over [{}] shifted in Z_{}", x.alphabet(), c.k));
    }
    Word::new(shift_entries(x.entries(), c.c, c.k), c.k)
}

/// The global-shift orbit `[x]_H`, listed as `0 · x, 1 · x, ...`.
pub fn shift_orbit(x: &Word) -> Vec<Word> {
    let k = x.alphabet();
    (0..k)
        .map(|c| Word::new(shift_entries(x.entries(), c, k), k).expect("shift preserves the alphabet"))
        .collect()
}

/// `|([k]^n)_sigma| = k^l(sigma)`.
pub fn be_fixed_count(sigma: &Permutation, k: usize) -> BigUint {
    pow(k, sigma.cycle_count())
}

/// Number of `S_n`-orbits on `[k]^n`: weak compositions of `n` into `k` parts.
pub fn be_orbit_count(n: usize, k: usize) -> BigUint {
    if k == 0 {
        return BigUint::from((n == 0) as u32);
    }
    binomial(n + k - 1, k - 1)
}

/// One step: uniform stabilizer element, then a uniform cycle-constant word.
pub fn be_step<R: Rng + ?Sized>(x: &BEState, rng: &mut R) -> BEState {
    let mut entries = x.word.entries().to_vec();
    Scratch::default().step_word(&mut entries, x.k(), rng);
    BEState {
        word: Word::new(entries, x.k()).expect("step stays in [k]^n"),
    }
}

/// Closed-form Bose-Einstein kernel for fixed `n` and `k`:
/// `K^BE(x, y) = prod_{a,b} (1/k)_(m_{a,b}) / prod_a i_a(x)!`.
#[derive(Debug, Clone)]
pub struct BeKernel {
    n: usize,
    k: usize,
    rising: Vec<BigUint>,
    k_pow_n: BigUint,
    factorials: Vec<BigUint>,
    orbit_count: BigUint,
}

impl BeKernel {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            rising: rising_numerators(k, n),
            k_pow_n: pow(k, n),
            factorials: (0..=n).map(factorial).collect(),
            orbit_count: be_orbit_count(n, k),
        }
    }

    pub fn eval(&self, x: &[usize], y: &[usize]) -> Rational {
        assert!(x.len() == self.n && y.len() == self.n, "length mismatch");
        let dens = density_of_entries(x, y, self.k);
        let numer = dens
            .cells()
            .iter()
            .filter(|&&m| m > 1)
            .fold(BigUint::one(), |acc, &m| acc * &self.rising[m]);
        let denom = dens
            .row_margins()
            .iter()
            .filter(|&&c| c > 1)
            .fold(self.k_pow_n.clone(), |acc, &c| acc * &self.factorials[c]);
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    /// `pi^BE(y) = |G_y| / (n! |Comp_{n,k}|)`.
    pub fn stationary(&self, y: &[usize]) -> Rational {
        let g = Histogram::of_entries(y, self.k).factorial_product();
        Rational::new(
            BigInt::from(g),
            BigInt::from(&self.factorials[self.n] * &self.orbit_count),
        )
    }
}

fn check_pair(x: &Word, y: &Word, k: usize) -> Result<()> {
    if x.len() != y.len() {
        return invalid(format!("length mismatch: {} vs {}", x.len(), y.len()));
    }
    if x.entries().iter().chain(y.entries()).any(|&v| v > k) {
        return invalid(format!("entries outside [{k}]"));
    }
    Ok(())
}

/// Exact `K^BE_k(x, y)`.
pub fn be_kernel(x: &Word, y: &Word, k: usize) -> Result<Rational> {
    check_pair(x, y, k)?;
    Ok(BeKernel::new(x.len(), k).eval(x.entries(), y.entries()))
}

/// Exact `pi^BE_k(y)`.
pub fn be_stationary(y: &Word, k: usize) -> Result<Rational> {
    check_pair(y, y, k)?;
    Ok(BeKernel::new(y.len(), k).stationary(y.entries()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::rng::seeded_rng;

    fn w(s: &str, k: usize) -> Word {
        Word::parse(s, k).unwrap()
    }

    #[test]
    fn fixed_counts() {
        assert_eq!(be_fixed_count(&Permutation::identity(3), 4), BigUint::from(64u32));
        assert_eq!(be_fixed_count(&"2,1".parse().unwrap(), 3), BigUint::from(3u32));
        let sigma = Permutation::from_cycles(5, &[&[1, 5, 3], &[2, 4]]).unwrap();
        assert_eq!(be_fixed_count(&sigma, 6), BigUint::from(36u32));
    }

    #[test]
    fn kernel_spot_values() {
        assert_eq!(be_kernel(&w("1,1", 3), &w("1,1", 3), 3).unwrap(), ratio(2, 9));
        assert_eq!(be_kernel(&w("1,1", 3), &w("1,2", 3), 3).unwrap(), ratio(1, 18));
        assert_eq!(be_kernel(&w("1", 2), &w("2", 2), 2).unwrap(), ratio(1, 2));
        assert!(be_kernel(&w("1", 2), &w("1,2", 2), 2).is_err());
    }

    #[test]
    fn shift_examples() {
        let k = 3;
        assert_eq!(shift(&w("3,3", k), ShiftElement::new(1, k).unwrap()).unwrap(), w("1,1", k));
        let x = w("2,3,1", k);
        assert_eq!(shift(&x, ShiftElement::new(0, k).unwrap()).unwrap(), x);
        for c in 0..k {
            let g = ShiftElement::new(c, k).unwrap();
            assert_eq!(shift(&shift(&x, g).unwrap(), g.inverse()).unwrap(), x);
        }
        assert!(ShiftElement::new(3, 3).is_err());
        assert_eq!(shift_orbit(&x).len(), 3);
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(be_orbit_count(2, 3), BigUint::from(6u32));
        assert_eq!(be_orbit_count(5, 6), BigUint::from(252u32));
        assert_eq!(be_orbit_count(5, 1), BigUint::one());
    }

    #[test]
    fn step_stays_in_alphabet() {
        let mut rng = seeded_rng(2);
        let mut x = BEState::with_default_alphabet(vec![1, 1, 4, 2]).unwrap();
        for _ in 0..1000 {
            x = be_step(&x, &mut rng);
            assert!(x.word().entries().iter().all(|&v| (1..=5).contains(&v)));
        }
    }

    #[test]
    fn single_coordinate_redraws_uniformly() {
        let mut rng = seeded_rng(4);
        let x = BEState::new(w("2", 2)).unwrap();
        let ones = (0..20_000).filter(|_| be_step(&x, &mut rng).word().entries() == [1]).count();
        assert!((ones as f64 / 20_000.0 - 0.5).abs() < 0.02);
    }
}
