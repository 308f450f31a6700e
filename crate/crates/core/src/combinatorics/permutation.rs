//! Permutations of `[n]` with cycle access and the coordinate action on words.

use std::fmt;
use std::str::FromStr;

use super::word::{format_entries, parse_entries};
use crate::error::{invalid, Error, Result};

/// A bijection of `[n]`. Stored 0-based; every public method speaks 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from one-line notation `(sigma(1), ..., sigma(n))`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return invalid(format!("{} is not a permutation", format_entries(&images)));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|v| v - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds from disjoint cycles on `[n]`, e.g. `&[&[1, 5, 3], &[2, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return invalid(format!("bad cycle element {a}"));
                }
                touched[a - 1] = true;
                let b = cycle[(i + 1) % cycle.len()];
                if b == 0 || b > n {
                    return invalid(format!("bad cycle element {b}"));
                }
                images[a - 1] = b - 1;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycles in 1-based form, each starting at its smallest element,
    /// ordered by that element. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles `l(sigma)`, fixed points included; 0 on `S_0`.
    pub fn cycle_count(&self) -> usize {
        cycle_count_of(&self.images, &mut vec![false; self.images.len()])
    }

    /// The coordinate action `(sigma x)_{sigma(i)} = x_i`,
    /// i.e. `sigma x = (x_{sigma^{-1}(1)}, ..., x_{sigma^{-1}(n)})`.
    pub fn act_on<T: Clone>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.images.len(), "length mismatch");
        let mut out = x.to_vec();
        for (i, &v) in self.images.iter().enumerate() {
            out[v] = x[i].clone();
        }
        out
    }

    /// Whether `sigma x = x`, i.e. `x` is constant on every cycle.
    pub fn fixes<T: PartialEq>(&self, x: &[T]) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| x[i] == x[v])
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }
}

pub(crate) fn cycle_count_of(images: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut count = 0;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = images[i];
        }
    }
    count
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        let n = succ.len();
        if n > 1 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation::from_zero_based(current))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.images()))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_entries(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_sigma() -> Permutation {
        Permutation::from_cycles(5, &[&[1, 5, 3], &[2, 4]]).unwrap()
    }

    #[test]
    fn one_line_notation() {
        let s = example_sigma();
        assert_eq!(s.to_string(), "5,4,1,2,3");
        assert_eq!("5,4,1,2,3".parse::<Permutation>().unwrap(), s);
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(Permutation::identity(5).cycle_count(), 5);
        assert_eq!(example_sigma().cycle_count(), 2);
        assert_eq!("2,1".parse::<Permutation>().unwrap().cycle_count(), 1);
        assert_eq!(Permutation::identity(0).cycle_count(), 0);
        assert_eq!(example_sigma().cycles(), vec![vec![1, 5, 3], vec![2, 4]]);
    }

    #[test]
    fn coordinate_action_worked_example() {
        let x = [4, 1, 3, 4, 1];
        assert_eq!(example_sigma().act_on(&x), vec![3, 4, 1, 1, 4]);
    }

    #[test]
    fn action_is_a_left_action() {
        let all: Vec<_> = Permutation::all(4).collect();
        let x = [1, 2, 2, 3];
        for s in &all {
            for t in all.iter().step_by(5) {
                assert_eq!(s.compose(t).act_on(&x), s.act_on(&t.act_on(&x)));
            }
            assert!(s.compose(&s.inverse()).is_identity());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
        let v: Vec<_> = Permutation::all(5).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
