//! Brute-force reference implementations.
//!
//! Everything here works from definitions by exhaustive enumeration (group
//! elements, words, matrices) and shares no code path with the closed forms
//! it is used to check. Only suitable for tiny `n`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::pollak::shift_entries;
use crate::combinatorics::Permutation;
use crate::rational::Rational;

/// Counting criterion: `#{r : x_r <= i} >= i` for every `i` in `[n]`.
pub fn is_parking_by_counting(entries: &[usize]) -> bool {
    let n = entries.len();
    (1..=n).all(|i| entries.iter().filter(|&&v| v <= i).count() >= i)
}

/// Every shift `c` in `Z_k` for which `c · w` is a parking function.
pub fn parking_shifts_by_search(entries: &[usize], k: usize) -> Vec<usize> {
    (0..k)
        .filter(|&c| is_parking_by_counting(&shift_entries(entries, c, k)))
        .collect()
}

/// Number of nonnegative integer matrices with the given margins, found by
/// trying every matrix with entries in `0..=total`.
pub fn count_tables_by_search(rows: &[usize], cols: &[usize]) -> usize {
    let total: usize = rows.iter().sum();
    if total != cols.iter().sum::<usize>() {
        return 0;
    }
    let cells = rows.len() * cols.len();
    let mut m = vec![0usize; cells];
    let mut count = 0;
    loop {
        let ok_rows = m.chunks(cols.len()).zip(rows).all(|(r, &s)| r.iter().sum::<usize>() == s);
        let ok_cols = (0..cols.len())
            .all(|b| (0..rows.len()).map(|a| m[a * cols.len() + b]).sum::<usize>() == cols[b]);
        if ok_rows && ok_cols {
            count += 1;
        }
        // odometer over [0, total]^cells
        let mut pos = 0;
        loop {
            if pos == cells {
                return count;
            }
            if m[pos] < total {
                m[pos] += 1;
                break;
            }
            m[pos] = 0;
            pos += 1;
        }
    }
}

/// The Burnside kernel evaluated straight from its group-sum definition,
/// `K(x, y) = sum_{g in G_x ∩ G_y} 1 / (|G_x| |X_g|)`, on an explicit
/// invariant state space.
pub struct GroupSumKernel {
    perms: Vec<Permutation>,
    fixed_sizes: Vec<usize>,
}

impl GroupSumKernel {
    /// `states` must be closed under coordinate permutation.
    pub fn new(n: usize, states: &[Vec<usize>]) -> Self {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let fixed_sizes = perms
            .iter()
            .map(|g| states.iter().filter(|s| g.act_on(s) == **s).count())
            .collect();
        Self { perms, fixed_sizes }
    }

    pub fn fixed_size(&self, g: &Permutation) -> usize {
        let idx = self.perms.iter().position(|p| p == g).expect("permutation of the wrong degree");
        self.fixed_sizes[idx]
    }

    pub fn stabilizer(&self, x: &[usize]) -> Vec<&Permutation> {
        self.perms.iter().filter(|g| g.act_on(x) == x).collect()
    }

    pub fn kernel(&self, x: &[usize], y: &[usize]) -> Rational {
        let gx = self.perms.iter().filter(|g| g.act_on(x) == x).count();
        let mut acc = Rational::zero();
        for (g, &size) in self.perms.iter().zip(&self.fixed_sizes) {
            if g.act_on(x) == x && g.act_on(y) == y {
                acc += Rational::new(BigInt::from(1), BigInt::from(gx * size));
            }
        }
        acc
    }
}

/// Sum of `kernel(x, z)` over `z` in each orbit, keyed by the sorted word.
pub fn lump_row(x: &[usize], states: &[Vec<usize>], kernel: impl Fn(&[usize], &[usize]) -> Rational) -> HashMap<Vec<usize>, Rational> {
    let mut out: HashMap<Vec<usize>, Rational> = HashMap::new();
    for z in states {
        let mut key = z.clone();
        key.sort_unstable();
        *out.entry(key).or_insert_with(Rational::zero) += kernel(x, z);
    }
    out
}

/// `sum_{tau in S_n} z^{l(tau)}` by enumerating the group.
pub fn cycle_generating_sum(n: usize, z: &Rational) -> Rational {
    Permutation::all(n).fold(Rational::zero(), |acc, tau| acc + z.pow(tau.cycle_count() as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_criterion() {
        assert!(is_parking_by_counting(&[4, 1, 3, 4, 1]));
        assert!(!is_parking_by_counting(&[2, 2]));
    }

    #[test]
    fn search_shifts() {
        assert_eq!(parking_shifts_by_search(&[3, 3], 3), vec![1]);
    }

    #[test]
    fn table_search() {
        assert_eq!(count_tables_by_search(&[1, 1], &[1, 1]), 2);
        assert_eq!(count_tables_by_search(&[2, 0], &[1, 1]), 1);
        assert_eq!(count_tables_by_search(&[2, 0], &[1, 2]), 0);
    }
}
