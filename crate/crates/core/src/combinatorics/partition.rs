//! Set partitions of `[n]`, their meet, and Young subgroups.

use num_bigint::BigUint;
use num_traits::One;

use super::counting::factorial;
use super::permutation::Permutation;
use crate::error::{invalid, Result};

/// A partition of `[n]` into nonempty blocks.
///
/// Normalized: each block sorted, blocks ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return invalid("empty block");
            }
            for &a in block {
                if a == 0 || a > n || seen[a - 1] {
                    return invalid(format!("element {a} repeated or outside [1, {n}]"));
                }
                seen[a - 1] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return invalid("blocks do not cover [n]");
        }
        Ok(Self::normalized(n, blocks))
    }

    fn normalized(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { n, blocks }
    }

    /// The value partition `{I_a(x)}`: positions grouped by their value.
    pub fn of_values(entries: &[usize]) -> Self {
        let k = entries.iter().copied().max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); k];
        for (r, &v) in entries.iter().enumerate() {
            blocks[v - 1].push(r + 1);
        }
        blocks.retain(|b| !b.is_empty());
        Self::normalized(entries.len(), blocks)
    }

    pub fn single_block(n: usize) -> Self {
        Self {
            n,
            blocks: if n == 0 { Vec::new() } else { vec![(1..=n).collect()] },
        }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            n,
            blocks: (1..=n).map(|a| vec![a]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (j, block) in self.blocks.iter().enumerate() {
            for &a in block {
                ids[a - 1] = j;
            }
        }
        ids
    }

    /// Whether `sigma` maps every block onto itself, i.e. lies in `S_P`.
    pub fn preserved_by(&self, sigma: &Permutation) -> bool {
        let ids = self.block_ids();
        (1..=self.n).all(|a| ids[a - 1] == ids[sigma.apply(a) - 1])
    }
}

/// `P ∧ Q`: the nonempty pairwise intersections of blocks.
pub fn partition_meet(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    if p.n != q.n {
        return invalid(format!("partitions of [{}] and [{}]", p.n, q.n));
    }
    let q_ids = q.block_ids();
    let mut blocks = Vec::new();
    for block in &p.blocks {
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); q.blocks.len()];
        for &a in block {
            parts[q_ids[a - 1]].push(a);
        }
        blocks.extend(parts.into_iter().filter(|b| !b.is_empty()));
    }
    Ok(SetPartition::normalized(p.n, blocks))
}

/// `|S_P| = prod_j |B_j|!`.
pub fn young_subgroup_order(p: &SetPartition) -> BigUint {
    p.blocks
        .iter()
        .fold(BigUint::one(), |acc, b| acc * factorial(b.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn meet_examples() {
        let p = part(3, &[&[1, 2], &[3]]);
        let q = part(3, &[&[1], &[2, 3]]);
        assert_eq!(partition_meet(&p, &q).unwrap(), SetPartition::singletons(3));
        assert_eq!(partition_meet(&p, &p).unwrap(), p);
        assert_eq!(partition_meet(&SetPartition::single_block(3), &q).unwrap(), q);
        assert!(partition_meet(&p, &SetPartition::singletons(4)).is_err());
    }

    #[test]
    fn young_orders() {
        assert_eq!(young_subgroup_order(&part(5, &[&[1, 2], &[3, 4, 5]])), BigUint::from(12u32));
        assert_eq!(young_subgroup_order(&SetPartition::singletons(5)), BigUint::one());
        assert_eq!(young_subgroup_order(&SetPartition::single_block(5)), BigUint::from(120u32));
    }

    #[test]
    fn validation() {
        assert!(SetPartition::new(3, vec![vec![1, 2]]).is_err());
        assert!(SetPartition::new(3, vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartition::new(2, vec![vec![1, 2], vec![]]).is_err());
        let v = SetPartition::of_values(&[4, 1, 3, 4, 1]);
        assert_eq!(v.blocks(), &[vec![1, 4], vec![2, 5], vec![3]]);
    }
}
