//! Triangulations of a convex polygon and the Dyck-path bijection.
//!
//! Vertices of the `(n+2)`-gon are `0..=n+1` in cyclic order. A nonempty
//! Dyck word factors uniquely as `N w1 E w2`. On the polygon interval
//! `[i, j]` (base edge or diagonal `{i, j}`, with `j - i - 1` up-steps to
//! place) the root triangle is `(i, m, j)` with `m = i + |w2| + 1`; `w2`
//! triangulates `[i, m]` and `w1` triangulates `[m, j]`. The whole path
//! starts on the edge `{0, n+1}`.

use std::fmt;
use std::str::FromStr;

use super::dyck::{DyckPath, Step};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

/// Interior crossing test for chords `{a, b}`, `{c, d}` with `a < b`, `c < d`.
pub fn diagonals_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Triangulation {
    /// Validates `n - 1` distinct, pairwise noncrossing diagonals of the
    /// `(n+2)`-gon.
    pub fn new(n: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return invalid("polygon needs at least 3 vertices");
        }
        if diagonals.len() != n - 1 {
            return invalid(format!("{} diagonals, expected {}", diagonals.len(), n - 1));
        }
        let mut norm: Vec<(usize, usize)> = diagonals.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        norm.sort_unstable();
        for &(a, b) in &norm {
            if b > n + 1 || b - a < 2 || (a == 0 && b == n + 1) {
                return invalid(format!("{{{a},{b}}} is not a diagonal of the {}-gon", n + 2));
            }
        }
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return invalid("repeated diagonal");
        }
        for (i, &p) in norm.iter().enumerate() {
            if let Some(&q) = norm[i + 1..].iter().find(|&&q| diagonals_cross(p, q)) {
                return invalid(format!("diagonals {p:?} and {q:?} cross"));
            }
        }
        Ok(Self { n, diagonals: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted diagonals `(a, b)` with `a < b`.
    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<[usize; 2]> = self.diagonals.iter().map(|&(a, b)| [a, b]).collect();
        f.write_str(&serde_json::to_string(&pairs).expect("plain integers serialize"))
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    /// Parses a JSON array of pairs; `n` is the number of diagonals plus one.
    fn from_str(s: &str) -> Result<Self> {
        let pairs: Vec<[usize; 2]> =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("bad triangulation JSON: {e}")))?;
        Self::new(pairs.len() + 1, pairs.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

/// Position of the E matching each N.
fn matching(steps: &[Step]) -> Vec<usize> {
    let mut out = vec![usize::MAX; steps.len()];
    let mut open = Vec::new();
    for (p, s) in steps.iter().enumerate() {
        match s {
            Step::N => open.push(p),
            Step::E => {
                let q = open.pop().expect("valid Dyck path");
                out[q] = p;
            }
        }
    }
    out
}

pub fn dyck_to_triangulation(d: &DyckPath) -> Result<Triangulation> {
    let n = d.n();
    if n == 0 {
        return invalid("empty path");
    }
    let steps = d.steps();
    let mate = matching(steps);
    let mut diagonals = Vec::with_capacity(n - 1);
    // (word start, word end, polygon i, polygon j)
    let mut work = vec![(0usize, steps.len(), 0usize, n + 1)];
    while let Some((s, e, i, j)) = work.pop() {
        if s == e {
            continue;
        }
        let q = mate[s];
        let w2_len = (e - q - 1) / 2;
        let m = i + w2_len + 1;
        if m - i >= 2 {
            diagonals.push((i, m));
        }
        if j - m >= 2 {
            diagonals.push((m, j));
        }
        work.push((q + 1, e, i, m));
        work.push((s + 1, q, m, j));
    }
    diagonals.sort_unstable();
    Ok(Triangulation { n, diagonals })
}

pub fn triangulation_to_dyck(t: &Triangulation) -> Result<DyckPath> {
    // re-validate: the fields are private but a caller may hand us anything
    let t = Triangulation::new(t.n, t.diagonals.clone())?;
    let n = t.n;
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n + 2];
    for (v, nb) in neighbors.iter_mut().enumerate().take(n + 1) {
        nb.push(v + 1);
    }
    for &(a, b) in &t.diagonals {
        neighbors[a].push(b);
    }
    neighbors.iter_mut().for_each(|v| v.sort_unstable());

    enum Task {
        Emit(Step),
        Interval(usize, usize),
    }
    let mut steps = Vec::with_capacity(2 * n);
    let mut work = vec![Task::Interval(0, n + 1)];
    while let Some(task) = work.pop() {
        match task {
            Task::Emit(s) => steps.push(s),
            Task::Interval(i, j) => {
                if j - i < 2 {
                    continue;
                }
                // apex: the largest neighbor of i strictly inside (i, j)
                let nb = &neighbors[i];
                let pos = nb.partition_point(|&v| v < j);
                if pos == 0 || nb[pos - 1] <= i {
                    return invalid(format!("no triangle on base {{{i},{j}}}"));
                }
                let m = nb[pos - 1];
                work.push(Task::Interval(i, m));
                work.push(Task::Emit(Step::E));
                work.push(Task::Interval(m, j));
                work.push(Task::Emit(Step::N));
            }
        }
    }
    DyckPath::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::dyck::enumerate_dyck;
    use std::collections::HashSet;

    fn tri(d: &str) -> Triangulation {
        dyck_to_triangulation(&d.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(tri("NE").diagonals(), &[]);
        assert_eq!(tri("NENE").to_string(), "[[0,2]]");
        assert_eq!(tri("NNEE").to_string(), "[[1,3]]");
        assert_eq!(triangulation_to_dyck(&Triangulation::new(1, vec![]).unwrap()).unwrap().to_string(), "NE");
    }

    #[test]
    fn fan_round_trip() {
        let fan = Triangulation::new(4, vec![(0, 2), (0, 3), (0, 4)]).unwrap();
        let d = triangulation_to_dyck(&fan).unwrap();
        assert_eq!(dyck_to_triangulation(&d).unwrap(), fan);
    }

    #[test]
    fn exhaustive_round_trips() {
        for n in 1..=6 {
            let paths = enumerate_dyck(n).unwrap();
            let mut seen = HashSet::new();
            for d in &paths {
                let t = dyck_to_triangulation(d).unwrap();
                assert!(Triangulation::new(n, t.diagonals().to_vec()).is_ok());
                assert_eq!(&triangulation_to_dyck(&t).unwrap(), d);
                seen.insert(t);
            }
            assert_eq!(seen.len(), paths.len());
        }
    }

    #[test]
    fn validation() {
        assert!(Triangulation::new(2, vec![(0, 2), (1, 3)]).is_err());
        assert!(Triangulation::new(2, vec![]).is_err());
        assert!(Triangulation::new(3, vec![(0, 2), (1, 3)]).is_err());
        assert!(Triangulation::new(2, vec![(0, 1)]).is_err());
        assert!(Triangulation::new(2, vec![(0, 3)]).is_err());
        assert!(Triangulation::new(3, vec![(0, 2), (2, 0)]).is_err());
        assert!("[[0,2],[1,3]]".parse::<Triangulation>().is_err());
        assert_eq!("[[0,2]]".parse::<Triangulation>().unwrap(), tri("NENE"));
        assert!(diagonals_cross((0, 2), (1, 3)));
        assert!(!diagonals_cross((0, 2), (0, 3)));
        assert!(!diagonals_cross((0, 2), (2, 4)));
    }
}
