//! Labeled Dyck paths and the label-permuting action.

use std::fmt;
use std::str::FromStr;

use super::dyck::{ipf_to_dyck, DyckPath};
use crate::combinatorics::word::format_entries;
use crate::combinatorics::{ParkingFunction, Permutation};
use crate::error::{invalid, Error, Result};

/// A Dyck path whose up-steps carry the labels `1..=n`, strictly increasing
/// along each vertical run.
///
/// Labels are stored per value: `runs[a-1]` holds the labels of the
/// vertical run before the `a`-th E-step (empty when that run is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledDyckPath {
    path: DyckPath,
    runs: Vec<Vec<usize>>,
}

impl LabeledDyckPath {
    /// `labels` lists one label per N-step, in path order.
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<Self> {
        let n = path.n();
        if labels.len() != n {
            return invalid(format!("{} labels for {} up-steps", labels.len(), n));
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            if l == 0 || l > n || seen[l - 1] {
                return invalid(format!("labels {} are not a permutation of [{n}]", format_entries(&labels)));
            }
            seen[l - 1] = true;
        }
        let mut runs = Vec::with_capacity(n);
        let mut rest = &labels[..];
        for r in path.run_lengths() {
            let (run, tail) = rest.split_at(r);
            if run.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("run labels {} are not increasing", format_entries(run)));
            }
            runs.push(run.to_vec());
            rest = tail;
        }
        Ok(Self { path, runs })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    /// Labels of the vertical run for value `a` (1-based), possibly empty.
    pub fn run(&self, a: usize) -> &[usize] {
        &self.runs[a - 1]
    }

    /// Labels in path order, bottom to top.
    pub fn labels(&self) -> Vec<usize> {
        self.runs.iter().flatten().copied().collect()
    }

    pub fn n(&self) -> usize {
        self.path.n()
    }
}

impl fmt::Display for LabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let runs: Vec<String> = self
            .runs
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| format!("[{}]", format_entries(r)))
            .collect();
        write!(f, "{} | {}", self.path, runs.join(";"))
    }
}

impl FromStr for LabeledDyckPath {
    type Err = Error;

    /// Parses `NNEENENNEE | [2,5];[3];[1,4]`.
    fn from_str(s: &str) -> Result<Self> {
        let (path, labels) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidInput("expected `PATH | [..];[..]`".into()))?;
        let path: DyckPath = path.parse()?;
        let mut flat = Vec::new();
        let mut run_lengths = Vec::new();
        for group in labels.split(';').map(str::trim).filter(|g| !g.is_empty()) {
            let inner = group
                .strip_prefix('[')
                .and_then(|g| g.strip_suffix(']'))
                .ok_or_else(|| Error::InvalidInput(format!("bad label group {group:?}")))?;
            let parsed = crate::combinatorics::word::parse_entries(inner)?;
            run_lengths.push(parsed.len());
            flat.extend(parsed);
        }
        let nonempty: Vec<usize> = path.run_lengths().into_iter().filter(|&r| r > 0).collect();
        if nonempty != run_lengths {
            return invalid("label groups do not match the vertical runs");
        }
        Self::new(path, flat)
    }
}

/// `F(x)`: the path of `x̄`, with run `a` labeled by `{r : x_r = a}`.
pub fn pf_to_labeled_dyck(x: &ParkingFunction) -> LabeledDyckPath {
    let n = x.len();
    let mut runs = vec![Vec::new(); n];
    for (r, &a) in x.entries().iter().enumerate() {
        runs[a - 1].push(r + 1);
    }
    LabeledDyckPath {
        path: ipf_to_dyck(&x.sorted()),
        runs,
    }
}

/// `F^{-1}`: position `j` gets the value of the run containing label `j`.
pub fn labeled_dyck_to_pf(ld: &LabeledDyckPath) -> ParkingFunction {
    let mut x = vec![0; ld.n()];
    for (a, run) in ld.runs.iter().enumerate() {
        for &j in run {
            x[j - 1] = a + 1;
        }
    }
    ParkingFunction::new_unchecked(x)
}

/// `sigma · ld`: relabel `i ↦ sigma(i)`, then sort each run.
pub fn act_on_labeled_dyck(sigma: &Permutation, ld: &LabeledDyckPath) -> Result<LabeledDyckPath> {
    if sigma.degree() != ld.n() {
        return invalid(format!("permutation of degree {} on a path of size {}", sigma.degree(), ld.n()));
    }
    let runs = ld
        .runs
        .iter()
        .map(|run| {
            let mut r: Vec<usize> = run.iter().map(|&i| sigma.apply(i)).collect();
            r.sort_unstable();
            r
        })
        .collect();
    Ok(LabeledDyckPath {
        path: ld.path.clone(),
        runs,
    })
}

/// The outcome map: labels of `F(x)` read bottom to top, as a permutation.
pub fn outcome_map(x: &ParkingFunction) -> Permutation {
    Permutation::new(pf_to_labeled_dyck(x).labels()).expect("labels partition [n]")
}
