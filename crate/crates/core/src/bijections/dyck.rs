use std::fmt;
use std::str::FromStr;

use crate::combinatorics::word::Histogram;
use crate::combinatorics::IncreasingParkingFunction;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Up-step.
    N,
    /// Right-step.
    E,
}

/// A lattice path from `(0,0)` to `(n,n)` weakly above the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::N { 1 } else { -1 };
            if height < 0 {
                return invalid(format!("prefix of length {} has more E than N", i + 1));
            }
        }
        if height != 0 {
            return invalid("unequal numbers of N and E steps");
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Semilength.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    /// `r_a`: the number of N-steps immediately before the `a`-th E-step.
    pub fn run_lengths(&self) -> Vec<usize> {
        let mut runs = Vec::with_capacity(self.n());
        let mut current = 0;
        for s in &self.steps {
            match s {
                Step::N => current += 1,
                Step::E => {
                    runs.push(current);
                    current = 0;
                }
            }
        }
        runs
    }

    /// `N^{r_1} E N^{r_2} E ... N^{r_n} E`.
    pub fn from_run_lengths(runs: &[usize]) -> Result<Self> {
        let mut steps = Vec::with_capacity(2 * runs.len());
        for &r in runs {
            steps.extend(std::iter::repeat_n(Step::N, r));
            steps.push(Step::E);
        }
        Self::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => invalid(format!("unexpected step {other:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// Run `a` has length `i_a(u)`.
pub fn ipf_to_dyck(u: &IncreasingParkingFunction) -> DyckPath {
    DyckPath::from_run_lengths(u.histogram().counts()).expect("parking histograms give Dyck paths")
}

pub fn dyck_to_ipf(d: &DyckPath) -> Result<IncreasingParkingFunction> {
    if d.n() == 0 {
        return invalid("empty path");
    }
    Ok(IncreasingParkingFunction::new_unchecked(
        Histogram::new(d.run_lengths()).increasing_word(),
    ))
}

/// Every Dyck path of semilength `n`, via the increasing parking functions.
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    Ok(crate::combinatorics::enumerate_ipf(n)?.iter().map(ipf_to_dyck).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ipf(s: &str) -> IncreasingParkingFunction {
        s.parse().unwrap()
    }

    #[test]
    fn worked_pair() {
        let d = ipf_to_dyck(&ipf("1,1,3,4,4"));
        assert_eq!(d.to_string(), "NNEENENNEE");
        assert_eq!(dyck_to_ipf(&"NNEENENNEE".parse().unwrap()).unwrap(), ipf("1,1,3,4,4"));
    }

    #[test]
    fn extremes() {
        assert_eq!(ipf_to_dyck(&ipf("1,1,1,1")).to_string(), "NNNNEEEE");
        assert_eq!(ipf_to_dyck(&ipf("1,2,3,4")).to_string(), "NENENENE");
        assert_eq!(dyck_to_ipf(&"NNNEEE".parse().unwrap()).unwrap(), ipf("1,1,1"));
        assert_eq!(dyck_to_ipf(&"NENENE".parse().unwrap()).unwrap(), ipf("1,2,3"));
    }

    #[test]
    fn rejects_invalid_paths() {
        assert!("EN".parse::<DyckPath>().is_err());
        assert!("NNE".parse::<DyckPath>().is_err());
        assert!("NXE".parse::<DyckPath>().is_err());
        assert!(dyck_to_ipf(&"".parse().unwrap()).is_err());
    }
}
