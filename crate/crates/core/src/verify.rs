//! Named invariant suites, each identity checked exhaustively up to `n_max`
//! against an independent computation.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bijections::{
    act_on_labeled_dyck, dyck_to_ipf, dyck_to_triangulation, enumerate_dyck, ipf_to_dyck, labeled_dyck_to_pf,
    pf_to_labeled_dyck, triangulation_to_dyck, DyckPath,
};
use crate::bose_einstein::BeKernel;
use crate::brute::{cycle_generating_sum, is_parking_by_counting, lump_row, parking_shifts_by_search, GroupSumKernel};
use crate::burnside::{fixed_pf_count, PfKernel};
use crate::combinatorics::{
    catalan, enumerate_ipf, enumerate_pf, enumerate_words, pollak_representative, rising_factorial,
    stirling_first_unsigned, ParkingFunction, Permutation, Word,
};
use crate::diagnostics::FactoredChain;
use crate::error::{invalid, Error, Result};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Pollak,
    Kernel,
    Lumped,
    BeTransfer,
    Bijections,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["counts", "pollak", "kernel", "lumped", "be-transfer", "bijections", "all"];

    fn parts(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Counts, Pollak, Kernel, Lumped, BeTransfer, Bijections],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Suite::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Suite::*;
        Ok(match s {
            "counts" => Counts,
            "pollak" => Pollak,
            "kernel" => Kernel,
            "lumped" => Lumped,
            "be-transfer" => BeTransfer,
            "bijections" => Bijections,
            "all" => All,
            _ => return invalid(format!("unknown suite {s:?}; expected one of {}", Suite::NAMES.join(", "))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub identity: String,
    /// Largest `n` actually checked.
    pub n_checked: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} [{}] {} (n <= {})", self.suite, self.identity, self.n_checked)?;
        if let Some(why) = &self.failure {
            write!(f, ": {why}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub n_max: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

type Outcome = std::result::Result<(), String>;

struct Runner {
    suite: Suite,
    n_max: usize,
    checks: Vec<Check>,
}

impl Runner {
    /// Runs `body(n)` for `n = 1..=min(n_max, cap)`, stopping at the first
    /// counterexample.
    fn check(&mut self, identity: &str, cap: usize, mut body: impl FnMut(usize) -> Outcome) {
        let top = self.n_max.min(cap);
        let failure = (1..=top).find_map(|n| body(n).err().map(|e| format!("n = {n}: {e}")));
        self.checks.push(Check {
            suite: self.suite,
            identity: identity.to_string(),
            n_checked: top,
            failure,
        });
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pf_states(n: usize) -> Vec<Vec<usize>> {
    enumerate_pf(n).expect("within cap").into_iter().map(ParkingFunction::into_entries).collect()
}

fn ipf_states(n: usize) -> Vec<Vec<usize>> {
    enumerate_ipf(n)
        .expect("within cap")
        .into_iter()
        .map(|u| u.into_parking_function().into_entries())
        .collect()
}

fn sorted(x: &[usize]) -> Vec<usize> {
    let mut v = x.to_vec();
    v.sort_unstable();
    v
}

/// Runs `suite` for every `n` from 1 to `n_max`, with each identity capped at
/// the largest `n` it can check in reasonable time.
pub fn run_suite(suite: Suite, n_max: usize) -> Result<Report> {
    if n_max == 0 {
        return invalid("n_max must be at least 1");
    }
    let mut checks = Vec::new();
    for part in suite.parts() {
        let mut r = Runner {
            suite: part,
            n_max,
            checks: Vec::new(),
        };
        match part {
            Suite::Counts => counts(&mut r),
            Suite::Pollak => pollak(&mut r),
            Suite::Kernel => kernel(&mut r),
            Suite::Lumped => lumped(&mut r),
            Suite::BeTransfer => be_transfer(&mut r),
            Suite::Bijections => bijections(&mut r),
            Suite::All => unreachable!(),
        }
        checks.extend(r.checks);
    }
    Ok(Report { suite, n_max, checks })
}

fn counts(r: &mut Runner) {
    r.check("|PF_n| = (n+1)^(n-1)", 7, |n| {
        let count = enumerate_pf(n).map_err(|e| e.to_string())?.len();
        let brute = enumerate_words(n, n)
            .iter()
            .filter(|w| is_parking_by_counting(w))
            .count();
        let formula = (n + 1).pow(n as u32 - 1);
        ensure(count == formula && brute == formula, || {
            format!("enumerated {count}, counted {brute}, formula {formula}")
        })
    });
    r.check("|IPF_n| = Catalan(n)", 10, |n| {
        let count = enumerate_ipf(n).map_err(|e| e.to_string())?.len();
        let formula = catalan(n);
        ensure(BigUint::from(count) == formula, || format!("enumerated {count}, Catalan {formula}"))
    });
    r.check("#{x in PF_n : sigma x = x} = (n+1)^(cycles(sigma)-1)", 5, |n| {
        let states = pf_states(n);
        for sigma in Permutation::all(n) {
            let brute = states.iter().filter(|x| sigma.fixes(x)).count();
            if BigUint::from(brute) != fixed_pf_count(&sigma) {
                return Err(format!("sigma = {sigma}: brute {brute}, formula {}", fixed_pf_count(&sigma)));
            }
        }
        Ok(())
    });
    r.check("sum_k c(n,k) z^k = z(z+1)...(z+n-1)", 7, |n| {
        for z in [ratio(1, n as i64 + 1), ratio(1, 1), ratio(2, 1)] {
            let lhs: Rational = (0..=n)
                .map(|k| Rational::from_integer(stirling_first_unsigned(n, k).into()) * z.pow(k as i32))
                .sum();
            let rhs = rising_factorial(&z, n);
            if lhs != rhs {
                return Err(format!("z = {z}: {lhs} vs {rhs}"));
            }
            if n <= 5 && cycle_generating_sum(n, &z) != lhs {
                return Err(format!("z = {z}: Stirling sum disagrees with the group sum"));
            }
        }
        Ok(())
    });
}

fn pollak(r: &mut Runner) {
    r.check("each w in [n+1]^n has exactly one parking shift", 5, |n| {
        let k = n + 1;
        for w in enumerate_words(n, k) {
            let shifts = parking_shifts_by_search(&w, k);
            if shifts.len() != 1 {
                return Err(format!("{w:?} has parking shifts {shifts:?}"));
            }
            let word = Word::new(w.clone(), k).map_err(|e| e.to_string())?;
            let (rep, c) = pollak_representative(&word).map_err(|e| e.to_string())?;
            if c != shifts[0] || !is_parking_by_counting(rep.entries()) {
                return Err(format!("{w:?}: representative shift {c}, search found {}", shifts[0]));
            }
        }
        Ok(())
    });
    r.check("shift classes partition [n+1]^n into |PF_n| classes of size n+1", 5, |n| {
        let k = n + 1;
        let mut class_sizes: HashMap<Vec<usize>, usize> = HashMap::new();
        for w in enumerate_words(n, k) {
            let (rep, _) = pollak_representative(&Word::new(w, k).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            *class_sizes.entry(rep.into_entries()).or_default() += 1;
        }
        ensure(
            class_sizes.len() == pf_states(n).len() && class_sizes.values().all(|&s| s == k),
            || format!("{} classes", class_sizes.len()),
        )
    });
}

fn kernel(r: &mut Runner) {
    r.check("closed-form kernel = group-sum definition", 4, |n| {
        let states = pf_states(n);
        let brute = GroupSumKernel::new(n, &states);
        let k = PfKernel::new(n);
        for x in &states {
            for y in &states {
                if k.eval(x, y) != brute.kernel(x, y) {
                    return Err(format!("K({x:?}, {y:?}) = {} vs {}", k.eval(x, y), brute.kernel(x, y)));
                }
            }
        }
        Ok(())
    });
    r.check("kernel rows sum to 1", 5, |n| {
        let states = pf_states(n);
        let k = PfKernel::new(n);
        for x in &states {
            let total: Rational = states.iter().map(|y| k.eval(x, y)).sum();
            if total != Rational::one() {
                return Err(format!("row {x:?} sums to {total}"));
            }
        }
        Ok(())
    });
    r.check("detailed balance pi(x) K(x,y) = pi(y) K(y,x)", 5, |n| {
        let states = pf_states(n);
        let k = PfKernel::new(n);
        let pi: Vec<Rational> = states.iter().map(|x| k.stationary(x)).collect();
        for (i, x) in states.iter().enumerate() {
            for (j, y) in states.iter().enumerate().skip(i + 1) {
                if &pi[i] * k.eval(x, y) != &pi[j] * k.eval(y, x) {
                    return Err(format!("x = {x:?}, y = {y:?}"));
                }
            }
        }
        let total: Rational = pi.iter().sum();
        ensure(total == Rational::one(), || format!("pi sums to {total}"))
    });
}

fn lumped(r: &mut Runner) {
    r.check("lumped kernel = orbit sum of the full kernel, any representative", 5, |n| {
        let states = pf_states(n);
        let k = PfKernel::new(n);
        let ipfs = ipf_states(n);
        for x in &states {
            let row = lump_row(x, &states, |a, b| k.eval(a, b));
            let u = sorted(x);
            for v in &ipfs {
                let expected = row.get(v).cloned().unwrap_or_else(Rational::zero);
                if k.lumped(&u, v) != expected {
                    return Err(format!("from {x:?} to orbit {v:?}"));
                }
            }
        }
        Ok(())
    });
    r.check("uniform 1/C_n is stationary for the lumped kernel", 6, |n| {
        let ipfs = ipf_states(n);
        let k = PfKernel::new(n);
        let c = ipfs.len() as i64;
        for v in &ipfs {
            let mass: Rational = ipfs.iter().map(|u| k.lumped(u, v) * ratio(1, c)).sum();
            if mass != ratio(1, c) {
                return Err(format!("mass at {v:?} is {mass}"));
            }
        }
        Ok(())
    });
}

fn be_transfer(r: &mut Runner) {
    r.check("K(x,y) = (n+1) K^BE(x,y) on parking functions", 4, |n| {
        let states = pf_states(n);
        let k = PfKernel::new(n);
        let be = BeKernel::new(n, n + 1);
        let scale = Rational::from_integer((n as i64 + 1).into());
        for x in &states {
            for y in &states {
                if k.eval(x, y) != &scale * be.eval(x, y) {
                    return Err(format!("x = {x:?}, y = {y:?}"));
                }
            }
        }
        Ok(())
    });
    r.check("shift-class sums of K^BE give K, and (n+1) pi^BE = pi on representatives", 3, |n| {
        let k = n + 1;
        let pf = PfKernel::new(n);
        let be = BeKernel::new(n, k);
        let words = enumerate_words(n, k);
        let pfs = pf_states(n);
        let mut reps = HashMap::new();
        for w in &words {
            let (rep, _) = pollak_representative(&Word::new(w.clone(), k).unwrap()).unwrap();
            reps.insert(w.clone(), rep.into_entries());
        }
        let scale = Rational::from_integer((k as i64).into());
        for x in &words {
            let mut sums: HashMap<&Vec<usize>, Rational> = HashMap::new();
            for u in &words {
                *sums.entry(&reps[u]).or_insert_with(Rational::zero) += be.eval(x, u);
            }
            for y in &pfs {
                let s = sums.get(y).cloned().unwrap_or_else(Rational::zero);
                if s != pf.eval(&reps[x], y) {
                    return Err(format!("x = {x:?}, class of {y:?}"));
                }
            }
            if &scale * be.stationary(x) != pf.stationary(&reps[x]) {
                return Err(format!("stationary mass at {x:?}"));
            }
        }
        Ok(())
    });
    r.check("BE and PF distance-to-stationarity curves agree for t = 1..20", 3, |n| {
        let k = n + 1;
        let pf = FactoredChain::parking(n).map_err(|e| e.to_string())?;
        let be = FactoredChain::bose_einstein(n, k).map_err(|e| e.to_string())?;
        for (i, w) in be.space().states().iter().enumerate() {
            let (rep, _) = pollak_representative(&Word::new(w.clone(), k).unwrap()).unwrap();
            let j = pf.space().index_of(rep.entries()).expect("representative parks");
            let a = be.tv_curve_from(i, 20);
            let b = pf.tv_curve_from(j, 20);
            if a[1..] != b[1..] {
                return Err(format!("start {w:?}"));
            }
        }
        Ok(())
    });
}

fn bijections(r: &mut Runner) {
    r.check("increasing parking functions <-> Dyck paths round trip", 8, |n| {
        let paths: HashSet<DyckPath> = enumerate_dyck(n).map_err(|e| e.to_string())?.into_iter().collect();
        for u in enumerate_ipf(n).map_err(|e| e.to_string())? {
            let d = ipf_to_dyck(&u);
            if !paths.contains(&d) || dyck_to_ipf(&d).map_err(|e| e.to_string())? != u {
                return Err(format!("{u}"));
            }
        }
        ensure(paths.len() == catalan(n).try_into().unwrap_or(0usize), || "path count".into())
    });
    r.check("parking functions <-> labeled Dyck paths round trip", 5, |n| {
        let mut seen = HashSet::new();
        for x in enumerate_pf(n).map_err(|e| e.to_string())? {
            let ld = pf_to_labeled_dyck(&x);
            if labeled_dyck_to_pf(&ld) != x || ld.to_string().parse::<crate::bijections::LabeledDyckPath>().ok() != Some(ld.clone()) {
                return Err(format!("{x}"));
            }
            seen.insert(ld);
        }
        ensure(seen.len() == (n + 1).pow(n as u32 - 1), || "labeled paths not distinct".into())
    });
    r.check("F(sigma x) = sigma . F(x)", 4, |n| {
        let pfs = enumerate_pf(n).map_err(|e| e.to_string())?;
        for sigma in Permutation::all(n) {
            for x in &pfs {
                let lhs = pf_to_labeled_dyck(&x.act(&sigma));
                let rhs = act_on_labeled_dyck(&sigma, &pf_to_labeled_dyck(x)).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("sigma = {sigma}, x = {x}"));
                }
            }
        }
        Ok(())
    });
    r.check("Dyck paths -> triangulations is injective onto valid triangulations", 6, |n| {
        let mut seen = HashSet::new();
        for d in enumerate_dyck(n).map_err(|e| e.to_string())? {
            let t = dyck_to_triangulation(&d).map_err(|e| e.to_string())?;
            if triangulation_to_dyck(&t).map_err(|e| e.to_string())? != d {
                return Err(format!("{d}"));
            }
            if !seen.insert(t.to_string()) {
                return Err(format!("{d} collides"));
            }
        }
        Ok(())
    });
}
