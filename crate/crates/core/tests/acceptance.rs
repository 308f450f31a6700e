//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --release --test acceptance`.

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use catalan_burnside::bijections::{
    act_on_labeled_dyck, dyck_to_ipf, dyck_to_triangulation, enumerate_dyck, ipf_to_dyck, labeled_dyck_to_pf,
    pf_to_labeled_dyck, sample_triangulations, LabeledDyckPath,
};
use catalan_burnside::bose_einstein::BeKernel;
use catalan_burnside::brute::{is_parking_by_counting, lump_row, parking_shifts_by_search, GroupSumKernel};
use catalan_burnside::burnside::{burnside_step, fixed_pf_count, PfKernel};
use catalan_burnside::combinatorics::{
    enumerate_ipf, enumerate_pf, enumerate_words, pollak_representative, rising_factorial, stirling_first_unsigned,
};
use catalan_burnside::diagnostics::{
    empirical_orbit_distribution, mixing_time_bound, theoretical_bound, total_variation, worst_case_tv_curve,
    DistributionVector, FactoredChain, StateSpace,
};
use catalan_burnside::rational::{ratio, to_f64_round_up};
use catalan_burnside::rng::replica_rng;
use catalan_burnside::{IncreasingParkingFunction, ParkingFunction, Permutation, Rational, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pf_by_counting(n: usize) -> Vec<Vec<usize>> {
    enumerate_words(n, n).into_iter().filter(|w| is_parking_by_counting(w)).collect()
}

fn catalan_by_recurrence(n: usize) -> BigUint {
    let mut c = vec![BigUint::one()];
    for m in 0..n {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c.swap_remove(n)
}

fn sorted(x: &[usize]) -> Vec<usize> {
    let mut v = x.to_vec();
    v.sort_unstable();
    v
}

fn cardinalities() -> Outcome {
    for n in 1..=6 {
        let pf = enumerate_pf(n).map_err(|e| e.to_string())?;
        let expected = (n + 1).pow(n as u32 - 1);
        ensure(pf.len() == expected, || format!("n={n}: |PF| = {}", pf.len()))?;
        ensure(pf_by_counting(n).len() == expected, || format!("n={n}: counting oracle"))?;
        let ipf = enumerate_ipf(n).map_err(|e| e.to_string())?;
        ensure(BigUint::from(ipf.len()) == catalan_by_recurrence(n), || format!("n={n}: |IPF| = {}", ipf.len()))?;
        if n == 6 {
            ensure(pf.len() == 16807 && ipf.len() == 132, || "n=6 totals".into())?;
        }
    }
    Ok("|PF_6| = 16807, |IPF_6| = 132".into())
}

fn fixed_point_counts() -> Outcome {
    let mut perms = 0;
    for n in 1..=5 {
        let states = pf_by_counting(n);
        for sigma in Permutation::all(n) {
            let brute = states.iter().filter(|x| sigma.act_on(x) == **x).count();
            ensure(BigUint::from(brute) == fixed_pf_count(&sigma), || format!("sigma = {sigma}: {brute}"))?;
            perms += 1;
        }
    }
    Ok(format!("{perms} permutations"))
}

fn pollak_uniqueness() -> Outcome {
    let mut words = 0;
    for n in 1..=4 {
        let k = n + 1;
        for w in enumerate_words(n, k) {
            let shifts = parking_shifts_by_search(&w, k);
            ensure(shifts.len() == 1, || format!("{w:?}: shifts {shifts:?}"))?;
            let (rep, c) = pollak_representative(&Word::new(w.clone(), k).unwrap()).map_err(|e| e.to_string())?;
            ensure(c == shifts[0] && is_parking_by_counting(rep.entries()), || format!("{w:?}: got c = {c}"))?;
            words += 1;
        }
    }
    Ok(format!("{words} words"))
}

fn kernel_correctness() -> Outcome {
    for n in 1..=4 {
        let states = pf_by_counting(n);
        let oracle = GroupSumKernel::new(n, &states);
        let k = PfKernel::new(n);
        for x in &states {
            for y in &states {
                ensure(k.eval(x, y) == oracle.kernel(x, y), || format!("K({x:?},{y:?})"))?;
            }
        }
    }
    for n in 1..=5 {
        let states = pf_by_counting(n);
        let k = PfKernel::new(n);
        let pi: Vec<Rational> = states.iter().map(|x| k.stationary(x)).collect();
        for (i, x) in states.iter().enumerate() {
            let row: Vec<Rational> = states.iter().map(|y| k.eval(x, y)).collect();
            let total: Rational = row.iter().sum();
            ensure(total == Rational::one(), || format!("row {x:?} sums to {total}"))?;
            for (j, y) in states.iter().enumerate().skip(i + 1) {
                ensure(&pi[i] * &row[j] == &pi[j] * k.eval(y, x), || format!("balance {x:?},{y:?}"))?;
            }
        }
    }
    let k = PfKernel::new(2);
    ensure(k.eval(&[1, 1], &[1, 1]) == ratio(2, 3), || "K((1,1),(1,1))".into())?;
    ensure(k.eval(&[1, 1], &[1, 2]) == ratio(1, 6), || "K((1,1),(1,2))".into())?;
    Ok("oracle n <= 4, rows and detailed balance n <= 5, spot values".into())
}

fn lumped_kernel() -> Outcome {
    for n in 1..=5 {
        let states = pf_by_counting(n);
        let k = PfKernel::new(n);
        let orbits: Vec<Vec<usize>> = states.iter().filter(|x| x.windows(2).all(|w| w[0] <= w[1])).cloned().collect();
        for x in &states {
            let row = lump_row(x, &states, |a, b| k.eval(a, b));
            for v in &orbits {
                let want = row.get(v).cloned().unwrap_or_else(Rational::zero);
                ensure(k.lumped(&sorted(x), v) == want, || format!("from {x:?} to orbit {v:?}"))?;
            }
        }
    }
    for n in 1..=6 {
        let orbits: Vec<Vec<usize>> = enumerate_ipf(n)
            .unwrap()
            .into_iter()
            .map(|u| u.into_parking_function().into_entries())
            .collect();
        let k = PfKernel::new(n);
        let c = ratio(1, orbits.len() as i64);
        for v in &orbits {
            let mass: Rational = orbits.iter().map(|u| k.lumped(u, v) * &c).sum();
            ensure(mass == c, || format!("n={n}: mass at {v:?} is {mass}"))?;
        }
    }
    Ok("orbit sums n <= 5, uniform stationary n <= 6".into())
}

fn rescaling_and_transfer() -> Outcome {
    for n in 1..=4 {
        let states = pf_by_counting(n);
        let pf = PfKernel::new(n);
        let be = BeKernel::new(n, n + 1);
        let scale = Rational::from_integer((n as i64 + 1).into());
        for x in &states {
            for y in &states {
                ensure(pf.eval(x, y) == &scale * be.eval(x, y), || format!("rescaling at {x:?},{y:?}"))?;
            }
        }
    }
    for n in 1..=3 {
        let k = n + 1;
        let pf = PfKernel::new(n);
        let be = BeKernel::new(n, k);
        let words = enumerate_words(n, k);
        // shift classes found by brute search, independent of the representative map
        let rep: HashMap<Vec<usize>, Vec<usize>> = words
            .iter()
            .map(|w| {
                let c = parking_shifts_by_search(w, k)[0];
                (w.clone(), catalan_burnside::combinatorics::shift_entries(w, c, k))
            })
            .collect();
        let scale = Rational::from_integer((k as i64).into());
        for x in &words {
            let mut sums: HashMap<&Vec<usize>, Rational> = HashMap::new();
            for u in &words {
                *sums.entry(&rep[u]).or_insert_with(Rational::zero) += be.eval(x, u);
            }
            for y in pf_by_counting(n) {
                let s = sums.get(&y).cloned().unwrap_or_else(Rational::zero);
                ensure(s == pf.eval(&rep[x], &y), || format!("class sum from {x:?} to {y:?}"))?;
            }
            ensure(&scale * be.stationary(x) == pf.stationary(&rep[x]), || format!("stationary at {x:?}"))?;
        }
    }
    let n = 3;
    let pf = FactoredChain::parking(n).map_err(|e| e.to_string())?;
    let be = FactoredChain::bose_einstein(n, n + 1).map_err(|e| e.to_string())?;
    for (i, w) in be.space().states().iter().enumerate() {
        let (rep, _) = pollak_representative(&Word::new(w.clone(), n + 1).unwrap()).unwrap();
        let j = pf.space().index_of(rep.entries()).unwrap();
        let a = be.tv_curve_from(i, 20);
        let b = pf.tv_curve_from(j, 20);
        ensure(a[1..] == b[1..], || format!("TV curves differ from {w:?}"))?;
    }
    Ok("rescaling n <= 4, class sums and stationary n <= 3, TV curves n = 3, t = 1..20".into())
}

fn bound_domination() -> Outcome {
    let mut worst_ratio: f64 = 0.0;
    for n in 1..=5 {
        let curve = worst_case_tv_curve(n, 200).map_err(|e| e.to_string())?;
        for (t, tv) in curve.iter().enumerate() {
            let up = to_f64_round_up(tv);
            let bound = theoretical_bound(n, t);
            ensure(up <= bound, || format!("n={n}, t={t}: d(t) = {tv} > {bound}"))?;
            if bound > 0.0 {
                worst_ratio = worst_ratio.max(up / bound);
            }
        }
    }
    Ok(format!("n = 1..5, t = 0..200; max d(t)/bound = {worst_ratio:.3}"))
}

fn sampler_law() -> Outcome {
    let n = 3;
    let draws = 1_000_000;
    let states = pf_by_counting(n);
    let space = StateSpace::parking_functions(n).unwrap();
    let k = PfKernel::new(n);
    let mut worst: f64 = 0.0;
    for (s, x) in states.iter().enumerate() {
        let x0 = ParkingFunction::new(x.clone()).unwrap();
        let mut rng = replica_rng(2024, s as u64);
        let mut counts = vec![0u64; space.len()];
        for _ in 0..draws {
            let y = burnside_step(&x0, &mut rng);
            counts[space.index_of(y.entries()).unwrap()] += 1;
        }
        let empirical = DistributionVector::empirical(
            space.clone(),
            counts.iter().map(|&c| c as f64 / draws as f64).collect(),
        )
        .map_err(|e| e.to_string())?;
        let exact = DistributionVector::exact(space.clone(), space.states().iter().map(|y| k.eval(x, y)).collect())
            .map_err(|e| e.to_string())?;
        let tv = total_variation(&empirical, &exact).map_err(|e| e.to_string())?.to_f64();
        worst = worst.max(tv);
        ensure(tv <= 0.01, || format!("start {x:?}: TV {tv}"))?;
    }
    Ok(format!("16 starts x 10^6 draws, max TV {worst:.4}"))
}

fn end_to_end_uniformity() -> Outcome {
    let n = 5;
    let t = mixing_time_bound(n, 0.01).map_err(|e| e.to_string())?;
    ensure(t == 38, || format!("step count {t}"))?;
    let p = empirical_orbit_distribution(n, t, 100_000, 9).map_err(|e| e.to_string())?;
    ensure(p.space().len() == 42, || "42 orbits".into())?;
    let tv = total_variation(&p, &DistributionVector::uniform(p.space().clone()))
        .map_err(|e| e.to_string())?
        .to_f64();
    ensure(tv <= 0.02, || format!("TV {tv}"))?;
    Ok(format!("n = 5, t = 38, 10^5 replicas, TV {tv:.4}"))
}

fn bijection_layer() -> Outcome {
    let u: IncreasingParkingFunction = "1,1,3,4,4".parse().unwrap();
    let d = ipf_to_dyck(&u);
    ensure(d.to_string() == "NNEENENNEE", || format!("path {d}"))?;
    ensure(dyck_to_ipf(&d).unwrap() == u, || "path back".into())?;
    let x: ParkingFunction = "4,1,3,4,1".parse().unwrap();
    let ld = pf_to_labeled_dyck(&x);
    ensure(ld.to_string() == "NNEENENNEE | [2,5];[3];[1,4]", || format!("labeled {ld}"))?;
    let sigma: Permutation = "5,4,1,2,3".parse().unwrap();
    ensure(sigma == Permutation::from_cycles(5, &[&[1, 5, 3], &[2, 4]]).unwrap(), || "sigma".into())?;
    ensure(x.act(&sigma).to_string() == "3,4,1,1,4", || format!("action {}", x.act(&sigma)))?;

    for n in 1..=8 {
        let paths = enumerate_dyck(n).unwrap();
        let ipfs = enumerate_ipf(n).unwrap();
        ensure(paths.len() == ipfs.len(), || format!("n={n}: counts"))?;
        for u in &ipfs {
            ensure(dyck_to_ipf(&ipf_to_dyck(u)).unwrap() == *u, || format!("{u}"))?;
        }
        for d in &paths {
            ensure(ipf_to_dyck(&dyck_to_ipf(d).unwrap()) == *d, || format!("{d}"))?;
        }
    }
    for n in 1..=5 {
        for x in pf_by_counting(n) {
            let x = ParkingFunction::new(x).unwrap();
            let ld = pf_to_labeled_dyck(&x);
            ensure(labeled_dyck_to_pf(&ld) == x, || format!("{x}"))?;
            let reparsed: LabeledDyckPath = ld.to_string().parse().map_err(|e| format!("{e}"))?;
            ensure(reparsed == ld, || format!("{ld}"))?;
        }
    }
    for n in 1..=4 {
        let states = pf_by_counting(n);
        for sigma in Permutation::all(n) {
            for x in &states {
                let x = ParkingFunction::new(x.clone()).unwrap();
                let lhs = pf_to_labeled_dyck(&x.act(&sigma));
                let rhs = act_on_labeled_dyck(&sigma, &pf_to_labeled_dyck(&x)).unwrap();
                ensure(lhs == rhs, || format!("sigma = {sigma}, x = {x}"))?;
            }
        }
    }
    Ok("worked examples exact; round trips n <= 8 / n <= 5; equivariance n <= 4".into())
}

fn chords_cross(p: (usize, usize), q: (usize, usize)) -> bool {
    let inside = |v: usize, (a, b): (usize, usize)| a < v && v < b;
    let shared = p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1;
    !shared && (inside(q.0, p) != inside(q.1, p))
}

fn triangulation_sampler() -> Outcome {
    for n in 1..=6 {
        let mut seen = HashSet::new();
        for d in enumerate_dyck(n).unwrap() {
            let t = dyck_to_triangulation(&d).map_err(|e| e.to_string())?;
            let diags = t.diagonals();
            ensure(diags.len() == n - 1, || format!("{d}: {} diagonals", diags.len()))?;
            for &(a, b) in diags {
                ensure(a < b && b <= n + 1 && b - a >= 2 && !(a == 0 && b == n + 1), || format!("{d}: chord {a},{b}"))?;
            }
            for (i, &p) in diags.iter().enumerate() {
                for &q in &diags[i + 1..] {
                    ensure(p != q && !chords_cross(p, q), || format!("{d}: {p:?} vs {q:?}"))?;
                }
            }
            ensure(seen.insert(diags.to_vec()), || format!("{d} collides"))?;
        }
    }
    let replicas = 100_000;
    let samples = sample_triangulations(4, 30, 1, replicas, None).map_err(|e| e.to_string())?;
    let mut counts: HashMap<String, usize> = HashMap::new();
    for t in samples {
        *counts.entry(t.to_string()).or_default() += 1;
    }
    ensure(counts.len() == 14, || format!("{} distinct", counts.len()))?;
    let tv: f64 = counts.values().map(|&c| (c as f64 / replicas as f64 - 1.0 / 14.0).abs()).sum::<f64>() / 2.0;
    ensure(tv <= 0.02, || format!("TV {tv}"))?;
    Ok(format!("injective and noncrossing n <= 6; n = 4 TV {tv:.4}"))
}

fn stirling_identity() -> Outcome {
    for n in 1..=7 {
        let z = ratio(1, n as i64 + 1);
        let lhs: Rational = (0..=n)
            .map(|k| Rational::from_integer(stirling_first_unsigned(n, k).into()) * z.pow(k as i32))
            .sum();
        // z (z+1) ... (z+n-1) multiplied out directly
        let rhs = (0..n).fold(Rational::one(), |acc, j| acc * (&z + Rational::from_integer((j as i64).into())));
        ensure(lhs == rhs && rising_factorial(&z, n) == rhs, || format!("n={n}: {lhs} vs {rhs}"))?;
    }
    Ok("n <= 7".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("cardinalities", cardinalities),
        ("fixed-point counts", fixed_point_counts),
        ("unique parking shift", pollak_uniqueness),
        ("kernel closed form", kernel_correctness),
        ("lumped kernel", lumped_kernel),
        ("rescaling and transfer", rescaling_and_transfer),
        ("bound domination", bound_domination),
        ("sampler law", sampler_law),
        ("end-to-end uniformity", end_to_end_uniformity),
        ("bijection layer", bijection_layer),
        ("triangulation sampler", triangulation_sampler),
        ("Stirling identity", stirling_identity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
