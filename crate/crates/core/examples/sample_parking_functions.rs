//! Run the Burnside chain on parking functions and compare the orbit law of
//! the final states with the uniform distribution on increasing parking
//! functions.
//!
//!     cargo run --release --example sample_parking_functions -- 5 20000 7

use catalan_burnside::burnside::{run_chain, run_replicas};
use catalan_burnside::diagnostics::{mixing_time_bound, noise_budget, orbit_tv_to_uniform, theoretical_bound};
use catalan_burnside::rng::seeded_rng;
use catalan_burnside::ParkingFunction;

fn arg(i: usize, default: u64) -> u64 {
    std::env::args().nth(i).and_then(|s| s.parse().ok()).unwrap_or(default)
}

fn main() {
    let n = arg(1, 5) as usize;
    let replicas = arg(2, 20_000) as usize;
    let seed = arg(3, 7);
    let t = mixing_time_bound(n, 0.01).unwrap();
    let x0 = ParkingFunction::identity(n);

    let run = run_chain(&x0, 8, &mut seeded_rng(seed), true);
    println!("one trajectory from {x0}:");
    for (s, x) in run.trajectory.unwrap().iter().enumerate() {
        println!("  t={s:<2} {x}   orbit {}", x.sorted());
    }

    let finals = run_replicas(&x0, t, seed, replicas);
    let tv = orbit_tv_to_uniform(n, &finals);
    println!();
    println!("{replicas} replicas, t = {t} steps");
    println!("  orbit TV to uniform     {tv:.4}");
    println!("  bound at t              {:.2e}", theoretical_bound(n, t));
    let c = catalan_burnside::combinatorics::catalan(n).try_into().unwrap_or(usize::MAX);
    println!("  sampling noise budget   {:.4}", noise_budget(c, replicas));
}
