//! The chain lumped to S_n-orbits, indexed by increasing parking functions,
//! and an exact evolution of the lumped law from the all-ones orbit.
//!
//!     cargo run --release --example lumped_chain -- 4

use catalan_burnside::combinatorics::word::format_entries;
use catalan_burnside::diagnostics::LumpedChain;
use catalan_burnside::rational::{format_rational, to_f64_round_up};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let chain = LumpedChain::new(n).unwrap();
    let states = chain.space().states();
    println!("{} orbits of PF_{n}", states.len());
    if states.len() <= 14 {
        for (i, u) in states.iter().enumerate() {
            let row: Vec<String> = (0..states.len()).map(|j| format_rational(&chain.entry(i, j))).collect();
            println!("{:>9}  {}", format_entries(u), row.join(" "));
        }
    }

    let start = chain.space().index_of(&vec![1; n]).unwrap();
    let mut v = chain.point_mass(start);
    println!("\nfrom the all-ones orbit:");
    for t in 0..=12 {
        println!("  t={t:<2} TV to uniform {:.3e}", to_f64_round_up(&chain.tv_to_uniform(&v)));
        v = chain.step(&v);
    }
}
