//! Approximately uniform triangulations of a hexagon, tallied.
//!
//!     cargo run --release --example triangulations -- 100000 1

use std::collections::BTreeMap;

use catalan_burnside::bijections::sample_triangulations;
use catalan_burnside::diagnostics::mixing_time_bound;

fn main() {
    let replicas: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let seed: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let n = 4;
    let t = mixing_time_bound(n, 0.01).unwrap();
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for tri in sample_triangulations(n, t, seed, replicas, None).unwrap() {
        *tally.entry(tri.to_string()).or_default() += 1;
    }
    let uniform = 1.0 / tally.len() as f64;
    let mut tv = 0.0;
    for (tri, count) in &tally {
        let p = *count as f64 / replicas as f64;
        tv += (p - uniform).abs() / 2.0;
        println!("{tri:<22} {p:.4}");
    }
    println!("{} distinct, TV to uniform {tv:.4} (t = {t})", tally.len());
}
