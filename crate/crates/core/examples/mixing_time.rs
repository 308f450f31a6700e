//! Measured mixing times next to the guaranteed ones. Exact up to n = 7 here;
//! the exact lumped chain also handles n = 8 but takes minutes to build.
//!
//!     cargo run --release --example mixing_time -- 0.25

use catalan_burnside::diagnostics::empirical_mixing_time;

fn main() {
    let eps: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.25);
    println!("{:>2} {:>9} {:>6} {:>10}  method", "n", "measured", "bound", "distance");
    for n in 1..=7 {
        match empirical_mixing_time(n, eps, 0, 11) {
            Ok(est) => println!("{n:>2} {:>9} {:>6} {:>10.2e}  {}", est.t, est.bound, est.tv, est.method),
            Err(e) => println!("{n:>2} {e}"),
        }
    }
}
