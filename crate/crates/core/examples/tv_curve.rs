//! Exact worst-case distance to stationarity against n (1 - 1/(n+1))^t.
//!
//!     cargo run --release --example tv_curve -- 4 30

use catalan_burnside::diagnostics::TvCurve;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let t_max: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(30);
    let curve = TvCurve::worst_case(n, t_max).unwrap();
    print!("{}", curve.to_csv(false));
    eprintln!("every row within the bound: {}", curve.all_within_bound());
}
