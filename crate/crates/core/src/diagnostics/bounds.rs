use crate::error::{invalid, Result};

/// `n (1 - 1/(n+1))^t`, the start-uniform upper bound on the distance to
/// stationarity after `t` steps.
pub fn theoretical_bound(n: usize, t: usize) -> f64 {
    let ratio = n as f64 / (n as f64 + 1.0);
    match i32::try_from(t) {
        Ok(t) => n as f64 * ratio.powi(t),
        Err(_) => n as f64 * (t as f64 * ratio.ln()).exp(),
    }
}

/// `ceil((n+1) ln(n/eps))`, steps sufficient for distance at most `eps`.
pub fn mixing_time_bound(n: usize, eps: f64) -> Result<usize> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    if !(eps > 0.0 && eps < 1.0) {
        return invalid(format!("epsilon must lie in (0, 1), got {eps}"));
    }
    Ok(((n as f64 + 1.0) * (n as f64 / eps).ln()).ceil() as usize)
}
