//! Exhaustive enumeration of parking functions and contingency tables.

use super::word::{DensityMatrix, Histogram, IncreasingParkingFunction, ParkingFunction};
use crate::error::{invalid, Error, Result};

/// Largest `n` accepted by [`enumerate_pf`] without the override.
pub const PF_ENUMERATION_CAP: usize = 8;
/// Largest `n` accepted by [`enumerate_ipf`].
pub const IPF_ENUMERATION_CAP: usize = 16;

/// All of `PF_n` in lexicographic order. Refuses `n > 8`.
pub fn enumerate_pf(n: usize) -> Result<Vec<ParkingFunction>> {
    enumerate_pf_with_override(n, false)
}

/// As [`enumerate_pf`], with `allow_large` lifting the size cap.
pub fn enumerate_pf_with_override(n: usize, allow_large: bool) -> Result<Vec<ParkingFunction>> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    if n > PF_ENUMERATION_CAP && !allow_large {
        return Err(Error::ResourceLimit {
            what: "enumerate_pf",
            n,
            cap: PF_ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut counts = vec![0usize; n + 1];
    pf_rec(n, &mut prefix, &mut counts, &mut out);
    Ok(out)
}

// A prefix extends to a parking function iff for every i,
// #{entries <= i} + (positions left) >= i.
fn pf_feasible(n: usize, placed: usize, counts: &[usize]) -> bool {
    let left = n - placed;
    let mut seen = 0;
    for (i, &c) in counts.iter().enumerate().skip(1) {
        seen += c;
        if seen + left < i {
            return false;
        }
    }
    true
}

fn pf_rec(n: usize, prefix: &mut Vec<usize>, counts: &mut [usize], out: &mut Vec<ParkingFunction>) {
    if prefix.len() == n {
        out.push(ParkingFunction::new_unchecked(prefix.clone()));
        return;
    }
    for v in 1..=n {
        counts[v] += 1;
        if pf_feasible(n, prefix.len() + 1, counts) {
            prefix.push(v);
            pf_rec(n, prefix, counts, out);
            prefix.pop();
        }
        counts[v] -= 1;
    }
}

/// All of `IPF_n` in lexicographic order. Refuses `n > 16`.
pub fn enumerate_ipf(n: usize) -> Result<Vec<IncreasingParkingFunction>> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    if n > IPF_ENUMERATION_CAP {
        return Err(Error::ResourceLimit {
            what: "enumerate_ipf",
            n,
            cap: IPF_ENUMERATION_CAP,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    ipf_rec(n, &mut prefix, &mut out);
    Ok(out)
}

fn ipf_rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<IncreasingParkingFunction>) {
    let i = prefix.len();
    if i == n {
        out.push(IncreasingParkingFunction::new_unchecked(prefix.clone()));
        return;
    }
    let lo = prefix.last().copied().unwrap_or(1);
    // u_{i+1} <= i + 1
    for v in lo..=i + 1 {
        prefix.push(v);
        ipf_rec(n, prefix, out);
        prefix.pop();
    }
}

/// Every word in `[k]^n`, lexicographic.
pub fn enumerate_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let total = k.checked_pow(n as u32).expect("word space too large");
    let mut out = Vec::with_capacity(total);
    let mut w = vec![1; n];
    for _ in 0..total {
        out.push(w.clone());
        for pos in (0..n).rev() {
            if w[pos] < k {
                w[pos] += 1;
                break;
            }
            w[pos] = 1;
        }
    }
    out
}

/// All `(i, j)`-contingency tables: nonnegative integer matrices with row
/// sums `i` and column sums `j`.
pub fn enumerate_contingency_tables(i: &Histogram, j: &Histogram) -> Result<Vec<DensityMatrix>> {
    let mut out = Vec::new();
    for_each_contingency_table(i.counts(), j.counts(), |cells| {
        out.push(DensityMatrix::from_cells(i.counts().len(), j.counts().len(), cells.to_vec()));
    })?;
    Ok(out)
}

/// Visits every contingency table (row-major cells) with the given margins.
///
/// Depth-first, row by row; each row distributes its margin over the
/// columns subject to the remaining column capacity. Zero-margin rows and
/// columns are never branched on.
pub fn for_each_contingency_table<F: FnMut(&[usize])>(rows: &[usize], cols: &[usize], mut visit: F) -> Result<()> {
    let row_total: usize = rows.iter().sum();
    let col_total: usize = cols.iter().sum();
    if row_total != col_total {
        return invalid(format!("margin sums differ: {row_total} vs {col_total}"));
    }
    let live_rows: Vec<usize> = (0..rows.len()).filter(|&a| rows[a] > 0).collect();
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&b| cols[b] > 0).collect();
    let first = live_rows.first().map_or(0, |&a| rows[a]);
    let mut state = TableSearch {
        rows,
        ncols: cols.len(),
        live_rows: &live_rows,
        live_cols: &live_cols,
        remaining: cols.to_vec(),
        cells: vec![0; rows.len() * cols.len()],
    };
    state.fill(0, 0, first, &mut visit);
    Ok(())
}

struct TableSearch<'a> {
    rows: &'a [usize],
    ncols: usize,
    live_rows: &'a [usize],
    live_cols: &'a [usize],
    remaining: Vec<usize>,
    cells: Vec<usize>,
}

impl TableSearch<'_> {
    // Row slot `ri`, column slot `ci`, `left` units of the row margin unplaced.
    fn fill<F: FnMut(&[usize])>(&mut self, ri: usize, ci: usize, left: usize, visit: &mut F) {
        if ri == self.live_rows.len() {
            visit(&self.cells);
            return;
        }
        let a = self.live_rows[ri];
        let b = self.live_cols[ci];
        let idx = a * self.ncols + b;
        if ci + 1 == self.live_cols.len() {
            // last column takes the rest of the row
            if left > self.remaining[b] {
                return;
            }
            self.remaining[b] -= left;
            self.cells[idx] = left;
            let next = self.live_rows.get(ri + 1).map_or(0, |&r| self.rows[r]);
            self.fill(ri + 1, 0, next, visit);
            self.remaining[b] += left;
            self.cells[idx] = 0;
            return;
        }
        let after: usize = self.live_cols[ci + 1..].iter().map(|&c| self.remaining[c]).sum();
        let lo = left.saturating_sub(after);
        let hi = left.min(self.remaining[b]);
        for m in lo..=hi {
            self.remaining[b] -= m;
            self.cells[idx] = m;
            self.fill(ri, ci + 1, left - m, visit);
            self.remaining[b] += m;
        }
        self.cells[idx] = 0;
    }
}
