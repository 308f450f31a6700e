//! Pollak's circular map: every global-shift orbit in `[n+1]^n` contains
//! exactly one parking function.

use super::word::{ParkingFunction, Word};
use crate::error::{invalid, Result};

/// `c · w`: add `c` to every entry modulo `k`, with `[k]` identified with
/// `Z_k` by `a ↦ a - 1`.
pub fn shift_entries(entries: &[usize], c: usize, k: usize) -> Vec<usize> {
    entries.iter().map(|&a| (a - 1 + c) % k + 1).collect()
}

/// The shift `c ∈ Z_{n+1}` sending `entries ∈ [n+1]^n` to a parking function.
///
/// Cars park on `n + 1` spots arranged in a circle, each taking the first
/// free spot at or clockwise after its preference. Exactly one spot stays
/// empty, and a word is a parking function iff that spot is `n + 1`, so the
/// shift rotates the empty spot there. Runs in near-linear time using a
/// path-compressed next-free-spot table.
pub(crate) fn pollak_shift(entries: &[usize], next_free: &mut Vec<usize>) -> usize {
    let k = entries.len() + 1;
    next_free.clear();
    next_free.extend(0..k);
    for &pref in entries {
        let spot = find_free(next_free, pref - 1);
        next_free[spot] = (spot + 1) % k;
    }
    let empty = find_free(next_free, 0);
    (k - 1 + k - empty) % k
}

fn find_free(next_free: &mut [usize], start: usize) -> usize {
    let mut root = start;
    while next_free[root] != root {
        root = next_free[root];
    }
    let mut i = start;
    while next_free[i] != root {
        let nxt = next_free[i];
        next_free[i] = root;
        i = nxt;
    }
    root
}

/// `Φ(w)` and the shift producing it, for `w ∈ [n+1]^n`.
pub fn pollak_representative(w: &Word) -> Result<(ParkingFunction, usize)> {
    let n = w.len();
    if n == 0 {
        return invalid("empty word");
    }
    if w.alphabet() != n + 1 {
        return invalid(format!("expected a word over [{}], got alphabet {}", n + 1, w.alphabet()));
    }
    let mut scratch = Vec::with_capacity(n + 1);
    let c = pollak_shift(w.entries(), &mut scratch);
    let shifted = shift_entries(w.entries(), c, n + 1);
    assert!(
        super::word::parking_check(&shifted),
        "circular parking produced a non-parking shift for {w}"
    );
    Ok((ParkingFunction::new_unchecked(shifted), c))
}
