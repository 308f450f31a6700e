//! Words, parking functions, histograms and densities.
//!
//! Values are 1-based at every public boundary: a word over `[k]` holds
//! entries in `1..=k`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::counting::factorial;
use super::permutation::Permutation;
use crate::error::{invalid, Error, Result};

/// Parses `4,1,3,4,1` into entries.
pub fn parse_entries(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("not a positive integer: {t:?}")))
        })
        .collect()
}

pub fn format_entries(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// A word in `[k]^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    entries: Vec<usize>,
    k: usize,
}

impl Word {
    pub fn new(entries: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&v| v == 0 || v > k) {
            return invalid(format!("entry {bad} outside [1, {k}]"));
        }
        Ok(Self { entries, k })
    }

    pub fn parse(s: &str, k: usize) -> Result<Self> {
        Self::new(parse_entries(s)?, k)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn alphabet(&self) -> usize {
        self.k
    }

    /// The coordinate action `(sigma w)_{sigma(i)} = w_i`.
    pub fn act(&self, sigma: &Permutation) -> Word {
        Word {
            entries: sigma.act_on(&self.entries),
            k: self.k,
        }
    }

    pub fn histogram(&self) -> Histogram {
        Histogram::of_entries(&self.entries, self.k)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.entries))
    }
}

/// Sorted criterion: the `i`-th smallest entry is at most `i`.
///
/// Entries larger than `n` make the word fail; an empty word or a zero entry
/// is rejected.
pub fn is_parking_function(entries: &[usize]) -> Result<bool> {
    if entries.is_empty() {
        return invalid("empty word");
    }
    if entries.contains(&0) {
        return invalid("entries are 1-based");
    }
    Ok(parking_check(entries))
}

pub(crate) fn parking_check(entries: &[usize]) -> bool {
    let n = entries.len();
    // counts[v] = #{entries equal to v}, for v <= n
    let mut counts = vec![0usize; n + 1];
    for &v in entries {
        if v == 0 || v > n {
            return false;
        }
        counts[v] += 1;
    }
    let mut seen = 0;
    for (i, &c) in counts.iter().enumerate().skip(1) {
        seen += c;
        if seen < i {
            return false;
        }
    }
    true
}

/// A parking function of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction(Vec<usize>);

impl ParkingFunction {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if is_parking_function(&entries)? {
            Ok(Self(entries))
        } else {
            invalid(format!("{} is not a parking function", format_entries(&entries)))
        }
    }

    pub(crate) fn new_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(parking_check(&entries));
        Self(entries)
    }

    /// `(1, 2, ..., n)`, the state with trivial stabilizer.
    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// `(1, 1, ..., 1)`, the state with the full symmetric group as stabilizer.
    pub fn all_ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<usize> {
        &mut self.0
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_word(&self) -> Word {
        Word {
            entries: self.0.clone(),
            k: self.0.len(),
        }
    }

    /// Weakly increasing rearrangement; it labels the `S_n`-orbit.
    pub fn sorted(&self) -> IncreasingParkingFunction {
        let mut v = self.0.clone();
        v.sort_unstable();
        IncreasingParkingFunction(ParkingFunction(v))
    }

    pub fn histogram(&self) -> Histogram {
        Histogram::of_entries(&self.0, self.0.len())
    }

    pub fn act(&self, sigma: &Permutation) -> ParkingFunction {
        ParkingFunction(sigma.act_on(&self.0))
    }

    pub fn is_fixed_by(&self, sigma: &Permutation) -> bool {
        sigma.fixes(&self.0)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_entries(s)?)
    }
}

/// A weakly increasing parking function; canonical orbit representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingParkingFunction(ParkingFunction);

impl IncreasingParkingFunction {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return invalid(format!("{} is not weakly increasing", format_entries(&entries)));
        }
        Ok(Self(ParkingFunction::new(entries)?))
    }

    pub(crate) fn new_unchecked(entries: Vec<usize>) -> Self {
        Self(ParkingFunction::new_unchecked(entries))
    }

    pub fn entries(&self) -> &[usize] {
        self.0.entries()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_parking_function(&self) -> &ParkingFunction {
        &self.0
    }

    pub fn into_parking_function(self) -> ParkingFunction {
        self.0
    }

    pub fn histogram(&self) -> Histogram {
        self.0.histogram()
    }
}

impl fmt::Display for IncreasingParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for IncreasingParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_entries(s)?)
    }
}

pub fn weakly_increasing_rearrangement(x: &ParkingFunction) -> IncreasingParkingFunction {
    x.sorted()
}

/// Value counts `(i_1, ..., i_k)` of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Histogram {
    counts: Vec<usize>,
}

impl Histogram {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub(crate) fn of_entries(entries: &[usize], k: usize) -> Self {
        let mut counts = vec![0; k];
        for &v in entries {
            counts[v - 1] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Count of value `a` (1-based).
    pub fn count(&self, a: usize) -> usize {
        self.counts[a - 1]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Membership in `HistPF_n`: partial sums dominate their index.
    pub fn is_parking(&self) -> bool {
        let n = self.total();
        if self.counts.len() < n {
            return false;
        }
        let mut seen = 0;
        for (m, &c) in self.counts.iter().enumerate().take(n) {
            seen += c;
            if seen < m + 1 {
                return false;
            }
        }
        true
    }

    /// `prod_a i_a!`, the order of the stabilizer of any word with this histogram.
    pub fn factorial_product(&self) -> BigUint {
        self.counts
            .iter()
            .fold(BigUint::one(), |acc, &c| acc * factorial(c))
    }

    /// The unique weakly increasing word with this histogram.
    pub fn increasing_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total());
        for (a, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(a + 1, c));
        }
        out
    }
}

/// Histogram of a word in `[n]^n`.
pub fn histogram(entries: &[usize]) -> Result<Histogram> {
    let n = entries.len();
    if let Some(&bad) = entries.iter().find(|&&v| v == 0 || v > n) {
        return invalid(format!("entry {bad} outside [1, {n}]"));
    }
    Ok(Histogram::of_entries(entries, n))
}

/// Joint value counts `m_{a,b} = #{r : x_r = a, y_r = b}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensityMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<usize>,
}

impl DensityMatrix {
    pub(crate) fn from_cells(rows: usize, cols: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), rows * cols);
        Self { rows, cols, cells }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `m_{a,b}` with 1-based indices.
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[(a - 1) * self.cols + (b - 1)]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn row_margins(&self) -> Vec<usize> {
        self.cells.chunks(self.cols).map(|r| r.iter().sum()).collect()
    }

    pub fn col_margins(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|b| (0..self.rows).map(|a| self.cells[a * self.cols + b]).sum())
            .collect()
    }

    pub fn total(&self) -> usize {
        self.cells.iter().sum()
    }

    pub fn transpose(&self) -> DensityMatrix {
        let mut cells = vec![0; self.cells.len()];
        for a in 0..self.rows {
            for b in 0..self.cols {
                cells[b * self.rows + a] = self.cells[a * self.cols + b];
            }
        }
        DensityMatrix::from_cells(self.cols, self.rows, cells)
    }

    /// Row-major nested form, mainly for display and tests.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.cols).map(|r| r.to_vec()).collect()
    }
}

/// `dens(x, y)` for two words of equal length over a common alphabet.
pub fn density(x: &Word, y: &Word) -> Result<DensityMatrix> {
    if x.len() != y.len() {
        return invalid(format!("length mismatch: {} vs {}", x.len(), y.len()));
    }
    let k = x.alphabet().max(y.alphabet());
    Ok(density_of_entries(x.entries(), y.entries(), k))
}

pub(crate) fn density_of_entries(x: &[usize], y: &[usize], k: usize) -> DensityMatrix {
    let mut cells = vec![0; k * k];
    for (&a, &b) in x.iter().zip(y) {
        cells[(a - 1) * k + (b - 1)] += 1;
    }
    DensityMatrix::from_cells(k, k, cells)
}

/// The index set `B_{a,b}(x, y) = {r : x_r = a, y_r = b}` (1-based positions).
pub fn density_block(x: &Word, y: &Word, a: usize, b: usize) -> Vec<usize> {
    x.entries()
        .iter()
        .zip(y.entries())
        .enumerate()
        .filter(|(_, (&xa, &yb))| xa == a && yb == b)
        .map(|(r, _)| r + 1)
        .collect()
}
