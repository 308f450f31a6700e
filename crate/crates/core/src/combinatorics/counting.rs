//! Closed-form counts: factorials, binomials, Catalan and Stirling numbers,
//! and rising factorials.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::rational::Rational;

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n as u64 + 1)
}

/// Unsigned Stirling number of the first kind: permutations of `[n]` with
/// exactly `k` cycles. Zero when `k > n`.
pub fn stirling_first_unsigned(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] holds s(m, j) for the current m
    let mut row = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::one();
    for m in 1..=n {
        for j in (1..=m).rev() {
            let prev = std::mem::take(&mut row[j]);
            row[j] = &row[j - 1] + prev * (m as u64 - 1);
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(k)
}

/// `z (z + 1) ... (z + m - 1)`, equal to 1 when `m = 0`.
pub fn rising_factorial(z: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = z.clone();
    for _ in 0..m {
        acc *= &term;
        term += BigInt::one();
    }
    acc
}

/// Integer numerators of `(1/k)_(m)` for `m = 0..=max_m`.
///
/// `(1/k)_(m) = prod_{j<m} (1 + j k) / k^m`, so entry `m` is
/// `prod_{j<m} (1 + j k)`.
pub fn rising_numerators(k: usize, max_m: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(max_m + 1);
    let mut acc = BigUint::one();
    out.push(acc.clone());
    for j in 0..max_m as u64 {
        acc *= 1 + j * k as u64;
        out.push(acc.clone());
    }
    out
}

pub fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn catalan_values() {
        let got: Vec<u64> = (0..=8).map(|n| catalan(n).try_into().unwrap()).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_first_unsigned(3, 1), BigUint::from(2u32));
        assert_eq!(stirling_first_unsigned(3, 2), BigUint::from(3u32));
        assert_eq!(stirling_first_unsigned(5, 5), BigUint::one());
        assert_eq!(stirling_first_unsigned(0, 0), BigUint::one());
        assert_eq!(stirling_first_unsigned(4, 0), BigUint::zero());
        assert_eq!(stirling_first_unsigned(2, 3), BigUint::zero());
        for n in 0..8 {
            let total: BigUint = (0..=n).map(|k| stirling_first_unsigned(n, k)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn rising_factorial_values() {
        let third = ratio(1, 3);
        assert_eq!(rising_factorial(&third, 2), ratio(4, 9));
        assert_eq!(rising_factorial(&third, 1), third);
        assert_eq!(rising_factorial(&ratio(-7, 5), 0), ratio(1, 1));
        assert_eq!(rising_factorial(&ratio(1, 1), 5), ratio(120, 1));
    }

    #[test]
    fn rising_numerators_match_rising_factorial() {
        for k in 1..6 {
            let nums = rising_numerators(k, 6);
            for (m, num) in nums.iter().enumerate() {
                let expect = rising_factorial(&ratio(1, k as i64), m);
                let got = Rational::new(num.clone().into(), pow(k, m).into());
                assert_eq!(got, expect, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
