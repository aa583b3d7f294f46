//! Exact binomial coefficients with overflow detection.

use crate::error::{Error, Result};

/// `n choose k` for integer `n` (negative or small `n` gives 0), exact in `u64`.
pub fn checked_binomial(n: i64, k: i64) -> Result<u64> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as u64)
}

/// Panicking variant for closed forms whose arguments are known to be small.
pub fn binomial(n: i64, k: i64) -> u64 {
    checked_binomial(n, k).expect("binomial coefficient overflow")
}
