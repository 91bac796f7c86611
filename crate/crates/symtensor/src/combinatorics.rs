//! Exact integer kernel: binomials, multinomials, Möbius function,
//! divisors, lcm. Everything here is arbitrary precision; no floating
//! point is involved in any count.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Count, Error, Result};

/// Generalized binomial coefficient over all integer pairs, as the falling
/// factorial `a(a-1)⋯(a-b+1)/b!`. Conventions: `b < 0` gives 0 and `b = 0`
/// gives 1 for every `a`, negative `a` included. The value is an integer
/// for every pair but can be negative when `a < 0`.
pub fn binomial_signed(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    // Partial falling-factorial quotients are integers, so every division
    // below is exact.
    for i in 0..b {
        acc *= BigInt::from(a - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient under the extended convention used throughout the
/// counting formulas: `binomial(a, 0) = 1` for every integer `a` (the case
/// `binomial(-1, 0)` does occur), `binomial(a, b) = 0` for `b < 0` or
/// `0 <= a < b`.
///
/// Panics if the generalized value is negative (negative `a` with `b > 0`);
/// no in-scope formula reaches that case — use [`binomial_signed`] for it.
pub fn binomial(a: i64, b: i64) -> Count {
    let v = binomial_signed(a, b);
    assert!(
        !v.is_negative(),
        "binomial({a}, {b}) is negative; use binomial_signed"
    );
    v.to_biguint().unwrap()
}

/// `k! / (parts[0]! ⋯ parts[last]!)`, the number of distinct rearrangements
/// of a word with the given letter multiplicities.
pub fn multinomial(k: usize, parts: &[usize]) -> Result<Count> {
    let total: usize = parts.iter().sum();
    if total != k {
        return Err(Error::InvalidInput(format!(
            "multinomial parts sum to {total}, expected {k}"
        )));
    }
    // Product of binomials over the partial sums.
    let mut acc = Count::one();
    let mut remaining = k;
    for &p in parts {
        acc *= binomial(remaining as i64, p as i64);
        remaining -= p;
    }
    Ok(acc)
}

/// Möbius function: 1 at 1, 0 on non-squarefree inputs, `(-1)^r` for a
/// product of `r` distinct primes.
pub fn moebius(m: u64) -> Result<i32> {
    if m == 0 {
        return Err(Error::InvalidInput("moebius requires m >= 1".into()));
    }
    let mut m = m;
    let mut r = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            r += 1;
        }
        p += 1;
    }
    if m > 1 {
        r += 1;
    }
    Ok(if r % 2 == 0 { 1 } else { -1 })
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::InvalidInput("divisors requires m >= 1".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Least common multiple of a nonempty list of positive integers.
pub fn lcm_of(values: &[u64]) -> Result<Count> {
    if values.is_empty() {
        return Err(Error::InvalidInput("lcm_of requires a nonempty list".into()));
    }
    let mut acc = BigUint::one();
    for &v in values {
        if v == 0 {
            return Err(Error::InvalidInput("lcm_of requires positive entries".into()));
        }
        acc = acc.lcm(&BigUint::from(v));
    }
    Ok(acc)
}
