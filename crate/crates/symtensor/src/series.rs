//! Truncated bivariate generating function for the s-cycle counts.
//!
//! With `F(x, y) = Σ C(ℓ, s; n, k) x^n y^k`, splitting off the `n = ℓ`
//! column series `A` and the `k = 1` row series `B` and applying the
//! two-direction recursion gives
//! `F = (A(1-y) + B(1-x) - [s=ℓ] x^ℓ y) / (1 - x - y)`.
//! `A` comes from Möbius inversion as
//! `(x^ℓ/s) Σ_{e|s} μ(s/e) (1/(1-y^{ℓ/e})^e - 1)` (zero unless `s | ℓ`),
//! and `B` is `x^ℓ y/(1-x)` for `s = ℓ` plus `x^{ℓ+1} y/(1-x)^2` for
//! `s = 1`. The division by `1 - x - y` is the linear coefficient
//! recurrence, so everything stays exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::combinatorics::{binomial, divisors, moebius};
use crate::{Error, Result};

/// Integer-coefficient power series in x and y, truncated to total
/// bounds; coefficient of `x^n y^k` lives at `(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    n_bound: usize,
    k_bound: usize,
    grid: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn n_bound(&self) -> usize {
        self.n_bound
    }

    pub fn k_bound(&self) -> usize {
        self.k_bound
    }

    /// Coefficient of `x^n y^k`; `None` outside the truncation bounds.
    pub fn coefficient(&self, n: usize, k: usize) -> Option<&BigInt> {
        if n > self.n_bound || k > self.k_bound {
            return None;
        }
        Some(&self.grid[n][k])
    }
}

/// Expands the s-cycle generating function to the given bounds. The
/// coefficient of `x^n y^k` equals `C(ℓ, s; n, k)` for every in-bounds
/// pair with `n >= ℓ`, `k >= 1`.
pub fn series_expand(s: usize, ell: usize, n_bound: usize, k_bound: usize) -> Result<BivariateSeries> {
    if ell < 1 || s < 1 || s > ell {
        return Err(Error::InvalidInput(format!(
            "series needs 1 <= s <= ell, got s={s} ell={ell}"
        )));
    }
    if n_bound < ell || k_bound < 1 {
        return Err(Error::InvalidInput(format!(
            "bounds must cover the first terms: need n_bound >= {ell} and k_bound >= 1"
        )));
    }

    // Column series at n = ℓ, as coefficients of y^k.
    let mut a = vec![BigInt::zero(); k_bound + 1];
    if ell % s == 0 {
        for e in divisors(s as u64).expect("s >= 1") {
            let e = e as usize;
            let mu = moebius((s / e) as u64).expect("s/e >= 1");
            if mu == 0 {
                continue;
            }
            let step = ell / e;
            let mut m = 1;
            while m * step <= k_bound {
                let term = BigInt::from(binomial((e + m - 1) as i64, (e - 1) as i64)) * mu;
                a[m * step] += term;
                m += 1;
            }
        }
        for (k, coeff) in a.iter_mut().enumerate() {
            let (q, r) = coeff.div_rem(&BigInt::from(s as u64));
            assert!(r.is_zero(), "column series coefficient at k={k} not divisible by {s}");
            *coeff = q;
        }
    }

    // Row series at k = 1, as coefficients of x^n.
    let mut b = vec![BigInt::zero(); n_bound + 1];
    if s == ell {
        for item in b.iter_mut().skip(ell) {
            *item += 1;
        }
    }
    if s == 1 {
        for (n, item) in b.iter_mut().enumerate().skip(ell + 1) {
            *item += BigInt::from((n - ell) as u64);
        }
    }

    // Numerator A(1-y) + B(1-x) - [s=ℓ] x^ℓ y, then divide by 1 - x - y
    // via c[n][k] = t[n][k] + c[n-1][k] + c[n][k-1].
    let mut grid = vec![vec![BigInt::zero(); k_bound + 1]; n_bound + 1];
    for k in 1..=k_bound {
        grid[ell][k] = &a[k] - &a[k - 1];
    }
    for n in 1..=n_bound {
        let dec = &b[n] - &b[n - 1];
        grid[n][1] += dec;
    }
    if s == ell {
        grid[ell][1] -= 1;
    }
    for n in 0..=n_bound {
        for k in 0..=k_bound {
            if n > 0 {
                let prev = grid[n - 1][k].clone();
                grid[n][k] += prev;
            }
            if k > 0 {
                let prev = grid[n][k - 1].clone();
                grid[n][k] += prev;
            }
        }
    }
    debug_assert!(
        grid.iter().flatten().all(|v| !v.is_negative()),
        "series produced a negative count"
    );
    Ok(BivariateSeries { n_bound, k_bound, grid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::s_cycles_recursive;

    #[test]
    fn coefficients_match_recursion() {
        for ell in 1..=6 {
            for s in 1..=ell {
                let series = series_expand(s, ell, 12, 12).unwrap();
                for n in ell..=12 {
                    for k in 1..=12 {
                        assert_eq!(
                            series.coefficient(n, k).unwrap(),
                            &BigInt::from(s_cycles_recursive(ell, s, n, k).unwrap()),
                            "mismatch at ell={ell} s={s} n={n} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn single_cell_examples() {
        let series = series_expand(1, 3, 6, 4).unwrap();
        assert_eq!(series.coefficient(4, 2).unwrap(), &BigInt::from(1));
        let series = series_expand(3, 3, 3, 1).unwrap();
        assert_eq!(series.coefficient(3, 1).unwrap(), &BigInt::from(1));
    }

    #[test]
    fn six_cycle_column_cells() {
        let series = series_expand(6, 6, 11, 9).unwrap();
        assert_eq!(series.coefficient(6, 2).unwrap(), &BigInt::from(3));
        assert_eq!(series.coefficient(11, 9).unwrap(), &BigInt::from(14833));
    }

    #[test]
    fn zero_below_the_support() {
        let series = series_expand(2, 3, 8, 8).unwrap();
        for n in 0..=8 {
            for k in 0..=8 {
                assert_eq!(series.coefficient(n, k).unwrap(), &BigInt::zero());
            }
        }
        let series = series_expand(1, 2, 6, 6).unwrap();
        assert_eq!(series.coefficient(1, 1), Some(&BigInt::zero()));
        assert_eq!(series.coefficient(7, 1), None);
    }

    #[test]
    fn rejects_undersized_bounds() {
        assert!(series_expand(2, 4, 3, 5).is_err());
        assert!(series_expand(2, 4, 5, 0).is_err());
        assert!(series_expand(5, 4, 9, 9).is_err());
    }
}
