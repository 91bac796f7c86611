//! Eigenvalues of permutation matrices and the trace route to fixed-point
//! counts: the trace of the k-th symmetric tensor power equals the
//! complete homogeneous symmetric polynomial `h_k` evaluated at the
//! eigenvalues, and those are roots of unity read off the cycle type.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::perm::{CycleCensus, Permutation};
use crate::{Count, Error, Result};

/// Largest `n` and `k` the floating-point trace route accepts; beyond this
/// double precision is not trusted.
pub const SPECTRAL_LIMIT: usize = 30;

/// Tolerance on the imaginary part and on the distance to the nearest
/// integer when rounding the trace.
pub const ROUNDING_TOLERANCE: f64 = 1e-6;

/// Multiset of roots of unity, kept symbolic as (cycle length, exponent)
/// pairs denoting `e^{2πi·exponent/length}`; repetition encodes
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenMultiset {
    entries: Vec<(usize, usize)>,
}

impl EigenMultiset {
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.entries
            .iter()
            .map(|&(len, exp)| root_of_unity(len, exp))
            .collect()
    }
}

pub fn root_of_unity(len: usize, exp: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * exp as f64 / len as f64)
}

/// Each cycle of length `ℓ` contributes the `ℓ`-th roots of unity, one
/// each; the whole spectrum is determined by the cycle type.
pub fn eigenvalues(census: &CycleCensus) -> EigenMultiset {
    let mut entries = Vec::with_capacity(census.degree());
    for (len, count) in census.iter() {
        for _ in 0..count {
            for exp in 0..len {
                entries.push((len, exp));
            }
        }
    }
    EigenMultiset { entries }
}

/// `h_k` of the given values: the sum of all degree-k monomials. Computed
/// by absorbing one variable at a time into a running array, so each
/// prefix satisfies the one-variable peel-off recursion.
pub fn h_eval(k: usize, values: &[Complex64]) -> Complex64 {
    let mut h = vec![Complex64::new(0.0, 0.0); k + 1];
    h[0] = Complex64::new(1.0, 0.0);
    for &x in values {
        for j in 1..=k {
            let inc = x * h[j - 1];
            h[j] += inc;
        }
    }
    h[k]
}

/// Fixed points of `σ^⊙k` as the rounded trace `h_k(eigenvalues)`.
/// Errors when `n` or `k` exceeds [`SPECTRAL_LIMIT`] or the residuals
/// exceed [`ROUNDING_TOLERANCE`]: at that point the double-precision
/// route has broken down.
pub fn fix_count_spectral(sigma: &Permutation, k: usize) -> Result<Count> {
    if k < 1 {
        return Err(Error::InvalidInput("spectral count requires k >= 1".into()));
    }
    if sigma.n() > SPECTRAL_LIMIT || k > SPECTRAL_LIMIT {
        return Err(Error::InvalidInput(format!(
            "spectral route is limited to n <= {SPECTRAL_LIMIT} and k <= {SPECTRAL_LIMIT}"
        )));
    }
    let census = sigma.cycle_census();
    let value = h_eval(k, &eigenvalues(&census).to_complex());
    if value.im.abs() > ROUNDING_TOLERANCE {
        return Err(Error::Precision(format!(
            "trace has imaginary part {} beyond {ROUNDING_TOLERANCE}",
            value.im
        )));
    }
    let rounded = value.re.round();
    if (value.re - rounded).abs() > ROUNDING_TOLERANCE {
        return Err(Error::Precision(format!(
            "trace {} is not within {ROUNDING_TOLERANCE} of an integer",
            value.re
        )));
    }
    if rounded < 0.0 {
        return Err(Error::Precision(format!("trace rounded to negative {rounded}")));
    }
    Ok(Count::from(rounded.to_u64().ok_or_else(|| {
        Error::Precision(format!("trace {rounded} too large to round exactly"))
    })?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, None).unwrap()
    }

    #[test]
    fn eigenvalues_of_two_cycles() {
        // One 4-cycle and one 6-cycle on ten points: 1 and -1 twice each,
        // the remaining primitive roots once each.
        let sigma = Permutation::parse("(5 1 6 2)(4 3 7 8 10 9)", None).unwrap();
        let eigen = eigenvalues(&sigma.cycle_census());
        assert_eq!(eigen.len(), 10);
        let values = eigen.to_complex();
        let count_near = |target: Complex64| {
            values.iter().filter(|v| (*v - target).norm() < 1e-12).count()
        };
        assert_eq!(count_near(Complex64::new(1.0, 0.0)), 2);
        assert_eq!(count_near(Complex64::new(-1.0, 0.0)), 2);
        assert_eq!(count_near(root_of_unity(4, 1)), 1);
        assert_eq!(count_near(root_of_unity(6, 1)), 1);
    }

    #[test]
    fn eigenvalues_of_identity() {
        let eigen = eigenvalues(&Permutation::identity(5).cycle_census());
        assert!(eigen.to_complex().iter().all(|v| (v - 1.0).norm() < 1e-12));
        assert_eq!(eigen.len(), 5);
    }

    #[test]
    fn eigenvalues_of_transposition_plus_fixed_point() {
        let eigen = eigenvalues(&p("213").cycle_census());
        let values = eigen.to_complex();
        let ones = values.iter().filter(|v| (*v - 1.0).norm() < 1e-12).count();
        let neg = values.iter().filter(|v| (*v + 1.0).norm() < 1e-12).count();
        assert_eq!((ones, neg), (2, 1));
    }

    #[test]
    fn h_eval_examples() {
        let one = Complex64::new(1.0, 0.0);
        assert!((h_eval(2, &[one, one, one]).re - 6.0).abs() < 1e-12);
        assert!((h_eval(0, &[]).re - 1.0).abs() < 1e-12);
        assert!(h_eval(3, &[]).norm() < 1e-12);
        assert!((h_eval(2, &[one, one, -one]).re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn h_eval_peel_off_recursion() {
        // h_k(x) = h_k(x without x_l) + x_l · h_{k-1}(x), on deterministic
        // complex inputs.
        let xs: Vec<Complex64> = (0..6)
            .map(|i| Complex64::new(0.3 + 0.1 * i as f64, 0.2 - 0.05 * i as f64))
            .collect();
        for k in 1..=8 {
            for l in 0..xs.len() {
                let mut without = xs.clone();
                let xl = without.remove(l);
                let lhs = h_eval(k, &xs);
                let rhs = h_eval(k, &without) + xl * h_eval(k - 1, &xs);
                assert!((lhs - rhs).norm() < 1e-9, "recursion failed at k={k} l={l}");
            }
        }
    }

    #[test]
    fn h_at_full_root_orbit_vanishes_unless_divisible() {
        // Multiplying all ℓ-th roots by a primitive root permutes them, so
        // h_k at the full orbit is 0 unless ℓ | k, when it is 1.
        for len in 1..=8 {
            let roots: Vec<Complex64> = (0..len).map(|e| root_of_unity(len, e)).collect();
            for k in 1..=24 {
                let v = h_eval(k, &roots);
                if k % len == 0 {
                    assert!((v - 1.0).norm() < 1e-9, "expected 1 at len={len} k={k}, got {v}");
                } else {
                    assert!(v.norm() < 1e-9, "expected 0 at len={len} k={k}, got {v}");
                }
            }
        }
    }

    #[test]
    fn spectral_fix_counts() {
        assert_eq!(fix_count_spectral(&p("312"), 2).unwrap(), Count::from(0u32));
        assert_eq!(
            fix_count_spectral(&Permutation::identity(3), 2).unwrap(),
            Count::from(6u32)
        );
        assert_eq!(fix_count_spectral(&p("321"), 2).unwrap(), Count::from(2u32));
    }

    #[test]
    fn spectral_guard_rejects_large_sizes() {
        let sigma = Permutation::identity(31);
        assert!(fix_count_spectral(&sigma, 2).is_err());
        assert!(fix_count_spectral(&p("312"), 31).is_err());
    }
}
