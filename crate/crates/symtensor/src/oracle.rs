//! Brute-force ground truth. Materializes `σ^⊙k` through the diagonal
//! action only — never the matrix entry formula — so that a failure here
//! and a failure there are independent evidence.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::compositions::Composition;
use crate::perm::{CycleCensus, Permutation};
use crate::spectral::root_of_unity;
use crate::tensor::sym_power_diagonal;
use crate::{Count, Error, Result, DEFAULT_COMPOSITION_CAP};

/// Full cycle census of one `σ^⊙k`, with its context.
#[derive(Debug, Clone)]
pub struct PowerCensus {
    n: usize,
    k: usize,
    sigma: Permutation,
    census: CycleCensus,
    total: Count,
}

impl PowerCensus {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn census(&self) -> &CycleCensus {
        &self.census
    }

    /// Number of compositions moved around: `binom(n+k-1, n-1)`.
    pub fn total(&self) -> &Count {
        &self.total
    }

    /// Census entry at length 1.
    pub fn fixed_points(&self) -> Count {
        Count::from(self.census.count(1))
    }
}

fn check_cap(n: usize, k: usize, cap: u64) -> Result<usize> {
    let total = crate::compositions::count(n, k);
    match total.to_u64() {
        Some(t) if t <= cap => Ok(t as usize),
        _ => Err(Error::CapExceeded { required: total.to_string(), cap }),
    }
}

/// Exact census of `σ^⊙k` under the default composition cap.
pub fn census_of_power(sigma: &Permutation, k: usize) -> Result<PowerCensus> {
    census_of_power_capped(sigma, k, DEFAULT_COMPOSITION_CAP)
}

pub fn census_of_power_capped(sigma: &Permutation, k: usize, cap: u64) -> Result<PowerCensus> {
    if k < 1 {
        return Err(Error::InvalidInput("power requires k >= 1".into()));
    }
    check_cap(sigma.n(), k, cap)?;
    let power = sym_power_diagonal(sigma, k)?;
    // Index-chasing over a visited bitmap: linear in the composition count.
    let total = power.n();
    let mut visited = vec![false; total];
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for start in 1..=total {
        if visited[start - 1] {
            continue;
        }
        visited[start - 1] = true;
        let mut len = 1;
        let mut cur = power.apply(start);
        while cur != start {
            visited[cur - 1] = true;
            len += 1;
            cur = power.apply(cur);
        }
        *counts.entry(len).or_insert(0) += 1;
    }
    Ok(PowerCensus {
        n: sigma.n(),
        k,
        sigma: sigma.clone(),
        census: CycleCensus::from_counts(counts),
        total: Count::from(total),
    })
}

/// Every composition fixed by `σ^⊙k`, in enumeration order.
pub fn fixed_compositions(sigma: &Permutation, k: usize) -> Result<Vec<Composition>> {
    fixed_compositions_capped(sigma, k, DEFAULT_COMPOSITION_CAP)
}

pub fn fixed_compositions_capped(
    sigma: &Permutation,
    k: usize,
    cap: u64,
) -> Result<Vec<Composition>> {
    if k < 1 {
        return Err(Error::InvalidInput("power requires k >= 1".into()));
    }
    check_cap(sigma.n(), k, cap)?;
    let power = sym_power_diagonal(sigma, k)?;
    let list = crate::compositions::enumerate(sigma.n(), k)?;
    Ok(list
        .into_iter()
        .enumerate()
        .filter(|(i, _)| power.apply(i + 1) == i + 1)
        .map(|(_, c)| c)
        .collect())
}

/// Verifies the explicit eigenvector construction: for each cycle
/// `(a_1 … a_ℓ)` and each `ℓ`-th root of unity `λ`, the vector with
/// `λ^{i-1}` at position `a_i` satisfies `A_σ v = λ v` to 1e-9.
pub fn eigenvector_check(sigma: &Permutation) -> Result<bool> {
    const TOLERANCE: f64 = 1e-9;
    let n = sigma.n();
    if n > 12 {
        return Err(Error::InvalidInput("eigenvector check is limited to n <= 12".into()));
    }
    for cycle in sigma.cycle_decomposition() {
        let len = cycle.len();
        for exp in 0..len {
            let lambda = root_of_unity(len, exp);
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            for (i, &point) in cycle.iter().enumerate() {
                v[point - 1] = lambda.powu(i as u32);
            }
            // (A_σ v)_i = v_{σ(i)}
            for i in 1..=n {
                let lhs = v[sigma.apply(i) - 1];
                let rhs = lambda * v[i - 1];
                if (lhs - rhs).norm() > TOLERANCE {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, None).unwrap()
    }

    #[test]
    fn census_of_squares_in_s3() {
        let pairs = |census: &CycleCensus| census.iter().collect::<Vec<_>>();
        assert_eq!(
            pairs(census_of_power(&p("321"), 2).unwrap().census()),
            vec![(1, 2), (2, 2)]
        );
        assert_eq!(
            pairs(census_of_power(&p("123"), 2).unwrap().census()),
            vec![(1, 6)]
        );
        assert_eq!(
            pairs(census_of_power(&p("231"), 2).unwrap().census()),
            vec![(3, 2)]
        );
    }

    #[test]
    fn cap_is_enforced_with_size_in_message() {
        let sigma = Permutation::identity(4);
        let err = census_of_power_capped(&sigma, 2, 5).unwrap_err();
        match err {
            Error::CapExceeded { required, cap } => {
                assert_eq!(required, "10");
                assert_eq!(cap, 5);
            }
            other => panic!("expected cap error, got {other}"),
        }
    }

    #[test]
    fn fixed_compositions_examples() {
        let fixed = fixed_compositions(&p("21"), 2).unwrap();
        let shown: Vec<String> = fixed.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["12"]);

        let fixed = fixed_compositions(&p("213"), 2).unwrap();
        let shown: Vec<String> = fixed.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["33", "12"]);

        assert_eq!(fixed_compositions(&p("123"), 2).unwrap().len(), 6);
    }

    #[test]
    fn fixed_count_matches_census() {
        for sigma in all_permutations(4) {
            for k in 1..=4 {
                let census = census_of_power(&sigma, k).unwrap();
                let fixed = fixed_compositions(&sigma, k).unwrap();
                assert_eq!(Count::from(fixed.len()), census.fixed_points());
            }
        }
    }

    #[test]
    fn census_totals_and_divisibility() {
        for sigma in all_permutations(5) {
            let order = sigma.order();
            for k in 1..=3 {
                let pc = census_of_power(&sigma, k).unwrap();
                let weighted: usize = pc.census().iter().map(|(l, c)| l * c).sum();
                assert_eq!(&Count::from(weighted), pc.total());
                for (len, _) in pc.census().iter() {
                    assert!(
                        (&order % Count::from(len)).to_u64() == Some(0),
                        "cycle length {len} does not divide ord(σ) for {sigma}"
                    );
                }
            }
        }
    }

    #[test]
    fn eigenvector_check_examples() {
        assert!(eigenvector_check(&Permutation::parse("(5 1 6 2)(4 3 7 8 10 9)", None).unwrap())
            .unwrap());
        assert!(eigenvector_check(&Permutation::identity(4)).unwrap());
        assert!(eigenvector_check(&p("231")).unwrap());
        assert!(eigenvector_check(&Permutation::identity(13)).is_err());
    }
}
