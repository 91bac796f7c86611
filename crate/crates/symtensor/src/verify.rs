//! Self-checking suites: every module's invariants wired into named
//! checks that report a pass or the first counterexample. The CLI
//! `verify` command runs these; the integration tests assert them too.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::combinatorics::{binomial, divisors, moebius, multinomial};
use crate::compositions::{self, order_cmp, CompositionIndex};
use crate::counting::{
    divisor_identity_check, fix_general, fix_involution, fix_recursive,
    fix_transposition_alternating, s_cycles_closed_form, s_cycles_recursive, SCycleTable,
};
use crate::oracle::{census_of_power, eigenvector_check, fixed_compositions};
use crate::perm::{all_permutations, Permutation};
use crate::series::series_expand;
use crate::spectral::{eigenvalues, fix_count_spectral, h_eval, root_of_unity};
use crate::tensor::{extract_permutation, sym_power_diagonal, sym_power_matrix, DenseMatrix};
use crate::Count;

/// Scale of a verification run. Quick caps the sweeps at n <= 4, k <= 3
/// and skips the reference-table comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    /// First counterexample, when the suite failed.
    pub detail: Option<String>,
}

// Offset added to one expected value so the failure path of the harness
// can be demonstrated; zero in any real build.
#[cfg(feature = "fault-inject")]
const INJECTED_ERROR: u64 = 1;
#[cfg(not(feature = "fault-inject"))]
const INJECTED_ERROR: u64 = 0;

type Check = fn(Level) -> Result<(), String>;

const SUITES: &[(&str, Check, bool)] = &[
    // (name, check, full-level only)
    ("binomial pascal rule", check_pascal, false),
    ("multinomial factorization", check_multinomial, false),
    ("moebius divisor sums", check_moebius, false),
    ("divisor lists", check_divisors, false),
    ("composition enumeration size", check_enumeration_size, false),
    ("composition rank round-trip", check_rank_round_trip, false),
    ("composition order is a total order", check_total_order, false),
    ("orbit sizes partition the cube", check_orbit_partition, false),
    ("cycle census degree", check_census_degree, false),
    ("permutation power order", check_power_order, false),
    ("matrix composition convention", check_matrix_homomorphism, false),
    ("tensor power cross-method equality", check_cross_method, false),
    ("tensor power order preservation", check_order_preservation, false),
    ("tensor power homomorphism", check_tensor_homomorphism, false),
    ("tensor power dimension", check_dimension, false),
    ("homogeneous polynomial peel-off recursion", check_h_recursion, false),
    ("root orbit shift identity", check_shift_identity, false),
    ("spectral count vs oracle", check_spectral_vs_oracle, false),
    ("involution fixed-point formulas agree", check_involution_agreement, false),
    ("general fixed-point formula specializes", check_fix_specialization, false),
    ("s-cycle closed form vs recursion", check_closed_vs_recursive, false),
    ("divisor-sum identity", check_divisor_identity, false),
    ("census conservation", check_census_conservation, false),
    ("series coefficients vs recursion", check_series_vs_recursion, false),
    ("counting formulas vs oracle", check_formulas_vs_oracle, false),
    ("eigenvector construction", check_eigenvectors, false),
    ("conjugation invariance of the census", check_conjugation_invariance, false),
    ("reference table: squares over three points", check_reference_squares, true),
    ("reference table: six-cycle counts", check_reference_six_cycle, true),
];

/// Runs every suite applicable at `level`, in order.
pub fn run_all(level: Level) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .filter(|(_, _, full_only)| !full_only || level == Level::Full)
        .map(|(name, check, _)| match check(level) {
            Ok(()) => SuiteReport { name, passed: true, detail: None },
            Err(detail) => SuiteReport { name, passed: false, detail: Some(detail) },
        })
        .collect()
}

/// All squares of permutations on three points with their cycle forms:
/// (one-line input, one-line of the square power, its cycle form).
pub const SQUARES_ON_THREE_POINTS: &[(&str, &str, &str)] = &[
    ("1 2 3", "1 2 3 4 5 6", "(1)(2)(3)(4)(5)(6)"),
    ("1 3 2", "1 3 2 5 4 6", "(1)(2 3)(4 5)(6)"),
    ("2 1 3", "2 1 3 4 6 5", "(1 2)(3)(4)(5 6)"),
    ("2 3 1", "2 3 1 6 4 5", "(1 2 3)(4 6 5)"),
    ("3 1 2", "3 1 2 5 6 4", "(1 3 2)(4 5 6)"),
    ("3 2 1", "3 2 1 6 5 4", "(1 3)(2)(4 6)(5)"),
];

/// Reference grid of six-cycle counts `C(6, 6; n, k)` for n = 6..11
/// (rows) and k = 1..9 (columns).
pub const SIX_CYCLE_GRID: [[u64; 9]; 6] = [
    [1, 3, 9, 20, 42, 75, 132, 212, 333],
    [1, 4, 13, 33, 75, 150, 282, 494, 827],
    [1, 5, 18, 51, 126, 276, 558, 1052, 1879],
    [1, 6, 24, 75, 201, 477, 1035, 2087, 3966],
    [1, 7, 31, 106, 307, 784, 1819, 3906, 7872],
    [1, 8, 39, 145, 452, 1236, 3055, 6961, 14833],
];

fn first_failure<T, F>(items: &[T], check: F) -> Result<(), String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let found = items.par_iter().find_map_first(|item| check(item));
    #[cfg(not(feature = "parallel"))]
    let found = items.iter().find_map(|item| check(item));
    match found {
        None => Ok(()),
        Some(detail) => Err(detail),
    }
}

fn check_pascal(_: Level) -> Result<(), String> {
    for a in 0..=30i64 {
        for b in 0..=a {
            let lhs = binomial(a, b) + binomial(a, b + 1);
            let rhs = binomial(a + 1, b + 1) + Count::from(INJECTED_ERROR);
            if lhs != rhs {
                return Err(format!("binomial({a},{b}) + binomial({a},{}) != binomial({},{})", b + 1, a + 1, b + 1));
            }
        }
    }
    Ok(())
}

fn check_multinomial(_: Level) -> Result<(), String> {
    // Against the chain of binomials over partial sums, on every
    // composition of k into at most 5 parts.
    for k in 1..=10usize {
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(parts) = stack.pop() {
            let used: usize = parts.iter().sum();
            if parts.len() == 5 || used == k {
                if used != k {
                    continue;
                }
                let direct = multinomial(k, &parts).expect("parts sum to k");
                let mut chained = Count::from(1u32);
                let mut rem = k;
                for &p in &parts {
                    chained *= binomial(rem as i64, p as i64);
                    rem -= p;
                }
                if direct != chained {
                    return Err(format!("multinomial({k}, {parts:?}) disagrees with binomial chain"));
                }
                continue;
            }
            for next in 0..=(k - used) {
                let mut ext = parts.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    Ok(())
}

fn check_moebius(_: Level) -> Result<(), String> {
    for m in 1..=1000u64 {
        let total: i32 = divisors(m)
            .expect("m >= 1")
            .iter()
            .map(|&d| moebius(d).expect("d >= 1"))
            .sum();
        let expected = i32::from(m == 1);
        if total != expected {
            return Err(format!("sum of moebius over divisors of {m} is {total}, expected {expected}"));
        }
    }
    Ok(())
}

fn check_divisors(_: Level) -> Result<(), String> {
    for m in 1..=500u64 {
        let list = divisors(m).expect("m >= 1");
        for pair in list.windows(2) {
            if pair[0] >= pair[1] {
                return Err(format!("divisors({m}) not strictly ascending: {list:?}"));
            }
        }
        if let Some(&bad) = list.iter().find(|&&d| m % d != 0) {
            return Err(format!("divisors({m}) contains non-divisor {bad}"));
        }
    }
    Ok(())
}

fn caps(level: Level, full_n: usize, full_k: usize) -> (usize, usize) {
    match level {
        Level::Quick => (full_n.min(4), full_k.min(3)),
        Level::Full => (full_n, full_k),
    }
}

fn check_enumeration_size(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 8, 8);
    for n in 1..=n_cap {
        for k in 1..=k_cap {
            let list = compositions::enumerate(n, k).expect("valid sizes");
            if Count::from(list.len()) != compositions::count(n, k) {
                return Err(format!("|C({n},{k})| = {} differs from the binomial", list.len()));
            }
        }
    }
    Ok(())
}

fn check_rank_round_trip(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 8, 8);
    for n in 1..=n_cap {
        for k in 1..=k_cap {
            let index = CompositionIndex::new(n, k).expect("valid sizes");
            for i in 1..=index.len() {
                let c = index.get(i).expect("in range");
                let back = index.rank(c).expect("member");
                if back != i {
                    return Err(format!("rank(unrank({n},{k},{i})) = {back}"));
                }
            }
        }
    }
    Ok(())
}

fn check_total_order(level: Level) -> Result<(), String> {
    let (n, k) = match level {
        Level::Quick => (4, 3),
        Level::Full => (5, 4),
    };
    let list = compositions::enumerate(n, k).expect("valid sizes");
    use std::cmp::Ordering;
    for a in &list {
        for b in &list {
            let ab = order_cmp(a, b);
            let ba = order_cmp(b, a);
            if ab.reverse() != ba {
                return Err(format!("comparator not antisymmetric on {a}, {b}"));
            }
            if ab == Ordering::Equal && a != b {
                return Err(format!("distinct compositions {a}, {b} compare equal"));
            }
        }
    }
    for a in &list {
        for b in &list {
            for c in &list {
                if order_cmp(a, b) != Ordering::Greater
                    && order_cmp(b, c) != Ordering::Greater
                    && order_cmp(a, c) == Ordering::Greater
                {
                    return Err(format!("comparator not transitive on {a}, {b}, {c}"));
                }
            }
        }
    }
    Ok(())
}

fn check_orbit_partition(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 6, 6);
    for n in 1..=n_cap {
        for k in 1..=k_cap {
            let mut total = Count::zero();
            for c in compositions::enumerate(n, k).expect("valid sizes") {
                total += c.orbit_size();
            }
            let cube = Count::from(n).pow(k as u32);
            if total != cube {
                return Err(format!("orbit sizes over C({n},{k}) sum to {total}, expected {n}^{k}"));
            }
        }
    }
    Ok(())
}

fn check_census_degree(level: Level) -> Result<(), String> {
    let (n_cap, _) = caps(level, 6, 1);
    for n in 1..=n_cap {
        for sigma in all_permutations(n) {
            if sigma.cycle_census().degree() != n {
                return Err(format!("census of {sigma} does not cover {n} points"));
            }
        }
    }
    Ok(())
}

fn check_power_order(level: Level) -> Result<(), String> {
    let (n_cap, _) = caps(level, 5, 1);
    for sigma in all_permutations(n_cap) {
        let order = sigma.order().to_usize().expect("small order");
        if !sigma.power(order).is_identity() {
            return Err(format!("{sigma} to the power {order} is not the identity"));
        }
        for p in 1..order {
            if sigma.power(p).is_identity() {
                return Err(format!("{sigma} already trivial at power {p} < {order}"));
            }
        }
    }
    Ok(())
}

fn check_matrix_homomorphism(level: Level) -> Result<(), String> {
    let (n_cap, _) = caps(level, 4, 1);
    let perms = all_permutations(n_cap);
    for sigma in &perms {
        for tau in &perms {
            let composed = sigma.compose(tau).expect("same size").to_matrix();
            // Row action reverses the order under the standard product.
            let product = tau.to_matrix().matmul(&sigma.to_matrix()).expect("same size");
            if composed != product {
                return Err(format!("matrix convention broken for σ={sigma}, τ={tau}"));
            }
        }
    }
    Ok(())
}

fn check_cross_method(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 4, 3);
    for n in 1..=n_cap {
        let perms = all_permutations(n);
        first_failure(&perms, |sigma| {
            for k in 1..=k_cap {
                let direct = sym_power_diagonal(sigma, k).expect("small sizes");
                let via_matrix = sym_power_matrix(&DenseMatrix::from_permutation(sigma), k)
                    .and_then(|m| extract_permutation(&m));
                match via_matrix {
                    Ok(p) if p == direct => {}
                    Ok(p) => {
                        return Some(format!(
                            "σ={sigma} k={k}: matrix route {p} vs diagonal {direct}"
                        ))
                    }
                    Err(e) => return Some(format!("σ={sigma} k={k}: matrix route failed: {e}")),
                }
            }
            None
        })?;
    }
    Ok(())
}

fn check_order_preservation(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 5, 4);
    let perms = all_permutations(n_cap);
    first_failure(&perms, |sigma| {
        for k in 1..=k_cap {
            let power = sym_power_diagonal(sigma, k).expect("small sizes");
            if power.order() != sigma.order() {
                return Some(format!(
                    "ord changed: σ={sigma} has {}, its {k}-power has {}",
                    sigma.order(),
                    power.order()
                ));
            }
        }
        None
    })
}

fn check_tensor_homomorphism(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 3, 3);
    let perms = all_permutations(n_cap);
    for sigma in &perms {
        for tau in &perms {
            for k in 1..=k_cap {
                let lhs = sym_power_diagonal(&sigma.compose(tau).expect("same size"), k)
                    .expect("small sizes");
                let rhs = sym_power_diagonal(sigma, k)
                    .expect("small sizes")
                    .compose(&sym_power_diagonal(tau, k).expect("small sizes"))
                    .expect("same size");
                if lhs != rhs {
                    return Err(format!("power of composition broke at σ={sigma}, τ={tau}, k={k}"));
                }
            }
        }
    }
    Ok(())
}

fn check_dimension(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 5, 4);
    for n in 1..=n_cap {
        let sigma = Permutation::identity(n);
        for k in 1..=k_cap {
            let power = sym_power_diagonal(&sigma, k).expect("small sizes");
            if Count::from(power.n()) != compositions::count(n, k) {
                return Err(format!("power of identity on {n} points has size {}", power.n()));
            }
        }
    }
    Ok(())
}

fn check_h_recursion(_: Level) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x5EED_0001);
    for n in 1..=8usize {
        let xs: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        for k in 1..=10 {
            for l in 0..n {
                let mut without = xs.clone();
                let xl = without.remove(l);
                let lhs = h_eval(k, &xs);
                let rhs = h_eval(k, &without) + xl * h_eval(k - 1, &xs);
                if (lhs - rhs).norm() >= 1e-9 {
                    return Err(format!("peel-off recursion off by {} at n={n} k={k} l={l}", (lhs - rhs).norm()));
                }
            }
        }
    }
    Ok(())
}

fn check_shift_identity(_: Level) -> Result<(), String> {
    for len in 1..=8usize {
        let roots: Vec<Complex64> = (0..len).map(|e| root_of_unity(len, e)).collect();
        for k in 1..=24 {
            let v = h_eval(k, &roots);
            let residual = if k % len == 0 { (v - 1.0).norm() } else { v.norm() };
            if residual >= 1e-9 {
                return Err(format!("shift identity residual {residual} at len={len} k={k}"));
            }
        }
    }
    Ok(())
}

fn check_spectral_vs_oracle(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 5, 4);
    let perms = all_permutations(n_cap);
    first_failure(&perms, |sigma| {
        for k in 1..=k_cap {
            let spectral = match fix_count_spectral(sigma, k) {
                Ok(v) => v,
                Err(e) => return Some(format!("spectral route failed at σ={sigma} k={k}: {e}")),
            };
            let oracle = census_of_power(sigma, k).expect("small sizes").fixed_points();
            if spectral != oracle {
                return Some(format!("σ={sigma} k={k}: spectral {spectral} vs oracle {oracle}"));
            }
        }
        None
    })
}

fn check_involution_agreement(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 10, 10);
    for n in 2..=n_cap {
        for k in 1..=k_cap {
            let a = fix_involution(n, k, 1).expect("valid range");
            let b = fix_transposition_alternating(n, k).expect("valid range");
            if a != b {
                return Err(format!("transposition fix counts disagree at n={n} k={k}: {a} vs {b}"));
            }
        }
    }
    Ok(())
}

fn check_fix_specialization(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 10, 8);
    let ell_cap = match level {
        Level::Quick => 4,
        Level::Full => 6,
    };
    for ell in 2..=ell_cap.min(n_cap) {
        for n in ell..=n_cap {
            for k in 1..=k_cap {
                let mut counts = std::collections::BTreeMap::new();
                counts.insert(ell, 1);
                if n > ell {
                    counts.insert(1, n - ell);
                }
                let census = crate::perm::CycleCensus::from_counts(counts);
                let general = fix_general(&census, n, k).expect("consistent census");
                let single = fix_recursive(ell, n, k).expect("valid range");
                if general != single {
                    return Err(format!("fix formulas disagree at ell={ell} n={n} k={k}: {general} vs {single}"));
                }
            }
        }
    }
    Ok(())
}

fn check_closed_vs_recursive(level: Level) -> Result<(), String> {
    let (ell_cap, n_cap, k_cap) = match level {
        Level::Quick => (4, 4, 3),
        Level::Full => (8, 12, 12),
    };
    for ell in 2..=ell_cap {
        for s in 1..=ell {
            let table = SCycleTable::new(ell, s, n_cap.max(ell), k_cap).expect("valid bounds");
            for n in ell..=n_cap.max(ell) {
                for k in 1..=k_cap {
                    let closed = s_cycles_closed_form(ell, s, n, k).expect("valid range");
                    let recursive = table.get(n, k).expect("in bounds");
                    if &closed != recursive {
                        return Err(format!(
                            "s-cycle routes disagree at ell={ell} s={s} n={n} k={k}: {closed} vs {recursive}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_divisor_identity(level: Level) -> Result<(), String> {
    let (ell_cap, k_cap) = match level {
        Level::Quick => (4, 3),
        Level::Full => (10, 12),
    };
    for ell in 2..=ell_cap {
        for s in 1..=ell {
            for k in 1..=k_cap {
                if !divisor_identity_check(ell, s, k).expect("valid range") {
                    return Err(format!("divisor-sum identity failed at ell={ell} s={s} k={k}"));
                }
            }
        }
    }
    Ok(())
}

fn check_census_conservation(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 10, 8);
    let ell_cap = match level {
        Level::Quick => 4,
        Level::Full => 6,
    };
    for ell in 1..=ell_cap.min(n_cap) {
        for n in ell..=n_cap {
            for k in 1..=k_cap {
                let mut weighted = Count::zero();
                for s in 1..=ell {
                    weighted += s_cycles_recursive(ell, s, n, k).expect("valid range") * Count::from(s);
                }
                let total = compositions::count(n, k);
                if weighted != total {
                    return Err(format!(
                        "weighted cycle counts at ell={ell} n={n} k={k} sum to {weighted}, expected {total}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_series_vs_recursion(level: Level) -> Result<(), String> {
    let (ell_cap, bound) = match level {
        Level::Quick => (4, 6),
        Level::Full => (6, 12),
    };
    for ell in 1..=ell_cap {
        for s in 1..=ell {
            let series = series_expand(s, ell, bound, bound).expect("valid bounds");
            for n in ell..=bound {
                for k in 1..=bound {
                    let from_series = series.coefficient(n, k).expect("in bounds");
                    let direct = BigInt::from(s_cycles_recursive(ell, s, n, k).expect("valid range"));
                    if from_series != &direct {
                        return Err(format!(
                            "series coefficient at ell={ell} s={s} n={n} k={k} is {from_series}, recursion gives {direct}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_formulas_vs_oracle(level: Level) -> Result<(), String> {
    let (n_cap, k_cap) = caps(level, 6, 4);
    for n in 1..=n_cap {
        let perms = all_permutations(n);
        first_failure(&perms, |sigma| {
            let census = sigma.cycle_census();
            for k in 1..=k_cap {
                let power = census_of_power(sigma, k).expect("small sizes");
                let fixed = fix_general(&census, n, k).expect("consistent census");
                if fixed != power.fixed_points() {
                    return Some(format!(
                        "fix formula at σ={sigma} k={k} gives {fixed}, oracle {}",
                        power.fixed_points()
                    ));
                }
                if let Some(ell) = census.single_nontrivial_length() {
                    for s in 1..=ell {
                        let predicted = s_cycles_recursive(ell, s, n, k).expect("valid range");
                        let actual = Count::from(power.census().count(s));
                        if predicted != actual {
                            return Some(format!(
                                "s-cycle recursion at σ={sigma} s={s} k={k} gives {predicted}, oracle {actual}"
                            ));
                        }
                    }
                }
                // Involutions also go through the dedicated closed form.
                if census.iter().all(|(l, _)| l <= 2) {
                    let r = census.count(2);
                    if r >= 1 {
                        let predicted = fix_involution(n, k, r).expect("valid range");
                        if predicted != power.fixed_points() {
                            return Some(format!(
                                "involution formula at σ={sigma} k={k} gives {predicted}, oracle {}",
                                power.fixed_points()
                            ));
                        }
                    }
                }
                let listed = fixed_compositions(sigma, k).expect("small sizes");
                if Count::from(listed.len()) != power.fixed_points() {
                    return Some(format!(
                        "fixed composition list at σ={sigma} k={k} has {} entries, census says {}",
                        listed.len(),
                        power.fixed_points()
                    ));
                }
            }
            None
        })?;
    }
    Ok(())
}

fn check_eigenvectors(level: Level) -> Result<(), String> {
    let (n_cap, _) = caps(level, 5, 1);
    for n in 1..=n_cap {
        for sigma in all_permutations(n) {
            if !eigenvector_check(&sigma).expect("n <= 12") {
                return Err(format!("eigenvector construction failed for {sigma}"));
            }
        }
    }
    let long = Permutation::parse("(5 1 6 2)(4 3 7 8 10 9)", None).expect("valid cycles");
    if !eigenvector_check(&long).expect("n <= 12") {
        return Err("eigenvector construction failed on the ten-point example".into());
    }
    Ok(())
}

fn check_conjugation_invariance(level: Level) -> Result<(), String> {
    let (n, k_cap) = caps(level, 5, 3);
    let mut rng = StdRng::seed_from_u64(0x5EED_0002);
    for _ in 0..20 {
        let mut sigma_image: Vec<usize> = (1..=n).collect();
        let mut tau_image: Vec<usize> = (1..=n).collect();
        sigma_image.shuffle(&mut rng);
        tau_image.shuffle(&mut rng);
        let sigma = Permutation::from_image(sigma_image).expect("shuffle is a bijection");
        let tau = Permutation::from_image(tau_image).expect("shuffle is a bijection");
        let conjugated = tau
            .compose(&sigma)
            .expect("same size")
            .compose(&tau.inverse())
            .expect("same size");
        for k in 1..=k_cap {
            let a = census_of_power(&sigma, k).expect("small sizes");
            let b = census_of_power(&conjugated, k).expect("small sizes");
            if a.census() != b.census() {
                return Err(format!(
                    "conjugation changed the census: σ={sigma}, τ={tau}, k={k}"
                ));
            }
        }
    }
    Ok(())
}

fn check_reference_squares(_: Level) -> Result<(), String> {
    for &(input, one_line, cycles) in SQUARES_ON_THREE_POINTS {
        let sigma = Permutation::parse(input, None).expect("valid reference input");
        let power = sym_power_diagonal(&sigma, 2).expect("small sizes");
        if power.one_line_string() != one_line {
            return Err(format!(
                "square of {input} is {}, reference says {one_line}",
                power.one_line_string()
            ));
        }
        if power.cycle_string() != cycles {
            return Err(format!(
                "square of {input} decomposes as {}, reference says {cycles}",
                power.cycle_string()
            ));
        }
        // The matrix route must land on the same permutation.
        let via_matrix = sym_power_matrix(&DenseMatrix::from_permutation(&sigma), 2)
            .and_then(|m| extract_permutation(&m))
            .map_err(|e| format!("matrix route failed on {input}: {e}"))?;
        if via_matrix != power {
            return Err(format!("matrix route disagrees on {input}"));
        }
    }
    Ok(())
}

fn check_reference_six_cycle(_: Level) -> Result<(), String> {
    let table = SCycleTable::new(6, 6, 11, 9).expect("valid bounds");
    let series = series_expand(6, 6, 11, 9).expect("valid bounds");
    for (row, values) in SIX_CYCLE_GRID.iter().enumerate() {
        let n = 6 + row;
        for (col, &value) in values.iter().enumerate() {
            let k = col + 1;
            let expected = Count::from(value);
            let recursive = table.get(n, k).expect("in bounds");
            if recursive != &expected {
                return Err(format!("recursion gives {recursive} at n={n} k={k}, reference {expected}"));
            }
            let closed = s_cycles_closed_form(6, 6, n, k).expect("valid range");
            if closed != expected {
                return Err(format!("closed form gives {closed} at n={n} k={k}, reference {expected}"));
            }
            let coefficient = series.coefficient(n, k).expect("in bounds");
            if coefficient != &BigInt::from(expected.clone()) {
                return Err(format!("series gives {coefficient} at n={n} k={k}, reference {expected}"));
            }
        }
    }
    // Spot check that the spectrum side sees the same multiplicities: the
    // eigenvalue count always matches the point count.
    let census = Permutation::parse("(1 2 3 4 5 6)", None).expect("valid cycles").cycle_census();
    if eigenvalues(&census).len() != 6 {
        return Err("eigenvalue multiset of the six-cycle is not six values".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[cfg_attr(feature = "fault-inject", ignore = "fault injection makes suites fail by design")]
    fn quick_level_passes() {
        for report in run_all(Level::Quick) {
            assert!(
                report.passed,
                "suite {:?} failed: {:?}",
                report.name, report.detail
            );
        }
    }

    #[test]
    fn quick_level_skips_reference_tables() {
        let names: Vec<&str> = run_all(Level::Quick).iter().map(|r| r.name).collect();
        assert!(!names.iter().any(|n| n.starts_with("reference table")));
    }

    #[cfg(feature = "fault-inject")]
    #[test]
    fn injected_fault_is_reported() {
        let reports = run_all(Level::Quick);
        let pascal = reports.iter().find(|r| r.name == "binomial pascal rule").unwrap();
        assert!(!pascal.passed);
        assert!(pascal.detail.is_some());
    }
}
