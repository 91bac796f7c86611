//! The set `C_{n,k}` of size-n compositions of k: weakly increasing
//! k-tuples over `[n]`, one per orbit of `[n]^k` under entry permutation.
//!
//! The enumeration order is the one the tensor-power construction indexes
//! by: first by the number of distinct values ascending, ties broken
//! lexicographically. Ranks are 1-based.

use std::cmp::Ordering;
use std::fmt;

use num_traits::ToPrimitive;

use crate::combinatorics::{binomial, multinomial};
use crate::{Count, Error, Result};

/// A weakly increasing k-tuple with entries in `[n]`; the canonical
/// representative of its orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    entries: Vec<usize>,
    n: usize,
}

impl Composition {
    /// Builds from already weakly increasing entries.
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("composition must have k >= 1 entries".into()));
        }
        for w in entries.windows(2) {
            if w[0] > w[1] {
                return Err(Error::InvalidInput(format!(
                    "composition entries not weakly increasing: {entries:?}"
                )));
            }
        }
        Self::check_range(&entries, n)?;
        Ok(Composition { entries, n })
    }

    fn check_range(entries: &[usize], n: usize) -> Result<()> {
        if let Some(&bad) = entries.iter().find(|&&e| e < 1 || e > n) {
            return Err(Error::InvalidInput(format!(
                "composition entry {bad} outside 1..={n}"
            )));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> usize {
        self.entries.len()
    }

    /// Number of distinct values; the primary sort key of the ordering.
    pub fn distinct_values(&self) -> usize {
        1 + self.entries.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Per-value occurrence counts `m(i)`; in bijection with compositions.
    pub fn multiplicity_vector(&self) -> MultiplicityVector {
        let mut counts = vec![0usize; self.n];
        for &e in &self.entries {
            counts[e - 1] += 1;
        }
        MultiplicityVector { counts }
    }

    /// Number of distinct rearrangements of the entries, a multinomial.
    pub fn orbit_size(&self) -> Count {
        let m = self.multiplicity_vector();
        multinomial(self.weight(), &m.counts).expect("multiplicities sum to k")
    }

    /// All distinct rearrangements of the entries, starting from the
    /// sorted tuple, in lexicographic order.
    pub fn orbit(&self) -> Vec<Vec<usize>> {
        let mut cur = self.entries.clone();
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur) {
            out.push(cur.clone());
        }
        out
    }
}

/// The two-level comparator: distinct-value count, then lexicographic.
pub fn order_cmp(a: &Composition, b: &Composition) -> Ordering {
    a.distinct_values()
        .cmp(&b.distinct_values())
        .then_with(|| a.entries.cmp(&b.entries))
}

impl fmt::Display for Composition {
    /// Digits run together for `n <= 9` ("12"), comma separated above
    /// ("3,10,10").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Occurrence counts of each value `1..=n` in a composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    counts: Vec<usize>,
}

impl MultiplicityVector {
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }
}

/// Sorts an arbitrary tuple over `[n]` into its orbit representative.
pub fn canonicalize(tuple: &[usize], n: usize) -> Result<Composition> {
    Composition::check_range(tuple, n)?;
    if tuple.is_empty() {
        return Err(Error::InvalidInput("composition must have k >= 1 entries".into()));
    }
    let mut entries = tuple.to_vec();
    entries.sort_unstable();
    Ok(Composition { entries, n })
}

/// Number of compositions `|C_{n,k}| = binom(n+k-1, n-1)`.
pub fn count(n: usize, k: usize) -> Count {
    binomial((n + k - 1) as i64, (n - 1) as i64)
}

/// All of `C_{n,k}` in the canonical order.
pub fn enumerate(n: usize, k: usize) -> Result<Vec<Composition>> {
    Ok(CompositionIndex::new(n, k)?.into_list())
}

/// Rank of `c` in the canonical order of its `C_{n,k}`, 1-based.
pub fn rank(c: &Composition) -> Result<usize> {
    CompositionIndex::new(c.ambient(), c.weight())?.rank(c)
}

/// Inverse of [`rank`].
pub fn unrank(n: usize, k: usize, i: usize) -> Result<Composition> {
    Ok(CompositionIndex::new(n, k)?.get(i)?.clone())
}

/// The materialized ordered list of `C_{n,k}`, supporting O(log N) rank
/// lookups. Build once when many ranks are needed.
pub struct CompositionIndex {
    n: usize,
    k: usize,
    list: Vec<Composition>,
}

impl CompositionIndex {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(Error::InvalidInput(format!(
                "compositions need n >= 1 and k >= 1, got n={n} k={k}"
            )));
        }
        let mut list = Vec::with_capacity(count(n, k).to_usize().unwrap_or(0));
        // Odometer over weakly increasing tuples, then re-sort into the
        // two-level order.
        let mut cur = vec![1usize; k];
        loop {
            list.push(Composition { entries: cur.clone(), n });
            // Find the rightmost position that can still grow.
            let mut pos = k;
            while pos > 0 && cur[pos - 1] == n {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            let v = cur[pos - 1] + 1;
            for e in cur.iter_mut().skip(pos - 1) {
                *e = v;
            }
        }
        list.sort_by(order_cmp);
        Ok(CompositionIndex { n, k, list })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Composition> {
        self.list.iter()
    }

    /// 1-based rank by binary search under the canonical order.
    pub fn rank(&self, c: &Composition) -> Result<usize> {
        if c.ambient() != self.n || c.weight() != self.k {
            return Err(Error::InvalidInput(format!(
                "composition {c} does not belong to C_{{{},{}}}",
                self.n, self.k
            )));
        }
        self.list
            .binary_search_by(|probe| order_cmp(probe, c))
            .map(|i| i + 1)
            .map_err(|_| Error::InvalidInput(format!("composition {c} not found")))
    }

    /// 1-based lookup.
    pub fn get(&self, i: usize) -> Result<&Composition> {
        if i < 1 || i > self.list.len() {
            return Err(Error::InvalidInput(format!(
                "rank {i} outside 1..={}",
                self.list.len()
            )));
        }
        Ok(&self.list[i - 1])
    }

    pub fn into_list(self) -> Vec<Composition> {
        self.list
    }
}

/// Advances to the next distinct permutation in lexicographic order;
/// false once the sequence wraps.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(entries: &[usize], n: usize) -> Composition {
        Composition::new(entries.to_vec(), n).unwrap()
    }

    #[test]
    fn enumerate_c32_matches_reference_order() {
        let list = enumerate(3, 2).unwrap();
        let shown: Vec<String> = list.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, vec!["11", "22", "33", "12", "13", "23"]);
    }

    #[test]
    fn enumerate_single() {
        let list = enumerate(1, 4).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].to_string(), "1111");
    }

    #[test]
    fn enumerate_c42_order() {
        let list = enumerate(4, 2).unwrap();
        let shown: Vec<String> = list.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            shown,
            vec!["11", "22", "33", "44", "12", "13", "14", "23", "24", "34"]
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&comp(&[1, 2], 3)).unwrap(), 4);
        assert_eq!(rank(&comp(&[1, 1], 3)).unwrap(), 1);
        assert_eq!(rank(&comp(&[2, 3], 3)).unwrap(), 6);
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(unrank(3, 2, 6).unwrap(), comp(&[2, 3], 3));
        assert_eq!(unrank(3, 2, 1).unwrap(), comp(&[1, 1], 3));
        assert_eq!(unrank(3, 2, 4).unwrap(), comp(&[1, 2], 3));
        assert!(unrank(3, 2, 7).is_err());
        assert!(unrank(3, 2, 0).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(comp(&[1, 2], 3).multiplicity_vector().counts(), &[1, 1, 0]);
        assert_eq!(comp(&[1, 1], 3).multiplicity_vector().counts(), &[2, 0, 0]);
        assert_eq!(
            comp(&[2, 3, 3, 3], 3).multiplicity_vector().counts(),
            &[0, 1, 3]
        );
    }

    #[test]
    fn orbit_size_examples() {
        assert_eq!(comp(&[1, 2], 3).orbit_size(), Count::from(2u32));
        assert_eq!(comp(&[1, 1], 3).orbit_size(), Count::from(1u32));
        assert_eq!(comp(&[1, 2, 2, 3], 3).orbit_size(), Count::from(12u32));
    }

    #[test]
    fn orbit_lists_distinct_rearrangements() {
        let orbit = comp(&[1, 2], 3).orbit();
        assert_eq!(orbit, vec![vec![1, 2], vec![2, 1]]);
        let orbit = comp(&[1, 2, 2], 3).orbit();
        assert_eq!(orbit.len(), 3);
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&[3, 1], 3).unwrap(), comp(&[1, 3], 3));
        assert_eq!(canonicalize(&[2, 2], 3).unwrap(), comp(&[2, 2], 3));
        assert_eq!(canonicalize(&[3, 2, 1], 3).unwrap(), comp(&[1, 2, 3], 3));
        assert!(canonicalize(&[4, 1], 3).is_err());
        assert!(canonicalize(&[0, 1], 3).is_err());
    }

    #[test]
    fn sizes_match_binomial() {
        for n in 1..=8 {
            for k in 1..=8 {
                let list = enumerate(n, k).unwrap();
                assert_eq!(Count::from(list.len()), count(n, k), "size mismatch at n={n} k={k}");
            }
        }
    }

    #[test]
    fn rank_unrank_round_trip() {
        for n in 1..=6 {
            for k in 1..=6 {
                let index = CompositionIndex::new(n, k).unwrap();
                for i in 1..=index.len() {
                    let c = index.get(i).unwrap();
                    assert_eq!(index.rank(c).unwrap(), i);
                }
            }
        }
    }

    #[test]
    fn comma_form_above_nine() {
        let c = comp(&[3, 10, 10], 12);
        assert_eq!(c.to_string(), "3,10,10");
    }

    #[test]
    fn rejects_decreasing_entries() {
        assert!(Composition::new(vec![2, 1], 3).is_err());
    }
}
