//! Permutations of `[n]`: one-line and cycle forms, cycle census, order,
//! matrix form, composition and powers.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::lcm_of;
use crate::{Count, Error, Result};

/// A bijection on `[n]`, stored in one-line form: `image[i-1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::InvalidInput("permutation must act on n >= 1 points".into()));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n {
                return Err(Error::InvalidInput(format!(
                    "permutation value {v} outside 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidInput(format!(
                    "permutation repeats the value {v}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    /// `compose(σ, τ)` applies `τ` first: the result maps `i` to `σ(τ(i))`.
    pub fn compose(&self, first: &Permutation) -> Result<Permutation> {
        if self.n() != first.n() {
            return Err(Error::InvalidInput(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                first.n()
            )));
        }
        let image = (1..=self.n()).map(|i| self.apply(first.apply(i))).collect();
        Ok(Permutation { image })
    }

    /// `σ^p` by repeated composition (square and multiply).
    pub fn power(&self, p: usize) -> Permutation {
        let mut result = Permutation::identity(self.n());
        let mut base = self.clone();
        let mut p = p;
        while p > 0 {
            if p & 1 == 1 {
                result = result.compose(&base).expect("same size");
            }
            base = base.compose(&base).expect("same size");
            p >>= 1;
        }
        result
    }

    /// Disjoint cycles covering `[n]`; each cycle starts at its minimum,
    /// cycles sorted by minimum.
    pub fn cycle_decomposition(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                visited[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_census(&self) -> CycleCensus {
        let mut counts = BTreeMap::new();
        for cycle in self.cycle_decomposition() {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        CycleCensus { counts }
    }

    /// Smallest `p >= 1` with `σ^p` the identity: the lcm of cycle lengths.
    pub fn order(&self) -> Count {
        let lengths: Vec<u64> = self
            .cycle_decomposition()
            .iter()
            .map(|c| c.len() as u64)
            .collect();
        lcm_of(&lengths).expect("decomposition is nonempty")
    }

    pub fn to_matrix(&self) -> PermutationMatrix {
        PermutationMatrix { cols: self.image.clone() }
    }

    /// One-line form with spaces: "3 1 2 5 6 4".
    pub fn one_line_string(&self) -> String {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }

    /// Cycle form with fixed points included: "(1 3 2)(4 5 6)".
    pub fn cycle_string(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycle_decomposition() {
            let parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            out.push('(');
            out.push_str(&parts.join(" "));
            out.push(')');
        }
        out
    }

    /// Accepts one-line notation ("3 1 2", "3,1,2", or "312" with
    /// single-digit entries) and cycle notation ("(1 3 2)", fixed points
    /// optional). For cycle notation `n` defaults to the largest point
    /// mentioned unless `n_hint` widens it.
    pub fn parse(input: &str, n_hint: Option<usize>) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        if trimmed.starts_with('(') {
            return Self::parse_cycles(trimmed, n_hint);
        }
        let values: Vec<usize> = if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
            trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in {input:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            // Contiguous digits: single-digit entries, so n <= 9.
            trimmed
                .chars()
                .map(|ch| match ch.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d as usize),
                    _ => Err(Error::Parse(format!("bad digit {ch:?} in {input:?}"))),
                })
                .collect::<Result<_>>()?
        };
        if let Some(n) = n_hint {
            if n != values.len() {
                return Err(Error::Parse(format!(
                    "one-line input {input:?} has {} entries, expected n={n}",
                    values.len()
                )));
            }
        }
        Self::from_image(values).map_err(|e| Error::Parse(format!("{input:?}: {e}")))
    }

    fn parse_cycles(input: &str, n_hint: Option<usize>) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = input;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in {input:?}")));
            }
            let close = rest_trim
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in {input:?}")))?;
            let inner = &rest_trim[1..close];
            let cycle: Vec<usize> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in {input:?}")))
                })
                .collect::<Result<_>>()?;
            if cycle.is_empty() {
                return Err(Error::Parse(format!("empty cycle in {input:?}")));
            }
            cycles.push(cycle);
            rest = &rest_trim[close + 1..];
        }
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
        if max_point == 0 {
            return Err(Error::Parse(format!("no points in {input:?}")));
        }
        let n = n_hint.unwrap_or(max_point);
        if max_point > n {
            return Err(Error::Parse(format!(
                "cycle input {input:?} mentions {max_point}, beyond n={n}"
            )));
        }
        let mut image: Vec<usize> = (1..=n).collect();
        let mut moved = vec![false; n];
        for cycle in &cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point < 1 {
                    return Err(Error::Parse(format!("point 0 in {input:?}")));
                }
                if moved[point - 1] {
                    return Err(Error::Parse(format!(
                        "point {point} appears in two cycles in {input:?}"
                    )));
                }
                moved[point - 1] = true;
                image[point - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Self::from_image(image).map_err(|e| Error::Parse(format!("{input:?}: {e}")))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_line_string())
    }
}

/// Sparse cycle type: length -> number of cycles of that length. Lengths
/// with zero count are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCensus {
    counts: BTreeMap<usize, usize>,
}

impl CycleCensus {
    pub fn from_counts(counts: BTreeMap<usize, usize>) -> Self {
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        CycleCensus { counts }
    }

    /// Count of cycles of length `len`.
    pub fn count(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    /// Pairs (length, count), ascending by length.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    /// Total points covered: `Σ length · count`.
    pub fn degree(&self) -> usize {
        self.counts.iter().map(|(&l, &c)| l * c).sum()
    }

    /// Total number of cycles.
    pub fn num_cycles(&self) -> usize {
        self.counts.values().sum()
    }

    /// The single length > 1 present, if the census is a one-cycle shape
    /// (any number of fixed points plus at most one longer cycle).
    /// Returns `Some(1)` when only fixed points are present.
    pub fn single_nontrivial_length(&self) -> Option<usize> {
        let nontrivial: Vec<(usize, usize)> =
            self.iter().filter(|&(l, _)| l > 1).collect();
        match nontrivial.as_slice() {
            [] => Some(1),
            [(l, 1)] => Some(*l),
            _ => None,
        }
    }
}

impl fmt::Display for CycleCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(l, c)| format!("{l}:{c}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// 0/1 matrix with row `i` carrying its 1 in column `σ(i)`. Left
/// multiplication realizes `v ↦ (v_{σ(1)}, …, v_{σ(n)})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    cols: Vec<usize>,
}

impl PermutationMatrix {
    pub fn n(&self) -> usize {
        self.cols.len()
    }

    /// Column of the 1 in row `i` (1-based both ways).
    pub fn col_of_row(&self, i: usize) -> usize {
        self.cols[i - 1]
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.cols[i - 1] == j)
    }

    /// Standard row-by-column product; the result is again a permutation
    /// matrix.
    pub fn matmul(&self, rhs: &PermutationMatrix) -> Result<PermutationMatrix> {
        if self.n() != rhs.n() {
            return Err(Error::InvalidInput("matrix size mismatch".into()));
        }
        let cols = self.cols.iter().map(|&m| rhs.cols[m - 1]).collect();
        Ok(PermutationMatrix { cols })
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_image(self.cols.clone()).expect("rows form a bijection")
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (1..=self.n())
            .map(|i| (1..=self.n()).map(|j| self.entry(i, j)).collect())
            .collect()
    }
}

/// All of `S_n` in lexicographic one-line order. Exhaustive sweeps only;
/// n! grows fast.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation { image: cur.clone() }];
    while crate::compositions::next_permutation(&mut cur) {
        out.push(Permutation { image: cur.clone() });
    }
    out
}
