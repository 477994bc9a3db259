//! The poset of N-tuples of dominant weights summing to a fixed lambda.
//!
//! A tuple mu = (mu_1, ..., mu_N) is compared through the statistics
//!
//! ```text
//! r_{alpha,k}(mu) = min { (mu_{i_1} + ... + mu_{i_k})(h_alpha) : i_1 < ... < i_k }
//! ```
//!
//! over all positive roots alpha and 1 <= k <= N, with mu <= nu meaning
//! r_{alpha,k}(mu) <= r_{alpha,k}(nu) everywhere.  The minimum over
//! k-subsets is just the sum of the k smallest values mu_j(h_alpha), so a
//! sort and prefix sums per root replace the subset search.
//!
//! The r-statistics are symmetric in the tuple entries, so the order lives
//! on S_N-orbits; `maximal_elements` reports orbits of tuples not strictly
//! below any other.

use std::collections::BTreeMap;

use crate::charring::{validate_dominant, DominantWeight};
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// An ordered list of N dominant weights with a fixed coordinate-wise sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightTuple {
    entries: Vec<DominantWeight>,
}

impl WeightTuple {
    pub fn new(entries: Vec<DominantWeight>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter(
                "a weight tuple needs at least one entry".to_string(),
            ));
        }
        let rank = entries[0].coords().len();
        if entries.iter().any(|e| e.coords().len() != rank) {
            return Err(Error::InvalidParameter(
                "weight tuple entries must share one rank".to_string(),
            ));
        }
        Ok(WeightTuple { entries })
    }

    pub fn entries(&self) -> &[DominantWeight] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinate-wise sum of the entries.
    pub fn total(&self) -> Vec<i64> {
        let rank = self.entries[0].coords().len();
        let mut sum = vec![0i64; rank];
        for e in &self.entries {
            for (s, c) in sum.iter_mut().zip(e.coords()) {
                *s += c;
            }
        }
        sum
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.entries.iter().map(|e| e.to_json()).collect())
    }
}

impl std::fmt::Display for WeightTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", body.join(", "))
    }
}

/// Counts tuples without enumerating them: each fundamental-weight
/// coordinate of lambda is distributed over N slots independently, giving
/// prod_i C(lambda_i + N - 1, N - 1).  Saturates at u128::MAX on overflow.
pub fn tuple_count_estimate(lambda: &[i64], n: usize) -> u128 {
    let mut estimate: u128 = 1;
    for &c in lambda {
        let comps = compositions_count(c as u128, n as u128);
        estimate = estimate.saturating_mul(comps);
    }
    estimate
}

fn compositions_count(c: u128, n: u128) -> u128 {
    // C(c + n - 1, n - 1), computed as a staged product; each partial
    // product is itself a binomial coefficient, so the division is exact.
    let top = c + n - 1;
    let k = (n - 1).min(c);
    let mut acc: u128 = 1;
    for j in 1..=k {
        acc = match acc.checked_mul(top - k + j) {
            Some(v) => v / j,
            None => return u128::MAX,
        };
    }
    acc
}

/// Enumerates every N-tuple of dominant weights with coordinate-wise sum
/// lambda, in ascending lexicographic order of the flattened coordinate
/// vector.  Refuses to start when the count estimate exceeds `bound`.
pub fn enumerate_tuples(
    rs: &RootSystem,
    lambda: &[i64],
    n: usize,
    bound: u128,
) -> Result<Vec<WeightTuple>> {
    validate_dominant(rs, lambda)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "tuple length N must be positive".to_string(),
        ));
    }
    let estimate = tuple_count_estimate(lambda, n);
    if estimate > bound {
        return Err(Error::EnumerationBound { estimate, bound });
    }
    let mut out = Vec::new();
    let mut acc: Vec<DominantWeight> = Vec::with_capacity(n);
    fill_tuples(lambda.to_vec(), n, &mut acc, &mut out)?;
    Ok(out)
}

fn fill_tuples(
    remaining: Vec<i64>,
    slots: usize,
    acc: &mut Vec<DominantWeight>,
    out: &mut Vec<WeightTuple>,
) -> Result<()> {
    if slots == 1 {
        acc.push(DominantWeight::new(remaining)?);
        out.push(WeightTuple::new(acc.clone())?);
        acc.pop();
        return Ok(());
    }
    // Odometer over 0 <= entry <= remaining coordinate-wise, ascending lex.
    let rank = remaining.len();
    let mut entry = vec![0i64; rank];
    loop {
        let rest: Vec<i64> = remaining.iter().zip(&entry).map(|(r, e)| r - e).collect();
        acc.push(DominantWeight::new(entry.clone())?);
        fill_tuples(rest, slots - 1, acc, out)?;
        acc.pop();
        // Advance: bump the rightmost coordinate that has room, clearing
        // everything after it.
        let mut i = rank;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if entry[i] < remaining[i] {
                entry[i] += 1;
                for e in entry.iter_mut().skip(i + 1) {
                    *e = 0;
                }
                break;
            }
        }
    }
}

/// r_{alpha,k}: the minimum of (mu_{i_1} + ... + mu_{i_k})(h_alpha) over
/// k-subsets, i.e. the sum of the k smallest values mu_j(h_alpha).
pub fn r_alpha_k(rs: &RootSystem, tuple: &WeightTuple, alpha: &Root, k: usize) -> Result<i64> {
    if k == 0 || k > tuple.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: tuple.len(),
        });
    }
    let mut evals = coroot_evals(rs, tuple, alpha)?;
    evals.sort_unstable();
    Ok(evals[..k].iter().sum())
}

fn coroot_evals(rs: &RootSystem, tuple: &WeightTuple, alpha: &Root) -> Result<Vec<i64>> {
    tuple
        .entries()
        .iter()
        .map(|e| rs.eval_on_coroot(e.coords(), alpha))
        .collect()
}

/// The full vector of r_{alpha,k} values in a fixed order (positive roots
/// in the root system's order, k ascending), the complete comparison key.
pub fn r_profile(rs: &RootSystem, tuple: &WeightTuple) -> Result<Vec<i64>> {
    let n = tuple.len();
    let mut profile = Vec::with_capacity(rs.positive_roots().len() * n);
    for alpha in rs.positive_roots() {
        let mut evals = coroot_evals(rs, tuple, alpha)?;
        evals.sort_unstable();
        let mut prefix = 0i64;
        for v in evals {
            prefix += v;
            profile.push(prefix);
        }
    }
    Ok(profile)
}

/// Outcome of comparing two tuples through their r-profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVerdict {
    /// Identical r-profiles; the tuples are one element of the order.
    EqualClass,
    /// Strictly below: every r-value <=, at least one <.
    LessOrEqual,
    /// Strictly above.
    Greater,
    Incomparable,
}

/// Compares two tuples of the same poset (same length, same sum).
pub fn poset_leq(rs: &RootSystem, a: &WeightTuple, b: &WeightTuple) -> Result<OrderVerdict> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.total() != b.total() {
        return Err(Error::InvalidParameter(format!(
            "tuples live in different posets: sums {:?} and {:?}",
            a.total(),
            b.total()
        )));
    }
    let pa = r_profile(rs, a)?;
    let pb = r_profile(rs, b)?;
    let mut some_less = false;
    let mut some_greater = false;
    for (x, y) in pa.iter().zip(&pb) {
        if x < y {
            some_less = true;
        } else if x > y {
            some_greater = true;
        }
    }
    Ok(match (some_less, some_greater) {
        (false, false) => OrderVerdict::EqualClass,
        (true, false) => OrderVerdict::LessOrEqual,
        (false, true) => OrderVerdict::Greater,
        (true, true) => OrderVerdict::Incomparable,
    })
}

/// One S_N-orbit of tuples: the entries-sorted-descending representative
/// and the number of distinct tuples in the orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: WeightTuple,
    pub size: u64,
}

impl Orbit {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "representative": self.representative.to_json(),
            "size": self.size,
        })
    }
}

/// All maximal elements of the poset, grouped into S_N-orbits.
///
/// A tuple is maximal when its r-profile is not strictly below the profile
/// of any other tuple; tuples with identical profiles count as one element
/// of the order.  Orbits are returned with entries-sorted-descending
/// representatives, in ascending order of representative.
pub fn maximal_elements(
    rs: &RootSystem,
    lambda: &[i64],
    n: usize,
    bound: u128,
) -> Result<Vec<Orbit>> {
    let tuples = enumerate_tuples(rs, lambda, n, bound)?;
    let mut by_profile: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        by_profile.entry(r_profile(rs, t)?).or_default().push(i);
    }
    let profiles: Vec<&Vec<i64>> = by_profile.keys().collect();
    let mut orbits: BTreeMap<Vec<DominantWeight>, u64> = BTreeMap::new();
    for (p, members) in &by_profile {
        let dominated = profiles.iter().any(|q| {
            *q != p && p.iter().zip(q.iter()).all(|(x, y)| x <= y)
        });
        if dominated {
            continue;
        }
        for &i in members {
            let mut sorted = tuples[i].entries().to_vec();
            sorted.sort_by(|a, b| b.cmp(a));
            *orbits.entry(sorted).or_insert(0) += 1;
        }
    }
    orbits
        .into_iter()
        .map(|(entries, size)| {
            Ok(Orbit {
                representative: WeightTuple::new(entries)?,
                size,
            })
        })
        .collect()
}

/// For lambda a multiple of one fundamental weight, maximality has a closed
/// criterion: a tuple (m_1 omega_i, ..., m_N omega_i) is maximal exactly
/// when max(m_j) - min(m_j) <= 1.  Takes the integer coefficients m_j.
pub fn is_maximal_fundamental_multiple(m: u64, n: usize, coeffs: &[i64]) -> Result<bool> {
    if coeffs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: coeffs.len(),
        });
    }
    if let Some(&bad) = coeffs.iter().find(|&&c| c < 0) {
        return Err(Error::InvalidParameter(format!(
            "coefficients must be non-negative, found {}",
            bad
        )));
    }
    let sum: i64 = coeffs.iter().sum();
    if sum != m as i64 {
        return Err(Error::InvalidParameter(format!(
            "coefficients sum to {}, expected {}",
            sum, m
        )));
    }
    let max = coeffs.iter().max().copied().unwrap_or(0);
    let min = coeffs.iter().min().copied().unwrap_or(0);
    Ok(max - min <= 1)
}
