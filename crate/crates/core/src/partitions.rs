//! Integer partitions and the partition constructions attached to current
//! algebra modules.
//!
//! The central objects are:
//!
//! * `xi_parts(a, N)`: the balanced partition of `a` into `N` parts given by
//!   Euclidean division, `a = N*q + p` with `0 <= p < N` yielding
//!   `((q+1)^(p), q^(N-p))` with zero parts dropped.  This is the partition
//!   attached to each positive root of a truncated module.
//! * `xi_demazure(ell, a, rv)`: the partition `((ell*rv)^(s-1), m)` from the
//!   division `a = (s-1)*ell*rv + m`, `0 < m <= ell*rv`, which encodes a
//!   level-`ell` Demazure module.
//! * The surgery operators `xi_plus`, `xi_minus`, `xi_star` driving the
//!   short-exact-sequence recursion on Chari-Venkatesh modules.
//!
//! The empty partition is a first-class value throughout: it encodes the
//! trivial module of dimension 1 and shows up naturally as `xi_minus` output
//! (for instance from `(2,2)`), so none of the operators special-case it.

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// A partition: a weakly decreasing finite list of positive integers.
///
/// The empty partition (no parts) is allowed and represents zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing.
    ///
    /// Zero parts are accepted only as a trailing run and are dropped.
    /// Returns `Error::InvalidPartition` if the list increases anywhere or
    /// has a zero followed by a positive part.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, sorting and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts, written l(xi).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written |xi|.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part, or 0 for the empty partition.
    pub fn last(&self) -> u64 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Dominance comparison: `self` dominates `other` when both have the same
    /// size and every prefix sum of `self` is at least the matching prefix
    /// sum of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut acc_self: u64 = 0;
        let mut acc_other: u64 = 0;
        let n = self.parts.len().max(other.parts.len());
        for i in 0..n {
            acc_self += self.parts.get(i).copied().unwrap_or(0);
            acc_other += other.parts.get(i).copied().unwrap_or(0);
            if acc_self < acc_other {
                return false;
            }
        }
        true
    }

    /// Exponent notation, e.g. `(2^(1), 1^(3))` for `(2,1,1,1)`.
    pub fn exponent_notation(&self) -> String {
        let mut groups: Vec<(u64, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((value, count)) if *value == p => *count += 1,
                _ => groups.push((p, 1)),
            }
        }
        let body: Vec<String> = groups
            .iter()
            .map(|(value, count)| format!("{}^({})", value, count))
            .collect();
        format!("({})", body.join(", "))
    }

    /// JSON form: a plain array of parts.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.parts
                .iter()
                .map(|&p| serde_json::Value::from(p))
                .collect(),
        )
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(", "))
    }
}

/// The balanced partition of `a` into at most `n` parts.
///
/// Writing `a = n*q + p` with `0 <= p < n`, the result has `p` parts equal
/// to `q+1` and `n-p` parts equal to `q`, with zero parts dropped.  Its size
/// is always `a` and its parts differ by at most one.
///
/// Errors with `Error::InvalidParameter` when `n == 0`.
pub fn xi_parts(a: u64, n: u64) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "truncation level N must be positive".to_string(),
        ));
    }
    let q = a / n;
    let p = a % n;
    let mut parts = Vec::with_capacity(n as usize);
    for _ in 0..p {
        parts.push(q + 1);
    }
    if q > 0 {
        for _ in 0..(n - p) {
            parts.push(q);
        }
    }
    Ok(Partition { parts })
}

/// The untruncated convention: no division happens (`q = 0`, `p = a`) and the
/// result is `(1^(a))`.  Kept as a separate entry point rather than a
/// sentinel value of `n`.
pub fn xi_parts_untruncated(a: u64) -> Partition {
    Partition {
        parts: vec![1; a as usize],
    }
}

/// The family of balanced partitions over all positive roots:
/// `alpha -> xi_parts(lambda(h_alpha), n)`, in the root system's root order.
///
/// `lambda` is a dominant weight in fundamental-weight coordinates.
pub fn xi_family(rs: &RootSystem, lambda: &[i64], n: u64) -> Result<Vec<(Root, Partition)>> {
    let mut out = Vec::new();
    for root in rs.positive_roots() {
        let a = rs.eval_on_coroot(lambda, root)?;
        if a < 0 {
            return Err(Error::InvalidParameter(format!(
                "weight {:?} is not dominant (negative value on a coroot)",
                lambda
            )));
        }
        out.push((root.clone(), xi_parts(a as u64, n)?));
    }
    Ok(out)
}

/// The partition `((ell*rv)^(s-1), m)` defined by the division
/// `a = (s-1)*ell*rv + m` with `0 < m <= ell*rv`; empty when `a = 0`.
///
/// `rv` is the coroot scaling factor: 1 for a long root, the lacing number
/// for a short one.  Errors when `ell == 0` or `rv` is not in `{1,2,3}`.
pub fn xi_demazure(ell: u64, a: u64, rv: u64) -> Result<Partition> {
    if ell == 0 {
        return Err(Error::InvalidParameter(
            "Demazure level must be positive".to_string(),
        ));
    }
    if !(1..=3).contains(&rv) {
        return Err(Error::InvalidParameter(format!(
            "coroot scaling factor must be 1, 2, or 3, got {}",
            rv
        )));
    }
    if a == 0 {
        return Ok(Partition::empty());
    }
    let step = ell * rv;
    // a = (s-1)*step + m with 0 < m <= step.
    let s = a.div_ceil(step);
    let m = a - (s - 1) * step;
    let mut parts = vec![step; (s - 1) as usize];
    parts.push(m);
    Ok(Partition { parts })
}

/// The partition obtained by re-sorting
/// `(xi_1, ..., xi_{l-2}, xi_{l-1} + 1, xi_l - 1)`.
///
/// Size is preserved. Errors when `xi` has fewer than 2 parts.
pub fn xi_plus(xi: &Partition) -> Result<Partition> {
    let l = xi.len();
    if l < 2 {
        return Err(Error::InvalidPartition(format!(
            "xi_plus needs at least 2 parts, got {}",
            l
        )));
    }
    let mut parts = xi.parts.clone();
    parts[l - 2] += 1;
    parts[l - 1] -= 1;
    Ok(Partition::from_unsorted(parts))
}

/// The partition `(xi_1, ..., xi_{l-2}, xi_{l-1} - xi_l)`.
///
/// The last part is absorbed, so the size drops by `2*xi_l`.  Errors when
/// `xi` has fewer than 2 parts.
pub fn xi_minus(xi: &Partition) -> Result<Partition> {
    let l = xi.len();
    if l < 2 {
        return Err(Error::InvalidPartition(format!(
            "xi_minus needs at least 2 parts, got {}",
            l
        )));
    }
    let mut parts = xi.parts[..l - 1].to_vec();
    parts[l - 2] -= xi.parts[l - 1];
    // The shortened list is still weakly decreasing because only the final
    // entry shrank.
    Partition::new(parts)
}

/// The partition obtained by removing the largest part.
///
/// Errors on the empty partition.
pub fn xi_star(xi: &Partition) -> Result<Partition> {
    if xi.is_empty() {
        return Err(Error::InvalidPartition(
            "xi_star needs a non-empty partition".to_string(),
        ));
    }
    Ok(Partition {
        parts: xi.parts[1..].to_vec(),
    })
}

/// Whether `xi` is the shape of a level-`ell` Demazure module for a long
/// root direction: all parts except possibly the last equal `ell`, and the
/// last lies in `(0, ell]`.  Equivalently, `xi == xi_demazure(ell, |xi|, 1)`.
///
/// The empty partition qualifies (the trivial module is Demazure).
pub fn is_demazure_shape(xi: &Partition, ell: u64) -> bool {
    let l = xi.len();
    for (i, &p) in xi.parts.iter().enumerate() {
        let ok = if i + 1 < l {
            p == ell
        } else {
            p >= 1 && p <= ell
        };
        if !ok {
            return false;
        }
    }
    true
}

/// All partitions of exactly `n`, in descending lexicographic order.
/// `n = 0` yields just the empty partition.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u64, max_part: u64, stack: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    rec(n, n.max(1), &mut stack, &mut out);
    out
}
