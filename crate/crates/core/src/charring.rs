//! Formal characters of finite-dimensional modules over a simple Lie
//! algebra, with exact integer arithmetic throughout.
//!
//! Weight conventions: a weight is a vector of coefficients on the
//! fundamental weights, so `lambda = sum_i lambda_i omega_i` and
//! `lambda_i = lambda(h_i)`.  Weight multiplicities come from the
//! Freudenthal recursion, dimensions from the Weyl dimension formula, and
//! tensor decompositions from repeated extraction of a maximal dominant
//! weight out of the product character.
//!
//! The module also houses the Gaussian binomial `[m choose k]_t`, computed
//! by the product formula
//!
//! ```text
//! [m choose k]_t = prod_{j=0}^{k-1} (1 - t^(m-j)) / (1 - t^(k-j))
//! ```
//!
//! with exact polynomial division, plus an independent Pascal-recurrence
//! route used to cross-check it in tests.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootsys::RootSystem;

/// A dominant integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    coords: Vec<i64>,
}

impl DominantWeight {
    /// Validates that every coordinate is non-negative.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::InvalidParameter(format!(
                "dominant weight cannot have negative coordinate {}",
                bad
            )));
        }
        Ok(DominantWeight { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The coordinate sum, written |lambda|.
    pub fn norm(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords
                .iter()
                .map(|&c| serde_json::Value::from(c))
                .collect(),
        )
    }
}

impl std::fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", body.join(", "))
    }
}

/// A full weight-multiplicity map.  Keys may be non-dominant; values are
/// positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalCharacter {
    entries: BTreeMap<Vec<i64>, BigInt>,
}

impl FormalCharacter {
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.entries.iter()
    }

    pub fn mult(&self, weight: &[i64]) -> BigInt {
        self.entries
            .get(weight)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn num_weights(&self) -> usize {
        self.entries.len()
    }

    /// Total dimension: the sum of all multiplicities.
    pub fn dim(&self) -> BigInt {
        self.entries.values().sum()
    }

    /// Checks Weyl-group invariance by reflecting every weight through every
    /// simple reflection and comparing multiplicities.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        let cartan = rs.cartan_matrix();
        let n = rs.rank();
        self.entries.iter().all(|(w, m)| {
            (0..n).all(|i| {
                let mut refl = w.clone();
                let wi = w[i];
                for (j, r) in refl.iter_mut().enumerate() {
                    *r -= wi * cartan[j][i];
                }
                self.mult(&refl) == *m
            })
        })
    }

    /// Stable JSON form: entries sorted by weight, multiplicities as decimal
    /// strings.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(w, m)| {
                serde_json::json!({
                    "weight": w,
                    "mult": m.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "entries": entries })
    }
}

/// A non-negatively graded module described degree by degree through its
/// decomposition into irreducibles.
///
/// Only dominant weights appear; the multiplicity of `mu` at degree `k` is
/// the number of copies of the irreducible with highest weight `mu` inside
/// the degree-`k` piece.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedCharacter {
    pieces: BTreeMap<u64, BTreeMap<DominantWeight, BigInt>>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        GradedCharacter::default()
    }

    /// A single irreducible `V(lambda)` placed at degree `degree`.
    pub fn single(degree: u64, weight: DominantWeight) -> Self {
        let mut gc = GradedCharacter::new();
        gc.add_mult(degree, weight, BigInt::one());
        gc
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn add_mult(&mut self, degree: u64, weight: DominantWeight, mult: BigInt) {
        if mult.is_zero() {
            return;
        }
        let piece = self.pieces.entry(degree).or_default();
        let entry = piece.entry(weight.clone()).or_insert_with(BigInt::zero);
        *entry += mult;
        if entry.is_zero() {
            piece.remove(&weight);
        }
        if piece.is_empty() {
            self.pieces.remove(&degree);
        }
    }

    /// Merges `other` into `self` (direct sum of graded modules).
    pub fn accumulate(&mut self, other: &GradedCharacter) {
        for (&degree, piece) in &other.pieces {
            for (weight, mult) in piece {
                self.add_mult(degree, weight.clone(), mult.clone());
            }
        }
    }

    /// The grading shift `tau_s`: every degree moves up by `s`.
    pub fn shifted(&self, s: u64) -> GradedCharacter {
        GradedCharacter {
            pieces: self
                .pieces
                .iter()
                .map(|(&k, piece)| (k + s, piece.clone()))
                .collect(),
        }
    }

    pub fn pieces(&self) -> impl Iterator<Item = (u64, &BTreeMap<DominantWeight, BigInt>)> {
        self.pieces.iter().map(|(&k, p)| (k, p))
    }

    pub fn piece(&self, degree: u64) -> Option<&BTreeMap<DominantWeight, BigInt>> {
        self.pieces.get(&degree)
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.pieces.keys().next_back().copied()
    }

    /// The polynomial `sum_k dim(piece k) t^k`.
    pub fn dim_series(&self, rs: &RootSystem) -> Result<LaurentPoly> {
        let mut series = LaurentPoly::zero();
        for (&degree, piece) in &self.pieces {
            let mut total = BigInt::zero();
            for (weight, mult) in piece {
                total += mult * weyl_dim(rs, weight.coords())?;
            }
            series.add_term(degree as i64, total);
        }
        Ok(series)
    }

    /// Total dimension: the dimension series evaluated at `t = 1`.
    pub fn total_dim(&self, rs: &RootSystem) -> Result<BigInt> {
        Ok(self.dim_series(rs)?.eval_at_one())
    }

    /// Stable JSON form: pieces in degree order, entries sorted by weight,
    /// multiplicities as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let pieces: Vec<serde_json::Value> = self
            .pieces
            .iter()
            .map(|(&degree, piece)| {
                let entries: Vec<serde_json::Value> = piece
                    .iter()
                    .map(|(w, m)| {
                        serde_json::json!({
                            "weight": w.coords(),
                            "mult": m.to_string(),
                        })
                    })
                    .collect();
                serde_json::json!({ "degree": degree, "entries": entries })
            })
            .collect();
        serde_json::json!({ "pieces": pieces })
    }
}

/// Exact integer linear algebra on the weight lattice of a fixed root
/// system: conversion to simple-root coordinates, dominance comparisons,
/// and the symmetric pairing.
struct Lattice {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    adjugate: Vec<Vec<i128>>,
    det: i128,
}

impl Lattice {
    fn new(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let cartan = rs.cartan_matrix().clone();
        let m: Vec<Vec<i128>> = cartan
            .iter()
            .map(|row| row.iter().map(|&x| x as i128).collect())
            .collect();
        let det = det_i128(&m);
        // Adjugate by cofactors: adj[i][j] = (-1)^(i+j) * minor(j, i).
        let mut adjugate = vec![vec![0i128; n]; n];
        for (i, row) in adjugate.iter_mut().enumerate() {
            for (j, a) in row.iter_mut().enumerate() {
                let minor: Vec<Vec<i128>> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != i)
                            .map(|c| m[r][c])
                            .collect()
                    })
                    .collect();
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                *a = sign * det_i128(&minor);
            }
        }
        Lattice {
            rank: n,
            cartan,
            d: rs.symmetrizers().to_vec(),
            adjugate,
            det,
        }
    }

    /// Writes `diff` (in fundamental-weight coordinates) on the simple-root
    /// basis.  Returns `None` when `diff` is not in the root lattice.
    fn alpha_coords(&self, diff: &[i64]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for j in 0..self.rank {
            let num: i128 = (0..self.rank)
                .map(|i| self.adjugate[j][i] * diff[i] as i128)
                .sum();
            if num % self.det != 0 {
                return None;
            }
            out.push((num / self.det) as i64);
        }
        Some(out)
    }

    /// Standard partial order: `a >= b` iff `a - b` is a non-negative sum
    /// of simple roots.
    fn ge(&self, a: &[i64], b: &[i64]) -> bool {
        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        match self.alpha_coords(&diff) {
            Some(coords) => coords.iter().all(|&c| c >= 0),
            None => false,
        }
    }

    /// Componentwise floor of the simple-root coordinates of `lambda`;
    /// bounds the dominant-weight enumeration box.
    fn box_bounds(&self, lambda: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| {
                let num: i128 = (0..self.rank)
                    .map(|i| self.adjugate[j][i] * lambda[i] as i128)
                    .sum();
                num.div_euclid(self.det) as i64
            })
            .collect()
    }

    /// The invariant pairing `(mu, beta)` where `mu` is in fundamental-weight
    /// coordinates and `beta` is given by simple-root coefficients; the
    /// normalization is `(omega_i, alpha_j) = d_j delta_ij`.
    fn pairing(&self, mu: &[i64], beta_alpha_coords: &[i64]) -> i64 {
        (0..self.rank)
            .map(|j| beta_alpha_coords[j] * self.d[j] * mu[j])
            .sum()
    }

    /// The dominant Weyl conjugate of a weight.
    fn dominantize(&self, weight: &[i64]) -> Vec<i64> {
        let mut w = weight.to_vec();
        loop {
            match (0..self.rank).find(|&i| w[i] < 0) {
                None => return w,
                Some(i) => {
                    let wi = w[i];
                    for (j, x) in w.iter_mut().enumerate() {
                        *x -= wi * self.cartan[j][i];
                    }
                }
            }
        }
    }
}

/// Fraction-free determinant (Bareiss); exact for the small integer
/// matrices that occur here.
fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub(crate) fn validate_dominant(rs: &RootSystem, lambda: &[i64]) -> Result<()> {
    if lambda.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: lambda.len(),
        });
    }
    if let Some(&bad) = lambda.iter().find(|&&c| c < 0) {
        return Err(Error::InvalidParameter(format!(
            "weight must be dominant, found coordinate {}",
            bad
        )));
    }
    Ok(())
}

/// dim V(lambda) by the Weyl dimension formula, as an exact product of
/// integer pairings over the positive roots.
pub fn weyl_dim(rs: &RootSystem, lambda: &[i64]) -> Result<BigInt> {
    validate_dominant(rs, lambda)?;
    let d = rs.symmetrizers();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        let mut top = 0i64;
        let mut bot = 0i64;
        for (j, &a) in alpha.coords.iter().enumerate() {
            top += a * d[j] * (lambda[j] + 1);
            bot += a * d[j];
        }
        num *= top;
        den *= bot;
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    if !r.is_zero() {
        return Err(Error::Internal(
            "Weyl dimension product did not divide exactly".to_string(),
        ));
    }
    Ok(q)
}

/// The multiplicities of all dominant weights of V(lambda), computed by the
/// Freudenthal recursion processed in increasing depth below `lambda`.
fn dominant_multiplicities(rs: &RootSystem, lambda: &[i64]) -> Result<BTreeMap<Vec<i64>, BigInt>> {
    let lat = Lattice::new(rs);
    let n = rs.rank();
    let bounds = lat.box_bounds(lambda);

    // Enumerate dominant mu = lambda - sum_j c_j alpha_j over the box.
    let mut doms: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut cvec = vec![0i64; n];
    loop {
        let mut mu = lambda.to_vec();
        for (i, m) in mu.iter_mut().enumerate() {
            for (j, c) in cvec.iter().enumerate() {
                *m -= lat.cartan[i][j] * c;
            }
        }
        if mu.iter().all(|&c| c >= 0) {
            doms.push((cvec.clone(), mu));
        }
        // Advance the odometer.
        let mut pos = 0;
        loop {
            if pos == n {
                break;
            }
            cvec[pos] += 1;
            if cvec[pos] <= bounds[pos] {
                break;
            }
            cvec[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    doms.sort_by_key(|(c, _)| (c.iter().sum::<i64>(), c.clone()));

    let root_data: Vec<(Vec<i64>, Vec<i64>, i64)> = rs
        .positive_roots()
        .iter()
        .map(|alpha| (alpha.coords.clone(), rs.root_evals(alpha), alpha.half_norm()))
        .collect();

    let mut mult: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (cvec, mu) in &doms {
        let depth: i64 = cvec.iter().sum();
        if depth == 0 {
            mult.insert(mu.clone(), BigInt::one());
            continue;
        }
        let mut num = BigInt::zero();
        for (coords, evals, half_norm) in &root_data {
            let base_pairing = lat.pairing(mu, coords);
            let mut k = 1i64;
            loop {
                if (0..n).any(|j| cvec[j] - k * coords[j] < 0) {
                    break;
                }
                let nu: Vec<i64> = (0..n).map(|i| mu[i] + k * evals[i]).collect();
                let dom_nu = lat.dominantize(&nu);
                if let Some(m) = mult.get(&dom_nu) {
                    num += (base_pairing + 2 * k * half_norm) * m;
                }
                k += 1;
            }
        }
        num *= 2;
        let den: i64 = (0..n)
            .map(|j| cvec[j] * lat.d[j] * (lambda[j] + mu[j] + 2))
            .sum();
        let (q, r) = num_integer::Integer::div_rem(&num, &BigInt::from(den));
        if !r.is_zero() {
            return Err(Error::Internal(
                "Freudenthal numerator not divisible by the norm difference".to_string(),
            ));
        }
        mult.insert(mu.clone(), q);
    }
    Ok(mult)
}

/// The full weight-multiplicity map of the irreducible V(lambda).
///
/// Dominant multiplicities come from Freudenthal; the rest of each Weyl
/// orbit is filled in by reflecting through simple reflections.
pub fn irreducible_character(rs: &RootSystem, lambda: &[i64]) -> Result<FormalCharacter> {
    validate_dominant(rs, lambda)?;
    let cartan = rs.cartan_matrix();
    let n = rs.rank();
    let dominant = dominant_multiplicities(rs, lambda)?;
    let mut entries: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (mu, m) in &dominant {
        if m.is_zero() {
            continue;
        }
        let mut stack = vec![mu.clone()];
        let mut seen: std::collections::BTreeSet<Vec<i64>> = stack.iter().cloned().collect();
        while let Some(w) = stack.pop() {
            for i in 0..n {
                let wi = w[i];
                if wi == 0 {
                    continue;
                }
                let mut refl = w.clone();
                for (j, r) in refl.iter_mut().enumerate() {
                    *r -= wi * cartan[j][i];
                }
                if seen.insert(refl.clone()) {
                    stack.push(refl);
                }
            }
            entries.insert(w, m.clone());
        }
    }
    Ok(FormalCharacter { entries })
}

/// Decomposes V(lambda) (x) V(mu) into irreducibles.
///
/// The product character is reduced by repeatedly extracting a dominant
/// support weight that is maximal in the standard partial order (no other
/// dominant support weight exceeds it by a non-negative sum of simple
/// roots); lexicographic order on coordinates breaks ties between
/// incomparable maximal weights.  Maximality in the standard order is what
/// guarantees the extracted weight really is a highest weight of the
/// residual character, so no negative multiplicities can appear.
pub fn tensor_decompose(
    rs: &RootSystem,
    lambda: &[i64],
    mu: &[i64],
) -> Result<BTreeMap<DominantWeight, BigInt>> {
    validate_dominant(rs, lambda)?;
    validate_dominant(rs, mu)?;
    let lat = Lattice::new(rs);
    let ca = irreducible_character(rs, lambda)?;
    let cb = irreducible_character(rs, mu)?;

    let mut residual: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (wa, ma) in ca.entries() {
        for (wb, mb) in cb.entries() {
            let w: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            let entry = residual.entry(w).or_insert_with(BigInt::zero);
            *entry += ma * mb;
        }
    }

    let mut out: BTreeMap<DominantWeight, BigInt> = BTreeMap::new();
    let mut cache: BTreeMap<Vec<i64>, FormalCharacter> = BTreeMap::new();
    while !residual.is_empty() {
        let doms: Vec<Vec<i64>> = residual
            .keys()
            .filter(|w| w.iter().all(|&c| c >= 0))
            .cloned()
            .collect();
        let sel = doms
            .iter()
            .filter(|m| !doms.iter().any(|n| n != *m && lat.ge(n, m)))
            .max_by(|a, b| a.cmp(b))
            .cloned()
            .ok_or_else(|| {
                Error::Internal("nonzero product character with no dominant weight".to_string())
            })?;
        let count = residual
            .get(&sel)
            .cloned()
            .unwrap_or_else(BigInt::zero);
        if !count.is_positive() {
            return Err(Error::Internal(
                "extracted highest weight with non-positive multiplicity".to_string(),
            ));
        }
        if !cache.contains_key(&sel) {
            cache.insert(sel.clone(), irreducible_character(rs, &sel)?);
        }
        for (w, m) in cache[&sel].entries() {
            let slot = residual.entry(w.clone()).or_insert_with(BigInt::zero);
            *slot -= &count * m;
            if slot.is_zero() {
                residual.remove(w);
            } else if slot.is_negative() {
                return Err(Error::Internal(
                    "negative residual multiplicity in tensor decomposition".to_string(),
                ));
            }
        }
        out.insert(DominantWeight::new(sel)?, count);
    }
    Ok(out)
}

/// The Gaussian binomial `[m choose k]_t` by the product formula.
///
/// Processed as `prod_{j=1}^{k} (1 - t^(m-k+j)) / (1 - t^j)` so that after
/// stage `j` the partial product is itself a Gaussian binomial and every
/// division is exact.  Out-of-range input (`k < 0` or `k > m`) yields the
/// zero polynomial by convention; closed-form multiplicity formulas rely
/// on that to vanish outside their stated range.
pub fn qbinom(m: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > m {
        return LaurentPoly::zero();
    }
    let mut acc = LaurentPoly::one();
    for j in 1..=k {
        let top = LaurentPoly::from_terms([(0i64, 1i64), (m - k + j, -1)]);
        let bot = LaurentPoly::from_terms([(0i64, 1i64), (j, -1)]);
        acc = acc
            .mul(&top)
            .div_exact(&bot)
            .expect("Gaussian binomial division is exact at every stage");
    }
    acc
}

/// The Gaussian binomial by the Pascal recurrence
/// `[m k] = [m-1 k-1] + t^k [m-1 k]`.  Independent of `qbinom`; the two
/// routes are compared in tests to catch arithmetic mistakes.
pub fn qbinom_pascal(m: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > m {
        return LaurentPoly::zero();
    }
    // row[j] = [i choose j]_t for the current i.
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for _i in 1..=m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(LaurentPoly::one());
        for j in 1..row.len() {
            next.push(row[j - 1].add(&row[j].shifted(j as i64)));
        }
        next.push(LaurentPoly::one());
        row = next;
    }
    row[k as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Series};
    use proptest::prelude::*;

    fn rs(series: Series, rank: usize) -> RootSystem {
        build_root_system(series, rank).unwrap()
    }

    fn dim_i64(rs: &RootSystem, lambda: &[i64]) -> i64 {
        use num_traits::ToPrimitive;
        weyl_dim(rs, lambda).unwrap().to_i64().unwrap()
    }

    #[test]
    fn weyl_dim_rank_one_is_m_plus_one() {
        let a1 = rs(Series::A, 1);
        for m in 0..=8 {
            assert_eq!(dim_i64(&a1, &[m]), m + 1);
        }
    }

    #[test]
    fn weyl_dim_b2_hand_values() {
        let b2 = rs(Series::B, 2);
        assert_eq!(dim_i64(&b2, &[0, 1]), 4);
        assert_eq!(dim_i64(&b2, &[0, 2]), 10);
        assert_eq!(dim_i64(&b2, &[0, 3]), 20);
        assert_eq!(dim_i64(&b2, &[0, 4]), 35);
        assert_eq!(dim_i64(&b2, &[1, 0]), 5);
        assert_eq!(dim_i64(&b2, &[1, 1]), 16);
        assert_eq!(dim_i64(&b2, &[1, 2]), 35);
    }

    #[test]
    fn weyl_dim_of_zero_weight_is_one() {
        for (series, rank) in [
            (Series::A, 1),
            (Series::A, 3),
            (Series::B, 2),
            (Series::C, 3),
            (Series::D, 4),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let r = rs(series, rank);
            assert_eq!(dim_i64(&r, &vec![0; rank]), 1);
        }
    }

    #[test]
    fn adjoint_representation_dimensions() {
        // The highest root is the highest weight of the adjoint module, so
        // its dimension is rank + number of roots.
        for (series, rank) in [(Series::A, 2), (Series::B, 2), (Series::G, 2), (Series::A, 3)] {
            let r = rs(series, rank);
            let theta = r.highest_root().clone();
            let adjoint_dim = rank as i64 + 2 * r.positive_roots().len() as i64;
            assert_eq!(dim_i64(&r, &r.root_evals(&theta)), adjoint_dim);
        }
    }

    #[test]
    fn rank_one_characters_are_weight_strings() {
        let a1 = rs(Series::A, 1);
        let chi = irreducible_character(&a1, &[2]).unwrap();
        assert_eq!(chi.num_weights(), 3);
        for w in [-2i64, 0, 2] {
            assert_eq!(chi.mult(&[w]), BigInt::one());
        }
        assert!(chi.is_weyl_invariant(&a1));
    }

    #[test]
    fn b2_spin_character_is_four_singleton_weights() {
        let b2 = rs(Series::B, 2);
        let chi = irreducible_character(&b2, &[0, 1]).unwrap();
        assert_eq!(chi.num_weights(), 4);
        for w in [[0i64, 1], [1, -1], [-1, 1], [0, -1]] {
            assert_eq!(chi.mult(&w), BigInt::one());
        }
        assert!(chi.is_weyl_invariant(&b2));
    }

    #[test]
    fn a2_adjoint_has_double_zero_weight() {
        let a2 = rs(Series::A, 2);
        let chi = irreducible_character(&a2, &[1, 1]).unwrap();
        assert_eq!(chi.dim(), BigInt::from(8));
        assert_eq!(chi.mult(&[0, 0]), BigInt::from(2));
        assert!(chi.is_weyl_invariant(&a2));
    }

    #[test]
    fn character_dimensions_match_weyl_dim_on_small_sweep() {
        for (series, rank) in [(Series::A, 2), (Series::B, 2), (Series::G, 2)] {
            let r = rs(series, rank);
            for a in 0..=3i64 {
                for b in 0..=3i64 {
                    let lambda = [a, b];
                    let chi = irreducible_character(&r, &lambda).unwrap();
                    assert_eq!(chi.dim(), weyl_dim(&r, &lambda).unwrap());
                }
            }
        }
    }

    #[test]
    fn clebsch_gordan_for_rank_one() {
        let a1 = rs(Series::A, 1);
        let dec = tensor_decompose(&a1, &[1], &[1]).unwrap();
        let expected: Vec<(Vec<i64>, i64)> = vec![(vec![0], 1), (vec![2], 1)];
        let got: Vec<(Vec<i64>, i64)> = dec
            .iter()
            .map(|(w, m)| (w.coords().to_vec(), i64::try_from(m).unwrap()))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn tensoring_with_the_trivial_module_is_identity() {
        let b2 = rs(Series::B, 2);
        let dec = tensor_decompose(&b2, &[1, 2], &[0, 0]).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(
            dec.get(&DominantWeight::new(vec![1, 2]).unwrap()),
            Some(&BigInt::one())
        );
    }

    #[test]
    fn b2_spin_column_tensor_rule() {
        // V(k w2) (x) V(w2) = V((k+1) w2) + V(w1 + (k-1) w2) + V((k-1) w2).
        let b2 = rs(Series::B, 2);
        for k in 1..=3i64 {
            let dec = tensor_decompose(&b2, &[0, k], &[0, 1]).unwrap();
            assert_eq!(dec.len(), 3, "k = {}", k);
            for coords in [vec![0, k + 1], vec![1, k - 1], vec![0, k - 1]] {
                assert_eq!(
                    dec.get(&DominantWeight::new(coords.clone()).unwrap()),
                    Some(&BigInt::one()),
                    "missing {:?} at k = {}",
                    coords,
                    k
                );
            }
        }
    }

    #[test]
    fn extraction_follows_dominance_not_lex_order() {
        // In A2 the product V(0,1) (x) V(0,1) contains the dominant support
        // weights (0,2) and (1,0), and (1,0) is lexicographically greater
        // even though (0,2) = (1,0) + alpha_2 dominates it.  Extracting by
        // lex order first would pull out V(1,0) with multiplicity 2 and
        // break the dimension count; the dominance-maximal rule gives the
        // correct 9 = 6 + 3.
        let a2 = rs(Series::A, 2);
        let dec = tensor_decompose(&a2, &[0, 1], &[0, 1]).unwrap();
        let got: Vec<(Vec<i64>, i64)> = dec
            .iter()
            .map(|(w, m)| (w.coords().to_vec(), i64::try_from(m).unwrap()))
            .collect();
        assert_eq!(got, vec![(vec![0, 2], 1), (vec![1, 0], 1)]);
    }

    #[test]
    fn tensor_is_commutative_and_dimensions_balance() {
        let cases = [
            (Series::A, 2, vec![1, 0], vec![1, 1]),
            (Series::B, 2, vec![0, 2], vec![1, 0]),
            (Series::A, 1, vec![3], vec![2]),
        ];
        for (series, rank, la, mu) in cases {
            let r = rs(series, rank);
            let ab = tensor_decompose(&r, &la, &mu).unwrap();
            let ba = tensor_decompose(&r, &mu, &la).unwrap();
            assert_eq!(ab, ba);
            let mut total = BigInt::zero();
            for (w, m) in &ab {
                total += m * weyl_dim(&r, w.coords()).unwrap();
            }
            let expected = weyl_dim(&r, &la).unwrap() * weyl_dim(&r, &mu).unwrap();
            assert_eq!(total, expected);
        }
    }

    #[test]
    fn qbinom_hand_values() {
        assert_eq!(qbinom(2, 1), LaurentPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(qbinom(5, 0), LaurentPoly::one());
        assert_eq!(
            qbinom(4, 2),
            LaurentPoly::from_terms([(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
        );
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(3, 4).is_zero());
    }

    #[test]
    fn qbinom_symmetry_degree_and_positivity() {
        for m in 0..=10i64 {
            for k in 0..=m {
                let p = qbinom(m, k);
                assert_eq!(p, qbinom(m, m - k));
                assert_eq!(p.min_exp(), Some(0));
                assert_eq!(p.max_exp(), Some(k * (m - k)));
                assert!(p.terms().all(|(_, c)| c.is_positive()));
            }
        }
    }

    #[test]
    fn qbinom_at_one_is_the_binomial_coefficient() {
        let mut pascal = vec![vec![BigInt::one()]];
        for m in 1..=10usize {
            let prev = &pascal[m - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..m {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            pascal.push(row);
        }
        for (m, row) in pascal.iter().enumerate() {
            for (k, binom) in row.iter().enumerate() {
                assert_eq!(&qbinom(m as i64, k as i64).eval_at_one(), binom);
            }
        }
    }

    #[test]
    fn qbinom_product_and_pascal_routes_agree() {
        for m in 0..=10i64 {
            for k in -1..=m + 1 {
                assert_eq!(qbinom(m, k), qbinom_pascal(m, k), "m={} k={}", m, k);
            }
        }
    }

    #[test]
    fn graded_series_of_a_single_irreducible() {
        let a1 = rs(Series::A, 1);
        for m in 0..=5i64 {
            let gc = GradedCharacter::single(0, DominantWeight::new(vec![m]).unwrap());
            assert_eq!(
                gc.dim_series(&a1).unwrap(),
                LaurentPoly::monomial(0, m + 1)
            );
        }
        assert!(GradedCharacter::new()
            .dim_series(&a1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn graded_series_of_a_known_grading_table() {
        // Graded decomposition V(5); V(3); V(3)+V(1); V(3)+V(1); V(1) in
        // degrees 0..4 has series 6 + 4t + 6t^2 + 6t^3 + 2t^4, total 24.
        let a1 = rs(Series::A, 1);
        let w = |m: i64| DominantWeight::new(vec![m]).unwrap();
        let mut gc = GradedCharacter::new();
        gc.add_mult(0, w(5), BigInt::one());
        gc.add_mult(1, w(3), BigInt::one());
        gc.add_mult(2, w(3), BigInt::one());
        gc.add_mult(2, w(1), BigInt::one());
        gc.add_mult(3, w(3), BigInt::one());
        gc.add_mult(3, w(1), BigInt::one());
        gc.add_mult(4, w(1), BigInt::one());
        let series = gc.dim_series(&a1).unwrap();
        assert_eq!(
            series,
            LaurentPoly::from_terms([(0, 6), (1, 4), (2, 6), (3, 6), (4, 2)])
        );
        assert_eq!(gc.total_dim(&a1).unwrap(), BigInt::from(24));
    }

    #[test]
    fn graded_character_shift_and_merge() {
        let w = |m: i64| DominantWeight::new(vec![m]).unwrap();
        let base = GradedCharacter::single(0, w(2));
        let shifted = base.shifted(3);
        assert_eq!(shifted.max_degree(), Some(3));
        let mut merged = base.clone();
        merged.accumulate(&shifted);
        let a1 = rs(Series::A, 1);
        assert_eq!(
            merged.dim_series(&a1).unwrap(),
            LaurentPoly::from_terms([(0, 3), (3, 3)])
        );
    }

    #[test]
    fn kr_column_dimensions_are_internally_consistent() {
        // For the spin column of B2, a module with graded pieces
        // V((k-2r) w2), r = 0..floor(k/2), has total dimension S_k.  The
        // tensor rule for V(k w2) (x) V(w2) and the two-factor product
        // then have to reproduce each other's totals, including the rank-2
        // product decomposition V(3w2) + V(w1+w2) + V(w2) + V(w2) and the
        // one-copy quotient of dimension 40 = 10 * 4.
        let b2 = rs(Series::B, 2);
        let col = |k: i64| -> BigInt {
            let mut total = BigInt::zero();
            let mut r = 0;
            while k - 2 * r >= 0 {
                total += weyl_dim(&b2, &[0, k - 2 * r]).unwrap();
                r += 1;
            }
            total
        };
        assert_eq!(col(1), BigInt::from(4));
        assert_eq!(col(2), BigInt::from(11));
        assert_eq!(col(3), BigInt::from(24));

        // Graded pieces of the (2,1) two-factor product, assembled from the
        // tensor rule: (V(2w2) + V(0)) (x) V(w2).
        let mut product_total = BigInt::zero();
        for (w, m) in tensor_decompose(&b2, &[0, 2], &[0, 1]).unwrap() {
            product_total += m * weyl_dim(&b2, w.coords()).unwrap();
        }
        product_total += weyl_dim(&b2, &[0, 1]).unwrap();
        assert_eq!(product_total, &col(2) * &col(1));
        assert_eq!(product_total, BigInt::from(44));

        // Removing the single extra V(w2) copy leaves the fusion dimension
        // of the irreducible two-factor product.
        let fusion_dim = weyl_dim(&b2, &[0, 2]).unwrap() * weyl_dim(&b2, &[0, 1]).unwrap();
        assert_eq!(product_total - weyl_dim(&b2, &[0, 1]).unwrap(), fusion_dim);
    }

    #[test]
    fn invalid_weights_are_rejected() {
        let b2 = rs(Series::B, 2);
        assert!(weyl_dim(&b2, &[1, -1]).is_err());
        assert!(weyl_dim(&b2, &[1]).is_err());
        assert!(irreducible_character(&b2, &[-1, 0]).is_err());
        assert!(tensor_decompose(&b2, &[1, 0], &[0, -2]).is_err());
        assert!(DominantWeight::new(vec![0, -1]).is_err());
    }

    #[test]
    fn json_shapes_are_stable() {
        let a1 = rs(Series::A, 1);
        let chi = irreducible_character(&a1, &[1]).unwrap();
        assert_eq!(
            chi.to_json().to_string(),
            r#"{"entries":[{"mult":"1","weight":[-1]},{"mult":"1","weight":[1]}]}"#
        );
        let gc = GradedCharacter::single(2, DominantWeight::new(vec![3]).unwrap());
        assert_eq!(
            gc.to_json().to_string(),
            r#"{"pieces":[{"degree":2,"entries":[{"mult":"1","weight":[3]}]}]}"#
        );
    }

    proptest! {
        #[test]
        fn qbinom_routes_agree_on_random_inputs(m in 0i64..14, k in -2i64..16) {
            prop_assert_eq!(qbinom(m, k), qbinom_pascal(m, k));
        }

        #[test]
        fn rank_one_tensor_matches_clebsch_gordan(a in 0i64..7, b in 0i64..7) {
            let a1 = build_root_system(Series::A, 1).unwrap();
            let dec = tensor_decompose(&a1, &[a], &[b]).unwrap();
            let lo = (a - b).abs();
            let hi = a + b;
            let mut m = lo;
            while m <= hi {
                let w = DominantWeight::new(vec![m]).unwrap();
                prop_assert_eq!(dec.get(&w), Some(&BigInt::one()));
                m += 2;
            }
            prop_assert_eq!(dec.len() as i64, (hi - lo) / 2 + 1);
        }
    }
}
