//! Brute-force sl2 fusion products as explicit matrix modules.
//!
//! A fusion product is built from evaluation modules V_{a_1}(m_1), ...,
//! V_{a_l}(m_l): take the tensor product with x (x) t^k acting by the
//! Leibniz rule with coefficient a_j^k on the j-th factor, filter by
//! t-degree through the cyclic vector v = v_1 (x) ... (x) v_l,
//!
//! ```text
//! F^r = g-closure of ( F^(r-1) + sum_{1<=k<=r} (g (x) t^k) F^(r-k) ),
//! ```
//!
//! and read the graded character off the associated graded module
//! gr^r = F^r / F^(r-1).
//!
//! Everything is exact integer linear algebra: evaluation parameters are
//! integers, so all operator matrices are integral and the filtration
//! spaces are row spaces of integer matrices under fraction-free
//! elimination.  This module deliberately shares no code with the
//! character recursion it is used to cross-check; it knows nothing about
//! partitions beyond their parts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::charring::{DominantWeight, GradedCharacter};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// The three sl2 Chevalley generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    E,
    F,
    H,
}

/// A tensor product of sl2 evaluation modules with an explicit basis.
///
/// The basis is the product of the weight bases of the factors; the basis
/// vector indexed by (i_1, ..., i_l) has h-eigenvalue sum_j (m_j - 2 i_j),
/// so the h-action is diagonal by construction.  `x (x) t^k` acts by the
/// Leibniz rule, scaling the j-th summand by a_j^k.
#[derive(Debug, Clone)]
pub struct MatrixModule {
    factors: Vec<(u64, i64)>,
    dim: usize,
    strides: Vec<usize>,
    weights: Vec<i64>,
    distinct: bool,
}

impl MatrixModule {
    /// The evaluation module V_a(m): V(m) with x (x) t^k acting as a^k x.
    pub fn evaluation(m: u64, a: i64) -> MatrixModule {
        MatrixModule::tensor(&[(m, a)]).expect("single factor always valid")
    }

    /// The tensor product of evaluation modules with the given highest
    /// weights and parameters.  Repeated parameters are legal but flagged:
    /// the module is then reducible and need not be cyclic.
    pub fn tensor(factors: &[(u64, i64)]) -> Result<MatrixModule> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "a tensor product needs at least one factor".to_string(),
            ));
        }
        let mut dim = 1usize;
        let mut strides = vec![0usize; factors.len()];
        for (j, &(m, _)) in factors.iter().enumerate().rev() {
            strides[j] = dim;
            dim = dim
                .checked_mul(m as usize + 1)
                .ok_or_else(|| Error::InvalidParameter("module too large".to_string()))?;
        }
        let mut weights = Vec::with_capacity(dim);
        for idx in 0..dim {
            let mut w = 0i64;
            for (j, &(m, _)) in factors.iter().enumerate() {
                let i = idx / strides[j] % (m as usize + 1);
                w += m as i64 - 2 * i as i64;
            }
            weights.push(w);
        }
        let mut params: Vec<i64> = factors.iter().map(|&(_, a)| a).collect();
        params.sort_unstable();
        params.dedup();
        Ok(MatrixModule {
            distinct: params.len() == factors.len(),
            factors: factors.to_vec(),
            dim,
            strides,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    /// h-eigenvalue of each basis vector.
    pub fn weight_of_basis(&self) -> &[i64] {
        &self.weights
    }

    /// Whether the evaluation parameters are pairwise distinct, the
    /// hypothesis under which the tensor product is cyclic.
    pub fn distinct_parameters(&self) -> bool {
        self.distinct
    }

    /// The tensor product of the factor highest-weight vectors.
    pub fn cyclic_vector(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim];
        v[0] = BigInt::one();
        v
    }

    fn factor_index(&self, idx: usize, j: usize) -> usize {
        idx / self.strides[j] % (self.factors[j].0 as usize + 1)
    }

    /// Applies x (x) t^power to a coordinate vector.
    pub fn apply(&self, gen: Gen, power: u32, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.dim];
        let coeffs: Vec<BigInt> = self
            .factors
            .iter()
            .map(|&(_, a)| BigInt::from(a).pow(power))
            .collect();
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &(m, _)) in self.factors.iter().enumerate() {
                if coeffs[j].is_zero() {
                    continue;
                }
                let i = self.factor_index(idx, j);
                // Weight basis of V(m): e v_i = (m-i+1) v_(i-1),
                // f v_i = (i+1) v_(i+1), h v_i = (m-2i) v_i.
                let (target, scale) = match gen {
                    Gen::E => {
                        if i == 0 {
                            continue;
                        }
                        (idx - self.strides[j], BigInt::from(m as i64 - i as i64 + 1))
                    }
                    Gen::F => {
                        if i == m as usize {
                            continue;
                        }
                        (idx + self.strides[j], BigInt::from(i as i64 + 1))
                    }
                    Gen::H => (idx, BigInt::from(m as i64 - 2 * i as i64)),
                };
                if scale.is_zero() {
                    continue;
                }
                out[target] += c * &coeffs[j] * scale;
            }
        }
        out
    }

    /// The dim x dim matrix of x (x) t^power in the product basis,
    /// column j = image of basis vector j.
    pub fn action_matrix(&self, gen: Gen, power: u32) -> Vec<Vec<BigInt>> {
        let mut cols = Vec::with_capacity(self.dim);
        for idx in 0..self.dim {
            let mut v = vec![BigInt::zero(); self.dim];
            v[idx] = BigInt::one();
            cols.push(self.apply(gen, power, &v));
        }
        cols
    }

    /// Verifies [x (x) t^a, y (x) t^b] = [x,y] (x) t^(a+b) on every basis
    /// vector for all powers up to `max_power`, in exact arithmetic.
    pub fn commutation_check(&self, max_power: u32) -> Result<()> {
        // (x, y, [x,y] as an optional scaled generator).
        type Case = (Gen, Gen, Option<(Gen, i64)>);
        let pairs: [Case; 4] = [
            (Gen::E, Gen::F, Some((Gen::H, 1))),
            (Gen::H, Gen::E, Some((Gen::E, 2))),
            (Gen::H, Gen::F, Some((Gen::F, -2))),
            (Gen::E, Gen::E, None),
        ];
        for a in 0..=max_power {
            for b in 0..=max_power {
                for &(x, y, ref expect) in &pairs {
                    for idx in 0..self.dim {
                        let mut v = vec![BigInt::zero(); self.dim];
                        v[idx] = BigInt::one();
                        let xy = self.apply(x, a, &self.apply(y, b, &v));
                        let yx = self.apply(y, b, &self.apply(x, a, &v));
                        let bracket: Vec<BigInt> =
                            xy.iter().zip(&yx).map(|(p, q)| p - q).collect();
                        let rhs = match expect {
                            None => vec![BigInt::zero(); self.dim],
                            Some((z, scale)) => self
                                .apply(*z, a + b, &v)
                                .into_iter()
                                .map(|c| c * *scale)
                                .collect(),
                        };
                        if bracket != rhs {
                            return Err(Error::Internal(format!(
                                "commutation failed for powers ({}, {}) on basis {}",
                                a, b, idx
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A subspace stored as one integer row space per h-weight, each block in
/// echelon form with primitive rows.
#[derive(Debug, Clone, Default)]
struct WeightGradedSpace {
    blocks: BTreeMap<i64, Vec<Vec<BigInt>>>,
}

impl WeightGradedSpace {
    fn dim(&self) -> usize {
        self.blocks.values().map(|b| b.len()).sum()
    }

    fn block_dim(&self, w: i64) -> usize {
        self.blocks.get(&w).map(|b| b.len()).unwrap_or(0)
    }

    /// Reduces v against a block; returns the primitive residue if v is
    /// independent of the block.
    fn reduce(rows: &[Vec<BigInt>], mut v: Vec<BigInt>) -> Option<Vec<BigInt>> {
        for row in rows {
            let p = pivot(row).expect("stored rows are nonzero");
            if v[p].is_zero() {
                continue;
            }
            let lead = row[p].clone();
            let coeff = v[p].clone();
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi = &*vi * &lead - ri * &coeff;
            }
            make_primitive(&mut v);
        }
        if v.iter().all(|c| c.is_zero()) {
            None
        } else {
            Some(v)
        }
    }

    /// Inserts a single-weight vector; returns true when the dimension grew.
    fn insert(&mut self, weight: i64, v: Vec<BigInt>) -> bool {
        if v.iter().all(|c| c.is_zero()) {
            return false;
        }
        let rows = self.blocks.entry(weight).or_default();
        match Self::reduce(rows, v) {
            None => false,
            Some(reduced) => {
                let p = pivot(&reduced).expect("nonzero");
                let pos = rows
                    .iter()
                    .position(|r| pivot(r).expect("nonzero") > p)
                    .unwrap_or(rows.len());
                rows.insert(pos, reduced);
                true
            }
        }
    }

    /// Membership for an arbitrary vector: split into weight components
    /// and reduce each against its block.
    fn contains(&self, module: &MatrixModule, v: &[BigInt]) -> bool {
        let mut by_weight: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
        for (idx, c) in v.iter().enumerate() {
            if !c.is_zero() {
                by_weight
                    .entry(module.weights[idx])
                    .or_insert_with(|| vec![BigInt::zero(); module.dim])[idx] = c.clone();
            }
        }
        by_weight.into_iter().all(|(w, comp)| {
            let rows: &[Vec<BigInt>] = self.blocks.get(&w).map(|b| b.as_slice()).unwrap_or(&[]);
            Self::reduce(rows, comp).is_none()
        })
    }
}

fn pivot(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

fn make_primitive(v: &mut [BigInt]) {
    let mut content = BigInt::zero();
    for c in v.iter() {
        if !c.is_zero() {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
    }
    if content.is_zero() || content.is_one() {
        if let Some(p) = pivot(v) {
            if v[p].is_negative() {
                for c in v.iter_mut() {
                    *c = -&*c;
                }
            }
        }
        return;
    }
    let negate = pivot(v).map(|p| v[p].is_negative()).unwrap_or(false);
    for c in v.iter_mut() {
        *c = &*c / &content;
        if negate {
            *c = -&*c;
        }
    }
}

/// The t-degree filtration F^0 <= F^1 <= ... of the cyclic span of a
/// matrix module, each space g-stable by construction.
pub struct Filtration<'a> {
    module: &'a MatrixModule,
    spaces: Vec<WeightGradedSpace>,
}

impl<'a> Filtration<'a> {
    /// Number of computed steps (the last space is the stable span).
    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn dim_at(&self, r: usize) -> usize {
        self.spaces[r].dim()
    }

    pub fn contains(&self, r: usize, v: &[BigInt]) -> bool {
        self.spaces[r].contains(self.module, v)
    }
}

/// Closes a space under the degree-zero action of e and f, starting from
/// the given worklist of freshly inserted (weight, row) pairs.
fn g_closure(
    module: &MatrixModule,
    space: &mut WeightGradedSpace,
    mut worklist: Vec<(i64, Vec<BigInt>)>,
) {
    while let Some((w, row)) = worklist.pop() {
        for (gen, dw) in [(Gen::E, 2i64), (Gen::F, -2i64)] {
            let image = module.apply(gen, 0, &row);
            if image.iter().all(|c| c.is_zero()) {
                continue;
            }
            if space.insert(w + dw, image.clone()) {
                worklist.push((w + dw, image));
            }
        }
    }
}

/// Computes the t-degree filtration of the cyclic span of the module.
///
/// Powers t^k with k >= number of factors are omitted: modulo the minimal
/// polynomial prod_j (t - a_j) they are combinations of lower powers
/// applied at lower filtration steps, so they contribute nothing new.
/// The loop stops once the span is the whole module or the filtration has
/// stalled for that many consecutive steps (it can then never grow again).
pub fn filtration(module: &MatrixModule) -> Filtration<'_> {
    let l = module.factors.len();
    let mut f0 = WeightGradedSpace::default();
    let top_weight = module.weights[0];
    f0.insert(top_weight, module.cyclic_vector());
    g_closure(module, &mut f0, vec![(top_weight, module.cyclic_vector())]);
    let mut spaces = vec![f0];

    let mut stall = 0usize;
    while spaces.last().expect("nonempty").dim() < module.dim && stall < l {
        let r = spaces.len();
        let mut next = spaces[r - 1].clone();
        let mut fresh = Vec::new();
        for k in 1..=r.min(l.saturating_sub(1)) {
            let source = &spaces[r - k];
            for (&w, rows) in &source.blocks {
                for row in rows {
                    for (gen, dw) in [(Gen::E, 2i64), (Gen::F, -2i64), (Gen::H, 0i64)] {
                        let image = module.apply(gen, k as u32, row);
                        if image.iter().all(|c| c.is_zero()) {
                            continue;
                        }
                        if next.insert(w + dw, image.clone()) {
                            fresh.push((w + dw, image));
                        }
                    }
                }
            }
        }
        g_closure(module, &mut next, fresh);
        if next.dim() == spaces[r - 1].dim() {
            stall += 1;
        } else {
            stall = 0;
        }
        spaces.push(next);
    }
    // Drop trailing stalled copies so the last space is the first stable one.
    while spaces.len() >= 2 && spaces[spaces.len() - 1].dim() == spaces[spaces.len() - 2].dim() {
        spaces.pop();
    }
    Filtration { module, spaces }
}

/// Result of one oracle run.
#[derive(Debug, Clone)]
pub struct FusionResult {
    /// Graded character of the associated graded module of the cyclic span.
    pub character: GradedCharacter,
    /// Whether the evaluation parameters were pairwise distinct.
    pub distinct_parameters: bool,
    /// Dimension of the cyclic span (equals ambient_dim for distinct
    /// parameters, where the tensor product is cyclic).
    pub span_dim: usize,
    /// Dimension of the full tensor product.
    pub ambient_dim: usize,
}

/// Runs the oracle: builds the tensor product, filters by t-degree, and
/// decomposes each graded piece into sl2 isotypics through weight
/// multiplicity differences mult(m) - mult(m+2).
pub fn fusion_graded_char(factors: &[(u64, i64)]) -> Result<FusionResult> {
    let module = MatrixModule::tensor(factors)?;
    let filt = filtration(&module);
    let mut character = GradedCharacter::new();
    for r in 0..filt.len() {
        let space = &filt.spaces[r];
        let prev = if r == 0 { None } else { Some(&filt.spaces[r - 1]) };
        let mult = |w: i64| -> i64 {
            let now = space.block_dim(w) as i64;
            let before = prev.map(|p| p.block_dim(w) as i64).unwrap_or(0);
            now - before
        };
        let mut piece_total = 0i64;
        let max_w = module.weights.iter().copied().max().unwrap_or(0);
        for m in 0..=max_w {
            let c = mult(m) - mult(m + 2);
            if c < 0 {
                return Err(Error::Internal(format!(
                    "negative isotypic multiplicity at degree {} weight {}",
                    r, m
                )));
            }
            if mult(m) != mult(-m) {
                return Err(Error::Internal(format!(
                    "weight multiplicities not symmetric at degree {} weight {}",
                    r, m
                )));
            }
            if c > 0 {
                character.add_mult(
                    r as u64,
                    DominantWeight::new(vec![m]).expect("m >= 0"),
                    BigInt::from(c),
                );
                piece_total += c * (m + 1);
            }
        }
        let piece_dim = space.dim() as i64 - prev.map(|p| p.dim() as i64).unwrap_or(0);
        if piece_total != piece_dim {
            return Err(Error::Internal(format!(
                "isotypic decomposition misses degree {}: {} of {}",
                r, piece_total, piece_dim
            )));
        }
    }
    Ok(FusionResult {
        character,
        distinct_parameters: module.distinct_parameters(),
        span_dim: filt.spaces.last().expect("nonempty").dim(),
        ambient_dim: module.dim(),
    })
}

/// Default evaluation parameters 0, 1, ..., len-1.
pub fn default_params(len: usize) -> Vec<i64> {
    (0..len as i64).collect()
}

/// Pairs the parts of a partition with explicit parameters and runs the
/// oracle.  The parameter list must match the number of parts.
pub fn fusion_for_partition(xi: &Partition, params: &[i64]) -> Result<FusionResult> {
    if xi.is_empty() {
        // The empty fusion is the trivial module in degree zero.
        let mut character = GradedCharacter::new();
        character.add_mult(0, DominantWeight::new(vec![0])?, BigInt::one());
        return Ok(FusionResult {
            character,
            distinct_parameters: true,
            span_dim: 1,
            ambient_dim: 1,
        });
    }
    if params.len() != xi.len() {
        return Err(Error::MalformedParameters(format!(
            "{} parameters for {} parts",
            params.len(),
            xi.len()
        )));
    }
    let factors: Vec<(u64, i64)> = xi
        .parts()
        .iter()
        .zip(params)
        .map(|(&m, &a)| (m, a))
        .collect();
    fusion_graded_char(&factors)
}

/// Checks that every given parameter set yields the same graded character
/// for the fusion of the parts of xi.  Each set must consist of pairwise
/// distinct integers.
pub fn parameter_independence_check(xi: &Partition, param_sets: &[Vec<i64>]) -> Result<bool> {
    let mut reference: Option<GradedCharacter> = None;
    for params in param_sets {
        let mut sorted = params.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != params.len() {
            return Err(Error::MalformedParameters(format!(
                "parameters {:?} are not pairwise distinct",
                params
            )));
        }
        let run = fusion_for_partition(xi, params)?;
        match &reference {
            None => reference = Some(run.character),
            Some(r) => {
                if *r != run.character {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
