//! The rank-one computational core: dimensions, graded characters, and
//! Demazure-flag data for the family of cyclic modules indexed by
//! partitions, via the short-exact-sequence recursion
//!
//! ```text
//! 0 -> tau_{(l-1) xi_l} CV(xi-) -> CV(xi) -> CV(xi+) -> 0
//! ```
//!
//! Everything here is sl2-specific.  A partition `xi` of `lambda` labels a
//! cyclic quotient `CV(xi)` of the Weyl module `W(lambda)`; the special
//! shapes are
//!
//! * `xi_parts(lambda, N)`: the truncated Weyl module `W_N(lambda)`,
//! * `xi_demazure(ell, lambda, 1)`: the level-`ell` Demazure module
//!   `D(ell, lambda)`,
//! * `(1^lambda)`: the untruncated Weyl module `W(lambda)`.
//!
//! Two recursions run over the same tree of partitions with different base
//! cases: the graded-character recursion bottoms out at single-part
//! partitions (evaluation modules), the flag recursion bottoms out at
//! level-`ell` Demazure shapes.  Both are memoized in a `CvContext`, which
//! confines the tables to one evaluation session; results are independent
//! of evaluation order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charring::{DominantWeight, GradedCharacter};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partitions::{
    is_demazure_shape, xi_demazure, xi_minus, xi_parts, xi_plus, Partition,
};
use crate::rootsys::{build_root_system, RootSystem, Series};

/// Memoization tables for the character and flag recursions, plus the
/// rank-one root system used for dimension bookkeeping.
///
/// A context is cheap to create and confined to one evaluation session;
/// entries are written once and never mutated afterwards.
pub struct CvContext {
    a1: RootSystem,
    char_memo: BTreeMap<Partition, GradedCharacter>,
    flag_memo: BTreeMap<(Partition, u64), BTreeMap<u64, LaurentPoly>>,
}

impl CvContext {
    pub fn new() -> Self {
        CvContext {
            a1: build_root_system(Series::A, 1).expect("A1 always builds"),
            char_memo: BTreeMap::new(),
            flag_memo: BTreeMap::new(),
        }
    }

    /// The rank-one root system backing all dimension computations here.
    pub fn rank_one(&self) -> &RootSystem {
        &self.a1
    }
}

impl Default for CvContext {
    fn default() -> Self {
        CvContext::new()
    }
}

/// dim CV(xi) = prod_j (xi_j + 1); the empty partition gives 1.
///
/// This is the fusion-product dimension: CV(xi) is a fusion of evaluation
/// modules of highest weights xi_1, ..., xi_l.
pub fn dim_cv(xi: &Partition) -> BigInt {
    let mut dim = BigInt::one();
    for &p in xi.parts() {
        dim *= BigInt::from(p + 1);
    }
    dim
}

/// dim W_N(lambda) by the closed formula (q+2)^p (q+1)^(N-p) where
/// lambda = N q + p, 0 <= p < N.  Agrees with `dim_cv(xi_parts(lambda, N))`.
pub fn dim_truncated(lambda: u64, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "truncation level N must be positive".to_string(),
        ));
    }
    let q = lambda / n;
    let p = lambda % n;
    Ok(BigInt::from(q + 2).pow(p as u32) * BigInt::from(q + 1).pow((n - p) as u32))
}

/// The graded isotypic character of CV(xi).
///
/// Recursion: char(xi) = char(xi+) + t^((l-1) xi_l) char(xi-), with base
/// cases char((m)) = V(m) at degree 0 and char(()) = V(0) at degree 0.
/// The xi- branch strictly reduces |xi| and the xi+ branch strictly climbs
/// the dominance order at fixed size, so the recursion terminates; results
/// are memoized by partition.
pub fn graded_char_cv(ctx: &mut CvContext, xi: &Partition) -> GradedCharacter {
    if let Some(hit) = ctx.char_memo.get(xi) {
        return hit.clone();
    }
    let result = if xi.len() < 2 {
        let m = xi.first() as i64;
        GradedCharacter::single(0, DominantWeight::new(vec![m]).expect("m >= 0"))
    } else {
        let l = xi.len() as u64;
        let shift = (l - 1) * xi.last();
        let plus = xi_plus(xi).expect("len >= 2");
        let minus = xi_minus(xi).expect("len >= 2");
        let mut acc = graded_char_cv(ctx, &plus);
        acc.accumulate(&graded_char_cv(ctx, &minus).shifted(shift));
        acc
    };
    ctx.char_memo.insert(xi.clone(), result.clone());
    result
}

/// A named module in the rank-one family, with an optional grade shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    /// CV(xi) for an explicit partition.
    Cv(Partition),
    /// The truncated Weyl module W_N(lambda); resolves to xi_parts(lambda, N).
    Truncated { lambda: u64, n: u64 },
    /// The untruncated Weyl module W(lambda); resolves to (1^lambda).
    Weyl { lambda: u64 },
    /// The level-ell Demazure module D(ell, lambda); resolves to
    /// xi_demazure(ell, lambda, 1).
    Demazure { level: u64, lambda: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleLabel {
    pub kind: ModuleKind,
    /// Non-negative grade shift tau_m.
    pub grade_shift: u64,
}

impl ModuleLabel {
    pub fn plain(kind: ModuleKind) -> Self {
        ModuleLabel {
            kind,
            grade_shift: 0,
        }
    }

    /// The partition whose CV module this label names.
    pub fn resolve(&self) -> Result<Partition> {
        match &self.kind {
            ModuleKind::Cv(xi) => Ok(xi.clone()),
            ModuleKind::Truncated { lambda, n } => xi_parts(*lambda, *n),
            ModuleKind::Weyl { lambda } => {
                Ok(crate::partitions::xi_parts_untruncated(*lambda))
            }
            ModuleKind::Demazure { level, lambda } => xi_demazure(*level, *lambda, 1),
        }
    }
}

impl std::fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.grade_shift > 0 {
            write!(f, "tau_{} ", self.grade_shift)?;
        }
        match &self.kind {
            ModuleKind::Cv(xi) => write!(f, "CV{}", xi),
            ModuleKind::Truncated { lambda, n } => write!(f, "W_{}({})", n, lambda),
            ModuleKind::Weyl { lambda } => write!(f, "W({})", lambda),
            ModuleKind::Demazure { level, lambda } => write!(f, "D({},{})", level, lambda),
        }
    }
}

/// Graded character of a labeled module: the character of the resolved
/// partition, degrees moved up by the label's grade shift.
pub fn graded_char_label(ctx: &mut CvContext, label: &ModuleLabel) -> Result<GradedCharacter> {
    let xi = label.resolve()?;
    Ok(graded_char_cv(ctx, &xi).shifted(label.grade_shift))
}

/// Demazure-flag multiplicity polynomials of one module at a fixed level.
///
/// `entry(mu)` is the generating polynomial `sum_m [V : tau_m D(level, mu)] t^m`
/// counting the grade shifts at which `D(level, mu)` occurs in a level-`level`
/// flag.  Multiplicities do not depend on the choice of flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagMultiplicities {
    pub level: u64,
    entries: BTreeMap<u64, LaurentPoly>,
}

impl FlagMultiplicities {
    pub fn entries(&self) -> impl Iterator<Item = (u64, &LaurentPoly)> {
        self.entries.iter().map(|(&m, p)| (m, p))
    }

    /// The multiplicity polynomial of D(level, mu); zero when absent.
    pub fn entry(&self, mu: u64) -> LaurentPoly {
        self.entries.get(&mu).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Flag length: the number of flag steps, i.e. the sum of all
    /// multiplicity polynomials evaluated at t = 1.
    pub fn length(&self) -> BigInt {
        self.entries.values().map(|p| p.eval_at_one()).sum()
    }

    /// JSON shape: {"level": l, "entries": [{"mu": m, "poly": {...}}]}.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(mu, poly)| serde_json::json!({ "mu": mu, "poly": poly.to_json() }))
            .collect();
        serde_json::json!({ "level": self.level, "entries": entries })
    }
}

/// Computes the level-`level` Demazure flag multiplicities of CV(xi).
///
/// A flag exists exactly when `level >= xi_1`.  Algorithm: a level-`level`
/// Demazure shape is its own one-step flag; otherwise recurse through the
/// short exact sequence, result(xi) = result(xi+) + t^((l-1) xi_l)
/// result(xi-).  Both branches keep the largest part at most `level`, so
/// the recursion never leaves admissible partitions.
pub fn flag_multiplicities(
    ctx: &mut CvContext,
    xi: &Partition,
    level: u64,
) -> Result<FlagMultiplicities> {
    if level < xi.first() {
        return Err(Error::FlagLevelTooSmall {
            level,
            xi1: xi.first(),
        });
    }
    let entries = flag_entries(ctx, xi, level);
    Ok(FlagMultiplicities { level, entries })
}

fn flag_entries(ctx: &mut CvContext, xi: &Partition, level: u64) -> BTreeMap<u64, LaurentPoly> {
    let key = (xi.clone(), level);
    if let Some(hit) = ctx.flag_memo.get(&key) {
        return hit.clone();
    }
    let result = if is_demazure_shape(xi, level) {
        let mut one = BTreeMap::new();
        one.insert(xi.size(), LaurentPoly::one());
        one
    } else {
        // Not a Demazure shape with xi_1 <= level forces at least 2 parts.
        let l = xi.len() as u64;
        let shift = ((l - 1) * xi.last()) as i64;
        let plus = xi_plus(xi).expect("len >= 2");
        let minus = xi_minus(xi).expect("len >= 2");
        let mut acc = flag_entries(ctx, &plus, level);
        for (mu, poly) in flag_entries(ctx, &minus, level) {
            let shifted = poly.shifted(shift);
            let entry = acc.entry(mu).or_insert_with(LaurentPoly::zero);
            *entry = entry.add(&shifted);
        }
        acc
    };
    ctx.flag_memo.insert(key, result.clone());
    result
}

/// Flag length at the given level: number of Demazure steps in any
/// level-`level` flag of CV(xi).
pub fn flag_length(ctx: &mut CvContext, xi: &Partition, level: u64) -> Result<BigInt> {
    Ok(flag_multiplicities(ctx, xi, level)?.length())
}

/// Closed form for the level-2 flag multiplicities of W_N(lambda) in the
/// window N <= lambda < 2N:
///
/// ```text
/// [W_N(lambda) : D(2, lambda - 2k)](t) = t^(k ceil(lambda/2)) [N - ceil(lambda/2) choose k]_t
/// ```
///
/// The Gaussian binomial vanishes for k > N - ceil(lambda/2), which is the
/// "0 otherwise" clause.  Errors when (lambda, N) is outside the window or
/// 2k > lambda.
pub fn flag_mult_level2_closed(lambda: u64, n: u64, k: u64) -> Result<LaurentPoly> {
    if !(n <= lambda && lambda < 2 * n) {
        return Err(Error::InvalidParameter(format!(
            "closed form needs N <= lambda < 2N, got lambda={} N={}",
            lambda, n
        )));
    }
    if 2 * k > lambda {
        return Err(Error::InvalidParameter(format!(
            "k={} exceeds lambda/2 with lambda={}",
            k, lambda
        )));
    }
    let half_up = lambda.div_ceil(2);
    Ok(qbinom_shifted(n - half_up, k, half_up))
}

/// Closed form for the level-2 flag multiplicities of the untruncated
/// W(lambda):
///
/// ```text
/// [W(lambda) : D(2, lambda - 2k)](t) = t^(k ceil(lambda/2)) [floor(lambda/2) choose k]_t
/// ```
pub fn flag_mult_level2_closed_untruncated(lambda: u64, k: u64) -> Result<LaurentPoly> {
    if 2 * k > lambda {
        return Err(Error::InvalidParameter(format!(
            "k={} exceeds lambda/2 with lambda={}",
            k, lambda
        )));
    }
    Ok(qbinom_shifted(lambda / 2, k, lambda.div_ceil(2)))
}

fn qbinom_shifted(m: u64, k: u64, step: u64) -> LaurentPoly {
    crate::charring::qbinom(m as i64, k as i64).shifted((k * step) as i64)
}

/// Verdict of `classify_demazure`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DemazureClassification {
    /// W_N(lambda) is the Demazure module D(level, lambda).
    Demazure { level: u64 },
    /// W_N(lambda) is not a Demazure module; the certificate is a computed
    /// flag of length > 1 at the stated level.
    NotDemazure { flag_level: u64, flag_length: BigInt },
}

impl std::fmt::Display for DemazureClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DemazureClassification::Demazure { level } => {
                write!(f, "Demazure at level {}", level)
            }
            DemazureClassification::NotDemazure {
                flag_level,
                flag_length,
            } => write!(
                f,
                "not Demazure (level-{} flag has length {})",
                flag_level, flag_length
            ),
        }
    }
}

/// Decides whether W_N(lambda) is a Demazure module.
///
/// With lambda = Nq + p, 0 <= p < N:
/// * p = 0: W_N(lambda) = D(q, lambda) (level 1 when lambda = 0);
/// * p = N-1 or p = lambda: W_N(lambda) = D(q+1, lambda);
/// * otherwise not Demazure.
///
/// Every verdict is certified computationally, never read off the case
/// split alone: the Demazure cases check that xi_parts(lambda, N) literally
/// equals the Demazure-shape partition at the claimed level, and the
/// negative case computes a level-(q+1) flag and reports its length > 1.
pub fn classify_demazure(
    ctx: &mut CvContext,
    lambda: u64,
    n: u64,
) -> Result<DemazureClassification> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "truncation level N must be positive".to_string(),
        ));
    }
    let q = lambda / n;
    let p = lambda % n;
    let xi = xi_parts(lambda, n)?;
    let claimed_level = if p == 0 {
        q.max(1)
    } else if p == n - 1 || p == lambda {
        q + 1
    } else {
        let length = flag_length(ctx, &xi, q + 1)?;
        if length <= BigInt::one() {
            return Err(Error::Internal(format!(
                "expected a flag of length > 1 for lambda={} N={}",
                lambda, n
            )));
        }
        return Ok(DemazureClassification::NotDemazure {
            flag_level: q + 1,
            flag_length: length,
        });
    };
    if xi != xi_demazure(claimed_level, lambda, 1)? {
        return Err(Error::Internal(format!(
            "case split and Demazure shape disagree at lambda={} N={}",
            lambda, n
        )));
    }
    Ok(DemazureClassification::Demazure {
        level: claimed_level,
    })
}

/// Dimension bookkeeping for the kernel of the surjection
/// W_N(lambda) -> W_{N-1}(lambda).
///
/// The kernel is the image of a grade shift of W_N(lambda - 2); it is the
/// whole of it exactly when the three dimensions balance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub lambda: u64,
    pub n: u64,
    /// dim W_N(lambda).
    pub dim_source: BigInt,
    /// dim W_N(lambda - 2), the candidate kernel.
    pub dim_candidate: BigInt,
    /// dim W_{N-1}(lambda), the quotient.
    pub dim_quotient: BigInt,
    /// Whether dim_source - dim_candidate = dim_quotient.
    pub holds: bool,
}

impl KernelReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": self.lambda,
            "n": self.n,
            "dim_source": self.dim_source.to_string(),
            "dim_candidate": self.dim_candidate.to_string(),
            "dim_quotient": self.dim_quotient.to_string(),
            "holds": self.holds,
        })
    }
}

impl std::fmt::Display for KernelReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "kernel of W_{}({}) -> W_{}({}): {} - {} {} {} ({})",
            self.n,
            self.lambda,
            self.n - 1,
            self.lambda,
            self.dim_source,
            self.dim_candidate,
            if self.holds { "=" } else { "!=" },
            self.dim_quotient,
            if self.holds {
                "kernel is the full truncated module"
            } else {
                "kernel is a proper quotient of it"
            }
        )
    }
}

/// Checks the dimension identity
/// `dim W_N(lambda) - dim W_N(lambda-2) = dim W_{N-1}(lambda)`.
///
/// Requires lambda >= 2 and N >= 2.  Always true for N = 2.  In the window
/// N <= lambda < 2N it holds exactly for lambda = N once N > 2 (for N = 2
/// both lambda = 2 and lambda = 3 qualify, consistent with the previous
/// sentence).
pub fn kernel_is_truncated(lambda: u64, n: u64) -> Result<KernelReport> {
    if lambda < 2 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "kernel check needs lambda >= 2 and N >= 2, got lambda={} N={}",
            lambda, n
        )));
    }
    let dim_source = dim_truncated(lambda, n)?;
    let dim_candidate = dim_truncated(lambda - 2, n)?;
    let dim_quotient = dim_truncated(lambda, n - 1)?;
    let holds = &dim_source - &dim_candidate == dim_quotient;
    Ok(KernelReport {
        lambda,
        n,
        dim_source,
        dim_candidate,
        dim_quotient,
        holds,
    })
}

/// Identification of a short exact sequence with truncated Weyl modules,
/// available when xi = xi_parts(lambda, N) with N <= lambda < 2N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedIdentification {
    pub lambda: u64,
    pub n: u64,
    /// xi+ should be xi_parts(lambda, N-1).
    pub plus_matches: bool,
    /// With p = lambda mod N, xi- should be xi_parts(lambda-2, N-2) for
    /// p < N-1 and xi_parts(lambda-2, N-1) for p = N-1.
    pub minus_level: u64,
    pub minus_matches: bool,
}

/// Outcome of checking one short exact sequence
/// 0 -> tau_shift CV(xi-) -> CV(xi) -> CV(xi+) -> 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SesReport {
    pub xi: Partition,
    pub plus: Partition,
    pub minus: Partition,
    pub shift: u64,
    pub dim: BigInt,
    pub dim_plus: BigInt,
    pub dim_minus: BigInt,
    /// dim = dim_plus + dim_minus.
    pub dims_hold: bool,
    /// char(xi) = char(xi+) + t^shift char(xi-), as graded characters.
    pub chars_hold: bool,
    pub truncated: Option<TruncatedIdentification>,
    /// Conjunction of every check above.
    pub holds: bool,
}

impl SesReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "xi": self.xi.to_json(),
            "xi_plus": self.plus.to_json(),
            "xi_minus": self.minus.to_json(),
            "shift": self.shift,
            "dim": self.dim.to_string(),
            "dim_plus": self.dim_plus.to_string(),
            "dim_minus": self.dim_minus.to_string(),
            "dims_hold": self.dims_hold,
            "chars_hold": self.chars_hold,
            "truncated_case_checked": self.truncated.is_some(),
            "holds": self.holds,
        })
    }
}

/// Verifies the short exact sequence attached to xi (at least 2 parts):
/// dimension additivity and exact graded-character additivity with the
/// shift (l-1) xi_l.  For balanced xi with parts in {1, 2} (the truncated
/// Weyl window N <= lambda < 2N) it additionally verifies that the
/// sequence reads 0 -> tau W_M(lambda-2) -> W_N(lambda) -> W_{N-1}(lambda) -> 0
/// with M = N-2 for p < N-1 and M = N-1 for p = N-1.
///
/// A falsified identity is reported in the result, never silently dropped
/// and never an `Err`.
pub fn verify_ses(ctx: &mut CvContext, xi: &Partition) -> Result<SesReport> {
    if xi.len() < 2 {
        return Err(Error::InvalidPartition(format!(
            "short exact sequence needs at least 2 parts, got {}",
            xi
        )));
    }
    let plus = xi_plus(xi)?;
    let minus = xi_minus(xi)?;
    let shift = (xi.len() as u64 - 1) * xi.last();

    let dim = dim_cv(xi);
    let dim_plus = dim_cv(&plus);
    let dim_minus = dim_cv(&minus);
    let dims_hold = dim == &dim_plus + &dim_minus;

    let mut expected = graded_char_cv(ctx, &plus);
    expected.accumulate(&graded_char_cv(ctx, &minus).shifted(shift));
    let chars_hold = graded_char_cv(ctx, xi) == expected;

    let truncated = truncated_identification(xi, &plus, &minus)?;
    let truncated_ok = truncated
        .as_ref()
        .map(|t| t.plus_matches && t.minus_matches)
        .unwrap_or(true);

    Ok(SesReport {
        xi: xi.clone(),
        plus,
        minus,
        shift,
        dim,
        dim_plus,
        dim_minus,
        dims_hold,
        chars_hold,
        truncated,
        holds: dims_hold && chars_hold && truncated_ok,
    })
}

fn truncated_identification(
    xi: &Partition,
    plus: &Partition,
    minus: &Partition,
) -> Result<Option<TruncatedIdentification>> {
    let lambda = xi.size();
    let n = xi.len() as u64;
    // The window N <= lambda < 2N is exactly the partitions with parts in
    // {1, 2} and at least one 1; all parts equal to 2 would mean lambda = 2N.
    if xi.first() > 2 || xi.last() != 1 || *xi != xi_parts(lambda, n)? {
        return Ok(None);
    }
    let p = lambda % n;
    let plus_matches = *plus == xi_parts(lambda, n - 1)?;
    let minus_level = if p == n - 1 { n - 1 } else { n - 2 };
    let expected_minus = if minus_level == 0 {
        Partition::empty()
    } else {
        xi_parts(lambda - 2, minus_level)?
    };
    let minus_matches = *minus == expected_minus;
    Ok(Some(TruncatedIdentification {
        lambda,
        n,
        plus_matches,
        minus_level,
        minus_matches,
    }))
}

/// Checks the grade-shift identity for flag multiplicities of the
/// two-block family xi = ((ell+1)^a, ell^b) at flag level ell+1:
///
/// ```text
/// [CV((ell+1)^a, ell^b)) : D(ell+1, mu)](t)
///     = t^((a/2)(lambda - mu)) [CV((ell^b)) : D(ell+1, mu - a(ell+1))](t)
/// ```
///
/// where lambda = a(ell+1) + b ell.  Entries vanish unless lambda - mu is
/// a non-negative even integer, in which case the exponent is integral.
/// Returns the verdict for the given mu.
pub fn gamma_identity_check(
    ctx: &mut CvContext,
    a: u64,
    b: u64,
    ell: u64,
    mu: u64,
) -> Result<bool> {
    if ell == 0 {
        return Err(Error::InvalidParameter(
            "the two-block family needs ell >= 1".to_string(),
        ));
    }
    let lambda = a * (ell + 1) + b * ell;
    let mut parts = vec![ell + 1; a as usize];
    parts.extend(std::iter::repeat_n(ell, b as usize));
    let xi = Partition::new(parts)?;
    let level = ell + 1;

    let lhs = flag_multiplicities(ctx, &xi, level)?.entry(mu);

    let tail = Partition::new(vec![ell; b as usize])?;
    let tail_flags = flag_multiplicities(ctx, &tail, level)?;
    let rhs = match mu.checked_sub(a * (ell + 1)) {
        None => LaurentPoly::zero(),
        Some(shifted_mu) => {
            let base = tail_flags.entry(shifted_mu);
            if base.is_zero() {
                LaurentPoly::zero()
            } else {
                // lambda and mu have the same parity whenever the entry is
                // nonzero, making the exponent an integer.
                if !(lambda - mu).is_multiple_of(2) {
                    return Err(Error::Internal(
                        "nonzero flag entry with parity mismatch".to_string(),
                    ));
                }
                base.shifted((a * (lambda - mu) / 2) as i64)
            }
        }
    };
    Ok(lhs == rhs)
}

/// JSON presentation of a labeled rank-one module and its graded character:
/// {"module": ..., "graded_pieces": [{"degree": k,
/// "isotypic": [{"highest_weight": m, "mult": c}]}], "dim_series": {...}}.
pub fn char_json(
    ctx: &CvContext,
    label: &ModuleLabel,
    gc: &GradedCharacter,
) -> Result<serde_json::Value> {
    char_json_named(ctx, &label.to_string(), gc)
}

/// Same schema as `char_json` with a free-form module name.
pub fn char_json_named(
    ctx: &CvContext,
    name: &str,
    gc: &GradedCharacter,
) -> Result<serde_json::Value> {
    let pieces: Vec<serde_json::Value> = gc
        .pieces()
        .map(|(degree, piece)| {
            let isotypic: Vec<serde_json::Value> = piece
                .iter()
                .map(|(w, m)| {
                    serde_json::json!({
                        "highest_weight": w.coords()[0],
                        "mult": m.to_string(),
                    })
                })
                .collect();
            serde_json::json!({ "degree": degree, "isotypic": isotypic })
        })
        .collect();
    Ok(serde_json::json!({
        "module": name,
        "graded_pieces": pieces,
        "dim_series": gc.dim_series(ctx.rank_one())?.to_json(),
    }))
}

/// Inverse of `char_json`: reads the `{"module", "graded_pieces",
/// "dim_series"}` schema back into a module name and a graded character.
///
/// The stored dimension series is cross-checked against the one recomputed
/// from the parsed pieces, so a successful parse certifies the document is
/// internally consistent, and re-serializing the result reproduces it.
/// Missing fields, malformed multiplicities, and inconsistent series all
/// return `Error::SchemaMismatch`; extra top-level keys are tolerated so
/// documents that extend the schema (such as the fusion output, which adds
/// span bookkeeping) parse too.
pub fn char_from_json(
    ctx: &CvContext,
    value: &serde_json::Value,
) -> Result<(String, GradedCharacter)> {
    fn bad(what: impl Into<String>) -> Error {
        Error::SchemaMismatch(what.into())
    }
    let obj = value.as_object().ok_or_else(|| bad("top level is not an object"))?;
    let name = obj
        .get("module")
        .and_then(serde_json::Value::as_str)
        .ok_or_else(|| bad("missing string field `module`"))?
        .to_string();
    let pieces = obj
        .get("graded_pieces")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| bad("missing array field `graded_pieces`"))?;
    let mut gc = GradedCharacter::new();
    for piece in pieces {
        let degree = piece
            .get("degree")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| bad("piece without a non-negative integer `degree`"))?;
        let isotypic = piece
            .get("isotypic")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| bad("piece without an `isotypic` array"))?;
        for entry in isotypic {
            let weight = entry
                .get("highest_weight")
                .and_then(serde_json::Value::as_i64)
                .ok_or_else(|| bad("isotypic entry without an integer `highest_weight`"))?;
            let mult: BigInt = entry
                .get("mult")
                .and_then(serde_json::Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("isotypic entry without a decimal-string `mult`"))?;
            if weight < 0 || mult <= BigInt::zero() {
                return Err(bad(format!(
                    "entry V({}) with multiplicity {} is not part of a character",
                    weight, mult
                )));
            }
            gc.add_mult(degree, DominantWeight::new(vec![weight])?, mult);
        }
    }
    let stored = obj
        .get("dim_series")
        .ok_or_else(|| bad("missing field `dim_series`"))?;
    let recomputed = gc.dim_series(ctx.rank_one())?.to_json();
    if *stored != recomputed {
        return Err(bad(format!(
            "stored dimension series {} disagrees with the pieces (expected {})",
            stored, recomputed
        )));
    }
    Ok((name, gc))
}
