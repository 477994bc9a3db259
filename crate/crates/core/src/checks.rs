//! End-to-end consistency sweeps over the whole library.
//!
//! Each function here runs one parameterized family of cross-checks —
//! closed formulas against recursions, the recursion against the
//! brute-force fusion oracle, predicted classifications against computed
//! certificates — and reports a clause-by-clause summary.  The acceptance
//! suite runs them at full bounds; the CLI `selftest` subcommand runs the
//! same code at reduced bounds.
//!
//! Two clauses are *documented discrepancies*: sweeps whose expected
//! answer, as quoted from the source material, is contradicted by exact
//! computation (see the README).  They are reported as failures with the
//! counterexamples spelled out, but they are distinguished from
//! implementation failures: `CheckOutcome::passed` is false while
//! `CheckOutcome::healthy` stays true.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::charring::{
    irreducible_character, tensor_decompose, weyl_dim, DominantWeight, GradedCharacter,
};
use crate::cvengine::{
    classify_demazure, dim_truncated, flag_multiplicities, graded_char_cv, graded_char_label,
    kernel_is_truncated, verify_ses, CvContext, DemazureClassification, ModuleKind, ModuleLabel,
};
use crate::error::{Error, Result};
use crate::fusion::{default_params, fusion_for_partition, parameter_independence_check};
use crate::laurent::LaurentPoly;
use crate::partitions::{enumerate_partitions, xi_demazure, xi_parts, Partition};
use crate::poset::{enumerate_tuples, is_maximal_fundamental_multiple, maximal_elements};
use crate::rootsys::{build_root_system, RootSystem, Series};

/// Enumeration budget for poset sweeps; every instance in the supported
/// boxes is far below this.
const TUPLE_BOUND: u128 = 1 << 40;

/// Result of one check: a clause-by-clause report.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Every clause holds.
    pub passed: bool,
    /// Every clause holds except possibly documented discrepancies.
    pub healthy: bool,
    /// One line per clause.
    pub detail: String,
}

impl CheckOutcome {
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed {
            "PASS"
        } else if self.healthy {
            "FAIL (documented discrepancy)"
        } else {
            "FAIL"
        };
        format!("{}: {}", verdict, self.name)
    }
}

struct Clauses {
    lines: Vec<String>,
    passed: bool,
    healthy: bool,
}

impl Clauses {
    fn new() -> Self {
        Clauses {
            lines: Vec::new(),
            passed: true,
            healthy: true,
        }
    }

    /// A clause that must hold; failure means the implementation is broken.
    fn check(&mut self, ok: bool, text: String) {
        if ok {
            self.lines.push(format!("  [ok]   {}", text));
        } else {
            self.lines.push(format!("  [FAIL] {}", text));
            self.passed = false;
            self.healthy = false;
        }
    }

    /// A clause whose failure is a documented mathematical discrepancy,
    /// not an implementation defect.
    fn documented(&mut self, ok: bool, text: String) {
        if ok {
            self.lines.push(format!("  [ok]   {}", text));
        } else {
            self.lines
                .push(format!("  [FAIL, documented discrepancy] {}", text));
            self.passed = false;
        }
    }

    fn finish(self, name: &'static str) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: self.passed,
            healthy: self.healthy,
            detail: self.lines.join("\n"),
        }
    }
}

fn a1() -> RootSystem {
    build_root_system(Series::A, 1).expect("A1 exists")
}

fn w1(m: i64) -> DominantWeight {
    DominantWeight::new(vec![m]).expect("non-negative")
}

/// Renders an isotypic piece as `V(5) + 2 V(3)`.
fn piece_string(piece: &BTreeMap<DominantWeight, BigInt>) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (w, c) in piece.iter().rev() {
        if c.is_one() {
            parts.push(format!("V{}", w));
        } else {
            parts.push(format!("{} V{}", c, w));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Closed dimension formula checks on frozen values.
pub fn check_dimension_formulas() -> CheckOutcome {
    let mut cl = Clauses::new();
    let frozen: [(u64, u64, u64); 9] = [
        (4, 3, 12),
        (6, 3, 27),
        (6, 2, 16),
        (5, 4, 24),
        (5, 3, 18),
        (4, 2, 9),
        (3, 4, 8),
        (2, 3, 4),
        (2, 1, 3),
    ];
    for (lambda, n, expected) in frozen {
        let got = dim_truncated(lambda, n).expect("valid inputs");
        cl.check(
            got == BigInt::from(expected),
            format!("dim W_{}({}) = {} (got {})", n, lambda, expected, got),
        );
    }
    let diff = dim_truncated(6, 3).unwrap() - dim_truncated(6, 2).unwrap();
    cl.check(
        diff == BigInt::from(11),
        format!("dim W_3(6) - dim W_2(6) = 11 (got {})", diff),
    );
    cl.finish("dimension formulas")
}

/// The full grading table of W_4(5): degree dimensions and isotypics.
pub fn check_grading_table() -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut ctx = CvContext::new();
    let xi = Partition::new(vec![2, 1, 1, 1]).unwrap();
    let gc = graded_char_cv(&mut ctx, &xi);
    let series = gc.dim_series(&a1()).expect("rank one");
    cl.check(
        series == LaurentPoly::from_terms([(0, 6), (1, 4), (2, 6), (3, 6), (4, 2)]),
        format!("degree dimensions 6, 4, 6, 6, 2 (got {})", series),
    );
    let expected: [(u64, Vec<(i64, u64)>); 5] = [
        (0, vec![(5, 1)]),
        (1, vec![(3, 1)]),
        (2, vec![(3, 1), (1, 1)]),
        (3, vec![(3, 1), (1, 1)]),
        (4, vec![(1, 1)]),
    ];
    for (deg, iso) in expected {
        let want: BTreeMap<DominantWeight, BigInt> = iso
            .into_iter()
            .map(|(m, c)| (w1(m), BigInt::from(c)))
            .collect();
        let got = gc.piece(deg).cloned().unwrap_or_default();
        cl.check(
            got == want,
            format!(
                "degree {} isotypic {} (got {})",
                deg,
                piece_string(&want),
                piece_string(&got)
            ),
        );
    }
    let total = gc.total_dim(&a1()).unwrap();
    cl.check(
        total == dim_truncated(5, 4).unwrap(),
        format!("total dimension 24 (got {})", total),
    );
    cl.finish("grading table of W_4(5)")
}

/// The fusion oracle agrees with the character recursion on every
/// partition up to the given size, at parameters 0..l-1.
pub fn check_oracle_equivalence(max_size: u64) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut ctx = CvContext::new();
    let mut count = 0usize;
    let mut mismatches: Vec<String> = Vec::new();
    let mut non_cyclic: Vec<String> = Vec::new();
    for size in 1..=max_size {
        for xi in enumerate_partitions(size) {
            count += 1;
            let run = fusion_for_partition(&xi, &default_params(xi.len()))
                .expect("parameters match parts");
            if run.span_dim != run.ambient_dim {
                non_cyclic.push(format!("{}", xi));
            }
            if run.character != graded_char_cv(&mut ctx, &xi) {
                mismatches.push(format!("{}", xi));
            }
        }
    }
    cl.check(
        mismatches.is_empty(),
        format!(
            "oracle character = recursion character for all {} partitions with size <= {}{}",
            count,
            max_size,
            if mismatches.is_empty() {
                String::new()
            } else {
                format!("; mismatches at {}", mismatches.join(", "))
            }
        ),
    );
    cl.check(
        non_cyclic.is_empty(),
        format!(
            "cyclic vector generates the full tensor product in all {} runs{}",
            count,
            if non_cyclic.is_empty() {
                String::new()
            } else {
                format!("; proper spans at {}", non_cyclic.join(", "))
            }
        ),
    );
    cl.finish("fusion oracle equals character recursion")
}

/// Level-2 flag multiplicities against the two closed forms, and the flag
/// length against 2^(N - ceil(lambda/2)).
pub fn check_level2_closed_forms(max_two_n: u64, max_untruncated: u64) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut ctx = CvContext::new();
    let mut instances = 0usize;
    let mut bad: Vec<String> = Vec::new();
    let mut bad_length: Vec<String> = Vec::new();
    for n in 2..=(max_two_n / 2) {
        for lambda in n..(2 * n) {
            instances += 1;
            let xi = xi_parts(lambda, n).unwrap();
            let fm = flag_multiplicities(&mut ctx, &xi, 2).expect("parts at most 2");
            let mut ok = true;
            for k in 0..=(lambda / 2) {
                let closed = crate::cvengine::flag_mult_level2_closed(lambda, n, k).unwrap();
                if fm.entry(lambda - 2 * k) != closed {
                    ok = false;
                }
            }
            // No stray entries outside mu = lambda - 2k.
            for (mu, poly) in fm.entries() {
                if !poly.is_zero() && (mu > lambda || (lambda - mu) % 2 != 0) {
                    ok = false;
                }
            }
            if !ok {
                bad.push(format!("(lambda={}, N={})", lambda, n));
            }
            let half_up = lambda.div_ceil(2);
            let expected_length = BigInt::one() << (n - half_up) as usize;
            if fm.length() != expected_length {
                bad_length.push(format!("(lambda={}, N={})", lambda, n));
            }
        }
    }
    cl.check(
        bad.is_empty(),
        format!(
            "truncated closed form matches the recursion on all {} windows 2 <= N <= lambda < 2N <= {}{}",
            instances,
            max_two_n,
            if bad.is_empty() { String::new() } else { format!("; failed at {}", bad.join(", ")) }
        ),
    );
    cl.check(
        bad_length.is_empty(),
        format!(
            "flag length equals 2^(N - ceil(lambda/2)) on all {} windows{}",
            instances,
            if bad_length.is_empty() {
                String::new()
            } else {
                format!("; failed at {}", bad_length.join(", "))
            }
        ),
    );
    let mut bad_untrunc: Vec<String> = Vec::new();
    for lambda in 0..=max_untruncated {
        let xi = Partition::new(vec![1; lambda as usize]).unwrap();
        let fm = flag_multiplicities(&mut ctx, &xi, 2).expect("parts are 1");
        for k in 0..=(lambda / 2) {
            let closed =
                crate::cvengine::flag_mult_level2_closed_untruncated(lambda, k).unwrap();
            if fm.entry(lambda - 2 * k) != closed {
                bad_untrunc.push(format!("(lambda={}, k={})", lambda, k));
            }
        }
    }
    cl.check(
        bad_untrunc.is_empty(),
        format!(
            "untruncated closed form matches for lambda <= {}{}",
            max_untruncated,
            if bad_untrunc.is_empty() {
                String::new()
            } else {
                format!("; failed at {}", bad_untrunc.join(", "))
            }
        ),
    );
    cl.finish("level-2 flag closed forms")
}

/// Summing grade-shifted Demazure characters against flag multiplicities
/// reconstructs the module character: for every xi and every admissible
/// level, sum_(mu, m) [xi : tau_m D(level, mu)] char tau_m D(level, mu)
/// equals char CV(xi).
pub fn check_flag_character_identity(max_size: u64) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut ctx = CvContext::new();
    let mut instances = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for size in 1..=max_size {
        for xi in enumerate_partitions(size) {
            for level in xi.first()..=(xi.first() + 2) {
                instances += 1;
                let fm = flag_multiplicities(&mut ctx, &xi, level).expect("level >= xi_1");
                let mut assembled = GradedCharacter::new();
                for (mu, poly) in fm.entries() {
                    let shape = xi_demazure(level, mu, 1).unwrap();
                    let dem = graded_char_cv(&mut ctx, &shape);
                    for (shift, coeff) in poly.terms() {
                        for (deg, piece) in dem.pieces() {
                            for (w, c) in piece {
                                assembled.add_mult(
                                    deg + shift as u64,
                                    w.clone(),
                                    c * coeff,
                                );
                            }
                        }
                    }
                }
                if assembled != graded_char_cv(&mut ctx, &xi) {
                    bad.push(format!("({}, level {})", xi, level));
                }
            }
        }
    }
    cl.check(
        bad.is_empty(),
        format!(
            "flag character identity holds in all {} (xi, level) instances with size <= {}{}",
            instances,
            max_size,
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failed at {}", bad.join(", "))
            }
        ),
    );
    cl.finish("flag character identity")
}

/// The Demazure / not-Demazure case split for truncated Weyl modules, with
/// negative verdicts certified by a computed flag of length > 1.
pub fn check_demazure_classification(max_lambda: u64, max_n: u64) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut ctx = CvContext::new();
    let mut instances = 0usize;
    let mut bad: Vec<String> = Vec::new();
    let mut uncertified: Vec<String> = Vec::new();
    for lambda in 0..=max_lambda {
        for n in 1..=max_n {
            instances += 1;
            let verdict = classify_demazure(&mut ctx, lambda, n).expect("valid inputs");
            let q = lambda / n;
            let p = lambda % n;
            let expected_level = if p == 0 {
                Some(q.max(1))
            } else if p == n - 1 || p == lambda {
                Some(q + 1)
            } else {
                None
            };
            match (&verdict, expected_level) {
                (DemazureClassification::Demazure { level }, Some(want)) if *level == want => {}
                (
                    DemazureClassification::NotDemazure {
                        flag_level,
                        flag_length,
                    },
                    None,
                ) => {
                    let recomputed = flag_multiplicities(
                        &mut ctx,
                        &xi_parts(lambda, n).unwrap(),
                        q + 1,
                    )
                    .unwrap()
                    .length();
                    if *flag_level != q + 1
                        || recomputed != *flag_length
                        || *flag_length <= BigInt::one()
                    {
                        uncertified.push(format!("(lambda={}, N={})", lambda, n));
                    }
                }
                _ => bad.push(format!("(lambda={}, N={}): {}", lambda, n, verdict)),
            }
        }
    }
    cl.check(
        bad.is_empty(),
        format!(
            "case split matches on all {} instances with lambda <= {}, N <= {}{}",
            instances,
            max_lambda,
            max_n,
            if bad.is_empty() {
                String::new()
            } else {
                format!("; disagreements at {}", bad.join(", "))
            }
        ),
    );
    cl.check(
        uncertified.is_empty(),
        format!(
            "every negative verdict is certified by a recomputed flag of length > 1{}",
            if uncertified.is_empty() {
                String::new()
            } else {
                format!("; uncertified at {}", uncertified.join(", "))
            }
        ),
    );
    cl.finish("Demazure classification of truncated Weyl modules")
}

/// Short exact sequences and kernel identifications.
///
/// The last clause is a documented discrepancy: the quoted claim that the
/// kernel of W_N(lambda) -> W_(N-1)(lambda) is a grade-shifted
/// W_N(lambda-2) exactly when lambda is N or N+1 fails at lambda = N+1
/// for every N >= 3; the computed law is "N = 2, or lambda = N".
pub fn check_exact_sequences(
    max_size: u64,
    kernel_lambda_max: u64,
    kernel_n_max: u64,
) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut ctx = CvContext::new();

    let mut instances = 0usize;
    let mut bad: Vec<String> = Vec::new();
    for size in 1..=max_size {
        for xi in enumerate_partitions(size) {
            if xi.len() < 2 {
                continue;
            }
            instances += 1;
            let report = verify_ses(&mut ctx, &xi).expect("at least two parts");
            if !report.holds {
                bad.push(format!("{}", xi));
            }
        }
    }
    cl.check(
        bad.is_empty(),
        format!(
            "0 -> tau CV(xi-) -> CV(xi) -> CV(xi+) -> 0 verified for all {} partitions with >= 2 parts, size <= {}{}",
            instances,
            max_size,
            if bad.is_empty() { String::new() } else { format!("; failed at {}", bad.join(", ")) }
        ),
    );

    // The three worked instances, with their dimension splits and the
    // truncated-Weyl identification where it applies:
    // (xi, dim, dim_plus, dim_minus, shift, level of the identified kernel).
    type Worked = (&'static [u64], u64, u64, u64, u64, Option<u64>);
    let worked: [Worked; 3] = [
        (&[2, 1, 1], 12, 9, 3, 2, Some(1)),
        (&[2, 1, 1, 1], 24, 18, 6, 3, Some(2)),
        (&[3, 2, 1], 24, 16, 8, 2, None),
    ];
    for (parts, dim, dim_plus, dim_minus, shift, minus_level) in worked {
        let xi = Partition::new(parts.to_vec()).unwrap();
        let report = verify_ses(&mut ctx, &xi).unwrap();
        let ok = report.holds
            && report.dim == BigInt::from(dim)
            && report.dim_plus == BigInt::from(dim_plus)
            && report.dim_minus == BigInt::from(dim_minus)
            && report.shift == shift
            && match minus_level {
                None => report.truncated.is_none(),
                Some(level) => report
                    .truncated
                    .as_ref()
                    .is_some_and(|t| t.minus_level == level && t.plus_matches && t.minus_matches),
            };
        cl.check(
            ok,
            format!(
                "worked instance xi = {}: {} = {} + {} with shift {}{}",
                xi,
                dim,
                dim_plus,
                dim_minus,
                shift,
                match minus_level {
                    Some(level) => format!(", kernel a shifted level-{} truncated module", level),
                    None => String::new(),
                }
            ),
        );
    }

    let mut kernel_bad: Vec<String> = Vec::new();
    for lambda in 2..=kernel_lambda_max {
        let report = kernel_is_truncated(lambda, 2).unwrap();
        if !report.holds {
            kernel_bad.push(format!("lambda={}", lambda));
        }
    }
    cl.check(
        kernel_bad.is_empty(),
        format!(
            "kernel of W_2(lambda) -> W_1(lambda) is a shifted W_2(lambda-2) for all 2 <= lambda <= {}{}",
            kernel_lambda_max,
            if kernel_bad.is_empty() { String::new() } else { format!("; failed at {}", kernel_bad.join(", ")) }
        ),
    );

    let kern63 = kernel_is_truncated(6, 3).unwrap();
    cl.check(
        !kern63.holds
            && kern63.dim_source == BigInt::from(27)
            && kern63.dim_candidate == BigInt::from(12)
            && kern63.dim_quotient == BigInt::from(16),
        format!(
            "kernel at (lambda, N) = (6, 3) is not a truncated module: 27 != 12 + 16 (got {} vs {} + {})",
            kern63.dim_source, kern63.dim_candidate, kern63.dim_quotient
        ),
    );

    // Computed law in the window N <= lambda < 2N: holds iff N = 2 or
    // lambda = N.
    let mut law_bad: Vec<String> = Vec::new();
    let mut literal_counterexamples: Vec<String> = Vec::new();
    for n in 2..=kernel_n_max {
        for lambda in n.max(2)..(2 * n) {
            let computed = kernel_is_truncated(lambda, n).unwrap().holds;
            if computed != (n == 2 || lambda == n) {
                law_bad.push(format!("(lambda={}, N={})", lambda, n));
            }
            let literal = lambda == n || lambda == n + 1;
            if computed != literal {
                let report = kernel_is_truncated(lambda, n).unwrap();
                literal_counterexamples.push(format!(
                    "(lambda={}, N={}): kernel dim {} vs candidate dim {}",
                    lambda,
                    n,
                    report.dim_source - report.dim_quotient,
                    report.dim_candidate
                ));
            }
        }
    }
    cl.check(
        law_bad.is_empty(),
        format!(
            "computed kernel law in the window N <= lambda < 2N, N <= {}: truncated iff N = 2 or lambda = N{}",
            kernel_n_max,
            if law_bad.is_empty() { String::new() } else { format!("; violated at {}", law_bad.join(", ")) }
        ),
    );
    cl.documented(
        literal_counterexamples.is_empty(),
        format!(
            "quoted characterization \"lambda = N or N+1\" {}",
            if literal_counterexamples.is_empty() {
                "matches the computation".to_string()
            } else {
                format!(
                    "is contradicted by exact dimensions at lambda = N+1, N >= 3; counterexamples: {}",
                    literal_counterexamples.join("; ")
                )
            }
        ),
    );

    cl.finish("short exact sequences and kernel identification")
}

/// Report of one rank-one fusion comparison.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub m: u64,
    pub n: u64,
    /// Parts of the maximal tuple (entries of the unique maximal orbit).
    pub tuple: Partition,
    pub oracle: GradedCharacter,
    pub recursion: GradedCharacter,
    pub equal: bool,
}

impl ConjectureReport {
    /// Human-readable lines: the tuple, then EQUAL or a degree-by-degree diff.
    pub fn verdict_lines(&self) -> Vec<String> {
        let mut lines = vec![format!(
            "maximal tuple for (m, N) = ({}, {}): {}",
            self.m, self.n, self.tuple
        )];
        if self.equal {
            lines.push("EQUAL: fusion oracle and character recursion agree".to_string());
        } else {
            lines.push("DIFFER:".to_string());
            let top = self
                .oracle
                .max_degree()
                .into_iter()
                .chain(self.recursion.max_degree())
                .max()
                .unwrap_or(0);
            for deg in 0..=top {
                let left = self.oracle.piece(deg).cloned().unwrap_or_default();
                let right = self.recursion.piece(deg).cloned().unwrap_or_default();
                if left != right {
                    lines.push(format!(
                        "  degree {}: oracle {} vs recursion {}",
                        deg,
                        piece_string(&left),
                        piece_string(&right)
                    ));
                }
            }
        }
        lines
    }
}

/// Compares the fusion product over the maximal tuple of the rank-one
/// poset with the graded character of W_N(m).
///
/// The maximal orbit is computed by brute force over the poset; its
/// entries, sorted descending, are the evaluation-module highest weights;
/// the parameters are 0..N-1.
pub fn verify_conjecture_sl2(m: u64, n: u64) -> Result<ConjectureReport> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "N must be positive".to_string(),
        ));
    }
    if n > m {
        return Err(Error::InvalidParameter(format!(
            "out of regime: the comparison is stated for N <= |lambda|, got N = {} > m = {}",
            n, m
        )));
    }
    let rs = a1();
    let orbits = maximal_elements(&rs, &[m as i64], n as usize, TUPLE_BOUND)?;
    if orbits.len() != 1 {
        return Err(Error::Internal(format!(
            "rank-one maximal orbit is not unique at (m, N) = ({}, {}): {} orbits",
            m,
            n,
            orbits.len()
        )));
    }
    let parts: Vec<u64> = orbits[0]
        .representative
        .entries()
        .iter()
        .map(|w| w.coords()[0] as u64)
        .collect();
    let tuple = Partition::new(parts)?;
    let oracle = fusion_for_partition(&tuple, &default_params(tuple.len()))?;
    let mut ctx = CvContext::new();
    let label = ModuleLabel::plain(ModuleKind::Truncated { lambda: m, n });
    let recursion = graded_char_label(&mut ctx, &label)?;
    let equal = oracle.character == recursion;
    Ok(ConjectureReport {
        m,
        n,
        tuple,
        oracle: oracle.character,
        recursion,
        equal,
    })
}

/// The rank-one fusion comparison over the whole box 1 <= N <= m <= max_m.
pub fn check_fusion_conjecture(max_m: u64) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut cases = 0usize;
    let mut unequal: Vec<String> = Vec::new();
    for m in 1..=max_m {
        for n in 1..=m {
            cases += 1;
            let report = verify_conjecture_sl2(m, n).expect("in regime");
            if !report.equal {
                unequal.push(format!("(m={}, N={})", m, n));
            }
        }
    }
    cl.check(
        unequal.is_empty(),
        format!(
            "fusion over the maximal tuple equals char W_N(m) in all {} cases with 1 <= N <= m <= {}{}",
            cases,
            max_m,
            if unequal.is_empty() { String::new() } else { format!("; differs at {}", unequal.join(", ")) }
        ),
    );
    cl.finish("rank-one fusion comparison")
}

fn rank2_systems() -> Vec<(&'static str, RootSystem)> {
    vec![
        ("A2", build_root_system(Series::A, 2).unwrap()),
        ("B2", build_root_system(Series::B, 2).unwrap()),
        ("G2", build_root_system(Series::G, 2).unwrap()),
    ]
}

/// Maximal-orbit structure of the weight-tuple poset.
///
/// The second clause is a documented discrepancy: beyond the simply-laced
/// rank-2 case the maximal orbit is *not* unique under the stated order.
/// The computed counterexamples are reported; the smallest is type B2,
/// lambda = omega_1 + 2 omega_2, N = 2, where ((1,0),(0,2)) and
/// ((1,1),(0,1)) are incomparable and both maximal.
pub fn check_maximal_orbits(
    sl2_lambda_max: i64,
    sl2_n_max: usize,
    rank2_total_max: i64,
    rank2_n_max: usize,
) -> CheckOutcome {
    let mut cl = Clauses::new();
    let rs1 = a1();

    // Rank one: unique maximal orbit everywhere in the box.
    let mut sl2_cases = 0usize;
    let mut sl2_bad: Vec<String> = Vec::new();
    for lambda in 1..=sl2_lambda_max {
        for n in 1..=sl2_n_max {
            sl2_cases += 1;
            let orbits = maximal_elements(&rs1, &[lambda], n, TUPLE_BOUND).unwrap();
            if orbits.len() != 1 {
                sl2_bad.push(format!("(lambda={}, N={})", lambda, n));
            }
        }
    }
    cl.check(
        sl2_bad.is_empty(),
        format!(
            "rank one: unique maximal orbit in all {} instances with lambda <= {}, N <= {}{}",
            sl2_cases,
            sl2_lambda_max,
            sl2_n_max,
            if sl2_bad.is_empty() { String::new() } else { format!("; multiple at {}", sl2_bad.join(", ")) }
        ),
    );

    // Rank two: A2 is expected unique (hard clause); B2 and G2 are not
    // (documented discrepancy), so count and report.
    let mut a2_bad: Vec<String> = Vec::new();
    let mut violations: BTreeMap<&'static str, Vec<String>> = BTreeMap::new();
    let mut rank2_cases = 0usize;
    for (name, rs) in rank2_systems() {
        for a in 0..=rank2_total_max {
            for b in 0..=(rank2_total_max - a) {
                if a == 0 && b == 0 {
                    continue;
                }
                for n in 1..=rank2_n_max {
                    rank2_cases += 1;
                    let orbits = maximal_elements(&rs, &[a, b], n, TUPLE_BOUND).unwrap();
                    if orbits.len() != 1 {
                        let tag = format!("lambda=({}, {}), N={}: {} orbits", a, b, n, orbits.len());
                        if name == "A2" {
                            a2_bad.push(tag);
                        } else {
                            violations.entry(name).or_default().push(tag);
                        }
                    }
                }
            }
        }
    }
    cl.check(
        a2_bad.is_empty(),
        format!(
            "A2: unique maximal orbit in every instance with |lambda| <= {}, N <= {}{}",
            rank2_total_max,
            rank2_n_max,
            if a2_bad.is_empty() { String::new() } else { format!("; multiple at {}", a2_bad.join("; ")) }
        ),
    );
    let non_unique: usize = violations.values().map(|v| v.len()).sum();
    cl.documented(
        non_unique == 0,
        if non_unique == 0 {
            format!(
                "B2 and G2: unique maximal orbit across all {} rank-2 instances",
                rank2_cases
            )
        } else {
            let mut parts: Vec<String> = Vec::new();
            for (name, v) in &violations {
                parts.push(format!(
                    "{}: {} instances with multiple maximal orbits (first: {})",
                    name,
                    v.len(),
                    v[0]
                ));
            }
            format!(
                "uniqueness of the maximal orbit fails outside the simply-laced case: {}",
                parts.join("; ")
            )
        },
    );

    // Multiples of one fundamental weight: brute-force maximality must
    // coincide with the max - min <= 1 criterion on the coefficients.
    let mut closed_cases = 0usize;
    let mut closed_bad: Vec<String> = Vec::new();
    {
        let mut run = |name: &str, rs: &RootSystem, lambda: &[i64], n: usize, m: u64, fund: usize| {
            let tuples = enumerate_tuples(rs, lambda, n, TUPLE_BOUND).unwrap();
            let reps: std::collections::BTreeSet<Vec<DominantWeight>> =
                maximal_elements(rs, lambda, n, TUPLE_BOUND)
                    .unwrap()
                    .into_iter()
                    .map(|o| o.representative.entries().to_vec())
                    .collect();
            for t in &tuples {
                let mut canonical = t.entries().to_vec();
                canonical.sort_by(|x, y| y.cmp(x));
                let brute = reps.contains(&canonical);
                let coeffs: Vec<i64> = t.entries().iter().map(|w| w.coords()[fund]).collect();
                let criterion = is_maximal_fundamental_multiple(m, n, &coeffs).unwrap();
                closed_cases += 1;
                if brute != criterion {
                    closed_bad.push(format!(
                        "{} lambda={:?} N={} tuple {}",
                        name, lambda, n, t
                    ));
                }
            }
        };
        for lambda in 1..=sl2_lambda_max {
            for n in 1..=sl2_n_max {
                run("A1", &rs1, &[lambda], n, lambda as u64, 0);
            }
        }
        for (name, rs) in rank2_systems() {
            for m in 1..=rank2_total_max {
                for n in 1..=rank2_n_max {
                    run(name, &rs, &[m, 0], n, m as u64, 0);
                    run(name, &rs, &[0, m], n, m as u64, 1);
                }
            }
        }
    }
    cl.check(
        closed_bad.is_empty(),
        format!(
            "for lambda a multiple of one fundamental weight, brute-force maximality = (max - min <= 1) on all {} tuples{}",
            closed_cases,
            if closed_bad.is_empty() { String::new() } else { format!("; differs at {}", closed_bad.join("; ")) }
        ),
    );

    // When N >= |lambda|, every entry of every maximal tuple is zero or a
    // fundamental weight.
    let mut fund_cases = 0usize;
    let mut fund_bad: Vec<String> = Vec::new();
    {
        let mut scan = |name: &str, rs: &RootSystem, lambda: &[i64], n: usize| {
            fund_cases += 1;
            for orbit in maximal_elements(rs, lambda, n, TUPLE_BOUND).unwrap() {
                for entry in orbit.representative.entries() {
                    let total: i64 = entry.coords().iter().sum();
                    if total > 1 {
                        fund_bad.push(format!(
                            "{} lambda={:?} N={}: entry {}",
                            name, lambda, n, entry
                        ));
                    }
                }
            }
        };
        for lambda in 1..=sl2_lambda_max.min(sl2_n_max as i64) {
            for n in lambda..=(sl2_n_max as i64) {
                scan("A1", &rs1, &[lambda], n as usize);
            }
        }
        for (name, rs) in rank2_systems() {
            for a in 0..=rank2_total_max {
                for b in 0..=(rank2_total_max - a) {
                    let total = a + b;
                    if total == 0 {
                        continue;
                    }
                    for n in total..=(rank2_n_max as i64) {
                        scan(name, &rs, &[a, b], n as usize);
                    }
                }
            }
        }
    }
    cl.check(
        fund_bad.is_empty(),
        format!(
            "N >= |lambda|: maximal tuples have only fundamental or zero entries in all {} instances{}",
            fund_cases,
            if fund_bad.is_empty() { String::new() } else { format!("; violated at {}", fund_bad.join("; ")) }
        ),
    );

    cl.finish("maximal orbits of the weight-tuple order")
}

/// Character-ring checks: the B2 spin tensor rule and Freudenthal totals
/// against the Weyl dimension formula.
pub fn check_character_ring(max_k: i64, max_total: i64, max_rank: usize) -> CheckOutcome {
    let mut cl = Clauses::new();

    let b2 = build_root_system(Series::B, 2).unwrap();
    let mut spin_bad: Vec<String> = Vec::new();
    for k in 1..=max_k {
        let got = tensor_decompose(&b2, &[0, k], &[0, 1]).unwrap();
        let mut want: BTreeMap<DominantWeight, BigInt> = BTreeMap::new();
        want.insert(
            DominantWeight::new(vec![0, k + 1]).unwrap(),
            BigInt::one(),
        );
        want.insert(
            DominantWeight::new(vec![1, k - 1]).unwrap(),
            BigInt::one(),
        );
        want.insert(
            DominantWeight::new(vec![0, k - 1]).unwrap(),
            BigInt::one(),
        );
        if got != want {
            spin_bad.push(format!("k={}", k));
        }
    }
    cl.check(
        spin_bad.is_empty(),
        format!(
            "B2 spin rule V(k w2) (x) V(w2) = V((k+1) w2) + V(w1 + (k-1) w2) + V((k-1) w2) for k = 1..{}{}",
            max_k,
            if spin_bad.is_empty() { String::new() } else { format!("; failed at {}", spin_bad.join(", ")) }
        ),
    );

    let mut systems: Vec<RootSystem> = Vec::new();
    for rank in 1..=max_rank {
        systems.push(build_root_system(Series::A, rank).unwrap());
    }
    for rank in 2..=max_rank {
        systems.push(build_root_system(Series::B, rank).unwrap());
    }
    for rank in 3..=max_rank {
        systems.push(build_root_system(Series::C, rank).unwrap());
    }
    if max_rank >= 4 {
        systems.push(build_root_system(Series::D, 4).unwrap());
        systems.push(build_root_system(Series::F, 4).unwrap());
    }
    if max_rank >= 2 {
        systems.push(build_root_system(Series::G, 2).unwrap());
    }

    let mut weights = 0usize;
    let mut freud_bad: Vec<String> = Vec::new();
    for rs in &systems {
        let name = format!("{}{}", rs.series().letter(), rs.rank());
        let rank = rs.rank();
        let mut coords = vec![0i64; rank];
        loop {
            if coords.iter().sum::<i64>() <= max_total {
                weights += 1;
                let ch = irreducible_character(rs, &coords).unwrap();
                if ch.dim() != weyl_dim(rs, &coords).unwrap() {
                    freud_bad.push(format!("{} lambda={:?}", name, coords));
                }
            }
            // Odometer over coordinate vectors with entries <= max_total.
            let mut i = 0;
            loop {
                if i == rank {
                    break;
                }
                coords[i] += 1;
                if coords[i] > max_total {
                    coords[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
            if i == rank {
                break;
            }
        }
    }
    cl.check(
        freud_bad.is_empty(),
        format!(
            "Freudenthal total multiplicity = Weyl dimension for all {} weights with |lambda| <= {} in {} systems of rank <= {}{}",
            weights,
            max_total,
            systems.len(),
            max_rank,
            if freud_bad.is_empty() { String::new() } else { format!("; failed at {}", freud_bad.join(", ")) }
        ),
    );

    cl.finish("character ring against closed formulas")
}

/// Three deterministic, pairwise-distinct parameter sets of a given length.
pub fn standard_parameter_sets(len: usize) -> Vec<Vec<i64>> {
    let arithmetic: Vec<i64> = (0..len as i64).collect();
    let odd: Vec<i64> = (0..len as i64).map(|i| 2 * i + 1).collect();
    let signed: Vec<i64> = (0..len as i64)
        .map(|i| {
            let k = i / 2 + 1;
            if i % 2 == 0 {
                k
            } else {
                -k
            }
        })
        .collect();
    vec![arithmetic, odd, signed]
}

/// The graded character of a fusion product does not depend on the choice
/// of (distinct) evaluation parameters.  A failure would contradict the
/// theorems the oracle is built to check, so it is reported loudly.
pub fn check_parameter_independence(max_size: u64) -> CheckOutcome {
    let mut cl = Clauses::new();
    let mut count = 0usize;
    let mut dependent: Vec<String> = Vec::new();
    for size in 1..=max_size {
        for xi in enumerate_partitions(size) {
            count += 1;
            let sets = standard_parameter_sets(xi.len());
            if !parameter_independence_check(&xi, &sets).expect("sets are distinct") {
                dependent.push(format!("{}", xi));
            }
        }
    }
    cl.check(
        dependent.is_empty(),
        format!(
            "graded character is parameter-independent across 3 parameter sets for all {} partitions with size <= {}{}",
            count,
            max_size,
            if dependent.is_empty() {
                String::new()
            } else {
                format!(
                    "; PARAMETER DEPENDENCE DISCOVERED at {} — this contradicts the flag-independence theorems",
                    dependent.join(", ")
                )
            }
        ),
    );
    cl.finish("parameter independence of fusion products")
}

/// The full suite at reduced bounds, for the CLI `selftest` subcommand.
pub fn selftest() -> Vec<CheckOutcome> {
    vec![
        check_dimension_formulas(),
        check_grading_table(),
        check_oracle_equivalence(5),
        check_level2_closed_forms(16, 8),
        check_flag_character_identity(6),
        check_demazure_classification(12, 6),
        check_exact_sequences(7, 12, 6),
        check_fusion_conjecture(6),
        check_maximal_orbits(6, 4, 3, 3),
        check_character_ring(5, 3, 3),
        check_parameter_independence(4),
    ]
}
