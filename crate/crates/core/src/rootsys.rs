//! Finite-type root systems: roots, coroots, heights, highest (short) root,
//! lacing numbers.
//!
//! Roots are generated by closure from the Cartan matrix (repeatedly adding
//! simple roots while the root-string criterion allows it), not read from
//! hard-coded tables, so the same code path serves every type and can be
//! tested against the known positive-root counts.
//!
//! Conventions: node numbering follows Bourbaki. The Cartan matrix is stored
//! as c[i][j] = alpha_j(h_i), so for B2 the short simple root is alpha_2 and
//! c = [[2,-1],[-2,2]]. The symmetrizers d_1..d_n are the positive relatively
//! prime integers making D*C symmetric; a root alpha = sum a_i alpha_i has
//! half-norm d_alpha = (alpha,alpha)/2 and coroot evaluations
//! omega_i(h_alpha) = a_i * d_i / d_alpha (always an integer).

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Simple series letter A through G.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }
}

/// A positive root, carrying its simple-root coordinates and the data needed
/// for coroot evaluations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Simple-root coordinates a_i of alpha = sum a_i alpha_i.
    pub coords: Vec<i64>,
    /// True for long roots; in simply laced types every root is long (and
    /// short) by convention, so this is true for all of them.
    pub is_long: bool,
    /// omega_i(h_alpha) for i = 0..rank-1.
    omega_on_coroot: Vec<i64>,
    /// d_alpha = (alpha,alpha)/2 in the relatively-prime normalization.
    half_norm: i64,
}

impl Root {
    /// Height ht(alpha) = sum of simple-root coordinates.
    pub fn ht(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// d_alpha = (alpha,alpha)/2.
    pub fn half_norm(&self) -> i64 {
        self.half_norm
    }
}

/// Immutable root-system data for one finite type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    /// cartan[i][j] = alpha_j(h_i).
    cartan: Vec<Vec<i64>>,
    /// Symmetrizers d_i (positive, relatively prime, D*C symmetric).
    d: Vec<i64>,
    /// All positive roots, sorted by (height, coordinates).
    roots: Vec<Root>,
    theta: usize,
    theta_short: usize,
}

/// Builds the root system of the given finite type.
///
/// Valid types: A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6, E7, E8,
/// F4, G2. Anything else is rejected with `Error::InvalidType`.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    let cartan = cartan_matrix(series, rank)?;
    let d = symmetrizers(&cartan);
    let n = rank;

    // Closure from the simple roots. For a positive root beta and a simple
    // root alpha_i, the alpha_i-string through beta has p - q = beta(h_i)
    // where p = max {k : beta - k*alpha_i is a root}; beta + alpha_i is a
    // root iff q >= 1.
    let mut found: HashSet<Vec<i64>> = HashSet::new();
    let mut levels: Vec<Vec<Vec<i64>>> = Vec::new();
    let simples: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for s in &simples {
        found.insert(s.clone());
    }
    levels.push(simples.clone());

    loop {
        let last = levels.last().unwrap().clone();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &last {
            for i in 0..n {
                let beta_hi: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0i64;
                let mut gamma = beta.clone();
                loop {
                    gamma[i] -= 1;
                    if gamma[i] < 0 || !found.contains(&gamma) {
                        break;
                    }
                    p += 1;
                }
                if p - beta_hi >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) && !next.contains(&up) {
                        next.push(up.clone());
                        found.insert(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        levels.push(next);
    }

    let d_max = *d.iter().max().unwrap();
    let mut roots: Vec<Root> = Vec::new();
    for level in &levels {
        for coords in level {
            // (beta,beta) = sum_i a_i d_i beta(h_i).
            let norm: i64 = (0..n)
                .map(|i| {
                    let eval_i: i64 = (0..n).map(|j| cartan[i][j] * coords[j]).sum();
                    coords[i] * d[i] * eval_i
                })
                .sum();
            assert!(norm > 0 && norm % 2 == 0, "root norm must be a positive even integer");
            let half_norm = norm / 2;
            let omega_on_coroot: Vec<i64> = (0..n)
                .map(|i| {
                    let num = coords[i] * d[i];
                    assert!(num % half_norm == 0, "coroot evaluation must be integral");
                    num / half_norm
                })
                .collect();
            roots.push(Root {
                coords: coords.clone(),
                is_long: half_norm == d_max,
                omega_on_coroot,
                half_norm,
            });
        }
    }

    assert_eq!(
        roots.len(),
        expected_positive_root_count(series, rank),
        "closure produced the wrong number of positive roots for {}{}",
        series.letter(),
        rank
    );

    let max_ht = roots.iter().map(Root::ht).max().unwrap();
    let theta_candidates: Vec<usize> = (0..roots.len())
        .filter(|&k| roots[k].ht() == max_ht)
        .collect();
    assert_eq!(theta_candidates.len(), 1, "highest root must be unique");
    let theta = theta_candidates[0];

    let d_min = *d.iter().min().unwrap();
    let short_max_ht = roots
        .iter()
        .filter(|r| r.half_norm == d_min)
        .map(Root::ht)
        .max()
        .unwrap();
    let short_candidates: Vec<usize> = (0..roots.len())
        .filter(|&k| roots[k].half_norm == d_min && roots[k].ht() == short_max_ht)
        .collect();
    assert_eq!(short_candidates.len(), 1, "highest short root must be unique");
    let theta_short = short_candidates[0];

    Ok(RootSystem {
        series,
        rank,
        cartan,
        d,
        roots,
        theta,
        theta_short,
    })
}

impl RootSystem {
    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// cartan_matrix()[i][j] = alpha_j(h_i).
    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Symmetrizers d_1..d_n (indexing is 0-based here).
    pub fn symmetrizers(&self) -> &[i64] {
        &self.d
    }

    /// All positive roots, sorted by (height, coordinates).
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    /// The i-th simple root, i in 1..=rank.
    pub fn simple_root(&self, i: usize) -> Result<&Root> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.rank,
            });
        }
        // Simple roots are the height-1 roots and come first in sorted order.
        Ok(&self.roots[i - 1])
    }

    /// True when every root has the same length.
    pub fn is_simply_laced(&self) -> bool {
        let d0 = self.d[0];
        self.d.iter().all(|&x| x == d0)
    }

    /// The lacing number r_vee: 1 for ADE, 2 for B/C/F4, 3 for G2.
    pub fn lacing_number(&self) -> i64 {
        *self.d.iter().max().unwrap() / *self.d.iter().min().unwrap()
    }

    /// Highest root theta.
    pub fn highest_root(&self) -> &Root {
        &self.roots[self.theta]
    }

    /// Highest short root vartheta; equals theta in simply laced types.
    pub fn highest_short_root(&self) -> &Root {
        &self.roots[self.theta_short]
    }

    /// ht_i(alpha) = coefficient of alpha_i, i in 1..=rank.
    pub fn ht_i(&self, alpha: &Root, i: usize) -> Result<i64> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.rank,
            });
        }
        if alpha.coords.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: alpha.coords.len(),
            });
        }
        Ok(alpha.coords[i - 1])
    }

    /// ht(alpha) = sum of simple-root coefficients.
    pub fn ht(&self, alpha: &Root) -> i64 {
        alpha.ht()
    }

    /// lambda(h_alpha) for lambda given by fundamental-weight coordinates.
    pub fn eval_on_coroot(&self, lambda: &[i64], alpha: &Root) -> Result<i64> {
        if lambda.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: lambda.len(),
            });
        }
        Ok(lambda
            .iter()
            .zip(&alpha.omega_on_coroot)
            .map(|(l, w)| l * w)
            .sum())
    }

    /// r_vee_alpha: 1 for long roots, the lacing number for short roots.
    pub fn lacing_exponent(&self, alpha: &Root) -> i64 {
        if alpha.is_long {
            1
        } else {
            self.lacing_number()
        }
    }

    /// alpha(h_i) for all i, as a vector (the "evaluation coordinates" of the
    /// root, used by the character code).
    pub fn root_evals(&self, alpha: &Root) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * alpha.coords[j]).sum())
            .collect()
    }
}

fn expected_positive_root_count(series: Series, n: usize) -> usize {
    match series {
        Series::A => n * (n + 1) / 2,
        Series::B | Series::C => n * n,
        Series::D => n * (n - 1),
        Series::E => match n {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
        Series::F => 24,
        Series::G => 6,
    }
}

fn cartan_matrix(series: Series, n: usize) -> Result<Vec<Vec<i64>>> {
    let invalid = || Error::InvalidType {
        series: series.letter(),
        rank: n,
    };
    let ok = match series {
        Series::A => n >= 1,
        Series::B => n >= 2,
        Series::C => n >= 3,
        Series::D => n >= 4,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !ok {
        return Err(invalid());
    }

    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };

    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                edge(&mut c, i, i + 1);
            }
        }
        Series::B => {
            // alpha_n is short: alpha_n(h_{n-1}) = -1, alpha_{n-1}(h_n) = -2.
            for i in 0..n - 1 {
                edge(&mut c, i, i + 1);
            }
            c[n - 1][n - 2] = -2;
        }
        Series::C => {
            // alpha_n is long: alpha_n(h_{n-1}) = -2.
            for i in 0..n - 1 {
                edge(&mut c, i, i + 1);
            }
            c[n - 2][n - 1] = -2;
        }
        Series::D => {
            for i in 0..n - 3 {
                edge(&mut c, i, i + 1);
            }
            edge(&mut c, n - 3, n - 2);
            edge(&mut c, n - 3, n - 1);
        }
        Series::E => {
            // Bourbaki: chain 1-3-4-5-6(-7(-8)), branch node 2 attached to 4.
            edge(&mut c, 0, 2);
            for i in 2..n - 1 {
                edge(&mut c, i, i + 1);
            }
            edge(&mut c, 1, 3);
        }
        Series::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            edge(&mut c, 0, 1);
            edge(&mut c, 1, 2);
            edge(&mut c, 2, 3);
            c[2][1] = -2;
        }
        Series::G => {
            // alpha_1 short, alpha_2 long.
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    Ok(c)
}

/// Positive relatively prime integers d_i with D*C symmetric, found by
/// propagating ratios along the Dynkin diagram.
fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    // Rational d_i as num/den pairs, propagated from d_1 = 1.
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    num[0] = 1;
    den[0] = 1;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && den[j] == 0 {
                // d_i c_{ij} = d_j c_{ji}
                num[j] = num[i] * cartan[i][j];
                den[j] = den[i] * cartan[j][i];
                if num[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                stack.push(j);
            }
        }
    }
    let lcm_den = den.iter().fold(1i64, |acc, &x| num_integer::lcm(acc, x.abs()));
    let mut d: Vec<i64> = (0..n).map(|i| num[i] * (lcm_den / den[i])).collect();
    let g = d.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    for x in &mut d {
        *x /= g;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(series: Series, rank: usize) -> RootSystem {
        build_root_system(series, rank).unwrap()
    }

    #[test]
    fn positive_root_counts_match_known_values() {
        let cases = [
            (Series::A, 1, 1),
            (Series::A, 2, 3),
            (Series::A, 3, 6),
            (Series::A, 4, 10),
            (Series::B, 2, 4),
            (Series::B, 3, 9),
            (Series::B, 4, 16),
            (Series::C, 3, 9),
            (Series::C, 4, 16),
            (Series::D, 4, 12),
            (Series::D, 5, 20),
            (Series::E, 6, 36),
            (Series::E, 7, 63),
            (Series::E, 8, 120),
            (Series::F, 4, 24),
            (Series::G, 2, 6),
        ];
        for (s, n, count) in cases {
            assert_eq!(rs(s, n).positive_roots().len(), count, "{}{}", s.letter(), n);
        }
    }

    #[test]
    fn invalid_types_are_rejected() {
        for (s, n) in [
            (Series::A, 0),
            (Series::B, 1),
            (Series::C, 2),
            (Series::D, 3),
            (Series::E, 5),
            (Series::E, 9),
            (Series::F, 3),
            (Series::G, 1),
        ] {
            assert!(build_root_system(s, n).is_err(), "{}{}", s.letter(), n);
        }
    }

    #[test]
    fn b2_matches_hand_data() {
        let b2 = rs(Series::B, 2);
        assert_eq!(b2.cartan_matrix(), &vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.symmetrizers(), &[2, 1]);
        let long: Vec<_> = b2.positive_roots().iter().filter(|r| r.is_long).collect();
        assert_eq!(long.len(), 2);

        let theta = b2.highest_root();
        assert_eq!(theta.coords, vec![1, 2]);
        assert!(theta.is_long);
        assert_eq!(b2.ht_i(theta, 2).unwrap(), 2);
        assert_eq!(b2.ht(theta), 3);

        let vartheta = b2.highest_short_root();
        assert_eq!(vartheta.coords, vec![1, 1]);
        assert!(!vartheta.is_long);

        // omega_2(h_theta) = 1; omega_1(h_vartheta) = 2.
        assert_eq!(b2.eval_on_coroot(&[0, 1], theta).unwrap(), 1);
        assert_eq!(b2.eval_on_coroot(&[1, 0], vartheta).unwrap(), 2);
        assert_eq!(b2.lacing_exponent(vartheta), 2);
        assert_eq!(b2.lacing_exponent(theta), 1);
    }

    #[test]
    fn g2_matches_hand_data() {
        let g2 = rs(Series::G, 2);
        assert_eq!(g2.cartan_matrix(), &vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.symmetrizers(), &[1, 3]);
        assert_eq!(g2.highest_root().coords, vec![3, 2]);
        assert_eq!(g2.highest_short_root().coords, vec![2, 1]);
        assert_eq!(g2.lacing_number(), 3);
        assert_eq!(g2.lacing_exponent(g2.highest_short_root()), 3);
    }

    #[test]
    fn a1_is_the_sl2_case() {
        let a1 = rs(Series::A, 1);
        assert_eq!(a1.positive_roots().len(), 1);
        let alpha = &a1.positive_roots()[0];
        assert_eq!(a1.eval_on_coroot(&[1], alpha).unwrap(), 1);
        assert_eq!(a1.eval_on_coroot(&[5], alpha).unwrap(), 5);
        assert!(alpha.is_long);
        assert_eq!(a1.lacing_exponent(alpha), 1);
    }

    #[test]
    fn simply_laced_roots_are_all_long() {
        for (s, n) in [(Series::A, 3), (Series::D, 4), (Series::E, 6)] {
            let r = rs(s, n);
            assert!(r.is_simply_laced());
            assert!(r.positive_roots().iter().all(|a| a.is_long));
            assert_eq!(r.highest_root().coords, r.highest_short_root().coords);
        }
    }

    #[test]
    fn height_one_roots_are_the_simple_roots() {
        for (s, n) in [
            (Series::A, 4),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let r = rs(s, n);
            let ht1 = r.positive_roots().iter().filter(|a| a.ht() == 1).count();
            assert_eq!(ht1, n);
            for i in 1..=n {
                let simple = r.simple_root(i).unwrap();
                assert_eq!(simple.ht(), 1);
                assert_eq!(simple.coords[i - 1], 1);
            }
        }
    }

    #[test]
    fn small_node_lists_match_hand_lists() {
        // Nodes i with ht_i(theta) = 1, per type.
        let small = |s, n| -> Vec<usize> {
            let r = rs(s, n);
            let theta = r.highest_root().clone();
            (1..=n).filter(|&i| r.ht_i(&theta, i).unwrap() == 1).collect()
        };
        assert_eq!(small(Series::A, 4), vec![1, 2, 3, 4]);
        assert_eq!(small(Series::B, 3), vec![1]);
        assert_eq!(small(Series::C, 3), vec![3]);
        assert_eq!(small(Series::D, 4), vec![1, 3, 4]);
        assert_eq!(small(Series::D, 5), vec![1, 4, 5]);
        assert_eq!(small(Series::E, 6), vec![1, 6]);
        assert_eq!(small(Series::E, 7), vec![7]);
        assert_eq!(small(Series::E, 8), Vec::<usize>::new());
        assert_eq!(small(Series::F, 4), Vec::<usize>::new());
        assert_eq!(small(Series::G, 2), Vec::<usize>::new());
    }

    #[test]
    fn known_highest_roots() {
        assert_eq!(rs(Series::F, 4).highest_root().coords, vec![2, 3, 4, 2]);
        assert_eq!(rs(Series::E, 8).highest_root().coords, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs(Series::C, 3).highest_root().coords, vec![2, 2, 1]);
        assert_eq!(rs(Series::D, 4).highest_root().coords, vec![1, 2, 1, 1]);
    }

    #[test]
    fn coroot_evaluation_is_linear() {
        let b2 = rs(Series::B, 2);
        for l1 in 0..4i64 {
            for l2 in 0..4i64 {
                for m1 in 0..4i64 {
                    for m2 in 0..4i64 {
                        for alpha in b2.positive_roots() {
                            let a = b2.eval_on_coroot(&[l1 + m1, l2 + m2], alpha).unwrap();
                            let b = b2.eval_on_coroot(&[l1, l2], alpha).unwrap()
                                + b2.eval_on_coroot(&[m1, m2], alpha).unwrap();
                            assert_eq!(a, b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn root_coordinates_are_non_negative() {
        for (s, n) in [(Series::B, 4), (Series::C, 4), (Series::F, 4), (Series::E, 7)] {
            let r = rs(s, n);
            for alpha in r.positive_roots() {
                assert!(alpha.coords.iter().all(|&c| c >= 0));
                assert!(alpha.coords.iter().any(|&c| c > 0));
            }
        }
    }

    #[test]
    fn eval_dimension_mismatch_is_reported() {
        let b2 = rs(Series::B, 2);
        let theta = b2.highest_root();
        assert!(matches!(
            b2.eval_on_coroot(&[1], theta),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }
}
