//! Closed-form SU(3) tensor product multiplicities.
//!
//! The SU(3)-specific routines take rank-3 [`Weight`]s and panic on any other
//! rank; callers that accept user input validate the rank first.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::honeycomb::wesslen_bounds;
use crate::weights::{triality_ok, Weight};

type Pair = (i64, i64);

/// The twelve min-arguments of the symmetric formula that carry a ⅓,
/// already multiplied by 3.
pub(crate) fn scaled_arguments(l: Pair, m: Pair, n: Pair) -> [i64; 12] {
    let (l1, l2) = l;
    let (m1, m2) = m;
    let (n1, n2) = n;
    [
        2 * l1 + l2 + 2 * m1 + m2 - 2 * n1 - n2,
        l1 - l2 + m1 + 2 * m2 - n1 + n2,
        l1 + 2 * l2 + m1 + 2 * m2 - n1 - 2 * n2,
        2 * l1 + l2 - m1 + m2 + n1 - n2,
        l1 + 2 * l2 + m1 - m2 - n1 + n2,
        2 * l1 + l2 - m1 - 2 * m2 + n1 + 2 * n2,
        l1 + 2 * l2 - 2 * m1 - m2 + 2 * n1 + n2,
        -l1 + l2 - m1 + m2 + n1 + 2 * n2,
        l1 - l2 + m1 - m2 + 2 * n1 + n2,
        -l1 - 2 * l2 + 2 * m1 + m2 + n1 + 2 * n2,
        -l1 + l2 + 2 * m1 + m2 + n1 - n2,
        -2 * l1 - l2 + m1 + 2 * m2 + 2 * n1 + n2,
    ]
}

pub(crate) fn mult_raw(l: Pair, m: Pair, n: Pair) -> i64 {
    if !triality_ok(l, m, n) {
        return 0;
    }
    let labels = [l.0, l.1, m.0, m.1, n.0, n.1].map(|x| 3 * x);
    let min = labels
        .into_iter()
        .chain(scaled_arguments(l, m, n))
        .min()
        .expect("eighteen arguments");
    // Triality makes every scaled argument a multiple of 3.
    (1 + min.div_euclid(3)).max(0)
}

/// Multiplicity of `ν` in `λ ⊗ μ`, from the S₃-symmetric 18-argument
/// formula. Zero when triality is violated.
#[track_caller]
pub fn mult(lambda: &Weight, mu: &Weight, nu: &Weight) -> u64 {
    mult_raw(lambda.su3_pair(), mu.su3_pair(), nu.su3_pair()) as u64
}

/// Labels after the shift that equalizes `S₁ = λ₁+μ₁+ν₂` and
/// `S₂ = λ₂+μ₂+ν₁`, with the three derived arguments `(L, M, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    /// `|S₁ − S₂| / 3`, subtracted from the labels of the larger sum.
    pub s: i64,
    pub lambda: Pair,
    pub mu: Pair,
    pub nu: Pair,
    #[serde(rename = "LMN")]
    pub lmn: [i64; 3],
}

impl Reduction {
    pub fn mult(&self) -> u64 {
        let (l, m, n) = (self.lambda, self.mu, self.nu);
        let min = [l.0, l.1, m.0, m.1, n.0, n.1]
            .into_iter()
            .chain(self.lmn)
            .min()
            .expect("nine arguments");
        (1 + min).max(0) as u64
    }
}

pub(crate) fn reduce_raw(l: Pair, m: Pair, n: Pair) -> Option<Reduction> {
    let (mut l, mut m, mut n) = (l, m, n);
    let s1 = l.0 + m.0 + n.1;
    let s2 = l.1 + m.1 + n.0;
    if (s1 - s2).rem_euclid(3) != 0 {
        return None;
    }
    let s = (s1 - s2).abs() / 3;
    if s1 > s2 {
        l.0 -= s;
        m.0 -= s;
        n.1 -= s;
    } else {
        l.1 -= s;
        m.1 -= s;
        n.0 -= s;
    }
    let sum = l.0 + m.0 + n.1;
    debug_assert_eq!(sum, l.1 + m.1 + n.0);
    Some(Reduction {
        s,
        lambda: l,
        mu: m,
        nu: n,
        lmn: [sum - (l.0 + l.1), sum - (m.0 + m.1), sum - (n.0 + n.1)],
    })
}

/// The shifted labels, or `None` when triality is violated.
#[track_caller]
pub fn reduce(lambda: &Weight, mu: &Weight, nu: &Weight) -> Option<Reduction> {
    reduce_raw(lambda.su3_pair(), mu.su3_pair(), nu.su3_pair())
}

/// Same quantity as [`mult`], computed by shifting labels until
/// `λ₁+μ₁+ν₂ = λ₂+μ₂+ν₁` and applying the nine-argument formula.
#[track_caller]
pub fn mult_reduced(lambda: &Weight, mu: &Weight, nu: &Weight) -> u64 {
    reduce(lambda, mu, nu).map_or(0, |r| r.mult())
}

/// Largest multiplicity occurring in `λ ⊗ μ`.
#[track_caller]
pub fn mult_max(lambda: &Weight, mu: &Weight) -> u64 {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    (l.0.min(l.1).min(m.0).min(m.1) + 1) as u64
}

/// Orders the pair so that `max(λ₁,λ₂) ≥ max(μ₁,μ₂)`.
fn ordered(l: Pair, m: Pair) -> (Pair, Pair) {
    if l.0.max(l.1) >= m.0.max(m.1) {
        (l, m)
    } else {
        (m, l)
    }
}

fn n_ell(l: Pair, m: Pair, ell: i64) -> i64 {
    if ell >= 0 {
        (l.0 - ell).min(m.1) + (m.0 - ell).min(l.1)
    } else {
        l.0.min(m.1 + ell) + m.0.min(l.1 + ell)
    }
}

/// Number of distinct irreducible constituents of `λ ⊗ μ`.
#[track_caller]
pub fn distinct_count(lambda: &Weight, mu: &Weight) -> u64 {
    let (l, m) = ordered(lambda.su3_pair(), mu.su3_pair());
    let lo = -l.1.min(m.1);
    let hi = l.0.min(m.0);
    (lo..=hi).map(|ell| n_ell(l, m, ell) + 1).sum::<i64>() as u64
}

/// The census formula for `s < mult_max`. At `s = mult_max` it no longer
/// counts correctly; [`census`] handles that value separately.
pub(crate) fn sigma_generic(l: Pair, m: Pair, s: i64) -> i64 {
    let (l, m) = ordered(l, m);
    let d = |x: i64| x - (s - 1);
    let dm = d(m.0) + d(m.1);
    d(l.0).min(dm) + d(l.1).min(dm) + d(m.0) + d(m.1)
}

/// How many distinct constituents occur with each multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityCensus {
    /// `s ↦ σ(s)` for `s = 1 … mult_max`.
    #[serde(rename = "sigma")]
    pub by_mult: BTreeMap<u64, u64>,
    #[serde(rename = "M")]
    pub distinct: u64,
    #[serde(rename = "max")]
    pub mult_max: u64,
    /// `Σ s·σ(s)`, the total multiplicity.
    pub total: u64,
}

impl MultiplicityCensus {
    fn from_histogram(by_mult: BTreeMap<u64, u64>) -> Self {
        MultiplicityCensus {
            distinct: by_mult.values().sum(),
            mult_max: by_mult.keys().copied().max().unwrap_or(0),
            total: by_mult.iter().map(|(s, c)| s * c).sum(),
            by_mult,
        }
    }
}

/// Census computed from the closed formulas.
#[track_caller]
pub fn census(lambda: &Weight, mu: &Weight) -> MultiplicityCensus {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    let top = mult_max(lambda, mu);
    let distinct = distinct_count(lambda, mu);
    let mut by_mult = BTreeMap::new();
    let mut partial = 0u64;
    for s in 1..top {
        let sigma = sigma_generic(l, m, s as i64) as u64;
        partial += sigma;
        by_mult.insert(s, sigma);
    }
    by_mult.insert(top, distinct - partial);
    MultiplicityCensus::from_histogram(by_mult)
}

/// One constituent of a tensor product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub nu: Weight,
    pub mult: u64,
}

/// All constituents of `λ ⊗ μ` with their multiplicities, sorted by `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTable {
    pub lambda: Weight,
    pub mu: Weight,
    pub entries: Vec<Entry>,
}

impl DecompositionTable {
    pub fn get(&self, nu: &Weight) -> u64 {
        self.entries
            .binary_search_by(|e| e.nu.cmp(nu))
            .map(|i| self.entries[i].mult)
            .unwrap_or(0)
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Sum of squared multiplicities.
    pub fn total_squares(&self) -> u64 {
        self.entries.iter().map(|e| e.mult * e.mult).sum()
    }

    /// Multiplicities as a sorted list.
    pub fn multiset(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.entries.iter().map(|e| e.mult).collect();
        v.sort_unstable();
        v
    }

    pub fn census(&self) -> MultiplicityCensus {
        let mut by_mult = BTreeMap::new();
        for e in &self.entries {
            *by_mult.entry(e.mult).or_insert(0) += 1;
        }
        MultiplicityCensus::from_histogram(by_mult)
    }

    /// Constituents of exactly multiplicity `s`.
    pub fn with_mult(&self, s: u64) -> impl Iterator<Item = Weight> + '_ {
        self.entries.iter().filter(move |e| e.mult == s).map(|e| e.nu)
    }
}

/// Rows of ν₁ above this size are scanned in parallel.
const PARALLEL_ROWS: i64 = 64;

/// Decomposes `λ ⊗ μ` by scanning the lattice points allowed by the outer
/// inequalities and evaluating [`mult`] on each.
#[track_caller]
pub fn decompose(lambda: &Weight, mu: &Weight) -> DecompositionTable {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    let bounds = wesslen_bounds(lambda, mu);
    let level = l.0 + l.1 + m.0 + m.1;
    let row = |n1: i64| -> Vec<Entry> {
        (0..=level - n1)
            .filter_map(|n2| {
                let n = (n1, n2);
                if !triality_ok(l, m, n) || !bounds.contains_raw(n) {
                    return None;
                }
                let k = mult_raw(l, m, n);
                (k > 0).then(|| Entry {
                    nu: Weight::from_pair(n),
                    mult: k as u64,
                })
            })
            .collect()
    };
    let entries: Vec<Entry> = if level >= PARALLEL_ROWS {
        (0..=level).into_par_iter().flat_map_iter(row).collect()
    } else {
        (0..=level).flat_map(row).collect()
    };
    DecompositionTable {
        lambda: *lambda,
        mu: *mu,
        entries,
    }
}

/// Totals of `λ⊗μ` and `λ⊗μ̄` and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalsCheck {
    pub total: u64,
    pub total_conj: u64,
    pub squares: u64,
    pub squares_conj: u64,
    pub equal: bool,
}

/// Compares total multiplicity and the sum of squared multiplicities of
/// `λ⊗μ` and `λ⊗μ̄`.
#[track_caller]
pub fn verify_theorem1(lambda: &Weight, mu: &Weight) -> TotalsCheck {
    let a = decompose(lambda, mu);
    let b = decompose(lambda, &mu.conjugate());
    let (total, total_conj) = (a.total(), b.total());
    let (squares, squares_conj) = (a.total_squares(), b.total_squares());
    TotalsCheck {
        total,
        total_conj,
        squares,
        squares_conj,
        equal: total == total_conj && squares == squares_conj,
    }
}

/// Sorted multiplicity lists of `λ⊗μ` and `λ⊗μ̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultisetCheck {
    pub multiset: Vec<u64>,
    pub multiset_conj: Vec<u64>,
    pub equal: bool,
}

#[track_caller]
pub fn verify_theorem2(lambda: &Weight, mu: &Weight) -> MultisetCheck {
    let multiset = decompose(lambda, mu).multiset();
    let multiset_conj = decompose(lambda, &mu.conjugate()).multiset();
    MultisetCheck {
        equal: multiset == multiset_conj,
        multiset,
        multiset_conj,
    }
}

/// Weyl dimension of an SU(3) irrep.
pub fn dim(w: &Weight) -> u64 {
    let (a, b) = w.su3_pair();
    ((a + 1) * (b + 1) * (a + b + 2) / 2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn w(a: u32, b: u32) -> Weight {
        Weight::su3(a, b)
    }

    #[test]
    fn worked_values() {
        assert_eq!(mult(&w(21, 6), &w(17, 16), &w(12, 8)), 5);
        assert_eq!(mult(&w(9, 5), &w(6, 2), &w(13, 5)), 3);
        assert_eq!(mult(&w(0, 0), &w(17, 16), &w(17, 16)), 1);
        assert_eq!(mult_reduced(&w(21, 6), &w(17, 16), &w(12, 8)), 5);
        assert_eq!(mult_reduced(&w(1, 0), &w(0, 1), &w(0, 0)), 1);
        assert_eq!(mult_max(&w(21, 6), &w(17, 16)), 7);
        assert_eq!(mult_max(&w(9, 5), &w(6, 2)), 3);
        assert_eq!(mult_max(&w(4, 0), &w(3, 7)), 1);
    }

    #[test]
    fn octet_squared_against_oracle() {
        let expected = oracle::mult(&w(1, 1), &w(1, 1), &w(1, 1)).unwrap();
        assert_eq!(mult(&w(1, 1), &w(1, 1), &w(1, 1)), expected);
        assert_eq!(expected, 2);
    }

    #[test]
    fn reduced_case_one_with_negative_l() {
        // S₁ = S₂ = 2 but L = 2 − 4 < 0.
        let (l, m, n) = ((2, 2), (0, 0), (0, 0));
        assert_eq!(l.0 + m.0 + n.1, l.1 + m.1 + n.0);
        let r = reduce_raw(l, m, n).unwrap();
        assert_eq!((r.s, r.lmn[0]), (0, -2));
        assert_eq!(r.mult(), 0);
    }

    #[test]
    fn scaled_arguments_are_multiples_of_three() {
        for l in 0..4 {
            for m in 0..4 {
                for n in 0..6 {
                    let (l, m, n) = ((l, 3 - l), (m, 1), (n, 2));
                    if triality_ok(l, m, n) {
                        assert!(scaled_arguments(l, m, n).iter().all(|x| x % 3 == 0));
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_oracle_on_a_box() {
        for l1 in 0..=4 {
            for l2 in 0..=4 {
                for m1 in 0..=3 {
                    for m2 in 0..=3 {
                        let (lam, mu) = (w(l1, l2), w(m1, m2));
                        let table = oracle::decompose(&lam, &mu).unwrap();
                        let ours = decompose(&lam, &mu);
                        assert_eq!(ours.entries.len(), table.len(), "{lam} x {mu}");
                        for (nu, k) in &table {
                            assert_eq!(ours.get(nu), *k, "{lam} x {mu} -> {nu}");
                            assert_eq!(mult_reduced(&lam, &mu, nu), *k);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn three_times_three() {
        let t = decompose(&w(1, 0), &w(1, 0));
        let got: Vec<_> = t.entries.iter().map(|e| (e.nu, e.mult)).collect();
        assert_eq!(got, vec![(w(0, 1), 1), (w(2, 0), 1)]);
        let t = decompose(&w(0, 0), &w(4, 2));
        assert_eq!(t.entries, vec![Entry { nu: w(4, 2), mult: 1 }]);
    }

    #[test]
    fn census_worked_examples() {
        let c = census(&w(21, 6), &w(17, 16));
        let sigma: Vec<u64> = c.by_mult.values().copied().collect();
        assert_eq!(sigma, vec![60, 56, 52, 48, 44, 40, 111]);
        assert_eq!(c.distinct, 411);
        assert_eq!(c.mult_max, 7);

        let c = census(&w(9, 5), &w(6, 2));
        let sigma: Vec<u64> = c.by_mult.values().copied().collect();
        assert_eq!(sigma, vec![21, 16, 14]);
        assert_eq!((c.distinct, c.total), (51, 95));
        assert_eq!(sigma_generic((9, 5), (6, 2), 3), 11);

        assert_eq!(distinct_count(&w(0, 0), &w(0, 0)), 1);
    }

    #[test]
    fn census_json_shape() {
        let c = census(&w(9, 5), &w(6, 2));
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"sigma":{"1":21,"2":16,"3":14},"M":51,"max":3,"total":95}"#
        );
        let t = decompose(&w(1, 0), &w(1, 0));
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"lambda":[1,0],"mu":[1,0],"entries":[{"nu":[0,1],"mult":1},{"nu":[2,0],"mult":1}]}"#
        );
    }

    #[test]
    fn theorem_checks_small() {
        let t = verify_theorem1(&w(9, 5), &w(6, 2));
        assert_eq!((t.total, t.total_conj, t.equal), (95, 95, true));
        let t = verify_theorem1(&w(0, 0), &w(4, 2));
        assert_eq!((t.total, t.total_conj, t.equal), (1, 1, true));
        assert!(verify_theorem2(&w(5, 3), &w(4, 2)).equal);
        assert!(verify_theorem2(&w(7, 1), &w(3, 3)).equal);
    }

    #[test]
    fn census_formula_agrees_with_scan() {
        for l1 in 0..=7 {
            for l2 in 0..=7 {
                for m1 in 0..=7 {
                    for m2 in 0..=7 {
                        let (lam, mu) = (w(l1, l2), w(m1, m2));
                        assert_eq!(census(&lam, &mu), decompose(&lam, &mu).census(), "{lam} x {mu}");
                    }
                }
            }
        }
    }
}
