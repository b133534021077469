//! SU(3) Knutson–Tao honeycombs, their dual hives, and the inequalities that
//! cut out the admissible values of the single hexagon parameter `α`.
//!
//! A honeycomb for `λ ⊗ μ → ν` is determined by `α`. Its nine inner edges
//! are affine in `(λ₁, λ₂, μ₁, μ₂, ν₁, ν₂, α)` and the nine orientation
//! constraints reduce to six lower and three upper bounds on `α`.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weights::{charge_defect, triality_ok, Weight};

type Pair = (i64, i64);

/// Charge bookkeeping for a triple: `ν₃` and `Σ = ν₁+ν₂+ν₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Charges {
    pub nu3: i64,
    pub sigma: i64,
}

impl Charges {
    pub(crate) fn of(l: Pair, m: Pair, n: Pair) -> Option<Self> {
        if !triality_ok(l, m, n) {
            return None;
        }
        let nu3 = charge_defect(l, m, n) / 3;
        Some(Charges {
            nu3,
            sigma: n.0 + n.1 + nu3,
        })
    }
}

/// Whether an inequality bounds `α` from below or above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// The nine bounds, indexed `[row][position]`. Rows follow the direction
/// of the rhombus short diagonal: horizontal, `\`, `/`.
fn bound_table(l: Pair, m: Pair, n: Pair, c: Charges) -> [[(Side, i64); 3]; 3] {
    let (l1, l2) = l;
    let (m1, m2) = m;
    let n2 = n.1;
    let Charges { nu3, sigma } = c;
    use Side::*;
    [
        [
            (Lower, sigma + l2),
            (Upper, l1 + 2 * l2 + m1 + m2),
            (Lower, sigma + n2 + nu3 - m2),
        ],
        [
            (Lower, sigma + nu3),
            (Upper, sigma + l1 + l2),
            (Lower, l1 + l2 + m1 + m2),
        ],
        [
            (Upper, l1 + 2 * l2 + m1 + 2 * m2 - nu3),
            (Lower, l1 + 2 * l2 + m2),
            (Lower, l1 + l2 + n2 + nu3),
        ],
    ]
}

fn holds(side: Side, bound: i64, alpha: i64) -> bool {
    match side {
        Side::Lower => alpha >= bound,
        Side::Upper => alpha <= bound,
    }
}

/// Evaluates the nine inequalities on `α`, in table order. All false when
/// triality is violated, since no honeycomb exists then.
#[track_caller]
pub fn check_inequalities(lambda: &Weight, mu: &Weight, nu: &Weight, alpha: i64) -> [bool; 9] {
    check_raw(lambda.su3_pair(), mu.su3_pair(), nu.su3_pair(), alpha)
}

pub(crate) fn check_raw(l: Pair, m: Pair, n: Pair, alpha: i64) -> [bool; 9] {
    let Some(c) = Charges::of(l, m, n) else {
        return [false; 9];
    };
    let table = bound_table(l, m, n, c);
    let mut out = [false; 9];
    for (i, &(side, b)) in table.iter().flatten().enumerate() {
        out[i] = holds(side, b, alpha);
    }
    out
}

/// The closed integer interval of admissible `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaInterval {
    pub min: i64,
    pub max: i64,
}

impl AlphaInterval {
    const EMPTY: AlphaInterval = AlphaInterval { min: 0, max: -1 };

    pub fn is_empty(&self) -> bool {
        self.min > self.max
    }

    /// Number of integers in the interval.
    pub fn len(&self) -> u64 {
        (self.max - self.min + 1).max(0) as u64
    }

    pub fn contains(&self, alpha: i64) -> bool {
        self.min <= alpha && alpha <= self.max
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.min..=self.max
    }
}

pub(crate) fn alpha_bounds_raw(l: Pair, m: Pair, n: Pair) -> AlphaInterval {
    let Some(c) = Charges::of(l, m, n) else {
        return AlphaInterval::EMPTY;
    };
    let (mut lo, mut hi) = (i64::MIN, i64::MAX);
    for &(side, b) in bound_table(l, m, n, c).iter().flatten() {
        match side {
            Side::Lower => lo = lo.max(b),
            Side::Upper => hi = hi.min(b),
        }
    }
    if lo > hi {
        AlphaInterval::EMPTY
    } else {
        AlphaInterval { min: lo, max: hi }
    }
}

/// Interval bounded by the three upper and six lower bounds.
#[track_caller]
pub fn alpha_bounds(lambda: &Weight, mu: &Weight, nu: &Weight) -> AlphaInterval {
    alpha_bounds_raw(lambda.su3_pair(), mu.su3_pair(), nu.su3_pair())
}

/// Counts the integers `α` that pass all nine inequalities by scanning a
/// window around the interval.
#[track_caller]
pub fn count_by_alpha(lambda: &Weight, mu: &Weight, nu: &Weight) -> u64 {
    let (l, m, n) = (lambda.su3_pair(), mu.su3_pair(), nu.su3_pair());
    if !triality_ok(l, m, n) {
        return 0;
    }
    // Every bound lies in [0, 2·(level of λ+μ+ν)], so this window is exhaustive.
    let reach = 2 * (l.0 + l.1 + m.0 + m.1 + n.0 + n.1) + 1;
    (-reach..=reach)
        .filter(|&a| check_raw(l, m, n, a).iter().all(|&ok| ok))
        .count() as u64
}

/// 1-based position of `α` within its interval.
#[track_caller]
pub fn mult_index(lambda: &Weight, mu: &Weight, nu: &Weight, alpha: i64) -> Result<u64> {
    let iv = alpha_bounds(lambda, mu, nu);
    if !iv.contains(alpha) {
        return Err(Error::AlphaOutOfRange {
            alpha,
            min: iv.min,
            max: iv.max,
        });
    }
    Ok((alpha - iv.min + 1) as u64)
}

/// Names of the variables in [`EDGE_FORMS`].
pub const EDGE_VARIABLES: [&str; 8] = ["l1", "l2", "m1", "m2", "n1", "n2", "alpha", "1"];

/// Inner edges as affine forms over `EDGE_VARIABLES`, every coefficient
/// multiplied by 3 (`ν₃` and `Σ` carry thirds). Edges are listed top to
/// bottom, left to right.
pub const EDGE_FORMS: [[i64; 8]; 9] = [
    [0, 0, -3, -3, 0, 0, 0, 0],
    [-3, -6, 0, 0, 0, 0, 3, 0],
    [3, 6, 3, 3, 0, 0, -3, 0],
    [3, 3, 0, 0, 0, 0, -3, 0],
    [-3, -6, -3, -6, 0, 0, 3, 0],
    [-2, -1, 1, 2, 2, 1, 0, 0],
    [-1, -2, -1, -2, -2, -1, 3, 0],
    [2, 4, 2, 4, 1, 2, -3, 0],
    [1, 2, 1, 2, -1, -2, 0, 0],
];

/// Evaluates a scaled affine form; `None` if the result is not integral.
pub fn eval_form(form: &[i64; 8], vars: [i64; 7]) -> Option<i64> {
    let v = form[..7].iter().zip(vars).map(|(c, x)| c * x).sum::<i64>() + form[7];
    (v % 3 == 0).then_some(v / 3)
}

/// Vertices of the honeycomb as triples of edge references. Indices 0..9
/// are inner edges, 9..18 are boundary edges in clockwise order.
pub const VERTICES: [[usize; 3]; 9] = [
    [9 + 2, 9 + 3, 0],
    [0, 1, 2],
    [1, 9 + 1, 3],
    [2, 9 + 4, 4],
    [3, 5, 6],
    [4, 7, 8],
    [5, 9, 9 + 8],
    [6, 7, 9 + 7],
    [8, 9 + 5, 9 + 6],
];

/// An SU(3) KT-honeycomb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Honeycomb {
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
    pub alpha: i64,
    pub nu3: i64,
    pub sigma: i64,
    /// Inner edge labels in the order of [`EDGE_FORMS`].
    pub edges: [i64; 9],
    /// Boundary labels, clockwise from the top of the `λ` side.
    pub boundary: [i64; 9],
}

impl Honeycomb {
    /// Label of an edge referenced as in [`VERTICES`].
    pub fn edge(&self, idx: usize) -> i64 {
        if idx < 9 {
            self.edges[idx]
        } else {
            self.boundary[idx - 9]
        }
    }

    /// Sums of the three labels at each trivalent vertex.
    pub fn vertex_sums(&self) -> [i64; 9] {
        VERTICES.map(|v| v.iter().map(|&i| self.edge(i)).sum())
    }

    pub fn mult_index(&self) -> u64 {
        mult_index(&self.lambda, &self.mu, &self.nu, self.alpha).expect("built honeycombs are valid")
    }

    /// Dual hive: ten integers on the triangular grid.
    pub fn to_hive(&self) -> Hive {
        let (l1, l2) = self.lambda.su3_pair();
        let (m1, m2) = self.mu.su3_pair();
        let (_, n2) = self.nu.su3_pair();
        let big = l1 + 2 * l2 + m1 + 2 * m2;
        let nu3 = self.nu3;
        Hive {
            rows: [
                [l1 + 2 * l2, 0, 0, 0],
                [l1 + 2 * l2, l1 + 2 * l2 + m1 + m2, 0, 0],
                [l1 + l2, self.alpha, big, 0],
                [0, big - n2 - 2 * nu3, big - nu3, big],
            ],
        }
    }

    /// ASCII drawing in the orientation of the usual figures: `λ` on the
    /// upper left, `μ` on the upper right, `ν*` along the bottom.
    pub fn render_text(&self) -> String {
        let e = &self.edges;
        let b = &self.boundary;
        let mut s = String::new();
        let _ = writeln!(s, "{:>12}{:>12}", b[2], b[3]);
        let _ = writeln!(s, "{:>12}\\  /", "");
        let _ = writeln!(s, "{:>14}| {}", "", e[0]);
        let _ = writeln!(s, "{:>6}{:>6}   {:>5} {:>5}   {:>6}", b[1], e[1], "", e[2], b[4]);
        let _ = writeln!(s, "{:>10}\\ /   \\ /", "");
        let _ = writeln!(s, "{:>11}|{:>6}|", e[3], e[4]);
        let _ = writeln!(
            s,
            "{:>6}{:>6} {:>6} {:>6} {:>6}   {:>6}",
            b[0], e[5], e[6], e[7], e[8], b[5]
        );
        let _ = writeln!(s, "{:>8}\\ /  \\ /  \\ /", "");
        let _ = writeln!(s, "{:>9}|    |    |", "");
        let _ = writeln!(s, "{:>9} {:>4} {:>4}", b[8], b[7], b[6]);
        let _ = writeln!(s, "alpha = {}, m = {}", self.alpha, self.mult_index());
        s
    }
}

impl Serialize for Honeycomb {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Named<'a>(&'a [i64; 9], &'a str);
        impl Serialize for Named<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(9))?;
                for (i, v) in self.0.iter().enumerate() {
                    map.serialize_entry(&format!("{}{}", self.1, i + 1), v)?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(8))?;
        map.serialize_entry("lambda", &self.lambda)?;
        map.serialize_entry("mu", &self.mu)?;
        map.serialize_entry("nu", &self.nu)?;
        map.serialize_entry("alpha", &self.alpha)?;
        map.serialize_entry("nu3", &self.nu3)?;
        map.serialize_entry("sigma", &self.sigma)?;
        map.serialize_entry("edges", &Named(&self.edges, "e"))?;
        map.serialize_entry("boundary", &Named(&self.boundary, "b"))?;
        map.end()
    }
}

pub(crate) fn build_raw(l: Pair, m: Pair, n: Pair, alpha: i64) -> Option<([i64; 9], [i64; 9], Charges)> {
    let c = Charges::of(l, m, n)?;
    let vars = [l.0, l.1, m.0, m.1, n.0, n.1, alpha];
    let edges = EDGE_FORMS.map(|f| eval_form(&f, vars).expect("triality makes edges integral"));
    let boundary = [l.0 + l.1, l.1, 0, m.0 + m.1, m.1, 0, -c.nu3, -n.1 - c.nu3, -c.sigma];
    Some((edges, boundary, c))
}

/// Builds the honeycomb with hexagon parameter `α`.
pub fn build(lambda: &Weight, mu: &Weight, nu: &Weight, alpha: i64) -> Result<Honeycomb> {
    for w in [lambda, mu, nu] {
        w.require_rank(3)?;
    }
    let (l, m, n) = (lambda.su3_pair(), mu.su3_pair(), nu.su3_pair());
    let Some((edges, boundary, c)) = build_raw(l, m, n, alpha) else {
        return Err(Error::NotInProduct {
            lambda: lambda.labels().to_vec(),
            mu: mu.labels().to_vec(),
            nu: nu.labels().to_vec(),
        });
    };
    let checks = check_raw(l, m, n, alpha);
    let violated: Vec<(usize, usize)> = (0..9).filter(|&i| !checks[i]).map(|i| (i / 3, i % 3)).collect();
    if !violated.is_empty() {
        return Err(Error::InequalityViolation { alpha, violated });
    }
    Ok(Honeycomb {
        lambda: *lambda,
        mu: *mu,
        nu: *nu,
        alpha,
        nu3: c.nu3,
        sigma: c.sigma,
        edges,
        boundary,
    })
}

/// Every honeycomb of `λ ⊗ μ → ν`, in increasing `α`.
/// Fails when `ν` has the wrong triality.
pub fn all_honeycombs(lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Vec<Honeycomb>> {
    crate::weights::nu3(lambda, mu, nu)?;
    alpha_bounds(lambda, mu, nu)
        .iter()
        .map(|a| build(lambda, mu, nu, a))
        .collect()
}

/// Hive values indexed `rows[r][c]` for `c ≤ r`; row 0 is the apex and
/// `rows[3][0]` is the lower-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hive {
    rows: [[i64; 4]; 4],
}

/// The nine rhombi as (obtuse pair, acute pair) of grid vertices.
pub const RHOMBI: [[(usize, usize); 4]; 9] = rhombi();

const fn rhombi() -> [[(usize, usize); 4]; 9] {
    let downs = [(1, 0), (2, 0), (2, 1)];
    let mut out = [[(0, 0); 4]; 9];
    let mut i = 0;
    while i < 3 {
        let (r, c) = downs[i];
        // Horizontal edge shared with the up triangle above.
        out[3 * i] = [(r, c), (r, c + 1), (r - 1, c), (r + 1, c + 1)];
        // "/" edge, shared with the up triangle on the right.
        out[3 * i + 1] = [(r, c + 1), (r + 1, c + 1), (r, c), (r + 1, c + 2)];
        // "\" edge, shared with the up triangle on the left.
        out[3 * i + 2] = [(r, c), (r + 1, c + 1), (r, c + 1), (r + 1, c)];
        i += 1;
    }
    out
}

impl Hive {
    pub fn get(&self, r: usize, c: usize) -> i64 {
        assert!(c <= r && r < 4, "no hive vertex ({r},{c})");
        self.rows[r][c]
    }

    pub fn interior(&self) -> i64 {
        self.rows[2][1]
    }

    /// Boundary read clockwise from the lower-left corner, which is
    /// repeated at the end.
    pub fn boundary_clockwise(&self) -> [i64; 10] {
        let g = |r: usize, c: usize| self.rows[r][c];
        [
            g(3, 0),
            g(2, 0),
            g(1, 0),
            g(0, 0),
            g(1, 1),
            g(2, 2),
            g(3, 3),
            g(3, 2),
            g(3, 1),
            g(3, 0),
        ]
    }

    /// Rhombus inequalities: obtuse-pair sum ≥ acute-pair sum.
    pub fn rhombus_checks(&self) -> [bool; 9] {
        RHOMBI.map(|[a, b, c, d]| self.get(a.0, a.1) + self.get(b.0, b.1) >= self.get(c.0, c.1) + self.get(d.0, d.1))
    }

    pub fn is_valid(&self) -> bool {
        self.rhombus_checks().iter().all(|&ok| ok)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for r in 0..4 {
            let pad = (3 - r) * 3;
            let row: Vec<String> = (0..=r).map(|c| format!("{:>5}", self.rows[r][c])).collect();
            let _ = writeln!(s, "{:pad$}{}", "", row.join(" "), pad = pad);
        }
        s
    }
}

/// One affine constraint `lo ≤ c₁ν₁ + c₂ν₂ ≤ hi` on the constituents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearBound {
    pub coeffs: [i64; 2],
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl LinearBound {
    pub fn holds(&self, n: Pair) -> bool {
        let v = self.coeffs[0] * n.0 + self.coeffs[1] * n.1;
        self.lo.is_none_or(|lo| lo <= v) && self.hi.is_none_or(|hi| v <= hi)
    }
}

/// Outer inequalities on `ν` for a fixed `λ ⊗ μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WesslenBounds {
    /// `2ν₁+ν₂`, `ν₁+2ν₂`, `ν₁−ν₂`, each two-sided.
    pub lines: [LinearBound; 3],
}

impl WesslenBounds {
    /// The eight inequalities as one-sided forms `c·ν ≥ k`: the two
    /// positivity conditions and both sides of each line.
    pub fn inequalities(&self) -> Vec<([i64; 2], i64)> {
        let mut out = vec![([1, 0], 0), ([0, 1], 0)];
        for b in &self.lines {
            out.push((b.coeffs, b.lo.expect("lower bound")));
            out.push(([-b.coeffs[0], -b.coeffs[1]], -b.hi.expect("upper bound")));
        }
        out
    }

    /// Evaluates each of the eight inequalities.
    pub fn check(&self, nu: &Weight) -> Vec<bool> {
        let (a, b) = nu.su3_pair();
        self.inequalities()
            .iter()
            .map(|(c, k)| c[0] * a + c[1] * b >= *k)
            .collect()
    }

    pub fn contains(&self, nu: &Weight) -> bool {
        self.contains_raw(nu.su3_pair())
    }

    pub(crate) fn contains_raw(&self, n: Pair) -> bool {
        n.0 >= 0 && n.1 >= 0 && self.lines.iter().all(|b| b.holds(n))
    }
}

pub(crate) fn wesslen_raw(l: Pair, m: Pair) -> WesslenBounds {
    let (l1, l2) = l;
    let (m1, m2) = m;
    let line = |coeffs, lo: i64, hi: i64| LinearBound {
        coeffs,
        lo: Some(lo),
        hi: Some(hi),
    };
    WesslenBounds {
        lines: [
            line(
                [2, 1],
                (2 * m1 + m2 - l1 - 2 * l2)
                    .max(2 * l1 + l2 - m1 - 2 * m2)
                    .max(l2 - l1 + m2 - m1),
                2 * l1 + l2 + 2 * m1 + m2,
            ),
            line(
                [1, 2],
                (l1 + 2 * l2 - 2 * m1 - m2)
                    .max(m1 + 2 * m2 - 2 * l1 - l2)
                    .max(l1 - l2 + m1 - m2),
                l1 + 2 * l2 + m1 + 2 * m2,
            ),
            line(
                [1, -1],
                (m1 - m2 - 2 * l1 - l2).max(l1 - l2 - 2 * m1 - m2),
                (l1 - l2 + m1 + 2 * m2).min(l1 + 2 * l2 + m1 - m2),
            ),
        ],
    }
}

/// Necessary conditions on `ν` for it to occur in `λ ⊗ μ`.
#[track_caller]
pub fn wesslen_bounds(lambda: &Weight, mu: &Weight) -> WesslenBounds {
    wesslen_raw(lambda.su3_pair(), mu.su3_pair())
}

#[cfg(test)]
/// Multiplicity as the number of admissible `α`.
pub(crate) fn interval_mult(l: Pair, m: Pair, n: Pair) -> i64 {
    alpha_bounds_raw(l, m, n).len() as i64
}
