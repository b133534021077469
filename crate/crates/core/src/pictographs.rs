//! Nine-label pictographs for SU(3): BZ-triangles, O-blades and
//! SU(3)-honeycombs. The three models carry the same labels and differ only
//! in how they are drawn, so one storage type serves all of them.
//!
//! Labels are ordered `(m₁₂, m₂₃, m₁₃, n₁₂, n₂₃, n₁₃, l₁₂, l₂₃, l₁₃)`.

use std::fmt::{self, Write as _};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::honeycomb::{self, Honeycomb};
use crate::weights::{triality_ok, Weight};

/// Index names, in storage order.
pub const LABEL_NAMES: [&str; 9] = ["m12", "m23", "m13", "n12", "n23", "n13", "l12", "l23", "l13"];

const M12: usize = 0;
const M23: usize = 1;
const M13: usize = 2;
const N12: usize = 3;
const N23: usize = 4;
const N13: usize = 5;
const L12: usize = 6;
const L23: usize = 7;
const L13: usize = 8;

/// The step operator: trivial externals, not itself a pictograph.
pub const DELTA: [i64; 9] = [-1, -1, 1, -1, -1, 1, -1, -1, 1];

/// The three opposite-side differences of the hexagon; zero for a valid
/// pictograph.
pub fn hexagon_defect(l: &[i64; 9]) -> [i64; 3] {
    [
        l[L12] + l[N23] - l[L23] - l[N12],
        l[M12] + l[L23] - l[M23] - l[L12],
        l[N12] + l[M23] - l[N23] - l[M12],
    ]
}

/// Nine non-negative labels satisfying the hexagon constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NineLabels([i64; 9]);

impl NineLabels {
    pub fn new(labels: [i64; 9]) -> Result<Self> {
        if labels.iter().any(|&x| x < 0) || hexagon_defect(&labels) != [0; 3] {
            return Err(Error::InvalidPictograph(labels));
        }
        Ok(NineLabels(labels))
    }

    pub fn zero() -> Self {
        NineLabels([0; 9])
    }

    pub fn as_array(&self) -> [i64; 9] {
        self.0
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        LABEL_NAMES.iter().position(|&n| n == name).map(|i| self.0[i])
    }

    /// External Dynkin labels `(λ, μ, ν)`.
    pub fn externals(&self) -> (Weight, Weight, Weight) {
        let l = &self.0;
        let p = |a: i64, b: i64| Weight::from_pair((a, b));
        (
            p(l[M13] + l[N12], l[M23] + l[N13]),
            p(l[N13] + l[L12], l[N23] + l[L13]),
            p(l[M13] + l[L23], l[M12] + l[L13]),
        )
    }
}

impl Serialize for NineLabels {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(9))?;
        for (n, v) in LABEL_NAMES.iter().zip(self.0) {
            map.serialize_entry(n, &v)?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    BzTriangle,
    Oblade,
    Su3Honeycomb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pictograph {
    pub kind: Kind,
    pub labels: NineLabels,
}

impl Pictograph {
    pub fn new(kind: Kind, labels: [i64; 9]) -> Result<Self> {
        Ok(Pictograph {
            kind,
            labels: NineLabels::new(labels)?,
        })
    }

    pub fn with_kind(self, kind: Kind) -> Self {
        Pictograph { kind, ..self }
    }
}

/// External weights of a pictograph.
pub fn external_weights(p: &Pictograph) -> (Weight, Weight, Weight) {
    p.labels.externals()
}

/// Coordinates along six non-primitive fundamentals and one primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Components7 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    /// Coefficient of the primitive element; can be negative for labels
    /// built from the other primitive.
    pub g: i64,
}

impl Components7 {
    pub fn from_array(v: [i64; 7]) -> Self {
        let [a, b, c, d, e, f, g] = v;
        Components7 { a, b, c, d, e, f, g }
    }

    pub fn as_array(&self) -> [i64; 7] {
        [self.a, self.b, self.c, self.d, self.e, self.f, self.g]
    }
}

/// Which primitive fundamental completes the basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Basis {
    /// Fork with its tail on the left: `m₁₂ = n₁₂ = l₁₂ = 1`.
    #[default]
    Left,
    /// Fork with its tail on the right: `m₂₃ = n₂₃ = l₂₃ = 1`.
    Right,
}

/// Labels from components (signed; may be invalid if components are).
pub fn components_to_labels(c: &Components7, basis: Basis) -> [i64; 9] {
    let Components7 { a, b, c, d, e, f, g } = *c;
    match basis {
        Basis::Left => [f + g, f, e, b + g, b, a, d + g, d, c],
        // The roles of the 12 and 23 labels swap.
        Basis::Right => [f, f + g, e, b, b + g, a, d, d + g, c],
    }
}

/// Unique coordinates of a pictograph in the chosen basis.
pub fn to_components_in(p: &Pictograph, basis: Basis) -> Components7 {
    let l = p.labels.0;
    match basis {
        Basis::Left => Components7 {
            a: l[N13],
            b: l[N23],
            c: l[L13],
            d: l[L23],
            e: l[M13],
            f: l[M23],
            g: l[M12] - l[M23],
        },
        Basis::Right => Components7 {
            a: l[N13],
            b: l[N12],
            c: l[L13],
            d: l[L12],
            e: l[M13],
            f: l[M12],
            g: l[M23] - l[M12],
        },
    }
}

/// Coordinates in the left basis.
pub fn to_components(p: &Pictograph) -> Components7 {
    to_components_in(p, Basis::Left)
}

pub fn from_components(c: &Components7, kind: Kind) -> Result<Pictograph> {
    Pictograph::new(kind, components_to_labels(c, Basis::Left))
}

/// The external Dynkin labels `(λ₁, λ₂, μ₁, μ₂, ν₁, ν₂)` as linear forms
/// over the left-basis components `(a, b, c, d, e, f, g)`.
pub const EXTERNAL_FORMS: [[i64; 7]; 6] = [
    [0, 1, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 1],
    [0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 1, 1],
];

/// KT-honeycomb inner edges over `(a, b, c, d, e, f, g)`, in the edge order
/// of [`honeycomb::EDGE_FORMS`].
pub const KT_EDGE_FORMS: [[i64; 7]; 9] = [
    [-1, -1, -1, -1, 0, 0, -1],
    [0, 1, 1, 1, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, -1, 0, -1, -1],
    [-1, -1, -1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0, 1, 1],
    [0, 0, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
];

fn dot7(f: &[i64; 7], v: [i64; 7]) -> i64 {
    f.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// KT edge labels straight from the components.
pub fn kt_edges(c: &Components7) -> [i64; 9] {
    KT_EDGE_FORMS.map(|f| dot7(&f, c.as_array()))
}

/// Hexagon parameter of the matching KT-honeycomb:
/// `α = λ₁ + 2λ₂ + μ₁ + μ₂ − n₁₃`.
pub fn alpha_of(p: &Pictograph) -> i64 {
    let (l, m, _) = p.labels.externals();
    let (l, m) = (l.su3_pair(), m.su3_pair());
    l.0 + 2 * l.1 + m.0 + m.1 - p.labels.0[N13]
}

/// The KT-honeycomb with the same externals and hexagon parameter.
pub fn to_kt(p: &Pictograph) -> Honeycomb {
    let (l, m, n) = p.labels.externals();
    honeycomb::build(&l, &m, &n, alpha_of(p)).expect("a valid pictograph gives a valid honeycomb")
}

/// All pictographs with the given externals, in increasing `n₁₃`.
///
/// The labels are affine in `a = n₁₃` once the externals are fixed, so the
/// fiber is an interval of `a` walked by [`DELTA`].
pub fn enumerate(lambda: &Weight, mu: &Weight, nu: &Weight, kind: Kind) -> Vec<Pictograph> {
    let Some((base, lo, hi)) = fiber(lambda, mu, nu) else {
        return Vec::new();
    };
    (lo..=hi)
        .map(|a| {
            let labels = std::array::from_fn(|i| base[i] + a * DELTA[i]);
            Pictograph::new(kind, labels).expect("labels inside the fiber are valid")
        })
        .collect()
}

/// Labels at `a = 0` and the admissible range of `a`.
fn fiber(lambda: &Weight, mu: &Weight, nu: &Weight) -> Option<([i64; 9], i64, i64)> {
    let (l, m, n) = (lambda.su3_pair(), mu.su3_pair(), nu.su3_pair());
    if !triality_ok(l, m, n) {
        return None;
    }
    let g3 = l.0 - l.1 + m.0 - m.1 - n.0 + n.1;
    debug_assert_eq!(g3.rem_euclid(3), 0);
    let g = g3 / 3;
    // Solve the external equations for the other components at a = 0.
    let f = l.1;
    let c = n.1 - f - g;
    let b = m.1 - c;
    let d = m.0 - g;
    let e = n.0 - d;
    let base = components_to_labels(&Components7 { a: 0, b, c, d, e, f, g }, Basis::Left);
    let (mut lo, mut hi) = (i64::MIN, i64::MAX);
    for i in 0..9 {
        // base[i] + a·Δ[i] ≥ 0
        if DELTA[i] > 0 {
            lo = lo.max(-base[i]);
        } else {
            hi = hi.min(base[i]);
        }
    }
    (lo <= hi).then_some((base, lo, hi))
}

/// `p + kΔ`, which stays in the fiber of `p` while all labels remain
/// non-negative.
pub fn step_delta(p: &Pictograph, k: i64) -> Result<Pictograph> {
    let l = p.labels.0;
    let next: [i64; 9] = std::array::from_fn(|i| l[i] + k * DELTA[i]);
    if let Some(i) = next.iter().position(|&x| x < 0) {
        return Err(Error::StepOutOfFiber {
            k,
            label: LABEL_NAMES[i],
        });
    }
    Pictograph::new(p.kind, next)
}

/// The σ-vectors `λ+μ−ν`, `λ−μ̄+ν̄`, `−λ̄+μ+ν̄` read off the labels as
/// combinations of the positive roots `α₁ = (2,−1)`, `α₂ = (−1,2)`,
/// `θ = (1,1)`, in Dynkin components.
pub fn sigma_vectors(p: &Pictograph) -> [(i64, i64); 3] {
    let l = p.labels.0;
    let comb = |x: i64, y: i64, z: i64| (2 * x - y + z, -x + 2 * y + z);
    [
        comb(l[N12], l[N23], l[N13]),
        comb(l[M12], l[M23], l[M13]),
        comb(l[L12], l[L23], l[L13]),
    ]
}

/// A fundamental pictograph together with a short name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Fundamental {
    pub name: &'static str,
    pub primitive: bool,
    pub pictograph: Pictograph,
}

const fn unit(idx: &[usize]) -> [i64; 9] {
    let mut v = [0; 9];
    let mut i = 0;
    while i < idx.len() {
        v[idx[i]] = 1;
        i += 1;
    }
    v
}

const FUNDAMENTALS: [(&str, bool, [i64; 9]); 8] = [
    ("a", false, unit(&[N13])),
    ("b", false, unit(&[N12, N23])),
    ("c", false, unit(&[L13])),
    ("d", false, unit(&[L12, L23])),
    ("e", false, unit(&[M13])),
    ("f", false, unit(&[M12, M23])),
    ("left", true, unit(&[M12, N12, L12])),
    ("right", true, unit(&[M23, N23, L23])),
];

/// The eight fundamental pictographs: six non-primitive, then the left and
/// right primitive forks.
pub fn fundamentals(kind: Kind) -> Vec<Fundamental> {
    FUNDAMENTALS
        .iter()
        .map(|&(name, primitive, labels)| Fundamental {
            name,
            primitive,
            pictograph: Pictograph::new(kind, labels).expect("fundamentals are valid"),
        })
        .collect()
}

/// Coefficients of the single linear relation among the fundamentals, in
/// the order of [`fundamentals`]: `left + right − b − d − f = 0`.
pub const RELATION: [i64; 8] = [0, -1, 0, -1, 0, -1, 1, 1];

/// Evaluates `Σ cᵢ Fᵢ` over the fundamentals.
pub fn combine(coeffs: &[i64; 8]) -> [i64; 9] {
    let mut out = [0; 9];
    for (c, (_, _, v)) in coeffs.iter().zip(FUNDAMENTALS) {
        for i in 0..9 {
            out[i] += c * v[i];
        }
    }
    out
}

/// Rank over Q of a list of integer vectors, by fraction-free elimination.
pub fn rank<const N: usize>(vectors: &[[i64; N]]) -> usize {
    let mut rows: Vec<[i128; N]> = vectors.iter().map(|v| v.map(i128::from)).collect();
    let mut rank = 0;
    for col in 0..N {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for r in rows.iter_mut().skip(rank + 1) {
            let factor = r[col];
            if factor != 0 {
                for k in 0..N {
                    r[k] = r[k] * pivot[col] - factor * pivot[k];
                }
            }
        }
        rank += 1;
    }
    rank
}

impl fmt::Display for NineLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.0;
        writeln!(f, "{:>12}", l[N13])?;
        writeln!(f, "{:>9}{:>6}", l[M23], l[L12])?;
        writeln!(f, "{:>6}{:>12}", l[N12], l[N23])?;
        write!(f, "{:>3}{:>6}{:>6}{:>6}", l[M13], l[L23], l[M12], l[L13])
    }
}

/// Text drawing: the BZ layout of the nine labels with the externals.
pub fn render_text(p: &Pictograph) -> String {
    let (l, m, n) = p.labels.externals();
    let title = match p.kind {
        Kind::BzTriangle => "BZ-triangle",
        Kind::Oblade => "O-blade",
        Kind::Su3Honeycomb => "SU(3)-honeycomb",
    };
    let mut s = String::new();
    let _ = writeln!(s, "{title} {l} x {m} -> {n}");
    let _ = writeln!(s, "{}", p.labels);
    s
}

fn stroke_width(label: i64) -> f64 {
    match label {
        0 => 0.75,
        1 => 3.0,
        _ => 1.5,
    }
}

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// SVG drawing in the style of the chosen kind. Labels of 1 are drawn
/// with a heavier stroke and 0 with a dashed one.
pub fn render_svg(p: &Pictograph) -> String {
    let l = p.labels.0;
    let mut body = String::new();
    let label_at = |body: &mut String, x: f64, y: f64, v: i64| {
        let _ = writeln!(
            body,
            r#"<text x="{x:.2}" y="{y:.2}" font-size="12" text-anchor="middle" font-family="sans-serif">{v}</text>"#
        );
    };
    let line = |body: &mut String, a: (f64, f64), b: (f64, f64), v: i64| {
        let dash = if v == 0 { r#" stroke-dasharray="3,3""# } else { "" };
        let _ = writeln!(
            body,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="{:.2}"{dash}/>"#,
            a.0,
            a.1,
            b.0,
            b.1,
            stroke_width(v)
        );
    };
    let (w, h) = match p.kind {
        Kind::BzTriangle => {
            // Ten-point triangle without its centre.
            let u = 60.0;
            let pos = |r: usize, c: usize| (150.0 + (c as f64 - r as f64 / 2.0) * u, 30.0 + r as f64 * u * SQRT3_2);
            let slots = [
                (N13, 0, 0),
                (M23, 1, 0),
                (L12, 1, 1),
                (N12, 2, 0),
                (N23, 2, 2),
                (M13, 3, 0),
                (L23, 3, 1),
                (M12, 3, 2),
                (L13, 3, 3),
            ];
            let outline = [pos(0, 0), pos(3, 0), pos(3, 3)];
            for i in 0..3 {
                line(&mut body, outline[i], outline[(i + 1) % 3], 2);
            }
            let hex = [pos(1, 0), pos(1, 1), pos(2, 2), pos(3, 2), pos(3, 1), pos(2, 0)];
            for i in 0..6 {
                line(&mut body, hex[i], hex[(i + 1) % 6], 2);
            }
            for (idx, r, c) in slots {
                let (x, y) = pos(r, c);
                let _ = writeln!(
                    body,
                    r#"<circle cx="{x:.2}" cy="{y:.2}" r="11" fill="white" stroke="black"/>"#
                );
                label_at(&mut body, x, y + 4.0, l[idx]);
            }
            (300.0, 210.0)
        }
        Kind::Oblade => {
            // Inner vertex with six blades; the three corner labels join
            // alternate blade tips.
            let c = (150.0, 120.0);
            let r = 80.0;
            let tip = |k: usize| {
                let t = std::f64::consts::PI / 3.0 * k as f64 - std::f64::consts::FRAC_PI_2;
                (c.0 + r * t.cos(), c.1 + r * t.sin())
            };
            let blades = [L12, N23, M12, L23, N12, M23];
            for (k, &idx) in blades.iter().enumerate() {
                line(&mut body, c, tip(k), l[idx]);
                let (x, y) = tip(k);
                label_at(&mut body, (c.0 + x) / 2.0 + 8.0, (c.1 + y) / 2.0, l[idx]);
            }
            for (k, &idx) in [N13, L13, M13].iter().enumerate() {
                let (a, b) = (tip((2 * k + 5) % 6), tip(2 * k));
                line(&mut body, a, b, l[idx]);
                label_at(&mut body, (a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0 - 6.0, l[idx]);
            }
            (300.0, 240.0)
        }
        Kind::Su3Honeycomb => {
            // Metric hexagon: side lengths are the labels, 60° turns.
            let sides = [l[M23], l[L12], l[N23], l[M12], l[L23], l[N12]];
            let scale = 12.0;
            let mut pts = vec![(0.0f64, 0.0f64)];
            for (k, &s) in sides.iter().enumerate() {
                let t = std::f64::consts::PI / 3.0 * k as f64;
                let (x, y) = *pts.last().unwrap();
                pts.push((x + scale * s as f64 * t.cos(), y + scale * s as f64 * t.sin()));
            }
            pts.pop();
            let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
            let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
            let legs = [l[N13], l[L13], l[M13]];
            let pad = 20.0 + scale * *legs.iter().max().unwrap_or(&0) as f64;
            let pts: Vec<(f64, f64)> = pts.iter().map(|p| (p.0 - min_x + pad, p.1 - min_y + pad)).collect();
            for k in 0..6 {
                line(&mut body, pts[k], pts[(k + 1) % 6], sides[k]);
                let (a, b) = (pts[k], pts[(k + 1) % 6]);
                label_at(&mut body, (a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0 - 4.0, sides[k]);
            }
            // Corner legs leave alternate vertices, pointing away from the
            // centre.
            let cx = pts.iter().map(|p| p.0).sum::<f64>() / 6.0;
            let cy = pts.iter().map(|p| p.1).sum::<f64>() / 6.0;
            for (j, &v) in legs.iter().enumerate() {
                let a = pts[(2 * j + 2) % 6];
                let (dx, dy) = (a.0 - cx, a.1 - cy);
                let norm = dx.hypot(dy);
                let (ux, uy) = if norm > 0.0 {
                    (dx / norm, dy / norm)
                } else {
                    (0.0, -1.0)
                };
                let b = (a.0 + scale * v as f64 * ux, a.1 + scale * v as f64 * uy);
                line(&mut body, a, b, v);
                label_at(&mut body, b.0 + 6.0 * ux, b.1 + 6.0 * uy, v);
            }
            let w = pts.iter().map(|p| p.0).fold(0.0, f64::max) + pad;
            let h = pts.iter().map(|p| p.1).fold(0.0, f64::max) + pad;
            (w, h)
        }
    };
    let (lam, mu, nu) = p.labels.externals();
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n\
         <title>{lam} x {mu} -> {nu}</title>\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplicity::mult;

    fn w(a: u32, b: u32) -> Weight {
        Weight::su3(a, b)
    }

    /// Every labelling with the given externals, by brute force.
    fn brute(lambda: &Weight, mu: &Weight, nu: &Weight) -> Vec<[i64; 9]> {
        let (l, m, n) = (lambda.su3_pair(), mu.su3_pair(), nu.su3_pair());
        let cap = l.0.max(l.1).max(m.0).max(m.1).max(n.0).max(n.1);
        let mut out = Vec::new();
        let mut v = [0i64; 9];
        fn rec(i: usize, cap: i64, v: &mut [i64; 9], out: &mut Vec<[i64; 9]>, want: &(Weight, Weight, Weight)) {
            if i == 9 {
                if let Ok(p) = NineLabels::new(*v) {
                    if p.externals() == *want {
                        out.push(*v);
                    }
                }
                return;
            }
            for x in 0..=cap {
                v[i] = x;
                rec(i + 1, cap, v, out, want);
            }
        }
        rec(0, cap, &mut v, &mut out, &(*lambda, *mu, *nu));
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (l, m, n) in [
            (w(1, 1), w(1, 1), w(1, 1)),
            (w(1, 0), w(0, 1), w(0, 0)),
            (w(2, 1), w(1, 2), w(1, 1)),
            (w(2, 0), w(0, 2), w(1, 1)),
            (w(0, 2), w(2, 1), w(1, 0)),
        ] {
            let mut ours: Vec<[i64; 9]> = enumerate(&l, &m, &n, Kind::Oblade)
                .iter()
                .map(|p| p.labels.as_array())
                .collect();
            ours.sort();
            assert_eq!(ours, brute(&l, &m, &n), "{l} {m} {n}");
            assert_eq!(ours.len() as u64, mult(&l, &m, &n));
        }
        assert_eq!(enumerate(&w(1, 1), &w(1, 1), &w(1, 1), Kind::BzTriangle).len(), 2);
        assert_eq!(enumerate(&w(1, 0), &w(0, 1), &w(0, 0), Kind::BzTriangle).len(), 1);
    }

    #[test]
    fn worked_fiber() {
        let (l, m, n) = (w(21, 6), w(17, 16), w(12, 8));
        let fib = enumerate(&l, &m, &n, Kind::Oblade);
        assert_eq!(fib.len(), 5);
        let a: Vec<i64> = fib.iter().map(|p| to_components(p).a).collect();
        assert_eq!(a, vec![2, 3, 4, 5, 6]);
        for p in &fib {
            assert_eq!(external_weights(p), (l, m, n));
            assert_eq!(alpha_of(p), 66 - to_components(p).a);
            let h = to_kt(p);
            assert_eq!(h.edges, kt_edges(&to_components(p)));
        }
        for pair in fib.windows(2) {
            assert_eq!(step_delta(&pair[0], 1).unwrap(), pair[1]);
        }
        assert_eq!(step_delta(&fib[0], 0).unwrap(), fib[0]);
        assert!(matches!(
            step_delta(&fib[0], 5),
            Err(Error::StepOutOfFiber { k: 5, .. })
        ));
        assert!(step_delta(&fib[0], -1).is_err());
    }

    #[test]
    fn fundamentals_and_relation() {
        let f = fundamentals(Kind::Oblade);
        assert_eq!(f.len(), 8);
        let vecs: Vec<[i64; 9]> = f.iter().map(|x| x.pictograph.labels.as_array()).collect();
        assert_eq!(rank(&vecs), 7);
        assert_eq!(combine(&RELATION), [0; 9]);
        let fund = [w(1, 0), w(0, 1), w(0, 0)];
        for x in &f {
            let (l, m, n) = external_weights(&x.pictograph);
            assert!([l, m, n].iter().all(|v| fund.contains(v)));
            let trivial = [l, m, n].iter().filter(|v| **v == w(0, 0)).count();
            assert_eq!(trivial, if x.primitive { 0 } else { 1 }, "{}", x.name);
        }
        let left = to_components(&f[6].pictograph);
        assert_eq!(left.as_array(), [0, 0, 0, 0, 0, 0, 1]);
        let right = to_components(&f[7].pictograph);
        assert_eq!(right.as_array(), [0, 1, 0, 1, 0, 1, -1]);
    }

    #[test]
    fn delta_is_virtual() {
        assert_eq!(hexagon_defect(&DELTA), [0; 3]);
        assert!(NineLabels::new(DELTA).is_err());
        let l = DELTA;
        assert_eq!(
            [
                l[M13] + l[N12],
                l[M23] + l[N13],
                l[N13] + l[L12],
                l[N23] + l[L13],
                l[M13] + l[L23],
                l[M12] + l[L13]
            ],
            [0; 6]
        );
    }

    #[test]
    fn sigma_identity() {
        let p = enumerate(&w(9, 5), &w(6, 2), &w(5, 9), Kind::BzTriangle)[0];
        let (l, m, n) = external_weights(&p);
        let (l, m, n) = (l.su3_pair(), m.su3_pair(), n.su3_pair());
        let s = sigma_vectors(&p);
        assert_eq!(s[0], (l.0 + m.0 - n.0, l.1 + m.1 - n.1));
        assert_eq!(s[1], (l.0 - m.1 + n.1, l.1 - m.0 + n.0));
        assert_eq!(s[2], (-l.1 + m.0 + n.1, -l.0 + m.1 + n.0));
    }

    #[test]
    fn right_basis_round_trip() {
        let p = *enumerate(&w(3, 3), &w(2, 2), &w(2, 2), Kind::Oblade).last().unwrap();
        for basis in [Basis::Left, Basis::Right] {
            let c = to_components_in(&p, basis);
            assert_eq!(components_to_labels(&c, basis), p.labels.as_array());
        }
    }

    #[test]
    fn zero_pictograph() {
        let z = Pictograph::new(Kind::Oblade, [0; 9]).unwrap();
        assert_eq!(external_weights(&z), (w(0, 0), w(0, 0), w(0, 0)));
        let h = to_kt(&z);
        assert_eq!(h.edges, [0; 9]);
        for k in [Kind::BzTriangle, Kind::Oblade, Kind::Su3Honeycomb] {
            let svg = render_svg(&z.with_kind(k));
            assert!(svg.starts_with("<svg"));
            assert!(!svg.contains("NaN"));
        }
    }
}
