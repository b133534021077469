//! Tensor polygons: the convex region of the `(ν₁, ν₂)` plane where the
//! constituents of `λ ⊗ μ` live, and its nested layers of higher
//! multiplicity.
//!
//! The outer polygon is built from at most eight edges whose lengths are
//! piecewise-linear in the four labels. Those formulas expect `λ₁` to be
//! the largest label, so inputs are first brought to that frame by swapping
//! the factors and/or conjugating both, and the result is mapped back.

use std::fmt::Write as _;

use serde::Serialize;

use crate::multiplicity::{mult_max, DecompositionTable};
use crate::weights::Weight;

/// A lattice point of the `(ν₁, ν₂)` plane.
pub type Point = [i64; 2];

type Pair = (i64, i64);

/// How the caller's pair was brought to the frame where `λ₁` is maximal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    Identity,
    Conjugate,
    Swap,
    SwapConjugate,
}

impl Normalization {
    pub const ALL: [Normalization; 4] = [
        Normalization::Identity,
        Normalization::Conjugate,
        Normalization::Swap,
        Normalization::SwapConjugate,
    ];

    pub fn conjugates(self) -> bool {
        matches!(self, Normalization::Conjugate | Normalization::SwapConjugate)
    }

    pub fn swaps(self) -> bool {
        matches!(self, Normalization::Swap | Normalization::SwapConjugate)
    }

    /// Applies the transform to the pair of factors.
    pub fn apply(self, l: Pair, m: Pair) -> (Pair, Pair) {
        let (l, m) = if self.swaps() { (m, l) } else { (l, m) };
        if self.conjugates() {
            ((l.1, l.0), (m.1, m.0))
        } else {
            (l, m)
        }
    }

    /// Maps a constituent between the caller's frame and the normalized
    /// one. The map is an involution.
    pub fn point(self, p: Point) -> Point {
        if self.conjugates() {
            [p[1], p[0]]
        } else {
            p
        }
    }

    /// First transform under which `λ₁` is the largest of the four labels.
    pub fn find(l: Pair, m: Pair) -> Normalization {
        Normalization::ALL
            .into_iter()
            .find(|t| {
                let (l, m) = t.apply(l, m);
                l.0 >= l.1.max(m.0).max(m.1)
            })
            .expect("some label is maximal")
    }
}

/// The eight edge vectors of the outer polygon in the normalized frame,
/// starting from the highest highest weight and turning clockwise.
pub(crate) fn outer_edges(l: Pair, m: Pair) -> [Point; 8] {
    let (p, q) = l;
    let (r, s) = m;
    let e4 = if r > q {
        (p - s).min(r - q)
    } else {
        (q - r).min(s).abs()
    };
    let lens = [
        q.min(s),
        (q - s).min(r).abs(),
        p.min(q).min(r).min(s).min(r + s - q).max(0),
        e4,
        ((p - r - s).min(0) + q.min(r)).abs(),
        q.min(r + s - p).max(0),
        (p - r).min(s).abs(),
        r,
    ];
    const DIRS: [Point; 8] = [[1, -2], [-1, -1], [-3, 0], [-2, 1], [-1, 2], [0, 3], [1, 1], [2, -1]];
    let mut out = [[0; 2]; 8];
    for i in 0..8 {
        out[i] = [lens[i] * DIRS[i][0], lens[i] * DIRS[i][1]];
    }
    out
}

/// Vertices from accumulating edges; zero-length edges are skipped so
/// repeated vertices do not appear.
fn accumulate(start: Point, edges: &[Point]) -> Vec<Point> {
    let mut v = vec![start];
    let mut cur = start;
    for e in edges {
        if *e == [0, 0] {
            continue;
        }
        cur = [cur[0] + e[0], cur[1] + e[1]];
        v.push(cur);
    }
    debug_assert_eq!(cur, start, "outer polygon failed to close");
    if v.len() > 1 {
        v.pop();
    }
    v
}

/// One multiplicity layer: a convex lattice polygon, vertices in clockwise
/// order (orthogonal axes) starting from the top-right corner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorPolygon {
    pub layer: u64,
    pub lambda: Weight,
    pub mu: Weight,
    pub vertices: Vec<Point>,
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    cross(a, b, p) == 0
        && p[0] >= a[0].min(b[0])
        && p[0] <= a[0].max(b[0])
        && p[1] >= a[1].min(b[1])
        && p[1] <= a[1].max(b[1])
}

impl TensorPolygon {
    /// Edge vectors between consecutive vertices, closing the loop.
    pub fn edge_vectors(&self) -> Vec<Point> {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % v.len()]);
                [b[0] - a[0], b[1] - a[1]]
            })
            .collect()
    }

    /// Inside or on the boundary.
    pub fn contains(&self, p: Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => v[0] == p,
            2 => on_segment(v[0], v[1], p),
            n => (0..n).all(|i| cross(v[i], v[(i + 1) % n], p) <= 0),
        }
    }

    pub fn on_boundary(&self, p: Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            0..=2 => self.contains(p),
            n => (0..n).any(|i| on_segment(v[i], v[(i + 1) % n], p)),
        }
    }

    fn bbox(&self) -> (Point, Point) {
        let xs = self.vertices.iter().map(|p| p[0]);
        let ys = self.vertices.iter().map(|p| p[1]);
        (
            [xs.clone().min().unwrap_or(0), ys.clone().min().unwrap_or(0)],
            [xs.max().unwrap_or(-1), ys.max().unwrap_or(-1)],
        )
    }

    /// Points of the shifted root lattice `λ + μ + Q` inside or on the
    /// polygon, sorted.
    pub fn lattice_points(&self) -> Vec<Point> {
        let (lo, hi) = self.bbox();
        let (l, m) = (self.lambda.su3_pair(), self.mu.su3_pair());
        let tau = (l.0 + 2 * l.1 + m.0 + 2 * m.1).rem_euclid(3);
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if (x + 2 * y).rem_euclid(3) == tau && self.contains([x, y]) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    /// Number of lattice points on each side, in vertex order.
    pub fn side_point_counts(&self) -> Vec<u64> {
        let (l, m) = (self.lambda.su3_pair(), self.mu.su3_pair());
        let tau = (l.0 + 2 * l.1 + m.0 + 2 * m.1).rem_euclid(3);
        let v = &self.vertices;
        if v.len() < 2 {
            return Vec::new();
        }
        self.edge_vectors()
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let g = gcd(d[0].abs(), d[1].abs());
                let step = [d[0] / g, d[1] / g];
                (0..=g)
                    .filter(|k| {
                        let (x, y) = (v[i][0] + k * step[0], v[i][1] + k * step[1]);
                        (x + 2 * y).rem_euclid(3) == tau
                    })
                    .count() as u64
            })
            .collect()
    }

    pub fn boundary_points(&self) -> Vec<Point> {
        self.lattice_points()
            .into_iter()
            .filter(|&p| self.on_boundary(p))
            .collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `H = λ + μ`.
#[track_caller]
pub fn hhw(lambda: &Weight, mu: &Weight) -> Weight {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    Weight::from_pair((l.0 + m.0, l.1 + m.1))
}

/// The lowest highest weight in the normalized frame.
pub(crate) fn lhw_normalized(l: Pair, m: Pair) -> Pair {
    let (p, q) = l;
    let (r, s) = m;
    if 0 <= p - s && p - s <= r - q {
        (r + s - p - q, p - s)
    } else if 0 <= r - q && r - q <= p - s {
        (p + q - r - s, r - q)
    } else {
        (p - s, q - r)
    }
}

/// The constituent of smallest level, which is the polygon vertex reached
/// after the first four edges.
#[track_caller]
pub fn lhw(lambda: &Weight, mu: &Weight) -> Weight {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    let t = Normalization::find(l, m);
    let (nl, nm) = t.apply(l, m);
    let h = lhw_normalized(nl, nm);
    let p = t.point([h.0, h.1]);
    Weight::from_pair((p[0], p[1]))
}

fn polygon_raw(l: Pair, m: Pair) -> Vec<Point> {
    let t = Normalization::find(l, m);
    let (nl, nm) = t.apply(l, m);
    let start = [nl.0 + nm.0, nl.1 + nm.1];
    let mut v: Vec<Point> = accumulate(start, &outer_edges(nl, nm))
        .into_iter()
        .map(|p| t.point(p))
        .collect();
    if t.conjugates() && v.len() > 2 {
        // Mirroring reverses orientation; restore clockwise order from H.
        v[1..].reverse();
    }
    v
}

/// The outer (multiplicity ≥ 1) polygon of `λ ⊗ μ`.
#[track_caller]
pub fn outer_polygon(lambda: &Weight, mu: &Weight) -> TensorPolygon {
    TensorPolygon {
        layer: 1,
        lambda: *lambda,
        mu: *mu,
        vertices: polygon_raw(lambda.su3_pair(), mu.su3_pair()),
    }
}

/// All layers, outermost first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerDiagram {
    pub lambda: Weight,
    pub mu: Weight,
    pub layers: Vec<TensorPolygon>,
}

impl LayerDiagram {
    /// The layer that constrains a point, i.e. the largest `m` whose
    /// polygon contains it; 0 outside everything. On the lattice this is
    /// the multiplicity.
    pub fn depth(&self, p: Point) -> u64 {
        self.layers
            .iter()
            .take_while(|poly| poly.contains(p))
            .map(|poly| poly.layer)
            .last()
            .unwrap_or(0)
    }
}

/// Layer `m + 1` is the outer polygon of `(λ − mρ) ⊗ (μ − mρ)` shifted by
/// `mρ`, for `m` up to `mult_max − 1`.
#[track_caller]
pub fn layers(lambda: &Weight, mu: &Weight) -> LayerDiagram {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    let top = mult_max(lambda, mu) as i64;
    let layers = (0..top)
        .map(|k| {
            let v = polygon_raw((l.0 - k, l.1 - k), (m.0 - k, m.1 - k))
                .into_iter()
                .map(|p| [p[0] + k, p[1] + k])
                .collect();
            TensorPolygon {
                layer: k as u64 + 1,
                lambda: *lambda,
                mu: *mu,
                vertices: v,
            }
        })
        .collect();
    LayerDiagram {
        lambda: *lambda,
        mu: *mu,
        layers,
    }
}

/// Convex hull (monotone chain), clockwise, collinear points dropped,
/// starting from the vertex of largest `x + y` (ties: largest `x`).
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    // Counter-clockwise lower then upper hull.
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    let passes = if pts.len() <= 2 {
        hull = pts.clone();
        0
    } else {
        2
    };
    for pass in 0..passes {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    hull.reverse();
    let first = (0..hull.len())
        .max_by_key(|&i| (hull[i][0] + hull[i][1], hull[i][0]))
        .unwrap_or(0);
    hull.rotate_left(first);
    hull
}

/// Puts a convex polygon's vertex list in the canonical form produced by
/// [`convex_hull`], for comparing polygons built in different ways.
pub fn canonical(vertices: &[Point]) -> Vec<Point> {
    convex_hull(vertices)
}

/// Axis convention for SVG output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Axes {
    /// `ν₁` horizontal, `ν₂` vertical.
    #[default]
    Orthogonal,
    /// Fundamental weights at 120°·½, i.e. the weight lattice drawn
    /// hexagonally.
    Root,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SvgOptions {
    /// Pixels per lattice unit.
    pub scale: u32,
    pub axes: Axes,
    /// Draw every layer, or only the outer polygon.
    pub all_layers: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale: 16,
            axes: Axes::Orthogonal,
            all_layers: true,
        }
    }
}

const PALETTE: [&str; 8] = [
    "#1b1b1b", "#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
];
const OUTLINES: [&str; 3] = ["#444444", "#1f77b4", "#d62728"];

/// Renders one or more decompositions on shared axes: lattice dots colored
/// by multiplicity and the layer outlines of each diagram.
pub fn render_svg(panels: &[(&LayerDiagram, &DecompositionTable)], opts: &SvgOptions) -> String {
    let s = f64::from(opts.scale);
    let project = |p: Point| -> (f64, f64) {
        match opts.axes {
            Axes::Orthogonal => (p[0] as f64, p[1] as f64),
            Axes::Root => (p[0] as f64 + 0.5 * p[1] as f64, p[1] as f64 * 0.866_025_403_784_438_6),
        }
    };
    let mut max = (1.0f64, 1.0f64);
    for (d, t) in panels {
        for p in d.layers.iter().flat_map(|l| l.vertices.iter()).copied() {
            let q = project(p);
            max = (max.0.max(q.0), max.1.max(q.1));
        }
        for e in &t.entries {
            let (a, b) = e.nu.su3_pair();
            let q = project([a, b]);
            max = (max.0.max(q.0), max.1.max(q.1));
        }
    }
    let margin = 2.0 * s;
    let width = max.0 * s + 2.0 * margin;
    let height = max.1 * s + 2.0 * margin;
    let xy = |p: Point| {
        let (x, y) = project(p);
        (margin + x * s, height - margin - y * s)
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (ox, oy) = xy([0, 0]);
    let (ax, _) = xy([(max.0 + 1.0) as i64, 0]);
    let _ = writeln!(
        out,
        r#"<line x1="{ox:.2}" y1="{oy:.2}" x2="{ax:.2}" y2="{oy:.2}" stroke="black" stroke-width="1"/>"#
    );
    let top = match opts.axes {
        Axes::Orthogonal => xy([0, (max.1 + 1.0) as i64]),
        Axes::Root => {
            let k = (max.1 / 0.866_025_403_784_438_6 + 1.0) as i64;
            xy([0, k])
        }
    };
    let _ = writeln!(
        out,
        r#"<line x1="{ox:.2}" y1="{oy:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
        top.0, top.1
    );
    for (i, (d, t)) in panels.iter().enumerate() {
        let stroke = OUTLINES[i % OUTLINES.len()];
        let _ = writeln!(
            out,
            r#"<g id="product-{i}" data-lambda="{}" data-mu="{}">"#,
            d.lambda, d.mu
        );
        let shown = if opts.all_layers {
            d.layers.len()
        } else {
            d.layers.len().min(1)
        };
        for poly in &d.layers[..shown] {
            let pts: Vec<String> = poly
                .vertices
                .iter()
                .map(|&p| {
                    let (x, y) = xy(p);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"<polygon class="layer" data-m="{}" points="{}" fill="none" stroke="{stroke}" stroke-width="1.5"/>"#,
                poly.layer,
                pts.join(" ")
            );
        }
        for e in &t.entries {
            let (a, b) = e.nu.su3_pair();
            let (x, y) = xy([a, b]);
            let color = PALETTE[(e.mult as usize - 1) % PALETTE.len()];
            let _ = writeln!(
                out,
                r#"<circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{color}" data-nu="{a},{b}" data-mult="{}"/>"#,
                s * 0.18,
                e.mult
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

/// Text listing of the layers.
pub fn render_text(d: &LayerDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} x {}", d.lambda, d.mu);
    for poly in &d.layers {
        let v: Vec<String> = poly.vertices.iter().map(|p| format!("({},{})", p[0], p[1])).collect();
        let _ = writeln!(s, "layer {}: {}", poly.layer, v.join(" "));
    }
    s
}
