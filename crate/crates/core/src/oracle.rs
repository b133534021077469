//! Brute-force SU(N) tensor products for small N, built from weight
//! multiplicities (Freudenthal) and the Racah–Speiser reflection rule.
//!
//! Nothing here uses the SU(3) closed forms, so it serves as ground truth
//! for them and covers SU(4), where no closed form is available.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multiplicity::{DecompositionTable, Entry};
use crate::weights::Weight;

/// Supported values of N.
pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 4;

type Dynkin = Vec<i64>;

fn check_rank(w: &Weight) -> Result<()> {
    if (MIN_RANK..=MAX_RANK).contains(&w.rank()) {
        Ok(())
    } else {
        Err(Error::UnsupportedRank {
            min: MIN_RANK,
            max: MAX_RANK,
            found: w.rank(),
        })
    }
}

/// Root-system data of A_{N−1} in Dynkin coordinates.
struct RootSystem {
    n: usize,
    /// Simple roots, i.e. rows of the Cartan matrix.
    simple: Vec<Dynkin>,
    positive: Vec<Dynkin>,
}

impl RootSystem {
    fn new(rank_n: usize) -> Self {
        let r = rank_n - 1;
        let simple: Vec<Dynkin> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let mut positive = Vec::new();
        for i in 0..r {
            for j in i..r {
                let mut root = vec![0; r];
                for s in &simple[i..=j] {
                    for (x, y) in root.iter_mut().zip(s) {
                        *x += y;
                    }
                }
                positive.push(root);
            }
        }
        RootSystem {
            n: rank_n,
            simple,
            positive,
        }
    }

    /// `N · (x, y)` using the quadratic form matrix `N·A⁻¹`.
    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.n as i64;
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let (a, b) = ((i + 1) as i64, (j + 1) as i64);
                s += xi * yj * a.min(b) * (n - a.max(b));
            }
        }
        s
    }

    /// Height of `x` in the simple-root basis, times N.
    fn scaled_height(&self, x: &[i64]) -> i64 {
        let ones = vec![1; x.len()];
        // Σ_k (A⁻¹x)_k = (ρ, x) in the root normalization.
        self.form(&ones, x)
    }

    /// Reflects into the dominant chamber and returns the image.
    fn dominant(&self, w: &[i64]) -> Dynkin {
        let mut w = w.to_vec();
        while let Some(i) = w.iter().position(|&x| x < 0) {
            let c = w[i];
            for (x, s) in w.iter_mut().zip(&self.simple[i]) {
                *x -= c * s;
            }
        }
        w
    }

    /// Like [`Self::dominant`] but tracks the sign of the Weyl element;
    /// `None` when `w` lies on a wall.
    fn dominant_signed(&self, w: &[i64]) -> Option<(Dynkin, i64)> {
        let mut w = w.to_vec();
        let mut sign = 1;
        loop {
            if w.contains(&0) {
                return None;
            }
            match w.iter().position(|&x| x < 0) {
                None => return Some((w, sign)),
                Some(i) => {
                    let c = w[i];
                    for (x, s) in w.iter_mut().zip(&self.simple[i]) {
                        *x -= c * s;
                    }
                    sign = -sign;
                }
            }
        }
    }

    fn orbit(&self, w: &[i64]) -> Vec<Dynkin> {
        let mut seen: HashSet<Dynkin> = HashSet::new();
        let mut queue = VecDeque::from([w.to_vec()]);
        seen.insert(w.to_vec());
        while let Some(x) = queue.pop_front() {
            for (i, s) in self.simple.iter().enumerate() {
                if x[i] == 0 {
                    continue;
                }
                let y: Dynkin = x.iter().zip(s).map(|(a, b)| a - x[i] * b).collect();
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<Dynkin> = seen.into_iter().collect();
        out.sort();
        out
    }
}

/// All weights of an irrep with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSystem {
    pub highest: Weight,
    /// Weight (Dynkin coordinates, possibly negative) to multiplicity.
    pub weights: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn mult(&self, w: &[i64]) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }
}

/// Dominant weights of the irrep with their multiplicities (Freudenthal).
fn dominant_multiplicities(rs: &RootSystem, top: &[i64]) -> BTreeMap<Dynkin, u64> {
    // Dominant weights below `top` are connected to it by subtracting
    // positive roots while staying dominant.
    let mut seen: HashSet<Dynkin> = HashSet::from([top.to_vec()]);
    let mut queue = VecDeque::from([top.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for a in &rs.positive {
            let y: Dynkin = x.iter().zip(a).map(|(p, q)| p - q).collect();
            if y.iter().all(|&v| v >= 0) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut order: Vec<Dynkin> = seen.into_iter().collect();
    let top_h = rs.scaled_height(top);
    order.sort_by_key(|x| (top_h - rs.scaled_height(x), x.clone()));

    let rho = vec![1; top.len()];
    let shifted = |x: &[i64]| -> Dynkin { x.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top_norm = {
        let t = shifted(top);
        rs.form(&t, &t)
    };
    let mut mult: BTreeMap<Dynkin, u64> = BTreeMap::new();
    mult.insert(top.to_vec(), 1);
    for mu in order.iter().skip(1) {
        let mut acc = 0i64;
        for a in &rs.positive {
            let mut k = 1;
            loop {
                let w: Dynkin = mu.iter().zip(a).map(|(p, q)| p + k * q).collect();
                let d = rs.dominant(&w);
                let Some(&m) = mult.get(&d) else { break };
                acc += m as i64 * rs.form(&w, a);
                k += 1;
            }
        }
        let s = shifted(mu);
        let denom = top_norm - rs.form(&s, &s);
        let num = 2 * acc;
        assert!(denom > 0 && num % denom == 0, "Freudenthal step not integral at {mu:?}");
        let m = num / denom;
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
        }
    }
    mult
}

fn cache() -> &'static RwLock<HashMap<Weight, Arc<WeightSystem>>> {
    static CACHE: OnceLock<RwLock<HashMap<Weight, Arc<WeightSystem>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Full weight system of the irrep with highest weight `λ`, memoized.
pub fn weight_system(lambda: &Weight) -> Result<Arc<WeightSystem>> {
    check_rank(lambda)?;
    if let Some(ws) = cache().read().expect("cache lock").get(lambda) {
        return Ok(Arc::clone(ws));
    }
    let rs = RootSystem::new(lambda.rank());
    let top: Dynkin = lambda.labels().iter().map(|&l| i64::from(l)).collect();
    let mut weights = BTreeMap::new();
    for (d, m) in dominant_multiplicities(&rs, &top) {
        for w in rs.orbit(&d) {
            weights.insert(w, m);
        }
    }
    let ws = Arc::new(WeightSystem {
        highest: *lambda,
        weights,
    });
    cache()
        .write()
        .expect("cache lock")
        .entry(*lambda)
        .or_insert_with(|| Arc::clone(&ws));
    Ok(ws)
}

/// Weyl dimension formula for SU(N), used as a cross-check.
pub fn weyl_dim(w: &Weight) -> u64 {
    let l: Vec<u64> = w.labels().iter().map(|&x| u64::from(x)).collect();
    let r = l.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        for j in i..r {
            let s: u64 = l[i..=j].iter().sum::<u64>() + (j - i + 1) as u64;
            num *= u128::from(s);
            den *= (j - i + 1) as u128;
        }
    }
    (num / den) as u64
}

/// Decomposes `λ ⊗ μ` as a map from highest weight to multiplicity.
pub fn decompose(lambda: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    check_rank(lambda)?;
    lambda.require_rank(mu.rank())?;
    // Summing over the smaller weight system is cheaper and gives the same
    // product.
    let (big, small) = if weyl_dim(lambda) >= weyl_dim(mu) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let rs = RootSystem::new(big.rank());
    let ws = weight_system(small)?;
    let mut acc: BTreeMap<Dynkin, i64> = BTreeMap::new();
    for (w, &m) in &ws.weights {
        let shifted: Dynkin = w.iter().zip(big.labels()).map(|(a, &b)| a + i64::from(b) + 1).collect();
        if let Some((d, sign)) = rs.dominant_signed(&shifted) {
            let nu: Dynkin = d.iter().map(|x| x - 1).collect();
            *acc.entry(nu).or_insert(0) += sign * m as i64;
        }
    }
    let mut out = BTreeMap::new();
    for (nu, k) in acc {
        assert!(k >= 0, "negative multiplicity {k} at {nu:?}");
        if k > 0 {
            out.insert(Weight::new(&nu)?, k as u64);
        }
    }
    Ok(out)
}

/// Oracle decomposition in the same table form as the closed-form path.
pub fn decompose_table(lambda: &Weight, mu: &Weight) -> Result<DecompositionTable> {
    let entries = decompose(lambda, mu)?
        .into_iter()
        .map(|(nu, mult)| Entry { nu, mult })
        .collect();
    Ok(DecompositionTable {
        lambda: *lambda,
        mu: *mu,
        entries,
    })
}

/// Multiplicity of `ν` in `λ ⊗ μ`.
pub fn mult(lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    lambda.require_rank(nu.rank())?;
    Ok(decompose(lambda, mu)?.get(nu).copied().unwrap_or(0))
}

/// Totals and multiplicity multisets of `λ⊗μ` versus `λ⊗μ̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationReport {
    pub lambda: Weight,
    pub mu: Weight,
    pub total: u64,
    pub total_conj: u64,
    pub squares: u64,
    pub squares_conj: u64,
    pub max_mult: u64,
    pub max_mult_conj: u64,
    pub multisets_equal: bool,
}

impl ConjugationReport {
    pub fn totals_equal(&self) -> bool {
        self.total == self.total_conj && self.squares == self.squares_conj
    }
}

pub fn compare_conjugate(lambda: &Weight, mu: &Weight) -> Result<ConjugationReport> {
    let a = decompose(lambda, mu)?;
    let b = decompose(lambda, &mu.conjugate())?;
    let stats = |t: &BTreeMap<Weight, u64>| {
        let mut v: Vec<u64> = t.values().copied().collect();
        v.sort_unstable();
        let total = v.iter().sum::<u64>();
        let squares = v.iter().map(|x| x * x).sum::<u64>();
        let max = v.last().copied().unwrap_or(0);
        (v, total, squares, max)
    };
    let (va, ta, sa, ma) = stats(&a);
    let (vb, tb, sb, mb) = stats(&b);
    Ok(ConjugationReport {
        lambda: *lambda,
        mu: *mu,
        total: ta,
        total_conj: tb,
        squares: sa,
        squares_conj: sb,
        max_mult: ma,
        max_mult_conj: mb,
        multisets_equal: va == vb,
    })
}

/// All SU(N) weights of a given level.
pub fn weights_of_level(rank: usize, level: u32) -> Vec<Weight> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if slots == 1 {
            cur.push(i64::from(left));
            out.push(Weight::new(cur).expect("valid labels"));
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(i64::from(x));
            rec(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(level, rank - 1, &mut Vec::new(), &mut out);
    out
}

/// Vertices of the polytope of weights in `(1,2,2) ⊗ (2,2,1)`, all of
/// multiplicity one.
pub const SU4_POLYTOPE_VERTICES: [[u32; 3]; 16] = [
    [0, 0, 0],
    [0, 0, 4],
    [4, 0, 0],
    [6, 1, 0],
    [0, 1, 6],
    [0, 6, 0],
    [2, 0, 6],
    [6, 0, 2],
    [4, 4, 0],
    [0, 4, 4],
    [5, 0, 5],
    [3, 4, 3],
    [1, 5, 3],
    [3, 5, 1],
    [1, 6, 1],
    [4, 2, 4],
];

/// Facet planes `n·x ≤ d` of the hull of a point set in Z³, found by
/// brute force over point triples.
pub fn hull_facets(points: &[[i64; 3]]) -> Vec<([i64; 3], i64)> {
    let sub = |a: [i64; 3], b: [i64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let dot = |a: [i64; 3], b: [i64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let mut facets: Vec<([i64; 3], i64)> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                let (u, v) = (sub(points[j], points[i]), sub(points[k], points[i]));
                let n = [
                    u[1] * v[2] - u[2] * v[1],
                    u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0],
                ];
                if n == [0, 0, 0] {
                    continue;
                }
                let g = gcd(gcd(n[0].abs(), n[1].abs()), n[2].abs());
                let n = n.map(|x| x / g);
                let d = dot(n, points[i]);
                for (n, d) in [(n, d), (n.map(|x| -x), -d)] {
                    if points.iter().all(|&p| dot(n, p) <= d) && !facets.contains(&(n, d)) {
                        facets.push((n, d));
                    }
                }
            }
        }
    }
    facets
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Outcome of the checks on `(1,2,2) ⊗ (2,2,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopeReport {
    pub vertices_mult_one: bool,
    pub mult_501: u64,
    pub mult_105: u64,
    pub mult_202: u64,
    pub high_mult_on_face: bool,
    pub all_inside_hull: bool,
    pub theorem1_totals_equal: bool,
}

impl PolytopeReport {
    pub fn passed(&self) -> bool {
        self.vertices_mult_one
            && self.mult_501 == 2
            && self.mult_105 == 2
            && self.mult_202 == 5
            && self.high_mult_on_face
            && self.all_inside_hull
            && self.theorem1_totals_equal
    }
}

pub fn su4_polytope_check() -> Result<PolytopeReport> {
    let (l, m) = (Weight::su4(1, 2, 2), Weight::su4(2, 2, 1));
    let table = decompose(&l, &m)?;
    let at = |a, b, c| table.get(&Weight::su4(a, b, c)).copied().unwrap_or(0);
    let vertices_mult_one = SU4_POLYTOPE_VERTICES.iter().all(|v| at(v[0], v[1], v[2]) == 1);
    let pts: Vec<[i64; 3]> = SU4_POLYTOPE_VERTICES.map(|v| v.map(i64::from)).to_vec();
    let facets = hull_facets(&pts);
    // The quoted higher multiplicities sit on the facet ν₂ = 0.
    let high_mult_on_face = facets.contains(&([0, -1, 0], 0))
        && [(5, 0, 1), (1, 0, 5), (2, 0, 2)]
            .iter()
            .all(|&(a, b, c)| b == 0 && at(a, b, c) > 1);
    let all_inside_hull = table.keys().all(|nu| {
        let x: Vec<i64> = nu.labels().iter().map(|&v| i64::from(v)).collect();
        facets
            .iter()
            .all(|(n, d)| n[0] * x[0] + n[1] * x[1] + n[2] * x[2] <= *d)
    });
    Ok(PolytopeReport {
        vertices_mult_one,
        mult_501: at(5, 0, 1),
        mult_105: at(1, 0, 5),
        mult_202: at(2, 0, 2),
        high_mult_on_face,
        all_inside_hull,
        theorem1_totals_equal: compare_conjugate(&l, &m)?.totals_equal(),
    })
}
