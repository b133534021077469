//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the exit status is non-zero
//! if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liecomb::conjmap::{self, Case, Regime};
use liecomb::honeycomb::{self, EDGE_FORMS};
use liecomb::multiplicity::{census, decompose, mult, mult_max, reduce};
use liecomb::pictographs::{self, Kind, EXTERNAL_FORMS, KT_EDGE_FORMS, RELATION};
use liecomb::polygon::{self, canonical, convex_hull, Point};
use liecomb::{cli, oracle, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn w(a: u32, b: u32) -> Weight {
    Weight::su3(a, b)
}

fn box_weights(max: u32) -> Vec<Weight> {
    (0..=max).flat_map(|a| (0..=max).map(move |b| w(a, b))).collect()
}

fn box_pairs(max: u32) -> Vec<(Weight, Weight)> {
    let ws = box_weights(max);
    ws.iter().flat_map(|l| ws.iter().map(move |m| (*l, *m))).collect()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let t = start.elapsed();
    out.detail = format!("{} [{:.2?}]", out.detail, t);
    if let Some(limit) = limit {
        if t >= limit {
            out.ok = false;
            out.detail.push_str(&format!(" exceeds {limit:?}"));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let c = census(&w(21, 6), &w(17, 16));
    let sigma: Vec<u64> = (1..=7).map(|s| c.by_mult.get(&s).copied().unwrap_or(0)).collect();
    check(
        c.mult_max == 7 && c.distinct == 411 && sigma == [60, 56, 52, 48, 44, 40, 111] && c.by_mult.len() == 7,
        format!("max {} M {} sigma {:?}", c.mult_max, c.distinct, sigma),
    )
}

/// The worked tables, grouped by multiplicity 1, 2, 3.
#[rustfmt::skip]
const TABLE_62: [&[(u32, u32)]; 3] = [
    &[
        (1, 11), (2, 9), (2, 12), (3, 7), (3, 13), (4, 5), (5, 3), (5, 12), (6, 1), (7, 11), (8, 0),
        (9, 10), (11, 0), (11, 9), (13, 8), (14, 0), (15, 1), (15, 7), (16, 2), (16, 5), (17, 3),
    ],
    &[
        (3, 10), (4, 8), (4, 11), (5, 6), (6, 4), (6, 10), (7, 2), (8, 9), (9, 1), (10, 8), (12, 1),
        (12, 7), (13, 2), (14, 3), (14, 6), (15, 4),
    ],
    &[
        (5, 9), (6, 7), (7, 5), (7, 8), (8, 3), (8, 6), (9, 4), (9, 7), (10, 2), (10, 5), (11, 3),
        (11, 6), (12, 4), (13, 5),
    ],
];

#[rustfmt::skip]
const TABLE_26: [&[(u32, u32)]; 3] = [
    &[
        (1, 7), (2, 5), (2, 8), (3, 3), (3, 9), (4, 10), (5, 2), (5, 11), (6, 12), (7, 1), (7, 13),
        (9, 0), (9, 12), (11, 11), (12, 0), (12, 9), (13, 7), (14, 5), (15, 0), (15, 3), (16, 1),
    ],
    &[
        (3, 6), (4, 4), (4, 7), (5, 8), (6, 3), (6, 9), (7, 10), (8, 2), (8, 11), (10, 1), (10, 10),
        (11, 8), (12, 6), (13, 1), (13, 4), (14, 2),
    ],
    &[
        (5, 5), (6, 6), (7, 4), (7, 7), (8, 5), (8, 8), (9, 3), (9, 6), (9, 9), (10, 4), (10, 7),
        (11, 2), (11, 5), (12, 3),
    ],
];

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (mu, table) in [(w(6, 2), &TABLE_62), (w(2, 6), &TABLE_26)] {
        let t = decompose(&w(9, 5), &mu);
        let expected: BTreeMap<Weight, u64> = table
            .iter()
            .enumerate()
            .flat_map(|(i, block)| block.iter().map(move |&(a, b)| (w(a, b), i as u64 + 1)))
            .collect();
        let got: BTreeMap<Weight, u64> = t.entries.iter().map(|e| (e.nu, e.mult)).collect();
        let blocks: Vec<usize> = (1..=3).map(|s| t.with_mult(s).count()).collect();
        ok &= got == expected && t.entries.len() == 51 && blocks == [21, 16, 14] && t.total() == 95;
        notes.push(format!(
            "(9,5)x{mu}: {} entries {:?} total {}",
            t.entries.len(),
            blocks,
            t.total()
        ));
    }
    check(ok, notes.join("; "))
}

fn criterion_3() -> Outcome {
    let (l, m, n) = (w(21, 6), w(17, 16), w(12, 8));
    let a = mult(&l, &m, &n);
    let r = reduce(&l, &m, &n).expect("triality holds");
    let iv = honeycomb::alpha_bounds(&l, &m, &n);
    let c = honeycomb::count_by_alpha(&l, &m, &n);
    let d = pictographs::enumerate(&l, &m, &n, Kind::Oblade).len() as u64;
    let e = oracle::mult(&l, &m, &n).expect("rank 3");
    check(
        a == 5
            && r.s == 4
            && r.lmn == [11, 5, 18]
            && r.mult() == 5
            && (iv.min, iv.max) == (60, 64)
            && iv.len() == 5
            && c == 5
            && d == 5
            && e == 5,
        format!(
            "formula {a}, reduced {} (s={}, LMN={:?}), alpha [{},{}] count {c}, pictographs {d}, oracle {e}",
            r.mult(),
            r.s,
            r.lmn,
            iv.min,
            iv.max
        ),
    )
}

/// `EDGE_FORMS` rewritten over the pictograph components, still scaled
/// by 3, with `α = λ₁+2λ₂+μ₁+μ₂−a`.
fn composed_edge_forms() -> [[i64; 8]; 9] {
    let mut alpha = [0i64; 7];
    for (coef, row) in [1, 2, 1, 1].iter().zip(&EXTERNAL_FORMS[..4]) {
        for j in 0..7 {
            alpha[j] += coef * row[j];
        }
    }
    alpha[0] -= 1;
    EDGE_FORMS.map(|f| {
        let mut out = [0i64; 8];
        for j in 0..7 {
            out[j] = (0..6).map(|v| f[v] * EXTERNAL_FORMS[v][j]).sum::<i64>() + f[6] * alpha[j];
        }
        out[7] = f[7];
        out
    })
}

fn criterion_4() -> Outcome {
    let (l, m, n) = (w(21, 6), w(17, 16), w(12, 8));
    let fiber = pictographs::enumerate(&l, &m, &n, Kind::Oblade);
    let pairs: Vec<(i64, i64)> = fiber
        .iter()
        .map(|p| (pictographs::to_components(p).a, pictographs::alpha_of(p)))
        .collect();
    let a_ok =
        pairs.iter().map(|x| x.0).collect::<Vec<_>>() == [2, 3, 4, 5, 6] && pairs.iter().all(|&(a, al)| a == 66 - al);
    let composed = composed_edge_forms();
    let symbolic = (0..9).all(|i| composed[i][7] == 0 && (0..7).all(|j| composed[i][j] == 3 * KT_EDGE_FORMS[i][j]));
    let built = fiber.iter().all(|p| {
        let h = honeycomb::build(&l, &m, &n, pictographs::alpha_of(p)).expect("valid alpha");
        h.edges == pictographs::kt_edges(&pictographs::to_components(p))
    });
    check(
        a_ok && symbolic && built,
        format!(
            "a = 66 - alpha over {:?}; symbolic edge match {symbolic}; built edges match {built}",
            pairs
        ),
    )
}

fn criterion_5() -> Outcome {
    let s = cli::verify_sweep(8, cli::Mode::Theorem2);
    let first = s
        .counterexamples
        .first()
        .map(|c| format!(", first {} x {}", c.lambda, c.mu));
    check(
        s.passed() && s.pairs == 6561,
        format!(
            "{} pairs, {} failures{}",
            s.pairs,
            s.failures,
            first.unwrap_or_default()
        ),
    )
}

fn translation_vectors(l: &Weight, m: &Weight) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for e in &decompose(l, m).entries {
        for a in honeycomb::alpha_bounds(l, m, &e.nu).iter() {
            let p = conjmap::map_point(l, m, &e.nu, a).expect("valid point");
            if p.regime == Regime::Translation {
                let (x, y) = e.nu.su3_pair();
                let (u, v) = p.nu_image.su3_pair();
                out.insert((u - x, v - y));
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let pairs = box_pairs(8);
    let bad: Vec<_> = pairs
        .par_iter()
        .filter(|(l, m)| !conjmap::verify_bijection(l, m).passed())
        .collect();
    let mut notes = vec![format!("{} pairs, {} failures", pairs.len(), bad.len())];
    let mut ok = bad.is_empty();
    // Regime populations of the three figure pairs.
    let figures = [
        (w(10, 4), w(7, 3), Case::Case1, BTreeSet::new()),
        (w(9, 4), w(7, 5), Case::Case2, BTreeSet::from([(-2, 2)])),
        (w(6, 2), w(5, 4), Case::Case3, BTreeSet::from([(-1, 1)])),
    ];
    for (l, m, case, vectors) in figures {
        let r = conjmap::verify_bijection(&l, &m);
        let got = translation_vectors(&l, &m);
        let populations_ok = r.reflections > 0 && (r.translations > 0) == !vectors.is_empty();
        ok &= r.passed() && r.case == case && got == vectors && populations_ok;
        notes.push(format!(
            "{l}x{m} case {} reflect {} translate {} by {:?}",
            r.case.number(),
            r.reflections,
            r.translations,
            got
        ));
    }
    check(ok, notes.join("; "))
}

fn compare_with_oracle(l: &Weight, m: &Weight, nu_box: &[Weight]) -> bool {
    let o = oracle::decompose(l, m).expect("rank 3");
    let closed = decompose(l, m);
    let table: BTreeMap<Weight, u64> = closed.entries.iter().map(|e| (e.nu, e.mult)).collect();
    table == o && nu_box.iter().all(|n| mult(l, m, n) == o.get(n).copied().unwrap_or(0))
}

fn criterion_7() -> Outcome {
    let nu_box = box_weights(8);
    let pairs = box_pairs(8);
    let exhaustive_bad = pairs
        .par_iter()
        .filter(|(l, m)| !compare_with_oracle(l, m, &nu_box))
        .count();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sample: Vec<(Weight, Weight)> = (0..500)
        .map(|_| {
            let mut g = || w(rng.gen_range(0..=20), rng.gen_range(0..=20));
            (g(), g())
        })
        .collect();
    let sample_bad = sample
        .par_iter()
        .filter(|(l, m)| !compare_with_oracle(l, m, &[]))
        .count();
    check(
        exhaustive_bad == 0 && sample_bad == 0,
        format!(
            "{} exhaustive pairs x {} nu: {exhaustive_bad} mismatches; 500 random pairs: {sample_bad} mismatches",
            pairs.len(),
            nu_box.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let a = Weight::su4(1, 2, 2);
    let (b, c) = (Weight::su4(2, 1, 3), Weight::su4(3, 1, 2));
    let r1 = oracle::compare_conjugate(&a, &b).expect("rank 4");
    let r2 = oracle::compare_conjugate(&a, &c).expect("rank 4");
    let has8 = oracle::decompose(&a, &b).expect("rank 4").values().any(|&m| m == 8);
    let poly = oracle::su4_polytope_check().expect("rank 4");
    check(
        has8 && r1.max_mult == 8 && r2.max_mult <= 7 && r1.totals_equal() && r2.totals_equal() && poly.passed(),
        format!(
            "max {} vs {}, totals {}/{} and {}/{}, polytope vertices {} (5,0,1)/(1,0,5) {}/{} (2,0,2) {}",
            r1.max_mult,
            r2.max_mult,
            r1.total,
            r1.total_conj,
            r2.total,
            r2.total_conj,
            poly.vertices_mult_one,
            poly.mult_501,
            poly.mult_105,
            poly.mult_202
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let mut g = || w(rng.gen_range(0..=14), rng.gen_range(0..=14));
        let (l, m) = (g(), g());
        let diagram = polygon::layers(&l, &m);
        let table = decompose(&l, &m);
        let top = mult_max(&l, &m);
        let mut ok = diagram.layers.len() as u64 == top;
        for (k, layer) in diagram.layers.iter().enumerate() {
            let s = k as u64 + 1;
            let pts: Vec<Point> = table
                .entries
                .iter()
                .filter(|e| e.mult >= s)
                .map(|e| {
                    let (a, b) = e.nu.su3_pair();
                    [a, b]
                })
                .collect();
            ok &= canonical(&layer.vertices) == canonical(&convex_hull(&pts));
            if s < top {
                ok &= table.with_mult(s).all(|n| {
                    let (a, b) = n.su3_pair();
                    layer.on_boundary([a, b])
                });
            }
        }
        if !ok {
            bad.push(format!("{l}x{m}"));
        }
    }
    check(
        bad.is_empty(),
        format!("200 random pairs, {} failures {:?}", bad.len(), bad),
    )
}

fn criterion_10() -> Outcome {
    let f = pictographs::fundamentals(Kind::Oblade);
    let vecs: Vec<[i64; 9]> = f.iter().map(|x| x.pictograph.labels.as_array()).collect();
    let rank = pictographs::rank(&vecs);
    let relation_zero = pictographs::combine(&RELATION) == [0; 9];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = 0;
    for i in 0..200 {
        let mut g = |hi: u32| w(rng.gen_range(0..=hi), rng.gen_range(0..=hi));
        let (l, m) = (g(12), g(12));
        // Alternate constituents with arbitrary weights (mostly outside).
        let n = if i % 2 == 0 {
            let t = decompose(&l, &m);
            t.entries[rng.gen_range(0..t.entries.len())].nu
        } else {
            g(24)
        };
        let expected = mult(&l, &m, &n);
        let fiber = pictographs::enumerate(&l, &m, &n, Kind::BzTriangle);
        let mut ok = fiber.len() as u64 == expected;
        if let Some(first) = fiber.first() {
            let walked: Vec<_> = (0..expected as i64)
                .map(|k| pictographs::step_delta(first, k).ok())
                .collect();
            ok &= walked.iter().zip(&fiber).all(|(a, b)| a.as_ref() == Some(b));
            ok &= pictographs::step_delta(first, expected as i64).is_err();
            ok &= fiber.iter().all(|p| pictographs::external_weights(p) == (l, m, n));
        }
        bad += usize::from(!ok);
    }
    check(
        f.len() == 8 && rank == 7 && relation_zero && bad == 0,
        format!(
            "{} fundamentals, rank {rank}, relation zero {relation_zero}; 200 random triples, {bad} failures",
            f.len()
        ),
    )
}

fn criterion_11() -> Outcome {
    let full = cli::verify_sweep_levels(4, 5, cli::Mode::Theorem2);
    let sampled = cli::verify_sample_levels(4, 6, 7, 500, 11, cli::Mode::Theorem2);
    // The full level-7 sweep is cheap enough to report alongside.
    let all7 = cli::verify_sweep_levels(4, 7, cli::Mode::Theorem2);
    let list = |s: &cli::SweepSummary| {
        s.counterexamples
            .iter()
            .take(4)
            .map(|c| format!("{}x{}", c.lambda, c.mu))
            .collect::<Vec<_>>()
            .join(" ")
    };
    check(
        full.passed() && sampled.passed() && sampled.pairs >= 500,
        format!(
            "levels <= 5: {} pairs, {} failures [{}]; levels 6-7 sample: {} pairs, {} failures [{}]; \
             full levels <= 7: {} pairs, {} failures",
            full.pairs,
            full.failures,
            list(&full),
            sampled.pairs,
            sampled.failures,
            list(&sampled),
            all7.pairs,
            all7.failures
        ),
    )
}

/// Level-`k` fusion from a classical SU(N) table by affine Weyl reflection
/// of each `ν + ρ` into the fundamental alcove.
fn fuse(table: &BTreeMap<Weight, u64>, k: i64) -> BTreeMap<Vec<i64>, i64> {
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (nu, &c) in table {
        let mut x: Vec<i64> = nu.labels().iter().map(|&v| i64::from(v) + 1).collect();
        let r = x.len();
        let height = k + r as i64 + 1;
        let mut sign = 1;
        loop {
            let sum: i64 = x.iter().sum();
            if x.contains(&0) || sum == height {
                sign = 0;
                break;
            }
            if let Some(i) = x.iter().position(|&v| v < 0) {
                let v = x[i];
                x[i] = -v;
                if i > 0 {
                    x[i - 1] += v;
                }
                if i + 1 < r {
                    x[i + 1] += v;
                }
            } else if sum > height {
                let d = sum - height;
                x[0] -= d;
                x[r - 1] -= d;
            } else {
                break;
            }
            sign = -sign;
        }
        if sign != 0 {
            *out.entry(x.iter().map(|v| v - 1).collect()).or_default() += sign * c as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn fusion_multiset(l: &Weight, m: &Weight, k: i64) -> Vec<i64> {
    let mut v: Vec<i64> = fuse(&oracle::decompose(l, m).expect("rank 4"), k)
        .into_values()
        .collect();
    v.sort_unstable();
    v
}

/// Affine counterpart of criterion 11, reported for the record only.
fn affine_note() -> String {
    let mut parts = Vec::new();
    for k in 1..=8u32 {
        let ws: Vec<Weight> = (0..=k).flat_map(|j| oracle::weights_of_level(4, j)).collect();
        let pairs: Vec<(Weight, Weight)> = ws.iter().flat_map(|l| ws.iter().map(move |m| (*l, *m))).collect();
        let bad = pairs
            .par_iter()
            .filter(|(l, m)| fusion_multiset(l, m, k.into()) != fusion_multiset(l, &m.conjugate(), k.into()))
            .count();
        parts.push(format!("k={k}: {bad}/{}", pairs.len()));
    }
    format!("su(4)_k fusion multiset mismatches {}", parts.join(", "))
}

fn main() -> ExitCode {
    let second = Some(Duration::from_secs(1));
    let criteria: Vec<(u8, Box<dyn FnOnce() -> Outcome>)> = vec![
        (1, Box::new(move || timed(second, criterion_1))),
        (2, Box::new(move || timed(second, criterion_2))),
        (3, Box::new(move || timed(second, criterion_3))),
        (4, Box::new(|| timed(None, criterion_4))),
        (5, Box::new(|| timed(None, criterion_5))),
        (6, Box::new(|| timed(None, criterion_6))),
        (7, Box::new(|| timed(None, criterion_7))),
        (8, Box::new(|| timed(Some(Duration::from_secs(30)), criterion_8))),
        (9, Box::new(|| timed(None, criterion_9))),
        (10, Box::new(|| timed(None, criterion_10))),
        (11, Box::new(|| timed(None, criterion_11))),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let o = run();
        failed += usize::from(!o.ok);
        println!("{} criterion {n}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("note: {}", affine_note());
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
