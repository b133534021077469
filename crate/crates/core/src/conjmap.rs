//! A piecewise-linear bijection between the honeycombs of `λ ⊗ μ` and those
//! of `λ ⊗ μ̄` that preserves the multiplicity index.
//!
//! In the frame where `λ₁` is the largest label, a point `(ν, m)` is either
//! reflected by `t₁` or translated along `(1, −1)`, depending on two linear
//! thresholds that move inward with the layer `m`. Other inputs are brought
//! to that frame by swapping and/or conjugating, mapped, and brought back.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::honeycomb::{alpha_bounds_raw, wesslen_raw};
use crate::multiplicity::{decompose, mult_raw};
use crate::polygon::Normalization;
use crate::weights::{triality_ok, Weight};

type Pair = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Reflection,
    Translation,
}

/// The three positions of `λ₁` relative to `μ₁ + μ₂` (normalized frame).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// `λ₁ ≥ μ₁ + μ₂`
    Case1,
    /// `μ₁ + μ₂ − λ₂ ≤ λ₁ < μ₁ + μ₂`
    Case2,
    /// `λ₁ < μ₁ + μ₂ − λ₂`
    Case3,
}

impl Case {
    pub fn number(self) -> u8 {
        match self {
            Case::Case1 => 1,
            Case::Case2 => 2,
            Case::Case3 => 3,
        }
    }
}

fn classify_normalized(l: Pair, m: Pair) -> Case {
    if l.0 >= m.0 + m.1 {
        Case::Case1
    } else if m.0 + m.1 - l.1 <= l.0 {
        Case::Case2
    } else {
        Case::Case3
    }
}

/// Which regime applies to `λ ⊗ μ` after normalization.
#[track_caller]
pub fn classify(lambda: &Weight, mu: &Weight) -> Case {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    let (nl, nm) = Normalization::find(l, m).apply(l, m);
    classify_normalized(nl, nm)
}

/// Reflection `(ν₁, ν₂) ↦ (2λ₁+λ₂−ν₁−ν₂, ν₂)`.
#[track_caller]
pub fn t1(lambda: &Weight, nu: (i64, i64)) -> (i64, i64) {
    let l = lambda.su3_pair();
    t1_raw(l, nu)
}

fn t1_raw(l: Pair, n: Pair) -> Pair {
    (2 * l.0 + l.1 - n.0 - n.1, n.1)
}

/// The map in the normalized frame on `(ν, m)`.
fn map_normalized(l: Pair, m: Pair, n: Pair, idx: i64) -> (Pair, Regime) {
    let k = idx - 1;
    let translate = 2 * n.0 + n.1 > 5 * l.0 + 4 * l.1 - m.0 - 2 * m.1 - 3 * k || n.0 + n.1 > 2 * l.0 + l.1 - k;
    if translate {
        let d = m.1 - m.0;
        ((n.0 + d, n.1 - d), Regime::Translation)
    } else {
        (t1_raw(l, n), Regime::Reflection)
    }
}

/// Image of one honeycomb point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MappedPoint {
    pub nu: Weight,
    pub alpha: i64,
    pub m: u64,
    pub nu_image: Weight,
    pub alpha_image: i64,
    pub m_image: u64,
    pub regime: Regime,
    pub case: Case,
    pub normalization: Normalization,
}

fn swap(p: Pair) -> Pair {
    (p.1, p.0)
}

/// `(ν, m) ↦ (ν′, m)` in the caller's frame, with the regime used.
pub(crate) fn map_index_raw(l: Pair, m: Pair, n: Pair, idx: i64) -> (Pair, Regime, Case, Normalization) {
    let t = Normalization::find(l, m);
    let (nl, nm) = t.apply(l, m);
    let input = if t.conjugates() { swap(n) } else { n };
    let (out, regime) = map_normalized(nl, nm, input, idx);
    let out = match t {
        Normalization::Identity | Normalization::SwapConjugate => out,
        Normalization::Conjugate | Normalization::Swap => swap(out),
    };
    (out, regime, classify_normalized(nl, nm), t)
}

/// Maps a valid honeycomb `(ν, α)` of `λ ⊗ μ` to one of `λ ⊗ μ̄`.
pub fn map_point(lambda: &Weight, mu: &Weight, nu: &Weight, alpha: i64) -> Result<MappedPoint> {
    for w in [lambda, mu, nu] {
        w.require_rank(3)?;
    }
    let (l, m, n) = (lambda.su3_pair(), mu.su3_pair(), nu.su3_pair());
    if !triality_ok(l, m, n) {
        return Err(Error::NotInProduct {
            lambda: lambda.labels().to_vec(),
            mu: mu.labels().to_vec(),
            nu: nu.labels().to_vec(),
        });
    }
    let iv = alpha_bounds_raw(l, m, n);
    if !iv.contains(alpha) {
        return Err(Error::AlphaOutOfRange {
            alpha,
            min: iv.min,
            max: iv.max,
        });
    }
    let idx = alpha - iv.min + 1;
    let (out, regime, case, normalization) = map_index_raw(l, m, n, idx);
    let mbar = swap(m);
    if out.0 < 0 || out.1 < 0 || !wesslen_raw(l, mbar).contains_raw(out) {
        return Err(Error::MapInvariant(format!(
            "{nu} maps to ({},{}) outside the polygon of {lambda} x {}",
            out.0,
            out.1,
            mu.conjugate()
        )));
    }
    let target = alpha_bounds_raw(l, mbar, out);
    if (target.len() as i64) < idx {
        return Err(Error::MapInvariant(format!(
            "index {idx} at {nu} exceeds multiplicity {} at ({},{})",
            target.len(),
            out.0,
            out.1
        )));
    }
    Ok(MappedPoint {
        nu: *nu,
        alpha,
        m: idx as u64,
        nu_image: Weight::from_pair(out),
        alpha_image: target.min + idx - 1,
        m_image: idx as u64,
        regime,
        case,
        normalization,
    })
}

/// Outcome of mapping every honeycomb of `λ ⊗ μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub lambda: Weight,
    pub mu: Weight,
    pub case: Case,
    pub normalization: Normalization,
    pub points: u64,
    pub target_points: u64,
    pub reflections: u64,
    pub translations: u64,
    pub injective: bool,
    pub surjective: bool,
    pub index_preserved: bool,
    pub triality_ok: bool,
    pub images_in_bounds: bool,
    pub multisets_equal: bool,
    /// Constituents whose layers land on more than one `ν′`.
    pub split_weights: u64,
    /// First problem encountered, if any.
    pub failure: Option<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.surjective
            && self.index_preserved
            && self.triality_ok
            && self.images_in_bounds
            && self.multisets_equal
            && self.failure.is_none()
    }
}

/// Every valid `(ν, m)` of `λ ⊗ μ`.
fn points(l: &Weight, m: &Weight) -> Vec<(Pair, i64)> {
    decompose(l, m)
        .entries
        .iter()
        .flat_map(|e| {
            let n = e.nu.su3_pair();
            (1..=e.mult as i64).map(move |k| (n, k))
        })
        .collect()
}

/// Maps all points and checks that the result is a bijection onto the
/// honeycombs of `λ ⊗ μ̄`.
#[track_caller]
pub fn verify_bijection(lambda: &Weight, mu: &Weight) -> BijectionReport {
    let (l, m) = (lambda.su3_pair(), mu.su3_pair());
    let mbar_w = mu.conjugate();
    let mbar = swap(m);
    let source = points(lambda, mu);
    let target: BTreeSet<(Pair, i64)> = points(lambda, &mbar_w).into_iter().collect();
    let t = Normalization::find(l, m);
    let (nl, nm) = t.apply(l, m);

    let images: Vec<((Pair, i64), Pair, Regime)> = source
        .par_iter()
        .map(|&(n, k)| {
            let (out, regime, _, _) = map_index_raw(l, m, n, k);
            ((n, k), out, regime)
        })
        .collect();

    let mut failure = None;
    let mut seen: HashSet<(Pair, i64)> = HashSet::with_capacity(images.len());
    let mut injective = true;
    let mut index_preserved = true;
    let mut triality = true;
    let mut in_bounds = true;
    let mut reflections = 0;
    let mut translations = 0;
    let mut fanout: BTreeMap<Pair, BTreeSet<Pair>> = BTreeMap::new();
    let bounds = wesslen_raw(l, mbar);
    for &((n, k), out, regime) in &images {
        match regime {
            Regime::Reflection => reflections += 1,
            Regime::Translation => translations += 1,
        }
        fanout.entry(n).or_default().insert(out);
        if !triality_ok(l, mbar, out) {
            triality = false;
            failure.get_or_insert_with(|| format!("({},{}) has the wrong triality", out.0, out.1));
        }
        if out.0 < 0 || out.1 < 0 || !bounds.contains_raw(out) {
            in_bounds = false;
            failure.get_or_insert_with(|| format!("({},{}) is outside the outer bounds", out.0, out.1));
        }
        if mult_raw(l, mbar, out) < k {
            index_preserved = false;
            failure.get_or_insert_with(|| {
                format!(
                    "({},{}) m={k} lands on ({},{}) with smaller multiplicity",
                    n.0, n.1, out.0, out.1
                )
            });
        }
        if !seen.insert((out, k)) {
            injective = false;
            failure.get_or_insert_with(|| format!("collision at ({},{}) m={k}", out.0, out.1));
        }
    }
    let surjective = seen.len() == target.len() && seen.iter().all(|p| target.contains(p));
    if !surjective && failure.is_none() {
        failure = Some("image does not cover the target".into());
    }
    let multisets_equal = {
        let mut a: Vec<u64> = decompose(lambda, mu).multiset();
        let mut b: Vec<u64> = decompose(lambda, &mbar_w).multiset();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    };
    BijectionReport {
        lambda: *lambda,
        mu: *mu,
        case: classify_normalized(nl, nm),
        normalization: t,
        points: source.len() as u64,
        target_points: target.len() as u64,
        reflections,
        translations,
        injective,
        surjective,
        index_preserved,
        triality_ok: triality,
        images_in_bounds: in_bounds,
        multisets_equal,
        split_weights: fanout.values().filter(|s| s.len() > 1).count() as u64,
        failure,
    }
}
