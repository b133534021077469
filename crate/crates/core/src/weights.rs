//! Dominant SU(N) highest weights in Dynkin labels, together with the SU(3)
//! specific arithmetic: triality, the pairings with the weights of the
//! fundamental representation, and the GL(3) partition relabeling.
//!
//! Everything is integer-only. Pairings with the fundamental weights are
//! rational with denominator 3 and are carried as [`Thirds`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest number of Dynkin labels a [`Weight`] can hold (SU(8)).
pub const MAX_LABELS: usize = 7;

/// A dominant highest weight of SU(N), `N = labels + 1`.
///
/// Value type: copying is cheap and the rank travels with the labels, so
/// SU(3) and SU(4) weights can share one API.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    len: u8,
    labels: [u32; MAX_LABELS],
}

impl Weight {
    /// Builds a weight from Dynkin labels. Fails on negative labels or an
    /// unsupported number of labels.
    pub fn new(labels: &[i64]) -> Result<Self> {
        if labels.is_empty() || labels.len() > MAX_LABELS {
            return Err(Error::UnsupportedRank {
                min: 2,
                max: MAX_LABELS + 1,
                found: labels.len() + 1,
            });
        }
        let mut out = [0u32; MAX_LABELS];
        for (slot, &l) in out.iter_mut().zip(labels) {
            if l < 0 {
                return Err(Error::NegativeLabel(l));
            }
            *slot = u32::try_from(l).map_err(|_| Error::NegativeLabel(l))?;
        }
        Ok(Weight {
            len: labels.len() as u8,
            labels: out,
        })
    }

    /// An SU(3) weight `(a, b)`.
    pub const fn su3(a: u32, b: u32) -> Self {
        let mut labels = [0u32; MAX_LABELS];
        labels[0] = a;
        labels[1] = b;
        Weight { len: 2, labels }
    }

    /// An SU(4) weight `(a, b, c)`.
    pub const fn su4(a: u32, b: u32, c: u32) -> Self {
        let mut labels = [0u32; MAX_LABELS];
        labels[0] = a;
        labels[1] = b;
        labels[2] = c;
        Weight { len: 3, labels }
    }

    /// The trivial representation of SU(`rank`).
    pub fn trivial(rank: usize) -> Result<Self> {
        Weight::new(&vec![0; rank.saturating_sub(1)])
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels[..self.len as usize]
    }

    /// N for SU(N).
    pub fn rank(&self) -> usize {
        self.len as usize + 1
    }

    /// Sum of the Dynkin labels.
    pub fn level(&self) -> u64 {
        self.labels().iter().map(|&l| u64::from(l)).sum()
    }

    /// The conjugate representation: the label list reversed.
    pub fn conjugate(&self) -> Self {
        let mut out = *self;
        out.labels[..self.len as usize].reverse();
        out
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// The two labels of an SU(3) weight as `i64`.
    ///
    /// # Panics
    /// If the weight is not an SU(3) weight.
    #[track_caller]
    pub fn su3_pair(&self) -> (i64, i64) {
        assert_eq!(self.rank(), 3, "expected an SU(3) weight, got {self}");
        (i64::from(self.labels[0]), i64::from(self.labels[1]))
    }

    pub(crate) fn require_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::Rank {
                expected: rank,
                found: self.rank(),
            })
        }
    }

    /// Non-panicking conversion from an SU(3) coordinate pair that is known
    /// to be dominant.
    pub(crate) fn from_pair(p: (i64, i64)) -> Self {
        debug_assert!(p.0 >= 0 && p.1 >= 0, "non-dominant pair {p:?}");
        Weight::su3(p.0 as u32, p.1 as u32)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.labels().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(d)?;
        Weight::new(&raw).map_err(serde::de::Error::custom)
    }
}

/// SU(3) triality `(λ₁ + 2λ₂) mod 3`.
pub fn triality(w: &Weight) -> Result<u8> {
    w.require_rank(3)?;
    let (a, b) = w.su3_pair();
    Ok(((a + 2 * b) % 3) as u8)
}

/// An exact rational with denominator 3, stored as its numerator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Thirds(pub i64);

impl Thirds {
    pub const fn from_int(n: i64) -> Self {
        Thirds(3 * n)
    }

    /// The numerator over 3.
    pub const fn numerator(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 3 == 0
    }

    pub const fn to_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 3)
        } else {
            None
        }
    }
}

impl std::ops::Add for Thirds {
    type Output = Thirds;
    fn add(self, o: Thirds) -> Thirds {
        Thirds(self.0 + o.0)
    }
}

impl std::ops::Sub for Thirds {
    type Output = Thirds;
    fn sub(self, o: Thirds) -> Thirds {
        Thirds(self.0 - o.0)
    }
}

impl std::ops::Neg for Thirds {
    type Output = Thirds;
    fn neg(self) -> Thirds {
        Thirds(-self.0)
    }
}

impl fmt::Display for Thirds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/3", self.0),
        }
    }
}

/// Numerators (over 3) of `ε₁·λ, ε₂·λ, ε₃·λ` for raw SU(3) labels.
pub(crate) const fn eps_numerators(a: i64, b: i64) -> [i64; 3] {
    [2 * a + b, b - a, -a - 2 * b]
}

/// `εᵢ·λ` for `i ∈ {1, 2, 3}`.
///
/// # Panics
/// If `i` is not 1, 2 or 3.
pub fn eps_dot(i: usize, w: &Weight) -> Result<Thirds> {
    assert!((1..=3).contains(&i), "eps index must be 1, 2 or 3, got {i}");
    Ok(EpsWeight::of(w)?.get(i))
}

/// The three pairings of an SU(3) weight with `ε₁, ε₂, ε₃`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EpsWeight {
    thirds: [i64; 3],
}

impl EpsWeight {
    pub fn of(w: &Weight) -> Result<Self> {
        w.require_rank(3)?;
        let (a, b) = w.su3_pair();
        Ok(EpsWeight {
            thirds: eps_numerators(a, b),
        })
    }

    /// `εᵢ·λ`, one-based like the notation.
    pub fn get(&self, i: usize) -> Thirds {
        Thirds(self.thirds[i - 1])
    }

    pub fn numerators(&self) -> [i64; 3] {
        self.thirds
    }
}

/// A GL(3) highest weight written as a weakly decreasing triple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct GlPartition([i64; 3]);

impl GlPartition {
    pub fn new(parts: [i64; 3]) -> Result<Self> {
        if parts[0] >= parts[1] && parts[1] >= parts[2] {
            Ok(GlPartition(parts))
        } else {
            Err(Error::NotDecreasing(parts))
        }
    }

    pub fn parts(&self) -> [i64; 3] {
        self.0
    }

    /// `κ₁ + 2κ₂ + 3κ₃` written on Dynkin-style components, i.e. the U(1)
    /// charge of the partition `{κ₁+κ₂+κ₃, κ₂+κ₃, κ₃}`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl<'de> Deserialize<'de> for GlPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = <[i64; 3]>::deserialize(d)?;
        GlPartition::new(raw).map_err(serde::de::Error::custom)
    }
}

/// `{λ₁+λ₂+λ₃, λ₂+λ₃, λ₃}`; with `λ₃ = 0` this is the SU(3) embedding.
pub fn to_gl3(w: &Weight, lambda3: i64) -> Result<GlPartition> {
    w.require_rank(3)?;
    let (a, b) = w.su3_pair();
    GlPartition::new([a + b + lambda3, b + lambda3, lambda3])
}

/// The dual partition `ν* = {−ν₃, −ν₂−ν₃, −ν₁−ν₂−ν₃}` placed on the bottom
/// of a honeycomb. Distinct from [`Weight::conjugate`].
pub fn gl_dual(w: &Weight, nu3: i64) -> Result<GlPartition> {
    w.require_rank(3)?;
    let (a, b) = w.su3_pair();
    GlPartition::new([-nu3, -b - nu3, -a - b - nu3])
}

/// Numerator of `ν₃` before the division by 3.
pub(crate) const fn charge_defect(l: (i64, i64), m: (i64, i64), n: (i64, i64)) -> i64 {
    l.0 + 2 * l.1 + m.0 + 2 * m.1 - n.0 - 2 * n.1
}

/// `ν₃ = ⅓(λ₁+2λ₂+μ₁+2μ₂−ν₁−2ν₂)`, the third GL(3) component fixed by
/// conservation of the U(1) charge.
pub fn nu3(lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<i64> {
    for w in [lambda, mu, nu] {
        w.require_rank(3)?;
    }
    let d = charge_defect(lambda.su3_pair(), mu.su3_pair(), nu.su3_pair());
    if d.rem_euclid(3) != 0 {
        return Err(Error::NotInProduct {
            lambda: lambda.labels().to_vec(),
            mu: mu.labels().to_vec(),
            nu: nu.labels().to_vec(),
        });
    }
    Ok(d / 3)
}

/// True when `τ(λ) + τ(μ) − τ(ν) ≡ 0 (mod 3)`.
pub(crate) const fn triality_ok(l: (i64, i64), m: (i64, i64), n: (i64, i64)) -> bool {
    charge_defect(l, m, n).rem_euclid(3) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triality_of_fundamentals() {
        assert_eq!(triality(&Weight::su3(1, 0)).unwrap(), 1);
        assert_eq!(triality(&Weight::su3(0, 1)).unwrap(), 2);
        assert_eq!(triality(&Weight::su3(0, 0)).unwrap(), 0);
        assert!(matches!(
            triality(&Weight::su4(1, 0, 0)),
            Err(Error::Rank { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Weight::su3(9, 5).conjugate(), Weight::su3(5, 9));
        assert_eq!(Weight::su3(0, 0).conjugate(), Weight::su3(0, 0));
        assert_eq!(Weight::su4(1, 2, 3).conjugate(), Weight::su4(3, 2, 1));
    }

    #[test]
    fn eps_pairings() {
        assert_eq!(eps_dot(1, &Weight::su3(3, 0)).unwrap(), Thirds::from_int(2));
        assert_eq!(eps_dot(3, &Weight::su3(0, 3)).unwrap(), Thirds::from_int(-2));
        let w = Weight::su3(21, 6);
        let sum = (1..=3).map(|i| eps_dot(i, &w).unwrap()).fold(Thirds(0), |a, b| a + b);
        assert_eq!(sum, Thirds(0));
        assert_eq!(eps_dot(2, &Weight::su3(1, 0)).unwrap().to_string(), "-1/3");
    }

    #[test]
    fn gl3_relabeling() {
        assert_eq!(to_gl3(&Weight::su3(21, 6), 0).unwrap().parts(), [27, 6, 0]);
        assert_eq!(to_gl3(&Weight::su3(0, 0), 0).unwrap().parts(), [0, 0, 0]);
        assert_eq!(gl_dual(&Weight::su3(12, 8), 18).unwrap().parts(), [-18, -26, -38]);
        assert!(GlPartition::new([0, 1, 0]).is_err());
    }

    #[test]
    fn nu3_values() {
        let (l, m) = (Weight::su3(21, 6), Weight::su3(17, 16));
        assert_eq!(nu3(&l, &m, &Weight::su3(12, 8)).unwrap(), 18);
        assert_eq!(
            nu3(&Weight::su3(1, 0), &Weight::su3(0, 1), &Weight::su3(1, 1)).unwrap(),
            0
        );
        // 3 x 3 = 6 + 3bar: both constituents are reached with ν₃ = 0.
        assert_eq!(
            nu3(&Weight::su3(1, 0), &Weight::su3(1, 0), &Weight::su3(0, 1)).unwrap(),
            0
        );
        assert_eq!(
            nu3(&Weight::su3(1, 0), &Weight::su3(1, 0), &Weight::su3(2, 0)).unwrap(),
            0
        );
        assert!(matches!(
            nu3(&Weight::su3(1, 0), &Weight::su3(1, 0), &Weight::su3(1, 0)),
            Err(Error::NotInProduct { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let w = Weight::su3(21, 6);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[21,6]");
        let back: Weight = serde_json::from_str("[21,6]").unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Weight>("[1,-2]").is_err());
        assert!(serde_json::from_str::<Weight>("[]").is_err());
        let p = to_gl3(&w, 0).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[27,6,0]");
    }

    #[test]
    fn rejects_bad_labels() {
        assert_eq!(Weight::new(&[1, -1]), Err(Error::NegativeLabel(-1)));
        assert!(Weight::new(&[]).is_err());
        assert_eq!(Weight::new(&[3, 4]).unwrap().rank(), 3);
    }
}
