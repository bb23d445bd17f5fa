//! Root lattice of type `A_{κ-1}^{(1)}`.
//!
//! A [`RootVector`] holds the coefficients `c_i` of `Σ c_i α_i`; the same
//! coefficients describe the coroot `Σ c_i α_i^∨`. Weights are kept only by
//! their fundamental-weight coefficients because every pairing we need is
//! against coroots.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::CylCell;

/// Element of the root lattice `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coeffs: Vec<i64>,
}

impl RootVector {
    pub fn zero(kappa: usize) -> Self {
        RootVector {
            coeffs: vec![0; kappa],
        }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(coeffs.len() >= 2, "kappa must be at least 2");
        RootVector { coeffs }
    }

    /// The simple root `α_i`, with `i` read modulo `κ`.
    pub fn simple(i: i64, kappa: usize) -> Self {
        let mut v = Self::zero(kappa);
        v.coeffs[residue(i, kappa)] = 1;
        v
    }

    /// The null root `δ = α_0 + … + α_{κ-1}`.
    pub fn delta(kappa: usize) -> Self {
        RootVector {
            coeffs: vec![1; kappa],
        }
    }

    pub fn kappa(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Membership in `Q_+`.
    pub fn is_non_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// `(α|α) = ⟨α, α^∨⟩`.
    pub fn norm(&self) -> i64 {
        CartanMatrix::new(self.kappa()).form(&self.coeffs, &self.coeffs)
    }

    /// `s_i(α) = α - ⟨α, α_i^∨⟩ α_i`, in place.
    pub fn reflect(&mut self, i: usize) {
        let k = self.kappa();
        let pair = 2 * self.coeffs[i] - self.coeffs[(i + k - 1) % k] - self.coeffs[(i + 1) % k];
        self.coeffs[i] -= pair;
    }

    /// Rotate indices: coefficient of `α_i` moves to `α_{i+shift}`.
    pub fn rotate(&self, shift: usize) -> RootVector {
        let k = self.kappa();
        let mut out = vec![0; k];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i + shift) % k] = c;
        }
        RootVector { coeffs: out }
    }

    fn check_kappa(&self, other: &RootVector) -> Result<()> {
        if self.kappa() != other.kappa() {
            return Err(Error::KappaMismatch(self.kappa(), other.kappa()));
        }
        Ok(())
    }
}

pub(crate) fn residue(i: i64, kappa: usize) -> usize {
    i.rem_euclid(kappa as i64) as usize
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.coeffs.iter().copied().min().unwrap_or(0).max(0);
        let mut terms = Vec::new();
        if n > 0 {
            terms.push(if n == 1 { "δ".to_string() } else { format!("{n}δ") });
        }
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c - n {
                0 => {}
                1 => terms.push(format!("α{i}")),
                c => terms.push(format!("{c}α{i}")),
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RootVectorJson {
    kappa: usize,
    coeffs: Vec<i64>,
}

impl Serialize for RootVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootVectorJson {
            kappa: self.kappa(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RootVectorJson::deserialize(d)?;
        if raw.kappa < 2 || raw.coeffs.len() != raw.kappa {
            return Err(serde::de::Error::custom("coeffs must have length kappa >= 2"));
        }
        Ok(RootVector { coeffs: raw.coeffs })
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(mut self, rhs: RootVector) -> RootVector {
        self += &rhs;
        self
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(mut self, rhs: RootVector) -> RootVector {
        self -= &rhs;
        self
    }
}

impl AddAssign<&RootVector> for RootVector {
    fn add_assign(&mut self, rhs: &RootVector) {
        assert_eq!(self.kappa(), rhs.kappa(), "kappa mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&RootVector> for RootVector {
    fn sub_assign(&mut self, rhs: &RootVector) {
        assert_eq!(self.kappa(), rhs.kappa(), "kappa mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(mut self) -> RootVector {
        for c in &mut self.coeffs {
            *c = -*c;
        }
        self
    }
}

impl Mul<&RootVector> for i64 {
    type Output = RootVector;
    fn mul(self, rhs: &RootVector) -> RootVector {
        RootVector {
            coeffs: rhs.coeffs.iter().map(|c| c * self).collect(),
        }
    }
}

/// Generalized Cartan matrix of `A_{κ-1}^{(1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    kappa: usize,
}

impl CartanMatrix {
    pub fn new(kappa: usize) -> Self {
        assert!(kappa >= 2, "kappa must be at least 2");
        CartanMatrix { kappa }
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// `a_ij = ⟨α_j, α_i^∨⟩`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        let k = self.kappa;
        if i == j {
            2
        } else if k == 2 {
            -2
        } else if (i + 1) % k == j || (j + 1) % k == i {
            -1
        } else {
            0
        }
    }

    /// `Σ_{i,j} x_j y_i a_ij`.
    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let k = self.kappa;
        let mut acc = 0;
        for i in 0..k {
            if y[i] == 0 {
                continue;
            }
            for j in 0..k {
                acc += y[i] * x[j] * self.entry(i, j);
            }
        }
        acc
    }
}

/// `⟨α, β^∨⟩`.
pub fn pairing_root_coroot(alpha: &RootVector, beta: &RootVector) -> Result<i64> {
    alpha.check_kappa(beta)?;
    Ok(CartanMatrix::new(alpha.kappa()).form(&alpha.coeffs, &beta.coeffs))
}

/// Integral weight `Σ a_i Λ_i`, stored by fundamental-weight coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    fund_coeffs: Vec<i64>,
}

impl WeightVector {
    pub fn new(fund_coeffs: Vec<i64>) -> Self {
        assert!(fund_coeffs.len() >= 2, "kappa must be at least 2");
        WeightVector { fund_coeffs }
    }

    /// The fundamental weight `Λ_i`.
    pub fn fundamental(i: usize, kappa: usize) -> Self {
        let mut v = vec![0; kappa];
        v[i % kappa] = 1;
        WeightVector { fund_coeffs: v }
    }

    pub fn kappa(&self) -> usize {
        self.fund_coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.fund_coeffs
    }
}

/// `⟨ζ, β^∨⟩ = Σ a_i c_i` from `⟨Λ_i, α_j^∨⟩ = δ_ij`.
pub fn pairing_weight_coroot(w: &WeightVector, beta: &RootVector) -> Result<i64> {
    if w.kappa() != beta.kappa() {
        return Err(Error::KappaMismatch(w.kappa(), beta.kappa()));
    }
    Ok(w.fund_coeffs.iter().zip(&beta.coeffs).map(|(a, c)| a * c).sum())
}

/// Positive real roots are exactly the non-zero elements of `Q_+` of norm 2.
pub fn is_positive_real_root(alpha: &RootVector) -> bool {
    alpha.is_non_negative() && !alpha.is_zero() && alpha.norm() == 2
}

/// Real roots (positive or negative).
pub fn is_real_root(alpha: &RootVector) -> bool {
    is_positive_real_root(alpha) || is_positive_real_root(&-alpha.clone())
}

/// `α_{ij} = Σ_{i ≤ k < j} α_{k mod κ}`.
pub fn alpha_interval(i: i64, j: i64, kappa: usize) -> Result<RootVector> {
    if i >= j {
        return Err(Error::EmptyInterval { i, j });
    }
    let mut v = RootVector::zero(kappa);
    for k in i..j {
        v.coeffs[residue(k, kappa)] += 1;
    }
    Ok(v)
}

/// `N(α) = max{k : α - kδ ∈ Q_+}`.
pub fn null_multiplicity(alpha: &RootVector) -> Result<i64> {
    if !alpha.is_non_negative() {
        return Err(Error::NotNonNegative(alpha.coeffs.clone()));
    }
    Ok(alpha.coeffs.iter().copied().min().unwrap_or(0))
}

/// `Supp(α) = {b_i : c_i > 0}` for a bottom set indexed by residue.
pub fn support(alpha: &RootVector, bottom: &[CylCell]) -> Result<Vec<CylCell>> {
    if bottom.len() != alpha.kappa() {
        return Err(Error::KappaMismatch(alpha.kappa(), bottom.len()));
    }
    Ok(alpha
        .coeffs
        .iter()
        .zip(bottom)
        .filter(|(&c, _)| c > 0)
        .map(|(_, &b)| b)
        .collect())
}

/// All positive real roots with null multiplicity at most `max_null`, as
/// `α_{ij}` with `0 ≤ i < κ` and `j - i ∉ κZ`.
pub fn positive_roots_up_to(kappa: usize, max_null: i64) -> Vec<RootVector> {
    let k = kappa as i64;
    let mut out = Vec::new();
    for i in 0..k {
        for len in 1..(max_null + 1) * k {
            if len % k != 0 {
                out.push(alpha_interval(i, i + len, kappa).expect("len >= 1"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(c: &[i64]) -> RootVector {
        RootVector::from_coeffs(c.to_vec())
    }

    #[test]
    fn cartan_entries() {
        let a = CartanMatrix::new(2);
        assert_eq!((a.entry(0, 0), a.entry(0, 1), a.entry(1, 0)), (2, -2, -2));
        for k in 3..7 {
            let a = CartanMatrix::new(k);
            for i in 0..k {
                assert_eq!((0..k).map(|j| a.entry(i, j)).sum::<i64>(), 0);
                for j in 0..k {
                    assert_eq!(a.entry(i, j), a.entry(j, i));
                }
            }
        }
        assert_eq!(CartanMatrix::new(5).entry(0, 4), -1);
        assert_eq!(CartanMatrix::new(5).entry(0, 2), 0);
    }

    #[test]
    fn pairing_examples() {
        for k in 2..6 {
            for i in 0..k {
                let a = RootVector::simple(i as i64, k);
                assert_eq!(pairing_root_coroot(&a, &a).unwrap(), 2);
                assert_eq!(pairing_root_coroot(&RootVector::delta(k), &a).unwrap(), 0);
            }
        }
        // ⟨α_{ij}, α_{kl}^∨⟩ with i<k<l<j and j-i ≤ κ-1 vanishes.
        let outer = alpha_interval(0, 4, 5).unwrap();
        let inner = alpha_interval(1, 3, 5).unwrap();
        assert_eq!(pairing_root_coroot(&outer, &inner).unwrap(), 0);
        assert!(pairing_root_coroot(&RootVector::zero(3), &RootVector::zero(4)).is_err());
    }

    #[test]
    fn weight_pairing() {
        let l0 = WeightVector::fundamental(0, 4);
        assert_eq!(pairing_weight_coroot(&l0, &RootVector::simple(0, 4)).unwrap(), 1);
        assert_eq!(pairing_weight_coroot(&l0, &RootVector::simple(1, 4)).unwrap(), 0);
        let w = WeightVector::new(vec![1, 0, -1, 0]);
        assert_eq!(pairing_weight_coroot(&w, &RootVector::delta(4)).unwrap(), 0);
        assert!(pairing_weight_coroot(&w, &RootVector::delta(3)).is_err());
    }

    #[test]
    fn real_root_examples() {
        assert!(is_positive_real_root(&RootVector::simple(2, 9)));
        assert!(!is_positive_real_root(&RootVector::delta(9)));
        let x = &RootVector::delta(9) + &rv(&[1, 1, 0, 0, 0, 0, 1, 1, 1]);
        assert!(is_positive_real_root(&x));
        assert_eq!(alpha_interval(-12, 2, 9).unwrap(), x);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(alpha_interval(0, 1, 4).unwrap(), RootVector::simple(0, 4));
        assert_eq!(alpha_interval(0, 4, 4).unwrap(), RootVector::delta(4));
        assert!(alpha_interval(2, 2, 4).is_err());
    }

    #[test]
    fn null_multiplicity_examples() {
        assert_eq!(null_multiplicity(&RootVector::simple(0, 4)).unwrap(), 0);
        let x = &RootVector::delta(4) + &RootVector::simple(3, 4);
        assert_eq!(x.coeffs(), &[1, 1, 1, 2]);
        assert_eq!(null_multiplicity(&x).unwrap(), 1);
        assert!(null_multiplicity(&rv(&[1, -1, 0])).is_err());
    }

    #[test]
    fn reflect_matches_pairing() {
        for k in 2..6 {
            for i in 0..k {
                let mut a = RootVector::simple(i as i64, k);
                a.reflect(i);
                assert_eq!(a, -RootVector::simple(i as i64, k));
            }
        }
        let mut x = rv(&[1, 2, 0, 1]);
        let before = x.clone();
        x.reflect(1);
        let p = pairing_root_coroot(&before, &RootVector::simple(1, 4)).unwrap();
        assert_eq!(x, &before - &(p * &RootVector::simple(1, 4)));
    }

    #[test]
    fn display_uses_delta() {
        let x = alpha_interval(-12, 2, 9).unwrap();
        assert_eq!(x.to_string(), "δ+α0+α1+α6+α7+α8");
        assert_eq!(RootVector::zero(3).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = RootVector::simple(1, 3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"kappa":3,"coeffs":[0,1,0]}"#);
        let back: RootVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<RootVector>(r#"{"kappa":3,"coeffs":[0,1]}"#).is_err());
    }

    // Every bounded element of Q+ is a positive real root iff it is some
    // α_ij with j - i ∉ κZ (enumerated directly).
    #[test]
    fn norm_test_matches_interval_description() {
        for k in 2..=5usize {
            let oracle: std::collections::HashSet<RootVector> = (0..k as i64)
                .flat_map(|i| (1..4 * k as i64).map(move |len| (i, len)))
                .filter(|(_, len)| len % k as i64 != 0)
                .map(|(i, len)| alpha_interval(i, i + len, k).unwrap())
                .filter(|a| a.coeffs().iter().all(|&c| c <= 3))
                .collect();
            let total = 4usize.pow(k as u32);
            for code in 0..total {
                let mut c = vec![0; k];
                let mut n = code;
                for slot in c.iter_mut() {
                    *slot = (n % 4) as i64;
                    n /= 4;
                }
                let a = rv(&c);
                assert_eq!(is_positive_real_root(&a), oracle.contains(&a), "{a:?}");
            }
        }
    }

    #[test]
    fn delta_shifts_preserve_reality() {
        for k in 2..=5 {
            for a in positive_roots_up_to(k, 2) {
                for s in -3..=3i64 {
                    let shifted = &a + &(s * &RootVector::delta(k));
                    assert!(is_real_root(&shifted));
                }
            }
        }
    }

    #[test]
    fn pairing_two_iff_congruent_mod_delta() {
        for k in 2..=5 {
            let mut reals = positive_roots_up_to(k, 2);
            reals.extend(reals.clone().into_iter().map(|a| -a));
            let reals: Vec<_> = reals
                .into_iter()
                .filter(|a| a.coeffs().iter().all(|c| c.abs() <= 3))
                .collect();
            for a in &reals {
                for b in &reals {
                    let diff = a - b;
                    let congruent = diff.coeffs().iter().all(|&c| c == diff.coeff(0));
                    assert_eq!(pairing_root_coroot(a, b).unwrap() == 2, congruent);
                }
            }
        }
    }
}
