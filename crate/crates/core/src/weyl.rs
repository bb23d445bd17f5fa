//! Affine Weyl group of type `A_{κ-1}^{(1)}` acting on `h*`.
//!
//! An element is stored as its `(κ+1)×(κ+1)` integer matrix in the basis
//! `α_0, …, α_{κ-1}, Λ_0`; the action is faithful, so matrix equality is
//! group equality.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{pairing_weight_coroot, CartanMatrix, RootVector, WeightVector};

/// Default cap on the length of elements whose reduced words are enumerated.
pub const DEFAULT_LENGTH_CAP: usize = 12;

/// A word `s_{i_1} s_{i_2} … s_{i_r}` recorded by its residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone)]
pub struct WeylElement {
    kappa: usize,
    action: Vec<i64>,
    word: OnceLock<Word>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.kappa == other.kappa && self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kappa.hash(state);
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(κ={}, {})", self.kappa, self.reduced_word())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.reduced_word().fmt(f)
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.reduced_word().serialize(s)
    }
}

impl WeylElement {
    pub fn identity(kappa: usize) -> Self {
        assert!(kappa >= 2, "kappa must be at least 2");
        let n = kappa + 1;
        let mut action = vec![0; n * n];
        for i in 0..n {
            action[i * n + i] = 1;
        }
        WeylElement {
            kappa,
            action,
            word: OnceLock::new(),
        }
    }

    pub fn simple_reflection(i: usize, kappa: usize) -> Result<Self> {
        let mut w = Self::identity(kappa);
        w.mul_simple_in_place(i)?;
        Ok(w)
    }

    /// The product `s_{i_1} ⋯ s_{i_r}`; the word need not be reduced.
    pub fn from_word(letters: &[usize], kappa: usize) -> Result<Self> {
        let mut w = Self::identity(kappa);
        for &i in letters {
            w.mul_simple_in_place(i)?;
        }
        Ok(w)
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// Matrix entries, row-major, basis `α_0..α_{κ-1}, Λ_0`.
    pub fn action(&self) -> &[i64] {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.kappa)
    }

    fn dim(&self) -> usize {
        self.kappa + 1
    }

    /// `w ← w s_i`: only columns change.
    fn mul_simple_in_place(&mut self, i: usize) -> Result<()> {
        if i >= self.kappa {
            return Err(Error::ResidueOutOfRange {
                residue: i,
                kappa: self.kappa,
            });
        }
        let n = self.dim();
        let cartan = CartanMatrix::new(self.kappa);
        let col: Vec<i64> = (0..n).map(|r| self.action[r * n + i]).collect();
        // s_i(α_j) = α_j - a_ij α_i, s_i(Λ_0) = Λ_0 - δ_i0 α_i.
        for j in 0..n {
            let coeff = if j < self.kappa {
                cartan.entry(i, j)
            } else if i == 0 {
                1
            } else {
                0
            };
            if coeff == 0 {
                continue;
            }
            for r in 0..n {
                self.action[r * n + j] -= coeff * col[r];
            }
        }
        self.word = OnceLock::new();
        Ok(())
    }

    /// `w s_i`.
    pub fn mul_simple(&self, i: usize) -> Result<Self> {
        let mut w = self.clone();
        w.mul_simple_in_place(i)?;
        Ok(w)
    }

    /// `s_i w`.
    pub fn simple_mul(&self, i: usize) -> Result<Self> {
        Ok(Self::simple_reflection(i, self.kappa)?.mul(self))
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.kappa, other.kappa, "kappa mismatch");
        let n = self.dim();
        let mut action = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.action[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    action[r * n + c] += a * other.action[k * n + c];
                }
            }
        }
        WeylElement {
            kappa: self.kappa,
            action,
            word: OnceLock::new(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut letters = self.reduced_word().0.clone();
        letters.reverse();
        let inv = Self::from_word(&letters, self.kappa).expect("letters in range");
        let _ = inv.word.set(Word(letters));
        inv
    }

    pub fn apply_to_root(&self, alpha: &RootVector) -> Result<RootVector> {
        if alpha.kappa() != self.kappa {
            return Err(Error::KappaMismatch(self.kappa, alpha.kappa()));
        }
        Ok(self.apply_unchecked(alpha.coeffs()))
    }

    fn apply_unchecked(&self, coeffs: &[i64]) -> RootVector {
        let n = self.dim();
        let out = (0..self.kappa)
            .map(|r| (0..self.kappa).map(|c| self.action[r * n + c] * coeffs[c]).sum())
            .collect();
        RootVector::from_coeffs(out)
    }

    /// `w(α_i) ∈ R_-`, read from column `i`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.dim();
        (0..self.kappa).any(|r| self.action[r * n + i] < 0)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.kappa).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `w^{-1}(α_i) ∈ R_-`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    /// Canonical reduced word: strip the smallest right descent until the
    /// identity is reached, then read the stripped letters backwards.
    pub fn reduced_word(&self) -> &Word {
        self.word.get_or_init(|| {
            let mut w = self.clone();
            let mut rev = Vec::new();
            while let Some(i) = (0..self.kappa).find(|&i| w.has_right_descent(i)) {
                w.mul_simple_in_place(i).expect("residue in range");
                rev.push(i);
            }
            debug_assert!(w.is_identity());
            rev.reverse();
            Word(rev)
        })
    }

    pub fn length(&self) -> usize {
        self.reduced_word().len()
    }

    /// `R(w) = {α_{i_1}, s_{i_1}α_{i_2}, …}` in reduced-word order.
    pub fn inversion_list(&self) -> Vec<RootVector> {
        let letters = self.reduced_word().letters();
        let mut out = Vec::with_capacity(letters.len());
        let mut prefix = WeylElement::identity(self.kappa);
        for &i in letters {
            out.push(prefix.apply_unchecked(RootVector::simple(i as i64, self.kappa).coeffs()));
            prefix.mul_simple_in_place(i).expect("residue in range");
        }
        out
    }

    pub fn inversion_set(&self) -> BTreeSet<RootVector> {
        self.inversion_list().into_iter().collect()
    }
}

/// Weak right Bruhat order: `v ⪯ w` iff `ℓ(v) + ℓ(v^{-1}w) = ℓ(w)`.
pub fn weak_bruhat_leq(v: &WeylElement, w: &WeylElement) -> bool {
    v.length() + v.inverse().mul(w).length() == w.length()
}

/// `[e, w]` under the weak right order, by descending through right descents.
pub fn bruhat_interval(w: &WeylElement) -> Vec<WeylElement> {
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let mut queue = VecDeque::from([w.clone()]);
    seen.insert(w.clone());
    while let Some(u) = queue.pop_front() {
        for i in u.right_descents() {
            let v = u.mul_simple(i).expect("residue in range");
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.length(), a.reduced_word()).cmp(&(b.length(), b.reduced_word())));
    out
}

/// All reduced words of `w`; errors if `ℓ(w)` exceeds `cap`.
pub fn reduced_words(w: &WeylElement, cap: usize) -> Result<Vec<Word>> {
    if w.length() > cap {
        return Err(Error::LengthCapExceeded {
            length: w.length(),
            cap,
        });
    }
    let mut memo = HashMap::new();
    let mut out = words_rec(w, &mut memo);
    out.sort();
    Ok(out)
}

fn words_rec(w: &WeylElement, memo: &mut HashMap<WeylElement, Vec<Word>>) -> Vec<Word> {
    if w.is_identity() {
        return vec![Word(Vec::new())];
    }
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for i in w.right_descents() {
        let shorter = w.mul_simple(i).expect("residue in range");
        for mut word in words_rec(&shorter, memo) {
            word.0.push(i);
            out.push(word);
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Whether `s_i s_j = s_j s_i` with `i ≠ j`.
pub fn letters_commute(i: usize, j: usize, kappa: usize) -> bool {
    i != j && CartanMatrix::new(kappa).entry(i, j) == 0
}

/// Closure of `word` under swaps of adjacent commuting letters.
pub fn commutation_class(word: &Word, kappa: usize) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([word.clone()]);
    let mut queue = VecDeque::from([word.clone()]);
    while let Some(u) = queue.pop_front() {
        for k in 0..u.len().saturating_sub(1) {
            if letters_commute(u.0[k], u.0[k + 1], kappa) {
                let mut v = u.clone();
                v.0.swap(k, k + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Every reduced word is reachable from any other by commutations alone.
pub fn is_fully_commutative(w: &WeylElement, cap: usize) -> Result<bool> {
    let all = reduced_words(w, cap)?;
    Ok(commutation_class(w.reduced_word(), w.kappa()).len() == all.len())
}

/// `⟨ζ, α^∨⟩ = -1` for every `α ∈ R(w)`.
pub fn is_pluscule(w: &WeylElement, zeta: &WeightVector) -> Result<bool> {
    for alpha in w.inversion_list() {
        if pairing_weight_coroot(zeta, &alpha)? != -1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨ζ, α^∨⟩ = 1` for every `α ∈ R(w^{-1})`.
pub fn is_minuscule(w: &WeylElement, zeta: &WeightVector) -> Result<bool> {
    for alpha in w.inverse().inversion_list() {
        if pairing_weight_coroot(zeta, &alpha)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All elements of length at most `max_len`, grouped by length.
pub fn elements_by_length(kappa: usize, max_len: usize) -> Vec<Vec<WeylElement>> {
    let mut layers = vec![vec![WeylElement::identity(kappa)]];
    let mut seen: HashSet<WeylElement> = layers[0].iter().cloned().collect();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for u in &layers[len - 1] {
            for i in 0..kappa {
                if u.has_right_descent(i) {
                    continue;
                }
                let v = u.mul_simple(i).expect("residue in range");
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        layers.push(next);
    }
    layers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{is_positive_real_root, pairing_root_coroot};

    fn w(letters: &[usize], k: usize) -> WeylElement {
        WeylElement::from_word(letters, k).unwrap()
    }

    #[test]
    fn coxeter_relations() {
        for k in 2..=6 {
            let e = WeylElement::identity(k);
            for i in 0..k {
                assert_eq!(w(&[i, i], k), e);
                let j = (i + 1) % k;
                if k >= 3 {
                    assert_eq!(w(&[i, j, i], k), w(&[j, i, j], k));
                } else {
                    // κ = 2 has no braid relation: s0 s1 has infinite order.
                    assert_ne!(w(&[i, j, i], k), w(&[j, i, j], k));
                }
                for j in 0..k {
                    if letters_commute(i, j, k) {
                        assert_eq!(w(&[i, j], k), w(&[j, i], k));
                    } else if i != j {
                        assert_ne!(w(&[i, j], k), w(&[j, i], k));
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_action() {
        let k = 5;
        for i in 0..k {
            let a = RootVector::simple(i as i64, k);
            let s = WeylElement::simple_reflection(i, k).unwrap();
            assert_eq!(s.apply_to_root(&a).unwrap(), -a.clone());
            assert_eq!(WeylElement::identity(k).apply_to_root(&a).unwrap(), a);
        }
        assert!(WeylElement::simple_reflection(5, 5).is_err());
        let s = WeylElement::simple_reflection(0, 3).unwrap();
        assert!(s.apply_to_root(&RootVector::simple(0, 4)).is_err());
    }

    #[test]
    fn action_preserves_norm() {
        let u = w(&[4, 2, 1, 3, 0, 2], 5);
        for i in 0..5 {
            for j in i + 1..i + 8 {
                let a = crate::roots::alpha_interval(i, j, 5).unwrap();
                let b = u.apply_to_root(&a).unwrap();
                assert_eq!(b.norm(), a.norm());
            }
        }
    }

    #[test]
    fn lengths_and_words() {
        assert_eq!(WeylElement::identity(4).length(), 0);
        for i in 0..4 {
            assert_eq!(WeylElement::simple_reflection(i, 4).unwrap().length(), 1);
        }
        let u = w(&[1, 2, 1, 2], 4);
        assert_eq!(u.length(), 2);
        assert_eq!(u, w(&[2, 1], 4));
        let u = w(&[4, 2, 1, 3, 0, 2], 5);
        assert_eq!(u.length(), 6);
        assert_eq!(w(&u.reduced_word().0, 5), u);
        assert_eq!(u.mul(&u.inverse()), WeylElement::identity(5));
        // κ = 2 words alternate and never shorten.
        assert_eq!(w(&[0, 1, 0, 1, 0], 2).length(), 5);
    }

    #[test]
    fn inversion_sets() {
        assert!(WeylElement::identity(3).inversion_set().is_empty());
        let s = WeylElement::simple_reflection(2, 3).unwrap();
        assert_eq!(s.inversion_list(), vec![RootVector::simple(2, 3)]);
        let u = w(&[4, 2, 1, 3, 0, 2], 5);
        let inv = u.inversion_set();
        assert_eq!(inv.len(), u.length());
        for a in &inv {
            assert!(is_positive_real_root(a));
            // R(w) = R_+ ∩ w R_-.
            let back = u.inverse().apply_to_root(a).unwrap();
            assert!(back.coeffs().iter().all(|&c| c <= 0));
        }
    }

    #[test]
    fn weak_order_and_intervals() {
        let k = 4;
        let e = WeylElement::identity(k);
        let u = w(&[0, 2, 1, 3], k);
        assert!(weak_bruhat_leq(&e, &u));
        assert!(weak_bruhat_leq(&u, &u));
        let iv = bruhat_interval(&WeylElement::simple_reflection(1, k).unwrap());
        assert_eq!(iv.len(), 2);
        let iv = bruhat_interval(&u);
        // Prefixes of all reduced words give the same set.
        let prefixes: HashSet<WeylElement> = reduced_words(&u, 12)
            .unwrap()
            .iter()
            .flat_map(|word| (0..=word.len()).map(|n| w(&word.0[..n], k)).collect::<Vec<_>>())
            .collect();
        assert_eq!(iv.iter().cloned().collect::<HashSet<_>>(), prefixes);
        for x in &iv {
            assert!(weak_bruhat_leq(x, &u));
            assert!(x.inversion_set().is_subset(&u.inversion_set()));
        }
    }

    // Weak order from length additivity agrees with chains of covers and with
    // inclusion of inversion sets on all elements of length ≤ 4.
    #[test]
    fn weak_order_three_ways() {
        for k in [2, 3, 4] {
            let all: Vec<WeylElement> = elements_by_length(k, 4).into_iter().flatten().collect();
            let index: HashMap<&WeylElement, usize> = all.iter().enumerate().map(|(i, x)| (x, i)).collect();
            let n = all.len();
            let mut reach = vec![vec![false; n]; n];
            for i in 0..n {
                reach[i][i] = true;
            }
            for (i, x) in all.iter().enumerate() {
                for s in 0..k {
                    let y = x.mul_simple(s).unwrap();
                    if y.length() == x.length() + 1 {
                        if let Some(&j) = index.get(&y) {
                            reach[i][j] = true;
                        }
                    }
                }
            }
            for m in 0..n {
                for i in 0..n {
                    if reach[i][m] {
                        for j in 0..n {
                            if reach[m][j] {
                                reach[i][j] = true;
                            }
                        }
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let leq = weak_bruhat_leq(&all[i], &all[j]);
                    assert_eq!(leq, reach[i][j]);
                    assert_eq!(leq, all[i].inversion_set().is_subset(&all[j].inversion_set()));
                }
            }
        }
    }

    #[test]
    fn reduced_word_enumeration() {
        let words = reduced_words(&w(&[0, 2], 4), 12).unwrap();
        assert_eq!(words, vec![Word(vec![0, 2]), Word(vec![2, 0])]);
        assert_eq!(reduced_words(&w(&[1], 4), 12).unwrap().len(), 1);
        let long = w(&[0, 1, 0, 1, 0], 2);
        assert!(matches!(reduced_words(&long, 4), Err(Error::LengthCapExceeded { .. })));
    }

    #[test]
    fn full_commutativity() {
        assert!(is_fully_commutative(&WeylElement::identity(3), 12).unwrap());
        assert!(is_fully_commutative(&w(&[1], 3), 12).unwrap());
        for k in 3..6 {
            for i in 0..k {
                let braid = w(&[i, (i + 1) % k, i], k);
                assert!(!is_fully_commutative(&braid, 12).unwrap());
            }
        }
    }

    #[test]
    fn pluscule_minuscule_basics() {
        let k = 4;
        let zeta = WeightVector::new(vec![1, 0, -1, 0]);
        let e = WeylElement::identity(k);
        assert!(is_pluscule(&e, &zeta).unwrap());
        assert!(is_minuscule(&e, &zeta).unwrap());
        let s0 = WeylElement::simple_reflection(0, k).unwrap();
        assert!(is_minuscule(&s0, &zeta).unwrap());
        assert!(!is_pluscule(&s0, &zeta).unwrap());
        let s2 = WeylElement::simple_reflection(2, k).unwrap();
        assert!(is_pluscule(&s2, &zeta).unwrap());
    }

    #[test]
    fn element_counts_by_length() {
        // Affine A1 has exactly two elements of each positive length.
        let layers = elements_by_length(2, 6);
        assert!(layers[1..].iter().all(|l| l.len() == 2));
        // Poincaré series (1+q)(1+q+q²)/((1-q)(1-q²)).
        let layers = elements_by_length(3, 3);
        assert_eq!(layers.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 3, 6, 9]);
    }

    #[test]
    fn json_is_reduced_word() {
        let u = w(&[1, 2, 1, 2], 4);
        assert_eq!(serde_json::to_string(&u).unwrap(), "[2,1]");
    }

    #[test]
    fn pairing_symmetry_under_action() {
        let u = w(&[3, 1, 0, 2], 4);
        let roots = crate::roots::positive_roots_up_to(4, 1);
        for a in &roots {
            for b in &roots {
                let ua = u.apply_to_root(a).unwrap();
                let ub = u.apply_to_root(b).unwrap();
                assert_eq!(pairing_root_coroot(a, b).unwrap(), pairing_root_coroot(&ua, &ub).unwrap());
            }
        }
    }
}
