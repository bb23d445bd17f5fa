//! Classical skew diagrams `[λ]/[μ]` realized inside a cylinder.

use std::collections::BTreeSet;

use serde_json::json;

use crate::diagrams::{CylindricDiagram, GeneralizedPartition, Ideal, Tableau};
use crate::error::{Error, Result};
use crate::hooks::{hk, leq_ordinary, ModifiedOrder};
use crate::lattice::CylCell;
use crate::report::CheckReport;
use crate::roots::RootVector;
use crate::weyl::WeylElement;

/// `[λ]/[μ]` on the cylinder `ω = (m, -ℓ)` with `ℓ = max(1, λ_1 - μ_m)`.
///
/// Classical contents are `b - a + offset` with `offset = m - μ_m`; they lie in
/// `[1, κ-1]`, so `s_0` never shows up.
#[derive(Clone, Debug)]
pub struct ClassicalSkew {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    diagram: CylindricDiagram,
    ideal: Ideal,
    offset: usize,
}

fn check_partition(parts: &[i64]) -> Result<()> {
    let bad = |reason: &str| Error::InvalidPartition {
        parts: parts.to_vec(),
        reason: reason.into(),
    };
    if parts.iter().any(|&p| p < 0) {
        return Err(bad("negative part"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad("parts must be non-increasing"));
    }
    Ok(())
}

impl ClassicalSkew {
    pub fn new(lambda: &[i64], mu: &[i64]) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidPartition {
                parts: vec![],
                reason: "λ needs at least one row".into(),
            });
        }
        check_partition(lambda)?;
        check_partition(mu)?;
        let m = lambda.len();
        if mu.len() > m {
            return Err(Error::InvalidPartition {
                parts: mu.to_vec(),
                reason: "μ has more rows than λ".into(),
            });
        }
        let mut mu_full = mu.to_vec();
        mu_full.resize(m, 0);
        if mu_full.iter().zip(lambda).any(|(a, b)| a > b) {
            return Err(Error::InvalidPartition {
                parts: mu.to_vec(),
                reason: "μ not contained in λ".into(),
            });
        }
        let mu_m = mu_full[m - 1];
        let ell = (lambda[0] - mu_m).max(1);
        let diagram = CylindricDiagram::from_parts(m as i64, ell, lambda)?;
        let ideal = diagram.ideal_from_inner(&GeneralizedPartition::new(mu_full.clone())?)?;
        let offset = (m as i64 - mu_m).rem_euclid(diagram.kappa() as i64) as usize;
        Ok(ClassicalSkew {
            lambda: lambda.to_vec(),
            mu: mu_full,
            diagram,
            ideal,
            offset,
        })
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn diagram(&self) -> &CylindricDiagram {
        &self.diagram
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn kappa(&self) -> usize {
        self.diagram.kappa()
    }

    /// Added to cylindric residues to get classical contents.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn size(&self) -> usize {
        self.ideal.len()
    }

    /// The cell in row `a`, column `b` of the planar picture.
    pub fn cell(&self, a: i64, b: i64) -> Result<CylCell> {
        let x = self.diagram.cell(a, b);
        if !self.ideal.contains(x) {
            return Err(Error::NotInDiagram(x.rep()));
        }
        Ok(x)
    }

    fn check_cell(&self, x: CylCell) -> Result<()> {
        if self.ideal.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInDiagram(x.rep()))
        }
    }

    /// `con(a,b) = b - a + m - μ_m`.
    pub fn content(&self, x: CylCell) -> Result<usize> {
        self.check_cell(x)?;
        Ok((self.diagram.content(x)? + self.offset) % self.kappa())
    }

    pub fn alpha(&self, x: CylCell) -> Result<RootVector> {
        Ok(RootVector::simple(self.content(x)? as i64, self.kappa()))
    }

    /// Hook of `x` in classical contents.
    pub fn hk(&self, x: CylCell) -> Result<RootVector> {
        self.check_cell(x)?;
        Ok(hk(&self.diagram, x)?.rotate(self.offset))
    }

    pub fn tableaux(&self) -> Vec<Tableau> {
        self.diagram.standard_tableaux(&self.ideal)
    }

    /// Some standard tableau, smallest cells first.
    pub fn tableau(&self) -> Tableau {
        self.diagram.tableau_with(&self.ideal, |_| 0)
    }

    /// Classical content word `con(T⁻¹(1)), …, con(T⁻¹(n))`.
    pub fn word(&self, t: &Tableau) -> Vec<usize> {
        t.word(&self.diagram)
            .into_iter()
            .map(|c| (c + self.offset) % self.kappa())
            .collect()
    }

    /// `w_{[λ]/[μ]} = s(T⁻¹(1)) ⋯ s(T⁻¹(n))`, whose inversion set is the set of hooks.
    pub fn element(&self) -> WeylElement {
        WeylElement::from_word(&self.word(&self.tableau()), self.kappa()).expect("contents are residues")
    }

    /// `s(T⁻¹(n)) ⋯ s(T⁻¹(k+1)) α(T⁻¹(k))` with `k = T(x)`.
    pub fn cohk(&self, t: &Tableau, x: CylCell) -> Result<RootVector> {
        self.check_cell(x)?;
        let k = t.label(x).ok_or(Error::NotInTableau(x.rep()))?;
        let word = self.word(t);
        let mut root = RootVector::simple(word[k - 1] as i64, self.kappa());
        for &i in &word[k..] {
            root.reflect(i);
        }
        Ok(root)
    }

    /// `⊴` of the ambient cylindric diagram, on classical contents.
    pub fn modified_order(&self) -> impl Fn(&RootVector, &RootVector) -> bool {
        let order = ModifiedOrder::new(&self.diagram);
        let back = self.kappa() - self.offset;
        move |a, b| order.leq(&a.rotate(back), &b.rotate(back))
    }
}

/// `[λ]/[μ]` as an ideal of a cylindric diagram.
pub fn embed(lambda: &[i64], mu: &[i64]) -> Result<(CylindricDiagram, Ideal)> {
    let s = ClassicalSkew::new(lambda, mu)?;
    Ok((s.diagram, s.ideal))
}

/// `w_λ = s(T⁻¹(n)) ⋯ s(T⁻¹(1))`.
pub fn grassmannian(lambda: &[i64]) -> Result<WeylElement> {
    let s = ClassicalSkew::new(lambda, &[])?;
    let mut word = s.word(&s.tableau());
    word.reverse();
    WeylElement::from_word(&word, s.kappa())
}

/// `cohk` for the straight shape `[λ]`.
pub fn cohk(lambda: &[i64], t: &Tableau, x: CylCell) -> Result<RootVector> {
    ClassicalSkew::new(lambda, &[])?.cohk(t, x)
}

/// `ι(α) = -w⁻¹α`.
pub fn iota(w: &WeylElement, alpha: &RootVector) -> Result<RootVector> {
    Ok(-w.inverse().apply_to_root(alpha)?)
}

/// The commuting triangle for a straight shape: `⊴ = ≤or` on the hooks,
/// `ι ∘ hk = cohk` for every tableau, and `ι` an order-reversing bijection
/// onto the inversion set of `w⁻¹`.
pub fn classical_check(lambda: &[i64]) -> Result<CheckReport> {
    let s = ClassicalSkew::new(lambda, &[])?;
    let params = json!({"lambda": lambda, "kappa": s.kappa(), "cells": s.size()});
    let w = s.element();
    let cells: Vec<CylCell> = s.ideal().cells().collect();
    let hooks: Vec<RootVector> = cells.iter().map(|&x| s.hk(x)).collect::<Result<_>>()?;
    let fail = |what: &str, detail: serde_json::Value| {
        Ok(CheckReport::failed("classical", params.clone(), json!({"claim": what, "detail": detail})))
    };

    let inversions = w.inversion_set();
    if hooks.iter().cloned().collect::<BTreeSet<_>>() != inversions || inversions.len() != cells.len() {
        return fail("hooks are the inversion set", json!(w.reduced_word()));
    }
    if w.reduced_word().letters().contains(&0) {
        return fail("no s_0", json!(w.reduced_word()));
    }
    if w.inverse().left_descents().len() > 1 {
        return fail("grassmannian", json!(w.inverse().reduced_word()));
    }

    let modified = s.modified_order();
    for (i, a) in hooks.iter().enumerate() {
        for (j, b) in hooks.iter().enumerate() {
            if modified(a, b) != leq_ordinary(a, b) {
                return fail("modified equals ordinary", json!([cells[i].to_string(), cells[j].to_string()]));
            }
        }
    }

    let images: Vec<RootVector> = hooks.iter().map(|h| iota(&w, h)).collect::<Result<_>>()?;
    let target = w.inverse().inversion_set();
    if images.iter().cloned().collect::<BTreeSet<_>>() != target || target.len() != images.len() {
        return fail("iota is a bijection", json!(images.iter().map(|r| r.coeffs().to_vec()).collect::<Vec<_>>()));
    }
    for (i, a) in hooks.iter().enumerate() {
        for (j, b) in hooks.iter().enumerate() {
            if modified(a, b) != leq_ordinary(&images[j], &images[i]) {
                return fail("iota reverses order", json!([cells[i].to_string(), cells[j].to_string()]));
            }
        }
    }

    let mut tableaux = 0;
    for t in s.tableaux() {
        tableaux += 1;
        for (&x, img) in cells.iter().zip(&images) {
            if s.cohk(&t, x)? != *img {
                return fail("iota after hk is cohk", json!({"cell": x.to_string(), "tableau": s.word(&t)}));
            }
        }
    }
    let mut params = params;
    params["tableaux"] = json!(tableaux);
    Ok(CheckReport::passed("classical", params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals_bruhat::word_of_ideal;

    fn partitions(n: i64, max: i64) -> Vec<Vec<i64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn single_cell() {
        let s = ClassicalSkew::new(&[1], &[0]).unwrap();
        assert_eq!(s.kappa(), 2);
        assert_eq!(s.size(), 1);
        let x = s.cell(1, 1).unwrap();
        assert_eq!(s.content(x).unwrap(), 1);
        assert_eq!(s.hk(x).unwrap(), RootVector::simple(1, 2));
        let w = grassmannian(&[1]).unwrap();
        assert_eq!(w.reduced_word().letters(), &[1]);
        let t = s.tableau();
        assert_eq!(cohk(&[1], &t, x).unwrap(), RootVector::simple(1, 2));
        let a = RootVector::simple(1, 2);
        assert_eq!(iota(&w, &a).unwrap(), a);
    }

    #[test]
    fn staircase_contents() {
        let s = ClassicalSkew::new(&[3, 2, 1], &[]).unwrap();
        assert_eq!(s.kappa(), 6);
        assert_eq!(s.offset(), 3);
        for x in s.ideal().cells() {
            let c = (x.b() - x.a() + 3) as usize;
            assert_eq!(s.content(x).unwrap(), c);
            assert!((1..6).contains(&c));
        }
        assert_eq!(s.content(s.cell(1, 1).unwrap()).unwrap(), 3);
        assert!(s.cell(2, 3).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ClassicalSkew::new(&[], &[]).is_err());
        assert!(ClassicalSkew::new(&[1, 2], &[]).is_err());
        assert!(ClassicalSkew::new(&[2, 1], &[3]).is_err());
        assert!(ClassicalSkew::new(&[2, 1], &[1, 1, 1]).is_err());
        assert!(ClassicalSkew::new(&[2, -1], &[]).is_err());
    }

    #[test]
    fn skew_hooks_are_inversions() {
        let s = ClassicalSkew::new(&[4, 3, 1], &[2, 1]).unwrap();
        assert_eq!(s.size(), 5);
        let w = s.element();
        assert_eq!(w.length(), 5);
        assert!(!w.reduced_word().letters().contains(&0));
        let hooks: BTreeSet<RootVector> = s.ideal().cells().map(|x| s.hk(x).unwrap()).collect();
        assert_eq!(hooks, w.inversion_set());
        // every tableau gives the same element
        for t in s.tableaux() {
            assert_eq!(WeylElement::from_word(&s.word(&t), s.kappa()).unwrap(), w);
        }
    }

    #[test]
    fn embedding_matches_word_of_ideal() {
        let (d, z) = embed(&[3, 1], &[1]).unwrap();
        let s = ClassicalSkew::new(&[3, 1], &[1]).unwrap();
        let cyl = word_of_ideal(&d, &z).unwrap().element;
        let shifted: Vec<usize> = cyl.reduced_word().letters().iter().map(|c| (c + s.offset()) % s.kappa()).collect();
        assert_eq!(WeylElement::from_word(&shifted, s.kappa()).unwrap(), s.element());
    }

    #[test]
    fn grassmannian_shape() {
        for n in 1..=6 {
            for lambda in partitions(n, n) {
                let w = grassmannian(&lambda).unwrap();
                assert_eq!(w.length(), n as usize, "{lambda:?}");
                assert_eq!(w.left_descents().len(), 1, "{lambda:?}");
                assert_eq!(w, ClassicalSkew::new(&lambda, &[]).unwrap().element().inverse());
            }
        }
    }

    #[test]
    fn staircase_triangle() {
        let s = ClassicalSkew::new(&[3, 2, 1], &[]).unwrap();
        let w = s.element();
        for t in s.tableaux().into_iter().take(4) {
            for x in s.ideal().cells() {
                assert_eq!(iota(&w, &s.hk(x).unwrap()).unwrap(), s.cohk(&t, x).unwrap());
            }
        }
    }

    #[test]
    fn triangle_up_to_seven_cells() {
        for n in 1..=7 {
            for lambda in partitions(n, n) {
                let r = classical_check(&lambda).unwrap();
                assert!(r.pass, "{}", r.to_json());
            }
        }
    }
}
