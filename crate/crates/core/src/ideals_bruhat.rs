//! Finite ideals of a cylindric diagram against the weak order on `W`.

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::diagrams::{CylindricDiagram, Ideal, Tableau};
use crate::error::{Error, Result};
use crate::hooks::{hk, hook_values, predominant_weight, ModifiedOrder};
use crate::lattice::CylCell;
use crate::report::CheckReport;
use crate::roots::{pairing_weight_coroot, RootVector, WeightVector};
use crate::weyl::{elements_by_length, is_fully_commutative, is_pluscule, reduced_words, weak_bruhat_leq, WeylElement, Word};

/// An ideal with its Weyl group element `w_ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWord {
    pub ideal: Ideal,
    pub element: WeylElement,
    /// Content word of the lowest-first linear extension.
    pub word: Word,
}

/// `w_ζ = s(T⁻¹(1)) ⋯ s(T⁻¹(n))`, built from two different linear
/// extensions that must agree.
pub fn word_of_ideal(d: &CylindricDiagram, z: &Ideal) -> Result<IdealWord> {
    let low = d.tableau_with(z, |_| 0);
    let high = d.tableau_with(z, |ready| ready.len() - 1);
    let word = Word(low.word(d));
    let element = WeylElement::from_word(word.letters(), d.kappa())?;
    let other = WeylElement::from_word(&high.word(d), d.kappa())?;
    if element != other {
        return Err(Error::TableauDependence(z.to_string()));
    }
    Ok(IdealWord {
        ideal: z.clone(),
        element,
        word,
    })
}

/// `w_{Y,T}[n]` for a tableau prefix.
pub fn prefix_element(d: &CylindricDiagram, t: &Tableau) -> WeylElement {
    WeylElement::from_word(&t.word(d), d.kappa()).expect("contents are residues")
}

fn cells_json(z: &Ideal) -> Value {
    json!(z.cells().map(|x| [x.a(), x.b()]).collect::<Vec<_>>())
}

fn diagram_params(d: &CylindricDiagram) -> Value {
    json!({"omega": [d.period().m(), -d.period().ell()], "lambda": d.lambda().parts()})
}

/// `ℓ(w_ζ) = |ζ|` and `w_ζ` fully commutative for every ideal up to `n_max` cells.
pub fn ideal_words_check(d: &CylindricDiagram, n_max: usize) -> Result<CheckReport> {
    let mut params = diagram_params(d);
    params["n_max"] = json!(n_max);
    let mut checked = 0;
    for z in d.ideals_up_to(n_max).into_iter().flatten() {
        let iw = word_of_ideal(d, &z)?;
        checked += 1;
        let fc = is_fully_commutative(&iw.element, n_max.max(1))?;
        if iw.element.length() != z.len() || !fc {
            return Ok(CheckReport::failed(
                "ideal-words",
                params,
                json!({"ideal": cells_json(&z), "word": iw.word, "length": iw.element.length(), "fully_commutative": fc}),
            ));
        }
    }
    params["ideals"] = json!(checked);
    Ok(CheckReport::passed("ideal-words", params))
}

/// `Φ(ζ) = w_ζ` is injective, its image of ideals up to `n_max` cells is
/// exactly the pluscule elements of that length, and covers match both ways.
pub fn phi_iso_check(d: &CylindricDiagram, n_max: usize) -> Result<CheckReport> {
    let mut params = diagram_params(d);
    params["n_max"] = json!(n_max);
    let k = d.kappa();
    let layers = d.ideals_up_to(n_max);
    let mut image: HashMap<WeylElement, Ideal> = HashMap::new();
    for z in layers.iter().flatten() {
        let w = word_of_ideal(d, z)?.element;
        if w.length() != z.len() {
            return Ok(CheckReport::failed("phi-iso", params, json!({"not_reduced": cells_json(z)})));
        }
        if let Some(prev) = image.insert(w, z.clone()) {
            return Ok(CheckReport::failed(
                "phi-iso",
                params,
                json!({"not_injective": [cells_json(&prev), cells_json(z)]}),
            ));
        }
    }
    // Pluscule elements by growth from the identity; pluscule elements are
    // closed under taking prefixes.
    let lambda = predominant_weight(d).weight;
    let pluscule = pluscule_elements(&lambda, n_max);
    let image_set: HashSet<&WeylElement> = image.keys().collect();
    if let Some(w) = pluscule.iter().find(|w| !image_set.contains(w)) {
        return Ok(CheckReport::failed("phi-iso", params, json!({"pluscule_not_in_image": w})));
    }
    if image.len() != pluscule.len() {
        return Ok(CheckReport::failed("phi-iso", params, json!({"image_not_pluscule": image.len() - pluscule.len()})));
    }
    // Ideal covers go to weak covers.
    for z in layers.iter().take(n_max).flatten() {
        let w = word_of_ideal(d, z)?.element;
        for x in d.addable_cells(z) {
            let bigger = word_of_ideal(d, &z.with(x))?.element;
            let expected = w.mul_simple(d.residue_of(x))?;
            if bigger != expected || bigger.length() != w.length() + 1 {
                return Ok(CheckReport::failed(
                    "phi-iso",
                    params,
                    json!({"cover_not_preserved": {"ideal": cells_json(z), "added": [x.a(), x.b()]}}),
                ));
            }
        }
    }
    // Weak covers inside the image come from ideal covers.
    for (w, z) in &image {
        for i in 0..k {
            let up = w.mul_simple(i)?;
            if up.length() != w.length() + 1 {
                continue;
            }
            if let Some(zz) = image.get(&up) {
                if !(z.is_subset(zz) && zz.len() == z.len() + 1) {
                    return Ok(CheckReport::failed(
                        "phi-iso",
                        params,
                        json!({"inverse_cover_not_preserved": [cells_json(z), cells_json(zz)]}),
                    ));
                }
            }
        }
    }
    params["elements"] = json!(image.len());
    Ok(CheckReport::passed("phi-iso", params))
}

/// Pluscule elements of length at most `max_len`, grown one letter at a time.
pub fn pluscule_elements(lambda: &WeightVector, max_len: usize) -> HashSet<WeylElement> {
    let k = lambda.kappa();
    let mut all = HashSet::from([WeylElement::identity(k)]);
    let mut layer = vec![WeylElement::identity(k)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for u in &layer {
            for i in 0..k {
                if u.has_right_descent(i) {
                    continue;
                }
                // R(u s_i) = R(u) ⊔ {u α_i}.
                let new_root = u.apply_to_root(&RootVector::simple(i as i64, k)).expect("same kappa");
                if pairing_weight_coroot(lambda, &new_root).expect("same kappa") != -1 {
                    continue;
                }
                let v = u.mul_simple(i).expect("residue in range");
                if all.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    all
}

/// Down-sets with at most `n_max` members of a finite poset given by `leq`.
fn down_sets<F>(n: usize, n_max: usize, leq: F) -> BTreeSet<BTreeSet<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let below: Vec<Vec<usize>> = (0..n).map(|j| (0..n).filter(|&i| i != j && leq(i, j)).collect()).collect();
    let mut all = BTreeSet::from([BTreeSet::new()]);
    let mut layer = vec![BTreeSet::new()];
    for _ in 0..n_max {
        let mut next = BTreeSet::new();
        for s in &layer {
            for j in 0..n {
                if !s.contains(&j) && below[j].iter().all(|i| s.contains(i)) {
                    let mut t = s.clone();
                    t.insert(j);
                    next.insert(t);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    all
}

/// `Ψ(w) = R(w)`: `R(w_ζ) = hk(ζ)`, the images are exactly the `⊴`-ideals of
/// the window image (enumerated independently), and `v ⪯ w ⟺ R(v) ⊆ R(w)`.
pub fn psi_iso_check(d: &CylindricDiagram, n_max: usize) -> Result<CheckReport> {
    let mut params = diagram_params(d);
    params["n_max"] = json!(n_max);
    let elements: Vec<(Ideal, WeylElement)> = d
        .ideals_up_to(n_max)
        .into_iter()
        .flatten()
        .map(|z| word_of_ideal(d, &z).map(|iw| (z, iw.element)))
        .collect::<Result<_>>()?;
    let mut psi_image = BTreeSet::new();
    for (z, w) in &elements {
        let r = w.inversion_set();
        let hooks: BTreeSet<RootVector> = z.cells().map(|x| hk(d, x)).collect::<Result<_>>()?;
        if r != hooks {
            return Ok(CheckReport::failed("psi-iso", params, json!({"inversions_differ_from_hooks": cells_json(z)})));
        }
        psi_image.insert(r);
    }
    // Ideals of the ⊴-poset on hook values; cells of generation ≥ n_max never
    // lie in an ideal with at most n_max cells.
    let roots: Vec<RootVector> = hook_values(d, n_max).into_iter().map(|h| h.root).collect();
    let order = ModifiedOrder::new(d);
    let ideals: BTreeSet<BTreeSet<RootVector>> = down_sets(roots.len(), n_max, |i, j| order.leq(&roots[i], &roots[j]))
        .into_iter()
        .map(|s| s.into_iter().map(|i| roots[i].clone()).collect())
        .collect();
    if ideals != psi_image {
        let missing = ideals.symmetric_difference(&psi_image).next().expect("sets differ");
        return Ok(CheckReport::failed(
            "psi-iso",
            params,
            json!({"ideal_mismatch": missing.iter().map(|r| r.to_string()).collect::<Vec<_>>()}),
        ));
    }
    for (zv, v) in &elements {
        let rv = v.inversion_set();
        for (zw, w) in &elements {
            let weak = weak_bruhat_leq(v, w);
            if weak != rv.is_subset(&w.inversion_set()) || weak != zv.is_subset(zw) {
                return Ok(CheckReport::failed(
                    "psi-iso",
                    params,
                    json!({"order_mismatch": [cells_json(zv), cells_json(zw)]}),
                ));
            }
        }
    }
    params["elements"] = json!(elements.len());
    Ok(CheckReport::passed("psi-iso", params))
}

/// `w ∈ [e, w_Y)`, by reading a reduced word of `w` as a tableau: each
/// letter must name the next free cell of its content, and that cell must be
/// addable.
pub fn interval_membership(d: &CylindricDiagram, w: &WeylElement) -> bool {
    if w.kappa() != d.kappa() {
        return false;
    }
    let mut z = Ideal::empty();
    for &i in w.reduced_word().letters() {
        let x = d.fibre_min_outside(&z, i);
        if !d.lower_covers(x).all(|y| z.contains(y)) {
            return false;
        }
        z = z.with(x);
    }
    true
}

/// The ideal `ζ` with `w_ζ = w`, if any.
pub fn ideal_of_element(d: &CylindricDiagram, w: &WeylElement) -> Option<Ideal> {
    if !interval_membership(d, w) {
        return None;
    }
    let mut z = Ideal::empty();
    for &i in w.reduced_word().letters() {
        z = z.with(d.fibre_min_outside(&z, i));
    }
    Some(z)
}

/// Membership by comparing with `w_ζ` for every ideal of size `ℓ(w)`.
pub fn interval_membership_by_enumeration(d: &CylindricDiagram, w: &WeylElement) -> Result<bool> {
    for z in d.enumerate_ideals(w.length()) {
        if word_of_ideal(d, &z)?.element == *w {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `T ↦ content word` is a bijection from `LE(ζ)` onto the reduced words of `w_ζ`.
pub fn tableaux_words_bijection_check(d: &CylindricDiagram, z: &Ideal, cap: usize) -> Result<CheckReport> {
    let mut params = diagram_params(d);
    params["ideal"] = cells_json(z);
    let w = word_of_ideal(d, z)?.element;
    let tableaux = d.standard_tableaux(z);
    let words: BTreeSet<Word> = tableaux.iter().map(|t| Word(t.word(d))).collect();
    let reduced: BTreeSet<Word> = reduced_words(&w, cap)?.into_iter().collect();
    params["tableaux"] = json!(tableaux.len());
    params["reduced_words"] = json!(reduced.len());
    if words.len() != tableaux.len() {
        return Ok(CheckReport::failed("tableaux-words", params, json!({"not_injective": true})));
    }
    if words != reduced {
        let odd = words.symmetric_difference(&reduced).next().expect("sets differ");
        return Ok(CheckReport::failed("tableaux-words", params, json!({"word": odd})));
    }
    Ok(CheckReport::passed("tableaux-words", params))
}

/// A random linear-extension prefix: uniform choice among addable cells.
pub fn random_tableau_prefix(d: &CylindricDiagram, n: usize, rng: &mut ChaCha8Rng) -> Tableau {
    d.tableau_prefix(n, |ready| rng.gen_range(0..ready.len()))
}

/// Outcome of comparing two truncated intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalComparison {
    /// Smallest `r` with `T₁⁻¹[1,n] ⊆ T₂⁻¹[1,r]`.
    pub minimal_r: usize,
    /// `[e, w_{T₁}[n]] ⊆ [e, w_{T₂}[r]]` at that `r`.
    pub included: bool,
    /// Largest `L` such that the two `[e, w[n]]` agree on elements of length ≤ `L`.
    pub agreement: usize,
}

/// Compares `[e, w_{T₁}[n]]` and `[e, w_{T₂}[n]]` for two prefixes of the same length.
pub fn compare_truncations(d: &CylindricDiagram, t1: &Tableau, t2_long: &Tableau, n: usize) -> Option<IntervalComparison> {
    let first: BTreeSet<CylCell> = t1.cells()[..n].iter().copied().collect();
    let minimal_r = (n..=t2_long.len()).find(|&r| first.iter().all(|x| t2_long.cells()[..r].contains(x)))?;
    let w1 = prefix_element(d, &Tableau(t1.cells()[..n].to_vec()));
    let w2r = prefix_element(d, &Tableau(t2_long.cells()[..minimal_r].to_vec()));
    let w2n = prefix_element(d, &Tableau(t2_long.cells()[..n].to_vec()));
    let included = weak_bruhat_leq(&w1, &w2r);
    let below = |w: &WeylElement| -> Vec<HashSet<WeylElement>> {
        let mut by_len = vec![HashSet::new(); n + 1];
        for v in crate::weyl::bruhat_interval(w) {
            by_len[v.length()].insert(v);
        }
        by_len
    };
    let (a, b) = (below(&w1), below(&w2n));
    let agreement = (0..=n).take_while(|&l| a[l] == b[l]).last().unwrap_or(0);
    Some(IntervalComparison {
        minimal_r,
        included,
        agreement,
    })
}

/// Random pairs of tableaux: each length-`n` truncation of one sits inside a
/// longer truncation of the other. Reports the smallest agreement length seen.
pub fn interval_independence_check(d: &CylindricDiagram, n: usize, trials: usize, seed: u64) -> Result<CheckReport> {
    let mut params = diagram_params(d);
    params["n"] = json!(n);
    params["trials"] = json!(trials);
    params["seed"] = json!(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Enough cells that the second prefix eventually swallows the first.
    let long = n * (d.period().m() as usize + d.period().ell() as usize) + d.kappa() * d.kappa();
    let mut min_agreement = n;
    for trial in 0..trials {
        let t1 = random_tableau_prefix(d, long, &mut rng);
        let t2 = random_tableau_prefix(d, long, &mut rng);
        for (a, b) in [(&t1, &t2), (&t2, &t1)] {
            let Some(cmp) = compare_truncations(d, a, b, n) else {
                return Ok(CheckReport::failed("interval-independence", params, json!({"trial": trial, "prefix_too_short": long})));
            };
            if !cmp.included {
                return Ok(CheckReport::failed(
                    "interval-independence",
                    params,
                    json!({"trial": trial, "r": cmp.minimal_r, "word1": a.word(d)[..n], "word2": b.word(d)[..cmp.minimal_r]}),
                ));
            }
            min_agreement = min_agreement.min(cmp.agreement);
        }
    }
    params["min_agreement"] = json!(min_agreement);
    Ok(CheckReport::passed("interval-independence", params))
}

/// `{w : ℓ(w) ≤ L, w λ_Y-pluscule}` equals `{w_ζ : |ζ| ≤ L}`, with the
/// left side found by exhaustive search over `W` by length.
pub fn pluscule_characterization_check(d: &CylindricDiagram, max_len: usize) -> Result<CheckReport> {
    let mut params = diagram_params(d);
    params["max_len"] = json!(max_len);
    let lambda = predominant_weight(d).weight;
    let mut pluscule = HashSet::new();
    let mut searched = 0;
    for w in elements_by_length(d.kappa(), max_len).into_iter().flatten() {
        searched += 1;
        let member = interval_membership(d, &w);
        if is_pluscule(&w, &lambda)? {
            pluscule.insert(w.clone());
        }
        if member != pluscule.contains(&w) {
            return Ok(CheckReport::failed("pluscule", params, json!({"element": w, "in_interval": member})));
        }
    }
    let from_ideals: HashSet<WeylElement> = d
        .ideals_up_to(max_len)
        .into_iter()
        .flatten()
        .map(|z| word_of_ideal(d, &z).map(|iw| iw.element))
        .collect::<Result<_>>()?;
    params["searched"] = json!(searched);
    params["pluscule"] = json!(pluscule.len());
    if from_ideals != pluscule {
        let odd = from_ideals.symmetric_difference(&pluscule).next().expect("sets differ");
        return Ok(CheckReport::failed("pluscule", params, json!({"element": odd})));
    }
    Ok(CheckReport::passed("pluscule", params))
}
