//! The verification suites: each one checks a single theorem-level claim by
//! exhaustive computation and reports the first counterexample found.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::classical::classical_check;
use crate::diagrams::{CylindricDiagram, Ideal};
use crate::error::Result;
use crate::hooks::{
    d_set_window, hk, hk_by_recurrence, hkr, hook_values, leq_heap_roots, leq_modified, leq_ordinary, pi_set,
    pi_step_closure, predominant_weight, recurrence_case, recurrence_holds, trichotomy, window_closure, HeapRootOrder,
    OrderKind, PiSet,
};
use crate::ideals_bruhat::{
    phi_iso_check, pluscule_characterization_check, prefix_element, psi_iso_check, random_tableau_prefix,
    tableaux_words_bijection_check,
};
use crate::lattice::CylCell;
use crate::report::CheckReport;
use crate::roots::{alpha_interval, RootVector};
use crate::weyl::{is_fully_commutative, is_pluscule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    WorkedExample,
    PiSet,
    ExOrdRegression,
    HkBijection,
    HkrRecurrence,
    WPrefix,
    OrderIsomorphism,
    Trichotomy,
    IdealBruhat,
    TableauxWords,
    Pluscule,
    Classical,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::WorkedExample,
        Suite::PiSet,
        Suite::ExOrdRegression,
        Suite::HkBijection,
        Suite::HkrRecurrence,
        Suite::WPrefix,
        Suite::OrderIsomorphism,
        Suite::Trichotomy,
        Suite::IdealBruhat,
        Suite::TableauxWords,
        Suite::Pluscule,
        Suite::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WorkedExample => "worked-example",
            Suite::PiSet => "pi-set",
            Suite::ExOrdRegression => "ex-ord-regression",
            Suite::HkBijection => "hk-bijection",
            Suite::HkrRecurrence => "hkr-recurrence",
            Suite::WPrefix => "w-prefix",
            Suite::OrderIsomorphism => "order-isomorphism",
            Suite::Trichotomy => "trichotomy",
            Suite::IdealBruhat => "ideal-bruhat",
            Suite::TableauxWords => "tableaux-words",
            Suite::Pluscule => "pluscule",
            Suite::Classical => "classical",
        }
    }

    /// The statement being checked.
    pub fn claim(self) -> &'static str {
        match self {
            Suite::WorkedExample => "hk(2,-4) on (4,-5;5,3,3,1) has content 3 and equals δ+α0+α1+α6+α7+α8 = α_{-12,2}",
            Suite::PiSet => "Π_Y of the drawn content picture and of one-row diagrams",
            Suite::ExOrdRegression => "(1,2),(2,1) on (2,-2;4,2): ≤or-comparable by α1+α3 but ⊴- and ≤hp-incomparable",
            Suite::HkBijection => "hk is a bijection from window(d) onto D(λ_Y) ∩ {N ≤ d}",
            Suite::HkrRecurrence => "hkr = hk along every linear extension; the five-case recurrence holds",
            Suite::WPrefix => "w_{Y,T}[n] has length n, is λ_Y-pluscule and fully commutative",
            Suite::OrderIsomorphism => "≤, ⊴, ≤hp and ⪯_T agree on windows; ⊴ is generated by Π_Y steps",
            Suite::Trichotomy => "incomparable cells have N-difference in {-1,0,1} with the matching ≤or clause",
            Suite::IdealBruhat => "Φ: ideals → [e,w_Y) and Ψ: w ↦ R(w) are order isomorphisms",
            Suite::TableauxWords => "T ↦ content word is a bijection LE(ζ) → reduced words of w_ζ",
            Suite::Pluscule => "λ_Y-pluscule elements of length ≤ L are exactly the w_ζ with |ζ| ≤ L",
            Suite::Classical => "classical shapes: ⊴ = ≤or, ι∘hk = cohk, ι reverses order; the w[6] word is a tableau word",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Overrides for the suites that run over diagrams. `None` means the
/// suite's own defaults.
#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub diagrams: Option<Vec<CylindricDiagram>>,
    pub depth: Option<usize>,
    pub max_ideal: Option<usize>,
    pub seed: u64,
}

fn diag(m: i64, ell: i64, parts: &[i64]) -> CylindricDiagram {
    CylindricDiagram::from_parts(m, ell, parts).expect("valid fixed diagram")
}

/// `(2,-2;4,2)`, `(2,-3;5,4)`, `(4,-5;5,3,3,1)`, `(1,-2;1)`, `(1,-1;0)`.
pub fn test_diagrams() -> Vec<CylindricDiagram> {
    vec![
        diag(2, 2, &[4, 2]),
        diag(2, 3, &[5, 4]),
        diag(4, 5, &[5, 3, 3, 1]),
        diag(1, 2, &[1]),
        diag(1, 1, &[0]),
    ]
}

/// One diagram per shape up to horizontal shift: `λ_m = 0` and `λ_1 ≤ ℓ`.
pub fn diagrams_with_kappa(kappa: usize) -> Vec<CylindricDiagram> {
    fn parts(len: usize, max: i64) -> Vec<Vec<i64>> {
        if len == 0 {
            return vec![vec![]];
        }
        (0..=max)
            .rev()
            .flat_map(|first| {
                parts(len - 1, first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut out = Vec::new();
    for m in 1..kappa as i64 {
        let ell = kappa as i64 - m;
        for mut p in parts(m as usize - 1, ell) {
            p.push(0);
            out.push(diag(m, ell, &p));
        }
    }
    out
}

pub fn diagram_json(d: &CylindricDiagram) -> Value {
    json!({"omega": [d.period().m(), -d.period().ell()], "lambda": d.lambda().parts()})
}

fn cells_json(cells: &[CylCell]) -> Value {
    json!(cells.iter().map(|x| [x.a(), x.b()]).collect::<Vec<_>>())
}

fn rv(k: usize, idx: &[i64]) -> RootVector {
    idx.iter().fold(RootVector::zero(k), |acc, &i| acc + RootVector::simple(i, k))
}

fn strings(set: &BTreeSet<RootVector>) -> Vec<String> {
    set.iter().map(|r| r.to_string()).collect()
}

fn pi_json(pi: &PiSet) -> Value {
    json!({"pi0": strings(&pi.pi0), "arm": strings(&pi.pi_arm), "leg": strings(&pi.pi_leg)})
}

/// Counterexample tagged with its diagram and the cells involved.
fn witness(d: &CylindricDiagram, cells: &[CylCell], detail: Value) -> Value {
    json!({"diagram": diagram_json(d), "cells": cells_json(cells), "detail": detail})
}

struct Outcome {
    params: Value,
    counterexample: Option<Value>,
}

impl Outcome {
    fn pass(params: Value) -> Result<Self> {
        Ok(Outcome {
            params,
            counterexample: None,
        })
    }

    fn fail(params: Value, c: Value) -> Result<Self> {
        Ok(Outcome {
            params,
            counterexample: Some(c),
        })
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> CheckReport {
    let diagrams = cfg.diagrams.clone().unwrap_or_else(test_diagrams);
    let outcome = match suite {
        Suite::WorkedExample => worked_example(),
        Suite::PiSet => pi_set_regression(),
        Suite::ExOrdRegression => ex_ord_regression(),
        Suite::HkBijection => hk_bijection(&diagrams, cfg.depth.unwrap_or(3)),
        Suite::HkrRecurrence => hkr_recurrence(&diagrams, cfg.max_ideal.unwrap_or(7), cfg.depth.unwrap_or(2)),
        Suite::WPrefix => w_prefix(&diagrams, cfg.max_ideal.unwrap_or(8), cfg.seed, 5),
        Suite::OrderIsomorphism => order_isomorphism(&diagrams, cfg.depth.unwrap_or(2)),
        Suite::Trichotomy => trichotomy_suite(&diagrams, cfg.depth.unwrap_or(2)),
        Suite::IdealBruhat => ideal_bruhat(&diagrams, cfg.max_ideal.unwrap_or(6)),
        Suite::TableauxWords => tableaux_words(&diagrams, cfg.max_ideal.unwrap_or(7)),
        Suite::Pluscule => {
            let pool = cfg
                .diagrams
                .clone()
                .unwrap_or_else(|| (2..=4).flat_map(diagrams_with_kappa).collect());
            pluscule(&pool, cfg.max_ideal.unwrap_or(5))
        }
        Suite::Classical => classical(),
    };
    let (mut params, counterexample) = match outcome {
        Ok(o) => (o.params, o.counterexample),
        Err(e) => (json!({}), Some(json!({"error": e.to_string()}))),
    };
    params["claim"] = json!(suite.claim());
    CheckReport::from_outcome(suite.name(), params, counterexample)
}

/// Runs the suites on scoped worker threads; reports keep the input order.
pub fn run_suites(suites: &[Suite], cfg: &VerifyConfig) -> Vec<CheckReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|&suite| s.spawn(move || run_suite(suite, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    })
}

fn worked_example() -> Result<Outcome> {
    let d = diag(4, 5, &[5, 3, 3, 1]);
    let x = d.cell(2, -4);
    let content = d.content(x)?;
    let h = hk(&d, x)?;
    let expected = RootVector::delta(9) + rv(9, &[0, 1, 6, 7, 8]);
    let interval = alpha_interval(-12, 2, 9)?;
    let params = json!({"diagram": diagram_json(&d), "cell": [2, -4], "content": content, "hk": h.to_string()});
    if content != 3 || h != expected || h != interval {
        return Outcome::fail(params.clone(), witness(&d, &[x], json!({"expected": expected.to_string()})));
    }
    Outcome::pass(params)
}

fn pi_set_regression() -> Result<Outcome> {
    let set = |v: &[&[i64]]| v.iter().map(|s| rv(9, s)).collect::<BTreeSet<_>>();
    // The content picture as drawn has row ends 9, 7, 7, 5.
    let drawn = diag(4, 5, &[9, 7, 7, 5]);
    let expected = PiSet {
        pi0: set(&[&[3], &[5], &[7]]),
        pi_arm: set(&[&[6, 7, 8], &[2, 3, 4], &[0, 1]]),
        pi_leg: set(&[&[4, 5, 6], &[1, 2], &[0, 8]]),
    };
    let stated = diag(4, 5, &[5, 4, 4, 2]);
    let stated_pinned = PiSet {
        pi0: set(&[&[0], &[2], &[6]]),
        pi_arm: set(&[&[5, 6, 7], &[3, 4], &[0, 1, 8]]),
        pi_leg: set(&[&[7, 8], &[4, 5], &[1, 2, 3]]),
    };
    let got = pi_set(&drawn);
    let got_stated = pi_set(&stated);
    let mut params = json!({
        "drawn": {"diagram": diagram_json(&drawn), "pi": pi_json(&got)},
        "stated": {"diagram": diagram_json(&stated), "pi": pi_json(&got_stated)},
    });
    if got != expected {
        return Outcome::fail(params, json!({"diagram": diagram_json(&drawn), "expected": pi_json(&expected)}));
    }
    if got_stated != stated_pinned {
        return Outcome::fail(params, json!({"diagram": diagram_json(&stated), "expected": pi_json(&stated_pinned)}));
    }
    for n in 3..=5 {
        let d = diag(1, n - 1, &[n]);
        let k = n as usize;
        let pi = pi_set(&d);
        if pi.pi_arm != BTreeSet::from([RootVector::delta(k)]) || pi.pi_leg != BTreeSet::from([rv(k, &[0, n - 1])]) {
            return Outcome::fail(params, json!({"diagram": diagram_json(&d), "pi": pi_json(&pi)}));
        }
    }
    params["one_row"] = json!([3, 4, 5]);
    Outcome::pass(params)
}

fn ex_ord_regression() -> Result<Outcome> {
    let d = diag(2, 2, &[4, 2]);
    let (x, y) = (d.cell(1, 2), d.cell(2, 1));
    let (hx, hy) = (hk(&d, x)?, hk(&d, y)?);
    let checks = [
        ("incomparable_in_Y", !d.leq(x, y) && !d.leq(y, x)),
        ("hk_x", hx == RootVector::delta(4) + rv(4, &[3])),
        ("hk_y", hy == rv(4, &[0, 2, 3])),
        ("ordinary", leq_ordinary(&hy, &hx) && hx.clone() - hy.clone() == rv(4, &[1, 3])),
        ("modified_incomparable", !leq_modified(&d, &hy, &hx) && !leq_modified(&d, &hx, &hy)),
        ("heap_incomparable", !leq_heap_roots(&d, &hy, &hx) && !leq_heap_roots(&d, &hx, &hy)),
    ];
    let params = json!({"diagram": diagram_json(&d), "hk_x": hx.to_string(), "hk_y": hy.to_string()});
    if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Outcome::fail(params, witness(&d, &[x, y], json!(name)));
    }
    Outcome::pass(params)
}

fn hk_bijection(diagrams: &[CylindricDiagram], depth: usize) -> Result<Outcome> {
    let mut cells = 0;
    for d in diagrams {
        for k in 0..=depth {
            let values = hook_values(d, k);
            let image: BTreeSet<RootVector> = values.iter().map(|h| h.root.clone()).collect();
            if image.len() != values.len() {
                let mut seen = BTreeMap::new();
                for h in &values {
                    if let Some(&other) = seen.get(&h.root) {
                        return Outcome::fail(json!({"depth": depth}), witness(d, &[other, h.cell], json!("hk not injective")));
                    }
                    seen.insert(h.root.clone(), h.cell);
                }
            }
            let target = d_set_window(d, k);
            if image != target {
                let odd: Vec<String> = image.symmetric_difference(&target).map(|r| r.to_string()).collect();
                return Outcome::fail(
                    json!({"depth": depth}),
                    witness(d, &[], json!({"window_depth": k, "symmetric_difference": odd})),
                );
            }
            cells += values.len();
        }
    }
    Outcome::pass(json!({"depth": depth, "diagrams": diagrams.len(), "cells": cells}))
}

fn hkr_recurrence(diagrams: &[CylindricDiagram], max_ideal: usize, depth: usize) -> Result<Outcome> {
    let params = json!({"max_ideal": max_ideal, "depth": depth});
    let mut tableaux = 0usize;
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for d in diagrams {
        // Every cell of every ideal with at most max_ideal cells lies in window(max_ideal).
        let hooks: BTreeMap<CylCell, RootVector> = hook_values(d, max_ideal).into_iter().map(|h| (h.cell, h.root)).collect();
        for z in d.ideals_up_to(max_ideal).into_iter().flatten() {
            for t in d.standard_tableaux(&z) {
                tableaux += 1;
                for &x in t.cells() {
                    if hkr(d, &t, x)? != hooks[&x] {
                        return Outcome::fail(params, witness(d, &[x], json!({"tableau": cells_json(t.cells())})));
                    }
                }
            }
        }
        for x in d.window(depth) {
            let h = hk(d, x)?;
            if hk_by_recurrence(d, x)? != h || !recurrence_holds(d, x, |y| hk(d, y))? {
                return Outcome::fail(params, witness(d, &[x], json!({"case": recurrence_case(d, x)})));
            }
            *cases.entry(format!("{:?}", recurrence_case(d, x))).or_default() += 1;
        }
    }
    let mut params = params;
    params["tableaux"] = json!(tableaux);
    params["cases"] = json!(cases);
    Outcome::pass(params)
}

fn w_prefix(diagrams: &[CylindricDiagram], n_max: usize, seed: u64, seeds: u64) -> Result<Outcome> {
    let params = json!({"n_max": n_max, "seeds": (seed..seed + seeds).collect::<Vec<_>>()});
    for d in diagrams {
        let lambda = predominant_weight(d).weight;
        for s in seed..seed + seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let t = random_tableau_prefix(d, n_max, &mut rng);
            for n in 1..=n_max {
                let prefix = crate::diagrams::Tableau(t.cells()[..n].to_vec());
                let w = prefix_element(d, &prefix);
                let ok = w.length() == n && is_pluscule(&w, &lambda)? && is_fully_commutative(&w, n)?;
                if !ok {
                    return Outcome::fail(params, witness(d, prefix.cells(), json!({"seed": s, "word": prefix.word(d)})));
                }
            }
        }
    }
    Outcome::pass(params)
}

fn order_isomorphism(diagrams: &[CylindricDiagram], depth: usize) -> Result<Outcome> {
    let params = json!({"depth": depth});
    let mut pairs = 0;
    for d in diagrams {
        let (cells, base) = window_closure(d, depth, OrderKind::Diagram);
        let others = [
            ("modified", window_closure(d, depth, OrderKind::Modified).1),
            ("heap", window_closure(d, depth, OrderKind::Heap).1),
            ("tableau", window_closure(d, depth, OrderKind::Tableau).1),
            ("pi_steps", pi_step_closure(d, depth).1),
        ];
        let wider = HeapRootOrder::new(d, depth, 2);
        let narrow = HeapRootOrder::new(d, depth, 1);
        let roots: Vec<RootVector> = cells.iter().map(|&x| hk(d, x)).collect::<Result<_>>()?;
        for i in 0..cells.len() {
            for j in 0..cells.len() {
                let expected = base.leq(i, j);
                for (name, other) in &others {
                    if other.leq(i, j) != expected {
                        return Outcome::fail(
                            params,
                            witness(d, &[cells[i], cells[j]], json!({"order": name, "cells_leq": expected})),
                        );
                    }
                }
                if wider.leq(&roots[i], &roots[j]) != narrow.leq(&roots[i], &roots[j]) {
                    return Outcome::fail(params, witness(d, &[cells[i], cells[j]], json!("heap closure moved with margin")));
                }
                pairs += 1;
            }
        }
    }
    let mut params = params;
    params["pairs"] = json!(pairs);
    Outcome::pass(params)
}

fn trichotomy_suite(diagrams: &[CylindricDiagram], depth: usize) -> Result<Outcome> {
    let params = json!({"depth": depth});
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for d in diagrams {
        let cells = d.window(depth);
        for &x in &cells {
            for &y in &cells {
                if let Some(t) = trichotomy(d, x, y)? {
                    if !t.holds || !(-1..=1).contains(&t.diff) {
                        return Outcome::fail(params, witness(d, &[x, y], json!({"diff": t.diff})));
                    }
                    *counts.entry(t.diff).or_default() += 1;
                }
            }
        }
    }
    let mut params = params;
    params["incomparable_pairs_by_diff"] = json!(counts.iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>());
    Outcome::pass(params)
}

fn ideal_bruhat(diagrams: &[CylindricDiagram], max_ideal: usize) -> Result<Outcome> {
    let params = json!({"max_ideal": max_ideal});
    let mut elements = 0;
    for d in diagrams {
        for r in [phi_iso_check(d, max_ideal)?, psi_iso_check(d, max_ideal)?] {
            if !r.pass {
                return Outcome::fail(params, json!({"diagram": diagram_json(d), "check": r.check, "detail": r.counterexample}));
            }
            elements += r.params["elements"].as_u64().unwrap_or(0);
        }
    }
    let mut params = params;
    params["elements"] = json!(elements);
    Outcome::pass(params)
}

fn tableaux_words(diagrams: &[CylindricDiagram], max_ideal: usize) -> Result<Outcome> {
    let params = json!({"max_ideal": max_ideal});
    let (mut ideals, mut tableaux) = (0, 0);
    for d in diagrams {
        for z in d.ideals_up_to(max_ideal).into_iter().flatten() {
            let r = tableaux_words_bijection_check(d, &z, z.len().max(1))?;
            if !r.pass {
                let cells: Vec<CylCell> = z.cells().collect();
                return Outcome::fail(params, witness(d, &cells, r.counterexample.unwrap_or(Value::Null)));
            }
            ideals += 1;
            tableaux += r.params["tableaux"].as_u64().unwrap_or(0);
        }
    }
    let mut params = params;
    params["ideals"] = json!(ideals);
    params["tableaux"] = json!(tableaux);
    Outcome::pass(params)
}

fn pluscule(diagrams: &[CylindricDiagram], max_len: usize) -> Result<Outcome> {
    let params = json!({"max_len": max_len, "diagrams": diagrams.iter().map(diagram_json).collect::<Vec<_>>()});
    for d in diagrams {
        let r = pluscule_characterization_check(d, max_len)?;
        if !r.pass {
            return Outcome::fail(params, json!({"diagram": diagram_json(d), "detail": r.counterexample}));
        }
    }
    Outcome::pass(params)
}

/// A 6-cell ideal of `(2,-3;5,4)` with a linear extension reading `4,2,1,3,0,2`.
pub fn find_w6_tableau() -> Option<(Ideal, Vec<CylCell>)> {
    let d = diag(2, 3, &[5, 4]);
    let target = [4, 2, 1, 3, 0, 2];
    d.enumerate_ideals(6).into_iter().find_map(|z| {
        d.standard_tableaux(&z)
            .into_iter()
            .find(|t| t.word(&d) == target)
            .map(|t| (z, t.cells().to_vec()))
    })
}

fn classical() -> Result<Outcome> {
    let shapes: [&[i64]; 3] = [&[3, 2, 1], &[4, 2], &[2, 2, 1]];
    let mut reports = Vec::new();
    for lambda in shapes {
        let r = classical_check(lambda)?;
        if !r.pass {
            return Outcome::fail(json!({"shapes": shapes}), json!({"lambda": lambda, "detail": r.counterexample}));
        }
        reports.push(r.params);
    }
    let mut params = json!({"shapes": reports});
    match find_w6_tableau() {
        Some((_, cells)) => {
            params["w6_tableau"] = cells_json(&cells);
            Outcome::pass(params)
        }
        None => Outcome::fail(params, json!({"w6": "no 6-cell ideal of (2,-3;5,4) reads s4 s2 s1 s3 s0 s2"})),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        let names: BTreeSet<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        assert_eq!(names.len(), 12);
    }

    #[test]
    fn small_kappa_shapes() {
        assert_eq!(diagrams_with_kappa(2).len(), 1);
        // (1,-2): λ=(0); (2,-1): λ ∈ {(1,0),(0,0)}
        assert_eq!(diagrams_with_kappa(3).len(), 3);
        for d in diagrams_with_kappa(4) {
            assert_eq!(d.kappa(), 4);
        }
    }

    #[test]
    fn fast_suites_pass() {
        let cfg = VerifyConfig::default();
        for s in [Suite::WorkedExample, Suite::PiSet, Suite::ExOrdRegression, Suite::Classical] {
            let r = run_suite(s, &cfg);
            assert!(r.pass, "{}", r.to_json());
            assert_eq!(r.check, s.name());
        }
    }

    #[test]
    fn configured_diagram() {
        let cfg = VerifyConfig {
            diagrams: Some(vec![diag(2, 2, &[4, 2])]),
            depth: Some(3),
            ..Default::default()
        };
        let r = run_suite(Suite::HkBijection, &cfg);
        assert!(r.pass);
        assert_eq!(r.params["diagrams"], 1);
    }

    #[test]
    fn parallel_run_keeps_order() {
        let suites = [Suite::PiSet, Suite::WorkedExample];
        let reports = run_suites(&suites, &VerifyConfig::default());
        assert_eq!(reports.iter().map(|r| r.check.as_str()).collect::<Vec<_>>(), ["pi-set", "worked-example"]);
        assert!(run_suites(&[], &VerifyConfig::default()).is_empty());
    }

    #[test]
    fn w6_tableau_found() {
        let (z, cells) = find_w6_tableau().unwrap();
        assert_eq!(z.len(), 6);
        assert_eq!(cells.len(), 6);
    }
}
