//! Colored hook lengths and the orders on `R(w_Y)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagrams::{BottomKind, CylindricDiagram, Tableau, EAST, SOUTH, SOUTH_EAST};
use crate::error::{Error, Result};
use crate::lattice::{Cell, CylCell};
use crate::roots::{null_multiplicity, pairing_root_coroot, positive_roots_up_to, RootVector, WeightVector};
use crate::weyl::letters_commute;

/// A cell together with its colored hook length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookValue {
    pub cell: CylCell,
    pub root: RootVector,
}

fn alpha_of(d: &CylindricDiagram, x: CylCell) -> RootVector {
    RootVector::simple(d.residue_of(x) as i64, d.kappa())
}

fn ray_sum(d: &CylindricDiagram, x: CylCell, step: Cell) -> RootVector {
    let mut sum = RootVector::zero(d.kappa());
    let mut y = d.shift(x, step);
    while d.contains(y) {
        sum += &alpha_of(d, y);
        y = d.shift(y, step);
    }
    sum
}

/// `Σ α(y)` over the arm `{x + (0,k) ∈ Y : k ≥ 1}`.
pub fn arm_sum(d: &CylindricDiagram, x: CylCell) -> RootVector {
    ray_sum(d, x, EAST)
}

/// `Σ α(y)` over the leg `{x + (k,0) ∈ Y : k ≥ 1}`.
pub fn leg_sum(d: &CylindricDiagram, x: CylCell) -> RootVector {
    ray_sum(d, x, SOUTH)
}

/// `hk(x) = α(x) + Σ_arm α + Σ_leg α`.
pub fn hk(d: &CylindricDiagram, x: CylCell) -> Result<RootVector> {
    if !d.contains(x) {
        return Err(Error::NotInDiagram(x.rep()));
    }
    Ok(alpha_of(d, x) + arm_sum(d, x) + leg_sum(d, x))
}

/// Hook values over `window(depth)`, in window order.
pub fn hook_values(d: &CylindricDiagram, depth: usize) -> Vec<HookValue> {
    d.window(depth)
        .into_iter()
        .map(|cell| HookValue {
            cell,
            root: hk(d, cell).expect("window cells lie in Y"),
        })
        .collect()
}

/// `s(T⁻¹(1)) ⋯ s(T⁻¹(n-1)) α(T⁻¹(n))` with `n = T(x)`.
pub fn hkr(d: &CylindricDiagram, t: &Tableau, x: CylCell) -> Result<RootVector> {
    let n = t.label(x).ok_or(Error::NotInTableau(x.rep()))?;
    let mut root = alpha_of(d, x);
    for &p in t.cells()[..n - 1].iter().rev() {
        root.reflect(d.residue_of(p));
    }
    Ok(root)
}

/// `hk` computed from the five-case recurrence through `x^S`, `x^E`, `x^{SE}`.
pub fn hk_by_recurrence(d: &CylindricDiagram, x: CylCell) -> Result<RootVector> {
    if !d.contains(x) {
        return Err(Error::NotInDiagram(x.rep()));
    }
    let bottom: HashSet<CylCell> = d.bottom_set().cells().iter().copied().collect();
    let mut memo = HashMap::new();
    Ok(recurrence(d, &bottom, x, &mut memo))
}

fn recurrence(
    d: &CylindricDiagram,
    bottom: &HashSet<CylCell>,
    x: CylCell,
    memo: &mut HashMap<CylCell, RootVector>,
) -> RootVector {
    if let Some(v) = memo.get(&x) {
        return v.clone();
    }
    let s = d.shift(x, SOUTH);
    let e = d.shift(x, EAST);
    let value = if bottom.contains(&x) {
        let mut v = alpha_of(d, x);
        if d.contains(s) {
            v += &recurrence(d, bottom, s, memo);
        }
        if d.contains(e) {
            v += &recurrence(d, bottom, e, memo);
        }
        v
    } else {
        let se = d.shift(x, SOUTH_EAST);
        recurrence(d, bottom, s, memo) + recurrence(d, bottom, e, memo) - recurrence(d, bottom, se, memo)
    };
    memo.insert(x, value.clone());
    value
}

/// Which case of the recurrence applies at `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RecurrenceCase {
    Interior,
    BottomBoth,
    BottomSouth,
    BottomEast,
    BottomNone,
}

pub fn recurrence_case(d: &CylindricDiagram, x: CylCell) -> RecurrenceCase {
    if !d.bottom_set().contains(x) {
        return RecurrenceCase::Interior;
    }
    match (d.contains(d.shift(x, SOUTH)), d.contains(d.shift(x, EAST))) {
        (true, true) => RecurrenceCase::BottomBoth,
        (true, false) => RecurrenceCase::BottomSouth,
        (false, true) => RecurrenceCase::BottomEast,
        (false, false) => RecurrenceCase::BottomNone,
    }
}

/// Checks the recurrence at `x` using the supplied hook function.
pub fn recurrence_holds<F>(d: &CylindricDiagram, x: CylCell, mut h: F) -> Result<bool>
where
    F: FnMut(CylCell) -> Result<RootVector>,
{
    let s = d.shift(x, SOUTH);
    let e = d.shift(x, EAST);
    let rhs = match recurrence_case(d, x) {
        RecurrenceCase::Interior => h(s)? + h(e)? - h(d.shift(x, SOUTH_EAST))?,
        RecurrenceCase::BottomBoth => alpha_of(d, x) + h(s)? + h(e)?,
        RecurrenceCase::BottomSouth => alpha_of(d, x) + h(s)?,
        RecurrenceCase::BottomEast => alpha_of(d, x) + h(e)?,
        RecurrenceCase::BottomNone => alpha_of(d, x),
    };
    Ok(h(x)? == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredominantWeight {
    pub weight: WeightVector,
}

/// `λ_Y = Σ a_i Λ_i` with `a_i = ±1` on `Γ_max` / `Γ_min`.
pub fn predominant_weight(d: &CylindricDiagram) -> PredominantWeight {
    let bottom = d.bottom_set();
    let coeffs = (0..d.kappa())
        .map(|i| match bottom.kind(i) {
            BottomKind::Max => 1,
            BottomKind::Min => -1,
            BottomKind::Interior => 0,
        })
        .collect();
    PredominantWeight {
        weight: WeightVector::new(coeffs),
    }
}

/// `D(λ_Y)` cut down to roots with `N(α) ≤ depth`.
pub fn d_set_window(d: &CylindricDiagram, depth: usize) -> BTreeSet<RootVector> {
    let lambda = predominant_weight(d).weight;
    positive_roots_up_to(d.kappa(), depth as i64)
        .into_iter()
        .filter(|a| crate::roots::pairing_weight_coroot(&lambda, a).expect("same kappa") == -1)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiSet {
    pub pi0: BTreeSet<RootVector>,
    pub pi_arm: BTreeSet<RootVector>,
    pub pi_leg: BTreeSet<RootVector>,
}

impl PiSet {
    pub fn len(&self) -> usize {
        self.pi0.len() + self.pi_arm.len() + self.pi_leg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn all(&self) -> BTreeSet<RootVector> {
        self.pi0
            .iter()
            .chain(&self.pi_arm)
            .chain(&self.pi_leg)
            .cloned()
            .collect()
    }
}

pub fn pi_set(d: &CylindricDiagram) -> PiSet {
    let bottom = d.bottom_set();
    let mut pi = PiSet {
        pi0: BTreeSet::new(),
        pi_arm: BTreeSet::new(),
        pi_leg: BTreeSet::new(),
    };
    for (i, &x) in bottom.cells().iter().enumerate() {
        match bottom.kind(i) {
            BottomKind::Interior => {
                pi.pi0.insert(alpha_of(d, x));
            }
            BottomKind::Max => {
                pi.pi_arm.insert(alpha_of(d, x) + arm_sum(d, x));
                pi.pi_leg.insert(alpha_of(d, x) + leg_sum(d, x));
            }
            BottomKind::Min => {}
        }
    }
    pi
}

/// `α ≤or β` iff `β - α ∈ Q_+`.
pub fn leq_ordinary(alpha: &RootVector, beta: &RootVector) -> bool {
    alpha.kappa() == beta.kappa() && (beta.clone() - alpha.clone()).is_non_negative()
}

/// The order `⊴`: `β - α` lies in the monoid generated by `Π_Y`.
#[derive(Clone, Debug)]
pub struct ModifiedOrder {
    generators: Vec<Vec<i64>>,
}

impl ModifiedOrder {
    pub fn new(d: &CylindricDiagram) -> Self {
        let mut generators: Vec<Vec<i64>> = pi_set(d).all().into_iter().map(|g| g.coeffs().to_vec()).collect();
        generators.sort_by_key(|g| std::cmp::Reverse(g.iter().sum::<i64>()));
        ModifiedOrder { generators }
    }

    pub fn leq(&self, alpha: &RootVector, beta: &RootVector) -> bool {
        if alpha.kappa() != beta.kappa() {
            return false;
        }
        let t: Vec<i64> = beta.coeffs().iter().zip(alpha.coeffs()).map(|(b, a)| b - a).collect();
        self.in_monoid(&t)
    }

    /// Whether `t` is a non-negative integer combination of the generators.
    pub fn in_monoid(&self, t: &[i64]) -> bool {
        let mut dead = HashSet::new();
        self.search(t.to_vec(), &mut dead)
    }

    // Any decomposition uses a generator covering the first positive
    // coordinate, so branching over those is complete.
    fn search(&self, t: Vec<i64>, dead: &mut HashSet<Vec<i64>>) -> bool {
        if t.iter().any(|&c| c < 0) {
            return false;
        }
        let Some(i) = t.iter().position(|&c| c > 0) else {
            return true;
        };
        if dead.contains(&t) {
            return false;
        }
        for g in &self.generators {
            if g[i] > 0 && g.iter().zip(&t).all(|(a, b)| a <= b) {
                let rest: Vec<i64> = t.iter().zip(g).map(|(a, b)| a - b).collect();
                if self.search(rest, dead) {
                    return true;
                }
            }
        }
        dead.insert(t);
        false
    }
}

pub fn leq_modified(d: &CylindricDiagram, alpha: &RootVector, beta: &RootVector) -> bool {
    ModifiedOrder::new(d).leq(alpha, beta)
}

/// Reflexive-transitive closure of a relation on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    reach: Vec<Vec<bool>>,
}

impl Closure {
    pub fn from_relation<F>(n: usize, mut rel: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let adj: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| j != i && rel(i, j)).collect()).collect();
        let reach = (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                seen[s] = true;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for &v in &adj[u] {
                        if !seen[v] {
                            seen[v] = true;
                            stack.push(v);
                        }
                    }
                }
                seen
            })
            .collect();
        Closure { reach }
    }

    pub fn len(&self) -> usize {
        self.reach.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reach.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach[i][j]
    }

    /// Covering pairs `(i, j)` with `i < j`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.reach[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.reach[i][k] && self.reach[k][j]);
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The heap order `≤hp` on the hook values of a window, closed with a margin.
#[derive(Clone, Debug)]
pub struct HeapRootOrder {
    roots: Vec<RootVector>,
    index: HashMap<RootVector, usize>,
    closure: Closure,
}

impl HeapRootOrder {
    pub fn new(d: &CylindricDiagram, depth: usize, margin: usize) -> Self {
        let roots: Vec<RootVector> = hook_values(d, depth + margin).into_iter().map(|h| h.root).collect();
        let closure = Closure::from_relation(roots.len(), |i, j| {
            leq_ordinary(&roots[i], &roots[j]) && pairing_root_coroot(&roots[i], &roots[j]).expect("same kappa") != 0
        });
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        HeapRootOrder { roots, index, closure }
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    /// `None` when either root is outside the closed set.
    pub fn leq(&self, alpha: &RootVector, beta: &RootVector) -> Option<bool> {
        let i = *self.index.get(alpha)?;
        let j = *self.index.get(beta)?;
        Some(self.closure.leq(i, j))
    }
}

/// `α ≤hp β`, closing over the window that contains both plus one layer.
pub fn leq_heap_roots(d: &CylindricDiagram, alpha: &RootVector, beta: &RootVector) -> bool {
    let depth = [alpha, beta]
        .iter()
        .map(|r| null_multiplicity(r).unwrap_or(0).max(0) as usize)
        .max()
        .unwrap_or(0);
    HeapRootOrder::new(d, depth, 1).leq(alpha, beta).unwrap_or(false)
}

/// `⪯_T` on the labels `1..=|T|` of a tableau.
#[derive(Clone, Debug)]
pub struct HeapIntegers {
    closure: Closure,
}

impl HeapIntegers {
    pub fn new(d: &CylindricDiagram, t: &Tableau) -> Self {
        let letters = t.word(d);
        let k = d.kappa();
        let closure = Closure::from_relation(letters.len(), |a, b| {
            a < b && (letters[a] == letters[b] || !letters_commute(letters[a], letters[b], k))
        });
        HeapIntegers { closure }
    }

    pub fn len(&self) -> usize {
        self.closure.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closure.is_empty()
    }

    /// Labels are 1-based.
    pub fn leq(&self, a: usize, b: usize) -> Result<bool> {
        let len = self.len();
        for label in [a, b] {
            if label == 0 || label > len {
                return Err(Error::LabelOutOfRange { label, len });
            }
        }
        Ok(self.closure.leq(a - 1, b - 1))
    }
}

pub fn heap_order_on_integers(d: &CylindricDiagram, t: &Tableau, a: usize, b: usize) -> Result<bool> {
    HeapIntegers::new(d, t).leq(a, b)
}

/// `hk(x) ⊴ hk(y)` generated by single `Π_Y` steps inside the window image.
pub fn pi_step_closure(d: &CylindricDiagram, depth: usize) -> (Vec<RootVector>, Closure) {
    let roots: Vec<RootVector> = hook_values(d, depth).into_iter().map(|h| h.root).collect();
    let pi = pi_set(d).all();
    let closure = Closure::from_relation(roots.len(), |i, j| pi.contains(&(roots[j].clone() - roots[i].clone())));
    (roots, closure)
}

/// Outcome of the three-way comparison for an incomparable pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trichotomy {
    /// `N(hk(y)) - N(hk(x))`.
    pub diff: i64,
    pub holds: bool,
}

/// `None` when `x` and `y` are comparable.
pub fn trichotomy(d: &CylindricDiagram, x: CylCell, y: CylCell) -> Result<Option<Trichotomy>> {
    if d.leq(x, y) || d.leq(y, x) {
        return Ok(None);
    }
    let hx = hk(d, x)?;
    let hy = hk(d, y)?;
    let diff = null_multiplicity(&hy)? - null_multiplicity(&hx)?;
    let delta = RootVector::delta(d.kappa());
    let holds = match diff {
        1 => leq_ordinary(&(hy.clone() - delta), &hx) && leq_ordinary(&hx, &hy),
        -1 => leq_ordinary(&(hx.clone() - delta), &hy) && leq_ordinary(&hy, &hx),
        0 => !leq_ordinary(&hx, &hy) && !leq_ordinary(&hy, &hx),
        _ => false,
    };
    Ok(Some(Trichotomy { diff, holds }))
}

/// Orders available for DOT export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    Diagram,
    Modified,
    Heap,
    Tableau,
}

impl OrderKind {
    pub const ALL: [OrderKind; 4] = [OrderKind::Diagram, OrderKind::Modified, OrderKind::Heap, OrderKind::Tableau];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Diagram => "diagram",
            OrderKind::Modified => "modified",
            OrderKind::Heap => "heap",
            OrderKind::Tableau => "tableau",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown order {s:?}"))
    }
}

/// Relation among the cells of `window(depth)` for the chosen order.
pub fn window_closure(d: &CylindricDiagram, depth: usize, kind: OrderKind) -> (Vec<CylCell>, Closure) {
    let cells = d.window(depth);
    let closure = match kind {
        OrderKind::Diagram => Closure::from_relation(cells.len(), |i, j| d.leq(cells[i], cells[j])),
        OrderKind::Modified => {
            let order = ModifiedOrder::new(d);
            let roots: Vec<RootVector> = cells.iter().map(|&x| hk(d, x).expect("window cell")).collect();
            Closure::from_relation(cells.len(), |i, j| order.leq(&roots[i], &roots[j]))
        }
        OrderKind::Heap => {
            let order = HeapRootOrder::new(d, depth, 1);
            let roots: Vec<RootVector> = cells.iter().map(|&x| hk(d, x).expect("window cell")).collect();
            Closure::from_relation(cells.len(), |i, j| order.leq(&roots[i], &roots[j]).expect("in closure"))
        }
        OrderKind::Tableau => {
            let heap = HeapIntegers::new(d, &Tableau(cells.clone()));
            Closure::from_relation(cells.len(), |i, j| heap.leq(i + 1, j + 1).expect("in range"))
        }
    };
    (cells, closure)
}

/// Covering graph of the chosen order on `window(depth)`.
pub fn to_dot(d: &CylindricDiagram, depth: usize, kind: OrderKind) -> String {
    let (cells, closure) = window_closure(d, depth, kind);
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", kind.name());
    for (i, &x) in cells.iter().enumerate() {
        out.push_str(&format!(
            "  n{i} [label=\"({},{}):{}\"];\n",
            x.a(),
            x.b(),
            d.residue_of(x)
        ));
    }
    for (i, j) in closure.covers() {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}
