//! Cylindric diagrams `Y_λ = π([λ] + Zω)` and their finite order ideals.

use std::collections::{BTreeSet, BinaryHeap, HashSet};
use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{interval_cyl, leq_cyl, project, Cell, CylCell, Period};

/// Unit steps towards smaller cells.
pub const SOUTH: Cell = Cell::new(1, 0);
pub const EAST: Cell = Cell::new(0, 1);
pub const SOUTH_EAST: Cell = Cell::new(1, 1);

/// A non-increasing sequence of (possibly negative) integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedPartition(Vec<i64>);

impl GeneralizedPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "empty".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "not non-increasing".into(),
            });
        }
        Ok(GeneralizedPartition(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// `λ_a` for `1 ≤ a ≤ m`.
    pub fn part(&self, a: i64) -> i64 {
        self.0[(a - 1) as usize]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Which extremal class of the bottom set a cell belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BottomKind {
    Max,
    Min,
    Interior,
}

/// The bottom set `Γ = {b_i}`: `b_i` is the minimum of the content fibre `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottomSet {
    cells: Vec<CylCell>,
    kinds: Vec<BottomKind>,
}

impl BottomSet {
    /// `b_i`, indexed by residue.
    pub fn cells(&self) -> &[CylCell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> CylCell {
        self.cells[i]
    }

    pub fn kind(&self, i: usize) -> BottomKind {
        self.kinds[i]
    }

    pub fn kinds(&self) -> &[BottomKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, x: CylCell) -> bool {
        self.cells.contains(&x)
    }

    /// Residues of `Γ_max`.
    pub fn maximal(&self) -> impl Iterator<Item = usize> + '_ {
        self.residues_of(BottomKind::Max)
    }

    /// Residues of `Γ_min`.
    pub fn minimal(&self) -> impl Iterator<Item = usize> + '_ {
        self.residues_of(BottomKind::Min)
    }

    fn residues_of(&self, kind: BottomKind) -> impl Iterator<Item = usize> + '_ {
        self.kinds
            .iter()
            .enumerate()
            .filter(move |(_, &k)| k == kind)
            .map(|(i, _)| i)
    }
}

/// A cylindric diagram given by its period and generalized partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CylindricDiagram {
    period: Period,
    lambda: GeneralizedPartition,
}

impl CylindricDiagram {
    pub fn new(period: Period, lambda: GeneralizedPartition) -> Result<Self> {
        let parts = lambda.parts();
        if parts.len() as i64 != period.m() {
            return Err(Error::InvalidPartition {
                parts: parts.to_vec(),
                reason: format!("length must equal m = {}", period.m()),
            });
        }
        if parts[0] - parts[parts.len() - 1] > period.ell() {
            return Err(Error::InvalidPartition {
                parts: parts.to_vec(),
                reason: format!("λ_1 - λ_m exceeds l = {}", period.ell()),
            });
        }
        Ok(CylindricDiagram { period, lambda })
    }

    /// Convenience constructor from `(m, ℓ)` and the parts of `λ`.
    pub fn from_parts(m: i64, ell: i64, parts: &[i64]) -> Result<Self> {
        Self::new(Period::new(m, ell)?, GeneralizedPartition::new(parts.to_vec())?)
    }

    pub fn period(&self) -> Period {
        self.period
    }

    pub fn lambda(&self) -> &GeneralizedPartition {
        &self.lambda
    }

    pub fn kappa(&self) -> usize {
        self.period.kappa()
    }

    pub fn project(&self, c: Cell) -> CylCell {
        project(c, self.period)
    }

    /// Class of `(a, b)`.
    pub fn cell(&self, a: i64, b: i64) -> CylCell {
        self.project(Cell::new(a, b))
    }

    pub fn contains(&self, x: CylCell) -> bool {
        x.b() <= self.lambda.part(x.a())
    }

    pub fn leq(&self, x: CylCell, y: CylCell) -> bool {
        leq_cyl(x, y, self.period)
    }

    pub fn shift(&self, x: CylCell, offset: Cell) -> CylCell {
        x.shift(offset, self.period)
    }

    /// Content residue `b - a mod κ`, independent of the representative.
    pub fn content(&self, x: CylCell) -> Result<usize> {
        if !self.contains(x) {
            return Err(Error::NotInDiagram(x.rep()));
        }
        Ok(self.residue_of(x))
    }

    pub(crate) fn residue_of(&self, x: CylCell) -> usize {
        (x.b() - x.a()).rem_euclid(self.kappa() as i64) as usize
    }

    /// `N(x) = max{k : x + k(0,ℓ) ∈ Y}`.
    pub fn generation(&self, x: CylCell) -> i64 {
        (self.lambda.part(x.a()) - x.b()).div_euclid(self.period.ell())
    }

    /// The `S` and `E` neighbours of `x` inside `Y`; every lower cover is one of them.
    pub fn lower_covers(&self, x: CylCell) -> impl Iterator<Item = CylCell> + '_ {
        [SOUTH, EAST]
            .into_iter()
            .map(move |d| self.shift(x, d))
            .filter(move |&y| self.contains(y))
    }

    /// The `N` and `W` neighbours; inside `Y` whenever `x` is.
    pub fn upper_covers(&self, x: CylCell) -> [CylCell; 2] {
        [
            self.shift(x, Cell::new(-1, 0)),
            self.shift(x, Cell::new(0, -1)),
        ]
    }

    /// Minimal elements of `Y`.
    pub fn minimal_cells(&self) -> Vec<CylCell> {
        (1..=self.period.m())
            .map(|a| self.cell(a, self.lambda.part(a)))
            .filter(|&x| self.lower_covers(x).next().is_none())
            .collect()
    }

    /// The bottom set with its max/min classification.
    pub fn bottom_set(&self) -> BottomSet {
        let k = self.kappa() as i64;
        let cells: Vec<CylCell> = (0..k)
            .map(|i| {
                // Highest column with content i in each row; the fibre is a chain.
                let candidates: Vec<CylCell> = (1..=self.period.m())
                    .map(|a| {
                        let top = self.lambda.part(a);
                        let b = top - (top - a - i).rem_euclid(k);
                        self.cell(a, b)
                    })
                    .collect();
                *candidates
                    .iter()
                    .find(|&&c| candidates.iter().all(|&o| self.leq(c, o)))
                    .expect("content fibre is totally ordered")
            })
            .collect();
        let kinds = cells
            .iter()
            .map(|&x| {
                let above = cells.iter().any(|&y| y != x && self.leq(x, y));
                let below = cells.iter().any(|&y| y != x && self.leq(y, x));
                match (above, below) {
                    (false, _) => BottomKind::Max,
                    (true, false) => BottomKind::Min,
                    (true, true) => BottomKind::Interior,
                }
            })
            .collect();
        BottomSet { cells, kinds }
    }

    /// All cells with generation `N(x) ≤ depth`, in the canonical linear
    /// extension order (minimal available cell first, ties by generation then
    /// representative).
    pub fn window(&self, depth: usize) -> Vec<CylCell> {
        let ell = self.period.ell();
        let members: HashSet<CylCell> = (1..=self.period.m())
            .flat_map(|a| {
                let top = self.lambda.part(a);
                ((top - (depth as i64 + 1) * ell + 1)..=top).map(move |b| (a, b))
            })
            .map(|(a, b)| self.cell(a, b))
            .collect();
        let mut taken = HashSet::with_capacity(members.len());
        let mut queue = BinaryHeap::new();
        let ready = |x: CylCell, taken: &HashSet<CylCell>| self.lower_covers(x).all(|y| taken.contains(&y));
        for &x in &members {
            if ready(x, &taken) {
                queue.push(Reverse((self.generation(x), x)));
            }
        }
        let mut out = Vec::with_capacity(members.len());
        while let Some(Reverse((_, x))) = queue.pop() {
            if !taken.insert(x) {
                continue;
            }
            out.push(x);
            for y in self.upper_covers(x) {
                if members.contains(&y) && !taken.contains(&y) && ready(y, &taken) {
                    queue.push(Reverse((self.generation(y), y)));
                }
            }
        }
        debug_assert_eq!(out.len(), members.len());
        out
    }

    /// Downward closure in `(Y, ≤)`.
    pub fn is_ideal(&self, s: &BTreeSet<CylCell>) -> bool {
        s.iter()
            .all(|&x| self.contains(x) && self.lower_covers(x).all(|y| s.contains(&y)))
    }

    /// Evaluates the ideal, interval-closure and skew conditions on `s`.
    pub fn skew_equivalences(&self, s: &BTreeSet<CylCell>) -> SkewReport {
        let p = self.period;
        let ideal = self.is_ideal(s);
        let interval_closed = s.iter().all(|&x| {
            s.iter().all(|&y| {
                !leq_cyl(x, y, p)
                    || interval_cyl(x, y, p)
                        .map(|iv| iv.iter().all(|z| s.contains(z)))
                        .unwrap_or(false)
            })
        });
        let skew = s.iter().all(|&x| {
            !s.contains(&x.shift(SOUTH_EAST, p))
                || (s.contains(&x.shift(SOUTH, p)) && s.contains(&x.shift(EAST, p)))
        });
        SkewReport {
            ideal,
            interval_closed,
            skew,
        }
    }

    /// Cells that can be added to the ideal `z` keeping it an ideal.
    pub fn addable_cells(&self, z: &Ideal) -> Vec<CylCell> {
        let mut depth = vec![0i64; self.period.m() as usize];
        for x in z.cells() {
            depth[(x.a() - 1) as usize] += 1;
        }
        (1..=self.period.m())
            .map(|a| self.cell(a, self.lambda.part(a) - depth[(a - 1) as usize]))
            .filter(|&x| self.lower_covers(x).all(|y| z.contains(y)))
            .collect()
    }

    /// Minimum of the content fibre `i` outside `z`.
    pub fn fibre_min_outside(&self, z: &Ideal, i: usize) -> CylCell {
        let k = self.kappa() as i64;
        let mut depth = vec![0i64; self.period.m() as usize];
        for x in z.cells() {
            depth[(x.a() - 1) as usize] += 1;
        }
        let candidates: Vec<CylCell> = (1..=self.period.m())
            .map(|a| {
                let top = self.lambda.part(a) - depth[(a - 1) as usize];
                self.cell(a, top - (top - a - i as i64).rem_euclid(k))
            })
            .collect();
        *candidates
            .iter()
            .find(|&&c| candidates.iter().all(|&o| self.leq(c, o)))
            .expect("content fibre is totally ordered")
    }

    /// All order ideals with exactly `n` cells, sorted.
    pub fn enumerate_ideals(&self, n: usize) -> Vec<Ideal> {
        self.ideals_up_to(n).pop().unwrap_or_default()
    }

    /// `I_0, I_1, …, I_n` by breadth-first growth of the ideal lattice.
    pub fn ideals_up_to(&self, n: usize) -> Vec<Vec<Ideal>> {
        let mut layers = vec![vec![Ideal::empty()]];
        for _ in 0..n {
            let mut next = BTreeSet::new();
            for z in layers.last().expect("non-empty") {
                for x in self.addable_cells(z) {
                    next.insert(z.with(x));
                }
            }
            layers.push(next.into_iter().collect());
        }
        layers
    }

    /// Inner generalized partition `μ` with `z = Y_λ ∖ Y_μ`.
    pub fn inner_partition(&self, z: &Ideal) -> GeneralizedPartition {
        let mut parts = self.lambda.parts().to_vec();
        for x in z.cells() {
            parts[(x.a() - 1) as usize] -= 1;
        }
        GeneralizedPartition(parts)
    }

    /// The ideal `Y_λ ∖ Y_μ`.
    pub fn ideal_from_inner(&self, mu: &GeneralizedPartition) -> Result<Ideal> {
        if mu.len() != self.lambda.len() {
            return Err(Error::InvalidPartition {
                parts: mu.parts().to_vec(),
                reason: "length differs from λ".into(),
            });
        }
        let mut cells = BTreeSet::new();
        for a in 1..=self.period.m() {
            let (top, bottom) = (self.lambda.part(a), mu.part(a));
            if bottom > top {
                return Err(Error::InvalidPartition {
                    parts: mu.parts().to_vec(),
                    reason: "μ not contained in λ".into(),
                });
            }
            cells.extend((bottom + 1..=top).map(|b| self.cell(a, b)));
        }
        let z = Ideal { cells };
        if !self.is_ideal(z.cells_set()) {
            return Err(Error::NotAnIdeal(z.to_string()));
        }
        Ok(z)
    }

    /// Builds an ideal from explicit cells, checking downward closure.
    pub fn ideal(&self, cells: impl IntoIterator<Item = CylCell>) -> Result<Ideal> {
        let z = Ideal {
            cells: cells.into_iter().collect(),
        };
        if !self.is_ideal(&z.cells) {
            return Err(Error::NotAnIdeal(z.to_string()));
        }
        Ok(z)
    }

    /// All linear extensions of the ideal, as cell sequences.
    pub fn standard_tableaux(&self, z: &Ideal) -> Vec<Tableau> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(z.len());
        let mut placed = HashSet::with_capacity(z.len());
        self.extend_tableaux(z, &mut prefix, &mut placed, &mut out);
        out
    }

    fn extend_tableaux(
        &self,
        z: &Ideal,
        prefix: &mut Vec<CylCell>,
        placed: &mut HashSet<CylCell>,
        out: &mut Vec<Tableau>,
    ) {
        if prefix.len() == z.len() {
            out.push(Tableau(prefix.clone()));
            return;
        }
        let ready: Vec<CylCell> = z
            .cells()
            .filter(|x| !placed.contains(x))
            .filter(|&x| self.lower_covers(x).all(|y| placed.contains(&y)))
            .collect();
        for x in ready {
            prefix.push(x);
            placed.insert(x);
            self.extend_tableaux(z, prefix, placed, out);
            placed.remove(&x);
            prefix.pop();
        }
    }

    /// One linear extension of `z`, choosing among minimal cells by `pick`.
    pub fn tableau_with<F>(&self, z: &Ideal, mut pick: F) -> Tableau
    where
        F: FnMut(&[CylCell]) -> usize,
    {
        let mut placed = HashSet::with_capacity(z.len());
        let mut seq = Vec::with_capacity(z.len());
        while seq.len() < z.len() {
            let ready: Vec<CylCell> = z
                .cells()
                .filter(|x| !placed.contains(x))
                .filter(|&x| self.lower_covers(x).all(|y| placed.contains(&y)))
                .collect();
            let x = ready[pick(&ready)];
            placed.insert(x);
            seq.push(x);
        }
        Tableau(seq)
    }

    /// A prefix of length `n` of a linear extension of the whole diagram.
    pub fn tableau_prefix<F>(&self, n: usize, mut pick: F) -> Tableau
    where
        F: FnMut(&[CylCell]) -> usize,
    {
        let mut z = Ideal::empty();
        let mut seq = Vec::with_capacity(n);
        for _ in 0..n {
            let ready = self.addable_cells(&z);
            let x = ready[pick(&ready)];
            z = z.with(x);
            seq.push(x);
        }
        Tableau(seq)
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            omega: [self.period.m(), -self.period.ell()],
            lambda: self.lambda.parts().to_vec(),
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        Self::from_parts(j.omega[0], -j.omega[1], &j.lambda)
    }
}

impl fmt::Display for CylindricDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω={} λ={:?}", self.period, self.lambda.parts())
    }
}

/// `{"omega": [m, -ell], "lambda": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub omega: [i64; 2],
    pub lambda: Vec<i64>,
}

/// A diagram together with the sorted canonical representatives of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    #[serde(flatten)]
    pub diagram: DiagramJson,
    pub cells: Vec<[i64; 2]>,
}

/// Results of the three checkable skew conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SkewReport {
    pub ideal: bool,
    pub interval_closed: bool,
    pub skew: bool,
}

impl SkewReport {
    pub fn all(&self) -> bool {
        self.ideal && self.interval_closed && self.skew
    }
}

/// A finite order ideal (cylindric skew diagram) of a fixed diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    cells: BTreeSet<CylCell>,
}

impl Ideal {
    pub fn empty() -> Self {
        Ideal::default()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, x: CylCell) -> bool {
        self.cells.contains(&x)
    }

    pub fn cells(&self) -> impl Iterator<Item = CylCell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cells_set(&self) -> &BTreeSet<CylCell> {
        &self.cells
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// `z ⊔ {x}`.
    pub fn with(&self, x: CylCell) -> Ideal {
        let mut cells = self.cells.clone();
        cells.insert(x);
        Ideal { cells }
    }

    pub fn to_json(&self, d: &CylindricDiagram) -> IdealJson {
        IdealJson {
            diagram: d.to_json(),
            cells: self.cells.iter().map(|x| [x.a(), x.b()]).collect(),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cells.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.cells.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A standard tableau on a finite ideal, stored as `T^{-1}(1), T^{-1}(2), …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau(pub Vec<CylCell>);

impl Tableau {
    pub fn cells(&self) -> &[CylCell] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `T(x)`, 1-based.
    pub fn label(&self, x: CylCell) -> Option<usize> {
        self.0.iter().position(|&y| y == x).map(|i| i + 1)
    }

    /// Content word `con(T^{-1}(1)), …, con(T^{-1}(n))`.
    pub fn word(&self, d: &CylindricDiagram) -> Vec<usize> {
        self.0.iter().map(|&x| d.residue_of(x)).collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal {
            cells: self.0.iter().copied().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: i64, ell: i64, parts: &[i64]) -> CylindricDiagram {
        CylindricDiagram::from_parts(m, ell, parts).unwrap()
    }

    #[test]
    fn rejects_degenerate_partitions() {
        assert!(CylindricDiagram::from_parts(2, 2, &[5, 2]).is_err());
        assert!(CylindricDiagram::from_parts(2, 2, &[1, 2]).is_err());
        assert!(CylindricDiagram::from_parts(3, 2, &[1, 1]).is_err());
        assert!(CylindricDiagram::from_parts(2, 2, &[-3, -5]).is_ok());
    }

    #[test]
    fn membership_and_content() {
        let d = diag(4, 5, &[5, 3, 3, 1]);
        let x = d.cell(2, -4);
        assert!(d.contains(x));
        assert_eq!(d.content(x).unwrap(), 3);
        assert!(!d.contains(d.cell(2, 4)));
        assert!(d.contains(d.shift(x, Cell::new(-1, 0))));
        assert_eq!(d.content(d.cell(1, 1)).unwrap(), 0);
        assert_eq!(d.content(d.project(x.rep() + d.period().omega())).unwrap(), 3);
        assert!(d.content(d.cell(2, 4)).is_err());
    }

    #[test]
    fn single_row_bottom_set() {
        for n in 2..7 {
            let d = diag(1, n - 1, &[n]);
            let g = d.bottom_set();
            assert_eq!(g.len(), n as usize);
            let row: BTreeSet<_> = (1..=n).map(|b| d.cell(1, b)).collect();
            assert_eq!(g.cells().iter().copied().collect::<BTreeSet<_>>(), row);
            assert_eq!(g.maximal().count(), 1);
            assert_eq!(g.minimal().count(), 1);
        }
    }

    // The shaded cells of the drawn content picture, ω = (4,-5), row ends 9,7,7,5.
    #[test]
    fn drawn_bottom_set() {
        let d = diag(4, 5, &[9, 7, 7, 5]);
        let g = d.bottom_set();
        let expected: BTreeSet<_> = [(1, 7), (1, 8), (1, 9), (2, 7), (3, 5), (3, 6), (3, 7), (4, 4), (4, 5)]
            .into_iter()
            .map(|(a, b)| d.cell(a, b))
            .collect();
        assert_eq!(g.cells().iter().copied().collect::<BTreeSet<_>>(), expected);
        assert_eq!(g.maximal().count(), 3);
    }

    #[test]
    fn bottom_set_is_fibre_minimum() {
        for d in [diag(4, 5, &[5, 4, 4, 2]), diag(2, 2, &[4, 2]), diag(2, 3, &[5, 4])] {
            let g = d.bottom_set();
            let w = d.window(2);
            for i in 0..d.kappa() {
                let b = g.cell(i);
                assert_eq!(d.content(b).unwrap(), i);
                for &x in &w {
                    if d.content(x).unwrap() == i {
                        assert!(d.leq(b, x));
                    }
                }
            }
            assert_eq!(g.maximal().count(), g.minimal().count());
        }
    }

    #[test]
    fn window_is_a_linear_extension() {
        let d = diag(4, 5, &[5, 3, 3, 1]);
        let w = d.window(2);
        assert_eq!(w.len(), 4 * 5 * 3);
        let mut seen = BTreeSet::new();
        for &x in &w {
            seen.insert(x);
            assert!(d.is_ideal(&seen));
        }
        assert!(w.contains(&d.cell(2, -4)));
        let scan = (1..=4)
            .flat_map(|a| (-30..=5).map(move |b| (a, b)))
            .map(|(a, b)| d.cell(a, b))
            .filter(|&x| d.contains(x) && !d.contains(d.shift(x, Cell::new(0, 5))))
            .count();
        assert_eq!(d.window(0).len(), scan);
        let w1: BTreeSet<_> = d.window(1).into_iter().collect();
        assert!(d.window(0).iter().all(|x| w1.contains(x)));
    }

    #[test]
    fn ideal_basics() {
        let d = diag(2, 2, &[4, 2]);
        assert!(d.is_ideal(&BTreeSet::new()));
        for x in d.minimal_cells() {
            assert!(d.is_ideal(&[x].into_iter().collect()));
        }
        assert_eq!(d.enumerate_ideals(0), vec![Ideal::empty()]);
        assert_eq!(d.enumerate_ideals(1).len(), d.minimal_cells().len());
    }

    #[test]
    fn skew_counterexample() {
        let d = diag(2, 2, &[4, 2]);
        let x = d.cell(1, 3);
        let s: BTreeSet<_> = [x, d.shift(x, SOUTH_EAST)].into_iter().collect();
        let r = d.skew_equivalences(&s);
        assert_eq!((r.ideal, r.interval_closed, r.skew), (false, false, false));
    }

    #[test]
    fn displayed_skew_diagram() {
        // λ = (5,3,3,1), μ = (2,1,0,-2) on ω = (4,-5).
        let d = diag(4, 5, &[5, 3, 3, 1]);
        let mu = GeneralizedPartition::new(vec![2, 1, 0, -2]).unwrap();
        let z = d.ideal_from_inner(&mu).unwrap();
        assert_eq!(z.len(), 3 + 2 + 3 + 3);
        assert!(d.skew_equivalences(z.cells_set()).all());
    }

    #[test]
    fn ideals_agree_with_skew_conditions() {
        let d = diag(2, 2, &[4, 2]);
        for layer in d.ideals_up_to(6) {
            for z in layer {
                assert!(d.skew_equivalences(z.cells_set()).all(), "{z}");
                assert_eq!(d.ideal_from_inner(&d.inner_partition(&z)).unwrap(), z);
            }
        }
    }

    // Ideal ⇒ interval closed ⇒ skew property. The skew property alone does
    // not force interval closure ({x, x+(0,2)} is a counterexample), so only
    // the implications are asserted.
    #[test]
    fn random_subsets_skew_implications() {
        use rand::{seq::SliceRandom, SeedableRng};
        let d = diag(2, 2, &[4, 2]);
        let w = d.window(2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let s: BTreeSet<_> = w.choose_multiple(&mut rng, 5).copied().collect();
            let r = d.skew_equivalences(&s);
            if r.ideal {
                assert!(r.interval_closed);
            }
            if r.interval_closed {
                assert!(r.skew, "{s:?}");
            }
        }
    }

    #[test]
    fn tableaux_counts() {
        let d = diag(1, 3, &[0]);
        // Y is a chain when m = 1 and the row is long enough.
        let z = d.enumerate_ideals(3).pop().unwrap();
        assert_eq!(d.standard_tableaux(&z).len(), 1);
        let d = diag(2, 3, &[5, 4]);
        let mins = d.minimal_cells();
        assert_eq!(mins.len(), 2);
        let z = d.ideal(mins).unwrap();
        assert_eq!(d.standard_tableaux(&z).len(), 2);
    }

    #[test]
    fn content_fibres_are_chains_and_covers_shift_content() {
        for d in [diag(4, 5, &[5, 4, 4, 2]), diag(2, 3, &[5, 4]), diag(1, 1, &[0])] {
            let k = d.kappa() as i64;
            let w = d.window(2);
            for &x in &w {
                for &y in &w {
                    let diff = (d.content(x).unwrap() as i64 - d.content(y).unwrap() as i64)
                        .rem_euclid(k);
                    if diff == 0 || diff == 1 || diff == k - 1 {
                        assert!(d.leq(x, y) || d.leq(y, x));
                    }
                }
                for y in d.lower_covers(x) {
                    let diff = (d.content(x).unwrap() as i64 - d.content(y).unwrap() as i64)
                        .rem_euclid(k);
                    assert!(diff == 1 || diff == k - 1);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let d = diag(2, 2, &[4, 2]);
        let s = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(s, r#"{"omega":[2,-2],"lambda":[4,2]}"#);
        let back: DiagramJson = serde_json::from_str(&s).unwrap();
        assert_eq!(CylindricDiagram::from_json(&back).unwrap(), d);
        let z = d.enumerate_ideals(2)[0].clone();
        let j = serde_json::to_value(z.to_json(&d)).unwrap();
        assert_eq!(j["omega"], serde_json::json!([2, -2]));
        assert_eq!(j["cells"].as_array().unwrap().len(), 2);
    }
}
