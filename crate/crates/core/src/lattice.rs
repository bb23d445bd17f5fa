//! The lattice `Z²`, the cylinder `Z²/Zω` and their partial orders.
//!
//! Cells are ordered "south-east is smaller": `(a, b) ≤ (a', b')` iff
//! `a ≥ a'` and `b ≥ b'`. A class of the cylinder is stored by its unique
//! representative with row in `[1, m]`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The period `ω = (m, -ℓ)` of a cylinder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Period {
    m: i64,
    ell: i64,
}

impl Period {
    pub fn new(m: i64, ell: i64) -> Result<Self> {
        if m < 1 || ell < 1 {
            return Err(Error::InvalidPeriod { m, ell });
        }
        Ok(Period { m, ell })
    }

    /// Row period.
    pub fn m(self) -> i64 {
        self.m
    }

    /// Column period; the translation vector is `(m, -ell)`.
    pub fn ell(self) -> i64 {
        self.ell
    }

    /// Number of content residues, `m + ℓ`.
    pub fn kappa(self) -> usize {
        (self.m + self.ell) as usize
    }

    /// The translation vector `ω` as a cell offset.
    pub fn omega(self) -> Cell {
        Cell::new(self.m, -self.ell)
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, -self.ell)
    }
}

/// A point of `Z²`: row `a`, column `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub a: i64,
    pub b: i64,
}

impl Cell {
    pub const fn new(a: i64, b: i64) -> Self {
        Cell { a, b }
    }

    pub fn scale(self, k: i64) -> Cell {
        Cell::new(self.a * k, self.b * k)
    }
}

impl Add for Cell {
    type Output = Cell;
    fn add(self, rhs: Cell) -> Cell {
        Cell::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Cell {
    type Output = Cell;
    fn sub(self, rhs: Cell) -> Cell {
        Cell::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A class `x + Zω` of the cylinder, stored by its representative with
/// row in `[1, m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CylCell {
    rep: Cell,
}

impl CylCell {
    /// Canonical representative.
    pub fn rep(self) -> Cell {
        self.rep
    }

    pub fn a(self) -> i64 {
        self.rep.a
    }

    pub fn b(self) -> i64 {
        self.rep.b
    }

    /// The class of `rep + offset`.
    pub fn shift(self, offset: Cell, p: Period) -> CylCell {
        project(self.rep + offset, p)
    }
}

impl fmt::Display for CylCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// The natural projection `Z² → C_ω`.
pub fn project(c: Cell, p: Period) -> CylCell {
    let a = (c.a - 1).rem_euclid(p.m) + 1;
    let k = (c.a - a) / p.m;
    CylCell {
        rep: c - p.omega().scale(k),
    }
}

/// The product order on `Z²`.
pub fn leq_cells(x: Cell, y: Cell) -> bool {
    x.a >= y.a && x.b >= y.b
}

/// The induced order on the cylinder: some lift of `x` lies below `y.rep`.
///
/// A shift `x.rep + jω ≤ y.rep` needs `x.a + jm ≥ y.a` and
/// `x.b - jℓ ≥ y.b`, so the admissible `j` form an integer interval.
pub fn leq_cyl(x: CylCell, y: CylCell, p: Period) -> bool {
    let (lo, hi) = lift_range(x, y, p);
    lo <= hi
}

fn lift_range(x: CylCell, y: CylCell, p: Period) -> (i64, i64) {
    let lo = div_ceil(y.rep.a - x.rep.a, p.m);
    let hi = (x.rep.b - y.rep.b).div_euclid(p.ell);
    (lo, hi)
}

fn div_ceil(n: i64, d: i64) -> i64 {
    -((-n).div_euclid(d))
}

/// All `z` with `x ≤ z ≤ y` in the cylinder.
pub fn interval_cyl(x: CylCell, y: CylCell, p: Period) -> Result<BTreeSet<CylCell>> {
    let (lo, hi) = lift_range(x, y, p);
    if lo > hi {
        return Err(Error::NotComparable {
            x: x.rep,
            y: y.rep,
        });
    }
    let mut out = BTreeSet::new();
    for j in lo..=hi {
        let top = x.rep + p.omega().scale(j);
        for a in y.rep.a..=top.a {
            for b in y.rep.b..=top.b {
                out.insert(project(Cell::new(a, b), p));
            }
        }
    }
    Ok(out)
}
