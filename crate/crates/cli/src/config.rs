//! Parsing and validation of the command-line inputs.

use std::fmt;
use std::str::FromStr;

use cylindric_core::verify::Suite;
use cylindric_core::{CylCell, CylindricDiagram, Ideal};

/// Bad user input; the process exits with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<cylindric_core::Error> for InputError {
    fn from(e: cylindric_core::Error) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "svg" => Ok(Format::Svg),
            _ => Err(format!("unknown format {s:?} (text, json, dot, svg)")),
        }
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| format!("not an integer: {p:?}")))
        .collect()
}

/// `M,-L` with `M, L ≥ 1`.
pub fn parse_omega(s: &str) -> Result<(i64, i64), String> {
    match parse_ints(s)?.as_slice() {
        &[m, neg_ell] if m >= 1 && neg_ell <= -1 => Ok((m, -neg_ell)),
        _ => Err(format!("omega must be M,-L with M,L >= 1, got {s:?}")),
    }
}

/// Comma-separated suite names; the empty string selects none.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, String> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(|n| n.trim().parse::<Suite>()).collect()
}

/// Cells as `a,b;a,b;...`.
pub fn parse_cells(s: &str) -> Result<Vec<(i64, i64)>, String> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(';')
        .map(|c| match parse_ints(c)?.as_slice() {
            &[a, b] => Ok((a, b)),
            _ => Err(format!("cell must be a,b, got {c:?}")),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Config {
    pub omega: Option<(i64, i64)>,
    pub lambda: Option<Vec<i64>>,
    pub depth: usize,
    pub max_ideal: usize,
    pub suites: Vec<Suite>,
    pub format: Format,
    pub seed: u64,
}

impl Config {
    /// The diagram named by `--omega` and `--lambda`; both or neither.
    pub fn diagram(&self) -> Result<Option<CylindricDiagram>, InputError> {
        match (&self.omega, &self.lambda) {
            (Some((m, ell)), Some(parts)) => {
                if parts.len() as i64 != *m {
                    return Err(InputError(format!("lambda needs {m} parts, got {}", parts.len())));
                }
                Ok(Some(CylindricDiagram::from_parts(*m, *ell, parts)?))
            }
            (None, None) => Ok(None),
            _ => Err(InputError("--omega and --lambda go together".into())),
        }
    }

    pub fn require_diagram(&self) -> Result<CylindricDiagram, InputError> {
        self.diagram()?
            .ok_or_else(|| InputError("this command needs --omega and --lambda".into()))
    }
}

pub fn ideal_from_cells(d: &CylindricDiagram, cells: &[(i64, i64)]) -> Result<Ideal, InputError> {
    let cells: Vec<CylCell> = cells.iter().map(|&(a, b)| d.cell(a, b)).collect();
    if let Some(x) = cells.iter().find(|&&x| !d.contains(x)) {
        return Err(InputError(format!("cell {x} is not in the diagram")));
    }
    Ok(d.ideal(cells)?)
}
