//! Young shapes, standard tableaux, and the projectors and dimensions
//! attached to them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{antisymmetrizer, symmetrizer};
use crate::coefficients::{rat, RadicalCoefficient, RationalFunction};
use crate::diagrams::{InvariantElement, LegSignature};
use crate::error::{Error, Result};

/// Weakly decreasing positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungShape(Vec<usize>);

impl YoungShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.iter().any(|&r| r == 0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{rows:?} is not a partition")));
        }
        Ok(YoungShape(rows))
    }

    pub fn empty() -> Self {
        YoungShape(Vec::new())
    }

    /// A single column of `len` boxes.
    pub fn column(len: usize) -> Self {
        YoungShape(vec![1; len])
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        YoungShape((0..cols).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// Product over boxes of `(N + col - row)` divided by the product of hook
    /// lengths.
    pub fn dimension(&self) -> RationalFunction {
        let conj = self.conjugate();
        let mut contents = Vec::new();
        let mut hooks = 1i64;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                contents.push(c as i64 - r as i64);
                hooks *= ((len - c - 1) + (conj.0[c] - r - 1) + 1) as i64;
            }
        }
        RationalFunction::from_factors(rat(1) / rat(hooks), &contents, &[])
    }

    /// Dimension at `N = n`, after removing full columns of length `n`.
    pub fn dimension_at(&self, n: usize) -> Result<num_rational::BigRational> {
        self.strip_full_columns(n).dimension().eval_at(n as i64)
    }

    /// Drop columns of length `n`, which carry the trivial representation.
    pub fn strip_full_columns(&self, n: usize) -> Self {
        if self.0.len() < n || n == 0 {
            return self.clone();
        }
        let full = self.0[n - 1];
        YoungShape(self.0.iter().map(|&r| r - full).filter(|&r| r > 0).collect())
    }

    /// All standard fillings.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); self.0.len()];
        fill(self, &mut rows, 1, &mut out);
        out
    }
}

fn fill(shape: &YoungShape, rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<StandardTableau>) {
    if next > shape.size() {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..rows.len() {
        let c = rows[r].len();
        if c < shape.0[r] && (r == 0 || rows[r - 1].len() > c) {
            rows[r].push(next);
            fill(shape, rows, next + 1, out);
            rows[r].pop();
        }
    }
}

impl TryFrom<Vec<usize>> for YoungShape {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        YoungShape::new(v)
    }
}

impl From<YoungShape> for Vec<usize> {
    fn from(s: YoungShape) -> Self {
        s.0
    }
}

impl fmt::Display for YoungShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for YoungShape {
    type Err = Error;
    /// `"[2,1]"`; `"[]"` is the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("shape {s:?} must be bracketed")))?;
        let rows = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        YoungShape::new(rows)
    }
}

/// Entries `1..=m`, strictly increasing along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungShape::new(rows.iter().map(Vec::len).collect())?;
        let m = shape.size();
        let mut seen = vec![false; m + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > m || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse(format!("tableau entries must be 1..={m} once each")));
            }
        }
        let row_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let col_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        if !(row_ok && col_ok) {
            return Err(Error::Parse("tableau is not standard".into()));
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungShape {
        YoungShape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// `α (Π row symmetrizers) ∘ (Π column antisymmetrizers)` with `α` fixed
    /// by idempotency.
    pub fn projector(&self) -> Result<InvariantElement> {
        let m = self.size();
        let zero_based = |v: &Vec<usize>| v.iter().map(|x| x - 1).collect::<Vec<_>>();
        let mut e = InvariantElement::identity(LegSignature::tensor_power(m))?;
        for row in self.rows.iter().filter(|r| r.len() > 1) {
            e = e.compose(&symmetrizer(&zero_based(row), m)?)?;
        }
        for col in self.columns().iter().filter(|c| c.len() > 1) {
            e = e.compose(&antisymmetrizer(&zero_based(col), m)?)?;
        }
        let c = proportionality(&e.compose(&e)?, &e)?;
        Ok(e.scale(&c.inv()?))
    }
}

/// `c` with `lhs = c * rhs`.
fn proportionality(lhs: &InvariantElement, rhs: &InvariantElement) -> Result<RadicalCoefficient> {
    let (d, r) = rhs.terms().next().ok_or(Error::NotProportional)?;
    let c = lhs.coeff(d).div(r)?;
    if c.is_zero() || *lhs != rhs.scale(&c) {
        return Err(Error::NotProportional);
    }
    Ok(c)
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl FromStr for StandardTableau {
    type Err = Error;
    /// Rows separated by `/`, entries by whitespace: `"1 2 / 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }
}

pub fn young_projector(t: &StandardTableau) -> Result<InvariantElement> {
    t.projector()
}

pub fn irrep_dimension(shape: &YoungShape) -> RationalFunction {
    shape.dimension()
}
