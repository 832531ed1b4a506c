//! Permutations of `0..n` in one-line notation, with 1-based cycle-notation
//! text I/O.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidDecomposition(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Perm(images))
    }

    /// Build from 1-based cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<Option<usize>> = vec![None; n];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidDecomposition(format!(
                        "point outside 1..={n} in {cyc:?}"
                    )));
                }
                if images[a - 1].replace(b - 1).is_some() {
                    return Err(Error::InvalidDecomposition(format!(
                        "point {a} appears in two cycles"
                    )));
                }
            }
        }
        Perm::from_images(images.iter().enumerate().map(|(i, x)| x.unwrap_or(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Direct sum: `other` acts on the points after `self`'s.
    pub fn concat(&self, other: &Perm) -> Perm {
        let off = self.len();
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&i| i + off)).collect())
    }

    /// Disjoint cycles including fixed points, each starting at its smallest
    /// element, sorted by that element (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.0[i];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn moved_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &x)| i != x).count()
    }

    pub fn sign(&self) -> i64 {
        if (self.len() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of `0..n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Perm(cur.clone())];
        // next lexicographic permutation
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Perm(cur.clone()));
        }
    }

    /// Permutations of the given points, acting as identity elsewhere.
    pub fn all_on(n: usize, points: &[usize]) -> Vec<Perm> {
        Perm::all(points.len())
            .into_iter()
            .map(|p| {
                let mut images: Vec<usize> = (0..n).collect();
                for (i, &a) in points.iter().enumerate() {
                    images[a] = points[p.0[i]];
                }
                Perm(images)
            })
            .collect()
    }

    /// 1-based cycle notation with explicit fixed points, e.g. `(1 2)(3)`.
    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }

    /// Parse 1-based cycle notation; `n` is the degree.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
        let cycles = parse_cycle_list(s)?;
        Perm::from_cycles(n, &cycles)
    }
}

/// Parse 1-based cycle notation into a list of cycles without checking coverage.
pub fn parse_cycle_list(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("expected '(...)' in {s:?}")))?;
        let cyc = body
            .0
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if cyc.is_empty() {
            return Err(Error::Parse(format!("empty cycle in {s:?}")));
        }
        cycles.push(cyc);
        rest = body.1.trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in self.cycles() {
            let parts: Vec<String> = cyc.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Perm> {
        let cycles = parse_cycle_list(s)?;
        let n = cycles.iter().flatten().copied().max().unwrap_or(0);
        Perm::from_cycles(n, &cycles)
    }
}
