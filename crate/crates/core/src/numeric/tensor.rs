use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::diagrams::InvariantElement;
use crate::error::{Error, Result};

/// Largest dense realization, in entries.
pub const DENSE_CAP: u128 = 1_000_000;

/// Sparse exact tensor with every axis of the same dimension. Operators on
/// `p` slots have `2p` axes, outputs first; kets have one axis per leg.
/// No zero is ever stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactTensor {
    shape: Vec<usize>,
    entries: BTreeMap<Vec<usize>, BigRational>,
}

fn dense_size(shape: &[usize]) -> Result<u128> {
    let size = shape.iter().try_fold(1u128, |acc, &d| acc.checked_mul(d as u128));
    match size {
        Some(s) if s <= DENSE_CAP => Ok(s),
        Some(s) => Err(Error::TooLarge(s, DENSE_CAP)),
        None => Err(Error::TooLarge(u128::MAX, DENSE_CAP)),
    }
}

impl ExactTensor {
    pub fn zeros(shape: Vec<usize>) -> Self {
        ExactTensor {
            shape,
            entries: BTreeMap::new(),
        }
    }

    /// Identity operator on `p` slots of dimension `n`.
    pub fn identity(p: usize, n: usize) -> Result<Self> {
        let mut t = ExactTensor::zeros(vec![n; 2 * p]);
        dense_size(&t.shape)?;
        for idx in multi_indices(n, p) {
            let mut full = idx.clone();
            full.extend_from_slice(&idx);
            t.entries.insert(full, BigRational::from_integer(1.into()));
        }
        Ok(t)
    }

    pub fn from_entries<I>(shape: Vec<usize>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, BigRational)>,
    {
        let mut t = ExactTensor::zeros(shape);
        for (idx, v) in entries {
            t.check_index(&idx)?;
            t.accumulate(idx, v);
        }
        Ok(t)
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.shape.len() || idx.iter().zip(&self.shape).any(|(i, d)| i >= d) {
            return Err(Error::OutOfRange(format!("index {idx:?} for shape {:?}", self.shape)));
        }
        Ok(())
    }

    fn accumulate(&mut self, idx: Vec<usize>, v: BigRational) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    /// Common axis dimension; 0 for a scalar.
    pub fn dim(&self) -> usize {
        self.shape.first().copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[usize]) -> BigRational {
        self.entries.get(idx).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{what}: {:?} vs {:?}",
                self.shape, other.shape
            )))
        }
    }

    fn operator_slots(&self, what: &str) -> Result<usize> {
        if self.rank() % 2 == 1 {
            return Err(Error::DimensionMismatch(format!(
                "{what} needs an even number of axes, got {}",
                self.rank()
            )));
        }
        Ok(self.rank() / 2)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other, "add")?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.accumulate(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ExactTensor::zeros(self.shape.clone());
        }
        ExactTensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Operator product `self · other` (`other` acts first).
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        let p = self.operator_slots("matmul")?;
        self.check_shape(other, "matmul")?;
        let mut by_out: HashMap<&[usize], Vec<(&[usize], &BigRational)>> = HashMap::new();
        for (k, v) in &other.entries {
            by_out.entry(&k[..p]).or_default().push((&k[p..], v));
        }
        let mut out = ExactTensor::zeros(self.shape.clone());
        for (k, a) in &self.entries {
            if let Some(row) = by_out.get(&k[p..]) {
                for (inner, b) in row {
                    let mut idx = k[..p].to_vec();
                    idx.extend_from_slice(inner);
                    out.accumulate(idx, a * *b);
                }
            }
        }
        Ok(out)
    }

    /// Operator acting on a ket with as many legs as it has slots.
    pub fn apply(&self, ket: &Self) -> Result<Self> {
        let p = self.operator_slots("apply")?;
        if ket.rank() != p || ket.dim() != self.dim() && p > 0 {
            return Err(Error::DimensionMismatch(format!(
                "operator {:?} on ket {:?}",
                self.shape, ket.shape
            )));
        }
        let mut out = ExactTensor::zeros(ket.shape.clone());
        for (k, a) in &self.entries {
            if let Some(b) = ket.entries.get(&k[p..]) {
                out.accumulate(k[..p].to_vec(), a * b);
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<BigRational> {
        let p = self.operator_slots("trace")?;
        Ok(self
            .entries
            .iter()
            .filter(|(k, _)| k[..p] == k[p..])
            .map(|(_, v)| v.clone())
            .fold(BigRational::zero(), |a, b| a + b))
    }

    /// Trace out the given operator slots (0-based).
    pub fn partial_trace(&self, slots: &[usize]) -> Result<Self> {
        let p = self.operator_slots("partial_trace")?;
        if slots.iter().any(|&s| s >= p) {
            return Err(Error::OutOfRange(format!("slots {slots:?} of {p}")));
        }
        let keep: Vec<usize> = (0..p).filter(|s| !slots.contains(s)).collect();
        let axes: Vec<usize> = keep.iter().copied().chain(keep.iter().map(|s| s + p)).collect();
        let mut out = ExactTensor::zeros(axes.iter().map(|&a| self.shape[a]).collect());
        for (k, v) in &self.entries {
            if slots.iter().all(|&s| k[s] == k[s + p]) {
                out.accumulate(axes.iter().map(|&a| k[a]).collect(), v.clone());
            }
        }
        Ok(out)
    }

    /// New axis `i` is old axis `order[i]`.
    pub fn permute_axes(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.rank()];
        if order.len() != self.rank() || order.iter().any(|&a| a >= self.rank() || std::mem::replace(&mut seen[a], true)) {
            return Err(Error::OutOfRange(format!("{order:?} is not an axis order for rank {}", self.rank())));
        }
        Ok(ExactTensor {
            shape: order.iter().map(|&a| self.shape[a]).collect(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (order.iter().map(|&a| k[a]).collect(), v.clone()))
                .collect(),
        })
    }

    /// Full contraction `Σ self·other` over all axes (real entries).
    pub fn inner_product(&self, other: &Self) -> Result<BigRational> {
        self.check_shape(other, "inner_product")?;
        Ok(self
            .entries
            .iter()
            .filter_map(|(k, a)| other.entries.get(k).map(|b| a * b))
            .fold(BigRational::zero(), |a, b| a + b))
    }

    /// Dense matrix with the first `row_axes` axes as the row index.
    pub fn to_matrix(&self, row_axes: usize) -> Result<Vec<Vec<BigRational>>> {
        dense_size(&self.shape)?;
        let rows = flat_size(&self.shape[..row_axes]);
        let cols = flat_size(&self.shape[row_axes..]);
        let mut m = vec![vec![BigRational::zero(); cols]; rows];
        for (k, v) in &self.entries {
            m[flatten(&k[..row_axes], &self.shape[..row_axes])][flatten(&k[row_axes..], &self.shape[row_axes..])] =
                v.clone();
        }
        Ok(m)
    }

    /// Row-major dense complex vector, for float-mode checks.
    pub fn to_complex_vector(&self) -> Result<Vec<Complex64>> {
        let size = dense_size(&self.shape)? as usize;
        let mut v = vec![Complex64::new(0.0, 0.0); size];
        for (k, x) in &self.entries {
            v[flatten(k, &self.shape)] = Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        Ok(v)
    }

    pub(crate) fn insert_raw(&mut self, idx: Vec<usize>, v: BigRational) {
        self.accumulate(idx, v);
    }
}

fn flat_size(shape: &[usize]) -> usize {
    shape.iter().product()
}

fn flatten(idx: &[usize], shape: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// All multi-indices of length `len` over `0..n`, row-major.
pub(crate) fn multi_indices(n: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut f| {
        let mut idx = vec![0; len];
        for slot in idx.iter_mut().rev() {
            *slot = f % n;
            f /= n;
        }
        idx
    })
}

/// Realize an element at `N = n`. Operators get axes `[out_0.., in_0..]`,
/// kets one axis per leg; every δ-line forces equal indices at its two
/// endpoints.
pub fn evaluate(element: &InvariantElement, n: u32) -> Result<ExactTensor> {
    let sig = element.signature();
    let n_usize = n as usize;
    let shape = vec![n_usize; sig.n_endpoints()];
    dense_size(&shape)?;
    let ports = sig.ports();
    let parts: Vec<ExactTensor> = element
        .terms()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(d, c)| {
            let c = c
                .eval_at(n as i64)?
                .as_rational()
                .ok_or(Error::RadicalComparisonUnsupported)?;
            let edges = d.edges(&ports);
            let mut t = ExactTensor::zeros(shape.clone());
            for values in multi_indices(n_usize, edges.len()) {
                let mut idx = vec![0; shape.len()];
                for (&(a, b), &v) in edges.iter().zip(&values) {
                    idx[a] = v;
                    idx[b] = v;
                }
                t.insert_raw(idx, c.clone());
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    parts
        .into_iter()
        .try_fold(ExactTensor::zeros(shape.clone()), |acc, t| acc.add(&t))
}
