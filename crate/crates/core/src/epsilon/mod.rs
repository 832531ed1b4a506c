//! Levi-Civita calculus at fixed `N`, Pieri-rule shape enumeration and
//! transient-singlet bookkeeping.
//!
//! `ε` is stored as the raw integer symbol. Every identity here pairs two
//! `ε`, so the birdtrack normalization enters as one exact factor `1/N!` per
//! pair and the phases cancel. A single `ε` on its own is phase-unnormalized.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::diagrams::{InvariantElement, LegSignature, Perm};
use crate::error::{Error, Result};
use crate::numeric::{
    correlator_matrix, epsilon_correlator, evaluate, multi_indices, sample_special_unitary, ExactTensor,
};
use crate::singlets::SingletOperator;
use crate::symmetrizers::{antisymmetrizer, YoungShape};

fn factorial(n: usize) -> BigRational {
    BigRational::from_integer((1..=n as u64).product::<u64>().into())
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

/// One solution of `m - aN = n - bN = k >= 0` with at least one `ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransientParams {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub alpha: usize,
}

/// All shapes from adding a vertical strip of `n - 1` boxes (one antifundamental
/// factor) to `shape`, keeping at most `n` rows.
pub fn pieri_add_antifundamental(shape: &YoungShape, n: usize) -> Vec<YoungShape> {
    if n < 2 || shape.num_rows() > n {
        return Vec::new();
    }
    let strip = n - 1;
    let mut rows = shape.rows().to_vec();
    rows.resize(n, 0);
    let mut out = Vec::new();
    // choose the rows that receive a box: n - 1 of n candidate rows
    for skip in (0..n).rev() {
        let mut new_rows = rows.clone();
        for (r, len) in new_rows.iter_mut().enumerate() {
            if r != skip {
                *len += 1;
            }
        }
        let valid = new_rows.windows(2).all(|w| w[0] >= w[1]);
        if valid {
            new_rows.retain(|&l| l > 0);
            if let Ok(s) = YoungShape::new(new_rows) {
                debug_assert_eq!(s.size(), shape.size() + strip);
                out.push(s);
            }
        }
    }
    out
}

/// Shapes from adding one box (one fundamental factor), at most `n` rows.
pub fn add_fundamental(shape: &YoungShape, n: usize) -> Vec<YoungShape> {
    let rows = shape.rows();
    (0..=rows.len())
        .filter(|&r| r < n && (r == 0 || rows[r - 1] > rows.get(r).copied().unwrap_or(0)))
        .map(|r| {
            let mut new_rows = rows.to_vec();
            if r == new_rows.len() {
                new_rows.push(1);
            } else {
                new_rows[r] += 1;
            }
            YoungShape::new(new_rows).expect("adding a corner box keeps a partition")
        })
        .collect()
}

/// Irreducible content of `V^{⊗m} ⊗ V*^{⊗n}` at `N = n_param`, with
/// multiplicity: `m` single boxes, then `n` Pieri strips.
pub fn lr_decomposition(m: usize, n: usize, n_param: usize) -> Vec<YoungShape> {
    let mut shapes = vec![YoungShape::empty()];
    for _ in 0..m {
        shapes = shapes.iter().flat_map(|s| add_fundamental(s, n_param)).collect();
    }
    for _ in 0..n {
        shapes = shapes.iter().flat_map(|s| pieri_add_antifundamental(s, n_param)).collect();
    }
    shapes.sort_by(|a, b| b.rows().cmp(a.rows()));
    shapes
}

/// `Σ dim` over [`lr_decomposition`], full columns stripped first.
pub fn lr_total_dimension(m: usize, n: usize, n_param: usize) -> Result<BigRational> {
    lr_decomposition(m, n, n_param)
        .iter()
        .map(|s| s.dimension_at(n_param))
        .try_fold(BigRational::from_integer(0.into()), |acc, d| Ok(acc + d?))
}

pub fn transient_singlet_params(m: usize, n: usize, n_param: usize) -> Vec<TransientParams> {
    if n_param < 2 {
        return Vec::new();
    }
    (0..=m / n_param)
        .filter_map(|a| {
            let k = m - a * n_param;
            let rest = n.checked_sub(k)?;
            if rest % n_param != 0 {
                return None;
            }
            let b = rest / n_param;
            (a + b >= 1).then_some(TransientParams {
                a,
                b,
                k,
                alpha: (a + b) * (n_param - 1) + k,
            })
        })
        .collect()
}

/// Rank-`n` Levi-Civita symbol with entries in {-1, 0, 1}.
pub fn epsilon_tensor(n: usize) -> Result<ExactTensor> {
    if n < 2 {
        return Err(Error::BadBlockSize(format!("epsilon needs N >= 2, got {n}")));
    }
    ExactTensor::from_entries(
        vec![n; n],
        Perm::all(n)
            .into_iter()
            .map(|p| (p.images().to_vec(), BigRational::from_integer(p.sign().into()))),
    )
}

/// `(1/N!) ε ε†` as an operator on `V^{⊗N}`.
pub fn epsilon_pair_operator(n: usize) -> Result<ExactTensor> {
    let eps = epsilon_tensor(n)?;
    let scale = factorial(n).recip();
    let entries = eps.entries().flat_map(|(o, a)| {
        eps.entries().map(move |(i, b)| {
            let mut idx = o.clone();
            idx.extend_from_slice(i);
            (idx, a * b)
        })
    });
    Ok(ExactTensor::from_entries(vec![n; 2 * n], entries)?.scale(&scale))
}

/// Result of one Leibniz translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translated {
    /// Input axes with the block removed; the `j` new legs are appended.
    pub tensor: ExactTensor,
    /// Legs contracted against the `ε` (the block size `N - j`).
    pub contracted: usize,
}

/// Contract one rank-`N` `ε` against `block` (in the given order, which
/// fixes the sign), turning `N - j` legs into `j` legs of the opposite
/// orientation. Requires `1 <= j <= N - 1`.
pub fn leibniz_translate(t: &ExactTensor, block: &[usize]) -> Result<Translated> {
    let n = t.dim();
    if block.is_empty() || block.len() >= n {
        return Err(Error::BadBlockSize(format!(
            "block of {} legs at N = {n} (need 1..={})",
            block.len(),
            n.saturating_sub(1)
        )));
    }
    let mut seen = vec![false; t.rank()];
    if block.iter().any(|&a| a >= t.rank() || std::mem::replace(&mut seen[a], true)) {
        return Err(Error::BadBlockSize(format!("block {block:?} on rank {}", t.rank())));
    }
    let j = n - block.len();
    let keep: Vec<usize> = (0..t.rank()).filter(|a| !block.contains(a)).collect();
    let eps = epsilon_tensor(n)?;
    let mut entries = Vec::new();
    for (k, v) in t.entries() {
        let head: Vec<usize> = block.iter().map(|&a| k[a]).collect();
        for tail in multi_indices(n, j) {
            let mut e_idx = head.clone();
            e_idx.extend_from_slice(&tail);
            let e = eps.get(&e_idx);
            if e == BigRational::from_integer(0.into()) {
                continue;
            }
            let mut idx: Vec<usize> = keep.iter().map(|&a| k[a]).collect();
            idx.extend_from_slice(&tail);
            entries.push((idx, v * e));
        }
    }
    Ok(Translated {
        tensor: ExactTensor::from_entries(vec![n; keep.len() + j], entries)?,
        contracted: block.len(),
    })
}

/// Translate the last `N - 1` slots of an operator on `V^{⊗N}` into one
/// antifundamental slot on both sides, with the factor `N / N!`: the
/// resulting operator acts on `V ⊗ V*` with axes `[out_q, out_b, in_q, in_b]`.
pub fn bend_to_one_one(op: &ExactTensor) -> Result<ExactTensor> {
    let n = op.dim();
    if op.rank() != 2 * n {
        return Err(Error::DimensionMismatch(format!(
            "need an operator on V^{n}, got rank {}",
            op.rank()
        )));
    }
    let outs: Vec<usize> = (1..n).collect();
    let first = leibniz_translate(op, &outs)?;
    // axes now [out_q, in_q, in_rest.., out_b]
    let ins: Vec<usize> = (2..n + 1).collect();
    let second = leibniz_translate(&first.tensor, &ins)?;
    // [out_q, in_q, out_b, in_b]
    let scale = BigRational::from_integer((n as u64).into()) / factorial(n);
    Ok(second.tensor.permute_axes(&[0, 2, 1, 3])?.scale(&scale))
}

/// Rescale `e` to the idempotent on its line, if `e² ∝ e`.
fn normalize_idempotent(e: &InvariantElement) -> Result<InvariantElement> {
    let e2 = e.compose(e)?;
    let (d, c) = e.terms().next().ok_or(Error::NotProportional)?;
    let lambda = e2.coeff(d).div(c)?;
    if e2 != e.scale(&lambda) {
        return Err(Error::NotProportional);
    }
    Ok(e.scale(&lambda.inv()?))
}

/// The two irreducible projectors of `V^{⊗N}` that carry one quark plus one
/// column of `N - 1` boxes: the full antisymmetrizer and the Hermitian hook
/// `c · S_{12} A_{1,3..N} S_{12}`, with `c = 2(N - 1)/N` fixed by idempotency.
pub fn one_one_source_projectors(n: usize) -> Result<(InvariantElement, InvariantElement)> {
    let singlet = antisymmetrizer(&(0..n).collect::<Vec<_>>(), n)?;
    let s12 = crate::symmetrizers::symmetrizer(&[0, 1], n)?;
    let mut col = vec![0];
    col.extend(2..n);
    let a = antisymmetrizer(&col, n)?;
    let hook = normalize_idempotent(&s12.compose(&a)?.compose(&s12)?)?;
    Ok((singlet, hook))
}

/// `A_{2..N} P A_{2..N}`, renormalized: the part of `P` living on
/// `V ⊗ Λ^{N-1}V`, which is all an `ε` on slots `2..N` can see. Bending
/// preserves idempotency only for operators supported there; the bare hook
/// bends to `N / (2(N - 1))` times a projector.
pub fn restrict_to_antiquark(p: &InvariantElement, n: usize) -> Result<InvariantElement> {
    let tail = antisymmetrizer(&(1..n).collect::<Vec<_>>(), n)?;
    normalize_idempotent(&tail.compose(p)?.compose(&tail)?)
}

/// Both Leibniz-bent projectors at `N = n`: `(singlet, adjoint)` on `V ⊗ V*`.
pub fn leibniz_one_one_projectors(n: usize) -> Result<(ExactTensor, ExactTensor)> {
    let (s, h) = one_one_source_projectors(n)?;
    Ok((
        bend_to_one_one(&evaluate(&restrict_to_antiquark(&s, n)?, n as u32)?)?,
        bend_to_one_one(&evaluate(&restrict_to_antiquark(&h, n)?, n as u32)?)?,
    ))
}

/// Outcome of the three baryon checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BaryonReport {
    /// ε pairing of the antisymmetric `2q2q̄` projector gives `A_123`.
    pub main_path: bool,
    /// Same, with the `ε` legs attached in reversed order on both sides.
    pub untwisted: bool,
    /// Sign picked up per side in the untwisted variant; enters squared.
    pub untwist_sign: i64,
    /// Largest deviation of the normalized correlators over the samples.
    pub correlator_deviation: f64,
    pub correlator: bool,
}

impl BaryonReport {
    pub fn passed(&self) -> bool {
        self.main_path && self.untwisted && self.correlator
    }

    /// Names of the failing parts.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut f = Vec::new();
        if !self.main_path {
            f.push("main_path");
        }
        if !self.untwisted {
            f.push("untwisted");
        }
        if !self.correlator {
            f.push("correlator");
        }
        f
    }
}

pub const CORRELATOR_TOLERANCE: f64 = 1e-10;

/// The `V^{⊗3}` baryon singlet against the antisymmetric `Mixed(2, 2)`
/// singlet at `N = 3`.
pub fn verify_baryon_equivalence(n: usize) -> Result<BaryonReport> {
    if n != 3 {
        return Err(Error::OutOfRange(format!("baryon equivalence is stated at N = 3, got {n}")));
    }
    let anti = antisymmetrizer(&[0, 1], 2)?.bend()?;
    let proj = SingletOperator::projector_from_state(anti.clone(), vec![0], "A12".into())?;
    let op = evaluate(&proj.expand()?, 3)?;
    let target = evaluate(&antisymmetrizer(&[0, 1, 2], 3)?, 3)?;
    let pair_factor = BigRational::from_integer(3.into()) / factorial(3);

    // axes [q1, q2, b1, b2 | q1', q2', b1', b2']
    let pair = |out_block: [usize; 2], in_block: [usize; 2]| -> Result<ExactTensor> {
        let first = leibniz_translate(&op, &out_block)?;
        // [q1, q2, q1', q2', b1', b2', c]
        let shift = |a: usize| a - 2;
        let second = leibniz_translate(&first.tensor, &in_block.map(shift))?;
        // [q1, q2, q1', q2', c, c']
        Ok(second.tensor.permute_axes(&[0, 1, 4, 2, 3, 5])?.scale(&pair_factor))
    };
    let main_path = pair([2, 3], [6, 7])? == target;
    let untwisted_op = pair([3, 2], [7, 6])?;
    let untwisted = untwisted_op == target;
    let single = leibniz_translate(&evaluate(&anti, 3)?, &[3, 2])?.tensor;
    let straight = leibniz_translate(&evaluate(&anti, 3)?, &[2, 3])?.tensor;
    let untwist_sign = if single == straight.scale(&ratio(-1, 1)) { -1 } else { 1 };

    let norm = 3.0; // ⟨a|a⟩ = N(N-1)/2
    let mut worst: f64 = 0.0;
    for seed in 0..10u64 {
        let [x1, x2, x3] = [0, 1, 2].map(|o| sample_special_unitary(3, 1000 + 3 * seed + o));
        let quad = correlator_matrix(
            std::slice::from_ref(&anti),
            &[x1.clone(), x2.clone(), x3.clone(), x3.clone()],
        )?;
        let baryon = epsilon_correlator(&[x1, x2, x3])?;
        worst = worst.max((quad[(0, 0)] / norm - baryon / 6.0).norm());
    }
    Ok(BaryonReport {
        main_path,
        untwisted,
        untwist_sign,
        correlator_deviation: worst,
        correlator: worst < CORRELATOR_TOLERANCE,
    })
}

/// The generic partner of a transient singlet: `a + b` antisymmetric blocks
/// of `N - 1` strands followed by `k` identity strands on `V^{⊗α}`, bent and
/// normalized. Blocks come first; interleavings are not distinguished.
pub fn transient_partner(params: &TransientParams, n: usize) -> Result<SingletOperator> {
    let blocks = params.a + params.b;
    if n < 2 || params.alpha != blocks * (n - 1) + params.k {
        return Err(Error::OutOfRange(format!("{params:?} at N = {n}")));
    }
    let mut op: Option<InvariantElement> = None;
    let mut parts: Vec<InvariantElement> = (0..blocks)
        .map(|_| antisymmetrizer(&(0..n - 1).collect::<Vec<_>>(), n - 1))
        .collect::<Result<_>>()?;
    if params.k > 0 {
        parts.push(InvariantElement::identity(LegSignature::tensor_power(params.k))?);
    }
    for p in parts {
        op = Some(match op {
            None => p,
            Some(acc) => acc.tensor(&p)?,
        });
    }
    let op = op.ok_or_else(|| Error::OutOfRange("empty transient partner".into()))?;
    SingletOperator::projector_from_state(op.bend()?, vec![0], format!("{params:?}"))
}

#[cfg(test)]
mod tests;
