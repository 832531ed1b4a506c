//! Float-mode checks: sampled special-unitary matrices, explicit generators
//! and Wilson-line style correlators. Fundamental legs carry `U`,
//! antifundamental legs carry the complex conjugate `U*` (not `U†`): the
//! conjugate representation acts with `U*` on an upper-index leg, so the
//! index order is the same as for `U`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::tensor::evaluate;
use crate::diagrams::{InvariantElement, Orientation};
use crate::error::{Error, Result};

pub type ComplexMatrix = DMatrix<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Deterministic pseudo-random element of `SU(n)`: QR of a complex Gaussian
/// matrix with the phases of `R`'s diagonal moved into `Q`, then the
/// determinant phase divided out.
pub fn sample_special_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = ComplexMatrix::from_fn(n, n, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        c(re, im)
    });
    let qr = z.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { c(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    let det = q.determinant();
    let fix = Complex64::from_polar(1.0, -det.arg() / n as f64);
    q * fix
}

/// `max |U†U - 1|`.
pub fn unitarity_residual(u: &ComplexMatrix) -> f64 {
    let n = u.nrows();
    let d = u.adjoint() * u - ComplexMatrix::identity(n, n);
    d.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Traceless Hermitian generators of `su(n)` with `Tr(t^a t^b) = δ^{ab}`:
/// the generalized Gell-Mann matrices divided by `√2`.
pub fn generators(n: usize) -> Vec<ComplexMatrix> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(n * n - 1);
    for j in 0..n {
        for k in j + 1..n {
            let mut sym = ComplexMatrix::zeros(n, n);
            sym[(j, k)] = c(s, 0.0);
            sym[(k, j)] = c(s, 0.0);
            out.push(sym);
            let mut anti = ComplexMatrix::zeros(n, n);
            anti[(j, k)] = c(0.0, -s);
            anti[(k, j)] = c(0.0, s);
            out.push(anti);
        }
    }
    for l in 1..n {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = ComplexMatrix::zeros(n, n);
        for i in 0..l {
            diag[(i, i)] = c(norm, 0.0);
        }
        diag[(l, l)] = c(-(l as f64) * norm, 0.0);
        out.push(diag);
    }
    out
}

/// `max |Σ_a t^a_{ij} t^a_{kl} + (1/N) δ_ij δ_kl - δ_il δ_kj|`.
pub fn fierz_residual(n: usize) -> f64 {
    let gens = generators(n);
    let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let sum: Complex64 = gens.iter().map(|t| t[(i, j)] * t[(k, l)]).sum();
                    let rhs = delta(i, l) * delta(k, j) - delta(i, j) * delta(k, l) / n as f64;
                    worst = worst.max((sum - c(rhs, 0.0)).norm());
                }
            }
        }
    }
    worst
}

/// Apply `mats[l]` on axis `l` of a dense row-major vector with `mats.len()`
/// axes of dimension `n`.
pub fn apply_legs(v: &[Complex64], n: usize, mats: &[ComplexMatrix]) -> Vec<Complex64> {
    let legs = mats.len();
    let mut cur = v.to_vec();
    for (axis, m) in mats.iter().enumerate() {
        let stride = n.pow((legs - 1 - axis) as u32);
        let block = stride * n;
        let mut next = vec![c(0.0, 0.0); cur.len()];
        for base in (0..cur.len()).step_by(block) {
            for inner in 0..stride {
                for i in 0..n {
                    let mut acc = c(0.0, 0.0);
                    for j in 0..n {
                        acc += m[(i, j)] * cur[base + j * stride + inner];
                    }
                    next[base + i * stride + inner] = acc;
                }
            }
        }
        cur = next;
    }
    cur
}

/// Per-leg matrices for a ket: `U` on fundamental legs, `U*` otherwise.
pub fn leg_matrices(orientations: &[Orientation], us: &[ComplexMatrix]) -> Result<Vec<ComplexMatrix>> {
    if orientations.len() != us.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices for {} legs",
            us.len(),
            orientations.len()
        )));
    }
    Ok(orientations
        .iter()
        .zip(us)
        .map(|(o, u)| if o.is_fundamental() { u.clone() } else { u.conjugate() })
        .collect())
}

/// `⟨state_i| ⊗_l M_l |state_j⟩` with `M_l` from [`leg_matrices`]. States are
/// used as given (no normalization).
pub fn correlator_matrix(states: &[InvariantElement], us: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let Some(first) = states.first() else {
        return Ok(ComplexMatrix::zeros(0, 0));
    };
    let n = us.first().map_or(0, |u| u.nrows());
    if us.iter().any(|u| u.nrows() != n || u.ncols() != n) {
        return Err(Error::DimensionMismatch("leg matrices must share one square size".into()));
    }
    for s in states {
        first.require_same_signature(s)?;
    }
    let mats = leg_matrices(first.signature().orientations(), us)?;
    let dense: Vec<Vec<Complex64>> = states
        .iter()
        .map(|s| evaluate(s, n as u32)?.to_complex_vector())
        .collect::<Result<_>>()?;
    let acted: Vec<Vec<Complex64>> = dense.iter().map(|v| apply_legs(v, n, &mats)).collect();
    Ok(ComplexMatrix::from_fn(states.len(), states.len(), |i, j| {
        dense[i].iter().zip(&acted[j]).map(|(a, b)| a.conj() * b).sum()
    }))
}

/// `max |U ψ - ψ|` over the ket's components, with the same sampled `U` on
/// every leg.
pub fn invariance_residual(state: &InvariantElement, n: usize, seed: u64) -> Result<f64> {
    let u = sample_special_unitary(n, seed);
    let legs = state.signature().len();
    let mats = leg_matrices(state.signature().orientations(), &vec![u; legs])?;
    let v = evaluate(state, n as u32)?.to_complex_vector()?;
    let w = apply_legs(&v, n, &mats);
    Ok(v.iter().zip(&w).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
}

/// `ε^{i_1..i_N} Π_l [U_l]_{i_l j_l} ε^{j_1..j_N}`, the baryon correlator.
pub fn epsilon_correlator(us: &[ComplexMatrix]) -> Result<Complex64> {
    let n = us.len();
    if us.iter().any(|u| u.nrows() != n || u.ncols() != n) {
        return Err(Error::DimensionMismatch(format!("baryon correlator needs {n} matrices of size {n}")));
    }
    let perms = crate::diagrams::Perm::all(n);
    let mut total = c(0.0, 0.0);
    for p in &perms {
        for q in &perms {
            let prod: Complex64 = (0..n).map(|l| us[l][(p.apply(l), q.apply(l))]).product();
            total += prod * (p.sign() * q.sign()) as f64;
        }
    }
    Ok(total)
}
