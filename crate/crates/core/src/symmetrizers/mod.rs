//! Symmetrizers, antisymmetrizers, Young projectors, the Hermitian operator
//! sets for `k <= 3`, and Gram–Schmidt over Q(N).
//!
//! Slot indices are 0-based throughout.

mod young;

pub use young::{irrep_dimension, young_projector, StandardTableau, YoungShape};

use crate::coefficients::{RadicalCoefficient, RationalFunction};
use crate::diagrams::{InvariantElement, LegSignature, Perm, PrimitiveDiagram};
use crate::error::{Error, Result};

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn check_slots(slots: &[usize], m: usize) -> Result<()> {
    if slots.is_empty() {
        return Err(Error::OutOfRange("empty slot set".into()));
    }
    let mut seen = vec![false; m];
    for &s in slots {
        if s >= m || std::mem::replace(&mut seen[s], true) {
            return Err(Error::OutOfRange(format!("slot {s} of {m} (or repeated)")));
        }
    }
    Ok(())
}

fn signed_average(slots: &[usize], m: usize, signed: bool) -> Result<InvariantElement> {
    check_slots(slots, m)?;
    let weight = factorial(slots.len());
    let terms = Perm::all_on(m, slots).into_iter().map(|p| {
        let s = if signed { p.sign() } else { 1 };
        (PrimitiveDiagram::new(p), RadicalCoefficient::ratio(s, weight))
    });
    InvariantElement::from_terms(LegSignature::tensor_power(m), terms)
}

/// `(1/|slots|!) Σ σ` over permutations of `slots`, on `V^{⊗m}`.
pub fn symmetrizer(slots: &[usize], m: usize) -> Result<InvariantElement> {
    signed_average(slots, m, false)
}

/// `(1/|slots|!) Σ sign(σ) σ` over permutations of `slots`, on `V^{⊗m}`.
pub fn antisymmetrizer(slots: &[usize], m: usize) -> Result<InvariantElement> {
    signed_average(slots, m, true)
}

fn compose_all(items: &[InvariantElement]) -> Result<InvariantElement> {
    let (first, rest) = items.split_first().expect("nonempty product");
    rest.iter().try_fold(first.clone(), |acc, x| acc.compose(x))
}

/// Names of the builtin operators, in basis order.
pub fn builtin_labels(k: usize) -> Result<Vec<&'static str>> {
    Ok(match k {
        1 => vec!["id"],
        2 => vec!["S12", "A12"],
        3 => vec![
            "S123",
            "(4/3) S12 A23 S12",
            "sqrt(4/3) S12 (23) A12",
            "sqrt(4/3) A12 (23) S12",
            "(4/3) A12 S23 A12",
            "A123",
        ],
        _ => return Err(Error::UnsupportedK(k)),
    })
}

/// Pairwise orthogonal Hermitian projectors and transition operators on
/// `V^{⊗k}` for `k <= 3`. For `k = 3` the order is
/// `S123, P2, T23, T32, P3, A123` with `T32 = T23†`.
pub fn builtin_orthogonal_basis(k: usize) -> Result<Vec<InvariantElement>> {
    let sig = LegSignature::tensor_power(k);
    match k {
        1 => Ok(vec![InvariantElement::identity(sig)?]),
        2 => Ok(vec![symmetrizer(&[0, 1], 2)?, antisymmetrizer(&[0, 1], 2)?]),
        3 => {
            let s12 = symmetrizer(&[0, 1], 3)?;
            let s23 = symmetrizer(&[1, 2], 3)?;
            let a12 = antisymmetrizer(&[0, 1], 3)?;
            let a23 = antisymmetrizer(&[1, 2], 3)?;
            let t23 = InvariantElement::from_cycles(3, "(2 3)")?;
            let four_thirds = RadicalCoefficient::ratio(4, 3);
            let root = RadicalCoefficient::sqrt(&RationalFunction::from_ratio(4, 3))?;
            Ok(vec![
                symmetrizer(&[0, 1, 2], 3)?,
                compose_all(&[s12.clone(), a23, s12.clone()])?.scale(&four_thirds),
                compose_all(&[s12.clone(), t23.clone(), a12.clone()])?.scale(&root),
                compose_all(&[a12.clone(), t23, s12])?.scale(&root),
                compose_all(&[a12.clone(), s23, a12])?.scale(&four_thirds),
                antisymmetrizer(&[0, 1, 2], 3)?,
            ])
        }
        _ => Err(Error::UnsupportedK(k)),
    }
}

/// Orthogonalized states plus the indices of inputs that were linearly
/// dependent on their predecessors over Q(N) and therefore dropped.
#[derive(Clone, Debug)]
pub struct Orthogonalized {
    pub states: Vec<InvariantElement>,
    pub dropped: Vec<usize>,
}

/// Unnormalized Gram–Schmidt over Q(N) in input order.
pub fn gram_schmidt(states: &[InvariantElement]) -> Result<Orthogonalized> {
    let mut out: Vec<(InvariantElement, RadicalCoefficient)> = Vec::new();
    let mut dropped = Vec::new();
    for (i, v) in states.iter().enumerate() {
        let mut w = v.clone();
        for (u, norm) in &out {
            let overlap = u.inner_product(v)?;
            if !overlap.is_zero() {
                w = w.sub(&u.scale(&overlap.div(norm)?))?;
            }
        }
        let norm = w.norm_squared()?;
        if norm.is_zero() {
            dropped.push(i);
        } else {
            out.push((w, norm));
        }
    }
    Ok(Orthogonalized {
        states: out.into_iter().map(|(w, _)| w).collect(),
        dropped,
    })
}
