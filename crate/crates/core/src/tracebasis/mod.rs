//! Singlet states on `Mixed(k, k)` built from traces of generator chains,
//! with every adjoint line eliminated through the completeness relation
//! `t^a_{ij} t^a_{kl} = δ_il δ_kj - (1/N) δ_ij δ_kl` (generators normalized to
//! `Tr(t^a t^b) = δ^{ab}`).
//!
//! Pair `i` is formed by ket legs `i` (fundamental) and `k + i`
//! (antifundamental).

use std::fmt;
use std::str::FromStr;

use crate::coefficients::{RadicalCoefficient, RationalFunction};
use crate::diagrams::{parse_cycle_list, InvariantElement, LegSignature, Perm, PrimitiveDiagram};
use crate::error::{Error, Result};
use crate::singlets::SingletOperator;
use crate::symmetrizers::gram_schmidt;

/// Disjoint cycles covering `1..=k`, each starting at its smallest entry
/// and sorted by it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    perm: Perm,
}

impl CycleDecomposition {
    /// 1-based cycles that must cover `1..=k` exactly, fixed points included.
    pub fn new(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let covered: usize = cycles.iter().map(Vec::len).sum();
        if covered != k {
            return Err(Error::InvalidDecomposition(format!(
                "cycles cover {covered} points, expected {k}"
            )));
        }
        Ok(CycleDecomposition {
            perm: Perm::from_cycles(k, cycles)?,
        })
    }

    pub fn from_perm(perm: Perm) -> Self {
        CycleDecomposition { perm }
    }

    pub fn identity(k: usize) -> Self {
        CycleDecomposition::from_perm(Perm::identity(k))
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn k(&self) -> usize {
        self.perm.len()
    }

    /// 0-based cycles in canonical order.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.perm.cycles()
    }

    pub fn is_derangement(&self) -> bool {
        self.perm.moved_points() == self.k()
    }

    /// Ordering key: identity first, then by moved points, cycle type with
    /// short cycles first, and the cycles themselves.
    fn order_key(&self) -> (usize, Vec<usize>, Vec<Vec<usize>>) {
        let mut ty = self.perm.cycle_type();
        ty.retain(|&l| l > 1);
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        (self.perm.moved_points(), ty, nontrivial)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm)
    }
}

impl FromStr for CycleDecomposition {
    type Err = Error;
    /// `"(1 2)(3)"`; every point up to the largest must appear.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let k = cycles.iter().flatten().copied().max().unwrap_or(0);
        CycleDecomposition::new(k, &cycles)
    }
}

/// All permutations of `k` points in trace-basis order.
pub fn trace_order(k: usize) -> Vec<CycleDecomposition> {
    let mut all: Vec<_> = Perm::all(k).into_iter().map(CycleDecomposition::from_perm).collect();
    all.sort_by_key(CycleDecomposition::order_key);
    all
}

fn inv_n() -> RationalFunction {
    RationalFunction::var().inv().expect("N is nonzero")
}

/// `id - (1/N) δδ` on `Mixed(1, 1)`: the adjoint projector.
pub fn adjoint_pair_diagram() -> InvariantElement {
    adjoint_pair_projector(1, 0).expect("pair 0 exists for k = 1")
}

/// `δδ` on `Mixed(1, 1)`: in ports joined, out ports joined.
pub fn singlet_pair_diagram() -> InvariantElement {
    let sig = LegSignature::mixed(1, 1);
    InvariantElement::primitive(sig, PrimitiveDiagram::new(Perm::from_images(vec![1, 0]).unwrap()))
        .expect("degree 2")
}

/// Adjoint projector on pair `pair`, identity elsewhere, as an operator on
/// the canonical `Mixed(k, k)` leg order.
pub fn adjoint_pair_projector(k: usize, pair: usize) -> Result<InvariantElement> {
    if pair >= k {
        return Err(Error::OutOfRange(format!("pair {pair} of {k}")));
    }
    let sig = LegSignature::operator(LegSignature::mixed_ket(k).orientations().to_vec());
    // on a (q, q̄) slot pair the transposition is the δδ diagram
    let mut images: Vec<usize> = (0..2 * k).collect();
    images.swap(pair, k + pair);
    let id = InvariantElement::identity(sig.clone())?;
    let dd = InvariantElement::primitive(sig, PrimitiveDiagram::new(Perm::from_images(images)?))?;
    id.sub(&dd.scale_rf(&inv_n()))
}

/// The trace-basis state for `rho`: pairs on 1-cycles are δ-pairs; a cycle
/// `(i_1 ... i_r)` is `Tr(t^{a_1} ... t^{a_r})` with the adjoint lines
/// resolved into δ-diagrams.
pub fn trace_basis_state(rho: &CycleDecomposition) -> Result<InvariantElement> {
    let k = rho.k();
    let mut state = InvariantElement::permutation(&rho.perm().inverse()).bend()?;
    for cyc in rho.cycles().iter().filter(|c| c.len() > 1) {
        for &i in cyc {
            state = adjoint_pair_projector(k, i)?.apply(&state)?;
        }
    }
    Ok(state)
}

/// All `k!` trace-basis states in trace order.
pub fn trace_basis_states(k: usize) -> Result<Vec<(CycleDecomposition, InvariantElement)>> {
    trace_order(k)
        .into_iter()
        .map(|rho| trace_basis_state(&rho).map(|s| (rho, s)))
        .collect()
}

/// States for permutations without fixed points; they span the singlets of
/// the `k`-th power of the adjoint representation.
pub fn derangement_states(k: usize) -> Result<Vec<InvariantElement>> {
    trace_order(k)
        .iter()
        .filter(|rho| rho.is_derangement())
        .map(trace_basis_state)
        .collect()
}

/// `(d, f)` for `k = 3`: the sum and the difference of the two 3-cycle
/// states, taken without a factor `1/2`.
pub fn df_states() -> Result<(InvariantElement, InvariantElement)> {
    let a = trace_basis_state(&"(1 2 3)".parse()?)?;
    let b = trace_basis_state(&"(1 3 2)".parse()?)?;
    Ok((a.add(&b)?, a.sub(&b)?))
}

/// `k!` singlet projectors from the trace basis. For `k = 3` the two 3-cycle
/// states are replaced by the `f` and `d` combinations; for `k > 3` the
/// states are orthogonalized by Gram–Schmidt in trace order.
pub fn normalized_trace_basis(k: usize) -> Result<Vec<SingletOperator>> {
    let states = trace_basis_states(k)?;
    let labelled: Vec<(String, InvariantElement)> = match k {
        0..=2 => states.into_iter().map(|(r, s)| (r.to_string(), s)).collect(),
        3 => {
            let (d, f) = df_states()?;
            let mut v: Vec<_> = states
                .into_iter()
                .filter(|(r, _)| !r.is_derangement())
                .map(|(r, s)| (r.to_string(), s))
                .collect();
            v.push(("f".into(), f));
            v.push(("d".into(), d));
            v
        }
        _ => {
            let names: Vec<String> = states.iter().map(|(r, _)| r.to_string()).collect();
            let raw: Vec<_> = states.into_iter().map(|(_, s)| s).collect();
            let orth = gram_schmidt(&raw)?;
            let kept = (0..names.len()).filter(|i| !orth.dropped.contains(i));
            kept.zip(orth.states).map(|(i, s)| (names[i].clone(), s)).collect()
        }
    };
    labelled
        .into_iter()
        .enumerate()
        .map(|(i, (name, s))| SingletOperator::projector_from_state(s, vec![i], name))
        .collect()
}

/// Squared norms `‖d‖²` and `‖f‖²` for reporting.
pub fn df_norms() -> Result<(RadicalCoefficient, RadicalCoefficient)> {
    let (d, f) = df_states()?;
    Ok((d.norm_squared()?, f.norm_squared()?))
}

#[cfg(test)]
mod tests;
