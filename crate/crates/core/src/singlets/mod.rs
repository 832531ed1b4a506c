//! Singlet states from bent invariants, and the rank-one projectors and
//! transition operators they generate on `Mixed(k, k)`.

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coefficients::{RadicalCoefficient, RationalFunction};
use crate::diagrams::InvariantElement;
use crate::error::{Error, Result};
use crate::numeric::exact_rank;
use crate::symmetrizers::{builtin_labels, builtin_orthogonal_basis};
use crate::tracebasis::{normalized_trace_basis, trace_basis_states};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SingletKind {
    Projector,
    Transition,
}

/// Where a singlet basis comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisSource {
    /// Bent Hermitian operator sets on `V^{⊗k}`, `k <= 3`.
    Builtin,
    /// Raw trace-basis states.
    Trace,
    /// Trace-basis states made orthogonal.
    TraceOrthogonalize,
}

impl std::str::FromStr for BasisSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "builtin" => Ok(BasisSource::Builtin),
            "trace" => Ok(BasisSource::Trace),
            "trace+orthogonalize" | "trace-orthogonalize" => Ok(BasisSource::TraceOrthogonalize),
            _ => Err(Error::Parse(format!(
                "source {s:?} (expected builtin, trace, trace+orthogonalize)"
            ))),
        }
    }
}

/// `normalization * |ket⟩⟨bra|`, kept in factored form. `labels` index the
/// source basis: `[i]` for a projector, `[i, j]` for a transition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletOperator {
    pub kind: SingletKind,
    pub labels: Vec<usize>,
    pub name: String,
    pub normalization: RadicalCoefficient,
    pub ket: InvariantElement,
    pub bra: InvariantElement,
}

/// `1 / ⟨s|s⟩`, or zero when the state vanishes identically.
fn inverse_norm(state: &InvariantElement) -> Result<RadicalCoefficient> {
    let n2 = state.norm_squared()?;
    if n2.is_zero() {
        Ok(RadicalCoefficient::zero())
    } else {
        n2.inv()
    }
}

impl SingletOperator {
    /// Projector onto a given ket.
    pub fn projector_from_state(ket: InvariantElement, labels: Vec<usize>, name: String) -> Result<Self> {
        let normalization = inverse_norm(&ket)?;
        Ok(SingletOperator {
            kind: SingletKind::Projector,
            labels,
            name,
            normalization,
            bra: ket.clone(),
            ket,
        })
    }

    /// Transition operator `|ket⟩⟨bra|` normalized by `sqrt(β_ket β_bra)`.
    pub fn transition_from_states(
        ket: InvariantElement,
        bra: InvariantElement,
        labels: Vec<usize>,
        name: String,
    ) -> Result<Self> {
        if ket == bra {
            return SingletOperator::projector_from_state(ket, labels, name);
        }
        let b1 = inverse_norm(&ket)?;
        let b2 = inverse_norm(&bra)?;
        let normalization = if b1.is_zero() || b2.is_zero() {
            RadicalCoefficient::zero()
        } else {
            let product = (&b1 * &b2)
                .as_rational()
                .ok_or(Error::RadicalComparisonUnsupported)?;
            RadicalCoefficient::sqrt(&product)?
        };
        Ok(SingletOperator {
            kind: SingletKind::Transition,
            labels,
            name,
            normalization,
            ket,
            bra,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.normalization.is_zero() || self.ket.is_zero() || self.bra.is_zero()
    }

    /// The full operator `normalization * |ket⟩⟨bra|` on `2k` strands.
    pub fn expand(&self) -> Result<InvariantElement> {
        Ok(InvariantElement::outer(&self.ket, &self.bra)?.scale(&self.normalization))
    }

    pub fn dagger(&self) -> Self {
        SingletOperator {
            kind: self.kind,
            labels: self.labels.iter().rev().copied().collect(),
            name: format!("({})†", self.name),
            normalization: self.normalization.clone(),
            ket: self.bra.clone(),
            bra: self.ket.clone(),
        }
    }

    /// Rank-one product: `n1 n2 ⟨bra1|ket2⟩ |ket1⟩⟨bra2|`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let overlap = self.bra.inner_product(&other.ket)?;
        let normalization = &(&self.normalization * &other.normalization) * &overlap;
        let kind = if self.ket == other.bra {
            SingletKind::Projector
        } else {
            SingletKind::Transition
        };
        let labels = match (self.labels.first(), other.labels.last()) {
            (Some(&a), Some(&b)) => vec![a, b],
            _ => Vec::new(),
        };
        Ok(SingletOperator {
            kind,
            labels,
            name: format!("{} * {}", self.name, other.name),
            normalization,
            ket: self.ket.clone(),
            bra: other.bra.clone(),
        })
    }

    /// Equality as operators, without expanding: both rank-one forms are
    /// compared through their factors when those coincide, else expanded.
    pub fn same_operator(&self, other: &Self) -> Result<bool> {
        if self.ket == other.ket && self.bra == other.bra {
            return Ok(self.normalization == other.normalization);
        }
        Ok(self.expand()? == other.expand()?)
    }

    /// Trace of the operator, `normalization * ⟨bra|ket⟩`.
    pub fn trace(&self) -> Result<RadicalCoefficient> {
        Ok(&self.normalization * &self.bra.inner_product(&self.ket)?)
    }
}

/// Bend an operator into its singlet state.
pub fn singlet_state(op: &InvariantElement) -> Result<InvariantElement> {
    op.bend()
}

pub fn singlet_projector(op: &InvariantElement) -> Result<SingletOperator> {
    SingletOperator::projector_from_state(op.bend()?, vec![0], "P".into())
}

pub fn transition_operator(op1: &InvariantElement, op2: &InvariantElement) -> Result<SingletOperator> {
    op1.require_same_signature(op2)?;
    SingletOperator::transition_from_states(op1.bend()?, op2.bend()?, vec![0, 1], "T".into())
}

/// Singlet states and names for a basis source, before normalization.
pub fn basis_states(k: usize, source: BasisSource) -> Result<Vec<(String, InvariantElement)>> {
    match source {
        BasisSource::Builtin => {
            let labels = builtin_labels(k)?;
            builtin_orthogonal_basis(k)?
                .iter()
                .zip(labels)
                .map(|(op, l)| Ok((l.to_string(), op.bend()?)))
                .collect()
        }
        BasisSource::Trace => Ok(trace_basis_states(k)?
            .into_iter()
            .map(|(r, s)| (r.to_string(), s))
            .collect()),
        BasisSource::TraceOrthogonalize => Ok(normalized_trace_basis(k)?
            .into_iter()
            .map(|p| (p.name, p.ket))
            .collect()),
    }
}

/// `k!` singlet projectors.
pub fn singlet_basis(k: usize, source: BasisSource) -> Result<Vec<SingletOperator>> {
    basis_states(k, source)?
        .into_iter()
        .enumerate()
        .map(|(i, (name, s))| SingletOperator::projector_from_state(s, vec![i], name))
        .collect()
}

/// Projectors on the diagonal and transition operators off it:
/// `table[i][j] = T_ij`, `table[i][i] = P_i`.
pub fn operator_table(basis: &[SingletOperator]) -> Result<Vec<Vec<SingletOperator>>> {
    basis
        .par_iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let name = if a.labels == b.labels {
                        a.name.clone()
                    } else {
                        format!("{} <- {}", a.name, b.name)
                    };
                    let labels = vec![a.labels[0], b.labels[0]];
                    SingletOperator::transition_from_states(a.ket.clone(), b.ket.clone(), labels, name)
                })
                .collect()
        })
        .collect()
}

/// `⟨i|j⟩` for all pairs.
pub fn gram_matrix(states: &[InvariantElement]) -> Result<Vec<Vec<RadicalCoefficient>>> {
    if let Some(first) = states.first() {
        for s in states {
            first.require_same_signature(s)?;
        }
    }
    let n = states.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let values: Vec<RadicalCoefficient> = pairs
        .par_iter()
        .map(|&(i, j)| states[i].inner_product(&states[j]))
        .collect::<Result<_>>()?;
    let mut g = vec![vec![RadicalCoefficient::zero(); n]; n];
    for (&(i, j), v) in pairs.iter().zip(values) {
        g[j][i] = v.clone();
        g[i][j] = v;
    }
    Ok(g)
}

/// Whether `⟨s|s⟩` vanishes at `N = n`.
pub fn is_dimensionally_null(state: &InvariantElement, n: u32) -> Result<bool> {
    Ok(state.norm_squared()?.eval_at(n as i64)?.is_zero())
}

/// `state = c · rational` with `rational` over Q(N): strips a single radical
/// common to every coefficient (`c = 1` when there is none).
pub fn split_common_radical(state: &InvariantElement) -> Result<(RadicalCoefficient, InvariantElement)> {
    let Some((_, c)) = state.terms().next() else {
        return Ok((RadicalCoefficient::one(), state.clone()));
    };
    if c.is_rational() {
        return Ok((RadicalCoefficient::one(), state.clone()));
    }
    if c.num_terms() != 1 {
        return Err(Error::RadicalComparisonUnsupported);
    }
    let c = c.clone();
    let scaled = state.scale(&c.inv()?);
    if scaled.terms().all(|(_, x)| x.is_rational()) {
        Ok((c, scaled))
    } else {
        Err(Error::RadicalComparisonUnsupported)
    }
}

/// Rescaling leaves the spanned line unchanged.
fn rationalize(state: &InvariantElement) -> Result<InvariantElement> {
    Ok(split_common_radical(state)?.1)
}

/// Gram matrix of `states` specialized at `N = n`, exact.
pub fn gram_at(states: &[InvariantElement], n: u32) -> Result<Vec<Vec<BigRational>>> {
    let rational: Vec<_> = states.iter().map(rationalize).collect::<Result<_>>()?;
    gram_matrix(&rational)?
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| {
                    c.eval_at(n as i64)?
                        .as_rational()
                        .ok_or(Error::RadicalComparisonUnsupported)
                })
                .collect()
        })
        .collect()
}

/// Number of linearly independent singlet states at `N = n`. For the
/// orthogonalized trace source the raw trace states are used, since they
/// span the same space and carry no denominators beyond powers of `N`.
pub fn singlet_count(k: usize, n: u32, source: BasisSource) -> Result<usize> {
    let source = match source {
        BasisSource::TraceOrthogonalize => BasisSource::Trace,
        s => s,
    };
    let states: Vec<_> = basis_states(k, source)?.into_iter().map(|(_, s)| s).collect();
    Ok(exact_rank(&gram_at(&states, n)?))
}

/// Dimension-free helper: the rational multiplier `β` of a state.
pub fn beta(state: &InvariantElement) -> Result<RadicalCoefficient> {
    inverse_norm(state)
}

/// `β` for a state whose squared norm is a rational function.
pub fn beta_rational(state: &InvariantElement) -> Result<RationalFunction> {
    inverse_norm(state)?
        .as_rational()
        .ok_or(Error::RadicalComparisonUnsupported)
}
