//! Cross-module checks through the public API only.

use birdtrack::diagrams::{InvariantElement, Perm};
use birdtrack::numeric::{evaluate, exact_rank};
use birdtrack::singlets::{basis_states, gram_at, singlet_basis, singlet_count, split_common_radical, BasisSource};
use birdtrack::tracebasis::trace_basis_states;
use num_rational::BigRational;
use proptest::prelude::*;

fn states(k: usize, source: BasisSource) -> Vec<InvariantElement> {
    basis_states(k, source).unwrap().into_iter().map(|(_, s)| s).collect()
}

/// Rank of the stacked numeric states, independent of any Gram computation.
/// A common radical factor does not change the span.
fn numeric_span_rank(states: &[InvariantElement], n: u32) -> usize {
    let rows: Vec<Vec<BigRational>> = states
        .iter()
        .map(|s| split_common_radical(s).unwrap().1)
        .map(|s| evaluate(&s, n).unwrap().to_matrix(0).unwrap().remove(0))
        .collect();
    exact_rank(&rows)
}

#[test]
fn builtin_and_trace_bases_span_the_same_space() {
    for n in 2..=4 {
        let builtin = states(3, BasisSource::Builtin);
        let trace = states(3, BasisSource::Trace);
        let rb = singlet_count(3, n, BasisSource::Builtin).unwrap();
        let rt = singlet_count(3, n, BasisSource::Trace).unwrap();
        assert_eq!(rb, rt, "N = {n}");
        // the union spans no more than either
        let union: Vec<_> = trace.into_iter().chain(builtin).collect();
        assert_eq!(numeric_span_rank(&union, n), rt, "N = {n}");
    }
}

#[test]
fn orthogonalized_trace_basis_is_diagonal() {
    let s = states(3, BasisSource::TraceOrthogonalize);
    for n in 3..=5 {
        let g = gram_at(&s, n).unwrap();
        for (i, row) in g.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(i == j, *x != BigRational::from_integer(0.into()), "N = {n}, ({i}, {j})");
            }
        }
    }
}

#[test]
fn projector_traces_are_one_where_nonnull() {
    for p in singlet_basis(2, BasisSource::Trace).unwrap() {
        assert_eq!(p.trace().unwrap().to_string(), "1", "{}", p.name);
    }
}

#[test]
fn trace_states_match_bent_permutations_at_k_two() {
    // the identity trace state is the bent identity permutation
    let (_, id_state) = &trace_basis_states(2).unwrap()[0];
    let bent = InvariantElement::permutation(&Perm::identity(2)).bend().unwrap();
    assert_eq!(*id_state, bent);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn symbolic_gram_specializes_exactly(n in 2u32..7, k in 1usize..=3) {
        let s = states(k, BasisSource::Trace);
        let g = gram_at(&s, n).unwrap();
        let tensors: Vec<_> = s.iter().map(|x| evaluate(x, n).unwrap()).collect();
        for (i, a) in tensors.iter().enumerate() {
            for (j, b) in tensors.iter().enumerate() {
                prop_assert_eq!(&g[i][j], &a.inner_product(b).unwrap());
            }
        }
    }
}
