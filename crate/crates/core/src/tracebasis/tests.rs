use super::*;
use crate::coefficients::{rat, Poly};
use crate::numeric::{evaluate, exact_rank};
use crate::singlets::{gram_at, is_dimensionally_null};

fn rf(num: &[i64], den: &[i64]) -> RadicalCoefficient {
    RationalFunction::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap().into()
}

fn state(cycles: &str) -> InvariantElement {
    trace_basis_state(&cycles.parse().unwrap()).unwrap()
}

#[test]
fn trace_order_for_three() {
    let names: Vec<String> = trace_order(3).iter().map(ToString::to_string).collect();
    assert_eq!(
        names,
        ["(1)(2)(3)", "(1 2)(3)", "(1 3)(2)", "(1)(2 3)", "(1 2 3)", "(1 3 2)"]
    );
}

#[test]
fn cycle_decomposition_validation() {
    assert!("(1 2)(3)".parse::<CycleDecomposition>().is_ok());
    assert!(matches!(
        CycleDecomposition::new(3, &[vec![1, 2]]),
        Err(Error::InvalidDecomposition(_))
    ));
    assert!("(1 2)(2 3)".parse::<CycleDecomposition>().is_err());
    let d: CycleDecomposition = "(2 3)(1)".parse().unwrap();
    assert_eq!(d.to_string(), "(1)(2 3)");
    assert_eq!(d.cycles(), vec![vec![0], vec![1, 2]]);
    assert!(!d.is_derangement());
}

#[test]
fn fierz_identity() {
    let adj = adjoint_pair_diagram();
    let pair = singlet_pair_diagram();
    let id = InvariantElement::identity(adj.signature().clone()).unwrap();
    let inv_n = RationalFunction::var().inv().unwrap();
    assert_eq!(adj.add(&pair.scale_rf(&inv_n)).unwrap(), id);
    assert_eq!(adj.compose(&adj).unwrap(), adj);
    assert_eq!(adj.trace().unwrap(), rf(&[-1, 0, 1], &[1]));
    assert!(adj.compose(&pair).unwrap().is_zero());
    let at3 = evaluate(&adj, 3).unwrap().trace().unwrap();
    assert_eq!(at3, rat(8));
}

#[test]
fn low_cycle_norms() {
    assert_eq!(state("(1)(2)(3)").norm_squared().unwrap(), rf(&[0, 0, 0, 1], &[1]));
    for c in ["(1 2)(3)", "(1 3)(2)", "(1)(2 3)"] {
        assert_eq!(state(c).norm_squared().unwrap(), rf(&[0, -1, 0, 1], &[1]), "{c}");
    }
}

#[test]
fn three_cycle_overlap() {
    let a = state("(1 2 3)");
    let b = state("(1 3 2)");
    // (N^2 - 1)(N^2 - 2)/N
    assert_eq!(a.norm_squared().unwrap(), rf(&[2, 0, -3, 0, 1], &[0, 1]));
    assert_eq!(b.norm_squared().unwrap(), a.norm_squared().unwrap());
    // -2(N^2 - 1)/N
    assert_eq!(a.inner_product(&b).unwrap(), rf(&[2, 0, -2], &[0, 1]));
    let id = state("(1)(2)(3)");
    assert!(id.inner_product(&a).unwrap().is_zero());
    assert!(state("(1 2)(3)").inner_product(&a).unwrap().is_zero());
}

#[test]
fn d_and_f() {
    let (d, f) = df_states().unwrap();
    assert!(d.inner_product(&f).unwrap().is_zero());
    let (dn, fn_) = df_norms().unwrap();
    // 2N(N^2 - 1) and 2(N^2 - 4)(N^2 - 1)/N
    assert_eq!(fn_, rf(&[0, -2, 0, 2], &[1]));
    assert_eq!(dn, rf(&[8, 0, -10, 0, 2], &[0, 1]));
    assert!(is_dimensionally_null(&d, 2).unwrap());
    assert!(is_dimensionally_null(&d, 1).unwrap());
    assert!(!is_dimensionally_null(&d, 3).unwrap());
    assert!(!is_dimensionally_null(&f, 2).unwrap());
}

#[test]
fn normalized_basis_three() {
    let basis = normalized_trace_basis(3).unwrap();
    let names: Vec<&str> = basis.iter().map(|p| p.name.as_str()).collect();
    assert_eq!(names, ["(1)(2)(3)", "(1 2)(3)", "(1 3)(2)", "(1)(2 3)", "f", "d"]);
    for (i, p) in basis.iter().enumerate() {
        assert_eq!(p.trace().unwrap(), RadicalCoefficient::one(), "element {i}");
        for q in &basis[i + 1..] {
            assert!(p.ket.inner_product(&q.ket).unwrap().is_zero());
        }
    }
}

#[test]
fn normalized_basis_small_k() {
    let one = normalized_trace_basis(1).unwrap();
    assert_eq!(one.len(), 1);
    let inv_n = RationalFunction::var().inv().unwrap();
    let pair = singlet_pair_diagram();
    assert_eq!(one[0].expand().unwrap(), pair.scale_rf(&inv_n));
    let two = normalized_trace_basis(2).unwrap();
    assert_eq!(two.len(), 2);
    assert!(two[0].ket.inner_product(&two[1].ket).unwrap().is_zero());
    // raw k = 2 trace states: N^2 and N^2 - 1 on the diagonal
    let raw: Vec<_> = trace_basis_states(2).unwrap().into_iter().map(|(_, s)| s).collect();
    assert_eq!(raw[0].norm_squared().unwrap(), rf(&[0, 0, 1], &[1]));
    assert_eq!(raw[1].norm_squared().unwrap(), rf(&[-1, 0, 1], &[1]));
}

#[test]
fn derangements() {
    assert_eq!(derangement_states(2).unwrap().len(), 1);
    assert_eq!(derangement_states(3).unwrap().len(), 2);
    assert_eq!(derangement_states(4).unwrap().len(), 9);
    // every pair of a derangement state is in the adjoint
    for k in [2, 3] {
        for s in derangement_states(k).unwrap() {
            for pair in 0..k {
                let p = adjoint_pair_projector(k, pair).unwrap();
                assert_eq!(p.apply(&s).unwrap(), s);
            }
        }
    }
}

#[test]
fn span_matches_bent_permutations() {
    for k in [2, 3] {
        let trace: Vec<_> = trace_basis_states(k).unwrap().into_iter().map(|(_, s)| s).collect();
        let bent: Vec<_> = Perm::all(k)
            .iter()
            .map(|p| InvariantElement::permutation(p).bend().unwrap())
            .collect();
        let mut both = trace.clone();
        both.extend(bent);
        // generic N: the union has rank k!
        let g = gram_at(&both, 7).unwrap();
        assert_eq!(exact_rank(&g), (1..=k).product::<usize>());
        assert_eq!(exact_rank(&gram_at(&trace, 7).unwrap()), (1..=k).product::<usize>());
    }
}

#[test]
fn rank_drops_at_two() {
    let raw: Vec<_> = trace_basis_states(3).unwrap().into_iter().map(|(_, s)| s).collect();
    assert_eq!(exact_rank(&gram_at(&raw, 2).unwrap()), 5);
    assert_eq!(exact_rank(&gram_at(&raw, 3).unwrap()), 6);
}

#[test]
fn symbolic_matches_numeric() {
    let states: Vec<_> = trace_basis_states(3).unwrap().into_iter().map(|(_, s)| s).collect();
    for n in 2..=5u32 {
        let t: Vec<_> = states.iter().map(|s| evaluate(s, n).unwrap()).collect();
        for i in 0..states.len() {
            for j in 0..states.len() {
                let sym = states[i].inner_product(&states[j]).unwrap().eval_at(n as i64).unwrap();
                assert_eq!(sym.as_rational().unwrap(), t[i].inner_product(&t[j]).unwrap());
            }
        }
    }
}
