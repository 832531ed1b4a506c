use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::coefficients::rat;
use crate::diagrams::PrimitiveDiagram;
use crate::numeric::exact_rank;
use crate::symmetrizers::irrep_dimension;
use crate::tracebasis::{adjoint_pair_diagram, singlet_pair_diagram};

fn shape(rows: &[usize]) -> YoungShape {
    YoungShape::new(rows.to_vec()).unwrap()
}

fn fact(n: usize) -> BigRational {
    rat((1..=n as i64).product())
}

#[test]
fn pieri_examples() {
    let mut got = pieri_add_antifundamental(&shape(&[2, 1]), 4);
    got.sort_by(|a, b| b.rows().cmp(a.rows()));
    assert_eq!(got, vec![shape(&[3, 2, 1]), shape(&[3, 1, 1, 1]), shape(&[2, 2, 1, 1])]);
    assert_eq!(pieri_add_antifundamental(&shape(&[1]), 2), vec![shape(&[2]), shape(&[1, 1])]);
    for n in 2..=5 {
        assert_eq!(pieri_add_antifundamental(&YoungShape::empty(), n), vec![YoungShape::column(n - 1)]);
    }
    assert!(pieri_add_antifundamental(&shape(&[1, 1, 1]), 2).is_empty());
}

#[test]
fn lr_examples() {
    assert_eq!(lr_decomposition(1, 0, 3), vec![shape(&[1])]);
    assert_eq!(lr_decomposition(2, 0, 3), vec![shape(&[2]), shape(&[1, 1])]);
    assert_eq!(lr_total_dimension(2, 0, 3).unwrap(), rat(9));
    let one_one = lr_decomposition(1, 1, 4);
    let dims: Vec<BigRational> = one_one.iter().map(|s| s.dimension_at(4).unwrap()).collect();
    assert_eq!(dims, vec![rat(15), rat(1)]);
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for big_n in [3, 4] {
            let want = rat((big_n as i64).pow((m + n) as u32));
            assert_eq!(lr_total_dimension(m, n, big_n).unwrap(), want, "({m},{n}) at {big_n}");
        }
    }
}

#[test]
fn dimensions_agree_with_hook_formula() {
    for s in lr_decomposition(2, 1, 4) {
        let stripped = s.strip_full_columns(4);
        let hook = irrep_dimension(&stripped).eval_at(4).unwrap();
        assert_eq!(s.dimension_at(4).unwrap(), hook);
    }
}

#[test]
fn transient_examples() {
    for n in 2..=5 {
        assert_eq!(
            transient_singlet_params(n, 0, n),
            vec![TransientParams { a: 1, b: 0, k: 0, alpha: n - 1 }]
        );
    }
    assert_eq!(transient_singlet_params(3, 0, 3)[0].alpha, 2);
    assert!(transient_singlet_params(1, 0, 3).is_empty());
    assert!(transient_singlet_params(2, 2, 3).is_empty());
    assert_eq!(transient_singlet_params(4, 1, 3), vec![TransientParams { a: 1, b: 0, k: 1, alpha: 3 }]);
    let v = serde_json::to_value(transient_singlet_params(3, 0, 3)).unwrap();
    assert_eq!(v[0]["alpha"], 2);
}

#[test]
fn epsilon_basics() {
    let e2 = epsilon_tensor(2).unwrap();
    assert_eq!(e2.get(&[0, 1]), rat(1));
    assert_eq!(e2.get(&[1, 0]), rat(-1));
    assert_eq!(e2.nnz(), 2);
    assert!(epsilon_tensor(1).is_err());
    for n in 2..=4 {
        let e = epsilon_tensor(n).unwrap();
        assert_eq!(e.inner_product(&e).unwrap(), fact(n));
        let a = antisymmetrizer(&(0..n).collect::<Vec<_>>(), n).unwrap();
        assert_eq!(epsilon_pair_operator(n).unwrap(), evaluate(&a, n as u32).unwrap());
    }
}

#[test]
fn leibniz_orthogonality() {
    let e = epsilon_tensor(3).unwrap();
    let t = leibniz_translate(&e, &[1, 2]).unwrap();
    assert_eq!(t.contracted, 2);
    assert_eq!(t.tensor.scale(&fact(2).recip()), crate::numeric::ExactTensor::identity(1, 3).unwrap());
    assert!(matches!(leibniz_translate(&e, &[0, 1, 2]), Err(Error::BadBlockSize(_))));
    assert!(matches!(leibniz_translate(&e, &[]), Err(Error::BadBlockSize(_))));
    assert!(matches!(leibniz_translate(&e, &[1, 1]), Err(Error::BadBlockSize(_))));
}

fn mixed_identity() -> InvariantElement {
    InvariantElement::identity(LegSignature::mixed(1, 1)).unwrap()
}

#[test]
fn leibniz_projectors_on_one_one() {
    for n in [3usize, 4] {
        let (singlet, adjoint) = leibniz_one_one_projectors(n).unwrap();
        let inv_n = BigRational::new(1.into(), (n as i64).into());
        let pair = evaluate(&singlet_pair_diagram(), n as u32).unwrap();
        assert_eq!(singlet, pair.scale(&inv_n), "singlet at N = {n}");
        let id = evaluate(&mixed_identity(), n as u32).unwrap();
        assert_eq!(adjoint, id.sub(&pair.scale(&inv_n)).unwrap(), "adjoint at N = {n}");
        assert_eq!(adjoint, evaluate(&adjoint_pair_diagram(), n as u32).unwrap());
    }
}

#[test]
fn hook_projector_constant() {
    // c · S12 A_{1,3..N} S12 is idempotent for c = 2(N - 1)/N
    for n in [3usize, 4] {
        let (_, h) = one_one_source_projectors(n).unwrap();
        let s12 = crate::symmetrizers::symmetrizer(&[0, 1], n).unwrap();
        let mut col = vec![0];
        col.extend(2..n);
        let raw = s12.compose(&antisymmetrizer(&col, n).unwrap()).unwrap().compose(&s12).unwrap();
        let c = BigRational::new((2 * (n as i64 - 1)).into(), (n as i64).into());
        let lhs = evaluate(&h, n as u32).unwrap();
        assert_eq!(lhs, evaluate(&raw, n as u32).unwrap().scale(&c));
    }
}

#[test]
fn baryon_equivalence() {
    let report = verify_baryon_equivalence(3).unwrap();
    assert!(report.passed(), "{:?}", report.failures());
    assert_eq!(report.untwist_sign, -1);
    assert_eq!(report.untwist_sign * report.untwist_sign, 1);
    assert!(report.correlator_deviation < CORRELATOR_TOLERANCE);
    assert!(verify_baryon_equivalence(4).is_err());
}

#[test]
fn no_three_strand_partner_at_four() {
    let a = evaluate(&antisymmetrizer(&[0, 1, 2], 3).unwrap(), 4).unwrap();
    assert_eq!(exact_rank(&a.to_matrix(3).unwrap()), 4);
    let anti = antisymmetrizer(&[0, 1], 2).unwrap().bend().unwrap();
    let proj = SingletOperator::projector_from_state(anti, vec![0], "A12".into()).unwrap();
    let p = evaluate(&proj.expand().unwrap(), 4).unwrap();
    assert_eq!(exact_rank(&p.to_matrix(4).unwrap()), 1);
}

#[test]
fn transient_partner_is_a_singlet_projector() {
    let params = transient_singlet_params(3, 0, 3)[0];
    let p = transient_partner(&params, 3).unwrap();
    let t = evaluate(&p.expand().unwrap(), 3).unwrap();
    assert_eq!(t.trace().unwrap(), rat(1));
    assert_eq!(t.matmul(&t).unwrap(), t);
    assert!(transient_partner(&TransientParams { a: 1, b: 0, k: 0, alpha: 5 }, 3).is_err());
}

#[test]
fn partial_trace_identity() {
    for (p, k) in [(3, 1), (3, 2), (4, 2)] {
        let long = evaluate(&antisymmetrizer(&(0..p).collect::<Vec<_>>(), p).unwrap(), p as u32).unwrap();
        let short = evaluate(&antisymmetrizer(&(0..k).collect::<Vec<_>>(), k).unwrap(), p as u32).unwrap();
        let traced = long.partial_trace(&(k..p).collect::<Vec<_>>()).unwrap();
        // (N - k)! k! / ((N - p)! p!) at N = p
        let factor = fact(p - k) * fact(k) / (fact(0) * fact(p));
        assert_eq!(traced, short.scale(&factor), "({p},{k})");
    }
}

#[test]
fn absorption_identity() {
    for (short, long) in [(2, 3), (3, 4)] {
        let a_long = antisymmetrizer(&(0..long).collect::<Vec<_>>(), long).unwrap();
        let a_short = antisymmetrizer(&(0..short).collect::<Vec<_>>(), long).unwrap();
        for n in [3u32, 4, 5] {
            let l = evaluate(&a_long, n).unwrap();
            let s = evaluate(&a_short, n).unwrap();
            assert_eq!(l.matmul(&s).unwrap(), l);
            assert_eq!(s.matmul(&l).unwrap(), l);
        }
    }
}

#[test]
fn mixed_primitives_survive_translation_shape() {
    let d = InvariantElement::primitive(LegSignature::mixed(1, 1), PrimitiveDiagram::new(Perm::identity(2))).unwrap();
    let t = evaluate(&d, 3).unwrap();
    let out = leibniz_translate(&t, &[0]).unwrap();
    assert_eq!(out.tensor.rank(), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn transient_consistency(m in 0usize..12, n in 0usize..12, big_n in 2usize..6) {
        for p in transient_singlet_params(m, n, big_n) {
            prop_assert!(p.alpha >= p.k);
            prop_assert_eq!((p.a + p.b) * (big_n - 1) + p.k, p.alpha);
            prop_assert_eq!(m - p.a * big_n, p.k);
            prop_assert_eq!(n - p.b * big_n, p.k);
            prop_assert!(p.a + p.b >= 1);
        }
    }

    #[test]
    fn pieri_strips_are_vertical(rows in prop::collection::vec(1usize..4, 0..3), big_n in 2usize..5) {
        let mut rows = rows;
        rows.sort_unstable_by(|a, b| b.cmp(a));
        let s = YoungShape::new(rows).unwrap();
        for t in pieri_add_antifundamental(&s, big_n) {
            prop_assert_eq!(t.size(), s.size() + big_n - 1);
            prop_assert!(t.num_rows() <= big_n);
            let mut padded = s.rows().to_vec();
            padded.resize(t.num_rows(), 0);
            prop_assert!(t.rows().iter().zip(&padded).all(|(a, b)| a - b <= 1));
        }
    }
}

#[test]
fn bare_hook_bends_to_a_multiple() {
    for n in [3usize, 4] {
        let (_, h) = one_one_source_projectors(n).unwrap();
        let bent = bend_to_one_one(&evaluate(&h, n as u32).unwrap()).unwrap();
        let adj = evaluate(&adjoint_pair_diagram(), n as u32).unwrap();
        let ratio = BigRational::new((n as i64).into(), (2 * (n as i64 - 1)).into());
        assert_eq!(bent, adj.scale(&ratio));
        // the restricted hook is A_{2..N} - A_{1..N}
        let tail = antisymmetrizer(&(1..n).collect::<Vec<_>>(), n).unwrap();
        let all = antisymmetrizer(&(0..n).collect::<Vec<_>>(), n).unwrap();
        assert_eq!(restrict_to_antiquark(&h, n).unwrap(), tail.sub(&all).unwrap());
    }
}
