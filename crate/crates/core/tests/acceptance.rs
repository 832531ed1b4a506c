//! Acceptance criteria 1–10, one PASS/FAIL line each.
//!
//! Exact criteria compare canonical rational functions or big rationals with
//! zero tolerance. The two float legs use the pinned tolerances below.

use std::process::ExitCode;

use birdtrack::coefficients::rat;
use birdtrack::diagrams::{InvariantElement, LegSignature, Perm, PrimitiveDiagram};
use birdtrack::epsilon::{
    leibniz_one_one_projectors, lr_total_dimension, pieri_add_antifundamental, verify_baryon_equivalence,
};
use birdtrack::numeric::{evaluate, exact_rank, invariance_residual, ExactTensor};
use birdtrack::singlets::{basis_states, operator_table, singlet_basis, singlet_count, split_common_radical, BasisSource};
use birdtrack::symmetrizers::YoungShape;
use birdtrack::tracebasis::{df_states, singlet_pair_diagram, trace_basis_state};
use birdtrack::{Poly, RadicalCoefficient, RationalFunction};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Invariance residual bound, criterion 9.
const INVARIANCE_TOL: f64 = 1e-10;
/// Correlator coincidence-limit bound, criterion 7.
const CORRELATOR_TOL: f64 = 1e-10;
/// Criteria whose stated value contradicts an exact computation; see the
/// discrepancy notes printed with their lines.
const KNOWN_DISCREPANCIES: &[usize] = &[2];

type Outcome = Result<String, String>;

/// Polynomial in N with integer coefficients, lowest degree first, over an
/// integer polynomial denominator.
fn rf(num: &[i64], den: &[i64]) -> RadicalCoefficient {
    RationalFunction::new(Poly::from_i64(num), Poly::from_i64(den)).unwrap().into()
}

fn check(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

fn state(cycles: &str) -> InvariantElement {
    trace_basis_state(&cycles.parse().unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    let states = basis_states(3, BasisSource::Builtin).map_err(|e| e.to_string())?;
    // (N+2)(N+1)N/6; N(N^2-1)/3 four times; (N-2)(N-1)N/6
    let expect = [
        rf(&[0, 2, 3, 1], &[6]),
        rf(&[0, -1, 0, 1], &[3]),
        rf(&[0, -1, 0, 1], &[3]),
        rf(&[0, -1, 0, 1], &[3]),
        rf(&[0, -1, 0, 1], &[3]),
        rf(&[0, 2, -3, 1], &[6]),
    ];
    let got: Vec<_> = states.iter().map(|(_, s)| s.norm_squared().unwrap()).collect();
    check(got == expect, "six bent S3 norms equal 1/chi_i", format!("norms {got:?}"))
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    if state("(1)(2)(3)").norm_squared().unwrap() != rf(&[0, 0, 0, 1], &[1]) {
        bad.push("N^3".to_string());
    }
    for c in ["(1 2)(3)", "(1 3)(2)", "(1)(2 3)"] {
        if state(c).norm_squared().unwrap() != rf(&[0, -1, 0, 1], &[1]) {
            bad.push(c.to_string());
        }
    }
    let (d, f) = df_states().unwrap();
    if f.norm_squared().unwrap() != rf(&[0, -2, 0, 2], &[1]) {
        bad.push("f".into());
    }
    if d.norm_squared().unwrap() != rf(&[8, 0, -10, 0, 2], &[0, 1]) {
        bad.push("d".into());
    }
    let overlap = state("(1 2 3)").inner_product(&state("(1 3 2)")).unwrap();
    let stated = rf(&[1, 0, -1], &[0, 1]);
    if overlap != stated {
        bad.push(format!("<(123)|(132)> = {overlap}, stated -(N^2 - 1)/N"));
    }
    check(bad.is_empty(), "six norms and the 3-cycle overlap", bad.join("; "))
}

fn criterion_3() -> Outcome {
    let basis = singlet_basis(3, BasisSource::Builtin).unwrap();
    let table = operator_table(&basis).unwrap();
    let mut failures = 0;
    let mut checked = 0;
    for i in 0..6 {
        for j in 0..6 {
            let pij = table[i][i].product(&table[j][j]).unwrap();
            let ok_p = if i == j { pij.same_operator(&table[i][i]).unwrap() } else { pij.is_zero() };
            let t = &table[i][j];
            let ok_tt = t.product(&t.dagger()).unwrap().same_operator(&table[i][i]).unwrap();
            let ok_dag = t.dagger().same_operator(&table[j][i]).unwrap();
            failures += [ok_p, ok_tt, ok_dag].iter().filter(|ok| !**ok).count();
            checked += 3;
        }
    }
    check(failures == 0, format!("{checked} identities over 36 operators"), format!("{failures} of {checked} failed"))
}

fn criterion_4() -> Outcome {
    let cases = [(1, 1, 1), (1, 3, 1), (2, 2, 2), (2, 4, 2), (3, 3, 6), (3, 4, 6), (3, 6, 6), (3, 2, 5), (3, 1, 1), (2, 1, 1)];
    let mut bad = Vec::new();
    for (k, n, want) in cases {
        let symbolic = singlet_count(k, n, BasisSource::Trace).unwrap();
        // independent oracle: rank of the flattened numeric states
        let flat: Vec<Vec<BigRational>> = basis_states(k, BasisSource::Trace)
            .unwrap()
            .iter()
            .map(|(_, s)| evaluate(s, n).unwrap().to_matrix(0).unwrap().remove(0))
            .collect();
        let numeric = exact_rank(&flat);
        if symbolic != want || numeric != want {
            bad.push(format!("(k={k}, N={n}): symbolic {symbolic}, numeric {numeric}, want {want}"));
        }
    }
    check(bad.is_empty(), format!("{} (k, N) cases, symbolic = numeric rank", cases.len()), bad.join("; "))
}

fn criterion_5() -> Outcome {
    let sig = LegSignature::mixed(2, 1);
    let prim = |c: &str| {
        InvariantElement::primitive(sig.clone(), PrimitiveDiagram::new(Perm::parse_cycles(c, 3).unwrap())).unwrap()
    };
    let product = prim("(1 2 3)").compose(&prim("(1 3 2)")).unwrap();
    let loop_ok = product == prim("(1 3)").scale(&RadicalCoefficient::var());
    let a = InvariantElement::from_cycles(3, "(1 2)").unwrap();
    let b = InvariantElement::from_cycles(3, "(1 3 2)").unwrap();
    let perm_ok = a.compose(&b).unwrap() == InvariantElement::from_cycles(3, "(1 3)").unwrap();
    check(loop_ok && perm_ok, "N x (13) on V V V*; (12)(132) = (13)", format!("loop {loop_ok}, product {perm_ok}"))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for n in [3usize, 4] {
        let (singlet, adjoint) = leibniz_one_one_projectors(n).map_err(|e| e.to_string())?;
        let inv_n = BigRational::new(1.into(), (n as i64).into());
        let pair = evaluate(&singlet_pair_diagram(), n as u32).unwrap().scale(&inv_n);
        let id = ExactTensor::identity(2, n).unwrap();
        // identity on V (x) V* has the same δ pattern as on V (x) V
        let adjoint_target = id.sub(&pair).unwrap();
        if singlet != pair {
            bad.push(format!("singlet at N = {n}"));
        }
        if adjoint != adjoint_target {
            bad.push(format!("adjoint at N = {n}"));
        }
    }
    check(bad.is_empty(), "singlet and adjoint at N = 3, 4", bad.join("; "))
}

fn criterion_7() -> Outcome {
    let r = verify_baryon_equivalence(3).map_err(|e| e.to_string())?;
    let ok = r.main_path && r.untwisted && r.correlator_deviation < CORRELATOR_TOL && r.untwist_sign.pow(2) == 1;
    check(
        ok,
        format!("main, untwisted, correlator deviation {:.1e}", r.correlator_deviation),
        format!("failed: {:?}, deviation {:.1e}", r.failures(), r.correlator_deviation),
    )
}

fn criterion_8() -> Outcome {
    let mut got = pieri_add_antifundamental(&YoungShape::new(vec![2, 1]).unwrap(), 4);
    got.sort();
    let mut want: Vec<YoungShape> = [vec![3, 2, 1], vec![3, 1, 1, 1], vec![2, 2, 1, 1]]
        .into_iter()
        .map(|r| YoungShape::new(r).unwrap())
        .collect();
    want.sort();
    let mut bad = Vec::new();
    if got != want {
        bad.push(format!("pieri gave {got:?}"));
    }
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for big_n in [3usize, 4] {
            let total = lr_total_dimension(m, n, big_n).unwrap();
            if total != rat((big_n as i64).pow((m + n) as u32)) {
                bad.push(format!("({m},{n}) at N = {big_n}: {total}"));
            }
        }
    }
    check(bad.is_empty(), "[2,1] example and six dimension sums", bad.join("; "))
}

fn criterion_9() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 1..=3 {
        for source in [BasisSource::Builtin, BasisSource::Trace] {
            for (_, s) in basis_states(k, source).unwrap() {
                let (_, rational) = split_common_radical(&s).unwrap();
                for n in [2, 3] {
                    for seed in 0..5 {
                        worst = worst.max(invariance_residual(&rational, n, seed).unwrap());
                    }
                }
            }
        }
    }
    check(worst < INVARIANCE_TOL, format!("max residual {worst:.1e}"), format!("max residual {worst:.1e}"))
}

/// `c² ⟨x|y⟩` for `s = c x` with `x` rational, without leaving Q.
fn numeric_norm(s: &InvariantElement, n: u32) -> BigRational {
    let (c, x) = split_common_radical(s).unwrap();
    let c2 = (&c * &c).eval_at(n as i64).unwrap().as_rational().unwrap();
    let t = evaluate(&x, n).unwrap();
    c2 * t.inner_product(&t).unwrap()
}

fn criterion_10() -> Outcome {
    let mut states: Vec<InvariantElement> = basis_states(3, BasisSource::Builtin)
        .unwrap()
        .into_iter()
        .map(|(_, s)| s)
        .collect();
    let trace: Vec<InvariantElement> = basis_states(3, BasisSource::Trace).unwrap().into_iter().map(|(_, s)| s).collect();
    let (d, f) = df_states().unwrap();
    states.extend([d, f]);
    let mut compared = 0;
    let mut bad = Vec::new();
    for n in 2..=5u32 {
        for s in &states {
            let sym = s.norm_squared().unwrap().eval_at(n as i64).unwrap().as_rational().unwrap();
            compared += 1;
            if sym != numeric_norm(s, n) {
                bad.push(format!("norm at N = {n}"));
            }
        }
        let tensors: Vec<_> = trace.iter().map(|s| evaluate(s, n).unwrap()).collect();
        for (a, ta) in trace.iter().zip(&tensors) {
            for (b, tb) in trace.iter().zip(&tensors) {
                let sym = a.inner_product(b).unwrap().eval_at(n as i64).unwrap().as_rational().unwrap();
                compared += 1;
                if sym != ta.inner_product(tb).unwrap() {
                    bad.push(format!("trace Gram at N = {n}"));
                }
            }
        }
        for p in Perm::all(3) {
            let e = InvariantElement::permutation(&p);
            let sym = e.trace().unwrap().eval_at(n as i64).unwrap().as_rational().unwrap();
            compared += 1;
            if sym != evaluate(&e, n).unwrap().trace().unwrap() {
                bad.push(format!("trace of {p} at N = {n}"));
            }
        }
    }
    // the numeric oracle is the arbiter for the disputed overlap too
    let overlap = rat(-2) * (rat(9) - rat(1)) / rat(3);
    let numeric = evaluate(&state("(1 2 3)"), 3).unwrap().inner_product(&evaluate(&state("(1 3 2)"), 3).unwrap()).unwrap();
    if numeric != overlap || numeric.is_positive() || numeric.is_zero() {
        bad.push("overlap oracle".into());
    }
    check(bad.is_empty(), format!("{compared} exact comparisons at N = 2..5"), bad.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("chi-constant reproduction", criterion_1),
        ("xi-constant reproduction", criterion_2),
        ("singlet operator algebra", criterion_3),
        ("singlet counting", criterion_4),
        ("loop-factor semantics", criterion_5),
        ("Leibniz 1q1qbar endpoint", criterion_6),
        ("baryon equivalence", criterion_7),
        ("Pieri example and dimensions", criterion_8),
        ("invariance", criterion_9),
        ("symbolic/numeric specialization", criterion_10),
    ];
    let mut passed = 0;
    let mut unexpected = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        match run() {
            Ok(detail) => {
                passed += 1;
                println!("criterion {id:>2} PASS  {title}: {detail}");
            }
            Err(detail) => {
                let known = KNOWN_DISCREPANCIES.contains(&id);
                let tag = if known { " (known discrepancy)" } else { "" };
                println!("criterion {id:>2} FAIL  {title}: {detail}{tag}");
                if !known {
                    unexpected.push(id);
                }
            }
        }
    }
    println!("acceptance: {passed}/{} passed", criteria.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
