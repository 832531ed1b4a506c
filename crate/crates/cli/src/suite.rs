//! The `verify` invariant suite: each check recomputes a library result and
//! compares it with a literal expected value.

use birdtrack::coefficients::rat;
use birdtrack::diagrams::{InvariantElement, LegSignature, Perm, PrimitiveDiagram};
use birdtrack::epsilon::{
    leibniz_one_one_projectors, lr_total_dimension, pieri_add_antifundamental, transient_partner,
    transient_singlet_params, verify_baryon_equivalence,
};
use birdtrack::numeric::{evaluate, fierz_residual, invariance_residual, ExactTensor};
use birdtrack::singlets::{
    basis_states, operator_table, singlet_basis, singlet_count, split_common_radical, BasisSource,
};
use birdtrack::symmetrizers::YoungShape;
use birdtrack::tracebasis::{adjoint_pair_diagram, df_norms, singlet_pair_diagram, trace_basis_state};
use birdtrack::{ExactReal, Poly, RadicalCoefficient, RationalFunction, Result};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn rf(num: &[i64], den: &[i64]) -> RadicalCoefficient {
    RationalFunction::new(Poly::from_i64(num), Poly::from_i64(den))
        .expect("nonzero literal denominator")
        .into()
}

type Probe = fn() -> Result<(bool, String)>;

const CHECKS: &[(&str, Probe)] = &[
    ("chi_norms", chi_norms),
    ("trace_norms", trace_norms),
    ("operator_algebra", operator_algebra),
    ("singlet_counts", singlet_counts),
    ("loop_factor", loop_factor),
    ("fierz", fierz),
    ("leibniz_one_one", leibniz_one_one),
    ("baryon_equivalence", baryon),
    ("pieri", pieri),
    ("transient_partner", transient),
    ("invariance", invariance),
    ("symbolic_vs_numeric", symbolic_vs_numeric),
];

pub fn run() -> Vec<Check> {
    CHECKS
        .par_iter()
        .map(|(name, probe)| {
            let (passed, detail) = probe().unwrap_or_else(|e| (false, format!("error: {e}")));
            Check { name, passed, detail }
        })
        .collect()
}

fn chi_norms() -> Result<(bool, String)> {
    let states = basis_states(3, BasisSource::Builtin)?;
    // (N+2)(N+1)N/6, N(N^2-1)/3 four times, (N-2)(N-1)N/6
    let sym = rf(&[0, 2, 3, 1], &[6]);
    let mixed = rf(&[0, -1, 0, 1], &[3]);
    let anti = rf(&[0, 2, -3, 1], &[6]);
    let expect = [&sym, &mixed, &mixed, &mixed, &mixed, &anti];
    let mut ok = true;
    for ((_, s), e) in states.iter().zip(expect) {
        ok &= s.norm_squared()? == *e;
    }
    Ok((ok, "six bent S3 norms".into()))
}

fn trace_norms() -> Result<(bool, String)> {
    let cube = rf(&[0, 0, 0, 1], &[1]);
    let adj = rf(&[0, -1, 0, 1], &[1]);
    let mut ok = trace_basis_state(&"(1)(2)(3)".parse()?)?.norm_squared()? == cube;
    for c in ["(1 2)(3)", "(1 3)(2)", "(1)(2 3)"] {
        ok &= trace_basis_state(&c.parse()?)?.norm_squared()? == adj;
    }
    let (d, f) = df_norms()?;
    ok &= f == rf(&[0, -2, 0, 2], &[1]);
    ok &= d == rf(&[8, 0, -10, 0, 2], &[0, 1]);
    let a = trace_basis_state(&"(1 2 3)".parse()?)?;
    let b = trace_basis_state(&"(1 3 2)".parse()?)?;
    let overlap = a.inner_product(&b)?;
    ok &= overlap == rf(&[2, 0, -2], &[0, 1]);
    Ok((ok, format!("<(123)|(132)> = {overlap}")))
}

fn operator_algebra() -> Result<(bool, String)> {
    let basis = singlet_basis(3, BasisSource::Builtin)?;
    let table = operator_table(&basis)?;
    let mut ok = true;
    for (i, row) in table.iter().enumerate() {
        let pi = &table[i][i];
        for (j, t) in row.iter().enumerate() {
            let pj = &table[j][j];
            let pp = pi.product(pj)?;
            ok &= if i == j { pp.same_operator(pi)? } else { pp.is_zero() };
            ok &= t.dagger().same_operator(&table[j][i])?;
            ok &= t.product(&t.dagger())?.same_operator(pi)?;
        }
    }
    Ok((ok, format!("{} operators", table.len() * table.len())))
}

fn singlet_counts() -> Result<(bool, String)> {
    let cases = [(1, 1, 1), (1, 4, 1), (2, 2, 2), (2, 5, 2), (3, 3, 6), (3, 5, 6), (3, 2, 5), (3, 1, 1), (2, 1, 1)];
    let mut ok = true;
    for (k, n, want) in cases {
        ok &= singlet_count(k, n, BasisSource::Trace)? == want;
    }
    Ok((ok, format!("{} (k, N) cases", cases.len())))
}

fn loop_factor() -> Result<(bool, String)> {
    let sig = LegSignature::mixed(2, 1);
    let prim = |c: &str| -> Result<InvariantElement> {
        InvariantElement::primitive(sig.clone(), PrimitiveDiagram::new(Perm::parse_cycles(c, 3)?))
    };
    let lhs = prim("(1 2 3)")?.compose(&prim("(1 3 2)")?)?;
    let mut ok = lhs == prim("(1 3)")?.scale(&RadicalCoefficient::var());
    let a = InvariantElement::from_cycles(3, "(1 2)")?;
    let b = InvariantElement::from_cycles(3, "(1 3 2)")?;
    ok &= a.compose(&b)? == InvariantElement::from_cycles(3, "(1 3)")?;
    Ok((ok, "N x (13) on V V V*; (12)(132) = (13)".into()))
}

fn fierz() -> Result<(bool, String)> {
    let id = InvariantElement::identity(LegSignature::mixed(1, 1))?;
    let inv_n = RationalFunction::var().inv()?;
    let mut ok = adjoint_pair_diagram().add(&singlet_pair_diagram().scale_rf(&inv_n))? == id;
    let worst = (2..=4).map(fierz_residual).fold(0.0, f64::max);
    ok &= worst < 1e-10;
    Ok((ok, format!("generator residual {worst:.1e}")))
}

fn leibniz_one_one() -> Result<(bool, String)> {
    let mut ok = true;
    for n in [3usize, 4] {
        let (singlet, adjoint) = leibniz_one_one_projectors(n)?;
        let inv_n = BigRational::new(1.into(), (n as i64).into());
        let pair = evaluate(&singlet_pair_diagram(), n as u32)?.scale(&inv_n);
        let id = evaluate(&InvariantElement::identity(LegSignature::mixed(1, 1))?, n as u32)?;
        ok &= singlet == pair;
        ok &= adjoint == id.sub(&pair)?;
    }
    Ok((ok, "N = 3, 4".into()))
}

fn baryon() -> Result<(bool, String)> {
    let r = verify_baryon_equivalence(3)?;
    Ok((r.passed(), format!("correlator deviation {:.1e}", r.correlator_deviation)))
}

fn pieri() -> Result<(bool, String)> {
    let mut got = pieri_add_antifundamental(&YoungShape::new(vec![2, 1])?, 4);
    got.sort();
    let mut want = vec![
        YoungShape::new(vec![3, 2, 1])?,
        YoungShape::new(vec![3, 1, 1, 1])?,
        YoungShape::new(vec![2, 2, 1, 1])?,
    ];
    want.sort();
    let mut ok = got == want;
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for big_n in [3usize, 4] {
            ok &= lr_total_dimension(m, n, big_n)? == rat((big_n as i64).pow((m + n) as u32));
        }
    }
    Ok((ok, "[2,1] at N = 4; dimension sums".into()))
}

fn transient() -> Result<(bool, String)> {
    let params = transient_singlet_params(3, 0, 3);
    let p = transient_partner(&params[0], 3)?;
    let t: ExactTensor = evaluate(&p.expand()?, 3)?;
    let ok = params.len() == 1 && t.trace()? == rat(1);
    Ok((ok, format!("{:?}", params)))
}

fn invariance() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for k in 1..=3 {
        for (_, s) in basis_states(k, BasisSource::Trace)? {
            for n in [2, 3] {
                for seed in 0..5 {
                    worst = worst.max(invariance_residual(&s, n, seed)?);
                }
            }
        }
    }
    Ok((worst < 1e-10, format!("max residual {worst:.1e}")))
}

fn symbolic_vs_numeric() -> Result<(bool, String)> {
    // builtin states may carry one common radical: compare c² · <x|y> numerically
    let split = basis_states(3, BasisSource::Trace)?
        .into_iter()
        .chain(basis_states(3, BasisSource::Builtin)?)
        .map(|(_, s)| Ok((split_common_radical(&s)?, s)))
        .collect::<Result<Vec<_>>>()?;
    let mut ok = true;
    let mut compared = 0;
    for n in 2..=5u32 {
        let numeric = split
            .iter()
            .map(|((c, x), _)| Ok((c.clone(), evaluate(x, n)?)))
            .collect::<Result<Vec<_>>>()?;
        for (((_, _), a), (ca, ta)) in split.iter().zip(&numeric) {
            for (((_, _), b), (cb, tb)) in split.iter().zip(&numeric) {
                let sym = a.inner_product(b)?.eval_at(n as i64)?;
                let scale = (ca * cb).eval_at(n as i64)?;
                let num = ta.inner_product(tb)?;
                // scale is a single square root; compare squares and signs when it is not rational
                ok &= match (sym.as_rational(), scale.as_rational()) {
                    (Some(s), Some(f)) => s == f * num,
                    _ if sym.is_zero() => num.is_zero(),
                    _ => {
                        let square = |x: &ExactReal| (x * x).as_rational();
                        let same_sign = sym.to_f64().signum() == (scale.to_f64() * num.to_f64().unwrap_or(0.0)).signum();
                        same_sign && square(&sym) == square(&scale).map(|f| f * &num * &num)
                    }
                };
                compared += 1;
            }
        }
    }
    let mut trace_ok = true;
    for p in Perm::all(3) {
        let e = InvariantElement::permutation(&p);
        for n in 2..=5u32 {
            trace_ok &= e.trace()?.eval_at(n as i64)?.as_rational() == Some(evaluate(&e, n)?.trace()?);
        }
    }
    Ok((ok && trace_ok, format!("{compared} inner products, 24 traces")))
}
