use birdtrack::coefficients::format_rational;
use birdtrack::epsilon::{lr_decomposition, lr_total_dimension, transient_singlet_params};
use birdtrack::numeric::{complex_matrix_json, correlator_matrix, exact_rank, sample_special_unitary, unitarity_residual};
use birdtrack::singlets::{
    basis_states, gram_at, gram_matrix, is_dimensionally_null, operator_table, singlet_basis, singlet_count,
    BasisSource, SingletKind,
};
use birdtrack::tracebasis::{normalized_trace_basis, trace_basis_states};
use birdtrack::Result;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::latex;

/// One command's result in every output format.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub latex: String,
    /// False only for a failed `verify`.
    pub ok: bool,
}

impl Report {
    fn new(command: &str, mut body: Value, text: String, latex: String) -> Self {
        let obj = body.as_object_mut().expect("report bodies are objects");
        obj.insert("schema".into(), json!("1"));
        obj.insert("command".into(), json!(command));
        Report { json: body, text, latex, ok: true }
    }
}

fn source_name(source: BasisSource) -> &'static str {
    match source {
        BasisSource::Builtin => "builtin",
        BasisSource::Trace => "trace",
        BasisSource::TraceOrthogonalize => "trace+orthogonalize",
    }
}

fn rational_rows(m: &[Vec<BigRational>]) -> Value {
    json!(m.iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn basis(k: usize, source: BasisSource) -> Result<Report> {
    let states = basis_states(k, source)?;
    let mut rows = Vec::with_capacity(states.len());
    let mut text = String::new();
    let mut tex = vec![vec!["\\text{state}".to_string(), "\\langle s|s\\rangle".to_string()]];
    for (name, ket) in &states {
        let norm = ket.norm_squared()?;
        text.push_str(&format!("{name}: |s|^2 = {norm}\n  {ket}\n"));
        tex.push(vec![format!("\\text{{{name}}}"), latex::radical(&norm)]);
        rows.push(json!({ "name": name, "norm_squared": norm, "ket": ket }));
    }
    let body = json!({ "k": k, "source": source_name(source), "states": rows });
    Ok(Report::new("basis", body, text, latex::array(&tex)))
}

pub fn gram(k: usize, source: BasisSource, n: Option<u32>) -> Result<Report> {
    let (names, states): (Vec<String>, Vec<_>) = basis_states(k, source)?.into_iter().unzip();
    match n {
        None => {
            let g = gram_matrix(&states)?;
            let text = g
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | "))
                .collect::<Vec<_>>()
                .join("\n");
            let tex: Vec<Vec<String>> = g.iter().map(|r| r.iter().map(latex::radical).collect()).collect();
            let body = json!({ "k": k, "source": source_name(source), "labels": names, "gram": g });
            Ok(Report::new("gram", body, text + "\n", latex::array(&tex)))
        }
        Some(n) => {
            let g = gram_at(&states, n)?;
            let rank = exact_rank(&g);
            let text = g
                .iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            let tex: Vec<Vec<String>> = g.iter().map(|r| r.iter().map(latex::rational).collect()).collect();
            let body = json!({
                "k": k, "source": source_name(source), "N": n, "labels": names,
                "gram": rational_rows(&g), "rank": rank,
            });
            Ok(Report::new("gram", body, format!("{text}\nrank {rank}\n"), latex::array(&tex)))
        }
    }
}

pub fn singlets(k: usize, source: BasisSource) -> Result<Report> {
    let basis = singlet_basis(k, source)?;
    let table = operator_table(&basis)?;
    let mut ops = Vec::new();
    let mut text = String::new();
    let mut cells = Vec::new();
    for (i, row) in table.iter().enumerate() {
        let mut tex_row = Vec::new();
        for (j, op) in row.iter().enumerate() {
            let (symbol, label) = match op.kind {
                SingletKind::Projector => (format!("\\chi_{{{}}} P_{{{}}}", i + 1, i + 1), format!("P{}", i + 1)),
                SingletKind::Transition => (
                    format!("\\chi_{{{}{}}} T_{{{}{}}}", i + 1, j + 1, i + 1, j + 1),
                    format!("T{}{}", i + 1, j + 1),
                ),
            };
            text.push_str(&format!("{label} [{} -> {}]: {}\n", basis[j].name, basis[i].name, op.normalization));
            tex_row.push(symbol);
            ops.push(json!({ "row": i, "col": j, "operator": op }));
        }
        cells.push(tex_row);
    }
    let mut tex = latex::array(&cells);
    for (i, p) in basis.iter().enumerate() {
        tex.push_str(&format!(
            "\\chi_{{{}}} = {} \\quad \\text{{({})}}\\\\\n",
            i + 1,
            latex::radical(&p.normalization),
            p.name
        ));
    }
    tex.push_str("\\chi_{ij} = \\sqrt{\\chi_i \\chi_j}\n");
    let projectors = basis.len();
    let body = json!({
        "k": k, "source": source_name(source),
        "projectors": projectors, "transitions": projectors * projectors - projectors,
        "operators": ops,
    });
    Ok(Report::new("singlets", body, text, tex))
}

pub fn trace_basis(k: usize) -> Result<Report> {
    let raw = trace_basis_states(k)?;
    let normalized = normalized_trace_basis(k)?;
    let mut text = String::new();
    let mut tex = vec![vec!["\\rho".to_string(), "\\langle\\rho|\\rho\\rangle".to_string()]];
    let mut raw_rows = Vec::new();
    for (rho, s) in &raw {
        let norm = s.norm_squared()?;
        text.push_str(&format!("{rho}: |s|^2 = {norm}\n"));
        tex.push(vec![rho.to_string(), latex::radical(&norm)]);
        raw_rows.push(json!({ "cycles": rho.to_string(), "norm_squared": norm, "ket": s }));
    }
    text.push_str("normalized:\n");
    for p in &normalized {
        text.push_str(&format!("  {}: {}\n", p.name, p.normalization));
    }
    let body = json!({ "k": k, "states": raw_rows, "normalized": normalized });
    Ok(Report::new("trace-basis", body, text, latex::array(&tex)))
}

pub fn lr(m: usize, n: usize, big_n: usize) -> Result<Report> {
    let shapes = lr_decomposition(m, n, big_n);
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut tex = vec![vec!["\\lambda".to_string(), "\\dim".to_string()]];
    for s in &shapes {
        let d = s.dimension_at(big_n)?;
        text.push_str(&format!("{s}: {d}\n"));
        tex.push(vec![s.to_string(), latex::rational(&d)]);
        rows.push(json!({ "shape": s, "dimension": format_rational(&d) }));
    }
    let total = lr_total_dimension(m, n, big_n)?;
    let expected = BigRational::from_integer(num_bigint::BigInt::from(big_n).pow((m + n) as u32));
    text.push_str(&format!("total {total} (N^(m+n) = {expected})\n"));
    let body = json!({
        "m": m, "n": n, "N": big_n, "shapes": rows,
        "total_dimension": format_rational(&total), "expected": format_rational(&expected),
    });
    Ok(Report::new("lr", body, text, latex::array(&tex)))
}

pub fn transient(m: usize, n: usize, big_n: usize) -> Result<Report> {
    let params = transient_singlet_params(m, n, big_n);
    let mut text = String::new();
    let mut tex = vec![["a", "b", "k", "\\alpha"].map(String::from).to_vec()];
    for p in &params {
        text.push_str(&format!("a={} b={} k={} alpha={}\n", p.a, p.b, p.k, p.alpha));
        tex.push([p.a, p.b, p.k, p.alpha].map(|x| x.to_string()).to_vec());
    }
    if params.is_empty() {
        text.push_str("no transient singlet structure\n");
    }
    let body = json!({ "m": m, "n": n, "N": big_n, "params": params });
    Ok(Report::new("transient", body, text, latex::array(&tex)))
}

pub fn eval(k: usize, n: u32, source: BasisSource) -> Result<Report> {
    let count = singlet_count(k, n, source)?;
    let states = basis_states(k, source)?;
    let mut null = Vec::new();
    for (name, s) in &states {
        if is_dimensionally_null(s, n)? {
            null.push(name.clone());
        }
    }
    let text = format!("singlet count {count}\nnull states: {}\n", null.join(", "));
    let tex = format!("\\#\\text{{singlets}}(k={k}, N={n}) = {count}\n");
    let body = json!({ "k": k, "N": n, "source": source_name(source), "singlet_count": count, "null_states": null });
    Ok(Report::new("eval", body, text, tex))
}

pub fn correlator(k: usize, n: usize, seed: u64, source: BasisSource) -> Result<Report> {
    let (names, states): (Vec<String>, Vec<_>) = basis_states(k, source)?.into_iter().unzip();
    let legs = 2 * k;
    let us: Vec<_> = (0..legs as u64)
        .map(|i| sample_special_unitary(n, seed.wrapping_mul(legs as u64).wrapping_add(i)))
        .collect();
    let residual = us.iter().map(unitarity_residual).fold(0.0, f64::max);
    let m = correlator_matrix(&states, &us)?;
    let mut text = String::new();
    let mut tex = Vec::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{:+.12e}{:+.12e}i", m[(i, j)].re, m[(i, j)].im)).collect();
        text.push_str(&row.join("  "));
        text.push('\n');
        tex.push(row);
    }
    let body = json!({
        "k": k, "N": n, "seed": seed, "source": source_name(source), "labels": names,
        "matrix": complex_matrix_json(&m), "unitarity_residual": residual,
    });
    Ok(Report::new("correlator", body, text, latex::array(&tex)))
}

pub fn verify() -> Result<Report> {
    let checks = crate::suite::run();
    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;
    let mut text = String::new();
    let mut tex = vec![vec!["\\text{check}".to_string(), "\\text{result}".to_string()]];
    for c in &checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{verdict}  {:<28} {}\n", c.name, c.detail));
        tex.push(vec![format!("\\texttt{{{}}}", c.name.replace('_', "\\_")), verdict.to_string()]);
    }
    text.push_str(&format!("{passed} passed, {failed} failed\n"));
    let body = json!({ "checks": checks, "passed": passed, "failed": failed });
    let mut report = Report::new("verify", body, text, latex::array(&tex));
    report.ok = failed == 0;
    Ok(report)
}
