//! LaTeX rendering of exact coefficients. Tables only; no diagram graphics.

use birdtrack::coefficients::format_rational;
use birdtrack::{Poly, RadicalCoefficient, RationalFunction};
use num_traits::{One, Signed, Zero};

pub fn poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let coeff = if abs.is_integer() {
            abs.to_string()
        } else {
            format!("\\tfrac{{{}}}{{{}}}", abs.numer(), abs.denom())
        };
        match i {
            0 => out.push_str(&coeff),
            _ => {
                if !abs.is_one() {
                    out.push_str(&coeff);
                }
                out.push('N');
                if i > 1 {
                    out.push_str(&format!("^{{{i}}}"));
                }
            }
        }
    }
    out
}

pub fn rational_function(r: &RationalFunction) -> String {
    if r.den().is_one() {
        return poly(r.num());
    }
    format!("\\frac{{{}}}{{{}}}", poly(r.num()), poly(r.den()))
}

pub fn radical(c: &RadicalCoefficient) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.terms()
        .map(|(r, m)| {
            if r.is_one() {
                rational_function(m)
            } else if m.is_one() {
                format!("\\sqrt{{{}}}", poly(r))
            } else {
                format!("{} \\sqrt{{{}}}", rational_function(m), poly(r))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn rational(q: &num_rational::BigRational) -> String {
    if q.is_integer() {
        return format_rational(q);
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
}

/// `\begin{array}` over pre-rendered cells.
pub fn array(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let body: Vec<String> = rows.iter().map(|r| r.join(" & ")).collect();
    format!(
        "\\begin{{array}}{{{}}}\n{}\n\\end{{array}}\n",
        "c".repeat(cols),
        body.join(" \\\\\n")
    )
}
