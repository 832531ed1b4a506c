//! Real numbers of the form `sum_i q_i * sqrt(s_i)` with rational `q_i` and
//! distinct squarefree positive integers `s_i`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial-division bound for square extraction; a cofactor left over after
/// this bound is only tested for being a perfect square.
const TRIAL_LIMIT: u64 = 1 << 20;

/// Split a positive integer as `t^2 * s` with `s` squarefree.
pub(crate) fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut t = BigInt::one();
    let mut s = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&bp) {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            t *= bp.pow(e / 2);
            if e % 2 == 1 {
                s *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        t *= r;
    } else {
        s *= rest;
    }
    (t, s)
}

/// `sqrt(v)` for rational `v >= 0`, as `(multiplier, squarefree radicand)`.
pub(crate) fn sqrt_rational(v: &BigRational) -> Option<(BigRational, BigInt)> {
    if v.is_negative() {
        return None;
    }
    if v.is_zero() {
        return Some((BigRational::zero(), BigInt::one()));
    }
    let (t, s) = split_square(&(v.numer() * v.denom()));
    Some((BigRational::new(t, v.denom().clone()), s))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactReal {
    terms: BTreeMap<BigInt, BigRational>,
}

impl ExactReal {
    pub fn zero() -> Self {
        ExactReal::default()
    }

    pub fn rational(q: BigRational) -> Self {
        ExactReal::term(q, BigInt::one())
    }

    fn term(q: BigRational, s: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(s, q);
        }
        ExactReal { terms }
    }

    /// Square root of a non-negative rational.
    pub fn sqrt(v: &BigRational) -> Result<Self> {
        let (q, s) = sqrt_rational(v).ok_or_else(|| Error::NegativeRadicand(v.to_string()))?;
        Ok(ExactReal::term(q, s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    /// `(radicand, multiplier)` pairs, radicand 1 first.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &BigRational)> {
        self.terms.iter()
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(s, q)| q.to_f64().unwrap_or(f64::NAN) * s.to_f64().unwrap_or(f64::NAN).sqrt())
            // an empty f64 sum is -0.0
            .fold(0.0, |a, b| a + b)
    }

    fn accumulate(&mut self, s: BigInt, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(s.clone()).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }
}

impl Add for &ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        for (s, q) in &rhs.terms {
            out.accumulate(s.clone(), q.clone());
        }
        out
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        ExactReal {
            terms: self.terms.iter().map(|(s, q)| (s.clone(), -q)).collect(),
        }
    }
}

impl Sub for &ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: &ExactReal) -> ExactReal {
        self + &(-rhs)
    }
}

impl Mul for &ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: &ExactReal) -> ExactReal {
        let mut out = ExactReal::zero();
        for (s1, q1) in &self.terms {
            for (s2, q2) in &rhs.terms {
                // sqrt(s1 s2) = g sqrt((s1/g)(s2/g)) with g = gcd(s1, s2)
                let g = s1.gcd(s2);
                let s = (s1 / &g) * (s2 / &g);
                out.accumulate(s, q1 * q2 * BigRational::from_integer(g));
            }
        }
        out
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if s.is_one() {
                write!(f, "{}", q)?;
            } else {
                write!(f, "{}*sqrt({})", q, s)?;
            }
        }
        Ok(())
    }
}
