//! Q(N) extended by formal square roots of squarefree polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::exact_real::{split_square, ExactReal};
use super::poly::Poly;
use super::rational_function::RationalFunction;
use crate::error::{Error, Result};

/// `sum_r m_r * sqrt(r)`. Each radicand `r` is a squarefree polynomial with
/// coprime integer coefficients times a squarefree positive integer and a
/// positive leading coefficient; radicand `1` carries the rational part.
/// Multipliers are never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RadicalCoefficient {
    terms: BTreeMap<Poly, RationalFunction>,
}

impl From<RationalFunction> for RadicalCoefficient {
    fn from(r: RationalFunction) -> Self {
        RadicalCoefficient::single(Poly::one(), r)
    }
}

impl From<i64> for RadicalCoefficient {
    fn from(c: i64) -> Self {
        RationalFunction::from_int(c).into()
    }
}

impl RadicalCoefficient {
    fn single(radicand: Poly, mult: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !mult.is_zero() {
            terms.insert(radicand, mult);
        }
        RadicalCoefficient { terms }
    }

    pub fn zero() -> Self {
        RadicalCoefficient::default()
    }

    pub fn one() -> Self {
        RationalFunction::one().into()
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        RationalFunction::from_ratio(p, q).into()
    }

    /// The variable `N`.
    pub fn var() -> Self {
        RationalFunction::var().into()
    }

    /// Build from `(radicand, multiplier)` pairs, canonicalizing radicands.
    pub fn from_terms<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RationalFunction, RationalFunction)>,
    {
        let mut out = RadicalCoefficient::zero();
        for (r, m) in pairs {
            if m.is_zero() {
                continue;
            }
            let root = RadicalCoefficient::sqrt(&r)?;
            out = &out + &root.scale(&m);
        }
        Ok(out)
    }

    /// Exact square root of a nonzero rational function whose leading
    /// coefficient is positive.
    pub fn sqrt(r: &RationalFunction) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroRadicand);
        }
        if r.leading_ratio().is_negative() {
            return Err(Error::NegativeRadicand(r.to_string()));
        }
        // sqrt(p/q) = sqrt(p q) / q
        let f = r.num() * r.den();
        let (mult, radicand) = sqrt_poly(&f);
        let mult = RationalFunction::new(mult, r.den().clone())?;
        Ok(RadicalCoefficient::single(radicand, mult))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Poly, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The coefficient as an element of Q(N), if it has no radical part.
    pub fn as_rational(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::zero()),
            1 => self.terms.get(&Poly::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn scale(&self, m: &RationalFunction) -> Self {
        if m.is_zero() {
            return RadicalCoefficient::zero();
        }
        RadicalCoefficient {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), c * m)).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        RadicalCoefficient::one().div(self)
    }

    /// Division by a single-term coefficient: `a / (m sqrt(r)) = a sqrt(r) / (m r)`.
    pub fn div(&self, rhs: &RadicalCoefficient) -> Result<Self> {
        let mut it = rhs.terms.iter();
        let (r, m) = match (it.next(), it.next()) {
            (None, _) => return Err(Error::DivisionByZero),
            (Some(t), None) => t,
            (Some(_), Some(_)) => return Err(Error::UnsupportedRadicalDivision(rhs.terms.len())),
        };
        let denom = m * &RationalFunction::from_poly(r.clone());
        let factor = RadicalCoefficient::single(r.clone(), denom.inv()?);
        Ok(self * &factor)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Specialize at `N = n`.
    pub fn eval_at(&self, n: i64) -> Result<ExactReal> {
        let mut acc = ExactReal::zero();
        for (r, m) in &self.terms {
            let mv = m.eval_at(n)?;
            let rv = r.eval_int(n);
            let root = ExactReal::sqrt(&rv)?;
            acc = &acc + &(&root * &ExactReal::rational(mv));
        }
        Ok(acc)
    }

    fn accumulate(&mut self, r: Poly, m: RationalFunction) {
        if m.is_zero() {
            return;
        }
        match self.terms.get_mut(&r) {
            Some(slot) => {
                let sum = &*slot + &m;
                if sum.is_zero() {
                    self.terms.remove(&r);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(r, m);
            }
        }
    }
}

/// `sqrt(f) = mult * sqrt(radicand)` for a polynomial `f` with positive
/// leading coefficient.
fn sqrt_poly(f: &Poly) -> (Poly, Poly) {
    let lc = f.leading();
    let mut square = Poly::one();
    let mut odd = Poly::one();
    for (i, fi) in f.squarefree_factors().iter().enumerate() {
        let e = i + 1;
        if e >= 2 {
            square = &square * &fi.pow((e / 2) as u32);
        }
        if e % 2 == 1 {
            odd = &odd * fi;
        }
    }
    // odd is monic; write it as c * primitive and fold c into the constant
    let (c, prim) = odd.primitive_part();
    let constant = &lc * &c;
    let (t, s) = split_square(&(constant.numer() * constant.denom()));
    let mult = BigRational::new(t, constant.denom().clone());
    let radicand = prim.scale(&BigRational::from_integer(s));
    (square.scale(&mult), radicand)
}

impl Add for &RadicalCoefficient {
    type Output = RadicalCoefficient;
    fn add(self, rhs: &RadicalCoefficient) -> RadicalCoefficient {
        let (mut out, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (r, m) in &other.terms {
            out.accumulate(r.clone(), m.clone());
        }
        out
    }
}

impl Neg for &RadicalCoefficient {
    type Output = RadicalCoefficient;
    fn neg(self) -> RadicalCoefficient {
        RadicalCoefficient {
            terms: self.terms.iter().map(|(r, m)| (r.clone(), -m)).collect(),
        }
    }
}

impl Sub for &RadicalCoefficient {
    type Output = RadicalCoefficient;
    fn sub(self, rhs: &RadicalCoefficient) -> RadicalCoefficient {
        self + &(-rhs)
    }
}

impl Mul for &RadicalCoefficient {
    type Output = RadicalCoefficient;
    fn mul(self, rhs: &RadicalCoefficient) -> RadicalCoefficient {
        let mut out = RadicalCoefficient::zero();
        for (r1, m1) in &self.terms {
            for (r2, m2) in &rhs.terms {
                let m = m1 * m2;
                if r1.is_one() {
                    out.accumulate(r2.clone(), m);
                } else if r2.is_one() {
                    out.accumulate(r1.clone(), m);
                } else if r1 == r2 {
                    out.accumulate(Poly::one(), &m * &RationalFunction::from_poly(r1.clone()));
                } else {
                    let (sq, rad) = sqrt_poly(&(r1 * r2));
                    out.accumulate(rad, &m * &RationalFunction::from_poly(sq));
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RadicalCoefficient {
            type Output = RadicalCoefficient;
            fn $m(self, rhs: RadicalCoefficient) -> RadicalCoefficient {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RadicalCoefficient {
    type Output = RadicalCoefficient;
    fn neg(self) -> RadicalCoefficient {
        -&self
    }
}

impl fmt::Display for RadicalCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if r.is_one() {
                write!(f, "{}", m)?;
            } else if m.is_one() {
                write!(f, "sqrt({})", r)?;
            } else {
                let ms = m.to_string();
                if m.is_polynomial() && m.num().coeffs().iter().filter(|c| !c.is_zero()).count() == 1 {
                    write!(f, "{}*sqrt({})", ms, r)?;
                } else {
                    write!(f, "({})*sqrt({})", ms, r)?;
                }
            }
        }
        Ok(())
    }
}
