//! Elements of Q(N) in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{rat, Poly};
use crate::error::{Error, Result};

/// `num / den` with `den` monic and `gcd(num, den) = 1`. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        RationalFunction::zero()
    }
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        if den.is_constant() {
            let inv = den.leading().recip();
            return RationalFunction {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        RationalFunction::constant(rat(c))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        RationalFunction::constant(rat(p) / rat(q))
    }

    /// The variable `N`.
    pub fn var() -> Self {
        RationalFunction::from_poly(Poly::var())
    }

    /// `N^k`
    pub fn var_pow(k: u32) -> Self {
        RationalFunction::from_poly(Poly::one().shift(k as usize))
    }

    /// Product of linear factors `(N + c)` over a numerator and denominator
    /// list, times a rational constant.
    pub fn from_factors(constant: BigRational, num: &[i64], den: &[i64]) -> Self {
        let n = num
            .iter()
            .fold(Poly::constant(constant), |acc, &c| &acc * &Poly::linear(c));
        let d = den.iter().fold(Poly::one(), |acc, &c| &acc * &Poly::linear(c));
        RationalFunction::canonical(n, d)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiply by `N^k`; cheap when the denominator is trivial.
    pub fn mul_var_pow(&self, k: u32) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        if self.den.is_one() {
            return RationalFunction {
                num: self.num.shift(k as usize),
                den: Poly::one(),
            };
        }
        self * &RationalFunction::var_pow(k)
    }

    /// Evaluate at `N = n`.
    pub fn eval_at(&self, n: i64) -> Result<BigRational> {
        let d = self.den.eval_int(n);
        if d.is_zero() {
            return Err(Error::PoleAtN(n.max(0) as u64));
        }
        Ok(self.num.eval_int(n) / d)
    }

    /// Leading coefficient of the numerator over that of the denominator;
    /// its sign is the sign of the function for large `N`.
    pub fn leading_ratio(&self) -> BigRational {
        self.num.leading() / self.den.leading()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_poly(&self.num + &rhs.num);
            }
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;
    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        Ok(self * &rhs.inv()?)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
