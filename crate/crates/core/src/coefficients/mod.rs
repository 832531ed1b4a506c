//! Exact scalars: polynomials and rational functions in `N`, their formal
//! square roots, and specializations at integer `N`.

mod exact_real;
mod poly;
mod radical;
mod rational_function;

pub use exact_real::ExactReal;
pub use poly::Poly;
pub use radical::RadicalCoefficient;
pub use rational_function::RationalFunction;

pub use poly::rat;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Always `"num/den"`, including integers.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs().iter().map(format_rational).collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(de)?;
        let coeffs = v
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionRepr {
    num: Poly,
    den: Poly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RationalFunctionRepr {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = RationalFunctionRepr::deserialize(de)?;
        RationalFunction::new(r.num, r.den).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RadicalTermRepr {
    radicand: Poly,
    multiplier: RationalFunction,
}

impl Serialize for RadicalCoefficient {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<RadicalTermRepr> = self
            .terms()
            .map(|(r, m)| RadicalTermRepr {
                radicand: r.clone(),
                multiplier: m.clone(),
            })
            .collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RadicalCoefficient {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = Vec::<RadicalTermRepr>::deserialize(de)?;
        RadicalCoefficient::from_terms(
            v.into_iter()
                .map(|t| (RationalFunction::from_poly(t.radicand), t.multiplier)),
        )
        .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_i64(&c))
    }

    /// Denominators are products of `(N + c)` with `c` in a small range,
    /// so sampled points `n >= 3` with `n + c != 0` stay pole-free.
    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (small_poly(), prop::collection::vec(-2i64..=2, 0..3), 1i64..=5).prop_map(|(p, den, c)| {
            let d = RationalFunction::from_factors(rat(c), &den, &[]);
            (&RationalFunction::from_poly(p) / &d).unwrap()
        })
    }

    fn positive_rf() -> impl Strategy<Value = RationalFunction> {
        (
            prop::collection::vec(-3i64..=3, 0..4),
            prop::collection::vec(-3i64..=3, 0..3),
            1i64..=12,
            1i64..=12,
        )
            .prop_map(|(num, den, p, q)| RationalFunction::from_factors(rat(p) / rat(q), &num, &den))
    }

    fn small_radical() -> impl Strategy<Value = RadicalCoefficient> {
        prop::collection::vec((positive_rf(), small_rf()), 0..3)
            .prop_map(|v| RadicalCoefficient::from_terms(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn eval_is_a_ring_homomorphism(a in small_radical(), b in small_radical(), n in 6i64..=12) {
            // radicands here have roots in [-3, 3] and poles in [-3, 3]
            let (ea, eb) = (a.eval_at(n).unwrap(), b.eval_at(n).unwrap());
            prop_assert_eq!((&a + &b).eval_at(n).unwrap(), &ea + &eb);
            prop_assert_eq!((&a * &b).eval_at(n).unwrap(), &ea * &eb);
        }

        #[test]
        fn sqrt_squares_back(r in positive_rf()) {
            let s = RadicalCoefficient::sqrt(&r).unwrap();
            prop_assert_eq!(s.square(), RadicalCoefficient::from(r));
        }

        #[test]
        fn canonicalization_is_idempotent(a in small_radical()) {
            let json = serde_json::to_string(&a).unwrap();
            let back: RadicalCoefficient = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(&back, &a);
            let again = RadicalCoefficient::from_terms(
                a.terms().map(|(r, m)| (RationalFunction::from_poly(r.clone()), m.clone())),
            )
            .unwrap();
            prop_assert_eq!(again, a);
        }
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1) / rat(2)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&rat(2)), "2/1");
    }

    #[test]
    fn json_shape() {
        let c = RadicalCoefficient::sqrt(&RationalFunction::from_ratio(4, 3)).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(
            v,
            serde_json::json!([{"radicand": ["3/1"], "multiplier": {"num": ["2/3"], "den": ["1/1"]}}])
        );
    }
}
