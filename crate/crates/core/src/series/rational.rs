use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// A reduced quotient of integer polynomials whose denominator has constant
/// term 1, so its power series has integer coefficients and the representation
/// is unique.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Cancels the gcd and fixes the sign. Fails with `InvalidDenominator` unless
    /// the reduced denominator has constant term ±1.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.divexact(&g)?, den.divexact(&g)?);
        let c0 = den.constant_term();
        if !c0.abs().is_one() {
            return Err(Error::InvalidDenominator);
        }
        if c0.is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        RationalFunction { num: p, den: IntPolynomial::one() }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(IntPolynomial::one())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// Power-series coefficients `a_0, ..., a_n` of `num / den`.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut a = self.num.coeff(i);
            for (j, d) in den.iter().enumerate().skip(1).take(i) {
                a -= d * &out[i - j];
            }
            // den(0) = 1
            out.push(a);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("product of unit-constant denominators")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of unit-constant denominators")
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

fn wrap(p: &IntPolynomial) -> String {
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl IntPolynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.constant_term().is_one()
    }
}

/// Exact JSON integers of any size (serde_json's `arbitrary_precision`).
pub mod bigint_json {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn to_number(c: &BigInt) -> serde_json::Number {
        serde_json::Number::from_str(&c.to_string()).expect("decimal integer is a JSON number")
    }

    pub fn from_number(n: &serde_json::Number) -> std::result::Result<BigInt, String> {
        let text = n.to_string();
        BigInt::from_str(&text).map_err(|_| format!("{text} is not an integer"))
    }

    pub fn serialize<S: Serializer>(coeffs: &[BigInt], serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(coeffs.len()))?;
        for c in coeffs {
            seq.serialize_element(&to_number(c))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<serde_json::Number>::deserialize(deserializer)?;
        raw.iter().map(|n| from_number(n).map_err(serde::de::Error::custom)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    #[serde(with = "bigint_json")]
    num: Vec<BigInt>,
    #[serde(with = "bigint_json")]
    den: Vec<BigInt>,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let num = if self.num.is_zero() { vec![BigInt::zero()] } else { self.num.coeffs().to_vec() };
        RawRational { num, den: self.den.coeffs().to_vec() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRational::deserialize(deserializer)?;
        RationalFunction::new(IntPolynomial::new(raw.num), IntPolynomial::new(raw.den))
            .map_err(serde::de::Error::custom)
    }
}

impl RationalFunction {
    /// Parses `{"num": [c0, c1, ...], "den": [c0, c1, ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawRational = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        RationalFunction::new(IntPolynomial::new(raw.num), IntPolynomial::new(raw.den))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rational function serialization is infallible")
    }
}
