use std::fmt;

use serde::Serialize;

use super::poly::IntPolynomial;
use super::rational::RationalFunction;

/// A product `∏ pᵢ^{aᵢ} / ∏ (1 - t^{kⱼ})^{bⱼ}`, kept unmultiplied for display.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FactoredForm {
    numerator: Vec<(IntPolynomial, u32)>,
    denominator: Vec<(usize, u32)>,
}

impl FactoredForm {
    pub fn one() -> Self {
        Self::default()
    }

    /// Multiplies in `p^e`; constant 1 factors are dropped.
    pub fn times(mut self, p: IntPolynomial, e: u32) -> Self {
        if e == 0 || p == IntPolynomial::one() {
            return self;
        }
        match self.numerator.iter_mut().find(|(q, _)| *q == p) {
            Some((_, a)) => *a += e,
            None => self.numerator.push((p, e)),
        }
        self
    }

    /// Divides by `(1 - t^k)^e`.
    pub fn over_one_minus(mut self, k: usize, e: u32) -> Self {
        assert!(k >= 1, "(1 - t^0) is zero");
        if e == 0 {
            return self;
        }
        match self.denominator.iter_mut().find(|(j, _)| *j == k) {
            Some((_, b)) => *b += e,
            None => self.denominator.push((k, e)),
        }
        self.denominator.sort_unstable();
        self
    }

    pub fn product(mut self, other: FactoredForm) -> Self {
        for (p, e) in other.numerator {
            self = self.times(p, e);
        }
        for (k, e) in other.denominator {
            self = self.over_one_minus(k, e);
        }
        self
    }

    pub fn numerator_factors(&self) -> &[(IntPolynomial, u32)] {
        &self.numerator
    }

    pub fn denominator_factors(&self) -> &[(usize, u32)] {
        &self.denominator
    }

    pub fn to_rational(&self) -> RationalFunction {
        let num = self.numerator.iter().fold(IntPolynomial::one(), |acc, (p, e)| &acc * &p.pow(*e));
        let den = self
            .denominator
            .iter()
            .fold(IntPolynomial::one(), |acc, (k, e)| &acc * &IntPolynomial::binomial(*k, -1).pow(*e));
        RationalFunction::new(num, den).expect("denominator is a product of (1 - t^k)")
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, p: &str, e: u32) -> fmt::Result {
    write!(f, "({p})")?;
    if e > 1 {
        write!(f, "^{e}")?;
    }
    Ok(())
}

impl fmt::Display for FactoredForm {
    /// `(1+t^3)^2/(1-t^2)^2`; an empty numerator prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            f.write_str("1")?;
        }
        for (p, e) in &self.numerator {
            let single_term = p.coeffs().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() == 1;
            if single_term && *e == 1 && self.numerator.len() == 1 {
                write!(f, "{p}")?;
            } else {
                write_factor(f, &p.to_string(), *e)?;
            }
        }
        if !self.denominator.is_empty() {
            f.write_str("/")?;
            for (k, e) in &self.denominator {
                let base = if *k == 1 { "1-t".to_string() } else { format!("1-t^{k}") };
                write_factor(f, &base, *e)?;
            }
        }
        Ok(())
    }
}

/// A Hilbert–Poincaré series: its factored shape and the reduced rational
/// function it equals. Equality compares the reduced value only.
#[derive(Clone, Debug)]
pub struct Series {
    factored: FactoredForm,
    rational: RationalFunction,
}

impl Series {
    pub fn from_factored(factored: FactoredForm) -> Self {
        let rational = factored.to_rational();
        Series { factored, rational }
    }

    pub fn factored(&self) -> &FactoredForm {
        &self.factored
    }

    pub fn rational(&self) -> &RationalFunction {
        &self.rational
    }

    pub fn expand(&self, n: usize) -> Vec<num_bigint::BigInt> {
        self.rational.expand(n)
    }

    pub fn product(&self, other: &Series) -> Series {
        Series::from_factored(self.factored.clone().product(other.factored.clone()))
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        self.rational == other.rational
    }
}

impl Eq for Series {}

impl PartialEq<RationalFunction> for Series {
    fn eq(&self, other: &RationalFunction) -> bool {
        &self.rational == other
    }
}

impl From<Series> for RationalFunction {
    fn from(s: Series) -> Self {
        s.rational
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.factored, f)
    }
}

impl Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rational.serialize(serializer)
    }
}
