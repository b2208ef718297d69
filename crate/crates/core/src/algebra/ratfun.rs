use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{poly_gcd, IntPoly};
use crate::{Error, Result};

/// Quotient of two integer polynomials; the denominator is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalFunction {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFunction { numerator, denominator })
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// Equality as rational functions: `p/q = r/s` iff `p*s = r*q`.
    pub fn same_function(&self, other: &RationalFunction) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

/// Cancels the common factor of numerator and denominator, removes any
/// common integer content and makes the denominator's leading coefficient
/// positive. The zero function becomes `0/1`.
pub fn rf_normalize(r: &RationalFunction) -> Result<RationalFunction> {
    if r.denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if r.numerator.is_zero() {
        return RationalFunction::new(IntPoly::zero(), IntPoly::one());
    }
    let g = poly_gcd(&r.numerator, &r.denominator)?;
    let exact =
        |p: &IntPoly| p.div_exact(&g)?.ok_or_else(|| Error::Inconsistency("gcd does not divide its argument".into()));
    let mut num = exact(&r.numerator)?;
    let mut den = exact(&r.denominator)?;
    let mut c = num.content().gcd(&den.content());
    if den.leading().is_some_and(Signed::is_negative) {
        c = -c;
    }
    if !c.is_zero() {
        num = IntPoly::from_coeffs(num.coeffs().iter().map(|x| x / &c).collect());
        den = IntPoly::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
    }
    RationalFunction::new(num, den)
}

/// Number of distinct poles: the number of distinct roots of the reduced
/// denominator `d`, computed as `deg(d / gcd(d, d'))`.
pub fn distinct_pole_count(r: &RationalFunction) -> Result<usize> {
    let reduced = rf_normalize(r)?;
    let d = reduced.denominator();
    if d.is_constant() {
        return Ok(0);
    }
    let g = poly_gcd(d, &d.derivative())?;
    let radical = d.div_exact(&g)?.ok_or_else(|| Error::Inconsistency("gcd does not divide its argument".into()))?;
    Ok(radical.degree() as usize)
}
