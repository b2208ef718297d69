use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;

/// Coefficients (low to high) of the unique polynomial of degree below
/// `points.len()` through the given points. Abscissae must be distinct.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    // Newton divided differences, in place
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            dd[i] = num / den;
        }
    }
    // Horner expansion of the Newton form
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let x = &points[i].0;
        // coeffs <- coeffs * (t - x) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * x;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Converts rational coefficients to an integer polynomial, or `None` if some
/// coefficient is not an integer.
pub fn rational_to_int_poly(coeffs: &[BigRational]) -> Option<IntPoly> {
    coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect::<Option<Vec<_>>>().map(IntPoly::from_coeffs)
}

/// Scales rational coefficients by the lcm of their denominators.
pub(crate) fn clear_denominators(coeffs: &[BigRational]) -> (IntPoly, num_bigint::BigInt) {
    let lcm = coeffs.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    (IntPoly::from_coeffs(scaled), lcm)
}
