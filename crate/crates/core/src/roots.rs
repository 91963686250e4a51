//! Largest real root of an integer polynomial by exact bisection.
//!
//! A Sturm chain of the square-free part counts the distinct real roots
//! above any rational point, so the bracket `(lo, hi]` always contains the
//! largest root regardless of multiplicities or close root pairs. All
//! bracket endpoints are dyadic rationals evaluated exactly.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> RatPoly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut rem: RatPoly = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let mut quot = alloc::vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let factor = rem.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut changes = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign(x: &BigRational) -> Ordering {
    x.cmp(&BigRational::zero())
}

/// Sturm chain of a square-free polynomial.
struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(square_free: RatPoly) -> Sturm {
        let mut chain = alloc::vec![square_free.clone(), derivative(&square_free)];
        loop {
            let k = chain.len();
            if chain[k - 1].is_empty() {
                chain.pop();
                break;
            }
            let (_, r) = div_rem(&chain[k - 2], &chain[k - 1]);
            let neg: RatPoly = r.iter().map(|c| -c).collect();
            chain.push(neg);
        }
        Sturm { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        sign_changes(self.chain.iter().map(|p| sign(&eval(p, x))))
    }

    fn variations_at_infinity(&self, negative: bool) -> usize {
        sign_changes(self.chain.iter().map(|p| {
            let s = sign(p.last().unwrap());
            if negative && (p.len() - 1) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Distinct roots strictly greater than `x`. Valid even when `x` is a
    /// root, since for a square-free chain the variation count at a root
    /// equals the count just to its right.
    fn roots_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_infinity(false)
    }
}

/// Smallest power of two strictly above the Cauchy bound `1 + max |a_i / a_n|`.
fn root_bound(p: &IntPolynomial) -> BigRational {
    let coeffs = p.coeffs();
    let lead = BigRational::from_integer(coeffs.last().unwrap().abs());
    let max_ratio = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| BigRational::from_integer(c.abs()) / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    let cauchy = max_ratio + BigRational::one();
    let mut bound = BigRational::one();
    while bound <= cauchy {
        bound *= BigRational::from_integer(2.into());
    }
    bound
}

/// Exact bracket `(lo, hi]` of width at most `tol` containing the largest
/// real root. When the root is hit exactly, `lo == hi`.
pub fn largest_real_root_bracket(p: &IntPolynomial, tol: f64) -> Result<(BigRational, BigRational)> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::NoRealRoot);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(alloc::format!("tolerance must be positive, got {tol}")));
    }
    let rational: RatPoly = p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let common = gcd(&rational, &derivative(&rational));
    let (square_free, _) = div_rem(&rational, &common);
    let sturm = Sturm::new(square_free);
    let total = sturm.variations_at_infinity(true) - sturm.variations_at_infinity(false);
    if total == 0 {
        return Err(Error::NoRealRoot);
    }
    let bound = root_bound(p);
    let two = BigRational::from_integer(2.into());
    let mut lo = -bound.clone();
    let mut hi = bound;
    while (&hi - &lo).to_f64().unwrap_or(f64::INFINITY) > tol {
        let mid = (&lo + &hi) / &two;
        if sturm.roots_above(&mid) >= 1 {
            lo = mid;
        } else if eval(&sturm.chain[0], &mid).is_zero() {
            return Ok((mid.clone(), mid));
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Largest real root of `p` to within absolute tolerance `tol`.
///
/// Fails with [`Error::NoRealRoot`] for constant polynomials and
/// polynomials without real roots.
pub fn largest_real_root(p: &IntPolynomial, tol: f64) -> Result<f64> {
    let (lo, hi) = largest_real_root_bracket(p, tol)?;
    let mid = (lo + hi) / BigRational::from_integer(2.into());
    Ok(mid.to_f64().unwrap_or(f64::NAN))
}
