use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};

/// Univariate polynomial with exact rational coefficients.
///
/// Stored lowest degree first; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// Characteristic polynomial `det(λI − A)`; monic, degree equal to the order.
pub type CharPoly = Poly;

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_ascending(vec![c])
    }

    /// `λ − root`.
    pub fn linear_root(root: Rational) -> Self {
        Self::from_ascending(vec![-root, Rational::one()])
    }

    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients listed from the highest degree down, as printed.
    pub fn from_descending(mut coeffs: Vec<Rational>) -> Self {
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    pub fn ascending(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::from_ascending(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = lc.recip();
                Self::from_ascending(self.coeffs.iter().map(|c| c * &inv).collect())
            }
            None => Self::zero(),
        }
    }

    /// Positive rescaling to a primitive integer polynomial; keeps the sign of
    /// every value, so Sturm sign counts are unaffected.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Self::from_ascending(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &content))
                .collect(),
        )
    }

    /// Euclidean division `self = q·divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let factor = &rem[top] * &lead_inv;
            let shift = top - dd;
            if !factor.is_zero() {
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &factor * c;
                }
            }
            quot[shift] = factor;
            rem.pop();
        }
        (Self::from_ascending(quot), Self::from_ascending(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.primitive_part();
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_ascending(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_ascending((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format_rational(&mag)
            };
            match power {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coeff}·")?;
                    }
                    write!(f, "λ")?;
                    if power > 1 {
                        write!(f, "^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{int, rat};

    fn p(desc: &[i64]) -> Poly {
        Poly::from_descending(desc.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn division_recovers_factors() {
        let f = &Poly::linear_root(rat(1, 2)).pow(3) * &p(&[1, 0, -2]);
        let (q, r) = f.div_rem(&Poly::linear_root(rat(1, 2)).pow(3));
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 0, -2]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &p(&[1, -1]) * &p(&[1, 2]);
        let b = &p(&[1, -1]) * &p(&[1, 5]);
        assert_eq!(a.gcd(&b), p(&[1, -1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, 2])), Poly::one());
    }

    #[test]
    fn primitive_part_keeps_sign() {
        let f = Poly::from_descending(vec![rat(-2, 3), rat(4, 9)]);
        assert_eq!(f.primitive_part(), p(&[-3, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 0]).to_string(), "λ^2 - 2·λ");
        assert_eq!(Poly::linear_root(rat(-1, 2)).to_string(), "λ + 1/2");
    }
}
