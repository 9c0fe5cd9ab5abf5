//! Sparse integer polynomials in two variables `u`, `v`.
//!
//! Just enough algebra to replay the obstruction argument symbolically on
//! concrete matrix entries: sums, products and structural equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Monomial `u^i v^j` keyed by `(i, j)`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Poly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::monomial(c, 0, 0)
    }

    pub fn u() -> Self {
        Poly::monomial(1, 1, 0)
    }

    pub fn v() -> Self {
        Poly::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Poly::zero();
        p.add_term((i, j), c.into());
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        let mut out = Poly::zero();
        for (key, c) in &self.terms {
            out.add_term(*key, c * k);
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (key, c) in &rhs.terms {
            out.add_term(*key, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

/// Renders with the supplied variable names, highest degree first.
pub(crate) struct Display<'a> {
    poly: &'a Poly,
    names: (&'a str, &'a str),
}

impl Poly {
    pub fn display<'a>(&'a self, u: &'a str, v: &'a str) -> Display<'a> {
        Display { poly: self, names: (u, v) }
    }
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.poly.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let has_vars = *i > 0 || *j > 0;
            if !mag.is_one() || !has_vars {
                write!(f, "{mag}")?;
            }
            for (name, pow) in [(self.names.0, *i), (self.names.1, *j)] {
                match pow {
                    0 => {}
                    1 => f.write_str(name)?,
                    p => write!(f, "{name}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_identities() {
        let u = Poly::u();
        let v = Poly::v();
        let one = Poly::constant(1);
        // (u + v)(u − v) = u² − v²
        let lhs = &(&u + &v) * &(&u - &v);
        let rhs = &(&u * &u) - &(&v * &v);
        assert_eq!(lhs, rhs);
        assert_eq!(&(&u + &one) - &u, one);
        assert_eq!(&u - &u, Poly::zero());
    }

    #[test]
    fn rendering() {
        let p = &(&Poly::monomial(3, 2, 0) - &Poly::monomial(1, 1, 1)) + &Poly::constant(-5);
        assert_eq!(p.display("α", "β").to_string(), "3α^2 - αβ - 5");
        assert_eq!(Poly::zero().display("x", "y").to_string(), "0");
    }
}
