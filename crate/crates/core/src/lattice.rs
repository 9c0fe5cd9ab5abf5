//! Exact 2×2 integer matrices and the SL(2,Z) predicates.
//!
//! A toral automorphism is hyperbolic (Anosov) exactly when its matrix is
//! unimodular and
//!
//! * `det = +1` and `(a+d)² − 4 > 0`, or
//! * `det = −1` and `(a+d)² + 4` is not a perfect square.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::is_perfect_square;
use crate::{Error, Result};

/// A 2×2 matrix `[[a, b], [c, d]]` of unbounded integers.
///
/// The derived ordering is lexicographic on `(a, b, c, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Z {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2Z {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2Z { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2Z::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn transpose(&self) -> Mat2Z {
        Mat2Z { a: self.a.clone(), b: self.c.clone(), c: self.b.clone(), d: self.d.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// `true` for `I` and `−I`.
    pub fn is_plus_minus_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d && self.a.abs().is_one()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries().into_iter().map(|e| e.abs()).max().unwrap()
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `[a, b, c, d]` as `i64`, if every entry fits.
    pub fn to_i64(&self) -> Option<[i64; 4]> {
        Some([
            (&self.a).try_into().ok()?,
            (&self.b).try_into().ok()?,
            (&self.c).try_into().ok()?,
            (&self.d).try_into().ok()?,
        ])
    }
}

impl Mul for &Mat2Z {
    type Output = Mat2Z;

    fn mul(self, rhs: &Mat2Z) -> Mat2Z {
        Mat2Z {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl Mul for Mat2Z {
    type Output = Mat2Z;

    fn mul(self, rhs: Mat2Z) -> Mat2Z {
        &self * &rhs
    }
}

impl Neg for &Mat2Z {
    type Output = Mat2Z;

    fn neg(self) -> Mat2Z {
        Mat2Z { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl fmt::Display for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

// Serialized as `[["a", "b"], ["c", "d"]]` with decimal-string entries.
impl Serialize for Mat2Z {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ];
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2Z {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows = <[[String; 2]; 2]>::deserialize(deserializer)?;
        let parse = |s: &String| s.parse::<BigInt>().map_err(D::Error::custom);
        Ok(Mat2Z {
            a: parse(&rows[0][0])?,
            b: parse(&rows[0][1])?,
            c: parse(&rows[1][0])?,
            d: parse(&rows[1][1])?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    pub fn det(self) -> BigInt {
        match self {
            Orientation::Preserving => BigInt::one(),
            Orientation::Reversing => -BigInt::one(),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Preserving => "preserving",
            Orientation::Reversing => "reversing",
        })
    }
}

/// Which hyperbolicity condition decided the verdict.
///
/// `H1` applies to `det = +1` (`(a+d)² − 4 > 0`), `H2` to `det = −1`
/// (`(a+d)² + 4` not a perfect square).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperbolicityReason {
    H1Pass,
    H1Fail,
    H2Pass,
    H2Fail,
    NotUnimodular,
}

impl fmt::Display for HyperbolicityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HyperbolicityReason::H1Pass => "H1 holds: (a+d)^2 - 4 > 0",
            HyperbolicityReason::H1Fail => "H1 fails: (a+d)^2 - 4 <= 0",
            HyperbolicityReason::H2Pass => "H2 holds: (a+d)^2 + 4 is not a perfect square",
            HyperbolicityReason::H2Fail => "H2 fails: (a+d)^2 + 4 is a perfect square",
            HyperbolicityReason::NotUnimodular => "determinant is not +1 or -1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicityVerdict {
    pub is_sl2z: bool,
    #[serde(with = "crate::serde_decimal")]
    pub det: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub trace: BigInt,
    /// `None` when the matrix is not unimodular.
    pub orientation: Option<Orientation>,
    pub is_hyperbolic: bool,
    pub reason: HyperbolicityReason,
}

pub fn det(m: &Mat2Z) -> BigInt {
    m.det()
}

pub fn mat_mul(m: &Mat2Z, n: &Mat2Z) -> Mat2Z {
    m * n
}

/// Exact inverse of a matrix with determinant ±1: `adj(M) / det(M)`.
pub fn inverse_unimodular(m: &Mat2Z) -> Result<Mat2Z> {
    let det = m.det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular { det });
    }
    let adj = Mat2Z { a: m.d.clone(), b: -&m.b, c: -&m.c, d: m.a.clone() };
    Ok(if det.is_one() { adj } else { -&adj })
}

/// `M^n` by binary exponentiation; negative `n` requires a unimodular `M`.
pub fn mat_pow(m: &Mat2Z, n: i64) -> Result<Mat2Z> {
    let base = if n < 0 { inverse_unimodular(m)? } else { m.clone() };
    let mut exp = n.unsigned_abs();
    let mut acc = Mat2Z::identity();
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = &acc * &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    Ok(acc)
}

pub fn classify_hyperbolicity(m: &Mat2Z) -> HyperbolicityVerdict {
    let det = m.det();
    let trace = m.trace();
    let t2 = &trace * &trace;
    let (orientation, is_hyperbolic, reason) = if det.is_one() {
        let h1 = t2 > BigInt::from(4);
        let reason = if h1 { HyperbolicityReason::H1Pass } else { HyperbolicityReason::H1Fail };
        (Some(Orientation::Preserving), h1, reason)
    } else if det == -BigInt::one() {
        let h2 = !is_perfect_square(&(t2 + 4));
        let reason = if h2 { HyperbolicityReason::H2Pass } else { HyperbolicityReason::H2Fail };
        (Some(Orientation::Reversing), h2, reason)
    } else {
        (None, false, HyperbolicityReason::NotUnimodular)
    };
    HyperbolicityVerdict {
        is_sl2z: orientation.is_some(),
        det,
        trace,
        orientation,
        is_hyperbolic,
        reason,
    }
}

pub fn is_involution(m: &Mat2Z) -> bool {
    (m * m).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::new(a, b, c, d)
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&m(2, 1, 3, 2)), BigInt::from(1));
        assert_eq!(det(&Mat2Z::identity()), BigInt::from(1));
        assert_eq!(det(&m(2, 3, 1, 1)), BigInt::from(-1));
    }

    #[test]
    fn products() {
        assert_eq!(mat_mul(&m(2, 1, -3, -2), &m(2, 1, 3, 2)), m(7, 4, -12, -7));
        assert_eq!(mat_mul(&Mat2Z::identity(), &m(4, 9, 7, 16)), m(4, 9, 7, 16));
        assert_eq!(mat_mul(&m(1, 0, 1, -1), &m(1, 0, 1, -1)), Mat2Z::identity());
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse_unimodular(&m(2, 1, 3, 2)).unwrap(), m(2, -1, -3, 2));
        assert_eq!(inverse_unimodular(&Mat2Z::identity()).unwrap(), Mat2Z::identity());
        assert_eq!(
            inverse_unimodular(&m(2, 0, 0, 2)),
            Err(Error::NotUnimodular { det: BigInt::from(4) })
        );
        // det −1: inverse is −adj
        let l = m(2, 3, 1, 1);
        assert_eq!(&l * &inverse_unimodular(&l).unwrap(), Mat2Z::identity());
    }

    #[test]
    fn powers() {
        assert_eq!(mat_pow(&m(2, 1, 1, 1), 2).unwrap(), m(5, 3, 3, 2));
        assert_eq!(mat_pow(&m(7, 3, 2, 9), 0).unwrap(), Mat2Z::identity());
        assert_eq!(mat_pow(&m(2, 1, 3, 2), -1).unwrap(), m(2, -1, -3, 2));
        assert!(matches!(mat_pow(&m(2, 0, 0, 2), -1), Err(Error::NotUnimodular { .. })));
        assert_eq!(mat_pow(&m(2, 0, 0, 2), 10).unwrap(), m(1024, 0, 0, 1024));
    }

    #[test]
    fn hyperbolicity() {
        let v = classify_hyperbolicity(&m(2, 1, 1, 1));
        assert!(v.is_hyperbolic && v.is_sl2z);
        assert_eq!((v.det, v.trace), (BigInt::from(1), BigInt::from(3)));
        assert_eq!(v.reason, HyperbolicityReason::H1Pass);

        let v = classify_hyperbolicity(&m(0, 1, -1, 0));
        assert!(!v.is_hyperbolic);
        assert_eq!(v.reason, HyperbolicityReason::H1Fail);

        let v = classify_hyperbolicity(&m(2, 3, 1, 1));
        assert!(v.is_hyperbolic);
        assert_eq!(v.orientation, Some(Orientation::Reversing));
        assert_eq!(v.reason, HyperbolicityReason::H2Pass);

        // trace 0, det −1: 0 + 4 is a square
        assert_eq!(classify_hyperbolicity(&m(1, 0, 0, -1)).reason, HyperbolicityReason::H2Fail);

        let v = classify_hyperbolicity(&m(2, 0, 0, 2));
        assert!(!v.is_sl2z && !v.is_hyperbolic);
        assert_eq!(v.orientation, None);
    }

    #[test]
    fn involutions() {
        assert!(is_involution(&m(1, 0, 5, -1)));
        assert!(is_involution(&Mat2Z::identity()));
        assert!(!is_involution(&m(2, 1, 1, 1)));
    }

    #[test]
    fn serde_shape() {
        let json = serde_json::to_string(&m(2, -1, 3, 2)).unwrap();
        assert_eq!(json, r#"[["2","-1"],["3","2"]]"#);
        let back: Mat2Z = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m(2, -1, 3, 2));
    }
}
