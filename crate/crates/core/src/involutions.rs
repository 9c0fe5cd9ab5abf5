//! Linear involutions of the torus.
//!
//! Every `A ∈ GL(2,Z)` with `A² = I` and `A ≠ ±I` has trace 0 and
//! determinant −1, and falls in one of five families:
//!
//! | family                  | matrix                          |
//! |-------------------------|---------------------------------|
//! | `LowerTriangularPlus`   | `[[1, 0], [γ, −1]]`             |
//! | `LowerTriangularMinus`  | `[[−1, 0], [γ, 1]]`             |
//! | `UpperTriangularPlus`   | `[[1, γ], [0, −1]]`             |
//! | `UpperTriangularMinus`  | `[[−1, γ], [0, 1]]`             |
//! | `General`               | `[[α, β], [(1−α²)/β, −α]]`      |
//!
//! The families overlap only at `γ = 0`; a matrix is always reported under
//! the first family (in the order above) that produces it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::divides;
use crate::lattice::{is_involution, Mat2Z};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvolutionFamily {
    LowerTriangularPlus,
    LowerTriangularMinus,
    UpperTriangularPlus,
    UpperTriangularMinus,
    General,
}

impl InvolutionFamily {
    pub const ALL: [InvolutionFamily; 5] = [
        InvolutionFamily::LowerTriangularPlus,
        InvolutionFamily::LowerTriangularMinus,
        InvolutionFamily::UpperTriangularPlus,
        InvolutionFamily::UpperTriangularMinus,
        InvolutionFamily::General,
    ];

    pub const TRIANGULAR: [InvolutionFamily; 4] = [
        InvolutionFamily::LowerTriangularPlus,
        InvolutionFamily::LowerTriangularMinus,
        InvolutionFamily::UpperTriangularPlus,
        InvolutionFamily::UpperTriangularMinus,
    ];

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            InvolutionFamily::LowerTriangularPlus => "lower+",
            InvolutionFamily::LowerTriangularMinus => "lower-",
            InvolutionFamily::UpperTriangularPlus => "upper+",
            InvolutionFamily::UpperTriangularMinus => "upper-",
            InvolutionFamily::General => "general",
        }
    }

    pub fn is_triangular(self) -> bool {
        self != InvolutionFamily::General
    }
}

impl fmt::Display for InvolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for InvolutionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvolutionFamily::ALL
            .into_iter()
            .find(|f| f.short_name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown involution family `{s}`")))
    }
}

/// A member of one of the involution families together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum InvolutionSpec {
    LowerTriangularPlus {
        #[serde(with = "crate::serde_decimal")]
        gamma: BigInt,
    },
    LowerTriangularMinus {
        #[serde(with = "crate::serde_decimal")]
        gamma: BigInt,
    },
    UpperTriangularPlus {
        #[serde(with = "crate::serde_decimal")]
        gamma: BigInt,
    },
    UpperTriangularMinus {
        #[serde(with = "crate::serde_decimal")]
        gamma: BigInt,
    },
    /// `[[α, β], [(1−α²)/β, −α]]` with `β ≠ 0`, `α² ≠ 1` and `β | 1−α²`.
    General {
        #[serde(with = "crate::serde_decimal")]
        alpha: BigInt,
        #[serde(with = "crate::serde_decimal")]
        beta: BigInt,
    },
}

impl InvolutionSpec {
    pub fn family(&self) -> InvolutionFamily {
        match self {
            InvolutionSpec::LowerTriangularPlus { .. } => InvolutionFamily::LowerTriangularPlus,
            InvolutionSpec::LowerTriangularMinus { .. } => InvolutionFamily::LowerTriangularMinus,
            InvolutionSpec::UpperTriangularPlus { .. } => InvolutionFamily::UpperTriangularPlus,
            InvolutionSpec::UpperTriangularMinus { .. } => InvolutionFamily::UpperTriangularMinus,
            InvolutionSpec::General { .. } => InvolutionFamily::General,
        }
    }

    /// Builds a spec from a family and its integer parameters (`γ`, or `α β`).
    pub fn from_params(family: InvolutionFamily, params: &[BigInt]) -> Result<Self> {
        let arity = if family.is_triangular() { 1 } else { 2 };
        if params.len() != arity {
            return Err(Error::InvalidParams(format!(
                "family {family} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let gamma = params[0].clone();
        Ok(match family {
            InvolutionFamily::LowerTriangularPlus => InvolutionSpec::LowerTriangularPlus { gamma },
            InvolutionFamily::LowerTriangularMinus => InvolutionSpec::LowerTriangularMinus { gamma },
            InvolutionFamily::UpperTriangularPlus => InvolutionSpec::UpperTriangularPlus { gamma },
            InvolutionFamily::UpperTriangularMinus => InvolutionSpec::UpperTriangularMinus { gamma },
            InvolutionFamily::General => {
                InvolutionSpec::General { alpha: params[0].clone(), beta: params[1].clone() }
            }
        })
    }

    /// Checks the General-family constraints; triangular specs are always valid.
    pub fn validate(&self) -> Result<()> {
        if let InvolutionSpec::General { alpha, beta } = self {
            if beta.is_zero() {
                return Err(Error::InvalidParams("β must be nonzero".into()));
            }
            let num = BigInt::one() - alpha * alpha;
            if num.is_zero() {
                return Err(Error::InvalidParams(format!(
                    "α = {alpha} gives 1 − α² = 0 (use an upper-triangular family)"
                )));
            }
            if !divides(beta, &num) {
                return Err(Error::InvalidParams(format!("β = {beta} does not divide 1 − α² = {num}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for InvolutionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionSpec::General { alpha, beta } => write!(f, "general(α={alpha}, β={beta})"),
            InvolutionSpec::LowerTriangularPlus { gamma }
            | InvolutionSpec::LowerTriangularMinus { gamma }
            | InvolutionSpec::UpperTriangularPlus { gamma }
            | InvolutionSpec::UpperTriangularMinus { gamma } => {
                write!(f, "{}(γ={gamma})", self.family())
            }
        }
    }
}

/// Returns the family member equal to `a`.
pub fn classify_involution(a: &Mat2Z) -> Result<InvolutionSpec> {
    if !is_involution(a) {
        return Err(Error::NotAnInvolution);
    }
    if a.is_plus_minus_identity() {
        return Err(Error::TrivialInvolution);
    }
    // A² = I, A ≠ ±I forces d = −a and a² + bc = 1.
    let spec = if a.b.is_zero() {
        if a.a.is_one() {
            InvolutionSpec::LowerTriangularPlus { gamma: a.c.clone() }
        } else {
            InvolutionSpec::LowerTriangularMinus { gamma: a.c.clone() }
        }
    } else if a.c.is_zero() {
        if a.a.is_one() {
            InvolutionSpec::UpperTriangularPlus { gamma: a.b.clone() }
        } else {
            InvolutionSpec::UpperTriangularMinus { gamma: a.b.clone() }
        }
    } else {
        InvolutionSpec::General { alpha: a.a.clone(), beta: a.b.clone() }
    };
    Ok(spec)
}

pub fn materialize(spec: &InvolutionSpec) -> Result<Mat2Z> {
    spec.validate()?;
    let m = match spec {
        InvolutionSpec::LowerTriangularPlus { gamma } => Mat2Z::new(1, 0, gamma.clone(), -1),
        InvolutionSpec::LowerTriangularMinus { gamma } => Mat2Z::new(-1, 0, gamma.clone(), 1),
        InvolutionSpec::UpperTriangularPlus { gamma } => Mat2Z::new(1, gamma.clone(), 0, -1),
        InvolutionSpec::UpperTriangularMinus { gamma } => Mat2Z::new(-1, gamma.clone(), 0, 1),
        InvolutionSpec::General { alpha, beta } => {
            let gamma = (BigInt::one() - alpha * alpha) / beta;
            Mat2Z::new(alpha.clone(), beta.clone(), gamma, -alpha)
        }
    };
    debug_assert!(is_involution(&m));
    Ok(m)
}

/// All non-trivial involutions with every `|entry| <= entry_bound`, sorted
/// lexicographically on `(a, b, c, d)`.
///
/// Generated from the family structure: `b = 0` gives the lower-triangular
/// families, otherwise `d = −a` and `c = (1 − a²)/b`.
pub fn enumerate_involutions(entry_bound: u64) -> Vec<Mat2Z> {
    let bound = entry_bound as i64;
    let mut out = Vec::new();
    if bound < 1 {
        return out;
    }
    for gamma in -bound..=bound {
        out.push(Mat2Z::new(1, 0, gamma, -1));
        out.push(Mat2Z::new(-1, 0, gamma, 1));
    }
    for alpha in -bound..=bound {
        let num = 1 - (alpha as i128) * (alpha as i128);
        for beta in (-bound..=bound).filter(|&b| b != 0) {
            if num % beta as i128 != 0 {
                continue;
            }
            let gamma = num / beta as i128;
            if gamma.abs() <= bound as i128 {
                out.push(Mat2Z::new(alpha, beta, gamma as i64, -alpha));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A closed curve on T²: the image of `offset + t·direction`, `t ∈ R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedCurve {
    /// Primitive direction `(p, q)`, normalised so that `p > 0`, or `p = 0, q = 1`.
    pub direction: (BigInt, BigInt),
    /// A point of the curve with coordinates in `[0, 1)`.
    pub offset: (BigRational, BigRational),
}

impl FixedCurve {
    /// Whether the point (taken mod Z²) lies on the curve.
    ///
    /// `w − offset ≡ t·(p, q)` for some real `t` iff `q·Δx − p·Δy ∈ Z`,
    /// since `gcd(p, q) = 1`.
    pub fn contains(&self, point: &(BigRational, BigRational)) -> bool {
        let (p, q) = &self.direction;
        let dx = &point.0 - &self.offset.0;
        let dy = &point.1 - &self.offset.1;
        let cross = dx * BigRational::from_integer(q.clone()) - dy * BigRational::from_integer(p.clone());
        cross.is_integer()
    }

    /// The point `offset + t·direction`, reduced into `[0, 1)²`.
    pub fn point_at(&self, t: &BigRational) -> (BigRational, BigRational) {
        let (p, q) = &self.direction;
        let x = &self.offset.0 + t * BigRational::from_integer(p.clone());
        let y = &self.offset.1 + t * BigRational::from_integer(q.clone());
        (frac(&x), frac(&y))
    }
}

impl fmt::Display for FixedCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) + t·({}, {})",
            self.offset.0, self.offset.1, self.direction.0, self.direction.1
        )
    }
}

#[derive(Serialize, Deserialize)]
struct FixedCurveRepr {
    direction: [String; 2],
    offset: [String; 2],
}

impl Serialize for FixedCurve {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FixedCurveRepr {
            direction: [self.direction.0.to_string(), self.direction.1.to_string()],
            offset: [self.offset.0.to_string(), self.offset.1.to_string()],
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FixedCurve {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = FixedCurveRepr::deserialize(deserializer)?;
        let int = |s: &str| s.parse::<BigInt>().map_err(D::Error::custom);
        let rat = |s: &str| s.parse::<BigRational>().map_err(D::Error::custom);
        Ok(FixedCurve {
            direction: (int(&r.direction[0])?, int(&r.direction[1])?),
            offset: (rat(&r.offset[0])?, rat(&r.offset[1])?),
        })
    }
}

/// Fractional part in `[0, 1)`.
pub(crate) fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// Whether `A·v ≡ v (mod Z²)`.
pub fn is_fixed_point(a: &Mat2Z, v: &(BigRational, BigRational)) -> bool {
    let r = |n: &BigInt| BigRational::from_integer(n.clone());
    let ax = r(&a.a) * &v.0 + r(&a.b) * &v.1 - &v.0;
    let ay = r(&a.c) * &v.0 + r(&a.d) * &v.1 - &v.1;
    ax.is_integer() && ay.is_integer()
}

/// The closed curves whose union is the fixed-point set of the involution
/// induced by `a` on T².
///
/// `A − I` has rank one. Its kernel gives the common primitive direction
/// `(p, q)` of every component. Each component crosses the transversal
/// circle `x = 0` in exactly `|p|` points spaced `1/|p|` apart, while the
/// fixed points on that circle are the multiples of `1/g`, `g` the gcd of the
/// second column of `A − I`. So there are `g/|p|` components, with offsets
/// `(0, k/g)`. Vertical components (`p = 0`) are read off `y = 0` instead.
pub fn fixed_point_curves(a: &Mat2Z) -> Result<Vec<FixedCurve>> {
    if !is_involution(a) {
        return Err(Error::NotAnInvolution);
    }
    if a.is_plus_minus_identity() {
        return Err(Error::TrivialInvolution);
    }
    let m11: BigInt = &a.a - 1;
    let m12 = a.b.clone();
    let m21 = a.c.clone();
    let m22 = &a.d - 1;

    // kernel of a nonzero row (r1, r2) is spanned by (r2, −r1)
    let (r1, r2) = if !m11.is_zero() || !m12.is_zero() { (&m11, &m12) } else { (&m21, &m22) };
    let g_row = r1.gcd(r2);
    let (mut p, mut q) = (r2 / &g_row, -(r1 / &g_row));
    if p.is_negative() || (p.is_zero() && q.is_negative()) {
        p = -p;
        q = -q;
    }

    let (g, spacing, vertical) = if p.is_zero() {
        (m11.gcd(&m21), q.abs(), true)
    } else {
        (m12.gcd(&m22), p.abs(), false)
    };
    debug_assert!(!g.is_zero() && g.is_multiple_of(&spacing));
    let count = &g / &spacing;

    let mut curves = Vec::new();
    let mut k = BigInt::zero();
    while k < count {
        let t = BigRational::new(k.clone(), g.clone());
        let offset = if vertical {
            (t, BigRational::zero())
        } else {
            (BigRational::zero(), t)
        };
        curves.push(FixedCurve { direction: (p.clone(), q.clone()), offset });
        k += 1;
    }
    Ok(curves)
}
