//! Small exact-integer helpers shared by the modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `floor(sqrt(n))` for `n >= 0`.
pub(crate) fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

/// The exact square root of `n`, if `n` is a perfect square.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub(crate) fn is_perfect_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

/// Whether `d` divides `n`; zero divides only zero.
pub(crate) fn divides(d: &BigInt, n: &BigInt) -> bool {
    if d.is_zero() {
        n.is_zero()
    } else {
        n.is_multiple_of(d)
    }
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = BigInt::from(1);
    while &k * &k <= n {
        if n.is_multiple_of(&k) {
            let q = &n / &k;
            if q != k {
                large.push(q);
            }
            small.push(k.clone());
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&BigInt::from(64)), Some(BigInt::from(8)));
        assert_eq!(exact_sqrt(&BigInt::from(13)), None);
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let sq = &big * &big;
        assert_eq!(exact_sqrt(&sq), Some(big.clone()));
        assert_eq!(exact_sqrt(&(sq + 1)), None);
    }

    #[test]
    fn divisor_lists() {
        let d: Vec<i64> = positive_divisors(&BigInt::from(-36))
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divides(&BigInt::from(0), &BigInt::from(0)));
        assert!(!divides(&BigInt::from(0), &BigInt::from(3)));
    }
}
