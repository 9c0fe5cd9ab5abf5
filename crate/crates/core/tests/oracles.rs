//! Library results checked against independent brute-force computations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toral_reversors::involutions::is_fixed_point;
use toral_reversors::*;

fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
    Mat2Z::new(a, b, c, d)
}

/// Every 2×2 matrix with `A² = I`, `A ≠ ±I` and entries in `[-bound, bound]`.
fn involutions_by_scan(bound: i64) -> Vec<Mat2Z> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    let sq = [a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d];
                    let trivial = b == 0 && c == 0 && a == d && a.abs() == 1;
                    if sq == [1, 0, 0, 1] && !trivial {
                        out.push(m(a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_scan() {
    for bound in [1, 2, 3, 6, 12] {
        let scanned = involutions_by_scan(bound as i64);
        assert_eq!(enumerate_involutions(bound), scanned, "bound {bound}");
    }
    assert_eq!(enumerate_involutions(1).len(), 12);
}

#[test]
fn enumerated_involutions_follow_the_trichotomy() {
    for a in enumerate_involutions(25) {
        let triangular = (a.b.is_zero() || a.c.is_zero()) && a.a.abs() == BigInt::from(1) && a.a == -&a.d;
        assert!(triangular || (a.det() == BigInt::from(-1) && a.trace().is_zero()), "{a}");
        assert_eq!(materialize(&classify_involution(&a).unwrap()).unwrap(), a);
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Fixed points of the torus map on the grid `(1/den)Z² mod 1`, by direct check
/// of `A·v − v ∈ Z²`.
fn fixed_on_grid(a: &[i64; 4], den: i64) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for i in 0..den {
        for j in 0..den {
            let x = a[0] * i + a[1] * j - i;
            let y = a[2] * i + a[3] * j - j;
            if x % den == 0 && y % den == 0 {
                out.insert((i, j));
            }
        }
    }
    out
}

#[test]
fn fixed_curves_account_for_every_grid_fixed_point() {
    for a in enumerate_involutions(5) {
        let curves = fixed_point_curves(&a).unwrap();
        let e = a.to_i64().unwrap();
        for den in [1, 2, 3, 4, 6, 10] {
            for (i, j) in fixed_on_grid(&e, den) {
                let p = (q(i, den), q(j, den));
                assert!(curves.iter().any(|c| c.contains(&p)), "{a}: ({i}/{den}, {j}/{den}) missed");
            }
            for i in 0..den {
                for j in 0..den {
                    let p = (q(i, den), q(j, den));
                    if curves.iter().any(|c| c.contains(&p)) {
                        assert!(is_fixed_point(&a, &p), "{a}: ({i}/{den}, {j}/{den}) not fixed");
                    }
                }
            }
        }
    }
}

#[test]
fn random_points_off_the_curves_are_not_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for a in enumerate_involutions(4) {
        let curves = fixed_point_curves(&a).unwrap();
        let mut sampled = 0;
        while sampled < 100 {
            let den = rng.gen_range(1..=24);
            let p = (q(rng.gen_range(0..den), den), q(rng.gen_range(0..den), den));
            if curves.iter().any(|c| c.contains(&p)) {
                continue;
            }
            sampled += 1;
            assert!(!is_fixed_point(&a, &p), "{a}: {p:?}");
        }
    }
}

#[test]
fn fixed_curve_counts() {
    // one curve when γ is odd, two when even
    for g in -7i64..=7 {
        let n = fixed_point_curves(&m(1, 0, g, -1)).unwrap().len();
        assert_eq!(n, if g % 2 == 0 { 2 } else { 1 }, "γ = {g}");
        let n = fixed_point_curves(&m(-1, g, 0, 1)).unwrap().len();
        assert_eq!(n, if g % 2 == 0 { 2 } else { 1 }, "γ = {g}");
    }
    assert_eq!(fixed_point_curves(&m(0, 1, 1, 0)).unwrap().len(), 1);
}

/// `x² − D·y² = 1` scanned in `y`.
fn least_unit_by_scan(d: i64, y_limit: i64) -> Option<(i128, i128)> {
    (1..=y_limit as i128).find_map(|y| {
        let rhs = 1 + d as i128 * y * y;
        let x = (rhs as f64).sqrt() as i128;
        (x - 1..=x + 1).find(|x| x * x == rhs).map(|x| (x, y))
    })
}

#[test]
fn fundamental_solutions_are_minimal() {
    let mut checked = 0;
    for d in 2i64..=500 {
        let Ok((x1, y1)) = fundamental_solution(&BigInt::from(d)) else {
            assert!(((d as f64).sqrt() as i64).pow(2) == d);
            continue;
        };
        assert_eq!(&x1 * &x1 - BigInt::from(d) * &y1 * &y1, BigInt::from(1));
        if y1 <= BigInt::from(200_000) {
            let y1 = i64::try_from(&y1).unwrap();
            let (sx, sy) = least_unit_by_scan(d, y1).unwrap();
            assert_eq!((BigInt::from(sx), BigInt::from(sy)), (x1, BigInt::from(y1)), "D = {d}");
            checked += 1;
        }
    }
    assert_eq!(checked, 373);
    assert_eq!(fundamental_solution(&BigInt::from(61)).unwrap().0, BigInt::from(1_766_319_049u64));
}

#[test]
fn convergents_obey_the_classical_bound() {
    for d in 2i64..=500 {
        let Ok(cf) = cf_sqrt(&BigInt::from(d)) else { continue };
        let count = 2 * cf.period.len();
        let bound = 2.0 * (d as f64).sqrt() + 1.0;
        for (p, q) in cf.convergents(count) {
            let norm: BigInt = &p * &p - BigInt::from(d) * &q * &q;
            assert!((norm.abs().to_string().parse::<f64>().unwrap()) < bound, "D = {d}");
        }
        let a0 = cf.a0.clone();
        assert_eq!(*cf.period.last().unwrap(), a0 * 2, "D = {d}");
    }
}

#[test]
fn pell_matches_brute_force_far_out() {
    // large automorphs: the classes must still be found exactly
    for (d, n, y_max) in [(409, 1000, 20_000u64), (409, -3, 20_000), (61, 36, 20_000), (13, -4, 5_000), (94, 6, 5_000)] {
        let problem = PellProblem::new(d, n);
        let set = solve_general(&problem);
        let expanded = set.solutions_up_to(&problem.d, &BigInt::from(y_max));
        assert_eq!(expanded, brute_force_solutions(&problem, y_max), "D = {d}, N = {n}");
    }
}

#[test]
fn case3_matches_brute_force_in_a_box() {
    // all general involutions with |α|, |β| <= 40 reversing small L
    let mut checked = 0;
    for a in -4i64..=6 {
        for b in -4i64..=4 {
            for c in -4i64..=4 {
                for d in -4i64..=6 {
                    let l = m(a, b, c, d);
                    let v = classify_hyperbolicity(&l);
                    if !v.is_hyperbolic || v.orientation != Some(Orientation::Preserving) {
                        continue;
                    }
                    let mut expected = BTreeSet::new();
                    for alpha in -40i64..=40 {
                        for beta in -40i64..=40 {
                            let num = 1 - alpha * alpha;
                            if beta == 0 || num == 0 || num % beta != 0 {
                                continue;
                            }
                            let inv = m(alpha, beta, num / beta, -alpha);
                            if is_r_reversible(&l, &inv).unwrap() {
                                expected.insert((alpha, beta));
                            }
                        }
                    }
                    let report = find_reversors(&l, 10).unwrap();
                    let found: BTreeSet<(i64, i64)> = report
                        .case3
                        .unwrap()
                        .admissible
                        .iter()
                        .map(|r| (i64::try_from(&r.alpha).unwrap_or(i64::MAX), i64::try_from(&r.beta).unwrap_or(i64::MAX)))
                        .filter(|(al, be)| al.abs() <= 40 && be.abs() <= 40)
                        .collect();
                    assert_eq!(found, expected, "{l}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn swap_involutions_are_general_with_zero_alpha() {
    let swap = m(0, 1, 1, 0);
    assert_eq!(classify_involution(&swap).unwrap(), InvolutionSpec::General { alpha: 0.into(), beta: 1.into() });
    let l = m(2, 1, 1, 1);
    assert!(!is_r_reversible(&l, &swap).unwrap());
    let l = m(3, 1, -1, 0);
    assert!(is_r_reversible(&l, &m(0, -1, -1, 0)).unwrap());
}
