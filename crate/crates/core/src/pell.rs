//! Generalized Pell equations `x² − D·y² = N`.
//!
//! [`solve_general`] handles every sign case of `D` and `N`:
//!
//! * `D < 0`: the conic is an ellipse and the solutions are enumerated
//!   directly.
//! * `D = 0`: `x² = N`, two (or one) lines `x = ±√N`.
//! * `D = s² > 0`: `(x − s·y)(x + s·y) = N` is solved over divisor pairs.
//! * `D > 0` non-square: solutions fall into finitely many classes, each an
//!   orbit of the automorph `(x, y) ↦ (x·x₁ + D·y·y₁, x·y₁ + y·x₁)` built from
//!   the fundamental solution `(x₁, y₁)` of `x² − D·y² = 1`. Class
//!   representatives come from the Lagrange–Matthews–Mollin method: for each
//!   `f² | N` and each root `z` of `z² ≡ D (mod |N/f²|)`, the continued
//!   fraction of `(z + √D)/|N/f²|` either reaches `Q = ±1` within a period or
//!   proves that no primitive solution with that root exists.
//!
//! [`brute_force_solutions`] is an independent oracle that scans `|y|`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divides, exact_sqrt, isqrt, positive_divisors};
use crate::lattice::{Mat2Z, Orientation};
use crate::{Error, Result};

/// The equation `x² − D·y² = N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PellProblem {
    #[serde(with = "crate::serde_decimal")]
    pub d: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub n: BigInt,
}

impl PellProblem {
    pub fn new(d: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        PellProblem { d: d.into(), n: n.into() }
    }

    pub fn is_solution(&self, p: &PellPoint) -> bool {
        &p.x * &p.x - &self.d * &p.y * &p.y == self.n
    }

    /// The equation as text, e.g. `x^2-12y^2=4`, `x^2+3y^2=36`, `x^2=64`.
    pub fn equation(&self) -> String {
        let y_term = match self.d.sign() {
            num_bigint::Sign::NoSign => String::new(),
            _ => {
                let sign = if self.d.is_negative() { "+" } else { "-" };
                let mag = self.d.abs();
                if mag.is_one() {
                    format!("{sign}y^2")
                } else {
                    format!("{sign}{mag}y^2")
                }
            }
        };
        format!("x^2{y_term}={}", self.n)
    }
}

impl fmt::Display for PellProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.equation())
    }
}

/// An integer point `(x, y)`. Ordered by `y`, then `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PellPoint {
    #[serde(with = "crate::serde_decimal")]
    pub x: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub y: BigInt,
}

impl PellPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        PellPoint { x: x.into(), y: y.into() }
    }

    fn neg(&self) -> PellPoint {
        PellPoint { x: -&self.x, y: -&self.y }
    }
}

impl Ord for PellPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y).then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for PellPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PellPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Continued fraction `√D = [a0; period, period, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfExpansion {
    #[serde(with = "crate::serde_decimal")]
    pub a0: BigInt,
    #[serde(with = "crate::serde_decimal::vec")]
    pub period: Vec<BigInt>,
}

impl CfExpansion {
    /// Convergents `p_k/q_k` for `k = 0..count`.
    pub fn convergents(&self, count: usize) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::with_capacity(count);
        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
        let (mut p, mut q) = (self.a0.clone(), BigInt::one());
        let mut terms = self.period.iter().cycle();
        for _ in 0..count {
            out.push((p.clone(), q.clone()));
            let a = terms.next().expect("period is never empty");
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionKind {
    Empty,
    FiniteList,
    InfiniteClasses,
    DegenerateLines,
}

/// The line `x = slope·y + intercept` in the `(x, y)` plane; every integer
/// `y` on it gives a solution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolutionLine {
    #[serde(with = "crate::serde_decimal")]
    pub slope: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub intercept: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellSolutionSet {
    pub kind: SolutionKind,
    /// The complete list (`FiniteList`) or one representative per class
    /// (`InfiniteClasses`), sorted by `(y, x)`.
    pub solutions: Vec<PellPoint>,
    /// Fundamental solution of `x² − D·y² = 1` generating each class.
    pub automorph: Option<PellPoint>,
    /// Solution lines for `DegenerateLines`.
    pub lines: Vec<SolutionLine>,
}

impl PellSolutionSet {
    fn empty() -> Self {
        PellSolutionSet { kind: SolutionKind::Empty, solutions: vec![], automorph: None, lines: vec![] }
    }

    fn finite(mut solutions: Vec<PellPoint>) -> Self {
        solutions.sort();
        solutions.dedup();
        if solutions.is_empty() {
            return PellSolutionSet::empty();
        }
        PellSolutionSet { kind: SolutionKind::FiniteList, solutions, automorph: None, lines: vec![] }
    }

    fn lines(mut lines: Vec<SolutionLine>) -> Self {
        lines.sort();
        lines.dedup();
        PellSolutionSet { kind: SolutionKind::DegenerateLines, solutions: vec![], automorph: None, lines }
    }

    /// Number of solutions, `None` when there are infinitely many.
    pub fn count(&self) -> Option<usize> {
        match self.kind {
            SolutionKind::Empty => Some(0),
            SolutionKind::FiniteList => Some(self.solutions.len()),
            SolutionKind::InfiniteClasses | SolutionKind::DegenerateLines => None,
        }
    }

    /// The `k`-th automorph image of `p` (`k` may be negative).
    pub fn automorph_image(&self, d: &BigInt, p: &PellPoint, k: i64) -> PellPoint {
        let Some(eps) = &self.automorph else { return p.clone() };
        let mut cur = p.clone();
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 { apply_unit(d, eps, &cur) } else { apply_unit_inverse(d, eps, &cur) };
        }
        cur
    }

    /// Every solution with `|y| <= y_limit`, sorted by `(y, x)`.
    ///
    /// Classes are walked outward from their representative, which sits at
    /// the minimum of `|y|` along the orbit; `|y|` never decreases again.
    pub fn solutions_up_to(&self, d: &BigInt, y_limit: &BigInt) -> Vec<PellPoint> {
        let mut out = BTreeSet::new();
        match self.kind {
            SolutionKind::Empty => {}
            SolutionKind::FiniteList => {
                out.extend(self.solutions.iter().filter(|p| p.y.abs() <= *y_limit).cloned());
            }
            SolutionKind::DegenerateLines => {
                let mut y = -y_limit.clone();
                while y <= *y_limit {
                    for line in &self.lines {
                        out.insert(PellPoint { x: &line.slope * &y + &line.intercept, y: y.clone() });
                    }
                    y += 1;
                }
            }
            SolutionKind::InfiniteClasses => {
                let eps = self.automorph.as_ref().expect("infinite classes carry an automorph");
                for rep in &self.solutions {
                    if rep.y.abs() <= *y_limit {
                        out.insert(rep.clone());
                    }
                    for forward in [true, false] {
                        let mut cur = rep.clone();
                        // a couple of steps of slack for ties at the minimum
                        let mut beyond = 0;
                        while beyond < 2 {
                            cur = if forward {
                                apply_unit(d, eps, &cur)
                            } else {
                                apply_unit_inverse(d, eps, &cur)
                            };
                            if cur.y.abs() <= *y_limit {
                                out.insert(cur.clone());
                                beyond = 0;
                            } else {
                                beyond += 1;
                            }
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}

/// `(x + y√D)(x₁ + y₁√D)`.
fn apply_unit(d: &BigInt, eps: &PellPoint, p: &PellPoint) -> PellPoint {
    PellPoint {
        x: &p.x * &eps.x + d * &p.y * &eps.y,
        y: &p.x * &eps.y + &p.y * &eps.x,
    }
}

/// `(x + y√D)(x₁ − y₁√D)`.
fn apply_unit_inverse(d: &BigInt, eps: &PellPoint, p: &PellPoint) -> PellPoint {
    PellPoint {
        x: &p.x * &eps.x - d * &p.y * &eps.y,
        y: &p.y * &eps.x - &p.x * &eps.y,
    }
}

fn check_sqrt_arg(d: &BigInt) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::NonPositive(d.clone()));
    }
    if exact_sqrt(d).is_some() {
        return Err(Error::PerfectSquare(d.clone()));
    }
    Ok(())
}

/// Minimal-period continued fraction of `√D`.
pub fn cf_sqrt(d: &BigInt) -> Result<CfExpansion> {
    check_sqrt_arg(d)?;
    let a0 = isqrt(d);
    let two_a0 = &a0 * 2;
    let mut m = BigInt::zero();
    let mut q = BigInt::one();
    let mut a = a0.clone();
    let mut period = Vec::new();
    loop {
        m = &q * &a - &m;
        q = (d - &m * &m) / &q;
        a = (&a0 + &m) / &q;
        period.push(a.clone());
        if a == two_a0 {
            break;
        }
    }
    Ok(CfExpansion { a0, period })
}

/// Smallest positive solution of `x² − D·y² = 1`.
pub fn fundamental_solution(d: &BigInt) -> Result<(BigInt, BigInt)> {
    let cf = cf_sqrt(d)?;
    let len = cf.period.len();
    let idx = if len % 2 == 0 { len - 1 } else { 2 * len - 1 };
    let (p, q) = cf.convergents(idx + 1).pop().unwrap();
    debug_assert!(&p * &p - d * &q * &q == BigInt::one());
    Ok((p, q))
}

/// Smallest positive solution of `x² − D·y² = −1`, if the equation is solvable.
pub fn negative_fundamental_solution(d: &BigInt) -> Result<Option<(BigInt, BigInt)>> {
    let cf = cf_sqrt(d)?;
    let len = cf.period.len();
    if len % 2 == 0 {
        return Ok(None);
    }
    Ok(cf.convergents(len).pop())
}

/// All `(x, y)` with `|y| <= y_max` and `x² = N + D·y²`, sorted by `(y, x)`.
pub fn brute_force_solutions(problem: &PellProblem, y_max: u64) -> Vec<PellPoint> {
    let mut out = Vec::new();
    let y_max = y_max as i64;
    for y in -y_max..=y_max {
        let y = BigInt::from(y);
        let rhs = &problem.n + &problem.d * &y * &y;
        if let Some(x) = exact_sqrt(&rhs) {
            if !x.is_zero() {
                out.push(PellPoint { x: -&x, y: y.clone() });
            }
            out.push(PellPoint { x, y });
        }
    }
    out
}

pub fn solve_general(problem: &PellProblem) -> PellSolutionSet {
    let d = &problem.d;
    let n = &problem.n;
    if d.is_negative() {
        solve_elliptic(d, n)
    } else if d.is_zero() {
        match exact_sqrt(n) {
            Some(s) => PellSolutionSet::lines(vec![
                SolutionLine { slope: BigInt::zero(), intercept: s.clone() },
                SolutionLine { slope: BigInt::zero(), intercept: -s },
            ]),
            None => PellSolutionSet::empty(),
        }
    } else if let Some(s) = exact_sqrt(d) {
        solve_square(&s, n)
    } else if n.is_zero() {
        PellSolutionSet::finite(vec![PellPoint::new(0, 0)])
    } else {
        solve_hyperbolic(d, n)
    }
}

fn solve_elliptic(d: &BigInt, n: &BigInt) -> PellSolutionSet {
    if n.is_negative() {
        return PellSolutionSet::empty();
    }
    let abs_d = d.abs();
    let y_bound = isqrt(&(n / &abs_d));
    let mut sols = Vec::new();
    let mut y = BigInt::zero();
    while y <= y_bound {
        if let Some(x) = exact_sqrt(&(n - &abs_d * &y * &y)) {
            for sx in [x.clone(), -&x] {
                for sy in [y.clone(), -&y] {
                    sols.push(PellPoint { x: sx.clone(), y: sy });
                }
            }
        }
        y += 1;
    }
    PellSolutionSet::finite(sols)
}

/// `D = s²`: factor `(x − s·y)(x + s·y) = N`.
fn solve_square(s: &BigInt, n: &BigInt) -> PellSolutionSet {
    if n.is_zero() {
        return PellSolutionSet::lines(vec![
            SolutionLine { slope: s.clone(), intercept: BigInt::zero() },
            SolutionLine { slope: -s, intercept: BigInt::zero() },
        ]);
    }
    let mut sols = Vec::new();
    for u in positive_divisors(n) {
        for u in [u.clone(), -u] {
            let v = n / &u;
            let sum = &u + &v;
            let diff = &v - &u;
            let two_s = s * 2;
            if sum.is_even() && divides(&two_s, &diff) {
                sols.push(PellPoint { x: sum / 2, y: diff / two_s });
            }
        }
    }
    PellSolutionSet::finite(sols)
}

/// `D > 0` non-square, `N ≠ 0`.
fn solve_hyperbolic(d: &BigInt, n: &BigInt) -> PellSolutionSet {
    let (x1, y1) = fundamental_solution(d).expect("D is positive and non-square");
    let eps = PellPoint { x: x1, y: y1 };
    let neg_unit = negative_fundamental_solution(d).expect("D is positive and non-square");

    let mut found = Vec::new();
    for f in positive_divisors(n) {
        let f2 = &f * &f;
        if !n.is_multiple_of(&f2) {
            continue;
        }
        let m = n / &f2;
        for (r, s) in primitive_fundamentals(d, &m, neg_unit.as_ref()) {
            found.push(PellPoint { x: &f * r, y: &f * s });
        }
    }

    let mut reps = BTreeSet::new();
    for p in found {
        reps.insert(canonical_in_orbit(d, &eps, &p));
        reps.insert(canonical_in_orbit(d, &eps, &p.neg()));
    }
    if reps.is_empty() {
        return PellSolutionSet::empty();
    }
    PellSolutionSet {
        kind: SolutionKind::InfiniteClasses,
        solutions: reps.into_iter().collect(),
        automorph: Some(eps),
        lines: vec![],
    }
}

/// One primitive solution of `x² − D·y² = m` per square root `z` of `D`
/// modulo `|m|` that admits one.
fn primitive_fundamentals(
    d: &BigInt,
    m: &BigInt,
    neg_unit: Option<&(BigInt, BigInt)>,
) -> Vec<(BigInt, BigInt)> {
    let abs_m = m.abs();
    let sqrt_d = isqrt(d);
    let mut out = Vec::new();
    // −|m|/2 < z <= |m|/2
    let hi = &abs_m / 2;
    let mut z = &hi - &abs_m + 1;
    while z <= hi {
        let residue: BigInt = &z * &z - d;
        if residue.is_multiple_of(&abs_m) {
            if let Some((r, s)) = pqa_search(d, &sqrt_d, &z, &abs_m) {
                let norm = &r * &r - d * &s * &s;
                if &norm == m {
                    out.push((r, s));
                } else if let Some((t, u)) = neg_unit {
                    debug_assert_eq!(norm, -m);
                    out.push((&r * t + &s * u * d, &r * u + &s * t));
                }
            }
        }
        z += 1;
    }
    out
}

/// Runs the PQa continued-fraction recurrence on `(P0 + √D)/Q0` and returns
/// `(G_{i−1}, B_{i−1})` for the first `i >= 1` with `Q_i = ±1`, or `None` if
/// the expansion cycles without reaching it.
///
/// Invariant: `G_{i−1}² − D·B_{i−1}² = (−1)^i · Q_i · Q0`.
fn pqa_search(d: &BigInt, sqrt_d: &BigInt, p0: &BigInt, q0: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut p, mut q) = (p0.clone(), q0.clone());
    let (mut b_prev, mut b) = (BigInt::one(), BigInt::zero());
    let (mut g_prev, mut g) = (-p0, q0.clone());
    let mut seen = HashSet::new();
    loop {
        if !seen.insert((p.clone(), q.clone())) {
            return None;
        }
        let a = floor_quadratic(&p, sqrt_d, &q);
        let b_next = &a * &b + &b_prev;
        let g_next = &a * &g + &g_prev;
        b_prev = std::mem::replace(&mut b, b_next);
        g_prev = std::mem::replace(&mut g, g_next);
        let p_next = &a * &q - &p;
        q = (d - &p_next * &p_next) / &q;
        p = p_next;
        if q.abs().is_one() {
            return Some((g, b));
        }
    }
}

/// `floor((P + √D)/Q)` for non-square `D`, exactly.
fn floor_quadratic(p: &BigInt, sqrt_d: &BigInt, q: &BigInt) -> BigInt {
    let num = p + sqrt_d;
    if q.is_positive() {
        num.div_floor(q)
    } else {
        // (P + √D)/Q = −(P + √D)/|Q| and the quotient is never an integer
        -(num.div_floor(&-q)) - 1
    }
}

/// Total order used to pick a class representative: smallest `|y|`, then
/// `y > 0` before `y < 0`, then `x > 0` before `x < 0`.
fn rep_key(p: &PellPoint) -> (BigInt, BigInt, BigInt) {
    (p.y.abs(), -&p.y, -&p.x)
}

/// The representative of `p`'s orbit under the automorph.
fn canonical_in_orbit(d: &BigInt, eps: &PellPoint, p: &PellPoint) -> PellPoint {
    let mut cur = p.clone();
    loop {
        let fwd = apply_unit(d, eps, &cur);
        let back = apply_unit_inverse(d, eps, &cur);
        let key = rep_key(&cur);
        if rep_key(&fwd) < key {
            cur = fwd;
        } else if rep_key(&back) < key {
            cur = back;
        } else {
            return cur;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConicKind {
    Hyperbola,
    Ellipse,
    DegenerateParallelLines,
}

impl fmt::Display for ConicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConicKind::Hyperbola => "Hyperbola",
            ConicKind::Ellipse => "Ellipse",
            ConicKind::DegenerateParallelLines => "Two lines",
        })
    }
}

/// `Δ = (a+d)² − 4` for orientation-preserving `L`, `(a−d)² − 4` for
/// orientation-reversing `L`.
pub fn conic_discriminant(l: &Mat2Z, orientation: Orientation) -> Result<BigInt> {
    let det = l.det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular { det });
    }
    if det != orientation.det() {
        return Err(Error::OrientationMismatch { expected: orientation, det });
    }
    let t = match orientation {
        Orientation::Preserving => &l.a + &l.d,
        Orientation::Reversing => &l.a - &l.d,
    };
    Ok(&t * &t - 4)
}

/// Type of the reversibility conic, decided by the sign of its discriminant.
pub fn classify_conic(l: &Mat2Z, orientation: Orientation) -> Result<ConicKind> {
    let delta = conic_discriminant(l, orientation)?;
    Ok(match delta.sign() {
        num_bigint::Sign::Plus => ConicKind::Hyperbola,
        num_bigint::Sign::Minus => ConicKind::Ellipse,
        num_bigint::Sign::NoSign => ConicKind::DegenerateParallelLines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn pts(v: &[(i64, i64)]) -> Vec<PellPoint> {
        v.iter().map(|&(x, y)| PellPoint::new(x, y)).collect()
    }

    #[test]
    fn continued_fractions() {
        let cf = cf_sqrt(&big(5)).unwrap();
        assert_eq!((cf.a0, cf.period), (big(2), vec![big(4)]));
        let cf = cf_sqrt(&big(12)).unwrap();
        assert_eq!((cf.a0, cf.period), (big(3), vec![big(2), big(6)]));
        assert_eq!(cf_sqrt(&big(4)), Err(Error::PerfectSquare(big(4))));
        assert_eq!(cf_sqrt(&big(0)), Err(Error::NonPositive(big(0))));
        assert_eq!(cf_sqrt(&big(-7)), Err(Error::NonPositive(big(-7))));
    }

    #[test]
    fn fundamental_solutions() {
        assert_eq!(fundamental_solution(&big(5)).unwrap(), (big(9), big(4)));
        assert_eq!(fundamental_solution(&big(12)).unwrap(), (big(7), big(2)));
        assert_eq!(fundamental_solution(&big(2)).unwrap(), (big(3), big(2)));
        // a famously large one
        let (x, _) = fundamental_solution(&big(61)).unwrap();
        assert_eq!(x, big(1766319049));
    }

    #[test]
    fn negative_pell() {
        assert_eq!(negative_fundamental_solution(&big(5)).unwrap(), Some((big(2), big(1))));
        assert_eq!(negative_fundamental_solution(&big(3)).unwrap(), None);
    }

    #[test]
    fn hyperbolic_classes() {
        let problem = PellProblem::new(12, 4);
        let set = solve_general(&problem);
        assert_eq!(set.kind, SolutionKind::InfiniteClasses);
        assert_eq!(set.automorph, Some(PellPoint::new(7, 2)));
        for p in [(2, 0), (-2, 0), (4, 1), (-4, 1), (4, -1), (-4, -1)] {
            let p = PellPoint::new(p.0, p.1);
            assert!(set.solutions_up_to(&problem.d, &big(10)).contains(&p), "{p}");
        }
        for rep in &set.solutions {
            assert!(problem.is_solution(rep));
        }
    }

    #[test]
    fn elliptic_and_degenerate() {
        let set = solve_general(&PellProblem::new(-3, 36));
        assert_eq!(set.kind, SolutionKind::FiniteList);
        assert_eq!(set.solutions, pts(&[(-3, -3), (3, -3), (-6, 0), (6, 0), (-3, 3), (3, 3)]));
        assert_eq!(set.count(), Some(6));

        let set = solve_general(&PellProblem::new(0, 64));
        assert_eq!(set.kind, SolutionKind::DegenerateLines);
        assert_eq!(set.lines.len(), 2);
        assert!(set.lines.iter().all(|l| l.slope.is_zero() && l.intercept.abs() == big(8)));
        assert_eq!(set.count(), None);

        assert_eq!(solve_general(&PellProblem::new(0, 63)).kind, SolutionKind::Empty);
        assert_eq!(solve_general(&PellProblem::new(-5, -1)).kind, SolutionKind::Empty);
        assert_eq!(solve_general(&PellProblem::new(-5, 0)).solutions, pts(&[(0, 0)]));
        assert_eq!(solve_general(&PellProblem::new(7, 0)).solutions, pts(&[(0, 0)]));
        let lines = solve_general(&PellProblem::new(9, 0));
        assert_eq!(lines.kind, SolutionKind::DegenerateLines);
        assert_eq!(lines.lines.len(), 2);
    }

    #[test]
    fn square_discriminant_factoring() {
        // x² − 4y² = 12: (x−2y)(x+2y) = 12
        let set = solve_general(&PellProblem::new(4, 12));
        assert_eq!(set.solutions, pts(&[(-4, -1), (4, -1), (-4, 1), (4, 1)]));
        assert_eq!(solve_general(&PellProblem::new(4, 2)).kind, SolutionKind::Empty);
    }

    #[test]
    fn brute_force_examples() {
        let got = brute_force_solutions(&PellProblem::new(5, 4), 5);
        assert_eq!(
            got,
            pts(&[(-7, -3), (7, -3), (-3, -1), (3, -1), (-2, 0), (2, 0), (-3, 1), (3, 1), (-7, 3), (7, 3)])
        );
        assert_eq!(brute_force_solutions(&PellProblem::new(396, 324), 0), pts(&[(-18, 0), (18, 0)]));
        assert!(brute_force_solutions(&PellProblem::new(3, -2), 0).is_empty());
    }

    #[test]
    fn equations_render() {
        assert_eq!(PellProblem::new(12, 4).equation(), "x^2-12y^2=4");
        assert_eq!(PellProblem::new(-3, 36).equation(), "x^2+3y^2=36");
        assert_eq!(PellProblem::new(0, 64).equation(), "x^2=64");
        assert_eq!(PellProblem::new(1, -5).equation(), "x^2-y^2=-5");
    }

    #[test]
    fn conics() {
        let rev = Orientation::Reversing;
        assert_eq!(classify_conic(&Mat2Z::new(2, 3, 1, 1), rev).unwrap(), ConicKind::Ellipse);
        assert_eq!(classify_conic(&Mat2Z::new(3, 4, 1, 1), rev).unwrap(), ConicKind::DegenerateParallelLines);
        assert_eq!(classify_conic(&Mat2Z::new(4, 5, 1, 1), rev).unwrap(), ConicKind::Hyperbola);
        assert_eq!(conic_discriminant(&Mat2Z::new(2, 3, 1, 1), rev).unwrap(), big(-3));
        assert_eq!(
            classify_conic(&Mat2Z::new(2, 1, 3, 2), Orientation::Preserving).unwrap(),
            ConicKind::Hyperbola
        );
        assert!(matches!(
            classify_conic(&Mat2Z::new(2, 1, 3, 2), rev),
            Err(Error::OrientationMismatch { .. })
        ));
        assert!(matches!(
            classify_conic(&Mat2Z::new(2, 0, 0, 2), rev),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn large_fundamental_unit_is_fast() {
        // x₁ for D = 409 has 23 digits; a y-scan up to the classical bound
        // would need ~1e11 steps.
        let problem = PellProblem::new(409, 1000);
        let set = solve_general(&problem);
        let within = set.solutions_up_to(&problem.d, &big(100));
        assert_eq!(within, brute_force_solutions(&problem, 100));
    }
}
