//! Linear reversors of hyperbolic toral automorphisms.
//!
//! For `L = [[a, b], [c, d]]` with `det L = 1` and an involution `A`, the
//! reversibility equation `A·L = L⁻¹·A` is equivalent to `(A·L)² = I`, i.e.
//! `trace(A·L) = 0`. Per family this gives:
//!
//! * `[[±1, 0], [γ, ∓1]]`: `b·γ = ±(d − a)`, so a reversor exists iff
//!   `b | (d − a)`;
//! * `[[±1, γ], [0, ∓1]]`: `c·γ = ±(d − a)`, so iff `c | (d − a)`;
//! * `[[α, β], [(1−α²)/β, −α]]`: `b·α² + (d−a)·αβ − c·β² = b`. With
//!   `x = 2bα + (d−a)β`, `y = β` this becomes `x² − D·y² = N` where
//!   `D = (a+d)² − 4` and `N = 4b²`.
//!
//! When `det L = −1` no linear involution reverses `L`;
//! [`orientation_reversing_analysis`] replays the argument symbolically on the
//! concrete entries.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::divides;
use crate::involutions::{materialize, InvolutionFamily, InvolutionSpec};
use crate::lattice::{
    classify_hyperbolicity, inverse_unimodular, is_involution, mat_pow, HyperbolicityReason, Mat2Z,
    Orientation,
};
use crate::pell::{
    classify_conic, conic_discriminant, solve_general, ConicKind, PellPoint, PellProblem,
    PellSolutionSet, SolutionKind,
};
use crate::poly::Poly;
use crate::{Error, Result};

/// Default number of automorph steps taken from each Pell class representative.
pub const DEFAULT_CASE3_DEPTH: u32 = 10;

/// `A·L = L⁻¹·A`.
pub fn is_r_reversible(l: &Mat2Z, a: &Mat2Z) -> Result<bool> {
    let l_inv = inverse_unimodular(l)?;
    if !is_involution(a) {
        return Err(Error::NotAnInvolution);
    }
    Ok(a * l == &l_inv * a)
}

/// Why `±I` can never reverse a hyperbolic `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialVerdict {
    /// `I·L = L⁻¹·I`, i.e. `L² = I`.
    pub identity_reverses: bool,
    /// `(−I)·L = L⁻¹·(−I)`.
    pub minus_identity_reverses: bool,
    /// Entry constraints forced by `−I` reversing `L`.
    pub minus_identity_forces: String,
    /// Hyperbolicity condition the forced constraints contradict.
    pub contradicts: HyperbolicityReason,
}

fn trivial_verdict(l: &Mat2Z) -> TrivialVerdict {
    let l_inv = inverse_unimodular(l).expect("caller checked unimodularity");
    let minus = -&Mat2Z::identity();
    let preserving = l.det().is_one();
    TrivialVerdict {
        identity_reverses: l == &l_inv,
        minus_identity_reverses: &minus * l == &l_inv * &minus,
        minus_identity_forces: if preserving {
            "a = d, b = c = 0".into()
        } else {
            "a + d = 0".into()
        },
        contradicts: if preserving { HyperbolicityReason::H1Fail } else { HyperbolicityReason::H2Fail },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum TriangularStatus {
    /// The divisor is zero, so the family cannot reverse a hyperbolic `L`.
    NotApplicable { reason: String },
    /// The divisor does not divide `d − a`.
    NotDivisible,
    Found {
        #[serde(with = "crate::serde_decimal")]
        gamma_plus: BigInt,
        #[serde(with = "crate::serde_decimal")]
        gamma_minus: BigInt,
    },
}

/// Outcome for one pair of triangular families (lower: divisor `b`, upper:
/// divisor `c`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularCase {
    #[serde(with = "crate::serde_decimal")]
    pub divisor: BigInt,
    /// `d − a`.
    #[serde(with = "crate::serde_decimal")]
    pub difference: BigInt,
    pub status: TriangularStatus,
    pub reversors: Vec<Mat2Z>,
}

impl TriangularCase {
    pub fn gammas(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.status {
            TriangularStatus::Found { gamma_plus, gamma_minus } => Some((gamma_plus, gamma_minus)),
            _ => None,
        }
    }
}

fn triangular_case(l: &Mat2Z, upper: bool) -> TriangularCase {
    let divisor = if upper { l.c.clone() } else { l.b.clone() };
    let difference = &l.d - &l.a;
    if divisor.is_zero() {
        let which = if upper { "c" } else { "b" };
        return TriangularCase {
            divisor,
            difference,
            status: TriangularStatus::NotApplicable {
                reason: format!("{which} = 0 makes reversibility require d = a, i.e. trace ±2"),
            },
            reversors: vec![],
        };
    }
    if !difference.is_multiple_of(&divisor) {
        return TriangularCase { divisor, difference, status: TriangularStatus::NotDivisible, reversors: vec![] };
    }
    let gamma_plus = &difference / &divisor;
    let gamma_minus = -&gamma_plus;
    let specs = if upper {
        [
            InvolutionSpec::UpperTriangularPlus { gamma: gamma_plus.clone() },
            InvolutionSpec::UpperTriangularMinus { gamma: gamma_minus.clone() },
        ]
    } else {
        [
            InvolutionSpec::LowerTriangularPlus { gamma: gamma_plus.clone() },
            InvolutionSpec::LowerTriangularMinus { gamma: gamma_minus.clone() },
        ]
    };
    let reversors = specs
        .iter()
        .map(|s| materialize(s).expect("triangular specs are always valid"))
        .filter(|a| is_r_reversible(l, a).unwrap_or(false))
        .collect();
    TriangularCase {
        divisor,
        difference,
        status: TriangularStatus::Found { gamma_plus, gamma_minus },
        reversors,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case3Reversor {
    #[serde(with = "crate::serde_decimal")]
    pub x: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub y: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub alpha: BigInt,
    #[serde(with = "crate::serde_decimal")]
    pub beta: BigInt,
    pub matrix: Mat2Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectionReason {
    /// `y = β = 0`.
    BetaZero,
    /// `2b ∤ x − (d−a)·y`: a Pell solution, but not involution-admissible.
    AlphaNotIntegral,
    /// `1 − α² = 0`; the matrix would be upper-triangular.
    AlphaUnit,
    /// `β ∤ 1 − α²`.
    BetaNotDivisor,
    /// Passed every arithmetic filter but failed the direct check.
    NotReversing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedSolution {
    pub point: PellPoint,
    pub reason: RejectionReason,
}

/// Where the case-3 search stopped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "horizon", rename_all = "snake_case")]
pub enum SearchHorizon {
    /// Every solution (finitely many) was examined.
    Exhaustive,
    /// Each class was walked `depth` automorph steps in both directions.
    Bounded { depth: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case3Report {
    pub problem: PellProblem,
    pub solutions: PellSolutionSet,
    pub horizon: SearchHorizon,
    pub admissible: Vec<Case3Reversor>,
    pub rejected: Vec<RejectedSolution>,
}

impl Case3Report {
    pub fn rejected_count(&self, reason: RejectionReason) -> usize {
        self.rejected.iter().filter(|r| r.reason == reason).count()
    }
}

/// Solutions examined by the case-3 search: the finite list, or each class
/// walked `depth` steps both ways.
fn candidate_points(problem: &PellProblem, set: &PellSolutionSet, depth: u32) -> (Vec<PellPoint>, SearchHorizon) {
    match set.kind {
        SolutionKind::Empty | SolutionKind::FiniteList => (set.solutions.clone(), SearchHorizon::Exhaustive),
        SolutionKind::InfiniteClasses => {
            let mut pts = BTreeSet::new();
            for rep in &set.solutions {
                for k in -(depth as i64)..=depth as i64 {
                    pts.insert(set.automorph_image(&problem.d, rep, k));
                }
            }
            (pts.into_iter().collect(), SearchHorizon::Bounded { depth })
        }
        SolutionKind::DegenerateLines => {
            let bound = BigInt::from(depth);
            (set.solutions_up_to(&problem.d, &bound), SearchHorizon::Bounded { depth })
        }
    }
}

fn case3(l: &Mat2Z, depth: u32) -> Case3Report {
    let trace = l.trace();
    let problem = PellProblem { d: &trace * &trace - 4, n: &l.b * &l.b * 4 };
    let solutions = solve_general(&problem);
    let (points, horizon) = candidate_points(&problem, &solutions, depth);
    let two_b: BigInt = &l.b * 2;
    let shift = &l.d - &l.a;

    let mut admissible = Vec::new();
    let mut rejected = Vec::new();
    for p in points {
        let reject = |reason| RejectedSolution { point: p.clone(), reason };
        if p.y.is_zero() {
            rejected.push(reject(RejectionReason::BetaZero));
            continue;
        }
        let num = &p.x - &shift * &p.y;
        if two_b.is_zero() || !num.is_multiple_of(&two_b) {
            rejected.push(reject(RejectionReason::AlphaNotIntegral));
            continue;
        }
        let alpha = num / &two_b;
        let beta = p.y.clone();
        let one_minus = BigInt::one() - &alpha * &alpha;
        if one_minus.is_zero() {
            rejected.push(reject(RejectionReason::AlphaUnit));
            continue;
        }
        if !divides(&beta, &one_minus) {
            rejected.push(reject(RejectionReason::BetaNotDivisor));
            continue;
        }
        let matrix = materialize(&InvolutionSpec::General { alpha: alpha.clone(), beta: beta.clone() })
            .expect("validated above");
        if !is_r_reversible(l, &matrix).unwrap_or(false) {
            rejected.push(reject(RejectionReason::NotReversing));
            continue;
        }
        admissible.push(Case3Reversor { x: p.x, y: p.y, alpha, beta, matrix });
    }
    Case3Report { problem, solutions, horizon, admissible, rejected }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofStep {
    pub claim: String,
    pub holds: bool,
}

impl ProofStep {
    fn new(claim: impl Into<String>, holds: bool) -> Self {
        ProofStep { claim: claim.into(), holds }
    }
}

/// The orientation-reversing impossibility argument, checked on concrete entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionProof {
    /// One argument per triangular family.
    pub triangular: Vec<(InvolutionFamily, Vec<ProofStep>)>,
    /// The general-family elimination.
    pub general: Vec<ProofStep>,
    #[serde(with = "crate::serde_decimal")]
    pub discriminant: BigInt,
    pub conic: ConicKind,
    /// The associated Pell equation `x² − D·y² = N`, `D = (a−d)² − 4`, `N = 4b²`,
    /// under `x = 2bα + (a+d)β`, `y = β`.
    pub problem: PellProblem,
    pub solutions: PellSolutionSet,
    /// Pell solutions translated back to `(α, β)` and tested directly.
    pub candidates_checked: usize,
    pub candidates_reversing: usize,
}

impl ObstructionProof {
    pub fn validates(&self) -> bool {
        self.triangular.iter().flat_map(|(_, s)| s).chain(&self.general).all(|s| s.holds)
            && self.candidates_reversing == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversibilityReport {
    pub input: Mat2Z,
    pub orientation: Orientation,
    pub trivial: TrivialVerdict,
    /// Lower-triangular families (orientation-preserving input only).
    pub case1: Option<TriangularCase>,
    /// Upper-triangular families (orientation-preserving input only).
    pub case2: Option<TriangularCase>,
    /// General family via the Pell equation (orientation-preserving input only).
    pub case3: Option<Case3Report>,
    /// Every reversor found, deduplicated, in discovery order.
    pub reversors_found: Vec<Mat2Z>,
    pub obstruction: Option<ObstructionProof>,
}

fn require_hyperbolic(l: &Mat2Z) -> Result<Orientation> {
    let verdict = classify_hyperbolicity(l);
    if !verdict.is_hyperbolic {
        return Err(Error::NotHyperbolic { reason: verdict.reason });
    }
    Ok(verdict.orientation.expect("hyperbolic implies unimodular"))
}

/// All linear reversors of an orientation-preserving hyperbolic `L`.
///
/// The triangular cases are complete. The general case walks every Pell
/// class `case3_class_depth` steps in each direction, so its result is
/// bounded rather than exhaustive.
pub fn find_reversors(l: &Mat2Z, case3_class_depth: u32) -> Result<ReversibilityReport> {
    if require_hyperbolic(l)? == Orientation::Reversing {
        return Err(Error::OrientationReversing);
    }
    let case1 = triangular_case(l, false);
    let case2 = triangular_case(l, true);
    let case3 = case3(l, case3_class_depth);

    let mut seen = BTreeSet::new();
    let mut reversors_found = Vec::new();
    let all = case1
        .reversors
        .iter()
        .chain(&case2.reversors)
        .chain(case3.admissible.iter().map(|r| &r.matrix));
    for a in all {
        if seen.insert(a.clone()) {
            reversors_found.push(a.clone());
        }
    }
    Ok(ReversibilityReport {
        input: l.clone(),
        orientation: Orientation::Preserving,
        trivial: trivial_verdict(l),
        case1: Some(case1),
        case2: Some(case2),
        case3: Some(case3),
        reversors_found,
        obstruction: None,
    })
}

/// A symbolic 2×2 matrix of polynomials.
type PolyMat = [[Poly; 2]; 2];

fn poly_mul(x: &PolyMat, y: &PolyMat) -> PolyMat {
    let e = |i: usize, j: usize| &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn constant_mat(m: &Mat2Z) -> PolyMat {
    let c = |v: &BigInt| Poly::constant(v.clone());
    [[c(&m.a), c(&m.b)], [c(&m.c), c(&m.d)]]
}

/// `A·L − L⁻¹·A` for a symbolic `A`.
fn residual(a: &PolyMat, l: &Mat2Z, l_inv: &Mat2Z) -> PolyMat {
    let al = poly_mul(a, &constant_mat(l));
    let la = poly_mul(&constant_mat(l_inv), a);
    let e = |i: usize, j: usize| &al[i][j] - &la[i][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

const ENTRY: [&str; 4] = ["(1,1)", "(1,2)", "(2,1)", "(2,2)"];

/// Triangular family `F` against `det L = −1`: one off-diagonal residual
/// entry is the constant `±2b` (lower) or `±2c` (upper), and
/// `2·R_diag + γ·R_off = 2(a+d)`. Both `b, c ≠ 0` and `a + d ≠ 0` hold for
/// hyperbolic `L`, so no `γ` works.
fn triangular_obstruction(family: InvolutionFamily, l: &Mat2Z, l_inv: &Mat2Z) -> Vec<ProofStep> {
    let g = Poly::u;
    let c = |v: i64| Poly::constant(v);
    let (a, off, diag, name, forced): (PolyMat, (usize, usize), (usize, usize), &str, &BigInt) = match family {
        InvolutionFamily::LowerTriangularPlus => ([[c(1), c(0)], [g(), c(-1)]], (0, 1), (0, 0), "b", &l.b),
        InvolutionFamily::LowerTriangularMinus => ([[c(-1), c(0)], [g(), c(1)]], (0, 1), (1, 1), "b", &l.b),
        InvolutionFamily::UpperTriangularPlus => ([[c(1), g()], [c(0), c(-1)]], (1, 0), (0, 0), "c", &l.c),
        InvolutionFamily::UpperTriangularMinus => ([[c(-1), g()], [c(0), c(1)]], (1, 0), (1, 1), "c", &l.c),
        InvolutionFamily::General => unreachable!("general family has its own argument"),
    };
    let r = residual(&a, l, l_inv);
    let r_off = &r[off.0][off.1];
    let r_diag = &r[diag.0][diag.1];
    let two_forced = Poly::constant(forced * 2);
    let off_name = ENTRY[off.0 * 2 + off.1];
    let diag_name = ENTRY[diag.0 * 2 + diag.1];
    let trace = l.trace();

    let combo = &(r_diag + r_diag) + &(&g() * r_off);
    vec![
        ProofStep::new(
            format!(
                "residual entry {off_name} of A·L − L⁻¹·A is ±2{name} = {}, independent of γ",
                r_off.display("γ", "_")
            ),
            *r_off == two_forced || *r_off == -&two_forced,
        ),
        ProofStep::new(
            format!("2·R{diag_name} + γ·R{off_name} = 2(a+d) = {}", combo.display("γ", "_")),
            combo == Poly::constant(&trace * 2),
        ),
        ProofStep::new(format!("{name} = {forced} ≠ 0"), !forced.is_zero()),
        ProofStep::new(format!("a + d = {trace} ≠ 0 (H2)"), !trace.is_zero()),
    ]
}

/// General family against `det L = −1`, in the variables `α, β` after
/// clearing the denominator `β`:
///
/// ```text
/// E1 = αb + βd
/// E2 = αβc − a(1 − α²)
/// E3 = bα² + αβ(a+d) + β²c − b
/// β·(A·L − L⁻¹·A) = [[E3, 2β·E1], [−2·E2, −E3]]
/// E3 − α·E1       = αβa + β²c − b   (E4)
/// α·E4 − β·E2     = βa − αb         (E5)
/// E5 + E1         = β(a + d)
/// ```
///
/// so any solution with `β ≠ 0` forces `a + d = 0`.
fn general_obstruction(l: &Mat2Z, l_inv: &Mat2Z) -> Vec<ProofStep> {
    let al = Poly::u();
    let be = Poly::v();
    let k = |v: &BigInt| Poly::constant(v.clone());
    let one = Poly::constant(1);
    let (a, b, c, d) = (k(&l.a), k(&l.b), k(&l.c), k(&l.d));
    let ab = &al * &be;
    let one_minus_a2 = &one - &(&al * &al);
    let beta_a: PolyMat = [[ab.clone(), &be * &be], [one_minus_a2.clone(), -&ab]];
    let r = residual(&beta_a, l, l_inv);

    let e1 = &(&al * &b) + &(&be * &d);
    let e2 = &(&ab * &c) - &(&a * &one_minus_a2);
    let e3 = &(&(&(&b * &(&al * &al)) + &(&ab * &(&a + &d))) + &(&(&be * &be) * &c)) - &b;
    let e4 = &(&(&ab * &a) + &(&(&be * &be) * &c)) - &b;
    let e5 = &(&be * &a) - &(&al * &b);
    let e6 = &be * &(&a + &d);
    let two = Poly::constant(2);
    let show = |p: &Poly| p.display("α", "β").to_string();
    let trace = l.trace();

    vec![
        ProofStep::new(format!("β·R(1,1) = E3 = {}", show(&e3)), r[0][0] == e3),
        ProofStep::new(format!("β·R(1,2) = 2β·E1, E1 = {}", show(&e1)), r[0][1] == &(&two * &be) * &e1),
        ProofStep::new(format!("β·R(2,1) = −2·E2, E2 = {}", show(&e2)), r[1][0] == -&(&two * &e2)),
        ProofStep::new("β·R(2,2) = −E3", r[1][1] == -&e3),
        ProofStep::new(format!("E3 − α·E1 = E4 = {}", show(&e4)), &e3 - &(&al * &e1) == e4),
        ProofStep::new(format!("α·E4 − β·E2 = E5 = {}", show(&e5)), &(&al * &e4) - &(&be * &e2) == e5),
        ProofStep::new(format!("E5 + E1 = β(a+d) = {}", show(&e6)), &e5 + &e1 == e6),
        ProofStep::new(format!("a + d = {trace} ≠ 0 (H2), so β = 0: excluded"), !trace.is_zero()),
    ]
}

/// The orientation-reversing case: no linear involution reverses `L`.
///
/// Returns a report whose `reversors_found` is empty and whose `obstruction`
/// carries the checked argument together with the associated Pell data.
pub fn orientation_reversing_analysis(l: &Mat2Z) -> Result<ReversibilityReport> {
    orientation_reversing_analysis_with_depth(l, DEFAULT_CASE3_DEPTH)
}

pub fn orientation_reversing_analysis_with_depth(l: &Mat2Z, depth: u32) -> Result<ReversibilityReport> {
    if require_hyperbolic(l)? == Orientation::Preserving {
        return Err(Error::OrientationPreserving);
    }
    let l_inv = inverse_unimodular(l)?;
    let triangular = InvolutionFamily::TRIANGULAR
        .iter()
        .map(|&f| (f, triangular_obstruction(f, l, &l_inv)))
        .collect();
    let general = general_obstruction(l, &l_inv);

    let discriminant = conic_discriminant(l, Orientation::Reversing)?;
    let conic = classify_conic(l, Orientation::Reversing)?;
    let problem = PellProblem { d: discriminant.clone(), n: &l.b * &l.b * 4 };
    let solutions = solve_general(&problem);
    let (points, _) = candidate_points(&problem, &solutions, depth);

    // x = 2bα + (a+d)β, y = β
    let two_b = &l.b * 2;
    let trace = l.trace();
    let mut candidates_checked = 0;
    let mut candidates_reversing = 0;
    for p in &points {
        if p.y.is_zero() {
            continue;
        }
        let num = &p.x - &trace * &p.y;
        if !num.is_multiple_of(&two_b) {
            continue;
        }
        let spec = InvolutionSpec::General { alpha: num / &two_b, beta: p.y.clone() };
        if let Ok(a) = materialize(&spec) {
            candidates_checked += 1;
            if is_r_reversible(l, &a)? {
                candidates_reversing += 1;
            }
        }
    }

    let obstruction = ObstructionProof {
        triangular,
        general,
        discriminant,
        conic,
        problem,
        solutions,
        candidates_checked,
        candidates_reversing,
    };
    Ok(ReversibilityReport {
        input: l.clone(),
        orientation: Orientation::Reversing,
        trivial: trivial_verdict(l),
        case1: None,
        case2: None,
        case3: None,
        reversors_found: vec![],
        obstruction: Some(obstruction),
    })
}

/// Number of construction recipes available for `spec`.
pub fn recipe_count(spec: &InvolutionSpec) -> usize {
    match spec {
        InvolutionSpec::General { .. } => 2,
        _ => 1,
    }
}

/// An orientation-preserving hyperbolic `L` reversed by `materialize(spec)`.
///
/// * `[[1, 0], [γ, −1]]`: `[[γ, 1], [2γ² − 1, 2γ]]`, or `[[3, 4], [2, 3]]`
///   when `γ = 0`.
/// * `[[−1, 0], [γ, 1]]`: `[[γ, −1], [1 − 2γ², 2γ]]`, or `[[3, 4], [2, 3]]`.
/// * upper-triangular families: the transpose of the lower-triangular recipe.
/// * general, choice 0: `[[α, β], [(α² − 1)/β, α]]`; choice 1:
///   `[[α, −β], [(1 − α²)/β, α]]`. For `α = 0` (the swaps `β = ±1`), where
///   those are not hyperbolic, `[[3, 1], [−1, 0]]` and `[[0, 1], [−1, 3]]`.
pub fn construct_reversible_anosov(spec: &InvolutionSpec, choice: usize) -> Result<Mat2Z> {
    spec.validate()?;
    if choice >= recipe_count(spec) {
        return Err(Error::NoRecipe { family: spec.family(), choice });
    }
    let lower_plus = |g: &BigInt| {
        if g.is_zero() {
            Mat2Z::new(3, 4, 2, 3)
        } else {
            Mat2Z::new(g.clone(), 1, g * g * 2 - 1, g * 2)
        }
    };
    let lower_minus = |g: &BigInt| {
        if g.is_zero() {
            Mat2Z::new(3, 4, 2, 3)
        } else {
            Mat2Z::new(g.clone(), -1, BigInt::one() - g * g * 2, g * 2)
        }
    };
    let l = match spec {
        InvolutionSpec::LowerTriangularPlus { gamma } => lower_plus(gamma),
        InvolutionSpec::LowerTriangularMinus { gamma } => lower_minus(gamma),
        InvolutionSpec::UpperTriangularPlus { gamma } => lower_plus(gamma).transpose(),
        InvolutionSpec::UpperTriangularMinus { gamma } => lower_minus(gamma).transpose(),
        InvolutionSpec::General { alpha, beta } if alpha.is_zero() => {
            // swaps require c = −b
            if choice == 0 {
                Mat2Z::new(3, 1, -1, 0)
            } else {
                Mat2Z::new(0, 1, -1, 3)
            }
        }
        InvolutionSpec::General { alpha, beta } => {
            let num: BigInt = alpha * alpha - 1;
            if choice == 0 {
                Mat2Z::new(alpha.clone(), beta.clone(), &num / beta, alpha.clone())
            } else {
                Mat2Z::new(alpha.clone(), -beta, -num / beta, alpha.clone())
            }
        }
    };
    debug_assert!(classify_hyperbolicity(&l).is_hyperbolic && l.det().is_one());
    debug_assert!(is_r_reversible(&l, &materialize(spec)?)?);
    Ok(l)
}

/// `[A·Lⁿ for n in n_range]`; each is again an involution reversing `L`.
pub fn involution_family(a: &Mat2Z, l: &Mat2Z, n_range: RangeInclusive<i64>) -> Result<Vec<Mat2Z>> {
    if !is_r_reversible(l, a)? {
        return Err(Error::NotReversible);
    }
    n_range.map(|n| Ok(a * &mat_pow(l, n)?)).collect()
}

/// Whether `(R·S)·L = L·(R·S)` for two reversors `R`, `S` of `L`.
pub fn reversor_composition_commutes(r: &Mat2Z, s: &Mat2Z, l: &Mat2Z) -> Result<bool> {
    if !is_r_reversible(l, r)? || !is_r_reversible(l, s)? {
        return Err(Error::NotReversible);
    }
    let rs = r * s;
    Ok(&rs * l == l * &rs)
}
