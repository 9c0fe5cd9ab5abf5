//! Plain-text rendering for the non-JSON output mode.

use std::fmt::Write as _;

use num_bigint::Sign;
use toral_reversors::pell::SolutionLine;
use toral_reversors::reversibility::{
    ObstructionProof, RejectionReason, SearchHorizon, TriangularCase, TriangularStatus,
};
use toral_reversors::{
    FixedCurve, HyperbolicityVerdict, InvolutionSpec, Mat2Z, PellProblem, PellSolutionSet, ReversibilityReport,
    SolutionKind,
};

use crate::commands::{kind_label, ConstructResult, OracleComparison};

/// Longest reversor list printed in full; `--json` always has everything.
const SHOWN: usize = 12;

/// The `SHOWN` items with the smallest entries, and how many were left out.
fn smallest<'a, T>(items: &'a [T], matrix: impl Fn(&T) -> &Mat2Z) -> (Vec<&'a T>, usize) {
    let mut sorted: Vec<&T> = items.iter().collect();
    sorted.sort_by_key(|t| matrix(t).max_abs_entry());
    let hidden = sorted.len().saturating_sub(SHOWN);
    sorted.truncate(SHOWN);
    (sorted, hidden)
}

fn more(out: &mut String, hidden: usize) {
    if hidden > 0 {
        let _ = writeln!(out, "    ... {hidden} more with larger entries (see --json)");
    }
}

fn verdict(v: &HyperbolicityVerdict) -> String {
    let hyp = if v.is_hyperbolic { "hyperbolic" } else { "not hyperbolic" };
    format!("det {}, trace {}, {hyp} ({})", v.det, v.trace, v.reason)
}

fn triangular(out: &mut String, name: &str, case: &TriangularCase) {
    let _ = write!(out, "{name} (divisor {}, d - a = {}): ", case.divisor, case.difference);
    match &case.status {
        TriangularStatus::NotApplicable { reason } => {
            let _ = writeln!(out, "not applicable, {reason}");
        }
        TriangularStatus::NotDivisible => {
            let _ = writeln!(out, "divisor does not divide d - a, no reversor");
        }
        TriangularStatus::Found { gamma_plus, gamma_minus } => {
            let _ = writeln!(out, "γ+ = {gamma_plus}, γ- = {gamma_minus}");
            for a in &case.reversors {
                let _ = writeln!(out, "    {a}");
            }
        }
    }
}

fn solution_line(l: &SolutionLine) -> String {
    match (l.slope.sign() == Sign::NoSign, l.intercept.sign() == Sign::NoSign) {
        (true, _) => format!("x = {}", l.intercept),
        (false, true) => format!("x = {}·y", l.slope),
        (false, false) => format!("x = {}·y + {}", l.slope, l.intercept),
    }
}

fn solution_set(out: &mut String, set: &PellSolutionSet) {
    let _ = writeln!(out, "  {}", kind_label(set.kind));
    match set.kind {
        SolutionKind::Empty => {}
        SolutionKind::FiniteList => {
            for p in &set.solutions {
                let _ = writeln!(out, "    {p}");
            }
        }
        SolutionKind::InfiniteClasses => {
            let _ = writeln!(out, "  {} classes, representatives:", set.solutions.len());
            for p in &set.solutions {
                let _ = writeln!(out, "    {p}");
            }
            if let Some(eps) = &set.automorph {
                let _ = writeln!(out, "  automorph {eps}");
            }
        }
        SolutionKind::DegenerateLines => {
            for l in &set.lines {
                let _ = writeln!(out, "    {}", solution_line(l));
            }
        }
    }
}

fn obstruction(out: &mut String, proof: &ObstructionProof) {
    for (family, steps) in &proof.triangular {
        let _ = writeln!(out, "{family}:");
        for s in steps {
            let _ = writeln!(out, "  [{}] {}", if s.holds { "ok" } else { "FAIL" }, s.claim);
        }
    }
    let _ = writeln!(out, "general:");
    for s in &proof.general {
        let _ = writeln!(out, "  [{}] {}", if s.holds { "ok" } else { "FAIL" }, s.claim);
    }
    let _ = writeln!(out, "conic: {} (Δ = {})", proof.conic, proof.discriminant);
    let _ = writeln!(out, "Pell: {}", proof.problem.equation());
    solution_set(out, &proof.solutions);
    let _ = writeln!(
        out,
        "candidates checked {}, reversing {}",
        proof.candidates_checked, proof.candidates_reversing
    );
    let _ = writeln!(out, "obstruction {}", if proof.validates() { "validated" } else { "NOT validated" });
}

pub fn analysis(v: &HyperbolicityVerdict, report: &ReversibilityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "L = {}", report.input);
    let _ = writeln!(out, "{}", verdict(v));
    let _ = writeln!(
        out,
        "±I: I reverses {}, -I reverses {}",
        report.trivial.identity_reverses, report.trivial.minus_identity_reverses
    );
    if let Some(c) = &report.case1 {
        triangular(&mut out, "lower-triangular", c);
    }
    if let Some(c) = &report.case2 {
        triangular(&mut out, "upper-triangular", c);
    }
    if let Some(c3) = &report.case3 {
        let _ = writeln!(out, "general: {}", c3.problem.equation());
        solution_set(&mut out, &c3.solutions);
        if let SearchHorizon::Bounded { depth } = c3.horizon {
            let _ = writeln!(out, "  searched {depth} automorph steps each way");
        }
        let (shown, hidden) = smallest(&c3.admissible, |r| &r.matrix);
        for r in shown {
            let _ = writeln!(out, "    α = {}, β = {}: {}", r.alpha, r.beta, r.matrix);
        }
        more(&mut out, hidden);
        let reasons = [
            (RejectionReason::BetaZero, "β = 0"),
            (RejectionReason::AlphaNotIntegral, "α not integral"),
            (RejectionReason::AlphaUnit, "α = ±1"),
            (RejectionReason::BetaNotDivisor, "β ∤ 1 - α²"),
            (RejectionReason::NotReversing, "not reversing"),
        ];
        let rejected: Vec<String> = reasons
            .iter()
            .map(|(r, label)| (c3.rejected_count(*r), label))
            .filter(|(n, _)| *n > 0)
            .map(|(n, label)| format!("{label}: {n}"))
            .collect();
        let rejected = if rejected.is_empty() { "none".into() } else { rejected.join(", ") };
        let _ = writeln!(out, "  rejected: {rejected}");
    }
    if let Some(proof) = &report.obstruction {
        obstruction(&mut out, proof);
    }
    let _ = writeln!(out, "reversors found: {}", report.reversors_found.len());
    let (shown, hidden) = smallest(&report.reversors_found, |a| a);
    for a in shown {
        let _ = writeln!(out, "  {a}");
    }
    more(&mut out, hidden);
    out
}

pub fn pell(problem: &PellProblem, set: &PellSolutionSet, oracle: Option<&OracleComparison>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", problem.equation());
    solution_set(&mut out, set);
    if let Some(o) = oracle {
        let _ = writeln!(
            out,
            "|y| <= {}: {} by scan, {} from solver, {}",
            o.y_max,
            o.brute_force.len(),
            o.expanded.len(),
            if o.agree { "agree" } else { "DISAGREE" }
        );
    }
    out
}

pub fn construction(r: &ConstructResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "involution {} = {}", r.spec, r.involution);
    let _ = writeln!(out, "L = {} (recipe {})", r.l, r.choice);
    let _ = writeln!(out, "involution: {}", r.verification.is_involution);
    let _ = writeln!(out, "A·L = L⁻¹·A: {}", r.verification.reversible);
    let _ = writeln!(out, "{}", verdict(&r.verification.hyperbolicity));
    out
}

pub fn fixset(a: &Mat2Z, spec: &InvolutionSpec, curves: &[FixedCurve]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{a} = {spec}");
    let _ = writeln!(out, "{} fixed curve(s):", curves.len());
    for c in curves {
        let _ = writeln!(out, "  {c}");
    }
    out
}

pub fn enumeration<'a>(bound: u64, items: impl Iterator<Item = (&'a Mat2Z, &'a InvolutionSpec)>) -> String {
    let mut out = String::new();
    let mut count = 0;
    for (m, spec) in items {
        let _ = writeln!(out, "{m}  {spec}");
        count += 1;
    }
    let _ = writeln!(out, "{count} involutions with entries bounded by {bound}");
    out
}
