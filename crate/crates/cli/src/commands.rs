use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use toral_reversors::pell::SolutionKind;
use toral_reversors::reversibility::{orientation_reversing_analysis_with_depth, SearchHorizon, DEFAULT_CASE3_DEPTH};
use toral_reversors::{
    brute_force_solutions, classify_hyperbolicity, classify_involution, construct_reversible_anosov,
    enumerate_involutions, find_reversors, fixed_point_curves, is_involution, is_r_reversible, materialize,
    solve_general, tables, Error, FixedCurve, HyperbolicityVerdict,
    InvolutionFamily, InvolutionSpec, Mat2Z, Orientation, PellPoint, PellProblem, PellSolutionSet,
};

use crate::render;

pub const SCHEMA_VERSION: &str = "1";

/// Usage error: malformed or inconsistent arguments.
const EXIT_USAGE: u8 = 2;
/// The input violates a mathematical precondition.
const EXIT_DOMAIN: u8 = 3;

#[derive(Debug, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub input_echo: Value,
    pub result: Value,
    pub warnings: Vec<String>,
}

pub struct Output {
    pub envelope: Envelope,
    pub human: String,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(e: impl ToString) -> Self {
        CliError { code: EXIT_USAGE, message: e.to_string() }
    }

    fn domain(e: impl ToString) -> Self {
        CliError { code: EXIT_DOMAIN, message: e.to_string() }
    }
}

fn output(command: &str, input_echo: Value, result: &impl Serialize, warnings: Vec<String>, human: String) -> Output {
    Output {
        envelope: Envelope {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            input_echo,
            result: serde_json::to_value(result).expect("results serialize"),
            warnings,
        },
        human,
    }
}

fn matrix(e: [&BigInt; 4]) -> Mat2Z {
    Mat2Z::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone())
}

pub fn analyze(entries: [&BigInt; 4], depth: u32) -> Result<Output, CliError> {
    let l = matrix(entries);
    let verdict = classify_hyperbolicity(&l);
    if !verdict.is_sl2z {
        return Err(CliError::domain(Error::NotUnimodular { det: verdict.det }));
    }
    if !verdict.is_hyperbolic {
        return Err(CliError::domain(Error::NotHyperbolic { reason: verdict.reason }));
    }
    let report = match verdict.orientation {
        Some(Orientation::Preserving) => find_reversors(&l, depth),
        _ => orientation_reversing_analysis_with_depth(&l, depth),
    }
    .map_err(CliError::domain)?;

    let mut warnings = Vec::new();
    if let Some(SearchHorizon::Bounded { depth }) = report.case3.as_ref().map(|c| &c.horizon) {
        warnings.push(format!("case-3 enumeration bounded at depth {depth}"));
    }
    let human = render::analysis(&verdict, &report);
    let echo = json!({ "matrix": l, "depth": depth });
    Ok(output("analyze", echo, &json!({ "hyperbolicity": verdict, "report": report }), warnings, human))
}

#[derive(Serialize)]
pub struct OracleComparison {
    pub y_max: u64,
    pub brute_force: Vec<PellPoint>,
    pub expanded: Vec<PellPoint>,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct PellResult {
    pub equation: String,
    pub solutions: PellSolutionSet,
    pub oracle: Option<OracleComparison>,
}

pub fn pell(d: &BigInt, n: &BigInt, y_max: Option<u64>) -> Output {
    let problem = PellProblem { d: d.clone(), n: n.clone() };
    let solutions = solve_general(&problem);
    let oracle = y_max.map(|y_max| {
        let brute_force = brute_force_solutions(&problem, y_max);
        let expanded = solutions.solutions_up_to(d, &BigInt::from(y_max));
        let agree = brute_force == expanded;
        OracleComparison { y_max, brute_force, expanded, agree }
    });
    let mut warnings = Vec::new();
    if oracle.as_ref().is_some_and(|o| !o.agree) {
        warnings.push("solver and brute-force scan disagree".into());
    }
    let result = PellResult { equation: problem.equation(), solutions, oracle };
    let human = render::pell(&problem, &result.solutions, result.oracle.as_ref());
    let echo = json!({ "D": d.to_string(), "N": n.to_string(), "ymax": y_max });
    output("pell", echo, &result, warnings, human)
}

#[derive(Serialize)]
pub struct Verification {
    pub is_involution: bool,
    pub reversible: bool,
    pub hyperbolicity: HyperbolicityVerdict,
}

#[derive(Serialize)]
pub struct ConstructResult {
    pub spec: InvolutionSpec,
    pub involution: Mat2Z,
    pub choice: usize,
    pub l: Mat2Z,
    pub verification: Verification,
}

pub fn construct(family: &str, params: &[BigInt], choice: usize) -> Result<Output, CliError> {
    let family: InvolutionFamily = family.parse().map_err(CliError::usage)?;
    let spec = InvolutionSpec::from_params(family, params).map_err(CliError::usage)?;
    let l = construct_reversible_anosov(&spec, choice).map_err(CliError::usage)?;
    let involution = materialize(&spec).map_err(CliError::usage)?;
    let verification = Verification {
        is_involution: is_involution(&involution),
        reversible: is_r_reversible(&l, &involution).map_err(CliError::domain)?,
        hyperbolicity: classify_hyperbolicity(&l),
    };
    let result = ConstructResult { spec, involution, choice, l, verification };
    let human = render::construction(&result);
    let echo = json!({
        "family": family,
        "params": params.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "choice": choice,
    });
    Ok(output("construct", echo, &result, vec![], human))
}

#[derive(Serialize)]
pub struct FixsetResult {
    pub involution: Mat2Z,
    pub spec: InvolutionSpec,
    pub curves: Vec<FixedCurve>,
}

pub fn fixset(entries: [&BigInt; 4]) -> Result<Output, CliError> {
    let a = matrix(entries);
    let curves = fixed_point_curves(&a).map_err(CliError::domain)?;
    let spec = classify_involution(&a).map_err(CliError::domain)?;
    let result = FixsetResult { involution: a.clone(), spec, curves };
    let human = render::fixset(&result.involution, &result.spec, &result.curves);
    Ok(output("fixset", json!({ "matrix": a }), &result, vec![], human))
}

pub fn table_example1() -> Result<Output, CliError> {
    let table = tables::example1().map_err(CliError::domain)?;
    let warnings = vec![format!("case-3 enumeration bounded at depth {DEFAULT_CASE3_DEPTH}")];
    let human = format!("{table}");
    Ok(output("table", json!({ "which": "example1" }), &table, warnings, human))
}

pub fn table_example2() -> Result<Output, CliError> {
    let table = tables::example2().map_err(CliError::domain)?;
    let human = format!("{table}");
    Ok(output("table", json!({ "which": "example2" }), &table, vec![], human))
}

#[derive(Serialize)]
pub struct EnumeratedInvolution {
    pub matrix: Mat2Z,
    pub spec: InvolutionSpec,
}

pub fn enumerate(bound: u64) -> Result<Output, CliError> {
    if bound == 0 {
        return Err(CliError::usage("--bound must be at least 1"));
    }
    let items: Vec<EnumeratedInvolution> = enumerate_involutions(bound)
        .into_iter()
        .map(|matrix| {
            let spec = classify_involution(&matrix).expect("enumerated matrices are non-trivial involutions");
            EnumeratedInvolution { matrix, spec }
        })
        .collect();
    let human = render::enumeration(bound, items.iter().map(|i| (&i.matrix, &i.spec)));
    let result = json!({ "bound": bound, "count": items.len(), "involutions": items });
    Ok(output("enumerate", json!({ "bound": bound }), &result, vec![], human))
}

/// Solution-count label shared by the renderers.
pub fn kind_label(kind: SolutionKind) -> &'static str {
    match kind {
        SolutionKind::Empty => "no solutions",
        SolutionKind::FiniteList => "finitely many solutions",
        SolutionKind::InfiniteClasses => "infinitely many solutions",
        SolutionKind::DegenerateLines => "two lines of solutions",
    }
}

