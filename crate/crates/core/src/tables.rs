//! Regeneration of the two reference example tables.
//!
//! Every computed cell comes from the library; the expected values sit next
//! to them only so that a row can be flagged as matching or not.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::involutions::InvolutionFamily;
use crate::lattice::Mat2Z;
use crate::pell::{ConicKind, SolutionKind};
use crate::reversibility::{find_reversors, orientation_reversing_analysis, DEFAULT_CASE3_DEPTH};
use crate::Result;

/// Triangular columns in table order.
pub const TRIANGULAR_COLUMNS: [InvolutionFamily; 4] = [
    InvolutionFamily::LowerTriangularPlus,
    InvolutionFamily::UpperTriangularPlus,
    InvolutionFamily::LowerTriangularMinus,
    InvolutionFamily::UpperTriangularMinus,
];

/// One `γ` per triangular column, `None` for a dash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaColumns(#[serde(with = "gamma_array")] pub [Option<BigInt>; 4]);

mod gamma_array {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Option<BigInt>; 4], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|g| g.as_ref().map(ToString::to_string)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Option<BigInt>; 4], D::Error> {
        let raw = Vec::<Option<String>>::deserialize(d)?;
        let parsed = raw
            .into_iter()
            .map(|g| g.map(|s| s.parse().map_err(D::Error::custom)).transpose())
            .collect::<Result<Vec<_>, _>>()?;
        parsed.try_into().map_err(|_| D::Error::custom("expected four columns"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example1Computed {
    pub gammas: GammaColumns,
    /// Case-3 reversors found within the default horizon.
    pub general_reversors: Vec<Mat2Z>,
    pub total_reversors: usize,
    pub equation: String,
    pub pell_kind: SolutionKind,
    /// Every class representative satisfies the equation.
    pub pell_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example1Expected {
    pub gammas: GammaColumns,
    /// The sample general reversor, `None` for a dash.
    pub instance: Option<Mat2Z>,
    pub equation: String,
    pub pell_kind: SolutionKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example1Row {
    pub l: Mat2Z,
    pub computed: Example1Computed,
    pub expected: Example1Expected,
    pub matches: bool,
}

impl Example1Row {
    fn compare(computed: &Example1Computed, expected: &Example1Expected) -> bool {
        let instance_ok = match &expected.instance {
            Some(a) => computed.general_reversors.contains(a),
            None => computed.general_reversors.is_empty(),
        };
        let all_dashes = expected.gammas.0.iter().all(Option::is_none) && expected.instance.is_none();
        computed.gammas == expected.gammas
            && instance_ok
            && (!all_dashes || computed.total_reversors == 0)
            && computed.equation == expected.equation
            && computed.pell_kind == expected.pell_kind
            && computed.pell_verified
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example1Table {
    pub rows: Vec<Example1Row>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example2Computed {
    #[serde(with = "crate::serde_decimal")]
    pub delta: BigInt,
    pub equation: String,
    /// `None` for infinitely many.
    pub solution_count: Option<usize>,
    pub conic: ConicKind,
    pub reversors: usize,
    pub proof_validates: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example2Expected {
    #[serde(with = "crate::serde_decimal")]
    pub delta: BigInt,
    pub equation: String,
    pub solution_count: Option<usize>,
    pub conic: ConicKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example2Row {
    pub l: Mat2Z,
    pub computed: Example2Computed,
    pub expected: Example2Expected,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example2Table {
    pub rows: Vec<Example2Row>,
    pub matches: bool,
}

fn gammas(g: [Option<i64>; 4]) -> GammaColumns {
    GammaColumns(g.map(|v| v.map(BigInt::from)))
}

fn example1_expected() -> Vec<(Mat2Z, Example1Expected)> {
    let z = Some(0);
    vec![
        (
            Mat2Z::new(2, 1, 3, 2),
            Example1Expected {
                gammas: gammas([z, z, z, z]),
                instance: Some(Mat2Z::new(2, 1, -3, -2)),
                equation: "x^2-12y^2=4".into(),
                pell_kind: SolutionKind::InfiniteClasses,
            },
        ),
        (
            Mat2Z::new(2, 1, 1, 1),
            Example1Expected {
                gammas: gammas([Some(-1), Some(-1), Some(1), Some(1)]),
                instance: Some(Mat2Z::new(5, 3, -8, -5)),
                equation: "x^2-5y^2=4".into(),
                pell_kind: SolutionKind::InfiniteClasses,
            },
        ),
        (
            Mat2Z::new(4, 9, 7, 16),
            Example1Expected {
                gammas: gammas([None; 4]),
                instance: None,
                equation: "x^2-396y^2=324".into(),
                pell_kind: SolutionKind::InfiniteClasses,
            },
        ),
    ]
}

fn example2_expected() -> Vec<(Mat2Z, Example2Expected)> {
    let row = |delta: i64, equation: &str, solution_count, conic| Example2Expected {
        delta: delta.into(),
        equation: equation.into(),
        solution_count,
        conic,
    };
    vec![
        (Mat2Z::new(2, 3, 1, 1), row(-3, "x^2+3y^2=36", Some(6), ConicKind::Ellipse)),
        (Mat2Z::new(3, 4, 1, 1), row(0, "x^2=64", None, ConicKind::DegenerateParallelLines)),
        (Mat2Z::new(4, 5, 1, 1), row(5, "x^2-5y^2=100", None, ConicKind::Hyperbola)),
    ]
}

fn compute_example1_row(l: &Mat2Z) -> Result<Example1Computed> {
    let report = find_reversors(l, DEFAULT_CASE3_DEPTH)?;
    let case1 = report.case1.as_ref().expect("orientation-preserving report");
    let case2 = report.case2.as_ref().expect("orientation-preserving report");
    let case3 = report.case3.as_ref().expect("orientation-preserving report");
    let plus = |c: &crate::reversibility::TriangularCase| c.gammas().map(|g| g.0.clone());
    let minus = |c: &crate::reversibility::TriangularCase| c.gammas().map(|g| g.1.clone());
    Ok(Example1Computed {
        gammas: GammaColumns([plus(case1), plus(case2), minus(case1), minus(case2)]),
        general_reversors: case3.admissible.iter().map(|r| r.matrix.clone()).collect(),
        total_reversors: report.reversors_found.len(),
        equation: case3.problem.equation(),
        pell_kind: case3.solutions.kind,
        pell_verified: case3.solutions.solutions.iter().all(|p| case3.problem.is_solution(p)),
    })
}

fn compute_example2_row(l: &Mat2Z) -> Result<Example2Computed> {
    let report = orientation_reversing_analysis(l)?;
    let proof = report.obstruction.as_ref().expect("orientation-reversing report");
    Ok(Example2Computed {
        delta: proof.discriminant.clone(),
        equation: proof.problem.equation(),
        solution_count: proof.solutions.count(),
        conic: proof.conic,
        reversors: report.reversors_found.len(),
        proof_validates: proof.validates(),
    })
}

/// Regenerates the orientation-preserving table.
pub fn example1() -> Result<Example1Table> {
    let rows = example1_expected()
        .into_iter()
        .map(|(l, expected)| {
            let computed = compute_example1_row(&l)?;
            let matches = Example1Row::compare(&computed, &expected);
            Ok(Example1Row { l, computed, expected, matches })
        })
        .collect::<Result<Vec<_>>>()?;
    let matches = rows.iter().all(|r| r.matches);
    Ok(Example1Table { rows, matches })
}

/// Regenerates the orientation-reversing table.
pub fn example2() -> Result<Example2Table> {
    let rows = example2_expected()
        .into_iter()
        .map(|(l, expected)| {
            let computed = compute_example2_row(&l)?;
            let matches = computed.delta == expected.delta
                && computed.equation == expected.equation
                && computed.solution_count == expected.solution_count
                && computed.conic == expected.conic
                && computed.reversors == 0
                && computed.proof_validates;
            Ok(Example2Row { l, computed, expected, matches })
        })
        .collect::<Result<Vec<_>>>()?;
    let matches = rows.iter().all(|r| r.matches);
    Ok(Example2Table { rows, matches })
}

fn cell(g: &Option<BigInt>) -> String {
    g.as_ref().map_or_else(|| "-".into(), |g| format!("γ={g}"))
}

fn count_cell(c: Option<usize>) -> String {
    c.map_or_else(|| "∞".into(), |c| c.to_string())
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn render_rows(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "| {} |", padded.join(" | "));
    };
    line(header);
    line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for row in rows {
        line(row);
    }
    out
}

impl fmt::Display for Example1Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut header = vec!["L".to_string(), "".to_string()];
        header.extend(TRIANGULAR_COLUMNS.iter().map(|c| c.short_name().to_string()));
        header.extend(["general".into(), "Pell".into(), "".into()]);
        let mut rows = Vec::new();
        for row in &self.rows {
            let mut got = vec![row.l.to_string(), "computed".into()];
            got.extend(row.computed.gammas.0.iter().map(cell));
            let general = &row.computed.general_reversors;
            got.push(match &row.expected.instance {
                Some(a) if general.contains(a) => format!("{} found, incl. {a}", general.len()),
                _ if general.is_empty() => "-".into(),
                _ => format!("{} found", general.len()),
            });
            got.push(row.computed.equation.clone());
            got.push(flag(row.matches).into());
            rows.push(got);

            let mut want = vec![String::new(), "expected".into()];
            want.extend(row.expected.gammas.0.iter().map(cell));
            want.push(row.expected.instance.as_ref().map_or_else(|| "-".into(), |a| format!("e.g. {a}")));
            want.push(row.expected.equation.clone());
            want.push(String::new());
            rows.push(want);
        }
        f.write_str(&render_rows(&header, &rows))?;
        writeln!(f, "overall: {}", flag(self.matches))
    }
}

impl fmt::Display for Example2Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header: Vec<String> =
            ["L", "", "Δ", "Pell", "solutions", "conic", "involutions", ""].map(String::from).into();
        let mut rows = Vec::new();
        for row in &self.rows {
            let c = &row.computed;
            let involutions = if c.reversors == 0 { "-".to_string() } else { c.reversors.to_string() };
            rows.push(vec![
                row.l.to_string(),
                "computed".into(),
                c.delta.to_string(),
                c.equation.clone(),
                count_cell(c.solution_count),
                c.conic.to_string(),
                involutions,
                flag(row.matches).into(),
            ]);
            let e = &row.expected;
            rows.push(vec![
                String::new(),
                "expected".into(),
                e.delta.to_string(),
                e.equation.clone(),
                count_cell(e.solution_count),
                e.conic.to_string(),
                "-".into(),
                String::new(),
            ]);
        }
        f.write_str(&render_rows(&header, &rows))?;
        writeln!(f, "overall: {}", flag(self.matches))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_matches() {
        let table = example1().unwrap();
        for row in &table.rows {
            assert!(row.matches, "{row:#?}");
        }
        assert!(table.matches);
        assert!(table.to_string().contains("overall: MATCH"));
    }

    #[test]
    fn example2_matches() {
        let table = example2().unwrap();
        for row in &table.rows {
            assert!(row.matches, "{row:#?}");
        }
        let text = table.to_string();
        assert!(text.contains("Two lines") && text.contains("∞"));
    }

    #[test]
    fn mismatch_is_detected() {
        let table = example1().unwrap();
        let row = &table.rows[1];
        let mut wrong = row.expected.clone();
        wrong.gammas.0[0] = Some(BigInt::from(1));
        assert!(!Example1Row::compare(&row.computed, &wrong));
        let mut wrong = row.expected.clone();
        wrong.instance = Some(Mat2Z::new(1, 0, 0, -1));
        assert!(!Example1Row::compare(&row.computed, &wrong));
    }

    #[test]
    fn serde_round_trip() {
        let table = example1().unwrap();
        let json = serde_json::to_string(&table).unwrap();
        assert!(json.contains("\"-1\""));
        let back: Example1Table = serde_json::from_str(&json).unwrap();
        assert_eq!(back, table);
    }
}
