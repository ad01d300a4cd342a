//! The subcommands of the `acs6` binary, as functions from inputs to
//! captured output and an exit code.

use std::path::Path;

use serde_json::{json, Value};

use crate::acs::{validate as validate_matrix, Acs};
use crate::angles::closed_form::Table;
use crate::chart::{chart_from_acs, chart_point_from_acs};
use crate::io::{chart_json, cp3_json, form_json, matrix_json, parse_algebra, parse_structure, report_json};
use crate::lie::{calabi_eckmann_catalog, nijenhuis_norm, LieAlgebra6};
use crate::scan::{edge_csv, edge_scan, nijenhuis_sweep, sweep_csv, ParamRange, ScanSpec};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_OUTSIDE_CHART: i32 = 3;

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OutsideChart { .. } => EXIT_OUTSIDE_CHART,
        Error::NotCompatible { .. } | Error::WrongOrientation => EXIT_REJECTED,
        _ => EXIT_MALFORMED,
    }
}

/// `OutsideChart` goes to stdout as JSON; everything else is a message on
/// stderr.
pub fn error_output(e: &Error) -> Output {
    let code = exit_code(e);
    match e {
        Error::OutsideChart { denominator } => Output {
            stdout: pretty(&json!({
                "error": "OutsideChart",
                "denominator": denominator,
                "message": e.to_string(),
            })),
            stderr: String::new(),
            code,
        },
        _ => Output { stdout: String::new(), stderr: format!("error: {e}\n"), code },
    }
}

fn run(f: impl FnOnce() -> crate::Result<Output>) -> Output {
    f().unwrap_or_else(|e| error_output(&e))
}

/// Target encodings for [`convert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Matrix,
    Form,
    Cp3,
    Chart,
}

/// Report on the matrix of any accepted encoding; exit 1 if a defect reaches `tol`.
pub fn validate(input: &str, tol: f64, table: Table) -> Output {
    run(|| {
        let m = parse_structure(input)?.raw_matrix(table);
        let report = validate_matrix(&m);
        let code = if report.accepted(tol) { EXIT_OK } else { EXIT_REJECTED };
        Ok(Output { stdout: pretty(&report_json(&report, tol)), stderr: String::new(), code })
    })
}

pub fn convert(input: &str, format: Format, tol: f64, table: Table) -> Output {
    run(|| {
        let j = parse_structure(input)?.to_acs(tol, table)?;
        let needs_z = matches!(format, Format::Cp3 | Format::Chart);
        if needs_z && !j.in_z() {
            return Err(Error::WrongOrientation);
        }
        let v = match format {
            Format::Matrix => matrix_json(j.matrix()),
            Format::Form => form_json(&j.fundamental_form()),
            Format::Cp3 => cp3_json(&chart_point_from_acs(&j)),
            Format::Chart => chart_json(&chart_from_acs(&j)?),
        };
        Ok(Output::ok(pretty(&v)))
    })
}

/// `su2xsu2`, `abelian`, or a path to a structure-constants file.
pub fn load_algebra(spec: &str) -> crate::Result<LieAlgebra6> {
    match spec {
        "su2xsu2" => Ok(LieAlgebra6::su2xsu2()),
        "abelian" => Ok(LieAlgebra6::abelian()),
        path => {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Error::InvalidAlgebra(format!("cannot read {path}: {e}")))?;
            parse_algebra(&text)
        }
    }
}

pub fn nijenhuis(algebra: &str, input: &str, tol: f64, integrability_tol: f64, table: Table) -> Output {
    run(|| {
        let g = load_algebra(algebra)?;
        let j: Acs = parse_structure(input)?.to_acs(tol, table)?;
        Ok(Output::ok(pretty(&json!(nijenhuis_norm(&g, &j, integrability_tol)))))
    })
}

/// CSV rows `(angles..., norm)` over an angle scan.
pub fn nijenhuis_sweep_csv(algebra: &str, spec: &ScanSpec) -> Output {
    run(|| {
        let g = load_algebra(algebra)?;
        Ok(Output::ok(sweep_csv(&nijenhuis_sweep(&g, spec)?)))
    })
}

pub fn scan_edge(psi: ParamRange, phi: ParamRange) -> Output {
    run(|| Ok(Output::ok(edge_csv(&edge_scan(psi, phi)?))))
}

/// The twelve integrable forms with edge labels and norms on `su(2) x su(2)`.
pub fn catalog(integrability_tol: f64) -> Output {
    let g = LieAlgebra6::su2xsu2();
    let entries: Vec<Value> = calabi_eckmann_catalog()
        .iter()
        .map(|e| {
            let j = Acs::from_matrix_unchecked(e.form.to_skew_matrix());
            let report = nijenhuis_norm(&g, &j, integrability_tol);
            json!({
                "edge": e.label(),
                "form": form_json(&e.form)["form"],
                "display": e.form.to_string(),
                "norm": report.norm,
                "integrable": report.integrable,
            })
        })
        .collect();
    Output::ok(pretty(&Value::Array(entries)))
}
