//! JSON encodings of structures, points, angles and structure constants.
//!
//! ```text
//! {"matrix": [[6x6]]}
//! {"form": {"12": c, "13": c, ..., "56": c}}        missing keys are 0
//! {"cp3": [[re, im], [re, im], [re, im], [re, im]]}
//! {"chart": {"a": [re, im], "b": [re, im], "c": [re, im]}}
//! {"angles": {"phi": r, "psi": r, "theta": r, "phi1": r, "phi2": r, "phi3": r}}
//! {"dim": 6, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 1.0}, ...]}
//! ```

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::acs::{Acs, ValidationReport};
use crate::angles::closed_form::{closed_form_matrix, Table};
use crate::angles::{acs_from_angles, AngleParams};
use crate::chart::{acs_from_chart, acs_from_point, ChartCoords, ProjPoint};
use crate::lie::{LieAlgebra6, NijenhuisReport};
use crate::linalg6::{Mat6, TwoForm, PAIRS};
use crate::{Complex64, Error, Result};

/// A structure in any of the accepted encodings.
#[derive(Clone, Debug, PartialEq)]
pub enum StructureInput {
    Matrix(Mat6),
    Form(TwoForm),
    Cp3(ProjPoint),
    Chart(ChartCoords),
    Angles(AngleParams),
}

impl StructureInput {
    /// The encoding's key.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Matrix(_) => "matrix",
            Self::Form(_) => "form",
            Self::Cp3(_) => "cp3",
            Self::Chart(_) => "chart",
            Self::Angles(_) => "angles",
        }
    }

    /// The 6x6 matrix without validation. Angles go through the rotation
    /// composition, or through the verbatim closed-form table when `table`
    /// is [`Table::Verbatim`].
    pub fn raw_matrix(&self, table: Table) -> Mat6 {
        match self {
            Self::Matrix(m) => *m,
            Self::Form(w) => w.to_skew_matrix(),
            Self::Cp3(p) => acs_from_point(p).into_matrix(),
            Self::Chart(c) => acs_from_chart(c).into_matrix(),
            Self::Angles(p) => match table {
                Table::Corrected => acs_from_angles(p).into_matrix(),
                Table::Verbatim => closed_form_matrix(p, Table::Verbatim).into_matrix(),
            },
        }
    }

    /// [`Self::raw_matrix`] validated at `tol`.
    pub fn to_acs(&self, tol: f64, table: Table) -> Result<Acs> {
        Acs::new(self.raw_matrix(table), tol)
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| malformed(format!("{what}: {e}")))
}

fn complex_pair(v: [f64; 2]) -> Result<Complex64> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(Complex64::new(v[0], v[1]))
    } else {
        Err(malformed("non-finite complex coordinate"))
    }
}

/// Parses a JSON object with exactly one of the keys `matrix`, `form`,
/// `cp3`, `chart`, `angles`.
pub fn parse_structure(text: &str) -> Result<StructureInput> {
    let value: Value = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(malformed("expected a JSON object"));
    };
    if obj.len() != 1 {
        return Err(malformed("expected exactly one of matrix, form, cp3, chart, angles"));
    }
    let (key, inner) = obj.into_iter().next().expect("one entry");
    match key.as_str() {
        "matrix" => parse_matrix(inner).map(StructureInput::Matrix),
        "form" => parse_form(inner).map(StructureInput::Form),
        "cp3" => {
            let z: [[f64; 2]; 4] = from_value(inner, "cp3")?;
            let z = [complex_pair(z[0])?, complex_pair(z[1])?, complex_pair(z[2])?, complex_pair(z[3])?];
            ProjPoint::new(z).map(StructureInput::Cp3)
        }
        "chart" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Abc {
                a: [f64; 2],
                b: [f64; 2],
                c: [f64; 2],
            }
            let v: Abc = from_value(inner, "chart")?;
            Ok(StructureInput::Chart(ChartCoords::new(complex_pair(v.a)?, complex_pair(v.b)?, complex_pair(v.c)?)))
        }
        "angles" => {
            #[derive(Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Six {
                phi: f64,
                psi: f64,
                theta: f64,
                phi1: f64,
                phi2: f64,
                phi3: f64,
            }
            let v: Six = from_value(inner, "angles")?;
            AngleParams::new(v.phi, v.psi, v.theta, v.phi1, v.phi2, v.phi3).map(StructureInput::Angles)
        }
        other => Err(malformed(format!("unknown key {other:?}"))),
    }
}

fn parse_matrix(v: Value) -> Result<Mat6> {
    let rows: Vec<Vec<f64>> = from_value(v, "matrix")?;
    if rows.len() != 6 || rows.iter().any(|r| r.len() != 6) {
        return Err(malformed("matrix must be 6x6"));
    }
    let m = Mat6::from_fn(|i, j| rows[i][j]);
    if m.iter().any(|x| !x.is_finite()) {
        return Err(malformed("matrix has non-finite entries"));
    }
    Ok(m)
}

fn parse_form(v: Value) -> Result<TwoForm> {
    let map: BTreeMap<String, f64> = from_value(v, "form")?;
    let mut w = TwoForm::zero();
    for (key, c) in map {
        let pair = PAIRS.iter().find(|(i, j)| key == format!("{i}{j}"));
        let Some(&(i, j)) = pair else {
            return Err(malformed(format!("form key {key:?} is not of the form \"ij\" with i < j")));
        };
        if !c.is_finite() {
            return Err(malformed(format!("form coefficient {key} is not finite")));
        }
        w.set(i, j, c);
    }
    Ok(w)
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn matrix_json(m: &Mat6) -> Value {
    let rows: Vec<Vec<f64>> = (0..6).map(|i| (0..6).map(|j| m[(i, j)]).collect()).collect();
    json!({ "matrix": rows })
}

/// All 15 keys are written, zeros included.
pub fn form_json(w: &TwoForm) -> Value {
    let mut map = Map::new();
    for &(i, j) in PAIRS.iter() {
        map.insert(format!("{i}{j}"), json!(w.get(i, j)));
    }
    json!({ "form": map })
}

pub fn cp3_json(p: &ProjPoint) -> Value {
    json!({ "cp3": p.coords().iter().map(|z| complex_json(*z)).collect::<Vec<_>>() })
}

pub fn chart_json(c: &ChartCoords) -> Value {
    json!({ "chart": { "a": complex_json(c.a()), "b": complex_json(c.b()), "c": complex_json(c.c()) } })
}

pub fn angles_json(p: &AngleParams) -> Value {
    json!({ "angles": p })
}

pub fn report_json(r: &ValidationReport, tol: f64) -> Value {
    json!({
        "square_defect": r.square_defect,
        "orth_defect": r.orth_defect,
        "skew_defect": r.skew_defect,
        "orientation": r.orientation,
        "accepted": r.accepted(tol),
        "in_z": r.orientation > 0,
    })
}

pub fn nijenhuis_json(r: &NijenhuisReport) -> Value {
    json!(r)
}

/// Parses a structure-constants file.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra6> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Entry {
        i: usize,
        j: usize,
        k: usize,
        c: f64,
    }
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct File {
        dim: usize,
        brackets: Vec<Entry>,
    }
    let f: File = serde_json::from_str(text).map_err(|e| Error::InvalidAlgebra(e.to_string()))?;
    if f.dim != 6 {
        return Err(Error::InvalidAlgebra(format!("dim must be 6, got {}", f.dim)));
    }
    let entries: Vec<_> = f.brackets.iter().map(|e| (e.i, e.j, e.k, e.c)).collect();
    LieAlgebra6::from_brackets(&entries)
}

pub fn algebra_json(g: &LieAlgebra6) -> Value {
    let brackets: Vec<Value> =
        g.brackets().into_iter().map(|(i, j, k, c)| json!({ "i": i, "j": j, "k": k, "c": c })).collect();
    json!({ "dim": 6, "brackets": brackets })
}
