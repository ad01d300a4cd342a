//! Parameter grids and sweeps, with CSV export.
//!
//! Grid points are evaluated in parallel and written in row-major grid order
//! (last parameter fastest). Numbers are printed with 17 significant digits.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::angles::closed_form::random_angles;
use crate::angles::{acs_from_angles, AngleParams};
use crate::chart::edge01_from_sphere;
use crate::lie::{nijenhuis_norm, LieAlgebra6, INTEGRABILITY_TOL};
use crate::linalg6::{pfaffian, TwoForm, PAIRS};
use crate::{Error, Result};

/// Largest number of points a single scan may request.
pub const MAX_POINTS: usize = 10_000_000;

/// `steps` equally spaced values from `min` to `max` inclusive (`min` alone
/// when `steps == 1`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl ParamRange {
    pub fn new(min: f64, max: f64, steps: usize) -> Self {
        Self { min, max, steps }
    }

    pub fn single(value: f64) -> Self {
        Self::new(value, value, 1)
    }

    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let n = (self.steps - 1) as f64;
        (0..self.steps).map(|k| self.min + (self.max - self.min) * (k as f64 / n)).collect()
    }

    fn check(&self, name: &str, lo: f64, hi: f64) -> Result<()> {
        const SLACK: f64 = 1e-12;
        if self.steps == 0 {
            return Err(Error::InvalidScan(format!("{name}: step count must be at least 1")));
        }
        if !(self.min.is_finite() && self.max.is_finite()) || self.min > self.max {
            return Err(Error::InvalidScan(format!("{name}: need finite min <= max")));
        }
        if self.min < lo - SLACK || self.max > hi + SLACK {
            return Err(Error::InvalidScan(format!("{name}: range [{}, {}] leaves [{lo}, {hi}]", self.min, self.max)));
        }
        Ok(())
    }
}

fn parse_number(s: &str) -> Option<f64> {
    let s = s.trim();
    let (sign, rest) = match s.strip_prefix('-') {
        Some(r) => (-1.0, r),
        None => (1.0, s),
    };
    let v = match rest {
        "pi" => PI,
        "pi/2" => FRAC_PI_2,
        "pi/4" => PI / 4.0,
        "2pi" => TAU,
        _ => rest.parse::<f64>().ok()?,
    };
    Some(sign * v)
}

/// `min:max:steps`, where the bounds are numbers or `pi`, `pi/2`, `pi/4`,
/// `2pi` with an optional minus sign.
impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidScan(format!("expected min:max:steps, got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let min = parse_number(parts[0]).ok_or_else(bad)?;
        let max = parse_number(parts[1]).ok_or_else(bad)?;
        let steps = parts[2].trim().parse::<usize>().map_err(|_| bad())?;
        Ok(Self { min, max, steps })
    }
}

/// What to sweep.
#[derive(Clone, Debug, PartialEq)]
pub enum ScanSpec {
    /// Spherical coordinates on the edge `E_01`: `psi` in `[-pi/2, pi/2]`,
    /// `phi` in `[-pi, pi]`.
    Edge { psi: ParamRange, phi: ParamRange },
    /// Product grid over `(phi, psi, theta, phi1, phi2, phi3)`.
    AngleGrid([ParamRange; 6]),
    /// Seeded uniform sample of the tetrahedron angle domain.
    AngleRandom { samples: usize, seed: u64 },
}

const ANGLE_NAMES: [&str; 6] = ["phi", "psi", "theta", "phi1", "phi2", "phi3"];

impl ScanSpec {
    /// The full angle domain with `steps` points per axis (torus angles over
    /// `[0, 2 pi]`).
    pub fn full_angle_grid(steps: usize) -> Self {
        Self::AngleGrid([
            ParamRange::new(-FRAC_PI_2, FRAC_PI_2, steps),
            ParamRange::new(-FRAC_PI_2, FRAC_PI_2, steps),
            ParamRange::new(-FRAC_PI_2, FRAC_PI_2, steps),
            ParamRange::new(0.0, TAU, steps),
            ParamRange::new(0.0, TAU, steps),
            ParamRange::new(0.0, TAU, steps),
        ])
    }

    pub fn check(&self) -> Result<()> {
        match self {
            Self::Edge { psi, phi } => {
                psi.check("psi", -FRAC_PI_2, FRAC_PI_2)?;
                phi.check("phi", -PI, PI)?;
            }
            Self::AngleGrid(ranges) => {
                let bounds = [FRAC_PI_2, PI, PI, 2.0 * TAU, 2.0 * TAU, 2.0 * TAU];
                for ((r, name), b) in ranges.iter().zip(ANGLE_NAMES).zip(bounds) {
                    r.check(name, -b, b)?;
                }
            }
            Self::AngleRandom { samples, .. } => {
                if *samples == 0 {
                    return Err(Error::InvalidScan("sample count must be at least 1".into()));
                }
            }
        }
        if self.len() > MAX_POINTS {
            return Err(Error::InvalidScan(format!("{} points exceed the limit {MAX_POINTS}", self.len())));
        }
        Ok(())
    }

    /// Number of points (saturating).
    pub fn len(&self) -> usize {
        match self {
            Self::Edge { psi, phi } => psi.steps.saturating_mul(phi.steps),
            Self::AngleGrid(ranges) => ranges.iter().fold(1usize, |n, r| n.saturating_mul(r.steps)),
            Self::AngleRandom { samples, .. } => *samples,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The angle tuples of an angle scan in output order. Empty for edge scans.
    pub fn angle_points(&self) -> Result<Vec<AngleParams>> {
        self.check()?;
        match self {
            Self::Edge { .. } => Ok(Vec::new()),
            Self::AngleRandom { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..*samples).map(|_| random_angles(&mut rng)).collect())
            }
            Self::AngleGrid(ranges) => {
                let axes: Vec<Vec<f64>> = ranges.iter().map(ParamRange::points).collect();
                let mut out = Vec::with_capacity(self.len());
                let mut idx = [0usize; 6];
                loop {
                    let v: [f64; 6] = std::array::from_fn(|a| axes[a][idx[a]]);
                    out.push(AngleParams { phi: v[0], psi: v[1], theta: v[2], phi1: v[3], phi2: v[4], phi3: v[5] });
                    // odometer, last axis fastest
                    let mut a = 6;
                    loop {
                        if a == 0 {
                            return Ok(out);
                        }
                        a -= 1;
                        idx[a] += 1;
                        if idx[a] < axes[a].len() {
                            break;
                        }
                        idx[a] = 0;
                    }
                }
            }
        }
    }
}

/// One row of an edge scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeRow {
    pub psi: f64,
    pub phi: f64,
    pub form: TwoForm,
    pub pfaffian: f64,
}

pub fn edge_scan(psi: ParamRange, phi: ParamRange) -> Result<Vec<EdgeRow>> {
    ScanSpec::Edge { psi, phi }.check()?;
    let grid: Vec<(f64, f64)> =
        psi.points().into_iter().flat_map(|s| phi.points().into_iter().map(move |f| (s, f))).collect();
    Ok(grid
        .into_par_iter()
        .map(|(psi, phi)| {
            let form = edge01_from_sphere(psi, phi);
            EdgeRow { psi, phi, form, pfaffian: pfaffian(&form) }
        })
        .collect())
}

/// One row of a Nijenhuis sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub angles: AngleParams,
    pub norm: f64,
}

/// Nijenhuis norm of [`acs_from_angles`] at every point of an angle scan.
pub fn nijenhuis_sweep(g: &LieAlgebra6, spec: &ScanSpec) -> Result<Vec<SweepRow>> {
    if matches!(spec, ScanSpec::Edge { .. }) {
        return Err(Error::InvalidScan("a Nijenhuis sweep needs an angle scan".into()));
    }
    let points = spec.angle_points()?;
    Ok(points
        .into_par_iter()
        .map(|angles| SweepRow { angles, norm: nijenhuis_norm(g, &acs_from_angles(&angles), INTEGRABILITY_TOL).norm })
        .collect())
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("CSV output is ASCII")
}

/// Header `psi,phi,w12,...,w56,pfaffian`.
pub fn edge_csv(rows: &[EdgeRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["psi".to_string(), "phi".to_string()];
    header.extend(PAIRS.iter().map(|(i, j)| format!("w{i}{j}")));
    header.push("pfaffian".into());
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        let mut rec = vec![num(r.psi), num(r.phi)];
        rec.extend(r.form.coefficients().iter().map(|c| num(*c)));
        rec.push(num(r.pfaffian));
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}

/// Header `phi,psi,theta,phi1,phi2,phi3,norm`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = ANGLE_NAMES.to_vec();
    header.push("norm");
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        let mut rec: Vec<String> = r.angles.to_array().iter().map(|x| num(*x)).collect();
        rec.push(num(r.norm));
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}
