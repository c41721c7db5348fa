//! JSON records emitted by the CLI. The schema is documented in
//! `docs/json-schema.md`.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::poly::{DepressedCubic, DepressedQuartic, RealPolynomial, RootSet};
use crate::split::{ReducedCubicCoefficients, SplitResidual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SplitClosedForm,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::SplitClosedForm => "split-closed-form",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialEcho {
    /// Canonical text in the input's variable.
    pub text: String,
    pub variable: char,
    /// Coefficients as parsed, lowest degree first.
    pub coefficients: Vec<f64>,
}

impl PolynomialEcho {
    pub fn new(p: &RealPolynomial, variable: char) -> Self {
        PolynomialEcho {
            text: p.to_text(variable),
            variable,
            coefficients: p.coefficients().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub branch_tag: String,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DepressedRecord {
    pub a: f64,
    pub b: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    pub shift: f64,
}

impl From<DepressedCubic> for DepressedRecord {
    fn from(d: DepressedCubic) -> Self {
        DepressedRecord {
            a: d.a,
            b: d.b,
            c: None,
            shift: d.shift,
        }
    }
}

impl From<DepressedQuartic> for DepressedRecord {
    fn from(d: DepressedQuartic) -> Self {
        DepressedRecord {
            a: d.a,
            b: d.b,
            c: Some(d.c),
            shift: d.shift,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitRecord {
    /// `quadratic-xiy`, `cubic-naive-xiy`, `cubic-omega` or `quartic-xiy`.
    pub system: String,
    pub x: f64,
    pub y: f64,
    pub real_part: f64,
    pub imag_part: f64,
}

impl SplitRecord {
    pub fn new(system: &str, x: f64, y: f64, r: SplitResidual) -> Self {
        SplitRecord {
            system: system.to_string(),
            x,
            y,
            real_part: r.real_part,
            imag_part: r.imag_part,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depressed_coefficients: Option<DepressedRecord>,
    /// `[1, a/2, a^2/16 - c/4, -b^2/64]`, highest degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolvent_coefficients: Option<[f64; 4]>,
    /// One entry per root, in the order of `roots`, evaluated on the
    /// depressed coefficients at the depressed root.
    pub split_residuals: Vec<SplitRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub converged: bool,
    pub iterations_used: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_pair_distance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub polynomial: PolynomialEcho,
    pub method: Method,
    pub residual_tolerance: f64,
    pub roots: Vec<RootRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

/// Whether `|p(z)| <= tolerance * max(1, max|coeff|) * max(1, |z|)^deg`.
pub fn within_tolerance(p: &RealPolynomial, z: Complex, residual: f64, tolerance: f64) -> bool {
    let bound = tolerance * p.scale() * z.abs().max(1.0).powi(p.degree() as i32);
    residual <= bound
}

/// Root records in display order (descending real part, then imaginary part).
pub fn root_records(
    p: &RealPolynomial,
    set: &RootSet,
    tags: &[String],
    tolerance: f64,
) -> (Vec<usize>, Vec<RootRecord>) {
    let order = set.display_order();
    let records = order
        .iter()
        .map(|&i| {
            let z = set.roots[i].without_negative_zero();
            RootRecord {
                re: z.re,
                im: z.im,
                residual: set.residuals[i],
                branch_tag: tags[i].clone(),
                within_tolerance: within_tolerance(p, z, set.residuals[i], tolerance),
            }
        })
        .collect();
    (order, records)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitSystemRecord {
    pub polynomial: PolynomialEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depressed: Option<DepressedRecord>,
    pub x: f64,
    pub y: f64,
    pub systems: Vec<SplitRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub naive_reduction: Option<ReducedCubicCoefficients>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolvent_coefficients: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub degree: usize,
    pub count: usize,
    pub closed_form_median_ns: f64,
    pub closed_form_max_residual: f64,
    pub oracle_median_ns: f64,
    pub oracle_max_residual: f64,
}
