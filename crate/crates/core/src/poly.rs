//! Real polynomials, evaluation, and the depression transforms that remove
//! the second-highest term of a cubic or quartic.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::Complex;
use crate::dd::Dd;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no roots to solve for")]
    ZeroPolynomial,
    #[error("coefficient of degree {index} is not finite")]
    NonFinite { index: usize },
    #[error("expected a polynomial of degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
}

/// A polynomial with real coefficients stored lowest degree first.
///
/// Trailing zero coefficients are trimmed with an exact comparison, so the
/// leading coefficient is always nonzero. A nonzero constant is a valid
/// (degree 0) value; solvers reject it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct RealPolynomial {
    coefficients: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self, PolyError> {
        if let Some(index) = coefficients.iter().position(|c| !c.is_finite()) {
            return Err(PolyError::NonFinite { index });
        }
        while coefficients.last() == Some(&0.0) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(RealPolynomial { coefficients })
    }

    /// Builds the monic polynomial `z^n + c[n-1] z^(n-1) + ... + c[0]`.
    pub fn monic_from_lower(lower: &[f64]) -> Result<Self, PolyError> {
        let mut c = lower.to_vec();
        c.push(1.0);
        RealPolynomial::new(c)
    }

    /// Expands `prod (z - r)` for real roots `r`.
    pub fn from_real_roots(roots: &[f64]) -> Result<Self, PolyError> {
        let mut c = vec![1.0];
        for &r in roots {
            let mut next = vec![0.0; c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i + 1] += ci;
                next[i] -= r * ci;
            }
            c = next;
        }
        RealPolynomial::new(c)
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn leading(&self) -> f64 {
        self.coefficients[self.degree()]
    }

    pub fn coeff(&self, power: usize) -> f64 {
        self.coefficients.get(power).copied().unwrap_or(0.0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1.0
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> RealPolynomial {
        if self.is_monic() {
            return self.clone();
        }
        let lead = self.leading();
        let mut c: Vec<f64> = self.coefficients.iter().map(|x| x / lead).collect();
        *c.last_mut().unwrap() = 1.0;
        RealPolynomial { coefficients: c }
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.coefficients
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// `max(1, max |coefficient|)`, the reference magnitude for tolerances.
    pub fn scale(&self) -> f64 {
        self.max_abs_coefficient().max(1.0)
    }

    pub fn evaluate(&self, z: Complex) -> Complex {
        evaluate(self, z)
    }

    /// Value and first derivative at `z` in a single Horner pass.
    pub fn evaluate_with_derivative(&self, z: Complex) -> (Complex, Complex) {
        let mut p = Complex::real(self.leading());
        let mut dp = Complex::ZERO;
        for &c in self.coefficients.iter().rev().skip(1) {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `sum |c_i| |z|^i`, the magnitude scale of rounding error in `evaluate`.
    pub fn abs_evaluate(&self, r: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.abs())
    }

    /// Formal derivative; `None` for a constant.
    pub fn derivative(&self) -> Option<RealPolynomial> {
        derivative(self)
    }
}

impl TryFrom<Vec<f64>> for RealPolynomial {
    type Error = PolyError;
    fn try_from(v: Vec<f64>) -> Result<Self, PolyError> {
        RealPolynomial::new(v)
    }
}

impl From<RealPolynomial> for Vec<f64> {
    fn from(p: RealPolynomial) -> Vec<f64> {
        p.coefficients
    }
}

impl RealPolynomial {
    /// Canonical text form in the given variable, parseable by
    /// [`crate::parser::parse_polynomial`]. Coefficients use Rust's shortest
    /// round-trip float format.
    pub fn to_text(&self, var: char) -> String {
        let mut out = String::new();
        for (power, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c < 0.0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0.0 { " - " } else { " + " });
            }
            if power == 0 || mag != 1.0 {
                out.push_str(&plain_decimal(mag));
            }
            match power {
                0 => {}
                1 => out.push(var),
                _ => out.push_str(&format!("{var}^{power}")),
            }
        }
        out
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('z'))
    }
}

/// Decimal text of a finite nonnegative float without exponent notation.
fn plain_decimal(x: f64) -> String {
    let s = format!("{x}");
    if s.contains('e') || s.contains('E') {
        // Display for f64 never uses exponents, but keep the guarantee local.
        format!("{x:.17}")
    } else {
        s
    }
}

/// Horner evaluation of `p` at a complex point.
pub fn evaluate(p: &RealPolynomial, z: Complex) -> Complex {
    let mut acc = Complex::real(p.leading());
    for &c in p.coefficients.iter().rev().skip(1) {
        acc = acc * z + c;
    }
    acc
}

pub fn derivative(p: &RealPolynomial) -> Option<RealPolynomial> {
    if p.degree() == 0 {
        return None;
    }
    let c = p
        .coefficients
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect();
    Some(RealPolynomial { coefficients: c })
}

/// `z^3 + a z + b`, with `shift` such that `z = w + shift` maps roots of the
/// source polynomial `w` onto roots of this one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DepressedCubic {
    pub a: f64,
    pub b: f64,
    pub shift: f64,
    /// Rounding errors of `a`, `b` and `shift` when produced by
    /// [`depress_cubic`]; only [`DepressedCubic::expand`] reads them.
    #[serde(default)]
    low_order: [f64; 3],
}

impl DepressedCubic {
    pub const fn new(a: f64, b: f64) -> Self {
        DepressedCubic {
            a,
            b,
            shift: 0.0,
            low_order: [0.0; 3],
        }
    }

    pub const fn with_shift(self, shift: f64) -> Self {
        DepressedCubic {
            shift,
            low_order: [self.low_order[0], self.low_order[1], 0.0],
            ..self
        }
    }

    pub fn scale(&self) -> f64 {
        1.0_f64.max(self.a.abs()).max(self.b.abs())
    }

    pub fn polynomial(&self) -> RealPolynomial {
        RealPolynomial {
            coefficients: vec![self.b, self.a, 0.0, 1.0],
        }
    }

    /// Undoes the depression: the monic cubic in `w` whose roots are the
    /// roots of this cubic minus `shift`.
    pub fn expand(&self) -> RealPolynomial {
        let [a_low, b_low, shift_low] = self.low_order;
        let s = Dd::from_parts(self.shift, shift_low);
        let a = Dd::from_parts(self.a, a_low);
        let s2 = s * s;
        let alpha = s.scale(3.0);
        let beta = a + s2.scale(3.0);
        let gamma = Dd::from_parts(self.b, b_low) + s2 * s + a * s;
        RealPolynomial {
            coefficients: vec![gamma.to_f64(), beta.to_f64(), alpha.to_f64(), 1.0],
        }
    }
}

/// `z^4 + a z^2 + b z + c`, with `shift` as in [`DepressedCubic`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DepressedQuartic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub shift: f64,
    /// Rounding errors of `a`, `b` and `c` when produced by [`depress_quartic`].
    #[serde(default)]
    low_order: [f64; 3],
}

impl DepressedQuartic {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        DepressedQuartic {
            a,
            b,
            c,
            shift: 0.0,
            low_order: [0.0; 3],
        }
    }

    pub const fn with_shift(self, shift: f64) -> Self {
        DepressedQuartic { shift, ..self }
    }

    pub fn scale(&self) -> f64 {
        1.0_f64
            .max(self.a.abs())
            .max(self.b.abs())
            .max(self.c.abs())
    }

    pub fn polynomial(&self) -> RealPolynomial {
        RealPolynomial {
            coefficients: vec![self.c, self.b, self.a, 0.0, 1.0],
        }
    }

    pub fn expand(&self) -> RealPolynomial {
        let [a_low, b_low, c_low] = self.low_order;
        let s = Dd::from(self.shift);
        let a = Dd::from_parts(self.a, a_low);
        let b = Dd::from_parts(self.b, b_low);
        let s2 = s * s;
        let s3 = s2 * s;
        let alpha = s.scale(4.0);
        let beta = s2.scale(6.0) + a;
        let gamma = s3.scale(4.0) + (a * s).scale(2.0) + b;
        let delta = s2 * s2 + a * s2 + b * s + Dd::from_parts(self.c, c_low);
        RealPolynomial {
            coefficients: vec![
                delta.to_f64(),
                gamma.to_f64(),
                beta.to_f64(),
                alpha.to_f64(),
                1.0,
            ],
        }
    }
}

/// Removes the `z^2` term of a cubic via `w = z - alpha/3`.
pub fn depress_cubic(p: &RealPolynomial) -> Result<DepressedCubic, PolyError> {
    if p.degree() != 3 {
        return Err(PolyError::WrongDegree {
            expected: 3,
            found: p.degree(),
        });
    }
    let m = p.monic();
    let (alpha, beta, gamma) = (Dd::from(m.coeff(2)), Dd::from(m.coeff(1)), m.coeff(0));
    let alpha2 = alpha * alpha;
    // a = beta - alpha^2/3, b = 2 alpha^3/27 - alpha beta/3 + gamma
    let a = beta - alpha2.div_f64(3.0);
    let b =
        (alpha2 * alpha).scale(2.0).div_f64(27.0) - (alpha * beta).div_f64(3.0) + Dd::from(gamma);
    let (a, a_low) = a.split();
    let (b, b_low) = b.split();
    let (shift, shift_low) = alpha.div_f64(3.0).split();
    Ok(DepressedCubic {
        a,
        b,
        shift,
        low_order: [a_low, b_low, shift_low],
    })
}

/// Removes the `z^3` term of a quartic via `w = z - alpha/4`.
pub fn depress_quartic(p: &RealPolynomial) -> Result<DepressedQuartic, PolyError> {
    if p.degree() != 4 {
        return Err(PolyError::WrongDegree {
            expected: 4,
            found: p.degree(),
        });
    }
    let m = p.monic();
    let alpha = Dd::from(m.coeff(3));
    let beta = Dd::from(m.coeff(2));
    let gamma = Dd::from(m.coeff(1));
    let delta = Dd::from(m.coeff(0));
    let alpha2 = alpha * alpha;
    // a = beta - 3 alpha^2/8
    let a = beta - alpha2.scale(3.0).div_f64(8.0);
    // b = alpha^3/8 - alpha beta/2 + gamma
    let b = (alpha2 * alpha).div_f64(8.0) - (alpha * beta).div_f64(2.0) + gamma;
    // c = -3 alpha^4/256 + alpha^2 beta/16 - alpha gamma/4 + delta
    let c = (alpha2 * beta).div_f64(16.0)
        - (alpha2 * alpha2).scale(3.0).div_f64(256.0)
        - (alpha * gamma).div_f64(4.0)
        + delta;
    let (a, a_low) = a.split();
    let (b, b_low) = b.split();
    let (c, c_low) = c.split();
    Ok(DepressedQuartic {
        a,
        b,
        c,
        // alpha/4 is exact.
        shift: m.coeff(3) / 4.0,
        low_order: [a_low, b_low, c_low],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which branch of a split system produced a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchTag {
    /// Degree one: `-c0/c1`.
    Linear,
    /// The discarded `y = 0` factor of a split system's second equation.
    TrivialImaginary(Sign),
    /// Quadratic `x = -a/2`, `y = ±sqrt(b - a^2/4)`.
    RealPart(Sign),
    /// Cubic ansatz `z = x + omega y`: `cube_root` indexes the three cube roots
    /// of `x^3`, `radical` the sign chosen in `x^3 = b/2 ± sqrt(...)`.
    Omega { cube_root: u8, radical: Sign },
    /// Cubic with `a = 0`: the cube roots of `-b` taken directly.
    OmegaBypass { cube_root: u8 },
    /// Cubic with `a = b = 0`.
    TripleZero,
    /// Quartic: root index of the resolvent in `x^2`, sign of `x`, sign of `y`.
    Resolvent { root: u8, x: Sign, y: Sign },
    /// Quartic with `b = 0`: `z^2 = u` with `u^2 + a u + c = 0`.
    Biquadratic { u: Sign, sqrt: Sign },
}

impl fmt::Display for BranchTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BranchTag::Linear => f.write_str("linear"),
            BranchTag::TrivialImaginary(s) => write!(f, "trivial-imaginary-branch{}", s.symbol()),
            BranchTag::RealPart(s) => write!(f, "real-part-branch{}", s.symbol()),
            BranchTag::Omega { cube_root, radical } => {
                write!(f, "omega-branch-{cube_root}{}", radical.symbol())
            }
            BranchTag::OmegaBypass { cube_root } => write!(f, "omega-bypass-{cube_root}"),
            BranchTag::TripleZero => f.write_str("triple-zero"),
            BranchTag::Resolvent { root, x, y } => {
                write!(f, "resolvent-root-{root}-x{}-y{}", x.symbol(), y.symbol())
            }
            BranchTag::Biquadratic { u, sqrt } => {
                write!(f, "biquadratic-u{}-sqrt{}", u.symbol(), sqrt.symbol())
            }
        }
    }
}

impl Serialize for BranchTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Roots of one polynomial with their residuals and provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    pub roots: Vec<Complex>,
    pub residuals: Vec<f64>,
    pub branch_tags: Vec<BranchTag>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Replaces every residual by `|p(root)|`.
    pub fn recompute_residuals(&mut self, p: &RealPolynomial) {
        self.residuals = self.roots.iter().map(|&z| evaluate(p, z).abs()).collect();
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0_f64, |m, &r| m.max(r))
    }

    pub fn sum(&self) -> Complex {
        self.roots.iter().fold(Complex::ZERO, |acc, &z| acc + z)
    }

    pub fn product(&self) -> Complex {
        self.roots.iter().fold(Complex::ONE, |acc, &z| acc * z)
    }

    /// Indices ordered by descending real part, then descending imaginary part.
    pub fn display_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.roots.len()).collect();
        idx.sort_by(|&i, &j| {
            let (a, b) = (self.roots[i], self.roots[j]);
            b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im))
        });
        idx
    }
}

/// Maps roots of a depressed polynomial back to the source variable,
/// `w = z - shift`. Residuals are carried over unchanged.
pub fn undepress(roots: RootSet, shift: f64) -> RootSet {
    if shift == 0.0 {
        return roots;
    }
    RootSet {
        roots: roots.roots.iter().map(|&z| z - shift).collect(),
        ..roots
    }
}
