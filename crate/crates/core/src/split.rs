//! Closed-form solvers for real polynomials of degree 2 to 4 obtained by
//! writing the unknown as `x + omega y` for a root of unity `omega`,
//! expanding, and solving the real and imaginary parts separately.
//!
//! Every separated system is also exposed as a residual function so the
//! intermediate algebra can be checked on its own:
//!
//! | degree | ansatz           | system                         |
//! |--------|------------------|--------------------------------|
//! | 2      | `z = x + i y`    | [`quadratic_split_residual`]   |
//! | 3      | `z = x + i y`    | [`cubic_naive_split_residual`] |
//! | 3      | `z = x + omega y`| [`cubic_omega_split_residual`] |
//! | 4      | `z = x + i y`    | [`quartic_split_residual`]     |
//!
//! The `x + i y` split of a cubic eliminates to another cubic
//! ([`naive_cubic_reduction`]); with `omega = (1 + i sqrt 3)/2` it eliminates
//! to a quadratic in `x^3`, which is what [`solve_depressed_cubic`] uses.
//! The quartic split eliminates to a cubic in `x^2` ([`quartic_resolvent`]).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::Complex;
use crate::poly::{
    depress_cubic, depress_quartic, undepress, BranchTag, DepressedCubic, DepressedQuartic,
    RealPolynomial, RootSet, Sign,
};

const HALF_SQRT_3: f64 = 0.866_025_403_784_438_6;

/// Roots with `|im| <= SNAP_RELATIVE * max(1, |re|)` are moved onto the real axis.
pub const SNAP_RELATIVE: f64 = 1e-8;
/// Resolvent roots above `-RESOLVENT_NEGATIVE_TOLERANCE` are usable (clamped to 0).
pub const RESOLVENT_NEGATIVE_TOLERANCE: f64 = 1e-10;
/// A depressed quartic with `|b| <= BIQUADRATIC_RELATIVE * scale` is solved as biquadratic.
pub const BIQUADRATIC_RELATIVE: f64 = 1e-14;
/// Newton polishing is attempted only above `POLISH_RELATIVE * scale`.
pub const POLISH_RELATIVE: f64 = 1e-12;
pub const MAX_POLISH_STEPS: usize = 2;
/// Below this magnitude `x^3` is treated as zero in the cubic ansatz.
pub const CUBE_UNDERFLOW_GUARD: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(
        "degree {degree} is not supported: separating real and imaginary parts only \
         reduces polynomials of degree 2 to 4, and from degree 5 on the split systems \
         are harder than the original equation"
    )]
    UnsupportedDegree { degree: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("coefficients must be finite")]
    NonFinite,
}

/// The cubic ansatz constant `omega = (1 + i sqrt 3)/2`, a cube root of -1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitAnsatz {
    pub omega: Complex,
}

impl SplitAnsatz {
    pub const OMEGA: SplitAnsatz = SplitAnsatz {
        omega: Complex::new(0.5, HALF_SQRT_3),
    };

    /// `1 - omega`, which equals `conj(omega)` exactly in this representation.
    pub fn one_minus_omega(&self) -> Complex {
        Complex::ONE - self.omega
    }

    /// Writes `z` as `x + omega y` with real `x`, `y`.
    pub fn decompose(&self, z: Complex) -> (f64, f64) {
        let y = z.im / self.omega.im;
        (z.re - self.omega.re * y, y)
    }

    pub fn compose(&self, x: f64, y: f64) -> Complex {
        self.omega.scale(y) + x
    }
}

impl Default for SplitAnsatz {
    fn default() -> Self {
        SplitAnsatz::OMEGA
    }
}

/// Left-hand sides of a separated system evaluated at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitResidual {
    pub real_part: f64,
    pub imag_part: f64,
}

impl SplitResidual {
    pub fn max_abs(&self) -> f64 {
        self.real_part.abs().max(self.imag_part.abs())
    }
}

/// Coefficients of `c3 x^3 + c1 x + c0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedCubicCoefficients {
    pub c3: f64,
    pub c1: f64,
    pub c0: f64,
}

/// `z^2 + a z + b = 0` split with `z = x + i y`:
/// `(x^2 - y^2 + a x + b, 2 x y + a y)`.
pub fn quadratic_split_residual(a: f64, b: f64, x: f64, y: f64) -> SplitResidual {
    SplitResidual {
        real_part: x * x - y * y + a * x + b,
        imag_part: 2.0 * x * y + a * y,
    }
}

/// `z^3 + a z + b = 0` split with `z = x + i y`, second member in the
/// published sign convention `y^3 - 3 x^2 y - a y`.
///
/// That member is the negated imaginary part of `z^3 + a z + b`; both vanish
/// on the same points.
pub fn cubic_naive_split_residual(a: f64, b: f64, x: f64, y: f64) -> SplitResidual {
    SplitResidual {
        real_part: x * x * x - 3.0 * x * y * y + a * x + b,
        imag_part: y * y * y - 3.0 * x * x * y - a * y,
    }
}

/// Eliminating `y` from the `x + i y` cubic split: `y^2 = 3x^2 + a`
/// substituted back gives `8 x^3 + 2 a x - b = 0`, still a cubic.
pub fn naive_cubic_reduction(a: f64, b: f64) -> ReducedCubicCoefficients {
    ReducedCubicCoefficients {
        c3: 8.0,
        c1: 2.0 * a,
        c0: -b,
    }
}

/// `z^3 + a z + b = 0` split with `z = x + omega y`.
///
/// The second member is `3 x y^2 + 3 x^2 y + a y`; the true imaginary part is
/// that times `sqrt(3)/2`.
pub fn cubic_omega_split_residual(a: f64, b: f64, x: f64, y: f64) -> SplitResidual {
    let (x2, y2) = (x * x, y * y);
    SplitResidual {
        real_part: x2 * x - y2 * y + 1.5 * x2 * y - 1.5 * x * y2 + 0.5 * a * y + a * x + b,
        imag_part: 3.0 * x * y2 + 3.0 * x2 * y + a * y,
    }
}

/// `z^4 + a z^2 + b z + c = 0` split with `z = x + i y`.
pub fn quartic_split_residual(a: f64, b: f64, c: f64, x: f64, y: f64) -> SplitResidual {
    let (x2, y2) = (x * x, y * y);
    SplitResidual {
        real_part: x2 * x2 + y2 * y2 - 6.0 * x2 * y2 + a * x2 - a * y2 + b * x + c,
        imag_part: 4.0 * x2 * x * y - 4.0 * x * y2 * y + 2.0 * a * x * y + b * y,
    }
}

/// Cubic in `t = x^2` left after eliminating `y^2 = x^2 + b/(4x) + a/2`
/// from the quartic split: `t^3 + (a/2) t^2 + (a^2/16 - c/4) t - b^2/64`.
///
/// Coefficients are returned highest degree first.
pub fn quartic_resolvent(dq: &DepressedQuartic) -> [f64; 4] {
    [
        1.0,
        0.5 * dq.a,
        dq.a * dq.a / 16.0 - dq.c / 4.0,
        -dq.b * dq.b / 64.0,
    ]
}

fn snap_to_real(z: Complex) -> Complex {
    if z.im != 0.0 && z.im.abs() <= SNAP_RELATIVE * z.re.abs().max(1.0) {
        Complex::real(z.re)
    } else {
        z
    }
}

/// Up to [`MAX_POLISH_STEPS`] Newton steps on `roots[i]`, each kept only if it
/// lowers `|p|` and stays closer to its start than to any other root.
fn polish(p: &RealPolynomial, roots: &mut [Complex]) {
    let threshold = POLISH_RELATIVE * p.scale();
    for i in 0..roots.len() {
        let mut z = roots[i];
        let mut r = p.evaluate(z).abs();
        if r <= threshold {
            continue;
        }
        let guard = roots
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &w)| 0.5 * z.dist(w))
            .fold(f64::INFINITY, f64::min);
        for _ in 0..MAX_POLISH_STEPS {
            let (v, d) = p.evaluate_with_derivative(z);
            if d == Complex::ZERO {
                break;
            }
            let next = z - v / d;
            let rn = p.evaluate(next).abs();
            if !next.is_finite() || rn >= r || next.dist(roots[i]) > guard {
                break;
            }
            z = next;
            r = rn;
            if r <= threshold {
                break;
            }
        }
        roots[i] = z;
    }
}

fn finish(p: &RealPolynomial, roots: Vec<Complex>, branch_tags: Vec<BranchTag>) -> RootSet {
    let mut roots: Vec<Complex> = roots.into_iter().map(snap_to_real).collect();
    polish(p, &mut roots);
    let mut set = RootSet {
        roots,
        residuals: Vec::new(),
        branch_tags,
    };
    set.recompute_residuals(p);
    set
}

fn check_finite(values: &[f64]) -> Result<(), SolveError> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(SolveError::NonFinite)
    }
}

/// Roots of `z^2 + a z + b`.
///
/// The second split equation `y (2x + a) = 0` has two branches: `y = 0`
/// (two real roots) and `x = -a/2` (a conjugate pair with
/// `y = ±sqrt(b - a^2/4)`).
pub fn solve_quadratic(a: f64, b: f64) -> Result<RootSet, SolveError> {
    check_finite(&[a, b])?;
    let half = 0.5 * a;
    let disc = half * half - b;
    let (roots, tags) = if disc >= 0.0 {
        // y = 0 branch. Pick the sign that avoids cancellation, then use
        // the product of roots for the other one.
        let q = -(half + disc.sqrt().copysign(half));
        let other = if q == 0.0 { 0.0 } else { b / q };
        (
            vec![Complex::real(q), Complex::real(other)],
            vec![
                BranchTag::TrivialImaginary(Sign::Plus),
                BranchTag::TrivialImaginary(Sign::Minus),
            ],
        )
    } else {
        let y = (-disc).sqrt();
        (
            vec![Complex::new(-half, y), Complex::new(-half, -y)],
            vec![
                BranchTag::RealPart(Sign::Plus),
                BranchTag::RealPart(Sign::Minus),
            ],
        )
    };
    let p = RealPolynomial::new(vec![b, a, 1.0]).expect("monic");
    Ok(finish(&p, roots, tags))
}

const CUBE_ROOTS_OF_UNITY: [Complex; 3] = [
    Complex::ONE,
    Complex::new(-0.5, HALF_SQRT_3),
    Complex::new(-0.5, -HALF_SQRT_3),
];

/// Roots of `z^3 + a z + b` (before undoing any shift).
///
/// With `z = x + omega y` the imaginary split gives `y = -x - a/(3x)`, and the
/// real split becomes `x^6 - b x^3 - a^3/27 = 0`, a quadratic in `x^3`. One
/// value of `x^3` and its three cube roots `x_k` give all three roots as
/// `z_k = (1 - omega) x_k - omega a / (3 x_k)`.
pub fn solve_depressed_cubic(dc: &DepressedCubic) -> RootSet {
    let (a, b) = (dc.a, dc.b);
    let p = dc.polynomial();
    if !a.is_finite() || !b.is_finite() {
        // Unreachable through the public constructors; keep the contract total.
        return finish(&p, vec![Complex::ZERO; 3], vec![BranchTag::TripleZero; 3]);
    }
    if a == 0.0 && b == 0.0 {
        return finish(&p, vec![Complex::ZERO; 3], vec![BranchTag::TripleZero; 3]);
    }

    let ansatz = SplitAnsatz::OMEGA;
    let half_b = 0.5 * b;
    let radicand = Complex::real(half_b * half_b + a * a * a / 27.0).sqrt();
    let plus = radicand + half_b;
    let minus = Complex::real(half_b) - radicand;
    // Both signs lead to the same three roots. The `+` sign is the default;
    // switch when it is the smaller one, since the `-a/(3x)` term then divides
    // by a value that lost digits to cancellation (or is zero).
    let (cube, radical) = if plus.abs() >= minus.abs() {
        (plus, Sign::Plus)
    } else {
        (minus, Sign::Minus)
    };

    if a == 0.0 || cube.abs() < CUBE_UNDERFLOW_GUARD {
        // x^3 in {b, 0}: the ansatz divides by x, so take the cube roots of -b.
        let r = (-b).cbrt();
        let roots = CUBE_ROOTS_OF_UNITY.iter().map(|&u| u.scale(r)).collect();
        let tags = (0..3)
            .map(|k| BranchTag::OmegaBypass { cube_root: k })
            .collect();
        return finish(&p, roots, tags);
    }

    let x0 = cube.cbrt();
    let one_minus_omega = ansatz.one_minus_omega();
    let mut roots = Vec::with_capacity(3);
    let mut tags = Vec::with_capacity(3);
    for (k, &unit) in CUBE_ROOTS_OF_UNITY.iter().enumerate() {
        let x = x0 * unit;
        roots.push(one_minus_omega * x - ansatz.omega * (a / 3.0) / x);
        tags.push(BranchTag::Omega {
            cube_root: k as u8,
            radical,
        });
    }
    finish(&p, roots, tags)
}

/// Roots of `z^4 + a z^2 + b z + c` (before undoing any shift).
///
/// The imaginary split factors as `y (4x^3 - 4x y^2 + 2a x + b) = 0`; the
/// non-trivial factor gives `y^2 = x^2 + b/(4x) + a/2`, and substituting into
/// the real split leaves a cubic in `t = x^2` ([`quartic_resolvent`]). Each
/// usable resolvent root yields four candidates `±sqrt(t) ± i y`; the
/// candidate set with the smallest residual is kept.
pub fn solve_depressed_quartic(dq: &DepressedQuartic) -> RootSet {
    let p = dq.polynomial();
    let scale = dq.scale();

    if dq.b.abs() <= BIQUADRATIC_RELATIVE * scale {
        return solve_biquadratic(dq, &p);
    }

    let [_, r2, r1, r0] = quartic_resolvent(dq);
    let resolvent = RealPolynomial::new(vec![r0, r1, r2, 1.0]).expect("monic resolvent");
    let t_roots = solve_cubic_polynomial(&resolvent);

    let mut usable: Vec<(usize, f64)> = t_roots
        .roots
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_real() && t.re >= -RESOLVENT_NEGATIVE_TOLERANCE)
        .map(|(j, t)| (j, t.re.max(0.0)))
        .collect();
    if usable.iter().all(|&(_, t)| t == 0.0) {
        // The product of the resolvent roots is b^2/64 > 0, so a positive
        // root exists; recover it if snapping left it slightly complex.
        if let Some((j, t)) = t_roots
            .roots
            .iter()
            .enumerate()
            .filter(|(_, t)| t.re > 0.0)
            .min_by(|(_, s), (_, t)| s.im.abs().total_cmp(&t.im.abs()))
        {
            usable.push((j, t.re));
        }
    }

    let mut best: Option<(f64, Vec<Complex>, Vec<BranchTag>)> = None;
    for (j, t) in usable {
        let Some((roots, tags)) = quartic_candidates(dq, j as u8, t) else {
            continue;
        };
        let score = roots
            .iter()
            .map(|&z| p.evaluate(z).abs() / z.abs().max(1.0).powi(4))
            .fold(0.0_f64, f64::max);
        if best.as_ref().is_none_or(|(s, _, _)| score < *s) {
            best = Some((score, roots, tags));
        }
    }
    match best {
        Some((_, roots, tags)) => finish(&p, roots, tags),
        None => solve_biquadratic(dq, &p),
    }
}

fn quartic_candidates(
    dq: &DepressedQuartic,
    resolvent_root: u8,
    t: f64,
) -> Option<(Vec<Complex>, Vec<BranchTag>)> {
    let sqrt_t = t.sqrt();
    if sqrt_t == 0.0 {
        return None;
    }
    let mut roots = Vec::with_capacity(4);
    let mut tags = Vec::with_capacity(4);
    for x_sign in [Sign::Plus, Sign::Minus] {
        let x = x_sign.as_f64() * sqrt_t;
        let y_sq = t + dq.b / (4.0 * x) + 0.5 * dq.a;
        let y = Complex::real(y_sq).sqrt();
        for y_sign in [Sign::Plus, Sign::Minus] {
            // z = x + i y; an imaginary y (y_sq < 0) gives a real root.
            roots.push(Complex::I * y.scale(y_sign.as_f64()) + x);
            tags.push(BranchTag::Resolvent {
                root: resolvent_root,
                x: x_sign,
                y: y_sign,
            });
        }
    }
    Some((roots, tags))
}

/// `b = 0`: `z^2 = u` with `u^2 + a u + c = 0`.
fn solve_biquadratic(dq: &DepressedQuartic, p: &RealPolynomial) -> RootSet {
    let us = solve_quadratic(dq.a, dq.c).expect("finite coefficients");
    let mut roots = Vec::with_capacity(4);
    let mut tags = Vec::with_capacity(4);
    for (u, u_sign) in us.roots.iter().zip([Sign::Plus, Sign::Minus]) {
        let s = u.sqrt();
        for sqrt_sign in [Sign::Plus, Sign::Minus] {
            roots.push(s.scale(sqrt_sign.as_f64()));
            tags.push(BranchTag::Biquadratic {
                u: u_sign,
                sqrt: sqrt_sign,
            });
        }
    }
    finish(p, roots, tags)
}

fn solve_cubic_polynomial(p: &RealPolynomial) -> RootSet {
    let dc = depress_cubic(p).expect("degree 3");
    let mut set = undepress(solve_depressed_cubic(&dc), dc.shift);
    let monic = p.monic();
    polish(&monic, &mut set.roots);
    set.recompute_residuals(p);
    set
}

fn solve_quartic_polynomial(p: &RealPolynomial) -> RootSet {
    let dq = depress_quartic(p).expect("degree 4");
    let mut set = undepress(solve_depressed_quartic(&dq), dq.shift);
    let monic = p.monic();
    polish(&monic, &mut set.roots);
    set.recompute_residuals(p);
    set
}

/// Roots of `p` for degree 1 to 4; residuals are `|p(root)|` for `p` as given.
pub fn solve(p: &RealPolynomial) -> Result<RootSet, SolveError> {
    match p.degree() {
        0 => Err(SolveError::InvalidInput(
            "a nonzero constant has no roots".to_string(),
        )),
        1 => {
            let root = Complex::real(-p.coeff(0) / p.coeff(1));
            let mut set = RootSet {
                roots: vec![root],
                residuals: Vec::new(),
                branch_tags: vec![BranchTag::Linear],
            };
            set.recompute_residuals(p);
            Ok(set)
        }
        2 => {
            let m = p.monic();
            let mut set = solve_quadratic(m.coeff(1), m.coeff(0))?;
            set.recompute_residuals(p);
            Ok(set)
        }
        3 => Ok(solve_cubic_polynomial(p)),
        4 => Ok(solve_quartic_polynomial(p)),
        degree => Err(SolveError::UnsupportedDegree { degree }),
    }
}
