//! Independent iterative root finder used to check the closed-form solvers.
//!
//! Aberth-Ehrlich simultaneous iteration from a fixed circle of starting
//! points, followed by Newton polishing. No randomness: identical input gives
//! bit-identical output.

use serde::Serialize;
use thiserror::Error;

use crate::complex::Complex;
use crate::poly::RealPolynomial;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid oracle configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("a constant polynomial has no roots")]
    Constant,
    #[error("cannot pair {computed} computed roots with {reference} reference roots")]
    LengthMismatch { computed: usize, reference: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    pub max_iterations: usize,
    /// Per-root backward error `|p(z)| / sum |c_i| |z|^i` required to stop.
    pub convergence_tolerance: f64,
    /// Floor, relative to `max(1, |z|)`, of the uncertainty disk used to group
    /// roots into clusters.
    pub cluster_radius_factor: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_iterations: 200,
            convergence_tolerance: 1e-13,
            cluster_radius_factor: 1e-7,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.max_iterations < 1 {
            return Err(OracleError::InvalidConfig(
                "max_iterations must be at least 1",
            ));
        }
        if self.convergence_tolerance.is_nan() || self.convergence_tolerance <= 0.0 {
            return Err(OracleError::InvalidConfig(
                "convergence_tolerance must be positive",
            ));
        }
        if self.cluster_radius_factor.is_nan() || self.cluster_radius_factor <= 0.0 {
            return Err(OracleError::InvalidConfig(
                "cluster_radius_factor must be positive",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub roots: Vec<Complex>,
    pub iterations_used: usize,
    pub converged: bool,
    /// Radius of the cluster each root belongs to; 0 for an isolated root.
    pub cluster_radii: Vec<f64>,
}

const INITIAL_ANGLE: f64 = 0.4;

fn backward_error(p: &RealPolynomial, z: Complex) -> f64 {
    let denom = p.abs_evaluate(z.abs());
    if denom == 0.0 {
        0.0
    } else {
        p.evaluate(z).abs() / denom
    }
}

pub fn find_roots(p: &RealPolynomial, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    cfg.validate()?;
    let n = p.degree();
    if n == 0 {
        return Err(OracleError::Constant);
    }
    let p = p.monic();
    if n == 1 {
        return Ok(OracleResult {
            roots: vec![Complex::real(-p.coeff(0))],
            iterations_used: 0,
            converged: true,
            cluster_radii: vec![0.0],
        });
    }

    let radius = 1.0 + p.max_abs_coefficient();
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + INITIAL_ANGLE;
            Complex::from_polar(radius, theta)
        })
        .collect();

    let mut iterations_used = 0;
    let mut done = vec![false; n];
    while iterations_used < cfg.max_iterations {
        iterations_used += 1;
        let mut all_done = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (v, d) = p.evaluate_with_derivative(z[k]);
            if backward_error(&p, z[k]) <= cfg.convergence_tolerance {
                done[k] = true;
                continue;
            }
            all_done = false;
            if d == Complex::ZERO {
                // Nudge off a critical point deterministically.
                z[k] += Complex::new(1e-8, 1e-8).scale(radius);
                continue;
            }
            let newton = v / d;
            let repulsion = (0..n)
                .filter(|&j| j != k)
                .fold(Complex::ZERO, |acc, j| acc + (z[k] - z[j]).recip());
            let step = newton / (Complex::ONE - newton * repulsion);
            if step.is_finite() {
                // Gauss-Seidel style: later roots see this update immediately.
                z[k] -= step;
                if step.abs() <= f64::EPSILON * z[k].abs() {
                    done[k] = true;
                }
            }
        }
        if all_done {
            break;
        }
    }

    for zk in z.iter_mut() {
        *zk = newton_polish(&p, *zk);
    }
    let converged = z
        .iter()
        .all(|&zk| zk.is_finite() && backward_error(&p, zk) <= cfg.convergence_tolerance);
    let cluster_radii = cluster_radii(&p, &z, cfg.convergence_tolerance, cfg.cluster_radius_factor);
    Ok(OracleResult {
        roots: z,
        iterations_used,
        converged,
        cluster_radii,
    })
}

fn newton_polish(p: &RealPolynomial, mut z: Complex) -> Complex {
    let mut r = p.evaluate(z).abs();
    for _ in 0..2 {
        let (v, d) = p.evaluate_with_derivative(z);
        if d == Complex::ZERO || v == Complex::ZERO {
            break;
        }
        let next = z - v / d;
        let rn = p.evaluate(next).abs();
        if !next.is_finite() || rn >= r {
            break;
        }
        z = next;
        r = rn;
    }
    z
}

/// Groups roots whose uncertainty disks overlap and reports each group's
/// radius (largest distance from the group's centroid).
///
/// A root's disk has radius `n * max(|p(z)|, u sum|c_i||z|^i) / |p'(z)|`,
/// which is guaranteed to contain a true root, floored at
/// `factor * max(1, |z|)`.
/// Roots are grouped when their uncertainty disks overlap. A disk covers every
/// point the root could occupy given the backward error the oracle promises
/// (`backward_error` relative to `sum |c_i| |z|^i`).
fn cluster_radii(
    p: &RealPolynomial,
    roots: &[Complex],
    backward_error: f64,
    factor: f64,
) -> Vec<f64> {
    let n = roots.len();
    let disk: Vec<f64> = roots
        .iter()
        .map(|&z| {
            let (v, d) = p.evaluate_with_derivative(z);
            let promised = backward_error.max(2.0 * f64::EPSILON) * p.abs_evaluate(z.abs());
            let inclusion = n as f64 * v.abs().max(promised) / d.abs();
            inclusion.max(factor * z.abs().max(1.0))
        })
        .collect();

    let mut group: Vec<usize> = (0..n).collect();
    fn find(group: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while group[r] != r {
            r = group[r];
        }
        group[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if roots[i].dist(roots[j]) <= disk[i] + disk[j] {
                let (ri, rj) = (find(&mut group, i), find(&mut group, j));
                if ri != rj {
                    group[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }

    let labels: Vec<usize> = (0..n).map(|i| find(&mut group, i)).collect();
    (0..n)
        .map(|i| {
            let members: Vec<Complex> = (0..n)
                .filter(|&j| labels[j] == labels[i])
                .map(|j| roots[j])
                .collect();
            if members.len() < 2 {
                return 0.0;
            }
            let centroid = members.iter().fold(Complex::ZERO, |a, &m| a + m) / members.len() as f64;
            members.iter().map(|m| m.dist(centroid)).fold(0.0, f64::max)
        })
        .collect()
}

/// One matched pair: index into the computed list, index into the reference
/// list, and their distance.
pub type RootPair = (usize, usize, f64);

/// Above this length [`pair_roots`] switches from exhaustive search to greedy matching.
pub const EXHAUSTIVE_PAIRING_LIMIT: usize = 4;

/// Bijective matching minimizing the largest distance (then the total).
///
/// Pairs are returned ordered by the computed root, lexicographic in
/// `(re, im)`; ties between equally good matchings resolve to the
/// lexicographically first permutation in that order.
pub fn pair_roots(
    computed: &[Complex],
    reference: &[Complex],
) -> Result<Vec<RootPair>, OracleError> {
    if computed.len() != reference.len() {
        return Err(OracleError::LengthMismatch {
            computed: computed.len(),
            reference: reference.len(),
        });
    }
    let lex = |v: &[Complex]| {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&i, &j| {
            v[i].re
                .total_cmp(&v[j].re)
                .then(v[i].im.total_cmp(&v[j].im))
        });
        idx
    };
    let ci = lex(computed);
    let ri = lex(reference);
    if computed.len() <= EXHAUSTIVE_PAIRING_LIMIT {
        Ok(pair_exhaustive(computed, reference, &ci, &ri))
    } else {
        Ok(pair_greedy(computed, reference, &ci, &ri))
    }
}

fn pair_exhaustive(
    computed: &[Complex],
    reference: &[Complex],
    ci: &[usize],
    ri: &[usize],
) -> Vec<RootPair> {
    let n = ci.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<(f64, f64, Vec<usize>)> = None;
    loop {
        let (mut worst, mut total) = (0.0_f64, 0.0_f64);
        for (k, &p) in perm.iter().enumerate() {
            let d = computed[ci[k]].dist(reference[ri[p]]);
            worst = worst.max(d);
            total += d;
        }
        let better = match &best {
            None => true,
            Some((w, t, _)) => worst < *w || (worst == *w && total < *t),
        };
        if better {
            best = Some((worst, total, perm.clone()));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let (_, _, perm) = best.unwrap_or((0.0, 0.0, Vec::new()));
    perm.iter()
        .enumerate()
        .map(|(k, &p)| (ci[k], ri[p], computed[ci[k]].dist(reference[ri[p]])))
        .collect()
}

fn pair_greedy(
    computed: &[Complex],
    reference: &[Complex],
    ci: &[usize],
    ri: &[usize],
) -> Vec<RootPair> {
    let n = ci.len();
    let mut used_c = vec![false; n];
    let mut used_r = vec![false; n];
    let mut pairs = Vec::with_capacity(n);
    for _ in 0..n {
        let mut pick: Option<(usize, usize, f64)> = None;
        for (a, &c) in ci.iter().enumerate() {
            if used_c[a] {
                continue;
            }
            for (b, &r) in ri.iter().enumerate() {
                if used_r[b] {
                    continue;
                }
                let d = computed[c].dist(reference[r]);
                if pick.is_none_or(|(_, _, best)| d < best) {
                    pick = Some((a, b, d));
                }
            }
        }
        let (a, b, d) = pick.expect("unpaired roots remain");
        used_c[a] = true;
        used_r[b] = true;
        pairs.push((a, ci[a], ri[b], d));
    }
    pairs.sort_by_key(|&(a, ..)| a);
    pairs.into_iter().map(|(_, c, r, d)| (c, r, d)).collect()
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Largest distance in an optimal pairing.
pub fn max_pair_distance(computed: &[Complex], reference: &[Complex]) -> Result<f64, OracleError> {
    Ok(pair_roots(computed, reference)?
        .iter()
        .fold(0.0, |m, &(_, _, d)| f64::max(m, d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> RealPolynomial {
        RealPolynomial::new(c.to_vec()).unwrap()
    }

    fn close_to_any(roots: &[Complex], z: Complex, tol: f64) -> bool {
        roots.iter().any(|r| r.dist(z) <= tol)
    }

    #[test]
    fn imaginary_pair() {
        let out = find_roots(&poly(&[1.0, 0.0, 1.0]), &OracleConfig::default()).unwrap();
        assert!(out.converged);
        assert!(close_to_any(&out.roots, Complex::I, 1e-14));
        assert!(close_to_any(&out.roots, -Complex::I, 1e-14));
        assert_eq!(out.cluster_radii, vec![0.0, 0.0]);
    }

    #[test]
    fn factorable_cubic() {
        let out = find_roots(&poly(&[6.0, -7.0, 0.0, 1.0]), &OracleConfig::default()).unwrap();
        assert!(out.converged);
        for r in [1.0, 2.0, -3.0] {
            assert!(
                close_to_any(&out.roots, Complex::real(r), 1e-12),
                "{:?}",
                out.roots
            );
        }
    }

    #[test]
    fn quadruple_root_reports_cluster() {
        let out = find_roots(
            &poly(&[1.0, -4.0, 6.0, -4.0, 1.0]),
            &OracleConfig::default(),
        )
        .unwrap();
        assert_eq!(out.roots.len(), 4);
        for z in &out.roots {
            assert!(z.dist(Complex::ONE) < 1e-3, "{z:?}");
        }
        assert!(out.cluster_radii.iter().all(|&r| r > 0.0));
        for (z, r) in out.roots.iter().zip(&out.cluster_radii) {
            assert!(z.dist(Complex::ONE) <= 10.0 * r);
        }
    }

    #[test]
    fn deterministic() {
        let p = poly(&[0.3, -2.0, 1.7, 4.0, -0.5, 1.0]);
        let a = find_roots(&p, &OracleConfig::default()).unwrap();
        let b = find_roots(&p, &OracleConfig::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn non_convergence_is_reported() {
        let cfg = OracleConfig {
            max_iterations: 1,
            ..OracleConfig::default()
        };
        let out = find_roots(&poly(&[-1.0, 0.0, 0.0, 0.0, 0.0, 1.0]), &cfg).unwrap();
        assert!(!out.converged);
        assert_eq!(out.roots.len(), 5);
        assert_eq!(out.iterations_used, 1);
    }

    #[test]
    fn invalid_config_and_constant() {
        let bad = OracleConfig {
            max_iterations: 0,
            ..OracleConfig::default()
        };
        assert!(matches!(
            find_roots(&poly(&[1.0, 1.0]), &bad),
            Err(OracleError::InvalidConfig(_))
        ));
        let bad = OracleConfig {
            convergence_tolerance: 0.0,
            ..OracleConfig::default()
        };
        assert!(bad.validate().is_err());
        assert_eq!(
            find_roots(&poly(&[2.0]), &OracleConfig::default()),
            Err(OracleError::Constant)
        );
    }

    #[test]
    fn linear() {
        let out = find_roots(&poly(&[3.0, 2.0]), &OracleConfig::default()).unwrap();
        assert_eq!(out.roots, vec![Complex::real(-1.5)]);
    }

    #[test]
    fn pairing_examples() {
        let one = Complex::ONE;
        let two = Complex::real(2.0);
        assert_eq!(max_pair_distance(&[one, two], &[two, one]).unwrap(), 0.0);
        let i = Complex::I;
        assert_eq!(max_pair_distance(&[i, -i], &[-i, i]).unwrap(), 0.0);
        let near = Complex::real(1.0 + 1e-9);
        assert_eq!(max_pair_distance(&[one, near], &[near, one]).unwrap(), 0.0);
    }

    #[test]
    fn pairing_is_bijective_and_ordered() {
        let c = [
            Complex::real(3.0),
            Complex::real(-1.0),
            Complex::new(0.0, 1.0),
        ];
        let r = [
            Complex::new(0.0, 1.1),
            Complex::real(3.1),
            Complex::real(-0.9),
        ];
        let pairs = pair_roots(&c, &r).unwrap();
        assert_eq!(
            pairs.iter().map(|&(a, b, _)| (a, b)).collect::<Vec<_>>(),
            vec![(1, 2), (2, 0), (0, 1)]
        );
    }

    #[test]
    fn pairing_length_mismatch() {
        assert_eq!(
            pair_roots(&[Complex::ONE], &[]),
            Err(OracleError::LengthMismatch {
                computed: 1,
                reference: 0
            })
        );
    }

    #[test]
    fn greedy_pairing_for_long_lists() {
        let c: Vec<Complex> = (0..6).map(|k| Complex::real(k as f64)).collect();
        let r: Vec<Complex> = c.iter().rev().map(|z| *z + 1e-3).collect();
        let pairs = pair_roots(&c, &r).unwrap();
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|&(_, _, d)| d < 2e-3));
        let mut seen: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..6).collect::<Vec<_>>());
    }
}
