use proptest::prelude::*;
use splitroots::{find_roots, pair_roots, Complex, OracleConfig, RealPolynomial};

/// Roots (real or conjugate pairs) of a real polynomial of degree 2..=6 with
/// pairwise distance at least 0.1.
fn separated_roots() -> impl Strategy<Value = Vec<Complex>> {
    (2usize..=6)
        .prop_flat_map(|degree| {
            let pairs = 0..=degree / 2;
            (Just(degree), pairs)
        })
        .prop_flat_map(|(degree, pairs)| {
            let reals = degree - 2 * pairs;
            (
                prop::collection::vec(-4.0f64..4.0, reals),
                prop::collection::vec((-4.0f64..4.0, 0.1f64..4.0), pairs),
            )
        })
        .prop_map(|(reals, pairs)| {
            let mut roots: Vec<Complex> = reals.into_iter().map(Complex::real).collect();
            for (re, im) in pairs {
                roots.push(Complex::new(re, im));
                roots.push(Complex::new(re, -im));
            }
            roots
        })
        .prop_filter("roots must be separated", |roots| {
            roots
                .iter()
                .enumerate()
                .all(|(i, a)| roots[i + 1..].iter().all(|b| a.dist(*b) >= 0.1))
        })
}

/// Coefficients of the product of `(z - r)` over `roots`, lowest degree first.
fn expand(roots: &[Complex]) -> Vec<Complex> {
    let mut c = vec![Complex::ONE];
    for &r in roots {
        let mut next = vec![Complex::ZERO; c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= ci * r;
        }
        c = next;
    }
    c
}

fn polynomial(roots: &[Complex]) -> RealPolynomial {
    RealPolynomial::new(expand(roots).iter().map(|c| c.re).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn self_consistent_and_deterministic(roots in separated_roots()) {
        let p = polynomial(&roots);
        let cfg = OracleConfig::default();
        let first = find_roots(&p, &cfg).unwrap();
        prop_assert!(first.converged);
        for &z in &first.roots {
            prop_assert!(p.evaluate(z).abs() <= 1e-11 * p.scale());
        }
        prop_assert_eq!(find_roots(&p, &cfg).unwrap(), first);
    }

    #[test]
    fn reconstructs_coefficients(roots in separated_roots()) {
        let p = polynomial(&roots);
        let found = find_roots(&p, &OracleConfig::default()).unwrap();
        let rebuilt = expand(&found.roots);
        for (k, c) in rebuilt.iter().enumerate() {
            prop_assert!(c.dist(Complex::real(p.coeff(k))) <= 1e-8 * p.max_abs_coefficient());
        }
        for (_, _, d) in pair_roots(&found.roots, &roots).unwrap() {
            prop_assert!(d <= 1e-8);
        }
    }

    #[test]
    fn root_count_is_degree(lower in prop::collection::vec(-1e3f64..1e3, 1..=8), iterations in 1usize..5) {
        let p = RealPolynomial::monic_from_lower(&lower).unwrap();
        let cfg = OracleConfig { max_iterations: iterations, ..OracleConfig::default() };
        let r = find_roots(&p, &cfg).unwrap();
        prop_assert_eq!(r.roots.len(), p.degree());
        prop_assert_eq!(r.cluster_radii.len(), p.degree());
        prop_assert!(r.iterations_used <= iterations);
        prop_assert!(r.roots.iter().all(|z| z.is_finite()));
    }

    #[test]
    fn pairing_is_a_bijection(
        a in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 1..=7),
        perm_seed in any::<u64>(),
    ) {
        let computed: Vec<Complex> = a.iter().map(|&(re, im)| Complex::new(re, im)).collect();
        let mut reference = computed.clone();
        let n = reference.len();
        for i in (1..n).rev() {
            reference.swap(i, (perm_seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let pairs = pair_roots(&computed, &reference).unwrap();
        let mut seen_c = vec![false; n];
        let mut seen_r = vec![false; n];
        for &(c, r, d) in &pairs {
            prop_assert!(!seen_c[c] && !seen_r[r]);
            seen_c[c] = true;
            seen_r[r] = true;
            prop_assert_eq!(d, computed[c].dist(reference[r]));
        }
        if n <= 4 {
            // Identical multisets pair at distance zero under exhaustive search.
            prop_assert!(pairs.iter().all(|p| p.2 == 0.0));
        }
    }
}
