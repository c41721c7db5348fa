use proptest::prelude::*;
use splitroots::{
    depress_cubic, depress_quartic, derivative, evaluate, find_roots, pair_roots, undepress,
    Complex, OracleConfig, RealPolynomial, RootSet,
};

fn monic(degree: usize) -> impl Strategy<Value = RealPolynomial> {
    prop::collection::vec(-10.0f64..=10.0, degree)
        .prop_map(|lower| RealPolynomial::monic_from_lower(&lower).unwrap())
}

fn min_separation(roots: &[Complex]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, a) in roots.iter().enumerate() {
        for b in &roots[i + 1..] {
            best = best.min(a.dist(*b));
        }
    }
    best
}

fn complex() -> impl Strategy<Value = Complex> {
    (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(re, im)| Complex::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cubic_depression_round_trip(p in monic(3)) {
        let back = depress_cubic(&p).unwrap().expand();
        let largest = p.max_abs_coefficient();
        for k in 0..=3 {
            prop_assert!((back.coeff(k) - p.coeff(k)).abs() <= 1e-12 * largest);
            prop_assert!((back.coeff(k) - p.coeff(k)).abs() <= 4.0 * f64::EPSILON * largest);
        }
    }

    #[test]
    fn quartic_depression_round_trip(p in monic(4)) {
        let back = depress_quartic(&p).unwrap().expand();
        let largest = p.max_abs_coefficient();
        for k in 0..=4 {
            prop_assert!((back.coeff(k) - p.coeff(k)).abs() <= 4.0 * f64::EPSILON * largest);
        }
    }

    #[test]
    fn non_monic_depression_uses_monic_form(p in monic(4), lead in prop_oneof![-5.0f64..-0.1, 0.1f64..5.0]) {
        let scaled = RealPolynomial::new(p.coefficients().iter().map(|c| c * lead).collect()).unwrap();
        let d = depress_quartic(&scaled).unwrap();
        let e = d.expand();
        for k in 0..=4 {
            prop_assert!((e.coeff(k) - p.coeff(k)).abs() <= 1e-12 * p.max_abs_coefficient());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_moves_every_root(p in prop_oneof![monic(3), monic(4)]) {
        let cfg = OracleConfig::default();
        let (depressed, shift) = if p.degree() == 3 {
            let d = depress_cubic(&p).unwrap();
            (d.polynomial(), d.shift)
        } else {
            let d = depress_quartic(&p).unwrap();
            (d.polynomial(), d.shift)
        };
        let source = find_roots(&p, &cfg).unwrap();
        prop_assume!(source.converged && min_separation(&source.roots) >= 1e-3);
        let moved = find_roots(&depressed, &cfg).unwrap();
        let back: Vec<Complex> = moved.roots.iter().map(|&z| z - shift).collect();
        for (_, _, d) in pair_roots(&back, &source.roots).unwrap() {
            prop_assert!(d <= 1e-9, "distance {d}");
        }
    }

    #[test]
    fn oracle_roots_evaluate_small(degree in 1usize..=6, seed in any::<u64>()) {
        let p = splitroots::corpus::monic_corpus(seed, degree, 1).pop().unwrap();
        let r = find_roots(&p, &OracleConfig::default()).unwrap();
        for z in r.roots {
            let bound = 1e-9 * p.max_abs_coefficient() * z.abs().max(1.0).powi(degree as i32);
            prop_assert!(evaluate(&p, z).abs() <= bound);
        }
    }

    #[test]
    fn derivative_matches_finite_difference(p in prop_oneof![monic(2), monic(3), monic(4)], x in -3.0f64..3.0) {
        let dp = derivative(&p).unwrap();
        prop_assert_eq!(dp.degree(), p.degree() - 1);
        let h = 1e-6;
        let fd = (evaluate(&p, Complex::real(x + h)).re - evaluate(&p, Complex::real(x - h)).re) / (2.0 * h);
        let exact = evaluate(&dp, Complex::real(x)).re;
        prop_assert!((fd - exact).abs() <= 1e-5 * exact.abs().max(100.0));
    }

    #[test]
    fn undepress_subtracts_shift(re in -10.0f64..10.0, im in -10.0f64..10.0, shift in -5.0f64..5.0) {
        let set = RootSet {
            roots: vec![Complex::new(re, im)],
            residuals: vec![0.0],
            branch_tags: vec![],
        };
        let moved = undepress(set, shift);
        prop_assert_eq!(moved.roots[0], Complex::new(re - shift, im));
    }

    #[test]
    fn conj_is_an_involution(z in complex()) {
        prop_assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn division_inverts_multiplication(a in complex(), b in complex()) {
        prop_assume!(b.abs() > 1e-3);
        let q = (a * b) / b;
        prop_assert!(q.dist(a) <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn roots_of_roots(z in complex()) {
        let s = z.sqrt();
        prop_assert!(s.re >= 0.0);
        prop_assert!((s * s).dist(z) <= 1e-13 * z.abs().max(1.0));
        let c = z.cbrt();
        prop_assert!((c * c * c).dist(z) <= 1e-12 * z.abs().max(1.0));
        prop_assert!(s.is_finite() && c.is_finite());
    }
}
