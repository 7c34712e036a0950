mod common;

use bireg::axial::*;
use bireg::clifford::{int, ratio};
use bireg::generators::{biregular_poly, default_biregular_poly};
use bireg::Scalar;
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn lemma1_random_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for which in Lemma1Identity::ALL {
        for _ in 0..30 {
            let f = random_laurent(&mut rng, 5);
            for var in [AxialVar::R, AxialVar::Rho] {
                for n in 1..=4 {
                    assert!(
                        lemma1_residual(which, &f, var, n).is_zero(),
                        "{} n={n} f={f}",
                        which.label()
                    );
                }
            }
        }
    }
}

#[test]
fn vekua_holds_for_closed_forms() {
    for m in [3, 5] {
        for (k, l) in [(0, 0), (1, 0), (0, 2), (2, 1)] {
            for (n, p) in [(3, 4), (6, 5), (7, 7)] {
                let q = quadruple_from_separable(n, p);
                let abcd = closed_form_abcd(&q, k, l, m).unwrap();
                assert!(vekua_residuals(&abcd, k, l, m)
                    .iter()
                    .all(AxialFunction::is_zero));
                let p = default_biregular_poly(k, l, m).unwrap();
                assert!(substitute(&abcd, &p).unwrap().is_biregular());
            }
        }
    }
}

#[test]
fn closed_form_is_linear_in_the_quadruple() {
    let q1 = quadruple_from_separable(5, 4);
    let q2 = quadruple_from_separable(6, 3);
    let sum = closed_form_abcd(&q1.add(&q2), 0, 0, 3).unwrap();
    let parts = &closed_form_abcd(&q1, 0, 0, 3).unwrap() + &closed_form_abcd(&q2, 0, 0, 3).unwrap();
    assert_eq!(sum, parts);
}

#[test]
fn two_variable_quadruple_is_holomorphic() {
    // (x0 + i r)^2 (y0 + i rho): u + iv with the CR pairs in both planes.
    let (a, b) = complex_power(2, AxialVar::X0, AxialVar::R);
    let (c, d) = complex_power(1, AxialVar::Y0, AxialVar::Rho);
    let u = &(&a * &c) - &(&b * &d);
    let v = &(&a * &d) + &(&b * &c);
    let q = quadruple_from_two_variable(&u, &v).unwrap();
    assert!(q.cr_residuals().iter().all(AxialFunction::is_zero));
}

fn harmonic_with_parity(sig: ParitySignature, a: u32, b: u32) -> AxialFunction {
    let (re_x, im_x) = complex_power(a, AxialVar::X0, AxialVar::R);
    let (re_y, im_y) = complex_power(b, AxialVar::Y0, AxialVar::Rho);
    let hx = if sig.in_r == Parity::Even { re_x } else { im_x };
    let hy = if sig.in_rho == Parity::Even {
        re_y
    } else {
        im_y
    };
    &hx * &hy
}

#[test]
fn lemma2_holds_for_every_form() {
    for form in Lemma2Form::ALL {
        for (a, b) in [(3, 2), (4, 4), (5, 3)] {
            let h = harmonic_with_parity(form.required_parity(), a, b);
            for (k, l) in [(0, 0), (1, 1), (2, 0)] {
                let p = default_biregular_poly(k, l, 3).unwrap();
                for n in 1..=2 {
                    let (lhs, rhs) = lemma2_check(&h, n, &p, form).unwrap();
                    assert_eq!(lhs, rhs, "{} a={a} b={b} k={k} l={l} n={n}", form.label());
                }
            }
        }
    }
}

#[test]
fn lemma2_rejects_bad_inputs() {
    let p = biregular_poly(&[], &[], 3).unwrap();
    let x0sq = AxialFunction::var(AxialVar::X0).pow(2);
    assert_eq!(
        lemma2_check(&x0sq, 1, &p, Lemma2Form::DxPlain),
        Err(bireg::Error::NotHarmonic)
    );
    let odd = &AxialFunction::var(AxialVar::X0) * &AxialFunction::var(AxialVar::R);
    assert!(matches!(
        lemma2_check(&odd, 1, &p, Lemma2Form::DxPlain),
        Err(bireg::Error::ParityViolation { .. })
    ));
    let (lhs, rhs) = lemma2_sides(&x0sq, 1, &p, Lemma2Form::DxPlain).unwrap();
    assert_ne!(lhs, rhs);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lower_and_upper_operators_are_linear(f in laurent(6), g in laurent(6), s in small_rational(), n in 1u32..=4) {
        let comb = &f + &g.scalar_mul(&s);
        for var in [AxialVar::R, AxialVar::Rho] {
            prop_assert_eq!(d_lower(&comb, var, n), &d_lower(&f, var, n) + &d_lower(&g, var, n).scalar_mul(&s));
            prop_assert_eq!(d_upper(&comb, var, n), &d_upper(&f, var, n) + &d_upper(&g, var, n).scalar_mul(&s));
        }
    }

    #[test]
    fn lemma1_on_arbitrary_laurent(f in laurent(8), n in 1u32..=4) {
        for which in Lemma1Identity::ALL {
            prop_assert!(lemma1_residual(which, &f, AxialVar::R, n).is_zero());
        }
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        x in prop::collection::vec(-3i64..=3, 4),
        y in prop::collection::vec(-3i64..=3, 4),
        a in 0u32..=4,
        b in 0u32..=4,
    ) {
        let h = harmonic_with_parity(ParitySignature::EVEN_EVEN, a, b);
        let p = biregular_poly(&[2], &[3], 3).unwrap();
        let f = substitute(&AxialCoefficients::new(h.clone(), AxialFunction::zero(), AxialFunction::zero(), AxialFunction::zero()), &p).unwrap();
        let point: Vec<Scalar> = x.iter().chain(y.iter()).map(|&v| ratio(v, 2)).collect();
        let r2: Scalar = point[1..4].iter().map(|q| q * q).sum();
        let rho2: Scalar = point[5..8].iter().map(|q| q * q).sum();
        let hv = h.eval_even_exact(&point[0], &r2, &point[4], &rho2).unwrap();
        let want = p.poly().eval_exact(&point).unwrap().scalar_mul(&hv);
        prop_assert_eq!(f.eval_exact(&point).unwrap(), want);
    }
}

#[test]
fn substitution_rejects_mixed_parity() {
    let p = default_biregular_poly(0, 0, 3).unwrap();
    let mixed = &AxialFunction::var(AxialVar::R) + &AxialFunction::constant(int(1));
    let c = AxialCoefficients::new(
        mixed,
        AxialFunction::zero(),
        AxialFunction::zero(),
        AxialFunction::zero(),
    );
    assert!(matches!(
        substitute(&c, &p),
        Err(bireg::Error::ParityViolation { .. })
    ));
}
