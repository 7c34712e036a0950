#![allow(dead_code)]

use bireg::axial::AxialFunction;
use bireg::clifford::{ratio, AlgebraContext, Blade, Multivector, Scalar};
use bireg::mvpoly::{CliffPoly, Monomial};
use proptest::prelude::*;
use rand::Rng;

pub fn ctx(m: usize) -> AlgebraContext {
    AlgebraContext::new(m).unwrap()
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

pub fn multivector(m: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..(1 << m), small_rational()), 0..6).prop_map(move |terms| {
        Multivector::from_terms(
            ctx(m),
            terms.into_iter().map(|(b, q)| (Blade::from_mask(b), q)),
        )
        .unwrap()
    })
}

/// Polynomial with up to `max_terms` terms and exponents below `max_exp`.
pub fn cliff_poly(m: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = CliffPoly> {
    let nvars = 2 * (m + 1);
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, nvars), multivector(m)),
        0..max_terms,
    )
    .prop_map(move |terms| {
        CliffPoly::from_terms(
            ctx(m),
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c)),
        )
        .unwrap()
    })
}

/// Scalar-valued polynomial.
pub fn scalar_poly(m: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = CliffPoly> {
    let nvars = 2 * (m + 1);
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, nvars), small_rational()),
        0..max_terms,
    )
    .prop_map(move |terms| {
        CliffPoly::from_terms(
            ctx(m),
            terms.into_iter().map(|(e, q)| {
                (
                    Monomial::from_exponents(&e).unwrap(),
                    Multivector::scalar(ctx(m), q),
                )
            }),
        )
        .unwrap()
    })
}

pub fn laurent(max_terms: usize) -> impl Strategy<Value = AxialFunction> {
    prop::collection::vec(
        ([0i32..5, -4i32..6, 0i32..5, -4i32..6], small_rational()),
        0..max_terms,
    )
    .prop_map(AxialFunction::from_terms)
}

/// Seeded random Laurent polynomial in all four axial symbols.
pub fn random_laurent<R: Rng>(rng: &mut R, terms: usize) -> AxialFunction {
    AxialFunction::from_terms((0..terms).map(|_| {
        let e = [
            rng.gen_range(-3..6),
            rng.gen_range(-5..7),
            rng.gen_range(-3..6),
            rng.gen_range(-5..7),
        ];
        (e, ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
    }))
}
