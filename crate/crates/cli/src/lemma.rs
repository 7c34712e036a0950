use bireg::axial::*;
use bireg::generators::default_biregular_poly;
use bireg::numeric::{fd_axial_identity, AxialIdentity, EvalPoint, FdConfig, Lemma2Params};
use bireg::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::io::emit;

pub struct Grid {
    pub m: Vec<usize>,
    pub k: Vec<usize>,
    pub l: Vec<usize>,
    pub n: Vec<u32>,
    pub p: Vec<u32>,
}

fn random_laurent(rng: &mut ChaCha8Rng, terms: usize) -> AxialFunction {
    AxialFunction::from_terms((0..terms).map(|_| {
        let e = [
            rng.gen_range(-3..6),
            rng.gen_range(-5..7),
            rng.gen_range(-3..6),
            rng.gen_range(-5..7),
        ];
        (
            e,
            Scalar::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into()),
        )
    }))
}

fn random_point(rng: &mut ChaCha8Rng, m: usize) -> EvalPoint {
    EvalPoint::new(
        m,
        (0..2 * (m + 1)).map(|_| rng.gen_range(1.0..2.0)).collect(),
    )
    .expect("valid point")
}

fn summary(case: &str, checks: usize, failures: usize) -> bool {
    emit(
        &json!({ "case": case, "checks": checks, "failures": failures, "pass": failures == 0 })
            .to_string(),
    );
    failures == 0
}

/// Exact Lemma 1 identities on `samples` random Laurent polynomials.
pub fn lemma1(seed: u64, samples: usize, max_n: u32) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    for which in Lemma1Identity::ALL {
        let fs: Vec<AxialFunction> = (0..samples).map(|_| random_laurent(&mut rng, 6)).collect();
        let mut checks = 0;
        let mut failures = 0;
        for f in &fs {
            for var in AxialVar::ALL {
                for n in 1..=max_n {
                    checks += 1;
                    if !lemma1_residual(which, f, var, n).is_zero() {
                        failures += 1;
                    }
                }
            }
        }
        ok &= summary(&format!("lemma1_{}", which.label()), checks, failures);
    }
    ok
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

/// Exact Laplacian-power formula for every form, plus the numeric check
/// for odd `h`. With `inject`, the non-harmonic `h = x0^2` is used instead
/// and the suite is expected to fail.
pub fn lemma2(grid: &Grid, seed: u64, samples: usize, cfg: &FdConfig, inject: bool) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let x0sq = AxialFunction::var(AxialVar::X0).pow(2);
    for form in Lemma2Form::ALL {
        let mut cases = Vec::new();
        for &m in &grid.m {
            for &k in &grid.k {
                for &l in &grid.l {
                    for n in 1..=2 {
                        let a = rng.gen_range(1..=5);
                        let b = rng.gen_range(1..=5);
                        cases.push((m, k, l, n, a, b));
                    }
                }
            }
        }
        let failures = cases
            .par_iter()
            .filter(|&&(m, k, l, n, a, b)| {
                let Ok(p) = default_biregular_poly(k, l, m) else {
                    return true;
                };
                let sides = if inject && form == Lemma2Form::DxPlain {
                    lemma2_sides(&x0sq, n, &p, form)
                } else {
                    lemma2_check(
                        &harmonic_with_parity(form.required_parity(), a, b),
                        n,
                        &p,
                        form,
                    )
                };
                !matches!(sides, Ok((lhs, rhs)) if lhs == rhs)
            })
            .count();
        ok &= summary(
            &format!("lemma2_exact_{}", form.label()),
            cases.len(),
            failures,
        );
    }

    let odd_x = &AxialFunction::var(AxialVar::X0) * &AxialFunction::var(AxialVar::R);
    let odd_y = &AxialFunction::var(AxialVar::Y0) * &AxialFunction::var(AxialVar::Rho);
    let numeric: [(&str, &AxialFunction, Lemma2Form); 2] = if inject {
        [
            ("x0^2", &x0sq, Lemma2Form::DxPlain),
            ("y0*rho", &odd_y, Lemma2Form::DyNu),
        ]
    } else {
        [
            ("x0*r", &odd_x, Lemma2Form::DxOmega),
            ("y0*rho", &odd_y, Lemma2Form::DyNu),
        ]
    };
    for (name, h, form) in numeric {
        let mut worst: f64 = 0.0;
        for &m in &grid.m {
            let Ok(p) = default_biregular_poly(0, 0, m) else {
                continue;
            };
            for _ in 0..samples {
                let pt = random_point(&mut rng, m);
                let params = Lemma2Params {
                    h,
                    n: 1,
                    p: &p,
                    form,
                };
                let res = fd_axial_identity(AxialIdentity::Lemma2General(params), &pt, cfg)
                    .unwrap_or(f64::INFINITY);
                worst = worst.max(res);
            }
        }
        let pass = worst < cfg.tolerance;
        emit(&json!({ "case": format!("lemma2_numeric_{}_h={name}", form.label()), "max_residual": worst, "pass": pass }).to_string());
        ok &= pass;
    }
    ok
}

/// Vekua systems for the closed-form coefficients over a separable grid.
pub fn lemma3(grid: &Grid) -> bool {
    let mut ok = true;
    for &m in &grid.m {
        let mut cases = Vec::new();
        for &k in &grid.k {
            for &l in &grid.l {
                for &n in &grid.n {
                    for &p in &grid.p {
                        cases.push((k, l, n, p));
                    }
                }
            }
        }
        let failures = cases
            .par_iter()
            .filter(|&&(k, l, n, p)| {
                let q = quadruple_from_separable(n, p);
                match closed_form_abcd(&q, k, l, m) {
                    Ok(abcd) => !vekua_residuals(&abcd, k, l, m)
                        .iter()
                        .all(AxialFunction::is_zero),
                    Err(_) => true,
                }
            })
            .count();
        ok &= summary(&format!("lemma3_vekua_m{m}"), cases.len(), failures);
    }
    ok
}
