mod common;

use bireg::axial::{quadruple_from_separable, AxialFunction, AxialVar, Lemma2Form};
use bireg::fueter::{run_and_certify, FueterJob};
use bireg::generators::default_biregular_poly;
use bireg::mvpoly::{Block, CliffPoly, OperatorSpec};
use bireg::numeric::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_point(rng: &mut ChaCha8Rng, m: usize) -> EvalPoint {
    EvalPoint::new(
        m,
        (0..2 * (m + 1)).map(|_| rng.gen_range(1.0..2.0)).collect(),
    )
    .unwrap()
}

fn certified(m: usize, k: usize, l: usize, n: u32, p: u32) -> CliffPoly {
    let job = FueterJob::new(
        m,
        quadruple_from_separable(n, p),
        default_biregular_poly(k, l, m).unwrap(),
    )
    .unwrap();
    run_and_certify(&job).unwrap().direct
}

#[test]
fn exact_operators_match_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let c = common::ctx(3);
    let x = CliffPoly::paravector(c, Block::X);
    let y = CliffPoly::paravector(c, Block::Y);
    let f = x
        .pow(3)
        .mul(&y.pow(2))
        .unwrap()
        .add(&x.mul(&y).unwrap())
        .unwrap();
    let cf = CompiledPoly::new(&f);
    let cfg = FdConfig::default();
    for _ in 0..100 {
        let pt = random_point(&mut rng, 3);
        for spec in [
            OperatorSpec::DX,
            OperatorSpec::DIRAC_X,
            OperatorSpec::DY_RIGHT,
            OperatorSpec::DIRAC_Y_RIGHT,
        ] {
            let exact = eval(&f.apply_cr(spec), &pt);
            let fd = fd_cr_apply(&|q: &EvalPoint| cf.eval(q), spec, &pt, &cfg);
            assert!(exact.sub(&fd).max_norm() < cfg.tolerance);
        }
    }
}

#[test]
fn certified_outputs_pass_numerically() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = CompiledPoly::new(&certified(3, 1, 1, 5, 5));
    let cfg = FdConfig::default();
    for _ in 0..100 {
        let pt = random_point(&mut rng, 3);
        assert!(fd_biregular_residual(&|q: &EvalPoint| f.eval(q), &pt, &cfg) < cfg.tolerance);
    }
}

#[test]
fn second_order_stencil_converges_quadratically() {
    let f = CompiledPoly::new(&certified(3, 0, 0, 8, 2));
    let pt = EvalPoint::new(3, vec![1.3, 1.1, 1.7, 1.4, 1.2, 1.5, 1.9, 1.6]).unwrap();
    let res: Vec<f64> = [1e-2, 5e-3, 2.5e-3]
        .iter()
        .map(|&h| {
            let cfg = FdConfig::new(h, FdOrder::Second, 1e-6).unwrap();
            fd_biregular_residual(&|q: &EvalPoint| f.eval(q), &pt, &cfg)
        })
        .collect();
    for w in res.windows(2) {
        let ratio = w[0] / w[1];
        assert!((3.0..5.0).contains(&ratio), "ratio {ratio}");
    }
}

// exp(x0 + i r) (y0 + i rho)^3 is not polynomial, so only the point-wise
// layer can handle it. With m = 3, k = l = 0 the closed form is
// A = D_r a D_rho c, B = D^r b D_rho c, C = D_r a D^rho d, D = D^r b D^rho d
// where a + i b = exp(x0 + i r) and c + i d = (y0 + i rho)^3.
#[test]
fn transcendental_field_is_biregular() {
    let da = |x0: f64, r: f64| -x0.exp() * r.sin() / r;
    let ub = |x0: f64, r: f64| x0.exp() * (r.cos() / r - r.sin() / (r * r));
    let dc = |y0: f64| -6.0 * y0;
    let ud = |rho: f64| -2.0 * rho;
    type Coefficient = Box<dyn Fn(f64, f64, f64, f64) -> f64>;
    let coeffs: [Coefficient; 4] = [
        Box::new(move |x0, r, y0, _| da(x0, r) * dc(y0)),
        Box::new(move |x0, r, y0, _| ub(x0, r) * dc(y0)),
        Box::new(move |x0, r, _, rho| da(x0, r) * ud(rho)),
        Box::new(move |x0, r, _, rho| ub(x0, r) * ud(rho)),
    ];
    let p = default_biregular_poly(0, 0, 3).unwrap();
    let f = axial_field(coeffs, p.poly());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cfg = FdConfig::default();
    for _ in 0..20 {
        let pt = random_point(&mut rng, 3);
        assert!(f(&pt).max_norm() > 1e-3);
        assert!(fd_biregular_residual(&f, &pt, &cfg) < cfg.tolerance);
    }
}

#[test]
fn lemma2_numeric_for_odd_h() {
    let h = &AxialFunction::var(AxialVar::X0) * &AxialFunction::var(AxialVar::R);
    let p = default_biregular_poly(0, 0, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let cfg = FdConfig::default();
    for _ in 0..10 {
        let pt = random_point(&mut rng, 3);
        let params = Lemma2Params {
            h: &h,
            n: 1,
            p: &p,
            form: Lemma2Form::DxOmega,
        };
        assert!(fd_axial_identity(AxialIdentity::Lemma2General(params), &pt, &cfg).unwrap() < 1e-6);
    }
}

#[test]
fn singular_points_are_rejected() {
    let pt = EvalPoint::new(3, vec![1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
    assert!(fd_axial_identity(AxialIdentity::OmegaLaplacian, &pt, &FdConfig::default()).is_err());
    assert!(FdConfig::new(-1.0, FdOrder::Fourth, 1e-6).is_err());
}
