//! The biregular Fueter map and its certification.
//!
//! Two routes compute the same function. The direct route substitutes the
//! quadruple into `F0 = u1 P + v1 w P + u2 P n + v2 w P n` and applies
//! `Lap_x^{k+(m-1)/2} Lap_y^{l+(m-1)/2}` with [`CliffPoly::laplacian_power`].
//! The closed-form route applies the axial operators of
//! [`closed_form_abcd`] and scales by the double-factorial constants. Any
//! disagreement is an arithmetic bug and aborts.

use num_bigint::BigInt;
use num_traits::One;

use crate::axial::{
    closed_form_abcd, d_lower, d_upper, ensure_odd, fueter_orders, substitute, AxialCoefficients,
    AxialFunction, AxialVar, HolomorphicQuadruple,
};
use crate::clifford::Scalar;
use crate::error::{Error, Result};
use crate::generators::BiregularPoly;
use crate::mvpoly::{Block, CliffPoly, OperatorSpec};

/// `prod_{j=1}^n (2k + m - (2j - 1))`; the empty product is 1.
///
/// At `n = k + (m-1)/2` with `m` odd this is `(2k + m - 1)!!`.
pub fn double_factorial_product(k: u64, m: u64, n: u64) -> BigInt {
    let base = BigInt::from(2 * k + m);
    (1..=n).fold(BigInt::one(), |acc, j| {
        acc * (&base - BigInt::from(2 * j - 1))
    })
}

/// `(2k+m-1)!! (2l+m-1)!!` as the explicit products.
pub fn fueter_constant(k: usize, l: usize, m: usize) -> Result<BigInt> {
    let (nx, ny) = fueter_orders(k, l, m)?;
    Ok(double_factorial_product(k as u64, m as u64, nx as u64)
        * double_factorial_product(l as u64, m as u64, ny as u64))
}

#[derive(Clone, Debug)]
pub struct FueterJob {
    m: usize,
    quad: HolomorphicQuadruple,
    p: BiregularPoly,
}

impl FueterJob {
    pub fn new(m: usize, quad: HolomorphicQuadruple, p: BiregularPoly) -> Result<Self> {
        ensure_odd(m)?;
        if p.m() != m {
            return Err(Error::BidegreeMismatch(format!(
                "P is built for m = {}, job has m = {m}",
                p.m()
            )));
        }
        if !quad.parity_ok() {
            let coeffs = quad.coefficients();
            let (slot, f, expected) = coeffs
                .slots()
                .into_iter()
                .find(|(_, f, p)| !f.has_parity(*p))
                .expect("some slot fails");
            return Err(Error::ParityViolation {
                slot,
                expected: expected.to_string(),
                found: f.parity().to_string(),
            });
        }
        Ok(Self { m, quad, p })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.p.k()
    }

    pub fn l(&self) -> usize {
        self.p.l()
    }

    pub fn quad(&self) -> &HolomorphicQuadruple {
        &self.quad
    }

    pub fn biregular_poly(&self) -> &BiregularPoly {
        &self.p
    }

    fn orders(&self) -> (u32, u32) {
        fueter_orders(self.k(), self.l(), self.m).expect("m odd by construction")
    }
}

#[derive(Clone, Debug)]
pub struct FueterResult {
    pub direct: CliffPoly,
    pub closed_form: CliffPoly,
    pub constant: BigInt,
    pub residuals: (CliffPoly, CliffPoly),
}

impl FueterResult {
    pub fn is_biregular(&self) -> bool {
        self.residuals.0.is_zero() && self.residuals.1.is_zero()
    }
}

/// `F0` before any Laplacian is applied.
pub fn initial_function(job: &FueterJob) -> Result<CliffPoly> {
    substitute(job.quad.coefficients(), &job.p)
}

/// Direct route: substitute, then `Lap_x^{k+(m-1)/2} Lap_y^{l+(m-1)/2}`.
pub fn fueter_map(job: &FueterJob) -> Result<CliffPoly> {
    let (nx, ny) = job.orders();
    Ok(initial_function(job)?
        .laplacian_power(Block::X, nx)
        .laplacian_power(Block::Y, ny))
}

/// Closed-form route: `(2k+m-1)!! (2l+m-1)!! (A P + B w P + C P n + D w P n)`.
pub fn fueter_map_closed_form(job: &FueterJob) -> Result<CliffPoly> {
    let abcd = closed_form_abcd(&job.quad, job.k(), job.l(), job.m)?;
    let constant = fueter_constant(job.k(), job.l(), job.m)?;
    Ok(substitute(&abcd, &job.p)?.scalar_mul(&Scalar::from_integer(constant)))
}

/// Runs both routes, demands exact agreement, and attaches the
/// biregularity residuals of the result.
pub fn run_and_certify(job: &FueterJob) -> Result<FueterResult> {
    let direct = fueter_map(job)?;
    let closed_form = fueter_map_closed_form(job)?;
    if direct != closed_form {
        return Err(Error::RouteDisagreement);
    }
    let residuals = direct.biregular_residuals();
    Ok(FueterResult {
        direct,
        closed_form,
        constant: fueter_constant(job.k(), job.l(), job.m)?,
        residuals,
    })
}

/// The one-variable special case: `l = 0` and `y`-independent data with
/// `u2 = v2 = 0`. Only `Lap_x^{k+(m-1)/2}` is applied (a `y`-Laplacian would
/// annihilate `y`-free data), so the output is
/// `Lap_x^{k+(m-1)/2}[(u + w v) P_k]`. It is cross-checked against
/// `(2k+m-1)!! (D_r u + w D^r v) P_k` and must be `y`-free and left
/// monogenic.
pub fn classical_fueter(job: &FueterJob) -> Result<CliffPoly> {
    if job.l() != 0 {
        return Err(Error::BidegreeMismatch(format!(
            "classical case needs l = 0, got l = {}",
            job.l()
        )));
    }
    let coeffs = job.quad.coefficients();
    let y_free = coeffs
        .slots()
        .iter()
        .all(|(_, f, _)| !f.depends_on(AxialVar::Y0) && !f.depends_on(AxialVar::Rho));
    if !y_free || !coeffs.c.is_zero() || !coeffs.d.is_zero() {
        return Err(Error::BidegreeMismatch(
            "classical case needs y-independent data with u2 = v2 = 0".into(),
        ));
    }
    let (nx, _) = job.orders();
    let direct = initial_function(job)?.laplacian_power(Block::X, nx);

    let reduced = AxialCoefficients::new(
        d_lower(&coeffs.a, AxialVar::R, nx),
        d_upper(&coeffs.b, AxialVar::R, nx),
        AxialFunction::zero(),
        AxialFunction::zero(),
    );
    let constant = double_factorial_product(job.k() as u64, job.m as u64, nx as u64);
    let closed = substitute(&reduced, &job.p)?.scalar_mul(&Scalar::from_integer(constant));
    if direct != closed {
        return Err(Error::RouteDisagreement);
    }
    if direct.depends_on_block(Block::Y) {
        return Err(Error::TheoremViolation(
            "classical output depends on y".into(),
        ));
    }
    if !direct.apply_cr(OperatorSpec::DX).is_zero() {
        return Err(Error::TheoremViolation(
            "classical output is not left monogenic".into(),
        ));
    }
    Ok(direct)
}

/// Bidegree of the output for the separable quadruple of bidegree `(n, p)`,
/// `None` when the output vanishes.
///
/// `D_r(K)` lowers the `(x0, r)`-degree of `a` by `2K = 2k + m - 1` and
/// annihilates it when that degree is smaller, so the output is nonzero iff
/// `n >= 2k + m - 1` and `p >= 2l + m - 1`. The surviving output has degree
/// `n - 2K + k = n - k - m + 1` in `x`, and likewise in `y`.
pub fn separable_output_bidegree(
    n: u32,
    p: u32,
    k: usize,
    l: usize,
    m: usize,
) -> Option<(u32, u32)> {
    let (k, l, m, n, p) = (k as i64, l as i64, m as i64, n as i64, p as i64);
    if n < 2 * k + m - 1 || p < 2 * l + m - 1 {
        return None;
    }
    Some(((n - k - m + 1) as u32, (p - l - m + 1) as u32))
}
