//! Floating-point evaluation and finite-difference checks.
//!
//! This layer covers what exact substitution cannot: axial identities with
//! `w = x_/r` that are not polynomial, odd-parity `h`, and transcendental
//! holomorphic data supplied as black-box point functions.

use num_traits::ToPrimitive;

use crate::axial::{AxialFunction, Lemma2Form};
use crate::clifford::{AlgebraContext, Blade};
use crate::error::{Error, Result};
use crate::generators::BiregularPoly;
use crate::mvpoly::{Block, CliffPoly, OperatorSpec, Side, VarId};

/// A point `(x_0..x_m, y_0..y_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalPoint {
    m: usize,
    coords: Vec<f64>,
}

impl EvalPoint {
    pub fn new(m: usize, coords: Vec<f64>) -> Result<Self> {
        AlgebraContext::new(m)?;
        if coords.len() != 2 * (m + 1) {
            return Err(Error::Parse(format!(
                "point has {} coordinates, expected {}",
                coords.len(),
                2 * (m + 1)
            )));
        }
        Ok(Self { m, coords })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn get(&self, v: VarId) -> f64 {
        self.coords[v.position(self.m)]
    }

    /// `|x_|` or `|y_|`.
    pub fn radius(&self, block: Block) -> f64 {
        (1..=self.m)
            .map(|j| self.get(VarId { block, index: j }).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn r(&self) -> f64 {
        self.radius(Block::X)
    }

    pub fn rho(&self) -> f64 {
        self.radius(Block::Y)
    }

    fn shifted(&self, pos: usize, delta: f64) -> Self {
        let mut out = self.clone();
        out.coords[pos] += delta;
        out
    }
}

/// Dense multivector of doubles indexed by blade mask.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMultivector {
    m: usize,
    coeffs: Vec<f64>,
}

impl FloatMultivector {
    pub fn zero(m: usize) -> Self {
        Self {
            m,
            coeffs: vec![0.0; 1 << m],
        }
    }

    pub fn scalar(m: usize, value: f64) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[0] = value;
        out
    }

    /// `sum_j v_j e_j`.
    pub fn vector(m: usize, components: impl IntoIterator<Item = f64>) -> Self {
        let mut out = Self::zero(m);
        for (j, v) in components.into_iter().enumerate() {
            out.coeffs[Blade::generator(j + 1).mask() as usize] = v;
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, blade: Blade) -> f64 {
        self.coeffs[blade.mask() as usize]
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn add_scaled(&mut self, other: &Self, factor: f64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += factor * b;
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, -1.0);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if *b == 0.0 {
                    continue;
                }
                let (blade, neg) = Blade::from_mask(i as u32).product(Blade::from_mask(j as u32));
                let v = a * b;
                out.coeffs[blade.mask() as usize] += if neg { -v } else { v };
            }
        }
        out
    }

    fn generator_mul(&self, j: usize, side: Side) -> Self {
        let g = Blade::generator(j);
        let mut out = Self::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            let b = Blade::from_mask(i as u32);
            let (blade, neg) = match side {
                Side::Left => g.product(b),
                Side::Right => b.product(g),
            };
            out.coeffs[blade.mask() as usize] += if neg { -a } else { *a };
        }
        out
    }

    /// Largest absolute blade component.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc.max(c.abs()))
    }
}

/// Nonzero `(variable position, exponent)` pairs and `(blade mask, value)`
/// coefficients of one term.
type CompiledTerm = (Vec<(usize, i32)>, Vec<(usize, f64)>);

/// A [`CliffPoly`] flattened for repeated floating-point evaluation.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    m: usize,
    terms: Vec<CompiledTerm>,
}

impl CompiledPoly {
    pub fn new(p: &CliffPoly) -> Self {
        let nvars = p.nvars();
        let terms = p
            .terms()
            .map(|(mono, coef)| {
                let powers = mono
                    .exponents(nvars)
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(pos, e)| (pos, *e as i32))
                    .collect();
                let coefs = coef
                    .terms()
                    .map(|(b, q)| (b.mask() as usize, q.to_f64().unwrap_or(f64::NAN)))
                    .collect();
                (powers, coefs)
            })
            .collect();
        Self { m: p.m(), terms }
    }

    /// Term-by-term evaluation in graded-lex order.
    pub fn eval(&self, pt: &EvalPoint) -> FloatMultivector {
        assert_eq!(pt.m, self.m, "point dimension");
        let mut out = FloatMultivector::zero(self.m);
        for (powers, coefs) in &self.terms {
            let mut v = 1.0;
            for (pos, e) in powers {
                v *= pt.coords[*pos].powi(*e);
            }
            for (blade, c) in coefs {
                out.coeffs[*blade] += c * v;
            }
        }
        out
    }
}

pub fn eval(p: &CliffPoly, pt: &EvalPoint) -> FloatMultivector {
    CompiledPoly::new(p).eval(pt)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdOrder {
    Second,
    Fourth,
}

impl FdOrder {
    pub fn from_int(order: u32) -> Result<Self> {
        match order {
            2 => Ok(FdOrder::Second),
            4 => Ok(FdOrder::Fourth),
            _ => Err(Error::InvalidConfig(format!(
                "order must be 2 or 4, got {order}"
            ))),
        }
    }

    pub fn as_int(self) -> u32 {
        match self {
            FdOrder::Second => 2,
            FdOrder::Fourth => 4,
        }
    }
}

/// Central-difference settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdConfig {
    pub step: f64,
    pub order: FdOrder,
    pub tolerance: f64,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self {
            step: 1e-3,
            order: FdOrder::Fourth,
            tolerance: 1e-6,
        }
    }
}

impl FdConfig {
    pub fn new(step: f64, order: FdOrder, tolerance: f64) -> Result<Self> {
        let cfg = Self {
            step,
            order,
            tolerance,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "step must be positive, got {}",
                self.step
            )));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Smallest admissible `r` (or `rho`) for axial checks: the stencil must
    /// stay clear of the axis.
    pub fn singular_floor(&self) -> f64 {
        (4.0 * self.step).max(1e-6)
    }
}

/// First derivative along coordinate `pos` by a central stencil.
pub fn fd_partial<F>(f: &F, pt: &EvalPoint, pos: usize, cfg: &FdConfig) -> FloatMultivector
where
    F: Fn(&EvalPoint) -> FloatMultivector + ?Sized,
{
    let h = cfg.step;
    let at = |k: f64| f(&pt.shifted(pos, k * h));
    let mut out = FloatMultivector::zero(pt.m);
    match cfg.order {
        FdOrder::Second => {
            out.add_scaled(&at(1.0), 0.5 / h);
            out.add_scaled(&at(-1.0), -0.5 / h);
        }
        FdOrder::Fourth => {
            let w = 1.0 / (12.0 * h);
            out.add_scaled(&at(-2.0), w);
            out.add_scaled(&at(-1.0), -8.0 * w);
            out.add_scaled(&at(1.0), 8.0 * w);
            out.add_scaled(&at(2.0), -w);
        }
    }
    out
}

/// Second derivative along coordinate `pos` by a central stencil.
pub fn fd_second<F>(f: &F, pt: &EvalPoint, pos: usize, cfg: &FdConfig) -> FloatMultivector
where
    F: Fn(&EvalPoint) -> FloatMultivector + ?Sized,
{
    let h = cfg.step;
    let at = |k: f64| f(&pt.shifted(pos, k * h));
    let mut out = FloatMultivector::zero(pt.m);
    match cfg.order {
        FdOrder::Second => {
            let w = 1.0 / (h * h);
            out.add_scaled(&at(1.0), w);
            out.add_scaled(&at(0.0), -2.0 * w);
            out.add_scaled(&at(-1.0), w);
        }
        FdOrder::Fourth => {
            let w = 1.0 / (12.0 * h * h);
            out.add_scaled(&at(-2.0), -w);
            out.add_scaled(&at(-1.0), 16.0 * w);
            out.add_scaled(&at(0.0), -30.0 * w);
            out.add_scaled(&at(1.0), 16.0 * w);
            out.add_scaled(&at(2.0), -w);
        }
    }
    out
}

/// Finite-difference value of a Cauchy-Riemann operator at `pt`.
pub fn fd_cr_apply<F>(f: &F, spec: OperatorSpec, pt: &EvalPoint, cfg: &FdConfig) -> FloatMultivector
where
    F: Fn(&EvalPoint) -> FloatMultivector + ?Sized,
{
    let m = pt.m;
    let mut out = FloatMultivector::zero(m);
    if spec.include_scalar_direction {
        let pos = VarId {
            block: spec.block,
            index: 0,
        }
        .position(m);
        out.add_scaled(&fd_partial(f, pt, pos, cfg), 1.0);
    }
    for j in 1..=m {
        let pos = VarId {
            block: spec.block,
            index: j,
        }
        .position(m);
        let d = fd_partial(f, pt, pos, cfg);
        out.add_scaled(&d.generator_mul(j, spec.side), 1.0);
    }
    out
}

/// Max-norm of the finite-difference operator value; compare with
/// `cfg.tolerance`.
pub fn fd_cr_residual<F>(f: &F, spec: OperatorSpec, pt: &EvalPoint, cfg: &FdConfig) -> f64
where
    F: Fn(&EvalPoint) -> FloatMultivector + ?Sized,
{
    fd_cr_apply(f, spec, pt, cfg).max_norm()
}

/// `max(|d_x f|, |f d_y|)` by finite differences.
pub fn fd_biregular_residual<F>(f: &F, pt: &EvalPoint, cfg: &FdConfig) -> f64
where
    F: Fn(&EvalPoint) -> FloatMultivector + ?Sized,
{
    fd_cr_residual(f, OperatorSpec::DX, pt, cfg).max(fd_cr_residual(
        f,
        OperatorSpec::DY_RIGHT,
        pt,
        cfg,
    ))
}

/// `sum_{j=0}^m d_j^2 f` in one block by finite differences.
pub fn fd_laplacian<F>(f: &F, block: Block, pt: &EvalPoint, cfg: &FdConfig) -> FloatMultivector
where
    F: Fn(&EvalPoint) -> FloatMultivector + ?Sized,
{
    let mut out = FloatMultivector::zero(pt.m);
    for j in 0..=pt.m {
        out.add_scaled(
            &fd_second(f, pt, VarId { block, index: j }.position(pt.m), cfg),
            1.0,
        );
    }
    out
}

/// `w = x_/r` or `n = y_/rho` at a point.
pub fn unit_vector(pt: &EvalPoint, block: Block) -> FloatMultivector {
    let rad = pt.radius(block);
    FloatMultivector::vector(
        pt.m,
        (1..=pt.m).map(|j| pt.get(VarId { block, index: j }) / rad),
    )
}

/// Point function `A P + B w P + C P n + D w P n` for arbitrary real
/// coefficient functions of `(x0, r, y0, rho)`.
pub fn axial_field<'a, A>(
    coeffs: [A; 4],
    p: &CliffPoly,
) -> impl Fn(&EvalPoint) -> FloatMultivector + 'a
where
    A: Fn(f64, f64, f64, f64) -> f64 + 'a,
{
    let p = CompiledPoly::new(p);
    move |pt: &EvalPoint| {
        let (x0, r, y0, rho) = (pt.get(VarId::x(0)), pt.r(), pt.get(VarId::y(0)), pt.rho());
        let [a, b, c, d] =
            [&coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3]].map(|g| g(x0, r, y0, rho));
        let pv = p.eval(pt);
        let omega = unit_vector(pt, Block::X);
        let nu = unit_vector(pt, Block::Y);
        let left = {
            let mut l = FloatMultivector::scalar(pt.m, a);
            l.add_scaled(&omega, b);
            l.mul(&pv)
        };
        let right = {
            let mut l = FloatMultivector::scalar(pt.m, c);
            l.add_scaled(&omega, d);
            l.mul(&pv).mul(&nu)
        };
        let mut out = left;
        out.add_scaled(&right, 1.0);
        out
    }
}

/// The Laplacian-power formula for arbitrary `h`.
#[derive(Clone, Copy, Debug)]
pub struct Lemma2Params<'a> {
    pub h: &'a AxialFunction,
    pub n: u32,
    pub p: &'a BiregularPoly,
    pub form: Lemma2Form,
}

#[derive(Clone, Copy, Debug)]
pub enum AxialIdentity<'a> {
    /// `Lap_x_ w + ((m-1)/r^2) w = 0`.
    OmegaLaplacian,
    /// `Lap^n(h [w] P [n]) - c D(n){h} [w] P [n] = 0`.
    Lemma2General(Lemma2Params<'a>),
}

fn iterated_laplacian(
    f: &dyn Fn(&EvalPoint) -> FloatMultivector,
    block: Block,
    n: u32,
    pt: &EvalPoint,
    cfg: &FdConfig,
) -> FloatMultivector {
    if n == 0 {
        return f(pt);
    }
    let inner = |q: &EvalPoint| iterated_laplacian(f, block, n - 1, q, cfg);
    fd_laplacian(&inner, block, pt, cfg)
}

/// Numerical residual of an axial identity at `pt`.
///
/// Iterated stencils lose accuracy quickly; `Lemma2General` is intended for
/// `n = 1`, or `n = 2` with a coarser step.
pub fn fd_axial_identity(which: AxialIdentity<'_>, pt: &EvalPoint, cfg: &FdConfig) -> Result<f64> {
    cfg.validate()?;
    let floor = cfg.singular_floor();
    let m = pt.m;
    match which {
        AxialIdentity::OmegaLaplacian => {
            let r = pt.r();
            if r < floor {
                return Err(Error::SingularPoint { r, rho: pt.rho() });
            }
            let omega = |q: &EvalPoint| unit_vector(q, Block::X);
            let mut lap = FloatMultivector::zero(m);
            for j in 1..=m {
                lap.add_scaled(&fd_second(&omega, pt, VarId::x(j).position(m), cfg), 1.0);
            }
            lap.add_scaled(&omega(pt), (m as f64 - 1.0) / (r * r));
            Ok(lap.max_norm())
        }
        AxialIdentity::Lemma2General(params) => {
            let (r, rho) = (pt.r(), pt.rho());
            if r < floor || rho < floor {
                return Err(Error::SingularPoint { r, rho });
            }
            if params.p.m() != m {
                return Err(Error::ContextMismatch {
                    left: params.p.m(),
                    right: m,
                });
            }
            let form = params.form;
            let p = CompiledPoly::new(params.p.poly());
            let shaped = |value: f64, q: &EvalPoint| -> FloatMultivector {
                let pv = p.eval(q).scaled(value);
                match form {
                    Lemma2Form::DxPlain | Lemma2Form::DyPlain => pv,
                    Lemma2Form::DxOmega => unit_vector(q, Block::X).mul(&pv),
                    Lemma2Form::DyNu => pv.mul(&unit_vector(q, Block::Y)),
                }
            };
            let axial_at = |g: &AxialFunction, q: &EvalPoint| {
                g.eval(q.get(VarId::x(0)), q.r(), q.get(VarId::y(0)), q.rho())
            };
            let lhs_fn = |q: &EvalPoint| shaped(axial_at(params.h, q), q);
            let lhs = iterated_laplacian(&lhs_fn, form.block(), params.n, pt, cfg);
            let reduced = form.reduce(params.h, params.n);
            let constant = form
                .constant(params.n, params.p.k(), params.p.l(), m)
                .to_f64()
                .unwrap_or(f64::NAN);
            let rhs = shaped(constant * axial_at(&reduced, pt), pt);
            Ok(lhs.sub(&rhs).max_norm())
        }
    }
}
