//! Sparse polynomials in `x_0..x_m, y_0..y_m` with Clifford coefficients.
//!
//! Variables are scalar-valued and commute with everything; only the
//! coefficient multivectors are non-commutative, so products keep the
//! `(coefficient of p) * (coefficient of q)` order. Terms are keyed by a
//! graded-lexicographic [`Monomial`], which is also the serialization order.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::clifford::{int, AlgebraContext, Multivector, Scalar, MAX_GENERATORS};
use crate::error::{Error, Result};

/// Maximum number of polynomial variables (`2(m+1)` at the largest `m`).
pub const MAX_VARS: usize = 2 * (MAX_GENERATORS + 1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    X,
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A coordinate `x_i` or `y_i`, `0 <= i <= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub block: Block,
    pub index: usize,
}

impl VarId {
    pub fn x(index: usize) -> Self {
        Self {
            block: Block::X,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        Self {
            block: Block::Y,
            index,
        }
    }

    /// Position in the exponent vector `(x_0..x_m, y_0..y_m)`.
    pub fn position(self, m: usize) -> usize {
        match self.block {
            Block::X => self.index,
            Block::Y => m + 1 + self.index,
        }
    }

    pub fn name(self) -> String {
        match self.block {
            Block::X => format!("x{}", self.index),
            Block::Y => format!("y{}", self.index),
        }
    }
}

/// Which generalized Cauchy-Riemann operator to apply.
///
/// `Left` computes `sum_j e_j d_j p`, `Right` computes `sum_j (d_j p) e_j`;
/// the scalar direction adds `d_0 p`. So `{X, Left, true}` is `d_x`,
/// `{X, Left, false}` is the Dirac operator `d_{x_}`, and `{Y, Right, true}`
/// is the right action `p d_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperatorSpec {
    pub block: Block,
    pub side: Side,
    pub include_scalar_direction: bool,
}

impl OperatorSpec {
    pub const DX: Self = Self::new(Block::X, Side::Left, true);
    pub const DIRAC_X: Self = Self::new(Block::X, Side::Left, false);
    pub const DY_RIGHT: Self = Self::new(Block::Y, Side::Right, true);
    pub const DIRAC_Y_RIGHT: Self = Self::new(Block::Y, Side::Right, false);

    pub const fn new(block: Block, side: Side, include_scalar_direction: bool) -> Self {
        Self {
            block,
            side,
            include_scalar_direction,
        }
    }
}

/// Exponent vector. Field order makes the derived `Ord` graded-lex: total
/// degree first, then lexicographic with `x_0` most significant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        degree: 0,
        exps: [0; MAX_VARS],
    };

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Parse(format!(
                "exponent vector of length {} exceeds {MAX_VARS}",
                exps.len()
            )));
        }
        let mut out = Self::ONE;
        for (slot, &e) in out.exps.iter_mut().zip(exps) {
            *slot =
                u16::try_from(e).map_err(|_| Error::Parse(format!("exponent {e} too large")))?;
            out.degree += e;
        }
        Ok(out)
    }

    pub fn exp(&self, pos: usize) -> u32 {
        self.exps[pos] as u32
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn with_exp(mut self, pos: usize, e: u32) -> Self {
        self.degree = self.degree - self.exps[pos] as u32 + e;
        self.exps[pos] = u16::try_from(e).expect("exponent overflow");
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out.degree += other.degree;
        out
    }

    /// Degree in the coordinates `block_1..block_m` (the vector part).
    pub fn vector_degree(&self, block: Block, m: usize) -> u32 {
        (1..=m)
            .map(|i| self.exp(VarId { block, index: i }.position(m)))
            .sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|e| *e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Polynomial with multivector coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffPoly {
    ctx: AlgebraContext,
    terms: BTreeMap<Monomial, Multivector>,
}

fn accumulate(
    terms: &mut BTreeMap<Monomial, Multivector>,
    mono: Monomial,
    coef: &Multivector,
    factor: &Scalar,
) {
    match terms.entry(mono) {
        Entry::Vacant(v) => {
            v.insert(coef.scalar_mul(factor));
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_scaled_unchecked(coef, factor);
        }
    }
}

impl CliffPoly {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        Self::constant(Multivector::one(ctx))
    }

    pub fn constant(coef: Multivector) -> Self {
        Self::monomial(Monomial::ONE, coef)
    }

    pub fn scalar(ctx: AlgebraContext, value: Scalar) -> Self {
        Self::constant(Multivector::scalar(ctx, value))
    }

    pub fn monomial(mono: Monomial, coef: Multivector) -> Self {
        let ctx = coef.context();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(mono, coef);
        }
        Self { ctx, terms }
    }

    /// The coordinate function `v`.
    pub fn var(ctx: AlgebraContext, v: VarId) -> Result<Self> {
        check_var(ctx, v)?;
        Ok(Self::monomial(
            Monomial::ONE.with_exp(v.position(ctx.m()), 1),
            Multivector::one(ctx),
        ))
    }

    /// `e_A * prod_v v^{e_v}` from `(variable, exponent)` pairs.
    pub fn term(ctx: AlgebraContext, vars: &[(VarId, u32)], coef: Multivector) -> Result<Self> {
        ctx.ensure_same(coef.context())?;
        let mut mono = Monomial::ONE;
        for &(v, e) in vars {
            check_var(ctx, v)?;
            let pos = v.position(ctx.m());
            mono = mono.with_exp(pos, mono.exp(pos) + e);
        }
        Ok(Self::monomial(mono, coef))
    }

    /// Vector part `sum_{j>=1} v_j e_j` of the paravector variable.
    pub fn vector_variable(ctx: AlgebraContext, block: Block) -> Self {
        let mut out = Self::zero(ctx);
        for j in 1..=ctx.m() {
            let mono = Monomial::ONE.with_exp(VarId { block, index: j }.position(ctx.m()), 1);
            out.terms.insert(
                mono,
                Multivector::generator(ctx, j).expect("generator in range"),
            );
        }
        out
    }

    /// Paravector `v_0 + sum_j v_j e_j`.
    pub fn paravector(ctx: AlgebraContext, block: Block) -> Self {
        let v0 = Self::var(ctx, VarId { block, index: 0 }).expect("v0 exists");
        v0.add(&Self::vector_variable(ctx, block))
            .expect("same context")
    }

    /// `sum_{j>=1} v_j^2`, the squared norm of the vector part.
    pub fn squared_radius(ctx: AlgebraContext, block: Block) -> Self {
        let mut out = Self::zero(ctx);
        for j in 1..=ctx.m() {
            let mono = Monomial::ONE.with_exp(VarId { block, index: j }.position(ctx.m()), 2);
            out.terms.insert(mono, Multivector::one(ctx));
        }
        out
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn m(&self) -> usize {
        self.ctx.m()
    }

    pub fn nvars(&self) -> usize {
        2 * (self.ctx.m() + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Multivector {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.ctx))
    }

    /// Builds a polynomial from possibly repeated or cancelling terms.
    pub fn from_terms<I>(ctx: AlgebraContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Multivector)>,
    {
        let nvars = 2 * (ctx.m() + 1);
        let mut out = BTreeMap::new();
        for (mono, coef) in terms {
            ctx.ensure_same(coef.context())?;
            if mono.exps[nvars..].iter().any(|e| *e != 0) {
                return Err(Error::Parse(format!(
                    "monomial {mono:?} uses variables beyond m = {}",
                    ctx.m()
                )));
            }
            accumulate(&mut out, mono, &coef, &Scalar::one());
        }
        Ok(Self::normalized(ctx, out))
    }

    fn normalized(ctx: AlgebraContext, mut terms: BTreeMap<Monomial, Multivector>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { ctx, terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(other.ctx)?;
        Ok(self.add_scaled_unchecked(other, &Scalar::one()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(other.ctx)?;
        Ok(self.add_scaled_unchecked(other, &-Scalar::one()))
    }

    fn add_scaled_unchecked(&self, other: &Self, factor: &Scalar) -> Self {
        let mut terms = self.terms.clone();
        for (mono, coef) in &other.terms {
            accumulate(&mut terms, *mono, coef, factor);
        }
        Self::normalized(self.ctx, terms)
    }

    pub fn negate(&self) -> Self {
        self.scalar_mul(&-Scalar::one())
    }

    pub fn scalar_mul(&self, q: &Scalar) -> Self {
        if q.is_zero() {
            return Self::zero(self.ctx);
        }
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (*mono, c.scalar_mul(q)))
                .collect(),
        }
    }

    /// Ring product; coefficients multiply as `(coef of self) * (coef of other)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(other.ctx)?;
        let mut terms: BTreeMap<Monomial, Multivector> = BTreeMap::new();
        let one = Scalar::one();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms
                    .entry(ma.mul(mb))
                    .or_insert_with(|| Multivector::zero(self.ctx))
                    .add_product_unchecked(ca, cb, &one);
            }
        }
        Ok(Self::normalized(self.ctx, terms))
    }

    /// `a * self`.
    pub fn left_mul_multivector(&self, a: &Multivector) -> Result<Self> {
        self.ctx.ensure_same(a.context())?;
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| (*mono, a.mul_unchecked(c)))
            .collect();
        Ok(Self::normalized(self.ctx, terms))
    }

    /// `self * a`.
    pub fn right_mul_multivector(&self, a: &Multivector) -> Result<Self> {
        self.ctx.ensure_same(a.context())?;
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| (*mono, c.mul_unchecked(a)))
            .collect();
        Ok(Self::normalized(self.ctx, terms))
    }

    /// `p^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.ctx);
        for _ in 0..n {
            out = out.mul(self).expect("same context");
        }
        out
    }

    pub fn conjugate_coefficients(&self) -> Self {
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(mono, c)| (*mono, c.conjugate()))
                .collect(),
        }
    }

    /// Coordinate partial derivative.
    ///
    /// # Panics
    ///
    /// If `v.index > m`.
    pub fn partial(&self, v: VarId) -> Self {
        check_var(self.ctx, v).expect("variable index");
        let pos = v.position(self.m());
        let mut terms = BTreeMap::new();
        for (mono, c) in &self.terms {
            let e = mono.exp(pos);
            if e == 0 {
                continue;
            }
            terms.insert(mono.with_exp(pos, e - 1), c.scalar_mul(&int(e as i64)));
        }
        Self {
            ctx: self.ctx,
            terms,
        }
    }

    /// Vector part of the operator: `sum_{j>=1} e_j d_j p` or `sum_j (d_j p) e_j`.
    pub fn dirac(&self, block: Block, side: Side) -> Self {
        let m = self.m();
        let mut terms: BTreeMap<Monomial, Multivector> = BTreeMap::new();
        for j in 1..=m {
            let pos = VarId { block, index: j }.position(m);
            for (mono, c) in &self.terms {
                let e = mono.exp(pos);
                if e == 0 {
                    continue;
                }
                let unit = match side {
                    Side::Left => c.left_generator_mul(j),
                    Side::Right => c.right_generator_mul(j),
                };
                accumulate(&mut terms, mono.with_exp(pos, e - 1), &unit, &int(e as i64));
            }
        }
        Self::normalized(self.ctx, terms)
    }

    pub fn apply_cr(&self, spec: OperatorSpec) -> Self {
        let vector = self.dirac(spec.block, spec.side);
        if spec.include_scalar_direction {
            vector
                .add(&self.partial(VarId {
                    block: spec.block,
                    index: 0,
                }))
                .expect("same context")
        } else {
            vector
        }
    }

    /// Conjugate operator `d_0 - sum_j e_j d_j` (or its right-acting form).
    pub fn apply_cr_conjugate(&self, spec: OperatorSpec) -> Self {
        let vector = self.dirac(spec.block, spec.side).negate();
        if spec.include_scalar_direction {
            vector
                .add(&self.partial(VarId {
                    block: spec.block,
                    index: 0,
                }))
                .expect("same context")
        } else {
            vector
        }
    }

    /// `sum_{j=0}^m d_{v_j}^2 p`.
    pub fn laplacian(&self, block: Block) -> Self {
        let m = self.m();
        let mut terms: BTreeMap<Monomial, Multivector> = BTreeMap::new();
        for (mono, c) in &self.terms {
            for j in 0..=m {
                let pos = VarId { block, index: j }.position(m);
                let e = mono.exp(pos);
                if e < 2 {
                    continue;
                }
                let factor = int(e as i64 * (e as i64 - 1));
                accumulate(&mut terms, mono.with_exp(pos, e - 2), c, &factor);
            }
        }
        Self::normalized(self.ctx, terms)
    }

    pub fn laplacian_power(&self, block: Block, n: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..n {
            if out.is_zero() {
                break;
            }
            out = out.laplacian(block);
        }
        out
    }

    /// `(d_x p, p d_y)`; `p` is biregular iff both vanish.
    pub fn biregular_residuals(&self) -> (Self, Self) {
        (
            self.apply_cr(OperatorSpec::DX),
            self.apply_cr(OperatorSpec::DY_RIGHT),
        )
    }

    pub fn is_biregular(&self) -> bool {
        let (dx, dy) = self.biregular_residuals();
        dx.is_zero() && dy.is_zero()
    }

    /// Euler operator `sum_{j>=1} v_j d_{v_j}`.
    pub fn euler(&self, block: Block) -> Self {
        let m = self.m();
        let terms = self
            .terms
            .iter()
            .map(|(mono, c)| {
                (
                    *mono,
                    c.scalar_mul(&int(mono.vector_degree(block, m) as i64)),
                )
            })
            .collect();
        Self::normalized(self.ctx, terms)
    }

    pub fn depends_on(&self, v: VarId) -> bool {
        let pos = v.position(self.m());
        self.terms.keys().any(|mono| mono.exp(pos) > 0)
    }

    pub fn depends_on_block(&self, block: Block) -> bool {
        (0..=self.m()).any(|i| self.depends_on(VarId { block, index: i }))
    }

    /// Total degree in `block_0..block_m` of every term.
    pub fn block_degrees(&self, block: Block) -> Vec<u32> {
        let m = self.m();
        let mut out: Vec<u32> = self
            .terms
            .keys()
            .map(|mono| {
                (0..=m)
                    .map(|i| mono.exp(VarId { block, index: i }.position(m)))
                    .sum()
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `Some((dx, dy))` when every term has the same degree in each block.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        match (
            self.block_degrees(Block::X).as_slice(),
            self.block_degrees(Block::Y).as_slice(),
        ) {
            (&[dx], &[dy]) => Some((dx, dy)),
            _ => None,
        }
    }

    /// Exact evaluation at a rational point `(x_0..x_m, y_0..y_m)`.
    pub fn eval_exact(&self, point: &[Scalar]) -> Result<Multivector> {
        if point.len() != self.nvars() {
            return Err(Error::Parse(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.nvars()
            )));
        }
        let mut out = Multivector::zero(self.ctx);
        for (mono, c) in &self.terms {
            let mut value = Scalar::one();
            for (x, e) in point.iter().zip(mono.exponents(point.len())) {
                if *e > 0 {
                    value *= num_traits::pow(x.clone(), *e as usize);
                }
            }
            out.add_scaled_unchecked(c, &value);
        }
        Ok(out)
    }
}

fn check_var(ctx: AlgebraContext, v: VarId) -> Result<()> {
    if v.index > ctx.m() {
        return Err(Error::IndexOutOfRange {
            index: v.index,
            lo: 0,
            hi: ctx.m(),
        });
    }
    Ok(())
}

impl fmt::Display for CliffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let m = self.m();
        for (i, (mono, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (pos, e) in mono.exponents(2 * (m + 1)).iter().enumerate() {
                let v = if pos <= m {
                    VarId::x(pos)
                } else {
                    VarId::y(pos - m - 1)
                };
                match e {
                    0 => {}
                    1 => write!(f, "*{}", v.name())?,
                    _ => write!(f, "*{}^{e}", v.name())?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{ratio, Blade};

    fn ctx(m: usize) -> AlgebraContext {
        AlgebraContext::new(m).unwrap()
    }

    fn e(c: AlgebraContext, idx: &[usize]) -> Multivector {
        Multivector::basis(c, Blade::from_indices(idx).unwrap(), int(1))
    }

    fn x(c: AlgebraContext, i: usize) -> CliffPoly {
        CliffPoly::var(c, VarId::x(i)).unwrap()
    }

    fn scalar(c: AlgebraContext, v: i64) -> CliffPoly {
        CliffPoly::scalar(c, int(v))
    }

    #[test]
    fn variables_commute_with_coefficients() {
        let c = ctx(3);
        let e1 = CliffPoly::constant(e(c, &[1]));
        assert_eq!(x(c, 0).mul(&e1).unwrap(), e1.mul(&x(c, 0)).unwrap());
    }

    #[test]
    fn product_keeps_coefficient_order() {
        let c = ctx(3);
        let a = CliffPoly::term(c, &[(VarId::x(1), 1)], e(c, &[1])).unwrap();
        let b = CliffPoly::term(c, &[(VarId::x(2), 1)], e(c, &[2])).unwrap();
        let ab = CliffPoly::term(c, &[(VarId::x(1), 1), (VarId::x(2), 1)], e(c, &[1, 2])).unwrap();
        assert_eq!(a.mul(&b).unwrap(), ab);
        assert_eq!(b.mul(&a).unwrap(), ab.negate());
    }

    #[test]
    fn partial_derivatives() {
        let c = ctx(3);
        let p = CliffPoly::term(c, &[(VarId::x(1), 2)], e(c, &[1])).unwrap();
        let want = CliffPoly::term(c, &[(VarId::x(1), 1)], e(c, &[1]))
            .unwrap()
            .scalar_mul(&int(2));
        assert_eq!(p.partial(VarId::x(1)), want);
        assert!(x(c, 0).partial(VarId::y(0)).is_zero());
        let q = CliffPoly::term(c, &[(VarId::x(1), 1), (VarId::x(2), 1)], e(c, &[1, 2])).unwrap();
        let want = CliffPoly::term(c, &[(VarId::x(2), 1)], e(c, &[1, 2])).unwrap();
        assert_eq!(q.partial(VarId::x(1)), want);
    }

    #[test]
    fn cr_operator_on_paravectors() {
        let c = ctx(3);
        let para = CliffPoly::paravector(c, Block::X);
        assert_eq!(para.apply_cr(OperatorSpec::DX), scalar(c, -2));
        let conj = para.conjugate_coefficients();
        assert_eq!(conj.apply_cr(OperatorSpec::DX), scalar(c, 4));
        let k = CliffPoly::constant(e(c, &[1, 3]).scalar_mul(&ratio(5, 3)));
        for block in [Block::X, Block::Y] {
            for side in [Side::Left, Side::Right] {
                for s in [true, false] {
                    assert!(k.apply_cr(OperatorSpec::new(block, side, s)).is_zero());
                }
            }
        }
    }

    #[test]
    fn laplacians() {
        let c = ctx(3);
        let para = CliffPoly::paravector(c, Block::X);
        assert_eq!(para.pow(2).laplacian(Block::X), scalar(c, -4));
        let full = x(c, 0)
            .pow(2)
            .add(&CliffPoly::squared_radius(c, Block::X))
            .unwrap();
        assert_eq!(full.laplacian(Block::X), scalar(c, 8));
        assert!(x(c, 0).pow(3).laplacian(Block::Y).is_zero());
        assert_eq!(para.laplacian_power(Block::X, 0), para);
    }

    #[test]
    fn biregular_residuals_examples() {
        let c = ctx(3);
        let (a, b) = CliffPoly::one(c).biregular_residuals();
        assert!(a.is_zero() && b.is_zero());

        let p = x(c, 0)
            .add(&CliffPoly::vector_variable(c, Block::X).scalar_mul(&ratio(1, 3)))
            .unwrap();
        assert!(p.is_biregular());

        let (a, b) = CliffPoly::paravector(c, Block::X).biregular_residuals();
        assert_eq!(a, scalar(c, -2));
        assert!(b.is_zero());
    }

    #[test]
    fn eval_exact_paravector_square() {
        let c = ctx(3);
        let sq = CliffPoly::paravector(c, Block::X).pow(2);
        let mut pt = vec![int(0); 8];
        pt[0] = int(1);
        pt[1] = int(1);
        assert_eq!(sq.eval_exact(&pt).unwrap(), e(c, &[1]).scalar_mul(&int(2)));
        assert!(sq.eval_exact(&pt[..3]).is_err());
    }

    #[test]
    fn bidegree_inspection() {
        let c = ctx(2);
        let p = CliffPoly::term(
            c,
            &[(VarId::x(1), 2), (VarId::y(0), 1)],
            Multivector::one(c),
        )
        .unwrap();
        assert_eq!(p.bidegree(), Some((2, 1)));
        let q = p.add(&x(c, 1)).unwrap();
        assert_eq!(q.bidegree(), None);
        assert_eq!(q.block_degrees(Block::X), vec![1, 2]);
    }

    #[test]
    fn var_out_of_range() {
        assert!(CliffPoly::var(ctx(2), VarId::x(3)).is_err());
        assert!(CliffPoly::one(ctx(2)).add(&CliffPoly::one(ctx(3))).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::from_exponents(&[0, 2]).unwrap();
        let b = Monomial::from_exponents(&[1, 0]).unwrap();
        let c = Monomial::from_exponents(&[1, 1]).unwrap();
        let d = Monomial::from_exponents(&[2, 0]).unwrap();
        assert!(b < a && a < c && c < d);
    }
}
