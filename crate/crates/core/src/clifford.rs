//! Exact arithmetic in the real Clifford algebra `R_{0,m}` (all `e_j^2 = -1`).
//!
//! Basis blades are bitmasks over the generators: bit `j - 1` stands for
//! `e_j`, so `e1e3` is `0b101`. Coefficients are arbitrary-precision
//! rationals and a [`Multivector`] never stores a zero coefficient, which
//! makes structural equality coincide with algebraic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact scalar field.
pub type Scalar = BigRational;

/// Largest supported number of generators.
pub const MAX_GENERATORS: usize = 16;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(value.into())
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(numer.into(), denom.into())
}

/// The algebra `R_{0,m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraContext {
    m: usize,
}

impl AlgebraContext {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 || m > MAX_GENERATORS {
            return Err(Error::InvalidDimension(m));
        }
        Ok(Self { m })
    }

    pub fn m(self) -> usize {
        self.m
    }

    /// Dimension `2^m` of the algebra.
    pub fn dim(self) -> usize {
        1 << self.m
    }

    pub fn ensure_same(self, other: Self) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }
}

/// Basis element `e_A` for an ascending index set `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// The generator `e_j`, `j` counted from 1.
    pub fn generator(j: usize) -> Self {
        debug_assert!((1..=MAX_GENERATORS).contains(&j));
        Blade(1 << (j - 1))
    }

    /// Blade from generator indices; the order given is irrelevant but
    /// indices must be distinct and positive.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &j in indices {
            if !(1..=MAX_GENERATORS).contains(&j) {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    lo: 1,
                    hi: MAX_GENERATORS,
                });
            }
            let bit = 1 << (j - 1);
            if mask & bit != 0 {
                return Err(Error::Parse(format!("repeated generator index {j}")));
            }
            mask |= bit;
        }
        Ok(Blade(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Ascending generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 >> b & 1 == 1).map(|b| b + 1)
    }

    /// Highest generator index, 0 for the scalar blade.
    pub fn top_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// `e_A e_B = sign * e_{A xor B}`.
    ///
    /// The sign counts the transpositions needed to sort the concatenated
    /// index sequence, times `(-1)` per generator that squares away.
    pub fn product(self, other: Blade) -> (Blade, bool) {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        swaps += (self.0 & other.0).count_ones();
        (Blade(self.0 ^ other.0), swaps % 2 == 1)
    }

    /// True when conjugation flips the sign: grade `k` picks up
    /// `(-1)^{k(k+1)/2}`.
    pub fn conjugation_flips(self) -> bool {
        let k = self.grade();
        (k * (k + 1) / 2) % 2 == 1
    }

    /// Text key: `"1"`, `"e1"`, `"e13"`. Indices of 10 and above cannot be
    /// concatenated unambiguously, so such blades use `_` separators
    /// (`"e1_10"`).
    pub fn key(self) -> String {
        if self.0 == 0 {
            return "1".to_owned();
        }
        let idx: Vec<String> = self.indices().map(|j| j.to_string()).collect();
        if self.top_index() < 10 {
            format!("e{}", idx.concat())
        } else {
            format!("e{}", idx.join("_"))
        }
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        if key == "1" {
            return Ok(Blade::SCALAR);
        }
        let rest = key
            .strip_prefix('e')
            .filter(|r| !r.is_empty())
            .ok_or_else(|| Error::Parse(format!("bad blade key {key:?}")))?;
        let indices: Vec<usize> = if rest.contains('_') {
            rest.split('_')
                .map(|s| s.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad blade key {key:?}")))?
        } else {
            rest.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad blade key {key:?}")))?
        };
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "blade key {key:?} must list ascending indices"
            )));
        }
        Blade::from_indices(&indices).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Element of `R_{0,m}` in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    ctx: AlgebraContext,
    terms: BTreeMap<Blade, Scalar>,
}

impl Multivector {
    pub fn zero(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: AlgebraContext) -> Self {
        Self::scalar(ctx, Scalar::one())
    }

    pub fn scalar(ctx: AlgebraContext, value: Scalar) -> Self {
        Self::basis(ctx, Blade::SCALAR, value)
    }

    /// `value * e_A`. Panics if the blade uses generators beyond `m`.
    pub fn basis(ctx: AlgebraContext, blade: Blade, value: Scalar) -> Self {
        assert!(
            blade.top_index() <= ctx.m(),
            "blade {} outside R_{{0,{}}}",
            blade.key(),
            ctx.m()
        );
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(blade, value);
        }
        Self { ctx, terms }
    }

    pub fn generator(ctx: AlgebraContext, j: usize) -> Result<Self> {
        if !(1..=ctx.m()).contains(&j) {
            return Err(Error::IndexOutOfRange {
                index: j,
                lo: 1,
                hi: ctx.m(),
            });
        }
        Ok(Self::basis(ctx, Blade::generator(j), Scalar::one()))
    }

    /// Builds a multivector from possibly repeated or zero terms.
    pub fn from_terms<I>(ctx: AlgebraContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Scalar)>,
    {
        let mut out = Self::zero(ctx);
        for (blade, value) in terms {
            if blade.top_index() > ctx.m() {
                return Err(Error::IndexOutOfRange {
                    index: blade.top_index(),
                    lo: 1,
                    hi: ctx.m(),
                });
            }
            out.add_term(blade, value);
        }
        Ok(out)
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
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

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Scalar)> {
        self.terms.iter().map(|(b, q)| (*b, q))
    }

    pub fn coefficient(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coefficient(Blade::SCALAR)
    }

    /// True when the only possible nonzero component is the scalar one.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == Blade::SCALAR)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(other.ctx)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &Scalar::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(other.ctx)?;
        let mut out = self.clone();
        out.add_scaled_unchecked(other, &-Scalar::one());
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        Self {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(b, q)| (*b, -q)).collect(),
        }
    }

    pub fn scalar_mul(&self, q: &Scalar) -> Self {
        if q.is_zero() {
            return Self::zero(self.ctx);
        }
        Self {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(b, c)| (*b, c * q)).collect(),
        }
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(other.ctx)?;
        Ok(self.mul_unchecked(other))
    }

    /// Clifford conjugation: reverses generator order and negates each
    /// generator.
    pub fn conjugate(&self) -> Self {
        Self {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(b, q)| (*b, if b.conjugation_flips() { -q } else { q.clone() }))
                .collect(),
        }
    }

    /// Product with the generator `e_j` on the left (`e_j * self`).
    pub(crate) fn left_generator_mul(&self, j: usize) -> Self {
        let g = Blade::generator(j);
        let terms = self
            .terms
            .iter()
            .map(|(b, q)| {
                let (blade, neg) = g.product(*b);
                (blade, if neg { -q } else { q.clone() })
            })
            .collect();
        Self {
            ctx: self.ctx,
            terms,
        }
    }

    /// Product with the generator `e_j` on the right (`self * e_j`).
    pub(crate) fn right_generator_mul(&self, j: usize) -> Self {
        let g = Blade::generator(j);
        let terms = self
            .terms
            .iter()
            .map(|(b, q)| {
                let (blade, neg) = b.product(g);
                (blade, if neg { -q } else { q.clone() })
            })
            .collect();
        Self {
            ctx: self.ctx,
            terms,
        }
    }

    pub(crate) fn add_term(&mut self, blade: Blade, value: Scalar) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += value;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`, contexts assumed equal.
    pub(crate) fn add_scaled_unchecked(&mut self, other: &Self, factor: &Scalar) {
        for (b, q) in &other.terms {
            self.add_term(*b, q * factor);
        }
    }

    /// `self += factor * (a * b)`, contexts assumed equal.
    pub(crate) fn add_product_unchecked(&mut self, a: &Self, b: &Self, factor: &Scalar) {
        for (ba, qa) in &a.terms {
            let qa = qa * factor;
            for (bb, qb) in &b.terms {
                let (blade, neg) = ba.product(*bb);
                let q = &qa * qb;
                self.add_term(blade, if neg { -q } else { q });
            }
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ctx);
        out.add_product_unchecked(self, other, &Scalar::one());
        out
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (blade, q)) in self.terms.iter().enumerate() {
            let sign = if q.is_negative() { "-" } else { "+" };
            if i == 0 {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = q.abs();
            if *blade == Blade::SCALAR {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&blade.key())?;
            } else {
                write!(f, "{mag}*{}", blade.key())?;
            }
        }
        Ok(())
    }
}

// Operator sugar; these panic on a context mismatch. Use the fallible
// methods at API boundaries.

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        Multivector::add(self, rhs).expect("multivector add")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        Multivector::sub(self, rhs).expect("multivector sub")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("geometric product")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.negate()
    }
}
