//! Laurent-polynomial calculus in the axial symbols `(x0, r, y0, rho)`.
//!
//! `r = |x_|` and `rho = |y_|`. The operators `D_t(n) = ((1/t) d_t)^n` and
//! `D^t(n) f = d_t(D^t(n-1) f / t)` act exactly because every division by a
//! symbol is an exponent shift. Functions whose parity in `r` and `rho`
//! matches their slot can be turned back into honest polynomials in
//! `x, y` by [`substitute`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::clifford::{int, AlgebraContext, Scalar};
use crate::error::{Error, Result};
use crate::fueter::double_factorial_product;
use crate::generators::BiregularPoly;
use crate::mvpoly::{Block, CliffPoly, Monomial, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxialVar {
    X0,
    R,
    Y0,
    Rho,
}

impl AxialVar {
    pub const ALL: [AxialVar; 4] = [AxialVar::X0, AxialVar::R, AxialVar::Y0, AxialVar::Rho];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            AxialVar::X0 => "x0",
            AxialVar::R => "r",
            AxialVar::Y0 => "y0",
            AxialVar::Rho => "rho",
        }
    }
}

/// Exponents of `x0^a r^b y0^c rho^d`.
pub type AxialExponents = [i32; 4];

/// Laurent polynomial in `(x0, r, y0, rho)` with rational coefficients.
///
/// Exponents of `r` and `rho` are unrestricted. Exponents of `x0` and `y0`
/// stay non-negative unless a `D` operator is taken in those variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AxialFunction {
    terms: BTreeMap<AxialExponents, Scalar>,
}

impl AxialFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(q: Scalar) -> Self {
        Self::monomial([0; 4], q)
    }

    pub fn monomial(exps: AxialExponents, q: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(exps, q);
        out
    }

    pub fn var(v: AxialVar) -> Self {
        let mut exps = [0; 4];
        exps[v.slot()] = 1;
        Self::monomial(exps, Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (AxialExponents, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, q) in terms {
            out.add_term(e, q);
        }
        out
    }

    fn add_term(&mut self, exps: AxialExponents, q: Scalar) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(q);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&AxialExponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn scalar_mul(&self, q: &Scalar) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    /// Multiplication by `v^k`, `k` of either sign.
    pub fn shift(&self, v: AxialVar, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[v.slot()] += k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn partial(&self, v: AxialVar) -> Self {
        let s = v.slot();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[s] == 0 {
                continue;
            }
            let mut d = *e;
            d[s] -= 1;
            out.add_term(d, c * int(e[s] as i64));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn parity(&self) -> ParitySignature {
        ParitySignature {
            in_r: Parity::of(self.terms.keys().map(|e| e[1])),
            in_rho: Parity::of(self.terms.keys().map(|e| e[3])),
        }
    }

    /// Zero fits every parity slot.
    pub fn has_parity(&self, expected: ParitySignature) -> bool {
        self.is_zero() || self.parity() == expected
    }

    pub fn depends_on(&self, v: AxialVar) -> bool {
        self.terms.keys().any(|e| e[v.slot()] != 0)
    }

    /// Floating-point value at `(x0, r, y0, rho)`.
    pub fn eval(&self, x0: f64, r: f64, y0: f64, rho: f64) -> f64 {
        let pt = [x0, r, y0, rho];
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.to_f64().unwrap_or(f64::NAN);
                for (x, k) in pt.iter().zip(e) {
                    if *k != 0 {
                        v *= x.powi(*k);
                    }
                }
                v
            })
            .sum()
    }

    /// Exact value for functions even in `r` and `rho`, given the squared
    /// radii. Negative exponents are allowed as long as the base is nonzero.
    pub fn eval_even_exact(
        &self,
        x0: &Scalar,
        r2: &Scalar,
        y0: &Scalar,
        rho2: &Scalar,
    ) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (e, c) in &self.terms {
            if e[1] % 2 != 0 || e[3] % 2 != 0 {
                return Err(Error::ParityViolation {
                    slot: "h",
                    expected: "(EVEN, EVEN)".into(),
                    found: self.parity().to_string(),
                });
            }
            let mut v = c.clone();
            for (base, k) in [(x0, e[0]), (r2, e[1] / 2), (y0, e[2]), (rho2, e[3] / 2)] {
                v *= pow_signed(base, k)?;
            }
            out += v;
        }
        Ok(out)
    }
}

fn pow_signed(base: &Scalar, k: i32) -> Result<Scalar> {
    if k >= 0 {
        return Ok(num_traits::pow(base.clone(), k as usize));
    }
    if base.is_zero() {
        return Err(Error::SingularPoint { r: 0.0, rho: 0.0 });
    }
    Ok(num_traits::pow(base.recip(), (-k) as usize))
}

impl fmt::Display for AxialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            for (v, k) in AxialVar::ALL.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{}", v.name())?,
                    _ => write!(f, "*{}^{k}", v.name())?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &AxialFunction {
    type Output = AxialFunction;
    fn add(self, rhs: &AxialFunction) -> AxialFunction {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &AxialFunction {
    type Output = AxialFunction;
    fn sub(self, rhs: &AxialFunction) -> AxialFunction {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &AxialFunction {
    type Output = AxialFunction;
    fn neg(self) -> AxialFunction {
        self.scalar_mul(&-Scalar::one())
    }
}

impl Mul for &AxialFunction {
    type Output = AxialFunction;
    fn mul(self, rhs: &AxialFunction) -> AxialFunction {
        let mut out = AxialFunction::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    fn of(mut exps: impl Iterator<Item = i32>) -> Self {
        let Some(first) = exps.next() else {
            return Parity::Even;
        };
        let odd = first.rem_euclid(2) == 1;
        if exps.all(|e| (e.rem_euclid(2) == 1) == odd) {
            if odd {
                Parity::Odd
            } else {
                Parity::Even
            }
        } else {
            Parity::Mixed
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "EVEN",
            Parity::Odd => "ODD",
            Parity::Mixed => "MIXED",
        })
    }
}

/// Parity of the `r`- and `rho`-exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParitySignature {
    pub in_r: Parity,
    pub in_rho: Parity,
}

impl ParitySignature {
    pub const EVEN_EVEN: Self = Self::new(Parity::Even, Parity::Even);
    pub const ODD_EVEN: Self = Self::new(Parity::Odd, Parity::Even);
    pub const EVEN_ODD: Self = Self::new(Parity::Even, Parity::Odd);
    pub const ODD_ODD: Self = Self::new(Parity::Odd, Parity::Odd);

    pub const fn new(in_r: Parity, in_rho: Parity) -> Self {
        Self { in_r, in_rho }
    }
}

impl fmt::Display for ParitySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.in_r, self.in_rho)
    }
}

/// `D_t(n) f = ((1/t) d_t)^n f`.
pub fn d_lower(f: &AxialFunction, var: AxialVar, n: u32) -> AxialFunction {
    let mut out = f.clone();
    for _ in 0..n {
        out = out.partial(var).shift(var, -1);
    }
    out
}

/// `D^t(n) f = d_t(D^t(n-1) f / t)`, `D^t(0) f = f`.
pub fn d_upper(f: &AxialFunction, var: AxialVar, n: u32) -> AxialFunction {
    let mut out = f.clone();
    for _ in 0..n {
        out = out.shift(var, -1).partial(var);
    }
    out
}

/// The five operator identities relating `D_t` and `D^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma1Identity {
    /// `d^2 D(n) f = D(n) d^2 f - 2n D(n+1) f`
    I,
    /// `d D(n-1)(f/t) = D^(n) f`
    II,
    /// `D^(n) d f = d D(n) f`
    III,
    /// `D(n) d f - d D^(n) f = (2n/t) D^(n) f`
    IV,
    /// `d^2 D^(n) f = D^(n) d^2 f - 2n D^(n+1) f`
    V,
}

impl Lemma1Identity {
    pub const ALL: [Lemma1Identity; 5] = [Self::I, Self::II, Self::III, Self::IV, Self::V];

    pub fn label(self) -> &'static str {
        match self {
            Self::I => "i",
            Self::II => "ii",
            Self::III => "iii",
            Self::IV => "iv",
            Self::V => "v",
        }
    }
}

/// Left side minus right side of the chosen identity; `n >= 1`.
pub fn lemma1_residual(
    which: Lemma1Identity,
    f: &AxialFunction,
    var: AxialVar,
    n: u32,
) -> AxialFunction {
    assert!(n >= 1, "identities are stated for n >= 1");
    let d = |g: &AxialFunction| g.partial(var);
    let two_n = int(2 * n as i64);
    match which {
        Lemma1Identity::I => {
            let lhs = d(&d(&d_lower(f, var, n)));
            let rhs = &d_lower(&d(&d(f)), var, n) - &d_lower(f, var, n + 1).scalar_mul(&two_n);
            &lhs - &rhs
        }
        Lemma1Identity::II => {
            let lhs = d(&d_lower(&f.shift(var, -1), var, n - 1));
            &lhs - &d_upper(f, var, n)
        }
        Lemma1Identity::III => &d_upper(&d(f), var, n) - &d(&d_lower(f, var, n)),
        Lemma1Identity::IV => {
            let lhs = &d_lower(&d(f), var, n) - &d(&d_upper(f, var, n));
            let rhs = d_upper(f, var, n).shift(var, -1).scalar_mul(&two_n);
            &lhs - &rhs
        }
        Lemma1Identity::V => {
            let lhs = d(&d(&d_upper(f, var, n)));
            let rhs = &d_upper(&d(&d(f)), var, n) - &d_upper(f, var, n + 1).scalar_mul(&two_n);
            &lhs - &rhs
        }
    }
}

/// `(d_x0^2 h + d_r^2 h, d_y0^2 h + d_rho^2 h)`.
pub fn harmonic_pair_residuals(h: &AxialFunction) -> (AxialFunction, AxialFunction) {
    let second = |v: AxialVar| h.partial(v).partial(v);
    (
        &second(AxialVar::X0) + &second(AxialVar::R),
        &second(AxialVar::Y0) + &second(AxialVar::Rho),
    )
}

/// The four axial coefficients of
/// `F = A P + B w P + C P n + D w P n` (`w = x_/r`, `n = y_/rho`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxialCoefficients {
    pub a: AxialFunction,
    pub b: AxialFunction,
    pub c: AxialFunction,
    pub d: AxialFunction,
}

impl AxialCoefficients {
    pub fn new(a: AxialFunction, b: AxialFunction, c: AxialFunction, d: AxialFunction) -> Self {
        Self { a, b, c, d }
    }

    pub fn slots(&self) -> [(&'static str, &AxialFunction, ParitySignature); 4] {
        [
            ("A", &self.a, ParitySignature::EVEN_EVEN),
            ("B", &self.b, ParitySignature::ODD_EVEN),
            ("C", &self.c, ParitySignature::EVEN_ODD),
            ("D", &self.d, ParitySignature::ODD_ODD),
        ]
    }

    pub fn parity_ok(&self) -> bool {
        self.slots().iter().all(|(_, f, p)| f.has_parity(*p))
    }

    pub fn scalar_mul(&self, q: &Scalar) -> Self {
        Self {
            a: self.a.scalar_mul(q),
            b: self.b.scalar_mul(q),
            c: self.c.scalar_mul(q),
            d: self.d.scalar_mul(q),
        }
    }
}

impl Add for &AxialCoefficients {
    type Output = AxialCoefficients;
    fn add(self, rhs: &AxialCoefficients) -> AxialCoefficients {
        AxialCoefficients {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

/// `(u1, v1, u2, v2)` satisfying the two coupled Cauchy-Riemann systems in
/// `x0 + i r` and `y0 + i rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolomorphicQuadruple {
    coeffs: AxialCoefficients,
    parity_ok: bool,
}

const CR_LABELS: [&str; 8] = [
    "d_x0 u1 = d_r v1",
    "d_r u1 = -d_x0 v1",
    "d_x0 u2 = d_r v2",
    "d_r u2 = -d_x0 v2",
    "d_y0 u1 = d_rho u2",
    "d_rho u1 = -d_y0 u2",
    "d_y0 v1 = d_rho v2",
    "d_rho v1 = -d_y0 v2",
];

impl HolomorphicQuadruple {
    /// Certifies all eight Cauchy-Riemann equations; parity is recorded, not
    /// enforced.
    pub fn new(
        u1: AxialFunction,
        v1: AxialFunction,
        u2: AxialFunction,
        v2: AxialFunction,
    ) -> Result<Self> {
        let coeffs = AxialCoefficients::new(u1, v1, u2, v2);
        let residuals = cr_residuals(&coeffs);
        if let Some(i) = residuals.iter().position(|r| !r.is_zero()) {
            return Err(Error::CauchyRiemann(CR_LABELS[i]));
        }
        let parity_ok = coeffs.parity_ok();
        Ok(Self { coeffs, parity_ok })
    }

    pub fn u1(&self) -> &AxialFunction {
        &self.coeffs.a
    }

    pub fn v1(&self) -> &AxialFunction {
        &self.coeffs.b
    }

    pub fn u2(&self) -> &AxialFunction {
        &self.coeffs.c
    }

    pub fn v2(&self) -> &AxialFunction {
        &self.coeffs.d
    }

    pub fn coefficients(&self) -> &AxialCoefficients {
        &self.coeffs
    }

    /// True when `(u1, v1, u2, v2)` have parities `(E,E), (O,E), (E,O), (O,O)`.
    pub fn parity_ok(&self) -> bool {
        self.parity_ok
    }

    pub fn cr_residuals(&self) -> [AxialFunction; 8] {
        cr_residuals(&self.coeffs)
    }

    /// Sum of two quadruples; the CR systems are linear.
    pub fn add(&self, other: &Self) -> Self {
        let coeffs = &self.coeffs + &other.coeffs;
        let parity_ok = coeffs.parity_ok();
        Self { coeffs, parity_ok }
    }
}

fn cr_residuals(q: &AxialCoefficients) -> [AxialFunction; 8] {
    use AxialVar::*;
    let (u1, v1, u2, v2) = (&q.a, &q.b, &q.c, &q.d);
    [
        &u1.partial(X0) - &v1.partial(R),
        &u1.partial(R) + &v1.partial(X0),
        &u2.partial(X0) - &v2.partial(R),
        &u2.partial(R) + &v2.partial(X0),
        &u1.partial(Y0) - &u2.partial(Rho),
        &u1.partial(Rho) + &u2.partial(Y0),
        &v1.partial(Y0) - &v2.partial(Rho),
        &v1.partial(Rho) + &v2.partial(Y0),
    ]
}

/// Real and imaginary parts of `(re + i im)^n`.
pub fn complex_power(n: u32, re: AxialVar, im: AxialVar) -> (AxialFunction, AxialFunction) {
    let mut a = AxialFunction::zero();
    let mut b = AxialFunction::zero();
    // (re + i im)^n = sum_j C(n, j) re^(n-j) (i im)^j
    let mut binom = BigInt::one();
    for j in 0..=n {
        let mut e = [0; 4];
        e[re.slot()] = (n - j) as i32;
        e[im.slot()] = j as i32;
        let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
        let q = Scalar::from_integer(&binom * sign);
        if j % 2 == 0 {
            a.add_term(e, q);
        } else {
            b.add_term(e, q);
        }
        binom = binom * (n - j) / (j + 1);
    }
    (a, b)
}

/// `(ac, bc, ad, bd)` from `(x0 + i r)^n = a + ib` and `(y0 + i rho)^p = c + id`.
pub fn quadruple_from_separable(n: u32, p: u32) -> HolomorphicQuadruple {
    let (a, b) = complex_power(n, AxialVar::X0, AxialVar::R);
    let (c, d) = complex_power(p, AxialVar::Y0, AxialVar::Rho);
    HolomorphicQuadruple::new(&a * &c, &b * &c, &a * &d, &b * &d)
        .expect("separable quadruple satisfies the CR systems")
}

/// `(u, v, v, -u)` from `u + iv` holomorphic in both `x0 + i r` and
/// `y0 + i rho`. The result usually fails the parity pattern, which is
/// reported through [`HolomorphicQuadruple::parity_ok`].
pub fn quadruple_from_two_variable(
    u: &AxialFunction,
    v: &AxialFunction,
) -> Result<HolomorphicQuadruple> {
    use AxialVar::*;
    let checks = [
        (&u.partial(X0) - &v.partial(R), "d_x0 u = d_r v"),
        (&u.partial(R) + &v.partial(X0), "d_r u = -d_x0 v"),
        (&u.partial(Y0) - &v.partial(Rho), "d_y0 u = d_rho v"),
        (&u.partial(Rho) + &v.partial(Y0), "d_rho u = -d_y0 v"),
    ];
    if let Some((_, label)) = checks.iter().find(|(r, _)| !r.is_zero()) {
        return Err(Error::CauchyRiemann(label));
    }
    HolomorphicQuadruple::new(u.clone(), v.clone(), v.clone(), -u)
}

/// The eight Vekua-type expressions; all vanish iff the system holds.
pub fn vekua_residuals(
    coeffs: &AxialCoefficients,
    k: usize,
    l: usize,
    m: usize,
) -> [AxialFunction; 8] {
    use AxialVar::*;
    let (a, b, c, d) = (&coeffs.a, &coeffs.b, &coeffs.c, &coeffs.d);
    let kx = int((2 * k + m) as i64 - 1);
    let ky = int((2 * l + m) as i64 - 1);
    let over_r = |f: &AxialFunction| f.shift(R, -1).scalar_mul(&kx);
    let over_rho = |f: &AxialFunction| f.shift(Rho, -1).scalar_mul(&ky);
    [
        &(&a.partial(X0) - &b.partial(R)) - &over_r(b),
        &b.partial(X0) + &a.partial(R),
        &(&c.partial(X0) - &d.partial(R)) - &over_r(d),
        &d.partial(X0) + &c.partial(R),
        &(&a.partial(Y0) - &c.partial(Rho)) - &over_rho(c),
        &c.partial(Y0) + &a.partial(Rho),
        &(&b.partial(Y0) - &d.partial(Rho)) - &over_rho(d),
        &d.partial(Y0) + &b.partial(Rho),
    ]
}

pub(crate) fn ensure_odd(m: usize) -> Result<()> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::EvenDimension(m));
    }
    Ok(())
}

/// Orders `(k + (m-1)/2, l + (m-1)/2)` of the Laplacian powers; `m` odd.
pub fn fueter_orders(k: usize, l: usize, m: usize) -> Result<(u32, u32)> {
    ensure_odd(m)?;
    let half = (m - 1) / 2;
    Ok(((k + half) as u32, (l + half) as u32))
}

/// `A = D_r D_rho u1`, `B = D^r D_rho v1`, `C = D_r D^rho u2`,
/// `D = D^r D^rho v2` at orders `(k + (m-1)/2, l + (m-1)/2)`.
pub fn closed_form_abcd(
    q: &HolomorphicQuadruple,
    k: usize,
    l: usize,
    m: usize,
) -> Result<AxialCoefficients> {
    let (nx, ny) = fueter_orders(k, l, m)?;
    use AxialVar::{Rho, R};
    Ok(AxialCoefficients {
        a: d_lower(&d_lower(q.u1(), R, nx), Rho, ny),
        b: d_lower(&d_upper(q.v1(), R, nx), Rho, ny),
        c: d_upper(&d_lower(q.u2(), R, nx), Rho, ny),
        d: d_upper(&d_upper(q.v2(), R, nx), Rho, ny),
    })
}

/// Replaces `x0^a r^{2s} y0^c rho^{2t}` by `x0^a |x_|^{2s} y0^c |y_|^{2t}`.
struct RadialPowers {
    ctx: AlgebraContext,
    r2: Vec<CliffPoly>,
    rho2: Vec<CliffPoly>,
}

impl RadialPowers {
    fn new(ctx: AlgebraContext) -> Self {
        Self {
            ctx,
            r2: vec![CliffPoly::one(ctx)],
            rho2: vec![CliffPoly::one(ctx)],
        }
    }

    fn power(&mut self, block: Block, s: usize) -> &CliffPoly {
        let ctx = self.ctx;
        let cache = match block {
            Block::X => &mut self.r2,
            Block::Y => &mut self.rho2,
        };
        while cache.len() <= s {
            let next = cache
                .last()
                .expect("nonempty")
                .mul(&CliffPoly::squared_radius(ctx, block))
                .expect("same context");
            cache.push(next);
        }
        &cache[s]
    }

    /// Scalar polynomial for an `(EVEN, EVEN)` function with non-negative
    /// exponents.
    fn scalar_poly(&mut self, f: &AxialFunction, slot: &'static str) -> Result<CliffPoly> {
        let ctx = self.ctx;
        let m = ctx.m();
        // group by radial exponents so each radial product is formed once
        let mut grouped: BTreeMap<(usize, usize), Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for (e, q) in f.terms() {
            if e.iter().any(|k| *k < 0) {
                return Err(Error::NotPolynomial {
                    slot,
                    term: AxialFunction::monomial(*e, q.clone()).to_string(),
                });
            }
            let mut exps = vec![0u32; 2 * (m + 1)];
            exps[VarId::x(0).position(m)] = e[0] as u32;
            exps[VarId::y(0).position(m)] = e[2] as u32;
            let mono = Monomial::from_exponents(&exps)?;
            grouped
                .entry((e[1] as usize / 2, e[3] as usize / 2))
                .or_default()
                .push((mono, q.clone()));
        }
        let mut out = CliffPoly::zero(ctx);
        for ((s, t), terms) in grouped {
            let axial_part = CliffPoly::from_terms(
                ctx,
                terms
                    .into_iter()
                    .map(|(mono, q)| (mono, crate::clifford::Multivector::scalar(ctx, q))),
            )?;
            let radial = self
                .power(Block::X, s)
                .clone()
                .mul(self.power(Block::Y, t))?;
            out = out.add(&axial_part.mul(&radial)?)?;
        }
        Ok(out)
    }
}

/// Exact polynomial `A P + B w P + C P n + D w P n`.
///
/// Requires slot parities `(E,E), (O,E), (E,O), (O,O)`; after dividing out
/// the `r`/`rho` carried by `w`/`n`, every exponent must be non-negative.
/// `x_` factors multiply `P` from the left and `y_` factors from the right.
pub fn substitute(coeffs: &AxialCoefficients, p: &BiregularPoly) -> Result<CliffPoly> {
    substitute_poly(coeffs, p.poly())
}

pub(crate) fn substitute_poly(coeffs: &AxialCoefficients, p: &CliffPoly) -> Result<CliffPoly> {
    for (slot, f, expected) in coeffs.slots() {
        if !f.has_parity(expected) {
            return Err(Error::ParityViolation {
                slot,
                expected: expected.to_string(),
                found: f.parity().to_string(),
            });
        }
    }
    let ctx = p.context();
    let mut radial = RadialPowers::new(ctx);
    let s_a = radial.scalar_poly(&coeffs.a, "A")?;
    let s_b = radial.scalar_poly(&coeffs.b.shift(AxialVar::R, -1), "B")?;
    let s_c = radial.scalar_poly(&coeffs.c.shift(AxialVar::Rho, -1), "C")?;
    let s_d = radial.scalar_poly(
        &coeffs.d.shift(AxialVar::R, -1).shift(AxialVar::Rho, -1),
        "D",
    )?;

    let xv = CliffPoly::vector_variable(ctx, Block::X);
    let yv = CliffPoly::vector_variable(ctx, Block::Y);
    let left_plain = s_a.add(&xv.mul(&s_b)?)?;
    let left_nu = s_c.add(&xv.mul(&s_d)?)?;
    let mut out = left_plain.mul(p)?;
    if !left_nu.is_zero() {
        out = out.add(&left_nu.mul(p)?.mul(&yv)?)?;
    }
    Ok(out)
}

/// Which of the four Laplacian-power formulas to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma2Form {
    /// `Lap_x^n (h P)`
    DxPlain,
    /// `Lap_x^n (h w P)`
    DxOmega,
    /// `Lap_y^n (h P)`
    DyPlain,
    /// `Lap_y^n (h P n)`
    DyNu,
}

impl Lemma2Form {
    pub const ALL: [Lemma2Form; 4] = [Self::DxPlain, Self::DxOmega, Self::DyPlain, Self::DyNu];

    pub fn block(self) -> Block {
        match self {
            Self::DxPlain | Self::DxOmega => Block::X,
            Self::DyPlain | Self::DyNu => Block::Y,
        }
    }

    /// Parity `h` must have for `h`, `h w` or `h n` to be a polynomial.
    pub fn required_parity(self) -> ParitySignature {
        match self {
            Self::DxPlain | Self::DyPlain => ParitySignature::EVEN_EVEN,
            Self::DxOmega => ParitySignature::ODD_EVEN,
            Self::DyNu => ParitySignature::EVEN_ODD,
        }
    }

    /// Places `g` in the coefficient slot this form multiplies.
    pub fn embed(self, g: AxialFunction) -> AxialCoefficients {
        let mut out = AxialCoefficients::default();
        match self {
            Self::DxPlain | Self::DyPlain => out.a = g,
            Self::DxOmega => out.b = g,
            Self::DyNu => out.c = g,
        }
        out
    }

    /// `D_r(n)`, `D^r(n)`, `D_rho(n)` or `D^rho(n)` applied to `h`.
    pub fn reduce(self, h: &AxialFunction, n: u32) -> AxialFunction {
        match self {
            Self::DxPlain => d_lower(h, AxialVar::R, n),
            Self::DxOmega => d_upper(h, AxialVar::R, n),
            Self::DyPlain => d_lower(h, AxialVar::Rho, n),
            Self::DyNu => d_upper(h, AxialVar::Rho, n),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::DxPlain => "Dx_plain",
            Self::DxOmega => "Dx_omega",
            Self::DyPlain => "Dy_plain",
            Self::DyNu => "Dy_nu",
        }
    }

    /// Constant `prod_{j=1}^n (2k + m - (2j-1))` with `k` or `l` per block.
    pub fn constant(self, n: u32, k: usize, l: usize, m: usize) -> BigInt {
        let deg = match self.block() {
            Block::X => k,
            Block::Y => l,
        };
        double_factorial_product(deg as u64, m as u64, n as u64)
    }
}

/// Both sides of the Laplacian-power formula, without checking the
/// harmonicity precondition. Use [`lemma2_check`] unless a violated
/// precondition is the point.
pub fn lemma2_sides(
    h: &AxialFunction,
    n: u32,
    p: &BiregularPoly,
    form: Lemma2Form,
) -> Result<(CliffPoly, CliffPoly)> {
    let lhs = substitute(&form.embed(h.clone()), p)?.laplacian_power(form.block(), n);
    let constant = Scalar::from_integer(form.constant(n, p.k(), p.l(), p.m()));
    let rhs = substitute(&form.embed(form.reduce(h, n)), p)?.scalar_mul(&constant);
    Ok((lhs, rhs))
}

/// `(lhs, rhs)` of the chosen formula; equal polynomials certify the
/// instance.
pub fn lemma2_check(
    h: &AxialFunction,
    n: u32,
    p: &BiregularPoly,
    form: Lemma2Form,
) -> Result<(CliffPoly, CliffPoly)> {
    let (hx, hy) = harmonic_pair_residuals(h);
    if !hx.is_zero() || !hy.is_zero() {
        return Err(Error::NotHarmonic);
    }
    let expected = form.required_parity();
    if !h.has_parity(expected) {
        return Err(Error::ParityViolation {
            slot: "h",
            expected: expected.to_string(),
            found: h.parity().to_string(),
        });
    }
    lemma2_sides(h, n, p, form)
}
