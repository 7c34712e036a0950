//! Homogeneous biregular polynomials `P_{k,l}(x_, y_) = P_k(x_) Q_l(y_)`.
//!
//! `P_k` is a symmetrized product of left Fueter variables
//! `z_j = x_j + e_1 e_j x_1` and `Q_l` one of right Fueter variables
//! `w_j = y_j + y_1 e_j e_1`. Each factor depends on one block only, so the
//! product is left monogenic in `x_` and right monogenic in `y_`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::clifford::{AlgebraContext, Blade, Multivector, Scalar};
use crate::error::{Error, Result};
use crate::mvpoly::{Block, CliffPoly, OperatorSpec, Side, VarId};

/// Degree-one monogenic polynomial `z_j` (left) or `w_j` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FueterVariable {
    side: Side,
    index: usize,
    poly: CliffPoly,
}

impl FueterVariable {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn poly(&self) -> &CliffPoly {
        &self.poly
    }

    pub fn into_poly(self) -> CliffPoly {
        self.poly
    }
}

fn side_block(side: Side) -> Block {
    match side {
        Side::Left => Block::X,
        Side::Right => Block::Y,
    }
}

/// Dirac operator matching the side: `d_x_ p` or `p d_y_`.
fn side_residual(p: &CliffPoly, side: Side) -> CliffPoly {
    match side {
        Side::Left => p.apply_cr(OperatorSpec::DIRAC_X),
        Side::Right => p.apply_cr(OperatorSpec::DIRAC_Y_RIGHT),
    }
}

fn check_index(j: usize, m: usize) -> Result<()> {
    if j < 2 || j > m {
        return Err(Error::IndexOutOfRange {
            index: j,
            lo: 2,
            hi: m,
        });
    }
    Ok(())
}

pub fn fueter_variable(side: Side, j: usize, m: usize) -> Result<FueterVariable> {
    let ctx = AlgebraContext::new(m)?;
    check_index(j, m)?;
    let block = side_block(side);
    // e_1 e_j for the left variable, e_j e_1 for the right one.
    let unit = match side {
        Side::Left => Blade::generator(1).product(Blade::generator(j)),
        Side::Right => Blade::generator(j).product(Blade::generator(1)),
    };
    let sign = if unit.1 {
        -Scalar::one()
    } else {
        Scalar::one()
    };
    let coef = Multivector::basis(ctx, unit.0, sign);
    let poly = CliffPoly::var(ctx, VarId { block, index: j })?.add(&CliffPoly::term(
        ctx,
        &[(VarId { block, index: 1 }, 1)],
        coef,
    )?)?;
    if !side_residual(&poly, side).is_zero() {
        return Err(Error::TheoremViolation(format!(
            "Fueter variable {j} is not monogenic"
        )));
    }
    Ok(FueterVariable {
        side,
        index: j,
        poly,
    })
}

/// `(1/k!) sum_{sigma} V_{j_sigma(1)} ... V_{j_sigma(k)}`, certified monogenic
/// on the given side. The empty list gives 1.
pub fn symmetrized_product(indices: &[usize], side: Side, m: usize) -> Result<CliffPoly> {
    let ctx = AlgebraContext::new(m)?;
    for &j in indices {
        check_index(j, m)?;
    }
    let vars: Vec<CliffPoly> = indices
        .iter()
        .map(|&j| fueter_variable(side, j, m).map(FueterVariable::into_poly))
        .collect::<Result<_>>()?;
    if vars.is_empty() {
        return Ok(CliffPoly::one(ctx));
    }
    let k = vars.len();
    let mut sum = CliffPoly::zero(ctx);
    for perm in (0..k).permutations(k) {
        let mut prod = CliffPoly::one(ctx);
        for i in perm {
            prod = prod.mul(&vars[i])?;
        }
        sum = sum.add(&prod)?;
    }
    let k_factorial: BigInt = (1..=k).map(BigInt::from).product();
    let out = sum.scalar_mul(&Scalar::new(BigInt::one(), k_factorial));
    if !side_residual(&out, side).is_zero() {
        return Err(Error::TheoremViolation(format!(
            "symmetrized product {indices:?} is not monogenic"
        )));
    }
    Ok(out)
}

/// Certified homogeneous biregular polynomial of bidegree `(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiregularPoly {
    poly: CliffPoly,
    m: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl BiregularPoly {
    pub fn poly(&self) -> &CliffPoly {
        &self.poly
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.left.len()
    }

    pub fn l(&self) -> usize {
        self.right.len()
    }

    pub fn left_indices(&self) -> &[usize] {
        &self.left
    }

    pub fn right_indices(&self) -> &[usize] {
        &self.right
    }

    pub fn context(&self) -> AlgebraContext {
        self.poly.context()
    }

    /// `(d_x_ P, P d_y_)`.
    pub fn residuals(&self) -> (CliffPoly, CliffPoly) {
        (
            side_residual(&self.poly, Side::Left),
            side_residual(&self.poly, Side::Right),
        )
    }
}

/// `P_k(x_) Q_l(y_)` from left indices (in `x_`) and right indices (in `y_`).
pub fn biregular_poly(left: &[usize], right: &[usize], m: usize) -> Result<BiregularPoly> {
    let pk = symmetrized_product(left, Side::Left, m)?;
    let ql = symmetrized_product(right, Side::Right, m)?;
    let poly = pk.mul(&ql)?;
    let out = BiregularPoly {
        poly,
        m,
        left: left.to_vec(),
        right: right.to_vec(),
    };
    let (dx, dy) = out.residuals();
    if !dx.is_zero() || !dy.is_zero() {
        return Err(Error::TheoremViolation(format!(
            "P({left:?}, {right:?}) is not biregular"
        )));
    }
    Ok(out)
}

/// Default member of the family for bidegree `(k, l)`: indices cycle through
/// `2..=m`, e.g. `[2, 3, 2, ...]`.
pub fn default_indices(degree: usize, m: usize) -> Vec<usize> {
    if m < 2 {
        return Vec::new();
    }
    (0..degree).map(|i| 2 + i % (m - 1)).collect()
}

pub fn default_biregular_poly(k: usize, l: usize, m: usize) -> Result<BiregularPoly> {
    if m < 2 && (k > 0 || l > 0) {
        return Err(Error::BidegreeMismatch(format!(
            "m = {m} supports only k = l = 0"
        )));
    }
    biregular_poly(&default_indices(k, m), &default_indices(l, m), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::int;
    use crate::mvpoly::Block;

    #[test]
    fn left_fueter_variable() {
        let z = fueter_variable(Side::Left, 2, 3).unwrap();
        let ctx = AlgebraContext::new(3).unwrap();
        let e12 = Multivector::basis(ctx, Blade::from_mask(0b11), int(1));
        let want = CliffPoly::var(ctx, VarId::x(2))
            .unwrap()
            .add(&CliffPoly::term(ctx, &[(VarId::x(1), 1)], e12).unwrap())
            .unwrap();
        assert_eq!(z.poly(), &want);
        assert!(z.poly().apply_cr(OperatorSpec::DIRAC_X).is_zero());
    }

    #[test]
    fn right_fueter_variable() {
        let w = fueter_variable(Side::Right, 2, 3).unwrap();
        let ctx = AlgebraContext::new(3).unwrap();
        // e2 e1 = -e12
        let e21 = Multivector::basis(ctx, Blade::from_mask(0b11), int(-1));
        let want = CliffPoly::var(ctx, VarId::y(2))
            .unwrap()
            .add(&CliffPoly::term(ctx, &[(VarId::y(1), 1)], e21).unwrap())
            .unwrap();
        assert_eq!(w.poly(), &want);
        assert!(w.poly().apply_cr(OperatorSpec::DIRAC_Y_RIGHT).is_zero());
        // and it is not left monogenic in general
        assert!(!w
            .poly()
            .apply_cr(OperatorSpec::new(Block::Y, Side::Left, false))
            .is_zero());
    }

    #[test]
    fn fueter_variable_index_errors() {
        assert!(fueter_variable(Side::Left, 1, 3).is_err());
        assert!(fueter_variable(Side::Left, 4, 3).is_err());
        assert!(fueter_variable(Side::Right, 2, 1).is_err());
    }

    #[test]
    fn symmetrized_products() {
        let ctx = AlgebraContext::new(3).unwrap();
        assert_eq!(
            symmetrized_product(&[], Side::Left, 3).unwrap(),
            CliffPoly::one(ctx)
        );
        assert_eq!(
            symmetrized_product(&[2], Side::Left, 3).unwrap(),
            fueter_variable(Side::Left, 2, 3).unwrap().into_poly()
        );
        let p = symmetrized_product(&[2, 3], Side::Left, 3).unwrap();
        assert!(p.apply_cr(OperatorSpec::DIRAC_X).is_zero());
        // the plain product z2 z3 is not monogenic; symmetrization is what fixes it
        let z2 = fueter_variable(Side::Left, 2, 3).unwrap().into_poly();
        let z3 = fueter_variable(Side::Left, 3, 3).unwrap().into_poly();
        assert!(!z2
            .mul(&z3)
            .unwrap()
            .apply_cr(OperatorSpec::DIRAC_X)
            .is_zero());
        assert!(symmetrized_product(&[2, 5], Side::Left, 3).is_err());
    }

    #[test]
    fn biregular_examples() {
        let p00 = biregular_poly(&[], &[], 1).unwrap();
        assert_eq!(p00.poly(), &CliffPoly::one(AlgebraContext::new(1).unwrap()));
        for (left, right, m) in [(vec![2], vec![2], 3), (vec![2, 3], vec![2], 5)] {
            let p = biregular_poly(&left, &right, m).unwrap();
            assert!(p.poly().apply_cr(OperatorSpec::DIRAC_X).is_zero());
            assert!(p.poly().apply_cr(OperatorSpec::DIRAC_Y_RIGHT).is_zero());
            assert_eq!(
                p.poly().bidegree(),
                Some((left.len() as u32, right.len() as u32))
            );
        }
        assert!(default_biregular_poly(1, 0, 1).is_err());
        assert_eq!(default_indices(3, 3), vec![2, 3, 2]);
    }
}
