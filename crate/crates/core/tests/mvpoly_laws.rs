mod common;

use bireg::clifford::int;
use bireg::json::{poly_from_str, poly_to_string};
use bireg::mvpoly::{Block, CliffPoly, OperatorSpec, Side, VarId};
use common::*;
use proptest::prelude::*;

const M: usize = 3;

fn dirac_x(p: &CliffPoly) -> CliffPoly {
    p.apply_cr(OperatorSpec::DIRAC_X)
}

fn dirac_y_right(p: &CliffPoly) -> CliffPoly {
    p.apply_cr(OperatorSpec::DIRAC_Y_RIGHT)
}

/// `sum_j f_j e_j` from scalar component polynomials.
fn vector_field(components: &[CliffPoly]) -> CliffPoly {
    let c = ctx(M);
    components
        .iter()
        .enumerate()
        .fold(CliffPoly::zero(c), |acc, (j, f)| {
            let ej = bireg::Multivector::generator(c, j + 1).unwrap();
            acc.add(&f.right_mul_multivector(&ej).unwrap()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cauchy_riemann_factorizes_laplacian(p in cliff_poly(M, 6, 4)) {
        for block in [Block::X, Block::Y] {
            for side in [Side::Left, Side::Right] {
                let spec = OperatorSpec::new(block, side, true);
                let lap = p.laplacian(block);
                prop_assert_eq!(p.apply_cr(spec).apply_cr_conjugate(spec), lap.clone());
                prop_assert_eq!(p.apply_cr_conjugate(spec).apply_cr(spec), lap);
            }
        }
    }

    #[test]
    fn scalar_leibniz_rules(phi in scalar_poly(M, 4, 3), g in cliff_poly(M, 4, 3)) {
        // d_x_(phi g) = (d_x_ phi) g + phi (d_x_ g)
        let lhs = dirac_x(&phi.mul(&g).unwrap());
        let rhs = dirac_x(&phi).mul(&g).unwrap().add(&phi.mul(&dirac_x(&g)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // (phi g) d_y_ = g (d_y_ phi) + phi (g d_y_)
        let lhs = dirac_y_right(&phi.mul(&g).unwrap());
        let rhs = g.mul(&dirac_y_right(&phi)).unwrap().add(&phi.mul(&dirac_y_right(&g)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_leibniz_rules(
        fs in prop::collection::vec(scalar_poly(M, 3, 3), M),
        g in cliff_poly(M, 4, 3),
    ) {
        let f = vector_field(&fs);
        // d_x_(f g) = (d_x_ f) g - f (d_x_ g) - 2 sum_j f_j d_{x_j} g
        let mut rhs = dirac_x(&f).mul(&g).unwrap().sub(&f.mul(&dirac_x(&g)).unwrap()).unwrap();
        for (j, fj) in fs.iter().enumerate() {
            let t = fj.mul(&g.partial(VarId::x(j + 1))).unwrap().scalar_mul(&int(2));
            rhs = rhs.sub(&t).unwrap();
        }
        prop_assert_eq!(dirac_x(&f.mul(&g).unwrap()), rhs);

        // (g f) d_y_ = g (f d_y_) - (g d_y_) f - 2 sum_j f_j d_{y_j} g
        let mut rhs = g.mul(&dirac_y_right(&f)).unwrap().sub(&dirac_y_right(&g).mul(&f).unwrap()).unwrap();
        for (j, fj) in fs.iter().enumerate() {
            let t = fj.mul(&g.partial(VarId::y(j + 1))).unwrap().scalar_mul(&int(2));
            rhs = rhs.sub(&t).unwrap();
        }
        prop_assert_eq!(dirac_y_right(&g.mul(&f).unwrap()), rhs);
    }

    #[test]
    fn mixed_laplacians_commute(p in cliff_poly(M, 6, 4)) {
        prop_assert_eq!(
            p.laplacian(Block::X).laplacian(Block::Y),
            p.laplacian(Block::Y).laplacian(Block::X)
        );
    }

    #[test]
    fn operators_are_linear(p in cliff_poly(2, 5, 4), q in cliff_poly(2, 5, 4), s in small_rational()) {
        let comb = p.add(&q.scalar_mul(&s)).unwrap();
        for spec in [OperatorSpec::DX, OperatorSpec::DY_RIGHT, OperatorSpec::DIRAC_X] {
            let want = p.apply_cr(spec).add(&q.apply_cr(spec).scalar_mul(&s)).unwrap();
            prop_assert_eq!(comb.apply_cr(spec), want);
        }
        let want = p.laplacian(Block::X).add(&q.laplacian(Block::X).scalar_mul(&s)).unwrap();
        prop_assert_eq!(comb.laplacian(Block::X), want);
    }

    #[test]
    fn json_round_trip(p in cliff_poly(M, 8, 5)) {
        prop_assert_eq!(poly_from_str(&poly_to_string(&p)).unwrap(), p);
    }
}
