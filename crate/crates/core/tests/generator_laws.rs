use bireg::clifford::int;
use bireg::generators::{biregular_poly, fueter_variable, symmetrized_product};
use bireg::mvpoly::{Block, OperatorSpec, Side};
use proptest::prelude::*;

#[test]
fn fueter_variables_are_monogenic() {
    for m in 2..=5 {
        for j in 2..=m {
            let z = fueter_variable(Side::Left, j, m).unwrap();
            assert!(z.poly().apply_cr(OperatorSpec::DX).is_zero());
            let w = fueter_variable(Side::Right, j, m).unwrap();
            assert!(w.poly().apply_cr(OperatorSpec::DY_RIGHT).is_zero());
        }
    }
}

#[test]
fn rejects_out_of_range_indices() {
    assert!(fueter_variable(Side::Left, 1, 3).is_err());
    assert!(fueter_variable(Side::Left, 4, 3).is_err());
    assert!(symmetrized_product(&[2, 5], Side::Right, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn homogeneous_and_biregular(
        m in 2usize..=4,
        left in prop::collection::vec(2usize..=4, 0..=3),
        right in prop::collection::vec(2usize..=4, 0..=3),
    ) {
        let left: Vec<usize> = left.into_iter().map(|j| 2 + (j - 2) % (m - 1)).collect();
        let right: Vec<usize> = right.into_iter().map(|j| 2 + (j - 2) % (m - 1)).collect();
        let p = biregular_poly(&left, &right, m).unwrap();
        let (k, l) = (left.len(), right.len());
        prop_assert_eq!(p.poly().bidegree(), Some((k as u32, l as u32)));
        prop_assert_eq!(p.poly().euler(Block::X), p.poly().scalar_mul(&int(k as i64)));
        prop_assert_eq!(p.poly().euler(Block::Y), p.poly().scalar_mul(&int(l as i64)));
        let (rx, ry) = p.residuals();
        prop_assert!(rx.is_zero() && ry.is_zero());
    }

    #[test]
    fn symmetrized_product_ignores_order(m in 3usize..=4, mut idx in prop::collection::vec(2usize..=4, 1..=3)) {
        for j in idx.iter_mut() {
            *j = 2 + (*j - 2) % (m - 1);
        }
        let a = symmetrized_product(&idx, Side::Left, m).unwrap();
        idx.reverse();
        prop_assert_eq!(symmetrized_product(&idx, Side::Left, m).unwrap(), a);
    }
}
