//! Property tests for the structural invariants of the algebra layers:
//! ring laws and exact division in the polynomial ring, order axioms in the
//! partition combinatorics, and field laws for the rational-function scalars.

use jackpieri::combinatorics::{dominance_leq, partitions_up_to, Partition};
use jackpieri::field::{DValue, FieldElement};
use jackpieri::polyring::MultiPoly;
use proptest::prelude::*;
use std::str::FromStr;

fn d() -> DValue {
    DValue::rational(3, 1)
}

/// Sparse random polynomial in `rank` variables with small integer
/// coefficients and exponents.
fn arb_poly(rank: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (
        prop::collection::vec(0u32..4, rank),
        -5i64..=5,
    );
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        let dv = d();
        let mut p = MultiPoly::zero(rank);
        for (expo, c) in terms {
            let mono = MultiPoly::monomial(rank, expo, dv.scalar_int(c));
            p = p.add(&mono);
        }
        p
    })
}

fn arb_scalar() -> impl Strategy<Value = FieldElement> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, m)| d().scalar(jackpieri::field::rat(n, m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_distributes(p in arb_poly(3), q in arb_poly(3), s in arb_poly(3)) {
        let lhs = p.add(&q).mul(&s);
        let rhs = p.mul(&s).add(&q.mul(&s));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn multiplication_commutes_and_associates(p in arb_poly(2), q in arb_poly(2), s in arb_poly(2)) {
        prop_assert!(p.mul(&q).sub(&q.mul(&p)).is_zero());
        prop_assert!(p.mul(&q).mul(&s).sub(&p.mul(&q.mul(&s))).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(3), q in arb_poly(3)) {
        prop_assume!(!q.is_zero());
        let prod = p.mul(&q);
        let back = prod.divide_exact(&q).expect("exact division of a product");
        prop_assert!(back.sub(&p).is_zero());
    }

    #[test]
    fn partial_derivatives_commute(p in arb_poly(3)) {
        let ab = p.partial_derivative(0).partial_derivative(1);
        let ba = p.partial_derivative(1).partial_derivative(0);
        prop_assert!(ab.sub(&ba).is_zero());
    }

    #[test]
    fn scalar_field_laws(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        // distributivity and associativity over the scalar field
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        prop_assert!((&lhs - &rhs).is_zero());
        if !b.is_zero() {
            let inv = a.checked_div(&b).unwrap();
            prop_assert!((&(&inv * &b) - &a).is_zero());
        }
    }
}

#[test]
fn dominance_is_a_partial_order_on_small_grids() {
    for r in 1..=4usize {
        let grid = partitions_up_to(6, r);
        for a in &grid {
            assert_eq!(dominance_leq(a, a), Ok(true));
            for b in &grid {
                if a.weight() != b.weight() {
                    continue;
                }
                let ab = dominance_leq(a, b).unwrap();
                let ba = dominance_leq(b, a).unwrap();
                // antisymmetry
                if ab && ba {
                    assert_eq!(a, b);
                }
                // transitivity
                for c in &grid {
                    if c.weight() != a.weight() {
                        continue;
                    }
                    if ab && dominance_leq(b, c).unwrap() {
                        assert!(dominance_leq(a, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn partition_text_round_trip() {
    for r in 1..=4usize {
        for p in partitions_up_to(5, r) {
            let s = p.to_string();
            assert_eq!(Partition::from_str(&s).unwrap(), p);
        }
    }
}
