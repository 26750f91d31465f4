use num_bigint::BigInt;
use proptest::prelude::*;

use grassmann_gl::exactpoly::Window;
use grassmann_gl::fermion_oracle::WedgeElement;
use grassmann_gl::partitions::{enumerate_box, Partition};
use grassmann_gl::schubert_ops::{act_elementary, action_first_form};
use grassmann_gl::symfunc::{project, straighten};
use grassmann_gl::{HSequence, LaurentWindow, RingElement, SchurExpansion};

fn element(arity: usize) -> impl Strategy<Value = RingElement> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, arity), -20i64..20),
        0..6,
    )
    .prop_map(move |terms| {
        RingElement::from_terms(arity, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn partition_in_box(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_box(rows, cols, None);
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn wedge(degree: usize) -> impl Strategy<Value = WedgeElement> {
    prop::collection::vec((prop::collection::vec(0usize..10, degree), -5i64..5), 1..4).prop_map(
        move |terms| {
            terms.into_iter().fold(WedgeElement::zero(degree), |acc, (idx, c)| {
                acc.add(&WedgeElement::monomial(&idx).scale(&BigInt::from(c)))
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in element(3), b in element(3), c in element(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a + &b) - &b - &a).is_zero());
    }

    #[test]
    fn straighten_inverts_to_ring(a in element(3)) {
        let h = HSequence::new(3);
        let s = straighten(&a, &h).unwrap();
        prop_assert_eq!(s.to_ring(&h).unwrap(), a);
    }

    #[test]
    fn json_round_trips(a in element(2), lam in partition_in_box(2, 2)) {
        let s = serde_json::to_string(&a).unwrap();
        let back: RingElement = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        let x = SchurExpansion::basis(2, Some(4), lam).unwrap().scale(&BigInt::from(-7));
        let s = serde_json::to_string(&x).unwrap();
        let back: SchurExpansion = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn wider_windows_restrict_to_narrower(lam in partition_in_box(2, 3), small in 0i64..5, extra in 1i64..4) {
        let h = HSequence::new(2);
        let narrow = action_first_form(&lam, &h, small).unwrap();
        let wide = action_first_form(&lam, &h, small + extra).unwrap();
        prop_assert_eq!(wide.truncate(Some(small), None).unwrap(), narrow);
    }

    #[test]
    fn series_products_are_stable_under_truncation(
        a in prop::collection::vec(element(1), 8),
        b in prop::collection::vec(element(1), 8),
        k in 0i64..4,
    ) {
        // a(z), b(z/w) known through order `top`
        let series = |c: &[RingElement], top: i64, w: bool| {
            let window = if w {
                Window::new(0, Some(top), Some(-top), 0)
            } else {
                Window::new(0, Some(top), None, 0)
            };
            let entries = c.iter().take(top as usize + 1).enumerate().map(|(i, v)| {
                let i = i as i64;
                ((i, if w { -i } else { 0 }), v.clone())
            });
            LaurentWindow::from_parts(1, window, entries).unwrap()
        };
        let narrow = series(&a, k, false).mul(&series(&b, k, true)).unwrap();
        let wide = series(&a, k + 3, false).mul(&series(&b, k + 3, true)).unwrap();
        let w = narrow.window();
        prop_assert_eq!(wide.truncate(w.z_max, w.w_min).unwrap(), narrow);
    }

    #[test]
    fn clifford(u in wedge(2), i in 0usize..9, j in 0usize..9) {
        let lhs = WedgeElement::b(i).wedge(&u.contract(j)).add(&WedgeElement::b(i).wedge(&u).contract(j));
        let rhs = if i == j { u.clone() } else { WedgeElement::zero(2) };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_linear(a in -5i64..5, b in -5i64..5, l1 in partition_in_box(2, 2), l2 in partition_in_box(2, 2), i in 0usize..4, j in 0usize..4) {
        let h = HSequence::new(2);
        let x1 = SchurExpansion::basis(2, Some(4), l1).unwrap();
        let x2 = SchurExpansion::basis(2, Some(4), l2).unwrap();
        let sum = x1.scale(&BigInt::from(a)).add(&x2.scale(&BigInt::from(b))).unwrap();
        let lhs = act_elementary(i, j, &sum, &h).unwrap();
        let rhs = act_elementary(i, j, &x1, &h).unwrap().scale(&BigInt::from(a))
            .add(&act_elementary(i, j, &x2, &h).unwrap().scale(&BigInt::from(b))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_is_idempotent(a in element(2)) {
        let h = HSequence::new(2);
        let once = project(&straighten(&a, &h).unwrap(), 4).unwrap();
        let twice = project(&once, 4).unwrap();
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn laurent_json_round_trip() {
    let h = HSequence::new(2);
    let lam = Partition::new(vec![1, 1]).unwrap();
    let s = action_first_form(&lam, &h, 4).unwrap();
    let text = serde_json::to_string(&s).unwrap();
    let back: LaurentWindow = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}
