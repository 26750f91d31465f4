//! Worked examples, each checked against an independent computation.

use num_bigint::BigInt;

use grassmann_gl::fermion_oracle::WedgeElement;
use grassmann_gl::partitions::{enumerate_box, Partition};
use grassmann_gl::schubert_ops::{
    act_matrix, action_first_form, action_second_form, gamma, gamma_star, mixed_determinant,
    GammaVariant, GlMatrix, TwistedHSequence,
};
use grassmann_gl::verify::{gamma_oracle, gamma_star_oracle, oracle_action};
use grassmann_gl::{HSequence, LaurentWindow, RingElement, SchurExpansion, Window};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn partition_operations() {
    assert_eq!(p(&[2, 2]).remove_part(1).unwrap(), p(&[2]));
    assert_eq!(p(&[3, 1]).remove_part(2).unwrap(), p(&[3]));
    assert_eq!(p(&[5, 3, 3, 1]).remove_part(3).unwrap(), p(&[5, 3, 1]));
    assert!(p(&[1]).remove_part(0).is_err());
    assert_eq!(p(&[2, 1]).add_ones(2).unwrap(), p(&[3, 2]));
    assert_eq!(Partition::empty().add_ones(3).unwrap(), p(&[1, 1, 1]));
    assert_eq!(p(&[4, 4]).add_ones(4).unwrap(), p(&[5, 5, 1, 1]));
    assert!(p(&[1, 1, 1]).add_ones(2).is_err());
    let b = enumerate_box(2, 2, None);
    let shown: Vec<String> = b.iter().map(|l| l.to_string()).collect();
    assert_eq!(shown, ["0", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"]);
    assert_eq!(enumerate_box(0, 5, None), vec![Partition::empty()]);
    assert_eq!(enumerate_box(2, 2, Some(2)), vec![p(&[2]), p(&[1, 1])]);
}

#[test]
fn products_and_inverses() {
    let h = HSequence::new(2);
    assert_eq!((&h.h(1) * &h.h(2)).to_string(), "e1^3 - e1*e2");
    let h1 = HSequence::new(1);
    let inv = h1.generating_series(3).unwrap();
    let e1 = h1.e(1);
    for k in 0..=3 {
        assert_eq!(inv.coeff(k, 0).unwrap(), e1.pow(k as u32));
    }
    // (1 + z)(1 - z) on [0, 2]
    let a = LaurentWindow::from_parts(
        0,
        Window::new(0, Some(2), None, 0),
        [((0, 0), RingElement::one(0)), ((1, 0), RingElement::one(0))],
    )
    .unwrap();
    let b = LaurentWindow::from_parts(
        0,
        Window::new(0, Some(2), None, 0),
        [((0, 0), RingElement::one(0)), ((1, 0), RingElement::constant(0, -1))],
    )
    .unwrap();
    let c = a.mul(&b).unwrap();
    assert_eq!(c.window(), Window::new(0, Some(2), None, 0));
    assert_eq!(c.len(), 2);
    assert_eq!(c.coeff(2, 0).unwrap(), RingElement::constant(0, -1));
    let g = LaurentWindow::geometric_zw(0, 3);
    let same = g.mul(&LaurentWindow::constant(RingElement::one(0))).unwrap();
    assert_eq!(same, g);
    assert_eq!(g.window(), Window::new(0, Some(3), Some(-3), 0));
}

#[test]
fn example_series_prefix() {
    // [(1/w)(h1 - h2 z) + (1/w^2)(h1 z - 1)] (1 + h1 z + h2 z^2 + ..)
    let h = HSequence::new(2);
    let s = action_first_form(&p(&[1, 1]), &h, 5).unwrap();
    let inv = h.generating_series(5).unwrap();
    let bracket = LaurentWindow::polynomial(
        2,
        [
            ((0, -1), h.h(1)),
            ((1, -1), -h.h(2)),
            ((1, -2), h.h(1)),
            ((0, -2), RingElement::constant(2, -1)),
        ],
    );
    let expect = bracket.mul(&inv).unwrap();
    assert!(s.agrees_with(&expect));
    assert!(expect.coeff(5, -1).is_ok());
}

#[test]
fn mixed_determinant_for_e2() {
    // det [[w^{-1}, 1], [h2 - h1/z, h1 - 1/z]]
    let h = HSequence::new(2);
    let d = mixed_determinant(&p(&[1, 1]), &TwistedHSequence::new(&h).twist_z()).unwrap();
    let expect = LaurentWindow::polynomial(
        2,
        [
            ((0, -1), h.h(1)),
            ((-1, -1), RingElement::constant(2, -1)),
            ((0, 0), -h.h(2)),
            ((-1, 0), h.h(1)),
        ],
    );
    assert!(d.agrees_with(&expect));
}

#[test]
fn second_form_against_oracle() {
    for r in 1..=2 {
        let h = HSequence::new(r);
        for lam in enumerate_box(r, 2, None) {
            let s = action_second_form(&lam, &h, 5, -5).unwrap();
            for i in 0..=5usize {
                for j in 0..=5usize {
                    let oracle = oracle_action(i, j, &lam, r, None).unwrap().to_ring(&h).unwrap();
                    assert_eq!(s.coeff(i as i64, -(j as i64)).unwrap(), oracle, "r={r} λ={lam} ({i},{j})");
                }
            }
        }
    }
    // E_00 on the vacuum of ⋀^2: b_0 is occupied, so the vacuum is fixed
    let h = HSequence::new(2);
    let s = action_second_form(&Partition::empty(), &h, 2, -2).unwrap();
    assert_eq!(s.coeff(0, 0).unwrap(), RingElement::one(2));
}

#[test]
fn gamma_against_oracle() {
    let h2 = HSequence::new(2);
    let x = SchurExpansion::basis(1, None, p(&[1])).unwrap();
    let g = gamma(&x, &h2, 4, GammaVariant::Barred).unwrap();
    let o = gamma_oracle(&p(&[1]), 1, 4, &h2).unwrap();
    assert!(g.agrees_with(&o));
    assert_eq!(g.coeff(-1, 0).unwrap(), RingElement::constant(2, -1));
    let u = gamma(&x, &h2, 4, GammaVariant::Unbarred).unwrap();
    assert_eq!(u.coeff(-1, 0).unwrap(), RingElement::one(2));
    assert!(!u.agrees_with(&o));
    let one = SchurExpansion::basis(1, None, Partition::empty()).unwrap();
    assert_eq!(gamma(&one, &h2, 3, GammaVariant::Barred).unwrap().coeff(0, 0).unwrap(), RingElement::one(2));
}

#[test]
fn gamma_star_against_oracle() {
    let h1 = HSequence::new(1);
    let x = SchurExpansion::basis(2, None, p(&[2, 2])).unwrap();
    let g = gamma_star(&x, &h1).unwrap();
    // det [[w^{-2}, w^{-1}], [h3, h2]] over B_1
    let expect = LaurentWindow::polynomial(1, [((0, -2), h1.h(2)), ((0, -1), -h1.h(3))]);
    assert!(g.agrees_with(&expect) && expect.agrees_with(&g));
    let o = gamma_star_oracle(&p(&[2, 2]), 2, &h1).unwrap();
    assert!(g.agrees_with(&o));
}

#[test]
fn identity_matrix_acts_by_r() {
    let h = HSequence::new(3);
    for lam in enumerate_box(3, 3, None) {
        let x = SchurExpansion::basis(3, Some(6), lam.clone()).unwrap();
        let y = act_matrix(&GlMatrix::identity(6), &x, &h).unwrap();
        let u = WedgeElement::basis(&lam, 3).unwrap();
        let oracle = u.delta_sparse(GlMatrix::identity(6).entries());
        assert_eq!(oracle, u.scale(&BigInt::from(3)));
        assert_eq!(y, x.scale(&BigInt::from(3)));
    }
}

#[test]
fn elementary_on_wedges() {
    let u = WedgeElement::monomial(&[3, 1]);
    let v = u.delta_elementary(4, 1);
    assert_eq!(v.coeff(&[4, 3]), BigInt::from(-1));
    assert_eq!(WedgeElement::monomial(&[1, 0]).to_schur().to_string(), "{(): 1}");
    assert_eq!(WedgeElement::monomial(&[4, 1]).to_schur().to_string(), "{(3,1): 1}");
}
