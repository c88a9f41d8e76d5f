//! End-to-end checks of the shipped centralizer fixture: kernel membership,
//! invariance of the contracted polynomials, the certified index, and the
//! generic-stabilizer flags.

use std::collections::BTreeSet;

use coadex::coad;
use coadex::fixture::Fixture;
use coadex::lie::Element;
use coadex::linalg;
use coadex::rat::Rat;
use coadex::rng::{SeededRng, DEFAULT_SEED};

/// 0-based indices of the nilradical part: x1, x3..x14 (strictly positive
/// degree under the grading).
fn u_indices(fx: &Fixture) -> BTreeSet<usize> {
    fx.grading
        .as_ref()
        .unwrap()
        .positive_indices()
        .into_iter()
        .collect()
}

#[test]
fn fixture_center_is_spanned_by_x4_plus_x5() {
    let fx = Fixture::f4_centralizer().unwrap();
    let center = fx.algebra.center();
    assert_eq!(center.dim(), 1);
    let mut e = Element::zero(16);
    e.coeffs[3] = Rat::one();
    e.coeffs[4] = Rat::one();
    assert!(center.contains(&e.coeffs));
}

#[test]
fn fixture_is_unimodular() {
    let fx = Fixture::f4_centralizer().unwrap();
    assert!(fx.algebra.is_unimodular());
}

#[test]
fn fixture_bracket_spot_checks() {
    let fx = Fixture::f4_centralizer().unwrap();
    let g = &fx.algebra;
    let x = |i: usize| Element::basis(16, i - 1);
    // [x1, x2] = 2 x3
    assert_eq!(
        g.bracket(&x(1), &x(2)).unwrap(),
        x(3).scale(&Rat::from_int(2))
    );
    // [x7, x14] = x5
    assert_eq!(g.bracket(&x(7), &x(14)).unwrap(), x(5));
    // e = x4 + x5 is central, hence ad-nilpotent with zero ad matrix
    let e = x(4).add(&x(5));
    let ad = g.ad_matrix(&e).unwrap();
    assert_eq!(ad, coadex::linalg::RatMatrix::zero(16, 16));
    assert!(g.is_ad_nilpotent(&e).unwrap());
    // x16 has nonzero eigenvalues, so it is not ad-nilpotent
    assert!(!g.is_ad_nilpotent(&x(16)).unwrap());
}

#[test]
fn all_four_kernel_vectors_annihilate_the_coadjoint_matrix() {
    let fx = Fixture::f4_centralizer().unwrap();
    let a = coad::coadjoint_matrix(&fx.algebra);
    assert!(a.is_skew_symmetric());
    // entry (1,2) of A is [x2, x1] = -2 x3
    assert_eq!(
        *a.at(0, 1),
        coadex::poly::MultiPoly::parse(16, "-2*x3").unwrap()
    );
    for (name, v) in [
        ("f1", &fx.certified_kernel_vectors().unwrap()[0]),
        ("f2", &fx.certified_kernel_vectors().unwrap()[1]),
        ("k3", &fx.certified_kernel_vectors().unwrap()[2]),
        ("f3", &fx.certified_kernel_vectors().unwrap()[3]),
    ] {
        let image = a.mul_poly_vec(v).unwrap();
        assert!(
            image.iter().all(|p| p.is_zero()),
            "A * {name} should vanish identically"
        );
    }
}

#[test]
fn fixture_index_is_certified_to_be_four() {
    let fx = Fixture::f4_centralizer().unwrap();
    let kernel = fx.certified_kernel_vectors().unwrap();
    let cert = coad::index_with_kernel(&fx.algebra, &kernel, DEFAULT_SEED).unwrap();
    assert_eq!(cert.index, 4);
    assert_eq!(cert.witness_rank, 12);
    assert_eq!(cert.kernel_vectors.len(), 4);
}

#[test]
fn contracted_polynomials_are_invariant_and_independent() {
    let fx = Fixture::f4_centralizer().unwrap();
    let vectors = fx.invariant_vectors().unwrap();
    let invariants: Vec<_> = vectors
        .iter()
        .map(|v| coad::contract(v).unwrap())
        .collect();
    assert_eq!(
        invariants[0],
        coadex::poly::MultiPoly::parse(16, "x4 + x5").unwrap()
    );
    assert_eq!(
        invariants[1],
        coadex::poly::MultiPoly::parse(16, "2*x6*x13 - 4*x8*x12 + 2*x9*x11 + x10^2").unwrap()
    );
    for (i, p) in invariants.iter().enumerate() {
        assert!(
            coad::is_invariant(&fx.algebra, p).unwrap(),
            "p({}) should be invariant",
            i + 1
        );
    }
    // algebraic independence via the Jacobian at a seeded point
    let mut rng = SeededRng::new(DEFAULT_SEED);
    let point = rng.point(16);
    assert_eq!(linalg::jacobian_rank(&invariants, &point).unwrap(), 4);
}

#[test]
fn center_element_is_invariant_but_x16_is_not() {
    let fx = Fixture::f4_centralizer().unwrap();
    let p = coadex::poly::MultiPoly::parse(16, "x4 + x5").unwrap();
    assert!(coad::is_invariant(&fx.algebra, &p).unwrap());
    let x16 = coadex::poly::MultiPoly::parse(16, "x16").unwrap();
    assert!(!coad::is_invariant(&fx.algebra, &x16).unwrap());
    // x4 is not even semi-invariant: [x6, x4] = -2 x11 is not a multiple of x4
    let x4 = coadex::poly::MultiPoly::parse(16, "x4").unwrap();
    assert!(coad::is_semi_invariant(&fx.algebra, &x4).unwrap().is_none());
}

#[test]
fn displayed_invariant_uses_variables_outside_the_nilradical() {
    let fx = Fixture::f4_centralizer().unwrap();
    let u = u_indices(&fx);
    // u is x1, x3..x14 (0-based 0, 2..13)
    let expected: BTreeSet<usize> = std::iter::once(0).chain(2..=13).collect();
    assert_eq!(u, expected);
    let p = fx.invariant_p.clone().unwrap();
    assert!(!coad::support_in_subspace(&p, &u));
    let central = coadex::poly::MultiPoly::parse(16, "x4 + x5").unwrap();
    assert!(coad::support_in_subspace(&central, &u));
    assert!(coad::support_in_subspace(&coadex::poly::MultiPoly::zero(16), &u));
}

#[test]
fn generic_stabilizers_are_nilpotent_and_escape_the_nilradical() {
    let fx = Fixture::f4_centralizer().unwrap();
    let u = u_indices(&fx);
    let mut rng = SeededRng::new(DEFAULT_SEED);
    for _ in 0..3 {
        let point = rng.point(16);
        let s = coad::stabilizer_at(&fx.algebra, &point, Some(&u), &mut rng).unwrap();
        assert_eq!(s.stabilizer.dim(), 4);
        assert!(s.all_nilpotent);
        assert_eq!(s.contained_in_u, Some(false));
    }
}

#[test]
fn gradients_of_the_four_invariants_span_generic_stabilizers() {
    let fx = Fixture::f4_centralizer().unwrap();
    let invariants: Vec<_> = fx
        .invariant_vectors()
        .unwrap()
        .iter()
        .map(|v| coad::contract(v).unwrap())
        .collect();
    let mut rng = SeededRng::new(DEFAULT_SEED);
    for _ in 0..3 {
        let point = rng.point(16);
        assert!(coad::gradient_span_check(&fx.algebra, &invariants, &point).unwrap());
    }
}

#[test]
fn centralizers_are_bracket_closed() {
    let fx = Fixture::f4_centralizer().unwrap();
    let mut rng = SeededRng::new(DEFAULT_SEED);
    for _ in 0..5 {
        let v = Element::from_coeffs(rng.small_vector(16));
        let c = fx.algebra.centralizer(&v).unwrap();
        // the induced structure constants exist exactly when the subspace is
        // closed under the bracket
        let sub = fx.algebra.subalgebra_from_basis(&c).unwrap();
        assert_eq!(sub.dim(), c.dim());
        assert!(sub.jacobi_check().is_empty());
    }
}

#[test]
fn invariance_reverified_through_the_evaluated_coadjoint_matrix() {
    // independent path: p invariant means the gradient at any point lies in
    // that point's stabilizer, i.e. A(xi) grad p(xi) = 0
    let fx = Fixture::f4_centralizer().unwrap();
    let a = coad::coadjoint_matrix(&fx.algebra);
    let invariants: Vec<_> = fx
        .invariant_vectors()
        .unwrap()
        .iter()
        .map(|v| coad::contract(v).unwrap())
        .collect();
    let mut rng = SeededRng::new(DEFAULT_SEED);
    for _ in 0..10 {
        let point = rng.point(16);
        let at = a.eval(&point).unwrap();
        for p in &invariants {
            let grad = linalg::gradient_at(p, &point).unwrap();
            let image = at.mul_vec(&grad).unwrap();
            assert!(image.iter().all(Rat::is_zero));
        }
    }
}

#[test]
fn stabilizer_dimension_never_drops_below_the_index() {
    let fx = Fixture::f4_centralizer().unwrap();
    let mut rng = SeededRng::new(DEFAULT_SEED);
    // the origin degenerates to the whole algebra; generic points sit at 4
    let zero = vec![Rat::zero(); 16];
    let s = coad::stabilizer_at(&fx.algebra, &zero, None, &mut rng).unwrap();
    assert!(s.stabilizer.dim() >= 4);
    let mut generic_hits = 0;
    for _ in 0..10 {
        let point = rng.point(16);
        let s = coad::stabilizer_at(&fx.algebra, &point, None, &mut rng).unwrap();
        assert!(s.stabilizer.dim() >= 4);
        if s.stabilizer.dim() == 4 {
            generic_hits += 1;
        }
    }
    assert!(generic_hits >= 9, "genericity: {generic_hits}/10");
}

#[test]
fn derivative_of_the_displayed_invariant() {
    let fx = Fixture::f4_centralizer().unwrap();
    let p = fx.invariant_p.unwrap();
    // only the 3 x13^2 x15 term involves x15
    assert_eq!(
        p.diff(14).unwrap(),
        coadex::poly::MultiPoly::parse(16, "3*x13^2").unwrap()
    );
}

#[test]
fn perturbed_fixture_fails_jacobi() {
    // flip the sign of the (1,2) bracket
    let text = coadex::fixture::F4_CENTRALIZER_JSON.replacen(
        "{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": \"2\"}]}",
        "{\"i\": 1, \"j\": 2, \"terms\": [{\"k\": 3, \"c\": \"-2\"}]}",
        1,
    );
    assert_ne!(text, coadex::fixture::F4_CENTRALIZER_JSON);
    let fx = Fixture::parse(&text).unwrap();
    assert!(!fx.algebra.jacobi_check().is_empty());
}
