//! Property tests for the algebraic identities the exact kernels rely on.

use proptest::prelude::*;

use coadex::fixture::Fixture;
use coadex::lie::Element;
use coadex::linalg::{self, PolyMatrix, Subspace};
use coadex::poly::MultiPoly;
use coadex::rat::Rat;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..3, nvars),
            rat_strategy(),
        ),
        0..5,
    )
    .prop_map(move |terms| MultiPoly::from_terms(nvars, terms))
}

fn point_strategy(nvars: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(rat_strategy(), nvars)
}

fn element_strategy(dim: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec(rat_strategy(), dim).prop_map(Element::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eval_is_a_ring_homomorphism(
        p in poly_strategy(3),
        q in poly_strategy(3),
        a in point_strategy(3),
    ) {
        let sum = p.add(&q).unwrap();
        let prod = p.mul(&q).unwrap();
        let pa = p.eval(&a).unwrap();
        let qa = q.eval(&a).unwrap();
        prop_assert_eq!(sum.eval(&a).unwrap(), &pa + &qa);
        prop_assert_eq!(prod.eval(&a).unwrap(), &pa * &qa);
    }

    #[test]
    fn diff_is_linear_and_satisfies_leibniz(
        p in poly_strategy(3),
        q in poly_strategy(3),
    ) {
        let sum = p.add(&q).unwrap();
        prop_assert_eq!(
            sum.diff(0).unwrap(),
            p.diff(0).unwrap().add(&q.diff(0).unwrap()).unwrap()
        );
        let prod = p.mul(&q).unwrap();
        let leibniz = p
            .diff(1)
            .unwrap()
            .mul(&q)
            .unwrap()
            .add(&p.mul(&q.diff(1).unwrap()).unwrap())
            .unwrap();
        prop_assert_eq!(prod.diff(1).unwrap(), leibniz);
    }

    #[test]
    fn printing_round_trips(p in poly_strategy(4)) {
        let text = p.to_string();
        prop_assert_eq!(MultiPoly::parse(4, &text).unwrap(), p);
    }

    #[test]
    fn parser_never_panics(s in "[ -~]{0,40}") {
        // arbitrary printable input either parses or errors, never panics
        let _ = MultiPoly::parse(4, &s);
        let _ = Rat::parse(&s);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(
        entries in prop::collection::vec(poly_strategy(2), 9),
    ) {
        let m = PolyMatrix::from_entries(3, 3, 2, entries);
        prop_assert_eq!(
            linalg::bareiss_det(&m).unwrap(),
            linalg::cofactor_det(&m).unwrap()
        );
    }

    #[test]
    fn kernel_counts_the_corank_and_annihilates(
        entries in prop::collection::vec(poly_strategy(2), 6),
    ) {
        let m = PolyMatrix::from_entries(2, 3, 2, entries);
        // frf_kernel verifies m v = 0 identically for every returned vector
        let ker = linalg::frf_kernel(&m).unwrap();
        prop_assert_eq!(ker.rank + ker.kernel.len(), 3);
    }

    #[test]
    fn rank_only_drops_under_specialization(
        entries in prop::collection::vec(poly_strategy(2), 9),
        point in point_strategy(2),
    ) {
        let m = PolyMatrix::from_entries(3, 3, 2, entries);
        let generic_rank = linalg::frf_kernel(&m).unwrap().rank;
        let special_rank = m.eval(&point).unwrap().rank();
        prop_assert!(special_rank <= generic_rank);
    }

    #[test]
    fn bracket_is_bilinear_and_alternating(
        a in element_strategy(16),
        b in element_strategy(16),
        c in element_strategy(16),
        s in rat_strategy(),
    ) {
        let fx = Fixture::f4_centralizer().unwrap();
        let g = &fx.algebra;
        prop_assert!(g.bracket(&a, &a).unwrap().is_zero());
        let anti = g.bracket(&a, &b).unwrap().add(&g.bracket(&b, &a).unwrap());
        prop_assert!(anti.is_zero());
        // [a, s b + c] = s [a, b] + [a, c]
        let lhs = g.bracket(&a, &b.scale(&s).add(&c)).unwrap();
        let rhs = g.bracket(&a, &b).unwrap().scale(&s).add(&g.bracket(&a, &c).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subspace_dimension_formula(
        us in prop::collection::vec(prop::collection::vec(rat_strategy(), 4), 1..3),
        ws in prop::collection::vec(prop::collection::vec(rat_strategy(), 4), 1..3),
    ) {
        let u = Subspace::from_spanning(4, us);
        let w = Subspace::from_spanning(4, ws);
        let sum = u.sum(&w);
        let cap = u.intersect(&w);
        prop_assert_eq!(u.dim() + w.dim(), sum.dim() + cap.dim());
        for v in cap.basis() {
            prop_assert!(u.contains(v) && w.contains(v));
        }
    }
}
