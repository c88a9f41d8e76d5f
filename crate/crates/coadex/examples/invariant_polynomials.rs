//! Invariants and semi-invariants in the symmetric algebra.
//!
//! Contracts the fixture's kernel vectors into polynomials, tests invariance
//! under the adjoint action, shows a semi-invariant that is not invariant in
//! the smallest nonabelian example, and checks which subspace supports the
//! displayed invariant.

use std::collections::BTreeSet;

use coadex::coad;
use coadex::fixture::Fixture;
use coadex::lie::LieAlgebra;
use coadex::poly::MultiPoly;
use coadex::rat::Rat;

fn main() {
    let fx = Fixture::f4_centralizer().unwrap();

    println!("contracted invariants p(i) = sum_j v_j x_j:");
    let vectors = fx.invariant_vectors().unwrap();
    for (i, v) in vectors.iter().enumerate() {
        let p = coad::contract(v).unwrap();
        let invariant = coad::is_invariant(&fx.algebra, &p).unwrap();
        println!(
            "  p({}): degree {}, {} terms, invariant: {invariant}",
            i + 1,
            p.total_degree(),
            p.num_terms()
        );
        assert!(invariant);
    }
    let p3 = coad::contract(&vectors[2]).unwrap();
    println!("\np(3) = {p3}");
    assert_eq!(p3, fx.invariant_p.clone().unwrap());

    // support: p(3) needs variables outside the positive-degree part
    let u: BTreeSet<usize> = fx
        .grading
        .as_ref()
        .unwrap()
        .positive_indices()
        .into_iter()
        .collect();
    println!(
        "p(3) supported inside the nilradical part: {}",
        coad::support_in_subspace(&p3, &u)
    );
    assert!(!coad::support_in_subspace(&p3, &u));

    // x16 is not invariant; the central element x4 + x5 is
    let x16 = MultiPoly::parse(16, "x16").unwrap();
    assert!(!coad::is_invariant(&fx.algebra, &x16).unwrap());

    // the smallest nonabelian algebra [a, b] = b has a semi-invariant that
    // is not invariant
    let g = LieAlgebra::new(2, None, vec![((0, 1), vec![(1, Rat::one())])]).unwrap();
    let xb = MultiPoly::parse(2, "x2").unwrap();
    let weight = coad::is_semi_invariant(&g, &xb).unwrap();
    println!(
        "\n[a,b] = b: x_b is semi-invariant of weight {:?}, invariant: {}",
        weight
            .as_ref()
            .map(|w| w.iter().map(|r| r.to_string()).collect::<Vec<_>>()),
        coad::is_invariant(&g, &xb).unwrap()
    );
    assert!(weight.is_some());
}
