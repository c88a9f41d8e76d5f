//! Generic coadjoint stabilizers by seeded sampling.
//!
//! Samples points of the dual, computes their stabilizers as kernels of the
//! evaluated coadjoint matrix, and checks the two flags of interest: every
//! element ad-nilpotent, and the stabilizer escaping the nilradical part.
//! Also computes the subspace g_u + [g,g] + g(x) whose properness signals
//! semi-invariants that are not invariant.

use std::collections::BTreeSet;

use coadex::coad;
use coadex::fixture::Fixture;
use coadex::lie::{Element, LieAlgebra};
use coadex::linalg::Subspace;
use coadex::rat::Rat;
use coadex::rng::{SeededRng, DEFAULT_SEED};

fn main() {
    let fx = Fixture::f4_centralizer().unwrap();
    let u: BTreeSet<usize> = fx
        .grading
        .as_ref()
        .unwrap()
        .positive_indices()
        .into_iter()
        .collect();
    let mut rng = SeededRng::new(DEFAULT_SEED);

    println!("ten seeded points of the dual of the centralizer fixture:");
    for i in 0..10 {
        let point = rng.point(16);
        let s = coad::stabilizer_at(&fx.algebra, &point, Some(&u), &mut rng).unwrap();
        println!(
            "  point {:>2}: stabilizer dim {}, all nilpotent: {}, inside nilradical: {}",
            i + 1,
            s.stabilizer.dim(),
            s.all_nilpotent,
            s.contained_in_u.unwrap()
        );
        assert_eq!(s.stabilizer.dim(), 4);
        assert!(s.all_nilpotent);
        assert_eq!(s.contained_in_u, Some(false));
    }

    // the gradients of the four invariants span the generic stabilizer
    let invariants: Vec<_> = fx
        .invariant_vectors()
        .unwrap()
        .iter()
        .map(|v| coad::contract(v).unwrap())
        .collect();
    let point = rng.point(16);
    let spanned = coad::gradient_span_check(&fx.algebra, &invariants, &point).unwrap();
    println!("\ngradient span equals the stabilizer at a fresh point: {spanned}");
    assert!(spanned);

    // g0 = g_u + [g,g] + g(x) on the fixture: full, so this criterion alone
    // does not produce proper semi-invariants here
    let g_u = Subspace::from_spanning(16, u.iter().map(|&i| Element::basis(16, i).coeffs));
    let point = rng.point(16);
    let (g0, proper) = coad::g0_subspace(&fx.algebra, &point, &g_u, &mut rng).unwrap();
    println!("fixture g0: dim {} of 16, proper: {proper}", g0.dim());

    // contrast: in [a, b] = b the subspace is proper and x_b is a proper
    // semi-invariant
    let g = LieAlgebra::new(2, None, vec![((0, 1), vec![(1, Rat::one())])]).unwrap();
    let g_u = Subspace::from_spanning(2, vec![vec![Rat::zero(), Rat::one()]]);
    let point = rng.point(2);
    let (g0, proper) = coad::g0_subspace(&g, &point, &g_u, &mut rng).unwrap();
    println!("[a,b] = b: g0 dim {} of 2, proper: {proper}", g0.dim());
    assert!(proper);
}
