//! Torus weight decompositions and the pairing determinants delta_lambda.
//!
//! Decomposes the centralizer fixture under its diagonal torus element,
//! prints every weight space, builds the matrices M_lambda of brackets
//! between opposite weight spaces, and evaluates their determinants. The
//! vanishing pattern feeds the hypothesis checkers: the weight pair carried
//! by the top eigenvalue kernel degenerates, the other pairs survive.

use coadex::fixture::Fixture;
use coadex::lie::Element;
use coadex::linalg::Subspace;
use coadex::rat::Rat;
use coadex::rng::{SeededRng, DEFAULT_SEED};
use coadex::weights::{self, CheckerInput, Torus, WeightDecomp};

fn main() {
    let fx = Fixture::f4_centralizer().unwrap();
    let alg = &fx.algebra;

    // x16 spans a Cartan subalgebra of the reductive factor span(x2,x15,x16)
    let torus = Torus::new(alg, vec![Element::basis(16, 15)]).unwrap();
    let whole = Subspace::full(16);
    let decomp = WeightDecomp::new(alg, &torus, &whole, None).unwrap();

    println!("weights of ad x16 on the fixture:");
    for (w, space) in decomp.weights.iter().zip(&decomp.e_spaces) {
        println!(
            "  weight {:>2}: dimension {}",
            w[0].to_string(),
            space.len()
        );
    }
    assert!(decomp.pair_symmetric());

    println!("\npairing determinants:");
    for w in decomp.nonzero_weights() {
        let m = weights::m_lambda(alg, &decomp, &w).unwrap();
        let d = weights::delta_lambda(alg, &decomp, &w).unwrap();
        let minor = weights::first_nonzero_principal_minor(&m).unwrap();
        println!(
            "  delta at weight {:>2} ({}x{}): {}  (first nonzero principal minor: {:?})",
            w[0].to_string(),
            m.rows,
            m.cols,
            if d.is_zero() { "0".into() } else { d.to_string() },
            minor
        );
    }
    let product = weights::delta(alg, &decomp).unwrap();
    println!("product delta over all nonzero weights: {product}");
    assert!(product.is_zero());

    // hypothesis checkers on the fixture data: l = span(x2, x15, x16)
    let ge_basis: Vec<Element> = (0..16).map(|i| Element::basis(16, i)).collect();
    let l = Subspace::from_spanning(
        16,
        [1usize, 14, 15].map(|i| Element::basis(16, i).coeffs),
    );
    let input = CheckerInput {
        alg,
        ge_basis: &ge_basis,
        degrees: fx.grading.as_ref().unwrap(),
        l: &l,
        decomp: &decomp,
    };
    let mut rng = SeededRng::new(DEFAULT_SEED);
    let hyp = weights::check_c3cn2(&input, &mut rng).unwrap();
    println!(
        "\ntop eigenvalue {} with kernel dimension {}, centralizes the torus: {}",
        hyp.top_degree, hyp.top_kernel_dim, hyp.top_centralizes_torus
    );
    println!(
        "rank of the reductive factor: {} => generic stabilizers nilpotent: {}",
        hyp.rank_l, hyp.generic_stabilizer_nilpotent
    );
    assert_eq!(hyp.top_degree, Rat::from_int(5));
    assert!(hyp.generic_stabilizer_nilpotent);

    let l3 = weights::check_l3cn2(&input).unwrap();
    println!(
        "delta conditions hold: {} (top weights {:?}, principal minors {:?})",
        l3.index_drop,
        l3.top_weights
            .iter()
            .map(|w| w[0].to_string())
            .collect::<Vec<_>>(),
        l3.principal_minors
    );
    assert!(l3.index_drop);
}
