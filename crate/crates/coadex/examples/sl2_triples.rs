//! Completing nilpotent elements to sl2-triples.
//!
//! The construction solves (ad e)^2 y = -2e to place h in the image of ad e,
//! then solves linearly for f. The triple induces a grading of the
//! centralizer of e by ad-h eigenvalues.

use coadex::chevalley::{self, SimpleType};
use coadex::lie::Element;
use coadex::rat::Rat;

fn show(coeffs: &[Rat], labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(l.clone());
        } else {
            parts.push(format!("{c} {l}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn main() {
    // regular nilpotent in A2: e = sum of the simple root vectors
    let chev = chevalley::build_simple(SimpleType::A, 2).unwrap();
    let e = chev.pos_root_vector(0).add(&chev.pos_root_vector(1));
    let triple = chevalley::jacobson_morozov(&chev.algebra, &e).unwrap();
    println!("A2, regular nilpotent:");
    println!("  e = {}", show(&triple.e.coeffs, &chev.labels));
    println!("  h = {}", show(&triple.h.coeffs, &chev.labels));
    println!("  f = {}", show(&triple.f.coeffs, &chev.labels));

    let graded = chevalley::GradedCentralizer::new(&chev.algebra, &triple).unwrap();
    println!(
        "  centralizer dim {} with ad-h spectrum {:?}",
        graded.dim(),
        graded
            .spectrum()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
    );
    // regular: centralizer dimension equals the rank
    assert_eq!(graded.dim(), 2);

    let l = chevalley::reductive_factor(&chev.algebra, &triple).unwrap();
    println!("  reductive factor dim {}", l.dim());
    assert_eq!(l.dim(), 0);

    // a subregular element in B2
    let chev = chevalley::build_simple(SimpleType::B, 2).unwrap();
    let e = chevalley::find_orbit_rep(&chev, 4, 2, None).unwrap();
    let triple = chevalley::jacobson_morozov(&chev.algebra, &e).unwrap();
    let graded = chevalley::GradedCentralizer::new(&chev.algebra, &triple).unwrap();
    println!("\nB2, centralizer dimension 4:");
    println!("  e = {}", show(&triple.e.coeffs, &chev.labels));
    println!(
        "  spectrum {:?}, reductive factor dim {}",
        graded
            .spectrum()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>(),
        chevalley::reductive_factor(&chev.algebra, &triple)
            .unwrap()
            .dim()
    );

    // non-nilpotent elements are rejected
    let h = chev.coroot_vector(0);
    assert!(chevalley::jacobson_morozov(&chev.algebra, &h).is_err());
    assert!(chevalley::jacobson_morozov(&chev.algebra, &Element::zero(10)).is_err());
    println!("\nnon-nilpotent and zero inputs are rejected, as they should be");
}
