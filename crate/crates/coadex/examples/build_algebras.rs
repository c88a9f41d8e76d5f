//! Building simple Lie algebras in Chevalley bases.
//!
//! Constructs a few classical and exceptional types from their Cartan
//! matrices, prints root counts and dimensions, and shows the basis labels.

use coadex::chevalley::{self, SimpleType};

fn main() {
    for (kind, rank) in [
        (SimpleType::A, 1),
        (SimpleType::A, 2),
        (SimpleType::B, 2),
        (SimpleType::G, 2),
        (SimpleType::D, 4),
        (SimpleType::F, 4),
    ] {
        let chev = chevalley::build_simple(kind, rank).unwrap();
        println!(
            "{kind}{rank}: dimension {:>3}, {:>2} positive roots, Jacobi verified",
            chev.dim(),
            chev.root_system.num_positive()
        );
    }

    println!();
    let chev = chevalley::build_simple(SimpleType::F, 4).unwrap();
    println!("F4 positive roots in simple-root coordinates (height, lex order):");
    for (i, root) in chev.root_system.positive_roots.iter().enumerate() {
        println!("  {:>2}: {:?}  label {}", i + 1, root, chev.labels[i]);
        if i == 7 {
            println!("  ... ({} more)", chev.root_system.num_positive() - 8);
            break;
        }
    }

    // the root system is closed under its own reflections
    assert!(chev.root_system.is_reflection_closed());
    println!("\nreflection closure verified for F4");

    // E7 for scale: 63 positive roots, dimension 133
    let e7 = chevalley::build_simple(SimpleType::E, 7).unwrap();
    println!(
        "E7: dimension {}, {} positive roots, Jacobi verified",
        e7.dim(),
        e7.root_system.num_positive()
    );
}
