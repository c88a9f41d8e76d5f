//! Certified index computations.
//!
//! The index of a Lie algebra is the smallest dimension of a coadjoint
//! stabilizer, equivalently dim minus the generic rank of the coadjoint
//! matrix. The certificate is two-sided: a rational witness point where the
//! rank is attained, plus symbolic kernel vectors annihilating the matrix
//! identically, whose count matches the corank.

use coadex::coad;
use coadex::fixture::Fixture;
use coadex::lie::LieAlgebra;
use coadex::rng::DEFAULT_SEED;

fn main() {
    // an abelian algebra stabilizes everything: index = dim
    let abelian = LieAlgebra::abelian(4);
    let cert = coad::index(&abelian, DEFAULT_SEED).unwrap();
    println!(
        "abelian dim 4: index {} (witness rank {})",
        cert.index, cert.witness_rank
    );
    assert_eq!(cert.index, 4);

    // sl2: one Casimir, index 1
    let sl2 = LieAlgebra::sl2();
    let cert = coad::index(&sl2, DEFAULT_SEED).unwrap();
    println!(
        "sl2: index {} (witness rank {}), kernel vector: [{}]",
        cert.index,
        cert.witness_rank,
        cert.kernel_vectors[0].join(", ")
    );
    assert_eq!(cert.index, 1);

    // the 16-dimensional centralizer: transcribed kernel vectors certify
    // index 4 against a witness point of rank 12
    let fx = Fixture::f4_centralizer().unwrap();
    let kernel = fx.certified_kernel_vectors().unwrap();
    let cert = coad::index_with_kernel(&fx.algebra, &kernel, DEFAULT_SEED).unwrap();
    println!(
        "centralizer fixture: index {} (witness rank {}, {} kernel vectors, seed {})",
        cert.index,
        cert.witness_rank,
        cert.kernel_vectors.len(),
        cert.seed
    );
    assert_eq!(cert.index, 4);
    assert_eq!(cert.witness_rank, 12);

    println!("\ncertificate JSON:");
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
}
