//! The coadjoint polynomial matrix, certified index computation, generic
//! stabilizers, and invariant / semi-invariant tests in the symmetric algebra.
//!
//! The coadjoint matrix of an n-dimensional algebra is the n x n skew matrix
//! of linear polynomials `A[i][j] = [x_j, x_i]` under x_k -> variable k.
//! Evaluated at a point xi of the dual it is the matrix of the form
//! (u, v) -> <xi, [v, u]>, whose kernel is the stabilizer of xi. The index is
//! certified two-sided: a rational witness point bounds the generic rank from
//! below, independent symbolic kernel vectors bound it from above.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::lie::{Element, LieAlgebra};
use crate::linalg::{self, PolyMatrix, RatMatrix, Subspace};
use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::rng::SeededRng;
use crate::Error;

/// Retries allowed when hunting for a generic witness point.
const GENERICITY_RETRIES: usize = 20;

/// Random linear combinations tested on top of the echelon basis when
/// checking that a whole stabilizer is nilpotent; nilpotency is not a linear
/// condition, so basis vectors alone would not be convincing.
const NILPOTENCY_COMBINATIONS: usize = 5;

/// Builds the coadjoint matrix of `alg` and checks skew-symmetry.
pub fn coadjoint_matrix(alg: &LieAlgebra) -> PolyMatrix {
    let n = alg.dim();
    let mut m = PolyMatrix::zero(n, n, n);
    for (&(i, j), terms) in alg.bracket_entries() {
        // A[a][b] = [x_b, x_a]: entry (j, i) gets [x_i, x_j], entry (i, j) its negative
        let mut p = MultiPoly::zero(n);
        for (k, c) in terms {
            p = p
                .add(&MultiPoly::var(n, *k).scale(c))
                .expect("same variable count");
        }
        *m.at_mut(j, i) = p.clone();
        *m.at_mut(i, j) = p.neg();
    }
    debug_assert!(m.is_skew_symmetric());
    m
}

/// Contracts a kernel vector to the polynomial sum v_i * x_i.
pub fn contract(v: &[MultiPoly]) -> Result<MultiPoly, Error> {
    let n = v.len();
    let mut acc = MultiPoly::zero(n);
    for (i, p) in v.iter().enumerate() {
        if p.nvars() != n {
            return Err(Error::Dimension(
                "kernel vector entries must have one variable per coordinate".into(),
            ));
        }
        acc = acc.add(&p.mul(&MultiPoly::var(n, i))?)?;
    }
    Ok(acc)
}

/// The adjoint action of the basis vector `x_j` on a polynomial:
/// [x_j, p] = sum_l dp/dx_l * [x_j, x_l].
pub fn adjoint_action(alg: &LieAlgebra, j: usize, p: &MultiPoly) -> Result<MultiPoly, Error> {
    let n = alg.dim();
    if p.nvars() != n {
        return Err(Error::Dimension(format!(
            "polynomial over {} variables in an algebra of dimension {n}",
            p.nvars()
        )));
    }
    let mut acc = MultiPoly::zero(n);
    for l in 0..n {
        let dp = p.diff(l)?;
        if dp.is_zero() {
            continue;
        }
        for (k, c) in alg.basis_bracket(j, l) {
            acc = acc.add(&dp.mul(&MultiPoly::var(n, k).scale(&c))?)?;
        }
    }
    Ok(acc)
}

/// Whether `[x_j, p] = 0` in the symmetric algebra for every basis vector.
pub fn is_invariant(alg: &LieAlgebra, p: &MultiPoly) -> Result<bool, Error> {
    for j in 0..alg.dim() {
        if !adjoint_action(alg, j, p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If `[x_j, p] = lambda_j p` for every basis vector, returns the weight
/// vector (lambda_1 .. lambda_n); otherwise `None`. Invariants get the zero
/// weight.
pub fn is_semi_invariant(alg: &LieAlgebra, p: &MultiPoly) -> Result<Option<Vec<Rat>>, Error> {
    let n = alg.dim();
    let mut weights = Vec::with_capacity(n);
    for j in 0..n {
        let q = adjoint_action(alg, j, p)?;
        if q.is_zero() {
            weights.push(Rat::zero());
            continue;
        }
        if p.is_zero() {
            return Ok(None);
        }
        let (lm, lc) = p.leading().expect("nonzero");
        let lambda = match q.terms().find(|(m, _)| *m == lm) {
            Some((_, qc)) => qc / lc,
            None => return Ok(None),
        };
        if q != p.scale(&lambda) {
            return Ok(None);
        }
        weights.push(lambda);
    }
    Ok(Some(weights))
}

/// Whether every variable occurring in `p` lies in the given set of basis
/// indices (0-based). This is subspace membership for the basis-aligned
/// subspaces the arguments here need.
pub fn support_in_subspace(p: &MultiPoly, indices: &BTreeSet<usize>) -> bool {
    p.support().iter().all(|i| indices.contains(i))
}

// ---- Index certification ----

/// A proved index value: the rank witness gives the lower bound on the
/// generic rank, the symbolic kernel vectors the upper bound, and they meet.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndexCertificate {
    pub index: usize,
    pub witness_point: Vec<Rat>,
    pub witness_rank: usize,
    /// kernel vectors as polynomial text, one inner list per vector
    pub kernel_vectors: Vec<Vec<String>>,
    pub seed: u64,
}

/// Certifies the index of `alg` with caller-supplied symbolic kernel vectors
/// (for instance transcribed ones). Each vector is checked to annihilate the
/// coadjoint matrix identically; independence over the fraction field is
/// certified by independence at a rational point.
pub fn index_with_kernel(
    alg: &LieAlgebra,
    kernel: &[Vec<MultiPoly>],
    seed: u64,
) -> Result<IndexCertificate, Error> {
    let n = alg.dim();
    let a = coadjoint_matrix(alg);
    for (idx, v) in kernel.iter().enumerate() {
        let image = a.mul_poly_vec(v)?;
        if image.iter().any(|p| !p.is_zero()) {
            return Err(Error::CheckFailed(format!(
                "kernel vector {idx} does not annihilate the coadjoint matrix"
            )));
        }
    }
    let k = kernel.len();
    if k > n {
        return Err(Error::CheckFailed("more kernel vectors than dim".into()));
    }
    let target_rank = n - k;
    let mut rng = SeededRng::new(seed);
    let mut best_rank = 0;
    for _ in 0..GENERICITY_RETRIES {
        let point = rng.point(n);
        let at = a.eval(&point)?;
        let rank = at.rank();
        best_rank = best_rank.max(rank);
        if rank != target_rank {
            continue;
        }
        // independence of the symbolic vectors at this point
        let rows: Vec<Vec<Rat>> = kernel
            .iter()
            .map(|v| v.iter().map(|p| p.eval(&point)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        if k > 0 && RatMatrix::from_rows(rows).rank() != k {
            continue;
        }
        return Ok(IndexCertificate {
            index: k,
            witness_point: point,
            witness_rank: rank,
            kernel_vectors: kernel
                .iter()
                .map(|v| v.iter().map(|p| p.to_string()).collect())
                .collect(),
            seed,
        });
    }
    Err(Error::CheckFailed(format!(
        "index certification failed: {k} symbolic kernel vectors (generic rank <= {target_rank}) \
         but best witness rank {best_rank} after {GENERICITY_RETRIES} points"
    )))
}

/// Certifies the index of `alg`, deriving the symbolic kernel by
/// fraction-free elimination on the coadjoint matrix.
pub fn index(alg: &LieAlgebra, seed: u64) -> Result<IndexCertificate, Error> {
    let a = coadjoint_matrix(alg);
    let ker = linalg::frf_kernel(&a)?;
    index_with_kernel(alg, &ker.kernel, seed)
}

// ---- Generic stabilizers ----

/// The stabilizer of one sampled point of the dual, with the nilpotency and
/// containment flags of the generic-stabilizer argument.
#[derive(Clone, Debug)]
pub struct StabilizerSample {
    pub point: Vec<Rat>,
    pub stabilizer: Subspace,
    pub all_nilpotent: bool,
    /// whether the whole stabilizer is supported inside the given subset of
    /// basis indices; `None` when no subset was supplied
    pub contained_in_u: Option<bool>,
}

/// Computes the stabilizer of `point` as the kernel of the evaluated
/// coadjoint matrix. Nilpotency is tested for every echelon basis vector and
/// for seeded random combinations.
pub fn stabilizer_at(
    alg: &LieAlgebra,
    point: &[Rat],
    u_indices: Option<&BTreeSet<usize>>,
    rng: &mut SeededRng,
) -> Result<StabilizerSample, Error> {
    let n = alg.dim();
    if point.len() != n {
        return Err(Error::Dimension(format!(
            "point of length {} in an algebra of dimension {n}",
            point.len()
        )));
    }
    let a = coadjoint_matrix(alg);
    let at = a.eval(point)?;
    let (_, ker) = at.kernel();
    let stabilizer = Subspace::from_spanning(n, ker);
    let mut all_nilpotent = true;
    for b in stabilizer.basis() {
        if !alg.is_ad_nilpotent(&Element::from_coeffs(b.clone()))? {
            all_nilpotent = false;
            break;
        }
    }
    if all_nilpotent && stabilizer.dim() > 0 {
        for _ in 0..NILPOTENCY_COMBINATIONS {
            let coeffs = rng.small_vector(stabilizer.dim());
            let mut v = Element::zero(n);
            for (c, b) in coeffs.iter().zip(stabilizer.basis()) {
                v = v.add(&Element::from_coeffs(b.clone()).scale(c));
            }
            if !alg.is_ad_nilpotent(&v)? {
                all_nilpotent = false;
                break;
            }
        }
    }
    let contained_in_u = u_indices.map(|set| {
        stabilizer.basis().iter().all(|b| {
            b.iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || set.contains(&i))
        })
    });
    Ok(StabilizerSample {
        point: point.to_vec(),
        stabilizer,
        all_nilpotent,
        contained_in_u,
    })
}

/// Whether the gradients of the given invariants at `point` span exactly the
/// stabilizer of `point`.
pub fn gradient_span_check(
    alg: &LieAlgebra,
    invariants: &[MultiPoly],
    point: &[Rat],
) -> Result<bool, Error> {
    let n = alg.dim();
    let a = coadjoint_matrix(alg);
    let at = a.eval(point)?;
    let (_, ker) = at.kernel();
    let stabilizer = Subspace::from_spanning(n, ker);
    let grads: Vec<Vec<Rat>> = invariants
        .iter()
        .map(|p| linalg::gradient_at(p, point))
        .collect::<Result<_, _>>()?;
    let span = Subspace::from_spanning(n, grads);
    Ok(span == stabilizer)
}

/// The subspace g_u + [g, g] + g(x) at a sampled point, and whether it is
/// proper. A proper result signals the existence of semi-invariants that are
/// not invariant.
pub fn g0_subspace(
    alg: &LieAlgebra,
    point: &[Rat],
    g_u: &Subspace,
    rng: &mut SeededRng,
) -> Result<(Subspace, bool), Error> {
    let sample = stabilizer_at(alg, point, None, rng)?;
    let g0 = g_u.sum(&alg.derived_subalgebra()).sum(&sample.stabilizer);
    let proper = g0.dim() < alg.dim();
    Ok((g0, proper))
}
