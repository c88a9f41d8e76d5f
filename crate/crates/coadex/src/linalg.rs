//! Exact linear algebra over the rationals and over polynomial rings.
//!
//! Rational matrices use plain Gauss-Jordan elimination. Polynomial matrices
//! use fraction-free Bareiss elimination: every intermediate division is
//! exact, so entries stay in the polynomial ring throughout. Kernels over the
//! fraction field are produced as denominator-cleared polynomial vectors via
//! Cramer minors of the pivot block.

use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::Error;

// ---- Rational matrices ----

/// A dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, Error> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, vector has length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc += &(self.at(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = self.at(r, c).recip();
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self.at(i, j) - &(&factor * self.at(r, j));
                    *self.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Rank and a canonical kernel basis (RREF free-variable pattern).
    pub fn kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        let mut m = self.clone();
        let pivots = m.rref();
        let rank = pivots.len();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(row, free);
            }
            basis.push(v);
        }
        (rank, basis)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Solves `self * x = b`, returning the RREF-canonical particular
    /// solution (free variables zero), or `None` if inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = RatMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the rhs column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }
}

// ---- Subspaces of Q^n ----

/// A linear subspace of Q^n held in reduced row echelon form, so equality of
/// subspaces is equality of bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    pub ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_spanning(
            ambient_dim,
            (0..ambient_dim).map(|i| {
                let mut v = vec![Rat::zero(); ambient_dim];
                v[i] = Rat::one();
                v
            }),
        )
    }

    pub fn from_spanning<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rat>>,
    {
        let rows: Vec<Vec<Rat>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient_dim, "spanning vector length mismatch");
        }
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        let mut m = RatMatrix::from_rows(rows);
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if outside.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        // RREF basis: the coefficient on each basis row is forced by the
        // pivot coordinate of v.
        let mut coords = Vec::with_capacity(self.basis.len());
        let mut residue = v.to_vec();
        for row in &self.basis {
            let pivot_col = row
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero basis row");
            let coef = residue[pivot_col].clone();
            if !coef.is_zero() {
                for (r, b) in residue.iter_mut().zip(row) {
                    *r -= &(&coef * b);
                }
            }
            coords.push(coef);
        }
        if residue.iter().all(Rat::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_spanning(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // x = sum a_i u_i = sum b_j w_j: kernel of [U^T | -W^T]
        let n = self.ambient_dim;
        let mut m = RatMatrix::zero(n, self.dim() + other.dim());
        for (j, u) in self.basis.iter().enumerate() {
            for i in 0..n {
                *m.at_mut(i, j) = u[i].clone();
            }
        }
        for (j, w) in other.basis.iter().enumerate() {
            for i in 0..n {
                *m.at_mut(i, self.dim() + j) = -&w[i];
            }
        }
        let (_, ker) = m.kernel();
        let vectors = ker.into_iter().map(|k| {
            let mut x = vec![Rat::zero(); n];
            for (j, u) in self.basis.iter().enumerate() {
                if !k[j].is_zero() {
                    for i in 0..n {
                        x[i] += &(&k[j] * &u[i]);
                    }
                }
            }
            x
        });
        Subspace::from_spanning(n, vectors)
    }
}

// ---- Polynomial matrices ----

/// A rectangular matrix of polynomials over a shared variable set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub nvars: usize,
    data: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            data: vec![MultiPoly::zero(nvars); rows * cols],
        }
    }

    pub fn from_entries(rows: usize, cols: usize, nvars: usize, data: Vec<MultiPoly>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        assert!(
            data.iter().all(|p| p.nvars() == nvars),
            "entry variable count mismatch"
        );
        PolyMatrix {
            rows,
            cols,
            nvars,
            data,
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut MultiPoly {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_skew_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.at(i, j) != self.at(j, i).neg() {
                    return false;
                }
            }
        }
        true
    }

    /// Evaluates every entry at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<RatMatrix, Error> {
        let mut out = RatMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).eval(point)?;
            }
        }
        Ok(out)
    }

    /// Matrix-vector product over the polynomial ring.
    pub fn mul_poly_vec(&self, v: &[MultiPoly]) -> Result<Vec<MultiPoly>, Error> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, vector has length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = MultiPoly::zero(self.nvars);
            for j in 0..self.cols {
                if self.at(i, j).is_zero() || v[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.at(i, j).mul(&v[j])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let mut data = Vec::with_capacity(row_idx.len() * col_idx.len());
        for &i in row_idx {
            for &j in col_idx {
                data.push(self.at(i, j).clone());
            }
        }
        PolyMatrix::from_entries(row_idx.len(), col_idx.len(), self.nvars, data)
    }
}

/// Determinant by fraction-free Bareiss elimination, pivoting on the
/// lowest-total-degree nonzero entry of the remaining block.
pub fn bareiss_det(m: &PolyMatrix) -> Result<MultiPoly, Error> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(MultiPoly::one(m.nvars));
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev_pivot = MultiPoly::one(m.nvars);
    for k in 0..n {
        // lowest-degree nonzero pivot bounds intermediate swell
        let mut best: Option<(usize, usize, u32)> = None;
        for i in k..n {
            for j in k..n {
                let e = a.at(i, j);
                if e.is_zero() {
                    continue;
                }
                let d = e.total_degree();
                if best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((i, j, d));
                }
            }
        }
        let Some((pi, pj, _)) = best else {
            return Ok(MultiPoly::zero(m.nvars)); // remaining block is zero
        };
        if pi != k {
            for j in 0..n {
                let tmp = a.at(pi, j).clone();
                *a.at_mut(pi, j) = a.at(k, j).clone();
                *a.at_mut(k, j) = tmp;
            }
            sign = !sign;
        }
        if pj != k {
            for i in 0..n {
                let tmp = a.at(i, pj).clone();
                *a.at_mut(i, pj) = a.at(i, k).clone();
                *a.at_mut(i, k) = tmp;
            }
            sign = !sign;
        }
        let pivot = a.at(k, k).clone();
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                // Bareiss one-step update: exact division by previous pivot
                let num = a
                    .at(i, j)
                    .mul(&pivot)?
                    .sub(&a.at(i, k).mul(a.at(k, j))?)?;
                *a.at_mut(i, j) = num.exact_div(&prev_pivot)?;
            }
        }
        for i in (k + 1)..n {
            *a.at_mut(i, k) = MultiPoly::zero(m.nvars);
        }
        prev_pivot = pivot;
    }
    let det = a.at(n - 1, n - 1).clone();
    Ok(if sign { det.neg() } else { det })
}

/// Naive cofactor expansion along the first row. Test oracle for
/// [`bareiss_det`]; exponential, only usable for small matrices.
pub fn cofactor_det(m: &PolyMatrix) -> Result<MultiPoly, Error> {
    if m.rows != m.cols {
        return Err(Error::Dimension("determinant of non-square matrix".into()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(MultiPoly::one(m.nvars));
    }
    if n == 1 {
        return Ok(m.at(0, 0).clone());
    }
    let mut acc = MultiPoly::zero(m.nvars);
    let rows: Vec<usize> = (1..n).collect();
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = cofactor_det(&m.submatrix(&rows, &cols))?;
        let term = m.at(0, j).mul(&minor)?;
        acc = if j % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}

/// Result of a fraction-free kernel computation: the rank over the fraction
/// field and a basis of denominator-cleared kernel vectors.
pub struct PolyKernel {
    pub rank: usize,
    pub kernel: Vec<Vec<MultiPoly>>,
}

/// Rank and kernel of `m` over the fraction field of the polynomial ring.
///
/// Elimination is fraction-free; each kernel vector is built from Cramer
/// minors of the pivot block, so its entries are honest polynomials. Vectors
/// are normalized to integer content 1 with positive leading coefficient on
/// the first nonzero entry, and every returned vector is re-verified to
/// annihilate `m` identically.
pub fn frf_kernel(m: &PolyMatrix) -> Result<PolyKernel, Error> {
    let (pivot_rows, pivot_cols) = frf_pivots(m)?;
    let rank = pivot_rows.len();
    let free_cols: Vec<usize> = (0..m.cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut kernel = Vec::with_capacity(free_cols.len());
    let pivot_block_det = if rank == 0 {
        MultiPoly::one(m.nvars)
    } else {
        bareiss_det(&m.submatrix(&pivot_rows, &pivot_cols))?
    };
    for &f in &free_cols {
        let mut v = vec![MultiPoly::zero(m.nvars); m.cols];
        v[f] = pivot_block_det.clone();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            // Cramer: replace column i of the pivot block by column f
            let mut cols = pivot_cols.clone();
            cols[i] = f;
            let d = bareiss_det(&m.submatrix(&pivot_rows, &cols))?;
            v[pc] = d.neg();
        }
        normalize_kernel_vector(&mut v);
        let image = m.mul_poly_vec(&v)?;
        if image.iter().any(|p| !p.is_zero()) {
            return Err(Error::Algebra(
                "kernel vector does not annihilate the matrix".into(),
            ));
        }
        kernel.push(v);
    }
    Ok(PolyKernel { rank, kernel })
}

/// Clears denominators, divides by the integer content across all entries,
/// and makes the leading coefficient of the first nonzero entry positive.
pub fn normalize_kernel_vector(v: &mut [MultiPoly]) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    if v.is_empty() {
        return;
    }
    let mut den_lcm = BigInt::one();
    for p in v.iter() {
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let scale = Rat::from_bigint(den_lcm);
    let mut num_gcd = BigInt::zero();
    for p in v.iter() {
        for (_, c) in p.terms() {
            num_gcd = num_gcd.gcd((c * &scale).numer());
        }
    }
    if num_gcd.is_zero() {
        return; // zero vector
    }
    let mut factor = &scale / &Rat::from_bigint(num_gcd);
    if let Some(first) = v.iter().find(|p| !p.is_zero()) {
        if first.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
    }
    for p in v.iter_mut() {
        *p = p.scale(&factor);
    }
}

/// Fraction-free row elimination locating pivot rows and columns of `m`.
fn frf_pivots(m: &PolyMatrix) -> Result<(Vec<usize>, Vec<usize>), Error> {
    let mut a = m.clone();
    let mut row_of: Vec<usize> = (0..m.rows).collect(); // work row -> original row
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut prev_pivot = MultiPoly::one(m.nvars);
    let mut r = 0;
    loop {
        if r == m.rows || pivot_cols.len() == m.cols {
            break;
        }
        // lowest-degree nonzero entry of the remaining block
        let mut best: Option<(usize, usize, u32)> = None;
        for i in r..m.rows {
            for j in 0..m.cols {
                if pivot_cols.contains(&j) {
                    continue;
                }
                let e = a.at(i, j);
                if e.is_zero() {
                    continue;
                }
                let d = e.total_degree();
                if best.is_none_or(|(_, _, bd)| d < bd) {
                    best = Some((i, j, d));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        if pi != r {
            for j in 0..m.cols {
                let tmp = a.at(pi, j).clone();
                *a.at_mut(pi, j) = a.at(r, j).clone();
                *a.at_mut(r, j) = tmp;
            }
            row_of.swap(pi, r);
        }
        let pivot = a.at(r, pj).clone();
        for i in (r + 1)..m.rows {
            if a.at(i, pj).is_zero() {
                // still rescale so the uniform Bareiss division stays exact
                for j in 0..m.cols {
                    if pivot_cols.contains(&j) || j == pj {
                        continue;
                    }
                    let num = a.at(i, j).mul(&pivot)?;
                    *a.at_mut(i, j) = num.exact_div(&prev_pivot)?;
                }
                continue;
            }
            let factor = a.at(i, pj).clone();
            for j in 0..m.cols {
                if pivot_cols.contains(&j) || j == pj {
                    continue;
                }
                let num = a.at(i, j).mul(&pivot)?.sub(&factor.mul(a.at(r, j))?)?;
                *a.at_mut(i, j) = num.exact_div(&prev_pivot)?;
            }
            *a.at_mut(i, pj) = MultiPoly::zero(m.nvars);
        }
        pivot_rows.push(row_of[r]);
        pivot_cols.push(pj);
        prev_pivot = pivot;
        r += 1;
    }
    Ok((pivot_rows, pivot_cols))
}

/// Complete eigendecomposition of a matrix that is diagonalizable over the
/// rationals. Returns (eigenvalue, eigenspace) pairs sorted by eigenvalue,
/// or an error when the spectrum is not rational or the matrix is defective.
///
/// After clearing denominators the matrix is integral, so its rational
/// eigenvalues are integers (they are algebraic integers) and lie within the
/// Gershgorin bound. Scanning that range and adding up kernel dimensions is
/// therefore a complete, exact test.
pub fn eigen_decomposition(m: &RatMatrix) -> Result<Vec<(Rat, Subspace)>, Error> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, ToPrimitive};
    if m.rows != m.cols {
        return Err(Error::Dimension("eigendecomposition of non-square matrix".into()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut den_lcm = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            den_lcm = den_lcm.lcm(m.at(i, j).denom());
        }
    }
    let scale = Rat::from_bigint(den_lcm.clone());
    // Gershgorin bound on |eigenvalue| of the scaled integer matrix
    let mut bound = BigInt::from(0);
    for i in 0..n {
        let mut row_sum = BigInt::from(0);
        for j in 0..n {
            row_sum += (m.at(i, j) * &scale).numer().abs();
        }
        bound = bound.max(row_sum);
    }
    let bound = bound.to_i64().ok_or_else(|| {
        Error::Algebra("eigenvalue scan bound overflows; matrix entries too large".into())
    })?;
    let mut pairs = Vec::new();
    let mut total = 0usize;
    // outward from zero; ad-type operators concentrate their spectrum there
    let mut candidates = vec![0i64];
    for k in 1..=bound {
        candidates.push(k);
        candidates.push(-k);
    }
    for lam in candidates {
        let mut shifted = m.clone();
        let lam_rat = &Rat::from_int(lam) / &scale;
        for i in 0..n {
            *shifted.at_mut(i, i) = shifted.at(i, i) - &lam_rat;
        }
        let (_, ker) = shifted.kernel();
        if !ker.is_empty() {
            total += ker.len();
            pairs.push((lam_rat, Subspace::from_spanning(n, ker)));
        }
        if total == n {
            break;
        }
    }
    if total != n {
        return Err(Error::Algebra(format!(
            "matrix is not diagonalizable over the rationals \
             (eigenspaces cover {total} of {n} dimensions)"
        )));
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pairs)
}

/// Rank of the Jacobian matrix (d p_i / d x_j) evaluated at `point`.
pub fn jacobian_rank(polys: &[MultiPoly], point: &[Rat]) -> Result<usize, Error> {
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        if point.len() != p.nvars() {
            return Err(Error::Dimension(format!(
                "point of length {} for {} vars",
                point.len(),
                p.nvars()
            )));
        }
        let mut row = Vec::with_capacity(p.nvars());
        for j in 0..p.nvars() {
            row.push(p.diff(j)?.eval(point)?);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(RatMatrix::from_rows(rows).rank())
}

/// Gradient of `p` at `point`.
pub fn gradient_at(p: &MultiPoly, point: &[Rat]) -> Result<Vec<Rat>, Error> {
    (0..p.nvars()).map(|j| p.diff(j)?.eval(point)).collect()
}
