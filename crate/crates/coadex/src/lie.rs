//! Structure-constant Lie algebras.
//!
//! A `LieAlgebra` is a dimension together with a sparse table of brackets
//! `[x_i, x_j] = sum c_ij^k x_k`, stored only for `i < j`; antisymmetry is
//! implicit. The Jacobi identity is a checkable property, not a construction
//! invariant, so fixtures can be validated eagerly and constructed algebras
//! on demand.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::linalg::{RatMatrix, Subspace};
use crate::rat::Rat;
use crate::Error;

/// An element of a structure-constant Lie algebra, as a coefficient vector
/// over the distinguished basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    pub coeffs: Vec<Rat>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coeffs: vec![Rat::zero(); dim],
        }
    }

    /// The basis vector `x_{i+1}` (0-based index).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rat::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        Element { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Eigenvalues of a diagonalizable derivation (typically `ad h`) per basis
/// vector. Valid when degrees are additive across every stored bracket.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Grading(pub Vec<Rat>);

impl Grading {
    pub fn degree_of(&self, i: usize) -> &Rat {
        &self.0[i]
    }

    /// Basis indices of strictly positive degree.
    pub fn positive_indices(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, d)| (!d.is_zero() && !d.is_negative()).then_some(i))
            .collect()
    }

    pub fn max_degree(&self) -> Rat {
        self.0.iter().cloned().max().unwrap_or_else(Rat::zero)
    }
}

/// A finite-dimensional Lie algebra given by sparse structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    /// brackets for i < j only: (i, j) -> [(k, c)] with [x_i, x_j] = sum c x_k
    sc: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
}

impl LieAlgebra {
    /// Builds an algebra from `i < j` bracket entries. Indices are 0-based
    /// here; the JSON interface is 1-based.
    pub fn new(
        dim: usize,
        names: Option<Vec<String>>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<(usize, Rat)>)>,
    ) -> Result<Self, Error> {
        let names = names.unwrap_or_else(|| (1..=dim).map(|i| format!("x{i}")).collect());
        if names.len() != dim {
            return Err(Error::Dimension("basis name count != dim".into()));
        }
        let mut sc = BTreeMap::new();
        for ((i, j), terms) in brackets {
            if i >= j {
                return Err(Error::Algebra(format!(
                    "bracket ({i},{j}) must have i < j; antisymmetry is implicit"
                )));
            }
            if j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
                return Err(Error::Dimension("bracket index out of range".into()));
            }
            let terms: Vec<(usize, Rat)> =
                terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !terms.is_empty() {
                sc.insert((i, j), terms);
            }
        }
        Ok(LieAlgebra { dim, names, sc })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, None, Vec::new()).expect("abelian")
    }

    /// Standard sl2 with basis (e, h, f): `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let names = vec!["e".into(), "h".into(), "f".into()];
        LieAlgebra::new(
            3,
            Some(names),
            vec![
                ((0, 1), vec![(0, Rat::from_int(-2))]), // [e,h] = -2e
                ((0, 2), vec![(1, Rat::one())]),        // [e,f] = h
                ((1, 2), vec![(2, Rat::from_int(-2))]), // [h,f] = -2f
            ],
        )
        .expect("sl2")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bracket_entries(
        &self,
    ) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Rat)>)> {
        self.sc.iter()
    }

    /// `[x_i, x_j]` as a coefficient vector, for any i, j.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.sc.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .sc
                .get(&(j, i))
                .map(|terms| terms.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    fn check_element(&self, v: &Element) -> Result<(), Error> {
        if v.dim() != self.dim {
            return Err(Error::Dimension(format!(
                "element of dimension {} in algebra of dimension {}",
                v.dim(),
                self.dim
            )));
        }
        Ok(())
    }

    /// The Lie bracket, extended bilinearly from the structure constants.
    pub fn bracket(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        self.check_element(a)?;
        self.check_element(b)?;
        let mut out = Element::zero(self.dim);
        for ((i, j), terms) in &self.sc {
            // [x_i, x_j] contributes with coefficient a_i b_j - a_j b_i
            let c = &(&a.coeffs[*i] * &b.coeffs[*j]) - &(&a.coeffs[*j] * &b.coeffs[*i]);
            if c.is_zero() {
                continue;
            }
            for (k, s) in terms {
                out.coeffs[*k] += &(&c * s);
            }
        }
        Ok(out)
    }

    /// All basis triples (i, j, k) violating the Jacobi identity.
    pub fn jacobi_check(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.basis_bracket(i, j);
                if bij.is_empty() && !self.has_brackets_with(i) && !self.has_brackets_with(j) {
                    continue;
                }
                for k in (j + 1)..self.dim {
                    let mut acc = vec![Rat::zero(); self.dim];
                    self.accumulate_double(&bij, k, &mut acc, false);
                    self.accumulate_double(&self.basis_bracket(j, k), i, &mut acc, false);
                    self.accumulate_double(&self.basis_bracket(k, i), j, &mut acc, false);
                    if acc.iter().any(|c| !c.is_zero()) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    fn has_brackets_with(&self, i: usize) -> bool {
        self.sc.keys().any(|&(a, b)| a == i || b == i)
    }

    /// acc += [sum terms, x_k] (or -= if negate)
    fn accumulate_double(
        &self,
        terms: &[(usize, Rat)],
        k: usize,
        acc: &mut [Rat],
        negate: bool,
    ) {
        for (m, c) in terms {
            for (t, s) in self.basis_bracket(*m, k) {
                let v = c * &s;
                if negate {
                    acc[t] -= &v;
                } else {
                    acc[t] += &v;
                }
            }
        }
    }

    /// Matrix of `ad v`; column j holds the coefficients of `[v, x_j]`.
    pub fn ad_matrix(&self, v: &Element) -> Result<RatMatrix, Error> {
        self.check_element(v)?;
        let mut m = RatMatrix::zero(self.dim, self.dim);
        for ((i, j), terms) in &self.sc {
            // column j gains v_i * terms, column i gains -v_j * terms
            for (src, dst, sign) in [(i, j, false), (j, i, true)] {
                let c = &v.coeffs[*src];
                if c.is_zero() {
                    continue;
                }
                for (k, s) in terms {
                    let val = c * s;
                    let entry = m.at_mut(*k, *dst);
                    if sign {
                        *entry -= &val;
                    } else {
                        *entry += &val;
                    }
                }
            }
        }
        Ok(m)
    }

    /// Whether `(ad v)^dim = 0`, decided by the strictly decreasing chain of
    /// iterated images.
    pub fn is_ad_nilpotent(&self, v: &Element) -> Result<bool, Error> {
        let ad = self.ad_matrix(v)?;
        let mut image = Subspace::full(self.dim);
        loop {
            let next = Subspace::from_spanning(
                self.dim,
                image
                    .basis()
                    .iter()
                    .map(|b| ad.mul_vec(b).expect("dimension checked")),
            );
            if next.dim() == 0 {
                return Ok(true);
            }
            if next.dim() == image.dim() {
                return Ok(false);
            }
            image = next;
        }
    }

    /// Kernel of `ad v` as an echelon-canonical subspace.
    pub fn centralizer(&self, v: &Element) -> Result<Subspace, Error> {
        let ad = self.ad_matrix(v)?;
        let (_, ker) = ad.kernel();
        Ok(Subspace::from_spanning(self.dim, ker))
    }

    /// Centralizer of a whole subspace: kernel of all `ad b`, b in basis.
    pub fn centralizer_of_subspace(&self, s: &Subspace) -> Result<Subspace, Error> {
        let mut stacked: Option<RatMatrix> = None;
        for b in s.basis() {
            let ad = self.ad_matrix(&Element::from_coeffs(b.clone()))?;
            stacked = Some(match stacked {
                None => ad,
                Some(m) => m.vstack(&ad)?,
            });
        }
        match stacked {
            None => Ok(Subspace::full(self.dim)),
            Some(m) => {
                let (_, ker) = m.kernel();
                Ok(Subspace::from_spanning(self.dim, ker))
            }
        }
    }

    /// Intersection of the kernels of all `ad x_i`.
    pub fn center(&self) -> Subspace {
        self.centralizer_of_subspace(&Subspace::full(self.dim))
            .expect("dimensions consistent")
    }

    /// Span of all brackets `[x_i, x_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        Subspace::from_spanning(
            self.dim,
            self.sc.values().map(|terms| {
                let mut v = vec![Rat::zero(); self.dim];
                for (k, c) in terms {
                    v[*k] = c.clone();
                }
                v
            }),
        )
    }

    /// Killing form `trace(ad a . ad b)`.
    pub fn killing(&self, a: &Element, b: &Element) -> Result<Rat, Error> {
        let ma = self.ad_matrix(a)?;
        let mb = self.ad_matrix(b)?;
        let mut tr = Rat::zero();
        for i in 0..self.dim {
            for k in 0..self.dim {
                let x = ma.at(i, k);
                if x.is_zero() {
                    continue;
                }
                let y = mb.at(k, i);
                if !y.is_zero() {
                    tr += &(x * y);
                }
            }
        }
        Ok(tr)
    }

    /// `trace(ad x_i) = 0` for every basis vector.
    pub fn is_unimodular(&self) -> bool {
        for i in 0..self.dim {
            let ad = self
                .ad_matrix(&Element::basis(self.dim, i))
                .expect("basis element");
            let mut tr = Rat::zero();
            for k in 0..self.dim {
                tr += ad.at(k, k);
            }
            if !tr.is_zero() {
                return false;
            }
        }
        true
    }

    /// Reads a grading off `ad v`, requiring the action to be diagonal on the
    /// distinguished basis. Also validates degree additivity on every stored
    /// bracket.
    pub fn grading_from(&self, v: &Element) -> Result<Grading, Error> {
        self.check_element(v)?;
        let mut degrees = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let image = self.bracket(v, &Element::basis(self.dim, j))?;
            for (k, c) in image.coeffs.iter().enumerate() {
                if k != j && !c.is_zero() {
                    return Err(Error::Algebra(format!(
                        "ad does not act diagonally: [v, {}] has a {} component",
                        self.names[j], self.names[k]
                    )));
                }
            }
            degrees.push(image.coeffs[j].clone());
        }
        let grading = Grading(degrees);
        self.validate_grading(&grading)?;
        Ok(grading)
    }

    /// Degrees must be additive across every stored bracket.
    pub fn validate_grading(&self, grading: &Grading) -> Result<(), Error> {
        if grading.0.len() != self.dim {
            return Err(Error::Dimension("grading length != dim".into()));
        }
        for ((i, j), terms) in &self.sc {
            let expect = &grading.0[*i] + &grading.0[*j];
            for (k, _) in terms {
                if grading.0[*k] != expect {
                    return Err(Error::Algebra(format!(
                        "grading not additive on [{} ,{}] -> {}",
                        self.names[*i], self.names[*j], self.names[*k]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Structure constants of a bracket-closed subspace, expressed in its
    /// echelon basis. Closure failure is an error, not a projection.
    pub fn subalgebra_from_basis(&self, s: &Subspace) -> Result<LieAlgebra, Error> {
        let basis: Vec<Element> = s
            .basis()
            .iter()
            .map(|b| Element::from_coeffs(b.clone()))
            .collect();
        self.subalgebra_in_basis(&basis)
    }

    /// Structure constants of a bracket-closed span, expressed in the given
    /// ordered basis (which must be linearly independent). Used when a
    /// particular basis order matters, e.g. an eigenbasis sorted by degree.
    pub fn subalgebra_in_basis(&self, basis: &[Element]) -> Result<LieAlgebra, Error> {
        let d = basis.len();
        let n = self.dim;
        let mut cols = RatMatrix::zero(n, d);
        for (j, b) in basis.iter().enumerate() {
            self.check_element(b)?;
            for i in 0..n {
                *cols.at_mut(i, j) = b.coeffs[i].clone();
            }
        }
        if cols.rank() != d {
            return Err(Error::Algebra("subalgebra basis is not independent".into()));
        }
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in (i + 1)..d {
                let br = self.bracket(&basis[i], &basis[j])?;
                let coords = cols.solve(&br.coeffs).ok_or_else(|| {
                    Error::Algebra(format!(
                        "subspace is not closed under bracket (basis pair {i},{j})"
                    ))
                })?;
                let terms: Vec<(usize, Rat)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !terms.is_empty() {
                    brackets.push(((i, j), terms));
                }
            }
        }
        LieAlgebra::new(d, None, brackets)
    }
}

// ---- JSON schema (1-based indices, matching the classical table style) ----

#[derive(Serialize, Deserialize)]
struct BracketTermJson {
    k: usize,
    c: Rat,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    terms: Vec<BracketTermJson>,
}

/// On-disk form of a Lie algebra. Indices are 1-based.
#[derive(Serialize, Deserialize)]
pub struct LieAlgebraJson {
    pub dim: usize,
    pub names: Vec<String>,
    brackets: Vec<BracketJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<Rat>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl LieAlgebraJson {
    pub fn from_algebra(
        alg: &LieAlgebra,
        grading: Option<&Grading>,
        labels: Option<Vec<String>>,
    ) -> Self {
        LieAlgebraJson {
            dim: alg.dim(),
            names: alg.names().to_vec(),
            brackets: alg
                .bracket_entries()
                .map(|(&(i, j), terms)| BracketJson {
                    i: i + 1,
                    j: j + 1,
                    terms: terms
                        .iter()
                        .map(|(k, c)| BracketTermJson {
                            k: k + 1,
                            c: c.clone(),
                        })
                        .collect(),
                })
                .collect(),
            grading: grading.map(|g| g.0.clone()),
            labels,
        }
    }

    pub fn into_algebra(self) -> Result<(LieAlgebra, Option<Grading>), Error> {
        let mut brackets = Vec::new();
        for b in self.brackets {
            if b.i == 0 || b.j == 0 {
                return Err(Error::Parse("bracket indices are 1-based".into()));
            }
            brackets.push((
                (b.i - 1, b.j - 1),
                b.terms
                    .into_iter()
                    .map(|t| {
                        if t.k == 0 {
                            Err(Error::Parse("bracket indices are 1-based".into()))
                        } else {
                            Ok((t.k - 1, t.c))
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ));
        }
        let alg = LieAlgebra::new(self.dim, Some(self.names), brackets)?;
        let grading = self.grading.map(Grading);
        if let Some(g) = &grading {
            alg.validate_grading(g)?;
        }
        Ok((alg, grading))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_brackets() {
        let g = LieAlgebra::sl2();
        let e = Element::basis(3, 0);
        let h = Element::basis(3, 1);
        let f = Element::basis(3, 2);
        assert_eq!(g.bracket(&h, &e).unwrap(), e.scale(&Rat::from_int(2)));
        assert_eq!(g.bracket(&h, &f).unwrap(), f.scale(&Rat::from_int(-2)));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert!(g.jacobi_check().is_empty());
    }

    #[test]
    fn bracket_of_element_with_itself_vanishes() {
        let g = LieAlgebra::sl2();
        let v = Element::from_coeffs(vec![Rat::new(2, 3), Rat::from_int(-1), Rat::new(5, 7)]);
        assert!(g.bracket(&v, &v).unwrap().is_zero());
    }

    #[test]
    fn sl2_centralizers_and_nilpotency() {
        let g = LieAlgebra::sl2();
        let e = Element::basis(3, 0);
        let h = Element::basis(3, 1);
        assert!(g.is_ad_nilpotent(&e).unwrap());
        assert!(!g.is_ad_nilpotent(&h).unwrap());
        let ch = g.centralizer(&h).unwrap();
        assert_eq!(ch.dim(), 1);
        assert!(ch.contains(&h.coeffs));
        assert_eq!(g.centralizer(&Element::zero(3)).unwrap().dim(), 3);
    }

    #[test]
    fn sl2_killing_and_center() {
        let g = LieAlgebra::sl2();
        let e = Element::basis(3, 0);
        let f = Element::basis(3, 2);
        assert!(!g.killing(&e, &f).unwrap().is_zero());
        assert!(g.killing(&e, &e).unwrap().is_zero());
        assert_eq!(g.center().dim(), 0);
        assert_eq!(g.derived_subalgebra().dim(), 3);
        assert!(g.is_unimodular());
    }

    #[test]
    fn grading_from_h_on_sl2() {
        let g = LieAlgebra::sl2();
        let h = Element::basis(3, 1);
        let grading = g.grading_from(&h).unwrap();
        assert_eq!(
            grading.0,
            vec![Rat::from_int(2), Rat::zero(), Rat::from_int(-2)]
        );
        // e + f does not act diagonally on this basis
        let ef = Element::from_coeffs(vec![Rat::one(), Rat::zero(), Rat::one()]);
        assert!(g.grading_from(&ef).is_err());
        // zero element gives the zero grading
        assert_eq!(
            g.grading_from(&Element::zero(3)).unwrap().0,
            vec![Rat::zero(); 3]
        );
    }

    #[test]
    fn induced_subalgebra_requires_closure() {
        let g = LieAlgebra::sl2();
        // span(e, h) is closed; span(e, f) is not
        let eh = Subspace::from_spanning(
            3,
            vec![Element::basis(3, 0).coeffs, Element::basis(3, 1).coeffs],
        );
        let sub = g.subalgebra_from_basis(&eh).unwrap();
        assert_eq!(sub.dim(), 2);
        assert!(sub.jacobi_check().is_empty());
        let ef = Subspace::from_spanning(
            3,
            vec![Element::basis(3, 0).coeffs, Element::basis(3, 2).coeffs],
        );
        assert!(g.subalgebra_from_basis(&ef).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = LieAlgebra::sl2();
        let json = LieAlgebraJson::from_algebra(&g, None, None);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: LieAlgebraJson = serde_json::from_str(&text).unwrap();
        let (g2, _) = parsed.into_algebra().unwrap();
        assert_eq!(g, g2);
    }
}
