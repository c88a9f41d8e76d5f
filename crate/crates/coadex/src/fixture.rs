//! The 16-dimensional centralizer fixture and its kernel-vector data.
//!
//! `fixtures/f4_centralizer.json` transcribes the bracket table of the
//! centralizer of a nilpotent element in type F4 (the one with dim 16 and a
//! 3-dimensional reductive factor), its diagonal grading, four kernel vectors
//! of the coadjoint matrix, three polynomial multipliers, and the degree-3
//! invariant built from them. Everything downstream re-verifies this data, so
//! a transcription slip fails loudly.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::lie::{Grading, LieAlgebra, LieAlgebraJson};
use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::Error;

/// The shipped fixture file, embedded so verification needs no filesystem.
pub const F4_CENTRALIZER_JSON: &str = include_str!("../fixtures/f4_centralizer.json");

/// Extended on-disk schema: a Lie algebra plus optional kernel-vector data.
#[derive(Serialize, Deserialize)]
pub struct FixtureJson {
    #[serde(flatten)]
    pub algebra: LieAlgebraJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_vectors: Option<BTreeMap<String, Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_p: Option<String>,
}

/// A loaded fixture: the algebra, its grading, and the kernel data.
pub struct Fixture {
    pub algebra: LieAlgebra,
    pub grading: Option<Grading>,
    /// transcribed kernel vectors by name (f1..f4)
    pub kernel_vectors: BTreeMap<String, Vec<MultiPoly>>,
    /// transcribed multipliers by name (r1..r3)
    pub multipliers: BTreeMap<String, MultiPoly>,
    /// the invariant displayed in the source, if present
    pub invariant_p: Option<MultiPoly>,
    /// fingerprint of the source text, carried into reports
    pub source_digest: String,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let json: FixtureJson = serde_json::from_str(text)?;
        let dim = json.algebra.dim;
        let (algebra, grading) = json.algebra.into_algebra()?;
        let mut kernel_vectors = BTreeMap::new();
        for (name, entries) in json.kernel_vectors.unwrap_or_default() {
            if entries.len() != dim {
                return Err(Error::Dimension(format!(
                    "kernel vector {name} has {} entries, expected {dim}",
                    entries.len()
                )));
            }
            let v = entries
                .iter()
                .map(|s| MultiPoly::parse(dim, s))
                .collect::<Result<Vec<_>, _>>()?;
            kernel_vectors.insert(name, v);
        }
        let mut multipliers = BTreeMap::new();
        for (name, s) in json.multipliers.unwrap_or_default() {
            multipliers.insert(name, MultiPoly::parse(dim, &s)?);
        }
        let invariant_p = json
            .invariant_p
            .map(|s| MultiPoly::parse(dim, &s))
            .transpose()?;
        Ok(Fixture {
            algebra,
            grading,
            kernel_vectors,
            multipliers,
            invariant_p,
            source_digest: crate::report::digest(text.as_bytes()),
        })
    }

    /// Loads the embedded F4 centralizer fixture.
    pub fn f4_centralizer() -> Result<Self, Error> {
        Self::parse(F4_CENTRALIZER_JSON)
    }

    fn named_kernel(&self, name: &str) -> Result<&Vec<MultiPoly>, Error> {
        self.kernel_vectors
            .get(name)
            .ok_or_else(|| Error::NotFound(format!("kernel vector {name}")))
    }

    fn named_multiplier(&self, name: &str) -> Result<&MultiPoly, Error> {
        self.multipliers
            .get(name)
            .ok_or_else(|| Error::NotFound(format!("multiplier {name}")))
    }

    /// The four kernel vectors in the combination used for the index
    /// certificate: k1 = f1, k2 = f2, k3 = (f4 - 3 x12 f3) / x13^2, k4 = f3.
    pub fn certified_kernel_vectors(&self) -> Result<Vec<Vec<MultiPoly>>, Error> {
        let f1 = self.named_kernel("f1")?.clone();
        let f2 = self.named_kernel("f2")?.clone();
        let f3 = self.named_kernel("f3")?.clone();
        let k3 = self.k3()?;
        Ok(vec![f1, f2, k3, f3])
    }

    /// The combination (f4 - 3 x12 f3) / x13^2, entrywise exact division.
    /// The division failing means the transcription is wrong.
    pub fn k3(&self) -> Result<Vec<MultiPoly>, Error> {
        let n = self.algebra.dim();
        let f3 = self.named_kernel("f3")?;
        let f4 = self.named_kernel("f4")?;
        let x12 = MultiPoly::var(n, 11);
        let x13 = MultiPoly::var(n, 12);
        let x13_sq = x13.mul(&x13)?;
        let scale = MultiPoly::constant(n, Rat::from_int(-3)).mul(&x12)?;
        f4.iter()
            .zip(f3)
            .map(|(a, b)| a.add(&b.mul(&scale)?)?.exact_div(&x13_sq))
            .collect()
    }

    /// The vectors whose contractions give the four invariants:
    /// m1 = k3 + r1 k2 + r2 k1 and m2 = f3 + r3 k1, with k1 = f1, k2 = f2.
    pub fn invariant_vectors(&self) -> Result<Vec<Vec<MultiPoly>>, Error> {
        let f1 = self.named_kernel("f1")?;
        let f2 = self.named_kernel("f2")?;
        let f3 = self.named_kernel("f3")?;
        let k3 = self.k3()?;
        let r1 = self.named_multiplier("r1")?;
        let r2 = self.named_multiplier("r2")?;
        let r3 = self.named_multiplier("r3")?;
        let add_scaled = |base: &[MultiPoly],
                          scaled: &[(&MultiPoly, &[MultiPoly])]|
         -> Result<Vec<MultiPoly>, Error> {
            let mut out = base.to_vec();
            for (r, v) in scaled {
                for (o, x) in out.iter_mut().zip(v.iter()) {
                    *o = o.add(&x.mul(r)?)?;
                }
            }
            Ok(out)
        };
        let m1 = add_scaled(&k3, &[(r1, f2), (r2, f1)])?;
        let m2 = add_scaled(f3, &[(r3, f1)])?;
        Ok(vec![f1.clone(), f2.clone(), m1, m2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coad;

    #[test]
    fn fixture_parses_and_is_a_lie_algebra() {
        let fx = Fixture::f4_centralizer().unwrap();
        assert_eq!(fx.algebra.dim(), 16);
        assert!(fx.algebra.jacobi_check().is_empty());
        assert!(fx.grading.is_some());
    }

    #[test]
    fn grading_matches_the_table() {
        let fx = Fixture::f4_centralizer().unwrap();
        let g = fx.grading.unwrap();
        let expect: Vec<i64> = vec![1, 0, 1, 2, 2, 3, 1, 4, 3, 4, 5, 4, 5, 1, 0, 0];
        assert_eq!(
            g.0,
            expect.into_iter().map(Rat::from_int).collect::<Vec<_>>()
        );
    }

    #[test]
    fn derived_combination_is_polynomial() {
        let fx = Fixture::f4_centralizer().unwrap();
        let k3 = fx.k3().unwrap();
        // spot values worked out by hand from the combination
        assert_eq!(k3[1], MultiPoly::parse(16, "-x11^2").unwrap());
        assert_eq!(k3[14], MultiPoly::parse(16, "x13^2").unwrap());
        assert_eq!(k3[15], MultiPoly::parse(16, "x11*x13").unwrap());
        assert_eq!(
            k3[3],
            MultiPoly::parse(16, "1/2*x6*x13 + 1/2*x9*x11 - 4*x8*x12 + x10^2").unwrap()
        );
    }

    #[test]
    fn third_invariant_matches_the_displayed_polynomial() {
        let fx = Fixture::f4_centralizer().unwrap();
        let vectors = fx.invariant_vectors().unwrap();
        let p3 = coad::contract(&vectors[2]).unwrap();
        assert_eq!(p3, fx.invariant_p.unwrap());
    }
}
