//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! `MultiPoly` stores terms in a `BTreeMap` keyed by dense exponent vectors
//! ordered by graded lexicographic order (total degree first, then `x1 > x2 >
//! ...`). Invariants: no zero coefficient is ever stored and every exponent
//! vector has length `nvars`. The text format `c*x<i>^<e>*...` round-trips
//! through [`MultiPoly::parse`] and `Display`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::rat::Rat;
use crate::Error;

/// Exponent vector of a monomial, ordered by graded lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, or `None` if some exponent would go negative.
    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The variable `x<i+1>` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} vars");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial(exps), Rat::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Leading term in graded lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), Error> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "polynomials over {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Partial derivative with respect to variable `i` (0-based).
    pub fn diff(&self, i: usize) -> Result<Self, Error> {
        if i >= self.nvars {
            return Err(Error::Dimension(format!(
                "variable index {i} out of range for {} vars",
                self.nvars
            )));
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] = e - 1;
            out.add_term(Monomial(exps), c * &Rat::from_int(e as i64));
        }
        Ok(out)
    }

    /// Evaluation at a rational point; a ring homomorphism.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat, Error> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "point of length {} for {} vars",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Exact division; errors if `other` does not divide `self`.
    ///
    /// Multivariate long division by the leading term; the remainder must
    /// come out zero at every step.
    pub fn exact_div(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        if other.is_zero() {
            return Err(Error::Algebra("exact division by zero".into()));
        }
        let (lead_m, lead_c) = other.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            let q_m = m.try_div(lead_m).ok_or_else(|| {
                Error::Algebra("inexact polynomial division".into())
            })?;
            let q_c = c / lead_c;
            let mut piece = Self::zero(self.nvars);
            piece.terms.insert(q_m, q_c);
            rem = rem.sub(&piece.mul(other)?)?;
            quot = quot.add(&piece)?;
        }
        Ok(quot)
    }

    /// Multiplies all terms by the common denominator, divides out the gcd of
    /// the numerators, and makes the graded-lex leading coefficient positive.
    /// Returns the normalized polynomial (zero stays zero).
    pub fn normalized_primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let scale = Rat::from_bigint(den_lcm);
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd((c * &scale).numer());
        }
        let mut factor = &scale / &Rat::from_bigint(num_gcd);
        let lead_positive = !self
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if !lead_positive {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Parses the text format: terms `c*x<i>^<e>*...` joined by `+`/`-`.
    pub fn parse(nvars: usize, input: &str) -> Result<Self, Error> {
        let mut p = Self::zero(nvars);
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(p);
        }
        // split into signed terms at top level (no parentheses in the format)
        let bytes = s.as_bytes();
        let mut term_start = 0;
        let mut boundaries = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > 0 {
                let prev = bytes[i - 1];
                // a sign following '^', '*', '/' or another sign is part of a number
                if prev != b'^' && prev != b'*' && prev != b'/' && prev != b'+' && prev != b'-' {
                    boundaries.push(i);
                }
            }
        }
        boundaries.push(s.len());
        for &end in &boundaries {
            let term = &s[term_start..end];
            term_start = end;
            let (m, c) = Self::parse_term(nvars, term)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn parse_term(nvars: usize, term: &str) -> Result<(Monomial, Rat), Error> {
        let mk_err = || Error::Parse(format!("invalid term `{term}`"));
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-Rat::one(), rest),
            None => (Rat::one(), term.strip_prefix('+').unwrap_or(term)),
        };
        if body.is_empty() {
            return Err(mk_err());
        }
        let mut coeff = sign;
        let mut exps = vec![0u32; nvars];
        let mut saw_factor = false;
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(mk_err());
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx_str, exp) = match rest.split_once('^') {
                    Some((i, e)) => {
                        let e: u32 = e.parse().map_err(|_| mk_err())?;
                        (i, e)
                    }
                    None => (rest, 1),
                };
                let idx: usize = idx_str.parse().map_err(|_| mk_err())?;
                if idx == 0 || idx > nvars {
                    return Err(Error::Parse(format!(
                        "variable x{idx} out of range (have x1..x{nvars})"
                    )));
                }
                exps[idx - 1] += exp;
            } else {
                coeff = &coeff * &Rat::parse(factor)?;
            }
            saw_factor = true;
        }
        if !saw_factor {
            return Err(mk_err());
        }
        Ok((Monomial(exps), coeff))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending graded lex, leading term first
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.total_degree() == 0;
            let mut wrote = false;
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(16, s).unwrap()
    }

    #[test]
    fn parse_print_round_trip() {
        for s in [
            "0",
            "x1",
            "-x4",
            "3/2*x13*x4*x6",
            "x4 + x5",
            "2*x6*x13 - 4*x8*x12 + 2*x9*x11 + x10^2",
            "-9*x13*x12*x14 + 3*x13^2*x15",
            "5",
            "-7/3",
        ] {
            let q = p(s);
            let printed = q.to_string();
            assert_eq!(p(&printed), q, "round trip failed for `{s}`");
        }
    }

    #[test]
    fn graded_lex_printing_is_canonical() {
        // same polynomial entered in two orders prints identically
        let a = p("x2*x3 + x1^2 + x4");
        let b = p("x4 + x2*x3 + x1^2");
        assert_eq!(a.to_string(), b.to_string());
        // degree dominates, then lex with x1 largest
        assert_eq!(a.to_string(), "x1^2 + x2*x3 + x4");
    }

    #[test]
    fn diff_product_of_variables() {
        // d/dx4 (x4*x5) = x5
        let q = p("x4*x5");
        assert_eq!(q.diff(3).unwrap(), p("x5"));
    }

    #[test]
    fn eval_at_ones() {
        let q = p("x4 + x5");
        let ones = vec![Rat::one(); 16];
        assert_eq!(q.eval(&ones).unwrap(), Rat::from_int(2));
    }

    #[test]
    fn exact_division() {
        let a = p("x1^2*x2 + x1*x2^2");
        let b = p("x1*x2");
        assert_eq!(a.exact_div(&b).unwrap(), p("x1 + x2"));
        assert!(p("x1 + 1").exact_div(&p("x2")).is_err());
    }

    #[test]
    fn normalization() {
        let q = p("-2/3*x1 - 4/3*x2");
        let n = q.normalized_primitive();
        assert_eq!(n, p("x1 + 2*x2"));
        assert!(MultiPoly::zero(16).normalized_primitive().is_zero());
    }
}
