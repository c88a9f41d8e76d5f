//! Chevalley bases of the simple Lie algebras, nilpotent orbit
//! representatives, and sl2-triples.
//!
//! Roots are integer vectors in the simple-root basis, enumerated by closure
//! under root strings and ordered by (height, lexicographic). Structure
//! constants N(a, b) = +-(p+1) are fixed by choosing the positive sign on
//! extraspecial pairs and propagating all others through the cyclic and
//! four-root relations; the result is verified wholesale by the Jacobi check.
//! Sign conventions therefore match no particular computer algebra system,
//! and nothing downstream depends on them.

use std::collections::HashMap;

use crate::lie::{Element, LieAlgebra};
use crate::linalg::{self, RatMatrix, Subspace};
use crate::rat::Rat;
use crate::Error;

/// The Cartan-Killing type of a simple Lie algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl std::str::FromStr for SimpleType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(SimpleType::A),
            "B" | "b" => Ok(SimpleType::B),
            "C" | "c" => Ok(SimpleType::C),
            "D" | "d" => Ok(SimpleType::D),
            "E" | "e" => Ok(SimpleType::E),
            "F" | "f" => Ok(SimpleType::F),
            "G" | "g" => Ok(SimpleType::G),
            other => Err(Error::Parse(format!("unknown simple type `{other}`"))),
        }
    }
}

impl std::fmt::Display for SimpleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Cartan matrix in the convention `c[i][j] = <alpha_i, alpha_j^v>`.
fn cartan_matrix(kind: SimpleType, rank: usize) -> Result<Vec<Vec<i64>>, Error> {
    let n = rank;
    let invalid = || {
        Err(Error::Parse(format!(
            "invalid type/rank combination {kind}{n}"
        )))
    };
    let chain = |edges: &[(usize, usize)]| {
        // symmetric -1 entries on the listed edges (0-based), 2 on the diagonal
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in edges {
            c[a][b] = -1;
            c[b][a] = -1;
        }
        c
    };
    match kind {
        SimpleType::A => {
            if n < 1 {
                return invalid();
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(chain(&edges))
        }
        SimpleType::B => {
            if n < 2 {
                return invalid();
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let mut c = chain(&edges);
            // last simple root short: <alpha_{n-1}, alpha_n^v> = -2
            c[n - 2][n - 1] = -2;
            Ok(c)
        }
        SimpleType::C => {
            if n < 2 {
                return invalid();
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let mut c = chain(&edges);
            // last simple root long: <alpha_n, alpha_{n-1}^v> = -2
            c[n - 1][n - 2] = -2;
            Ok(c)
        }
        SimpleType::D => {
            if n < 3 {
                return invalid();
            }
            let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            edges.push((n - 3, n - 1));
            Ok(chain(&edges))
        }
        SimpleType::E => {
            if !(6..=8).contains(&n) {
                return invalid();
            }
            // node 2 hangs off node 4 of the chain 1-3-4-5-6(-7)(-8)
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n == 8 {
                edges.push((6, 7));
            }
            Ok(chain(&edges))
        }
        SimpleType::F => {
            if n != 4 {
                return invalid();
            }
            Ok(vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ])
        }
        SimpleType::G => {
            if n != 2 {
                return invalid();
            }
            Ok(vec![vec![2, -1], vec![-3, 2]])
        }
    }
}

/// Root lengths `d_i = (alpha_i, alpha_i)/2` recovered from the Cartan matrix
/// via the symmetry of the inner product, scaled to integers.
fn root_lengths(cartan: &[Vec<i64>]) -> Vec<Rat> {
    let n = cartan.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    d[0] = Some(Rat::one());
    // propagate d_j = d_i * c[j][i] / c[i][j] along Dynkin edges
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                if d[i].is_some() && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    let ratio = &Rat::from_int(cartan[j][i]) / &Rat::from_int(cartan[i][j]);
                    d[j] = Some(&di * &ratio);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Rat> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    // clear denominators so norms are integers
    let mut scale = Rat::one();
    for v in &out {
        scale = &scale * &Rat::from_bigint(v.denom().clone());
    }
    for v in out.iter_mut() {
        *v = &*v * &scale;
    }
    out
}

/// The root system of a simple type: positive roots in simple-root
/// coordinates, ordered by (height, lexicographic).
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: SimpleType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// d_i = (alpha_i, alpha_i)/2, scaled to integers
    pub lengths: Vec<Rat>,
    pub positive_roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(kind: SimpleType, rank: usize) -> Result<Self, Error> {
        let cartan = cartan_matrix(kind, rank)?;
        let lengths = root_lengths(&cartan);
        let mut positive: Vec<Vec<i64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            frontier.push(v);
        }
        // by increasing height; lexicographic within a height
        while !frontier.is_empty() {
            frontier.sort();
            frontier.dedup();
            for r in &frontier {
                index.insert(r.clone(), positive.len());
                positive.push(r.clone());
            }
            let current = std::mem::take(&mut frontier);
            for beta in &current {
                for i in 0..rank {
                    let mut candidate = beta.clone();
                    candidate[i] += 1;
                    if index.contains_key(&candidate) || frontier.contains(&candidate) {
                        continue;
                    }
                    // root string: beta + alpha_i is a root iff p - <beta, alpha_i^v> >= 1
                    let mut p = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down.iter().all(|&x| x == 0) || !index.contains_key(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pairing >= 1 {
                        frontier.push(candidate);
                    }
                }
            }
        }
        Ok(RootSystem {
            kind,
            rank,
            cartan,
            lengths,
            positive_roots: positive,
            index,
        })
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// `<beta, alpha_i^v>` for beta in simple-root coordinates.
    pub fn pairing_with_simple_coroot(&self, beta: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| beta[j] * self.cartan[j][i]).sum()
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// `(beta, beta)/2` in the integer scaling of `lengths`.
    pub fn half_norm(&self, beta: &[i64]) -> Rat {
        // (beta, beta) = sum_i beta_i <beta, alpha_i^v> d_i
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if beta[i] == 0 {
                continue;
            }
            let pair = self.pairing_with_simple_coroot(beta, i);
            acc += &(&Rat::from_int(beta[i] * pair) * &self.lengths[i]);
        }
        &acc / &Rat::from_int(2)
    }

    /// Simple reflection `s_i(beta) = beta - <beta, alpha_i^v> alpha_i`.
    pub fn reflect_simple(&self, beta: &[i64], i: usize) -> Vec<i64> {
        let pairing = self.pairing_with_simple_coroot(beta, i);
        let mut out = beta.to_vec();
        out[i] -= pairing;
        out
    }

    /// Closure of the root set under simple reflections; the independent
    /// sanity check on the string-closure construction.
    pub fn is_reflection_closed(&self) -> bool {
        for beta in &self.positive_roots {
            for i in 0..self.rank {
                let r = self.reflect_simple(beta, i);
                let neg: Vec<i64> = r.iter().map(|x| -x).collect();
                if !self.index.contains_key(&r) && !self.index.contains_key(&neg) {
                    return false;
                }
            }
        }
        true
    }
}

// ---- Structure constants ----

/// Root identifiers: 0..m-1 the positive roots in order, m..2m-1 their
/// negatives in the same order.
type RootId = usize;

struct ConstantsBuilder<'a> {
    rs: &'a RootSystem,
    all: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, RootId>,
    /// for each positive root of height >= 2, its extraspecial pair
    extraspecial: Vec<Option<(RootId, RootId)>>,
    memo: HashMap<(RootId, RootId), Rat>,
}

impl<'a> ConstantsBuilder<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let m = rs.num_positive();
        let mut all = Vec::with_capacity(2 * m);
        let mut index = HashMap::new();
        for r in &rs.positive_roots {
            index.insert(r.clone(), all.len());
            all.push(r.clone());
        }
        for r in &rs.positive_roots {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            index.insert(neg.clone(), all.len());
            all.push(neg);
        }
        // the extraspecial pair of gamma is (alpha, gamma - alpha) for the
        // least alpha in root order such that both parts are positive roots
        let mut extraspecial = vec![None; m];
        for gamma in 0..m {
            let gv = &rs.positive_roots[gamma];
            if gv.iter().sum::<i64>() < 2 {
                continue;
            }
            for alpha in 0..gamma {
                let diff: Vec<i64> = gv
                    .iter()
                    .zip(&rs.positive_roots[alpha])
                    .map(|(g, a)| g - a)
                    .collect();
                if let Some(&beta) = index.get(&diff) {
                    if beta < m {
                        extraspecial[gamma] = Some((alpha, beta));
                        break;
                    }
                }
            }
        }
        ConstantsBuilder {
            rs,
            all,
            index,
            extraspecial,
            memo: HashMap::new(),
        }
    }

    fn m(&self) -> usize {
        self.rs.num_positive()
    }

    fn neg(&self, r: RootId) -> RootId {
        let m = self.m();
        if r < m {
            r + m
        } else {
            r - m
        }
    }

    fn is_positive(&self, r: RootId) -> bool {
        r < self.m()
    }

    fn sum_id(&self, r: RootId, s: RootId) -> Option<RootId> {
        let v: Vec<i64> = self.all[r]
            .iter()
            .zip(&self.all[s])
            .map(|(a, b)| a + b)
            .collect();
        self.index.get(&v).copied()
    }

    fn norm(&self, r: RootId) -> Rat {
        &self.rs.half_norm(&self.all[r]) * &Rat::from_int(2)
    }

    /// p(a, b) = max k with b - k a a root; requires b != +-a.
    fn p_value(&self, a: RootId, b: RootId) -> i64 {
        let mut k = 0i64;
        let mut v = self.all[b].clone();
        loop {
            for (x, y) in v.iter_mut().zip(&self.all[a]) {
                *x -= y;
            }
            if !self.index.contains_key(&v) {
                return k;
            }
            k += 1;
        }
    }

    /// N(r, s) for roots with r + s a root.
    fn n_const(&mut self, r: RootId, s: RootId) -> Rat {
        if let Some(v) = self.memo.get(&(r, s)) {
            return v.clone();
        }
        let v = self.compute_n(r, s);
        // Chevalley: |N| = p + 1, a nonzero integer
        debug_assert!(v.is_integer() && !v.is_zero(), "N({r},{s}) = {v}");
        self.memo.insert((r, s), v.clone());
        v
    }

    fn compute_n(&mut self, r: RootId, s: RootId) -> Rat {
        debug_assert!(self.sum_id(r, s).is_some());
        let m = self.m();
        match (self.is_positive(r), self.is_positive(s)) {
            (true, true) => {
                if r > s {
                    return -self.n_const(s, r);
                }
                let gamma = self.sum_id(r, s).expect("sum is a root");
                debug_assert!(gamma < m);
                let (alpha, beta) = self.extraspecial[gamma].expect("height >= 2");
                if (r, s) == (alpha, beta) {
                    return Rat::from_int(self.p_value(r, s) + 1);
                }
                // four-root relation on (alpha, beta, -r, -s):
                //   N(a,b)N(c,d)/(a+b) + N(b,c)N(a,d)/(b+c) + N(c,a)N(b,d)/(c+a) = 0
                // solved for N(-r,-s) = -N(r,s)
                let neg_r = self.neg(r);
                let neg_s = self.neg(s);
                let mut acc = Rat::zero();
                if let Some(w) = self.sum_id(beta, neg_r) {
                    let t = &self.n_const(beta, neg_r) * &self.n_const(alpha, neg_s);
                    acc += &(&t / &self.norm(w));
                }
                if let Some(w) = self.sum_id(neg_r, alpha) {
                    let t = &self.n_const(neg_r, alpha) * &self.n_const(beta, neg_s);
                    acc += &(&t / &self.norm(w));
                }
                let n_ab = self.n_const(alpha, beta);
                &(&self.norm(gamma) * &acc) / &n_ab
            }
            (false, false) => -self.n_const(self.neg(r), self.neg(s)),
            (false, true) => -self.n_const(s, r),
            (true, false) => {
                let z = self.sum_id(r, s).expect("sum is a root");
                if self.is_positive(z) {
                    // cyclic relation on r + s + (-z) = 0:
                    //   N(r,s)/(z,z) = N(s,-z)/(r,r), and N(s,-z) = -N(-s,z)
                    let ratio = &self.norm(z) / &self.norm(r);
                    let neg_s = self.neg(s);
                    -&(&ratio * &self.n_const(neg_s, z))
                } else {
                    // N(r,s) = -N(-r,-s) = N(-s,-r), now with positive first arg
                    let neg_r = self.neg(r);
                    let neg_s = self.neg(s);
                    self.n_const(neg_s, neg_r)
                }
            }
        }
    }
}

// ---- The Chevalley algebra ----

/// A simple Lie algebra in a Chevalley basis: positive root vectors, then
/// negative root vectors, then the simple coroots.
pub struct ChevalleyAlgebra {
    pub algebra: LieAlgebra,
    pub root_system: RootSystem,
    /// one label per basis index, recording the root or coroot it carries
    pub labels: Vec<String>,
}

impl ChevalleyAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis element carrying the i-th positive root.
    pub fn pos_root_vector(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Basis element carrying the negative of the i-th positive root.
    pub fn neg_root_vector(&self, i: usize) -> Element {
        Element::basis(self.dim(), self.root_system.num_positive() + i)
    }

    /// The i-th simple coroot.
    pub fn coroot_vector(&self, i: usize) -> Element {
        Element::basis(self.dim(), 2 * self.root_system.num_positive() + i)
    }
}

fn root_label(prefix: &str, coords: &[i64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("{prefix}[{}]", parts.join(","))
}

/// Builds the simple Lie algebra of the given type and rank over the
/// rationals, with structure constants fixed by the extraspecial-pair sign
/// convention. The Jacobi identity is verified before returning.
pub fn build_simple(kind: SimpleType, rank: usize) -> Result<ChevalleyAlgebra, Error> {
    let rs = RootSystem::new(kind, rank)?;
    let m = rs.num_positive();
    let dim = 2 * m + rank;
    let mut builder = ConstantsBuilder::new(&rs);

    // coroot of a root over the simple coroots:
    // beta^v = sum_i m_i (d_i / d_beta) alpha_i^v
    let coroot_coeffs = |rs: &RootSystem, beta: &[i64]| -> Vec<Rat> {
        let d_beta = rs.half_norm(beta);
        (0..rs.rank)
            .map(|i| &(&Rat::from_int(beta[i]) * &rs.lengths[i]) / &d_beta)
            .collect()
    };

    let mut brackets: Vec<((usize, usize), Vec<(usize, Rat)>)> = Vec::new();
    // basis: 0..m = e, m..2m = f, 2m.. = h; root ids coincide with indices
    for r in 0..(2 * m) {
        for s in (r + 1)..(2 * m) {
            if s == builder.neg(r) {
                // [e_r, e_{-r}] = coroot of r
                let coeffs = coroot_coeffs(&rs, &builder.all[r]);
                let terms: Vec<(usize, Rat)> = coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (2 * m + i, c))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(((r, s), terms));
                }
            } else if let Some(t) = builder.sum_id(r, s) {
                let n = builder.n_const(r, s);
                brackets.push(((r, s), vec![(t, n)]));
            }
        }
    }
    // [e_r, h_i] = -<r, alpha_i^v> e_r
    for r in 0..(2 * m) {
        for i in 0..rank {
            let pairing = rs.pairing_with_simple_coroot(&builder.all[r], i);
            if pairing != 0 {
                brackets.push(((r, 2 * m + i), vec![(r, Rat::from_int(-pairing))]));
            }
        }
    }

    let names: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    let algebra = LieAlgebra::new(dim, Some(names), brackets)?;
    let violations = algebra.jacobi_check();
    if !violations.is_empty() {
        return Err(Error::Algebra(format!(
            "structure constants violate Jacobi on {} triples (first: {:?})",
            violations.len(),
            violations[0]
        )));
    }
    let mut labels = Vec::with_capacity(dim);
    for r in &rs.positive_roots {
        labels.push(root_label("e", r));
    }
    for r in &rs.positive_roots {
        labels.push(root_label("f", r));
    }
    for i in 0..rank {
        labels.push(format!("h{}", i + 1));
    }
    Ok(ChevalleyAlgebra {
        algebra,
        root_system: rs,
        labels,
    })
}

// ---- Orbit representatives ----

/// Rank of an integer matrix modulo a 31-bit prime. Never exceeds the
/// rational rank, so it soundly discards candidates whose centralizer is
/// provably too small.
fn rank_mod_p(matrix: &[Vec<i64>]) -> usize {
    const P: u64 = 2_147_483_647;
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(P as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inv(a[rank][c], P);
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % P;
        }
        for i in 0..rows {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    let sub = f * a[rank][j] % P;
                    a[i][j] = (a[i][j] + P - sub) % P;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inv(x: u64, p: u64) -> u64 {
    // Fermat: x^(p-2) mod p
    let mut base = x % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Searches for a nilpotent element that is a sum of at most `max_support`
/// distinct positive root vectors (all coefficients 1) whose centralizer has
/// the requested dimension and, when `target_reductive_dim` is given, whose
/// reductive factor g(e) n g(f) has that dimension too. The extra filter
/// matters: distinct orbits can share the centralizer dimension (in F4 both
/// a 6- and a 3-dimensional reductive factor occur over dimension 16).
///
/// Deterministic: first hit with supports enumerated in lexicographic order
/// over the (height, lex) root order, sizes ascending. A mod-p rank prefilter
/// discards most candidates cheaply; every reported hit is confirmed by exact
/// rational rank.
pub fn find_orbit_rep(
    chev: &ChevalleyAlgebra,
    target_centralizer_dim: usize,
    max_support: usize,
    target_reductive_dim: Option<usize>,
) -> Result<Element, Error> {
    let n = chev.dim();
    let m = chev.root_system.num_positive();
    if target_centralizer_dim >= n {
        return Err(Error::NotFound(
            "only the zero element centralizes everything, and it is excluded".into(),
        ));
    }
    let target_rank = n - target_centralizer_dim;
    for size in 1..=max_support {
        let mut support = vec![0usize; size];
        if let Some(e) = search_supports(
            chev,
            &mut support,
            0,
            0,
            m,
            target_rank,
            target_reductive_dim,
        )? {
            return Ok(e);
        }
    }
    Err(Error::NotFound(format!(
        "no sum of <= {max_support} positive root vectors has centralizer dimension \
         {target_centralizer_dim}"
    )))
}

fn search_supports(
    chev: &ChevalleyAlgebra,
    support: &mut [usize],
    pos: usize,
    start: usize,
    m: usize,
    target_rank: usize,
    target_reductive_dim: Option<usize>,
) -> Result<Option<Element>, Error> {
    let size = support.len();
    if pos == size {
        let n = chev.dim();
        let mut e = Element::zero(n);
        for &i in support.iter() {
            e.coeffs[i] = Rat::one();
        }
        let ad = chev.algebra.ad_matrix(&e)?;
        let int_rows: Option<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ad.at(i, j).to_integer().and_then(|b| i64::try_from(b).ok()))
                    .collect()
            })
            .collect();
        if let Some(rows) = int_rows {
            // rank mod p <= rational rank: larger means centralizer too small
            if rank_mod_p(&rows) > target_rank {
                return Ok(None);
            }
        }
        if ad.rank() != target_rank {
            return Ok(None);
        }
        if let Some(ld) = target_reductive_dim {
            let triple = jacobson_morozov(&chev.algebra, &e)?;
            if reductive_factor(&chev.algebra, &triple)?.dim() != ld {
                return Ok(None);
            }
        }
        return Ok(Some(e));
    }
    for i in start..m {
        support[pos] = i;
        if let Some(e) = search_supports(
            chev,
            support,
            pos + 1,
            i + 1,
            m,
            target_rank,
            target_reductive_dim,
        )? {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

// ---- sl2-triples ----

/// An sl2-triple (e, h, f): `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`, with e and f
/// ad-nilpotent and h ad-semisimple with integer eigenvalues. Construction
/// verifies all of it.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: Element,
    pub h: Element,
    pub f: Element,
}

/// Completes a nonzero ad-nilpotent element to an sl2-triple.
///
/// h is forced into the image of ad e by solving (ad e)^2 y = -2e and taking
/// h = [e, y]; f then solves the combined linear system `[e,f] = h`,
/// `[h,f] = -2f`. Both solutions are the echelon-canonical ones, so the output
/// is deterministic.
pub fn jacobson_morozov(alg: &LieAlgebra, e: &Element) -> Result<Sl2Triple, Error> {
    let n = alg.dim();
    if e.is_zero() {
        return Err(Error::Algebra(
            "cannot complete zero to an sl2-triple".into(),
        ));
    }
    if !alg.is_ad_nilpotent(e)? {
        return Err(Error::Algebra("element is not ad-nilpotent".into()));
    }
    let ad_e = alg.ad_matrix(e)?;
    let ad_e_sq = ad_e.mul(&ad_e)?;
    let rhs: Vec<Rat> = e.coeffs.iter().map(|c| c * &Rat::from_int(-2)).collect();
    let y = ad_e_sq.solve(&rhs).ok_or_else(|| {
        Error::Algebra("-2e is not in the image of (ad e)^2; no sl2-triple".into())
    })?;
    let h = alg.bracket(e, &Element::from_coeffs(y))?;
    // f from [e,f] = h and (ad h + 2) f = 0
    let ad_h = alg.ad_matrix(&h)?;
    let mut shifted = ad_h.clone();
    for i in 0..n {
        *shifted.at_mut(i, i) = shifted.at(i, i) + &Rat::from_int(2);
    }
    let stacked = ad_e.vstack(&shifted)?;
    let mut stacked_rhs = h.coeffs.clone();
    stacked_rhs.extend(std::iter::repeat_n(Rat::zero(), n));
    let f = Element::from_coeffs(
        stacked
            .solve(&stacked_rhs)
            .ok_or_else(|| Error::Algebra("no f completes (e, h) to an sl2-triple".into()))?,
    );
    let triple = Sl2Triple { e: e.clone(), h, f };
    verify_sl2(alg, &triple)?;
    Ok(triple)
}

/// Checks every defining property of an sl2-triple.
pub fn verify_sl2(alg: &LieAlgebra, t: &Sl2Triple) -> Result<(), Error> {
    if alg.bracket(&t.h, &t.e)? != t.e.scale(&Rat::from_int(2)) {
        return Err(Error::CheckFailed("[h,e] != 2e".into()));
    }
    if alg.bracket(&t.h, &t.f)? != t.f.scale(&Rat::from_int(-2)) {
        return Err(Error::CheckFailed("[h,f] != -2f".into()));
    }
    if alg.bracket(&t.e, &t.f)? != t.h {
        return Err(Error::CheckFailed("[e,f] != h".into()));
    }
    if !alg.is_ad_nilpotent(&t.e)? || !alg.is_ad_nilpotent(&t.f)? {
        return Err(Error::CheckFailed("e or f is not ad-nilpotent".into()));
    }
    let ad_h = alg.ad_matrix(&t.h)?;
    let eigen = linalg::eigen_decomposition(&ad_h)
        .map_err(|e| Error::CheckFailed(format!("ad h is not semisimple: {e}")))?;
    for (lam, _) in &eigen {
        if !lam.is_integer() {
            return Err(Error::CheckFailed(format!(
                "ad h has non-integer eigenvalue {lam}"
            )));
        }
    }
    Ok(())
}

/// The reductive factor g(e) n g(f) of the centralizer of e.
pub fn reductive_factor(alg: &LieAlgebra, t: &Sl2Triple) -> Result<Subspace, Error> {
    let ge = alg.centralizer(&t.e)?;
    let gf = alg.centralizer(&t.f)?;
    Ok(ge.intersect(&gf))
}

/// The centralizer of e with its ad-h eigenbasis: ambient basis vectors
/// sorted by eigenvalue, the eigenvalues as a grading, and the induced
/// structure constants in that basis.
pub struct GradedCentralizer {
    /// ambient coordinates of the eigenbasis, sorted by ad-h eigenvalue
    pub basis: Vec<Element>,
    /// eigenvalue of each basis vector
    pub degrees: Vec<Rat>,
    /// structure constants in the eigenbasis
    pub algebra: LieAlgebra,
}

impl GradedCentralizer {
    /// Diagonalizes the restriction of ad h to the centralizer of e.
    pub fn new(alg: &LieAlgebra, t: &Sl2Triple) -> Result<Self, Error> {
        let ge = alg.centralizer(&t.e)?;
        Self::from_subspace(alg, &t.h, &ge)
    }

    /// Same, for an arbitrary ad-h-stable subalgebra given as a subspace.
    pub fn from_subspace(alg: &LieAlgebra, h: &Element, space: &Subspace) -> Result<Self, Error> {
        let d = space.dim();
        let ad_h = alg.ad_matrix(h)?;
        // matrix of ad h in the subspace basis
        let mut restricted = RatMatrix::zero(d, d);
        for (j, b) in space.basis().iter().enumerate() {
            let image = ad_h.mul_vec(b)?;
            let coords = space
                .coords_of(&image)
                .ok_or_else(|| Error::Algebra("ad h does not preserve the subspace".into()))?;
            for i in 0..d {
                *restricted.at_mut(i, j) = coords[i].clone();
            }
        }
        let eigen = linalg::eigen_decomposition(&restricted)?;
        let mut basis = Vec::with_capacity(d);
        let mut degrees = Vec::with_capacity(d);
        for (lam, eigenspace) in &eigen {
            for v in eigenspace.basis() {
                // back to ambient coordinates
                let mut ambient = vec![Rat::zero(); alg.dim()];
                for (c, b) in v.iter().zip(space.basis()) {
                    if !c.is_zero() {
                        for (a, x) in ambient.iter_mut().zip(b) {
                            *a += &(c * x);
                        }
                    }
                }
                basis.push(Element::from_coeffs(ambient));
                degrees.push(lam.clone());
            }
        }
        let algebra = alg.subalgebra_in_basis(&basis)?;
        algebra.validate_grading(&crate::lie::Grading(degrees.clone()))?;
        Ok(GradedCentralizer {
            basis,
            degrees,
            algebra,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Indices (in the eigenbasis) of strictly positive degree: the
    /// nilpotent part of the radical in the cases treated here.
    pub fn nilradical_indices(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .enumerate()
            .filter_map(|(i, d)| (!d.is_zero() && !d.is_negative()).then_some(i))
            .collect()
    }

    /// The eigenvalue multiset of ad h on the centralizer, sorted.
    pub fn spectrum(&self) -> Vec<Rat> {
        let mut s = self.degrees.clone();
        s.sort();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_is_sl2() {
        let chev = build_simple(SimpleType::A, 1).unwrap();
        assert_eq!(chev.dim(), 3);
        assert_eq!(chev.root_system.num_positive(), 1);
        let g = &chev.algebra;
        let e = chev.pos_root_vector(0);
        let f = chev.neg_root_vector(0);
        let h = chev.coroot_vector(0);
        assert_eq!(g.bracket(&h, &e).unwrap(), e.scale(&Rat::from_int(2)));
        assert_eq!(g.bracket(&h, &f).unwrap(), f.scale(&Rat::from_int(-2)));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
    }

    #[test]
    fn root_counts_match_the_classification() {
        for (kind, rank, expect) in [
            (SimpleType::A, 2, 3),
            (SimpleType::A, 3, 6),
            (SimpleType::B, 2, 4),
            (SimpleType::B, 3, 9),
            (SimpleType::C, 3, 9),
            (SimpleType::D, 4, 12),
            (SimpleType::G, 2, 6),
            (SimpleType::F, 4, 24),
            (SimpleType::E, 6, 36),
            (SimpleType::E, 7, 63),
        ] {
            let rs = RootSystem::new(kind, rank).unwrap();
            assert_eq!(rs.num_positive(), expect, "{kind}{rank}");
            assert!(rs.is_reflection_closed(), "{kind}{rank}");
        }
    }

    #[test]
    fn invalid_type_rank_combinations_error() {
        assert!(RootSystem::new(SimpleType::F, 3).is_err());
        assert!(RootSystem::new(SimpleType::G, 9).is_err());
        assert!(RootSystem::new(SimpleType::E, 9).is_err());
        assert!(RootSystem::new(SimpleType::B, 1).is_err());
    }

    #[test]
    fn small_algebras_satisfy_jacobi_and_dimensions() {
        for (kind, rank, dim) in [
            (SimpleType::A, 2, 8),
            (SimpleType::B, 2, 10),
            (SimpleType::C, 3, 21),
            (SimpleType::G, 2, 14),
            (SimpleType::A, 3, 15),
            (SimpleType::D, 4, 28),
            (SimpleType::E, 6, 78),
        ] {
            let chev = build_simple(kind, rank).unwrap();
            assert_eq!(chev.dim(), dim, "{kind}{rank}");
            // build_simple already ran the Jacobi check; re-run as the oracle
            assert!(chev.algebra.jacobi_check().is_empty());
        }
    }

    #[test]
    fn root_space_brackets_land_in_the_cartan() {
        let chev = build_simple(SimpleType::B, 2).unwrap();
        let m = chev.root_system.num_positive();
        for i in 0..m {
            let e = chev.pos_root_vector(i);
            let f = chev.neg_root_vector(i);
            let h = chev.algebra.bracket(&e, &f).unwrap();
            for (idx, c) in h.coeffs.iter().enumerate() {
                if idx < 2 * m {
                    assert!(c.is_zero(), "[e,f] escaped the Cartan at index {idx}");
                }
            }
        }
    }

    #[test]
    fn sl2_triple_in_a1() {
        let chev = build_simple(SimpleType::A, 1).unwrap();
        let e = chev.pos_root_vector(0);
        let t = jacobson_morozov(&chev.algebra, &e).unwrap();
        assert_eq!(t.e, e);
        assert_eq!(t.h, chev.coroot_vector(0));
        assert_eq!(t.f, chev.neg_root_vector(0));
        // zero input is rejected
        assert!(jacobson_morozov(&chev.algebra, &Element::zero(3)).is_err());
        // non-nilpotent input is rejected
        assert!(jacobson_morozov(&chev.algebra, &chev.coroot_vector(0)).is_err());
    }

    #[test]
    fn regular_nilpotent_in_sl2_has_trivial_reductive_factor() {
        let chev = build_simple(SimpleType::A, 1).unwrap();
        let e = chev.pos_root_vector(0);
        let t = jacobson_morozov(&chev.algebra, &e).unwrap();
        let l = reductive_factor(&chev.algebra, &t).unwrap();
        assert_eq!(l.dim(), 0);
        let graded = GradedCentralizer::new(&chev.algebra, &t).unwrap();
        assert_eq!(graded.dim(), 1);
        assert_eq!(graded.nilradical_indices().len(), 1);
        assert_eq!(graded.spectrum(), vec![Rat::from_int(2)]);
    }

    #[test]
    fn orbit_search_in_sl2_finds_the_root_vector() {
        let chev = build_simple(SimpleType::A, 1).unwrap();
        let e = find_orbit_rep(&chev, 1, 1, None).unwrap();
        assert_eq!(e, chev.pos_root_vector(0));
        // nothing centralizes everything except zero, which is excluded
        assert!(find_orbit_rep(&chev, 3, 2, None).is_err());
    }
}
