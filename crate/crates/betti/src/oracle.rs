//! Ground-truth engine: graded Betti numbers of `S/I` via degreewise
//! Koszul-complex homology with exact linear algebra, plus exact Hilbert
//! data for monomial ideals via lcm inclusion-exclusion.
//!
//! All linear algebra runs over the rationals, standing in for an infinite
//! field of characteristic zero.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::BettiTable;
use crate::hilbert::LaurentPolynomial;
use crate::linalg;
use crate::rational::{int, Rational};
use crate::{Error, Result};

/// A monomial in a fixed number of variables, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> i64 {
        self.exponents.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiplies by the variable with the given index.
    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[var] += 1;
        Monomial { exponents }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given total degree in `nvars` variables, in a fixed
/// deterministic (lexicographic) order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if nvars == 1 {
            prefix.push(degree);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            rec(nvars - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// A polynomial whose terms all share one total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    terms: BTreeMap<Monomial, Rational>,
    degree: i64,
    nvars: usize,
}

impl HomogeneousPolynomial {
    /// Builds from `(monomial, coefficient)` pairs, combining like terms.
    pub fn new<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    expected: nvars,
                    got: m.nvars(),
                });
            }
            let entry = map.entry(m).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::ZeroGenerator);
        }
        let degree = map.keys().next().unwrap().degree();
        if map.keys().any(|m| m.degree() != degree) {
            return Err(Error::NotHomogeneous);
        }
        Ok(HomogeneousPolynomial {
            terms: map,
            degree,
            nvars,
        })
    }

    /// A single monomial with coefficient 1.
    pub fn monomial(nvars: usize, exponents: Vec<u32>) -> Result<Self> {
        Self::new(nvars, [(Monomial::new(exponents), int(1))])
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The monomial itself when the polynomial has a single term.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous ideal given by a generator list in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct HomogeneousIdeal {
    nvars: usize,
    generators: Vec<HomogeneousPolynomial>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    generators: Vec<Vec<TermRepr>>,
}

impl TryFrom<IdealRepr> for HomogeneousIdeal {
    type Error = Error;
    fn try_from(r: IdealRepr) -> Result<Self> {
        let generators = r
            .generators
            .into_iter()
            .map(|terms| {
                HomogeneousPolynomial::new(
                    r.n,
                    terms
                        .into_iter()
                        .map(|t| {
                            let c = crate::rational::parse_rational(&t.c).ok_or_else(|| {
                                Error::SyntaxError(0, format!("bad rational {:?}", t.c))
                            })?;
                            Ok((Monomial::new(t.exp), c))
                        })
                        .collect::<Result<Vec<_>>>()?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        HomogeneousIdeal::new(r.n, generators)
    }
}

impl From<HomogeneousIdeal> for IdealRepr {
    fn from(i: HomogeneousIdeal) -> IdealRepr {
        IdealRepr {
            n: i.nvars,
            generators: i
                .generators
                .into_iter()
                .map(|g| {
                    g.terms
                        .into_iter()
                        .map(|(m, c)| TermRepr {
                            exp: m.exponents,
                            c: c.to_string(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl HomogeneousIdeal {
    pub fn new(nvars: usize, generators: Vec<HomogeneousPolynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    expected: nvars,
                    got: g.nvars(),
                });
            }
        }
        Ok(HomogeneousIdeal { nvars, generators })
    }

    /// Monomial ideal from exponent vectors.
    pub fn monomial(nvars: usize, exponents: &[&[u32]]) -> Result<Self> {
        let generators = exponents
            .iter()
            .map(|e| HomogeneousPolynomial::monomial(nvars, e.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, generators)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[HomogeneousPolynomial] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.as_monomial().is_some())
    }

    pub fn max_generator_degree(&self) -> i64 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn sum_generator_degrees(&self) -> i64 {
        self.generators.iter().map(|g| g.degree()).sum()
    }
}

/// Coset data for one internal degree `j`: a deterministic monomial basis of
/// `(S/I)_j` and the expansion of every pivot monomial in that basis.
struct QuotientDegree {
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    pivot_expansion: BTreeMap<Monomial, Vec<(usize, Rational)>>,
}

impl QuotientDegree {
    fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Class of a monomial modulo the ideal: either a basis element or the
/// stored expansion of a pivot monomial.
enum Reduced<'a> {
    Basis(usize),
    Pivot(&'a [(usize, Rational)]),
}

fn quotient_degree(ideal: &HomogeneousIdeal, j: u32) -> QuotientDegree {
    let n = ideal.nvars();
    let mons = monomials_of_degree(n, j);
    let col: BTreeMap<&Monomial, usize> = mons.iter().zip(0..).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in ideal.generators() {
        let gdeg = g.degree();
        if gdeg > j as i64 {
            continue;
        }
        for m in monomials_of_degree(n, (j as i64 - gdeg) as u32) {
            let mut row = vec![Rational::zero(); mons.len()];
            for (gm, c) in g.terms() {
                row[col[&m.mul(gm)]] += c;
            }
            rows.push(row);
        }
    }
    let pivots = linalg::rref(&mut rows, mons.len());
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let basis: Vec<Monomial> = mons
        .iter()
        .enumerate()
        .filter(|(c, _)| !pivot_set.contains(c))
        .map(|(_, m)| m.clone())
        .collect();
    let index: BTreeMap<Monomial, usize> =
        basis.iter().cloned().zip(0..).collect();
    let mut pivot_expansion = BTreeMap::new();
    for (row, &pc) in rows.iter().zip(&pivots) {
        // pivot monomial = -(sum of its non-pivot coordinates)
        let expansion: Vec<(usize, Rational)> = row
            .iter()
            .enumerate()
            .filter(|(c, v)| *c != pc && !v.is_zero())
            .map(|(c, v)| (index[&mons[c]], -v))
            .collect();
        pivot_expansion.insert(mons[pc].clone(), expansion);
    }
    QuotientDegree {
        basis,
        index,
        pivot_expansion,
    }
}

/// Dimension over the rationals of the degree-`j` graded piece `I_j`.
pub fn ideal_degree_dim(ideal: &HomogeneousIdeal, j: u32) -> usize {
    let total = monomials_of_degree(ideal.nvars(), j).len();
    total - quotient_degree(ideal, j).dim()
}

/// `dim (S/I)_j` for `j = 0..=j_max`.
pub fn quotient_hilbert_values(ideal: &HomogeneousIdeal, j_max: u32) -> Vec<u64> {
    (0..=j_max)
        .map(|j| quotient_degree(ideal, j).dim() as u64)
        .collect()
}

/// Hilbert-series numerator of `S/I` for a monomial ideal, by Taylor-complex
/// inclusion-exclusion over generator lcms:
/// `sum_T (-1)^{|T|} z^{deg lcm(T)}`, canonically reduced against nothing
/// (it is already the K-polynomial `f(z)` with `H_{S/I} = f / (1-z)^n`).
pub fn monomial_hilbert_numerator(ideal: &HomogeneousIdeal) -> Result<LaurentPolynomial> {
    let gens: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .map(|g| g.as_monomial().ok_or(Error::NotMonomial))
        .collect::<Result<Vec<_>>>()?;
    let mut out = LaurentPolynomial::zero();
    let n = ideal.nvars();
    for mask in 0u64..(1 << gens.len()) {
        let mut lcm = Monomial::one(n);
        for (k, g) in gens.iter().enumerate() {
            if mask >> k & 1 == 1 {
                lcm = lcm.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.add_term(lcm.degree(), int(sign));
    }
    Ok(out)
}

/// A degree bound `j_max` such that all `beta_{i,j}` with `j > j_max` vanish,
/// certified by the Taylor complex: the degree of the lcm of all generators.
pub fn certified_degree_bound(ideal: &HomogeneousIdeal) -> Result<i64> {
    let mut lcm = Monomial::one(ideal.nvars());
    for g in ideal.generators() {
        lcm = lcm.lcm(g.as_monomial().ok_or(Error::NotMonomial)?);
    }
    Ok(lcm.degree())
}

/// How far to compute, and whether completeness above the bound is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    /// All Betti numbers above the bound provably vanish.
    Certified(i64),
    /// Best guess; a nonzero Betti number in the top computed degree is
    /// reported as `DegreeBoundTooSmall`.
    Heuristic(i64),
}

impl DegreeBound {
    pub fn value(&self) -> i64 {
        match *self {
            DegreeBound::Certified(j) | DegreeBound::Heuristic(j) => j,
        }
    }
}

/// Default bound: the certified Taylor bound for monomial ideals, otherwise
/// the sum of generator degrees as a heuristic.
pub fn default_degree_bound(ideal: &HomogeneousIdeal) -> DegreeBound {
    match certified_degree_bound(ideal) {
        Ok(j) => DegreeBound::Certified(j),
        Err(_) => DegreeBound::Heuristic(ideal.sum_generator_degrees()),
    }
}

/// Graded Betti numbers of `S/I` as `beta_{i,j} = dim H_i(K . tensor S/I)_j`
/// where `K` is the Koszul complex on the ring variables.
///
/// For each internal degree `j <= j_max` the differentials are assembled as
/// exact matrices over the deterministic coset bases and the homology
/// dimension is `dim - rank(d_i) - rank(d_{i+1})`.
pub fn koszul_betti(ideal: &HomogeneousIdeal, bound: DegreeBound) -> Result<BettiTable> {
    let j_max = bound.value();
    if j_max < 0 {
        return Err(Error::NegativeDimension(j_max));
    }
    let n = ideal.nvars();
    let quotients: Vec<QuotientDegree> = (0..=j_max as u32)
        .map(|j| quotient_degree(ideal, j))
        .collect();

    // subsets of {0..n-1} by size, in a fixed order, with position lookup
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        subsets[set.len()].push(set);
    }
    for sets in &mut subsets {
        sets.sort();
    }
    let subset_pos: Vec<BTreeMap<&[usize], usize>> = subsets
        .iter()
        .map(|sets| sets.iter().map(|s| s.as_slice()).zip(0..).collect())
        .collect();

    let qdim = |deg: i64| -> usize {
        if deg < 0 {
            0
        } else {
            quotients[deg as usize].dim()
        }
    };

    let mut table = BettiTable::new();
    for j in 0..=j_max {
        let chain_dim =
            |i: usize| -> usize { subsets[i].len() * qdim(j - i as i64) };
        // ranks[i] = rank of d_i : C_i -> C_{i-1} in internal degree j
        let mut ranks = vec![0usize; n + 2];
        for i in 1..=n {
            let src_deg = j - i as i64;
            let tgt_deg = src_deg + 1;
            if src_deg < 0 || chain_dim(i) == 0 || chain_dim(i - 1) == 0 {
                continue;
            }
            let src_q = &quotients[src_deg as usize];
            let tgt_q = &quotients[tgt_deg as usize];
            let tgt_rows = tgt_q.dim();
            let mut columns: Vec<Vec<(usize, Rational)>> =
                Vec::with_capacity(chain_dim(i));
            for set in &subsets[i] {
                for m in &src_q.basis {
                    let mut column: Vec<(usize, Rational)> = Vec::new();
                    for (pos, &var) in set.iter().enumerate() {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        let reduced: Vec<usize> =
                            set.iter().copied().filter(|&v| v != var).collect();
                        let block = subset_pos[i - 1][reduced.as_slice()] * tgt_rows;
                        let product = m.mul_var(var);
                        match reduce_monomial(tgt_q, &product) {
                            Reduced::Basis(b) => {
                                column.push((block + b, int(sign)));
                            }
                            Reduced::Pivot(expansion) => {
                                for (b, c) in expansion {
                                    column.push((block + b, c * int(sign)));
                                }
                            }
                        }
                    }
                    columns.push(column);
                }
            }
            ranks[i] =
                linalg::rank_sparse_columns(&columns, subsets[i - 1].len() * tgt_rows);
        }
        for i in 0..=n {
            let dim = chain_dim(i);
            assert!(
                ranks[i] + ranks[i + 1] <= dim || dim == 0,
                "homology sanity: rank(d_{i}) + rank(d_{}) exceeds dim at degree {j}",
                i + 1
            );
            let beta = dim - ranks[i] - ranks[i + 1];
            if beta > 0 {
                table.set(i, j, int(beta as i64))?;
            }
        }
    }
    if let DegreeBound::Heuristic(_) = bound {
        let top_nonzero = (0..=n).any(|i| table.get(i, j_max).is_some());
        if top_nonzero {
            return Err(Error::DegreeBoundTooSmall(j_max));
        }
    }
    Ok(table)
}

fn reduce_monomial<'a>(q: &'a QuotientDegree, m: &Monomial) -> Reduced<'a> {
    if let Some(&b) = q.index.get(m) {
        Reduced::Basis(b)
    } else {
        Reduced::Pivot(
            q.pivot_expansion
                .get(m)
                .expect("monomial of this degree is basis or pivot"),
        )
    }
}
