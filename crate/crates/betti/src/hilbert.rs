//! Exact Laurent polynomials and Hilbert series, and the conversions
//! between Hilbert series and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{BettiTable, DegreeSequence};
use crate::rational::{binomial, factorial, int, int_pow, Rational};
use crate::{Error, Result};

/// Finite-support Laurent polynomial with exact rational coefficients.
/// Negative exponents are permitted (degree shifts can move below zero).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, String>", into = "BTreeMap<String, String>")]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, Rational>,
}

impl TryFrom<BTreeMap<String, String>> for LaurentPolynomial {
    type Error = Error;
    fn try_from(m: BTreeMap<String, String>) -> Result<Self> {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in m {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::SyntaxError(0, format!("bad exponent {e:?}")))?;
            let coeff = crate::rational::parse_rational(&c)
                .ok_or_else(|| Error::SyntaxError(0, format!("bad rational {c:?}")))?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl From<LaurentPolynomial> for BTreeMap<String, String> {
    fn from(p: LaurentPolynomial) -> Self {
        p.coeffs
            .into_iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect()
    }
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, int(1))
    }

    /// `c * z^e`.
    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, int(c))))
    }

    /// Adds `c * z^e`, dropping the coefficient if it cancels to zero.
    pub fn add_term(&mut self, exp: i64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Value at `z = 1`, i.e. the coefficient sum.
    pub fn eval_one(&self) -> Rational {
        self.coeffs.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// `(1 - z)^k` for `k >= 0`.
    pub fn one_minus_z_pow(k: u32) -> Self {
        let base = Self::from_int_terms([(0, 1), (1, -1)]);
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(&base);
        }
        out
    }

    /// Exact quotient by `(1 - z)`, or `None` when the division leaves a
    /// remainder (equivalently, when the value at `z = 1` is nonzero).
    pub fn div_one_minus_z(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // a_k = b_k - b_{k-1}  =>  b_k = a_k + b_{k-1}
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut out = Self::zero();
        let mut carry = Rational::zero();
        for e in lo..=hi {
            carry += self.coeff(e);
            out.add_term(e, carry.clone());
        }
        if carry.is_zero() {
            // the top output term b_hi = 0 was never stored; drop is implicit
            Some(out)
        } else {
            None
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag == int(1);
            match (e, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{mag}*z^{e}")?,
            }
        }
        Ok(())
    }
}

/// `f(z) / (1 - z)^r` in canonical form: `f(1) != 0` (every `(1 - z)` factor
/// is absorbed into the pole order). Series of actual modules always have
/// `pole_order >= 0`; canonicalizing artificial tables may drive it negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "SeriesRepr", into = "SeriesRepr")]
pub struct HilbertSeries {
    numerator: LaurentPolynomial,
    pole_order: i64,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    numerator: LaurentPolynomial,
    pole_order: i64,
}

impl From<SeriesRepr> for HilbertSeries {
    fn from(r: SeriesRepr) -> Self {
        HilbertSeries::new(r.numerator, r.pole_order)
    }
}

impl From<HilbertSeries> for SeriesRepr {
    fn from(h: HilbertSeries) -> Self {
        SeriesRepr {
            numerator: h.numerator,
            pole_order: h.pole_order,
        }
    }
}

impl HilbertSeries {
    /// Builds `numerator / (1 - z)^pole_order` and canonicalizes.
    pub fn new(numerator: LaurentPolynomial, pole_order: i64) -> Self {
        let mut h = HilbertSeries {
            numerator,
            pole_order,
        };
        h.canonicalize();
        h
    }

    pub fn zero() -> Self {
        HilbertSeries {
            numerator: LaurentPolynomial::zero(),
            pole_order: 0,
        }
    }

    fn canonicalize(&mut self) {
        while let Some(q) = self.numerator.div_one_minus_z() {
            if self.numerator.is_zero() {
                self.pole_order = 0;
                return;
            }
            self.numerator = q;
            self.pole_order -= 1;
        }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn pole_order(&self) -> i64 {
        self.pole_order
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Coefficient of `z^k` in the formal series expansion.
    pub fn coefficient(&self, k: i64) -> Rational {
        if self.pole_order <= 0 {
            let poly = self
                .numerator
                .mul(&LaurentPolynomial::one_minus_z_pow((-self.pole_order) as u32));
            return poly.coeff(k);
        }
        // 1/(1-z)^r = sum_{m >= 0} C(m + r - 1, r - 1) z^m
        let r = self.pole_order as u64;
        let mut acc = Rational::zero();
        for (e, c) in self.numerator.terms() {
            if e > k {
                break;
            }
            let m = (k - e) as u64;
            acc += c * Rational::from_integer(binomial(m + r - 1, r - 1));
        }
        acc
    }

    /// Series coefficients for `0..=k_max` (degrees below 0 are dropped).
    pub fn coefficients(&self, k_max: i64) -> Vec<Rational> {
        (0..=k_max).map(|k| self.coefficient(k)).collect()
    }

    /// Multiplies by a Laurent polynomial and re-canonicalizes.
    pub fn mul_poly(&self, p: &LaurentPolynomial) -> HilbertSeries {
        HilbertSeries::new(self.numerator.mul(p), self.pole_order)
    }

    /// Exact difference of two series.
    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        let r = self.pole_order.max(other.pole_order);
        let a = self
            .numerator
            .mul(&LaurentPolynomial::one_minus_z_pow((r - self.pole_order) as u32));
        let b = other
            .numerator
            .mul(&LaurentPolynomial::one_minus_z_pow((r - other.pole_order) as u32));
        HilbertSeries::new(a.sub(&b), r)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pole_order {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / (1-z)", self.numerator),
            r => write!(f, "({}) / (1-z)^{r}", self.numerator),
        }
    }
}

/// `H_R(z) = 1 / (1 - z)^n` for the polynomial ring in `n` variables.
pub fn polynomial_ring_hilbert(n: i64) -> Result<HilbertSeries> {
    if n < 0 {
        return Err(Error::NegativeDimension(n));
    }
    Ok(HilbertSeries::new(LaurentPolynomial::one(), n))
}

/// `h(z) = sum_{i,j} (-1)^i beta_{i,j} z^j`.
pub fn alternating_poly(t: &BettiTable) -> LaurentPolynomial {
    let mut h = LaurentPolynomial::zero();
    for (i, j, v) in t.iter() {
        let signed = if i % 2 == 0 { v.clone() } else { -v };
        h.add_term(j, signed);
    }
    h
}

/// Largest `n` with `(1 - z)^n` dividing `h`, by repeated exact division.
pub fn vanishing_order_at_one(h: &LaurentPolynomial) -> Result<u32> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut order = 0;
    let mut cur = h.clone();
    while let Some(q) = cur.div_one_minus_z() {
        order += 1;
        cur = q;
    }
    Ok(order)
}

/// Codimension read off a minimal-resolution table: the order of vanishing
/// of the alternating polynomial at `z = 1`.
pub fn codim_from_table(t: &BettiTable) -> Result<u32> {
    vanishing_order_at_one(&alternating_poly(t))
}

/// `H_M = H_R * h(z)` for the table of a minimal free resolution over the
/// ring with series `H_R`; the result is canonicalized.
pub fn module_hilbert_from_betti(ring: &HilbertSeries, t: &BettiTable) -> HilbertSeries {
    ring.mul_poly(&alternating_poly(t))
}

/// `e(M) = f(1)` for a canonical series `f / (1 - z)^r`.
pub fn multiplicity(h: &HilbertSeries) -> Rational {
    h.numerator.eval_one()
}

/// `e(M) = e(R)/c! * sum (-1)^{i+c} j^c beta_{i,j}` with `c` the codimension
/// computed from the table.
pub fn multiplicity_from_table(e_ring: &Rational, t: &BettiTable) -> Result<Rational> {
    let c = codim_from_table(t)?;
    let mut acc = Rational::zero();
    for (i, j, v) in t.iter() {
        let sign = if (i as u32 + c) % 2 == 0 { 1 } else { -1 };
        acc += v * Rational::from_integer(int_pow(j, c) * sign);
    }
    Ok(e_ring * acc / Rational::from_integer(factorial(c)))
}

/// Recovers the pure type and Betti numbers of a pure module from its
/// Hilbert series by peeling syzygy series one homological step at a time.
///
/// At step `i` the residual is the Hilbert series of the `i`-th syzygy; its
/// order gives `d_i` and its leading coefficient gives `beta_i`. The loop
/// ends when the residual vanishes identically.
pub fn pure_betti_from_hilbert(
    ring: &HilbertSeries,
    module: &HilbertSeries,
    max_steps: usize,
) -> Result<(DegreeSequence, Vec<Rational>)> {
    let mut residual = module.clone();
    let mut degrees: Vec<i64> = Vec::new();
    let mut betti: Vec<Rational> = Vec::new();
    for _ in 0..max_steps {
        if residual.is_zero() {
            let d = DegreeSequence::new(degrees)
                .map_err(|e| Error::NotPure(format!("recovered degrees invalid: {e}")))?;
            return Ok((d, betti));
        }
        // order and leading series coefficient of the residual: the
        // (1-z)-power factor has constant term 1, so both are read off the
        // canonical numerator directly
        let d_i = residual
            .numerator()
            .min_exp()
            .expect("nonzero series has a numerator term");
        let lead = residual.numerator().coeff(d_i);
        if !lead.is_positive() {
            return Err(Error::NotPure(format!(
                "syzygy series has non-positive leading coefficient {lead} at degree {d_i}"
            )));
        }
        if let Some(&prev) = degrees.last() {
            if d_i <= prev {
                return Err(Error::NotPure(format!(
                    "computed degree {d_i} does not exceed its predecessor {prev}"
                )));
            }
        }
        // 0 -> K' -> R(-d_i)^{beta_i} -> K -> 0  gives
        // H_{K'} = beta_i z^{d_i} H_R - H_K
        let free = ring.mul_poly(&LaurentPolynomial::monomial(d_i, lead.clone()));
        residual = free.sub(&residual);
        degrees.push(d_i);
        betti.push(lead);
    }
    if residual.is_zero() {
        let d = DegreeSequence::new(degrees)
            .map_err(|e| Error::NotPure(format!("recovered degrees invalid: {e}")))?;
        return Ok((d, betti));
    }
    Err(Error::NoTermination(max_steps))
}

/// Derived homological data for a table over an `n`-dimensional
/// Cohen-Macaulay ambient ring with multiplicity `e_ring`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleFacts {
    pub ambient_dim: i64,
    pub codim: i64,
    pub dim: i64,
    pub pdim: i64,
    pub depth: i64,
    pub cmd: i64,
    #[serde(with = "rational_string")]
    pub multiplicity: Rational,
}

mod rational_string {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }
}

/// Reads off codimension, dimension, depth (via Auslander-Buchsbaum),
/// Cohen-Macaulay defect, and multiplicity from a minimal-resolution table.
pub fn module_facts(ambient_dim: i64, e_ring: &Rational, t: &BettiTable) -> Result<ModuleFacts> {
    let codim = codim_from_table(t)? as i64;
    let pdim = t.pdim() as i64;
    let depth = ambient_dim - pdim;
    let dim = ambient_dim - codim;
    Ok(ModuleFacts {
        ambient_dim,
        codim,
        dim,
        pdim,
        depth,
        cmd: dim - depth,
        multiplicity: multiplicity_from_table(e_ring, t)?,
    })
}
