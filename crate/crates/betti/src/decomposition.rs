//! Greedy decomposition of a Betti table into a positive rational
//! combination of pure diagrams.

use num_traits::Zero;
use serde::Serialize;

use crate::diagram::{pi, BettiTable, DegreeSequence};
use crate::rational::Rational;
use crate::{Error, Result};

/// A positive combination of pure diagrams plus a residual table.
/// On success the residual is empty and
/// `sum c_d * pi(d) + residual == input` exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    #[serde(serialize_with = "terms_as_strings")]
    pub terms: Vec<(Rational, DegreeSequence)>,
    pub residual: BettiTable,
}

fn terms_as_strings<S: serde::Serializer>(
    terms: &[(Rational, DegreeSequence)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct TermRepr<'a> {
        c: String,
        d: &'a DegreeSequence,
    }
    s.collect_seq(terms.iter().map(|(c, d)| TermRepr {
        c: c.to_string(),
        d,
    }))
}

impl Decomposition {
    /// Re-sums `sum c_d * pi(d) + residual` exactly.
    pub fn resum(&self) -> BettiTable {
        let mut acc = self.residual.clone();
        for (c, d) in &self.terms {
            for (i, j, v) in pi(d).table().iter() {
                let cur = acc.entry(i, j);
                acc.set(i, j, cur + c * v).expect("positive sum");
            }
        }
        acc
    }

    /// Re-sums the pi'-coefficient form against pi' diagrams.
    pub fn resum_pi_prime(terms: &[(Rational, DegreeSequence)]) -> BettiTable {
        let mut acc = BettiTable::new();
        for (c, d) in terms {
            for (i, j, v) in crate::diagram::pi_prime(d).table().iter() {
                let cur = acc.entry(i, j);
                acc.set(i, j, cur + c * v).expect("positive sum");
            }
        }
        acc
    }
}

/// Extracts the minimal strand: for each consecutive column starting at 0,
/// the minimal degree present. Returns `None` when column 0 is empty.
fn minimal_strand(t: &BettiTable) -> Option<Vec<i64>> {
    let mut strand = Vec::new();
    for i in 0.. {
        let col = t.column_degrees(i);
        match col.first() {
            Some(&j) => strand.push(j),
            None => break,
        }
    }
    if strand.is_empty() {
        None
    } else {
        Some(strand)
    }
}

/// Greedy Boij-Soderberg decomposition.
///
/// Repeatedly reads off the minimal strand, subtracts the largest multiple
/// of its pure diagram that keeps all entries non-negative, and recurs.
/// Each step zeroes at least one support element, so the loop terminates.
/// Failure (a non-increasing strand, or a strand that strands entries past
/// a column gap) is reported with the partial terms and nonzero residual.
pub fn bs_decompose(t: &BettiTable) -> Result<Decomposition> {
    let mut work = t.clone();
    let mut terms: Vec<(Rational, DegreeSequence)> = Vec::new();
    while !work.is_empty() {
        let fail = |reason: String, terms: Vec<(Rational, DegreeSequence)>, work: BettiTable| {
            Err(Error::NotDecomposable {
                reason,
                partial: Box::new(Decomposition {
                    terms,
                    residual: work,
                }),
            })
        };
        let Some(strand) = minimal_strand(&work) else {
            return fail(
                "column 0 is empty but entries remain beyond a column gap".into(),
                terms,
                work,
            );
        };
        let d = match DegreeSequence::new(strand) {
            Ok(d) => d,
            Err(e) => return fail(format!("candidate strand is invalid: {e}"), terms, work),
        };
        let diagram = pi(&d);
        let coeff = (0..=d.p())
            .map(|i| work.entry(i, d.get(i)) / diagram.beta(i))
            .min()
            .expect("strand is nonempty");
        debug_assert!(coeff > Rational::zero());
        let mut next = work.clone();
        for i in 0..=d.p() {
            let j = d.get(i);
            let v = next.entry(i, j) - &coeff * diagram.beta(i);
            if v < Rational::zero() {
                return fail(
                    format!("subtraction would go negative at ({i},{j})"),
                    terms,
                    work,
                );
            }
            next.set(i, j, v).expect("non-negative by construction");
        }
        // per-step strand ordering: degrees never decrease on shared columns
        if let Some((_, prev)) = terms.last() {
            debug_assert!((0..=d.p().min(prev.p())).all(|i| d.get(i) >= prev.get(i)));
        }
        terms.push((coeff, d));
        work = next;
    }
    Ok(Decomposition {
        terms,
        residual: BettiTable::new(),
    })
}

/// Converts pi-coefficients to pi'-coefficients:
/// `c'_d = c_d * pi(d)_{p,d_p}`.
pub fn to_pi_prime_coeffs(dec: &Decomposition) -> Vec<(Rational, DegreeSequence)> {
    dec.terms
        .iter()
        .map(|(c, d)| (c * pi(d).beta(d.p()), d.clone()))
        .collect()
}
