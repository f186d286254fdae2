//! Herzog-Kuhl equation checkers, the pure-module equivalence report,
//! multiplicity of pure modules, degree-sequence classifiers, and the
//! special pure-table constructors.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagram::{pi, pi_prime, BettiTable, DegreeSequence};
use crate::hilbert::codim_from_table;
use crate::rational::{binomial, factorial, int, int_pow, Rational};
use crate::{Error, Result};

fn rationals_as_strings<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

fn rational_as_string<S: serde::Serializer>(
    q: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// `residual_l = sum_{i,j} (-1)^i j^l beta_{i,j}` for `l = 0..l_max-1`,
/// with the convention `0^0 = 1`.
pub fn hk_residuals(t: &BettiTable, l_max: u32) -> Vec<Rational> {
    (0..l_max)
        .map(|l| {
            let mut acc = Rational::zero();
            for (i, j, v) in t.iter() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                acc += v * Rational::from_integer(int_pow(j, l) * sign);
            }
            acc
        })
        .collect()
}

/// Result of checking the Herzog-Kuhl equations on a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HKReport {
    #[serde(serialize_with = "rationals_as_strings")]
    pub residuals: Vec<Rational>,
    pub satisfied: bool,
    pub pdim: usize,
    pub codim: u32,
    /// `codim == pdim`, the Cohen-Macaulay-defect equality witness.
    pub cm_equal_defect: bool,
}

/// Checks the equations `sum (-1)^i j^l beta_{i,j} = 0` for `l = 0..pdim-1`
/// and reports the codimension alongside.
pub fn satisfies_hk(t: &BettiTable) -> Result<HKReport> {
    let pdim = t.pdim();
    let codim = codim_from_table(t)?;
    let residuals = hk_residuals(t, pdim as u32);
    let satisfied = residuals.iter().all(|r| r.is_zero());
    Ok(HKReport {
        residuals,
        satisfied,
        pdim,
        codim,
        cm_equal_defect: codim as usize == pdim,
    })
}

/// Unique solution of the Herzog-Kuhl system with `beta_0` prescribed:
/// `beta_i = beta_0 * prod_{j != 0,i} |(d_j - d_0) / (d_j - d_i)|`.
pub fn hk_betti_solution(d: &DegreeSequence, beta0: &Rational) -> Result<Vec<Rational>> {
    if !beta0.is_positive() {
        return Err(Error::NonPositiveScalar(beta0.to_string()));
    }
    let diagram = pi(d);
    Ok((0..=d.p()).map(|i| beta0 * diagram.beta(i)).collect())
}

/// Four-way equivalence report for a pure table: the conditions of the
/// pure-module characterization, which must all agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm2Report {
    pub degrees: DegreeSequence,
    #[serde(serialize_with = "rational_as_string")]
    pub beta0: Rational,
    #[serde(serialize_with = "rational_as_string")]
    pub betap: Rational,
    pub codim: u32,
    pub pdim: usize,
    /// (ii) `codim == pdim`.
    pub codim_eq_pdim: bool,
    /// (iii) the Herzog-Kuhl equations hold.
    pub hk_satisfied: bool,
    /// (iv) the table equals `beta_0 * pi(d)`.
    pub equals_beta0_pi: bool,
    /// (v) the table equals `beta_p * pi'(d)`.
    pub equals_betap_pi_prime: bool,
    /// Common value of the four conditions.
    pub verdict: bool,
}

/// Evaluates the four equivalent conditions on a pure table and asserts
/// they agree; disagreement is an internal-consistency failure, never
/// silently resolved.
pub fn check_thm2(t: &BettiTable) -> Result<Thm2Report> {
    let degrees = t.is_pure().ok_or(Error::NotPureTable)?;
    let p = degrees.p();
    let beta0 = t.entry(0, degrees.get(0));
    let betap = t.entry(p, degrees.get(p));
    let codim = codim_from_table(t)?;
    let codim_eq_pdim = codim as usize == p;
    let hk_satisfied = satisfies_hk(t)?.satisfied;
    let equals_beta0_pi = *t == pi(&degrees).table().scale(&beta0)?;
    let equals_betap_pi_prime = *t == pi_prime(&degrees).table().scale(&betap)?;
    let verdict = codim_eq_pdim;
    if hk_satisfied != verdict || equals_beta0_pi != verdict || equals_betap_pi_prime != verdict {
        return Err(Error::InternalInconsistency(format!(
            "equivalence broke on {t}: codim_eq_pdim={codim_eq_pdim} hk={hk_satisfied} \
             pi={equals_beta0_pi} pi'={equals_betap_pi_prime}"
        )));
    }
    Ok(Thm2Report {
        degrees,
        beta0,
        betap,
        codim,
        pdim: p,
        codim_eq_pdim,
        hk_satisfied,
        equals_beta0_pi,
        equals_betap_pi_prime,
        verdict,
    })
}

/// Closed form `e(M) = e(R) * beta_0 / p! * prod_{j=1..p} (d_j - d_0)` for
/// pure modules whose Cohen-Macaulay defect matches the ring's.
pub fn multiplicity_pure(e_ring: &Rational, d: &DegreeSequence, beta0: &Rational) -> Rational {
    let p = d.p() as u32;
    let prod: Rational = (1..=d.p())
        .map(|j| int(d.get(j) - d.get(0)))
        .fold(Rational::one(), |a, b| a * b);
    e_ring * beta0 * prod / Rational::from_integer(factorial(p))
}

/// What a degree sequence with `d_0 = 0` forces on a pure cyclic quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicClassification {
    #[serde(serialize_with = "rational_as_string")]
    pub pi_prime_00: Rational,
    /// `pi'(d)_{0,0} >= 1`: any pure cyclic quotient of this type is Gorenstein.
    pub gorenstein_forced: bool,
    /// Differences `e_i = d_i - d_{i-1}`.
    pub diffs: Vec<i64>,
    /// The differences are non-decreasing: the complete-intersection
    /// conclusion applies.
    pub ci_forced: bool,
    /// All differences are equal. When `ci_forced` holds but the differences
    /// are unequal, no pure cyclic quotient of this type exists.
    pub equal_diffs: bool,
    /// The forced equal-degree Koszul table, when the differences are equal.
    pub forced_table: Option<BettiTable>,
}

/// Classifies a degree sequence with `d_0 = 0` against the Gorenstein and
/// complete-intersection criteria for pure cyclic quotients.
pub fn classify_pure_cyclic(d: &DegreeSequence) -> Result<CyclicClassification> {
    if d.get(0) != 0 {
        return Err(Error::NonzeroFirstDegree(d.get(0)));
    }
    let pi_prime_00 = pi_prime(d).beta(0);
    let gorenstein_forced = pi_prime_00 >= int(1);
    let diffs = d.diffs();
    let ci_forced = diffs.windows(2).all(|w| w[0] <= w[1]);
    let equal_diffs = diffs.windows(2).all(|w| w[0] == w[1]);
    let forced_table = if ci_forced && equal_diffs && !diffs.is_empty() {
        let table = koszul_table(d.p() as u32, diffs[0] as u32)?;
        debug_assert_eq!(&table, pi(d).table());
        Some(table)
    } else {
        None
    };
    Ok(CyclicClassification {
        pi_prime_00,
        gorenstein_forced,
        diffs,
        ci_forced,
        equal_diffs,
        forced_table,
    })
}

/// Verdict of the Cohen-Macaulay sufficiency criterion for a pure module
/// with prescribed first and last Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmSufficiencyVerdict {
    #[serde(serialize_with = "rational_as_string")]
    pub pi_prime_00: Rational,
    /// `pi'(d)_{0,d_0} >= 1` and `beta_0 <= beta_p`: the criterion applies
    /// and the module is Cohen-Macaulay.
    pub applies: bool,
    /// When the criterion applies, the first and last Betti numbers are in
    /// fact forced to coincide; a strict input inequality is inconsistent.
    pub inputs_consistent: bool,
    /// The forced table `beta_p * pi'(d)` when the criterion applies.
    pub forced_table: Option<BettiTable>,
}

/// Sufficient condition for Cohen-Macaulayness: when `pi'(d)_{0,d_0} >= 1`
/// and `beta_0 <= beta_p`, the module is Cohen-Macaulay with
/// `beta_0 = beta_p` and table `beta_p * pi'(d)`.
pub fn cm_sufficiency(
    d: &DegreeSequence,
    beta0: &Rational,
    betap: &Rational,
) -> Result<CmSufficiencyVerdict> {
    if !beta0.is_positive() {
        return Err(Error::NonPositiveScalar(beta0.to_string()));
    }
    if !betap.is_positive() {
        return Err(Error::NonPositiveScalar(betap.to_string()));
    }
    let diagram = pi_prime(d);
    let pi_prime_00 = diagram.beta(0);
    let applies = pi_prime_00 >= int(1) && beta0 <= betap;
    let forced_table = if applies {
        Some(diagram.table().scale(betap)?)
    } else {
        None
    };
    Ok(CmSufficiencyVerdict {
        pi_prime_00,
        applies,
        inputs_consistent: !applies || beta0 == betap,
        forced_table,
    })
}

/// Betti table of `R / <g1, g2>^d` for a regular sequence `g1, g2` of
/// degree `r`: pure of type `(0, rd, rd+r)` with Betti numbers
/// `(1, d+1, d)`.
pub fn power_ci_table(r: u32, d: u32) -> Result<BettiTable> {
    if r < 1 {
        return Err(Error::NonPositiveParameter("r"));
    }
    if d < 1 {
        return Err(Error::NonPositiveParameter("d"));
    }
    let (r, d) = (r as i64, d as i64);
    BettiTable::from_int_entries([(0, 0, 1), (1, r * d, d + 1), (2, r * d + r, d)])
}

/// Betti table of the Koszul complex on `p` forms of equal degree `r`:
/// entries `binom(p, i)` at `(i, i*r)`.
pub fn koszul_table(p: u32, r: u32) -> Result<BettiTable> {
    if p < 1 {
        return Err(Error::NonPositiveParameter("p"));
    }
    if r < 1 {
        return Err(Error::NonPositiveParameter("r"));
    }
    BettiTable::from_entries((0..=p).map(|i| {
        (
            i as usize,
            (i as i64) * (r as i64),
            Rational::from_integer(binomial(p as u64, i as u64)),
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::pi;
    use crate::rational::rat;

    fn ds(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    fn triangle_table() -> BettiTable {
        BettiTable::from_int_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]).unwrap()
    }

    fn impure_example_table() -> BettiTable {
        BettiTable::from_int_entries([(0, 0, 1), (1, 2, 2), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn residual_examples() {
        assert_eq!(
            hk_residuals(&triangle_table(), 2),
            vec![int(0), int(0)]
        );
        assert_eq!(
            hk_residuals(&impure_example_table(), 2),
            vec![int(0), int(-1)]
        );
        let free = BettiTable::from_int_entries([(0, 0, 1)]).unwrap();
        assert_eq!(hk_residuals(&free, 1), vec![int(1)]);
    }

    #[test]
    fn satisfies_hk_examples() {
        let r = satisfies_hk(&triangle_table()).unwrap();
        assert!(r.satisfied);
        assert_eq!((r.codim, r.pdim), (2, 2));
        assert!(r.cm_equal_defect);

        let r = satisfies_hk(&impure_example_table()).unwrap();
        assert!(!r.satisfied);
        assert_eq!((r.codim, r.pdim), (1, 2));
        assert!(!r.cm_equal_defect);

        let koszul = koszul_table(3, 1).unwrap();
        let r = satisfies_hk(&koszul).unwrap();
        assert!(r.satisfied);
        assert_eq!((r.codim, r.pdim), (3, 3));
    }

    #[test]
    fn hk_solution_examples() {
        assert_eq!(
            hk_betti_solution(&ds(&[0, 2, 3]), &int(1)).unwrap(),
            vec![int(1), int(3), int(2)]
        );
        assert_eq!(
            hk_betti_solution(&ds(&[0, 2, 3, 5]), &int(1)).unwrap(),
            vec![int(1), int(5), int(5), int(1)]
        );
        assert_eq!(
            hk_betti_solution(&ds(&[0, 7]), &int(1)).unwrap(),
            vec![int(1), int(1)]
        );
        assert!(hk_betti_solution(&ds(&[0, 1]), &int(0)).is_err());
    }

    #[test]
    fn thm2_examples() {
        let r = check_thm2(&triangle_table()).unwrap();
        assert!(r.verdict && r.hk_satisfied && r.equals_beta0_pi && r.equals_betap_pi_prime);

        let r = check_thm2(&impure_example_table()).unwrap();
        assert!(!r.verdict && !r.hk_satisfied && !r.equals_beta0_pi && !r.equals_betap_pi_prime);

        let scaled = triangle_table().scale(&int(2)).unwrap();
        assert!(check_thm2(&scaled).unwrap().verdict);

        let impure =
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 1), (1, 3, 1)]).unwrap();
        assert!(matches!(check_thm2(&impure), Err(Error::NotPureTable)));
    }

    #[test]
    fn multiplicity_pure_examples() {
        assert_eq!(multiplicity_pure(&int(1), &ds(&[0, 2, 3]), &int(1)), int(3));
        assert_eq!(
            multiplicity_pure(&int(1), &ds(&[0, 2, 3, 5]), &int(1)),
            int(5)
        );
        assert_eq!(multiplicity_pure(&int(1), &ds(&[0, 4]), &int(1)), int(4));
    }

    #[test]
    fn classify_examples() {
        let c = classify_pure_cyclic(&ds(&[0, 2, 3, 5])).unwrap();
        assert_eq!(c.pi_prime_00, int(1));
        assert!(c.gorenstein_forced);
        assert!(!c.ci_forced); // diffs (2,1,2) are not non-decreasing

        let c = classify_pure_cyclic(&ds(&[0, 2, 4])).unwrap();
        assert!(c.ci_forced && c.equal_diffs);
        assert_eq!(c.forced_table, Some(koszul_table(2, 2).unwrap()));

        let c = classify_pure_cyclic(&ds(&[0, 2, 3])).unwrap();
        assert_eq!(c.pi_prime_00, rat(1, 2));
        assert!(!c.gorenstein_forced && !c.ci_forced);

        assert!(matches!(
            classify_pure_cyclic(&ds(&[1, 2])),
            Err(Error::NonzeroFirstDegree(1))
        ));
    }

    #[test]
    fn cm_sufficiency_examples() {
        let v = cm_sufficiency(&ds(&[0, 2, 3, 5]), &int(1), &int(1)).unwrap();
        assert!(v.applies && v.inputs_consistent);
        assert_eq!(
            v.forced_table.unwrap(),
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)]).unwrap()
        );

        let v = cm_sufficiency(&ds(&[0, 2, 3]), &int(1), &int(2)).unwrap();
        assert!(!v.applies);

        let v = cm_sufficiency(&ds(&[0, 1, 2]), &int(1), &int(1)).unwrap();
        assert!(v.applies);
        assert_eq!(v.forced_table.unwrap(), koszul_table(2, 1).unwrap());
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(power_ci_table(1, 2).unwrap(), triangle_table());
        assert_eq!(power_ci_table(1, 1).unwrap(), koszul_table(2, 1).unwrap());
        assert_eq!(
            power_ci_table(2, 3).unwrap(),
            BettiTable::from_int_entries([(0, 0, 1), (1, 6, 4), (2, 8, 3)]).unwrap()
        );
        assert!(power_ci_table(0, 1).is_err());

        assert_eq!(
            koszul_table(3, 2).unwrap(),
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)]).unwrap()
        );
        assert!(koszul_table(3, 0).is_err());
    }

    #[test]
    fn power_table_passes_thm2_with_closed_multiplicity() {
        for r in 1..=3u32 {
            for d in 1..=3u32 {
                let t = power_ci_table(r, d).unwrap();
                assert!(check_thm2(&t).unwrap().verdict);
                let seq = ds(&[0, (r * d) as i64, (r * d + r) as i64]);
                let e = multiplicity_pure(&int(1), &seq, &int(1));
                let (r, d) = (r as i64, d as i64);
                assert_eq!(e, rat(r * r * d * (d + 1), 2));
            }
        }
    }
}
