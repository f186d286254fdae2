//! Acceptance suite: ten end-to-end criteria checked with exact arithmetic.
//! Each test prints one pass/fail line (visible with `--nocapture`).

use betti::decomposition::{bs_decompose, Decomposition};
use betti::diagram::{pi, pi_prime, BettiTable, DegreeSequence};
use betti::hilbert::{
    alternating_poly, codim_from_table, module_hilbert_from_betti, multiplicity,
    multiplicity_from_table, polynomial_ring_hilbert, pure_betti_from_hilbert,
};
use betti::hk::{
    check_thm2, classify_pure_cyclic, hk_residuals, koszul_table, multiplicity_pure,
    power_ci_table, satisfies_hk,
};
use betti::oracle::{
    default_degree_bound, koszul_betti, monomial_hilbert_numerator, quotient_hilbert_values,
    HomogeneousIdeal,
};
use betti::parse::parse_ideal;
use betti::rational::{int, rat, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn criterion(n: usize, desc: &str, f: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(f) {
        Ok(()) => println!("criterion {n}: PASS - {desc}"),
        Err(e) => {
            println!("criterion {n}: FAIL - {desc}");
            std::panic::resume_unwind(e);
        }
    }
}

fn ds(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

fn oracle_table(ideal: &HomogeneousIdeal) -> BettiTable {
    koszul_betti(ideal, default_degree_bound(ideal)).unwrap()
}

fn impure_example_ideal() -> HomogeneousIdeal {
    // <x1^2, x1 x2> in 2 variables
    HomogeneousIdeal::monomial(2, &[&[2, 0], &[1, 1]]).unwrap()
}

fn triangle_ideal() -> HomogeneousIdeal {
    // <x1 x2, x2 x3, x1 x3> in 3 variables
    HomogeneousIdeal::monomial(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).unwrap()
}

fn gorenstein_ideal() -> HomogeneousIdeal {
    parse_ideal("x1*x2, x2*x3, x1*x3, x1^2 - x2^2, x1^2 - x3^2", 3).unwrap()
}

/// `<x^r, y^r>^d` in 2 variables: generated by `x^(ra) y^(r(d-a))`.
fn power_ideal(r: u32, d: u32) -> HomogeneousIdeal {
    let gens: Vec<Vec<u32>> = (0..=d).map(|a| vec![r * a, r * (d - a)]).collect();
    let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
    HomogeneousIdeal::monomial(2, &refs).unwrap()
}

/// `<x1^r, ..., xp^r>` in p variables.
fn equal_degree_ci_ideal(p: usize, r: u32) -> HomogeneousIdeal {
    let gens: Vec<Vec<u32>> = (0..p)
        .map(|k| {
            let mut e = vec![0; p];
            e[k] = r;
            e
        })
        .collect();
    let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
    HomogeneousIdeal::monomial(p, &refs).unwrap()
}

#[test]
fn criterion_01_impure_quotient_example() {
    criterion(1, "impure quotient table, failed equations, pure-diagram inequality", || {
        let t = oracle_table(&impure_example_ideal());
        let expected =
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        assert_eq!(t, expected);
        let report = satisfies_hk(&t).unwrap();
        assert!(!report.satisfied);
        assert_eq!(report.residuals, vec![int(0), int(-1)]);
        let pure = pi(&ds(&[0, 2, 3])).table().scale(&int(1)).unwrap();
        assert_eq!(
            pure,
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]).unwrap()
        );
        assert_ne!(t, pure);
    });
}

#[test]
fn criterion_02_triangle_example() {
    criterion(2, "triangle quotient is pure of type (0,2,3) with table (1;3,2)", || {
        let t = oracle_table(&triangle_ideal());
        assert_eq!(
            t,
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]).unwrap()
        );
        let r = check_thm2(&t).unwrap();
        assert!(r.verdict && r.codim_eq_pdim && r.hk_satisfied);
        assert!(r.equals_beta0_pi && r.equals_betap_pi_prime);
        assert_eq!(t, power_ci_table(1, 2).unwrap());
    });
}

#[test]
fn criterion_03_gorenstein_example() {
    criterion(3, "Gorenstein quotient is pure of type (0,2,3,5) with table (1,5,5,1)", || {
        let t = oracle_table(&gorenstein_ideal());
        assert_eq!(
            t,
            BettiTable::from_int_entries([(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)])
                .unwrap()
        );
        assert_eq!(t.is_pure(), Some(ds(&[0, 2, 3, 5])));
        let c = classify_pure_cyclic(&ds(&[0, 2, 3, 5])).unwrap();
        assert_eq!(c.pi_prime_00, int(1));
        assert!(c.gorenstein_forced);
    });
}

#[test]
fn criterion_04_multiplicity_cross_check() {
    criterion(4, "closed-form multiplicity agrees with table formula and series", || {
        // triangle: closed form, alternating-sum formula, and the series
        // built from the oracle's numerator all give 3
        assert_eq!(multiplicity_pure(&int(1), &ds(&[0, 2, 3]), &int(1)), int(3));
        let triangle = triangle_ideal();
        let t = oracle_table(&triangle);
        assert_eq!(multiplicity_from_table(&int(1), &t).unwrap(), int(3));
        let ring3 = polynomial_ring_hilbert(3).unwrap();
        let series = ring3.mul_poly(&monomial_hilbert_numerator(&triangle).unwrap());
        assert_eq!(multiplicity(&series), int(3));

        // Gorenstein: closed form 5 equals f(1) of the quotient values (1,3,1)
        assert_eq!(
            multiplicity_pure(&int(1), &ds(&[0, 2, 3, 5]), &int(1)),
            int(5)
        );
        let gor = gorenstein_ideal();
        let values = quotient_hilbert_values(&gor, 6);
        assert_eq!(&values[..4], &[1, 3, 1, 0]);
        let total: u64 = values.iter().sum();
        assert_eq!(total, 5);
        let gt = oracle_table(&gor);
        assert_eq!(multiplicity_from_table(&int(1), &gt).unwrap(), int(5));
        assert_eq!(
            multiplicity(&module_hilbert_from_betti(&ring3, &gt)),
            int(5)
        );
    });
}

#[test]
fn criterion_05_power_family() {
    criterion(5, "powers of a length-2 regular sequence match the closed-form table", || {
        for r in 1..=2u32 {
            for d in 1..=3u32 {
                let t = oracle_table(&power_ideal(r, d));
                assert_eq!(t, power_ci_table(r, d).unwrap(), "r={r} d={d}");
                let (rd, p) = ((r * d) as i64, (r * d + r) as i64);
                assert_eq!(t.is_pure(), Some(ds(&[0, rd, p])), "r={r} d={d}");
            }
        }
    });
}

#[test]
fn criterion_06_equal_degree_koszul_family() {
    criterion(6, "equal-degree complete intersections match the binomial table", || {
        for p in 2..=3usize {
            for r in 1..=2u32 {
                let t = oracle_table(&equal_degree_ci_ideal(p, r));
                assert_eq!(t, koszul_table(p as u32, r).unwrap(), "p={p} r={r}");
            }
        }
    });
}

// --- random chain machinery for criteria 7 and 8 ---

fn random_coeff(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

fn random_degrees(rng: &mut StdRng) -> Vec<i64> {
    let len = rng.gen_range(1..=4);
    let mut d = vec![rng.gen_range(-3..3)];
    for _ in 1..len {
        let next = d.last().unwrap() + rng.gen_range(1..=3);
        d.push(next);
    }
    d
}

/// Chain of degree sequences with non-increasing lengths, termwise
/// non-decreasing on shared columns, consecutive terms distinct. Positive
/// combinations of their pure diagrams decompose greedily term by term.
fn random_chain(rng: &mut StdRng) -> Vec<(Rational, DegreeSequence)> {
    let mut cur = random_degrees(rng);
    let nterms = rng.gen_range(1..=3);
    let mut out = vec![(random_coeff(rng), ds(&cur))];
    for _ in 1..nterms {
        if cur.len() > 1 && rng.gen_bool(0.5) {
            let new_len = rng.gen_range(1..cur.len());
            cur.truncate(new_len);
        } else {
            // non-decreasing increments keep internal strict increase;
            // a positive last increment guarantees distinctness
            let mut inc = 0i64;
            let last = cur.len() - 1;
            for (k, v) in cur.iter_mut().enumerate() {
                inc += rng.gen_range(0..=1);
                if k == last && inc == 0 {
                    inc = 1;
                }
                *v += inc;
            }
        }
        out.push((random_coeff(rng), ds(&cur)));
    }
    out
}

fn chain_table(terms: &[(Rational, DegreeSequence)]) -> BettiTable {
    Decomposition {
        terms: terms.to_vec(),
        residual: BettiTable::new(),
    }
    .resum()
}

#[test]
fn criterion_07_hk_codim_duality() {
    criterion(7, "equations hold iff codimension equals projective dimension (200 random tables)", || {
        let mut rng = StdRng::seed_from_u64(0x4845_524b);
        let (mut seen_true, mut seen_false) = (0usize, 0usize);
        for _ in 0..200 {
            let mut t = chain_table(&random_chain(&mut rng));
            if rng.gen_bool(0.5) {
                // positive perturbation in homological position 0
                let j = rng.gen_range(-2..6);
                let cur = t.entry(0, j);
                t.set(0, j, cur + int(rng.gen_range(1..=3))).unwrap();
            }
            let satisfied = satisfies_hk(&t).unwrap().satisfied;
            let codim_eq_pdim = codim_from_table(&t).unwrap() as usize == t.pdim();
            assert_eq!(satisfied, codim_eq_pdim, "table {t}");
            if satisfied {
                seen_true += 1;
            } else {
                seen_false += 1;
            }
        }
        // both sides of the equivalence must actually be exercised
        assert!(seen_true > 0 && seen_false > 0);
    });
}

#[test]
fn criterion_08_decomposition_round_trips() {
    criterion(8, "greedy decomposition re-sums exactly with empty residual", || {
        // the worked impure example splits into halves
        let t = BettiTable::from_int_entries([(0, 0, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        let dec = bs_decompose(&t).unwrap();
        assert_eq!(
            dec.terms,
            vec![(rat(1, 2), ds(&[0, 2, 3])), (rat(1, 2), ds(&[0, 2]))]
        );
        assert!(dec.residual.is_empty());
        assert_eq!(dec.resum(), t);

        // every Cohen-Macaulay table produced by the homology engine
        let mut cm_tables = vec![oracle_table(&triangle_ideal()), oracle_table(&gorenstein_ideal())];
        for r in 1..=2u32 {
            for d in 1..=3u32 {
                cm_tables.push(oracle_table(&power_ideal(r, d)));
            }
        }
        for p in 2..=3usize {
            for r in 1..=2u32 {
                cm_tables.push(oracle_table(&equal_degree_ci_ideal(p, r)));
            }
        }
        for t in &cm_tables {
            let dec = bs_decompose(t).unwrap();
            assert!(dec.residual.is_empty(), "table {t}");
            assert_eq!(&dec.resum(), t);
        }

        // random chain-built tables decompose back into their chains
        let mut rng = StdRng::seed_from_u64(0x4253_4445);
        for _ in 0..50 {
            let chain = random_chain(&mut rng);
            let t = chain_table(&chain);
            let dec = bs_decompose(&t).unwrap();
            assert!(dec.residual.is_empty(), "table {t}");
            assert_eq!(dec.resum(), t);
            assert_eq!(dec.terms, chain, "table {t}");
        }
    });
}

#[test]
fn criterion_09_hilbert_round_trips() {
    criterion(9, "series-table conversions invert; inclusion-exclusion matches homology", || {
        // pure fixtures: recover type and Betti numbers from the series
        let mut fixtures: Vec<BettiTable> = vec![
            oracle_table(&triangle_ideal()),
            oracle_table(&gorenstein_ideal()),
            pi(&ds(&[0, 2, 3])).into_table(),
            pi_prime(&ds(&[0, 1, 3, 4])).into_table(),
        ];
        for r in 1..=2u32 {
            for d in 1..=3u32 {
                fixtures.push(power_ci_table(r, d).unwrap());
            }
        }
        for p in 2..=3u32 {
            for r in 1..=2u32 {
                fixtures.push(koszul_table(p, r).unwrap());
            }
        }
        for t in &fixtures {
            let d = t.is_pure().expect("fixtures are pure");
            let ring = polynomial_ring_hilbert(d.p() as i64 + 1).unwrap();
            let series = module_hilbert_from_betti(&ring, t);
            let (back_d, back_b) = pure_betti_from_hilbert(&ring, &series, 64).unwrap();
            assert_eq!(back_d, d, "table {t}");
            for i in 0..=d.p() {
                assert_eq!(back_b[i], t.entry(i, d.get(i)), "table {t}");
            }
        }

        // monomial fixtures: inclusion-exclusion numerator equals the
        // alternating polynomial of the homology table
        let mut ideals = vec![impure_example_ideal(), triangle_ideal()];
        for r in 1..=2u32 {
            for d in 1..=3u32 {
                ideals.push(power_ideal(r, d));
            }
        }
        for p in 2..=3usize {
            for r in 1..=2u32 {
                ideals.push(equal_degree_ci_ideal(p, r));
            }
        }
        for ideal in &ideals {
            let numerator = monomial_hilbert_numerator(ideal).unwrap();
            let table = oracle_table(ideal);
            assert_eq!(numerator, alternating_poly(&table));
        }
    });
}

#[test]
fn criterion_10_euler_characteristic_per_degree() {
    criterion(10, "alternating sums reproduce quotient dimensions in every degree", || {
        let mut ideals = vec![impure_example_ideal(), triangle_ideal(), gorenstein_ideal()];
        for r in 1..=2u32 {
            for d in 1..=3u32 {
                ideals.push(power_ideal(r, d));
            }
        }
        for p in 2..=3usize {
            for r in 1..=2u32 {
                ideals.push(equal_degree_ci_ideal(p, r));
            }
        }
        for ideal in &ideals {
            let bound = default_degree_bound(ideal);
            let j_max = bound.value();
            let table = koszul_betti(ideal, bound).unwrap();
            let ring = polynomial_ring_hilbert(ideal.nvars() as i64).unwrap();
            let series = ring.mul_poly(&alternating_poly(&table));
            let values = quotient_hilbert_values(ideal, j_max as u32);
            for (k, v) in values.iter().enumerate() {
                assert_eq!(
                    series.coefficient(k as i64),
                    int(*v as i64),
                    "degree {k}"
                );
            }
        }
    });
}
