//! `betti` — command-line front end for the exact Betti-table toolkit.
//!
//! Every subcommand prints JSON with `--json` or an aligned text rendering
//! otherwise. Betti tables display Macaulay-style: columns are homological
//! degrees `i`, rows are `j - i`. Exit codes: 0 success, 1 domain error
//! (single-line diagnostic on stderr), 2 usage error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use betti::decomposition::{bs_decompose, to_pi_prime_coeffs, Decomposition};
use betti::diagram::{pi, pi_prime, BettiTable, DegreeSequence};
use betti::hilbert::{
    module_facts, module_hilbert_from_betti, polynomial_ring_hilbert, pure_betti_from_hilbert,
    HilbertSeries, LaurentPolynomial, ModuleFacts,
};
use betti::hk::{
    check_thm2, classify_pure_cyclic, cm_sufficiency, koszul_table, power_ci_table, satisfies_hk,
    CmSufficiencyVerdict, CyclicClassification, HKReport, Thm2Report,
};
use betti::oracle::{
    default_degree_bound, koszul_betti, monomial_hilbert_numerator, quotient_hilbert_values,
    DegreeBound, HomogeneousIdeal,
};
use betti::parse::parse_ideal;
use betti::rational::{parse_rational, Rational};
use betti::Error;

#[derive(Parser)]
#[command(name = "betti", version, about = "Exact Betti tables, pure diagrams, and resolutions")]
struct Cli {
    /// Emit machine-readable JSON instead of aligned text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the pure diagram of a degree sequence
    PureDiagram {
        /// Degree sequence, e.g. 0,2,3
        #[arg(long)]
        d: String,
        /// Normalization: `pi` (first entry 1) or `pi-prime` (last entry 1)
        #[arg(long, default_value = "pi")]
        variant: String,
    },
    /// Check the alternating-power-sum equations on a table
    HkCheck(TableInput),
    /// Evaluate the four equivalent purity conditions on a pure table
    Thm2Check(TableInput),
    /// Decompose a table into a positive combination of pure diagrams
    Decompose {
        #[command(flatten)]
        table: TableInput,
        /// Also list the coefficients against the last-entry normalization
        #[arg(long)]
        pi_prime: bool,
    },
    /// Multiplicity, codimension, and related invariants of a table
    Multiplicity {
        #[command(flatten)]
        table: TableInput,
        /// Multiplicity of the ambient ring (rational, default 1)
        #[arg(long, default_value = "1")]
        e_ring: String,
        /// Ambient dimension (default: projective dimension of the table)
        #[arg(long)]
        ambient_dim: Option<i64>,
    },
    /// Hilbert series of the module resolved by a table over n variables
    HilbertFromBetti {
        #[command(flatten)]
        table: TableInput,
        /// Ambient variable count
        #[arg(long)]
        n: i64,
    },
    /// Recover the pure type and Betti numbers from a Hilbert series
    BettiFromHilbert {
        #[command(flatten)]
        series: SeriesInput,
        /// Ambient variable count
        #[arg(long)]
        n: i64,
    },
    /// Graded Betti numbers of S/I by exact Koszul homology
    OracleBetti(IdealInput),
    /// Hilbert function of S/I (and its series for monomial ideals)
    OracleHilbert(IdealInput),
    /// Table of R/(g1,g2)^d for a degree-r regular sequence
    PowerTable {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
    },
    /// Table of the Koszul complex on p forms of equal degree r
    KoszulTable {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: u32,
    },
    /// What a degree sequence forces on a pure cyclic quotient
    ClassifyDegseq {
        /// Degree sequence with first entry 0, e.g. 0,2,3,5
        #[arg(long)]
        d: String,
    },
    /// Cohen-Macaulay sufficiency check for prescribed end Betti numbers
    CmSufficiency {
        #[arg(long)]
        d: String,
        #[arg(long)]
        beta0: String,
        #[arg(long)]
        betap: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TableInput {
    /// Table literal: dash-separated `i,j,v` triples, e.g. 0,0,1-1,2,2-2,3,1
    #[arg(long)]
    table: Option<String>,
    /// Read the table as JSON from a file (`-` for stdin)
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args)]
struct SeriesInput {
    /// Numerator literal: comma-separated `exp:coeff` pairs, e.g. 0:1,1:2
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    numerator: Option<String>,
    /// Read the series as JSON from a file (`-` for stdin)
    #[arg(long)]
    file: Option<String>,
    /// Pole order at z = 1 (used with --numerator)
    #[arg(long, default_value_t = 0, conflicts_with = "file")]
    pole: i64,
}

#[derive(Args)]
struct IdealInput {
    /// Generators as expressions, e.g. "x1*x2, x2*x3, x1*x3"
    #[arg(long, requires = "n", conflicts_with = "file")]
    gens: Option<String>,
    /// Ambient variable count (with --gens)
    #[arg(long)]
    n: Option<usize>,
    /// Read the ideal as JSON from a file (`-` for stdin)
    #[arg(long, required_unless_present = "gens")]
    file: Option<String>,
    /// Override the degree bound (diagnosed if Betti numbers reach it)
    #[arg(long)]
    jmax: Option<i64>,
}

fn read_file(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::SyntaxError(0, e.to_string()))
}

impl TableInput {
    fn load(&self) -> Result<BettiTable, Error> {
        if let Some(path) = &self.file {
            return parse_json(&read_file(path)?);
        }
        let literal = self.table.as_deref().expect("clap group guarantees one input");
        let mut t = BettiTable::new();
        for (k, triple) in literal.split('-').enumerate() {
            let fields: Vec<&str> = triple.split(',').map(str::trim).collect();
            let [i, j, v] = fields[..] else {
                return Err(Error::SyntaxError(
                    k,
                    format!("expected i,j,v triple, got {triple:?}"),
                ));
            };
            let i: usize = i
                .parse()
                .map_err(|_| Error::SyntaxError(k, format!("bad homological degree {i:?}")))?;
            let j: i64 = j
                .parse()
                .map_err(|_| Error::SyntaxError(k, format!("bad internal degree {j:?}")))?;
            let v = parse_rational(v)
                .ok_or_else(|| Error::SyntaxError(k, format!("bad rational {v:?}")))?;
            let cur = t.entry(i, j);
            t.set(i, j, cur + v)?;
        }
        Ok(t)
    }
}

impl SeriesInput {
    fn load(&self) -> Result<HilbertSeries, Error> {
        if let Some(path) = &self.file {
            return parse_json(&read_file(path)?);
        }
        let literal = self
            .numerator
            .as_deref()
            .expect("clap group guarantees one input");
        let mut num = LaurentPolynomial::zero();
        for (k, pair) in literal.split(',').enumerate() {
            let Some((e, c)) = pair.split_once(':') else {
                return Err(Error::SyntaxError(
                    k,
                    format!("expected exp:coeff pair, got {pair:?}"),
                ));
            };
            let e: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::SyntaxError(k, format!("bad exponent {e:?}")))?;
            let c = parse_rational(c.trim())
                .ok_or_else(|| Error::SyntaxError(k, format!("bad rational {c:?}")))?;
            num.add_term(e, c);
        }
        Ok(HilbertSeries::new(num, self.pole))
    }
}

impl IdealInput {
    fn load(&self) -> Result<HomogeneousIdeal, Error> {
        if let Some(path) = &self.file {
            return parse_json(&read_file(path)?);
        }
        let gens = self.gens.as_deref().expect("clap enforces gens or file");
        let n = self.n.expect("clap ties --n to --gens");
        parse_ideal(gens, n)
    }

    fn bound(&self, ideal: &HomogeneousIdeal) -> DegreeBound {
        match self.jmax {
            Some(j) => DegreeBound::Heuristic(j),
            None => default_degree_bound(ideal),
        }
    }
}

fn parse_degrees(text: &str) -> Result<DegreeSequence, Error> {
    let degrees = text
        .split(',')
        .enumerate()
        .map(|(k, s)| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::SyntaxError(k, format!("bad degree {s:?}")))
        })
        .collect::<Result<Vec<i64>, Error>>()?;
    DegreeSequence::new(degrees)
}

fn parse_positive_rational(text: &str) -> Result<Rational, Error> {
    parse_rational(text).ok_or_else(|| Error::SyntaxError(0, format!("bad rational {text:?}")))
}

#[derive(Serialize)]
struct PureBettiOutput {
    degrees: DegreeSequence,
    betti: Vec<String>,
}

#[derive(Serialize)]
struct OracleHilbertOutput {
    j_max: i64,
    values: Vec<u64>,
    series: Option<HilbertSeries>,
}

#[derive(Serialize)]
struct DecomposeOutput {
    #[serde(flatten)]
    decomposition: Decomposition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pi_prime_terms: Option<Vec<(String, DegreeSequence)>>,
}

enum Output {
    Table(BettiTable),
    Hk(HKReport),
    Thm2(Thm2Report),
    Decompose(DecomposeOutput),
    Facts(ModuleFacts),
    Series(HilbertSeries),
    PureBetti(PureBettiOutput),
    OracleHilbert(OracleHilbertOutput),
    Classification(CyclicClassification),
    CmVerdict(CmSufficiencyVerdict),
}

fn run(cmd: &Cmd) -> Result<Output, Error> {
    match cmd {
        Cmd::PureDiagram { d, variant } => {
            let d = parse_degrees(d)?;
            let diagram = match variant.as_str() {
                "pi" => pi(&d),
                "pi-prime" => pi_prime(&d),
                other => {
                    return Err(Error::SyntaxError(
                        0,
                        format!("unknown variant {other:?}; use pi or pi-prime"),
                    ))
                }
            };
            Ok(Output::Table(diagram.into_table()))
        }
        Cmd::HkCheck(input) => Ok(Output::Hk(satisfies_hk(&input.load()?)?)),
        Cmd::Thm2Check(input) => Ok(Output::Thm2(check_thm2(&input.load()?)?)),
        Cmd::Decompose { table, pi_prime } => {
            let dec = bs_decompose(&table.load()?)?;
            let pi_prime_terms = pi_prime.then(|| {
                to_pi_prime_coeffs(&dec)
                    .into_iter()
                    .map(|(c, d)| (c.to_string(), d))
                    .collect()
            });
            Ok(Output::Decompose(DecomposeOutput {
                decomposition: dec,
                pi_prime_terms,
            }))
        }
        Cmd::Multiplicity {
            table,
            e_ring,
            ambient_dim,
        } => {
            let t = table.load()?;
            let e_ring = parse_positive_rational(e_ring)?;
            let ambient = ambient_dim.unwrap_or(t.pdim() as i64);
            Ok(Output::Facts(module_facts(ambient, &e_ring, &t)?))
        }
        Cmd::HilbertFromBetti { table, n } => {
            let ring = polynomial_ring_hilbert(*n)?;
            Ok(Output::Series(module_hilbert_from_betti(&ring, &table.load()?)))
        }
        Cmd::BettiFromHilbert { series, n } => {
            let ring = polynomial_ring_hilbert(*n)?;
            let (degrees, betti) = pure_betti_from_hilbert(&ring, &series.load()?, 512)?;
            Ok(Output::PureBetti(PureBettiOutput {
                degrees,
                betti: betti.iter().map(Rational::to_string).collect(),
            }))
        }
        Cmd::OracleBetti(input) => {
            let ideal = input.load()?;
            Ok(Output::Table(koszul_betti(&ideal, input.bound(&ideal))?))
        }
        Cmd::OracleHilbert(input) => {
            let ideal = input.load()?;
            let j_max = input.bound(&ideal).value();
            if j_max < 0 {
                return Err(Error::NegativeDimension(j_max));
            }
            let values = quotient_hilbert_values(&ideal, j_max as u32);
            let series = if ideal.is_monomial() {
                let num = monomial_hilbert_numerator(&ideal)?;
                Some(HilbertSeries::new(num, ideal.nvars() as i64))
            } else {
                None
            };
            Ok(Output::OracleHilbert(OracleHilbertOutput {
                j_max,
                values,
                series,
            }))
        }
        Cmd::PowerTable { r, d } => Ok(Output::Table(power_ci_table(*r, *d)?)),
        Cmd::KoszulTable { p, r } => Ok(Output::Table(koszul_table(*p, *r)?)),
        Cmd::ClassifyDegseq { d } => {
            Ok(Output::Classification(classify_pure_cyclic(&parse_degrees(d)?)?))
        }
        Cmd::CmSufficiency { d, beta0, betap } => Ok(Output::CmVerdict(cm_sufficiency(
            &parse_degrees(d)?,
            &parse_positive_rational(beta0)?,
            &parse_positive_rational(betap)?,
        )?)),
    }
}

/// Macaulay-style aligned diagram: columns are homological degrees, rows
/// are `j - i`, absent entries print as `.`.
fn render_table(t: &BettiTable) -> String {
    if t.is_empty() {
        return "(empty table)".to_string();
    }
    let p = t.pdim();
    let rows: Vec<i64> = {
        let lo = t.iter().map(|(i, j, _)| j - i as i64).min().unwrap();
        let hi = t.iter().map(|(i, j, _)| j - i as i64).max().unwrap();
        (lo..=hi).collect()
    };
    let label_width = rows
        .iter()
        .map(|r| format!("{r}:").len())
        .max()
        .unwrap_or(0);
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut widths: Vec<usize> = Vec::new();
    for i in 0..=p {
        let col: Vec<String> = rows
            .iter()
            .map(|&r| match t.get(i, r + i as i64) {
                Some(v) => v.to_string(),
                None => ".".to_string(),
            })
            .collect();
        let w = col
            .iter()
            .map(String::len)
            .max()
            .unwrap()
            .max(i.to_string().len());
        widths.push(w);
        cells.push(col);
    }
    let mut out = String::new();
    out.push_str(&" ".repeat(label_width));
    for (i, w) in widths.iter().enumerate() {
        out.push_str(&format!("  {:>w$}", i, w = w));
    }
    out.push('\n');
    for (ri, r) in rows.iter().enumerate() {
        out.push_str(&format!("{:>label_width$}", format!("{r}:")));
        for (i, w) in widths.iter().enumerate() {
            out.push_str(&format!("  {:>w$}", cells[i][ri], w = w));
        }
        out.push('\n');
    }
    out
}

fn render_terms(label: &str, terms: &[(Rational, DegreeSequence)]) -> String {
    terms
        .iter()
        .map(|(c, d)| format!("{c} * {label}{d}\n"))
        .collect()
}

fn render_text(out: &Output) -> String {
    match out {
        Output::Table(t) => render_table(t),
        Output::Hk(r) => {
            let residuals: Vec<String> = r.residuals.iter().map(Rational::to_string).collect();
            format!(
                "satisfied: {}\nresiduals: ({})\npdim: {}\ncodim: {}\ncodim == pdim: {}\n",
                r.satisfied,
                residuals.join(", "),
                r.pdim,
                r.codim,
                r.cm_equal_defect
            )
        }
        Output::Thm2(r) => format!(
            "degrees: {}\nbeta0: {}\nbetap: {}\ncodim == pdim: {}\nequations satisfied: {}\n\
             equals beta0 * pi(d): {}\nequals betap * pi'(d): {}\nverdict: {}\n",
            r.degrees,
            r.beta0,
            r.betap,
            r.codim_eq_pdim,
            r.hk_satisfied,
            r.equals_beta0_pi,
            r.equals_betap_pi_prime,
            r.verdict
        ),
        Output::Decompose(d) => {
            let mut s = render_terms("pi", &d.decomposition.terms);
            if let Some(primed) = &d.pi_prime_terms {
                s.push_str("as pi' combination:\n");
                for (c, seq) in primed {
                    s.push_str(&format!("{c} * pi'{seq}\n"));
                }
            }
            s.push_str("residual: ");
            if d.decomposition.residual.is_empty() {
                s.push_str("none\n");
            } else {
                s.push('\n');
                s.push_str(&render_table(&d.decomposition.residual));
            }
            s
        }
        Output::Facts(f) => format!(
            "ambient dim: {}\ncodim: {}\ndim: {}\npdim: {}\ndepth: {}\ncm defect: {}\nmultiplicity: {}\n",
            f.ambient_dim, f.codim, f.dim, f.pdim, f.depth, f.cmd, f.multiplicity
        ),
        Output::Series(h) => format!("{h}\n"),
        Output::PureBetti(p) => format!(
            "degrees: {}\nbetti: ({})\n",
            p.degrees,
            p.betti.join(", ")
        ),
        Output::OracleHilbert(o) => {
            let values: Vec<String> = o.values.iter().map(u64::to_string).collect();
            let mut s = format!("values (j = 0..{}): {}\n", o.j_max, values.join(", "));
            if let Some(h) = &o.series {
                s.push_str(&format!("series: {h}\n"));
            }
            s
        }
        Output::Classification(c) => {
            let diffs: Vec<String> = c.diffs.iter().map(i64::to_string).collect();
            let mut s = format!(
                "pi'(d) first entry: {}\ngorenstein forced: {}\ndiffs: ({})\n\
                 non-decreasing diffs (ci forced): {}\nequal diffs: {}\n",
                c.pi_prime_00,
                c.gorenstein_forced,
                diffs.join(", "),
                c.ci_forced,
                c.equal_diffs
            );
            if let Some(t) = &c.forced_table {
                s.push_str("forced table:\n");
                s.push_str(&render_table(t));
            }
            s
        }
        Output::CmVerdict(v) => {
            let mut s = format!(
                "pi'(d) first entry: {}\napplies: {}\ninputs consistent: {}\n",
                v.pi_prime_00, v.applies, v.inputs_consistent
            );
            if let Some(t) = &v.forced_table {
                s.push_str("forced table:\n");
                s.push_str(&render_table(t));
            }
            s
        }
    }
}

fn render_json(out: &Output) -> serde_json::Value {
    match out {
        Output::Table(t) => serde_json::to_value(t),
        Output::Hk(r) => serde_json::to_value(r),
        Output::Thm2(r) => serde_json::to_value(r),
        Output::Decompose(d) => serde_json::to_value(d),
        Output::Facts(f) => serde_json::to_value(f),
        Output::Series(h) => serde_json::to_value(h),
        Output::PureBetti(p) => serde_json::to_value(p),
        Output::OracleHilbert(o) => serde_json::to_value(o),
        Output::Classification(c) => serde_json::to_value(c),
        Output::CmVerdict(v) => serde_json::to_value(v),
    }
    .expect("all outputs serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(out) => {
            if cli.json {
                println!("{}", render_json(&out));
            } else {
                print!("{}", render_text(&out));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::FAILURE
        }
    }
}
