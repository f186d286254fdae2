//! Betti tables, degree sequences, and the pure diagrams `pi(d)`, `pi'(d)`.
//!
//! Tables are stored by absolute internal degree: the entry at `(i, j)` is
//! `beta_{i,j}`. The Macaulay-style display (rows indexed by `j - i`) is a
//! presentation concern and lives in the CLI.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{int, Rational};
use crate::{Error, Result};

/// Strictly increasing integer tuple `d_0 < d_1 < ... < d_p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence {
    degrees: Vec<i64>,
}

impl DegreeSequence {
    /// Validates and wraps a list of degrees.
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyDegreeSequence);
        }
        for w in degrees.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotStrictlyIncreasing(w[0], w[1]));
            }
        }
        Ok(DegreeSequence { degrees })
    }

    /// Homological length `p` (the sequence has `p + 1` entries).
    pub fn p(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Consecutive differences `e_i = d_i - d_{i-1}`.
    pub fn diffs(&self) -> Vec<i64> {
        self.degrees.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        DegreeSequence::new(v)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Vec<i64> {
        d.degrees
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.degrees.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Finite map `(i, j) -> beta_{i,j} > 0`; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), Rational>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    i: usize,
    j: i64,
    v: String,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    entries: Vec<EntryRepr>,
}

impl TryFrom<TableRepr> for BettiTable {
    type Error = Error;
    fn try_from(r: TableRepr) -> Result<Self> {
        let mut t = BettiTable::new();
        for e in r.entries {
            let v = crate::rational::parse_rational(&e.v)
                .ok_or_else(|| Error::SyntaxError(0, format!("bad rational {:?}", e.v)))?;
            t.set(e.i, e.j, v)?;
        }
        Ok(t)
    }
}

impl From<BettiTable> for TableRepr {
    fn from(t: BettiTable) -> TableRepr {
        TableRepr {
            entries: t
                .entries
                .into_iter()
                .map(|((i, j), v)| EntryRepr {
                    i,
                    j,
                    v: v.to_string(),
                })
                .collect(),
        }
    }
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    /// Builds a table from `(i, j, value)` triples; values must be positive.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut t = BettiTable::new();
        for (i, j, v) in entries {
            t.set(i, j, v)?;
        }
        Ok(t)
    }

    /// Integer-valued convenience constructor for tests and fixtures.
    pub fn from_int_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, i64)>,
    {
        Self::from_entries(entries.into_iter().map(|(i, j, v)| (i, j, int(v))))
    }

    /// Sets `(i, j)` to `v`. Zero removes the entry; negatives are rejected.
    pub fn set(&mut self, i: usize, j: i64, v: Rational) -> Result<()> {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else if v.is_negative() {
            return Err(Error::NonPositiveEntry(v.to_string()));
        } else {
            self.entries.insert((i, j), v);
        }
        Ok(())
    }

    /// Entry at `(i, j)`, or zero when absent.
    pub fn entry(&self, i: usize, j: i64) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, i: usize, j: i64) -> Option<&Rational> {
        self.entries.get(&(i, j))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Largest homological degree with a nonzero entry; zero for empty tables.
    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Sorted internal degrees present in column `i`.
    pub fn column_degrees(&self, i: usize) -> Vec<i64> {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), _)| j)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Multiplies every entry by `c > 0`.
    pub fn scale(&self, c: &Rational) -> Result<BettiTable> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScalar(c.to_string()));
        }
        Ok(BettiTable {
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, v * c))
                .collect(),
        })
    }

    /// If every column `0..=pdim` holds exactly one entry at strictly
    /// increasing degrees, returns the degree sequence; otherwise `None`.
    pub fn is_pure(&self) -> Option<DegreeSequence> {
        if self.is_empty() {
            return None;
        }
        let p = self.pdim();
        let mut degrees = Vec::with_capacity(p + 1);
        for i in 0..=p {
            let col = self.column_degrees(i);
            if col.len() != 1 {
                return None;
            }
            degrees.push(col[0]);
        }
        DegreeSequence::new(degrees).ok()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, j, v)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}): {v}")?;
        }
        write!(f, "}}")
    }
}

/// A Betti table with exactly one entry per column, at `(i, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureDiagram {
    degrees: DegreeSequence,
    table: BettiTable,
}

impl PureDiagram {
    pub fn degrees(&self) -> &DegreeSequence {
        &self.degrees
    }

    pub fn table(&self) -> &BettiTable {
        &self.table
    }

    pub fn into_table(self) -> BettiTable {
        self.table
    }

    /// The unique entry in column `i`, i.e. the value at `(i, d_i)`.
    pub fn beta(&self, i: usize) -> Rational {
        self.table.entry(i, self.degrees.get(i))
    }
}

fn pure_diagram_with(d: &DegreeSequence, anchor: usize) -> PureDiagram {
    let p = d.p();
    let mut table = BettiTable::new();
    for i in 0..=p {
        let mut v = Rational::one();
        for k in 0..=p {
            if k == i || k == anchor {
                continue;
            }
            let num = int((d.get(k) - d.get(anchor)).abs());
            let den = int((d.get(k) - d.get(i)).abs());
            v *= num / den;
        }
        table.set(i, d.get(i), v).expect("pure diagram entries are positive");
    }
    PureDiagram {
        degrees: d.clone(),
        table,
    }
}

/// The pure diagram normalized at the first column: `pi(d)_{0,d_0} = 1`,
/// `pi(d)_{i,d_i} = prod_{k != i,0} |d_k - d_0| / |d_k - d_i|`.
pub fn pi(d: &DegreeSequence) -> PureDiagram {
    pure_diagram_with(d, 0)
}

/// The pure diagram normalized at the last column: `pi'(d)_{p,d_p} = 1`,
/// `pi'(d)_{i,d_i} = prod_{k != i,p} |d_k - d_p| / |d_k - d_i|`.
pub fn pi_prime(d: &DegreeSequence) -> PureDiagram {
    pure_diagram_with(d, d.p())
}
