//! Divisor and curve classes on the Picard lattice of the blow-up model.
//!
//! The lattice is free abelian on a hyperplane generator `H` and one
//! exceptional generator `E_I` per *admissible* index set: at marking count
//! `n`, the admissible sets are the subsets of `{1, …, n−1}` with between
//! 1 and `n − 4` elements.  A [`DivisorClass`] stores `h·H + Σ e_I·E_I`
//! with the exceptional coefficients signed, so the class attached to a
//! complex has every stored `e_I` negative.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::complex::{Complex, Multiset};
use crate::error::{Error, Result};

/// A nonempty, duplicate-free, sorted set of labels naming an exceptional
/// generator `E_I`.
///
/// Whether a given set is admissible depends on the ambient `n`; that check
/// happens when the set enters a [`DivisorClass`] or [`CurveClass`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    labels: Vec<u32>,
}

impl IndexSet {
    pub fn new(labels: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut labels: Vec<u32> = labels.into_iter().collect();
        labels.sort_unstable();
        if labels.is_empty() {
            return Err(Error::InvalidClass("index set must be nonempty".into()));
        }
        if labels[0] == 0 {
            return Err(Error::InvalidClass("index set labels start at 1".into()));
        }
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidClass(format!(
                "index set {labels:?} repeats a label"
            )));
        }
        Ok(Self { labels })
    }

    /// Reads a multiset as an index set; fails if any entry repeats.
    pub fn from_multiset(m: &Multiset) -> Result<Self> {
        Self::new(m.entries().iter().copied())
    }

    /// Parses the comma-joined form, e.g. `"1,3,5,7"`.
    pub fn parse(text: &str) -> Result<Self> {
        let labels = text
            .split(',')
            .map(|part| {
                part.parse::<u32>().map_err(|_| {
                    Error::InvalidClass(format!("bad index set component {part:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels)
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: index sets are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, label: u32) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    pub fn max_label(&self) -> u32 {
        *self.labels.last().expect("index sets are nonempty")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for label in &self.labels {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
            first = false;
        }
        Ok(())
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 5 {
        return Err(Error::InvalidClass(format!(
            "the class lattice needs n >= 5, got n = {n}"
        )));
    }
    Ok(())
}

fn check_admissible(index_set: &IndexSet, n: u32) -> Result<()> {
    if index_set.max_label() > n - 1 {
        return Err(Error::LabelOutOfRange {
            label: index_set.max_label(),
            n,
        });
    }
    if index_set.len() as u32 > n - 4 {
        return Err(Error::InvalidClass(format!(
            "index set {index_set} has {} labels; at n = {n} the cap is {}",
            index_set.len(),
            n - 4
        )));
    }
    Ok(())
}

/// Every index set admissible at `n`, grouped by size, lexicographic within
/// a size.
pub fn admissible_index_sets(n: u32) -> Vec<IndexSet> {
    let mut out = Vec::new();
    if n < 5 {
        return out;
    }
    for size in 1..=(n - 4) as usize {
        for combo in (1..n).combinations(size) {
            out.push(IndexSet { labels: combo });
        }
    }
    out
}

/// An element `h·H + Σ_I e_I·E_I` of the class lattice at a fixed `n`.
///
/// Exceptional coefficients are stored signed and sparse: absent keys mean
/// zero, and zero values are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    n: u32,
    h: i64,
    e: BTreeMap<IndexSet, i64>,
}

impl DivisorClass {
    pub fn new(n: u32, h: i64, e: BTreeMap<IndexSet, i64>) -> Result<Self> {
        check_n(n)?;
        for key in e.keys() {
            check_admissible(key, n)?;
        }
        let e = e.into_iter().filter(|(_, coeff)| *coeff != 0).collect();
        Ok(Self { n, h, e })
    }

    pub fn zero(n: u32) -> Result<Self> {
        Self::new(n, 0, BTreeMap::new())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Coefficient of `H`; for the class of a complex this is its cardinality.
    pub fn h(&self) -> i64 {
        self.h
    }

    /// Signed coefficient of `E_I`; absent keys read as zero.
    pub fn e_coefficient(&self, index_set: &IndexSet) -> i64 {
        self.e.get(index_set).copied().unwrap_or(0)
    }

    pub fn exceptional_coefficients(&self) -> &BTreeMap<IndexSet, i64> {
        &self.e
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::MismatchedN {
                left: self.n,
                right: other.n,
            });
        }
        let mut e = self.e.clone();
        for (key, coeff) in &other.e {
            let value = e.get(key).copied().unwrap_or(0) + sign * coeff;
            if value == 0 {
                e.remove(key);
            } else {
                e.insert(key.clone(), value);
            }
        }
        Ok(Self {
            n: self.n,
            h: self.h + sign * other.h,
            e,
        })
    }

    pub fn scale(&self, m: i64) -> Self {
        if m == 0 {
            return Self {
                n: self.n,
                h: 0,
                e: BTreeMap::new(),
            };
        }
        Self {
            n: self.n,
            h: m * self.h,
            e: self.e.iter().map(|(k, c)| (k.clone(), m * c)).collect(),
        }
    }

    /// True when the class is a non-negative combination of exceptional
    /// generators alone: no `H` part and every stored coefficient at least
    /// zero.  The zero class qualifies (empty combination).
    pub fn is_effective_sum_of_exceptionals(&self) -> bool {
        self.h == 0 && self.e.values().all(|&coeff| coeff >= 0)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.h == 0 && self.e.is_empty() {
            return write!(f, "0");
        }
        let mut lead = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, coeff: i64, name: &str| {
            if coeff == 0 {
                return Ok(());
            }
            if lead {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            lead = false;
            let magnitude = coeff.unsigned_abs();
            if magnitude != 1 {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{name}")
        };
        write_term(f, self.h, "H")?;
        for (key, coeff) in &self.e {
            write_term(f, *coeff, &format!("E_{{{key}}}"))?;
        }
        Ok(())
    }
}

/// Intersection data of a fixed curve: its pairing against `H` and against
/// each exceptional generator, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    n: u32,
    dot_h: i64,
    dot_e: BTreeMap<IndexSet, i64>,
}

impl CurveClass {
    pub fn new(n: u32, dot_h: i64, dot_e: BTreeMap<IndexSet, i64>) -> Result<Self> {
        check_n(n)?;
        for key in dot_e.keys() {
            check_admissible(key, n)?;
        }
        let dot_e = dot_e.into_iter().filter(|(_, v)| *v != 0).collect();
        Ok(Self { n, dot_h, dot_e })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dot_h(&self) -> i64 {
        self.dot_h
    }

    pub fn dot_e(&self, index_set: &IndexSet) -> i64 {
        self.dot_e.get(index_set).copied().unwrap_or(0)
    }

    pub fn dot_e_entries(&self) -> &BTreeMap<IndexSet, i64> {
        &self.dot_e
    }
}

/// Intersection number of a curve with a divisor class: bilinear in the
/// stored coefficients.
pub fn pair(curve: &CurveClass, divisor: &DivisorClass) -> Result<i64> {
    if curve.n != divisor.n {
        return Err(Error::MismatchedN {
            left: curve.n,
            right: divisor.n,
        });
    }
    let mut total = curve.dot_h * divisor.h;
    for (key, coeff) in &divisor.e {
        total += coeff * curve.dot_e(key);
    }
    Ok(total)
}

/// The class attached to a cardinality-`c` complex: `c·H` minus, for each
/// admissible `I`, the shortfall between `c` and the largest total
/// multiplicity that any single simplex places on `I`.
///
/// Defined for every complex, balanceable or not.
pub fn divisor_class_of(complex: &Complex) -> Result<DivisorClass> {
    let n = complex.n();
    check_n(n)?;
    let c = complex.cardinality() as i64;
    let mut e = BTreeMap::new();
    for index_set in admissible_index_sets(n) {
        let best = complex
            .simplices()
            .iter()
            .map(|simplex| {
                index_set
                    .labels()
                    .iter()
                    .map(|&label| simplex.mult_of(label) as i64)
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0);
        if best < c {
            e.insert(index_set, best - c);
        }
    }
    Ok(DivisorClass { n, h: c, e })
}

/// Class of the two-point complex `{{i}, {j}}`: `H` minus every admissible
/// `E_I` whose index set avoids both labels.
pub fn boundary_binomial_class(i: u32, j: u32, n: u32) -> Result<DivisorClass> {
    check_n(n)?;
    for label in [i, j] {
        if label == 0 || label > n - 1 {
            return Err(Error::LabelOutOfRange { label, n });
        }
    }
    if i == j {
        return Err(Error::InvalidClass(format!(
            "binomial labels must differ, got {i} twice"
        )));
    }
    let e = admissible_index_sets(n)
        .into_iter()
        .filter(|set| !set.contains(i) && !set.contains(j))
        .map(|set| (set, -1))
        .collect();
    Ok(DivisorClass { n, h: 1, e })
}

/// Attempts to invert [`divisor_class_of`] at cardinality `c`: the unique
/// duplicate-free candidate puts a simplex on every `c`-subset of
/// `{1, …, n−1}` whose exceptional coefficient vanishes, and is returned
/// only if its class reproduces the input exactly.
///
/// Refuses `c > n − 4`, where distinct complexes can share a class.
pub fn unique_complex_for_class(class: &DivisorClass, c: u32) -> Result<Option<Complex>> {
    let n = class.n;
    if c == 0 {
        return Err(Error::InvalidClass(
            "reconstruction needs cardinality at least 1".into(),
        ));
    }
    if c > n - 4 {
        return Err(Error::InvalidClass(format!(
            "reconstruction is only unique for cardinality <= n - 4 = {}, got {c}",
            n - 4
        )));
    }
    let entries: Vec<Vec<u32>> = (1..n)
        .combinations(c as usize)
        .filter(|combo| {
            let set = IndexSet {
                labels: combo.clone(),
            };
            class.e_coefficient(&set) == 0
        })
        .collect();
    if entries.is_empty() {
        return Ok(None);
    }
    let candidate = Complex::from_entries(n, entries)?;
    if divisor_class_of(&candidate)? == *class {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}
