//! Hypertrees: collections of vertex subsets subject to four axioms, their
//! degree formulas, and exhaustive enumeration at small vertex counts.
//!
//! A hypertree on the vertex set `{1, …, n}` is a list of parts, each a
//! subset of at least three vertices, such that every vertex lies in at
//! least two parts (valence), the part sizes satisfy the counting identity
//! `n − 2 = Σ (|Γ_i| − 2)` (normality), and every proper sub-collection of
//! more than one part covers strictly more vertices than normality would
//! allot it (convexity).

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};

/// The first axiom failure found by [`check_axioms`], with enough data to
/// point at the offending structure.
///
/// Checks run cheapest-first: part sizes, then the normality count, then
/// valences, then convexity over all proper sub-collections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// A part has fewer than three vertices.
    PartTooSmall { index: usize, size: usize },
    /// `n − 2` differs from `Σ (|Γ_i| − 2)`.
    NormalityFailure { vertex_count: i64, part_total: i64 },
    /// A vertex lies in fewer than two parts.
    LowValence { vertex: u32, valence: u32 },
    /// A proper sub-collection of parts covers too few vertices.
    ConvexityFailure { part_indices: Vec<usize> },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::PartTooSmall { index, size } => {
                write!(f, "part #{index} has {size} vertices; parts need at least 3")
            }
            AxiomViolation::NormalityFailure {
                vertex_count,
                part_total,
            } => write!(
                f,
                "normality fails: n - 2 = {vertex_count} but the parts contribute {part_total}"
            ),
            AxiomViolation::LowValence { vertex, valence } => {
                write!(f, "vertex {vertex} lies in {valence} part(s); every vertex needs 2")
            }
            AxiomViolation::ConvexityFailure { part_indices } => write!(
                f,
                "convexity fails on the sub-collection {part_indices:?}"
            ),
        }
    }
}

/// Outcome of the axiom check: either all four hold or the first failure in
/// check order is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomCheck {
    Satisfied,
    Violated(AxiomViolation),
}

impl AxiomCheck {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, AxiomCheck::Satisfied)
    }
}

fn validate_structure(n: u32, parts: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    if n == 0 {
        return Err(Error::InvalidHypertree("vertex set is empty".into()));
    }
    if parts.is_empty() {
        return Err(Error::InvalidHypertree("no parts given".into()));
    }
    let mut sorted_parts = Vec::with_capacity(parts.len());
    for (index, part) in parts.iter().enumerate() {
        let mut part = part.clone();
        part.sort_unstable();
        if part.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypertree(format!(
                "part #{index} repeats a vertex"
            )));
        }
        if part.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::InvalidHypertree(format!(
                "part #{index} leaves the vertex set 1..={n}"
            )));
        }
        sorted_parts.push(part);
    }
    let distinct: BTreeSet<&Vec<u32>> = sorted_parts.iter().collect();
    if distinct.len() != sorted_parts.len() {
        return Err(Error::InvalidHypertree("parts repeat".into()));
    }
    Ok(sorted_parts)
}

/// Checks the four axioms on a structurally sound candidate and reports the
/// first violation.  Structural nonsense (empty input, repeated parts,
/// vertices outside `1..=n`) is an error, not a violation.
pub fn check_axioms(n: u32, parts: &[Vec<u32>]) -> Result<AxiomCheck> {
    let parts = validate_structure(n, parts)?;
    for (index, part) in parts.iter().enumerate() {
        if part.len() < 3 {
            return Ok(AxiomCheck::Violated(AxiomViolation::PartTooSmall {
                index,
                size: part.len(),
            }));
        }
    }
    let vertex_count = n as i64 - 2;
    let part_total: i64 = parts.iter().map(|p| p.len() as i64 - 2).sum();
    if vertex_count != part_total {
        return Ok(AxiomCheck::Violated(AxiomViolation::NormalityFailure {
            vertex_count,
            part_total,
        }));
    }
    let mut valences = vec![0u32; n as usize + 1];
    for part in &parts {
        for &v in part {
            valences[v as usize] += 1;
        }
    }
    for v in 1..=n {
        if valences[v as usize] < 2 {
            return Ok(AxiomCheck::Violated(AxiomViolation::LowValence {
                vertex: v,
                valence: valences[v as usize],
            }));
        }
    }
    let d = parts.len();
    for size in 2..d {
        for subset in (0..d).combinations(size) {
            let union: BTreeSet<u32> = subset
                .iter()
                .flat_map(|&i| parts[i].iter().copied())
                .collect();
            let allotted: i64 = subset.iter().map(|&i| parts[i].len() as i64 - 2).sum();
            if union.len() as i64 - 2 <= allotted {
                return Ok(AxiomCheck::Violated(AxiomViolation::ConvexityFailure {
                    part_indices: subset,
                }));
            }
        }
    }
    Ok(AxiomCheck::Satisfied)
}

/// A verified hypertree: construction runs [`check_axioms`] and refuses any
/// candidate that fails, so every value of this type satisfies all four
/// axioms.  Parts are stored sorted, the list itself in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hypertree {
    n: u32,
    parts: Vec<Vec<u32>>,
}

impl Hypertree {
    pub fn new(n: u32, parts: Vec<Vec<u32>>) -> Result<Self> {
        match check_axioms(n, &parts)? {
            AxiomCheck::Satisfied => {
                let mut parts = validate_structure(n, &parts)?;
                parts.sort();
                Ok(Self { n, parts })
            }
            AxiomCheck::Violated(violation) => Err(Error::InvalidHypertree(format!(
                "axioms fail: {violation}"
            ))),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// Number of parts, conventionally `d`.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts containing the vertex.
    pub fn valence(&self, vertex: u32) -> Result<u32> {
        if vertex == 0 || vertex > self.n {
            return Err(Error::InvalidHypertree(format!(
                "vertex {vertex} leaves the vertex set 1..={}",
                self.n
            )));
        }
        Ok(self
            .parts
            .iter()
            .filter(|part| part.binary_search(&vertex).is_ok())
            .count() as u32)
    }

    pub fn max_valence(&self) -> u32 {
        (1..=self.n)
            .map(|v| self.valence(v).expect("vertex in range"))
            .max()
            .expect("hypertrees have at least one vertex")
    }

    /// Degree of the associated divisor seen from a vertex (`d − valence`)
    /// or from outside the vertex set (`d − 1`).
    pub fn degree_at(&self, vertex: Option<u32>) -> Result<i64> {
        let d = self.part_count() as i64;
        match vertex {
            Some(v) => Ok(d - self.valence(v)? as i64),
            None => Ok(d - 1),
        }
    }

    /// Smallest degree over all viewpoints: `d − max valence`.
    pub fn min_degree(&self) -> i64 {
        self.part_count() as i64 - self.max_valence() as i64
    }

    /// Applies a relabeling given as `perm[v - 1] = new label of v`.
    fn relabeled(&self, perm: &[u32]) -> Vec<Vec<u32>> {
        let mut parts: Vec<Vec<u32>> = self
            .parts
            .iter()
            .map(|part| {
                let mut part: Vec<u32> =
                    part.iter().map(|&v| perm[v as usize - 1]).collect();
                part.sort_unstable();
                part
            })
            .collect();
        parts.sort();
        parts
    }

    /// The lexicographically least relabeling of the part list over all
    /// vertex permutations; equal canonical forms mean isomorphic
    /// hypertrees.
    ///
    /// The least form's first part is an initial segment `{1, …, s}` of
    /// minimum part size (no shorter part exists to beat it, and any equal
    /// length part matching it would equal it), so only permutations
    /// sending some minimum-size part onto `{1, …, s}` can win.  That cuts
    /// the search from `n!` to a manageable slice at the intended `n ≤ 8`.
    pub fn canonical_form(&self) -> Hypertree {
        let s = self
            .parts
            .iter()
            .map(|p| p.len())
            .min()
            .expect("hypertrees have parts");
        let all: BTreeSet<u32> = (1..=self.n).collect();
        let mut best: Option<Vec<Vec<u32>>> = None;
        let mut perm = vec![0u32; self.n as usize];
        for part in self.parts.iter().filter(|p| p.len() == s) {
            let rest: Vec<u32> = all
                .iter()
                .copied()
                .filter(|v| !part.contains(v))
                .collect();
            for head in part.iter().copied().permutations(s) {
                for (new_label, &old) in head.iter().enumerate() {
                    perm[old as usize - 1] = new_label as u32 + 1;
                }
                for tail in rest.iter().copied().permutations(rest.len()) {
                    for (offset, &old) in tail.iter().enumerate() {
                        perm[old as usize - 1] = (s + offset) as u32 + 1;
                    }
                    let candidate = self.relabeled(&perm);
                    if best.as_ref().map_or(true, |b| candidate < *b) {
                        best = Some(candidate);
                    }
                }
            }
        }
        Hypertree {
            n: self.n,
            parts: best.expect("at least one permutation considered"),
        }
    }
}

impl fmt::Display for Hypertree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{}}}", part.iter().join(","))?;
        }
        write!(f, "}} on 1..={}", self.n)
    }
}

/// All sorted subsets of `1..=n` with sizes in `3..=max_part_size`, in
/// lexicographic order.
fn part_pool(n: u32, max_part_size: u32) -> Vec<Vec<u32>> {
    let cap = max_part_size.min(n) as usize;
    let mut pool = Vec::new();
    for size in 3..=cap {
        for combo in (1..=n).combinations(size) {
            pool.push(combo);
        }
    }
    pool.sort();
    pool
}

struct SearchFrame<'a> {
    n: u32,
    pool: &'a [Vec<u32>],
    min_part_size: usize,
}

impl SearchFrame<'_> {
    /// Extends `chosen` (lex-increasing, `budget` counting the remaining
    /// `Σ (|Γ_i| − 2)`) with parts from the pool past `from`, collecting
    /// axiom-satisfying completions.
    fn extend(
        &self,
        chosen: &mut Vec<Vec<u32>>,
        valences: &mut Vec<u32>,
        budget: i64,
        from: usize,
        found: &mut Vec<Hypertree>,
    ) {
        if budget == 0 {
            if (1..=self.n).all(|v| valences[v as usize] >= 2) {
                if let Ok(AxiomCheck::Satisfied) = check_axioms(self.n, chosen) {
                    found.push(Hypertree {
                        n: self.n,
                        parts: chosen.clone(),
                    });
                }
            }
            return;
        }
        // Each future part adds at most 3·(its budget use) to total valence,
        // so the outstanding valence deficit must fit in 3·budget.
        let deficit: i64 = (1..=self.n)
            .map(|v| i64::from(2u32.saturating_sub(valences[v as usize])))
            .sum();
        if deficit > 3 * budget {
            return;
        }
        let last_lead = chosen.last().map(|part| part[0]).unwrap_or(1);
        // Parts are added in lex order, so no future part can contain a
        // vertex below the lead vertex of the last part.
        for v in 1..last_lead {
            if valences[v as usize] < 2 {
                return;
            }
        }
        for index in from..self.pool.len() {
            let part = &self.pool[index];
            let use_of_budget = part.len() as i64 - 2;
            if part.len() < self.min_part_size || use_of_budget > budget {
                continue;
            }
            // Any completed hypertree has at least three parts (one part
            // fails valence; two distinct parts cannot both contain every
            // vertex twice), so pairwise convexity applies to every pair
            // and caps intersections at one shared vertex.  Reject early.
            let compatible = chosen.iter().all(|existing| {
                part.iter()
                    .filter(|v| existing.binary_search(v).is_ok())
                    .count()
                    <= 1
            });
            if !compatible {
                continue;
            }
            chosen.push(part.clone());
            for &v in part {
                valences[v as usize] += 1;
            }
            self.extend(chosen, valences, budget - use_of_budget, index + 1, found);
            for &v in part {
                valences[v as usize] -= 1;
            }
            chosen.pop();
        }
    }
}

/// All hypertrees on `1..=n` with parts of at most `max_part_size`
/// vertices, one representative per isomorphism class, in canonical form.
///
/// The search fixes the lexicographically least part to an initial segment
/// `{1, …, s}` (always reachable by relabeling), walks lex-increasing part
/// lists under the normality budget, and deduplicates by canonical
/// relabeling.  Refuses `n` beyond the configured enumeration budget.
pub fn enumerate_hypertrees(
    n: u32,
    max_part_size: u32,
    budget: &Budget,
) -> Result<Vec<Hypertree>> {
    if n > budget.max_hypertree_n {
        return Err(Error::EnumerationBudgetExceeded {
            requested: n as u64,
            cap: budget.max_hypertree_n as u64,
        });
    }
    if n < 3 || max_part_size < 3 {
        return Ok(Vec::new());
    }
    let pool = part_pool(n, max_part_size);
    let total_budget = n as i64 - 2;
    let mut tasks = Vec::new();
    for first_size in 3..=(max_part_size.min(n) as usize) {
        let first: Vec<u32> = (1..=first_size as u32).collect();
        let use_of_budget = first.len() as i64 - 2;
        if use_of_budget > total_budget {
            continue;
        }
        let start = pool
            .binary_search(&first)
            .expect("initial segments are in the pool");
        tasks.push((first, first_size, start));
    }
    let found: Vec<Hypertree> = tasks
        .into_par_iter()
        .flat_map(|(first, first_size, start)| {
            let frame = SearchFrame {
                n,
                pool: &pool,
                min_part_size: first_size,
            };
            let mut valences = vec![0u32; n as usize + 1];
            for &v in &first {
                valences[v as usize] += 1;
            }
            let mut chosen = vec![first.clone()];
            let mut found = Vec::new();
            frame.extend(
                &mut chosen,
                &mut valences,
                total_budget - (first.len() as i64 - 2),
                start + 1,
                &mut found,
            );
            found
        })
        .collect();
    let mut classes: Vec<Hypertree> = found
        .into_iter()
        .map(|tree| tree.canonical_form())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    classes.sort();
    Ok(classes)
}
