//! Pattern classification and exhaustive enumeration of minimal graphs.
//!
//! A graph here is a 1-complex: every simplex has cardinality 2, and a
//! loop `{v, v}` is allowed (it behaves as an odd cycle with a single
//! edge). Minimal graphs fall into a short catalogue of shapes — a single
//! even cycle, or two odd cycles that share a vertex, are disjoint
//! (characteristic 2 only), or are joined by a path of bivalent vertices
//! (away from characteristic 2). [`classify_graph`] recognises the shape
//! purely combinatorially, [`enumerate_minimal_graphs`] lists every
//! isomorphism class up to a vertex budget by exhaustive search against
//! the linear-algebra verdict, and [`is_irreducible_degree_two`] renders
//! the irreducibility verdict for the associated degree-two divisor
//! class.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::budget::Budget;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::solver::nullspace_of;

/// The shape of a graph as far as minimality is concerned.
///
/// Cycle lengths attached to a minimal tag respect the parity the tag
/// demands: `EvenCycle` carries an even length, the two-cycle tags carry
/// two odd lengths (sorted ascending), and a loop counts as an odd cycle
/// of length 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphShape {
    /// A single cycle of even length, minimal in every characteristic.
    EvenCycle { length: u32 },
    /// Two odd cycles meeting in exactly one vertex, minimal in every
    /// characteristic.
    TwoOddCyclesSharedVertex { lengths: (u32, u32) },
    /// Two vertex-disjoint odd cycles, minimal exactly in
    /// characteristic 2.
    TwoOddCyclesDisjoint { lengths: (u32, u32) },
    /// Two disjoint odd cycles joined by a single path of bivalent
    /// vertices, minimal exactly away from characteristic 2.
    TwoOddCyclesPath { lengths: (u32, u32), path_length: u32 },
    /// Any other graph; such a graph is never minimal.
    NotMinimalPattern,
}

impl GraphShape {
    /// True for every tag except [`GraphShape::NotMinimalPattern`].
    pub fn is_minimal_tag(&self) -> bool {
        !matches!(self, GraphShape::NotMinimalPattern)
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::EvenCycle { length } => write!(f, "even cycle of length {length}"),
            GraphShape::TwoOddCyclesSharedVertex { lengths: (a, b) } => {
                write!(f, "odd cycles of lengths {a} and {b} sharing a vertex")
            }
            GraphShape::TwoOddCyclesDisjoint { lengths: (a, b) } => {
                write!(f, "disjoint odd cycles of lengths {a} and {b}")
            }
            GraphShape::TwoOddCyclesPath { lengths: (a, b), path_length } => write!(
                f,
                "odd cycles of lengths {a} and {b} joined by a path of length {path_length}"
            ),
            GraphShape::NotMinimalPattern => write!(f, "no minimal pattern"),
        }
    }
}

/// Edges of a 1-complex as ordered pairs `(a, b)` with `a <= b`.
fn edge_list(complex: &Complex) -> Result<Vec<(u32, u32)>> {
    if complex.cardinality() != 2 {
        return Err(Error::InvalidComplex(format!(
            "graph operations need cardinality 2, got {}",
            complex.cardinality()
        )));
    }
    Ok(complex
        .simplices()
        .iter()
        .map(|s| {
            let e = s.entries();
            (e[0], e[1])
        })
        .collect())
}

/// Incidence data for walking a graph: per-vertex degree (a loop adds
/// two), the non-loop edges at each vertex, and the loop at each vertex
/// when present (set semantics allow at most one).
struct Incidence {
    degree: BTreeMap<u32, u32>,
    incident: BTreeMap<u32, Vec<usize>>,
    loops: BTreeMap<u32, usize>,
}

impl Incidence {
    fn new(edges: &[(u32, u32)]) -> Self {
        let mut degree: BTreeMap<u32, u32> = BTreeMap::new();
        let mut incident: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        let mut loops: BTreeMap<u32, usize> = BTreeMap::new();
        for (idx, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                *degree.entry(a).or_insert(0) += 2;
                loops.insert(a, idx);
            } else {
                *degree.entry(a).or_insert(0) += 1;
                *degree.entry(b).or_insert(0) += 1;
                incident.entry(a).or_default().push(idx);
                incident.entry(b).or_default().push(idx);
            }
        }
        for &v in degree.keys() {
            incident.entry(v).or_default();
        }
        Incidence { degree, incident, loops }
    }

    fn vertices_of_degree(&self, d: u32) -> Vec<u32> {
        self.degree
            .iter()
            .filter(|&(_, &deg)| deg == d)
            .map(|(&v, _)| v)
            .collect()
    }
}

fn other_end(edge: (u32, u32), from: u32) -> u32 {
    if edge.0 == from { edge.1 } else { edge.0 }
}

/// Follows unused edges from `start` through bivalent vertices until a
/// stop vertex is reached, marking edges used; returns the stop vertex
/// and the number of edges traversed. Every non-stop vertex on the walk
/// has degree 2 with no loop, so the continuation is always unique.
fn walk(
    start: u32,
    first: usize,
    edges: &[(u32, u32)],
    inc: &Incidence,
    used: &mut [bool],
    stops: &BTreeSet<u32>,
) -> (u32, u32) {
    used[first] = true;
    let mut current = other_end(edges[first], start);
    let mut length = 1;
    while !stops.contains(&current) {
        let next = inc.incident[&current]
            .iter()
            .copied()
            .find(|&e| !used[e])
            .expect("a bivalent interior vertex always has one unused edge");
        used[next] = true;
        current = other_end(edges[next], current);
        length += 1;
    }
    (current, length)
}

/// All closed walks based at `v` (its loop counts as one of length 1),
/// or `None` when some walk from `v` fails to return to it.
fn closed_walks_at(
    v: u32,
    edges: &[(u32, u32)],
    inc: &Incidence,
    used: &mut [bool],
) -> Option<Vec<u32>> {
    let mut lengths = Vec::new();
    if let Some(&l) = inc.loops.get(&v) {
        used[l] = true;
        lengths.push(1);
    }
    let stops = BTreeSet::from([v]);
    for &e in &inc.incident[&v] {
        if used[e] {
            continue;
        }
        let (end, len) = walk(v, e, edges, inc, used, &stops);
        if end != v {
            return None;
        }
        lengths.push(len);
    }
    Some(lengths)
}

/// Recognises which minimality pattern, if any, a graph matches in the
/// given characteristic.
///
/// The graph is scanned for its degree signature first: minimal graphs
/// only ever have vertices of degree 2 plus either one vertex of degree
/// 4 (two cycles sharing a vertex) or two of degree 3 (two cycles joined
/// by a path, or a theta graph — the latter is rejected by walking).
/// Everything else is [`GraphShape::NotMinimalPattern`].
pub fn classify_graph(complex: &Complex, field: FieldSpec) -> Result<GraphShape> {
    let edges = edge_list(complex)?;
    let inc = Incidence::new(&edges);
    let char2 = field.characteristic() == 2;

    if inc.degree.values().any(|&d| d != 2 && d != 3 && d != 4) {
        return Ok(GraphShape::NotMinimalPattern);
    }
    let threes = inc.vertices_of_degree(3);
    let fours = inc.vertices_of_degree(4);
    let mut used = vec![false; edges.len()];

    let shape = match (fours.as_slice(), threes.as_slice()) {
        // Every vertex bivalent: a disjoint union of cycles (a vertex
        // whose degree comes from a loop alone is its own 1-cycle).
        ([], []) => {
            let mut lengths = Vec::new();
            for (&v, &l) in &inc.loops {
                if inc.degree[&v] == 2 {
                    used[l] = true;
                    lengths.push(1);
                }
            }
            for start in 0..edges.len() {
                if used[start] {
                    continue;
                }
                let base = edges[start].0;
                let stops = BTreeSet::from([base]);
                let (end, len) = walk(base, start, &edges, &inc, &mut used, &stops);
                debug_assert_eq!(end, base);
                lengths.push(len);
            }
            lengths.sort_unstable();
            match lengths.as_slice() {
                [m] if m % 2 == 0 => GraphShape::EvenCycle { length: *m },
                [m1, m2] if m1 % 2 == 1 && m2 % 2 == 1 && char2 => {
                    GraphShape::TwoOddCyclesDisjoint { lengths: (*m1, *m2) }
                }
                _ => GraphShape::NotMinimalPattern,
            }
        }
        // One vertex of degree 4: candidate pair of cycles sharing it.
        ([v], []) => match closed_walks_at(*v, &edges, &inc, &mut used) {
            Some(mut lengths) if lengths.len() == 2 => {
                lengths.sort_unstable();
                if lengths[0] % 2 == 1 && lengths[1] % 2 == 1 {
                    GraphShape::TwoOddCyclesSharedVertex { lengths: (lengths[0], lengths[1]) }
                } else {
                    GraphShape::NotMinimalPattern
                }
            }
            _ => GraphShape::NotMinimalPattern,
        },
        // Two vertices of degree 3: candidate cycles joined by a path,
        // with the theta graph showing up as three a-to-b walks.
        ([], [a, b]) => {
            let mut cycles_a = Vec::new();
            let mut paths = Vec::new();
            if let Some(&l) = inc.loops.get(a) {
                used[l] = true;
                cycles_a.push(1);
            }
            let stops = BTreeSet::from([*a, *b]);
            for &e in &inc.incident[a] {
                if used[e] {
                    continue;
                }
                let (end, len) = walk(*a, e, &edges, &inc, &mut used, &stops);
                if end == *a {
                    cycles_a.push(len);
                } else {
                    paths.push(len);
                }
            }
            match closed_walks_at(*b, &edges, &inc, &mut used) {
                Some(cycles_b)
                    if cycles_a.len() == 1 && cycles_b.len() == 1 && paths.len() == 1 =>
                {
                    let (m1, m2) = (cycles_a[0].min(cycles_b[0]), cycles_a[0].max(cycles_b[0]));
                    if m1 % 2 == 1 && m2 % 2 == 1 && !char2 {
                        GraphShape::TwoOddCyclesPath { lengths: (m1, m2), path_length: paths[0] }
                    } else {
                        GraphShape::NotMinimalPattern
                    }
                }
                _ => GraphShape::NotMinimalPattern,
            }
        }
        _ => GraphShape::NotMinimalPattern,
    };

    // A matched pattern must also account for every edge; leftovers mean
    // extra components alongside the recognised one.
    if shape.is_minimal_tag() && !used.iter().all(|&u| u) {
        return Ok(GraphShape::NotMinimalPattern);
    }
    Ok(shape)
}

/// Whether the degree-two divisor class attached to the graph is
/// irreducible: the graph must match a minimal tag for the field, be
/// loop-free, and not be the square (the 4-cycle is the lone minimal
/// exception). Requires `n >= 6` so that degree-two classes exist.
pub fn is_irreducible_degree_two(complex: &Complex, field: FieldSpec) -> Result<bool> {
    if complex.n() < 6 {
        return Err(Error::InvalidClass(format!(
            "degree-two irreducibility needs n >= 6, got n = {}",
            complex.n()
        )));
    }
    let shape = classify_graph(complex, field)?;
    let has_loop = complex.simplices().iter().any(|s| s.is_singular());
    Ok(shape.is_minimal_tag()
        && !has_loop
        && shape != GraphShape::EvenCycle { length: 4 })
}

/// A minimal graph found by exhaustive search: its canonical labeling,
/// its recognised shape, and a spanning nullspace vector (parallel to
/// the canonical simplex order, every entry nonzero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalGraph {
    pub complex: Complex,
    pub shape: GraphShape,
    pub witness: Vec<Scalar>,
}

/// All unordered pairs `(a, b)` with `1 <= a <= b <= k`: the possible
/// edges (loops included) on `k` vertices.
fn edge_pool(k: u32) -> Vec<(u32, u32)> {
    let mut pool = Vec::new();
    for a in 1..=k {
        for b in a..=k {
            pool.push((a, b));
        }
    }
    pool
}

/// The lexicographically least relabeling of an edge list over all
/// permutations of `1..=k`. Brute force is fine at this scale.
fn canonical_edges(edges: &[(u32, u32)], k: u32) -> Vec<(u32, u32)> {
    (1..=k)
        .permutations(k as usize)
        .map(|perm| {
            let mut relabeled: Vec<(u32, u32)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[(a - 1) as usize], perm[(b - 1) as usize]);
                    (x.min(y), x.max(y))
                })
                .collect();
            relabeled.sort_unstable();
            relabeled
        })
        .min()
        .expect("k >= 1 yields at least the identity permutation")
}

/// Exhaustively lists the minimal graphs on at most `max_vertices`
/// vertices (loops allowed), one representative per isomorphism class,
/// each validated by the nullspace criterion and therefore guaranteed to
/// carry a minimal shape tag.
///
/// The search runs per exact support size `k`: edge sets are pruned to
/// those with every vertex of degree at least 2 (a pendant vertex forces
/// its edge weight to zero) and at most `k + 2` edges (the balancing
/// system has at most `k + 1` face rows — the empty face and one per
/// vertex — so more edges leave a nullspace of dimension at least 2).
pub fn enumerate_minimal_graphs(
    max_vertices: u32,
    field: FieldSpec,
    budget: &Budget,
) -> Result<Vec<MinimalGraph>> {
    if max_vertices > budget.max_graph_vertices {
        return Err(Error::EnumerationBudgetExceeded {
            requested: u64::from(max_vertices),
            cap: u64::from(budget.max_graph_vertices),
        });
    }
    let mut found: BTreeMap<Vec<(u32, u32)>, MinimalGraph> = BTreeMap::new();
    for k in 1..=max_vertices {
        let pool = edge_pool(k);
        let lo = (k as usize).max(2);
        let hi = (k as usize + 2).min(pool.len());
        for count in lo..=hi {
            for combo in pool.iter().combinations(count) {
                let mut degree = vec![0u32; k as usize + 1];
                for &&(a, b) in &combo {
                    if a == b {
                        degree[a as usize] += 2;
                    } else {
                        degree[a as usize] += 1;
                        degree[b as usize] += 1;
                    }
                }
                // Exact support [1..=k] (smaller supports are covered by
                // smaller k) with no pendant vertices.
                if degree[1..].iter().any(|&d| d < 2) {
                    continue;
                }
                let entries: Vec<Vec<u32>> =
                    combo.iter().map(|&&(a, b)| vec![a, b]).collect();
                let complex = Complex::from_entries(k + 1, entries)?;
                let nullspace = nullspace_of(&complex, field);
                if nullspace.dimension != 1
                    || nullspace.basis[0].iter().any(|x| x.is_zero())
                {
                    continue;
                }
                let edges: Vec<(u32, u32)> =
                    combo.iter().map(|&&(a, b)| (a, b)).collect();
                let canon = canonical_edges(&edges, k);
                if found.contains_key(&canon) {
                    continue;
                }
                let canon_entries: Vec<Vec<u32>> =
                    canon.iter().map(|&(a, b)| vec![a, b]).collect();
                let canon_complex = Complex::from_entries(k + 1, canon_entries)?;
                let canon_nullspace = nullspace_of(&canon_complex, field);
                let shape = classify_graph(&canon_complex, field)?;
                debug_assert!(shape.is_minimal_tag());
                found.insert(
                    canon,
                    MinimalGraph {
                        complex: canon_complex,
                        shape,
                        witness: canon_nullspace.basis[0].clone(),
                    },
                );
            }
        }
    }
    let mut out: Vec<MinimalGraph> = found.into_values().collect();
    out.sort_by_key(|g| {
        (g.complex.support().len(), g.complex.len(), g.complex.simplices().to_vec())
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::WeightedComplex;
    use crate::solver::{brute_force_minimal_oracle, decide_balanceable, is_minimal};
    use crate::testutil::{cycle, k4, two_triangles_disjoint};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fq() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn graph(n: u32, edges: &[[u32; 2]]) -> Complex {
        Complex::from_entries(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn classifies_single_cycles_by_parity() {
        for field in [fq(), fp(2), fp(3)] {
            assert_eq!(
                classify_graph(&cycle(5, 4), field).unwrap(),
                GraphShape::EvenCycle { length: 4 }
            );
            assert_eq!(
                classify_graph(&cycle(7, 6), field).unwrap(),
                GraphShape::EvenCycle { length: 6 }
            );
            assert_eq!(
                classify_graph(&cycle(9, 8), field).unwrap(),
                GraphShape::EvenCycle { length: 8 }
            );
            assert_eq!(
                classify_graph(&cycle(6, 5), field).unwrap(),
                GraphShape::NotMinimalPattern
            );
            assert_eq!(
                classify_graph(&cycle(4, 3), field).unwrap(),
                GraphShape::NotMinimalPattern
            );
        }
    }

    #[test]
    fn classifies_shared_vertex_pairs_in_any_characteristic() {
        let bowtie = graph(6, &[[1, 2], [2, 3], [1, 3], [1, 4], [4, 5], [1, 5]]);
        let loop_triangle = graph(4, &[[1, 1], [1, 2], [2, 3], [1, 3]]);
        for field in [fq(), fp(2), fp(3)] {
            assert_eq!(
                classify_graph(&bowtie, field).unwrap(),
                GraphShape::TwoOddCyclesSharedVertex { lengths: (3, 3) }
            );
            assert_eq!(
                classify_graph(&loop_triangle, field).unwrap(),
                GraphShape::TwoOddCyclesSharedVertex { lengths: (1, 3) }
            );
        }
        // A loop attached to an even cycle fails the parity requirement.
        let loop_square = graph(5, &[[1, 1], [1, 2], [2, 3], [3, 4], [1, 4]]);
        assert_eq!(
            classify_graph(&loop_square, fq()).unwrap(),
            GraphShape::NotMinimalPattern
        );
    }

    #[test]
    fn classifies_disjoint_pairs_only_in_characteristic_two() {
        let triangles = two_triangles_disjoint();
        assert_eq!(
            classify_graph(&triangles, fp(2)).unwrap(),
            GraphShape::TwoOddCyclesDisjoint { lengths: (3, 3) }
        );
        assert_eq!(classify_graph(&triangles, fq()).unwrap(), GraphShape::NotMinimalPattern);
        assert_eq!(classify_graph(&triangles, fp(3)).unwrap(), GraphShape::NotMinimalPattern);

        let two_loops = graph(3, &[[1, 1], [2, 2]]);
        assert_eq!(
            classify_graph(&two_loops, fp(2)).unwrap(),
            GraphShape::TwoOddCyclesDisjoint { lengths: (1, 1) }
        );
        assert_eq!(classify_graph(&two_loops, fq()).unwrap(), GraphShape::NotMinimalPattern);

        // One even component spoils the pair even in characteristic 2.
        let triangle_square =
            graph(8, &[[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [6, 7], [4, 7]]);
        assert_eq!(
            classify_graph(&triangle_square, fp(2)).unwrap(),
            GraphShape::NotMinimalPattern
        );
    }

    #[test]
    fn classifies_path_joined_pairs_away_from_characteristic_two() {
        let dumbbell =
            graph(7, &[[1, 2], [1, 3], [2, 3], [3, 4], [4, 5], [4, 6], [5, 6]]);
        for field in [fq(), fp(3), fp(5)] {
            assert_eq!(
                classify_graph(&dumbbell, field).unwrap(),
                GraphShape::TwoOddCyclesPath { lengths: (3, 3), path_length: 1 }
            );
        }
        assert_eq!(classify_graph(&dumbbell, fp(2)).unwrap(), GraphShape::NotMinimalPattern);

        let loops_short = graph(3, &[[1, 1], [1, 2], [2, 2]]);
        assert_eq!(
            classify_graph(&loops_short, fq()).unwrap(),
            GraphShape::TwoOddCyclesPath { lengths: (1, 1), path_length: 1 }
        );
        let loops_long = graph(4, &[[1, 1], [1, 2], [2, 3], [3, 3]]);
        assert_eq!(
            classify_graph(&loops_long, fq()).unwrap(),
            GraphShape::TwoOddCyclesPath { lengths: (1, 1), path_length: 2 }
        );
        let loop_to_triangle = graph(6, &[[1, 1], [1, 2], [2, 3], [3, 4], [2, 4]]);
        assert_eq!(
            classify_graph(&loop_to_triangle, fp(3)).unwrap(),
            GraphShape::TwoOddCyclesPath { lengths: (1, 3), path_length: 1 }
        );
    }

    #[test]
    fn rejects_thetas_junk_and_wrong_cardinality() {
        // Theta: two trivalent vertices joined by three paths.
        let theta = graph(5, &[[1, 2], [2, 3], [1, 3], [1, 4], [3, 4]]);
        for field in [fq(), fp(2), fp(3)] {
            assert_eq!(classify_graph(&theta, field).unwrap(), GraphShape::NotMinimalPattern);
        }
        // A single edge, a single loop, a star.
        assert_eq!(
            classify_graph(&graph(3, &[[1, 2]]), fq()).unwrap(),
            GraphShape::NotMinimalPattern
        );
        assert_eq!(
            classify_graph(&graph(2, &[[1, 1]]), fq()).unwrap(),
            GraphShape::NotMinimalPattern
        );
        assert_eq!(
            classify_graph(&graph(5, &[[1, 2], [1, 3], [1, 4]]), fq()).unwrap(),
            GraphShape::NotMinimalPattern
        );
        // A shared-vertex pair with a floating square left over.
        let bowtie_plus = graph(
            10,
            &[[1, 2], [2, 3], [1, 3], [1, 4], [4, 5], [1, 5], [6, 7], [7, 8], [8, 9], [6, 9]],
        );
        assert_eq!(classify_graph(&bowtie_plus, fq()).unwrap(), GraphShape::NotMinimalPattern);
        // The complete graph on four vertices balances in two independent
        // ways, so it carries no minimal pattern.
        assert_eq!(classify_graph(&k4(), fq()).unwrap(), GraphShape::NotMinimalPattern);
        // Wrong cardinality is a structural error, not a verdict.
        let triangle_complex = Complex::from_entries(5, vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            classify_graph(&triangle_complex, fq()),
            Err(Error::InvalidComplex(_))
        ));
    }

    #[test]
    fn irreducibility_excludes_square_loops_and_small_n() {
        assert!(!is_irreducible_degree_two(&cycle(6, 4), fq()).unwrap());
        assert!(is_irreducible_degree_two(&cycle(7, 6), fq()).unwrap());
        let bowtie = graph(6, &[[1, 2], [2, 3], [1, 3], [1, 4], [4, 5], [1, 5]]);
        assert!(is_irreducible_degree_two(&bowtie, fq()).unwrap());
        assert!(is_irreducible_degree_two(&bowtie, fp(2)).unwrap());
        // Loops disqualify even when the shape tag is minimal.
        let loop_triangle = graph(6, &[[1, 1], [1, 2], [2, 3], [1, 3]]);
        assert!(!is_irreducible_degree_two(&loop_triangle, fq()).unwrap());
        // Non-minimal shapes are reducible.
        assert!(!is_irreducible_degree_two(&cycle(6, 5), fq()).unwrap());
        // Degree-two classes need n >= 6.
        assert!(matches!(
            is_irreducible_degree_two(&cycle(5, 4), fq()),
            Err(Error::InvalidClass(_))
        ));
    }

    #[test]
    fn enumeration_on_four_vertices_matches_the_catalogue() {
        let budget = Budget::default();
        let over_q = enumerate_minimal_graphs(4, fq(), &budget).unwrap();
        let shapes: BTreeSet<GraphShape> = over_q.iter().map(|g| g.shape).collect();
        let expected: BTreeSet<GraphShape> = [
            GraphShape::EvenCycle { length: 4 },
            GraphShape::TwoOddCyclesSharedVertex { lengths: (1, 3) },
            GraphShape::TwoOddCyclesPath { lengths: (1, 1), path_length: 1 },
            GraphShape::TwoOddCyclesPath { lengths: (1, 1), path_length: 2 },
            GraphShape::TwoOddCyclesPath { lengths: (1, 1), path_length: 3 },
            GraphShape::TwoOddCyclesPath { lengths: (1, 3), path_length: 1 },
        ]
        .into();
        assert_eq!(over_q.len(), 6);
        assert_eq!(shapes, expected);

        let over_f2 = enumerate_minimal_graphs(4, fp(2), &budget).unwrap();
        let shapes2: BTreeSet<GraphShape> = over_f2.iter().map(|g| g.shape).collect();
        let expected2: BTreeSet<GraphShape> = [
            GraphShape::EvenCycle { length: 4 },
            GraphShape::TwoOddCyclesSharedVertex { lengths: (1, 3) },
            GraphShape::TwoOddCyclesDisjoint { lengths: (1, 1) },
            GraphShape::TwoOddCyclesDisjoint { lengths: (1, 3) },
        ]
        .into();
        assert_eq!(over_f2.len(), 4);
        assert_eq!(shapes2, expected2);
    }

    #[test]
    fn enumeration_finds_the_larger_patterns() {
        let budget = Budget::default();
        let five_q = enumerate_minimal_graphs(5, fq(), &budget).unwrap();
        let shapes: BTreeSet<GraphShape> = five_q.iter().map(|g| g.shape).collect();
        assert!(shapes.contains(&GraphShape::TwoOddCyclesSharedVertex { lengths: (3, 3) }));
        assert!(shapes.contains(&GraphShape::TwoOddCyclesSharedVertex { lengths: (1, 5) }));
        assert!(shapes.contains(&GraphShape::TwoOddCyclesPath { lengths: (1, 3), path_length: 2 }));
        assert_eq!(five_q.len(), 10);

        let six_f2 = enumerate_minimal_graphs(6, fp(2), &budget).unwrap();
        let shapes: BTreeSet<GraphShape> = six_f2.iter().map(|g| g.shape).collect();
        assert!(shapes.contains(&GraphShape::TwoOddCyclesDisjoint { lengths: (3, 3) }));
        assert!(shapes.contains(&GraphShape::EvenCycle { length: 6 }));
        assert_eq!(six_f2.len(), 9);
    }

    #[test]
    fn enumerated_graphs_are_distinct_minimal_and_witnessed() {
        let budget = Budget::default();
        for field in [fq(), fp(2)] {
            let graphs = enumerate_minimal_graphs(5, field, &budget).unwrap();
            let mut canon_seen = BTreeSet::new();
            for g in &graphs {
                assert!(g.shape.is_minimal_tag());
                assert!(is_minimal(&g.complex, field));
                assert!(brute_force_minimal_oracle(&g.complex, field, &budget).unwrap());
                let weighted =
                    WeightedComplex::new(g.complex.clone(), g.witness.clone()).unwrap();
                assert!(weighted.is_balanced());
                assert!(g.witness.iter().all(|w| !w.is_zero()));
                let support = g.complex.support();
                let k = *support.iter().max().unwrap();
                assert_eq!(support.len() as u32, k, "support is an initial segment");
                let edges = edge_list(&g.complex).unwrap();
                assert_eq!(canonical_edges(&edges, k), edges, "stored form is canonical");
                assert!(canon_seen.insert(edges));
            }
        }
    }

    #[test]
    fn classifier_agrees_with_solver_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a3f);
        for _ in 0..300 {
            let k = rng.gen_range(2..=6u32);
            let pool = edge_pool(k);
            let count = rng.gen_range(1..=pool.len().min(9));
            let chosen: Vec<(u32, u32)> =
                pool.choose_multiple(&mut rng, count).copied().collect();
            let entries: Vec<Vec<u32>> = chosen.iter().map(|&(a, b)| vec![a, b]).collect();
            let complex = Complex::from_entries(k + 1, entries).unwrap();
            for field in [fq(), fp(2), fp(3)] {
                let tagged = classify_graph(&complex, field).unwrap().is_minimal_tag();
                assert_eq!(
                    tagged,
                    is_minimal(&complex, field),
                    "disagreement on {:?} in characteristic {}",
                    complex.simplices(),
                    field.characteristic()
                );
            }
        }
    }

    #[test]
    fn even_cycles_balance_and_odd_cycles_do_not() {
        for m in 3..=8u32 {
            for field in [fq(), fp(2), fp(3)] {
                let c = cycle(m + 1, m);
                let verdict = decide_balanceable(&c, field).unwrap();
                assert_eq!(verdict.balanceable, m % 2 == 0, "cycle length {m}");
                if m % 2 == 0 {
                    assert!(is_minimal(&c, field));
                }
            }
        }
    }

    #[test]
    fn enumeration_budget_is_enforced() {
        let budget = Budget::default();
        assert!(matches!(
            enumerate_minimal_graphs(8, fq(), &budget),
            Err(Error::EnumerationBudgetExceeded { requested: 8, cap: 7 })
        ));
        let tight = Budget { max_graph_vertices: 4, ..Budget::default() };
        assert!(matches!(
            enumerate_minimal_graphs(5, fq(), &tight),
            Err(Error::EnumerationBudgetExceeded { requested: 5, cap: 4 })
        ));
    }
}
