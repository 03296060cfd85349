//! Helpers shared by the unit tests.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Complex, Simplex, WeightedComplex};
use crate::field::FieldSpec;

/// Cycle on labels `1..=m` with edges `{i, i+1 mod m}`.
pub fn cycle(n: u32, m: u32) -> Complex {
    let edges = (1..=m).map(|i| vec![i, i % m + 1]).collect();
    Complex::from_entries(n, edges).unwrap()
}

/// Octagon (n = 9) with the alternating weighting, expressed against the
/// canonical sorted edge order.
pub fn octagon_weighted(field: FieldSpec) -> WeightedComplex {
    let complex = cycle(9, 8);
    let pairs = complex
        .simplices()
        .iter()
        .map(|s| {
            let sign = if s.entries() == [1, 8] { 1 } else { (-1i64).pow(s.entries()[0]) };
            (s.clone(), field.lift_integer(sign))
        })
        .collect();
    WeightedComplex::from_pairs(9, pairs).unwrap()
}

/// Complete graph on 4 vertices, n = 5.
pub fn k4() -> Complex {
    Complex::from_entries(
        5,
        vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4], vec![1, 3], vec![2, 4]],
    )
    .unwrap()
}

/// Two disjoint triangles on labels 1..=6, n = 7.
pub fn two_triangles_disjoint() -> Complex {
    Complex::from_entries(
        7,
        vec![vec![1, 2], vec![2, 3], vec![1, 3], vec![4, 5], vec![5, 6], vec![4, 6]],
    )
    .unwrap()
}

/// All cardinality-`card` multisets on labels `1..n`.
pub fn simplex_pool(n: u32, card: usize) -> Vec<Simplex> {
    (1..n)
        .combinations_with_replacement(card)
        .map(|entries| Simplex::new(entries).unwrap())
        .collect()
}

/// A uniformly random complex: distinct cardinality-`card` simplices on
/// labels below `n`, between 1 and `max_simplices` of them.
pub fn random_complex<R: Rng>(rng: &mut R, n: u32, card: usize, max_simplices: usize) -> Complex {
    let mut pool = simplex_pool(n, card);
    pool.shuffle(rng);
    let k = rng.gen_range(1..=max_simplices.min(pool.len()));
    Complex::new(n, pool.into_iter().take(k).collect()).unwrap()
}
