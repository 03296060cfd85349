//! Embedded example library.
//!
//! Every fixture is built programmatically, validated on construction,
//! and addressable as `fixtures://NAME` anywhere the CLI accepts an
//! input. The set covers the worked examples this tool exists to
//! reproduce: the octagon and its divisor class, the characteristic-two
//! triangles, the Keel–Vermeire weighting, cycles of tetrahedra, the
//! two intersection-pairing curves, and the two exceptional hypertrees.

use std::collections::BTreeMap;

use balcox_core::complex::{Complex, Multiset, Simplex, WeightedComplex};
use balcox_core::error::{Error, Result};
use balcox_core::field::FieldSpec;
use balcox_core::hypertree::Hypertree;
use balcox_core::json::{
    print, ComplexJson, CurveClassJson, DivisorClassJson, HypertreeJson, WeightedComplexJson,
};
use balcox_core::picard::{divisor_class_of, CurveClass, DivisorClass, IndexSet};

/// A named example value.
#[derive(Debug, Clone)]
pub enum Fixture {
    Complex(Complex),
    Weighted(WeightedComplex),
    Divisor(DivisorClass),
    Curve(CurveClass),
    Tree(Hypertree),
}

/// URI scheme prefix accepted by every input argument.
pub const URI_PREFIX: &str = "fixtures://";

fn complex(n: u32, simplices: &[&[u32]]) -> Complex {
    Complex::from_entries(n, simplices.iter().map(|s| s.to_vec()).collect())
        .expect("fixture complexes are well formed")
}

fn weighted(n: u32, field: FieldSpec, entries: &[(&[u32], i64)]) -> WeightedComplex {
    let pairs = entries
        .iter()
        .map(|(s, w)| {
            let simplex = Simplex::from_multiset(Multiset::new(s.to_vec()))
                .expect("fixture simplices are nonempty");
            (simplex, field.lift_integer(*w))
        })
        .collect();
    WeightedComplex::from_pairs(n, pairs).expect("fixture weightings are well formed")
}

/// Cycle graph on vertices `1..=m`, marked-point count `n`.
fn cycle(n: u32, m: u32) -> Complex {
    let mut edges: Vec<Vec<u32>> = (1..m).map(|i| vec![i, i + 1]).collect();
    edges.push(vec![1, m]);
    Complex::from_entries(n, edges).expect("cycle fixtures are well formed")
}

/// Cycle graph weighted alternately `+1, -1` around the cycle; balanced
/// exactly when `m` is even.
fn cycle_weighted(n: u32, m: u32, field: FieldSpec) -> WeightedComplex {
    let mut entries: Vec<(Vec<u32>, i64)> = (1..m)
        .map(|i| (vec![i, i + 1], if i % 2 == 1 { 1 } else { -1 }))
        .collect();
    entries.push((vec![1, m], if m % 2 == 0 { -1 } else { 1 }));
    let pairs = entries
        .into_iter()
        .map(|(s, w)| {
            (
                Simplex::from_multiset(Multiset::new(s)).expect("edges are nonempty"),
                field.lift_integer(w),
            )
        })
        .collect();
    WeightedComplex::from_pairs(n, pairs).expect("cycle weighting is well formed")
}

pub fn octagon() -> Complex {
    cycle(9, 8)
}

pub fn octagon_weighted() -> WeightedComplex {
    cycle_weighted(9, 8, FieldSpec::rationals())
}

pub fn square() -> Complex {
    cycle(5, 4)
}

pub fn square_weighted() -> WeightedComplex {
    cycle_weighted(5, 4, FieldSpec::rationals())
}

pub fn hexagon() -> Complex {
    cycle(7, 6)
}

pub fn triangle() -> Complex {
    cycle(5, 3)
}

pub fn k4() -> Complex {
    complex(5, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]])
}

/// A balanced weighting of the complete graph: the sum of two perfect
/// matchings minus twice the third.
pub fn k4_weighted() -> WeightedComplex {
    weighted(
        5,
        FieldSpec::rationals(),
        &[
            (&[1, 2], 1),
            (&[3, 4], 1),
            (&[1, 3], 1),
            (&[2, 4], 1),
            (&[1, 4], -2),
            (&[2, 3], -2),
        ],
    )
}

pub fn two_triangles_disjoint() -> Complex {
    complex(7, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]])
}

/// The all-ones weighting over F_2, the only characteristic where the
/// disjoint pair balances.
pub fn two_triangles_disjoint_weighted() -> WeightedComplex {
    let field = FieldSpec::new(2).expect("2 is prime");
    weighted(
        7,
        field,
        &[
            (&[1, 2], 1),
            (&[1, 3], 1),
            (&[2, 3], 1),
            (&[4, 5], 1),
            (&[4, 6], 1),
            (&[5, 6], 1),
        ],
    )
}

pub fn two_triangles_shared_vertex() -> Complex {
    complex(6, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 4], &[3, 5]])
}

/// The weighting carried by the expanded Keel–Vermeire expression
/// `(u1 - u2)(u3 - u4) - (u1 - u3)(u2 - u5)`.
pub fn keel_vermeire_weighted() -> WeightedComplex {
    weighted(
        6,
        FieldSpec::rationals(),
        &[
            (&[1, 2], -1),
            (&[1, 3], 1),
            (&[1, 4], -1),
            (&[1, 5], 1),
            (&[2, 4], 1),
            (&[3, 5], -1),
        ],
    )
}

pub fn triangle_bridge_triangle() -> Complex {
    complex(7, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4], &[4, 5], &[4, 6], &[5, 6]])
}

/// Tetrahedra `{1,2,3,4}, {3,4,5,6}, ..., {2m-1, 2m, 1, 2}` in a cycle;
/// the complex of their `4m` triangular faces on `2m` vertices.
pub fn cycle_of_tetrahedra(m: u32) -> Complex {
    Complex::new(2 * m + 1, tetrahedra_faces(m).into_iter().map(|(s, _)| s).collect())
        .expect("tetrahedra faces are distinct for m >= 3")
}

/// The `±1` weighting balancing the cycle of tetrahedra: each
/// tetrahedron `(a, b, c, d)` carries `w_abc = w_abd = 1` and
/// `w_acd = w_bcd = -1`.
pub fn cycle_of_tetrahedra_weighted(m: u32) -> WeightedComplex {
    let field = FieldSpec::rationals();
    let pairs = tetrahedra_faces(m)
        .into_iter()
        .map(|(s, w)| (s, field.lift_integer(w)))
        .collect();
    WeightedComplex::from_pairs(2 * m + 1, pairs).expect("tetrahedra weighting is well formed")
}

fn tetrahedra_faces(m: u32) -> Vec<(Simplex, i64)> {
    assert!(m >= 3, "the attachment pattern needs at least three tetrahedra");
    let vertices = 2 * m;
    let wrap = |v: u32| (v - 1) % vertices + 1;
    let mut faces = Vec::new();
    for t in 0..m {
        let a = wrap(2 * t + 1);
        let b = wrap(2 * t + 2);
        let c = wrap(2 * t + 3);
        let d = wrap(2 * t + 4);
        for (face, w) in [
            (vec![a, b, c], 1),
            (vec![a, b, d], 1),
            (vec![a, c, d], -1),
            (vec![b, c, d], -1),
        ] {
            faces.push((
                Simplex::from_multiset(Multiset::new(face)).expect("faces are nonempty"),
                w,
            ));
        }
    }
    faces
}

/// Boundary complex of the `d`-dimensional cross-polytope: antipodal
/// vertex pairs `{i, i+d}`, one facet for every choice of one vertex
/// per pair.
pub fn orthoplex(d: u32) -> Complex {
    assert!((2..=3).contains(&d), "orthoplex fixtures cover d = 2 and 3");
    let mut facets = Vec::new();
    for mask in 0..(1u32 << d) {
        let facet: Vec<u32> = (0..d)
            .map(|i| if mask >> i & 1 == 1 { i + 1 + d } else { i + 1 })
            .collect();
        facets.push(facet);
    }
    complex(2 * d + 1, &facets.iter().map(|f| f.as_slice()).collect::<Vec<_>>())
}

fn index_entries(pairs: &[(&[u32], i64)]) -> BTreeMap<IndexSet, i64> {
    pairs
        .iter()
        .map(|(labels, v)| {
            (IndexSet::new(labels.iter().copied()).expect("curve index sets are valid"), *v)
        })
        .collect()
}

/// The curve pairing to `-1` against the octagon class on nine marked
/// points.
pub fn f9_curve() -> CurveClass {
    CurveClass::new(
        9,
        3,
        index_entries(&[
            (&[1, 3, 5, 7], 2),
            (&[2, 4, 6, 8], 1),
            (&[1, 4, 6], 1),
            (&[3, 6, 8], 1),
            (&[2, 5, 8], 1),
            (&[2, 4, 7], 1),
        ]),
    )
    .expect("curve data is admissible")
}

/// The curve pairing to `-1` against the disjoint-triangles class on
/// seven marked points.
pub fn f7_curve() -> CurveClass {
    let mut dot_e = Vec::new();
    for i in [1u32, 2, 3] {
        for j in [4u32, 5, 6] {
            dot_e.push((vec![i, j], 1));
        }
    }
    let entries = dot_e
        .iter()
        .map(|(labels, v)| (labels.as_slice(), *v))
        .collect::<Vec<_>>();
    CurveClass::new(7, 4, index_entries(&entries)).expect("curve data is admissible")
}

pub fn octagon_class() -> DivisorClass {
    divisor_class_of(&octagon()).expect("the octagon class exists at n = 9")
}

pub fn two_triangles_class() -> DivisorClass {
    divisor_class_of(&two_triangles_disjoint()).expect("the class exists at n = 7")
}

pub fn hypertree_n6() -> Hypertree {
    Hypertree::new(6, vec![vec![1, 2, 3], vec![1, 4, 5], vec![2, 4, 6], vec![3, 5, 6]])
        .expect("the n = 6 hypertree satisfies the axioms")
}

pub fn hypertree_n7() -> Hypertree {
    Hypertree::new(
        7,
        vec![vec![1, 2, 3], vec![1, 4, 5], vec![1, 6, 7], vec![2, 4, 6], vec![3, 5, 7]],
    )
    .expect("the n = 7 hypertree satisfies the axioms")
}

/// Every fixture name, sorted.
pub fn names() -> Vec<&'static str> {
    let mut names = vec![
        "class-oct",
        "class-tri",
        "cycle-of-tetrahedra-3",
        "cycle-of-tetrahedra-3-weighted",
        "cycle-of-tetrahedra-4",
        "cycle-of-tetrahedra-4-weighted",
        "cycle-of-tetrahedra-5",
        "cycle-of-tetrahedra-5-weighted",
        "F7",
        "F9",
        "hexagon",
        "hypertree-n6",
        "hypertree-n7",
        "k4",
        "k4-weighted",
        "keel-vermeire-weighted",
        "octagon",
        "octagon-weighted",
        "orthoplex-2",
        "orthoplex-3",
        "square",
        "square-weighted",
        "triangle",
        "triangle-bridge-triangle",
        "two-triangles-disjoint",
        "two-triangles-disjoint-weighted",
        "two-triangles-shared-vertex",
    ];
    names.sort_unstable();
    names
}

/// Looks a fixture up by name.
pub fn get(name: &str) -> Result<Fixture> {
    let fixture = match name {
        "octagon" => Fixture::Complex(octagon()),
        "octagon-weighted" => Fixture::Weighted(octagon_weighted()),
        "square" => Fixture::Complex(square()),
        "square-weighted" => Fixture::Weighted(square_weighted()),
        "hexagon" => Fixture::Complex(hexagon()),
        "triangle" => Fixture::Complex(triangle()),
        "k4" => Fixture::Complex(k4()),
        "k4-weighted" => Fixture::Weighted(k4_weighted()),
        "two-triangles-disjoint" => Fixture::Complex(two_triangles_disjoint()),
        "two-triangles-disjoint-weighted" => {
            Fixture::Weighted(two_triangles_disjoint_weighted())
        }
        "two-triangles-shared-vertex" => Fixture::Complex(two_triangles_shared_vertex()),
        "keel-vermeire-weighted" => Fixture::Weighted(keel_vermeire_weighted()),
        "triangle-bridge-triangle" => Fixture::Complex(triangle_bridge_triangle()),
        "cycle-of-tetrahedra-3" => Fixture::Complex(cycle_of_tetrahedra(3)),
        "cycle-of-tetrahedra-4" => Fixture::Complex(cycle_of_tetrahedra(4)),
        "cycle-of-tetrahedra-5" => Fixture::Complex(cycle_of_tetrahedra(5)),
        "cycle-of-tetrahedra-3-weighted" => Fixture::Weighted(cycle_of_tetrahedra_weighted(3)),
        "cycle-of-tetrahedra-4-weighted" => Fixture::Weighted(cycle_of_tetrahedra_weighted(4)),
        "cycle-of-tetrahedra-5-weighted" => Fixture::Weighted(cycle_of_tetrahedra_weighted(5)),
        "orthoplex-2" => Fixture::Complex(orthoplex(2)),
        "orthoplex-3" => Fixture::Complex(orthoplex(3)),
        "F9" => Fixture::Curve(f9_curve()),
        "F7" => Fixture::Curve(f7_curve()),
        "class-oct" => Fixture::Divisor(octagon_class()),
        "class-tri" => Fixture::Divisor(two_triangles_class()),
        "hypertree-n6" => Fixture::Tree(hypertree_n6()),
        "hypertree-n7" => Fixture::Tree(hypertree_n7()),
        _ => {
            return Err(Error::InvalidJson(format!(
                "unknown fixture {name:?}; run the fixtures subcommand for the list"
            )))
        }
    };
    Ok(fixture)
}

/// The fixture's JSON text, exactly as a file with the same content.
pub fn payload(name: &str) -> Result<String> {
    Ok(match get(name)? {
        Fixture::Complex(c) => print(&ComplexJson::of(&c)),
        Fixture::Weighted(w) => print(&WeightedComplexJson::of(&w)),
        Fixture::Divisor(d) => print(&DivisorClassJson::of(&d)),
        Fixture::Curve(c) => print(&CurveClassJson::of(&c)),
        Fixture::Tree(t) => print(&HypertreeJson::of(&t)),
    })
}
