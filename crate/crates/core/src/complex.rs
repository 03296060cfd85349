//! Weighted simplicial complexes with multiset simplices.
//!
//! A simplex of cardinality `c` is a multiset of `c` vertex labels drawn
//! from `{1, ..., n-1}`; repeated labels are allowed and make the simplex
//! singular. A complex is a nonempty set of simplices of equal
//! cardinality. A weighting assigns a nonzero scalar to every simplex,
//! and is balanced when, for every multiset `S` of cardinality below `c`
//! embedding into some simplex, the weights of the simplices containing
//! `S` sum to zero with embedding multiplicities.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A sorted multiset of vertex labels. Also used for sub-multiset faces
/// (possibly empty) and for monomial exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    entries: Vec<u32>,
}

impl Multiset {
    pub fn new(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable();
        Multiset { entries }
    }

    pub fn empty() -> Self {
        Multiset { entries: Vec::new() }
    }

    pub fn cardinality(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The multiplicity of `label` in this multiset.
    pub fn mult_of(&self, label: u32) -> u32 {
        self.entries.iter().filter(|&&v| v == label).count() as u32
    }

    /// Distinct labels, ascending.
    pub fn support(&self) -> Vec<u32> {
        let mut labels = self.entries.clone();
        labels.dedup();
        labels
    }

    /// `(label, multiplicity)` pairs, ascending by label.
    pub fn grouped(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &v in &self.entries {
            match out.last_mut() {
                Some((label, mult)) if *label == v => *mult += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    /// A simplex is singular when some label repeats, i.e. its support is
    /// smaller than its cardinality.
    pub fn is_singular(&self) -> bool {
        self.entries.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_sub_multiset_of(&self, other: &Multiset) -> bool {
        self.grouped().iter().all(|&(label, mult)| other.mult_of(label) >= mult)
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Multiset::new(entries)
    }

    /// All distinct sub-multisets, every cardinality from 0 to `c`.
    pub fn sub_multisets(&self) -> Vec<Multiset> {
        let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
        for (label, mult) in self.grouped() {
            let mut next = Vec::with_capacity(acc.len() * (mult as usize + 1));
            for prefix in &acc {
                for k in 0..=mult {
                    let mut entries = prefix.clone();
                    entries.extend(std::iter::repeat(label).take(k as usize));
                    next.push(entries);
                }
            }
            acc = next;
        }
        acc.into_iter().map(|entries| Multiset { entries }).collect()
    }

    pub fn max_label(&self) -> Option<u32> {
        self.entries.last().copied()
    }
}

/// A simplex: a nonempty [`Multiset`] of positive vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    inner: Multiset,
}

impl Simplex {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidComplex("simplex must have cardinality >= 1".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidComplex("vertex labels start at 1".into()));
        }
        Ok(Simplex { inner: Multiset::new(entries) })
    }

    pub fn from_multiset(m: Multiset) -> Result<Self> {
        Simplex::new(m.entries)
    }

    pub fn multiset(&self) -> &Multiset {
        &self.inner
    }
}

impl Deref for Simplex {
    type Target = Multiset;

    fn deref(&self) -> &Multiset {
        &self.inner
    }
}

/// Number of embeddings of the face `S` into the simplex, i.e. the
/// product over labels of `C(mult_sigma(i), mult_S(i))`; zero when `S` is
/// not a sub-multiset. For non-singular simplices this is 0 or 1.
pub fn embedding_multiplicity(face: &Multiset, simplex: &Simplex) -> u64 {
    let mut product: u64 = 1;
    for (label, mult) in face.grouped() {
        let available = simplex.mult_of(label);
        if available < mult {
            return 0;
        }
        product *= binomial(available as u64, mult as u64);
    }
    product
}

/// Binomial coefficient for the small arguments that arise here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A weighted-point count `n` together with a nonempty set of simplices
/// of equal cardinality on labels `{1, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Complex {
    n: u32,
    simplices: Vec<Simplex>,
}

impl Complex {
    /// Validates and canonicalizes (sorts) the simplex list. Duplicates
    /// are rejected: a complex is a set, and weight arrays are indexed
    /// against it.
    pub fn new(n: u32, mut simplices: Vec<Simplex>) -> Result<Self> {
        if simplices.is_empty() {
            return Err(Error::InvalidComplex("a complex has at least one simplex".into()));
        }
        let cardinality = simplices[0].cardinality();
        for simplex in &simplices {
            if simplex.cardinality() != cardinality {
                return Err(Error::InvalidComplex(format!(
                    "mixed cardinalities: {} and {}",
                    cardinality,
                    simplex.cardinality()
                )));
            }
            if let Some(max) = simplex.max_label() {
                if max > n.saturating_sub(1) {
                    return Err(Error::LabelOutOfRange { label: max, n });
                }
            }
        }
        simplices.sort();
        if simplices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidComplex("duplicate simplex".into()));
        }
        Ok(Complex { n, simplices })
    }

    /// Builds a complex of cardinality-`c` simplices from raw label lists.
    pub fn from_entries(n: u32, simplices: Vec<Vec<u32>>) -> Result<Self> {
        let simplices = simplices.into_iter().map(Simplex::new).collect::<Result<Vec<_>>>()?;
        Complex::new(n, simplices)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Common simplex cardinality `c` (the dimension plus one).
    pub fn cardinality(&self) -> usize {
        self.simplices[0].cardinality()
    }

    pub fn dimension(&self) -> usize {
        self.cardinality() - 1
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, simplex: &Simplex) -> bool {
        self.simplices.binary_search(simplex).is_ok()
    }

    /// Distinct labels appearing in some simplex, ascending.
    pub fn support(&self) -> Vec<u32> {
        let mut labels: BTreeSet<u32> = BTreeSet::new();
        for simplex in &self.simplices {
            labels.extend(simplex.entries().iter().copied());
        }
        labels.into_iter().collect()
    }

    /// Every multiset of cardinality `0..=c-1` that embeds into at least
    /// one simplex (the empty face included), sorted by cardinality then
    /// lexicographically. These index the balancing conditions.
    pub fn faces(&self) -> Vec<Multiset> {
        let cap = self.cardinality() - 1;
        let mut faces: BTreeSet<Multiset> = BTreeSet::new();
        for simplex in &self.simplices {
            for sub in simplex.sub_multisets() {
                if sub.cardinality() <= cap {
                    faces.insert(sub);
                }
            }
        }
        let mut faces: Vec<Multiset> = faces.into_iter().collect();
        faces.sort_by(|a, b| {
            a.cardinality().cmp(&b.cardinality()).then_with(|| a.cmp(b))
        });
        faces
    }

    /// The product complex: all pairwise multiset unions, deduplicated.
    pub fn product(&self, other: &Complex) -> Result<Complex> {
        if self.n != other.n {
            return Err(Error::MismatchedN { left: self.n, right: other.n });
        }
        let mut set: BTreeSet<Simplex> = BTreeSet::new();
        for a in &self.simplices {
            for b in &other.simplices {
                set.insert(Simplex { inner: a.union(b) });
            }
        }
        Complex::new(self.n, set.into_iter().collect())
    }

    /// The subcomplex on the given (distinct, nonempty) simplex indices.
    pub fn subcomplex(&self, indices: &[usize]) -> Result<Complex> {
        let simplices = indices
            .iter()
            .map(|&i| {
                self.simplices
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidComplex(format!("no simplex at index {i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Complex::new(self.n, simplices)
    }

    /// Applies a label map to every simplex. The map must cover the
    /// support; images must fit under `new_n`.
    pub fn relabeled(&self, map: &BTreeMap<u32, u32>, new_n: u32) -> Result<Complex> {
        let simplices = self
            .simplices
            .iter()
            .map(|simplex| {
                let entries = simplex
                    .entries()
                    .iter()
                    .map(|v| {
                        map.get(v).copied().ok_or_else(|| {
                            Error::InvalidComplex(format!("relabeling misses label {v}"))
                        })
                    })
                    .collect::<Result<Vec<u32>>>()?;
                Simplex::new(entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Complex::new(new_n, simplices)
    }
}

/// A complex with a nonzero scalar weight on every simplex, all over one
/// field. Weights are parallel to `complex.simplices()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedComplex {
    complex: Complex,
    weights: Vec<Scalar>,
    field: FieldSpec,
}

impl WeightedComplex {
    /// `weights[i]` weights `complex.simplices()[i]` (canonical sorted
    /// order). Use [`WeightedComplex::from_pairs`] for unsorted input.
    pub fn new(complex: Complex, weights: Vec<Scalar>) -> Result<Self> {
        if weights.len() != complex.len() {
            return Err(Error::InvalidWeighting(format!(
                "{} weights for {} simplices",
                weights.len(),
                complex.len()
            )));
        }
        let field = weights[0].field();
        for w in &weights {
            if w.field() != field {
                return Err(Error::MismatchedFields {
                    left: field.characteristic(),
                    right: w.field().characteristic(),
                });
            }
            if w.is_zero() {
                return Err(Error::InvalidWeighting("weights must be nonzero".into()));
            }
        }
        Ok(WeightedComplex { complex, weights, field })
    }

    pub fn from_pairs(n: u32, mut pairs: Vec<(Simplex, Scalar)>) -> Result<Self> {
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let (simplices, weights): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        WeightedComplex::new(Complex::new(n, simplices)?, weights)
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn weight_of(&self, simplex: &Simplex) -> Option<&Scalar> {
        self.complex.simplices.binary_search(simplex).ok().map(|i| &self.weights[i])
    }

    /// The degree-`|face|` balancing sum at `face`: the weights of the
    /// simplices containing it, each counted with embedding multiplicity.
    pub fn balancing_sum(&self, face: &Multiset) -> Scalar {
        let mut acc = self.field.zero();
        for (simplex, weight) in self.complex.simplices.iter().zip(&self.weights) {
            let mult = embedding_multiplicity(face, simplex);
            if mult != 0 {
                acc = acc.add(&self.field.lift_integer(mult as i64).mul(weight));
            }
        }
        acc
    }

    /// Balanced in every degree `0..=c-1`: the balancing sum vanishes at
    /// every face of the complex.
    pub fn is_balanced(&self) -> bool {
        self.complex.faces().iter().all(|face| self.balancing_sum(face).is_zero())
    }

    /// Relabels a balanced weighting onto the support, order preserved:
    /// the result lives on labels `{1, ..., |Supp|}` with `n = |Supp|+1`.
    pub fn restrict_to_support(&self) -> Result<SupportRestriction> {
        if !self.is_balanced() {
            return Err(Error::NotBalanced);
        }
        let support = self.complex.support();
        let relabeling: BTreeMap<u32, u32> =
            support.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
        let new_n = support.len() as u32 + 1;
        let complex = self.complex.relabeled(&relabeling, new_n)?;
        // Order-preserving relabelings preserve the sorted simplex order,
        // so the weight array carries over unchanged.
        let weighted = WeightedComplex::new(complex, self.weights.clone())?;
        Ok(SupportRestriction { weighted, relabeling })
    }
}

/// Result of [`WeightedComplex::restrict_to_support`].
#[derive(Debug, Clone)]
pub struct SupportRestriction {
    pub weighted: WeightedComplex,
    /// Old label -> new label, order preserving.
    pub relabeling: BTreeMap<u32, u32>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn ms(entries: &[u32]) -> Multiset {
        Multiset::new(entries.to_vec())
    }

    fn sx(entries: &[u32]) -> Simplex {
        Simplex::new(entries.to_vec()).unwrap()
    }

    /// Cycle on labels 1..=m with edges {i, i+1 mod m}.
    fn cycle(n: u32, m: u32) -> Complex {
        let edges = (1..=m).map(|i| vec![i, i % m + 1]).collect();
        Complex::from_entries(n, edges).unwrap()
    }

    fn weighted(complex: Complex, weights: &[i64], field: FieldSpec) -> WeightedComplex {
        let weights = weights.iter().map(|&w| field.lift_integer(w)).collect();
        WeightedComplex::new(complex, weights).unwrap()
    }

    /// Octagon with the alternating weighting; edges sort as
    /// {1,2},{1,8},{2,3},... so the weight array is not just alternating.
    fn octagon_weighted(field: FieldSpec) -> WeightedComplex {
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

    #[test]
    fn multiset_basics() {
        let m = ms(&[2, 1, 1]);
        assert_eq!(m.entries(), &[1, 1, 2]);
        assert_eq!(m.cardinality(), 3);
        assert_eq!(m.mult_of(1), 2);
        assert_eq!(m.support(), vec![1, 2]);
        assert!(m.is_singular());
        assert!(!ms(&[1, 2]).is_singular());
        assert!(ms(&[1, 1]).is_sub_multiset_of(&m));
        assert!(!ms(&[2, 2]).is_sub_multiset_of(&m));
        assert_eq!(ms(&[1, 2]).union(&ms(&[1, 3])).entries(), &[1, 1, 2, 3]);
    }

    #[test]
    fn sub_multisets_of_a_loop() {
        let subs = ms(&[1, 1]).sub_multisets();
        assert_eq!(subs.len(), 3);
        assert!(subs.contains(&Multiset::empty()));
        assert!(subs.contains(&ms(&[1])));
        assert!(subs.contains(&ms(&[1, 1])));
        // {1,1,2} has 3*2 = 6 distinct sub-multisets.
        assert_eq!(ms(&[1, 1, 2]).sub_multisets().len(), 6);
    }

    #[test]
    fn simplex_rejects_empty_and_zero_labels() {
        assert!(Simplex::new(vec![]).is_err());
        assert!(Simplex::new(vec![0, 1]).is_err());
        assert!(Simplex::new(vec![3, 3]).is_ok());
    }

    #[test]
    fn embedding_multiplicities() {
        assert_eq!(embedding_multiplicity(&ms(&[1]), &sx(&[1, 1])), 2);
        assert_eq!(embedding_multiplicity(&ms(&[1]), &sx(&[1, 2])), 1);
        assert_eq!(embedding_multiplicity(&ms(&[1, 1]), &sx(&[1, 1, 2])), 1);
        assert_eq!(embedding_multiplicity(&ms(&[1, 2]), &sx(&[1, 1, 2])), 2);
        assert_eq!(embedding_multiplicity(&Multiset::empty(), &sx(&[1, 2])), 1);
        assert_eq!(embedding_multiplicity(&ms(&[3]), &sx(&[1, 2])), 0);
        assert_eq!(embedding_multiplicity(&ms(&[1, 1, 1]), &sx(&[1, 1])), 0);
    }

    #[test]
    fn embedding_into_non_singular_is_boolean() {
        let simplex = sx(&[1, 2, 3]);
        for sub in simplex.sub_multisets() {
            assert_eq!(embedding_multiplicity(&sub, &simplex), 1);
        }
        assert_eq!(embedding_multiplicity(&ms(&[4]), &simplex), 0);
    }

    #[test]
    fn complex_validation() {
        assert!(Complex::from_entries(5, vec![]).is_err());
        assert!(Complex::from_entries(5, vec![vec![1, 2], vec![3]]).is_err());
        assert!(Complex::from_entries(5, vec![vec![1, 2], vec![2, 1]]).is_err());
        assert_eq!(
            Complex::from_entries(5, vec![vec![4, 5]]),
            Err(Error::LabelOutOfRange { label: 5, n: 5 })
        );
        let c = Complex::from_entries(9, vec![vec![2, 1], vec![1, 8]]).unwrap();
        assert_eq!(c.cardinality(), 2);
        assert_eq!(c.dimension(), 1);
        assert_eq!(c.support(), vec![1, 2, 8]);
        assert!(c.contains(&sx(&[1, 2])));
    }

    #[test]
    fn faces_include_empty_face() {
        let c = Complex::from_entries(5, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let faces = c.faces();
        assert_eq!(
            faces,
            vec![Multiset::empty(), ms(&[1]), ms(&[2]), ms(&[3])]
        );
        // A loop contributes its vertex once.
        let loopc = Complex::from_entries(5, vec![vec![1, 1]]).unwrap();
        assert_eq!(loopc.faces(), vec![Multiset::empty(), ms(&[1])]);
    }

    #[test]
    fn balancing_sum_counts_loops_twice() {
        let f = fq();
        let loopc = Complex::from_entries(5, vec![vec![1, 1]]).unwrap();
        let w = weighted(loopc, &[3], f);
        assert_eq!(w.balancing_sum(&ms(&[1])), f.lift_integer(6));
        assert_eq!(w.balancing_sum(&Multiset::empty()), f.lift_integer(3));
        assert!(!w.is_balanced());
    }

    #[test]
    fn octagon_is_balanced() {
        for field in [fq(), fp(2), fp(3), fp(5)] {
            let w = octagon_weighted(field);
            assert!(w.is_balanced(), "octagon should balance over {field}");
            assert!(w.balancing_sum(&ms(&[1])).is_zero());
            assert!(w.balancing_sum(&Multiset::empty()).is_zero());
        }
    }

    #[test]
    fn square_alternating_is_balanced() {
        // Edges sort as {1,2},{1,4},{2,3},{3,4}: alternating means
        // +1,-1 on the two edges at each vertex.
        let w = weighted(cycle(5, 4), &[1, -1, -1, 1], fq());
        assert!(w.is_balanced());
    }

    #[test]
    fn triangle_all_ones_mod_2_fails_only_degree_zero() {
        let w = weighted(cycle(5, 3), &[1, 1, 1], fp(2));
        assert!(w.balancing_sum(&ms(&[1])).is_zero());
        assert!(w.balancing_sum(&ms(&[2])).is_zero());
        assert_eq!(w.balancing_sum(&Multiset::empty()), fp(2).one());
        assert!(!w.is_balanced());
    }

    #[test]
    fn weighting_validation() {
        let c = cycle(5, 4);
        let f = fq();
        assert!(WeightedComplex::new(c.clone(), vec![f.one(); 3]).is_err());
        assert!(WeightedComplex::new(
            c.clone(),
            vec![f.one(), f.zero(), f.one(), f.one()]
        )
        .is_err());
        assert!(WeightedComplex::new(
            c,
            vec![f.one(), fp(2).one(), f.one(), f.one()]
        )
        .is_err());
    }

    #[test]
    fn product_of_disjoint_pairs_is_square() {
        let a = Complex::from_entries(5, vec![vec![1], vec![2]]).unwrap();
        let b = Complex::from_entries(5, vec![vec![3], vec![4]]).unwrap();
        let square = a.product(&b).unwrap();
        assert_eq!(
            square,
            Complex::from_entries(5, vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]])
                .unwrap()
        );
    }

    #[test]
    fn orthoplex_facet_counts() {
        for d in 2..=4u32 {
            let n = 2 * d + 1;
            let mut acc = Complex::from_entries(n, vec![vec![1], vec![2]]).unwrap();
            for i in 2..=d {
                let pair =
                    Complex::from_entries(n, vec![vec![2 * i - 1], vec![2 * i]]).unwrap();
                acc = acc.product(&pair).unwrap();
            }
            assert_eq!(acc.len(), 1 << d);
            assert_eq!(acc.cardinality(), d as usize);
        }
    }

    #[test]
    fn product_with_shared_labels_deduplicates() {
        let a = Complex::from_entries(5, vec![vec![1], vec![2]]).unwrap();
        let sq = a.product(&a).unwrap();
        assert_eq!(
            sq,
            Complex::from_entries(5, vec![vec![1, 1], vec![1, 2], vec![2, 2]]).unwrap()
        );
    }

    #[test]
    fn product_is_commutative_and_associative_here() {
        let a = Complex::from_entries(9, vec![vec![1], vec![2]]).unwrap();
        let b = Complex::from_entries(9, vec![vec![3], vec![4]]).unwrap();
        let c = Complex::from_entries(9, vec![vec![5, 6], vec![7, 8]]).unwrap();
        assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
        assert_eq!(
            a.product(&b).unwrap().product(&c).unwrap(),
            a.product(&b.product(&c).unwrap()).unwrap()
        );
        let other_n = Complex::from_entries(7, vec![vec![1], vec![2]]).unwrap();
        assert!(a.product(&other_n).is_err());
    }

    #[test]
    fn restriction_relabels_order_preserving() {
        // Square on labels {2,4,6,8} inside n = 9.
        let c = Complex::from_entries(
            9,
            vec![vec![2, 4], vec![4, 6], vec![6, 8], vec![2, 8]],
        )
        .unwrap();
        // Sorted edges: {2,4},{2,8},{4,6},{6,8}; balanced alternating.
        let w = weighted(c, &[1, -1, -1, 1], fq());
        let restricted = w.restrict_to_support().unwrap();
        assert_eq!(restricted.weighted.complex().n(), 5);
        assert_eq!(
            restricted.weighted.complex(),
            &Complex::from_entries(5, vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]])
                .unwrap()
        );
        assert!(restricted.weighted.is_balanced());
        assert_eq!(restricted.relabeling.get(&6), Some(&3));

        // Octagon placed inside n = 12 restricts to n = 9 unchanged.
        let big = WeightedComplex::from_pairs(
            12,
            octagon_weighted(fq())
                .complex()
                .simplices()
                .iter()
                .zip(octagon_weighted(fq()).weights())
                .map(|(s, w)| (s.clone(), w.clone()))
                .collect(),
        )
        .unwrap();
        let restricted = big.restrict_to_support().unwrap();
        assert_eq!(restricted.weighted, octagon_weighted(fq()));
    }

    #[test]
    fn restriction_requires_balance() {
        let w = weighted(cycle(5, 3), &[1, 1, 1], fq());
        assert_eq!(w.restrict_to_support().unwrap_err(), Error::NotBalanced);
    }

    #[test]
    fn balanced_weighting_scales() {
        let f = fq();
        let w = octagon_weighted(f);
        let scale = f.lift_integer(7);
        let scaled = WeightedComplex::new(
            w.complex().clone(),
            w.weights().iter().map(|x| x.mul(&scale)).collect(),
        )
        .unwrap();
        assert!(scaled.is_balanced());
    }
}
