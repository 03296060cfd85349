//! Symbolic side of the balancing correspondence.
//!
//! A weighted complex is encoded as a homogeneous [`LaurentElement`] in
//! variables `u_1, …, u_{n−1}` (monomials keyed by exponent multisets).
//! The additive group acts by translating every variable, `u_i ↦ u_i + s`;
//! [`ga_expand`] collects the resulting powers of `s` by brute-force
//! iterated multiplication, so invariance checking shares no code path with
//! the face-counting balance test it is compared against.
//!
//! Clearing denominators rewrites an element in blow-up coordinates: each
//! `u^σ` becomes `y_σ` times the exceptional monomial needed to reach a
//! common multiple, producing a [`CoxElement`] graded by a single divisor
//! class.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Multiset, Simplex, WeightedComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::picard::{admissible_index_sets, DivisorClass, IndexSet};

/// A homogeneous polynomial in `u_1, …, u_{n−1}` with nonzero coefficients,
/// keyed by exponent multisets.  The zero polynomial keeps an explicit
/// degree so arithmetic can stay homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentElement {
    n: u32,
    degree: u32,
    field: FieldSpec,
    terms: BTreeMap<Multiset, Scalar>,
}

fn accumulate(map: &mut BTreeMap<Multiset, Scalar>, key: Multiset, value: Scalar) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut slot) => {
            let sum = slot.get().add(&value);
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
        Entry::Vacant(slot) => {
            slot.insert(value);
        }
    }
}

impl LaurentElement {
    pub fn new(
        n: u32,
        degree: u32,
        field: FieldSpec,
        terms: BTreeMap<Multiset, Scalar>,
    ) -> Result<Self> {
        for (monomial, coeff) in &terms {
            if monomial.cardinality() as u32 != degree {
                return Err(Error::InvalidElement(format!(
                    "monomial {monomial:?} has degree {}, element is declared degree {degree}",
                    monomial.cardinality()
                )));
            }
            match monomial.max_label() {
                Some(label) if label > n - 1 => {
                    return Err(Error::LabelOutOfRange { label, n });
                }
                Some(_) | None => {}
            }
            if monomial.entries().first() == Some(&0) {
                return Err(Error::InvalidElement("variable indices start at 1".into()));
            }
            if coeff.field() != field {
                return Err(Error::MismatchedFields {
                    left: field.characteristic(),
                    right: coeff.field().characteristic(),
                });
            }
        }
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self {
            n,
            degree,
            field,
            terms,
        })
    }

    pub fn zero(n: u32, degree: u32, field: FieldSpec) -> Self {
        Self {
            n,
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    /// The single variable `u_i`.
    pub fn variable(n: u32, field: FieldSpec, i: u32) -> Result<Self> {
        let mut terms = BTreeMap::new();
        terms.insert(Multiset::new(vec![i]), field.one());
        Self::new(n, 1, field, terms)
    }

    /// The difference `u_i − u_j`.
    pub fn difference(n: u32, field: FieldSpec, i: u32, j: u32) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidElement(format!(
                "difference needs distinct variables, got u_{i} twice"
            )));
        }
        let mut terms = BTreeMap::new();
        terms.insert(Multiset::new(vec![i]), field.one());
        terms.insert(Multiset::new(vec![j]), field.one().neg());
        Self::new(n, 1, field, terms)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Multiset, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given monomial; zero if absent.
    pub fn coefficient(&self, monomial: &Multiset) -> Scalar {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedN {
                left: self.n,
                right: other.n,
            });
        }
        if self.field != other.field {
            return Err(Error::MismatchedFields {
                left: self.field.characteristic(),
                right: other.field.characteristic(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::InvalidElement(format!(
                "cannot add degree {} to degree {}",
                self.degree, other.degree
            )));
        }
        let mut terms = self.terms.clone();
        for (key, coeff) in &other.terms {
            accumulate(&mut terms, key.clone(), coeff.clone());
        }
        Ok(Self {
            n: self.n,
            degree: self.degree,
            field: self.field,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            degree: self.degree,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, scalar: &Scalar) -> Result<Self> {
        if scalar.field() != self.field {
            return Err(Error::MismatchedFields {
                left: self.field.characteristic(),
                right: scalar.field().characteristic(),
            });
        }
        let mut terms = BTreeMap::new();
        for (key, coeff) in &self.terms {
            accumulate(&mut terms, key.clone(), coeff.mul(scalar));
        }
        Ok(Self {
            n: self.n,
            degree: self.degree,
            field: self.field,
            terms,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut terms = BTreeMap::new();
        for (left_key, left_coeff) in &self.terms {
            for (right_key, right_coeff) in &other.terms {
                accumulate(
                    &mut terms,
                    left_key.union(right_key),
                    left_coeff.mul(right_coeff),
                );
            }
        }
        Ok(Self {
            n: self.n,
            degree: self.degree + other.degree,
            field: self.field,
            terms,
        })
    }
}

fn render_power(f: &mut fmt::Formatter<'_>, name: &str, exponent: u32) -> fmt::Result {
    if exponent == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exponent}")
    }
}

fn render_u_monomial(f: &mut fmt::Formatter<'_>, monomial: &Multiset) -> fmt::Result {
    let mut first = true;
    for (label, mult) in monomial.grouped() {
        if !first {
            write!(f, "*")?;
        }
        render_power(f, &format!("u_{label}"), mult)?;
        first = false;
    }
    Ok(())
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (monomial, coeff) in &self.terms {
            let rendered = coeff.to_string();
            let (sign, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", rendered),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if monomial.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if magnitude != "1" {
                    write!(f, "{magnitude}*")?;
                }
                render_u_monomial(f, monomial)?;
            }
        }
        Ok(())
    }
}

/// Encodes a weighted complex as the sum `Σ w_σ · u^σ`.
pub fn laurent_of(wc: &WeightedComplex) -> LaurentElement {
    let complex = wc.complex();
    let terms = complex
        .simplices()
        .iter()
        .zip(wc.weights())
        .map(|(simplex, weight)| (simplex.multiset().clone(), weight.clone()))
        .collect();
    LaurentElement {
        n: complex.n(),
        degree: complex.cardinality() as u32,
        field: wc.field(),
        terms,
    }
}

/// Inverse of [`laurent_of`]: reads the support as a complex and the
/// coefficients as weights.  Fails on the zero element and on degree zero,
/// which encode no complex.
pub fn weighted_complex_of(f: &LaurentElement) -> Result<WeightedComplex> {
    if f.is_zero() {
        return Err(Error::InvalidElement(
            "the zero element encodes no weighted complex".into(),
        ));
    }
    if f.degree == 0 {
        return Err(Error::InvalidElement(
            "a degree-zero element encodes no weighted complex".into(),
        ));
    }
    let pairs = f
        .terms
        .iter()
        .map(|(monomial, coeff)| Ok((Simplex::from_multiset(monomial.clone())?, coeff.clone())))
        .collect::<Result<Vec<_>>>()?;
    WeightedComplex::from_pairs(f.n, pairs)
}

/// Coefficients of `s^0, …, s^degree` after translating every variable by
/// `s` and expanding each monomial as an iterated product of binomials
/// `(u_i + s)`.
pub fn ga_expand(f: &LaurentElement) -> Vec<LaurentElement> {
    let c = f.degree as usize;
    let mut out: Vec<LaurentElement> = (0..=c)
        .map(|j| LaurentElement::zero(f.n, (c - j) as u32, f.field))
        .collect();
    for (monomial, weight) in &f.terms {
        // layers[j] holds the s^j coefficient of the partial product.
        let mut layers: Vec<BTreeMap<Multiset, Scalar>> = vec![BTreeMap::new()];
        layers[0].insert(Multiset::empty(), f.field.one());
        for &label in monomial.entries() {
            let factor = Multiset::new(vec![label]);
            let mut next: Vec<BTreeMap<Multiset, Scalar>> =
                vec![BTreeMap::new(); layers.len() + 1];
            for (j, layer) in layers.iter().enumerate() {
                for (key, coeff) in layer {
                    accumulate(&mut next[j], key.union(&factor), coeff.clone());
                    accumulate(&mut next[j + 1], key.clone(), coeff.clone());
                }
            }
            layers = next;
        }
        for (j, layer) in layers.into_iter().enumerate() {
            for (key, coeff) in layer {
                accumulate(&mut out[j].terms, key, weight.mul(&coeff));
            }
        }
    }
    out
}

/// True when translating every variable by `s` leaves the element fixed,
/// i.e. every positive power of `s` in [`ga_expand`] has zero coefficient.
pub fn is_invariant(f: &LaurentElement) -> bool {
    ga_expand(f)[1..].iter().all(LaurentElement::is_zero)
}

/// A monomial in the blow-up coordinates: `y`-exponents stored as a
/// multiset of labels, `x`-exponents as a sparse map on index sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoxMonomial {
    y: Multiset,
    x: BTreeMap<IndexSet, u32>,
}

impl CoxMonomial {
    pub fn new(y: Multiset, x: BTreeMap<IndexSet, u32>) -> Self {
        let x = x.into_iter().filter(|(_, exp)| *exp != 0).collect();
        Self { y, x }
    }

    pub fn one() -> Self {
        Self {
            y: Multiset::empty(),
            x: BTreeMap::new(),
        }
    }

    pub fn y_exponents(&self) -> &Multiset {
        &self.y
    }

    pub fn x_exponents(&self) -> &BTreeMap<IndexSet, u32> {
        &self.x
    }

    pub fn x_exponent(&self, index_set: &IndexSet) -> u32 {
        self.x.get(index_set).copied().unwrap_or(0)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut x = self.x.clone();
        for (key, exp) in &other.x {
            *x.entry(key.clone()).or_insert(0) += exp;
        }
        Self {
            y: self.y.union(&other.y),
            x,
        }
    }
}

impl fmt::Display for CoxMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_empty() && self.x.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (label, mult) in self.y.grouped() {
            if !first {
                write!(f, "*")?;
            }
            render_power(f, &format!("y_{label}"), mult)?;
            first = false;
        }
        for (key, exp) in &self.x {
            if !first {
                write!(f, "*")?;
            }
            render_power(f, &format!("x_{{{key}}}"), *exp)?;
            first = false;
        }
        Ok(())
    }
}

/// Class of a blow-up monomial: each `y_i` contributes `H` minus every
/// admissible exceptional missing `i`, and each `x_I` contributes `E_I`.
pub fn monomial_class(monomial: &CoxMonomial, n: u32) -> Result<DivisorClass> {
    let degree = monomial.y.cardinality() as i64;
    if let Some(label) = monomial.y.max_label() {
        if label > n - 1 {
            return Err(Error::LabelOutOfRange { label, n });
        }
    }
    let mut e = BTreeMap::new();
    for index_set in admissible_index_sets(n) {
        let hit: i64 = index_set
            .labels()
            .iter()
            .map(|&label| monomial.y.mult_of(label) as i64)
            .sum();
        let coeff = monomial.x_exponent(&index_set) as i64 + hit - degree;
        if coeff != 0 {
            e.insert(index_set, coeff);
        }
    }
    for key in monomial.x.keys() {
        // Admissibility of x-keys is enforced by the class constructor, but
        // give a sharper error for labels beyond the ambient range.
        if key.max_label() > n - 1 {
            return Err(Error::LabelOutOfRange {
                label: key.max_label(),
                n,
            });
        }
    }
    DivisorClass::new(n, degree, e)
}

/// A polynomial in blow-up coordinates together with its common grading.
///
/// `from_invariant` records whether the element was produced from a
/// translation-invariant input; products keep the flag only if every factor
/// had it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxElement {
    n: u32,
    field: FieldSpec,
    terms: BTreeMap<CoxMonomial, Scalar>,
    pic_class: DivisorClass,
    from_invariant: bool,
}

impl CoxElement {
    /// The multiplicative unit: a single constant term with the zero class.
    pub fn one(n: u32, field: FieldSpec) -> Result<Self> {
        let mut terms = BTreeMap::new();
        terms.insert(CoxMonomial::one(), field.one());
        Ok(Self {
            n,
            field,
            terms,
            pic_class: DivisorClass::zero(n)?,
            from_invariant: true,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<CoxMonomial, Scalar> {
        &self.terms
    }

    pub fn pic_class(&self) -> &DivisorClass {
        &self.pic_class
    }

    pub fn from_invariant(&self) -> bool {
        self.from_invariant
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for CoxElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (monomial, coeff) in &self.terms {
            let rendered = coeff.to_string();
            let (sign, magnitude) = match rendered.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", rendered),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let is_unit_monomial =
                monomial.y.is_empty() && monomial.x.is_empty();
            if is_unit_monomial {
                write!(f, "{magnitude}")?;
            } else {
                if magnitude != "1" {
                    write!(f, "{magnitude}*")?;
                }
                write!(f, "{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Rewrites a homogeneous element in blow-up coordinates: multiply by the
/// least exceptional monomial that clears every denominator, sending each
/// `u^σ` to `y_σ · Π_I x_I^{m_I − σ(I)}` where `m_I` is the largest total
/// multiplicity any monomial of `f` puts on `I`.
///
/// The result is graded: its class is `deg·H − Σ_I (deg − m_I)·E_I`, and
/// every term is checked against that class.  Non-invariant inputs are
/// processed all the same but yield `from_invariant() == false`.
pub fn clear_denominators(f: &LaurentElement) -> Result<CoxElement> {
    if f.is_zero() {
        return Err(Error::InvalidElement(
            "the zero element has no distinguished grading".into(),
        ));
    }
    let n = f.n;
    let degree = f.degree as i64;
    let sets = admissible_index_sets(n);
    if n < 5 {
        return Err(Error::InvalidClass(format!(
            "the class lattice needs n >= 5, got n = {n}"
        )));
    }
    let mut clearing: BTreeMap<IndexSet, i64> = BTreeMap::new();
    for index_set in &sets {
        let m = f
            .terms
            .keys()
            .map(|monomial| {
                index_set
                    .labels()
                    .iter()
                    .map(|&label| monomial.mult_of(label) as i64)
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0);
        clearing.insert(index_set.clone(), m);
    }
    let mut terms = BTreeMap::new();
    for (monomial, coeff) in &f.terms {
        let mut x = BTreeMap::new();
        for (index_set, m) in &clearing {
            let hit: i64 = index_set
                .labels()
                .iter()
                .map(|&label| monomial.mult_of(label) as i64)
                .sum();
            let exponent = m - hit;
            if exponent > 0 {
                x.insert(index_set.clone(), exponent as u32);
            }
        }
        terms.insert(CoxMonomial::new(monomial.clone(), x), coeff.clone());
    }
    let mut e = BTreeMap::new();
    for (index_set, m) in &clearing {
        if *m < degree {
            e.insert(index_set.clone(), m - degree);
        }
    }
    let pic_class = DivisorClass::new(n, degree, e)?;
    for monomial in terms.keys() {
        let class = monomial_class(monomial, n)?;
        assert_eq!(
            class, pic_class,
            "term {monomial} is graded {class}, element is graded {pic_class}"
        );
    }
    Ok(CoxElement {
        n,
        field: f.field,
        terms,
        pic_class,
        from_invariant: is_invariant(f),
    })
}

/// Product in blow-up coordinates with like-term cancellation; classes add.
pub fn cox_multiply(g1: &CoxElement, g2: &CoxElement) -> Result<CoxElement> {
    if g1.n != g2.n {
        return Err(Error::MismatchedN {
            left: g1.n,
            right: g2.n,
        });
    }
    if g1.field != g2.field {
        return Err(Error::MismatchedFields {
            left: g1.field.characteristic(),
            right: g2.field.characteristic(),
        });
    }
    let mut terms: BTreeMap<CoxMonomial, Scalar> = BTreeMap::new();
    for (left_monomial, left_coeff) in &g1.terms {
        for (right_monomial, right_coeff) in &g2.terms {
            let product = left_monomial.multiply(right_monomial);
            let coeff = left_coeff.mul(right_coeff);
            if coeff.is_zero() {
                continue;
            }
            match terms.entry(product) {
                Entry::Occupied(mut slot) => {
                    let sum = slot.get().add(&coeff);
                    if sum.is_zero() {
                        slot.remove();
                    } else {
                        *slot.get_mut() = sum;
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(coeff);
                }
            }
        }
    }
    Ok(CoxElement {
        n: g1.n,
        field: g1.field,
        terms,
        pic_class: g1.pic_class.add(&g2.pic_class)?,
        from_invariant: g1.from_invariant && g2.from_invariant,
    })
}
