//! Exact linear algebra for balancing conditions.
//!
//! The balancing conditions of a complex form a linear system over the
//! chosen field; balanced weightings are its nullspace vectors, and
//! balanceability asks for a nullspace vector with no zero entry.

use crate::budget::Budget;
use crate::complex::{embedding_multiplicity, Complex, Multiset, Simplex, WeightedComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// The balancing conditions of a complex as an explicit matrix: one row
/// per face, one column per simplex (canonical order), entry the lifted
/// embedding multiplicity.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    field: FieldSpec,
    rows: Vec<Multiset>,
    columns: Vec<Simplex>,
    matrix: Vec<Vec<Scalar>>,
}

impl ConstraintSystem {
    pub fn for_complex(complex: &Complex, field: FieldSpec) -> Self {
        Self::from_faces(complex, field, complex.faces())
    }

    /// Only the conditions of one balancing degree (row cardinality).
    pub fn for_complex_degree(complex: &Complex, field: FieldSpec, degree: usize) -> Self {
        let faces =
            complex.faces().into_iter().filter(|f| f.cardinality() == degree).collect();
        Self::from_faces(complex, field, faces)
    }

    fn from_faces(complex: &Complex, field: FieldSpec, faces: Vec<Multiset>) -> Self {
        let columns: Vec<Simplex> = complex.simplices().to_vec();
        let matrix = faces
            .iter()
            .map(|face| {
                columns
                    .iter()
                    .map(|s| field.lift_integer(embedding_multiplicity(face, s) as i64))
                    .collect()
            })
            .collect();
        ConstraintSystem { field, rows: faces, columns, matrix }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> &[Multiset] {
        &self.rows
    }

    pub fn columns(&self) -> &[Simplex] {
        &self.columns
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    /// Nullspace via reduced row echelon form. Deterministic: pivots are
    /// chosen in column order, and each basis vector is normalized with a
    /// 1 in its free column, ascending.
    pub fn nullspace(&self) -> Nullspace {
        matrix_nullspace(&self.matrix, self.columns.len(), self.field)
    }
}

/// Nullspace of an arbitrary matrix over one field, with the same
/// deterministic reduced-row-echelon convention as
/// [`ConstraintSystem::nullspace`]. `columns` governs the ambient
/// dimension (the matrix may have no rows).
pub fn matrix_nullspace(matrix: &[Vec<Scalar>], columns: usize, field: FieldSpec) -> Nullspace {
    let cols = columns;
    let mut m = matrix.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot_row) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for j in c..cols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    m[i][j] = m[i][j].sub(&factor.mul(&m[r][j]));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = m[row][free].neg();
        }
        basis.push(v);
    }
    Nullspace { dimension: basis.len(), basis }
}

/// A nullspace with its canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nullspace {
    pub dimension: usize,
    pub basis: Vec<Vec<Scalar>>,
}

/// Outcome of a balanceability decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub balanceable: bool,
    /// A full-support balanced weighting, when one exists. Parallel to
    /// the canonical simplex order.
    pub witness: Option<Vec<Scalar>>,
    pub nullspace: Nullspace,
}

/// Nullspace of the full balancing system.
pub fn nullspace_of(complex: &Complex, field: FieldSpec) -> Nullspace {
    ConstraintSystem::for_complex(complex, field).nullspace()
}

/// Decides whether the complex admits a balanced weighting with every
/// weight nonzero, with the default [`Budget`].
pub fn decide_balanceable(complex: &Complex, field: FieldSpec) -> Result<BalanceVerdict> {
    decide_balanceable_with(complex, field, &Budget::default())
}

pub fn decide_balanceable_with(
    complex: &Complex,
    field: FieldSpec,
    budget: &Budget,
) -> Result<BalanceVerdict> {
    let nullspace = nullspace_of(complex, field);
    if nullspace.dimension == 0 {
        return Ok(BalanceVerdict { balanceable: false, witness: None, nullspace });
    }
    let witness = match field.characteristic() {
        0 => rational_witness(&nullspace, field),
        p => finite_field_witness(&nullspace, field, p, budget)?,
    };
    Ok(BalanceVerdict { balanceable: witness.is_some(), witness, nullspace })
}

/// Over the rationals a full-support nullspace vector exists iff no
/// coordinate vanishes on the whole basis; a witness is found by sweeping
/// combinations `sum_i t^i v_i` for `t = 1, 2, ...` (each bad coordinate
/// is a nonzero polynomial in `t` of degree below the dimension, so at
/// most `cols * (dim - 1)` values of `t` fail).
fn rational_witness(nullspace: &Nullspace, field: FieldSpec) -> Option<Vec<Scalar>> {
    let cols = nullspace.basis[0].len();
    let covered = (0..cols)
        .all(|j| nullspace.basis.iter().any(|v| !v[j].is_zero()));
    if !covered {
        return None;
    }
    let bound = cols as i64 * nullspace.dimension as i64 + 1;
    for t in 1..=bound {
        let t = field.lift_integer(t);
        let mut w = vec![field.zero(); cols];
        let mut t_pow = field.one();
        for v in &nullspace.basis {
            for (acc, entry) in w.iter_mut().zip(v) {
                *acc = acc.add(&t_pow.mul(entry));
            }
            t_pow = t_pow.mul(&t);
        }
        if w.iter().all(|x| !x.is_zero()) {
            return Some(w);
        }
    }
    unreachable!("the sweep bound covers all bad values of t");
}

/// Over a finite field the nullspace is searched exhaustively, one
/// representative per projective class (first nonzero coefficient 1),
/// in lexicographic order. Errors when `p^dim` exceeds the budget.
fn finite_field_witness(
    nullspace: &Nullspace,
    field: FieldSpec,
    p: u64,
    budget: &Budget,
) -> Result<Option<Vec<Scalar>>> {
    let dim = nullspace.dimension;
    if !budget.allows_search(p, dim) {
        return Err(Error::SearchBudgetExceeded {
            characteristic: p,
            dimension: dim,
            cap: budget.max_search_candidates,
        });
    }
    let cols = nullspace.basis[0].len();
    let mut coeffs = vec![0u64; dim];
    loop {
        // Advance the base-p odometer; the all-zero vector is skipped.
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(None);
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if coeffs.iter().rev().find(|&&c| c != 0) != Some(&1) {
            // Not the normalized representative of its line.
            continue;
        }
        let mut w = vec![field.zero(); cols];
        for (c, v) in coeffs.iter().zip(&nullspace.basis) {
            if *c == 0 {
                continue;
            }
            let c = field.lift_integer(*c as i64);
            for (acc, entry) in w.iter_mut().zip(v) {
                *acc = acc.add(&c.mul(entry));
            }
        }
        if w.iter().all(|x| !x.is_zero()) {
            return Ok(Some(w));
        }
    }
}

/// A complex is minimal when it is balanceable but no proper subcomplex
/// is; over a field this is equivalent to the nullspace being a line
/// spanned by a full-support vector.
pub fn is_minimal(complex: &Complex, field: FieldSpec) -> bool {
    let nullspace = nullspace_of(complex, field);
    nullspace.dimension == 1 && nullspace.basis[0].iter().all(|x| !x.is_zero())
}

/// Checks minimality from the definition: the complex balances and no
/// nonempty proper subset of its simplices does. Exponential; guarded by
/// `budget.max_oracle_simplices`.
pub fn brute_force_minimal_oracle(
    complex: &Complex,
    field: FieldSpec,
    budget: &Budget,
) -> Result<bool> {
    let k = complex.len();
    if k > budget.max_oracle_simplices {
        return Err(Error::OracleSizeExceeded {
            simplices: k,
            cap: budget.max_oracle_simplices,
        });
    }
    if !decide_balanceable_with(complex, field, budget)?.balanceable {
        return Ok(false);
    }
    for mask in 1u64..((1u64 << k) - 1) {
        let indices: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let sub = complex.subcomplex(&indices)?;
        if decide_balanceable_with(&sub, field, budget)?.balanceable {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: the witness of a balanceable complex as a weighted
/// complex.
pub fn witness_weighting(complex: &Complex, field: FieldSpec) -> Result<Option<WeightedComplex>> {
    let verdict = decide_balanceable(complex, field)?;
    match verdict.witness {
        Some(w) => Ok(Some(WeightedComplex::new(complex.clone(), w)?)),
        None => Ok(None),
    }
}
