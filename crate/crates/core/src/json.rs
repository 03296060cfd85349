//! JSON interchange.
//!
//! Every domain object crossing the CLI boundary has a serde data type
//! here with validated conversions in both directions. Integers travel
//! as JSON numbers; field scalars travel as exact strings (`"a/b"` over
//! the rationals, a decimal residue modulo `p`) so no interface ever
//! holds a float. Index sets are comma-joined label strings (`"1,3,5"`)
//! used as object keys.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, WeightedComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graphs::GraphShape;
use crate::hypertree::Hypertree;
use crate::picard::{CurveClass, DivisorClass, IndexSet};

/// A bare complex: marked-point count and simplex entry lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: u32,
    pub simplices: Vec<Vec<u32>>,
}

impl ComplexJson {
    pub fn of(complex: &Complex) -> Self {
        ComplexJson {
            n: complex.n(),
            simplices: complex
                .simplices()
                .iter()
                .map(|s| s.entries().to_vec())
                .collect(),
        }
    }

    pub fn into_complex(self) -> Result<Complex> {
        Complex::from_entries(self.n, self.simplices)
    }
}

/// A weighted complex with its field and exact scalar strings, parallel
/// to the canonical simplex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedComplexJson {
    pub n: u32,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub simplices: Vec<Vec<u32>>,
    pub weights: Vec<String>,
}

impl WeightedComplexJson {
    pub fn of(weighted: &WeightedComplex) -> Self {
        WeightedComplexJson {
            n: weighted.complex().n(),
            characteristic: weighted.field().characteristic(),
            simplices: weighted
                .complex()
                .simplices()
                .iter()
                .map(|s| s.entries().to_vec())
                .collect(),
            weights: weighted.weights().iter().map(|w| w.to_string()).collect(),
        }
    }

    pub fn into_weighted(self) -> Result<WeightedComplex> {
        let field = FieldSpec::new(self.characteristic)?;
        let complex = Complex::from_entries(self.n, self.simplices)?;
        let weights: Result<Vec<Scalar>> = self
            .weights
            .iter()
            .map(|w| field.parse_scalar(w))
            .collect();
        WeightedComplex::new(complex, weights?)
    }
}

fn index_map_of(entries: &BTreeMap<IndexSet, i64>) -> BTreeMap<String, i64> {
    entries.iter().map(|(i, &v)| (i.to_string(), v)).collect()
}

fn index_map_into(entries: BTreeMap<String, i64>) -> Result<BTreeMap<IndexSet, i64>> {
    let mut out = BTreeMap::new();
    for (key, value) in entries {
        let index_set = IndexSet::parse(&key)?;
        if out.insert(index_set, value).is_some() {
            return Err(Error::InvalidJson(format!(
                "index set {key} appears twice after normalization"
            )));
        }
    }
    Ok(out)
}

/// A divisor class in the basis `H`, `E_I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClassJson {
    pub n: u32,
    #[serde(rename = "H")]
    pub h: i64,
    #[serde(rename = "E")]
    pub e: BTreeMap<String, i64>,
}

impl DivisorClassJson {
    pub fn of(class: &DivisorClass) -> Self {
        DivisorClassJson {
            n: class.n(),
            h: class.h(),
            e: index_map_of(class.exceptional_coefficients()),
        }
    }

    pub fn into_class(self) -> Result<DivisorClass> {
        DivisorClass::new(self.n, self.h, index_map_into(self.e)?)
    }
}

/// A curve class recorded through its intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClassJson {
    pub n: u32,
    #[serde(rename = "dotH")]
    pub dot_h: i64,
    #[serde(rename = "dotE")]
    pub dot_e: BTreeMap<String, i64>,
}

impl CurveClassJson {
    pub fn of(curve: &CurveClass) -> Self {
        CurveClassJson {
            n: curve.n(),
            dot_h: curve.dot_h(),
            dot_e: index_map_of(curve.dot_e_entries()),
        }
    }

    pub fn into_curve(self) -> Result<CurveClass> {
        CurveClass::new(self.n, self.dot_h, index_map_into(self.dot_e)?)
    }
}

/// A hypertree candidate: parts are kept raw so axiom checking can run
/// on inputs that fail the axioms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypertreeJson {
    pub n: u32,
    pub parts: Vec<Vec<u32>>,
}

impl HypertreeJson {
    pub fn of(tree: &Hypertree) -> Self {
        HypertreeJson { n: tree.n(), parts: tree.parts().to_vec() }
    }

    pub fn into_hypertree(self) -> Result<Hypertree> {
        Hypertree::new(self.n, self.parts)
    }
}

/// A graph shape tag with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum ShapeJson {
    EvenCycle {
        length: u32,
    },
    TwoOddCyclesSharedVertex {
        lengths: [u32; 2],
    },
    TwoOddCyclesDisjoint {
        lengths: [u32; 2],
    },
    TwoOddCyclesPath {
        lengths: [u32; 2],
        #[serde(rename = "pathLength")]
        path_length: u32,
    },
    NotMinimalPattern,
}

impl From<GraphShape> for ShapeJson {
    fn from(shape: GraphShape) -> Self {
        match shape {
            GraphShape::EvenCycle { length } => ShapeJson::EvenCycle { length },
            GraphShape::TwoOddCyclesSharedVertex { lengths: (a, b) } => {
                ShapeJson::TwoOddCyclesSharedVertex { lengths: [a, b] }
            }
            GraphShape::TwoOddCyclesDisjoint { lengths: (a, b) } => {
                ShapeJson::TwoOddCyclesDisjoint { lengths: [a, b] }
            }
            GraphShape::TwoOddCyclesPath { lengths: (a, b), path_length } => {
                ShapeJson::TwoOddCyclesPath { lengths: [a, b], path_length }
            }
            GraphShape::NotMinimalPattern => ShapeJson::NotMinimalPattern,
        }
    }
}

impl From<ShapeJson> for GraphShape {
    fn from(shape: ShapeJson) -> Self {
        match shape {
            ShapeJson::EvenCycle { length } => GraphShape::EvenCycle { length },
            ShapeJson::TwoOddCyclesSharedVertex { lengths: [a, b] } => {
                GraphShape::TwoOddCyclesSharedVertex { lengths: (a, b) }
            }
            ShapeJson::TwoOddCyclesDisjoint { lengths: [a, b] } => {
                GraphShape::TwoOddCyclesDisjoint { lengths: (a, b) }
            }
            ShapeJson::TwoOddCyclesPath { lengths: [a, b], path_length } => {
                GraphShape::TwoOddCyclesPath { lengths: (a, b), path_length }
            }
            ShapeJson::NotMinimalPattern => GraphShape::NotMinimalPattern,
        }
    }
}

/// Parses a JSON string into any of the typed values above.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidJson(e.to_string()))
}

/// Prints any serializable value as compact JSON.
pub fn print<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization of plain data cannot fail")
}
