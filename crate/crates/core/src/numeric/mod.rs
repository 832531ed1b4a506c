//! Fixed-`N` oracle. Exact mode realizes invariants as sparse rational
//! tensors for traces, ranks and nullity; float mode (complex matrices) is
//! confined to unitary sampling and correlators.

mod rank;
mod tensor;
mod unitary;

pub use rank::exact_rank;
pub use tensor::{evaluate, ExactTensor, DENSE_CAP};
pub use unitary::{
    apply_legs, correlator_matrix, epsilon_correlator, fierz_residual, generators, invariance_residual,
    leg_matrices, sample_special_unitary, unitarity_residual, ComplexMatrix,
};

pub(crate) use tensor::multi_indices;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coefficients::{format_rational, parse_rational};

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    shape: Vec<usize>,
    entries: Vec<(Vec<usize>, String)>,
}

impl Serialize for ExactTensor {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        TensorRepr {
            shape: self.shape().to_vec(),
            entries: self.entries().map(|(k, v)| (k.clone(), format_rational(v))).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ExactTensor {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = TensorRepr::deserialize(de)?;
        let entries = r
            .entries
            .into_iter()
            .map(|(k, v)| {
                parse_rational(&v)
                    .map(|q| (k, q))
                    .ok_or_else(|| D::Error::custom(format!("bad rational {v:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ExactTensor::from_entries(r.shape, entries).map_err(D::Error::custom)
    }
}

/// Complex matrix as row-major `[[re, im], ...]` rows.
pub fn complex_matrix_json(m: &ComplexMatrix) -> serde_json::Value {
    let rows: Vec<Vec<[f64; 2]>> = (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect();
    serde_json::json!(rows)
}
