//! Matrix-group input files.
//!
//! ```json
//! {"p": 2, "k": 3, "poly": [1, 1, 0, 1], "dim": 2,
//!  "generators": [[[[0,1,0], 0], [0, [1,0,1]]]]}
//! ```
//!
//! Entries are integers when `k = 1` and coefficient arrays (constant term
//! first, length `k`) otherwise. `poly` is the monic modulus, constant term
//! first, length `k + 1`; it defaults to the field's standard modulus.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::modact::group::closure_cap_from_env;
use crate::modact::{Field, Matrix, MatrixGroup, ModError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Scalar(u32),
    Coeffs(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub p: u32,
    #[serde(default = "one")]
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<u32>>,
    pub dim: usize,
    /// each generator as a list of rows
    pub generators: Vec<Vec<Vec<Entry>>>,
}

fn one() -> u32 {
    1
}

impl GroupFile {
    pub fn from_group(g: &MatrixGroup) -> Self {
        let f = g.field();
        let k = f.degree();
        let entry = |a: u32| {
            if k == 1 {
                Entry::Scalar(a)
            } else {
                Entry::Coeffs(f.coeffs(a))
            }
        };
        GroupFile {
            p: f.characteristic(),
            k,
            poly: (k > 1).then(|| f.modulus().to_vec()),
            dim: g.dim(),
            generators: g
                .generators()
                .iter()
                .map(|m| {
                    m.rows()
                        .into_iter()
                        .map(|row| row.into_iter().map(entry).collect())
                        .collect()
                })
                .collect(),
        }
    }

    /// Builds the group with the closure cap taken from the environment.
    pub fn to_group(&self) -> Result<MatrixGroup, CliError> {
        let field = Arc::new(Field::new(self.p, self.k, self.poly.clone())?);
        let mut gens = Vec::with_capacity(self.generators.len());
        for (index, rows) in self.generators.iter().enumerate() {
            let mismatch = |found| ModError::DimensionMismatch {
                generator: index,
                expected: self.dim,
                found,
            };
            if rows.len() != self.dim {
                return Err(mismatch(rows.len()).into());
            }
            let mut converted = Vec::with_capacity(rows.len());
            for row in rows {
                if row.len() != self.dim {
                    return Err(mismatch(row.len()).into());
                }
                let row: Result<Vec<u32>, ModError> = row
                    .iter()
                    .map(|e| match e {
                        Entry::Scalar(a) if self.k == 1 => Ok(*a),
                        Entry::Scalar(a) => Err(ModError::BadElement(vec![*a])),
                        Entry::Coeffs(c) => field.from_coeffs(c),
                    })
                    .collect();
                converted.push(row?);
            }
            gens.push(Matrix::from_rows(converted).ok_or(mismatch(0))?);
        }
        Ok(MatrixGroup::new(field, self.dim, gens)?.with_cap(closure_cap_from_env()?))
    }
}

pub fn load_group_file(path: impl AsRef<Path>) -> Result<MatrixGroup, CliError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: GroupFile = serde_json::from_str(&text).map_err(|e| CliError::Json {
        path: path.to_path_buf(),
        line: e.line(),
        message: e.to_string(),
    })?;
    file.to_group()
}
