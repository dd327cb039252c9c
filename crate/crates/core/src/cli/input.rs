use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::parse::{check_variables, parse_polynomial};
use crate::standard_basis::IdealPresentation;

/// The JSON document describing an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl IdealFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: IdealFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse { pos: e.column(), msg: format!("ideal file: {e}") })?;
        check_variables(&file.variables)?;
        if file.variables.is_empty() {
            return Err(Error::Precondition("no variables".into()));
        }
        if let Some(k) = file.k {
            if k > file.generators.len() {
                return Err(Error::Precondition(format!(
                    "k = {k} exceeds the {} generators",
                    file.generators.len()
                )));
            }
        }
        Ok(file)
    }

    pub fn presentation(&self) -> Result<IdealPresentation> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let f = parse_polynomial(g, &self.variables).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("generator {i}: {msg}") },
                    other => other,
                })?;
                if f.is_zero() {
                    return Err(Error::Precondition(format!("generator {i} is zero")));
                }
                Ok(f)
            })
            .collect::<Result<Vec<_>>>()?;
        IdealPresentation::new(self.variables.clone(), gens)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
