//! Polynomial files tagged by variable namespace.
//!
//! ```json
//! {"namespace": "y", "n": 2, "m": 2, "terms": [{"vars": [[1, 1], [2, 2]], "coeff": "1/1"}]}
//! {"namespace": "z", "m": 3, "terms": [{"partition": [1, 1], "coeff": "1/2"}]}
//! {"namespace": "x", "n": 2, "terms": [{"vars": [1, 4], "coeff": "-3/1"}]}
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::andor::XPolynomial;
use crate::error::Result;
use crate::polycore::YPolynomial;
use crate::sympoly::SymPolynomial;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "namespace")]
pub enum PolyFile {
    #[serde(rename = "x")]
    X(XPolynomial),
    #[serde(rename = "y")]
    Y(YPolynomial),
    #[serde(rename = "z")]
    Z(SymPolynomial),
}

impl PolyFile {
    pub fn namespace(&self) -> &'static str {
        match self {
            PolyFile::X(_) => "x",
            PolyFile::Y(_) => "y",
            PolyFile::Z(_) => "z",
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Pretty JSON with a trailing newline; stable for a given polynomial.
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}
