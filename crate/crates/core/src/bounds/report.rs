use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{ensure, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    TailBound,
    Threshold,
}

/// A computed bound together with everything it was computed from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub formula_id: String,
    pub value: f64,
    /// Tail bounds above 1 carry no information.
    pub vacuous: bool,
    pub inputs: Map<String, Value>,
}

impl BoundReport {
    pub fn tail(formula_id: &str, value: f64, inputs: Map<String, Value>) -> Result<Self> {
        Self::new(BoundKind::TailBound, formula_id, value, inputs)
    }

    pub fn threshold(formula_id: &str, value: f64, inputs: Map<String, Value>) -> Result<Self> {
        Self::new(BoundKind::Threshold, formula_id, value, inputs)
    }

    fn new(
        kind: BoundKind,
        formula_id: &str,
        value: f64,
        inputs: Map<String, Value>,
    ) -> Result<Self> {
        ensure!(
            value.is_finite() && value >= 0.0,
            "{formula_id}: bound value {value} is not finite and nonnegative"
        );
        Ok(BoundReport {
            kind,
            formula_id: formula_id.to_owned(),
            value,
            vacuous: kind == BoundKind::TailBound && value > 1.0,
            inputs,
        })
    }

    /// The threshold rounded up to a sample size.
    pub fn sample_size(&self) -> Option<u64> {
        (self.kind == BoundKind::Threshold).then(|| self.value.ceil() as u64)
    }
}

/// Builds an input echo from `(name, value)` pairs.
pub fn echo<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}
