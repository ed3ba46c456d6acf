//! Observations and samples.
//!
//! An observation is a finite real vector; most kernels only look at the
//! first coordinate, but paired designs (for example comparing two diagnostic
//! markers on the same subjects) carry several coordinates per observation.

use crate::error::{Error, Result};

/// A single observation: a non-empty vector of finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    coords: Vec<f64>,
}

impl Observation {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty("observation"));
        }
        if let Some(&bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite {
                context: "observation",
                value: bad,
            });
        }
        Ok(Self { coords })
    }

    /// One-dimensional observation.
    pub fn scalar(value: f64) -> Result<Self> {
        Self::new(vec![value])
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// A labeled, non-empty collection of observations of uniform dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    label: String,
    observations: Vec<Observation>,
}

impl Sample {
    pub fn new(label: impl Into<String>, observations: Vec<Observation>) -> Result<Self> {
        if observations.is_empty() {
            return Err(Error::Empty("sample"));
        }
        let dim = observations[0].dim();
        if let Some(obs) = observations.iter().find(|o| o.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: obs.dim(),
            });
        }
        Ok(Self {
            label: label.into(),
            observations,
        })
    }

    /// Build a one-dimensional sample from raw values.
    pub fn from_values(label: impl Into<String>, values: &[f64]) -> Result<Self> {
        let observations = values
            .iter()
            .map(|&v| Observation::scalar(v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(label, observations)
    }

    /// Build a sample from row vectors (one row per observation).
    pub fn from_rows(label: impl Into<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let observations = rows
            .into_iter()
            .map(Observation::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(label, observations)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.observations.len()
    }

    /// Always false: emptiness is rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.observations.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.observations[0].dim()
    }

    pub fn observations(&self) -> &[Observation] {
        &self.observations
    }

    pub fn get(&self, index: usize) -> &Observation {
        &self.observations[index]
    }
}
